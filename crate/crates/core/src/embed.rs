//! LCD embeddings: appending columns to a generator so the longer code is LCD
//! and puncturing the new columns gives back the original code.

use crate::code::{HullDecomposition, LinearCode};
use crate::distance::{DistanceReport, MethodChoice};
use crate::error::{Error, Result};
use crate::matgf::{block_matrix, GfMatrix};

/// Largest number of appended blocks [`certify_minimality`] sweeps per width.
pub const CERTIFY_GUARD: u128 = 1 << 20;

/// The data of a shortest embedding `[hull_rows | D ; complement_rows | C]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingSpec {
    pub base: LinearCode,
    pub decomposition: HullDecomposition,
    /// `ell x ell`, invertible.
    pub d_block: GfMatrix,
    /// `(k - ell) x ell`.
    pub c_block: GfMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingResult {
    pub spec: EmbeddingSpec,
    pub code: LinearCode,
    /// Filled by [`EmbeddingResult::measure`] and by search.
    pub distance: Option<DistanceReport>,
    /// 1-based index of the search trial that produced this result; 0 outside search.
    pub trials_used: u64,
}

/// Outcome of [`certify_minimality`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityCertificate {
    pub ell: usize,
    /// `(m, number of k x m blocks tried)` for every `m < ell`.
    pub checked: Vec<(usize, u128)>,
    /// An appended block that made the code LCD, if one was found.
    pub counterexample: Option<GfMatrix>,
}

impl MinimalityCertificate {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl EmbeddingSpec {
    /// The generator `[hull_rows | D ; complement_rows | C]`.
    pub fn assemble(&self) -> GfMatrix {
        let d = &self.decomposition;
        block_matrix(&d.hull_rows, &self.d_block, &d.complement_rows, &self.c_block).expect("shapes checked")
    }

    /// The same code written over the hull basis `D^-1 * hull_rows`, so that
    /// its `D` block is the identity.
    pub fn normalized(&self) -> Result<EmbeddingSpec> {
        let d_inv = self.d_block.inverse().map_err(|_| Error::SingularD)?;
        let hull_rows = d_inv.matmul(&self.decomposition.hull_rows)?;
        let assembled = hull_rows.vstack(&self.decomposition.complement_rows)?;
        let base = LinearCode::new(assembled.clone(), self.base.inner_product())?;
        let ell = self.decomposition.ell;
        Ok(EmbeddingSpec {
            base,
            decomposition: HullDecomposition {
                ell,
                hull_rows,
                complement_rows: self.decomposition.complement_rows.clone(),
                assembled,
            },
            d_block: GfMatrix::identity(self.d_block.field(), ell),
            c_block: self.c_block.clone(),
        })
    }
}

impl EmbeddingResult {
    pub fn ell(&self) -> usize {
        self.spec.decomposition.ell
    }

    /// Computes the minimum distance if it is not known yet.
    pub fn measure(&mut self) -> Result<&DistanceReport> {
        if self.distance.is_none() {
            self.distance = Some(self.code.min_distance(MethodChoice::Auto, None)?);
        }
        Ok(self.distance.as_ref().expect("just filled"))
    }
}

/// `[G | G | I_k]` in characteristic 2, `[G | G | G | I_k]` in characteristic
/// 3; in general `G` repeated `p` times followed by `I_k`.
pub fn trivial_embedding(c: &LinearCode) -> LinearCode {
    let g = c.generator();
    let p = c.field().characteristic();
    let mut out = g.clone();
    for _ in 1..p {
        out = out.hstack(g).expect("same rows");
    }
    let out = out.hstack(&GfMatrix::identity(c.field(), c.k())).expect("same rows");
    LinearCode::new(out, c.inner_product()).expect("contains I_k")
}

/// Appends `D = I_ell` below the hull rows and `C = 0` below the rest.
pub fn canonical_shortest_embedding(c: &LinearCode) -> EmbeddingResult {
    let ell = c.hull_dimension();
    let f = c.field();
    shortest_embedding(c, &GfMatrix::identity(f, ell), &GfMatrix::zeros(f, c.k() - ell, ell))
        .expect("the identity block always yields an LCD code")
}

/// Assembles `[hull_rows | D ; complement_rows | C]` over the stored hull
/// decomposition of `c` and checks that the result is LCD.
pub fn shortest_embedding(c: &LinearCode, d_block: &GfMatrix, c_block: &GfMatrix) -> Result<EmbeddingResult> {
    let decomposition = c.hull_decomposition();
    embed_with(c, decomposition, d_block, c_block)
}

pub(crate) fn embed_with(
    c: &LinearCode,
    decomposition: HullDecomposition,
    d_block: &GfMatrix,
    c_block: &GfMatrix,
) -> Result<EmbeddingResult> {
    let (k, ell) = (c.k(), decomposition.ell);
    if d_block.field() != c.field() || c_block.field() != c.field() {
        return Err(Error::FieldMismatch);
    }
    if d_block.shape() != (ell, ell) {
        return Err(Error::BlockShape(format!("D must be {ell}x{ell}, got {}x{}", d_block.rows(), d_block.cols())));
    }
    if c_block.shape() != (k - ell, ell) {
        return Err(Error::BlockShape(format!(
            "C must be {}x{ell}, got {}x{}",
            k - ell,
            c_block.rows(),
            c_block.cols()
        )));
    }
    if d_block.determinant()? == 0 {
        return Err(Error::SingularD);
    }
    let spec = EmbeddingSpec { base: c.clone(), decomposition, d_block: d_block.clone(), c_block: c_block.clone() };
    let code = LinearCode::new(spec.assemble(), c.inner_product())?;
    if !code.is_lcd() {
        return Err(Error::NotLcd);
    }
    Ok(EmbeddingResult { spec, code, distance: None, trials_used: 0 })
}

/// Checks, for every `m < ell`, that no `k x m` block appended to the
/// generator gives an LCD code.
pub fn certify_minimality(c: &LinearCode) -> Result<MinimalityCertificate> {
    let (k, ell) = (c.k(), c.hull_dimension());
    let q = c.field().order();
    for m in 0..ell {
        let count = (q as u128).checked_pow((k * m) as u32);
        if count.is_none_or(|x| x > CERTIFY_GUARD) {
            return Err(Error::CertificationGuard { q, exponent: k * m });
        }
    }
    let f = c.field();
    let gram = c.gram();
    let mut checked = Vec::with_capacity(ell);
    for m in 0..ell {
        let count = (q as u128).pow((k * m) as u32);
        for index in 0..count {
            let block = matrix_from_index(f, k, m, index);
            // the Gram matrix of [G | B] is G G* + B B*
            let extra = block.matmul(&c.star(&block))?;
            if gram.add(&extra)?.rank() == k {
                checked.push((m, index + 1));
                return Ok(MinimalityCertificate { ell, checked, counterexample: Some(block) });
            }
        }
        checked.push((m, count));
    }
    Ok(MinimalityCertificate { ell, checked, counterexample: None })
}

/// The `index`-th `rows x cols` matrix in row-major lexicographic order.
pub(crate) fn matrix_from_index(f: crate::gf::Field, rows: usize, cols: usize, mut index: u128) -> GfMatrix {
    let q = f.order() as u128;
    let mut m = GfMatrix::zeros(f, rows, cols);
    for pos in (0..rows * cols).rev() {
        let v = (index % q) as u8;
        index /= q;
        if v != 0 {
            m.set(pos / cols, pos % cols, v);
        }
    }
    m
}

/// Recovers `(D, C)` such that `embedded` is row-equivalent to the shortest
/// embedding of `base` built from them.
pub fn extract_blocks(embedded: &LinearCode, base: &LinearCode) -> Result<EmbeddingSpec> {
    let (n, k, ell) = (base.n(), base.k(), base.hull_dimension());
    if embedded.field() != base.field() {
        return Err(Error::FieldMismatch);
    }
    if embedded.n() != n + ell || embedded.k() != k {
        return Err(Error::NotAnEmbedding);
    }
    let g = embedded.generator();
    let left = g.column_range(0..n);
    let decomposition = base.hull_decomposition();
    if left.rank() != k || !left.same_row_space(&decomposition.assembled) {
        return Err(Error::NotAnEmbedding);
    }
    // both sides reduce to the same RREF R: X_b * B = R = X_l * L
    let rb = decomposition.assembled.rref();
    let rl = left.rref();
    let t = rb.transform.inverse()?.matmul(&rl.transform)?;
    let tail = t.matmul(&g.column_range(n..n + ell))?;
    let d_block = tail.row_range(0..ell);
    let c_block = tail.row_range(ell..k);
    if d_block.determinant()? == 0 {
        return Err(Error::ExtractedSingularD);
    }
    Ok(EmbeddingSpec { base: base.clone(), decomposition, d_block, c_block })
}
