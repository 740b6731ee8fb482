//! Linear codes given by a full-rank generator matrix.

use std::fmt;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::distance::{
    ColumnSearch, DistanceMethod, DistanceReport, DistanceValue, MethodChoice, WeightEnumerator, Walker,
    AUTO_ENUMERATION_LIMIT, ENUMERATION_GUARD,
};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matgf::GfMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InnerProduct {
    /// `sum u_i v_i`
    Euclidean,
    /// `sum u_i conj(v_i)`; GF(4) only.
    Hermitian,
}

impl InnerProduct {
    /// Hermitian over GF(4), Euclidean elsewhere.
    pub fn default_for(field: Field) -> InnerProduct {
        if field.is_gf4() {
            InnerProduct::Hermitian
        } else {
            InnerProduct::Euclidean
        }
    }

    pub fn tag(self) -> char {
        match self {
            InnerProduct::Euclidean => 'E',
            InnerProduct::Hermitian => 'H',
        }
    }

    /// `M*` with respect to this inner product.
    pub fn star(self, m: &GfMatrix) -> GfMatrix {
        match self {
            InnerProduct::Euclidean => m.transpose(),
            InnerProduct::Hermitian => m.conj_transpose(),
        }
    }
}

impl fmt::Display for InnerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InnerProduct::Euclidean => "euclidean",
            InnerProduct::Hermitian => "hermitian",
        })
    }
}

/// An `[n, k]` linear code. The generator always has full row rank.
#[derive(Clone)]
pub struct LinearCode {
    gen: GfMatrix,
    ip: InnerProduct,
    hull_dim: OnceLock<usize>,
}

/// A generator matrix reordered as `[hull_rows; complement_rows]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullDecomposition {
    pub ell: usize,
    pub hull_rows: GfMatrix,
    pub complement_rows: GfMatrix,
    pub assembled: GfMatrix,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.gen == other.gen && self.ip == other.ip
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] {} code ({}) {:?}", self.n(), self.k(), self.field(), self.ip, self.gen)
    }
}

impl LinearCode {
    /// Wraps `gen`, rejecting rank-deficient generators.
    pub fn new(gen: GfMatrix, ip: InnerProduct) -> Result<LinearCode> {
        if ip == InnerProduct::Hermitian && !gen.field().is_gf4() {
            return Err(Error::HermitianNeedsGf4(gen.field()));
        }
        let rank = gen.rank();
        if rank < gen.rows() {
            return Err(Error::RankDeficient { rank, rows: gen.rows() });
        }
        Ok(LinearCode { gen, ip, hull_dim: OnceLock::new() })
    }

    /// Uses [`InnerProduct::default_for`] the generator's field.
    pub fn with_default_ip(gen: GfMatrix) -> Result<LinearCode> {
        let ip = InnerProduct::default_for(gen.field());
        LinearCode::new(gen, ip)
    }

    pub fn field(&self) -> Field {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &GfMatrix {
        &self.gen
    }

    pub fn inner_product(&self) -> InnerProduct {
        self.ip
    }

    /// Number of codewords, `q^k`.
    pub fn size(&self) -> u128 {
        (self.field().order() as u128).saturating_pow(self.k() as u32)
    }

    pub fn star(&self, m: &GfMatrix) -> GfMatrix {
        self.ip.star(m)
    }

    pub fn inner(&self, u: &[u8], v: &[u8]) -> u8 {
        let f = self.field();
        u.iter().zip(v).fold(0, |acc, (&a, &b)| {
            let b = match self.ip {
                InnerProduct::Euclidean => b,
                InnerProduct::Hermitian => f.conj(b),
            };
            f.add(acc, f.mul(a, b))
        })
    }

    /// `G G*`.
    pub fn gram(&self) -> GfMatrix {
        self.gen.matmul(&self.star(&self.gen)).expect("conformal by construction")
    }

    /// `k - rank(G G*)`.
    pub fn hull_dimension(&self) -> usize {
        *self.hull_dim.get_or_init(|| self.k() - self.gram().rank())
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dimension() == 0
    }

    /// Splits the generator into a hull basis and a complement.
    ///
    /// If the leading `ell` rows of the stored generator already span the
    /// hull, the generator is kept as is. Otherwise the hull basis is the RREF
    /// of `left_kernel(G G*) * G` and the complement consists of original rows.
    pub fn hull_decomposition(&self) -> HullDecomposition {
        let ell = self.hull_dimension();
        let k = self.k();
        let top = self.gen.row_range(0..ell);
        let top_is_hull = top.matmul(&self.star(&self.gen)).expect("conformal").is_zero();
        if top_is_hull {
            return HullDecomposition {
                ell,
                hull_rows: top,
                complement_rows: self.gen.row_range(ell..k),
                assembled: self.gen.clone(),
            };
        }
        let kernel = self.gram().left_kernel();
        debug_assert_eq!(kernel.rows(), ell);
        let hull_rows = kernel.matmul(&self.gen).expect("conformal").row_basis();
        let pivots = kernel.rref().pivot_cols;
        let rest: Vec<usize> = (0..k).filter(|i| !pivots.contains(i)).collect();
        let complement_rows = self.gen.select_rows(&rest);
        let assembled = hull_rows.vstack(&complement_rows).expect("same width");
        HullDecomposition { ell, hull_rows, complement_rows, assembled }
    }

    /// The dual code under this code's inner product.
    pub fn dual(&self) -> LinearCode {
        let gen = self.star(&self.gen).left_kernel();
        LinearCode { gen, ip: self.ip, hull_dim: OnceLock::new() }
    }

    /// A parity-check matrix `H` with `c H^T = 0` exactly for codewords `c`.
    pub fn parity_check(&self) -> GfMatrix {
        self.gen.transpose().left_kernel()
    }

    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        let m = GfMatrix::from_rows(self.field(), message.len(), &[message])?;
        Ok(m.matmul(&self.gen)?.row(0))
    }

    pub fn contains(&self, word: &[u8]) -> Result<bool> {
        let w = GfMatrix::from_rows(self.field(), word.len(), &[word])?;
        if word.len() != self.n() {
            return Ok(false);
        }
        Ok(w.matmul(&self.parity_check().transpose())?.is_zero())
    }

    /// Whether the two codes have the same set of codewords.
    pub fn same_codewords(&self, other: &LinearCode) -> bool {
        self.gen.same_row_space(&other.gen)
    }

    /// Deletes the coordinates in `coords`. When the result loses rank the
    /// generator is row-reduced to the smaller dimension.
    pub fn puncture(&self, coords: &[usize]) -> Result<LinearCode> {
        let gen = self.gen.delete_columns(coords)?;
        let gen = if gen.rank() == gen.rows() { gen } else { gen.row_basis() };
        Ok(LinearCode { gen, ip: self.ip, hull_dim: OnceLock::new() })
    }

    pub fn min_distance(&self, method: MethodChoice, w_max: Option<usize>) -> Result<DistanceReport> {
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        let size = self.size();
        let engine = match method {
            MethodChoice::Enumerate if size > ENUMERATION_GUARD => {
                return Err(Error::EnumerationGuard { q: self.field().order(), k: self.k() })
            }
            MethodChoice::Enumerate => DistanceMethod::Enumeration,
            MethodChoice::LowWeight => DistanceMethod::LowWeight,
            MethodChoice::Auto if size <= AUTO_ENUMERATION_LIMIT => DistanceMethod::Enumeration,
            MethodChoice::Auto => DistanceMethod::LowWeight,
        };
        Ok(match engine {
            DistanceMethod::Enumeration => {
                let (d, word) = Walker::new(self).min_weight(0).expect("no floor");
                DistanceReport { method: engine, value: DistanceValue::Exact(d), witness: Some(word) }
            }
            DistanceMethod::LowWeight => {
                let limit = w_max.unwrap_or(self.n() - self.k() + 1);
                match ColumnSearch::new(self).search(limit) {
                    Some((d, word)) => {
                        DistanceReport { method: engine, value: DistanceValue::Exact(d), witness: Some(word) }
                    }
                    None => DistanceReport { method: engine, value: DistanceValue::ExceedsBound(limit), witness: None },
                }
            }
        })
    }

    /// Exact minimum distance, provided it is at least `floor`; `None` as soon
    /// as a lighter codeword turns up.
    pub fn distance_at_least(&self, floor: usize) -> Result<Option<DistanceReport>> {
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        if self.size() <= AUTO_ENUMERATION_LIMIT {
            return Ok(Walker::new(self).min_weight(floor).map(|(d, word)| DistanceReport {
                method: DistanceMethod::Enumeration,
                value: DistanceValue::Exact(d),
                witness: Some(word),
            }));
        }
        let search = ColumnSearch::new(self);
        let singleton = self.n() - self.k() + 1;
        if floor > 1 && search.search(floor - 1).is_some() {
            return Ok(None);
        }
        let found = (floor.max(1)..=singleton).find_map(|w| search.first_dependent(w).map(|word| (w, word)));
        let (d, word) = found.expect("the Singleton bound is attained by some dependent set");
        Ok(Some(DistanceReport {
            method: DistanceMethod::LowWeight,
            value: DistanceValue::Exact(d),
            witness: Some(word),
        }))
    }

    pub fn weight_enumerator(&self) -> Result<WeightEnumerator> {
        if self.size() > ENUMERATION_GUARD {
            return Err(Error::EnumerationGuard { q: self.field().order(), k: self.k() });
        }
        Ok(WeightEnumerator { counts: Walker::new(self).weight_counts() })
    }

    /// Hex digest of `(n, k, q, inner product, weight enumerator)`. Equal for
    /// monomially equivalent codes; different digests prove inequivalence.
    pub fn fingerprint(&self) -> Result<String> {
        let we = self.weight_enumerator()?;
        let mut h = Sha256::new();
        h.update(format!("{}:{}:{}:{}", self.n(), self.k(), self.field().order(), self.ip.tag()));
        for c in &we.counts {
            h.update(c.to_le_bytes());
        }
        Ok(hex::encode(h.finalize()))
    }
}
