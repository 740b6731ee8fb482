//! Hamming, simplex and generalized Reed-Muller codes over GF(2), GF(3), GF(4).

use std::fmt;

use crate::code::{InnerProduct, LinearCode};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matgf::GfMatrix;

/// Largest `q^m` accepted by [`grm`].
pub const GRM_LENGTH_GUARD: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Hamming,
    Simplex,
    Grm,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hamming => "hamming",
            Family::Simplex => "simplex",
            Family::Grm => "grm",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub q: u32,
    pub r: u32,
    /// Number of variables; only used by [`Family::Grm`].
    pub m: u32,
}

impl FamilySpec {
    pub fn build(&self) -> Result<LinearCode> {
        match self.family {
            Family::Hamming => hamming(self.q, self.r),
            Family::Simplex => simplex(self.q, self.r),
            Family::Grm => grm(self.q, self.r, self.m),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Grm => write!(f, "grm(q={}, r={}, m={})", self.q, self.r, self.m),
            fam => write!(f, "{}(q={}, r={})", fam.name(), self.q, self.r),
        }
    }
}

fn small_field(q: u32) -> Result<Field> {
    if !(2..=4).contains(&q) {
        return Err(Error::InvalidFamily(format!("q must be 2, 3 or 4, got {q}")));
    }
    Field::new(q)
}

fn projective_guard(q: u32, r: u32) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidFamily(format!("r must be at least 2, got {r}")));
    }
    if (q as u64).checked_pow(r).is_none_or(|n| n > GRM_LENGTH_GUARD) {
        return Err(Error::InvalidFamily(format!("{q}^{r} points exceed the length guard")));
    }
    Ok(())
}

/// All vectors of `F_q^len` in lexicographic order, first coordinate most significant.
fn lex_points(q: u32, len: u32) -> impl Iterator<Item = Vec<u8>> {
    let total = (q as u64).pow(len);
    (0..total).map(move |mut x| {
        let mut p = vec![0u8; len as usize];
        for slot in p.iter_mut().rev() {
            *slot = (x % q as u64) as u8;
            x /= q as u64;
        }
        p
    })
}

/// The `r`-dimensional simplex code: one column per projective point,
/// normalized so the first nonzero coordinate is 1, in lexicographic order.
pub fn simplex(q: u32, r: u32) -> Result<LinearCode> {
    let field = small_field(q)?;
    projective_guard(q, r)?;
    let points: Vec<Vec<u8>> = lex_points(q, r).filter(|p| p.iter().find(|&&x| x != 0) == Some(&1)).collect();
    let gen = GfMatrix::from_fn(field, r as usize, points.len(), |i, j| points[j][i]);
    LinearCode::with_default_ip(gen)
}

/// The Hamming code, built as the dual of [`simplex`].
pub fn hamming(q: u32, r: u32) -> Result<LinearCode> {
    Ok(simplex(q, r)?.dual())
}

/// Evaluations of the monomials `x^e` with `e_i <= q - 1` and `sum e_i <= r`
/// at every point of `F_q^m`. Rows are ordered by total degree, then
/// lexicographically by exponent vector.
///
/// GF(4) codes carry the Euclidean inner product: the regimes in which
/// these codes contain or are contained in their dual hold for the
/// Euclidean dual, not the Hermitian one.
pub fn grm(q: u32, r: u32, m: u32) -> Result<LinearCode> {
    let field = small_field(q)?;
    if m == 0 {
        return Err(Error::InvalidFamily("m must be positive".into()));
    }
    if (q as u64).checked_pow(m).is_none_or(|n| n > GRM_LENGTH_GUARD) {
        return Err(Error::InvalidFamily(format!("{q}^{m} points exceed the length guard")));
    }
    if r > m * (q - 1) {
        return Err(Error::InvalidFamily(format!("r must be at most m(q-1) = {}, got {r}", m * (q - 1))));
    }
    let mut exps: Vec<Vec<u8>> = lex_points(q, m).filter(|e| e.iter().map(|&x| x as u32).sum::<u32>() <= r).collect();
    exps.sort_by_key(|e| e.iter().map(|&x| x as u32).sum::<u32>());
    let points: Vec<Vec<u8>> = lex_points(q, m).collect();
    let gen = GfMatrix::from_fn(field, exps.len(), points.len(), |i, j| {
        exps[i].iter().zip(&points[j]).fold(1, |acc, (&e, &x)| field.mul(acc, field.pow(x, e as u32)))
    });
    LinearCode::new(gen, InnerProduct::Euclidean)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::MethodChoice;

    #[test]
    fn simplex_examples() {
        let s = simplex(3, 2).unwrap();
        assert_eq!((s.n(), s.k()), (4, 2));
        assert_eq!(s.weight_enumerator().unwrap().counts, vec![1, 0, 0, 8, 0]);
        let s = simplex(2, 3).unwrap();
        assert_eq!((s.n(), s.k()), (7, 3));
        assert!(s.gram().is_zero());
        let s = simplex(4, 2).unwrap();
        assert_eq!((s.n(), s.k(), s.inner_product()), (5, 2, InnerProduct::Hermitian));
        assert!(s.gram().is_zero());
    }

    #[test]
    fn simplex_columns_are_normalized_and_ordered() {
        let s = simplex(3, 2).unwrap();
        let cols: Vec<Vec<u8>> = (0..4).map(|j| vec![s.generator().get(0, j), s.generator().get(1, j)]).collect();
        assert_eq!(cols, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn simplex_constant_weight() {
        for (q, r) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (3, 5), (4, 2), (4, 3)] {
            let s = simplex(q, r).unwrap();
            let we = s.weight_enumerator().unwrap();
            let w = q.pow(r - 1) as usize;
            assert_eq!(we.counts[w] as u128, s.size() - 1, "q={q} r={r}");
        }
    }

    #[test]
    fn hamming_examples() {
        let h = hamming(2, 3).unwrap();
        assert_eq!((h.n(), h.k()), (7, 4));
        assert_eq!(h.min_distance(MethodChoice::Auto, None).unwrap().exact(), Some(3));
        assert_eq!(h.hull_dimension(), 3);
        let h = hamming(3, 3).unwrap();
        assert_eq!((h.n(), h.k(), h.hull_dimension()), (13, 10, 3));
        let h = hamming(4, 2).unwrap();
        assert_eq!((h.n(), h.k(), h.hull_dimension()), (5, 3, 2));
    }

    #[test]
    fn hamming_distance_and_hull() {
        for (q, r) in [(2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3)] {
            let h = hamming(q, r).unwrap();
            assert_eq!(h.min_distance(MethodChoice::Auto, None).unwrap().exact(), Some(3), "q={q} r={r}");
            assert_eq!(h.hull_dimension(), r as usize, "q={q} r={r}");
            assert!(h.dual().same_codewords(&simplex(q, r).unwrap()));
        }
    }

    #[test]
    fn binary_hamming_r2_is_lcd() {
        // the [3, 1] repetition code; the hull claim needs r >= 3 over GF(2)
        let h = hamming(2, 2).unwrap();
        assert_eq!((h.n(), h.k(), h.hull_dimension()), (3, 1, 0));
    }

    #[test]
    fn grm_examples() {
        let c = grm(2, 1, 3).unwrap();
        assert_eq!((c.n(), c.k(), c.hull_dimension()), (8, 4, 4));
        for m in 1..5 {
            let c = grm(2, 0, m).unwrap();
            assert_eq!(c.k(), 1);
            assert!(c.generator().row(0).iter().all(|&x| x == 1));
        }
        let c = grm(3, 1, 2).unwrap();
        assert_eq!((c.n(), c.k()), (9, 3));
        assert!(c.gram().is_zero());
        assert_eq!(c.n() + c.hull_dimension(), 12);
    }

    #[test]
    fn grm_dimension_matches_monomial_count() {
        // R_2(r, m) has dimension sum_{i <= r} C(m, i)
        let binom = |n: u32, k: u32| (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64);
        for m in 1..=6 {
            for r in 0..=m {
                let k: u64 = (0..=r).map(|i| binom(m, i)).sum();
                assert_eq!(grm(2, r, m).unwrap().k() as u64, k);
            }
        }
        // full space at the top order
        assert_eq!(grm(3, 4, 2).unwrap().k(), 9);
    }

    #[test]
    fn grm_hull_regimes() {
        for (q, max_m) in [(2u32, 6u32), (3, 4), (4, 3)] {
            for m in 1..=max_m {
                let s = m * (q - 1);
                let b = s.saturating_sub(1) / 2;
                for r in 0..=s {
                    let c = grm(q, r, m).unwrap();
                    let (n, k, ell) = (c.n(), c.k(), c.hull_dimension());
                    let expect = if r <= b { k } else { n - k };
                    assert_eq!(ell, expect, "q={q} r={r} m={m}");
                    if r == b && s % 2 == 1 {
                        assert_eq!(k, n - k);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(simplex(5, 2), Err(Error::InvalidFamily(_))));
        assert!(matches!(simplex(2, 1), Err(Error::InvalidFamily(_))));
        assert!(matches!(grm(2, 4, 3), Err(Error::InvalidFamily(_))));
        assert!(matches!(grm(2, 1, 15), Err(Error::InvalidFamily(_))));
        assert!(matches!(grm(4, 1, 0), Err(Error::InvalidFamily(_))));
    }

    #[test]
    fn grm_gf4_hermitian_regimes_do_not_hold() {
        // R_4(1, 1) is Euclidean self-dual but not Hermitian self-orthogonal
        let c = grm(4, 1, 1).unwrap();
        assert!(c.gram().is_zero());
        let herm = LinearCode::new(c.generator().clone(), InnerProduct::Hermitian).unwrap();
        assert!(herm.hull_dimension() < herm.k());
    }
}
