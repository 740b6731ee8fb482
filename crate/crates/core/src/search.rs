//! Search over the `(D, C)` blocks of shortest LCD embeddings for large
//! minimum distance.

use std::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::LinearCode;
use crate::embed::{embed_with, matrix_from_index, EmbeddingResult};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::matgf::GfMatrix;

/// Largest `(D, C)` space the exhaustive strategy will walk.
pub const EXHAUSTIVE_GUARD: u128 = 1 << 24;

/// Trials evaluated between updates of the pruning bound.
const BATCH: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// `D` uniform over invertible matrices, `C` uniform.
    Random,
    /// Every `(D, C)` in lexicographic order.
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchConfig {
    pub seed: u64,
    /// Maximum number of trials.
    pub budget: u64,
    pub strategy: Strategy,
    pub keep_best: usize,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    /// Best results, distance descending, then generator ascending.
    pub results: Vec<EmbeddingResult>,
    pub trials: u64,
    /// Size of the `(D, C)` space.
    pub space: u128,
}

/// `|GL(ell, q)| * q^((k - ell) ell)`, saturating.
pub fn search_space(field: Field, k: usize, ell: usize) -> u128 {
    let q = field.order() as u128;
    let q_ell = q.saturating_pow(ell as u32);
    let gl = (0..ell).fold(1u128, |acc, i| acc.saturating_mul(q_ell - q.pow(i as u32)));
    gl.saturating_mul(q.saturating_pow(((k - ell) * ell) as u32))
}

fn rank_order(a: &EmbeddingResult, b: &EmbeddingResult) -> Ordering {
    let da = a.distance.as_ref().and_then(|d| d.exact());
    let db = b.distance.as_ref().and_then(|d| d.exact());
    db.cmp(&da).then_with(|| a.code.generator().lex_cmp(b.code.generator()))
}

struct Candidates<'a> {
    code: &'a LinearCode,
    cfg: SearchConfig,
    ell: usize,
    /// Exhaustive cursor: index of the current `D` and of the next `C`.
    d_index: u128,
    c_index: u128,
    d_current: Option<GfMatrix>,
}

impl Candidates<'_> {
    fn c_count(&self) -> u128 {
        (self.code.field().order() as u128).pow(((self.code.k() - self.ell) * self.ell) as u32)
    }

    fn random(&self, trial: u64) -> (GfMatrix, GfMatrix) {
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        rng.set_stream(trial);
        let f = self.code.field();
        let d = GfMatrix::random_invertible(&mut rng, f, self.ell);
        let c = GfMatrix::random(&mut rng, f, self.code.k() - self.ell, self.ell);
        (d, c)
    }

    fn next_exhaustive(&mut self) -> Option<(GfMatrix, GfMatrix)> {
        let f = self.code.field();
        let ell = self.ell;
        if self.d_current.is_some() && self.c_index == self.c_count() {
            self.d_index += 1;
            self.d_current = None;
        }
        if self.d_current.is_none() {
            self.c_index = 0;
            let d_total = (f.order() as u128).pow((ell * ell) as u32);
            while self.d_index < d_total {
                let d = matrix_from_index(f, ell, ell, self.d_index);
                if d.determinant().expect("square") != 0 {
                    self.d_current = Some(d);
                    break;
                }
                self.d_index += 1;
            }
        }
        let d = self.d_current.clone()?;
        let c = matrix_from_index(f, self.code.k() - ell, ell, self.c_index);
        self.c_index += 1;
        Some((d, c))
    }
}

/// Finds the `keep_best` embeddings of largest minimum distance among the
/// trials. Output depends only on `code` and `cfg`.
pub fn search(code: &LinearCode, cfg: &SearchConfig) -> Result<SearchReport> {
    let (k, ell) = (code.k(), code.hull_dimension());
    if ell == 0 {
        return Err(Error::TrivialHull);
    }
    let space = search_space(code.field(), k, ell);
    if cfg.strategy == Strategy::Exhaustive && space > EXHAUSTIVE_GUARD {
        return Err(Error::ExhaustiveGuard(space));
    }
    let decomposition = code.hull_decomposition();
    let mut source = Candidates { code, cfg: *cfg, ell, d_index: 0, c_index: 0, d_current: None };
    let mut best: Vec<EmbeddingResult> = Vec::new();
    let mut trials = 0u64;
    while trials < cfg.budget && cfg.keep_best > 0 {
        let size = BATCH.min(cfg.budget - trials);
        let batch: Vec<(u64, GfMatrix, GfMatrix)> = match cfg.strategy {
            Strategy::Random => (trials..trials + size)
                .map(|t| {
                    let (d, c) = source.random(t);
                    (t, d, c)
                })
                .collect(),
            Strategy::Exhaustive => (trials..trials + size)
                .map_while(|t| source.next_exhaustive().map(|(d, c)| (t, d, c)))
                .collect(),
        };
        if batch.is_empty() {
            break;
        }
        trials += batch.len() as u64;
        // a candidate lighter than the current K-th best can never enter the list
        let floor = if best.len() == cfg.keep_best {
            best.last().and_then(|r| r.distance.as_ref()).and_then(|d| d.exact()).unwrap_or(0)
        } else {
            0
        };
        let evaluated: Vec<Option<EmbeddingResult>> = batch
            .into_par_iter()
            .map(|(t, d, c)| -> Result<Option<EmbeddingResult>> {
                let mut r = embed_with(code, decomposition.clone(), &d, &c)?;
                let Some(dist) = r.code.distance_at_least(floor)? else {
                    return Ok(None);
                };
                r.distance = Some(dist);
                r.trials_used = t + 1;
                Ok(Some(r))
            })
            .collect::<Result<_>>()?;
        for r in evaluated.into_iter().flatten() {
            let pos = best.binary_search_by(|b| rank_order(b, &r));
            if let Err(pos) = pos {
                if pos < cfg.keep_best {
                    best.insert(pos, r);
                    best.truncate(cfg.keep_best);
                }
            }
        }
    }
    Ok(SearchReport { results: best, trials, space })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hamming, simplex};
    use crate::gf::Field;

    fn cfg(strategy: Strategy, seed: u64, budget: u64, keep: usize) -> SearchConfig {
        SearchConfig { seed, budget, strategy, keep_best: keep }
    }

    #[test]
    fn space_sizes() {
        // |GL(3, 2)| = 168
        assert_eq!(search_space(Field::GF2, 4, 3), 168 * 8);
        assert_eq!(search_space(Field::GF3, 2, 2), 48);
        assert_eq!(search_space(Field::GF2, 3, 0), 1);
    }

    #[test]
    fn exhaustive_hamming_reaches_four() {
        let h = hamming(2, 3).unwrap();
        let rep = search(&h, &cfg(Strategy::Exhaustive, 0, u64::MAX, 5)).unwrap();
        assert_eq!(rep.trials, 168 * 8);
        assert_eq!(rep.results.len(), 5);
        for r in &rep.results {
            assert_eq!(r.distance.as_ref().unwrap().exact(), Some(4));
            assert!(r.code.is_lcd());
            assert_eq!(r.code.n(), 10);
        }
        for w in rep.results.windows(2) {
            assert_eq!(rank_order(&w[0], &w[1]), Ordering::Less);
        }
    }

    #[test]
    fn zero_budget_is_empty() {
        let h = hamming(2, 3).unwrap();
        let rep = search(&h, &cfg(Strategy::Random, 1, 0, 3)).unwrap();
        assert!(rep.results.is_empty());
        assert_eq!(rep.trials, 0);
    }

    #[test]
    fn errors() {
        let lcd = LinearCode::with_default_ip(GfMatrix::identity(Field::GF2, 3)).unwrap();
        assert!(matches!(search(&lcd, &cfg(Strategy::Random, 0, 10, 1)), Err(Error::TrivialHull)));
        let big = hamming(2, 5).unwrap();
        assert!(matches!(search(&big, &cfg(Strategy::Exhaustive, 0, 10, 1)), Err(Error::ExhaustiveGuard(_))));
    }

    #[test]
    fn random_search_is_deterministic() {
        let s = simplex(3, 3).unwrap().dual();
        let c = cfg(Strategy::Random, 7, 600, 4);
        let a = search(&s, &c).unwrap();
        let b = search(&s, &c).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let serial = pool.install(|| search(&s, &c)).unwrap();
        let gens = |r: &SearchReport| r.results.iter().map(|x| x.code.generator().clone()).collect::<Vec<_>>();
        assert_eq!(gens(&a), gens(&b));
        assert_eq!(gens(&a), gens(&serial));
        assert_eq!(a.results.len(), 4);
    }

    #[test]
    fn pruned_search_matches_unpruned_ranking() {
        // keeping every result disables pruning; the top entries must agree
        let s = hamming(3, 2).unwrap();
        let all = search(&s, &cfg(Strategy::Exhaustive, 0, u64::MAX, usize::MAX)).unwrap();
        let top = search(&s, &cfg(Strategy::Exhaustive, 0, u64::MAX, 3)).unwrap();
        let gens = |r: &[EmbeddingResult]| r.iter().map(|x| x.code.generator().clone()).collect::<Vec<_>>();
        assert_eq!(gens(&top.results), gens(&all.results[..3]));
        assert_eq!(all.results.len() as u128, all.space);
    }
}
