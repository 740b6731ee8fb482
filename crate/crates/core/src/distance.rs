//! Minimum-distance engines.
//!
//! * Enumeration walks every nonzero codeword with a modular Gray code over
//!   the message digits, so each step is a single packed row addition.
//! * Low-weight search looks for the smallest `w` such that some `w` columns
//!   of a parity-check matrix are linearly dependent. Subsets are visited in
//!   lexicographic order by depth-first search that keeps an incremental
//!   echelon basis of the chosen columns.
//!
//! Both engines split work into blocks whose boundaries depend only on the
//! code, never on the number of worker threads, and merge block results
//! deterministically.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::code::LinearCode;
use crate::packed::{Layout, RowKernel};

/// Codes with at most this many codewords are routed to enumeration by `Auto`.
pub const AUTO_ENUMERATION_LIMIT: u128 = 1 << 24;
/// Hard limit on `q^k` for explicit enumeration and the weight enumerator.
pub const ENUMERATION_GUARD: u128 = 1 << 26;

const SEQUENTIAL_LIMIT: u128 = 1 << 14;
const MAX_BLOCKS: u128 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistanceMethod {
    Enumeration,
    LowWeight,
}

impl DistanceMethod {
    pub fn name(self) -> &'static str {
        match self {
            DistanceMethod::Enumeration => "enumeration",
            DistanceMethod::LowWeight => "low-weight",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MethodChoice {
    #[default]
    Auto,
    Enumerate,
    LowWeight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistanceValue {
    Exact(usize),
    /// No codeword of weight `<= bound` exists.
    ExceedsBound(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub method: DistanceMethod,
    pub value: DistanceValue,
    /// A minimum-weight codeword, present whenever the value is exact.
    pub witness: Option<Vec<u8>>,
}

impl DistanceReport {
    pub fn exact(&self) -> Option<usize> {
        match self.value {
            DistanceValue::Exact(d) => Some(d),
            DistanceValue::ExceedsBound(_) => None,
        }
    }
}

/// Number of codewords of each Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    pub counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest positive weight carried by a codeword.
    pub fn min_weight(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w)
    }
}

/// Gray-code walker over all codewords.
pub(crate) struct Walker {
    kernel: RowKernel,
    n: usize,
    radix: u64,
    /// Additive generators; a codeword is `sum digit_i * gens[i]` with digits in `0..radix`.
    gens: Vec<Vec<u64>>,
    block_digits: usize,
}

fn trailing_zero_digits(mut s: u64, radix: u64) -> usize {
    if radix == 2 {
        return s.trailing_zeros() as usize;
    }
    let mut j = 0;
    while s.is_multiple_of(radix) {
        s /= radix;
        j += 1;
    }
    j
}

impl Walker {
    pub fn new(code: &LinearCode) -> Walker {
        let basis = code.generator().row_basis();
        let kernel = basis.kernel();
        let mut gens = Vec::new();
        let radix = match kernel.layout {
            // GF(4) is walked as a GF(2)-space with generators g and w*g.
            Layout::Quads => {
                for i in 0..basis.rows() {
                    let g = basis.row_words(i).to_vec();
                    let mut wg = g.clone();
                    kernel.scale(&mut wg, 2);
                    gens.push(g);
                    gens.push(wg);
                }
                2
            }
            _ => {
                gens.extend((0..basis.rows()).map(|i| basis.row_words(i).to_vec()));
                code.field().order() as u64
            }
        };
        let total = (radix as u128).pow(gens.len() as u32);
        let mut block_digits = 0;
        if total > SEQUENTIAL_LIMIT {
            while block_digits < gens.len() && (radix as u128).pow(block_digits as u32 + 1) <= MAX_BLOCKS {
                block_digits += 1;
            }
        }
        Walker { kernel, n: code.n(), radix, gens, block_digits }
    }

    fn blocks(&self) -> u64 {
        self.radix.pow(self.block_digits as u32)
    }

    /// Visits every codeword of block `b` (the zero word is skipped). Returns
    /// `false` if `visit` asked to stop.
    fn walk_block(&self, b: u64, visit: &mut impl FnMut(&[u64]) -> bool) -> bool {
        let m = self.gens.len();
        let low = m - self.block_digits;
        let mut cur = vec![0u64; self.kernel.stride(self.n)];
        let mut rest = b;
        for g in &self.gens[low..] {
            let d = (rest % self.radix) as u8;
            rest /= self.radix;
            self.kernel.add_scaled(&mut cur, g, d);
        }
        let steps = self.radix.pow(low as u32);
        for s in 0..steps {
            if (b != 0 || s != 0) && !visit(&cur) {
                return false;
            }
            if s + 1 < steps {
                let j = trailing_zero_digits(s + 1, self.radix);
                self.kernel.add(&mut cur, &self.gens[j]);
            }
        }
        true
    }

    fn run_blocks<R: Send>(&self, f: impl Fn(u64) -> R + Sync + Send) -> Vec<R> {
        let blocks = self.blocks();
        if blocks == 1 {
            vec![f(0)]
        } else {
            (0..blocks).into_par_iter().map(f).collect()
        }
    }

    /// Minimum weight and the lexicographically smallest word attaining it.
    /// Returns `None` as soon as a word lighter than `floor` appears.
    pub fn min_weight(&self, floor: usize) -> Option<(usize, Vec<u8>)> {
        let abort = AtomicBool::new(false);
        let results = self.run_blocks(|b| {
            let mut best: Option<(usize, Vec<u8>)> = None;
            let finished = self.walk_block(b, &mut |word| {
                let w = self.kernel.weight(word);
                if w < floor {
                    abort.store(true, Ordering::Relaxed);
                    return false;
                }
                match &mut best {
                    Some((bw, _)) if w > *bw => {}
                    Some((bw, bword)) if w == *bw => {
                        let cand = self.kernel.unpack(word, self.n);
                        if cand < *bword {
                            *bword = cand;
                        }
                    }
                    _ => best = Some((w, self.kernel.unpack(word, self.n))),
                }
                !abort.load(Ordering::Relaxed)
            });
            if finished {
                best
            } else {
                None
            }
        });
        if abort.load(Ordering::Relaxed) {
            return None;
        }
        results.into_iter().flatten().min()
    }

    pub fn weight_counts(&self) -> Vec<u64> {
        let partials = self.run_blocks(|b| {
            let mut counts = vec![0u64; self.n + 1];
            self.walk_block(b, &mut |word| {
                counts[self.kernel.weight(word)] += 1;
                true
            });
            counts
        });
        let mut counts = vec![0u64; self.n + 1];
        counts[0] = 1;
        for p in partials {
            for (c, x) in counts.iter_mut().zip(p) {
                *c += x;
            }
        }
        counts
    }
}

/// Parity-check columns prepared for dependency search.
pub(crate) struct ColumnSearch {
    kernel: RowKernel,
    redundancy: usize,
    cols: Vec<Vec<u64>>,
}

struct Level {
    vec: Vec<u64>,
    pivot: usize,
    coeffs: Vec<u8>,
}

impl ColumnSearch {
    pub fn new(code: &LinearCode) -> ColumnSearch {
        let h = code.parity_check();
        let ht = h.transpose();
        let kernel = ht.kernel();
        let cols = (0..ht.rows()).map(|j| ht.row_words(j).to_vec()).collect();
        ColumnSearch { kernel, redundancy: h.rows(), cols }
    }

    /// Lexicographically first `w`-subset of dependent columns, assuming no
    /// smaller subset is dependent. Returns the codeword supported on it.
    pub fn first_dependent(&self, w: usize) -> Option<Vec<u8>> {
        let n = self.cols.len();
        if w == 0 || w > n {
            return None;
        }
        (0..=n - w).into_par_iter().find_map_first(|first| {
            let mut chosen = Vec::with_capacity(w);
            let mut levels: Vec<Level> = Vec::with_capacity(w);
            self.descend(w, first, first + 1, &mut chosen, &mut levels)
        })
    }

    /// Reduces column `j` against `levels`; `coeffs` tracks it as a
    /// combination of the chosen columns (slot `depth` is `j` itself).
    fn reduce(&self, j: usize, depth: usize, w: usize, levels: &[Level]) -> (Vec<u64>, Vec<u8>) {
        let f = self.kernel.field;
        let mut v = self.cols[j].clone();
        let mut coeffs = vec![0u8; w];
        coeffs[depth] = 1;
        for lv in levels {
            let c = self.kernel.get(&v, lv.pivot);
            if c != 0 {
                let m = f.neg(c);
                self.kernel.add_scaled(&mut v, &lv.vec, m);
                for (x, &y) in coeffs.iter_mut().zip(&lv.coeffs) {
                    *x = f.add(*x, f.mul(m, y));
                }
            }
        }
        (v, coeffs)
    }

    fn descend(
        &self,
        w: usize,
        j: usize,
        next: usize,
        chosen: &mut Vec<usize>,
        levels: &mut Vec<Level>,
    ) -> Option<Vec<u8>> {
        let depth = chosen.len();
        let f = self.kernel.field;
        let (mut v, mut coeffs) = self.reduce(j, depth, w, levels);
        let pivot = (0..self.redundancy).find(|&p| self.kernel.get(&v, p) != 0);
        let Some(pivot) = pivot else {
            if depth + 1 == w {
                chosen.push(j);
                let mut word = vec![0u8; self.cols.len()];
                for (&c, &x) in chosen.iter().zip(&coeffs) {
                    word[c] = x;
                }
                return Some(word);
            }
            // a smaller dependent set; excluded by the caller's contract
            return None;
        };
        if depth + 1 == w {
            return None;
        }
        let inv = f.inv(self.kernel.get(&v, pivot)).expect("nonzero pivot");
        self.kernel.scale(&mut v, inv);
        for x in coeffs.iter_mut() {
            *x = f.mul(*x, inv);
        }
        chosen.push(j);
        levels.push(Level { vec: v, pivot, coeffs });
        let n = self.cols.len();
        let remaining = w - depth - 1;
        let mut found = None;
        for j2 in next..=n - remaining {
            if let Some(word) = self.descend(w, j2, j2 + 1, chosen, levels) {
                found = Some(word);
                break;
            }
        }
        if found.is_none() {
            chosen.pop();
        }
        levels.pop();
        found
    }

    /// Smallest `w <= limit` with a weight-`w` codeword, and that codeword.
    pub fn search(&self, limit: usize) -> Option<(usize, Vec<u8>)> {
        (1..=limit.min(self.cols.len())).find_map(|w| self.first_dependent(w).map(|word| (w, word)))
    }
}
