//! Packed row storage and word-parallel row kernels.
//!
//! * GF(2): one bit per entry, 64 entries per word.
//! * GF(3), GF(4): two bit planes per 64 entries, stored interleaved as
//!   `[lo_0, hi_0, lo_1, hi_1, ...]`. GF(3) uses `lo = [x == 1]`,
//!   `hi = [x == 2]`; GF(4) uses the bits of the element index.
//! * other primes: one byte per entry, eight entries per word.
//!
//! Padding positions past the row length are always zero, so rows can be
//! compared word by word.

use crate::gf::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Layout {
    Bits,
    Trits,
    Quads,
    Bytes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RowKernel {
    pub field: Field,
    pub layout: Layout,
}

#[inline]
fn trit_add(ap: u64, am: u64, bp: u64, bm: u64) -> (u64, u64) {
    let a0 = !(ap | am);
    let b0 = !(bp | bm);
    let p = (ap & b0) | (a0 & bp) | (am & bm);
    let m = (am & b0) | (a0 & bm) | (ap & bp);
    (p, m)
}

#[inline]
fn quad_scale(lo: u64, hi: u64, c: u8) -> (u64, u64) {
    match c {
        0 => (0, 0),
        1 => (lo, hi),
        2 => (hi, lo ^ hi),
        _ => (lo ^ hi, lo),
    }
}

impl RowKernel {
    pub fn new(field: Field) -> RowKernel {
        let layout = match field.order() {
            2 => Layout::Bits,
            3 => Layout::Trits,
            4 => Layout::Quads,
            _ => Layout::Bytes,
        };
        RowKernel { field, layout }
    }

    /// Words needed for a row of `len` entries.
    pub fn stride(self, len: usize) -> usize {
        match self.layout {
            Layout::Bits => len.div_ceil(64),
            Layout::Trits | Layout::Quads => 2 * len.div_ceil(64),
            Layout::Bytes => len.div_ceil(8),
        }
    }

    #[inline]
    pub fn get(self, row: &[u64], j: usize) -> u8 {
        let (w, b) = (j / 64, j % 64);
        match self.layout {
            Layout::Bits => ((row[w] >> b) & 1) as u8,
            Layout::Trits => {
                let p = (row[2 * w] >> b) & 1;
                let m = (row[2 * w + 1] >> b) & 1;
                (p + 2 * m) as u8
            }
            Layout::Quads => {
                let lo = (row[2 * w] >> b) & 1;
                let hi = (row[2 * w + 1] >> b) & 1;
                (lo | (hi << 1)) as u8
            }
            Layout::Bytes => ((row[j / 8] >> (8 * (j % 8))) & 0xff) as u8,
        }
    }

    #[inline]
    pub fn set(self, row: &mut [u64], j: usize, v: u8) {
        let (w, b) = (j / 64, j % 64);
        let mask = 1u64 << b;
        match self.layout {
            Layout::Bits => {
                row[w] = (row[w] & !mask) | (((v & 1) as u64) << b);
            }
            Layout::Trits => {
                row[2 * w] = (row[2 * w] & !mask) | (((v == 1) as u64) << b);
                row[2 * w + 1] = (row[2 * w + 1] & !mask) | (((v == 2) as u64) << b);
            }
            Layout::Quads => {
                row[2 * w] = (row[2 * w] & !mask) | (((v & 1) as u64) << b);
                row[2 * w + 1] = (row[2 * w + 1] & !mask) | ((((v >> 1) & 1) as u64) << b);
            }
            Layout::Bytes => {
                let shift = 8 * (j % 8);
                row[j / 8] = (row[j / 8] & !(0xffu64 << shift)) | ((v as u64) << shift);
            }
        }
    }

    /// `dst += src`.
    #[inline]
    pub fn add(self, dst: &mut [u64], src: &[u64]) {
        match self.layout {
            Layout::Bits | Layout::Quads => {
                for (d, s) in dst.iter_mut().zip(src) {
                    *d ^= s;
                }
            }
            Layout::Trits => {
                for (d, s) in dst.chunks_exact_mut(2).zip(src.chunks_exact(2)) {
                    let (p, m) = trit_add(d[0], d[1], s[0], s[1]);
                    d[0] = p;
                    d[1] = m;
                }
            }
            Layout::Bytes => self.add_scaled(dst, src, 1),
        }
    }

    /// `dst += c * src`.
    #[inline]
    pub fn add_scaled(self, dst: &mut [u64], src: &[u64], c: u8) {
        if c == 0 {
            return;
        }
        match self.layout {
            Layout::Bits => self.add(dst, src),
            Layout::Trits => {
                for (d, s) in dst.chunks_exact_mut(2).zip(src.chunks_exact(2)) {
                    let (sp, sm) = if c == 1 { (s[0], s[1]) } else { (s[1], s[0]) };
                    let (p, m) = trit_add(d[0], d[1], sp, sm);
                    d[0] = p;
                    d[1] = m;
                }
            }
            Layout::Quads => {
                for (d, s) in dst.chunks_exact_mut(2).zip(src.chunks_exact(2)) {
                    let (lo, hi) = quad_scale(s[0], s[1], c);
                    d[0] ^= lo;
                    d[1] ^= hi;
                }
            }
            Layout::Bytes => {
                let f = self.field;
                for (d, s) in dst.iter_mut().zip(src) {
                    if *s == 0 {
                        continue;
                    }
                    let mut out = 0u64;
                    for lane in 0..8 {
                        let shift = 8 * lane;
                        let a = ((*d >> shift) & 0xff) as u8;
                        let b = ((*s >> shift) & 0xff) as u8;
                        out |= (f.add(a, f.mul(c, b)) as u64) << shift;
                    }
                    *d = out;
                }
            }
        }
    }

    /// `row *= c`.
    pub fn scale(self, row: &mut [u64], c: u8) {
        match (self.layout, c) {
            (_, 1) => {}
            (_, 0) => row.fill(0),
            (Layout::Bits, _) => {}
            (Layout::Trits, _) => {
                for pair in row.chunks_exact_mut(2) {
                    pair.swap(0, 1);
                }
            }
            (Layout::Quads, _) => {
                for pair in row.chunks_exact_mut(2) {
                    let (lo, hi) = quad_scale(pair[0], pair[1], c);
                    pair[0] = lo;
                    pair[1] = hi;
                }
            }
            (Layout::Bytes, _) => {
                let f = self.field;
                for w in row.iter_mut() {
                    let mut out = 0u64;
                    for lane in 0..8 {
                        let shift = 8 * lane;
                        let a = ((*w >> shift) & 0xff) as u8;
                        out |= (f.mul(c, a) as u64) << shift;
                    }
                    *w = out;
                }
            }
        }
    }

    /// Hamming weight of a packed row.
    #[inline]
    pub fn weight(self, row: &[u64]) -> usize {
        match self.layout {
            Layout::Bits => row.iter().map(|w| w.count_ones() as usize).sum(),
            Layout::Trits | Layout::Quads => row
                .chunks_exact(2)
                .map(|p| (p[0] | p[1]).count_ones() as usize)
                .sum(),
            Layout::Bytes => row
                .iter()
                .map(|w| (0..8).filter(|lane| (w >> (8 * lane)) & 0xff != 0).count())
                .sum(),
        }
    }

    pub fn unpack(self, row: &[u64], len: usize) -> Vec<u8> {
        (0..len).map(|j| self.get(row, j)).collect()
    }

    pub fn pack(self, entries: &[u8]) -> Vec<u64> {
        let mut row = vec![0u64; self.stride(entries.len())];
        for (j, &v) in entries.iter().enumerate() {
            if v != 0 {
                self.set(&mut row, j, v);
            }
        }
        row
    }
}
