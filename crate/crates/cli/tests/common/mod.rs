//! Reference implementations used as oracles. Everything here works on plain
//! `Vec<Vec<u8>>` rows with scalar field operations and shares no code with
//! the packed matrix routines under test.
#![allow(dead_code)]

use lcdembed_core::{Field, GfMatrix, InnerProduct};
use rand::Rng;

pub type Rows = Vec<Vec<u8>>;

pub fn rows_of(m: &GfMatrix) -> Rows {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect()).collect()
}

pub fn matrix(f: Field, cols: usize, rows: &Rows) -> GfMatrix {
    GfMatrix::from_rows(f, cols, rows).unwrap()
}

/// Row echelon form by scalar Gaussian elimination; returns the nonzero rows.
pub fn echelon(f: Field, rows: &Rows) -> Rows {
    let mut m = rows.clone();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = f.inv(m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let e = m[i][c];
                for j in 0..cols {
                    let v = f.mul(e, m[r][j]);
                    m[i][j] = f.sub(m[i][j], v);
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

pub fn rank(f: Field, rows: &Rows) -> usize {
    echelon(f, rows).len()
}

pub fn conj_rows(f: Field, ip: InnerProduct, rows: &Rows) -> Rows {
    match ip {
        InnerProduct::Euclidean => rows.clone(),
        InnerProduct::Hermitian => rows.iter().map(|r| r.iter().map(|&x| f.mul(x, x)).collect()).collect(),
    }
}

pub fn inner(f: Field, ip: InnerProduct, u: &[u8], v: &[u8]) -> u8 {
    u.iter().zip(v).fold(0, |acc, (&a, &b)| {
        let b = if ip == InnerProduct::Hermitian { f.mul(b, b) } else { b };
        f.add(acc, f.mul(a, b))
    })
}

/// `{x : x M^T = 0}` for the rows `M`, i.e. the Euclidean orthogonal complement.
pub fn nullspace(f: Field, n: usize, rows: &Rows) -> Rows {
    let e = echelon(f, rows);
    let pivots: Vec<usize> = e.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u8; n];
            v[fc] = 1;
            for (row, &pc) in e.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// The dual code under `ip`, as a basis.
pub fn dual_basis(f: Field, ip: InnerProduct, n: usize, rows: &Rows) -> Rows {
    nullspace(f, n, &conj_rows(f, ip, rows))
}

/// Dimension of the intersection of two row spaces by the Zassenhaus
/// construction: reduce `[[U, U], [W, 0]]` and count rows with zero left half.
pub fn zassenhaus_intersection_dim(f: Field, n: usize, u: &Rows, w: &Rows) -> usize {
    let mut big: Rows = u.iter().map(|r| r.iter().chain(r).copied().collect()).collect();
    big.extend(w.iter().map(|r| r.iter().copied().chain(std::iter::repeat_n(0, n)).collect()));
    if big.is_empty() {
        return 0;
    }
    echelon(f, &big).iter().filter(|r| r[..n].iter().all(|&x| x == 0)).count()
}

pub fn hull_dim_oracle(f: Field, ip: InnerProduct, n: usize, rows: &Rows) -> usize {
    zassenhaus_intersection_dim(f, n, rows, &dual_basis(f, ip, n, rows))
}

pub fn gram_rank(f: Field, ip: InnerProduct, rows: &Rows) -> usize {
    let c = conj_rows(f, ip, rows);
    let g: Rows = rows.iter().map(|a| c.iter().map(|b| inner(f, InnerProduct::Euclidean, a, b)).collect()).collect();
    rank(f, &g)
}

/// Determinant by Laplace expansion along the first row.
pub fn det_cofactor(f: Field, m: &Rows) -> u8 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut acc = 0u8;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Rows = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
        let term = f.mul(m[0][j], det_cofactor(f, &minor));
        acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
    }
    acc
}

/// Every codeword, by iterating over all messages.
pub fn codewords(f: Field, n: usize, rows: &Rows) -> Rows {
    let q = f.order() as u64;
    let total = q.pow(rows.len() as u32);
    (0..total)
        .map(|mut x| {
            let mut w = vec![0u8; n];
            for r in rows {
                let c = (x % q) as u8;
                x /= q;
                for (a, &b) in w.iter_mut().zip(r) {
                    *a = f.add(*a, f.mul(c, b));
                }
            }
            w
        })
        .collect()
}

pub fn weight(w: &[u8]) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

pub fn random_rows(rng: &mut impl Rng, f: Field, k: usize, n: usize) -> Rows {
    (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..f.order()) as u8).collect()).collect()
}

pub fn random_full_rank(rng: &mut impl Rng, f: Field, k: usize, n: usize) -> Rows {
    loop {
        let r = random_rows(rng, f, k, n);
        if rank(f, &r) == k {
            return r;
        }
    }
}

/// All `k x n` matrices in reduced row echelon form with rank `k`; one per
/// `k`-dimensional subspace of `F^n`.
pub fn all_rref(f: Field, k: usize, n: usize) -> Vec<Rows> {
    let q = f.order() as u64;
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            all.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            choose(n, k, c + 1, cur, all);
            cur.pop();
        }
    }
    choose(n, k, 0, &mut Vec::new(), &mut pivots);
    for piv in pivots {
        // free slots: row i, column c > piv[i], c not a pivot
        let slots: Vec<(usize, usize)> =
            (0..k).flat_map(|i| ((piv[i] + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (i, c))).collect();
        for mut x in 0..q.pow(slots.len() as u32) {
            let mut m = vec![vec![0u8; n]; k];
            for (i, &p) in piv.iter().enumerate() {
                m[i][p] = 1;
            }
            for &(i, c) in &slots {
                m[i][c] = (x % q) as u8;
                x /= q;
            }
            out.push(m);
        }
    }
    out
}
