//! Exact integer linear algebra: Hermite and Smith normal forms, kernels,
//! lattice intersection and preimage.
//!
//! Row convention throughout: a lattice in `Z^m` is the row span of a matrix.
//! Arithmetic is `i128` with checked multiplication; an overflow aborts the
//! computation rather than producing a wrong basis.

use alloc::vec;
use alloc::vec::Vec;

pub type Elt = i128;

#[inline]
fn mulc(a: Elt, b: Elt) -> Elt {
    a.checked_mul(b).expect("integer overflow in exact linear algebra")
}

pub fn gcd(a: Elt, b: Elt) -> Elt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// lcm with the ideal-intersection convention: lcm(0, x) = 0.
pub fn lcm(a: Elt, b: Elt) -> Elt {
    if a == 0 || b == 0 {
        0
    } else {
        mulc(a / gcd(a, b), b).abs()
    }
}

fn row_sub(dst: &mut [Elt], src: &[Elt], q: Elt) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = d.checked_sub(mulc(q, *s)).expect("integer overflow");
    }
}

fn pivot_col(row: &[Elt]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

pub struct HnfResult {
    /// Canonical Hermite basis: echelon rows with positive pivots, entries
    /// above each pivot reduced into `[0, pivot)`. Zero rows are dropped.
    pub hnf: Vec<Vec<Elt>>,
    /// Canonical basis of the left kernel `{z : z * A = 0}` (empty unless
    /// kernel tracking was requested).
    pub kernel: Vec<Vec<Elt>>,
}

pub fn hnf(rows: &[Vec<Elt>]) -> Vec<Vec<Elt>> {
    hnf_full(rows, false).hnf
}

pub fn hnf_full(rows: &[Vec<Elt>], track_kernel: bool) -> HnfResult {
    let r = rows.len();
    let m = rows.first().map_or(0, |x| x.len());
    debug_assert!(rows.iter().all(|row| row.len() == m));
    let mut a: Vec<Vec<Elt>> = rows.to_vec();
    let mut u: Vec<Vec<Elt>> = if track_kernel {
        (0..r)
            .map(|i| (0..r).map(|j| Elt::from(i == j)).collect())
            .collect()
    } else {
        Vec::new()
    };
    let mut used = vec![false; r];
    let mut pivot_rows: Vec<usize> = Vec::new();

    for col in 0..m {
        loop {
            let mut best: Option<usize> = None;
            for i in 0..r {
                if !used[i] && a[i][col] != 0 {
                    if best.map_or(true, |b| a[i][col].abs() < a[b][col].abs()) {
                        best = Some(i);
                    }
                }
            }
            let Some(p) = best else { break };
            let mut leftover = false;
            for i in 0..r {
                if i != p && !used[i] && a[i][col] != 0 {
                    let q = a[i][col].div_euclid(a[p][col]);
                    if q != 0 {
                        let (pr, ir) = if p < i {
                            let (lo, hi) = a.split_at_mut(i);
                            (&lo[p], &mut hi[0])
                        } else {
                            let (lo, hi) = a.split_at_mut(p);
                            (&hi[0], &mut lo[i])
                        };
                        row_sub(ir, pr, q);
                        if track_kernel {
                            let (pr, ir) = if p < i {
                                let (lo, hi) = u.split_at_mut(i);
                                (&lo[p], &mut hi[0])
                            } else {
                                let (lo, hi) = u.split_at_mut(p);
                                (&hi[0], &mut lo[i])
                            };
                            row_sub(ir, pr, q);
                        }
                    }
                    if a[i][col] != 0 {
                        leftover = true;
                    }
                }
            }
            if !leftover {
                if a[p][col] < 0 {
                    for x in a[p].iter_mut() {
                        *x = -*x;
                    }
                    if track_kernel {
                        for x in u[p].iter_mut() {
                            *x = -*x;
                        }
                    }
                }
                used[p] = true;
                pivot_rows.push(p);
                break;
            }
        }
    }

    let mut h: Vec<Vec<Elt>> = pivot_rows.iter().map(|&i| a[i].clone()).collect();
    // reduce entries above each pivot into [0, pivot)
    for j in 0..h.len() {
        let pc = pivot_col(&h[j]).unwrap();
        for i in 0..j {
            let q = h[i][pc].div_euclid(h[j][pc]);
            if q != 0 {
                let (lo, hi) = h.split_at_mut(j);
                row_sub(&mut lo[i], &hi[0], q);
            }
        }
    }

    let kernel = if track_kernel {
        let raw: Vec<Vec<Elt>> = (0..r).filter(|&i| !used[i]).map(|i| u[i].clone()).collect();
        hnf(&raw)
    } else {
        Vec::new()
    };
    HnfResult { hnf: h, kernel }
}

/// Canonical residue of `v` modulo the lattice spanned by Hermite rows `h`.
pub fn reduce(h: &[Vec<Elt>], v: &[Elt]) -> Vec<Elt> {
    let mut v = v.to_vec();
    for row in h {
        let pc = pivot_col(row).unwrap();
        let q = v[pc].div_euclid(row[pc]);
        if q != 0 {
            row_sub(&mut v, row, q);
        }
    }
    v
}

pub fn member(h: &[Vec<Elt>], v: &[Elt]) -> bool {
    reduce(h, v).iter().all(|&x| x == 0)
}

/// Coordinates of `v` in the Hermite basis `h`, if `v` lies in the lattice.
pub fn coordinates(h: &[Vec<Elt>], v: &[Elt]) -> Option<Vec<Elt>> {
    let mut v = v.to_vec();
    let mut coords = vec![0; h.len()];
    for (j, row) in h.iter().enumerate() {
        let pc = pivot_col(row).unwrap();
        if v[pc] % row[pc] != 0 {
            return None;
        }
        let q = v[pc] / row[pc];
        coords[j] = q;
        if q != 0 {
            row_sub(&mut v, row, q);
        }
    }
    if v.iter().all(|&x| x == 0) {
        Some(coords)
    } else {
        None
    }
}

fn mat_mul(a: &[Vec<Elt>], b: &[Vec<Elt>]) -> Vec<Vec<Elt>> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out: Vec<Elt> = vec![0; m];
            for (x, brow) in row.iter().zip(b) {
                if *x != 0 {
                    for (o, y) in out.iter_mut().zip(brow) {
                        *o = (*o).checked_add(mulc(*x, *y)).expect("integer overflow");
                    }
                }
            }
            out
        })
        .collect()
}

pub fn matmul(a: &[Vec<Elt>], b: &[Vec<Elt>]) -> Vec<Vec<Elt>> {
    mat_mul(a, b)
}

/// Intersection of the lattices spanned by `a` and `b` in `Z^m`.
pub fn intersect(a: &[Vec<Elt>], b: &[Vec<Elt>], m: usize) -> Vec<Vec<Elt>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut stacked: Vec<Vec<Elt>> = a.to_vec();
    stacked.extend(b.iter().cloned());
    let kernel = hnf_full(&stacked, true).kernel;
    let gens: Vec<Vec<Elt>> = kernel
        .iter()
        .map(|z| {
            let mut out: Vec<Elt> = vec![0; m];
            for (zi, arow) in z[..a.len()].iter().zip(a) {
                if *zi != 0 {
                    for (o, y) in out.iter_mut().zip(arow) {
                        *o = (*o).checked_add(mulc(*zi, *y)).expect("integer overflow");
                    }
                }
            }
            out
        })
        .collect();
    hnf(&gens)
}

/// `{x in Z^k : x * f lies in the lattice spanned by l}` where `f` is `k x m`.
pub fn preimage(f: &[Vec<Elt>], l: &[Vec<Elt>]) -> Vec<Vec<Elt>> {
    let k = f.len();
    if k == 0 {
        return Vec::new();
    }
    let mut stacked: Vec<Vec<Elt>> = f.to_vec();
    stacked.extend(l.iter().cloned());
    let kernel = hnf_full(&stacked, true).kernel;
    let gens: Vec<Vec<Elt>> = kernel.iter().map(|z| z[..k].to_vec()).collect();
    hnf(&gens)
}

pub struct Snf {
    /// Diagonal of the Smith form, padded with zeros to `m` entries; the
    /// nonzero entries form a divisibility chain.
    pub diag: Vec<Elt>,
    /// Column transform: the lattice in coordinates `y = x * V` is spanned by
    /// the diagonal rows.
    pub v: Vec<Vec<Elt>>,
    pub vinv: Vec<Vec<Elt>>,
}

pub fn snf(rows: &[Vec<Elt>], m: usize) -> Snf {
    let r = rows.len();
    let mut a: Vec<Vec<Elt>> = rows.to_vec();
    let ident = |n: usize| -> Vec<Vec<Elt>> {
        (0..n)
            .map(|i| (0..n).map(|j| Elt::from(i == j)).collect())
            .collect()
    };
    let mut v = ident(m);
    let mut vinv = ident(m);

    let swap_cols = |a: &mut Vec<Vec<Elt>>, v: &mut Vec<Vec<Elt>>, vinv: &mut Vec<Vec<Elt>>, j1: usize, j2: usize| {
        for row in a.iter_mut() {
            row.swap(j1, j2);
        }
        for row in v.iter_mut() {
            row.swap(j1, j2);
        }
        vinv.swap(j1, j2);
    };
    // col j2 -= q * col j1
    let col_sub = |a: &mut Vec<Vec<Elt>>, v: &mut Vec<Vec<Elt>>, vinv: &mut Vec<Vec<Elt>>, j2: usize, j1: usize, q: Elt| {
        for row in a.iter_mut() {
            row[j2] = row[j2].checked_sub(mulc(q, row[j1])).expect("integer overflow");
        }
        for row in v.iter_mut() {
            row[j2] = row[j2].checked_sub(mulc(q, row[j1])).expect("integer overflow");
        }
        let (r1, r2) = if j1 < j2 {
            let (lo, hi) = vinv.split_at_mut(j2);
            (&mut lo[j1], &mut hi[0])
        } else {
            let (lo, hi) = vinv.split_at_mut(j1);
            (&mut hi[0], &mut lo[j2])
        };
        // vinv row j1 += q * vinv row j2
        for (x, y) in r1.iter_mut().zip(r2.iter()) {
            *x = x.checked_add(mulc(q, *y)).expect("integer overflow");
        }
    };

    let n = core::cmp::min(r, m);
    let mut t = 0;
    while t < n {
        // find a pivot with minimal absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..m {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        if bj != t {
            swap_cols(&mut a, &mut v, &mut vinv, t, bj);
        }
        // clear row t and column t
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in t + 1..r {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    if q != 0 {
                        let (lo, hi) = a.split_at_mut(i);
                        row_sub(&mut hi[0], &lo[t], q);
                    }
                    if a[i][t] != 0 {
                        // remainder became the smaller pivot
                        a.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..m {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    if q != 0 {
                        col_sub(&mut a, &mut v, &mut vinv, j, t, q);
                    }
                    if a[t][j] != 0 {
                        swap_cols(&mut a, &mut v, &mut vinv, t, j);
                        dirty = true;
                    }
                }
            }
        }
        if a[t][t] == 0 {
            break;
        }
        // divisibility fix-up: everything in the trailing block must be
        // divisible by the pivot
        let d = a[t][t];
        let mut fixed = true;
        'scan: for i in t + 1..r {
            for j in t + 1..m {
                if a[i][j] % d != 0 {
                    // add row i to row t, then redo this position
                    let (lo, hi) = a.split_at_mut(i);
                    row_sub(&mut lo[t], &hi[0], -1);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if a[t][t] < 0 {
            for row in a.iter_mut() {
                row[t] = -row[t];
            }
            for row in v.iter_mut() {
                row[t] = -row[t];
            }
            for x in vinv[t].iter_mut() {
                *x = -*x;
            }
        }
        t += 1;
    }

    let mut diag = vec![0; m];
    for i in 0..n.min(t) {
        diag[i] = a[i][i];
    }
    debug_assert!(diag
        .windows(2)
        .all(|w| w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0)));
    Snf { diag, v, vinv }
}

/// Order of the class of `v` in `Z^m` modulo the lattice with Smith data `s`:
/// the least `c > 0` with `c*v` in the lattice, or 0 if no such `c` exists.
pub fn element_order(s: &Snf, v: &[Elt]) -> Elt {
    let y = mat_mul(&[v.to_vec()], &s.v);
    let y = &y[0];
    let mut ord: Elt = 1;
    for (yi, di) in y.iter().zip(&s.diag) {
        if *di == 0 {
            if *yi != 0 {
                return 0;
            }
        } else {
            ord = lcm(ord, di / gcd(*di, *yi));
            if ord == 0 {
                return 0;
            }
        }
    }
    ord
}

/// Index `[sup : sub]` of one lattice in another (`sub` must be contained in
/// `sup`, both given by Hermite bases). `None` means the index is infinite.
pub fn lattice_index(sup: &[Vec<Elt>], sub: &[Vec<Elt>]) -> Option<Elt> {
    if sup.is_empty() {
        return if sub.is_empty() { Some(1) } else { None };
    }
    // coordinates of sub rows in the sup basis
    let coords: Vec<Vec<Elt>> = sub
        .iter()
        .map(|row| coordinates(sup, row).expect("lattice_index: sub not contained in sup"))
        .collect();
    let t = sup.len();
    let s = snf(&coords, t);
    let mut idx: Elt = 1;
    for i in 0..t {
        if s.diag[i] == 0 {
            return None;
        }
        idx = mulc(idx, s.diag[i]);
    }
    Some(idx)
}
