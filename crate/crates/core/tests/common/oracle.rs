//! Independent brute-force oracle: its own rationals-only eliminator and its
//! own multiplication tables. Shares no code with the library.
#![allow(dead_code, clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type R = BigRational;
pub type Vecr = Vec<R>;

pub fn int(n: i64) -> R {
    BigRational::from_integer(BigInt::from(n))
}

/// Plain Gaussian elimination; returns the rank.
pub fn rank(mut rows: Vec<Vecr>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in (r + 1)..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            for j in c..ncols {
                let t = &f * &rows[r][j];
                rows[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Basis of the solution space of `rows * x = 0` (back substitution on a
/// fully reduced copy).
pub fn null_space(rows: Vec<Vecr>, ncols: usize) -> Vec<Vecr> {
    let mut m = rows;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = R::one() / &m[r][c];
        for j in 0..ncols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![R::zero(); ncols];
        v[f] = R::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -m[i][f].clone();
        }
        out.push(v);
    }
    out
}

pub fn nullity(rows: Vec<Vecr>, ncols: usize) -> usize {
    ncols - if rows.is_empty() { 0 } else { rank(rows) }
}

/// Finite-dimensional algebra described by a closure on basis indices.
pub struct NaiveAlgebra {
    pub dim: usize,
    pub unit: Vecr,
    pub table: Vec<Vec<Vecr>>,
}

impl NaiveAlgebra {
    fn from_fn(dim: usize, unit: Vecr, f: impl Fn(usize, usize) -> Vecr) -> Self {
        let table = (0..dim).map(|i| (0..dim).map(|j| f(i, j)).collect()).collect();
        NaiveAlgebra { dim, unit, table }
    }

    pub fn mul(&self, x: &[R], y: &[R]) -> Vecr {
        let mut out = vec![R::zero(); self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                if x[i].is_zero() || y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..self.dim {
                    out[k] += &c * &self.table[i][j][k];
                }
            }
        }
        out
    }

    pub fn e(&self, i: usize) -> Vecr {
        unit(self.dim, i)
    }
}

pub fn unit(n: usize, i: usize) -> Vecr {
    let mut v = vec![R::zero(); n];
    v[i] = R::one();
    v
}

/// Matrix units e_ij, basis order e11, e12, e21, e22.
pub fn m2() -> NaiveAlgebra {
    let idx = |r: usize, c: usize| 2 * r + c;
    let mut one = vec![R::zero(); 4];
    one[idx(0, 0)] = R::one();
    one[idx(1, 1)] = R::one();
    NaiveAlgebra::from_fn(4, one, |a, b| {
        let (i, j) = (a / 2, a % 2);
        let (k, l) = (b / 2, b % 2);
        let mut v = vec![R::zero(); 4];
        if j == k {
            v[idx(i, l)] = R::one();
        }
        v
    })
}

/// Upper triangular 2x2: basis e11, e12, e22.
pub fn t2() -> NaiveAlgebra {
    let pos = [(0usize, 0usize), (0, 1), (1, 1)];
    let find = |r: usize, c: usize| pos.iter().position(|&p| p == (r, c));
    NaiveAlgebra::from_fn(3, vec![int(1), int(0), int(1)], |a, b| {
        let (i, j) = pos[a];
        let (k, l) = pos[b];
        let mut v = vec![R::zero(); 3];
        if j == k {
            v[find(i, l).unwrap()] = R::one();
        }
        v
    })
}

/// Q[x]/(x^n), basis 1, x, ..., x^{n-1}.
pub fn truncated(n: usize) -> NaiveAlgebra {
    NaiveAlgebra::from_fn(n, unit(n, 0), |i, j| {
        let mut v = vec![R::zero(); n];
        if i + j < n {
            v[i + j] = R::one();
        }
        v
    })
}

pub fn product_qq() -> NaiveAlgebra {
    NaiveAlgebra::from_fn(2, vec![int(1), int(1)], |i, j| {
        let mut v = vec![R::zero(); 2];
        if i == j {
            v[i] = R::one();
        }
        v
    })
}

/// Basis 1, i, j, k.
pub fn quaternions() -> NaiveAlgebra {
    // (sign, index) of e_a * e_b
    let t: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    NaiveAlgebra::from_fn(4, unit(4, 0), move |a, b| {
        let (s, k) = t[a][b];
        let mut v = vec![R::zero(); 4];
        v[k] = int(s);
        v
    })
}

pub fn trivial() -> NaiveAlgebra {
    truncated(1)
}

pub fn center_dim(a: &NaiveAlgebra) -> usize {
    let n = a.dim;
    // unknown z (n coords); rows: coordinate k of z e_i - e_i z
    let mut rows = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let row: Vecr = (0..n)
                .map(|c| {
                    let zc = a.e(c);
                    let lhs = a.mul(&zc, &a.e(i));
                    let rhs = a.mul(&a.e(i), &zc);
                    &lhs[k] - &rhs[k]
                })
                .collect();
            rows.push(row);
        }
    }
    nullity(rows, n)
}

/// Unknown d stored as d[k][i] (coordinate k of d(e_i)) at index i*n + k.
pub fn derivation_dim(a: &NaiveAlgebra) -> usize {
    let n = a.dim;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let prod = a.mul(&a.e(i), &a.e(j));
            for k in 0..n {
                let mut row = vec![R::zero(); n * n];
                // d(e_i e_j)_k = sum_m prod_m d(e_m)_k
                for m in 0..n {
                    row[m * n + k] += prod[m].clone();
                }
                // - (d(e_i) e_j)_k = - sum_m d(e_i)_m (e_m e_j)_k
                for m in 0..n {
                    let t = a.mul(&a.e(m), &a.e(j));
                    row[i * n + m] -= t[k].clone();
                }
                // - (e_i d(e_j))_k
                for m in 0..n {
                    let t = a.mul(&a.e(i), &a.e(m));
                    row[j * n + m] -= t[k].clone();
                }
                rows.push(row);
            }
        }
    }
    nullity(rows, n * n)
}

/// Hom_K(A, A) with Phi stored as phi[i*n + k] = coord k of Phi(e_i).
/// Returns the n*n x n*n matrix of Phi -> a Phi - Phi(a .).
pub fn delta_matrix(a: &NaiveAlgebra, b: usize) -> Vec<Vecr> {
    let n = a.dim;
    let mut m = vec![vec![R::zero(); n * n]; n * n];
    for src in 0..n * n {
        let mut phi = vec![R::zero(); n * n];
        phi[src] = R::one();
        let apply = |v: &[R]| -> Vecr {
            let mut out = vec![R::zero(); n];
            for i in 0..n {
                for k in 0..n {
                    out[k] += &v[i] * &phi[i * n + k];
                }
            }
            out
        };
        for i in 0..n {
            let left = a.mul(&a.e(b), &apply(&a.e(i)));
            let right = apply(&a.mul(&a.e(b), &a.e(i)));
            for k in 0..n {
                m[i * n + k][src] = &left[k] - &right[k];
            }
        }
    }
    m
}

/// Phi -> Phi(.) b - Phi(. b)
pub fn delta_bar_matrix(a: &NaiveAlgebra, b: usize) -> Vec<Vecr> {
    let n = a.dim;
    let mut m = vec![vec![R::zero(); n * n]; n * n];
    for src in 0..n * n {
        let mut phi = vec![R::zero(); n * n];
        phi[src] = R::one();
        let apply = |v: &[R]| -> Vecr {
            let mut out = vec![R::zero(); n];
            for i in 0..n {
                for k in 0..n {
                    out[k] += &v[i] * &phi[i * n + k];
                }
            }
            out
        };
        for i in 0..n {
            let left = a.mul(&apply(&a.e(i)), &a.e(b));
            let right = apply(&a.mul(&a.e(i), &a.e(b)));
            for k in 0..n {
                m[i * n + k][src] = &left[k] - &right[k];
            }
        }
    }
    m
}

pub fn mat_mul(x: &[Vecr], y: &[Vecr]) -> Vec<Vecr> {
    let n = x.len();
    let inner = y.len();
    let cols = y.first().map_or(0, Vec::len);
    let mut out = vec![vec![R::zero(); cols]; n];
    for i in 0..n {
        for k in 0..inner {
            if x[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                let t = &x[i][k] * &y[k][j];
                out[i][j] += t;
            }
        }
    }
    out
}

/// dim { Phi : delta_{a_0} ... delta_{a_r} Phi = 0 for all basis tuples }, P = Q = A.
pub fn iterated_diff_dim(a: &NaiveAlgebra, r: usize) -> usize {
    let n = a.dim;
    let deltas: Vec<_> = (0..n).map(|b| delta_matrix(a, b)).collect();
    let mut ops: Vec<Vec<Vecr>> = deltas.clone();
    for _ in 0..r {
        let mut next = Vec::new();
        for op in &ops {
            for d in &deltas {
                next.push(mat_mul(d, op));
            }
        }
        ops = next;
    }
    let rows: Vec<Vecr> = ops.into_iter().flatten().collect();
    nullity(rows, n * n)
}

/// dim { Phi : Phi(a p) = a Phi(p) } for P = Q = A, and additionally
/// Phi(p a) = Phi(p) a when `bimodule`.
pub fn hom_self_dim(a: &NaiveAlgebra, bimodule: bool) -> usize {
    let n = a.dim;
    let mut rows = Vec::new();
    for b in 0..n {
        rows.extend(delta_matrix(a, b));
        if bimodule {
            rows.extend(delta_bar_matrix(a, b));
        }
    }
    nullity(rows, n * n)
}

/// Span closure: repeatedly add images of the current basis under `ops`.
pub fn closure_dim(ops: &[Vec<Vecr>], seed: Vec<Vecr>, ambient: usize) -> usize {
    let mut vectors = seed;
    let mut d = if vectors.is_empty() { 0 } else { rank(vectors.clone()) };
    loop {
        let mut grown = vectors.clone();
        for v in &vectors {
            for op in ops {
                let w: Vecr = op.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect();
                grown.push(w);
            }
        }
        let nd = rank(grown.clone());
        // keep a reduced generating set small
        vectors = basis_of(grown, ambient);
        if nd == d {
            return nd;
        }
        d = nd;
    }
}

pub fn basis_of(vectors: Vec<Vecr>, ambient: usize) -> Vec<Vecr> {
    let mut out: Vec<Vecr> = Vec::new();
    for v in vectors {
        let mut trial = out.clone();
        trial.push(v.clone());
        if rank(trial) > out.len() {
            out.push(v);
        }
    }
    let _ = ambient;
    out
}

/// Left zero-order stage (left-center definition) for P = Q = A:
/// closure of ker(all delta) under Phi -> a Phi and Phi -> Phi(a .).
pub fn left_zero_order_dim(a: &NaiveAlgebra) -> usize {
    let n = a.dim;
    let mut rows = Vec::new();
    for b in 0..n {
        rows.extend(delta_matrix(a, b));
    }
    let z0 = null_space(rows, n * n);
    let mut ops = Vec::new();
    for b in 0..n {
        ops.push(hom_op(a, |phi_of, i| a.mul(&a.e(b), &phi_of(&a.e(i)))));
        ops.push(hom_op(a, |phi_of, i| phi_of(&a.mul(&a.e(b), &a.e(i)))));
    }
    closure_dim(&ops, z0, n * n)
}

/// Right zero-order stage for P = Q = A: span of Phi(.) b over Phi in ker(all delta_bar).
pub fn right_zero_order_dim(a: &NaiveAlgebra) -> usize {
    let n = a.dim;
    let mut rows = Vec::new();
    for b in 0..n {
        rows.extend(delta_bar_matrix(a, b));
    }
    let z0 = null_space(rows, n * n);
    let mut images = Vec::new();
    for b in 0..n {
        let op = hom_op(a, |phi_of, i| a.mul(&phi_of(&a.e(i)), &a.e(b)));
        for v in &z0 {
            images.push(apply(&op, v));
        }
    }
    rank(images)
}

pub fn apply(op: &[Vecr], v: &[R]) -> Vecr {
    op.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// Matrix of a linear operation on Hom_K(A, A) given as
/// `f(phi_of, i) = (T Phi)(e_i)`.
pub fn hom_op(a: &NaiveAlgebra, f: impl Fn(&dyn Fn(&[R]) -> Vecr, usize) -> Vecr) -> Vec<Vecr> {
    let n = a.dim;
    let mut m = vec![vec![R::zero(); n * n]; n * n];
    for src in 0..n * n {
        let mut phi = vec![R::zero(); n * n];
        phi[src] = R::one();
        let phi_of = |v: &[R]| -> Vecr {
            let mut out = vec![R::zero(); n];
            for i in 0..n {
                for k in 0..n {
                    out[k] += &v[i] * &phi[i * n + k];
                }
            }
            out
        };
        for i in 0..n {
            let img = f(&phi_of, i);
            for k in 0..n {
                m[i * n + k][src] = img[k].clone();
            }
        }
    }
    m
}

/// dim J^k(A) for P = A: A (x) A modulo the left-ideal closure of
/// delta^{b_0} ... delta^{b_k}(1 (x) e_p).
pub fn left_jet_dim(a: &NaiveAlgebra, k: usize) -> usize {
    let n = a.dim;
    let idx = |i: usize, j: usize| i * n + j;
    // tensors as n*n vectors
    let tensor = |x: &[R], y: &[R]| -> Vecr {
        let mut out = vec![R::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                out[idx(i, j)] = &x[i] * &y[j];
            }
        }
        out
    };
    let delta_t = |b: usize, t: &[R]| -> Vecr {
        let mut out = vec![R::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let c = &t[idx(i, j)];
                if c.is_zero() {
                    continue;
                }
                let ba = a.mul(&a.e(b), &a.e(i));
                let bp = a.mul(&a.e(b), &a.e(j));
                let t1 = tensor(&ba, &a.e(j));
                let t2 = tensor(&a.e(i), &bp);
                for z in 0..n * n {
                    out[z] += c * (&t1[z] - &t2[z]);
                }
            }
        }
        out
    };
    let mut gens = Vec::new();
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..=k {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |b| {
                    let mut t = t.clone();
                    t.push(b);
                    t
                })
            })
            .collect();
    }
    for p in 0..n {
        for tup in &tuples {
            let mut t = tensor(&a.unit, &a.e(p));
            for &b in tup.iter().rev() {
                t = delta_t(b, &t);
            }
            gens.push(t);
        }
    }
    // left A-action closure: A * span(gens) = span{ e_i g }
    let mut closed = Vec::new();
    for g in &gens {
        for i in 0..n {
            let mut out = vec![R::zero(); n * n];
            for x in 0..n {
                for y in 0..n {
                    let c = &g[idx(x, y)];
                    if c.is_zero() {
                        continue;
                    }
                    let ax = a.mul(&a.e(i), &a.e(x));
                    for z in 0..n {
                        out[idx(z, y)] += c * &ax[z];
                    }
                }
            }
            closed.push(out);
        }
    }
    n * n - rank(closed)
}

/// dim of bimodule maps f: A (x) A (x) A -> A vanishing on the outer-action
/// closure of { dbar^c d^b (1 (x) e_p (x) 1) }. Such f correspond to
/// Psi in Hom_K(A, A) via f(a (x) p (x) c) = a Psi(p) c; the unknowns are
/// the n*n entries of Psi and the constraints are f(g) = 0 for the closure.
pub fn two_sided_jet_hom_dim(a: &NaiveAlgebra) -> usize {
    let n = a.dim;
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let big = n * n * n;
    let basis_t = |i: usize, j: usize, k: usize| unit(big, idx(i, j, k));
    let map_t = |t: &[R], f: &dyn Fn(usize, usize, usize) -> Vecr| -> Vecr {
        let mut out = vec![R::zero(); big];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &t[idx(i, j, k)];
                    if c.is_zero() {
                        continue;
                    }
                    let img = f(i, j, k);
                    for z in 0..big {
                        out[z] += c * &img[z];
                    }
                }
            }
        }
        out
    };
    let triple = |x: &[R], y: &[R], z: &[R]| -> Vecr {
        let mut out = vec![R::zero(); big];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[idx(i, j, k)] = &(&x[i] * &y[j]) * &z[k];
                }
            }
        }
        out
    };
    let _ = basis_t;
    let mut gens = Vec::new();
    for p in 0..n {
        for b in 0..n {
            for c in 0..n {
                let start = triple(&a.unit, &a.e(p), &a.unit);
                let d = map_t(&start, &|i, j, k| {
                    let t1 = triple(&a.mul(&a.e(b), &a.e(i)), &a.e(j), &a.e(k));
                    let t2 = triple(&a.e(i), &a.mul(&a.e(b), &a.e(j)), &a.e(k));
                    t1.iter().zip(&t2).map(|(x, y)| x - y).collect()
                });
                let db = map_t(&d, &|i, j, k| {
                    let t1 = triple(&a.e(i), &a.e(j), &a.mul(&a.e(k), &a.e(c)));
                    let t2 = triple(&a.e(i), &a.mul(&a.e(j), &a.e(c)), &a.e(k));
                    t1.iter().zip(&t2).map(|(x, y)| x - y).collect()
                });
                gens.push(db);
            }
        }
    }
    // outer closure: span{ e_l g e_r }
    let mut closed = Vec::new();
    for g in &gens {
        for l in 0..n {
            for r in 0..n {
                closed.push(map_t(g, &|i, j, k| triple(&a.mul(&a.e(l), &a.e(i)), &a.e(j), &a.mul(&a.e(k), &a.e(r)))));
            }
        }
    }
    let closed = basis_of(closed, big);
    // constraint: f(g) = sum c_{ijk} e_i Psi(e_j) e_k = 0, coordinates in A
    let mut rows = Vec::new();
    for g in &closed {
        for out_k in 0..n {
            let mut row = vec![R::zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let c = &g[idx(i, j, k)];
                        if c.is_zero() {
                            continue;
                        }
                        // Psi(e_j) = sum_m psi[j*n+m] e_m
                        for m in 0..n {
                            let v = a.mul(&a.mul(&a.e(i), &a.e(m)), &a.e(k));
                            row[j * n + m] += c * &v[out_k];
                        }
                    }
                }
            }
            rows.push(row);
        }
    }
    nullity(rows, n * n)
}

/// dim { Delta : dbar_c delta_b Delta = 0 for all basis b, c } for P = Q = A.
pub fn bar1_kernel_dim(a: &NaiveAlgebra) -> usize {
    let n = a.dim;
    let mut rows = Vec::new();
    for b in 0..n {
        let d = delta_matrix(a, b);
        for c in 0..n {
            rows.extend(mat_mul(&delta_bar_matrix(a, c), &d));
        }
    }
    nullity(rows, n * n)
}
