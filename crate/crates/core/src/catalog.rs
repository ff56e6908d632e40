//! Built-in example algebras over `Q` and their standard bimodules.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{Algebra, RawAlgebra};
use crate::bimodule::Bimodule;
use crate::linalg::{unit_vector, zero_vector, FieldSpec, Vector};

pub const NAMES: [&str; 8] = ["trivial", "dual_numbers", "trunc3", "trunc4", "product_QQ", "m2", "t2", "quaternions"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown catalog entry {0:?}")]
pub struct UnknownEntry(pub String);

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: Arc<Algebra>,
    /// The algebra as a bimodule over itself.
    pub regular: Bimodule,
    /// `A^2` with diagonal actions.
    pub free2: Bimodule,
    pub notes: &'static str,
}

pub fn builtin(name: &str) -> Result<CatalogEntry, UnknownEntry> {
    let (name, notes) = match name {
        "trivial" => ("trivial", "the ground field K, dimension 1"),
        "dual_numbers" => ("dual_numbers", "Q[eps]/(eps^2), basis 1, eps"),
        "trunc3" => ("trunc3", "Q[x]/(x^3), basis 1, x, x^2"),
        "trunc4" => ("trunc4", "Q[x]/(x^4), basis 1, x, x^2, x^3"),
        "product_QQ" => ("product_QQ", "Q x Q, basis of orthogonal idempotents"),
        "m2" => ("m2", "2x2 matrices, matrix units e11, e12, e21, e22"),
        "t2" => ("t2", "upper triangular 2x2 matrices, basis e11, e12, e22"),
        "quaternions" => ("quaternions", "Hamilton quaternions over Q, basis 1, i, j, k"),
        other => return Err(UnknownEntry(other.to_string())),
    };
    let algebra = Arc::new(algebra(name)?);
    Ok(CatalogEntry {
        name,
        regular: Bimodule::regular(algebra.clone()),
        free2: Bimodule::free(algebra.clone(), 2),
        algebra,
        notes,
    })
}

/// Catalog algebra over `Q`.
pub fn algebra(name: &str) -> Result<Algebra, UnknownEntry> {
    let q = FieldSpec::Rationals;
    Ok(match name {
        "trivial" => trivial(q),
        "dual_numbers" => dual_numbers(q),
        "trunc3" => truncated_polynomials(q, 3),
        "trunc4" => truncated_polynomials(q, 4),
        "product_QQ" => product_qq(q),
        "m2" => m2(q),
        "t2" => t2(q),
        "quaternions" => quaternions(q),
        other => return Err(UnknownEntry(other.to_string())),
    })
}

pub fn commutative_names() -> impl Iterator<Item = &'static str> {
    NAMES.into_iter().filter(|n| algebra(n).map(|a| a.is_commutative()).unwrap_or(false))
}

fn build(name: &str, field: FieldSpec, basis: &[&str], unit: Vector, mul: impl Fn(usize, usize) -> Vector) -> Algebra {
    let n = basis.len();
    let raw = RawAlgebra {
        name: name.to_string(),
        field,
        basis: basis.iter().map(|s| s.to_string()).collect(),
        unit,
        mul: (0..n).map(|i| (0..n).map(|j| mul(i, j)).collect()).collect(),
    };
    Algebra::new(raw).expect("catalog algebra validates")
}

pub fn trivial(field: FieldSpec) -> Algebra {
    build("trivial", field, &["1"], vec![field.one()], |_, _| vec![field.one()])
}

pub fn dual_numbers(field: FieldSpec) -> Algebra {
    let mut a = truncated_polynomials(field, 2);
    a = rename(a, "dual_numbers", &["1", "eps"]);
    a
}

/// `K[x]/(x^n)`.
pub fn truncated_polynomials(field: FieldSpec, n: usize) -> Algebra {
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    build(&format!("trunc{n}"), field, &refs, unit_vector(field, n, 0), |i, j| {
        if i + j < n {
            unit_vector(field, n, i + j)
        } else {
            zero_vector(field, n)
        }
    })
}

pub fn product_qq(field: FieldSpec) -> Algebra {
    build("product_QQ", field, &["u1", "u2"], vec![field.one(), field.one()], |i, j| {
        if i == j {
            unit_vector(field, 2, i)
        } else {
            zero_vector(field, 2)
        }
    })
}

/// Matrix units `e_ij e_kl = [j = k] e_il`, ordered e11, e12, e21, e22.
pub fn m2(field: FieldSpec) -> Algebra {
    let mut unit = zero_vector(field, 4);
    unit[0] = field.one();
    unit[3] = field.one();
    build("m2", field, &["e11", "e12", "e21", "e22"], unit, |a, b| {
        let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
        if j == k {
            unit_vector(field, 4, 2 * i + l)
        } else {
            zero_vector(field, 4)
        }
    })
}

/// Upper triangular matrices, ordered e11, e12, e22.
pub fn t2(field: FieldSpec) -> Algebra {
    const POS: [(usize, usize); 3] = [(0, 0), (0, 1), (1, 1)];
    let index = |r: usize, c: usize| POS.iter().position(|&p| p == (r, c)).expect("upper triangular");
    build("t2", field, &["e11", "e12", "e22"], vec![field.one(), field.zero(), field.one()], |a, b| {
        let ((i, j), (k, l)) = (POS[a], POS[b]);
        if j == k {
            unit_vector(field, 3, index(i, l))
        } else {
            zero_vector(field, 3)
        }
    })
}

/// `i^2 = j^2 = k^2 = -1`, `ij = k`, `jk = i`, `ki = j`.
pub fn quaternions(field: FieldSpec) -> Algebra {
    const TABLE: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    build("quaternions", field, &["1", "i", "j", "k"], unit_vector(field, 4, 0), |a, b| {
        let (sign, idx) = TABLE[a][b];
        let mut v = zero_vector(field, 4);
        v[idx] = field.from_i64(sign);
        v
    })
}

fn rename(a: Algebra, name: &str, basis: &[&str]) -> Algebra {
    let mut raw = a.to_raw();
    raw.name = name.to_string();
    raw.basis = basis.iter().map(|s| s.to_string()).collect();
    Algebra::new(raw).expect("renaming keeps validity")
}
