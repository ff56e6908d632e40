//! Two-sided modules over an [`Algebra`], given by left and right action
//! matrices for each basis element of the algebra.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::{LinalgError, Matrix, Scalar, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `e_i (e_j p) = (e_i e_j) p`
    LeftAssociativity {
        i: usize,
        j: usize,
    },
    /// `(p e_i) e_j = p (e_i e_j)`
    RightAssociativity {
        i: usize,
        j: usize,
    },
    LeftUnit,
    RightUnit,
    /// `(e_i p) e_j = e_i (p e_j)`
    ActionsCommute {
        i: usize,
        j: usize,
    },
    /// `z p = p z` for the `k`-th basis vector of the center.
    Centrality {
        k: usize,
    },
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::LeftAssociativity { i, j } => write!(f, "left associativity at (e{i}, e{j})"),
            Axiom::RightAssociativity { i, j } => write!(f, "right associativity at (e{i}, e{j})"),
            Axiom::LeftUnit => write!(f, "left unit"),
            Axiom::RightUnit => write!(f, "right unit"),
            Axiom::ActionsCommute { i, j } => write!(f, "left/right actions commute at (e{i}, e{j})"),
            Axiom::Centrality { k } => write!(f, "centrality for center basis vector {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BimoduleError {
    #[error("malformed module data: {0}")]
    Malformed(String),
    #[error("bimodule axiom violated: {0}")]
    Axiom(Axiom),
    #[error("modules are defined over different algebras")]
    AlgebraMismatch,
    #[error("operation requires a central bimodule")]
    NotCentral,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug)]
pub struct RawBimodule {
    pub name: String,
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    algebra: Arc<Algebra>,
    name: String,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    central: bool,
}

impl Bimodule {
    /// Validates every bimodule axiom, including centrality over the center of the algebra.
    pub fn new(algebra: Arc<Algebra>, raw: RawBimodule) -> Result<Self, BimoduleError> {
        let m = Self::build(algebra, raw)?;
        if let Some(k) = m.centrality_failure() {
            return Err(BimoduleError::Axiom(Axiom::Centrality { k }));
        }
        Ok(Bimodule { central: true, ..m })
    }

    /// Like [`Bimodule::new`] but tolerates a failing centrality axiom. Such
    /// modules are rejected by every filtration and jet computation.
    pub fn new_noncentral(algebra: Arc<Algebra>, raw: RawBimodule) -> Result<Self, BimoduleError> {
        let m = Self::build(algebra, raw)?;
        let central = m.centrality_failure().is_none();
        Ok(Bimodule { central, ..m })
    }

    fn build(algebra: Arc<Algebra>, raw: RawBimodule) -> Result<Self, BimoduleError> {
        let n = algebra.dim();
        let field = algebra.field();
        if raw.left.len() != n || raw.right.len() != n {
            return Err(BimoduleError::Malformed(format!(
                "expected {n} left and right action matrices, found {} and {}",
                raw.left.len(),
                raw.right.len()
            )));
        }
        for m in raw.left.iter().chain(&raw.right) {
            if m.rows() != raw.dim || m.cols() != raw.dim {
                return Err(BimoduleError::Malformed(format!(
                    "action matrix is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    raw.dim,
                    raw.dim
                )));
            }
            if m.field() != field {
                return Err(LinalgError::FieldMismatch.into());
            }
        }
        let module =
            Bimodule { algebra, name: raw.name, dim: raw.dim, left: raw.left, right: raw.right, central: false };
        module.check_axioms()?;
        Ok(module)
    }

    fn check_axioms(&self) -> Result<(), BimoduleError> {
        let a = &self.algebra;
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = a.structure_constants(i, j);
                if self.left[i].mul(&self.left[j]) != self.left_action(ij) {
                    return Err(BimoduleError::Axiom(Axiom::LeftAssociativity { i, j }));
                }
                if self.right[j].mul(&self.right[i]) != self.right_action(ij) {
                    return Err(BimoduleError::Axiom(Axiom::RightAssociativity { i, j }));
                }
            }
        }
        let id = Matrix::identity(a.field(), self.dim);
        if self.left_action(a.unit()) != id {
            return Err(BimoduleError::Axiom(Axiom::LeftUnit));
        }
        if self.right_action(a.unit()) != id {
            return Err(BimoduleError::Axiom(Axiom::RightUnit));
        }
        for i in 0..n {
            for j in 0..n {
                if self.left[i].mul(&self.right[j]) != self.right[j].mul(&self.left[i]) {
                    return Err(BimoduleError::Axiom(Axiom::ActionsCommute { i, j }));
                }
            }
        }
        Ok(())
    }

    fn centrality_failure(&self) -> Option<usize> {
        let center = self.algebra.center();
        center.basis().iter().position(|z| self.left_action(z) != self.right_action(z))
    }

    /// The algebra acting on itself by left and right multiplication.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let raw = RawBimodule {
            name: "self".into(),
            dim: algebra.dim(),
            left: algebra.left_basis_ops().to_vec(),
            right: algebra.right_basis_ops().to_vec(),
        };
        Bimodule::new(algebra, raw).expect("regular bimodule is always valid")
    }

    /// `A^rank` with the diagonal actions.
    pub fn free(algebra: Arc<Algebra>, rank: usize) -> Self {
        let id = Matrix::identity(algebra.field(), rank);
        let raw = RawBimodule {
            name: format!("free{rank}"),
            dim: algebra.dim() * rank,
            left: algebra.left_basis_ops().iter().map(|l| id.kron(l)).collect(),
            right: algebra.right_basis_ops().iter().map(|r| id.kron(r)).collect(),
        };
        Bimodule::new(algebra, raw).expect("free bimodule is always valid")
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_central(&self) -> bool {
        self.central
    }

    pub fn require_central(&self) -> Result<(), BimoduleError> {
        if self.central {
            Ok(())
        } else {
            Err(BimoduleError::NotCentral)
        }
    }

    pub fn left_basis_ops(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_basis_ops(&self) -> &[Matrix] {
        &self.right
    }

    /// Matrix of `p -> a p`.
    pub fn left_action(&self, a: &[Scalar]) -> Matrix {
        combine(&self.left, a, self.dim, &self.algebra)
    }

    /// Matrix of `p -> p a`.
    pub fn right_action(&self, a: &[Scalar]) -> Matrix {
        combine(&self.right, a, self.dim, &self.algebra)
    }

    pub fn act_left(&self, a: &[Scalar], p: &[Scalar]) -> Vector {
        self.left_action(a).apply(p)
    }

    pub fn act_right(&self, p: &[Scalar], a: &[Scalar]) -> Vector {
        self.right_action(a).apply(p)
    }

    pub fn same_algebra(&self, other: &Bimodule) -> Result<(), BimoduleError> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra {
            Ok(())
        } else {
            Err(BimoduleError::AlgebraMismatch)
        }
    }
}

fn combine(ops: &[Matrix], a: &[Scalar], dim: usize, algebra: &Algebra) -> Matrix {
    assert_eq!(a.len(), algebra.dim(), "element has wrong length");
    let mut out = Matrix::zeros(algebra.field(), dim, dim);
    for (c, op) in a.iter().zip(ops) {
        if !c.is_zero() {
            out = out.add(&op.scale(c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn regular_and_free_modules_validate() {
        for name in catalog::NAMES {
            let a = Arc::new(catalog::algebra(name).unwrap());
            let p = Bimodule::regular(a.clone());
            assert_eq!(p.dim(), a.dim());
            let f = Bimodule::free(a.clone(), 2);
            assert_eq!(f.dim(), 2 * a.dim());
            assert!(f.is_central());
        }
    }

    #[test]
    fn right_action_must_be_anti_homomorphism() {
        let a = Arc::new(catalog::m2(Q));
        let raw = RawBimodule {
            name: "bad".into(),
            dim: 4,
            left: a.left_basis_ops().to_vec(),
            right: a.left_basis_ops().to_vec(),
        };
        match Bimodule::new(a, raw) {
            Err(BimoduleError::Axiom(Axiom::RightAssociativity { i, j })) => {
                assert!(i < 4 && j < 4);
            }
            other => panic!("expected right associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn non_central_module_is_flagged() {
        // Q x Q acting on Q^2 on the left by the first factor and on the right by the second.
        let a = Arc::new(catalog::product_qq(Q));
        let p1 = Matrix::from_i64(Q, &[&[1]]);
        let z = Matrix::from_i64(Q, &[&[0]]);
        let raw = RawBimodule { name: "twisted".into(), dim: 1, left: vec![p1.clone(), z.clone()], right: vec![z, p1] };
        assert!(matches!(Bimodule::new(a.clone(), raw.clone()), Err(BimoduleError::Axiom(Axiom::Centrality { .. }))));
        let m = Bimodule::new_noncentral(a, raw).unwrap();
        assert!(!m.is_central());
        assert_eq!(m.require_central(), Err(BimoduleError::NotCentral));
    }

    #[test]
    fn malformed_action_count() {
        let a = Arc::new(catalog::dual_numbers(Q));
        let raw = RawBimodule { name: "x".into(), dim: 2, left: vec![], right: vec![] };
        assert!(matches!(Bimodule::new(a, raw), Err(BimoduleError::Malformed(_))));
    }
}
