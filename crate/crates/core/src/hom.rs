//! The space `Hom_K(P, Q)` with its four module structures and the
//! deviation operators `delta_a`, `delta_bar_a`.
//!
//! A map `Phi: P -> Q` is a `dim Q x dim P` matrix, flattened column-major:
//! entry `(q, p)` sits at index `p * dim Q + q`.

use std::sync::Arc;

use crate::bimodule::{Bimodule, BimoduleError};
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace, Vector};

/// Which of the four actions of an algebra element on `Hom_K(P, Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomAction {
    /// `(a Phi)(p) = a Phi(p)`
    Left,
    /// `(Phi • a)(p) = Phi(a p)`
    BulletLeft,
    /// `(Phi a)(p) = Phi(p) a`
    Right,
    /// `(a • Phi)(p) = Phi(p a)`
    BulletRight,
}

#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Arc<Bimodule>,
    target: Arc<Bimodule>,
    left: Vec<Matrix>,
    bullet_left: Vec<Matrix>,
    right: Vec<Matrix>,
    bullet_right: Vec<Matrix>,
    delta: Vec<Matrix>,
    delta_bar: Vec<Matrix>,
}

impl HomSpace {
    pub fn new(source: Arc<Bimodule>, target: Arc<Bimodule>) -> Result<Self, BimoduleError> {
        source.same_algebra(&target)?;
        let field = source.algebra().field();
        let (mp, mq) = (source.dim(), target.dim());
        let ip = Matrix::identity(field, mp);
        let iq = Matrix::identity(field, mq);
        // vec(X Phi Y) = (Y^T kron X) vec(Phi)
        let left: Vec<Matrix> = target.left_basis_ops().iter().map(|l| ip.kron(l)).collect();
        let bullet_left: Vec<Matrix> = source.left_basis_ops().iter().map(|l| l.transpose().kron(&iq)).collect();
        let right: Vec<Matrix> = target.right_basis_ops().iter().map(|r| ip.kron(r)).collect();
        let bullet_right: Vec<Matrix> = source.right_basis_ops().iter().map(|r| r.transpose().kron(&iq)).collect();
        let delta = left.iter().zip(&bullet_left).map(|(a, b)| a.sub(b)).collect();
        let delta_bar = right.iter().zip(&bullet_right).map(|(a, b)| a.sub(b)).collect();
        Ok(HomSpace { source, target, left, bullet_left, right, bullet_right, delta, delta_bar })
    }

    pub fn endomorphisms(module: Arc<Bimodule>) -> Self {
        Self::new(module.clone(), module).expect("same algebra")
    }

    pub fn source(&self) -> &Arc<Bimodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Bimodule> {
        &self.target
    }

    pub fn field(&self) -> FieldSpec {
        self.source.algebra().field()
    }

    pub fn algebra_dim(&self) -> usize {
        self.source.algebra().dim()
    }

    pub fn dim(&self) -> usize {
        self.source.dim() * self.target.dim()
    }

    pub fn require_central(&self) -> Result<(), BimoduleError> {
        self.source.require_central()?;
        self.target.require_central()
    }

    pub fn action_ops(&self, kind: HomAction) -> &[Matrix] {
        match kind {
            HomAction::Left => &self.left,
            HomAction::BulletLeft => &self.bullet_left,
            HomAction::Right => &self.right,
            HomAction::BulletRight => &self.bullet_right,
        }
    }

    /// `delta_{e_i}` for every basis element.
    pub fn delta_ops(&self) -> &[Matrix] {
        &self.delta
    }

    pub fn delta_bar_ops(&self) -> &[Matrix] {
        &self.delta_bar
    }

    /// `delta_a` for an arbitrary algebra element, by linearity in `a`.
    pub fn delta(&self, a: &[Scalar]) -> Matrix {
        self.combine(&self.delta, a)
    }

    pub fn delta_bar(&self, a: &[Scalar]) -> Matrix {
        self.combine(&self.delta_bar, a)
    }

    pub fn action(&self, kind: HomAction, a: &[Scalar]) -> Matrix {
        self.combine(self.action_ops(kind), a)
    }

    fn combine(&self, ops: &[Matrix], a: &[Scalar]) -> Matrix {
        assert_eq!(a.len(), ops.len(), "element has wrong length");
        let mut out = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (c, op) in a.iter().zip(ops) {
            if !c.is_zero() {
                out = out.add(&op.scale(c));
            }
        }
        out
    }

    /// Flattens a `dim Q x dim P` matrix.
    pub fn element(&self, map: &Matrix) -> Vector {
        assert_eq!((map.rows(), map.cols()), (self.target.dim(), self.source.dim()), "map shape");
        map.to_col_major()
    }

    pub fn as_map(&self, v: &[Scalar]) -> Matrix {
        Matrix::from_col_major(self.field(), self.target.dim(), self.source.dim(), v)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field(), self.dim())
    }

    /// Left `A`-linear maps: the joint kernel of every `delta_a`.
    pub fn hom_a(&self) -> Subspace {
        Subspace::joint_kernel(self.field(), self.dim(), &self.delta).expect("square operators")
    }

    /// Bimodule maps: joint kernel of every `delta_a` and `delta_bar_a`.
    pub fn hom_aa(&self) -> Subspace {
        Subspace::joint_kernel(self.field(), self.dim(), self.delta.iter().chain(&self.delta_bar))
            .expect("square operators")
    }

    /// `delta_bar_c ∘ delta_b` for all basis pairs `(b, c)`, indexed `b * n + c`.
    pub fn bar_delta_products(&self) -> Vec<Matrix> {
        let mut out = Vec::with_capacity(self.delta.len() * self.delta_bar.len());
        for d in &self.delta {
            for db in &self.delta_bar {
                out.push(db.mul(d));
            }
        }
        out
    }
}

/// Linear maps `X: K^src -> K^tgt` with `X S_i = T_i X` for every pair
/// `(S_i, T_i)`, flattened column-major.
pub fn intertwiners(field: FieldSpec, src_dim: usize, tgt_dim: usize, pairs: &[(&Matrix, &Matrix)]) -> Subspace {
    let is = Matrix::identity(field, src_dim);
    let it = Matrix::identity(field, tgt_dim);
    let ops: Vec<Matrix> = pairs.iter().map(|(s, t)| is.kron(t).sub(&s.transpose().kron(&it))).collect();
    Subspace::joint_kernel(field, src_dim * tgt_dim, &ops).expect("square operators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::is_zero_vector;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn regular(name: &str) -> Arc<Bimodule> {
        Arc::new(catalog::builtin(name).unwrap().regular)
    }

    #[test]
    fn delta_of_unit_vanishes() {
        for name in catalog::NAMES {
            let h = HomSpace::endomorphisms(regular(name));
            let one = h.source().algebra().unit().clone();
            assert!(h.delta(&one).is_zero(), "{name}");
            assert!(h.delta_bar(&one).is_zero(), "{name}");
        }
    }

    #[test]
    fn transpose_on_m2() {
        let p = regular("m2");
        let h = HomSpace::endomorphisms(p.clone());
        // transpose: e11->e11, e12->e21, e21->e12, e22->e22
        let t = Matrix::from_i64(Q, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        let phi = h.element(&t);
        let a = p.algebra().basis_element(1); // e12
        let out = h.as_map(&h.delta(&a).apply(&phi));
        let e21 = p.algebra().basis_element(2);
        let minus_e11 = p.algebra().element(&[-1, 0, 0, 0]);
        assert_eq!(out.apply(&e21), minus_e11);
    }

    #[test]
    fn a_linear_maps_are_killed_by_delta() {
        let p = regular("trunc3");
        let h = HomSpace::endomorphisms(p.clone());
        let x = p.algebra().basis_element(1);
        // multiplication by x is A-linear for commutative A
        let phi = h.element(&p.algebra().left_mul(&x));
        for d in h.delta_ops() {
            assert!(is_zero_vector(&d.apply(&phi)));
        }
    }

    #[test]
    fn hom_dimensions_on_m2() {
        let h = HomSpace::endomorphisms(regular("m2"));
        assert_eq!(h.hom_a().dim(), 4);
        assert_eq!(h.hom_aa().dim(), 1);
    }

    #[test]
    fn hom_a_of_commutative_is_dim_a() {
        for name in catalog::commutative_names() {
            let h = HomSpace::endomorphisms(regular(name));
            assert_eq!(h.hom_a().dim(), h.algebra_dim(), "{name}");
        }
    }

    #[test]
    fn deltas_commute_with_delta_bars() {
        for name in catalog::NAMES {
            let entry = catalog::builtin(name).unwrap();
            let h = HomSpace::new(Arc::new(entry.regular.clone()), Arc::new(entry.free2.clone())).unwrap();
            for d in h.delta_ops() {
                for db in h.delta_bar_ops() {
                    assert_eq!(d.mul(db), db.mul(d), "{name}");
                }
            }
        }
    }

    #[test]
    fn algebra_mismatch() {
        let err = HomSpace::new(regular("m2"), regular("t2")).unwrap_err();
        assert_eq!(err, BimoduleError::AlgebraMismatch);
    }

    #[test]
    fn intertwiners_match_hom_a() {
        let p = regular("t2");
        let h = HomSpace::endomorphisms(p.clone());
        let pairs: Vec<_> = p.left_basis_ops().iter().map(|l| (l, l)).collect();
        assert_eq!(intertwiners(Q, 3, 3, &pairs), h.hom_a());
    }
}
