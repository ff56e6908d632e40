//! Tensor products over the ground field: `A ⊗ P` and `A ⊗ P ⊗ A`, with the
//! tensor deviation operators `delta^b` and `delta_bar^b`.
//!
//! Coordinates: `e_i ⊗ p_j` sits at `i * dim P + j`; `e_i ⊗ p_j ⊗ e_k` at
//! `(i * dim P + j) * dim A + k`.

use std::sync::Arc;

use crate::bimodule::Bimodule;
use crate::linalg::{FieldSpec, Matrix, Scalar, Vector};

/// `A ⊗ P` with `b(a ⊗ p) = ba ⊗ p` and `b • (a ⊗ p) = a ⊗ bp`.
#[derive(Clone, Debug)]
pub struct TensorAP {
    module: Arc<Bimodule>,
    left: Vec<Matrix>,
    bullet: Vec<Matrix>,
    delta: Vec<Matrix>,
}

impl TensorAP {
    pub fn new(module: Arc<Bimodule>) -> Self {
        let a = module.algebra().clone();
        let field = a.field();
        let ip = Matrix::identity(field, module.dim());
        let ia = Matrix::identity(field, a.dim());
        let left: Vec<Matrix> = a.left_basis_ops().iter().map(|l| l.kron(&ip)).collect();
        let bullet: Vec<Matrix> = module.left_basis_ops().iter().map(|l| ia.kron(l)).collect();
        let delta = left.iter().zip(&bullet).map(|(x, y)| x.sub(y)).collect();
        TensorAP { module, left, bullet, delta }
    }

    pub fn module(&self) -> &Arc<Bimodule> {
        &self.module
    }

    pub fn field(&self) -> FieldSpec {
        self.module.algebra().field()
    }

    pub fn dim(&self) -> usize {
        self.module.algebra().dim() * self.module.dim()
    }

    pub fn left_ops(&self) -> &[Matrix] {
        &self.left
    }

    pub fn bullet_ops(&self) -> &[Matrix] {
        &self.bullet
    }

    /// `delta^{e_i}` for each basis element.
    pub fn delta_ops(&self) -> &[Matrix] {
        &self.delta
    }

    pub fn delta(&self, b: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim(), &self.delta, b)
    }

    pub fn pure(&self, a: &[Scalar], p: &[Scalar]) -> Vector {
        a.iter().flat_map(|x| p.iter().map(move |y| x * y)).collect()
    }

    /// Matrix of `J: p -> 1 ⊗ p`.
    pub fn embedding(&self) -> Matrix {
        let one =
            Matrix::from_columns(self.field(), self.module.algebra().dim(), &[self.module.algebra().unit().clone()]);
        one.kron(&Matrix::identity(self.field(), self.module.dim()))
    }

    /// `delta^{b_0} ∘ ... ∘ delta^{b_k}` for a tuple of basis indices.
    pub fn delta_chain(&self, tuple: &[usize]) -> Matrix {
        chain(self.field(), self.dim(), &self.delta, tuple)
    }
}

/// `A ⊗ P ⊗ A` with the outer two-sided structure, the inner (bullet)
/// structures, `delta^b` on the left pair and `delta_bar^b` on the right pair.
#[derive(Clone, Debug)]
pub struct TensorAPA {
    module: Arc<Bimodule>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    bullet_left: Vec<Matrix>,
    bullet_right: Vec<Matrix>,
    delta: Vec<Matrix>,
    delta_bar: Vec<Matrix>,
}

impl TensorAPA {
    pub fn new(module: Arc<Bimodule>) -> Self {
        let a = module.algebra().clone();
        let field = a.field();
        let ip = Matrix::identity(field, module.dim());
        let ia = Matrix::identity(field, a.dim());
        let ipa = ip.kron(&ia);
        let iap = ia.kron(&ip);
        let left: Vec<Matrix> = a.left_basis_ops().iter().map(|l| l.kron(&ipa)).collect();
        let right: Vec<Matrix> = a.right_basis_ops().iter().map(|r| iap.kron(r)).collect();
        let bullet_left: Vec<Matrix> = module.left_basis_ops().iter().map(|l| ia.kron(l).kron(&ia)).collect();
        let bullet_right: Vec<Matrix> = module.right_basis_ops().iter().map(|r| ia.kron(r).kron(&ia)).collect();
        let delta = left.iter().zip(&bullet_left).map(|(x, y)| x.sub(y)).collect();
        let delta_bar = right.iter().zip(&bullet_right).map(|(x, y)| x.sub(y)).collect();
        TensorAPA { module, left, right, bullet_left, bullet_right, delta, delta_bar }
    }

    pub fn module(&self) -> &Arc<Bimodule> {
        &self.module
    }

    pub fn field(&self) -> FieldSpec {
        self.module.algebra().field()
    }

    pub fn dim(&self) -> usize {
        let n = self.module.algebra().dim();
        n * self.module.dim() * n
    }

    pub fn left_ops(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_ops(&self) -> &[Matrix] {
        &self.right
    }

    pub fn bullet_left_ops(&self) -> &[Matrix] {
        &self.bullet_left
    }

    pub fn bullet_right_ops(&self) -> &[Matrix] {
        &self.bullet_right
    }

    pub fn delta_ops(&self) -> &[Matrix] {
        &self.delta
    }

    pub fn delta_bar_ops(&self) -> &[Matrix] {
        &self.delta_bar
    }

    pub fn delta(&self, b: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim(), &self.delta, b)
    }

    pub fn delta_bar(&self, b: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim(), &self.delta_bar, b)
    }

    /// Matrix of `J: p -> 1 ⊗ p ⊗ 1`.
    pub fn embedding(&self) -> Matrix {
        let a = self.module.algebra();
        let one = Matrix::from_columns(self.field(), a.dim(), &[a.unit().clone()]);
        one.kron(&Matrix::identity(self.field(), self.module.dim())).kron(&one)
    }
}

fn combine(field: FieldSpec, dim: usize, ops: &[Matrix], b: &[Scalar]) -> Matrix {
    assert_eq!(b.len(), ops.len(), "element has wrong length");
    let mut out = Matrix::zeros(field, dim, dim);
    for (c, op) in b.iter().zip(ops) {
        if !c.is_zero() {
            out = out.add(&op.scale(c));
        }
    }
    out
}

/// Composite `ops[t_0] ∘ ops[t_1] ∘ ... ∘ ops[t_k]` (rightmost applied first).
pub(crate) fn chain(field: FieldSpec, dim: usize, ops: &[Matrix], tuple: &[usize]) -> Matrix {
    let mut out = Matrix::identity(field, dim);
    for &t in tuple {
        out = out.mul(&ops[t]);
    }
    out
}
