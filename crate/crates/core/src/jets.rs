//! Jet modules `J^k(P) = (A ⊗ P) / mu^{k+1}`, the first-order two-sided jet
//! `(A ⊗ P ⊗ A) / mu^1`, factorization of differential operators through
//! them, and the representability checks.

use std::sync::Arc;

use thiserror::Error;

use crate::bimodule::{Bimodule, BimoduleError};
use crate::diffop::{CommutativeMode, DefinitionTag, DiffError, DiffOperators};
use crate::hom::{intertwiners, HomSpace};
use crate::linalg::{is_zero_vector, sub_vectors, FieldSpec, LinalgError, Matrix, Quotient, Scalar, Subspace, Vector};
use crate::tensor::{chain, TensorAP, TensorAPA};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JetError {
    #[error("factorization through J^k requires a commutative algebra")]
    NotCommutative,
    #[error("operator does not have order {0}")]
    OrderViolation(usize),
    #[error("map on A ⊗ P is not left A-linear (fails for basis element e{0})")]
    NotLeftLinear(usize),
    #[error("expected a tuple of {expected} algebra elements, found {found}")]
    TupleLength { expected: usize, found: usize },
    #[error("factorization is not unique: homogeneous system has dimension {0}")]
    NotUnique(usize),
    #[error("map has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape { rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error(transparent)]
    Diff(#[from] DiffError),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JetKind {
    /// `(A ⊗ P) / mu^{k+1}` with `mu^{k+1}` a left submodule.
    Left { order: usize },
    /// `(A ⊗ P ⊗ A) / mu^1` with `mu^1` a two-sided submodule.
    TwoSidedFirst,
}

/// Actions used to close the generators of `mu^1` in the two-sided jet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TwoSidedClosure {
    /// The outer bimodule structure `b (a ⊗ p ⊗ c) b'` only.
    #[default]
    Outer,
    /// Outer structure together with the inner actions on the `P` leg.
    AllFour,
}

#[derive(Clone, Debug)]
pub struct JetModule {
    kind: JetKind,
    base: Arc<Bimodule>,
    ambient_dim: usize,
    mu: Subspace,
    quotient: Quotient,
    left: Vec<Matrix>,
    right: Option<Vec<Matrix>>,
    bullet: Option<Vec<Matrix>>,
    jet_map: Matrix,
}

impl JetModule {
    /// `J^k(P)`: quotient of `A ⊗ P` by the left submodule generated by
    /// `delta^{b_0} ∘ ... ∘ delta^{b_k}(1 ⊗ p)`.
    pub fn left(module: Arc<Bimodule>, k: usize) -> Result<Self, JetError> {
        module.require_central()?;
        let t = TensorAP::new(module.clone());
        let field = t.field();
        let embedding = t.embedding();
        // The span of all (k+1)-fold delta images of 1 ⊗ p, built one delta at a time.
        let mut generators = embedding.image();
        for _ in 0..=k {
            let images: Vec<Vector> =
                generators.basis().iter().flat_map(|v| t.delta_ops().iter().map(move |d| d.apply(v))).collect();
            generators = Subspace::span(field, t.dim(), images);
        }
        let mu = Subspace::closure_under(t.left_ops(), &generators)?;
        let quotient = mu.quotient();
        let left = induce_all(&mu, &quotient, t.left_ops()).expect("mu is closed under the left action");
        let bullet = induce_all(&mu, &quotient, t.bullet_ops());
        let jet_map = quotient.projection.mul(&embedding);
        Ok(JetModule {
            kind: JetKind::Left { order: k },
            base: module,
            ambient_dim: t.dim(),
            mu,
            quotient,
            left,
            right: None,
            bullet,
            jet_map,
        })
    }

    /// First-order two-sided jet, closing `mu^1` under the outer bimodule structure.
    pub fn two_sided_first(module: Arc<Bimodule>) -> Result<Self, JetError> {
        Self::two_sided_first_with(module, TwoSidedClosure::Outer)
    }

    pub fn two_sided_first_with(module: Arc<Bimodule>, closure: TwoSidedClosure) -> Result<Self, JetError> {
        module.require_central()?;
        let t = TensorAPA::new(module.clone());
        let field = t.field();
        let embedding = t.embedding();
        let mut images = Vec::new();
        for start in embedding.image().basis() {
            for d in t.delta_ops() {
                let first = d.apply(start);
                for db in t.delta_bar_ops() {
                    images.push(db.apply(&first));
                }
            }
        }
        let generators = Subspace::span(field, t.dim(), images);
        let mut ops: Vec<Matrix> = t.left_ops().iter().chain(t.right_ops()).cloned().collect();
        if closure == TwoSidedClosure::AllFour {
            ops.extend(t.bullet_left_ops().iter().chain(t.bullet_right_ops()).cloned());
        }
        let mu = Subspace::closure_under(&ops, &generators)?;
        let quotient = mu.quotient();
        let left = induce_all(&mu, &quotient, t.left_ops()).expect("mu is closed under the left action");
        let right = induce_all(&mu, &quotient, t.right_ops()).expect("mu is closed under the right action");
        let bullet = induce_all(&mu, &quotient, t.bullet_left_ops());
        let jet_map = quotient.projection.mul(&embedding);
        Ok(JetModule {
            kind: JetKind::TwoSidedFirst,
            base: module,
            ambient_dim: t.dim(),
            mu,
            quotient,
            left,
            right: Some(right),
            bullet,
            jet_map,
        })
    }

    pub fn kind(&self) -> JetKind {
        self.kind
    }

    pub fn base(&self) -> &Arc<Bimodule> {
        &self.base
    }

    pub fn field(&self) -> FieldSpec {
        self.base.algebra().field()
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn mu(&self) -> &Subspace {
        &self.mu
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    /// Induced left action of each basis element on the quotient.
    pub fn left_ops(&self) -> &[Matrix] {
        &self.left
    }

    /// Induced outer right action (two-sided jet only).
    pub fn right_ops(&self) -> Option<&[Matrix]> {
        self.right.as_deref()
    }

    /// Induced bullet action `b • (a ⊗ p) = a ⊗ bp`, when `mu` is stable under it.
    pub fn bullet_ops(&self) -> Option<&[Matrix]> {
        self.bullet.as_deref()
    }

    /// `P -> J`, `p -> [1 ⊗ p]` (or `[1 ⊗ p ⊗ 1]`).
    pub fn jet_map(&self) -> &Matrix {
        &self.jet_map
    }

    /// Whether the images of the jet map generate the quotient under the
    /// module actions of the jet.
    pub fn is_generated_by_jets(&self) -> bool {
        let ops: Vec<Matrix> = self.left.iter().chain(self.right.iter().flatten()).cloned().collect();
        let seed = self.jet_map.image();
        Subspace::closure_under(&ops, &seed).map(|s| s.is_full()).unwrap_or(false)
    }

    /// Module maps `J -> Q`: left `A`-linear for left jets, bimodule maps for
    /// the two-sided jet. Elements are `dim Q x dim J` maps flattened column-major.
    pub fn module_maps_to(&self, target: &Bimodule) -> Result<Subspace, JetError> {
        self.base.same_algebra(target)?;
        let mut pairs: Vec<(&Matrix, &Matrix)> = self.left.iter().zip(target.left_basis_ops()).collect();
        if let Some(right) = &self.right {
            pairs.extend(right.iter().zip(target.right_basis_ops()));
        }
        Ok(intertwiners(self.field(), self.dim(), target.dim(), &pairs))
    }

    /// `rho(f) = f ∘ J`, as an element of `Hom_K(P, Q)`.
    pub fn precompose(&self, f: &Matrix) -> Vector {
        f.mul(&self.jet_map).to_col_major()
    }

    fn map_from(&self, target: &Bimodule, v: &[Scalar]) -> Matrix {
        Matrix::from_col_major(self.field(), target.dim(), self.dim(), v)
    }
}

fn induce_all(mu: &Subspace, quotient: &Quotient, ops: &[Matrix]) -> Option<Vec<Matrix>> {
    ops.iter()
        .map(|op| {
            let stable = mu.image(op).ok()?.is_subset(mu).ok()?;
            stable.then(|| quotient.projection.mul(op).mul(&quotient.section))
        })
        .collect()
}

/// Outcome of comparing `rho: Hom(J, Q) -> Hom_K(P, Q)` with a class of operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Isomorphism,
    InjectiveNotSurjective,
    NotInjective,
    ImageNotContained,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Isomorphism => "isomorphism",
            Verdict::InjectiveNotSurjective => "injective-not-surjective",
            Verdict::NotInjective => "not-injective",
            Verdict::ImageNotContained => "image-not-contained",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentabilityWitness {
    /// A nonzero module map with `f ∘ J = 0`.
    Kernel { map: Vector },
    /// A module map whose pullback is outside the operator class.
    OutsideClass { map: Vector, pullback: Vector },
    /// An operator in the class that is not a pullback.
    NotAPullback { operator: Vector },
}

#[derive(Clone, Debug)]
pub struct RepresentabilityReport {
    pub tag: DefinitionTag,
    pub order: usize,
    pub jet_dim: usize,
    pub hom_dim: usize,
    pub diff_dim: usize,
    pub image_dim: usize,
    pub image_contained: bool,
    pub verdict: Verdict,
    pub witness: Option<RepresentabilityWitness>,
    /// Pullbacks of a basis of the module maps.
    pub image: Subspace,
}

fn compare_with_class(
    jet: &JetModule,
    target: &Bimodule,
    class: &Subspace,
    tag: DefinitionTag,
    order: usize,
) -> Result<RepresentabilityReport, JetError> {
    let maps = jet.module_maps_to(target)?;
    let field = jet.field();
    let pullbacks: Vec<Vector> = maps.basis().iter().map(|f| jet.precompose(&jet.map_from(target, f))).collect();
    let image = Subspace::span(field, class.ambient_dim(), pullbacks.clone());

    let mut witness = None;
    let verdict = if image.dim() < maps.dim() {
        // rho restricted to maps has a kernel: solve for it in coordinates of the basis.
        let coords = Matrix::from_columns(field, class.ambient_dim(), &pullbacks).kernel();
        let c = &coords.basis()[0];
        let map = crate::linalg::linear_combination(field, maps.ambient_dim(), c, maps.basis());
        witness = Some(RepresentabilityWitness::Kernel { map });
        Verdict::NotInjective
    } else if let Some(i) = pullbacks.iter().position(|v| !class.contains(v).unwrap_or(false)) {
        witness = Some(RepresentabilityWitness::OutsideClass {
            map: maps.basis()[i].clone(),
            pullback: pullbacks[i].clone(),
        });
        Verdict::ImageNotContained
    } else if let Some(op) = class.witness_outside(&image)? {
        witness = Some(RepresentabilityWitness::NotAPullback { operator: op });
        Verdict::InjectiveNotSurjective
    } else {
        Verdict::Isomorphism
    };
    Ok(RepresentabilityReport {
        tag,
        order,
        jet_dim: jet.dim(),
        hom_dim: maps.dim(),
        diff_dim: class.dim(),
        image_dim: image.dim(),
        image_contained: image.is_subset(class)?,
        verdict,
        witness,
        image,
    })
}

/// Compares left-linear maps out of `J^k(P)` with stage `k` of the chosen filtration.
pub fn representability_check(
    source: Arc<Bimodule>,
    target: Arc<Bimodule>,
    k: usize,
    tag: DefinitionTag,
) -> Result<RepresentabilityReport, JetError> {
    let hom = HomSpace::new(source.clone(), target.clone())?;
    let ops = DiffOperators::new(&hom)?;
    let class = if tag == DefinitionTag::Bar1 { ops.bar1()? } else { ops.filtration(tag, k)?.stages.swap_remove(k) };
    let jet = JetModule::left(source, k)?;
    compare_with_class(&jet, &target, &class, tag, k)
}

/// Compares bimodule maps out of the two-sided `J^1(P)` with the bar1 class.
pub fn representability_bar1(source: Arc<Bimodule>, target: Arc<Bimodule>) -> Result<RepresentabilityReport, JetError> {
    representability_bar1_with(source, target, TwoSidedClosure::Outer)
}

pub fn representability_bar1_with(
    source: Arc<Bimodule>,
    target: Arc<Bimodule>,
    closure: TwoSidedClosure,
) -> Result<RepresentabilityReport, JetError> {
    let hom = HomSpace::new(source.clone(), target.clone())?;
    let class = DiffOperators::new(&hom)?.bar1()?;
    let jet = JetModule::two_sided_first_with(source, closure)?;
    compare_with_class(&jet, &target, &class, DefinitionTag::Bar1, 1)
}

/// The unique left-linear `f: J^k(P) -> Q` with `f ∘ J^k = Δ`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub jet: JetModule,
    /// `dim Q x dim J^k(P)`.
    pub map: Matrix,
}

/// Factors an order-`k` operator through `J^k` by solving the linear system
/// on the quotient; uniqueness is re-checked on the homogeneous system.
pub fn factorize(
    source: Arc<Bimodule>,
    target: Arc<Bimodule>,
    operator: &[Scalar],
    k: usize,
) -> Result<Factorization, JetError> {
    if !source.algebra().is_commutative() {
        return Err(JetError::NotCommutative);
    }
    let hom = HomSpace::new(source.clone(), target.clone())?;
    let ops = DiffOperators::new(&hom)?.with_max_order(k.max(crate::diffop::DEFAULT_MAX_ORDER));
    let class = ops.commutative(k, CommutativeMode::Inductive)?.stages.swap_remove(k);
    if !class.contains(operator)? {
        return Err(JetError::OrderViolation(k));
    }
    let jet = JetModule::left(source, k)?;
    let field = jet.field();
    let (jd, qd) = (jet.dim(), target.dim());
    let ij = Matrix::identity(field, jd);
    let iq = Matrix::identity(field, qd);
    let mut blocks: Vec<Matrix> = jet
        .left_ops()
        .iter()
        .zip(target.left_basis_ops())
        .map(|(s, t)| ij.kron(t).sub(&s.transpose().kron(&iq)))
        .collect();
    let linear_rows: usize = blocks.iter().map(Matrix::rows).sum();
    blocks.push(jet.jet_map().transpose().kron(&iq));
    let system = Matrix::vstack(field, jd * qd, &blocks);
    let mut rhs = vec![field.zero(); linear_rows];
    rhs.extend(operator.iter().cloned());

    let homogeneous = system.kernel();
    if !homogeneous.is_zero() {
        return Err(JetError::NotUnique(homogeneous.dim()));
    }
    let x = system.solve(&rhs).ok_or(JetError::OrderViolation(k))?;
    let map = Matrix::from_col_major(field, qd, jd, &x);
    Ok(Factorization { jet, map })
}

/// `delta_{b_0} ∘ ... ∘ delta_{b_k}(f ∘ J)(p) - f(delta^{b_0} ∘ ... ∘ delta^{b_k}(1 ⊗ p))`
/// for a left-linear `f: A ⊗ P -> Q`.
pub fn cc3_residual(
    source: &Arc<Bimodule>,
    target: &Arc<Bimodule>,
    f: &Matrix,
    b_tuple: &[Vector],
    p: &[Scalar],
) -> Result<Vector, JetError> {
    let hom = HomSpace::new(source.clone(), target.clone())?;
    let t = TensorAP::new(source.clone());
    check_left_linear(&t, target, f)?;
    let field = t.field();
    let psi = f.mul(&t.embedding());
    let mut hom_op = Matrix::identity(field, hom.dim());
    let mut tensor_op = Matrix::identity(field, t.dim());
    for b in b_tuple {
        hom_op = hom_op.mul(&hom.delta(b));
        tensor_op = tensor_op.mul(&t.delta(b));
    }
    let lhs = hom.as_map(&hom_op.apply(&psi.to_col_major())).apply(p);
    let rhs = f.apply(&tensor_op.apply(&t.embedding().apply(p)));
    Ok(sub_vectors(&lhs, &rhs))
}

fn check_left_linear(t: &TensorAP, target: &Bimodule, f: &Matrix) -> Result<(), JetError> {
    if f.rows() != target.dim() || f.cols() != t.dim() {
        return Err(JetError::Shape {
            rows: f.rows(),
            cols: f.cols(),
            expected_rows: target.dim(),
            expected_cols: t.dim(),
        });
    }
    for (i, (l, lq)) in t.left_ops().iter().zip(target.left_basis_ops()).enumerate() {
        if f.mul(l) != lq.mul(f) {
            return Err(JetError::NotLeftLinear(i));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cc3Witness {
    pub b_tuple: Vec<usize>,
    pub p_index: usize,
    pub f_index: usize,
    /// `dim Q x (dim A · dim P)`.
    pub f: Matrix,
    pub residual: Vector,
}

/// Left-linear maps `A ⊗ P -> Q`, as `dim Q x (dim A · dim P)` matrices.
pub fn left_linear_maps_on_tensor(source: &Arc<Bimodule>, target: &Bimodule) -> Result<Vec<Matrix>, JetError> {
    source.same_algebra(target)?;
    let t = TensorAP::new(source.clone());
    let pairs: Vec<_> = t.left_ops().iter().zip(target.left_basis_ops()).collect();
    let space = intertwiners(t.field(), t.dim(), target.dim(), &pairs);
    Ok(space.basis().iter().map(|v| Matrix::from_col_major(t.field(), target.dim(), t.dim(), v)).collect())
}

/// Exhaustive search over basis tuples (lexicographic), basis `p`, and a basis
/// of left-linear maps, returning the first nonzero residual.
pub fn cc3_witness_search(
    source: Arc<Bimodule>,
    target: Arc<Bimodule>,
    k: usize,
) -> Result<Option<Cc3Witness>, JetError> {
    source.require_central()?;
    target.require_central()?;
    let hom = HomSpace::new(source.clone(), target.clone())?;
    let t = TensorAP::new(source.clone());
    let field = t.field();
    let n = source.algebra().dim();
    let maps = left_linear_maps_on_tensor(&source, &target)?;
    let embedding = t.embedding();
    let pullbacks: Vec<Vector> = maps.iter().map(|f| f.mul(&embedding).to_col_major()).collect();

    for tuple in basis_tuples(n, k + 1) {
        let hom_op = chain(field, hom.dim(), hom.delta_ops(), &tuple);
        let tensor_op = chain(field, t.dim(), t.delta_ops(), &tuple).mul(&embedding);
        for p in 0..source.dim() {
            for (fi, f) in maps.iter().enumerate() {
                let lhs = hom.as_map(&hom_op.apply(&pullbacks[fi])).column(p);
                let rhs = f.mul(&tensor_op).column(p);
                let residual = sub_vectors(&lhs, &rhs);
                if !is_zero_vector(&residual) {
                    return Ok(Some(Cc3Witness { b_tuple: tuple, p_index: p, f_index: fi, f: f.clone(), residual }));
                }
            }
        }
    }
    Ok(None)
}

/// All tuples in `{0..n}^len`, lexicographic.
pub fn basis_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
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
    out
}
