//! Differential-operator filtrations of `Hom_K(P, Q)`.
//!
//! Every definition is computed as an increasing chain of subspaces, one per
//! order. Conditions that quantify over all algebra elements are imposed on
//! basis elements only, which is enough because they are multilinear in the
//! algebra arguments.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bimodule::BimoduleError;
use crate::hom::{HomAction, HomSpace};
use crate::linalg::{LinalgError, Matrix, Scalar, Subspace, Vector};

pub const DEFAULT_MAX_ORDER: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DefinitionTag {
    CommIterated,
    CommInductive,
    LeftCenter,
    LeftSum,
    Right,
    TwoSided,
    Bar1,
}

impl DefinitionTag {
    pub const ALL: [DefinitionTag; 7] = [
        DefinitionTag::CommIterated,
        DefinitionTag::CommInductive,
        DefinitionTag::LeftCenter,
        DefinitionTag::LeftSum,
        DefinitionTag::Right,
        DefinitionTag::TwoSided,
        DefinitionTag::Bar1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DefinitionTag::CommIterated => "comm-iterated",
            DefinitionTag::CommInductive => "comm-inductive",
            DefinitionTag::LeftCenter => "left-center",
            DefinitionTag::LeftSum => "left-sum",
            DefinitionTag::Right => "right",
            DefinitionTag::TwoSided => "two-sided",
            DefinitionTag::Bar1 => "bar1",
        }
    }

    pub fn requires_commutative(self) -> bool {
        matches!(self, DefinitionTag::CommIterated | DefinitionTag::CommInductive)
    }
}

impl fmt::Display for DefinitionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DefinitionTag {
    type Err = DiffError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DefinitionTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| DiffError::UnknownDefinition(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommutativeMode {
    Iterated,
    Inductive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeftMode {
    Center,
    Sum,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffError {
    #[error("definition {0} applies to commutative algebras only")]
    NotCommutative(DefinitionTag),
    #[error("order {requested} exceeds the configured maximum {max}")]
    OrderTooLarge { requested: usize, max: usize },
    #[error("the bar1 class is defined for order 1 only, requested {0}")]
    Bar1Order(usize),
    #[error("unknown definition tag {0:?}")]
    UnknownDefinition(String),
    #[error(transparent)]
    Bimodule(#[from] BimoduleError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Increasing chain `stages[0] ⊆ stages[1] ⊆ ...` of subspaces of a Hom-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub tag: DefinitionTag,
    pub stages: Vec<Subspace>,
}

impl Filtration {
    pub fn stage(&self, k: usize) -> &Subspace {
        &self.stages[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.stages.iter().map(Subspace::dim).collect()
    }

    pub fn top(&self) -> &Subspace {
        self.stages.last().expect("at least one stage")
    }

    pub fn is_monotone(&self) -> bool {
        self.stages.windows(2).all(|w| w[0].is_subset(&w[1]).unwrap_or(false))
    }
}

/// Membership of a single map in the two zero-order classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroOrderClass {
    Both,
    LeftOnly,
    RightOnly,
    /// In the span of the two classes but in neither one.
    SpanOnly,
    Neither,
}

impl ZeroOrderClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ZeroOrderClass::Both => "left-and-right",
            ZeroOrderClass::LeftOnly => "left",
            ZeroOrderClass::RightOnly => "right",
            ZeroOrderClass::SpanOnly => "span-only",
            ZeroOrderClass::Neither => "none",
        }
    }

    /// Whether the union reading of the two-sided zero-order class admits the map.
    pub fn in_union(self) -> bool {
        matches!(self, ZeroOrderClass::Both | ZeroOrderClass::LeftOnly | ZeroOrderClass::RightOnly)
    }
}

/// Filtration calculator bound to one Hom-space.
pub struct DiffOperators<'a> {
    hom: &'a HomSpace,
    max_order: usize,
}

impl<'a> DiffOperators<'a> {
    pub fn new(hom: &'a HomSpace) -> Result<Self, DiffError> {
        hom.require_central()?;
        Ok(DiffOperators { hom, max_order: DEFAULT_MAX_ORDER })
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn hom(&self) -> &HomSpace {
        self.hom
    }

    fn check_order(&self, r: usize) -> Result<(), DiffError> {
        if r > self.max_order {
            return Err(DiffError::OrderTooLarge { requested: r, max: self.max_order });
        }
        Ok(())
    }

    fn require_commutative(&self, tag: DefinitionTag) -> Result<(), DiffError> {
        if self.hom.source().algebra().is_commutative() {
            Ok(())
        } else {
            Err(DiffError::NotCommutative(tag))
        }
    }

    pub fn filtration(&self, tag: DefinitionTag, r: usize) -> Result<Filtration, DiffError> {
        match tag {
            DefinitionTag::CommIterated => self.commutative(r, CommutativeMode::Iterated),
            DefinitionTag::CommInductive => self.commutative(r, CommutativeMode::Inductive),
            DefinitionTag::LeftCenter => self.left(r, LeftMode::Center),
            DefinitionTag::LeftSum => self.left(r, LeftMode::Sum),
            DefinitionTag::Right => self.right(r),
            DefinitionTag::TwoSided => self.two_sided(r),
            DefinitionTag::Bar1 => {
                if r != 1 {
                    return Err(DiffError::Bar1Order(r));
                }
                Ok(Filtration { tag, stages: vec![self.hom.hom_aa(), self.bar1()?] })
            }
        }
    }

    /// The commutative definitions: iterated (`delta_{a_0} ... delta_{a_r} Δ = 0`)
    /// or inductive (`delta_a Δ` has order `r - 1`).
    pub fn commutative(&self, r: usize, mode: CommutativeMode) -> Result<Filtration, DiffError> {
        let tag = match mode {
            CommutativeMode::Iterated => DefinitionTag::CommIterated,
            CommutativeMode::Inductive => DefinitionTag::CommInductive,
        };
        self.require_commutative(tag)?;
        self.check_order(r)?;
        let stages = match mode {
            CommutativeMode::Iterated => self.iterated_stages(r),
            CommutativeMode::Inductive => {
                let mut stages = vec![self.hom.hom_a()];
                for _ in 0..r {
                    let prev = stages.last().expect("nonempty");
                    stages.push(self.preimage_all(self.hom.delta_ops(), prev)?);
                }
                stages
            }
        };
        Ok(Filtration { tag, stages })
    }

    /// Stage `k` is the joint kernel of all `(k+1)`-fold composites of basis
    /// deltas. The rows of `delta_{a_0} ∘ ... ∘ delta_{a_k}` are the rows of
    /// the `k`-fold composite multiplied by `delta_{a_k}`, so the row space of
    /// every composite of length `k+1` is built from the one of length `k`.
    fn iterated_stages(&self, r: usize) -> Vec<Subspace> {
        let field = self.hom.field();
        let dim = self.hom.dim();
        let deltas = self.hom.delta_ops();
        let mut rows = Subspace::span(
            field,
            dim,
            deltas.iter().flat_map(|d| d.row_vectors().map(<[Scalar]>::to_vec)).collect::<Vec<_>>(),
        );
        let mut stages = vec![rows.annihilator()];
        for _ in 0..r {
            let mut next = Vec::new();
            for row in rows.basis() {
                let as_matrix = Matrix::from_rows(field, dim, std::slice::from_ref(row));
                for d in deltas {
                    next.push(as_matrix.mul(d).row(0).to_vec());
                }
            }
            rows = Subspace::span(field, dim, next);
            stages.push(rows.annihilator());
        }
        stages
    }

    fn preimage_all(&self, ops: &[Matrix], target: &Subspace) -> Result<Subspace, DiffError> {
        let mut out = self.hom.full();
        for op in ops {
            out = out.intersect(&Subspace::preimage(op, target)?)?;
        }
        Ok(out)
    }

    /// `span{ op_b(w) : w in W, b basis }`.
    fn span_images(&self, ops: &[Matrix], w: &Subspace) -> Subspace {
        let images: Vec<Vector> = w.basis().iter().flat_map(|v| ops.iter().map(move |op| op.apply(v))).collect();
        Subspace::span(self.hom.field(), self.hom.dim(), images)
    }

    fn left_pair_ops(&self) -> Vec<Matrix> {
        let mut ops = self.hom.action_ops(HomAction::Left).to_vec();
        ops.extend_from_slice(self.hom.action_ops(HomAction::BulletLeft));
        ops
    }

    /// Left operators: `Center` builds `I_r` as the submodule generated by the
    /// lift of the center of `Hom / I_{r-1}`; `Sum` builds the finite sums
    /// `b_i Φ^i + Δ_{r-1}`.
    pub fn left(&self, r: usize, mode: LeftMode) -> Result<Filtration, DiffError> {
        self.check_order(r)?;
        let deltas = self.hom.delta_ops();
        let stages = match mode {
            LeftMode::Center => {
                let ops = self.left_pair_ops();
                let mut stages = vec![Subspace::closure_under(&ops, &self.hom.hom_a())?];
                for _ in 0..r {
                    let lift = self.preimage_all(deltas, stages.last().expect("nonempty"))?;
                    stages.push(Subspace::closure_under(&ops, &lift)?);
                }
                stages
            }
            LeftMode::Sum => self.sum_stages(r, deltas, self.hom.action_ops(HomAction::Left))?,
        };
        let tag = match mode {
            LeftMode::Center => DefinitionTag::LeftCenter,
            LeftMode::Sum => DefinitionTag::LeftSum,
        };
        Ok(Filtration { tag, stages })
    }

    fn sum_stages(&self, r: usize, deviations: &[Matrix], actions: &[Matrix]) -> Result<Vec<Subspace>, DiffError> {
        let kernel = Subspace::joint_kernel(self.hom.field(), self.hom.dim(), deviations)?;
        let mut stages = vec![self.span_images(actions, &kernel)];
        for _ in 0..r {
            let prev = stages.last().expect("nonempty").clone();
            let w = self.preimage_all(deviations, &prev)?;
            stages.push(self.span_images(actions, &w).sum(&prev)?);
        }
        Ok(stages)
    }

    /// Right operators: sums `Φ^i b_i + Δ_{r-1}` with `delta_bar_a Φ^i` of order `r - 1`.
    pub fn right(&self, r: usize) -> Result<Filtration, DiffError> {
        self.check_order(r)?;
        let stages = self.sum_stages(r, self.hom.delta_bar_ops(), self.hom.action_ops(HomAction::Right))?;
        Ok(Filtration { tag: DefinitionTag::Right, stages })
    }

    /// Two-sided operators. Stage 0 is the span of the left and right
    /// zero-order classes; see [`DiffOperators::zero_order_class`] for the
    /// elementwise union reading.
    pub fn two_sided(&self, r: usize) -> Result<Filtration, DiffError> {
        self.check_order(r)?;
        let (left0, right0) = self.zero_order_pair()?;
        let mut stages = vec![left0.sum(&right0)?];
        let left_actions = self.hom.action_ops(HomAction::Left);
        let right_actions = self.hom.action_ops(HomAction::Right);
        for _ in 0..r {
            let prev = stages.last().expect("nonempty").clone();
            let w = self.preimage_all(self.hom.delta_ops(), &prev)?;
            let w_bar = self.preimage_all(self.hom.delta_bar_ops(), &prev)?;
            let left_form = self.span_images(left_actions, &w).sum(&prev)?;
            let right_form = self.span_images(right_actions, &w_bar).sum(&prev)?;
            stages.push(left_form.intersect(&right_form)?);
        }
        Ok(Filtration { tag: DefinitionTag::TwoSided, stages })
    }

    fn zero_order_pair(&self) -> Result<(Subspace, Subspace), DiffError> {
        let left0 = self.sum_stages(0, self.hom.delta_ops(), self.hom.action_ops(HomAction::Left))?.remove(0);
        let right0 = self.sum_stages(0, self.hom.delta_bar_ops(), self.hom.action_ops(HomAction::Right))?.remove(0);
        Ok((left0, right0))
    }

    pub fn zero_order_class(&self, v: &[Scalar]) -> Result<ZeroOrderClass, DiffError> {
        let (left0, right0) = self.zero_order_pair()?;
        let in_left = left0.contains(v)?;
        let in_right = right0.contains(v)?;
        Ok(match (in_left, in_right) {
            (true, true) => ZeroOrderClass::Both,
            (true, false) => ZeroOrderClass::LeftOnly,
            (false, true) => ZeroOrderClass::RightOnly,
            (false, false) if left0.sum(&right0)?.contains(v)? => ZeroOrderClass::SpanOnly,
            _ => ZeroOrderClass::Neither,
        })
    }

    /// First-order two-sided operators with `delta_bar_c ∘ delta_b Δ = 0` for all `b, c`.
    pub fn bar1(&self) -> Result<Subspace, DiffError> {
        let t1 = self.two_sided(1)?.stages.pop().expect("two stages");
        let k = Subspace::joint_kernel(self.hom.field(), self.hom.dim(), &self.hom.bar_delta_products())?;
        Ok(t1.intersect(&k)?)
    }

    /// Pairwise containment of every applicable filtration, stage by stage.
    pub fn compare(&self, r: usize) -> Result<Comparison, DiffError> {
        self.check_order(r)?;
        let commutative = self.hom.source().algebra().is_commutative();
        let tags: Vec<DefinitionTag> = DefinitionTag::ALL
            .into_iter()
            .filter(|t| *t != DefinitionTag::Bar1)
            .filter(|t| commutative || !t.requires_commutative())
            .collect();
        let filtrations: Vec<Filtration> = tags.iter().map(|&t| self.filtration(t, r)).collect::<Result<_, _>>()?;
        let mut stages = Vec::with_capacity(r + 1);
        for k in 0..=r {
            let mut cells = Vec::new();
            for (i, fi) in filtrations.iter().enumerate() {
                let mut row = Vec::new();
                for (j, fj) in filtrations.iter().enumerate() {
                    let witness = if i == j { None } else { fi.stage(k).witness_outside(fj.stage(k))? };
                    row.push(Containment { contained: witness.is_none(), witness });
                }
                cells.push(row);
            }
            stages.push(StageComparison {
                order: k,
                dims: filtrations.iter().map(|f| f.stage(k).dim()).collect(),
                cells,
            });
        }
        Ok(Comparison { tags, commutative, filtrations, stages })
    }
}

/// Whether `stage_i ⊆ stage_j`, with a basis vector of `stage_i` outside
/// `stage_j` when not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    pub contained: bool,
    pub witness: Option<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageComparison {
    pub order: usize,
    pub dims: Vec<usize>,
    /// `cells[i][j]` describes `stage_i ⊆ stage_j`.
    pub cells: Vec<Vec<Containment>>,
}

impl StageComparison {
    pub fn equal(&self, i: usize, j: usize) -> bool {
        self.cells[i][j].contained && self.cells[j][i].contained
    }

    pub fn all_equal(&self) -> bool {
        let n = self.cells.len();
        (0..n).all(|i| (0..n).all(|j| self.cells[i][j].contained))
    }
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub tags: Vec<DefinitionTag>,
    pub commutative: bool,
    pub filtrations: Vec<Filtration>,
    pub stages: Vec<StageComparison>,
}

impl Comparison {
    pub fn all_equal(&self) -> bool {
        self.stages.iter().all(StageComparison::all_equal)
    }

    pub fn index_of(&self, tag: DefinitionTag) -> Option<usize> {
        self.tags.iter().position(|t| *t == tag)
    }

    /// Equality of two definitions at every compared stage.
    pub fn agree(&self, a: DefinitionTag, b: DefinitionTag) -> Option<bool> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        Some(self.stages.iter().all(|s| s.equal(i, j)))
    }
}
