//! Finite-dimensional unital associative algebras given by structure constants.

use thiserror::Error;

use crate::linalg::{
    is_zero_vector, linear_combination, unit_vector, zero_vector, FieldSpec, LinalgError, Matrix, Scalar, Subspace,
    Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed algebra data: {0}")]
    Malformed(String),
    #[error("not associative: (e{i} e{j}) e{k} != e{i} (e{j} e{k})")]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("unit axiom fails on basis element e{i}")]
    UnitViolation { i: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Unvalidated structure-constant data: `mul[i][j]` holds the coordinates of `e_i e_j`.
#[derive(Clone, Debug)]
pub struct RawAlgebra {
    pub name: String,
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub unit: Vector,
    pub mul: Vec<Vec<Vector>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    field: FieldSpec,
    basis: Vec<String>,
    unit: Vector,
    table: Vec<Vec<Vector>>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    commutative: bool,
}

impl Algebra {
    /// Checks shapes, associativity on all basis triples and the two-sided unit.
    pub fn new(raw: RawAlgebra) -> Result<Self, AlgebraError> {
        let n = raw.basis.len();
        let field = raw.field;
        if n == 0 {
            return Err(AlgebraError::Malformed("dimension must be positive".into()));
        }
        if raw.unit.len() != n {
            return Err(AlgebraError::Malformed(format!("unit has {} coordinates, expected {n}", raw.unit.len())));
        }
        if raw.mul.len() != n {
            return Err(AlgebraError::Malformed(format!("mul has {} rows, expected {n}", raw.mul.len())));
        }
        for (i, row) in raw.mul.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::Malformed(format!("mul[{i}] has {} entries, expected {n}", row.len())));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != n {
                    return Err(AlgebraError::Malformed(format!("mul[{i}][{j}] has {} coordinates", v.len())));
                }
            }
        }
        if raw.unit.iter().chain(raw.mul.iter().flatten().flatten()).any(|x| x.field() != field) {
            return Err(LinalgError::FieldMismatch.into());
        }

        let left: Vec<Matrix> = (0..n).map(|i| Matrix::from_fn(field, n, n, |k, j| raw.mul[i][j][k].clone())).collect();
        let right: Vec<Matrix> =
            (0..n).map(|i| Matrix::from_fn(field, n, n, |k, j| raw.mul[j][i][k].clone())).collect();

        let mut alg = Algebra {
            name: raw.name,
            field,
            basis: raw.basis,
            unit: raw.unit,
            table: raw.mul,
            left,
            right,
            commutative: false,
        };

        for i in 0..n {
            for j in 0..n {
                let ij = &alg.table[i][j];
                for k in 0..n {
                    let lhs = alg.right_mul(&unit_vector(field, n, k)).apply(ij);
                    let rhs = alg.left_mul(&unit_vector(field, n, i)).apply(&alg.table[j][k]);
                    if lhs != rhs {
                        return Err(AlgebraError::NonAssociative { i, j, k });
                    }
                }
            }
        }
        let l1 = alg.left_mul(&alg.unit);
        let r1 = alg.right_mul(&alg.unit);
        let id = Matrix::identity(field, n);
        for i in 0..n {
            if l1.column(i) != id.column(i) || r1.column(i) != id.column(i) {
                return Err(AlgebraError::UnitViolation { i });
            }
        }
        alg.commutative = (0..n).all(|i| (i + 1..n).all(|j| alg.table[i][j] == alg.table[j][i]));
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// Coordinates of `e_i e_j`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn basis_element(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.field, self.dim())
    }

    /// Element from small integer coordinates.
    pub fn element(&self, coords: &[i64]) -> Vector {
        assert_eq!(coords.len(), self.dim(), "coordinate count");
        coords.iter().map(|&c| self.field.from_i64(c)).collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.left_mul(x).apply(y)
    }

    /// Matrix of `x -> a x` on coordinates.
    pub fn left_mul(&self, a: &[Scalar]) -> Matrix {
        self.combine(&self.left, a)
    }

    /// Matrix of `x -> x a` on coordinates.
    pub fn right_mul(&self, a: &[Scalar]) -> Matrix {
        self.combine(&self.right, a)
    }

    pub fn left_basis_ops(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_basis_ops(&self) -> &[Matrix] {
        &self.right
    }

    pub fn mult_operators(&self, a: &[Scalar]) -> (Matrix, Matrix) {
        (self.left_mul(a), self.right_mul(a))
    }

    fn combine(&self, ops: &[Matrix], a: &[Scalar]) -> Matrix {
        assert_eq!(a.len(), self.dim(), "element has wrong length");
        let n = self.dim();
        let mut out = Matrix::zeros(self.field, n, n);
        for (c, op) in a.iter().zip(ops) {
            if !c.is_zero() {
                out = out.add(&op.scale(c));
            }
        }
        out
    }

    pub fn center(&self) -> Subspace {
        let ops: Vec<Matrix> = (0..self.dim()).map(|i| self.right[i].sub(&self.left[i])).collect();
        Subspace::joint_kernel(self.field, self.dim(), &ops).expect("square operators")
    }

    /// Inner derivation `x -> a x - x a`, as an element of `Hom_K(A, A)` flattened column-major.
    pub fn inner_derivation(&self, a: &[Scalar]) -> Vector {
        self.left_mul(a).sub(&self.right_mul(a)).to_col_major()
    }

    /// Leibniz residual `d(e_i e_j) - d(e_i) e_j - e_i d(e_j)` for all `i, j`,
    /// concatenated; `d` is an `n x n` matrix on coordinates.
    pub fn leibniz_defect(&self, d: &Matrix) -> Vector {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n * n);
        for i in 0..n {
            let di = d.column(i);
            for j in 0..n {
                let dij = d.apply(&self.table[i][j]);
                let a = self.right[j].apply(&di);
                let b = self.left[i].apply(&d.column(j));
                for k in 0..n {
                    out.push(&(&dij[k] - &a[k]) - &b[k]);
                }
            }
        }
        out
    }

    pub fn is_derivation(&self, d: &Matrix) -> bool {
        is_zero_vector(&self.leibniz_defect(d))
    }

    /// All derivations, as a subspace of the `n^2`-dimensional `Hom_K(A, A)`.
    pub fn derivations(&self) -> Subspace {
        let n = self.dim();
        let columns: Vec<Vector> = (0..n * n)
            .map(|u| {
                let d = Matrix::from_col_major(self.field, n, n, &unit_vector(self.field, n * n, u));
                self.leibniz_defect(&d)
            })
            .collect();
        Matrix::from_columns(self.field, n * n * n, &columns).kernel()
    }

    pub fn is_central(&self, z: &[Scalar]) -> bool {
        self.center().contains(z).unwrap_or(false)
    }

    /// Products of pairs of center basis vectors; used to spot-check closure.
    pub fn center_products(&self) -> Vec<Vector> {
        let c = self.center();
        let mut out = Vec::new();
        for x in c.basis() {
            for y in c.basis() {
                out.push(self.mul(x, y));
            }
        }
        out
    }

    /// Human-readable form such as `e11 - 2 e12 + 1/2 e22`.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (c, name) in v.iter().zip(&self.basis).filter(|(c, _)| !c.is_zero()) {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            let sep = match (out.is_empty(), negative) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            out.push_str(sep);
            if !magnitude.is_one() {
                out.push_str(&format!("{magnitude} "));
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// The structure-constant data this algebra was built from.
    pub fn to_raw(&self) -> RawAlgebra {
        RawAlgebra {
            name: self.name.clone(),
            field: self.field,
            basis: self.basis.clone(),
            unit: self.unit.clone(),
            mul: self.table.clone(),
        }
    }

    pub fn linear_combination(&self, coeffs: &[Scalar], elements: &[Vector]) -> Vector {
        linear_combination(self.field, self.dim(), coeffs, elements)
    }
}
