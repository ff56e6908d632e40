use super::{is_zero_vector, unit_vector, FieldSpec, LinalgError, Matrix, Scalar, Vector};

/// A subspace of `K^n`, stored by its canonical reduced row-echelon basis.
///
/// Two subspaces of the same ambient space are equal as sets exactly when
/// their basis matrices coincide, so `==` is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

/// Quotient `K^n / U` realized by the non-pivot coordinates of `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// `dim x n`, kernel exactly `U`.
    pub projection: Matrix,
    /// `n x dim`, with `projection * section = identity`.
    pub section: Matrix,
    pub dim: usize,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            rows: (0..ambient_dim).map(|i| unit_vector(field, ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span<I>(field: FieldSpec, ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut s = Self::zero(field, ambient_dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn row_space(m: &Matrix) -> Self {
        Self::span(m.field(), m.cols(), m.row_vectors().map(<[Scalar]>::to_vec))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient_dim, &self.rows)
    }

    /// Subtracts the pivot components; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    /// Adds `v` to the span, keeping the basis in reduced echelon form.
    /// Returns whether the dimension grew.
    fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut v = self.reduce(&v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].inv().expect("nonzero leading entry");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &inv * x;
            }
        }
        for row in self.rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let f = row[lead].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.rows.insert(at, v);
        self.pivots.insert(at, lead);
        true
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::AmbientMismatch { expected: self.ambient_dim, found: v.len() });
        }
        Ok(is_zero_vector(&self.reduce(v)))
    }

    pub fn is_subset(&self, other: &Subspace) -> Result<bool, LinalgError> {
        other.check(self)?;
        Ok(self.rows.iter().all(|r| is_zero_vector(&other.reduce(r))))
    }

    /// First basis vector of `self` outside `other`, if any.
    pub fn witness_outside(&self, other: &Subspace) -> Result<Option<Vector>, LinalgError> {
        other.check(self)?;
        Ok(self.rows.iter().find(|r| !is_zero_vector(&other.reduce(r))).cloned())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        Ok(s)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let mut constraints = self.annihilator();
        for r in other.annihilator().rows {
            constraints.insert(r);
        }
        Ok(constraints.annihilator())
    }

    /// `{ w : <w, u> = 0 for all u in self }`; equivalently the kernel of the basis matrix.
    pub fn annihilator(&self) -> Subspace {
        let n = self.ambient_dim;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
            let mut v = unit_vector(self.field, n, f);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -&row[f];
            }
            v
        });
        Subspace::span(self.field, n, vectors.collect::<Vec<_>>())
    }

    pub fn quotient(&self) -> Quotient {
        let n = self.ambient_dim;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let d = free.len();
        let projection = Matrix::from_fn(self.field, d, n, |k, j| {
            let target = free[k];
            if !is_pivot[j] {
                if j == target {
                    self.field.one()
                } else {
                    self.field.zero()
                }
            } else {
                let i = self.pivots.iter().position(|&p| p == j).expect("pivot row");
                -&self.rows[i][target]
            }
        });
        let section =
            Matrix::from_fn(self.field, n, d, |j, k| if free[k] == j { self.field.one() } else { self.field.zero() });
        Quotient { projection, section, dim: d }
    }

    /// Image of the subspace under `op`.
    pub fn image(&self, op: &Matrix) -> Result<Subspace, LinalgError> {
        if op.cols() != self.ambient_dim {
            return Err(LinalgError::AmbientMismatch { expected: self.ambient_dim, found: op.cols() });
        }
        Ok(Subspace::span(self.field, op.rows(), self.rows.iter().map(|r| op.apply(r)).collect::<Vec<_>>()))
    }

    /// Smallest subspace containing `seed` and invariant under every operator.
    pub fn closure_under(operators: &[Matrix], seed: &Subspace) -> Result<Subspace, LinalgError> {
        let n = seed.ambient_dim;
        for op in operators {
            if op.rows() != n || op.cols() != n {
                return Err(LinalgError::AmbientMismatch { expected: n, found: op.cols() });
            }
        }
        let mut current = seed.clone();
        // Only the vectors added in the last round need to be pushed forward.
        let mut frontier: Vec<Vector> = current.rows.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for op in operators {
                    let w = op.apply(v);
                    if current.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        Ok(current)
    }

    /// `{ v : op * v in target }`.
    pub fn preimage(op: &Matrix, target: &Subspace) -> Result<Subspace, LinalgError> {
        if op.rows() != target.ambient_dim {
            return Err(LinalgError::AmbientMismatch { expected: target.ambient_dim, found: op.rows() });
        }
        let constraints = target.annihilator().basis_matrix().mul(op);
        Ok(constraints.kernel())
    }

    /// Joint kernel of a family of operators with common domain `K^n`.
    pub fn joint_kernel<'a, I>(field: FieldSpec, n: usize, operators: I) -> Result<Subspace, LinalgError>
    where
        I: IntoIterator<Item = &'a Matrix>,
    {
        let mut rows = Subspace::zero(field, n);
        for op in operators {
            if op.cols() != n {
                return Err(LinalgError::AmbientMismatch { expected: n, found: op.cols() });
            }
            for r in op.row_vectors() {
                if rows.is_full() {
                    break;
                }
                rows.insert(r.to_vec());
            }
        }
        Ok(rows.annihilator())
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| super::format_vector(r)).collect()
    }
}
