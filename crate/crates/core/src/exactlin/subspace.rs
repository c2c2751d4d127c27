use super::{Echelon, LinError, Matrix, Scalar, SparseVec};

/// A subspace of `K^ambient`, stored as its canonical reduced row-echelon basis.
///
/// Two subspaces are equal iff their bases are identical, so `==` is subspace
/// equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { echelon: Echelon::new(ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, &(0..ambient).map(SparseVec::unit).collect::<Vec<_>>())
    }

    pub fn from_vectors<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut echelon = Echelon::new(ambient);
        echelon.extend(vectors);
        Subspace { echelon }
    }

    pub fn from_dense_vectors(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        let sparse: Vec<SparseVec> = vectors.iter().map(|v| SparseVec::from_dense(v)).collect();
        Self::from_vectors(ambient, &sparse)
    }

    pub fn from_echelon(echelon: Echelon) -> Self {
        Subspace { echelon }
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.ncols()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.echelon.pivots().collect()
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &SparseVec> {
        self.echelon.rows()
    }

    /// Basis as the rows of a matrix in reduced row-echelon form.
    pub fn basis(&self) -> Matrix {
        let rows: Vec<SparseVec> = self.echelon.rows().cloned().collect();
        Matrix::from_sparse_rows(&rows, self.ambient_dim())
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    fn check(&self, other: usize) -> Result<(), LinError> {
        if self.ambient_dim() != other {
            return Err(LinError::AmbientMismatch { left: self.ambient_dim(), right: other });
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &SparseVec) -> Result<bool, LinError> {
        if let Some(c) = v.max_col() {
            if c >= self.ambient_dim() {
                return Err(LinError::AmbientMismatch { left: self.ambient_dim(), right: c + 1 });
            }
        }
        Ok(self.echelon.contains(v))
    }

    pub fn contains_dense(&self, v: &[Scalar]) -> Result<bool, LinError> {
        self.check(v.len())?;
        Ok(self.echelon.contains(&SparseVec::from_dense(v)))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinError> {
        self.check(other.ambient_dim())?;
        Ok(other.basis_vectors().all(|v| self.echelon.contains(v)))
    }

    /// First basis vector of `other` not in `self`, if any.
    pub fn first_outside(&self, other: &Subspace) -> Result<Option<SparseVec>, LinError> {
        self.check(other.ambient_dim())?;
        Ok(other.basis_vectors().find(|v| !self.echelon.contains(v)).cloned())
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.echelon.reduce(v)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check(other.ambient_dim())?;
        let (big, small) = if self.dim() >= other.dim() { (self, other) } else { (other, self) };
        let mut echelon = big.echelon.clone();
        echelon.extend(small.basis_vectors());
        Ok(Subspace { echelon })
    }

    /// Computed from the kernel of the stacked system `Σ aᵢuᵢ − Σ bⱼvⱼ = 0`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check(other.ambient_dim())?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim()));
        }
        let u: Vec<&SparseVec> = self.basis_vectors().collect();
        let v: Vec<&SparseVec> = other.basis_vectors().collect();
        let k = u.len();
        let unknowns = k + v.len();
        // One equation per ambient coordinate.
        let mut by_coord: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ambient_dim()];
        for (i, vec) in u.iter().enumerate() {
            for (c, x) in vec.iter() {
                by_coord[*c].push((i, x.clone()));
            }
        }
        for (j, vec) in v.iter().enumerate() {
            for (c, x) in vec.iter() {
                by_coord[*c].push((k + j, -x));
            }
        }
        let mut system = Echelon::new(unknowns);
        for eq in by_coord.into_iter().filter(|e| !e.is_empty()) {
            system.insert(&SparseVec::from_pairs(eq));
        }
        let combos: Vec<SparseVec> = system
            .null_space_vectors()
            .into_iter()
            .map(|coeffs| {
                let mut acc = SparseVec::new();
                for (i, a) in coeffs.iter().filter(|(i, _)| *i < k) {
                    acc = acc.axpy(a, u[*i]);
                }
                acc
            })
            .collect();
        Ok(Subspace::from_vectors(self.ambient_dim(), &combos))
    }

    /// Image of this subspace under a linear map given on basis vectors.
    pub fn image_under(&self, target_dim: usize, map: impl Fn(&SparseVec) -> SparseVec) -> Subspace {
        let images: Vec<SparseVec> = self.basis_vectors().map(&map).collect();
        Subspace::from_vectors(target_dim, &images)
    }

    /// `{x ∈ self : f(x) ∈ target}` for a linear map `f` into a space holding `target`.
    pub fn preimage_within(&self, target: &Subspace, map: impl Fn(&SparseVec) -> SparseVec) -> Subspace {
        let basis: Vec<&SparseVec> = self.basis_vectors().collect();
        // Coefficient vectors c with Σ cᵢ f(bᵢ) ≡ 0 mod target.
        let residues: Vec<SparseVec> = basis.iter().map(|b| target.reduce(&map(b))).collect();
        let mut by_coord: std::collections::BTreeMap<usize, Vec<(usize, Scalar)>> = Default::default();
        for (i, r) in residues.iter().enumerate() {
            for (c, x) in r.iter() {
                by_coord.entry(*c).or_default().push((i, x.clone()));
            }
        }
        let mut system = Echelon::new(basis.len());
        for (_, eq) in by_coord {
            system.insert(&SparseVec::from_pairs(eq));
        }
        let vecs: Vec<SparseVec> = system
            .null_space_vectors()
            .into_iter()
            .map(|coeffs| {
                let mut acc = SparseVec::new();
                for (i, a) in coeffs.iter() {
                    acc = acc.axpy(a, basis[*i]);
                }
                acc
            })
            .collect();
        Subspace::from_vectors(self.ambient_dim(), &vecs)
    }
}
