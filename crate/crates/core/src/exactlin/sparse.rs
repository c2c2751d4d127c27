//! Sparse vectors and an incremental reduced row-echelon accumulator.
//!
//! Constraint systems built from structure constants are extremely sparse
//! (a handful of terms per equation) and heavily redundant, so they are fed
//! row by row into [`Echelon`], which keeps a fully reduced basis of the row
//! space seen so far. Because the basis is kept fully reduced, reducing a new
//! row is a single pass over its pivot-column entries.

use std::collections::BTreeMap;

use super::Scalar;

/// Sorted `(column, value)` pairs, no explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> Self {
        pairs.sort_by_key(|(c, _)| *c);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (c, v) in pairs {
            match entries.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += &v,
                _ => entries.push((c, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
        }
    }

    pub fn unit(col: usize) -> Self {
        SparseVec { entries: vec![(col, Scalar::one())] }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (c, v) in &self.entries {
            out[*c] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn max_col(&self) -> Option<usize> {
        self.entries.last().map(|(c, _)| *c)
    }

    pub fn get(&self, col: usize) -> Scalar {
        match self.entries.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(c, v)| (*c, v * s)).collect() }
    }

    /// `self + s * other`.
    pub fn axpy(&self, s: &Scalar, other: &SparseVec) -> SparseVec {
        if s.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, s * &b[j].1));
                j += 1;
            } else {
                let mut v = a[i].1.clone();
                v.add_mul(s, &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn dot_dense(&self, dense: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (c, v) in &self.entries {
            acc.add_mul(v, &dense[*c]);
        }
        acc
    }

    /// Relabels columns through `map`.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(c, v)| (map(*c), v.clone())).collect())
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<I: IntoIterator<Item = (usize, Scalar)>>(iter: I) -> Self {
        SparseVec::from_pairs(iter.into_iter().collect())
    }
}

/// Fully reduced row-echelon basis of a growing row space in `K^ncols`.
///
/// Every stored row has leading coefficient 1 at its pivot and zeros in all
/// other pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows.into_values().collect()
    }

    /// Residue of `v` modulo the current row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        debug_assert!(v.max_col().map_or(true, |c| c < self.ncols));
        if !v.iter().any(|(c, _)| self.rows.contains_key(c)) {
            return v.clone();
        }
        let mut acc = vec![Scalar::zero(); self.ncols];
        for (c, x) in v.iter() {
            acc[*c] = x.clone();
        }
        for (c, x) in v.iter() {
            if let Some(row) = self.rows.get(c) {
                let f = -x;
                for (rc, rv) in row.iter() {
                    acc[*rc].add_mul(&f, rv);
                }
            }
        }
        SparseVec::from_dense(&acc)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the row space. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.leading().cloned() else {
            return false;
        };
        let r = r.scale(&lead.recip());
        for row in self.rows.values_mut() {
            let f = row.get(pivot);
            if !f.is_zero() {
                *row = row.axpy(&(-f), &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    pub fn extend<'a>(&mut self, vs: impl IntoIterator<Item = &'a SparseVec>) {
        for v in vs {
            self.insert(v);
        }
    }

    /// Basis of `{x : r·x = 0 for every row r}`, one vector per free column.
    pub fn null_space_vectors(&self) -> Vec<SparseVec> {
        let mut per_free: BTreeMap<usize, Vec<(usize, Scalar)>> = (0..self.ncols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|c| (c, vec![(c, Scalar::one())]))
            .collect();
        for (&p, row) in &self.rows {
            for (c, v) in row.iter().skip(1) {
                if let Some(vec) = per_free.get_mut(c) {
                    vec.push((p, -v));
                }
            }
        }
        per_free.into_values().map(SparseVec::from_pairs).collect()
    }
}
