//! Subspaces of k^n with canonical (RREF) bases.

use super::SparseMatrix;
use crate::field::{FieldElement, FieldSpec};

/// A subspace represented by its reduced-row-echelon basis, which makes
/// equality testing a structural comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows, pivot columns ascending.
    basis: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &FieldSpec, ambient: usize) -> Self {
        Self::from_vectors(field, ambient, &standard_basis(field, ambient))
    }

    pub fn from_vectors(field: &FieldSpec, ambient: usize, vectors: &[Vec<FieldElement>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        let r = SparseMatrix::from_rows_vec(field, vectors).rref(field);
        Subspace { ambient, basis: r.rows, pivots: r.pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, field: &FieldSpec, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // reduce v against the RREF basis
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if !field.is_zero(&w[pc]) {
                let f = w[pc].clone();
                for j in 0..self.ambient {
                    let t = field.mul(&f, &row[j]);
                    w[j] = field.sub(&w[j], &t);
                }
            }
        }
        w.iter().all(|x| field.is_zero(x))
    }

    pub fn contains_subspace(&self, field: &FieldSpec, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(field, v))
    }

    pub fn sum(&self, field: &FieldSpec, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_vectors(field, self.ambient, &rows)
    }

    /// Intersection via the Zassenhaus block trick: rows [u | u] for u in U
    /// and [w | 0] for w in W; echelon rows with zero left block carry the
    /// intersection in their right block.
    pub fn intersect(&self, field: &FieldSpec, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        for u in &self.basis {
            let mut r = u.clone();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for w in &other.basis {
            let mut r = w.clone();
            r.extend(std::iter::repeat(field.zero()).take(n));
            rows.push(r);
        }
        let rref = SparseMatrix::from_rows_vec(field, &rows).rref(field);
        let mut inter_rows = Vec::new();
        for row in &rref.rows {
            if row[..n].iter().all(|x| field.is_zero(x)) {
                inter_rows.push(row[n..].to_vec());
            }
        }
        Subspace::from_vectors(field, n, &inter_rows)
    }

    /// Representatives of the ambient quotient k^n / self: the standard
    /// basis vectors at non-pivot coordinates.
    pub fn quotient_reps(&self, field: &FieldSpec) -> Vec<Vec<FieldElement>> {
        let pivot_set: std::collections::BTreeSet<usize> = self.pivots.iter().copied().collect();
        (0..self.ambient)
            .filter(|j| !pivot_set.contains(j))
            .map(|j| unit_vector(field, self.ambient, j))
            .collect()
    }

    /// Representatives of U/W for W = self ⊆ U: basis rows of U that
    /// extend W, taken greedily in RREF order (deterministic).
    pub fn quotient_reps_within(
        &self,
        field: &FieldSpec,
        bigger: &Subspace,
    ) -> Vec<Vec<FieldElement>> {
        assert!(bigger.contains_subspace(field, self), "quotient needs self ⊆ bigger");
        let mut acc = self.clone();
        let mut reps = Vec::new();
        for v in &bigger.basis {
            if !acc.contains(field, v) {
                reps.push(v.clone());
                acc = acc.sum(field, &Subspace::from_vectors(field, self.ambient, &[v.clone()]));
            }
        }
        reps
    }

    /// Coordinates of v in this subspace's basis (None if v is outside).
    pub fn coordinates(&self, field: &FieldSpec, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        // with an RREF basis the coordinates are just the pivot entries
        if !self.contains(field, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }
}

pub(crate) fn unit_vector(field: &FieldSpec, n: usize, j: usize) -> Vec<FieldElement> {
    let mut v = vec![field.zero(); n];
    v[j] = field.one();
    v
}

pub(crate) fn standard_basis(field: &FieldSpec, n: usize) -> Vec<Vec<FieldElement>> {
    (0..n).map(|j| unit_vector(field, n, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_field_spec;

    fn vecs(field: &FieldSpec, data: &[&[i64]]) -> Vec<Vec<FieldElement>> {
        data.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect()
    }

    #[test]
    fn self_intersection() {
        let q = parse_field_spec("Q").unwrap();
        let u = Subspace::from_vectors(&q, 2, &vecs(&q, &[&[1, 0]]));
        assert_eq!(u.intersect(&q, &u), u);
    }

    #[test]
    fn transverse_lines_in_the_plane() {
        let q = parse_field_spec("Q").unwrap();
        let u = Subspace::from_vectors(&q, 2, &vecs(&q, &[&[1, 0]]));
        let w = Subspace::from_vectors(&q, 2, &vecs(&q, &[&[0, 1]]));
        assert_eq!(u.sum(&q, &w), Subspace::full(&q, 2));
        assert_eq!(u.intersect(&q, &w).dim(), 0);
    }

    #[test]
    fn quotient_by_diagonal_has_one_representative() {
        let q = parse_field_spec("Q").unwrap();
        let w = Subspace::from_vectors(&q, 2, &vecs(&q, &[&[1, 1]]));
        let reps = w.quotient_reps(&q);
        // rank-nullity oracle: dim(k²/W) = 2 - 1 = 1
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0], vec![q.zero(), q.one()]);
    }

    #[test]
    fn coordinates_in_rref_basis() {
        let q = parse_field_spec("Q").unwrap();
        let u = Subspace::from_vectors(&q, 3, &vecs(&q, &[&[1, 0, 2], &[0, 1, 3]]));
        let v = vec![q.from_i64(2), q.from_i64(-1), q.from_i64(1)];
        let coords = u.coordinates(&q, &v).unwrap();
        assert_eq!(coords, vec![q.from_i64(2), q.from_i64(-1)]);
        assert!(u.coordinates(&q, &[q.one(), q.zero(), q.zero()]).is_none());
    }
}
