//! Sparse exact linear algebra over a [`FieldSpec`].
//!
//! All results are canonical: elimination may pick pivots for sparsity, but
//! every public answer is read off the reduced row echelon form, which is
//! unique, so bases and solutions are deterministic and test-stable.

mod subspace;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

pub use subspace::Subspace;

/// Row-major sparse matrix; no explicit zeros are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), FieldElement>,
}

/// Reduced row echelon form: unique for a given matrix.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rank: usize,
    /// Pivot columns, ascending; `pivots[i]` belongs to `rows[i]`.
    pub pivots: Vec<usize>,
    /// Nonzero reduced rows, dense, sorted by pivot column.
    pub rows: Vec<Vec<FieldElement>>,
    pub cols: usize,
}

/// Dense row threshold: below this, plain Gaussian elimination; at or
/// above, sparse elimination with Markowitz pivoting.
const DENSE_LIMIT: usize = 64;

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.entries.insert((i, i), field.one());
        }
        m
    }

    pub fn from_dense(field: &FieldSpec, data: Vec<Vec<FieldElement>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        let mut m = Self::new(rows, cols);
        for (i, row) in data.into_iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                if !field.is_zero(&v) {
                    m.entries.insert((i, j), v);
                }
            }
        }
        m
    }

    pub fn from_rows_vec(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> Self {
        Self::from_dense(field, rows.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn set(&mut self, field: &FieldSpec, i: usize, j: usize, v: FieldElement) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if field.is_zero(&v) {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Add `v` into entry (i, j).
    pub fn add_to(&mut self, field: &FieldSpec, i: usize, j: usize, v: &FieldElement) {
        if field.is_zero(v) {
            return;
        }
        let cur = self.get(field, i, j);
        self.set(field, i, j, field.add(&cur, v));
    }

    pub fn get(&self, field: &FieldSpec, i: usize, j: usize) -> FieldElement {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &FieldElement)> {
        self.entries.iter()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_dense(&self, field: &FieldSpec) -> Vec<Vec<FieldElement>> {
        let mut out = vec![vec![field.zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::new(self.cols, self.rows);
        for (&(i, j), v) in &self.entries {
            m.entries.insert((j, i), v.clone());
        }
        m
    }

    pub fn add(&self, field: &FieldSpec, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let mut out = self.clone();
        for (&(i, j), v) in &other.entries {
            out.add_to(field, i, j, v);
        }
        out
    }

    pub fn scale(&self, field: &FieldSpec, c: &FieldElement) -> Self {
        let mut out = Self::new(self.rows, self.cols);
        if field.is_zero(c) {
            return out;
        }
        for (&(i, j), v) in &self.entries {
            out.entries.insert((i, j), field.mul(v, c));
        }
        out
    }

    pub fn sub(&self, field: &FieldSpec, other: &Self) -> Self {
        self.add(field, &other.scale(field, &field.from_i64(-1)))
    }

    pub fn mul(&self, field: &FieldSpec, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        // index other's rows for sparse access
        let mut rows_of_other: Vec<Vec<(usize, &FieldElement)>> = vec![Vec::new(); other.rows];
        for (&(i, j), v) in &other.entries {
            rows_of_other[i].push((j, v));
        }
        let mut out = Self::new(self.rows, other.cols);
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &rows_of_other[k] {
                out.add_to(field, i, j, &field.mul(a, b));
            }
        }
        out
    }

    pub fn apply(&self, field: &FieldSpec, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let mut out = vec![field.zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            if !field.is_zero(&v[j]) {
                out[i] = field.add(&out[i], &field.mul(a, &v[j]));
            }
        }
        out
    }

    /// Kronecker product (row-major pair indexing: (i1,i2) -> i1*n2+i2).
    pub fn kron(&self, field: &FieldSpec, other: &Self) -> Self {
        let mut out = Self::new(self.rows * other.rows, self.cols * other.cols);
        for (&(i1, j1), a) in &self.entries {
            for (&(i2, j2), b) in &other.entries {
                out.entries.insert(
                    (i1 * other.rows + i2, j1 * other.cols + j2),
                    field.mul(a, b),
                );
            }
        }
        out
    }

    /// Reduced row echelon form. Dense Gaussian elimination below
    /// [`DENSE_LIMIT`], Markowitz-pivoted sparse elimination above; the
    /// output is the (unique) RREF either way.
    pub fn rref(&self, field: &FieldSpec) -> Rref {
        if self.rows.max(self.cols) < DENSE_LIMIT {
            self.rref_dense(field)
        } else {
            self.rref_sparse(field)
        }
    }

    fn rref_dense(&self, field: &FieldSpec) -> Rref {
        let mut a = self.to_dense(field);
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            // first nonzero by ascending row order
            let Some(p) = (r..rows).find(|&i| !field.is_zero(&a[i][c])) else { continue };
            a.swap(r, p);
            let inv = field.inv(&a[r][c]).expect("nonzero pivot");
            for x in a[r].iter_mut() {
                *x = field.mul(x, &inv);
            }
            for i in 0..rows {
                if i != r && !field.is_zero(&a[i][c]) {
                    let f = a[i][c].clone();
                    for j in 0..cols {
                        let t = field.mul(&f, &a[r][j]);
                        a[i][j] = field.sub(&a[i][j], &t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        Rref { rank: r, pivots, rows: a, cols }
    }

    fn rref_sparse(&self, field: &FieldSpec) -> Rref {
        // working rows as sparse maps
        let mut work: Vec<BTreeMap<usize, FieldElement>> = vec![BTreeMap::new(); self.rows];
        for (&(i, j), v) in &self.entries {
            work[i].insert(j, v.clone());
        }
        let mut col_count: Vec<usize> = vec![0; self.cols];
        for row in &work {
            for &j in row.keys() {
                col_count[j] += 1;
            }
        }
        let mut active: Vec<bool> = work.iter().map(|r| !r.is_empty()).collect();
        let mut reduced: Vec<(usize, BTreeMap<usize, FieldElement>)> = Vec::new();

        loop {
            // Markowitz pivot: minimize (row_nnz - 1)(col_nnz - 1),
            // ties broken by lowest (col, row) index.
            let mut best: Option<(usize, (usize, usize))> = None;
            for (i, row) in work.iter().enumerate() {
                if !active[i] || row.is_empty() {
                    continue;
                }
                let rn = row.len() - 1;
                for &j in row.keys() {
                    let score = rn * (col_count[j].saturating_sub(1));
                    let key = (j, i);
                    if best.as_ref().map_or(true, |&(s, k)| (score, key) < (s, k)) {
                        best = Some((score, key));
                    }
                }
            }
            let Some((_, (pc, pr))) = best else { break };
            let mut prow = std::mem::take(&mut work[pr]);
            active[pr] = false;
            for &j in prow.keys() {
                col_count[j] -= 1;
            }
            let inv = field.inv(&prow[&pc]).expect("nonzero pivot");
            for v in prow.values_mut() {
                *v = field.mul(v, &inv);
            }
            for i in 0..work.len() {
                if !active[i] {
                    continue;
                }
                let Some(f) = work[i].get(&pc).cloned() else { continue };
                let row = &mut work[i];
                for (&j, pv) in &prow {
                    let t = field.mul(&f, pv);
                    let cur = row.get(&j).cloned().unwrap_or_else(|| field.zero());
                    let nv = field.sub(&cur, &t);
                    let had = row.contains_key(&j);
                    if field.is_zero(&nv) {
                        if had {
                            row.remove(&j);
                            col_count[j] -= 1;
                        }
                    } else {
                        if !had {
                            col_count[j] += 1;
                        }
                        row.insert(j, nv);
                    }
                }
            }
            reduced.push((pc, prow));
        }

        // back-substitution to reach the reduced form: sweep pivot columns
        // in descending order, clearing each from every other row (rows
        // extracted early may still hold any later-chosen pivot column)
        reduced.sort_by_key(|(pc, _)| *pc);
        let pivots: Vec<usize> = reduced.iter().map(|(pc, _)| *pc).collect();
        let n = reduced.len();
        for i in (0..n).rev() {
            let pc = reduced[i].0;
            let pivot_row = reduced[i].1.clone();
            for (j, (_, row)) in reduced.iter_mut().enumerate() {
                if j == i {
                    continue;
                }
                let Some(f) = row.get(&pc).cloned() else { continue };
                for (&c, pv) in &pivot_row {
                    let t = field.mul(&f, pv);
                    let cur = row.get(&c).cloned().unwrap_or_else(|| field.zero());
                    let nv = field.sub(&cur, &t);
                    if field.is_zero(&nv) {
                        row.remove(&c);
                    } else {
                        row.insert(c, nv);
                    }
                }
            }
        }
        let rows: Vec<Vec<FieldElement>> = reduced
            .iter()
            .map(|(_, row)| {
                let mut dense = vec![field.zero(); self.cols];
                for (&j, v) in row {
                    dense[j] = v.clone();
                }
                dense
            })
            .collect();
        Rref { rank: n, pivots, rows, cols: self.cols }
    }

    pub fn rank(&self, field: &FieldSpec) -> usize {
        self.rref(field).rank
    }

    /// Rank and an echelonized nullspace basis (pivot columns ascending).
    pub fn rank_nullspace(&self, field: &FieldSpec) -> (usize, Vec<Vec<FieldElement>>) {
        let r = self.rref(field);
        let basis = nullspace_from_rref(field, &r);
        (r.rank, basis)
    }

    /// Solve Mx = b; returns the echelon-determined representative (free
    /// variables set to zero) or None when inconsistent.
    pub fn solve(&self, field: &FieldSpec, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = self.clone();
        aug.cols += 1;
        for (i, v) in b.iter().enumerate() {
            if !field.is_zero(v) {
                aug.entries.insert((i, self.cols), v.clone());
            }
        }
        let r = aug.rref(field);
        if r.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![field.zero(); self.cols];
        for (row, &pc) in r.rows.iter().zip(&r.pivots) {
            x[pc] = row[self.cols].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self, field: &FieldSpec) -> Result<SparseMatrix> {
        if self.rows != self.cols {
            return Err(Error::InvalidInput("only square matrices can be inverted".into()));
        }
        let n = self.rows;
        let mut aug = self.clone();
        aug.cols = 2 * n;
        for i in 0..n {
            aug.entries.insert((i, n + i), field.one());
        }
        let r = aug.rref(field);
        if r.rank < n || r.pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return Err(Error::InvalidInput("matrix is singular".into()));
        }
        let mut out = SparseMatrix::new(n, n);
        for (i, row) in r.rows.iter().enumerate().take(n) {
            for j in 0..n {
                let v = row[n + j].clone();
                if !field.is_zero(&v) {
                    out.entries.insert((i, j), v);
                }
            }
        }
        Ok(out)
    }
}

/// Standard nullspace basis from an RREF: one vector per free column.
fn nullspace_from_rref(field: &FieldSpec, r: &Rref) -> Vec<Vec<FieldElement>> {
    let pivot_set: std::collections::BTreeSet<usize> = r.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..r.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); r.cols];
        v[free] = field.one();
        for (row, &pc) in r.rows.iter().zip(&r.pivots) {
            if !field.is_zero(&row[free]) {
                v[pc] = field.neg(&row[free]);
            }
        }
        basis.push(v);
    }
    basis
}

/// Dot product of dense vectors.
pub fn dot(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    assert_eq!(a.len(), b.len());
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        acc = field.add(&acc, &field.mul(x, y));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_field_spec;

    fn mat(field: &FieldSpec, rows: &[&[i64]]) -> SparseMatrix {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        SparseMatrix::from_dense(field, data)
    }

    #[test]
    fn identity_has_full_rank_and_empty_nullspace() {
        let q = parse_field_spec("Q").unwrap();
        let m = SparseMatrix::identity(&q, 3);
        let (rank, ns) = m.rank_nullspace(&q);
        assert_eq!(rank, 3);
        assert!(ns.is_empty());
    }

    #[test]
    fn zero_matrix_nullspace_is_standard_basis() {
        let q = parse_field_spec("Q").unwrap();
        let m = SparseMatrix::new(2, 2);
        let (rank, ns) = m.rank_nullspace(&q);
        assert_eq!(rank, 0);
        assert_eq!(ns, vec![vec![q.one(), q.zero()], vec![q.zero(), q.one()]]);
    }

    #[test]
    fn dependent_rows_give_expected_kernel() {
        let q = parse_field_spec("Q").unwrap();
        let m = mat(&q, &[&[1, 2], &[2, 4]]);
        let (rank, ns) = m.rank_nullspace(&q);
        assert_eq!(rank, 1);
        assert_eq!(ns, vec![vec![q.from_i64(-2), q.one()]]);
    }

    #[test]
    fn solve_uses_ascending_pivot_representative() {
        let q = parse_field_spec("Q").unwrap();
        let m = mat(&q, &[&[1, 1], &[0, 0]]);
        let b = vec![q.from_i64(2), q.zero()];
        // oracle: echelon solve by hand — pivot col 0, free col 1 set to 0
        assert_eq!(m.solve(&q, &b).unwrap(), vec![q.from_i64(2), q.zero()]);
    }

    #[test]
    fn inconsistent_system_detected() {
        let q = parse_field_spec("Q").unwrap();
        let m = SparseMatrix::new(2, 2);
        let b = vec![q.one(), q.zero()];
        assert!(m.solve(&q, &b).is_none());
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let q = parse_field_spec("Q").unwrap();
        let m = SparseMatrix::identity(&q, 3);
        let b = vec![q.from_i64(7), q.from_i64(-2), q.from_rational(1, 3).unwrap()];
        assert_eq!(m.solve(&q, &b).unwrap(), b);
    }

    #[test]
    fn sparse_and_dense_paths_agree() {
        // 70x70 structured matrix goes through the sparse path; compare
        // against the dense elimination on the same data.
        let f5 = parse_field_spec("Fp(5)").unwrap();
        let n = 70;
        let mut m = SparseMatrix::new(n, n);
        for i in 0..n {
            m.set(&f5, i, i, f5.from_i64((i % 4 + 1) as i64));
            m.set(&f5, i, (i * 3 + 1) % n, f5.from_i64((i % 5) as i64));
            m.set(&f5, (i * 7) % n, i, f5.from_i64(((i + 2) % 5) as i64));
        }
        let sparse = m.rref_sparse(&f5);
        let dense = m.rref_dense(&f5);
        assert_eq!(sparse.rank, dense.rank);
        assert_eq!(sparse.pivots, dense.pivots);
        assert_eq!(sparse.rows, dense.rows);
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        let f3 = parse_field_spec("Fp(3)").unwrap();
        let m = mat(&f3, &[&[1, 2, 0], &[2, 1, 1], &[0, 0, 0], &[1, 2, 0]]);
        assert_eq!(m.rank(&f3), m.transpose().rank(&f3));
    }

    #[test]
    fn inverse_round_trip() {
        let q = parse_field_spec("Q").unwrap();
        let m = mat(&q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse(&q).unwrap();
        assert_eq!(m.mul(&q, &inv), SparseMatrix::identity(&q, 2));
        let singular = mat(&q, &[&[1, 2], &[2, 4]]);
        assert!(singular.inverse(&q).is_err());
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let q = parse_field_spec("Q").unwrap();
        let a = SparseMatrix::identity(&q, 2);
        let b = SparseMatrix::identity(&q, 3);
        assert_eq!(a.kron(&q, &b), SparseMatrix::identity(&q, 6));
    }
}
