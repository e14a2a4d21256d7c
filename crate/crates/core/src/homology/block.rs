//! Cutting an Ext computation to the block of the resolved module.
//!
//! For a central idempotent e, D = eD × (1−e)D as algebras, and
//! Ext_D(M, N) = Ext_{eD}(eM, eN) ⊕ Ext_{(1−e)D}((1−e)M, (1−e)N). When M is
//! the trivial module, every central element z acts on M by a scalar λ, and
//! the Fitting decomposition D = ker((z−λ)^n) ⊕ im((z−λ)^n) yields a central
//! idempotent that keeps M intact while splitting away foreign blocks.
//! Iterating over a basis of the center cuts D down to the block of M.
//!
//! This matters for minimal *free* resolutions: a free cover of a kernel
//! re-covers every projective summand that is not free, which makes ranks
//! grow geometrically in the number of blocks; after the cut only the
//! block of M remains and ranks stay at desk scale.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::hopf::{FDModule, FinDimAlgebra};
use crate::linalg::{SparseMatrix, Subspace};

/// The block cut: the cut algebra, the central idempotent that defines it
/// (in the original coordinates), and the expression of the cut basis in
/// original coordinates.
#[derive(Clone, Debug)]
pub struct BlockCut {
    pub algebra: Arc<FinDimAlgebra>,
    pub idempotent: Vec<FieldElement>,
    /// Rows: new basis vectors inside the original algebra.
    pub basis: Vec<Vec<FieldElement>>,
}

/// Basis of the center {z : zb = bz for all b}.
fn center_basis(alg: &FinDimAlgebra) -> Vec<Vec<FieldElement>> {
    let f = &**alg.field();
    let n = alg.dim();
    let mut rows = Vec::new();
    for b in 0..n {
        let left = alg.left_mult_matrix(&alg.basis_element(b));
        // right multiplication by e_b as a matrix
        let mut right = SparseMatrix::new(n, n);
        for j in 0..n {
            let col = alg.mul_el(&alg.basis_element(j), &alg.basis_element(b));
            for (i, v) in col.into_iter().enumerate() {
                if !f.is_zero(&v) {
                    right.set(f, i, j, v);
                }
            }
        }
        let diff = left.sub(f, &right);
        for i in 0..n {
            let mut row = vec![f.zero(); n];
            let mut nonzero = false;
            for j in 0..n {
                let v = diff.get(f, i, j);
                if !f.is_zero(&v) {
                    nonzero = true;
                }
                row[j] = v;
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(f, n).basis().to_vec();
    }
    let m = SparseMatrix::from_rows_vec(f, &rows);
    m.rank_nullspace(f).1
}

/// Cut D to the block of a module M on which the center acts by scalars
/// (always true for 1-dimensional M). Returns the cut plus M and any other
/// modules transported along; modules not killed by the idempotent keep
/// their dimension, others shrink (possibly to zero).
pub fn cut_to_block_of(alg: &Arc<FinDimAlgebra>, m: &FDModule) -> Result<BlockCut> {
    let f = &**alg.field();
    let mut current: Arc<FinDimAlgebra> = alg.clone();
    // basis of the current algebra written in ORIGINAL coordinates
    let mut old_coords: Vec<Vec<FieldElement>> =
        (0..alg.dim()).map(|i| alg.basis_element(i)).collect();
    // action of the current algebra's basis on M
    let mut m_action: Vec<SparseMatrix> = m.action.clone();
    let mut idempotent: Vec<FieldElement> = alg.unit_vector().to_vec();

    loop {
        let n = current.dim();
        let mut improved = false;
        for z in center_basis(&current) {
            // scalar of z on M: read off the first basis vector, verify
            let zm = {
                let mut acc = SparseMatrix::new(m.dim, m.dim);
                for (i, c) in z.iter().enumerate() {
                    if !f.is_zero(c) {
                        acc = acc.add(f, &m_action[i].scale(f, c));
                    }
                }
                acc
            };
            let first = zm.apply(f, &unit(f, m.dim, 0));
            let lambda = first[0].clone();
            let scalar_matrix = SparseMatrix::identity(f, m.dim).scale(f, &lambda);
            let nilpotent_on_m = {
                let diff = zm.sub(f, &scalar_matrix);
                // (z − λ)^dim M must vanish on M for the cut to keep M
                let mut p = SparseMatrix::identity(f, m.dim);
                for _ in 0..m.dim {
                    p = p.mul(f, &diff);
                }
                p.is_zero_matrix()
            };
            if !nilpotent_on_m {
                continue;
            }
            // u = z − λ·1 in the current algebra
            let mut u = z.clone();
            for (i, c) in current.unit_vector().iter().enumerate() {
                let t = f.mul(&lambda, c);
                u[i] = f.sub(&u[i], &t);
            }
            let lm = current.left_mult_matrix(&u);
            // U^n by repeated squaring past n
            let mut power = lm.clone();
            let mut steps = 1usize;
            while steps < n {
                power = power.mul(f, &power);
                steps *= 2;
            }
            let (_, ker) = power.rank_nullspace(f);
            if ker.len() == n || ker.is_empty() {
                continue;
            }
            let kernel = Subspace::from_vectors(f, n, &ker);
            // image of U^n
            let image_vectors: Vec<Vec<FieldElement>> =
                (0..n).map(|j| power.apply(f, &unit(f, n, j))).collect();
            let image = Subspace::from_vectors(f, n, &image_vectors);
            // decompose 1 = e0 + e1 along ker ⊕ im
            let mut stacked_cols = Vec::new();
            for b in kernel.basis() {
                stacked_cols.push(b.clone());
            }
            for b in image.basis() {
                stacked_cols.push(b.clone());
            }
            let stack = SparseMatrix::from_rows_vec(f, &stacked_cols).transpose();
            let coeffs = stack
                .solve(f, current.unit_vector())
                .ok_or_else(|| Error::InvalidInput("Fitting decomposition failed".into()))?;
            let mut e0 = vec![f.zero(); n];
            for (ix, b) in kernel.basis().iter().enumerate() {
                for (i, v) in b.iter().enumerate() {
                    let t = f.mul(&coeffs[ix], v);
                    e0[i] = f.add(&e0[i], &t);
                }
            }
            // sanity: e0 idempotent
            if current.mul_el(&e0, &e0) != e0 {
                return Err(Error::InvalidInput("Fitting idempotent is not idempotent".into()));
            }

            // rebuild the algebra on the kernel ideal with unit e0
            let new_basis = kernel.basis().to_vec();
            let q = new_basis.len();
            let mut mult = vec![Vec::new(); q * q];
            for (i, x) in new_basis.iter().enumerate() {
                for (j, y) in new_basis.iter().enumerate() {
                    let prod = current.mul_el(x, y);
                    let coords = kernel
                        .coordinates(f, &prod)
                        .ok_or_else(|| Error::InvalidInput("block is not closed".into()))?;
                    mult[i * q + j] = coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, v)| !f.is_zero(v))
                        .collect();
                }
            }
            let unit_coords = kernel
                .coordinates(f, &e0)
                .ok_or_else(|| Error::InvalidInput("unit escapes the block".into()))?;
            let new_alg =
                Arc::new(FinDimAlgebra::new(current.field().clone(), q, mult, unit_coords)?);

            // transport bookkeeping to original coordinates
            let new_old_coords: Vec<Vec<FieldElement>> = new_basis
                .iter()
                .map(|b| {
                    let mut acc = vec![f.zero(); alg.dim()];
                    for (i, c) in b.iter().enumerate() {
                        if f.is_zero(c) {
                            continue;
                        }
                        for (t, v) in old_coords[i].iter().enumerate() {
                            acc[t] = f.add(&acc[t], &f.mul(c, v));
                        }
                    }
                    acc
                })
                .collect();
            let mut new_idempotent = vec![f.zero(); alg.dim()];
            for (i, c) in e0.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                for (t, v) in old_coords[i].iter().enumerate() {
                    new_idempotent[t] = f.add(&new_idempotent[t], &f.mul(c, v));
                }
            }
            let new_m_action: Vec<SparseMatrix> = new_basis
                .iter()
                .map(|b| {
                    let mut acc = SparseMatrix::new(m.dim, m.dim);
                    for (i, c) in b.iter().enumerate() {
                        if !f.is_zero(c) {
                            acc = acc.add(f, &m_action[i].scale(f, c));
                        }
                    }
                    acc
                })
                .collect();

            // M must be preserved: e0 acts as the identity on it
            let e0_on_m = {
                let mut acc = SparseMatrix::new(m.dim, m.dim);
                for (i, c) in e0.iter().enumerate() {
                    if !f.is_zero(c) {
                        acc = acc.add(f, &m_action[i].scale(f, c));
                    }
                }
                acc
            };
            if e0_on_m != SparseMatrix::identity(f, m.dim) {
                return Err(Error::InvalidInput(
                    "block idempotent does not fix the resolved module".into(),
                ));
            }

            current = new_alg;
            old_coords = new_old_coords;
            m_action = new_m_action;
            idempotent = new_idempotent;
            improved = true;
            break;
        }
        if !improved {
            break;
        }
    }

    Ok(BlockCut { algebra: current, idempotent, basis: old_coords })
}

impl BlockCut {
    /// Transport a module over the original algebra to the cut: the new
    /// carrier is e·N and the new action matrices restrict accordingly.
    pub fn cut_module(&self, original: &FDModule) -> Result<FDModule> {
        let f = &**self.algebra.field();
        let d = original.dim;
        let e_action = original.action_of(&self.idempotent);
        let image_vectors: Vec<Vec<FieldElement>> =
            (0..d).map(|j| e_action.apply(f, &unit(f, d, j))).collect();
        let carrier = Subspace::from_vectors(f, d, &image_vectors);
        let q = carrier.dim();
        let mut action = Vec::with_capacity(self.algebra.dim());
        for b in &self.basis {
            let full = original.action_of(b);
            let mut m = SparseMatrix::new(q, q);
            for (col, v) in carrier.basis().iter().enumerate() {
                let moved = full.apply(f, v);
                let coords = carrier.coordinates(f, &moved).ok_or_else(|| {
                    Error::InvalidInput("cut module carrier is not stable".into())
                })?;
                for (row, c) in coords.into_iter().enumerate() {
                    if !f.is_zero(&c) {
                        m.set(f, row, col, c);
                    }
                }
            }
            action.push(m);
        }
        FDModule::new(self.algebra.clone(), q, action)
    }
}

fn unit(f: &crate::field::FieldSpec, n: usize, i: usize) -> Vec<FieldElement> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}
