//! Group-algebra towers kN ⊆ kG → k[G/N]: the desk-scale instances on
//! which the exact-sequence machinery is exercised.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::{SparseMatrix, Subspace};

use super::{group_algebra, FinDimHopf, GroupData, HopfMorphism};

/// B = kN ⊆ A = kG with quotient map onto L.
#[derive(Clone, Debug)]
pub struct GroupTower {
    pub a: Arc<FinDimHopf>,
    pub b: Arc<FinDimHopf>,
    pub l: Arc<FinDimHopf>,
    pub inclusion: HopfMorphism,
    pub projection: HopfMorphism,
    pub subgroup_indices: Vec<usize>,
}

/// Build the tower for a normal subgroup generated by `subgroup_gens`.
pub fn group_tower(
    group: GroupData,
    subgroup_gens: &[usize],
    field: Arc<FieldSpec>,
) -> Result<GroupTower> {
    let f = &*field;
    let sub_indices = group.generated_subgroup(subgroup_gens);
    let (quotient_group, coset_of) = group.quotient(&sub_indices)?;

    let sub_table: Vec<Vec<usize>> = sub_indices
        .iter()
        .map(|&x| {
            sub_indices
                .iter()
                .map(|&y| {
                    let prod = group.table[x][y];
                    sub_indices.iter().position(|&z| z == prod).expect("subgroup is closed")
                })
                .collect()
        })
        .collect();
    let sub_names = sub_indices.iter().map(|&x| group.names[x].clone()).collect();
    let subgroup = GroupData::from_table(sub_table, Some(sub_names))?;

    let a = Arc::new(group_algebra(group, field.clone())?);
    let b = Arc::new(group_algebra(subgroup, field.clone())?);
    let l = Arc::new(group_algebra(quotient_group, field.clone())?);

    let mut incl = SparseMatrix::new(a.dim(), b.dim());
    for (j, &x) in sub_indices.iter().enumerate() {
        incl.set(f, x, j, f.one());
    }
    let mut proj = SparseMatrix::new(l.dim(), a.dim());
    for (x, &c) in coset_of.iter().enumerate() {
        proj.set(f, c, x, f.one());
    }

    Ok(GroupTower {
        inclusion: HopfMorphism::new(b.clone(), a.clone(), incl)?,
        projection: HopfMorphism::new(a.clone(), l.clone(), proj)?,
        a,
        b,
        l,
        subgroup_indices: sub_indices,
    })
}

/// For a (possibly non-normal) subgroup, the linear quotient L := A/B⁺A
/// with structure tensors pushed through a chosen section. The result need
/// not satisfy the Hopf axioms — that failure is exactly what
/// `verify_exact_sequence` is meant to witness.
pub fn linear_quotient_tower(
    group: GroupData,
    subgroup_gens: &[usize],
    field: Arc<FieldSpec>,
) -> Result<GroupTower> {
    let f = &*field;
    let sub_indices = group.generated_subgroup(subgroup_gens);
    let sub_table: Vec<Vec<usize>> = sub_indices
        .iter()
        .map(|&x| {
            sub_indices
                .iter()
                .map(|&y| {
                    let prod = group.table[x][y];
                    sub_indices.iter().position(|&z| z == prod).expect("subgroup is closed")
                })
                .collect()
        })
        .collect();
    let subgroup = GroupData::from_table(sub_table, None)?;

    let a = Arc::new(group_algebra(group, field.clone())?);
    let b = Arc::new(group_algebra(subgroup, field.clone())?);
    let n = a.dim();

    let mut incl = SparseMatrix::new(n, b.dim());
    for (j, &x) in sub_indices.iter().enumerate() {
        incl.set(f, x, j, f.one());
    }

    // B⁺A = span{(h - e)·g : h in the subgroup, g in G}
    let mut spanning = Vec::new();
    for &h in &sub_indices {
        for g in 0..n {
            let mut v = a.basis_element(g);
            let hg = a.mul_el(&a.basis_element(h), &a.basis_element(g));
            for (x, val) in hg.iter().enumerate() {
                v[x] = f.sub(val, &v[x]);
            }
            spanning.push(v);
        }
    }
    let b_plus_a = Subspace::from_vectors(f, n, &spanning);
    let reps = b_plus_a.quotient_reps(f);
    let q = reps.len();

    let project = |v: &[FieldElement]| -> Vec<FieldElement> {
        let mut w = v.to_vec();
        for (row, &pc) in b_plus_a.basis().iter().zip(b_plus_a.pivots()) {
            if !f.is_zero(&w[pc]) {
                let c = w[pc].clone();
                for x in 0..n {
                    let t = f.mul(&c, &row[x]);
                    w[x] = f.sub(&w[x], &t);
                }
            }
        }
        let pivot_set: std::collections::BTreeSet<usize> =
            b_plus_a.pivots().iter().copied().collect();
        (0..n).filter(|i| !pivot_set.contains(i)).map(|i| w[i].clone()).collect()
    };

    let mut mult = vec![Vec::new(); q * q];
    for (i, ri) in reps.iter().enumerate() {
        for (j, rj) in reps.iter().enumerate() {
            mult[i * q + j] = sparsify(f, project(&a.mul_el(ri, rj)));
        }
    }
    let unit = project(a.unit_vector());
    let mut comult = vec![Vec::new(); q];
    for (i, ri) in reps.iter().enumerate() {
        for (x, y, c) in a.comult_el(ri) {
            let px = project(&a.basis_element(x));
            let py = project(&a.basis_element(y));
            for (xi, xv) in px.iter().enumerate() {
                if f.is_zero(xv) {
                    continue;
                }
                for (yi, yv) in py.iter().enumerate() {
                    let v = f.mul(&c, &f.mul(xv, yv));
                    if !f.is_zero(&v) {
                        comult[i].push((xi, yi, v));
                    }
                }
            }
        }
    }
    let counit = reps.iter().map(|r| a.counit_el(r)).collect();
    let mut antipode = SparseMatrix::new(q, q);
    for (j, rj) in reps.iter().enumerate() {
        let col = project(&a.antipode_el(rj));
        for (i, v) in col.into_iter().enumerate() {
            if !f.is_zero(&v) {
                antipode.set(f, i, j, v);
            }
        }
    }
    let l = Arc::new(FinDimHopf::from_tensors(
        field.clone(),
        q,
        mult,
        unit,
        comult,
        counit,
        antipode,
    )?);

    let mut proj_matrix = SparseMatrix::new(q, n);
    for g in 0..n {
        let col = project(&a.basis_element(g));
        for (i, v) in col.into_iter().enumerate() {
            if !f.is_zero(&v) {
                proj_matrix.set(f, i, g, v);
            }
        }
    }

    if q + b_plus_a.dim() != n {
        return Err(Error::InvalidInput("quotient dimension bookkeeping failed".into()));
    }

    Ok(GroupTower {
        inclusion: HopfMorphism::new(b.clone(), a.clone(), incl)?,
        projection: HopfMorphism::new(a.clone(), l.clone(), proj_matrix)?,
        a,
        b,
        l,
        subgroup_indices: sub_indices,
    })
}

fn sparsify(f: &FieldSpec, v: Vec<FieldElement>) -> Vec<(usize, FieldElement)> {
    v.into_iter().enumerate().filter(|(_, x)| !f.is_zero(x)).collect()
}
