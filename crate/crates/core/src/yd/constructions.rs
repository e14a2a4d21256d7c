//! Coadjoint quotients, restriction to a Hopf subalgebra, and induction —
//! the two adjoint functors and the quotient module they meet in.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::hopf::HopfMorphism;
use crate::linalg::{SparseMatrix, Subspace};

use super::YDModule;

/// Reduction mod a subspace in RREF form: returns the residual vector.
fn reduce_mod(f: &FieldSpec, w: &Subspace, v: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = v.to_vec();
    for (row, &pc) in w.basis().iter().zip(w.pivots()) {
        if !f.is_zero(&out[pc]) {
            let c = out[pc].clone();
            for j in 0..out.len() {
                let t = f.mul(&c, &row[j]);
                out[j] = f.sub(&out[j], &t);
            }
        }
    }
    out
}

/// Coordinates of the residual in the non-pivot positions (the canonical
/// lift of the quotient).
fn project_coords(f: &FieldSpec, w: &Subspace, v: &[FieldElement]) -> Vec<FieldElement> {
    let reduced = reduce_mod(f, w, v);
    let pivot_set: std::collections::BTreeSet<usize> = w.pivots().iter().copied().collect();
    (0..v.len()).filter(|i| !pivot_set.contains(i)).map(|i| reduced[i].clone()).collect()
}

/// The YD module on L = A/B⁺A from a Hopf subalgebra inclusion:
/// right multiplication through the quotient map, coadjoint coaction
/// p(a) ↦ p(a₍₂₎) ⊗ S(a₍₁₎)a₍₃₎.
#[derive(Clone, Debug)]
pub struct CoadjointQuotient {
    pub module: YDModule,
    /// Projection A → L in quotient coordinates.
    pub projection: SparseMatrix,
    /// Canonical lifts of the quotient basis.
    pub reps: Vec<Vec<FieldElement>>,
    /// The subspace B⁺A that was quotiented out.
    pub b_plus_a: Subspace,
}

pub fn coadjoint_quotient(incl: &HopfMorphism) -> Result<CoadjointQuotient> {
    let a = incl.target.clone();
    let b = &*incl.source;
    let f = &**a.field();
    let na = a.dim();

    // B⁺A = span{(i(x) − ε(x)1)·a}
    let mut spanning = Vec::new();
    for jb in 0..b.dim() {
        let mut x = incl.apply(&b.basis_element(jb));
        let eps = b.counit_vector()[jb].clone();
        for (t, u) in a.unit_vector().iter().enumerate() {
            let e = f.mul(&eps, u);
            x[t] = f.sub(&x[t], &e);
        }
        for g in 0..na {
            spanning.push(a.mul_el(&x, &a.basis_element(g)));
        }
    }
    let b_plus_a = Subspace::from_vectors(f, na, &spanning);
    let reps = b_plus_a.quotient_reps(f);
    let q = reps.len();

    // B⁺A must be a coideal: Δ(w) ∈ W⊗A + A⊗W for w in a basis of W
    let mut coideal_span: Vec<Vec<FieldElement>> = Vec::new();
    for w in b_plus_a.basis() {
        for j in 0..na {
            let mut v1 = vec![f.zero(); na * na];
            let mut v2 = vec![f.zero(); na * na];
            for (i, c) in w.iter().enumerate() {
                v1[i * na + j] = c.clone();
                v2[j * na + i] = c.clone();
            }
            coideal_span.push(v1);
            coideal_span.push(v2);
        }
    }
    let coideal = Subspace::from_vectors(f, na * na, &coideal_span);
    for w in b_plus_a.basis() {
        let mut dw = vec![f.zero(); na * na];
        for (x, y, c) in a.comult_el(w) {
            dw[x * na + y] = f.add(&dw[x * na + y], &c);
        }
        if !coideal.contains(f, &dw) {
            return Err(Error::InvalidInput(
                "B⁺A is not a coideal; comultiplication does not descend".into(),
            ));
        }
    }

    // right action descends: W·A ⊆ W
    for w in b_plus_a.basis() {
        for g in 0..na {
            if !b_plus_a.contains(f, &a.mul_el(w, &a.basis_element(g))) {
                return Err(Error::InvalidInput(format!(
                    "B⁺A is not right-stable (witness algebra basis element {g})"
                )));
            }
        }
    }

    // coadjoint coaction well-defined: a ↦ p(a₍₂₎) ⊗ S(a₍₁₎)a₍₃₎ kills W
    let coact_of = |v: &[FieldElement]| -> Vec<FieldElement> {
        let mut out = vec![f.zero(); q * na];
        for (i, ci) in v.iter().enumerate() {
            if f.is_zero(ci) {
                continue;
            }
            for (a1, a2, a3, c) in a.comult2_basis(i) {
                let s = a.antipode_el(&a.basis_element(a1));
                let alg = a.mul_el(&s, &a.basis_element(a3));
                let pa2 = project_coords(f, &b_plus_a, &a.basis_element(a2));
                let cc = f.mul(ci, &c);
                for (r, rv) in pa2.iter().enumerate() {
                    if f.is_zero(rv) {
                        continue;
                    }
                    for (y, yv) in alg.iter().enumerate() {
                        if f.is_zero(yv) {
                            continue;
                        }
                        let ix = r * na + y;
                        let t = f.mul(&cc, &f.mul(rv, yv));
                        out[ix] = f.add(&out[ix], &t);
                    }
                }
            }
        }
        out
    };
    for w in b_plus_a.basis() {
        let image = coact_of(w);
        if image.iter().any(|x| !f.is_zero(x)) {
            return Err(Error::InvalidInput(
                "coadjoint coaction does not descend to the quotient (witness returned)".into(),
            ));
        }
    }

    // structure tensors on the quotient
    let mut action = Vec::with_capacity(na);
    for g in 0..na {
        let mut m = SparseMatrix::new(q, q);
        for (col, rep) in reps.iter().enumerate() {
            let prod = project_coords(f, &b_plus_a, &a.mul_el(rep, &a.basis_element(g)));
            for (r, v) in prod.into_iter().enumerate() {
                if !f.is_zero(&v) {
                    m.set(f, r, col, v);
                }
            }
        }
        action.push(m);
    }
    let mut coaction = vec![Vec::new(); q];
    for (col, rep) in reps.iter().enumerate() {
        let dense = coact_of(rep);
        let mut entries = Vec::new();
        for r in 0..q {
            for y in 0..na {
                let v = dense[r * na + y].clone();
                if !f.is_zero(&v) {
                    entries.push((r, y, v));
                }
            }
        }
        coaction[col] = entries;
    }

    let module = YDModule::new_checked(a.clone(), q, action, coaction)?;
    let mut projection = SparseMatrix::new(q, na);
    for g in 0..na {
        let col = project_coords(f, &b_plus_a, &a.basis_element(g));
        for (r, v) in col.into_iter().enumerate() {
            if !f.is_zero(&v) {
                projection.set(f, r, g, v);
            }
        }
    }
    Ok(CoadjointQuotient { module, projection, reps, b_plus_a })
}

/// Restriction X^{(B)} = {x | ρ(x) ∈ X ⊗ i(B)} of a YD module over A to a
/// YD module over B, with the independent cotensor-product cross-check.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub module: YDModule,
    /// Basis of X^{(B)} inside X (RREF rows).
    pub basis_in_x: Vec<Vec<FieldElement>>,
    /// Dimension of the independently computed cotensor product X □_A B.
    pub cotensor_dim: usize,
}

pub fn restrict(x: &YDModule, incl: &HopfMorphism) -> Result<Restriction> {
    let a = &*incl.target;
    let b = incl.source.clone();
    let f = &**a.field();
    let na = a.dim();
    let nb = b.dim();
    let d = x.dim();

    // subspace i(B) and the projection onto a complement
    let image_vectors: Vec<Vec<FieldElement>> =
        (0..nb).map(|j| incl.apply(&b.basis_element(j))).collect();
    let image_b = Subspace::from_vectors(f, na, &image_vectors);

    // X^{(B)} = kernel of (id ⊗ π)∘ρ where π kills i(B)
    let reps = image_b.quotient_reps(f);
    let qc = reps.len();
    let mut m = SparseMatrix::new(d * qc, d);
    for v in 0..d {
        for (w, aa, c) in x.coaction(v) {
            let pa = project_coords(f, &image_b, &a.basis_element(*aa));
            for (r, rv) in pa.iter().enumerate() {
                if !f.is_zero(rv) {
                    m.add_to(f, w * qc + r, v, &f.mul(c, rv));
                }
            }
        }
    }
    let (_, kernel) = m.rank_nullspace(f);
    let sub = Subspace::from_vectors(f, d, &kernel);
    let basis = sub.basis().to_vec();
    let dim_r = basis.len();

    // B-module stability (a failure here is an implementation bug)
    for v in &basis {
        for j in 0..nb {
            let moved = x.act_el(v, &incl.apply(&b.basis_element(j)));
            if !sub.contains(f, &moved) {
                return Err(Error::InvalidInput(
                    "restriction subspace is not B-stable: implementation bug".into(),
                ));
            }
        }
    }

    // coordinates in i(B) for the algebra legs
    let b_coords = |v: &[FieldElement]| -> Result<Vec<FieldElement>> {
        incl.matrix.solve(f, v).ok_or_else(|| {
            Error::InvalidInput("coaction leg is not inside i(B): implementation bug".into())
        })
    };

    // structure over B on the chosen basis
    let mut action = Vec::with_capacity(nb);
    for j in 0..nb {
        let ib = incl.apply(&b.basis_element(j));
        let mut mat = SparseMatrix::new(dim_r, dim_r);
        for (col, v) in basis.iter().enumerate() {
            let moved = x.act_el(v, &ib);
            let coords = sub.coordinates(f, &moved).expect("stability verified above");
            for (r, c) in coords.into_iter().enumerate() {
                if !f.is_zero(&c) {
                    mat.set(f, r, col, c);
                }
            }
        }
        action.push(mat);
    }
    let mut coaction = vec![Vec::new(); dim_r];
    for (col, v) in basis.iter().enumerate() {
        // ρ(v) ∈ X ⊗ i(B): convert algebra legs to B coordinates, then
        // each B-column is a vector of X lying in X^{(B)} (coassociativity)
        let mut alg_legs: Vec<Vec<FieldElement>> = vec![vec![f.zero(); na]; d];
        for (w, aa, c) in x.coact_el(v) {
            alg_legs[w][aa] = f.add(&alg_legs[w][aa], &c);
        }
        let mut xb = vec![vec![f.zero(); nb]; d]; // [w][y]
        for (w, leg) in alg_legs.iter().enumerate() {
            if leg.iter().all(|c| f.is_zero(c)) {
                continue;
            }
            xb[w] = b_coords(leg)?;
        }
        let mut entries: BTreeMap<(usize, usize), FieldElement> = BTreeMap::new();
        for y in 0..nb {
            let column: Vec<FieldElement> = (0..d).map(|w| xb[w][y].clone()).collect();
            if column.iter().all(|c| f.is_zero(c)) {
                continue;
            }
            let coords = sub.coordinates(f, &column).ok_or_else(|| {
                Error::InvalidInput(
                    "coaction column escapes X^{(B)}: implementation bug".into(),
                )
            })?;
            for (r, rc) in coords.into_iter().enumerate() {
                if f.is_zero(&rc) {
                    continue;
                }
                let key = (r, y);
                let cur = entries.get(&key).cloned().unwrap_or_else(|| f.zero());
                entries.insert(key, f.add(&cur, &rc));
            }
        }
        coaction[col] = entries
            .into_iter()
            .filter(|(_, c)| !f.is_zero(c))
            .map(|((r, y), c)| (r, y, c))
            .collect();
    }
    let module = YDModule::new_checked(b.clone(), dim_r, action, coaction)?;

    // independent cotensor product X □_A B = ker(ρ⊗id − id⊗(i∘Δ_B·)) ⊆ X⊗B
    let mut cot = SparseMatrix::new(d * na * nb, d * nb);
    for v in 0..d {
        for jb in 0..nb {
            let col = v * nb + jb;
            for (w, aa, c) in x.coaction(v) {
                cot.add_to(f, (w * na + aa) * nb + jb, col, c);
            }
            for (b1, b2, c) in b.comult_basis(jb) {
                let ib1 = incl.apply(&b.basis_element(*b1));
                for (ai, av) in ib1.iter().enumerate() {
                    if !f.is_zero(av) {
                        cot.add_to(f, (v * na + ai) * nb + b2, col, &f.neg(&f.mul(c, av)));
                    }
                }
            }
        }
    }
    let (_, cot_kernel) = cot.rank_nullspace(f);
    let cotensor = Subspace::from_vectors(f, d * nb, &cot_kernel);

    // the classical iso sends x to ρ(x) read inside X⊗B; compare subspaces
    let mut rho_vectors = Vec::new();
    for v in &basis {
        let mut vec_xb = vec![f.zero(); d * nb];
        let mut alg_legs: Vec<Vec<FieldElement>> = vec![vec![f.zero(); na]; d];
        for (w, aa, c) in x.coact_el(v) {
            alg_legs[w][aa] = f.add(&alg_legs[w][aa], &c);
        }
        for (w, leg) in alg_legs.iter().enumerate() {
            let coords_b = b_coords(leg)?;
            for (y, yc) in coords_b.into_iter().enumerate() {
                vec_xb[w * nb + y] = f.add(&vec_xb[w * nb + y], &yc);
            }
        }
        rho_vectors.push(vec_xb);
    }
    let rho_span = Subspace::from_vectors(f, d * nb, &rho_vectors);
    if rho_span != cotensor {
        return Err(Error::InvalidInput(
            "X^{(B)} and the cotensor product disagree: implementation bug".into(),
        ));
    }

    Ok(Restriction { module, basis_in_x: basis, cotensor_dim: cotensor.dim() })
}

/// Induction V ⊗_B A with the comodule structure
/// v⊗a ↦ v₍₀₎⊗a₍₂₎ ⊗ S(a₍₁₎) v₍₁₎ a₍₃₎, realized as a quotient of V⊗A.
pub fn induce(v: &YDModule, incl: &HopfMorphism) -> Result<YDModule> {
    let a = incl.target.clone();
    let b = &*incl.source;
    if !Arc::ptr_eq(v.hopf(), &incl.source) {
        return Err(Error::SpecMismatch("module must live over the subalgebra".into()));
    }
    let f = &**a.field();
    let na = a.dim();
    let nb = b.dim();
    let dv = v.dim();
    let big = dv * na;

    // relation space R = span{ (v·b)⊗a − v⊗(i(b)·a) }
    let mut relations = Vec::new();
    for vi in 0..dv {
        for jb in 0..nb {
            let ib = incl.apply(&b.basis_element(jb));
            let moved = v.action(jb).apply(f, &v.basis_vector(vi));
            for g in 0..na {
                let mut vec = vec![f.zero(); big];
                for (w, c) in moved.iter().enumerate() {
                    if !f.is_zero(c) {
                        vec[w * na + g] = f.add(&vec[w * na + g], c);
                    }
                }
                let shifted = a.mul_el(&ib, &a.basis_element(g));
                for (x, c) in shifted.iter().enumerate() {
                    if !f.is_zero(c) {
                        vec[vi * na + x] = f.sub(&vec[vi * na + x], c);
                    }
                }
                relations.push(vec);
            }
        }
    }
    let r = Subspace::from_vectors(f, big, &relations);
    let reps = r.quotient_reps(f);
    let q = reps.len();

    // R is stable under right multiplication on the A-leg
    for w in r.basis() {
        for g in 0..na {
            let mut moved = vec![f.zero(); big];
            for (ix, c) in w.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                let (vi, x) = (ix / na, ix % na);
                let prod = a.mul_el(&a.basis_element(x), &a.basis_element(g));
                for (y, yc) in prod.iter().enumerate() {
                    if !f.is_zero(yc) {
                        moved[vi * na + y] = f.add(&moved[vi * na + y], &f.mul(c, yc));
                    }
                }
            }
            if !r.contains(f, &moved) {
                return Err(Error::InvalidInput(
                    "induction relation space is not right-stable: implementation bug".into(),
                ));
            }
        }
    }

    // action on the quotient
    let mut action = Vec::with_capacity(na);
    for g in 0..na {
        let mut m = SparseMatrix::new(q, q);
        for (col, rep) in reps.iter().enumerate() {
            let mut moved = vec![f.zero(); big];
            for (ix, c) in rep.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                let (vi, x) = (ix / na, ix % na);
                for (y, yc) in a.mul_el(&a.basis_element(x), &a.basis_element(g)).iter().enumerate()
                {
                    if !f.is_zero(yc) {
                        moved[vi * na + y] = f.add(&moved[vi * na + y], &f.mul(c, yc));
                    }
                }
            }
            for (row, val) in project_coords(f, &r, &moved).into_iter().enumerate() {
                if !f.is_zero(&val) {
                    m.set(f, row, col, val);
                }
            }
        }
        action.push(m);
    }

    // coaction on V⊗A, then projected; must kill R
    let coact_big = |vec: &[FieldElement]| -> Vec<FieldElement> {
        let mut out = vec![f.zero(); q * na];
        for (ix, c) in vec.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let (vi, x) = (ix / na, ix % na);
            for (a1, a2, a3, ca) in a.comult2_basis(x) {
                let s = a.antipode_el(&a.basis_element(a1));
                for (v0, v1, cv) in v.coaction(vi) {
                    let iv1 = incl.apply(&b.basis_element(*v1));
                    let alg = a.mul_el(&a.mul_el(&s, &iv1), &a.basis_element(a3));
                    // vector leg v₀ ⊗ a₂ in quotient coordinates
                    let mut leg = vec![f.zero(); big];
                    leg[v0 * na + a2] = f.one();
                    let pleg = project_coords(f, &r, &leg);
                    let cc = f.mul(c, &f.mul(&ca, cv));
                    for (row, rv) in pleg.iter().enumerate() {
                        if f.is_zero(rv) {
                            continue;
                        }
                        for (y, yv) in alg.iter().enumerate() {
                            if f.is_zero(yv) {
                                continue;
                            }
                            let t = f.mul(&cc, &f.mul(rv, yv));
                            out[row * na + y] = f.add(&out[row * na + y], &t);
                        }
                    }
                }
            }
        }
        out
    };
    for w in r.basis() {
        if coact_big(w).iter().any(|x| !f.is_zero(x)) {
            return Err(Error::InvalidInput(
                "induced coaction does not descend: implementation bug".into(),
            ));
        }
    }
    let mut coaction = vec![Vec::new(); q];
    for (col, rep) in reps.iter().enumerate() {
        let dense = coact_big(rep);
        for row in 0..q {
            for y in 0..na {
                let val = dense[row * na + y].clone();
                if !f.is_zero(&val) {
                    coaction[col].push((row, y, val));
                }
            }
        }
    }

    YDModule::new_checked(a.clone(), q, action, coaction)
}
