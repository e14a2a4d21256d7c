//! Characters of group algebras, the grading induced by a cocentral
//! surjection onto a group algebra, and the Fourier transform
//! kΓ ≅ ⊕_ψ k_ψ as a certified YD isomorphism.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::hopf::{cocentral_check, morphism_check, FinDimHopf, HopfMorphism};
use crate::linalg::{SparseMatrix, Subspace};

use super::morphism::{yd_morphism_check, YDMorphism};
use super::{direct_sum_yd, k_psi, trivial_coaction_row, Character, YDModule};

/// All characters Γ → k* of the group carried by a group algebra,
/// enumerated from root-of-unity assignments on a generating set and
/// verified as homomorphisms.
///
/// Ordering is canonical: the trivial character first, the rest ascending
/// lexicographically in their value vectors (element order of the field).
pub fn enumerate_characters(l: &Arc<FinDimHopf>) -> Result<Vec<Character>> {
    let group = l
        .group()
        .ok_or_else(|| Error::InvalidInput("characters need a group algebra target".into()))?
        .clone();
    let f = &**l.field();
    let n = group.order;

    // greedy generating set
    let mut gens: Vec<usize> = Vec::new();
    let mut span = group.generated_subgroup(&gens);
    let mut by_order: Vec<usize> = (0..n).collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(group.element_order(x)));
    for x in by_order {
        if span.len() == n {
            break;
        }
        if !span.contains(&x) {
            gens.push(x);
            span = group.generated_subgroup(&gens);
        }
    }

    // candidate values per generator: roots of unity of dividing order
    let candidate_values: Vec<Vec<FieldElement>> = gens
        .iter()
        .map(|&g| f.nth_roots_of_unity(group.element_order(g)))
        .collect();

    let mut found: Vec<Vec<FieldElement>> = Vec::new();
    let mut counters = vec![0usize; gens.len()];
    loop {
        // try to extend this assignment to the whole group by BFS
        let mut values: Vec<Option<FieldElement>> = vec![None; n];
        values[group.identity] = Some(f.one());
        let mut frontier = vec![group.identity];
        while let Some(x) = frontier.pop() {
            let vx = values[x].clone().unwrap();
            for (gi, &g) in gens.iter().enumerate() {
                let y = group.table[x][g];
                let vy = f.mul(&vx, &candidate_values[gi][counters[gi]]);
                match &values[y] {
                    None => {
                        values[y] = Some(vy);
                        frontier.push(y);
                    }
                    Some(existing) => {
                        if *existing != vy {
                            values[group.identity] = None; // mark inconsistent
                        }
                    }
                }
            }
            if values[group.identity].is_none() {
                break;
            }
        }
        if values[group.identity].is_some() && values.iter().all(|v| v.is_some()) {
            let vals: Vec<FieldElement> = values.into_iter().map(|v| v.unwrap()).collect();
            // full homomorphism check
            let hom = (0..n).all(|x| {
                (0..n).all(|y| f.mul(&vals[x], &vals[y]) == vals[group.table[x][y]])
            });
            if hom && !found.contains(&vals) {
                found.push(vals);
            }
        }
        // next assignment
        let mut i = 0;
        loop {
            if i == gens.len() {
                break;
            }
            counters[i] += 1;
            if counters[i] < candidate_values[i].len() {
                break;
            }
            counters[i] = 0;
            i += 1;
        }
        if i == gens.len() {
            break;
        }
        if gens.is_empty() {
            break;
        }
    }

    let trivial: Vec<FieldElement> = vec![f.one(); n];
    found.sort_by(|a, b| {
        let a_triv = *a == trivial;
        let b_triv = *b == trivial;
        b_triv.cmp(&a_triv).then_with(|| {
            for (x, y) in a.iter().zip(b.iter()) {
                let o = f.cmp_elements(x, y);
                if o != std::cmp::Ordering::Equal {
                    return o;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    found.into_iter().map(|values| Character::new(l.clone(), values)).collect()
}

/// The algebra grading A = ⊕_g A_g induced by a cocentral surjection onto a
/// group algebra: A_g = { a | a₍₁₎ ⊗ p(a₍₂₎) = a ⊗ g }.
pub fn grading_components(p: &HopfMorphism) -> Result<Vec<Subspace>> {
    let a = &*p.source;
    let l = &*p.target;
    let f = &**a.field();
    let na = a.dim();
    let nl = l.dim();
    if l.group().is_none() {
        return Err(Error::InvalidInput("grading needs a group algebra target".into()));
    }
    if !cocentral_check(p).pass {
        return Err(Error::Hypothesis("projection is not cocentral".into()));
    }
    if p.matrix.rank(f) != nl {
        return Err(Error::Hypothesis("projection is not surjective".into()));
    }

    let mut components = Vec::with_capacity(nl);
    for g in 0..nl {
        // kernel of a ↦ (id⊗p)Δ(a) − a⊗e_g
        let mut m = SparseMatrix::new(na * nl, na);
        for i in 0..na {
            for (x, y, c) in a.comult_basis(i) {
                let py = p.apply(&a.basis_element(*y));
                for (li, v) in py.iter().enumerate() {
                    if !f.is_zero(v) {
                        m.add_to(f, x * nl + li, i, &f.mul(c, v));
                    }
                }
            }
            m.add_to(f, i * nl + g, i, &f.from_i64(-1));
        }
        let (_, ns) = m.rank_nullspace(f);
        components.push(Subspace::from_vectors(f, na, &ns));
    }

    // direct sum check
    let total: usize = components.iter().map(|c| c.dim()).sum();
    let mut all = Vec::new();
    for c in &components {
        all.extend(c.basis().iter().cloned());
    }
    let span = Subspace::from_vectors(f, na, &all);
    if total != na || span.dim() != na {
        return Err(Error::Hypothesis(
            "grading components do not decompose A (is p cocentral surjective?)".into(),
        ));
    }

    // multiplicativity A_g · A_h ⊆ A_{gh} on all basis pairs
    let table = &l.group().unwrap().table;
    for (g, cg) in components.iter().enumerate() {
        for (h2, ch) in components.iter().enumerate() {
            let target = &components[table[g][h2]];
            for x in cg.basis() {
                for y in ch.basis() {
                    let prod = a.mul_el(x, y);
                    if !target.contains(f, &prod) {
                        return Err(Error::Hypothesis(format!(
                            "grading not multiplicative at components ({g},{h2})"
                        )));
                    }
                }
            }
        }
    }

    // p(a) = ε(a)·g on A_g
    for (g, cg) in components.iter().enumerate() {
        for x in cg.basis() {
            let got = p.apply(x);
            let mut want = vec![f.zero(); nl];
            want[g] = a.counit_el(x);
            if got != want {
                return Err(Error::Hypothesis(format!("p ≠ ε(·)g on component {g}")));
            }
        }
    }

    Ok(components)
}

/// The result of a successful Fourier-transform construction.
#[derive(Clone, Debug)]
pub struct FourierTransform {
    /// The coadjoint YD module on kΓ (module through p, trivial coaction).
    pub coadjoint: YDModule,
    /// ⊕_ψ k_ψ in the canonical character order.
    pub sum_of_characters: YDModule,
    pub characters: Vec<Character>,
    /// g ↦ Σ_ψ ψ(g) e_ψ, certified invertible, A-linear and A-colinear.
    pub transform: YDMorphism,
}

/// Build and certify the Fourier transform for a cocentral surjection
/// p: A → kΓ with Γ finite abelian.
///
/// Fails with distinct reports when |Γ| = 0 in the field and when the
/// field lacks a full set of exp(Γ)-th roots of unity.
pub fn fourier_transform(p: &HopfMorphism) -> Result<FourierTransform> {
    let a = p.source.clone();
    let l = p.target.clone();
    let f = &**a.field();
    let group = l
        .group()
        .ok_or_else(|| Error::InvalidInput("Fourier transform needs a group algebra target".into()))?
        .clone();
    if !group.abelian {
        return Err(Error::Hypothesis("Γ must be abelian".into()));
    }
    if !morphism_check(p).pass {
        return Err(Error::InvalidInput("p is not a Hopf algebra map".into()));
    }
    if !cocentral_check(p).pass {
        return Err(Error::Hypothesis("p is not cocentral".into()));
    }
    if p.matrix.rank(f) != l.dim() {
        return Err(Error::Hypothesis("p is not surjective".into()));
    }
    if f.is_zero(&f.from_i64(group.order as i64)) {
        return Err(Error::Hypothesis("|Γ| = 0 in k".into()));
    }
    let exponent = group.exponent();
    if (f.nth_roots_of_unity(exponent).len() as u64) < exponent {
        return Err(Error::Hypothesis("insufficient roots of unity".into()));
    }

    let characters = enumerate_characters(&l)?;
    if characters.len() != group.order {
        return Err(Error::Hypothesis("insufficient roots of unity".into()));
    }

    // coadjoint structure on kΓ: module through p, coaction trivial by
    // cocentrality
    let nl = l.dim();
    let mut action = Vec::with_capacity(a.dim());
    for j in 0..a.dim() {
        let pj = p.apply(&a.basis_element(j));
        let mut m = SparseMatrix::new(nl, nl);
        for x in 0..nl {
            let col = l.mul_el(&l.basis_element(x), &pj);
            for (i, v) in col.into_iter().enumerate() {
                if !f.is_zero(&v) {
                    m.set(f, i, x, v);
                }
            }
        }
        action.push(m);
    }
    let coaction = (0..nl).map(|x| trivial_coaction_row(&a, x)).collect();
    let coadjoint = YDModule::new_checked(a.clone(), nl, action, coaction)?;

    // ⊕_ψ k_ψ with ψ pulled back along p
    let mut parts = Vec::new();
    let mut pulled = Vec::new();
    for psi in &characters {
        let values: Vec<FieldElement> = (0..a.dim())
            .map(|j| crate::linalg::dot(f, &p.apply(&a.basis_element(j)), &psi.values))
            .collect();
        let pullback = Character::new(a.clone(), values)?;
        parts.push(k_psi(&pullback)?);
        pulled.push(pullback);
    }
    let sum = direct_sum_yd(&parts)?;

    // F(e_γ) = Σ_ψ ψ(γ) e_ψ
    let mut matrix = SparseMatrix::new(nl, nl);
    for (r, psi) in characters.iter().enumerate() {
        for g in 0..nl {
            let v = psi.values[g].clone();
            if !f.is_zero(&v) {
                matrix.set(f, r, g, v);
            }
        }
    }
    if matrix.inverse(f).is_err() {
        return Err(Error::Hypothesis("Fourier matrix is singular".into()));
    }
    let check = yd_morphism_check(&matrix, &coadjoint, &sum);
    if !check.pass {
        return Err(Error::InvalidInput(format!(
            "Fourier transform failed the YD morphism check: {:?}",
            check.witness
        )));
    }

    Ok(FourierTransform {
        coadjoint,
        sum_of_characters: sum,
        characters: pulled,
        transform: YDMorphism { matrix, invertible: true },
    })
}
