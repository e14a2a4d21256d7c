//! The bijection between YD structures on V and left modules over the
//! double algebra: identity on underlying linear maps in both directions.

use crate::error::Result;
use crate::hopf::{DoubleTranslation, FDModule};
use crate::linalg::SparseMatrix;

use super::YDModule;

/// YD module → left module over D(A): the basis element e^f # e_a acts by
/// v ↦ e^f(v₍₁₎)·(v₍₀₎ ◁ e_a).
pub fn to_double_module(v: &YDModule, tr: &DoubleTranslation) -> Result<FDModule> {
    let h = &tr.hopf;
    let f = &**h.field();
    let n = h.dim();
    let d = v.dim();

    // C_f: pair the coaction with the functional e^f
    let mut pairings: Vec<SparseMatrix> = (0..n).map(|_| SparseMatrix::new(d, d)).collect();
    for col in 0..d {
        for (w, a, c) in v.coaction(col) {
            pairings[*a].add_to(f, *w, col, c);
        }
    }

    let mut action = Vec::with_capacity(n * n);
    for func in 0..n {
        for a in 0..n {
            action.push(v.action(a).mul(f, &pairings[func]));
        }
    }
    FDModule::new(tr.double.clone(), d, action)
}

/// Left D(A)-module → YD structure on the same space: the algebra acts
/// through ε # e_a, the coaction is recovered from the e^k # 1 operators.
/// The result is not validated; pairing this with
/// [`YDModule::yd_check`](super::YDModule::yd_check) against
/// [`FDModule::check_axioms`] is exactly the behavioral contract that pins
/// the double's convention.
pub fn from_double_module(w: &FDModule, tr: &DoubleTranslation) -> Result<YDModule> {
    let h = &tr.hopf;
    let n = h.dim();
    let d = w.dim;

    let mut action = Vec::with_capacity(n);
    for a in 0..n {
        action.push(w.action_of(&tr.epsilon_sharp(a)));
    }
    let mut coaction = vec![Vec::new(); d];
    for k in 0..n {
        let p_k = w.action_of(&tr.functional_sharp_one(k));
        for (&(r, c), val) in p_k.iter() {
            coaction[c].push((r, k, val.clone()));
        }
    }
    for row in coaction.iter_mut() {
        row.sort_by_key(|(w0, a, _)| (*w0, *a));
    }
    YDModule::new(h.clone(), d, action, coaction)
}
