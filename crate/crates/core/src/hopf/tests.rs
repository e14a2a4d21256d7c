use std::sync::Arc;

use super::tower::{group_tower, linear_quotient_tower};
use super::*;
use crate::field::parse_field_spec;

pub(crate) fn kg(spec: &str, group: GroupData) -> Arc<FinDimHopf> {
    let field = Arc::new(parse_field_spec(spec).unwrap());
    Arc::new(group_algebra(group, field).unwrap())
}

#[test]
fn cyclic_two_in_char_two_has_identity_antipode() {
    let h = kg("Fp(2)", GroupData::cyclic(2).unwrap());
    assert_eq!(h.dim(), 2);
    let f = &**h.field();
    assert_eq!(*h.antipode_matrix(), SparseMatrix::identity(f, 2));
}

#[test]
fn symmetric_three_counit_is_all_ones() {
    let h = kg("Fp(3)", GroupData::symmetric(3).unwrap());
    assert_eq!(h.dim(), 6);
    let f = &**h.field();
    assert!(h.counit_vector().iter().all(|c| f.is_one(c)));
}

#[test]
fn cyclic_four_basis_is_grouplike() {
    let h = kg("Q", GroupData::cyclic(4).unwrap());
    for i in 0..4 {
        let cm = h.comult_basis(i);
        assert_eq!(cm.len(), 1);
        assert_eq!((cm[0].0, cm[0].1), (i, i));
    }
}

#[test]
fn group_algebra_passes_all_axioms() {
    for h in [
        kg("Q", GroupData::cyclic(4).unwrap()),
        kg("Fp(3)", GroupData::symmetric(3).unwrap()),
        kg("Fp(2)[x]/(x^2+x+1)", GroupData::cyclic(6).unwrap()),
        kg("Q", GroupData::dihedral(4).unwrap()),
    ] {
        assert!(h.check_axioms().all_pass());
    }
}

#[test]
fn corrupted_antipode_fails_with_witness() {
    // kZ3 over F4 with the antipode replaced by the identity:
    // m(S(g)⊗g) = g² ≠ 1, so the antipode axiom must fail
    let h = kg("Fp(2)[x]/(x^2+x+1)", GroupData::cyclic(3).unwrap());
    let f = &**h.field();
    let broken = FinDimHopf::from_tensors(
        h.field().clone(),
        3,
        (0..9).map(|ix| h.mult[(ix / 3) * 3 + ix % 3].clone()).collect(),
        h.unit_vector().to_vec(),
        (0..3).map(|i| h.comult_basis(i).to_vec()).collect(),
        h.counit_vector().to_vec(),
        SparseMatrix::identity(f, 3),
    )
    .unwrap();
    let report = broken.check_axioms();
    assert!(!report.all_pass());
    let antipode = report.get("antipode axiom").unwrap();
    assert!(!antipode.pass);
    assert!(antipode.witness.is_some());
    // all the bialgebra axioms still hold
    assert!(report.get("associativity").unwrap().pass);
    assert!(report.get("comultiplication is an algebra map").unwrap().pass);
}

#[test]
fn grouplike_to_unit_comultiplication_fails_coassociativity_or_counit() {
    // kZ2 with Δ(g) = g⊗1 is not a coalgebra in the required sense
    let h = kg("Q", GroupData::cyclic(2).unwrap());
    let f = &**h.field();
    let broken = FinDimHopf::from_tensors(
        h.field().clone(),
        2,
        (0..4).map(|ix| h.mult[(ix / 2) * 2 + ix % 2].clone()).collect(),
        h.unit_vector().to_vec(),
        vec![vec![(0, 0, f.one())], vec![(1, 0, f.one())]],
        h.counit_vector().to_vec(),
        h.antipode_matrix().clone(),
    )
    .unwrap();
    let report = broken.check_axioms();
    assert!(
        !report.get("coassociativity").unwrap().pass || !report.get("counitality").unwrap().pass
    );
}

#[test]
fn double_dual_recovers_structure_tensors() {
    let h = kg("Q", GroupData::symmetric(3).unwrap());
    let dd = dual_hopf(&dual_hopf(&h).unwrap()).unwrap();
    // under the canonical identification the tensors agree entrywise
    assert_eq!(h.unit_vector(), dd.unit_vector());
    assert_eq!(h.counit_vector(), dd.counit_vector());
    assert_eq!(h.antipode_matrix(), dd.antipode_matrix());
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            assert_eq!(h.mult_basis(i, j), dd.mult_basis(i, j));
        }
        let mut a = h.comult_basis(i).to_vec();
        let mut b = dd.comult_basis(i).to_vec();
        a.sort_by_key(|(x, y, _)| (*x, *y));
        b.sort_by_key(|(x, y, _)| (*x, *y));
        assert_eq!(a, b);
    }
}

#[test]
fn dual_of_kz2_is_isomorphic_via_character_matrix() {
    let h = kg("Q", GroupData::cyclic(2).unwrap());
    let f = &**h.field();
    let dual = Arc::new(dual_hopf(&h).unwrap());
    let mut m = SparseMatrix::new(2, 2);
    m.set(f, 0, 0, f.one());
    m.set(f, 0, 1, f.one());
    m.set(f, 1, 0, f.one());
    m.set(f, 1, 1, f.from_i64(-1));
    // columns of [[1,1],[1,-1]] send group-likes to the two characters
    let iso = HopfMorphism::new(h.clone(), dual.clone(), m.clone()).unwrap();
    assert!(morphism_check(&iso).pass);
    assert!(m.inverse(f).is_ok());
}

#[test]
fn dual_of_ks3_is_commutative_not_cocommutative() {
    let h = kg("Q", GroupData::symmetric(3).unwrap());
    let dual = dual_hopf(&h).unwrap();
    let commutative = (0..6).all(|i| {
        (0..6).all(|j| {
            dual.mul_el(&dual.basis_element(i), &dual.basis_element(j))
                == dual.mul_el(&dual.basis_element(j), &dual.basis_element(i))
        })
    });
    assert!(commutative);
    let f = &**dual.field();
    let cocommutative = (0..6).all(|i| {
        let mut fwd = vec![f.zero(); 36];
        let mut bwd = vec![f.zero(); 36];
        for (a, b, c) in dual.comult_basis(i) {
            fwd[a * 6 + b] = f.add(&fwd[a * 6 + b], c);
            bwd[b * 6 + a] = f.add(&bwd[b * 6 + a], c);
        }
        fwd == bwd
    });
    assert!(!cocommutative);
}

#[test]
fn identity_is_a_morphism() {
    let h = kg("Q", GroupData::cyclic(4).unwrap());
    let f = &**h.field();
    let id = HopfMorphism::new(h.clone(), h.clone(), SparseMatrix::identity(f, 4)).unwrap();
    assert!(morphism_check(&id).pass);
}

#[test]
fn reduction_mod_two_is_a_morphism_but_its_section_is_not() {
    let z4 = kg("Q", GroupData::cyclic(4).unwrap());
    let z2 = kg("Q", GroupData::cyclic(2).unwrap());
    let f = &**z4.field();
    // h^k ↦ g^(k mod 2)
    let mut red = SparseMatrix::new(2, 4);
    for k in 0..4 {
        red.set(f, k % 2, k, f.one());
    }
    let p = HopfMorphism::new(z4.clone(), z2.clone(), red).unwrap();
    assert!(morphism_check(&p).pass);

    // g ↦ h cannot respect g² = 1 since h² ≠ 1
    let mut sec = SparseMatrix::new(4, 2);
    sec.set(f, 0, 0, f.one());
    sec.set(f, 1, 1, f.one());
    let s = HopfMorphism::new(z2, z4, sec).unwrap();
    let check = morphism_check(&s);
    assert!(!check.pass);
    assert!(check.witness.unwrap().contains("multiplicativity"));
}

#[test]
fn group_algebra_morphisms_are_cocentral() {
    // cocommutative source makes every Hopf map cocentral
    let z4 = kg("Q", GroupData::cyclic(4).unwrap());
    let z2 = kg("Q", GroupData::cyclic(2).unwrap());
    let f = &**z4.field();
    let mut red = SparseMatrix::new(2, 4);
    for k in 0..4 {
        red.set(f, k % 2, k, f.one());
    }
    let p = HopfMorphism::new(z4, z2, red).unwrap();
    assert!(cocentral_check(&p).pass);
}

#[test]
fn counit_is_cocentral() {
    let h = kg("Q", GroupData::symmetric(3).unwrap());
    let f = &**h.field();
    let k_triv = kg("Q", GroupData::cyclic(1).unwrap());
    let eps = SparseMatrix::from_rows_vec(f, &[h.counit_vector().to_vec()]);
    let p = HopfMorphism::new(h, k_triv, eps).unwrap();
    assert!(morphism_check(&p).pass);
    assert!(cocentral_check(&p).pass);
}

#[test]
fn dual_of_non_normal_inclusion_is_not_cocentral() {
    // k^{S3} → k^{Z2}, the dual of ⟨(12)⟩ ↪ S3: fails since (12) is not central
    let s3 = GroupData::symmetric(3).unwrap();
    let t = s3.names.iter().position(|n| n == "(12)").unwrap();
    let field = Arc::new(parse_field_spec("Q").unwrap());
    let f = &*field;
    let a = Arc::new(group_algebra(s3.clone(), field.clone()).unwrap());
    let sub = s3.generated_subgroup(&[t]);
    let z2 = kg("Q", GroupData::cyclic(2).unwrap());
    let mut incl = SparseMatrix::new(6, 2);
    for (j, &x) in sub.iter().enumerate() {
        incl.set(f, x, j, f.one());
    }
    let i = HopfMorphism::new(z2.clone(), a.clone(), incl).unwrap();
    assert!(morphism_check(&i).pass);

    let a_dual = Arc::new(dual_hopf(&a).unwrap());
    let z2_dual = Arc::new(dual_hopf(&z2).unwrap());
    let i_dual = HopfMorphism::new(a_dual, z2_dual, i.matrix.transpose()).unwrap();
    assert!(morphism_check(&i_dual).pass);
    let check = cocentral_check(&i_dual);
    assert!(!check.pass);
    assert!(check.witness.is_some());
}

#[test]
fn z2_in_z4_is_exact() {
    let field = Arc::new(parse_field_spec("Q").unwrap());
    let tower = group_tower(GroupData::cyclic(4).unwrap(), &[2], field).unwrap();
    let w = verify_exact_sequence(&tower.inclusion, &tower.projection);
    assert!(w.all_pass(), "{w:?}");
    assert!(w.p_after_i_is_counit_unit);
    assert_eq!(w.dim_ker_p, 2);
}

#[test]
fn z3_in_s3_is_exact() {
    let s3 = GroupData::symmetric(3).unwrap();
    let c = s3.names.iter().position(|n| n == "(123)").unwrap();
    let field = Arc::new(parse_field_spec("Fp(3)").unwrap());
    let tower = group_tower(s3, &[c], field).unwrap();
    assert_eq!(tower.l.dim(), 2);
    let w = verify_exact_sequence(&tower.inclusion, &tower.projection);
    assert!(w.all_pass(), "{w:?}");
}

#[test]
fn non_normal_subgroup_fails_condition_two() {
    let s3 = GroupData::symmetric(3).unwrap();
    let t = s3.names.iter().position(|n| n == "(12)").unwrap();
    let field = Arc::new(parse_field_spec("Q").unwrap());
    let tower = linear_quotient_tower(s3, &[t], field).unwrap();
    let w = verify_exact_sequence(&tower.inclusion, &tower.projection);
    // span{(e−(12))σ} ≠ span{σ(e−(12))}
    assert!(!w.ker_p_eq_a_b_plus || !w.ker_p_eq_b_plus_a);
    assert_ne!(
        (w.dim_b_plus_a == w.dim_a_b_plus && w.ker_p_eq_b_plus_a && w.ker_p_eq_a_b_plus),
        true,
        "condition (2) must fail: {w:?}"
    );
    assert!(!w.all_pass());
}

#[test]
fn condition_two_implies_p_after_i_collapses() {
    // paper-level consistency on all shipped normal towers
    let field = Arc::new(parse_field_spec("Q").unwrap());
    for (g, gens) in [
        (GroupData::cyclic(4).unwrap(), vec![2usize]),
        (GroupData::cyclic(6).unwrap(), vec![3]),
        (GroupData::cyclic(6).unwrap(), vec![2]),
    ] {
        let tower = group_tower(g, &gens, field.clone()).unwrap();
        let w = verify_exact_sequence(&tower.inclusion, &tower.projection);
        if w.condition2() {
            assert!(w.p_after_i_is_counit_unit);
        }
    }
}

#[test]
fn double_has_square_dimension_and_is_associative() {
    let h = kg("Fp(2)", GroupData::cyclic(2).unwrap());
    let (d, _) = double::drinfeld_double(&h).unwrap();
    assert_eq!(d.dim(), 4);
    assert!(d.check_axioms().pass);

    let s3 = kg("Fp(3)", GroupData::symmetric(3).unwrap());
    let (d, _) = double::drinfeld_double(&s3).unwrap();
    assert_eq!(d.dim(), 36);
    assert!(d.check_axioms().pass);
}

#[test]
fn double_of_abelian_group_is_componentwise_tensor_product() {
    // D(kG) ≅ k^G ⊗ kG for abelian G, with equal structure constants
    let h = kg("Q", GroupData::cyclic(4).unwrap());
    let f = &**h.field();
    let (d, tr) = double::drinfeld_double(&h).unwrap();
    let table = &h.group().unwrap().table;
    let n = 4;
    for fi in 0..n {
        for a in 0..n {
            for g in 0..n {
                for b in 0..n {
                    let row = tr.index(fi, a);
                    let col = tr.index(g, b);
                    let got = d.mult_basis(row, col);
                    if fi == g {
                        assert_eq!(got, &[(tr.index(fi, table[a][b]), f.one())]);
                    } else {
                        assert!(got.is_empty());
                    }
                }
            }
        }
    }
}
