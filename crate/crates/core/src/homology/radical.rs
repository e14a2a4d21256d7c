//! Jacobson radical of a finite-dimensional algebra over an exact field.
//!
//! Characteristic 0 uses the trace-form kernel (Dickson's criterion). In
//! characteristic p the trace form can vanish identically, so a descending
//! chain of subspaces cut out by characteristic-polynomial coefficients
//! c_{p^j} of left-multiplication operators is used instead; on each stage
//! the coefficient map becomes p^j-semilinear, so taking p^j-th roots
//! (Frobenius is invertible on our perfect base fields) turns the stage
//! into a linear system.
//!
//! Whatever the chain produces is then *verified*: the result must be a
//! two-sided ideal, nilpotent with exponent at most dim, and the quotient
//! must have zero radical on recheck. A failure of any of these is a hard
//! error, not a wrong answer.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::hopf::FinDimAlgebra;
use crate::linalg::{SparseMatrix, Subspace};

/// Characteristic polynomial of a square matrix via Hessenberg reduction,
/// returned low-to-high: p(λ) = Σ coeffs[i] λ^i, monic.
pub fn charpoly(f: &FieldSpec, m: &SparseMatrix) -> Vec<FieldElement> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "characteristic polynomial needs a square matrix");
    let mut a = m.to_dense(f);

    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let pivot = (j + 1..n).find(|&i| !f.is_zero(&a[i][j]));
        let Some(p) = pivot else { continue };
        if p != j + 1 {
            a.swap(p, j + 1);
            for row in a.iter_mut() {
                row.swap(p, j + 1);
            }
        }
        let inv = f.inv(&a[j + 1][j]).unwrap();
        for i in j + 2..n {
            if f.is_zero(&a[i][j]) {
                continue;
            }
            let factor = f.mul(&a[i][j], &inv);
            for c in 0..n {
                let t = f.mul(&factor, &a[j + 1][c]);
                a[i][c] = f.sub(&a[i][c], &t);
            }
            for r in 0..n {
                let t = f.mul(&factor, &a[r][i]);
                a[r][j + 1] = f.add(&a[r][j + 1], &t);
            }
        }
    }

    // determinant recurrence on leading blocks of λI − H
    let mut polys: Vec<Vec<FieldElement>> = vec![vec![f.one()]];
    for k in 1..=n {
        // (λ − h_{kk})·p_{k−1}
        let prev = polys[k - 1].clone();
        let mut cur = vec![f.zero(); prev.len() + 1];
        for (i, c) in prev.iter().enumerate() {
            cur[i + 1] = f.add(&cur[i + 1], c);
            let t = f.mul(&a[k - 1][k - 1], c);
            cur[i] = f.sub(&cur[i], &t);
        }
        // − Σ_i h_{ik} (∏ subdiagonals) p_{i−1}
        let mut subdiag_prod = f.one();
        for i in (1..k).rev() {
            // product of h_{j+1,j} for j = i..k−1
            subdiag_prod = f.mul(&subdiag_prod, &a[i][i - 1]);
            let h = &a[i - 1][k - 1];
            if f.is_zero(h) || f.is_zero(&subdiag_prod) {
                continue;
            }
            let c = f.mul(h, &subdiag_prod);
            for (ix, pc) in polys[i - 1].iter().enumerate() {
                let t = f.mul(&c, pc);
                cur[ix] = f.sub(&cur[ix], &t);
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// Coefficient c_i of the characteristic polynomial written as
/// Σ (−1)^i c_i λ^{n−i} (elementary-symmetric normalization).
fn char_coeff(f: &FieldSpec, poly: &[FieldElement], i: usize) -> FieldElement {
    let n = poly.len() - 1;
    let raw = poly[n - i].clone();
    if i % 2 == 0 {
        raw
    } else {
        f.neg(&raw)
    }
}

/// The Jacobson radical, as an echelonized subspace of the algebra.
pub fn radical(alg: &FinDimAlgebra) -> Result<Subspace> {
    radical_inner(alg, true)
}

fn radical_inner(alg: &FinDimAlgebra, verify: bool) -> Result<Subspace> {
    let f = &**alg.field();
    let n = alg.dim();
    let rad = match f.characteristic() {
        0 => {
            // Dickson: kernel of the trace form tr(L_x L_y)
            let left: Vec<SparseMatrix> =
                (0..n).map(|i| alg.left_mult_matrix(&alg.basis_element(i))).collect();
            let mut gram = SparseMatrix::new(n, n);
            for y in 0..n {
                for x in 0..n {
                    let prod = left[y].mul(f, &left[x]);
                    let mut tr = f.zero();
                    for i in 0..n {
                        tr = f.add(&tr, &prod.get(f, i, i));
                    }
                    gram.set(f, y, x, tr);
                }
            }
            let (_, ns) = gram.rank_nullspace(f);
            Subspace::from_vectors(f, n, &ns)
        }
        p => {
            // descending chain by c_{p^j} coefficients
            let mut current = Subspace::full(f, n);
            let mut power = 1u64; // p^{j-1}
            let mut root_iters = 0u32;
            while power <= n as u64 {
                let basis = current.basis().to_vec();
                let m = basis.len();
                if m == 0 {
                    break;
                }
                let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(m);
                // rows indexed by y, columns by x: t_{sy} = c_{p^{j-1}}(x_r y_s)^{1/p^{j-1}}
                let mut t = vec![vec![f.zero(); m]; m];
                for (r, x) in basis.iter().enumerate() {
                    for (s, y) in basis.iter().enumerate() {
                        let prod = alg.mul_el(x, y);
                        let lm = alg.left_mult_matrix(&prod);
                        let cp = charpoly(f, &lm);
                        let c = char_coeff(f, &cp, power as usize);
                        t[r][s] = if root_iters == 0 { c } else { f.pth_root(&c, root_iters)? };
                    }
                }
                for s in 0..m {
                    rows.push((0..m).map(|r| t[r][s].clone()).collect());
                }
                let constraint = SparseMatrix::from_rows_vec(f, &rows);
                let (_, ns) = constraint.rank_nullspace(f);
                // back to ambient coordinates
                let ambient: Vec<Vec<FieldElement>> = ns
                    .iter()
                    .map(|coeffs| {
                        let mut v = vec![f.zero(); n];
                        for (r, c) in coeffs.iter().enumerate() {
                            if f.is_zero(c) {
                                continue;
                            }
                            for (i, b) in basis[r].iter().enumerate() {
                                v[i] = f.add(&v[i], &f.mul(c, b));
                            }
                        }
                        v
                    })
                    .collect();
                current = Subspace::from_vectors(f, n, &ambient);
                power *= p;
                root_iters += 1;
            }
            current
        }
    };

    if verify {
        verify_radical(alg, &rad)?;
    }
    Ok(rad)
}

fn verify_radical(alg: &FinDimAlgebra, rad: &Subspace) -> Result<()> {
    let f = &**alg.field();
    let n = alg.dim();

    // two-sided ideal
    for x in rad.basis() {
        for b in 0..n {
            if !rad.contains(f, &alg.mul_el(x, &alg.basis_element(b)))
                || !rad.contains(f, &alg.mul_el(&alg.basis_element(b), x))
            {
                return Err(Error::InvalidInput(
                    "computed radical is not a two-sided ideal".into(),
                ));
            }
        }
    }

    // nilpotent with exponent ≤ dim
    let mut power = rad.clone();
    let mut steps = 1;
    while power.dim() > 0 {
        if steps > n {
            return Err(Error::InvalidInput("computed radical is not nilpotent".into()));
        }
        let mut next = Vec::new();
        for x in power.basis() {
            for y in rad.basis() {
                next.push(alg.mul_el(x, y));
            }
        }
        power = Subspace::from_vectors(f, n, &next);
        steps += 1;
    }

    // the quotient is semisimple on recheck
    if rad.dim() > 0 {
        let (quotient, _) = alg.quotient_by(rad);
        let qrad = radical_inner(&quotient, false)?;
        if qrad.dim() != 0 {
            return Err(Error::InvalidInput(
                "quotient by the computed radical still has a radical".into(),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_field_spec;
    use crate::hopf::{group_algebra, GroupData};
    use std::sync::Arc;

    fn algebra(spec: &str, g: GroupData) -> FinDimAlgebra {
        let field = Arc::new(parse_field_spec(spec).unwrap());
        group_algebra(g, field).unwrap().algebra_part()
    }

    #[test]
    fn charpoly_of_companion_block() {
        let q = parse_field_spec("Q").unwrap();
        // companion matrix of λ² − λ − 1
        let mut m = SparseMatrix::new(2, 2);
        m.set(&q, 0, 1, q.one());
        m.set(&q, 1, 0, q.one());
        m.set(&q, 1, 1, q.one());
        let p = charpoly(&q, &m);
        assert_eq!(p, vec![q.from_i64(-1), q.from_i64(-1), q.one()]);
    }

    #[test]
    fn charpoly_matches_trace_and_determinant() {
        let f5 = parse_field_spec("Fp(5)").unwrap();
        let mut m = SparseMatrix::new(3, 3);
        let data = [[1i64, 2, 0], [0, 3, 4], [2, 0, 1]];
        for (i, row) in data.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(&f5, i, j, f5.from_i64(v));
            }
        }
        let p = charpoly(&f5, &m);
        // trace = 5 ≡ 0, det = 1·3·1 + 2·4·2 − 0 ... compute: 3 + 16 + 0 − (0 + 0 + 0)·... = 19 ≡ 4
        assert_eq!(char_coeff(&f5, &p, 1), f5.from_i64(5));
        assert_eq!(char_coeff(&f5, &p, 3), f5.from_i64(19));
    }

    #[test]
    fn modular_group_algebra_radical_is_augmentation_style_ideal() {
        // kZ2 over F2: rad = span{e+g}
        let alg = algebra("Fp(2)", GroupData::cyclic(2).unwrap());
        let rad = radical(&alg).unwrap();
        assert_eq!(rad.dim(), 1);
        let f = &**alg.field();
        let v = vec![f.one(), f.one()];
        assert!(rad.contains(f, &v));
    }

    #[test]
    fn maschke_in_characteristic_zero() {
        let alg = algebra("Q", GroupData::cyclic(3).unwrap());
        assert_eq!(radical(&alg).unwrap().dim(), 0);
        let alg = algebra("Q", GroupData::symmetric(3).unwrap());
        assert_eq!(radical(&alg).unwrap().dim(), 0);
    }

    #[test]
    fn kz6_over_f4_has_three_dimensional_radical() {
        // rad = (e + h³)·kZ6: dimension 3
        let alg = algebra("Fp(2)[x]/(x^2+x+1)", GroupData::cyclic(6).unwrap());
        let rad = radical(&alg).unwrap();
        assert_eq!(rad.dim(), 3);
        let f = &**alg.field();
        // e + h³ is in the radical
        let mut v = vec![f.zero(); 6];
        v[0] = f.one();
        v[3] = f.one();
        assert!(rad.contains(f, &v));
    }

    #[test]
    fn s3_in_characteristic_three() {
        // kS3 over F3: the radical is the kernel of the two 1-dim reps'
        // span... dimension 4 (block theory: two 1-dim simples survive)
        let alg = algebra("Fp(3)", GroupData::symmetric(3).unwrap());
        let rad = radical(&alg).unwrap();
        assert_eq!(rad.dim(), 4);
    }

    #[test]
    fn semisimple_modular_case() {
        // kZ3 over F2: 3 invertible, Maschke applies
        let alg = algebra("Fp(2)", GroupData::cyclic(3).unwrap());
        assert_eq!(radical(&alg).unwrap().dim(), 0);
        // kZ3 over F4 likewise
        let alg = algebra("Fp(2)[x]/(x^2+x+1)", GroupData::cyclic(3).unwrap());
        assert_eq!(radical(&alg).unwrap().dim(), 0);
    }
}
