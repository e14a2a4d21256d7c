//! Presented Hopf algebras: generators, relations, coalgebra data on the
//! generators, and a completed rewriting system up to a degree cap.
//!
//! The constructors build the universal cosovereign algebras H(F), the
//! bilinear-form algebras B(E), presented group algebras, free products and
//! Z2 crossed products; `check_axioms_to_cap` verifies that the structure
//! maps are well-defined modulo the relations.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::hopf::Check;
use crate::linalg::SparseMatrix;

use super::poly::{NCPoly, TensorPoly, Word};
use super::rewrite::{CompletionOptions, RewriteSystem};

#[derive(Clone, Debug)]
pub struct PresentedHopf {
    field: Arc<FieldSpec>,
    pub letters: Vec<String>,
    pub relations: Vec<NCPoly>,
    /// Δ image of each letter in the tensor square.
    pub comult: Vec<TensorPoly>,
    /// ε image of each letter.
    pub counit: Vec<FieldElement>,
    /// S image of each letter.
    pub antipode: Vec<NCPoly>,
    pub rewrite: RewriteSystem,
}

impl PresentedHopf {
    pub fn new(
        field: Arc<FieldSpec>,
        letters: Vec<String>,
        relations: Vec<NCPoly>,
        comult: Vec<TensorPoly>,
        counit: Vec<FieldElement>,
        antipode: Vec<NCPoly>,
        opts: &CompletionOptions,
    ) -> Result<Self> {
        let n = letters.len();
        if comult.len() != n || counit.len() != n || antipode.len() != n {
            return Err(Error::InvalidInput("structure map count mismatch".into()));
        }
        let rewrite = RewriteSystem::complete(field.clone(), &relations, opts)?;
        Ok(PresentedHopf { field, letters, relations, comult, counit, antipode, rewrite })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn cap(&self) -> usize {
        self.rewrite.cap
    }

    pub fn alphabet_size(&self) -> usize {
        self.letters.len()
    }

    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        self.rewrite.normal_form(p)
    }

    /// Δ extended multiplicatively to a word.
    pub fn comult_word(&self, w: &Word) -> TensorPoly {
        let f = &*self.field;
        let mut acc = TensorPoly::one(f);
        for &l in &w.0 {
            acc = acc.mul(f, &self.comult[l as usize]);
        }
        acc
    }

    pub fn comult_poly(&self, p: &NCPoly) -> TensorPoly {
        let f = &*self.field;
        let mut acc = TensorPoly::zero();
        for (w, c) in &p.terms {
            acc = acc.add(f, &self.comult_word(w).scale(f, c));
        }
        acc
    }

    /// S extended anti-multiplicatively to a word.
    pub fn antipode_word(&self, w: &Word) -> NCPoly {
        let f = &*self.field;
        let mut acc = NCPoly::one(f);
        for &l in w.0.iter().rev() {
            acc = acc.mul(f, &self.antipode[l as usize]);
        }
        acc
    }

    pub fn antipode_poly(&self, p: &NCPoly) -> NCPoly {
        let f = &*self.field;
        let mut acc = NCPoly::zero();
        for (w, c) in &p.terms {
            acc = acc.add(f, &self.antipode_word(w).scale(f, c));
        }
        acc
    }

    pub fn counit_word(&self, w: &Word) -> FieldElement {
        let f = &*self.field;
        let mut acc = f.one();
        for &l in &w.0 {
            acc = f.mul(&acc, &self.counit[l as usize]);
        }
        acc
    }

    pub fn counit_poly(&self, p: &NCPoly) -> FieldElement {
        let f = &*self.field;
        let mut acc = f.zero();
        for (w, c) in &p.terms {
            acc = f.add(&acc, &f.mul(c, &self.counit_word(w)));
        }
        acc
    }

    /// Number of irreducible words of length ≤ d for d = 0..=max_degree.
    pub fn filtration_dims(&self, max_degree: usize) -> Vec<usize> {
        (0..=max_degree)
            .map(|d| self.rewrite.filtration_dim(self.alphabet_size(), d))
            .collect()
    }

    /// Verify, up to the cap, that Δ, ε and S are well-defined on the
    /// relations and that the antipode identity holds on every generator.
    pub fn check_axioms_to_cap(&self) -> Vec<Check> {
        let f = &*self.field;
        let mut out = Vec::new();

        let mut comult_ok = Check::pass("comultiplication well-defined");
        for (ix, r) in self.relations.iter().enumerate() {
            let image = self.comult_poly(r);
            match self.rewrite.normal_form_tensor(&image) {
                Ok(nf) if nf.is_zero() => {}
                Ok(_) => {
                    comult_ok =
                        Check::fail("comultiplication well-defined", format!("relation {ix}"));
                    break;
                }
                Err(e) => {
                    comult_ok = Check::fail(
                        "comultiplication well-defined",
                        format!("relation {ix}: {e}"),
                    );
                    break;
                }
            }
        }
        out.push(comult_ok);

        let mut counit_ok = Check::pass("counit well-defined");
        for (ix, r) in self.relations.iter().enumerate() {
            if !f.is_zero(&self.counit_poly(r)) {
                counit_ok = Check::fail("counit well-defined", format!("relation {ix}"));
                break;
            }
        }
        out.push(counit_ok);

        let mut antipode_ok = Check::pass("antipode well-defined");
        for (ix, r) in self.relations.iter().enumerate() {
            match self.normal_form(&self.antipode_poly(r)) {
                Ok(nf) if nf.is_zero() => {}
                Ok(_) => {
                    antipode_ok = Check::fail("antipode well-defined", format!("relation {ix}"));
                    break;
                }
                Err(e) => {
                    antipode_ok =
                        Check::fail("antipode well-defined", format!("relation {ix}: {e}"));
                    break;
                }
            }
        }
        out.push(antipode_ok);

        let mut identity_ok = Check::pass("antipode identity on generators");
        'gens: for l in 0..self.alphabet_size() {
            // m(S⊗id)Δ(x) = ε(x)1 = m(id⊗S)Δ(x)
            let delta = &self.comult[l];
            let mut left = NCPoly::zero();
            let mut right = NCPoly::zero();
            for ((w1, w2), c) in &delta.terms {
                let s1 = self.antipode_word(w1);
                let t = s1.mul(f, &NCPoly::term(f, f.one(), w2.clone())).scale(f, c);
                left = left.add(f, &t);
                let s2 = self.antipode_word(w2);
                let t = NCPoly::term(f, f.one(), w1.clone()).mul(f, &s2).scale(f, c);
                right = right.add(f, &t);
            }
            let expected = NCPoly::term(f, self.counit[l].clone(), Word::empty());
            for side in [left, right] {
                match self.normal_form(&side.sub(f, &expected)) {
                    Ok(nf) if nf.is_zero() => {}
                    _ => {
                        identity_ok = Check::fail(
                            "antipode identity on generators",
                            format!("generator {}", self.letters[l]),
                        );
                        break 'gens;
                    }
                }
            }
        }
        out.push(identity_ok);
        out
    }
}

// ----- matrices of polynomials -----

pub(crate) type PolyMatrix = Vec<Vec<NCPoly>>;

pub(crate) fn letter_matrix(f: &FieldSpec, offset: usize, n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| NCPoly::letter(f, (offset + i * n + j) as u8)).collect())
        .collect()
}

pub(crate) fn scalar_matrix(f: &FieldSpec, m: &SparseMatrix) -> PolyMatrix {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| NCPoly::term(f, m.get(f, i, j), Word::empty()))
                .collect()
        })
        .collect()
}

pub(crate) fn pm_transpose(m: &PolyMatrix) -> PolyMatrix {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols).map(|j| (0..rows).map(|i| m[i][j].clone()).collect()).collect()
}

pub(crate) fn pm_mul(f: &FieldSpec, a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let inner = b.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = NCPoly::zero();
                    for (k, brow) in b.iter().enumerate().take(inner) {
                        acc = acc.add(f, &a[i][k].mul(f, &brow[j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Entries of M − I as relation polynomials.
pub(crate) fn pm_minus_identity(f: &FieldSpec, m: &PolyMatrix) -> Vec<NCPoly> {
    let mut out = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            let mut rel = p.clone();
            if i == j {
                rel = rel.sub(f, &NCPoly::one(f));
            }
            out.push(rel);
        }
    }
    out
}

// ----- constructors -----

fn matrix_comult(f: &FieldSpec, offset: usize, n: usize) -> Vec<TensorPoly> {
    // Δ(x_ij) = Σ_k x_ik ⊗ x_kj
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut t = TensorPoly::zero();
            for k in 0..n {
                t.add_term(
                    f,
                    &f.one(),
                    Word::letter((offset + i * n + k) as u8),
                    Word::letter((offset + k * n + j) as u8),
                );
            }
            out.push(t);
        }
    }
    out
}

fn delta_counit(f: &FieldSpec, n: usize) -> Vec<FieldElement> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(if i == j { f.one() } else { f.zero() });
        }
    }
    out
}

/// The universal cosovereign Hopf algebra H(F) on matrix generators u, v
/// with relations uvᵗ = vᵗu = I and vFuᵗF⁻¹ = FuᵗF⁻¹v = I.
pub fn universal_cosovereign(
    field: Arc<FieldSpec>,
    f_matrix: &SparseMatrix,
    opts: &CompletionOptions,
) -> Result<PresentedHopf> {
    let f = &*field;
    let n = f_matrix.rows();
    if n < 2 || f_matrix.cols() != n {
        return Err(Error::InvalidInput("F must be square of size at least 2".into()));
    }
    let f_inv = f_matrix
        .inverse(f)
        .map_err(|_| Error::InvalidInput("F must be invertible".into()))?;

    let mut letters = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            letters.push(format!("u{i}{j}"));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            letters.push(format!("v{i}{j}"));
        }
    }

    let u = letter_matrix(f, 0, n);
    let v = letter_matrix(f, n * n, n);
    let fs = scalar_matrix(f, f_matrix);
    let fs_inv = scalar_matrix(f, &f_inv);

    let mut relations = Vec::new();
    relations.extend(pm_minus_identity(f, &pm_mul(f, &u, &pm_transpose(&v))));
    relations.extend(pm_minus_identity(f, &pm_mul(f, &pm_transpose(&v), &u)));
    let fuf = pm_mul(f, &fs, &pm_mul(f, &pm_transpose(&u), &fs_inv));
    relations.extend(pm_minus_identity(f, &pm_mul(f, &v, &fuf)));
    relations.extend(pm_minus_identity(f, &pm_mul(f, &fuf, &v)));

    let mut comult = matrix_comult(f, 0, n);
    comult.extend(matrix_comult(f, n * n, n));
    let mut counit = delta_counit(f, n);
    counit.extend(delta_counit(f, n));

    // S(u) = vᵗ, S(v) = F uᵗ F⁻¹
    let mut antipode = Vec::new();
    for i in 0..n {
        for j in 0..n {
            antipode.push(NCPoly::letter(f, (n * n + j * n + i) as u8));
        }
    }
    for i in 0..n {
        for j in 0..n {
            antipode.push(fuf[i][j].clone());
        }
    }

    PresentedHopf::new(field, letters, relations, comult, counit, antipode, opts)
}

/// The Hopf algebra B(E) of a nondegenerate bilinear form, on generators
/// a_ij with relations E⁻¹aᵗEa = I = aE⁻¹aᵗE and S(a) = E⁻¹aᵗE.
pub fn bilinear_form_hopf(
    field: Arc<FieldSpec>,
    e_matrix: &SparseMatrix,
    opts: &CompletionOptions,
) -> Result<PresentedHopf> {
    let f = &*field;
    let n = e_matrix.rows();
    if n < 2 || e_matrix.cols() != n {
        return Err(Error::InvalidInput("E must be square of size at least 2".into()));
    }
    let e_inv = e_matrix
        .inverse(f)
        .map_err(|_| Error::InvalidInput("E must be invertible".into()))?;

    let mut letters = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            letters.push(format!("a{i}{j}"));
        }
    }
    let a = letter_matrix(f, 0, n);
    let es = scalar_matrix(f, e_matrix);
    let es_inv = scalar_matrix(f, &e_inv);
    let eae = pm_mul(f, &es_inv, &pm_mul(f, &pm_transpose(&a), &es));

    let mut relations = Vec::new();
    relations.extend(pm_minus_identity(f, &pm_mul(f, &eae, &a)));
    relations.extend(pm_minus_identity(f, &pm_mul(f, &a, &eae)));

    let comult = matrix_comult(f, 0, n);
    let counit = delta_counit(f, n);
    let antipode = eae.into_iter().flatten().collect();

    PresentedHopf::new(field, letters, relations, comult, counit, antipode, opts)
}

/// The standard 2×2 q-matrix E_q = [[0, 1], [−q⁻¹, 0]]; B(E_q) is the
/// coordinate algebra of quantum SL2.
pub fn standard_q_matrix(f: &FieldSpec, q: &FieldElement) -> Result<SparseMatrix> {
    let mut m = SparseMatrix::new(2, 2);
    m.set(f, 0, 1, f.one());
    m.set(f, 1, 0, f.neg(&f.inv(q)?));
    Ok(m)
}

/// kZ2 as a presented Hopf algebra on one group-like generator.
pub fn presented_z2(field: Arc<FieldSpec>, opts: &CompletionOptions) -> Result<PresentedHopf> {
    let f = &*field;
    let g = NCPoly::letter(f, 0);
    let rel = g.mul(f, &g).sub(f, &NCPoly::one(f));
    PresentedHopf::new(
        field.clone(),
        vec!["g".into()],
        vec![rel],
        vec![TensorPoly::term(f, f.one(), Word::letter(0), Word::letter(0))],
        vec![f.one()],
        vec![NCPoly::letter(f, 0)],
        opts,
    )
}

/// The trivial presented Hopf algebra k (empty alphabet).
pub fn presented_trivial(field: Arc<FieldSpec>, opts: &CompletionOptions) -> Result<PresentedHopf> {
    PresentedHopf::new(field, Vec::new(), Vec::new(), Vec::new(), Vec::new(), Vec::new(), opts)
}

/// Free product: disjoint union of generators and relations, no cross
/// relations. Colliding names get a prime appended.
pub fn free_product(
    h1: &PresentedHopf,
    h2: &PresentedHopf,
    opts: &CompletionOptions,
) -> Result<PresentedHopf> {
    if !Arc::ptr_eq(&h1.field, &h2.field) {
        return Err(Error::SpecMismatch("free product factors over different fields".into()));
    }
    let f = &*h1.field;
    let offset = h1.alphabet_size();
    let mut letters = h1.letters.clone();
    for name in &h2.letters {
        let mut candidate = name.clone();
        while letters.contains(&candidate) {
            candidate.push('\'');
        }
        letters.push(candidate);
    }
    let shift_word = |w: &Word| Word(w.0.iter().map(|&l| l + offset as u8).collect());
    let shift_poly = |p: &NCPoly| NCPoly {
        terms: p.terms.iter().map(|(w, c)| (shift_word(w), c.clone())).collect(),
    };
    let shift_tensor = |t: &TensorPoly| TensorPoly {
        terms: t
            .terms
            .iter()
            .map(|((l, r), c)| ((shift_word(l), shift_word(r)), c.clone()))
            .collect(),
    };

    let mut relations = h1.relations.clone();
    relations.extend(h2.relations.iter().map(shift_poly));
    let mut comult = h1.comult.clone();
    comult.extend(h2.comult.iter().map(shift_tensor));
    let mut counit = h1.counit.clone();
    counit.extend(h2.counit.iter().cloned());
    let mut antipode = h1.antipode.clone();
    antipode.extend(h2.antipode.iter().map(shift_poly));

    let _ = f;
    PresentedHopf::new(h1.field.clone(), letters, relations, comult, counit, antipode, opts)
}

/// A generator-image map between presented Hopf algebras.
#[derive(Clone, Debug)]
pub struct GenMap {
    /// Image of each source letter as a polynomial in the target letters.
    pub images: Vec<NCPoly>,
}

impl GenMap {
    pub fn apply_word(&self, f: &FieldSpec, w: &Word) -> NCPoly {
        let mut acc = NCPoly::one(f);
        for &l in &w.0 {
            acc = acc.mul(f, &self.images[l as usize]);
        }
        acc
    }

    pub fn apply(&self, f: &FieldSpec, p: &NCPoly) -> NCPoly {
        let mut acc = NCPoly::zero();
        for (w, c) in &p.terms {
            acc = acc.add(f, &self.apply_word(f, w).scale(f, c));
        }
        acc
    }

    /// Residue of every source relation in the target; all must reduce to 0.
    pub fn relation_residues(
        &self,
        source: &PresentedHopf,
        target: &PresentedHopf,
    ) -> Result<Vec<(String, NCPoly)>> {
        let f = &*source.field;
        let mut out = Vec::new();
        for (ix, r) in source.relations.iter().enumerate() {
            let image = self.apply(f, r);
            let residue = target.normal_form(&image)?;
            out.push((format!("relation {ix}: {}", r.render(f, &source.letters)), residue));
        }
        Ok(out)
    }

    pub fn well_defined(&self, source: &PresentedHopf, target: &PresentedHopf) -> Result<Check> {
        for (desc, residue) in self.relation_residues(source, target)? {
            if !residue.is_zero() {
                return Ok(Check::fail(
                    "map well-defined",
                    format!("{desc} has residue {}", residue.render(&source.field, &target.letters)),
                ));
            }
        }
        Ok(Check::pass("map well-defined"))
    }

    /// Coalgebra compatibility on generators: Δφ(x) = (φ⊗φ)Δ(x) and
    /// εφ(x) = ε(x), after reduction in the target.
    pub fn coalgebra_compatible(
        &self,
        source: &PresentedHopf,
        target: &PresentedHopf,
    ) -> Result<Check> {
        let f = &*source.field;
        for l in 0..source.alphabet_size() {
            let lhs = target.comult_poly(&self.images[l]);
            let mut rhs = TensorPoly::zero();
            for ((w1, w2), c) in &source.comult[l].terms {
                let p1 = self.apply_word(f, w1);
                let p2 = self.apply_word(f, w2);
                for (u1, c1) in &p1.terms {
                    for (u2, c2) in &p2.terms {
                        let coeff = f.mul(c, &f.mul(c1, c2));
                        rhs.add_term(f, &coeff, u1.clone(), u2.clone());
                    }
                }
            }
            let diff = target.rewrite.normal_form_tensor(&lhs.sub(f, &rhs))?;
            if !diff.is_zero() {
                return Ok(Check::fail(
                    "coalgebra compatibility",
                    format!("Δ differs at generator {}", source.letters[l]),
                ));
            }
            let eps_image = target.counit_poly(&self.images[l]);
            if eps_image != source.counit[l] {
                return Ok(Check::fail(
                    "coalgebra compatibility",
                    format!("ε differs at generator {}", source.letters[l]),
                ));
            }
        }
        Ok(Check::pass("coalgebra compatibility"))
    }
}

/// Crossed product H ⋊ kZ2 along an order-2 automorphism given on
/// generators: adds a group-like g with g² = 1 and gx = τ(x)g.
pub fn crossed_product_z2(
    h: &PresentedHopf,
    tau: &GenMap,
    opts: &CompletionOptions,
) -> Result<PresentedHopf> {
    let f = &*h.field;
    // τ must be a well-defined Hopf endomorphism of order 2 on generators
    let wd = tau.well_defined(h, h)?;
    if !wd.pass {
        return Err(Error::InvalidInput(format!("automorphism not well-defined: {:?}", wd.witness)));
    }
    let co = tau.coalgebra_compatible(h, h)?;
    if !co.pass {
        return Err(Error::InvalidInput(format!(
            "automorphism not a coalgebra map: {:?}",
            co.witness
        )));
    }
    for l in 0..h.alphabet_size() {
        let twice = tau.apply(f, &tau.images[l]);
        let diff = h.normal_form(&twice.sub(f, &NCPoly::letter(f, l as u8)))?;
        if !diff.is_zero() {
            return Err(Error::InvalidInput(format!(
                "automorphism does not square to the identity at generator {}",
                h.letters[l]
            )));
        }
    }

    let g_index = h.alphabet_size() as u8; // g is last in the letter order
    let mut letters = h.letters.clone();
    letters.push("g".into());
    let g = NCPoly::letter(f, g_index);

    let mut relations = h.relations.clone();
    relations.push(g.mul(f, &g).sub(f, &NCPoly::one(f)));
    for l in 0..h.alphabet_size() {
        let gx = g.mul(f, &NCPoly::letter(f, l as u8));
        let tx_g = tau.images[l].mul(f, &g);
        relations.push(gx.sub(f, &tx_g));
    }

    let mut comult = h.comult.clone();
    comult.push(TensorPoly::term(f, f.one(), Word::letter(g_index), Word::letter(g_index)));
    let mut counit = h.counit.clone();
    counit.push(f.one());
    let mut antipode = h.antipode.clone();
    antipode.push(g.clone());

    PresentedHopf::new(h.field.clone(), letters, relations, comult, counit, antipode, opts)
}
