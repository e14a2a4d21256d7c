//! Exact scalar fields: rationals, prime fields, and simple extensions
//! `k[x]/(f)` by a monic irreducible polynomial.
//!
//! Elements are coefficient vectors over the base field in canonical form
//! (reduced fractions, representative of degree < deg f), so structural
//! equality is mathematical equality and every value is hashable.

mod parse;
mod roots;

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A scalar of the base field: a rational, or a residue mod p.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

/// Base field: the rationals or a prime field F_p.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Base {
    Rationals,
    Prime(u64),
}

/// Description of an exact field, with optional simple extension.
///
/// Extension moduli of degree 2 or 3 are verified irreducible at
/// construction (squarefree test plus exhaustive/rational root search);
/// higher degrees must be asserted by the caller and are flagged as
/// unverified.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec {
    base: Base,
    /// Monic modulus, coefficients low to high including the leading 1.
    modulus: Option<Vec<Scalar>>,
    irreducibility_verified: bool,
}

/// An element of a [`FieldSpec`]: coefficients of the polynomial
/// representative, constant term first. Length 1 for base fields.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    pub(crate) coeffs: Vec<Scalar>,
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec { base: Base::Rationals, modulus: None, irreducibility_verified: true }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(FieldSpec { base: Base::Prime(p), modulus: None, irreducibility_verified: true })
    }

    /// Extend the base by a monic polynomial of degree >= 2, verifying
    /// irreducibility for degrees 2 and 3.
    pub fn extension(base: FieldSpec, modulus: Vec<Scalar>) -> Result<Self> {
        Self::extension_inner(base, modulus, false)
    }

    /// Extension by a modulus of any degree, skipping the irreducibility
    /// check. The resulting spec reports `irreducibility_verified() == false`
    /// for degrees above 3.
    pub fn extension_unchecked(base: FieldSpec, modulus: Vec<Scalar>) -> Result<Self> {
        Self::extension_inner(base, modulus, true)
    }

    fn extension_inner(base: FieldSpec, modulus: Vec<Scalar>, unchecked: bool) -> Result<Self> {
        if base.modulus.is_some() {
            return Err(Error::InvalidInput("iterated extensions are not supported".into()));
        }
        let modulus = base.poly_trim(modulus);
        let deg = modulus.len().saturating_sub(1);
        if deg < 2 {
            return Err(Error::InvalidInput("extension modulus must have degree >= 2".into()));
        }
        if !base.scalar_is_one(&modulus[deg]) {
            return Err(Error::InvalidInput("extension modulus must be monic".into()));
        }
        for c in &modulus {
            base.check_scalar(c)?;
        }
        let mut verified = false;
        if deg <= 3 {
            if !base.poly_is_irreducible_low_degree(&modulus)? {
                return Err(Error::InvalidInput(
                    "extension modulus is reducible over the base field".into(),
                ));
            }
            verified = true;
        } else if !unchecked {
            return Err(Error::InvalidInput(
                "irreducibility is only verified up to degree 3; use an unchecked extension"
                    .into(),
            ));
        }
        Ok(FieldSpec { base: base.base, modulus: Some(modulus), irreducibility_verified: verified })
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn modulus(&self) -> Option<&[Scalar]> {
        self.modulus.as_deref()
    }

    pub fn irreducibility_verified(&self) -> bool {
        self.irreducibility_verified
    }

    /// Field characteristic (0 for the rationals and their extensions).
    pub fn characteristic(&self) -> u64 {
        match self.base {
            Base::Rationals => 0,
            Base::Prime(p) => p,
        }
    }

    /// Extension degree over the base (1 when there is no extension).
    pub fn degree(&self) -> usize {
        self.modulus.as_ref().map_or(1, |m| m.len() - 1)
    }

    /// Number of elements for finite fields, `None` in characteristic 0.
    pub fn order(&self) -> Option<u128> {
        match self.base {
            Base::Rationals => None,
            Base::Prime(p) => Some((p as u128).pow(self.degree() as u32)),
        }
    }

    // ----- scalar (base field) arithmetic -----

    fn check_scalar(&self, s: &Scalar) -> Result<()> {
        match (&self.base, s) {
            (Base::Rationals, Scalar::Rat(_)) => Ok(()),
            (Base::Prime(p), Scalar::Mod(v)) if v < p => Ok(()),
            _ => Err(Error::SpecMismatch("scalar does not belong to the base field".into())),
        }
    }

    pub(crate) fn scalar_zero(&self) -> Scalar {
        match self.base {
            Base::Rationals => Scalar::Rat(BigRational::zero()),
            Base::Prime(_) => Scalar::Mod(0),
        }
    }

    pub(crate) fn scalar_one(&self) -> Scalar {
        match self.base {
            Base::Rationals => Scalar::Rat(BigRational::one()),
            Base::Prime(_) => Scalar::Mod(1),
        }
    }

    pub(crate) fn scalar_from_i64(&self, n: i64) -> Scalar {
        match self.base {
            Base::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Base::Prime(p) => Scalar::Mod((n.rem_euclid(p as i64)) as u64),
        }
    }

    pub(crate) fn scalar_is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(v) => *v == 0,
        }
    }

    fn scalar_is_one(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(v) => *v == 1,
        }
    }

    pub(crate) fn scalar_add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, &self.base) {
            (Scalar::Rat(x), Scalar::Rat(y), _) => Scalar::Rat(x + y),
            (Scalar::Mod(x), Scalar::Mod(y), Base::Prime(p)) => Scalar::Mod((x + y) % p),
            _ => unreachable!("mixed scalar kinds"),
        }
    }

    pub(crate) fn scalar_neg(&self, a: &Scalar) -> Scalar {
        match (a, &self.base) {
            (Scalar::Rat(x), _) => Scalar::Rat(-x),
            (Scalar::Mod(x), Base::Prime(p)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            _ => unreachable!(),
        }
    }

    pub(crate) fn scalar_sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.scalar_add(a, &self.scalar_neg(b))
    }

    pub(crate) fn scalar_mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, &self.base) {
            (Scalar::Rat(x), Scalar::Rat(y), _) => Scalar::Rat(x * y),
            (Scalar::Mod(x), Scalar::Mod(y), Base::Prime(p)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => unreachable!(),
        }
    }

    pub(crate) fn scalar_inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.scalar_is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (a, &self.base) {
            (Scalar::Rat(x), _) => Scalar::Rat(x.recip()),
            (Scalar::Mod(x), Base::Prime(p)) => Scalar::Mod(mod_inverse(*x, *p)),
            _ => unreachable!(),
        })
    }

    // ----- element construction -----

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![self.scalar_zero(); self.degree()] }
    }

    pub fn one(&self) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = self.scalar_one();
        e
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = self.scalar_from_i64(n);
        e
    }

    pub fn from_rational(&self, num: i64, den: i64) -> Result<FieldElement> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        self.div(&n, &d)
    }

    /// Element from coefficients (constant term first); pads/validates length.
    pub fn from_coeffs(&self, mut coeffs: Vec<Scalar>) -> Result<FieldElement> {
        if coeffs.len() > self.degree() {
            return Err(Error::SpecMismatch(format!(
                "element has {} coefficients but the field has degree {}",
                coeffs.len(),
                self.degree()
            )));
        }
        for c in &coeffs {
            self.check_scalar(c)?;
        }
        while coeffs.len() < self.degree() {
            coeffs.push(self.scalar_zero());
        }
        Ok(FieldElement { coeffs })
    }

    /// The generator `x` of the extension (errors for base fields).
    pub fn generator(&self) -> Result<FieldElement> {
        if self.degree() < 2 {
            return Err(Error::InvalidInput("base fields have no extension generator".into()));
        }
        let mut e = self.zero();
        e.coeffs[1] = self.scalar_one();
        Ok(e)
    }

    fn check_element(&self, e: &FieldElement) -> Result<()> {
        if e.coeffs.len() != self.degree() {
            return Err(Error::SpecMismatch(format!(
                "element has {} coefficients, field degree is {}",
                e.coeffs.len(),
                self.degree()
            )));
        }
        for c in &e.coeffs {
            self.check_scalar(c)?;
        }
        Ok(())
    }

    // ----- element arithmetic -----

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|c| self.scalar_is_zero(c))
    }

    pub fn is_one(&self, a: &FieldElement) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert!(self.check_element(a).is_ok() && self.check_element(b).is_ok());
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| self.scalar_add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement { coeffs: a.coeffs.iter().map(|x| self.scalar_neg(x)).collect() }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert!(self.check_element(a).is_ok() && self.check_element(b).is_ok());
        match &self.modulus {
            None => FieldElement { coeffs: vec![self.scalar_mul(&a.coeffs[0], &b.coeffs[0])] },
            Some(m) => {
                let prod = self.poly_mul(&a.coeffs, &b.coeffs);
                let rem = self.poly_rem(prod, m);
                self.pad(rem)
            }
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match &self.modulus {
            None => Ok(FieldElement { coeffs: vec![self.scalar_inv(&a.coeffs[0])?] }),
            Some(m) => {
                // extended Euclid in base[x]: s*a + t*m = gcd = 1
                let (g, s) = self.poly_ext_gcd(&self.poly_trim(a.coeffs.clone()), m);
                if g.len() != 1 {
                    return Err(Error::InvalidInput(
                        "modulus is not irreducible: gcd with element is non-trivial".into(),
                    ));
                }
                let ginv = self.scalar_inv(&g[0])?;
                let s = s.iter().map(|c| self.scalar_mul(c, &ginv)).collect();
                let rem = self.poly_rem(s, m);
                Ok(self.pad(rem))
            }
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// Scale by an integer (useful for |Γ| tests: returns n·1).
    pub fn int_mul(&self, n: i64, a: &FieldElement) -> FieldElement {
        self.mul(&self.from_i64(n), a)
    }

    /// Canonical total order on elements: coefficient-wise, constant term
    /// first (rationals numerically, residues as integers). Used to make
    /// root lists and character tables deterministic.
    pub fn cmp_elements(&self, a: &FieldElement, b: &FieldElement) -> Ordering {
        for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
            let o = match (x, y) {
                (Scalar::Rat(r), Scalar::Rat(s)) => r.cmp(s),
                (Scalar::Mod(r), Scalar::Mod(s)) => r.cmp(s),
                _ => Ordering::Equal,
            };
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }

    /// Deterministic pseudo-random element for property schedules.
    pub fn sample<R: rand::Rng>(&self, rng: &mut R) -> FieldElement {
        let coeffs = (0..self.degree())
            .map(|_| match self.base {
                Base::Rationals => {
                    let n = rng.gen_range(-6i64..=6);
                    let d = rng.gen_range(1i64..=4);
                    Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
                }
                Base::Prime(p) => Scalar::Mod(rng.gen_range(0..p)),
            })
            .collect();
        FieldElement { coeffs }
    }

    fn pad(&self, mut coeffs: Vec<Scalar>) -> FieldElement {
        while coeffs.len() < self.degree() {
            coeffs.push(self.scalar_zero());
        }
        FieldElement { coeffs }
    }

    // ----- polynomial helpers over the base field -----

    pub(crate) fn poly_trim(&self, mut p: Vec<Scalar>) -> Vec<Scalar> {
        while p.len() > 1 && self.scalar_is_zero(p.last().unwrap()) {
            p.pop();
        }
        p
    }

    pub(crate) fn poly_mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.scalar_zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if self.scalar_is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.scalar_add(&out[i + j], &self.scalar_mul(x, y));
            }
        }
        self.poly_trim(out)
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub(crate) fn poly_rem(&self, a: Vec<Scalar>, m: &[Scalar]) -> Vec<Scalar> {
        let mut a = self.poly_trim(a);
        let dm = m.len() - 1;
        while a.len() > dm {
            let lead = a.last().unwrap().clone();
            let shift = a.len() - 1 - dm;
            if !self.scalar_is_zero(&lead) {
                for (i, c) in m.iter().enumerate() {
                    let t = self.scalar_mul(&lead, c);
                    a[i + shift] = self.scalar_sub(&a[i + shift], &t);
                }
            }
            a.pop();
            a = self.poly_trim(a);
            if a.len() == 1 && self.scalar_is_zero(&a[0]) {
                break;
            }
        }
        a
    }

    /// Extended gcd: returns (g, s) with s·a ≡ g (mod m), g = gcd(a, m).
    fn poly_ext_gcd(&self, a: &[Scalar], m: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut r0 = m.to_vec();
        let mut r1 = a.to_vec();
        let mut s0 = vec![self.scalar_zero()];
        let mut s1 = vec![self.scalar_one()];
        while !(r1.len() == 1 && self.scalar_is_zero(&r1[0])) {
            let (q, r) = self.poly_divmod(&r0, &r1);
            let s = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        (r0, s0)
    }

    fn poly_sub(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = a.len().max(b.len());
        let mut out = vec![self.scalar_zero(); n];
        for (i, c) in a.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in b.iter().enumerate() {
            out[i] = self.scalar_sub(&out[i], c);
        }
        self.poly_trim(out)
    }

    fn poly_divmod(&self, a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let b = self.poly_trim(b.to_vec());
        let mut rem = self.poly_trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = self.scalar_inv(b.last().unwrap()).expect("division by zero polynomial");
        let mut quot = vec![self.scalar_zero(); rem.len().saturating_sub(db) + 1];
        while rem.len() >= db + 1 && !(rem.len() == 1 && self.scalar_is_zero(&rem[0])) {
            let shift = rem.len() - 1 - db;
            let q = self.scalar_mul(rem.last().unwrap(), &lead_inv);
            quot[shift] = self.scalar_add(&quot[shift], &q);
            for (i, c) in b.iter().enumerate() {
                let t = self.scalar_mul(&q, c);
                rem[i + shift] = self.scalar_sub(&rem[i + shift], &t);
            }
            rem.pop();
            if rem.is_empty() {
                rem.push(self.scalar_zero());
            }
            rem = self.poly_trim(rem);
        }
        (self.poly_trim(quot), rem)
    }

    fn poly_derivative(&self, a: &[Scalar]) -> Vec<Scalar> {
        if a.len() <= 1 {
            return vec![self.scalar_zero()];
        }
        let mut out = Vec::with_capacity(a.len() - 1);
        for (i, c) in a.iter().enumerate().skip(1) {
            out.push(self.scalar_mul(&self.scalar_from_i64(i as i64), c));
        }
        self.poly_trim(out)
    }

    fn poly_gcd(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut r0 = self.poly_trim(a.to_vec());
        let mut r1 = self.poly_trim(b.to_vec());
        while !(r1.len() == 1 && self.scalar_is_zero(&r1[0])) {
            let (_, r) = self.poly_divmod(&r0, &r1);
            r0 = r1;
            r1 = r;
        }
        // normalize monic
        if !(r0.len() == 1 && self.scalar_is_zero(&r0[0])) {
            let inv = self.scalar_inv(r0.last().unwrap()).unwrap();
            r0 = r0.iter().map(|c| self.scalar_mul(c, &inv)).collect();
        }
        r0
    }

    fn poly_eval(&self, a: &[Scalar], x: &Scalar) -> Scalar {
        let mut acc = self.scalar_zero();
        for c in a.iter().rev() {
            acc = self.scalar_add(&self.scalar_mul(&acc, x), c);
        }
        acc
    }

    /// Irreducibility over the base for degree 2 or 3: squarefree (gcd with
    /// derivative trivial, zero derivative counts as a p-th power) and no
    /// root in the base field.
    fn poly_is_irreducible_low_degree(&self, m: &[Scalar]) -> Result<bool> {
        let deriv = self.poly_derivative(m);
        if deriv.len() == 1 && self.scalar_is_zero(&deriv[0]) {
            // char p and m ∈ k[x^p] ⇒ m is a p-th power over a prime field
            return Ok(false);
        }
        let g = self.poly_gcd(m, &deriv);
        if g.len() > 1 {
            return Ok(false);
        }
        match self.base {
            Base::Prime(p) => {
                for v in 0..p {
                    if self.scalar_is_zero(&self.poly_eval(m, &Scalar::Mod(v))) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Base::Rationals => {
                // rational root theorem after clearing denominators
                let mut lcm = BigInt::one();
                for c in m {
                    if let Scalar::Rat(r) = c {
                        lcm = num::integer::lcm(lcm.clone(), r.denom().clone());
                    }
                }
                let ints: Vec<BigInt> = m
                    .iter()
                    .map(|c| match c {
                        Scalar::Rat(r) => (r * BigRational::from_integer(lcm.clone()))
                            .to_integer(),
                        _ => unreachable!(),
                    })
                    .collect();
                let a0 = ints[0].clone();
                let an = ints.last().unwrap().clone();
                if a0.is_zero() {
                    return Ok(false); // root at 0
                }
                let bound = BigInt::from(1_000_000_000_000u64);
                if a0.abs() > bound || an.abs() > bound {
                    return Err(Error::Unsupported(
                        "modulus coefficients too large for root search; use an unchecked \
                         extension"
                            .into(),
                    ));
                }
                for p in divisors(&a0.abs()) {
                    for q in divisors(&an.abs()) {
                        for sign in [1i64, -1] {
                            let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                            let val = self.poly_eval(m, &Scalar::Rat(cand));
                            if self.scalar_is_zero(&val) {
                                return Ok(false);
                            }
                        }
                    }
                }
                Ok(true)
            }
        }
    }

    /// p-th-root map (inverse Frobenius) for finite fields; identity input
    /// errors in characteristic zero.
    pub(crate) fn pth_root(&self, a: &FieldElement, iterations: u32) -> Result<FieldElement> {
        let p = match self.base {
            Base::Prime(p) => p,
            Base::Rationals => {
                return Err(Error::Unsupported("p-th roots need positive characteristic".into()))
            }
        };
        let q = self.order().expect("finite field");
        // x^(q/p) inverts x -> x^p on F_q; iterate
        let mut out = a.clone();
        let exp = (q / p as u128) as u64; // q/p fits u64 for supported sizes
        debug_assert!(q / p as u128 <= u64::MAX as u128);
        for _ in 0..iterations {
            out = self.pow(&out, exp);
        }
        Ok(out)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.base {
            Base::Rationals => "Q".to_string(),
            Base::Prime(p) => format!("Fp({p})"),
        };
        match &self.modulus {
            None => write!(f, "{base}"),
            Some(m) => {
                write!(f, "{base}[x]/({})", self.poly_to_string(m))
            }
        }
    }
}

impl FieldSpec {
    pub(crate) fn poly_to_string(&self, p: &[Scalar]) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (i, c) in p.iter().enumerate().rev() {
            if self.scalar_is_zero(c) {
                continue;
            }
            let cs = self.scalar_to_string(c);
            let term = match i {
                0 => cs,
                1 if cs == "1" => "x".to_string(),
                1 if cs == "-1" => "-x".to_string(),
                1 => format!("{cs}x"),
                _ if cs == "1" => format!("x^{i}"),
                _ if cs == "-1" => format!("-x^{i}"),
                _ => format!("{cs}x^{i}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(stripped) = t.strip_prefix('-') {
                out.push('-');
                out.push_str(stripped);
            } else {
                out.push('+');
                out.push_str(t);
            }
        }
        out
    }

    fn scalar_to_string(&self, s: &Scalar) -> String {
        match s {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(v) => v.to_string(),
        }
    }

    /// Canonical string form of an element (polynomial in `x` for
    /// extensions, plain rational/residue otherwise).
    pub fn element_to_string(&self, e: &FieldElement) -> String {
        self.poly_to_string(&self.poly_trim(e.coeffs.clone()))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p)
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "element not invertible");
    (t.rem_euclid(p as i128)) as u64
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

pub use parse::parse_field_spec;

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldSpec {
        // Fp(2)[x]/(x^2+x+1)
        let base = FieldSpec::prime(2).unwrap();
        let m = vec![Scalar::Mod(1), Scalar::Mod(1), Scalar::Mod(1)];
        FieldSpec::extension(base, m).unwrap()
    }

    #[test]
    fn inverse_in_prime_field() {
        let f5 = FieldSpec::prime(5).unwrap();
        let two = f5.from_i64(2);
        assert_eq!(f5.inv(&two).unwrap(), f5.from_i64(3));
    }

    #[test]
    fn inverse_in_f4_matches_extended_euclid_oracle() {
        // oracle: brute force over the 4 elements of F4
        let k = f4();
        let x = k.generator().unwrap();
        let mut inverse = None;
        for c0 in 0..2u64 {
            for c1 in 0..2u64 {
                let cand =
                    k.from_coeffs(vec![Scalar::Mod(c0), Scalar::Mod(c1)]).unwrap();
                if !k.is_zero(&cand) && k.is_one(&k.mul(&x, &cand)) {
                    inverse = Some(cand);
                }
            }
        }
        let expected = inverse.expect("x is invertible in F4");
        assert_eq!(k.inv(&x).unwrap(), expected);
        // x+1 explicitly
        assert_eq!(expected, k.from_coeffs(vec![Scalar::Mod(1), Scalar::Mod(1)]).unwrap());
    }

    #[test]
    fn rational_addition() {
        let q = FieldSpec::rationals();
        let a = q.from_rational(1, 2).unwrap();
        let b = q.from_rational(1, 3).unwrap();
        assert_eq!(q.add(&a, &b), q.from_rational(5, 6).unwrap());
    }

    #[test]
    fn reducible_modulus_rejected() {
        let base = FieldSpec::prime(2).unwrap();
        // x^2+1 = (x+1)^2 over F2
        let m = vec![Scalar::Mod(1), Scalar::Mod(0), Scalar::Mod(1)];
        assert!(FieldSpec::extension(base, m).is_err());
    }

    #[test]
    fn rational_quadratic_with_root_rejected() {
        let q = FieldSpec::rationals();
        // x^2-1 has roots ±1
        let one = q.scalar_one();
        let m = vec![q.scalar_neg(&one), q.scalar_zero(), one];
        assert!(FieldSpec::extension(q, m).is_err());
    }

    #[test]
    fn degree_four_requires_unchecked() {
        let base = FieldSpec::prime(2).unwrap();
        let m = vec![
            Scalar::Mod(1),
            Scalar::Mod(1),
            Scalar::Mod(0),
            Scalar::Mod(0),
            Scalar::Mod(1),
        ];
        assert!(FieldSpec::extension(base.clone(), m.clone()).is_err());
        let k = FieldSpec::extension_unchecked(base, m).unwrap();
        assert!(!k.irreducibility_verified());
    }

    #[test]
    fn display_round_trip() {
        let k = f4();
        assert_eq!(k.to_string(), "Fp(2)[x]/(x^2+x+1)");
    }

    #[test]
    fn pth_root_inverts_frobenius() {
        let k = f4();
        let x = k.generator().unwrap();
        let frob = k.mul(&x, &x);
        assert_eq!(k.pth_root(&frob, 1).unwrap(), x);
    }
}
