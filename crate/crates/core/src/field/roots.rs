//! n-th roots of unity in an exact field.
//!
//! Finite fields are complete by construction (the solutions form the
//! cyclic subgroup of order gcd(n, q-1)). Over the rationals the only
//! candidates are ±1. For quadratic extensions of Q the cyclotomic factors
//! of z^n - 1 that can have quadratic roots (orders 3, 4, 6) are solved
//! exactly, so the answer is complete there as well. Char-0 extensions of
//! odd degree cannot contain other roots of unity (degree reasons), so ±1
//! is again complete; for even degree >= 4 the search is restricted to ±1
//! and may under-report, which downstream callers treat as "not enough
//! roots" — a refusal, never a wrong certificate.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};

use super::{Base, FieldElement, FieldSpec, Scalar};

impl FieldSpec {
    /// All solutions of z^n = 1 found in the field, sorted canonically.
    pub fn nth_roots_of_unity(&self, n: u64) -> Vec<FieldElement> {
        assert!(n >= 1, "n must be positive");
        let mut roots = match (&self.base, self.degree()) {
            (Base::Prime(_), _) => self.finite_field_roots(n),
            (Base::Rationals, 1) => self.rational_roots(n),
            (Base::Rationals, 2) => self.quadratic_extension_roots(n),
            (Base::Rationals, _) => self.rational_roots(n),
        };
        roots.sort_by(|a, b| self.cmp_elements(a, b));
        roots.dedup();
        roots
    }

    fn rational_roots(&self, n: u64) -> Vec<FieldElement> {
        let mut out = vec![self.one()];
        if n % 2 == 0 {
            out.push(self.from_i64(-1));
        }
        out
    }

    fn finite_field_roots(&self, n: u64) -> Vec<FieldElement> {
        let q = self.order().expect("finite field");
        if q <= 1 << 16 {
            // exhaustive over the multiplicative group
            let mut out = Vec::new();
            for e in self.enumerate_elements() {
                if !self.is_zero(&e) && self.is_one(&self.pow(&e, n)) {
                    out.push(e);
                }
            }
            return out;
        }
        // the solutions form the cyclic subgroup of order d = gcd(n, q-1)
        let d = gcd_u128(n as u128, q - 1) as u64;
        let gen = self.element_of_order(d);
        let mut out = Vec::with_capacity(d as usize);
        let mut acc = self.one();
        for _ in 0..d {
            out.push(acc.clone());
            acc = self.mul(&acc, &gen);
        }
        out
    }

    fn element_of_order(&self, d: u64) -> FieldElement {
        if d == 1 {
            return self.one();
        }
        let q = self.order().expect("finite field");
        let cofactor = ((q - 1) / d as u128) as u64;
        let primes = prime_factors(d);
        for cand in self.enumerate_elements() {
            if self.is_zero(&cand) {
                continue;
            }
            let y = self.pow(&cand, cofactor);
            if !self.is_one(&y) && primes.iter().all(|p| !self.is_one(&self.pow(&y, d / p))) {
                // y^d = 1 automatically; order divides d and misses all d/p
                return y;
            }
        }
        unreachable!("F_q* is cyclic, an element of order d | q-1 exists");
    }

    /// Iterator over all elements of a finite field (coefficient counters).
    pub fn enumerate_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let p = match self.base {
            Base::Prime(p) => p,
            Base::Rationals => panic!("cannot enumerate an infinite field"),
        };
        let deg = self.degree();
        let total = (p as u128).pow(deg as u32);
        (0..total).map(move |mut ix| {
            let mut coeffs = Vec::with_capacity(deg);
            for _ in 0..deg {
                coeffs.push(Scalar::Mod((ix % p as u128) as u64));
                ix /= p as u128;
            }
            FieldElement { coeffs }
        })
    }

    /// Roots of unity in Q[x]/(x^2 + f1 x + f0): ±1 plus the roots of the
    /// quadratic cyclotomics Φ_3, Φ_4, Φ_6 when their square roots exist.
    fn quadratic_extension_roots(&self, n: u64) -> Vec<FieldElement> {
        let mut out = self.rational_roots(n);
        // (order, linear coefficient of the cyclotomic z^2 + c z + 1)
        for (d, c) in [(3u64, 1i64), (4, 0), (6, -1)] {
            if n % d != 0 {
                continue;
            }
            let disc = c * c - 4; // of z^2 + c z + 1
            for s in self.sqrt_of_rational(disc) {
                // z = (-c ± s)/2; both signs appear because ±s are both returned
                let z = self.div(
                    &self.add(&self.from_i64(-c), &s),
                    &self.from_i64(2),
                )
                .expect("2 != 0 in char 0");
                out.push(z);
            }
        }
        out
    }

    /// Square roots of an integer D inside a quadratic extension of Q.
    /// Writing the modulus x^2 + f1 x + f0, an element s = α + βx satisfies
    /// s² = D iff (β = 0 and α² = D) or (α = βf1/2 and β²(f1²/4 - f0) = D),
    /// so everything reduces to rational-square tests.
    fn sqrt_of_rational(&self, d: i64) -> Vec<FieldElement> {
        let m = self.modulus.as_ref().expect("quadratic extension");
        let (f0, f1) = match (&m[0], &m[1]) {
            (Scalar::Rat(a), Scalar::Rat(b)) => (a.clone(), b.clone()),
            _ => unreachable!(),
        };
        let dr = BigRational::from_integer(BigInt::from(d));
        let mut out = Vec::new();
        // constant square root
        if let Some(a) = rational_sqrt(&dr) {
            if !a.is_zero() {
                out.push(self.from_coeffs(vec![Scalar::Rat(a.clone())]).unwrap());
                out.push(self.from_coeffs(vec![Scalar::Rat(-a)]).unwrap());
            } else {
                out.push(self.zero());
            }
            return out;
        }
        // s = α + βx with β ≠ 0: matching coefficients of s² = D gives
        // 2αβ = β²f1 and α² - β²f0 = D, hence α = βf1/2 and
        // β²(f1²/4 - f0) = D.
        let quarter_disc = &f1 * &f1 / BigRational::from_integer(BigInt::from(4)) - &f0;
        if quarter_disc.is_zero() {
            return out;
        }
        let beta_sq = &dr / &quarter_disc;
        if beta_sq.is_negative() {
            return out;
        }
        if let Some(beta) = rational_sqrt(&beta_sq) {
            if beta.is_zero() {
                return out;
            }
            let alpha = &beta * &f1 / BigRational::from_integer(BigInt::from(2));
            let s = self
                .from_coeffs(vec![Scalar::Rat(alpha.clone()), Scalar::Rat(beta.clone())])
                .unwrap();
            out.push(self.neg(&s));
            out.push(s);
        }
        out
    }
}

/// √r for a nonnegative rational in lowest terms, if it is rational.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 { a } else { gcd_u128(b, a % b) }
}

fn prime_factors(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            out.push(p);
            while d % p == 0 {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse_field_spec;
    use std::collections::BTreeSet;

    fn root_strings(spec: &str, n: u64) -> BTreeSet<String> {
        let k = parse_field_spec(spec).unwrap();
        k.nth_roots_of_unity(n).iter().map(|e| k.element_to_string(e)).collect()
    }

    #[test]
    fn cube_roots_in_f4_match_exhaustive_check() {
        // oracle: test all four elements of F4 directly
        let k = parse_field_spec("Fp(2)[x]/(x^2+x+1)").unwrap();
        let expected: BTreeSet<String> = k
            .enumerate_elements()
            .filter(|e| !k.is_zero(e) && k.is_one(&k.pow(e, 3)))
            .map(|e| k.element_to_string(&e))
            .collect();
        assert_eq!(expected, ["1", "x", "x+1"].iter().map(|s| s.to_string()).collect());
        assert_eq!(root_strings("Fp(2)[x]/(x^2+x+1)", 3), expected);
    }

    #[test]
    fn square_roots_of_unity_in_q() {
        assert_eq!(root_strings("Q", 2), ["1", "-1"].iter().map(|s| s.to_string()).collect());
        assert_eq!(root_strings("Q", 3), ["1"].iter().map(|s| s.to_string()).collect());
    }

    #[test]
    fn char_two_collapses_square_roots() {
        // z^2 - 1 = (z-1)^2 over F2
        assert_eq!(root_strings("Fp(2)", 2), ["1"].iter().map(|s| s.to_string()).collect());
    }

    #[test]
    fn fourth_roots_in_gaussian_rationals() {
        assert_eq!(
            root_strings("Q[x]/(x^2+1)", 4),
            ["1", "-1", "x", "-x"].iter().map(|s| s.to_string()).collect()
        );
    }

    #[test]
    fn sixth_roots_in_eisenstein_rationals() {
        // x is a primitive cube root in Q[x]/(x^2+x+1)
        assert_eq!(
            root_strings("Q[x]/(x^2+x+1)", 6),
            ["1", "-1", "x", "-x", "x+1", "-x-1"].iter().map(|s| s.to_string()).collect()
        );
    }

    #[test]
    fn no_cube_roots_in_gaussian_rationals() {
        assert_eq!(root_strings("Q[x]/(x^2+1)", 3), ["1"].iter().map(|s| s.to_string()).collect());
    }

    #[test]
    fn prime_field_counts_match_group_theory() {
        // |μ_n(F_p)| = gcd(n, p-1)
        for p in [3u64, 5, 7, 11, 13] {
            for n in 1..=12u64 {
                let k = parse_field_spec(&format!("Fp({p})")).unwrap();
                let count = k.nth_roots_of_unity(n).len() as u64;
                assert_eq!(count, num::integer::gcd(n, p - 1), "p={p} n={n}");
            }
        }
    }
}
