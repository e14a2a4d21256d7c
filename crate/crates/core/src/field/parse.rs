//! Textual syntax for field specs and field elements.
//!
//! Specs: `Q`, `Fp(5)`, `Fp(2)[x]/(x^2+x+1)`, `Q[x]/(x^2+1)`.
//! An extension of degree above 3 needs an ` unchecked` suffix.
//! Elements: `-3/4`, `2`, `x+1`, `2x^2-x/2+1`.

use num::bigint::BigInt;
use num::rational::BigRational;

use super::{Base, FieldElement, FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Parse a field spec string.
pub fn parse_field_spec(input: &str) -> Result<FieldSpec> {
    let s = input.trim();
    let (s, unchecked) = match s.strip_suffix("unchecked") {
        Some(rest) => (rest.trim_end(), true),
        None => (s, false),
    };
    let (base_str, ext) = match s.find('[') {
        None => (s, None),
        Some(i) => {
            let rest = &s[i..];
            let rest = rest
                .strip_prefix("[x]/(")
                .ok_or_else(|| bad(input, "expected `[x]/(...)` after the base field"))?;
            let poly = rest
                .strip_suffix(')')
                .ok_or_else(|| bad(input, "missing closing parenthesis"))?;
            (&s[..i], Some(poly))
        }
    };
    let base = match base_str {
        "Q" => FieldSpec::rationals(),
        _ => {
            let inner = base_str
                .strip_prefix("Fp(")
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad(input, "base must be `Q` or `Fp(p)`"))?;
            let p: u64 = inner.parse().map_err(|_| bad(input, "invalid prime"))?;
            FieldSpec::prime(p)?
        }
    };
    match ext {
        None => Ok(base),
        Some(poly) => {
            let coeffs = parse_poly(&base, poly)?;
            if unchecked {
                FieldSpec::extension_unchecked(base, coeffs)
            } else {
                FieldSpec::extension(base, coeffs)
            }
        }
    }
}

impl FieldSpec {
    /// Parse an element in the canonical textual form.
    pub fn parse_element(&self, input: &str) -> Result<FieldElement> {
        let coeffs = parse_poly(self, input)?;
        if coeffs.len() > self.degree() {
            return Err(bad(input, "element degree exceeds the field's extension degree"));
        }
        self.from_coeffs(coeffs)
    }
}

fn bad(input: &str, msg: &str) -> Error {
    Error::Parse(format!("`{input}`: {msg}"))
}

/// Parse a polynomial in `x` with rational (or mod-p integer) coefficients
/// into a low-to-high coefficient vector over `base`.
fn parse_poly(base: &FieldSpec, input: &str) -> Result<Vec<Scalar>> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad(input, "empty polynomial"));
    }
    // split into signed terms
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('/') {
            terms.push(cur.clone());
            cur.clear();
        }
        cur.push(ch);
    }
    terms.push(cur);

    let mut coeffs: Vec<Scalar> = Vec::new();
    let bump = |deg: usize, val: Scalar, coeffs: &mut Vec<Scalar>| {
        while coeffs.len() <= deg {
            coeffs.push(base.scalar_zero());
        }
        coeffs[deg] = base.scalar_add(&coeffs[deg], &val);
    };
    for term in &terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-1i64, b),
            None => (1, term.strip_prefix('+').unwrap_or(term.as_str())),
        };
        let (coeff_str, deg) = match body.find('x') {
            None => (body, 0usize),
            Some(ix) => {
                let c = &body[..ix];
                let rest = &body[ix + 1..];
                let deg = if rest.is_empty() {
                    1
                } else {
                    let e = rest
                        .strip_prefix('^')
                        .ok_or_else(|| bad(input, "expected ^ after x"))?;
                    e.parse::<usize>().map_err(|_| bad(input, "invalid exponent"))?
                };
                (c.strip_suffix('*').unwrap_or(c), deg)
            }
        };
        let coeff = if coeff_str.is_empty() {
            base.scalar_one()
        } else {
            parse_scalar(base, coeff_str).map_err(|_| bad(input, "invalid coefficient"))?
        };
        let signed = if sign < 0 { base.scalar_neg(&coeff) } else { coeff };
        bump(deg, signed, &mut coeffs);
    }
    Ok(base.poly_trim(coeffs))
}

fn parse_scalar(base: &FieldSpec, s: &str) -> Result<Scalar> {
    match base.base() {
        Base::Rationals => {
            let r = match s.split_once('/') {
                None => BigRational::from_integer(
                    s.parse::<BigInt>().map_err(|_| Error::Parse(s.into()))?,
                ),
                Some((n, d)) => {
                    let num = n.parse::<BigInt>().map_err(|_| Error::Parse(s.into()))?;
                    let den = d.parse::<BigInt>().map_err(|_| Error::Parse(s.into()))?;
                    if den == BigInt::from(0) {
                        return Err(Error::DivisionByZero);
                    }
                    BigRational::new(num, den)
                }
            };
            Ok(Scalar::Rat(r))
        }
        Base::Prime(p) => {
            let v = s.parse::<i64>().map_err(|_| Error::Parse(s.into()))?;
            Ok(Scalar::Mod(v.rem_euclid(*p as i64) as u64))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_syntax() {
        assert_eq!(parse_field_spec("Q").unwrap().to_string(), "Q");
        assert_eq!(parse_field_spec("Fp(5)").unwrap().to_string(), "Fp(5)");
        assert_eq!(
            parse_field_spec("Fp(2)[x]/(x^2+x+1)").unwrap().to_string(),
            "Fp(2)[x]/(x^2+x+1)"
        );
        assert_eq!(parse_field_spec("Q[x]/(x^2+1)").unwrap().to_string(), "Q[x]/(x^2+1)");
        assert!(parse_field_spec("Fp(4)").is_err());
    }

    #[test]
    fn element_syntax() {
        let k = parse_field_spec("Q[x]/(x^2+1)").unwrap();
        let e = k.parse_element("x+1").unwrap();
        assert_eq!(k.element_to_string(&e), "x+1");
        let e = k.parse_element("-1/2x + 3").unwrap();
        assert_eq!(k.element_to_string(&e), "-1/2x+3");
        let q = parse_field_spec("Q").unwrap();
        assert_eq!(q.parse_element("-3/4").unwrap(), q.from_rational(-3, 4).unwrap());
    }
}
