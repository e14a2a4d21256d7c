//! Noncommutative polynomials: formal sums of words over a letter alphabet
//! with exact coefficients, ordered by deglex (length first, then
//! lexicographic on letter indices).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::field::{FieldElement, FieldSpec};

/// A word over the alphabet, as letter indices. Deglex order.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: u8) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// First position where `pattern` occurs as a factor, if any.
    pub fn find(&self, pattern: &Word) -> Option<usize> {
        if pattern.0.is_empty() || pattern.len() > self.len() {
            return None;
        }
        (0..=self.len() - pattern.len()).find(|&i| self.0[i..i + pattern.len()] == pattern.0[..])
    }

    pub fn ends_with(&self, pattern: &Word) -> bool {
        pattern.len() <= self.len() && self.0[self.len() - pattern.len()..] == pattern.0[..]
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical noncommutative polynomial: merged terms, no zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPoly {
    pub terms: BTreeMap<Word, FieldElement>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one(f: &FieldSpec) -> Self {
        Self::term(f, f.one(), Word::empty())
    }

    pub fn letter(f: &FieldSpec, l: u8) -> Self {
        Self::term(f, f.one(), Word::letter(l))
    }

    pub fn term(f: &FieldSpec, coeff: FieldElement, word: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero(&coeff) {
            terms.insert(word, coeff);
        }
        NCPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Largest word in deglex order with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, f: &FieldSpec, coeff: &FieldElement, word: Word) {
        if f.is_zero(coeff) {
            return;
        }
        let cur = self.terms.get(&word);
        let next = match cur {
            Some(c) => f.add(c, coeff),
            None => coeff.clone(),
        };
        if f.is_zero(&next) {
            self.terms.remove(&word);
        } else {
            self.terms.insert(word, next);
        }
    }

    pub fn add(&self, f: &FieldSpec, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(f, c, w.clone());
        }
        out
    }

    pub fn sub(&self, f: &FieldSpec, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(f, &f.neg(c), w.clone());
        }
        out
    }

    pub fn scale(&self, f: &FieldSpec, c: &FieldElement) -> NCPoly {
        if f.is_zero(c) {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, v)| (w.clone(), f.mul(v, c))).collect() }
    }

    pub fn mul(&self, f: &FieldSpec, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(f, &f.mul(c1, c2), w1.concat(w2));
            }
        }
        out
    }

    /// x · self · y for words x, y.
    pub fn sandwich(&self, f: &FieldSpec, x: &Word, y: &Word) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(f, c, x.concat(w).concat(y));
        }
        out
    }

    pub fn render(&self, f: &FieldSpec, letters: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in self.terms.iter().rev() {
            let word_str = if w.is_empty() {
                "1".to_string()
            } else {
                w.0.iter().map(|&l| letters[l as usize].clone()).collect::<Vec<_>>().join("*")
            };
            let coeff = f.element_to_string(c);
            parts.push(match (coeff.as_str(), w.is_empty()) {
                ("1", false) => word_str,
                ("-1", false) => format!("-{word_str}"),
                (_, false) => format!("{coeff}*{word_str}"),
                (_, true) => coeff,
            });
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

/// An element of the tensor square of the free algebra: sum of pairs of
/// words. Multiplication is legwise concatenation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorPoly {
    pub terms: BTreeMap<(Word, Word), FieldElement>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly { terms: BTreeMap::new() }
    }

    pub fn one(f: &FieldSpec) -> Self {
        Self::term(f, f.one(), Word::empty(), Word::empty())
    }

    pub fn term(f: &FieldSpec, coeff: FieldElement, left: Word, right: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero(&coeff) {
            terms.insert((left, right), coeff);
        }
        TensorPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, f: &FieldSpec, coeff: &FieldElement, left: Word, right: Word) {
        if f.is_zero(coeff) {
            return;
        }
        let key = (left, right);
        let next = match self.terms.get(&key) {
            Some(c) => f.add(c, coeff),
            None => coeff.clone(),
        };
        if f.is_zero(&next) {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, next);
        }
    }

    pub fn add(&self, f: &FieldSpec, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(f, c, l.clone(), r.clone());
        }
        out
    }

    pub fn sub(&self, f: &FieldSpec, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(f, &f.neg(c), l.clone(), r.clone());
        }
        out
    }

    pub fn scale(&self, f: &FieldSpec, c: &FieldElement) -> TensorPoly {
        if f.is_zero(c) {
            return TensorPoly::zero();
        }
        TensorPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), f.mul(v, c))).collect(),
        }
    }

    pub fn mul(&self, f: &FieldSpec, other: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                out.add_term(f, &f.mul(c1, c2), l1.concat(l2), r1.concat(r2));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_field_spec;

    #[test]
    fn deglex_orders_by_length_then_letters() {
        let a = Word(vec![0]);
        let b = Word(vec![3]);
        let ab = Word(vec![0, 3]);
        assert!(a < b);
        assert!(b < ab);
        assert!(Word(vec![0, 3]) < Word(vec![3, 0]));
    }

    #[test]
    fn polynomials_merge_and_cancel() {
        let q = parse_field_spec("Q").unwrap();
        let x = NCPoly::letter(&q, 0);
        let sum = x.add(&q, &x);
        assert_eq!(sum.leading().unwrap().1, &q.from_i64(2));
        let zero = sum.sub(&q, &sum.clone());
        assert!(zero.is_zero());
    }

    #[test]
    fn multiplication_concatenates() {
        let q = parse_field_spec("Q").unwrap();
        let x = NCPoly::letter(&q, 0);
        let y = NCPoly::letter(&q, 1);
        let xy = x.mul(&q, &y);
        let yx = y.mul(&q, &x);
        assert_ne!(xy, yx);
        assert_eq!(xy.leading().unwrap().0, &Word(vec![0, 1]));
    }

    #[test]
    fn render_is_readable() {
        let q = parse_field_spec("Q").unwrap();
        let letters = vec!["x".to_string(), "y".to_string()];
        let p = NCPoly::letter(&q, 0)
            .mul(&q, &NCPoly::letter(&q, 1))
            .sub(&q, &NCPoly::one(&q));
        assert_eq!(p.render(&q, &letters), "x*y - 1");
    }
}
