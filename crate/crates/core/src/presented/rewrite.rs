//! Degree-capped completion of a noncommutative rewriting system.
//!
//! Rules are oriented by deglex (leading word rewrites to the lower tail),
//! and reductions never raise degree, so resolving every overlap of degree
//! at most the cap certifies unique normal forms for all polynomials of
//! degree up to the cap. Overlaps above the cap are deliberately dropped:
//! statements above the cap are simply out of scope.

use std::collections::VecDeque;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

use super::poly::{NCPoly, TensorPoly, Word};

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// Options for the completion run.
#[derive(Clone, Debug)]
pub struct CompletionOptions {
    pub cap: usize,
    pub max_rules: usize,
    pub cache_dir: Option<PathBuf>,
}

impl CompletionOptions {
    pub fn new(cap: usize) -> Self {
        CompletionOptions { cap, max_rules: 20_000, cache_dir: None }
    }

    pub fn with_cache(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }
}

/// Confluence certificate: what was checked after the run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub overlaps_checked: usize,
    pub rules_checksum: String,
    pub cap: usize,
}

/// A completed rewriting system, valid up to its cap.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    field: Arc<FieldSpec>,
    pub rules: Vec<Rule>,
    pub cap: usize,
    pub certificate: Certificate,
    /// True when the rules were loaded from the on-disk cache.
    pub from_cache: bool,
}

impl RewriteSystem {
    /// Complete the relation set up to the cap, consulting the cache when a
    /// directory is configured.
    pub fn complete(
        field: Arc<FieldSpec>,
        relations: &[NCPoly],
        opts: &CompletionOptions,
    ) -> Result<RewriteSystem> {
        let key = presentation_hash(&field, relations, opts.cap);
        if let Some(dir) = &opts.cache_dir {
            if let Some(sys) = try_load_cache(&field, dir, &key, opts.cap)? {
                return Ok(sys);
            }
        }
        let mut sys = complete_uncached(field, relations, opts)?;
        if let Some(dir) = &opts.cache_dir {
            store_cache(dir, &key, &sys)?;
            sys.from_cache = false;
        }
        Ok(sys)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// Normal form with respect to the completed rules. Errors above the cap.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly> {
        if p.degree() > self.cap {
            return Err(Error::Ceiling(format!(
                "polynomial degree {} exceeds the completion cap {}",
                p.degree(),
                self.cap
            )));
        }
        Ok(reduce(&self.field, &self.rules, p))
    }

    /// Reduce both legs of a tensor-square element.
    pub fn normal_form_tensor(&self, p: &TensorPoly) -> Result<TensorPoly> {
        let f = &*self.field;
        let mut out = TensorPoly::zero();
        for ((l, r), c) in &p.terms {
            if l.len() > self.cap || r.len() > self.cap {
                return Err(Error::Ceiling("tensor leg exceeds the completion cap".into()));
            }
            let nl = reduce(f, &self.rules, &NCPoly::term(f, f.one(), l.clone()));
            let nr = reduce(f, &self.rules, &NCPoly::term(f, f.one(), r.clone()));
            for (wl, cl) in &nl.terms {
                for (wr, cr) in &nr.terms {
                    let coeff = f.mul(c, &f.mul(cl, cr));
                    out.add_term(f, &coeff, wl.clone(), wr.clone());
                }
            }
        }
        Ok(out)
    }

    /// Irreducible words of length ≤ degree, in deglex order.
    pub fn normal_words(&self, alphabet_size: usize, degree: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 1..=degree.min(self.cap) {
            let mut next = Vec::new();
            for w in &frontier {
                'letters: for l in 0..alphabet_size {
                    let cand = w.concat(&Word::letter(l as u8));
                    for rule in &self.rules {
                        if cand.ends_with(&rule.lhs) {
                            continue 'letters;
                        }
                    }
                    next.push(cand);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Filtration dimension: number of irreducible words of length ≤ degree.
    pub fn filtration_dim(&self, alphabet_size: usize, degree: usize) -> usize {
        self.normal_words(alphabet_size, degree).len()
    }
}

/// One reduction pass to a normal form (terminating since deglex is a
/// well-order compatible with concatenation).
fn reduce(f: &FieldSpec, rules: &[Rule], p: &NCPoly) -> NCPoly {
    let mut current = p.clone();
    'outer: loop {
        for (w, c) in current.terms.iter().rev() {
            for rule in rules {
                if let Some(pos) = w.find(&rule.lhs) {
                    let x = Word(w.0[..pos].to_vec());
                    let y = Word(w.0[pos + rule.lhs.len()..].to_vec());
                    let c = c.clone();
                    let w = w.clone();
                    // replace c·x·lhs·y by c·x·rhs·y
                    let replacement = rule.rhs.sandwich(f, &x, &y).scale(f, &c);
                    current.terms.remove(&w);
                    current = current.add(f, &replacement);
                    continue 'outer;
                }
            }
        }
        return current;
    }
}

fn orient(f: &FieldSpec, p: &NCPoly) -> Option<Rule> {
    let (lhs, lc) = p.leading()?;
    let lhs = lhs.clone();
    let inv = f.inv(lc).expect("leading coefficient of a nonzero polynomial");
    let mut rhs = NCPoly::zero();
    for (w, c) in &p.terms {
        if *w == lhs {
            continue;
        }
        rhs.add_term(f, &f.neg(&f.mul(c, &inv)), w.clone());
    }
    Some(Rule { lhs, rhs })
}

/// All S-polynomials of a rule pair from overlaps of degree ≤ cap:
/// proper overlaps (a suffix of one lhs is a prefix of the other) and
/// factor inclusions.
fn s_polynomials(f: &FieldSpec, a: &Rule, b: &Rule, cap: usize) -> Vec<NCPoly> {
    let mut out = Vec::new();
    // proper overlaps: a.lhs = XY, b.lhs = YZ with Y nonempty proper
    for (first, second) in [(a, b), (b, a)] {
        let (la, lb) = (first.lhs.len(), second.lhs.len());
        for k in 1..la.min(lb) {
            // suffix of first of length k == prefix of second of length k
            if first.lhs.0[la - k..] == second.lhs.0[..k] {
                let super_len = la + lb - k;
                if super_len > cap {
                    continue;
                }
                let x = Word(first.lhs.0[..la - k].to_vec());
                let z = Word(second.lhs.0[k..].to_vec());
                // super = X·Y·Z reduces two ways:
                // rhs_first·Z  vs  X·rhs_second
                let left = first.rhs.sandwich(f, &Word::empty(), &z);
                let right = second.rhs.sandwich(f, &x, &Word::empty());
                out.push(left.sub(f, &right));
            }
        }
    }
    // inclusion: b.lhs a factor of a.lhs (every occurrence, symmetrically)
    for (big, small) in [(a, b), (b, a)] {
        if big.lhs.len() <= small.lhs.len() || big.lhs.len() > cap {
            continue;
        }
        for pos in 0..=big.lhs.len() - small.lhs.len() {
            if big.lhs.0[pos..pos + small.lhs.len()] != small.lhs.0[..] {
                continue;
            }
            let x = Word(big.lhs.0[..pos].to_vec());
            let y = Word(big.lhs.0[pos + small.lhs.len()..].to_vec());
            let left = big.rhs.clone();
            let right = small.rhs.sandwich(f, &x, &y);
            out.push(left.sub(f, &right));
        }
    }
    out
}

fn complete_uncached(
    field: Arc<FieldSpec>,
    relations: &[NCPoly],
    opts: &CompletionOptions,
) -> Result<RewriteSystem> {
    let f = &*field;
    for r in relations {
        if r.degree() > opts.cap {
            return Err(Error::InvalidInput(format!(
                "relation degree {} exceeds the cap {}",
                r.degree(),
                opts.cap
            )));
        }
    }
    let mut rules: Vec<Rule> = Vec::new();
    let mut queue: VecDeque<NCPoly> = relations.iter().cloned().collect();
    while let Some(p) = queue.pop_front() {
        let reduced = reduce(f, &rules, &p);
        if reduced.is_zero() {
            continue;
        }
        let rule = orient(f, &reduced).expect("nonzero polynomial");
        for existing in &rules {
            for s in s_polynomials(f, &rule, existing, opts.cap) {
                queue.push_back(s);
            }
        }
        for s in s_polynomials(f, &rule, &rule, opts.cap) {
            queue.push_back(s);
        }
        rules.push(rule);
        if rules.len() > opts.max_rules {
            return Err(Error::Ceiling(format!(
                "completion produced more than {} rules at cap {}",
                opts.max_rules, opts.cap
            )));
        }
    }

    // tail-reduce the rule set for canonical output
    let snapshot = rules.clone();
    for rule in rules.iter_mut() {
        rule.rhs = reduce(f, &snapshot, &rule.rhs);
    }

    // confluence certificate: every remaining overlap reduces to zero
    let mut overlaps_checked = 0usize;
    for i in 0..rules.len() {
        for j in i..rules.len() {
            for s in s_polynomials(f, &rules[i], &rules[j], opts.cap) {
                overlaps_checked += 1;
                if !reduce(f, &rules, &s).is_zero() {
                    return Err(Error::InvalidInput(
                        "completion finished with an unresolved overlap (internal bug)".into(),
                    ));
                }
            }
        }
    }

    let certificate = Certificate {
        overlaps_checked,
        rules_checksum: rules_checksum(&field, &rules),
        cap: opts.cap,
    };
    Ok(RewriteSystem { field, rules, cap: opts.cap, certificate, from_cache: false })
}

// ----- cache -----

#[derive(Serialize, Deserialize)]
struct CachedRule {
    lhs: Vec<u8>,
    rhs: Vec<(Vec<u8>, String)>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    cap: usize,
    rules: Vec<CachedRule>,
    certificate: Certificate,
}

fn presentation_hash(field: &FieldSpec, relations: &[NCPoly], cap: usize) -> String {
    let mut hasher = Sha256::new();
    hasher.update(format!("field={field};cap={cap}").as_bytes());
    for r in relations {
        for (w, c) in &r.terms {
            hasher.update(&w.0);
            hasher.update(field.element_to_string(c).as_bytes());
            hasher.update(b"|");
        }
        hasher.update(b";");
    }
    crate::hopf::hex_prefix(&hasher.finalize(), 32)
}

fn rules_checksum(field: &FieldSpec, rules: &[Rule]) -> String {
    let mut hasher = Sha256::new();
    for r in rules {
        hasher.update(&r.lhs.0);
        hasher.update(b"->");
        for (w, c) in &r.rhs.terms {
            hasher.update(&w.0);
            hasher.update(field.element_to_string(c).as_bytes());
        }
        hasher.update(b";");
    }
    crate::hopf::hex_prefix(&hasher.finalize(), 32)
}

fn try_load_cache(
    field: &Arc<FieldSpec>,
    dir: &Path,
    key: &str,
    cap: usize,
) -> Result<Option<RewriteSystem>> {
    let path = dir.join(format!("{key}.json"));
    if !path.exists() {
        return Ok(None);
    }
    let data = std::fs::read_to_string(&path)?;
    let parsed: CacheFile = match serde_json::from_str(&data) {
        Ok(p) => p,
        Err(_) => return Ok(None), // corrupt cache: recompute
    };
    if parsed.cap != cap {
        return Ok(None);
    }
    let f = &**field;
    let mut rules = Vec::with_capacity(parsed.rules.len());
    for cr in parsed.rules {
        let mut rhs = NCPoly::zero();
        for (w, c) in cr.rhs {
            let coeff = f.parse_element(&c)?;
            rhs.add_term(f, &coeff, Word(w));
        }
        rules.push(Rule { lhs: Word(cr.lhs), rhs });
    }
    // cache hits must re-verify the certificate checksum
    if rules_checksum(field, &rules) != parsed.certificate.rules_checksum {
        return Ok(None);
    }
    Ok(Some(RewriteSystem {
        field: field.clone(),
        rules,
        cap,
        certificate: parsed.certificate,
        from_cache: true,
    }))
}

fn store_cache(dir: &Path, key: &str, sys: &RewriteSystem) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let f = &**sys.field();
    let rules = sys
        .rules
        .iter()
        .map(|r| CachedRule {
            lhs: r.lhs.0.clone(),
            rhs: r
                .rhs
                .terms
                .iter()
                .map(|(w, c)| (w.0.clone(), f.element_to_string(c)))
                .collect(),
        })
        .collect();
    let file = CacheFile { cap: sys.cap, rules, certificate: sys.certificate.clone() };
    let path = dir.join(format!("{key}.json"));
    std::fs::write(path, serde_json::to_string_pretty(&file)?.as_bytes())?;
    Ok(())
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(format!("json: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_field_spec;

    fn two_letter_commutator(cap: usize) -> (Arc<FieldSpec>, Vec<NCPoly>, CompletionOptions) {
        let q = Arc::new(parse_field_spec("Q").unwrap());
        // xy − yx with x < y: leading word yx → xy
        let f = &*q;
        let xy = NCPoly::letter(f, 0).mul(f, &NCPoly::letter(f, 1));
        let yx = NCPoly::letter(f, 1).mul(f, &NCPoly::letter(f, 0));
        (q.clone(), vec![yx.sub(f, &xy)], CompletionOptions::new(cap))
    }

    #[test]
    fn commutative_toy_is_immediately_confluent() {
        let (q, rels, opts) = two_letter_commutator(4);
        let sys = RewriteSystem::complete(q, &rels, &opts).unwrap();
        assert_eq!(sys.rules.len(), 1);
        // words of length d in normal form: x^a y^b, so d+1 of them
        for d in 0..=4usize {
            let count = sys.normal_words(2, d).len();
            let expected: usize = (0..=d).map(|e| e + 1).sum();
            assert_eq!(count, expected);
        }
    }

    #[test]
    fn group_algebra_z2_normal_words() {
        let q = Arc::new(parse_field_spec("Q").unwrap());
        let f = &*q;
        // g² − 1
        let rel = NCPoly::letter(f, 0).mul(f, &NCPoly::letter(f, 0)).sub(f, &NCPoly::one(f));
        let sys = RewriteSystem::complete(q, &[rel], &CompletionOptions::new(3)).unwrap();
        let words = sys.normal_words(1, 3);
        assert_eq!(words, vec![Word::empty(), Word(vec![0])]);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let (q, rels, opts) = two_letter_commutator(5);
        let f = &*q;
        let sys = RewriteSystem::complete(q.clone(), &rels, &opts).unwrap();
        let p = NCPoly::term(f, f.from_i64(2), Word(vec![1, 0, 1]))
            .add(f, &NCPoly::term(f, f.from_i64(-3), Word(vec![1, 1, 0])));
        let n1 = sys.normal_form(&p).unwrap();
        assert_eq!(sys.normal_form(&n1).unwrap(), n1);
        // linearity against a second polynomial
        let qq = NCPoly::term(f, f.from_i64(5), Word(vec![0, 1, 1]));
        let lhs = sys.normal_form(&p.add(f, &qq)).unwrap();
        let rhs = sys.normal_form(&p).unwrap().add(f, &sys.normal_form(&qq).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cap_exceeded_is_an_error() {
        let (q, rels, opts) = two_letter_commutator(3);
        let f = &*q;
        let sys = RewriteSystem::complete(q.clone(), &rels, &opts).unwrap();
        let big = NCPoly::term(f, f.one(), Word(vec![0, 1, 0, 1]));
        assert!(sys.normal_form(&big).is_err());
    }

    #[test]
    fn cache_round_trip_preserves_rules() {
        let dir = tempfile::tempdir().unwrap();
        let (q, rels, opts) = two_letter_commutator(4);
        let opts = opts.with_cache(Some(dir.path().to_path_buf()));
        let cold = RewriteSystem::complete(q.clone(), &rels, &opts).unwrap();
        assert!(!cold.from_cache);
        let warm = RewriteSystem::complete(q, &rels, &opts).unwrap();
        assert!(warm.from_cache);
        assert_eq!(cold.rules.len(), warm.rules.len());
        for (a, b) in cold.rules.iter().zip(&warm.rules) {
            assert_eq!(a.lhs, b.lhs);
            assert_eq!(a.rhs, b.rhs);
        }
        assert_eq!(cold.certificate.rules_checksum, warm.certificate.rules_checksum);
    }
}
