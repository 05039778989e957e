//! Littlewood-Richardson coefficients, Schur and monomial expansions of skew
//! Schur polynomials, and the brute-force multiplicity oracle.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::skew::SkewPartition;
use crate::tableau::{ballot_tableaux, ballot_tableaux_bounded, semistandard_tableaux, Tableau};

/// `Σ_ν c_ν s_ν` with every stored coefficient positive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, u64>,
}

#[derive(Serialize)]
struct Term<'a> {
    partition: &'a Partition,
    coefficient: u64,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an expansion of `shape`, rejecting any key that is not a
    /// partition of `|λ| − |μ|` inside `λ`.
    pub fn for_shape(shape: &SkewPartition, terms: BTreeMap<Partition, u64>) -> Result<Self> {
        for (nu, &c) in &terms {
            if c == 0 {
                return Err(Error::Invariant(format!(
                    "zero coefficient stored for {}",
                    nu.bracketed()
                )));
            }
            if nu.size() != shape.size() || !shape.outer().contains(nu) {
                return Err(Error::Invariant(format!(
                    "{} cannot appear in the expansion of {shape}",
                    nu.bracketed()
                )));
            }
        }
        Ok(SchurExpansion { terms })
    }

    pub fn coefficient(&self, nu: &Partition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    pub fn add(&mut self, nu: Partition, c: u64) {
        if c > 0 {
            *self.terms.entry(nu).or_insert(0) += c;
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in reverse lexicographic order, largest first part first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().rev().map(|(nu, &c)| (nu, c))
    }

    /// Keeps only the terms with `ℓ(ν) ≤ n`.
    pub fn restrict(&self, n: usize) -> SchurExpansion {
        let terms = self
            .terms
            .iter()
            .filter(|(nu, _)| nu.length() <= n)
            .map(|(nu, &c)| (nu.clone(), c))
            .collect();
        SchurExpansion { terms }
    }

    /// Largest coefficient and the lexicographically least `ν` carrying it;
    /// `(0, None)` for the zero polynomial.
    pub fn max_coefficient(&self) -> (u64, Option<Partition>) {
        let mut best: (u64, Option<Partition>) = (0, None);
        for (nu, &c) in &self.terms {
            if c > best.0 {
                best = (c, Some(nu.clone()));
            }
        }
        best
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&c| c <= 1)
    }
}

impl fmt::Display for SchurExpansion {
    /// `(2):1 (1,1):1`, or `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let text: Vec<String> = self
            .terms()
            .map(|(nu, c)| format!("{}:{c}", nu.bracketed()))
            .collect();
        f.write_str(&text.join(" "))
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (partition, coefficient) in self.terms() {
            seq.serialize_element(&Term {
                partition,
                coefficient,
            })?;
        }
        seq.end()
    }
}

/// A polynomial in `x_1, …, x_n` stored as exponent vector to coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBag {
    vars: usize,
    terms: BTreeMap<Vec<usize>, u64>,
}

impl MonomialBag {
    pub fn new(vars: usize) -> Self {
        MonomialBag {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Adds `c · x^exponent`; a short exponent is padded with zeros.
    pub fn add(&mut self, exponent: &[usize], c: u64) -> Result<()> {
        if exponent.len() > self.vars {
            return Err(Error::Invariant(format!(
                "exponent of length {} in a bag over {} variables",
                exponent.len(),
                self.vars
            )));
        }
        if c == 0 {
            return Ok(());
        }
        let mut key = exponent.to_vec();
        key.resize(self.vars, 0);
        *self.terms.entry(key).or_insert(0) += c;
        Ok(())
    }

    /// Adds `c` times another bag over the same variables.
    pub fn add_scaled(&mut self, other: &MonomialBag, c: u64) -> Result<()> {
        if other.vars != self.vars {
            return Err(Error::Invariant(
                "adding bags over different variable counts".into(),
            ));
        }
        for (exp, &d) in &other.terms {
            *self.terms.entry(exp.clone()).or_insert(0) += c * d;
        }
        Ok(())
    }

    pub fn coefficient(&self, exponent: &[usize]) -> u64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], u64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

type CacheKey = (Partition, Partition, Partition);

/// Memo table for coefficients. Inserts are idempotent, so concurrent
/// duplicate work is harmless. Once `capacity` entries are stored, new
/// results are computed but not kept.
#[derive(Debug)]
pub struct LrCache {
    map: RwLock<HashMap<CacheKey, u64>>,
    capacity: usize,
}

impl LrCache {
    pub fn new(capacity: usize) -> Self {
        LrCache {
            map: RwLock::new(HashMap::new()),
            capacity,
        }
    }

    pub fn global() -> &'static LrCache {
        static CACHE: OnceLock<LrCache> = OnceLock::new();
        CACHE.get_or_init(|| LrCache::new(1 << 20))
    }

    pub fn len(&self) -> usize {
        self.map.read().map(|m| m.len()).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coefficient(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        let key = (lam.clone(), mu.clone(), nu.clone());
        if let Some(c) = self.map.read().ok().and_then(|m| m.get(&key).copied()) {
            return c;
        }
        let c = count_ballot(lam, mu, nu);
        if let Ok(mut map) = self.map.write() {
            if map.len() < self.capacity {
                map.insert(key, c);
            }
        }
        c
    }
}

fn count_ballot(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lam.contains(mu) || mu.size() + nu.size() != lam.size() {
        return 0;
    }
    let shape = SkewPartition::new(lam.clone(), mu.clone()).expect("containment checked");
    ballot_tableaux(&shape, nu).count() as u64
}

/// `c^λ_{μ,ν}`, the number of ballot tableaux of shape `λ/μ` and content
/// `ν`; zero when `μ ⊄ λ` or the sizes do not add up. Memoized.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    LrCache::global().coefficient(lam, mu, nu)
}

/// Same count as [`lr_coefficient`] without touching the cache.
pub fn lr_coefficient_uncached(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    count_ballot(lam, mu, nu)
}

/// Schur expansion of `s_{λ/μ}(x_1, …, x_n)`, from one pass over the ballot
/// tableaux with letters at most `n`.
pub fn skew_schur_expansion(shape: &SkewPartition, n: usize) -> Result<SchurExpansion> {
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut stream = ballot_tableaux_bounded(shape, n);
    while let Some(content) = stream.next_content() {
        let nu = Partition::new(content).map_err(|e| {
            Error::Invariant(format!("ballot content of {shape} is not a partition: {e}"))
        })?;
        *counts.entry(nu).or_insert(0) += 1;
    }
    SchurExpansion::for_shape(shape, counts)
}

/// `s_{λ/μ}(x_1, …, x_n)` as a sum of monomials over semistandard tableaux.
pub fn monomial_expansion(shape: &SkewPartition, n: usize) -> MonomialBag {
    let mut bag = MonomialBag::new(n);
    let mut stream = semistandard_tableaux(shape, n);
    while let Some(content) = stream.next_content() {
        bag.add(&content, 1).expect("letters are bounded by n");
    }
    bag
}

/// Largest coefficient in the expansion and the lexicographically least `ν`
/// carrying it.
pub fn max_multiplicity(shape: &SkewPartition, n: usize) -> Result<(u64, Option<Partition>)> {
    Ok(skew_schur_expansion(shape, n)?.max_coefficient())
}

/// True iff every coefficient is 0 or 1. Stops at the first repeated content.
pub fn is_multiplicity_free_oracle(shape: &SkewPartition, n: usize) -> bool {
    let mut seen = HashSet::new();
    let mut stream = ballot_tableaux_bounded(shape, n);
    while let Some(content) = stream.next_content() {
        if !seen.insert(content) {
            return false;
        }
    }
    true
}

/// The first two ballot tableaux, in enumeration order, that share a content
/// of length at most `n`. `None` when the polynomial is multiplicity-free.
pub fn multiplicity_witness(shape: &SkewPartition, n: usize) -> Option<(Tableau, Tableau)> {
    let mut first: HashMap<Vec<usize>, Tableau> = HashMap::new();
    for tableau in ballot_tableaux_bounded(shape, n) {
        let content = tableau.content();
        if let Some(earlier) = first.remove(&content) {
            return Some((earlier, tableau));
        }
        first.insert(content, tableau);
    }
    None
}
