//! Exhaustive comparison of the closed-form classifiers with the ballot
//! tableau oracle over every skew shape in a box.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    check_reduced, classify, classify_cases, classify_reduced, min_nonfree_vars, Case, ExtendedNat,
};
use crate::error::{Error, Result};
use crate::lr::skew_schur_expansion;
use crate::partition::{partitions_in_box, subpartitions, Partition};
use crate::skew::SkewPartition;

/// Bounds of a verification run: `λ_1 ≤ max_width`, `ℓ(λ) ≤ max_length`,
/// `1 ≤ n ≤ max_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRange {
    pub max_width: usize,
    pub max_length: usize,
    pub max_n: usize,
}

impl VerifyRange {
    pub fn new(max_width: usize, max_length: usize, max_n: usize) -> Result<Self> {
        if max_width == 0 || max_length == 0 || max_n == 0 {
            return Err(Error::PreconditionFailed(
                "verification bounds must be at least 1".into(),
            ));
        }
        Ok(VerifyRange {
            max_width,
            max_length,
            max_n,
        })
    }

    /// Nonempty outer shapes in graded lexicographic order.
    pub fn outers(&self) -> Vec<Partition> {
        partitions_in_box(self.max_width, self.max_length)
            .into_iter()
            .filter(|p| !p.is_empty())
            .collect()
    }
}

/// What disagreed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    /// Inequality, case list and oracle do not all agree at this `n`.
    Verdict,
    /// `m(λ/μ)` differs from the least sharp non-free `n` the oracle finds.
    MinVars,
}

/// One disagreement. For [`MismatchKind::MinVars`] records `n` is the
/// oracle's least sharp non-free count (0 when none up to `max_n`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub kind: MismatchKind,
    pub shape: SkewPartition,
    pub n: usize,
    pub formula: bool,
    pub case: Option<Case>,
    pub oracle: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_vars: Option<ExtendedNat>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub range: Option<VerifyRange>,
    pub shapes_tested: usize,
    pub pairs_tested: usize,
    /// Pairs whose shape is already basic, `n`-sharp, tight and ordinary.
    pub reduced_pairs: usize,
    pub free_pairs: usize,
    /// Basic, tight, ordinary shapes whose `m(λ/μ)` was checked.
    pub min_vars_checked: usize,
    pub mismatches: usize,
    pub records: Vec<Mismatch>,
}

impl VerifyReport {
    fn absorb(&mut self, other: VerifyReport) {
        self.shapes_tested += other.shapes_tested;
        self.pairs_tested += other.pairs_tested;
        self.reduced_pairs += other.reduced_pairs;
        self.free_pairs += other.free_pairs;
        self.min_vars_checked += other.min_vars_checked;
        self.mismatches += other.mismatches;
        self.records.extend(other.records);
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches == 0
    }
}

/// Least `ℓ(ν)` over the terms with coefficient at least 2: the polynomial
/// in `n` variables is multiplicity-free iff `n` is below it.
fn first_nonfree_length(shape: &SkewPartition, max_n: usize) -> Result<Option<usize>> {
    let expansion = skew_schur_expansion(shape, max_n)?;
    Ok(expansion
        .terms()
        .filter(|&(_, c)| c >= 2)
        .map(|(nu, _)| nu.length())
        .min())
}

/// Checks one skew shape at every `n` in range.
pub fn verify_shape(shape: &SkewPartition, max_n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        shapes_tested: 1,
        ..VerifyReport::default()
    };
    let threshold = first_nonfree_length(shape, max_n)?;
    let oracle_free = |n: usize| threshold.is_none_or(|t| n < t);
    for n in 1..=max_n {
        let verdict = classify(shape, n)?;
        let oracle = oracle_free(n);
        let by_case = classify_cases(&verdict.reduced_shape, verdict.reduced_n)?.is_some();
        report.pairs_tested += 1;
        report.free_pairs += usize::from(oracle);
        if check_reduced(shape, n).is_ok() {
            report.reduced_pairs += 1;
            // the reduced-form classifiers applied to the shape itself
            let direct = classify_reduced(shape, n)?;
            let direct_case = classify_cases(shape, n)?;
            if direct != direct_case.is_some() || direct != oracle {
                report.records.push(Mismatch {
                    kind: MismatchKind::Verdict,
                    shape: shape.clone(),
                    n,
                    formula: direct,
                    case: direct_case,
                    oracle,
                    min_vars: None,
                });
                continue;
            }
        }
        if verdict.multiplicity_free != oracle || by_case != oracle {
            report.records.push(Mismatch {
                kind: MismatchKind::Verdict,
                shape: shape.clone(),
                n,
                formula: verdict.multiplicity_free,
                case: verdict.case,
                oracle,
                min_vars: None,
            });
        }
    }
    if !shape.is_empty() && shape.is_tight() && shape.is_ordinary() {
        report.min_vars_checked = 1;
        let m = min_nonfree_vars(shape)?;
        let rho = shape.rho();
        let oracle_m = (rho + 1..=max_n).find(|&n| !oracle_free(n));
        let agrees = match (m, oracle_m) {
            (ExtendedNat::Finite(m), Some(o)) => m == o,
            (ExtendedNat::Finite(m), None) => m > max_n,
            (ExtendedNat::Infinity, None) => true,
            (ExtendedNat::Infinity, Some(_)) => false,
        };
        if !agrees {
            report.records.push(Mismatch {
                kind: MismatchKind::MinVars,
                shape: shape.clone(),
                n: oracle_m.unwrap_or(0),
                formula: m.finite().is_none_or(|m| m > max_n),
                case: None,
                oracle: oracle_m.is_none(),
                min_vars: Some(m),
            });
        }
    }
    report.mismatches = report.records.len();
    Ok(report)
}

/// Every `μ ⊆ λ` for one outer shape.
fn verify_outer(outer: &Partition, max_n: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for inner in subpartitions(outer) {
        let shape = SkewPartition::new(outer.clone(), inner)?;
        report.absorb(verify_shape(&shape, max_n)?);
    }
    Ok(report)
}

/// Runs the whole range on `jobs` worker threads (all cores when `None`).
/// `progress` receives `(outer shapes done, total)`. The report does not
/// depend on the number of workers.
pub fn verify(
    range: VerifyRange,
    jobs: Option<usize>,
    progress: Option<&(dyn Fn(usize, usize) + Sync)>,
) -> Result<VerifyReport> {
    let outers = range.outers();
    let total = outers.len();
    let done = AtomicUsize::new(0);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = jobs {
        builder = builder.num_threads(jobs);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let parts: Vec<Result<VerifyReport>> = pool.install(|| {
        outers
            .par_iter()
            .map(|outer| {
                let part = verify_outer(outer, range.max_n);
                let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
                if let Some(progress) = progress {
                    progress(finished, total);
                }
                part
            })
            .collect()
    });
    let mut report = VerifyReport {
        range: Some(range),
        ..VerifyReport::default()
    };
    for part in parts {
        report.absorb(part?);
    }
    Ok(report)
}
