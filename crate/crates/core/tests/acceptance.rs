//! Acceptance checks. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero on any FAIL.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use skewmf::classify::{
    check_reduced, classify_cases, classify_reduced, classify_skew_function, min_nonfree_vars,
};
use skewmf::partition::{partitions_in_box, partitions_of, subpartitions};
use skewmf::tableau::{ballot_tableaux_bounded, is_ballot, semistandard_tableaux, Tableau};
use skewmf::verify::{verify, MismatchKind, VerifyRange, VerifyReport};
use skewmf::{
    lr_coefficient, monomial_expansion, skew_schur_expansion, ExtendedNat, MonomialBag, Partition,
    Rectangle, SkewPartition,
};

const WIDTH: usize = 6;
const LENGTH: usize = 6;
const MAX_N: usize = 8;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

fn s(text: &str) -> SkewPartition {
    text.parse().unwrap()
}

/// Every skew shape of the main range, outer shapes in graded lex order.
fn all_shapes() -> Vec<SkewPartition> {
    partitions_in_box(WIDTH, LENGTH)
        .into_iter()
        .filter(|lam| !lam.is_empty())
        .flat_map(|lam| {
            subpartitions(&lam)
                .into_iter()
                .map(move |mu| SkewPartition::new(lam.clone(), mu).unwrap())
        })
        .collect()
}

fn classifier_agreement(report: &VerifyReport) -> Outcome {
    let verdict = report
        .records
        .iter()
        .filter(|r| r.kind == MismatchKind::Verdict)
        .count();
    let sizes_ok = report.shapes_tested == 226_511 && report.pairs_tested == 1_812_088;
    Outcome::new(
        verdict == 0 && sizes_ok,
        format!(
            "{} shapes, {} pairs, {} disagreements with the oracle",
            report.shapes_tested, report.pairs_tested, verdict
        ),
    )
}

fn formulation_equivalence(shapes: &[SkewPartition]) -> Outcome {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for shape in shapes {
        for n in 1..=MAX_N {
            if check_reduced(shape, n).is_err() {
                continue;
            }
            pairs += 1;
            let formula = classify_reduced(shape, n).unwrap();
            let cases = classify_cases(shape, n).unwrap().is_some();
            if formula != cases {
                bad.push(format!("{shape} n={n}"));
            }
        }
    }
    Outcome::new(
        bad.is_empty() && pairs > 0,
        format!("{pairs} reduced pairs, {} disagreements {bad:?}", bad.len()),
    )
}

/// All 27 fillings of the three boxes of (3,2,1)/(2,1) by 1..3, tested with
/// hand-written semistandard and ballot checks.
fn known_coefficient() -> Outcome {
    // boxes: (1,3), (2,2), (3,1) share no row or column
    let mut brute = 0;
    for a in 1..=3usize {
        for b in 1..=3usize {
            for c in 1..=3usize {
                let word = [a, b, c];
                let mut counts = [0usize; 4];
                let mut ballot = true;
                for &x in &word {
                    counts[x] += 1;
                    if x > 1 && counts[x] > counts[x - 1] {
                        ballot = false;
                    }
                }
                if ballot && counts[1] == 2 && counts[2] == 1 && counts[3] == 0 {
                    brute += 1;
                }
            }
        }
    }
    let engine = lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1"));
    Outcome::new(
        brute == 2 && engine == 2,
        format!("brute force {brute}, ballot enumerator {engine}"),
    )
}

fn example_values() -> Outcome {
    let rect = Rectangle::new(5, 4).unwrap();
    let lam = p("5,4,1,1");
    let complement = lam.complement(rect).unwrap();
    let short = lam.shortness(rect).unwrap();
    let reversed = s("6,6,6,2,2,1/5,3,2").column_reversal().unwrap();
    let pass = complement == p("4,4,1") && short == 1 && reversed == s("6,5,3,2,2,1/2,2,2");
    Outcome::new(
        pass,
        format!(
            "complement {}, shortness {short}, reversal {reversed}",
            complement.bracketed()
        ),
    )
}

fn symmetry_battery() -> Outcome {
    let mut triples = 0usize;
    let mut bad = Vec::new();
    for a in 1..=4 {
        for b in 1..=4 {
            let rect = Rectangle::new(a, b).unwrap();
            let inside = partitions_in_box(a, b);
            for lam in inside.iter().filter(|l| l.size() <= 8) {
                for mu in inside.iter().filter(|m| m.size() <= lam.size()) {
                    for nu in inside.iter().filter(|n| n.size() + mu.size() == lam.size()) {
                        triples += 1;
                        let c = lr_coefficient(lam, mu, nu);
                        let lam_c = lam.complement(rect).unwrap();
                        let mu_c = mu.complement(rect).unwrap();
                        let nu_c = nu.complement(rect).unwrap();
                        let swapped = lr_coefficient(lam, nu, mu);
                        let complemented = lr_coefficient(&nu_c, mu, &lam_c);
                        let rotated = lr_coefficient(&mu_c, nu, &lam_c);
                        let rotated_swapped = lr_coefficient(&mu_c, &lam_c, nu);
                        if [swapped, complemented, rotated, rotated_swapped]
                            .iter()
                            .any(|&d| d != c)
                        {
                            bad.push(format!(
                                "{a}x{b} {} {} {}",
                                lam.bracketed(),
                                mu.bracketed(),
                                nu.bracketed()
                            ));
                        }
                    }
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{triples} triples in rectangles up to 4x4, {} violations",
            bad.len()
        ),
    )
}

fn single_part(v: usize) -> Partition {
    if v == 0 {
        Partition::empty()
    } else {
        Partition::new(vec![v]).unwrap()
    }
}

fn monotonicity() -> Outcome {
    let mut instances = 0usize;
    let mut bad = Vec::new();
    for size in 0..=8 {
        for lam in partitions_of(size) {
            for mu in subpartitions(&lam) {
                let shape = SkewPartition::new(lam.clone(), mu.clone()).unwrap();
                let expansion = skew_schur_expansion(&shape, shape.size()).unwrap();
                for (nu, c) in expansion.terms() {
                    for a in 0..=4 {
                        for b in 0..=a {
                            instances += 1;
                            let by_columns = lr_coefficient(
                                &lam.add_rectangle(1, a),
                                &mu.add_rectangle(1, b),
                                &nu.add_rectangle(1, a - b),
                            );
                            let by_rows = lr_coefficient(
                                &lam.union(&single_part(a)),
                                &mu.union(&single_part(b)),
                                &nu.union(&single_part(a - b)),
                            );
                            if by_columns < c || by_rows < c {
                                bad.push(format!("{shape} {} a={a} b={b}", nu.bracketed()));
                            }
                        }
                    }
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{instances} instances with |λ| <= 8, a <= 4, {} violations {bad:?}",
            bad.len()
        ),
    )
}

fn expansion_invariance(shapes: &[SkewPartition]) -> Outcome {
    let mut sharp_checks = 0usize;
    let mut bad = Vec::new();
    for shape in shapes {
        let full = skew_schur_expansion(shape, MAX_N).unwrap();
        let basic = shape.basic_demolition();
        if skew_schur_expansion(&basic, MAX_N).unwrap() != full {
            bad.push(format!("basic {shape}"));
        }
        if !basic.is_empty() {
            let ordinary = basic.ordinary_reduction().unwrap();
            if ordinary != basic && skew_schur_expansion(&ordinary, MAX_N).unwrap() != full {
                bad.push(format!("ordinary {shape}"));
            }
        }
        for n in shape.rho().max(1)..=MAX_N {
            sharp_checks += 1;
            let k = shape.full_columns(n);
            let sharp = shape.nsharp_demolition(n);
            let lifted: Vec<(Partition, u64)> = skew_schur_expansion(&sharp, n)
                .unwrap()
                .terms()
                .map(|(nu, c)| (nu.add_rectangle(k, n), c))
                .collect();
            let target: Vec<(Partition, u64)> = full
                .restrict(n)
                .terms()
                .map(|(nu, c)| (nu.clone(), c))
                .collect();
            if lifted != target {
                bad.push(format!("sharp {shape} n={n}"));
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{} shapes, {sharp_checks} sharp identities, {} violations {bad:?}",
            shapes.len(),
            bad.len()
        ),
    )
}

fn monomial_consistency(shapes: &[SkewPartition], lemma: &mut LemmaTally) -> Outcome {
    let mut straight: HashMap<(Partition, usize), MonomialBag> = HashMap::new();
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for shape in shapes.iter().filter(|sh| sh.size() <= 8) {
        for n in 1..=4 {
            checked += 1;
            let direct = monomial_expansion(shape, n);
            let mut summed = MonomialBag::new(n);
            for (nu, c) in skew_schur_expansion(shape, n).unwrap().terms() {
                let bag = straight
                    .entry((nu.clone(), n))
                    .or_insert_with(|| monomial_expansion(&SkewPartition::straight(nu.clone()), n));
                summed.add_scaled(bag, c).unwrap();
            }
            if direct != summed {
                bad.push(format!("{shape} n={n}"));
            }
            if n == 4 {
                for t in semistandard_tableaux(shape, n) {
                    lemma.check_reading_words(&t);
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{checked} (shape, n) pairs with <= 8 boxes, n <= 4, {} violations",
            bad.len()
        ),
    )
}

fn min_vars_agreement(report: &VerifyReport, shapes: &[SkewPartition]) -> Outcome {
    let wrong = report
        .records
        .iter()
        .filter(|r| r.kind == MismatchKind::MinVars)
        .count();
    let mut infinite = 0usize;
    let mut skew_bad = Vec::new();
    for shape in shapes
        .iter()
        .filter(|sh| !sh.is_empty() && sh.is_tight() && sh.is_ordinary())
    {
        let m = min_nonfree_vars(shape).unwrap();
        if m == ExtendedNat::Infinity {
            infinite += 1;
        }
        if (m == ExtendedNat::Infinity) != classify_skew_function(shape) {
            skew_bad.push(shape.to_string());
        }
    }
    Outcome::new(
        wrong == 0 && skew_bad.is_empty() && report.min_vars_checked > 0,
        format!(
            "{} basic tight ordinary shapes ({infinite} infinite), {wrong} oracle disagreements, {} skew-function disagreements",
            report.min_vars_checked,
            skew_bad.len()
        ),
    )
}

#[derive(Default)]
struct LemmaTally {
    tableaux: usize,
    violations: HashMap<&'static str, usize>,
    examples: Vec<String>,
}

impl LemmaTally {
    fn fail(&mut self, lemma: &'static str, t: &Tableau) {
        *self.violations.entry(lemma).or_insert(0) += 1;
        if self.examples.len() < 5 {
            self.examples.push(format!(
                "{lemma}: {} [{}]",
                t.shape(),
                t.render().replace('\n', " | ")
            ));
        }
    }

    fn check_reading_words(&mut self, t: &Tableau) {
        self.tableaux += 1;
        if t.reverse_reading_word().is_ballot() != t.column_reading_word().is_ballot() {
            self.fail("reading words", t);
        }
    }

    fn check_ballot(&mut self, t: &Tableau) {
        self.check_reading_words(t);
        let shape = t.shape();
        let content = t.content();
        let part = |i: usize| content.get(i - 1).copied().unwrap_or(0);
        // every b x k block forces (k^b) into the content
        for b in 1..=shape.num_rows() {
            let widest = (0..=shape.num_rows() - b)
                .map(|r| {
                    shape
                        .outer()
                        .part(r + b - 1)
                        .saturating_sub(shape.inner().part(r))
                })
                .max()
                .unwrap_or(0);
            if widest > 0 && shape.contains_rectangle(b, widest) && part(b) < widest {
                self.fail("rectangle content", t);
            }
        }
        let word = t.reverse_reading_word();
        if !word.is_empty() && !(1..=3).all(|k| word.extend_ascending(k).is_ballot()) {
            self.fail("ascending suffix", t);
        }
        for n_rows in 1..=shape.num_rows() {
            if !t.delete_rows(n_rows).unwrap().is_ballot() {
                self.fail("row deletion", t);
            }
        }
        let bottom = t.bottom_row().map(|r| &t.rows()[r - 1]);
        for i in 1..=content.len() {
            for j in i + 1..=content.len() {
                if part(i) == part(j) && bottom.is_some_and(|row| row.contains(&i)) {
                    self.fail("bottom row", t);
                }
                let columns_with = |v: usize| -> Vec<usize> {
                    (1..=shape.num_cols())
                        .filter(|&c| (1..=shape.num_rows()).any(|r| t.entry(r, c) == Some(v)))
                        .collect()
                };
                if let Some(&first_j) = columns_with(j).first() {
                    let left = columns_with(i).into_iter().filter(|&z| z < first_j).count();
                    if left > part(i) - part(j) {
                        self.fail("column prefix", t);
                    }
                }
            }
        }
    }

    fn outcome(&self) -> Outcome {
        let total: usize = self.violations.values().sum();
        Outcome::new(
            total == 0 && self.tableaux > 0,
            format!(
                "{} tableaux, {total} violations {:?} {:?}",
                self.tableaux, self.violations, self.examples
            ),
        )
    }
}

fn structural_lemmas(shapes: &[SkewPartition], lemma: &mut LemmaTally) {
    for shape in shapes {
        for t in ballot_tableaux_bounded(shape, MAX_N) {
            debug_assert!(is_ballot(t.reverse_reading_word().letters()));
            lemma.check_ballot(&t);
        }
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let shapes = all_shapes();
    let range = VerifyRange::new(WIDTH, LENGTH, MAX_N).unwrap();
    let report = verify(range, None, None).expect("verification run");
    let mut lemma = LemmaTally::default();

    let mut results: Vec<(&str, Outcome)> = vec![
        (
            "1 classifier agrees with the oracle",
            classifier_agreement(&report),
        ),
        (
            "2 inequality and case list agree",
            formulation_equivalence(&shapes),
        ),
        (
            "3 known coefficient c(321; 21, 21) = 2",
            known_coefficient(),
        ),
        ("4 worked example values", example_values()),
        ("5 coefficient symmetries", symmetry_battery()),
        ("6 monotonicity inequalities", monotonicity()),
        (
            "7 expansion invariance under reductions",
            expansion_invariance(&shapes),
        ),
        (
            "8 monomial and Schur expansions agree",
            monomial_consistency(&shapes, &mut lemma),
        ),
        (
            "9 minimal non-free variable count",
            min_vars_agreement(&report, &shapes),
        ),
    ];
    structural_lemmas(&shapes, &mut lemma);
    results.push(("10 structural tableau lemmas", lemma.outcome()));

    let mut failed = 0;
    for (name, outcome) in &results {
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.pass);
        println!("[{tag}] criterion {name}: {}", outcome.detail);
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        results.len() - failed,
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
