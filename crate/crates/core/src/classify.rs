//! Closed-form multiplicity-freeness tests: the `r1`/`r2` inequality, the
//! eleven-case list, the skew-function criterion, and `m(λ/μ)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lr::multiplicity_witness;
use crate::partition::{Partition, Rectangle};
use crate::skew::SkewPartition;

/// A natural number or infinity. Only addition and comparison are defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedNat {
    Finite(usize),
    Infinity,
}

impl ExtendedNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinity => None,
        }
    }
}

impl From<usize> for ExtendedNat {
    fn from(v: usize) -> Self {
        ExtendedNat::Finite(v)
    }
}

impl Add for ExtendedNat {
    type Output = ExtendedNat;

    fn add(self, rhs: ExtendedNat) -> ExtendedNat {
        match (self, rhs) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => ExtendedNat::Finite(a + b),
            _ => ExtendedNat::Infinity,
        }
    }
}

impl Add<usize> for ExtendedNat {
    type Output = ExtendedNat;

    fn add(self, rhs: usize) -> ExtendedNat {
        self + ExtendedNat::Finite(rhs)
    }
}

impl PartialOrd for ExtendedNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => a.cmp(b),
            (ExtendedNat::Finite(_), ExtendedNat::Infinity) => Ordering::Less,
            (ExtendedNat::Infinity, ExtendedNat::Finite(_)) => Ordering::Greater,
            (ExtendedNat::Infinity, ExtendedNat::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialEq<usize> for ExtendedNat {
    fn eq(&self, other: &usize) -> bool {
        *self == ExtendedNat::Finite(*other)
    }
}

impl PartialOrd<usize> for ExtendedNat {
    fn partial_cmp(&self, other: &usize) -> Option<Ordering> {
        Some(self.cmp(&ExtendedNat::Finite(*other)))
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => serializer.serialize_u64(*v as u64),
            ExtendedNat::Infinity => serializer.serialize_str("inf"),
        }
    }
}

/// Labels of the eleven multiplicity-free configurations of a reduced shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
}

impl Case {
    pub const ALL: [Case; 11] = [
        Case::I,
        Case::II,
        Case::III,
        Case::IV,
        Case::V,
        Case::VI,
        Case::VII,
        Case::VIII,
        Case::IX,
        Case::X,
        Case::XI,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
            Case::IV => "IV",
            Case::V => "V",
            Case::VI => "VI",
            Case::VII => "VII",
            Case::VIII => "VIII",
            Case::IX => "IX",
            Case::X => "X",
            Case::XI => "XI",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Case {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Run-length data of a reduced shape, `λ = (λ_1^{l_1}, …)` and
/// `μ = (μ_1^{k_1}, …, μ_q^{k_q})`, with shortness measured in
/// `(λ_1^{ℓ(λ)})`.
struct Profile {
    lam: Vec<(usize, usize)>,
    mu: Vec<(usize, usize)>,
    mu_len: usize,
    short_lam: usize,
    /// Shortness of `μ`; zero when `μ = ∅`.
    short_mu: usize,
    lam_dual: Partition,
    /// Shortness of `λ^∨`; zero when `λ^∨ = ∅`.
    short_dual: usize,
}

impl Profile {
    fn of(s: &SkewPartition) -> Option<Profile> {
        let rect = s.ambient()?;
        let short = |p: &Partition, rect: Rectangle| {
            if p.is_empty() {
                0
            } else {
                p.shortness(rect).unwrap_or(0)
            }
        };
        let lam_dual = s.outer().complement(rect).ok()?;
        Some(Profile {
            lam: s.outer().runs(),
            mu: s.inner().runs(),
            mu_len: s.inner().length(),
            short_lam: short(s.outer(), rect),
            short_mu: short(s.inner(), rect),
            short_dual: short(&lam_dual, rect),
            lam_dual,
        })
    }

    fn lam2(&self) -> Option<(usize, usize)> {
        self.lam.get(1).copied()
    }

    fn mu_first(&self) -> Option<(usize, usize)> {
        self.mu.first().copied()
    }

    fn mu_last(&self) -> Option<usize> {
        self.mu.last().map(|&(v, _)| v)
    }

    fn dual_is_rectangle(&self) -> bool {
        self.lam_dual.is_rectangle()
    }

    fn mu_is_rectangle(&self) -> bool {
        self.mu.len() == 1
    }

    fn mu_is_fat_hook(&self) -> bool {
        self.mu.len() == 2
    }

    /// `μ_1 > λ_2 > μ_2` with `l_2 > k_1`, for `np(λ) = np(μ) = 2`.
    fn strictly_between_long_tail(&self) -> bool {
        match (self.lam2(), self.mu.as_slice()) {
            (Some((lam2, l2)), &[(mu1, k1), (mu2, _)]) => mu1 > lam2 && lam2 > mu2 && l2 > k1,
            _ => false,
        }
    }
}

fn require_tight_ordinary(s: &SkewPartition) -> Result<()> {
    let mut failed = Vec::new();
    if !s.is_basic() {
        failed.push("basic");
    } else {
        if !s.is_tight() {
            failed.push("tight");
        }
        if !s.is_ordinary() {
            failed.push("ordinary");
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(format!(
            "{s} is not {}",
            failed.join(", ")
        )))
    }
}

/// Checks that `s` is basic, `n`-sharp, tight and ordinary. `∅/∅` passes.
pub fn check_reduced(s: &SkewPartition, n: usize) -> Result<()> {
    if s.is_empty() {
        return Ok(());
    }
    let mut failed = Vec::new();
    if !s.is_basic() {
        failed.push("not basic".to_string());
    } else {
        if !s.is_tight() {
            failed.push(format!("not tight (τ = {}, σ = {})", s.tau(), s.sigma()));
        }
        if !s.is_ordinary() {
            failed.push("not ordinary".to_string());
        }
    }
    if !s.is_nsharp(n) {
        failed.push(format!("not {n}-sharp (ρ = {})", s.rho()));
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::NotReduced {
            shape: s.to_string(),
            n,
            reason: failed.join("; "),
        })
    }
}

/// The four-row `r1` table exactly as tabulated, shortness in `(λ_1^{ℓ(λ)})`.
///
/// Its `2` row also covers `μ_1 > λ_2 > μ_2` with `l_2 > k_1`, where the
/// coefficient rule finds multiplicity already at `n = ρ + 1`; [`r1`] corrects
/// that subcase.
pub fn r1_tabulated(s: &SkewPartition) -> Result<ExtendedNat> {
    require_tight_ordinary(s)?;
    let Some(pr) = Profile::of(s) else {
        return Ok(ExtendedNat::Infinity);
    };
    let (np_lam, np_mu) = (pr.lam.len(), pr.mu.len());
    let value = if np_lam > 2 && np_mu > 1 {
        ExtendedNat::Finite(0)
    } else if np_lam == 2 && np_mu > 2 && pr.short_lam >= 2 {
        ExtendedNat::Finite(1)
    } else if np_lam == 2 && np_mu == 2 && pr.short_lam >= 3 && pr.short_mu >= 2 {
        ExtendedNat::Finite(2)
    } else {
        ExtendedNat::Infinity
    };
    Ok(value)
}

/// `r1` of a basic, tight, ordinary shape: the tabulated value, except `0`
/// on the fat-hook subcase `μ_1 > λ_2 > μ_2`, `l_2 > k_1`.
pub fn r1(s: &SkewPartition) -> Result<ExtendedNat> {
    let value = r1_tabulated(s)?;
    if value == 2 && Profile::of(s).is_some_and(|pr| pr.strictly_between_long_tail()) {
        return Ok(ExtendedNat::Finite(0));
    }
    Ok(value)
}

/// `r2` of a basic, tight, ordinary shape; `0` when `λ` is a rectangle or
/// `μ = ∅`.
pub fn r2(s: &SkewPartition) -> Result<usize> {
    require_tight_ordinary(s)?;
    let Some(pr) = Profile::of(s) else {
        return Ok(0);
    };
    let (Some((lam2, l2)), Some((mu1, k1)), Some(mu_q)) = (pr.lam2(), pr.mu_first(), pr.mu_last())
    else {
        return Ok(0);
    };
    let fires = (lam2 == mu_q && l2 >= pr.mu_len) || (lam2 == mu1 && k1 >= l2);
    Ok(usize::from(fires))
}

/// `ρ < n < ρ + r1 + r2` on a reduced shape; `∅/∅` is multiplicity-free.
pub fn classify_reduced(s: &SkewPartition, n: usize) -> Result<bool> {
    check_reduced(s, n)?;
    if s.is_empty() {
        return Ok(true);
    }
    let rho = s.rho();
    let upper = r1(s)? + r2(s)? + rho;
    Ok(rho < n && upper > n)
}

/// First of the cases I–XI that holds for a reduced shape, or `None` when
/// none does. `∅/∅` and `μ = ∅` both count as case I.
pub fn classify_cases(s: &SkewPartition, n: usize) -> Result<Option<Case>> {
    check_reduced(s, n)?;
    let Some(pr) = Profile::of(s) else {
        return Ok(Some(Case::I));
    };
    let rho = s.rho();
    let dual_rect = pr.dual_is_rectangle();
    if (dual_rect && pr.short_dual == 1) || pr.lam_dual.is_empty() || pr.mu.is_empty() {
        return Ok(Some(Case::I));
    }
    if dual_rect && pr.short_dual == 2 && pr.mu_is_fat_hook() {
        return Ok(Some(Case::II));
    }
    if dual_rect && pr.mu_is_fat_hook() && pr.short_mu == 1 {
        return Ok(Some(Case::III));
    }
    if dual_rect && pr.mu_is_rectangle() {
        return Ok(Some(Case::IV));
    }
    let (Some((lam2, l2)), Some((mu1, k1))) = (pr.lam2(), pr.mu_first()) else {
        return Ok(None);
    };
    let l1 = pr.lam[0].1;
    let next = n == rho + 1;
    let next_two = next || n == rho + 2;
    if dual_rect && pr.short_dual >= 3 && pr.mu_is_fat_hook() && pr.short_mu >= 2 {
        let mu2 = pr.mu[1].0;
        if lam2 == mu1 && l2 > k1 && next {
            return Ok(Some(Case::V));
        }
        if lam2 == mu1 && l2 <= k1 && next_two {
            return Ok(Some(Case::VI));
        }
        if mu1 > lam2 && lam2 > mu2 && k1 >= l2 && next {
            return Ok(Some(Case::VII));
        }
        if l2 >= l1 && mu2 == lam2 && next_two {
            return Ok(Some(Case::VIII));
        }
        if l1 > l2 && mu2 == lam2 && next {
            return Ok(Some(Case::IX));
        }
    }
    if dual_rect && pr.short_dual >= 2 && pr.mu.len() > 2 {
        let mu_q = pr.mu_last().expect("μ has more than two runs");
        if lam2 == mu_q && l2 >= l1 && next {
            return Ok(Some(Case::X));
        }
        if mu1 == lam2 && k1 >= l2 && next {
            return Ok(Some(Case::XI));
        }
    }
    Ok(None)
}

/// Whether the skew Schur function `s_{λ/μ}` in infinitely many variables
/// is multiplicity-free. The shape is brought to basic, ordinary form first.
pub fn classify_skew_function(s: &SkewPartition) -> bool {
    let basic = s.basic_demolition();
    let shape = basic
        .ordinary_reduction()
        .expect("basic demolition output is basic");
    let Some(pr) = Profile::of(&shape) else {
        return true;
    };
    let dual_rect = pr.dual_is_rectangle();
    (dual_rect && pr.short_dual == 1)
        || pr.lam_dual.is_empty()
        || pr.mu.is_empty()
        || (dual_rect && pr.short_dual == 2 && pr.mu_is_fat_hook())
        || (dual_rect && pr.mu_is_fat_hook() && pr.short_mu == 1)
        || (dual_rect && pr.mu_is_rectangle())
}

/// `m(λ/μ)`: the least `n` with `λ/μ` `n`-sharp and `s_{λ/μ}(x_1, …, x_n)`
/// not multiplicity-free, for a basic, tight, ordinary shape. Equals
/// `ρ + max(1, r1 + r2)`, infinite when `r1` is.
pub fn min_nonfree_vars(s: &SkewPartition) -> Result<ExtendedNat> {
    if s.is_empty() {
        return Ok(ExtendedNat::Infinity);
    }
    require_tight_ordinary(s)?;
    let slack = r1(s)? + r2(s)?;
    Ok(slack.max(ExtendedNat::Finite(1)) + s.rho())
}

/// Full answer for `s_{λ/μ}(x_1, …, x_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub shape: SkewPartition,
    pub n: usize,
    pub reduced_shape: SkewPartition,
    pub reduced_n: usize,
    pub rho: usize,
    pub r1: ExtendedNat,
    pub r2: usize,
    pub multiplicity_free: bool,
    pub case: Option<Case>,
    /// Two rendered ballot tableaux of equal content, when requested and the
    /// polynomial is not multiplicity-free.
    pub witness: Option<[String; 2]>,
}

impl ClassificationVerdict {
    /// Searches the original shape for two ballot tableaux of equal content.
    pub fn attach_witness(&mut self) {
        if self.multiplicity_free {
            return;
        }
        self.witness =
            multiplicity_witness(&self.shape, self.n).map(|(a, b)| [a.render(), b.render()]);
    }
}

/// Reduces `s` to its basic, `n'`-sharp, tight, ordinary form and applies the
/// closed-form test there.
pub fn classify(s: &SkewPartition, n: usize) -> Result<ClassificationVerdict> {
    let reduction = s.full_reduction(n);
    let reduced = reduction.shape;
    let vars = reduction.vars;
    let multiplicity_free = classify_reduced(&reduced, vars)?;
    let case = classify_cases(&reduced, vars)?;
    let (r1, r2) = if reduced.is_empty() {
        (ExtendedNat::Infinity, 0)
    } else {
        (r1(&reduced)?, r2(&reduced)?)
    };
    Ok(ClassificationVerdict {
        shape: s.clone(),
        n,
        rho: reduced.rho(),
        reduced_shape: reduced,
        reduced_n: vars,
        r1,
        r2,
        multiplicity_free,
        case,
        witness: None,
    })
}
