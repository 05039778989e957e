//! Skew partitions `λ/μ`, their column statistics, and the shape surgeries
//! that reduce the multiplicity question to a normal form.
//!
//! Rows and columns are 1-based in every public method, matching the usual
//! `(r, c)` box coordinates. Row `r` of `λ/μ` occupies columns
//! `μ_r + 1 ..= λ_r`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Partition, Rectangle};

/// A skew partition `outer/inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewPartition {
    outer: Partition,
    inner: Partition,
}

/// Output of [`SkewPartition::full_reduction`]: every intermediate shape of
/// the n-sharp → basic → tight → ordinary pipeline and the adjusted variable
/// count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub after_nsharp: SkewPartition,
    pub after_basic: SkewPartition,
    pub after_tight: SkewPartition,
    pub shape: SkewPartition,
    /// `n − τ` of the post-basic shape.
    pub vars: usize,
}

impl SkewPartition {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewPartition { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewPartition {
            outer,
            inner: Partition::empty(),
        }
    }

    /// The distinguished empty shape `∅/∅`.
    pub fn empty() -> Self {
        SkewPartition::default()
    }

    /// Builds `outer/inner` from row profiles known to be valid.
    fn from_rows(outer: Vec<usize>, inner: Vec<usize>) -> Self {
        let outer = Partition::from_decreasing(outer);
        let inner = Partition::from_decreasing(inner);
        debug_assert!(outer.contains(&inner));
        if outer.is_empty() {
            return SkewPartition::empty();
        }
        SkewPartition { outer, inner }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// True only for `∅/∅`.
    pub fn is_empty(&self) -> bool {
        self.outer.is_empty()
    }

    /// Number of boxes, `|λ| − |μ|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the ambient diagram, `ℓ(λ)`.
    pub fn num_rows(&self) -> usize {
        self.outer.length()
    }

    /// Number of columns of the ambient diagram, `λ_1`.
    pub fn num_cols(&self) -> usize {
        self.outer.first()
    }

    /// Boxes in row `r`.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.outer.part(r - 1) - self.inner.part(r - 1)
    }

    pub fn contains_box(&self, r: usize, c: usize) -> bool {
        r >= 1 && c > self.inner.part(r - 1) && c <= self.outer.part(r - 1)
    }

    /// Boxes as `(row, column)` pairs, row-major.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.num_rows()).flat_map(move |r| {
            (self.inner.part(r - 1) + 1..=self.outer.part(r - 1)).map(move |c| (r, c))
        })
    }

    /// `CS_k`: boxes in column `k`; zero outside `1..=λ_1`.
    pub fn column_size(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        // rows with μ_r < k ≤ λ_r form an interval
        let below_outer = self.outer.parts().iter().take_while(|&&p| p >= k).count();
        let below_inner = self.inner.parts().iter().take_while(|&&p| p >= k).count();
        below_outer - below_inner
    }

    /// `[CS_1, …, CS_{λ_1}]`.
    pub fn column_sizes(&self) -> Vec<usize> {
        let outer_t = self.outer.conjugate();
        let inner_t = self.inner.conjugate();
        (0..self.num_cols())
            .map(|i| outer_t.part(i) - inner_t.part(i))
            .collect()
    }

    /// `ρ`, the largest column size.
    pub fn rho(&self) -> usize {
        self.column_sizes().into_iter().max().unwrap_or(0)
    }

    /// `U(c)`, the topmost occupied row of column `c`.
    pub fn col_top(&self, c: usize) -> Result<usize> {
        if self.column_size(c) == 0 {
            return Err(Error::EmptyColumn(c));
        }
        Ok(self.inner.parts().iter().take_while(|&&p| p >= c).count() + 1)
    }

    /// `L(c)`, the bottommost occupied row of column `c`.
    pub fn col_bottom(&self, c: usize) -> Result<usize> {
        if self.column_size(c) == 0 {
            return Err(Error::EmptyColumn(c));
        }
        Ok(self.outer.parts().iter().take_while(|&&p| p >= c).count())
    }

    /// `τ = l_1 − min(l_1, ℓ(μ))`; zero when `μ = ∅` or `λ` is a rectangle.
    pub fn tau(&self) -> usize {
        if self.inner.is_empty() || self.outer.num_parts() <= 1 {
            return 0;
        }
        let l1 = self.outer.runs()[0].1;
        l1 - l1.min(self.inner.length())
    }

    /// `σ = λ_p − min(μ_1, λ_p)`; zero when `μ = ∅` or `λ` is a rectangle.
    pub fn sigma(&self) -> usize {
        if self.inner.is_empty() || self.outer.num_parts() <= 1 {
            return 0;
        }
        let last = self.outer.last();
        last - self.inner.first().min(last)
    }

    /// No empty rows and no empty columns.
    pub fn is_basic(&self) -> bool {
        (1..=self.num_rows()).all(|r| self.row_len(r) > 0)
            && self.column_sizes().iter().all(|&s| s > 0)
    }

    /// Every column holds fewer than `n` boxes.
    pub fn is_nsharp(&self, n: usize) -> bool {
        self.column_sizes().iter().all(|&s| s < n)
    }

    /// Basic with `τ = σ = 0`.
    pub fn is_tight(&self) -> bool {
        self.is_basic() && self.tau() == 0 && self.sigma() == 0
    }

    /// Basic with `np(λ) − 1 ≤ np(μ)` or `μ = ∅`.
    pub fn is_ordinary(&self) -> bool {
        self.is_basic()
            && (self.inner.is_empty() || self.outer.num_parts() <= self.inner.num_parts() + 1)
    }

    /// The rectangle `(λ_1^{ℓ(λ)})` every shortness test is measured in.
    /// `None` for `∅/∅`.
    pub fn ambient(&self) -> Option<Rectangle> {
        Rectangle::new(self.num_cols(), self.num_rows()).ok()
    }

    /// Deletes the given columns (1-based) and closes the gaps. Each kept
    /// column keeps its set of rows, so the result is always a skew shape.
    pub fn remove_columns(&self, cols: &[usize]) -> Result<SkewPartition> {
        let width = self.num_cols();
        let mut removed = vec![false; width + 1];
        for &c in cols {
            if c == 0 || c > width {
                return Err(Error::InvalidColumn { column: c, width });
            }
            removed[c] = true;
        }
        Ok(self.keep_columns(|c| !removed[c]))
    }

    fn keep_columns(&self, keep: impl Fn(usize) -> bool) -> SkewPartition {
        // kept[c] = number of kept columns among 1..=c
        let mut kept = vec![0usize; self.num_cols() + 1];
        for c in 1..=self.num_cols() {
            kept[c] = kept[c - 1] + usize::from(keep(c));
        }
        let outer = self.outer.parts().iter().map(|&p| kept[p]).collect();
        let inner = self.inner.parts().iter().map(|&p| kept[p]).collect();
        SkewPartition::from_rows(outer, inner)
    }

    /// Deletes rows (1-based) for which `drop` is true. Only sound when the
    /// dropped rows are empty or form a suffix.
    fn drop_rows(&self, drop: impl Fn(usize) -> bool) -> SkewPartition {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        for r in 1..=self.num_rows() {
            if !drop(r) {
                outer.push(self.outer.part(r - 1));
                inner.push(self.inner.part(r - 1));
            }
        }
        SkewPartition::from_rows(outer, inner)
    }

    /// Removes every empty row and empty column. The result is basic, or
    /// `∅/∅` when there are no boxes.
    pub fn basic_demolition(&self) -> SkewPartition {
        let rows_dropped = self.drop_rows(|r| self.row_len(r) == 0);
        let sizes = rows_dropped.column_sizes();
        rows_dropped.keep_columns(|c| sizes[c - 1] > 0)
    }

    /// `∅/∅` if some column exceeds `n` boxes; otherwise the shape left after
    /// deleting every column of exactly `n` boxes.
    pub fn nsharp_demolition(&self, n: usize) -> SkewPartition {
        let sizes = self.column_sizes();
        if sizes.iter().any(|&s| s > n) {
            return SkewPartition::empty();
        }
        self.keep_columns(|c| sizes[c - 1] != n)
    }

    /// Number of columns of exactly `n` boxes.
    pub fn full_columns(&self, n: usize) -> usize {
        self.column_sizes().iter().filter(|&&s| s == n).count()
    }

    fn require_basic(&self) -> Result<()> {
        if self.is_basic() {
            Ok(())
        } else {
            Err(Error::NotBasic(self.to_string()))
        }
    }

    /// Shrinks the first run of `λ` by `τ`, lowers every part by `σ`, then
    /// applies the basic demolition.
    pub fn tight_demolition(&self) -> Result<SkewPartition> {
        self.require_basic()?;
        let (tau, sigma) = (self.tau(), self.sigma());
        if tau == 0 && sigma == 0 {
            return Ok(self.basic_demolition());
        }
        let mut parts = Vec::with_capacity(self.num_rows());
        for (i, (value, mult)) in self.outer.runs().into_iter().enumerate() {
            let mult = if i == 0 { mult - tau } else { mult };
            parts.extend(std::iter::repeat_n(value - sigma, mult));
        }
        let outer = Partition::from_decreasing(parts);
        let shape = SkewPartition::new(outer, self.inner.clone())
            .map_err(|e| Error::Invariant(format!("tight demolition of {self}: {e}")))?;
        Ok(shape.basic_demolition())
    }

    /// Identity on ordinary shapes; otherwise the 180° rotation
    /// `μ^∨ / λ^∨` inside `(λ_1^{ℓ(λ)})`.
    pub fn ordinary_reduction(&self) -> Result<SkewPartition> {
        self.require_basic()?;
        if self.is_ordinary() {
            return Ok(self.clone());
        }
        self.rotate()
    }

    /// `μ^∨ / λ^∨` inside `(λ_1^{ℓ(λ)})`, regardless of ordinarity.
    pub fn rotate(&self) -> Result<SkewPartition> {
        let Some(rect) = self.ambient() else {
            return Ok(SkewPartition::empty());
        };
        SkewPartition::new(self.inner.complement(rect)?, self.outer.complement(rect)?)
    }

    /// Runs the n-sharp, basic, tight and ordinary demolitions in that order.
    /// The variable count drops by `τ` of the post-basic shape.
    pub fn full_reduction(&self, n: usize) -> Reduction {
        let after_nsharp = self.nsharp_demolition(n);
        let after_basic = after_nsharp.basic_demolition();
        let tau = after_basic.tau();
        let after_tight = after_basic
            .tight_demolition()
            .expect("basic demolition output is basic");
        let shape = after_tight
            .ordinary_reduction()
            .expect("tight demolition output is basic");
        Reduction {
            after_nsharp,
            after_basic,
            after_tight,
            shape,
            vars: n - tau,
        }
    }

    /// `(λ/μ)^{(−k)}`: drops the top `k` boxes of every column, then applies
    /// the basic demolition.
    pub fn top_strip(&self, k: usize) -> Result<SkewPartition> {
        self.require_basic()?;
        if let Some((i, &size)) = self
            .column_sizes()
            .iter()
            .enumerate()
            .find(|&(_, &s)| s < k)
        {
            return Err(Error::StripTooDeep {
                depth: k,
                column: i + 1,
                size,
            });
        }
        let inner_t = self.inner.conjugate();
        let lowered: Vec<usize> = (0..self.num_cols()).map(|i| inner_t.part(i) + k).collect();
        let inner = Partition::from_decreasing(lowered).conjugate();
        let shape = SkewPartition::new(self.outer.clone(), inner)
            .map_err(|e| Error::Invariant(format!("top strip of {self}: {e}")))?;
        Ok(shape.basic_demolition())
    }

    /// Drops the bottom `n_rows` rows of the ambient diagram.
    pub fn del_rows(&self, n_rows: usize) -> Result<SkewPartition> {
        let available = self.num_rows();
        if n_rows > available {
            return Err(Error::TooManyRows {
                requested: n_rows,
                available,
            });
        }
        let keep = available - n_rows;
        Ok(self.drop_rows(|r| r > keep))
    }

    /// Reverses the left-to-right order of columns `μ_q + 1 ..= λ_1`,
    /// producing `λ̃/μ̃` with `μ̃ = (μ_q^{l_1})`. Requires a basic shape with
    /// `np(λ), np(μ) ≥ 2`, `λ_2 = μ_q` and `ℓ(μ) = l_1`.
    pub fn column_reversal(&self) -> Result<SkewPartition> {
        let lam = self.outer.runs();
        let mu = self.inner.runs();
        let mut failed = Vec::new();
        if !self.is_basic() {
            failed.push("shape is not basic".to_string());
        }
        if lam.len() < 2 {
            failed.push(format!("np(λ) = {} < 2", lam.len()));
        }
        if mu.len() < 2 {
            failed.push(format!("np(μ) = {} < 2", mu.len()));
        }
        if lam.len() >= 2 && !mu.is_empty() && lam[1].0 != mu[mu.len() - 1].0 {
            failed.push(format!(
                "λ_2 = {} differs from μ_q = {}",
                lam[1].0,
                mu[mu.len() - 1].0
            ));
        }
        if !lam.is_empty() && self.inner.length() != lam[0].1 {
            failed.push(format!(
                "ℓ(μ) = {} differs from l_1 = {}",
                self.inner.length(),
                lam[0].1
            ));
        }
        if !failed.is_empty() {
            return Err(Error::PreconditionFailed(failed.join("; ")));
        }
        let lambda1 = lam[0].0;
        let mu_q = mu[mu.len() - 1].0;
        let mut parts = Vec::with_capacity(self.num_rows());
        for &(value, mult) in mu.iter().rev() {
            parts.extend(std::iter::repeat_n(lambda1 + mu_q - value, mult));
        }
        for &(value, mult) in &lam[1..] {
            parts.extend(std::iter::repeat_n(value, mult));
        }
        let outer = Partition::new(parts)?;
        let inner = Partition::from_decreasing(vec![mu_q; lam[0].1]);
        SkewPartition::new(outer, inner)
    }

    /// Whether some `b`-row by `k`-column block of boxes lies in the shape.
    pub fn contains_rectangle(&self, b: usize, k: usize) -> bool {
        if b == 0 || k == 0 {
            return true;
        }
        // the top row of the block bounds μ, the bottom row bounds λ
        (0..self.num_rows())
            .filter(|&r| r + b <= self.num_rows())
            .any(|r| self.inner.part(r) + k <= self.outer.part(r + b - 1))
    }

    /// Transpose of the diagram.
    pub fn conjugate(&self) -> SkewPartition {
        SkewPartition {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl fmt::Display for SkewPartition {
    /// `outer/inner`, with `∅/∅` for the empty shape.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅/∅");
        }
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl Serialize for SkewPartition {
    /// Serialized as its text form.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for SkewPartition {
    type Err = Error;

    /// Accepts `5,4,1,1/2,1,1`, `5,4/` or bare `5,4` for `μ = ∅`, and `∅/∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        if inner.contains('/') {
            return Err(Error::Parse(format!("more than one `/` in `{s}`")));
        }
        let outer: Partition = outer.parse()?;
        let inner: Partition = inner.parse()?;
        SkewPartition::new(outer, inner)
    }
}
