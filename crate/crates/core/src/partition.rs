//! Integer partitions and the arithmetic the classification needs on them:
//! containment, union, rectangle addition, complements inside a box and the
//! shortness of the separating lattice path.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive parts.
//! The empty partition is the empty list. The run-length form
//! `(λ_1^{l_1}, …, λ_p^{l_p})` is derived on demand by [`Partition::runs`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is plain lexicographic on the part sequence, with a proper prefix
/// sorting first. Every "least partition" tie-break in the crate uses it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<usize>);

/// The `width × height` box used for complements and shortness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rectangle {
    width: usize,
    height: usize,
}

/// Direction of a lattice-path step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    North,
    East,
}

impl Rectangle {
    pub fn new(width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::EmptyRectangle { width, height });
        }
        if width.checked_mul(height).is_none() {
            return Err(Error::TooLarge);
        }
        Ok(Rectangle { width, height })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }

    /// The full rectangle `(width^height)` as a partition.
    pub fn as_partition(&self) -> Partition {
        Partition(vec![self.width; self.height])
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        if parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .is_none()
        {
            return Err(Error::TooLarge);
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn sorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Callers guarantee the parts are weakly decreasing; zeros are trimmed.
    pub(crate) fn from_decreasing(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `λ_1`, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// The smallest part, or 0 for the empty partition.
    pub fn last(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `np(λ)`, the number of distinct part values.
    pub fn num_parts(&self) -> usize {
        self.runs().len()
    }

    /// Run-length view `[(λ_1, l_1), …, (λ_p, l_p)]`.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn is_rectangle(&self) -> bool {
        self.num_parts() == 1
    }

    pub fn is_fat_hook(&self) -> bool {
        self.num_parts() == 2
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in(&self, rect: Rectangle) -> bool {
        self.length() <= rect.height && self.first() <= rect.width
    }

    /// Multiset union of the parts, `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.length() + other.length());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Partition::sorted(parts)
    }

    /// `λ + (c^d)`: add `c` to each of the first `d` parts, reading missing
    /// parts as zero. Adding a constant to a prefix keeps the sequence weakly
    /// decreasing, so this cannot fail.
    pub fn add_rectangle(&self, c: usize, d: usize) -> Partition {
        if c == 0 {
            return self.clone();
        }
        let len = self.length().max(d);
        let parts = (0..len)
            .map(|i| self.part(i) + if i < d { c } else { 0 })
            .collect();
        Partition::from_decreasing(parts)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|k| self.0.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition(parts)
    }

    fn check_in(&self, rect: Rectangle) -> Result<()> {
        if self.fits_in(rect) {
            Ok(())
        } else {
            Err(Error::NotInRectangle {
                partition: self.clone(),
                rect,
            })
        }
    }

    /// Complement inside `rect`, rotated by 180 degrees:
    /// `(a − λ_b, a − λ_{b−1}, …, a − λ_1)` with trailing zeros removed.
    pub fn complement(&self, rect: Rectangle) -> Result<Partition> {
        self.check_in(rect)?;
        let parts = (0..rect.height)
            .map(|i| rect.width - self.part(rect.height - 1 - i))
            .collect();
        Ok(Partition::from_decreasing(parts))
    }

    /// Maximal straight segments of the lattice path from the south-west to
    /// the north-east corner of `rect` that separates the diagram from its
    /// complement.
    pub fn lattice_path(&self, rect: Rectangle) -> Result<Vec<(Step, usize)>> {
        self.check_in(rect)?;
        let mut segments: Vec<(Step, usize)> = Vec::new();
        let mut push = |step: Step, len: usize| {
            if len == 0 {
                return;
            }
            match segments.last_mut() {
                Some((s, l)) if *s == step => *l += len,
                _ => segments.push((step, len)),
            }
        };
        for row in (0..rect.height).rev() {
            push(Step::East, self.part(row) - self.part(row + 1));
            push(Step::North, 1);
        }
        push(Step::East, rect.width - self.first());
        Ok(segments)
    }

    /// Length of the shortest segment of [`Partition::lattice_path`].
    pub fn shortness(&self, rect: Rectangle) -> Result<usize> {
        let path = self.lattice_path(rect)?;
        Ok(path
            .iter()
            .map(|&(_, l)| l)
            .min()
            .expect("a path in a nonempty box has a step"))
    }

    /// Comma-separated text form, e.g. `(2,1)`; `()` for the empty partition.
    pub fn bracketed(&self) -> String {
        format!("({self})")
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `5,4,1,1`. The empty string and `∅` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let part: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a positive integer")))?;
            if part == 0 {
                return Err(Error::Parse("parts must be positive".into()));
            }
            parts.push(part);
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Every partition fitting in `width × height`, in graded lexicographic
/// order: by size, then lexicographically.
pub fn partitions_in_box(width: usize, height: usize) -> Vec<Partition> {
    fn rec(max: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if rows == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(p, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(width, height, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

/// Every partition of `n`, in lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = partitions_in_box(n, n)
        .into_iter()
        .filter(|p| p.size() == n)
        .collect();
    out.sort();
    out
}

/// Every partition contained in `outer`, in graded lexicographic order.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    partitions_in_box(outer.first(), outer.length())
        .into_iter()
        .filter(|p| outer.contains(p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn rect(w: usize, h: usize) -> Rectangle {
        Rectangle::new(w, h).unwrap()
    }

    #[test]
    fn length_and_num_parts() {
        assert_eq!(p("5,4,1,1").length(), 4);
        assert_eq!(p("").length(), 0);
        assert_eq!(p("2,2,2").length(), 3);
        assert_eq!(p("6,6,6,2,2,1").num_parts(), 3);
        assert_eq!(p("").num_parts(), 0);
        assert_eq!(p("4,4").num_parts(), 1);
        assert_eq!(p("6,6,6,2,2,1").runs(), vec![(6, 3), (2, 2), (1, 1)]);
    }

    #[test]
    fn containment() {
        assert!(p("5,4,1,1").contains(&p("2,1,1")));
        assert!(p("3,1").contains(&p("")));
        assert!(!p("2,2").contains(&p("3")));
        assert!(!p("2").contains(&p("1,1")));
    }

    #[test]
    fn union_and_add_rectangle() {
        assert_eq!(p("2,1").union(&p("3,1")), p("3,2,1,1"));
        assert_eq!(p("2,1").union(&p("")), p("2,1"));
        assert_eq!(p("2,2").union(&p("2")), p("2,2,2"));
        assert_eq!(p("3,1").add_rectangle(2, 2), p("5,3"));
        assert_eq!(p("").add_rectangle(1, 3), p("1,1,1"));
        assert_eq!(p("2,1").add_rectangle(0, 5), p("2,1"));
        assert_eq!(p("3,2,1").add_rectangle(1, 1), p("4,2,1"));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(p("5,4,1,1").complement(rect(5, 4)).unwrap(), p("4,4,1"));
        assert_eq!(p("").complement(rect(2, 2)).unwrap(), p("2,2"));
        assert_eq!(p("2,2").complement(rect(2, 2)).unwrap(), p(""));
        assert!(matches!(
            p("3").complement(rect(2, 2)),
            Err(Error::NotInRectangle { .. })
        ));
        assert!(p("1,1,1").complement(rect(2, 2)).is_err());
    }

    #[test]
    fn shortness_examples() {
        assert_eq!(p("5,4,1,1").shortness(rect(5, 4)).unwrap(), 1);
        assert_eq!(p("1").shortness(rect(2, 2)).unwrap(), 1);
        assert_eq!(p("2,2").shortness(rect(4, 4)).unwrap(), 2);
        assert_eq!(p("").shortness(rect(3, 5)).unwrap(), 3);
        assert_eq!(p("3,3").shortness(rect(3, 2)).unwrap(), 2);
        assert!(p("4").shortness(rect(3, 3)).is_err());
    }

    #[test]
    fn lattice_path_segments() {
        use Step::*;
        assert_eq!(
            p("5,4,1,1").lattice_path(rect(5, 4)).unwrap(),
            vec![
                (East, 1),
                (North, 2),
                (East, 3),
                (North, 1),
                (East, 1),
                (North, 1)
            ]
        );
        assert_eq!(
            p("2,2").lattice_path(rect(4, 4)).unwrap(),
            vec![(North, 2), (East, 2), (North, 2), (East, 2)]
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
    }

    #[test]
    fn shape_predicates() {
        assert!(p("4,4").is_rectangle());
        assert!(p("4,4,1").is_fat_hook());
        assert!(!p("").is_rectangle());
        assert!(!p("").is_fat_hook());
        assert!(!p("3,2,1").is_fat_hook());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(p(" 5, 4,1 ,1").to_string(), "5,4,1,1");
        assert_eq!(p("∅"), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "");
        assert_eq!(p("2,1").bracketed(), "(2,1)");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("2,,1".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p("3,1"));
        assert!(Partition::new(vec![1, 0, 1]).is_err());
        let huge = format!("{0},{0}", usize::MAX);
        assert_eq!(huge.parse::<Partition>(), Err(Error::TooLarge));
        assert_eq!(Rectangle::new(usize::MAX, 2), Err(Error::TooLarge));
    }

    #[test]
    fn rectangle_must_be_nonempty() {
        assert!(Rectangle::new(0, 3).is_err());
        assert!(Rectangle::new(3, 0).is_err());
        assert_eq!(rect(3, 2).as_partition(), p("3,3"));
    }

    #[test]
    fn box_enumeration() {
        // C(4,2) = 6 partitions in a 2x2 box
        let all = partitions_in_box(2, 2);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], p(""));
        assert_eq!(all.last().unwrap(), &p("2,2"));
        assert_eq!(partitions_in_box(6, 6).len(), 924);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(subpartitions(&p("2,1")).len(), 5);
    }
}
