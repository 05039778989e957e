//! Fillings of skew shapes, reading words, and the backtracking enumerators
//! for semistandard and ballot tableaux.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::skew::SkewPartition;

/// A finite word in the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Parse("word letters must be positive".into()));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every prefix has at least as many `i`s as `i+1`s.
    pub fn is_ballot(&self) -> bool {
        is_ballot(&self.0)
    }

    /// Appends `x+1, …, x+k` where `x` is the last letter.
    pub fn extend_ascending(&self, k: usize) -> Word {
        let mut letters = self.0.clone();
        if let Some(&last) = self.0.last() {
            letters.extend((1..=k).map(|i| last + i));
        }
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", text.join(","))
    }
}

/// Ballot test on raw letters. Zero letters make the word non-ballot.
pub fn is_ballot(letters: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &a in letters {
        if a == 0 {
            return false;
        }
        if counts.len() <= a {
            counts.resize(a + 1, 0);
        }
        counts[a] += 1;
        if a > 1 && counts[a] > counts[a - 1] {
            return false;
        }
    }
    true
}

/// A filling of a skew shape. `rows[r]` holds row `r + 1` left to right,
/// one entry per box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewPartition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(shape: SkewPartition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::MalformedTableau(format!(
                "{} rows given for a shape with {}",
                rows.len(),
                shape.num_rows()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i + 1) {
                return Err(Error::MalformedTableau(format!(
                    "row {} has {} entries, shape needs {}",
                    i + 1,
                    row.len(),
                    shape.row_len(i + 1)
                )));
            }
            if row.contains(&0) {
                return Err(Error::MalformedTableau(format!(
                    "row {} has a zero entry",
                    i + 1
                )));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// The unique filling of `∅/∅`.
    pub fn empty() -> Self {
        Tableau {
            shape: SkewPartition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `T(r, c)` for a box of the shape, 1-based.
    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        if !self.shape.contains_box(r, c) {
            return None;
        }
        Some(self.rows[r - 1][c - 1 - self.shape.inner().part(r - 1)])
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        rows_ok
            && self.shape.boxes().all(|(r, c)| match self.entry(r + 1, c) {
                Some(below) => self.entry(r, c).is_some_and(|v| v < below),
                None => true,
            })
    }

    /// `η(T)`: occurrences of each letter, trailing zeros trimmed.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        counts
    }

    /// Rows top to bottom, each read right to left.
    pub fn reverse_reading_word(&self) -> Word {
        Word(
            self.rows
                .iter()
                .flat_map(|row| row.iter().rev().copied())
                .collect(),
        )
    }

    /// Columns right to left, each read top to bottom.
    pub fn column_reading_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.shape.size());
        for c in (1..=self.shape.num_cols()).rev() {
            for r in 1..=self.shape.num_rows() {
                if let Some(v) = self.entry(r, c) {
                    letters.push(v);
                }
            }
        }
        Word(letters)
    }

    /// Semistandard with a ballot reverse reading word.
    pub fn is_ballot(&self) -> bool {
        self.is_semistandard() && self.reverse_reading_word().is_ballot()
    }

    /// `T^{del(N)}`: drops the bottom `n_rows` rows of shape and filling.
    pub fn delete_rows(&self, n_rows: usize) -> Result<Tableau> {
        let shape = self.shape.del_rows(n_rows)?;
        let rows = self.rows[..shape.num_rows()].to_vec();
        Tableau::new(shape, rows)
    }

    /// Index of the last row holding at least one box, 1-based.
    pub fn bottom_row(&self) -> Option<usize> {
        self.rows
            .iter()
            .rposition(|row| !row.is_empty())
            .map(|i| i + 1)
    }

    /// One line per row, entries separated by spaces, cells of the inner
    /// shape shown as `.`.
    pub fn render(&self) -> String {
        let mut lines = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> =
                std::iter::repeat_n(".".to_string(), self.shape.inner().part(i))
                    .chain(row.iter().map(ToString::to_string))
                    .collect();
            lines.push(cells.join(" "));
        }
        lines.join("\n")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    /// Row-major, left to right; entries bounded by `max_entry`.
    Semistandard,
    /// Reverse reading order; letters capped per value, ballot prefixes.
    Ballot,
}

/// Backtracking state shared by both enumerators. Cells are visited in a
/// fixed fill order and solutions come out lexicographically in that order.
#[derive(Clone, Debug)]
struct Search {
    shape: SkewPartition,
    mode: Mode,
    /// `(row, col)` per fill position.
    cells: Vec<(usize, usize)>,
    /// Fill position of the box directly above, if it is in the shape.
    above: Vec<Option<usize>>,
    /// Fill position of the row neighbour filled earlier: left for
    /// semistandard, right for ballot.
    beside: Vec<Option<usize>>,
    /// Largest letter any cell may take, after column-depth slack.
    ceiling: Vec<usize>,
    /// Per-letter budget, index 0 unused.
    cap: Vec<usize>,
    counts: Vec<usize>,
    values: Vec<usize>,
    pos: usize,
    started: bool,
    done: bool,
}

impl Search {
    fn new(shape: &SkewPartition, mode: Mode, cap: Vec<usize>) -> Search {
        let max_letter = cap.len().saturating_sub(1);
        let mut cells = Vec::with_capacity(shape.size());
        for r in 1..=shape.num_rows() {
            let cols = shape.inner().part(r - 1) + 1..=shape.outer().part(r - 1);
            match mode {
                Mode::Semistandard => cells.extend(cols.map(|c| (r, c))),
                Mode::Ballot => cells.extend(cols.rev().map(|c| (r, c))),
            }
        }
        let index_of =
            |r: usize, c: usize| -> Option<usize> { cells.iter().position(|&cell| cell == (r, c)) };
        let above = cells
            .iter()
            .map(|&(r, c)| if r > 1 { index_of(r - 1, c) } else { None })
            .collect();
        let beside = cells
            .iter()
            .map(|&(r, c)| match mode {
                Mode::Semistandard if c > 1 => index_of(r, c - 1),
                Mode::Semistandard => None,
                Mode::Ballot => index_of(r, c + 1),
            })
            .collect();
        // a cell with d boxes below it in its column needs room for d larger letters
        let ceiling = cells
            .iter()
            .map(|&(r, c)| {
                let below = shape.col_bottom(c).map_or(0, |bottom| bottom - r);
                max_letter.saturating_sub(below)
            })
            .collect();
        let n = cells.len();
        Search {
            shape: shape.clone(),
            mode,
            cells,
            above,
            beside,
            ceiling,
            counts: vec![0; cap.len().max(1)],
            cap,
            values: vec![0; n],
            pos: 0,
            started: false,
            done: false,
        }
    }

    fn candidate_ok(&self, v: usize) -> bool {
        if self.counts[v] >= self.cap[v] {
            return false;
        }
        self.mode == Mode::Semistandard || v == 1 || self.counts[v] < self.counts[v - 1]
    }

    fn bounds(&self, pos: usize) -> (usize, usize) {
        let mut lo = 1;
        let mut hi = self.ceiling[pos];
        if let Some(a) = self.above[pos] {
            lo = lo.max(self.values[a] + 1);
        }
        if let Some(b) = self.beside[pos] {
            match self.mode {
                Mode::Semistandard => lo = lo.max(self.values[b]),
                Mode::Ballot => hi = hi.min(self.values[b]),
            }
        }
        (lo, hi)
    }

    /// Moves to the next complete filling; false once exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            if self.cells.is_empty() {
                self.done = true;
                return true;
            }
        } else {
            self.pos = self.cells.len() - 1;
        }
        loop {
            let pos = self.pos;
            let current = self.values[pos];
            if current > 0 {
                self.counts[current] -= 1;
            }
            let (lo, hi) = self.bounds(pos);
            let next = (lo.max(current + 1)..=hi).find(|&v| self.candidate_ok(v));
            match next {
                Some(v) => {
                    self.values[pos] = v;
                    self.counts[v] += 1;
                    if pos + 1 == self.cells.len() {
                        return true;
                    }
                    self.pos += 1;
                    self.values[self.pos] = 0;
                }
                None => {
                    self.values[pos] = 0;
                    if pos == 0 {
                        self.done = true;
                        return false;
                    }
                    self.pos -= 1;
                }
            }
        }
    }

    /// Letter counts of the current filling, trailing zeros trimmed.
    fn content(&self) -> Vec<usize> {
        let mut content = self.counts[1..].to_vec();
        while content.last() == Some(&0) {
            content.pop();
        }
        content
    }

    fn tableau(&self) -> Tableau {
        let mut rows: Vec<Vec<usize>> = (1..=self.shape.num_rows())
            .map(|r| vec![0; self.shape.row_len(r)])
            .collect();
        for (&(r, c), &v) in self.cells.iter().zip(&self.values) {
            rows[r - 1][c - 1 - self.shape.inner().part(r - 1)] = v;
        }
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

/// Lazy stream of tableaux from a backtracking search.
#[derive(Clone, Debug)]
pub struct Tableaux {
    search: Search,
}

impl Tableaux {
    /// Advances without materializing a [`Tableau`] and returns the content
    /// of the next filling.
    pub fn next_content(&mut self) -> Option<Vec<usize>> {
        self.search.advance().then(|| self.search.content())
    }
}

impl Iterator for Tableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        self.search.advance().then(|| self.search.tableau())
    }
}

/// Every semistandard tableau of `shape` with entries in `1..=max_entry`,
/// row-major lexicographic.
pub fn semistandard_tableaux(shape: &SkewPartition, max_entry: usize) -> Tableaux {
    let cap = vec![usize::MAX; max_entry + 1];
    Tableaux {
        search: Search::new(shape, Mode::Semistandard, cap),
    }
}

/// Every ballot tableau of `shape` with content `nu`, lexicographic in
/// reverse reading order.
pub fn ballot_tableaux(shape: &SkewPartition, nu: &Partition) -> Tableaux {
    let mut cap = vec![0];
    cap.extend_from_slice(nu.parts());
    let mut search = Search::new(shape, Mode::Ballot, cap);
    search.done = nu.size() != shape.size();
    Tableaux { search }
}

/// Every ballot tableau of `shape` whose letters lie in `1..=max_letter`,
/// whatever the content.
pub fn ballot_tableaux_bounded(shape: &SkewPartition, max_letter: usize) -> Tableaux {
    let cap = vec![usize::MAX; max_letter + 1];
    Tableaux {
        search: Search::new(shape, Mode::Ballot, cap),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> SkewPartition {
        text.parse().unwrap()
    }

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn t(shape: &str, rows: &[&[usize]]) -> Tableau {
        Tableau::new(s(shape), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn content_counts_letters() {
        assert_eq!(t("2,1", &[&[1, 1], &[2]]).content(), vec![2, 1]);
        assert_eq!(Tableau::empty().content(), Vec::<usize>::new());
        assert_eq!(t("3,2,1/2,1", &[&[1], &[1], &[2]]).content(), vec![2, 1]);
        assert_eq!(t("1", &[&[3]]).content(), vec![0, 0, 1]);
    }

    #[test]
    fn reading_words() {
        let tab = t("2,1", &[&[1, 2], &[2]]);
        assert_eq!(tab.reverse_reading_word().letters(), &[2, 1, 2]);
        assert_eq!(tab.column_reading_word().letters(), &[2, 1, 2]);
        assert_eq!(t("1", &[&[5]]).reverse_reading_word().letters(), &[5]);
        assert_eq!(
            t("1,1,1", &[&[1], &[2], &[3]])
                .column_reading_word()
                .letters(),
            &[1, 2, 3]
        );
        assert_eq!(
            t("3,2,1/2,1", &[&[2], &[1], &[1]])
                .reverse_reading_word()
                .letters(),
            &[2, 1, 1]
        );
        assert_eq!(
            t("3,2,1/2,1", &[&[1], &[1], &[2]])
                .column_reading_word()
                .letters(),
            &[1, 1, 2]
        );
    }

    #[test]
    fn ballot_words() {
        assert!(is_ballot(&[1, 2, 1, 2]));
        assert!(!is_ballot(&[2, 1]));
        assert!(!is_ballot(&[1, 1, 2, 2, 2]));
        assert!(is_ballot(&[]));
        assert!(!is_ballot(&[0]));
        assert_eq!(
            Word::new(vec![1, 2]).unwrap().extend_ascending(2).letters(),
            &[1, 2, 3, 4]
        );
        assert!(Word::new(vec![1, 0]).is_err());
    }

    #[test]
    fn malformed_fillings_are_rejected() {
        assert!(Tableau::new(s("2,1"), vec![vec![1], vec![2]]).is_err());
        assert!(Tableau::new(s("2,1"), vec![vec![1, 1]]).is_err());
        assert!(Tableau::new(s("1"), vec![vec![0]]).is_err());
    }

    #[test]
    fn semistandard_check() {
        assert!(t("2,1", &[&[1, 1], &[2]]).is_semistandard());
        assert!(!t("2,1", &[&[1, 1], &[1]]).is_semistandard());
        assert!(!t("2,1", &[&[2, 1], &[3]]).is_semistandard());
        assert!(t("3,2,1/2,1", &[&[1], &[1], &[1]]).is_semistandard());
    }

    #[test]
    fn ssyt_of_21_in_two_letters() {
        let all: Vec<Tableau> = semistandard_tableaux(&s("2,1"), 2).collect();
        assert_eq!(
            all,
            vec![t("2,1", &[&[1, 1], &[2]]), t("2,1", &[&[1, 2], &[2]])]
        );
    }

    #[test]
    fn ssyt_edge_cases() {
        assert_eq!(semistandard_tableaux(&SkewPartition::empty(), 3).count(), 1);
        assert_eq!(semistandard_tableaux(&SkewPartition::empty(), 0).count(), 1);
        assert_eq!(semistandard_tableaux(&s("1,1,1"), 2).count(), 0);
        assert_eq!(semistandard_tableaux(&s("1"), 0).count(), 0);
        // s_(2,1)(x1,x2,x3) has 8 monomials
        assert_eq!(semistandard_tableaux(&s("2,1"), 3).count(), 8);
    }

    #[test]
    fn ballot_examples() {
        let all: Vec<Tableau> = ballot_tableaux(&s("3,2,1/2,1"), &p("2,1")).collect();
        assert_eq!(
            all,
            vec![
                t("3,2,1/2,1", &[&[1], &[1], &[2]]),
                t("3,2,1/2,1", &[&[1], &[2], &[1]])
            ]
        );
        let lam = p("4,2,2,1");
        let only: Vec<Tableau> =
            ballot_tableaux(&SkewPartition::straight(lam.clone()), &lam).collect();
        assert_eq!(
            only,
            vec![t("4,2,2,1", &[&[1, 1, 1, 1], &[2, 2], &[3, 3], &[4]])]
        );
        // [[1,3],[2]] reads 3,1,2 and [[1,2],[3]] reads 2,1,3: neither is ballot
        assert_eq!(ballot_tableaux(&s("2,1"), &p("1,1,1")).count(), 0);
        assert_eq!(ballot_tableaux(&s("2,1"), &p("2")).count(), 0);
        assert_eq!(
            ballot_tableaux(&SkewPartition::empty(), &Partition::empty()).count(),
            1
        );
        assert_eq!(ballot_tableaux(&SkewPartition::empty(), &p("1")).count(), 0);
    }

    #[test]
    fn bounded_ballot_groups_by_content() {
        let mut contents: Vec<Vec<usize>> = Vec::new();
        let mut stream = ballot_tableaux_bounded(&s("3,2,1/2,1"), 2);
        while let Some(c) = stream.next_content() {
            contents.push(c);
        }
        contents.sort();
        assert_eq!(contents, vec![vec![2, 1], vec![2, 1], vec![3]]);
    }

    #[test]
    fn enumerated_tableaux_are_well_formed() {
        for tab in semistandard_tableaux(&s("4,3,1/2"), 3) {
            assert!(tab.is_semistandard(), "{tab}");
        }
        for tab in ballot_tableaux_bounded(&s("4,3,3,1/2,1"), 4) {
            assert!(tab.is_ballot(), "{tab}");
        }
    }

    #[test]
    fn delete_rows_keeps_the_top() {
        let tab = t("3,2,1/2,1", &[&[1], &[1], &[2]]);
        let top = tab.delete_rows(1).unwrap();
        assert_eq!(top, t("3,2/2,1", &[&[1], &[1]]));
        assert!(tab.delete_rows(4).is_err());
    }

    #[test]
    fn render_marks_inner_cells() {
        let tab = t("3,2,1/2,1", &[&[1], &[1], &[2]]);
        assert_eq!(tab.render(), ". . 1\n. 1\n2");
        assert_eq!(t("2,2/2", &[&[], &[1, 1]]).render(), ". .\n1 1");
        assert_eq!(Tableau::empty().render(), "");
    }

    #[test]
    fn bottom_row_skips_empty_rows() {
        assert_eq!(t("2,2,1/2,2", &[&[], &[], &[1]]).bottom_row(), Some(3));
        assert_eq!(t("2,1,1/1,1,1", &[&[1], &[], &[]]).bottom_row(), Some(1));
        assert_eq!(Tableau::empty().bottom_row(), None);
    }
}
