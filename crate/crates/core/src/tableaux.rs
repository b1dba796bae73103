//! Partitions, tableaux and semistandard fillings.
//!
//! Rows are indexed from zero. A tableau is stored as a list of nonempty rows
//! whose lengths form a partition; the empty tableau has no rows.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A partition `λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_r ≥ 1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Shape(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Shape(parts))
    }

    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    /// The shape `(2^{2p}, 1^{2q})`.
    pub fn two_column(p: usize, q: usize) -> Self {
        let mut parts = vec![2; 2 * p];
        parts.extend(core::iter::repeat_n(1, 2 * q));
        Shape(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// True for shapes `(λ₁, λ₁, λ₂, λ₂, …)`.
    pub fn is_double(&self) -> bool {
        self.0.len().is_multiple_of(2) && self.0.chunks(2).all(|pair| pair[0] == pair[1])
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn partitions(n: usize) -> Vec<Shape> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if n == 0 {
                out.push(Shape(prefix.clone()));
                return;
            }
            for part in (1..=max.min(n)).rev() {
                prefix.push(part);
                go(n - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All double shapes of `2m`, i.e. doubled partitions of `m`.
    pub fn double_partitions(m: usize) -> Vec<Shape> {
        Shape::partitions(m)
            .into_iter()
            .map(|p| Shape(p.0.iter().flat_map(|&x| [x, x]).collect()))
            .collect()
    }
}

/// Multiplicities `(n₁, …, n_k)` of `1, …, k`. Trailing zeros are trimmed,
/// so two contents that differ only by trailing zeros compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content(Vec<usize>);

impl Content {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Content(counts)
    }

    /// The content `(1, …, 1)` with `n` ones.
    pub fn multilinear(n: usize) -> Self {
        Content(vec![1; n])
    }

    /// Content of a multiset of positive integers.
    pub fn of_entries<I: IntoIterator<Item = u32>>(entries: I) -> Self {
        let mut counts = Vec::new();
        for x in entries {
            let i = x as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        Content(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Multiplicity of the symbol `i` (one-based); zero past the end.
    pub fn count(&self, i: u32) -> usize {
        self.0.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Largest symbol with nonzero multiplicity, or 0.
    pub fn alphabet(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_multilinear(&self) -> bool {
        self.0.iter().all(|&n| n == 1)
    }

    /// Number of symbols occurring exactly `n` times.
    pub fn symbols_with_count(&self, n: usize) -> usize {
        self.0.iter().filter(|&&c| c == n).count()
    }

    pub fn max_count(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Rows weakly increasing, columns strictly increasing.
    English,
    /// Rows strictly increasing, columns weakly increasing.
    French,
}

impl Convention {
    fn row_ok(self, left: u32, right: u32) -> bool {
        match self {
            Convention::English => left <= right,
            Convention::French => left < right,
        }
    }

    fn column_ok(self, above: u32, below: u32) -> bool {
        match self {
            Convention::English => above < below,
            Convention::French => above <= below,
        }
    }
}

/// A filling of a partition shape by positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau, rejecting row lengths that do not form a partition
    /// and nonpositive entries. Empty rows are not allowed.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        Shape::new(rows.iter().map(Vec::len).collect())?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::NonPositiveEntry);
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// Callers guarantee the row lengths form a partition.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(Shape::new(rows.iter().map(Vec::len).collect()).is_ok());
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.entries().max()
    }

    pub fn content(&self) -> Content {
        Content::of_entries(self.entries())
    }

    pub fn is_semistandard(&self, convention: Convention) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| convention.row_ok(w[0], w[1])));
        let columns_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(&below, &above)| convention.column_ok(above, below))
        });
        rows_ok && columns_ok
    }

    pub fn is_semistandard_english(&self) -> bool {
        self.is_semistandard(Convention::English)
    }

    pub fn is_semistandard_french(&self) -> bool {
        self.is_semistandard(Convention::French)
    }

    /// English-semistandard of double shape.
    pub fn is_d_tableau(&self) -> bool {
        self.shape().is_double() && self.is_semistandard_english()
    }

    /// French-semistandard of double shape.
    pub fn is_d_star_tableau(&self) -> bool {
        self.shape().is_double() && self.is_semistandard_french()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Backtracking filler. Cells are visited in row-reading order and values
/// are tried in increasing order, so the output is sorted lexicographically
/// by reading word.
struct Filler<'a> {
    shape: &'a [usize],
    max_entry: u32,
    remaining: Option<Vec<usize>>,
    convention: Convention,
    rows: Vec<Vec<u32>>,
    out: Vec<Tableau>,
}

impl Filler<'_> {
    fn fill(&mut self, row: usize, col: usize) {
        if col == self.shape[row] {
            if row + 1 == self.shape.len() {
                self.out
                    .push(Tableau::from_rows_unchecked(self.rows.clone()));
                return;
            }
            self.rows.push(Vec::with_capacity(self.shape[row + 1]));
            self.fill(row + 1, 0);
            self.rows.pop();
            return;
        }
        for v in 1..=self.max_entry {
            if col > 0 && !self.convention.row_ok(self.rows[row][col - 1], v) {
                continue;
            }
            if row > 0 && !self.convention.column_ok(self.rows[row - 1][col], v) {
                continue;
            }
            if let Some(remaining) = &mut self.remaining {
                let slot = &mut remaining[v as usize - 1];
                if *slot == 0 {
                    continue;
                }
                *slot -= 1;
            }
            self.rows[row].push(v);
            self.fill(row, col + 1);
            self.rows[row].pop();
            if let Some(remaining) = &mut self.remaining {
                remaining[v as usize - 1] += 1;
            }
        }
    }
}

fn run_filler(
    shape: &Shape,
    max_entry: u32,
    remaining: Option<Vec<usize>>,
    convention: Convention,
) -> Vec<Tableau> {
    if shape.is_empty() {
        return vec![Tableau::empty()];
    }
    let mut filler = Filler {
        shape: shape.parts(),
        max_entry,
        remaining,
        convention,
        rows: vec![Vec::with_capacity(shape.parts()[0])],
        out: Vec::new(),
    };
    filler.fill(0, 0);
    filler.out
}

/// All semistandard tableaux of the given shape and content, ordered
/// lexicographically by row-reading word.
pub fn enumerate_ssyt(
    shape: &Shape,
    content: &Content,
    convention: Convention,
) -> Result<Vec<Tableau>> {
    if content.total() != shape.size() {
        return Err(Error::ContentSizeMismatch {
            content: content.total(),
            cells: shape.size(),
        });
    }
    Ok(run_filler(
        shape,
        content.alphabet(),
        Some(content.counts().to_vec()),
        convention,
    ))
}

/// All semistandard tableaux of the given shape with entries in `1..=max_entry`.
pub fn ssyt_with_max_entry(shape: &Shape, max_entry: u32, convention: Convention) -> Vec<Tableau> {
    run_filler(shape, max_entry, None, convention)
}
