//! Two-rowed arrays of commutators.
//!
//! An array with columns `(a_1, b_1), …, (a_m, b_m)` stands for the proper
//! polynomial `[x_{a_1}, x_{b_1}] ⋯ [x_{a_m}, x_{b_m}]`. Commutators commute
//! with each other modulo `[x_1, x_2, x_3]`, so column order is irrelevant up
//! to sorting, and `[x, y] = -[y, x]` lets every column be put in the form
//! `a > b`. A c-array is an array in that normalized form; a normal c-array
//! additionally uses every symbol at most twice and has no weakly increasing
//! subsequence of length three in its bottom row.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::tableaux::Content;
use crate::{Error, Result, Sign};

/// A column `(top, bottom)`.
pub type Column = (u32, u32);

/// Any two-rowed array of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TwoRowArray {
    columns: Vec<Column>,
}

impl TwoRowArray {
    pub fn new(top: &[u32], bottom: &[u32]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::LengthMismatch {
                left: top.len(),
                right: bottom.len(),
            });
        }
        Self::from_columns(top.iter().copied().zip(bottom.iter().copied()).collect())
    }

    pub fn from_columns(columns: Vec<Column>) -> Result<Self> {
        if columns.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::NonPositiveEntry);
        }
        Ok(TwoRowArray { columns })
    }

    pub fn empty() -> Self {
        TwoRowArray::default()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn top(&self) -> Vec<u32> {
        self.columns.iter().map(|c| c.0).collect()
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.columns.iter().map(|c| c.1).collect()
    }

    /// Number of columns `m`.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Entries in reading order `a_1, b_1, a_2, b_2, …`.
    pub fn reading_word(&self) -> impl Iterator<Item = u32> + '_ {
        self.columns.iter().flat_map(|&(a, b)| [a, b])
    }

    pub fn content(&self) -> Content {
        Content::of_entries(self.reading_word())
    }

    /// Key of the total ordering: `(a_m, …, a_1, b_1, …, b_m)` compared
    /// lexicographically.
    fn order_key(&self) -> impl Iterator<Item = u32> + '_ {
        let tops = self.columns.iter().rev().map(|c| c.0);
        let bottoms = self.columns.iter().map(|c| c.1);
        tops.chain(bottoms)
    }

    /// Conditions s₁ and s₂: `a_i > b_i` and columns lexicographically sorted.
    pub fn is_c_array(&self) -> bool {
        self.columns.iter().all(|&(a, b)| a > b) && self.columns.windows(2).all(|w| w[0] <= w[1])
    }

    /// Condition s₃: no symbol occurs more than twice.
    pub fn satisfies_multiplicity_bound(&self) -> bool {
        self.content().max_count() <= 2
    }

    /// Condition s₄: no `r < s < t` with `b_r ≤ b_s ≤ b_t`.
    pub fn satisfies_no_increasing_triple(&self) -> bool {
        self.violating_triple().is_none()
    }

    /// The lexicographically smallest `(r, s, t)` with `r < s < t` and
    /// `b_r ≤ b_s ≤ b_t`, if any.
    pub fn violating_triple(&self) -> Option<(usize, usize, usize)> {
        let b = self.bottom();
        let m = b.len();
        for r in 0..m {
            for s in r + 1..m {
                if b[r] > b[s] {
                    continue;
                }
                if let Some(t) = (s + 1..m).find(|&t| b[s] <= b[t]) {
                    return Some((r, s, t));
                }
            }
        }
        None
    }
}

impl fmt::Display for TwoRowArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, self.columns.iter().map(|c| c.0))?;
        writeln!(f)?;
        write_row(f, self.columns.iter().map(|c| c.1))
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, row: impl Iterator<Item = u32>) -> fmt::Result {
    for (i, x) in row.enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Compares two arrays of equal length in the total ordering on arrays.
pub fn compare(left: &TwoRowArray, right: &TwoRowArray) -> Result<Ordering> {
    if left.len() != right.len() {
        return Err(Error::LengthMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    Ok(left.order_key().cmp(right.order_key()))
}

/// A two-rowed array satisfying s₁ and s₂.
///
/// `Ord` compares by number of columns first and then by the total ordering
/// on arrays, so within one length it is exactly that ordering.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CArray(TwoRowArray);

impl CArray {
    pub fn empty() -> Self {
        CArray(TwoRowArray::empty())
    }

    pub fn new(top: &[u32], bottom: &[u32]) -> Result<Self> {
        TwoRowArray::new(top, bottom)?.try_into()
    }

    pub(crate) fn from_sorted_unchecked(columns: Vec<Column>) -> Self {
        let array = TwoRowArray { columns };
        debug_assert!(array.is_c_array());
        CArray(array)
    }

    pub fn as_array(&self) -> &TwoRowArray {
        &self.0
    }

    pub fn into_array(self) -> TwoRowArray {
        self.0
    }

    pub fn is_normal(&self) -> bool {
        self.0.satisfies_multiplicity_bound() && self.0.satisfies_no_increasing_triple()
    }
}

impl core::ops::Deref for CArray {
    type Target = TwoRowArray;

    fn deref(&self) -> &TwoRowArray {
        &self.0
    }
}

impl TryFrom<TwoRowArray> for CArray {
    type Error = Error;

    fn try_from(array: TwoRowArray) -> Result<Self> {
        if array.is_c_array() {
            Ok(CArray(array))
        } else {
            Err(Error::NotCArray)
        }
    }
}

impl Ord for CArray {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.order_key().cmp(other.0.order_key()))
    }
}

impl PartialOrd for CArray {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Result of normalizing an array: zero, or a signed c-array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignedCArray {
    Zero,
    Term(Sign, CArray),
}

/// Swaps every column with `a < b` (one sign change per swap) and sorts the
/// columns. Any column with `a = b` makes the product vanish.
pub fn normalize(array: &TwoRowArray) -> SignedCArray {
    let mut swaps = 0;
    let mut columns = Vec::with_capacity(array.len());
    for &(a, b) in array.columns() {
        match a.cmp(&b) {
            Ordering::Equal => return SignedCArray::Zero,
            Ordering::Less => {
                swaps += 1;
                columns.push((b, a));
            }
            Ordering::Greater => columns.push((a, b)),
        }
    }
    columns.sort();
    SignedCArray::Term(
        Sign::from_parity(swaps),
        CArray::from_sorted_unchecked(columns),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    Raw,
    CArray,
    Normal,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Raw => "raw",
            Class::CArray => "c_array",
            Class::Normal => "normal",
        })
    }
}

pub fn classify(array: &TwoRowArray) -> Class {
    if !array.is_c_array() {
        Class::Raw
    } else if array.satisfies_multiplicity_bound() && array.satisfies_no_increasing_triple() {
        Class::Normal
    } else {
        Class::CArray
    }
}

/// Juxtaposes two c-arrays and sorts the columns.
pub fn star(left: &CArray, right: &CArray) -> CArray {
    let (l, r) = (left.columns(), right.columns());
    let mut merged = Vec::with_capacity(l.len() + r.len());
    let (mut i, mut j) = (0, 0);
    while i < l.len() && j < r.len() {
        if l[i] <= r[j] {
            merged.push(l[i]);
            i += 1;
        } else {
            merged.push(r[j]);
            j += 1;
        }
    }
    merged.extend_from_slice(&l[i..]);
    merged.extend_from_slice(&r[j..]);
    CArray::from_sorted_unchecked(merged)
}

/// All c-arrays of the given content, sorted by the array ordering.
///
/// Each c-array is a perfect matching of the content multiset into pairs of
/// distinct symbols; the smallest remaining symbol is always the bottom of
/// its column, which makes the recursion visit each matching once.
pub fn enumerate_c_arrays(content: &Content) -> Vec<CArray> {
    fn go(remaining: &mut Vec<usize>, columns: &mut Vec<Column>, out: &mut Vec<CArray>) {
        let Some(low) = remaining.iter().position(|&n| n > 0) else {
            let mut sorted = columns.clone();
            sorted.sort();
            out.push(CArray::from_sorted_unchecked(sorted));
            return;
        };
        remaining[low] -= 1;
        for high in low + 1..remaining.len() {
            if remaining[high] == 0 {
                continue;
            }
            remaining[high] -= 1;
            columns.push((high as u32 + 1, low as u32 + 1));
            go(remaining, columns, out);
            columns.pop();
            remaining[high] += 1;
        }
        remaining[low] += 1;
    }
    if content.total() % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(&mut content.counts().to_vec(), &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// The normal c-arrays of the given content, sorted by the array ordering.
pub fn enumerate_normal(content: &Content) -> Vec<CArray> {
    if content.max_count() > 2 {
        return Vec::new();
    }
    enumerate_c_arrays(content)
        .into_iter()
        .filter(|c| c.satisfies_no_increasing_triple())
        .collect()
}
