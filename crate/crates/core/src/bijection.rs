//! Bijection between c-arrays and english-semistandard tableaux of double
//! shape with the same content.
//!
//! Going forward, the bottom entry of each column is row-inserted and the
//! top entry is appended to the row directly below the insertion row. Going
//! backward, the largest entry (rightmost occurrence) is reverse-bumped out
//! of its row, which returns the bottom entry, and the top entry left behind
//! in the row above is removed.

use alloc::format;
use alloc::vec::Vec;

use crate::carray::CArray;
use crate::krs::{delete_in_place, insert_in_place};
use crate::tableaux::Tableau;
use crate::{Error, Result};

pub fn carray_to_dtableau(array: &CArray) -> Tableau {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &(a, b) in array.columns() {
        let i = insert_in_place(&mut rows, b);
        if i + 1 == rows.len() {
            rows.push(Vec::new());
        }
        rows[i + 1].push(a);
    }
    Tableau::from_rows_unchecked(rows)
}

pub fn dtableau_to_carray(tableau: &Tableau) -> Result<CArray> {
    if !tableau.is_d_tableau() {
        return Err(Error::NotDTableau);
    }
    let mut rows = tableau.clone().into_rows();
    let mut columns = Vec::with_capacity(tableau.size() / 2);
    while !rows.is_empty() {
        // Rightmost occurrence of the maximum. Rows are weakly increasing and
        // columns strictly increasing, so it ends its row and is unique.
        let (i, j, x) = rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.last().map(|&x| (i, r.len() - 1, x)))
            .max_by(|p, q| p.2.cmp(&q.2).then(p.1.cmp(&q.1)).then(p.0.cmp(&q.0)))
            .expect("nonempty tableau");
        let below = rows.get(i + 1).map_or(0, Vec::len);
        if i == 0 || below == j + 1 {
            return Err(Error::Invariant(format!(
                "maximum {x} at ({i}, {j}) is not an even-row corner"
            )));
        }
        let y = delete_in_place(&mut rows, i);
        let above = &mut rows[i - 1];
        if above.len() != j + 1 || above[j] != x {
            return Err(Error::Invariant(format!(
                "entry {x} did not land at the end of row {}",
                i - 1
            )));
        }
        above.pop();
        if above.is_empty() {
            rows.remove(i - 1);
        }
        columns.push((x, y));
    }
    columns.reverse();
    CArray::try_from(crate::carray::TwoRowArray::from_columns(columns)?)
}

/// Length of the first row of the associated tableau: the longest weakly
/// increasing subsequence of the bottom row.
pub fn first_row_length(array: &CArray) -> usize {
    carray_to_dtableau(array).rows().first().map_or(0, Vec::len)
}
