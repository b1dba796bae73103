//! Row insertion and row deletion on english-semistandard tableaux.
//!
//! Row indices are zero-based: inserting into the empty tableau returns row 0.

use alloc::vec::Vec;

use crate::tableaux::Tableau;
use crate::{Error, Result};

/// Row-inserts `x`, returning the new tableau and the row that grew.
///
/// In each row the leftmost entry strictly greater than the carried value is
/// replaced and carried on to the next row; when no such entry exists the
/// carried value is appended.
pub fn insert(t: &Tableau, x: u32) -> Result<(Tableau, usize)> {
    if x == 0 {
        return Err(Error::NonPositiveEntry);
    }
    if !t.is_semistandard_english() {
        return Err(Error::NotSemistandard);
    }
    let mut rows = t.clone().into_rows();
    let row = insert_in_place(&mut rows, x);
    Ok((Tableau::from_rows_unchecked(rows), row))
}

/// Reverse-bumps the last entry of `row` out through the rows above and
/// returns the value ejected from the first row.
pub fn delete(t: &Tableau, row: usize) -> Result<(Tableau, u32)> {
    if !t.is_semistandard_english() {
        return Err(Error::NotSemistandard);
    }
    let rows = t.rows();
    let len = rows.get(row).map_or(0, Vec::len);
    let below = rows.get(row + 1).map_or(0, Vec::len);
    if len == 0 || len == below {
        return Err(Error::InvalidCorner { row });
    }
    let mut rows = t.clone().into_rows();
    let x = delete_in_place(&mut rows, row);
    Ok((Tableau::from_rows_unchecked(rows), x))
}

pub(crate) fn insert_in_place(rows: &mut Vec<Vec<u32>>, mut x: u32) -> usize {
    for (i, row) in rows.iter_mut().enumerate() {
        // first index with entry > x
        let k = row.partition_point(|&e| e <= x);
        if k == row.len() {
            row.push(x);
            return i;
        }
        x = core::mem::replace(&mut row[k], x);
    }
    rows.push(alloc::vec![x]);
    rows.len() - 1
}

/// `rows[row]` must be a removable corner.
pub(crate) fn delete_in_place(rows: &mut Vec<Vec<u32>>, row: usize) -> u32 {
    let mut x = rows[row].pop().expect("corner row is nonempty");
    for h in (0..row).rev() {
        let r = &mut rows[h];
        // last index with entry < x; the row below held x, so one exists
        let k = r.partition_point(|&e| e < x);
        debug_assert!(k > 0, "reverse bump found no smaller entry");
        x = core::mem::replace(&mut r[k - 1], x);
    }
    if rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    x
}
