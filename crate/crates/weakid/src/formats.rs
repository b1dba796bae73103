//! Text and JSON encodings of tableaux, arrays, contents and combinations.
//!
//! * Tableau text: one row per line, entries separated by spaces.
//! * Tableau JSON: `{"rows": [[1, 3], [2, 4]]}`.
//! * Array text: two lines, top row then bottom row.
//! * Array JSON: `{"top": [2, 4], "bottom": [1, 3]}`.
//! * Combination JSON: `[{"coeff": "-1/2", "top": [...], "bottom": [...]}]`.
//!
//! Readers accept either encoding and decide by the first non-blank
//! character.

use serde::{Deserialize, Serialize};
use weakid_core::carray::{CArray, TwoRowArray};
use weakid_core::straighten::LinComb;
use weakid_core::tableaux::{Content, Tableau};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] weakid_core::Error),
}

pub type Result<T> = std::result::Result<T, FormatError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub rows: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayJson {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

fn is_json(input: &str) -> bool {
    matches!(input.trim_start().chars().next(), Some('{' | '['))
}

fn parse_row(line: &str, number: usize) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>().map_err(|_| FormatError::Parse {
                line: number,
                message: format!("expected a nonnegative integer, found {tok:?}"),
            })
        })
        .collect()
}

fn join(row: &[u32]) -> String {
    row.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Non-blank lines with their one-based line numbers.
fn lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
}

pub fn parse_tableau(input: &str) -> Result<Tableau> {
    let rows = if is_json(input) {
        serde_json::from_str::<TableauJson>(input)?.rows
    } else {
        lines(input)
            .map(|(n, l)| parse_row(l, n))
            .collect::<Result<_>>()?
    };
    Ok(Tableau::new(rows)?)
}

pub fn tableau_to_text(t: &Tableau) -> String {
    t.rows().iter().map(|r| join(r) + "\n").collect()
}

pub fn tableau_to_json(t: &Tableau) -> String {
    serde_json::to_string(&TableauJson {
        rows: t.rows().to_vec(),
    })
    .expect("serializable")
}

pub fn parse_array(input: &str) -> Result<TwoRowArray> {
    let (top, bottom) = if is_json(input) {
        let a: ArrayJson = serde_json::from_str(input)?;
        (a.top, a.bottom)
    } else {
        let rows: Vec<(usize, &str)> = lines(input).collect();
        match rows.as_slice() {
            [] => (Vec::new(), Vec::new()),
            [(n1, l1), (n2, l2)] => (parse_row(l1, *n1)?, parse_row(l2, *n2)?),
            [(n, _)] | [_, _, (n, _), ..] => {
                return Err(FormatError::Parse {
                    line: *n,
                    message: "an array has exactly two rows".into(),
                })
            }
        }
    };
    Ok(TwoRowArray::new(&top, &bottom)?)
}

pub fn array_to_text(a: &TwoRowArray) -> String {
    format!("{}\n{}\n", join(&a.top()), join(&a.bottom()))
}

/// One-line form `top / bottom`, used in listings.
pub fn array_to_inline(a: &TwoRowArray) -> String {
    format!("{} / {}", join(&a.top()), join(&a.bottom()))
}

pub fn array_json(a: &TwoRowArray) -> ArrayJson {
    ArrayJson {
        top: a.top(),
        bottom: a.bottom(),
    }
}

pub fn array_to_json(a: &TwoRowArray) -> String {
    serde_json::to_string(&array_json(a)).expect("serializable")
}

pub fn arrays_to_json(arrays: &[CArray]) -> String {
    let list: Vec<ArrayJson> = arrays.iter().map(|a| array_json(a.as_array())).collect();
    serde_json::to_string(&list).expect("serializable")
}

pub fn lincomb_terms(comb: &LinComb) -> Vec<TermJson> {
    comb.iter()
        .map(|(a, c)| TermJson {
            coeff: c.to_string(),
            top: a.top(),
            bottom: a.bottom(),
        })
        .collect()
}

pub fn lincomb_to_json(comb: &LinComb) -> String {
    serde_json::to_string(&lincomb_terms(comb)).expect("serializable")
}

/// One term per line, `coeff  top / bottom`; `0` for the empty combination.
pub fn lincomb_to_text(comb: &LinComb) -> String {
    if comb.is_zero() {
        return "0\n".into();
    }
    comb.iter()
        .map(|(a, c)| format!("{c}  {}\n", array_to_inline(a.as_array())))
        .collect()
}

/// Parses `1,1,2` (spaces allowed).
pub fn parse_content(input: &str) -> Result<Content> {
    let counts = input
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| FormatError::Parse {
                line: 1,
                message: format!("expected a multiplicity, found {tok:?}"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Content::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_formats_round_trip() {
        let t = parse_tableau("1 3\n2 4\n").unwrap();
        assert_eq!(t.rows(), &[vec![1, 3], vec![2, 4]]);
        assert_eq!(tableau_to_text(&t), "1 3\n2 4\n");
        assert_eq!(tableau_to_json(&t), r#"{"rows":[[1,3],[2,4]]}"#);
        assert_eq!(parse_tableau(&tableau_to_json(&t)).unwrap(), t);
        assert!(parse_tableau("1 x").is_err());
        assert!(parse_tableau("").unwrap().is_empty());
    }

    #[test]
    fn array_formats_round_trip() {
        let a = parse_array("2 4\n1 3").unwrap();
        assert_eq!(array_to_text(&a), "2 4\n1 3\n");
        assert_eq!(array_to_inline(&a), "2 4 / 1 3");
        assert_eq!(array_to_json(&a), r#"{"top":[2,4],"bottom":[1,3]}"#);
        assert_eq!(parse_array(&array_to_json(&a)).unwrap(), a);
        assert!(matches!(
            parse_array("1 2"),
            Err(FormatError::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_array("1\n2 3"), Err(FormatError::Core(_))));
    }

    #[test]
    fn content_parsing() {
        assert_eq!(parse_content("1,1,2").unwrap(), Content::new(vec![1, 1, 2]));
        assert_eq!(parse_content(" 2, 0 ,1 ").unwrap().counts(), &[2, 0, 1]);
        assert!(parse_content("1,a").is_err());
    }
}
