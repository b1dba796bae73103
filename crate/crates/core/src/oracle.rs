//! The invariant-ring image of multilinear proper polynomials.
//!
//! A multilinear array `S` on the labels `1..=2m` maps to
//! `(-1)^S · q_S`, where `(-1)^S` is the sign of the permutation
//! `1 2 … 2m ↦ a_1 b_1 … a_m b_m` and
//! `q_S = Π_k (U_{a_k} U_{b_k} + V_{a_k} V_{b_k})` in the commutative ring
//! `Q[U_1, …, U_{2m}, V_1, …, V_{2m}]`. This map is injective on the
//! multilinear component modulo the weak identities, so two combinations of
//! arrays agree modulo those identities exactly when their images agree.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::carray::TwoRowArray;
use crate::poly::{Monomial, Poly};
use crate::straighten::{multilinearize, LinComb};
use crate::{linalg, Error, Result, Sign, Q};

/// Variable index of `U_i` (one-based `i`).
pub fn u(i: u32) -> u32 {
    2 * (i - 1)
}

/// Variable index of `V_i` (one-based `i`).
pub fn v(i: u32) -> u32 {
    2 * (i - 1) + 1
}

/// Name of a variable index, `U3` or `V3`.
pub fn var_name(index: u32) -> String {
    let i = index / 2 + 1;
    if index.is_multiple_of(2) {
        format!("U{i}")
    } else {
        format!("V{i}")
    }
}

/// Checks that the reading word is a permutation of `1..=2m`.
fn check_multilinear(array: &TwoRowArray) -> Result<Vec<u32>> {
    let word: Vec<u32> = array.reading_word().collect();
    let n = word.len();
    let mut seen = alloc::vec![false; n];
    for &x in &word {
        let i = x as usize;
        if i == 0 || i > n || core::mem::replace(&mut seen[i - 1], true) {
            return Err(Error::NotMultilinear);
        }
    }
    Ok(word)
}

/// Sign of the permutation `1 … 2m ↦ a_1 b_1 … a_m b_m`.
pub fn perm_sign(array: &TwoRowArray) -> Result<Sign> {
    let word = check_multilinear(array)?;
    let inversions = word
        .iter()
        .enumerate()
        .map(|(i, &x)| word[i + 1..].iter().filter(|&&y| y < x).count())
        .sum();
    Ok(Sign::from_parity(inversions))
}

fn product_of_pairs(array: &TwoRowArray, pair: impl Fn(u32, u32) -> Poly) -> Result<Poly> {
    check_multilinear(array)?;
    Ok(array
        .columns()
        .iter()
        .fold(Poly::one(), |acc, &(a, b)| &acc * &pair(a, b)))
}

/// `q_{ij} = U_i U_j + V_i V_j`.
pub fn q_pair(i: u32, j: u32) -> Poly {
    &(&Poly::var(u(i)) * &Poly::var(u(j))) + &(&Poly::var(v(i)) * &Poly::var(v(j)))
}

/// `U_i V_j + U_j V_i`.
pub fn p_pair(i: u32, j: u32) -> Poly {
    &(&Poly::var(u(i)) * &Poly::var(v(j))) + &(&Poly::var(u(j)) * &Poly::var(v(i)))
}

/// `q_S`, the product of `q_{a_k b_k}` over the columns.
pub fn q_poly(array: &TwoRowArray) -> Result<Poly> {
    product_of_pairs(array, q_pair)
}

/// `p_S`, the product of `U_{a_k} V_{b_k} + U_{b_k} V_{a_k}` over the columns.
pub fn p_poly(array: &TwoRowArray) -> Result<Poly> {
    product_of_pairs(array, p_pair)
}

/// `Σ coeff · (-1)^S · q_S` over multilinear arrays sharing one label set.
pub fn phi(terms: &[(Q, TwoRowArray)]) -> Result<Poly> {
    let mut out = Poly::zero();
    let Some(first) = terms.first() else {
        return Ok(out);
    };
    let m = first.1.len();
    for (coeff, array) in terms {
        if array.len() != m {
            return Err(Error::MixedLabelSets);
        }
        let image = q_poly(array)?.scale(&(coeff * perm_sign(array)?.to_q()));
        out = &out + &image;
    }
    Ok(out)
}

/// Image of `f_S` for a single multilinear array.
pub fn phi_array(array: &TwoRowArray) -> Result<Poly> {
    phi(&[(Q::from_integer(1.into()), array.clone())])
}

/// Image of the full linearization of a combination whose arrays may use
/// symbols twice. Arrays must share one content so that the relabelings
/// coincide.
pub fn phi_linearized(terms: &[(Q, TwoRowArray)]) -> Result<Poly> {
    let Some(first) = terms.first() else {
        return Ok(Poly::zero());
    };
    let content = first.1.content();
    let mut expanded = Vec::new();
    for (coeff, array) in terms {
        if array.content() != content {
            return Err(Error::MixedLabelSets);
        }
        for lin in multilinearize(array)? {
            expanded.push((coeff.clone(), lin));
        }
    }
    phi(&expanded)
}

/// `phi_linearized` applied to a straightened combination.
pub fn phi_lincomb(comb: &LinComb) -> Result<Poly> {
    let terms: Vec<(Q, TwoRowArray)> = comb
        .iter()
        .map(|(a, c)| (c.clone(), a.as_array().clone()))
        .collect();
    phi_linearized(&terms)
}

/// Rank of the coefficient matrix of a list of polynomials.
pub fn poly_rank(polys: &[Poly]) -> usize {
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m).or_insert(next);
        }
    }
    let rows: Vec<Vec<Q>> = polys
        .iter()
        .map(|p| {
            let mut row = alloc::vec![Q::zero(); index.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        })
        .collect();
    linalg::rank(&rows)
}

/// Rank over the rationals of the images of multilinear arrays.
pub fn independence_rank(arrays: &[TwoRowArray]) -> Result<usize> {
    let images = arrays.iter().map(phi_array).collect::<Result<Vec<_>>>()?;
    Ok(poly_rank(&images))
}

/// Rank of the `p_S` polynomials of multilinear arrays.
pub fn p_rank(arrays: &[TwoRowArray]) -> Result<usize> {
    let images = arrays.iter().map(p_poly).collect::<Result<Vec<_>>>()?;
    Ok(poly_rank(&images))
}
