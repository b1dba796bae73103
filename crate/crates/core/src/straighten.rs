//! Straightening of products of commutators into the normal c-array basis.
//!
//! Modulo the ideal generated by `[x_1, x_2, x_3]` and
//! `[x_2, x_1][x_3, x_1][x_4, x_1]`, commutators commute and every
//! linearization of the second generator vanishes. For three columns with
//! bottoms `b_r ≤ b_s ≤ b_t` this gives the relation
//!
//! ```text
//! Σ f_{U'} = 0
//! ```
//!
//! summed over the distinct rearrangements `U'` of the bottom row of
//! `U = [a_r a_s a_t; b_r b_s b_t]` with the top row held fixed (six terms
//! when the bottoms are distinct, three when two coincide). Every other term
//! is strictly larger than `U` in the array ordering, so solving for `U` and
//! repeating on the smallest offending term terminates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::carray::{normalize, star, CArray, Column, SignedCArray, TwoRowArray};
use crate::{Error, Result, Q};

/// A rational combination of c-arrays, ordered by the array ordering.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<CArray, Q>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn singleton(array: CArray, coeff: Q) -> Self {
        let mut out = LinComb::zero();
        out.add_term(array, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, array: &CArray) -> Q {
        self.terms.get(array).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CArray, &Q)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, array: CArray, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(array).or_insert_with(Q::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, c: &Q) -> LinComb {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            out.add_term(a.clone(), x * c);
        }
        out
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(CArray::is_normal)
    }
}

impl<'a> IntoIterator for &'a LinComb {
    type Item = (&'a CArray, &'a Q);
    type IntoIter = alloc::collections::btree_map::Iter<'a, CArray, Q>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})[{:?} / {:?}]", a.top(), a.bottom())?;
        }
        Ok(())
    }
}

/// Rewrites `f_S` as a combination of normal c-arrays.
pub fn straighten(array: &TwoRowArray) -> LinComb {
    match normalize(array) {
        SignedCArray::Zero => LinComb::zero(),
        SignedCArray::Term(sign, c) => straighten_lincomb(&LinComb::singleton(c, sign.to_q())),
    }
}

/// Straightens every term of a combination of c-arrays.
pub fn straighten_lincomb(input: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (array, coeff) in input {
        if array.content().max_count() > 2 {
            continue;
        }
        let mut work = LinComb::singleton(array.clone(), coeff.clone());
        reduce(&mut work).expect("straightening invariant");
        for (a, c) in work.terms {
            out.add_term(a, c);
        }
    }
    out
}

/// Repeatedly rewrites the smallest term that has an increasing bottom
/// triple. All terms share one content with multiplicities at most two.
fn reduce(work: &mut LinComb) -> Result<()> {
    loop {
        let Some((array, (r, s, t))) = work
            .terms
            .keys()
            .find_map(|a| a.violating_triple().map(|triple| (a.clone(), triple)))
        else {
            return Ok(());
        };
        let coeff = work.terms.remove(&array).expect("key was just found");
        for (term, c) in rewrite(&array, r, s, t)? {
            if term <= array {
                return Err(Error::Invariant(format!(
                    "rewriting did not increase {array:?}"
                )));
            }
            work.add_term(term, c * &coeff);
        }
    }
}

/// Expresses `f_S` through strictly larger c-arrays using the relation on
/// the columns `r < s < t`.
fn rewrite(array: &CArray, r: usize, s: usize, t: usize) -> Result<Vec<(CArray, Q)>> {
    let cols = array.columns();
    let triple = [cols[r], cols[s], cols[t]];
    let rest: Vec<Column> = cols
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != r && i != s && i != t)
        .map(|(_, &c)| c)
        .collect();
    let rest = CArray::from_sorted_unchecked(rest);

    let mut relation: BTreeMap<CArray, Q> = BTreeMap::new();
    for bottoms in distinct_arrangements([triple[0].1, triple[1].1, triple[2].1]) {
        let raw = TwoRowArray::from_columns(
            triple
                .iter()
                .zip(bottoms)
                .map(|(&(a, _), b)| (a, b))
                .collect(),
        )?;
        if let SignedCArray::Term(sign, u) = normalize(&raw) {
            *relation.entry(star(&u, &rest)).or_insert_with(Q::zero) += sign.to_q();
        }
    }
    let pivot = relation.remove(array).unwrap_or_else(Q::zero);
    if pivot.is_zero() {
        return Err(Error::Invariant(format!(
            "relation does not involve {array:?}"
        )));
    }
    let factor = -Q::one() / pivot;
    Ok(relation
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(a, c)| (a, c * &factor))
        .collect())
}

/// Distinct permutations of three values, in lexicographic order.
fn distinct_arrangements(mut v: [u32; 3]) -> Vec<[u32; 3]> {
    v.sort_unstable();
    let mut out = Vec::with_capacity(6);
    for p in [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ] {
        let w = [v[p[0]], v[p[1]], v[p[2]]];
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out
}

/// Product of two combinations: star products of all term pairs,
/// straightened.
pub fn lincomb_multiply(left: &LinComb, right: &LinComb) -> LinComb {
    let mut product = LinComb::zero();
    for (a, x) in left {
        for (b, y) in right {
            product.add_term(star(a, b), x * y);
        }
    }
    straighten_lincomb(&product)
}

/// Fresh labels for multilinearization: symbol `i` with multiplicity `n_i`
/// is sent to the block starting at `1 + n_1 + … + n_{i-1}`; a doubled
/// symbol uses the two consecutive labels of its block.
pub fn relabel_base(content: &crate::tableaux::Content) -> Vec<u32> {
    let mut next = 1;
    content
        .counts()
        .iter()
        .map(|&n| {
            let base = next;
            next += n as u32;
            base
        })
        .collect()
}

/// Full linearization of `f_S` in every doubled symbol.
///
/// Each symbol occurring twice is split into two fresh labels assigned to its
/// two occurrences in both possible ways; the result lists all `2^d`
/// multilinear arrays on `1..=2m`, each with coefficient one. Bit `k` of the
/// output index swaps the `k`-th doubled symbol (occurrences are taken in
/// reading order `a_1, b_1, a_2, b_2, …`).
pub fn multilinearize(array: &TwoRowArray) -> Result<Vec<TwoRowArray>> {
    let content = array.content();
    if content.max_count() > 2 {
        return Err(Error::MultiplicityTooLarge);
    }
    let base = relabel_base(&content);
    let doubled: Vec<u32> = (1..=content.alphabet())
        .filter(|&i| content.count(i) == 2)
        .collect();
    let word: Vec<u32> = array.reading_word().collect();

    let mut out = Vec::with_capacity(1 << doubled.len());
    for mask in 0u32..(1 << doubled.len()) {
        let mut seen = alloc::vec![false; content.alphabet() as usize];
        let relabeled: Vec<u32> = word
            .iter()
            .map(|&x| {
                let b = base[x as usize - 1];
                if content.count(x) == 1 {
                    return b;
                }
                let k = doubled
                    .iter()
                    .position(|&d| d == x)
                    .expect("doubled symbol");
                let second = core::mem::replace(&mut seen[x as usize - 1], true);
                let swapped = mask >> k & 1 == 1;
                b + u32::from(second != swapped)
            })
            .collect();
        let columns = relabeled.chunks(2).map(|c| (c[0], c[1])).collect();
        out.push(TwoRowArray::from_columns(columns)?);
    }
    Ok(out)
}
