//! Dimensions of the multihomogeneous components, the Hilbert series of the
//! relatively free algebra of proper polynomials on `k` generators, and the
//! proper codimension series.
//!
//! The Hilbert series is available three ways:
//! * [`carini_drensky`]: `½ Σ_i [e_i(t)² + (-1)^i e_i(t²)]`;
//! * [`hilbert_by_tableaux`]: `Σ s_λ(t)` over the shapes `(2^{2p}, 1^{2q})`;
//! * [`hilbert_by_dimensions`]: `Σ dimension(c) t^c` over contents.
//!
//! The codimension series `γ(z) = ½(1 + (1 - 4z²)^{-1/2})` is expanded with
//! the binomial series; its coefficient of `z^{2m}` is `C(2m, m)/2` for
//! `m ≥ 1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::tableaux::{ssyt_with_max_entry, Content, Convention, Shape};
use crate::{q, Error, Result, Q};

/// A polynomial in `t_1, …, t_k` truncated above total degree `maxdeg`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymPoly {
    k: usize,
    maxdeg: u32,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl SymPoly {
    pub fn zero(k: usize, maxdeg: u32) -> Self {
        SymPoly {
            k,
            maxdeg,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize, maxdeg: u32) -> Self {
        let mut p = SymPoly::zero(k, maxdeg);
        p.add_term(vec![0; k], Q::one());
        p
    }

    /// `c · t^exponents`; dropped when above the truncation degree.
    pub fn monomial(k: usize, maxdeg: u32, exponents: &[u32], c: Q) -> Result<Self> {
        if exponents.len() != k {
            return Err(Error::OutOfRange(format!(
                "exponent vector of length {} for {k} variables",
                exponents.len()
            )));
        }
        let mut p = SymPoly::zero(k, maxdeg);
        p.add_term(exponents.to_vec(), c);
        Ok(p)
    }

    pub fn variables(&self) -> usize {
        self.k
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
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

    pub fn coeff(&self, exponents: &[u32]) -> Q {
        self.terms.get(exponents).cloned().unwrap_or_else(Q::zero)
    }

    /// Terms in canonical order: by total degree, then by exponent vector
    /// descending, so `t1^2` precedes `t1*t2` precedes `t2^2`.
    pub fn terms(&self) -> Vec<(&[u32], &Q)> {
        let mut out: Vec<(&[u32], &Q)> =
            self.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        out.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), Reverse(*e)));
        out
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: Q) {
        if c.is_zero() || exponents.iter().sum::<u32>() > self.maxdeg {
            return;
        }
        let slot = self.terms.entry(exponents.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    fn check(&self, other: &SymPoly) -> Result<()> {
        if self.k == other.k {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!(
                "polynomials in {} and {} variables",
                self.k, other.k
            )))
        }
    }

    /// Sum truncated at the smaller of the two degrees.
    pub fn add(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check(other)?;
        let mut out = SymPoly::zero(self.k, self.maxdeg.min(other.maxdeg));
        for (e, c) in self.terms.iter().chain(&other.terms) {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Product truncated at the smaller of the two degrees.
    pub fn mul(&self, other: &SymPoly) -> Result<SymPoly> {
        self.check(other)?;
        let mut out = SymPoly::zero(self.k, self.maxdeg.min(other.maxdeg));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> SymPoly {
        let mut out = SymPoly::zero(self.k, self.maxdeg);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    /// The substitution `t_j ↦ t_j²`.
    pub fn square_variables(&self) -> SymPoly {
        let mut out = SymPoly::zero(self.k, self.maxdeg);
        for (e, c) in &self.terms {
            out.add_term(e.iter().map(|x| 2 * x).collect(), c.clone());
        }
        out
    }

    /// All coefficients are integers `≥ 0`.
    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().into_iter().enumerate() {
            let (negative, abs) = (c.is_negative(), c.abs());
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = e.iter().all(|&x| x == 0);
            if constant || !abs.is_one() {
                write!(f, "{abs}")?;
                if !constant {
                    f.write_str("*")?;
                }
            }
            let mut first = true;
            for (j, &x) in e.iter().enumerate().filter(|(_, &x)| x > 0) {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "t{}", j + 1)?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

/// Visits every `i`-subset of `0..k` in lexicographic order.
fn for_each_subset(k: usize, i: usize, mut visit: impl FnMut(&[usize])) {
    fn go(
        start: usize,
        k: usize,
        i: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() == i {
            visit(chosen);
            return;
        }
        for j in start..k {
            if k - j < i - chosen.len() {
                break;
            }
            chosen.push(j);
            go(j + 1, k, i, chosen, visit);
            chosen.pop();
        }
    }
    go(0, k, i, &mut Vec::new(), &mut visit);
}

/// `e_i(t_1, …, t_k)`.
pub fn elementary_symmetric(i: usize, k: usize, maxdeg: u32) -> Result<SymPoly> {
    if i > k {
        return Err(Error::OutOfRange(format!("e_{i} in {k} variables")));
    }
    let mut out = SymPoly::zero(k, maxdeg);
    for_each_subset(k, i, |subset| {
        let mut e = vec![0; k];
        for &j in subset {
            e[j] = 1;
        }
        out.add_term(e, Q::one());
    });
    Ok(out)
}

/// `½ Σ_{i=0}^{k} [e_i(t)² + (-1)^i e_i(t_1², …, t_k²)]`.
pub fn carini_drensky(k: usize, maxdeg: u32) -> SymPoly {
    let mut sum = SymPoly::zero(k, maxdeg);
    for i in 0..=k {
        let e = elementary_symmetric(i, k, maxdeg).expect("i ≤ k");
        let sign = if i % 2 == 0 { q(1) } else { q(-1) };
        let term = e
            .mul(&e)
            .expect("same k")
            .add(&e.square_variables().scale(&sign))
            .expect("same k");
        sum = sum.add(&term).expect("same k");
    }
    sum.scale(&Q::new(1.into(), 2.into()))
}

/// `s_λ(t_1, …, t_k)` as the content generating function of english
/// semistandard tableaux with entries `≤ k`.
pub fn schur(shape: &Shape, k: usize, maxdeg: u32) -> SymPoly {
    let mut out = SymPoly::zero(k, maxdeg);
    if shape.size() > maxdeg as usize || shape.len() > k {
        return out;
    }
    for t in ssyt_with_max_entry(shape, k as u32, Convention::English) {
        let mut e = vec![0; k];
        for x in t.entries() {
            e[x as usize - 1] += 1;
        }
        out.add_term(e, Q::one());
    }
    out
}

/// The shapes `(2^{2p}, 1^{2q})` with `4p + 2q ≤ maxdeg`.
pub fn two_column_shapes(maxdeg: u32) -> Vec<Shape> {
    let n = maxdeg as usize;
    let mut out = Vec::new();
    for p in 0..=n / 4 {
        for q in 0..=(n - 4 * p) / 2 {
            out.push(Shape::two_column(p, q));
        }
    }
    out
}

/// `Σ s_λ` over [`two_column_shapes`].
pub fn hilbert_by_tableaux(k: usize, maxdeg: u32) -> SymPoly {
    two_column_shapes(maxdeg)
        .iter()
        .fold(SymPoly::zero(k, maxdeg), |acc, shape| {
            acc.add(&schur(shape, k, maxdeg)).expect("same k")
        })
}

/// `Σ dimension(c) · t^c` over contents of length `k` and size `≤ maxdeg`.
pub fn hilbert_by_dimensions(k: usize, maxdeg: u32) -> SymPoly {
    let mut out = SymPoly::zero(k, maxdeg);
    let mut counts = vec![0u32; k];
    loop {
        let content = Content::new(counts.iter().map(|&n| n as usize).collect());
        out.add_term(counts.clone(), Q::from_integer(dimension(&content).into()));
        // odometer over vectors with entry sum ≤ maxdeg
        let mut j = 0;
        loop {
            if j == k {
                return out;
            }
            counts[j] += 1;
            if counts.iter().sum::<u32>() <= maxdeg {
                break;
            }
            counts[j] = 0;
            j += 1;
        }
    }
}

fn binomial(n: u128, r: u128) -> u128 {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of the component of content `c`, with `l` symbols of
/// multiplicity 1 and `q` of multiplicity 2: zero when the size is odd,
/// some multiplicity exceeds 2, or `l = 0` with `q` odd; one when `l = 0`
/// with `q` even; `C(2s - 1, s)` for `l = 2s > 0`.
pub fn dimension(content: &Content) -> u128 {
    let l = content.symbols_with_count(1) as u128;
    let q = content.symbols_with_count(2) as u128;
    if content.total() % 2 == 1 || content.max_count() > 2 {
        return 0;
    }
    if l == 0 {
        return u128::from(q.is_multiple_of(2));
    }
    let s = l / 2;
    binomial(2 * s - 1, s)
}

/// Coefficients of `z^0, …, z^{2 max_m}` in `½(1 + (1 - 4z²)^{-1/2})`.
pub fn gamma_coefficients(max_m: usize) -> Vec<Q> {
    // (1 + u)^α = Σ_n a_n u^n with a_n = a_{n-1} (α - n + 1) / n, at
    // α = -1/2 and u = -4z².
    let alpha = Q::new((-1).into(), 2.into());
    let half = Q::new(1.into(), 2.into());
    let mut out = vec![Q::zero(); 2 * max_m + 1];
    let mut a = Q::one();
    let mut power = Q::one();
    for n in 0..=max_m {
        if n > 0 {
            a = a * (&alpha - q(n as i64 - 1)) / q(n as i64);
            power *= q(-4);
        }
        out[2 * n] = &a * &power * &half;
    }
    out[0] += &half;
    out
}

/// Compares two series coefficient by coefficient and returns the first
/// exponent vector where they differ.
pub fn first_difference(left: &SymPoly, right: &SymPoly) -> Option<Vec<u32>> {
    let mut keys: Vec<&Vec<u32>> = left.terms.keys().chain(right.terms.keys()).collect();
    keys.sort_by(|a, b| match a.iter().sum::<u32>().cmp(&b.iter().sum()) {
        Ordering::Equal => b.cmp(a),
        other => other,
    });
    keys.into_iter()
        .find(|e| left.coeff(e) != right.coeff(e))
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carray::enumerate_normal;
    use crate::tableaux::enumerate_ssyt;
    use alloc::string::ToString;

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_symmetric(0, 3, 8).unwrap().to_string(), "1");
        assert_eq!(
            elementary_symmetric(1, 2, 8).unwrap().to_string(),
            "t1 + t2"
        );
        assert_eq!(
            elementary_symmetric(2, 3, 8).unwrap().to_string(),
            "t1*t2 + t1*t3 + t2*t3"
        );
        assert!(elementary_symmetric(4, 3, 8).is_err());
        assert!(elementary_symmetric(3, 3, 2).unwrap().is_zero());
    }

    #[test]
    fn truncated_arithmetic() {
        let t = elementary_symmetric(1, 2, 3).unwrap();
        let cube = t.mul(&t).unwrap().mul(&t).unwrap();
        assert_eq!(cube.to_string(), "t1^3 + 3*t1^2*t2 + 3*t1*t2^2 + t2^3");
        assert!(cube.mul(&t).unwrap().is_zero());
        let half = t.scale(&Q::new((-1).into(), 2.into()));
        assert_eq!(half.to_string(), "-1/2*t1 - 1/2*t2");
        assert_eq!(t.square_variables().to_string(), "t1^2 + t2^2");
    }

    #[test]
    fn carini_drensky_examples() {
        assert_eq!(carini_drensky(1, 8).to_string(), "1");
        assert_eq!(carini_drensky(2, 4).to_string(), "1 + t1*t2 + t1^2*t2^2");
        for k in 1..=4 {
            assert!(carini_drensky(k, 8).has_nonnegative_integer_coefficients());
        }
    }

    #[test]
    fn schur_examples() {
        let s = |parts: Vec<usize>| schur(&Shape::new(parts).unwrap(), 2, 8).to_string();
        assert_eq!(s(vec![1, 1]), "t1*t2");
        assert_eq!(s(vec![2, 2]), "t1^2*t2^2");
        assert_eq!(s(vec![1]), "t1 + t2");
        assert_eq!(s(vec![1, 1, 1]), "0");
    }

    /// Schur functions against the bialternant formula
    /// `s_λ = det(t_i^{λ_j + k - j}) / det(t_i^{k - j})`, checked through
    /// `s_λ · Π_{i<j}(t_i - t_j) = Σ_σ sgn(σ) t^{σ(λ + δ)}`.
    #[test]
    fn schur_matches_bialternant() {
        let k = 3;
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let perm_sign = |p: &[usize; 3]| {
            let inv = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            if inv % 2 == 0 {
                q(1)
            } else {
                q(-1)
            }
        };
        let big = 40;
        let mut vandermonde = SymPoly::one(k, big);
        for i in 0..k {
            for j in i + 1..k {
                let mut ei = vec![0; k];
                ei[i] = 1;
                let mut ej = vec![0; k];
                ej[j] = 1;
                let diff = SymPoly::monomial(k, big, &ei, q(1))
                    .unwrap()
                    .add(&SymPoly::monomial(k, big, &ej, q(-1)).unwrap())
                    .unwrap();
                vandermonde = vandermonde.mul(&diff).unwrap();
            }
        }
        for n in 0..=6 {
            for shape in Shape::partitions(n) {
                if shape.len() > k {
                    continue;
                }
                let mut lambda = shape.parts().to_vec();
                lambda.resize(k, 0);
                let mut alternant = SymPoly::zero(k, big);
                for p in &perms {
                    let e: Vec<u32> = (0..k)
                        .map(|i| (lambda[p[i]] + k - 1 - p[i]) as u32)
                        .collect();
                    alternant = alternant
                        .add(&SymPoly::monomial(k, big, &e, perm_sign(p)).unwrap())
                        .unwrap();
                }
                let s = schur(&shape, k, big);
                assert_eq!(s.mul(&vandermonde).unwrap(), alternant, "{shape:?}");
            }
        }
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(
            hilbert_by_tableaux(2, 4).to_string(),
            "1 + t1*t2 + t1^2*t2^2"
        );
        for k in 2..=4 {
            let mut e = vec![0; k];
            e[0] = 1;
            e[1] = 1;
            assert_eq!(hilbert_by_tableaux(k, 4).coeff(&e), q(1));
        }
    }

    #[test]
    fn three_way_hilbert_agreement() {
        for k in 1..=3 {
            for maxdeg in 0..=8 {
                let cd = carini_drensky(k, maxdeg);
                assert_eq!(cd, hilbert_by_tableaux(k, maxdeg), "k={k} maxdeg={maxdeg}");
                assert_eq!(
                    cd,
                    hilbert_by_dimensions(k, maxdeg),
                    "k={k} maxdeg={maxdeg}"
                );
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&Content::new(vec![1, 1, 1, 1])), 3);
        assert_eq!(dimension(&Content::new(vec![2, 2, 2])), 0);
        assert_eq!(dimension(&Content::new(vec![3, 1])), 0);
        assert_eq!(dimension(&Content::new(vec![2, 2])), 1);
        assert_eq!(dimension(&Content::new(vec![1, 1, 1])), 0);
        assert_eq!(dimension(&Content::new(vec![])), 1);
        assert_eq!(dimension(&Content::new(vec![0, 2, 0, 1, 1])), 1);
        let s: Vec<u128> = (1..=5)
            .map(|s| dimension(&Content::multilinear(2 * s)))
            .collect();
        assert_eq!(s, [1, 3, 10, 35, 126]);
    }

    /// Every content vector with entries ≤ 3 and size ≤ `n`, on `k` symbols.
    fn contents(k: usize, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|c: Vec<usize>| {
                    (0..=3).filter_map(move |x| {
                        let mut d = c.clone();
                        d.push(x);
                        (d.iter().sum::<usize>() <= n).then_some(d)
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn dimension_counts_normal_arrays() {
        for c in contents(6, 8) {
            let content = Content::new(c.clone());
            assert_eq!(
                dimension(&content),
                enumerate_normal(&content).len() as u128,
                "{c:?}"
            );
            let mut reversed = c.clone();
            reversed.reverse();
            assert_eq!(dimension(&content), dimension(&Content::new(reversed)));
        }
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_coefficients(5);
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], q(1));
        for m in 1..=5 {
            assert_eq!(g[2 * m - 1], q(0));
            assert_eq!(
                g[2 * m],
                Q::from_integer(dimension(&Content::multilinear(2 * m)).into())
            );
        }
        assert_eq!(&g[..7], &[q(1), q(0), q(1), q(0), q(3), q(0), q(10)]);
    }

    #[test]
    fn tableau_counts_match_dimension() {
        for m in 0..=4 {
            let content = Content::multilinear(2 * m);
            let count = |conv| -> usize {
                two_column_shapes(2 * m as u32)
                    .iter()
                    .filter(|s| s.size() == 2 * m)
                    .map(|s| enumerate_ssyt(s, &content, conv).unwrap().len())
                    .sum()
            };
            let english = count(Convention::English);
            assert_eq!(english, count(Convention::French));
            assert_eq!(english as u128, dimension(&content));
        }
    }
}
