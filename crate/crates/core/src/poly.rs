//! Sparse multivariate polynomials with rational coefficients over
//! commuting variables indexed by `u32`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Q;

/// A monomial as sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    pub fn powers(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.0.iter().find(|p| p.0 == v).map_or(0, |p| p.1)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

/// Canonical form: monomials sorted, no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: u32) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(v), Q::one());
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Formats with the given variable names, e.g. `U1*U2 + V1*V2`.
    pub fn display_with<F: Fn(u32) -> String>(&self, name: F) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let is_unit = abs.is_one();
            if !is_unit || m.0.is_empty() {
                let _ = write!(out, "{abs}");
                if !m.0.is_empty() {
                    out.push('*');
                }
            }
            for (k, &(v, e)) in m.0.iter().enumerate() {
                if k > 0 {
                    out.push('*');
                }
                out.push_str(&name(v));
                if e > 1 {
                    let _ = write!(out, "^{e}");
                }
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;
    use alloc::format;

    fn name(v: u32) -> String {
        format!("x{v}")
    }

    #[test]
    fn arithmetic_is_canonical() {
        let x = Poly::var(1);
        let y = Poly::var(2);
        let s = &x + &y;
        let d = &x - &y;
        let prod = &s * &d;
        // (x + y)(x - y) = x^2 - y^2
        assert_eq!(prod.display_with(name), "x1^2 - x2^2");
        assert!((&prod - &prod).is_zero());
        assert_eq!(
            (&s * &s).coeff(&Monomial(alloc::vec![(1, 1), (2, 1)])),
            q(2)
        );
        assert_eq!(
            Poly::constant(q(3)).scale(&Q::new(1.into(), 3.into())),
            Poly::one()
        );
        assert_eq!((-&x).display_with(name), "-x1");
        assert_eq!(Poly::zero().display_with(name), "0");
        assert_eq!(Poly::constant(q(-2)).display_with(name), "-2");
    }

    #[test]
    fn monomial_product_merges_exponents() {
        let a = Monomial(alloc::vec![(1, 2), (3, 1)]);
        let b = Monomial(alloc::vec![(2, 1), (3, 2)]);
        assert_eq!(a.mul(&b), Monomial(alloc::vec![(1, 2), (2, 1), (3, 3)]));
        assert_eq!(a.mul(&b).degree(), 6);
        assert_eq!(a.exponent(3), 1);
    }
}
