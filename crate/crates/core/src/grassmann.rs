//! Exterior-algebra arithmetic and the superalgebra `M(1,1)` over it.
//!
//! A Grassmann element lives on a fixed number `g ≤ 64` of generators
//! `e_1, …, e_g`; a basis monomial `e_{i_1} ⋯ e_{i_k}` with `i_1 < … < i_k` is
//! stored as a bit mask. `M(1,1)` consists of 2×2 matrices `[a b; c d]` with
//! even diagonal and odd off-diagonal entries, and its supertrace is `a - d`.
//! Matrices of supertrace zero are a central even part `diag(a, a)` plus an
//! odd part `[0 b; c 0]`; candidate identities are evaluated on random
//! matrices of that form.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carray::TwoRowArray;
use crate::straighten::LinComb;
use crate::{q, Error, Result, Q};

const MAX_GENERATORS: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grassmann {
    generators: u32,
    terms: BTreeMap<u64, Q>,
}

/// Sign of `e_A · e_B` for disjoint masks: one factor `-1` for every pair
/// `i ∈ A`, `j ∈ B` with `i > j`.
fn merge_sign_is_negative(a: u64, b: u64) -> bool {
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        swaps += (a.checked_shr(j + 1).unwrap_or(0)).count_ones();
    }
    swaps % 2 == 1
}

impl Grassmann {
    pub fn zero(generators: u32) -> Result<Self> {
        if generators > MAX_GENERATORS {
            return Err(Error::TooManyGenerators(generators));
        }
        Ok(Grassmann {
            generators,
            terms: BTreeMap::new(),
        })
    }

    pub fn scalar(generators: u32, c: Q) -> Result<Self> {
        let mut out = Grassmann::zero(generators)?;
        out.add_term(0, c);
        Ok(out)
    }

    pub fn one(generators: u32) -> Result<Self> {
        Grassmann::scalar(generators, Q::one())
    }

    /// The generator `e_{index+1}` (zero-based `index`).
    pub fn generator(generators: u32, index: u32) -> Result<Self> {
        Grassmann::basis(generators, 1u64 << index.min(63), Q::one()).and_then(|g| {
            if index < generators {
                Ok(g)
            } else {
                Err(Error::GeneratorOutOfRange { index, generators })
            }
        })
    }

    /// `c · e_{i_1} ⋯ e_{i_k}` for indices in the given order (zero-based);
    /// the product is reordered with its sign, and vanishes on a repeat.
    pub fn monomial(generators: u32, indices: &[u32], c: Q) -> Result<Self> {
        let mut out = Grassmann::scalar(generators, c)?;
        for &i in indices {
            out = out.wedge(&Grassmann::generator(generators, i)?)?;
        }
        Ok(out)
    }

    fn basis(generators: u32, mask: u64, c: Q) -> Result<Self> {
        let mut out = Grassmann::zero(generators)?;
        out.add_term(mask, c);
        Ok(out)
    }

    pub fn generators(&self) -> u32 {
        self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Q)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coeff(&self, mask: u64) -> Q {
        self.terms.get(&mask).cloned().unwrap_or_else(Q::zero)
    }

    /// Every monomial has even degree (zero counts as even).
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    /// Every monomial has odd degree (zero counts as odd).
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 1)
    }

    fn add_term(&mut self, mask: u64, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    fn check(&self, other: &Grassmann) -> Result<()> {
        if self.generators == other.generators {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch {
                left: self.generators,
                right: other.generators,
            })
        }
    }

    pub fn wedge(&self, other: &Grassmann) -> Result<Grassmann> {
        self.check(other)?;
        let mut out = Grassmann::zero(self.generators)?;
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                let c = ca * cb;
                out.add_term(
                    ma | mb,
                    if merge_sign_is_negative(ma, mb) {
                        -c
                    } else {
                        c
                    },
                );
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Grassmann) -> Result<Grassmann> {
        self.check(other)?;
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Grassmann) -> Result<Grassmann> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Grassmann {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Grassmann {
        let mut out = Grassmann {
            generators: self.generators,
            terms: BTreeMap::new(),
        };
        for (&m, x) in &self.terms {
            out.add_term(m, x * c);
        }
        out
    }
}

impl fmt::Display for Grassmann {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&mask, c)) in self.terms.iter().enumerate() {
            let (negative, abs) = (c.is_negative(), c.abs());
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mask == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            let names: Vec<String> = (0..64)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| alloc::format!("e{}", b + 1))
                .collect();
            f.write_str(&names.join("^"))?;
        }
        Ok(())
    }
}

/// A 2×2 matrix `[a b; c d]` with `a, d` even and `b, c` odd.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct M11 {
    a: Grassmann,
    b: Grassmann,
    c: Grassmann,
    d: Grassmann,
}

impl M11 {
    pub fn new(a: Grassmann, b: Grassmann, c: Grassmann, d: Grassmann) -> Result<Self> {
        a.check(&b)?;
        a.check(&c)?;
        a.check(&d)?;
        if !(a.is_even() && d.is_even() && b.is_odd() && c.is_odd()) {
            return Err(Error::Parity);
        }
        Ok(M11 { a, b, c, d })
    }

    pub fn zero(generators: u32) -> Result<Self> {
        let z = Grassmann::zero(generators)?;
        Ok(M11 {
            a: z.clone(),
            b: z.clone(),
            c: z.clone(),
            d: z,
        })
    }

    /// `x · I` for even `x`.
    pub fn scalar(x: Grassmann) -> Result<Self> {
        let z = Grassmann::zero(x.generators)?;
        M11::new(x.clone(), z.clone(), z, x)
    }

    pub fn identity(generators: u32) -> Result<Self> {
        M11::scalar(Grassmann::one(generators)?)
    }

    /// `[0 b; c 0]`.
    pub fn antidiag(b: Grassmann, c: Grassmann) -> Result<Self> {
        let z = Grassmann::zero(b.generators)?;
        M11::new(z.clone(), b, c, z)
    }

    pub fn entries(&self) -> [&Grassmann; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn generators(&self) -> u32 {
        self.a.generators
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero())
    }

    /// `Some(x)` when the matrix is `x · I`.
    pub fn as_scalar(&self) -> Option<&Grassmann> {
        (self.b.is_zero() && self.c.is_zero() && self.a == self.d).then_some(&self.a)
    }

    pub fn supertrace(&self) -> Grassmann {
        self.a.sub(&self.d).expect("entries share generators")
    }

    pub fn mul(&self, o: &M11) -> Result<M11> {
        self.a.check(&o.a)?;
        let entry =
            |x: &Grassmann, y: &Grassmann, z: &Grassmann, w: &Grassmann| -> Result<Grassmann> {
                x.wedge(y)?.add(&z.wedge(w)?)
            };
        Ok(M11 {
            a: entry(&self.a, &o.a, &self.b, &o.c)?,
            b: entry(&self.a, &o.b, &self.b, &o.d)?,
            c: entry(&self.c, &o.a, &self.d, &o.c)?,
            d: entry(&self.c, &o.b, &self.d, &o.d)?,
        })
    }

    pub fn add(&self, o: &M11) -> Result<M11> {
        Ok(M11 {
            a: self.a.add(&o.a)?,
            b: self.b.add(&o.b)?,
            c: self.c.add(&o.c)?,
            d: self.d.add(&o.d)?,
        })
    }

    pub fn sub(&self, o: &M11) -> Result<M11> {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, k: &Q) -> M11 {
        M11 {
            a: self.a.scale(k),
            b: self.b.scale(k),
            c: self.c.scale(k),
            d: self.d.scale(k),
        }
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, o: &M11) -> Result<M11> {
        self.mul(o)?.sub(&o.mul(self)?)
    }
}

impl fmt::Display for M11 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {} ; {} | {}]", self.a, self.b, self.c, self.d)
    }
}

/// Evaluates `f_S = Π [x_{a_k}, x_{b_k}]` at supertrace-zero matrices.
pub fn eval_array(array: &TwoRowArray, assign: &BTreeMap<u32, M11>) -> Result<M11> {
    let generators = assign.values().next().map_or(0, M11::generators);
    let lookup = |x: u32| -> Result<&M11> {
        let w = assign.get(&x).ok_or(Error::Unassigned(x))?;
        if !w.supertrace().is_zero() {
            return Err(Error::NonzeroSupertrace(x));
        }
        Ok(w)
    };
    let mut out = M11::identity(generators)?;
    for &(a, b) in array.columns() {
        out = out.mul(&lookup(a)?.commutator(lookup(b)?)?)?;
    }
    Ok(out)
}

/// A proper polynomial to be tested as a weak identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Candidate {
    /// `[[x_1, x_2], x_3]`.
    C3,
    /// `[x_2, x_1][x_3, x_1][x_4, x_1]`.
    P,
    /// `[x_1, x_2]`, which is not an identity.
    Commutator,
    /// `Σ coeff · f_S`.
    Combination(Vec<(Q, TwoRowArray)>),
}

impl Candidate {
    /// `f_S - Σ α_i f_{S_i}` for `straighten(S) = Σ α_i S_i`.
    pub fn straightening_difference(array: &TwoRowArray, straightened: &LinComb) -> Self {
        let mut terms = alloc::vec![(Q::one(), array.clone())];
        terms.extend(
            straightened
                .iter()
                .map(|(s, c)| (-c.clone(), s.as_array().clone())),
        );
        Candidate::Combination(terms)
    }

    pub fn p_array() -> TwoRowArray {
        TwoRowArray::new(&[2, 3, 4], &[1, 1, 1]).expect("valid array")
    }

    /// Largest variable index used.
    pub fn variables(&self) -> u32 {
        match self {
            Candidate::C3 => 3,
            Candidate::P => 4,
            Candidate::Commutator => 2,
            Candidate::Combination(terms) => terms
                .iter()
                .flat_map(|(_, s)| s.reading_word())
                .max()
                .unwrap_or(0),
        }
    }

    /// Value at `x_i = values[i - 1]`.
    pub fn evaluate(&self, values: &[M11]) -> Result<M11> {
        let assign: BTreeMap<u32, M11> = (1u32..).zip(values.iter().cloned()).collect();
        let generators = values.first().map_or(0, M11::generators);
        match self {
            Candidate::C3 => {
                let w = |i: u32| assign.get(&i).ok_or(Error::Unassigned(i));
                w(1)?.commutator(w(2)?)?.commutator(w(3)?)
            }
            Candidate::P => eval_array(&Candidate::p_array(), &assign),
            Candidate::Commutator => eval_array(&TwoRowArray::new(&[1], &[2])?, &assign),
            Candidate::Combination(terms) => {
                let mut out = M11::zero(generators)?;
                for (c, s) in terms {
                    out = out.add(&eval_array(s, &assign)?.scale(c))?;
                }
                Ok(out)
            }
        }
    }
}

/// Random element of `{−3, …, 3}`-combinations of `count` distinct monomials
/// of each listed degree.
fn random_grassmann<R: Rng>(
    generators: u32,
    degrees: &[u32],
    count: usize,
    rng: &mut R,
) -> Grassmann {
    let mut out = Grassmann::zero(generators).expect("generator count checked");
    for &deg in degrees {
        if deg > generators {
            continue;
        }
        for _ in 0..count {
            let mut mask = 0u64;
            while mask.count_ones() < deg {
                mask |= 1 << rng.gen_range(0..generators);
            }
            out.add_term(mask, q(rng.gen_range(-3..=3)));
            if deg == 0 {
                break;
            }
        }
    }
    out
}

/// Random supertrace-zero matrix: `diag(a, a)` with `a` of degrees 0 and 2,
/// plus `[0 b; c 0]` with `b, c` of degrees 1 and 3.
pub fn random_w<R: Rng>(generators: u32, rng: &mut R) -> Result<M11> {
    Grassmann::zero(generators)?;
    let a = random_grassmann(generators, &[0, 2], 2, rng);
    let b = random_grassmann(generators, &[1, 3], 2, rng);
    let c = random_grassmann(generators, &[1, 3], 2, rng);
    M11::new(a.clone(), b, c, a)
}

/// Random `diag(a, a)` with `a` even; central in `M(1,1)`.
pub fn random_central<R: Rng>(generators: u32, rng: &mut R) -> Result<M11> {
    Grassmann::zero(generators)?;
    M11::scalar(random_grassmann(generators, &[0, 2], 2, rng))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Zero-based index of the failing sample.
    pub sample: usize,
    /// Values of `x_1, x_2, …`.
    pub assignment: Vec<M11>,
    pub value: M11,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub samples_run: usize,
    pub counterexample: Option<Counterexample>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Evaluates the candidate on `samples` seeded random supertrace-zero
/// substitutions and stops at the first nonzero value. Vanishing on samples
/// is evidence, not proof.
pub fn verify_weak_identity(
    candidate: &Candidate,
    samples: usize,
    generators: u32,
    seed: u64,
) -> Result<Verification> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = candidate.variables();
    for sample in 0..samples {
        let values = (0..n)
            .map(|_| random_w(generators, &mut rng))
            .collect::<Result<Vec<_>>>()?;
        let value = candidate.evaluate(&values)?;
        if !value.is_zero() {
            return Ok(Verification {
                samples_run: sample + 1,
                counterexample: Some(Counterexample {
                    sample,
                    assignment: values,
                    value,
                }),
            });
        }
    }
    Ok(Verification {
        samples_run: samples,
        counterexample: None,
    })
}

/// Outcome of evaluating `[x_{r+1}, x_r]² ⋯ [x_{2r}, x_1]²` at
/// `w_i = [0 u_i; v_i 0]` on distinct generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarCheck {
    pub r: u32,
    pub value: M11,
    /// The product `u_1 ⋯ u_{2r} v_1 ⋯ v_{2r}` in that order.
    pub monomial: Grassmann,
    /// `c` such that `value = c · monomial · I`, when it has that form.
    pub coefficient: Option<Q>,
}

impl ScalarCheck {
    /// True when the value is exactly `2^r · u_1 ⋯ u_{2r} v_1 ⋯ v_{2r} · I`.
    pub fn holds(&self) -> bool {
        self.coefficient == Some(q(1i64 << self.r))
    }
}

/// The array `[r+1 r+1 … 2r 2r; r r … 1 1]`.
pub fn doubled_array(r: u32) -> TwoRowArray {
    let columns = (1..=r).flat_map(|k| [(r + k, r + 1 - k); 2]).collect();
    TwoRowArray::from_columns(columns).expect("positive entries")
}

/// Uses `4r` generators: `u_i = e_i` and `v_i = e_{2r+i}`.
pub fn scalar_check(r: u32) -> Result<ScalarCheck> {
    let generators = 4 * r;
    let u = |i: u32| Grassmann::generator(generators, i - 1);
    let v = |i: u32| Grassmann::generator(generators, 2 * r + i - 1);
    let mut assign = BTreeMap::new();
    for i in 1..=2 * r {
        assign.insert(i, M11::antidiag(u(i)?, v(i)?)?);
    }
    let value = if r == 0 {
        M11::identity(0)?
    } else {
        eval_array(&doubled_array(r), &assign)?
    };
    let mut monomial = Grassmann::one(generators)?;
    for i in 1..=2 * r {
        monomial = monomial.wedge(&u(i)?)?;
    }
    for i in 1..=2 * r {
        monomial = monomial.wedge(&v(i)?)?;
    }
    let (mask, unit) = monomial
        .terms()
        .next()
        .map(|(m, c)| (m, c.clone()))
        .expect("nonzero monomial");
    let coefficient = value.as_scalar().and_then(|x| {
        let c = x.coeff(mask) / &unit;
        (monomial.scale(&c) == *x).then_some(c)
    });
    Ok(ScalarCheck {
        r,
        value,
        monomial,
        coefficient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::straighten::straighten;
    use alloc::format;

    fn e(g: u32, i: u32) -> Grassmann {
        Grassmann::generator(g, i - 1).unwrap()
    }

    #[test]
    fn wedge_examples() {
        let (e1, e2) = (e(4, 1), e(4, 2));
        let e12 = e1.wedge(&e2).unwrap();
        assert_eq!(e12.coeff(0b11), q(1));
        assert_eq!(e2.wedge(&e1).unwrap(), e12.neg());
        assert!(e1.wedge(&e1).unwrap().is_zero());
        assert_eq!(
            e1.wedge(&e(5, 1)),
            Err(Error::GeneratorMismatch { left: 4, right: 5 })
        );
        assert_eq!(
            format!("{}", e12.add(&Grassmann::scalar(4, q(2)).unwrap()).unwrap()),
            "2 + e1^e2"
        );
    }

    #[test]
    fn monomial_reorders_with_sign() {
        // e3 e1 e2 = e1 e2 e3
        assert_eq!(
            Grassmann::monomial(4, &[2, 0, 1], q(1))
                .unwrap()
                .coeff(0b111),
            q(1)
        );
        // e2 e1 e3 = -e1 e2 e3
        assert_eq!(
            Grassmann::monomial(4, &[1, 0, 2], q(1))
                .unwrap()
                .coeff(0b111),
            q(-1)
        );
        assert!(Grassmann::monomial(4, &[1, 1], q(1)).unwrap().is_zero());
    }

    #[test]
    fn wedge_is_associative_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let x = random_grassmann(8, &[0, 1, 2, 3], 2, &mut rng);
            let y = random_grassmann(8, &[1, 2], 2, &mut rng);
            let z = random_grassmann(8, &[0, 1, 3], 2, &mut rng);
            let left = x.wedge(&y).unwrap().wedge(&z).unwrap();
            let right = x.wedge(&y.wedge(&z).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn matrix_construction_and_supertrace() {
        let id = M11::identity(4).unwrap();
        assert!(id.supertrace().is_zero());
        assert_eq!(
            M11::new(e(4, 1), e(4, 2), e(4, 3), e(4, 4)),
            Err(Error::Parity)
        );
        // A = antidiag(e1, e2): A^2 = diag(e1 e2, e2 e1), str(A^2) = 2 e1 e2
        let a = M11::antidiag(e(4, 1), e(4, 2)).unwrap();
        let a2 = a.mul(&a).unwrap();
        let e12 = e(4, 1).wedge(&e(4, 2)).unwrap();
        assert_eq!(
            a2,
            M11::new(
                e12.clone(),
                Grassmann::zero(4).unwrap(),
                Grassmann::zero(4).unwrap(),
                e12.neg()
            )
            .unwrap()
        );
        assert_eq!(a2.supertrace(), e12.scale(&q(2)));
        // supertrace is additive
        let b = M11::antidiag(e(4, 3), e(4, 4)).unwrap();
        let sum = a2.add(&b).unwrap();
        assert_eq!(
            sum.supertrace(),
            a2.supertrace().add(&b.supertrace()).unwrap()
        );
    }

    #[test]
    fn eval_examples() {
        let g = 4;
        let mut assign = BTreeMap::new();
        assign.insert(1, M11::antidiag(e(g, 1), e(g, 2)).unwrap());
        assign.insert(2, M11::antidiag(e(g, 3), e(g, 4)).unwrap());
        let value = eval_array(&TwoRowArray::new(&[2], &[1]).unwrap(), &assign).unwrap();
        // [w2, w1] = (e3 e2 + e4 e1) I
        let expected = e(g, 3)
            .wedge(&e(g, 2))
            .unwrap()
            .add(&e(g, 4).wedge(&e(g, 1)).unwrap())
            .unwrap();
        assert_eq!(value.as_scalar(), Some(&expected));
        assert_eq!(
            eval_array(&TwoRowArray::empty(), &assign).unwrap(),
            M11::identity(g).unwrap()
        );
        assert_eq!(
            eval_array(&TwoRowArray::new(&[3], &[1]).unwrap(), &assign),
            Err(Error::Unassigned(3))
        );
        assign.insert(
            3,
            M11::new(
                e(g, 1).wedge(&e(g, 2)).unwrap(),
                Grassmann::zero(g).unwrap(),
                Grassmann::zero(g).unwrap(),
                Grassmann::zero(g).unwrap(),
            )
            .unwrap(),
        );
        assert_eq!(
            eval_array(&TwoRowArray::new(&[3], &[1]).unwrap(), &assign),
            Err(Error::NonzeroSupertrace(3))
        );
    }

    #[test]
    fn known_identities_vanish() {
        assert!(verify_weak_identity(&Candidate::C3, 30, 12, 1)
            .unwrap()
            .passed());
        assert!(verify_weak_identity(&Candidate::P, 10, 16, 1)
            .unwrap()
            .passed());
        let v = verify_weak_identity(&Candidate::Commutator, 100, 12, 1).unwrap();
        assert!(!v.passed());
        assert!(!v.counterexample.unwrap().value.is_zero());
    }

    #[test]
    fn commutators_are_central() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let w1 = random_w(12, &mut rng).unwrap();
            let w2 = random_w(12, &mut rng).unwrap();
            let w3 = random_w(12, &mut rng).unwrap();
            let c = w1.commutator(&w2).unwrap();
            assert!(c.as_scalar().is_some());
            assert!(c.commutator(&w3).unwrap().is_zero());
        }
    }

    #[test]
    fn central_parts_are_ignored() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let s = TwoRowArray::new(&[1, 3], &[2, 1]).unwrap();
        for _ in 0..10 {
            let mut assign = BTreeMap::new();
            let mut shifted = BTreeMap::new();
            for x in 1..=3 {
                let w = random_w(10, &mut rng).unwrap();
                shifted.insert(x, w.add(&random_central(10, &mut rng).unwrap()).unwrap());
                assign.insert(x, w);
            }
            assert_eq!(
                eval_array(&s, &assign).unwrap(),
                eval_array(&s, &shifted).unwrap()
            );
        }
    }

    #[test]
    fn straightening_is_sound_in_the_model() {
        let s = TwoRowArray::new(&[2, 4, 6], &[1, 3, 5]).unwrap();
        let cand = Candidate::straightening_difference(&s, &straighten(&s));
        assert!(verify_weak_identity(&cand, 5, 12, 5).unwrap().passed());
        // dropping a term breaks it
        let mut wrong = straighten(&s);
        let first = wrong.iter().next().map(|(a, _)| a.clone()).unwrap();
        wrong.add_term(first, q(1));
        let cand = Candidate::straightening_difference(&s, &wrong);
        assert!(!verify_weak_identity(&cand, 20, 12, 5).unwrap().passed());
    }

    #[test]
    fn scalar_check_values() {
        let zero = scalar_check(0).unwrap();
        assert_eq!(zero.value, M11::identity(0).unwrap());
        assert!(zero.holds());
        let two = scalar_check(2).unwrap();
        assert_eq!(two.coefficient, Some(q(4)));
        assert!(two.holds());
        assert_eq!(
            doubled_array(2),
            TwoRowArray::new(&[3, 3, 4, 4], &[2, 2, 1, 1]).unwrap()
        );
    }

    /// `[w_2, w_1] = (u_2 v_1 + v_2 u_1) I`, whose square is
    /// `2 u_2 v_1 v_2 u_1 = -2 u_1 u_2 v_1 v_2`.
    #[test]
    fn scalar_check_sign_for_one_pair() {
        let one = scalar_check(1).unwrap();
        assert_eq!(one.coefficient, Some(q(-2)));
        assert!(!one.holds());
    }
}
