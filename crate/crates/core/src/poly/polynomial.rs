use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::universe::{Var, VarUniverse};

/// A sparse polynomial. Terms are kept sorted descending under the
/// universe's lexicographic order (which is plain comparison of exponent
/// vectors, given how universes index their variables), with no zero
/// coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    uni: Arc<VarUniverse>,
    terms: Vec<(Monomial, F)>,
}

fn canon_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps().cmp(b.exps())
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.uni, &other.uni) || self.uni == other.uni) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> std::hash::Hash for Polynomial<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(uni: &Arc<VarUniverse>) -> Self {
        Polynomial {
            uni: uni.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(uni: &Arc<VarUniverse>, c: F) -> Self {
        Self::term(uni, Monomial::one(uni.len()), c)
    }

    pub fn one(uni: &Arc<VarUniverse>) -> Self {
        Self::constant(uni, F::one())
    }

    pub fn term(uni: &Arc<VarUniverse>, m: Monomial, c: F) -> Self {
        debug_assert_eq!(m.nvars(), uni.len());
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial {
            uni: uni.clone(),
            terms,
        }
    }

    pub fn monomial(uni: &Arc<VarUniverse>, m: Monomial) -> Self {
        Self::term(uni, m, F::one())
    }

    /// The variable `v`. Panics if `v` is not in the universe.
    pub fn var(uni: &Arc<VarUniverse>, v: Var) -> Self {
        let idx = uni
            .index_of(v)
            .unwrap_or_else(|| panic!("variable {v} not in universe"));
        Self::monomial(uni, Monomial::var(uni.len(), idx, 1))
    }

    pub fn x(uni: &Arc<VarUniverse>, i: usize) -> Self {
        Self::var(uni, Var::X(i as u16))
    }

    pub fn y(uni: &Arc<VarUniverse>, i: usize) -> Self {
        Self::var(uni, Var::Y(i as u16))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(uni: &Arc<VarUniverse>, terms: Vec<(Monomial, F)>) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), uni.len());
            match acc.get_mut(&m) {
                Some(e) => *e = e.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| canon_cmp(&b.0, &a.0));
        Polynomial {
            uni: uni.clone(),
            terms,
        }
    }

    /// Terms already sorted descending and free of zeros and duplicates.
    pub(crate) fn from_sorted_terms(uni: &Arc<VarUniverse>, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| canon_cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            uni: uni.clone(),
            terms,
        }
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        &self.uni
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
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

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Maximum total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The common total degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    /// Leading term under `order`.
    pub fn leading(&self, order: &MonomialOrder) -> Option<&(Monomial, F)> {
        if order == &MonomialOrder::lex() {
            return self.terms.first();
        }
        let ord = order.compile(&self.uni);
        self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0))
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|t| canon_cmp(m, &t.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    fn same_universe(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.uni, &other.uni) || self.uni == other.uni
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !self.same_universe(other) {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        if !self.same_universe(other) {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_universe(other) {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match canon_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract {
                        b[j].1.neg()
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if subtract { c.neg() } else { c.clone() })),
        );
        Polynomial {
            uni: self.uni.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.uni);
        }
        let mut all = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                all.push((m1.mul(m2), c1.mul(c2)));
            }
        }
        Self::from_terms(&self.uni, all)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.uni);
        }
        Polynomial {
            uni: self.uni.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.uni);
        }
        // Multiplying by a monomial preserves the lexicographic order.
        Polynomial {
            uni: self.uni.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.uni);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Scales so that the lexicographically leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Exact quotient `self / f`, or `None` when `f` does not divide `self`.
    pub fn divide_exact(&self, f: &Self) -> Option<Self> {
        let (lm, lc) = f.terms.first()?;
        let lc_inv = lc.inv();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = lm.quotient_of(&m)?;
            let qc = c.mul(&lc_inv);
            rem = rem.merge(&f.mul_term(&q, &qc), true);
            quot.push((q, qc));
        }
        Some(Self::from_sorted_terms(&self.uni, quot))
    }

    /// Ring homomorphism: each variable is sent to `map(v)` (a polynomial in
    /// `target`), or to the variable of the same name in `target` when `map`
    /// returns `None`.
    pub fn substitute(
        &self,
        target: &Arc<VarUniverse>,
        map: impl Fn(Var) -> Option<Polynomial<F>>,
    ) -> Result<Self> {
        let images: Vec<Polynomial<F>> = self
            .uni
            .vars()
            .iter()
            .map(|&v| match map(v) {
                Some(p) if p.uni == *target => Ok(p),
                Some(_) => Err(Error::UniverseMismatch),
                None if target.contains(v) => Ok(Polynomial::var(target, v)),
                None => Err(Error::UnknownVariable(v.to_string())),
            })
            .collect::<Result<_>>()?;
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for i in m.support() {
                t = t.product(&images[i].pow(m.exp(i) as u32));
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// The same polynomial viewed in a universe containing all its variables.
    pub fn embed(&self, target: &Arc<VarUniverse>) -> Result<Self> {
        if Arc::ptr_eq(&self.uni, target) || self.uni == *target {
            return Ok(Polynomial {
                uni: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let map: Vec<Option<usize>> = self
            .uni
            .vars()
            .iter()
            .map(|&v| target.index_of(v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mm = m.remap(&map, target.len()).ok_or_else(|| {
                let v = m
                    .support()
                    .find(|&i| map[i].is_none())
                    .map(|i| self.uni.var(i));
                Error::UnknownVariable(v.map(|v| v.to_string()).unwrap_or_default())
            })?;
            terms.push((mm, c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Whether some term contains a variable satisfying `pred`.
    pub fn involves(&self, pred: impl Fn(Var) -> bool) -> bool {
        self.terms
            .iter()
            .any(|(m, _)| m.support().any(|i| pred(self.uni.var(i))))
    }

    /// Degree in the variables satisfying `pred`, if all terms agree.
    pub fn partial_degree(&self, pred: impl Fn(Var) -> bool) -> Option<u32> {
        let sel = self.uni.select(pred);
        let deg = |m: &Monomial| sel.iter().map(|&i| m.exp(i) as u32).sum::<u32>();
        let d = deg(&self.terms.first()?.0);
        self.terms.iter().all(|(m, _)| deg(m) == d).then_some(d)
    }
}

pub fn monomial_string(u: &VarUniverse, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let parts: Vec<String> = m
        .support()
        .map(|i| match m.exp(i) {
            1 => u.var(i).to_string(),
            e => format!("{}^{}", u.var(i), e),
        })
        .collect();
    parts.join("*")
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&monomial_string(&self.uni, m))?;
            } else {
                write!(f, "{}*{}", abs, monomial_string(&self.uni, m))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.checked_add(rhs).expect("universe mismatch")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.checked_sub(rhs).expect("universe mismatch")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.checked_mul(rhs).expect("universe mismatch")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            uni: self.uni.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};
    use proptest::prelude::*;

    fn f(u: &Arc<VarUniverse>, i: usize, j: usize) -> Polynomial<Q> {
        &(&Polynomial::x(u, i) * &Polynomial::y(u, j))
            - &(&Polynomial::x(u, j) * &Polynomial::y(u, i))
    }

    #[test]
    fn edge_binomial_prints_canonically() {
        let u = VarUniverse::standard(2);
        assert_eq!(f(&u, 1, 2).to_string(), "x1*y2 - x2*y1");
        assert_eq!((&f(&u, 1, 2) * &Polynomial::zero(&u)).to_string(), "0");
        assert!((&f(&u, 1, 2) + &(-&f(&u, 1, 2))).is_zero());
    }

    #[test]
    fn pluecker_relation_vanishes() {
        let u = VarUniverse::standard(4);
        let p = &(&(&f(&u, 3, 4) * &f(&u, 1, 2)) - &(&f(&u, 2, 4) * &f(&u, 1, 3)))
            + &(&f(&u, 2, 3) * &f(&u, 1, 4));
        assert!(p.is_zero());
    }

    #[test]
    fn substitution_into_rees_ring() {
        let r = VarUniverse::rees(4, &[(1, 2), (3, 4)]);
        let s = VarUniverse::standard(4);
        let delta = |v: Var| match v {
            Var::T(i, j) => Some(
                &f(&s, i as usize, j as usize).embed(&r).unwrap()
                    * &Polynomial::var(&r, Var::ReesT),
            ),
            _ => None,
        };
        let t12 = Polynomial::var(&r, Var::edge(1, 2));
        let img = t12.substitute(&r, delta).unwrap();
        assert_eq!(img.to_string(), "t*x1*y2 - t*x2*y1");

        let f12 = f(&s, 1, 2).embed(&r).unwrap();
        let f34 = f(&s, 3, 4).embed(&r).unwrap();
        let rel = &(&f12 * &Polynomial::var(&r, Var::edge(3, 4))) - &(&f34 * &t12);
        assert!(rel.substitute(&r, delta).unwrap().is_zero());
        assert_eq!(f12.substitute(&r, |_| None).unwrap(), f12);
    }

    #[test]
    fn exact_division() {
        let u = VarUniverse::standard(3);
        let a = f(&u, 1, 2);
        let b = f(&u, 2, 3);
        assert_eq!((&a * &b).divide_exact(&a).unwrap(), b);
        assert!(b.divide_exact(&a).is_none());
    }

    #[test]
    fn mismatched_universes_are_rejected() {
        let a = Polynomial::<Q>::x(&VarUniverse::standard(2), 1);
        let b = Polynomial::<Q>::x(&VarUniverse::standard(3), 1);
        assert_eq!(a.checked_add(&b), Err(Error::UniverseMismatch));
    }

    #[test]
    fn prime_field_display_uses_symmetric_coefficients() {
        let u = VarUniverse::standard(1);
        let p = Polynomial::<Fp>::x(&u, 1).scale(&Fp::new(32002));
        assert_eq!(p.to_string(), "-x1");
    }

    fn small_poly() -> impl Strategy<Value = Vec<(Vec<u16>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, 4), -3i64..4), 0..5)
    }

    fn build(u: &Arc<VarUniverse>, t: &[(Vec<u16>, i64)]) -> Polynomial<Q> {
        Polynomial::from_terms(
            u,
            t.iter()
                .map(|(e, c)| (Monomial::from_slice(e), Q::from_i64(*c)))
                .collect(),
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            let u = VarUniverse::standard(2);
            let (a, b, c) = (build(&u, &a), build(&u, &b), build(&u, &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }
    }
}
