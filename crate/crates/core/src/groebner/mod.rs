//! Buchberger's algorithm and the ideal operations built on it.

mod engine;

use std::fmt;
use std::sync::{Arc, Mutex};

pub use engine::{buchberger, GroebnerBasis, Options};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{BlockKind, Monomial, MonomialOrder, Polynomial, Var, VarClass, VarUniverse};

/// An ideal given by generators, with reduced Gröbner bases cached per order.
pub struct Ideal<F: Field> {
    uni: Arc<VarUniverse>,
    gens: Vec<Polynomial<F>>,
    cache: Mutex<Vec<Arc<GroebnerBasis<F>>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            uni: self.uni.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gs: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gs.join(", "))
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; an empty list is the zero ideal.
    pub fn new(uni: &Arc<VarUniverse>, gens: Vec<Polynomial<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            uni: uni.clone(),
            gens,
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn zero(uni: &Arc<VarUniverse>) -> Self {
        Self::new(uni, Vec::new())
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        &self.uni
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The cached reduced Gröbner basis under `order`, computing it if needed.
    pub fn gb(&self, order: &MonomialOrder) -> Arc<GroebnerBasis<F>> {
        self.gb_with(order, &Options::default())
            .expect("uncapped Buchberger run")
    }

    pub fn gb_with(&self, order: &MonomialOrder, opts: &Options) -> Result<Arc<GroebnerBasis<F>>> {
        if opts.degree_limit.is_none() {
            if let Some(g) = self
                .cache
                .lock()
                .expect("cache lock")
                .iter()
                .find(|g| g.order() == order)
            {
                return Ok(g.clone());
            }
        }
        let g = Arc::new(buchberger(&self.uni, &self.gens, order, opts)?);
        if opts.degree_limit.is_none() {
            self.cache.lock().expect("cache lock").push(g.clone());
        }
        Ok(g)
    }

    pub fn normal_form(&self, p: &Polynomial<F>, order: &MonomialOrder) -> Polynomial<F> {
        self.gb(order).normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.gb(&MonomialOrder::grevlex()).contains(p)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        let g = self.gb(&MonomialOrder::grevlex());
        other.gens.iter().all(|p| g.contains(p))
    }

    pub fn is_unit(&self) -> bool {
        self.gb(&MonomialOrder::grevlex()).is_unit()
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.uni, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.uni, gens)
    }

    /// The same generators viewed in a larger universe.
    pub fn embed(&self, target: &Arc<VarUniverse>) -> Result<Ideal<F>> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(target))
            .collect::<Result<_>>()?;
        Ok(Ideal::new(target, gens))
    }

    /// Generators of the reduced Gröbner basis under `order`.
    pub fn reduced_gens(&self, order: &MonomialOrder) -> Vec<Polynomial<F>> {
        self.gb(order).polynomials()
    }
}

/// Equality of ideals via their reduced Gröbner bases under `order`.
pub fn ideal_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>, order: &MonomialOrder) -> bool {
    a.uni == b.uni && a.gb(order).same_ideal(&b.gb(order))
}

/// Polynomials of the reduced Gröbner basis of `ideal` (under a block order
/// with the classes `front` heaviest) that avoid those variables.
pub fn eliminate<F: Field>(
    ideal: &Ideal<F>,
    front: &[VarClass],
    opts: &Options,
) -> Result<Ideal<F>> {
    let order = MonomialOrder::elimination(front, BlockKind::DegRevLex, BlockKind::DegRevLex);
    eliminate_with(ideal, &order, front, opts)
}

pub fn eliminate_with<F: Field>(
    ideal: &Ideal<F>,
    order: &MonomialOrder,
    front: &[VarClass],
    opts: &Options,
) -> Result<Ideal<F>> {
    let g = ideal.gb_with(order, opts)?;
    let keep: Vec<Polynomial<F>> = g
        .polynomials()
        .into_iter()
        .filter(|p| !p.involves(|v| front.iter().any(|c| c.contains(v))))
        .collect();
    Ok(Ideal::new(&ideal.uni, keep))
}

/// `I ∩ J` by eliminating `u` from `u*I + (1 - u)*J`.
pub fn intersect<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    if a.uni != b.uni {
        return Err(Error::UniverseMismatch);
    }
    if a.uni.vars().iter().any(|v| matches!(v, Var::Aux(_))) {
        return Err(Error::InvalidArgument(
            "intersection needs a universe without auxiliary variables".into(),
        ));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(&a.uni));
    }
    let big = a.uni.with_aux(1);
    let u = Polynomial::var(&big, Var::Aux(1));
    let one_minus_u = &Polynomial::one(&big) - &u;
    let mut gens = Vec::with_capacity(a.gens.len() + b.gens.len());
    for g in &a.gens {
        gens.push(&u * &g.embed(&big)?);
    }
    for g in &b.gens {
        gens.push(&one_minus_u * &g.embed(&big)?);
    }
    let elim = eliminate(
        &Ideal::new(&big, gens),
        &[VarClass::Aux],
        &Options::default(),
    )?;
    let back = elim
        .gens
        .iter()
        .map(|g| g.embed(&a.uni))
        .collect::<Result<_>>()?;
    Ok(Ideal::new(&a.uni, back))
}

/// `I : f`, computed as `(I ∩ (f)) / f`.
pub fn colon<F: Field>(ideal: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("colon by zero".into()));
    }
    let principal = Ideal::new(&ideal.uni, vec![f.clone()]);
    let cap = intersect(ideal, &principal)?;
    let quotients = cap
        .gens
        .iter()
        .map(|g| {
            g.divide_exact(f)
                .unwrap_or_else(|| panic!("generator {g} of I ∩ (f) is not divisible by {f}"))
        })
        .collect();
    Ok(Ideal::new(&ideal.uni, quotients))
}

/// `I : J` as the intersection of the colons by the generators of `J`.
pub fn colon_ideal<F: Field>(ideal: &Ideal<F>, by: &Ideal<F>) -> Result<Ideal<F>> {
    let mut acc: Option<Ideal<F>> = None;
    for g in &by.gens {
        let c = colon(ideal, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::new(&ideal.uni, vec![Polynomial::one(&ideal.uni)])))
}

/// The ideal of leading monomials of the reduced Gröbner basis.
pub fn initial_ideal<F: Field>(ideal: &Ideal<F>, order: &MonomialOrder) -> Ideal<F> {
    let lms = ideal.gb(order).leading_monomials();
    Ideal::new(
        &ideal.uni,
        lms.into_iter()
            .map(|m| Polynomial::monomial(&ideal.uni, m))
            .collect(),
    )
}

/// Minimal generators of a monomial ideal given by monomials.
pub fn minimal_monomials(ms: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted: Vec<&Monomial> = ms.iter().collect();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.exps().cmp(a.exps())));
    for m in sorted {
        if !out.iter().any(|o| o.divides(m)) {
            out.push(m.clone());
        }
    }
    out.sort_by(|a, b| b.exps().cmp(a.exps()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::poly::parse_polynomial;

    fn ideal(u: &Arc<VarUniverse>, gens: &[&str]) -> Ideal<Q> {
        Ideal::new(
            u,
            gens.iter()
                .map(|s| parse_polynomial(u, s).unwrap())
                .collect(),
        )
    }

    fn p(u: &Arc<VarUniverse>, s: &str) -> Polynomial<Q> {
        parse_polynomial(u, s).unwrap()
    }

    const F12: &str = "x1*y2 - x2*y1";
    const F23: &str = "x2*y3 - x3*y2";

    #[test]
    fn normal_forms() {
        let u = VarUniverse::standard(3);
        let j = ideal(&u, &[F12, F23]);
        assert!(j.contains(&p(&u, F12)));
        assert_eq!(
            j.normal_form(&p(&u, "1"), &MonomialOrder::lex())
                .to_string(),
            "1"
        );
        let x1 = ideal(&u, &["x1"]);
        assert!(x1
            .normal_form(&p(&u, "x1*y2"), &MonomialOrder::lex())
            .is_zero());
    }

    #[test]
    fn equality() {
        let u = VarUniverse::standard(3);
        let lex = MonomialOrder::lex();
        assert!(ideal_equal(
            &ideal(&u, &[F12]),
            &ideal(&u, &["-x1*y2 + x2*y1"]),
            &lex
        ));
        let k3 = ideal(&u, &[F12, F23, "x1*y3 - x3*y1"]);
        assert!(!ideal_equal(&ideal(&u, &[F12, F23]), &k3, &lex));
    }

    #[test]
    fn intersections() {
        let u = VarUniverse::standard(3);
        let lex = MonomialOrder::lex();
        let i = ideal(&u, &[F12, F23]);
        assert!(ideal_equal(&intersect(&i, &i).unwrap(), &i, &lex));
        let xy = intersect(&ideal(&u, &["x1"]), &ideal(&u, &["y1"])).unwrap();
        assert!(ideal_equal(&xy, &ideal(&u, &["x1*y1"]), &lex));
        let prod = intersect(&ideal(&u, &[F12]), &ideal(&u, &[F23])).unwrap();
        let expected = Ideal::new(&u, vec![&p(&u, F12) * &p(&u, F23)]);
        assert!(ideal_equal(&prod, &expected, &lex));
    }

    #[test]
    fn colons() {
        let u = VarUniverse::standard(4);
        let lex = MonomialOrder::lex();
        let c = colon(&ideal(&u, &["x1*y2"]), &p(&u, "x1")).unwrap();
        assert!(ideal_equal(&c, &ideal(&u, &["y2"]), &lex));
        let c = colon(&ideal(&u, &["x1"]), &p(&u, "y1")).unwrap();
        assert!(ideal_equal(&c, &ideal(&u, &["x1"]), &lex));
        // Path 1-2-3-4 against the binomial of its end points.
        let jp = ideal(&u, &[F12, F23, "x3*y4 - x4*y3"]);
        let c = colon(&jp, &p(&u, "x1*y4 - x4*y1")).unwrap();
        let expected = ideal(&u, &[F12, F23, "x3*y4 - x4*y3", "y2*y3", "x2*y3", "x2*x3"]);
        assert!(ideal_equal(&c, &expected, &lex));
    }

    #[test]
    fn elimination() {
        let u = VarUniverse::rees(1, &[]);
        let i = ideal(&u, &["t - x1"]);
        assert!(eliminate(&i, &[VarClass::ReesT], &Options::default())
            .unwrap()
            .is_zero());
        let a = VarUniverse::standard(1).with_aux(1);
        let i = ideal(&a, &["u1*x1", "y1 - u1*y1"]);
        let e = eliminate(&i, &[VarClass::Aux], &Options::default()).unwrap();
        assert_eq!(
            e.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            ["x1*y1"]
        );
    }

    #[test]
    fn initial_ideals() {
        let u = VarUniverse::standard(3);
        let lex = MonomialOrder::lex();
        let ini = initial_ideal(&ideal(&u, &[F12, F23]), &lex);
        let names: Vec<String> = ini.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["x1*y2", "x2*y3"]);
        let ini = initial_ideal(&ideal(&u, &[F12, F23, "x1*y3 - x3*y1"]), &lex);
        assert!(ini.gens().iter().all(|g| g.terms()[0].0.is_squarefree()));
        let names: Vec<String> = ini.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["x1*y2", "x1*y3", "x2*y3"]);
    }

    #[test]
    fn minimal_monomial_generators() {
        let ms = [
            Monomial::from_slice(&[1, 1]),
            Monomial::from_slice(&[1, 0]),
            Monomial::from_slice(&[0, 2]),
        ];
        let min = minimal_monomials(&ms);
        assert_eq!(
            min,
            vec![Monomial::from_slice(&[1, 0]), Monomial::from_slice(&[0, 2])]
        );
    }
}
