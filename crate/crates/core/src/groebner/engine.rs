use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{CompiledOrder, Monomial, MonomialOrder, Polynomial, VarUniverse};

type Term<F> = (Monomial, F);

/// Limits for a Buchberger run.
#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Skip S-pairs whose sugar degree exceeds this bound. For homogeneous
    /// input the result is then a Gröbner basis up to that degree.
    pub degree_limit: Option<u32>,
    /// Give up after this many S-pair reductions.
    pub max_pairs: Option<usize>,
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by leading
/// monomial (descending).
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    uni: Arc<VarUniverse>,
    order: MonomialOrder,
    compiled: CompiledOrder,
    polys: Vec<Vec<Term<F>>>,
    truncated_at: Option<u32>,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.uni == other.uni && self.order == other.order && self.polys == other.polys
    }
}

fn sort_terms<F: Field>(terms: &mut [Term<F>], ord: &CompiledOrder) {
    terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
}

/// `a - c * m * b`, all sorted descending under `ord`.
fn sub_mul<F: Field>(
    a: &[Term<F>],
    c: &F,
    m: &Monomial,
    b: &[Term<F>],
    ord: &CompiledOrder,
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Monomial> = b.first().map(|t| t.0.mul(m));
    while i < a.len() {
        let Some(bm) = bj.as_ref() else { break };
        match ord.cmp(&a[i].0, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm.clone(), c.mul(&b[j].1).neg()));
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let v = a[i].1.sub(&c.mul(&b[j].1));
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    while let Some(bm) = bj {
        out.push((bm, c.mul(&b[j].1).neg()));
        j += 1;
        bj = b.get(j).map(|t| t.0.mul(m));
    }
    out
}

fn make_monic<F: Field>(p: &mut [Term<F>]) {
    if let Some((_, lc)) = p.first() {
        if !lc.is_one() {
            let inv = lc.inv();
            for t in p.iter_mut() {
                t.1 = t.1.mul(&inv);
            }
        }
    }
}

/// Full reduction of `p` by the (monic) polynomials `basis`.
fn reduce<F: Field>(p: Vec<Term<F>>, basis: &[&[Term<F>]], ord: &CompiledOrder) -> Vec<Term<F>> {
    let mut rem: Vec<Term<F>> = Vec::new();
    let mut cur = p;
    let mut start = 0;
    while start < cur.len() {
        let (m, c) = &cur[start];
        let hit = basis.iter().find(|g| g[0].0.divides(m));
        match hit {
            Some(g) => {
                let q = g[0].0.quotient_of(m).expect("divisor");
                let coef = c.clone();
                cur = sub_mul(&cur[start + 1..], &coef, &q, &g[1..], ord);
                start = 0;
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    rem
}

struct Element<F: Field> {
    terms: Vec<Term<F>>,
    sugar: u32,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State<F: Field> {
    elems: Vec<Element<F>>,
    active: Vec<usize>,
    pairs: BTreeMap<(u32, u64), Pair>,
    seq: u64,
}

impl<F: Field> State<F> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.elems[i].terms[0].0
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let s = |k: usize| self.elems[k].sugar + lcm.degree() - self.lm(k).degree();
        s(i).max(s(j))
    }

    fn push_pair(&mut self, i: usize, j: usize, lcm: Monomial) {
        let sugar = self.pair_sugar(i, j, &lcm);
        self.seq += 1;
        self.pairs.insert((sugar, self.seq), Pair { i, j, lcm });
    }

    /// Inserts element `h` with the Gebauer-Möller installation of
    /// Buchberger's coprime and chain criteria.
    fn update(&mut self, h: usize) {
        let lh = self.lm(h).clone();
        let cands: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, self.lm(g).lcm(&lh)))
            .collect();
        let mut keep: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g, l)) in cands.iter().enumerate() {
            let coprime = self.lm(*g).is_coprime(&lh);
            let dominated = cands[k + 1..].iter().any(|(_, l2)| l2.divides(l))
                || keep.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                keep.push((*g, l.clone()));
            }
        }
        let old: Vec<((u32, u64), Pair)> = std::mem::take(&mut self.pairs).into_iter().collect();
        for (key, p) in old {
            let drop = lh.divides(&p.lcm)
                && self.lm(p.i).lcm(&lh) != p.lcm
                && self.lm(p.j).lcm(&lh) != p.lcm;
            if !drop {
                self.pairs.insert(key, p);
            }
        }
        for (g, l) in keep {
            if !self.lm(g).is_coprime(&lh) {
                self.push_pair(g, h, l);
            }
        }
        let elems = &self.elems;
        self.active.retain(|&g| !lh.divides(&elems[g].terms[0].0));
        self.active.push(h);
    }

    fn add(&mut self, terms: Vec<Term<F>>, sugar: u32) {
        self.elems.push(Element { terms, sugar });
        self.update(self.elems.len() - 1);
    }

    fn active_refs(&self) -> Vec<&[Term<F>]> {
        self.active
            .iter()
            .map(|&g| self.elems[g].terms.as_slice())
            .collect()
    }
}

pub(crate) fn to_terms<F: Field>(p: &Polynomial<F>, ord: &CompiledOrder) -> Vec<Term<F>> {
    let mut t: Vec<Term<F>> = p.terms().to_vec();
    sort_terms(&mut t, ord);
    t
}

pub(crate) fn from_terms<F: Field>(uni: &Arc<VarUniverse>, t: &[Term<F>]) -> Polynomial<F> {
    Polynomial::from_terms(uni, t.to_vec())
}

/// Buchberger's algorithm with the normal selection strategy (pairs taken
/// by increasing sugar degree, ties by creation order).
pub fn buchberger<F: Field>(
    uni: &Arc<VarUniverse>,
    gens: &[Polynomial<F>],
    order: &MonomialOrder,
    opts: &Options,
) -> Result<GroebnerBasis<F>> {
    let ord = order.compile(uni);
    let mut st = State {
        elems: Vec::new(),
        active: Vec::new(),
        pairs: BTreeMap::new(),
        seq: 0,
    };
    for g in gens {
        if g.universe() != uni {
            return Err(Error::UniverseMismatch);
        }
        if g.is_zero() {
            continue;
        }
        let sugar = g.degree().unwrap_or(0);
        let red = reduce(to_terms(g, &ord), &st.active_refs(), &ord);
        if red.is_empty() {
            continue;
        }
        let mut red = red;
        make_monic(&mut red);
        st.add(red, sugar);
    }
    let mut processed = 0usize;
    while let Some((&key, _)) = st.pairs.iter().next() {
        let pair = st.pairs.remove(&key).expect("present");
        if opts.degree_limit.is_some_and(|d| key.0 > d) {
            continue;
        }
        processed += 1;
        if opts.max_pairs.is_some_and(|cap| processed > cap) {
            return Err(Error::Inconclusive(format!(
                "Gröbner basis exceeded {} S-pair reductions",
                opts.max_pairs.unwrap_or(0)
            )));
        }
        let (a, b) = (&st.elems[pair.i].terms, &st.elems[pair.j].terms);
        let qa = a[0].0.quotient_of(&pair.lcm).expect("lcm");
        let qb = b[0].0.quotient_of(&pair.lcm).expect("lcm");
        // Both monic: S = qa*a - qb*b; the leading terms cancel.
        let sa: Vec<Term<F>> = a[1..]
            .iter()
            .map(|(m, c)| (m.mul(&qa), c.clone()))
            .collect();
        let s = sub_mul(&sa, &F::one(), &qb, &b[1..], &ord);
        let mut h = reduce(s, &st.active_refs(), &ord);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        st.add(h, key.0);
    }
    // The active set has pairwise non-dividing leading monomials; reduce tails.
    let mut basis: Vec<Vec<Term<F>>> = st
        .active
        .iter()
        .map(|&g| st.elems[g].terms.clone())
        .collect();
    basis.sort_by(|a, b| ord.cmp(&b[0].0, &a[0].0));
    for k in 0..basis.len() {
        let others: Vec<&[Term<F>]> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p.as_slice())
            .collect();
        let head = basis[k][0].clone();
        let tail = reduce(basis[k][1..].to_vec(), &others, &ord);
        let mut full = vec![head];
        full.extend(tail);
        basis[k] = full;
    }
    Ok(GroebnerBasis {
        uni: uni.clone(),
        order: order.clone(),
        compiled: ord,
        polys: basis,
        truncated_at: opts.degree_limit,
    })
}

impl<F: Field> GroebnerBasis<F> {
    pub fn universe(&self) -> &Arc<VarUniverse> {
        &self.uni
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Degree bound of a truncated computation, if any.
    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial<F>> {
        self.polys
            .iter()
            .map(|p| from_terms(&self.uni, p))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p[0].0.clone()).collect()
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let refs: Vec<&[Term<F>]> = self.polys.iter().map(|p| p.as_slice()).collect();
        let r = reduce(to_terms(p, &self.compiled), &refs, &self.compiled);
        from_terms(&self.uni, &r)
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Whether the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].len() == 1 && self.polys[0][0].0.is_one()
    }

    /// Same reduced basis (and therefore the same ideal).
    pub fn same_ideal(&self, other: &Self) -> bool {
        self.uni == other.uni && self.polys == other.polys
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::poly::parse_polynomial;

    fn p(u: &Arc<VarUniverse>, s: &str) -> Polynomial<Q> {
        parse_polynomial(u, s).unwrap()
    }

    fn gb(u: &Arc<VarUniverse>, gens: &[&str], order: &MonomialOrder) -> Vec<String> {
        let gens: Vec<_> = gens.iter().map(|s| p(u, s)).collect();
        buchberger(u, &gens, order, &Options::default())
            .unwrap()
            .polynomials()
            .iter()
            .map(|q| q.to_string())
            .collect()
    }

    #[test]
    fn already_reduced_basis_is_fixed() {
        let u = VarUniverse::standard(1);
        assert_eq!(gb(&u, &["x1", "y1"], &MonomialOrder::lex()), ["x1", "y1"]);
    }

    #[test]
    fn path_on_three_vertices() {
        // The leading terms x1*y2 and x2*y3 are coprime, so the generators
        // already form a Gröbner basis.
        let u = VarUniverse::standard(3);
        let out = gb(
            &u,
            &["x1*y2 - x2*y1", "x2*y3 - x3*y2"],
            &MonomialOrder::lex(),
        );
        assert_eq!(out, ["x1*y2 - x2*y1", "x2*y3 - x3*y2"]);
    }

    #[test]
    fn triangle_gains_a_cubic() {
        let u = VarUniverse::standard(3);
        let out = gb(
            &u,
            &["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"],
            &MonomialOrder::lex(),
        );
        // S(f12, f13) = y3*f12 - y2*f13 = -x2*y1*y3 + x3*y1*y2 = -y1*f23.
        assert_eq!(out, ["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y3 - x3*y2"]);
    }

    #[test]
    fn cycle_four_gains_admissible_path_terms() {
        let u = VarUniverse::standard(4);
        let gens = [
            "x1*y2 - x2*y1",
            "x2*y3 - x3*y2",
            "x3*y4 - x4*y3",
            "x1*y4 - x4*y1",
        ];
        let gens: Vec<_> = gens.iter().map(|s| p(&u, s)).collect();
        let g = buchberger(&u, &gens, &MonomialOrder::lex(), &Options::default()).unwrap();
        let lms: Vec<String> = g
            .leading_monomials()
            .iter()
            .map(|m| crate::poly::monomial_string(&u, m))
            .collect();
        // Edges plus the admissible paths 1-4-3 and 2-1-4.
        assert_eq!(
            lms,
            ["x1*x4*y3", "x1*y2", "x1*y4", "x2*y1*y4", "x2*y3", "x3*y4"]
        );
        let lms = g.leading_monomials();
        assert!(lms.iter().all(|m| m.is_squarefree()));
        for f in &gens {
            assert!(g.contains(f));
        }
    }

    #[test]
    fn generator_permutation_invariance() {
        let u = VarUniverse::standard(3);
        let gens = [
            "x1*y2 - x2*y1",
            "x1*y3 - x3*y1",
            "x2*y3 - x3*y2",
            "x1^2 - y3^2",
        ];
        let a: Vec<_> = gens.iter().map(|s| p(&u, s)).collect();
        let mut b = a.clone();
        b.reverse();
        for order in [MonomialOrder::lex(), MonomialOrder::grevlex()] {
            let ga = buchberger(&u, &a, &order, &Options::default()).unwrap();
            let gb = buchberger(&u, &b, &order, &Options::default()).unwrap();
            assert!(ga.same_ideal(&gb));
        }
    }

    #[test]
    fn pair_cap_reports_inconclusive() {
        let u = VarUniverse::standard(3);
        let gens: Vec<_> = ["x1^3 - y1*y2*y3", "x2^3 - y1^2*y3", "x1*x2*x3 - y2^3"]
            .iter()
            .map(|s| p(&u, s))
            .collect();
        let r = buchberger(
            &u,
            &gens,
            &MonomialOrder::lex(),
            &Options {
                degree_limit: None,
                max_pairs: Some(1),
            },
        );
        assert!(matches!(r, Err(Error::Inconclusive(_))));
    }
}
