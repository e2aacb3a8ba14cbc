//! Binomial edge ideals, their minimal primes, and closed-form colon and
//! initial ideals.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::families::{chorded_path_end, chorded_path_inner};
use crate::graph::{CutSet, Edge, Graph};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial, VarUniverse};

/// `f_{i,j} = x_i y_j - x_j y_i` with `i < j`.
pub fn edge_binomial<F: Field>(
    uni: &Arc<VarUniverse>,
    i: usize,
    j: usize,
) -> Result<Polynomial<F>> {
    if i == j {
        return Err(Error::LoopEdge(i));
    }
    let (a, b) = (i.min(j), i.max(j));
    for w in [a, b] {
        if w == 0 || w > uni.n() {
            return Err(Error::VertexOutOfRange(w, uni.n()));
        }
    }
    let xa_yb = &Polynomial::x(uni, a) * &Polynomial::y(uni, b);
    let xb_ya = &Polynomial::x(uni, b) * &Polynomial::y(uni, a);
    Ok(&xa_yb - &xb_ya)
}

pub fn f_edge<F: Field>(uni: &Arc<VarUniverse>, e: Edge) -> Polynomial<F> {
    edge_binomial(uni, e.u, e.v).expect("edge inside the universe")
}

/// Edge binomials of `g` in edge order.
pub fn edge_binomials<F: Field>(uni: &Arc<VarUniverse>, g: &Graph) -> Vec<Polynomial<F>> {
    g.edges().iter().map(|&e| f_edge(uni, e)).collect()
}

/// `J_G` in `K[x1..xn, y1..yn]`, generators in edge order.
pub fn binomial_edge_ideal<F: Field>(g: &Graph) -> Ideal<F> {
    let uni = VarUniverse::standard(g.n());
    binomial_edge_ideal_in(&uni, g)
}

pub fn binomial_edge_ideal_in<F: Field>(uni: &Arc<VarUniverse>, g: &Graph) -> Ideal<F> {
    Ideal::new(uni, edge_binomials(uni, g))
}

#[derive(Clone, Debug)]
pub struct PrimeComponent<F: Field> {
    pub cut_set: CutSet,
    pub ideal: Ideal<F>,
    pub height: usize,
}

/// `P_T(G)`: the variables of `T` together with the binomial edge ideals
/// of the complete graphs on the components of `G` minus `T`.
pub fn prime_component<F: Field>(
    uni: &Arc<VarUniverse>,
    g: &Graph,
    t: &[usize],
) -> PrimeComponent<F> {
    let mut t: Vec<usize> = t.to_vec();
    t.sort_unstable();
    t.dedup();
    let comps = g.components_without(&t);
    let mut gens = Vec::new();
    for &i in &t {
        gens.push(Polynomial::x(uni, i));
        gens.push(Polynomial::y(uni, i));
    }
    for c in &comps {
        for a in 0..c.len() {
            for b in a + 1..c.len() {
                gens.push(edge_binomial(uni, c[a], c[b]).expect("distinct vertices"));
            }
        }
    }
    let height = g.n() + t.len() - comps.len();
    PrimeComponent {
        cut_set: CutSet {
            vertices: t,
            components: comps.len(),
        },
        ideal: Ideal::new(uni, gens),
        height,
    }
}

#[derive(Clone, Debug)]
pub struct MinimalPrimes<F: Field> {
    pub components: Vec<PrimeComponent<F>>,
    pub height: usize,
    pub mu: usize,
}

impl<F: Field> MinimalPrimes<F> {
    pub fn is_complete_intersection(&self) -> bool {
        self.mu == self.height
    }

    pub fn is_aci_candidate(&self) -> bool {
        self.mu == self.height + 1
    }
}

/// Minimal primes (T empty or with the cut point property), the height of
/// `J_G` as the least height among them, and the generator count |E|.
pub fn minimal_primes_and_height<F: Field>(g: &Graph) -> Result<MinimalPrimes<F>> {
    let uni = VarUniverse::standard(g.n());
    let sets = g.cut_point_sets(g.n())?;
    let components: Vec<PrimeComponent<F>> = sets
        .iter()
        .map(|c| prime_component(&uni, g, &c.vertices))
        .collect();
    let height = components.iter().map(|c| c.height).min().unwrap_or(0);
    Ok(MinimalPrimes {
        components,
        height,
        mu: g.edge_count(),
    })
}

/// `x_{i1} ... x_{it} y_{i(t+1)} ... y_{is}` for the interior `i1..is` of a path.
fn path_monomial<F: Field>(uni: &Arc<VarUniverse>, interior: &[usize], t: usize) -> Polynomial<F> {
    let mut m = Monomial::one(uni.len());
    for (k, &v) in interior.iter().enumerate() {
        let idx = if k < t { uni.x(v) } else { uni.y(v) };
        m = m.mul(&Monomial::var(uni.len(), idx, 1));
    }
    Polynomial::monomial(uni, m)
}

/// Closed form of `J_{G \ e} : f_e`: the binomial edge ideal of `(G \ e)_e`
/// plus the monomials `g_{P,t}` over all paths `P` from `i` to `j` in `G \ e`.
pub fn fm_colon<F: Field>(g: &Graph, e: Edge) -> Result<Ideal<F>> {
    if !g.has_edge(e.u, e.v) {
        return Err(Error::NotAnEdge(e.u, e.v));
    }
    let uni = VarUniverse::standard(g.n());
    let h = g.without_edge(e);
    let closure = h.clique_complete_at_pair(e);
    let mut gens = edge_binomials(&uni, &closure);
    for p in h.simple_paths(e.u, e.v) {
        let interior = &p[1..p.len() - 1];
        for t in 0..=interior.len() {
            gens.push(path_monomial(&uni, interior, t));
        }
    }
    Ok(Ideal::new(&uni, gens))
}

/// Which of the two chorded-path families a graph belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChordFamily {
    /// Path `1..n` with chord `{2, n-1}`.
    Inner,
    /// Path `1..n` with chord `{2, n}`.
    End,
}

pub fn chord_family(g: &Graph) -> Option<ChordFamily> {
    let n = g.n();
    if n < 5 {
        return None;
    }
    if *g == chorded_path_inner(n) {
        Some(ChordFamily::Inner)
    } else if *g == chorded_path_end(n) {
        Some(ChordFamily::End)
    } else {
        None
    }
}

/// Closed-form lex initial ideal of `J_G` for the two chorded-path families,
/// read off from their admissible paths `i, i-1, .., 2, c, c-1, .., j`
/// where `c` is the far end of the chord.
pub fn admissible_initial<F: Field>(g: &Graph) -> Result<Ideal<F>> {
    let fam = chord_family(g).ok_or_else(|| {
        Error::NotInFamily("expected the path 1..n with chord {2,n-1} or {2,n}, n >= 5".into())
    })?;
    let n = g.n();
    let uni = VarUniverse::standard(n);
    let c = match fam {
        ChordFamily::Inner => n - 1,
        ChordFamily::End => n,
    };
    let var = |idx: usize| Monomial::var(uni.len(), idx, 1);
    let mut gens = Vec::new();
    for i in 1..n {
        gens.push(Polynomial::monomial(
            &uni,
            var(uni.x(i)).mul(&var(uni.y(i + 1))),
        ));
    }
    gens.push(Polynomial::monomial(
        &uni,
        var(uni.x(2)).mul(&var(uni.y(c))),
    ));
    let span = c - 3;
    for i in 2..=c {
        for j in i + 2..=(i + span).min(c) {
            let mut m = var(uni.x(i)).mul(&var(uni.y(j)));
            for v in j + 1..=c {
                m = m.mul(&var(uni.x(v)));
            }
            for v in 2..i {
                m = m.mul(&var(uni.y(v)));
            }
            gens.push(Polynomial::monomial(&uni, m));
        }
    }
    Ok(Ideal::new(&uni, gens))
}
