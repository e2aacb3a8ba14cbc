//! Explicit minimal generators of the first syzygy module of `J_G` for trees
//! and unicyclic graphs, and their verification against the resolution oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::beideal::{binomial_edge_ideal_in, f_edge};
use crate::betti::{
    closed_form_beta2, default_degree_cap, oracle::Grading, ModuleElement, MultiDegree,
    OracleConfig, Resolution,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{Claw, Edge, Graph};
use crate::poly::{FreeVector, Monomial, Polynomial, Var, VarUniverse};

/// Position of `i` in the ascending order of `a`, starting at 1.
pub fn p_index(a: &[usize], i: usize) -> Result<usize> {
    if !a.contains(&i) {
        return Err(Error::InvalidArgument(format!("{i} is not in {a:?}")));
    }
    Ok(a.iter().filter(|&&j| j <= i).count())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SyzygyKind {
    KoszulPair,
    Claw,
    CycleB,
    LinearEn,
}

impl fmt::Display for SyzygyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SyzygyKind::KoszulPair => "koszul-pair",
            SyzygyKind::Claw => "claw",
            SyzygyKind::CycleB => "cycle-b",
            SyzygyKind::LinearEn => "linear-EN",
        })
    }
}

/// A syzygy `sum_e c_e e_e` on the edge binomials, coordinates kept in
/// construction order for printing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyGen<F: Field> {
    pub kind: SyzygyKind,
    pub label: String,
    pub coords: Vec<(Edge, Polynomial<F>)>,
    pub degree: u32,
}

impl<F: Field> SyzygyGen<F> {
    fn new(kind: SyzygyKind, label: String, coords: Vec<(Edge, Polynomial<F>)>) -> Self {
        let degree = coords
            .iter()
            .find(|(_, p)| !p.is_zero())
            .and_then(|(_, p)| p.homogeneous_degree())
            .map(|d| d + 2)
            .unwrap_or(0);
        SyzygyGen {
            kind,
            label,
            coords,
            degree,
        }
    }

    pub fn vector(&self) -> FreeVector<F, Edge> {
        let uni = self.coords[0].1.universe();
        let mut v = FreeVector::zero(uni);
        for (e, p) in &self.coords {
            v.add_at(*e, p);
        }
        v
    }

    /// `psi(sum c_e e_e) = sum c_e f_e`.
    pub fn psi(&self) -> Polynomial<F> {
        let uni = self.coords[0].1.universe().clone();
        self.coords
            .iter()
            .fold(Polynomial::zero(&uni), |acc, (e, p)| {
                &acc + &(p * &f_edge(&uni, *e))
            })
    }
}

fn signed<F: Field>(p: &Polynomial<F>) -> String {
    match p.terms().first() {
        Some((_, c)) if c.is_negative() && p.len() > 1 => format!("-({})", -p),
        _ => p.to_string(),
    }
}

impl<F: Field> fmt::Display for SyzygyGen<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|(e, p)| format!("e{e} <- {}", signed(p)))
            .collect();
        write!(f, "{}: {}", self.label, parts.join("; "))
    }
}

/// `f_{e1} e_{e2} - f_{e2} e_{e1}`.
pub fn koszul_pair<F: Field>(uni: &Arc<VarUniverse>, e1: Edge, e2: Edge) -> Result<SyzygyGen<F>> {
    if e1 == e2 {
        return Err(Error::EqualEdges);
    }
    let coords = vec![(e2, f_edge(uni, e1)), (e1, -&f_edge(uni, e2))];
    Ok(SyzygyGen::new(
        SyzygyKind::KoszulPair,
        format!("E[{e1},{e2}]"),
        coords,
    ))
}

/// The signed three-term relation of an induced claw centred at `i` with
/// leaves `j < k < l`.
pub fn claw_relation<F: Field>(uni: &Arc<VarUniverse>, c: &Claw) -> SyzygyGen<F> {
    let i = c.center;
    let mut leaves = c.leaves;
    leaves.sort_unstable();
    let [j, k, l] = leaves;
    let a = [i, j, k, l];
    let sign = |v: usize, p: Polynomial<F>| {
        if p_index(&a, v)
            .expect("vertex of the claw")
            .is_multiple_of(2)
        {
            p
        } else {
            -&p
        }
    };
    let coords = vec![
        (Edge::new(i, j), sign(j, f_edge(uni, Edge::new(k, l)))),
        (Edge::new(i, k), sign(k, f_edge(uni, Edge::new(j, l)))),
        (Edge::new(i, l), sign(l, f_edge(uni, Edge::new(j, k)))),
    ];
    SyzygyGen::new(SyzygyKind::Claw, format!("C[{i};{j},{k},{l}]"), coords)
}

/// Checked variant of [`claw_relation`] that confirms the claw is induced.
pub fn claw_relation_in<F: Field>(
    uni: &Arc<VarUniverse>,
    g: &Graph,
    c: &Claw,
) -> Result<SyzygyGen<F>> {
    let [a, b, d] = c.leaves;
    let spokes = c.leaves.iter().all(|&v| g.has_edge(c.center, v));
    let induced = !g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d);
    if !spokes || !induced {
        return Err(Error::NotAClaw(format!(
            "center {} leaves {:?}",
            c.center, c.leaves
        )));
    }
    Ok(claw_relation(uni, c))
}

/// The coordinates of `b_i` on the cycle `1, 2, .., m`: entries `1..m-1`
/// belong to the edges `{k,k+1}`, entry `m` to `{1,m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BVector {
    pub index: usize,
    pub coords: Vec<Monomial>,
}

/// `b_1, .., b_{m-1}` in a universe with at least `m` vertices.
pub fn b_vectors(uni: &Arc<VarUniverse>, m: usize) -> Result<Vec<BVector>> {
    if m < 4 || uni.n() < m {
        return Err(Error::InvalidArgument(format!(
            "b-vectors need 4 <= m <= n, got m = {m}"
        )));
    }
    let k = uni.len();
    let var = |idx: usize| Monomial::var(k, idx, 1);
    let y_all = (1..=m).fold(Monomial::one(k), |acc, v| acc.mul(&var(uni.y(v))));
    let divide = |a: &Monomial, b: &Monomial| {
        b.quotient_of(a).ok_or_else(|| {
            Error::InvalidArgument("inexact division in the b-vector recursion".into())
        })
    };
    let mut first = Vec::with_capacity(m);
    for c in 1..m {
        first.push(divide(&y_all, &var(uni.y(c)).mul(&var(uni.y(c + 1))))?);
    }
    first.push(divide(&y_all, &var(uni.y(1)).mul(&var(uni.y(m))))?);
    let mut out = vec![BVector {
        index: 1,
        coords: first,
    }];
    // (b_{i+1})_c from (b_i)_c, coordinates numbered from 1.
    for i in 1..m - 1 {
        let prev = &out[i - 1].coords;
        let swap = |c: usize, v: usize| divide(&prev[c - 1].mul(&var(uni.x(v))), &var(uni.y(v)));
        let mut next = Vec::with_capacity(m);
        for c in 1..=m {
            next.push(if c <= i {
                swap(c, i + 2)?
            } else if c == i + 1 {
                swap(c, 1)?
            } else {
                swap(c, i + 1)?
            });
        }
        out.push(BVector {
            index: i + 1,
            coords: next,
        });
    }
    Ok(out)
}

/// `sum_{k<m} (b_i)_k e_{k,k+1} - (b_i)_m e_{1,m}` on the cycle `1..m`.
pub fn cycle_b_generator<F: Field>(uni: &Arc<VarUniverse>, b: &BVector) -> SyzygyGen<F> {
    let m = b.coords.len();
    let mut coords: Vec<(Edge, Polynomial<F>)> = (1..m)
        .map(|c| {
            (
                Edge::new(c, c + 1),
                Polynomial::monomial(uni, b.coords[c - 1].clone()),
            )
        })
        .collect();
    coords.push((
        Edge::new(1, m),
        -&Polynomial::monomial(uni, b.coords[m - 1].clone()),
    ));
    SyzygyGen::new(SyzygyKind::CycleB, format!("B[{}]", b.index), coords)
}

/// The two linear Eagon-Northcott relations on a triangle `v1 < v2 < v3`.
pub fn linear_en<F: Field>(uni: &Arc<VarUniverse>, tri: [usize; 3]) -> [SyzygyGen<F>; 2] {
    let mut t = tri;
    t.sort_unstable();
    let [a, b, c] = t;
    let mk = |name: &str, v: &dyn Fn(usize) -> Polynomial<F>| {
        let coords = vec![
            (Edge::new(b, c), v(a)),
            (Edge::new(a, c), -&v(b)),
            (Edge::new(a, b), v(c)),
        ];
        SyzygyGen::new(
            SyzygyKind::LinearEn,
            format!("L[{name};{a},{b},{c}]"),
            coords,
        )
    };
    [
        mk("x", &|i| Polynomial::x(uni, i)),
        mk("y", &|i| Polynomial::y(uni, i)),
    ]
}

/// Applies the vertex map `sigma` to a generator, re-orienting edge
/// binomials so that coordinates stay attached to `f_{min,max}`.
fn relabel_gen<F: Field>(
    uni: &Arc<VarUniverse>,
    g: &SyzygyGen<F>,
    sigma: &[usize],
) -> SyzygyGen<F> {
    let map = |v: Var| match v {
        Var::X(i) => Some(Polynomial::x(uni, sigma[i as usize - 1])),
        Var::Y(i) => Some(Polynomial::y(uni, sigma[i as usize - 1])),
        _ => None,
    };
    let coords = g
        .coords
        .iter()
        .map(|(e, p)| {
            let (a, b) = (sigma[e.u - 1], sigma[e.v - 1]);
            let q = p.substitute(uni, map).expect("x/y universe");
            (Edge::new(a, b), if a > b { -&q } else { q })
        })
        .collect();
    SyzygyGen::new(g.kind, g.label.clone(), coords)
}

/// The cycle-b generators of a unicyclic graph, built on the cycle relabeled
/// to `1..m` in traversal order and mapped back.
fn cycle_generators<F: Field>(
    uni: &Arc<VarUniverse>,
    g: &Graph,
    cycle: &[usize],
) -> Result<Vec<SyzygyGen<F>>> {
    let n = g.n();
    let m = cycle.len();
    // sigma: new label -> original vertex.
    let mut sigma: Vec<usize> = cycle.to_vec();
    sigma.extend(g.vertices().filter(|v| !cycle.contains(v)));
    debug_assert_eq!(sigma.len(), n);
    let bs = b_vectors(uni, m)?;
    Ok(bs
        .iter()
        .map(|b| {
            let mut gen = relabel_gen(uni, &cycle_b_generator(uni, b), &sigma);
            gen.label = format!("B[{}]", b.index);
            gen
        })
        .collect())
}

/// A minimal generating set of the first syzygy module of `J_G`.
pub fn first_syzygy<F: Field>(g: &Graph) -> Result<Vec<SyzygyGen<F>>> {
    let a = g.analyze();
    if !a.connected {
        return Err(Error::Disconnected);
    }
    if !a.is_tree && !a.is_unicyclic {
        return Err(Error::Unsupported(
            "syzygy generators cover trees and unicyclic graphs".into(),
        ));
    }
    let uni = VarUniverse::standard(g.n());
    let edges = g.edges();
    let triangle: Vec<Edge> = match &a.cycle_vertices {
        Some(c) if c.len() == 3 => vec![
            Edge::new(c[0], c[1]),
            Edge::new(c[0], c[2]),
            Edge::new(c[1], c[2]),
        ],
        _ => Vec::new(),
    };
    let mut out = Vec::new();
    if triangle.len() == 3 {
        let c = a.cycle_vertices.as_ref().unwrap();
        out.extend(linear_en(&uni, [c[0], c[1], c[2]]));
    }
    for p in 0..edges.len() {
        for q in p + 1..edges.len() {
            if triangle.contains(&edges[p]) && triangle.contains(&edges[q]) {
                continue;
            }
            out.push(koszul_pair(&uni, edges[p], edges[q])?);
        }
    }
    for c in g.induced_claws() {
        out.push(claw_relation(&uni, &c));
    }
    if let Some(c) = &a.cycle_vertices {
        if c.len() >= 4 {
            out.extend(cycle_generators(&uni, g, c)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SyzygyReport {
    /// Labels of generators whose image under `psi` is nonzero.
    pub nonzero_images: Vec<String>,
    pub count: usize,
    pub expected_count: u64,
    /// `(multidegree, ours, oracle)` wherever the two disagree, or where ours
    /// fail to be independent modulo lower-degree syzygies.
    pub degree_mismatches: Vec<(MultiDegree, usize, usize)>,
    pub inhomogeneous: Vec<String>,
    pub oracle_total: usize,
}

impl SyzygyReport {
    pub fn psi_ok(&self) -> bool {
        self.nonzero_images.is_empty()
    }

    pub fn count_ok(&self) -> bool {
        self.count as u64 == self.expected_count
    }

    pub fn minimal_ok(&self) -> bool {
        self.degree_mismatches.is_empty()
            && self.inhomogeneous.is_empty()
            && self.count == self.oracle_total
    }

    pub fn passed(&self) -> bool {
        self.psi_ok() && self.count_ok() && self.minimal_ok()
    }
}

impl fmt::Display for SyzygyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "psi_zero = {}", self.psi_ok())?;
        writeln!(f, "count = {}", self.count)?;
        writeln!(f, "expected_count = {}", self.expected_count)?;
        writeln!(f, "oracle_count = {}", self.oracle_total)?;
        writeln!(f, "minimal = {}", self.minimal_ok())?;
        for l in &self.nonzero_images {
            writeln!(f, "nonzero_image = {l}")?;
        }
        for l in &self.inhomogeneous {
            writeln!(f, "inhomogeneous = {l}")?;
        }
        for (d, ours, oracle) in &self.degree_mismatches {
            writeln!(f, "mismatch {d:?}: ours {ours}, oracle {oracle}")?;
        }
        Ok(())
    }
}

/// Checks that every generator is a syzygy, that the count matches the
/// closed-form `β_2`, and that in every multidegree the generators are
/// independent modulo multiples of lower-degree syzygies and as many as the
/// oracle's minimal generators there.
pub fn verify_first_syzygy<F: Field>(g: &Graph, gens: &[SyzygyGen<F>]) -> Result<SyzygyReport> {
    let uni = VarUniverse::standard(g.n());
    let expected_count = closed_form_beta2(g)?.total(2);
    let mut report = SyzygyReport {
        count: gens.len(),
        expected_count,
        ..Default::default()
    };
    for s in gens {
        if !s.psi().is_zero() {
            report.nonzero_images.push(s.label.clone());
        }
    }
    let j = binomial_edge_ideal_in::<F>(&uni, g);
    let grading = Grading::binomial_edge(&uni)?;
    let mut bound = vec![2u16; g.n() + 1];
    bound[g.n()] = g.n() as u16;
    let max_deg = gens.iter().map(|s| s.degree).max().unwrap_or(0);
    let config = OracleConfig {
        max_level: 2,
        max_total_degree: default_degree_cap(g.n()).max(max_deg),
        box_bound: Some(bound),
    };
    let res = Resolution::compute(&uni, j.gens(), grading, config)?;
    report.oracle_total = res.generators(2).len();

    let position: BTreeMap<Edge, usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            (
                e,
                res.first_level_index(i)
                    .expect("edge binomials are minimal generators"),
            )
        })
        .collect();
    let mut by_degree: BTreeMap<MultiDegree, Vec<ModuleElement<F>>> = BTreeMap::new();
    for s in gens {
        let mut elem: ModuleElement<F> = Vec::new();
        for (e, p) in &s.coords {
            let Some(&gi) = position.get(e) else {
                report
                    .inhomogeneous
                    .push(format!("{} uses non-edge {e}", s.label));
                continue;
            };
            elem.extend(p.terms().iter().map(|(m, c)| (gi, m.clone(), c.clone())));
        }
        match res.element_degree(1, &elem) {
            Some(d) => by_degree.entry(d).or_default().push(elem),
            None => report.inhomogeneous.push(s.label.clone()),
        }
    }
    for (d, _) in res.multigraded(2) {
        by_degree.entry(d).or_default();
    }
    for (d, elems) in &by_degree {
        let check = res.check_candidates(2, d, elems);
        if !check.is_minimal_and_complete(elems.len()) {
            report
                .degree_mismatches
                .push((d.clone(), check.rank_modulo_lower, check.expected));
        }
    }
    Ok(report)
}
