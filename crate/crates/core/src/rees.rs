//! Rees algebras of binomial edge ideals: the linear part of the defining
//! ideal read off from first syzygies, the full defining ideal by
//! eliminating `t`, and the linear-type comparison.

use std::sync::Arc;

use crate::beideal::{binomial_edge_ideal_in, edge_binomial, f_edge};
use crate::betti::{squarefree_box, Grading, OracleConfig, Resolution};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{Edge, Graph};
use crate::groebner::{eliminate_with, ideal_equal, Ideal, Options};
use crate::poly::{BlockKind, MonomialOrder, Polynomial, Var, VarClass, VarUniverse};
use crate::syzygy::first_syzygy;

/// `K[x, y, T_e, t]` for the edges of `g`.
pub fn rees_universe(g: &Graph) -> Arc<VarUniverse> {
    VarUniverse::rees(g.n(), &g.edge_pairs())
}

/// `K[x, y, T_e]`, where the defining ideal lives.
pub fn symmetric_universe(g: &Graph) -> Arc<VarUniverse> {
    rees_universe(g).without_rees_t()
}

/// Order used to compare ideals in `S[T]`: edge variables heavier than
/// `x, y`, lex within each block.
pub fn comparison_order() -> MonomialOrder {
    MonomialOrder::elimination(&[VarClass::EdgeT], BlockKind::Lex, BlockKind::Lex)
}

/// Block order with `t` heaviest, graded reverse lex on the rest.
pub fn elimination_order() -> MonomialOrder {
    MonomialOrder::elimination(
        &[VarClass::ReesT],
        BlockKind::DegRevLex,
        BlockKind::DegRevLex,
    )
}

#[derive(Clone, Debug)]
pub struct ReesPresentation<F: Field> {
    pub universe: Arc<VarUniverse>,
    pub linear_generators: Vec<Polynomial<F>>,
    pub defining_ideal: Option<Ideal<F>>,
    pub linear_type: Option<bool>,
}

fn edge_var<F: Field>(uni: &Arc<VarUniverse>, e: Edge) -> Polynomial<F> {
    Polynomial::var(uni, Var::edge(e.u, e.v))
}

/// First syzygies of `J_G` with `e_{i,j}` replaced by `T_{i,j}`.
pub fn linear_rees_generators<F: Field>(g: &Graph) -> Result<Vec<Polynomial<F>>> {
    let uni = symmetric_universe(g);
    let gens = first_syzygy::<F>(g)?;
    gens.iter()
        .map(|s| {
            let mut acc = Polynomial::zero(&uni);
            for (e, c) in &s.coords {
                acc = &acc + &(&c.embed(&uni)? * &edge_var(&uni, *e));
            }
            Ok(acc)
        })
        .collect()
}

/// Linear generators for an arbitrary graph from the oracle's minimal first
/// syzygies of internal degree at most `j_max`.
pub fn oracle_rees_generators<F: Field>(g: &Graph, j_max: u32) -> Result<Vec<Polynomial<F>>> {
    let std = VarUniverse::standard(g.n());
    let j = binomial_edge_ideal_in::<F>(&std, g);
    let grading = Grading::binomial_edge(&std)?;
    let config = OracleConfig {
        max_level: 2,
        max_total_degree: j_max,
        box_bound: squarefree_box(&grading, &std),
    };
    let res = Resolution::compute(&std, j.gens(), grading, config)?;
    let uni = symmetric_universe(g);
    let edges = g.edges();
    let edge_of_level1: Vec<Edge> = res
        .generators(1)
        .iter()
        .map(|h| edges[h.source.expect("first-level generators come from inputs")])
        .collect();
    Ok(res
        .generators(2)
        .iter()
        .map(|s| {
            let terms: Vec<_> = s
                .image
                .iter()
                .map(|(gi, m, c)| {
                    let t = Polynomial::term(&std, m.clone(), c.clone())
                        .embed(&uni)
                        .expect("x/y embed");
                    &t * &edge_var(&uni, edge_of_level1[*gi])
                })
                .collect();
            terms.iter().fold(Polynomial::zero(&uni), |a, b| &a + b)
        })
        .collect())
}

/// `δ(p) = 0`, where `δ(T_{i,j}) = f_{i,j} t`.
pub fn delta_kernel_check<F: Field>(p: &Polynomial<F>) -> Result<bool> {
    let src = p.universe();
    let n = src.n();
    let edges: Vec<(usize, usize)> = src
        .vars()
        .iter()
        .filter_map(|v| match v {
            Var::T(i, j) => Some((*i as usize, *j as usize)),
            _ => None,
        })
        .collect();
    let target = VarUniverse::rees(n, &edges);
    let t = Polynomial::var(&target, Var::ReesT);
    let image = p.substitute(&target, |v| match v {
        Var::T(i, j) => {
            Some(&edge_binomial(&target, i as usize, j as usize).expect("edge variable") * &t)
        }
        _ => None,
    })?;
    Ok(image.is_zero())
}

/// `ker δ` as the `t`-free part of `(T_e - f_e t)` under an order with `t`
/// heaviest.
pub fn defining_ideal_by_elimination<F: Field>(g: &Graph, opts: &Options) -> Result<Ideal<F>> {
    let uni = rees_universe(g);
    let t = Polynomial::var(&uni, Var::ReesT);
    let gens: Vec<Polynomial<F>> = g
        .edges()
        .iter()
        .map(|&e| &edge_var(&uni, e) - &(&f_edge(&uni, e) * &t))
        .collect();
    let elim = eliminate_with(
        &Ideal::new(&uni, gens),
        &elimination_order(),
        &[VarClass::ReesT],
        opts,
    )
    .map_err(|e| match e {
        Error::Inconclusive(m) => Error::Inconclusive(format!("Rees elimination: {m}")),
        other => other,
    })?;
    elim.embed(&symmetric_universe(g))
}

#[derive(Clone, Debug)]
pub struct LinearTypeCertificate<F: Field> {
    pub linear_type: bool,
    pub linear_generators: Vec<Polynomial<F>>,
    pub kernel_generators: Vec<Polynomial<F>>,
    /// Largest standard degree among the kernel generators.
    pub kernel_degree: u32,
    /// A kernel generator outside the linear ideal.
    pub witness: Option<Polynomial<F>>,
    /// Reduced Gröbner bases of both ideals agree under `comparison_order`.
    /// Only computed when the truncated membership test finds no witness.
    pub gb_equal: Option<bool>,
}

/// Linear generators for `g`: the closed-form syzygies when the graph is a
/// tree or unicyclic, otherwise oracle syzygies up to internal degree `j_max`.
pub fn rees_linear_part<F: Field>(g: &Graph, j_max: u32) -> Result<Vec<Polynomial<F>>> {
    match linear_rees_generators::<F>(g) {
        Err(Error::Unsupported(_)) => oracle_rees_generators::<F>(g, j_max),
        other => other,
    }
}

/// Decides whether `ker δ` is generated by its `T`-linear part.
///
/// `ker δ` is bihomogeneous, hence homogeneous for the standard grading of
/// `S[T]`. If its generators have degree at most `D`, a Gröbner basis of
/// the linear ideal truncated at `D` decides `ker δ ⊆ L`, and only syzygies
/// of internal degree at most `D + 1` contribute to `L` in that range.
pub fn is_linear_type<F: Field>(g: &Graph, opts: &Options) -> Result<LinearTypeCertificate<F>> {
    let uni = symmetric_universe(g);
    let ker = defining_ideal_by_elimination::<F>(g, opts)?;
    let kernel_generators = ker.gens().to_vec();
    let mut kernel_degree = 0;
    for p in &kernel_generators {
        kernel_degree = kernel_degree.max(
            p.homogeneous_degree()
                .ok_or_else(|| Error::NotHomogeneous(p.to_string()))?,
        );
    }
    let linear_generators = rees_linear_part::<F>(g, kernel_degree + 1)?;
    for p in &linear_generators {
        if !delta_kernel_check(p)? {
            return Err(Error::InvalidArgument(format!(
                "linear generator {p} is not in ker δ"
            )));
        }
    }
    let lin = Ideal::new(&uni, linear_generators.clone());
    let trunc = Options {
        degree_limit: Some(kernel_degree),
        max_pairs: opts.max_pairs,
    };
    let gb = lin.gb_with(&MonomialOrder::grevlex(), &trunc)?;
    let witness = kernel_generators
        .iter()
        .find(|p| !gb.normal_form(p).is_zero())
        .cloned();
    let gb_equal = match witness {
        Some(_) => None,
        None => Some(ideal_equal(&lin, &ker, &comparison_order())),
    };
    Ok(LinearTypeCertificate {
        linear_type: witness.is_none(),
        linear_generators,
        kernel_generators,
        kernel_degree,
        witness,
        gb_equal,
    })
}

impl<F: Field> ReesPresentation<F> {
    /// Linear generators and, when `opts` let the elimination finish, the
    /// defining ideal with the linear-type verdict. Without the elimination,
    /// non-tree non-unicyclic graphs get oracle syzygies up to `j_max`.
    pub fn build(g: &Graph, opts: &Options, j_max: u32) -> Result<Self> {
        let universe = symmetric_universe(g);
        match is_linear_type::<F>(g, opts) {
            Ok(c) => Ok(ReesPresentation {
                universe: universe.clone(),
                linear_generators: c.linear_generators,
                defining_ideal: Some(Ideal::new(&universe, c.kernel_generators)),
                linear_type: Some(c.linear_type),
            }),
            Err(Error::Inconclusive(_)) => Ok(ReesPresentation {
                universe,
                linear_generators: rees_linear_part::<F>(g, j_max)?,
                defining_ideal: None,
                linear_type: None,
            }),
            Err(e) => Err(e),
        }
    }
}

/// A sign pattern for the quadratic element of the eight-vertex bipartite
/// example that fails: its image under `δ` is `-2 x1 f_{3,4} f_{6,8} t^2`.
pub const QUADRATIC_ELEMENT_ALT_SIGNS: &str =
    "x8*T[1,6]*T[3,4] - x6*T[1,8]*T[3,4] + x8*T[1,4]*T[3,6] \
     - x4*T[1,8]*T[3,6] - x6*T[1,4]*T[3,8] + x4*T[1,6]*T[3,8]";

/// The same element with the signs of the `T[3,6]` and `T[3,8]` groups
/// chosen so that `δ` sends it to `x1` times the Plücker relation among
/// `3, 4, 6, 8`.
pub const QUADRATIC_ELEMENT: &str = "x8*T[1,6]*T[3,4] - x6*T[1,8]*T[3,4] - x8*T[1,4]*T[3,6] \
     + x4*T[1,8]*T[3,6] + x6*T[1,4]*T[3,8] - x4*T[1,6]*T[3,8]";

pub fn quadratic_kernel_element<F: Field>(uni: &Arc<VarUniverse>) -> Result<Polynomial<F>> {
    crate::poly::parse_polynomial(uni, QUADRATIC_ELEMENT)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonLinearWitness {
    pub in_kernel: bool,
    /// Normal form against the linear ideal, truncated at the element's degree.
    pub in_linear_ideal: bool,
    pub linear_generators_used: usize,
}

impl NonLinearWitness {
    pub fn shows_non_linear_type(&self) -> bool {
        self.in_kernel && !self.in_linear_ideal
    }
}

/// Checks that `q` lies in `ker δ` but not in the ideal generated by the
/// linear generators. The linear ideal is homogeneous for the standard
/// grading of `S[T]`, so a Gröbner basis truncated at `deg q` decides
/// membership of `q`; only syzygies that can contribute in that degree are
/// needed.
pub fn non_linear_type_witness<F: Field>(g: &Graph, q: &Polynomial<F>) -> Result<NonLinearWitness> {
    let uni = symmetric_universe(g);
    if q.universe().vars() != uni.vars() {
        return Err(Error::UniverseMismatch);
    }
    let d = q
        .homogeneous_degree()
        .ok_or_else(|| Error::NotHomogeneous(q.to_string()))?;
    let in_kernel = delta_kernel_check(q)?;
    // A linear generator of syzygy degree j has standard degree j - 1 in S[T].
    let linear = rees_linear_part::<F>(g, d + 1)?;
    let used = linear.len();
    let lin = Ideal::new(&uni, linear);
    let opts = Options {
        degree_limit: Some(d),
        max_pairs: None,
    };
    let gb = lin.gb_with(&MonomialOrder::grevlex(), &opts)?;
    let in_linear_ideal = gb.normal_form(q).is_zero();
    Ok(NonLinearWitness {
        in_kernel,
        in_linear_ideal,
        linear_generators_used: used,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};
    use crate::graph::families::*;

    #[test]
    fn kernel_membership() {
        let g = path(4).with_edges([Edge::new(1, 4)]);
        let uni = symmetric_universe(&g);
        let f12 = f_edge::<Q>(&uni, Edge::new(1, 2));
        let f34 = f_edge::<Q>(&uni, Edge::new(3, 4));
        let koszul =
            &(&f12 * &edge_var(&uni, Edge::new(3, 4))) - &(&f34 * &edge_var(&uni, Edge::new(1, 2)));
        assert!(delta_kernel_check(&koszul).unwrap());
        assert!(!delta_kernel_check(&edge_var::<Q>(&uni, Edge::new(1, 2))).unwrap());
        let r = bipartite_eight();
        let ur = symmetric_universe(&r);
        let q: Polynomial<Q> = quadratic_kernel_element(&ur).unwrap();
        assert!(delta_kernel_check(&q).unwrap());
        let alt: Polynomial<Q> =
            crate::poly::parse_polynomial(&ur, QUADRATIC_ELEMENT_ALT_SIGNS).unwrap();
        assert!(!delta_kernel_check(&alt).unwrap());
        // δ(alt - q) = δ(alt) = -2 x1 f34 f68 t^2
        let u = rees_universe(&r);
        let t = Polynomial::<Q>::var(&u, Var::ReesT);
        let expected = &(&(&Polynomial::constant(&u, Q::from_i64(-2))
            * &Polynomial::var(&u, Var::X(1)))
            * &(&edge_binomial(&u, 3, 4).unwrap() * &edge_binomial(&u, 6, 8).unwrap()))
            * &(&t * &t);
        let image = alt
            .substitute(&u, |v| match v {
                Var::T(i, j) => Some(&edge_binomial(&u, i as usize, j as usize).unwrap() * &t),
                _ => None,
            })
            .unwrap();
        assert_eq!(image, expected);
    }

    #[test]
    fn linear_generator_counts() {
        assert_eq!(linear_rees_generators::<Q>(&cycle(4)).unwrap().len(), 9);
        assert_eq!(linear_rees_generators::<Q>(&path(4)).unwrap().len(), 3);
        assert_eq!(linear_rees_generators::<Q>(&star(3)).unwrap().len(), 4);
        for p in linear_rees_generators::<Q>(&cycle(5)).unwrap() {
            assert!(delta_kernel_check(&p).unwrap());
        }
    }

    #[test]
    fn elimination_small_cases() {
        let opts = Options::default();
        let e = defining_ideal_by_elimination::<Q>(&path(2), &opts).unwrap();
        assert!(e.is_zero());
        let k = defining_ideal_by_elimination::<Q>(&path(3), &opts).unwrap();
        let lin = Ideal::new(
            &symmetric_universe(&path(3)),
            linear_rees_generators::<Q>(&path(3)).unwrap(),
        );
        assert!(ideal_equal(&k, &lin, &comparison_order()));
        let c = is_linear_type::<Fp>(&star(3), &opts).unwrap();
        assert!(c.linear_type);
        assert_eq!(c.gb_equal, Some(true));
    }

    #[test]
    fn bipartite_eight_witness() {
        let g = bipartite_eight();
        let q: Polynomial<Fp> = quadratic_kernel_element(&symmetric_universe(&g)).unwrap();
        let w = non_linear_type_witness(&g, &q).unwrap();
        assert!(w.shows_non_linear_type(), "{w:?}");
    }
}
