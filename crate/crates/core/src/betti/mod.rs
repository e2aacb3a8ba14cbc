//! Graded Betti numbers of `S/J_G`: closed forms for trees and unicyclic
//! graphs, and a resolution oracle for arbitrary homogeneous ideals.

pub mod oracle;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::families::{complete, star};
use crate::graph::Graph;
use crate::groebner::Ideal;
use crate::poly::VarUniverse;
use crate::util::binomial;

pub use oracle::{
    CandidateCheck, Grading, ModuleElement, MultiDegree, OracleConfig, Resolution, ResolutionGen,
};

/// `(i, j) -> β_{i,j}(S/I)`, with a note per row on where it came from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
    origin: BTreeMap<usize, String>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores a count; zero counts are not stored.
    pub fn set(&mut self, i: usize, j: u32, count: u64) {
        if count == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), count);
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set_origin(&mut self, i: usize, origin: impl Into<String>) {
        self.origin.insert(i, origin.into());
    }

    pub fn origin(&self, i: usize) -> Option<&str> {
        self.origin.get(&i).map(|s| s.as_str())
    }

    /// Nonzero `(j, β_{i,j})` in row `i`.
    pub fn row(&self, i: usize) -> Vec<(u32, u64)> {
        self.entries
            .range((i, 0)..=(i, u32::MAX))
            .map(|(&(_, j), &c)| (j, c))
            .collect()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.row(i).iter().map(|(_, c)| c).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn max_level(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Only row `i`, keeping its origin note.
    pub fn only_row(&self, i: usize) -> BettiTable {
        let mut t = BettiTable::new();
        for (j, c) in self.row(i) {
            t.set(i, j, c);
        }
        if let Some(o) = self.origin(i) {
            t.set_origin(i, o);
        }
        t
    }

    /// Rows `i` and columns `j - i`, Macaulay2 style.
    pub fn to_macaulay(&self) -> String {
        let Some(top) = self.max_level() else {
            return "(empty)\n".into();
        };
        let shifts: Vec<i64> = self
            .entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .collect();
        let (lo, hi) = (*shifts.iter().min().unwrap(), *shifts.iter().max().unwrap());
        let mut grid: Vec<Vec<String>> = Vec::new();
        grid.push((0..=top).map(|i| i.to_string()).collect());
        grid.push((0..=top).map(|i| self.total(i).to_string()).collect());
        for r in lo..=hi {
            grid.push(
                (0..=top)
                    .map(|i| {
                        let j = r + i as i64;
                        match (j >= 0).then(|| self.get(i, j as u32)) {
                            Some(c) if c > 0 => c.to_string(),
                            _ => ".".into(),
                        }
                    })
                    .collect(),
            );
        }
        let widths: Vec<usize> = (0..=top)
            .map(|c| grid.iter().map(|row| row[c].len()).max().unwrap())
            .collect();
        let labels: Vec<String> = std::iter::once(String::new())
            .chain(std::iter::once("total:".to_string()))
            .chain((lo..=hi).map(|r| format!("{r}:")))
            .collect();
        let lw = labels.iter().map(|l| l.len()).max().unwrap();
        let mut out = String::new();
        for (label, row) in labels.iter().zip(&grid) {
            let mut line = format!("{label:>lw$}");
            for (cell, w) in row.iter().zip(&widths) {
                let _ = write!(line, " {cell:>w$}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// One `beta[i,j] = count` line per nonzero entry, then origin notes.
    pub fn to_key_values(&self) -> String {
        let mut out = String::new();
        for ((i, j), c) in self.entries() {
            let _ = writeln!(out, "beta[{i},{j}] = {c}");
        }
        for (i, o) in &self.origin {
            let _ = writeln!(out, "origin[{i}] = {o}");
        }
        out
    }
}

fn claw_sum(g: &Graph) -> u64 {
    g.vertices().map(|v| binomial(g.degree(v) as u64, 3)).sum()
}

/// The second row of the Betti table of `S/J_G` for trees and connected
/// unicyclic graphs.
pub fn closed_form_beta2(g: &Graph) -> Result<BettiTable> {
    let a = g.analyze();
    if !a.connected {
        return Err(Error::Disconnected);
    }
    let n = g.n() as u64;
    let mut t = BettiTable::new();
    if a.is_tree {
        if n < 2 {
            return Err(Error::Unsupported("a tree needs at least one edge".into()));
        }
        t.set(2, 4, binomial(n - 1, 2) + claw_sum(g));
        t.set_origin(2, "tree formula");
        return Ok(t);
    }
    if !a.is_unicyclic {
        return Err(Error::Unsupported(
            "closed forms cover trees and unicyclic graphs".into(),
        ));
    }
    let cycle = a.cycle_vertices.expect("unicyclic graph has a cycle");
    let m = cycle.len();
    let base = binomial(n, 2) + claw_sum(g);
    match m {
        3 => {
            let on_cycle: u64 = cycle.iter().map(|&v| g.degree(v) as u64).sum();
            t.set(2, 3, 2);
            t.set(2, 4, base + 3 - on_cycle);
            t.set_origin(2, "unicyclic girth 3 formula");
        }
        4 => {
            t.set(2, 4, base + 3);
            t.set_origin(2, "unicyclic girth 4 formula");
        }
        _ => {
            t.set(2, 4, base);
            t.set(2, m as u32, m as u64 - 1);
            t.set_origin(2, format!("unicyclic girth {m} formula"));
        }
    }
    Ok(t)
}

/// `β_{2,3}(S/J_G) = 2 k_3(G)`.
pub fn beta23(g: &Graph) -> u64 {
    2 * g.triangle_count() as u64
}

/// Finest grading of the ones we know under which every generator is
/// homogeneous: binomial-edge, then fine (monomial ideals), then standard.
pub fn best_grading<F: Field>(ideal: &Ideal<F>) -> Result<Grading> {
    let uni = ideal.universe();
    let homogeneous = |gr: &Grading| ideal.gens().iter().all(|g| gr.degree_of_poly(g).is_some());
    if ideal.gens().iter().all(|g| g.is_monomial()) {
        return Ok(Grading::fine(uni));
    }
    if let Ok(gr) = Grading::binomial_edge(uni) {
        if homogeneous(&gr) {
            return Ok(gr);
        }
    }
    let gr = Grading::standard(uni);
    if homogeneous(&gr) {
        Ok(gr)
    } else {
        let bad = ideal
            .gens()
            .iter()
            .find(|g| gr.degree_of_poly(g).is_none())
            .unwrap();
        Err(Error::NotHomogeneous(bad.to_string()))
    }
}

/// Box containing every Betti multidegree when the ideal has a squarefree
/// initial ideal (all binomial edge ideals, all squarefree monomial ideals):
/// multigraded Betti numbers can only drop under the Gröbner degeneration,
/// and those of a squarefree monomial ideal sit in squarefree degrees.
pub fn squarefree_box(grading: &Grading, uni: &VarUniverse) -> Option<MultiDegree> {
    let n = uni.n();
    if grading.dim() == uni.len() && grading == &Grading::fine(uni) {
        return Some(vec![1; uni.len()]);
    }
    if Grading::binomial_edge(uni).ok().as_ref() == Some(grading) {
        let mut b = vec![2u16; n + 1];
        b[n] = n as u16;
        return Some(b);
    }
    None
}

fn table_from<F: Field>(r: &Resolution<F>, j_max: u32) -> BettiTable {
    let mut t = BettiTable::new();
    t.set(0, 0, 1);
    for level in 1..=r.computed_levels() {
        for (j, c) in r.betti(level) {
            if j <= j_max {
                t.set(level, j, c);
            }
        }
        t.set_origin(level, format!("oracle, j <= {j_max}"));
    }
    t
}

/// Betti numbers of `S/I` for homological degrees up to `max_level` and
/// internal degrees up to `j_max`, by graded linear algebra only.
pub fn oracle_beta<F: Field>(ideal: &Ideal<F>, max_level: usize, j_max: u32) -> Result<BettiTable> {
    let r = oracle_resolution(ideal, max_level, j_max, false)?;
    Ok(table_from(&r, j_max))
}

/// As [`oracle_beta`], restricted to the squarefree box; valid for ideals
/// with a squarefree initial ideal.
pub fn oracle_beta_squarefree<F: Field>(
    ideal: &Ideal<F>,
    max_level: usize,
    j_max: u32,
) -> Result<BettiTable> {
    let r = oracle_resolution(ideal, max_level, j_max, true)?;
    Ok(table_from(&r, j_max))
}

pub fn oracle_resolution<F: Field>(
    ideal: &Ideal<F>,
    max_level: usize,
    j_max: u32,
    use_box: bool,
) -> Result<Resolution<F>> {
    let grading = best_grading(ideal)?;
    let box_bound = if use_box {
        squarefree_box(&grading, ideal.universe())
    } else {
        None
    };
    let config = OracleConfig {
        max_level,
        max_total_degree: j_max,
        box_bound,
    };
    Resolution::compute(ideal.universe(), ideal.gens(), grading, config)
}

/// Default internal-degree cap for the second row of `S/J_G`.
pub fn default_degree_cap(n: usize) -> u32 {
    (n as u32 + 1).max(6)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confidence {
    /// The region provably contains every Betti multidegree.
    Exact,
    /// No generator appeared in the two degrees past the bound.
    Estimate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdDepth {
    pub pd: usize,
    /// `2n - pd` by Auslander-Buchsbaum.
    pub depth: usize,
    pub confidence: Confidence,
    pub table: BettiTable,
}

/// Projective dimension and depth of `S/I` from a truncated resolution.
///
/// With `squarefree` set the squarefree box is used and the result is exact,
/// since the box then bounds every Betti multidegree. Otherwise the run is
/// repeated two degrees past `degree_bound`; any new generator there makes
/// the answer inconclusive.
pub fn pd_depth_oracle<F: Field>(
    ideal: &Ideal<F>,
    degree_bound: u32,
    hom_bound: usize,
    squarefree: bool,
) -> Result<PdDepth> {
    let nvars = ideal.universe().len();
    let finish = |r: &Resolution<F>, confidence| -> Result<PdDepth> {
        let pd = r.projective_dimension().ok_or_else(|| {
            Error::Inconclusive(format!(
                "no empty syzygy module up to homological degree {hom_bound}"
            ))
        })?;
        Ok(PdDepth {
            pd,
            depth: nvars - pd,
            confidence,
            table: table_from(r, u32::MAX),
        })
    };
    if squarefree {
        let grading = best_grading(ideal)?;
        let Some(bound) = squarefree_box(&grading, ideal.universe()) else {
            return Err(Error::InvalidArgument(
                "no squarefree box for this grading".into(),
            ));
        };
        let full = grading.total(&bound);
        let config = OracleConfig {
            max_level: hom_bound,
            max_total_degree: full,
            box_bound: Some(bound),
        };
        let r = Resolution::compute(ideal.universe(), ideal.gens(), grading, config)?;
        return finish(&r, Confidence::Exact);
    }
    let r = oracle_resolution(ideal, hom_bound, degree_bound + 2, false)?;
    let late =
        (1..=r.computed_levels()).any(|l| r.generators(l).iter().any(|g| g.total > degree_bound));
    if late {
        return Err(Error::Inconclusive(format!(
            "new generators appear past degree {degree_bound}"
        )));
    }
    finish(&r, Confidence::Estimate)
}

/// Checks `β_{i,j}(K_{1,n}) = β_{i,j}(K_{1,n-1}) + β_{i-1,j-2}(K_n)` for
/// `i <= 2` and all `j` up to the degree cap.
pub fn star_betti_recursion_check<F: Field>(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidArgument("star recursion needs n >= 3".into()));
    }
    let cap = 2 * n as u32 + 2;
    let big: BettiTable =
        oracle_beta_squarefree(&crate::beideal::binomial_edge_ideal::<F>(&star(n)), 2, cap)?;
    let small: BettiTable = oracle_beta_squarefree(
        &crate::beideal::binomial_edge_ideal::<F>(&star(n - 1)),
        2,
        cap,
    )?;
    let kn: BettiTable = oracle_beta_squarefree(
        &crate::beideal::binomial_edge_ideal::<F>(&complete(n)),
        1,
        cap,
    )?;
    Ok((1..=2).all(|i| (2..=cap).all(|j| big.get(i, j) == small.get(i, j) + kn.get(i - 1, j - 2))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beideal::binomial_edge_ideal;
    use crate::field::{Fp, Q};
    use crate::graph::families::*;
    use crate::groebner::initial_ideal;
    use crate::poly::{MonomialOrder, Polynomial};

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_beta2(&path(2)).unwrap().row(2), []);
        assert_eq!(closed_form_beta2(&star(3)).unwrap().row(2), [(4, 4)]);
        assert_eq!(closed_form_beta2(&cycle(4)).unwrap().row(2), [(4, 9)]);
        assert_eq!(
            closed_form_beta2(&cycle(6)).unwrap().row(2),
            [(4, 15), (6, 5)]
        );
        let tp = triangle_with_paths([1, 0, 0]);
        assert_eq!(closed_form_beta2(&tp).unwrap().row(2), [(3, 2), (4, 3)]);
        assert!(closed_form_beta2(&complete(4)).is_err());
        assert_eq!(beta23(&path(5)), 0);
        assert_eq!(beta23(&complete(3)), 2);
        assert_eq!(beta23(&triangle_with_paths([1, 2, 1])), 2);
    }

    #[test]
    fn macaulay_and_key_value_output() {
        let mut t = BettiTable::new();
        t.set(0, 0, 1);
        t.set(1, 2, 4);
        t.set(2, 4, 9);
        t.set(2, 3, 0);
        assert_eq!(
            t.to_macaulay(),
            "       0 1 2\ntotal: 1 4 9\n    0: 1 . .\n    1: . 4 .\n    2: . . 9\n"
        );
        t.set_origin(2, "oracle");
        assert_eq!(
            t.to_key_values(),
            "beta[0,0] = 1\nbeta[1,2] = 4\nbeta[2,4] = 9\norigin[2] = oracle\n"
        );
    }

    #[test]
    fn oracle_koszul_and_small_graphs() {
        let u = VarUniverse::standard(1);
        let i = Ideal::new(&u, vec![Polynomial::<Q>::x(&u, 1), Polynomial::y(&u, 1)]);
        let t = oracle_beta(&i, 2, 6).unwrap();
        assert_eq!(t.row(2), [(2, 1)]);

        let t = oracle_beta(&binomial_edge_ideal::<Q>(&path(4)), 2, 6).unwrap();
        assert_eq!(t.row(1), [(2, 3)]);
        assert_eq!(t.row(2), [(4, 3)]);
        let t = oracle_beta(&binomial_edge_ideal::<Fp>(&cycle(5)), 2, 6).unwrap();
        assert_eq!(t.row(2), [(4, 10), (5, 4)]);
    }

    #[test]
    fn box_restriction_changes_nothing_on_small_graphs() {
        for g in [
            star(3),
            cycle(4),
            triangle_with_paths([1, 0, 0]),
            complete(4),
        ] {
            let j = binomial_edge_ideal::<Fp>(&g);
            assert_eq!(
                oracle_beta(&j, 3, 8).unwrap(),
                oracle_beta_squarefree(&j, 3, 8).unwrap(),
                "{g:?}"
            );
        }
    }

    #[test]
    fn projective_dimension_examples() {
        let r = pd_depth_oracle(&binomial_edge_ideal::<Fp>(&path(3)), 6, 6, true).unwrap();
        assert_eq!((r.pd, r.depth, r.confidence), (2, 4, Confidence::Exact));
        let r = pd_depth_oracle(&binomial_edge_ideal::<Fp>(&path(3)), 6, 6, false).unwrap();
        assert_eq!((r.pd, r.confidence), (2, Confidence::Estimate));
        let r = pd_depth_oracle(&binomial_edge_ideal::<Fp>(&cycle(4)), 8, 9, true).unwrap();
        assert_eq!(r.depth, 4);
        let ini = initial_ideal(
            &binomial_edge_ideal::<Fp>(&chorded_path_inner(5)),
            &MonomialOrder::lex(),
        );
        let r = pd_depth_oracle(&ini, 10, 11, true).unwrap();
        assert!(r.pd <= 5);
    }

    #[test]
    fn star_recursion() {
        assert!(star_betti_recursion_check::<Fp>(3).unwrap());
        assert!(star_betti_recursion_check::<Fp>(4).unwrap());
    }
}
