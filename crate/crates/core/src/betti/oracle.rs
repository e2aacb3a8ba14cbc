//! Minimal graded free resolutions by linear algebra, one multidegree at a
//! time. Nothing here touches Gröbner bases: every kernel is a dense null
//! space over the active field, and minimal generators are extracted by rank
//! comparison against the multiples of lower-degree generators.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel, Echelon};
use crate::poly::{Monomial, Polynomial, Var, VarUniverse};

pub type MultiDegree = Vec<u16>;

/// A positive grading of the polynomial ring by `N^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    dim: usize,
    weights: Vec<MultiDegree>,
    /// Linear form recovering the standard degree from a multidegree.
    total: Vec<u16>,
}

impl Grading {
    pub fn standard(uni: &VarUniverse) -> Grading {
        Grading {
            dim: 1,
            weights: vec![vec![1]; uni.len()],
            total: vec![1],
        }
    }

    /// `x_i -> (e_i, 1)`, `y_i -> (e_i, 0)`: the finest grading under which
    /// every binomial edge ideal is homogeneous.
    pub fn binomial_edge(uni: &VarUniverse) -> Result<Grading> {
        let n = uni.n();
        let mut weights = Vec::with_capacity(uni.len());
        for &v in uni.vars() {
            let mut w = vec![0u16; n + 1];
            match v {
                Var::X(i) => {
                    w[i as usize - 1] = 1;
                    w[n] = 1;
                }
                Var::Y(i) => w[i as usize - 1] = 1,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "binomial edge grading needs an x/y universe, found {other}"
                    )))
                }
            }
            weights.push(w);
        }
        let mut total = vec![1u16; n + 1];
        total[n] = 0;
        Ok(Grading {
            dim: n + 1,
            weights,
            total,
        })
    }

    /// One coordinate per variable; suited to monomial ideals.
    pub fn fine(uni: &VarUniverse) -> Grading {
        let k = uni.len();
        let weights = (0..k)
            .map(|i| {
                let mut w = vec![0u16; k];
                w[i] = 1;
                w
            })
            .collect();
        Grading {
            dim: k,
            weights,
            total: vec![1; k],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree_of(&self, m: &Monomial) -> MultiDegree {
        let mut d = vec![0u16; self.dim];
        for idx in m.support() {
            let e = m.exp(idx);
            for (c, w) in d.iter_mut().zip(&self.weights[idx]) {
                *c += e * w;
            }
        }
        d
    }

    pub fn total(&self, d: &[u16]) -> u32 {
        d.iter()
            .zip(&self.total)
            .map(|(a, b)| *a as u32 * *b as u32)
            .sum()
    }

    /// The common multidegree of all terms, if `p` is homogeneous.
    pub fn degree_of_poly<F: Field>(&self, p: &Polynomial<F>) -> Option<MultiDegree> {
        let mut it = p.terms().iter().map(|(m, _)| self.degree_of(m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

fn leq(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minus(a: &[u16], b: &[u16]) -> MultiDegree {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Region of multidegrees to examine: a standard-degree cap and an optional
/// coordinatewise box. The computed Betti numbers are exact for every
/// multidegree in the region.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub max_level: usize,
    pub max_total_degree: u32,
    pub box_bound: Option<MultiDegree>,
}

/// One minimal generator of the `k`-th free module: its multidegree and
/// its image in the `(k-1)`-th module as `(generator, monomial, coefficient)`.
#[derive(Clone, Debug)]
pub struct ResolutionGen<F: Field> {
    pub degree: MultiDegree,
    pub total: u32,
    pub image: Vec<(usize, Monomial, F)>,
    /// Index of the input polynomial, for first-level generators.
    pub source: Option<usize>,
}

pub type ModuleElement<F> = Vec<(usize, Monomial, F)>;

#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    uni: Arc<VarUniverse>,
    grading: Grading,
    config: OracleConfig,
    /// `levels[0]` is the single generator of `S`.
    levels: Vec<Vec<ResolutionGen<F>>>,
    /// Input generators whose degree falls outside the region.
    pub skipped_inputs: usize,
}

struct MonomialCache {
    nvars: usize,
    weights: Vec<MultiDegree>,
    memo: HashMap<MultiDegree, Arc<Vec<Monomial>>>,
}

impl MonomialCache {
    fn get(&mut self, d: &[u16]) -> Arc<Vec<Monomial>> {
        if let Some(v) = self.memo.get(d) {
            return v.clone();
        }
        let mut out = Vec::new();
        let mut exps = vec![0u16; self.nvars];
        let mut rem = d.to_vec();
        self.fill(0, &mut rem, &mut exps, &mut out);
        let v = Arc::new(out);
        self.memo.insert(d.to_vec(), v.clone());
        v
    }

    fn fill(&self, idx: usize, rem: &mut [u16], exps: &mut [u16], out: &mut Vec<Monomial>) {
        if idx == self.nvars {
            if rem.iter().all(|&r| r == 0) {
                out.push(Monomial::from_slice(exps));
            }
            return;
        }
        let w = &self.weights[idx];
        let cap = w
            .iter()
            .zip(rem.iter())
            .filter(|(wc, _)| **wc > 0)
            .map(|(wc, r)| r / wc)
            .min()
            .unwrap_or(0);
        for e in (0..=cap).rev() {
            for (r, wc) in rem.iter_mut().zip(w) {
                *r -= e * wc;
            }
            exps[idx] = e;
            self.fill(idx + 1, rem, exps, out);
            for (r, wc) in rem.iter_mut().zip(w) {
                *r += e * wc;
            }
        }
        exps[idx] = 0;
    }
}

/// Basis `(generator, monomial)` of a free module in one multidegree.
struct GradedPiece {
    labels: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl GradedPiece {
    fn build<F: Field>(
        gens: &[ResolutionGen<F>],
        d: &[u16],
        cache: &mut MonomialCache,
    ) -> GradedPiece {
        let mut labels = Vec::new();
        for (gi, g) in gens.iter().enumerate() {
            if leq(&g.degree, d) {
                for m in cache.get(&minus(d, &g.degree)).iter() {
                    labels.push((gi, m.clone()));
                }
            }
        }
        let index = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        GradedPiece { labels, index }
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    fn dense<F: Field>(&self, terms: impl IntoIterator<Item = (usize, Monomial, F)>) -> Vec<F> {
        let mut v = vec![F::zero(); self.len()];
        for (g, m, c) in terms {
            let i = self.index[&(g, m)];
            v[i] = v[i].add(&c);
        }
        v
    }
}

fn shifted<'a, F: Field>(
    image: &'a [(usize, Monomial, F)],
    m: &Monomial,
) -> impl Iterator<Item = (usize, Monomial, F)> + 'a {
    let m = m.clone();
    image
        .iter()
        .map(move |(g, t, c)| (*g, t.mul(&m), c.clone()))
}

impl<F: Field> Resolution<F> {
    /// Resolves `S / (gens)` up to `config.max_level` inside the region.
    pub fn compute(
        uni: &Arc<VarUniverse>,
        gens: &[Polynomial<F>],
        grading: Grading,
        config: OracleConfig,
    ) -> Result<Resolution<F>> {
        let mut inputs: Vec<(usize, MultiDegree, &Polynomial<F>)> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            if **g.universe() != **uni {
                return Err(Error::UniverseMismatch);
            }
            let d = grading
                .degree_of_poly(g)
                .ok_or_else(|| Error::NotHomogeneous(g.to_string()))?;
            if grading.total(&d) == 0 {
                return Err(Error::InvalidArgument("unit ideal".into()));
            }
            inputs.push((i, d, g));
        }
        let region = Self::region(&grading, &config);
        let region_set: HashSet<&MultiDegree> = region.iter().collect();
        let skipped_inputs = inputs
            .iter()
            .filter(|(_, d, _)| !region_set.contains(d))
            .count();

        let mut cache = MonomialCache {
            nvars: uni.len(),
            weights: grading.weights.clone(),
            memo: HashMap::new(),
        };
        let base = ResolutionGen {
            degree: vec![0; grading.dim],
            total: 0,
            image: Vec::new(),
            source: None,
        };
        let mut levels = vec![vec![base]];
        for k in 1..=config.max_level {
            if levels[k - 1].is_empty() {
                break;
            }
            let mut found: Vec<ResolutionGen<F>> = Vec::new();
            for d in &region {
                let total = grading.total(d);
                let piece = GradedPiece::build(&levels[k - 1], d, &mut cache);
                if piece.len() == 0 {
                    continue;
                }
                let mut ech = Echelon::new(piece.len());
                for h in found
                    .iter()
                    .filter(|h| h.total < total && leq(&h.degree, d))
                {
                    for m in cache.get(&minus(d, &h.degree)).iter() {
                        ech.insert(piece.dense(shifted(&h.image, m)));
                        if ech.is_full() {
                            break;
                        }
                    }
                }
                let candidates: Vec<(Option<usize>, Vec<F>)> = if k == 1 {
                    inputs
                        .iter()
                        .filter(|(_, gd, _)| gd == d)
                        .map(|(i, _, g)| {
                            let v = piece
                                .dense(g.terms().iter().map(|(m, c)| (0, m.clone(), c.clone())));
                            (Some(*i), v)
                        })
                        .collect()
                } else {
                    if ech.is_full() {
                        continue;
                    }
                    let target = GradedPiece::build(&levels[k - 2], d, &mut cache);
                    let prev = &levels[k - 1];
                    let cols: Vec<Vec<F>> = piece
                        .labels
                        .iter()
                        .map(|(g, m)| target.dense(shifted(&prev[*g].image, m)))
                        .collect();
                    let ker = kernel(target.len(), &cols);
                    if ker.len() == ech.rank() {
                        continue;
                    }
                    ker.into_iter().map(|v| (None, v)).collect()
                };
                for (source, v) in candidates {
                    if ech.insert(v.clone()) {
                        let image = v
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(i, c)| {
                                let (g, m) = piece.labels[i].clone();
                                (g, m, c)
                            })
                            .collect();
                        found.push(ResolutionGen {
                            degree: d.clone(),
                            total,
                            image,
                            source,
                        });
                    }
                }
            }
            levels.push(found);
        }
        Ok(Resolution {
            uni: uni.clone(),
            grading,
            config,
            levels,
            skipped_inputs,
        })
    }

    /// All multidegrees in the region, by increasing standard degree.
    fn region(grading: &Grading, config: &OracleConfig) -> Vec<MultiDegree> {
        let zero = vec![0u16; grading.dim];
        let mut seen: HashSet<MultiDegree> = HashSet::new();
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(d) = frontier.pop() {
            for w in &grading.weights {
                let e: MultiDegree = d.iter().zip(w).map(|(a, b)| a + b).collect();
                if grading.total(&e) > config.max_total_degree {
                    continue;
                }
                if let Some(b) = &config.box_bound {
                    if !leq(&e, b) {
                        continue;
                    }
                }
                if seen.insert(e.clone()) {
                    frontier.push(e);
                }
            }
        }
        let mut out: Vec<MultiDegree> = seen.into_iter().collect();
        out.sort_by(|a, b| grading.total(a).cmp(&grading.total(b)).then(a.cmp(b)));
        out
    }

    pub fn universe(&self) -> &Arc<VarUniverse> {
        &self.uni
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn config(&self) -> &OracleConfig {
        &self.config
    }

    /// Number of computed levels beyond `S` itself.
    pub fn computed_levels(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn generators(&self, level: usize) -> &[ResolutionGen<F>] {
        self.levels.get(level).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Largest level with a generator, provided some computed level is empty.
    pub fn projective_dimension(&self) -> Option<usize> {
        let last_empty = self.levels.iter().position(|l| l.is_empty())?;
        Some(last_empty - 1)
    }

    /// `β_{i,j}(S/I)` for every computed level, standard-graded.
    pub fn betti(&self, level: usize) -> Vec<(u32, u64)> {
        let mut counts: std::collections::BTreeMap<u32, u64> = Default::default();
        for g in self.generators(level) {
            *counts.entry(g.total).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// Multigraded counts at one level.
    pub fn multigraded(&self, level: usize) -> Vec<(MultiDegree, u64)> {
        let mut counts: std::collections::BTreeMap<MultiDegree, u64> = Default::default();
        for g in self.generators(level) {
            *counts.entry(g.degree.clone()).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// First-level generator built from the given input polynomial.
    pub fn first_level_index(&self, source: usize) -> Option<usize> {
        self.generators(1)
            .iter()
            .position(|g| g.source == Some(source))
    }

    /// Multidegree of a homogeneous element of the free module at `level`.
    pub fn element_degree(&self, level: usize, elem: &ModuleElement<F>) -> Option<MultiDegree> {
        let gens = self.generators(level);
        let mut it = elem
            .iter()
            .filter(|(_, _, c)| !c.is_zero())
            .map(|(g, m, _)| {
                let d = self.grading.degree_of(m);
                d.iter()
                    .zip(&gens[*g].degree)
                    .map(|(a, b)| a + b)
                    .collect::<MultiDegree>()
            });
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Image of an element of the free module at `level` in the module one below.
    pub fn apply_differential(&self, level: usize, elem: &ModuleElement<F>) -> ModuleElement<F> {
        let gens = self.generators(level);
        let mut acc: HashMap<(usize, Monomial), F> = HashMap::new();
        for (g, m, c) in elem {
            for (h, t, a) in shifted(&gens[*g].image, m) {
                let e = acc.entry((h, t)).or_insert_with(F::zero);
                *e = e.add(&c.mul(&a));
            }
        }
        let mut out: ModuleElement<F> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((h, t), c)| (h, t, c))
            .collect();
        out.sort_by(|a, b| (a.0, a.1.exps()).cmp(&(b.0, b.1.exps())));
        out
    }

    /// Compares candidate elements of the free module at `level - 1`, all in
    /// multidegree `d`, with the oracle's own generators at `level`.
    pub fn check_candidates(
        &self,
        level: usize,
        d: &[u16],
        candidates: &[ModuleElement<F>],
    ) -> CandidateCheck {
        assert!(level >= 1 && level <= self.computed_levels());
        let mut cache = MonomialCache {
            nvars: self.uni.len(),
            weights: self.grading.weights.clone(),
            memo: HashMap::new(),
        };
        let total = self.grading.total(d);
        let in_kernel = level == 1
            || candidates
                .iter()
                .all(|c| self.apply_differential(level - 1, c).is_empty());
        let piece = GradedPiece::build(&self.levels[level - 1], d, &mut cache);
        let mut ech = Echelon::new(piece.len());
        for h in self.levels[level]
            .iter()
            .filter(|h| h.total < total && leq(&h.degree, d))
        {
            for m in cache.get(&minus(d, &h.degree)).iter() {
                ech.insert(piece.dense(shifted(&h.image, m)));
            }
        }
        let lower = ech.rank();
        let homogeneous = candidates
            .iter()
            .all(|c| self.element_degree(level - 1, c).as_deref() == Some(d));
        if homogeneous {
            for c in candidates {
                ech.insert(piece.dense(c.iter().cloned()));
            }
        }
        let expected = self.levels[level].iter().filter(|h| h.degree == d).count();
        CandidateCheck {
            in_kernel,
            homogeneous,
            rank_modulo_lower: ech.rank() - lower,
            expected,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CandidateCheck {
    pub in_kernel: bool,
    pub homogeneous: bool,
    /// Rank of the candidates modulo multiples of lower-degree generators.
    pub rank_modulo_lower: usize,
    /// Number of minimal generators the oracle found in this multidegree.
    pub expected: usize,
}

impl CandidateCheck {
    /// The candidates form part of a minimal generating set and account for
    /// every minimal generator in this multidegree.
    pub fn is_minimal_and_complete(&self, count: usize) -> bool {
        self.in_kernel
            && self.homogeneous
            && self.rank_modulo_lower == count
            && count == self.expected
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    fn config(level: usize, deg: u32) -> OracleConfig {
        OracleConfig {
            max_level: level,
            max_total_degree: deg,
            box_bound: None,
        }
    }

    #[test]
    fn koszul_on_two_variables() {
        let u = VarUniverse::standard(1);
        let gens = vec![Polynomial::<Q>::x(&u, 1), Polynomial::y(&u, 1)];
        let r = Resolution::compute(&u, &gens, Grading::standard(&u), config(3, 4)).unwrap();
        assert_eq!(r.betti(1), [(1, 2)]);
        assert_eq!(r.betti(2), [(2, 1)]);
        assert!(r.betti(3).is_empty());
        assert_eq!(r.projective_dimension(), Some(2));
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let u = VarUniverse::standard(2);
        let x1 = Polynomial::<Q>::x(&u, 1);
        let y2 = Polynomial::<Q>::y(&u, 2);
        let gens = vec![&x1 * &y2, x1.clone(), &y2 * &y2];
        let r = Resolution::compute(&u, &gens, Grading::standard(&u), config(2, 5)).unwrap();
        assert_eq!(r.betti(1), [(1, 1), (2, 1)]);
        assert_eq!(r.betti(2), [(3, 1)]);
        assert_eq!(r.first_level_index(0), None);
        assert_eq!(r.first_level_index(1), Some(0));
    }

    #[test]
    fn gradings_agree_on_a_twisted_cubic() {
        // 2x2 minors of a 2x3 generic matrix: Eagon-Northcott gives 3, 2.
        let u = VarUniverse::standard(3);
        let minor = |i, j| {
            &(&Polynomial::<Fp>::x(&u, i) * &Polynomial::y(&u, j))
                - &(&Polynomial::x(&u, j) * &Polynomial::y(&u, i))
        };
        let gens = vec![minor(1, 2), minor(1, 3), minor(2, 3)];
        let coarse = Resolution::compute(&u, &gens, Grading::standard(&u), config(3, 6)).unwrap();
        let fine =
            Resolution::compute(&u, &gens, Grading::binomial_edge(&u).unwrap(), config(3, 6))
                .unwrap();
        for r in [&coarse, &fine] {
            assert_eq!(r.betti(1), [(2, 3)]);
            assert_eq!(r.betti(2), [(3, 2)]);
            assert!(r.betti(3).is_empty());
        }
        for g in fine.generators(2) {
            assert!(fine.apply_differential(1, &g.image).is_empty());
        }
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let u = VarUniverse::standard(1);
        let g = &Polynomial::<Q>::x(&u, 1) + &(&Polynomial::y(&u, 1) * &Polynomial::y(&u, 1));
        assert!(matches!(
            Resolution::compute(&u, &[g], Grading::standard(&u), config(1, 3)),
            Err(Error::NotHomogeneous(_))
        ));
    }
}
