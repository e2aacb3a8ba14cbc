//! Simple graphs on the vertex set 1..n and the combinatorial invariants the
//! ideal-theoretic code consumes.

pub mod enumerate;
pub mod families;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// An unordered pair `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "loop edge");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn contains(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

/// An induced K_{1,3}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSet {
    pub vertices: Vec<usize>,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub degrees: Vec<usize>,
    pub pendants: Vec<usize>,
    pub connected: bool,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    pub is_path: bool,
    pub is_cycle: bool,
    /// The unique cycle in traversal order, when the graph is unicyclic.
    pub cycle_vertices: Option<Vec<usize>>,
    pub triangles: usize,
}

impl Graph {
    pub fn build(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for &(a, b) in edge_list {
            for w in [a, b] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange(w, n));
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            set.insert(Edge::new(a, b));
        }
        Ok(Self::from_edge_set(n, set.into_iter().collect()))
    }

    fn from_edge_set(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n + 1];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.u, e.v)).collect()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a >= 1 && a <= self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Self::from_edge_set(self.n, edges)
    }

    pub fn with_edges(&self, extra: impl IntoIterator<Item = Edge>) -> Graph {
        let mut set: BTreeSet<Edge> = self.edges.iter().copied().collect();
        set.extend(extra);
        Self::from_edge_set(self.n, set.into_iter().collect())
    }

    /// Graph with `v` isolated (its edges deleted, vertex set unchanged).
    pub fn isolate(&self, v: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !e.contains(v))
            .collect();
        Self::from_edge_set(self.n, edges)
    }

    /// Relabels vertex `v` as `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.u - 1], perm[e.v - 1]));
        let set: BTreeSet<Edge> = edges.collect();
        Self::from_edge_set(self.n, set.into_iter().collect())
    }

    /// Connected components of the subgraph induced on `keep` (vertices
    /// with `keep[v]`), each sorted, listed by smallest vertex.
    pub fn components_within(&self, keep: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for s in self.vertices() {
            if !keep[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(w) = stack.pop() {
                for &z in &self.adj[w] {
                    if keep[z] && !seen[z] {
                        seen[z] = true;
                        comp.push(z);
                        stack.push(z);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&vec![true; self.n + 1])
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    fn keep_mask(&self, removed: &[usize]) -> Vec<bool> {
        let mut keep = vec![true; self.n + 1];
        keep[0] = false;
        for &t in removed {
            keep[t] = false;
        }
        keep
    }

    /// Number of components of the subgraph induced on V \ T.
    pub fn components_after_removal(&self, t: &[usize]) -> usize {
        self.components_within(&self.keep_mask(t)).len()
    }

    /// Components of the subgraph induced on V \ T.
    pub fn components_without(&self, t: &[usize]) -> Vec<Vec<usize>> {
        self.components_within(&self.keep_mask(t))
    }

    /// Whether every vertex of `t` is a cut vertex of the subgraph induced
    /// on (V \ T) together with that vertex.
    pub fn has_cut_point_property(&self, t: &[usize]) -> bool {
        let c = self.components_after_removal(t);
        t.iter().all(|&i| {
            let rest: Vec<usize> = t.iter().copied().filter(|&j| j != i).collect();
            self.components_after_removal(&rest) < c
        })
    }

    /// All sets with the cut point property of size at most `max_size`,
    /// including the empty set, ordered by size and then lexicographically.
    pub fn cut_point_sets(&self, max_size: usize) -> Result<Vec<CutSet>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut out = Vec::new();
        for size in 0..=max_size.min(self.n) {
            for t in k_subsets(self.n, size) {
                if self.has_cut_point_property(&t) {
                    let components = self.components_after_removal(&t);
                    out.push(CutSet {
                        vertices: t,
                        components,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in self.vertices() {
            let mut dist = vec![usize::MAX; self.n + 1];
            let mut parent = vec![0usize; self.n + 1];
            dist[root] = 0;
            let mut q = VecDeque::from([root]);
            while let Some(w) = q.pop_front() {
                for &z in &self.adj[w] {
                    if dist[z] == usize::MAX {
                        dist[z] = dist[w] + 1;
                        parent[z] = w;
                        q.push_back(z);
                    } else if parent[w] != z {
                        let len = dist[w] + dist[z] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn induced_claws(&self) -> Vec<Claw> {
        let mut out = Vec::new();
        for c in self.vertices() {
            let nb = &self.adj[c];
            for a in 0..nb.len() {
                for b in a + 1..nb.len() {
                    for d in b + 1..nb.len() {
                        let (p, q, r) = (nb[a], nb[b], nb[d]);
                        if !self.has_edge(p, q) && !self.has_edge(p, r) && !self.has_edge(q, r) {
                            out.push(Claw {
                                center: c,
                                leaves: [p, q, r],
                            });
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// `G_v`: the neighbourhood of `v` completed to a clique.
    pub fn clique_complete_at(&self, v: usize) -> Graph {
        let nb = &self.adj[v];
        let mut extra = Vec::new();
        for a in 0..nb.len() {
            for b in a + 1..nb.len() {
                extra.push(Edge::new(nb[a], nb[b]));
            }
        }
        self.with_edges(extra)
    }

    /// `G_e` for a non-edge `e = {u, v}`: both neighbourhoods completed.
    pub fn clique_complete_at_pair(&self, e: Edge) -> Graph {
        let mut extra = Vec::new();
        for w in [e.u, e.v] {
            let nb = &self.adj[w];
            for a in 0..nb.len() {
                for b in a + 1..nb.len() {
                    extra.push(Edge::new(nb[a], nb[b]));
                }
            }
        }
        self.with_edges(extra)
    }

    pub fn triangle_count(&self) -> usize {
        self.edges
            .iter()
            .map(|e| {
                self.adj[e.u]
                    .iter()
                    .filter(|&&w| w > e.v && self.has_edge(w, e.v))
                    .count()
            })
            .sum()
    }

    /// Every simple path from `a` to `b`, as full vertex sequences.
    pub fn simple_paths(&self, a: usize, b: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![a];
        let mut on = vec![false; self.n + 1];
        on[a] = true;
        self.paths_rec(b, &mut path, &mut on, &mut out);
        out
    }

    fn paths_rec(
        &self,
        b: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let w = *path.last().unwrap();
        if w == b {
            out.push(path.clone());
            return;
        }
        for &z in &self.adj[w] {
            if !on[z] {
                on[z] = true;
                path.push(z);
                self.paths_rec(b, path, on, out);
                path.pop();
                on[z] = false;
            }
        }
    }

    /// Vertices of the unique cycle in traversal order, starting at the
    /// smallest cycle vertex and stepping to its smaller cycle neighbour.
    pub fn unique_cycle(&self) -> Option<Vec<usize>> {
        if !self.is_connected() || self.edges.len() != self.n {
            return None;
        }
        let mut deg: Vec<usize> = (0..=self.n)
            .map(|v| if v == 0 { 0 } else { self.degree(v) })
            .collect();
        let mut alive = vec![true; self.n + 1];
        alive[0] = false;
        let mut stack: Vec<usize> = self.vertices().filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &z in &self.adj[v] {
                if alive[z] {
                    deg[z] -= 1;
                    if deg[z] == 1 {
                        stack.push(z);
                    }
                }
            }
        }
        let start = self.vertices().find(|&v| alive[v])?;
        let on_cycle = |v: usize| alive[v];
        let mut order = vec![start];
        let mut prev = 0;
        let mut cur = start;
        loop {
            let next = self.adj[cur]
                .iter()
                .copied()
                .filter(|&z| on_cycle(z) && z != prev)
                .min()?;
            if next == start {
                break;
            }
            if order.len() > self.n {
                return None;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    pub fn analyze(&self) -> Analysis {
        let degrees: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let pendants = self.vertices().filter(|&v| self.degree(v) == 1).collect();
        let connected = self.is_connected();
        let m = self.edges.len();
        let is_tree = connected && m + 1 == self.n;
        let is_unicyclic = connected && m == self.n && self.n >= 3;
        let is_path = is_tree && degrees.iter().all(|&d| d <= 2);
        let is_cycle = is_unicyclic && degrees.iter().all(|&d| d == 2);
        let cycle_vertices = if is_unicyclic {
            self.unique_cycle()
        } else {
            None
        };
        Analysis {
            degrees,
            pendants,
            connected,
            is_tree,
            is_unicyclic,
            is_path,
            is_cycle,
            cycle_vertices,
            triangles: self.triangle_count(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self
            .edges
            .iter()
            .map(|e| format!("{}-{}", e.u, e.v))
            .collect();
        write!(f, "Graph(n={}; {})", self.n, es.join(" "))
    }
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n + 1 - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn binom3(d: usize) -> usize {
        if d < 3 {
            0
        } else {
            d * (d - 1) * (d - 2) / 6
        }
    }

    #[test]
    fn build_normalizes_and_validates() {
        let k3 = Graph::build(3, &[(1, 2), (2, 3), (1, 3), (2, 1)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let claw = Graph::build(4, &[(1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(claw.degree(4), 3);
        assert_eq!(
            Graph::build(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange(4, 3))
        );
        assert_eq!(Graph::build(3, &[(2, 2)]), Err(Error::LoopEdge(2)));
        assert_eq!(bipartite_eight().edge_count(), 10);
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(path(6).girth(), None);
        assert_eq!(star(4).girth(), None);
        assert_eq!(complete(4).girth(), Some(3));
    }

    #[test]
    fn bipartite_eight_girth_matches_brute_force() {
        let g = bipartite_eight();
        // Brute force: the shortest closed simple walk through some edge.
        let mut best = usize::MAX;
        for e in g.edges() {
            let h = g.without_edge(*e);
            for p in h.simple_paths(e.u, e.v) {
                best = best.min(p.len());
            }
        }
        assert_eq!(best, 4);
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn components_after_removal_examples() {
        let claw = star(3);
        assert_eq!(claw.components_after_removal(&[4]), 3);
        assert_eq!(path(5).components_after_removal(&[3]), 2);
        assert_eq!(cycle(4).components_after_removal(&[]), 1);
        let two = Graph::build(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(two.components_after_removal(&[]), 2);
    }

    fn brute_cut_sets(g: &Graph) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << g.n()) {
            let t: Vec<usize> = (1..=g.n()).filter(|v| mask & (1 << (v - 1)) != 0).collect();
            let ok = t.iter().all(|&i| {
                let mut keep: Vec<bool> = (0..=g.n())
                    .map(|v| v > 0 && (!t.contains(&v) || v == i))
                    .collect();
                let with_i = g.components_within(&keep).len();
                keep[i] = false;
                let without_i = g.components_within(&keep).len();
                with_i < without_i
            });
            if ok {
                out.push(t);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    #[test]
    fn cut_point_sets_match_exhaustive_check() {
        for g in [
            path(3),
            complete(3),
            star(3),
            cycle(5),
            path(5),
            bipartite_eight(),
        ] {
            let got: Vec<Vec<usize>> = g
                .cut_point_sets(g.n())
                .unwrap()
                .into_iter()
                .map(|c| c.vertices)
                .collect();
            assert_eq!(got, brute_cut_sets(&g), "{g:?}");
        }
        let p3 = path(3).cut_point_sets(3).unwrap();
        assert_eq!(p3.len(), 2);
        assert_eq!(
            p3[1],
            CutSet {
                vertices: vec![2],
                components: 2
            }
        );
        assert_eq!(complete(3).cut_point_sets(3).unwrap().len(), 1);
        let claw = star(3).cut_point_sets(4).unwrap();
        assert_eq!(
            claw.iter().map(|c| c.vertices.clone()).collect::<Vec<_>>(),
            vec![vec![], vec![4]]
        );
        let two = Graph::build(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(two.cut_point_sets(4), Err(Error::Disconnected));
    }

    #[test]
    fn claw_counts() {
        assert_eq!(star(3).induced_claws().len(), 1);
        let spider = Graph::build(6, &[(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        assert_eq!(spider.induced_claws().len(), 0);
        for g in enumerate::trees(7) {
            let expected: usize = g.vertices().map(|v| binom3(g.degree(v))).sum();
            assert_eq!(g.induced_claws().len(), expected);
        }
        for g in enumerate::unicyclic(7) {
            if g.girth().unwrap() >= 4 {
                let expected: usize = g.vertices().map(|v| binom3(g.degree(v))).sum();
                assert_eq!(g.induced_claws().len(), expected);
            }
        }
    }

    #[test]
    fn clique_completion() {
        let k = star(3).clique_complete_at(4);
        assert_eq!(k.edge_count(), 6);
        assert_eq!(path(3).clique_complete_at(2), complete(3));
        assert_eq!(path(5).clique_complete_at(1), path(5));
        for g in enumerate::unicyclic(6) {
            for v in g.vertices() {
                let once = g.clique_complete_at(v);
                assert_eq!(once.clique_complete_at(v), once);
            }
        }
    }

    #[test]
    fn analysis_records() {
        let c4 = cycle(4).analyze();
        assert!(c4.is_unicyclic && c4.is_cycle);
        assert_eq!(c4.cycle_vertices, Some(vec![1, 2, 3, 4]));
        assert_eq!(c4.triangles, 0);

        let tri = Graph::build(6, &[(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (3, 6)]).unwrap();
        let a = tri.analyze();
        assert!(a.is_unicyclic && !a.is_cycle);
        assert_eq!(a.triangles, 1);
        assert_eq!(a.cycle_vertices, Some(vec![1, 2, 3]));

        let p6 = path(6).analyze();
        assert!(p6.is_tree && p6.is_path);
        assert_eq!(p6.pendants, vec![1, 6]);
    }

    #[test]
    fn girth_three_iff_triangle() {
        for g in enumerate::unicyclic(6)
            .into_iter()
            .chain(enumerate::trees(6))
        {
            assert_eq!(g.girth() == Some(3), g.triangle_count() >= 1);
        }
    }

    #[test]
    fn cycle_traversal_on_relabeled_cycle() {
        let g = Graph::build(6, &[(5, 2), (2, 6), (6, 3), (3, 5), (1, 5), (4, 1)]).unwrap();
        assert_eq!(g.unique_cycle(), Some(vec![2, 5, 3, 6]));
    }
}
