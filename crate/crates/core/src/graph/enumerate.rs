//! Exhaustive small-graph enumeration: labeled trees by Prüfer sequences,
//! reduced to isomorphism classes, and unicyclic graphs obtained by adding
//! one edge to a tree.

use std::collections::{BTreeSet, HashSet};

use super::{Edge, Graph};

/// Decodes a Prüfer sequence over `1..=n` (length `n - 2`) into a tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n + 1];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = *leaves.iter().next().expect("a leaf exists");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::build(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Every labeled tree on `1..=n`, in lexicographic order of Prüfer codes.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let total = if n < 2 { 1 } else { n.pow(len as u32) };
    (0..total).map(move |mut code| {
        if n < 2 {
            return Graph::build(n, &[]).unwrap();
        }
        let mut seq = vec![0; len];
        for s in seq.iter_mut().rev() {
            *s = code % n + 1;
            code /= n;
        }
        prufer_decode(&seq, n)
    })
}

fn rooted_code(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(g, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (1..=n).collect();
    }
    let mut deg: Vec<usize> = (0..=n)
        .map(|v| if v == 0 { 0 } else { g.degree(v) })
        .collect();
    let mut layer: Vec<usize> = (1..=n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &w in g.neighbors(v) {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut c = layer;
    c.sort_unstable();
    c
}

/// Isomorphism invariant of a tree (AHU encoding rooted at a center).
pub fn tree_canonical_form(g: &Graph) -> String {
    tree_centers(g)
        .into_iter()
        .map(|c| rooted_code(g, c, 0))
        .min()
        .unwrap_or_default()
}

fn pair_bit(u: usize, v: usize) -> u64 {
    let (a, b) = (u.min(v) - 1, u.max(v) - 1);
    1u64 << (b * (b - 1) / 2 + a)
}

/// Isomorphism invariant of an arbitrary graph on at most 11 vertices: the
/// largest adjacency bitmask over all vertex permutations.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    assert!(
        n <= 11,
        "brute-force canonical form is limited to small graphs"
    );
    let mut perm: Vec<usize> = (1..=n).collect();
    let eval = |p: &[usize]| {
        g.edges()
            .iter()
            .fold(0u64, |m, e| m | pair_bit(p[e.u - 1], p[e.v - 1]))
    };
    let mut best = eval(&perm);
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.max(eval(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// One representative per isomorphism class of trees on `n` vertices: the
/// first labeled tree of the class met in Prüfer order.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    labeled_trees(n)
        .filter(|g| seen.insert(tree_canonical_form(g)))
        .collect()
}

/// One representative per isomorphism class of connected unicyclic graphs
/// on `n >= 3` vertices.
pub fn unicyclic(n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in trees(n) {
        for u in 1..=n {
            for v in u + 1..=n {
                if t.has_edge(u, v) {
                    continue;
                }
                let g = t.with_edges([Edge::new(u, v)]);
                if seen.insert(canonical_mask(&g)) {
                    out.push(g);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_count_and_decoding() {
        assert_eq!(labeled_trees(5).count(), 125);
        for g in labeled_trees(5) {
            assert!(g.analyze().is_tree);
        }
        let star = prufer_decode(&[4, 4], 4);
        assert_eq!(star.degree(4), 3);
    }

    #[test]
    fn isomorphism_class_counts() {
        // Unlabeled trees and connected unicyclic graphs (OEIS A000055, A001429).
        let trees_by_n: Vec<usize> = (1..=8).map(|n| trees(n).len()).collect();
        assert_eq!(trees_by_n, [1, 1, 1, 2, 3, 6, 11, 23]);
        let uni: Vec<usize> = (3..=7).map(|n| unicyclic(n).len()).collect();
        assert_eq!(uni, [1, 2, 5, 13, 33]);
    }

    #[test]
    fn canonical_forms_are_invariant() {
        let g = super::super::families::triangle_with_paths([2, 1, 0]);
        let h = g.relabel(&[6, 5, 4, 3, 2, 1]);
        assert_eq!(canonical_mask(&g), canonical_mask(&h));
        let t = super::super::families::path(6);
        assert_eq!(
            tree_canonical_form(&t),
            tree_canonical_form(&t.relabel(&[3, 1, 2, 6, 4, 5]))
        );
        assert_ne!(
            tree_canonical_form(&t),
            tree_canonical_form(&super::super::families::star(5))
        );
    }
}
