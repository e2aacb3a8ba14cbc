//! Named graphs with fixed labelings.

use super::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::build(n, &edges).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    Graph::build(n, &edges).expect("valid cycle")
}

/// `K_{1,k}` with leaves `1..k` and center `k + 1`.
pub fn star(k: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=k).map(|i| (i, k + 1)).collect();
    Graph::build(k + 1, &edges).expect("valid star")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i, j));
        }
    }
    Graph::build(n, &edges).expect("valid complete graph")
}

/// The path `1 - 2 - ... - n` with the chord `{2, n-1}`.
pub fn chorded_path_inner(n: usize) -> Graph {
    assert!(n >= 5);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((2, n - 1));
    Graph::build(n, &edges).expect("valid graph")
}

/// The path `1 - 2 - ... - n` with the chord `{2, n}`.
pub fn chorded_path_end(n: usize) -> Graph {
    assert!(n >= 4);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((2, n));
    Graph::build(n, &edges).expect("valid graph")
}

/// A path with a chord joining two of its vertices `a < b` (`b - a >= 2`).
pub fn path_with_chord(n: usize, a: usize, b: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((a, b));
    Graph::build(n, &edges).expect("valid graph")
}

/// The triangle `{1,2,3}` with a pendant path of the given length hanging
/// off each triangle vertex.
pub fn triangle_with_paths(lengths: [usize; 3]) -> Graph {
    let n = 3 + lengths.iter().sum::<usize>();
    let mut edges = vec![(1, 2), (2, 3), (1, 3)];
    let mut next = 4;
    for (v, &len) in [1usize, 2, 3].iter().zip(lengths.iter()) {
        let mut prev = *v;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::build(n, &edges).expect("valid graph")
}

/// The bipartite graph on 8 vertices with 10 edges whose binomial edge
/// ideal is not of linear type.
pub fn bipartite_eight() -> Graph {
    Graph::build(
        8,
        &[
            (1, 2),
            (1, 4),
            (1, 6),
            (1, 8),
            (3, 4),
            (3, 6),
            (3, 8),
            (5, 6),
            (5, 8),
            (7, 8),
        ],
    )
    .expect("valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(star(3).degree(4), 3);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(chorded_path_inner(6).girth(), Some(4));
        assert_eq!(chorded_path_end(6).girth(), Some(5));
        let t = triangle_with_paths([1, 1, 1]);
        assert_eq!(t.n(), 6);
        assert_eq!(t.analyze().triangles, 1);
    }
}
