//! Plain-text graph files: the vertex count on the first line, then one
//! `u v` edge per line. Blank lines and `#` comments are ignored.

use bei_core::graph::Graph;
use bei_core::{Error, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, first) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let n: usize = first.parse().map_err(|_| {
        Error::Parse(format!(
            "line {ln}: expected the vertex count, found {first:?}"
        ))
    })?;
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(Error::Parse(format!(
                "line {ln}: expected two vertices, found {l:?}"
            )));
        };
        let p = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {ln}: bad vertex {s:?}")))
        };
        edges.push((p(a)?, p(b)?));
    }
    Graph::build(n, &edges)
}

pub fn print(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u, e.v));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use bei_core::graph::families::{bipartite_eight, cycle};

    #[test]
    fn comments_and_blank_lines() {
        let g = parse("# a square\n4\n\n1 2\n2 3 # middle\n3 4\n4 1\n").unwrap();
        assert_eq!(g, cycle(4));
        assert_eq!(print(&bipartite_eight()).lines().count(), 11);
    }

    #[test]
    fn malformed_input() {
        for bad in [
            "",
            "x\n",
            "3\n1\n",
            "3\n1 2 3\n",
            "3\n1 4\n",
            "3\n2 2\n",
            "3\n1 b\n",
        ] {
            assert!(parse(bad).is_err(), "{bad:?}");
        }
    }
}
