use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A ring variable. The derived order of this enum is the precedence used by
/// every universe: auxiliary variables first, then the Rees variable `t`,
/// then edge variables `T[i,j]` in edge order, then `x1..xn`, then `y1..yn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Aux(u16),
    ReesT,
    T(u16, u16),
    X(u16),
    Y(u16),
}

impl Var {
    pub fn edge(u: usize, v: usize) -> Var {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        Var::T(a as u16, b as u16)
    }

    pub fn is_xy(self) -> bool {
        matches!(self, Var::X(_) | Var::Y(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Aux(k) => write!(f, "u{k}"),
            Var::ReesT => write!(f, "t"),
            Var::T(i, j) => write!(f, "T[{i},{j}]"),
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// The variables of a polynomial ring, listed in precedence order. The
/// position of a variable in this list is its exponent-vector index.
#[derive(Clone, Debug)]
pub struct VarUniverse {
    n: usize,
    vars: Vec<Var>,
    index: HashMap<Var, usize>,
}

impl PartialEq for VarUniverse {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.vars == other.vars
    }
}

impl Eq for VarUniverse {}

impl VarUniverse {
    fn from_vars(n: usize, mut vars: Vec<Var>) -> Arc<Self> {
        vars.sort();
        vars.dedup();
        let index = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        Arc::new(VarUniverse { n, vars, index })
    }

    /// `K[x1..xn, y1..yn]`.
    pub fn standard(n: usize) -> Arc<Self> {
        let mut vars = Vec::with_capacity(2 * n);
        for i in 1..=n {
            vars.push(Var::X(i as u16));
            vars.push(Var::Y(i as u16));
        }
        Self::from_vars(n, vars)
    }

    /// `K[x, y, T_e : e in edges, t]`, the ring in which the Rees kernel is
    /// computed.
    pub fn rees(n: usize, edges: &[(usize, usize)]) -> Arc<Self> {
        let mut vars: Vec<Var> = Self::standard(n).vars.clone();
        vars.extend(edges.iter().map(|&(u, v)| Var::edge(u, v)));
        vars.push(Var::ReesT);
        Self::from_vars(n, vars)
    }

    /// The same ring with the Rees variable `t` removed.
    pub fn without_rees_t(&self) -> Arc<Self> {
        let vars = self
            .vars
            .iter()
            .copied()
            .filter(|v| *v != Var::ReesT)
            .collect();
        Self::from_vars(self.n, vars)
    }

    /// This universe extended by `k` fresh auxiliary variables.
    pub fn with_aux(&self, k: usize) -> Arc<Self> {
        let mut vars = self.vars.clone();
        let start = self
            .vars
            .iter()
            .filter(|v| matches!(v, Var::Aux(_)))
            .count();
        vars.extend((0..k).map(|i| Var::Aux((start + i + 1) as u16)));
        Self::from_vars(self.n, vars)
    }

    /// This universe with all auxiliary variables dropped.
    pub fn without_aux(&self) -> Arc<Self> {
        let vars = self
            .vars
            .iter()
            .copied()
            .filter(|v| !matches!(v, Var::Aux(_)))
            .collect();
        Self::from_vars(self.n, vars)
    }

    /// Graph size this universe was built for.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var(&self, idx: usize) -> Var {
        self.vars[idx]
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn x(&self, i: usize) -> usize {
        self.index[&Var::X(i as u16)]
    }

    pub fn y(&self, i: usize) -> usize {
        self.index[&Var::Y(i as u16)]
    }

    pub fn contains(&self, v: Var) -> bool {
        self.index.contains_key(&v)
    }

    /// Indices of the variables satisfying `pred`, in precedence order.
    pub fn select(&self, pred: impl Fn(Var) -> bool) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| pred(self.vars[i]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_is_aux_t_big_t_x_y() {
        let u = VarUniverse::rees(3, &[(2, 3), (1, 2)]).with_aux(1);
        let names: Vec<String> = u.vars().iter().map(|v| v.to_string()).collect();
        assert_eq!(
            names,
            ["u1", "t", "T[1,2]", "T[2,3]", "x1", "x2", "x3", "y1", "y2", "y3"]
        );
    }

    #[test]
    fn standard_universe_orders_x_before_y() {
        let u = VarUniverse::standard(2);
        assert_eq!(u.x(1), 0);
        assert_eq!(u.x(2), 1);
        assert_eq!(u.y(1), 2);
        assert_eq!(u.without_aux(), u);
    }
}
