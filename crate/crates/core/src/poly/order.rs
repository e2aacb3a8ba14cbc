use std::cmp::Ordering;
use std::fmt;

use super::monomial::Monomial;
use super::universe::{Var, VarUniverse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Lex,
    DegRevLex,
}

/// Variable classes used to describe blocks independently of a universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarClass {
    Aux,
    ReesT,
    EdgeT,
    X,
    Y,
}

impl VarClass {
    pub fn contains(self, v: Var) -> bool {
        matches!(
            (self, v),
            (VarClass::Aux, Var::Aux(_))
                | (VarClass::ReesT, Var::ReesT)
                | (VarClass::EdgeT, Var::T(..))
                | (VarClass::X, Var::X(_))
                | (VarClass::Y, Var::Y(_))
        )
    }
}

/// A monomial order described symbolically: a sequence of blocks, each
/// heavier than everything after it, followed by a block holding every
/// remaining variable. Within a block variables keep universe precedence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    front: Vec<(Vec<VarClass>, BlockKind)>,
    rest: BlockKind,
}

impl MonomialOrder {
    /// Lexicographic order with x1 > ... > xn > y1 > ... > yn (and any
    /// auxiliary, `t` and `T` variables heavier still).
    pub fn lex() -> Self {
        MonomialOrder {
            front: vec![],
            rest: BlockKind::Lex,
        }
    }

    pub fn grevlex() -> Self {
        MonomialOrder {
            front: vec![],
            rest: BlockKind::DegRevLex,
        }
    }

    /// Block order with `front` strictly heavier than all other variables.
    pub fn elimination(front: &[VarClass], front_kind: BlockKind, rest: BlockKind) -> Self {
        MonomialOrder {
            front: vec![(front.to_vec(), front_kind)],
            rest,
        }
    }

    pub fn blocks(front: Vec<(Vec<VarClass>, BlockKind)>, rest: BlockKind) -> Self {
        MonomialOrder { front, rest }
    }

    /// Whether every variable of class `c` sits in a front block.
    pub fn eliminates(&self, c: VarClass) -> bool {
        self.front.iter().any(|(cs, _)| cs.contains(&c))
    }

    pub fn compile(&self, u: &VarUniverse) -> CompiledOrder {
        let mut taken = vec![false; u.len()];
        let mut blocks = Vec::new();
        for (classes, kind) in &self.front {
            let vars: Vec<usize> = u
                .select(|v| classes.iter().any(|c| c.contains(v)))
                .into_iter()
                .filter(|&i| !taken[i])
                .collect();
            for &i in &vars {
                taken[i] = true;
            }
            if !vars.is_empty() {
                blocks.push((vars, *kind));
            }
        }
        let rest: Vec<usize> = (0..u.len()).filter(|&i| !taken[i]).collect();
        if !rest.is_empty() {
            blocks.push((rest, self.rest));
        }
        CompiledOrder { blocks }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockKind::Lex => "lex",
            BlockKind::DegRevLex => "grevlex",
        })
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.front.is_empty() {
            return write!(f, "{}", self.rest);
        }
        for (classes, kind) in &self.front {
            let names: Vec<&str> = classes
                .iter()
                .map(|c| match c {
                    VarClass::Aux => "aux",
                    VarClass::ReesT => "t",
                    VarClass::EdgeT => "T",
                    VarClass::X => "x",
                    VarClass::Y => "y",
                })
                .collect();
            write!(f, "{}({}) > ", kind, names.join(","))?;
        }
        write!(f, "{}(rest)", self.rest)
    }
}

/// A monomial order resolved against a universe.
#[derive(Clone, Debug)]
pub struct CompiledOrder {
    blocks: Vec<(Vec<usize>, BlockKind)>,
}

impl CompiledOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exps(), b.exps());
        for (vars, kind) in &self.blocks {
            let ord = match kind {
                BlockKind::Lex => vars
                    .iter()
                    .map(|&i| ea[i].cmp(&eb[i]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal),
                BlockKind::DegRevLex => {
                    let (da, db): (u32, u32) = if vars.len() == ea.len() {
                        (a.degree(), b.degree())
                    } else {
                        (
                            vars.iter().map(|&i| ea[i] as u32).sum(),
                            vars.iter().map(|&i| eb[i] as u32).sum(),
                        )
                    };
                    da.cmp(&db).then_with(|| {
                        vars.iter()
                            .rev()
                            .map(|&i| eb[i].cmp(&ea[i]))
                            .find(|o| o.is_ne())
                            .unwrap_or(Ordering::Equal)
                    })
                }
            };
            if ord.is_ne() {
                return ord;
            }
        }
        Ordering::Equal
    }
}

/// All monomials of total degree `d` in the variables `vars` (universe
/// indices), sorted descending under `order`.
pub fn graded_basis(
    u: &VarUniverse,
    d: u32,
    vars: &[usize],
    order: &MonomialOrder,
) -> Vec<Monomial> {
    let nv = u.len();
    let mut out = Vec::new();
    let mut cur = vec![0u16; nv];
    fn rec(vars: &[usize], left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    out.push(Monomial::from_slice(cur));
                }
            }
            Some((&v, rest)) => {
                if rest.is_empty() {
                    cur[v] = left as u16;
                    out.push(Monomial::from_slice(cur));
                    cur[v] = 0;
                    return;
                }
                for e in (0..=left).rev() {
                    cur[v] = e as u16;
                    rec(rest, left - e, cur, out);
                }
                cur[v] = 0;
            }
        }
    }
    rec(vars, d, &mut cur, &mut out);
    let ord = order.compile(u);
    out.sort_by(|a, b| ord.cmp(b, a));
    out
}
