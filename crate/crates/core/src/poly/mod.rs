//! Sparse exact polynomials over a named variable universe.

mod freevec;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod universe;

pub use freevec::FreeVector;
pub use monomial::Monomial;
pub use order::{graded_basis, BlockKind, CompiledOrder, MonomialOrder, VarClass};
pub use parse::parse_polynomial;
pub use polynomial::{monomial_string, Polynomial};
pub use universe::{Var, VarUniverse};
