pub mod aci;
pub mod beideal;
pub mod betti;
pub mod error;
pub mod field;
pub mod graph;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod rees;
pub mod syzygy;
pub mod util;

pub use error::{Error, Result};
pub use field::{Field, Fp, Q};
