//! Exact combinatorics of cominuscule Schubert calculus.
//!
//! * [`rootsys`]: root systems of types A, B, C, D, E6, E7.
//! * [`weyl`]: Weyl group elements, reduced words, Bruhat order, `W^P`.
//! * [`curve`]: degree distance and curve neighborhoods of Schubert varieties.
//! * [`qconst`]: degree sequences and alternating sums of Gromov-Witten tables.
//! * [`cayley`]: the quantum K-theory ring of the Cayley plane `E6/P6`.
//! * [`cli`]: the `cominq` command-line front end.

pub mod cayley;
pub mod cli;
pub mod curve;
pub mod error;
pub mod qconst;
pub mod report;
pub mod rootsys;
pub mod weyl;

pub use cayley::{ClassLabel, MultTable, QKElement};
pub use curve::{CominSpace, DegreeTable, Family};
pub use error::{Error, Result};
pub use qconst::{DegreeSequence, GWTables};
pub use report::CheckResult;
pub use rootsys::{build_root_system, cominuscule_nodes, CartanType, Root, RootSystem};
pub use weyl::{enumerate_wp, format_word, parse_word, ParabolicQuotient, WeylElement, Word};
