#![no_std]

//! Highly (a,m)-resistant vertex k-multicolorings.
//!
//! A graph whose vertices each hold a subset of `k` secret pieces (colors) is
//! *highly (a,m)-resistant* when no `a` vertices jointly hold every piece, and
//! after any `a` attackers are removed together with their neighbours, and any
//! `m` further vertices fail, some connected component still holds all `k`
//! pieces.
//!
//! The crate provides:
//!
//! * [`graph`]: small undirected graphs over dense vertex labels,
//! * [`coloring`]: multicolorings, the attacker condition, saturation and
//!   color extension,
//! * [`resistance`]: the exhaustive (exact) resistance checker,
//! * [`kformula`]: closed forms for the minimal number of colors `K(a,m,n)`
//!   with `a <= 1`, evaluated in exact integer arithmetic,
//! * [`builder`]: the optimal clique-union realizations,
//! * [`oracle`]: a brute-force search over every small labeled graph that
//!   recomputes `K` without touching the closed forms.
//!
//! Everything is `no_std` + `alloc`.

extern crate alloc;

pub mod bitset;
pub mod builder;
pub mod coloring;
mod error;
pub mod graph;
pub mod kformula;
pub mod oracle;
pub mod resistance;

pub use bitset::{BitSet, VertexSet};
pub use builder::{build_clique_realization, extend_n, Realization};
pub use coloring::{check_a_hr, extend_k, saturate_coloring, ColorSet, Multicoloring};
pub use error::Error;
pub use graph::{Graph, InducedSubgraph};
pub use kformula::{KValue, MinimizerResult, Thresholds};
pub use oracle::{brute_force_k, search_witness, ColoringSpace, SearchSpec};
pub use resistance::{
    check_am_resistant, check_highly_am_resistant, CheckReport, Engine, Scenario, Violation,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
