//! Optimal realizations of `(1, m, n, K(1,m,n))` and the one-vertex extension.

use crate::kformula::k_one;
use crate::resistance::{check_highly_am_resistant, CheckReport, Scenario};
use crate::{Error, Graph, Multicoloring, Result};

/// A graph and multicoloring claimed to be highly (a,m)-resistant, i.e. to
/// realize `(a, m, n, k)` with `n = graph.n()` and `k = coloring.k()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub graph: Graph,
    pub coloring: Multicoloring,
    pub a: usize,
    pub m: usize,
}

impl Realization {
    pub fn new(graph: Graph, coloring: Multicoloring, a: usize, m: usize) -> Result<Self> {
        coloring.check_len(&graph)?;
        Ok(Realization { graph, coloring, a, m })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn k(&self) -> usize {
        self.coloring.k()
    }

    /// `(a, m, n, k)`.
    pub fn params(&self) -> (usize, usize, usize, usize) {
        (self.a, self.m, self.n(), self.k())
    }

    /// Runs the exhaustive highly-(a,m)-resistance check.
    pub fn verify(&self) -> Result<CheckReport> {
        check_highly_am_resistant(&self.graph, &self.coloring, Scenario::new(self.a, self.m))
    }

    /// Same graph, one more color held by every vertex.
    pub fn extend_k(&self) -> Realization {
        Realization { coloring: self.coloring.extend_k(), ..self.clone() }
    }
}

/// Disjoint copies of `K_k` plus a residual `K_l`, `k = K(1,m,n)`,
/// `l = n mod k`; inside each component vertex `j` misses color `j+1`.
pub fn build_clique_realization(m: u64, n: u64) -> Result<Realization> {
    let k = k_one(m, n)?.finite().ok_or(Error::Infeasible { m, n })? as usize;
    let n = n as usize;
    let mut graph = Graph::new(0);
    let mut missing = alloc::vec::Vec::with_capacity(n);
    let mut placed = 0;
    while placed < n {
        let size = k.min(n - placed);
        graph = graph.disjoint_union(&Graph::complete(size));
        missing.extend(1..=size);
        placed += size;
    }
    let coloring = Multicoloring::from_missing(k, &missing)?;
    Realization::new(graph, coloring, 1, m as usize)
}

/// Appends an isolated vertex holding a copy of vertex 0's colors.
pub fn extend_n(r: &Realization) -> Result<Realization> {
    if r.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut out = r.clone();
    out.graph.add_vertex();
    out.coloring.push(r.coloring.colors(0).clone())?;
    Ok(out)
}
