//! Simple undirected graphs on vertices `0..n`.

use alloc::vec::Vec;

use crate::{Error, Result, VertexSet};

/// A simple undirected graph on the vertices `0..n`, stored as adjacency sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// `G - S`, relabelled to `0..n'`, together with the original label of every
/// surviving vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[new] = old`, ascending.
    pub labels: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: alloc::vec![VertexSet::with_capacity(n); n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            let mut row = VertexSet::full(n);
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut g = Graph::new(shift + other.n());
        for (u, v) in self.edges().chain(other.edges().map(|(u, v)| (u + shift, v + shift))) {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    /// Adds a new isolated vertex and returns its label.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(VertexSet::new());
        self.adj.len() - 1
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|row| row.contains(v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n() })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(u) => self.check_vertex(u),
            None => Ok(()),
        }
    }

    /// `N(u)`.
    pub fn neighbors(&self, u: usize) -> Result<&VertexSet> {
        self.check_vertex(u)?;
        Ok(&self.adj[u])
    }

    /// `N_0(S) = S ∪ N(S)`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.closed_neighborhood_unchecked(s))
    }

    pub(crate) fn closed_neighborhood_unchecked(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for u in s {
            out.union_with(&self.adj[u]);
        }
        out
    }

    /// `G - S` with a map back to the original labels.
    pub fn delete(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        self.check_set(s)?;
        let labels: Vec<usize> = (0..self.n()).filter(|&u| !s.contains(u)).collect();
        let mut new_label = alloc::vec![usize::MAX; self.n()];
        for (new, &old) in labels.iter().enumerate() {
            new_label[old] = new;
        }
        let mut graph = Graph::new(labels.len());
        for (new, &old) in labels.iter().enumerate() {
            graph.adj[new] =
                self.adj[old].iter().filter(|&w| !s.contains(w)).map(|w| new_label[w]).collect();
        }
        Ok(InducedSubgraph { graph, labels })
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.induced_components(&self.vertices())
    }

    /// Components of the subgraph induced by `alive`, in original labels,
    /// ordered by smallest member.
    pub fn induced_components(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut rest = alive.clone();
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let comp = self.reach(start, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices of `alive` reachable from `start` inside `alive`.
    pub(crate) fn reach(&self, start: usize, alive: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for u in &frontier {
                next.union_with(&self.adj[u]);
            }
            next.intersect_with(alive);
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        comp
    }

    /// Whether `set` is nonempty and induces a connected subgraph.
    pub fn is_connected_set(&self, set: &VertexSet) -> bool {
        match set.first() {
            Some(start) => self.reach(start, set).len() == set.len(),
            None => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(path3().neighbors(1).unwrap(), &set(&[0, 2]));
        assert!(Graph::new(1).neighbors(0).unwrap().is_empty());
        assert_eq!(Graph::complete(4).neighbors(0).unwrap(), &set(&[1, 2, 3]));
        assert_eq!(path3().neighbors(3).unwrap_err(), Error::VertexOutOfRange { vertex: 3, n: 3 });
    }

    #[test]
    fn closed_neighborhood_examples() {
        assert_eq!(path3().closed_neighborhood(&set(&[1])).unwrap(), set(&[0, 1, 2]));
        assert_eq!(path3().closed_neighborhood(&set(&[])).unwrap(), set(&[]));
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(two_k2.closed_neighborhood(&set(&[0])).unwrap(), set(&[0, 1]));
        assert!(path3().closed_neighborhood(&set(&[5])).is_err());
    }

    #[test]
    fn delete_examples() {
        let k3 = Graph::complete(3);
        let d = k3.delete(&set(&[1])).unwrap();
        assert_eq!(d.graph, Graph::complete(2));
        assert_eq!(d.labels, vec![0, 2]);

        let same = path3().delete(&set(&[])).unwrap();
        assert_eq!(same.graph, path3());
        assert_eq!(same.labels, vec![0, 1, 2]);

        let split = path3().delete(&set(&[1])).unwrap();
        assert_eq!(split.graph, Graph::new(2));
        assert_eq!(split.labels, vec![0, 2]);
    }

    #[test]
    fn components_examples() {
        let g = Graph::complete(2).disjoint_union(&Graph::new(1));
        assert_eq!(g.components(), vec![set(&[0, 1]), set(&[2])]);
        assert!(Graph::new(0).components().is_empty());
        assert_eq!(Graph::complete(4).components(), vec![set(&[0, 1, 2, 3])]);
    }

    #[test]
    fn edge_validation() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        g.add_edge(2, 0).unwrap();
        assert_eq!(g.add_edge(0, 2), Err(Error::DuplicateEdge(0, 2)));
        assert!(g.add_edge(0, 3).is_err());
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }
}
