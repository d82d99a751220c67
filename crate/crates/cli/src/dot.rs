//! Graphviz export. One cluster per connected component; every vertex is
//! labelled with its name and color set.

use std::fmt::Write;

use resmc::{Graph, Multicoloring};

pub fn to_dot(graph: &Graph, coloring: &Multicoloring) -> String {
    let mut out = String::from("graph realization {\n  node [shape=box];\n");
    for (i, comp) in graph.components().iter().enumerate() {
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        for v in comp {
            writeln!(out, "    v{v} [label=\"v{v}\\n{}\"];", coloring.colors(v)).unwrap();
        }
        for (u, v) in graph.edges().filter(|&(u, _)| comp.contains(u)) {
            writeln!(out, "    v{u} -- v{v};").unwrap();
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clusters_and_labels() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let c = Multicoloring::from_lists(2, [vec![1], vec![2], vec![]]).unwrap();
        let dot = to_dot(&g, &c);
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
        assert!(dot.contains("v0 [label=\"v0\\n{1}\"];"));
        assert!(dot.contains("v2 [label=\"v2\\n{}\"];"));
        assert_eq!(dot.matches(" -- ").count(), 1);
    }
}
