//! JSON instance files: `{"n": .., "k": .., "edges": [[u, v], ..], "colors": [[..], ..]}`.
//!
//! Edges are written with `u < v`, sorted, without duplicates; colors are
//! 1-based and each list is sorted. Reading is strict about the same rules so
//! that a file re-parses to an identical instance.

use std::fs;
use std::path::Path;

use resmc::{ColorSet, Graph, Multicoloring};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub k: usize,
    pub edges: Vec<[usize; 2]>,
    pub colors: Vec<Vec<usize>>,
}

/// A validated graph and coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub coloring: Multicoloring,
}

impl InstanceFile {
    pub fn from_instance(graph: &Graph, coloring: &Multicoloring) -> Self {
        InstanceFile {
            n: graph.n(),
            k: coloring.k(),
            edges: graph.edges().map(|(u, v)| [u, v]).collect(),
            colors: coloring.sets().iter().map(|s| s.iter().collect()).collect(),
        }
    }

    /// Checks every field; errors name the field and index at fault.
    pub fn validate(&self) -> Result<Instance, CliError> {
        let bad = |msg: String| Err(CliError::Input(msg));
        if self.k == 0 {
            return bad("k: must be at least 1".into());
        }
        if self.colors.len() != self.n {
            return bad(format!(
                "colors: expected {} lists (one per vertex), found {}",
                self.n,
                self.colors.len()
            ));
        }
        let mut graph = Graph::new(self.n);
        let mut previous: Option<[usize; 2]> = None;
        for (i, &[u, v]) in self.edges.iter().enumerate() {
            if u >= self.n || v >= self.n {
                return bad(format!("edges[{i}]: [{u}, {v}] has a vertex outside 0..{}", self.n));
            }
            if u >= v {
                return bad(format!("edges[{i}]: [{u}, {v}] must be written with u < v"));
            }
            if previous.is_some_and(|p| p >= [u, v]) {
                return bad(format!("edges[{i}]: [{u}, {v}] is out of order or repeated"));
            }
            graph.add_edge(u, v).map_err(|e| CliError::Input(format!("edges[{i}]: {e}")))?;
            previous = Some([u, v]);
        }
        let mut sets = Vec::with_capacity(self.n);
        for (vertex, list) in self.colors.iter().enumerate() {
            let mut set = ColorSet::new();
            for (j, &color) in list.iter().enumerate() {
                if color == 0 || color > self.k {
                    return bad(format!(
                        "colors[{vertex}][{j}]: color {color} outside 1..={}",
                        self.k
                    ));
                }
                if j > 0 && list[j - 1] >= color {
                    return bad(format!(
                        "colors[{vertex}][{j}]: colors must be strictly increasing"
                    ));
                }
                set.insert(color);
            }
            sets.push(set);
        }
        let coloring =
            Multicoloring::new(self.k, sets).map_err(|e| CliError::Input(e.to_string()))?;
        Ok(Instance { graph, coloring })
    }

    /// Pretty-printed with one edge list and one color list per line.
    pub fn to_json(&self) -> String {
        let list = |xs: &[usize]| serde_json::to_string(xs).expect("integers serialize");
        let edges: Vec<String> = self.edges.iter().map(|e| list(e)).collect();
        let colors: Vec<String> = self.colors.iter().map(|c| list(c)).collect();
        format!(
            "{{\n  \"n\": {},\n  \"k\": {},\n  \"edges\": [{}],\n  \"colors\": [\n    {}\n  ]\n}}\n",
            self.n,
            self.k,
            edges.join(", "),
            colors.join(",\n    ")
        )
    }
}

impl Instance {
    pub fn to_file(&self) -> InstanceFile {
        InstanceFile::from_instance(&self.graph, &self.coloring)
    }
}

pub fn parse(text: &str) -> Result<Instance, CliError> {
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("instance file: {e}")))?;
    file.validate()
}

pub fn read(path: &Path) -> Result<Instance, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write(path: &Path, graph: &Graph, coloring: &Multicoloring) -> Result<(), CliError> {
    let text = InstanceFile::from_instance(graph, coloring).to_json();
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
