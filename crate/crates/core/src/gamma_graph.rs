//! The γ_d-graph: one vertex per minimum distance-d dominating set, with two
//! sets adjacent when they share all but one element.

use serde::{Deserialize, Serialize};

use crate::domination::{min_dominating_sets_with, DominationOptions};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::labelling::Labelling;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaGraph {
    /// Vertex `i` is named after `tags[i]`.
    pub graph: Graph,
    /// Dominating set of the source graph behind each vertex, sorted.
    pub tags: Vec<Vec<usize>>,
    pub gamma: usize,
    pub d: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaGraphDocument {
    pub gamma: usize,
    pub d: u32,
    pub vertices: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    /// Present when the γ-graph has between 1 and 62 vertices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
}

pub fn build_gamma_graph(g: &Graph, d: u32) -> Result<GammaGraph> {
    build_gamma_graph_with(g, d, DominationOptions::default())
}

pub fn build_gamma_graph_with(g: &Graph, d: u32, options: DominationOptions) -> Result<GammaGraph> {
    let result = min_dominating_sets_with(g, d, options)?;
    let gamma = result.gamma;
    let tags = result.min_sets;
    let short = g.names().iter().all(|n| n.chars().count() == 1);
    let names: Vec<String> = tags
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().map(|&v| g.name(v)).collect();
            if short {
                parts.concat()
            } else {
                parts.join(",")
            }
        })
        .collect();
    let graph = Graph::from_fn(names, |a, b| shared(&tags[a], &tags[b]) + 1 == gamma)?;
    Ok(GammaGraph {
        graph,
        tags,
        gamma,
        d,
    })
}

/// Size of the intersection of two sorted index lists.
fn shared(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

impl GammaGraph {
    /// The tags as a labelling of [`Self::graph`], with source vertex `v` as symbol `v + 1`.
    pub fn labelling(&self) -> Labelling {
        Labelling::new(
            self.gamma,
            self.tags
                .iter()
                .map(|t| t.iter().map(|&v| v as u32 + 1).collect())
                .collect(),
        )
        .expect("tags are distinct sets of equal size")
    }

    pub fn to_document(&self, source: &Graph) -> GammaGraphDocument {
        GammaGraphDocument {
            gamma: self.gamma,
            d: self.d,
            vertices: self
                .tags
                .iter()
                .map(|t| t.iter().map(|&v| source.name(v).to_string()).collect())
                .collect(),
            edges: self.graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            graph6: write_graph6(&self.graph).ok(),
        }
    }
}
