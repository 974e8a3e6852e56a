//! Simple undirected graphs with named vertices.

use std::collections::{HashSet, VecDeque};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// An immutable simple undirected graph.
///
/// Vertices are indexed `0..n` and each carries a distinct name, `"1".."n"`
/// unless the constructor was given explicit names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices with default names.
    pub fn empty(n: usize) -> Self {
        Graph {
            names: default_names(n),
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph with default names from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_names(default_names(n), edges)
    }

    /// Builds a graph from explicit vertex names and an edge list.
    ///
    /// Repeated edges collapse; loops, out-of-range endpoints and duplicate
    /// names are rejected.
    pub fn with_names(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut seen = HashSet::with_capacity(n);
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::arg(format!("duplicate vertex name {name:?}")));
            }
        }
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::arg(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { names, adj })
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(names: Vec<String>, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let n = names.len();
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::with_names(names, &edges)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in column order `(0,1), (0,2), (1,2), ..`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..n {
            for u in self.adj[v].iter().take_while(|&u| u < v) {
                out.push((u, v));
            }
        }
        out
    }

    /// Returns the same graph with new vertex names.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.vertex_count() {
            return Err(Error::arg("name list length differs from vertex count"));
        }
        Self::with_names(names, &self.edges())
    }

    /// The subgraph induced by `vertices`, keeping names. Vertex order in the
    /// result follows `vertices`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        if let Some(&bad) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::arg(format!("vertex {bad} out of range for {n} vertices")));
        }
        let names = vertices.iter().map(|&v| self.names[v].clone()).collect();
        Self::from_fn(names, |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    /// The graph with vertex `v` removed.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`. Names move with
    /// their vertices.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut check = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut check[p], true)) {
            return Err(Error::arg("not a permutation of the vertex set"));
        }
        let mut names = vec![String::new(); n];
        for v in 0..n {
            names[perm[v]] = self.names[v].clone();
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::with_names(names, &edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with exactly one component. The empty graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Breadth-first distances from `source`.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distances between all pairs of vertices.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.vertex_count();
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            entries.extend(self.bfs_distances(s));
        }
        DistanceMatrix { n, entries }
    }

    /// Cartesian product; vertex `(u, v)` gets index `u * other.n + v` and name `"u,v"`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.vertex_count(), other.vertex_count());
        let mut names = Vec::with_capacity(n1 * n2);
        for a in &self.names {
            for b in &other.names {
                names.push(format!("{a},{b}"));
            }
        }
        Self::from_fn(names, |x, y| {
            let (u1, v1) = (x / n2, x % n2);
            let (u2, v2) = (y / n2, y % n2);
            (u1 == u2 && other.has_edge(v1, v2)) || (v1 == v2 && self.has_edge(u1, u2))
        })
        .expect("product of simple graphs is simple")
    }

    /// Equality of name sets and of the edge sets expressed through names.
    pub fn same_labelled_graph(&self, other: &Graph) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut map = Vec::with_capacity(self.vertex_count());
        for name in &self.names {
            match other.index_of(name) {
                Some(j) => map.push(j),
                None => return false,
            }
        }
        self.edges().into_iter().all(|(u, v)| other.has_edge(map[u], map[v]))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &edges)
            .finish()
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Pairwise shortest-path lengths; `None` marks vertices in different components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.entries[u * self.n + v]
    }

    /// Closed ball of radius `d` around `v`.
    pub fn ball(&self, v: usize, d: u32) -> VertexSet {
        VertexSet::from_indices(
            self.n,
            (0..self.n).filter(|&u| self.get(v, u).is_some_and(|x| x <= d)),
        )
    }

    /// Largest distance from `v`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        (0..self.n).map(|u| self.get(v, u)).try_fold(0, |acc, x| x.map(|x| acc.max(x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example_graph_distances() {
        let g = fixtures::domination_example();
        let dm = g.all_pairs_distances();
        assert_eq!(dm.get(0, 3), Some(3));
        for v in 0..7 {
            assert_eq!(dm.get(v, v), Some(0));
        }
    }

    #[test]
    fn complete_graph_distances_are_one() {
        let g = crate::family::complete(5).unwrap();
        let dm = g.all_pairs_distances();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(dm.get(u, v), Some(if u == v { 0 } else { 1 }));
            }
        }
    }

    #[test]
    fn unreachable_pairs() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let dm = g.all_pairs_distances();
        assert_eq!(dm.get(0, 2), None);
        assert_eq!(dm.eccentricity(0), None);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn rejects_loops_and_duplicate_names() {
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::with_names(vec!["a".into(), "a".into()], &[]).is_err());
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = fixtures::k23_with_pendant();
        let pendant = (0..g.vertex_count()).find(|&v| g.degree(v) == 1).unwrap();
        let rest: Vec<_> = (0..g.vertex_count()).filter(|&v| v != pendant).collect();
        let h = g.induced_subgraph(&rest).unwrap();
        let k23 = crate::family::complete_bipartite(2, 3).unwrap();
        assert_eq!(crate::canon::canonical_form(&h).unwrap(), crate::canon::canonical_form(&k23).unwrap());
        assert_eq!(h.names().len(), 5);
        assert!(h.names().iter().all(|n| g.index_of(n).is_some()));

        let all: Vec<_> = (0..g.vertex_count()).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        assert_eq!(g.induced_subgraph(&[]).unwrap().vertex_count(), 0);
        assert!(g.induced_subgraph(&[0, 17]).is_err());
    }

    #[test]
    fn product_of_edges_is_square() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let sq = k2.cartesian_product(&k2);
        assert_eq!(sq.edge_count(), 4);
        assert!(sq.all_pairs_distances().eccentricity(0) == Some(2));
    }
}
