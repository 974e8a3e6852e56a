//! Canonical forms for small graphs.
//!
//! Vertices are first coloured by iterated degree refinement, which is
//! isomorphism invariant, so only orderings that list the colour classes in a
//! fixed order need to be considered. Among those orderings we take the one
//! maximising the graph6 bit string, found by branch and bound over positions.
//! Interchangeable vertices (twins) are expanded only once per position.
//!
//! The canonical form is the graph6 word of the relabelled graph.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;

/// Largest graph accepted by [`canonical_form`].
pub const MAX_VERTICES: usize = 16;

/// Canonical byte string: equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonical_graph6(g)?.into_bytes())
}

/// Canonical form rendered as a graph6 word.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let relabelled = Graph::from_edges(
        g.vertex_count(),
        &g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>(),
    )?;
    write_graph6(&relabelled)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// The canonical vertex order: `order[p]` is the vertex placed at position `p`.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize {
            what: "canonical form vertex count",
            size: n,
            limit: MAX_VERTICES,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    let colors = refine_colors(&adj);
    let mut cell_of_pos: Vec<u32> = colors.clone();
    cell_of_pos.sort_unstable();

    let mut twin = vec![0u32; n];
    for u in 0..n {
        for w in 0..n {
            if u != w && adj[u] & !(1 << w) == adj[w] & !(1 << u) {
                twin[u] |= 1 << w;
            }
        }
    }

    let mut search = Search {
        n,
        adj: &adj,
        colors: &colors,
        cell_of_pos: &cell_of_pos,
        twin: &twin,
        cur_order: Vec::with_capacity(n),
        cur_cols: Vec::with_capacity(n),
        best_order: Vec::new(),
        best_cols: Vec::new(),
    };
    search.dfs(0);
    Ok(search.best_order)
}

/// Stable colouring by iterated refinement. Colour ids are ranks of sorted
/// signatures and therefore do not depend on the input vertex order.
fn refine_colors(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let mut colors: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut classes = distinct(&colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap() as u32)
            .collect();
        let next_classes = distinct(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    n: usize,
    adj: &'a [u32],
    colors: &'a [u32],
    cell_of_pos: &'a [u32],
    twin: &'a [u32],
    cur_order: Vec<usize>,
    cur_cols: Vec<u32>,
    best_order: Vec<usize>,
    best_cols: Vec<u32>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> u32 {
        let p = self.cur_order.len();
        self.cur_order
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &u)| acc | ((self.adj[v] >> u & 1) << (p - 1 - i)))
    }

    fn prefix_cmp(&self) -> Ordering {
        if self.best_cols.is_empty() {
            return Ordering::Greater;
        }
        let p = self.cur_cols.len();
        self.cur_cols[..].cmp(&self.best_cols[..p])
    }

    fn dfs(&mut self, placed: u32) {
        let p = self.cur_order.len();
        if p == self.n {
            if self.best_cols.is_empty() || self.cur_cols > self.best_cols {
                self.best_cols = self.cur_cols.clone();
                self.best_order = self.cur_order.clone();
            }
            return;
        }
        let cell = self.cell_of_pos[p];
        let mut cands: Vec<(u32, usize)> = Vec::new();
        let mut covered = 0u32;
        for v in 0..self.n {
            if placed >> v & 1 == 1 || self.colors[v] != cell || covered >> v & 1 == 1 {
                continue;
            }
            covered |= self.twin[v] & !placed;
            cands.push((self.column(v), v));
        }
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (col, v) in cands {
            self.cur_cols.push(col);
            if self.prefix_cmp() != Ordering::Less {
                self.cur_order.push(v);
                self.dfs(placed | 1 << v);
                self.cur_order.pop();
            }
            self.cur_cols.pop();
        }
    }
}
