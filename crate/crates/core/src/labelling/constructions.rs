//! Labellings built directly rather than searched for.

use super::Labelling;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Labelling of `g1 □ g2` from labellings of the factors. Product vertex
/// `(u, v)` has index `u * n2 + v` and label `l1(u) ∪ l2'(v)`, where `l2'` is
/// `l2` itself when the two use disjoint symbols and `l2` shifted past the
/// symbols of `l1` otherwise.
pub fn product_labelling(g1: &Graph, l1: &Labelling, g2: &Graph, l2: &Labelling) -> Result<Labelling> {
    for (g, l) in [(g1, l1), (g2, l2)] {
        if let Err(v) = l.check(g) {
            return Err(Error::arg(format!("factor labelling is invalid: {v}")));
        }
    }
    let s1 = l1.symbols();
    let shifted = if l2.symbols().iter().any(|s| s1.binary_search(s).is_ok()) {
        l2.offset(l1.max_symbol())
    } else {
        l2.clone()
    };
    let mut labels = Vec::with_capacity(l1.len() * l2.len());
    for a in l1.labels() {
        for b in shifted.labels() {
            labels.push(a.iter().chain(b).copied().collect());
        }
    }
    Labelling::new(l1.k() + l2.k(), labels)
}

/// Record of repeatedly deleting vertices of degree at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantElimination {
    /// Vertices left when no vertex has degree at most one, ascending.
    pub remaining: Vec<usize>,
    /// Deleted vertices in deletion order, with their only neighbour at the time.
    pub removed: Vec<(usize, Option<usize>)>,
}

/// Deletes isolated and pendant vertices until none are left, always taking
/// the smallest such vertex.
pub fn pendant_elimination(g: &Graph) -> PendantElimination {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = Vec::new();
    while let Some(v) = (0..n).find(|&v| alive[v] && degree[v] <= 1) {
        alive[v] = false;
        let anchor = g.neighbors(v).iter().find(|&u| alive[u]);
        if let Some(u) = anchor {
            degree[u] -= 1;
        }
        removed.push((v, anchor));
    }
    PendantElimination {
        remaining: (0..n).filter(|&v| alive[v]).collect(),
        removed,
    }
}

/// The graph left by [`pendant_elimination`], with names kept. An empty result
/// means `g` is a forest.
pub fn reduce_pendants(g: &Graph) -> Graph {
    let e = pendant_elimination(g);
    g.induced_subgraph(&e.remaining).expect("remaining vertices are in range")
}

/// Extends a labelling of the reduced graph to all of `g` by putting the
/// deleted vertices back in reverse order. `core` labels `elim.remaining` in
/// that order and may be `None` only when nothing remains.
pub fn extend_over_pendants(g: &Graph, elim: &PendantElimination, core: Option<&Labelling>) -> Result<Labelling> {
    let n = g.vertex_count();
    let mut k = 1;
    let mut labels: Vec<Option<Vec<u32>>> = vec![None; n];
    match core {
        Some(c) => {
            if c.len() != elim.remaining.len() {
                return Err(Error::arg("core labelling does not match the reduced graph"));
            }
            k = c.k();
            for (i, &v) in elim.remaining.iter().enumerate() {
                labels[v] = Some(c.label(i).to_vec());
            }
        }
        None if !elim.remaining.is_empty() => {
            return Err(Error::arg("a labelling of the reduced graph is required"));
        }
        None => {}
    }
    let mut next = labels.iter().flatten().flatten().copied().max().unwrap_or(0) + 1;
    let add_common = |labels: &mut Vec<Option<Vec<u32>>>, k: &mut usize, next: &mut u32| {
        for l in labels.iter_mut().flatten() {
            l.push(*next);
        }
        *next += 1;
        *k += 1;
        *next - 1
    };
    for &(v, anchor) in elim.removed.iter().rev() {
        let label = match anchor {
            None => {
                if labels.iter().any(Option::is_some) {
                    while k < 2 {
                        add_common(&mut labels, &mut k, &mut next);
                    }
                }
                let l: Vec<u32> = (next..next + k as u32).collect();
                next += k as u32;
                l
            }
            Some(u) => {
                let lu = labels[u].clone().expect("anchor is labelled before its pendant");
                let swapped_out: Vec<u32> = g
                    .neighbors(u)
                    .iter()
                    .filter_map(|w| labels[w].as_ref())
                    .flat_map(|lw| lu.iter().copied().filter(|s| !lw.contains(s)))
                    .collect();
                let keep = lu.iter().copied().find(|s| !swapped_out.contains(s));
                let (mut lu, a) = match keep {
                    Some(a) => (lu, a),
                    None => {
                        let c = add_common(&mut labels, &mut k, &mut next);
                        (labels[u].clone().unwrap(), c)
                    }
                };
                lu.retain(|&s| s != a);
                lu.push(next);
                next += 1;
                lu
            }
        };
        labels[v] = Some(label);
    }
    let labels = labels.into_iter().map(|l| l.expect("every vertex relabelled")).collect();
    Labelling::new(k, labels)
}

/// Joins labellings of the components of `g`. `parts[i]` holds a component's
/// vertices and a labelling of the subgraph they induce, in that order.
/// Symbol ranges are made disjoint and every component is padded with its own
/// common symbols to a shared size of at least 2 when there are several.
pub fn combine_components(g: &Graph, parts: &[(Vec<usize>, Labelling)]) -> Result<Labelling> {
    let n = g.vertex_count();
    let kmax = parts.iter().map(|(_, l)| l.k()).max().unwrap_or(1);
    let target = if parts.len() > 1 { kmax.max(2) } else { kmax };
    let mut labels: Vec<Option<Vec<u32>>> = vec![None; n];
    let mut base = 0;
    for (verts, l) in parts {
        if verts.len() != l.len() {
            return Err(Error::arg("component labelling does not match its vertex list"));
        }
        let mut l = l.offset(base);
        while l.k() < target {
            l = l.with_common_symbol();
        }
        base = base.max(l.max_symbol());
        for (i, &v) in verts.iter().enumerate() {
            if v >= n || labels[v].is_some() {
                return Err(Error::arg("component vertex lists must partition the graph"));
            }
            labels[v] = Some(l.label(i).to_vec());
        }
    }
    let labels = labels
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::arg("component vertex lists must cover the graph"))?;
    Labelling::new(target, labels)
}

/// Labelling of the wheel on `n` vertices in the layout of [`crate::family::wheel`]
/// (rim `0..n-1` in cycle order, hub last).
///
/// For `n = 2m + 1` the hub gets `[m]`, rim vertex `v_{2i-1}` gets
/// `[m] - {i} + {m+i}` and `v_{2i}` gets `[m] - {i} + {m+1+(i mod m)}`.
pub fn wheel_labelling(n: usize) -> Result<Labelling> {
    if n == 4 {
        return Labelling::new(1, (1..=4).map(|s| vec![s]).collect());
    }
    if n < 4 {
        return Err(Error::arg(format!("a wheel needs at least 4 vertices, got {n}")));
    }
    if n.is_multiple_of(2) {
        return Err(Error::arg(format!(
            "the wheel on {n} vertices is unlabellable: even wheels with at least 6 vertices have no labelling"
        )));
    }
    let m = (n - 1) / 2;
    let hub: Vec<u32> = (1..=m as u32).collect();
    let swap = |i: u32, add: u32| -> Vec<u32> {
        hub.iter().copied().filter(|&s| s != i).chain([add]).collect()
    };
    let mut labels = Vec::with_capacity(n);
    for i in 1..=m as u32 {
        labels.push(swap(i, m as u32 + i));
        labels.push(swap(i, m as u32 + 1 + i % m as u32));
    }
    labels.push(hub.clone());
    Labelling::new(m, labels)
}

/// Labelling of the star with `m` leaves in the layout of `fan(m, 1)`
/// (centre 0, leaves `1..=m`): centre `[m]`, leaf `i` gets `[m] - {i} + {m+i}`.
pub fn star_labelling(m: usize) -> Result<Labelling> {
    if m == 0 {
        return Err(Error::arg("a star needs at least one leaf"));
    }
    let m = m as u32;
    let centre: Vec<u32> = (1..=m).collect();
    let mut labels = vec![centre.clone()];
    for i in 1..=m {
        labels.push(centre.iter().copied().filter(|&s| s != i).chain([m + i]).collect());
    }
    Labelling::new(m as usize, labels)
}
