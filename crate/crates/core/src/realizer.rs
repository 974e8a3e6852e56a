//! A graph whose minimum distance-d dominating sets are a prescribed family.
//!
//! Given a nonempty family `D` of `k`-sets, relabel its support onto
//! `{1..n}`, compute the blocker `B` of `D`, start from `K_n`, and for every
//! member `b` of `B` add two vertices `x_b`, `y_b` joined to exactly the
//! vertices of `b`, each carrying a pendant path of `d - 1` further vertices.
//! A set then dominates iff it meets every member of `B`, and minimum
//! dominating sets avoid the gadgets, so the minimum dominating sets are the
//! minimal transversals of `B`, which is `D` again.

use serde::{Deserialize, Serialize};

use crate::clutter::{bit, blocker, elements, Clutter};
use crate::domination::{min_dominating_sets_with, DominationOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{write_graph6, MAX_VERTICES};

/// Vertices added for one blocker member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    /// The blocker member, in relabelled core symbols.
    pub member: Vec<u32>,
    pub x: usize,
    pub y: usize,
    /// Path hanging from `x`: `x_path[0]` is adjacent to `x`, the last entry is the pendant.
    pub x_path: Vec<usize>,
    pub y_path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedGraph {
    pub graph: Graph,
    /// Core vertices are indices `0..core_size`, named `"1"..`.
    pub core_size: usize,
    pub gadgets: Vec<Gadget>,
    pub d: u32,
    /// `symbols[i]` is the caller's symbol for core vertex `i`.
    pub symbols: Vec<u32>,
    /// Blocker of the relabelled family.
    pub blocker: Clutter,
}

/// Relabels the support of `family` onto `1..=n` in increasing order.
fn relabel(family: &Clutter) -> Result<(Clutter, Vec<u32>, usize)> {
    if family.is_empty() {
        return Err(Error::arg("the family of dominating sets must be nonempty"));
    }
    let k = family
        .uniform_size()
        .ok_or_else(|| Error::arg("all prescribed sets must have the same size"))?;
    if k == 0 {
        return Err(Error::arg("prescribed sets must be nonempty"));
    }
    let symbols = family.support();
    let n = symbols.len();
    let masks = family
        .member_masks()
        .iter()
        .map(|&m| {
            elements(m).into_iter().fold(0u64, |acc, e| {
                acc | bit(symbols.binary_search(&e).unwrap() as u32 + 1)
            })
        })
        .collect();
    Ok((Clutter::from_masks(n, masks)?, symbols, k))
}

fn set_name(member: &[u32]) -> String {
    let parts: Vec<String> = member.iter().map(u32::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn realize(family: &Clutter, d: u32) -> Result<RealizedGraph> {
    if d == 0 {
        return Err(Error::arg("distance parameter d must be positive"));
    }
    let (relabelled, symbols, _) = relabel(family)?;
    let n = symbols.len();
    let b = blocker(&relabelled)?;

    let mut names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    let mut gadgets = Vec::with_capacity(b.len());
    for member in b.members() {
        let tag = set_name(&member);
        let hang = |side: char, names: &mut Vec<String>, edges: &mut Vec<(usize, usize)>| {
            let head = names.len();
            names.push(format!("{side}{tag}"));
            for &e in &member {
                edges.push((e as usize - 1, head));
            }
            let mut path = Vec::with_capacity(d as usize - 1);
            let mut prev = head;
            for i in 1..d {
                let v = names.len();
                names.push(format!("{side}{tag}.p{i}"));
                edges.push((prev, v));
                path.push(v);
                prev = v;
            }
            (head, path)
        };
        let (x, x_path) = hang('x', &mut names, &mut edges);
        let (y, y_path) = hang('y', &mut names, &mut edges);
        gadgets.push(Gadget {
            member,
            x,
            y,
            x_path,
            y_path,
        });
    }
    Ok(RealizedGraph {
        graph: Graph::with_names(names, &edges)?,
        core_size: n,
        gadgets,
        d,
        symbols,
        blocker: b,
    })
}

/// Vertex and edge counts of [`realize`] without building the graph.
pub fn construction_size(family: &Clutter, d: u32) -> Result<(usize, usize)> {
    if d == 0 {
        return Err(Error::arg("distance parameter d must be positive"));
    }
    let (relabelled, symbols, _) = relabel(family)?;
    let n = symbols.len();
    let b = blocker(&relabelled)?;
    let d = d as usize;
    let weight: usize = b.member_masks().iter().map(|m| m.count_ones() as usize).sum();
    Ok((
        n + 2 * d * b.len(),
        n * (n - 1) / 2 + 2 * weight + 2 * (d - 1) * b.len(),
    ))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Vertex and edge counts of the older distance-1 construction that hangs a
/// gadget on every `(k-1)`-subset and every non-member `k`-subset of the
/// support, for comparison with [`construction_size`].
pub fn hhl_size(family: &Clutter) -> Result<(u128, u128)> {
    let (_, symbols, k) = relabel(family)?;
    let n = symbols.len() as u128;
    let k = k as u128;
    let count = family.len() as u128;
    let below = binomial(n, k - 1);
    let absent = binomial(n, k) - count;
    let vertices = n + (k + 1) * below + (k + 1) * absent;
    let edges = binomial(n, 2) + (k + 1) * (n - k + 1) * below + (k + 1) * (n - k) * absent;
    Ok((vertices, edges))
}

/// Outcome of checking a realized graph against the family it should realize.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub gamma: usize,
    /// Prescribed sets that are not minimum dominating sets.
    pub missing: Vec<Vec<u32>>,
    /// Minimum dominating sets inside the core that were not prescribed.
    pub extra: Vec<Vec<u32>>,
    /// Minimum dominating sets that use a gadget vertex, by vertex name.
    pub gadget_sets: Vec<Vec<String>>,
}

pub fn verify_realization(r: &RealizedGraph, family: &Clutter) -> Result<VerificationReport> {
    verify_realization_with(r, family, DominationOptions::default())
}

pub fn verify_realization_with(
    r: &RealizedGraph,
    family: &Clutter,
    options: DominationOptions,
) -> Result<VerificationReport> {
    let result = min_dominating_sets_with(&r.graph, r.d, options)?;
    let mut found = Vec::new();
    let mut gadget_sets = Vec::new();
    for set in &result.min_sets {
        if set.iter().all(|&v| v < r.core_size) {
            let mut syms: Vec<u32> = set.iter().map(|&v| r.symbols[v]).collect();
            syms.sort_unstable();
            found.push(syms);
        } else {
            gadget_sets.push(set.iter().map(|&v| r.graph.name(v).to_string()).collect());
        }
    }
    found.sort();
    let mut wanted = family.members();
    wanted.sort();
    let missing: Vec<_> = wanted.iter().filter(|s| found.binary_search(s).is_err()).cloned().collect();
    let extra: Vec<_> = found.iter().filter(|s| wanted.binary_search(s).is_err()).cloned().collect();
    Ok(VerificationReport {
        ok: missing.is_empty() && extra.is_empty() && gadget_sets.is_empty(),
        gamma: result.gamma,
        missing,
        extra,
        gadget_sets,
    })
}

/// JSON summary of a realization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationDocument {
    pub d: u32,
    pub vertices: usize,
    pub edges: usize,
    /// Present when the graph has at most 62 vertices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    pub names: Vec<String>,
    /// Core vertex name to the caller's symbol.
    pub relabel: Vec<(String, u32)>,
    pub blocker: Vec<Vec<u32>>,
    pub construction_size: (usize, usize),
    /// Only defined for d = 1; omitted otherwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hhl_size: Option<(u128, u128)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
}

impl RealizedGraph {
    pub fn to_document(&self, family: &Clutter) -> Result<RealizationDocument> {
        let g = &self.graph;
        Ok(RealizationDocument {
            d: self.d,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            graph6: (g.vertex_count() <= MAX_VERTICES).then(|| write_graph6(g)).transpose()?,
            names: g.names().to_vec(),
            relabel: (0..self.core_size).map(|i| (g.name(i).to_string(), self.symbols[i])).collect(),
            blocker: self.blocker.members(),
            construction_size: construction_size(family, self.d)?,
            hhl_size: if self.d == 1 { Some(hhl_size(family)?) } else { None },
            verification: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clutter::validate_clutter;
    use crate::domination::min_dominating_sets;

    fn fam(n: usize, sets: &[&[u32]]) -> Clutter {
        validate_clutter(n, &sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn five_member() -> Clutter {
        fam(8, &[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 4, 6], &[2, 3, 5, 7], &[3, 5, 7, 8]])
    }

    #[test]
    fn worked_example_d3() {
        let d = fam(4, &[&[1, 2, 3], &[1, 2, 4]]);
        let r = realize(&d, 3).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (22, 26));
        assert_eq!(construction_size(&d, 3).unwrap(), (22, 26));
        let rep = verify_realization(&r, &d).unwrap();
        assert!(rep.ok, "{rep:?}");
        assert_eq!(rep.gamma, 3);
    }

    #[test]
    fn worked_example_d1() {
        let d = fam(4, &[&[1, 2, 3], &[1, 2, 4]]);
        let r = realize(&d, 1).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (10, 14));
        assert_eq!(hhl_size(&d).unwrap(), (36, 62));
    }

    #[test]
    fn five_member_sizes() {
        let d = five_member();
        assert_eq!(construction_size(&d, 1).unwrap(), (28, 68));
        assert_eq!(hhl_size(&d).unwrap(), (613, 2728));
        let r = realize(&d, 1).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (28, 68));
    }

    #[test]
    fn singleton_family() {
        let d = fam(1, &[&[1]]);
        let r = realize(&d, 1).unwrap();
        assert_eq!(r.graph.names(), ["1", "x{1}", "y{1}"]);
        assert_eq!(r.graph.edge_count(), 2);
        let m = min_dominating_sets(&r.graph, 1).unwrap();
        assert_eq!(m.min_sets, vec![vec![0]]);
        assert_eq!(hhl_size(&d).unwrap(), (3, 2));
    }

    #[test]
    fn gadget_names_and_paths() {
        let d = fam(4, &[&[1, 2, 3], &[1, 2, 4]]);
        let r = realize(&d, 3).unwrap();
        let g = &r.graph;
        let gad = r.gadgets.iter().find(|g| g.member == [3, 4]).unwrap();
        assert_eq!(g.name(gad.x), "x{3,4}");
        assert_eq!(g.name(gad.x_path[1]), "x{3,4}.p2");
        assert_eq!(g.degree(gad.x), 3);
        assert_eq!(g.degree(gad.x_path[1]), 1);
        for gd in &r.gadgets {
            for v in [gd.x, gd.y] {
                let core: Vec<u32> = g.neighbors(v).iter().filter(|&u| u < 4).map(|u| u as u32 + 1).collect();
                assert_eq!(core, gd.member);
            }
        }
    }

    #[test]
    fn relabels_sparse_symbols() {
        let d = fam(9, &[&[3, 9], &[5, 9]]);
        let r = realize(&d, 2).unwrap();
        assert_eq!(r.symbols, vec![3, 5, 9]);
        assert!(verify_realization(&r, &d).unwrap().ok);
    }

    #[test]
    fn pair_family_at_distance_two() {
        let d = fam(2, &[&[1, 2]]);
        let r = realize(&d, 2).unwrap();
        assert!(verify_realization(&r, &d).unwrap().ok);
    }

    #[test]
    fn mismatch_reports_extra() {
        let d = fam(4, &[&[1, 2, 3], &[1, 2, 4]]);
        let r = realize(&d, 1).unwrap();
        let fewer = fam(4, &[&[1, 2, 3]]);
        let rep = verify_realization(&r, &fewer).unwrap();
        assert!(!rep.ok);
        assert_eq!(rep.extra, vec![vec![1, 2, 4]]);
        assert!(rep.missing.is_empty());
    }

    #[test]
    fn precondition_errors() {
        assert!(realize(&fam(3, &[]), 1).is_err());
        assert!(realize(&fam(3, &[&[1], &[2, 3]]), 1).is_err());
        assert!(realize(&fam(3, &[&[1]]), 0).is_err());
        assert!(hhl_size(&fam(3, &[&[1], &[2, 3]])).is_err());
    }
}
