//! Labellings: distinct `k`-sets on the vertices such that two vertices are
//! adjacent exactly when their labels share `k - 1` symbols.

mod constructions;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use constructions::{
    combine_components, extend_over_pendants, pendant_elimination, product_labelling,
    reduce_pendants, star_labelling, wheel_labelling, PendantElimination,
};
pub use search::{
    find_labelling, find_labelling_with, SearchBudget, SearchOptions, SearchOutcome,
    SearchOutcomeDocument,
};

/// Labels for vertices `0..n`, each a sorted set of `k` positive symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labelling {
    k: usize,
    labels: Vec<Vec<u32>>,
}

/// The first pair of vertices that breaks a labelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    VertexCount { labels: usize, vertices: usize },
    EqualLabels { u: usize, v: usize },
    Adjacency {
        u: usize,
        v: usize,
        adjacent: bool,
        shared: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::VertexCount { labels, vertices } => {
                write!(f, "{labels} labels for {vertices} vertices")
            }
            Violation::EqualLabels { u, v } => write!(f, "vertices {u} and {v} have equal labels"),
            Violation::Adjacency {
                u,
                v,
                adjacent,
                shared,
            } => write!(
                f,
                "vertices {u} and {v} are {} but their labels share {shared} symbols",
                if adjacent { "adjacent" } else { "not adjacent" }
            ),
        }
    }
}

impl std::error::Error for Violation {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabellingDocument {
    pub k: usize,
    pub labels: BTreeMap<String, Vec<u32>>,
}

fn shared(a: &[u32], b: &[u32]) -> usize {
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

impl Labelling {
    /// Sorts each label and checks that it has exactly `k` distinct positive symbols.
    /// Distinctness between labels is part of [`Labelling::check`].
    pub fn new(k: usize, mut labels: Vec<Vec<u32>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::arg("label size k must be positive"));
        }
        for (v, label) in labels.iter_mut().enumerate() {
            label.sort_unstable();
            label.dedup();
            if label.len() != k {
                return Err(Error::arg(format!(
                    "label of vertex {v} has {} distinct symbols, expected {k}",
                    label.len()
                )));
            }
            if label[0] == 0 {
                return Err(Error::arg(format!("label of vertex {v} uses symbol 0")));
            }
        }
        Ok(Labelling { k, labels })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Vec<u32>] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &[u32] {
        &self.labels[v]
    }

    /// Largest symbol in use, 0 when there are no labels.
    pub fn max_symbol(&self) -> u32 {
        self.labels.iter().filter_map(|l| l.last().copied()).max().unwrap_or(0)
    }

    /// All symbols in use, sorted.
    pub fn symbols(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.labels.iter().flatten().copied().collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Shifts every symbol up by `by`.
    pub fn offset(&self, by: u32) -> Labelling {
        Labelling {
            k: self.k,
            labels: self.labels.iter().map(|l| l.iter().map(|s| s + by).collect()).collect(),
        }
    }

    /// Adds one new symbol to every label, raising `k` by one.
    pub fn with_common_symbol(&self) -> Labelling {
        let fresh = self.max_symbol() + 1;
        Labelling {
            k: self.k + 1,
            labels: self
                .labels
                .iter()
                .map(|l| {
                    let mut l = l.clone();
                    l.push(fresh);
                    l
                })
                .collect(),
        }
    }

    /// Checks distinctness and the adjacency rule on every pair of vertices.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), Violation> {
        match is_valid_labelling(g, self) {
            Ok(None) => Ok(()),
            Ok(Some(v)) => Err(v),
            Err(_) => Err(Violation::VertexCount {
                labels: self.labels.len(),
                vertices: g.vertex_count(),
            }),
        }
    }

    pub fn to_document(&self, g: &Graph) -> LabellingDocument {
        LabellingDocument {
            k: self.k,
            labels: self
                .labels
                .iter()
                .enumerate()
                .map(|(v, l)| (g.name(v).to_string(), l.clone()))
                .collect(),
        }
    }

    /// Reads a document against `g`'s vertex names; every vertex must be labelled.
    pub fn from_document(doc: &LabellingDocument, g: &Graph) -> Result<Self> {
        let mut labels = Vec::with_capacity(g.vertex_count());
        for name in g.names() {
            let l = doc
                .labels
                .get(name)
                .ok_or_else(|| Error::arg(format!("vertex {name:?} has no label")))?;
            labels.push(l.clone());
        }
        if doc.labels.len() != g.vertex_count() {
            return Err(Error::arg("labelling names vertices that are not in the graph"));
        }
        Labelling::new(doc.k, labels)
    }
}

/// `Ok(None)` when `l` is a valid labelling of `g`, otherwise the first
/// offending pair in column order. Errors when the vertex counts differ.
pub fn is_valid_labelling(g: &Graph, l: &Labelling) -> Result<Option<Violation>> {
    let n = g.vertex_count();
    if l.len() != n {
        return Err(Error::arg(format!(
            "labelling covers {} vertices, graph has {n}",
            l.len()
        )));
    }
    for v in 1..n {
        for u in 0..v {
            let s = shared(&l.labels[u], &l.labels[v]);
            if s == l.k {
                return Ok(Some(Violation::EqualLabels { u, v }));
            }
            let adjacent = g.has_edge(u, v);
            if adjacent != (s + 1 == l.k) {
                return Ok(Some(Violation::Adjacency {
                    u,
                    v,
                    adjacent,
                    shared: s,
                }));
            }
        }
    }
    Ok(None)
}

/// The only possible labels of the middle vertex of an induced path whose end
/// labels are `end1` and `end2`: with `T` their intersection, `end1 = T + {u1, u2}`
/// and `end2 = T + {w1, w2}`, the candidates are `T + {ui, wj}`.
pub fn middle_label_candidates(end1: &[u32], end2: &[u32]) -> Result<Vec<Vec<u32>>> {
    let mut a = end1.to_vec();
    let mut b = end2.to_vec();
    a.sort_unstable();
    a.dedup();
    b.sort_unstable();
    b.dedup();
    if a.len() != end1.len() || b.len() != end2.len() || a.len() != b.len() {
        return Err(Error::arg("end labels must be sets of the same size"));
    }
    let k = a.len();
    let common: Vec<u32> = a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect();
    if k < 2 || common.len() != k - 2 {
        return Err(Error::arg(format!(
            "end labels must share exactly {} symbols, they share {}",
            k.saturating_sub(2),
            common.len()
        )));
    }
    let only_a: Vec<u32> = a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect();
    let only_b: Vec<u32> = b.iter().copied().filter(|x| a.binary_search(x).is_err()).collect();
    let mut out = Vec::with_capacity(4);
    for &x in &only_a {
        for &y in &only_b {
            let mut l = common.clone();
            l.push(x);
            l.push(y);
            l.sort_unstable();
            out.push(l);
        }
    }
    Ok(out)
}

/// The two shapes a triangle's labels can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleForm {
    /// `12X, 13X, 23X`: common part of size `k - 2`, union of size `k + 1`.
    Alpha,
    /// `1X, 2X, 3X`: common part of size `k - 1`, union of size `k + 2`.
    Beta,
}

/// Classifies three labels that pairwise share `k - 1` symbols. `None` if they
/// do not pairwise share `k - 1` symbols or fit neither shape.
pub fn triangle_form(a: &[u32], b: &[u32], c: &[u32]) -> Option<TriangleForm> {
    let k = a.len();
    if b.len() != k || c.len() != k {
        return None;
    }
    if shared(a, b) + 1 != k || shared(a, c) + 1 != k || shared(b, c) + 1 != k {
        return None;
    }
    let mut all: Vec<u32> = a.iter().chain(b).chain(c).copied().collect();
    all.sort_unstable();
    all.dedup();
    let common = a.iter().filter(|x| b.contains(x) && c.contains(x)).count();
    if common + 2 == k && all.len() == k + 1 {
        Some(TriangleForm::Alpha)
    } else if common + 1 == k && all.len() == k + 2 {
        Some(TriangleForm::Beta)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn lab(k: usize, labels: &[&[u32]]) -> Labelling {
        Labelling::new(k, labels.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn cycle_five() {
        let c5 = family::cycle(5).unwrap();
        let l = lab(2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        assert_eq!(l.check(&c5), Ok(()));
        assert!(l.with_common_symbol().check(&c5).is_ok());
        assert_eq!(l.with_common_symbol().label(0), [1, 2, 6]);
    }

    #[test]
    fn reports_first_violation() {
        let p3 = family::path(3).unwrap();
        let l = lab(2, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(
            is_valid_labelling(&p3, &l).unwrap(),
            Some(Violation::Adjacency {
                u: 0,
                v: 2,
                adjacent: false,
                shared: 1
            })
        );
        let twins = lab(2, &[&[1, 2], &[2, 3], &[2, 1]]);
        assert_eq!(is_valid_labelling(&p3, &twins).unwrap(), Some(Violation::EqualLabels { u: 0, v: 2 }));
        assert!(is_valid_labelling(&family::path(2).unwrap(), &l).is_err());
    }

    #[test]
    fn constructor_rejects_bad_labels() {
        assert!(Labelling::new(2, vec![vec![1, 1]]).is_err());
        assert!(Labelling::new(2, vec![vec![0, 1]]).is_err());
        assert!(Labelling::new(0, vec![]).is_err());
    }

    #[test]
    fn middle_candidates() {
        assert_eq!(
            middle_label_candidates(&[1, 2], &[3, 4]).unwrap(),
            vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
        assert_eq!(
            middle_label_candidates(&[1, 2, 5], &[3, 4, 5]).unwrap(),
            vec![vec![1, 3, 5], vec![1, 4, 5], vec![2, 3, 5], vec![2, 4, 5]]
        );
        assert!(middle_label_candidates(&[1, 2], &[1, 3]).is_err());
        assert!(middle_label_candidates(&[1], &[2]).is_err());
    }

    #[test]
    fn triangle_forms() {
        assert_eq!(triangle_form(&[1, 2, 9], &[1, 3, 9], &[2, 3, 9]), Some(TriangleForm::Alpha));
        assert_eq!(triangle_form(&[1, 9], &[2, 9], &[3, 9]), Some(TriangleForm::Beta));
        assert_eq!(triangle_form(&[1, 2], &[3, 4], &[1, 3]), None);
    }

    #[test]
    fn document_roundtrip() {
        let c5 = family::cycle(5).unwrap();
        let l = lab(2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let doc = l.to_document(&c5);
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.starts_with(r#"{"k":2,"labels":{"1":[1,2],"2":[2,3]"#));
        assert_eq!(Labelling::from_document(&doc, &c5).unwrap(), l);
    }
}
