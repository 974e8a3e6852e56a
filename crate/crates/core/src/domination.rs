//! Exact distance-d domination.
//!
//! Subsets are scanned by increasing size and, within a size, in
//! lexicographic order of vertex indices. The first size that contains a
//! dominating set is the domination number, and every dominating set of that
//! size is collected.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Limits for the exhaustive scan.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DominationOptions {
    /// Maximum number of candidate subsets to test; `None` for no limit.
    pub work_limit: Option<u64>,
}

/// The domination number for a distance and every minimum dominating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub d: u32,
    pub gamma: usize,
    /// Sorted vertex-index sets, in lexicographic order.
    pub min_sets: Vec<Vec<usize>>,
}

/// JSON form of a [`DominationResult`], with sets written as vertex names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationDocument {
    pub d: u32,
    pub gamma: usize,
    pub min_sets: Vec<Vec<String>>,
}

impl DominationResult {
    /// Names within each set and the list of sets are sorted as strings.
    pub fn to_document(&self, g: &Graph) -> DominationDocument {
        DominationDocument {
            d: self.d,
            gamma: self.gamma,
            min_sets: sets_by_name(g, &self.min_sets),
        }
    }
}

pub(crate) fn sets_by_name(g: &Graph, sets: &[Vec<usize>]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = sets
        .iter()
        .map(|s| {
            let mut names: Vec<String> = s.iter().map(|&v| g.name(v).to_string()).collect();
            names.sort();
            names
        })
        .collect();
    out.sort();
    out
}

/// Closed distance-`d` balls around every vertex.
pub fn distance_balls(g: &Graph, d: u32) -> Vec<VertexSet> {
    let dm = g.all_pairs_distances();
    (0..g.vertex_count()).map(|v| dm.ball(v, d)).collect()
}

/// True when every vertex of `g` lies within distance `d` of some member of `s`.
pub fn is_distance_d_dominating(g: &Graph, s: &[usize], d: u32) -> bool {
    let n = g.vertex_count();
    let mut covered = VertexSet::new(n);
    for &v in s {
        if v >= n {
            return false;
        }
        let dist = g.bfs_distances(v);
        for (u, du) in dist.into_iter().enumerate() {
            if du.is_some_and(|x| x <= d) {
                covered.insert(u);
            }
        }
    }
    covered.len() == n
}

pub fn domination_number(g: &Graph, d: u32) -> Result<usize> {
    check_args(g, d)?;
    let balls = distance_balls(g, d);
    let full = VertexSet::full(g.vertex_count());
    for k in 1..=g.vertex_count() {
        let mut found = false;
        let mut examined = 0;
        scan_size(&balls, &full, k, None, &mut examined, &mut |_| {
            found = true;
            false
        })?;
        if found {
            return Ok(k);
        }
    }
    unreachable!("the whole vertex set dominates")
}

/// All minimum distance-`d` dominating sets, with no work limit.
pub fn min_dominating_sets(g: &Graph, d: u32) -> Result<DominationResult> {
    min_dominating_sets_with(g, d, DominationOptions::default())
}

pub fn min_dominating_sets_with(
    g: &Graph,
    d: u32,
    options: DominationOptions,
) -> Result<DominationResult> {
    check_args(g, d)?;
    let balls = distance_balls(g, d);
    let full = VertexSet::full(g.vertex_count());
    let mut examined = 0u64;
    for k in 1..=g.vertex_count() {
        let mut sets = Vec::new();
        scan_size(&balls, &full, k, options.work_limit, &mut examined, &mut |s| {
            sets.push(s.to_vec());
            true
        })?;
        if !sets.is_empty() {
            return Ok(DominationResult {
                d,
                gamma: k,
                min_sets: sets,
            });
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn check_args(g: &Graph, d: u32) -> Result<()> {
    if g.is_empty() {
        return Err(Error::arg("domination is undefined on the empty graph"));
    }
    if d == 0 {
        return Err(Error::arg("distance parameter d must be positive"));
    }
    Ok(())
}

/// Visits every `k`-subset whose balls cover `full`, in lexicographic order.
/// The visitor returns `false` to stop early.
fn scan_size(
    balls: &[VertexSet],
    full: &VertexSet,
    k: usize,
    limit: Option<u64>,
    examined: &mut u64,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<()> {
    let n = balls.len();
    if k == 0 || k > n {
        return Ok(());
    }
    let cap = n;
    // unions[i] = union of the balls of chosen[0..i]
    let mut unions = vec![VertexSet::new(cap); k + 1];
    let mut chosen = Vec::with_capacity(k);
    let mut next = 0usize;
    loop {
        if chosen.len() == k {
            *examined += 1;
            if limit.is_some_and(|l| *examined > l) {
                return Err(Error::WorkLimit {
                    examined: *examined - 1,
                });
            }
            if unions[k] == *full && !visit(&chosen) {
                return Ok(());
            }
            // backtrack
            match chosen.pop() {
                Some(last) => next = last + 1,
                None => return Ok(()),
            }
            continue;
        }
        let depth = chosen.len();
        if next + (k - depth) > n {
            match chosen.pop() {
                Some(last) => next = last + 1,
                None => return Ok(()),
            }
            continue;
        }
        let (lo, hi) = unions.split_at_mut(depth + 1);
        hi[0].copy_from(&lo[depth]);
        hi[0].union_with(&balls[next]);
        chosen.push(next);
        next += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{family, fixtures};

    fn named(g: &Graph, sets: &[Vec<usize>]) -> Vec<String> {
        sets.iter()
            .map(|s| s.iter().map(|&v| g.name(v)).collect::<String>())
            .collect()
    }

    #[test]
    fn example_predicates() {
        let g = fixtures::domination_example();
        let idx = |name: &str| g.index_of(name).unwrap();
        assert!(is_distance_d_dominating(&g, &[idx("5"), idx("6")], 1));
        assert!(!is_distance_d_dominating(&g, &[idx("1")], 1));
        let all: Vec<_> = (0..7).collect();
        for d in 1..4 {
            assert!(is_distance_d_dominating(&g, &all, d));
        }
        assert!(!is_distance_d_dominating(&g, &[], 1));
    }

    #[test]
    fn example_numbers_and_sets() {
        let g = fixtures::domination_example();
        assert_eq!(domination_number(&g, 1).unwrap(), 2);
        assert_eq!(domination_number(&g, 2).unwrap(), 1);

        let r1 = min_dominating_sets(&g, 1).unwrap();
        let mut got = named(&g, &r1.min_sets);
        got.sort();
        assert_eq!(got, ["15", "25", "36", "46", "56"]);

        let r2 = min_dominating_sets(&g, 2).unwrap();
        assert_eq!(named(&g, &r2.min_sets), ["2", "3", "5", "6", "7"]);
    }

    #[test]
    fn complete_graphs() {
        let k3 = family::complete(3).unwrap();
        let r = min_dominating_sets(&k3, 1).unwrap();
        assert_eq!(r.gamma, 1);
        assert_eq!(r.min_sets, vec![vec![0], vec![1], vec![2]]);
        for n in 1..6 {
            assert_eq!(domination_number(&family::complete(n).unwrap(), 1).unwrap(), 1);
        }
    }

    #[test]
    fn disconnected_graphs_are_fine() {
        let g = Graph::empty(3);
        let r = min_dominating_sets(&g, 2).unwrap();
        assert_eq!(r.gamma, 3);
        assert_eq!(r.min_sets, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn argument_errors() {
        assert!(domination_number(&Graph::empty(0), 1).is_err());
        assert!(min_dominating_sets(&family::path(3).unwrap(), 0).is_err());
    }

    #[test]
    fn work_limit_reports_examined() {
        let g = family::path(9).unwrap();
        let err = min_dominating_sets_with(&g, 1, DominationOptions { work_limit: Some(20) }).unwrap_err();
        assert_eq!(err, Error::WorkLimit { examined: 20 });
        assert!(min_dominating_sets_with(&g, 1, DominationOptions { work_limit: Some(10_000) }).is_ok());
    }

    #[test]
    fn document_sorts_by_name() {
        let g = fixtures::domination_example();
        let doc = min_dominating_sets(&g, 1).unwrap().to_document(&g);
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            json,
            r#"{"d":1,"gamma":2,"min_sets":[["1","5"],["2","5"],["3","6"],["4","6"],["5","6"]]}"#
        );
    }
}
