//! Exhaustive search for a labelling of a connected graph.
//!
//! Label sizes are tried in increasing order. For a fixed `k` the vertices are
//! visited in an order where each vertex after the first has an earlier
//! neighbour. The first vertex is labelled `{1..k}` and every later label is
//! an earlier neighbour's label with one symbol swapped out. A symbol never
//! used before is always the smallest unused one, and symbols that occur in
//! exactly the same labelled vertices are interchangeable, so only one of
//! each such class is tried. This makes the search finite and complete for
//! each `k`.

use serde::{Deserialize, Serialize};

use super::Labelling;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Limits for [`find_labelling`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest label size to try.
    pub k_max: usize,
    /// Maximum number of candidate labels tried, summed over all `k`.
    pub node_limit: u64,
}

impl SearchBudget {
    pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

    pub fn new(k_max: usize, node_limit: u64) -> Result<Self> {
        if k_max == 0 || node_limit == 0 {
            return Err(Error::arg("k_max and node_limit must be positive"));
        }
        Ok(SearchBudget { k_max, node_limit })
    }

    /// `k_max = max(2, n)` with the default node limit.
    pub fn for_graph(g: &Graph) -> Self {
        SearchBudget {
            k_max: g.vertex_count().max(2),
            node_limit: Self::DEFAULT_NODE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// When a vertex has two non-adjacent labelled neighbours, try only the
    /// four labels compatible with both instead of all single swaps.
    pub pair_rule: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { pair_rule: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Labelling),
    /// No labelling with `k <= k_max` exists.
    AbsentUpTo { k_max: usize },
    /// The node limit was reached while searching label size `k`.
    BudgetExhausted { k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcomeDocument {
    Found { labelling: super::LabellingDocument },
    AbsentUpToK { k_max: usize },
    BudgetExhausted { k: usize },
}

impl SearchOutcome {
    pub fn to_document(&self, g: &Graph) -> SearchOutcomeDocument {
        match self {
            SearchOutcome::Found(l) => SearchOutcomeDocument::Found {
                labelling: l.to_document(g),
            },
            &SearchOutcome::AbsentUpTo { k_max } => SearchOutcomeDocument::AbsentUpToK { k_max },
            &SearchOutcome::BudgetExhausted { k } => SearchOutcomeDocument::BudgetExhausted { k },
        }
    }
}

/// Largest graph the search accepts; labels and adjacency are 128-bit masks.
const MAX_SYMBOLS: usize = 128;

pub fn find_labelling(g: &Graph, budget: SearchBudget) -> Result<SearchOutcome> {
    find_labelling_with(g, budget, SearchOptions::default())
}

pub fn find_labelling_with(g: &Graph, budget: SearchBudget, options: SearchOptions) -> Result<SearchOutcome> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::arg("cannot search a labelling of the empty graph"));
    }
    if !g.is_connected() {
        return Err(Error::arg("labelling search needs a connected graph"));
    }
    if budget.k_max == 0 || budget.node_limit == 0 {
        return Err(Error::arg("k_max and node_limit must be positive"));
    }
    let mut nodes = 0u64;
    for k in 1..=budget.k_max {
        let symbols = k + n - 1;
        if symbols > MAX_SYMBOLS {
            return Err(Error::UnsupportedSize {
                what: "label size plus vertex count",
                size: symbols + 1,
                limit: MAX_SYMBOLS + 1,
            });
        }
        let mut s = Searcher::new(g, k, options.pair_rule, budget.node_limit, nodes);
        let step = s.run();
        nodes = s.nodes;
        match step {
            Step::Found => return Ok(SearchOutcome::Found(s.labelling())),
            Step::Exhausted => return Ok(SearchOutcome::BudgetExhausted { k }),
            Step::Dead => {}
        }
    }
    Ok(SearchOutcome::AbsentUpTo { k_max: budget.k_max })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Dead,
    Exhausted,
}

struct Searcher {
    k: usize,
    universe: usize,
    order: Vec<usize>,
    /// `adj[v]` as a mask over vertex indices.
    adj: Vec<u128>,
    /// Position in `order` of the neighbour each label is derived from.
    parent: Vec<usize>,
    /// Positions of two earlier non-adjacent neighbours, when they exist.
    pair: Vec<Option<(usize, usize)>>,
    /// Labels by position.
    labels: Vec<u128>,
    nodes: u64,
    limit: u64,
    pair_rule: bool,
}

fn lex_less(a: u128, b: u128) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

impl Searcher {
    fn new(g: &Graph, k: usize, pair_rule: bool, limit: u64, nodes: u64) -> Self {
        let n = g.vertex_count();
        let adj: Vec<u128> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u128, |m, u| m | 1 << u))
            .collect();
        let order = visit_order(&adj);
        let mut parent = vec![0; n];
        let mut pair = vec![None; n];
        for i in 1..n {
            let v = order[i];
            let earlier: Vec<usize> = (0..i).filter(|&j| adj[v] >> order[j] & 1 == 1).collect();
            parent[i] = earlier[0];
            'outer: for (x, &a) in earlier.iter().enumerate() {
                for &b in &earlier[x + 1..] {
                    if adj[order[a]] >> order[b] & 1 == 0 {
                        pair[i] = Some((a, b));
                        break 'outer;
                    }
                }
            }
        }
        Searcher {
            k,
            universe: k + n - 1,
            order,
            adj,
            parent,
            pair,
            labels: vec![0; n],
            nodes,
            limit,
            pair_rule,
        }
    }

    fn run(&mut self) -> Step {
        let first = if self.k == 128 { u128::MAX } else { (1u128 << self.k) - 1 };
        self.nodes += 1;
        if self.nodes > self.limit {
            return Step::Exhausted;
        }
        self.labels[0] = first;
        self.extend(1)
    }

    fn labelling(&self) -> Labelling {
        let n = self.order.len();
        let mut labels = vec![Vec::new(); n];
        for (i, &v) in self.order.iter().enumerate() {
            let mut m = self.labels[i];
            while m != 0 {
                labels[v].push(m.trailing_zeros() + 1);
                m &= m - 1;
            }
        }
        Labelling::new(self.k, labels).expect("search labels have k symbols")
    }

    fn extend(&mut self, i: usize) -> Step {
        if i == self.order.len() {
            return Step::Found;
        }
        let candidates = self.candidates(i);
        for c in candidates {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Step::Exhausted;
            }
            if !self.fits(i, c) {
                continue;
            }
            self.labels[i] = c;
            match self.extend(i + 1) {
                Step::Dead => {}
                other => return other,
            }
        }
        Step::Dead
    }

    /// Checks the new label at position `i` against every earlier label.
    fn fits(&self, i: usize, c: u128) -> bool {
        let v = self.order[i];
        let k = self.k as u32;
        (0..i).all(|j| {
            let s = (c & self.labels[j]).count_ones();
            let adjacent = self.adj[v] >> self.order[j] & 1 == 1;
            s != k && adjacent == (s + 1 == k)
        })
    }

    fn candidates(&self, i: usize) -> Vec<u128> {
        let mut out = Vec::new();
        if let (true, Some((a, b))) = (self.pair_rule, self.pair[i]) {
            let (la, lb) = (self.labels[a], self.labels[b]);
            let common = la & lb;
            if (common.count_ones() as usize) + 2 != self.k {
                return out;
            }
            for x in bits(la & !common) {
                for y in bits(lb & !common) {
                    out.push(common | x | y);
                }
            }
        } else {
            let p = self.labels[self.parent[i]];
            let used = self.labels[..i].iter().fold(0u128, |m, &l| m | l);
            // Representatives of symbol classes: symbols occurring in the
            // same labelled vertices are interchangeable.
            let mut patterns: Vec<(u128, u128)> = Vec::new();
            for s in bits(used) {
                let pat = self.labels[..i]
                    .iter()
                    .enumerate()
                    .fold(0u128, |m, (j, &l)| if l & s != 0 { m | 1 << j } else { m });
                if !patterns.iter().any(|&(q, _)| q == pat) {
                    patterns.push((pat, s));
                }
            }
            let mut removals = Vec::new();
            let mut additions = Vec::new();
            for &(_, s) in &patterns {
                if p & s != 0 {
                    removals.push(s);
                } else {
                    additions.push(s);
                }
            }
            let fresh = (!used).trailing_zeros() as usize;
            if fresh < self.universe {
                additions.push(1u128 << fresh);
            }
            for &a in &removals {
                for &b in &additions {
                    out.push((p & !a) | b);
                }
            }
        }
        out.sort_by(|&x, &y| {
            if x == y {
                std::cmp::Ordering::Equal
            } else if lex_less(x, y) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        out.dedup();
        out
    }
}

fn bits(mut m: u128) -> impl Iterator<Item = u128> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let low = m & m.wrapping_neg();
            m &= m - 1;
            Some(low)
        }
    })
}

/// Highest degree vertex first, then repeatedly the unvisited vertex with the
/// most visited neighbours (ties by degree, then index).
fn visit_order(adj: &[u128]) -> Vec<usize> {
    let n = adj.len();
    let degree = |v: usize| adj[v].count_ones();
    let first = (0..n).max_by_key(|&v| (degree(v), std::cmp::Reverse(v))).unwrap();
    let mut order = vec![first];
    let mut seen = 1u128 << first;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| seen >> v & 1 == 0)
            .max_by_key(|&v| ((adj[v] & seen).count_ones(), degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(next);
        seen |= 1 << next;
    }
    order
}
