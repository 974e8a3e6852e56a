//! Deciding labellability of small graphs and classifying batches of them.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{self, canonical_form};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::labelling::{
    combine_components, extend_over_pendants, find_labelling, pendant_elimination, Labelling,
    LabellingDocument, SearchBudget, SearchOutcome,
};

/// Largest order [`enumerate_connected_graphs`] generates.
pub const MAX_ENUMERATED: usize = 7;

/// Known `(labellable, minimally unlabellable, unlabellable nonminimal)` tallies
/// over all connected graphs of order `n = 1..=6`, indexed by `n - 1`.
/// No tally is recorded for larger orders.
pub const REFERENCE_COUNTS: [(usize, usize, usize); 6] =
    [(1, 0, 0), (1, 0, 0), (2, 0, 0), (6, 0, 0), (17, 4, 0), (69, 4, 39)];

/// Number of connected graphs of order `n = 1..=7` up to isomorphism, indexed by `n - 1`.
const CONNECTED_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

/// One connected graph per isomorphism class on `n` vertices, each in its
/// canonical labelling, sorted by canonical form.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each connected graph on `n - 1` vertices by a new vertex with
/// every nonempty neighbourhood reaches all classes.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::arg("graph order must be positive"));
    }
    if n > MAX_ENUMERATED {
        return Err(Error::UnsupportedSize {
            what: "built-in enumeration order (read larger graphs from a graph6 file)",
            size: n,
            limit: MAX_ENUMERATED,
        });
    }
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen: BTreeMap<Vec<u8>, ()> = BTreeMap::new();
        for h in &level {
            let base = h.edges();
            for nbhd in 1u32..(1 << (m - 1)) {
                let mut edges = base.clone();
                edges.extend((0..m - 1).filter(|&u| nbhd >> u & 1 == 1).map(|u| (u, m - 1)));
                let g = Graph::from_edges(m, &edges)?;
                seen.entry(canonical_form(&g)?).or_insert(());
            }
        }
        level = seen
            .into_keys()
            .map(|c| parse_graph6(std::str::from_utf8(&c).expect("graph6 is ASCII")))
            .collect::<Result<_>>()?;
    }
    Ok(level)
}

/// The same list as [`enumerate_connected_graphs`], found by testing every
/// graph on `n <= 6` labelled vertices.
pub fn enumerate_connected_graphs_exhaustive(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > 6 {
        return Err(Error::UnsupportedSize {
            what: "exhaustive enumeration order",
            size: n,
            limit: 6,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut seen = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            seen.entry(canonical_form(&g)?).or_insert(());
        }
    }
    seen.into_keys()
        .map(|c| parse_graph6(std::str::from_utf8(&c).expect("graph6 is ASCII")))
        .collect()
}

/// Outcome of [`decide_labellable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Labellable(Labelling),
    /// No labelling with label size at most `k_bound`.
    Unlabellable { k_bound: usize },
    /// The node limit ran out while searching label size `frontier`.
    Undecided { k_bound: usize, frontier: usize },
}

/// Decides labellability one component at a time. Each component is first
/// stripped of pendant and isolated vertices; the remainder is searched and
/// the stripped vertices are labelled afterwards.
pub fn decide_labellable(g: &Graph, budget: SearchBudget) -> Result<Decision> {
    let mut parts = Vec::new();
    let mut undecided = None;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp)?;
        let elim = pendant_elimination(&sub);
        let core = if elim.remaining.is_empty() {
            None
        } else {
            let reduced = sub.induced_subgraph(&elim.remaining)?;
            match find_labelling(&reduced, budget)? {
                SearchOutcome::Found(l) => Some(l),
                SearchOutcome::AbsentUpTo { .. } => {
                    return Ok(Decision::Unlabellable { k_bound: budget.k_max })
                }
                SearchOutcome::BudgetExhausted { k } => {
                    undecided = undecided.or(Some(k));
                    continue;
                }
            }
        };
        parts.push((comp, extend_over_pendants(&sub, &elim, core.as_ref())?));
    }
    if let Some(frontier) = undecided {
        return Ok(Decision::Undecided {
            k_bound: budget.k_max,
            frontier,
        });
    }
    if parts.is_empty() {
        return Ok(Decision::Labellable(Labelling::new(1, Vec::new())?));
    }
    Ok(Decision::Labellable(combine_components(g, &parts)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Labellable,
    MinimallyUnlabellable,
    UnlabellableNonminimal,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Labellable => "labellable",
            Status::MinimallyUnlabellable => "minimally_unlabellable",
            Status::UnlabellableNonminimal => "unlabellable_nonminimal",
            Status::Undecided => "undecided",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    /// Largest label size searched for the graph itself.
    pub k_bound: usize,
    /// Present exactly when the status is labellable.
    pub labelling: Option<Labelling>,
    /// For nonminimal graphs: vertices of a smallest unlabellable proper induced subgraph.
    pub witness: Option<Vec<usize>>,
}

/// Limits used by [`is_minimally_unlabellable`] and [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    /// Label size bound; `None` means `max(2, n)` for each graph searched.
    pub k_max: Option<usize>,
    pub node_limit: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            k_max: None,
            node_limit: SearchBudget::DEFAULT_NODE_LIMIT,
        }
    }
}

impl ClassifyOptions {
    pub fn budget_for(&self, g: &Graph) -> SearchBudget {
        SearchBudget {
            k_max: self.k_max.unwrap_or(g.vertex_count().max(2)),
            node_limit: self.node_limit,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Answer {
    Yes,
    No,
    Unknown,
}

/// Labellability answers shared across graphs, keyed by isomorphism class.
struct Decider {
    options: ClassifyOptions,
    memo: Mutex<HashMap<Vec<u8>, Answer>>,
}

impl Decider {
    fn new(options: ClassifyOptions) -> Self {
        Decider {
            options,
            memo: Mutex::new(HashMap::new()),
        }
    }

    fn decide(&self, g: &Graph) -> Result<Decision> {
        let d = decide_labellable(g, self.options.budget_for(g))?;
        if g.vertex_count() <= canon::MAX_VERTICES {
            let a = match d {
                Decision::Labellable(_) => Answer::Yes,
                Decision::Unlabellable { .. } => Answer::No,
                Decision::Undecided { .. } => Answer::Unknown,
            };
            self.memo.lock().unwrap().insert(canonical_form(g)?, a);
        }
        Ok(d)
    }

    fn answer(&self, g: &Graph) -> Result<Answer> {
        if g.vertex_count() <= canon::MAX_VERTICES {
            let key = canonical_form(g)?;
            if let Some(&a) = self.memo.lock().unwrap().get(&key) {
                return Ok(a);
            }
        }
        Ok(match self.decide(g)? {
            Decision::Labellable(_) => Answer::Yes,
            Decision::Unlabellable { .. } => Answer::No,
            Decision::Undecided { .. } => Answer::Unknown,
        })
    }

    fn verdict(&self, g: &Graph) -> Result<Verdict> {
        let k_bound = self.options.budget_for(g).k_max;
        let mut v = Verdict {
            status: Status::Undecided,
            k_bound,
            labelling: None,
            witness: None,
        };
        match self.decide(g)? {
            Decision::Labellable(l) => {
                v.status = Status::Labellable;
                v.labelling = Some(l);
                return Ok(v);
            }
            Decision::Undecided { .. } => return Ok(v),
            Decision::Unlabellable { .. } => {}
        }
        let n = g.vertex_count();
        let mut unknown = false;
        let mut bad_deletion = false;
        for x in 0..n {
            match self.answer(&g.delete_vertex(x)?)? {
                Answer::Yes => {}
                Answer::No => {
                    bad_deletion = true;
                    break;
                }
                Answer::Unknown => unknown = true,
            }
        }
        if !bad_deletion {
            v.status = if unknown { Status::Undecided } else { Status::MinimallyUnlabellable };
            return Ok(v);
        }
        v.status = Status::UnlabellableNonminimal;
        v.witness = Some(self.smallest_witness(g)?);
        Ok(v)
    }

    /// Smallest proper induced subgraph proven unlabellable, ties broken by
    /// canonical form and then by vertex set.
    fn smallest_witness(&self, g: &Graph) -> Result<Vec<usize>> {
        let n = g.vertex_count();
        for size in 1..n {
            let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
            for set in k_subsets(n, size) {
                let h = g.induced_subgraph(&set)?;
                if self.answer(&h)? != Answer::No {
                    continue;
                }
                let key = if size <= canon::MAX_VERTICES {
                    canonical_form(&h)?
                } else {
                    write_graph6(&h)?.into_bytes()
                };
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, set));
                }
            }
            if let Some((_, set)) = best {
                return Ok(set);
            }
        }
        unreachable!("a one-vertex deletion is unlabellable")
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Classifies a single graph. Checking the one-vertex deletions suffices,
/// since induced subgraphs of labellable graphs are labellable.
pub fn is_minimally_unlabellable(g: &Graph, options: ClassifyOptions) -> Result<Verdict> {
    Decider::new(options).verdict(g)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub labellable: usize,
    pub minimally_unlabellable: usize,
    pub unlabellable_nonminimal: usize,
    pub undecided: usize,
}

impl Counts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Labellable => self.labellable += 1,
            Status::MinimallyUnlabellable => self.minimally_unlabellable += 1,
            Status::UnlabellableNonminimal => self.unlabellable_nonminimal += 1,
            Status::Undecided => self.undecided += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.labellable + self.minimally_unlabellable + self.unlabellable_nonminimal + self.undecided
    }
}

#[derive(Debug, Clone)]
pub struct ReportEntry {
    pub graph6: String,
    pub graph: Graph,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub options: ClassifyOptions,
    /// One entry per distinct graph6 input, sorted by graph6.
    pub entries: Vec<ReportEntry>,
    pub counts: Counts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub graphs: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// `null` when each graph used `max(2, n)`.
    pub k_max: Option<usize>,
    pub node_limit: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub status: Status,
    pub k_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labelling: Option<LabellingDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_graph6: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub params: ReportParams,
    pub verdicts: BTreeMap<String, VerdictDocument>,
    pub counts: Counts,
    pub by_order: Vec<OrderCounts>,
}

/// Counts for one order, compared with [`REFERENCE_COUNTS`] when the report
/// covers every connected graph of that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCounts {
    pub n: usize,
    #[serde(flatten)]
    pub counts: Counts,
    /// `Some(true)` on agreement, `Some(false)` on disagreement, `None` when unchecked.
    pub matches_reference: Option<bool>,
}

impl OrderCounts {
    fn new(n: usize, counts: Counts) -> Self {
        let complete = n >= 1 && n <= CONNECTED_COUNTS.len() && counts.total() == CONNECTED_COUNTS[n - 1];
        let matches_reference = match REFERENCE_COUNTS.get(n.wrapping_sub(1)) {
            Some(&(l, m, x)) if complete => Some(
                counts.undecided == 0
                    && (counts.labellable, counts.minimally_unlabellable, counts.unlabellable_nonminimal) == (l, m, x),
            ),
            _ => None,
        };
        OrderCounts { n, counts, matches_reference }
    }
}

impl Verdict {
    pub fn to_document(&self, g: &Graph) -> Result<VerdictDocument> {
        let witness_graph6 = match &self.witness {
            Some(w) => Some(write_graph6(&g.induced_subgraph(w)?)?),
            None => None,
        };
        Ok(VerdictDocument {
            status: self.status,
            k_bound: self.k_bound,
            labelling: self.labelling.as_ref().map(|l| l.to_document(g)),
            witness: self
                .witness
                .as_ref()
                .map(|w| w.iter().map(|&v| g.name(v).to_string()).collect()),
            witness_graph6,
        })
    }
}

/// Classifies every graph. Graphs are independent work items; `jobs` sets
/// the thread count (default: all cores) and does not affect the result.
pub fn classify(graphs: &[Graph], options: ClassifyOptions, jobs: Option<usize>) -> Result<ClassificationReport> {
    let mut unique: BTreeMap<String, Graph> = BTreeMap::new();
    for g in graphs {
        unique.entry(write_graph6(g)?).or_insert_with(|| g.clone());
    }
    let items: Vec<(String, Graph)> = unique.into_iter().collect();
    let decider = Decider::new(options);
    let run = || -> Result<Vec<ReportEntry>> {
        items
            .par_iter()
            .map(|(g6, g)| {
                Ok(ReportEntry {
                    graph6: g6.clone(),
                    graph: g.clone(),
                    verdict: decider.verdict(g)?,
                })
            })
            .collect()
    };
    let entries = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::arg(format!("cannot start worker threads: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let mut counts = Counts::default();
    for e in &entries {
        counts.add(e.verdict.status);
    }
    Ok(ClassificationReport {
        options,
        entries,
        counts,
    })
}

impl ClassificationReport {
    pub fn to_document(&self) -> Result<ReportDocument> {
        let orders = self.entries.iter().map(|e| e.graph.vertex_count());
        Ok(ReportDocument {
            params: ReportParams {
                graphs: self.entries.len(),
                n_min: orders.clone().min().unwrap_or(0),
                n_max: orders.max().unwrap_or(0),
                k_max: self.options.k_max,
                node_limit: self.options.node_limit,
            },
            verdicts: self
                .entries
                .iter()
                .map(|e| Ok((e.graph6.clone(), e.verdict.to_document(&e.graph)?)))
                .collect::<Result<_>>()?,
            counts: self.counts,
            by_order: self.order_counts(),
        })
    }

    /// [`Self::counts_by_order`] with the reference comparison attached.
    pub fn order_counts(&self) -> Vec<OrderCounts> {
        self.counts_by_order().into_iter().map(|(n, c)| OrderCounts::new(n, c)).collect()
    }

    /// Status counts for each graph order.
    pub fn counts_by_order(&self) -> BTreeMap<usize, Counts> {
        let mut out: BTreeMap<usize, Counts> = BTreeMap::new();
        for e in &self.entries {
            out.entry(e.graph.vertex_count()).or_default().add(e.verdict.status);
        }
        out
    }

    /// Plain-text table of [`Self::counts_by_order`] with a total row.
    pub fn summary_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:>3} {:>10} {:>8} {:>11} {:>9} {:>6}  reference",
            "n", "labellable", "minimal", "nonminimal", "undecided", "total"
        );
        let row = |s: &mut String, label: &str, c: &Counts, check: &str| {
            let _ = writeln!(
                s,
                "{:>3} {:>10} {:>8} {:>11} {:>9} {:>6}  {}",
                label,
                c.labellable,
                c.minimally_unlabellable,
                c.unlabellable_nonminimal,
                c.undecided,
                c.total(),
                check
            );
        };
        for o in self.order_counts() {
            let check = match o.matches_reference {
                Some(true) => "match",
                Some(false) => "MISMATCH",
                None => "unverified",
            };
            row(&mut s, &o.n.to_string(), &o.counts, check);
        }
        row(&mut s, "all", &self.counts, "-");
        s
    }

    pub fn verdict(&self, graph6: &str) -> Option<&Verdict> {
        self.entries
            .binary_search_by(|e| e.graph6.as_str().cmp(graph6))
            .ok()
            .map(|i| &self.entries[i].verdict)
    }
}
