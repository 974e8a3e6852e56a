//! Clutters (antichains of subsets of `[n] = {1..n}`) and their blockers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// An antichain of subsets of `{1..ground_size}`.
///
/// Members are kept sorted by size, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    ground_size: usize,
    members: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClutterDocument {
    pub n: usize,
    pub members: Vec<Vec<u32>>,
}

#[inline]
pub(crate) fn bit(e: u32) -> u64 {
    1u64 << (e - 1)
}

pub(crate) fn elements(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() + 1);
        m &= m - 1;
    }
    out
}

fn member_order(a: &u64, b: &u64) -> std::cmp::Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| elements(*a).cmp(&elements(*b)))
}

/// Checks that `family` is a clutter over `[ground_size]`. Repeated members collapse.
pub fn validate_clutter(ground_size: usize, family: &[Vec<u32>]) -> Result<Clutter> {
    if ground_size > MAX_GROUND {
        return Err(Error::UnsupportedSize {
            what: "clutter ground set",
            size: ground_size,
            limit: MAX_GROUND,
        });
    }
    let mut masks = Vec::with_capacity(family.len());
    for set in family {
        let mut m = 0u64;
        for &e in set {
            if e == 0 || e as usize > ground_size {
                return Err(Error::arg(format!(
                    "element {e} outside the ground set 1..={ground_size}"
                )));
            }
            m |= bit(e);
        }
        masks.push(m);
    }
    Clutter::from_masks(ground_size, masks)
}

impl Clutter {
    pub(crate) fn from_masks(ground_size: usize, mut masks: Vec<u64>) -> Result<Self> {
        masks.sort_by(member_order);
        masks.dedup();
        for (i, &a) in masks.iter().enumerate() {
            for &b in &masks[i + 1..] {
                if a & b == a {
                    return Err(Error::NotAClutter {
                        smaller: elements(a),
                        larger: elements(b),
                    });
                }
            }
        }
        Ok(Clutter {
            ground_size,
            members: masks,
        })
    }

    /// Keeps only the inclusion-minimal sets of `masks`.
    pub(crate) fn minimal_of(ground_size: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_by(member_order);
        masks.dedup();
        let mut kept: Vec<u64> = Vec::with_capacity(masks.len());
        for m in masks {
            if !kept.iter().any(|&k| k & !m == 0) {
                kept.push(m);
            }
        }
        Clutter {
            ground_size,
            members: kept,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> Vec<Vec<u32>> {
        self.members.iter().map(|&m| elements(m)).collect()
    }

    /// Members as bitmasks, element `e` at bit `e - 1`.
    pub fn member_masks(&self) -> &[u64] {
        &self.members
    }

    /// Union of all members.
    pub fn support(&self) -> Vec<u32> {
        elements(self.members.iter().fold(0, |a, &m| a | m))
    }

    /// The common member size, if all members have the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.members.first()?.count_ones();
        self.members
            .iter()
            .all(|m| m.count_ones() == first)
            .then_some(first as usize)
    }

    pub fn to_document(&self) -> ClutterDocument {
        ClutterDocument {
            n: self.ground_size,
            members: self.members(),
        }
    }

    pub fn from_document(doc: &ClutterDocument) -> Result<Self> {
        validate_clutter(doc.n, &doc.members)
    }
}

/// The blocker: all inclusion-minimal sets meeting every member.
///
/// The empty clutter is rejected. The clutter `{∅}` has no transversal, so its
/// blocker is the empty clutter.
pub fn blocker(c: &Clutter) -> Result<Clutter> {
    if c.is_empty() {
        return Err(Error::arg("the blocker of the empty clutter is undefined"));
    }
    let mut found = Vec::new();
    extend_transversal(&c.members, 0, &mut found);
    Ok(Clutter::minimal_of(c.ground_size, found))
}

/// Branches on the smallest member not yet hit. A partial set is abandoned
/// once one of its elements has no private member, since it can then no
/// longer grow into a minimal transversal.
fn extend_transversal(members: &[u64], t: u64, out: &mut Vec<u64>) {
    let uncovered = members
        .iter()
        .filter(|&&m| m & t == 0)
        .min_by_key(|m| m.count_ones());
    let Some(&m) = uncovered else {
        out.push(t);
        return;
    };
    let mut rest = m;
    while rest != 0 {
        let e = rest & rest.wrapping_neg();
        rest &= rest - 1;
        let next = t | e;
        if every_element_private(members, next) {
            extend_transversal(members, next, out);
        }
    }
}

fn every_element_private(members: &[u64], t: u64) -> bool {
    let mut private = 0u64;
    for &m in members {
        let hit = m & t;
        if hit != 0 && hit & (hit - 1) == 0 {
            private |= hit;
        }
    }
    private == t
}
