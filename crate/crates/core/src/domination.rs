//! Exact domination and total domination numbers over bit rows.
//!
//! The value is decided by a branch-and-bound that always branches on the uncovered
//! vertex with the fewest possible dominators. The canonical witness is then the first
//! set of that size in ascending bitmask order, found by a separate scan.

use crate::error::{Error, Result};
use crate::graph::{Count, Graph, VertexSet};

/// A domination number together with its lexicographically least minimum witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominationResult {
    pub value: Count,
    pub witness: Option<VertexSet>,
}

impl DominationResult {
    const UNDEFINED: DominationResult = DominationResult {
        value: Count::Infinite,
        witness: None,
    };
}

#[inline(always)]
fn cover<const TOTAL: bool>(rows: &[u64], v: usize) -> u64 {
    if TOTAL {
        rows[v]
    } else {
        rows[v] | 1 << v
    }
}

#[inline]
fn covers<const TOTAL: bool>(rows: &[u64], set: u64, active: u64) -> bool {
    let mut acc = 0;
    let mut s = set;
    while s != 0 {
        acc |= cover::<TOTAL>(rows, s.trailing_zeros() as usize);
        s &= s - 1;
    }
    active & !acc == 0
}

fn branch<const TOTAL: bool>(
    rows: &[u64],
    active: u64,
    covered: u64,
    mut excluded: u64,
    budget: usize,
) -> bool {
    let uncovered = active & !covered;
    if uncovered == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let allowed = active & !excluded;

    let mut pick = 0u64;
    let mut fewest = u32::MAX;
    let mut u = uncovered;
    while u != 0 {
        let v = u.trailing_zeros() as usize;
        u &= u - 1;
        let cands = cover::<TOTAL>(rows, v) & allowed;
        let c = cands.count_ones();
        if c == 0 {
            return false;
        }
        if c < fewest {
            fewest = c;
            pick = cands;
            if c == 1 {
                break;
            }
        }
    }

    let need = uncovered.count_ones() as usize;
    let mut best_gain = 0;
    let mut a = allowed;
    while a != 0 {
        let c = a.trailing_zeros() as usize;
        a &= a - 1;
        best_gain = best_gain.max((cover::<TOTAL>(rows, c) & uncovered).count_ones() as usize);
    }
    if best_gain * budget < need {
        return false;
    }

    while pick != 0 {
        let c = pick.trailing_zeros() as usize;
        pick &= pick - 1;
        if branch::<TOTAL>(
            rows,
            active,
            covered | cover::<TOTAL>(rows, c),
            excluded,
            budget - 1,
        ) {
            return true;
        }
        excluded |= 1 << c;
    }
    false
}

/// Whether at most `budget` vertices of `active` totally dominate the subgraph induced by
/// `active`. `rows` are the adjacency rows of the host graph.
pub fn total_dominates_within(rows: &[u64], active: u64, budget: usize) -> bool {
    branch::<true>(rows, active, 0, 0, budget)
}

/// Plain-domination counterpart of [`total_dominates_within`].
pub fn dominates_within(rows: &[u64], active: u64, budget: usize) -> bool {
    branch::<false>(rows, active, 0, 0, budget)
}

fn number_within<const TOTAL: bool>(rows: &[u64], active: u64) -> Option<usize> {
    if TOTAL {
        let mut a = active;
        while a != 0 {
            let v = a.trailing_zeros() as usize;
            a &= a - 1;
            if rows[v] & active == 0 {
                return None;
            }
        }
    }
    (0..=active.count_ones() as usize).find(|&k| branch::<TOTAL>(rows, active, 0, 0, k))
}

/// Scatters the low bits of `src` onto the set bits of `mask`, lowest first.
fn deposit(mut src: u64, mut mask: u64) -> u64 {
    let mut out = 0;
    while src != 0 && mask != 0 {
        let low = mask & mask.wrapping_neg();
        if src & 1 == 1 {
            out |= low;
        }
        src >>= 1;
        mask &= mask - 1;
    }
    out
}

/// All `k`-subsets of `active`, in ascending bitmask order.
fn subsets_of_size(active: u64, k: usize) -> impl Iterator<Item = u64> {
    let m = active.count_ones() as usize;
    let limit: u128 = 1u128 << m;
    let mut next: Option<u64> = if k > m {
        None
    } else {
        Some(((1u128 << k) - 1) as u64)
    };
    std::iter::from_fn(move || {
        let x = next?;
        next = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x as u128 + c as u128;
            let y = (((r ^ x as u128) >> 2) / c as u128) | r;
            (y < limit).then_some(y as u64)
        };
        Some(deposit(x, active))
    })
}

fn result_within<const TOTAL: bool>(rows: &[u64], active: u64) -> DominationResult {
    let Some(k) = number_within::<TOTAL>(rows, active) else {
        return DominationResult::UNDEFINED;
    };
    let witness = subsets_of_size(active, k)
        .find(|&s| covers::<TOTAL>(rows, s, active))
        .expect("a set of the decided size exists");
    DominationResult {
        value: Count::Finite(k),
        witness: Some(VertexSet::from_bits(witness)),
    }
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_neighborhood_of_set(s) == g.vertices()
}

pub fn is_total_dominating(g: &Graph, s: VertexSet) -> bool {
    g.open_neighborhood_of_set(s) == g.vertices()
}

/// γ(G) with the least witness in bitmask order.
pub fn gamma(g: &Graph) -> DominationResult {
    result_within::<false>(g.rows(), g.vertices().bits())
}

/// γ_t(G); infinite iff some vertex is isolated.
pub fn gamma_t(g: &Graph) -> DominationResult {
    result_within::<true>(g.rows(), g.vertices().bits())
}

/// γ_t of the subgraph induced by `active`, with the witness in the labels of `g`.
pub fn gamma_t_within(g: &Graph, active: VertexSet) -> DominationResult {
    result_within::<true>(g.rows(), active.bits())
}

/// γ_t(G − v) reported in the labels of `g`, so `v` never appears in the witness.
pub fn gamma_t_without(g: &Graph, v: usize) -> DominationResult {
    gamma_t_within(g, g.vertices().without(v))
}

/// Every minimum total dominating set of the subgraph induced by `active`, ascending.
pub fn all_minimum_total_dominating_sets_within(
    g: &Graph,
    active: VertexSet,
) -> Result<Vec<VertexSet>> {
    let rows = g.rows();
    let active = active.bits();
    let k = number_within::<true>(rows, active).ok_or_else(|| {
        let v = VertexSet::from_bits(active)
            .iter()
            .find(|&v| rows[v] & active == 0)
            .unwrap_or_default();
        Error::UndefinedTotalDomination(v)
    })?;
    Ok(subsets_of_size(active, k)
        .filter(|&s| covers::<true>(rows, s, active))
        .map(VertexSet::from_bits)
        .collect())
}

pub fn all_minimum_total_dominating_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    all_minimum_total_dominating_sets_within(g, g.vertices())
}
