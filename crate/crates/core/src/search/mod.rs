//! Exhaustive search for k-γ_t-critical graphs of order Δ+k.
//!
//! Two enumerations are provided. The pruned search fixes the frame every 3-γ_t-critical
//! graph of order Δ+3 must have (a vertex x of degree Δ, its non-neighbours y, z joined
//! by an edge, and N(x) split by which of y, z each vertex touches) and varies only the
//! edges inside N(x). The full search enumerates every labelled graph of the given order
//! and serves as an independent oracle.
//!
//! Both scan their candidate space in Gray-code order, so consecutive candidates differ
//! by one edge. The space is cut into fixed shards that workers claim from a shared
//! counter; results are merged in shard order, making the outcome independent of the
//! worker count.

mod canon;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

pub use canon::{canonical_form, canonical_graph6, dedup_isomorphic, MAX_CANON_ORDER};

use crate::criticality::{is_critical_rows, is_k_gamma_t_critical};
use crate::error::{Error, Result};
use crate::graph::{reachable, Graph, VertexSet};
use crate::graph6;

/// Largest Δ accepted by the pruned search (2^28 assignments per frame).
pub const MAX_PRUNED_DELTA: usize = 8;
/// Largest order accepted by the full search (2^28 labelled graphs).
pub const MAX_FULL_ORDER: usize = 8;

const SHARD_BITS: u32 = 16;
const MAX_ROWS: usize = 16;

/// The fixed skeleton of a candidate 3-γ_t-critical graph of order Δ+3.
///
/// Layout: `x = 0`, `y = 1`, `z = 2`, then `A = N(y) − z` at `3..3+a` and
/// `B = N(z) − y` at `3+a..3+Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchFrame {
    delta: usize,
    a: usize,
}

impl SearchFrame {
    pub fn new(delta: usize, a: usize) -> Result<Self> {
        if delta < 2 || delta + 3 > MAX_ROWS {
            return Err(Error::Parameter(format!(
                "frame max degree {delta} out of range"
            )));
        }
        // a = 0 or a = Δ would give z or y degree Δ+1
        if a == 0 || a >= delta {
            return Err(Error::Parameter(format!(
                "frame split a = {a} must lie in 1..={}",
                delta - 1
            )));
        }
        Ok(SearchFrame { delta, a })
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn order(&self) -> usize {
        self.delta + 3
    }

    /// Adjacency rows of the skeleton with no edges inside N(x).
    pub fn skeleton(&self) -> Graph {
        let mut g = Graph::new(self.order()).expect("frame order is small");
        g.add_edge(1, 2).unwrap();
        for v in 3..3 + self.delta {
            g.add_edge(0, v).unwrap();
            g.add_edge(if v < 3 + self.a { 1 } else { 2 }, v).unwrap();
        }
        g
    }

    /// The C(Δ, 2) vertex pairs inside N(x) whose edges are free.
    pub fn free_pairs(&self) -> Vec<(usize, usize)> {
        let nx = 3..3 + self.delta;
        nx.clone()
            .flat_map(|u| (u + 1..3 + self.delta).map(move |v| (u, v)))
            .collect()
    }

    /// The frame graph whose free edges are the set bits of `mask`, in [`free_pairs`] order.
    ///
    /// [`free_pairs`]: SearchFrame::free_pairs
    pub fn assemble(&self, mask: u64) -> Graph {
        let mut g = self.skeleton();
        for (bit, (u, v)) in self.free_pairs().into_iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }
}

/// One frame per `a` in `1..=⌊Δ/2⌋`; larger `a` mirror these under the y/z swap.
pub fn enumerate_frames(delta: usize) -> Result<Vec<SearchFrame>> {
    if delta < 2 {
        return Err(Error::Parameter(format!(
            "max degree must be >= 2, got {delta}"
        )));
    }
    (1..=delta / 2)
        .map(|a| SearchFrame::new(delta, a))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    Pruned,
    Full,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Pruned => "pruned",
            SearchMode::Full => "full",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub workers: usize,
    /// Discard candidates whose diameter is not 2 before the domination tests.
    pub prune_diameter: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            prune_diameter: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub mode: SearchMode,
    pub delta: usize,
    pub k: usize,
    pub frames_enumerated: usize,
    /// Labelled candidates scanned; not reduced by isomorphism.
    pub graphs_tested: u64,
    /// Canonical graph6 strings, one per isomorphism class, sorted.
    pub certificates: Vec<String>,
    pub elapsed: Duration,
}

impl SearchOutcome {
    /// Compares everything except wall time.
    pub fn same_result(&self, other: &SearchOutcome) -> bool {
        SearchOutcome {
            elapsed: Duration::ZERO,
            ..self.clone()
        } == SearchOutcome {
            elapsed: Duration::ZERO,
            ..other.clone()
        }
    }
}

/// The summary footer, without the `#` prefix used on certificate streams.
impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "delta={} k={} mode={} frames={} tested={} found={} seconds={:.3}",
            self.delta,
            self.k,
            self.mode,
            self.frames_enumerated,
            self.graphs_tested,
            self.certificates.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

/// A labelled candidate space: fixed rows plus a list of free pairs.
struct Space {
    base: Vec<u64>,
    pairs: Vec<(usize, usize)>,
}

impl Space {
    fn size(&self) -> u64 {
        1 << self.pairs.len()
    }
}

#[derive(Clone, Copy)]
struct Shard {
    space: usize,
    start: u64,
    end: u64,
}

#[derive(Default)]
struct ShardResult {
    tested: u64,
    hits: Vec<Vec<u64>>,
}

fn shards(spaces: &[Space]) -> Vec<Shard> {
    let step = 1u64 << SHARD_BITS;
    spaces
        .iter()
        .enumerate()
        .flat_map(|(space, s)| {
            let size = s.size();
            (0..size.div_ceil(step)).map(move |i| Shard {
                space,
                start: i * step,
                end: ((i + 1) * step).min(size),
            })
        })
        .collect()
}

fn scan_shard<F>(space: &Space, shard: Shard, first_only: bool, accept: &F) -> ShardResult
where
    F: Fn(&[u64]) -> bool,
{
    let n = space.base.len();
    let mut rows = [0u64; MAX_ROWS];
    rows[..n].copy_from_slice(&space.base);
    let toggle = |rows: &mut [u64; MAX_ROWS], bit: usize| {
        let (u, v) = space.pairs[bit];
        rows[u] ^= 1 << v;
        rows[v] ^= 1 << u;
    };
    let gray = shard.start ^ (shard.start >> 1);
    for bit in VertexSet::from_bits(gray) {
        toggle(&mut rows, bit);
    }
    let mut out = ShardResult::default();
    for t in shard.start..shard.end {
        out.tested += 1;
        if accept(&rows[..n]) {
            out.hits.push(rows[..n].to_vec());
            if first_only {
                break;
            }
        }
        if t + 1 < shard.end {
            toggle(&mut rows, (t + 1).trailing_zeros() as usize);
        }
    }
    out
}

/// Runs every shard, or with `first_only` every shard up to the lowest one holding a hit.
fn scan<F>(
    spaces: &[Space],
    workers: usize,
    first_only: bool,
    accept: F,
) -> Vec<Option<ShardResult>>
where
    F: Fn(&[u64]) -> bool + Sync,
{
    let shards = shards(spaces);
    let results: Vec<Mutex<Option<ShardResult>>> =
        shards.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let first_hit = AtomicUsize::new(usize::MAX);
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= shards.len() || (first_only && i > first_hit.load(Ordering::Relaxed)) {
            break;
        }
        let r = scan_shard(&spaces[shards[i].space], shards[i], first_only, &accept);
        if first_only && !r.hits.is_empty() {
            first_hit.fetch_min(i, Ordering::Relaxed);
        }
        *results[i].lock().unwrap() = Some(r);
    };
    let workers = workers.max(1);
    if workers == 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(work);
            }
        });
    }
    results
        .into_iter()
        .map(|m| m.into_inner().unwrap())
        .collect()
}

fn diameter_is_two(rows: &[u64], all: u64) -> bool {
    let mut complete = true;
    for (v, &row) in rows.iter().enumerate() {
        let mut two = row | 1 << v;
        for u in VertexSet::from_bits(row) {
            two |= rows[u];
        }
        if two != all {
            return false;
        }
        complete &= row | 1 << v == all;
    }
    !complete
}

fn max_degree(rows: &[u64]) -> usize {
    rows.iter()
        .map(|r| r.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Frame candidate test for k = 3: degree cap, no total dominating adjacent pair, every
/// non-exempt deletion has a total dominating pair, and some triple total-dominates.
fn frame_candidate_is_critical(rows: &[u64], all: u64, delta: usize, prune_diameter: bool) -> bool {
    if max_degree(rows) != delta {
        return false;
    }
    if prune_diameter && !diameter_is_two(rows, all) {
        return false;
    }
    // A pair {u, v} leaves `missing` undominated. It total-dominates G when nothing is
    // missing, and G − w exactly when `missing` = {w}.
    let mut rescued = 0u64;
    let mut exempt = 0u64;
    for (u, &ru) in rows.iter().enumerate() {
        if ru.count_ones() == 1 {
            exempt |= ru;
        }
        for v in VertexSet::from_bits(ru & !((2u64 << u) - 1)) {
            let missing = all & !(ru | rows[v]);
            if missing == 0 {
                return false;
            }
            if missing & (missing - 1) == 0 {
                rescued |= missing;
            }
        }
    }
    if all & !exempt & !rescued != 0 {
        return false;
    }
    has_total_dominating_triple(rows, all)
}

/// A total dominating triple induces a path or triangle, so it has a centre adjacent to both others.
fn has_total_dominating_triple(rows: &[u64], all: u64) -> bool {
    for &rb in rows {
        for a in VertexSet::from_bits(rb) {
            for c in VertexSet::from_bits(rb & !((2u64 << a) - 1)) {
                if rows[a] | rb | rows[c] == all {
                    return true;
                }
            }
        }
    }
    false
}

fn full_candidate_is_critical(
    rows: &[u64],
    all: u64,
    delta: usize,
    k: usize,
    prune_diameter: bool,
) -> bool {
    max_degree(rows) == delta
        && reachable(rows, 0, all) == all
        && (!prune_diameter || diameter_is_two(rows, all))
        && is_critical_rows(rows, all, k)
}

fn check_pruned_delta(delta: usize) -> Result<()> {
    if !(2..=MAX_PRUNED_DELTA).contains(&delta) {
        return Err(Error::Parameter(format!(
            "pruned search needs 2 <= delta <= {MAX_PRUNED_DELTA}, got {delta}; each frame scans 2^C(delta,2) graphs"
        )));
    }
    Ok(())
}

fn frame_spaces(frames: &[SearchFrame]) -> Vec<Space> {
    frames
        .iter()
        .map(|f| Space {
            base: f.skeleton().rows().to_vec(),
            pairs: f.free_pairs(),
        })
        .collect()
}

/// Verifies each hit, then reduces them to sorted canonical graph6 strings.
fn certify(hits: impl Iterator<Item = Vec<u64>>, k: usize, delta: usize) -> Result<Vec<String>> {
    let labelled: BTreeSet<Vec<u64>> = hits.collect();
    let mut classes = BTreeSet::new();
    for rows in labelled {
        let g = Graph::from_rows(rows)?;
        let report = is_k_gamma_t_critical(&g, k)?;
        assert!(
            report.verdict && g.max_degree()? == delta,
            "search accepted a graph that fails verification: {}",
            graph6::encode(&g)
        );
        classes.insert(canonical_graph6(&g)?);
    }
    Ok(classes.into_iter().collect())
}

/// All 3-γ_t-critical graphs of order Δ+3, up to isomorphism, via the frame enumeration.
pub fn search_critical_pruned(delta: usize, opts: &SearchOptions) -> Result<SearchOutcome> {
    check_pruned_delta(delta)?;
    let started = Instant::now();
    let frames = enumerate_frames(delta)?;
    let spaces = frame_spaces(&frames);
    let all = VertexSet::full(delta + 3).bits();
    let prune = opts.prune_diameter;
    let results = scan(&spaces, opts.workers, false, |rows| {
        frame_candidate_is_critical(rows, all, delta, prune)
    });
    let graphs_tested = results.iter().flatten().map(|r| r.tested).sum();
    let certificates = certify(results.into_iter().flatten().flat_map(|r| r.hits), 3, delta)?;
    Ok(SearchOutcome {
        mode: SearchMode::Pruned,
        delta,
        k: 3,
        frames_enumerated: frames.len(),
        graphs_tested,
        certificates,
        elapsed: started.elapsed(),
    })
}

/// The first 3-γ_t-critical frame graph of order Δ+3 in scan order, if any.
pub fn first_critical_pruned(delta: usize, opts: &SearchOptions) -> Result<Option<Graph>> {
    check_pruned_delta(delta)?;
    let frames = enumerate_frames(delta)?;
    let spaces = frame_spaces(&frames);
    let all = VertexSet::full(delta + 3).bits();
    let prune = opts.prune_diameter;
    let results = scan(&spaces, opts.workers, true, |rows| {
        frame_candidate_is_critical(rows, all, delta, prune)
    });
    let hit = results
        .into_iter()
        .flatten()
        .find_map(|r| r.hits.into_iter().next());
    hit.map(Graph::from_rows).transpose()
}

/// All k-γ_t-critical connected graphs of the given order and max degree, up to
/// isomorphism, by enumerating every labelled graph.
pub fn search_critical_full(
    order: usize,
    delta: usize,
    k: usize,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    if order > MAX_FULL_ORDER {
        return Err(Error::Parameter(format!(
            "full search needs order <= {MAX_FULL_ORDER}, got {order}; it scans 2^C(order,2) graphs"
        )));
    }
    if k < 2 || order != delta + k {
        return Err(Error::Parameter(format!(
            "full search needs k >= 2 and order = delta + k, got order {order}, delta {delta}, k {k}"
        )));
    }
    let started = Instant::now();
    let pairs = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .collect();
    let spaces = [Space {
        base: vec![0; order],
        pairs,
    }];
    let all = VertexSet::full(order).bits();
    let prune = opts.prune_diameter;
    let results = scan(&spaces, opts.workers, false, |rows| {
        full_candidate_is_critical(rows, all, delta, k, prune)
    });
    let graphs_tested = results.iter().flatten().map(|r| r.tested).sum();
    let certificates = certify(results.into_iter().flatten().flat_map(|r| r.hits), k, delta)?;
    Ok(SearchOutcome {
        mode: SearchMode::Full,
        delta,
        k,
        frames_enumerated: 1,
        graphs_tested,
        certificates,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criticality::check_frame_structure;
    use crate::criticality::Check;

    #[test]
    fn frames_per_delta() {
        let a = |d| {
            enumerate_frames(d)
                .unwrap()
                .iter()
                .map(|f| f.a())
                .collect::<Vec<_>>()
        };
        assert_eq!(a(7), vec![1, 2, 3]);
        assert_eq!(a(2), vec![1]);
        assert_eq!(a(4), vec![1, 2]);
        assert!(enumerate_frames(1).is_err());
    }

    #[test]
    fn degenerate_splits_are_rejected() {
        assert!(SearchFrame::new(5, 0).is_err());
        assert!(SearchFrame::new(5, 5).is_err());
        assert!(SearchFrame::new(5, 4).is_ok());
    }

    #[test]
    fn skeleton_degrees() {
        let f = SearchFrame::new(7, 2).unwrap();
        let g = f.skeleton();
        assert_eq!(g.order(), 10);
        assert_eq!(g.degree(0), 7);
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.degree(2), 6);
        assert_eq!(f.free_pairs().len(), 21);
        assert_eq!(check_frame_structure(&g, 0), Check::Holds);
        assert_eq!(f.assemble(1).edge_count(), g.edge_count() + 1);
    }

    #[test]
    fn gray_scan_visits_every_mask_once() {
        let space = Space {
            base: vec![0; 4],
            pairs: vec![(0, 1), (0, 2), (1, 2), (2, 3), (1, 3)],
        };
        let seen = Mutex::new(BTreeSet::new());
        let results = scan(&[space], 3, false, |rows| {
            assert!(seen.lock().unwrap().insert(rows.to_vec()));
            false
        });
        assert_eq!(seen.into_inner().unwrap().len(), 32);
        assert_eq!(results.iter().flatten().map(|r| r.tested).sum::<u64>(), 32);
    }

    #[test]
    fn frame_test_matches_general_criticality() {
        for delta in 2..=4 {
            for f in enumerate_frames(delta).unwrap() {
                let all = VertexSet::full(f.order()).bits();
                for mask in 0..1u64 << f.free_pairs().len() {
                    let g = f.assemble(mask);
                    let fast = frame_candidate_is_critical(g.rows(), all, delta, false);
                    let slow = g.max_degree().unwrap() == delta
                        && is_k_gamma_t_critical(&g, 3).unwrap().verdict;
                    assert_eq!(fast, slow, "delta {delta} a {} mask {mask:b}", f.a());
                }
            }
        }
    }

    #[test]
    fn search_parameter_caps() {
        let o = SearchOptions::default();
        assert!(search_critical_pruned(1, &o).is_err());
        assert!(search_critical_pruned(9, &o).is_err());
        assert!(search_critical_full(9, 6, 3, &o).is_err());
        assert!(search_critical_full(6, 2, 3, &o).is_err());
    }

    #[test]
    fn delta_two_finds_the_five_cycle() {
        let o = SearchOptions::default();
        let pruned = search_critical_pruned(2, &o).unwrap();
        assert_eq!(pruned.certificates, vec!["DLo".to_string()]);
        assert_eq!(pruned.graphs_tested, 2);
        let full = search_critical_full(5, 2, 3, &o).unwrap();
        assert_eq!(full.certificates, pruned.certificates);
        assert_eq!(full.graphs_tested, 1024);
    }

    #[test]
    fn footer_format() {
        let o = SearchOutcome {
            mode: SearchMode::Pruned,
            delta: 7,
            k: 3,
            frames_enumerated: 3,
            graphs_tested: 6291456,
            certificates: vec![],
            elapsed: Duration::from_millis(1500),
        };
        assert_eq!(
            o.to_string(),
            "delta=7 k=3 mode=pruned frames=3 tested=6291456 found=0 seconds=1.500"
        );
    }
}
