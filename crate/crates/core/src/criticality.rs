//! k-γ_t vertex-criticality and the structural conditions every 3-γ_t-critical graph of
//! order Δ+3 must satisfy.

use std::fmt::{self, Write};

use crate::domination::{self, total_dominates_within};
use crate::error::{Error, Result};
use crate::families::build_cycle;
use crate::graph::{Count, Graph, VertexSet};

/// Outcome of one vertex deletion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexEntry {
    pub vertex: usize,
    /// Adjacent to a degree-1 vertex of G, so exempt from the deletion condition.
    pub exempt: bool,
    /// γ_t(G − v).
    pub gamma_t: Count,
    /// Least minimum total dominating set of G − v, in the labels of G.
    pub witness: Option<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityReport {
    pub k: usize,
    pub gamma_t: Count,
    pub entries: Vec<VertexEntry>,
    pub verdict: bool,
}

impl CriticalityReport {
    /// Machine-readable form: a `k=.. gamma_t=.. verdict=..` header and one line per vertex.
    pub fn to_lines(&self) -> String {
        let mut out = format!(
            "k={} gamma_t={} verdict={}\n",
            self.k, self.gamma_t, self.verdict
        );
        for e in &self.entries {
            let witness = match e.witness {
                Some(w) => format!("{w:x}"),
                None => "-".to_owned(),
            };
            writeln!(
                out,
                "v={} exempt={} gtv={} witness={}",
                e.vertex, e.exempt, e.gamma_t, witness
            )
            .unwrap();
        }
        out
    }

    pub fn failing_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        let target = Count::Finite(self.k - 1);
        self.entries
            .iter()
            .filter(move |e| !e.exempt && e.gamma_t != target)
            .map(|e| e.vertex)
    }
}

/// Multi-line summary for people.
impl fmt::Display for CriticalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.verdict {
            "critical"
        } else {
            "NOT critical"
        };
        writeln!(
            f,
            "{}-gamma_t-critical: {verdict} (gamma_t = {})",
            self.k, self.gamma_t
        )?;
        for e in &self.entries {
            let witness = e
                .witness
                .map(|w| format!("{w:?}"))
                .unwrap_or_else(|| "none".into());
            let tag = if e.exempt { " [exempt]" } else { "" };
            writeln!(
                f,
                "  G - {:<3} gamma_t = {:<4} witness {witness}{tag}",
                e.vertex,
                e.gamma_t.to_string()
            )?;
        }
        Ok(())
    }
}

fn exempt_rows(rows: &[u64]) -> u64 {
    rows.iter()
        .filter(|r| r.count_ones() == 1)
        .fold(0, |acc, r| acc | r)
}

/// Vertices adjacent to at least one vertex of degree one.
pub fn exempt_vertices(g: &Graph) -> VertexSet {
    VertexSet::from_bits(exempt_rows(g.rows()))
}

/// Decides k-γ_t-criticality of the graph with adjacency `rows` on vertices `all`,
/// stopping at the first failing deletion. No connectivity check.
pub(crate) fn is_critical_rows(rows: &[u64], all: u64, k: usize) -> bool {
    if k < 2 || total_dominates_within(rows, all, k - 1) || !total_dominates_within(rows, all, k) {
        return false;
    }
    let mut check = all & !exempt_rows(rows);
    while check != 0 {
        let v = check.trailing_zeros() as usize;
        check &= check - 1;
        let rest = all & !(1 << v);
        if !total_dominates_within(rows, rest, k - 1) || total_dominates_within(rows, rest, k - 2) {
            return false;
        }
    }
    true
}

/// Short-circuiting criticality predicate with the same semantics as the report verdict.
pub fn is_critical(g: &Graph, k: usize) -> bool {
    g.order() >= 2 && g.is_connected() && is_critical_rows(g.rows(), g.vertices().bits(), k)
}

/// Full per-vertex criticality report at level `k`.
pub fn is_k_gamma_t_critical(g: &Graph, k: usize) -> Result<CriticalityReport> {
    if k < 2 {
        return Err(Error::Parameter(format!(
            "criticality level must be >= 2, got {k}"
        )));
    }
    if g.order() < 2 {
        return Err(Error::Precondition(format!(
            "graph of order {} is too small",
            g.order()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gamma_t = domination::gamma_t(g).value;
    let exempt = exempt_vertices(g);
    let target = Count::Finite(k - 1);
    let entries: Vec<VertexEntry> = (0..g.order())
        .map(|v| {
            let r = domination::gamma_t_without(g, v);
            VertexEntry {
                vertex: v,
                exempt: exempt.contains(v),
                gamma_t: r.value,
                witness: r.witness,
            }
        })
        .collect();
    let verdict =
        gamma_t == Count::Finite(k) && entries.iter().all(|e| e.exempt || e.gamma_t == target);
    Ok(CriticalityReport {
        k,
        gamma_t,
        entries,
        verdict,
    })
}

/// Result of a structural check that only applies to some graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check<T> {
    Holds,
    Violated(T),
    NotApplicable(String),
}

impl<T> Check<T> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }
}

fn critical_of_order_delta_plus_3(g: &Graph) -> std::result::Result<(), String> {
    let delta = g.max_degree().map_err(|e| e.to_string())?;
    if g.order() != delta + 3 {
        return Err(format!("order {} is not max degree {delta} + 3", g.order()));
    }
    match is_k_gamma_t_critical(g, 3) {
        Ok(r) if r.verdict => Ok(()),
        Ok(_) => Err("graph is not 3-gamma_t-critical".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// For a 3-γ_t-critical graph of order Δ+3: every minimum total dominating set of
/// G − v avoids N(v), for every v. A violation reports the vertex and offending set.
pub fn check_deletion_sets_avoid_neighborhood(g: &Graph) -> Check<(usize, VertexSet)> {
    if let Err(reason) = critical_of_order_delta_plus_3(g) {
        return Check::NotApplicable(reason);
    }
    for v in 0..g.order() {
        // exempt deletions may leave γ_t(G − v) undefined; nothing to check there
        let Ok(sets) =
            domination::all_minimum_total_dominating_sets_within(g, g.vertices().without(v))
        else {
            continue;
        };
        if let Some(&s) = sets.iter().find(|s| !s.is_disjoint(g.neighbors(v))) {
            return Check::Violated((v, s));
        }
    }
    Check::Holds
}

/// The two vertices outside N[x] when order = Δ+3 and deg(x) = Δ, lower index first.
pub fn frame_hubs(g: &Graph, x: usize) -> std::result::Result<(usize, usize), String> {
    if x >= g.order() {
        return Err(format!("vertex {x} out of range"));
    }
    let delta = g.max_degree().map_err(|e| e.to_string())?;
    if g.order() != delta + 3 {
        return Err(format!("order {} is not max degree {delta} + 3", g.order()));
    }
    if g.degree(x) != delta {
        return Err(format!(
            "deg({x}) = {} is not the max degree {delta}",
            g.degree(x)
        ));
    }
    let mut rest = (g.vertices() - g.closed_neighbors(x)).iter();
    match (rest.next(), rest.next()) {
        (Some(y), Some(z)) => Ok((y, z)),
        _ => unreachable!("order Δ+3 leaves exactly two non-neighbours"),
    }
}

/// How the y–z frame condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameViolation {
    HubsNotAdjacent {
        y: usize,
        z: usize,
    },
    /// `v ∈ N(x)` is adjacent to `hits` of {y, z} instead of exactly one.
    Neighbor {
        v: usize,
        hits: usize,
    },
}

/// With y, z the non-neighbours of a maximum-degree vertex x in a graph of order Δ+3:
/// yz is an edge and every v ∈ N(x) is adjacent to exactly one of y, z.
pub fn check_frame_structure(g: &Graph, x: usize) -> Check<FrameViolation> {
    let (y, z) = match frame_hubs(g, x) {
        Ok(h) => h,
        Err(reason) => return Check::NotApplicable(reason),
    };
    if !g.has_edge(y, z) {
        return Check::Violated(FrameViolation::HubsNotAdjacent { y, z });
    }
    let hubs = VertexSet::singleton(y).with(z);
    for v in g.neighbors(x) {
        let hits = (g.neighbors(v) & hubs).len();
        if hits != 1 {
            return Check::Violated(FrameViolation::Neighbor { v, hits });
        }
    }
    Check::Holds
}

/// Cross-edge conditions between `Y = N(y) − z` and `Z = N(z) − y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossEdgeConditions {
    /// Some `y_i z_j` is an edge.
    pub some_cross_edge: bool,
    /// Every `y_i` has a non-neighbour in Z.
    pub every_y_misses_some_z: bool,
    /// Every `z_j` has a non-neighbour in Y.
    pub every_z_misses_some_y: bool,
}

impl CrossEdgeConditions {
    pub fn all(&self) -> bool {
        self.some_cross_edge && self.every_y_misses_some_z && self.every_z_misses_some_y
    }
}

/// Evaluates the cross-edge conditions for the frame at `x`. The hub with the lower index
/// plays the role of y.
pub fn check_cross_edge_conditions(
    g: &Graph,
    x: usize,
) -> std::result::Result<CrossEdgeConditions, String> {
    let (y, z) = frame_hubs(g, x)?;
    let ys = g.neighbors(y).without(z);
    let zs = g.neighbors(z).without(y);
    Ok(CrossEdgeConditions {
        some_cross_edge: ys.iter().any(|u| !g.neighbors(u).is_disjoint(zs)),
        every_y_misses_some_z: ys.iter().all(|u| !zs.is_subset(g.neighbors(u))),
        every_z_misses_some_y: zs.iter().all(|w| !ys.is_subset(g.neighbors(w))),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleProfileEntry {
    pub n: usize,
    pub gamma_t: usize,
    pub critical: bool,
}

/// γ_t(C_n) and whether C_n is γ_t(C_n)-critical, for n in 3..=n_max.
pub fn cycle_criticality_profile(n_max: usize) -> Result<Vec<CycleProfileEntry>> {
    if n_max < 3 {
        return Err(Error::Parameter(format!(
            "cycle profile bound must be >= 3, got {n_max}"
        )));
    }
    (3..=n_max)
        .map(|n| {
            let c = build_cycle(n)?;
            let gamma_t = domination::gamma_t(&c)
                .value
                .finite()
                .expect("cycles have no isolated vertex");
            let critical = is_k_gamma_t_critical(&c, gamma_t)?.verdict;
            Ok(CycleProfileEntry {
                n,
                gamma_t,
                critical,
            })
        })
        .collect()
}
