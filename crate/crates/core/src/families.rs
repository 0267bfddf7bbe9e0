//! Explicit 3-γ_t-critical families of order Δ+3 for odd Δ ≥ 9, plus cycles.
//!
//! Vertices are laid out as `x, y, z, y_1..y_p, z_1..z_q` (indices `0, 1, 2, 3.., 3+p..`).
//! Edge formulas are written with 1-based `y_i`/`z_j` indices and translated to
//! vertex indices only through [`Layout`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Order 4m+2, Δ = 4m−1.
    G4m2,
    /// Order 4m, Δ = 4m−3.
    G4m,
    Cycle,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::G4m2 => "g4m2",
            Family::G4m => "g4m",
            Family::Cycle => "cycle",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g4m2" => Ok(Family::G4m2),
            "g4m" => Ok(Family::G4m),
            "cycle" => Ok(Family::Cycle),
            _ => Err(Error::Parameter(format!(
                "unknown family {s:?} (expected g4m2, g4m or cycle)"
            ))),
        }
    }
}

/// A family and its size parameter: `m` for the two constructions, the length for cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    family: Family,
    size: usize,
}

impl FamilyParams {
    pub fn new(family: Family, size: usize) -> Result<Self> {
        match family {
            Family::G4m2 | Family::G4m if size < 3 => Err(Error::Parameter(format!(
                "{family} requires m >= 3, got {size}"
            ))),
            Family::Cycle if size < 3 => Err(Error::Parameter(format!(
                "cycle requires n >= 3, got {size}"
            ))),
            _ => Ok(FamilyParams { family, size }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn build(&self) -> Result<Graph> {
        match self.family {
            Family::G4m2 => build_g4m2(self.size).map(LabeledGraph::into_graph),
            Family::G4m => build_g4m(self.size).map(LabeledGraph::into_graph),
            Family::Cycle => build_cycle(self.size),
        }
    }
}

/// The role a vertex plays in a constructed graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    X,
    Y,
    Z,
    /// `y_i`, 1-based.
    YSide(usize),
    /// `z_j`, 1-based.
    ZSide(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::X => f.write_str("x"),
            Role::Y => f.write_str("y"),
            Role::Z => f.write_str("z"),
            Role::YSide(i) => write!(f, "y_{i}"),
            Role::ZSide(j) => write!(f, "z_{j}"),
        }
    }
}

/// Index translation for the `x, y, z, y_1..y_p, z_1..z_q` layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layout {
    p: usize,
    q: usize,
}

impl Layout {
    pub const X: usize = 0;
    pub const Y: usize = 1;
    pub const Z: usize = 2;

    pub fn new(p: usize, q: usize) -> Self {
        Layout { p, q }
    }

    pub fn order(&self) -> usize {
        3 + self.p + self.q
    }

    pub fn y_count(&self) -> usize {
        self.p
    }

    pub fn z_count(&self) -> usize {
        self.q
    }

    /// Vertex index of `y_i` (1-based `i`).
    pub fn y(&self, i: usize) -> usize {
        assert!(
            (1..=self.p).contains(&i),
            "y_{i} out of range 1..={}",
            self.p
        );
        2 + i
    }

    /// Vertex index of `z_j` (1-based `j`).
    pub fn z(&self, j: usize) -> usize {
        assert!(
            (1..=self.q).contains(&j),
            "z_{j} out of range 1..={}",
            self.q
        );
        2 + self.p + j
    }

    pub fn role(&self, v: usize) -> Option<Role> {
        match v {
            0 => Some(Role::X),
            1 => Some(Role::Y),
            2 => Some(Role::Z),
            v if v < 3 + self.p => Some(Role::YSide(v - 2)),
            v if v < self.order() => Some(Role::ZSide(v - 2 - self.p)),
            _ => None,
        }
    }
}

/// A constructed graph together with its role layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub layout: Layout,
}

impl LabeledGraph {
    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// `1 + (e mod len)`: the 1-based wraparound used by the circulant edge families.
fn wrap(e: usize, len: usize) -> usize {
    1 + e % len
}

fn check_m(m: usize) -> Result<()> {
    if m < 3 {
        Err(Error::Parameter(format!(
            "family parameter m must be >= 3, got {m}"
        )))
    } else {
        Ok(())
    }
}

/// Edges shared by both constructions: x and the y/z hubs to their sides, plus y–z.
fn skeleton(l: &Layout) -> Result<Graph> {
    let mut g = Graph::new(l.order())?;
    g.add_edge(Layout::Y, Layout::Z)?;
    for i in 1..=l.p {
        g.add_edge(Layout::X, l.y(i))?;
        g.add_edge(l.y(i), Layout::Y)?;
    }
    for j in 1..=l.q {
        g.add_edge(Layout::X, l.z(j))?;
        g.add_edge(l.z(j), Layout::Z)?;
    }
    Ok(g)
}

/// Cross edges `y_i z_j` for `j ≠ i` and `j ≠ i+1`.
fn add_cross_edges(g: &mut Graph, l: &Layout) -> Result<()> {
    for i in 1..=l.p {
        for j in 1..=l.q {
            if j != i && j != i + 1 {
                g.add_edge(l.y(i), l.z(j))?;
            }
        }
    }
    Ok(())
}

/// The order 4m+2 construction with `p = 2m−1` y-side and `q = 2m` z-side vertices.
pub fn build_g4m2(m: usize) -> Result<LabeledGraph> {
    check_m(m)?;
    let l = Layout::new(2 * m - 1, 2 * m);
    let mut g = skeleton(&l)?;
    for i in 1..=l.p {
        g.add_edge(l.y(i), l.y(wrap(i + m - 2, 2 * m - 1)))?;
    }
    for i in 1..=l.q {
        for j in i + 1..=l.q {
            if j != i + m {
                g.add_edge(l.z(i), l.z(j))?;
            }
        }
    }
    add_cross_edges(&mut g, &l)?;
    Ok(LabeledGraph {
        graph: g,
        layout: l,
    })
}

/// The order 4m construction with `p = 2m−2` y-side and `q = 2m−1` z-side vertices.
pub fn build_g4m(m: usize) -> Result<LabeledGraph> {
    check_m(m)?;
    let l = Layout::new(2 * m - 2, 2 * m - 1);
    let mut g = skeleton(&l)?;
    for i in 1..=l.p {
        for j in i + 1..=l.p {
            if j != i + m - 1 {
                g.add_edge(l.y(i), l.y(j))?;
            }
        }
    }
    for i in 1..=l.q {
        g.add_edge(l.z(i), l.z(wrap(i + m - 2, 2 * m - 1)))?;
    }
    add_cross_edges(&mut g, &l)?;
    g.add_edge(l.y(1), l.z(2))?;
    Ok(LabeledGraph {
        graph: g,
        layout: l,
    })
}

/// C_n on `0..n` with edges `i – (i+1 mod n)`.
pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter(format!(
            "cycle length must be >= 3, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// For every vertex `v`, a pair `S_v` that totally dominates `G − v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTable {
    sets: Vec<VertexSet>,
}

impl WitnessTable {
    pub fn get(&self, v: usize) -> Option<VertexSet> {
        self.sets.get(v).copied()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, VertexSet)> + '_ {
        self.sets.iter().copied().enumerate()
    }
}

fn pair(a: usize, b: usize) -> VertexSet {
    VertexSet::singleton(a).with(b)
}

fn table(
    l: &Layout,
    y_side: impl Fn(usize) -> VertexSet,
    z_side: impl Fn(usize) -> VertexSet,
) -> WitnessTable {
    let mut sets = vec![VertexSet::EMPTY; l.order()];
    sets[Layout::X] = pair(Layout::Y, Layout::Z);
    sets[Layout::Y] = pair(Layout::X, l.z(1));
    sets[Layout::Z] = pair(Layout::X, l.y(1));
    for i in 1..=l.p {
        sets[l.y(i)] = y_side(i);
    }
    for j in 1..=l.q {
        sets[l.z(j)] = z_side(j);
    }
    WitnessTable { sets }
}

/// Deletion witnesses for [`build_g4m2`].
///
/// For `z_i` with `i > m` the pair is `{y_{i−1}, z_{i−m}}`: `z_{i−m}` is the z-side
/// non-neighbour of `z_i`, and `y_{i−1}` is the y-side vertex adjacent to it that
/// is not adjacent to `z_i`.
pub fn witness_g4m2(m: usize) -> Result<WitnessTable> {
    check_m(m)?;
    let l = Layout::new(2 * m - 1, 2 * m);
    Ok(table(
        &l,
        |i| {
            if i <= m {
                pair(l.y(i + m - 2), l.z(i))
            } else {
                pair(l.y(i - m + 2), l.z(i + 1))
            }
        },
        |i| {
            if i <= m {
                pair(l.y(i), l.z(i + m))
            } else {
                pair(l.y(i - 1), l.z(i - m))
            }
        },
    ))
}

/// Deletion witnesses for [`build_g4m`].
pub fn witness_g4m(m: usize) -> Result<WitnessTable> {
    check_m(m)?;
    let l = Layout::new(2 * m - 2, 2 * m - 1);
    Ok(table(
        &l,
        |i| {
            if i < m {
                pair(l.y(i + m - 1), l.z(i))
            } else {
                pair(l.y(i - m + 1), l.z(i + 1))
            }
        },
        |i| {
            if i <= m {
                pair(l.y(i), l.z(wrap(i + m, 2 * m - 1)))
            } else {
                pair(l.y(i - 1), l.z(wrap(i + m - 3, 2 * m - 1)))
            }
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_parameters() {
        assert!(matches!(build_g4m2(2), Err(Error::Parameter(_))));
        assert!(matches!(build_g4m(2), Err(Error::Parameter(_))));
        assert!(matches!(build_cycle(2), Err(Error::Parameter(_))));
        assert!(matches!(witness_g4m2(1), Err(Error::Parameter(_))));
        assert!(FamilyParams::new(Family::G4m, 2).is_err());
        assert!(FamilyParams::new(Family::Cycle, 3).is_ok());
    }

    #[test]
    fn layout_roles() {
        let l = Layout::new(5, 6);
        assert_eq!(l.order(), 14);
        assert_eq!(l.y(1), 3);
        assert_eq!(l.z(1), 8);
        assert_eq!(l.z(6), 13);
        assert_eq!(l.role(0), Some(Role::X));
        assert_eq!(l.role(7), Some(Role::YSide(5)));
        assert_eq!(l.role(8), Some(Role::ZSide(1)));
        assert_eq!(l.role(14), None);
        assert_eq!(Role::ZSide(3).to_string(), "z_3");
    }

    #[test]
    fn extra_edge_of_g4m() {
        let lg = build_g4m(3).unwrap();
        let l = lg.layout;
        assert!(lg.graph.has_edge(l.y(1), l.z(2)));
        assert!(!lg.graph.has_edge(l.y(2), l.z(3)));
    }

    #[test]
    fn explicit_witness_entries() {
        let l = Layout::new(5, 6);
        let w = witness_g4m2(3).unwrap();
        assert_eq!(w.get(Layout::X), Some(pair(Layout::Y, Layout::Z)));
        assert_eq!(w.get(l.y(1)), Some(pair(l.y(2), l.z(1))));
        assert_eq!(w.get(l.z(2)), Some(pair(l.y(2), l.z(5))));
        let l = Layout::new(4, 5);
        let w = witness_g4m(3).unwrap();
        assert_eq!(w.get(Layout::Y), Some(pair(Layout::X, l.z(1))));
        assert_eq!(w.get(l.z(1)), Some(pair(l.y(1), l.z(5))));
        assert_eq!(w.get(l.z(4)), Some(pair(l.y(3), l.z(5))));
        assert_eq!(w.len(), 12);
    }

    #[test]
    fn family_names_roundtrip() {
        for f in [Family::G4m2, Family::G4m, Family::Cycle] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert!("petersen".parse::<Family>().is_err());
    }
}
