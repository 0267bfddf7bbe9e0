//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdc_core::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    let mut lists = vec![Vec::new(); g.order()];
    for (u, v) in g.edges() {
        lists[u].push(v);
        lists[v].push(u);
    }
    lists
}

/// Least size and least-bitmask witness by scanning every subset, smallest sizes first.
fn naive(g: &Graph, total: bool) -> Option<(usize, u64)> {
    let n = g.order();
    let lists = adjacency_lists(g);
    for k in 0..=n {
        for mask in 0u64..1 << n {
            if mask.count_ones() as usize != k {
                continue;
            }
            let ok = (0..n).all(|v| {
                (!total && mask >> v & 1 == 1) || lists[v].iter().any(|&u| mask >> u & 1 == 1)
            });
            if ok {
                return Some((k, mask));
            }
        }
    }
    None
}

pub fn naive_gamma_t(g: &Graph) -> Option<(usize, u64)> {
    naive(g, true)
}

pub fn naive_gamma(g: &Graph) -> Option<(usize, u64)> {
    naive(g, false)
}

/// Whether some set of exactly `k` vertices totally dominates `g`.
pub fn naive_has_total_dominating_set_of_size(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let lists = adjacency_lists(g);
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .any(|mask| (0..n).all(|v| lists[v].iter().any(|&u| mask >> u & 1 == 1)))
}

/// Vertex roles in the constructed families, with 1-based side indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum R {
    X,
    Y,
    Z,
    Ys(usize),
    Zs(usize),
}

fn roles(p: usize, q: usize) -> Vec<R> {
    let mut r = vec![R::X, R::Y, R::Z];
    r.extend((1..=p).map(R::Ys));
    r.extend((1..=q).map(R::Zs));
    r
}

fn circ(i: usize, j: usize, m: usize) -> bool {
    let len = 2 * m - 1;
    j == 1 + (i + m - 2) % len || i == 1 + (j + m - 2) % len
}

/// Adjacency of the order 4m+2 family as a predicate on roles, read off the edge families.
pub fn adj_g4m2(m: usize, a: R, b: R) -> bool {
    use R::*;
    match (a, b) {
        (X, Ys(_)) | (X, Zs(_)) | (Y, Ys(_)) | (Z, Zs(_)) | (Y, Z) => true,
        (Ys(i), Ys(j)) => i != j && circ(i, j, m),
        (Zs(i), Zs(j)) => i != j && j != i + m && i != j + m,
        (Ys(i), Zs(j)) => j != i && j != i + 1,
        (Ys(_), _) | (Zs(_), _) | (Z, Y) => adj_g4m2(m, b, a),
        _ => false,
    }
}

/// Adjacency of the order 4m family as a predicate on roles.
pub fn adj_g4m(m: usize, a: R, b: R) -> bool {
    use R::*;
    match (a, b) {
        (X, Ys(_)) | (X, Zs(_)) | (Y, Ys(_)) | (Z, Zs(_)) | (Y, Z) => true,
        (Ys(i), Ys(j)) => i != j && j != i + m - 1 && i != j + m - 1,
        (Zs(i), Zs(j)) => i != j && circ(i, j, m),
        (Ys(i), Zs(j)) => (j != i && j != i + 1) || (i == 1 && j == 2),
        (Ys(_), _) | (Zs(_), _) | (Z, Y) => adj_g4m(m, b, a),
        _ => false,
    }
}

pub fn g4m2_roles(m: usize) -> Vec<R> {
    roles(2 * m - 1, 2 * m)
}

pub fn g4m_roles(m: usize) -> Vec<R> {
    roles(2 * m - 2, 2 * m - 1)
}

pub fn from_predicate(roles: &[R], adj: impl Fn(R, R) -> bool) -> Graph {
    let n = roles.len();
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if adj(roles[u], roles[v]) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
