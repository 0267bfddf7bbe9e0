//! Exact canonical labelling for small graphs: the relabelling whose graph6 string is
//! lexicographically least.
//!
//! graph6 lists the upper triangle column by column, so fixing the vertex placed at
//! position `j` fixes column `j`. A depth-first search places vertices one position at a
//! time and keeps only placements whose column prefix ties the best prefix seen so far.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

pub const MAX_CANON_ORDER: usize = 10;

struct Canon<'a> {
    rows: &'a [u64],
    n: usize,
    /// Column words of the best prefix; `u64::MAX` marks columns not yet fixed.
    best: Vec<u64>,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
}

impl Canon<'_> {
    fn column(&self, depth: usize, c: usize) -> u64 {
        self.perm[..depth]
            .iter()
            .fold(0, |w, &p| w << 1 | (self.rows[p] >> c & 1))
    }

    fn place(&mut self, depth: usize, used: u64) {
        if depth == self.n {
            self.best_perm.copy_from_slice(&self.perm);
            return;
        }
        let mut free = !used & ((1u64 << self.n) - 1);
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            let w = self.column(depth, c);
            if w > self.best[depth] {
                continue;
            }
            if w < self.best[depth] {
                self.best[depth] = w;
                self.best[depth + 1..].fill(u64::MAX);
            }
            self.perm[depth] = c;
            self.place(depth + 1, used | 1 << c);
        }
    }
}

/// The relabelling of `g` with the lexicographically least graph6 string.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::Parameter(format!(
            "canonical labelling supports order <= {MAX_CANON_ORDER}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(g.clone());
    }
    let mut canon = Canon {
        rows: g.rows(),
        n,
        best: vec![u64::MAX; n],
        best_perm: vec![0; n],
        perm: vec![0; n],
    };
    canon.place(0, 0);
    // best_perm[new] = old; relabel old -> new
    let mut relabel = vec![0; n];
    for (new, &old) in canon.best_perm.iter().enumerate() {
        relabel[old] = new;
    }
    g.permuted(&relabel)
}

pub fn canonical_graph6(g: &Graph) -> Result<String> {
    canonical_form(g).map(|c| graph6::encode(&c))
}

/// One canonical representative per isomorphism class, sorted by graph6.
pub fn dedup_isomorphic(graphs: &[Graph]) -> Result<Vec<Graph>> {
    let mut classes = BTreeMap::new();
    for g in graphs {
        let c = canonical_form(g)?;
        classes.entry(graph6::encode(&c)).or_insert(c);
    }
    Ok(classes.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_cycle;

    fn brute_force(g: &Graph) -> String {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.order())
            .iter()
            .map(|p| graph6::encode(&g.permuted(p).unwrap()))
            .min()
            .unwrap()
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let graphs = [
            build_cycle(5).unwrap(),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap(),
            Graph::from_edges(6, [(0, 5), (5, 3), (3, 1), (1, 0), (2, 4), (4, 0)]).unwrap(),
            Graph::new(4).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::from_edges(7, [(0, 6), (6, 2), (2, 5), (1, 3), (3, 4), (4, 1), (5, 0)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(canonical_graph6(g).unwrap(), brute_force(g), "{g:?}");
        }
    }

    #[test]
    fn dedup_collapses_relabelled_copies() {
        let c5 = build_cycle(5).unwrap();
        let relabelled = c5.permuted(&[2, 4, 1, 0, 3]).unwrap();
        let c6 = build_cycle(6).unwrap();
        assert_eq!(
            dedup_isomorphic(&[c5.clone(), relabelled]).unwrap().len(),
            1
        );
        assert_eq!(dedup_isomorphic(&[c5, c6]).unwrap().len(), 2);
        assert!(dedup_isomorphic(&[]).unwrap().is_empty());
        assert!(dedup_isomorphic(&[Graph::new(11).unwrap()]).is_err());
    }
}
