//! Minimum row/column covers of the MISSING entries.
//!
//! The MISSING entries form a bipartite graph between rows and columns. A
//! maximum matching (Hopcroft–Karp) and König's construction give a minimum
//! vertex cover. Started from the unmatched columns, the construction yields
//! the minimum cover with the fewest rows, and that cover is unique.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::IndexOutOfRange;
use crate::tri::{Symbol, TriVector};

/// Rows `R` and columns `T` (0-based, ascending) such that every MISSING entry
/// lies in a row of `R` or a column of `T`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl CoverCertificate {
    pub fn value(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    pub fn contains_row(&self, row: usize) -> bool {
        self.rows.binary_search(&row).is_ok()
    }
}

struct MissingGraph {
    left: Vec<usize>,
    right: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

impl MissingGraph {
    fn new(rows: &[TriVector]) -> Self {
        let dim = rows.first().map_or(0, TriVector::dim);
        let mut col_slot = alloc::vec![usize::MAX; dim];
        let mut right = Vec::new();
        let mut left = Vec::new();
        let mut adj = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let missing = row.missing_coords();
            if missing.is_empty() {
                continue;
            }
            let mut nbrs = Vec::with_capacity(missing.len());
            for c in missing {
                if col_slot[c] == usize::MAX {
                    col_slot[c] = right.len();
                    right.push(c);
                }
                nbrs.push(col_slot[c]);
            }
            left.push(i);
            adj.push(nbrs);
        }
        MissingGraph { left, right, adj }
    }
}

/// Hopcroft–Karp; returns (match of each left vertex, match of each right vertex).
fn hopcroft_karp(g: &MissingGraph) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let (nl, nr) = (g.left.len(), g.right.len());
    let mut ml: Vec<Option<usize>> = alloc::vec![None; nl];
    let mut mr: Vec<Option<usize>> = alloc::vec![None; nr];
    let mut dist = alloc::vec![usize::MAX; nl];
    loop {
        let mut queue = VecDeque::new();
        for u in 0..nl {
            if ml[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &g.adj[u] {
                match mr[v] {
                    None => found = true,
                    Some(w) if dist[w] == usize::MAX => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            return (ml, mr);
        }
        for u in 0..nl {
            if ml[u].is_none() {
                augment(g, u, &mut ml, &mut mr, &mut dist);
            }
        }
    }
}

fn augment(
    g: &MissingGraph,
    u: usize,
    ml: &mut [Option<usize>],
    mr: &mut [Option<usize>],
    dist: &mut [usize],
) -> bool {
    for &v in &g.adj[u] {
        let free_or_deeper = match mr[v] {
            None => true,
            Some(w) => dist[w] == dist[u].wrapping_add(1) && augment(g, w, ml, mr, dist),
        };
        if free_or_deeper {
            ml[u] = Some(v);
            mr[v] = Some(u);
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Minimum cover of the MISSING entries, with the fewest rows among minimum
/// covers.
pub fn covering_certificate(rows: &[TriVector]) -> CoverCertificate {
    let g = MissingGraph::new(rows);
    let (ml, mr) = hopcroft_karp(&g);
    let mut col_adj = alloc::vec![Vec::new(); g.right.len()];
    for (u, nbrs) in g.adj.iter().enumerate() {
        for &v in nbrs {
            col_adj[v].push(u);
        }
    }
    // Alternating reachability from unmatched columns.
    let mut reach_l = alloc::vec![false; g.left.len()];
    let mut reach_r = alloc::vec![false; g.right.len()];
    let mut stack: Vec<usize> = (0..g.right.len()).filter(|&v| mr[v].is_none()).collect();
    for &v in &stack {
        reach_r[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &u in &col_adj[v] {
            if !reach_l[u] {
                reach_l[u] = true;
                if let Some(w) = ml[u] {
                    if !reach_r[w] {
                        reach_r[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
    }
    let mut cert = CoverCertificate {
        rows: (0..g.left.len()).filter(|&u| reach_l[u]).map(|u| g.left[u]).collect(),
        cols: (0..g.right.len()).filter(|&v| !reach_r[v]).map(|v| g.right[v]).collect(),
    };
    cert.rows.sort_unstable();
    cert.cols.sort_unstable();
    cert
}

/// Size of a maximum matching in the MISSING-entry bipartite graph.
pub fn missing_matching_size(rows: &[TriVector]) -> usize {
    let g = MissingGraph::new(rows);
    hopcroft_karp(&g).0.iter().filter(|m| m.is_some()).count()
}

/// Whether `cert` touches every MISSING entry (minimality is not checked).
pub fn verify_certificate(rows: &[TriVector], cert: &CoverCertificate) -> Result<bool, IndexOutOfRange> {
    let dim = rows.first().map_or(0, TriVector::dim);
    if let Some(&index) = cert.rows.iter().find(|&&i| i >= rows.len()) {
        return Err(IndexOutOfRange { what: "row", index, limit: rows.len() });
    }
    if let Some(&index) = cert.cols.iter().find(|&&j| j >= dim) {
        return Err(IndexOutOfRange { what: "column", index, limit: dim });
    }
    Ok(rows.iter().enumerate().all(|(i, row)| {
        cert.rows.contains(&i) || (0..dim).all(|j| row.get(j) != Symbol::Missing || cert.cols.contains(&j))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rows(s: &[&str]) -> Vec<TriVector> {
        s.iter().map(|x| TriVector::parse(x).unwrap()).collect()
    }

    #[test]
    fn complete_matrix_has_empty_cover() {
        let m = rows(&["01", "10"]);
        let c = covering_certificate(&m);
        assert_eq!((c.value(), c.clone()), (0, CoverCertificate::default()));
        assert_eq!(verify_certificate(&m, &c), Ok(true));
    }

    #[test]
    fn all_missing_row_is_cheaper_than_columns() {
        let m = rows(&["000", "???"]);
        let c = covering_certificate(&m);
        assert_eq!(c, CoverCertificate { rows: vec![1], cols: vec![] });
        assert_eq!(verify_certificate(&m, &c), Ok(true));
    }

    #[test]
    fn three_missing_entries_need_two() {
        // MISSING at (1,1), (1,2), (2,1) in 1-based terms.
        let m = rows(&["??0", "?00"]);
        let c = covering_certificate(&m);
        assert_eq!(c.value(), 2);
        // {row 0, col 0} is also minimum; the column-only cover has fewer rows.
        assert_eq!(c, CoverCertificate { rows: vec![], cols: vec![0, 1] });
        assert_eq!(missing_matching_size(&m), 2);
        assert_eq!(verify_certificate(&m, &c), Ok(true));
    }

    #[test]
    fn verify_rejects_incomplete_and_accepts_oversized() {
        let m = rows(&["??0", "?00"]);
        let short = CoverCertificate { rows: vec![0], cols: vec![] };
        assert_eq!(verify_certificate(&m, &short), Ok(false));
        let big = CoverCertificate { rows: vec![0, 1], cols: vec![0, 1, 2] };
        assert_eq!(verify_certificate(&m, &big), Ok(true));
        let bad = CoverCertificate { rows: vec![5], cols: vec![] };
        assert!(verify_certificate(&m, &bad).is_err());
    }

    #[test]
    fn ties_prefer_columns() {
        // A 2x2 block of MISSING: {col 0, col 1} and {row 0, row 1} both cost 2.
        let m = rows(&["??", "??"]);
        assert_eq!(covering_certificate(&m), CoverCertificate { rows: vec![], cols: vec![0, 1] });
    }
}
