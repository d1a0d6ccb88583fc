//! Neighborhoods, diameters, threshold graphs and important coordinates.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::DimensionMismatch;
use crate::instance::Instance;
use crate::tri::{Symbol, TriVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reach {
    /// δ exactly equal to the radius.
    Exact,
    /// δ at most the radius.
    AtMost,
}

/// Indices of rows at distance `radius` (or within it) from `center`.
pub fn neighborhood(
    rows: &[TriVector],
    center: &TriVector,
    radius: usize,
    reach: Reach,
) -> Result<Vec<usize>, DimensionMismatch> {
    let mut out = Vec::new();
    for (i, x) in rows.iter().enumerate() {
        let d = crate::tri::hamming_delta(center, x)?;
        if d == radius || (reach == Reach::AtMost && d < radius) {
            out.push(i);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("diameter of an empty row set is undefined")]
pub struct EmptySelection;

/// Largest pairwise δ among the selected rows.
pub fn diameter(rows: &[TriVector], selection: &[usize]) -> Result<usize, EmptySelection> {
    if selection.is_empty() {
        return Err(EmptySelection);
    }
    Ok(diameter_unchecked(rows, selection))
}

pub(crate) fn diameter_unchecked(rows: &[TriVector], selection: &[usize]) -> usize {
    let mut best = 0;
    for (a, &i) in selection.iter().enumerate() {
        for &j in &selection[a + 1..] {
            best = best.max(rows[i].delta(&rows[j]));
        }
    }
    best
}

/// Undirected graph on row indices with an edge whenever δ is at most a
/// threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdGraph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl ThresholdGraph {
    pub fn build(rows: &[TriVector], threshold: usize) -> Self {
        Self::build_on(rows, &(0..rows.len()).collect::<Vec<_>>(), threshold)
    }

    /// Graph over `rows[selection[..]]`; vertex `i` is `selection[i]`.
    pub fn build_on(rows: &[TriVector], selection: &[usize], threshold: usize) -> Self {
        let n = selection.len();
        let mut adjacency = alloc::vec![BTreeSet::new(); n];
        for a in 0..n {
            for b in a + 1..n {
                if rows[selection[a]].delta(&rows[selection[b]]) <= threshold {
                    adjacency[a].insert(b);
                    adjacency[b].insert(a);
                }
            }
        }
        ThresholdGraph { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adjacency.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = alloc::vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// The compatibility graph of an instance: threshold `r` for In and Diam,
/// `2r` for Any.
pub fn compatibility_graph(inst: &Instance) -> ThresholdGraph {
    ThresholdGraph::build(inst.rows(), inst.variant().edge_threshold(inst.r()))
}

/// Coordinates on which two of the selected rows hold opposite known bits.
pub fn important_coordinates(rows: &[TriVector], selection: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let Some(&first) = selection.first() else {
        return out;
    };
    for c in 0..rows[first].dim() {
        let mut seen_zero = false;
        let mut seen_one = false;
        for &i in selection {
            match rows[i].get(c) {
                Symbol::Zero => seen_zero = true,
                Symbol::One => seen_one = true,
                Symbol::Missing => {}
            }
        }
        if seen_zero && seen_one {
            out.insert(c);
        }
    }
    out
}
