//! Instance generators: graph reductions with known answers and seeded
//! random instances.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::instance::{Instance, Variant};
use crate::solution::{Center, ClusteringSolution};
use crate::tri::{Symbol, TriVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("edge {0:?} is a loop or repeats an earlier edge")]
    BadEdge((usize, usize)),
    #[error("edge {edge:?} names a vertex outside 0..{n}")]
    VertexOutOfRange { edge: (usize, usize), n: usize },
    #[error("vertex {vertex}: pad {pad} is outside 0..={max}")]
    PadOutOfRange { vertex: usize, pad: usize, max: usize },
    #[error("expected {expected} pads, got {found}")]
    PadCount { expected: usize, found: usize },
    #[error("strings must be non-empty, complete and of equal length")]
    BadStrings,
    #[error("graph must be regular with positive degree")]
    NotRegular,
    #[error("graph needs at least {0} vertices")]
    TooSmall(usize),
    #[error("infeasible parameters: {0}")]
    Infeasible(&'static str),
}

/// A simple undirected graph with an ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GenError> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(GenError::VertexOutOfRange { edge: (a, b), n });
            }
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                return Err(GenError::BadEdge((a, b)));
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        let edges = if n < 3 { Vec::new() } else { (0..n).map(|i| (i, (i + 1) % n)).collect() };
        Graph { n, edges }
    }

    /// The 3×3 rook's graph: 4-regular, K4-free, its rows are a triangle partition.
    pub fn rook_3x3() -> Self {
        let mut edges = Vec::new();
        for a in 0..9 {
            for b in a + 1..9 {
                if a / 3 == b / 3 || a % 3 == b % 3 {
                    edges.push((a, b));
                }
            }
        }
        Graph { n: 9, edges }
    }

    /// Erdős–Rényi graph with edge probability `p`.
    pub fn random(n: usize, p: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_bool(p.clamp(0.0, 1.0)) {
                    edges.push((a, b));
                }
            }
        }
        Graph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Whether a proper coloring with `colors` colors exists (backtracking).
    pub fn is_colorable(&self, colors: usize) -> bool {
        fn go(g: &Graph, v: usize, colors: usize, color: &mut Vec<usize>) -> bool {
            if v == g.n {
                return true;
            }
            // Symmetry: vertex v may only open the next unused color.
            let open = color.iter().copied().max().map_or(0, |m| m + 1);
            for c in 0..colors.min(open + 1) {
                if (0..v).all(|u| color[u] != c || !g.adjacent(u, v)) {
                    color.push(c);
                    if go(g, v + 1, colors, color) {
                        return true;
                    }
                    color.pop();
                }
            }
            false
        }
        go(self, 0, colors, &mut Vec::new())
    }
}

/// Incidence vectors over the edges, then `n(n−1)` private coordinates where
/// vertex `i` gets `pads[i]` ones in its own block of `n−1`. Then
/// `δ(a_i, a_j) = deg(i)+pads[i]+deg(j)+pads[j] − 2·[ij ∈ E]`.
pub fn incidence_reduction(g: &Graph, pads: &[usize]) -> Result<Vec<TriVector>, GenError> {
    let n = g.n;
    if pads.len() != n {
        return Err(GenError::PadCount { expected: n, found: pads.len() });
    }
    let max = n.saturating_sub(1);
    if let Some((vertex, &pad)) = pads.iter().enumerate().find(|(_, &p)| p > max) {
        return Err(GenError::PadOutOfRange { vertex, pad, max });
    }
    let m = g.edges.len();
    let d = (m + n * max).max(1);
    Ok((0..n)
        .map(|i| {
            let mut v = TriVector::zeros(d);
            for (e, &(a, b)) in g.edges.iter().enumerate() {
                if a == i || b == i {
                    v.set(e, Symbol::One);
                }
            }
            for p in 0..pads[i] {
                v.set(m + i * max + p, Symbol::One);
            }
            v
        })
        .collect())
}

/// 3-coloring as clustering completion with `k = 3`, `r = 0`: vertex rows are
/// MISSING off their incident edges; on edge `{u, v}` the earlier vertex holds
/// 0 and the later 1. An edgeless graph gets one constant-0 column.
pub fn coloring_completion_instance(g: &Graph, variant: Variant) -> Result<Instance, GenError> {
    if g.n == 0 {
        return Err(GenError::TooSmall(1));
    }
    let m = g.edges.len();
    let rows = (0..g.n)
        .map(|i| {
            if m == 0 {
                return TriVector::zeros(1);
            }
            let mut v = TriVector::missing(m);
            for (e, &(a, b)) in g.edges.iter().enumerate() {
                if i == a || i == b {
                    v.set(e, Symbol::from_bit(i == a.max(b)));
                }
            }
            v
        })
        .collect();
    Ok(Instance::new(rows, 3, 0, variant).expect("non-empty uniform rows"))
}

/// Closest string as In with `k = 1`: the strings plus one all-MISSING row.
pub fn closest_string_instance(strings: &[TriVector], r: usize) -> Result<Instance, GenError> {
    let len = strings.first().ok_or(GenError::BadStrings)?.dim();
    if len == 0 || strings.iter().any(|s| s.dim() != len || !s.is_complete()) {
        return Err(GenError::BadStrings);
    }
    let mut rows = strings.to_vec();
    rows.push(TriVector::missing(len));
    Ok(Instance::new(rows, 1, 0, Variant::In).expect("valid rows").with_r(r))
}

/// Dominating set of size `k` as In: pads `n−1−deg` make adjacent rows
/// `2n−4` apart and others `2n−2`, with `r = 2n−4`.
pub fn dominating_set_instance(g: &Graph, k: usize) -> Result<Instance, GenError> {
    if g.n < 2 {
        return Err(GenError::TooSmall(2));
    }
    let pads: Vec<usize> = (0..g.n).map(|v| g.n - 1 - g.degree(v)).collect();
    let rows = incidence_reduction(g, &pads)?;
    Instance::new(rows, k.max(1), 2 * g.n - 4, Variant::In).map_err(|_| GenError::Infeasible("k must be positive"))
}

/// Clique cover with `k` cliques as Diam, same distances as
/// [`dominating_set_instance`].
pub fn clique_cover_instance(g: &Graph, k: usize) -> Result<Instance, GenError> {
    dominating_set_instance(g, k).map(|i| i.with_variant(Variant::Diam))
}

/// Partition into triangles of a regular K4-free graph as Diam: no pads,
/// adjacent rows `2Δ−2` apart, `k = n/3`, `r = 2Δ−2`.
pub fn triangle_partition_instance(g: &Graph) -> Result<Instance, GenError> {
    let deg = g.degree(0);
    if g.n == 0 || deg == 0 || (0..g.n).any(|v| g.degree(v) != deg) {
        return Err(GenError::NotRegular);
    }
    if !g.n.is_multiple_of(3) {
        return Err(GenError::Infeasible("vertex count must be divisible by 3"));
    }
    let rows = incidence_reduction(g, &alloc::vec![0; g.n])?;
    Ok(Instance::new(rows, g.n / 3, 2 * deg - 2, Variant::Diam).expect("valid rows"))
}

/// Where MISSING entries may appear: only in `rows` chosen rows and `cols`
/// chosen columns, so the covering number is at most `rows + cols`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MissingSpec {
    pub rows: usize,
    pub cols: usize,
    /// Entries to erase within the allowed cells (capped by their number).
    pub entries: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlantedSpec {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub r: usize,
    pub variant: Variant,
    pub missing: MissingSpec,
}

/// A generated instance with a solution known in advance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planted {
    pub instance: Instance,
    pub witness: ClusteringSolution,
}

fn random_vector(rng: &mut ChaCha8Rng, d: usize) -> TriVector {
    let bits: Vec<bool> = (0..d).map(|_| rng.random_bool(0.5)).collect();
    TriVector::from_bits(&bits)
}

fn flip_up_to(rng: &mut ChaCha8Rng, v: &TriVector, max: usize) -> TriVector {
    let mut out = v.clone();
    let count = rng.random_range(0..=max.min(v.dim()));
    for i in sample(rng, v.dim(), count) {
        let s = if out.get(i) == Symbol::One { Symbol::Zero } else { Symbol::One };
        out.set(i, s);
    }
    out
}

fn erase(rng: &mut ChaCha8Rng, rows: &mut [TriVector], spec: &MissingSpec) {
    let (n, d) = (rows.len(), rows[0].dim());
    let chosen_rows: BTreeSet<usize> = sample(rng, n, spec.rows.min(n)).into_iter().collect();
    let chosen_cols: BTreeSet<usize> = sample(rng, d, spec.cols.min(d)).into_iter().collect();
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|(i, j)| chosen_rows.contains(i) || chosen_cols.contains(j))
        .collect();
    for c in sample(rng, cells.len(), spec.entries.min(cells.len())) {
        let (i, j) = cells[c];
        rows[i].set(j, Symbol::Missing);
    }
}

fn check_spec(spec: &PlantedSpec) -> Result<(), GenError> {
    if spec.n == 0 || spec.d == 0 || spec.k == 0 {
        return Err(GenError::Infeasible("n, d and k must be positive"));
    }
    if spec.r > spec.d {
        return Err(GenError::Infeasible("r exceeds the dimension"));
    }
    if spec.missing.rows > spec.n || spec.missing.cols > spec.d {
        return Err(GenError::Infeasible("more MISSING rows or columns than the matrix has"));
    }
    Ok(())
}

/// Samples `k` centers and scatters rows around them (within `r` for In and
/// Any, within `⌊r/2⌋` for Diam), then erases entries per the spec. For In
/// the centers are the first rows. Same arguments give the same instance.
pub fn random_planted(spec: &PlantedSpec, seed: u64) -> Result<Planted, GenError> {
    check_spec(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let centers: Vec<TriVector> = (0..spec.k).map(|_| random_vector(&mut rng, spec.d)).collect();
    let spread = if spec.variant == Variant::Diam { spec.r / 2 } else { spec.r };
    let mut complete = Vec::with_capacity(spec.n);
    let mut owner = Vec::with_capacity(spec.n);
    for i in 0..spec.n {
        if spec.variant == Variant::In && i < spec.k {
            complete.push(centers[i].clone());
            owner.push(i);
        } else {
            let c = rng.random_range(0..spec.k);
            complete.push(flip_up_to(&mut rng, &centers[c], spread));
            owner.push(c);
        }
    }
    let mut rows = complete.clone();
    erase(&mut rng, &mut rows, &spec.missing);

    let mut clusters = alloc::vec![Vec::new(); spec.k];
    for (i, &c) in owner.iter().enumerate() {
        clusters[c].push(i);
    }
    let used: Vec<usize> = (0..spec.k).filter(|&c| !clusters[c].is_empty()).collect();
    let witness = ClusteringSolution {
        completion: complete,
        clusters: used.iter().map(|&c| clusters[c].clone()).collect(),
        centers: match spec.variant {
            Variant::In => used.iter().map(|&c| Center::Row(c)).collect(),
            Variant::Any => used.iter().map(|&c| Center::Point(centers[c].clone())).collect(),
            Variant::Diam => Vec::new(),
        },
    };
    let instance = Instance::new(rows, spec.k, spec.r, spec.variant).expect("spec checked");
    Ok(Planted { instance, witness })
}

/// Uniformly random rows with erasures per the spec; the answer is unknown.
pub fn random_uniform(spec: &PlantedSpec, seed: u64) -> Result<Instance, GenError> {
    check_spec(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<TriVector> = (0..spec.n).map(|_| random_vector(&mut rng, spec.d)).collect();
    erase(&mut rng, &mut rows, &spec.missing);
    Ok(Instance::new(rows, spec.k, spec.r, spec.variant).expect("spec checked"))
}
