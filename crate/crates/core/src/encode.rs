//! Bounded-domain matrices and their Boolean block encodings.
//!
//! A value `i ∈ 0..q` becomes a width-`q` block:
//! * `α(i)`: the binary digits of `2^i`, most significant first (one-hot), so
//!   `2·hamming(a, b) = δ(α(a), α(b))`;
//! * `β(i)`: `q − i` zeros followed by `i` ones (unary), so
//!   `manhattan(a, b) = δ(β(a), β(b))`.
//!
//! MISSING becomes an all-MISSING block. Completions of an encoded matrix are
//! only meaningful when block-preserving, so [`solve_qary`] enumerates q-ary
//! completions and encodes each.
//!
//! ```
//! use inclust_core::encode::{encode_alpha, QaryMatrix};
//!
//! let m = QaryMatrix::new(3, vec![vec![Some(0), Some(2)]]).unwrap();
//! assert_eq!(encode_alpha(&m).rows()[0].to_string(), "001100");
//! ```

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::covering::{covering_certificate, CoverCertificate};
use crate::instance::{Instance, Variant};
use crate::solve::{binomial, solve_any_with_pool, solve_diam_complete, solve_in_complete, Answer, Decision, SolverBudget};
use crate::tri::{Symbol, TriVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("domain size q must be at least 2, got {0}")]
    DomainTooSmall(usize),
    #[error("matrix has no rows")]
    Empty,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("row {row} has length {found}, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("row {row}, coordinate {coord}: value {value} is not below q = {q}")]
    ValueOutOfDomain { row: usize, coord: usize, value: usize, q: usize },
    #[error("row {row}, block {block} is not a valid {encoding:?} block")]
    MalformedBlock { row: usize, block: usize, encoding: Encoding },
    #[error("encoded row {row} has width {found}, expected a multiple of q = {q}")]
    BlockWidth { row: usize, found: usize, q: usize },
    #[error("cluster budget k must be at least 1")]
    ZeroBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Encoding {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Hamming,
    Manhattan,
}

impl Metric {
    pub fn encoding(self) -> Encoding {
        match self {
            Metric::Hamming => Encoding::Alpha,
            Metric::Manhattan => Encoding::Beta,
        }
    }

    /// Encoded distance bound for a q-ary bound `r`.
    pub fn encoded_radius(self, r: usize) -> usize {
        match self {
            Metric::Hamming => 2 * r,
            Metric::Manhattan => r,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::Manhattan => "manhattan",
        }
    }

    pub fn distance(self, a: &[Option<usize>], b: &[Option<usize>]) -> usize {
        match self {
            Metric::Hamming => hamming_q(a, b),
            Metric::Manhattan => manhattan_q(a, b),
        }
    }
}

impl core::str::FromStr for Metric {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hamming" => Ok(Metric::Hamming),
            "manhattan" => Ok(Metric::Manhattan),
            _ => Err(alloc::format!("unknown metric `{s}` (expected hamming or manhattan)")),
        }
    }
}

/// A q-ary entry: a value in `0..q` or MISSING (`None`).
pub type Entry = Option<usize>;

/// Rows over `{0, …, q−1, MISSING}` of a common length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryMatrix {
    q: usize,
    dim: usize,
    rows: Vec<Vec<Entry>>,
}

impl QaryMatrix {
    pub fn new(q: usize, rows: Vec<Vec<Entry>>) -> Result<Self, EncodeError> {
        if q < 2 {
            return Err(EncodeError::DomainTooSmall(q));
        }
        let dim = rows.first().ok_or(EncodeError::Empty)?.len();
        if dim == 0 {
            return Err(EncodeError::ZeroDimension);
        }
        for (row, v) in rows.iter().enumerate() {
            if v.len() != dim {
                return Err(EncodeError::RowLength { row, expected: dim, found: v.len() });
            }
            if let Some((coord, value)) = v.iter().enumerate().find_map(|(c, e)| e.filter(|&x| x >= q).map(|x| (c, x))) {
                return Err(EncodeError::ValueOutOfDomain { row, coord, value, q });
            }
        }
        Ok(QaryMatrix { q, dim, rows })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    /// Tri-state mask of MISSING positions (known entries shown as 0).
    fn missing_mask(&self) -> Vec<TriVector> {
        self.rows
            .iter()
            .map(|v| {
                let s: Vec<Symbol> = v.iter().map(|e| if e.is_some() { Symbol::Zero } else { Symbol::Missing }).collect();
                TriVector::from_symbols(&s)
            })
            .collect()
    }

    /// Minimum cover of the MISSING entries.
    pub fn certificate(&self) -> CoverCertificate {
        covering_certificate(&self.missing_mask())
    }
}

/// Number of coordinates where both entries are known and differ.
pub fn hamming_q(a: &[Entry], b: &[Entry]) -> usize {
    a.iter().zip(b).filter(|(x, y)| matches!((x, y), (Some(p), Some(q)) if p != q)).count()
}

/// Sum of `|a[i] − b[i]|` over coordinates where both are known.
pub fn manhattan_q(a: &[Entry], b: &[Entry]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| match (x, y) {
            (Some(p), Some(q)) => p.abs_diff(*q),
            _ => 0,
        })
        .sum()
}

/// A Boolean matrix whose rows are concatenations of width-`q` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrix {
    q: usize,
    dim: usize,
    encoding: Encoding,
    rows: Vec<TriVector>,
}

impl BlockMatrix {
    /// Wraps encoded rows, checking that every block is valid.
    pub fn new(q: usize, encoding: Encoding, rows: Vec<TriVector>) -> Result<Self, EncodeError> {
        if q < 2 {
            return Err(EncodeError::DomainTooSmall(q));
        }
        let width = rows.first().ok_or(EncodeError::Empty)?.dim();
        let bm = BlockMatrix { q, dim: width / q, encoding, rows };
        for (row, v) in bm.rows.iter().enumerate() {
            if v.dim() != width || width % q != 0 || width == 0 {
                return Err(EncodeError::BlockWidth { row, found: v.dim(), q });
            }
        }
        bm.decode()?;
        Ok(bm)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Number of q-ary coordinates (blocks).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn encoding(&self) -> Encoding {
        self.encoding
    }

    pub fn rows(&self) -> &[TriVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<TriVector> {
        self.rows
    }

    /// Exact inverse of the encoder.
    pub fn decode(&self) -> Result<QaryMatrix, EncodeError> {
        let mut out = Vec::with_capacity(self.rows.len());
        for (row, v) in self.rows.iter().enumerate() {
            out.push(decode_row(v, self.q, self.encoding).map_err(|block| EncodeError::MalformedBlock {
                row,
                block,
                encoding: self.encoding,
            })?);
        }
        QaryMatrix::new(self.q, out)
    }
}

fn block(value: usize, q: usize, encoding: Encoding) -> impl Iterator<Item = Symbol> {
    (0..q).map(move |p| {
        let one = match encoding {
            Encoding::Alpha => p == q - 1 - value,
            Encoding::Beta => p >= q - value,
        };
        Symbol::from_bit(one)
    })
}

/// Encodes one q-ary row.
pub fn encode_row(row: &[Entry], q: usize, encoding: Encoding) -> TriVector {
    let mut symbols = Vec::with_capacity(row.len() * q);
    for e in row {
        match e {
            Some(v) => symbols.extend(block(*v, q, encoding)),
            None => symbols.extend(core::iter::repeat_n(Symbol::Missing, q)),
        }
    }
    TriVector::from_symbols(&symbols)
}

/// Decodes one encoded row; `Err(block)` names the first invalid block.
pub fn decode_row(v: &TriVector, q: usize, encoding: Encoding) -> Result<Vec<Entry>, usize> {
    let blocks = v.dim() / q;
    (0..blocks)
        .map(|b| {
            let syms: Vec<Symbol> = (0..q).map(|p| v.get(b * q + p)).collect();
            if syms.iter().all(|&s| s == Symbol::Missing) {
                return Ok(None);
            }
            (0..q).find(|&value| block(value, q, encoding).eq(syms.iter().copied())).map(Some).ok_or(b)
        })
        .collect()
}

pub fn encode(m: &QaryMatrix, encoding: Encoding) -> BlockMatrix {
    BlockMatrix {
        q: m.q,
        dim: m.dim,
        encoding,
        rows: m.rows.iter().map(|r| encode_row(r, m.q, encoding)).collect(),
    }
}

pub fn encode_alpha(m: &QaryMatrix) -> BlockMatrix {
    encode(m, Encoding::Alpha)
}

pub fn encode_beta(m: &QaryMatrix) -> BlockMatrix {
    encode(m, Encoding::Beta)
}

pub fn decode(bm: &BlockMatrix) -> Result<QaryMatrix, EncodeError> {
    bm.decode()
}

/// Cover of an encoded matrix derived from the q-ary cover: each column
/// becomes its whole block.
pub fn block_certificate(cert: &CoverCertificate, q: usize) -> CoverCertificate {
    CoverCertificate {
        rows: cert.rows.clone(),
        cols: cert.cols.iter().flat_map(|&c| c * q..(c + 1) * q).collect(),
    }
}

/// A q-ary clustering-completion instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryInstance {
    pub matrix: QaryMatrix,
    pub k: usize,
    pub r: usize,
    pub variant: Variant,
    pub metric: Metric,
}

impl QaryInstance {
    pub fn new(matrix: QaryMatrix, k: usize, r: usize, variant: Variant, metric: Metric) -> Result<Self, EncodeError> {
        if k == 0 {
            return Err(EncodeError::ZeroBudget);
        }
        Ok(QaryInstance { matrix, k, r, variant, metric })
    }

    /// The Boolean instance over the encoded matrix, with the encoded bound.
    pub fn encoded(&self) -> Instance {
        let rows = encode(&self.matrix, self.metric.encoding()).into_rows();
        Instance::new(rows, self.k, self.metric.encoded_radius(self.r), self.variant)
            .expect("encoded q-ary matrices are non-empty and uniform")
    }
}

fn qary_ball(center: &[usize], q: usize, r: usize, metric: Metric, out: &mut BTreeSet<Vec<usize>>, cap: usize) -> bool {
    fn rec(v: &mut Vec<usize>, from: usize, left: usize, q: usize, metric: Metric, out: &mut BTreeSet<Vec<usize>>, cap: usize) -> bool {
        out.insert(v.clone());
        if out.len() > cap {
            return false;
        }
        if left == 0 {
            return true;
        }
        for i in from..v.len() {
            let old = v[i];
            for value in (0..q).filter(|&x| x != old) {
                let cost = match metric {
                    Metric::Hamming => 1,
                    Metric::Manhattan => old.abs_diff(value),
                };
                if cost > left {
                    continue;
                }
                v[i] = value;
                let ok = rec(v, i + 1, left - cost, q, metric, out, cap);
                v[i] = old;
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    rec(&mut center.to_vec(), 0, r, q, metric, out, cap)
}

/// Solves a q-ary instance by enumerating q-ary completions and solving the
/// encoded complete matrix. Any centers range over encoded q-ary vectors.
/// The witness is a solution of [`QaryInstance::encoded`].
pub fn solve_qary(inst: &QaryInstance, budget: &SolverBudget) -> Decision {
    let m = &inst.matrix;
    let (q, k) = (m.q(), inst.k);
    let radius = inst.metric.encoded_radius(inst.r);
    let encoding = inst.metric.encoding();
    let slots: Vec<(usize, usize)> = m
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(i, v)| v.iter().enumerate().filter(|(_, e)| e.is_none()).map(move |(j, _)| (i, j)))
        .collect();
    let total = (q as u128).checked_pow(slots.len() as u32).unwrap_or(u128::MAX);
    if total > u128::from(budget.max_completions) {
        return Decision::exhausted();
    }
    let n = m.rows().len();
    if inst.variant == Variant::In && binomial(n, k.min(n)) > u128::from(budget.max_center_tuples) {
        return Decision::exhausted();
    }
    let cap = usize::try_from(budget.max_center_tuples).unwrap_or(usize::MAX);
    for index in 0..total {
        let mut rows: Vec<Vec<usize>> = m.rows().iter().map(|v| v.iter().map(|e| e.unwrap_or(0)).collect()).collect();
        let mut rest = index;
        for &(i, j) in slots.iter().rev() {
            rows[i][j] = (rest % q as u128) as usize;
            rest /= q as u128;
        }
        let encoded: Vec<TriVector> =
            rows.iter().map(|v| encode_row(&v.iter().map(|&x| Some(x)).collect::<Vec<_>>(), q, encoding)).collect();
        let d = match inst.variant {
            Variant::In => solve_in_complete(&encoded, k, radius),
            Variant::Diam => solve_diam_complete(&encoded, k, radius),
            Variant::Any => {
                let mut pool = BTreeSet::new();
                for v in &rows {
                    if !qary_ball(v, q, inst.r, inst.metric, &mut pool, cap) {
                        return Decision::exhausted();
                    }
                }
                let pool = pool
                    .into_iter()
                    .map(|c| encode_row(&c.into_iter().map(Some).collect::<Vec<_>>(), q, encoding))
                    .collect();
                solve_any_with_pool(&encoded, k, radius, pool)
            }
        };
        if d.answer == Answer::Yes {
            return d;
        }
    }
    Decision::no()
}
