//! Tri-state vectors over `{0, 1, MISSING}` stored as a pair of bit-masks.

use alloc::vec::Vec;
use core::fmt;

use crate::error::DimensionMismatch;

const WORD: usize = 64;

/// One entry of a tri-state vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    One,
    Missing,
}

impl Symbol {
    pub fn from_bit(bit: bool) -> Self {
        if bit {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    /// The file-format character: `0`, `1` or `?`.
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Missing => '?',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '0' => Some(Symbol::Zero),
            '1' => Some(Symbol::One),
            '?' => Some(Symbol::Missing),
            _ => None,
        }
    }
}

/// A vector in `{0, 1, MISSING}^d`.
///
/// Coordinates are 0-based in the API. Equality is tri-state equality, so a
/// MISSING entry equals another MISSING entry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriVector {
    dim: usize,
    known: Vec<u64>,
    ones: Vec<u64>,
}

fn words(dim: usize) -> usize {
    dim.div_ceil(WORD)
}

impl TriVector {
    /// The all-MISSING vector.
    pub fn missing(dim: usize) -> Self {
        TriVector {
            dim,
            known: alloc::vec![0; words(dim)],
            ones: alloc::vec![0; words(dim)],
        }
    }

    /// The all-zero vector.
    pub fn zeros(dim: usize) -> Self {
        let mut v = Self::missing(dim);
        for i in 0..dim {
            v.known[i / WORD] |= 1 << (i % WORD);
        }
        v
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Self {
        let mut v = Self::missing(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::missing(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, Symbol::from_bit(b));
        }
        v
    }

    /// Parses `0`, `1`, `?` characters; `None` on any other character.
    pub fn parse(text: &str) -> Option<Self> {
        let symbols: Option<Vec<Symbol>> = text.chars().map(Symbol::from_char).collect();
        symbols.map(|s| Self::from_symbols(&s))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> Symbol {
        assert!(i < self.dim, "coordinate {i} out of range for dimension {}", self.dim);
        let (w, b) = (i / WORD, 1u64 << (i % WORD));
        if self.known[w] & b == 0 {
            Symbol::Missing
        } else if self.ones[w] & b != 0 {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn set(&mut self, i: usize, s: Symbol) {
        assert!(i < self.dim, "coordinate {i} out of range for dimension {}", self.dim);
        let (w, b) = (i / WORD, 1u64 << (i % WORD));
        match s {
            Symbol::Missing => {
                self.known[w] &= !b;
                self.ones[w] &= !b;
            }
            Symbol::Zero => {
                self.known[w] |= b;
                self.ones[w] &= !b;
            }
            Symbol::One => {
                self.known[w] |= b;
                self.ones[w] |= b;
            }
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.dim).map(|i| self.get(i))
    }

    pub fn is_complete(&self) -> bool {
        self.missing_count() == 0
    }

    pub fn missing_count(&self) -> usize {
        self.dim - self.known.iter().map(|w| w.count_ones() as usize).sum::<usize>()
    }

    /// Coordinates holding MISSING, ascending.
    pub fn missing_coords(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.get(i) == Symbol::Missing).collect()
    }

    /// Number of known coordinates where the two vectors hold opposite bits.
    ///
    /// # Panics
    /// On dimension mismatch; see [`hamming_delta`] for the checked form.
    pub fn delta(&self, other: &TriVector) -> usize {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.known
            .iter()
            .zip(&other.known)
            .zip(self.ones.iter().zip(&other.ones))
            .map(|((ka, kb), (oa, ob))| (ka & kb & (oa ^ ob)).count_ones() as usize)
            .sum()
    }

    /// The coordinates counted by [`TriVector::delta`], ascending.
    pub fn delta_coords(&self, other: &TriVector) -> Vec<usize> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = Vec::new();
        for (w, (((ka, kb), oa), ob)) in self
            .known
            .iter()
            .zip(&other.known)
            .zip(&self.ones)
            .zip(&other.ones)
            .enumerate()
        {
            let mut diff = ka & kb & (oa ^ ob);
            while diff != 0 {
                let b = diff.trailing_zeros() as usize;
                out.push(w * WORD + b);
                diff &= diff - 1;
            }
        }
        out
    }

    /// Copy with every MISSING entry replaced by 0.
    pub fn zero_filled(&self) -> TriVector {
        let mut v = self.clone();
        for (i, k) in v.known.iter_mut().enumerate() {
            *k = if (i + 1) * WORD <= self.dim {
                u64::MAX
            } else {
                (1u64 << (self.dim - i * WORD)) - 1
            };
        }
        v
    }

    /// Restriction to the given coordinates, in the given order.
    pub fn restrict(&self, coords: &[usize]) -> TriVector {
        let mut v = TriVector::missing(coords.len());
        for (j, &c) in coords.iter().enumerate() {
            v.set(j, self.get(c));
        }
        v
    }

    /// Whether `self` is a completion-compatible refinement of `other`:
    /// every known entry of `other` is known and equal in `self`.
    pub fn agrees_with(&self, other: &TriVector) -> bool {
        self.dim == other.dim
            && self
                .known
                .iter()
                .zip(&other.known)
                .zip(self.ones.iter().zip(&other.ones))
                .all(|((ks, ko), (os, oo))| ko & !ks == 0 && ko & (os ^ oo) == 0)
    }

    /// Completes each MISSING entry from `fill`, which must be complete.
    pub fn fill_missing_from(&self, fill: &TriVector) -> TriVector {
        assert_eq!(self.dim, fill.dim, "dimension mismatch");
        let mut v = self.clone();
        for w in 0..v.known.len() {
            let gap = !self.known[w] & fill.known[w];
            v.known[w] |= gap;
            v.ones[w] |= gap & fill.ones[w];
        }
        v
    }
}

impl fmt::Display for TriVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for TriVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriVector({self})")
    }
}

/// δ(a, b): known-vs-known disagreements.
pub fn hamming_delta(a: &TriVector, b: &TriVector) -> Result<usize, DimensionMismatch> {
    check_dims(a, b)?;
    Ok(a.delta(b))
}

/// Δ(a, b) as 0-based coordinates.
pub fn delta_set(a: &TriVector, b: &TriVector) -> Result<Vec<usize>, DimensionMismatch> {
    check_dims(a, b)?;
    Ok(a.delta_coords(b))
}

fn check_dims(a: &TriVector, b: &TriVector) -> Result<(), DimensionMismatch> {
    if a.dim() == b.dim() {
        Ok(())
    } else {
        Err(DimensionMismatch { left: a.dim(), right: b.dim() })
    }
}
