//! Exponent vectors of monomials and the degree-lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial, one non-negative entry per generator.
///
/// The derived ordering is degree-lexicographic: total degree first, ties
/// broken lexicographically on the entries, so generator 1 beats generator 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    entries: Vec<u32>,
}

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex { entries }
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex { entries: vec![0; n] }
    }

    /// Exponent vector of a single generator (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut entries = vec![0; n];
        entries[i] = 1;
        MultiIndex { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Total degree `|alpha|`.
    pub fn degree(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Componentwise sum; errors on length mismatch.
    pub fn add(&self, other: &MultiIndex) -> Result<MultiIndex> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "multi-index lengths differ: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(MultiIndex {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Degree-lexicographic comparison; errors on length mismatch.
    pub fn deglex_compare(&self, other: &MultiIndex) -> Result<Ordering> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "multi-index lengths differ: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self.cmp(other))
    }

    /// The monomial as a word of 0-based generator indices in normal order,
    /// e.g. `(2,1)` becomes `[0, 0, 1]`.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.entries.iter().enumerate() {
            for _ in 0..e {
                w.push(i);
            }
        }
        w
    }

    /// Rebuilds an exponent vector from a sorted word of generator indices.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut entries = vec![0u32; n];
        for &i in word {
            entries[i] += 1;
        }
        MultiIndex { entries }
    }

    /// Parses the textual form `"(a1,a2,...,an)"`.
    pub fn parse(s: &str) -> Result<MultiIndex> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|u| u.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("multi-index {s:?} must look like (a1,...,an)")))?;
        if inner.trim().is_empty() {
            return Err(Error::Parse(format!("empty multi-index {s:?}")));
        }
        let entries = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad exponent {:?} in {s:?}: {e}", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultiIndex { entries })
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All exponent vectors of length `n` with total degree at most `max_degree`,
/// in ascending deglex order.
pub fn multi_indices_up_to(n: usize, max_degree: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut current = vec![0u32; n];
        fill(n, 0, d, &mut current, &mut out);
    }
    out
}

fn fill(n: usize, pos: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    if pos + 1 == n {
        current[pos] = remaining;
        out.push(MultiIndex::new(current.clone()));
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        fill(n, pos + 1, remaining - v, current, out);
    }
    current[pos] = 0;
}
