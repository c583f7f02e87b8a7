//! Integer partitions: enumeration, multiplicities, `z_μ`, Ferrers cells.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::combinat::factorial;
use crate::Integer;

/// A weakly decreasing finite sequence of positive integers.
///
/// The empty sequence is the unique partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Sparse view `part -> count`, ascending by part.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_λ = ∏ i^{m_i} m_i!`
    pub fn zeta(&self) -> Integer {
        self.multiplicities()
            .into_iter()
            .fold(Integer::one(), |acc, (i, m)| {
                acc * Integer::from(i).pow(m as u32) * factorial(m)
            })
    }

    /// `∏ λ_i`
    pub fn part_product(&self) -> Integer {
        self.parts.iter().map(|&p| Integer::from(p)).product()
    }

    /// `λ ∪ {i}`
    pub fn add_part(&self, i: usize) -> Self {
        assert!(i >= 1, "parts are positive");
        let pos = self.parts.partition_point(|&p| p >= i);
        let mut parts = self.parts.clone();
        parts.insert(pos, i);
        Self { parts }
    }

    /// Ferrers diagram cells `(row, col)`, 1-based, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (1..=len).map(move |col| (row + 1, col)))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n`, reverse-lexicographic: `(n)` first, `(1^n)` last.
pub fn enumerate(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, None, &mut current, &mut out);
    out
}

/// Partitions of `n` with exactly `len` parts, same order as [`enumerate`].
pub fn enumerate_with_length(n: usize, len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if len > n || (len == 0 && n > 0) {
        return out;
    }
    let mut current = Vec::new();
    fill(n, n, Some(len), &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    len: Option<usize>,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        if len.is_none_or(|l| l == current.len()) {
            out.push(Partition {
                parts: current.clone(),
            });
        }
        return;
    }
    if let Some(l) = len {
        let slots = l.saturating_sub(current.len());
        // every remaining slot takes at least 1 and at most max_part
        if slots == 0 || remaining < slots || remaining > slots * max_part {
            return;
        }
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, len, current, out);
        current.pop();
    }
}
