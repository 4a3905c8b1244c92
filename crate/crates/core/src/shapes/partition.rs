use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::shapes::text;

/// A cell of a Young diagram, 1-based, English convention (row 1 on top).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// Result of removing the rim hook of a cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHook {
    pub cells: BTreeSet<Cell>,
    /// Number of rows the hook meets, minus one.
    pub height: usize,
    pub remainder: Partition,
}

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` is the canonical order used everywhere in reports: by weight first,
/// then reverse-lexicographic, so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-based, and zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest_part(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest_part();
        let mut conj = Vec::with_capacity(width);
        for col in 1..=width {
            conj.push(self.parts.iter().take_while(|&&p| p >= col).count());
        }
        Partition { parts: conj }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// `true` iff the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && self.part(cell.row - 1) >= cell.col
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains_cell(cell) {
            Ok(())
        } else {
            Err(Error::CellOutside {
                row: cell.row,
                col: cell.col,
                shape: self.to_string(),
            })
        }
    }

    /// Length of the column `col` (1-based).
    fn column_length(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        let arm = self.parts[cell.row - 1] - cell.col;
        let leg = self.column_length(cell.col) - cell.row;
        Ok(arm + leg + 1)
    }

    /// All cells of the diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// The rim hook hanging from `cell`: the border cells `(u, v)` with
    /// `u >= row`, `v >= col` whose south-east neighbour is not in the diagram.
    pub fn rim_hook(&self, cell: Cell) -> Result<RimHook> {
        self.check_cell(cell)?;
        let (height, remainder) = self.strip_rim(cell);
        let last = cell.row + height;
        let mut cells = BTreeSet::new();
        for u in cell.row..=last {
            let start = if u < last { self.part(u).max(cell.col) } else { cell.col };
            for v in start..=self.parts[u - 1] {
                cells.insert(Cell::new(u, v));
            }
        }
        Ok(RimHook {
            cells,
            height,
            remainder,
        })
    }

    /// Height and remainder of the rim hook at an in-diagram cell, without
    /// materialising the cell set. Rows `row..last` shrink to the length of the
    /// row below minus one, the last row shrinks to `col - 1`.
    pub(crate) fn strip_rim(&self, cell: Cell) -> (usize, Partition) {
        let last = self.column_length(cell.col);
        let mut parts = self.parts.clone();
        for u in cell.row..last {
            parts[u - 1] = self.parts[u] - 1;
        }
        parts[last - 1] = cell.col - 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        (last - cell.row, Partition { parts })
    }

    /// Order of a permutation of this cycle type (lcm of the parts).
    pub fn order(&self) -> usize {
        self.parts.iter().fold(1, |acc, &p| acc.lcm(&p))
    }

    /// Sign of a permutation of this cycle type, `(-1)^(n - len)`.
    pub fn sign(&self) -> i32 {
        if (self.weight() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even_class(&self) -> bool {
        self.sign() == 1
    }

    /// Distinct odd parts.
    pub fn is_dop(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1) && self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Cycle type of the `j`-th power of a permutation of this cycle type:
    /// a cycle of length `l` breaks into `gcd(j, l)` cycles of length `l / gcd(j, l)`.
    pub fn power_cycle_type(&self, j: usize) -> Partition {
        let mut parts = Vec::with_capacity(self.weight());
        for &l in &self.parts {
            let g = j.gcd(&l);
            parts.extend(std::iter::repeat_n(l / g, g));
        }
        Partition::from_unsorted(parts)
    }

    /// Multiplicities `(part size, count)` in decreasing part size.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((size, count)) if *size == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_mu = prod_i i^{m_i} m_i!`, the order of the centraliser.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (size, count) in self.multiplicities() {
            z *= BigUint::from(size).pow(count as u32);
            z *= factorial(count);
        }
        z
    }

    /// Size of the conjugacy class of this cycle type in `S_n`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.weight()) / self.z()
    }

    /// Frobenius coordinates `(a_1, .., a_d | b_1, .., b_d)`.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let conj = self.conjugate();
        let d = (1..=self.len()).take_while(|&i| self.parts[i - 1] >= i).count();
        let arms = (1..=d).map(|i| self.parts[i - 1] - i).collect();
        let legs = (1..=d).map(|i| conj.parts[i - 1] - i).collect();
        (arms, legs)
    }

    pub fn from_frobenius(arms: &[usize], legs: &[usize]) -> Result<Partition> {
        if arms.len() != legs.len()
            || !arms.windows(2).all(|w| w[0] > w[1])
            || !legs.windows(2).all(|w| w[0] > w[1])
        {
            return Err(Error::InvalidPartition(format!(
                "bad Frobenius coordinates ({arms:?} | {legs:?})"
            )));
        }
        let d = arms.len();
        let rows_below = legs.first().map_or(0, |&b| b + 1);
        let mut parts = vec![0; rows_below.max(d)];
        for i in 0..d {
            parts[i] = arms[i] + i + 1;
        }
        // Below the diagonal, row r (0-based, r >= d) has as many cells as
        // there are diagonal cells i whose leg reaches row r.
        for (r, part) in parts.iter_mut().enumerate().skip(d) {
            *part = legs.iter().enumerate().filter(|(i, &b)| i + b >= r).count();
        }
        Partition::new(parts)
    }

    /// The self-conjugate partition with Frobenius coordinates `(m_1..m_k | m_1..m_k)`
    /// where the parts of a distinct-odd-parts partition are `2 m_i + 1`.
    pub fn fold(&self) -> Result<Partition> {
        if !self.is_dop() {
            return Err(Error::hypothesis(format!(
                "{self} does not consist of distinct odd parts"
            )));
        }
        let half: Vec<usize> = self.parts.iter().map(|p| (p - 1) / 2).collect();
        Partition::from_frobenius(&half, &half)
    }

    /// Print as a comma separated list with `k^m` for runs of length ≥ 3.
    pub fn to_compact_string(&self) -> String {
        text::format_parts(&self.multiplicities())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact_string())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_compact_string())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(text::parse_parts(s)?)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_compact_string())
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

/// Streaming enumeration of the partitions of `n`, reverse-lexicographic.
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Find the rightmost part > 1, decrease it, and redistribute the tail
        // greedily with parts no larger than the decreased value.
        let mut parts = current.clone();
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.pop() {
            let cap = last - 1;
            let mut rest = ones + 1;
            parts.push(cap);
            while rest > 0 {
                let take = rest.min(cap);
                parts.push(take);
                rest -= take;
            }
            self.next = Some(parts);
        }
        Some(Partition { parts: current })
    }
}
