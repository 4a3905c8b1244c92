use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition};

/// A filling of the skew diagram `outer/inner` by positive integers that
/// weakly increase along rows and strictly increase down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    entries: BTreeMap<Cell, usize>,
}

fn skew_cells<'a>(outer: &'a Partition, inner: &'a Partition) -> impl Iterator<Item = Cell> + 'a {
    outer.cells().filter(move |&c| !inner.contains_cell(c))
}

impl SkewTableau {
    pub fn new(outer: Partition, inner: Partition, entries: BTreeMap<Cell, usize>) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::hypothesis(format!("{inner:?} is not contained in {outer:?}")));
        }
        let cells: Vec<Cell> = skew_cells(&outer, &inner).collect();
        if cells.len() != entries.len() || cells.iter().any(|c| !entries.contains_key(c)) {
            return Err(Error::parse(format!("entries do not cover {outer:?}/{inner:?} exactly")));
        }
        if entries.values().any(|&x| x == 0) {
            return Err(Error::parse("entries must be positive"));
        }
        let t = SkewTableau { outer, inner, entries };
        if !t.is_semistandard() {
            return Err(Error::parse(format!("filling of {:?}/{:?} is not semistandard", t.outer, t.inner)));
        }
        Ok(t)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.entries.get(&cell).copied()
    }

    pub fn entries(&self) -> &BTreeMap<Cell, usize> {
        &self.entries
    }

    pub fn is_semistandard(&self) -> bool {
        self.entries.iter().all(|(&c, &x)| {
            let left = self.entries.get(&Cell::new(c.row, c.col.wrapping_sub(1)));
            let up = self.entries.get(&Cell::new(c.row.wrapping_sub(1), c.col));
            left.is_none_or(|&l| l <= x) && up.is_none_or(|&u| u < x)
        })
    }

    /// Rows top to bottom, each read right to left.
    pub fn reverse_reading_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.entries.len());
        for row in 1..=self.outer.len() {
            word.extend(self.entries.range(Cell::new(row, 0)..Cell::new(row + 1, 0)).rev().map(|(_, &x)| x));
        }
        word
    }

    /// Number of entries equal to `1, 2, ..` up to the largest entry.
    pub fn content(&self) -> Vec<usize> {
        let top = self.entries.values().copied().max().unwrap_or(0);
        let mut counts = vec![0; top];
        for &x in self.entries.values() {
            counts[x - 1] += 1;
        }
        counts
    }

    /// Semistandard with a lattice reverse reading word.
    pub fn is_lr_tableau(&self) -> bool {
        self.is_semistandard() && is_lattice_word(&self.reverse_reading_word())
    }
}

/// Every prefix has at least as many `k`s as `k + 1`s, for every `k`.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if seen.len() < x {
            seen.resize(x, 0);
        }
        seen[x - 1] += 1;
        if x > 1 && seen[x - 1] > seen[x - 2] {
            return false;
        }
    }
    true
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.outer.len())
            .map(|r| {
                (1..=self.outer.part(r - 1))
                    .map(|c| self.entry(Cell::new(r, c)).map_or(".".to_string(), |x| x.to_string()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// The tableau `T_{λα}`: the `i`-th cell from the top of every column of
/// `λ/α` holds `i`. Returns it together with its content `β`, for which
/// `c^λ_{αβ} ≥ 1`.
pub fn t_lambda_alpha(lambda: &Partition, alpha: &Partition) -> Result<(SkewTableau, Partition)> {
    if !lambda.contains(alpha) {
        return Err(Error::hypothesis(format!("{alpha:?} is not contained in {lambda:?}")));
    }
    let (outer, inner) = (lambda.conjugate(), alpha.conjugate());
    let mut entries = BTreeMap::new();
    for col in 1..=lambda.largest_part() {
        let start = inner.part(col - 1);
        for row in start + 1..=outer.part(col - 1) {
            entries.insert(Cell::new(row, col), row - start);
        }
    }
    let t = SkewTableau::new(lambda.clone(), alpha.clone(), entries)?;
    // Column heights of the skew shape, sorted, give a partition.
    let beta = Partition::new(t.content())?;
    Ok((t, beta))
}
