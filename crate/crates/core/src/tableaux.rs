//! Standard Young tableaux and the major index.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition};

/// A standard Young tableau, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Checks that `rows` has weakly decreasing lengths, strictly increasing
    /// rows and columns, and entries `1..=n` each once.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::parse(format!("tableau rows: {e}")))?;
        let n = shape.weight();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::parse(format!("entry {x} is out of range or repeated")));
                }
                if j > 0 && row[j - 1] >= x {
                    return Err(Error::parse(format!("row {} does not increase", i + 1)));
                }
                if i > 0 && rows[i - 1][j] >= x {
                    return Err(Error::parse(format!("column {} does not increase", j + 1)));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.col.checked_sub(1)?).copied()
    }

    /// Row (0-based) of each entry `1..=n`, in order.
    fn row_word(&self) -> Vec<usize> {
        let mut word = vec![0; self.shape.weight()];
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                word[x - 1] = i;
            }
        }
        word
    }

    /// The descents `i`: `i + 1` lies in a lower row than `i`.
    pub fn descents(&self) -> Vec<usize> {
        let word = self.row_word();
        (1..word.len()).filter(|&i| word[i] > word[i - 1]).collect()
    }

    pub fn major_index(&self) -> usize {
        major_index_of_word(&self.row_word())
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

pub fn major_index(t: &StandardTableau) -> usize {
    t.major_index()
}

fn major_index_of_word(word: &[usize]) -> usize {
    (1..word.len()).filter(|&i| word[i] > word[i - 1]).sum()
}

/// Depth-first walk over row words (the row receiving each of `1..=n`),
/// smallest row first, so cell sequences come out in lexicographic order.
struct Walker {
    shape: Vec<usize>,
    n: usize,
    filled: Vec<usize>,
    word: Vec<usize>,
    started: bool,
}

impl Walker {
    fn new(shape: &Partition) -> Self {
        Walker {
            shape: shape.parts().to_vec(),
            n: shape.weight(),
            filled: vec![0; shape.len()],
            word: Vec::with_capacity(shape.weight()),
            started: false,
        }
    }

    fn fits(&self, r: usize) -> bool {
        self.filled[r] < self.shape[r] && (r == 0 || self.filled[r - 1] > self.filled[r])
    }

    fn place(&mut self, r: usize) {
        self.filled[r] += 1;
        self.word.push(r);
    }

    fn extend(&mut self) {
        while self.word.len() < self.n {
            let r = (0..self.shape.len()).find(|&r| self.fits(r)).expect("a corner is always free");
            self.place(r);
        }
    }

    /// Moves to the next row word; `false` once exhausted.
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.extend();
            return true;
        }
        while let Some(r) = self.word.pop() {
            self.filled[r] -= 1;
            if let Some(next) = (r + 1..self.shape.len()).find(|&s| self.fits(s)) {
                self.place(next);
                self.extend();
                return true;
            }
        }
        false
    }
}

/// Streams the standard tableaux of a shape in lexicographic order of the
/// cells receiving `1, 2, .., n`.
pub struct SytIter {
    walker: Walker,
    done: bool,
}

impl Iterator for SytIter {
    type Item = StandardTableau;

    fn next(&mut self) -> Option<StandardTableau> {
        if self.done || !self.walker.advance() {
            self.done = true;
            return None;
        }
        let shape = Partition::new(self.walker.shape.clone()).expect("shape");
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
        for (k, &r) in self.walker.word.iter().enumerate() {
            rows[r].push(k + 1);
        }
        Some(StandardTableau { shape, rows })
    }
}

pub fn enumerate_syt(lambda: &Partition) -> SytIter {
    SytIter { walker: Walker::new(lambda), done: false }
}

fn modulus(lambda: &Partition) -> usize {
    lambda.weight().max(1)
}

/// Counts of standard tableaux of shape `λ` by major index mod `n`
/// (mod 1 for the empty shape).
pub fn maj_counts_brute(lambda: &Partition) -> Vec<u64> {
    let m = modulus(lambda);
    let mut counts = vec![0u64; m];
    let mut walker = Walker::new(lambda);
    while walker.advance() {
        counts[major_index_of_word(&walker.word) % m] += 1;
    }
    counts
}

/// `a_λ^r` by enumeration; `r` is reduced mod `n`.
pub fn maj_count_brute(lambda: &Partition, r: i64) -> u64 {
    let m = modulus(lambda);
    maj_counts_brute(lambda)[r.rem_euclid(m as i64) as usize]
}

/// Corners of `λ`: the cells that can hold `n`. Tableaux are partitioned
/// by the corner holding `n`, which lets counts be computed per shard.
pub fn shards(lambda: &Partition) -> Vec<Cell> {
    let parts = lambda.parts();
    (0..parts.len())
        .filter(|&i| i + 1 == parts.len() || parts[i + 1] < parts[i])
        .map(|i| Cell::new(i + 1, parts[i]))
        .collect()
}

/// Major-index counts mod `n` over the tableaux with `n` in `corner`.
pub fn maj_counts_shard(lambda: &Partition, corner: Cell) -> Result<Vec<u64>> {
    if !shards(lambda).contains(&corner) {
        return Err(Error::hypothesis(format!("({}, {}) is not a corner of {lambda}", corner.row, corner.col)));
    }
    let m = modulus(lambda);
    let mut parts = lambda.parts().to_vec();
    parts[corner.row - 1] -= 1;
    let rest = Partition::new(parts)?;
    let last_row = corner.row - 1;
    let n = lambda.weight();
    let mut counts = vec![0u64; m];
    let mut walker = Walker::new(&rest);
    while walker.advance() {
        let mut maj = major_index_of_word(&walker.word);
        if walker.word.last().is_some_and(|&r| last_row > r) {
            maj += n - 1;
        }
        counts[maj % m] += 1;
    }
    Ok(counts)
}
