//! Littlewood–Richardson coefficients.
//!
//! An LR tableau of shape `λ/α` and content `β` is built letter by letter:
//! the cells holding `k` form a horizontal strip of size `β_k` added to the
//! shape holding `1..k-1`. The reverse reading word is a lattice word iff,
//! for every row `r`, the number of `k`s in rows `1..=r` is at most the
//! number of `k-1`s in rows `1..r`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::schur::vector::SchurVector;
use crate::shapes::Partition;

struct Search<'a> {
    content: &'a [usize],
    bound: Option<Vec<usize>>,
    rows: usize,
}

impl Search<'_> {
    fn padded(&self, p: &Partition) -> Vec<usize> {
        (0..self.rows).map(|r| p.part(r)).collect()
    }

    /// Visits every final shape; stops early once `visit` returns `true`.
    fn run(&self, inner: &Partition, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let start = self.padded(inner);
        let cum = vec![usize::MAX; self.rows];
        self.letter(0, &start, &cum, visit)
    }

    fn letter(&self, k: usize, prev: &[usize], cum_prev: &[usize], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == self.content.len() {
            return visit(prev);
        }
        let mut next = prev.to_vec();
        let mut cum = vec![0; self.rows];
        self.row(k, 0, self.content[k], 0, prev, cum_prev, &mut next, &mut cum, visit)
    }

    #[allow(clippy::too_many_arguments)]
    fn row(
        &self,
        k: usize,
        r: usize,
        remaining: usize,
        placed: usize,
        prev: &[usize],
        cum_prev: &[usize],
        next: &mut Vec<usize>,
        cum: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if r == self.rows || remaining == 0 {
            if remaining > 0 {
                return false;
            }
            for rr in r..self.rows {
                next[rr] = prev[rr];
                cum[rr] = placed;
            }
            if !self.can_finish(k, next) {
                return false;
            }
            let (next, cum) = (next.clone(), cum.clone());
            return self.letter(k + 1, &next, &cum, visit);
        }
        let mut max = remaining;
        if r > 0 {
            max = max.min(prev[r - 1] - prev[r]);
        }
        if let Some(bound) = &self.bound {
            max = max.min(bound[r].saturating_sub(prev[r]));
        }
        if k > 0 {
            let cap = if r == 0 { 0 } else { cum_prev[r - 1] };
            max = max.min(cap.saturating_sub(placed));
        }
        for a in (0..=max).rev() {
            next[r] = prev[r] + a;
            cum[r] = placed + a;
            if self.row(k, r + 1, remaining - a, placed + a, prev, cum_prev, next, cum, visit) {
                return true;
            }
        }
        next[r] = prev[r];
        false
    }

    /// With `L` letters still to place, no column of `λ/ν` may hold more
    /// than `L` cells, i.e. `λ_{r+L} ≤ ν_r` for every row `r`.
    fn can_finish(&self, k: usize, shape: &[usize]) -> bool {
        let Some(bound) = &self.bound else { return true };
        let left = self.content.len() - k - 1;
        (0..self.rows).all(|r| r + left >= self.rows || bound[r + left] <= shape[r])
    }
}

fn check_weights(lambda: &Partition, alpha: &Partition, beta: &Partition) -> Result<()> {
    if alpha.weight() + beta.weight() != lambda.weight() {
        return Err(Error::WeightMismatch {
            left: format!("{alpha:?} + {beta:?}"),
            left_weight: alpha.weight() + beta.weight(),
            right: format!("{lambda:?}"),
            right_weight: lambda.weight(),
        });
    }
    Ok(())
}

fn bounded_search<'a>(lambda: &Partition, beta: &'a Partition) -> Search<'a> {
    let rows = lambda.len();
    Search { content: beta.parts(), bound: Some((0..rows).map(|r| lambda.part(r)).collect()), rows }
}

/// `c^λ_{αβ}`, the coefficient of `s_λ` in `s_α s_β`.
pub fn lr_coefficient(lambda: &Partition, alpha: &Partition, beta: &Partition) -> Result<u64> {
    check_weights(lambda, alpha, beta)?;
    if !lambda.contains(alpha) || !lambda.contains(beta) {
        return Ok(0);
    }
    let mut count = 0u64;
    bounded_search(lambda, beta).run(alpha, &mut |_| {
        count += 1;
        false
    });
    Ok(count)
}

/// Whether `c^λ_{αβ} > 0`, stopping at the first LR tableau.
pub fn lr_positive(lambda: &Partition, alpha: &Partition, beta: &Partition) -> Result<bool> {
    check_weights(lambda, alpha, beta)?;
    if !lambda.contains(alpha) || !lambda.contains(beta) {
        return Ok(false);
    }
    Ok(bounded_search(lambda, beta).run(alpha, &mut |_| true))
}

/// `s_α s_β` in the Schur basis.
pub fn schur_product(alpha: &Partition, beta: &Partition) -> SchurVector {
    // Fewer letters to place means a shallower search.
    let (inner, content) = if beta.weight() <= alpha.weight() { (alpha, beta) } else { (beta, alpha) };
    let search = Search { content: content.parts(), bound: None, rows: inner.len() + content.len() };
    let mut counts: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    search.run(inner, &mut |shape| {
        *counts.entry(shape.to_vec()).or_insert(0) += 1;
        false
    });
    let mut out = SchurVector::zero(alpha.weight() + beta.weight());
    for (shape, c) in counts {
        out.add_term(&Partition::from_unsorted(shape), c).expect("weights add");
    }
    out
}
