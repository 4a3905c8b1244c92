use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::shapes::{factorial, Cell, Partition};

type Key = (Partition, Partition);

static MEMO: Lazy<RwLock<HashMap<Key, BigInt>>> = Lazy::new(|| RwLock::new(HashMap::new()));

/// Which part of the cycle type the Murnaghan–Nakayama recursion strips.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartChoice {
    Largest,
    Smallest,
}

fn check_weights(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.to_string(),
            left_weight: lambda.weight(),
            right: mu.to_string(),
            right_weight: mu.weight(),
        });
    }
    Ok(())
}

/// `χ_λ(w_μ)` by the Murnaghan–Nakayama rule, always stripping the largest
/// part of `μ`. Results are memoized process-wide.
pub fn chi(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    check_weights(lambda, mu)?;
    Ok(chi_memo(lambda, mu))
}

/// Like [`chi`], but uncached and with an explicit part choice.
pub fn chi_with(lambda: &Partition, mu: &Partition, choice: PartChoice) -> Result<BigInt> {
    check_weights(lambda, mu)?;
    let mut local = HashMap::new();
    Ok(chi_local(lambda, mu, choice, &mut local))
}

fn chi_memo(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = MEMO.read().get(&key) {
        return v.clone();
    }
    let t = mu.parts()[0];
    let rest = Partition::from_unsorted(mu.parts()[1..].to_vec());
    let mut total = BigInt::zero();
    for_each_rim(lambda, t, |height, remainder| {
        let sub = chi_memo(&remainder, &rest);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    });
    MEMO.write().insert(key, total.clone());
    total
}

fn chi_local(
    lambda: &Partition,
    mu: &Partition,
    choice: PartChoice,
    memo: &mut HashMap<Key, BigInt>,
) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let parts = mu.parts();
    let (t, rest) = match choice {
        PartChoice::Largest => (parts[0], parts[1..].to_vec()),
        PartChoice::Smallest => (parts[parts.len() - 1], parts[..parts.len() - 1].to_vec()),
    };
    let rest = Partition::from_unsorted(rest);
    let mut hooks = Vec::new();
    for_each_rim(lambda, t, |height, remainder| hooks.push((height, remainder)));
    let mut total = BigInt::zero();
    for (height, remainder) in hooks {
        let sub = chi_local(&remainder, &rest, choice, memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Calls `f(height, remainder)` for every rim hook of length `t`.
fn for_each_rim(lambda: &Partition, t: usize, mut f: impl FnMut(usize, Partition)) {
    let conj = lambda.conjugate();
    for (i, &row_len) in lambda.parts().iter().enumerate() {
        let row = i + 1;
        for col in 1..=row_len {
            let hook = row_len - col + conj.part(col - 1) - row + 1;
            if hook == t {
                let (height, remainder) = lambda.strip_rim(Cell::new(row, col));
                f(height, remainder);
            }
        }
    }
}

/// Degree of `χ_λ` by the hook-length formula.
pub fn dimension(lambda: &Partition) -> BigUint {
    let mut hooks = BigUint::one();
    for cell in lambda.cells() {
        hooks *= BigUint::from(lambda.hook_length(cell).expect("cell in diagram"));
    }
    factorial(lambda.weight()) / hooks
}

/// Snapshot of the memo table, sorted canonically.
pub fn cache_entries() -> Vec<(Partition, Partition, BigInt)> {
    let mut out: Vec<_> = MEMO
        .read()
        .iter()
        .map(|((l, m), v)| (l.clone(), m.clone(), v.clone()))
        .collect();
    out.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    out
}

/// Adds entries to the memo table, skipping any with inconsistent weights.
pub fn cache_extend(entries: impl IntoIterator<Item = (Partition, Partition, BigInt)>) -> usize {
    let mut memo = MEMO.write();
    let mut added = 0;
    for (l, m, v) in entries {
        if l.weight() == m.weight() && !l.is_empty() {
            memo.insert((l, m), v);
            added += 1;
        }
    }
    added
}

pub fn cache_len() -> usize {
    MEMO.read().len()
}

pub fn cache_clear() {
    MEMO.write().clear();
}
