//! Text form of partitions and compositions.
//!
//! Grammar: an optional pair of parentheses around a comma separated list of
//! parts, where each part is `k` or `k^m` (`m` copies of `k`). `()` and the
//! empty string denote the empty partition. Whitespace is ignored.

use crate::error::{Error, Result};

pub(crate) fn parse_parts(input: &str) -> Result<Vec<usize>> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = match compact.strip_prefix('(') {
        Some(rest) => rest
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(format!("unbalanced parentheses in `{input}`")))?,
        None => compact.as_str(),
    };
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for token in inner.split(',') {
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b, e),
            None => (token, "1"),
        };
        let base: usize = base
            .parse()
            .map_err(|_| Error::parse(format!("bad part `{token}` in `{input}`")))?;
        let exp: usize = exp
            .parse()
            .map_err(|_| Error::parse(format!("bad exponent in `{token}` of `{input}`")))?;
        if base == 0 {
            return Err(Error::parse(format!("zero part in `{input}`")));
        }
        parts.extend(std::iter::repeat_n(base, exp));
    }
    Ok(parts)
}

pub(crate) fn format_parts(runs: &[(usize, usize)]) -> String {
    if runs.is_empty() {
        return "()".to_string();
    }
    let mut pieces = Vec::new();
    for &(size, count) in runs {
        if count >= 3 {
            pieces.push(format!("{size}^{count}"));
        } else {
            for _ in 0..count {
                pieces.push(size.to_string());
            }
        }
    }
    pieces.join(",")
}
