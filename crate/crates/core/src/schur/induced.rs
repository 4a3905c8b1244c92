//! Characters induced from cyclic subgroups `⟨w_μ⟩`.

use crate::error::{Error, Result};
use crate::schur::vector::SchurVector;
use crate::shapes::{partitions_of, Partition};
use crate::spectrum::eig_multiplicities;

/// `ch Ind_{⟨w_μ⟩}^{S_n} ψ_r`, where `ψ_r(w_μ) = e^{2πir/m}` and `m` is the
/// order of `w_μ`. The coefficient of `s_λ` is the multiplicity of
/// `e^{2πir/m}` as an eigenvalue of `ρ_λ(w_μ)`.
pub fn cyclic_induced(mu: &Partition, r: i64) -> Result<SchurVector> {
    let mut out = SchurVector::zero(mu.weight());
    for lambda in partitions_of(mu.weight()) {
        let c = eig_multiplicities(&lambda, mu)?.count(r);
        out.add_term(&lambda, c as i64)?;
    }
    Ok(out)
}

/// `f_μ = ch Ind_{⟨w_μ⟩}^{S_n} 1`.
pub fn f_mu(mu: &Partition) -> Result<SchurVector> {
    cyclic_induced(mu, 0)
}

/// `g_μ = ch Ind_{⟨w_μ⟩}^{S_n} (-1)`; needs `w_μ` of even order.
pub fn g_mu(mu: &Partition) -> Result<SchurVector> {
    let m = mu.order();
    if !m.is_multiple_of(2) {
        return Err(Error::hypothesis(format!("w_{mu:?} has odd order {m}")));
    }
    cyclic_induced(mu, (m / 2) as i64)
}

/// The first `β ⊢ q` in canonical order with `β ⊆ λ` and `s_β` occurring
/// in `f_(q)`. Requires `|λ| ≥ q + 2` and `λ ≠ (1^n)`.
pub fn choose_beta(lambda: &Partition, q: usize) -> Result<Partition> {
    let n = lambda.weight();
    if q == 0 {
        return Err(Error::hypothesis("q must be positive"));
    }
    if n < q + 2 {
        return Err(Error::hypothesis(format!("|λ| = {n} is less than q + 2 = {}", q + 2)));
    }
    if *lambda == Partition::column(n) {
        return Err(Error::hypothesis(format!("λ = {lambda:?} is a single column")));
    }
    let f = f_mu(&Partition::row(q))?;
    partitions_of(q)
        .into_iter()
        .find(|beta| lambda.contains(beta) && f.coefficient(beta) > 0)
        .ok_or_else(|| Error::hypothesis(format!("no β ⊢ {q} inside {lambda:?} occurs in f_({q})")))
}
