use super::require_avoids;
use crate::error::Result;
use crate::perm::Perm;

/// The recursive bijection on `Av(231)` carrying `foze″` to `inv` while
/// fixing the first entry and the left-to-right maxima.
///
/// With `p = (1 ⊖ α) ⊕ β`:
/// * `φ(λ) = λ`
/// * `φ(1 ⊕ β) = 1 ⊕ φ(β)`
/// * otherwise, writing `φ(α) = (1 ⊖ γ) ⊕ δ`,
///   `φ(p) = (1 ⊖ ((1 ⊖ δ) ⊕ γ)) ⊕ φ(β)`.
pub fn phi(p: &Perm) -> Result<Perm> {
    require_avoids(p, &[2, 3, 1])?;
    Ok(phi_unchecked(p))
}

/// Inverse of [`phi`]: undoes the `γ`/`δ` exchange and recurses.
pub fn phi_inverse(p: &Perm) -> Result<Perm> {
    require_avoids(p, &[2, 3, 1])?;
    Ok(phi_inverse_unchecked(p))
}

fn split(p: &Perm) -> (Perm, Perm) {
    p.decompose_231().expect("non-empty 231-avoider decomposes")
}

fn one() -> Perm {
    Perm::identity(1)
}

pub(crate) fn phi_unchecked(p: &Perm) -> Perm {
    if p.is_empty() {
        return Perm::empty();
    }
    let (alpha, beta) = split(p);
    let tail = phi_unchecked(&beta);
    if alpha.is_empty() {
        return one().direct_sum(&tail);
    }
    let (gamma, delta) = split(&phi_unchecked(&alpha));
    let inner = one().skew_sum(&delta).direct_sum(&gamma);
    one().skew_sum(&inner).direct_sum(&tail)
}

pub(crate) fn phi_inverse_unchecked(p: &Perm) -> Perm {
    if p.is_empty() {
        return Perm::empty();
    }
    let (head, rest) = split(p);
    let beta = phi_inverse_unchecked(&rest);
    if head.is_empty() {
        return one().direct_sum(&beta);
    }
    // head = (1 ⊖ δ) ⊕ γ
    let (delta, gamma) = split(&head);
    let image_of_alpha = one().skew_sum(&gamma).direct_sum(&delta);
    let alpha = phi_inverse_unchecked(&image_of_alpha);
    one().skew_sum(&alpha).direct_sum(&beta)
}
