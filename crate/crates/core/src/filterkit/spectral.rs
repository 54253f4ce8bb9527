use crate::algebra::{factor_multiplicity, LaurentPoly, QSqrtQ, Rational};
use crate::error::{Error, Result};

use super::{polyphase_analysis, polyphase_synthesis, Filter};

/// `1 + z + … + z^(M−1)`; its roots are the aliasing frequencies `2πk/M`, `k ≠ 0`.
fn aliasing_factor(dilation: u32) -> LaurentPoly<Rational> {
    LaurentPoly::from_terms((0..dilation as i64).map(|k| (k, Rational::one())))
}

/// Order of the zero shared by every aliasing frequency, computed as the
/// multiplicity of `Φ_M(z)` in the tap z-transform.
pub fn accuracy(h: &Filter) -> Result<u32> {
    if h.is_zero() {
        return Err(Error::ZeroFilter);
    }
    Ok(factor_multiplicity(&h.z_transform(), &aliasing_factor(h.dilation()))?)
}

/// Order of the zero at frequency 0, i.e. the multiplicity of `(1 − z)`.
pub fn vanishing_moments(l: &Filter) -> Result<u32> {
    if l.is_zero() {
        return Err(Error::ZeroFilter);
    }
    let one_minus_z = LaurentPoly::from_terms([(0, Rational::one()), (1, -Rational::one())]);
    Ok(factor_multiplicity(&l.z_transform(), &one_minus_z)?)
}

/// Smallest `β ∈ {1, …, q}` with `H_{β−1}(z) = 1/√q`, if any. `β = 1` is the
/// interpolatory case.
pub fn has_unit_phase(h: &Filter) -> Option<usize> {
    let q = h.dilation();
    let target = LaurentPoly::constant(QSqrtQ::sqrt_multiple(Rational::new(1, q as i64), q));
    polyphase_analysis(h)
        .semantic()
        .iter()
        .position(|e| *e == target)
        .map(|i| i + 1)
}

/// Exact test of `Σ_ν F_ν(z) H_ν(z) = 1` with `F` in the synthesis and `H`
/// in the analysis convention.
pub fn is_biorthogonal(f: &Filter, h: &Filter) -> Result<bool> {
    if f.dilation() != h.dilation() {
        return Err(Error::DilationMismatch { left: f.dilation(), right: h.dilation() });
    }
    Ok(polyphase_product(f, h) == LaurentPoly::one())
}

/// `Σ_ν F_ν(z) H_ν(z)` on semantic coefficients.
pub(crate) fn polyphase_product(f: &Filter, h: &Filter) -> LaurentPoly<QSqrtQ> {
    let fs = polyphase_synthesis(f).semantic();
    let hs = polyphase_analysis(h).semantic();
    fs.iter().zip(&hs).fold(LaurentPoly::zero(), |acc, (a, b)| &acc + &(a * b))
}
