//! The committee construction of a dual lowpass filter.
//!
//! Given a compression lowpass `h`, a cofilter `f` biorthogonal to it and a
//! prediction lowpass `g` with positive accuracy, the dual `d` has synthesis
//! polyphase column `D = G + F·(1 − HG)`. It is biorthogonal to `h` because
//! `H·D = HG + (HF)(1 − HG) = 1`, and inherits accuracy from `g`.

use serde::Serialize;

use crate::algebra::{factor_multiplicity, LaurentPoly, Rational};
use crate::error::{Error, Result, Slot};
use crate::filterkit::{accuracy, is_biorthogonal, polyphase_synthesis, Convention, Filter, Role};
use crate::pyramid::b_polynomial;

/// Summary of a dual, in the shape emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualDiagnostics {
    pub taps: usize,
    pub accuracy: u32,
    pub bound: u32,
    pub biorthogonal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommitteeResult {
    pub d: Filter,
    pub h: Filter,
    pub f: Filter,
    pub g: Filter,
    pub beta1: u32,
    pub beta2: u32,
    /// `min(beta1, beta2)`, a lower bound on the accuracy of `d`.
    pub bound: u32,
    pub diagnostics: DualDiagnostics,
}

fn check_lowpass(filter: &Filter, slot: Slot) -> Result<()> {
    if filter.role() != Role::Lowpass {
        return Err(Error::NotLowpass(slot));
    }
    if accuracy(filter)? == 0 {
        return Err(Error::ZeroAccuracy(slot));
    }
    Ok(())
}

/// Runs the construction with the prediction filter defaulting to `h`.
pub fn committee_dual_default(h: &Filter, f: &Filter) -> Result<CommitteeResult> {
    committee_dual(h, f, h)
}

pub fn committee_dual(h: &Filter, f: &Filter, g: &Filter) -> Result<CommitteeResult> {
    for other in [f, g] {
        if other.dilation() != h.dilation() {
            return Err(Error::DilationMismatch { left: h.dilation(), right: other.dilation() });
        }
    }
    check_lowpass(h, Slot::Compression)?;
    check_lowpass(g, Slot::Prediction)?;
    if !is_biorthogonal(f, h)? {
        return Err(Error::NotBiorthogonal);
    }

    let b = b_polynomial(h, g)?;
    let gs = polyphase_synthesis(g).semantic();
    let fs = polyphase_synthesis(f).semantic();
    let ds: Vec<_> = gs.iter().zip(&fs).map(|(gv, fv)| gv + &(fv * &b)).collect();
    let d = Filter::from_semantic_polyphase(&ds, Convention::Synthesis, h.dilation())?;

    let (beta1, beta2) = theorem2_bound(h, g)?;
    let bound = beta1.min(beta2);
    let diagnostics = DualDiagnostics {
        taps: d.tap_count(),
        accuracy: accuracy(&d)?,
        bound,
        biorthogonal: is_biorthogonal(&d, h)?,
    };
    debug_assert!(diagnostics.biorthogonal && diagnostics.accuracy >= bound);
    Ok(CommitteeResult { d, h: h.clone(), f: f.clone(), g: g.clone(), beta1, beta2, bound, diagnostics })
}

/// `(β₁, β₂)`: the accuracy of `g`, and the order of the zero at `z = 1` of
/// `1 − H̃(z)·G̃(z)` on the full tap z-transforms.
pub fn theorem2_bound(h: &Filter, g: &Filter) -> Result<(u32, u32)> {
    let beta1 = accuracy(g)?;
    if beta1 == 0 {
        return Err(Error::ZeroAccuracy(Slot::Prediction));
    }
    let rest = &LaurentPoly::one() - &(&h.z_transform() * &g.z_transform());
    let one_minus_z = LaurentPoly::from_terms([(0, Rational::one()), (1, -Rational::one())]);
    let beta2 = if rest.is_zero() { u32::MAX } else { factor_multiplicity(&rest, &one_minus_z)? };
    Ok((beta1, beta2))
}
