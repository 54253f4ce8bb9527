//! Laplacian pyramids in polyphase form.
//!
//! A pyramid is given by a compression lowpass `h` and a prediction lowpass
//! `g`. With `H` its analysis row and `G` its synthesis column, the
//! analysis matrix is `A_LP = [H; I − GH]` and the trivial synthesis is
//! `S_0 = [G | I]`. Any column `V` gives another left inverse
//! `S_LP = [G + V·B | I − V·H]` with `B = 1 − HG`.

mod matrix;
mod signal;

use crate::algebra::{LaurentPoly, QSqrtQ};
use crate::error::{Error, Result, Slot};
use crate::filterkit::{accuracy, polyphase_analysis, polyphase_synthesis, Filter, Role};

pub use matrix::LaurentMatrix;
pub use signal::{
    apply_analysis, apply_synthesis, lp_analyze, lp_synthesize_trivial, read_signal_csv,
    signal_from_polyphase, signal_polyphase, write_signal_csv, write_signal_float_csv, LpAnalysis,
    Signal,
};

/// A compression/prediction pair of lowpass filters with positive accuracy.
#[derive(Debug, Clone, PartialEq)]
pub struct LpPair {
    h: Filter,
    g: Filter,
}

impl LpPair {
    pub fn new(h: Filter, g: Filter) -> Result<Self> {
        if h.dilation() != g.dilation() {
            return Err(Error::DilationMismatch { left: h.dilation(), right: g.dilation() });
        }
        for (filter, slot) in [(&h, Slot::Compression), (&g, Slot::Prediction)] {
            if filter.role() != Role::Lowpass {
                return Err(Error::NotLowpass(slot));
            }
            if accuracy(filter)? == 0 {
                return Err(Error::ZeroAccuracy(slot));
            }
        }
        Ok(LpPair { h, g })
    }

    pub fn h(&self) -> &Filter {
        &self.h
    }

    pub fn g(&self) -> &Filter {
        &self.g
    }

    pub fn dilation(&self) -> u32 {
        self.h.dilation()
    }

    pub fn q(&self) -> usize {
        self.h.q()
    }

    /// Semantic analysis row `H`.
    pub fn h_row(&self) -> Vec<LaurentPoly<QSqrtQ>> {
        polyphase_analysis(&self.h).semantic()
    }

    /// Semantic synthesis column `G`.
    pub fn g_col(&self) -> Vec<LaurentPoly<QSqrtQ>> {
        polyphase_synthesis(&self.g).semantic()
    }
}

fn dot(a: &[LaurentPoly<QSqrtQ>], b: &[LaurentPoly<QSqrtQ>]) -> LaurentPoly<QSqrtQ> {
    a.iter().zip(b).fold(LaurentPoly::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// `B = 1 − Σ_ν H_ν G_ν` for any two filters of equal dilation.
pub fn b_polynomial(h: &Filter, g: &Filter) -> Result<LaurentPoly<QSqrtQ>> {
    if h.dilation() != g.dilation() {
        return Err(Error::DilationMismatch { left: h.dilation(), right: g.dilation() });
    }
    let hs = polyphase_analysis(h).semantic();
    let gs = polyphase_synthesis(g).semantic();
    Ok(&LaurentPoly::one() - &dot(&hs, &gs))
}

pub fn compute_b(pair: &LpPair) -> LaurentPoly<QSqrtQ> {
    &LaurentPoly::one() - &dot(&pair.h_row(), &pair.g_col())
}

fn kronecker(i: usize, j: usize) -> LaurentPoly<QSqrtQ> {
    if i == j {
        LaurentPoly::one()
    } else {
        LaurentPoly::zero()
    }
}

/// `(q+1) × q` analysis matrix `[H; I − GH]`.
pub fn build_alp(pair: &LpPair) -> LaurentMatrix {
    let (hs, gs, q) = (pair.h_row(), pair.g_col(), pair.q());
    let mut m = LaurentMatrix::zeros(q + 1, q, pair.dilation());
    for j in 0..q {
        m.set(0, j, hs[j].clone());
        for i in 0..q {
            m.set(i + 1, j, &kronecker(i, j) - &(&gs[i] * &hs[j]));
        }
    }
    m
}

/// `q × (q+1)` trivial synthesis `[G | I]`.
pub fn build_s0(pair: &LpPair) -> LaurentMatrix {
    let (gs, q) = (pair.g_col(), pair.q());
    let mut m = LaurentMatrix::zeros(q, q + 1, pair.dilation());
    for i in 0..q {
        m.set(i, 0, gs[i].clone());
        m.set(i, i + 1, LaurentPoly::one());
    }
    m
}

/// `q × (q+1)` synthesis `[G + V·B | I − V·H]`, a left inverse of
/// [`build_alp`] for every column `V`.
pub fn build_slp(pair: &LpPair, v: &[LaurentPoly<QSqrtQ>]) -> Result<LaurentMatrix> {
    let q = pair.q();
    if v.len() != q {
        return Err(Error::PolyphaseArity { expected: q, got: v.len() });
    }
    let (hs, gs, b) = (pair.h_row(), pair.g_col(), compute_b(pair));
    let mut m = LaurentMatrix::zeros(q, q + 1, pair.dilation());
    for i in 0..q {
        m.set(i, 0, &gs[i] + &(&v[i] * &b));
        for j in 0..q {
            m.set(i, j + 1, &kronecker(i, j) - &(&v[i] * &hs[j]));
        }
    }
    Ok(m)
}

/// Exact perfect-reconstruction test `S·A = I`.
pub fn pr_check(s: &LaurentMatrix, a: &LaurentMatrix) -> Result<bool> {
    Ok(s.mul(a)?.is_identity())
}
