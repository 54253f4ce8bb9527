//! Completion of a committee pyramid into a non-redundant FIR wavelet
//! filter bank.
//!
//! With `V = F`, the `q` columns of `I − V·H` are linearly dependent:
//! `(I − VH)·V = 0`. If some `F̃_k` is a unit monomial, `x = V / V_k` has
//! Laurent entries and `x_k = 1`, so an elementary column operation `E`
//! zeroes column `k + 1` of `S_LP·E`. Deleting that column of `S_LP·E` and
//! the matching row of `E⁻¹·A_LP` leaves a square pair with `S·A = I`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, LaurentPoly, QSqrtQ};
use crate::committee::committee_dual;
use crate::error::{Error, Result};
use crate::filterkit::{
    accuracy, is_biorthogonal, polyphase_analysis, polyphase_synthesis, vanishing_moments,
    Convention, Filter, Role,
};
use crate::pyramid::{apply_analysis, apply_synthesis, build_alp, build_slp, LaurentMatrix, LpPair, Signal};

/// A square perfect-reconstruction filter bank. `analysis[0]` is the
/// compression lowpass, `synthesis[0]` the dual.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterBank {
    pub dilation: u32,
    pub analysis: Vec<Filter>,
    pub synthesis: Vec<Filter>,
    pub a_clp: LaurentMatrix,
    pub s_clp: LaurentMatrix,
}

fn analysis_matrix(filters: &[Filter], dilation: u32) -> Result<LaurentMatrix> {
    let rows = filters.iter().map(|f| polyphase_analysis(f).semantic()).collect();
    LaurentMatrix::from_rows(rows, dilation)
}

fn synthesis_matrix(filters: &[Filter], dilation: u32) -> Result<LaurentMatrix> {
    let q = dilation as usize;
    let cols: Vec<_> = filters.iter().map(|f| polyphase_synthesis(f).semantic()).collect();
    let rows = (0..q).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    LaurentMatrix::from_rows(rows, dilation)
}

fn analysis_filters(a: &LaurentMatrix, dilation: u32) -> Result<Vec<Filter>> {
    (0..a.shape().0)
        .map(|i| Filter::from_semantic_polyphase(&a.row(i), Convention::Analysis, dilation))
        .collect()
}

fn synthesis_filters(s: &LaurentMatrix, dilation: u32) -> Result<Vec<Filter>> {
    (0..s.shape().1)
        .map(|j| Filter::from_semantic_polyphase(&s.col(j), Convention::Synthesis, dilation))
        .collect()
}

impl FilterBank {
    /// Bank from filter lists, with the polyphase matrices rebuilt from the
    /// taps.
    pub fn from_filters(analysis: Vec<Filter>, synthesis: Vec<Filter>) -> Result<Self> {
        let dilation = analysis.first().ok_or_else(|| Error::Format("empty filter bank".into()))?.dilation();
        let q = dilation as usize;
        for f in analysis.iter().chain(&synthesis) {
            if f.dilation() != dilation {
                return Err(Error::DilationMismatch { left: dilation, right: f.dilation() });
            }
        }
        if analysis.len() != q || synthesis.len() != q {
            return Err(Error::Format(format!(
                "a dilation-{dilation} bank needs {q} analysis and {q} synthesis filters"
            )));
        }
        let a_clp = analysis_matrix(&analysis, dilation)?;
        let s_clp = synthesis_matrix(&synthesis, dilation)?;
        Ok(FilterBank { dilation, analysis, synthesis, a_clp, s_clp })
    }

    fn from_matrices(a_clp: LaurentMatrix, s_clp: LaurentMatrix, dilation: u32) -> Result<Self> {
        let analysis = analysis_filters(&a_clp, dilation)?;
        let synthesis = synthesis_filters(&s_clp, dilation)?;
        Ok(FilterBank { dilation, analysis, synthesis, a_clp, s_clp })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("filter banks always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Channel signals via the polyphase analysis matrix.
    pub fn analyze(&self, x: &Signal<QSqrtQ>) -> Result<Vec<Signal<QSqrtQ>>> {
        apply_analysis(&self.a_clp, x, self.dilation)
    }

    pub fn synthesize(&self, channels: &[Signal<QSqrtQ>]) -> Result<Signal<QSqrtQ>> {
        apply_synthesis(&self.s_clp, channels, self.dilation)
    }

    /// `y_i(n) = Σ_k a_i(k) x(Mn − k)`, computed from the taps.
    pub fn analyze_direct(&self, x: &Signal<QSqrtQ>) -> Vec<Signal<QSqrtQ>> {
        self.analysis
            .iter()
            .map(|a| x.convolve(&a.semantic_taps()).downsample(self.dilation))
            .collect()
    }

    /// `x(n) = Σ_i Σ_l s_i(n − Ml) y_i(l)`, computed from the taps.
    pub fn synthesize_direct(&self, channels: &[Signal<QSqrtQ>]) -> Signal<QSqrtQ> {
        self.synthesis.iter().zip(channels).fold(Signal::zero(), |acc, (s, y)| {
            acc.add(&y.upsample(self.dilation).convolve(&s.semantic_taps()))
        })
    }
}

/// Smallest `k` whose synthesis component of `f` is a non-zero monomial.
fn unit_component(f: &Filter) -> Option<usize> {
    polyphase_synthesis(f).entries.iter().position(LaurentPoly::is_monomial)
}

fn monomial_inverse(m: &LaurentPoly<QSqrtQ>) -> Option<LaurentPoly<QSqrtQ>> {
    let (exp, c) = m.terms().next()?;
    Some(LaurentPoly::monomial(c.inv()?, -exp))
}

/// Completes the pyramid of `(h, g)` with `V = F` into a square wavelet
/// bank whose lowpass pair is `(h, d)`, `d` the committee dual.
pub fn complete_fb(h: &Filter, f: &Filter, g: &Filter) -> Result<FilterBank> {
    // validates every precondition and gives the expected dual
    let dual = committee_dual(h, f, g)?;
    let k = unit_component(f).ok_or(Error::CompletionUnsupported)?;
    let pair = LpPair::new(h.clone(), g.clone())?;
    let (q, m) = (pair.q(), pair.dilation());

    let v = polyphase_synthesis(f).semantic();
    let vk_inv = monomial_inverse(&v[k]).ok_or(Error::CompletionUnsupported)?;
    let x: Vec<_> = v.iter().map(|e| e * &vk_inv).collect();

    let mut e = LaurentMatrix::identity(q + 1, m);
    let mut e_inv = LaurentMatrix::identity(q + 1, m);
    for (j, xj) in x.iter().enumerate().filter(|&(j, _)| j != k) {
        e.set(j + 1, k + 1, xj.clone());
        e_inv.set(j + 1, k + 1, -xj);
    }

    let s = build_slp(&pair, &v)?.mul(&e)?;
    debug_assert!(s.col(k + 1).iter().all(LaurentPoly::is_zero));
    let s_clp = s.delete_col(k + 1);
    let a_clp = e_inv.mul(&build_alp(&pair))?.delete_row(k + 1);

    let fb = FilterBank::from_matrices(a_clp, s_clp, m)?;
    debug_assert_eq!(fb.synthesis[0], dual.d);
    Ok(fb)
}

/// Classical two-channel completion of a biorthogonal pair `(h, d)`:
/// `A = [[H₀, H₁], [−D₁, D₀]]`, `S = [[D₀, −H₁], [D₁, H₀]]`.
pub fn complete_q2(h: &Filter, d: &Filter) -> Result<FilterBank> {
    if h.dilation() != 2 {
        return Err(Error::UnsupportedDilation(h.dilation()));
    }
    if !is_biorthogonal(d, h)? {
        return Err(Error::NotBiorthogonal);
    }
    let hs = polyphase_analysis(h).semantic();
    let ds = polyphase_synthesis(d).semantic();
    let a = LaurentMatrix::from_rows(vec![vec![hs[0].clone(), hs[1].clone()], vec![-&ds[1], ds[0].clone()]], 2)?;
    let s = LaurentMatrix::from_rows(vec![vec![ds[0].clone(), -&hs[1]], vec![ds[1].clone(), hs[0].clone()]], 2)?;
    FilterBank::from_matrices(a, s, 2)
}

/// Per-filter spectral summary; `None` entries belong to the zero filter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterInfo {
    pub role: Role,
    pub taps: usize,
    pub accuracy: Option<u32>,
    pub vanishing_moments: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WaveletReport {
    /// `S_CLP·A_CLP = I` exactly.
    pub pr: bool,
    /// The stored matrices agree with the stored filters.
    pub matrices_consistent: bool,
    pub analysis: Vec<FilterInfo>,
    pub synthesis: Vec<FilterInfo>,
    /// Accuracy of the analysis lowpass.
    pub alpha: u32,
    /// Accuracy of the synthesis lowpass.
    pub beta: u32,
    /// Every synthesis wavelet has at least `alpha` vanishing moments.
    pub synthesis_moments_ok: bool,
    /// Every analysis wavelet has at least `beta` vanishing moments.
    pub analysis_moments_ok: bool,
    /// Exactly one lowpass per side, at index 0, and highpass elsewhere.
    pub wavelet_property: bool,
}

impl WaveletReport {
    pub fn passed(&self) -> bool {
        self.pr
            && self.matrices_consistent
            && self.synthesis_moments_ok
            && self.analysis_moments_ok
            && self.wavelet_property
    }
}

fn info(f: &Filter) -> FilterInfo {
    FilterInfo {
        role: f.role(),
        taps: f.tap_count(),
        accuracy: accuracy(f).ok(),
        vanishing_moments: vanishing_moments(f).ok(),
    }
}

fn wavelet_side(infos: &[FilterInfo]) -> bool {
    infos.iter().enumerate().all(|(i, fi)| {
        if i == 0 {
            fi.role == Role::Lowpass
        } else {
            fi.role == Role::Highpass && fi.vanishing_moments.map_or(false, |v| v >= 1)
        }
    })
}

fn moments_at_least(infos: &[FilterInfo], n: u32) -> bool {
    infos.iter().skip(1).all(|fi| fi.vanishing_moments.map_or(false, |v| v >= n))
}

pub fn verify_wavelet_fb(fb: &FilterBank) -> WaveletReport {
    let pr = fb.s_clp.mul(&fb.a_clp).map(|p| p.is_identity()).unwrap_or(false);
    let matrices_consistent = analysis_matrix(&fb.analysis, fb.dilation).ok().as_ref() == Some(&fb.a_clp)
        && synthesis_matrix(&fb.synthesis, fb.dilation).ok().as_ref() == Some(&fb.s_clp);
    let analysis: Vec<_> = fb.analysis.iter().map(info).collect();
    let synthesis: Vec<_> = fb.synthesis.iter().map(info).collect();
    let alpha = analysis.first().and_then(|i| i.accuracy).unwrap_or(0);
    let beta = synthesis.first().and_then(|i| i.accuracy).unwrap_or(0);
    WaveletReport {
        pr,
        matrices_consistent,
        synthesis_moments_ok: moments_at_least(&synthesis, alpha),
        analysis_moments_ok: moments_at_least(&analysis, beta),
        wavelet_property: wavelet_side(&analysis) && wavelet_side(&synthesis),
        analysis,
        synthesis,
        alpha,
        beta,
    }
}
