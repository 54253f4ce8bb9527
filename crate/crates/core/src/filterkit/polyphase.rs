use crate::algebra::{LaurentPoly, QSqrtQ, Rational, Scalar};
use crate::error::{Error, Result};

use super::{Filter, Normalization};

/// Index convention of a polyphase decomposition.
///
/// With `X(z) = Σ x(m) z^(−m)`, entry `ν` is the z-transform of
/// `m ↦ filter(Mm − ν)` for [`Convention::Analysis`] (a row vector) and of
/// `m ↦ filter(Mm + ν)` for [`Convention::Synthesis`] (a column vector).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    Analysis,
    Synthesis,
}

/// `q` Laurent entries of a filter's polyphase decomposition, stored in the
/// filter's own normalization (so `√q` is factored out for tilde filters).
#[derive(Debug, Clone, PartialEq)]
pub struct Polyphase {
    pub convention: Convention,
    pub dilation: u32,
    pub normalization: Normalization,
    pub entries: Vec<LaurentPoly<Rational>>,
}

impl Polyphase {
    pub fn entry(&self, nu: usize) -> &LaurentPoly<Rational> {
        &self.entries[nu]
    }

    pub fn scale(&self) -> QSqrtQ {
        match self.normalization {
            Normalization::SqrtQ => QSqrtQ::sqrt(self.dilation),
            Normalization::Unit => QSqrtQ::one(),
        }
    }

    /// Entries with the normalization multiplied back in.
    pub fn semantic(&self) -> Vec<LaurentPoly<QSqrtQ>> {
        let s = self.scale();
        self.entries.iter().map(|e| e.map(|c| QSqrtQ::rational(c.clone()) * &s)).collect()
    }

    pub fn to_filter(&self) -> Result<Filter> {
        let taps = taps_from_entries(&self.entries, self.convention, self.dilation)?;
        Filter::with_inferred_role(self.dilation, taps, self.normalization)
    }
}

fn split(filter: &Filter, convention: Convention) -> Polyphase {
    let m = filter.dilation() as i64;
    let mut entries = vec![Vec::new(); filter.q()];
    for (&k, c) in filter.taps() {
        let (nu, idx) = match convention {
            // k = Mm − ν
            Convention::Analysis => {
                let nu = (-k).rem_euclid(m);
                (nu, (k + nu) / m)
            }
            // k = Mm + ν
            Convention::Synthesis => {
                let nu = k.rem_euclid(m);
                (nu, (k - nu) / m)
            }
        };
        entries[nu as usize].push((-idx, c.clone()));
    }
    Polyphase {
        convention,
        dilation: filter.dilation(),
        normalization: filter.normalization(),
        entries: entries.into_iter().map(LaurentPoly::from_terms).collect(),
    }
}

/// Row vector `[H_0, …, H_{q−1}]` with `h_ν(m) = h(Mm − ν)`.
pub fn polyphase_analysis(h: &Filter) -> Polyphase {
    split(h, Convention::Analysis)
}

/// Column vector `[G_0, …, G_{q−1}]ᵀ` with `g_ν(m) = g(Mm + ν)`.
pub fn polyphase_synthesis(g: &Filter) -> Polyphase {
    split(g, Convention::Synthesis)
}

fn taps_from_entries<S: Scalar>(
    entries: &[LaurentPoly<S>],
    convention: Convention,
    dilation: u32,
) -> Result<Vec<(i64, S)>> {
    if entries.len() != dilation as usize {
        return Err(Error::PolyphaseArity { expected: dilation as usize, got: entries.len() });
    }
    let m = dilation as i64;
    let mut taps = Vec::new();
    for (nu, entry) in entries.iter().enumerate() {
        let nu = nu as i64;
        for (e, c) in entry.terms() {
            let k = match convention {
                Convention::Analysis => -e * m - nu,
                Convention::Synthesis => -e * m + nu,
            };
            taps.push((k, c.clone()));
        }
    }
    Ok(taps)
}

/// Inverse of the decomposition for √q-normalized entries.
pub fn from_polyphase(
    entries: &[LaurentPoly<Rational>],
    convention: Convention,
    dilation: u32,
) -> Result<Filter> {
    let taps = taps_from_entries(entries, convention, dilation)?;
    Filter::tilde(dilation, taps)
}

impl Filter {
    /// Rebuilds a filter from semantic (Q(√q)) polyphase entries, choosing
    /// [`Normalization::SqrtQ`] when every coefficient is a rational multiple
    /// of `√q` and [`Normalization::Unit`] when every coefficient is rational.
    pub fn from_semantic_polyphase(
        entries: &[LaurentPoly<QSqrtQ>],
        convention: Convention,
        dilation: u32,
    ) -> Result<Filter> {
        let taps = taps_from_entries(entries, convention, dilation)?;
        let all_rational = taps.iter().all(|(_, c)| c.is_rational());
        let all_irrational = taps.iter().all(|(_, c)| c.is_pure_irrational());
        let (normalization, taps): (_, Vec<_>) = if all_rational {
            (Normalization::Unit, taps.into_iter().map(|(k, c)| (k, c.rat().clone())).collect())
        } else if all_irrational {
            (Normalization::SqrtQ, taps.into_iter().map(|(k, c)| (k, c.irr().clone())).collect())
        } else {
            return Err(Error::MixedNormalization);
        };
        Filter::with_inferred_role(dilation, taps, normalization)
    }
}

/// Tap z-transform rebuilt from polyphase entries:
/// `Σ_ν z^ν E_ν(z^M)` (analysis) or `Σ_ν z^(−ν) E_ν(z^M)` (synthesis).
pub fn recombine<S: Scalar>(
    entries: &[LaurentPoly<S>],
    convention: Convention,
    dilation: u32,
) -> LaurentPoly<S> {
    entries.iter().enumerate().fold(LaurentPoly::zero(), |acc, (nu, e)| {
        let nu = nu as i64;
        let shift = match convention {
            Convention::Analysis => nu,
            Convention::Synthesis => -nu,
        };
        &acc + &e.dilate(dilation).shift(shift)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filterkit::{burt_adelson, delta, haar, haar_analysis};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentPoly<Rational> {
        LaurentPoly::from_terms(terms.iter().map(|&(k, n, d)| (k, r(n, d))))
    }

    #[test]
    fn burt_adelson_analysis_entries() {
        let pp = polyphase_analysis(&burt_adelson(r(3, 5)));
        assert_eq!(pp.entries[0], lp(&[(0, 3, 5), (1, -1, 20), (-1, -1, 20)]));
        assert_eq!(pp.entries[1], lp(&[(0, 1, 4), (-1, 1, 4)]));
    }

    #[test]
    fn haar_entries() {
        // Analysis-side Haar {-1, 0} has constant analysis entries; the
        // synthesis-side Haar {0, 1} has constant synthesis entries.
        let a = polyphase_analysis(&haar_analysis());
        assert_eq!(a.entries, vec![lp(&[(0, 1, 2)]), lp(&[(0, 1, 2)])]);
        let s = polyphase_synthesis(&haar());
        assert_eq!(s.entries, vec![lp(&[(0, 1, 2)]), lp(&[(0, 1, 2)])]);
        // {0, 1} read in the analysis convention picks up a unit z⁻¹.
        let shifted = polyphase_analysis(&haar());
        assert_eq!(shifted.entries, vec![lp(&[(0, 1, 2)]), lp(&[(-1, 1, 2)])]);
    }

    #[test]
    fn delta_entries() {
        for conv in [polyphase_analysis(&delta(2)), polyphase_synthesis(&delta(2))] {
            assert_eq!(conv.entries, vec![LaurentPoly::one(), LaurentPoly::zero()]);
        }
    }

    #[test]
    fn paper_cofilter_synthesis_entries() {
        let f = Filter::tilde(2, [(-1, r(1, 7)), (0, r(5, 7)), (1, r(1, 7))]).unwrap();
        let pp = polyphase_synthesis(&f);
        assert_eq!(pp.entries[0], lp(&[(0, 5, 7)]));
        assert_eq!(pp.entries[1], lp(&[(1, 1, 7), (0, 1, 7)]));
        let back = from_polyphase(&pp.entries, Convention::Synthesis, 2).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn from_polyphase_edge_cases() {
        let zero = from_polyphase(&[LaurentPoly::zero(), LaurentPoly::zero()], Convention::Analysis, 2)
            .unwrap();
        assert!(zero.is_zero());
        assert!(matches!(
            from_polyphase(&[LaurentPoly::one()], Convention::Analysis, 2),
            Err(Error::PolyphaseArity { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn semantic_reconstruction_picks_normalization() {
        let s = QSqrtQ::sqrt(2);
        let scaled = vec![LaurentPoly::constant(s.clone()), LaurentPoly::zero()];
        let f = Filter::from_semantic_polyphase(&scaled, Convention::Analysis, 2).unwrap();
        assert_eq!(f.normalization(), Normalization::SqrtQ);
        assert_eq!(f.tap(0), Rational::one());

        let plain = vec![LaurentPoly::constant(QSqrtQ::rational(r(1, 1))), LaurentPoly::constant(QSqrtQ::rational(r(-1, 1)))];
        let g = Filter::from_semantic_polyphase(&plain, Convention::Synthesis, 2).unwrap();
        assert_eq!(g.normalization(), Normalization::Unit);
        assert_eq!(g.role(), super::super::Role::Highpass);

        let mixed = vec![LaurentPoly::constant(s), LaurentPoly::constant(QSqrtQ::rational(r(1, 1)))];
        assert!(matches!(
            Filter::from_semantic_polyphase(&mixed, Convention::Synthesis, 2),
            Err(Error::MixedNormalization)
        ));
    }
}
