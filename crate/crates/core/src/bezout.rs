//! Cofilters: lowpass filters `f` biorthogonal to a given `h`.
//!
//! For dilation 2 the two analysis components of `h` are fed to the extended
//! Euclidean algorithm; a unit gcd gives `u·H̃₀ + v·H̃₁ = 1`, hence the
//! cofilter entries `F̃ = (u/2, v/2)`. Other dilations need a user-supplied
//! cofilter.

use serde::Serialize;

use crate::algebra::{extended_euclid, AlgebraError, Field, LaurentPoly, Rational};
use crate::error::{Error, Result, Slot};
use crate::filterkit::{
    accuracy, from_polyphase, has_unit_phase, is_biorthogonal, polyphase_analysis,
    polyphase_synthesis, Convention, Filter, Role,
};

/// Result of checking a candidate cofilter against `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CofilterReport {
    pub biorthogonal: bool,
    /// `None` for the zero filter.
    pub accuracy: Option<u32>,
    /// Some synthesis component of `f` is a non-zero monomial.
    pub unit_component: bool,
}

pub fn validate_cofilter(f: &Filter, h: &Filter) -> Result<CofilterReport> {
    let biorthogonal = is_biorthogonal(f, h)?;
    let accuracy = if f.is_zero() { None } else { Some(accuracy(f)?) };
    let unit_component = polyphase_synthesis(f).entries.iter().any(LaurentPoly::is_monomial);
    Ok(CofilterReport { biorthogonal, accuracy, unit_component })
}

/// Finds a cofilter of a dilation-2 lowpass `h`.
///
/// Among the Bezout solutions the search keeps the normal form and its
/// translates modulo `H̃₁`, and returns the one whose taps span the fewest
/// indices, then the one most centred around 0, then the one starting
/// lowest. For symmetric `h` this picks the symmetric cofilter.
pub fn find_cofilter(h: &Filter) -> Result<Filter> {
    if h.dilation() != 2 {
        return Err(Error::UnsupportedDilation(h.dilation()));
    }
    if h.role() != Role::Lowpass {
        return Err(Error::NotLowpass(Slot::Compression));
    }
    let pp = polyphase_analysis(h);
    let (p, r) = (&pp.entries[0], &pp.entries[1]);
    let bezout = extended_euclid(p, r)?;
    if !bezout.is_unit() {
        return Err(Error::NoFirDual { gcd: bezout.gcd.to_string() });
    }

    let mut candidates = vec![(bezout.u.clone(), bezout.v.clone())];
    if let Some(d) = r.width() {
        let u_lo = bezout.u.lo().unwrap_or(0);
        if d > 0 {
            let reach = p.width().unwrap_or(0) + d + 2;
            for s in (u_lo - reach)..=(u_lo + reach) {
                let u = reduce_into_window(&bezout.u, r, s)?;
                let v = (&LaurentPoly::one() - &(&u * p)).exact_div(r)?;
                candidates.push((u, v));
            }
        }
    }

    let half = Rational::new(1, 2);
    let mut best: Option<((i64, i64, i64), Filter)> = None;
    for (u, v) in candidates {
        let f = from_polyphase(&[u.scale(&half), v.scale(&half)], Convention::Synthesis, 2)?;
        let (lo, hi) = f.support().expect("a cofilter is never zero");
        let key = (hi - lo, (lo + hi).abs(), lo);
        if best.as_ref().map_or(true, |(k, _)| key < *k) {
            best = Some((key, f));
        }
    }
    let f = best.expect("at least the normal form").1;
    debug_assert!(is_biorthogonal(&f, h).unwrap_or(false));
    Ok(f)
}

/// The representative of `u mod r` supported in `[s, s + deg r)`.
fn reduce_into_window(
    u: &LaurentPoly<Rational>,
    r: &LaurentPoly<Rational>,
    s: i64,
) -> std::result::Result<LaurentPoly<Rational>, AlgebraError> {
    let lo_r = r.lo().ok_or(AlgebraError::DivisionByZero)?;
    let rr = r.shift(-lo_r);
    let x = u.shift(-s);
    let n = (-x.lo().unwrap_or(0)).max(0);
    let lifted = poly_rem(&x.shift(n), &rr)?;
    // z⁻¹ ≡ −(R(z) − R(0)) / (z·R(0))  (mod R)
    let r0_inv = rr.coeff(0).inv().ok_or(AlgebraError::DivisionByZero)?;
    let zinv = (&rr - &LaurentPoly::constant(rr.coeff(0))).shift(-1).scale(&(-r0_inv));
    let mut out = lifted;
    for _ in 0..n {
        out = poly_rem(&(&out * &zinv), &rr)?;
    }
    Ok(out.shift(s))
}

fn poly_rem(
    a: &LaurentPoly<Rational>,
    b: &LaurentPoly<Rational>,
) -> std::result::Result<LaurentPoly<Rational>, AlgebraError> {
    Ok(crate::algebra::euclid_div_rem(a, b)?.1)
}

/// Cofilter read off an entry `H_{β−1} = 1/√q`: `F_{β−1} = √q`, zero elsewhere.
pub fn unit_phase_cofilter(h: &Filter) -> Option<Filter> {
    let beta = has_unit_phase(h)?;
    let mut entries = vec![LaurentPoly::zero(); h.q()];
    entries[beta - 1] = LaurentPoly::one();
    from_polyphase(&entries, Convention::Synthesis, h.dilation()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filterkit::{burt_adelson, burt_adelson_cofilter, delta, haar, haar_analysis};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn burt_adelson_cofilter_found() {
        let h = burt_adelson(r(3, 5));
        let f = find_cofilter(&h).unwrap();
        assert!(is_biorthogonal(&f, &h).unwrap());
        assert!(f.tap_sum().is_one());
        assert_eq!(f, burt_adelson_cofilter(r(3, 5)).unwrap());
    }

    #[test]
    fn singular_parameter_has_no_dual() {
        let err = find_cofilter(&burt_adelson(r(1, 4))).unwrap_err();
        match err {
            Error::NoFirDual { gcd } => assert_eq!(gcd, "(1/1)z + (1/1)"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn haar_cofilters() {
        let f = find_cofilter(&haar_analysis()).unwrap();
        let pp = polyphase_synthesis(&f);
        assert!((&pp.entries[0] + &pp.entries[1]).coeff_sum().is_one());
        assert!(is_biorthogonal(&f, &haar_analysis()).unwrap());
        let report = validate_cofilter(&haar(), &haar_analysis()).unwrap();
        assert_eq!(report, CofilterReport { biorthogonal: true, accuracy: Some(1), unit_component: true });
        // the {0, 1} orientation works too, with a different cofilter
        let g = find_cofilter(&haar()).unwrap();
        assert!(is_biorthogonal(&g, &haar()).unwrap());
    }

    #[test]
    fn reports() {
        let h = burt_adelson(r(3, 5));
        let f = burt_adelson_cofilter(r(3, 5)).unwrap();
        assert_eq!(
            validate_cofilter(&f, &h).unwrap(),
            CofilterReport { biorthogonal: true, accuracy: Some(0), unit_component: true }
        );
        let bad = validate_cofilter(&delta(2), &h).unwrap();
        assert!(!bad.biorthogonal);
    }

    #[test]
    fn unsupported_dilation() {
        let h = Filter::tilde(3, [(-1, r(1, 3)), (0, r(1, 3)), (1, r(1, 3))]).unwrap();
        assert!(matches!(find_cofilter(&h), Err(Error::UnsupportedDilation(3))));
    }

    #[test]
    fn unit_phase_shortcut() {
        let h = burt_adelson(r(1, 2));
        let f = unit_phase_cofilter(&h).unwrap();
        assert_eq!(f, delta(2));
        assert!(is_biorthogonal(&f, &h).unwrap());
        let h3 = Filter::tilde(3, [(-2, r(1, 9)), (-1, r(2, 9)), (0, r(3, 9)), (1, r(2, 9)), (2, r(1, 9))])
            .unwrap();
        assert!(is_biorthogonal(&unit_phase_cofilter(&h3).unwrap(), &h3).unwrap());
        assert!(unit_phase_cofilter(&burt_adelson(r(3, 5))).is_none());
    }

    #[test]
    fn window_reduction_stays_in_residue_class() {
        let u = LaurentPoly::from_terms([(-3, r(2, 1)), (0, r(1, 5)), (4, r(-1, 1))]);
        let rr = LaurentPoly::from_terms([(-1, r(1, 3)), (0, r(1, 1)), (1, r(2, 1))]);
        for s in -4..4 {
            let red = reduce_into_window(&u, &rr, s).unwrap();
            if let Some(lo) = red.lo() {
                assert!(lo >= s && red.hi().unwrap() < s + 2);
            }
            assert!(rr.divides(&(&u - &red)));
        }
    }
}
