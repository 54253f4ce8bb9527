use crate::algebra::{LaurentPoly, Rational};
use crate::error::{Error, Result};

use super::{from_polyphase, Convention, Filter, Normalization, Role};

/// Burt–Adelson's five-tap Gaussian-like lowpass for parameter `a`:
/// `h̃(0) = a`, `h̃(±1) = 1/4`, `h̃(±2) = 1/4 − a/2`.
pub fn burt_adelson(a: Rational) -> Filter {
    let quarter = Rational::new(1, 4);
    let outer = &quarter - &(&a * &Rational::new(1, 2));
    Filter::new(
        2,
        [(-2, outer.clone()), (-1, quarter.clone()), (0, a), (1, quarter), (2, outer)],
        Normalization::SqrtQ,
        Role::Lowpass,
    )
    .expect("taps sum to one for every a")
}

/// Closed-form cofilter of [`burt_adelson`]: synthesis entries
/// `f̃₀ = 1/(4a − 1)` and `f̃₁ = (2a − 1)/(4a − 1)·(z + 1)`.
pub fn burt_adelson_cofilter(a: Rational) -> Result<Filter> {
    let denom = &(&a * &Rational::from(4)) - &Rational::one();
    let inv = denom.recip().ok_or_else(|| Error::SingularParameter(a.clone()))?;
    let c1 = &(&(&a * &Rational::from(2)) - &Rational::one()) * &inv;
    let f0 = LaurentPoly::constant(inv);
    let f1 = LaurentPoly::from_terms([(1, c1.clone()), (0, c1)]);
    from_polyphase(&[f0, f1], Convention::Synthesis, 2)
}

/// Haar lowpass `{0: 1/2, 1: 1/2}`. Its synthesis entries are both `1/2`.
pub fn haar() -> Filter {
    Filter::new(2, [(0, Rational::new(1, 2)), (1, Rational::new(1, 2))], Normalization::SqrtQ, Role::Lowpass)
        .expect("haar is lowpass")
}

/// Time-reversed Haar `{-1: 1/2, 0: 1/2}`, whose analysis entries are both
/// `1/2`; this is the orientation biorthogonal to [`haar`].
pub fn haar_analysis() -> Filter {
    haar().reversed()
}

/// Unit impulse `{0: 1}` (√q-normalized, so a lowpass with zero accuracy).
pub fn delta(dilation: u32) -> Filter {
    Filter::new(dilation, [(0, Rational::one())], Normalization::SqrtQ, Role::Lowpass)
        .expect("delta is lowpass")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filterkit::accuracy;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn burt_adelson_taps() {
        let h = burt_adelson(r(3, 5));
        let taps: Vec<_> = h.taps().iter().map(|(k, c)| (*k, c.clone())).collect();
        assert_eq!(
            taps,
            vec![(-2, r(-1, 20)), (-1, r(1, 4)), (0, r(3, 5)), (1, r(1, 4)), (2, r(-1, 20))]
        );
        let interp = burt_adelson(r(1, 2));
        assert_eq!(interp.tap_count(), 3);
        assert_eq!(interp.support(), Some((-1, 1)));
    }

    #[test]
    fn cofilter_taps() {
        let f = burt_adelson_cofilter(r(3, 5)).unwrap();
        let taps: Vec<_> = f.taps().iter().map(|(k, c)| (*k, c.clone())).collect();
        assert_eq!(taps, vec![(-1, r(1, 7)), (0, r(5, 7)), (1, r(1, 7))]);
        assert!(matches!(burt_adelson_cofilter(r(1, 4)), Err(Error::SingularParameter(_))));
    }

    #[test]
    fn cofilter_accuracy() {
        for a in [r(3, 5), r(1, 2), r(9, 10)] {
            assert_eq!(accuracy(&burt_adelson_cofilter(a).unwrap()).unwrap(), 0);
        }
        assert!(accuracy(&burt_adelson_cofilter(r(3, 4)).unwrap()).unwrap() > 0);
    }
}
