//! Division-based algorithms on Laurent polynomials over a field.
//!
//! Every routine first strips the monomial unit `z^lo`, works with ordinary
//! polynomials in `z`, and re-attaches units where the caller needs them.

use super::{AlgebraError, Field, LaurentPoly};

/// Long division of ordinary polynomials (all exponents ≥ 0).
pub(crate) fn div_rem<S: Field>(
    a: &LaurentPoly<S>,
    b: &LaurentPoly<S>,
) -> Result<(LaurentPoly<S>, LaurentPoly<S>), AlgebraError> {
    let db = b.hi().ok_or(AlgebraError::DivisionByZero)?;
    let lc_inv = b.coeff(db).inv().ok_or(AlgebraError::DivisionByZero)?;
    let mut quo = LaurentPoly::zero();
    let mut rem = a.clone();
    while let Some(dr) = rem.hi() {
        if dr < db {
            break;
        }
        let t = LaurentPoly::monomial(rem.coeff(dr) * &lc_inv, dr - db);
        rem = &rem - &(&t * b);
        quo = &quo + &t;
    }
    Ok((quo, rem))
}

fn strip<S: Field>(p: &LaurentPoly<S>) -> (i64, LaurentPoly<S>) {
    let lo = p.lo().unwrap_or(0);
    (lo, p.shift(-lo))
}

fn monic<S: Field>(p: &LaurentPoly<S>) -> (LaurentPoly<S>, S) {
    let lc_inv = p.hi().and_then(|h| p.coeff(h).inv()).unwrap_or_else(S::one);
    (p.scale(&lc_inv), lc_inv)
}

impl<S: Field> LaurentPoly<S> {
    /// `self / d` in the Laurent ring, failing unless the division is exact.
    pub fn exact_div(&self, d: &LaurentPoly<S>) -> Result<LaurentPoly<S>, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let (lo_p, p) = strip(self);
        let (lo_d, dd) = strip(d);
        let (quo, rem) = div_rem(&p, &dd)?;
        if !rem.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(quo.shift(lo_p - lo_d))
    }

    pub fn divides(&self, p: &LaurentPoly<S>) -> bool {
        p.exact_div(self).is_ok()
    }
}

/// Largest `m` with `f^m | p` in the Laurent ring (monomial units ignored).
pub fn factor_multiplicity<S: Field>(
    p: &LaurentPoly<S>,
    f: &LaurentPoly<S>,
) -> Result<u32, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if f.is_zero() || f.is_monomial() {
        return Err(AlgebraError::UnitFactor);
    }
    let (_, mut rest) = strip(p);
    let (_, f) = strip(f);
    let mut m = 0;
    loop {
        let (quo, rem) = div_rem(&rest, &f)?;
        if !rem.is_zero() {
            return Ok(m);
        }
        m += 1;
        rest = quo;
    }
}

/// Output of [`extended_euclid`]: `u·p + v·r = gcd`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bezout<S> {
    /// Monic ordinary polynomial with non-zero constant term (unit stripped).
    pub gcd: LaurentPoly<S>,
    pub u: LaurentPoly<S>,
    pub v: LaurentPoly<S>,
}

impl<S: Field> Bezout<S> {
    /// True when `p` and `r` share no root in the punctured plane.
    pub fn is_unit(&self) -> bool {
        self.gcd == LaurentPoly::one()
    }
}

/// Extended Euclid on Laurent polynomials.
///
/// The cofactors come from the classical remainder sequence on the stripped
/// polynomials, so `deg u < deg r − deg gcd` and `deg v < deg p − deg gcd`
/// after unit stripping. A unit-monomial argument short-circuits to the
/// trivial pair, e.g. `p = 1` gives `(1, 1, 0)`.
pub fn extended_euclid<S: Field>(
    p: &LaurentPoly<S>,
    r: &LaurentPoly<S>,
) -> Result<Bezout<S>, AlgebraError> {
    let inv_monomial = |m: &LaurentPoly<S>| -> LaurentPoly<S> {
        let (k, c) = m.terms().next().expect("monomial");
        LaurentPoly::monomial(c.inv().expect("non-zero"), -k)
    };
    match (p.is_zero(), r.is_zero()) {
        (true, true) => return Err(AlgebraError::BothZero),
        (false, true) => {
            let (lo, sp) = strip(p);
            let (gcd, lc_inv) = monic(&sp);
            return Ok(Bezout { gcd, u: LaurentPoly::monomial(lc_inv, -lo), v: LaurentPoly::zero() });
        }
        (true, false) => {
            let (lo, sr) = strip(r);
            let (gcd, lc_inv) = monic(&sr);
            return Ok(Bezout { gcd, u: LaurentPoly::zero(), v: LaurentPoly::monomial(lc_inv, -lo) });
        }
        _ => {}
    }
    if p.is_monomial() {
        return Ok(Bezout { gcd: LaurentPoly::one(), u: inv_monomial(p), v: LaurentPoly::zero() });
    }
    if r.is_monomial() {
        return Ok(Bezout { gcd: LaurentPoly::one(), u: LaurentPoly::zero(), v: inv_monomial(r) });
    }

    let (lo_p, sp) = strip(p);
    let (lo_r, sr) = strip(r);
    let (mut r0, mut r1) = (sp, sr);
    let (mut s0, mut s1) = (LaurentPoly::one(), LaurentPoly::zero());
    let (mut t0, mut t1) = (LaurentPoly::zero(), LaurentPoly::one());
    while !r1.is_zero() {
        let (quo, rem) = div_rem(&r0, &r1)?;
        let s2 = &s0 - &(&quo * &s1);
        let t2 = &t0 - &(&quo * &t1);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let (gcd, lc_inv) = monic(&r0);
    Ok(Bezout {
        gcd,
        u: s0.scale(&lc_inv).shift(-lo_p),
        v: t0.scale(&lc_inv).shift(-lo_r),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly<Rational> {
        LaurentPoly::from_terms(terms.iter().map(|&(k, n, d)| (k, Rational::new(n, d))))
    }

    #[test]
    fn multiplicity_ignores_units() {
        let one_plus_zinv = p(&[(0, 1, 1), (-1, 1, 1)]);
        let one_plus_z = p(&[(0, 1, 1), (1, 1, 1)]);
        assert_eq!(factor_multiplicity(&one_plus_zinv, &one_plus_z).unwrap(), 1);
        assert_eq!(factor_multiplicity(&LaurentPoly::one(), &one_plus_z).unwrap(), 0);
        let cube = one_plus_z.pow(3).shift(-7);
        assert_eq!(factor_multiplicity(&cube, &one_plus_z).unwrap(), 3);
    }

    #[test]
    fn multiplicity_errors() {
        let f = p(&[(0, 1, 1), (1, 1, 1)]);
        assert_eq!(factor_multiplicity(&LaurentPoly::zero(), &f), Err(AlgebraError::ZeroPolynomial));
        assert_eq!(factor_multiplicity(&f, &p(&[(3, 2, 1)])), Err(AlgebraError::UnitFactor));
        assert_eq!(factor_multiplicity(&f, &LaurentPoly::zero()), Err(AlgebraError::UnitFactor));
    }

    #[test]
    fn euclid_with_unit_argument() {
        let anything = p(&[(-3, 2, 1), (0, 1, 5), (4, -1, 1)]);
        let b = extended_euclid(&LaurentPoly::one(), &anything).unwrap();
        assert!(b.is_unit());
        assert_eq!(b.u, LaurentPoly::one());
        assert!(b.v.is_zero());
    }

    #[test]
    fn euclid_shared_root() {
        // (1 + z)(2 − z) and (1 + z)z⁻¹(3 + z)
        let a = &p(&[(0, 1, 1), (1, 1, 1)]) * &p(&[(0, 2, 1), (1, -1, 1)]);
        let b = &p(&[(0, 1, 1), (1, 1, 1)]) * &p(&[(-1, 3, 1), (0, 1, 1)]);
        let e = extended_euclid(&a, &b).unwrap();
        assert_eq!(e.gcd, p(&[(0, 1, 1), (1, 1, 1)]));
        assert!(!e.is_unit());
        assert_eq!(&(&e.u * &a) + &(&e.v * &b), e.gcd);
    }

    #[test]
    fn euclid_with_zero_argument() {
        let a = p(&[(-2, 2, 1), (-1, 4, 1)]);
        let e = extended_euclid(&a, &LaurentPoly::zero()).unwrap();
        assert_eq!(e.gcd, p(&[(0, 1, 2), (1, 1, 1)]));
        assert_eq!(&e.u * &a, e.gcd);
        assert!(extended_euclid::<Rational>(&LaurentPoly::zero(), &LaurentPoly::zero()).is_err());
    }

    #[test]
    fn exact_division() {
        let f = p(&[(0, 1, 1), (1, -1, 1)]);
        let g = p(&[(-2, 1, 3), (0, 1, 1)]);
        let prod = (&f * &g).shift(5);
        assert_eq!(prod.exact_div(&f).unwrap(), g.shift(5));
        assert!(f.divides(&prod));
        assert_eq!(g.exact_div(&f), Err(AlgebraError::NotDivisible));
    }
}
