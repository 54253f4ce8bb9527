use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, Rational};

/// An element `rat + irr·√q` of the quadratic extension Q(√q).
///
/// `q == 0` marks a value that has not been tied to a radicand yet; such a
/// value always has `irr == 0` and adopts the radicand of whatever it is
/// combined with. Two values carrying different non-zero radicands never
/// combine: the operator impls panic and the `try_*` methods return
/// [`AlgebraError::MismatchedRadicand`].
///
/// Perfect-square radicands are kept as formal pairs.
#[derive(Clone)]
pub struct QSqrtQ {
    rat: Rational,
    irr: Rational,
    q: u32,
}

impl QSqrtQ {
    pub fn new(rat: Rational, irr: Rational, q: u32) -> Self {
        assert!(q > 0 || irr.is_zero(), "irrational part needs a radicand");
        QSqrtQ { rat, irr, q }
    }

    pub fn rational(rat: Rational) -> Self {
        QSqrtQ { rat, irr: Rational::zero(), q: 0 }
    }

    /// The value `√q` itself.
    pub fn sqrt(q: u32) -> Self {
        assert!(q > 0);
        QSqrtQ { rat: Rational::zero(), irr: Rational::one(), q }
    }

    /// `c·√q`.
    pub fn sqrt_multiple(c: Rational, q: u32) -> Self {
        QSqrtQ::new(Rational::zero(), c, q)
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn radicand(&self) -> u32 {
        self.q
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn is_pure_irrational(&self) -> bool {
        self.rat.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64() + self.irr.to_f64() * (self.q as f64).sqrt()
    }

    fn join(&self, other: &QSqrtQ) -> Result<u32, AlgebraError> {
        match (self.q, other.q) {
            (0, b) => Ok(b),
            (a, 0) => Ok(a),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(AlgebraError::MismatchedRadicand { left: a, right: b }),
        }
    }

    pub fn try_add(&self, other: &QSqrtQ) -> Result<QSqrtQ, AlgebraError> {
        let q = self.join(other)?;
        Ok(QSqrtQ { rat: &self.rat + &other.rat, irr: &self.irr + &other.irr, q })
    }

    pub fn try_sub(&self, other: &QSqrtQ) -> Result<QSqrtQ, AlgebraError> {
        let q = self.join(other)?;
        Ok(QSqrtQ { rat: &self.rat - &other.rat, irr: &self.irr - &other.irr, q })
    }

    /// `(a + b√q)(c + d√q) = (ac + bdq) + (ad + bc)√q`.
    pub fn try_mul(&self, other: &QSqrtQ) -> Result<QSqrtQ, AlgebraError> {
        let q = self.join(other)?;
        let bdq = &self.irr * &other.irr * Rational::from(q as i64);
        Ok(QSqrtQ {
            rat: &self.rat * &other.rat + bdq,
            irr: &self.rat * &other.irr + &self.irr * &other.rat,
            q,
        })
    }

    /// `(a − b√q) / (a² − b²q)`; `None` when the norm vanishes.
    pub fn inverse(&self) -> Option<QSqrtQ> {
        let norm = &self.rat * &self.rat - &self.irr * &self.irr * Rational::from(self.q as i64);
        let inv = norm.recip()?;
        Some(QSqrtQ { rat: &self.rat * &inv, irr: -(&self.irr * &inv), q: self.q })
    }
}

impl PartialEq for QSqrtQ {
    fn eq(&self, other: &Self) -> bool {
        self.rat == other.rat
            && self.irr == other.irr
            && (self.irr.is_zero() || self.q == other.q)
    }
}

impl Eq for QSqrtQ {}

impl fmt::Display for QSqrtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (_, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}·√{}", self.irr, self.q),
            (false, false) => write!(f, "{} + {}·√{}", self.rat, self.irr, self.q),
        }
    }
}

impl fmt::Debug for QSqrtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for QSqrtQ {
    fn from(r: Rational) -> Self {
        QSqrtQ::rational(r)
    }
}

macro_rules! panicking_binop {
    ($Trait:ident, $method:ident, $try:ident) => {
        impl $Trait for QSqrtQ {
            type Output = QSqrtQ;
            fn $method(self, rhs: QSqrtQ) -> QSqrtQ {
                self.$try(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a> $Trait<&'a QSqrtQ> for QSqrtQ {
            type Output = QSqrtQ;
            fn $method(self, rhs: &'a QSqrtQ) -> QSqrtQ {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<'a, 'b> $Trait<&'b QSqrtQ> for &'a QSqrtQ {
            type Output = QSqrtQ;
            fn $method(self, rhs: &'b QSqrtQ) -> QSqrtQ {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

panicking_binop!(Add, add, try_add);
panicking_binop!(Sub, sub, try_sub);
panicking_binop!(Mul, mul, try_mul);

impl Neg for QSqrtQ {
    type Output = QSqrtQ;
    fn neg(self) -> QSqrtQ {
        QSqrtQ { rat: -self.rat, irr: -self.irr, q: self.q }
    }
}

impl Neg for &QSqrtQ {
    type Output = QSqrtQ;
    fn neg(self) -> QSqrtQ {
        QSqrtQ { rat: -&self.rat, irr: -&self.irr, q: self.q }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn product_formula() {
        let x = QSqrtQ::new(r(1, 2), r(3, 1), 2);
        let y = QSqrtQ::new(r(-2, 1), r(1, 4), 2);
        let p = &x * &y;
        // ac + bdq = -1 + 3/4·2, ad + bc = 1/8 - 6
        assert_eq!(p.rat(), &r(1, 2));
        assert_eq!(p.irr(), &r(-47, 8));
    }

    #[test]
    fn sqrt_squared_is_rational() {
        let s = QSqrtQ::sqrt(3);
        let sq = &s * &s;
        assert!(sq.is_rational());
        assert_eq!(sq.rat(), &Rational::from(3));
        let a = QSqrtQ::sqrt_multiple(r(1, 2), 2);
        let b = QSqrtQ::sqrt_multiple(r(5, 7), 2);
        assert_eq!(&a * &b, QSqrtQ::rational(r(5, 7)));
    }

    #[test]
    fn perfect_square_stays_formal() {
        let s = QSqrtQ::sqrt(4);
        assert!(!s.is_rational());
        assert_eq!((&s * &s).rat(), &Rational::from(4));
    }

    #[test]
    fn mismatched_radicands_do_not_combine() {
        let a = QSqrtQ::sqrt(2);
        let b = QSqrtQ::sqrt(3);
        assert!(matches!(
            a.try_add(&b),
            Err(AlgebraError::MismatchedRadicand { left: 2, right: 3 })
        ));
        // unbound rationals combine with anything
        let c = QSqrtQ::rational(r(1, 3));
        assert_eq!(c.try_mul(&b).unwrap().radicand(), 3);
    }

    #[test]
    fn inverse() {
        let x = QSqrtQ::new(r(1, 1), r(1, 1), 2);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, QSqrtQ::rational(Rational::one()));
        // 2 - √4 has zero norm
        assert!(QSqrtQ::new(r(2, 1), r(1, 1), 4).inverse().is_none());
    }
}
