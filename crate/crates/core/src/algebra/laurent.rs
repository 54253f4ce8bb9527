use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AlgebraError, Field, Scalar};

/// Finitely supported polynomial in `z` and `z⁻¹`.
///
/// Stored sparsely as exponent → coefficient; zero coefficients are never
/// stored, so the empty map is the zero polynomial and structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<S> {
    terms: BTreeMap<i64, S>,
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·z^exp`.
    pub fn monomial(c: S, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, S)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// `coeffs[i]` is the coefficient of `z^(lo + i)`.
    pub fn from_dense(lo: i64, coeffs: Vec<S>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (lo + i as i64, c)))
    }

    fn add_term(&mut self, exp: i64, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exactly one non-zero term. Over a field these are the units of the ring.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }

    pub fn coeff(&self, exp: i64) -> S {
        self.terms.get(&exp).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &S)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn lo(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn hi(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `hi − lo`, i.e. the degree after stripping the monomial unit.
    pub fn width(&self) -> Option<i64> {
        Some(self.hi()? - self.lo()?)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v.clone() * c)))
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// `p(z⁻¹)`.
    pub fn reflect(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// `p(z^m)`.
    pub fn dilate(&self, m: u32) -> Self {
        let m = m as i64;
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e * m, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn map<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> LaurentPoly<T> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&k, c)| (k, f(c))))
    }

    /// Sum of coefficients, i.e. the value at `z = 1`.
    pub fn coeff_sum(&self) -> S {
        self.terms.values().fold(S::zero(), |acc, c| acc + c)
    }
}

impl<S: Field> LaurentPoly<S> {
    /// Exact value `Σ c_k x^k`; `x = 0` is rejected.
    pub fn eval(&self, x: &S) -> Result<S, AlgebraError> {
        let inv = x.inv().ok_or(AlgebraError::EvalAtZero)?;
        let mut acc = S::zero();
        for (&k, c) in &self.terms {
            let base = if k < 0 { &inv } else { x };
            let mut pw = S::one();
            for _ in 0..k.unsigned_abs() {
                pw = pw * base;
            }
            acc = acc + c.clone() * &pw;
        }
        Ok(acc)
    }
}

impl<S: Scalar> Default for LaurentPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<'a, 'b, S: Scalar> Add<&'b LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: &'b LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a, 'b, S: Scalar> Sub<&'b LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: &'b LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl<'a, 'b, S: Scalar> Mul<&'b LaurentPoly<S>> for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: &'b LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &rhs.terms {
                out.add_term(i + j, a.clone() * b);
            }
        }
        out
    }
}

impl<'a, S: Scalar> Neg for &'a LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        LaurentPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect() }
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl<S: Scalar> $Trait for LaurentPoly<S> {
            type Output = LaurentPoly<S>;
            fn $method(self, rhs: LaurentPoly<S>) -> LaurentPoly<S> {
                $Trait::$method(&self, &rhs)
            }
        }
        impl<'a, S: Scalar> $Trait<&'a LaurentPoly<S>> for LaurentPoly<S> {
            type Output = LaurentPoly<S>;
            fn $method(self, rhs: &'a LaurentPoly<S>) -> LaurentPoly<S> {
                $Trait::$method(&self, rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<S: Scalar> Neg for LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        -&self
    }
}

impl<S: Scalar + Serialize> Serialize for LaurentPoly<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            map.serialize_entry(&k.to_string(), c)?;
        }
        map.end()
    }
}

impl<'de, S: Scalar + Deserialize<'de>> Deserialize<'de> for LaurentPoly<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor<S>(std::marker::PhantomData<S>);

        impl<'de, S: Scalar + Deserialize<'de>> Visitor<'de> for PolyVisitor<S> {
            type Value = LaurentPoly<S>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from integer exponents to coefficients")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut terms = Vec::new();
                while let Some((k, c)) = access.next_entry::<String, S>()? {
                    let k: i64 = k
                        .trim()
                        .parse()
                        .map_err(|_| serde::de::Error::custom(format!("bad exponent {k:?}")))?;
                    terms.push((k, c));
                }
                Ok(LaurentPoly::from_terms(terms))
            }
        }

        deserializer.deserialize_map(PolyVisitor(std::marker::PhantomData))
    }
}
