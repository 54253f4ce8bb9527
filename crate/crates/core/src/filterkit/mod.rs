//! FIR filters, their polyphase decompositions and spectral predicates.
//!
//! A [`Filter`] stores exact rational taps together with a
//! [`Normalization`]: lowpass filters are kept in √q-normalized ("tilde")
//! form, so the semantic filter is `√q·taps` and lowpass taps sum to 1.

mod families;
mod polyphase;
mod spectral;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPoly, QSqrtQ, Rational, Scalar};
use crate::error::{Error, Result};

pub use families::{burt_adelson, burt_adelson_cofilter, delta, haar, haar_analysis};
pub use polyphase::{
    from_polyphase, polyphase_analysis, polyphase_synthesis, recombine, Convention, Polyphase,
};
pub use spectral::{accuracy, has_unit_phase, is_biorthogonal, vanishing_moments};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Lowpass,
    Highpass,
    General,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Lowpass => "lowpass",
            Role::Highpass => "highpass",
            Role::General => "general",
        }
    }
}

/// How stored taps relate to the semantic filter coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    /// Semantic coefficients are `√q·taps`.
    #[serde(rename = "sqrt-q")]
    SqrtQ,
    /// Semantic coefficients are the taps themselves.
    #[serde(rename = "none")]
    Unit,
}

/// FIR filter over an integer dilation `M ≥ 2`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FilterRepr", into = "FilterRepr")]
pub struct Filter {
    dilation: u32,
    taps: BTreeMap<i64, Rational>,
    normalization: Normalization,
    role: Role,
}

impl Filter {
    /// Validates the dilation and that `role` agrees with the tap sum.
    pub fn new<I>(dilation: u32, taps: I, normalization: Normalization, role: Role) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let filter = Filter::build(dilation, taps, normalization, role)?;
        filter.check_role()?;
        Ok(filter)
    }

    /// √q-normalized taps with the role read off the tap sum.
    pub fn tilde<I>(dilation: u32, taps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        Filter::with_inferred_role(dilation, taps, Normalization::SqrtQ)
    }

    pub fn with_inferred_role<I>(dilation: u32, taps: I, normalization: Normalization) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut filter = Filter::build(dilation, taps, normalization, Role::General)?;
        filter.role = filter.inferred_role();
        Ok(filter)
    }

    fn build<I>(dilation: u32, taps: I, normalization: Normalization, role: Role) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        if dilation < 2 {
            return Err(Error::InvalidDilation(dilation));
        }
        let mut map = BTreeMap::new();
        for (k, c) in taps {
            let entry = map.entry(k).or_insert_with(Rational::zero);
            *entry = &*entry + &c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Filter { dilation, taps: map, normalization, role })
    }

    fn check_role(&self) -> Result<()> {
        let sum = self.tap_sum();
        match self.role {
            Role::Lowpass if self.normalization != Normalization::SqrtQ || !sum.is_one() => {
                Err(Error::RoleMismatch { role: "lowpass", expected: "1 in √q-normalized form", sum })
            }
            Role::Highpass if !sum.is_zero() => {
                Err(Error::RoleMismatch { role: "highpass", expected: "0", sum })
            }
            _ => Ok(()),
        }
    }

    fn inferred_role(&self) -> Role {
        let sum = self.tap_sum();
        if self.taps.is_empty() {
            Role::General
        } else if sum.is_zero() {
            Role::Highpass
        } else if sum.is_one() && self.normalization == Normalization::SqrtQ {
            Role::Lowpass
        } else {
            Role::General
        }
    }

    pub fn dilation(&self) -> u32 {
        self.dilation
    }

    /// Number of polyphase phases; equals the dilation in one dimension.
    pub fn q(&self) -> usize {
        self.dilation as usize
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn taps(&self) -> &BTreeMap<i64, Rational> {
        &self.taps
    }

    pub fn tap(&self, k: i64) -> Rational {
        self.taps.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Count of non-zero taps.
    pub fn tap_count(&self) -> usize {
        self.taps.len()
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.taps.keys().next()?, *self.taps.keys().next_back()?))
    }

    pub fn tap_sum(&self) -> Rational {
        self.taps.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.taps.is_empty()
    }

    /// Factor turning stored taps into semantic coefficients.
    pub fn scale(&self) -> QSqrtQ {
        match self.normalization {
            Normalization::SqrtQ => QSqrtQ::sqrt(self.dilation),
            Normalization::Unit => QSqrtQ::one(),
        }
    }

    /// `Σ taps(k)·z^(−k)` on the stored taps.
    pub fn z_transform(&self) -> LaurentPoly<Rational> {
        LaurentPoly::from_terms(self.taps.iter().map(|(&k, c)| (-k, c.clone())))
    }

    /// Semantic coefficients `scale·taps(k)`, keyed by tap index.
    pub fn semantic_taps(&self) -> Vec<(i64, QSqrtQ)> {
        let s = self.scale();
        self.taps.iter().map(|(&k, c)| (k, QSqrtQ::rational(c.clone()) * &s)).collect()
    }

    /// Time reversal `k ↦ −k`.
    pub fn reversed(&self) -> Filter {
        Filter {
            dilation: self.dilation,
            taps: self.taps.iter().map(|(&k, c)| (-k, c.clone())).collect(),
            normalization: self.normalization,
            role: self.role,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("filter serializes")
    }

    pub fn from_json(s: &str) -> Result<Filter> {
        Ok(serde_json::from_str(s)?)
    }
}

impl std::fmt::Debug for Filter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Filter(M={}, {:?}, {:?}, {{", self.dilation, self.normalization, self.role)?;
        for (i, (k, c)) in self.taps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}: {c}")?;
        }
        write!(f, "}})")
    }
}

#[derive(Serialize, Deserialize)]
struct FilterRepr {
    dilation: u32,
    normalization: Normalization,
    taps: LaurentPoly<Rational>,
    role: Role,
}

impl TryFrom<FilterRepr> for Filter {
    type Error = Error;

    fn try_from(r: FilterRepr) -> Result<Filter> {
        let taps: Vec<_> = r.taps.terms().map(|(k, c)| (k, c.clone())).collect();
        Filter::new(r.dilation, taps, r.normalization, r.role)
    }
}

impl From<Filter> for FilterRepr {
    fn from(f: Filter) -> FilterRepr {
        FilterRepr {
            dilation: f.dilation,
            normalization: f.normalization,
            taps: LaurentPoly::from_terms(f.taps),
            role: f.role,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn role_validation() {
        assert!(Filter::new(2, [(0, r(1, 2)), (1, r(1, 2))], Normalization::SqrtQ, Role::Lowpass).is_ok());
        assert!(matches!(
            Filter::new(2, [(0, r(1, 2))], Normalization::SqrtQ, Role::Lowpass),
            Err(Error::RoleMismatch { .. })
        ));
        assert!(matches!(
            Filter::new(2, [(0, r(1, 2)), (1, r(1, 2))], Normalization::Unit, Role::Lowpass),
            Err(Error::RoleMismatch { .. })
        ));
        assert!(Filter::new(2, [(0, r(1, 2)), (1, r(-1, 2))], Normalization::SqrtQ, Role::Highpass).is_ok());
        assert!(matches!(Filter::tilde(1, [(0, r(1, 1))]), Err(Error::InvalidDilation(1))));
    }

    #[test]
    fn zero_taps_are_dropped() {
        let f = Filter::tilde(2, [(-3, r(0, 1)), (0, r(1, 1)), (4, r(0, 1))]).unwrap();
        assert_eq!(f.tap_count(), 1);
        assert_eq!(f.support(), Some((0, 0)));
        assert_eq!(f.role(), Role::Lowpass);
    }

    #[test]
    fn json_shape() {
        let f = burt_adelson(r(3, 5));
        let v: serde_json::Value = serde_json::from_str(&f.to_json()).unwrap();
        assert_eq!(v["dilation"], 2);
        assert_eq!(v["normalization"], "sqrt-q");
        assert_eq!(v["role"], "lowpass");
        assert_eq!(v["taps"]["-2"], "-1/20");
        assert_eq!(v["taps"]["0"], "3/5");
        assert_eq!(Filter::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn json_rejects_inconsistent_role() {
        let bad = r#"{"dilation":2,"normalization":"sqrt-q","taps":{"0":"1/2"},"role":"lowpass"}"#;
        assert!(Filter::from_json(bad).is_err());
        let decimal = r#"{"dilation":2,"normalization":"sqrt-q","taps":{"0":"0.5","1":"1/2"},"role":"lowpass"}"#;
        assert!(Filter::from_json(decimal).is_err());
    }
}
