use std::collections::BTreeMap;
use std::io::{Read, Write};

use crate::algebra::{LaurentPoly, QSqrtQ, Rational, Scalar};
use crate::error::{Error, Result};
use crate::filterkit::Filter;

use super::{LaurentMatrix, LpPair};

/// Finitely supported signal on the integers.
#[derive(Clone, PartialEq)]
pub struct Signal<S> {
    samples: BTreeMap<i64, S>,
}

impl<S: Scalar> Signal<S> {
    pub fn zero() -> Self {
        Signal { samples: BTreeMap::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, S)>>(terms: I) -> Self {
        let mut s = Signal::zero();
        for (n, v) in terms {
            s.add_at(n, v);
        }
        s
    }

    /// Consecutive samples starting at index `start`.
    pub fn from_samples<I: IntoIterator<Item = S>>(start: i64, values: I) -> Self {
        Signal::from_terms(values.into_iter().enumerate().map(|(i, v)| (start + i as i64, v)))
    }

    fn add_at(&mut self, n: i64, v: S) {
        let sum = match self.samples.remove(&n) {
            Some(old) => old + &v,
            None => v,
        };
        if !sum.is_zero() {
            self.samples.insert(n, sum);
        }
    }

    pub fn get(&self, n: i64) -> S {
        self.samples.get(&n).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &S)> + '_ {
        self.samples.iter().map(|(&n, v)| (n, v))
    }

    pub fn is_zero(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.samples.keys().next()?, *self.samples.keys().next_back()?))
    }

    pub fn map<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> Signal<T> {
        Signal::from_terms(self.iter().map(|(n, v)| (n, f(v))))
    }

    /// `X(z) = Σ x(n) z^(−n)`.
    pub fn z_transform(&self) -> LaurentPoly<S> {
        LaurentPoly::from_terms(self.iter().map(|(n, v)| (-n, v.clone())))
    }

    pub fn from_z_transform(p: &LaurentPoly<S>) -> Self {
        Signal::from_terms(p.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// `(c * x)(n) = Σ_k c(k) x(n − k)`.
    pub fn convolve(&self, taps: &[(i64, S)]) -> Self {
        let mut out = Signal::zero();
        for (k, c) in taps {
            for (n, x) in self.iter() {
                out.add_at(n + k, c.clone() * x);
            }
        }
        out
    }

    /// `y(n) = x(Mn)`.
    pub fn downsample(&self, m: u32) -> Self {
        let m = m as i64;
        Signal::from_terms(
            self.iter().filter(|(n, _)| n.rem_euclid(m) == 0).map(|(n, v)| (n / m, v.clone())),
        )
    }

    /// `y(Mn) = x(n)`, zero elsewhere.
    pub fn upsample(&self, m: u32) -> Self {
        Signal::from_terms(self.iter().map(|(n, v)| (n * m as i64, v.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, v) in other.iter() {
            out.add_at(n, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, v) in other.iter() {
            out.add_at(n, -v.clone());
        }
        out
    }
}

impl Signal<Rational> {
    pub fn lift(&self) -> Signal<QSqrtQ> {
        self.map(|c| QSqrtQ::rational(c.clone()))
    }
}

impl Signal<QSqrtQ> {
    /// The rational signal, if no sample has a `√q` part.
    pub fn to_rational(&self) -> Option<Signal<Rational>> {
        if self.iter().all(|(_, v)| v.is_rational()) {
            Some(self.map(|v| v.rat().clone()))
        } else {
            None
        }
    }
}

impl<S: std::fmt::Debug> std::fmt::Debug for Signal<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.samples.iter()).finish()
    }
}

/// `X_ν(z) = Σ_m x(Mm + ν) z^(−m)` for `ν = 0, …, M−1`.
pub fn signal_polyphase<S: Scalar>(x: &Signal<S>, m: u32) -> Vec<LaurentPoly<S>> {
    let mm = m as i64;
    let mut parts = vec![Vec::new(); m as usize];
    for (n, v) in x.iter() {
        let nu = n.rem_euclid(mm);
        parts[nu as usize].push((-(n - nu) / mm, v.clone()));
    }
    parts.into_iter().map(LaurentPoly::from_terms).collect()
}

pub fn signal_from_polyphase<S: Scalar>(parts: &[LaurentPoly<S>], m: u32) -> Signal<S> {
    let mm = m as i64;
    Signal::from_terms(parts.iter().enumerate().flat_map(|(nu, p)| {
        p.terms().map(move |(e, c)| (-e * mm + nu as i64, c.clone())).collect::<Vec<_>>()
    }))
}

/// Channel outputs `A·X` of an analysis matrix acting on the polyphase
/// components of `x`.
pub fn apply_analysis(a: &LaurentMatrix, x: &Signal<QSqrtQ>, m: u32) -> Result<Vec<Signal<QSqrtQ>>> {
    let out = a.apply(&signal_polyphase(x, m))?;
    Ok(out.iter().map(Signal::from_z_transform).collect())
}

/// Signal whose polyphase components are `S·Y` for channel signals `Y`.
pub fn apply_synthesis(s: &LaurentMatrix, channels: &[Signal<QSqrtQ>], m: u32) -> Result<Signal<QSqrtQ>> {
    let ys: Vec<_> = channels.iter().map(Signal::z_transform).collect();
    Ok(signal_from_polyphase(&s.apply(&ys)?, m))
}

/// Output of one pyramid level: the coarse approximation `c` and the
/// full-rate detail `d = x − prediction(c)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpAnalysis {
    pub coarse: Signal<QSqrtQ>,
    pub detail: Signal<QSqrtQ>,
}

fn semantic(f: &Filter) -> Vec<(i64, QSqrtQ)> {
    f.semantic_taps()
}

fn predict(pair: &LpPair, coarse: &Signal<QSqrtQ>) -> Signal<QSqrtQ> {
    coarse.upsample(pair.dilation()).convolve(&semantic(pair.g()))
}

/// `c(n) = Σ_k h(k) x(Mn − k)` and `d = x − Σ_l g(· − Ml) c(l)`.
pub fn lp_analyze(x: &Signal<QSqrtQ>, pair: &LpPair) -> LpAnalysis {
    let coarse = x.convolve(&semantic(pair.h())).downsample(pair.dilation());
    let detail = x.sub(&predict(pair, &coarse));
    LpAnalysis { coarse, detail }
}

/// Prediction from the coarse signal plus the detail.
pub fn lp_synthesize_trivial(coarse: &Signal<QSqrtQ>, detail: &Signal<QSqrtQ>, pair: &LpPair) -> Signal<QSqrtQ> {
    predict(pair, coarse).add(detail)
}

/// Reads an exact `index,value` CSV with rational values.
pub fn read_signal_csv<R: Read>(reader: R) -> Result<Signal<Rational>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let mut terms = Vec::new();
    for record in rdr.records() {
        let record = record?;
        if record.len() != 2 {
            return Err(Error::Format(format!("expected index,value, got {} fields", record.len())));
        }
        let n: i64 = record[0]
            .parse()
            .map_err(|_| Error::Format(format!("bad index {:?}", &record[0])))?;
        let v: Rational = record[1].parse()?;
        terms.push((n, v));
    }
    Ok(Signal::from_terms(terms))
}

pub fn write_signal_csv<W: Write>(writer: W, x: &Signal<Rational>) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["index", "value"])?;
    for (n, v) in x.iter() {
        w.write_record([n.to_string(), v.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_signal_float_csv<W: Write, S: Scalar>(writer: W, x: &Signal<S>) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["index", "value"])?;
    for (n, v) in x.iter() {
        w.write_record([n.to_string(), v.to_f64().to_string()])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filterkit::burt_adelson;
    use crate::pyramid::{build_alp, build_s0};
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn ba_pair() -> LpPair {
        LpPair::new(burt_adelson(r(3, 5)), burt_adelson(r(1, 2))).unwrap()
    }

    #[test]
    fn polyphase_round_trip() {
        let x = Signal::from_samples(-3, (1..=7).map(|k| r(k, 3)));
        let parts = signal_polyphase(&x, 2);
        assert_eq!(parts[0].coeff(1), r(2, 3)); // x(-2)
        assert_eq!(parts[1].coeff(2), r(1, 3)); // x(-3)
        assert_eq!(signal_from_polyphase(&parts, 2), x);
        assert_eq!(signal_from_polyphase(&signal_polyphase(&x, 3), 3), x);
    }

    #[test]
    fn sampling_and_convolution() {
        let x = Signal::from_samples(0, [r(1, 1), r(2, 1), r(3, 1)]);
        assert_eq!(x.downsample(2), Signal::from_terms([(0, r(1, 1)), (1, r(3, 1))]));
        assert_eq!(x.upsample(2).downsample(2), x);
        let y = x.convolve(&[(1, r(1, 1)), (-1, r(-1, 1))]);
        assert_eq!(y, Signal::from_terms([(-1, r(-1, 1)), (0, r(-2, 1)), (1, r(-2, 1)), (2, r(2, 1)), (3, r(3, 1))]));
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn csv_round_trip() {
        let x = Signal::from_terms([(-2, r(1, 3)), (5, r(-7, 2))]);
        let mut buf = Vec::new();
        write_signal_csv(&mut buf, &x).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "index,value\n-2,1/3\n5,-7/2\n");
        assert_eq!(read_signal_csv(buf.as_slice()).unwrap(), x);
        assert!(read_signal_csv("index,value\n1,0.5\n".as_bytes()).is_err());
        let mut fbuf = Vec::new();
        write_signal_float_csv(&mut fbuf, &x).unwrap();
        assert!(String::from_utf8(fbuf).unwrap().contains("5,-3.5"));
    }

    fn arb_signal() -> impl Strategy<Value = Signal<Rational>> {
        (-5i64..5, prop::collection::vec((-9i64..=9, 1i64..=5), 0..12))
            .prop_map(|(start, v)| Signal::from_samples(start, v.into_iter().map(|(n, d)| r(n, d))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn signal_domain_matches_polyphase(x in arb_signal()) {
            let pair = ba_pair();
            let x = x.lift();
            let direct = lp_analyze(&x, &pair);
            let channels = apply_analysis(&build_alp(&pair), &x, 2).unwrap();
            prop_assert_eq!(&channels[0], &direct.coarse);
            let detail = signal_from_polyphase(
                &channels[1..].iter().map(Signal::z_transform).collect::<Vec<_>>(), 2);
            prop_assert_eq!(&detail, &direct.detail);
            let back = apply_synthesis(&build_s0(&pair), &channels, 2).unwrap();
            prop_assert_eq!(&back, &x);
            prop_assert_eq!(lp_synthesize_trivial(&direct.coarse, &direct.detail, &pair), x);
        }

        #[test]
        fn z_transform_round_trip(x in arb_signal()) {
            prop_assert_eq!(Signal::from_z_transform(&x.z_transform()), x);
        }
    }
}
