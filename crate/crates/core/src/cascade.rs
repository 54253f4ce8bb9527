//! Scaling functions by the cascade algorithm.
//!
//! The refinement equation is `φ(t) = q·Σ_k c̃(k) φ(Mt − k)`. Starting from
//! the box `1[s, s+1)`, `J` steps give a function that is constant on
//! cells of width `M^(−J)`, with cell values `a_J(n)` satisfying
//! `a_{j+1}(n) = Σ_k a_j(k)·mask(n − Mk)`, `a_0 = δ`, `mask = q·c̃`. The
//! cell of `a_J(n)` starts at `t = (n + s)/M^J`. This part of the crate
//! runs in binary64.

use std::io::Write;
use std::path::Path;

use num_bigint::BigInt;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::filterkit::{accuracy, Filter, Role};

/// Upper bound on the number of samples of a single run.
const MAX_SAMPLES: u128 = 1 << 26;

#[derive(Debug, Clone, PartialEq)]
pub struct CascadeResult {
    dilation: u32,
    iterations: u32,
    shift: i64,
    first: i64,
    values: Vec<f64>,
    /// `sup |φ_j − φ_{j−1}|` on the grid of `φ_{j−1}`, for `j = 1, …, J`.
    pub deltas: Vec<f64>,
}

impl CascadeResult {
    pub fn dilation(&self) -> u32 {
        self.dilation
    }

    pub fn iterations(&self) -> u32 {
        self.iterations
    }

    /// Left end `s` of the seed box.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Grid step `M^(−J)`.
    pub fn step(&self) -> Rational {
        Rational::from_big(BigInt::from(1), BigInt::from(self.dilation).pow(self.iterations))
            .expect("non-zero step")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(t, φ_J(t))` at the left end of every cell, in increasing `t`.
    pub fn samples(&self) -> Vec<(Rational, f64)> {
        let step = self.step();
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| (&Rational::from(self.first + i as i64 + self.shift) * &step, v))
            .collect()
    }

    /// `max_t |Σ_k φ_J(t − k) − 1|` over the grid.
    pub fn partition_of_unity_error(&self) -> f64 {
        let period = (self.dilation as usize).pow(self.iterations);
        let mut sums = vec![0.0f64; period];
        for (i, &v) in self.values.iter().enumerate() {
            let n = self.first + i as i64;
            sums[n.rem_euclid(period as i64) as usize] += v;
        }
        sums.iter().map(|s| (s - 1.0).abs()).fold(0.0, f64::max)
    }

    /// Discrete integral `M^(−J)·Σ φ_J`.
    pub fn mass(&self) -> f64 {
        let step = (self.dilation as f64).powi(-(self.iterations as i32));
        step * self.values.iter().sum::<f64>()
    }
}

struct Seq {
    first: i64,
    values: Vec<f64>,
}

impl Seq {
    fn get(&self, n: i64) -> f64 {
        usize::try_from(n - self.first).ok().and_then(|i| self.values.get(i)).copied().unwrap_or(0.0)
    }

    fn last(&self) -> i64 {
        self.first + self.values.len() as i64 - 1
    }
}

fn subdivide(a: &Seq, mask: &[(i64, f64)], m: i64) -> Seq {
    let (kmin, kmax) = (mask[0].0, mask[mask.len() - 1].0);
    let first = m * a.first + kmin;
    let last = m * a.last() + kmax;
    let mut values = vec![0.0; (last - first + 1) as usize];
    for (i, &ak) in a.values.iter().enumerate() {
        let base = m * (a.first + i as i64) - first;
        for &(k, c) in mask {
            values[(base + k) as usize] += ak * c;
        }
    }
    Seq { first, values }
}

/// Runs `iterations` cascade steps for the lowpass `c`.
pub fn cascade_run(c: &Filter, iterations: u32) -> Result<CascadeResult> {
    if iterations == 0 {
        return Err(Error::NoIterations);
    }
    if c.role() != Role::Lowpass {
        return Err(Error::NotRefinable("filter is not lowpass"));
    }
    if accuracy(c)? == 0 {
        return Err(Error::NotRefinable("filter has zero accuracy, so the iteration has no L² limit"));
    }
    let m = c.dilation() as i64;
    let (kmin, kmax) = c.support().expect("a lowpass filter is non-zero");
    let width = (kmax - kmin) as u128;
    let total = width * (m as u128).saturating_pow(iterations) / (m as u128 - 1) + 1;
    if total > MAX_SAMPLES || (m as u128).checked_pow(iterations).is_none() {
        return Err(Error::CascadeTooLarge(total));
    }

    let q = c.q() as f64;
    let mask: Vec<(i64, f64)> = c.taps().iter().map(|(&k, v)| (k, q * v.to_f64())).collect();
    // φ is supported on [kmin, kmax]/(M − 1); seed the box next to its centre.
    let shift = (kmin + kmax).div_euclid(2 * (m - 1));

    let mut a = Seq { first: 0, values: vec![1.0] };
    let mut deltas = Vec::with_capacity(iterations as usize);
    for _ in 0..iterations {
        let next = subdivide(&a, &mask, m);
        // the coarse cell p starts where the fine cell M·p + (M − 1)·s does
        let lo = a.first.min((next.first - (m - 1) * shift).div_euclid(m));
        let hi = a.last().max((next.last() - (m - 1) * shift).div_euclid(m) + 1);
        let delta = (lo..=hi)
            .map(|p| (next.get(m * p + (m - 1) * shift) - a.get(p)).abs())
            .fold(0.0, f64::max);
        deltas.push(delta);
        a = next;
    }

    Ok(CascadeResult {
        dilation: c.dilation(),
        iterations,
        shift,
        first: a.first,
        values: a.values,
        deltas,
    })
}

fn format_t(t: &Rational) -> String {
    t.to_terminating_decimal().unwrap_or_else(|| t.to_f64().to_string())
}

/// Writes `t,value` rows: `t` as an exact decimal where one exists (always
/// for `M = 2`), values in shortest round-trip form.
pub fn write_plot_csv<W: Write>(writer: W, r: &CascadeResult) -> Result<()> {
    if r.is_empty() {
        return Err(Error::EmptyCascade);
    }
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["t", "value"])?;
    for (t, v) in r.samples() {
        w.write_record([format_t(&t), v.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn export_plot_csv(r: &CascadeResult, path: &Path) -> Result<()> {
    if r.is_empty() {
        return Err(Error::EmptyCascade);
    }
    let file = std::fs::File::create(path)?;
    write_plot_csv(std::io::BufWriter::new(file), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bezout::find_cofilter;
    use crate::committee::committee_dual;
    use crate::filterkit::{burt_adelson, delta, haar, haar_analysis};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn haar_is_a_box() {
        for h in [haar(), haar_analysis()] {
            let res = cascade_run(&h, 8).unwrap();
            assert_eq!(res.deltas, vec![0.0; 8]);
            assert_eq!(res.len(), 256);
            assert!(res.values().iter().all(|&v| v == 1.0));
            let s = res.samples();
            assert_eq!(s[0].0, Rational::from(res.shift()));
            assert_eq!(s[255].0, &Rational::from(res.shift() + 1) - &r(1, 256));
        }
        assert_eq!(cascade_run(&haar(), 1).unwrap().shift(), 0);
        assert_eq!(cascade_run(&haar_analysis(), 1).unwrap().shift(), -1);
    }

    #[test]
    fn interpolatory_filter_gives_the_hat() {
        let res = cascade_run(&burt_adelson(r(1, 2)), 8).unwrap();
        let err = res
            .samples()
            .iter()
            .map(|(t, v)| (v - (1.0 - t.to_f64().abs()).max(0.0)).abs())
            .fold(0.0, f64::max);
        assert!(err < 1e-9, "{err}");
        assert!(res.deltas.iter().all(|&d| d < 1e-12));
    }

    #[test]
    fn burt_adelson_and_dual_converge() {
        let h = burt_adelson(r(3, 5));
        let d = committee_dual(&h, &find_cofilter(&h).unwrap(), &h).unwrap().d;
        for c in [&h, &d] {
            for j in 6..=10 {
                let res = cascade_run(c, j).unwrap();
                assert_eq!(res.deltas.len(), j as usize);
                let n = res.deltas.len();
                let tail = &res.deltas[n - 3..];
                assert!(tail[0] > tail[1] && tail[1] > tail[2], "{:?}", res.deltas);
                assert!(res.partition_of_unity_error() < 1e-6);
                assert!((res.mass() - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn dilation_three_samples() {
        let h3 = Filter::tilde(3, [(-2, r(1, 9)), (-1, r(2, 9)), (0, r(3, 9)), (1, r(2, 9)), (2, r(1, 9))])
            .unwrap();
        let res = cascade_run(&h3, 4).unwrap();
        assert!((res.mass() - 1.0).abs() < 1e-9);
        assert!(res.partition_of_unity_error() < 1e-9);
        let ts: Vec<_> = res.samples().into_iter().map(|(t, _)| t).collect();
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(format_t(&r(1, 3)), (1.0f64 / 3.0).to_string());
    }

    #[test]
    fn refusals() {
        assert!(matches!(cascade_run(&delta(2), 4), Err(Error::NotRefinable(_))));
        assert!(matches!(cascade_run(&haar(), 0), Err(Error::NoIterations)));
        assert!(matches!(cascade_run(&haar(), 60), Err(Error::CascadeTooLarge(_))));
        let hp = Filter::tilde(2, [(0, r(1, 2)), (1, r(-1, 2))]).unwrap();
        assert!(matches!(cascade_run(&hp, 3), Err(Error::NotRefinable(_))));
    }

    #[test]
    fn csv_is_deterministic() {
        let res = cascade_run(&haar(), 2).unwrap();
        let mut a = Vec::new();
        write_plot_csv(&mut a, &res).unwrap();
        assert_eq!(String::from_utf8(a.clone()).unwrap(), "t,value\n0,1\n0.25,1\n0.5,1\n0.75,1\n");
        let mut b = Vec::new();
        write_plot_csv(&mut b, &cascade_run(&haar(), 2).unwrap()).unwrap();
        assert_eq!(a, b);
        let empty = CascadeResult { dilation: 2, iterations: 1, shift: 0, first: 0, values: vec![], deltas: vec![0.0] };
        assert!(matches!(write_plot_csv(Vec::new(), &empty), Err(Error::EmptyCascade)));
    }
}
