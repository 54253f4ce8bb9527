use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use dualfb_core::algebra::Rational;
use dualfb_core::bezout::{find_cofilter, unit_phase_cofilter, validate_cofilter, CofilterReport};
use dualfb_core::cascade::{cascade_run, export_plot_csv};
use dualfb_core::committee::{committee_dual, DualDiagnostics};
use dualfb_core::completion::{complete_fb, verify_wavelet_fb, FilterBank, WaveletReport};
use dualfb_core::filterkit::{accuracy, burt_adelson, burt_adelson_cofilter, Filter};
use dualfb_core::Error;

use crate::exit::CliError;
use crate::{CascadeArgs, DesignArgs, Family, SweepArgs};

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load_filter(path: &Path) -> Result<Filter, CliError> {
    let text = read_file(path)?;
    Filter::from_json(&text).map_err(|source| CliError::Input { path: path.display().to_string(), source })
}

/// Prints a report; a closed stdout (e.g. `| head`) is not an error.
fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

#[derive(Serialize)]
struct FilterSummary {
    taps: usize,
    support: Option<(i64, i64)>,
    accuracy: u32,
}

impl FilterSummary {
    fn of(f: &Filter) -> Result<Self, CliError> {
        Ok(FilterSummary { taps: f.tap_count(), support: f.support(), accuracy: accuracy(f)? })
    }
}

#[derive(Serialize)]
struct CofilterSummary {
    source: &'static str,
    #[serde(flatten)]
    report: CofilterReport,
    filter: Filter,
}

#[derive(Serialize)]
struct DesignReport {
    dilation: u32,
    h: FilterSummary,
    g: FilterSummary,
    cofilter: CofilterSummary,
    dual: DualDiagnostics,
    beta1: u32,
    beta2: u32,
    d: Filter,
    filterbank: WaveletReport,
}

pub fn design(args: DesignArgs) -> Result<(), CliError> {
    let h = match (&args.h, args.family, &args.a) {
        (Some(path), _, _) => load_filter(path)?,
        (None, Some(Family::BurtAdelson), Some(a)) => {
            // surfaces the singular parameter before the generic no-dual error
            burt_adelson_cofilter(a.clone())?;
            burt_adelson(a.clone())
        }
        _ => return Err(CliError::Usage("give either --h FILE or --family with --a".into())),
    };
    let g = if args.g == "same-as-h" { h.clone() } else { load_filter(Path::new(&args.g))? };

    let (source, f) = match &args.f {
        Some(path) => ("file", load_filter(path)?),
        None if h.dilation() == 2 => ("euclid", find_cofilter(&h)?),
        None => match unit_phase_cofilter(&h) {
            Some(f) => ("unit-phase", f),
            None => return Err(Error::UnsupportedDilation(h.dilation()).into()),
        },
    };
    let cofilter = CofilterSummary { source, report: validate_cofilter(&f, &h)?, filter: f.clone() };

    let dual = committee_dual(&h, &f, &g)?;
    let bank = complete_fb(&h, &f, &g)?;
    let filterbank = verify_wavelet_fb(&bank);

    if let Some(path) = &args.out {
        write_file(path, &(bank.to_json() + "\n"))?;
    }
    if let Some(path) = &args.dual_out {
        write_file(path, &(dual.d.to_json() + "\n"))?;
    }
    print_json(&DesignReport {
        dilation: h.dilation(),
        h: FilterSummary::of(&h)?,
        g: FilterSummary::of(&g)?,
        cofilter,
        dual: dual.diagnostics.clone(),
        beta1: dual.beta1,
        beta2: dual.beta2,
        d: dual.d,
        filterbank,
    });
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    passed: bool,
    #[serde(flatten)]
    report: WaveletReport,
}

pub fn verify(path: &Path) -> Result<(), CliError> {
    let text = read_file(path)?;
    let bank = FilterBank::from_json(&text)
        .map_err(|source| CliError::Input { path: path.display().to_string(), source })?;
    let report = verify_wavelet_fb(&bank);
    let passed = report.passed();
    print_json(&VerifyReport { passed, report });
    if passed {
        Ok(())
    } else {
        Err(CliError::VerifyFailed)
    }
}

#[derive(Serialize)]
struct CascadeSummary {
    iterations: u32,
    step: Rational,
    samples: usize,
    deltas: Vec<f64>,
    partition_of_unity_error: f64,
    mass: f64,
}

pub fn cascade(args: CascadeArgs) -> Result<(), CliError> {
    let filter = load_filter(&args.filter)?;
    let result = cascade_run(&filter, args.iters)?;
    export_plot_csv(&result, &args.out).map_err(|e| match e {
        Error::Io(source) => CliError::Io { path: args.out.display().to_string(), source },
        other => other.into(),
    })?;
    print_json(&CascadeSummary {
        iterations: result.iterations(),
        step: result.step(),
        samples: result.len(),
        partition_of_unity_error: result.partition_of_unity_error(),
        mass: result.mass(),
        deltas: result.deltas,
    });
    Ok(())
}

/// One sweep row; `None` fields are left empty in the CSV.
#[derive(Debug, Serialize)]
struct SweepRow {
    a: Rational,
    accuracy_f: Option<u32>,
    bound: Option<u32>,
    dual_taps: Option<usize>,
    dual_accuracy: Option<u32>,
    ok: bool,
    note: String,
}

fn sweep_row(a: Rational) -> SweepRow {
    let mut row =
        SweepRow { a: a.clone(), accuracy_f: None, bound: None, dual_taps: None, dual_accuracy: None, ok: false, note: String::new() };
    let f = match burt_adelson_cofilter(a.clone()) {
        Ok(f) => f,
        Err(Error::SingularParameter(_)) => {
            row.note = "singular".into();
            return row;
        }
        Err(e) => {
            row.note = e.to_string();
            return row;
        }
    };
    row.accuracy_f = accuracy(&f).ok();
    let h = burt_adelson(a);
    match committee_dual(&h, &f, &h) {
        Ok(res) => {
            row.bound = Some(res.bound);
            row.dual_taps = Some(res.diagnostics.taps);
            row.dual_accuracy = Some(res.diagnostics.accuracy);
            row.ok = res.diagnostics.biorthogonal && res.diagnostics.accuracy >= res.bound;
        }
        Err(e) => row.note = e.to_string(),
    }
    row
}

pub fn sweep(args: SweepArgs) -> Result<(), CliError> {
    let Family::BurtAdelson = args.family;
    if args.steps == 0 || args.a_from > args.a_to || (args.steps == 1 && args.a_from != args.a_to) {
        return Err(CliError::Usage(format!(
            "empty sweep: need a-from ≤ a-to and steps ≥ 2 (or steps = 1 with a-from = a-to), got {}..{} in {} steps",
            args.a_from, args.a_to, args.steps
        )));
    }
    let grid: Vec<Rational> = if args.steps == 1 {
        vec![args.a_from.clone()]
    } else {
        let span = &args.a_to - &args.a_from;
        let div = Rational::from(args.steps as i64 - 1);
        (0..args.steps as i64).map(|i| &args.a_from + &(&(&span * &Rational::from(i)) / &div)).collect()
    };
    // par_iter keeps the input order, so rows come out by ascending a
    let rows: Vec<SweepRow> = grid.into_par_iter().map(sweep_row).collect();

    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    for row in &rows {
        w.serialize(row).map_err(Error::from)?;
    }
    w.flush().map_err(Error::from)?;
    Ok(())
}
