//! Command-line front end: argument definitions and the job runner behind the `fracterp`
//! binary.
//!
//! Every run writes its result (to `--output` or stdout) together with a JSON provenance
//! block: embedded under `"provenance"` for JSON output, or in a sidecar
//! `<output>.provenance.json` (stderr when writing to stdout) for CSV output.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::dirichlet_interp::{
    default_dirichlet_policy, eta_integer_values, mellin_interpolate, reciprocal_zeta,
    reciprocal_zeta_samples, zeta_shifted, zeta_via_eta, DirichletSamples,
};
use crate::error::{Error, Result};
use crate::frac_calculus::{
    frac_derivative_fourier_series, frac_derivative_fourier_transform, frac_derivative_trig,
    newton_fractional_integral_scaled, riemann_liouville, NegativeFrequencyBranch, TrigKind,
};
use crate::frfrt::{
    alt_frft, figure_profiles, literature_frft, profile_rows, refined_translation_power,
    translation_counterexample, Signal,
};
use crate::io::{
    read_matrix_json, read_samples_csv, read_signal_csv, write_profile_csv,
    write_samples_csv, write_signal_csv, SignalTable,
};
use crate::operator_powers::{
    certify_spectrum, eigen_fractional_power_oracle, newton_matrix_power, periodic_matrix_power,
    shannon_matrix_power, CertificateKind, ComplexMatrix, Rho,
};
use crate::truncation::{SeriesOutcome, TruncationPolicy};

/// Parses `"re"` or `"re,im"`.
pub fn parse_complex(text: &str) -> std::result::Result<Complex64, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |s: &str| {
        s.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("expected a finite number, found {s:?}"))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected \"re\" or \"re,im\", found {text:?}")),
    }
}

fn parse_rho(text: &str) -> std::result::Result<Rho, String> {
    if text == "auto" {
        Ok(Rho::Auto)
    } else {
        parse_complex(text).map(Rho::Value)
    }
}

#[derive(Debug, Parser)]
#[command(name = "fracterp", version, about = "Fractional powers of operators by interpolating integer powers")]
pub struct Cli {
    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Series truncation options shared by the series-based subcommands.
#[derive(Debug, Clone, Args)]
pub struct SeriesArgs {
    /// Maximum number of series terms (and samples, where samples are generated).
    #[arg(long)]
    pub terms: Option<usize>,
    /// Tail tolerance: stop after `--window` consecutive terms below it.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Number of consecutive small terms required.
    #[arg(long, default_value_t = 3)]
    pub window: usize,
}

impl SeriesArgs {
    fn policy(&self, default: TruncationPolicy) -> Result<TruncationPolicy> {
        TruncationPolicy::new(
            self.terms.unwrap_or(default.max_terms()),
            self.tol.unwrap_or(default.abs_tol()),
            self.window,
        )
        .map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fractional power of a matrix given as JSON {"dim", "entries"}.
    Matpow {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_complex)]
        alpha: Complex64,
        #[arg(long, value_enum, default_value_t = MatpowMethod::Newton)]
        method: MatpowMethod,
        /// Newton scaling: "auto" or "re[,im]".
        #[arg(long, value_parser = parse_rho, default_value = "auto")]
        rho: Rho,
        /// Order N with T^N = I (periodic method).
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Fractional integral of a sampled signal (CSV x,re,im).
    Fracint {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_complex)]
        alpha: Complex64,
        #[arg(long, value_enum, default_value_t = FracintMethod::Newton)]
        method: FracintMethod,
        #[arg(long, value_parser = parse_complex, default_value = "1")]
        rho: Complex64,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Fractional derivative.
    Fracderiv {
        /// Signal CSV (fourier-series and fft methods).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = FracderivMethod::FourierSeries)]
        method: FracderivMethod,
        #[arg(long, value_enum, default_value_t = Branch::ImaginaryAxis)]
        branch: Branch,
        /// Frequency λ (trig method).
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[arg(long, value_enum, default_value_t = Kind::Sin)]
        kind: Kind,
    },
    /// Riemann zeta function through Newton interpolation.
    Zeta {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: Complex64,
        #[arg(long, value_enum, default_value_t = ZetaMethod::Eta)]
        method: ZetaMethod,
        /// Shift ε > 0 (shifted method).
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        /// Also write the sample table as CSV k,re,im,provenance.
        #[arg(long)]
        export_samples: Option<PathBuf>,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Γ(s)·g(s) from Mellin-transform samples M[f](k) (CSV k,re,im,provenance; row 0 holds
    /// the residue of M[f] at 0).
    Mellin {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        s: Complex64,
        #[command(flatten)]
        series: SeriesArgs,
    },
    /// Fractional Fourier transform of a centered signal (CSV x,re,im).
    Frft {
        #[arg(long)]
        input: PathBuf,
        /// Order α (alt method); the chirp method uses φ = απ/2 unless --phi is given.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        /// Rotation angle φ (chirp method).
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<f64>,
        #[arg(long, value_enum, default_value_t = FrftMethod::Alt)]
        method: FrftMethod,
    },
    /// Demonstrations built on the unit translation.
    Demo {
        #[command(subcommand)]
        which: Demo,
    },
}

#[derive(Debug, Subcommand)]
pub enum Demo {
    /// Sinc power of the unit translation applied to the box on [0, 1/2].
    Translation {
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        t: f64,
        /// Samples per unit length on [−8, 8].
        #[arg(long, default_value_t = 64)]
        grid: usize,
    },
    /// Refined powers (T_{1/k})^{kt} on a Gaussian or box.
    Refine {
        #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, default_value_t = 8)]
        k: usize,
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = RefineSignal::Gaussian)]
        signal: RefineSignal,
    },
    /// Long-form profiles of the box under both fractional Fourier transforms.
    Figures {
        #[arg(long, default_value_t = 1024)]
        points: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatpowMethod {
    Newton,
    Shannon,
    Periodic,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FracintMethod {
    Newton,
    Rl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FracderivMethod {
    FourierSeries,
    Fft,
    Trig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Branch {
    ImaginaryAxis,
    PrincipalProduct,
}

impl From<Branch> for NegativeFrequencyBranch {
    fn from(b: Branch) -> Self {
        match b {
            Branch::ImaginaryAxis => NegativeFrequencyBranch::ImaginaryAxis,
            Branch::PrincipalProduct => NegativeFrequencyBranch::PrincipalProduct,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Sin,
    Cos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ZetaMethod {
    Eta,
    Shifted,
    Reciprocal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrftMethod {
    Alt,
    Chirp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RefineSignal {
    Gaussian,
    Box,
}

/// What a completed run reports back to the binary.
#[derive(Debug, Clone, PartialEq)]
pub struct RunStatus {
    /// False when a series stopped before meeting its tail criterion; the result was still
    /// written.
    pub converged: bool,
}

impl RunStatus {
    pub fn exit_code(&self) -> i32 {
        if self.converged {
            0
        } else {
            4
        }
    }
}

/// The payload of a run before serialization.
enum Payload {
    Json(Value),
    Csv(Vec<u8>),
}

struct Job {
    payload: Payload,
    provenance: Value,
    converged: bool,
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn outcome_provenance<T>(method: &str, out: &SeriesOutcome<T>) -> Value {
    json!({
        "method": method,
        "terms_used": out.terms_used,
        "tail_estimate": out.tail_estimate,
        "stop": out.stop,
        "converged": out.converged(),
    })
}

fn exact_provenance(method: &str) -> Value {
    json!({ "method": method, "terms_used": null, "tail_estimate": 0.0, "converged": true })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::Parse(format!("cannot open {}: {e}", path.display())))
}

fn signal_json(table: &SignalTable) -> Value {
    json!({
        "x": table.x,
        "re": table.values.iter().map(|v| v.re).collect::<Vec<_>>(),
        "im": table.values.iter().map(|v| v.im).collect::<Vec<_>>(),
    })
}

fn signal_payload(format: Format, table: &SignalTable) -> Result<Payload> {
    Ok(match format {
        Format::Json => Payload::Json(json!({ "signal": signal_json(table) })),
        Format::Csv => {
            let mut buf = Vec::new();
            write_signal_csv(&mut buf, table)?;
            Payload::Csv(buf)
        }
    })
}

fn value_payload(format: Format, s: Complex64, value: Complex64) -> Payload {
    match format {
        Format::Json => Payload::Json(json!({ "s": complex_json(s), "value": complex_json(value) })),
        Format::Csv => Payload::Csv(
            format!("s_re,s_im,re,im\n{:?},{:?},{:?},{:?}\n", s.re, s.im, value.re, value.im).into_bytes(),
        ),
    }
}

fn matrix_payload(format: Format, m: &ComplexMatrix) -> Result<Payload> {
    Ok(match format {
        Format::Json => Payload::Json(json!({ "matrix": serde_json::to_value(m)? })),
        Format::Csv => {
            let mut buf = b"row,col,re,im\n".to_vec();
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    let z = m.get(i, j);
                    writeln!(buf, "{i},{j},{:?},{:?}", z.re, z.im)?;
                }
            }
            Payload::Csv(buf)
        }
    })
}

fn run_matpow(
    format: Format,
    input: &Path,
    alpha: Complex64,
    method: MatpowMethod,
    rho: Rho,
    order: Option<usize>,
    series: &SeriesArgs,
) -> Result<Job> {
    let t = read_matrix_json(open(input)?)?;
    let real_alpha = || {
        if alpha.im == 0.0 {
            Ok(alpha.re)
        } else {
            Err(Error::Parse("this method takes a real α".into()))
        }
    };
    let (m, provenance, converged) = match method {
        MatpowMethod::Newton => {
            let policy = series.policy(TruncationPolicy::default())?;
            let r = newton_matrix_power(&t, alpha, rho, &policy)?;
            let prov = merge(
                outcome_provenance("newton", &r.outcome),
                json!({
                    "certificate": {
                        "kind": "disk",
                        "center": complex_json(r.rho),
                        "radius": r.rho.norm() * r.scaled_radius,
                        "scaled_radius": r.scaled_radius,
                        "rho": complex_json(r.rho),
                    }
                }),
            );
            let converged = r.outcome.converged();
            (r.outcome.value, prov, converged)
        }
        MatpowMethod::Shannon => {
            let policy = series.policy(TruncationPolicy::default())?;
            let out = shannon_matrix_power(&t, real_alpha()?, &policy)?;
            let prov = merge(
                outcome_provenance("shannon", &out),
                json!({ "certificate": { "kind": "unit_circle" } }),
            );
            let converged = out.converged();
            (out.value, prov, converged)
        }
        MatpowMethod::Periodic => {
            let n = order.ok_or_else(|| Error::Parse("--order is required for the periodic method".into()))?;
            let cert = certify_spectrum(&t, CertificateKind::FiniteOrder { order: n })?;
            let m = periodic_matrix_power(&t, n, real_alpha()?)?;
            let prov = merge(
                exact_provenance("periodic"),
                json!({ "certificate": { "kind": "finite_order", "order": n, "evidence": cert.evidence } }),
            );
            (m, prov, true)
        }
        MatpowMethod::Oracle => {
            let m = eigen_fractional_power_oracle(&t, alpha)?;
            (m, exact_provenance("eigen_oracle"), true)
        }
    };
    let provenance = merge(provenance, json!({ "alpha": complex_json(alpha) }));
    Ok(Job {
        payload: matrix_payload(format, &m)?,
        provenance,
        converged,
    })
}

fn run_fracint(
    format: Format,
    input: &Path,
    alpha: Complex64,
    method: FracintMethod,
    rho: Complex64,
    series: &SeriesArgs,
) -> Result<Job> {
    let f = read_signal_csv(open(input)?)?.into_sampled()?;
    let (out, provenance, converged) = match method {
        FracintMethod::Newton => {
            let policy = series.policy(TruncationPolicy::new(64, 1e-12, 3)?)?;
            let r = newton_fractional_integral_scaled(&f, alpha, rho, &policy)?;
            let prov = merge(
                outcome_provenance("newton", &r),
                json!({ "rho": complex_json(rho) }),
            );
            let converged = r.converged();
            (r.value, prov, converged)
        }
        FracintMethod::Rl => (riemann_liouville(&f, alpha)?, exact_provenance("riemann_liouville"), true),
    };
    let provenance = merge(provenance, json!({ "alpha": complex_json(alpha) }));
    Ok(Job {
        payload: signal_payload(format, &SignalTable::from_sampled(&out))?,
        provenance,
        converged,
    })
}

#[allow(clippy::too_many_arguments)]
fn run_fracderiv(
    format: Format,
    input: Option<&Path>,
    alpha: f64,
    method: FracderivMethod,
    branch: Branch,
    lambda: f64,
    kind: Kind,
) -> Result<Job> {
    let need_input = || input.ok_or_else(|| Error::Parse("--input is required for this method".into()));
    let provenance = json!({
        "method": match method {
            FracderivMethod::FourierSeries => "fourier_series",
            FracderivMethod::Fft => "fourier_transform",
            FracderivMethod::Trig => "trig_closed_form",
        },
        "alpha": alpha,
        "branch": NegativeFrequencyBranch::from(branch),
        "converged": true,
    });
    let payload = match method {
        FracderivMethod::Trig => {
            let kind = match kind {
                Kind::Sin => TrigKind::Sin,
                Kind::Cos => TrigKind::Cos,
            };
            let d = frac_derivative_trig(lambda, kind, alpha)?;
            match format {
                Format::Json => Payload::Json(json!({ "derivative": serde_json::to_value(d)? })),
                Format::Csv => Payload::Csv(
                    format!(
                        "kind,lambda,amplitude,phase_shift\n{},{:?},{:?},{:?}\n",
                        if kind == TrigKind::Sin { "sin" } else { "cos" },
                        d.lambda,
                        d.amplitude,
                        d.phase_shift
                    )
                    .into_bytes(),
                ),
            }
        }
        FracderivMethod::FourierSeries => {
            let f = read_signal_csv(open(need_input()?)?)?.into_sampled()?;
            let out = frac_derivative_fourier_series(&f, alpha, branch.into())?;
            signal_payload(format, &SignalTable::from_sampled(&out))?
        }
        FracderivMethod::Fft => {
            let f = read_signal_csv(open(need_input()?)?)?.into_sampled()?;
            let out = frac_derivative_fourier_transform(&f, alpha, branch.into())?;
            signal_payload(format, &SignalTable::from_sampled(&out))?
        }
    };
    Ok(Job {
        payload,
        provenance,
        converged: true,
    })
}

fn run_zeta(
    format: Format,
    s: Complex64,
    method: ZetaMethod,
    eps: f64,
    export: Option<&Path>,
    series: &SeriesArgs,
) -> Result<Job> {
    let policy = series.policy(default_dirichlet_policy())?;
    let k_max = policy.max_terms().saturating_sub(1);
    let (value, provenance, converged, samples): (Complex64, Value, bool, Option<DirichletSamples>) =
        match method {
            ZetaMethod::Eta => {
                let out = zeta_via_eta(s, &policy)?;
                let prov = outcome_provenance("eta", &out);
                (out.value, prov, out.converged(), Some(eta_integer_values(k_max)))
            }
            ZetaMethod::Shifted => {
                let out = zeta_shifted(s, eps, &policy)?;
                let prov = merge(outcome_provenance("shifted", &out), json!({ "eps": eps }));
                (out.value, prov, out.converged(), None)
            }
            ZetaMethod::Reciprocal => {
                let r = reciprocal_zeta(s, &policy);
                let prov = merge(
                    outcome_provenance("reciprocal", &r.outcome),
                    json!({
                        "experimental": true,
                        "partial_sums": r.partial_sums.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
                    }),
                );
                let converged = r.outcome.converged();
                (r.outcome.value, prov, converged, Some(reciprocal_zeta_samples(k_max)))
            }
        };
    if let Some(path) = export {
        let samples = match samples {
            Some(s) => s,
            None => {
                let values = (0..=k_max.max(2))
                    .map(|k| crate::dirichlet_interp::zeta_reference(Complex64::new(k as f64 + 1.0 + eps, 0.0)))
                    .collect::<Result<Vec<_>>>()?;
                let n = values.len();
                DirichletSamples::new(values, vec![crate::dirichlet_interp::Provenance::DirectSeries; n])?
            }
        };
        let file = File::create(path)?;
        write_samples_csv(BufWriter::new(file), &samples)?;
    }
    Ok(Job {
        payload: value_payload(format, s, value),
        provenance,
        converged,
    })
}

fn run_mellin(format: Format, input: &Path, s: Complex64, series: &SeriesArgs) -> Result<Job> {
    let samples = read_samples_csv(open(input)?)?;
    let policy = series.policy(TruncationPolicy::new(64, 1e-12, 3)?)?;
    let out = mellin_interpolate(&samples, s, &policy)?;
    Ok(Job {
        payload: value_payload(format, s, out.value),
        provenance: outcome_provenance("mellin", &out),
        converged: out.converged(),
    })
}

fn run_frft(
    format: Format,
    input: &Path,
    alpha: Option<f64>,
    phi: Option<f64>,
    method: FrftMethod,
) -> Result<Job> {
    let f = read_signal_csv(open(input)?)?.into_centered()?;
    let (out, provenance): (Signal, Value) = match method {
        FrftMethod::Alt => {
            let alpha = alpha.ok_or_else(|| Error::Parse("--alpha is required for the alt method".into()))?;
            let r = alt_frft(&f, alpha)?;
            let prov = json!({
                "method": "alt",
                "alpha": alpha,
                "weights": r.weights.w.iter().map(|w| w.re).collect::<Vec<_>>(),
                "minus_one_fraction": r.minus_one_fraction,
                "converged": true,
            });
            (r.signal, prov)
        }
        FrftMethod::Chirp => {
            let phi = match (phi, alpha) {
                (Some(p), _) => p,
                (None, Some(a)) => a * std::f64::consts::FRAC_PI_2,
                (None, None) => return Err(Error::Parse("--phi or --alpha is required".into())),
            };
            (literature_frft(&f, phi)?, json!({ "method": "chirp", "phi": phi, "converged": true }))
        }
    };
    Ok(Job {
        payload: signal_payload(format, &SignalTable::from_centered(&out))?,
        provenance,
        converged: true,
    })
}

/// JSON output already carries the report; the CSV sidecar repeats it next to the profile.
fn demo_provenance(format: Format, method: &str, report: Value) -> Value {
    let base = json!({ "method": method, "converged": true });
    match format {
        Format::Json => base,
        Format::Csv => merge(base, json!({ "report": report })),
    }
}

fn run_demo(format: Format, which: &Demo) -> Result<Job> {
    match *which {
        Demo::Translation { t, grid } => {
            let (report, profile) = translation_counterexample(t, grid)?;
            let payload = match format {
                Format::Json => Payload::Json(serde_json::to_value(&report)?),
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_profile_csv(&mut buf, &profile_rows(&profile, "sinc_power"))?;
                    Payload::Csv(buf)
                }
            };
            Ok(Job {
                payload,
                provenance: demo_provenance(format, "translation_counterexample", serde_json::to_value(&report)?),
                converged: true,
            })
        }
        Demo::Refine { t, k, grid, signal } => {
            if grid == 0 {
                return Err(Error::Parse("--grid must be positive".into()));
            }
            let m = 16 * grid + 1;
            let step = 1.0 / grid as f64;
            let (f, truth) = match signal {
                RefineSignal::Gaussian => (
                    Signal::from_real_fn(m, step, |x| (-std::f64::consts::PI * x * x).exp())?,
                    Signal::from_real_fn(m, step, |x| (-std::f64::consts::PI * (x - t) * (x - t)).exp())?,
                ),
                RefineSignal::Box => (
                    Signal::from_real_fn(m, step, |x| if (0.0..=0.5).contains(&x) { 1.0 } else { 0.0 })?,
                    Signal::from_real_fn(m, step, |x| if (t..=t + 0.5).contains(&x) { 1.0 } else { 0.0 })?,
                ),
            };
            let out = refined_translation_power(&f, t, k)?;
            let max_on_interval = out
                .grid()
                .iter()
                .zip(out.samples())
                .filter(|(&x, _)| x > 0.5 && x < 1.0)
                .map(|(_, v)| v.norm())
                .fold(0.0, f64::max);
            let report = json!({
                "t": t,
                "k": k,
                "grid": grid,
                "max_on_interval": max_on_interval,
                "l2_error": out.l2_distance(&truth),
            });
            let payload = match format {
                Format::Json => Payload::Json(report.clone()),
                Format::Csv => {
                    let mut buf = Vec::new();
                    let mut rows = profile_rows(&out, "refined_power");
                    rows.extend(profile_rows(&truth, "true_shift"));
                    write_profile_csv(&mut buf, &rows)?;
                    Payload::Csv(buf)
                }
            };
            Ok(Job {
                payload,
                provenance: demo_provenance(format, "refined_translation_power", report),
                converged: true,
            })
        }
        Demo::Figures { points } => {
            let rows = figure_profiles(points)?;
            let payload = match format {
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_profile_csv(&mut buf, &rows)?;
                    Payload::Csv(buf)
                }
                Format::Json => Payload::Json(json!({ "rows": serde_json::to_value(&rows)? })),
            };
            Ok(Job {
                payload,
                provenance: json!({ "method": "figure_profiles", "points": points, "converged": true }),
                converged: true,
            })
        }
    }
}

fn emit(job: Job, output: Option<&Path>) -> Result<()> {
    let mut sink: Box<dyn Write> = match output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    };
    match job.payload {
        Payload::Json(mut v) => {
            if let Value::Object(map) = &mut v {
                map.insert("provenance".into(), job.provenance);
            } else {
                v = json!({ "result": v, "provenance": job.provenance });
            }
            serde_json::to_writer_pretty(&mut sink, &v)?;
            writeln!(sink)?;
        }
        Payload::Csv(bytes) => {
            sink.write_all(&bytes)?;
            let prov = serde_json::to_string_pretty(&job.provenance)?;
            match output {
                Some(p) => {
                    let mut side = p.as_os_str().to_owned();
                    side.push(".provenance.json");
                    std::fs::write(PathBuf::from(side), prov + "\n")?;
                }
                None => eprintln!("{prov}"),
            }
        }
    }
    sink.flush()?;
    Ok(())
}

/// Runs one job and writes its output.
pub fn run(cli: &Cli) -> Result<RunStatus> {
    let format = cli.format;
    let job = match &cli.command {
        Command::Matpow { input, alpha, method, rho, order, series } => {
            run_matpow(format, input, *alpha, *method, *rho, *order, series)?
        }
        Command::Fracint { input, alpha, method, rho, series } => {
            run_fracint(format, input, *alpha, *method, *rho, series)?
        }
        Command::Fracderiv { input, alpha, method, branch, lambda, kind } => {
            run_fracderiv(format, input.as_deref(), *alpha, *method, *branch, *lambda, *kind)?
        }
        Command::Zeta { s, method, eps, export_samples, series } => {
            run_zeta(format, *s, *method, *eps, export_samples.as_deref(), series)?
        }
        Command::Mellin { input, s, series } => run_mellin(format, input, *s, series)?,
        Command::Frft { input, alpha, phi, method } => run_frft(format, input, *alpha, *phi, *method)?,
        Command::Demo { which } => run_demo(format, which)?,
    };
    let converged = job.converged;
    if !converged {
        log::warn!("series stopped before its tail criterion was met; result written with converged = false");
    }
    emit(job, cli.output.as_deref())?;
    Ok(RunStatus { converged })
}
