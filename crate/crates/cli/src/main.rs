// `!(x > y)` in argument checks must also fail for NaN inputs.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! `freeid` — evaluate free-probability transforms of the catalog laws,
//! run the verification suites, and inspect the catalog.
//!
//! Exit codes: 0 on success, 1 when any (non-informational) verification
//! case fails or a computation fails, 2 on usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use freeid::measures::catalog::{catalog_lookup, catalog_metadata, CATALOG_NAMES};
use freeid::quad::QuadConfig;
use freeid::verify::{default_tol, emit_report, fmt12, run_suite, ReportFormat};
use freeid::voiculescu::{
    closed_form, level_a, level_z, level_z_symmetric, thm2_forward, thm2_inverse, TransformSource,
    VoiculescuFn,
};
use freeid::{Complex64, Error};

#[derive(Parser)]
#[command(
    name = "freeid",
    about = "Free-probability transforms of infinitely divisible laws",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a Voiculescu transform on a t-grid
    Transform {
        /// Catalog law (cosh, sinh, tanh, laplace, bdcf-cosh, ...)
        #[arg(long)]
        dist: String,
        /// Evaluation route
        #[arg(long, value_enum)]
        route: Route,
        /// Grid spec start:stop:count over t > 0
        #[arg(long = "t", value_name = "START:STOP:COUNT")]
        t_spec: String,
        /// Logarithmic grid spacing instead of linear
        #[arg(long)]
        log: bool,
        /// Quadrature relative tolerance for the integral routes
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write output to a file instead of stdout (identical bytes)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and emit its report
    Verify {
        /// Suite: routes, specfun-identities, gr-table, bdcf, decay,
        /// corollary1, or all
        #[arg(long)]
        suite: String,
        /// Case tolerance (defaults to the suite's ladder value)
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List catalog entries (formulas and masses)
    Catalog {
        /// Restrict to one entry
        #[arg(long)]
        dist: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Route {
    #[value(name = "levelA")]
    LevelA,
    #[value(name = "levelZ")]
    LevelZ,
    #[value(name = "symZ")]
    SymZ,
    #[value(name = "closed")]
    Closed,
    #[value(name = "thm2")]
    Thm2,
}

impl Route {
    fn name(self) -> &'static str {
        match self {
            Route::LevelA => "levelA",
            Route::LevelZ => "levelZ",
            Route::SymZ => "symZ",
            Route::Closed => "closed",
            Route::Thm2 => "thm2",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
    Csv,
    Table,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> ReportFormat {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
            Format::Table => ReportFormat::Table,
        }
    }
}

/// Errors that indicate misuse rather than a failed computation.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownDistribution(_)
            | Error::UnknownIdentity(_)
            | Error::Precondition(_)
            | Error::Domain { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err.downcast_ref::<Error>() {
                Some(e) if is_usage_error(e) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn quad_config(tol: Option<f64>) -> anyhow::Result<QuadConfig<f64>> {
    let mut cfg = QuadConfig::<f64>::default();
    if let Ok(v) = std::env::var("FREEID_TRUNCATION_DECADES") {
        let decades: f64 = v.parse().map_err(|_| {
            Error::Precondition(format!(
                "FREEID_TRUNCATION_DECADES must be a positive number, got `{v}`"
            ))
        })?;
        if !(decades > 0.0) {
            return Err(Error::Precondition(format!(
                "FREEID_TRUNCATION_DECADES must be positive, got {decades}"
            ))
            .into());
        }
        cfg.truncation_decades = decades;
    }
    if let Some(t) = tol {
        if !(t > 0.0) {
            return Err(Error::Precondition(format!("--tol must be positive, got {t}")).into());
        }
        cfg.rel_tol = t;
        cfg.abs_tol = cfg.abs_tol.min(t * 1e-2);
    }
    Ok(cfg)
}

fn parse_grid(spec: &str, log: bool) -> anyhow::Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usage = || Error::Precondition(format!("--t expects start:stop:count, got `{spec}`"));
    if parts.len() != 3 {
        return Err(usage().into());
    }
    let start: f64 = parts[0].parse().map_err(|_| usage())?;
    let stop: f64 = parts[1].parse().map_err(|_| usage())?;
    let count: usize = parts[2].parse().map_err(|_| usage())?;
    if !(start > 0.0) || !(stop > 0.0) || start > stop || count < 1 {
        return Err(Error::Precondition(format!(
            "--t requires 0 < start <= stop and count >= 1, got `{spec}`"
        ))
        .into());
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let n = (count - 1) as f64;
    Ok((0..count)
        .map(|k| {
            if log {
                (start.ln() + (stop.ln() - start.ln()) * k as f64 / n).exp()
            } else {
                start + (stop - start) * k as f64 / n
            }
        })
        .collect())
}

#[derive(Serialize)]
struct TransformRow {
    t: f64,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct TransformOutput {
    dist: String,
    route: &'static str,
    rows: Vec<TransformRow>,
}

fn eval_route(dist: &str, route: Route, t: f64, cfg: &QuadConfig<f64>) -> Result<Complex64, Error> {
    let entry = catalog_lookup::<f64>(dist)?;
    match route {
        Route::LevelA => level_a(&entry.log_cf, t, cfg),
        Route::LevelZ => level_z(&entry.pair, t, cfg),
        Route::SymZ => level_z_symmetric(&entry.pair, t, cfg),
        Route::Closed => closed_form(dist, t),
        Route::Thm2 => match entry.bdcf_of {
            // A driving law: apply the forward relation to the law it drives.
            Some(parent) => {
                let v = VoiculescuFn::new(TransformSource::Closed, move |s: f64| {
                    closed_form(parent, s).expect("t > 0")
                });
                thm2_forward(&v, t, 1e-4)
            }
            // A selfdecomposable law: reconstruct it from its driver.
            None => {
                let driver = format!("bdcf-{dist}");
                catalog_lookup::<f64>(&driver)?;
                let driver_name: &'static str = CATALOG_NAMES
                    .iter()
                    .copied()
                    .find(|n| *n == driver)
                    .expect("driver is a catalog name");
                let v = VoiculescuFn::new(TransformSource::Closed, move |s: f64| {
                    closed_form(driver_name, s).expect("t > 0")
                });
                let v1 = closed_form(dist, 1.0)?;
                thm2_inverse(&v, v1, t, cfg)
            }
        },
    }
}

fn transform_output(out: &TransformOutput, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(out)? + "\n",
        Format::Csv => {
            let mut s = String::from("t,re,im\n");
            for r in &out.rows {
                s.push_str(&format!("{},{},{}\n", fmt12(r.t), fmt12(r.re), fmt12(r.im)));
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "# {} via {}\n{:>20} {:>20} {:>20}\n",
                out.dist, out.route, "t", "re(V)", "im(V)"
            );
            for r in &out.rows {
                s.push_str(&format!(
                    "{:>20} {:>20} {:>20}\n",
                    fmt12(r.t),
                    fmt12(r.re),
                    fmt12(r.im)
                ));
            }
            s
        }
    })
}

fn write_output(out: Option<&PathBuf>, bytes: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes)?,
        None => print!("{bytes}"),
    }
    Ok(())
}

fn catalog_output(dist: Option<&str>, format: Format) -> anyhow::Result<String> {
    let names: Vec<&str> = match dist {
        Some(d) => vec![CATALOG_NAMES
            .iter()
            .copied()
            .find(|n| *n == d)
            .ok_or_else(|| Error::UnknownDistribution(d.to_string()))?],
        None => CATALOG_NAMES.to_vec(),
    };
    let metas: Vec<_> = names
        .iter()
        .map(|n| catalog_metadata(n))
        .collect::<Result<_, _>>()?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&metas)? + "\n",
        Format::Csv => {
            let mut s = String::from("name,mass,bdcf_of,log_cf,m_density,closed_v\n");
            for m in &metas {
                s.push_str(&format!(
                    "{},{},{},\"{}\",\"{}\",\"{}\"\n",
                    m.name,
                    fmt12(m.mass),
                    m.bdcf_of.as_deref().unwrap_or(""),
                    m.log_cf,
                    m.m_density,
                    m.closed_v
                ));
            }
            s
        }
        Format::Table => {
            let mut s = format!(
                "{:<14} {:>18} {:<9} {:<22} {}\n",
                "name", "mass", "bdcf-of", "log cf", "closed transform"
            );
            for m in &metas {
                s.push_str(&format!(
                    "{:<14} {:>18} {:<9} {:<22} {}\n",
                    m.name,
                    fmt12(m.mass),
                    m.bdcf_of.as_deref().unwrap_or("-"),
                    m.log_cf,
                    m.closed_v
                ));
            }
            s
        }
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Transform {
            dist,
            route,
            t_spec,
            log,
            tol,
            format,
            out,
        } => {
            let cfg = quad_config(tol)?;
            let grid = parse_grid(&t_spec, log)?;
            let mut rows = Vec::with_capacity(grid.len());
            for t in grid {
                let v = eval_route(&dist, route, t, &cfg)?;
                rows.push(TransformRow {
                    t,
                    re: v.re,
                    im: v.im,
                });
            }
            let output = TransformOutput {
                dist,
                route: route.name(),
                rows,
            };
            write_output(out.as_ref(), &transform_output(&output, format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            suite,
            tol,
            format,
            out,
        } => {
            let cfg = quad_config(None)?;
            let tol = match tol {
                Some(t) if t > 0.0 => t,
                Some(t) => {
                    return Err(
                        Error::Precondition(format!("--tol must be positive, got {t}")).into(),
                    )
                }
                None => default_tol(&suite),
            };
            let report = run_suite(&suite, tol, &cfg)?;
            write_output(out.as_ref(), &emit_report(&report, format.into())?)?;
            if report.unexpected_failures() > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Cmd::Catalog { dist, format, out } => {
            write_output(out.as_ref(), &catalog_output(dist.as_deref(), format)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
