//! `tropqrt` command dispatch.
//!
//! Exit codes: 0 success, 1 domain error (bad scenario, point off the cycle,
//! degenerate cycle), 2 usage error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::curve::{cycle_chart, validate_strict};
use crate::error::{Error, Result};
use crate::group_law::{add, negate};
use crate::io::{default_bbox, emit_orbit_csv, emit_svg, parse_point, parse_scenario_file, ScenarioFile};
use crate::jacobian::Jacobian;
use crate::qrt::{orbit_in, period_of, translation_length};
use crate::rational::fmt_rational;

#[derive(Debug, Parser)]
#[command(name = "tropqrt", version, about = "Tropical elliptic curves and the tropical QRT map")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the strict smoothness chains and whether the cycle is non-degenerate
    Validate { file: PathBuf },
    /// Print the cycle chart, collinearity constant, translation and period
    Cycle { file: PathBuf },
    /// Iterate the QRT map and write the orbit as CSV
    Orbit {
        file: PathBuf,
        /// Override the step count from the file
        #[arg(long)]
        steps: Option<usize>,
        /// Write CSV here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Draw the curve (and optionally the orbit) as SVG
    Plot {
        file: PathBuf,
        /// Write SVG here instead of stdout
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Overlay the orbit of the scenario
        #[arg(long)]
        orbit: bool,
    },
    /// Sum of two cycle points, with the scenario's theta as zero
    Add {
        file: PathBuf,
        #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
        p: String,
        #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
        q: String,
    },
    /// Inverse of a cycle point, with the scenario's theta as zero
    Neg {
        file: PathBuf,
        #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
        p: String,
    },
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn load(path: &Path) -> Result<ScenarioFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_scenario_file(&text)
}

fn write_to(path: Option<&Path>, bytes: &[u8], out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => out.write_all(bytes).map_err(Error::from),
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Validate { file } => {
            let f = load(&file)?;
            let report = validate_strict(&f.curve);
            write!(out, "{report}")?;
            let violated: Vec<String> = report
                .violations()
                .iter()
                .map(|(g, l)| format!("a{g} > a{l}"))
                .collect();
            if report.pass() {
                writeln!(out, "strict chains: PASS")?;
            } else {
                writeln!(out, "strict chains: FAIL ({} violated)", violated.join(", "))?;
            }
            match cycle_chart(&f.curve) {
                Ok(chart) => {
                    writeln!(out, "cycle: OK (L = {})", fmt_rational(chart.total()))?;
                    for (name, p) in [("theta", &f.theta), ("t", &f.t), ("p0", &f.p0)] {
                        let on = f.curve.on_cycle(p);
                        writeln!(out, "{name} {p}: {}", if on { "on cycle" } else { "NOT on cycle" })?;
                    }
                    Ok(0)
                }
                Err(e) => {
                    writeln!(out, "cycle: {e}")?;
                    Ok(1)
                }
            }
        }
        Command::Cycle { file } => {
            let s = load(&file)?.into_scenario()?;
            let jac = Jacobian::new(&s.curve)?;
            let chart = jac.chart();
            let verts: Vec<String> = chart.vertices().iter().map(ToString::to_string).collect();
            let lens: Vec<String> = chart.edge_lengths().iter().map(fmt_rational).collect();
            let delta = translation_length(&jac, &s.theta, &s.t)?;
            writeln!(out, "vertices: {}", verts.join(" "))?;
            writeln!(out, "edge lengths: {}", lens.join(" "))?;
            writeln!(out, "L = {}", fmt_rational(jac.total()))?;
            writeln!(out, "ccal = {}", fmt_rational(jac.ccal()))?;
            writeln!(out, "delta = {}", fmt_rational(&delta))?;
            writeln!(out, "period = {}", period_of(jac.total(), &delta))?;
            Ok(0)
        }
        Command::Orbit { file, steps, csv } => {
            let mut s = load(&file)?.into_scenario()?;
            if let Some(n) = steps {
                s.steps = n;
            }
            let jac = Jacobian::new(&s.curve)?;
            let o = orbit_in(&jac, &s)?;
            let mut buf = Vec::new();
            emit_orbit_csv(&o, &mut buf)?;
            write_to(csv.as_deref(), &buf, out)?;
            if let Some(path) = csv {
                let period = o.period.map_or("not reached".to_string(), |p| p.to_string());
                writeln!(out, "wrote {} rows to {}; period {period}", o.points.len(), path.display())?;
            }
            Ok(0)
        }
        Command::Plot { file, svg, orbit } => {
            let f = load(&file)?;
            let chart = cycle_chart(&f.curve)?;
            let bbox = f.bbox.clone().unwrap_or_else(|| default_bbox(&chart));
            let record = if orbit {
                let s = f.into_scenario()?;
                let jac = Jacobian::new(&s.curve)?;
                Some(orbit_in(&jac, &s)?)
            } else {
                None
            };
            let mut buf = Vec::new();
            emit_svg(&chart, record.as_ref(), &bbox, &mut buf)?;
            write_to(svg.as_deref(), &buf, out)?;
            Ok(0)
        }
        Command::Add { file, p, q } => {
            let f = load(&file)?;
            let jac = Jacobian::new(&f.curve)?;
            let (p, q) = (parse_point(&p)?, parse_point(&q)?);
            let r = add(&jac, &f.theta, &p, &q)?;
            writeln!(out, "{r} s={}", fmt_rational(&jac.arc_param(&r)?))?;
            Ok(0)
        }
        Command::Neg { file, p } => {
            let f = load(&file)?;
            let jac = Jacobian::new(&f.curve)?;
            let r = negate(&jac, &f.theta, &parse_point(&p)?)?;
            writeln!(out, "{r} s={}", fmt_rational(&jac.arc_param(&r)?))?;
            Ok(0)
        }
    }
}
