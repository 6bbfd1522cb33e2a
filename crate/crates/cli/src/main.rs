//! `tricover`: build, verify and draw triangle coverings.
//!
//! Exit codes: 0 success or covered, 2 gap found, 3 threshold refusal,
//! 4 usage or parse error, 1 output failure.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use tricover::io::{
    bounds_table, format_bounds_table, plan_from_json, plan_to_json, render_svg, sweep,
    write_sweep_csv, Frame, RenderOptions,
};
use tricover::{
    bl3_cover, consolidated_cover, cs1_cover, cs1_generalized_cover, even_cover, even_cover_auto,
    grid_cover, naive_cover, odd_cover, odd_cover_auto, plan_threshold, sample_check,
    verify_coverage, CoverError, CoverageReport, CoveringPlan, Rational,
};

const EXIT_GAP: u8 = 2;
const EXIT_THRESHOLD: u8 = 3;
const EXIT_USAGE: u8 = 4;
const EXIT_OUTPUT: u8 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "tricover",
    version,
    about = "Cover a triangle of side n+d with homothetic unit triangles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum MethodArg {
    /// Consolidated rule: whichever of the full even/odd methods uses fewer triangles.
    Auto,
    Grid,
    Naive,
    Cs1,
    #[value(alias = "cs1gen")]
    Cs1Generalized,
    /// Full even method, or the basic one when `--j` is given.
    Even,
    /// Full odd method, or the basic one when `--j` is given.
    Odd,
    Bl3,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FrameArg {
    Simplex,
    Equilateral,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a covering plan.
    Cover {
        #[arg(long)]
        n: u32,
        /// `p/q` or a terminating decimal; not needed for `grid`.
        #[arg(long, value_parser = parse_rational)]
        d: Option<Rational>,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// First widened row for the even/odd constructions.
        #[arg(long)]
        j: Option<u32>,
        /// Emit the plan even past the method's threshold.
        #[arg(long)]
        force: bool,
        /// Plan JSON destination (`-` for stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide exactly whether a plan covers its target.
    Verify {
        plan: PathBuf,
        /// Also run a randomized search with this many samples.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Draw a plan as SVG.
    Render {
        plan: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FrameArg::Simplex)]
        frame: FrameArg,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        show_target: bool,
        /// Number the rows.
        #[arg(long)]
        labels: bool,
    },
    /// Print the thresholds p/(n+1) and p/n for every p.
    Bounds {
        #[arg(long)]
        n: u32,
    },
    /// Tabulate k_min over a grid of d values, verifying every plan.
    Sweep {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        grid_points: u32,
        /// CSV destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    text.parse().map_err(|e| format!("{e}"))
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn output(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_OUTPUT,
            message: message.into(),
        }
    }
}

impl From<CoverError> for Failure {
    fn from(err: CoverError) -> Self {
        let code = match err {
            CoverError::ThresholdExceeded { .. } => EXIT_THRESHOLD,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Cover {
            n,
            d,
            method,
            j,
            force,
            out,
        } => cmd_cover(n, d, method, j, force, out),
        Command::Verify { plan, sample, seed } => cmd_verify(&plan, sample, seed),
        Command::Render {
            plan,
            out,
            frame,
            show_target,
            labels,
        } => {
            let plan = read_plan(&plan)?;
            let options = RenderOptions {
                frame: match frame {
                    FrameArg::Simplex => Frame::Simplex,
                    FrameArg::Equilateral => Frame::Equilateral,
                },
                show_target,
                row_labels: labels,
                ..RenderOptions::default()
            };
            write_output(Some(&out), &render_svg(&plan, &options))?;
            Ok(0)
        }
        Command::Bounds { n } => {
            let rows = bounds_table(n)?;
            print!("{}", format_bounds_table(n, &rows));
            Ok(0)
        }
        Command::Sweep {
            n_min,
            n_max,
            grid_points,
            out,
        } => {
            let rows = sweep(n_min, n_max, grid_points)?;
            let mut buf = Vec::new();
            write_sweep_csv(&rows, &mut buf).map_err(|e| Failure::output(e.to_string()))?;
            write_output(out.as_ref(), &String::from_utf8_lossy(&buf))?;
            Ok(if rows.iter().all(|r| r.verified) {
                0
            } else {
                EXIT_GAP
            })
        }
    }
}

fn cmd_cover(
    n: u32,
    d: Option<Rational>,
    method: MethodArg,
    j: Option<u32>,
    force: bool,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    if j.is_some() && !matches!(method, MethodArg::Even | MethodArg::Odd) {
        return Err(Failure::usage("--j applies only to --method even or odd"));
    }
    let need_d = || {
        d.clone()
            .ok_or_else(|| Failure::usage("--d is required for this method"))
    };
    let plan: CoveringPlan = match method {
        MethodArg::Grid => grid_cover(n)?,
        MethodArg::Auto => consolidated_cover(n, &need_d()?)?,
        MethodArg::Naive => naive_cover(n, &need_d()?)?,
        MethodArg::Cs1 => cs1_cover(n, &need_d()?, force)?,
        MethodArg::Cs1Generalized => cs1_generalized_cover(n, &need_d()?)?,
        MethodArg::Bl3 => bl3_cover(n, &need_d()?, force)?,
        MethodArg::Even => match j {
            Some(j) => even_cover(n, &need_d()?, j, force)?,
            None => even_cover_auto(n, &need_d()?)?,
        },
        MethodArg::Odd => match j {
            Some(j) => odd_cover(n, &need_d()?, j, force)?,
            None => odd_cover_auto(n, &need_d()?)?,
        },
    };
    if let Some(path) = &out {
        write_output(Some(path), &plan_to_json(&plan))?;
    }
    let j_text = plan.j.map_or_else(|| "-".to_string(), |j| j.to_string());
    println!(
        "method={} j={} count={} threshold={}",
        plan.method,
        j_text,
        plan.count(),
        plan_threshold(&plan)
    );
    Ok(0)
}

fn report_line(report: &CoverageReport, label: &str) -> String {
    let verdict = if report.covered { "covered" } else { "gap" };
    let mut line = format!("verdict={verdict} method={label}");
    if label == "exact_slab" {
        line.push_str(&format!(" critical_levels={}", report.critical_levels));
    }
    if let Some(w) = &report.witness {
        line.push_str(&format!(" witness=({},{})", w.x, w.y));
    }
    line
}

fn cmd_verify(path: &PathBuf, sample: Option<usize>, seed: u64) -> Result<u8, Failure> {
    let plan = read_plan(path)?;
    let target = plan.target();
    let exact = verify_coverage(&plan, &target);
    println!("{}", report_line(&exact, "exact_slab"));
    if let Some(count) = sample {
        if count == 0 {
            return Err(Failure::usage("--sample must be at least 1"));
        }
        let sampled = sample_check(&plan, &target, seed, count);
        println!(
            "{} samples={count} seed={seed}",
            report_line(&sampled, "sampling")
        );
    }
    Ok(if exact.covered { 0 } else { EXIT_GAP })
}

fn read_plan(path: &PathBuf) -> Result<CoveringPlan, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    plan_from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::write(p, text)
            .map_err(|e| Failure::output(format!("cannot write {}: {e}", p.display()))),
        _ => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::output(e.to_string())),
    }
}
