use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cpt_kernel::exact::{HalfInt, Phase};
use cpt_kernel::field::Phases;
use cpt_kernel::reps::{ab_generators, discrete_matrix, reality_class, verify_lorentz_algebra, Discrete, RepBlock};
use cpt_kernel::speclang::builtin::EXAMPLES;
use cpt_kernel::speclang::doc::Normal;
use cpt_kernel::speclang::report::{commutators_text, generators_text, to_json, to_text};
use cpt_kernel::speclang::{load, run_pipeline, Report};

#[derive(Parser)]
#[command(name = "cpt-kernel", version, about = "Exact checks of discrete symmetries for multi-component field systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormalArg {
    T,
    X,
    Y,
    Z,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Surface normal for generators and the fundamental split.
    #[arg(long, value_enum)]
    normal: Option<NormalArg>,
    /// Phase ν_s of D(I_s): 1, -1, i, -i or turns:p/q.
    #[arg(long = "phase-s", allow_hyphen_values = true)]
    phase_s: Option<String>,
    /// Phase ν_c of D(C).
    #[arg(long = "phase-c", allow_hyphen_values = true)]
    phase_c: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check on a spec file.
    Check {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print generators or bracket relations.
    Derive {
        #[command(subcommand)]
        what: DeriveWhat,
    },
    /// Representation data for a block (A,B).
    Reps {
        #[command(subcommand)]
        what: RepsWhat,
    },
    /// Built-in example documents.
    Example {
        #[arg(value_parser = ["interacting-1-half"])]
        name: String,
        /// Print the document instead of checking it.
        #[arg(long)]
        emit: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum DeriveWhat {
    Generators {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    Commutators {
        file: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum RepsWhat {
    Show {
        a: String,
        b: String,
        #[arg(long)]
        parity: bool,
        #[arg(long)]
        charge: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct UsageError(String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn color_enabled() -> bool {
    std::env::var("CPT_KERNEL_COLOR").map(|v| v == "1").unwrap_or(false)
}

fn parse_phase(s: &Option<String>, flag: &str) -> Result<Option<Phase>, UsageError> {
    match s {
        None => Ok(None),
        Some(t) => Phase::parse(t).map(Some).ok_or_else(|| usage(format!("--{}: invalid phase `{}`", flag, t))),
    }
}

fn build_report(source: &str, text: &str, common: &Common) -> Result<Report, UsageError> {
    let (_, mut model) = load(text).map_err(|diags| {
        let lines: Vec<String> = diags.iter().map(|d| format!("{}:{}", source, d)).collect();
        usage(lines.join("\n"))
    })?;
    if let Some(n) = common.normal {
        let n = match n {
            NormalArg::T => Normal::T,
            NormalArg::X => Normal::X,
            NormalArg::Y => Normal::Y,
            NormalArg::Z => Normal::Z,
        };
        if n != Normal::T {
            return Err(usage(format!("--normal {}: the surface normal must be timelike", n.name())));
        }
        model.normal = n;
    }
    let Phases { s, c } = model.phases.clone();
    model.phases = Phases {
        s: parse_phase(&common.phase_s, "phase-s")?.unwrap_or(s),
        c: parse_phase(&common.phase_c, "phase-c")?.unwrap_or(c),
    };
    Ok(run_pipeline(model))
}

fn read(file: &str) -> Result<String, UsageError> {
    std::fs::read_to_string(file).map_err(|e| usage(format!("{}: {}", file, e)))
}

fn emit_check(r: &Report, format: Format) -> i32 {
    match format {
        Format::Json => print!("{}", to_json(r)),
        Format::Text => print!("{}", to_text(r, color_enabled())),
    }
    r.exit_code()
}

#[derive(Serialize)]
struct RepsJson {
    a: String,
    b: String,
    parity_doubled: bool,
    charge_doubled: bool,
    dimension: usize,
    spins: Vec<String>,
    algebra: String,
    t_reality: Vec<String>,
}

fn reps_show(a: &str, b: &str, parity: bool, charge: bool, format: Format) -> Result<i32, UsageError> {
    let half = |s: &str| HalfInt::parse(s).ok_or_else(|| usage(format!("`{}` is not a non-negative half-integer", s)));
    let (a, b) = (half(a)?, half(b)?);
    let block = RepBlock::new(a, b, parity, charge);
    let lo = a.twice().abs_diff(b.twice());
    let spins: Vec<HalfInt> = (lo..=a.twice() + b.twice()).step_by(2).map(HalfInt::from_twice).collect();
    let algebra = verify_lorentz_algebra(&ab_generators(a, b)).map_err(|e| usage(e.to_string()))?;
    let reality: Vec<String> = spins.iter().map(|j| format!("j={} {}", j, reality_class(*j))).collect();
    let one = Phase::one();
    match format {
        Format::Json => {
            let j = RepsJson {
                a: a.to_string(),
                b: b.to_string(),
                parity_doubled: block.parity_doubled,
                charge_doubled: block.charge_doubled,
                dimension: block.dimension(),
                spins: spins.iter().map(|s| s.to_string()).collect(),
                algebra: algebra.status.to_string(),
                t_reality: reality,
            };
            println!("{}", serde_json::to_string_pretty(&j).expect("serializes"));
        }
        Format::Text => {
            let mut name = format!("({},{})", a, b);
            if block.parity_doubled {
                name = format!("{}⊕({},{})", name, b, a);
            }
            if block.charge_doubled {
                name.push_str(" charge-doubled");
            }
            println!("block {}", name);
            println!("components {}", block.dimension());
            println!("spins {}", spins.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "));
            println!("lorentz algebra {}", algebra.status);
            println!("time reversal {}", reality.join(", "));
            for kind in [Discrete::P, Discrete::C, Discrete::T] {
                match discrete_matrix(kind, &block, &one) {
                    Ok(m) => {
                        println!("D({}):", kind);
                        for line in m.to_string().lines() {
                            println!("  {}", line);
                        }
                    }
                    Err(e) => println!("D({}): {}", kind, e),
                }
            }
        }
    }
    Ok(if algebra.passed() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<i32, UsageError> {
    match cli.command {
        Command::Check { file, common } => {
            let r = build_report(&file, &read(&file)?, &common)?;
            Ok(emit_check(&r, common.format))
        }
        Command::Derive { what } => {
            let (file, common, gens) = match what {
                DeriveWhat::Generators { file, common } => (file, common, true),
                DeriveWhat::Commutators { file, common } => (file, common, false),
            };
            let r = build_report(&file, &read(&file)?, &common)?;
            let id = if gens { "generator" } else { "brackets" };
            let v = r.check(id).expect("pipeline always records artifacts");
            match common.format {
                Format::Json => print!("{}", to_json(&r)),
                Format::Text => {
                    print!("{}", if gens { generators_text(&r) } else { commutators_text(&r) });
                    for w in &v.witnesses {
                        println!("{}", w);
                    }
                }
            }
            Ok(if v.passed() { 0 } else { 1 })
        }
        Command::Reps { what: RepsWhat::Show { a, b, parity, charge, format } } => reps_show(&a, &b, parity, charge, format),
        Command::Example { name, emit, common } => {
            let text = EXAMPLES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t).expect("validated by clap");
            if emit {
                print!("{}", text);
                return Ok(0);
            }
            let r = build_report(&name, text, &common)?;
            Ok(emit_check(&r, common.format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(UsageError(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
