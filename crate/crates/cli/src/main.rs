use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bannai_ito::bimodule::{BIModule, Family, Generator, TwistSign};
use bannai_ito::linalg::{parse_rational, Rational};
use bannai_ito_cli::commands::{self, Fixture};
use bannai_ito_cli::report::ErrorBody;
use bannai_ito_cli::scan::{default_grid, scan};
use bannai_ito_cli::{read_module, write_module, Exit, Report};
use clap::{Parser, Subcommand};
use serde::Serialize;

/// Exact-arithmetic tools for finite-dimensional Bannai–Ito modules.
///
/// Exit status: 0 success, 1 a mathematical property failed, 2 malformed
/// input, 3 indeterminate verdict.
#[derive(Debug, Parser)]
#[command(name = "bimod", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the module file or report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print no report on stdout (module files are still emitted).
    #[arg(long, global = true)]
    quiet: bool,
    /// Omit the `elapsed_us` field, making reports byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build E_d(a,b,c) or O_d(a,b,c), optionally twisted.
    Build {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// `e,e'` with entries 1 or -1.
        #[arg(long, allow_hyphen_values = true, default_value = "1,1")]
        twist: String,
    },
    /// Check the defining relations.
    Check { input: Option<PathBuf> },
    /// Irreducibility verdict, criterion and identification.
    Classify { input: Option<PathBuf> },
    /// Name the family module isomorphic to an irreducible module.
    Identify { input: Option<PathBuf> },
    /// Decide isomorphism; exits 0 if isomorphic, 1 if not.
    Iso { first: PathBuf, second: PathBuf },
    /// Minimal polynomial of a generator.
    Minpoly {
        input: Option<PathBuf>,
        #[arg(long = "gen", default_value = "X")]
        generator: Generator,
    },
    /// Criterion against oracle over a grid of (a,b,c).
    Scan {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        d: usize,
        /// Comma-separated rationals; defaults to 0,1/2,-1/2,1,-1,3/2,-3/2,2.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
    /// Emit one of the two literal example modules.
    Fixture { name: Fixture },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Build { .. } => "build",
            Command::Check { .. } => "check",
            Command::Classify { .. } => "classify",
            Command::Identify { .. } => "identify",
            Command::Iso { .. } => "iso",
            Command::Minpoly { .. } => "minpoly",
            Command::Scan { .. } => "scan",
            Command::Fixture { .. } => "fixture",
        }
    }
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

enum Output {
    Module(Box<BIModule>),
    Report(String, Exit),
}

struct Ctx {
    args: BTreeMap<String, String>,
    no_timing: bool,
    start: Instant,
}

impl Ctx {
    fn arg(&mut self, k: &str, v: impl Into<String>) {
        self.args.insert(k.into(), v.into());
    }

    fn report<T: Serialize>(&self, command: &'static str, body: T, exit: Exit) -> Output {
        let mut r = Report::new(command, self.args.clone(), body, exit);
        if !self.no_timing {
            r.elapsed_us = Some(self.start.elapsed().as_micros() as u64);
        }
        Output::Report(r.to_json(), exit)
    }
}

fn path_label(p: Option<&Path>) -> String {
    p.map_or_else(|| "-".to_string(), |p| p.display().to_string())
}

fn load(p: Option<&Path>) -> Result<BIModule, Failure> {
    let text = match p {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(read_module(&text)?)
}

fn rational_arg(name: &str, s: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(|e| Failure(format!("--{name}: {e}")))
}

fn run(cmd: &Command, ctx: &mut Ctx) -> Result<Output, Failure> {
    let name = cmd.name();
    Ok(match cmd {
        Command::Build {
            family,
            d,
            a,
            b,
            c,
            twist,
        } => {
            for (k, v) in [
                ("family", family.as_str()),
                ("a", a),
                ("b", b),
                ("c", c),
                ("twist", twist),
            ] {
                ctx.arg(k, v);
            }
            ctx.arg("d", d.to_string());
            let twist: TwistSign = twist.parse().map_err(Failure)?;
            let m = commands::build(
                *family,
                *d,
                rational_arg("a", a)?,
                rational_arg("b", b)?,
                rational_arg("c", c)?,
                twist,
            )?;
            Output::Module(Box::new(m))
        }
        Command::Fixture { name: f } => {
            ctx.arg("name", f.as_str());
            Output::Module(Box::new(commands::fixture(*f)))
        }
        Command::Check { input } => {
            ctx.arg("input", path_label(input.as_deref()));
            let (body, exit) = commands::check(&load(input.as_deref())?);
            ctx.report(name, body, exit)
        }
        Command::Classify { input } => {
            ctx.arg("input", path_label(input.as_deref()));
            let (body, exit) = commands::classify(&load(input.as_deref())?);
            ctx.report(name, body, exit)
        }
        Command::Identify { input } => {
            ctx.arg("input", path_label(input.as_deref()));
            let (body, exit) = commands::identify_cmd(&load(input.as_deref())?);
            ctx.report(name, body, exit)
        }
        Command::Iso { first, second } => {
            ctx.arg("first", path_label(Some(first)));
            ctx.arg("second", path_label(Some(second)));
            let (body, exit) = commands::iso(&load(Some(first))?, &load(Some(second))?);
            ctx.report(name, body, exit)
        }
        Command::Minpoly { input, generator } => {
            ctx.arg("input", path_label(input.as_deref()));
            ctx.arg("gen", generator.to_string());
            let (body, exit) = commands::minpoly(&load(input.as_deref())?, *generator);
            ctx.report(name, body, exit)
        }
        Command::Scan { family, d, grid } => {
            ctx.arg("family", family.as_str());
            ctx.arg("d", d.to_string());
            let grid = match grid {
                Some(g) => {
                    ctx.arg("grid", g.clone());
                    g.split(',')
                        .map(|s| rational_arg("grid", s))
                        .collect::<Result<Vec<_>, _>>()?
                }
                None => default_grid(),
            };
            let (body, exit) = scan(*family, *d, &grid)?;
            ctx.report(name, body, exit)
        }
    })
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ctx = Ctx {
        args: BTreeMap::new(),
        no_timing: cli.no_timing,
        start: Instant::now(),
    };
    let name = cli.command.name();
    let out = cli.out.as_deref();

    let exit = match run(&cli.command, &mut ctx) {
        Ok(Output::Module(m)) => {
            let text = write_module(&m);
            match (out, emit(&text, out)) {
                (_, Err(Failure(e))) => {
                    eprintln!("bimod {name}: {e}");
                    Exit::MalformedInput
                }
                (Some(p), Ok(())) => {
                    ctx.arg("out", p.display().to_string());
                    if let Output::Report(r, _) = ctx.report(name, commands::build_summary(&m), Exit::Ok) {
                        if !cli.quiet {
                            print!("{r}");
                        }
                    }
                    Exit::Ok
                }
                (None, Ok(())) => Exit::Ok,
            }
        }
        Ok(Output::Report(text, exit)) => {
            if out.is_some() || !cli.quiet {
                if let Err(Failure(e)) = emit(&text, out) {
                    eprintln!("bimod {name}: {e}");
                    return ExitCode::from(Exit::MalformedInput.code() as u8);
                }
            }
            exit
        }
        Err(Failure(e)) => {
            eprintln!("bimod {name}: {e}");
            if !cli.quiet {
                if let Output::Report(r, _) = ctx.report(name, ErrorBody { error: e }, Exit::MalformedInput) {
                    print!("{r}");
                }
            }
            Exit::MalformedInput
        }
    };
    ExitCode::from(exit.code() as u8)
}
