use std::path::{Path, PathBuf};
use std::process::ExitCode;

use charts::{Case, Level, OrthExample};
use clap::{Args, Parser, Subcommand, ValueEnum};
use exactalg::Budget;
use lmodel::commands::{self, out_path, write_file, Output};
use lmodel::{run_suite, CliError, FieldChoice, RunConfig, Suite};

/// Verification pipelines for local models of ramified unitary and orthogonal groups.
#[derive(Parser)]
#[command(name = "lmodel", version)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// Coefficient field: 3, 5, 7, 11 or Q.
    #[arg(long, global = true, default_value = "3")]
    prime: FieldChoice,
    /// Maximum number of S-pairs per Gröbner basis.
    #[arg(long, global = true, default_value_t = Budget::default().max_pairs as u64, value_parser = clap::value_parser!(u64).range(1..))]
    budget_pairs: u64,
    /// Maximum sugar degree per Gröbner basis.
    #[arg(long, global = true, default_value_t = Budget::default().max_degree, value_parser = clap::value_parser!(u32).range(1..))]
    budget_degree: u32,
    /// u-adic precision for lattice-chain comparisons (default 2n + 2).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..1000))]
    precision: Option<u64>,
    /// Output directory; reports are also written there.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    A,
    B,
    B1,
    PicardI1,
    Orth1,
    Orth2,
}

impl From<CaseArg> for Case {
    fn from(c: CaseArg) -> Case {
        match c {
            CaseArg::A => Case::A,
            CaseArg::B => Case::B,
            CaseArg::B1 => Case::B1,
            CaseArg::PicardI1 => Case::PicardI1,
            CaseArg::Orth1 => Case::Orth(OrthExample::Example1),
            CaseArg::Orth2 => Case::Orth(OrthExample::Example2),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Naive,
    Wedge,
    Spin,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::Naive => Level::Naive,
            LevelArg::Wedge => Level::Wedge,
            LevelArg::Spin => Level::Spin,
        }
    }
}

#[derive(Args)]
struct Signature {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
    /// Parahoric labels, comma separated (e.g. `0,1` or `3'`); default Iwahori.
    #[arg(long)]
    index: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List Adm^I(μ) with lengths and extreme markers.
    Admissible {
        #[command(flatten)]
        sig: Signature,
        /// Also write the alcove picture (n ≤ 5).
        #[arg(long)]
        svg: bool,
    },
    /// Emit a chart ideal as interchange JSON.
    Chart {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_enum, default_value = "naive")]
        level: LevelArg,
    },
    /// Decide flatness over k[u]_(u) of an ideal read from a JSON file.
    Flatness {
        file: PathBuf,
        /// Name of the uniformizer variable.
        #[arg(long, default_value = "u")]
        var: String,
    },
    /// Run a verification suite: picard, orthogonal, special-parahoric, spin, weyl, conjectures.
    Verify { suite: String },
    /// Write the alcove picture of Adm(μ) (n ≤ 5).
    Svg {
        #[command(flatten)]
        sig: Signature,
    },
}

fn config(run: &RunArgs) -> RunConfig {
    RunConfig {
        field: run.prime,
        budget: Budget { max_pairs: run.budget_pairs as usize, max_degree: run.budget_degree },
        precision: run.precision.map(|p| p as usize),
        out: run.out.clone(),
        seed: run.seed,
    }
}

fn emit(out: &Output, dir: Option<&Path>, name: &str) -> Result<i32, CliError> {
    let text = serde_json::to_string_pretty(&out.json).expect("serializable") + "\n";
    if dir.is_some() {
        write_file(&out_path(dir, name), &text)?;
    }
    print!("{text}");
    Ok(out.status.exit_code())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let cfg = config(&cli.run);
    let dir = cfg.out.as_deref();
    match cli.command {
        Command::Admissible { sig, svg } => {
            let stem = format!("admissible-{}-{}-{}", sig.n, sig.r, sig.s);
            let svg_path = svg.then(|| out_path(dir, &format!("{stem}.svg")));
            let out = commands::admissible(sig.n, sig.r, sig.s, sig.index.as_deref(), svg_path.as_deref())?;
            emit(&out, dir, &format!("{stem}.json"))
        }
        Command::Chart { case, n, r, s, level } => {
            let spec = commands::chart_spec(case.into(), n, r, s, level.into())?;
            let out = commands::chart(&cfg, &spec)?;
            emit(&out, dir, &format!("chart-{}-{}-{}-{}.json", lmodel::suites::case_name(spec.case), spec.n, spec.r, spec.s))
        }
        Command::Flatness { file, var } => {
            let out = commands::flatness_file(&cfg, &file, &var)?;
            emit(&out, dir, "flatness.json")
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let bundle = run_suite(suite, &cfg);
            let out = Output { json: serde_json::to_value(&bundle).expect("serializable"), status: bundle.status };
            emit(&out, dir, &format!("verify-{}.json", suite.name()))
        }
        Command::Svg { sig } => {
            let svg = commands::svg(sig.n, sig.r, sig.s, sig.index.as_deref())?;
            match dir {
                Some(_) => write_file(&out_path(dir, &format!("alcove-{}-{}-{}.svg", sig.n, sig.r, sig.s)), &svg)?,
                None => print!("{svg}"),
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e @ CliError::Usage(_)) => {
            eprintln!("{e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
