use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use rootbench::grading::{presets, RootGrading, WeightedDynkinDiagram};
use rootbench::multiplicity;
use rootbench::ohmori::SystemSpec;
use rootbench::scenarios::{list_scenarios, Scenario};
use rootbench::torus::{make_ohmori_torus, CyclicParams, TorusElement};
use rootbench::{RootSystem, SimpleType};

#[derive(Parser)]
#[command(name = "rootbench", version, about = "Root systems, gradings and exact Ohmori systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List or run the built-in case studies
    #[command(subcommand)]
    Scenario(ScenarioCmd),
    /// Root system utilities
    #[command(subcommand)]
    Rootsys(RootsysCmd),
    /// Named weighted diagrams
    #[command(subcommand)]
    Grading(GradingCmd),
    /// Exact Ohmori systems
    #[command(subcommand)]
    Ohmori(OhmoriCmd),
    /// Torus elements over F_q
    #[command(subcommand)]
    Torus(TorusCmd),
    /// Multiplicity tables for S_n
    #[command(subcommand)]
    Mult(MultCmd),
}

#[derive(Subcommand)]
enum ScenarioCmd {
    List {
        #[arg(long)]
        json: bool,
    },
    Run(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    name: String,
    /// Type, case or n, depending on the scenario
    variant: Option<String>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    e: Option<u32>,
    /// Print the JSON report instead of the summary
    #[arg(long)]
    json: bool,
    /// Append the JSON report as one line to this file
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum RootsysCmd {
    /// Canonical JSON document: type, rank, positive roots, Cartan matrix
    Dump { r#type: SimpleType },
}

#[derive(Subcommand)]
enum GradingCmd {
    List,
    Show { preset: String },
}

#[derive(Subcommand)]
enum OhmoriCmd {
    /// Solve a system given as a JSON spec file ("-" for stdin)
    Solve { spec: PathBuf },
}

#[derive(Subcommand)]
enum TorusCmd {
    Eval(TorusArgs),
}

#[derive(Args)]
struct TorusArgs {
    #[arg(long = "type")]
    ty: SimpleType,
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    e: u32,
    /// Ohmori vector n; t = h(ν^{n_1}, …)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "exponents")]
    n: Option<Vec<i64>>,
    /// Raw exponents over a generator of F_q^×
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    exponents: Option<Vec<i64>>,
    /// Use a square root of ν (with --n)
    #[arg(long, requires = "n")]
    half: bool,
}

#[derive(Subcommand)]
enum MultCmd {
    Table {
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::FAILURE } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn emit(text: &str) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn print_json(v: &impl serde::Serialize) -> anyhow::Result<()> {
    emit(&format!("{}\n", serde_json::to_string(v)?))
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Scenario(ScenarioCmd::List { json }) => {
            if json {
                print_json(&list_scenarios())?;
            } else {
                let mut text = String::new();
                for s in list_scenarios() {
                    text += &format!("{:<14} {}\n", s.name, s.description);
                    text += &format!("{:<14} topic: {}\n", "", s.topic);
                    text += &format!("{:<14} variants: {}; params: {}\n", "", s.variants, s.params);
                }
                emit(&text)?;
            }
        }
        Command::Scenario(ScenarioCmd::Run(args)) => {
            let scenario = Scenario::from_args(&args.name, args.variant.as_deref(), args.p, args.e)?;
            let report = scenario.run()?;
            if args.json {
                emit(&format!("{}\n", report.to_json_line()))?;
            } else {
                emit(&report.summary())?;
            }
            if let Some(path) = args.report {
                let mut f = OpenOptions::new()
                    .create(true)
                    .append(true)
                    .open(&path)
                    .with_context(|| format!("opening {}", path.display()))?;
                writeln!(f, "{}", report.to_json_line())?;
            }
            return Ok(report.pass);
        }
        Command::Rootsys(RootsysCmd::Dump { r#type }) => {
            print_json(&RootSystem::new(r#type).to_document())?;
        }
        Command::Grading(GradingCmd::List) => {
            emit(&(presets::names().join("\n") + "\n"))?;
        }
        Command::Grading(GradingCmd::Show { preset }) => show_preset(&preset)?,
        Command::Ohmori(OhmoriCmd::Solve { spec }) => {
            let text = if spec.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(&spec).with_context(|| format!("reading {}", spec.display()))?
            };
            let spec = SystemSpec::from_json(&text)?;
            let rs = RootSystem::new(spec.simple_type);
            print_json(&spec.build(&rs)?.solve())?;
        }
        Command::Torus(TorusCmd::Eval(a)) => {
            let params = CyclicParams::new(a.p, a.e)?;
            let rs = RootSystem::new(a.ty);
            let t = match (&a.n, &a.exponents) {
                (Some(n), _) => make_ohmori_torus(params, n, a.half)?,
                (None, Some(x)) => TorusElement::new(params, x),
                (None, None) => bail!("one of --n or --exponents is required"),
            };
            let kernel = t.kernel_subsystem(&rs)?;
            let kernel_type: Vec<String> = if kernel.is_empty() {
                Vec::new()
            } else {
                kernel.classify_type()?.iter().map(ToString::to_string).collect()
            };
            print_json(&json!({
                "order": t.order(),
                "exponents": t.exponents(),
                "kernel_type": kernel_type,
            }))?;
        }
        Command::Mult(MultCmd::Table { n, json }) => {
            if !(1..=multiplicity::MAX_N).contains(&n) {
                bail!("n must be between 1 and {}", multiplicity::MAX_N);
            }
            let table = multiplicity::kawanaka_table(n)?;
            if json {
                print_json(&table)?;
            } else {
                emit(&table.render())?;
            }
        }
    }
    Ok(true)
}

fn show_preset(name: &str) -> anyhow::Result<()> {
    if name == presets::E8_D1 {
        let e8 = RootSystem::new("E8".parse()?);
        let d = presets::e8_d1(&e8)?;
        return print_json(&json!({
            "spec": d.to_spec(),
            "subsystem_type": d.subsystem().classify_type()?.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "functional": d.ambient_functional().map(|f| f.iter().map(ToString::to_string).collect::<Vec<_>>()),
            "levels": level_counts(&d),
            "index_exponent": d.index_exponent()?,
        }));
    }
    let Some((t, w)) = presets::diagram_type(name) else {
        bail!("unknown preset {name:?}; known: {}", presets::names().join(", "));
    };
    let rs = RootSystem::new(t);
    let d = WeightedDynkinDiagram::new(&rs, w)?;
    print_json(&json!({
        "spec": d.to_spec(),
        "levels": level_counts(&d),
        "index_exponent": d.index_exponent()?,
    }))
}

/// `[level, number of positive roots]`, level 0 counting the Levi positives.
fn level_counts(d: &dyn RootGrading) -> Vec<[i64; 2]> {
    let levels = d.levels();
    std::iter::once([0, d.levi_positives().len() as i64])
        .chain(
            levels
                .level_sets
                .iter()
                .filter(|(i, _)| **i > 0)
                .map(|(i, roots)| [*i, roots.len() as i64]),
        )
        .collect()
}
