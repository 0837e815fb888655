use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skyfair_core::baselines::{evaluate_cell, exhaustive_search, pso_search, CandidateEvaluation};
use skyfair_core::config::MAX_DEFAULT_CANDIDATES;
use skyfair_core::mobility::write_trajectory_csv;
use skyfair_core::qplace::{run_session, Lattice, LatticeEnv, QTable};
use skyfair_core::simkit::{run_experiment, Arm, RunOptions};
use skyfair_core::{generate_scenario, Error, Evaluator, Exec, ExperimentConfig, Preset, Streams};

const VERSION: &str = concat!("v", env!("CARGO_PKG_VERSION"));

#[derive(Parser)]
#[command(name = "skyfair", version = VERSION, about = "Aerial base station placement for proportional fairness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the timeline and write CSV metrics plus a manifest.
    Simulate(SimulateArgs),
    /// Place the aerial station once on the initial user snapshot.
    Place(PlaceArgs),
    /// Q-table utilities.
    Qtable {
        #[command(subcommand)]
        command: QtableCommand,
    },
}

#[derive(Subcommand)]
enum QtableCommand {
    /// Print the header and row count of a Q-table file.
    Inspect { path: PathBuf },
}

#[derive(Args)]
struct CommonArgs {
    /// `key = value` configuration file; overrides the preset.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Base parameter set: table1 (full scale) or desk.
    #[arg(long, default_value = "table1")]
    preset: String,
    /// Master seed; overrides the config file.
    #[arg(long)]
    seed: Option<u64>,
    /// Warm-start Q-table.
    #[arg(long)]
    qtable_in: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated arms: traditional, saq, pso, exhaustive.
    #[arg(long)]
    arms: Option<String>,
    #[arg(long)]
    duration_s: Option<f64>,
    #[arg(long, default_value = "out")]
    out_dir: PathBuf,
    /// Where to save the final SA-Q table.
    #[arg(long)]
    qtable_out: Option<PathBuf>,
    /// Also write positions.csv (stations, attractors, final users and aerial positions).
    #[arg(long)]
    dump_positions: bool,
    /// Also write trajectory.csv with user positions at every session.
    #[arg(long)]
    dump_trajectory: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exhaustive,
    Pso,
    Saq,
    All,
}

#[derive(Args)]
struct PlaceArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value = "all")]
    method: Method,
    /// Exhaustive-search lattice stride; overrides the config file.
    #[arg(long)]
    stride: Option<usize>,
    /// Allow exhaustive search over more than the default candidate budget.
    #[arg(long)]
    i_know_this_is_huge: bool,
}

enum Failure {
    Config(String),
    Io(String),
    Other(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Io(_) => 3,
            Failure::Other(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Io(m) | Failure::Other(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Config { .. } | Error::Parse { .. } | Error::Incompatible(_) => {
                Failure::Config(msg)
            }
            Error::Io { .. } => Failure::Io(msg),
            Error::Domain(_) | Error::State(_) => Failure::Other(msg),
        }
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("SKYFAIR_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Config(format!("SKYFAIR_THREADS: '{raw}' is not a thread count")))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Other(format!("thread pool: {e}")))?;
    }
    Ok(())
}

/// Preset, then config file, then flags.
fn load_config(common: &CommonArgs) -> Result<ExperimentConfig, Failure> {
    let preset: Preset = common
        .preset
        .parse()
        .map_err(|e: String| Failure::Config(format!("preset: {e}")))?;
    let mut config = ExperimentConfig::preset(preset);
    if let Some(path) = &common.config {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        config.apply_document(&text)?;
    }
    if let Some(seed) = common.seed {
        config.scenario.seed = seed;
    }
    Ok(config)
}

fn load_qtable(path: &Option<PathBuf>, lattice: &Lattice) -> Result<Option<QTable>, Failure> {
    path.as_ref()
        .map(|p| QTable::load(p, lattice).map_err(Failure::from))
        .transpose()
}

fn manifest(config: &ExperimentConfig, subcommand: &str, out_dir: &Path) -> String {
    format!(
        "# skyfair {VERSION}\n# subcommand = {subcommand}\n# out_dir = {}\n{}",
        out_dir.display(),
        config.to_document()
    )
}

fn simulate(args: SimulateArgs) -> Result<(), Failure> {
    let mut config = load_config(&args.common)?;
    if let Some(arms) = &args.arms {
        config.set("arms", arms)?;
    }
    if let Some(d) = args.duration_s {
        config.duration_s = d;
    }
    config.validate()?;
    let lattice = Lattice::from_region(&config.scenario.region, config.scenario.upsilon_m)?;
    let warm_start = load_qtable(&args.common.qtable_in, &lattice)?;

    let out = run_experiment(
        &config,
        RunOptions {
            warm_start,
            record_trajectory: args.dump_trajectory,
            exec: Exec::default(),
        },
    )?;

    fs::create_dir_all(&args.out_dir)
        .map_err(|e| Failure::Io(format!("{}: {e}", args.out_dir.display())))?;
    let mut series = Vec::new();
    out.log
        .write_timeseries_csv(&mut series)
        .map_err(|e| Failure::Io(e.to_string()))?;
    write_file(&args.out_dir.join("fairness_timeseries.csv"), &series)?;
    let mut cdf = Vec::new();
    out.log
        .write_sinr_csv(&mut cdf)
        .map_err(|e| Failure::Io(e.to_string()))?;
    write_file(&args.out_dir.join("sinr_cdf.csv"), &cdf)?;
    if args.dump_positions {
        write_file(
            &args.out_dir.join("positions.csv"),
            out.positions_csv().as_bytes(),
        )?;
    }
    if args.dump_trajectory {
        let mut t = Vec::new();
        write_trajectory_csv(&mut t, &out.trajectory).map_err(|e| Failure::Io(e.to_string()))?;
        write_file(&args.out_dir.join("trajectory.csv"), &t)?;
    }
    write_file(
        &args.out_dir.join("manifest.cfg"),
        manifest(&config, "simulate", &args.out_dir).as_bytes(),
    )?;
    if let Some(path) = &args.qtable_out {
        match &out.qtable {
            Some(q) => q.save(path)?,
            None => {
                return Err(Failure::Config(
                    "--qtable-out needs the saq arm to be enabled".into(),
                ))
            }
        }
    }
    println!(
        "wrote {} rows for {} to {}",
        out.log.rows.len(),
        Arm::format_list(&out.log.arms),
        args.out_dir.display()
    );
    Ok(())
}

fn place(args: PlaceArgs) -> Result<(), Failure> {
    let mut config = load_config(&args.common)?;
    if let Some(s) = args.stride {
        config.exhaustive_stride = Some(s);
    }
    config.validate()?;
    let sc = &config.scenario;
    let streams = Streams::new(sc.seed);
    let scenario = generate_scenario(sc, &streams)?;
    let lattice = Lattice::from_region(&sc.region, sc.upsilon_m)?;
    let ev = Evaluator::new(&scenario, &scenario.initial_users)?;
    let exec = Exec::default();

    let methods: &[Method] = match args.method {
        Method::All => &[Method::Exhaustive, Method::Pso, Method::Saq],
        Method::Exhaustive => &[Method::Exhaustive],
        Method::Pso => &[Method::Pso],
        Method::Saq => &[Method::Saq],
    };
    let mut lines = vec!["method,x_m,y_m,h_m,theta,feasible".to_string()];
    for m in methods {
        let (name, c): (&str, CandidateEvaluation) = match m {
            Method::Exhaustive => {
                let stride = match config.exhaustive_stride {
                    Some(s) => u32::try_from(s)
                        .map_err(|_| Failure::Config("exhaustive_stride: too large".into()))?,
                    None => lattice.stride_for_budget(MAX_DEFAULT_CANDIDATES),
                };
                let n = lattice.strided_len(stride);
                if n > MAX_DEFAULT_CANDIDATES && !args.i_know_this_is_huge {
                    return Err(Failure::Config(format!(
                        "exhaustive_stride: stride {stride} means {n} candidates; \
                         pass --i-know-this-is-huge to proceed"
                    )));
                }
                (
                    "exhaustive",
                    exhaustive_search(&ev, &lattice, stride, exec)?,
                )
            }
            Method::Pso => {
                let mut rng = streams.stream("pso");
                (
                    "pso",
                    pso_search(&ev, &lattice, &config.pso, &mut rng, exec)?.candidate,
                )
            }
            Method::Saq | Method::All => {
                let mut q = load_qtable(&args.common.qtable_in, &lattice)?
                    .unwrap_or_else(|| QTable::new(lattice));
                let mut env =
                    LatticeEnv::new(Evaluator::new(&scenario, &scenario.initial_users)?, lattice);
                let mut rng = streams.stream("saq.learning");
                let out = run_session(
                    &mut q,
                    &mut env,
                    lattice.central_cell(),
                    &sc.learn,
                    sc.delta1,
                    &mut rng,
                )?;
                ("saq", evaluate_cell(&ev, &lattice, out.best_cell)?)
            }
        };
        lines.push(format!(
            "{name},{},{},{},{},{}",
            c.position.x, c.position.y, c.position.z, c.terms.theta, c.feasible
        ));
    }
    println!("{}", lines.join("\n"));
    Ok(())
}

fn inspect(path: &Path) -> Result<(), Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let q = QTable::from_text(&text)?;
    let l = q.lattice();
    println!("{}", text.lines().next().unwrap_or_default());
    println!(
        "lattice {} {} {} {} {} {} {}",
        l.origin.x, l.origin.y, l.origin.z, l.pitch, l.dims[0], l.dims[1], l.dims[2]
    );
    println!("rows {}", q.len());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Simulate(a) => simulate(a),
        Command::Place(a) => place(a),
        Command::Qtable {
            command: QtableCommand::Inspect { path },
        } => inspect(&path),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
