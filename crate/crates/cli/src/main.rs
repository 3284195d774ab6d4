mod render;
mod selftest;

use std::fmt::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::to_string_pretty;

use vogan_core::json::{LiftJson, MatricesJson, OrbitSpaceJson, PacketJson, ReportJson};
use vogan_core::kl::{cache_load, cache_store, m_matrix, KlEngine, CACHE_FILE_NAME};
use vogan_core::ktheory::ArthurData;
use vogan_core::parse::{parse_arthur, parse_lambda};
use vogan_core::square::endoscopy_square_check;
use vogan_core::{geometry, ArthurParameter, Error, InfinitesimalParameter, DEFAULT_MAX_POINTS};

use render::{bmatrix, grid, table, tabular, tex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Latex,
}

/// Orbits, multiplicity matrices, endoscopic lifting and ABV-packets for
/// p-adic GL(n).
#[derive(Debug, Parser)]
#[command(name = "vogan", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,

    /// Directory holding a persistent KL polynomial cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Refuse infinitesimal parameters with more points than this on a line.
    #[arg(long, default_value_t = DEFAULT_MAX_POINTS, global = true)]
    max_points: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Orbits of the Vogan variety, with dimensions and rank invariants.
    Orbits {
        #[arg(long, value_parser = lambda_arg)]
        lambda: InfinitesimalParameter,
    },
    /// Spectral and geometric multiplicity matrices.
    Matrices {
        #[arg(long, value_parser = lambda_arg)]
        lambda: InfinitesimalParameter,
    },
    /// Restriction and lifting matrices for the Levi cut out by PSI.
    Lift {
        #[arg(value_parser = arthur_arg)]
        psi: ArthurParameter,
        /// Group consecutive components into factors of these degrees.
        #[arg(long, value_parser = levi_arg)]
        levi: Option<LeviDegrees>,
    },
    /// The A-packet and ABV-packet of PSI.
    Packet {
        #[arg(value_parser = arthur_arg)]
        psi: ArthurParameter,
    },
    /// Evaluate the four corners of the endoscopy square for PSI.
    CheckSquare {
        #[arg(value_parser = arthur_arg)]
        psi: ArthurParameter,
    },
    /// Recompute the worked GL(2)/GL(4) examples and compare with golden data.
    Selftest,
}

fn lambda_arg(s: &str) -> Result<InfinitesimalParameter, String> {
    parse_lambda(s).map_err(|e| e.to_string())
}

fn arthur_arg(s: &str) -> Result<ArthurParameter, String> {
    parse_arthur(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone)]
struct LeviDegrees(Vec<u64>);

fn levi_arg(s: &str) -> Result<LeviDegrees, String> {
    s.split(',')
        .map(|t| match t.trim().parse::<u64>() {
            Ok(0) | Err(_) => Err(format!("invalid Levi degree {t:?}")),
            Ok(m) => Ok(m),
        })
        .collect::<Result<_, _>>()
        .map(LeviDegrees)
}

/// Failure of a subcommand after argument parsing.
enum Failure {
    Core(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

fn orbits(lambda: &InfinitesimalParameter, cli: &Cli) -> Outcome {
    let space = geometry::build_orbit_space(lambda, cli.max_points)?;
    let rows: Vec<Vec<String>> = space
        .orbits()
        .iter()
        .enumerate()
        .map(|(i, o)| vec![i.to_string(), o.dim.to_string(), o.multisegment.to_string()])
        .collect();
    Ok(match cli.format {
        Format::Json => to_string_pretty(&OrbitSpaceJson::new(&space)).expect("serializable") + "\n",
        Format::Table => {
            let mut s = format!("lambda = {}\ndim V = {}, dim H = {}\n", space.lambda(), space.dim_v(), space.dim_h());
            s += &table(&["#", "dim", "multisegment"], &rows);
            s
        }
        Format::Latex => tabular(&["$i$", "$\\dim C_i$", "multisegment"], &rows),
    })
}

fn matrices(lambda: &InfinitesimalParameter, cli: &Cli, engine: &KlEngine) -> Outcome {
    let space = geometry::build_orbit_space(lambda, cli.max_points)?;
    let mats = m_matrix(&space, engine)?;
    Ok(match cli.format {
        Format::Json => to_string_pretty(&MatricesJson::new(&space, &mats)).expect("serializable") + "\n",
        Format::Table => {
            let mut s = format!("lambda = {}\n", space.lambda());
            for (i, o) in space.orbits().iter().enumerate() {
                writeln!(s, "C{i}: {} (dim {})", o.multisegment, o.dim).unwrap();
            }
            s += "m =\n";
            s += &grid(&mats.m, "  ");
            s += "c =\n";
            s += &grid(&mats.c, "  ");
            s
        }
        Format::Latex => {
            let mut s = String::new();
            for (i, o) in space.orbits().iter().enumerate() {
                writeln!(s, "% C_{i} = {}", o.multisegment).unwrap();
            }
            s += &bmatrix("m_\\lambda", &mats.m);
            s += &bmatrix("c_\\lambda", &mats.c);
            s
        }
    })
}

fn lift(psi: &ArthurParameter, levi: &Option<LeviDegrees>, cli: &Cli, engine: &KlEngine) -> Outcome {
    let factors = match levi {
        Some(d) => psi.levi_grouped(&d.0)?,
        None => psi.levi_of(),
    };
    let data = ArthurData::with_levi(psi, factors, engine, cli.max_points)?;
    let j = LiftJson::new(&data)?;
    let e = &data.endoscopy;
    let mats = [
        ("eps_star_std", e.eps_star_std().matrix),
        ("eps_star_simple", e.eps_star_simple()?.matrix),
        ("lift_std", e.lift_std()?.matrix),
        ("lift_sim", e.lift_sim()?.matrix),
    ];
    Ok(match cli.format {
        Format::Json => to_string_pretty(&j).expect("serializable") + "\n",
        Format::Table => {
            let mut s = format!("psi = {}\nlevi = {}\n", j.psi, j.levi.join(" x "));
            for (i, o) in j.orbits.iter().enumerate() {
                writeln!(s, "G{i}: {o}").unwrap();
            }
            for (i, o) in j.levi_orbits.iter().enumerate() {
                writeln!(s, "M{i}: {o}").unwrap();
            }
            for (name, m) in &mats {
                writeln!(s, "{name} =").unwrap();
                s += &grid(m, "  ");
            }
            s
        }
        Format::Latex => {
            let mut s = String::new();
            for (name, m) in &mats {
                s += &bmatrix(&format!("\\mathrm{{{}}}", name.replace('_', "\\_")), m);
            }
            s
        }
    })
}

fn packet(psi: &ArthurParameter, cli: &Cli, engine: &KlEngine) -> Outcome {
    let data = ArthurData::new(psi, engine, cli.max_points)?;
    let j = PacketJson::new(&data)?;
    Ok(match cli.format {
        Format::Json => to_string_pretty(&j).expect("serializable") + "\n",
        Format::Table => {
            let evs: Vec<String> = j.eta_evs.iter().map(|v| v.to_string()).collect();
            let rows = vec![
                vec!["psi".to_string(), j.psi.clone()],
                vec!["lambda".to_string(), j.lambda.clone()],
                vec!["pi_psi".to_string(), j.pi_psi.clone()],
                vec!["C_psi".to_string(), j.pi_psi.clone()],
                vec!["d(psi)".to_string(), j.d_psi.to_string()],
                vec!["eta^Evs".to_string(), format!("[{}]", evs.join(", "))],
                vec!["ABV-packet".to_string(), format!("{{{}}}", j.abv_packet.join(", "))],
            ];
            table(&["field", "value"], &rows)
        }
        Format::Latex => {
            let mut s = String::new();
            writeln!(s, "\\psi = {}", tex(&j.psi)).unwrap();
            writeln!(s, "\\pi_\\psi = {}", tex(&j.pi_psi)).unwrap();
            writeln!(s, "d(\\psi) = {}", j.d_psi).unwrap();
            let packet: Vec<String> = j.abv_packet.iter().map(|m| tex(m)).collect();
            writeln!(s, "\\Pi^{{\\mathrm{{ABV}}}}_\\psi = \\{{{}\\}}", packet.join(", ")).unwrap();
            s
        }
    })
}

fn check_square(psi: &ArthurParameter, cli: &Cli, engine: &KlEngine) -> Outcome {
    let report = endoscopy_square_check(psi, engine, cli.max_points)?;
    let j = ReportJson::new(&report);
    let rows: Vec<Vec<String>> = j
        .square
        .iter()
        .map(|r| {
            vec![
                r.sheaf.clone(),
                r.top.to_string(),
                r.left.to_string(),
                r.bottom.to_string(),
                r.right.to_string(),
                if r.pass { "pass" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    let header = ["F", "top", "left", "bottom", "right", "status"];
    let text = match cli.format {
        Format::Json => to_string_pretty(&j).expect("serializable") + "\n",
        Format::Table => format!("psi = {}\nlambda = {}\n{}", j.psi, j.lambda, table(&header, &rows)),
        Format::Latex => tabular(&header, &rows),
    };
    if report.all_pass() {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Mismatch(format!("endoscopy square fails for {}", j.psi)))
    }
}

fn selftest(cli: &Cli, engine: &KlEngine) -> Outcome {
    let outcomes = selftest::run(engine, cli.max_points)?;
    let mut s = String::new();
    let mut diffs = String::new();
    for o in &outcomes {
        writeln!(s, "{}: {}", o.name, if o.matched { "match" } else { "MISMATCH" }).unwrap();
        if !o.matched {
            write!(diffs, "--- expected {}\n{}+++ actual\n{}", o.name, o.expected, o.actual).unwrap();
        }
    }
    let good = outcomes.iter().filter(|o| o.matched).count();
    writeln!(s, "{good}/{} examples match", outcomes.len()).unwrap();
    if good == outcomes.len() {
        Ok(s)
    } else {
        print!("{s}");
        Err(Failure::Mismatch(diffs))
    }
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    cli.cache_dir.as_ref().map(|d| d.join(CACHE_FILE_NAME))
}

fn load_cache(engine: &KlEngine, path: &Path) -> Result<(), Error> {
    if path.exists() {
        cache_load(engine, path)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let engine = KlEngine::new();
    let cache = cache_path(cli);
    if let Some(p) = &cache {
        load_cache(&engine, p)?;
    }
    let out = match &cli.command {
        Command::Orbits { lambda } => orbits(lambda, cli),
        Command::Matrices { lambda } => matrices(lambda, cli, &engine),
        Command::Lift { psi, levi } => lift(psi, levi, cli, &engine),
        Command::Packet { psi } => packet(psi, cli, &engine),
        Command::CheckSquare { psi } => check_square(psi, cli, &engine),
        Command::Selftest => selftest(cli, &engine),
    }?;
    if let (Some(p), Some(dir)) = (&cache, &cli.cache_dir) {
        std::fs::create_dir_all(dir).map_err(Error::from)?;
        cache_store(&engine, p)?;
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Core(Error::Parse { pos, msg })) => {
            eprintln!("error: parse error at byte {pos}: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
