//! Command-line surface for the ((5,6,2)) code workflows.
//!
//! Exit codes: 0 = verified/success, 1 = a mathematical check failed,
//! 2 = input or usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pentacode::analysis::{
    analyze, enumerator_a, enumerator_b, five_six_two_basis, five_six_two_projector, CodeProjector,
    VerificationReport,
};
use pentacode::discovery::{
    discover, format_trace_lines, DiscoveryConfig, DEFAULT_MAX_ITERS, DEFAULT_RESTARTS,
    DEFAULT_SEED, DEFAULT_TOL,
};
use pentacode::expansion::FloatExpansion;
use pentacode::pauli::PauliString;
use pentacode::stabilizer::{PauliGroupFile, StabilizerGroup};
use pentacode::symmetry::{
    five_six_two_generators, group_order, permutation_image_order, SymmetryLevel,
};
use pentacode::textio;

#[derive(Parser)]
#[command(
    name = "pentacode",
    about = "Build, verify, analyze, and re-discover the ((5,6,2)) nonadditive quantum code",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    /// Conjugations by the five stabilizer generators (order 32).
    #[value(name = "H", alias = "h")]
    H,
    /// Plus the cyclic shift and the doubling map (order 640).
    #[value(name = "640")]
    Affine,
    /// Plus the qubit-2/3 transposition (order 3840).
    Full,
}

impl Level {
    fn to_symmetry(self) -> SymmetryLevel {
        match self {
            Level::H => SymmetryLevel::Stabilizer,
            Level::Affine => SymmetryLevel::Affine,
            Level::Full => SymmetryLevel::Full,
        }
    }
}

#[derive(Args)]
struct ReportArgs {
    /// Output format for the verification report.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Write the canonical projector expansion and print its report.
    Build {
        /// Destination for the expansion file (rational coefficients).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the stabilizer-group + coset file of the code.
        #[arg(long)]
        cosets: Option<PathBuf>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Verify an expansion file: projector, erasure, and enumerator checks.
    Verify {
        input: PathBuf,
        /// Tolerance for all checks; defaults to exact for rational files
        /// and 1e-10 for decimal files.
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Print the A and B weight enumerators of an expansion file.
    Enumerator {
        input: PathBuf,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Random-restart numerical search for a ((5,6,2)) projector.
    Discover {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_RESTARTS)]
        restarts: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
        max_iters: usize,
        /// Convergence threshold on the projector residual.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Allow complex iterates (by default the start is real).
        #[arg(long)]
        complex: bool,
        /// Destination for the discovered expansion file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Destination for the iteration trace
        /// (`restart iter residual enum_dev` lines).
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Check the symmetry generators against an expansion and print the
    /// group orders.
    Symmetry {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "full")]
        level: Level,
        /// Write the generators in the symmetry text format.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Write the six explicit basis states of the code.
    Basis {
        /// Destination directory for basis_0.qst … basis_5.qst.
        #[arg(long)]
        out: PathBuf,
    },
    /// Rebuild a code from a stabilizer-group file with `coset:` lines
    /// and compare against a reference expansion.
    CosetBuild {
        /// Group file: signed generators plus coset representatives.
        group: PathBuf,
        /// Reference expansion; defaults to the built-in projector.
        #[arg(long)]
        reference: Option<PathBuf>,
        /// Destination for the rebuilt expansion.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
    },
}

/// Failure modes mapped onto exit codes.
enum Failure {
    /// Exit 1: a mathematical check failed.
    Check(String),
    /// Exit 2: bad input or usage.
    Input(String),
}

impl From<pentacode::Error> for Failure {
    fn from(e: pentacode::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn print_report(report: &VerificationReport, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        Format::Text => {
            println!("n                  {}", report.n);
            println!("K                  {}", report.k);
            println!("trace              {}", report.trace);
            println!("projector residual {:.3e}", report.projector_residual);
            println!("distance           {}", report.distance);
            println!("pure               {}", report.pure);
            println!("enumerator A       {:?}", report.enumerator_a);
            println!("enumerator B       {:?}", report.enumerator_b);
            println!("checks:");
            println!("  projector            {}", report.checks.projector);
            println!("  erasure              {}", report.checks.erasure);
            println!(
                "  containment trivial  {}",
                report.checks.containment_trivial
            );
            match report.checks.basis_ok {
                Some(ok) => println!("  basis ok             {ok}"),
                None => println!("  basis ok             n/a"),
            }
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Build {
            out,
            cosets,
            report,
        } => cmd_build(out, cosets, report.format),
        Command::Verify { input, tol, report } => cmd_verify(&input, tol, report.format),
        Command::Enumerator { input, report } => cmd_enumerator(&input, report.format),
        Command::Discover {
            seed,
            restarts,
            max_iters,
            tol,
            complex,
            out,
            trace,
            report,
        } => cmd_discover(
            seed,
            restarts,
            max_iters,
            tol,
            complex,
            out,
            trace,
            report.format,
        ),
        Command::Symmetry {
            input,
            level,
            out,
            tol,
        } => cmd_symmetry(&input, level.to_symmetry(), out, tol),
        Command::Basis { out } => cmd_basis(&out),
        Command::CosetBuild {
            group,
            reference,
            out,
            tol,
        } => cmd_coset_build(&group, reference, out, tol),
    }
}

fn cmd_build(out: Option<PathBuf>, cosets: Option<PathBuf>, format: Format) -> Result<(), Failure> {
    let code = five_six_two_projector();
    if let Some(path) = &out {
        write_file(path, &textio::format_exact_expansion(code.expansion()))?;
    }
    if let Some(path) = &cosets {
        let seed: PauliString = "ZXYYX".parse().expect("literal");
        let sigma: PauliString = "XZIII".parse().expect("literal");
        let mut representatives = vec![PauliString::identity(5)];
        representatives.extend(sigma.cyclic_orbit());
        let file = PauliGroupFile {
            generators: seed.cyclic_orbit(),
            representatives,
        };
        write_file(path, &textio::format_group_file(&file))?;
    }
    let report = code.report_with_basis(0.0, &five_six_two_basis());
    print_report(&report, format);
    Ok(())
}

fn cmd_verify(input: &Path, tol: Option<f64>, format: Format) -> Result<(), Failure> {
    let text = read_file(input)?;
    let parsed = textio::parse_expansion(&text)?;
    let report = match &parsed {
        textio::ParsedExpansion::Exact(m) => analyze(m, tol.unwrap_or(0.0)),
        textio::ParsedExpansion::Float(m) => analyze(m, tol.unwrap_or(1e-10)),
    };
    print_report(&report, format);
    let tol = tol.unwrap_or(1e-10);
    if report.checks.projector && report.checks.erasure && report.enumerator_consistent(tol) {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "projector {}, erasure {}, enumerator consistent {}",
            report.checks.projector,
            report.checks.erasure,
            report.enumerator_consistent(tol)
        )))
    }
}

fn cmd_enumerator(input: &Path, format: Format) -> Result<(), Failure> {
    let text = read_file(input)?;
    let m = textio::parse_expansion(&text)?.to_float();
    let a = enumerator_a(&m);
    let b = enumerator_b(&m);
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({ "A": a.to_f64_vec(), "B": b.to_f64_vec() })
        ),
        Format::Text => {
            println!("A(u,v) = {a}");
            println!("B(u,v) = {b}");
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_discover(
    seed: u64,
    restarts: usize,
    max_iters: usize,
    tol: f64,
    complex: bool,
    out: Option<PathBuf>,
    trace: Option<PathBuf>,
    format: Format,
) -> Result<(), Failure> {
    let mut cfg = DiscoveryConfig::five_six_two(seed);
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    cfg.tol = tol;
    cfg.real_mode = !complex;
    let run = discover(&cfg)?;
    if let Some(path) = &trace {
        write_file(path, &format_trace_lines(&run.traces))?;
    }
    println!("seed {seed}");
    match run.outcome {
        Some(found) => {
            println!(
                "converged: restart {} after {} iterations",
                found.restart, found.iterations
            );
            if let Some(path) = &out {
                write_file(path, &textio::format_float_expansion(&found.expansion))?;
            }
            print_report(&found.report, format);
            Ok(())
        }
        None => Err(Failure::Check(format!(
            "no restart converged (seed {seed}, {restarts} restarts × {max_iters} iterations)"
        ))),
    }
}

fn cmd_symmetry(
    input: &Path,
    level: SymmetryLevel,
    out: Option<PathBuf>,
    tol: f64,
) -> Result<(), Failure> {
    let text = read_file(input)?;
    let parsed = textio::parse_expansion(&text)?;
    let generators = five_six_two_generators(level);
    if let Some(path) = &out {
        let mut body = String::new();
        for g in &generators {
            body.push_str(&textio::format_symmetry(g));
            body.push('\n');
        }
        write_file(path, &body)?;
    }

    let failed: Vec<usize> = match &parsed {
        textio::ParsedExpansion::Exact(m) => generators
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_symmetry_of(m, 0.0))
            .map(|(i, _)| i)
            .collect(),
        textio::ParsedExpansion::Float(m) => generators
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.is_symmetry_of(m, tol))
            .map(|(i, _)| i)
            .collect(),
    };
    let cap = 100_000;
    let order = group_order(&generators, cap)?;
    let perm_order = permutation_image_order(&generators, cap)?;
    println!("generators        {}", generators.len());
    println!("group order       {order}");
    println!("permutation image {perm_order}");
    if failed.is_empty() {
        println!("all generators are symmetries of the input");
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "generators {failed:?} are not symmetries of the input"
        )))
    }
}

fn cmd_basis(out_dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(out_dir)
        .map_err(|e| Failure::Input(format!("cannot create {}: {e}", out_dir.display())))?;
    let code = five_six_two_projector();
    let basis = five_six_two_basis();
    if !code.basis_check(&basis, 1e-12) {
        return Err(Failure::Check("basis verification failed".into()));
    }
    for (i, v) in basis.iter().enumerate() {
        let path = out_dir.join(format!("basis_{i}.qst"));
        write_file(&path, &textio::format_state(v))?;
    }
    println!("wrote 6 basis states to {}", out_dir.display());
    println!("gram matrix is the identity within 1e-12; Pv = v for each state");
    Ok(())
}

fn cmd_coset_build(
    group_path: &Path,
    reference: Option<PathBuf>,
    out: Option<PathBuf>,
    tol: f64,
) -> Result<(), Failure> {
    let text = read_file(group_path)?;
    let file = textio::parse_group_file(&text)?;
    if file.generators.is_empty() {
        return Err(Failure::Input("group file has no generators".into()));
    }
    if file.representatives.is_empty() {
        return Err(Failure::Input("group file has no coset: lines".into()));
    }
    let group = StabilizerGroup::from_generators(&file.generators)?;
    if !group.is_self_dual() {
        return Err(Failure::Input(format!(
            "coset construction needs a self-dual group (r = {}, n = {})",
            group.num_generators(),
            group.qubits()
        )));
    }
    // the signed generators select the all-plus character of the signed
    // closure: the rank-1 projector they jointly stabilize
    let chi = pentacode::stabilizer::Character::all_plus(group.num_generators());
    let base = CodeProjector::new(group.character_projector(&chi)?, tol)?;
    let rebuilt = CodeProjector::reconstruct_from_cosets(&base, &file.representatives, tol)?;
    let rebuilt_float = rebuilt.expansion().to_float();
    if let Some(path) = &out {
        write_file(path, &textio::format_exact_expansion(rebuilt.expansion()))?;
    }

    let reference_float: FloatExpansion = match &reference {
        Some(path) => textio::parse_expansion(&read_file(path)?)?.to_float(),
        None => five_six_two_projector().expansion().to_float(),
    };
    let float_tol = if tol == 0.0 { 1e-12 } else { tol };
    println!(
        "rebuilt rank {} projector from {} cosets",
        rebuilt.rank(),
        file.representatives.len()
    );
    if rebuilt_float.approx_eq(&reference_float, float_tol) {
        println!("rebuilt expansion matches the reference");
        Ok(())
    } else {
        Err(Failure::Check(
            "rebuilt expansion differs from the reference".into(),
        ))
    }
}
