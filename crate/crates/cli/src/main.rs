use std::io::Write;
use std::path::{Path, PathBuf};
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use matroid_torsion::poset::verify_poset_against_matroid;
use matroid_torsion::tutte::f_to_h;
use matroid_torsion::{
    bibby_series, build_poset, check_deletion_contraction, check_tutte_f_identity, elliptic_tutte,
    euler_characteristic, face_module_hilbert, phi_tilde, poset_components, verify_hilbert_tutte, verify_simplicial,
    CheckReport, EllipticArrangement, Error as CoreError, GrothFVector, Outcome, RealizedMatroid, RingKind,
};
use matroid_torsion_cli::formats::{
    poly_coeffs, poset_to_dot, EllipticDoc, FVectorDoc, GTPolyDto, GrothDto, HilbertDoc, HilbertDto, IntPoly2Dto,
    PosetDto, ReportDto, TutteDoc,
};
use matroid_torsion_cli::{parallel, suites, CliError, ExitCode, InstanceSpec};

#[derive(Parser)]
#[command(name = "mtorsion", version, about = "Torsion invariants of matroids realized over Z, Z[i] and Z[w]")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Read the instance over this ring instead of the declared one: Z, Z[i] or Z[w].
    #[arg(long, global = true, value_parser = parse_ring)]
    ring_override: Option<RingKind>,

    /// Largest number of poset nodes to materialize.
    #[arg(long, global = true)]
    node_budget: Option<u64>,

    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = suites::ACCEPTANCE_SEED)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Grothendieck-Tutte polynomial and its numeric specialization.
    Tutte { instance: PathBuf },
    /// Grothendieck and numeric f- and h-vectors.
    Fvector { instance: PathBuf },
    /// The poset of torsions.
    Poset {
        instance: PathBuf,
        /// Shorthand for `--format dot`.
        #[arg(long)]
        dot: bool,
    },
    /// Hilbert series of the face module.
    Hilbert { instance: PathBuf },
    /// Elliptic Tutte polynomial, the Poincaré-type series and its value at -1.
    Elliptic { instance: PathBuf },
    /// Deletion-contraction, the f-polynomial identity, simpliciality and the
    /// Hilbert series identity on one instance.
    Check { instance: PathBuf },
    /// All suites on randomly generated instances.
    Selftest {
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

fn parse_ring(s: &str) -> Result<RingKind, String> {
    s.parse().map_err(|_| format!("unknown ring {s:?}; expected Z, Z[i] or Z[w]"))
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    process::exit(code as i32);
}

fn load(cli: &Cli, path: &Path) -> Result<RealizedMatroid, CliError> {
    InstanceSpec::read(path)?.to_matroid(cli.ring_override, cli.node_budget, &path.display().to_string())
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn no_dot(cli: &Cli) -> Result<(), CliError> {
    if cli.format == Format::Dot {
        return Err(CliError::Usage("--format dot is only available for `poset`".into()));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Tutte { instance } => {
            no_dot(cli)?;
            let m = load(cli, instance)?;
            let t = parallel::grothendieck_tutte(&m)?;
            let numeric = phi_tilde(&t);
            let out = match cli.format {
                Format::Json => json(&TutteDoc {
                    grothendieck_tutte: GTPolyDto::new(&t, m.ring()),
                    tutte: IntPoly2Dto::new(&numeric),
                }),
                _ => format!("T(x,y)  = {t}\nT~(x,y) = {numeric}\n"),
            };
            emit(cli, &out)?;
        }
        Command::Fvector { instance } => {
            no_dot(cli)?;
            let m = load(cli, instance)?;
            let f = GrothFVector::from_table(&parallel::subset_table(&m)?);
            let numeric_f = f.numeric();
            let numeric_h = f_to_h(&numeric_f);
            let out = match cli.format {
                Format::Json => json(&FVectorDoc {
                    ring: m.ring().name().to_string(),
                    grothendieck_f: f.entries().iter().map(GrothDto::new).collect(),
                    grothendieck_h: f.h_vector().iter().map(GrothDto::new).collect(),
                    f: numeric_f.iter().map(ToString::to_string).collect(),
                    h: numeric_h.iter().map(ToString::to_string).collect(),
                }),
                _ => {
                    let mut s = String::new();
                    for (i, e) in f.entries().iter().enumerate() {
                        s += &format!("f_{} = {e}\n", i as i64 - 1);
                    }
                    for (i, e) in f.h_vector().iter().enumerate() {
                        s += &format!("h_{i} = {e}\n");
                    }
                    s += &format!("f = ({})\nh = ({})\n", join(&numeric_f), join(&numeric_h));
                    s
                }
            };
            emit(cli, &out)?;
        }
        Command::Poset { instance, dot } => {
            let m = load(cli, instance)?;
            let p = build_poset(&m)?;
            let format = if *dot { Format::Dot } else { cli.format };
            let out = match format {
                Format::Dot => poset_to_dot(&p),
                Format::Json => json(&PosetDto::new(&p)),
                Format::Text => {
                    let mut s = format!("nodes: {}\ncomponents: {}\n", p.len(), poset_components(&p).len());
                    for v in 0..p.len() {
                        let covers: Vec<String> = p.upper_covers(v).iter().map(|w| p.node_label(*w)).collect();
                        if !covers.is_empty() {
                            s += &format!("{} < {}\n", p.node_label(v), covers.join(", "));
                        }
                    }
                    s
                }
            };
            emit(cli, &out)?;
        }
        Command::Hilbert { instance } => {
            no_dot(cli)?;
            let m = load(cli, instance)?;
            let p = build_poset(&m)?;
            let series = face_module_hilbert(&p);
            let components = poset_components(&p).len();
            let out = match cli.format {
                Format::Json => json(&HilbertDoc { components, face_module: HilbertDto::new(&series) }),
                _ => format!("N(t) = {series}\ncomponents: {components}\n"),
            };
            emit(cli, &out)?;
        }
        Command::Elliptic { instance } => {
            no_dot(cli)?;
            let path = instance.display().to_string();
            let spec = InstanceSpec::read(instance)?;
            if spec.torsion_at_empty.is_some() {
                return Err(CliError::Invalid {
                    path,
                    message: "elliptic arrangements take a plain matrix, without torsion_at_empty".into(),
                });
            }
            let m = spec.to_matroid(cli.ring_override, cli.node_budget, &path)?;
            let matrix = spec.matrix(m.ring()).map_err(|message| CliError::Invalid { path, message })?;
            let e = EllipticArrangement::new(matrix)?;
            let t = elliptic_tutte(&e)?;
            let series = bibby_series(&e)?;
            let chi = euler_characteristic(&e)?;
            let out = match cli.format {
                Format::Json => json(&EllipticDoc {
                    ring: e.endo_ring().name().to_string(),
                    tutte: IntPoly2Dto::new(&t),
                    series: poly_coeffs(&series),
                    series_text: series.to_string(),
                    euler_characteristic: chi.to_string(),
                }),
                _ => format!("T^e(x,y) = {t}\nseries   = {series}\nchi      = {chi}\n"),
            };
            emit(cli, &out)?;
        }
        Command::Check { instance } => {
            no_dot(cli)?;
            let m = load(cli, instance)?;
            return check(cli, &m);
        }
        Command::Selftest { count } => {
            no_dot(cli)?;
            let results = suites::selftest(cli.seed, *count);
            let out = match cli.format {
                Format::Json => json(&results),
                _ => results.iter().map(|r| format!("{r}\n")).collect(),
            };
            emit(cli, &out)?;
            if results.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::CheckFailure);
            }
        }
    }
    Ok(ExitCode::Success)
}

fn join(v: &[num_bigint::BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn is_budget(e: &CoreError) -> bool {
    matches!(e, CoreError::TorsionTooLarge { .. } | CoreError::NodeBudgetExceeded { .. })
}

/// Runs every check; checks that need the poset are skipped when it is over budget.
fn check(cli: &Cli, m: &RealizedMatroid) -> Result<ExitCode, CliError> {
    let mut reports = vec![check_deletion_contraction(m)?, check_tutte_f_identity(m)?];
    let mut over_budget = false;
    match build_poset(m) {
        Ok(p) => {
            reports.push(verify_simplicial(&p));
            reports.push(verify_poset_against_matroid(m, &p)?);
            reports.push(verify_hilbert_tutte(m)?);
        }
        Err(e) if is_budget(&e) => {
            over_budget = true;
            let mut r = CheckReport::new("poset of torsions");
            r.push("simpliciality and Hilbert series", Outcome::Skipped(e.to_string()));
            reports.push(r);
        }
        Err(e) => return Err(e.into()),
    }
    let out = match cli.format {
        Format::Json => json(&reports.iter().map(ReportDto::new).collect::<Vec<_>>()),
        _ => reports.iter().map(ToString::to_string).collect(),
    };
    emit(cli, &out)?;
    Ok(if reports.iter().any(|r| !r.passed()) {
        ExitCode::CheckFailure
    } else if over_budget {
        ExitCode::BudgetExceeded
    } else {
        ExitCode::Success
    })
}
