//! surfcomp: exact complement arithmetic from the shell.
//!
//! One binary, subcommand-dispatched.  Input is a JSON document on stdin
//! or behind `--in FILE`; output is a short human report or, with
//! `--json`, a machine document that round-trips deterministically.  All
//! rationals are printed exactly as `p/q` (denominator omitted when 1);
//! no decimal notation appears anywhere.
//!
//! Exit codes: 0 success, 1 failed golden comparison, 2 malformed or
//! invalid input.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use surfcomp::arith::REGULAR_INDICES;
use surfcomp::curve::{
    complement_exists, invariant_complement_exists, minimal_complement_index, pd_complement_exists,
    pd_ec_check, Boundary, CurveConfig, DegreeConvention, OrbitBoundary,
};
use surfcomp::enumerate::{
    multiplier_table, multiplier_table_nonminimal, multiplier_tables, TableCaps,
    REFERENCE_MULTIPLIER_TABLES,
};
use surfcomp::fiber::{complement_index, fiber_different, fiber_report, FiberModel, KodairaType};
use surfcomp::graph::{
    classify_duval, crepant_discrepancies, definiteness, delta_invariant, is_contractible, mld,
    DeltaInvariant, DualGraph, DuValKind, MldResult,
};
use surfcomp::label::{
    case_names, regular_or_exceptional, toric_defect, type_label, verify_all_cases, verify_case,
    verify_exceptional_config, ComplementDatum, Regularity,
};
use surfcomp::simplicial::{
    build_complex, chain_segment, complex_report, euler_genus, icosahedron,
    is_manifold_with_boundary, lines_in_general_position, wheel_circle, Stratification,
};
use surfcomp::{Multiplicity, Rational};

#[derive(Parser)]
#[command(
    name = "surfcomp",
    version,
    about = "Complement calculus for curve boundaries, resolution graphs, and degenerate fibers"
)]
struct Cli {
    /// Read the input JSON from this file instead of stdin.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Emit machine-readable JSON instead of the human report.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for enumerations (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Search bound for minimal-index scans.
    #[arg(long, global = true, default_value_t = 66, value_name = "N")]
    bound: u32,

    /// Largest boundary denominator enumerated.
    #[arg(long = "max-den", global = true, default_value_t = 60, value_name = "Q")]
    max_den: u32,

    /// Largest number of boundary components enumerated.
    #[arg(long = "max-comp", global = true, default_value_t = 4, value_name = "K")]
    max_comp: u32,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    /// Complementary boundary degree exactly 2.
    Exact2,
    /// Complementary boundary degree at most 2.
    AtMost2,
}

impl From<ConventionArg> for DegreeConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Exact2 => DegreeConvention::Exact2,
            ConventionArg::AtMost2 => DegreeConvention::AtMost2,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Test whether a curve configuration has an n-complement.
    CurveComplement {
        /// Index to test.
        #[arg(long)]
        n: u32,
    },
    /// Minimal complementary index of a curve configuration.
    MinIndex,
    /// Multipliers realized by enumerated boundaries, per index.
    MultiplierTable {
        /// Restrict to one index (default: all five regular indices).
        #[arg(long)]
        n: Option<u32>,
        /// Drop the minimality requirement on the reached index.
        #[arg(long)]
        nonminimal: bool,
    },
    /// Degree test and n-complement existence for a pencil boundary of
    /// the given fiber degree.
    PdCheck {
        /// Fiber degree d.
        #[arg(long)]
        d: u32,
        /// Index to test.
        #[arg(long)]
        n: u32,
    },
    /// Orbit-constant n-complement existence for a boundary with a
    /// symmetry action.
    InvariantComplement {
        /// Index to test.
        #[arg(long)]
        n: u32,
        /// Degree convention for the complementary boundary.
        #[arg(long, value_enum, default_value_t = ConventionArg::Exact2)]
        convention: ConventionArg,
    },
    /// Crepant pull-back multiplicities on a resolution graph.
    Crepant,
    /// Minimal log discrepancy over a resolution graph.
    Mld,
    /// Count of divisors with log discrepancy at most 1/7.
    Delta,
    /// Recognize ADE exceptional loci.
    ClassifyDuval,
    /// Negative definiteness of the exceptional intersection matrix.
    Contractible,
    /// Kodaira type, complement index, and different of a degenerate fiber.
    ClassifyFiber,
    /// Regular-complement type label from numeric invariants.
    TypeLabel,
    /// Picard-rank defect against the boundary degree.
    ToricCheck {
        /// Picard rank of the ambient surface.
        #[arg(long)]
        rho: u32,
    },
    /// Check shipped exceptional configurations against their goldens.
    VerifyExceptional {
        /// Case name (default: all shipped cases).
        name: Option<String>,
        /// List the shipped case names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Boundary stratification report: reg, Euler characteristic,
    /// manifold test.
    Rxb,
    /// Re-run every reference comparison and print a pass/fail matrix.
    ReproduceTables,
}

enum Failure {
    /// Malformed or invalid input: exit 2 with a schema message.
    Input(String),
    /// A golden comparison failed: exit 1.
    Golden(String),
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let text = match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    if text.trim().is_empty() {
        return Err(Failure::Input(
            "expected a JSON document on stdin or via --in FILE".into(),
        ));
    }
    Ok(text)
}

/// A curve configuration, or the shorthand: a bare array of multiplicities
/// read as an irreducible genus-0 component.
fn parse_curve(text: &str) -> Result<CurveConfig, Failure> {
    if let Ok(mults) = serde_json::from_str::<Vec<Multiplicity>>(text) {
        let config = CurveConfig::irreducible(0, Boundary::from_mults(mults));
        config.validate().map_err(input_err)?;
        return Ok(config);
    }
    let config: CurveConfig = serde_json::from_str(text).map_err(|e| {
        Failure::Input(format!(
            "malformed curve configuration: {e}; expected \
             {{\"shape\": \"irreducible|chain|wheel\", \"components\": \
             [{{\"genus\": 0, \"boundary\": [{{\"label\": \"p1\", \"mult\": \"1/2\"}}]}}]}} \
             or a bare multiplicity array like [\"1/2\", \"2/3\"]"
        ))
    })?;
    config.validate().map_err(input_err)?;
    Ok(config)
}

/// A boundary, or the shorthand bare array of multiplicities.
fn parse_boundary(text: &str) -> Result<Boundary, Failure> {
    if let Ok(mults) = serde_json::from_str::<Vec<Multiplicity>>(text) {
        let b = Boundary::from_mults(mults);
        b.validate().map_err(input_err)?;
        return Ok(b);
    }
    let b: Boundary = serde_json::from_str(text).map_err(|e| {
        Failure::Input(format!(
            "malformed boundary: {e}; expected \
             [{{\"label\": \"p1\", \"mult\": \"1/2\"}}, ...] or a bare \
             multiplicity array like [\"1/2\", \"2/3\"]"
        ))
    })?;
    b.validate().map_err(input_err)?;
    Ok(b)
}

/// Orbits as [[size, "p/q"], ...] or as the full structure.
fn parse_orbits(text: &str) -> Result<OrbitBoundary, Failure> {
    if let Ok(pairs) = serde_json::from_str::<Vec<(u32, Multiplicity)>>(text) {
        return OrbitBoundary::new(pairs).map_err(input_err);
    }
    let parsed: OrbitBoundary = serde_json::from_str(text).map_err(|e| {
        Failure::Input(format!(
            "malformed orbit boundary: {e}; expected \
             {{\"orbits\": [{{\"size\": 2, \"mult\": \"1/3\"}}]}} or a bare \
             array like [[2, \"1/3\"], [3, \"1/3\"]]"
        ))
    })?;
    OrbitBoundary::new(
        parsed
            .orbits
            .into_iter()
            .map(|o| (o.size, o.mult))
            .collect(),
    )
    .map_err(input_err)
}

fn parse_graph(text: &str) -> Result<DualGraph, Failure> {
    DualGraph::from_json(text).map_err(|e| {
        Failure::Input(format!(
            "malformed dual graph: {e}; expected {{\"vertices\": \
             [{{\"id\": \"e0\", \"role\": \"exceptional|ambient\", \
             \"self_int\": -2, \"mult\": \"6/7\"}}], \"edges\": \
             [[\"e0\", \"e1\", 1]]}}"
        ))
    })
}

fn emit<T: Serialize>(json: bool, value: &T, human: String) -> Result<(), Failure> {
    if json {
        let doc = serde_json::to_string_pretty(value)
            .map_err(|e| Failure::Input(format!("cannot serialize report: {e}")))?;
        println!("{doc}");
    } else {
        println!("{human}");
    }
    Ok(())
}

/// Run-length rendering of a multiplicity list: `4×(1/2)` for repeats,
/// the bare value for singletons, `none` when empty.
fn collapse_mults(mults: &[&Rational]) -> String {
    if mults.is_empty() {
        return "none".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < mults.len() {
        let mut j = i;
        while j < mults.len() && mults[j] == mults[i] {
            j += 1;
        }
        if j - i > 1 {
            parts.push(format!("{}×({})", j - i, mults[i]));
        } else {
            parts.push(mults[i].to_string());
        }
        i = j;
    }
    parts.join(", ")
}

fn duval_name(kind: &DuValKind) -> String {
    match kind {
        DuValKind::A(k) => format!("A_{k}"),
        DuValKind::D(k) => format!("D_{k}"),
        DuValKind::E6 => "E_6".into(),
        DuValKind::E7 => "E_7".into(),
        DuValKind::E8 => "E_8".into(),
        DuValKind::NonDuVal => "not Du Val".into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        // A second build_global is harmless; the pool is process-wide.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Golden(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn caps_of(cli: &Cli) -> TableCaps {
    TableCaps {
        max_components: cli.max_comp,
        max_denominator: cli.max_den,
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::CurveComplement { n } => {
            let config = parse_curve(&read_input(&cli.input)?)?;
            let exists = complement_exists(&config, *n).map_err(input_err)?;
            #[derive(Serialize)]
            struct Out {
                n: u32,
                exists: bool,
            }
            emit(
                cli.json,
                &Out { n: *n, exists },
                format!("{}-complement: {}", n, if exists { "yes" } else { "no" }),
            )
        }
        Cmd::MinIndex => {
            let config = parse_curve(&read_input(&cli.input)?)?;
            let min = minimal_complement_index(&config, cli.bound).map_err(input_err)?;
            #[derive(Serialize)]
            struct Out {
                bound: u32,
                min_index: Option<u32>,
                #[serde(skip_serializing_if = "Option::is_none")]
                regularity: Option<Regularity>,
            }
            let out = Out {
                bound: cli.bound,
                min_index: min,
                regularity: min.map(regular_or_exceptional),
            };
            let human = match min {
                Some(n) => n.to_string(),
                None => format!("no complement up to index {}", cli.bound),
            };
            emit(cli.json, &out, human)
        }
        Cmd::MultiplierTable { n, nonminimal } => {
            let caps = caps_of(cli);
            match n {
                Some(n) => {
                    let set = if *nonminimal {
                        multiplier_table_nonminimal(*n, &caps).map_err(input_err)?
                    } else {
                        multiplier_table(*n, &caps).map_err(input_err)?
                    };
                    #[derive(Serialize)]
                    struct Out {
                        n: u32,
                        caps: TableCaps,
                        nonminimal: bool,
                        multipliers: Vec<u64>,
                    }
                    let mults: Vec<u64> = set.iter().copied().collect();
                    let line = format!(
                        "n={}: {}",
                        n,
                        mults
                            .iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                    emit(
                        cli.json,
                        &Out {
                            n: *n,
                            caps,
                            nonminimal: *nonminimal,
                            multipliers: mults,
                        },
                        line,
                    )
                }
                None => {
                    if *nonminimal {
                        return Err(Failure::Input(
                            "--nonminimal needs an explicit --n".into(),
                        ));
                    }
                    let report = multiplier_tables(&caps);
                    let mut human = String::new();
                    for (n, set) in &report.tables {
                        let _ = writeln!(
                            human,
                            "n={}: {}",
                            n,
                            set.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
                        );
                    }
                    let _ = write!(
                        human,
                        "exact fallbacks: {}; skipped nonregular multisets: {}",
                        report.exact_fallbacks, report.skipped_nonregular
                    );
                    emit(cli.json, &report, human)
                }
            }
        }
        Cmd::PdCheck { d, n } => {
            let boundary = parse_boundary(&read_input(&cli.input)?)?;
            let degree_ok = pd_ec_check(*d, &boundary);
            let exists = pd_complement_exists(*d, &boundary, *n).map_err(input_err)?;
            #[derive(Serialize)]
            struct Out {
                d: u32,
                n: u32,
                degree_ok: bool,
                exists: bool,
            }
            emit(
                cli.json,
                &Out {
                    d: *d,
                    n: *n,
                    degree_ok,
                    exists,
                },
                format!(
                    "degree test: {}\n{}-complement: {}",
                    if degree_ok { "pass" } else { "fail" },
                    n,
                    if exists { "yes" } else { "no" }
                ),
            )
        }
        Cmd::InvariantComplement { n, convention } => {
            let orbits = parse_orbits(&read_input(&cli.input)?)?;
            let conv: DegreeConvention = (*convention).into();
            let exists = invariant_complement_exists(&orbits, *n, conv);
            #[derive(Serialize)]
            struct Out {
                n: u32,
                convention: DegreeConvention,
                exists: bool,
            }
            emit(
                cli.json,
                &Out {
                    n: *n,
                    convention: conv,
                    exists,
                },
                format!(
                    "invariant {}-complement: {}",
                    n,
                    if exists { "yes" } else { "no" }
                ),
            )
        }
        Cmd::Crepant => {
            let g = parse_graph(&read_input(&cli.input)?)?;
            let result = crepant_discrepancies(&g).map_err(input_err)?;
            let mut human = String::new();
            if result.entries.is_empty() {
                human.push_str("no exceptional vertices");
            }
            for e in &result.entries {
                let _ = writeln!(
                    human,
                    "{}: multiplicity {}, log discrepancy {}",
                    e.id, e.multiplicity, e.log_discrepancy
                );
            }
            if !result.sub_boundary.is_empty() {
                let _ = write!(human, "sub-boundary: {}", result.sub_boundary.join(" "));
            }
            emit(cli.json, &result, human.trim_end().to_string())
        }
        Cmd::Mld => {
            let g = parse_graph(&read_input(&cli.input)?)?;
            let result = mld(&g).map_err(input_err)?;
            let human = match &result {
                MldResult::Value(v) => format!("mld = {v}"),
                MldResult::NotLogCanonical => "not log canonical".into(),
            };
            emit(cli.json, &result, human)
        }
        Cmd::Delta => {
            let g = parse_graph(&read_input(&cli.input)?)?;
            let result = delta_invariant(&g).map_err(input_err)?;
            let human = match &result {
                DeltaInvariant::Finite(k) => format!("delta = {k}"),
                DeltaInvariant::Infinite => "delta = infinite".into(),
            };
            emit(cli.json, &result, human)
        }
        Cmd::ClassifyDuval => {
            let g = parse_graph(&read_input(&cli.input)?)?;
            let class = classify_duval(&g).map_err(input_err)?;
            emit(cli.json, &class, duval_name(&class.kind))
        }
        Cmd::Contractible => {
            let g = parse_graph(&read_input(&cli.input)?)?;
            let contractible = is_contractible(&g).map_err(input_err)?;
            let def = definiteness(&g).map_err(input_err)?;
            #[derive(Serialize)]
            struct Out {
                contractible: bool,
                definiteness: surfcomp::graph::Definiteness,
            }
            let def_text = match def {
                surfcomp::graph::Definiteness::NegativeDefinite => "negative definite".into(),
                surfcomp::graph::Definiteness::NegativeSemidefinite { kernel_dim } => {
                    format!("negative semidefinite, kernel dimension {kernel_dim}")
                }
                surfcomp::graph::Definiteness::Indefinite => "indefinite".into(),
            };
            emit(
                cli.json,
                &Out {
                    contractible,
                    definiteness: def,
                },
                format!(
                    "{} ({def_text})",
                    if contractible {
                        "contractible"
                    } else {
                        "not contractible"
                    }
                ),
            )
        }
        Cmd::ClassifyFiber => {
            let text = read_input(&cli.input)?;
            let model = FiberModel::from_json(&text).map_err(|e| {
                Failure::Input(format!(
                    "malformed fiber model: {e}; expected {{\"central\": ..., \
                     \"chains\": [...], \"multiplicity\": 1}}"
                ))
            })?;
            let report = fiber_report(&model).map_err(input_err)?;
            let values: Vec<&Rational> = report
                .different
                .entries
                .iter()
                .map(|p| p.mult.value())
                .collect();
            let human = format!(
                "{}, index {}, different {}",
                report.kodaira,
                report.complement_index,
                collapse_mults(&values)
            );
            emit(cli.json, &report, human)
        }
        Cmd::TypeLabel => {
            let text = read_input(&cli.input)?;
            let datum: ComplementDatum = serde_json::from_str(&text).map_err(|e| {
                Failure::Input(format!(
                    "malformed complement datum: {e}; expected {{\"index\": 2, \
                     \"n_reduced\": 1, \"m_exceptional\": 0, \"lcs_connected\": true, \
                     \"support_singular_connected\": false, \"global\": true, \
                     \"klt\": false}}"
                ))
            })?;
            let label = type_label(&datum).map_err(input_err)?;
            #[derive(Serialize)]
            struct Out {
                #[serde(flatten)]
                label: surfcomp::label::TypeLabel,
                display: String,
            }
            let display = label.to_string();
            emit(
                cli.json,
                &Out {
                    label,
                    display: display.clone(),
                },
                display,
            )
        }
        Cmd::ToricCheck { rho } => {
            let boundary = parse_boundary(&read_input(&cli.input)?)?;
            let check = toric_defect(*rho, &boundary).map_err(input_err)?;
            let human = format!(
                "defect {}; {}",
                check.defect,
                if check.formally_toric {
                    "formally toric"
                } else {
                    "not formally toric"
                }
            );
            emit(cli.json, &check, human)
        }
        Cmd::VerifyExceptional { name, list } => {
            if *list {
                let names = case_names();
                return emit(cli.json, &names, names.join("\n"));
            }
            let reports = match (name, &cli.input) {
                (Some(name), Some(_)) => {
                    let g = parse_graph(&read_input(&cli.input)?)?;
                    vec![verify_exceptional_config(name, &g).map_err(input_err)?]
                }
                (Some(name), None) => vec![verify_case(name).map_err(input_err)?],
                (None, Some(_)) => {
                    return Err(Failure::Input(
                        "a case name is required when --in overrides the graph".into(),
                    ));
                }
                (None, None) => verify_all_cases().map_err(input_err)?,
            };
            let human = reports
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            emit(cli.json, &reports, human)?;
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                return Err(Failure::Golden(format!(
                    "{failed} of {} case(s) mismatched",
                    reports.len()
                )));
            }
            Ok(())
        }
        Cmd::Rxb => {
            let text = read_input(&cli.input)?;
            let s = Stratification::from_json(&text).map_err(|e| {
                Failure::Input(format!(
                    "malformed stratification: {e}; expected {{\"divisors\": \
                     [\"D1\"], \"strata\": [{{\"on\": [\"D1\", \"D2\"]}}]}}"
                ))
            })?;
            let c = build_complex(&s).map_err(input_err)?;
            let report = complex_report(&c);
            let human = format!(
                "reg {}, chi {}, q {}, components {}, manifold {}",
                report.reg,
                report.chi,
                report.q,
                report.components,
                match report.manifold {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "n/a",
                }
            );
            emit(cli.json, &report, human)
        }
        Cmd::ReproduceTables => reproduce_tables(cli),
    }
}

#[derive(Serialize)]
struct MatrixLine {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct Matrix {
    caps: TableCaps,
    lines: Vec<MatrixLine>,
    passed: bool,
}

fn push_line(lines: &mut Vec<MatrixLine>, name: impl Into<String>, passed: bool, detail: String) {
    lines.push(MatrixLine {
        name: name.into(),
        passed,
        detail,
    });
}

/// Every reference comparison in one sweep.  At the default caps the
/// multiplier tables must match exactly; at reduced caps the enumeration
/// can only find a subset, so containment is checked instead.
fn reproduce_tables(cli: &Cli) -> Result<(), Failure> {
    let caps = caps_of(cli);
    let full = caps == TableCaps::default();
    let mut lines = Vec::new();

    let report = multiplier_tables(&caps);
    for (n, want) in REFERENCE_MULTIPLIER_TABLES {
        let want: std::collections::BTreeSet<u64> = want.iter().copied().collect();
        let got = report.tables.get(&n).cloned().unwrap_or_default();
        if full {
            let missing: Vec<u64> = want.difference(&got).copied().collect();
            let extra: Vec<u64> = got.difference(&want).copied().collect();
            let ok = missing.is_empty() && extra.is_empty();
            let detail = if ok {
                format!("{} multipliers", got.len())
            } else {
                format!("missing {missing:?}, extra {extra:?}")
            };
            push_line(&mut lines, format!("table n={n}"), ok, detail);
        } else {
            let extra: Vec<u64> = got.difference(&want).copied().collect();
            push_line(
                &mut lines,
                format!("table n={n}"),
                extra.is_empty(),
                if extra.is_empty() {
                    format!("{}/{} found at reduced caps", got.len(), want.len())
                } else {
                    format!("entries outside the reference: {extra:?}")
                },
            );
        }
    }
    push_line(
        &mut lines,
        "table fallbacks",
        report.exact_fallbacks == 0,
        format!("{} exact fallbacks", report.exact_fallbacks),
    );

    match verify_all_cases() {
        Ok(reports) => {
            for r in reports {
                let detail = if r.passed {
                    format!("{} checks", r.checks.len())
                } else {
                    r.checks
                        .iter()
                        .filter(|c| !c.passed)
                        .map(|c| c.label.clone())
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                push_line(&mut lines, format!("configuration {}", r.case), r.passed, detail);
            }
        }
        Err(e) => push_line(&mut lines, "configurations", false, e.to_string()),
    }

    for t in [
        KodairaType::Istar { b: 0 },
        KodairaType::II,
        KodairaType::IIstar,
        KodairaType::III,
        KodairaType::IIIstar,
        KodairaType::IV,
        KodairaType::IVstar,
    ] {
        let config = CurveConfig::irreducible(0, fiber_different(t));
        let got = minimal_complement_index(&config, cli.bound)
            .ok()
            .flatten();
        let want = complement_index(t);
        push_line(
            &mut lines,
            format!("fiber {t}"),
            got == Some(want),
            format!("index {want}"),
        );
    }

    let delta_checks: Vec<(String, bool, String)> = {
        let mut v = Vec::new();
        match surfcomp::label::embedded_fixture("a26")
            .ok_or_else(|| "missing".to_string())
            .and_then(|f| DualGraph::from_json(f).map_err(|e| e.to_string()))
            .and_then(|g| delta_invariant(&g).map_err(|e| e.to_string()))
        {
            Ok(d) => v.push((
                "cone configuration delta".into(),
                d == DeltaInvariant::Finite(2),
                format!("{d:?}"),
            )),
            Err(e) => v.push(("cone configuration delta".into(), false, e)),
        }
        v
    };
    for (name, ok, detail) in delta_checks {
        push_line(&mut lines, name, ok, detail);
    }

    for n in 3..=12u32 {
        let wheel = Boundary::from_mults(vec![Multiplicity::one(); n as usize]);
        let ok = toric_defect(n - 2, &wheel)
            .map(|t| t.formally_toric)
            .unwrap_or(false);
        push_line(&mut lines, format!("toric wheel n={n}"), ok, "defect 0".into());
    }

    for (n, want) in [(3usize, true), (4, false)] {
        let ok = build_complex(&lines_in_general_position(n))
            .ok()
            .and_then(|c| is_manifold_with_boundary(&c).ok())
            == Some(want);
        push_line(
            &mut lines,
            format!("complete graph n={n}"),
            ok,
            format!("manifold: {want}"),
        );
    }
    let wheel_ok = build_complex(&wheel_circle(5))
        .map(|c| euler_genus(&c) == (0, 2))
        .unwrap_or(false);
    push_line(&mut lines, "circle shell", wheel_ok, "chi 0, q 2".into());
    let chain_ok = build_complex(&chain_segment(5))
        .map(|c| euler_genus(&c) == (1, 1))
        .unwrap_or(false);
    push_line(&mut lines, "segment shell", chain_ok, "chi 1, q 1".into());
    let ico_ok = build_complex(&icosahedron())
        .map(|c| euler_genus(&c).0 == 2 && is_manifold_with_boundary(&c).unwrap_or(false))
        .unwrap_or(false);
    push_line(&mut lines, "icosahedron shell", ico_ok, "chi 2, manifold".into());

    let sphere = Boundary::from_mults(vec![
        Multiplicity::new_i64(1, 2).unwrap(),
        Multiplicity::new_i64(2, 3).unwrap(),
        Multiplicity::new_i64(5, 6).unwrap(),
    ]);
    let min = minimal_complement_index(&CurveConfig::irreducible(0, sphere), cli.bound)
        .ok()
        .flatten();
    push_line(
        &mut lines,
        "spherical triple index",
        min == Some(6) && REGULAR_INDICES.contains(&6),
        "minimal index 6".into(),
    );

    let passed = lines.iter().all(|l| l.passed);
    let matrix = Matrix {
        caps,
        lines,
        passed,
    };
    let mut human = String::new();
    for l in &matrix.lines {
        let mark = if l.passed { "ok " } else { "FAIL" };
        let _ = writeln!(human, "[{mark}] {}: {}", l.name, l.detail);
    }
    let done = matrix.lines.iter().filter(|l| l.passed).count();
    let _ = write!(human, "=> {done}/{} comparisons passed", matrix.lines.len());
    emit(cli.json, &matrix, human)?;
    if !passed {
        return Err(Failure::Golden("reference comparison failed".into()));
    }
    Ok(())
}
