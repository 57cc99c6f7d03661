//! `ribbonlab` -- batch calculators for the numerical invariants of
//! torsion-free sheaves on ribbons.
//!
//! One subcommand per concern: `strata` (stratification of the stack over
//! a d1 window), `ss` (stability-compatible strata), `invariants` (single
//! complete type), `tangent` (local type profile), `localext` (brute-force
//! verification of the local Hom/Ext tables).
//!
//! Exit codes: 0 success, 1 domain/validation errors, 2 flag or
//! precondition errors, 3 local-table mismatch.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ribbonlab_cli::report::*;
use ribbonlab_core::invariants::{
    dual_invariants, hilbert_polynomial, index_from_degrees, riemann_roch,
    second_filtration_degrees, CompleteType, RibbonInvariants,
};
use ribbonlab_core::localalg::{verify_tables, TruncatedRingParams};
use ribbonlab_core::semistability::{enumerate_ss_strata, ss_verdict};
use ribbonlab_core::strata::{
    enumerate_admissible, is_admissible, is_component, is_rigid, moduli_dimension,
    stratum_dimension,
};
use ribbonlab_core::tangent::{
    end_invariants, ext_higher_invariants, tangent_codim_full, tangent_codim_local,
    LocalTypeProfile, ProfilePoint,
};

#[derive(Parser)]
#[command(
    name = "ribbonlab",
    version,
    about = "Numerical invariants of torsion-free sheaves on ribbons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct RibbonArgs {
    /// Genus of the reduced curve
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
    gbar: i64,
    /// -deg N, the degree of the normal bundle
    #[arg(long, allow_negative_numbers = true)]
    delta: i64,
}

impl RibbonArgs {
    fn build(&self) -> RibbonInvariants {
        RibbonInvariants::new(self.gbar, self.delta).expect("gbar validated by clap")
    }
}

#[derive(Args)]
struct TypeArgs {
    #[arg(long)]
    r0: i64,
    #[arg(long)]
    r1: i64,
    #[arg(long, allow_negative_numbers = true)]
    d0: i64,
    #[arg(long, allow_negative_numbers = true)]
    d1: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the complete-type strata of M_X(R, D) over a d1 window
    Strata(StrataArgs),
    /// List the strata compatible with (semi)stability
    Ss(SsArgs),
    /// Numerical invariants of a single complete type
    Invariants(InvariantsArgs),
    /// Invariants attached to a local type profile
    Tangent(TangentArgs),
    /// Verify the local Hom/Ext classification tables by brute force
    Localext(LocalextArgs),
}

#[derive(Args)]
struct StrataArgs {
    #[command(flatten)]
    ribbon: RibbonArgs,
    /// Generalized rank R
    #[arg(short = 'R', long = "rank", value_parser = clap::value_parser!(i64).range(1..))]
    rank: i64,
    /// Generalized degree D
    #[arg(short = 'D', long = "degree", allow_negative_numbers = true)]
    degree: i64,
    /// Inclusive d1 window, written MIN..MAX
    #[arg(long = "d1", value_parser = parse_window, allow_hyphen_values = true)]
    d1: (i64, i64),
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct SsArgs {
    #[command(flatten)]
    ribbon: RibbonArgs,
    #[arg(short = 'R', long = "rank", value_parser = clap::value_parser!(i64).range(1..))]
    rank: i64,
    #[arg(short = 'D', long = "degree", allow_negative_numbers = true)]
    degree: i64,
    /// Use the strict (stable) inequalities instead of the semistable ones
    #[arg(long)]
    stable: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    ribbon: RibbonArgs,
    #[command(flatten)]
    complete_type: TypeArgs,
    /// Index iota used in the dual-degree formula
    #[arg(long, default_value = "0", value_parser = clap::value_parser!(i64).range(0..))]
    iota: i64,
    /// Degree of the restricted polarization in the Hilbert polynomial
    #[arg(long = "d-pol", default_value = "1", value_parser = clap::value_parser!(i64).range(1..))]
    d_pol: i64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct TangentArgs {
    /// Path to a profile document (JSON)
    #[arg(long)]
    profile: std::path::PathBuf,
    /// Dimension of the h^0 term of the full tangent codimension
    #[arg(long = "h0-term", default_value = "0", value_parser = clap::value_parser!(i64).range(0..))]
    h0_term: i64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct LocalextArgs {
    /// Coefficient characteristic (a prime)
    #[arg(long)]
    p: u64,
    /// Truncation order of the local ring
    #[arg(long = "N")]
    truncation: usize,
    /// Largest ideal exponent to verify
    #[arg(long = "n-max")]
    n_max: usize,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (min, max) = s
        .split_once("..")
        .ok_or_else(|| "expected MIN..MAX".to_string())?;
    let min: i64 = min.trim().parse().map_err(|e| format!("bad MIN: {e}"))?;
    let max: i64 = max.trim().parse().map_err(|e| format!("bad MAX: {e}"))?;
    if min > max {
        return Err(format!("empty window: {min} > {max}"));
    }
    Ok((min, max))
}

/// A command failure carrying the exit code it maps to.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 1,
        }
    }

    fn precondition(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Strata(args) => cmd_strata(args),
        Command::Ss(args) => cmd_ss(args),
        Command::Invariants(args) => cmd_invariants(args),
        Command::Tangent(args) => cmd_tangent(args),
        Command::Localext(args) => cmd_localext(args),
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit_json<T: serde::Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report types serialize");
    s.push('\n');
    s
}

fn cmd_strata(args: StrataArgs) -> Result<(String, u8), Failure> {
    let inv = args.ribbon.build();
    let (d1_min, d1_max) = args.d1;
    let reports = enumerate_admissible(inv, args.rank, args.degree, d1_min, d1_max)
        .map_err(|e| Failure::domain(e.to_string()))?;
    let moduli_dim =
        moduli_dimension(inv, args.rank).map_err(|e| Failure::domain(e.to_string()))?;

    let strata: Vec<StratumDoc> = reports
        .iter()
        .map(|r| {
            let t = r.complete_type;
            Ok(StratumDoc {
                complete_type: TypeDoc::new(t),
                dimension: r.dimension.expect("enumerated strata are admissible"),
                rigid: r.is_rigid,
                component: matches!(
                    r.component_status,
                    ribbonlab_core::strata::ComponentStatus::Component
                ),
                semistable: VerdictDoc::new(
                    ss_verdict(inv, t, false).map_err(|e| Failure::domain(e.to_string()))?,
                ),
                stable: VerdictDoc::new(
                    ss_verdict(inv, t, true).map_err(|e| Failure::domain(e.to_string()))?,
                ),
            })
        })
        .collect::<Result<_, Failure>>()?;

    let doc = StrataDoc {
        schema_version: SCHEMA_VERSION,
        command: "strata".into(),
        ribbon: RibbonDoc::new(inv),
        rank: args.rank,
        degree: args.degree,
        d1_window: WindowDoc {
            min: d1_min,
            max: d1_max,
        },
        moduli_dimension: moduli_dim,
        strata,
    };

    let out = match args.format {
        Format::Json => emit_json(&doc),
        Format::Table => {
            let mut out = String::new();
            out.push_str(&doc.ribbon.heading());
            out.push('\n');
            out.push_str(&format!(
                "moduli: R={} D={} dim={}\n",
                doc.rank, doc.degree, doc.moduli_dimension
            ));
            out.push_str(&format!(
                "strata with d1 in [{}, {}] plus the r1=0 stratum:\n\n",
                doc.d1_window.min, doc.d1_window.max
            ));
            let rows: Vec<Vec<String>> = doc
                .strata
                .iter()
                .map(|s| {
                    vec![
                        s.complete_type.display(),
                        s.dimension.to_string(),
                        yes_no(s.rigid).to_string(),
                        yes_no(s.component).to_string(),
                        s.semistable.status.clone(),
                        s.stable.status.clone(),
                    ]
                })
                .collect();
            out.push_str(&render_table(
                &["type", "dim", "rigid", "component", "semistable", "stable"],
                &rows,
            ));
            out
        }
    };
    Ok((out, 0))
}

fn cmd_ss(args: SsArgs) -> Result<(String, u8), Failure> {
    let inv = args.ribbon.build();
    let types = enumerate_ss_strata(inv, args.rank, args.degree, args.stable)
        .map_err(|e| Failure::domain(e.to_string()))?;
    let strata: Vec<SsStratumDoc> = types
        .iter()
        .map(|&t| {
            Ok(SsStratumDoc {
                complete_type: TypeDoc::new(t),
                verdict: VerdictDoc::new(
                    ss_verdict(inv, t, args.stable)
                        .map_err(|e| Failure::domain(e.to_string()))?,
                ),
            })
        })
        .collect::<Result<_, Failure>>()?;
    let doc = SsDoc {
        schema_version: SCHEMA_VERSION,
        command: "ss".into(),
        ribbon: RibbonDoc::new(inv),
        rank: args.rank,
        degree: args.degree,
        stable: args.stable,
        strata,
    };
    let out = match args.format {
        Format::Json => emit_json(&doc),
        Format::Table => {
            let mut out = String::new();
            out.push_str(&doc.ribbon.heading());
            out.push('\n');
            out.push_str(&format!(
                "{} strata of R={} D={}:\n\n",
                if doc.stable {
                    "stable-compatible"
                } else {
                    "semistable-compatible"
                },
                doc.rank,
                doc.degree
            ));
            let rows: Vec<Vec<String>> = doc
                .strata
                .iter()
                .map(|s| {
                    vec![
                        s.complete_type.display(),
                        s.verdict.status.clone(),
                        s.verdict.reason.clone(),
                    ]
                })
                .collect();
            out.push_str(&render_table(&["type", "verdict", "reason"], &rows));
            out
        }
    };
    Ok((out, 0))
}

fn cmd_invariants(args: InvariantsArgs) -> Result<(String, u8), Failure> {
    let inv = args.ribbon.build();
    let ta = &args.complete_type;
    let t = CompleteType::new(ta.r0, ta.r1, ta.d0, ta.d1)
        .map_err(|e| Failure::domain(e.to_string()))?;
    let (rank, degree) = (t.generalized_rank(), t.generalized_degree());
    let admissible = is_admissible(inv, t);
    let (hilbert_constant, hilbert_linear) = hilbert_polynomial(inv, rank, degree, args.d_pol);
    let (dual_rank, dual_degree) = dual_invariants(inv, rank, degree, args.iota);
    let doc = InvariantsDoc {
        schema_version: SCHEMA_VERSION,
        command: "invariants".into(),
        ribbon: RibbonDoc::new(inv),
        complete_type: TypeDoc::new(t),
        rank,
        degree,
        slope: t.slope().to_string(),
        admissible,
        rigid: is_rigid(t),
        dimension: admissible.then(|| stratum_dimension(inv, t).expect("admissible")),
        component: admissible.then(|| is_component(inv, t).expect("admissible")),
        euler_characteristic: riemann_roch(inv, rank, degree),
        hilbert_constant,
        hilbert_linear,
        d_pol: args.d_pol,
        dual_rank,
        dual_degree,
        iota_input: args.iota,
        second_filtration: second_filtration_degrees(inv, t),
        index: index_from_degrees(inv, t).ok(),
    };
    let out = match args.format {
        Format::Json => emit_json(&doc),
        Format::Table => {
            let mut out = String::new();
            out.push_str(&doc.ribbon.heading());
            out.push('\n');
            out.push_str(&format!(
                "type: {} R={} D={} slope={}\n",
                doc.complete_type.display(),
                doc.rank,
                doc.degree,
                doc.slope
            ));
            out.push_str(&format!(
                "admissible={} rigid={}",
                yes_no(doc.admissible),
                yes_no(doc.rigid)
            ));
            if let (Some(dim), Some(comp)) = (doc.dimension, doc.component) {
                out.push_str(&format!(" dimension={dim} component={}", yes_no(comp)));
            }
            out.push('\n');
            out.push_str(&format!(
                "chi={} hilbert=({}, {}) with d_pol={}\n",
                doc.euler_characteristic, doc.hilbert_constant, doc.hilbert_linear, doc.d_pol
            ));
            out.push_str(&format!(
                "dual: R={} D={} with iota={}\n",
                doc.dual_rank, doc.dual_degree, doc.iota_input
            ));
            out.push_str(&format!(
                "second-filtration degrees: ({}, {})\n",
                doc.second_filtration.0, doc.second_filtration.1
            ));
            match doc.index {
                Some(i) => out.push_str(&format!("index: {i}\n")),
                None => out.push_str("index: n/a (not a generalized vector bundle)\n"),
            }
            out
        }
    };
    Ok((out, 0))
}

fn cmd_tangent(args: TangentArgs) -> Result<(String, u8), Failure> {
    let raw = std::fs::read_to_string(&args.profile)
        .map_err(|e| Failure::domain(format!("cannot read profile: {e}")))?;
    let parsed: ProfileDocument = serde_json::from_str(&raw)
        .map_err(|e| Failure::domain(format!("cannot parse profile: {e}")))?;
    let inv = RibbonInvariants::new(parsed.ribbon.gbar, parsed.ribbon.delta)
        .map_err(|e| Failure::domain(e.to_string()))?;
    let t = CompleteType::new(
        parsed.complete_type.r0,
        parsed.complete_type.r1,
        parsed.complete_type.d0,
        parsed.complete_type.d1,
    )
    .map_err(|e| Failure::domain(e.to_string()))?;
    let points = parsed
        .points
        .iter()
        .map(|p| ProfilePoint {
            name: p.name.clone(),
            multiplicities: p.n.clone(),
        })
        .collect();
    let profile =
        LocalTypeProfile::new(inv, t, points).map_err(|e| Failure::domain(e.to_string()))?;

    let end = end_invariants(&profile);
    let ext = ext_higher_invariants(&profile);
    let codim_full =
        tangent_codim_full(&profile, args.h0_term).map_err(|e| Failure::domain(e.to_string()))?;
    let doc = TangentDoc {
        schema_version: SCHEMA_VERSION,
        command: "tangent".into(),
        ribbon: RibbonDoc::new(inv),
        complete_type: TypeDoc::new(t),
        points: profile
            .points()
            .iter()
            .map(|p| PointDoc {
                name: p.name.clone(),
                n: p.multiplicities.clone(),
            })
            .collect(),
        iota: profile.iota(),
        gamma: profile.gamma(),
        coker_beta_length: profile.coker_beta_length(),
        end: EndDoc {
            complete_type: TypeDoc::new(end.complete_type),
            rank: end.generalized_rank,
            degree: end.generalized_degree,
            euler_characteristic: end.euler_characteristic,
        },
        tangent_codim_local: tangent_codim_local(&profile),
        tangent_codim_full: codim_full,
        h0_term: args.h0_term,
        ext_torsion_length: ext.torsion_length,
        ext_reflexive_rank: ext.reflexive_rank,
        ext_reflexive_slope: ext.reflexive_slope.to_string(),
    };
    let out = match args.format {
        Format::Json => emit_json(&doc),
        Format::Table => {
            let mut out = String::new();
            out.push_str(&doc.ribbon.heading());
            out.push('\n');
            out.push_str(&format!(
                "type: {} R={} D={}\n",
                doc.complete_type.display(),
                t.generalized_rank(),
                t.generalized_degree()
            ));
            if doc.points.is_empty() {
                out.push_str("points: (none)\n");
            } else {
                let rendered: Vec<String> = doc
                    .points
                    .iter()
                    .map(|p| {
                        format!(
                            "{}:[{}]",
                            p.name,
                            p.n.iter()
                                .map(|n| n.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    })
                    .collect();
                out.push_str(&format!("points: {}\n", rendered.join(" ")));
            }
            out.push_str(&format!(
                "iota={} gamma={} coker_beta={}\n",
                doc.iota, doc.gamma, doc.coker_beta_length
            ));
            out.push_str(&format!(
                "end: type={} R={} D={} chi={}\n",
                doc.end.complete_type.display(),
                doc.end.rank,
                doc.end.degree,
                doc.end.euler_characteristic
            ));
            out.push_str(&format!(
                "tangent codim: local={} full={} with h0_term={}\n",
                doc.tangent_codim_local, doc.tangent_codim_full, doc.h0_term
            ));
            out.push_str(&format!(
                "ext^k (k>=1): torsion={} reflexive_rank={} reflexive_slope={}\n",
                doc.ext_torsion_length, doc.ext_reflexive_rank, doc.ext_reflexive_slope
            ));
            out
        }
    };
    Ok((out, 0))
}

fn cmd_localext(args: LocalextArgs) -> Result<(String, u8), Failure> {
    if args.truncation < 4 * (args.n_max + 1) {
        return Err(Failure::precondition(format!(
            "truncation order N={} is too small for n-max={}; need N >= {}",
            args.truncation,
            args.n_max,
            4 * (args.n_max + 1)
        )));
    }
    let params = TruncatedRingParams::new(args.p, args.truncation)
        .map_err(|e| Failure::precondition(e.to_string()))?;
    let report = verify_tables(params, args.n_max).map_err(|e| Failure::domain(e.to_string()))?;

    let mismatches: Vec<MismatchDoc> = report
        .ext_entries
        .iter()
        .filter(|e| !e.matches)
        .map(|e| MismatchDoc {
            entry: format!("ext {} k={}", e.case, e.k),
            computed: format!("{:?} cyclic={:?}", e.computed.values, e.computed_cyclic),
            expected: format!("{:?} cyclic={:?}", e.expected.values, e.expected_cyclic),
        })
        .chain(
            report
                .coker_entries
                .iter()
                .filter(|e| !e.matches)
                .map(|e| MismatchDoc {
                    entry: format!("coker n={} m={}", e.n, e.m),
                    computed: e.computed.to_string(),
                    expected: e.expected.to_string(),
                }),
        )
        .collect();
    let doc = LocalextDoc {
        schema_version: SCHEMA_VERSION,
        command: "localext".into(),
        p: report.p,
        truncation: report.truncation,
        n_max: report.n_max,
        ext_checked: report.ext_entries.len(),
        ext_matched: report.ext_entries.iter().filter(|e| e.matches).count(),
        coker_checked: report.coker_entries.len(),
        coker_matched: report.coker_entries.iter().filter(|e| e.matches).count(),
        mismatches,
        all_match: report.all_match(),
    };
    let code = if doc.all_match { 0 } else { 3 };
    let out = match args.format {
        Format::Json => emit_json(&doc),
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!(
                "local Hom/Ext verification: p={} N={} n_max={}\n",
                doc.p, doc.truncation, doc.n_max
            ));
            out.push_str(&format!(
                "ext entries: {} checked, {} matched\n",
                doc.ext_checked, doc.ext_matched
            ));
            out.push_str(&format!(
                "coker entries: {} checked, {} matched\n",
                doc.coker_checked, doc.coker_matched
            ));
            for m in &doc.mismatches {
                out.push_str(&format!(
                    "MISMATCH {}: computed {} expected {}\n",
                    m.entry, m.computed, m.expected
                ));
            }
            out.push_str(&format!(
                "result: {}\n",
                if doc.all_match { "PASS" } else { "FAIL" }
            ));
            out
        }
    };
    Ok((out, code))
}
