//! The `asmkit` command line: one subcommand per library area, JSON output
//! by default, plain text behind `--format text`.
//!
//! Exit codes: 0 on success, 2 on usage errors, 1 on domain errors. Domain
//! errors print `{"error": {"kind": ..., "message": ...}}` on stderr. Exact
//! integers are always serialized as decimal strings because the counts
//! outgrow 64 bits quickly. `--threads` (or the `ASMKIT_THREADS` variable)
//! caps worker parallelism; results never depend on the schedule.

pub mod selftest;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::core::{
    asm_to_corner_sum, asm_to_six_vertex, corner_sum_to_height, object_from_json,
    object_from_text, object_to_json, object_to_text, CoreError, Kind,
};
use crate::enumerate::{
    catalan3_coefficients, count_formula, count_symmetric, enumerate_asms, half_2_enumeration,
    half_average_property, half_count, hankel_identity, hybrid_2_enumeration, parse_pattern,
    transfer_count, x_enumeration, EnumerateError, HalfSpec, HybridPhase, SymmetryGroup,
};
use crate::fpl::{count_by_link_pattern, wieland_check, wilson_fraction, FplError};
use crate::lattice::count_ideals;
use crate::recurrence::{
    audit_cube, audit_octahedron, cube, cube_target, extract_pairs, octahedron, LaurentPoly,
    RecurrenceError,
};
use crate::sample::{
    cftp_sample_with_budget, frozen_map, render_tiling, RandomSource, SampleError,
    DEFAULT_WINDOW_BUDGET,
};

/// A failed subcommand. `kind` fills the structured error object; the
/// `usage` kind exits 2 like a flag-parsing error, everything else exits 1.
#[derive(Debug)]
struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError { kind: "usage", message: message.into() }
    }

    fn domain(message: impl Into<String>) -> CliError {
        CliError { kind: "domain", message: message.into() }
    }

    fn bad_input(message: impl Into<String>) -> CliError {
        CliError { kind: "bad-input", message: message.into() }
    }

    fn io(message: impl Into<String>) -> CliError {
        CliError { kind: "io", message: message.into() }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        CliError::bad_input(e.to_string())
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> CliError {
        CliError::domain(e.to_string())
    }
}

impl From<FplError> for CliError {
    fn from(e: FplError) -> CliError {
        CliError::domain(e.to_string())
    }
}

impl From<SampleError> for CliError {
    fn from(e: SampleError) -> CliError {
        CliError::domain(e.to_string())
    }
}

impl From<RecurrenceError> for CliError {
    fn from(e: RecurrenceError) -> CliError {
        CliError::domain(e.to_string())
    }
}

/// Alternating-sign matrix toolkit: representation conversions, exact and
/// weighted counts, loop statistics, perfect sampling, and the octahedron
/// and cube recurrences.
#[derive(Parser)]
#[command(name = "asmkit", version)]
struct Cli {
    /// Cap on worker threads; the ASMKIT_THREADS variable is the fallback.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Convert a matrix between its representations.
    Convert(ConvertArgs),
    /// Count the matrices of one order.
    Count(CountArgs),
    /// Weighted counts: x per -1 entry, or the checkerboard 2-weighting.
    Weight(WeightArgs),
    /// Half-board counts and the class-average identity.
    Half(HalfArgs),
    /// Count the matrices fixed by a symmetry of the square.
    Symmetric(SymmetricArgs),
    /// Hankel determinant identity and the series coefficients behind it.
    Hankel(HankelArgs),
    /// Loop decomposition statistics: histogram, invariance, stub links.
    Fpl(FplArgs),
    /// Draw one uniform sample; optionally render its tiling to a file.
    Sample(SampleArgs),
    /// Expand the octahedron recurrence into its monomials.
    Octahedron(OctahedronArgs),
    /// Expand the cube recurrence into its monomials.
    Cube(CubeArgs),
    /// Run the built-in acceptance checks and print a pass/fail table.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse::<Kind>().map_err(|_| {
        let names: Vec<&str> = Kind::ALL.iter().map(|k| k.name()).collect();
        format!("expected one of: {}", names.join(", "))
    })
}

fn parse_group(s: &str) -> Result<SymmetryGroup, String> {
    s.parse::<SymmetryGroup>().map_err(|_| {
        let names: Vec<&str> = SymmetryGroup::ALL.iter().map(|g| g.name()).collect();
        format!("expected one of: {}", names.join(", "))
    })
}

fn parse_phase(s: &str) -> Result<HybridPhase, String> {
    s.parse::<HybridPhase>()
        .map_err(|_| "expected origin-even or origin-odd".to_string())
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.parse::<BigRational>()
        .map_err(|_| "expected an exact rational such as 2, -1, or 1/2".to_string())
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>().map_err(|_| "expected an integer".to_string())
}

/// Wrapper so the derive treats the parsed pattern as one value rather
/// than a multi-occurrence list.
#[derive(Clone)]
struct HalfPattern(Vec<i8>);

fn parse_half_pattern(s: &str) -> Result<HalfPattern, String> {
    parse_pattern(s).map(HalfPattern).map_err(|e| e.to_string())
}

#[derive(Args)]
struct ConvertArgs {
    /// Representation of the input.
    #[arg(long, value_parser = parse_kind)]
    from: Kind,
    /// Representation to produce.
    #[arg(long, value_parser = parse_kind)]
    to: Kind,
    /// Read the object from this file instead of stdin.
    #[arg(long, conflicts_with = "inline")]
    input: Option<PathBuf>,
    /// Take the object text directly from the argument.
    #[arg(long)]
    inline: Option<String>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    /// Product formula.
    Formula,
    /// Explicit enumeration.
    Brute,
    /// Row-by-row transfer sweep.
    Transfer,
    /// Order ideals of the height-function lattice.
    Ideals,
}

#[derive(Args)]
struct CountArgs {
    /// Matrix order, at least 1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_enum, default_value_t = CountMethod::Formula)]
    method: CountMethod,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["x", "hybrid"])))]
struct WeightArgs {
    /// Matrix order, at least 1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Weight contributed by every -1 entry, as an exact rational.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    x: Option<BigRational>,
    /// Checkerboard weighting: 2 per -1 on marked cells and per +1 off them.
    #[arg(long)]
    hybrid: bool,
    /// Checkerboard phase: whether cell (1,1) counts as even.
    #[arg(long, value_parser = parse_phase, default_value = "origin-even", requires = "hybrid")]
    phase: HybridPhase,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HalfVariantArg {
    /// Bottom row pinned to the alternating profile of --c.
    Fixed,
    /// Bottom row free over all balanced profiles.
    Free,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["variant", "averages"])))]
struct HalfArgs {
    /// Number of rows in the half board, at least 1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, value_enum)]
    variant: Option<HalfVariantArg>,
    /// Column pattern such as ++- for --variant fixed; length must equal --n.
    #[arg(long, value_parser = parse_half_pattern, requires = "variant")]
    c: Option<HalfPattern>,
    /// Weight each board by 2^(number of -1 entries) instead of counting.
    #[arg(long, requires = "variant")]
    weighted: bool,
    /// Check that the per-class averages of fixed-pattern counts coincide.
    #[arg(long, conflicts_with_all = ["c", "weighted"])]
    averages: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct SymmetricArgs {
    /// Matrix order, at least 1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Symmetry subgroup name, for example half-turn or mirror-diagonal.
    #[arg(long, value_parser = parse_group)]
    group: SymmetryGroup,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["n", "coefficients"])))]
struct HankelArgs {
    /// Order of the Hankel matrix to test.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: Option<u32>,
    /// Emit this many leading series coefficients instead.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    coefficients: Option<u32>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
#[command(group(ArgGroup::new("stat").args(["histogram", "wieland", "wilson"])))]
struct FplArgs {
    /// Matrix order, between 1 and 7.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Tabulate the link-pattern histogram (the default).
    #[arg(long)]
    histogram: bool,
    /// Check rotation and reflection invariance of the histogram.
    #[arg(long)]
    wieland: bool,
    /// Count states whose pattern links the first two stubs.
    #[arg(long)]
    wilson: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Text,
    Ppm,
    Svg,
}

impl RenderFormat {
    fn name(self) -> &'static str {
        match self {
            RenderFormat::Text => "text",
            RenderFormat::Ppm => "ppm",
            RenderFormat::Svg => "svg",
        }
    }
}

#[derive(Args)]
struct SampleArgs {
    /// Matrix order, between 1 and 64.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Seed of the deterministic random stream.
    #[arg(long)]
    seed: u64,
    /// Largest coupling window to try before giving up.
    #[arg(long, default_value_t = DEFAULT_WINDOW_BUDGET)]
    budget: u64,
    /// Rendering for --out; inferred from the file suffix when omitted.
    #[arg(long, value_enum, requires = "out")]
    format: Option<RenderFormat>,
    /// Write the rendered tiling to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include the map of sites frozen across all matrices of this order.
    #[arg(long)]
    frozen_map: bool,
}

#[derive(Args)]
struct OctahedronArgs {
    /// Recurrence level, between 1 and 5.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Integer weight on the second product of the recurrence.
    #[arg(long, value_parser = parse_bigint, default_value = "1", allow_hyphen_values = true)]
    lambda: BigInt,
    /// Check coefficients and exponent ranges instead of dumping terms.
    #[arg(long)]
    audit: bool,
    /// Decode the monomials into matrix pairs and write them to this file.
    #[arg(long)]
    pairs: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct CubeArgs {
    /// Recurrence level, between 1 and 6.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    /// Check coefficients and exponent ranges instead of dumping terms.
    #[arg(long)]
    audit: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct SelftestArgs {
    /// Run a single check by its index, 1 through 10.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=10))]
    only: Option<u32>,
}

/// Entry point behind the binary: takes the full argument vector including
/// the program name, returns the process exit code.
pub fn run(args: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) if e.kind == "usage" => {
            eprintln!("error: {}", e.message);
            eprintln!("run with --help for usage");
            2
        }
        Err(e) => {
            eprintln!("{}", json!({"error": {"kind": e.kind, "message": e.message}}));
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let threads = match cli.threads {
        Some(t) => Some(t),
        None => match std::env::var("ASMKIT_THREADS") {
            Ok(raw) => Some(raw.parse::<usize>().map_err(|_| {
                CliError::usage(format!("ASMKIT_THREADS must be an integer, got {raw:?}"))
            })?),
            Err(_) => None,
        },
    };
    if let Some(t) = threads {
        // Ignore the error: the global pool may already be running, and the
        // cap is best-effort either way.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match &cli.command {
        Cmd::Convert(a) => run_convert(a),
        Cmd::Count(a) => run_count(a),
        Cmd::Weight(a) => run_weight(a),
        Cmd::Half(a) => run_half(a),
        Cmd::Symmetric(a) => run_symmetric(a),
        Cmd::Hankel(a) => run_hankel(a),
        Cmd::Fpl(a) => run_fpl(a),
        Cmd::Sample(a) => run_sample(a),
        Cmd::Octahedron(a) => run_octahedron(a),
        Cmd::Cube(a) => run_cube(a),
        Cmd::Selftest(a) => run_selftest(a),
    }
}

fn emit(format: OutputFormat, value: Value, text: String) {
    match format {
        OutputFormat::Json => println!("{value}"),
        OutputFormat::Text => print!("{text}"),
    }
}

fn read_source(input: Option<&Path>, inline: Option<&str>) -> Result<String, CliError> {
    if let Some(text) = inline {
        return Ok(text.to_string());
    }
    if let Some(path) = input {
        return fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())));
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| CliError::io(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn run_convert(a: &ConvertArgs) -> Result<(), CliError> {
    let raw = read_source(a.input.as_deref(), a.inline.as_deref())?;
    let object = if raw.trim_start().starts_with('{') {
        let value: Value = serde_json::from_str(&raw)
            .map_err(|e| CliError::bad_input(format!("input is not valid JSON: {e}")))?;
        let object = object_from_json(&value)?;
        if object.kind() != a.from {
            return Err(CliError::bad_input(format!(
                "input declares kind {} but --from is {}",
                object.kind(),
                a.from
            )));
        }
        object
    } else {
        object_from_text(a.from, &raw)?
    };
    let converted = object.convert(a.to);
    emit(
        a.format,
        object_to_json(&converted),
        object_to_text(&converted),
    );
    Ok(())
}

fn run_count(a: &CountArgs) -> Result<(), CliError> {
    let n = a.n as usize;
    let count = match a.method {
        CountMethod::Formula => count_formula(n),
        CountMethod::Brute => {
            if n > 7 {
                return Err(CliError::domain(format!(
                    "explicit enumeration is capped at order 7; order {n} needs --method formula or transfer"
                )));
            }
            BigUint::from(enumerate_asms(n).count())
        }
        CountMethod::Transfer => {
            if n > 20 {
                return Err(CliError::domain(format!(
                    "the transfer sweep holds 2^n states and is capped at order 20; order {n} needs --method formula"
                )));
            }
            transfer_count(n)
        }
        CountMethod::Ideals => {
            if n > 7 {
                return Err(CliError::domain(format!(
                    "ideal counting walks the full lattice and is capped at order 7; order {n} needs --method formula"
                )));
            }
            count_ideals(n)
        }
    };
    emit(
        a.format,
        json!({"n": a.n, "count": count.to_string()}),
        format!("{count}\n"),
    );
    Ok(())
}

fn run_weight(a: &WeightArgs) -> Result<(), CliError> {
    let n = a.n as usize;
    if n > 16 {
        return Err(CliError::domain(format!(
            "the weighted transfer sweep holds 2^n states and is capped at order 16, got {n}"
        )));
    }
    if a.hybrid {
        let report = hybrid_2_enumeration(n, a.phase)?;
        emit(
            a.format,
            json!({
                "n": a.n,
                "phase": report.phase.name(),
                "total": report.total.to_string(),
                "two_exponent": report.two_exponent,
                "five_exponent": report.five_exponent,
            }),
            format!(
                "{} = 2^{} * 5^{}\n",
                report.total, report.two_exponent, report.five_exponent
            ),
        );
        return Ok(());
    }
    let x = a.x.clone().expect("the mode group guarantees --x here");
    let value = x_enumeration(n, &x);
    emit(
        a.format,
        json!({"n": a.n, "x": x.to_string(), "value": value.to_string()}),
        format!("{value}\n"),
    );
    Ok(())
}

fn run_half(a: &HalfArgs) -> Result<(), CliError> {
    let n = a.n as usize;
    if a.averages {
        if n > 8 {
            return Err(CliError::domain(format!(
                "the averaging check runs 2^n half-board sweeps and is capped at order 8, got {n}"
            )));
        }
        let report = half_average_property(n);
        let classes: Vec<Value> = report
            .averages
            .iter()
            .map(|c| {
                json!({
                    "plus_count": c.plus_count,
                    "entry_sum": c.entry_sum,
                    "class_size": c.class_size.to_string(),
                    "total": c.total.to_string(),
                    "average": c.average.to_string(),
                })
            })
            .collect();
        let mut text = String::new();
        for c in &report.averages {
            text.push_str(&format!(
                "{} plus signs: average {} over {} patterns\n",
                c.plus_count, c.average, c.class_size
            ));
        }
        text.push_str(&format!("all equal: {}\n", report.all_equal));
        emit(
            a.format,
            json!({"n": a.n, "all_equal": report.all_equal, "averages": classes}),
            text,
        );
        return Ok(());
    }
    if n > 10 {
        return Err(CliError::domain(format!(
            "the half-board sweep is capped at order 10, got {n}"
        )));
    }
    let variant = a.variant.expect("the mode group guarantees --variant here");
    let (spec, variant_name, pattern_text) = match variant {
        HalfVariantArg::Fixed => {
            let HalfPattern(pattern) = a
                .c
                .as_ref()
                .ok_or_else(|| CliError::usage("--variant fixed requires --c"))?;
            if pattern.len() != n {
                return Err(CliError::usage(format!(
                    "--c has length {} but --n is {n}",
                    pattern.len()
                )));
            }
            let text: String = pattern.iter().map(|&v| if v == 1 { '+' } else { '-' }).collect();
            (HalfSpec::fixed_alternating(pattern)?, "fixed", Some(text))
        }
        HalfVariantArg::Free => {
            if a.c.is_some() {
                return Err(CliError::usage("--c only applies to --variant fixed"));
            }
            (HalfSpec::free_bottom(n)?, "free", None)
        }
    };
    let count = if a.weighted { half_2_enumeration(&spec) } else { half_count(&spec) };
    let mut obj = Map::new();
    obj.insert("n".into(), json!(a.n));
    obj.insert("variant".into(), json!(variant_name));
    if let Some(p) = &pattern_text {
        obj.insert("pattern".into(), json!(p));
    }
    obj.insert("weighted".into(), json!(a.weighted));
    obj.insert("count".into(), json!(count.to_string()));
    emit(a.format, Value::Object(obj), format!("{count}\n"));
    Ok(())
}

fn run_symmetric(a: &SymmetricArgs) -> Result<(), CliError> {
    let n = a.n as usize;
    if n > 7 {
        return Err(CliError::domain(format!(
            "symmetry counting filters the full enumeration and is capped at order 7, got {n}"
        )));
    }
    let count = count_symmetric(n, a.group);
    emit(
        a.format,
        json!({"n": a.n, "group": a.group.name(), "count": count.to_string()}),
        format!("{count}\n"),
    );
    Ok(())
}

fn run_hankel(a: &HankelArgs) -> Result<(), CliError> {
    if let Some(k) = a.coefficients {
        let coefficients = catalan3_coefficients(k as usize)?;
        let strings: Vec<String> = coefficients.iter().map(|c| c.to_string()).collect();
        emit(
            a.format,
            json!({"count": k, "coefficients": strings}),
            format!("{}\n", strings.join(" ")),
        );
        return Ok(());
    }
    let n = a.n.expect("the what group guarantees --n here") as usize;
    let report = hankel_identity(n)?;
    emit(
        a.format,
        json!({
            "n": a.n,
            "determinant": report.determinant.to_string(),
            "predicted": report.predicted.to_string(),
            "equal": report.equal,
        }),
        format!(
            "determinant {}\npredicted {}\nequal {}\n",
            report.determinant, report.predicted, report.equal
        ),
    );
    Ok(())
}

fn run_fpl(a: &FplArgs) -> Result<(), CliError> {
    let n = a.n as usize;
    if n > 7 {
        return Err(CliError::domain(format!(
            "loop statistics tabulate the full enumeration and are capped at order 7, got {n}"
        )));
    }
    if a.wieland {
        let report = wieland_check(n)?;
        emit(
            a.format,
            json!({
                "n": a.n,
                "rotation_invariant": report.rotation_invariant,
                "reflection_invariant": report.reflection_invariant,
            }),
            format!(
                "rotation_invariant {}\nreflection_invariant {}\n",
                report.rotation_invariant, report.reflection_invariant
            ),
        );
        return Ok(());
    }
    if a.wilson {
        let report = wilson_fraction(n)?;
        emit(
            a.format,
            json!({
                "n": a.n,
                "linked_count": report.linked_count.to_string(),
                "predicted": report.predicted.to_string(),
                "equal": report.equal,
            }),
            format!(
                "linked {}\npredicted {}\nequal {}\n",
                report.linked_count, report.predicted, report.equal
            ),
        );
        return Ok(());
    }
    let histogram = count_by_link_pattern(n)?;
    let total: BigUint = histogram.values().sum();
    let patterns: Vec<Value> = histogram
        .iter()
        .map(|(p, c)| json!({"pattern": p.to_string(), "count": c.to_string()}))
        .collect();
    let mut text = String::new();
    for (p, c) in &histogram {
        text.push_str(&format!("{p} {c}\n"));
    }
    text.push_str(&format!("total {total}\n"));
    emit(
        a.format,
        json!({"n": a.n, "total": total.to_string(), "patterns": patterns}),
        text,
    );
    Ok(())
}

fn infer_render_format(path: &Path) -> Option<RenderFormat> {
    match path.extension()?.to_str()? {
        "txt" | "text" => Some(RenderFormat::Text),
        "ppm" => Some(RenderFormat::Ppm),
        "svg" => Some(RenderFormat::Svg),
        _ => None,
    }
}

fn run_sample(a: &SampleArgs) -> Result<(), CliError> {
    let n = a.n as usize;
    if n > 64 {
        return Err(CliError::domain(format!(
            "sampling is capped at order 64; coupling windows beyond that outgrow the budget, got {n}"
        )));
    }
    let rng = RandomSource::new(a.seed);
    let outcome = cftp_sample_with_budget(n, &rng, a.budget)?;
    let mut obj = Map::new();
    obj.insert("n".into(), json!(a.n));
    obj.insert("seed".into(), json!(a.seed));
    obj.insert("window".into(), json!(outcome.window));
    obj.insert("rows".into(), json!(outcome.asm.to_rows()));
    if a.frozen_map {
        let height = corner_sum_to_height(&asm_to_corner_sum(&outcome.asm));
        obj.insert("frozen".into(), json!(frozen_map(&height).rows()));
    }
    if let Some(path) = &a.out {
        let format = a
            .format
            .or_else(|| infer_render_format(path))
            .ok_or_else(|| {
                CliError::usage(format!(
                    "cannot infer a render format from {}; pass --format text, ppm, or svg",
                    path.display()
                ))
            })?;
        let bytes = render_tiling(&asm_to_six_vertex(&outcome.asm), format.name())?;
        fs::write(path, &bytes)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?;
        obj.insert("format".into(), json!(format.name()));
        obj.insert("out".into(), json!(path.display().to_string()));
        obj.insert("bytes".into(), json!(bytes.len()));
    }
    println!("{}", Value::Object(obj));
    Ok(())
}

fn poly_terms_json(poly: &LaurentPoly) -> Value {
    let terms: Vec<Value> = poly
        .terms()
        .map(|(monomial, coeff)| {
            let mut vars = Map::new();
            for (var, exp) in monomial.vars() {
                vars.insert(var.to_string(), json!(exp));
            }
            json!({"coeff": coeff.to_string(), "vars": vars})
        })
        .collect();
    Value::Array(terms)
}

fn run_octahedron(a: &OctahedronArgs) -> Result<(), CliError> {
    let n = a.n as usize;
    if n > 5 {
        return Err(CliError::domain(format!(
            "level {n} expands to 2^(n(n+1)/2) monomials; levels above 5 are refused"
        )));
    }
    let poly = octahedron(n, &a.lambda);
    let mut obj = Map::new();
    obj.insert("n".into(), json!(a.n));
    obj.insert("lambda".into(), json!(a.lambda.to_string()));
    obj.insert("term_count".into(), json!(poly.num_terms()));
    let mut text = String::new();
    if a.audit {
        audit_octahedron(&poly)?;
        obj.insert("audit".into(), json!("ok"));
        text.push_str(&format!("{} terms, audit ok\n", poly.num_terms()));
    }
    if let Some(path) = &a.pairs {
        let pairs = extract_pairs(&poly)?;
        let entries: Vec<Value> = pairs
            .iter()
            .map(|p| json!({"lower": p.lower.to_rows(), "upper": p.upper.to_rows()}))
            .collect();
        fs::write(path, format!("{}\n", Value::Array(entries)))
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?;
        obj.insert("pairs".into(), json!(pairs.len()));
        obj.insert("out".into(), json!(path.display().to_string()));
        text.push_str(&format!("wrote {} pairs to {}\n", pairs.len(), path.display()));
    }
    if !a.audit && a.pairs.is_none() {
        obj.insert("terms".into(), poly_terms_json(&poly));
        text = format!("{poly}\n");
    }
    emit(a.format, Value::Object(obj), text);
    Ok(())
}

fn run_cube(a: &CubeArgs) -> Result<(), CliError> {
    let n = a.n as usize;
    if n > 6 {
        return Err(CliError::domain(format!(
            "level {n} expands to 3^(n^2/4) monomials; levels above 6 are refused"
        )));
    }
    let poly = cube(n);
    let (i, j, k) = cube_target(n);
    let mut obj = Map::new();
    obj.insert("n".into(), json!(a.n));
    obj.insert("site".into(), json!([i, j, k]));
    obj.insert("term_count".into(), json!(poly.num_terms()));
    let text;
    if a.audit {
        audit_cube(&poly)?;
        obj.insert("audit".into(), json!("ok"));
        text = format!("{} terms, audit ok\n", poly.num_terms());
    } else {
        obj.insert("terms".into(), poly_terms_json(&poly));
        text = format!("{poly}\n");
    }
    emit(a.format, Value::Object(obj), text);
    Ok(())
}

fn run_selftest(a: &SelftestArgs) -> Result<(), CliError> {
    let outcomes = selftest::run_all(a.only.map(|v| v as usize));
    let mut failed = 0usize;
    for outcome in &outcomes {
        match &outcome.result {
            Ok(detail) => {
                println!("{:>2}  {:<20} pass  {detail}", outcome.index, outcome.name);
            }
            Err(detail) => {
                failed += 1;
                println!("{:>2}  {:<20} FAIL  {detail}", outcome.index, outcome.name);
            }
        }
    }
    println!("{}/{} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed > 0 {
        return Err(CliError::domain(format!(
            "{failed} of {} criteria failed",
            outcomes.len()
        )));
    }
    Ok(())
}
