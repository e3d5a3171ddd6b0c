//! The `flagvar` command line.
//!
//! Exit status: 0 success, 1 failed expectations (`verify`), 2 usage error,
//! 3 enumeration guard overflow.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, ClassificationRecord, CrossingFilter, SweepBounds};
use crate::drops;
use crate::parabolic::{FlagSpec, ParabolicFlag, Weight};
use crate::rootsys::{Series, SimpleType};
use crate::submodule::{growth_vector, EnumerationGuard, GrowthVector, RootSet};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "flagvar",
    version,
    about = "Root-system combinatorics of generalized flag varieties G/P"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Dimension, root data, omega and grading of G/P.
    Describe(FlagArgs),
    /// Every P-submodule of the cotangent module, with its properties.
    Submodules(FlagArgs),
    /// Classification sweep over irreducible types.
    Classify(ClassifyArgs),
    /// Check the built-in worked-example corpus.
    Verify,
    /// Parabolics containing P and the drop analysis.
    Drops(DropsArgs),
    /// Growth vector of the bracket filtration of a plane field.
    Growth(GrowthArgs),
}

#[derive(Debug, Args)]
struct FlagArgs {
    /// Series letter (A..G), or a full type such as `G2`.
    #[arg(long = "type", value_name = "SERIES")]
    ty: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Crossed nodes in Bourbaki numbering, comma separated, or `all`.
    #[arg(long, value_name = "NODES")]
    crossed: Option<String>,
    /// One factor of a product, as `series:rank:crossed` (repeatable).
    #[arg(long = "factor", value_name = "SERIES:RANK:NODES")]
    factors: Vec<String>,
    /// JSON flag descriptor.
    #[arg(long, value_name = "JSON")]
    descriptor: Option<String>,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long, default_value_t = 4)]
    max_rank: usize,
    #[arg(long, value_enum, default_value_t = CrossingArg::All)]
    crossing: CrossingArg,
    /// Restrict to these series, comma separated.
    #[arg(long, value_name = "LETTERS")]
    series: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CrossingArg {
    All,
    Maximal,
    Borel,
}

#[derive(Debug, Args)]
struct DropsArgs {
    #[command(flatten)]
    flag: FlagArgs,
    /// Nodes whose circles are rational, one-based across all factors.
    #[arg(long, value_name = "NODES")]
    rational: Option<String>,
}

#[derive(Debug, Args)]
struct GrowthArgs {
    #[command(flatten)]
    flag: FlagArgs,
    /// A root of the plane, as comma separated simple-root coefficients
    /// (repeatable). Defaults to the level-1 roots.
    #[arg(long = "root", value_name = "COEFFS", allow_hyphen_values = true)]
    roots: Vec<String>,
}

/// Command failure carrying its exit status.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardOverflow { .. } => EXIT_GUARD,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("write failed: {e}"),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("csv output failed: {e}"),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: format!("json output failed: {e}"),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "flagvar: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let guard = EnumerationGuard::from_env().map_err(|e| Failure::usage(e.to_string()))?;
    let format = cli.format;
    match cli.verb {
        Verb::Describe(a) => describe(&a.build()?, format, out),
        Verb::Submodules(a) => submodules(&a.build()?, format, guard, out),
        Verb::Classify(a) => classify(&a, format, guard, out),
        Verb::Verify => verify(format, guard, out),
        Verb::Drops(a) => drops_cmd(&a, format, guard, out),
        Verb::Growth(a) => growth(&a, format, out),
    }
}

fn parse_nodes(arg: &str, text: &str, rank: usize) -> std::result::Result<Vec<usize>, Failure> {
    if text.trim() == "all" {
        return Ok((1..=rank).collect());
    }
    let mut nodes = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let node: usize = part
            .parse()
            .map_err(|_| Failure::usage(format!("{arg}: `{part}` is not a node number")))?;
        if node == 0 || node > rank {
            return Err(Failure::usage(format!(
                "{arg}: node {node} out of range 1..={rank}"
            )));
        }
        if !nodes.contains(&node) {
            nodes.push(node);
        }
    }
    if nodes.is_empty() {
        return Err(Failure::usage(format!("{arg}: no nodes given")));
    }
    nodes.sort_unstable();
    Ok(nodes)
}

fn parse_type(
    arg: &str,
    series: &str,
    rank: Option<usize>,
) -> std::result::Result<SimpleType, Failure> {
    let bad = |e: Error| Failure::usage(format!("{arg}: {e}"));
    match rank {
        Some(rank) => {
            let s: Series = series.parse().map_err(bad)?;
            SimpleType::new(s, rank).map_err(|e| Failure::usage(format!("--rank: {e}")))
        }
        None if series.len() > 1 => series.parse().map_err(bad),
        None => Err(Failure::usage(format!(
            "{arg}: rank missing for series `{series}`"
        ))),
    }
}

impl FlagArgs {
    fn spec(&self) -> std::result::Result<FlagSpec, Failure> {
        let single = self.ty.is_some() || self.rank.is_some() || self.crossed.is_some();
        if let Some(json) = &self.descriptor {
            if single || !self.factors.is_empty() {
                return Err(Failure::usage(
                    "--descriptor cannot be combined with other flag options",
                ));
            }
            return serde_json::from_str(json)
                .map_err(|e| Failure::usage(format!("--descriptor: {e}")));
        }
        if !self.factors.is_empty() {
            if single {
                return Err(Failure::usage(
                    "--factor cannot be combined with --type/--rank/--crossed",
                ));
            }
            let mut spec = FlagSpec {
                factors: Vec::new(),
                crossed: Vec::new(),
            };
            for f in &self.factors {
                let parts: Vec<&str> = f.splitn(3, ':').collect();
                let [series, rank, crossed] = parts[..] else {
                    return Err(Failure::usage(format!(
                        "--factor: `{f}` is not series:rank:nodes"
                    )));
                };
                let rank: usize = rank
                    .parse()
                    .map_err(|_| Failure::usage(format!("--factor: `{rank}` is not a rank")))?;
                let ty = parse_type("--factor", series, Some(rank))
                    .map_err(|e| Failure::usage(e.message.replace("--rank", "--factor")))?;
                spec.crossed
                    .push(parse_nodes("--factor", crossed, ty.rank())?);
                spec.factors.push(ty);
            }
            return Ok(spec);
        }
        let series = self
            .ty
            .as_deref()
            .ok_or_else(|| Failure::usage("--type is required"))?;
        let ty = parse_type("--type", series, self.rank)?;
        let crossed = self
            .crossed
            .as_deref()
            .ok_or_else(|| Failure::usage("--crossed is required"))?;
        Ok(FlagSpec::simple(
            ty,
            &parse_nodes("--crossed", crossed, ty.rank())?,
        ))
    }

    fn build(&self) -> std::result::Result<ParabolicFlag, Failure> {
        Ok(self.spec()?.build()?)
    }
}

fn show_root(coeffs: &[i32]) -> String {
    let parts: Vec<String> = coeffs.iter().map(i32::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn show_roots(flag: &ParabolicFlag, set: &RootSet) -> String {
    set.iter()
        .map(|p| show_root(flag.system().coeffs(flag.noncompact_root(p))))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Left-aligned table with a header row.
fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn ratio_cell(r: &Option<crate::SemicanonicalRatio>) -> String {
    r.map_or_else(|| "-".to_string(), |r| r.to_string())
}

#[derive(Serialize)]
struct Description {
    schema_version: u32,
    label: String,
    flag: FlagSpec,
    dimension: usize,
    omega: Weight,
    compact: Vec<Vec<i32>>,
    noncompact: Vec<Vec<i32>>,
    levels: Vec<u32>,
}

fn describe(flag: &ParabolicFlag, format: Format, out: &mut dyn Write) -> CmdResult {
    let sys = flag.system();
    let noncompact: Vec<Vec<i32>> = flag
        .noncompact_roots()
        .iter()
        .map(|&r| sys.coeffs(r).to_vec())
        .collect();
    let compact: Vec<Vec<i32>> = flag
        .compact_roots()
        .iter()
        .map(|&r| sys.coeffs(r).to_vec())
        .collect();
    let levels = flag.level_grading();
    match format {
        Format::Json => {
            let d = Description {
                schema_version: catalog::SCHEMA_VERSION,
                label: flag.label(),
                flag: flag.spec(),
                dimension: flag.dimension(),
                omega: flag.omega().clone(),
                compact,
                noncompact,
                levels,
            };
            writeln!(out, "{}", serde_json::to_string(&d)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["root", "kind", "level"])?;
            for (r, l) in noncompact.iter().zip(&levels) {
                w.write_record([show_root(r), "noncompact".into(), l.to_string()])?;
            }
            for r in &compact {
                w.write_record([show_root(r), "compact".into(), "0".into()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "flag {}", flag.label())?;
            writeln!(out, "dim {}", flag.dimension())?;
            writeln!(out, "omega {} = {}", flag.omega(), flag.omega().pretty())?;
            let compact_text: Vec<String> = compact.iter().map(|r| show_root(r)).collect();
            writeln!(
                out,
                "compact roots ({}): {}",
                compact.len(),
                compact_text.join(" ")
            )?;
            writeln!(out, "noncompact positive roots ({}):", noncompact.len())?;
            let top = levels.iter().copied().max().unwrap_or(0);
            for level in 1..=top {
                let at: Vec<String> = noncompact
                    .iter()
                    .zip(&levels)
                    .filter(|(_, &l)| l == level)
                    .map(|(r, _)| show_root(r))
                    .collect();
                writeln!(out, "  level {level} ({}): {}", at.len(), at.join(" "))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn submodules(
    flag: &ParabolicFlag,
    format: Format,
    guard: EnumerationGuard,
    out: &mut dyn Write,
) -> CmdResult {
    let record = catalog::classify(flag, guard);
    if let Some(e) = &record.error {
        return Err(Failure {
            code: EXIT_GUARD,
            message: format!("{}: {e}", record.label),
        });
    }
    let roots = |members: &[usize]| {
        members
            .iter()
            .map(|&p| show_root(&record.noncompact[p]))
            .collect::<Vec<_>>()
            .join(" ")
    };
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&record)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "index",
                "size",
                "weight",
                "ratio",
                "nontrivial",
                "frobenius",
                "contact",
                "first_order_nondegenerate",
                "roots",
            ])?;
            for (i, s) in record.submodules.iter().enumerate() {
                w.write_record([
                    i.to_string(),
                    s.size.to_string(),
                    s.weight.to_string(),
                    s.ratio.map_or_else(String::new, |r| r.to_string()),
                    s.nontrivial.to_string(),
                    s.frobenius.to_string(),
                    s.contact.to_string(),
                    s.first_order_nondegenerate.to_string(),
                    roots(&s.members),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(
                out,
                "{}: dim {}, omega {}, {} submodules",
                record.label,
                record.dimension,
                record.omega,
                record.submodules.len()
            )?;
            let rows: Vec<Vec<String>> = record
                .submodules
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    vec![
                        i.to_string(),
                        s.size.to_string(),
                        s.weight.to_string(),
                        ratio_cell(&s.ratio),
                        yes_no(s.nontrivial),
                        yes_no(s.frobenius),
                        yes_no(s.contact),
                        yes_no(s.first_order_nondegenerate),
                        roots(&s.members),
                    ]
                })
                .collect();
            write_table(
                out,
                &[
                    "#", "size", "weight", "ratio", "nontriv", "frob", "contact", "nondeg", "roots",
                ],
                &rows,
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn summary_row(r: &ClassificationRecord) -> Vec<String> {
    let count = r
        .submodule_count
        .map_or_else(|| "-".to_string(), |c| c.to_string());
    let bad = r
        .submodules
        .iter()
        .filter(|s| s.nontrivial && s.ratio.is_some() && s.frobenius)
        .count();
    vec![
        r.label.clone(),
        r.dimension.to_string(),
        r.omega.to_string(),
        count,
        r.semicanonical_count().to_string(),
        r.nontrivial_semicanonical_count().to_string(),
        bad.to_string(),
        r.error.clone().unwrap_or_default(),
    ]
}

const SUMMARY_HEADER: [&str; 8] = [
    "flag",
    "dim",
    "omega",
    "submodules",
    "semicanonical",
    "nontrivial_semicanonical",
    "nontrivial_semicanonical_frobenius",
    "error",
];

fn classify(
    a: &ClassifyArgs,
    format: Format,
    guard: EnumerationGuard,
    out: &mut dyn Write,
) -> CmdResult {
    let filter = match a.crossing {
        CrossingArg::All => CrossingFilter::All,
        CrossingArg::Maximal => CrossingFilter::Maximal,
        CrossingArg::Borel => CrossingFilter::Borel,
    };
    let mut bounds = SweepBounds::new(a.max_rank, filter);
    if let Some(list) = &a.series {
        bounds.series = list
            .split(',')
            .map(|s| s.trim().parse::<Series>())
            .collect::<Result<_, _>>()
            .map_err(|e| Failure::usage(format!("--series: {e}")))?;
    }
    let records = catalog::classify_sweep(&bounds, guard);
    match format {
        Format::Json => {
            for r in &records {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(SUMMARY_HEADER)?;
            for r in &records {
                w.write_record(summary_row(r))?;
            }
            w.flush()?;
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = records.iter().map(summary_row).collect();
            write_table(
                out,
                &[
                    "flag",
                    "dim",
                    "omega",
                    "subs",
                    "semican",
                    "nontriv semican",
                    "of which frob",
                    "error",
                ],
                &rows,
            )?;
        }
    }
    if records.iter().any(|r| r.error.is_some()) {
        return Ok(EXIT_GUARD);
    }
    Ok(EXIT_OK)
}

fn verify(format: Format, guard: EnumerationGuard, out: &mut dyn Write) -> CmdResult {
    let report = catalog::verify(&catalog::builtin_examples(), guard);
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "example",
                "check",
                "provenance",
                "expected",
                "computed",
                "passed",
            ])?;
            for e in &report.entries {
                let provenance = serde_json::to_value(e.provenance)?;
                w.write_record([
                    e.example.as_str(),
                    e.check.as_str(),
                    provenance.as_str().unwrap_or_default(),
                    e.expected.as_str(),
                    e.computed.as_str(),
                    if e.passed { "true" } else { "false" },
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for e in report.failures() {
                writeln!(
                    out,
                    "FAIL {}: {}: expected {}, computed {}",
                    e.example, e.check, e.expected, e.computed
                )?;
            }
            let n = report.entries.len();
            if report.all_passed() {
                writeln!(out, "all {n} expectations passed")?;
            } else {
                writeln!(out, "{} of {n} expectations failed", n - report.passed())?;
            }
        }
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

#[derive(Serialize)]
struct DropsOutput {
    label: String,
    lattice: drops::DropLattice,
    #[serde(skip_serializing_if = "Option::is_none")]
    circle_drop: Option<drops::CircleDrop>,
    analysis: drops::DropAnalysis,
}

fn drops_cmd(
    a: &DropsArgs,
    format: Format,
    guard: EnumerationGuard,
    out: &mut dyn Write,
) -> CmdResult {
    let flag = a.flag.build()?;
    let circle = match &a.rational {
        Some(text) => {
            let nodes = parse_nodes("--rational", text, flag.system().rank())?;
            Some(drops::circle_drop(
                &flag,
                &nodes.iter().map(|n| n - 1).collect::<Vec<_>>(),
            ))
        }
        None => None,
    };
    let result = DropsOutput {
        label: flag.label(),
        lattice: drops::drop_lattice(&flag),
        circle_drop: circle,
        analysis: drops::drop_analysis(&flag, guard)?,
    };
    let one_based = |nodes: &[usize]| {
        let parts: Vec<String> = nodes.iter().map(|n| (n + 1).to_string()).collect();
        format!("{{{}}}", parts.join(","))
    };
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&result)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record([
                "index",
                "label",
                "crossed",
                "fiber_crossed",
                "equivalence",
                "covers",
            ])?;
            for (i, t) in result.lattice.nodes.iter().enumerate() {
                let covers: Vec<String> = result
                    .lattice
                    .edges
                    .iter()
                    .filter(|e| e.0 == i)
                    .map(|e| e.1.to_string())
                    .collect();
                w.write_record([
                    i.to_string(),
                    t.label.clone(),
                    one_based(&t.crossed),
                    one_based(&t.fiber_crossed),
                    t.equivalence.clone(),
                    covers.join(" "),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "parabolics containing {}:", result.label)?;
            let rows: Vec<Vec<String>> = result
                .lattice
                .nodes
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let covers: Vec<String> = result
                        .lattice
                        .edges
                        .iter()
                        .filter(|e| e.0 == i)
                        .map(|e| e.1.to_string())
                        .collect();
                    vec![
                        i.to_string(),
                        t.label.clone(),
                        one_based(&t.fiber_crossed),
                        t.equivalence.clone(),
                        covers.join(" "),
                    ]
                })
                .collect();
            write_table(out, &["#", "target", "fiber", "class", "covers"], &rows)?;
            if let Some(c) = &result.circle_drop {
                writeln!(out, "circle rule: drops to {}", c.label)?;
            }
            let witnesses: Vec<String> = result
                .analysis
                .witnesses
                .iter()
                .map(|w| {
                    format!(
                        "{{{}}}",
                        show_roots(
                            &flag,
                            &RootSet::from_positions(flag.dimension(), w.iter().copied())
                        )
                    )
                })
                .collect();
            writeln!(
                out,
                "nontrivial semicanonical non-Frobenius submodules: {}",
                if witnesses.is_empty() {
                    "none".to_string()
                } else {
                    witnesses.join(" ")
                }
            )?;
            writeln!(out, "rigid: {}", yes_no(result.analysis.rigid))?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct GrowthOutput {
    label: String,
    plane: Vec<Vec<i32>>,
    growth: GrowthVector,
}

fn growth(a: &GrowthArgs, format: Format, out: &mut dyn Write) -> CmdResult {
    let flag = a.flag.build()?;
    let n = flag.dimension();
    let plane = if a.roots.is_empty() {
        RootSet::from_positions(n, (0..n).filter(|&p| flag.level(p) == 1))
    } else {
        let mut roots = Vec::new();
        for r in &a.roots {
            let coeffs: Vec<i32> = r
                .split(',')
                .map(|c| c.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::usage(format!("--root: `{r}` is not a coefficient list")))?;
            roots.push(coeffs);
        }
        RootSet::from_roots(&flag, &roots).map_err(|e| Failure::usage(format!("--root: {e}")))?
    };
    let g = growth_vector(&flag, &plane);
    match format {
        Format::Json => {
            let o = GrowthOutput {
                label: flag.label(),
                plane: plane
                    .iter()
                    .map(|p| flag.system().coeffs(flag.noncompact_root(p)).to_vec())
                    .collect(),
                growth: g,
            };
            writeln!(out, "{}", serde_json::to_string(&o)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["step", "size"])?;
            for (i, s) in g.0.iter().enumerate() {
                w.write_record([(i + 1).to_string(), s.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "plane {}", show_roots(&flag, &plane))?;
            writeln!(out, "growth {g}")?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("flagvar").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn node_lists() {
        assert_eq!(parse_nodes("--crossed", "3,1", 4).unwrap(), vec![1, 3]);
        assert_eq!(parse_nodes("--crossed", "all", 3).unwrap(), vec![1, 2, 3]);
        assert!(parse_nodes("--crossed", "5", 4)
            .unwrap_err()
            .message
            .contains("--crossed"));
        assert!(parse_nodes("--crossed", "", 4).is_err());
    }

    #[test]
    fn full_type_name() {
        let (code, out, _) = call(&["describe", "--type", "G2", "--crossed", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("dim 5"));
    }

    #[test]
    fn bad_series_names_argument() {
        let (code, _, err) = call(&["describe", "--type", "Q", "--rank", "2", "--crossed", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--type"), "{err}");
        let (code, _, err) = call(&["describe", "--type", "E", "--rank", "9", "--crossed", "1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--rank"), "{err}");
    }

    #[test]
    fn table_alignment() {
        let mut buf = Vec::new();
        write_table(&mut buf, &["a", "bb"], &[vec!["xxx".into(), "y".into()]]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "a    bb\nxxx  y\n");
    }
}
