//! Command-line front end: polynomial computations, oracle verification, and
//! a pairs-polynomial collision search over graph6 streams.
//!
//! The whole tool lives in this library (the binary is a two-line wrapper) so
//! integration tests can drive the exact code path the binary runs, capture
//! its output, and check its exit codes without spawning processes.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num::BigRational;
use serde::Serialize;
use serde_json::json;

use coloring_polys::{
    chromatic_polynomial, clique_poly, count_poly, gds_multiset, hexagon_poly, oracle_count,
    pairs_poly, parse_graph6, product_clique_poly, tree_hypercube_poly, ChromaticCache,
    CountError, GDSEntry, Graph, OracleError, RationalPoly, TreeError,
};

// ---------------------------------------------------------------------------
// argument grammar

#[derive(Parser)]
#[command(
    name = "coloring-polys",
    version,
    about = "Exact polynomials counting induced subgraphs of k-coloring graphs"
)]
struct Cli {
    /// Emit a JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chromatic polynomial of a graph.
    Chromatic {
        /// graph6 record of the graph
        #[arg(long)]
        g6: String,
    },
    /// Polynomial counting induced copies of an arbitrary pattern in the
    /// coloring graph.
    Count {
        /// graph6 record of the base graph
        #[arg(long)]
        g6: String,
        /// graph6 record of the pattern graph
        #[arg(long = "pattern-g6")]
        pattern_g6: String,
    },
    /// Edge-count polynomial of the coloring graph (pattern P2).
    Pairs {
        /// graph6 record of the base graph
        #[arg(long)]
        g6: String,
    },
    /// Polynomial counting r-cliques of the coloring graph.
    Clique {
        /// graph6 record of the base graph
        #[arg(long)]
        g6: String,
        /// clique size, at least 2
        #[arg(long)]
        r: u32,
    },
    /// Polynomial counting induced clique products K_{r1} x ... x K_{rd}.
    Product {
        /// graph6 record of the base graph
        #[arg(long)]
        g6: String,
        /// comma-separated clique sizes, each at least 2
        #[arg(long)]
        sizes: String,
    },
    /// Polynomial counting induced 6-cycles of the coloring graph.
    Hexagon {
        /// graph6 record of the base graph
        #[arg(long)]
        g6: String,
    },
    /// Hypercube-count polynomial of a tree, via the closed form.
    TreeQd {
        /// graph6 record of the tree
        #[arg(long)]
        g6: String,
        /// hypercube dimension
        #[arg(long)]
        d: usize,
    },
    /// Generalized degree sequence of a tree at one subset size.
    Gds {
        /// graph6 record of the tree
        #[arg(long)]
        g6: String,
        /// subset size
        #[arg(long)]
        i: usize,
    },
    /// Brute-force induced-copy count in the k-coloring graph.
    Oracle {
        /// graph6 record of the base graph
        #[arg(long)]
        g6: String,
        /// graph6 record of the pattern graph
        #[arg(long = "pattern-g6")]
        pattern_g6: String,
        /// number of colors
        #[arg(long)]
        k: u32,
    },
    /// Check the computed polynomial against the brute-force oracle for
    /// every k up to a bound.
    Verify {
        /// graph6 record of the base graph
        #[arg(long)]
        g6: String,
        /// graph6 record of the pattern graph
        #[arg(long = "pattern-g6")]
        pattern_g6: String,
        /// largest k to check (inclusive)
        #[arg(long)]
        kmax: u32,
    },
    /// Hunt pairs-polynomial collisions in a newline-delimited graph6 file.
    SearchP2 {
        /// input file, one graph6 record per line
        #[arg(long)]
        input: std::path::PathBuf,
    },
}

// ---------------------------------------------------------------------------
// failures and exit codes

/// A command failure: what to print and which process exit code to use.
/// Code 2 is a usage or input error, code 3 an exceeded computation budget.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

impl From<OracleError> for Failure {
    fn from(err: OracleError) -> Failure {
        Failure { code: 3, message: err.to_string() }
    }
}

impl From<CountError> for Failure {
    fn from(err: CountError) -> Failure {
        let code = match err {
            CountError::PatternTooLarge { .. } => 3,
            CountError::DisconnectedPattern => 2,
        };
        Failure { code, message: err.to_string() }
    }
}

impl From<TreeError> for Failure {
    fn from(err: TreeError) -> Failure {
        usage(err.to_string())
    }
}

// ---------------------------------------------------------------------------
// entry point

/// Run one command line against `out`, returning the process exit code:
/// 0 success, 1 a `verify` disagreement, 2 usage error, 3 budget exceeded.
pub fn run_command<I, S>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = write!(out, "{}", err.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(out, "error: {}", failure.message);
            failure.code
        }
    }
}

fn parse(g6: &str) -> Result<Graph, Failure> {
    parse_graph6(g6).map_err(|err| usage(format!("invalid graph6 record {g6:?}: {err}")))
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

/// JSON degree field: the zero polynomial, whose degree is undefined, is
/// reported as -1.
fn degree_field(p: &RationalPoly) -> i64 {
    p.degree().map_or(-1, |d| d as i64)
}

fn emit_poly(
    out: &mut dyn Write,
    as_json: bool,
    input: &str,
    pattern: Option<&str>,
    poly: &RationalPoly,
    start: Instant,
) {
    if as_json {
        let mut obj = json!({
            "input": input,
            "polynomial": poly.to_coeff_strings(),
            "degree": degree_field(poly),
            "elapsed_ms": elapsed_ms(start),
        });
        if let Some(p) = pattern {
            obj["pattern"] = json!(p);
        }
        let _ = writeln!(out, "{obj}");
    } else {
        let _ = writeln!(out, "{poly}");
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let start = Instant::now();
    let cache = ChromaticCache::new();
    match &cli.cmd {
        Cmd::Chromatic { g6 } => {
            let g = parse(g6)?;
            emit_poly(out, cli.json, g6, None, &chromatic_polynomial(&g, &cache), start);
            Ok(0)
        }
        Cmd::Count { g6, pattern_g6 } => {
            let g = parse(g6)?;
            let h = parse(pattern_g6)?;
            let p = count_poly(&g, &h, &cache)?;
            emit_poly(out, cli.json, g6, Some(pattern_g6), &p, start);
            Ok(0)
        }
        Cmd::Pairs { g6 } => {
            let g = parse(g6)?;
            emit_poly(out, cli.json, g6, None, &pairs_poly(&g, &cache), start);
            Ok(0)
        }
        Cmd::Clique { g6, r } => {
            if *r < 2 {
                return Err(usage(format!("clique size must be at least 2, got {r}")));
            }
            let g = parse(g6)?;
            emit_poly(out, cli.json, g6, None, &clique_poly(&g, *r, &cache), start);
            Ok(0)
        }
        Cmd::Product { g6, sizes } => {
            let sizes = parse_sizes(sizes)?;
            let g = parse(g6)?;
            emit_poly(out, cli.json, g6, None, &product_clique_poly(&g, &sizes, &cache), start);
            Ok(0)
        }
        Cmd::Hexagon { g6 } => {
            let g = parse(g6)?;
            emit_poly(out, cli.json, g6, None, &hexagon_poly(&g, &cache), start);
            Ok(0)
        }
        Cmd::TreeQd { g6, d } => {
            let g = parse(g6)?;
            let p = tree_hypercube_poly(&g, *d)?;
            emit_poly(out, cli.json, g6, None, &p, start);
            Ok(0)
        }
        Cmd::Gds { g6, i } => {
            let g = parse(g6)?;
            let grouped = group_entries(&gds_multiset(&g, *i)?);
            if cli.json {
                let entries: Vec<_> = grouped
                    .iter()
                    .map(|(e, count)| {
                        json!({
                            "size": e.size,
                            "internal": e.internal,
                            "external": e.external,
                            "count": count,
                        })
                    })
                    .collect();
                let obj = json!({
                    "input": g6,
                    "i": i,
                    "entries": entries,
                    "elapsed_ms": elapsed_ms(start),
                });
                let _ = writeln!(out, "{obj}");
            } else {
                for (e, count) in &grouped {
                    let _ = writeln!(
                        out,
                        "(|S|={}, int={}, ext={}) x {}",
                        e.size, e.internal, e.external, count
                    );
                }
            }
            Ok(0)
        }
        Cmd::Oracle { g6, pattern_g6, k } => {
            let g = parse(g6)?;
            let h = parse(pattern_g6)?;
            let count = oracle_count(&g, &h, *k)?;
            if cli.json {
                let obj = json!({
                    "input": g6,
                    "pattern": pattern_g6,
                    "k": k,
                    "count": count,
                    "elapsed_ms": elapsed_ms(start),
                });
                let _ = writeln!(out, "{obj}");
            } else {
                let _ = writeln!(out, "{count}");
            }
            Ok(0)
        }
        Cmd::Verify { g6, pattern_g6, kmax } => {
            let g = parse(g6)?;
            let h = parse(pattern_g6)?;
            let p = count_poly(&g, &h, &cache)?;
            for k in 0..=*kmax {
                let predicted = p.eval_int(k as i64);
                let counted = oracle_count(&g, &h, k)?;
                if predicted != BigRational::from_integer(counted.into()) {
                    if cli.json {
                        let obj = json!({
                            "input": g6,
                            "pattern": pattern_g6,
                            "kmax": kmax,
                            "agree": false,
                            "failure": {
                                "k": k,
                                "polynomial_value": predicted.to_string(),
                                "oracle_count": counted,
                            },
                            "elapsed_ms": elapsed_ms(start),
                        });
                        let _ = writeln!(out, "{obj}");
                    } else {
                        let _ = writeln!(
                            out,
                            "disagreement: graph {g6}, pattern {pattern_g6}, k = {k}: \
                             polynomial gives {predicted}, oracle gives {counted}"
                        );
                    }
                    return Ok(1);
                }
            }
            if cli.json {
                let obj = json!({
                    "input": g6,
                    "pattern": pattern_g6,
                    "kmax": kmax,
                    "agree": true,
                    "failure": null,
                    "elapsed_ms": elapsed_ms(start),
                });
                let _ = writeln!(out, "{obj}");
            } else {
                let _ = writeln!(out, "all k agree (k = 0..={kmax})");
            }
            Ok(0)
        }
        Cmd::SearchP2 { input } => {
            let file = File::open(input)
                .map_err(|err| usage(format!("cannot open {}: {err}", input.display())))?;
            let report = search_p2_collisions(BufReader::new(file))
                .map_err(|err| usage(format!("read error on {}: {err}", input.display())))?;
            if cli.json {
                let mut obj = serde_json::to_value(&report).expect("report serializes");
                obj["input"] = json!(input.display().to_string());
                obj["elapsed_ms"] = json!(elapsed_ms(start));
                let _ = writeln!(out, "{obj}");
            } else {
                render_report(out, &report);
            }
            Ok(0)
        }
    }
}

fn parse_sizes(text: &str) -> Result<Vec<u32>, Failure> {
    let mut sizes = Vec::new();
    for part in text.split(',') {
        let r: u32 = part
            .trim()
            .parse()
            .map_err(|_| usage(format!("invalid clique size {:?}", part.trim())))?;
        if r < 2 {
            return Err(usage(format!("clique sizes must be at least 2, got {r}")));
        }
        sizes.push(r);
    }
    if sizes.is_empty() {
        return Err(usage("at least one clique size required".to_string()));
    }
    Ok(sizes)
}

/// Collapse a sorted multiset of entries into (entry, multiplicity) runs.
fn group_entries(entries: &[GDSEntry]) -> Vec<(GDSEntry, usize)> {
    let mut grouped: Vec<(GDSEntry, usize)> = Vec::new();
    for e in entries {
        match grouped.last_mut() {
            Some((prev, count)) if prev == e => *count += 1,
            _ => grouped.push((e.clone(), 1)),
        }
    }
    grouped
}

// ---------------------------------------------------------------------------
// pairs-polynomial collision search

/// One input graph inside a collision group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupMember {
    /// graph6 record as it appeared in the stream.
    pub graph6: String,
    /// Chromatic polynomial, ascending `num/den` coefficient strings.
    pub chromatic: Vec<String>,
}

/// Distinct input graphs sharing one exact pairs polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionGroup {
    /// The shared pairs polynomial, ascending `num/den` coefficient strings.
    pub pairs: Vec<String>,
    /// Number of distinct chromatic polynomials among the members.
    pub chromatic_classes: usize,
    pub members: Vec<GroupMember>,
}

/// An input record that could not be parsed and was skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedRecord {
    /// 1-based line number in the input stream.
    pub line: usize,
    pub record: String,
    pub reason: String,
}

/// Outcome of a pairs-polynomial collision search over a graph6 stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollisionReport {
    /// Records parsed successfully (duplicates counted as read).
    pub graphs_read: usize,
    pub skipped: Vec<SkippedRecord>,
    /// Groups of at least two distinct records with identical pairs
    /// polynomial, sorted by that polynomial's coefficient vector.
    pub groups: Vec<CollisionGroup>,
    /// The groups whose members do not all share one chromatic polynomial.
    /// Each is a pair of graphs the pairs polynomial fails to tell apart.
    pub counterexamples: Vec<CollisionGroup>,
}

/// Read newline-delimited graph6 records and group them by exact pairs
/// polynomial; within each group, partition by chromatic polynomial. Blank
/// lines are ignored; unparseable lines are skipped and recorded. The report
/// does not depend on the order of the input records.
pub fn search_p2_collisions<R: BufRead>(input: R) -> std::io::Result<CollisionReport> {
    let cache = ChromaticCache::new();
    let mut graphs_read = 0usize;
    let mut skipped = Vec::new();
    // pairs coefficients -> chromatic coefficients -> distinct records
    let mut table: BTreeMap<Vec<String>, BTreeMap<Vec<String>, BTreeSet<String>>> =
        BTreeMap::new();
    for (index, line) in input.lines().enumerate() {
        let line = line?;
        let record = line.trim();
        if record.is_empty() {
            continue;
        }
        match parse_graph6(record) {
            Err(err) => skipped.push(SkippedRecord {
                line: index + 1,
                record: record.to_string(),
                reason: err.to_string(),
            }),
            Ok(g) => {
                graphs_read += 1;
                let pairs = pairs_poly(&g, &cache).to_coeff_strings();
                let chromatic = chromatic_polynomial(&g, &cache).to_coeff_strings();
                table
                    .entry(pairs)
                    .or_default()
                    .entry(chromatic)
                    .or_default()
                    .insert(record.to_string());
            }
        }
    }

    let mut groups = Vec::new();
    for (pairs, classes) in table {
        let member_count: usize = classes.values().map(|records| records.len()).sum();
        if member_count < 2 {
            continue;
        }
        let mut members = Vec::new();
        for (chromatic, records) in &classes {
            for graph6 in records {
                members.push(GroupMember { graph6: graph6.clone(), chromatic: chromatic.clone() });
            }
        }
        members.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        groups.push(CollisionGroup { pairs, chromatic_classes: classes.len(), members });
    }
    let counterexamples: Vec<CollisionGroup> =
        groups.iter().filter(|g| g.chromatic_classes >= 2).cloned().collect();
    Ok(CollisionReport { graphs_read, skipped, groups, counterexamples })
}

fn reparse(coeffs: &[String]) -> RationalPoly {
    RationalPoly::from_coeff_strings(coeffs).expect("report coefficients reparse")
}

fn render_report(out: &mut dyn Write, report: &CollisionReport) {
    for s in &report.skipped {
        let _ = writeln!(
            out,
            "warning: line {}: skipped unreadable record {:?}: {}",
            s.line, s.record, s.reason
        );
    }
    let _ = writeln!(out, "graphs read: {}", report.graphs_read);
    let _ = writeln!(out, "pairs-polynomial collision groups: {}", report.groups.len());
    let _ = writeln!(out, "counterexamples: {}", report.counterexamples.len());
    for group in &report.counterexamples {
        let _ = writeln!(out, "counterexample: shared pairs polynomial {}", reparse(&group.pairs));
        for m in &group.members {
            let _ = writeln!(out, "  {}  chromatic: {}", m.graph6, reparse(&m.chromatic));
        }
    }
}
