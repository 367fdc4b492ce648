mod cache;
mod input;
mod record;
mod scan;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};
use twobridge::tables::{check_table, RowCheck};
use twobridge::{
    alexander_oracle, alexander_two_bridge, certify, hfk_alternating, signature_oracle, signature_two_bridge,
    BigFraction,
};

use cache::Cache;
use record::{render, verdict_of, Format};
use scan::Range;

/// Exit statuses.
const EXIT_NON_SIMPLE: u8 = 0;
const EXIT_INCONCLUSIVE: u8 = 1;
const EXIT_INAPPLICABLE: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "twobridge", version, about = "Non-simplicity certificates for two-bridge knots")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// JSON-lines certificate cache (read, then appended to).
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify one knot given as `q/D` or as a continued fraction `[a1 ... an]`.
    Certify { knot: String },
    /// Recompute the embedded reference tables.
    Tables {
        /// Only this table (1 or 2).
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        table: Option<u8>,
    },
    /// Certify a range of knots.
    Scan {
        /// Every knot with odd determinant up to N.
        #[arg(long, value_name = "N", conflicts_with_all = ["max_m", "max_term"])]
        max_det: Option<u64>,
        /// Expansions of length up to 2M+1.
        #[arg(long, value_name = "M", requires = "max_term")]
        max_m: Option<usize>,
        /// Largest term in an expansion.
        #[arg(long, value_name = "T", requires = "max_m")]
        max_term: Option<u64>,
        /// One row per knot type.
        #[arg(long)]
        dedupe: bool,
        /// Only rows whose verdict is non-simple.
        #[arg(long)]
        non_simple_only: bool,
        /// Worker threads (default: all cores).
        #[arg(long, value_name = "K")]
        workers: Option<usize>,
    },
    /// Alexander polynomial, signature and knot Floer table of a knot.
    Invariants {
        knot: String,
        /// Cross-check against the Seifert-matrix computation up to this determinant.
        #[arg(long, value_name = "N", default_value_t = 1_000_000)]
        max_det: u64,
    },
    /// Plain-text dump of the tangle word and traversal of the pattern diagram.
    Diagram { knot: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn open_cache(path: &Option<PathBuf>) -> Result<Cache> {
    match path {
        Some(p) => Cache::open(p),
        None => Ok(Cache::disabled()),
    }
}

fn parse_knot(text: &str) -> Result<BigFraction> {
    let k = input::parse_knot(text).with_context(|| format!("cannot read {text:?} as a knot"))?;
    if let Some(cf) = &k.normalized_from {
        eprintln!("note: {cf} has even length; certifying its value {}", k.fraction);
    }
    Ok(k.fraction)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Certify { knot } => {
            let f = parse_knot(&knot)?;
            let mut cache = open_cache(&cli.cache)?;
            let cert = scan::certify_all(std::slice::from_ref(&f), &mut cache)?.remove(0);
            emit(&render(std::slice::from_ref(&cert), cli.format.unwrap_or(Format::Json))?)?;
            Ok(match verdict_of(&cert) {
                "non-simple" => EXIT_NON_SIMPLE,
                "inconclusive" => EXIT_INCONCLUSIVE,
                _ => EXIT_INAPPLICABLE,
            })
        }
        Command::Tables { table } => {
            let ids: Vec<u8> = table.map_or(vec![1, 2], |t| vec![t]);
            let mut rows = Vec::new();
            for id in ids {
                rows.extend(check_table(id)?);
            }
            emit(&render_tables(&rows, cli.format.unwrap_or(Format::Text))?)?;
            Ok(if rows.iter().all(RowCheck::pass) { 0 } else { 1 })
        }
        Command::Scan {
            max_det,
            max_m,
            max_term,
            dedupe,
            non_simple_only,
            workers,
        } => {
            let range = match (max_det, max_m, max_term) {
                (Some(n), _, _) => Range::Determinant(n),
                (None, Some(max_m), Some(max_term)) => Range::Expansions { max_m, max_term },
                _ => bail!("scan needs --max-det N or both --max-m M and --max-term T"),
            };
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(k) = workers {
                if k == 0 {
                    bail!("--workers must be at least 1");
                }
                builder = builder.num_threads(k);
            }
            let pool = builder.build()?;
            let list = scan::fractions(range);
            let mut cache = open_cache(&cli.cache)?;
            let certs = pool.install(|| scan::certify_all(&list, &mut cache))?;
            let mut certs = if dedupe { scan::dedupe(&list, certs) } else { certs };
            if non_simple_only {
                certs.retain(|c| verdict_of(c) == "non-simple");
            }
            emit(&render(&certs, cli.format.unwrap_or(Format::Json))?)?;
            Ok(0)
        }
        Command::Invariants { knot, max_det } => {
            let f = parse_knot(&knot)?;
            if !f.is_knot() {
                eprintln!("{f} is a two-component link; the invariants here are for knots");
                return Ok(EXIT_INAPPLICABLE);
            }
            emit(&invariants(&f, max_det, cli.format.unwrap_or(Format::Json))?)?;
            Ok(0)
        }
        Command::Diagram { knot } => {
            let f = parse_knot(&knot)?;
            let cert = certify(&f);
            let Some(p) = cert.pattern.as_ref() else {
                eprintln!("{f}: no pattern ({})", cert.path);
                return Ok(EXIT_INAPPLICABLE);
            };
            let d = twobridge::oracle::build(p)?;
            let mut text = d.dump();
            if !text.ends_with('\n') {
                text.push('\n');
            }
            emit(&text)?;
            Ok(0)
        }
    }
}

fn invariants(f: &BigFraction, max_det: u64, format: Format) -> Result<String> {
    let delta = alexander_two_bridge(f)?;
    let sigma = signature_two_bridge(f)?;
    let hfk = hfk_alternating(&delta, sigma)?;
    let checked = if f.determinant() <= &BigInt::from(max_det) {
        let bound = BigInt::from(max_det);
        if alexander_oracle(f, &bound)? != delta || signature_oracle(f, &bound)? != sigma {
            bail!("internal disagreement between the two invariant computations for {f}");
        }
        true
    } else {
        false
    };
    let entries: Vec<(i64, i64, BigInt)> = hfk.entries.iter().map(|(&a, e)| (a, e.maslov, e.rank.clone())).collect();
    Ok(match format {
        Format::Json => {
            let num = |x: &BigInt| Value::Number(x.to_string().parse().expect("integer literal"));
            let v = json!({
                "input": f.to_string(),
                "determinant": num(f.determinant()),
                "alexander": delta.to_string(),
                "signature": sigma,
                "hfk": entries.iter().map(|(a, m, r)| json!({"alexander": a, "maslov": m, "rank": num(r)})).collect::<Vec<_>>(),
                "total_rank": num(&hfk.total_rank()),
                "cross_checked": checked,
            });
            serde_json::to_string(&v)? + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["alexander", "maslov", "rank"])?;
            for (a, m, r) in &entries {
                w.write_record([a.to_string(), m.to_string(), r.to_string()])?;
            }
            String::from_utf8(w.into_inner().context("flushing csv")?)?
        }
        Format::Text => {
            let mut s = format!("{f}\nalexander {delta}\nsignature {sigma}\n");
            for (a, m, r) in &entries {
                s.push_str(&format!("HFK({a}, {m}) rank {r}\n"));
            }
            s.push_str(&format!("total rank {}\n", hfk.total_rank()));
            if !checked {
                s.push_str("cross-check skipped (determinant above --max-det)\n");
            }
            s
        }
    })
}

fn render_tables(rows: &[RowCheck], format: Format) -> Result<String> {
    let opt = |x: &Option<BigInt>| x.as_ref().map_or(String::new(), |v| v.to_string());
    Ok(match format {
        Format::Text => {
            let mut s: String = rows.iter().map(|r| r.summary() + "\n").collect();
            let passed = rows.iter().filter(|r| r.pass()).count();
            s.push_str(&format!("{passed}/{} rows pass\n", rows.len()));
            s
        }
        Format::Json => rows
            .iter()
            .map(|r| {
                let c = &r.certificate;
                let v = json!({
                    "table": r.table,
                    "row": r.index,
                    "label": r.row.label,
                    "cf": r.row.cf,
                    "computed": r.computed.to_string(),
                    "label_relation": r.label_relation.to_string(),
                    "grading": opt(&c.alexander_grading),
                    "rank": opt(&c.model_rank),
                    "bound": opt(&c.bound_n),
                    "delta_ok": r.delta_ok,
                    "printed_delta_ok": r.printed_delta_ok,
                    "grading_ok": r.grading_ok,
                    "rank_ok": r.rank_ok,
                    "pass": r.pass(),
                    "notes": r.notes,
                });
                serde_json::to_string(&v).map(|s| s + "\n")
            })
            .collect::<Result<String, _>>()?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["table", "row", "label", "computed", "relation", "grading", "rank", "bound", "pass"])?;
            for r in rows {
                let c = &r.certificate;
                w.write_record([
                    r.table.to_string(),
                    r.index.to_string(),
                    r.row.label.clone(),
                    r.computed.to_string(),
                    r.label_relation.to_string(),
                    opt(&c.alexander_grading),
                    opt(&c.model_rank),
                    opt(&c.bound_n),
                    r.pass().to_string(),
                ])?;
            }
            String::from_utf8(w.into_inner().context("flushing csv")?)?
        }
    })
}
