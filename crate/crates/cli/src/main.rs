use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use symcover::resolutions::{
    betti_table_with_cap, depth_of_quotient, graph_is_cohen_macaulay, projective_dimension, regularity,
};
use symcover::theorems::{
    verify_depth_monotone, verify_duality_suite, verify_gk_structure, verify_linbi, verify_linq_pol, verify_main,
    verify_reg_bound, verify_sympol, Limits, StatementId, Status, VerificationReport,
};
use symcover::{cover_ideal, Error, FieldSpec, Graph, MonomialIdeal, Result, DEFAULT_BUDGET};
use symcover_cli::sweep::{EXIT_INPUT, EXIT_OK, EXIT_RESOURCE, EXIT_VIOLATION};
use symcover_cli::{run_sweep, Family, SweepConfig};

/// Exact tools for cover ideals, symbolic powers and their Betti numbers.
#[derive(Parser)]
#[command(name = "symcover", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph invariants and the G_k construction.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Cover ideals, symbolic powers, polarization and Betti tables.
    #[command(subcommand)]
    Ideal(IdealCommand),
    /// Check one statement on one instance.
    Verify {
        statement: String,
        /// Graph file, or an ideal file for LINQ_POL.
        file: PathBuf,
        /// Power, or the largest power for DEPTH_MONO and REG_*.
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value = "0")]
        field: String,
    },
    /// Check statements over a whole graph family.
    Sweep {
        #[arg(long)]
        family: String,
        /// Defaults to 6 when kmax is at least 3 and to 7 otherwise.
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        kmax: u32,
        /// Comma-separated statement ids, or `all`.
        #[arg(long, default_value = "all")]
        statements: String,
        #[arg(long, default_value = "0")]
        field: String,
        /// Also write the aggregate report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    Info {
        file: PathBuf,
    },
    Gk {
        file: PathBuf,
        #[arg(long)]
        k: u32,
        /// Write G_k in the graph text format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum IdealCommand {
    Cover {
        file: PathBuf,
    },
    SymbolicPower {
        file: PathBuf,
        #[arg(long)]
        k: u32,
    },
    Polarize {
        file: PathBuf,
    },
    Betti {
        file: PathBuf,
        #[arg(long, default_value = "0")]
        field: String,
    },
}

static CANCEL: AtomicBool = AtomicBool::new(false);

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse_text(&read(path)?)
}

fn read_ideal(path: &Path) -> Result<MonomialIdeal> {
    MonomialIdeal::parse_text(&read(path)?)
}

fn limits() -> Result<Limits> {
    let search_budget = match std::env::var("SYMCOVER_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("SYMCOVER_BUDGET must be a non-negative integer, got `{s}`")))?,
        Err(_) => DEFAULT_BUDGET,
    };
    Ok(Limits {
        search_budget,
        ..Limits::default()
    })
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "vertices": g.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "edges": g.edges().map(|(u, v)| [u.to_string(), v.to_string()]).collect::<Vec<_>>(),
    })
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!({
        "ambient": i.ambient().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "generators": i.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

fn graph_info(g: &Graph) -> Result<Value> {
    let canonical = match g.canonical_form() {
        Ok(f) => json!(f),
        Err(Error::Resource(_)) => Value::Null,
        Err(e) => return Err(e),
    };
    let labeling = if g.isolated_vertices().is_empty() && g.is_very_well_covered() {
        json!(g.find_vwc_labeling(false)?)
    } else {
        Value::Null
    };
    Ok(json!({
        "graph": graph_json(g),
        "num_vertices": g.num_vertices(),
        "num_edges": g.num_edges(),
        "connected": g.is_connected(),
        "bipartite": g.is_bipartite(),
        "unmixed": g.is_unmixed(),
        "very_well_covered": g.is_very_well_covered(),
        "cohen_macaulay": graph_is_cohen_macaulay(g, FieldSpec::RATIONALS)?,
        "induced_matching_number": g.induced_matching_number(),
        "cover_number": g.cover_number(),
        "minimal_vertex_covers": g
            .minimal_vertex_covers()
            .iter()
            .map(|c| c.iter().map(|v| v.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "canonical_form": canonical,
        "vwc_labeling": labeling,
    }))
}

fn betti_json(i: &MonomialIdeal, field: FieldSpec, cap: usize) -> Result<Value> {
    let t = betti_table_with_cap(i, field, cap)?;
    let q = t.quotient();
    Ok(json!({
        "ideal": ideal_json(i),
        "table": t,
        "quotient": q,
        "regularity_quotient": regularity(&q)?,
        "projective_dimension_quotient": projective_dimension(&q)?,
        "depth_quotient": depth_of_quotient(&q)?,
    }))
}

fn verify(statement: StatementId, file: &Path, k: u32, field: FieldSpec) -> Result<Vec<VerificationReport>> {
    let l = limits()?;
    if statement == StatementId::LinqPol {
        return Ok(vec![verify_linq_pol(&read_ideal(file)?, &l)?]);
    }
    let g = read_graph(file)?;
    use StatementId::*;
    let all = match statement {
        Sympol => vec![verify_sympol(&g, k)?],
        GkVwc | GkCm => verify_gk_structure(&g, k, field)?,
        MainLinres | MainLinquot => verify_main(&g, k, field, &l)?,
        LinbiFwd | LinbiBwd => verify_linbi(&g, k, field, &l)?,
        DepthMono => vec![verify_depth_monotone(&g, k, field, &l)?],
        RegUpper | RegLower => verify_reg_bound(&g, k, field, &l)?,
        TeraiDual | EagonReiner | RestrictLemma | ColonPower => verify_duality_suite(&g, field, &l)?,
        LinqPol => unreachable!(),
    };
    Ok(all.into_iter().filter(|r| r.statement == statement).collect())
}

fn parse_statements(s: &str) -> Result<Vec<StatementId>> {
    if s.trim() == "all" {
        return Ok(StatementId::ALL.to_vec());
    }
    let mut out: Vec<StatementId> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn print(v: &Value) {
    // a closed pipe is not an error for a filter-style tool
    let _ = writeln!(
        io::stdout().lock(),
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    );
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Graph(GraphCommand::Info { file }) => print(&graph_info(&read_graph(&file)?)?),
        Command::Graph(GraphCommand::Gk { file, k, out }) => {
            let gk = read_graph(&file)?.build_gk(k)?;
            if let Some(path) = &out {
                write(path, &gk.to_text())?;
            }
            print(&json!({ "k": k, "graph": graph_json(&gk), "text": gk.to_text() }));
        }
        Command::Ideal(IdealCommand::Cover { file }) => {
            let j = cover_ideal(&read_graph(&file)?);
            print(&json!({ "ideal": ideal_json(&j), "text": j.to_text() }));
        }
        Command::Ideal(IdealCommand::SymbolicPower { file, k }) => {
            let p = cover_ideal(&read_graph(&file)?).symbolic_power(k)?;
            print(&json!({ "k": k, "ideal": ideal_json(&p), "text": p.to_text() }));
        }
        Command::Ideal(IdealCommand::Polarize { file }) => {
            let (pol, map) = read_ideal(&file)?.polarize()?;
            let map: serde_json::Map<String, Value> = map
                .iter()
                .map(|(v, block)| {
                    (
                        v.to_string(),
                        json!(block.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
                    )
                })
                .collect();
            print(&json!({ "ideal": ideal_json(&pol), "text": pol.to_text(), "blocks": map }));
        }
        Command::Ideal(IdealCommand::Betti { file, field }) => {
            let field: FieldSpec = field.parse()?;
            print(&betti_json(&read_ideal(&file)?, field, limits()?.ambient_cap)?);
        }
        Command::Verify {
            statement,
            file,
            k,
            field,
        } => {
            let statement: StatementId = statement.parse()?;
            let reports = verify(statement, &file, k, field.parse()?)?;
            print(&serde_json::to_value(&reports).expect("reports serialize"));
            for r in &reports {
                eprintln!("{} {}", r.statement, json!(r.status).as_str().unwrap_or_default());
            }
            return Ok(status_code(reports.iter().map(|r| r.status)));
        }
        Command::Sweep {
            family,
            max_vertices,
            kmax,
            statements,
            field,
            out,
        } => {
            let config = SweepConfig {
                family: family.parse::<Family>()?,
                max_vertices: max_vertices.unwrap_or(if kmax >= 3 { 6 } else { 7 }),
                kmax,
                field: field.parse()?,
                statements: parse_statements(&statements)?,
                limits: limits()?,
            };
            config.validate()?;
            // a second interrupt falls back to the default behavior
            let _ = ctrlc::set_handler(|| {
                if CANCEL.swap(true, Ordering::SeqCst) {
                    std::process::exit(130);
                }
            });
            let report = run_sweep(&config, &CANCEL)?;
            let json = report.to_json();
            if let Some(path) = &out {
                write(
                    path,
                    &(serde_json::to_string_pretty(&json).expect("JSON values serialize") + "\n"),
                )?;
            }
            print(&json);
            eprintln!(
                "{} graphs, {} reports, {} errors{}: {:?}",
                report.graphs,
                report.reports.len(),
                report.errors.len(),
                if report.truncated { " (truncated)" } else { "" },
                report.summary
            );
            for e in &report.errors {
                eprintln!("error on graph {}: {}", e.graph_index, e.message);
            }
            return Ok(report.exit_code());
        }
    }
    Ok(EXIT_OK)
}

fn status_code(statuses: impl Iterator<Item = Status>) -> i32 {
    let all: Vec<Status> = statuses.collect();
    if all.contains(&Status::Violated) {
        EXIT_VIOLATION
    } else if all.contains(&Status::ResourceExhausted) {
        EXIT_RESOURCE
    } else {
        EXIT_OK
    }
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("symcover: {e}");
            match e {
                Error::Input(_) | Error::Parse { .. } => EXIT_INPUT,
                Error::Resource(_) => EXIT_RESOURCE,
                Error::Internal(_) => EXIT_VIOLATION,
            }
        }
    };
    ExitCode::from(code as u8)
}
