use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use taitmorse::checks::{self, CheckKind, Column, Limits};
use taitmorse::complexes::{
    self, acyclic_facet_complex, face_cap_from_env, homology, matching_complex, morse_complex, pure_morse_from_trees,
    pure_part, HomologyError, SimplicialComplex,
};
use taitmorse::moves::{build_move_graph, MoveKind, Population};
use taitmorse::report::{count_report, info_report};
use taitmorse::states::{enumerate_matchings, find_nonextendable, Filter, Matching};
use taitmorse::{corpus, parse_pd, Diagram, DiagramError};

#[derive(Parser)]
#[command(name = "taitmorse", version, about = "Discrete Morse functions and Kauffman states on knot projections")]
struct Cli {
    /// Aligned text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for commands that process several diagrams.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Exchange the black and white colour classes.
    #[arg(long, global = true)]
    swap_colours: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// A PD-code file, or a corpus name such as `3_1`, `trefoil`, `fig8`, `D_7`.
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and normalize a PD code.
    Parse(Input),
    /// Faces, colour classes, reducedness and tree counts.
    Info(Input),
    /// Enumerate matchings of the Tait graph.
    States {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "perfect-dmf")]
        filter: FilterArg,
        /// Marked arc label for `--filter kauffman`.
        #[arg(long, default_value_t = 1)]
        mark: usize,
        /// Print only the number of matchings.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Build a move graph.
    Moves {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "perfect-admissible")]
        population: PopulationArg,
        /// Marked arc label for the Kauffman population.
        #[arg(long, default_value_t = 1)]
        mark: usize,
        /// Comma-separated move kinds; defaults to clock for Kauffman
        /// states and to all three otherwise.
        #[arg(long, value_enum, value_delimiter = ',')]
        kinds: Vec<KindArg>,
        /// Fail with exit code 4 when a connectivity theorem is violated.
        #[arg(long)]
        connectivity: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Count perfect and all discrete Morse functions.
    Count {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        perfect: bool,
        #[arg(long)]
        all: bool,
        /// Cross-check against exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Build a complex and compute its reduced homology.
    Complex {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "matching")]
        kind: ComplexArg,
        /// Keep only the top-dimensional facets.
        #[arg(long)]
        pure: bool,
        #[arg(long)]
        homology: bool,
        /// Include the facet list.
        #[arg(long)]
        facets: bool,
        /// Homology as CSV rows `degree,betti,torsion`.
        #[arg(long)]
        csv: bool,
    },
    /// Homology of the four complexes for every corpus knot, next to the
    /// reference values.
    Table1 {
        #[arg(long, default_value_t = 7)]
        max_crossings: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Criterion number (1–14); repeatable. All when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=14))]
        criterion: Vec<u8>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterArg {
    All,
    MaximalPks,
    PerfectAdmissible,
    Dmf,
    PerfectDmf,
    Kauffman,
    MaximalMatching,
    MaximalDmf,
    Nonextendable,
}

#[derive(Clone, Copy, ValueEnum)]
enum PopulationArg {
    Kauffman,
    PerfectDmfs,
    PerfectAdmissible,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum KindArg {
    Clock,
    ClickLoop,
    ClickPath,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexArg {
    Matching,
    Morse,
    AcyclicFacet,
    Trees,
}

enum Failure {
    Usage(String),
    Resource(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Invariant(_) => 4,
        }
    }
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

impl From<HomologyError> for Failure {
    fn from(e: HomologyError) -> Self {
        Failure::Resource(format!("{e}; raise {}", complexes::FACE_CAP_VAR))
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    pretty: bool,
    swap: bool,
}

impl Ctx {
    fn emit(&self, value: &impl Serialize, text: impl FnOnce() -> String) {
        if self.pretty {
            print!("{}", text());
        } else {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
        }
    }

    fn load(&self, input: &Input) -> Result<(String, Diagram), Failure> {
        let (name, d) = load_diagram(&input.input)?;
        Ok((name, if self.swap { d.with_swapped_colours() } else { d }))
    }
}

fn load_diagram(input: &str) -> Result<(String, Diagram), Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let name = path.file_stem().map_or_else(|| input.to_string(), |s| s.to_string_lossy().into_owned());
        let d = Diagram::build(&parse_pd(&text)?)?;
        return Ok((name, d));
    }
    match corpus::lookup(input) {
        Some(pd) => Ok((input.trim_end_matches(".pd").to_string(), Diagram::build(&pd)?)),
        None => Err(Failure::Usage(format!("{input}: neither a readable file nor a corpus name"))),
    }
}

fn arc_regions(d: &Diagram, label: usize) -> Result<(usize, usize), Failure> {
    if label == 0 || label > d.num_arcs() {
        return Err(Failure::Usage(format!("arc label {label} outside 1..={}", d.num_arcs())));
    }
    Ok(d.marked_arc_regions(label - 1))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx { pretty: cli.pretty, swap: cli.swap_colours };
    match run(&ctx, cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Resource(m) | Failure::Invariant(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}

fn run(ctx: &Ctx, command: Command) -> Outcome {
    match command {
        Command::Parse(input) => parse(ctx, &input),
        Command::Info(input) => {
            let (name, d) = ctx.load(&input)?;
            let r = info_report(&name, &d);
            ctx.emit(&r, || {
                format!(
                    "diagram      {}\ncrossings    {}\nfaces        {} ({} black, {} white)\nreduced      {}\ntrees        {}\nconnectivity {}\n",
                    r.diagram, r.crossings, r.faces, r.black_regions, r.white_regions, r.reduced, r.spanning_trees.value, r.connectivity.bound
                )
            });
            if !r.spanning_trees.agrees() || !r.euler_ok {
                return Err(Failure::Invariant(format!("{name}: tree counts of dual graphs differ or Euler check failed")));
            }
            Ok(())
        }
        Command::States { input, filter, mark, count, limit } => states(ctx, &input, filter, mark, count, limit),
        Command::Moves { input, population, mark, kinds, connectivity, dot, json } => {
            moves(ctx, &input, population, mark, kinds, connectivity, dot, json)
        }
        Command::Count { input, perfect, all, oracle } => {
            let (name, d) = ctx.load(&input)?;
            let r = count_report(&name, &d, oracle);
            let (show_p, show_a) = if perfect || all { (perfect, all) } else { (true, true) };
            let mut v = serde_json::to_value(&r).expect("count report serializes");
            let obj = v.as_object_mut().unwrap();
            if !show_p {
                obj.remove("perfect");
            }
            if !show_a {
                obj.remove("all");
            }
            ctx.emit(&v, || {
                let mut s = String::new();
                if show_p {
                    s += &format!("perfect {}\n", r.perfect.value);
                }
                if show_a {
                    s += &format!("all     {}\n", r.all.value);
                }
                if let Some(ok) = r.oracle_agreement {
                    s += &format!("oracle  {}\n", if ok { "agrees" } else { "DISAGREES" });
                }
                s
            });
            if r.oracle_agreement == Some(false) {
                return Err(Failure::Invariant(format!("{name}: counting formulas disagree with enumeration: {v}")));
            }
            Ok(())
        }
        Command::Complex { input, kind, pure, homology: with_homology, facets, csv } => {
            complex(ctx, &input, kind, pure, with_homology, facets, csv)
        }
        Command::Table1 { max_crossings, csv } => table1(ctx, max_crossings, csv),
        Command::Selftest { criterion } => selftest(ctx, criterion),
    }
}

fn parse(ctx: &Ctx, input: &Input) -> Outcome {
    let (name, d) = load_diagram(&input.input)?;
    let check = corpus::check_entry(&name, d.pd())?;
    let v = json!({
        "diagram": name,
        "pd": d.pd().to_string(),
        "crossings": check.crossings,
        "faces": check.faces,
        "euler_ok": check.euler_ok,
        "reduced": check.reduced,
    });
    ctx.emit(&v, || format!("{}\n", d.pd()));
    Ok(())
}

fn states(ctx: &Ctx, input: &Input, filter: FilterArg, mark: usize, count_only: bool, limit: Option<usize>) -> Outcome {
    let (name, d) = ctx.load(input)?;
    let t = d.tait();
    let f = match filter {
        FilterArg::All => Some(Filter::All),
        FilterArg::MaximalPks => Some(Filter::MaximalPks),
        FilterArg::PerfectAdmissible => Some(Filter::PerfectAdmissible),
        FilterArg::Dmf => Some(Filter::Dmf),
        FilterArg::PerfectDmf => Some(Filter::PerfectDmf),
        FilterArg::Kauffman => {
            let (black, white) = arc_regions(&d, mark)?;
            Some(Filter::KauffmanStates { black, white })
        }
        FilterArg::MaximalMatching => Some(Filter::MaximalMatching),
        FilterArg::MaximalDmf => Some(Filter::MaximalDmf),
        FilterArg::Nonextendable => None,
    };
    let mut ms: Vec<Matching> = match f {
        Some(f) => enumerate_matchings(&t, f),
        None => find_nonextendable(&t, limit),
    };
    let total = ms.len();
    if let Some(l) = limit {
        ms.truncate(l);
    }
    let filter_name = filter.to_possible_value().unwrap().get_name().to_string();
    if count_only {
        let v = json!({ "diagram": name, "filter": filter_name, "count": total });
        ctx.emit(&v, || format!("{total}\n"));
    } else {
        let v = json!({ "diagram": name, "filter": filter_name, "count": total, "matchings": ms });
        ctx.emit(&v, || ms.iter().map(|m| format!("{:?}\n", m.edges())).collect());
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn moves(
    ctx: &Ctx,
    input: &Input,
    population: PopulationArg,
    mark: usize,
    kinds: Vec<KindArg>,
    connectivity: bool,
    dot: Option<PathBuf>,
    json_out: Option<PathBuf>,
) -> Outcome {
    let (name, d) = ctx.load(input)?;
    let t = d.tait();
    let pop = match population {
        PopulationArg::Kauffman => {
            let (black, white) = arc_regions(&d, mark)?;
            Population::KauffmanStates { black, white }
        }
        PopulationArg::PerfectDmfs => Population::PerfectDmfs,
        PopulationArg::PerfectAdmissible => Population::PerfectAdmissible,
    };
    let kinds: Vec<MoveKind> = if kinds.is_empty() {
        match population {
            PopulationArg::Kauffman => vec![MoveKind::Clock],
            _ => vec![MoveKind::Clock, MoveKind::ClickLoop, MoveKind::ClickPath],
        }
    } else {
        kinds
            .iter()
            .map(|k| match k {
                KindArg::Clock => MoveKind::Clock,
                KindArg::ClickLoop => MoveKind::ClickLoop,
                KindArg::ClickPath => MoveKind::ClickPath,
            })
            .collect()
    };
    let g = build_move_graph(&t, pop, &kinds);
    if let Some(p) = dot {
        fs::write(&p, g.to_dot(&name)).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    if let Some(p) = json_out {
        let text = serde_json::to_string_pretty(&g.to_json()).expect("move graph serializes");
        fs::write(&p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    let components = g.num_components();
    let summary = json!({
        "diagram": name,
        "population": g.population,
        "kinds": g.kinds,
        "nodes": g.num_nodes(),
        "edges": g.num_edges(),
        "components": components,
        "connected": components <= 1,
        "path_graph": g.is_path_graph(),
        "escaped": g.escaped,
    });
    ctx.emit(&summary, || {
        format!(
            "nodes      {}\nedges      {}\ncomponents {}\nconnected  {}\npath graph {}\n",
            g.num_nodes(),
            g.num_edges(),
            components,
            components <= 1,
            g.is_path_graph()
        )
    });
    if connectivity && components > 1 {
        let all_kinds = [MoveKind::Clock, MoveKind::ClickLoop, MoveKind::ClickPath].iter().all(|k| kinds.contains(k));
        let predicted = match population {
            PopulationArg::Kauffman => kinds.contains(&MoveKind::Clock),
            PopulationArg::PerfectAdmissible => all_kinds && d.is_reduced(),
            PopulationArg::PerfectDmfs => false,
        };
        if predicted {
            let sizes = component_sizes(&g);
            return Err(Failure::Invariant(format!("{name}: move graph has {components} components, sizes {sizes:?}")));
        }
    }
    Ok(())
}

fn component_sizes(g: &taitmorse::moves::MoveGraph) -> Vec<usize> {
    let mut seen = vec![false; g.num_nodes()];
    let mut sizes = Vec::new();
    for s in 0..g.num_nodes() {
        if seen[s] {
            continue;
        }
        let size = (0..g.num_nodes()).filter(|&v| g.shortest_path(s, v).is_some()).inspect(|&v| seen[v] = true).count();
        sizes.push(size);
    }
    sizes
}

fn complex(ctx: &Ctx, input: &Input, kind: ComplexArg, pure: bool, with_homology: bool, facets: bool, csv: bool) -> Outcome {
    let (name, d) = ctx.load(input)?;
    let t = d.tait();
    let mut c: SimplicialComplex = match kind {
        ComplexArg::Matching => matching_complex(&t),
        ComplexArg::Morse => morse_complex(&t),
        ComplexArg::AcyclicFacet => acyclic_facet_complex(&t),
        ComplexArg::Trees => pure_morse_from_trees(&d),
    };
    if pure {
        c = pure_part(&c);
    }
    let h = if with_homology || csv { Some(homology(&c, true)?) } else { None };
    if csv {
        let h = h.as_ref().unwrap();
        println!("degree,betti,torsion");
        for x in &h.degrees {
            let tors: Vec<String> = x.torsion.iter().map(|t| t.to_string()).collect();
            println!("{},{},{}", x.degree, x.betti, tors.join(" "));
        }
        return Ok(());
    }
    let kind_name = kind.to_possible_value().unwrap().get_name().to_string();
    let mut v = json!({
        "diagram": name,
        "kind": kind_name,
        "pure": pure,
        "dimension": c.dimension(),
        "facet_count": c.num_facets(),
    });
    if let Some(h) = &h {
        v["homology"] = serde_json::to_value(h).unwrap();
        v["ranks"] = json!(h.ranks());
    }
    if facets {
        v["facets"] = json!(c.facets());
    }
    ctx.emit(&v, || {
        let mut s = format!("dimension {}\nfacets    {}\n", c.dimension(), c.num_facets());
        if let Some(h) = &h {
            s += &format!("f-vector  {:?}\n", h.f_vector);
            for x in &h.degrees {
                if x.betti > 0 || !x.torsion.is_empty() {
                    s += &format!("H~{}       Z^{}", x.degree, x.betti);
                    for tor in &x.torsion {
                        s += &format!(" + Z/{tor}");
                    }
                    s += "\n";
                }
            }
        }
        s
    });
    Ok(())
}

fn fmt_ranks(r: &Option<checks::Ranks>) -> String {
    match r {
        None => "skipped".into(),
        Some(r) if r.is_empty() => "0".into(),
        Some(r) => r.iter().map(|(d, n)| format!("{d}:{n}")).collect::<Vec<_>>().join(" "),
    }
}

fn table1(ctx: &Ctx, max_crossings: usize, csv: bool) -> Outcome {
    let cap = face_cap_from_env();
    let knots: Vec<(&str, Diagram)> = corpus::knots_up_to(max_crossings).collect();
    let rows: Vec<_> = knots
        .par_iter()
        .map(|(name, d)| {
            let d = if ctx.swap { d.with_swapped_colours() } else { d.clone() };
            let row = checks::table1_row(name, &d, cap);
            let (components, classes) = checks::clock_click_loop_components(&d.tait());
            (row, components, classes)
        })
        .collect();
    if csv {
        println!("knot,column,computed,reference,match");
        for (row, _, _) in &rows {
            for cell in &row.cells {
                let m = cell.matches().map_or("skipped".to_string(), |b| b.to_string());
                println!("{},{},{},{},{}", row.knot, cell.column.label(), fmt_ranks(&cell.computed), fmt_ranks(&cell.expected), m);
            }
        }
        return Ok(());
    }
    let v: Vec<_> = rows
        .iter()
        .map(|(row, components, classes)| {
            json!({
                "knot": row.knot,
                "cells": row.cells,
                "clock_click_loop": { "components": components, "critical_classes": classes },
            })
        })
        .collect();
    ctx.emit(&v, || {
        let mut s = format!("{:<5}", "knot");
        for c in Column::ALL {
            s += &format!(" {:<24}", c.label());
        }
        s += "\n";
        for (row, _, _) in &rows {
            s += &format!("{:<5}", row.knot);
            for cell in &row.cells {
                let mark = match cell.matches() {
                    Some(true) => "",
                    Some(false) => " ≠",
                    None => "",
                };
                s += &format!(" {:<24}", format!("{}{mark}", fmt_ranks(&cell.computed)));
            }
            s += "\n";
        }
        s
    });
    Ok(())
}

fn selftest(ctx: &Ctx, criteria: Vec<u8>) -> Outcome {
    let limits = Limits::default();
    let ids: Vec<usize> = if criteria.is_empty() { (1..=14).collect() } else { criteria.iter().map(|&c| c as usize).collect() };
    let outcomes: Vec<_> = ids.par_iter().map(|&id| checks::run_criterion(id, &limits)).collect();
    ctx.emit(&outcomes, || outcomes.iter().map(|o| o.line() + "\n").collect());
    let broken: Vec<_> = outcomes.iter().filter(|o| !o.passed && o.kind == CheckKind::Theorem).collect();
    if broken.is_empty() {
        Ok(())
    } else {
        let dump: Vec<String> = broken.iter().map(|o| format!("criterion {}: {}", o.id, o.detail)).collect();
        Err(Failure::Invariant(dump.join("\n")))
    }
}
