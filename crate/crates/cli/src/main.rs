//! `ordergraph`: build groups, emit their order divisor graphs, classify
//! them and run the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 resource cap exceeded.

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use ordergraph::export::{self, Classification, GraphDocument};
use ordergraph::graph::{Diameter, DEFAULT_COLORING_CAP};
use ordergraph::group::DEFAULT_MAX_ORDER;
use ordergraph::odgraph;
use ordergraph::theorems::{Bounds, TheoremId, Verifier};
use ordergraph::{Error, FiniteGroup, Graph, GroupSpec};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ordergraph", version, about = "Order divisor graphs of finite groups")]
struct Cli {
    /// Largest group order any command may build.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the order, exponent and order classes of a group.
    Group {
        /// Group spec: Z:n, D:n, U:n, S:n, A:n, EA:p^k, or products like Z:3xZ:5.
        spec: String,
    },
    /// Emit the order divisor graph of a group.
    Od {
        spec: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify the order divisor graph of a group.
    Classify {
        spec: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_COLORING_CAP)]
        coloring_cap: usize,
    },
    /// Run theorem checks.
    Verify {
        /// Theorem ids to run (repeatable).
        #[arg(long = "theorem", required_unless_present = "all", conflicts_with = "all")]
        theorems: Vec<TheoremId>,
        #[arg(long)]
        all: bool,
        /// Upper end of the Z_n and U(Z_n) sweeps.
        #[arg(long)]
        max_n: Option<usize>,
        /// Upper end of the D_n sweep.
        #[arg(long)]
        max_dihedral: Option<usize>,
        /// Largest prime used in prime pairs and triples.
        #[arg(long)]
        max_prime: Option<u64>,
        #[arg(long)]
        json: bool,
        /// Include elapsed times (output is then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Emit the divisor comparability graph of n, or its extended graph.
    Lattice {
        n: u64,
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Failure of a command, carrying its exit code.
enum Failure {
    Verification,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Group { spec } => {
            let g = build(spec, cli.max_order)?;
            print!("{}", group_text(&g));
        }
        Command::Od { spec, format } => {
            let g = build(spec, cli.max_order)?;
            let od = odgraph::od_graph(&g);
            print!("{}", render(&od.graph, g.spec(), true, *format));
        }
        Command::Classify { spec, json, coloring_cap } => {
            let g = build(spec, cli.max_order)?;
            print!("{}", classify(&g, *coloring_cap, *json));
        }
        Command::Verify { theorems, all, max_n, max_dihedral, max_prime, json, timings } => {
            let mut bounds = Bounds { max_order: cli.max_order, ..Bounds::default() };
            if let Some(n) = max_n {
                bounds.sweep_max = *n;
            }
            if let Some(n) = max_dihedral {
                bounds.dihedral_sweep_max = *n;
            }
            bounds.max_prime = *max_prime;
            let ids: Vec<TheoremId> = if *all { TheoremId::ALL.to_vec() } else { theorems.clone() };
            let verifier = Verifier::new(bounds)?;
            let mut reports = ids.iter().map(|&id| verifier.verify(id)).collect::<Result<Vec<_>, _>>()?;
            if !timings {
                reports.iter_mut().for_each(|r| r.elapsed = Duration::ZERO);
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            if *json {
                let doc = json!({ "passed": passed, "total": reports.len(), "reports": reports });
                println!("{}", serde_json::to_string_pretty(&doc).expect("reports serialize"));
            } else {
                for r in &reports {
                    print!("{}", if *timings { r.to_timed_text() } else { r.to_text() });
                }
                println!("{passed}/{} passed", reports.len());
            }
            if passed != reports.len() {
                return Err(Failure::Verification);
            }
        }
        Command::Lattice { n, extended, format } => {
            let graph = if *extended { odgraph::extended_graph(*n)? } else { odgraph::comparability_graph(*n)? };
            let title = if *extended { format!("E(G_{n})") } else { format!("G_{n}") };
            print!("{}", render(&graph, &title, false, *format));
        }
    }
    Ok(())
}

fn build(spec: &str, max_order: usize) -> Result<FiniteGroup, Error> {
    spec.parse::<GroupSpec>()?.build(max_order)
}

fn render(graph: &Graph, title: &str, is_group: bool, format: Format) -> String {
    match format {
        Format::Dot => export::to_dot(graph, title),
        Format::Json => GraphDocument::from_graph(graph, is_group.then_some(title)).to_json(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn group_text(g: &FiniteGroup) -> String {
    let classes: Vec<String> = g.order_partition().sizes().iter().map(|(d, s)| format!("{d}:{s}")).collect();
    format!(
        "group: {}\norder: {}\nexponent: {}\nabelian: {}\ncyclic: {}\nelementary abelian: {}\norder classes: {}\n",
        g.spec(),
        g.order(),
        g.exponent(),
        yes_no(g.is_abelian()),
        yes_no(g.is_cyclic_algebraic()),
        yes_no(g.is_elementary_abelian()),
        classes.join(", "),
    )
}

fn classify(g: &FiniteGroup, coloring_cap: usize, as_json: bool) -> String {
    let od = odgraph::od_graph(g).graph;
    let c = Classification::of(&od, coloring_cap);
    let star = od.is_star();
    let diameter = match od.diameter() {
        Ok(Diameter::Finite(d)) => Some(d),
        _ => None,
    };
    let cyc = odgraph::cyclicity_of_graph(g.order() as u64, &od).ok();
    if as_json {
        let doc = json!({
            "group_spec": g.spec(),
            "vertices": od.vertex_count(),
            "edges": od.edge_count(),
            "star": star.is_some(),
            "star_center": star,
            "kind": c.kind,
            "part_sizes": c.part_sizes,
            "chromatic_number": c.chromatic_number,
            "diameter": diameter,
            "cyclic": g.is_cyclic_algebraic(),
            "extended_matches": cyc.map(|c| c.extended_matches),
            "reduced_matches": cyc.map(|c| c.reduced_matches),
        });
        return serde_json::to_string_pretty(&doc).expect("json") + "\n";
    }
    let opt = |x: Option<String>| x.unwrap_or_else(|| "unknown".into());
    let star_text = match star {
        Some(center) => format!("yes (S_{}, center {})", od.vertex_count(), g.label(center)),
        None => "no".into(),
    };
    let mut out = format!("group: {}\nvertices: {}\nedges: {}\n", g.spec(), od.vertex_count(), od.edge_count());
    out += &format!("star: {star_text}\nkind: {}\n", c.kind);
    out += &format!("part sizes: {}\n", opt(c.part_sizes.map(|p| format!("{p:?}"))));
    out += &format!("chromatic number: {}\n", opt(c.chromatic_number.map(|x| x.to_string())));
    out += &format!("diameter: {}\n", opt(diameter.map(|x| x.to_string())));
    out += &format!("cyclic: {}\n", yes_no(g.is_cyclic_algebraic()));
    out += &format!("E(G_n) ~ OD(G): {}\n", opt(cyc.map(|c| yes_no(c.extended_matches).into())));
    out += &format!("G_n ~ R(OD(G)): {}\n", opt(cyc.map(|c| yes_no(c.reduced_matches).into())));
    out
}
