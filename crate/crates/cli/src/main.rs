use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use raag::io::{
    build_report, compare_graphs, parse_character, parse_graph, GraphFormat, ReportOptions,
};
use raag::rescaling::{
    cubical_poincare_polynomial, formal_and_coformal, homotopy_ranks, loop_poincare_series,
    FORMALITY_NOTE,
};
use raag::resonance::{
    lattice_fingerprint, resonance_components_guarded, resonance_contains_linear, sigma1_contains,
};
use raag::{regression, Error, Graph, DEFAULT_DMAX, DEFAULT_GUARD, DEFAULT_KMAX};

/// Invariants of right-angled Artin groups computed from their graphs.
///
/// GRAPH is a file (`.json` is read as a structured document, anything else
/// as an edge list) or, if no such file exists, a graph expression such as
/// `cycle:6` or `join(path:3, empty:2)`.
#[derive(Parser)]
#[command(name = "raag", version)]
struct Cli {
    /// Force the input format: edgelist, structured, or dsl.
    #[arg(long, global = true)]
    format: Option<GraphFormat>,
    /// Largest vertex count allowed for 2^n subset sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    guard: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full invariant report as canonical JSON.
    Invariants {
        graph: String,
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: usize,
        #[arg(long, default_value_t = DEFAULT_DMAX)]
        dmax: usize,
        /// Also include the rescaled block for this q.
        #[arg(long)]
        q: Option<usize>,
    },
    /// List the components of the first resonance variety.
    Resonance { graph: String },
    /// Test a character against Σ¹ and R¹.
    Bns {
        graph: String,
        /// Character values, e.g. `1=1,2=-1,3=1/2`; unlisted vertices are 0.
        #[arg(long)]
        chi: String,
    },
    /// Homotopy ranks and loop-space series of the cubical complex K^q.
    Rescale {
        graph: String,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: usize,
        #[arg(long, default_value_t = DEFAULT_DMAX)]
        dmax: usize,
    },
    /// Compare two graphs by clique polynomial, cut polynomial, and
    /// resonance fingerprint.
    Compare { first: String, second: String },
    /// Run the built-in regression values.
    Selftest,
}

fn load(arg: &str, format: Option<GraphFormat>) -> Result<Graph, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {arg}: {e}")))?;
        let json = path.extension().is_some_and(|e| e == "json");
        let default = if json {
            GraphFormat::Structured
        } else {
            GraphFormat::Edgelist
        };
        Ok(parse_graph(&text, format.unwrap_or(default))?)
    } else {
        Ok(parse_graph(arg, format.unwrap_or(GraphFormat::Dsl))?)
    }
}

enum Failure {
    Input(String),
    Guard(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            Error::Invariant(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli) -> Result<(), Failure> {
    let fmt = cli.format;
    match cli.command {
        Command::Invariants {
            graph,
            kmax,
            dmax,
            q,
        } => {
            let g = load(&graph, fmt)?;
            let opts = ReportOptions {
                dmax,
                guard: cli.guard,
                kmax,
                q,
            };
            print!("{}", build_report(&g, &opts)?.to_canonical_string());
        }
        Command::Resonance { graph } => {
            let g = load(&graph, fmt)?;
            let r = resonance_components_guarded(&g, cli.guard)?;
            let fp = lattice_fingerprint(&r);
            println!("ambient dimension: {}", r.ambient_dim);
            println!("codimension: {}", r.codim);
            println!("components: {}", r.components.len());
            for w in &r.components {
                println!("  {{{}}}", join(w.iter().map(|v| g.label(v))));
            }
            println!("dimensions: {}", join(&fp.dimensions));
            println!("pairwise intersections: {}", join(&fp.pairs));
            println!("triple intersections: {}", join(&fp.triples));
        }
        Command::Bns { graph, chi } => {
            let g = load(&graph, fmt)?;
            let chi = parse_character(&g, &chi)?;
            println!("in sigma1: {}", sigma1_contains(&g, &chi)?);
            println!("in R1: {}", resonance_contains_linear(&g, &chi)?);
            if chi.is_integral() {
                // Same answer as kernel_finitely_generated, but under --guard.
                let resonant = resonance_components_guarded(&g, cli.guard)?.contains(&chi);
                println!("kernel finitely generated: {}", !resonant);
            }
        }
        Command::Rescale {
            graph,
            q,
            kmax,
            dmax,
        } => {
            let g = load(&graph, fmt)?;
            let h = homotopy_ranks(&g, q, kmax)?;
            println!("q: {q}");
            for (m, r) in h.entries() {
                println!("rank pi_{m}: {r}");
            }
            println!(
                "loop space series: {}",
                join(loop_poincare_series(&g, q, dmax)?.coeffs())
            );
            println!(
                "cubical poincare polynomial: {}",
                cubical_poincare_polynomial(&g, q)
            );
            println!("formal and coformal: {}", formal_and_coformal(&g, q));
            println!("note: {FORMALITY_NOTE}");
        }
        Command::Compare { first, second } => {
            let g1 = load(&first, fmt)?;
            let g2 = load(&second, fmt)?;
            print!("{}", compare_graphs(&g1, &g2, cli.guard)?);
        }
        Command::Selftest => {
            let mut failed = 0;
            for c in regression::run_all() {
                if c.passed {
                    println!("ok   {}", c.name);
                } else {
                    failed += 1;
                    println!("FAIL {}: {}", c.name, c.detail);
                }
            }
            if failed > 0 {
                return Err(Failure::Internal(format!(
                    "{failed} regression check(s) failed"
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap's own usage errors would exit 2, which is reserved for the guard.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Guard(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
