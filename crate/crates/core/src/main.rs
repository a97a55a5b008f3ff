use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use vcrit::enumerate::{census_copaw_critical, census_general, Census, SearchSpace};
use vcrit::{
    canonical_form, chromatic_number, clique_number, clique_substituted_odd_cycle, co_odd_cycle, independence_number,
    is_free, is_vertex_critical, odd_cycle, parse_graphs, to_edge_line, to_graph6, verify_certificate, CertifiedAnswer,
    Certifier, Graph, PatternName,
};

#[derive(Parser)]
#[command(name = "vcrit", version, about = "Vertex-critical graph tools: checks, censuses, certified coloring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report χ, α, ω, criticality and pattern freeness for each graph in a file.
    Check {
        file: PathBuf,
        /// Require every graph to be k-vertex-critical.
        #[arg(long)]
        k: Option<usize>,
        /// Require freeness of this pattern (repeatable).
        #[arg(long = "pattern")]
        patterns: Vec<PatternName>,
        /// Allow isomorphic duplicates in the file.
        #[arg(long)]
        allow_duplicates: bool,
    },
    /// Count k-vertex-critical H-free graphs by order.
    Census {
        #[arg(long)]
        k: usize,
        /// Forbidden pattern, or `none` for all graphs.
        #[arg(long, default_value = "P3+P1")]
        pattern: String,
        /// Largest order searched (default 2k-1 capped at 11 for P3+P1, else 9).
        #[arg(long)]
        max_order: Option<usize>,
        /// Search only graphs with independence number at most 2.
        #[arg(long)]
        alpha2: bool,
        /// Directory for k{k}_n{n}.g6 files and summary.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide k-colorability with a verified certificate for each graph.
    Color {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// Level-6 database file, used instead of running the census.
        #[arg(long)]
        db: Option<PathBuf>,
    },
    /// Convert a graph file between graph6 and edge lists.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Format,
        /// Output file (default stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a member of a named family.
    Family {
        #[arg(value_enum)]
        name: FamilyName,
        /// odd-cycle: m; co-odd-cycle: k; clique-cycle: t k.
        #[arg(required = true, num_args = 1..=2)]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        to: Format,
    },
    /// Write the database of k-critical (P3+P1)-free graphs, 4 <= k <= 6.
    Database {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum FamilyName {
    OddCycle,
    CoOddCycle,
    CliqueCycle,
}

/// A failure that maps to exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

fn read_graphs(path: &Path) -> Result<Vec<(usize, Graph)>> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    parse_graphs(&text).map_err(|e| Usage(format!("{}: {e}", path.display())).into())
}

fn format_graph(g: &Graph, to: Format) -> String {
    match to {
        Format::Graph6 => to_graph6(g),
        Format::Edges => to_edge_line(g),
    }
}

fn check(file: &Path, k: Option<usize>, patterns: &[PatternName], allow_duplicates: bool) -> Result<bool> {
    let graphs = read_graphs(file)?;
    let mut seen: HashMap<_, usize> = HashMap::new();
    let (mut passed, mut critical) = (0, 0);
    for (line, g) in &graphs {
        let chi = chromatic_number(g);
        let mut row = format!(
            "line {line}: n={} chi={chi} alpha={} omega={}",
            g.order(),
            independence_number(g),
            clique_number(g)
        );
        let mut ok = true;
        if let Some(k) = k {
            let c = is_vertex_critical(g, k).is_critical;
            critical += c as usize;
            ok &= c;
            let _ = write!(row, " {k}-critical={}", if c { "yes" } else { "no" });
        }
        for p in patterns {
            let f = is_free(g, *p);
            ok &= f;
            let _ = write!(row, " {p}-free={}", if f { "yes" } else { "no" });
        }
        if !allow_duplicates {
            if let Some(first) = seen.insert(canonical_form(g), *line) {
                ok = false;
                let _ = write!(row, " duplicate-of-line={first}");
            }
        }
        passed += ok as usize;
        println!("{row}{}", if ok { "" } else { " FAIL" });
    }
    let total = graphs.len();
    if k.is_some() {
        println!("{critical}/{total} critical");
    }
    println!("{passed}/{total} pass");
    Ok(passed == total)
}

fn run_census(k: usize, pattern: &str, max_order: Option<usize>, alpha2: bool) -> Result<Census> {
    let pattern: Option<PatternName> = match pattern.to_ascii_lowercase().as_str() {
        "none" | "all" => None,
        p => Some(p.parse().map_err(|e| Usage(format!("{e}")))?),
    };
    let result = if pattern == Some(PatternName::P3PlusP1) && !alpha2 {
        let n_max = max_order.unwrap_or((2 * k).saturating_sub(1).min(11));
        census_copaw_critical(k, n_max)
    } else {
        let space = if alpha2 { SearchSpace::AlphaAtMostTwo } else { SearchSpace::AllGraphs };
        census_general(k, pattern, max_order.unwrap_or(9), space)
    };
    result.map_err(|e| Usage(format!("unsupported census mode: {e}")).into())
}

fn write_census(c: &Census, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for row in &c.rows {
        let mut s = String::new();
        for code in row.graphs.iter().flatten() {
            s.push_str(code.as_str());
            s.push('\n');
        }
        fs::write(dir.join(format!("k{}_n{}.g6", c.k, row.n)), s)?;
    }
    fs::write(dir.join("summary.csv"), c.to_csv())?;
    Ok(())
}

fn color(file: &Path, k: usize, db: Option<PathBuf>) -> Result<bool> {
    if !(3..=5).contains(&k) {
        return usage(format!("color supports k in 3..=5, got {k}"));
    }
    let graphs = read_graphs(file)?;
    let certifier = Certifier::new(db);
    for (line, g) in &graphs {
        let answer = certifier.certify(g, k)?;
        if !verify_certificate(g, k, &answer) {
            bail!("line {line}: certificate failed verification");
        }
        let payload = match &answer {
            CertifiedAnswer::Yes(c) => format!("colors {:?}", c.colors()),
            CertifiedAnswer::No(s) => format!("witness {s} ({} vertices)", s.len()),
            CertifiedAnswer::NotInClass(e) => format!("P3+P1 at {e:?}"),
        };
        println!("line {line}: {} {payload}", answer.verdict());
    }
    Ok(true)
}

fn family(name: FamilyName, params: &[usize], to: Format) -> Result<()> {
    let g = match (name, params) {
        (FamilyName::OddCycle, [m]) => odd_cycle(*m),
        (FamilyName::CoOddCycle, [k]) => co_odd_cycle(*k),
        (FamilyName::CliqueCycle, [t, k]) => clique_substituted_odd_cycle(*t, *k),
        _ => return usage("wrong number of family parameters"),
    }
    .map_err(|e| Usage(e.to_string()))?;
    println!("{}", format_graph(&g, to));
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Check { file, k, patterns, allow_duplicates } => check(&file, k, &patterns, allow_duplicates),
        Command::Census { k, pattern, max_order, alpha2, out } => {
            let c = run_census(k, &pattern, max_order, alpha2)?;
            print!("{}", c.to_table());
            if let Some(dir) = out {
                write_census(&c, &dir)?;
            }
            Ok(true)
        }
        Command::Color { file, k, db } => color(&file, k, db),
        Command::Convert { file, to, out } => {
            let mut s = String::new();
            for (_, g) in read_graphs(&file)? {
                s.push_str(&format_graph(&g, to));
                s.push('\n');
            }
            match out {
                Some(p) => fs::write(&p, s).with_context(|| format!("writing {}", p.display()))?,
                None => print!("{s}"),
            }
            Ok(true)
        }
        Command::Family { name, params, to } => family(name, &params, to).map(|_| true),
        Command::Database { k, out } => {
            let db = vcrit::build_database(k, true).map_err(|e| Usage(e.to_string()))?;
            db.write(&out)?;
            println!("k={} count={}", db.k(), db.len());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
