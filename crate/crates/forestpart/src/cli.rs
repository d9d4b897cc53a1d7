//! Command-line entry points.
//!
//! Exit codes: 0 success, 1 a negative answer (`verify`, `check-sparse`,
//! `oracle color`), 2 hypothesis violation, 3 parameters outside the
//! engine's regime, 64 usage or input errors, 65 size guard, 70 internal
//! engine failure.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use forestpart_core::constructions::{self, ConstructionError};
use forestpart_core::{
    brute_force_color, check_hypothesis, check_strict_sparsity, color, is_critical, min_potential,
    min_potential_bruteforce, verify_coloring, Class, Constraint, EngineError, Girth, Params,
    Rational, ScaledPotential, SolverError, SparsityVerdict, SubsetResult, VerifyError, VertexId,
    ViolationKind, WeightedMultigraph,
};
use serde::Serialize;

use crate::document::{self, pretty, render_coloring, render_graph, DocumentError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_HYPOTHESIS: u8 = 2;
pub const EXIT_REGIME: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_TOO_LARGE: u8 = 65;
pub const EXIT_INTERNAL: u8 = 70;

#[derive(Parser, Debug)]
#[command(name = "forestpart", version, about = "Partition sparse weighted multigraphs into two bounded-degree forests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Color a graph, printing the assignment and the case trace.
    Color {
        /// Graph document, or `-` for stdin.
        file: PathBuf,
        #[arg(long)]
        no_trace: bool,
    },
    /// Exact potential of the graph or of a vertex subset.
    Potential {
        file: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<u32>>,
    },
    /// Minimum potential over a family of vertex subsets.
    MinPotential {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Family::Any)]
        constraint: Family,
    },
    /// Check a coloring document against a graph.
    Verify {
        file: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Whether e(H) < a n(H) - b for every nonempty subgraph H.
    CheckSparse {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        b: Rational,
    },
    Girth {
        file: PathBuf,
    },
    /// Build a graph and print its document.
    #[command(subcommand)]
    Construct(Construct),
    /// Exhaustive-search counterparts, for small graphs only.
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Any,
    Nonempty,
    NonemptyNonspanning,
}

impl Family {
    fn constraint(self) -> Constraint {
        match self {
            Family::Any => Constraint::Any,
            Family::Nonempty => Constraint::Nonempty,
            Family::NonemptyNonspanning => Constraint::NonemptyNonspanning,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    d1: i64,
    #[arg(long)]
    d2: i64,
}

impl ParamArgs {
    fn params(self) -> Result<Params, Failure> {
        Params::new(self.d1, self.d2).map_err(|e| Failure::Usage(e.to_string()))
    }
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Attach a double-pennon at a vertex.
    Pennon {
        file: PathBuf,
        #[arg(long)]
        vertex: u32,
    },
    /// Join parts with a flag. Parts are given as `FILE:ANCHOR`.
    Flag {
        #[arg(long = "part", required = true)]
        parts: Vec<String>,
        /// Part index for each of the d1 + 2 star vertices; defaults to
        /// 0, 1, .., l - 1, l - 1, ...
        #[arg(long, value_delimiter = ',')]
        assign: Option<Vec<usize>>,
    },
    PendantHost {
        file: PathBuf,
        #[arg(long)]
        vertex: u32,
    },
    NullLeaf {
        file: PathBuf,
        #[arg(long)]
        vertex: u32,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        class: u8,
    },
    /// The vertex with both capacities zero.
    Seed {
        #[command(flatten)]
        params: ParamArgs,
    },
    Dodecahedron {
        #[command(flatten)]
        params: ParamArgs,
    },
    Cycle {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
    },
    Path {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
    },
    Star {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        k: u32,
    },
    /// An r x c grid with every edge subdivided s times.
    Grid {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        rows: u32,
        #[arg(long)]
        cols: u32,
        #[arg(long, default_value_t = 0)]
        subdivide: u32,
    },
    /// Random strictly (a, b)-sparse weightless graph; by default the
    /// sparsity that the coloring hypothesis asks for.
    Random {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, allow_hyphen_values = true, requires = "b", value_parser = parse_rational)]
        a: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, requires = "a", value_parser = parse_rational)]
        b: Option<Rational>,
    },
}

#[derive(Subcommand, Debug)]
enum Oracle {
    Color {
        file: PathBuf,
    },
    MinPotential {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Family::Any)]
        constraint: Family,
    },
    Critical {
        file: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    TooLarge(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::TooLarge(_) => EXIT_TOO_LARGE,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::TooLarge(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String, Failure> {
        if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            return Ok(s);
        }
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }

    fn graph(&mut self, path: &PathBuf) -> Result<WeightedMultigraph, Failure> {
        let text = self.read(path)?;
        let (g, notes) = document::parse_graph(&text)?;
        for n in notes {
            writeln!(self.err, "warning: {n}")?;
        }
        Ok(g)
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let mut io = Io { out, err, stdin };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<u8, Failure> {
    match command {
        Command::Color { file, no_trace } => {
            let g = io.graph(&file)?;
            run_color(&g, !no_trace, io)
        }
        Command::Potential { file, subset } => {
            let g = io.graph(&file)?;
            let value = match subset {
                None => g.potential(),
                Some(ids) => {
                    let s: BTreeSet<VertexId> = ids.into_iter().map(VertexId).collect();
                    g.subset_potential(&s).map_err(|e| Failure::Usage(e.to_string()))?
                }
            };
            writeln!(io.out, "{}", show_potential(value, g.params()))?;
            Ok(EXIT_OK)
        }
        Command::MinPotential { file, constraint } => {
            let g = io.graph(&file)?;
            let r = min_potential(&g, &constraint.constraint())?;
            write_subset(io, &r, g.params())?;
            Ok(EXIT_OK)
        }
        Command::Verify { file, coloring } => {
            let g = io.graph(&file)?;
            let c = document::parse_coloring(&io.read(&coloring)?)?;
            let verdict = verify_coloring(&g, &c)?;
            if verdict.is_ok() {
                writeln!(io.out, "ok")?;
                return Ok(EXIT_OK);
            }
            for v in &verdict.violations {
                let ids = join(v.vertices.iter().map(|x| x.0));
                match v.kind {
                    ViolationKind::Cycle => writeln!(io.out, "cycle in class {}: {ids}", v.class)?,
                    ViolationKind::DegreeBudget => {
                        writeln!(io.out, "degree budget exceeded in class {} at {ids}", v.class)?
                    }
                }
            }
            Ok(EXIT_NEGATIVE)
        }
        Command::CheckSparse { file, a, b } => {
            let g = io.graph(&file)?;
            match check_strict_sparsity(&g, a, b) {
                SparsityVerdict::Ok => {
                    writeln!(io.out, "ok")?;
                    Ok(EXIT_OK)
                }
                SparsityVerdict::Violated { witness } => {
                    writeln!(io.out, "violated: {}", braces(witness.iter().map(|v| v.0)))?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Girth { file } => {
            let g = io.graph(&file)?;
            match g.girth() {
                Girth::Finite(k) => writeln!(io.out, "{k}")?,
                Girth::Infinite => writeln!(io.out, "inf")?,
            }
            Ok(EXIT_OK)
        }
        Command::Construct(c) => {
            let g = construct(c, io)?;
            write!(io.out, "{}", render_graph(&g))?;
            Ok(EXIT_OK)
        }
        Command::Oracle(o) => oracle(o, io),
    }
}

#[derive(Serialize)]
struct WitnessDoc {
    witness: Vec<u32>,
    potential: String,
}

fn run_color(g: &WeightedMultigraph, with_trace: bool, io: &mut Io<'_>) -> Result<u8, Failure> {
    // the hypothesis is reported ahead of the regime
    if let SparsityVerdict::Violated { witness } = check_hypothesis(g) {
        return report_witness(g, &witness, io);
    }
    match color(g) {
        Ok((c, trace)) => {
            write!(io.out, "{}", render_coloring(&c, with_trace.then_some(&trace)))?;
            Ok(EXIT_OK)
        }
        Err(EngineError::HypothesisViolation { witness }) => report_witness(g, &witness, io),
        Err(e @ EngineError::RegimeViolation { .. }) => {
            writeln!(io.err, "error: {e}")?;
            Ok(EXIT_REGIME)
        }
        Err(e @ EngineError::Internal { .. }) => Err(Failure::Internal(e.to_string())),
    }
}

fn report_witness(
    g: &WeightedMultigraph,
    witness: &BTreeSet<VertexId>,
    io: &mut Io<'_>,
) -> Result<u8, Failure> {
    let value = g.subset_potential(witness).expect("witness inside g");
    let doc = WitnessDoc {
        witness: witness.iter().map(|v| v.0).collect(),
        potential: show_potential(value, g.params()),
    };
    write!(io.out, "{}", pretty(&doc))?;
    writeln!(io.err, "error: hypothesis fails; some subgraph has potential at most -beta")?;
    Ok(EXIT_HYPOTHESIS)
}

fn construct(c: Construct, io: &mut Io<'_>) -> Result<WeightedMultigraph, Failure> {
    Ok(match c {
        Construct::Pennon { file, vertex } => {
            constructions::attach_double_pennon(&io.graph(&file)?, VertexId(vertex))?
        }
        Construct::PendantHost { file, vertex } => {
            constructions::attach_pendant_host(&io.graph(&file)?, VertexId(vertex))?
        }
        Construct::NullLeaf {
            file,
            vertex,
            class,
        } => {
            let class = Class::from_number(class).expect("validated by the parser");
            constructions::attach_null_leaf(&io.graph(&file)?, VertexId(vertex), class)?
        }
        Construct::Flag { parts, assign } => {
            let mut loaded = Vec::with_capacity(parts.len());
            for part in &parts {
                let (path, anchor) = part
                    .rsplit_once(':')
                    .and_then(|(p, a)| Some((p, a.parse::<u32>().ok()?)))
                    .ok_or_else(|| Failure::Usage(format!("expected FILE:ANCHOR, got {part}")))?;
                loaded.push((io.graph(&PathBuf::from(path))?, VertexId(anchor)));
            }
            let slots = (loaded[0].0.params().d1() + 2) as usize;
            let assignment =
                assign.unwrap_or_else(|| (0..slots).map(|j| j.min(loaded.len() - 1)).collect());
            constructions::attach_flag(&loaded, &assignment)?
        }
        Construct::Seed { params } => constructions::zero_capacity_singleton(params.params()?),
        Construct::Dodecahedron { params } => constructions::dodecahedron(params.params()?),
        Construct::Cycle { params, n } => constructions::cycle(params.params()?, n)?,
        Construct::Path { params, n } => constructions::path(params.params()?, n)?,
        Construct::Star { params, k } => constructions::star(params.params()?, k)?,
        Construct::Grid {
            params,
            rows,
            cols,
            subdivide,
        } => constructions::grid_subdivided(params.params()?, rows, cols, subdivide)?,
        Construct::Random {
            params,
            n,
            seed,
            a,
            b,
        } => {
            let params = params.params()?;
            match (a, b) {
                (Some(a), Some(b)) => constructions::random_sparse(params, n, seed, a, b)?,
                _ => constructions::random_hypothesis_graph(params, n, seed)?,
            }
        }
    })
}

fn oracle(o: Oracle, io: &mut Io<'_>) -> Result<u8, Failure> {
    match o {
        Oracle::Color { file } => {
            let g = io.graph(&file)?;
            match brute_force_color(&g)? {
                Some(c) => {
                    write!(io.out, "{}", render_coloring(&c, None))?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(io.out, "no coloring")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Oracle::MinPotential { file, constraint } => {
            let g = io.graph(&file)?;
            let r = min_potential_bruteforce(&g, &constraint.constraint())?;
            write_subset(io, &r, g.params())?;
            Ok(EXIT_OK)
        }
        Oracle::Critical { file } => {
            let g = io.graph(&file)?;
            writeln!(io.out, "{}", is_critical(&g)?)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_subset(io: &mut Io<'_>, r: &SubsetResult, params: &Params) -> Result<(), Failure> {
    writeln!(io.out, "{}", show_potential(r.potential, params))?;
    writeln!(io.out, "subset: {}", braces(r.subset.iter().map(|v| v.0)))?;
    Ok(())
}

/// Accepts `p/q` or an integer.
fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| format!("expected a rational p/q, got {s:?}"))
}

/// `p/q (scaled N)`, always with an explicit denominator.
pub fn show_potential(value: ScaledPotential, params: &Params) -> String {
    let r = value.to_rational(params);
    format!("{}/{} (scaled {})", r.numer(), r.denom(), value.value())
}

fn join(ids: impl Iterator<Item = u32>) -> String {
    ids.map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

fn braces(ids: impl Iterator<Item = u32>) -> String {
    format!("{{{}}}", ids.map(|i| i.to_string()).collect::<Vec<_>>().join(", "))
}
