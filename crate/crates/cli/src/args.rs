use clap::{Args, Parser, Subcommand, ValueEnum};
use schurweyl::{Cell, YoungDiagram};

#[derive(Parser, Debug)]
#[command(
    name = "schurweyl",
    version,
    about = "Hook-length entanglement bounds for Schur-Weyl sectors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact per-box bounds, their maximum and the entropy lower bound.
    Bound(BoundArgs),
    /// Standard tableaux of a shape with irrep dimensions.
    Tableaux(TableauxArgs),
    /// Run the projector, representation and saturation checks for a shape.
    Verify(VerifyArgs),
    /// Numerically maximize the top Schmidt coefficient over a sector.
    Maximize(MaximizeArgs),
    /// Bound table over all partitions in a range of sizes.
    Sweep(SweepArgs),
    /// Orthogonal-form matrices of the adjacent transpositions.
    Matrices(MatricesArgs),
    /// Emit the saturating state for a removable box as JSON.
    State(StateArgs),
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct BoundArgs {
    /// Row lengths, e.g. "3,2,1".
    #[arg(long, value_parser = parse_partition)]
    pub partition: YoungDiagram,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct TableauxArgs {
    #[arg(long, value_parser = parse_partition)]
    pub partition: YoungDiagram,
    /// Local dimension for dim V; defaults to the number of rows.
    #[arg(long, value_parser = parse_local_dim)]
    pub d: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_partition)]
    pub partition: YoungDiagram,
    /// Local dimension; defaults to the number of rows.
    #[arg(long, value_parser = parse_local_dim)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random states per check.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct MaximizeArgs {
    #[arg(long, value_parser = parse_partition)]
    pub partition: YoungDiagram,
    /// Local dimension; defaults to the number of rows.
    #[arg(long, value_parser = parse_local_dim)]
    pub d: Option<usize>,
    /// Cut after this many factors; defaults to N - 1.
    #[arg(long)]
    pub cut: Option<usize>,
    #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u64).range(1..))]
    pub restarts: u64,
    #[arg(long, default_value_t = 500)]
    pub max_iterations: usize,
    #[arg(long, default_value_t = 1e-10, value_parser = parse_tolerance)]
    pub tolerance: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip the restart seeded from the saturating state.
    #[arg(long)]
    pub cold: bool,
    /// Include per-iteration objective values.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=30))]
    pub max_n: u64,
    /// Smallest size listed; defaults to max-n.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=30))]
    pub min_n: Option<u64>,
    /// Unitary-irrep dimensions are listed for d = 1..=max-d.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub max_d: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct MatricesArgs {
    #[arg(long, value_parser = parse_partition)]
    pub partition: YoungDiagram,
}

#[derive(Args, Debug, Clone)]
pub struct StateArgs {
    #[arg(long, value_parser = parse_partition)]
    pub partition: YoungDiagram,
    /// Removable box "row,col"; defaults to the box attaining the bound.
    #[arg(long = "box", value_parser = parse_cell)]
    pub cell: Option<Cell>,
    #[arg(long, value_parser = parse_local_dim)]
    pub d: Option<usize>,
}

pub fn parse_partition(s: &str) -> Result<YoungDiagram, String> {
    s.parse::<YoungDiagram>().map_err(|e| e.to_string())
}

pub fn parse_cell(s: &str) -> Result<Cell, String> {
    let parts: Vec<&str> = s.trim_matches(|c| c == '(' || c == ')').split(',').collect();
    match parts.as_slice() {
        [r, c] => {
            let row = r.trim().parse().map_err(|_| format!("bad row in {s:?}"))?;
            let col = c.trim().parse().map_err(|_| format!("bad column in {s:?}"))?;
            if row == 0 || col == 0 {
                return Err(format!("box coordinates are 1-based: {s:?}"));
            }
            Ok(Cell::new(row, col))
        }
        _ => Err(format!("expected \"row,col\", got {s:?}")),
    }
}

fn parse_local_dim(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(d) if d >= 1 => Ok(d),
        _ => Err(format!("local dimension must be a positive integer, got {s:?}")),
    }
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        _ => Err(format!("tolerance must be a positive number, got {s:?}")),
    }
}
