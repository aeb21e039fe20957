use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "toader", version, about = "Elliptic integrals, Toader-type means and sharp blend bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function and print its value.
    Eval(EvalArgs),
    /// Emit E(r) with envelope bounds as CSV.
    Table(TableArgs),
    /// Run invariant suites and report margins.
    Verify(VerifyArgs),
    /// Recover the critical u values of the gap function by bisection.
    Sharpness(SharpnessArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Func {
    /// K(r)
    #[value(name = "K")]
    K,
    /// E(r)
    #[value(name = "E")]
    E,
    /// Toader mean T(a, b)
    #[value(name = "T")]
    T,
    /// Contraharmonic mean C(a, b)
    #[value(name = "C")]
    C,
    /// Arithmetic mean A(a, b)
    #[value(name = "A")]
    A,
    /// Power mean M_p(a, b)
    #[value(name = "Mp")]
    Mp,
    /// Interpolating mean J(x) of (a, b)
    #[value(name = "J")]
    J,
    /// alpha A(a, b) + (1 - alpha) T(a, b)
    #[value(name = "combination")]
    Combination,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    pub func: Func,
    /// Modulus for K and E.
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    /// Exponent of the power mean.
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<f64>,
    /// Interpolation parameter of J, in [1/2, 1].
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    /// Weight of the arithmetic mean in the combination, in (0, 1).
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Comma-separated envelope ids: corollary33, chu34, guoqi35, yinqi36.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub envelopes: Vec<String>,
    #[arg(long = "r-min", default_value_t = 0.0)]
    pub r_min: f64,
    #[arg(long = "r-max", default_value_t = 0.99)]
    pub r_max: f64,
    /// Number of rows, endpoints included.
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite id, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Random pairs per randomized suite.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SharpnessArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Bisection width on u; at most 1e-6.
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
    /// Points in the classification grid.
    #[arg(long, default_value_t = 2000)]
    pub grid: usize,
    /// Also search for witnesses at lambda* + eps and mu* - eps.
    #[arg(long)]
    pub perturb: Option<f64>,
}
