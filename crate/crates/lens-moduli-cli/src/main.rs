//! Command-line front end: every computation of the library behind one
//! machine-readable envelope per invocation.
//!
//! Exit codes: 0 on success, 2 on usage or input errors, 3 when a
//! mathematical property fails (a non-regular component, an equivariance
//! residual over tolerance, a sweep failure).

mod commands;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use commands::Outcome;
use output::Format;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Parser)]
#[command(
    name = "lens-moduli",
    version,
    about = "Exact invariants of rational holomorphic-curve moduli in lens-space symplectizations"
)]
struct Cli {
    /// Output format for the result envelope.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: FormatArg,
    /// Seed for all randomized sampling (no other entropy is used).
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Relative tolerance for numerical equivariance checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Bound on the block count d_I in enumerations.
    #[arg(long = "max-di", global = true, default_value_t = 0)]
    max_di: i64,
    /// Bound on the contractible multiplicity k in enumerations.
    #[arg(long = "max-k", global = true, default_value_t = 1)]
    max_k: i64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classification predicates for L(p,q) vs L(p,q2).
    Classify { p: i64, q: i64, q2: i64 },
    /// Partition {1,...,p-1} into diffeomorphism and homotopy classes.
    Classes { p: i64 },
    /// Enumerate pair-of-pants components with indices and regularity.
    Pants {
        p: i64,
        q: i64,
        /// Overrides --max-di.
        #[arg(value_name = "MAX_DI")]
        di_bound: Option<i64>,
        /// Overrides --max-k.
        #[arg(value_name = "MAX_K")]
        k_bound: Option<i64>,
    },
    /// Cylinder component indices per block count.
    Cylinders {
        p: i64,
        q: i64,
        /// Overrides --max-di.
        #[arg(value_name = "MAX_DI")]
        di_bound: Option<i64>,
    },
    /// Conley-Zehnder data of the multiplicity-k orbits.
    Cz { p: i64, q: i64, k: i64 },
    /// Necessary existence conditions for an arbitrary asymptotic datum.
    ModuliCheck {
        p: i64,
        q: i64,
        /// Asymptotic end, e.g. +g0:2, +ginf:4, -c:1 (repeatable).
        #[arg(long = "end", allow_hyphen_values = true)]
        ends: Vec<String>,
    },
    /// Mod-p divisor-descent test for equivariant sections.
    SectionCheck {
        p: i64,
        q: i64,
        k0_pos: i64,
        k_inf_pos: i64,
        k0_neg: i64,
        /// Divisor twist to test; defaults to the canonical one.
        #[arg(allow_negative_numbers = true)]
        ell: Option<i64>,
    },
    /// Sample an equivariant base curve and verify its equivariance.
    SampleCurve {
        p: i64,
        q: i64,
        r: i64,
        d_i: i64,
        /// Overrides --seed.
        #[arg(value_name = "SEED")]
        seed_arg: Option<u64>,
        /// Overrides --tol.
        #[arg(value_name = "TOL")]
        tol_arg: Option<f64>,
    },
    /// Intersection numbers, Chern number, and adjunction for lifted ends.
    Intersect {
        k_plus: i64,
        k_minus: i64,
        #[arg(long, default_value_t = 0)]
        genus: i64,
    },
    /// Action-profile case analysis and the congruence q2 ≡ q^{±1}.
    Neck { p: i64, q: i64, q2: i64 },
    /// Run the full invariant sweep up to a prime bound.
    Verify { p_max: i64 },
}

fn dispatch(cli: &Cli) -> Result<Outcome, commands::CliError> {
    match &cli.command {
        Command::Classify { p, q, q2 } => commands::classify(*p, *q, *q2),
        Command::Classes { p } => commands::classes(*p),
        Command::Pants {
            p,
            q,
            di_bound,
            k_bound,
        } => commands::pants(
            *p,
            *q,
            di_bound.unwrap_or(cli.max_di),
            k_bound.unwrap_or(cli.max_k),
        ),
        Command::Cylinders { p, q, di_bound } => {
            commands::cylinders(*p, *q, di_bound.unwrap_or(cli.max_di))
        }
        Command::Cz { p, q, k } => commands::cz(*p, *q, *k),
        Command::ModuliCheck { p, q, ends } => commands::moduli_check(*p, *q, ends),
        Command::SectionCheck {
            p,
            q,
            k0_pos,
            k_inf_pos,
            k0_neg,
            ell,
        } => commands::section_check(*p, *q, *k0_pos, *k_inf_pos, *k0_neg, *ell),
        Command::SampleCurve {
            p,
            q,
            r,
            d_i,
            seed_arg,
            tol_arg,
        } => commands::sample_curve(
            *p,
            *q,
            *r,
            *d_i,
            seed_arg.unwrap_or(cli.seed),
            tol_arg.unwrap_or(cli.tol),
        ),
        Command::Intersect {
            k_plus,
            k_minus,
            genus,
        } => commands::intersect(*k_plus, *k_minus, *genus),
        Command::Neck { p, q, q2 } => commands::neck(*p, *q, *q2),
        Command::Verify { p_max } => commands::verify(*p_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            print!("{}", output::render(&outcome.envelope, format));
            if outcome.math_failure {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.0);
            ExitCode::from(2)
        }
    }
}
