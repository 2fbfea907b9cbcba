//! Command-line front end: batch verification and one-shot queries against
//! the exact engines, with deterministic table or JSON output.
//!
//! Exit codes: 0 on success (a mathematical "false" is still a success,
//! reported in the payload), 1 on a domain error, 2 on a usage error.
//! The worker count for the verification grids is taken from the
//! `AHECKE_WORKERS` environment variable when set.

mod commands;
mod output;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "ahecke",
    version,
    about = "Exact irreducibility tests for induction products of affine Hecke algebra \
             evaluation modules, dual canonical basis expansions, and trigonometric \
             intertwiner singularity scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for machine consumption or human reading.
    #[arg(long, global = true, value_enum, default_value_t = output::Format::Table)]
    format: output::Format,
}

#[derive(Subcommand)]
enum Command {
    /// Hook lengths of a partition and the symmetrized exponent set of
    /// singular parameter ratios (the sets driving the irreducibility
    /// criterion for induction products of evaluation modules).
    Hooks {
        /// Partition, comma-separated decreasing parts, e.g. "2,1".
        #[arg(long, value_name = "PARTS")]
        lambda: String,
        /// Grid reading: true hook lengths, or the literal full-grid formula.
        #[arg(long, value_enum, default_value_t = commands::HookReading::Positive)]
        mode: commands::HookReading,
    },
    /// Decide simplicity of an induction product of evaluation modules of
    /// one partition by the hook criterion: simple exactly when no pairwise
    /// exponent difference is a hook length.
    Irreducible {
        #[arg(long, value_name = "PARTS")]
        lambda: String,
        /// Evaluation exponents, comma-separated integers, e.g. "0,3".
        #[arg(long, value_name = "INTS")]
        points: String,
        /// Also build the explicit induction product at the given parameter
        /// and cross-check with the matrix-span test, reporting dimension
        /// and (for small modules) composition factors.
        #[arg(long)]
        oracle: bool,
        /// Hecke parameter u as a rational, used with --oracle.
        #[arg(long, default_value = "3")]
        u: String,
    },
    /// Transition matrices between the canonical basis and the PBW basis of
    /// a weight space, with unitriangular inverse (the multiplicity data of
    /// standard modules at q = 1).
    CanonicalBasis {
        /// Window rank N (segments live on points 1..N-1).
        #[arg(long, default_value_t = 4)]
        window: usize,
        /// Weight: comma-separated multiplicities of the simple roots.
        #[arg(long, value_name = "INTS")]
        weight: String,
        /// Also emit the inverse matrix.
        #[arg(long)]
        dual: bool,
    },
    /// Expand a product of dual canonical elements and report whether it is
    /// a single basis vector (equivalently, whether the corresponding
    /// induction product of simple modules is simple).
    DualProduct {
        /// Multisegments in the text syntax "[i,j]+[k,l]+2[p,q]"; repeat
        /// the flag for several factors.
        #[arg(long = "ms", value_name = "MULTISEGMENT")]
        multisegments: Vec<String>,
        /// Alternative input: a partition whose evaluation modules are used.
        #[arg(long, value_name = "PARTS")]
        lambda: Option<String>,
        /// Evaluation exponents for --lambda.
        #[arg(long, value_name = "INTS")]
        points: Option<String>,
    },
    /// Weak separation of the flag-minor column sets of two evaluation
    /// data, cross-checked against the product expansion (the
    /// quasi-commutation criterion for quantum flag minors).
    Qcommute {
        #[arg(long, value_name = "PARTS")]
        lambda: String,
        /// Second partition; defaults to the first.
        #[arg(long, value_name = "PARTS")]
        mu: Option<String>,
        /// Two evaluation exponents "a,b".
        #[arg(long, value_name = "INTS")]
        points: String,
        /// Also compare the two induction orders of the explicit modules at
        /// u = 3 (tiny sizes only): reports whether the induced modules
        /// have equal joint spectra characters.
        #[arg(long)]
        experimental_induction: bool,
    },
    /// Solve the trigonometric intertwiner of an evaluation module at exact
    /// sample points, reconstruct its entries as rational functions, and
    /// report every pole and zero with the containment check against the
    /// hook power set.
    RmatrixPoles {
        #[arg(long, value_name = "PARTS")]
        lambda: String,
        /// Rank N of sl_N.
        #[arg(long, default_value_t = 2)]
        window: usize,
        /// Deformation parameter v (u = v^2), as a rational.
        #[arg(long, default_value = "2")]
        v: String,
    },
    /// Run a verification suite over a parameter grid and print one line
    /// per check.
    Verify {
        /// Suite: triple, kmatrix, minors, multifactor, bialgebra,
        /// hookset, rmatrix, or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Size bound steering the grids (largest partition size).
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Hecke parameter u as a rational.
        #[arg(long, default_value = "3")]
        u: String,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Ok(workers) = std::env::var("AHECKE_WORKERS") {
        if let Ok(n) = workers.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let result = match cli.command {
        Command::Hooks { lambda, mode } => commands::hooks(&lambda, mode),
        Command::Irreducible {
            lambda,
            points,
            oracle,
            u,
        } => commands::irreducible(&lambda, &points, oracle, &u),
        Command::CanonicalBasis {
            window,
            weight,
            dual,
        } => commands::canonical_basis(window, &weight, dual),
        Command::DualProduct {
            multisegments,
            lambda,
            points,
        } => commands::dual_product(&multisegments, lambda.as_deref(), points.as_deref()),
        Command::Qcommute {
            lambda,
            mu,
            points,
            experimental_induction,
        } => commands::qcommute(&lambda, mu.as_deref(), &points, experimental_induction),
        Command::RmatrixPoles { lambda, window, v } => {
            commands::rmatrix_poles(&lambda, window, &v)
        }
        Command::Verify { suite, max_size, u } => commands::verify(&suite, max_size, &u),
    };
    match result {
        Ok(report) => {
            print!("{}", output::render(&report, cli.format));
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
