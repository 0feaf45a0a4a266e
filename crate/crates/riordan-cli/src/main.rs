//! Command-line front end: build Riordan arrays from catalog names or
//! generating-function expressions, render truncated matrices, construct
//! one-pth arrays (with an independent index-extraction check), compute
//! A/Z-sequences, and run the identity suites.
//!
//! Exit codes: 0 success / all identities pass, 1 identity failure or
//! oracle mismatch, 2 usage or expression errors, 3 truncation order
//! exceeded.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;
use riordan::gfparse;
use riordan::identities::{self, SuiteBounds, SUITE_NAMES};
use riordan::onepth::{self, OnePthSpec};
use riordan::{bell, catalog, parse_rat, Error, Rat, RatArray, RatSeries};

#[derive(Parser)]
#[command(
    name = "riordan",
    version,
    about = "Exact Riordan-array algebra, one-pth subarrays, and identity verification"
)]
struct Cli {
    /// Truncation order for series arithmetic
    #[arg(long, global = true, default_value_t = riordan::DEFAULT_ORDER)]
    order: usize,

    /// Output format (exact rationals in every format)
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ArraySelect {
    /// Catalog array name: pascal, delannoy, fib-catalan, catalan-array
    name: Option<String>,

    /// Expression for g(t), e.g. "1/(1-t)" (requires --f)
    #[arg(long, conflicts_with = "name", requires = "f")]
    g: Option<String>,

    /// Expression for f(t), e.g. "t/(1-t)" (requires --g)
    #[arg(long, conflicts_with = "name", requires = "g")]
    f: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    Vertical,
    Horizontal,
}

impl From<OrientationArg> for onepth::Orientation {
    fn from(o: OrientationArg) -> Self {
        match o {
            OrientationArg::Vertical => onepth::Orientation::Vertical,
            OrientationArg::Horizontal => onepth::Orientation::Horizontal,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Render the lower-triangular matrix of an array
    Show {
        #[command(flatten)]
        select: ArraySelect,
        /// Number of rows to print
        #[arg(long, default_value_t = 8)]
        rows: usize,
    },
    /// Construct the (p, r) vertical or horizontal one-pth array
    Onepth {
        #[command(flatten)]
        select: ArraySelect,
        #[arg(short, default_value_t = 2)]
        p: usize,
        #[arg(short, default_value_t = 0)]
        r: usize,
        #[arg(long, value_enum)]
        orientation: OrientationArg,
        #[arg(long, default_value_t = 8)]
        rows: usize,
        /// Also extract the entries directly from the parent matrix and
        /// compare (prints MATCH or the first differing cell)
        #[arg(long)]
        check_oracle: bool,
    },
    /// Print the A-sequence (and Z-sequence when g(0) = 1)
    Aseq {
        #[command(flatten)]
        select: ArraySelect,
        /// Also evaluate the one-pth A-sequence formula and compare it with
        /// the A-sequence of the constructed one-pth array
        #[arg(long, requires = "p", requires = "orientation")]
        formula: bool,
        #[arg(short)]
        p: Option<usize>,
        #[arg(long, value_enum)]
        orientation: Option<OrientationArg>,
    },
    /// Render the group inverse of an array
    Inverse {
        #[command(flatten)]
        select: ArraySelect,
        #[arg(long, default_value_t = 8)]
        rows: usize,
    },
    /// Render the group product of two arrays
    Multiply {
        /// First factor: catalog array name
        a: Option<String>,
        /// Second factor: catalog array name
        b: Option<String>,
        /// Expression for the first factor's g (with --f1)
        #[arg(long, conflicts_with = "a", requires = "f1")]
        g1: Option<String>,
        #[arg(long, conflicts_with = "a", requires = "g1")]
        f1: Option<String>,
        /// Expression for the second factor's g (with --f2)
        #[arg(long, conflicts_with = "b", requires = "f2")]
        g2: Option<String>,
        #[arg(long, conflicts_with = "b", requires = "g2")]
        f2: Option<String>,
        #[arg(long, default_value_t = 8)]
        rows: usize,
    },
    /// Run identity suites over their parameter grids
    Identities {
        /// Suite names (repeatable); default runs all of them
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_p: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Comma-separated rational grid for the Gould/GKP sweeps,
        /// e.g. "1/2,3,-5/3"
        #[arg(long)]
        r_grid: Option<String>,
        /// Emit one record per evaluated grid point
        #[arg(long)]
        verbose: bool,
        /// Negative control: perturb a beta coefficient; the summation
        /// suite must then fail with a located counterexample
        #[arg(long)]
        perturb_beta: bool,
    },
    /// Evaluate a partial Bell polynomial B_{n,k}
    Bell {
        n: usize,
        k: usize,
        /// Comma-separated x_1, x_2, ... for the partition sum
        #[arg(long)]
        x: Option<String>,
        /// Series expression: reads B_{n,k} off f(t)^k instead
        #[arg(long)]
        f: Option<String>,
    },
    /// Evaluate a generating-function expression to a coefficient list
    Series {
        /// Expression, e.g. "(1-sqrt(1-4*t))/(2*t)"
        expr: String,
    },
}

/// An error message paired with the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::OrderExceeded { .. } | Error::InsufficientOrder { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<gfparse::GfError> for Failure {
    fn from(err: gfparse::GfError) -> Self {
        Failure {
            code: 2,
            message: err.to_string(),
        }
    }
}

impl ArraySelect {
    fn build(&self, order: usize) -> Result<RatArray, Failure> {
        if let Some(name) = &self.name {
            return match catalog::build(name, order) {
                Some(catalog::CatalogItem::Array(a)) => Ok(a),
                Some(catalog::CatalogItem::Series(_)) => Err(Failure::usage(format!(
                    "`{name}` is a catalog series, not an array; pass it through --g/--f"
                ))),
                None => Err(Failure::usage(format!("unknown catalog name `{name}`"))),
            };
        }
        match (&self.g, &self.f) {
            (Some(g), Some(f)) => {
                let g = gfparse::eval_str(g, order)?;
                let f = gfparse::eval_str(f, order)?;
                Ok(RatArray::new(g, f)?)
            }
            _ => Err(Failure::usage(
                "pass a catalog array name or both --g and --f",
            )),
        }
    }
}

fn build_pair(
    name: &Option<String>,
    g: &Option<String>,
    f: &Option<String>,
    order: usize,
) -> Result<RatArray, Failure> {
    ArraySelect {
        name: name.clone(),
        g: g.clone(),
        f: f.clone(),
    }
    .build(order)
}

fn matrix_rows(array: &RatArray, rows: usize) -> Result<Vec<Vec<Rat>>, Failure> {
    if rows == 0 {
        return Ok(Vec::new());
    }
    if rows - 1 > array.order() {
        return Err(Error::OrderExceeded {
            wanted: rows - 1,
            order: array.order(),
        }
        .into());
    }
    Ok(array.triangle()[..rows].to_vec())
}

fn series_line(s: &RatSeries) -> String {
    format!("{s}\n")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let order = cli.order;
    let format = cli.format;
    if order < 1 {
        return Err(Failure::usage("--order must be at least 1"));
    }
    match cli.command {
        Command::Show { select, rows } => {
            let array = select.build(order)?;
            print!("{}", output::matrix(&matrix_rows(&array, rows)?, format));
            Ok(0)
        }

        Command::Onepth {
            select,
            p,
            r,
            orientation,
            rows,
            check_oracle,
        } => {
            if p < 1 {
                return Err(Failure::usage("p must be at least 1"));
            }
            if rows < 1 {
                return Err(Failure::usage("rows must be at least 1"));
            }
            // raise the parent order so the subarray reaches `rows` rows
            let parent_order = order.max(p * rows + r).max(rows + r);
            let parent = select.build(parent_order)?;
            let spec = OnePthSpec::new(p, r, orientation.into());
            let result = spec.build(&parent)?;
            eprintln!(
                "# parent order {parent_order}, {} one-pth (p={p}, r={r}) at order {}",
                spec.orientation,
                result.order()
            );
            let shown = matrix_rows(&result, rows)?;
            print!("{}", output::matrix(&shown, format));
            if check_oracle {
                let expected = spec.oracle(&parent, rows)?;
                for (n, row) in expected.iter().enumerate() {
                    for (k, want) in row.iter().enumerate() {
                        let got = &shown[n][k];
                        if got != want {
                            println!(
                                "oracle check: MISMATCH at ({n}, {k}): constructed={got}, extracted={want}"
                            );
                            return Ok(1);
                        }
                    }
                }
                println!("oracle check: MATCH ({rows} rows)");
            }
            Ok(0)
        }

        Command::Aseq {
            select,
            formula,
            p,
            orientation,
        } => {
            let array = select.build(order)?;
            let a = array.a_sequence()?;
            println!("A: {a}");
            match array.z_sequence() {
                Ok(z) => println!("Z: {z}"),
                Err(Error::UnnormalizedG) => println!("Z: (undefined: requires g(0) = 1)"),
                Err(e) => return Err(e.into()),
            }
            if formula {
                let p = p.expect("clap enforces -p with --formula");
                if p < 1 {
                    return Err(Failure::usage("p must be at least 1"));
                }
                let orientation: onepth::Orientation = orientation
                    .expect("clap enforces --orientation with --formula")
                    .into();
                let formula_series = onepth::a_seq_formula(&array, p, orientation)?;
                let constructed = OnePthSpec::new(p, 0, orientation).build(&array)?;
                let constructed_a = constructed.a_sequence()?;
                println!(
                    "formula ({}): {formula_series}",
                    match orientation {
                        onepth::Orientation::Vertical => "(f/t)^(p-1)",
                        onepth::Orientation::Horizontal => "A(t)^p",
                    }
                );
                println!("one-pth A-sequence: {constructed_a}");
                if constructed_a.agrees_with(&formula_series) {
                    println!("verdict: MATCH");
                } else {
                    println!("verdict: MISMATCH");
                    return Ok(1);
                }
            }
            Ok(0)
        }

        Command::Inverse { select, rows } => {
            let array = select.build(order.max(rows.saturating_sub(1)))?;
            let inv = array.inverse()?;
            print!("{}", output::matrix(&matrix_rows(&inv, rows)?, format));
            Ok(0)
        }

        Command::Multiply {
            a,
            b,
            g1,
            f1,
            g2,
            f2,
            rows,
        } => {
            let left = build_pair(&a, &g1, &f1, order)?;
            let right = build_pair(&b, &g2, &f2, order)?;
            let product = left.multiply(&right)?;
            print!("{}", output::matrix(&matrix_rows(&product, rows)?, format));
            Ok(0)
        }

        Command::Identities {
            suites,
            max_p,
            max_r,
            max_n,
            r_grid,
            verbose,
            perturb_beta,
        } => {
            let mut bounds = SuiteBounds {
                order,
                max_p,
                max_r,
                max_n,
                perturb_beta,
                ..SuiteBounds::default()
            };
            if let Some(grid) = r_grid {
                let parsed: Result<Vec<Rat>, String> = grid.split(',').map(parse_rat).collect();
                bounds.rational_grid = parsed.map_err(Failure::usage)?;
                if bounds.rational_grid.is_empty() {
                    return Err(Failure::usage("--r-grid needs at least one value"));
                }
            }
            let names: Vec<&str> = if suites.is_empty() {
                SUITE_NAMES.to_vec()
            } else {
                suites.iter().map(String::as_str).collect()
            };
            let reports = identities::run_suite(&names, &bounds).map_err(Failure::usage)?;
            print!("{}", output::reports(&reports, format, verbose));
            Ok(if reports.iter().all(|r| r.all_passed()) {
                0
            } else {
                1
            })
        }

        Command::Bell { n, k, x, f } => {
            if n < 1 || k < 1 || k > n {
                return Err(Failure::usage("need 1 <= k <= n"));
            }
            let via_x = match &x {
                Some(list) => {
                    let parsed: Result<Vec<Rat>, String> = list.split(',').map(parse_rat).collect();
                    let xs = parsed.map_err(Failure::usage)?;
                    if xs.len() < n - k + 1 {
                        return Err(Failure::usage(format!(
                            "need at least {} values for B_{{{n},{k}}}",
                            n - k + 1
                        )));
                    }
                    Some(bell::bell_polynomial(n, k, &xs))
                }
                None => None,
            };
            let via_f = match &f {
                Some(expr) => {
                    let series = gfparse::eval_str(expr, order.max(n))?;
                    if series.valuation() == Some(0) {
                        return Err(Failure::usage("--f needs a series with f(0) = 0"));
                    }
                    Some(bell::bell_via_series(&series, n, k)?)
                }
                None => None,
            };
            match (via_x, via_f) {
                (Some(a), Some(b)) => {
                    println!("partition sum: {a}");
                    println!("series route:  {b}");
                    if a == b {
                        println!("verdict: MATCH");
                        Ok(0)
                    } else {
                        println!("verdict: MISMATCH");
                        Ok(1)
                    }
                }
                (Some(a), None) => {
                    println!("{a}");
                    Ok(0)
                }
                (None, Some(b)) => {
                    println!("{b}");
                    Ok(0)
                }
                (None, None) => Err(Failure::usage("pass --x values or a --f expression")),
            }
        }

        Command::Series { expr } => {
            let series = gfparse::eval_str(&expr, order)?;
            print!("{}", series_line(&series));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
