//! Benchmark and reproduction harness for the modified Bessel equation
//! solver.
//!
//! Exit codes: 0 on success, 2 for invalid arguments, 3 when the solver
//! produces non-finite output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use modbessel::dht::DhtPlan;
use modbessel::field;
use modbessel::greens::solve_mode;
use modbessel::harness::{
    run_sweep, run_timing, write_csv, SweepConfig, TestCase,
};
use modbessel::interp::BlockGrid;
use modbessel::poisson::{solve_poisson, CylGrid};
use modbessel::Error;

#[derive(Parser)]
#[command(name = "mbsolve", version, about = "Modified Bessel equation solver benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a single (n, kappa) mode and emit the solution as CSV.
    Solve(SolveArgs),
    /// Error sweep with input sampled directly on transform nodes.
    SweepDht(SweepArgs),
    /// Error sweep with input interpolated from Chebyshev block grids.
    SweepCheb(SweepArgs),
    /// Timing study for both evaluation modes.
    Timing(SweepArgs),
    /// Solve the cylindrical Poisson equation over a 3-d field file.
    Poisson(PoissonArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Azimuthal order n.
    #[arg(long)]
    order: usize,
    /// Axial wavenumber kappa (> 0).
    #[arg(long)]
    kappa: f64,
    /// Outer radius R.
    #[arg(long, default_value_t = 16.0)]
    radius: f64,
    /// Transform size M.
    #[arg(long, default_value_t = 128)]
    dht_size: usize,
    /// Chebyshev block count N; 0 solves directly on transform nodes.
    #[arg(long, default_value_t = 0)]
    blocks: usize,
    /// Chebyshev points per block P.
    #[arg(long, default_value_t = 16)]
    points_per_block: usize,
    /// Oscillation frequency beta of the built-in test input.
    #[arg(long, default_value_t = 0.0)]
    beta: f64,
    /// Gaussian width alpha of the built-in test input.
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// "test" for the built-in analytic input, or a CYLF file holding one
    /// radial profile (dims (N*(P+1), 1, 1)) on the block-grid nodes.
    #[arg(long, default_value = "test")]
    input: String,
    /// Output CSV path (stdout if omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Output CSV path (stdout if omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PoissonArgs {
    /// Input CYLF field file with the forcing samples.
    #[arg(long)]
    input: PathBuf,
    /// Output CYLF field file for the solution.
    #[arg(long)]
    output: PathBuf,
    /// Outer radius R.
    #[arg(long, default_value_t = 16.0)]
    radius: f64,
    /// Transform size M used for every mode.
    #[arg(long, default_value_t = 128)]
    dht_size: usize,
    /// Radial Chebyshev block count N.
    #[arg(long, default_value_t = 16)]
    blocks: usize,
    /// Chebyshev points per block P.
    #[arg(long, default_value_t = 16)]
    points_per_block: usize,
    /// Azimuthal node count (must match the field file).
    #[arg(long)]
    n_theta: usize,
    /// Axial node count (must match the field file).
    #[arg(long)]
    n_z: usize,
    /// Axial period L_z.
    #[arg(long)]
    length_z: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::SweepDht(args) => cmd_sweep(SweepConfig::dht_grid(), args, false),
        Command::SweepCheb(args) => cmd_sweep(SweepConfig::chebyshev_grid(), args, false),
        Command::Timing(args) => cmd_sweep(SweepConfig::timing_grid(), args, true),
        Command::Poisson(args) => cmd_poisson(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("mbsolve: {err}");
            match err {
                Error::Numerical(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn write_output(path: &Option<PathBuf>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode, Error> {
    let plan = DhtPlan::new(args.order, args.dht_size, args.radius)?;
    let tc = TestCase::new(args.order, args.kappa, args.alpha, args.beta);
    let builtin = args.input == "test";

    let grid = if args.blocks > 0 || !builtin {
        let blocks = if args.blocks > 0 { args.blocks } else {
            return Err(Error::Domain("--blocks must be set when reading a profile file".into()));
        };
        Some(BlockGrid::new(blocks, args.points_per_block, args.radius))
    } else {
        None
    };

    let (node_samples, eval_points) = match (&grid, builtin) {
        (None, true) => {
            let f: Vec<f64> = plan.nodes().iter().map(|&r| tc.forcing(r)).collect();
            (f, plan.nodes().to_vec())
        }
        (Some(g), true) => {
            let f: Vec<f64> = g.nodes().iter().map(|&r| tc.forcing(r)).collect();
            (g.interpolate(&f, plan.nodes())?, g.nodes().to_vec())
        }
        (Some(g), false) => {
            let data = field::read_field(&args.input.as_str().as_ref())?;
            let (nr, nt, nz) = data.dim();
            if nt != 1 || nz != 1 || nr != g.len() {
                return Err(Error::Shape(format!(
                    "profile file dims ({nr}, {nt}, {nz}) do not match a {}-node block grid",
                    g.len()
                )));
            }
            let f: Vec<f64> = (0..nr).map(|ir| data[(ir, 0, 0)]).collect();
            (g.interpolate(&f, plan.nodes())?, g.nodes().to_vec())
        }
        (None, false) => unreachable!(),
    };

    let coeffs = plan.apply(&node_samples)?;
    let sol = solve_mode(&plan, args.kappa, &coeffs, &eval_points)?;

    let mut body = String::new();
    if builtin {
        body.push_str("r,u,u_exact,abs_error\n");
        let mut err = 0.0_f64;
        let mut scale = 0.0_f64;
        for (i, &r) in eval_points.iter().enumerate() {
            let exact = tc.solution(r);
            err = err.max((sol.values[i] - exact).abs());
            scale = scale.max(exact.abs());
            body.push_str(&format!(
                "{r:e},{:e},{exact:e},{:e}\n",
                sol.values[i],
                (sol.values[i] - exact).abs()
            ));
        }
        eprintln!("epsilon = {:e}", (err / scale).min(1.0));
    } else {
        body.push_str("r,u\n");
        for (i, &r) in eval_points.iter().enumerate() {
            body.push_str(&format!("{r:e},{:e}\n", sol.values[i]));
        }
    }
    write_output(&args.output, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(config: SweepConfig, args: SweepArgs, timing: bool) -> Result<ExitCode, Error> {
    let results = if timing { run_timing(&config)? } else { run_sweep(&config)? };
    let mut buf = Vec::new();
    write_csv(&results, &mut buf)?;
    write_output(&args.output, &String::from_utf8(buf).expect("csv is utf-8"))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_poisson(args: PoissonArgs) -> Result<ExitCode, Error> {
    let forcing = field::read_field(&args.input)?;
    let radial = BlockGrid::new(args.blocks, args.points_per_block, args.radius);
    let grid = CylGrid::new(radial, args.n_theta, args.n_z, args.length_z)?;
    let (nr, nt, nz) = forcing.dim();
    if (nr, nt, nz) != grid.shape() {
        return Err(Error::Shape(format!(
            "field file dims ({nr}, {nt}, {nz}) do not match the grid {:?}",
            grid.shape()
        )));
    }
    let solution = solve_poisson(&grid, args.dht_size, &forcing)?;
    field::write_field(&args.output, &solution)?;
    Ok(ExitCode::SUCCESS)
}
