mod args;
mod config;
mod error;
mod eval;
mod output;
mod request;

use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use lorentz_core::matelem::rep_matrix_with_cap;
use lorentz_core::verify::{run_suite, Suite};
use lorentz_core::{HalfInt, Tolerances};
use rayon::prelude::*;

use args::{Cli, Command, Format};
use error::{is_validation, CliError};
use request::{expand, parse_params, Family, Grid};

/// Exit status for a run whose output was written but which still failed.
enum Status {
    Ok,
    VerifyFailed,
    Failed(CliError),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::VerifyFailed) => ExitCode::from(1),
        Ok(Status::Failed(e)) | Err(e) => {
            eprintln!("lorentz: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::Numeric(format!("write failed: {e}"))
}

fn run(cli: &Cli) -> Result<Status, CliError> {
    let tol = config::resolve(cli.config.as_deref(), &cli.tol)?;
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = match &cli.command {
        Command::Eval { family, params, grid } => {
            let grids: Vec<Grid> = grid.iter().map(|g| Grid::parse(g)).collect::<Result<_, _>>()?;
            let csv = cli.format == Some(Format::Csv);
            tabulate(&mut out, family, params, &grids, csv, &tol)?
        }
        Command::Table { family, params, grid } => {
            let grids: Vec<Grid> = grid.iter().map(|g| Grid::parse(g)).collect::<Result<_, _>>()?;
            let csv = cli.format != Some(Format::Json);
            tabulate(&mut out, family, params, &grids, csv, &tol)?
        }
        Command::Matrix { params } => {
            let p = parse_params(Family::Matrix, params, &[])?;
            let l = p.half("l").expect("required parameter");
            let g = eval::group_element(&p);
            let mat = rep_matrix_with_cap(l, &g, tol.l_cap)?;
            let det = (l == HalfInt::HALF).then(|| mat.determinant());
            output::write_matrix(&mut out, l, &p, &mat, det, cli.format == Some(Format::Csv)).map_err(io_err)?;
            Status::Ok
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let reports = run_suite(suite, cli.seed, &tol);
            output::write_reports(&mut out, &reports, cli.format == Some(Format::Csv)).map_err(io_err)?;
            if reports.iter().all(|r| r.pass) {
                Status::Ok
            } else {
                Status::VerifyFailed
            }
        }
    };
    out.flush().map_err(io_err)?;
    Ok(status)
}

/// Evaluates every grid point in parallel and writes records in request
/// order. The first failing point, in that order, sets the exit status.
fn tabulate<W: Write>(
    out: &mut W,
    family: &str,
    params: &[String],
    grids: &[Grid],
    csv: bool,
    tol: &Tolerances,
) -> Result<Status, CliError> {
    let family = Family::parse(family)?;
    let axes: Vec<&str> = grids.iter().map(|g| g.axis.as_str()).collect();
    let base = parse_params(family, params, &axes)?;
    let points = expand(&base, grids)?;
    let results: Vec<_> = points.par_iter().map(|p| eval::evaluate(p, tol)).collect();
    let outcomes: Vec<output::Outcome> = results.iter().map(|r| r.clone().map_err(|e| e.to_string())).collect();
    output::write_eval(&mut *out, &points, &outcomes, csv).map_err(io_err)?;
    let status = match results.into_iter().find_map(Result::err) {
        None => Status::Ok,
        Some(e) if is_validation(&e) => Status::Failed(CliError::Validation(e.to_string())),
        Some(e) => Status::Failed(CliError::Numeric(e.to_string())),
    };
    Ok(status)
}
