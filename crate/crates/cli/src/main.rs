//! `momentsolve` - JSON front end for the truncated moment problem solver.
//!
//! One request per invocation, one JSON document on stdout. The request is
//! taken from `--json`, from stdin when no flags are given, or assembled from
//! the flag shorthand:
//!
//! ```text
//! momentsolve --command solve --moments 1,0,1,0,1 --kappa 0
//! momentsolve --command verify --moments 0,0,1 --kappa 1 \
//!     --phi-num=-1 --phi-den 0,0,0,1
//! echo '{"command":"analyze","moments":["1","1","1"]}' | momentsolve
//! ```
//!
//! Exit codes: 0 for OK/PASS, 1 for UNSOLVABLE/FAIL, 2 for input errors.

use std::io::Read;
use std::process::ExitCode;

use clap::Parser;

mod request;
mod response;

use request::Request;

#[derive(Parser, Debug)]
#[command(
    name = "momentsolve",
    about = "Exact solver and verifier for truncated indefinite moment problems",
    version
)]
struct Args {
    /// Command to run: analyze | solve | apply-tau | verify | expand.
    #[arg(long)]
    command: Option<String>,
    /// Comma-separated rational moments, e.g. "1,0,1,0,1" or "1/2,0,3".
    #[arg(long, allow_hyphen_values = true)]
    moments: Option<String>,
    /// Required negative index of the solution.
    #[arg(long)]
    kappa: Option<usize>,
    /// Problem flavour: MP (moment problem, default) or IP (interpolation).
    #[arg(long)]
    kind: Option<String>,
    /// Parameter numerator, comma-separated ascending coefficients.
    #[arg(long = "tau-num", allow_hyphen_values = true)]
    tau_num: Option<String>,
    /// Parameter denominator, comma-separated ascending coefficients.
    #[arg(long = "tau-den", allow_hyphen_values = true)]
    tau_den: Option<String>,
    /// Candidate numerator, comma-separated ascending coefficients.
    #[arg(long = "phi-num", allow_hyphen_values = true)]
    phi_num: Option<String>,
    /// Candidate denominator, comma-separated ascending coefficients.
    #[arg(long = "phi-den", allow_hyphen_values = true)]
    phi_den: Option<String>,
    /// Expansion order for the expand command.
    #[arg(long)]
    order: Option<usize>,
    /// Raw JSON request; overrides the flag shorthand.
    #[arg(long)]
    json: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let request = match gather_request(&args) {
        Ok(r) => r,
        Err(message) => {
            print_json(&response::input_error(&message));
            return ExitCode::from(2);
        }
    };
    match request.validate() {
        Ok(command) => {
            let (value, code) = response::dispatch(&command);
            print_json(&value);
            ExitCode::from(code)
        }
        Err(message) => {
            print_json(&response::input_error(&message));
            ExitCode::from(2)
        }
    }
}

fn gather_request(args: &Args) -> Result<Request, String> {
    if let Some(raw) = &args.json {
        return serde_json::from_str(raw).map_err(|e| format!("invalid JSON request: {e}"));
    }
    if args.command.is_none() {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        if buffer.trim().is_empty() {
            return Err("no request: pass --command, --json, or a JSON document on stdin".into());
        }
        return serde_json::from_str(&buffer).map_err(|e| format!("invalid JSON request: {e}"));
    }
    Ok(Request {
        command: args.command.clone().unwrap_or_default(),
        moments: args.moments.as_deref().map(request::split_csv),
        kappa: args.kappa,
        kind: args.kind.clone(),
        tau: request::ratfun_from_flags(args.tau_num.as_deref(), args.tau_den.as_deref())?,
        phi: request::ratfun_from_flags(args.phi_num.as_deref(), args.phi_den.as_deref())?,
        order: args.order,
    })
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable response")
    );
}
