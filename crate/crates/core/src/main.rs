use std::io::Read;
use std::process::ExitCode;

use clap::Parser;

use semiroot::cli::{self, CliError, Command, InputSpec, Options};

/// Classification, root spaces and reconstruction for simplicial affine
/// semigroups.
#[derive(Parser, Debug)]
#[command(name = "semiroot", version)]
struct Args {
    /// classify, roots, exceptional, bracket, member, cocycle, fingerprint,
    /// compare or reconstruct
    command: String,
    /// JSON input file (`-` for stdin); repeat for compare
    #[arg(long)]
    input: Vec<String>,
    /// Generators as "2,0;3,0;0,1", a JSON list, or a corpus name; repeat for compare
    #[arg(long)]
    gens: Vec<String>,
    #[arg(long)]
    degree: Option<i64>,
    #[arg(long)]
    bound: Option<i64>,
    /// 1-based coordinate axis
    #[arg(long)]
    axis: Option<usize>,
    /// Exit 1 on a definite No, 3 on UnknownUpToBound
    #[arg(long)]
    strict: bool,
    /// Omit timing so output is byte-identical across runs
    #[arg(long)]
    reproducible: bool,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
}

fn read_source(path: &str) -> Result<String, CliError> {
    let mut buf = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut buf).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| buf = s)
    };
    res.map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    Ok(buf)
}

fn run(args: &Args) -> Result<i32, CliError> {
    let cmd: Command = args.command.parse()?;
    let mut specs: Vec<InputSpec> = Vec::new();
    for path in &args.input {
        specs.extend(cli::parse_inputs(&read_source(path)?)?);
    }
    for g in &args.gens {
        specs.push(cli::parse_gens(g)?);
    }
    if specs.is_empty() {
        return Err(CliError::Usage("no semigroup given (use --input or --gens)".into()));
    }
    let opts = Options {
        degree: args.degree,
        bound: args.bound,
        axis: args.axis,
        strict: args.strict,
        reproducible: args.reproducible,
    };
    let report = cli::run_command(cmd, &specs, &opts)?;
    if args.json {
        println!("{}", serde_json::to_string(&report.to_json()).expect("serializable"));
    } else {
        print!("{}", report.to_text());
    }
    Ok(report.exit_code(opts.strict))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
