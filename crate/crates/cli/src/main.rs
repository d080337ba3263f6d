use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pontryagin_core::detect::{find_rational_witness, run_pipeline, verify_certificate};
use pontryagin_core::lforms::FormFile;
use pontryagin_core::symfun::l_table;
use pontryagin_core::{DetectionProblem, WitnessCertificate};

#[derive(Parser)]
#[command(
    name = "pontryagin",
    version,
    about = "Exact L-class certificates and multisignatures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print L_i in Pontryagin classes and its inverse P_i in L-classes.
    LTable {
        #[arg(long)]
        max: u32,
    },
    /// Find a rational witness point for a polynomial in e and p_i.
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Build and verify certificates for the first COUNT primes above N.
    Certify {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long = "primes", value_name = "COUNT")]
        primes: usize,
        /// Directory receiving cert_p<prime>.json files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Independently verify a certificate file.
    Verify { file: PathBuf },
    /// Multisignature of a form file.
    Multisig {
        #[arg(long)]
        form: PathBuf,
    },
    /// Transfer a form at level k to level k-1 and print it as a form file.
    Transfer {
        #[arg(long)]
        form: PathBuf,
    },
}

/// Exit status 1: the computation ran but a check failed.
const FAILURE: u8 = 1;
/// Exit status 2: bad input, I/O or parse error.
const INPUT_ERROR: u8 = 2;

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure {
        code: INPUT_ERROR,
        message: message.to_string(),
    }
}

fn check_failed(message: impl ToString) -> Failure {
    Failure {
        code: FAILURE,
        message: message.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn l_table_cmd(max: u32) -> Result<(), Failure> {
    if max == 0 {
        return Err(input_error("--max must be at least 1"));
    }
    let table = l_table(max);
    for i in 1..=max {
        println!("L{i} = {}", table.l(i));
    }
    for i in 1..=max {
        println!("P{i} = {}", table.p_inverse(i));
    }
    Ok(())
}

fn witness_cmd(xi: &str, n: u32, m: Option<u32>) -> Result<(), Failure> {
    let problem = DetectionProblem::parse(xi, n, m).map_err(input_error)?;
    let w = find_rational_witness(&problem).map_err(check_failed)?;
    let z: Vec<String> = w.z().iter().map(|q| q.to_string()).collect();
    println!("Xi_L = {}", problem.l_coordinates());
    println!("z = ({})", z.join(", "));
    println!("value = {}", w.value());
    println!("N = {}", w.bound());
    Ok(())
}

fn certify_cmd(xi: &str, n: u32, m: Option<u32>, count: usize, out: &Path) -> Result<(), Failure> {
    let problem = DetectionProblem::parse(xi, n, m).map_err(input_error)?;
    let run = run_pipeline(&problem, count).map_err(check_failed)?;
    fs::create_dir_all(out).map_err(|e| input_error(format!("{}: {e}", out.display())))?;
    for cert in &run.certificates {
        let path = out.join(format!("cert_p{}.json", cert.prime));
        fs::write(&path, cert.to_json()).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
        println!("p={} eval={} OK", cert.prime, cert.evaluation);
    }
    Ok(())
}

fn verify_cmd(file: &Path) -> Result<(), Failure> {
    let cert = WitnessCertificate::from_json(&read(file)?).map_err(input_error)?;
    let report = verify_certificate(&cert);
    match report.failure() {
        None => {
            println!("p={} eval={} OK", cert.prime, cert.evaluation);
            Ok(())
        }
        Some(why) => Err(check_failed(format!("verification failed: {why}"))),
    }
}

fn load_form(path: &Path) -> Result<pontryagin_core::HermitianForm, Failure> {
    FormFile::from_json(&read(path)?)
        .and_then(|f| f.to_form())
        .map_err(input_error)
}

fn multisig_cmd(path: &Path) -> Result<(), Failure> {
    let form = load_form(path)?;
    let ms = form.multisignature().map_err(check_failed)?;
    println!("{ms}");
    Ok(())
}

fn transfer_cmd(path: &Path) -> Result<(), Failure> {
    let form = load_form(path)?;
    let t = form.transfer().map_err(input_error)?;
    print!("{}", FormFile::from_form(&t).to_json());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::LTable { max } => l_table_cmd(*max),
        Command::Witness { xi, n, m } => witness_cmd(xi, *n, *m),
        Command::Certify { xi, n, m, primes, out } => certify_cmd(xi, *n, *m, *primes, out),
        Command::Verify { file } => verify_cmd(file),
        Command::Multisig { form } => multisig_cmd(form),
        Command::Transfer { form } => transfer_cmd(form),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
