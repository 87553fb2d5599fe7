use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gspin_core::report::{self, CmdError, CmdOutput};

#[derive(Parser)]
#[command(name = "gspin", version, about = "Adjoint L-functions, genericity and L-packets for GSpin(4) and GSpin(6)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Adjoint L-function and its pole order at s = 1.
    Adjoint { file: PathBuf },
    /// Genericity and the Gross-Prasad verdict.
    Generic { file: PathBuf },
    /// L-packet size and structure.
    Packet { file: PathBuf },
    /// Monodromy, its image in gso and the centralizer dimensions.
    Nilpotent { file: PathBuf },
    /// Check every catalog entry against the tables.
    VerifyTables {
        /// Glob on entry ids, e.g. 'gspin6/nongnr/A*'.
        #[arg(long)]
        filter: Option<String>,
    },
    /// List catalog entries, or print the source of one.
    Catalog {
        #[arg(long)]
        filter: Option<String>,
        id: Option<String>,
    },
}

fn read(path: &PathBuf) -> Result<String, CmdError> {
    std::fs::read_to_string(path).map_err(|e| CmdError::Validation(format!("{}: {e}", path.display())))
}

fn run(cmd: &Cmd) -> Result<CmdOutput, CmdError> {
    match cmd {
        Cmd::Adjoint { file } => report::cmd_adjoint(&read(file)?),
        Cmd::Generic { file } => report::cmd_generic(&read(file)?),
        Cmd::Packet { file } => report::cmd_packet(&read(file)?),
        Cmd::Nilpotent { file } => report::cmd_nilpotent(&read(file)?),
        Cmd::VerifyTables { filter } => report::cmd_verify_tables(filter.as_deref()),
        Cmd::Catalog { filter, id } => report::cmd_catalog(filter.as_deref(), id.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli.cmd) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Structured => println!("{}", serde_json::to_string_pretty(&out.structured).expect("json")),
            }
            out.code
        }
        Err(e) => {
            match cli.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Structured => println!("{}", e.structured()),
            }
            e.code()
        }
    };
    ExitCode::from(code as u8)
}
