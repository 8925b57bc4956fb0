//! Thin command-line front end. All logic lives in the library; this file
//! parses arguments and prints.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sl2_quotients::cli::{
    cmd_classify_dim, cmd_distinguish, cmd_enumerate, cmd_info, cmd_reproduce_paper, Format,
    OutputConfig,
};

#[derive(Parser)]
#[command(
    name = "sl2q",
    about = "invariants of quotients of simple complex groups by SL2 subgroups of unipotent classes",
    version
)]
struct Args {
    /// Output format: json, md, or csv
    #[arg(long, global = true, default_value = "md")]
    format: String,

    /// Largest prime tried when reducing K-theory ideals
    #[arg(long, global = true, default_value_t = 97)]
    prime_bound: u64,

    /// Directory of orbit table documents (g2.json, ..., e8.json);
    /// falls back to ORBIT_DATA_DIR, then to the bundled tables
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant dossier of one class
    Info { group: String, class: String },
    /// List the unipotent classes of a group
    Enumerate {
        group: String,
        #[arg(long)]
        include_trivial: bool,
    },
    /// Compare two quotient spaces through the pipeline
    Distinguish {
        group_a: String,
        class_a: String,
        group_b: String,
        class_b: String,
    },
    /// Pairwise classification of all quotients of one dimension
    ClassifyDim { dim: u64 },
    /// Emit the reference tables as byte-stable documents
    ReproducePaper {
        /// Output directory
        #[arg(long, default_value = "paper_tables")]
        out_dir: PathBuf,
    },
}

fn run(args: Args) -> sl2_quotients::Result<String> {
    let format = Format::parse(&args.format)?;
    let data_dir = args
        .data_dir
        .or_else(|| std::env::var_os("ORBIT_DATA_DIR").map(PathBuf::from));
    let cfg = OutputConfig {
        format,
        prime_bound: args.prime_bound,
        data_dir,
    };
    match args.command {
        Command::Info { group, class } => cmd_info(&group, &class, &cfg),
        Command::Enumerate {
            group,
            include_trivial,
        } => cmd_enumerate(&group, include_trivial, &cfg),
        Command::Distinguish {
            group_a,
            class_a,
            group_b,
            class_b,
        } => cmd_distinguish(&group_a, &class_a, &group_b, &class_b, &cfg),
        Command::ClassifyDim { dim } => cmd_classify_dim(dim, &cfg),
        Command::ReproducePaper { out_dir } => {
            let paths = cmd_reproduce_paper(&cfg, &out_dir)?;
            let mut out = String::new();
            for p in paths {
                out.push_str(&format!("wrote {}\n", p.display()));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
