use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use isolabel::cli::{self, BenchFamily, GenFamily};
use isolabel::universal::Scheme;

/// Distance labels for graphs: encode vertices into short self-contained bit
/// strings, answer distance queries from labels alone, and build universal
/// graphs in which every encoded graph sits isometrically.
#[derive(Parser)]
#[command(name = "isolabel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Dv,
    Hdv,
    Sep,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Dv => Scheme::Dv,
            SchemeArg::Hdv => Scheme::Hdv,
            SchemeArg::Sep => Scheme::Sep,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamilyArg {
    Random,
    Tree,
    Connected,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamilyArg {
    Random,
    Tree,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph file from a seeded random family.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamilyArg,
        #[arg(long)]
        n: usize,
        /// Edge probability (random/connected families).
        #[arg(long, default_value_t = 0.0)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Encode a connected graph file into a label file.
    Encode {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Print the decoded content of every label in a label file.
    Decode {
        #[arg(long)]
        labels: PathBuf,
    },
    /// Distance between two vertices, computed from their labels only.
    Dist {
        #[arg(long)]
        labels: PathBuf,
        u: u32,
        v: u32,
    },
    /// Build the universal graph of all connected graphs up to a size,
    /// verify every embedding, and write <prefix>.graph and <prefix>.map.
    Universal {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long)]
        class_max_n: usize,
        #[arg(long)]
        out_prefix: PathBuf,
    },
    /// Re-verify universal graph files written by `universal`.
    Verify {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long)]
        class_max_n: usize,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Label-size sweep: max label bits vs. the scheme's explicit bound,
    /// as CSV. Nonzero exit if any configuration exceeds its bound.
    Bench {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long, value_enum)]
        family: BenchFamilyArg,
        /// Comma-separated list of graph orders.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Comma-separated edge probabilities (random family).
        #[arg(long, value_delimiter = ',', default_values_t = [0.1])]
        p: Vec<f64>,
        #[arg(long, default_value_t = 5)]
        seeds: usize,
        /// Write the CSV here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn run(command: Command) -> isolabel::Result<i32> {
    match command {
        Command::Gen {
            family,
            n,
            p,
            seed,
            out,
        } => {
            let family = match family {
                GenFamilyArg::Random => GenFamily::Random,
                GenFamilyArg::Tree => GenFamily::Tree,
                GenFamilyArg::Connected => GenFamily::Connected,
            };
            cli::cmd_gen(family, n, p, seed, &out)?;
            Ok(cli::EXIT_OK)
        }
        Command::Encode { scheme, input, out } => {
            cli::cmd_encode(&input, scheme.into(), &out)?;
            Ok(cli::EXIT_OK)
        }
        Command::Decode { labels } => {
            print!("{}", cli::cmd_decode(&labels)?);
            Ok(cli::EXIT_OK)
        }
        Command::Dist { labels, u, v } => {
            println!("{}", cli::cmd_dist(&labels, u, v)?);
            Ok(cli::EXIT_OK)
        }
        Command::Universal {
            scheme,
            class_max_n,
            out_prefix,
        } => {
            let report = cli::cmd_universal(scheme.into(), class_max_n, &out_prefix)?;
            for line in &report.lines {
                println!("{line}");
            }
            println!(
                "universal graph: {} vertices, {} edges -> {} / {}",
                report.vertex_count,
                report.edge_count,
                report.graph_path.display(),
                report.map_path.display()
            );
            if report.all_pass {
                println!("all embeddings isometric");
                Ok(cli::EXIT_OK)
            } else {
                println!("ISOMETRY FAILURES FOUND");
                Ok(cli::EXIT_VERIFY_FAILURE)
            }
        }
        Command::Verify {
            scheme,
            class_max_n,
            graph,
            map,
        } => {
            let report = cli::cmd_verify(scheme.into(), class_max_n, &graph, &map)?;
            for line in &report.lines {
                println!("{line}");
            }
            if report.all_pass {
                println!("verification passed");
                Ok(cli::EXIT_OK)
            } else {
                println!("VERIFICATION FAILED");
                Ok(cli::EXIT_VERIFY_FAILURE)
            }
        }
        Command::Bench {
            scheme,
            family,
            n,
            p,
            seeds,
            out,
        } => {
            let family = match family {
                BenchFamilyArg::Random => BenchFamily::Random,
                BenchFamilyArg::Tree => BenchFamily::Tree,
            };
            let report = cli::cmd_bench(scheme.into(), family, &n, &p, seeds)?;
            match out {
                Some(path) => std::fs::write(path, &report.csv)?,
                None => print!("{}", report.csv),
            }
            if report.all_within_bound {
                Ok(cli::EXIT_OK)
            } else {
                eprintln!("label size bound exceeded");
                Ok(cli::EXIT_VERIFY_FAILURE)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(cli::exit_code(&err) as u8)
        }
    }
}
