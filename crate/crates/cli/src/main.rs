//! `postlie` command-line tool.
//!
//! Exit codes: 0 affirmative, 1 verified negative, 2 unknown, 64 usage,
//! 65 malformed input, 66 missing file or unknown catalog id.

mod commands;
mod input;

use clap::{Parser, Subcommand};

use commands::Outcome;
use input::{CliResult, Failure};

#[derive(Parser)]
#[command(
    name = "postlie",
    version,
    about = "Post-Lie structures on pairs of Lie algebras"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Named Lie algebras.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    #[command(subcommand)]
    Check(CheckCmd),
    /// Structural invariants of an algebra (file or catalog id).
    Invariants { algebra: String },
    #[command(subcommand)]
    Verify(VerifyCmd),
    #[command(subcommand)]
    Derive(DeriveCmd),
    #[command(subcommand)]
    Search(SearchCmd),
    /// Run the non-existence rules on a pair.
    Rules {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: String,
    },
    /// Existence table by class of g (rows) and n (columns).
    Table,
}

#[derive(Subcommand)]
enum CatalogCmd {
    List,
    Show {
        id: String,
    },
    /// Write the algebra as an interchange document.
    Export {
        id: String,
        #[arg(short, long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    Jacobi { algebra: String },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Pa {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: String,
        #[arg(long)]
        prod: String,
    },
    Rb {
        #[arg(long)]
        n: String,
        #[arg(long)]
        op: String,
        /// Overrides the weight stored in the operator file (default 1).
        #[arg(long)]
        weight: Option<String>,
    },
    Embedding {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: String,
        #[arg(long)]
        phi: String,
    },
}

#[derive(Subcommand)]
enum DeriveCmd {
    /// Product `x.y = {R x, y}` of a weight-1 Rota-Baxter operator.
    PaFromRb {
        #[arg(long)]
        n: String,
        #[arg(long)]
        op: String,
        #[arg(long)]
        weight: Option<String>,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Bracket `x.y - y.x + {x,y}`.
    Induced {
        #[arg(long)]
        n: String,
        #[arg(long)]
        prod: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Operator `-(projection onto n2 along n1)` for basis index lists like `1,4,5`.
    RbFromDecomposition {
        #[arg(long)]
        n: String,
        #[arg(long)]
        n1: String,
        #[arg(long)]
        n2: String,
        #[arg(short, long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    Pa {
        #[arg(long)]
        g: String,
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 2)]
        grid_height: u32,
        #[arg(long, default_value_t = 200_000)]
        budget: u64,
    },
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    use commands as c;
    match &cli.command {
        Command::Catalog(CatalogCmd::List) => c::catalog_list(),
        Command::Catalog(CatalogCmd::Show { id }) => c::catalog_show(id),
        Command::Catalog(CatalogCmd::Export { id, out }) => c::catalog_export(id, out.as_deref()),
        Command::Check(CheckCmd::Jacobi { algebra }) => c::check_jacobi(algebra),
        Command::Invariants { algebra } => c::invariants(algebra),
        Command::Verify(VerifyCmd::Pa { g, n, prod }) => c::verify_pa_cmd(g, n, prod),
        Command::Verify(VerifyCmd::Rb { n, op, weight }) => {
            c::verify_rb_cmd(n, op, weight.as_deref())
        }
        Command::Verify(VerifyCmd::Embedding { g, n, phi }) => c::verify_embedding_cmd(g, n, phi),
        Command::Derive(DeriveCmd::PaFromRb { n, op, weight, out }) => {
            c::derive_pa_from_rb(n, op, weight.as_deref(), out.as_deref())
        }
        Command::Derive(DeriveCmd::Induced { n, prod, out }) => {
            c::derive_induced(n, prod, out.as_deref())
        }
        Command::Derive(DeriveCmd::RbFromDecomposition { n, n1, n2, out }) => {
            c::derive_rb_from_decomposition(n, n1, n2, out.as_deref())
        }
        Command::Search(SearchCmd::Pa {
            g,
            n,
            grid_height,
            budget,
        }) => c::search_pa(g, n, *grid_height, *budget),
        Command::Rules { g, n } => c::rules(g, n),
        Command::Table => c::table(),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() {
                Failure::Usage(String::new()).code()
            } else {
                0
            });
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else {
                print!("{}", out.text);
            }
            std::process::exit(out.code);
        }
        Err(f) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({"error": f.to_string(), "exit": f.code()})
                );
            }
            eprintln!("error: {f}");
            std::process::exit(f.code());
        }
    }
}
