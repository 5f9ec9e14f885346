use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use eqgb::cli::{
    cmd_expand, cmd_gb, cmd_member, cmd_reduce, cmd_verify, cmd_wpo, CommandOutput, FieldDecl,
    OrderDecl, PolyDecl, ProblemFile, WpoFile,
};

/// Equivariant Groebner bases of Inc(N)-stable ideals, with finite-width
/// verification and well-partial-order oracles.
#[derive(Parser)]
#[command(name = "eqgb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the output document here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an equivariant Groebner basis of the generators.
    Gb {
        input: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Reduce a target polynomial modulo the basis; prints remainder and
    /// certificate.
    Reduce {
        input: PathBuf,
        /// JSON file holding the target polynomial (a term list).
        #[arg(long)]
        target: PathBuf,
        /// Treat the generators as an already-computed basis.
        #[arg(long)]
        assume_basis: bool,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Ideal membership of a target polynomial (exit 0 yes, 3 no).
    Member {
        input: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        assume_basis: bool,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// List all images of the generators within a width.
    Expand {
        input: PathBuf,
        #[arg(long)]
        width: u32,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Cross-check the equivariant basis against the classical finite
    /// Buchberger at a width (exit 0 consistent, 3 not).
    Verify {
        input: PathBuf,
        #[arg(long)]
        width: u32,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Decide one of the order relations on a subject file.
    Wpo { subject: PathBuf },
}

#[derive(Args)]
struct Overrides {
    /// Order preset name (`rowlex`, `elim-onefactor`).
    #[arg(long)]
    order: Option<String>,
    /// Coefficient field: `rational` or `prime:P`.
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    max_steps: Option<u64>,
    #[arg(long)]
    max_width: Option<u32>,
    #[arg(long)]
    max_degree: Option<u32>,
    /// Disable Buchberger's coprimality shortcut.
    #[arg(long)]
    no_product_criterion: bool,
}

impl Overrides {
    fn apply(&self, pf: &mut ProblemFile) -> eqgb::Result<()> {
        if let Some(order) = &self.order {
            pf.order = OrderDecl::Preset(order.clone());
        }
        if let Some(field) = &self.field {
            pf.field = parse_field_flag(field)?;
        }
        if self.max_steps.is_some() {
            pf.config.max_steps = self.max_steps;
        }
        if self.max_width.is_some() {
            pf.config.max_width = self.max_width;
        }
        if self.max_degree.is_some() {
            pf.config.max_degree = self.max_degree;
        }
        if self.no_product_criterion {
            pf.config.use_product_criterion = false;
        }
        Ok(())
    }
}

fn parse_field_flag(s: &str) -> eqgb::Result<FieldDecl> {
    if s == "rational" {
        return Ok(FieldDecl::Rational);
    }
    if let Some(p) = s.strip_prefix("prime:") {
        let p = p
            .parse()
            .map_err(|_| eqgb::Error::InvalidProblem(format!("bad prime in --field {s}")))?;
        return Ok(FieldDecl::Prime { p });
    }
    Err(eqgb::Error::InvalidProblem(format!(
        "--field expects `rational` or `prime:P`, got `{s}`"
    )))
}

fn load_problem(path: &PathBuf, overrides: &Overrides) -> eqgb::Result<ProblemFile> {
    let text = std::fs::read_to_string(path)?;
    let mut pf = ProblemFile::parse(&text)?;
    overrides.apply(&mut pf)?;
    Ok(pf)
}

fn load_target(path: &PathBuf) -> eqgb::Result<PolyDecl> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(eqgb::Error::from)
}

fn run(cli: &Cli) -> eqgb::Result<CommandOutput> {
    match &cli.command {
        Command::Gb { input, overrides } => cmd_gb(&load_problem(input, overrides)?, cli.pretty),
        Command::Reduce { input, target, assume_basis, overrides } => cmd_reduce(
            &load_problem(input, overrides)?,
            &load_target(target)?,
            *assume_basis,
            cli.pretty,
        ),
        Command::Member { input, target, assume_basis, overrides } => cmd_member(
            &load_problem(input, overrides)?,
            &load_target(target)?,
            *assume_basis,
            cli.pretty,
        ),
        Command::Expand { input, width, overrides } => {
            cmd_expand(&load_problem(input, overrides)?, *width, cli.pretty)
        }
        Command::Verify { input, width, overrides } => {
            cmd_verify(&load_problem(input, overrides)?, *width, cli.pretty)
        }
        Command::Wpo { subject } => {
            let text = std::fs::read_to_string(subject)?;
            let file: WpoFile = serde_json::from_str(&text)?;
            cmd_wpo(&file, cli.pretty)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.document).map(|_| ()),
                None => {
                    print!("{}", out.document);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
