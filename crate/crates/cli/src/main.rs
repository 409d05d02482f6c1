use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qhgr_cli::commands::{self, CliError, Output};
use qhgr_cli::config::RunConfig;

#[derive(Parser)]
#[command(name = "qhgr", version, about = "Quantum cohomology of flag varieties and their parabolic gradings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Common {
    /// Root system id, e.g. A2, B3, G2
    system_pos: Option<String>,
    #[arg(long)]
    system: Option<String>,
    /// Parabolic simple roots, 1-based, comma separated
    #[arg(long)]
    parabolic: Option<String>,
    /// Explicit order on the parabolic roots, 1-based
    #[arg(long)]
    order: Option<String>,
    /// markdown, json or csv
    #[arg(long)]
    format: Option<String>,
    /// Write the report (verify) or output to this file
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    max_q: Option<i32>,
    #[arg(long)]
    max_weyl: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// key=value config file; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// Allow E and F types
    #[arg(long)]
    exceptional: bool,
    /// Print the effective config and exit
    #[arg(long)]
    print_config: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Quantum product of two Schubert classes of G/B
    Qprod {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Basis elements of G/B by grading inside a box
    GradingTable {
        #[command(flatten)]
        common: Common,
        /// Ranges lo..hi per coordinate, comma separated
        #[arg(long = "box", allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// All products of Schubert classes up to a length
    MultTable {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Peterson-Woodward lift of a degree of G/P
    Pw {
        #[command(flatten)]
        common: Common,
        /// Degree as i:a,j:b or a full coefficient list
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Quantum product in G/P of two minimal coset representatives
    Qhp {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Run verification suites
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma separated suite names, or all
        #[arg(long, default_value = "all")]
        suites: String,
    },
}

fn build_config(name: &str, c: &Common) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &c.config {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        cfg.merge(&text)?;
    }
    cfg.command = name.into();
    if let (Some(a), Some(b)) = (&c.system_pos, &c.system) {
        if a != b {
            return Err(CliError::Usage(format!("system given twice: {a} and {b}")));
        }
    }
    if let Some(s) = c.system.as_ref().or(c.system_pos.as_ref()) {
        cfg.set("system", s)?;
    }
    if let Some(p) = &c.parabolic {
        cfg.set("parabolic", p)?;
    }
    if let Some(o) = &c.order {
        cfg.set("order", o)?;
    }
    if let Some(f) = &c.format {
        cfg.set("format", f)?;
    }
    if let Some(x) = c.max_q {
        cfg.set("max_q", &x.to_string())?;
    }
    if let Some(x) = c.max_weyl {
        cfg.set("max_weyl", &x.to_string())?;
    }
    if let Some(x) = c.seed {
        cfg.set("seed", &x.to_string())?;
    }
    if let Some(x) = c.samples {
        cfg.set("samples", &x.to_string())?;
    }
    if c.exceptional {
        cfg.exceptional = true;
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<(Output, Option<PathBuf>), CliError> {
    let (name, common) = match &cli.command {
        Command::Qprod { common, .. } => ("qprod", common),
        Command::GradingTable { common, .. } => ("grading-table", common),
        Command::MultTable { common, .. } => ("mult-table", common),
        Command::Pw { common, .. } => ("pw", common),
        Command::Qhp { common, .. } => ("qhp", common),
        Command::Verify { common, .. } => ("verify", common),
    };
    let cfg = build_config(name, common)?;
    if common.print_config {
        return Ok((Output { text: cfg.emit(), ..Default::default() }, None));
    }
    let out = common.out.clone();
    let o = match &cli.command {
        Command::Qprod { u, v, .. } => commands::qprod(&cfg, u, v)?,
        Command::GradingTable { window, .. } => commands::grading_table(&cfg, window.as_deref())?,
        Command::MultTable { max_len, .. } => commands::mult_table(&cfg, *max_len)?,
        Command::Pw { lambda, .. } => commands::pw(&cfg, lambda)?,
        Command::Qhp { u, v, .. } => commands::qhp(&cfg, u, v)?,
        // verify writes the report itself and prints a summary
        Command::Verify { suites, .. } => return Ok((commands::verify(&cfg, suites, out.as_deref())?, None)),
    };
    Ok((o, out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((o, out)) => {
            for w in &o.warnings {
                eprintln!("{w}");
            }
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &o.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", o.text),
            }
            if o.failed {
                eprintln!("verification failed");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
