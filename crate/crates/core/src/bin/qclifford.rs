use clap::{Parser, Subcommand, ValueEnum};
use qclifford::coeff::Point;
use qclifford::hecke::HeckeContext;
use qclifford::report::Report;
use qclifford::session::Session;
use qclifford::suites::{self, Config, Target};
use qclifford::versor::Eps;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qclifford", version, about = "Exact checks for q-Clifford algebras and Hecke representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Text => "txt",
            Format::Json => "json",
        }
    }

    fn render(self, r: &Report) -> String {
        match self {
            Format::Text => r.to_text(),
            Format::Json => r.to_json(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: hecke, young, versor, clifford-kernel or all.
    Verify {
        target: Target,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Sign convention for the adjoint, +1 or -1.
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        eps: Eps,
        /// Specialize at a point, e.g. `q=2,l=3`, `s=1/2,l=1` or `q=root(1+q)`.
        #[arg(long)]
        at: Option<String>,
        /// Replace B by its symmetric part.
        #[arg(long)]
        symmetrize_b: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for `<suite>-n<n>.<ext>` when --out is not given.
        #[arg(long, env = "QCLIFFORD_REPORT_DIR")]
        report_dir: Option<PathBuf>,
    },
    /// Evaluate an expression in the algebra for the given n.
    Eval {
        expr: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        at: Option<String>,
    },
    /// Re-render a saved JSON report.
    Report {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Verify { target, n, eps, at, symmetrize_b, format, out, report_dir } => {
            let point = at.as_deref().map(Point::parse).transpose()?;
            let report = suites::run(&Config { target, n, eps, point, symmetrize_b })?;
            let text = format.render(&report);
            let path = out.or_else(|| report_dir.map(|d| d.join(format!("{}-n{n}.{}", target.name(), format.ext()))));
            match path {
                Some(p) => {
                    if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                        std::fs::create_dir_all(dir)?;
                    }
                    std::fs::write(&p, text)?;
                    let s = &report.summary;
                    eprintln!(
                        "{}: {} passed, {} failed, {} expected failures",
                        p.display(),
                        s.pass,
                        s.fail,
                        s.expected_fail
                    );
                }
                None => print!("{text}"),
            }
            Ok(report.exit_code() as u8)
        }
        Command::Eval { expr, n, at } => {
            let ctx = match at.as_deref().map(Point::parse).transpose()? {
                Some(p) => {
                    let scope = if n == 2 { Target::All } else { Target::Hecke };
                    suites::check_point(scope, n, &p)?;
                    HeckeContext::at(n, &p)?
                }
                None => HeckeContext::new(n)?,
            };
            match Session::new(ctx).eval(&expr) {
                Ok(v) => {
                    println!("{v}");
                    Ok(0)
                }
                Err(qclifford::Error::Parse { pos, msg }) => {
                    eprintln!("{expr}");
                    eprintln!("{}^", " ".repeat(pos));
                    eprintln!("parse error at {pos}: {msg}");
                    Ok(2)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Report { path, format } => {
            let report = Report::from_json(&std::fs::read_to_string(&path)?)?;
            print!("{}", format.render(&report));
            Ok(report.exit_code() as u8)
        }
    }
}
