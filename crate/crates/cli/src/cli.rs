use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ideals3::families::FAMILY_NAMES;

use crate::batch;
use crate::document::{FieldArg, TensorSource};
use crate::error::{CliError, EXIT_NEGATIVE};
use crate::report::{classify, ClassifyOptions, ReportDocument};
use crate::verify::{self, parse_line, parse_plane};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Exact enumeration of the one- and two-dimensional ideals of 3-dimensional algebras.
#[derive(Debug, Parser)]
#[command(name = "ideals3", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Tensor document (JSON).
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    pub input: Option<PathBuf>,

    /// Use a built-in family instead of a document: `NAME` or `"NAME P1 P2 …"`
    /// (parameters separated by spaces or commas).
    #[arg(long, value_name = "NAME [PARAMS]")]
    pub family: Option<String>,

    /// Field of scalars; overrides the document's own `field_mode`.
    #[arg(long, value_enum)]
    pub field: Option<FieldArg>,
}

impl SourceArgs {
    fn source(&self) -> Result<TensorSource, CliError> {
        match (&self.input, &self.family) {
            (_, Some(f)) => TensorSource::family(&split_words(f)),
            (Some(p), None) => Ok(TensorSource::File(p.clone())),
            (None, None) => Err(CliError::Usage("an input document or --family is required".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate all ideals and write a report.
    Classify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Re-verify every output before writing it (exit 3 on failure).
        #[arg(long)]
        check: bool,
        /// Also emit the quotient algebra by the ideal with this index.
        #[arg(long, value_name = "IDEAL_INDEX")]
        quotient: Option<usize>,
        /// Write the report here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Test one subspace (or every ideal of a report) with an exact certificate.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// A line spanned by the vector (a, b, c).
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_hyphen_values = true,
              conflicts_with_all = ["plane", "report"])]
        line: Option<Vec<String>>,
        /// A plane: `I`, `II,x`, `III,x` or `IV,x,y` (commas or spaces).
        #[arg(long, value_name = "TYPE[,PARAMS]", conflicts_with = "report")]
        plane: Option<String>,
        /// Re-verify every ideal listed in a classification report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Classify every document of a directory or manifest.
    Batch {
        /// A directory of `*.json` documents or a manifest file.
        input: PathBuf,
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        check: bool,
        /// Write one `<n>.report.json` per entry into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Print the tensor document of a built-in family, or list the families.
    ///
    /// Options go before the name; everything after it is a parameter.
    Family {
        /// Family name followed by its parameters.
        #[arg(num_args = 0.., allow_hyphen_values = true)]
        spec: Vec<String>,
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
        #[arg(long)]
        list: bool,
    },
}

/// Split a single argument on commas and whitespace.
fn split_words(s: &str) -> Vec<String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(String::from)
        .collect()
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    let written = out
        .write_all(text.as_bytes())
        .and_then(|_| if text.ends_with('\n') { Ok(()) } else { out.write_all(b"\n") });
    match written {
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
    .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, format!("{text}\n")).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn render(report: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Classify {
            source,
            format,
            check,
            quotient,
            output,
        } => {
            let (t, doc) = source.source()?.load(source.field)?;
            let report = classify(&t, doc, &ClassifyOptions { check, quotient })?;
            for n in &report.notes {
                let _ = writeln!(err, "note: {n}");
            }
            let text = render(&report, format);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => emit(out, &text)?,
            }
            Ok(0)
        }
        Command::Verify {
            source,
            format,
            line,
            plane,
            report,
        } => {
            let (t, _) = source.source()?.load(source.field)?;
            let verdicts = match (line, plane, report) {
                (Some(l), _, _) => vec![verify::verify(&t, &parse_line(&l)?)],
                (_, Some(p), _) => vec![verify::verify(&t, &parse_plane(&split_words(&p))?)],
                (_, _, Some(path)) => {
                    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                        path: path.clone(),
                        source,
                    })?;
                    let r = ReportDocument::from_json(&text, &path.display().to_string())?;
                    verify::verify_report(&t, &r)?
                }
                _ => return Err(CliError::Usage("verify needs --line, --plane or --report".into())),
            };
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&verdicts).expect("verdicts serialize"),
                Format::Text => verify::render_text(&verdicts),
            };
            emit(out, &text)?;
            Ok(if verdicts.iter().all(|v| v.passed) { 0 } else { EXIT_NEGATIVE })
        }
        Command::Batch {
            input,
            field,
            format,
            check,
            out_dir,
        } => {
            let entries = batch::read_entries(&input)?;
            let (summary, reports) = batch::run(&entries, field, &ClassifyOptions { check, quotient: None });
            if let Some(dir) = &out_dir {
                std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
                    path: dir.clone(),
                    source,
                })?;
                for (n, r) in reports.iter().enumerate() {
                    if let Ok(r) = r {
                        write_file(&dir.join(format!("{n:04}.report.json")), &r.to_json())?;
                    }
                }
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&summary).expect("summaries serialize"),
                Format::Text => batch::render_text(&summary),
            };
            emit(out, &text)?;
            Ok(if summary.failed == 0 { 0 } else { EXIT_NEGATIVE })
        }
        Command::Family { spec, field, list } => {
            if list || spec.is_empty() {
                let mut text = String::new();
                for (name, params) in FAMILY_NAMES {
                    text.push_str(&format!("{name:<16} {params}\n"));
                }
                emit(out, &text)?;
                return Ok(0);
            }
            let (_, doc) = TensorSource::family(&spec)?.load(field)?;
            emit(out, &doc.to_json())?;
            Ok(0)
        }
    }
}

/// Run a parsed command line; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
