// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The `hypercat` command line.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use hypercat_core::complete::{decide_equal, Verdict};
use hypercat_core::diagram::is_isomorphic;
use hypercat_core::semiring::{BigInt, BigRational, GaussianRational, Polynomial};
use hypercat_core::signature::Signature;
use hypercat_core::term::{expand, parse};
use hypercat_core::{DotDiagram, Matrix};
use serde_json::json;

use crate::formats::{DiagramFile, ModelFile, Scalar, SignatureFile};
use crate::graphviz::export_dot;
use crate::report::{replay, ReportFile};

pub const EXIT_EQUAL: i32 = 0;
pub const EXIT_DISTINCT: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SemiringKind {
    Int,
    Rat,
    Gauss,
    Poly,
}

#[derive(Debug, Parser)]
#[command(name = "hypercat", version, about = "Dot-diagrams and their matrix semantics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether two diagram files are isomorphic.
    Iso {
        lhs: PathBuf,
        rhs: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decide whether two terms denote the same morphism.
    Decide {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        dagger: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the canonical expanded form of a term and its diagram.
    Normalize {
        #[arg(long)]
        sig: PathBuf,
        term: String,
        /// Write the diagram file here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate a term or diagram in a model.
    #[command(group(ArgGroup::new("input").required(true).args(["term", "diagram"])))]
    Eval {
        #[arg(long)]
        sig: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        term: Option<String>,
        #[arg(long)]
        diagram: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "int")]
        semiring: SemiringKind,
        /// Require the model to be dagger-compatible.
        #[arg(long)]
        dagger: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Render a term or diagram as a GraphViz document.
    #[command(group(ArgGroup::new("input").required(true).args(["term", "diagram"])))]
    Export {
        #[arg(long)]
        sig: Option<PathBuf>,
        #[arg(long, requires = "sig")]
        term: Option<String>,
        #[arg(long)]
        diagram: Option<PathBuf>,
    },
    /// Re-check a JSON report produced by `decide --format json`.
    Replay {
        report: PathBuf,
    },
}

/// Exit status and captured output of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(status: i32, stdout: String) -> Self {
        Outcome {
            status,
            stdout,
            stderr: String::new(),
        }
    }
}

type Fallible<T> = Result<T, String>;

fn read(path: &Path) -> Fallible<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_signature(path: &Path) -> Fallible<Signature> {
    let file: SignatureFile = serde_json::from_str(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    file.to_signature().map_err(|e| format!("{}: {e}", path.display()))
}

fn load_diagram(path: &Path) -> Fallible<DotDiagram> {
    let file: DiagramFile = serde_json::from_str(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    file.to_diagram().map_err(|e| format!("{}: {e}", path.display()))
}

fn term_diagram(sig: &Signature, text: &str) -> Fallible<DotDiagram> {
    let t = parse(text, sig).map_err(|e| format!("{text:?}: {e}"))?;
    t.to_diagram(sig).map_err(|e| format!("{text:?}: {e}"))
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(&cli.command) {
        Ok(o) => o,
        Err(message) => Outcome {
            status: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

fn dispatch(command: &Command) -> Fallible<Outcome> {
    match command {
        Command::Iso { lhs, rhs, format } => {
            let (a, b) = (load_diagram(lhs)?, load_diagram(rhs)?);
            let found = is_isomorphic(&a, &b);
            let status = if found.is_some() { EXIT_EQUAL } else { EXIT_DISTINCT };
            let out = match (format, &found) {
                (Format::Json, Some(h)) => {
                    json!({"isomorphic": true, "box_map": h.box_map, "dot_map": h.dot_map}).to_string() + "\n"
                }
                (Format::Json, None) => json!({"isomorphic": false}).to_string() + "\n",
                (Format::Text, Some(h)) => format!("isomorphic\nboxes: {:?}\ndots: {:?}\n", h.box_map, h.dot_map),
                (Format::Text, None) => "not isomorphic\n".to_string(),
            };
            Ok(Outcome::ok(status, out))
        }
        Command::Decide {
            sig,
            lhs,
            rhs,
            dagger,
            seed,
            format,
        } => {
            let sig = load_signature(sig)?;
            let (l, r) = (term_diagram(&sig, lhs)?, term_diagram(&sig, rhs)?);
            let report = decide_equal(&sig, &l, &r, *dagger, *seed).map_err(|e| e.to_string())?;
            let file = ReportFile::new(&report, &sig, &l, &r, Some((lhs.clone(), rhs.clone())));
            let status = match report.verdict {
                Verdict::Equal => EXIT_EQUAL,
                Verdict::Distinct => EXIT_DISTINCT,
            };
            let out = match format {
                Format::Json => file.to_json() + "\n",
                Format::Text => file.to_text(),
            };
            Ok(Outcome::ok(status, out))
        }
        Command::Normalize { sig, term, out, format } => {
            let sig = load_signature(sig)?;
            let d = term_diagram(&sig, term)?.canonical();
            let normal = expand(&d);
            let diagram = serde_json::to_string_pretty(&DiagramFile::from_diagram(&d)).expect("serialises");
            if let Some(path) = out {
                fs::write(path, &diagram).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            let text = match (format, out) {
                (Format::Json, _) => {
                    json!({"term": normal.to_string(), "diagram": DiagramFile::from_diagram(&d)}).to_string() + "\n"
                }
                (Format::Text, Some(_)) => format!("{normal}\n"),
                (Format::Text, None) => format!("{normal}\n{diagram}\n"),
            };
            Ok(Outcome::ok(EXIT_EQUAL, text))
        }
        Command::Eval {
            sig,
            model,
            term,
            diagram,
            semiring,
            dagger,
            format,
        } => {
            let sig = load_signature(sig)?;
            let model_file: ModelFile =
                serde_json::from_str(&read(model)?).map_err(|e| format!("{}: {e}", model.display()))?;
            let input = match (term, diagram) {
                (Some(t), _) => Input::Term(t.clone()),
                (None, Some(p)) => Input::Diagram(load_diagram(p)?),
                (None, None) => return Err("one of --term or --diagram is required".into()),
            };
            let text = match semiring {
                SemiringKind::Int => evaluate::<BigInt>(&sig, &model_file, &input, *dagger, *format),
                SemiringKind::Rat => evaluate::<BigRational>(&sig, &model_file, &input, *dagger, *format),
                SemiringKind::Gauss => evaluate::<GaussianRational>(&sig, &model_file, &input, *dagger, *format),
                SemiringKind::Poly => evaluate::<Polynomial>(&sig, &model_file, &input, *dagger, *format),
            }?;
            Ok(Outcome::ok(EXIT_EQUAL, text))
        }
        Command::Export { sig, term, diagram } => {
            let d = match (term, diagram) {
                (Some(t), _) => {
                    let sig = load_signature(sig.as_ref().ok_or("--term needs --sig")?)?;
                    term_diagram(&sig, t)?
                }
                (None, Some(p)) => load_diagram(p)?,
                (None, None) => return Err("one of --term or --diagram is required".into()),
            };
            Ok(Outcome::ok(EXIT_EQUAL, export_dot(&d)))
        }
        Command::Replay { report } => {
            let file = ReportFile::from_json(&read(report)?).map_err(|e| format!("{}: {e}", report.display()))?;
            match replay(&file).map_err(|e| e.to_string())? {
                Verdict::Equal => Ok(Outcome::ok(EXIT_EQUAL, "replayed: equal\n".into())),
                Verdict::Distinct => Ok(Outcome::ok(EXIT_DISTINCT, "replayed: distinct, witness separates\n".into())),
            }
        }
    }
}

enum Input {
    Term(String),
    Diagram(DotDiagram),
}

fn evaluate<R: Scalar>(sig: &Signature, file: &ModelFile, input: &Input, dagger: bool, format: Format) -> Fallible<String> {
    let model = file.to_model::<R>(sig).map_err(|e| e.to_string())?;
    model.validate(sig, dagger).map_err(|e| e.to_string())?;
    let m = match input {
        Input::Term(text) => {
            let t = parse(text, sig).map_err(|e| format!("{text:?}: {e}"))?;
            model.eval_term(&t)
        }
        Input::Diagram(d) => {
            d.validate(sig).map_err(|e| e.to_string())?;
            model.eval_contraction(d)
        }
    }
    .map_err(|e| e.to_string())?;
    Ok(render(&m, format))
}

fn render<R: Scalar>(m: &Matrix<R>, format: Format) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    match format {
        Format::Json => {
            json!({"row_legs": m.row_legs(), "col_legs": m.col_legs(), "entries": rows}).to_string() + "\n"
        }
        Format::Text => {
            let mut out = format!("{} x {} (rows {:?}, columns {:?})\n", m.rows(), m.cols(), m.row_legs(), m.col_legs());
            for row in rows {
                out.push_str(&format!("[{}]\n", row.join(", ")));
            }
            out
        }
    }
}
