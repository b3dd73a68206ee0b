//! The `ramified` command line.
//!
//! Every subcommand is a thin wrapper over a library call. With
//! `--format json` each result is one JSON object per line, with sorted
//! keys, and element literals in the same syntax the parsers accept.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::closure::verify_generation;
use crate::counting::{card, triangle_brute_row, triangle_rows, verify_tables};
use crate::error::Error;
use crate::normal_form::validate::{validate_normal_forms, NfFamily};
use crate::oeis::{oeis_check, OeisStatus};
use crate::presentation::verify_soundness;
use crate::render::{self, RenderSpec};
use crate::tag::Tag;
use crate::word::{eval, Context, Value, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ramified",
    version,
    about = "Products, normal forms, counting and verification for diagram and ramified monoids"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Refuse to enumerate more than this many elements.
    #[arg(long, default_value_t = 5_000_000, global = true)]
    pub bound: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two literals of the same kind.
    Mul { left: String, right: String },
    /// Evaluate a word in a context (partition, diagram, ramified, phi, or a
    /// presentation context name such as omega).
    Eval {
        context: String,
        word: String,
        #[arg(long)]
        n: usize,
    },
    /// Normal-form word of an element.
    Nf { family: String, literal: String },
    /// List every element of a family.
    Enumerate {
        family: String,
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Cardinality from the closed formulas.
    Count { family: String, n: usize },
    /// Rows 1..=m of the triangle T(m, k).
    Triangle {
        m: usize,
        /// Also count each entry directly and compare.
        #[arg(long)]
        brute: bool,
    },
    /// Check tables, presentations, normal forms or generating sets.
    #[command(subcommand)]
    Verify(Verify),
    /// Draw an element as a text grid, or write an SVG file.
    Render {
        literal: String,
        #[arg(long, value_name = "FILE")]
        svg: Option<std::path::PathBuf>,
    },
    /// Compare counts with an offline sequence fixture.
    Oeis {
        id: String,
        family: String,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Formulas and triangle against the reference tables.
    Tables,
    /// Every relation of a presentation, at every admissible index.
    Presentation { name: String, n: usize },
    /// Round trip and injectivity of a normal form.
    Normalforms { family: String, n: usize },
    /// Closure of the stated generators against the enumeration.
    Generation { family: String, n: usize },
}

/// A failed run: usage problems and computation guards exit with 2.
enum Failure {
    Usage(String),
    Guard(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BoundExceeded { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

struct Out<'a> {
    format: Format,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn emit(&mut self, plain: &str, record: Json) -> std::io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.w, "{plain}"),
            Format::Json => writeln!(self.w, "{record}"),
        }
    }
}

/// Parses `args` (program name first) and runs the command; returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let mut o = Out {
        format: cli.format,
        w: out,
    };
    match execute(&cli, &mut o) {
        Ok(passed) => {
            if passed {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}\n\nFor usage, try `ramified --help`.");
            EXIT_USAGE
        }
        Err(Failure::Guard(m)) => {
            let _ = writeln!(err, "error: computation guard: {m} (raise --bound)");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn tag(s: &str) -> Result<Tag, Failure> {
    Ok(s.parse()?)
}

fn literal(s: &str) -> Result<Value, Failure> {
    Ok(s.parse()?)
}

/// Runs the command; `Ok(false)` for a verification mismatch.
fn execute(cli: &Cli, o: &mut Out) -> Result<bool, Failure> {
    match &cli.command {
        Command::Mul { left, right } => {
            let p = literal(left)?.product(&literal(right)?)?;
            o.emit(
                &p.to_string(),
                json!({"command": "mul", "result": p.to_string()}),
            )?;
        }
        Command::Eval { context, word, n } => {
            let ctx = Context::parse(context)?;
            let w: Word = word.parse()?;
            let v = eval(&w, *n, ctx)?;
            o.emit(
                &v.to_string(),
                json!({"command": "eval", "context": ctx.name(), "n": n,
                       "word": w.to_string(), "result": v.to_string()}),
            )?;
        }
        Command::Nf {
            family,
            literal: lit,
        } => {
            let fam: NfFamily = family.parse()?;
            let x = literal(lit)?;
            if !tag(fam.tag())?.contains(&x) {
                return Err(Error::Membership(fam.tag().to_string()).into());
            }
            let nf = fam.normal_form(&x)?;
            let segments: Vec<Json> = nf
                .segments
                .iter()
                .map(|(name, w)| json!([name, w.to_string()]))
                .collect();
            o.emit(
                &nf.word().to_string(),
                json!({"command": "nf", "family": fam.tag(), "element": x.to_string(),
                       "word": nf.word().to_string(), "segments": segments}),
            )?;
        }
        Command::Enumerate {
            family,
            n,
            count_only,
        } => {
            let t = tag(family)?;
            let all = t.enumerate(*n, cli.bound)?;
            if !count_only {
                for x in &all {
                    let s = x.to_string();
                    o.emit(&s, json!({"family": t.name(), "n": n, "element": s}))?;
                }
            }
            o.emit(
                &all.len().to_string(),
                json!({"command": "enumerate", "family": t.name(), "n": n, "count": all.len()}),
            )?;
        }
        Command::Count { family, n } => {
            let t = tag(family)?;
            let c = card(t, *n)?.to_string();
            o.emit(
                &c,
                json!({"command": "count", "family": t.name(), "n": n, "count": c}),
            )?;
        }
        Command::Triangle { m, brute } => {
            let rows = triangle_rows(*m);
            let mut passed = true;
            for (i, row) in rows.iter().enumerate() {
                let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                let mut record = json!({"command": "triangle", "m": i + 1, "row": vals});
                let mut plain = format!("{}: {}", i + 1, vals.join(" "));
                if *brute {
                    let direct: Vec<String> = triangle_brute_row(i + 1)?
                        .iter()
                        .map(|v| v.to_string())
                        .collect();
                    let agree = direct == vals;
                    passed &= agree;
                    if !agree {
                        plain.push_str(&format!("  direct count differs: {}", direct.join(" ")));
                    }
                    record["direct"] = json!(direct);
                    record["agree"] = json!(agree);
                }
                o.emit(&plain, record)?;
            }
            return Ok(passed);
        }
        Command::Verify(v) => return verify(v, cli.bound, o),
        Command::Render { literal: lit, svg } => {
            let x = literal(lit)?;
            match svg {
                Some(path) => {
                    std::fs::write(path, render::svg(&x, &RenderSpec::default()))?;
                    o.emit(
                        &format!("wrote {}", path.display()),
                        json!({"command": "render", "svg": path.display().to_string()}),
                    )?;
                }
                None => {
                    let t = render::text(&x);
                    o.emit(
                        t.trim_end(),
                        json!({"command": "render", "element": x.to_string(), "text": t}),
                    )?;
                }
            }
        }
        Command::Oeis { id, family, n_max } => {
            let r = oeis_check(id, tag(family)?, *n_max)?;
            let status = match &r.status {
                OeisStatus::Pass => json!("pass"),
                OeisStatus::Skipped => json!("skipped"),
                OeisStatus::Mismatch(ms) => json!(ms
                    .iter()
                    .map(|m| json!({"n": m.n, "expected": m.expected.to_string(),
                                    "got": m.got.to_string()}))
                    .collect::<Vec<_>>()),
            };
            o.emit(
                &r.to_string(),
                json!({"command": "oeis", "id": r.id, "family": r.tag.name(),
                       "compared": r.compared, "status": status}),
            )?;
            return Ok(r.passed());
        }
    }
    Ok(true)
}

fn verify(v: &Verify, bound: usize, o: &mut Out) -> Result<bool, Failure> {
    match v {
        Verify::Tables => {
            let r = verify_tables()?;
            let mismatches: Vec<Json> = r
                .mismatches
                .iter()
                .map(|m| json!({"what": m.what, "expected": m.expected, "got": m.got}))
                .collect();
            o.emit(
                &r.to_string(),
                json!({"command": "verify tables", "cardinalities": r.cardinalities,
                       "triangle_entries": r.triangle_entries, "mismatches": mismatches,
                       "passed": r.passed()}),
            )?;
            Ok(r.passed())
        }
        Verify::Presentation { name, n } => {
            let r = verify_soundness(name, *n)?;
            o.emit(
                &r.to_string(),
                json!({"command": "verify presentation", "name": r.name, "n": r.n,
                       "relations": r.relations, "instances": r.instances,
                       "skipped": r.skipped, "unexercised": r.unexercised,
                       "failures": r.failures, "passed": r.passed()}),
            )?;
            Ok(r.passed())
        }
        Verify::Normalforms { family, n } => {
            let fam: NfFamily = family.parse()?;
            let r = validate_normal_forms(fam, *n, bound)?;
            let ok = r.elements - r.failures.len();
            let plain = if r.passed() {
                format!("{ok}/{} round-trip ok, injective", r.elements)
            } else {
                format!(
                    "{ok}/{} round-trip ok, {} collisions\n{r}",
                    r.elements,
                    r.collisions.len()
                )
            };
            o.emit(
                &plain,
                json!({"command": "verify normalforms", "family": fam.tag(), "n": n,
                       "elements": r.elements, "failures": r.failures,
                       "collisions": r.collisions, "passed": r.passed()}),
            )?;
            Ok(r.passed())
        }
        Verify::Generation { family, n } => {
            let r = verify_generation(tag(family)?, *n, bound)?;
            o.emit(
                &r.to_string(),
                json!({"command": "verify generation", "family": r.tag.name(), "n": r.n,
                       "generators": r.generators, "closure": r.closure,
                       "enumerated": r.enumerated, "missing": r.missing,
                       "extra": r.extra, "passed": r.passed()}),
            )?;
            Ok(r.passed())
        }
    }
}
