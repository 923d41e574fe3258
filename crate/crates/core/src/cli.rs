//! Command-line front end. [`run`] takes the full argument vector and returns
//! the exit code together with everything that would be printed, so the
//! binary and the tests share one code path.
//!
//! Exit codes: 0 on success, 1 for a negative answer under `--strict`, 2 for
//! usage and input errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::document::{
    certify_document, equivalence_to_doc, format_degree_sequence, parse_degree_sequence,
    parse_grading_document, verify_certificate, CertificateBody, CertificateFile,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freealg::{parse_word, GradedPolynomial};
use crate::generic::{evaluate, GenericMatrix};
use crate::grading::GradingSpec;
use crate::groups::{GroupDescriptor, GroupElement};
use crate::monomials::{
    enumerate_monomial_identities, is_minimal_identity, theoretical_bound, SubsetAutomaton,
};
use crate::rewrite::{apply_step, derive_equivalence};

#[derive(Debug, Parser)]
#[command(
    name = "gradeid",
    version,
    about = "Graded identities of elementary gradings on matrix algebras"
)]
struct Cli {
    /// Coefficient field: q or fp:<prime>
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Emit a JSON document instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 on a negative answer
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Facts about a grading
    Grading {
        #[command(subcommand)]
        action: GradingAction,
    },
    /// Rows admitting a chain of matrix units with the given degrees
    Lset {
        spec: PathBuf,
        /// Comma-separated degrees
        #[arg(long)]
        seq: String,
    },
    /// Evaluate a polynomial on generic matrices
    Eval { spec: PathBuf, poly: PathBuf },
    /// Decide whether a polynomial is a graded identity
    IsIdentity { spec: PathBuf, poly: PathBuf },
    /// List degree sequences whose monomials are identities
    EnumerateMonomials {
        spec: PathBuf,
        #[arg(long)]
        max_len: usize,
        /// Only sequences with no shorter identity inside them
        #[arg(long)]
        minimal: bool,
    },
    /// Shortest monomial identity, found with the subset automaton
    ShortestIdentity { spec: PathBuf },
    /// The two length bounds
    Bounds { spec: PathBuf },
    /// Swap certificate taking the word in N to the word in M
    Equiv {
        spec: PathBuf,
        m: PathBuf,
        n: PathBuf,
        /// Write the certificate here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify an identity component by component, or find a nonzero entry
    Certify {
        spec: PathBuf,
        poly: PathBuf,
        /// Write the certificate here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate file
    CheckCert { spec: PathBuf, cert: PathBuf },
}

#[derive(Debug, Subcommand)]
enum GradingAction {
    /// Degree table, support, component dimensions and neutral component
    Info { spec: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Answer {
    text: String,
    json: Value,
    negative: bool,
}

impl Answer {
    fn positive(text: String, json: Value) -> Self {
        Answer {
            text,
            json,
            negative: false,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(answer) => {
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&answer.json).unwrap_or_default()
            } else {
                answer.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            let code = if cli.strict && answer.negative { 1 } else { 0 };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

fn load_spec(path: &Path) -> Result<GradingSpec> {
    parse_grading_document(&read(path)?)
}

fn load_poly(path: &Path, spec: &GradingSpec, field: Field) -> Result<GradedPolynomial> {
    GradedPolynomial::parse(read(path)?.trim(), spec, field)
}

fn write_out(path: &Option<PathBuf>, file: &CertificateFile) -> Result<()> {
    if let Some(p) = path {
        fs::write(p, file.to_json() + "\n")
            .map_err(|e| Error::Document(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn elements(group: &GroupDescriptor, items: impl IntoIterator<Item = GroupElement>) -> Vec<String> {
    items
        .into_iter()
        .map(|g| group.format_element(&g))
        .collect()
}

fn matrix_json(m: &GenericMatrix, group: &GroupDescriptor) -> Value {
    Value::Array(
        m.entries()
            .map(|(&(i, j), p)| json!({"position": [i + 1, j + 1], "entry": p.render(group)}))
            .collect(),
    )
}

fn execute(cli: &Cli) -> Result<Answer> {
    let field: Field = cli.field.parse()?;
    match &cli.command {
        Command::Grading {
            action: GradingAction::Info { spec },
        } => {
            let (text, json) = grading_report(&load_spec(spec)?);
            Ok(Answer::positive(text, json))
        }
        Command::Lset { spec, seq } => {
            let spec = load_spec(spec)?;
            let g = spec.group();
            let hseq = parse_degree_sequence(g, seq)?;
            let l = spec.l_set(&hseq)?;
            let mut text = format!("sequence: {}\n", format_degree_sequence(g, &hseq));
            if l.is_empty() {
                text.push_str("L-set: empty (the monomial is an identity)\n");
            } else {
                let rows: Vec<String> = l.rows().map(|k| (k + 1).to_string()).collect();
                text.push_str(&format!("L-set: {}\n", rows.join(",")));
                for (k, path) in &l.sequences {
                    let path: Vec<String> = path.iter().map(|s| (s + 1).to_string()).collect();
                    text.push_str(&format!("  {}: {}\n", k + 1, path.join(" -> ")));
                }
            }
            let json = json!({
                "sequence": elements(g, hseq),
                "rows": l.rows().map(|k| k + 1).collect::<Vec<_>>(),
                "paths": l.sequences.values().map(|p| p.iter().map(|s| s + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "monomial_identity": l.is_empty(),
            });
            Ok(Answer::positive(text, json))
        }
        Command::Eval { spec, poly } => {
            let spec = load_spec(spec)?;
            let f = load_poly(poly, &spec, field)?;
            let (text, json) = evaluation_report(&spec, &f)?;
            Ok(Answer::positive(text, json))
        }
        Command::IsIdentity { spec, poly } => {
            let spec = load_spec(spec)?;
            if !spec.is_distinct() {
                return Err(Error::NonDistinctTuple);
            }
            let f = load_poly(poly, &spec, field)?;
            let value = evaluate(&spec, &f)?;
            let g = spec.group();
            let witness = value
                .entries()
                .next()
                .map(|(&(i, j), p)| (i + 1, j + 1, p.render(g)));
            let text = match &witness {
                None => "identity\n".to_string(),
                Some((i, j, p)) => format!("not an identity\nnonzero entry at ({i},{j}): {p}\n"),
            };
            let json = json!({
                "field": field.to_string(),
                "input": f.render(g),
                "identity": witness.is_none(),
                "witness": witness.as_ref().map(|(i, j, p)| json!({"position": [i, j], "entry": p})),
            });
            Ok(Answer {
                text,
                json,
                negative: witness.is_some(),
            })
        }
        Command::EnumerateMonomials {
            spec,
            max_len,
            minimal,
        } => {
            let (text, json) = monomial_report(&load_spec(spec)?, *max_len, *minimal);
            Ok(Answer::positive(text, json))
        }
        Command::ShortestIdentity { spec } => {
            let spec = load_spec(spec)?;
            let g = spec.group();
            let automaton = SubsetAutomaton::build(&spec);
            let shortest = automaton.shortest();
            let text = match &shortest {
                Some(s) => format!("length {}: {}\n", s.len(), format_degree_sequence(g, s)),
                None => "none: the empty row set is unreachable\n".to_string(),
            };
            let text = format!("{text}automaton states: {}\n", automaton.num_states());
            let json = json!({
                "length": shortest.as_ref().map(Vec::len),
                "sequence": shortest.as_ref().map(|s| elements(g, s.iter().cloned())),
                "automaton_states": automaton.num_states(),
            });
            Ok(Answer {
                text,
                json,
                negative: shortest.is_none(),
            })
        }
        Command::Bounds { spec } => {
            let spec = load_spec(spec)?;
            let b = theoretical_bound(&spec);
            let text = format!(
                "support size: {}\nn0: {}\ntheorem bound (n = {}): {}\n",
                b.support_size,
                b.n0,
                spec.n(),
                b.theorem_bound
            );
            let json = json!({
                "support_size": b.support_size,
                "n": spec.n(),
                "n0": b.n0.to_string(),
                "theorem_bound": b.theorem_bound.to_string(),
            });
            Ok(Answer::positive(text, json))
        }
        Command::Equiv { spec, m, n, out } => {
            let spec = load_spec(spec)?;
            let g = spec.group();
            let m = parse_word(read(m)?.trim(), &spec)?;
            let n = parse_word(read(n)?.trim(), &spec)?;
            match derive_equivalence(&spec, &m, &n) {
                Ok(cert) => {
                    let file = CertificateFile::new(CertificateBody::Equivalence(
                        equivalence_to_doc(&spec, &cert),
                    ));
                    write_out(out, &file)?;
                    let mut text = format!("start: {}\n", cert.start.render(g));
                    let mut cur = cert.start.clone();
                    for (i, step) in cert.steps.iter().enumerate() {
                        cur = apply_step(g, &cur, step)?;
                        text.push_str(&format!("  {}. {} -> {}\n", i + 1, step, cur.render(g)));
                    }
                    text.push_str(&format!(
                        "end: {}\nsteps: {}\n",
                        cert.end.render(g),
                        cert.steps.len()
                    ));
                    Ok(Answer::positive(
                        text,
                        serde_json::to_value(&file).unwrap_or(Value::Null),
                    ))
                }
                Err(Error::NoMatchingEntry) => Ok(Answer {
                    text: "no matching entry: the generic evaluations share no nonzero entry\n"
                        .into(),
                    json: json!({"kind": "no-matching-entry", "start": n.render(g), "end": m.render(g)}),
                    negative: true,
                }),
                Err(e) => Err(e),
            }
        }
        Command::Certify { spec, poly, out } => {
            let spec = load_spec(spec)?;
            if !spec.is_distinct() {
                return Err(Error::NonDistinctTuple);
            }
            let f = load_poly(poly, &spec, field)?;
            let file = certify_document(&spec, &f)?;
            write_out(out, &file)?;
            let json = serde_json::to_value(&file).unwrap_or(Value::Null);
            match &file.body {
                CertificateBody::MembershipBundle(b) => {
                    let mut text = format!("certified: {} component(s)\n", b.components.len());
                    for (i, c) in b.components.iter().enumerate() {
                        text.push_str(&format!(
                            "  {}. {} pairing(s), {} residual term(s): {}\n",
                            i + 1,
                            c.pairings.len(),
                            c.residual.len(),
                            c.input
                        ));
                    }
                    Ok(Answer::positive(text, json))
                }
                CertificateBody::NonIdentityWitness(w) => Ok(Answer {
                    text: format!(
                        "not an identity\nnonzero entry at ({},{}): {}\n",
                        w.position[0], w.position[1], w.entry
                    ),
                    json,
                    negative: true,
                }),
                _ => Err(Error::Document("unexpected certificate kind".into())),
            }
        }
        Command::CheckCert { spec, cert } => {
            let spec = load_spec(spec)?;
            let file = CertificateFile::from_json(&read(cert)?)?;
            let kind = match &file.body {
                CertificateBody::Equivalence(_) => "equivalence",
                CertificateBody::Membership(_) => "membership",
                CertificateBody::MembershipBundle(_) => "membership-bundle",
                CertificateBody::NonIdentityWitness(_) => "non-identity-witness",
            };
            let verdict = verify_certificate(&spec, &file)?;
            let text = match &verdict {
                Ok(()) => format!("accepted ({kind})\n"),
                Err(r) => format!("rejected ({kind}): {r}\n"),
            };
            let json = json!({
                "kind": kind,
                "accepted": verdict.is_ok(),
                "step": verdict.as_ref().err().and_then(|r| r.step),
                "reason": verdict.as_ref().err().map(|r| r.reason.clone()),
            });
            Ok(Answer {
                text,
                json,
                negative: verdict.is_err(),
            })
        }
    }
}

/// Text and JSON for `grading info`.
pub fn grading_report(spec: &GradingSpec) -> (String, Value) {
    let g = spec.group();
    let table: Vec<Vec<String>> = spec
        .degree_table()
        .into_iter()
        .map(|row| elements(g, row))
        .collect();
    let width = table.iter().flatten().map(String::len).max().unwrap_or(1);
    let support = elements(g, spec.support());
    let dims = spec.component_dimensions();
    let report = spec.neutral_report();
    let blocks = spec.neutral_block_structure();

    let mut text = format!(
        "group: {}\nn: {}\ntuple: {}\ndegree table:\n",
        g,
        spec.n(),
        format_degree_sequence(g, spec.tuple())
    );
    for row in &table {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        text.push_str(&format!("  {}\n", cells.join(" ")));
    }
    text.push_str(&format!("support: {}\ndimensions:\n", support.join(" ")));
    for (d, k) in &dims {
        text.push_str(&format!("  {}: {}\n", g.format_element(d), k));
    }
    text.push_str(&format!(
        "neutral report: distinct={} neutral-diagonal={} commutator-identity={} consistent={}\n",
        report.distinct,
        report.neutral_diagonal,
        report.commutator_identity,
        report.consistent()
    ));
    let sizes: Vec<String> = blocks.blocks.iter().map(usize::to_string).collect();
    text.push_str(&format!(
        "neutral blocks: {} (neutral component dimension {})\n",
        sizes.join(","),
        blocks.neutral_dimension
    ));

    let json = json!({
        "group": g.to_string(),
        "n": spec.n(),
        "tuple": elements(g, spec.tuple().iter().cloned()),
        "degree_table": table,
        "support": support,
        "dimensions": dims.iter().map(|(d, k)| json!({"degree": g.format_element(d), "dimension": k})).collect::<Vec<_>>(),
        "neutral_report": {
            "distinct": report.distinct,
            "neutral_diagonal": report.neutral_diagonal,
            "commutator_identity": report.commutator_identity,
            "consistent": report.consistent(),
        },
        "neutral_blocks": {"blocks": blocks.blocks, "neutral_dimension": blocks.neutral_dimension},
    });
    (text, json)
}

/// Text and JSON for `eval`.
pub fn evaluation_report(spec: &GradingSpec, f: &GradedPolynomial) -> Result<(String, Value)> {
    let value = evaluate(spec, f)?;
    let g = spec.group();
    let text = format!("input: {}\n{}", f.render(g), value.render(g));
    let json = json!({
        "field": f.field().to_string(),
        "input": f.render(g),
        "zero": value.is_zero(),
        "entries": matrix_json(&value, g),
    });
    Ok((text, json))
}

/// Text and JSON for `enumerate-monomials`.
pub fn monomial_report(spec: &GradingSpec, max_len: usize, minimal: bool) -> (String, Value) {
    let g = spec.group();
    let all = enumerate_monomial_identities(spec, max_len, false);
    let minimal_list: Vec<_> = all
        .iter()
        .filter(|s| is_minimal_identity(spec, s))
        .cloned()
        .collect();
    let listed = if minimal { &minimal_list } else { &all };
    let bounds = theoretical_bound(spec);
    let mut text = String::new();
    for s in listed {
        text.push_str(&format_degree_sequence(g, s));
        text.push('\n');
    }
    text.push_str(&format!(
        "# max-len {}: {} sequences, {} minimal; support size {}, n0 = {}, theorem bound = {}\n",
        max_len,
        all.len(),
        minimal_list.len(),
        bounds.support_size,
        bounds.n0,
        bounds.theorem_bound
    ));
    let json = json!({
        "max_len": max_len,
        "minimal_only": minimal,
        "sequences": listed.iter().map(|s| elements(g, s.iter().cloned())).collect::<Vec<_>>(),
        "count": all.len(),
        "minimal_count": minimal_list.len(),
        "bounds": {
            "support_size": bounds.support_size,
            "n0": bounds.n0.to_string(),
            "theorem_bound": bounds.theorem_bound.to_string(),
        },
    });
    (text, json)
}
