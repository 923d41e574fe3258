//! Input and output documents: grading descriptions, degree sequences and
//! certificate files.
//!
//! A grading document is JSON with keys `group`, `n` and `tuple`:
//!
//! ```json
//! {"group": {"type": "cyclic", "order": 4}, "n": 2, "tuple": ["0", "1"]}
//! ```
//!
//! `group.type` is one of `cyclic` (with `order`), `integers`, `product`
//! (with `factors`, a list of groups) or `cayley` (with `names` and `table`,
//! whose entries are label indices or labels). Tuple entries are element
//! literals as strings or numbers; product elements may also be arrays.
//!
//! Certificates are JSON documents with `"format": "gradeid-certificate/1"`
//! and a `kind` of `equivalence`, `membership`, `membership-bundle` or
//! `non-identity-witness`. Words and polynomials are stored in the text
//! grammar, step cuts are zero-based offsets between letters, term indices
//! refer to the canonical term order of the input polynomial, and witness
//! positions are one-based.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::freealg::{parse_word, GradedPolynomial, Word};
use crate::generic::evaluate;
use crate::grading::GradingSpec;
use crate::groups::{split_top_level, GroupDescriptor, GroupElement};
use crate::rewrite::{
    certify_membership, check_equivalence_certificate, check_membership_certificate, Certification,
    EquivalenceCertificate, Justification, MembershipCertificate, NonIdentityWitness, Pairing,
    Rejection, ResidualTerm, RewriteStep,
};

pub const CERTIFICATE_FORMAT: &str = "gradeid-certificate/1";

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

pub fn parse_grading_document(text: &str) -> Result<GradingSpec> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| doc_err(format!("grading document: {e}")))?;
    let obj = root
        .as_object()
        .ok_or_else(|| doc_err("grading document must be an object"))?;
    let group = parse_group(
        obj.get("group")
            .ok_or_else(|| doc_err("missing key \"group\""))?,
    )?;
    let tuple = obj
        .get("tuple")
        .and_then(Value::as_array)
        .ok_or_else(|| doc_err("missing array \"tuple\""))?
        .iter()
        .map(|v| element_text(v).and_then(|t| group.parse_element(&t)))
        .collect::<Result<Vec<_>>>()?;
    if let Some(n) = obj.get("n") {
        let n = n
            .as_u64()
            .ok_or_else(|| doc_err("\"n\" must be a positive integer"))?;
        if n as usize != tuple.len() {
            return Err(doc_err(format!(
                "\"n\" is {n} but the tuple has {} entries",
                tuple.len()
            )));
        }
    }
    GradingSpec::new(group, tuple)
}

fn element_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        Value::Array(parts) => {
            let inner = parts.iter().map(element_text).collect::<Result<Vec<_>>>()?;
            Ok(format!("({})", inner.join(",")))
        }
        other => Err(doc_err(format!("cannot read a group element from {other}"))),
    }
}

pub fn parse_group(v: &Value) -> Result<GroupDescriptor> {
    let obj = v
        .as_object()
        .ok_or_else(|| doc_err("group must be an object"))?;
    let kind = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| doc_err("group needs a string \"type\""))?;
    match kind {
        "cyclic" => {
            let order = obj
                .get("order")
                .and_then(Value::as_u64)
                .ok_or_else(|| doc_err("cyclic group needs \"order\""))?;
            GroupDescriptor::cyclic(order)
        }
        "integers" => Ok(GroupDescriptor::Integers),
        "product" => {
            let factors = obj
                .get("factors")
                .and_then(Value::as_array)
                .ok_or_else(|| doc_err("product group needs \"factors\""))?
                .iter()
                .map(parse_group)
                .collect::<Result<Vec<_>>>()?;
            GroupDescriptor::product(factors)
        }
        "cayley" => {
            let names: Vec<String> = obj
                .get("names")
                .and_then(Value::as_array)
                .ok_or_else(|| doc_err("cayley group needs \"names\""))?
                .iter()
                .map(|n| {
                    n.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| doc_err("names must be strings"))
                })
                .collect::<Result<_>>()?;
            let rows = obj
                .get("table")
                .and_then(Value::as_array)
                .ok_or_else(|| doc_err("cayley group needs \"table\""))?;
            let table = rows
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| doc_err("table rows must be arrays"))?
                        .iter()
                        .map(|cell| match cell {
                            Value::Number(n) => n
                                .as_u64()
                                .map(|i| i as usize)
                                .ok_or_else(|| doc_err("bad table index")),
                            Value::String(s) => names
                                .iter()
                                .position(|name| name == s)
                                .ok_or_else(|| Error::UnknownLabel(s.clone())),
                            _ => Err(doc_err("table entries must be indices or labels")),
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            GroupDescriptor::cayley(names, table)
        }
        other => Err(Error::InvalidDescriptor(format!(
            "unknown group type {other:?}"
        ))),
    }
}

/// Comma-separated element literals; parenthesized tuples may contain commas.
pub fn parse_degree_sequence(group: &GroupDescriptor, text: &str) -> Result<Vec<GroupElement>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptySequence);
    }
    let parts = split_top_level(trimmed).ok_or_else(|| Error::MalformedElement {
        text: text.into(),
        reason: "unbalanced parentheses".into(),
    })?;
    parts.into_iter().map(|p| group.parse_element(p)).collect()
}

pub fn format_degree_sequence(group: &GroupDescriptor, seq: &[GroupElement]) -> String {
    seq.iter()
        .map(|g| group.format_element(g))
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub rule: String,
    pub at: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceDoc {
    pub start: String,
    pub end: String,
    pub steps: Vec<StepDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingDoc {
    pub keep: usize,
    pub absorb: usize,
    pub certificate: EquivalenceDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualDoc {
    pub term: usize,
    pub word: String,
    pub coefficient: String,
    pub justification: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipDoc {
    pub field: String,
    pub input: String,
    pub pairings: Vec<PairingDoc>,
    pub residual: Vec<ResidualDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDoc {
    pub field: String,
    pub input: String,
    pub components: Vec<MembershipDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub field: String,
    pub input: String,
    pub position: [usize; 2],
    pub entry: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateBody {
    Equivalence(EquivalenceDoc),
    Membership(MembershipDoc),
    MembershipBundle(BundleDoc),
    NonIdentityWitness(WitnessDoc),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub format: String,
    #[serde(flatten)]
    pub body: CertificateBody,
}

impl CertificateFile {
    pub fn new(body: CertificateBody) -> Self {
        CertificateFile {
            format: CERTIFICATE_FORMAT.to_string(),
            body,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap_or_default()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CertificateFile =
            serde_json::from_str(text).map_err(|e| doc_err(format!("certificate: {e}")))?;
        if file.format != CERTIFICATE_FORMAT {
            return Err(doc_err(format!(
                "unsupported certificate format {:?}",
                file.format
            )));
        }
        Ok(file)
    }
}

pub fn equivalence_to_doc(spec: &GradingSpec, cert: &EquivalenceCertificate) -> EquivalenceDoc {
    let g = spec.group();
    EquivalenceDoc {
        start: cert.start.render(g),
        end: cert.end.render(g),
        steps: cert
            .steps
            .iter()
            .map(|s| StepDoc {
                rule: s.rule().to_string(),
                at: s.cuts(),
            })
            .collect(),
    }
}

pub fn equivalence_from_doc(
    spec: &GradingSpec,
    doc: &EquivalenceDoc,
) -> Result<EquivalenceCertificate> {
    Ok(EquivalenceCertificate {
        start: parse_word(&doc.start, spec)?,
        end: parse_word(&doc.end, spec)?,
        steps: doc
            .steps
            .iter()
            .map(|s| RewriteStep::from_cuts(&s.rule, &s.at))
            .collect::<Result<_>>()?,
    })
}

pub fn membership_to_doc(spec: &GradingSpec, cert: &MembershipCertificate) -> MembershipDoc {
    let g = spec.group();
    let field = cert.input.field();
    MembershipDoc {
        field: field.to_string(),
        input: cert.input.render(g),
        pairings: cert
            .pairings
            .iter()
            .map(|p| PairingDoc {
                keep: p.keep,
                absorb: p.absorb,
                certificate: equivalence_to_doc(spec, &p.certificate),
            })
            .collect(),
        residual: cert
            .residual
            .iter()
            .map(|r| {
                let (justification, position) = match r.justification {
                    Justification::EmptyLSet => ("empty-l-set", None),
                    Justification::NonSupportDegree { position } => {
                        ("non-support-degree", Some(position))
                    }
                };
                ResidualDoc {
                    term: r.term,
                    word: r.word.render(g),
                    coefficient: field.format_coefficient(&r.coefficient),
                    justification: justification.to_string(),
                    position,
                }
            })
            .collect(),
    }
}

pub fn parse_field(text: &str) -> Result<Field> {
    text.parse::<Field>()
}

pub fn membership_from_doc(
    spec: &GradingSpec,
    doc: &MembershipDoc,
) -> Result<MembershipCertificate> {
    let field = parse_field(&doc.field)?;
    let input = GradedPolynomial::parse(&doc.input, spec, field)?;
    let pairings = doc
        .pairings
        .iter()
        .map(|p| {
            Ok(Pairing {
                keep: p.keep,
                absorb: p.absorb,
                certificate: equivalence_from_doc(spec, &p.certificate)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let residual = doc
        .residual
        .iter()
        .map(|r| {
            let justification = match (r.justification.as_str(), r.position) {
                ("empty-l-set", None) => Justification::EmptyLSet,
                ("non-support-degree", Some(position)) => {
                    Justification::NonSupportDegree { position }
                }
                (other, _) => {
                    return Err(doc_err(format!(
                        "unknown or incomplete justification {other:?}"
                    )))
                }
            };
            let word: Word = parse_word(&r.word, spec)?;
            let coefficient: BigRational = field.parse_coefficient(&r.coefficient)?;
            Ok(ResidualTerm {
                term: r.term,
                word,
                coefficient,
                justification,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MembershipCertificate {
        input,
        pairings,
        residual,
    })
}

pub fn witness_to_doc(
    spec: &GradingSpec,
    f: &GradedPolynomial,
    w: &NonIdentityWitness,
) -> WitnessDoc {
    WitnessDoc {
        field: f.field().to_string(),
        input: f.render(spec.group()),
        position: [w.position.0 + 1, w.position.1 + 1],
        entry: w.entry.render(spec.group()),
    }
}

/// Certifies every multihomogeneous component of `f`, or returns a witness
/// if `f` is not a graded identity.
pub fn certify_document(spec: &GradingSpec, f: &GradedPolynomial) -> Result<CertificateFile> {
    let value = evaluate(spec, f)?;
    if let Some((&position, entry)) = value.entries().next() {
        let witness = NonIdentityWitness {
            position,
            entry: entry.clone(),
        };
        return Ok(CertificateFile::new(CertificateBody::NonIdentityWitness(
            witness_to_doc(spec, f, &witness),
        )));
    }
    let mut components = Vec::new();
    for part in f.multihomogeneous_components() {
        match certify_membership(spec, &part)? {
            Certification::Certified(c) => components.push(membership_to_doc(spec, &c)),
            // components of a zero evaluation evaluate to zero
            Certification::Refuted(_) => return Err(Error::NotMultihomogeneous),
        }
    }
    Ok(CertificateFile::new(CertificateBody::MembershipBundle(
        BundleDoc {
            field: f.field().to_string(),
            input: f.render(spec.group()),
            components,
        },
    )))
}

fn rejected(reason: impl Into<String>) -> Rejection {
    Rejection {
        step: None,
        reason: reason.into(),
    }
}

/// Checks any certificate file against `spec`. The outer error covers
/// documents that do not parse; the inner one is the checker's verdict.
pub fn verify_certificate(
    spec: &GradingSpec,
    file: &CertificateFile,
) -> Result<std::result::Result<(), Rejection>> {
    match &file.body {
        CertificateBody::Equivalence(doc) => Ok(check_equivalence_certificate(
            spec,
            &equivalence_from_doc(spec, doc)?,
        )),
        CertificateBody::Membership(doc) => {
            let cert = membership_from_doc(spec, doc)?;
            Ok(check_membership_certificate(spec, &cert.input, &cert))
        }
        CertificateBody::MembershipBundle(doc) => {
            let field = parse_field(&doc.field)?;
            let input = GradedPolynomial::parse(&doc.input, spec, field)?;
            let mut total = GradedPolynomial::zero(field);
            for (i, component) in doc.components.iter().enumerate() {
                let cert = membership_from_doc(spec, component)?;
                if cert.input.field() != field {
                    return Ok(Err(rejected(format!(
                        "component {i} uses field {}",
                        cert.input.field()
                    ))));
                }
                if let Err(r) = check_membership_certificate(spec, &cert.input, &cert) {
                    return Ok(Err(Rejection {
                        step: r.step,
                        reason: format!("component {i}: {}", r.reason),
                    }));
                }
                total = total.add(&cert.input)?;
            }
            if total != input {
                return Ok(Err(rejected("components do not sum to the input")));
            }
            Ok(Ok(()))
        }
        CertificateBody::NonIdentityWitness(doc) => {
            let field = parse_field(&doc.field)?;
            let input = GradedPolynomial::parse(&doc.input, spec, field)?;
            let [i, j] = doc.position;
            if i == 0 || j == 0 || i > spec.n() || j > spec.n() {
                return Ok(Err(rejected("witness position out of range")));
            }
            let value = evaluate(spec, &input)?;
            match value.entry((i - 1, j - 1)) {
                Some(entry) if entry.render(spec.group()) == doc.entry => Ok(Ok(())),
                Some(entry) => Ok(Err(rejected(format!(
                    "entry is {} instead of {}",
                    entry.render(spec.group()),
                    doc.entry
                )))),
                None => Ok(Err(rejected("entry at the witness position is zero"))),
            }
        }
    }
}
