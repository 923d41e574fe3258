//! Rewrite certificates.
//!
//! Two swap rules generate congruence of words modulo the basis identities:
//!
//! * neutral swap `p·u·v·q → p·v·u·q` when `α(u) = α(v) = ε` (the commutator
//!   of neutral variables),
//! * conjugate swap `p·u·t·v·q → p·v·t·u·q` when `α(u) = α(v) ≠ ε` and
//!   `α(t) = α(u)^{-1}`.
//!
//! [`derive_equivalence`] turns a common nonzero entry of two words into a
//! sequence of swaps by bringing the target's first letter to the front,
//! stripping it and repeating. [`certify_membership`] cancels the terms of a
//! multihomogeneous identity pairwise with such sequences until only monomial
//! identities remain. The checkers recompute every degree condition and
//! never trust the generator.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::commpoly::CommPolynomial;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freealg::{GradedPolynomial, Word};
use crate::generic::{
    corollary_c2_permutation, evaluate, matching_entry, word_product_closed, Position,
};
use crate::grading::GradingSpec;
use crate::groups::GroupDescriptor;

/// A single swap, with the factorization given by cut positions into the
/// word it applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RewriteStep {
    /// `u = w[start..mid]`, `v = w[mid..end]`.
    NeutralSwap {
        start: usize,
        mid: usize,
        end: usize,
    },
    /// `u = w[start..u_end]`, `t = w[u_end..v_start]`, `v = w[v_start..end]`.
    ConjugateSwap {
        start: usize,
        u_end: usize,
        v_start: usize,
        end: usize,
    },
}

impl RewriteStep {
    pub fn rule(&self) -> &'static str {
        match self {
            RewriteStep::NeutralSwap { .. } => "neutral-swap",
            RewriteStep::ConjugateSwap { .. } => "conjugate-swap",
        }
    }

    pub fn cuts(&self) -> Vec<usize> {
        match *self {
            RewriteStep::NeutralSwap { start, mid, end } => vec![start, mid, end],
            RewriteStep::ConjugateSwap {
                start,
                u_end,
                v_start,
                end,
            } => vec![start, u_end, v_start, end],
        }
    }

    pub fn from_cuts(rule: &str, cuts: &[usize]) -> Result<Self> {
        match (rule, cuts) {
            ("neutral-swap", &[start, mid, end]) => {
                Ok(RewriteStep::NeutralSwap { start, mid, end })
            }
            ("conjugate-swap", &[start, u_end, v_start, end]) => Ok(RewriteStep::ConjugateSwap {
                start,
                u_end,
                v_start,
                end,
            }),
            _ => Err(Error::InvalidStep(format!(
                "unknown rule {rule:?} with {} cuts",
                cuts.len()
            ))),
        }
    }

    fn shifted(self, by: usize) -> Self {
        match self {
            RewriteStep::NeutralSwap { start, mid, end } => RewriteStep::NeutralSwap {
                start: start + by,
                mid: mid + by,
                end: end + by,
            },
            RewriteStep::ConjugateSwap {
                start,
                u_end,
                v_start,
                end,
            } => RewriteStep::ConjugateSwap {
                start: start + by,
                u_end: u_end + by,
                v_start: v_start + by,
                end: end + by,
            },
        }
    }

    /// The step that undoes this one, phrased on the rewritten word.
    pub fn inverse(self) -> Self {
        match self {
            RewriteStep::NeutralSwap { start, mid, end } => RewriteStep::NeutralSwap {
                start,
                mid: start + (end - mid),
                end,
            },
            RewriteStep::ConjugateSwap {
                start,
                u_end,
                v_start,
                end,
            } => {
                let v_len = end - v_start;
                let t_len = v_start - u_end;
                RewriteStep::ConjugateSwap {
                    start,
                    u_end: start + v_len,
                    v_start: start + v_len + t_len,
                    end,
                }
            }
        }
    }
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cuts: Vec<String> = self.cuts().iter().map(|c| c.to_string()).collect();
        write!(f, "{} at [{}]", self.rule(), cuts.join(","))
    }
}

/// Applies a swap after checking the factorization and the degree
/// conditions.
pub fn apply_step(group: &GroupDescriptor, w: &Word, step: &RewriteStep) -> Result<Word> {
    let cuts = step.cuts();
    if cuts.windows(2).any(|c| c[0] > c[1]) || cuts[cuts.len() - 1] > w.len() {
        return Err(Error::InvalidStep(format!(
            "cuts {cuts:?} do not factor a word of length {}",
            w.len()
        )));
    }
    let letters = w.letters();
    match *step {
        RewriteStep::NeutralSwap { start, mid, end } => {
            let (u, v) = (w.slice(start..mid), w.slice(mid..end));
            if u.is_empty() || v.is_empty() {
                return Err(Error::InvalidStep(
                    "neutral-swap needs nonempty u and v".into(),
                ));
            }
            let (du, dv) = (u.degree(group)?, v.degree(group)?);
            if !group.is_identity(&du) {
                return Err(Error::InvalidStep(format!(
                    "neutral-swap: deg(u) = {} is not neutral",
                    group.format_element(&du)
                )));
            }
            if !group.is_identity(&dv) {
                return Err(Error::InvalidStep(format!(
                    "neutral-swap: deg(v) = {} is not neutral",
                    group.format_element(&dv)
                )));
            }
            let mut out = letters[..start].to_vec();
            out.extend_from_slice(v.letters());
            out.extend_from_slice(u.letters());
            out.extend_from_slice(&letters[end..]);
            Ok(Word::new(out))
        }
        RewriteStep::ConjugateSwap {
            start,
            u_end,
            v_start,
            end,
        } => {
            let (u, t, v) = (
                w.slice(start..u_end),
                w.slice(u_end..v_start),
                w.slice(v_start..end),
            );
            if u.is_empty() || v.is_empty() {
                return Err(Error::InvalidStep(
                    "conjugate-swap needs nonempty u and v".into(),
                ));
            }
            let (du, dt, dv) = (u.degree(group)?, t.degree(group)?, v.degree(group)?);
            if du != dv {
                return Err(Error::InvalidStep(format!(
                    "conjugate-swap: deg(u) = {} differs from deg(v) = {}",
                    group.format_element(&du),
                    group.format_element(&dv)
                )));
            }
            if group.is_identity(&du) {
                return Err(Error::InvalidStep(
                    "conjugate-swap: deg(u) is neutral".into(),
                ));
            }
            if dt != group.inverse(&du)? {
                return Err(Error::InvalidStep(format!(
                    "conjugate-swap: deg(t) = {} is not the inverse of deg(u) = {}",
                    group.format_element(&dt),
                    group.format_element(&du)
                )));
            }
            let mut out = letters[..start].to_vec();
            out.extend_from_slice(v.letters());
            out.extend_from_slice(t.letters());
            out.extend_from_slice(u.letters());
            out.extend_from_slice(&letters[end..]);
            Ok(Word::new(out))
        }
    }
}

/// A swap sequence taking `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceCertificate {
    pub start: Word,
    pub steps: Vec<RewriteStep>,
    pub end: Word,
}

/// Why a checker refused a certificate. `step` is the zero-based step (or
/// pairing) index where replay failed, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub step: Option<usize>,
    pub reason: String,
}

impl Rejection {
    fn at(step: usize, reason: impl Into<String>) -> Self {
        Rejection {
            step: Some(step),
            reason: reason.into(),
        }
    }

    fn global(reason: impl Into<String>) -> Self {
        Rejection {
            step: None,
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: {}", self.reason),
            None => write!(f, "{}", self.reason),
        }
    }
}

/// Replays the steps, checking side conditions, that the generic evaluation
/// never changes, and that the final word is `end`.
pub fn check_equivalence_certificate(
    spec: &GradingSpec,
    cert: &EquivalenceCertificate,
) -> std::result::Result<(), Rejection> {
    if cert.start.is_empty() || cert.end.is_empty() {
        return Err(Rejection::global("certificate words must be nonempty"));
    }
    let group = spec.group();
    let eval = |w: &Word| {
        word_product_closed(spec, Field::Rationals, w).map_err(|e| Rejection::global(e.to_string()))
    };
    let reference = eval(&cert.start)?;
    let mut cur = cert.start.clone();
    for (i, step) in cert.steps.iter().enumerate() {
        cur = apply_step(group, &cur, step).map_err(|e| Rejection::at(i, e.to_string()))?;
        if eval(&cur)? != reference {
            return Err(Rejection::at(i, "generic evaluation changed"));
        }
    }
    if cur != cert.end {
        return Err(Rejection::global(format!(
            "replay ends at {} instead of {}",
            cur.render(group),
            cert.end.render(group)
        )));
    }
    if eval(&cert.end)? != reference {
        return Err(Rejection::global("end word evaluates differently"));
    }
    Ok(())
}

/// Builds a swap sequence from `n` to `m`, given that their generic
/// evaluations share a nonzero entry.
pub fn derive_equivalence(
    spec: &GradingSpec,
    m: &Word,
    n: &Word,
) -> Result<EquivalenceCertificate> {
    if !spec.is_distinct() {
        return Err(Error::NonDistinctTuple);
    }
    if matching_entry(spec, m, n)?.is_none() {
        return Err(Error::NoMatchingEntry);
    }
    let group = spec.group();
    let mut front: Vec<RewriteStep> = Vec::new();
    let mut back: Vec<RewriteStep> = Vec::new();
    let (mut cur_n, mut cur_m) = (n.clone(), m.clone());
    let mut offset = 0;
    while !cur_n.is_empty() {
        if cur_n.letters()[0] != cur_m.letters()[0] {
            let entry = matching_entry(spec, &cur_m, &cur_n)?.ok_or(Error::NoMatchingEntry)?;
            let perm = corollary_c2_permutation(spec, &cur_m, &cur_n, entry.position)?;
            let inv = perm.inverse();
            let q = cur_n.len();
            let a = inv[0];
            match (0..q - 1).find(|&r| inv[r] < a && a < inv[r + 1]) {
                Some(r) => {
                    // n = X·Y·Z·rest with X ending at m's r-th letter and Z starting at m's first
                    let (lx, ly, lz) = (inv[r] + 1, a - inv[r] - 1, inv[r + 1] - a);
                    let step = rotate_to_front(group, &cur_n, 0, lx, ly, lz)?;
                    cur_n = apply_step(group, &cur_n, &step)?;
                    front.push(step.shifted(offset));
                }
                None => {
                    // the letters of n before position a are a suffix m[b..] of m
                    let b = q - a;
                    let s0 = perm.sigma[0];
                    debug_assert!((0..a).all(|l| perm.sigma[l] >= b) && s0 >= b);
                    let step = rotate_to_front(group, &cur_m, 0, b, s0 - b, q - s0)?;
                    let rotated = apply_step(group, &cur_m, &step)?;
                    back.push(step.inverse().shifted(offset));
                    cur_m = rotated;
                }
            }
        }
        debug_assert_eq!(cur_n.letters()[0], cur_m.letters()[0]);
        cur_n = cur_n.slice(1..cur_n.len());
        cur_m = cur_m.slice(1..cur_m.len());
        offset += 1;
    }
    front.extend(back.into_iter().rev());
    Ok(EquivalenceCertificate {
        start: n.clone(),
        steps: front,
        end: m.clone(),
    })
}

/// Swap bringing `Z` to the front of `X·Y·Z`, given `α(XY) = α(YZ) = ε`.
fn rotate_to_front(
    group: &GroupDescriptor,
    w: &Word,
    start: usize,
    lx: usize,
    ly: usize,
    lz: usize,
) -> Result<RewriteStep> {
    let (x_end, y_end, z_end) = (start + lx, start + lx + ly, start + lx + ly + lz);
    if ly == 0 {
        return Ok(RewriteStep::NeutralSwap {
            start,
            mid: x_end,
            end: z_end,
        });
    }
    let dx = w.slice(start..x_end).degree(group)?;
    if group.is_identity(&dx) {
        // all three blocks are neutral: swap X·Y with Z
        Ok(RewriteStep::NeutralSwap {
            start,
            mid: y_end,
            end: z_end,
        })
    } else {
        Ok(RewriteStep::ConjugateSwap {
            start,
            u_end: x_end,
            v_start: y_end,
            end: z_end,
        })
    }
}

/// Why a residual term of a membership certificate is zero on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    /// The degree sequence admits no chain of matrix units.
    EmptyLSet,
    /// The letter at `position` has a degree with zero homogeneous component.
    NonSupportDegree { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    /// Term (index into the input's terms) that absorbs the other's coefficient.
    pub keep: usize,
    /// Term that disappears.
    pub absorb: usize,
    /// From the absorbed word to the kept word.
    pub certificate: EquivalenceCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualTerm {
    pub term: usize,
    pub word: Word,
    pub coefficient: BigRational,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub input: GradedPolynomial,
    pub pairings: Vec<Pairing>,
    pub residual: Vec<ResidualTerm>,
}

/// A nonzero entry of the generic evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonIdentityWitness {
    pub position: Position,
    pub entry: CommPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    Certified(MembershipCertificate),
    Refuted(NonIdentityWitness),
}

fn justify(spec: &GradingSpec, w: &Word) -> Option<Justification> {
    let support = spec.support();
    if let Some(position) = w
        .letters()
        .iter()
        .position(|v| !support.contains(&v.degree))
    {
        return Some(Justification::NonSupportDegree { position });
    }
    spec.l_set(&w.degree_sequence())
        .ok()?
        .is_empty()
        .then_some(Justification::EmptyLSet)
}

/// Certifies a multihomogeneous identity or returns a nonzero entry of its
/// generic evaluation.
pub fn certify_membership(spec: &GradingSpec, f: &GradedPolynomial) -> Result<Certification> {
    if !spec.is_distinct() {
        return Err(Error::NonDistinctTuple);
    }
    if !f.is_multihomogeneous() {
        return Err(Error::NotMultihomogeneous);
    }
    if f.terms().any(|(w, _)| w.is_empty()) {
        return Err(Error::EmptyWord);
    }
    let value = evaluate(spec, f)?;
    if let Some((&position, entry)) = value.entries().next() {
        return Ok(Certification::Refuted(NonIdentityWitness {
            position,
            entry: entry.clone(),
        }));
    }

    let field = f.field();
    let mut live: Vec<Option<(Word, BigRational)>> = f
        .terms()
        .map(|(w, c)| Some((w.clone(), c.clone())))
        .collect();
    let mut pairings = Vec::new();
    loop {
        let next = live
            .iter()
            .enumerate()
            .find(|(_, t)| matches!(t, Some((w, _)) if justify(spec, w).is_none()))
            .map(|(i, _)| i);
        let Some(keep) = next else { break };
        let keep_word = live[keep]
            .as_ref()
            .map(|(w, _)| w.clone())
            .unwrap_or_default();
        let mut partner = None;
        for (p, t) in live.iter().enumerate() {
            if let Some((w, _)) = t {
                if p != keep && matching_entry(spec, &keep_word, w)?.is_some() {
                    partner = Some(p);
                    break;
                }
            }
        }
        // a zero evaluation always leaves a partner with the same entry
        let absorb = partner.ok_or(Error::NoMatchingEntry)?;
        let (absorb_word, absorb_coeff) = live[absorb].take().unwrap_or_default();
        let certificate = derive_equivalence(spec, &keep_word, &absorb_word)?;
        if let Some((_, c)) = live[keep].as_mut() {
            *c = field.add(c, &absorb_coeff);
            if c.is_zero() {
                live[keep] = None;
            }
        }
        pairings.push(Pairing {
            keep,
            absorb,
            certificate,
        });
    }
    let residual = live
        .into_iter()
        .enumerate()
        .filter_map(|(term, t)| t.map(|(word, coefficient)| (term, word, coefficient)))
        .map(|(term, word, coefficient)| {
            let justification = justify(spec, &word).ok_or(Error::NoMatchingEntry)?;
            Ok(ResidualTerm {
                term,
                word,
                coefficient,
                justification,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Certification::Certified(MembershipCertificate {
        input: f.clone(),
        pairings,
        residual,
    }))
}

/// Replays a membership certificate against `f`.
pub fn check_membership_certificate(
    spec: &GradingSpec,
    f: &GradedPolynomial,
    cert: &MembershipCertificate,
) -> std::result::Result<(), Rejection> {
    if cert.input != *f {
        return Err(Rejection::global(
            "certificate input differs from the polynomial",
        ));
    }
    let field = f.field();
    let mut live: Vec<Option<(Word, BigRational)>> = f
        .terms()
        .map(|(w, c)| Some((w.clone(), c.clone())))
        .collect();
    for (i, pairing) in cert.pairings.iter().enumerate() {
        let (keep, absorb) = (pairing.keep, pairing.absorb);
        if keep == absorb || keep >= live.len() || absorb >= live.len() {
            return Err(Rejection::at(i, "pairing indices out of range or equal"));
        }
        let (Some((kw, _)), Some((aw, _))) = (&live[keep], &live[absorb]) else {
            return Err(Rejection::at(i, "pairing refers to a cancelled term"));
        };
        if pairing.certificate.start != *aw || pairing.certificate.end != *kw {
            return Err(Rejection::at(
                i,
                "equivalence certificate does not connect the paired terms",
            ));
        }
        check_equivalence_certificate(spec, &pairing.certificate)
            .map_err(|r| Rejection::at(i, format!("equivalence certificate rejected: {r}")))?;
        let (_, absorbed) = live[absorb].take().unwrap_or_default();
        if let Some((_, c)) = live[keep].as_mut() {
            *c = field.add(c, &absorbed);
            if c.is_zero() {
                live[keep] = None;
            }
        }
    }
    let remaining: Vec<(usize, &Word, &BigRational)> = live
        .iter()
        .enumerate()
        .filter_map(|(i, t)| t.as_ref().map(|(w, c)| (i, w, c)))
        .collect();
    let recorded: Vec<(usize, &Word, &BigRational)> = cert
        .residual
        .iter()
        .map(|r| (r.term, &r.word, &r.coefficient))
        .collect();
    if remaining != recorded {
        return Err(Rejection::global(
            "replayed cancellations do not reach the recorded residual",
        ));
    }
    let support = spec.support();
    for r in &cert.residual {
        let ok = match r.justification {
            Justification::NonSupportDegree { position } => {
                position < r.word.len() && !support.contains(&r.word.letters()[position].degree)
            }
            Justification::EmptyLSet => spec
                .l_set(&r.word.degree_sequence())
                .map(|l| l.is_empty())
                .unwrap_or(false),
        };
        if !ok {
            return Err(Rejection::global(format!(
                "residual term {} ({}) is not justified",
                r.term,
                r.word.render(spec.group())
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::GradedVariable;
    use crate::groups::GroupElement;

    fn spec(order: u64, tuple: &[u64]) -> GradingSpec {
        GradingSpec::new(
            GroupDescriptor::cyclic(order).unwrap(),
            tuple.iter().map(|&t| GroupElement::Residue(t)).collect(),
        )
        .unwrap()
    }

    fn w(letters: &[(u64, u32)]) -> Word {
        Word::new(
            letters
                .iter()
                .map(|&(h, i)| GradedVariable::new(GroupElement::Residue(h), i))
                .collect(),
        )
    }

    #[test]
    fn apply_examples() {
        let z2 = spec(2, &[0, 1]);
        let g = z2.group();
        let word = w(&[(1, 1), (1, 2), (1, 3), (1, 4)]);
        let out = apply_step(
            g,
            &word,
            &RewriteStep::NeutralSwap {
                start: 0,
                mid: 2,
                end: 4,
            },
        )
        .unwrap();
        assert_eq!(out, w(&[(1, 3), (1, 4), (1, 1), (1, 2)]));

        let word = w(&[(1, 1), (1, 3), (1, 2)]);
        let out = apply_step(
            g,
            &word,
            &RewriteStep::ConjugateSwap {
                start: 0,
                u_end: 1,
                v_start: 2,
                end: 3,
            },
        )
        .unwrap();
        assert_eq!(out, w(&[(1, 2), (1, 3), (1, 1)]));

        let err = apply_step(
            g,
            &word,
            &RewriteStep::NeutralSwap {
                start: 0,
                mid: 1,
                end: 3,
            },
        )
        .unwrap_err();
        assert!(err.to_string().contains("deg(u)"));
        assert!(apply_step(
            g,
            &word,
            &RewriteStep::NeutralSwap {
                start: 0,
                mid: 2,
                end: 5
            }
        )
        .is_err());
    }

    #[test]
    fn inverse_steps_undo() {
        let z4 = spec(4, &[0, 1, 2, 3]);
        let g = z4.group();
        let word = w(&[(0, 9), (1, 1), (3, 2), (1, 3), (0, 4), (0, 5)]);
        let step = RewriteStep::ConjugateSwap {
            start: 1,
            u_end: 2,
            v_start: 3,
            end: 5,
        };
        let out = apply_step(g, &word, &step).unwrap();
        assert_eq!(apply_step(g, &out, &step.inverse()).unwrap(), word);
        let step = RewriteStep::NeutralSwap {
            start: 1,
            mid: 4,
            end: 5,
        };
        let word = w(&[(0, 9), (1, 1), (1, 2), (2, 3), (0, 4)]);
        let out = apply_step(g, &word, &step).unwrap();
        assert_eq!(apply_step(g, &out, &step.inverse()).unwrap(), word);
    }

    #[test]
    fn derive_examples() {
        let z2 = spec(2, &[0, 1]);
        let m = w(&[(1, 1), (1, 2), (1, 3), (1, 4)]);
        let n = w(&[(1, 3), (1, 4), (1, 1), (1, 2)]);
        let cert = derive_equivalence(&z2, &m, &n).unwrap();
        assert_eq!(cert.steps.len(), 1);
        assert_eq!(cert.steps[0].rule(), "neutral-swap");
        assert_eq!(check_equivalence_certificate(&z2, &cert), Ok(()));

        let cert = derive_equivalence(&z2, &m, &m).unwrap();
        assert!(cert.steps.is_empty());
        assert_eq!(check_equivalence_certificate(&z2, &cert), Ok(()));

        let m = w(&[(1, 1), (1, 3), (1, 2)]);
        let n = w(&[(1, 2), (1, 3), (1, 1)]);
        let cert = derive_equivalence(&z2, &m, &n).unwrap();
        assert_eq!(
            cert.steps,
            vec![RewriteStep::ConjugateSwap {
                start: 0,
                u_end: 1,
                v_start: 2,
                end: 3
            }]
        );

        assert!(matches!(
            derive_equivalence(&z2, &w(&[(1, 1), (1, 2)]), &w(&[(1, 2), (1, 1)])),
            Err(Error::NoMatchingEntry)
        ));
    }

    #[test]
    fn corrupted_certificate_is_rejected_at_its_step() {
        let z2 = spec(2, &[0, 1]);
        let m = w(&[(1, 1), (1, 2), (1, 3), (1, 4)]);
        let n = w(&[(1, 3), (1, 4), (1, 1), (1, 2)]);
        let mut cert = derive_equivalence(&z2, &m, &n).unwrap();
        cert.steps[0] = RewriteStep::NeutralSwap {
            start: 0,
            mid: 1,
            end: 4,
        };
        let r = check_equivalence_certificate(&z2, &cert).unwrap_err();
        assert_eq!(r.step, Some(0));
        let bad_end = EquivalenceCertificate {
            start: n.clone(),
            steps: vec![],
            end: m,
        };
        assert_eq!(
            check_equivalence_certificate(&z2, &bad_end)
                .unwrap_err()
                .step,
            None
        );
    }

    #[test]
    fn membership_examples() {
        let z2 = spec(2, &[0, 1]);
        let q = Field::Rationals;
        let f =
            GradedPolynomial::parse("x[1;1]*x[1;3]*x[1;2] - x[1;2]*x[1;3]*x[1;1]", &z2, q).unwrap();
        let Certification::Certified(cert) = certify_membership(&z2, &f).unwrap() else {
            panic!()
        };
        assert_eq!(cert.pairings.len(), 1);
        assert!(cert.residual.is_empty());
        assert_eq!(check_membership_certificate(&z2, &f, &cert), Ok(()));

        let z4 = spec(4, &[0, 1]);
        let f = GradedPolynomial::parse("x[1;1]*x[1;2]", &z4, q).unwrap();
        let Certification::Certified(cert) = certify_membership(&z4, &f).unwrap() else {
            panic!()
        };
        assert!(cert.pairings.is_empty());
        assert_eq!(cert.residual.len(), 1);
        assert_eq!(cert.residual[0].justification, Justification::EmptyLSet);
        assert_eq!(check_membership_certificate(&z4, &f, &cert), Ok(()));

        let f = GradedPolynomial::parse("x[1;1]", &z2, q).unwrap();
        let Certification::Refuted(wit) = certify_membership(&z2, &f).unwrap() else {
            panic!()
        };
        assert_eq!(wit.position, (0, 1));
        assert_eq!(wit.entry.render(z2.group()), "y[1;1;1]");

        let f = GradedPolynomial::parse("x[1;1] + x[1;1]*x[1;1]", &z2, q).unwrap();
        assert!(matches!(
            certify_membership(&z2, &f),
            Err(Error::NotMultihomogeneous)
        ));
    }

    #[test]
    fn tampered_membership_certificates() {
        let z4 = spec(4, &[0, 1]);
        let q = Field::Rationals;
        let f = GradedPolynomial::parse("x[1;1]*x[1;2]", &z4, q).unwrap();
        let Certification::Certified(mut cert) = certify_membership(&z4, &f).unwrap() else {
            panic!()
        };
        cert.residual[0].justification = Justification::NonSupportDegree { position: 0 };
        assert!(check_membership_certificate(&z4, &f, &cert).is_err());

        // a residual term whose L-set is nonempty
        let g = GradedPolynomial::parse("x[1;1]*x[3;2]", &z4, q).unwrap();
        let fake = MembershipCertificate {
            input: g.clone(),
            pairings: vec![],
            residual: vec![ResidualTerm {
                term: 0,
                word: g.terms().next().unwrap().0.clone(),
                coefficient: BigRational::from_integer(1.into()),
                justification: Justification::EmptyLSet,
            }],
        };
        assert!(check_membership_certificate(&z4, &g, &fake).is_err());

        // replay reaching a different residual
        let z2 = spec(2, &[0, 1]);
        let f =
            GradedPolynomial::parse("x[1;1]*x[1;3]*x[1;2] - x[1;2]*x[1;3]*x[1;1]", &z2, q).unwrap();
        let Certification::Certified(mut cert) = certify_membership(&z2, &f).unwrap() else {
            panic!()
        };
        cert.residual.push(ResidualTerm {
            term: 0,
            word: w(&[(1, 1)]),
            coefficient: BigRational::from_integer(1.into()),
            justification: Justification::EmptyLSet,
        });
        assert!(check_membership_certificate(&z2, &f, &cert).is_err());
    }

    #[test]
    fn coefficients_merge_over_prime_fields() {
        let z2 = spec(2, &[0, 1]);
        let f3 = Field::Prime(3);
        // 1 + 2 = 0 in F3, so x1x2x3x4 - x3x4x1x2 written as x1x2x3x4 + 2 x3x4x1x2
        let f = GradedPolynomial::parse(
            "x[1;1]*x[1;2]*x[1;3]*x[1;4] + 2*x[1;3]*x[1;4]*x[1;1]*x[1;2]",
            &z2,
            f3,
        )
        .unwrap();
        let Certification::Certified(cert) = certify_membership(&z2, &f).unwrap() else {
            panic!()
        };
        assert_eq!(check_membership_certificate(&z2, &f, &cert), Ok(()));
    }
}
