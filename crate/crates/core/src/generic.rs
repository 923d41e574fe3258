//! Generic matrices over the commutative ring of the `y[h;i;k]` and the
//! evaluation of graded polynomials on them.
//!
//! The generic matrix of `x[h;i]` carries `y[h;i;k]` at `(k, j)` for every
//! row `k` where `g_k h = g_j` is in the tuple. A word evaluates to one
//! monomial per surviving starting row, which [`word_product_closed`] writes
//! down directly from the row sequences of [`GradingSpec::l_set`].

use std::collections::BTreeMap;

use crate::commpoly::{CommMonomial, CommPolynomial, YVariable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freealg::{GradedPolynomial, Word};
use crate::grading::GradingSpec;
use crate::groups::{GroupDescriptor, GroupElement};

pub type Position = (usize, usize);

/// A sparse `n × n` matrix with polynomial entries. Zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericMatrix {
    n: usize,
    field: Field,
    entries: BTreeMap<Position, CommPolynomial>,
}

impl GenericMatrix {
    pub fn zero(n: usize, field: Field) -> Self {
        GenericMatrix {
            n,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, pos: Position) -> Option<&CommPolynomial> {
        self.entries.get(&pos)
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (&Position, &CommPolynomial)> {
        self.entries.iter()
    }

    pub fn set(&mut self, pos: Position, value: CommPolynomial) {
        if value.is_zero() {
            self.entries.remove(&pos);
        } else {
            self.entries.insert(pos, value);
        }
    }

    fn accumulate(&mut self, pos: Position, value: &CommPolynomial) -> Result<()> {
        let sum = match self.entries.get(&pos) {
            Some(old) => old.add(value)?,
            None => value.clone(),
        };
        self.set(pos, sum);
        Ok(())
    }

    pub fn add(&self, other: &GenericMatrix) -> Result<GenericMatrix> {
        let mut out = self.clone();
        for (&pos, v) in &other.entries {
            out.accumulate(pos, v)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &GenericMatrix) -> Result<GenericMatrix> {
        let mut out = GenericMatrix::zero(self.n, self.field);
        for (&(i, k), a) in &self.entries {
            for (&(_, j), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                out.accumulate((i, j), &a.mul(b)?)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &num_rational::BigRational) -> Result<GenericMatrix> {
        let mut out = GenericMatrix::zero(self.n, self.field);
        for (&pos, v) in &self.entries {
            out.set(pos, v.scalar_mul(c)?);
        }
        Ok(out)
    }

    /// `(i,j): polynomial` lines, one-based, row-major; `0` for the zero matrix.
    pub fn render(&self, group: &GroupDescriptor) -> String {
        if self.entries.is_empty() {
            return "0".into();
        }
        self.entries
            .iter()
            .map(|(&(i, j), p)| format!("({},{}): {}", i + 1, j + 1, p.render(group)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The generic matrix of the variable `x[h;i]`.
pub fn generic_matrix(
    spec: &GradingSpec,
    field: Field,
    h: &GroupElement,
    i: u32,
) -> Result<GenericMatrix> {
    spec.group().check(h)?;
    let mut out = GenericMatrix::zero(spec.n(), field);
    for k in 0..spec.n() {
        if let Some(j) = spec.step(k, h) {
            out.set(
                (k, j),
                CommPolynomial::variable(field, YVariable::new(h.clone(), i, k)),
            );
        }
    }
    Ok(out)
}

/// Left-to-right product of the letters' generic matrices.
pub fn word_product_direct(spec: &GradingSpec, field: Field, w: &Word) -> Result<GenericMatrix> {
    let (first, rest) = w.letters().split_first().ok_or(Error::EmptyWord)?;
    let mut acc = generic_matrix(spec, field, &first.degree, first.index)?;
    for v in rest {
        acc = acc.mul(&generic_matrix(spec, field, &v.degree, v.index)?)?;
    }
    Ok(acc)
}

/// The same product assembled from the row sequences: for every `k` in the
/// L-set, the monomial `∏ y[h_l; i_l; s_l]` sits at `(k, s_{q+1})`.
pub fn word_product_closed(spec: &GradingSpec, field: Field, w: &Word) -> Result<GenericMatrix> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let lset = spec.l_set(&w.degree_sequence())?;
    let mut out = GenericMatrix::zero(spec.n(), field);
    for (&k, rows) in &lset.sequences {
        let mono = CommMonomial::from_factors(
            w.letters()
                .iter()
                .zip(rows)
                .map(|(v, &row)| YVariable::new(v.degree.clone(), v.index, row)),
        );
        out.set((k, rows[w.len()]), CommPolynomial::monomial(field, mono));
    }
    Ok(out)
}

/// `f(A_1, …, A_k)` in the coefficient field of `f`.
pub fn evaluate(spec: &GradingSpec, f: &GradedPolynomial) -> Result<GenericMatrix> {
    let mut out = GenericMatrix::zero(spec.n(), f.field());
    for (w, c) in f.terms() {
        let m = word_product_closed(spec, f.field(), w)?.scale(c)?;
        out = out.add(&m)?;
    }
    Ok(out)
}

/// Whether `f` vanishes on generic matrices, i.e. is a graded identity of
/// `M_n(K)` for an infinite field `K` of the characteristic of `f`'s field.
/// Only defined for tuples with pairwise distinct entries.
pub fn is_graded_identity(spec: &GradingSpec, f: &GradedPolynomial) -> Result<bool> {
    if !spec.is_distinct() {
        return Err(Error::NonDistinctTuple);
    }
    Ok(evaluate(spec, f)?.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingEntry {
    pub position: Position,
    pub monomial: CommMonomial,
}

/// The first position (row-major) where both words evaluate to the same
/// nonzero monomial.
pub fn matching_entry(spec: &GradingSpec, m: &Word, n: &Word) -> Result<Option<MatchingEntry>> {
    let a = word_product_closed(spec, Field::Rationals, m)?;
    let b = word_product_closed(spec, Field::Rationals, n)?;
    for (&pos, p) in a.entries() {
        if let (Some(mono), Some(q)) = (p.as_monomial(), b.entry(pos)) {
            if q.as_monomial() == Some(mono) {
                return Ok(Some(MatchingEntry {
                    position: pos,
                    monomial: mono.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// A permutation `σ` with `n[l] = m[σ(l)]` (zero-based) and the prefix
/// degree check `α(n[..l]) = α(m[..σ(l)])` for every `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationReport {
    pub sigma: Vec<usize>,
    pub prefix_degrees_agree: Vec<bool>,
}

impl PermutationReport {
    pub fn all_hold(&self) -> bool {
        self.prefix_degrees_agree.iter().all(|&b| b)
    }

    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.sigma.len()];
        for (l, &s) in self.sigma.iter().enumerate() {
            inv[s] = l;
        }
        inv
    }
}

/// Recovers the permutation relating two words whose evaluations share the
/// entry at `position`. Each letter of a word contributes the factor
/// `y[h;i;row]` where `row` is where the chain stands when the letter is
/// read; `σ` matches these factors, taking the least free index each time,
/// which gives the lexicographically least valid `σ`.
pub fn corollary_c2_permutation(
    spec: &GradingSpec,
    m: &Word,
    n: &Word,
    position: Position,
) -> Result<PermutationReport> {
    if m.is_empty() || n.is_empty() {
        return Err(Error::EmptyWord);
    }
    if m.len() != n.len() {
        return Err(Error::NoPermutation);
    }
    let rows_of = |w: &Word| -> Result<Vec<usize>> {
        let lset = spec.l_set(&w.degree_sequence())?;
        let rows = lset
            .sequences
            .get(&position.0)
            .ok_or(Error::NoPermutation)?;
        if rows[w.len()] != position.1 {
            return Err(Error::NoPermutation);
        }
        Ok(rows.clone())
    };
    let rows_m = rows_of(m)?;
    let rows_n = rows_of(n)?;
    let mut used = vec![false; m.len()];
    let mut sigma = Vec::with_capacity(n.len());
    for (l, letter) in n.letters().iter().enumerate() {
        let j = (0..m.len())
            .find(|&j| !used[j] && m.letters()[j] == *letter && rows_m[j] == rows_n[l])
            .ok_or(Error::NoPermutation)?;
        used[j] = true;
        sigma.push(j);
    }
    let group = spec.group();
    let prefix_degrees_agree = sigma
        .iter()
        .enumerate()
        .map(|(l, &s)| Ok(n.slice(0..l).degree(group)? == m.slice(0..s).degree(group)?))
        .collect::<Result<Vec<bool>>>()?;
    Ok(PermutationReport {
        sigma,
        prefix_degrees_agree,
    })
}
