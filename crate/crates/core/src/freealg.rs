//! The free G-graded algebra: graded variables `x[h;i]`, words, polynomials
//! and the textual syntax
//!
//! ```text
//! polynomial  := term (('+' | '-') term)*
//! term        := [coefficient '*'] factor ('*' factor)*
//! factor      := 'x' '[' element ';' integer ']'
//! coefficient := integer | integer '/' integer
//! ```
//!
//! A leading sign on the first term and the literal `0` are also accepted.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::grading::GradingSpec;
use crate::groups::{GroupDescriptor, GroupElement};

/// `x[h;i]`. Variables with different degrees are different even when the
/// index agrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedVariable {
    pub degree: GroupElement,
    pub index: u32,
}

impl GradedVariable {
    pub fn new(degree: GroupElement, index: u32) -> Self {
        GradedVariable { degree, index }
    }

    pub fn render(&self, group: &GroupDescriptor) -> String {
        format!("x[{};{}]", group.format_element(&self.degree), self.index)
    }
}

/// A monomial of the free algebra. Ordered by length, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<GradedVariable>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Multidegree = BTreeMap<GradedVariable, usize>;

impl Word {
    pub fn new(letters: Vec<GradedVariable>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[GradedVariable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// `h(m)`: the sequence of letter degrees.
    pub fn degree_sequence(&self) -> Vec<GroupElement> {
        self.0.iter().map(|v| v.degree.clone()).collect()
    }

    /// `α(m)`: the product of the letter degrees; ε for the empty word.
    pub fn degree(&self, group: &GroupDescriptor) -> Result<GroupElement> {
        group.product_of(self.0.iter().map(|v| &v.degree))
    }

    pub fn multidegree(&self) -> Multidegree {
        let mut md = BTreeMap::new();
        for v in &self.0 {
            *md.entry(v.clone()).or_insert(0) += 1;
        }
        md
    }

    pub fn render(&self, group: &GroupDescriptor) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|v| v.render(group))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A polynomial of the free algebra with coefficients in `field`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPolynomial {
    field: Field,
    terms: BTreeMap<Word, BigRational>,
}

impl GradedPolynomial {
    pub fn zero(field: Field) -> Self {
        GradedPolynomial {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(field: Field, w: Word) -> Self {
        GradedPolynomial {
            field,
            terms: BTreeMap::from([(w, BigRational::one())]),
        }
    }

    /// Builds from `(coefficient, word)` pairs; coefficients are reduced into
    /// the field and like terms merged.
    pub fn from_terms(
        field: Field,
        terms: impl IntoIterator<Item = (BigRational, Word)>,
    ) -> Result<Self> {
        let mut p = GradedPolynomial::zero(field);
        for (c, w) in terms {
            p.add_term(w, field.reduce(&c)?);
        }
        Ok(p)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&w) {
            Some(old) => self.field.add(old, &c),
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigRational::from_integer((-1).into()))?)
    }

    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        let c = self.field.reduce(c)?;
        let mut out = GradedPolynomial::zero(self.field);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), self.field.mul(&c, a));
        }
        Ok(out)
    }

    /// Product in the free algebra (concatenation of words).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let mut out = GradedPolynomial::zero(self.field);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    /// Splits into components of equal multidegree, ordered by multidegree.
    /// The zero polynomial has no components.
    pub fn multihomogeneous_components(&self) -> Vec<GradedPolynomial> {
        let mut parts: BTreeMap<Multidegree, GradedPolynomial> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts
                .entry(w.multidegree())
                .or_insert_with(|| GradedPolynomial::zero(self.field))
                .terms
                .insert(w.clone(), c.clone());
        }
        parts.into_values().collect()
    }

    /// True for zero and for polynomials whose terms share one multidegree.
    pub fn is_multihomogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Word::multidegree);
        match it.next() {
            None => true,
            Some(first) => it.all(|md| md == first),
        }
    }

    /// Every variable occurs at most once in every term, and all terms use
    /// the same variables. Vacuously true for zero.
    pub fn is_multilinear(&self) -> bool {
        self.is_multihomogeneous()
            && self
                .terms
                .keys()
                .all(|w| w.multidegree().values().all(|&c| c == 1))
    }

    pub fn render(&self, group: &GroupDescriptor) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let negative = self.field.is_negative(c);
            let abs = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !abs.is_one() {
                out.push_str(&self.field.format_coefficient(&abs));
                out.push('*');
            }
            out.push_str(&w.render(group));
        }
        out
    }

    pub fn parse(text: &str, spec: &GradingSpec, field: Field) -> Result<Self> {
        Parser {
            src: text,
            pos: 0,
            group: spec.group(),
            field,
        }
        .polynomial()
    }
}

/// Parses a single word with coefficient 1.
pub fn parse_word(text: &str, spec: &GradingSpec) -> Result<Word> {
    let p = GradedPolynomial::parse(text, spec, Field::Rationals)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c.is_one() => Ok(w.clone()),
        _ => Err(Error::Syntax {
            pos: 0,
            reason: "expected a single monomial with coefficient 1".into(),
        }),
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    group: &'a GroupDescriptor,
    field: Field,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn digits(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn polynomial(&mut self) -> Result<GradedPolynomial> {
        let mut out = GradedPolynomial::zero(self.field);
        if self.src.trim() == "0" {
            return Ok(out);
        }
        let mut negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (c, w) = self.term()?;
            let c = if negative { self.field.neg(&c) } else { c };
            out.add_term(w, c);
            match self.peek() {
                None => return Ok(out),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(other) => return Err(self.err(format!("unexpected '{other}'"))),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(BigRational, Word)> {
        let mut coeff = BigRational::one();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            let num = self.digits();
            let text = if self.peek() == Some('/') {
                self.pos += 1;
                let den = self.digits();
                if den.is_empty() {
                    return Err(self.err("expected a denominator"));
                }
                format!("{num}/{den}")
            } else {
                num.to_string()
            };
            coeff = self.field.parse_coefficient(&text).map_err(|e| match e {
                Error::InvalidCoefficient { reason, .. } => Error::InvalidCoefficient {
                    text: format!("{text} (position {start})"),
                    reason,
                },
                other => other,
            })?;
            self.expect('*')?;
        }
        let mut letters = vec![self.factor()?];
        while self.peek() == Some('*') {
            self.pos += 1;
            letters.push(self.factor()?);
        }
        Ok((coeff, Word::new(letters)))
    }

    fn factor(&mut self) -> Result<GradedVariable> {
        self.expect('x')?;
        self.expect('[')?;
        self.skip_ws();
        let start = self.pos;
        let end = self.src[start..]
            .find(';')
            .map(|i| start + i)
            .ok_or_else(|| self.err("expected ';'"))?;
        let literal: String = self.src[start..end]
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        if literal.contains(']') {
            return Err(self.err("expected ';' inside variable"));
        }
        let degree = self.group.parse_element(&literal)?;
        self.pos = end + 1;
        let digits = self.digits();
        let index: u32 = digits
            .parse()
            .map_err(|_| self.err("expected a variable index"))?;
        if index == 0 {
            return Err(self.err("variable indices start at 1"));
        }
        self.expect(']')?;
        Ok(GradedVariable { degree, index })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z4() -> GradingSpec {
        GradingSpec::new(
            GroupDescriptor::cyclic(4).unwrap(),
            vec![GroupElement::Residue(0), GroupElement::Residue(1)],
        )
        .unwrap()
    }

    fn x(h: u64, i: u32) -> GradedVariable {
        GradedVariable::new(GroupElement::Residue(h), i)
    }

    #[test]
    fn word_degrees() {
        let g4 = GroupDescriptor::cyclic(4).unwrap();
        let g2 = GroupDescriptor::cyclic(2).unwrap();
        assert_eq!(Word::empty().degree(&g4).unwrap(), GroupElement::Residue(0));
        assert_eq!(
            Word::new(vec![x(1, 1), x(1, 2)]).degree(&g2).unwrap(),
            GroupElement::Residue(0)
        );
        assert_eq!(
            Word::new(vec![x(1, 1), x(3, 2), x(1, 3)])
                .degree(&g4)
                .unwrap(),
            GroupElement::Residue(1)
        );
    }

    #[test]
    fn degree_sequences() {
        let r = GroupElement::Residue;
        assert_eq!(
            Word::new(vec![x(1, 1), x(3, 2)]).degree_sequence(),
            vec![r(1), r(3)]
        );
        assert_eq!(Word::empty().degree_sequence(), vec![]);
        assert_eq!(
            Word::new(vec![x(0, 1), x(0, 1)]).degree_sequence(),
            vec![r(0), r(0)]
        );
    }

    #[test]
    fn parse_examples() {
        let spec = z4();
        let p = GradedPolynomial::parse("x[1;1]*x[3;2]", &spec, Field::Rationals).unwrap();
        assert_eq!(
            p,
            GradedPolynomial::from_word(Field::Rationals, Word::new(vec![x(1, 1), x(3, 2)]))
        );

        let p = GradedPolynomial::parse("x[0;1]*x[0;2] - x[0;2]*x[0;1]", &spec, Field::Rationals)
            .unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(
            p.coefficient(&Word::new(vec![x(0, 2), x(0, 1)])),
            BigRational::from_integer((-1).into())
        );

        assert!(matches!(
            GradedPolynomial::parse("x[5;1]", &spec, Field::Rationals),
            Err(Error::ResidueOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_errors_and_coefficients() {
        let spec = z4();
        let q = Field::Rationals;
        let p = GradedPolynomial::parse(" 3/2 * x[1;1] + -0", &spec, q);
        assert!(matches!(p, Err(Error::Syntax { .. })));
        let p = GradedPolynomial::parse("-3/2*x[1;1] + 2 * x [ 1 ; 1 ]", &spec, q).unwrap();
        assert_eq!(
            p.coefficient(&Word::new(vec![x(1, 1)])),
            BigRational::new(1.into(), 2.into())
        );
        assert!(matches!(
            GradedPolynomial::parse("x[1;1", &spec, q),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            GradedPolynomial::parse("x[1;0]", &spec, q),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            GradedPolynomial::parse("y[1;1]", &spec, q),
            Err(Error::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            GradedPolynomial::parse("1/2*x[1;1]", &spec, Field::Prime(3)),
            Err(Error::InvalidCoefficient { .. })
        ));
        assert!(GradedPolynomial::parse("0", &spec, q).unwrap().is_zero());
        let p = GradedPolynomial::parse("4*x[1;1]", &spec, Field::Prime(2)).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn components() {
        let spec = z4();
        let q = Field::Rationals;
        let p = GradedPolynomial::parse("x[0;1]*x[0;2] - x[0;2]*x[0;1]", &spec, q).unwrap();
        assert_eq!(p.multihomogeneous_components(), vec![p.clone()]);
        let p = GradedPolynomial::parse("x[0;1] + x[0;1]*x[0;1]", &spec, q).unwrap();
        assert_eq!(p.multihomogeneous_components().len(), 2);
        let p = GradedPolynomial::parse(
            "x[1;1]*x[3;2] + 2*x[3;2]*x[1;1] - x[1;1] + x[0;1]*x[0;1]*x[1;1] - 5*x[0;1]*x[1;1]*x[0;1]",
            &spec,
            q,
        )
        .unwrap();
        let comps = p.multihomogeneous_components();
        assert_eq!(comps.len(), 3);
        let sum = comps
            .iter()
            .try_fold(GradedPolynomial::zero(q), |acc, c| acc.add(c))
            .unwrap();
        assert_eq!(sum, p);
        assert!(comps.iter().all(GradedPolynomial::is_multihomogeneous));
    }

    #[test]
    fn multilinearity() {
        let spec = z4();
        let q = Field::Rationals;
        assert!(GradedPolynomial::parse("x[1;1]*x[1;2]", &spec, q)
            .unwrap()
            .is_multilinear());
        assert!(!GradedPolynomial::parse("x[1;1]*x[1;1]", &spec, q)
            .unwrap()
            .is_multilinear());
        assert!(GradedPolynomial::zero(q).is_multilinear());
        // x[1;1] and x[3;1] are different variables
        assert!(GradedPolynomial::parse("x[1;1]*x[3;1]", &spec, q)
            .unwrap()
            .is_multilinear());
    }

    #[test]
    fn single_words() {
        let spec = z4();
        assert_eq!(parse_word("x[1;1]*x[0;2]", &spec).unwrap().len(), 2);
        assert!(parse_word("2*x[1;1]", &spec).is_err());
        assert!(parse_word("x[1;1] + x[0;1]", &spec).is_err());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0u64..4, 1u32..4), 0..6)
            .prop_map(|v| Word::new(v.into_iter().map(|(h, i)| x(h, i)).collect()))
    }

    fn arb_poly() -> impl Strategy<Value = GradedPolynomial> {
        prop::collection::vec(
            (
                -4i64..5,
                1i64..4,
                prop::collection::vec((0u64..4, 1u32..4), 1..5),
            ),
            0..5,
        )
        .prop_map(|terms| {
            GradedPolynomial::from_terms(
                Field::Rationals,
                terms.into_iter().map(|(n, d, w)| {
                    (
                        BigRational::new(n.into(), d.into()),
                        Word::new(w.into_iter().map(|(h, i)| x(h, i)).collect()),
                    )
                }),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn degree_is_a_homomorphism(a in arb_word(), b in arb_word()) {
            let g = GroupDescriptor::cyclic(4).unwrap();
            let lhs = a.concat(&b).degree(&g).unwrap();
            let rhs = g.op(&a.degree(&g).unwrap(), &b.degree(&g).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn render_parse_round_trip(p in arb_poly()) {
            let spec = z4();
            let text = p.render(spec.group());
            prop_assert_eq!(GradedPolynomial::parse(&text, &spec, Field::Rationals).unwrap(), p);
        }

        #[test]
        fn components_partition(p in arb_poly()) {
            let comps = p.multihomogeneous_components();
            let sum = comps.iter().try_fold(GradedPolynomial::zero(Field::Rationals), |acc, c| acc.add(c)).unwrap();
            prop_assert_eq!(sum, p);
            let mds: Vec<_> = comps.iter().map(|c| c.terms().next().unwrap().0.multidegree()).collect();
            for (i, a) in mds.iter().enumerate() {
                prop_assert!(mds[i + 1..].iter().all(|b| b != a));
            }
            prop_assert!(comps.iter().all(GradedPolynomial::is_multihomogeneous));
        }
    }
}
