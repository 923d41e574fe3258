//! Sparse commutative polynomials in the variables `y[h;i;k]`.
//!
//! Variables are ordered by (degree, generic index, row); monomials are
//! sorted exponent lists compared lexicographically; a polynomial is a
//! `BTreeMap` from monomials to nonzero coefficients, so equal polynomials
//! have identical term lists.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groups::{GroupDescriptor, GroupElement};

/// The commuting variable `y_{h,i}^k`. `row` is zero-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YVariable {
    pub degree: GroupElement,
    pub generic: u32,
    pub row: usize,
}

impl YVariable {
    pub fn new(degree: GroupElement, generic: u32, row: usize) -> Self {
        YVariable {
            degree,
            generic,
            row,
        }
    }

    pub fn render(&self, group: &GroupDescriptor) -> String {
        format!(
            "y[{};{};{}]",
            group.format_element(&self.degree),
            self.generic,
            self.row + 1
        )
    }
}

/// A product of variables with positive exponents, sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CommMonomial(Vec<(YVariable, u32)>);

impl CommMonomial {
    pub fn one() -> Self {
        CommMonomial(Vec::new())
    }

    pub fn var(y: YVariable) -> Self {
        CommMonomial(vec![(y, 1)])
    }

    /// Builds a monomial from factors in any order, merging repeats.
    pub fn from_factors(factors: impl IntoIterator<Item = YVariable>) -> Self {
        let mut map: BTreeMap<YVariable, u32> = BTreeMap::new();
        for y in factors {
            *map.entry(y).or_insert(0) += 1;
        }
        CommMonomial(map.into_iter().collect())
    }

    pub fn factors(&self) -> &[(YVariable, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &CommMonomial) -> CommMonomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((x, ex)), Some((y, ey))) => match x.cmp(y) {
                    std::cmp::Ordering::Less => {
                        out.push((x.clone(), *ex));
                        a.next();
                    }
                    std::cmp::Ordering::Greater => {
                        out.push((y.clone(), *ey));
                        b.next();
                    }
                    std::cmp::Ordering::Equal => {
                        out.push((x.clone(), ex + ey));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    out.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(b.cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        CommMonomial(out)
    }

    pub fn render(&self, group: &GroupDescriptor) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|(y, e)| {
                if *e == 1 {
                    y.render(group)
                } else {
                    format!("{}^{}", y.render(group), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommPolynomial {
    field: Field,
    terms: BTreeMap<CommMonomial, BigRational>,
}

impl CommPolynomial {
    pub fn zero(field: Field) -> Self {
        CommPolynomial {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(field: Field, m: CommMonomial) -> Self {
        CommPolynomial {
            field,
            terms: BTreeMap::from([(m, BigRational::one())]),
        }
    }

    pub fn variable(field: Field, y: YVariable) -> Self {
        Self::monomial(field, CommMonomial::var(y))
    }

    pub fn constant(field: Field, c: &BigRational) -> Result<Self> {
        let mut p = Self::zero(field);
        p.add_term(CommMonomial::one(), field.reduce(c)?);
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

    pub fn terms(&self) -> impl Iterator<Item = (&CommMonomial, &BigRational)> {
        self.terms.iter()
    }

    /// The monomial if this polynomial is exactly one monomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&CommMonomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &CommMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    // `c` must already be reduced into the field
    fn add_term(&mut self, m: CommMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = self.field.add(o.get(), &c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn same_field(&self, other: &CommPolynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ))
        }
    }

    pub fn add(&self, other: &CommPolynomial) -> Result<CommPolynomial> {
        self.same_field(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CommPolynomial) -> Result<CommPolynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CommPolynomial {
        CommPolynomial {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &CommPolynomial) -> Result<CommPolynomial> {
        self.same_field(other)?;
        let mut out = CommPolynomial::zero(self.field);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    /// `c·f`; `c` is reduced into the field first.
    pub fn scalar_mul(&self, c: &BigRational) -> Result<CommPolynomial> {
        let c = self.field.reduce(c)?;
        let mut out = CommPolynomial::zero(self.field);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), self.field.mul(&c, a));
        }
        Ok(out)
    }

    pub fn render(&self, group: &GroupDescriptor) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = self.field.is_negative(c);
            let abs = if negative { -c } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = m.render(group);
            if abs.is_one() {
                out.push_str(&mono);
            } else if m.is_one() {
                out.push_str(&self.field.format_coefficient(&abs));
            } else {
                out.push_str(&format!("{}*{}", self.field.format_coefficient(&abs), mono));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y(h: u64, i: u32, k: usize) -> YVariable {
        YVariable::new(GroupElement::Residue(h), i, k)
    }

    fn group() -> GroupDescriptor {
        GroupDescriptor::cyclic(4).unwrap()
    }

    #[test]
    fn product_of_two_variables() {
        let f = Field::Rationals;
        let a = CommPolynomial::variable(f, y(1, 1, 0));
        let b = CommPolynomial::variable(f, y(1, 2, 1));
        let p = a.mul(&b).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.as_monomial().is_some());
        assert_eq!(p.render(&group()), "y[1;1;1]*y[1;2;2]");
    }

    #[test]
    fn characteristic_two_cancels() {
        let f = Field::Prime(2);
        let a = CommPolynomial::variable(f, y(1, 1, 0));
        assert!(a.add(&a).unwrap().is_zero());
    }

    #[test]
    fn field_mismatch() {
        let a = CommPolynomial::variable(Field::Rationals, y(1, 1, 0));
        let b = CommPolynomial::variable(Field::Prime(3), y(1, 1, 0));
        assert!(matches!(a.add(&b), Err(Error::FieldMismatch(..))));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn rendering() {
        let f = Field::Rationals;
        let a = CommPolynomial::variable(f, y(1, 1, 0));
        let b = CommPolynomial::variable(f, y(0, 2, 1));
        let p = a
            .mul(&a)
            .unwrap()
            .sub(&b.scalar_mul(&BigRational::from_integer(3.into())).unwrap())
            .unwrap();
        assert_eq!(p.render(&group()), "-3*y[0;2;2] + y[1;1;1]^2");
        assert_eq!(CommPolynomial::zero(f).render(&group()), "0");
    }

    fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::Rationals),
            Just(Field::Prime(2)),
            Just(Field::Prime(3)),
            Just(Field::Prime(7))
        ]
    }

    fn arb_poly(field: Field) -> impl Strategy<Value = CommPolynomial> {
        let term = (
            prop::collection::vec((0u64..2, 1u32..3, 0usize..2), 0..3),
            -3i64..4,
        );
        prop::collection::vec(term, 0..4).prop_map(move |terms| {
            let mut p = CommPolynomial::zero(field);
            for (vars, c) in terms {
                let m = CommMonomial::from_factors(vars.into_iter().map(|(h, i, k)| y(h, i, k)));
                let t = CommPolynomial::monomial(field, m)
                    .scalar_mul(&BigRational::from_integer(c.into()))
                    .unwrap();
                p = p.add(&t).unwrap();
            }
            p
        })
    }

    fn arb_triple() -> impl Strategy<Value = (CommPolynomial, CommPolynomial, CommPolynomial)> {
        arb_field().prop_flat_map(|f| (arb_poly(f), arb_poly(f), arb_poly(f)))
    }

    /// Term-by-term expansion of (a + b)·c, independent of `mul`.
    fn expand_sum_times(
        a: &CommPolynomial,
        b: &CommPolynomial,
        c: &CommPolynomial,
    ) -> BTreeMap<CommMonomial, BigRational> {
        let field = a.field();
        let mut acc: BTreeMap<CommMonomial, BigRational> = BTreeMap::new();
        for (m1, c1) in a.terms().chain(b.terms()) {
            for (m2, c2) in c.terms() {
                let e = acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero);
                *e = field.add(e, &field.mul(c1, c2));
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn distributivity_matches_expansion((a, b, c) in arb_triple()) {
            let lhs = a.add(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            let expanded = expand_sum_times(&a, &b, &c);
            let got: BTreeMap<_, _> = lhs.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
            prop_assert_eq!(got, expanded);
        }

        #[test]
        fn ring_axioms((a, b, c) in arb_triple()) {
            let f = a.field();
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            let one = CommPolynomial::constant(f, &BigRational::one()).unwrap();
            prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
            prop_assert_eq!(a.add(&CommPolynomial::zero(f)).unwrap(), a.clone());
            prop_assert!(a.sub(&a).unwrap().is_zero());
        }

        #[test]
        fn characteristic_annihilates(a in arb_poly(Field::Prime(3))) {
            prop_assert!(a.scalar_mul(&BigRational::from_integer(3.into())).unwrap().is_zero());
        }
    }
}
