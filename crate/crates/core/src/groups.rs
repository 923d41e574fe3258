//! Grading groups: cyclic groups, the integers, finite direct products and
//! explicit finite groups given by a validated multiplication table.
//!
//! Elements do not know which group they belong to. Every operation takes the
//! [`GroupDescriptor`] as context and checks membership first.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Description of a grading group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    /// Z/nZ written additively with residues `0..order`.
    Cyclic(u64),
    /// The additive group of the integers.
    Integers,
    /// Direct product, elements are tuples.
    Product(Vec<GroupDescriptor>),
    /// A finite group given by its multiplication table.
    Cayley(CayleyTable),
}

/// An element of some [`GroupDescriptor`].
///
/// The derived ordering compares residues and integers numerically, tuples
/// lexicographically and table elements by label index. Elements of one
/// descriptor always share a variant, so this is a total order per group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    Residue(u64),
    Integer(BigInt),
    Tuple(Vec<GroupElement>),
    Label(usize),
}

/// A multiplication table that passed [`validate_cayley`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

/// The first group axiom a multiplication table fails, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CayleyViolation {
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    RowNotPermutation {
        row: usize,
    },
    ColumnNotPermutation {
        col: usize,
    },
    NoIdentity,
    NoInverse {
        element: usize,
    },
    Associativity {
        a: usize,
        b: usize,
        c: usize,
    },
}

impl CayleyViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            CayleyViolation::EntryOutOfRange { .. } => "closure",
            CayleyViolation::RowNotPermutation { .. }
            | CayleyViolation::ColumnNotPermutation { .. } => "latin-square",
            CayleyViolation::NoIdentity => "identity",
            CayleyViolation::NoInverse { .. } => "inverse",
            CayleyViolation::Associativity { .. } => "associativity",
        }
    }
}

impl fmt::Display for CayleyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CayleyViolation::EntryOutOfRange { row, col, value } => {
                write!(
                    f,
                    "closure: entry ({row},{col}) = {value} is not a label index"
                )
            }
            CayleyViolation::RowNotPermutation { row } => {
                write!(f, "latin-square: row {row} repeats an entry")
            }
            CayleyViolation::ColumnNotPermutation { col } => {
                write!(f, "latin-square: column {col} repeats an entry")
            }
            CayleyViolation::NoIdentity => write!(f, "identity: no two-sided identity element"),
            CayleyViolation::NoInverse { element } => {
                write!(f, "inverse: element {element} has no inverse")
            }
            CayleyViolation::Associativity { a, b, c } => {
                write!(f, "associativity: ({a},{b},{c})")
            }
        }
    }
}

/// Checks whether `table` is the multiplication table of a group on `names`.
///
/// Returns `Ok(Ok(()))` for a group, `Ok(Err(violation))` naming the first
/// failed axiom, and `Err` when the table is not square of the right size.
/// Axioms are checked in the order closure, latin square, identity, inverses,
/// associativity (all `n^3` triples).
pub fn validate_cayley(
    names: &[String],
    table: &[Vec<usize>],
) -> Result<std::result::Result<(), CayleyViolation>> {
    check_dimensions(names, table)?;
    Ok(check_axioms(table).map(|_| ()))
}

fn check_dimensions(names: &[String], table: &[Vec<usize>]) -> Result<()> {
    let n = names.len();
    if table.len() != n {
        return Err(Error::DimensionMismatch {
            rows: table.len(),
            names: n,
        });
    }
    if let Some(row) = table.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            rows: row.len(),
            names: n,
        });
    }
    Ok(())
}

fn check_axioms(table: &[Vec<usize>]) -> std::result::Result<(usize, Vec<usize>), CayleyViolation> {
    let n = table.len();
    for (row, entries) in table.iter().enumerate() {
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(CayleyViolation::EntryOutOfRange { row, col, value });
            }
        }
    }
    for (row, entries) in table.iter().enumerate() {
        let mut seen = vec![false; n];
        for &v in entries {
            if std::mem::replace(&mut seen[v], true) {
                return Err(CayleyViolation::RowNotPermutation { row });
            }
        }
    }
    for col in 0..n {
        let mut seen = vec![false; n];
        for entries in table {
            if std::mem::replace(&mut seen[entries[col]], true) {
                return Err(CayleyViolation::ColumnNotPermutation { col });
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or(CayleyViolation::NoIdentity)?;
    let inverses = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or(CayleyViolation::NoInverse { element: a })
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(CayleyViolation::Associativity { a, b, c });
                }
            }
        }
    }
    Ok((identity, inverses))
}

fn valid_label(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '.' | '\''))
}

impl CayleyTable {
    /// Validates and builds a table. Labels must be distinct, nonempty and
    /// made of alphanumerics, `_`, `.` or `'`.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidDescriptor(
                "cayley table needs at least one element".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if !valid_label(name) {
                return Err(Error::InvalidDescriptor(format!("invalid label {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidDescriptor(format!(
                    "duplicate label {name:?}"
                )));
            }
        }
        check_dimensions(&names, &table)?;
        let (identity, inverses) = check_axioms(&table).map_err(Error::NotAGroup)?;
        Ok(CayleyTable {
            names,
            table,
            identity,
            inverses,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }
}

impl GroupDescriptor {
    pub fn cyclic(order: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidDescriptor(
                "cyclic order must be at least 1".into(),
            ));
        }
        Ok(GroupDescriptor::Cyclic(order))
    }

    pub fn product(factors: Vec<GroupDescriptor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidDescriptor(
                "product needs at least one factor".into(),
            ));
        }
        Ok(GroupDescriptor::Product(factors))
    }

    pub fn cayley(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        CayleyTable::new(names, table).map(GroupDescriptor::Cayley)
    }

    fn mismatch(&self, detail: impl Into<String>) -> Error {
        Error::DescriptorMismatch {
            group: self.to_string(),
            detail: detail.into(),
        }
    }

    /// Membership check.
    pub fn check(&self, a: &GroupElement) -> Result<()> {
        match (self, a) {
            (GroupDescriptor::Cyclic(order), GroupElement::Residue(r)) => {
                if r < order {
                    Ok(())
                } else {
                    Err(Error::ResidueOutOfRange {
                        value: r.to_string(),
                        order: *order,
                    })
                }
            }
            (GroupDescriptor::Integers, GroupElement::Integer(_)) => Ok(()),
            (GroupDescriptor::Product(factors), GroupElement::Tuple(parts)) => {
                if factors.len() != parts.len() {
                    return Err(self.mismatch(format!(
                        "tuple has {} components, expected {}",
                        parts.len(),
                        factors.len()
                    )));
                }
                factors.iter().zip(parts).try_for_each(|(f, p)| f.check(p))
            }
            (GroupDescriptor::Cayley(t), GroupElement::Label(i)) => {
                if *i < t.len() {
                    Ok(())
                } else {
                    Err(self.mismatch(format!("label index {i}")))
                }
            }
            _ => Err(self.mismatch(format!("{a:?}"))),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupDescriptor::Cyclic(_) => GroupElement::Residue(0),
            GroupDescriptor::Integers => GroupElement::Integer(BigInt::zero()),
            GroupDescriptor::Product(factors) => {
                GroupElement::Tuple(factors.iter().map(GroupDescriptor::identity).collect())
            }
            GroupDescriptor::Cayley(t) => GroupElement::Label(t.identity),
        }
    }

    pub fn is_identity(&self, a: &GroupElement) -> bool {
        *a == self.identity()
    }

    /// The group product `a·b`.
    pub fn op(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.op_unchecked(a, b))
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.inverse_unchecked(a))
    }

    /// Product of a sequence, left to right. The empty product is ε.
    pub fn product_of<'a>(
        &self,
        items: impl IntoIterator<Item = &'a GroupElement>,
    ) -> Result<GroupElement> {
        let mut acc = self.identity();
        for x in items {
            acc = self.op(&acc, x)?;
        }
        Ok(acc)
    }

    // Callers guarantee membership.
    pub(crate) fn op_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (
                GroupDescriptor::Cyclic(order),
                GroupElement::Residue(x),
                GroupElement::Residue(y),
            ) => GroupElement::Residue(((*x as u128 + *y as u128) % *order as u128) as u64),
            (GroupDescriptor::Integers, GroupElement::Integer(x), GroupElement::Integer(y)) => {
                GroupElement::Integer(x + y)
            }
            (
                GroupDescriptor::Product(factors),
                GroupElement::Tuple(xs),
                GroupElement::Tuple(ys),
            ) => GroupElement::Tuple(
                factors
                    .iter()
                    .zip(xs.iter().zip(ys))
                    .map(|(f, (x, y))| f.op_unchecked(x, y))
                    .collect(),
            ),
            (GroupDescriptor::Cayley(t), GroupElement::Label(x), GroupElement::Label(y)) => {
                GroupElement::Label(t.table[*x][*y])
            }
            _ => unreachable!("op_unchecked called with foreign elements"),
        }
    }

    pub(crate) fn inverse_unchecked(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GroupDescriptor::Cyclic(order), GroupElement::Residue(x)) => {
                GroupElement::Residue(if *x == 0 { 0 } else { order - x })
            }
            (GroupDescriptor::Integers, GroupElement::Integer(x)) => GroupElement::Integer(-x),
            (GroupDescriptor::Product(factors), GroupElement::Tuple(xs)) => GroupElement::Tuple(
                factors
                    .iter()
                    .zip(xs)
                    .map(|(f, x)| f.inverse_unchecked(x))
                    .collect(),
            ),
            (GroupDescriptor::Cayley(t), GroupElement::Label(x)) => {
                GroupElement::Label(t.inverses[*x])
            }
            _ => unreachable!("inverse_unchecked called with a foreign element"),
        }
    }

    /// Number of elements, or `None` for infinite groups.
    pub fn order(&self) -> Option<u128> {
        match self {
            GroupDescriptor::Cyclic(n) => Some(*n as u128),
            GroupDescriptor::Integers => None,
            GroupDescriptor::Product(factors) => factors
                .iter()
                .try_fold(1u128, |acc, f| f.order().and_then(|o| acc.checked_mul(o))),
            GroupDescriptor::Cayley(t) => Some(t.len() as u128),
        }
    }

    /// All elements in ascending order, for finite groups.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        match self {
            GroupDescriptor::Cyclic(n) => Some((0..*n).map(GroupElement::Residue).collect()),
            GroupDescriptor::Integers => None,
            GroupDescriptor::Product(factors) => {
                let mut acc: Vec<Vec<GroupElement>> = vec![Vec::new()];
                for f in factors {
                    let elems = f.elements()?;
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            elems.iter().map(move |e| {
                                let mut p = prefix.clone();
                                p.push(e.clone());
                                p
                            })
                        })
                        .collect();
                }
                Some(acc.into_iter().map(GroupElement::Tuple).collect())
            }
            GroupDescriptor::Cayley(t) => Some((0..t.len()).map(GroupElement::Label).collect()),
        }
    }

    /// Parses an element literal: a residue or signed integer, a parenthesized
    /// tuple for products, or a label for table groups.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let trimmed = text.trim();
        let malformed = |reason: &str| Error::MalformedElement {
            text: text.to_string(),
            reason: reason.into(),
        };
        match self {
            GroupDescriptor::Cyclic(order) => {
                if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
                    if trimmed.starts_with('-') && trimmed[1..].bytes().all(|b| b.is_ascii_digit())
                    {
                        return Err(Error::ResidueOutOfRange {
                            value: trimmed.into(),
                            order: *order,
                        });
                    }
                    return Err(malformed("expected a nonnegative integer"));
                }
                match trimmed.parse::<u64>() {
                    Ok(v) if v < *order => Ok(GroupElement::Residue(v)),
                    _ => Err(Error::ResidueOutOfRange {
                        value: trimmed.into(),
                        order: *order,
                    }),
                }
            }
            GroupDescriptor::Integers => {
                let digits = trimmed.strip_prefix('-').unwrap_or(trimmed);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed("expected an integer"));
                }
                trimmed
                    .parse::<BigInt>()
                    .map(GroupElement::Integer)
                    .map_err(|_| malformed("expected an integer"))
            }
            GroupDescriptor::Product(factors) => {
                let inner = trimmed
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| malformed("expected a parenthesized tuple"))?;
                let parts =
                    split_top_level(inner).ok_or_else(|| malformed("unbalanced parentheses"))?;
                if parts.len() != factors.len() {
                    return Err(malformed(&format!(
                        "expected {} components, found {}",
                        factors.len(),
                        parts.len()
                    )));
                }
                factors
                    .iter()
                    .zip(parts)
                    .map(|(f, p)| f.parse_element(p))
                    .collect::<Result<Vec<_>>>()
                    .map(GroupElement::Tuple)
            }
            GroupDescriptor::Cayley(t) => t
                .index_of(trimmed)
                .map(GroupElement::Label)
                .ok_or_else(|| Error::UnknownLabel(trimmed.to_string())),
        }
    }

    pub fn format_element(&self, e: &GroupElement) -> String {
        match (self, e) {
            (GroupDescriptor::Product(factors), GroupElement::Tuple(parts)) => {
                let inner: Vec<String> = factors
                    .iter()
                    .zip(parts)
                    .map(|(f, p)| f.format_element(p))
                    .collect();
                format!("({})", inner.join(","))
            }
            (GroupDescriptor::Cayley(t), GroupElement::Label(i)) if *i < t.len() => {
                t.names[*i].clone()
            }
            (_, GroupElement::Residue(r)) => r.to_string(),
            (_, GroupElement::Integer(v)) => v.to_string(),
            (_, GroupElement::Label(i)) => format!("#{i}"),
            (_, GroupElement::Tuple(parts)) => {
                let inner: Vec<String> = parts.iter().map(|p| format!("{p:?}")).collect();
                format!("({})", inner.join(","))
            }
        }
    }
}

impl GroupElement {
    pub fn integer(v: i64) -> Self {
        GroupElement::Integer(BigInt::from(v))
    }

    pub fn is_negative_integer(&self) -> bool {
        matches!(self, GroupElement::Integer(v) if v.is_negative())
    }
}

pub(crate) fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "Z{n}"),
            GroupDescriptor::Integers => write!(f, "Z"),
            GroupDescriptor::Product(factors) => {
                let parts: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupDescriptor::Cayley(t) => write!(f, "table group of order {}", t.len()),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// S3 on labels e, r, r2, s, sr, sr2 with r^3 = s^2 = e and r s = s r^2.
    pub fn s3_table() -> (Vec<String>, Vec<Vec<usize>>) {
        // element (i, j) = s^i r^j, index 3i + j
        let mul = |a: usize, b: usize| {
            let (i1, j1) = (a / 3, a % 3);
            let (i2, j2) = (b / 3, b % 3);
            // s^i1 r^j1 s^i2 r^j2 = s^(i1+i2) r^(±j1 + j2)
            let j1 = if i2 == 1 { (3 - j1) % 3 } else { j1 };
            3 * ((i1 + i2) % 2) + (j1 + j2) % 3
        };
        let names = ["e", "r", "r2", "s", "sr", "sr2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let table = (0..6)
            .map(|a| (0..6).map(|b| mul(a, b)).collect())
            .collect();
        (names, table)
    }

    fn s3() -> GroupDescriptor {
        let (names, table) = s3_table();
        GroupDescriptor::cayley(names, table).unwrap()
    }

    #[test]
    fn cyclic_arithmetic() {
        let g = GroupDescriptor::cyclic(4).unwrap();
        let r = GroupElement::Residue;
        assert_eq!(g.op(&r(1), &r(3)).unwrap(), r(0));
        assert_eq!(g.inverse(&r(3)).unwrap(), r(1));
        assert_eq!(g.identity(), r(0));
        assert!(g.op(&r(4), &r(0)).is_err());
    }

    #[test]
    fn integer_arithmetic() {
        let z = GroupDescriptor::Integers;
        let i = GroupElement::integer;
        assert_eq!(z.op(&i(2), &i(-5)).unwrap(), i(-3));
        assert_eq!(z.inverse(&i(7)).unwrap(), i(-7));
        assert_eq!(z.inverse(&z.identity()).unwrap(), z.identity());
        assert!(z.op(&i(1), &GroupElement::Residue(1)).is_err());
    }

    #[test]
    fn product_identity_and_parse() {
        let c2 = GroupDescriptor::cyclic(2).unwrap();
        let k = GroupDescriptor::product(vec![c2.clone(), c2]).unwrap();
        let r = GroupElement::Residue;
        assert_eq!(k.identity(), GroupElement::Tuple(vec![r(0), r(0)]));
        assert_eq!(
            k.parse_element("(1,0)").unwrap(),
            GroupElement::Tuple(vec![r(1), r(0)])
        );
        assert_eq!(
            k.parse_element(" ( 1 , 0 ) ").unwrap(),
            GroupElement::Tuple(vec![r(1), r(0)])
        );
        assert!(k.parse_element("(1,0,1)").is_err());
        assert!(k.parse_element("1").is_err());
        assert!(GroupDescriptor::product(vec![]).is_err());
    }

    #[test]
    fn nested_products_parse() {
        let c2 = GroupDescriptor::cyclic(2).unwrap();
        let c3 = GroupDescriptor::cyclic(3).unwrap();
        let inner = GroupDescriptor::product(vec![c2, GroupDescriptor::Integers]).unwrap();
        let g = GroupDescriptor::product(vec![inner, c3]).unwrap();
        let e = g.parse_element("((1,-4),2)").unwrap();
        assert_eq!(g.format_element(&e), "((1,-4),2)");
    }

    #[test]
    fn cyclic_parse_errors() {
        let g = GroupDescriptor::cyclic(4).unwrap();
        assert_eq!(g.parse_element("3").unwrap(), GroupElement::Residue(3));
        assert!(matches!(
            g.parse_element("5"),
            Err(Error::ResidueOutOfRange { .. })
        ));
        assert!(matches!(
            g.parse_element("-1"),
            Err(Error::ResidueOutOfRange { .. })
        ));
        assert!(matches!(
            g.parse_element("x"),
            Err(Error::MalformedElement { .. })
        ));
        assert!(GroupDescriptor::cyclic(0).is_err());
    }

    #[test]
    fn s3_table_is_a_group() {
        let (names, table) = s3_table();
        assert_eq!(validate_cayley(&names, &table).unwrap(), Ok(()));
        let g = s3();
        let s = g.parse_element("s").unwrap();
        let sr = g.parse_element("sr").unwrap();
        // two distinct reflections multiply to a nontrivial rotation read off the table
        let prod = g.op(&s, &sr).unwrap();
        let (_, table) = s3_table();
        assert_eq!(prod, GroupElement::Label(table[3][4]));
        assert_eq!(g.format_element(&prod), "r");
        assert!(matches!(g.parse_element("q"), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn z2_table_validates() {
        let names = vec!["e".to_string(), "a".to_string()];
        let table = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(validate_cayley(&names, &table).unwrap(), Ok(()));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let names = vec!["e".to_string(), "a".to_string()];
        assert!(matches!(
            validate_cayley(&names, &[vec![0, 1]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            validate_cayley(&names, &[vec![0, 1], vec![1]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn nonassociative_loop_is_rejected() {
        // smallest loop that is not a group (order 5)
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let names: Vec<String> = ["e", "a", "b", "c", "d"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let verdict = validate_cayley(&names, &table).unwrap();
        let Err(CayleyViolation::Associativity { a, b, c }) = verdict else {
            panic!("expected an associativity violation, got {verdict:?}");
        };
        assert_ne!(table[table[a][b]][c], table[a][table[b][c]]);
        assert_eq!(verdict.unwrap_err().axiom(), "associativity");
    }

    #[test]
    fn other_violations() {
        let names: Vec<String> = ["e", "a"].iter().map(|s| s.to_string()).collect();
        assert_eq!(
            validate_cayley(&names, &[vec![0, 0], vec![1, 0]]).unwrap(),
            Err(CayleyViolation::RowNotPermutation { row: 0 })
        );
        assert_eq!(
            validate_cayley(&names, &[vec![0, 2], vec![1, 0]]).unwrap(),
            Err(CayleyViolation::EntryOutOfRange {
                row: 0,
                col: 1,
                value: 2
            })
        );
        // a*b = -a-b mod 3 is a latin square without identity
        let names3: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let quasi = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        assert_eq!(
            validate_cayley(&names3, &quasi).unwrap(),
            Err(CayleyViolation::NoIdentity)
        );
        assert!(GroupDescriptor::cayley(names3, quasi).is_err());
        assert!(GroupDescriptor::cayley(
            vec!["e".into(), "e".into()],
            vec![vec![0, 1], vec![1, 0]]
        )
        .is_err());
    }

    #[test]
    fn elements_enumerate_in_order() {
        let c2 = GroupDescriptor::cyclic(2).unwrap();
        let c3 = GroupDescriptor::cyclic(3).unwrap();
        let g = GroupDescriptor::product(vec![c2, c3]).unwrap();
        let elems = g.elements().unwrap();
        assert_eq!(elems.len(), 6);
        assert!(elems.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g.order(), Some(6));
        assert_eq!(GroupDescriptor::Integers.elements(), None);
    }
}
