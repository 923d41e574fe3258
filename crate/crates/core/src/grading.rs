//! Elementary gradings of `M_n(K)` induced by a tuple `(g_1, …, g_n)`.
//!
//! Matrix indices are zero-based in this API and rendered one-based in text.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::groups::{GroupDescriptor, GroupElement};

/// A group together with the tuple inducing the grading. `E_ij` has degree
/// `g_i^{-1} g_j`. Repeated tuple entries are allowed here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingSpec {
    group: GroupDescriptor,
    tuple: Vec<GroupElement>,
    /// tuple value -> lowest index carrying it
    position: HashMap<GroupElement, usize>,
}

/// Starting rows that admit a nonzero chain of matrix units with the given
/// degrees, and the row sequence traced by each chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSetResult {
    /// `k -> (s_1, …, s_{q+1})` with `s_1 = k`.
    pub sequences: BTreeMap<usize, Vec<usize>>,
}

impl LSetResult {
    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.sequences.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }
}

/// The three conditions of the neutral-component characterization, each
/// evaluated on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeutralReport {
    pub distinct: bool,
    pub neutral_diagonal: bool,
    pub commutator_identity: bool,
}

impl NeutralReport {
    pub fn consistent(&self) -> bool {
        self.distinct == self.neutral_diagonal && self.neutral_diagonal == self.commutator_identity
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    /// Sizes of the classes of equal tuple entries, in order of first occurrence.
    pub blocks: Vec<usize>,
    pub neutral_dimension: usize,
}

impl GradingSpec {
    pub fn new(group: GroupDescriptor, tuple: Vec<GroupElement>) -> Result<Self> {
        if tuple.is_empty() {
            return Err(Error::InvalidGrading(
                "tuple must have at least one entry".into(),
            ));
        }
        let mut position = HashMap::new();
        for (i, g) in tuple.iter().enumerate() {
            group.check(g)?;
            position.entry(g.clone()).or_insert(i);
        }
        Ok(GradingSpec {
            group,
            tuple,
            position,
        })
    }

    pub fn group(&self) -> &GroupDescriptor {
        &self.group
    }

    pub fn tuple(&self) -> &[GroupElement] {
        &self.tuple
    }

    pub fn n(&self) -> usize {
        self.tuple.len()
    }

    pub fn is_distinct(&self) -> bool {
        self.position.len() == self.tuple.len()
    }

    /// Lowest index `j` with `g_j = value`.
    pub fn position_of(&self, value: &GroupElement) -> Option<usize> {
        self.position.get(value).copied()
    }

    /// Row reached from row `k` by a matrix unit of degree `h`, i.e. the
    /// index of `g_k h` when it lies in the tuple.
    pub fn step(&self, k: usize, h: &GroupElement) -> Option<usize> {
        self.position_of(&self.group.op_unchecked(&self.tuple[k], h))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i + 1,
                n: self.n(),
            })
        }
    }

    pub fn unit_degree(&self, i: usize, j: usize) -> Result<GroupElement> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.unit_degree_unchecked(i, j))
    }

    fn unit_degree_unchecked(&self, i: usize, j: usize) -> GroupElement {
        let inv = self.group.inverse_unchecked(&self.tuple[i]);
        self.group.op_unchecked(&inv, &self.tuple[j])
    }

    /// Degrees with a nonzero homogeneous component, ascending.
    pub fn support(&self) -> BTreeSet<GroupElement> {
        self.degree_table().into_iter().flatten().collect()
    }

    pub fn degree_table(&self) -> Vec<Vec<GroupElement>> {
        (0..self.n())
            .map(|i| {
                (0..self.n())
                    .map(|j| self.unit_degree_unchecked(i, j))
                    .collect()
            })
            .collect()
    }

    pub fn component_dimension(&self, g: &GroupElement) -> Result<usize> {
        self.group.check(g)?;
        Ok(self
            .degree_table()
            .iter()
            .flatten()
            .filter(|d| *d == g)
            .count())
    }

    /// Dimensions of all nonzero components.
    pub fn component_dimensions(&self) -> BTreeMap<GroupElement, usize> {
        let mut dims = BTreeMap::new();
        for d in self.degree_table().into_iter().flatten() {
            *dims.entry(d).or_insert(0) += 1;
        }
        dims
    }

    /// The set associated with a degree sequence, computed by following each
    /// starting row forward. With repeated tuple entries the chain moves to
    /// the lowest index carrying the required value.
    pub fn l_set(&self, hseq: &[GroupElement]) -> Result<LSetResult> {
        if hseq.is_empty() {
            return Err(Error::EmptySequence);
        }
        for h in hseq {
            self.group.check(h)?;
        }
        Ok(self.l_set_unchecked(hseq))
    }

    pub(crate) fn l_set_unchecked(&self, hseq: &[GroupElement]) -> LSetResult {
        let mut sequences = BTreeMap::new();
        'rows: for k in 0..self.n() {
            let mut seq = Vec::with_capacity(hseq.len() + 1);
            seq.push(k);
            let mut cur = k;
            for h in hseq {
                match self.step(cur, h) {
                    Some(next) => {
                        seq.push(next);
                        cur = next;
                    }
                    None => continue 'rows,
                }
            }
            sequences.insert(k, seq);
        }
        LSetResult { sequences }
    }

    pub fn neutral_report(&self) -> NeutralReport {
        let n = self.n();
        let eps = self.group.identity();
        let neutral_units: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.unit_degree_unchecked(i, j) == eps)
            .collect();
        let neutral_diagonal = neutral_units.iter().all(|&(i, j)| i == j);
        // x1 x2 - x2 x1 is bilinear, so vanishing on all pairs of neutral
        // matrix units decides it
        let commutator_identity = neutral_units.iter().all(|&a| {
            neutral_units
                .iter()
                .all(|&b| unit_product(a, b) == unit_product(b, a))
        });
        NeutralReport {
            distinct: self.is_distinct(),
            neutral_diagonal,
            commutator_identity,
        }
    }

    pub fn neutral_block_structure(&self) -> BlockStructure {
        let mut order: Vec<&GroupElement> = Vec::new();
        let mut counts: HashMap<&GroupElement, usize> = HashMap::new();
        for g in &self.tuple {
            let c = counts.entry(g).or_insert(0);
            if *c == 0 {
                order.push(g);
            }
            *c += 1;
        }
        let blocks: Vec<usize> = order.iter().map(|g| counts[g]).collect();
        let neutral_dimension = blocks.iter().map(|m| m * m).sum();
        BlockStructure {
            blocks,
            neutral_dimension,
        }
    }
}

/// `E_ab E_cd = δ_bc E_ad`.
fn unit_product(a: (usize, usize), b: (usize, usize)) -> Option<(usize, usize)> {
    (a.1 == b.0).then_some((a.0, b.1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_spec(order: u64, tuple: &[u64]) -> GradingSpec {
        GradingSpec::new(
            GroupDescriptor::cyclic(order).unwrap(),
            tuple.iter().map(|&t| GroupElement::Residue(t)).collect(),
        )
        .unwrap()
    }

    fn r(v: u64) -> GroupElement {
        GroupElement::Residue(v)
    }

    #[test]
    fn unit_degrees() {
        let s = cyclic_spec(4, &[0, 1]);
        assert_eq!(s.unit_degree(0, 1).unwrap(), r(1));
        assert_eq!(s.unit_degree(1, 0).unwrap(), r(3));
        assert_eq!(s.unit_degree(1, 1).unwrap(), r(0));
        assert!(matches!(
            s.unit_degree(2, 0),
            Err(Error::IndexOutOfRange { index: 3, n: 2 })
        ));
    }

    #[test]
    fn supports() {
        assert_eq!(
            cyclic_spec(4, &[0, 1]).support(),
            [r(0), r(1), r(3)].into_iter().collect()
        );
        assert_eq!(
            cyclic_spec(2, &[0, 1]).support(),
            [r(0), r(1)].into_iter().collect()
        );
        assert_eq!(cyclic_spec(5, &[3]).support(), [r(0)].into_iter().collect());
    }

    #[test]
    fn component_dimensions() {
        let s = cyclic_spec(4, &[0, 1]);
        assert_eq!(s.component_dimension(&r(0)).unwrap(), 2);
        assert_eq!(s.component_dimension(&r(1)).unwrap(), 1);
        assert_eq!(s.component_dimension(&r(2)).unwrap(), 0);
        assert_eq!(s.component_dimensions().values().sum::<usize>(), 4);
        assert_eq!(
            cyclic_spec(2, &[0, 0]).component_dimension(&r(0)).unwrap(),
            4
        );
        assert!(s.component_dimension(&r(7)).is_err());
    }

    #[test]
    fn l_sets() {
        let s = cyclic_spec(4, &[0, 1]);
        let l = s.l_set(&[r(1)]).unwrap();
        assert_eq!(l.sequences, BTreeMap::from([(0, vec![0, 1])]));
        assert!(s.l_set(&[r(1), r(1)]).unwrap().is_empty());
        assert!(matches!(s.l_set(&[]), Err(Error::EmptySequence)));

        let z2 = cyclic_spec(2, &[0, 1]);
        let l = z2.l_set(&[r(1), r(1), r(1)]).unwrap();
        assert_eq!(
            l.sequences,
            BTreeMap::from([(0, vec![0, 1, 0, 1]), (1, vec![1, 0, 1, 0])])
        );
    }

    #[test]
    fn neutral_reports() {
        let all = NeutralReport {
            distinct: true,
            neutral_diagonal: true,
            commutator_identity: true,
        };
        let none = NeutralReport {
            distinct: false,
            neutral_diagonal: false,
            commutator_identity: false,
        };
        assert_eq!(cyclic_spec(2, &[0, 1]).neutral_report(), all);
        assert_eq!(cyclic_spec(2, &[0, 0]).neutral_report(), none);
        assert_eq!(cyclic_spec(3, &[1]).neutral_report(), all);
    }

    #[test]
    fn block_structures() {
        let b = cyclic_spec(2, &[0, 0, 1]).neutral_block_structure();
        assert_eq!(b.blocks, vec![2, 1]);
        assert_eq!(b.neutral_dimension, 5);
        let b = cyclic_spec(5, &[0, 1, 2]).neutral_block_structure();
        assert_eq!((b.blocks, b.neutral_dimension), (vec![1, 1, 1], 3));
        let b = cyclic_spec(5, &[4, 4, 4]).neutral_block_structure();
        assert_eq!((b.blocks, b.neutral_dimension), (vec![3], 9));
    }

    #[test]
    fn empty_tuple_rejected() {
        assert!(GradingSpec::new(GroupDescriptor::Integers, vec![]).is_err());
        assert!(GradingSpec::new(GroupDescriptor::cyclic(2).unwrap(), vec![r(2)]).is_err());
    }
}
