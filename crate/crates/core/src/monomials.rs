//! Monomial graded identities.
//!
//! A word is an identity exactly when its degree sequence has an empty
//! L-set, so everything here works on degree sequences. The subset automaton
//! tracks the set of rows a chain can currently stand on: it starts from all
//! rows, moves each row `j` to the index of `g_j h` (dropping rows that leave
//! the tuple), and accepts at the empty set.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;

use crate::error::Result;
use crate::grading::GradingSpec;
use crate::groups::GroupElement;

/// A nonempty degree sequence over the support.
pub type DegreeSequence = Vec<GroupElement>;

/// Set of rows, sorted.
pub type RowSet = Vec<usize>;

pub fn is_monomial_identity(spec: &GradingSpec, hseq: &[GroupElement]) -> Result<bool> {
    Ok(spec.l_set(hseq)?.is_empty())
}

/// The reachable part of the subset automaton over the support alphabet.
#[derive(Debug, Clone)]
pub struct SubsetAutomaton {
    alphabet: Vec<GroupElement>,
    states: Vec<RowSet>,
    /// `transitions[state][letter]`
    transitions: Vec<Vec<usize>>,
    /// Shortest number of letters leading to the empty state, if any.
    distance_to_empty: Vec<Option<usize>>,
    /// BFS parent pointers from the initial state: (previous state, letter).
    parent: Vec<Option<(usize, usize)>>,
}

pub fn transition(spec: &GradingSpec, state: &[usize], h: &GroupElement) -> RowSet {
    let set: BTreeSet<usize> = state.iter().filter_map(|&j| spec.step(j, h)).collect();
    set.into_iter().collect()
}

impl SubsetAutomaton {
    pub fn build(spec: &GradingSpec) -> Self {
        let alphabet: Vec<GroupElement> = spec.support().into_iter().collect();
        let initial: RowSet = (0..spec.n()).collect();
        let mut index: HashMap<RowSet, usize> = HashMap::from([(initial.clone(), 0)]);
        let mut states = vec![initial];
        let mut parent = vec![None];
        let mut transitions: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            let mut row = Vec::with_capacity(alphabet.len());
            for (a, h) in alphabet.iter().enumerate() {
                let next = transition(spec, &states[s], h);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = states.len();
                        index.insert(next.clone(), id);
                        states.push(next);
                        parent.push(Some((s, a)));
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            // states are discovered in queue order, so row `s` lands at index `s`
            transitions.push(row);
        }

        // backward BFS from the empty state
        let mut distance_to_empty = vec![None; states.len()];
        if let Some(&empty) = index.get(&Vec::new()) {
            let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); states.len()];
            for (s, row) in transitions.iter().enumerate() {
                for &t in row {
                    reverse[t].push(s);
                }
            }
            distance_to_empty[empty] = Some(0);
            let mut queue = VecDeque::from([empty]);
            while let Some(t) = queue.pop_front() {
                let d = distance_to_empty[t].unwrap_or(0);
                for &s in &reverse[t] {
                    if distance_to_empty[s].is_none() {
                        distance_to_empty[s] = Some(d + 1);
                        queue.push_back(s);
                    }
                }
            }
        }
        SubsetAutomaton {
            alphabet,
            states,
            transitions,
            distance_to_empty,
            parent,
        }
    }

    pub fn alphabet(&self) -> &[GroupElement] {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn state(&self, id: usize) -> &RowSet {
        &self.states[id]
    }

    /// State reached after reading `hseq` from the initial state, or `None`
    /// if some letter is outside the support.
    pub fn run(&self, hseq: &[GroupElement]) -> Option<&RowSet> {
        let mut s = 0;
        for h in hseq {
            let a = self.alphabet.iter().position(|x| x == h)?;
            s = self.transitions[s][a];
        }
        Some(&self.states[s])
    }

    /// Shortest accepted sequence, by BFS from the initial state.
    pub fn shortest(&self) -> Option<DegreeSequence> {
        let empty = self.states.iter().position(|s| s.is_empty())?;
        let mut letters = Vec::new();
        let mut cur = empty;
        while let Some((prev, a)) = self.parent[cur] {
            letters.push(self.alphabet[a].clone());
            cur = prev;
        }
        letters.reverse();
        Some(letters)
    }
}

/// Exact shortest monomial identity over the support, with a witness. `None`
/// means no monomial in variables of support degrees is an identity.
pub fn shortest_monomial_identity(spec: &GradingSpec) -> Option<(usize, DegreeSequence)> {
    SubsetAutomaton::build(spec)
        .shortest()
        .map(|w| (w.len(), w))
}

/// Identity sequences of length at most `max_len` over the support, in
/// lexicographic order of the support. Extensions of an identity are
/// identities too and are not listed: every identity of length `≤ max_len`
/// has exactly one prefix in the unfiltered output. With `minimal_only`, only
/// sequences passing [`is_minimal_identity`] are kept.
pub fn enumerate_monomial_identities(
    spec: &GradingSpec,
    max_len: usize,
    minimal_only: bool,
) -> Vec<DegreeSequence> {
    let automaton = SubsetAutomaton::build(spec);
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    walk(&automaton, 0, max_len, &mut prefix, &mut out);
    if minimal_only {
        out.retain(|seq| is_minimal_identity(spec, seq));
    }
    out
}

fn walk(
    automaton: &SubsetAutomaton,
    state: usize,
    budget: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<DegreeSequence>,
) {
    for (a, &next) in automaton.transitions[state].iter().enumerate() {
        // subtrees that cannot reach the empty state within the budget hold no identities
        match automaton.distance_to_empty[next] {
            Some(d) if d < budget => {}
            _ => continue,
        }
        prefix.push(a);
        if automaton.states[next].is_empty() {
            out.push(
                prefix
                    .iter()
                    .map(|&i| automaton.alphabet[i].clone())
                    .collect(),
            );
        } else {
            walk(automaton, next, budget - 1, prefix, out);
        }
        prefix.pop();
    }
}

/// An identity sequence is minimal when no proper contiguous factor is an
/// identity and no coarsening into fewer consecutive blocks (each block
/// replaced by its degree product) is an identity. Only coarsenings whose
/// blocks all have support degrees count, matching the enumeration alphabet;
/// a block of non-support degree would make every such word a consequence
/// of `x = 0` alone.
pub fn is_minimal_identity(spec: &GradingSpec, hseq: &[GroupElement]) -> bool {
    let q = hseq.len();
    if q == 0 || !spec.l_set_unchecked(hseq).is_empty() {
        return false;
    }
    for len in 1..q {
        for start in 0..=q - len {
            if spec.l_set_unchecked(&hseq[start..start + len]).is_empty() {
                return false;
            }
        }
    }
    if q > 1 {
        let group = spec.group();
        let support = spec.support();
        // bit b of `cuts` set: a block boundary after position b
        for cuts in 0u64..(1u64 << (q - 1)) - 1 {
            let mut coarse = Vec::new();
            let mut acc = group.identity();
            for (b, h) in hseq.iter().enumerate() {
                acc = group.op_unchecked(&acc, h);
                if b == q - 1 || cuts & (1 << b) != 0 {
                    coarse.push(std::mem::replace(&mut acc, group.identity()));
                }
            }
            if coarse.iter().all(|h| support.contains(h))
                && spec.l_set_unchecked(&coarse).is_empty()
            {
                return false;
            }
        }
    }
    true
}

/// The two length bounds: `n0 = 4 s^(2s+2)` for support size `s`, and
/// `4 n^(4(n^2+1))` for matrix size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub support_size: usize,
    pub n0: BigUint,
    pub theorem_bound: BigUint,
}

pub fn n0_for_support_size(s: usize) -> BigUint {
    BigUint::from(4u32) * BigUint::from(s).pow((2 * s + 2) as u32)
}

pub fn theorem_bound_for_size(n: usize) -> BigUint {
    BigUint::from(4u32) * BigUint::from(n).pow((4 * (n * n + 1)) as u32)
}

pub fn theoretical_bound(spec: &GradingSpec) -> Bounds {
    let s = spec.support().len();
    Bounds {
        support_size: s,
        n0: n0_for_support_size(s),
        theorem_bound: theorem_bound_for_size(spec.n()),
    }
}
