//! Finite posets stored as a dense strict-order matrix, together with rank
//! functions and the Eulerian family of predicates.
//!
//! Elements are integer indices `0..len()`; labels are carried as metadata and
//! are what equality is keyed on. Two posets compare equal when they have the
//! same label set and the same order relation between equally-labelled
//! elements, regardless of the index order the elements happen to be stored in.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::bits::Bits;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("a poset must have at least one element")]
    Empty,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("the declared order contains a cycle through `{0}`")]
    Cycle(String),
    #[error("`{0}` < `{1}` was declared as a cover but is implied by transitivity")]
    NotACover(String, String),
    #[error("relation is not a strict partial order: {0}")]
    NotAnOrder(String),
    #[error("poset has no unique minimal element")]
    NoUniqueMinimum,
    #[error("poset has no unique maximal element")]
    NoUniqueMaximum,
    #[error("poset is not ranked: cover `{0}` < `{1}` breaks the rank condition")]
    NotRanked(String, String),
    #[error("rank function has {got} values but the poset has {expected} elements")]
    RankLength { expected: usize, got: usize },
    #[error("element {0} is out of range")]
    OutOfRange(usize),
    #[error("`{0}` is not below `{1}`")]
    NotComparable(String, String),
    #[error("set is not an upper order ideal")]
    NotUpperIdeal,
    #[error("poset is not Eulerian of positive rank")]
    NotEulerianPositiveRank,
    #[error("poset is not near-Eulerian")]
    NotNearEulerian,
    #[error("{0}")]
    Precondition(String),
}

/// Which endpoints an interval keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalKind {
    Closed,
    HalfOpen,
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

#[derive(Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `above[i]` holds every `j` with `i < j`.
    above: Vec<Bits>,
    /// `below[j]` holds every `i` with `i < j`.
    below: Vec<Bits>,
    covers: Vec<(usize, usize)>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<_> = self
            .covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Poset")
            .field("labels", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let Some(map) = self.label_map_into(other) else {
            return false;
        };
        (0..self.len()).all(|i| {
            let mapped: Bits = Bits::from_indices(other.len(), self.above[i].iter().map(|j| map[j]));
            mapped == other.above[map[i]]
        })
    }
}

impl Eq for Poset {}

impl Poset {
    /// Builds a poset from its Hasse diagram. Every declared pair must be a
    /// genuine cover of the resulting order.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Self, PosetError> {
        if labels.is_empty() {
            return Err(PosetError::Empty);
        }
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let index = build_index(&labels)?;
        let n = labels.len();
        let mut above = vec![Bits::new(n); n];
        let mut declared = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index.get(a).ok_or_else(|| PosetError::UnknownLabel(a.to_string()))?;
            let j = *index.get(b).ok_or_else(|| PosetError::UnknownLabel(b.to_string()))?;
            if i == j {
                return Err(PosetError::Cycle(a.to_string()));
            }
            above[i].insert(j);
            declared.push((i, j));
        }
        transitive_closure(&mut above);
        if let Some(i) = (0..n).find(|&i| above[i].contains(i)) {
            return Err(PosetError::Cycle(labels[i].clone()));
        }
        let p = Self::assemble(labels, index, above);
        let cover_set: HashSet<(usize, usize)> = p.covers.iter().copied().collect();
        for &(i, j) in &declared {
            if !cover_set.contains(&(i, j)) {
                return Err(PosetError::NotACover(p.labels[i].clone(), p.labels[j].clone()));
            }
        }
        Ok(p)
    }

    /// Builds a poset from a strict order given as a predicate. The relation is
    /// checked for irreflexivity, antisymmetry and transitivity.
    pub fn from_strict_order(
        labels: Vec<String>,
        less: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        if labels.is_empty() {
            return Err(PosetError::Empty);
        }
        let index = build_index(&labels)?;
        let n = labels.len();
        let mut above = vec![Bits::new(n); n];
        for (i, row) in above.iter_mut().enumerate() {
            for j in 0..n {
                if less(i, j) {
                    if i == j {
                        return Err(PosetError::NotAnOrder(format!("`{}` < itself", labels[i])));
                    }
                    row.insert(j);
                }
            }
        }
        for i in 0..n {
            for j in above[i].iter() {
                if above[j].contains(i) {
                    return Err(PosetError::NotAnOrder(format!(
                        "`{}` and `{}` are mutually below each other",
                        labels[i], labels[j]
                    )));
                }
                if !above[j].is_subset(&above[i]) {
                    return Err(PosetError::NotAnOrder(format!(
                        "not transitive above `{}` < `{}`",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(Self::assemble(labels, index, above))
    }

    fn assemble(labels: Vec<String>, index: HashMap<String, usize>, above: Vec<Bits>) -> Self {
        let n = labels.len();
        let mut below = vec![Bits::new(n); n];
        for (i, row) in above.iter().enumerate() {
            for j in row.iter() {
                below[j].insert(i);
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in above[i].iter() {
                if above[i].is_disjoint(&below[j]) {
                    covers.push((i, j));
                }
            }
        }
        Poset {
            labels,
            index,
            above,
            below,
            covers,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: empty posets are rejected at construction.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn element(&self, label: &str) -> Result<usize, PosetError> {
        self.index_of(label)
            .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le(i, j) || self.le(j, i)
    }

    /// Cover pairs `(lower, upper)`, sorted by lower then upper index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, i: usize, j: usize) -> bool {
        self.lt(i, j) && self.above[i].is_disjoint(&self.below[j])
    }

    /// Elements strictly above `i`, ascending.
    pub fn strictly_above(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[i].iter()
    }

    /// Elements strictly below `i`, ascending.
    pub fn strictly_below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[i].iter()
    }

    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[i]
            .iter()
            .filter(move |&j| self.above[i].is_disjoint(&self.below[j]))
    }

    pub fn lower_covers(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[j]
            .iter()
            .filter(move |&i| self.above[i].is_disjoint(&self.below[j]))
    }

    pub(crate) fn above_bits(&self, i: usize) -> &Bits {
        &self.above[i]
    }

    pub(crate) fn below_bits(&self, i: usize) -> &Bits {
        &self.below[i]
    }

    /// `{ j : i <= j }` as a bit row.
    pub(crate) fn up_closed_bits(&self, i: usize) -> Bits {
        let mut b = self.above[i].clone();
        b.insert(i);
        b
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        self.elements().filter(|&i| self.below[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        self.elements().filter(|&i| self.above[i].is_empty()).collect()
    }

    /// The unique minimal element, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [z] => Some(*z),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [z] => Some(*z),
            _ => None,
        }
    }

    /// Induced subposet on `elems`, in the given order. Labels are kept.
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let labels = elems.iter().map(|&i| self.labels[i].clone()).collect();
        Poset::from_strict_order(labels, |a, b| self.lt(elems[a], elems[b]))
            .expect("induced subposet of a valid poset")
    }

    /// Same order with every label passed through `f`.
    pub fn relabeled(&self, f: impl Fn(&str) -> String) -> Result<Poset, PosetError> {
        let labels: Vec<String> = self.labels.iter().map(|l| f(l)).collect();
        let index = build_index(&labels)?;
        Ok(Poset {
            labels,
            index,
            above: self.above.clone(),
            below: self.below.clone(),
            covers: self.covers.clone(),
        })
    }

    /// Element set of the interval between `z` and `z2`.
    pub fn interval_elements(&self, z: usize, z2: usize, kind: IntervalKind) -> Result<Vec<usize>, PosetError> {
        self.check(z)?;
        self.check(z2)?;
        let ok = match kind {
            IntervalKind::Open => self.lt(z, z2),
            _ => self.le(z, z2),
        };
        if !ok {
            return Err(PosetError::NotComparable(self.labels[z].clone(), self.labels[z2].clone()));
        }
        Ok(self
            .elements()
            .filter(|&w| match kind {
                IntervalKind::Closed => self.le(z, w) && self.le(w, z2),
                IntervalKind::HalfOpen => self.le(z, w) && self.lt(w, z2),
                IntervalKind::Open => self.lt(z, w) && self.lt(w, z2),
            })
            .collect())
    }

    pub fn interval(&self, z: usize, z2: usize, kind: IntervalKind) -> Result<Poset, PosetError> {
        Ok(self.induced(&self.interval_elements(z, z2, kind)?))
    }

    /// Downward or upward closure of `generators`, ascending.
    pub fn ideal(&self, generators: &[usize], direction: Direction) -> Vec<usize> {
        let mut set = Bits::new(self.len());
        for &g in generators {
            set.insert(g);
            match direction {
                Direction::Lower => set.union_with(&self.below[g]),
                Direction::Upper => set.union_with(&self.above[g]),
            }
        }
        set.iter().collect()
    }

    /// `{ w : w <= z }`
    pub fn down_set(&self, z: usize) -> Vec<usize> {
        self.ideal(&[z], Direction::Lower)
    }

    /// `{ w : z <= w }`
    pub fn up_set(&self, z: usize) -> Vec<usize> {
        self.ideal(&[z], Direction::Upper)
    }

    pub fn is_upper_ideal(&self, set: &[usize]) -> bool {
        let b = Bits::from_indices(self.len(), set.iter().copied());
        set.iter().all(|&i| self.above[i].is_subset(&b))
    }

    pub fn is_lower_ideal(&self, set: &[usize]) -> bool {
        let b = Bits::from_indices(self.len(), set.iter().copied());
        set.iter().all(|&i| self.below[i].is_subset(&b))
    }

    /// Unique minimal element of a set given as bits, if it exists.
    fn unique_minimum_of(&self, set: &Bits) -> Option<usize> {
        let mut found = None;
        for w in set.iter() {
            if self.below[w].is_disjoint(set) {
                if found.is_some() {
                    return None;
                }
                found = Some(w);
            }
        }
        found
    }

    fn unique_maximum_of(&self, set: &Bits) -> Option<usize> {
        let mut found = None;
        for w in set.iter() {
            if self.above[w].is_disjoint(set) {
                if found.is_some() {
                    return None;
                }
                found = Some(w);
            }
        }
        found
    }

    /// Least upper bound of `z` and `z2`; `None` when the common upper set is
    /// empty or has several minimal elements.
    pub fn join(&self, z: usize, z2: usize) -> Option<usize> {
        let common = self.up_closed_bits(z).intersection(&self.up_closed_bits(z2));
        self.unique_minimum_of(&common)
    }

    pub fn meet(&self, z: usize, z2: usize) -> Option<usize> {
        let mut a = self.below[z].clone();
        a.insert(z);
        let mut b = self.below[z2].clone();
        b.insert(z2);
        self.unique_maximum_of(&a.intersection(&b))
    }

    pub fn is_join_admissible(&self, q: usize) -> bool {
        self.elements().all(|z| self.join(z, q).is_some())
    }

    /// Join-admissible elements, ascending.
    pub fn join_admissible_elements(&self) -> Vec<usize> {
        self.elements().filter(|&q| self.is_join_admissible(q)).collect()
    }

    /// `z ∨ I`: the unique minimal element of `{w >= z} ∩ I`.
    pub fn join_with_ideal(&self, z: usize, ideal: &[usize]) -> Option<usize> {
        let set = Bits::from_indices(self.len(), ideal.iter().copied());
        self.unique_minimum_of(&self.up_closed_bits(z).intersection(&set))
    }

    pub fn is_join_admissible_ideal(&self, ideal: &[usize]) -> Result<bool, PosetError> {
        if ideal.is_empty() || !self.is_upper_ideal(ideal) {
            return Err(PosetError::NotUpperIdeal);
        }
        Ok(self.elements().all(|z| self.join_with_ideal(z, ideal).is_some()))
    }

    pub fn is_lattice(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.join(a, b).is_some() && self.meet(a, b).is_some()))
    }

    pub fn dual(&self) -> Poset {
        Poset::from_strict_order(self.labels.clone(), |i, j| self.lt(j, i)).expect("dual of a valid poset")
    }

    /// Length of the longest chain.
    pub fn height(&self) -> usize {
        let order = self.linear_extension();
        let mut longest = vec![0usize; self.len()];
        for &j in &order {
            for i in self.below[j].iter() {
                longest[j] = longest[j].max(longest[i] + 1);
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Every maximal chain has the same length.
    pub fn is_graded(&self) -> bool {
        // Maximal chains run along covers from a minimal to a maximal element.
        let order = self.linear_extension();
        let mut shortest = vec![usize::MAX; self.len()];
        let mut longest = vec![0usize; self.len()];
        for &j in order.iter().rev() {
            if self.above[j].is_empty() {
                shortest[j] = 0;
                longest[j] = 0;
            } else {
                for k in self.upper_covers(j) {
                    shortest[j] = shortest[j].min(shortest[k] + 1);
                    longest[j] = longest[j].max(longest[k] + 1);
                }
            }
        }
        let mins = self.minimal_elements();
        let lo = mins.iter().map(|&m| shortest[m]).min().unwrap_or(0);
        let hi = mins.iter().map(|&m| longest[m]).max().unwrap_or(0);
        lo == hi
    }

    /// Elements ordered so that `i < j` implies `i` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.elements().map(|j| self.lower_covers(j).count()).collect();
        let mut queue: VecDeque<usize> = self.elements().filter(|&j| indeg[j] == 0).collect();
        let mut out = Vec::with_capacity(self.len());
        while let Some(i) = queue.pop_front() {
            out.push(i);
            for j in self.upper_covers(i).collect::<Vec<_>>() {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        out
    }

    /// All maximal chains, bottom first. Exponential; meant for small posets.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        fn extend(p: &Poset, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let last = *chain.last().unwrap();
            let ups: Vec<usize> = p.upper_covers(last).collect();
            if ups.is_empty() {
                out.push(chain.clone());
                return;
            }
            for u in ups {
                chain.push(u);
                extend(p, chain, out);
                chain.pop();
            }
        }
        let mut out = Vec::new();
        for m in self.minimal_elements() {
            extend(self, &mut vec![m], &mut out);
        }
        out
    }

    /// New poset with a fresh element above everything. Returns the new index.
    pub fn adjoin_max(&self, label: &str) -> (Poset, usize) {
        let n = self.len();
        let mut labels = self.labels.clone();
        labels.push(fresh_label(label, &self.labels));
        let p = Poset::from_strict_order(labels, |i, j| if j == n { i != n } else { i != n && self.lt(i, j) })
            .expect("adjoining a maximum keeps a valid order");
        (p, n)
    }

    /// New poset with a fresh element below everything, stored at index 0.
    pub fn adjoin_min(&self, label: &str) -> (Poset, usize) {
        let mut labels = vec![fresh_label(label, &self.labels)];
        labels.extend(self.labels.iter().cloned());
        let p = Poset::from_strict_order(labels, |i, j| {
            if i == 0 {
                j != 0
            } else {
                j != 0 && self.lt(i - 1, j - 1)
            }
        })
        .expect("adjoining a minimum keeps a valid order");
        (p, 0)
    }

    /// Label-preserving isomorphism search ignoring labels: returns a
    /// bijection `f` with `i < j` iff `f(i) < f(j)`. Brute-force backtracking
    /// over invariant classes; intended for posets of at most a few dozen
    /// elements.
    pub fn find_isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() || self.covers.len() != other.covers.len() {
            return None;
        }
        let sig = |p: &Poset, i: usize| {
            (
                p.below[i].count(),
                p.above[i].count(),
                p.lower_covers(i).count(),
                p.upper_covers(i).count(),
            )
        };
        let sa: Vec<_> = self.elements().map(|i| sig(self, i)).collect();
        let sb: Vec<_> = other.elements().map(|i| sig(other, i)).collect();
        let mut ca = sa.clone();
        let mut cb = sb.clone();
        ca.sort();
        cb.sort();
        if ca != cb {
            return None;
        }
        // Assign elements in a linear extension so constraints bite early.
        let order = self.linear_extension();
        let mut assign = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            a: &Poset,
            b: &Poset,
            order: &[usize],
            pos: usize,
            sa: &[(usize, usize, usize, usize)],
            sb: &[(usize, usize, usize, usize)],
            assign: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if pos == order.len() {
                return true;
            }
            let i = order[pos];
            for c in 0..b.len() {
                if used[c] || sa[i] != sb[c] {
                    continue;
                }
                let consistent = order[..pos].iter().all(|&k| {
                    let ck = assign[k];
                    a.lt(k, i) == b.lt(ck, c) && a.lt(i, k) == b.lt(c, ck)
                });
                if !consistent {
                    continue;
                }
                assign[i] = c;
                used[c] = true;
                if go(a, b, order, pos + 1, sa, sb, assign, used) {
                    return true;
                }
                used[c] = false;
                assign[i] = usize::MAX;
            }
            false
        }
        if go(self, other, &order, 0, &sa, &sb, &mut assign, &mut used) {
            Some(assign)
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// Maps each index of `self` to the equally-labelled index of `other`.
    pub fn label_map_into(&self, other: &Poset) -> Option<Vec<usize>> {
        self.labels.iter().map(|l| other.index_of(l)).collect()
    }

    fn check(&self, i: usize) -> Result<(), PosetError> {
        if i < self.len() {
            Ok(())
        } else {
            Err(PosetError::OutOfRange(i))
        }
    }
}

fn build_index(labels: &[String]) -> Result<HashMap<String, usize>, PosetError> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(PosetError::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

/// Row-wise Warshall closure over bit rows.
fn transitive_closure(above: &mut [Bits]) {
    let n = above.len();
    for k in 0..n {
        let row_k = above[k].clone();
        for i in 0..n {
            if above[i].contains(k) {
                above[i].union_with(&row_k);
            }
        }
    }
}

/// `base`, or `base'`, `base''`, … until it avoids every existing label.
pub fn fresh_label(base: &str, existing: &[String]) -> String {
    let mut l = base.to_string();
    while existing.iter().any(|e| *e == l) {
        l.push('\'');
    }
    l
}

/// Integer rank values, one per element of an associated poset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankFunction(Vec<i64>);

impl RankFunction {
    pub fn new(values: Vec<i64>) -> Self {
        RankFunction(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ρ[s]`: every value increased by `s`.
    pub fn shifted(&self, s: i64) -> RankFunction {
        RankFunction(self.0.iter().map(|v| v + s).collect())
    }

    pub fn restrict(&self, elems: &[usize]) -> RankFunction {
        RankFunction(elems.iter().map(|&i| self.0[i]).collect())
    }

    /// Checks length and the cover condition against `p`.
    pub fn validate(&self, p: &Poset) -> Result<(), PosetError> {
        if self.len() != p.len() {
            return Err(PosetError::RankLength {
                expected: p.len(),
                got: self.len(),
            });
        }
        for &(i, j) in p.covers() {
            if self.0[j] != self.0[i] + 1 {
                return Err(PosetError::NotRanked(p.label(i).to_string(), p.label(j).to_string()));
            }
        }
        Ok(())
    }

    pub fn is_valid_for(&self, p: &Poset) -> bool {
        self.validate(p).is_ok()
    }
}

/// `ρ[s]`.
pub fn shift_rank(r: &RankFunction, s: i64) -> RankFunction {
    r.shifted(s)
}

/// The rank function with `ρ(0̂) = 0`.
pub fn natural_rank(p: &Poset) -> Result<RankFunction, PosetError> {
    let bottom = p.bottom().ok_or(PosetError::NoUniqueMinimum)?;
    let mut values = vec![None::<i64>; p.len()];
    values[bottom] = Some(0);
    let mut queue = VecDeque::from([bottom]);
    while let Some(i) = queue.pop_front() {
        let v = values[i].unwrap();
        for j in p.upper_covers(i) {
            if values[j].is_none() {
                values[j] = Some(v + 1);
                queue.push_back(j);
            }
        }
    }
    let r = RankFunction(values.into_iter().map(|v| v.expect("every element lies above the bottom")).collect());
    r.validate(p)?;
    Ok(r)
}

/// A poset paired with one of its rank functions.
#[derive(Clone, Debug)]
pub struct RankedPoset {
    pub poset: Poset,
    pub rank: RankFunction,
}

impl PartialEq for RankedPoset {
    fn eq(&self, other: &Self) -> bool {
        if self.poset != other.poset {
            return false;
        }
        let map = self.poset.label_map_into(&other.poset).expect("equal posets share labels");
        (0..self.poset.len()).all(|i| self.rank.get(i) == other.rank.get(map[i]))
    }
}

impl Eq for RankedPoset {}

impl RankedPoset {
    /// Validates `rank` against `poset`.
    pub fn new(poset: Poset, rank: RankFunction) -> Result<Self, PosetError> {
        rank.validate(&poset)?;
        Ok(RankedPoset { poset, rank })
    }

    /// Pairs `poset` with its natural rank function.
    pub fn natural(poset: Poset) -> Result<Self, PosetError> {
        let rank = natural_rank(&poset)?;
        Ok(RankedPoset { poset, rank })
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn rank_of(&self, i: usize) -> i64 {
        self.rank.get(i)
    }

    pub fn induced(&self, elems: &[usize]) -> RankedPoset {
        RankedPoset {
            poset: self.poset.induced(elems),
            rank: self.rank.restrict(elems),
        }
    }

    pub fn shifted(&self, s: i64) -> RankedPoset {
        RankedPoset {
            poset: self.poset.clone(),
            rank: self.rank.shifted(s),
        }
    }

    /// Same poset, natural rank function.
    pub fn with_natural_rank(&self) -> Result<RankedPoset, PosetError> {
        RankedPoset::natural(self.poset.clone())
    }

    pub fn relabeled(&self, f: impl Fn(&str) -> String) -> Result<RankedPoset, PosetError> {
        Ok(RankedPoset {
            poset: self.poset.relabeled(f)?,
            rank: self.rank.clone(),
        })
    }

    /// Length of the longest chain.
    pub fn rank_length(&self) -> usize {
        self.poset.height()
    }

    pub fn dual(&self) -> Result<RankedPoset, PosetError> {
        RankedPoset::natural(self.poset.dual())
    }

    pub fn is_locally_eulerian(&self) -> bool {
        is_locally_eulerian(&self.poset, &self.rank)
    }

    pub fn is_lower_eulerian(&self) -> bool {
        is_lower_eulerian(&self.poset, &self.rank)
    }

    pub fn is_eulerian(&self) -> bool {
        is_eulerian(&self.poset, &self.rank)
    }

    pub fn is_eulerian_positive_rank(&self) -> bool {
        self.len() > 1 && self.is_eulerian()
    }

    pub fn is_near_eulerian(&self) -> bool {
        is_near_eulerian(&self.poset, &self.rank)
    }

    /// `B̄ = B ∪ {1̂}` with the rank extended by one above the maximal
    /// elements. Fails when the maximal elements have different ranks.
    pub fn adjoin_max(&self) -> Result<RankedPoset, PosetError> {
        adjoin_max(&self.poset, &self.rank)
    }

    pub fn boundary(&self) -> Result<RankedPoset, PosetError> {
        boundary(&self.poset, &self.rank)
    }
}

/// `Σ (−1)^ρ(z)` over a set of elements given as bits.
fn signed_count(set: &Bits, even: &Bits) -> i64 {
    let e = set.count_and(even) as i64;
    let total = set.count() as i64;
    e - (total - e)
}

fn even_bits(p: &Poset, r: &RankFunction) -> Bits {
    Bits::from_indices(p.len(), p.elements().filter(|&i| r.get(i).rem_euclid(2) == 0))
}

/// Every closed interval `[z, z']` with `z < z'` has as many elements of even
/// rank as of odd rank.
pub fn is_locally_eulerian(p: &Poset, r: &RankFunction) -> bool {
    if !r.is_valid_for(p) {
        return false;
    }
    first_non_eulerian_interval(p, r).is_none()
}

/// First `(z, z')` whose closed interval has nonzero alternating sum.
pub fn first_non_eulerian_interval(p: &Poset, r: &RankFunction) -> Option<(usize, usize, i64)> {
    let even = even_bits(p, r);
    for z in p.elements() {
        let up = p.up_closed_bits(z);
        for z2 in p.strictly_above(z) {
            let mut down = p.below_bits(z2).clone();
            down.insert(z2);
            let s = signed_count(&up.intersection(&down), &even);
            if s != 0 {
                return Some((z, z2, s));
            }
        }
    }
    None
}

pub fn is_lower_eulerian(p: &Poset, r: &RankFunction) -> bool {
    p.bottom().is_some() && is_locally_eulerian(p, r)
}

pub fn is_eulerian(p: &Poset, r: &RankFunction) -> bool {
    p.top().is_some() && is_lower_eulerian(p, r)
}

/// `Σ_z (−1)^ρ(z)`.
pub fn even_odd_balance(p: &Poset, r: &RankFunction) -> i64 {
    signed_count(&Bits::from_indices(p.len(), p.elements()), &even_bits(p, r))
}

/// `B̄`: adjoins a maximum ranked one above the maximal elements.
pub fn adjoin_max(p: &Poset, r: &RankFunction) -> Result<RankedPoset, PosetError> {
    r.validate(p)?;
    let maxes = p.maximal_elements();
    let top_rank = r.get(maxes[0]) + 1;
    if maxes.iter().any(|&m| r.get(m) + 1 != top_rank) {
        let a = maxes.iter().find(|&&m| r.get(m) + 1 != top_rank).unwrap();
        return Err(PosetError::NotRanked(p.label(*a).to_string(), "1hat".to_string()));
    }
    let (q, _) = p.adjoin_max("1hat");
    let mut values = r.values().to_vec();
    values.push(top_rank);
    RankedPoset::new(q, RankFunction::new(values))
}

/// `∂B = B ∖ {1̂}` for an Eulerian poset of positive rank.
pub fn boundary(p: &Poset, r: &RankFunction) -> Result<RankedPoset, PosetError> {
    if p.len() < 2 || !is_eulerian(p, r) {
        return Err(PosetError::NotEulerianPositiveRank);
    }
    let top = p.top().unwrap();
    let elems: Vec<usize> = p.elements().filter(|&i| i != top).collect();
    Ok(RankedPoset {
        poset: p.induced(&elems),
        rank: r.restrict(&elems),
    })
}

/// Lower order ideal generated by the elements with exactly one element
/// strictly above them.
pub fn near_eulerian_boundary(p: &Poset) -> Vec<usize> {
    let gens: Vec<usize> = p.elements().filter(|&z| p.above_bits(z).count() == 1).collect();
    p.ideal(&gens, Direction::Lower)
}

/// Adjoins `ẑ` above the boundary and then `1̂`, without checking anything.
pub(crate) fn raw_semisuspension(p: &Poset) -> (Poset, usize, usize) {
    let n = p.len();
    let bd = Bits::from_indices(n, near_eulerian_boundary(p));
    let mut labels = p.labels().to_vec();
    let zhat_label = fresh_label("zhat", &labels);
    labels.push(zhat_label);
    let top_label = fresh_label("1hat", &labels);
    labels.push(top_label);
    let (zhat, top) = (n, n + 1);
    let q = Poset::from_strict_order(labels, |i, j| {
        if j == top {
            i != top
        } else if j == zhat {
            i < n && bd.contains(i)
        } else {
            i < n && j < n && p.lt(i, j)
        }
    })
    .expect("semisuspension is a valid order");
    (q, zhat, top)
}

/// `Σ̃B` for near-Eulerian `B`, with `r` extended to `ẑ` and `1̂`.
/// Returns the ranked semisuspension and the index of `ẑ`.
pub fn semisuspension(p: &Poset, r: &RankFunction) -> Result<(RankedPoset, usize), PosetError> {
    r.validate(p)?;
    let (q, zhat, _top) = raw_semisuspension(p);
    let nat = natural_rank(&q).map_err(|_| PosetError::NotNearEulerian)?;
    if q.len() < 2 || !is_eulerian(&q, &nat) {
        return Err(PosetError::NotNearEulerian);
    }
    let bottom = p.bottom().ok_or(PosetError::NotNearEulerian)?;
    let shift = r.get(bottom) - nat.get(bottom);
    let rank = nat.shifted(shift);
    if (0..p.len()).any(|i| rank.get(i) != r.get(i)) {
        return Err(PosetError::NotNearEulerian);
    }
    Ok((RankedPoset { poset: q, rank }, zhat))
}

/// `B` is the boundary of an Eulerian poset of positive rank with one
/// maximal element removed.
pub fn is_near_eulerian(p: &Poset, r: &RankFunction) -> bool {
    semisuspension(p, r).is_ok()
}
