//! Weak compositions, partitions, permutations, and the order and rewriting
//! structure on them: dominance, refinement, left swaps, slide moves, and the
//! strong Bruhat order.
//!
//! A weak composition is a finite sequence of nonnegative integers; trailing
//! zeros are significant because the length fixes the number of variables.
//! Every rewriting operation in this module (left swaps, slides) preserves
//! the sum of parts. Compositions are compared only at equal length; callers
//! pad with trailing zeros explicitly.
//!
//! The derived `Ord` on [`WeakComposition`] is lexicographic on the parts,
//! which for equal-length compositions coincides with lexicographic order on
//! prefix-sum vectors and is therefore a linear extension of dominance. The
//! triangular elimination in [`crate::polynomial`] relies on this.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// A finite sequence of nonnegative integers. Indexes every basis element.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<u32>);

/// A composition with strictly positive parts, e.g. the flattening of a weak
/// composition.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrongComposition(Vec<u32>);

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

/// A permutation of {1..n} in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl WeakComposition {
    pub fn new(parts: Vec<u32>) -> Self {
        WeakComposition(parts)
    }

    pub fn empty() -> Self {
        WeakComposition(Vec::new())
    }

    /// The all-zero composition of the given length.
    pub fn zeros(len: usize) -> Self {
        WeakComposition(vec![0; len])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part at 0-based position `i`.
    pub fn part(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |a|, the sum of parts.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn prefix_sums(&self) -> Vec<u32> {
        let mut acc = 0;
        self.0
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// The strong composition obtained by removing all zero parts, keeping
    /// the order of the nonzero parts.
    pub fn flat(&self) -> StrongComposition {
        StrongComposition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    /// The rearrangement of the nonzero parts into weakly decreasing order.
    pub fn sort_desc(&self) -> Partition {
        let mut parts: Vec<u32> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Dominance order: `self >= other` iff every prefix sum of `self` is at
    /// least the corresponding prefix sum of `other`.
    ///
    /// Panics if the lengths differ.
    pub fn dominates(&self, other: &WeakComposition) -> bool {
        assert_eq!(
            self.len(),
            other.len(),
            "dominance compares compositions of equal length"
        );
        let mut s = 0i64;
        let mut o = 0i64;
        for i in 0..self.len() {
            s += self.0[i] as i64;
            o += other.0[i] as i64;
            if s < o {
                return false;
            }
        }
        true
    }

    /// Strong dominance: `self >= other` and `self` is dominated by every
    /// `c >= other` with `flat(c) = flat(self)`.
    ///
    /// Panics if the lengths differ.
    pub fn strongly_dominates(&self, other: &WeakComposition) -> bool {
        assert_eq!(
            self.len(),
            other.len(),
            "dominance compares compositions of equal length"
        );
        if !self.dominates(other) {
            return false;
        }
        placements(&self.flat(), self.len())
            .into_iter()
            .filter(|c| c.dominates(other))
            .all(|c| c.dominates(self))
    }

    /// The composition obtained by prepending `m` zeros.
    pub fn prepend_zeros(&self, m: usize) -> WeakComposition {
        let mut parts = vec![0; m];
        parts.extend_from_slice(&self.0);
        WeakComposition(parts)
    }

    /// The composition padded with trailing zeros to length `n`.
    ///
    /// Panics if `n` is smaller than the current length.
    pub fn pad_to(&self, n: usize) -> WeakComposition {
        assert!(n >= self.len(), "cannot pad to a shorter length");
        let mut parts = self.0.clone();
        parts.resize(n, 0);
        WeakComposition(parts)
    }

    /// The minimal-length permutation sending `self` to `sort_desc(self)`,
    /// with ties between equal parts broken so the leftmost is considered
    /// greater. Its i-th entry is the position where part i ends up.
    pub fn sorting_perm(&self) -> Permutation {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // Stable sort by descending value; equal parts keep left-to-right
        // order, which is exactly the leftmost-is-greater tie rule.
        order.sort_by(|&i, &j| self.0[j].cmp(&self.0[i]));
        let mut one_line = vec![0usize; n];
        for (rank, &i) in order.iter().enumerate() {
            one_line[i] = rank + 1;
        }
        Permutation(one_line)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    /// Parses the comma-separated text form, e.g. `"0,1,0,3"`. The empty
    /// string is the empty composition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(WeakComposition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(parts) => Ok(WeakComposition(parts)),
            Err(_) => Err(Error::Parse {
                what: "weak composition",
                text: s.to_string(),
            }),
        }
    }
}

impl StrongComposition {
    /// Panics if any part is zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "strong composition parts must be positive");
        StrongComposition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// True iff `self` can be cut into consecutive blocks whose sums read
    /// `coarser` in order.
    pub fn refines(&self, coarser: &StrongComposition) -> bool {
        let mut block = 0u32;
        let mut target = coarser.0.iter();
        let mut current = match target.next() {
            Some(&t) => t,
            None => return self.0.is_empty(),
        };
        for &p in &self.0 {
            block += p;
            if block > current {
                return false;
            }
            if block == current {
                block = 0;
                current = match target.next() {
                    Some(&t) => t,
                    None => 0,
                };
            }
        }
        block == 0 && current == 0 && target.next().is_none()
    }

    /// All strong compositions refining `self`, in no particular order.
    pub fn refinements(&self) -> Vec<StrongComposition> {
        let mut out = vec![Vec::new()];
        for &part in &self.0 {
            let pieces = strong_compositions_of(part);
            let mut next = Vec::with_capacity(out.len() * pieces.len());
            for prefix in &out {
                for piece in &pieces {
                    let mut v = prefix.clone();
                    v.extend_from_slice(&piece.0);
                    next.push(v);
                }
            }
            out = next;
        }
        out.into_iter().map(StrongComposition).collect()
    }
}

impl fmt::Display for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl Partition {
    /// Panics unless the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "partition parts must be positive and weakly decreasing"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_strong(&self) -> StrongComposition {
        StrongComposition(self.0.clone())
    }

    /// The partition embedded as a weak composition of length `n`.
    ///
    /// Panics if `n < len()`.
    pub fn as_weak(&self, n: usize) -> WeakComposition {
        WeakComposition::new(self.0.clone()).pad_to(n)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        match parts {
            Ok(parts)
                if parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0) =>
            {
                Ok(Partition(parts))
            }
            _ => Err(Error::Parse {
                what: "partition",
                text: s.to_string(),
            }),
        }
    }
}

impl Permutation {
    /// Builds from one-line notation. Panics unless each of 1..n appears
    /// exactly once.
    pub fn from_one_line(one_line: Vec<usize>) -> Self {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            assert!(v >= 1 && v <= n && !seen[v], "not a permutation of 1..{n}");
            seen[v] = true;
        }
        Permutation(one_line)
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Strong Bruhat order, via the tableau criterion: `self <= other` iff
    /// for every k the increasing sort of the first k entries of `self` is
    /// entrywise at most that of `other`.
    ///
    /// Panics if the sizes differ.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.len(), other.len(), "Bruhat order compares equal sizes");
        let n = self.len();
        let mut mine: Vec<usize> = Vec::with_capacity(n);
        let mut theirs: Vec<usize> = Vec::with_capacity(n);
        for k in 0..n {
            let (a, b) = (self.0[k], other.0[k]);
            let ia = mine.partition_point(|&x| x < a);
            mine.insert(ia, a);
            let ib = theirs.partition_point(|&x| x < b);
            theirs.insert(ib, b);
            if mine.iter().zip(theirs.iter()).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// The closure of `a` under left swaps (exchanging parts `a_i <= a_j` with
/// `i < j`). Always contains `a`. Swapping equal parts is permitted; it is
/// the identity on the composition.
pub fn lswap_closure(a: &WeakComposition) -> BTreeSet<WeakComposition> {
    let mut seen: BTreeSet<WeakComposition> = BTreeSet::new();
    let mut queue = vec![a.clone()];
    seen.insert(a.clone());
    while let Some(cur) = queue.pop() {
        let parts = cur.parts();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if parts[i] <= parts[j] {
                    let mut next = parts.to_vec();
                    next.swap(i, j);
                    let next = WeakComposition::new(next);
                    if seen.insert(next.clone()) {
                        queue.push(next);
                    }
                }
            }
        }
    }
    seen
}

/// The dominance-minimal representatives of `lswap_closure(a)` within each
/// flat-class: those `b` in the closure dominated by every closure member
/// with the same flattening.
pub fn qlswap(a: &WeakComposition) -> BTreeSet<WeakComposition> {
    let closure = lswap_closure(a);
    let mut out = BTreeSet::new();
    for b in &closure {
        let fb = b.flat();
        if closure
            .iter()
            .filter(|c| c.flat() == fb)
            .all(|c| c.dominates(b))
        {
            out.insert(b.clone());
        }
    }
    out
}

/// The closure of `a` under slide moves: local rewrites of an adjacent pair
/// `(0, k)` into `(i, j)` with `i + j = k`. With `fixed` set, a move is only
/// allowed to empty the pair's right position if that position is zero in
/// the original `a`.
pub fn slides(a: &WeakComposition, fixed: bool) -> BTreeSet<WeakComposition> {
    let mut seen: BTreeSet<WeakComposition> = BTreeSet::new();
    let mut queue = vec![a.clone()];
    seen.insert(a.clone());
    while let Some(cur) = queue.pop() {
        let parts = cur.parts();
        for p in 0..parts.len().saturating_sub(1) {
            if parts[p] != 0 || parts[p + 1] == 0 {
                continue;
            }
            let k = parts[p + 1];
            let min_j = if fixed && a.part(p + 1) != 0 { 1 } else { 0 };
            for j in min_j..k {
                let mut next = parts.to_vec();
                next[p] = k - j;
                next[p + 1] = j;
                let next = WeakComposition::new(next);
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
    }
    seen
}

/// All compositions `b >= a` with `flat(b) = flat(a)`: the nonzero parts of
/// `a` moved left, keeping their order.
pub fn flat_class_above(a: &WeakComposition) -> Vec<WeakComposition> {
    let positions: Vec<usize> = (0..a.len()).filter(|&i| a.part(i) > 0).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(positions.len());
    place_left(a, &positions, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn place_left(
    a: &WeakComposition,
    positions: &[usize],
    j: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<WeakComposition>,
) {
    if j == positions.len() {
        let mut parts = vec![0u32; a.len()];
        for (jj, &q) in chosen.iter().enumerate() {
            parts[q] = a.part(positions[jj]);
        }
        out.push(WeakComposition::new(parts));
        return;
    }
    let low = chosen.last().map_or(0, |&q| q + 1);
    for q in low..=positions[j] {
        chosen.push(q);
        place_left(a, positions, j + 1, chosen, out);
        chosen.pop();
    }
}

/// All placements of the parts of `beta`, in order, into `len` slots (the
/// remaining slots zero).
pub fn placements(beta: &StrongComposition, len: usize) -> Vec<WeakComposition> {
    let m = beta.len();
    let mut out = Vec::new();
    if m > len {
        return out;
    }
    let mut slots = Vec::with_capacity(m);
    place_any(beta, len, 0, &mut slots, &mut out);
    out
}

fn place_any(
    beta: &StrongComposition,
    len: usize,
    j: usize,
    slots: &mut Vec<usize>,
    out: &mut Vec<WeakComposition>,
) {
    if j == beta.len() {
        let mut parts = vec![0u32; len];
        for (jj, &q) in slots.iter().enumerate() {
            parts[q] = beta.parts()[jj];
        }
        out.push(WeakComposition::new(parts));
        return;
    }
    let low = slots.last().map_or(0, |&q| q + 1);
    for q in low..len {
        slots.push(q);
        place_any(beta, len, j + 1, slots, out);
        slots.pop();
    }
}

/// All `b` strongly dominating `a` whose flattening refines `flat(a)`: the
/// indices of the monomial slide expansion of a fundamental slide
/// polynomial. One representative per refinement that can be placed above
/// `a`; it is the dominance minimum of its flat-class over `a`.
pub fn strong_dominators_refining(a: &WeakComposition) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    for beta in a.flat().refinements() {
        let class: Vec<WeakComposition> = placements(&beta, a.len())
            .into_iter()
            .filter(|c| c.dominates(a))
            .collect();
        if class.is_empty() {
            continue;
        }
        let min = class
            .iter()
            .find(|b| class.iter().all(|c| c.dominates(b)))
            .expect("a flat-class over a dominance ideal has a minimum")
            .clone();
        out.push(min);
    }
    out.sort();
    out
}

/// All distinct rearrangements of the parts of `a`, zeros included.
pub fn rearrangements(a: &WeakComposition) -> BTreeSet<WeakComposition> {
    let mut parts = a.parts().to_vec();
    parts.sort_unstable();
    let mut out = BTreeSet::new();
    let mut current = Vec::with_capacity(parts.len());
    let mut used = vec![false; parts.len()];
    permute_distinct(&parts, &mut used, &mut current, &mut out);
    out
}

fn permute_distinct(
    parts: &[u32],
    used: &mut Vec<bool>,
    current: &mut Vec<u32>,
    out: &mut BTreeSet<WeakComposition>,
) {
    if current.len() == parts.len() {
        out.insert(WeakComposition::new(current.clone()));
        return;
    }
    let mut last: Option<u32> = None;
    for i in 0..parts.len() {
        if used[i] || last == Some(parts[i]) {
            continue;
        }
        last = Some(parts[i]);
        used[i] = true;
        current.push(parts[i]);
        permute_distinct(parts, used, current, out);
        current.pop();
        used[i] = false;
    }
}

/// All weak compositions of `sum` with exactly `len` parts.
pub fn compositions_of(sum: u32, len: usize) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(len);
    fn rec(sum: u32, len: usize, parts: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
        if parts.len() == len {
            if sum == 0 {
                out.push(WeakComposition::new(parts.clone()));
            }
            return;
        }
        if parts.len() + 1 == len {
            parts.push(sum);
            rec(0, len, parts, out);
            parts.pop();
            return;
        }
        for p in 0..=sum {
            parts.push(p);
            rec(sum - p, len, parts, out);
            parts.pop();
        }
    }
    rec(sum, len, &mut parts, &mut out);
    out
}

/// All weak compositions with `len` parts and sum between 0 and `max_sum`.
pub fn compositions_up_to(max_sum: u32, len: usize) -> Vec<WeakComposition> {
    (0..=max_sum)
        .flat_map(|s| compositions_of(s, len))
        .collect()
}

/// All strong compositions of `sum`.
pub fn strong_compositions_of(sum: u32) -> Vec<StrongComposition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn rec(rest: u32, parts: &mut Vec<u32>, out: &mut Vec<StrongComposition>) {
        if rest == 0 {
            out.push(StrongComposition::new(parts.clone()));
            return;
        }
        for p in 1..=rest {
            parts.push(p);
            rec(rest - p, parts, out);
            parts.pop();
        }
    }
    rec(sum, &mut parts, &mut out);
    out
}

/// All partitions of `sum`.
pub fn partitions_of(sum: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fn rec(rest: u32, max: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(parts.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            parts.push(p);
            rec(rest - p, p, parts, out);
            parts.pop();
        }
    }
    rec(sum, sum.max(1), &mut parts, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(parts: &[u32]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    #[test]
    fn flat_drops_zeros() {
        assert_eq!(wc(&[0, 1, 0, 3]).flat(), StrongComposition::new(vec![1, 3]));
        assert_eq!(wc(&[]).flat(), StrongComposition(vec![]));
        assert_eq!(wc(&[2, 1]).flat(), StrongComposition::new(vec![2, 1]));
    }

    #[test]
    fn sort_desc_examples() {
        assert_eq!(wc(&[0, 1, 0, 3]).sort_desc(), Partition::new(vec![3, 1]));
        assert_eq!(wc(&[2, 2]).sort_desc(), Partition::new(vec![2, 2]));
        assert_eq!(wc(&[0, 0]).sort_desc(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(wc(&[1, 1]).dominates(&wc(&[0, 2])));
        assert!(!wc(&[0, 2]).dominates(&wc(&[1, 1])));
        assert!(wc(&[1, 2, 0, 2]).dominates(&wc(&[0, 3, 0, 2])));
    }

    #[test]
    #[should_panic(expected = "equal length")]
    fn dominance_length_mismatch_panics() {
        wc(&[1, 1]).dominates(&wc(&[1, 1, 0]));
    }

    #[test]
    fn strong_dominance_examples() {
        assert!(wc(&[0, 1, 1, 2]).strongly_dominates(&wc(&[0, 1, 0, 3])));
        assert!(wc(&[0, 1, 0, 3]).strongly_dominates(&wc(&[0, 1, 0, 3])));
        assert!(!wc(&[1, 0, 1, 2]).strongly_dominates(&wc(&[0, 1, 0, 3])));
    }

    #[test]
    fn refines_examples() {
        let sc = |v: &[u32]| StrongComposition::new(v.to_vec());
        assert!(sc(&[1, 2]).refines(&sc(&[3])));
        assert!(sc(&[1, 1, 2]).refines(&sc(&[1, 3])));
        assert!(!sc(&[2, 1]).refines(&sc(&[1, 2])));
        assert!(sc(&[]).refines(&sc(&[])));
        assert!(!sc(&[1]).refines(&sc(&[])));
    }

    #[test]
    fn lswap_closure_examples() {
        let set = lswap_closure(&wc(&[0, 1, 0, 3]));
        let expected: BTreeSet<WeakComposition> = [
            [0, 1, 0, 3],
            [0, 1, 3, 0],
            [1, 0, 0, 3],
            [1, 0, 3, 0],
            [1, 3, 0, 0],
            [0, 3, 0, 1],
            [0, 3, 1, 0],
            [3, 0, 0, 1],
            [3, 0, 1, 0],
            [3, 1, 0, 0],
        ]
        .iter()
        .map(|p| wc(p))
        .collect();
        assert_eq!(set, expected);

        assert_eq!(lswap_closure(&wc(&[2, 1])).len(), 1);
        let set12 = lswap_closure(&wc(&[1, 2]));
        assert_eq!(set12, [wc(&[1, 2]), wc(&[2, 1])].into_iter().collect());
    }

    #[test]
    fn qlswap_examples() {
        let set = qlswap(&wc(&[0, 1, 0, 3]));
        assert_eq!(
            set,
            [wc(&[0, 1, 0, 3]), wc(&[0, 3, 0, 1])].into_iter().collect()
        );
        assert_eq!(qlswap(&wc(&[2, 1])), [wc(&[2, 1])].into_iter().collect());
        assert_eq!(qlswap(&wc(&[0, 2])), [wc(&[0, 2])].into_iter().collect());
    }

    #[test]
    fn slide_sets_match_known_counts() {
        let a = wc(&[0, 3, 0, 2]);
        let all = slides(&a, false);
        assert_eq!(all.len(), 15);
        let expected: BTreeSet<WeakComposition> = [
            [0, 3, 0, 2],
            [1, 2, 0, 2],
            [2, 1, 0, 2],
            [0, 3, 1, 1],
            [1, 2, 1, 1],
            [2, 1, 1, 1],
            [3, 0, 0, 2],
            [3, 0, 1, 1],
            [3, 1, 0, 1],
            [0, 3, 2, 0],
            [1, 2, 2, 0],
            [2, 1, 2, 0],
            [3, 0, 2, 0],
            [3, 1, 1, 0],
            [3, 2, 0, 0],
        ]
        .iter()
        .map(|p| wc(p))
        .collect();
        assert_eq!(all, expected);

        let fixed = slides(&a, true);
        let expected_fixed: BTreeSet<WeakComposition> = [
            [0, 3, 0, 2],
            [1, 2, 0, 2],
            [2, 1, 0, 2],
            [0, 3, 1, 1],
            [1, 2, 1, 1],
            [2, 1, 1, 1],
        ]
        .iter()
        .map(|p| wc(p))
        .collect();
        assert_eq!(fixed, expected_fixed);

        assert_eq!(slides(&wc(&[2, 1]), false).len(), 1);
        assert_eq!(slides(&wc(&[2, 1]), true).len(), 1);
    }

    #[test]
    fn sorting_perm_examples() {
        assert_eq!(
            wc(&[0, 1, 0, 3]).sorting_perm(),
            Permutation::from_one_line(vec![3, 2, 4, 1])
        );
        assert_eq!(
            wc(&[3, 1, 0, 0]).sorting_perm(),
            Permutation::from_one_line(vec![1, 2, 3, 4])
        );
        assert_eq!(
            wc(&[0, 0, 1]).sorting_perm(),
            Permutation::from_one_line(vec![2, 3, 1])
        );
    }

    #[test]
    fn bruhat_examples() {
        let w = Permutation::from_one_line(vec![3, 2, 4, 1]);
        assert!(w.bruhat_leq(&w));
        assert!(Permutation::from_one_line(vec![1, 2, 3, 4]).bruhat_leq(&w));
        assert!(!Permutation::from_one_line(vec![4, 2, 3, 1]).bruhat_leq(&w));
    }

    #[test]
    fn flat_class_above_examples() {
        let got = flat_class_above(&wc(&[0, 3, 0, 2]));
        let expected: Vec<WeakComposition> = {
            let mut v = vec![
                wc(&[0, 3, 0, 2]),
                wc(&[3, 0, 0, 2]),
                wc(&[0, 3, 2, 0]),
                wc(&[3, 0, 2, 0]),
                wc(&[3, 2, 0, 0]),
            ];
            v.sort();
            v
        };
        assert_eq!(got, expected);
    }

    #[test]
    fn strong_dominators_refining_example() {
        let got = strong_dominators_refining(&wc(&[0, 1, 0, 3]));
        let expected: Vec<WeakComposition> = {
            let mut v = vec![
                wc(&[0, 1, 0, 3]),
                wc(&[0, 1, 1, 2]),
                wc(&[0, 1, 2, 1]),
                wc(&[1, 1, 1, 1]),
            ];
            v.sort();
            v
        };
        assert_eq!(got, expected);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let a: WeakComposition = "0,1,0,3".parse().unwrap();
        assert_eq!(a, wc(&[0, 1, 0, 3]));
        assert_eq!(a.to_string(), "0,1,0,3");
        assert_eq!("".parse::<WeakComposition>().unwrap(), wc(&[]));
        assert!("1,x".parse::<WeakComposition>().is_err());
        assert!("2,1".parse::<Partition>().is_ok());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
    }

    #[test]
    fn composition_enumeration_counts() {
        assert_eq!(compositions_of(5, 4).len(), 56);
        assert_eq!(compositions_of(0, 0).len(), 1);
        assert_eq!(compositions_of(3, 0).len(), 0);
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(strong_compositions_of(4).len(), 8);
        assert_eq!(rearrangements(&wc(&[0, 1, 0, 3])).len(), 12);
    }

    #[test]
    fn prepend_and_pad() {
        assert_eq!(wc(&[1, 3]).prepend_zeros(2), wc(&[0, 0, 1, 3]));
        assert_eq!(wc(&[1, 3]).prepend_zeros(0), wc(&[1, 3]));
        assert_eq!(wc(&[0, 1]).prepend_zeros(1), wc(&[0, 0, 1]));
        assert_eq!(wc(&[1]).pad_to(3), wc(&[1, 0, 0]));
    }
}
