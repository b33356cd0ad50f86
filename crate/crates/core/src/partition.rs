//! Partitions, Young diagram nodes and β-sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The integer `e ≥ 2` that residues are taken modulo.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Modulus(usize);

impl Modulus {
    pub fn new(e: usize) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidModulus(e));
        }
        Ok(Modulus(e))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// The modulus `2e`, the next level of the recursive algorithm.
    pub fn doubled(self) -> Self {
        Modulus(2 * self.0)
    }

    /// Canonical representative in `0..e` of an integer content.
    pub fn residue(self, content: i64) -> usize {
        content.rem_euclid(self.0 as i64) as usize
    }

    /// The residue `-i mod e`.
    pub fn negate(self, residue: usize) -> usize {
        (self.0 - residue % self.0) % self.0
    }
}

impl TryFrom<usize> for Modulus {
    type Error = Error;

    fn try_from(e: usize) -> Result<Self> {
        Modulus::new(e)
    }
}

impl From<Modulus> for usize {
    fn from(e: Modulus) -> usize {
        e.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A cell `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }

    /// `col - row`, the uncharged content.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A partition stored in canonical form: weakly decreasing positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, trimming trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_canonical(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part in 1-based row `row`, zero beyond the last part.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains_node(&self, node: Node) -> bool {
        node.col <= self.part(node.row)
    }

    /// Nodes `(a, λ_a + 1)` whose addition leaves a partition, top row first.
    pub fn addable_nodes(&self) -> impl Iterator<Item = Node> + '_ {
        (1..=self.len() + 1)
            .filter(move |&a| a == 1 || self.part(a - 1) > self.part(a))
            .map(move |a| Node::new(a, self.part(a) + 1))
    }

    /// Nodes `(a, λ_a)` whose removal leaves a partition, top row first.
    pub fn removable_nodes(&self) -> impl Iterator<Item = Node> + '_ {
        (1..=self.len())
            .filter(move |&a| self.part(a) > self.part(a + 1))
            .map(move |a| Node::new(a, self.part(a)))
    }

    /// Adds an addable node. The caller guarantees addability.
    pub(crate) fn with_node_added(&self, node: Node) -> Partition {
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            debug_assert_eq!(node.row, parts.len() + 1);
            debug_assert_eq!(node.col, 1);
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Partition::from_canonical(parts)
    }

    /// Removes a removable node. The caller guarantees removability.
    pub(crate) fn with_node_removed(&self, node: Node) -> Partition {
        let mut parts = self.parts.clone();
        parts[node.row - 1] -= 1;
        if parts[node.row - 1] == 0 {
            parts.pop();
        }
        Partition::from_canonical(parts)
    }

    /// The transpose diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::from_canonical(parts)
    }

    /// True iff no part value is repeated `e` or more times.
    pub fn is_e_regular(&self, e: Modulus) -> bool {
        let e = e.get();
        self.parts.chunk_by(|a, b| a == b).all(|run| run.len() < e)
    }

    /// True iff no hook length is divisible by `e`.
    ///
    /// Checked on a β-set: every bead `x ≥ e` must have `x - e` occupied.
    pub fn is_e_core(&self, e: Modulus) -> bool {
        let beta = self
            .beta_set(self.len().max(1))
            .expect("length covers the parts");
        let e = e.get();
        beta.elements()
            .iter()
            .all(|&x| x < e || beta.contains(x - e))
    }

    /// `{λ_j - j + L : 1 ≤ j ≤ L}`.
    pub fn beta_set(&self, length: usize) -> Result<BetaSet> {
        if length < self.len() || length == 0 {
            return Err(Error::BetaLengthTooShort {
                length,
                parts: self.len(),
            });
        }
        let mut elements: Vec<usize> = (1..=length).map(|j| self.part(j) + length - j).collect();
        elements.reverse();
        Ok(BetaSet::from_sorted(elements))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A finite, non-empty, strictly increasing set of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct BetaSet {
    elements: Vec<usize>,
}

impl BetaSet {
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.is_empty() || elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBetaSet(elements));
        }
        Ok(BetaSet { elements })
    }

    pub(crate) fn from_sorted(elements: Vec<usize>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        BetaSet { elements }
    }

    /// Collects arbitrary distinct values into a β-set.
    pub(crate) fn from_unsorted(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        BetaSet::from_sorted(elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &BetaSet) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    /// `{0} ∪ {x + 1}`: the same partition encoded with one more bead.
    pub fn padded(&self) -> BetaSet {
        let elements = std::iter::once(0)
            .chain(self.elements.iter().map(|x| x + 1))
            .collect();
        BetaSet::from_sorted(elements)
    }

    /// Decodes the partition: with `d_1 > … > d_L`, parts `d_j + j - L`.
    pub fn to_partition(&self) -> Partition {
        let length = self.len();
        let parts = self
            .elements
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &d)| d + i + 1 - length)
            .filter(|&p| p > 0)
            .collect();
        Partition::from_canonical(parts)
    }
}

impl TryFrom<Vec<usize>> for BetaSet {
    type Error = Error;

    fn try_from(elements: Vec<usize>) -> Result<Self> {
        BetaSet::new(elements)
    }
}

impl From<BetaSet> for Vec<usize> {
    fn from(b: BetaSet) -> Vec<usize> {
        b.elements
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting from `(n)`.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// The `e`-regular partitions of `n`, in the order of [`enumerate_partitions`].
pub fn enumerate_e_regular(n: usize, e: Modulus) -> impl Iterator<Item = Partition> {
    enumerate_partitions(n).filter(move |p| p.is_e_regular(e))
}

/// Partitions of every rank `0..=n_max`, rank by rank.
pub fn enumerate_up_to(n_max: usize) -> impl Iterator<Item = Partition> {
    (0..=n_max).flat_map(enumerate_partitions)
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let result = Partition::from_canonical(parts.clone());

        // Decrease the last part exceeding 1 and refill greedily behind it.
        if let Some(i) = parts.iter().rposition(|&p| p > 1) {
            let mut next = parts[..=i].to_vec();
            next[i] -= 1;
            let cap = next[i];
            let mut rest: usize = parts[i + 1..].iter().sum::<usize>() + 1;
            while rest > 0 {
                let p = rest.min(cap);
                next.push(p);
                rest -= p;
            }
            self.current = Some(next);
        }
        Some(result)
    }
}
