//! The level-2 Fock space crystal of bipartitions with a bicharge `s = (s1, s2)`.
//!
//! A node `(a, b, c)` has content `b - a + s_c`. Same-residue nodes are
//! ordered by content, and on equal content the node of component 2 comes
//! first. Kashiwara operators are then defined from the signature word
//! exactly as in level 1.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::level1::{mullineux_kleshchev, ResiduePath};
use crate::partition::{Modulus, Node, Partition};
use crate::signature::{Letter, LetterKind, SignatureWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bicharge {
    pub s1: i64,
    pub s2: i64,
}

impl Bicharge {
    pub fn new(s1: i64, s2: i64) -> Self {
        Bicharge { s1, s2 }
    }

    pub fn charge(&self, component: Component) -> i64 {
        match component {
            Component::First => self.s1,
            Component::Second => self.s2,
        }
    }

    /// `(s1, s2 + shift)`.
    pub fn shifted(&self, shift: i64) -> Bicharge {
        Bicharge::new(self.s1, self.s2 + shift)
    }

    pub fn negated(&self) -> Bicharge {
        Bicharge::new(-self.s1, -self.s2)
    }
}

impl fmt::Display for Bicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s1, self.s2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Component {
    First,
    Second,
}

impl Component {
    pub fn index(self) -> u8 {
        match self {
            Component::First => 1,
            Component::Second => 2,
        }
    }
}

/// A node `(row, col, component)` of a bipartition diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Node3 {
    pub row: usize,
    pub col: usize,
    pub component: Component,
}

impl Node3 {
    pub fn new(row: usize, col: usize, component: Component) -> Self {
        Node3 {
            row,
            col,
            component,
        }
    }

    fn from_node(node: Node, component: Component) -> Self {
        Node3::new(node.row, node.col, component)
    }

    fn node(&self) -> Node {
        Node::new(self.row, self.col)
    }

    pub fn content(&self, s: Bicharge) -> i64 {
        self.col as i64 - self.row as i64 + s.charge(self.component)
    }
}

/// The order `≺_s`: smaller content first, component 2 first on ties.
pub fn node_order(a: &Node3, b: &Node3, s: Bicharge) -> Ordering {
    a.content(s)
        .cmp(&b.content(s))
        .then_with(|| b.component.cmp(&a.component))
}

/// `γ ≺_s γ′`.
pub fn node_less(a: &Node3, b: &Node3, s: Bicharge) -> bool {
    node_order(a, b, s) == Ordering::Less
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    /// `(λ, λ)`.
    pub fn doubled(lambda: &Partition) -> Self {
        Bipartition::new(lambda.clone(), lambda.clone())
    }

    pub fn rank(&self) -> usize {
        self.first.rank() + self.second.rank()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty() && self.second.is_empty()
    }

    pub fn component(&self, component: Component) -> &Partition {
        match component {
            Component::First => &self.first,
            Component::Second => &self.second,
        }
    }

    fn with_component(&self, component: Component, p: Partition) -> Bipartition {
        match component {
            Component::First => Bipartition::new(p, self.second.clone()),
            Component::Second => Bipartition::new(self.first.clone(), p),
        }
    }

    pub fn addable_nodes(&self) -> impl Iterator<Item = Node3> + '_ {
        [Component::First, Component::Second]
            .into_iter()
            .flat_map(move |c| {
                self.component(c)
                    .addable_nodes()
                    .map(move |n| Node3::from_node(n, c))
            })
    }

    pub fn removable_nodes(&self) -> impl Iterator<Item = Node3> + '_ {
        [Component::First, Component::Second]
            .into_iter()
            .flat_map(move |c| {
                self.component(c)
                    .removable_nodes()
                    .map(move |n| Node3::from_node(n, c))
            })
    }

    pub(crate) fn with_node_added(&self, node: Node3) -> Bipartition {
        let p = self.component(node.component).with_node_added(node.node());
        self.with_component(node.component, p)
    }

    pub(crate) fn with_node_removed(&self, node: Node3) -> Bipartition {
        let p = self
            .component(node.component)
            .with_node_removed(node.node());
        self.with_component(node.component, p)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// The word `w_i^{(e,s)}` in increasing `≺_s` order.
pub fn signature_word2(
    blambda: &Bipartition,
    i: usize,
    e: Modulus,
    s: Bicharge,
) -> SignatureWord<Node3> {
    let mut letters: Vec<Letter<Node3>> = blambda
        .addable_nodes()
        .map(|node| Letter {
            kind: LetterKind::Addable,
            node,
        })
        .chain(blambda.removable_nodes().map(|node| Letter {
            kind: LetterKind::Removable,
            node,
        }))
        .filter(|l| e.residue(l.node.content(s)) == i)
        .collect();
    letters.sort_by(|a, b| node_order(&a.node, &b.node, s));
    SignatureWord::new(letters)
}

pub fn f_tilde2(blambda: &Bipartition, i: usize, e: Modulus, s: Bicharge) -> Option<Bipartition> {
    signature_word2(blambda, i, e, s)
        .good_addable()
        .map(|node| blambda.with_node_added(node))
}

pub fn e_tilde2(blambda: &Bipartition, i: usize, e: Modulus, s: Bicharge) -> Option<Bipartition> {
    signature_word2(blambda, i, e, s)
        .good_removable()
        .map(|node| blambda.with_node_removed(node))
}

/// Applies `f̃^s_{i_1} ⋯ f̃^s_{i_n}` to `(∅, ∅)`, rightmost first.
pub fn replay2(path: &ResiduePath, e: Modulus, s: Bicharge) -> Option<Bipartition> {
    path.residues()
        .iter()
        .rev()
        .try_fold(Bipartition::empty(), |b, &i| {
            f_tilde2(&b, e.residue(i as i64), e, s)
        })
}

fn strip_to_empty(blambda: &Bipartition, e: Modulus, s: Bicharge) -> Option<ResiduePath> {
    let mut residues = Vec::with_capacity(blambda.rank());
    let mut current = blambda.clone();
    while !current.is_empty() {
        let (i, next) = (0..e.get()).find_map(|i| e_tilde2(&current, i, e, s).map(|b| (i, b)))?;
        residues.push(i);
        current = next;
    }
    Some(ResiduePath::new(residues))
}

/// Membership in `Φ_{(e,s)}`: canonical stripping reaches `(∅, ∅)`.
pub fn is_uglov(blambda: &Bipartition, e: Modulus, s: Bicharge) -> bool {
    strip_to_empty(blambda, e, s).is_some()
}

/// A path whose replay at `(e, s)` returns `blambda`.
pub fn residue_path_to_empty2(
    blambda: &Bipartition,
    e: Modulus,
    s: Bicharge,
) -> Result<ResiduePath> {
    strip_to_empty(blambda, e, s)
        .ok_or_else(|| Error::NotUglov(blambda.to_string(), e.get(), s.to_string()))
}

/// `|s2 - s1| > n - 1`.
///
/// The bound `n - 1 - e` is too weak: `ψ_{(6,(0,3))}((4),(4)) = ((2),(4,2))`
/// although `((4),(4))` is Uglov of rank 8. From `n - 1` on the shortcut
/// holds for every bipartition of rank `n`.
pub fn is_very_dominant(s: Bicharge, n: usize, _e: Modulus) -> bool {
    (s.s2 - s.s1).abs() > n as i64 - 1
}

/// `(s1, s2 + ke)` for the least `k ≥ 0` with `s1 ≤ s2 + ke` very dominant for rank `n`.
pub fn very_dominant_representative(s: Bicharge, n: usize, e: Modulus) -> Bicharge {
    let step = e.get() as i64;
    let mut rep = s;
    while rep.s2 < rep.s1 || !is_very_dominant(rep, n, e) {
        rep = rep.shifted(step);
    }
    rep
}

/// Membership in the Kleshchev set `Φ^K_{(e,s)}`.
pub fn is_kleshchev(blambda: &Bipartition, e: Modulus, s: Bicharge) -> bool {
    let rep = very_dominant_representative(s, blambda.rank(), e);
    is_uglov(blambda, e, rep)
}

/// `M_{(e,s)}`: negate a path at a very dominant `s¹ ≡ s` and replay it at a
/// very dominant `s² ≡ -s`.
pub fn mullineux_level2(blambda: &Bipartition, e: Modulus, s: Bicharge) -> Result<Bipartition> {
    let n = blambda.rank();
    let source = very_dominant_representative(s, n, e);
    let target = very_dominant_representative(s.negated(), n, e);
    mullineux_level2_at(blambda, e, source, target)
        .map_err(|_| Error::NotKleshchev(blambda.to_string(), e.get(), s.to_string()))
}

/// [`mullineux_level2`] with explicit very dominant representatives.
pub fn mullineux_level2_at(
    blambda: &Bipartition,
    e: Modulus,
    source: Bicharge,
    target: Bicharge,
) -> Result<Bipartition> {
    let path = residue_path_to_empty2(blambda, e, source)?;
    replay2(&path.negated(e), e, target)
        .ok_or_else(|| Error::NotKleshchev(blambda.to_string(), e.get(), source.to_string()))
}

/// `(m_e(λ¹), m_e(λ²))`.
pub fn componentwise_mullineux(blambda: &Bipartition, e: Modulus) -> Result<Bipartition> {
    Ok(Bipartition::new(
        mullineux_kleshchev(&blambda.first, e)?,
        mullineux_kleshchev(&blambda.second, e)?,
    ))
}

/// All bipartitions of rank `n`, ordered by `|λ¹|` then each component's order.
pub fn enumerate_bipartitions(n: usize) -> impl Iterator<Item = Bipartition> {
    use crate::partition::enumerate_partitions;
    (0..=n).flat_map(move |a| {
        enumerate_partitions(a).flat_map(move |first| {
            enumerate_partitions(n - a).map(move |second| Bipartition::new(first.clone(), second))
        })
    })
}
