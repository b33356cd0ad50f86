//! The level-1 Fock space crystal and Kleshchev's Mullineux map.
//!
//! For a residue `j` the `j`-signature of `λ` lists its addable (`A`) and
//! removable (`R`) `j`-nodes from the bottom row to the top row. After
//! cancelling every `RA` factor the word is `A^p R^q`; `f̃_j` adds the node of
//! the rightmost `A` and `ẽ_j` removes the node of the leftmost `R`.
//!
//! The vertices connected to `∅` are exactly the `e`-regular partitions, and
//! negating the residues of any path from `∅` to `λ` yields a path to the
//! Mullineux image `m_e(λ)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate_e_regular, Modulus, Node, Partition};
use crate::signature::{Letter, LetterKind, SignatureWord};

/// The `j`-signature of `λ` in increasing node order (largest row first).
pub fn signature_word(lambda: &Partition, j: usize, e: Modulus) -> SignatureWord<Node> {
    let mut letters: Vec<Letter<Node>> = lambda
        .addable_nodes()
        .map(|node| Letter {
            kind: LetterKind::Addable,
            node,
        })
        .chain(lambda.removable_nodes().map(|node| Letter {
            kind: LetterKind::Removable,
            node,
        }))
        .filter(|l| e.residue(l.node.content()) == j)
        .collect();
    letters.sort_by_key(|l| std::cmp::Reverse(l.node.row));
    SignatureWord::new(letters)
}

pub fn good_addable(lambda: &Partition, j: usize, e: Modulus) -> Option<Node> {
    signature_word(lambda, j, e).good_addable()
}

pub fn good_removable(lambda: &Partition, j: usize, e: Modulus) -> Option<Node> {
    signature_word(lambda, j, e).good_removable()
}

/// `f̃_j · λ`, or `None` when there is no good addable `j`-node.
pub fn f_tilde(lambda: &Partition, j: usize, e: Modulus) -> Option<Partition> {
    good_addable(lambda, j, e).map(|node| lambda.with_node_added(node))
}

/// `ẽ_j · λ`, or `None` when there is no good removable `j`-node.
pub fn e_tilde(lambda: &Partition, j: usize, e: Modulus) -> Option<Partition> {
    good_removable(lambda, j, e).map(|node| lambda.with_node_removed(node))
}

/// A residue sequence `(i_1, …, i_n)` standing for `f̃_{i_1} ⋯ f̃_{i_n}`.
///
/// `i_n` is applied first when replaying.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ResiduePath {
    residues: Vec<usize>,
}

impl ResiduePath {
    pub fn new(residues: Vec<usize>) -> Self {
        ResiduePath { residues }
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// `(-i_1, …, -i_n)` reduced modulo `e`.
    pub fn negated(&self, e: Modulus) -> ResiduePath {
        ResiduePath::new(self.residues.iter().map(|&i| e.negate(i)).collect())
    }

    /// Applies the operators to `∅`, rightmost first.
    pub fn replay(&self, e: Modulus) -> Option<Partition> {
        self.replay_from(Partition::empty(), e)
    }

    pub fn replay_from(&self, start: Partition, e: Modulus) -> Option<Partition> {
        self.residues
            .iter()
            .rev()
            .try_fold(start, |lambda, &j| f_tilde(&lambda, e.residue(j as i64), e))
    }
}

impl FromIterator<usize> for ResiduePath {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ResiduePath::new(iter.into_iter().collect())
    }
}

/// Strips good removable nodes down to `∅`, scanning residues `0, …, e-1`
/// and taking the first defined `ẽ_j` at every step.
pub fn residue_path_to_empty(lambda: &Partition, e: Modulus) -> Result<ResiduePath> {
    let mut residues = Vec::with_capacity(lambda.rank());
    let mut current = lambda.clone();
    while !current.is_empty() {
        let step = (0..e.get()).find_map(|j| e_tilde(&current, j, e).map(|mu| (j, mu)));
        match step {
            Some((j, mu)) => {
                residues.push(j);
                current = mu;
            }
            None => return Err(Error::NotRegular(lambda.to_string(), e.get())),
        }
    }
    Ok(ResiduePath::new(residues))
}

/// `m_e(λ)` by Kleshchev's theorem: replay the negated residue path.
pub fn mullineux_kleshchev(lambda: &Partition, e: Modulus) -> Result<Partition> {
    let path = residue_path_to_empty(lambda, e)?;
    Ok(path
        .negated(e)
        .replay(e)
        .expect("negated path of an e-regular partition replays"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalEdge {
    pub source: usize,
    pub target: usize,
    pub residue: usize,
}

/// The component of `∅` in the level-1 crystal, truncated at rank `n_max`.
///
/// Vertices are ordered by rank and then reverse-lexicographically. Every
/// `f̃_j` arrow between kept vertices is listed; `parent[v]` is the vertex
/// reached from `v` by the canonical stripping step, so the `parent` arrows
/// form a spanning tree rooted at `∅` (index 0).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub e: Modulus,
    pub n_max: usize,
    pub vertices: Vec<Partition>,
    pub edges: Vec<CrystalEdge>,
    pub parent: Vec<Option<usize>>,
}

pub fn crystal_graph_export(e: Modulus, n_max: usize) -> CrystalGraph {
    let vertices: Vec<Partition> = (0..=n_max)
        .flat_map(|n| enumerate_e_regular(n, e))
        .collect();
    let index: HashMap<&Partition, usize> =
        vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let mut edges = Vec::new();
    for (source, lambda) in vertices.iter().enumerate() {
        if lambda.rank() == n_max {
            continue;
        }
        for j in 0..e.get() {
            if let Some(mu) = f_tilde(lambda, j, e) {
                let target = index[&mu];
                edges.push(CrystalEdge {
                    source,
                    target,
                    residue: j,
                });
            }
        }
    }

    let parent = vertices
        .iter()
        .map(|lambda| {
            (0..e.get())
                .find_map(|j| e_tilde(lambda, j, e))
                .map(|mu| index[&mu])
        })
        .collect();

    CrystalGraph {
        e,
        n_max,
        vertices,
        edges,
        parent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e(e: usize) -> Modulus {
        Modulus::new(e).unwrap()
    }

    /// Direct scan of the diagram: every cell that can be added or removed.
    fn brute_force_word(lambda: &Partition, j: usize, e: Modulus) -> Vec<(LetterKind, Node)> {
        let rows = lambda.len() + 1;
        let mut found = Vec::new();
        for row in 1..=rows {
            for col in 1..=lambda.part(1) + 1 {
                let node = Node::new(row, col);
                if e.residue(node.content()) != j {
                    continue;
                }
                let mut parts: Vec<usize> = (1..=rows).map(|r| lambda.part(r)).collect();
                if lambda.contains_node(node) {
                    if col == parts[row - 1] {
                        parts[row - 1] -= 1;
                        if Partition::new(parts).is_ok() {
                            found.push((LetterKind::Removable, node));
                        }
                    }
                } else if col == parts[row - 1] + 1 {
                    parts[row - 1] += 1;
                    if Partition::new(parts).is_ok() {
                        found.push((LetterKind::Addable, node));
                    }
                }
            }
        }
        found.sort_by_key(|f| std::cmp::Reverse(f.1.row));
        found
    }

    #[test]
    fn signature_of_empty_and_single_box() {
        let w = signature_word(&Partition::empty(), 0, e(3));
        assert_eq!(
            w.letters(),
            &[Letter {
                kind: LetterKind::Addable,
                node: Node::new(1, 1)
            }]
        );
        let w = signature_word(&p(&[1]), 0, e(3));
        assert_eq!(
            w.letters(),
            &[Letter {
                kind: LetterKind::Removable,
                node: Node::new(1, 1)
            }]
        );
    }

    #[test]
    fn signature_matches_diagram_scan() {
        let w = signature_word(&p(&[2, 1]), 1, e(3));
        assert!(w.letters().contains(&Letter {
            kind: LetterKind::Addable,
            node: Node::new(3, 1)
        }));
        for n in 0..=9 {
            for lambda in enumerate_partitions(n) {
                for modulus in 2..=5 {
                    let m = e(modulus);
                    for j in 0..modulus {
                        let got: Vec<_> = signature_word(&lambda, j, m)
                            .letters()
                            .iter()
                            .map(|l| (l.kind, l.node))
                            .collect();
                        assert_eq!(
                            got,
                            brute_force_word(&lambda, j, m),
                            "{lambda} j={j} e={modulus}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn good_nodes_of_empty() {
        assert_eq!(
            good_addable(&Partition::empty(), 0, e(4)),
            Some(Node::new(1, 1))
        );
        for j in 0..4 {
            assert_eq!(good_removable(&Partition::empty(), j, e(4)), None);
        }
    }

    #[test]
    fn displayed_path_replays_to_lambda() {
        // f0^2 f1^2 f0 f2^2 f1 f0 applied to ∅, rightmost first
        let path = ResiduePath::new(vec![0, 0, 1, 1, 0, 2, 2, 1, 0]);
        assert_eq!(path.replay(e(3)), Some(p(&[5, 2, 1, 1])));
        assert_eq!(path.negated(e(3)).replay(e(3)), Some(p(&[4, 2, 2, 1])));

        let path = ResiduePath::new(vec![0, 3, 4, 4, 3, 2, 1, 5, 0]);
        assert_eq!(path.replay(e(6)), Some(p(&[5, 2, 1, 1])));
        assert_eq!(path.negated(e(6)).replay(e(6)), Some(p(&[4, 2, 1, 1, 1])));
    }

    #[test]
    fn good_removable_is_first_stripped_node() {
        let lambda = p(&[5, 2, 1, 1]);
        let path = residue_path_to_empty(&lambda, e(3)).unwrap();
        let first = path.residues()[0];
        let node = good_removable(&lambda, first, e(3)).unwrap();
        let rest = ResiduePath::new(path.residues()[1..].to_vec());
        assert_eq!(rest.replay(e(3)), Some(lambda.with_node_removed(node)));
    }

    #[test]
    fn f_tilde_of_empty() {
        assert_eq!(f_tilde(&Partition::empty(), 0, e(3)), Some(p(&[1])));
        assert_eq!(f_tilde(&Partition::empty(), 1, e(3)), None);
        assert_eq!(e_tilde(&Partition::empty(), 0, e(3)), None);
    }

    #[test]
    fn residue_path_cases() {
        assert!(residue_path_to_empty(&Partition::empty(), e(3))
            .unwrap()
            .is_empty());
        let lambda = p(&[5, 2, 1, 1]);
        let path = residue_path_to_empty(&lambda, e(3)).unwrap();
        assert_eq!(path.len(), 9);
        assert_eq!(path.replay(e(3)), Some(lambda));
        assert!(matches!(
            residue_path_to_empty(&p(&[1, 1, 1]), e(3)),
            Err(Error::NotRegular(_, 3))
        ));
    }

    #[test]
    fn kleshchev_examples() {
        assert_eq!(
            mullineux_kleshchev(&p(&[5, 2, 1, 1]), e(3)).unwrap(),
            p(&[4, 2, 2, 1])
        );
        assert_eq!(
            mullineux_kleshchev(&p(&[5, 2, 1, 1]), e(6)).unwrap(),
            p(&[4, 2, 1, 1, 1])
        );
        assert_eq!(
            mullineux_kleshchev(&p(&[6, 5, 5, 4, 1, 1]), e(6)).unwrap(),
            p(&[11, 9, 2])
        );
        assert!(mullineux_kleshchev(&p(&[2, 2]), e(2)).is_err());
        assert_eq!(
            mullineux_kleshchev(&Partition::empty(), e(2)).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn graph_small_cases() {
        let g = crystal_graph_export(e(3), 0);
        assert_eq!(g.vertices, vec![Partition::empty()]);
        assert!(g.edges.is_empty());

        let g = crystal_graph_export(e(2), 3);
        let mut got = g.vertices.clone();
        got.sort();
        let mut want = vec![Partition::empty(), p(&[1]), p(&[2]), p(&[3]), p(&[2, 1])];
        want.sort();
        assert_eq!(got, want);

        let g = crystal_graph_export(e(3), 4);
        let count: usize = (0..=4).map(|n| enumerate_e_regular(n, e(3)).count()).sum();
        assert_eq!(g.vertices.len(), count);
    }
}
