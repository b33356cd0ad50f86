//! Signature words of addable/removable nodes and their `RA`-reduction.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LetterKind {
    Addable,
    Removable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter<N> {
    pub kind: LetterKind,
    pub node: N,
}

/// Letters listed in increasing node order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureWord<N> {
    letters: Vec<Letter<N>>,
}

impl<N: Copy> SignatureWord<N> {
    pub(crate) fn new(letters: Vec<Letter<N>>) -> Self {
        SignatureWord { letters }
    }

    pub fn letters(&self) -> &[Letter<N>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `A^p R^q` after cancelling `RA` factors, as `(addables, removables)`.
    pub fn reduced(&self) -> (Vec<N>, Vec<N>) {
        let mut addable = Vec::new();
        let mut removable: Vec<N> = Vec::new();
        for letter in &self.letters {
            match letter.kind {
                LetterKind::Removable => removable.push(letter.node),
                LetterKind::Addable => {
                    // an A cancels the closest unmatched R before it
                    if removable.pop().is_none() {
                        addable.push(letter.node);
                    }
                }
            }
        }
        (addable, removable)
    }

    /// Node of the rightmost `A` in the reduced word.
    pub fn good_addable(&self) -> Option<N> {
        self.reduced().0.last().copied()
    }

    /// Node of the leftmost `R` in the reduced word.
    pub fn good_removable(&self) -> Option<N> {
        self.reduced().1.first().copied()
    }

    /// The reduced word rendered as a string of `A`s and `R`s.
    pub fn reduced_pattern(&self) -> String {
        let (a, r) = self.reduced();
        "A".repeat(a.len()) + &"R".repeat(r.len())
    }
}
