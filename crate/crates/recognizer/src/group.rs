//! Breadth-first closure of a finite group given by involutive
//! generators, with ShortLex-minimal words over the given generating
//! set. Lengths here are word lengths over these generators, never over
//! any Coxeter presentation.

use crate::error::{RecognizerError, Result};
use crate::perm::Permutation;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct FiniteActionGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// All elements in ShortLex order of their minimal words.
    elements: Vec<Permutation>,
    /// ShortLex-minimal word over the generators for each element.
    words: Vec<Vec<u8>>,
    index: HashMap<Permutation, usize>,
    /// right[i][s] = index of elements[i] * generators[s]
    right: Vec<Vec<usize>>,
    /// left[i][s] = index of generators[s] * elements[i]
    left: Vec<Vec<usize>>,
}

/// Enumerate the group generated by involutive permutations.
///
/// BFS over right multiplication with generators taken in ascending
/// order visits candidate words in ShortLex order, so the first word
/// reaching an element is its ShortLex-minimal word.
pub fn close_group(generators: &[Permutation], cap: usize) -> Result<FiniteActionGroup> {
    let degree = generators.iter().map(Permutation::degree).max().unwrap_or(1);
    let generators: Vec<Permutation> =
        generators.iter().map(|g| g.extend_to(degree)).collect();
    for (index, g) in generators.iter().enumerate() {
        if g.is_identity() {
            return Err(RecognizerError::IdentityGenerator { index });
        }
        if g.order() != 2 {
            return Err(RecognizerError::NotInvolution { index });
        }
    }

    let mut elements = vec![Permutation::identity(degree)];
    let mut words: Vec<Vec<u8>> = vec![vec![]];
    let mut index = HashMap::from([(elements[0].clone(), 0usize)]);
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut at = 0usize;
    while at < elements.len() {
        let mut row = Vec::with_capacity(generators.len());
        for (s, g) in generators.iter().enumerate() {
            let next = elements[at].compose(g)?;
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    if elements.len() >= cap {
                        return Err(RecognizerError::CapExceeded { cap });
                    }
                    let j = elements.len();
                    let mut w = words[at].clone();
                    w.push(s as u8);
                    elements.push(next.clone());
                    words.push(w);
                    index.insert(next, j);
                    j
                }
            };
            row.push(j);
        }
        right.push(row);
        at += 1;
    }

    let mut left = Vec::with_capacity(elements.len());
    for e in &elements {
        let mut row = Vec::with_capacity(generators.len());
        for g in &generators {
            row.push(index[&g.compose(e)?]);
        }
        left.push(row);
    }

    Ok(FiniteActionGroup { degree, generators, elements, words, index, right, left })
}

impl FiniteActionGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// ShortLex-minimal word of element `i` over the given generators.
    pub fn word(&self, i: usize) -> &[u8] {
        &self.words[i]
    }

    /// Word length of element `i` over the given generators.
    pub fn length(&self, i: usize) -> usize {
        self.words[i].len()
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn right_mul(&self, i: usize, s: u8) -> usize {
        self.right[i][usize::from(s)]
    }

    pub fn left_mul(&self, s: u8, i: usize) -> usize {
        self.left[i][usize::from(s)]
    }
}
