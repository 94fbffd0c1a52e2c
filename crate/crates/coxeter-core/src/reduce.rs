//! Word reduction by braid-move closure.
//!
//! A word is reduced exactly when no word in its closure under braid
//! substitutions `s t s ... <-> t s t ...` (with `m(s,t)` letters on
//! each side) contains an adjacent equal pair. Reduction repeatedly
//! closes the current word and deletes the first adjacent pair found
//! anywhere in the closure; each deletion shortens the word by two, so
//! the loop terminates. The normal form is the lexicographically least
//! member of the final closure (all members share one length, so this
//! is the ShortLex minimum).

use crate::error::{CoxeterError, Result};
use crate::matrix::CoxeterMatrix;
use crate::word::{GroupElement, Word};
use std::collections::BTreeSet;

/// Caps that keep desk-scale computations from running away.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Maximum number of words in one braid closure.
    pub closure_cap: usize,
    /// Maximum number of elements in a ball enumeration.
    pub ball_cap: usize,
    /// Maximum number of geometric descent steps.
    pub descend_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { closure_cap: 1_000_000, ball_cap: 100_000, descend_cap: 10_000 }
    }
}

fn first_adjacent_pair(w: &[u8]) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&i| w[i] == w[i + 1])
}

/// All words obtainable from `w` by braid moves alone, or a shorter
/// word if a deletion becomes available anywhere in the closure.
enum ClosureOutcome {
    Closed(BTreeSet<Vec<u8>>),
    Shorter(Vec<u8>),
}

fn braid_closure(m: &CoxeterMatrix, start: &[u8], cap: usize) -> Result<ClosureOutcome> {
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    seen.insert(start.to_vec());
    let mut queue: Vec<Vec<u8>> = vec![start.to_vec()];
    while let Some(w) = queue.pop() {
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if a == b {
                continue;
            }
            let Some(k) = m.bond(a.into(), b.into()) else {
                continue;
            };
            let k = k as usize;
            if i + k > w.len() {
                continue;
            }
            // The segment must alternate a,b,a,b,... for k letters.
            if !(0..k).all(|j| w[i + j] == if j % 2 == 0 { a } else { b }) {
                continue;
            }
            let mut new = w.clone();
            for j in 0..k {
                new[i + j] = if j % 2 == 0 { b } else { a };
            }
            if seen.contains(&new) {
                continue;
            }
            if let Some(p) = first_adjacent_pair(&new) {
                new.drain(p..p + 2);
                return Ok(ClosureOutcome::Shorter(new));
            }
            if seen.len() >= cap {
                return Err(CoxeterError::WordTooLong { cap });
            }
            seen.insert(new.clone());
            queue.push(new);
        }
    }
    Ok(ClosureOutcome::Closed(seen))
}

/// Reduce a word to the ShortLex-least reduced word for its element.
pub fn reduce(m: &CoxeterMatrix, w: &Word, caps: &Caps) -> Result<Word> {
    w.validate(m)?;
    let mut current = w.0.clone();
    loop {
        while let Some(p) = first_adjacent_pair(&current) {
            current.drain(p..p + 2);
        }
        match braid_closure(m, &current, caps.closure_cap)? {
            ClosureOutcome::Shorter(next) => current = next,
            ClosureOutcome::Closed(seen) => {
                // All members have the same length; BTreeSet order is lex.
                let least = seen.into_iter().next().expect("closure contains the start word");
                return Ok(Word(least));
            }
        }
    }
}

/// All reduced words for the element of the (reduced) word `w`.
pub fn reduced_expressions(m: &CoxeterMatrix, w: &Word, caps: &Caps) -> Result<Vec<Word>> {
    let nf = reduce(m, w, caps)?;
    match braid_closure(m, &nf.0, caps.closure_cap)? {
        ClosureOutcome::Closed(seen) => Ok(seen.into_iter().map(Word).collect()),
        ClosureOutcome::Shorter(_) => unreachable!("closure of a reduced word stays reduced"),
    }
}

/// ShortLex normal form of the element represented by `w`.
pub fn normal_form(m: &CoxeterMatrix, w: &Word, caps: &Caps) -> Result<GroupElement> {
    Ok(GroupElement::from_normal(reduce(m, w, caps)?))
}

/// Minimum length of a word representing the element of `w`.
pub fn length(m: &CoxeterMatrix, w: &Word, caps: &Caps) -> Result<usize> {
    Ok(reduce(m, w, caps)?.len())
}

/// Product of two elements, in normal form.
pub fn multiply(
    m: &CoxeterMatrix,
    a: &GroupElement,
    b: &GroupElement,
    caps: &Caps,
) -> Result<GroupElement> {
    let mut letters = a.normal().0.clone();
    letters.extend_from_slice(b.normal().letters());
    normal_form(m, &Word(letters), caps)
}

/// Inverse of an element: generators are involutions, so the inverse is
/// the reversed word, renormalized.
pub fn invert(m: &CoxeterMatrix, a: &GroupElement, caps: &Caps) -> Result<GroupElement> {
    let mut letters = a.normal().0.clone();
    letters.reverse();
    normal_form(m, &Word(letters), caps)
}

/// Left multiplication by a single generator.
pub fn left_mul(m: &CoxeterMatrix, s: u8, a: &GroupElement, caps: &Caps) -> Result<GroupElement> {
    let mut letters = Vec::with_capacity(a.length() + 1);
    letters.push(s);
    letters.extend_from_slice(a.normal().letters());
    normal_form(m, &Word(letters), caps)
}

/// Right multiplication by a single generator.
pub fn right_mul(m: &CoxeterMatrix, a: &GroupElement, s: u8, caps: &Caps) -> Result<GroupElement> {
    let mut letters = a.normal().0.clone();
    letters.push(s);
    normal_form(m, &Word(letters), caps)
}

/// The set `{s : l(s·gamma) < l(gamma)}`; empty exactly for the identity.
pub fn left_descents(m: &CoxeterMatrix, gamma: &GroupElement, caps: &Caps) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    for s in 0..m.rank() as u8 {
        if left_mul(m, s, gamma, caps)?.length() < gamma.length() {
            out.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn w(letters: &[u8]) -> Word {
        Word(letters.to_vec())
    }

    #[test]
    fn squares_cancel() {
        let m = CoxeterMatrix::dihedral(Some(3));
        assert_eq!(reduce(&m, &w(&[0, 0]), &caps()).unwrap(), Word::empty());
    }

    #[test]
    fn dihedral_m3_stst_reduces_to_ts() {
        // In the order-6 dihedral group (st)^3 = 1, so stst = (ts)^-1 = ts.
        let m = CoxeterMatrix::dihedral(Some(3));
        assert_eq!(reduce(&m, &w(&[0, 1, 0, 1]), &caps()).unwrap(), w(&[1, 0]));
    }

    #[test]
    fn dihedral_m4_stst_already_reduced() {
        let m = CoxeterMatrix::dihedral(Some(4));
        assert_eq!(reduce(&m, &w(&[0, 1, 0, 1]), &caps()).unwrap(), w(&[0, 1, 0, 1]));
    }

    #[test]
    fn braid_move_picks_shortlex_least() {
        // tst = sts in m=3; sts is ShortLex-smaller.
        let m = CoxeterMatrix::dihedral(Some(3));
        assert_eq!(reduce(&m, &w(&[1, 0, 1]), &caps()).unwrap(), w(&[0, 1, 0]));
    }

    #[test]
    fn infinite_bond_skips_braid_moves() {
        let m = CoxeterMatrix::dihedral(None);
        let long = w(&[0, 1, 0, 1, 0, 1, 0]);
        assert_eq!(reduce(&m, &long, &caps()).unwrap(), long);
    }

    #[test]
    fn length_examples() {
        let m = CoxeterMatrix::dihedral(Some(3));
        assert_eq!(length(&m, &Word::empty(), &caps()).unwrap(), 0);
        assert_eq!(length(&m, &w(&[0, 1, 0]), &caps()).unwrap(), 3);
        // ststs in m=3: brute-force oracle gives length 1 (equals t).
        assert_eq!(length(&m, &w(&[0, 1, 0, 1, 0]), &caps()).unwrap(), 1);
        assert_eq!(reduce(&m, &w(&[0, 1, 0, 1, 0]), &caps()).unwrap(), w(&[1]));
    }

    #[test]
    fn normal_form_idempotent() {
        let m = CoxeterMatrix::from_table(&[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]]).unwrap();
        let g = normal_form(&m, &w(&[2, 1, 0, 1, 2, 1, 0]), &caps()).unwrap();
        let again = normal_form(&m, g.normal(), &caps()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn multiply_and_invert() {
        let m = CoxeterMatrix::dihedral(Some(3));
        let st = normal_form(&m, &w(&[0, 1]), &caps()).unwrap();
        let ts = normal_form(&m, &w(&[1, 0]), &caps()).unwrap();
        let id = GroupElement::identity();
        assert_eq!(multiply(&m, &st, &ts, &caps()).unwrap(), id);
        assert_eq!(invert(&m, &st, &caps()).unwrap(), ts);
        assert_eq!(multiply(&m, &st, &id, &caps()).unwrap(), st);
        let s = normal_form(&m, &w(&[0]), &caps()).unwrap();
        assert_eq!(multiply(&m, &s, &s, &caps()).unwrap(), id);
    }

    #[test]
    fn left_descent_examples() {
        let m = CoxeterMatrix::dihedral(Some(3));
        let id = GroupElement::identity();
        assert!(left_descents(&m, &id, &caps()).unwrap().is_empty());
        let sts = normal_form(&m, &w(&[0, 1, 0]), &caps()).unwrap();
        assert_eq!(left_descents(&m, &sts, &caps()).unwrap(), vec![0, 1]);
        let st = normal_form(&m, &w(&[0, 1]), &caps()).unwrap();
        assert_eq!(left_descents(&m, &st, &caps()).unwrap(), vec![0]);
    }

    #[test]
    fn letter_out_of_range_rejected() {
        let m = CoxeterMatrix::dihedral(Some(3));
        assert!(reduce(&m, &w(&[0, 2]), &caps()).is_err());
    }

    #[test]
    fn closure_cap_trips() {
        let m = CoxeterMatrix::from_table(&[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]]).unwrap();
        let tight = Caps { closure_cap: 2, ..Caps::default() };
        // Longest element of the rank-3 symmetric-group system: 16 reduced words.
        let long = w(&[0, 1, 0, 2, 1, 0]);
        assert!(matches!(
            reduce(&m, &long, &tight),
            Err(CoxeterError::WordTooLong { cap: 2 })
        ));
    }
}
