//! Breadth-first enumeration of metric balls in the Cayley graph.

use crate::error::{CoxeterError, Result};
use crate::matrix::CoxeterMatrix;
use crate::reduce::{self, Caps};
use crate::word::{GroupElement, Word};
use std::collections::{BTreeSet, HashMap};

/// The elements of length at most some radius, ShortLex sorted, with a
/// right-multiplication table usable as a normal-form lookup automaton.
#[derive(Debug, Clone)]
pub struct Ball {
    matrix: CoxeterMatrix,
    radius: usize,
    elements: Vec<GroupElement>,
    index: HashMap<Word, usize>,
    /// right[i][s] = index of elements[i]·s, None when it leaves the ball.
    right: Vec<Vec<Option<usize>>>,
    /// Count of elements of each length 0..=radius.
    layer_sizes: Vec<usize>,
}

/// BFS over right multiplication, layer by layer.
///
/// Stops after `radius` layers when given, or when a layer comes up
/// empty. Errors with `BallTooLarge` past the element cap.
fn bfs_layers(
    m: &CoxeterMatrix,
    radius: Option<usize>,
    cap: usize,
    caps: &Caps,
) -> Result<Vec<Vec<Word>>> {
    let mut layers: Vec<Vec<Word>> = vec![vec![Word::empty()]];
    let mut total = 1usize;
    if total > cap {
        return Err(CoxeterError::BallTooLarge { cap });
    }
    loop {
        if let Some(r) = radius {
            if layers.len() > r {
                break;
            }
        }
        let prev = layers.last().unwrap();
        let mut next: BTreeSet<Word> = BTreeSet::new();
        for word in prev {
            for s in 0..m.rank() as u8 {
                let mut letters = word.0.clone();
                letters.push(s);
                let nf = reduce::reduce(m, &Word(letters), caps)?;
                if nf.len() > word.len() {
                    next.insert(nf);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        if total > cap {
            return Err(CoxeterError::BallTooLarge { cap });
        }
        // Words in a layer share one length, so lex order is ShortLex.
        layers.push(next.into_iter().collect());
    }
    Ok(layers)
}

impl Ball {
    /// Enumerate all elements of length <= radius.
    pub fn enumerate(m: &CoxeterMatrix, radius: usize, caps: &Caps) -> Result<Self> {
        let layers = bfs_layers(m, Some(radius), caps.ball_cap, caps)?;
        Self::from_layers(m.clone(), radius, layers, caps)
    }

    /// Enumerate the whole group; errors with `BallTooLarge` if it has
    /// more than `cap` elements.
    pub fn enumerate_group(m: &CoxeterMatrix, cap: usize, caps: &Caps) -> Result<Self> {
        let layers = bfs_layers(m, None, cap, caps)?;
        let radius = layers.len() - 1;
        Self::from_layers(m.clone(), radius, layers, caps)
    }

    fn from_layers(
        matrix: CoxeterMatrix,
        radius: usize,
        layers: Vec<Vec<Word>>,
        caps: &Caps,
    ) -> Result<Self> {
        let layer_sizes: Vec<usize> = (0..=radius)
            .map(|l| layers.get(l).map_or(0, Vec::len))
            .collect();
        let elements: Vec<GroupElement> = layers
            .into_iter()
            .flatten()
            .map(GroupElement::from_normal)
            .collect();
        let index: HashMap<Word, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.normal().clone(), i))
            .collect();
        let mut right = Vec::with_capacity(elements.len());
        for g in &elements {
            let mut row = Vec::with_capacity(matrix.rank());
            for s in 0..matrix.rank() as u8 {
                let nf = reduce::right_mul(&matrix, g, s, caps)?;
                row.push(index.get(nf.normal()).copied());
            }
            right.push(row);
        }
        Ok(Ball { matrix, radius, elements, index, right, layer_sizes })
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of elements of each length, index 0..=radius.
    pub fn layer_sizes(&self) -> &[usize] {
        &self.layer_sizes
    }

    pub fn position(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g.normal()).copied()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(g.normal())
    }

    /// Index of elements[i]·s when it stays inside the ball.
    pub fn right_step(&self, i: usize, s: u8) -> Option<usize> {
        self.right[i][usize::from(s)]
    }

    /// Normal form by walking the right-multiplication automaton from
    /// the identity. None when some prefix leaves the ball; this is the
    /// table path of the word problem, independent of braid closure
    /// except for how the table itself was built.
    pub fn lookup_normal_form(&self, w: &Word) -> Option<GroupElement> {
        let mut at = 0usize;
        for &s in w.letters() {
            if usize::from(s) >= self.matrix.rank() {
                return None;
            }
            at = self.right[at][usize::from(s)]?;
        }
        Some(self.elements[at].clone())
    }
}

/// Exact group order, or `None` when it exceeds `cap`.
pub fn group_order(m: &CoxeterMatrix, cap: usize, caps: &Caps) -> Result<Option<usize>> {
    match bfs_layers(m, None, cap, caps) {
        Ok(layers) => Ok(Some(layers.iter().map(Vec::len).sum())),
        Err(CoxeterError::BallTooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn radius_zero_is_identity_only() {
        let m = CoxeterMatrix::dihedral(Some(3));
        let b = Ball::enumerate(&m, 0, &caps()).unwrap();
        assert_eq!(b.elements(), &[GroupElement::identity()]);
    }

    #[test]
    fn dihedral_m3_ball_is_whole_group() {
        let m = CoxeterMatrix::dihedral(Some(3));
        let b = Ball::enumerate(&m, 3, &caps()).unwrap();
        assert_eq!(b.len(), 6);
        assert_eq!(b.layer_sizes(), &[1, 2, 2, 1]);
    }

    #[test]
    fn infinite_dihedral_ball_grows_linearly() {
        let m = CoxeterMatrix::dihedral(None);
        for n in 0..6 {
            let b = Ball::enumerate(&m, n, &caps()).unwrap();
            assert_eq!(b.len(), 2 * n + 1, "infinite dihedral Cayley graph is a line");
        }
    }

    #[test]
    fn order_of_b2_is_eight() {
        let m = CoxeterMatrix::dihedral(Some(4));
        assert_eq!(group_order(&m, 100, &caps()).unwrap(), Some(8));
    }

    #[test]
    fn order_of_a3_is_24() {
        let m = CoxeterMatrix::from_table(&[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]]).unwrap();
        assert_eq!(group_order(&m, 100, &caps()).unwrap(), Some(24));
    }

    #[test]
    fn infinite_group_exceeds_cap() {
        let m = CoxeterMatrix::dihedral(None);
        assert_eq!(group_order(&m, 50, &caps()).unwrap(), None);
    }

    #[test]
    fn ball_cap_trips() {
        let m = CoxeterMatrix::dihedral(None);
        let tight = Caps { ball_cap: 4, ..Caps::default() };
        assert!(matches!(
            Ball::enumerate(&m, 5, &tight),
            Err(CoxeterError::BallTooLarge { cap: 4 })
        ));
    }

    #[test]
    fn elements_are_shortlex_sorted() {
        let m = CoxeterMatrix::from_table(&[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]]).unwrap();
        let b = Ball::enumerate(&m, 4, &caps()).unwrap();
        for pair in b.elements().windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn lookup_matches_braid_reduction() {
        let m = CoxeterMatrix::dihedral(Some(4));
        let b = Ball::enumerate(&m, 4, &caps()).unwrap();
        let w = Word(vec![0, 1, 0, 1, 0]);
        let via_table = b.lookup_normal_form(&w).unwrap();
        let via_braid = reduce::normal_form(&m, &w, &caps()).unwrap();
        assert_eq!(via_table, via_braid);
    }
}
