//! Faithful permutation realizations of abstract finite Coxeter groups
//! via the regular action on their enumerated elements.

use crate::error::Result;
use crate::perm::Permutation;
use coxeter_core::{Ball, Caps, CoxeterMatrix};

/// One permutation per generator: left multiplication acting on the
/// ShortLex-sorted element list of the whole group.
pub fn regular_realization(
    m: &CoxeterMatrix,
    cap: usize,
    caps: &Caps,
) -> Result<Vec<Permutation>> {
    let ball = Ball::enumerate_group(m, cap, caps)?;
    let mut gens = Vec::with_capacity(m.rank());
    for s in 0..m.rank() as u8 {
        let images = ball
            .elements()
            .iter()
            .map(|g| {
                let sg = coxeter_core::left_mul(m, s, g, caps)?;
                Ok(ball.position(&sg).expect("left multiple stays in the full group"))
            })
            .collect::<Result<Vec<usize>>>()?;
        gens.push(Permutation::from_images(images));
    }
    Ok(gens)
}

/// Whether two Coxeter matrices agree up to a permutation of the
/// generator indices.
pub fn matrices_equal_up_to_relabel(a: &CoxeterMatrix, b: &CoxeterMatrix) -> bool {
    if a.rank() != b.rank() {
        return false;
    }
    let n = a.rank();
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm over at most rank! candidates; ranks are small.
    fn heaps(perm: &mut Vec<usize>, k: usize, a: &CoxeterMatrix, b: &CoxeterMatrix) -> bool {
        if k <= 1 {
            let n = a.rank();
            return (0..n).all(|i| {
                (0..n).all(|j| a.entry(i, j) == b.entry(perm[i], perm[j]))
            });
        }
        for i in 0..k {
            if heaps(perm, k - 1, a, b) {
                return true;
            }
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
        false
    }
    heaps(&mut perm, n, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{certify_coxeter, Certification};
    use crate::group::close_group;

    #[test]
    fn regular_action_of_a3_has_degree_24() {
        let m = CoxeterMatrix::from_table(&[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]]).unwrap();
        let gens = regular_realization(&m, 100, &Caps::default()).unwrap();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[0].degree(), 24);
        let grp = close_group(&gens, 100).unwrap();
        assert_eq!(grp.order(), 24);
        match certify_coxeter(&grp, 100, &Caps::default()).unwrap() {
            Certification::Certified { matrix, order } => {
                assert_eq!(order, 24);
                assert!(matrices_equal_up_to_relabel(&matrix, &m));
            }
            other => panic!("expected certification, got {other:?}"),
        }
    }

    #[test]
    fn relabeling_check() {
        let a = CoxeterMatrix::from_table(&[&[1, 3, 2], &[3, 1, 4], &[2, 4, 1]]).unwrap();
        let b = CoxeterMatrix::from_table(&[&[1, 4, 2], &[4, 1, 3], &[2, 3, 1]]).unwrap();
        let c = CoxeterMatrix::from_table(&[&[1, 5, 2], &[5, 1, 3], &[2, 3, 1]]).unwrap();
        assert!(matrices_equal_up_to_relabel(&a, &b));
        assert!(!matrices_equal_up_to_relabel(&a, &c));
        assert!(!matrices_equal_up_to_relabel(&a, &CoxeterMatrix::dihedral(Some(3))));
    }
}
