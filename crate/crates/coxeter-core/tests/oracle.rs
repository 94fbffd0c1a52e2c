//! Checks against independent permutation realizations.
//!
//! The oracle here knows nothing about braid moves: it realizes each
//! test group as permutations, evaluates words by composition, and
//! computes lengths by breadth-first search over the permutation group.

use coxeter_core::{
    condition_f_scan, group_order, left_descents, normal_form, reduce, Ball, Caps, ConditionF,
    CoxeterMatrix, GroupElement, Word,
};
use std::collections::{HashMap, VecDeque};

type Perm = Vec<usize>;

fn perm_id(n: usize) -> Perm {
    (0..n).collect()
}

fn perm_mul(a: &Perm, b: &Perm) -> Perm {
    // (a*b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn eval_word(gens: &[Perm], w: &[u8]) -> Perm {
    let n = gens.first().map_or(1, Vec::len);
    w.iter().fold(perm_id(n), |acc, &s| perm_mul(&acc, &gens[usize::from(s)]))
}

/// Word lengths over the generators by BFS, for every group element.
fn bfs_lengths(gens: &[Perm]) -> HashMap<Perm, usize> {
    let n = gens.first().map_or(1, Vec::len);
    let mut dist = HashMap::new();
    dist.insert(perm_id(n), 0usize);
    let mut queue = VecDeque::from([perm_id(n)]);
    while let Some(p) = queue.pop_front() {
        let d = dist[&p];
        for g in gens {
            let q = perm_mul(&p, g);
            if !dist.contains_key(&q) {
                dist.insert(q.clone(), d + 1);
                queue.push_back(q);
            }
        }
    }
    dist
}

/// Symmetries of the regular m-gon as vertex permutations (m >= 3),
/// or two commuting transpositions for m = 2.
fn dihedral_gens(m: usize) -> Vec<Perm> {
    if m == 2 {
        return vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]];
    }
    let r0: Perm = (0..m).map(|i| (m - i) % m).collect();
    let r1: Perm = (0..m).map(|i| (m + 1 - i) % m).collect();
    vec![r0, r1]
}

/// Adjacent transpositions of {0,1,2,3}.
fn s4_gens() -> Vec<Perm> {
    vec![vec![1, 0, 2, 3], vec![0, 2, 1, 3], vec![0, 1, 3, 2]]
}

fn a3_matrix() -> CoxeterMatrix {
    CoxeterMatrix::from_table(&[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]]).unwrap()
}

fn all_words(rank: u8, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..rank {
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn caps() -> Caps {
    Caps::default()
}

#[test]
fn reduction_is_sound_for_dihedral_groups() {
    for m in [2usize, 3, 4, 5, 6] {
        let matrix = CoxeterMatrix::dihedral(Some(m as u32));
        let gens = dihedral_gens(m);
        for w in all_words(2, 7) {
            let red = reduce(&matrix, &Word(w.clone()), &caps()).unwrap();
            assert_eq!(
                eval_word(&gens, &w),
                eval_word(&gens, red.letters()),
                "m={m}, word {w:?} reduced to {red:?}"
            );
        }
    }
}

#[test]
fn reduction_is_sound_for_a3() {
    let matrix = a3_matrix();
    let gens = s4_gens();
    for w in all_words(3, 5) {
        let red = reduce(&matrix, &Word(w.clone()), &caps()).unwrap();
        assert_eq!(eval_word(&gens, &w), eval_word(&gens, red.letters()));
    }
}

#[test]
fn lengths_match_bfs_oracle() {
    let cases: Vec<(CoxeterMatrix, Vec<Perm>)> = vec![
        (CoxeterMatrix::dihedral(Some(3)), dihedral_gens(3)),
        (CoxeterMatrix::dihedral(Some(4)), dihedral_gens(4)),
        (a3_matrix(), s4_gens()),
    ];
    for (matrix, gens) in cases {
        let oracle = bfs_lengths(&gens);
        let ball = Ball::enumerate_group(&matrix, 1000, &caps()).unwrap();
        assert_eq!(ball.len(), oracle.len());
        for g in ball.elements() {
            let p = eval_word(&gens, g.normal().letters());
            assert_eq!(g.length(), oracle[&p], "element {g}");
        }
    }
}

#[test]
fn group_orders_match_permutation_closure() {
    for m in 2..=8u32 {
        let matrix = CoxeterMatrix::dihedral(Some(m));
        let oracle = bfs_lengths(&dihedral_gens(m as usize)).len();
        assert_eq!(group_order(&matrix, 1000, &caps()).unwrap(), Some(oracle));
        assert_eq!(oracle, 2 * m as usize);
    }
    assert_eq!(group_order(&a3_matrix(), 1000, &caps()).unwrap(), Some(24));
}

#[test]
fn exchange_property_holds_on_finite_balls() {
    // For reduced w = s1..sn and l(s w) < n there is an i with
    // s s1..s_{i-1} = s1..s_i.
    for matrix in [CoxeterMatrix::dihedral(Some(4)), a3_matrix()] {
        let ball = Ball::enumerate_group(&matrix, 1000, &caps()).unwrap();
        for g in ball.elements() {
            let w = g.normal().letters();
            for s in 0..matrix.rank() as u8 {
                let mut sw = vec![s];
                sw.extend_from_slice(w);
                let swlen = reduce(&matrix, &Word(sw), &caps()).unwrap().len();
                if swlen >= w.len() {
                    continue;
                }
                let found = (1..=w.len()).any(|i| {
                    let mut lhs = vec![s];
                    lhs.extend_from_slice(&w[..i - 1]);
                    let rhs = w[..i].to_vec();
                    normal_form(&matrix, &Word(lhs), &caps()).unwrap()
                        == normal_form(&matrix, &Word(rhs), &caps()).unwrap()
                });
                assert!(found, "exchange fails for {g} and s{s}");
            }
        }
    }
}

#[test]
fn length_subadditivity_and_parity_on_ball5() {
    for matrix in [CoxeterMatrix::dihedral(Some(4)), CoxeterMatrix::dihedral(None), a3_matrix()] {
        let ball = Ball::enumerate(&matrix, 5, &caps()).unwrap();
        for a in ball.elements() {
            for b in ball.elements() {
                let ab = coxeter_core::multiply(&matrix, a, b, &caps()).unwrap();
                assert!(ab.length() <= a.length() + b.length());
                assert_eq!(ab.length() % 2, (a.length() + b.length()) % 2);
            }
        }
    }
}

#[test]
fn descents_empty_iff_identity_and_drop_by_one() {
    for matrix in [CoxeterMatrix::dihedral(Some(5)), a3_matrix()] {
        let ball = Ball::enumerate_group(&matrix, 1000, &caps()).unwrap();
        for g in ball.elements() {
            let ds = left_descents(&matrix, g, &caps()).unwrap();
            assert_eq!(ds.is_empty(), g.is_identity());
            for s in ds {
                let sg = coxeter_core::left_mul(&matrix, s, g, &caps()).unwrap();
                assert_eq!(sg.length() + 1, g.length());
            }
        }
    }
}

#[test]
fn condition_f_passes_on_small_finite_groups() {
    for matrix in [
        CoxeterMatrix::dihedral(Some(3)),
        CoxeterMatrix::dihedral(Some(4)),
        a3_matrix(),
        CoxeterMatrix::from_table(&[&[1, 4, 2], &[4, 1, 3], &[2, 3, 1]]).unwrap(),
    ] {
        let ball = Ball::enumerate_group(&matrix, 1000, &caps()).unwrap();
        assert_eq!(
            condition_f_scan(&matrix, ball.elements(), &caps()).unwrap(),
            ConditionF::Pass
        );
    }
}

#[test]
fn identity_triple_takes_folding_branch() {
    // gamma = 1, s = t: s*1*t = s^2 = 1 = gamma.
    let matrix = CoxeterMatrix::dihedral(Some(3));
    let s = normal_form(&matrix, &Word(vec![0]), &caps()).unwrap();
    let sq = coxeter_core::multiply(&matrix, &s, &s, &caps()).unwrap();
    assert_eq!(sq, GroupElement::identity());
}

#[test]
fn reflections_square_to_identity_with_odd_length() {
    for matrix in [a3_matrix(), CoxeterMatrix::dihedral(None)] {
        for r in coxeter_core::reflections_in_ball(&matrix, 5, &caps()).unwrap() {
            let g = r.element(&matrix, &caps()).unwrap();
            assert_eq!(g.length() % 2, 1);
            assert_eq!(g.length(), 2 * r.conjugator().length() + 1);
            let sq = coxeter_core::multiply(&matrix, &g, &g, &caps()).unwrap();
            assert!(sq.is_identity());
        }
    }
}
