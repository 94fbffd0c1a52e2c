//! Exhaustive scan of the folding condition over a finite group.
//!
//! For each element `gamma` and generators `s`, `t` with
//! `l(s gamma) = l(gamma) + 1` and `l(gamma t) = l(gamma) + 1`, either
//! `l(s gamma t) = l(gamma) + 2` or `s gamma t = gamma` must hold.

use crate::error::{CoxeterError, Result};
use crate::matrix::CoxeterMatrix;
use crate::reduce::{self, Caps};
use crate::word::GroupElement;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConditionF {
    Pass,
    Counterexample { gamma: GroupElement, s: u8, t: u8 },
}

/// Scan every triple over a full finite group given as a list of
/// elements. Returns the ShortLex-first counterexample, scanning
/// elements in ShortLex order with `s` and `t` ascending.
pub fn condition_f_scan(
    m: &CoxeterMatrix,
    elements: &[GroupElement],
    caps: &Caps,
) -> Result<ConditionF> {
    let mut sorted: Vec<GroupElement> = elements.to_vec();
    sorted.sort();
    sorted.dedup();
    let index: HashMap<&GroupElement, usize> =
        sorted.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let rank = m.rank();

    // Left and right generator actions as index tables; any product
    // falling outside the set means the input was not closed.
    let mut left = vec![vec![0usize; rank]; sorted.len()];
    let mut right = vec![vec![0usize; rank]; sorted.len()];
    for (i, g) in sorted.iter().enumerate() {
        for s in 0..rank as u8 {
            let lg = reduce::left_mul(m, s, g, caps)?;
            let gr = reduce::right_mul(m, g, s, caps)?;
            left[i][usize::from(s)] = *index.get(&lg).ok_or(CoxeterError::NotClosed)?;
            right[i][usize::from(s)] = *index.get(&gr).ok_or(CoxeterError::NotClosed)?;
        }
    }

    let len = |i: usize| sorted[i].length();
    for (gi, gamma) in sorted.iter().enumerate() {
        let n = gamma.length();
        for s in 0..rank {
            if len(left[gi][s]) != n + 1 {
                continue;
            }
            for t in 0..rank {
                if len(right[gi][t]) != n + 1 {
                    continue;
                }
                let sgt = right[left[gi][s]][t];
                if len(sgt) != n + 2 && sgt != gi {
                    return Ok(ConditionF::Counterexample {
                        gamma: gamma.clone(),
                        s: s as u8,
                        t: t as u8,
                    });
                }
            }
        }
    }
    Ok(ConditionF::Pass)
}
