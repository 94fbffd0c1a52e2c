//! Canonical representatives of reflections, i.e. conjugates `u s u^-1`.

use crate::ball::Ball;
use crate::error::Result;
use crate::matrix::CoxeterMatrix;
use crate::reduce::{self, Caps};
use crate::word::{GroupElement, Word};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A reflection `u s u^-1` with a minimal-length conjugator, ties
/// broken ShortLex on `u`. Two values are equal exactly when they
/// denote the same group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReflectionElement {
    conjugator: GroupElement,
    core: u8,
}

impl ReflectionElement {
    /// The generator `s` itself, with trivial conjugator.
    pub fn generator(s: u8) -> Self {
        ReflectionElement { conjugator: GroupElement::identity(), core: s }
    }

    pub fn conjugator(&self) -> &GroupElement {
        &self.conjugator
    }

    pub fn core(&self) -> u8 {
        self.core
    }

    /// The underlying group element, in normal form.
    pub fn element(&self, m: &CoxeterMatrix, caps: &Caps) -> Result<GroupElement> {
        let mut letters = self.conjugator.normal().0.clone();
        letters.push(self.core);
        let mut back = self.conjugator.normal().0.clone();
        back.reverse();
        letters.extend_from_slice(&back);
        reduce::normal_form(m, &Word(letters), caps)
    }

    /// Canonicalize a group element known (or suspected) to be a
    /// reflection. Returns None when `gamma` is not an odd-length
    /// involution or no conjugator of length `(l-1)/2` exists in the
    /// given ball.
    pub fn canonicalize(
        m: &CoxeterMatrix,
        gamma: &GroupElement,
        ball: &Ball,
        caps: &Caps,
    ) -> Result<Option<Self>> {
        if gamma.length() % 2 == 0 {
            return Ok(None);
        }
        let square = reduce::multiply(m, gamma, gamma, caps)?;
        if !square.is_identity() {
            return Ok(None);
        }
        let half = (gamma.length() - 1) / 2;
        // A minimal conjugator has length exactly half: shorter would
        // contradict l(gamma), and some palindromic reduced word for a
        // reflection always provides one of length half.
        for u in ball.elements().iter().filter(|u| u.length() == half) {
            for s in 0..m.rank() as u8 {
                let cand = ReflectionElement { conjugator: u.clone(), core: s };
                if &cand.element(m, caps)? == gamma {
                    return Ok(Some(cand));
                }
            }
        }
        Ok(None)
    }
}

impl fmt::Display for ReflectionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugator.is_identity() {
            write!(f, "s{}", self.core)
        } else {
            write!(f, "{} s{} {}^-1", self.conjugator, self.core, self.conjugator)
        }
    }
}

/// All canonical reflections of length <= radius, sorted by their
/// underlying element in ShortLex order.
pub fn reflections_in_ball(
    m: &CoxeterMatrix,
    radius: usize,
    caps: &Caps,
) -> Result<Vec<ReflectionElement>> {
    let ball = Ball::enumerate(m, radius, caps)?;
    let mut out = Vec::new();
    for gamma in ball.elements() {
        if let Some(r) = ReflectionElement::canonicalize(m, gamma, &ball, caps)? {
            out.push(r);
        }
    }
    Ok(out)
}
