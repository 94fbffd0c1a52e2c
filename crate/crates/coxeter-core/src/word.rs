//! Words over the generators and canonical group elements.

use crate::error::{CoxeterError, Result};
use crate::matrix::CoxeterMatrix;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A finite sequence of generator indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Check every letter against the rank.
    pub fn validate(&self, m: &CoxeterMatrix) -> Result<()> {
        for &g in &self.0 {
            if usize::from(g) >= m.rank() {
                return Err(CoxeterError::LetterOutOfRange { letter: g.into(), rank: m.rank() });
            }
        }
        Ok(())
    }

    /// Parse space-separated generator tokens; empty input or `e` is the
    /// empty word. Tokens are aliases, `sN`, or bare indices.
    pub fn parse(m: &CoxeterMatrix, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let i = m.generator_index(tok).ok_or(CoxeterError::Parse {
                line: 0,
                msg: format!("unknown generator {tok:?}"),
            })?;
            letters.push(i as u8);
        }
        Ok(Word(letters))
    }

    /// Render with the matrix's generator names; the empty word is `e`.
    pub fn to_text(&self, m: &CoxeterMatrix) -> String {
        if self.0.is_empty() {
            return "e".into();
        }
        self.0
            .iter()
            .map(|&g| m.name(g.into()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|g| format!("s{g}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// ShortLex: compare by length first, then lexicographically by index.
pub fn shortlex(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A group element, represented by its ShortLex-minimal reduced word.
///
/// Constructed only through normal-form computation, so equality of
/// elements is equality of the stored words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    normal: Word,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { normal: Word::empty() }
    }

    /// Wrap a word already known to be the ShortLex normal form.
    pub(crate) fn from_normal(normal: Word) -> Self {
        GroupElement { normal }
    }

    pub fn normal(&self) -> &Word {
        &self.normal
    }

    pub fn length(&self) -> usize {
        self.normal.len()
    }

    pub fn is_identity(&self) -> bool {
        self.normal.is_empty()
    }

    pub fn to_text(&self, m: &CoxeterMatrix) -> String {
        self.normal.to_text(m)
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex(self.normal.letters(), other.normal.letters())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.normal)
    }
}
