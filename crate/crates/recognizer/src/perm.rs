//! Permutations on a finite domain, with disjoint-cycle I/O.

use crate::error::{RecognizerError, Result};
use num_integer::Integer;
use std::fmt;

/// A permutation of {0, ..., degree-1}, stored as its image table.
/// I/O uses 1-based disjoint-cycle notation, e.g. `(1 2)(3 4)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images.iter().all(|&i| {
                let fresh = i < seen.len() && !seen[i];
                if fresh {
                    seen[i] = true;
                }
                fresh
            })
        });
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// Composition acting on the left: `(a * b)(x) = a(b(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(RecognizerError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation(other.0.iter().map(|&x| self.0[x]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &im) in self.0.iter().enumerate() {
            inv[im] = i;
        }
        Permutation(inv)
    }

    /// Order of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut ord = 1usize;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut at = start;
            while !seen[at] {
                seen[at] = true;
                at = self.0[at];
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    /// Pad to a larger domain, fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Permutation {
        let mut images = self.0.clone();
        images.extend(images.len()..degree);
        Permutation(images)
    }

    /// Parse one line of disjoint-cycle notation over 1-based points.
    /// `()` is the identity. The degree is the largest point mentioned;
    /// callers should `extend_to` a common domain afterwards.
    pub fn parse(line: &str, lineno: usize) -> Result<Permutation> {
        let err = |msg: String| RecognizerError::Parse { line: lineno, msg };
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = line.trim();
        if rest.is_empty() {
            return Err(err("empty permutation".into()));
        }
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(err(format!("expected '(' at {rest:?}")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(err("unbalanced parenthesis".into()));
            };
            let body = &stripped[..close];
            let mut cycle = Vec::new();
            for tok in body.split_whitespace() {
                let p: usize = tok
                    .parse()
                    .map_err(|_| err(format!("bad point {tok:?}")))?;
                if p == 0 {
                    return Err(err("points are 1-based".into()));
                }
                cycle.push(p - 1);
            }
            if !cycle.is_empty() {
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != cycle.len() {
                    return Err(err("repeated point in a cycle".into()));
                }
                cycles.push(cycle);
            }
            rest = stripped[close + 1..].trim_start();
        }
        let degree = cycles
            .iter()
            .flatten()
            .copied()
            .max()
            .map_or(1, |m| m + 1);
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in &cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if images[from] != from {
                    return Err(err("cycles are not disjoint".into()));
                }
                images[from] = to;
            }
        }
        // The disjointness check above misses fixed points written twice;
        // validate the image table is a bijection.
        let mut seen = vec![false; degree];
        for &im in &images {
            if seen[im] {
                return Err(err("cycles are not disjoint".into()));
            }
            seen[im] = true;
        }
        Ok(Permutation(images))
    }

    /// Parse a whole generator file: one permutation per line,
    /// `#`-comments allowed, all padded to a common degree.
    pub fn parse_file(text: &str) -> Result<Vec<Permutation>> {
        let mut perms = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            perms.push(Permutation::parse(line, lineno + 1)?);
        }
        let degree = perms.iter().map(Permutation::degree).max().unwrap_or(1);
        Ok(perms.into_iter().map(|p| p.extend_to(degree)).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut at = start;
            let mut first = true;
            while !seen[at] {
                seen[at] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", at + 1)?;
                first = false;
                at = self.0[at];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
