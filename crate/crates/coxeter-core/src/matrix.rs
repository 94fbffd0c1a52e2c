//! Coxeter matrices and the text format that carries them.
//!
//! A matrix is symmetric, has 1 on the diagonal and entries in
//! {2,3,...} ∪ {∞} off it. The entry `m(s,t)` is the order of the
//! product `st` in the presented group.

use crate::error::{CoxeterError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A single matrix entry. Infinity is a distinguished value, never a
/// large integer stand-in; braid moves are skipped for infinite bonds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixEntry {
    Finite(u32),
    Infinite,
}

impl MatrixEntry {
    pub fn finite(self) -> Option<u32> {
        match self {
            MatrixEntry::Finite(m) => Some(m),
            MatrixEntry::Infinite => None,
        }
    }
}

impl fmt::Display for MatrixEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixEntry::Finite(m) => write!(f, "{m}"),
            MatrixEntry::Infinite => write!(f, "inf"),
        }
    }
}

/// A validated Coxeter matrix together with optional generator aliases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    rank: usize,
    entries: Vec<MatrixEntry>,
    names: Option<Vec<String>>,
}

impl CoxeterMatrix {
    /// Validate a raw square table of entries.
    pub fn new(rows: Vec<Vec<MatrixEntry>>) -> Result<Self> {
        let rank = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxeterError::NotSquare { row: i, len: row.len(), rank });
            }
        }
        for i in 0..rank {
            if rows[i][i] != MatrixEntry::Finite(1) {
                return Err(CoxeterError::DiagonalNotOne { i });
            }
            for j in 0..rank {
                if rows[i][j] != rows[j][i] {
                    return Err(CoxeterError::NotSymmetric { i, j });
                }
                if i != j {
                    if let MatrixEntry::Finite(m) = rows[i][j] {
                        if m < 2 {
                            return Err(CoxeterError::OffDiagonalTooSmall { i, j });
                        }
                    }
                }
            }
        }
        let entries = rows.into_iter().flatten().collect();
        Ok(CoxeterMatrix { rank, entries, names: None })
    }

    /// Convenience constructor from plain integers, with 0 meaning ∞.
    pub fn from_table(rows: &[&[u32]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&m| if m == 0 { MatrixEntry::Infinite } else { MatrixEntry::Finite(m) })
                    .collect()
            })
            .collect();
        Self::new(rows)
    }

    /// Rank-2 matrix with the given bond (None = ∞).
    pub fn dihedral(m: Option<u32>) -> Self {
        let e = m.map_or(MatrixEntry::Infinite, MatrixEntry::Finite);
        CoxeterMatrix::new(vec![
            vec![MatrixEntry::Finite(1), e],
            vec![e, MatrixEntry::Finite(1)],
        ])
        .expect("dihedral matrix is valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> MatrixEntry {
        self.entries[i * self.rank + j]
    }

    /// Order of the product of generators i and j, None for ∞.
    pub fn bond(&self, i: usize, j: usize) -> Option<u32> {
        self.entry(i, j).finite()
    }

    /// Display name of generator `i` (alias if one was declared).
    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => format!("s{i}"),
        }
    }

    pub fn set_names(&mut self, names: Vec<String>) -> Result<()> {
        if names.len() != self.rank {
            return Err(CoxeterError::Parse {
                line: 0,
                msg: format!("expected {} generator names, got {}", self.rank, names.len()),
            });
        }
        self.names = Some(names);
        Ok(())
    }

    /// Resolve a generator token: an alias if declared, else `sN` or a bare index.
    pub fn generator_index(&self, token: &str) -> Option<usize> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|n| n == token) {
                return Some(i);
            }
        }
        let num = token.strip_prefix('s').unwrap_or(token);
        match num.parse::<usize>() {
            Ok(i) if i < self.rank => Some(i),
            _ => None,
        }
    }

    /// Parse the matrix text format:
    ///
    /// ```text
    /// rank 3
    /// # comment
    /// names s t u      (optional)
    /// 1 3 2
    /// 3 1 3
    /// 2 3 1
    /// ```
    ///
    /// Entries are positive integers or the token `inf`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rank: Option<usize> = None;
        let mut names: Option<Vec<String>> = None;
        let mut rows: Vec<Vec<MatrixEntry>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: String| CoxeterError::Parse { line: lineno + 1, msg };
            if rank.is_none() {
                let mut it = line.split_whitespace();
                match (it.next(), it.next(), it.next()) {
                    (Some("rank"), Some(n), None) => {
                        let n: usize = n
                            .parse()
                            .map_err(|_| parse_err(format!("bad rank {n:?}")))?;
                        if n == 0 {
                            return Err(parse_err("rank must be positive".into()));
                        }
                        rank = Some(n);
                    }
                    _ => return Err(parse_err("expected `rank n` header".into())),
                }
                continue;
            }
            if line.starts_with("names") && rows.is_empty() {
                let toks: Vec<String> =
                    line.split_whitespace().skip(1).map(str::to_owned).collect();
                names = Some(toks);
                continue;
            }
            let i = rows.len();
            let row = line
                .split_whitespace()
                .enumerate()
                .map(|(j, tok)| match tok {
                    "inf" => Ok(MatrixEntry::Infinite),
                    _ => match tok.parse::<u32>() {
                        Ok(m) if m >= 1 => Ok(MatrixEntry::Finite(m)),
                        _ => Err(CoxeterError::BadEntry { i, j, text: tok.to_owned() }),
                    },
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let rank = rank.ok_or(CoxeterError::Parse { line: 0, msg: "missing `rank n` header".into() })?;
        if rows.len() != rank {
            return Err(CoxeterError::Parse {
                line: 0,
                msg: format!("expected {rank} matrix rows, got {}", rows.len()),
            });
        }
        let mut matrix = CoxeterMatrix::new(rows)?;
        if let Some(names) = names {
            matrix.set_names(names)?;
        }
        Ok(matrix)
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}", self.rank)?;
        for i in 0..self.rank {
            let row: Vec<String> = (0..self.rank).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_m3_is_valid() {
        let m = CoxeterMatrix::from_table(&[&[1, 3], &[3, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bond(0, 1), Some(3));
    }

    #[test]
    fn asymmetric_rejected() {
        let err = CoxeterMatrix::from_table(&[&[1, 2], &[3, 1]]).unwrap_err();
        assert!(matches!(err, CoxeterError::NotSymmetric { .. }));
    }

    #[test]
    fn b3_is_valid() {
        let m = CoxeterMatrix::from_table(&[&[1, 3, 2], &[3, 1, 4], &[2, 4, 1]]).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bond(1, 2), Some(4));
    }

    #[test]
    fn bad_diagonal_rejected() {
        let err = CoxeterMatrix::from_table(&[&[2, 3], &[3, 1]]).unwrap_err();
        assert!(matches!(err, CoxeterError::DiagonalNotOne { i: 0 }));
    }

    #[test]
    fn off_diagonal_one_rejected() {
        let rows = vec![
            vec![MatrixEntry::Finite(1), MatrixEntry::Finite(1)],
            vec![MatrixEntry::Finite(1), MatrixEntry::Finite(1)],
        ];
        let err = CoxeterMatrix::new(rows).unwrap_err();
        assert!(matches!(err, CoxeterError::OffDiagonalTooSmall { .. }));
    }

    #[test]
    fn parse_round_trip() {
        let text = "rank 3\n# type A3\n1 3 2\n3 1 3\n2 3 1\n";
        let m = CoxeterMatrix::parse(text).unwrap();
        let again = CoxeterMatrix::parse(&m.to_string()).unwrap();
        assert_eq!(m, again);
    }

    #[test]
    fn parse_infinite_and_names() {
        let m = CoxeterMatrix::parse("rank 2\nnames a b\n1 inf\ninf 1\n").unwrap();
        assert_eq!(m.bond(0, 1), None);
        assert_eq!(m.generator_index("b"), Some(1));
        assert_eq!(m.generator_index("s1"), Some(1));
        assert_eq!(m.generator_index("c"), None);
    }

    #[test]
    fn parse_bad_entry() {
        let err = CoxeterMatrix::parse("rank 2\n1 0\n0 1\n").unwrap_err();
        assert!(matches!(err, CoxeterError::BadEntry { .. }));
    }
}
