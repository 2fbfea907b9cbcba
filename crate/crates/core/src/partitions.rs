//! Partition combinatorics: conjugates, contents, hook lengths, standard
//! tableaux, and the two readings of the hook exponent set.
//!
//! The hook exponent set drives the irreducibility criterion: a grid formula
//! `lambda_i + l_j - i - j + 1` over the full `r x k` rectangle (which can
//! produce nonpositive values for cells outside the diagram), and the plain
//! multiset of hook lengths of diagram cells. Both readings are kept; the
//! equality of their symmetrized versions is probed empirically rather than
//! assumed (see `z_exponents`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("invalid partition literal `{0}`")]
    BadLiteral(String),
}

/// Integer partition `lambda_1 >= lambda_2 >= ... >= lambda_r >= 1`.
/// The empty partition is allowed everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Column lengths of the diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Diagram cells as 1-based `(row, col)` pairs, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p as usize {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Content `j - i` of every diagram cell.
    pub fn contents(&self) -> BTreeMap<(usize, usize), i64> {
        self.cells()
            .into_iter()
            .map(|(i, j)| ((i, j), j as i64 - i as i64))
            .collect()
    }

    /// Hook length of cell `(i, j)`: arm + leg + 1.
    pub fn hook_length(&self, i: usize, j: usize) -> u64 {
        let conj = self.conjugate();
        let arm = self.parts[i - 1] as u64 - j as u64;
        let leg = conj.parts[j - 1] as u64 - i as u64;
        arm + leg + 1
    }

    /// Multiset of hook lengths over all diagram cells, sorted descending.
    pub fn hook_multiset(&self) -> Vec<u64> {
        let mut hooks: Vec<u64> = self
            .cells()
            .into_iter()
            .map(|(i, j)| self.hook_length(i, j))
            .collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    /// The hook exponent set in the requested reading.
    pub fn hook_exponent_set(&self, mode: HookMode) -> HookExponentSet {
        let exponents = match mode {
            HookMode::Positive => self.hook_multiset().into_iter().map(|h| h as i64).collect(),
            HookMode::Literal => {
                let conj = self.conjugate();
                let mut set = BTreeSet::new();
                for i in 1..=self.len() {
                    for j in 1..=conj.len() {
                        let e = self.parts[i - 1] as i64 + conj.parts[j - 1] as i64
                            - i as i64
                            - j as i64
                            + 1;
                        set.insert(e);
                    }
                }
                set
            }
        };
        HookExponentSet { exponents, mode }
    }

    /// All standard tableaux of this shape, in a fixed deterministic order.
    pub fn standard_tableaux(&self) -> Vec<Tableau> {
        let n = self.size();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<u32>> = self.parts.iter().map(|&p| Vec::with_capacity(p as usize)).collect();
        fn rec(shape: &[u32], rows: &mut Vec<Vec<u32>>, next: u32, n: usize, out: &mut Vec<Tableau>) {
            if next as usize > n {
                out.push(Tableau {
                    rows: rows.clone(),
                });
                return;
            }
            for r in 0..shape.len() {
                let filled = rows[r].len();
                if filled >= shape[r] as usize {
                    continue;
                }
                // column-strictness: the cell above must be filled already
                if r > 0 && rows[r - 1].len() <= filled {
                    continue;
                }
                rows[r].push(next);
                rec(shape, rows, next + 1, n, out);
                rows[r].pop();
            }
        }
        rec(&self.parts, &mut rows, 1, n, &mut out);
        out
    }

    /// The row-reading standard tableau: row 1 filled first, then row 2, etc.
    pub fn superstandard_tableau(&self) -> Tableau {
        let mut rows = Vec::with_capacity(self.len());
        let mut next = 1u32;
        for &p in &self.parts {
            rows.push((next..next + p).collect());
            next += p;
        }
        Tableau { rows }
    }

    /// Number of semistandard fillings with entries in `1..=n` (the dimension
    /// of the irreducible gl_n module of this highest weight), by direct
    /// enumeration. Desk-scale shapes only.
    pub fn ssyt_count(&self, n: usize) -> usize {
        if self.is_empty() {
            return 1;
        }
        if self.len() > n {
            return 0;
        }
        fn rec(shape: &[u32], rows: &mut Vec<Vec<u32>>, cell: usize, cells: &[(usize, usize)], n: usize) -> usize {
            if cell == cells.len() {
                return 1;
            }
            let (i, j) = cells[cell];
            let mut count = 0;
            let lo = {
                let mut lo = 1;
                if j > 1 {
                    lo = lo.max(rows[i - 1][j - 2]); // weak increase along rows
                }
                if i > 1 {
                    lo = lo.max(rows[i - 2][j - 1] + 1); // strict increase down columns
                }
                lo
            };
            for v in lo..=n as u32 {
                rows[i - 1].push(v);
                count += rec(shape, rows, cell + 1, cells, n);
                rows[i - 1].pop();
            }
            count
        }
        let cells = self.cells();
        let mut rows: Vec<Vec<u32>> = self.parts.iter().map(|_| Vec::new()).collect();
        rec(&self.parts, &mut rows, 0, &cells, n)
    }

    /// All partitions of every `m <= n`, including the empty one.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        for m in 1..=n {
            let mut stack = Vec::new();
            fn rec(remaining: usize, max: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
                if remaining == 0 {
                    out.push(Partition { parts: acc.clone() });
                    return;
                }
                for p in (1..=remaining.min(max)).rev() {
                    acc.push(p as u32);
                    rec(remaining - p, p, acc, out);
                    acc.pop();
                }
            }
            rec(m, m, &mut stack, &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "0" || t == "()" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = t.split(',').map(|p| p.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| PartitionError::BadLiteral(s.to_string()))?;
        Partition::new(parts).map_err(|_| PartitionError::BadLiteral(s.to_string()))
    }
}

/// Which grid the exponents were read from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HookMode {
    /// Values of the full-grid formula, possibly nonpositive.
    Literal,
    /// Hook lengths of cells inside the diagram.
    Positive,
}

/// The set of hook exponents of a partition; symmetrized via `z_exponents`
/// it indexes the singular parameter ratios `u^{+-e}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookExponentSet {
    exponents: BTreeSet<i64>,
    mode: HookMode,
}

impl HookExponentSet {
    pub fn exponents(&self) -> &BTreeSet<i64> {
        &self.exponents
    }

    pub fn mode(&self) -> HookMode {
        self.mode
    }

    pub fn contains(&self, e: i64) -> bool {
        self.exponents.contains(&e)
    }

    /// The symmetrized set `{+-e : e in exponents}`.
    pub fn z_exponents(&self) -> BTreeSet<i64> {
        self.exponents
            .iter()
            .flat_map(|&e| [e, -e])
            .collect()
    }
}

/// Standard tableau: rows of entries `1..=n`, increasing along rows and
/// strictly down columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// 1-based `(row, col)` of entry `k`.
    pub fn position_of(&self, k: u32) -> Option<(usize, usize)> {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&e| e == k) {
                return Some((i + 1, j + 1));
            }
        }
        None
    }

    /// Content `col - row` of the cell containing `k`.
    pub fn content_of(&self, k: u32) -> i64 {
        let (i, j) = self.position_of(k).expect("entry in tableau");
        j as i64 - i as i64
    }

    /// The tableau with `k` and `k+1` exchanged, when that is standard.
    pub fn swap(&self, k: u32) -> Option<Tableau> {
        let (ri, _) = self.position_of(k)?;
        let (si, _) = self.position_of(k + 1)?;
        if ri == si {
            return None; // same row: swap not standard
        }
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            for e in row.iter_mut() {
                if *e == k {
                    *e = k + 1;
                } else if *e == k + 1 {
                    *e = k;
                }
            }
        }
        let cand = Tableau { rows };
        if cand.is_standard() {
            Some(cand)
        } else {
            None
        }
    }

    fn is_standard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if j + 1 < row.len() && row[j + 1] <= e {
                    return false;
                }
                if i + 1 < self.rows.len() {
                    if let Some(&below) = self.rows[i + 1].get(j) {
                        if below <= e {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}
