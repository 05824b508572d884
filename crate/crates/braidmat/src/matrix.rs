//! Square zero-diagonal integer matrices: the carriers of the OU, CN and
//! crossing matrices, the T0/T1/simple/double-simple predicates, and the
//! reversal and permutation actions.

use std::fmt;
use thiserror::Error;

use crate::braid::{BraidWord, Permutation, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix rows have unequal lengths")]
    NotSquare,
    #[error("nonzero diagonal entry at ({0},{0})")]
    NonzeroDiagonal(usize),
    #[error("matrix size {0} does not match permutation size {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid matrix text: {0}")]
    BadText(String),
}

/// Why a predicate failed, with 1-based positions in the display form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// T0 fails: entries (i,j) and (j,k) vanish but (i,k) does not.
    ZeroPropagation { i: usize, j: usize, k: usize },
    /// T1 fails: entries (i,j) and (j,k) are nonzero but (i,k) is zero.
    NonzeroPropagation { i: usize, j: usize, k: usize },
    /// A nonzero entry on or below the main diagonal.
    LowerEntry { i: usize, j: usize },
    /// Entries (i,j) and (j,i) differ.
    AsymmetricEntry { i: usize, j: usize },
    /// An entry outside {0,1}.
    EntryOutOfRange { i: usize, j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::ZeroPropagation { i, j, k } | Violation::NonzeroPropagation { i, j, k } => {
                write!(f, "witness ({},{},{})", i + 1, j + 1, k + 1)
            }
            Violation::LowerEntry { i, j } => write!(f, "nonzero entry at ({},{})", i + 1, j + 1),
            Violation::AsymmetricEntry { i, j } => {
                write!(f, "asymmetric pair ({},{})", i + 1, j + 1)
            }
            Violation::EntryOutOfRange { i, j } => {
                write!(f, "entry outside {{0,1}} at ({},{})", i + 1, j + 1)
            }
        }
    }
}

/// A dense n-by-n integer matrix with zero diagonal, 0-based indexing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> SquareMatrix {
        SquareMatrix { n, entries: vec![0; n * n] }
    }

    /// Build from rows, requiring squareness and a zero diagonal.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<SquareMatrix, MatrixError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSquare);
        }
        let mut m = SquareMatrix::zeros(n);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if i == j && v != 0 {
                    return Err(MatrixError::NonzeroDiagonal(i));
                }
                m.entries[i * n + j] = v;
            }
        }
        Ok(m)
    }

    /// Parse the array text form, e.g. `[[0,2],[2,0]]`.
    pub fn parse(text: &str) -> Result<SquareMatrix, MatrixError> {
        let rows: Vec<Vec<i64>> =
            serde_json::from_str(text).map_err(|e| MatrixError::BadText(e.to_string()))?;
        SquareMatrix::from_rows(rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        debug_assert!(i != j || v == 0, "diagonal entries stay zero");
        self.entries[i * self.n + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        debug_assert!(i != j || v == 0);
        self.entries[i * self.n + j] += v;
    }

    pub fn transposed(&self) -> SquareMatrix {
        let mut out = SquareMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Entrywise sum; the sizes must agree.
    pub fn plus(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.n, other.n, "adding matrices of different sizes");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        SquareMatrix { n: self.n, entries }
    }

    /// M + M^T.
    pub fn symmetric_closure(&self) -> SquareMatrix {
        self.plus(&self.transposed())
    }

    /// Reverse the order of rows and columns: entry (i,j) becomes the old
    /// entry (n-1-i, n-1-j).
    pub fn reversed(&self) -> SquareMatrix {
        let n = self.n;
        let mut out = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(n - 1 - i, n - 1 - j));
            }
        }
        out
    }

    /// Rearrange rows and columns: the i-th row and column of the result are
    /// row and column `p^{-1}(i)` of the original. This is a right action
    /// under left-to-right composition: `m.permuted(p).permuted(q) ==
    /// m.permuted(p.then(q))`, and together with the strand-start to
    /// strand-end braid permutation it satisfies
    /// `ou(a.product(b)) == ou(a) + ou(b).permuted(perm(a).inverse())`.
    pub fn permuted(&self, p: &Permutation) -> Result<SquareMatrix, MatrixError> {
        if p.n() != self.n {
            return Err(MatrixError::SizeMismatch(self.n, p.n()));
        }
        let inv = p.inverse();
        let mut out = SquareMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(inv.image(i), inv.image(j)));
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_non_negative(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0)
    }

    pub fn all_even(&self) -> bool {
        self.entries.iter().all(|&v| v % 2 == 0)
    }

    pub fn is_strictly_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| self.get(i, j) == 0))
    }

    /// First triple `i < j < k` with `(i,j)` and `(j,k)` zero but `(i,k)`
    /// nonzero, in lexicographic order.
    pub fn t0_violation(&self) -> Option<Violation> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    if self.get(i, j) == 0 && self.get(j, k) == 0 && self.get(i, k) != 0 {
                        return Some(Violation::ZeroPropagation { i, j, k });
                    }
                }
            }
        }
        None
    }

    pub fn is_t0(&self) -> bool {
        self.t0_violation().is_none()
    }

    /// First triple `i < j < k` with `(i,j)` and `(j,k)` nonzero but `(i,k)`
    /// zero, in lexicographic order.
    pub fn t1_violation(&self) -> Option<Violation> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    if self.get(i, j) != 0 && self.get(j, k) != 0 && self.get(i, k) == 0 {
                        return Some(Violation::NonzeroPropagation { i, j, k });
                    }
                }
            }
        }
        None
    }

    pub fn is_t1(&self) -> bool {
        self.t1_violation().is_none()
    }

    /// Simple matrix: strictly upper triangular, entries in {0,1}, T0 and T1.
    /// These are exactly the crossing matrices of permutation braids.
    pub fn simple_violation(&self) -> Option<Violation> {
        for i in 0..self.n {
            for j in 0..=i {
                if self.get(i, j) != 0 {
                    return Some(Violation::LowerEntry { i, j });
                }
            }
            for j in i + 1..self.n {
                let v = self.get(i, j);
                if v != 0 && v != 1 {
                    return Some(Violation::EntryOutOfRange { i, j });
                }
            }
        }
        self.t0_violation().or_else(|| self.t1_violation())
    }

    pub fn is_simple(&self) -> bool {
        self.simple_violation().is_none()
    }

    /// Double simple matrix: symmetric, entries in {0,1}, T0 and T1. These
    /// are exactly the CN matrices of permutation braids.
    pub fn double_simple_violation(&self) -> Option<Violation> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return Some(Violation::AsymmetricEntry { i, j });
                }
            }
        }
        for i in 0..self.n {
            for j in 0..self.n {
                let v = self.get(i, j);
                if v != 0 && v != 1 {
                    return Some(Violation::EntryOutOfRange { i, j });
                }
            }
        }
        self.t0_violation().or_else(|| self.t1_violation())
    }

    pub fn is_double_simple(&self) -> bool {
        self.double_simple_violation().is_none()
    }

    /// Compact array text, e.g. `[[0,2],[2,0]]`. Re-parses to the same matrix.
    pub fn to_array_text(&self) -> String {
        let rows: Vec<Vec<i64>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect();
        serde_json::to_string(&rows).expect("serializing integer rows cannot fail")
    }

    /// Right-aligned integer grid, one row per line.
    pub fn to_grid(&self) -> String {
        if self.n == 0 {
            return String::new();
        }
        let width = self
            .entries
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{:>width$}", self.get(i, j)));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_grid())
    }
}

impl BraidWord {
    /// The OU matrix: entry (i,j) counts the crossings at which strand `i`
    /// passes over strand `j`.
    pub fn ou_matrix(&self) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(self.n());
        for c in self.crossings() {
            m.add_at(c.over, c.under, 1);
        }
        m
    }

    /// The OU matrix with the strands reordered: entry (i,j) counts crossings
    /// at which the i-th strand under `order` passes over the j-th, where the
    /// k-th strand under `order` is the strand `order.image(k)`.
    pub fn ou_matrix_ordered(&self, order: &Permutation) -> Result<SquareMatrix, MatrixError> {
        if order.n() != self.n() {
            return Err(MatrixError::SizeMismatch(self.n(), order.n()));
        }
        let inv = order.inverse();
        let mut m = SquareMatrix::zeros(self.n());
        for c in self.crossings() {
            m.add_at(inv.image(c.over), inv.image(c.under), 1);
        }
        Ok(m)
    }

    /// The CN matrix: entry (i,j) counts all crossings between strands `i`
    /// and `j`. Symmetric, and equal to `ou + ou^T`.
    pub fn cn_matrix(&self) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(self.n());
        for c in self.crossings() {
            m.add_at(c.over, c.under, 1);
            m.add_at(c.under, c.over, 1);
        }
        m
    }

    /// The crossing matrix: entry (i,j) is the number of positive minus the
    /// number of negative crossings at which strand `i` passes over strand
    /// `j`. A braid invariant; equals the OU matrix on positive words.
    pub fn crossing_matrix(&self) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(self.n());
        for c in self.crossings() {
            let delta = match c.sign {
                Sign::Positive => 1,
                Sign::Negative => -1,
            };
            m.add_at(c.over, c.under, delta);
        }
        m
    }
}
