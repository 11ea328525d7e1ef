//! Exact sparse linear algebra over the rationals.
//!
//! Two independent elimination routes are provided: [`Echelon`] computes the
//! reduced row echelon form over `Q` (used for kernels and coordinates), and
//! [`rank`] runs fraction-free elimination over `Z` after clearing
//! denominators row by row.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linear::{format_rational, parse_rational, LinComb, Rational};

/// Sparse vector: strictly increasing indices, nonzero entries.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from(comb: &LinComb<usize>) -> SparseVec {
    comb.iter().map(|(i, c)| (*i, c.clone())).collect()
}

pub fn sparse_to_comb(v: &SparseVec) -> LinComb<usize> {
    v.iter().map(|(i, c)| (*i, c.clone())).collect()
}

/// `a + c * b` on sorted sparse vectors.
fn axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn lookup(v: &SparseVec, idx: usize) -> Option<&Rational> {
    v.binary_search_by_key(&idx, |(i, _)| *i).ok().map(|k| &v[k].1)
}

/// Reduced row echelon form of a row space.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    /// Rows sorted by pivot column; each pivot entry is 1 and pivot columns
    /// are zero in every other row.
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize, input: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut piv: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for row in input {
            let mut row = row;
            let hits: Vec<(usize, Rational)> = row
                .iter()
                .filter(|(i, _)| piv.contains_key(i))
                .cloned()
                .collect();
            for (p, c) in hits {
                row = axpy(&row, &-c, &piv[&p]);
            }
            let Some((lead, lc)) = row.first().cloned() else {
                continue;
            };
            let inv = lc.recip();
            for e in row.iter_mut() {
                e.1 *= &inv;
            }
            for other in piv.values_mut() {
                if let Some(c) = lookup(other, lead).cloned() {
                    *other = axpy(other, &-c, &row);
                }
            }
            piv.insert(lead, row);
        }
        let pivots = piv.keys().copied().collect();
        Echelon {
            cols,
            rows: piv.into_values().collect(),
            pivots,
        }
    }

    pub fn from_rows(rows: &[LinComb<usize>], cols: usize) -> Self {
        Self::new(cols, rows.iter().map(sparse_from))
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().peekable();
        (0..self.cols)
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Kernel basis of the matrix whose rows were fed in, one vector per free
    /// column `f`: it has entry 1 at `f`, 0 at every other free column.
    pub fn kernel(&self) -> Vec<(usize, SparseVec)> {
        let mut by_free: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for f in self.free_columns() {
            by_free.insert(f, vec![(f, Rational::one())]);
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            for (c, v) in row.iter().skip(1) {
                if let Some(vec) = by_free.get_mut(c) {
                    vec.push((p, -v.clone()));
                }
            }
        }
        by_free
            .into_iter()
            .map(|(f, mut v)| {
                v.sort_by_key(|(i, _)| *i);
                (f, v)
            })
            .collect()
    }

    /// Reduces `v` modulo the row space; returns the remainder.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = lookup(&out, *p).cloned() {
                out = axpy(&out, &-c, row);
            }
        }
        out
    }
}

/// Clears denominators and divides out the content.
fn primitive_integer_row(v: &SparseVec) -> Vec<(usize, BigInt)> {
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut row: Vec<(usize, BigInt)> = v
        .iter()
        .map(|(i, c)| (*i, c.numer() * (&l / c.denom())))
        .collect();
    normalize_content(&mut row);
    row
}

fn normalize_content(row: &mut [(usize, BigInt)]) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for e in row.iter_mut() {
            e.1 /= &g;
        }
    }
}

/// Rank by fraction-free elimination over the integers.
pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut piv: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
    for row in rows {
        let mut row = primitive_integer_row(&row);
        loop {
            let Some((lead, a)) = row.first().cloned() else {
                break;
            };
            let Some(p) = piv.get(&lead) else {
                piv.insert(lead, row);
                break;
            };
            // row <- b*row - a*p, with b the pivot's leading entry; the lead cancels.
            let b = p[0].1.clone();
            let g = a.gcd(&b);
            let (ra, rb) = (&a / &g, &b / &g);
            let mut out = Vec::with_capacity(row.len() + p.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < p.len() {
                if j >= p.len() || (i < row.len() && row[i].0 < p[j].0) {
                    out.push((row[i].0, &rb * &row[i].1));
                    i += 1;
                } else if i >= row.len() || p[j].0 < row[i].0 {
                    out.push((p[j].0, -(&ra * &p[j].1)));
                    j += 1;
                } else {
                    let v = &rb * &row[i].1 - &ra * &p[j].1;
                    if !v.is_zero() {
                        out.push((row[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            normalize_content(&mut out);
            row = out;
        }
    }
    piv.len()
}

/// A matrix stored by sparse columns; column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<LinComb<usize>>) -> Self {
        let cols = columns.len();
        let columns = columns.iter().map(sparse_from).collect::<Vec<_>>();
        debug_assert!(columns
            .iter()
            .all(|c| c.last().map_or(true, |(i, _)| *i < rows)));
        SparseMatrix {
            rows,
            cols,
            columns,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        lookup(&self.columns[j], i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (j, c) in v {
            out = axpy(&out, c, &self.columns[*j]);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in compose");
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn linear_combination(&self, a: &Rational, other: &SparseMatrix, b: &Rational) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(x, y)| {
                let scaled: SparseVec = if a.is_zero() {
                    Vec::new()
                } else {
                    x.iter().map(|(i, c)| (*i, c * a)).collect()
                };
                axpy(&scaled, b, y)
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }

    pub fn transpose_rows(&self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col {
                rows[*i].push((j, c.clone()));
            }
        }
        rows
    }

    pub fn rank(&self) -> usize {
        rank(self.columns.iter().cloned())
    }

    /// Kernel as an echelon basis (see [`Echelon::kernel`]).
    pub fn kernel(&self) -> Vec<(usize, SparseVec)> {
        Echelon::new(self.cols, self.transpose_rows()).kernel()
    }

    /// Sparse triplet dump: a `rows cols nnz` header, then one `i j value`
    /// line per nonzero entry in row-major order.
    pub fn to_triplets(&self) -> String {
        let mut entries: Vec<(usize, usize, &Rational)> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, c)| (*i, j, c)))
            .collect();
        entries.sort_by_key(|(i, j, _)| (*i, *j));
        let mut s = format!("{} {} {}\n", self.rows, self.cols, entries.len());
        for (i, j, c) in entries {
            let _ = writeln!(s, "{i} {j} {}", format_rational(c));
        }
        s
    }

    pub fn from_triplets(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty triplet file".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header `{header}`"))))
            .collect::<Result<_>>()?;
        let [rows, cols, nnz] = nums[..] else {
            return Err(Error::Parse(format!("bad header `{header}`")));
        };
        let mut columns: Vec<LinComb<usize>> = vec![LinComb::zero(); cols];
        let mut count = 0;
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [i, j, v] = parts[..] else {
                return Err(Error::Parse(format!("bad triplet `{line}`")));
            };
            let bad = || Error::Parse(format!("bad triplet `{line}`"));
            let i: usize = i.parse().map_err(|_| bad())?;
            let j: usize = j.parse().map_err(|_| bad())?;
            if i >= rows || j >= cols {
                return Err(bad());
            }
            columns[j].add_term(i, parse_rational(v)?);
            count += 1;
        }
        if count != nnz {
            return Err(Error::Parse(format!("expected {nnz} entries, found {count}")));
        }
        Ok(SparseMatrix::from_columns(rows, columns))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational;
    use proptest::prelude::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries
            .iter()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (*i, rational(*c)))
            .collect()
    }

    #[test]
    fn kernel_of_small_matrix() {
        // [1 1 0; 0 0 1] has kernel spanned by (-1, 1, 0).
        let e = Echelon::new(3, vec![sv(&[(0, 1), (1, 1)]), sv(&[(2, 1)])]);
        assert_eq!(e.rank(), 2);
        let k = e.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].0, 1);
        assert_eq!(k[0].1, sv(&[(0, -1), (1, 1)]));
    }

    #[test]
    fn triplets_round_trip() {
        let m = SparseMatrix::from_columns(
            2,
            vec![
                [(0, rational(1)), (1, rational(-2))].into_iter().collect(),
                LinComb::zero(),
            ],
        );
        let t = m.to_triplets();
        assert_eq!(t, "2 2 2\n0 0 1\n1 0 -2\n");
        assert_eq!(SparseMatrix::from_triplets(&t).unwrap(), m);
    }

    fn dense_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..4, c), r)
        })
    }

    proptest! {
        #[test]
        fn elimination_routes_agree(m in dense_strategy()) {
            let cols = m[0].len();
            let rows: Vec<SparseVec> = m
                .iter()
                .map(|r| sv(&r.iter().copied().enumerate().collect::<Vec<_>>()))
                .collect();
            let e = Echelon::new(cols, rows.clone());
            let r = rank(rows.clone());
            prop_assert_eq!(e.rank(), r);
            prop_assert!(r <= rows.len().min(cols));
            // every kernel vector is annihilated by every input row
            for (_, k) in e.kernel() {
                for row in &rows {
                    let dot: Rational = row
                        .iter()
                        .map(|(i, c)| c * lookup(&k, *i).cloned().unwrap_or_else(Rational::zero))
                        .sum();
                    prop_assert!(dot.is_zero());
                }
            }
            prop_assert_eq!(e.rank() + e.kernel().len(), cols);
        }
    }
}
