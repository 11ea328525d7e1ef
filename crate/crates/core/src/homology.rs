//! Nonunital Hochschild complexes of the free 2-associative algebra on one
//! generator, for either product, and their amalgamation.
//!
//! For an associative product `∘` on the augmentation ideal `A` the complex
//! is `A^{⊗n} → A^{⊗(n−1)}` with
//! `b′(a_1, .., a_n) = Σ_{i=1}^{n−1} (−1)^i (a_1, .., a_i ∘ a_{i+1}, .., a_n)`.
//! Everything is graded by the total degree `d`, so each slice is finite.
//! The complex of a 2-associative algebra is two copies of this one glued
//! along `A` in chain degree 1.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free2as::{basis_of_degree, product_basis, Basis, Tag};
use crate::linalg::SparseMatrix;
use crate::linear::{rational, LinComb};

/// One total degree of the b′ complex: chains `C_1 .. C_d` and boundaries.
#[derive(Clone, Debug)]
pub struct ChainComplexSlice {
    product: Tag,
    degree: usize,
    /// `chains[n - 1]` is the basis of `C_n`
    chains: Vec<Vec<Vec<Basis>>>,
    /// `boundaries[n - 2]` is `b′_n : C_n → C_{n−1}`
    boundaries: Vec<SparseMatrix>,
}

/// Tuples of positive-degree basis elements of length `n` and degree sum `d`.
fn tuples(d: usize, n: usize, bases: &[Vec<Basis>]) -> Vec<Vec<Basis>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=d.saturating_sub(n - 1) {
        for rest in tuples(d - first, n - 1, bases) {
            for b in &bases[first] {
                let mut t = Vec::with_capacity(n);
                t.push(b.clone());
                t.extend(rest.iter().cloned());
                out.push(t);
            }
        }
    }
    out
}

/// Builds the slice of total degree `d` for the product `product`.
pub fn build_bprime(product: Tag, d: usize, bound: usize) -> Result<ChainComplexSlice> {
    if d == 0 {
        return Err(Error::InvalidArgument("the complex starts in degree 1".into()));
    }
    if d > bound {
        return Err(Error::DegreeBound { degree: d, bound });
    }
    let bases: Vec<Vec<Basis>> = (0..=d).map(basis_of_degree).collect();
    let chains: Vec<Vec<Vec<Basis>>> = (1..=d).map(|n| tuples(d, n, &bases)).collect();
    let mut boundaries = Vec::new();
    for n in 2..=d {
        let target = &chains[n - 2];
        let index: BTreeMap<&Vec<Basis>, usize> = target.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let position = |t: &Vec<Basis>| index[t];
        let cols = chains[n - 1]
            .iter()
            .map(|t| {
                let mut col = LinComb::zero();
                for i in 0..n - 1 {
                    let mut face = t[..i].to_vec();
                    face.push(product_basis(product, &t[i], &t[i + 1]));
                    face.extend(t[i + 2..].iter().cloned());
                    let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
                    col.add_term(position(&face), rational(sign));
                }
                col
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(target.len(), cols));
    }
    Ok(ChainComplexSlice { product, degree: d, chains, boundaries })
}

impl ChainComplexSlice {
    pub fn product(&self) -> Tag {
        self.product
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `dim C_n` for `n ≥ 1`; zero beyond the slice.
    pub fn chain_dimension(&self, n: usize) -> usize {
        self.chains.get(n.wrapping_sub(1)).map_or(0, Vec::len)
    }

    pub fn chain_basis(&self, n: usize) -> &[Vec<Basis>] {
        &self.chains[n - 1]
    }

    /// `b′_n` for `2 ≤ n ≤ d`.
    pub fn boundary(&self, n: usize) -> &SparseMatrix {
        &self.boundaries[n - 2]
    }

    /// `rank b′_n`, zero for `n = 1` and beyond the slice.
    pub fn boundary_rank(&self, n: usize) -> usize {
        if n < 2 || n > self.degree {
            0
        } else {
            self.boundaries[n - 2].rank()
        }
    }

    /// `b′_{n−1} ∘ b′_n = 0` for every `n`.
    pub fn squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].compose(&w[1]).is_zero())
    }

    /// Ranks of `H_1 .. H_d`.
    pub fn homology_ranks(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (1..=self.degree + 1).map(|n| self.boundary_rank(n)).collect();
        (1..=self.degree)
            .map(|n| self.chain_dimension(n) - ranks[n - 1] - ranks[n])
            .collect()
    }

    /// `Σ (−1)^{n−1} dim C_n`.
    pub fn euler_characteristic(&self) -> i64 {
        (1..=self.degree)
            .map(|n| if n % 2 == 1 { 1 } else { -1 } * self.chain_dimension(n) as i64)
            .sum()
    }
}

pub fn homology_ranks(product: Tag, d: usize, bound: usize) -> Result<Vec<usize>> {
    Ok(build_bprime(product, d, bound)?.homology_ranks())
}

/// Homology of the two complexes glued along `C_1 = A`: in chain degree 2
/// the boundary is `[b′_* b′_.]`, above it the complexes run side by side.
pub fn amalgamated_ranks(d: usize, bound: usize) -> Result<Vec<usize>> {
    let s = build_bprime(Tag::Star, d, bound)?;
    let t = build_bprime(Tag::Dot, d, bound)?;
    let rank2 = if d >= 2 {
        let mut cols: Vec<LinComb<usize>> = Vec::new();
        for m in [s.boundary(2), t.boundary(2)] {
            cols.extend((0..m.ncols()).map(|j| m.column(j).iter().cloned().collect()));
        }
        SparseMatrix::from_columns(s.chain_dimension(1), cols).rank()
    } else {
        0
    };
    let rank = |n: usize| match n {
        2 => rank2,
        _ => s.boundary_rank(n) + t.boundary_rank(n),
    };
    let dim = |n: usize| match n {
        1 => s.chain_dimension(1),
        _ => s.chain_dimension(n) + t.chain_dimension(n),
    };
    Ok((1..=d).map(|n| dim(n) - rank(n) - rank(n + 1)).collect())
}

/// Rank report `{product, degree, ranks}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub product: String,
    pub degree: usize,
    pub ranks: Vec<usize>,
}

pub fn report(product: Tag, d: usize, bound: usize) -> Result<HomologyReport> {
    Ok(HomologyReport {
        product: product.name().to_string(),
        degree: d,
        ranks: homology_ranks(product, d, bound)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::schroeder;

    #[test]
    fn degree_one_is_a_single_generator() {
        for op in [Tag::Star, Tag::Dot] {
            assert_eq!(homology_ranks(op, 1, 6).unwrap(), vec![1]);
        }
    }

    #[test]
    fn degree_two_boundary() {
        let s = build_bprime(Tag::Star, 2, 6).unwrap();
        assert_eq!(s.chain_dimension(1), 2);
        assert_eq!(s.chain_dimension(2), 1);
        assert_eq!(s.boundary(2).to_triplets(), "2 1 1\n0 0 -1\n");
        assert_eq!(s.homology_ranks(), vec![1, 0]);
    }

    #[test]
    fn acyclic_up_to_four() {
        for d in 1..=4 {
            let c = schroeder(d - 1).to_string().parse::<usize>().unwrap();
            for op in [Tag::Star, Tag::Dot] {
                let s = build_bprime(op, d, 6).unwrap();
                assert!(s.squares_to_zero());
                let mut want = vec![0; d];
                want[0] = c;
                assert_eq!(s.homology_ranks(), want, "{op:?} in degree {d}");
                let euler: i64 = s
                    .homology_ranks()
                    .iter()
                    .enumerate()
                    .map(|(i, h)| if i % 2 == 0 { *h as i64 } else { -(*h as i64) })
                    .sum();
                assert_eq!(euler, s.euler_characteristic());
            }
            let mut want = vec![0; d];
            want[0] = usize::from(d == 1);
            assert_eq!(amalgamated_ranks(d, 6).unwrap(), want);
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(build_bprime(Tag::Star, 7, 6), Err(Error::DegreeBound { .. })));
        assert!(build_bprime(Tag::Star, 0, 6).is_err());
    }

    #[test]
    fn json_report() {
        let r = report(Tag::Dot, 3, 6).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"product":"dot","degree":3,"ranks":[3,0,0]}"#
        );
    }
}
