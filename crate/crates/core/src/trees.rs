//! Planar rooted trees whose internal vertices all have at least two children.
//!
//! Trees are immutable and cheap to clone. The text form is the bracket
//! grammar `tree := "|" | "(" tree tree tree* ")"`; the canonical order
//! compares degrees first and then the encodings byte-lexicographically.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(PartialEq, Eq, Hash, Debug)]
struct Node {
    children: Vec<PlanarTree>,
    degree: usize,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanarTree(Arc<Node>);

impl PlanarTree {
    pub fn leaf() -> Self {
        PlanarTree(Arc::new(Node {
            children: Vec::new(),
            degree: 1,
        }))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn is_leaf(&self) -> bool {
        self.0.children.is_empty()
    }

    /// Children of the root vertex; empty for the trivial tree.
    pub fn children(&self) -> &[PlanarTree] {
        &self.0.children
    }

    /// Valence of the root vertex (1 for the trivial tree).
    pub fn root_valence(&self) -> usize {
        self.0.children.len().max(1)
    }

    /// Canonical bracket encoding.
    pub fn encode(&self) -> String {
        let mut s = String::with_capacity(3 * self.degree());
        self.write_encoding(&mut s);
        s
    }

    fn write_encoding(&self, out: &mut String) {
        if self.is_leaf() {
            out.push('|');
        } else {
            out.push('(');
            for c in self.children() {
                c.write_encoding(out);
            }
            out.push(')');
        }
    }

    /// Byte-lexicographic comparison of the encodings, done structurally.
    ///
    /// Encodings are prefix-free, so children can be compared pairwise. When
    /// one child list is a prefix of the other the shorter one closes with
    /// `)` and is compared against the first byte of the next child.
    fn cmp_encoding(&self, other: &PlanarTree) -> Ordering {
        const OPEN: u8 = b'(';
        const CLOSE: u8 = b')';
        const LEAF: u8 = b'|';
        let first = |t: &PlanarTree| if t.is_leaf() { LEAF } else { OPEN };
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        match (self.is_leaf(), other.is_leaf()) {
            (true, true) => Ordering::Equal,
            (true, false) => LEAF.cmp(&OPEN),
            (false, true) => OPEN.cmp(&LEAF),
            (false, false) => {
                let (a, b) = (self.children(), other.children());
                for (x, y) in a.iter().zip(b) {
                    match x.cmp_encoding(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                match a.len().cmp(&b.len()) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Less => CLOSE.cmp(&first(&b[a.len()])),
                    Ordering::Greater => first(&a[b.len()]).cmp(&CLOSE),
                }
            }
        }
    }
}

impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp_encoding(other))
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        let (t, used) = parse_prefix(bytes, 0)?;
        if used != bytes.len() {
            return Err(Error::Parse(format!("trailing input after tree in `{s}`")));
        }
        Ok(t)
    }
}

/// Parses one tree starting at `pos`; returns it with the position after it.
pub(crate) fn parse_prefix(bytes: &[u8], pos: usize) -> Result<(PlanarTree, usize)> {
    match bytes.get(pos) {
        Some(b'|') => Ok((PlanarTree::leaf(), pos + 1)),
        Some(b'(') => {
            let mut children = Vec::new();
            let mut p = pos + 1;
            loop {
                match bytes.get(p) {
                    Some(b')') => break,
                    Some(_) => {
                        let (c, next) = parse_prefix(bytes, p)?;
                        children.push(c);
                        p = next;
                    }
                    None => return Err(Error::Parse("unbalanced `(` in tree".into())),
                }
            }
            if children.len() < 2 {
                return Err(Error::Parse(
                    "every internal vertex needs at least two children".into(),
                ));
            }
            Ok((graft_unchecked(children), p + 1))
        }
        Some(&c) => Err(Error::Parse(format!(
            "unexpected character `{}` in tree",
            c as char
        ))),
        None => Err(Error::Parse("empty tree".into())),
    }
}

fn graft_unchecked(children: Vec<PlanarTree>) -> PlanarTree {
    let degree = children.iter().map(PlanarTree::degree).sum();
    PlanarTree(Arc::new(Node { children, degree }))
}

/// Joins the roots of `parts` under a new root; a single tree is returned as is.
pub fn graft(parts: Vec<PlanarTree>) -> Result<PlanarTree> {
    match parts.len() {
        0 => Err(Error::InvalidArgument("graft needs at least one tree".into())),
        1 => Ok(parts.into_iter().next().unwrap()),
        _ => Ok(graft_unchecked(parts)),
    }
}

/// Inverse of [`graft`]: the root's children, or `[|]` for the trivial tree.
pub fn ungraft(t: &PlanarTree) -> Vec<PlanarTree> {
    if t.is_leaf() {
        vec![t.clone()]
    } else {
        t.children().to_vec()
    }
}

/// All trees of degree `n` in canonical order.
pub fn enumerate(n: usize) -> Result<Vec<PlanarTree>> {
    if n == 0 {
        return Err(Error::NoTreesOfDegreeZero);
    }
    let mut by_degree: Vec<Vec<PlanarTree>> = vec![Vec::new(), vec![PlanarTree::leaf()]];
    for d in 2..=n {
        let mut out = Vec::new();
        // sequences of >= 2 subtrees with degrees summing to d
        let mut stack: Vec<(usize, Vec<PlanarTree>)> = vec![(0, Vec::new())];
        while let Some((used, prefix)) = stack.pop() {
            if used == d {
                if prefix.len() >= 2 {
                    out.push(graft_unchecked(prefix));
                }
                continue;
            }
            for k in 1..=(d - used) {
                if k == d {
                    continue;
                }
                for t in &by_degree[k] {
                    let mut next = prefix.clone();
                    next.push(t.clone());
                    stack.push((used + k, next));
                }
            }
        }
        out.sort();
        by_degree.push(out);
    }
    Ok(by_degree.swap_remove(n))
}

/// Schröder (super Catalan) number `C_n`, the number of trees of degree `n + 1`.
///
/// Uses the coefficient recurrence of `2x C(x)^2 - (1 + x) C(x) + 1 = 0`:
/// `C_n = 2 Σ_{i+j=n-1} C_i C_j - C_{n-1}`.
pub fn schroeder(n: usize) -> BigInt {
    schroeder_table(n).pop().unwrap()
}

/// `[C_0, ..., C_n]`.
pub fn schroeder_table(n: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let conv: BigInt = (0..m).map(|i| &c[i] * &c[m - 1 - i]).sum();
        let next = BigInt::from(2) * conv - &c[m - 1];
        c.push(next);
    }
    c
}

/// Checks that `2x C^2 - (1 + x) C + 1` vanishes through `x^order`.
pub fn schroeder_series_check(order: usize) -> bool {
    let c = schroeder_table(order + 1);
    (0..=order).all(|n| {
        let two_x_c2: BigInt = if n == 0 {
            BigInt::zero()
        } else {
            BigInt::from(2) * (0..n).map(|i| &c[i] * &c[n - 1 - i]).sum::<BigInt>()
        };
        let one_plus_x_c = &c[n] + if n > 0 { c[n - 1].clone() } else { BigInt::zero() };
        let constant = if n == 0 { BigInt::one() } else { BigInt::zero() };
        (two_x_c2 - one_plus_x_c + constant).is_zero()
    })
}

/// Reflection through the root axis.
pub fn mirror(t: &PlanarTree) -> PlanarTree {
    if t.is_leaf() {
        return t.clone();
    }
    graft_unchecked(t.children().iter().rev().map(mirror).collect())
}

/// The `p`-corolla: one vertex with `p` leaves (the trivial tree for `p = 1`).
pub fn corolla(p: usize) -> Result<PlanarTree> {
    if p == 0 {
        return Err(Error::InvalidArgument("corolla needs p >= 1".into()));
    }
    graft(vec![PlanarTree::leaf(); p])
}

/// `γ_pq`: the `p`-corolla grafted with the `q`-corolla.
pub fn gamma(p: usize, q: usize) -> Result<PlanarTree> {
    graft(vec![corolla(p)?, corolla(q)?])
}

/// Returns `(p, q)` when `t = γ_pq`.
pub fn as_gamma(t: &PlanarTree) -> Option<(usize, usize)> {
    let is_corolla = |s: &PlanarTree| s.is_leaf() || s.children().iter().all(PlanarTree::is_leaf);
    match t.children() {
        [a, b] if is_corolla(a) && is_corolla(b) => Some((a.degree(), b.degree())),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    #[test]
    fn grafting_examples() {
        let l = PlanarTree::leaf();
        assert_eq!(graft(vec![l.clone(), l.clone()]).unwrap(), t("(||)"));
        assert_eq!(graft(vec![l.clone()]).unwrap(), l);
        assert_eq!(graft(vec![t("(||)"), l.clone()]).unwrap(), t("((||)|)"));
        assert!(graft(vec![]).is_err());
    }

    #[test]
    fn ungrafting_examples() {
        assert_eq!(ungraft(&t("(|(||))")), vec![t("|"), t("(||)")]);
        assert_eq!(ungraft(&t("|")), vec![t("|")]);
        assert_eq!(ungraft(&corolla(4).unwrap()), vec![t("|"); 4]);
    }

    #[test]
    fn parse_rejects_unary_vertices() {
        assert!("(|)".parse::<PlanarTree>().is_err());
        assert!("(||".parse::<PlanarTree>().is_err());
        assert!("(||)|".parse::<PlanarTree>().is_err());
        assert!("".parse::<PlanarTree>().is_err());
        assert!("(|x)".parse::<PlanarTree>().is_err());
    }

    #[test]
    fn enumeration_small_degrees() {
        assert_eq!(enumerate(1).unwrap(), vec![t("|")]);
        assert_eq!(
            enumerate(3).unwrap(),
            vec![t("((||)|)"), t("(|(||))"), t("(|||)")]
        );
        assert_eq!(enumerate(5).unwrap().len(), 45);
        assert_eq!(enumerate(0), Err(Error::NoTreesOfDegreeZero));
    }

    #[test]
    fn schroeder_values() {
        let v: Vec<BigInt> = (0..=6).map(schroeder).collect();
        let expect: Vec<BigInt> = [1, 1, 3, 11, 45, 197, 903].map(BigInt::from).into();
        assert_eq!(v, expect);
        // brute-force oracle for C_7
        assert_eq!(schroeder(7), BigInt::from(enumerate(8).unwrap().len()));
        assert!(schroeder_series_check(10));
    }

    #[test]
    fn enumeration_matches_schroeder() {
        for n in 1..=8 {
            assert_eq!(BigInt::from(enumerate(n).unwrap().len()), schroeder(n - 1));
        }
    }

    #[test]
    fn canonical_order_matches_encoding_order() {
        let mut all: Vec<PlanarTree> = (1..=6).flat_map(|n| enumerate(n).unwrap()).collect();
        all.reverse();
        let mut by_key = all.clone();
        by_key.sort_by(|a, b| (a.degree(), a.encode()).cmp(&(b.degree(), b.encode())));
        all.sort();
        assert_eq!(all, by_key);
        for w in all.windows(2) {
            assert_eq!(w[0].cmp(&w[1]), Ordering::Less);
        }
    }

    #[test]
    fn graft_ungraft_inverse() {
        for n in 1..=7 {
            for tree in enumerate(n).unwrap() {
                assert_eq!(graft(ungraft(&tree)).unwrap(), tree);
                assert_eq!(tree.encode().parse::<PlanarTree>().unwrap(), tree);
            }
        }
        let parts = vec![t("(||)"), t("|"), t("(|||)")];
        assert_eq!(ungraft(&graft(parts.clone()).unwrap()), parts);
    }

    #[test]
    fn mirror_is_an_involution() {
        assert_eq!(mirror(&t("(|(||))")), t("((||)|)"));
        assert_eq!(mirror(&t("|")), t("|"));
        for n in 1..=6 {
            for tree in enumerate(n).unwrap() {
                assert_eq!(mirror(&mirror(&tree)), tree);
            }
        }
    }

    #[test]
    fn corollas_and_gammas() {
        assert_eq!(corolla(1).unwrap(), t("|"));
        assert_eq!(gamma(1, 1).unwrap(), t("(||)"));
        assert_eq!(gamma(1, 2).unwrap(), t("(|(||))"));
        assert_eq!(gamma(3, 2).unwrap(), t("((|||)(||))"));
        assert_eq!(as_gamma(&gamma(2, 3).unwrap()), Some((2, 3)));
        assert_eq!(as_gamma(&t("(|||)")), None);
        assert_eq!(as_gamma(&t("((|(||))|)")), None);
    }
}
