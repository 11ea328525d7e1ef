//! Seeded random inputs for property checks.
//!
//! Every generator takes an explicit [`ChaCha8Rng`], so a seed fixes the whole
//! sample. Trees are drawn by choosing a root valence and a composition of the
//! degree, then recursing; this reaches every tree but is not uniform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::free2as::{Basis, DecoratedTree, FreeElement, Label, Tag};
use crate::linear::{rational, LinComb};
use crate::trees::{graft, PlanarTree};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random composition of `n` into `k` positive parts.
fn composition(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts = cuts[..k - 1].to_vec();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(k);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(n)) {
        parts.push(c - prev);
        prev = c;
    }
    parts
}

pub fn random_tree(rng: &mut ChaCha8Rng, degree: usize) -> PlanarTree {
    assert!(degree >= 1, "trees have degree at least one");
    if degree == 1 {
        return PlanarTree::leaf();
    }
    let k = rng.gen_range(2..=degree);
    let children = composition(rng, degree, k)
        .into_iter()
        .map(|d| random_tree(rng, d))
        .collect();
    graft(children).expect("at least two children")
}

pub fn random_labels(rng: &mut ChaCha8Rng, n: usize, alphabet: &[Label]) -> Vec<Label> {
    (0..n).map(|_| alphabet.choose(rng).expect("nonempty alphabet").clone()).collect()
}

pub fn random_decorated(rng: &mut ChaCha8Rng, degree: usize, alphabet: &[Label]) -> DecoratedTree {
    let tree = random_tree(rng, degree);
    let labels = random_labels(rng, degree, alphabet);
    DecoratedTree::new(tree, labels).expect("label count matches")
}

/// A random basis element of `2as(V)`; degree 0 gives the unit.
pub fn random_basis(rng: &mut ChaCha8Rng, degree: usize, alphabet: &[Label]) -> Basis {
    if degree == 0 {
        return Basis::Unit;
    }
    let tag = if rng.gen_bool(0.5) { Tag::Star } else { Tag::Dot };
    random_decorated(rng, degree, alphabet).tagged(tag)
}

/// A sum of `terms` random basis elements with degrees in `min..=max` and
/// small nonzero integer coefficients.
pub fn random_element(
    rng: &mut ChaCha8Rng,
    min_degree: usize,
    max_degree: usize,
    terms: usize,
    alphabet: &[Label],
) -> FreeElement {
    let mut out = LinComb::zero();
    for _ in 0..terms {
        let d = rng.gen_range(min_degree..=max_degree);
        let b = random_basis(rng, d, alphabet);
        let mut c = rng.gen_range(1..=3i64);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        out.add_term(b, rational(c));
    }
    out
}

pub fn random_word<L: Clone>(rng: &mut ChaCha8Rng, alphabet: &[L], len: usize) -> Vec<L> {
    (0..len).map(|_| alphabet.choose(rng).expect("nonempty alphabet").clone()).collect()
}
