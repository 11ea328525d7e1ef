//! B∞ operations: `M_pq` inside any 2-associative algebra, the relations
//! `R_ijk`, the free B∞-algebra on decorated trees and the expansion of a
//! tree operation `M(t)` into the generators `M_pq`.
//!
//! In a 2-associative algebra the `M_pq` are defined by peeling the first
//! block off every cutting:
//!
//! ```text
//! M_pq(a, b) = (a_1·..·a_p) * (b_1·..·b_q)
//!            − Σ_{(i,j) ≠ (p,q)} M_ij(a_1..a_i, b_1..b_j) · ((a_{i+1}·..·a_p) * (b_{j+1}·..·b_q))
//! ```
//!
//! with `M_10(a) = a`, `M_01(b) = b` and the other boundary operations zero.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::marker::PhantomData;

use num_traits::One;

use crate::bialgebra::tag_swap;
use crate::error::{Error, Result};
use crate::free2as::{self, label, Basis, DecoratedTree, FreeElement, Label, Tag};
use crate::linear::{format_rational, LinComb, Rational};
use crate::projector::e_free;
use crate::tensor::{block_sequences, concat, first_blocks, shuffle, star_from_binfty, BInfty, Word};
use crate::trees::{as_gamma, PlanarTree};

/// An element of the free B∞-algebra: a combination of decorated trees.
pub type BInftyElement = LinComb<DecoratedTree>;

// ------------------------------------------------------- 2-associative algebras

/// A unital algebra with two associative products sharing the unit.
pub trait TwoAsAlgebra {
    type Basis: Ord + Clone + fmt::Debug;

    fn unit(&self) -> Self::Basis;
    fn star_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Result<LinComb<Self::Basis>>;
    fn dot_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Result<LinComb<Self::Basis>>;

    fn product(
        &self,
        op: Tag,
        x: &LinComb<Self::Basis>,
        y: &LinComb<Self::Basis>,
    ) -> Result<LinComb<Self::Basis>> {
        let mut out = LinComb::zero();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                let ab = match op {
                    Tag::Star => self.star_basis(a, b)?,
                    Tag::Dot => self.dot_basis(a, b)?,
                };
                out.add_scaled(&ab, &(c * d));
            }
        }
        Ok(out)
    }

    fn star(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> Result<LinComb<Self::Basis>> {
        self.product(Tag::Star, x, y)
    }

    fn dot(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> Result<LinComb<Self::Basis>> {
        self.product(Tag::Dot, x, y)
    }

    /// `x_1 · .. · x_n`, the unit for an empty list.
    fn dot_all(&self, xs: &[LinComb<Self::Basis>]) -> Result<LinComb<Self::Basis>> {
        let mut acc = LinComb::from_basis(self.unit());
        for x in xs {
            acc = self.dot(&acc, x)?;
        }
        Ok(acc)
    }
}

/// `2as(V)` with its own products.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeTwoAs;

impl TwoAsAlgebra for FreeTwoAs {
    type Basis = Basis;

    fn unit(&self) -> Basis {
        Basis::Unit
    }

    fn star_basis(&self, a: &Basis, b: &Basis) -> Result<FreeElement> {
        Ok(LinComb::from_basis(free2as::product_basis(Tag::Star, a, b)))
    }

    fn dot_basis(&self, a: &Basis, b: &Basis) -> Result<FreeElement> {
        Ok(LinComb::from_basis(free2as::product_basis(Tag::Dot, a, b)))
    }
}

/// `2as(V)` with the two products exchanged; the tag swap is a morphism
/// from [`FreeTwoAs`] to this algebra.
#[derive(Clone, Copy, Debug, Default)]
pub struct SwappedFree;

impl TwoAsAlgebra for SwappedFree {
    type Basis = Basis;

    fn unit(&self) -> Basis {
        Basis::Unit
    }

    fn star_basis(&self, a: &Basis, b: &Basis) -> Result<FreeElement> {
        Ok(LinComb::from_basis(free2as::product_basis(Tag::Dot, a, b)))
    }

    fn dot_basis(&self, a: &Basis, b: &Basis) -> Result<FreeElement> {
        Ok(LinComb::from_basis(free2as::product_basis(Tag::Star, a, b)))
    }
}

/// Words with the shuffle as `*` and concatenation as `·`.
#[derive(Clone, Debug)]
pub struct ShuffleModel<L>(PhantomData<L>);

impl<L> ShuffleModel<L> {
    pub fn new() -> Self {
        ShuffleModel(PhantomData)
    }
}

impl<L> Default for ShuffleModel<L> {
    fn default() -> Self {
        Self::new()
    }
}

impl<L: Ord + Clone + fmt::Debug> TwoAsAlgebra for ShuffleModel<L> {
    type Basis = Word<L>;

    fn unit(&self) -> Word<L> {
        Word::empty()
    }

    fn star_basis(&self, a: &Word<L>, b: &Word<L>) -> Result<LinComb<Word<L>>> {
        Ok(shuffle(a, b))
    }

    fn dot_basis(&self, a: &Word<L>, b: &Word<L>) -> Result<LinComb<Word<L>>> {
        Ok(LinComb::from_basis(concat(a, b)))
    }
}

/// Words with the product recovered from a B∞ structure as `*` and
/// concatenation as `·`.
#[derive(Clone, Debug)]
pub struct TensorBInfty<B>(pub B);

impl<B: BInfty> TwoAsAlgebra for TensorBInfty<B> {
    type Basis = Word<B::Letter>;

    fn unit(&self) -> Self::Basis {
        Word::empty()
    }

    fn star_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Result<LinComb<Self::Basis>> {
        star_from_binfty(&self.0, a, b)
    }

    fn dot_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Result<LinComb<Self::Basis>> {
        Ok(LinComb::from_basis(concat(a, b)))
    }
}

/// The 2-associative morphism `2as(V) → A` extending `generator` on leaves:
/// `t^* ↦ Π_* image(branches)` and `t^. ↦ Π_· image(branches)`.
pub fn evaluate_in<A, G>(alg: &A, x: &FreeElement, generator: &G) -> Result<LinComb<A::Basis>>
where
    A: TwoAsAlgebra,
    G: Fn(&Label) -> LinComb<A::Basis>,
{
    fn basis_image<A, G>(alg: &A, b: &Basis, generator: &G) -> Result<LinComb<A::Basis>>
    where
        A: TwoAsAlgebra,
        G: Fn(&Label) -> LinComb<A::Basis>,
    {
        match (b, b.tag()) {
            (Basis::Unit, _) => Ok(LinComb::from_basis(alg.unit())),
            (_, None) => Ok(generator(&b.labels()[0])),
            (_, Some(op)) => {
                let mut acc = LinComb::from_basis(alg.unit());
                for f in b.factors() {
                    acc = alg.product(op, &acc, &basis_image(alg, &f, generator)?)?;
                }
                Ok(acc)
            }
        }
    }
    let mut out = LinComb::zero();
    for (b, c) in x.iter() {
        out.add_scaled(&basis_image(alg, b, generator)?, c);
    }
    Ok(out)
}

// ------------------------------------------------------------- M_pq in 2as

/// `M_pq(left, right)` in a 2-associative algebra, multilinear in the
/// arguments.
pub fn mpq_in_2as<A: TwoAsAlgebra>(
    alg: &A,
    left: &[LinComb<A::Basis>],
    right: &[LinComb<A::Basis>],
) -> Result<LinComb<A::Basis>> {
    let (p, q) = (left.len(), right.len());
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument("M_pq needs p, q >= 1".into()));
    }
    // range products a[s..e] and b[s..e] for the suffix stars
    let ranges = |xs: &[LinComb<A::Basis>]| -> Result<Vec<Vec<LinComb<A::Basis>>>> {
        let n = xs.len();
        let mut out = vec![vec![LinComb::zero(); n + 1]; n + 1];
        for (s, row) in out.iter_mut().enumerate() {
            row[s] = LinComb::from_basis(alg.unit());
            for e in s + 1..=n {
                row[e] = alg.dot(&row[e - 1], &xs[e - 1])?;
            }
        }
        Ok(out)
    };
    let a = ranges(left)?;
    let b = ranges(right)?;
    // m[i][j] = M_ij(left[..i], right[..j]) for i, j >= 1
    let mut m = vec![vec![LinComb::zero(); q + 1]; p + 1];
    for i in 1..=p {
        for j in 1..=q {
            let mut acc = alg.star(&a[0][i], &b[0][j])?;
            for (di, dj) in first_blocks(i, j) {
                if (di, dj) == (i, j) {
                    continue;
                }
                let head = match (di, dj) {
                    (1, 0) => &left[0],
                    (0, 1) => &right[0],
                    _ => &m[di][dj],
                };
                if head.is_zero() {
                    continue;
                }
                let tail = alg.star(&a[di][i], &b[dj][j])?;
                acc -= &alg.dot(head, &tail)?;
            }
            m[i][j] = acc;
        }
    }
    Ok(m.swap_remove(p).swap_remove(q))
}

/// `M^l_{(i,j)}(u, v)`: for every cutting of `(u, v)` into `l` consecutive
/// blocks, the `l`-tuple of block values.
pub fn block_values<A: TwoAsAlgebra>(
    alg: &A,
    u: &[LinComb<A::Basis>],
    v: &[LinComb<A::Basis>],
) -> Result<Vec<Vec<LinComb<A::Basis>>>> {
    let mut out = Vec::new();
    for seq in block_sequences(u.len(), v.len()) {
        let (mut i, mut j) = (0, 0);
        let mut tuple = Vec::with_capacity(seq.len());
        for (di, dj) in seq {
            tuple.push(match (di, dj) {
                (1, 0) => u[i].clone(),
                (0, 1) => v[j].clone(),
                _ => mpq_in_2as(alg, &u[i..i + di], &v[j..j + dj])?,
            });
            i += di;
            j += dj;
        }
        out.push(tuple);
    }
    Ok(out)
}

/// Both sides of `R_ijk`:
/// `Σ_l M_lk(M^l_{(i,j)}(u, v), w)` and `Σ_m M_im(u, M^m_{(j,k)}(v, w))`.
pub fn rijk_sides<A: TwoAsAlgebra>(
    alg: &A,
    u: &[LinComb<A::Basis>],
    v: &[LinComb<A::Basis>],
    w: &[LinComb<A::Basis>],
) -> Result<(LinComb<A::Basis>, LinComb<A::Basis>)> {
    if u.is_empty() || v.is_empty() || w.is_empty() {
        return Err(Error::InvalidArgument("R_ijk needs i, j, k >= 1".into()));
    }
    let mut lhs = LinComb::zero();
    for tuple in block_values(alg, u, v)? {
        lhs += &mpq_in_2as(alg, &tuple, w)?;
    }
    let mut rhs = LinComb::zero();
    for tuple in block_values(alg, v, w)? {
        rhs += &mpq_in_2as(alg, u, &tuple)?;
    }
    Ok((lhs, rhs))
}

pub fn check_rijk<A: TwoAsAlgebra>(
    alg: &A,
    u: &[LinComb<A::Basis>],
    v: &[LinComb<A::Basis>],
    w: &[LinComb<A::Basis>],
) -> Result<bool> {
    let (lhs, rhs) = rijk_sides(alg, u, v, w)?;
    Ok(lhs == rhs)
}

/// Checks `R_ijk` in `2as(V)` on `trials` seeded random inputs, each a sum of
/// two basis elements of degree one or two over the letters `u, v, w`.
pub fn check_rijk_sampled(i: usize, j: usize, k: usize, seed: u64, trials: usize) -> Result<bool> {
    use crate::sampling::{random_element, rng};
    let alphabet: Vec<Label> = ["u", "v", "w"].iter().map(|s| label(s)).collect();
    let mut r = rng(seed);
    for _ in 0..trials {
        let mut draw = |n: usize| -> Vec<FreeElement> {
            (0..n).map(|_| random_element(&mut r, 1, 2, 2, &alphabet)).collect()
        };
        let (u, v, w) = (draw(i), draw(j), draw(k));
        if !check_rijk(&FreeTwoAs, &u, &v, &w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `M_pq` of `2as(V)` transported along the tag swap agrees with `M_pq` of
/// the swapped algebra on the swapped arguments.
pub fn tag_swap_commutes(left: &[FreeElement], right: &[FreeElement]) -> Result<bool> {
    let image = tag_swap(&mpq_in_2as(&FreeTwoAs, left, right)?);
    let l: Vec<_> = left.iter().map(tag_swap).collect();
    let r: Vec<_> = right.iter().map(tag_swap).collect();
    Ok(image == mpq_in_2as(&SwappedFree, &l, &r)?)
}

// ------------------------------------------------------- free B∞-algebra

thread_local! {
    static E_STAR: RefCell<BTreeMap<DecoratedTree, FreeElement>> = RefCell::new(BTreeMap::new());
}

/// `e(t^*)`, the primitive of `2as(V)` attached to a decorated tree.
pub fn primitive_of(t: &DecoratedTree) -> FreeElement {
    if let Some(x) = E_STAR.with(|m| m.borrow().get(t).cloned()) {
        return x;
    }
    let x = e_free(&LinComb::from_basis(t.tagged(Tag::Star)));
    E_STAR.with(|m| m.borrow_mut().insert(t.clone(), x.clone()));
    x
}

/// `t ↦ e(t^*)` extended linearly.
pub fn primitive_embedding(x: &BInftyElement) -> FreeElement {
    x.map_linear(primitive_of)
}

/// Reads a star-supported element of `2as(V)` back as decorated trees.
pub fn strip_star(x: &FreeElement) -> Result<BInftyElement> {
    let mut out = LinComb::zero();
    for (b, c) in x.iter() {
        match b.as_tree() {
            Some(t) if t.tag() == Tag::Star => out.add_term(t.untagged(), c.clone()),
            _ => {
                return Err(Error::Consistency(format!(
                    "B∞ composite has support {b} outside the star component"
                )))
            }
        }
    }
    Ok(out)
}

/// `M_pq(t_1..t_p, t_{p+1}..t_{p+q})` in the free B∞-algebra, read off
/// `(e(t_1^*)·..·e(t_p^*)) * (e(t_{p+1}^*)·..·e(t_{p+q}^*))`.
pub fn free_compose_mpq(left: &[DecoratedTree], right: &[DecoratedTree]) -> Result<BInftyElement> {
    if left.is_empty() || right.is_empty() {
        return Err(Error::InvalidArgument("M_pq needs p, q >= 1".into()));
    }
    let side = |ts: &[DecoratedTree]| -> Result<FreeElement> {
        let xs: Vec<FreeElement> = ts.iter().map(primitive_of).collect();
        FreeTwoAs.dot_all(&xs)
    };
    strip_star(&free2as::star(&side(left)?, &side(right)?))
}

/// Multilinear extension of [`free_compose_mpq`].
pub fn free_compose_elements(left: &[BInftyElement], right: &[BInftyElement]) -> Result<BInftyElement> {
    let p = left.len();
    let args: Vec<BInftyElement> = left.iter().chain(right).cloned().collect();
    multilinear(&args, |ts| free_compose_mpq(&ts[..p], &ts[p..]))
}

fn multilinear<T, U, F>(args: &[LinComb<T>], mut f: F) -> Result<LinComb<U>>
where
    T: Ord + Clone,
    U: Ord + Clone,
    F: FnMut(&[T]) -> Result<LinComb<U>>,
{
    let mut choices: Vec<(Vec<T>, Rational)> = vec![(Vec::new(), Rational::one())];
    for a in args {
        let mut next = Vec::new();
        for (prefix, c) in &choices {
            for (t, d) in a.iter() {
                let mut v = prefix.clone();
                v.push(t.clone());
                next.push((v, c * d));
            }
        }
        choices = next;
    }
    let mut out = LinComb::zero();
    for (ts, c) in choices {
        out.add_scaled(&f(&ts)?, &c);
    }
    Ok(out)
}

/// The free B∞ structure on decorated trees.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeBInfty;

impl BInfty for FreeBInfty {
    type Letter = DecoratedTree;

    fn mpq(&self, left: &[DecoratedTree], right: &[DecoratedTree]) -> Result<BInftyElement> {
        free_compose_mpq(left, right)
    }
}

/// The tree of `M_pq` on leaves: `γ_pq` decorated by the arguments.
pub fn gamma_decorated(left: &[Label], right: &[Label]) -> Result<DecoratedTree> {
    let tree = crate::trees::gamma(left.len(), right.len())?;
    DecoratedTree::new(tree, left.iter().chain(right).cloned().collect())
}

/// The term of `M_pq(x, y)` carrying the largest root valence, with
/// coefficient one: the root children are those of `x_1` when `p = 1`,
/// otherwise the graft `x_1 ∨ .. ∨ x_p`, followed likewise by `y`.
pub fn leading_term(left: &[DecoratedTree], right: &[DecoratedTree]) -> Result<DecoratedTree> {
    let side = |ts: &[DecoratedTree]| -> Result<Vec<DecoratedTree>> {
        match ts {
            [] => Err(Error::InvalidArgument("M_pq needs p, q >= 1".into())),
            [t] if t.degree() == 1 => Ok(vec![t.clone()]),
            [t] => Ok(t.branches()),
            _ => Ok(vec![DecoratedTree::graft(ts)?]),
        }
    };
    let mut children = side(left)?;
    children.extend(side(right)?);
    DecoratedTree::graft(&children)
}

// -------------------------------------------------- expressions for M(t)

/// A composite of the generating operations `M_pq` applied to variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Leaf(Label),
    /// `M_pq(left, right)` with `p = left.len()` and `q = right.len()`.
    Op { left: Vec<Expr>, right: Vec<Expr> },
    Sum(Vec<(Rational, Expr)>),
}

impl Expr {
    pub fn evaluate(&self) -> Result<BInftyElement> {
        match self {
            Expr::Leaf(l) => Ok(LinComb::from_basis(DecoratedTree::leaf(l.clone()))),
            Expr::Op { left, right } => {
                let l = left.iter().map(Expr::evaluate).collect::<Result<Vec<_>>>()?;
                let r = right.iter().map(Expr::evaluate).collect::<Result<Vec<_>>>()?;
                free_compose_elements(&l, &r)
            }
            Expr::Sum(terms) => {
                let mut out = LinComb::zero();
                for (c, e) in terms {
                    out.add_scaled(&e.evaluate()?, c);
                }
                Ok(out)
            }
        }
    }

    /// Number of generating operations in the expression.
    pub fn operation_count(&self) -> usize {
        match self {
            Expr::Leaf(_) => 0,
            Expr::Op { left, right } => 1 + left.iter().chain(right).map(Expr::operation_count).sum::<usize>(),
            Expr::Sum(terms) => terms.iter().map(|(_, e)| e.operation_count()).sum(),
        }
    }
}

/// S-expression form: `(M 1 2 (leaf u) (word (leaf v) (leaf w)))`; a side
/// with one argument is written bare, and sums are `(+ (c e) ..)`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(f: &mut fmt::Formatter<'_>, args: &[Expr]) -> fmt::Result {
            if let [one] = args {
                return write!(f, " {one}");
            }
            write!(f, " (word")?;
            for a in args {
                write!(f, " {a}")?;
            }
            write!(f, ")")
        }
        match self {
            Expr::Leaf(l) => write!(f, "(leaf {l})"),
            Expr::Op { left, right } => {
                write!(f, "(M {} {}", left.len(), right.len())?;
                side(f, left)?;
                side(f, right)?;
                write!(f, ")")
            }
            Expr::Sum(terms) => {
                write!(f, "(+")?;
                for (c, e) in terms {
                    write!(f, " ({} {e})", format_rational(c))?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Labels `v1 .. vn` used when expanding an undecorated tree.
pub fn variable_labels(n: usize) -> Vec<Label> {
    (1..=n).map(|i| label(&format!("v{i}"))).collect()
}

/// `M(t)` as a composite of the `M_pq`, applied to `v1 .. vn`.
pub fn expand_mt(t: &PlanarTree) -> Result<Expr> {
    expand_decorated(&DecoratedTree::new(t.clone(), variable_labels(t.degree()))?)
}

/// `M(t)` applied to the labels of `t`.
///
/// Trees of the form `γ_pq` are generators. Otherwise `t = t^1 ∨ .. ∨ t^r` is
/// the leading term of `M_pq(x, y)`, where `x` lists the branches of `t^1`
/// (or `t^1` itself when it is a leaf) and `y` is `t^2 ∨ .. ∨ t^r` when
/// `r ≥ 3`, or the branches of `t^2` when `r = 2`. The arguments are expanded
/// recursively and the remaining terms of the evaluation are subtracted.
pub fn expand_decorated(t: &DecoratedTree) -> Result<Expr> {
    if t.degree() < 2 {
        return Err(Error::InvalidArgument("M(t) needs a tree of degree at least 2".into()));
    }
    let mut memo = BTreeMap::new();
    let mut active = BTreeSet::new();
    expand_rec(t, &mut memo, &mut active)
}

fn argument(t: &DecoratedTree, memo: &mut BTreeMap<DecoratedTree, Expr>, active: &mut BTreeSet<DecoratedTree>) -> Result<Expr> {
    if t.degree() == 1 {
        Ok(Expr::Leaf(t.labels()[0].clone()))
    } else {
        expand_rec(t, memo, active)
    }
}

fn expand_rec(
    t: &DecoratedTree,
    memo: &mut BTreeMap<DecoratedTree, Expr>,
    active: &mut BTreeSet<DecoratedTree>,
) -> Result<Expr> {
    if let Some(e) = memo.get(t) {
        return Ok(e.clone());
    }
    if !active.insert(t.clone()) {
        return Err(Error::Consistency(format!("expansion of M({t}) does not terminate")));
    }
    let leaves = |ls: &[Label]| ls.iter().cloned().map(Expr::Leaf).collect::<Vec<_>>();
    let expr = if let Some((p, _)) = as_gamma(t.tree()) {
        Expr::Op {
            left: leaves(&t.labels()[..p]),
            right: leaves(&t.labels()[p..]),
        }
    } else {
        let children = t.branches();
        let first = &children[0];
        let x = if first.degree() == 1 { vec![first.clone()] } else { first.branches() };
        let y = if children.len() >= 3 {
            vec![DecoratedTree::graft(&children[1..])?]
        } else if children[1].degree() == 1 {
            vec![children[1].clone()]
        } else {
            children[1].branches()
        };
        debug_assert_eq!(&leading_term(&x, &y)?, t);
        let op = Expr::Op {
            left: x.iter().map(|a| argument(a, memo, active)).collect::<Result<_>>()?,
            right: y.iter().map(|a| argument(a, memo, active)).collect::<Result<_>>()?,
        };
        let value = op.evaluate()?;
        if value.coeff(t) != Rational::one() {
            return Err(Error::Consistency(format!("M({t}) is not the leading term of its composite")));
        }
        let mut terms = vec![(Rational::one(), op)];
        for (s, c) in value.iter() {
            if s == t {
                continue;
            }
            match expand_rec(s, memo, active)? {
                Expr::Sum(inner) => terms.extend(inner.into_iter().map(|(d, e)| (-c * d, e))),
                e => terms.push((-c.clone(), e)),
            }
        }
        if terms.len() == 1 {
            terms.pop().unwrap().1
        } else {
            Expr::Sum(terms)
        }
    };
    active.remove(t);
    memo.insert(t.clone(), expr.clone());
    Ok(expr)
}
