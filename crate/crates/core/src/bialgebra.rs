//! The coproducts `Δ` and `δ` on `2as(V)`, with counit, antipode, the
//! coradical filtration and primitive elements.
//!
//! `Δ` is determined by `Δ(v) = v⊗1 + 1⊗v`, multiplicativity for `*` and the
//! unital infinitesimal rule for `·`. `δ` swaps the roles of the two
//! products. Both are computed by structural recursion on the factorization
//! of a tagged tree into its branches, memoized per basis element.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::free2as::{self, product_basis, Basis, FreeElement, Tag};
use crate::linalg::{Echelon, SparseVec};
use crate::linear::{format_rational, LinComb, Rational};

/// Element of `2as(V) ⊗ 2as(V)`.
pub type Tensor2 = LinComb<(Basis, Basis)>;

/// Element of a tensor power of `2as(V)`.
pub type TensorN = LinComb<Vec<Basis>>;

/// Selects one of the two coproducts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coproduct {
    /// `Δ`: Hopf for `*`, unital infinitesimal for `·`.
    Delta,
    /// `δ`: unital infinitesimal for `*`, Hopf for `·`.
    DeltaSecond,
}

impl Coproduct {
    /// The product for which this coproduct is multiplicative.
    pub fn hopf_product(self) -> Tag {
        match self {
            Coproduct::Delta => Tag::Star,
            Coproduct::DeltaSecond => Tag::Dot,
        }
    }
}

impl std::str::FromStr for Coproduct {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "delta" => Ok(Coproduct::Delta),
            "delta2" => Ok(Coproduct::DeltaSecond),
            _ => Err(crate::Error::Parse(format!("unknown coproduct `{s}`"))),
        }
    }
}

/// `(a⊗b) ∘ (c⊗d) = (a∘c) ⊗ (b∘d)`.
pub fn tensor_product(op: Tag, x: &Tensor2, y: &Tensor2) -> Tensor2 {
    x.bilinear(y, |(a, b), (c, d)| {
        LinComb::from_basis((product_basis(op, a, c), product_basis(op, b, d)))
    })
}

fn pair(a: &Basis, b: &Basis) -> Tensor2 {
    LinComb::from_basis((a.clone(), b.clone()))
}

thread_local! {
    static COPRODUCT_CACHE: RefCell<HashMap<(Coproduct, Basis), Rc<Tensor2>>> =
        RefCell::new(HashMap::new());
}

/// Coproduct of a basis element (memoized on the current thread).
pub fn coproduct_basis(which: Coproduct, b: &Basis) -> Rc<Tensor2> {
    let key = (which, b.clone());
    if let Some(hit) = COPRODUCT_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let value = Rc::new(compute_coproduct(which, b));
    COPRODUCT_CACHE.with(|c| c.borrow_mut().insert(key, value.clone()));
    value
}

fn compute_coproduct(which: Coproduct, b: &Basis) -> Tensor2 {
    let t = match b {
        Basis::Unit => return pair(&Basis::Unit, &Basis::Unit),
        Basis::Tree(t) if t.is_leaf() => return pair(b, &Basis::Unit) + pair(&Basis::Unit, b),
        Basis::Tree(t) => t,
    };
    let op = t.tag();
    let factors = b.factors();
    let mut acc = (*coproduct_basis(which, &factors[0])).clone();
    if op == which.hopf_product() {
        for f in &factors[1..] {
            acc = tensor_product(op, &acc, &coproduct_basis(which, f));
        }
    } else {
        // Δ(x∘y) = (x⊗1)∘Δ(y) + Δ(x)∘(1⊗y) − x⊗y
        let mut x = factors[0].clone();
        for y in &factors[1..] {
            let dy = coproduct_basis(which, y);
            let mut next = tensor_product(op, &pair(&x, &Basis::Unit), &dy);
            next += &tensor_product(op, &acc, &pair(&Basis::Unit, y));
            next -= &pair(&x, y);
            acc = next;
            x = product_basis(op, &x, y);
        }
    }
    acc
}

pub fn coproduct(which: Coproduct, x: &FreeElement) -> Tensor2 {
    x.map_linear(|b| (*coproduct_basis(which, b)).clone())
}

/// `Δ`.
pub fn delta(x: &FreeElement) -> Tensor2 {
    coproduct(Coproduct::Delta, x)
}

/// `δ`.
pub fn delta_second(x: &FreeElement) -> Tensor2 {
    coproduct(Coproduct::DeltaSecond, x)
}

/// Coefficient of the unit.
pub fn counit(x: &FreeElement) -> Rational {
    x.coeff(&Basis::Unit)
}

fn reduced_basis(which: Coproduct, b: &Basis) -> Tensor2 {
    if b.is_unit() {
        return Tensor2::zero();
    }
    coproduct_basis(which, b).filter(|(l, r)| !l.is_unit() && !r.is_unit())
}

/// `Δ̄(x) = Δ(x) − x⊗1 − 1⊗x` on the augmentation ideal (and `Δ̄(1) = 0`).
pub fn reduced(which: Coproduct, x: &FreeElement) -> Tensor2 {
    x.map_linear(|b| reduced_basis(which, b))
}

pub fn reduced_delta(x: &FreeElement) -> Tensor2 {
    reduced(Coproduct::Delta, x)
}

/// `Δ̄^n`, landing in `n + 1` tensor factors; `Δ̄^0` is the identity.
pub fn iterated_reduced(which: Coproduct, x: &FreeElement, n: usize) -> TensorN {
    let mut cur: TensorN = x.map_basis(|b| vec![b.clone()]);
    for _ in 0..n {
        if cur.is_zero() {
            break;
        }
        cur = cur.map_linear(|word| {
            reduced_basis(which, &word[0]).map_basis(|(l, r)| {
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push(l.clone());
                w.push(r.clone());
                w.extend(word[1..].iter().cloned());
                w
            })
        });
    }
    cur
}

pub fn iterated_reduced_delta(x: &FreeElement, n: usize) -> TensorN {
    iterated_reduced(Coproduct::Delta, x, n)
}

/// Multiplies the factors of every term with `op`.
pub fn multiply_out(op: Tag, x: &TensorN) -> FreeElement {
    x.map_basis(|word| {
        word.iter()
            .fold(Basis::Unit, |acc, b| product_basis(op, &acc, b))
    })
}

/// Least `r` with `x ∈ F_r`: 0 on multiples of 1, otherwise the least `r ≥ 1`
/// with `Δ̄^r(x − ε(x)1) = 0`.
pub fn filtration_degree(x: &FreeElement) -> usize {
    let aug = x.filter(|b| !b.is_unit());
    if aug.is_zero() {
        return 0;
    }
    (1..)
        .find(|&r| iterated_reduced_delta(&aug, r).is_zero())
        .expect("connected coalgebra")
}

pub fn is_primitive(x: &FreeElement) -> bool {
    counit(x).is_zero() && reduced_delta(x).is_zero()
}

/// Kernel of a linear map given on an ordered basis, as `(free column, vector)`
/// pairs in echelon order.
pub fn kernel_on_basis<B, C, F>(basis: &[B], mut f: F) -> Vec<(usize, LinComb<B>)>
where
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&B) -> LinComb<C>,
{
    let mut targets: BTreeMap<C, usize> = BTreeMap::new();
    let mut rows: Vec<SparseVec> = Vec::new();
    for (j, b) in basis.iter().enumerate() {
        for (c, v) in f(b).iter() {
            let next = targets.len();
            let i = *targets.entry(c.clone()).or_insert(next);
            if i == rows.len() {
                rows.push(Vec::new());
            }
            rows[i].push((j, v.clone()));
        }
    }
    Echelon::new(basis.len(), rows)
        .kernel()
        .into_iter()
        .map(|(free, v)| {
            let comb = v.iter().map(|(j, c)| (basis[*j].clone(), c.clone())).collect();
            (free, comb)
        })
        .collect()
}

/// Basis of the primitives among the span of `basis` (which must be closed
/// under the support of `Δ̄`, such as one multidegree).
pub fn primitive_basis_for(basis: &[Basis]) -> Vec<FreeElement> {
    kernel_on_basis(basis, |b| reduced_basis(Coproduct::Delta, b))
        .into_iter()
        .map(|(_, v)| v)
        .collect()
}

/// Basis of `Prim 2as(K)_n` in single-generator mode.
pub fn primitive_basis(n: usize) -> Vec<FreeElement> {
    if n == 0 {
        return Vec::new();
    }
    primitive_basis_for(&free2as::basis_of_degree(n))
}

/// `S(x) = Σ_{n≥0} (−1)^{n+1} *^n ∘ Δ̄^n (x)` on the augmentation ideal, `S(1) = 1`.
pub fn antipode(x: &FreeElement) -> FreeElement {
    let mut out = FreeElement::term(Basis::Unit, counit(x));
    let aug = x.filter(|b| !b.is_unit());
    let mut sign = -Rational::one();
    for n in 0.. {
        let it = iterated_reduced_delta(&aug, n);
        if it.is_zero() {
            break;
        }
        out.add_scaled(&multiply_out(Tag::Star, &it), &sign);
        sign = -sign;
    }
    out
}

/// The algebra map fixing `V` and exchanging `*` with `·`, defined on
/// generators and extended through the factorization into branches.
pub fn tag_swap_basis(b: &Basis) -> Basis {
    match b {
        Basis::Unit => Basis::Unit,
        Basis::Tree(t) if t.is_leaf() => b.clone(),
        Basis::Tree(t) => {
            let op = t.tag().other();
            b.factors()
                .iter()
                .map(tag_swap_basis)
                .reduce(|acc, f| product_basis(op, &acc, &f))
                .expect("nonempty factorization")
        }
    }
}

pub fn tag_swap(x: &FreeElement) -> FreeElement {
    x.map_basis(tag_swap_basis)
}

pub fn swap_tensor(x: &Tensor2) -> Tensor2 {
    x.map_basis(|(a, b)| (tag_swap_basis(a), tag_swap_basis(b)))
}

pub fn twist(x: &Tensor2) -> Tensor2 {
    x.map_basis(|(a, b)| (b.clone(), a.clone()))
}

/// `(f ⊗ g)` applied to a tensor square.
pub fn tensor_map<F, G>(x: &Tensor2, mut f: F, mut g: G) -> Tensor2
where
    F: FnMut(&Basis) -> FreeElement,
    G: FnMut(&Basis) -> FreeElement,
{
    x.map_linear(|(a, b)| f(a).bilinear(&g(b), |l, r| LinComb::from_basis((l.clone(), r.clone()))))
}

/// `(Δ ⊗ Id)Δ(x) − (Id ⊗ Δ)Δ(x)`, as triples.
pub fn coassociativity_defect(which: Coproduct, x: &FreeElement) -> TensorN {
    let d = coproduct(which, x);
    let mut out = TensorN::zero();
    for ((a, b), c) in d.iter() {
        for ((a1, a2), c1) in coproduct_basis(which, a).iter() {
            out.add_term(vec![a1.clone(), a2.clone(), b.clone()], c * c1);
        }
        for ((b1, b2), c2) in coproduct_basis(which, b).iter() {
            out.add_term(vec![a.clone(), b1.clone(), b2.clone()], -(c * c2));
        }
    }
    out
}

/// `(ε ⊗ Id)Δ(x) = x = (Id ⊗ ε)Δ(x)`.
pub fn is_counital(which: Coproduct, x: &FreeElement) -> bool {
    let d = coproduct(which, x);
    let left: FreeElement = d
        .iter()
        .filter(|((a, _), _)| a.is_unit())
        .map(|((_, b), c)| (b.clone(), c.clone()))
        .collect();
    let right: FreeElement = d
        .iter()
        .filter(|((_, b), _)| b.is_unit())
        .map(|((a, _), c)| (a.clone(), c.clone()))
        .collect();
    &left == x && &right == x
}

fn embed(x: &FreeElement, left: bool) -> Tensor2 {
    x.map_basis(|b| {
        if left {
            (b.clone(), Basis::Unit)
        } else {
            (Basis::Unit, b.clone())
        }
    })
}

/// `Δ(x∘y) − Δ(x)∘Δ(y)`.
pub fn hopf_defect(which: Coproduct, op: Tag, x: &FreeElement, y: &FreeElement) -> Tensor2 {
    coproduct(which, &free2as::product(op, x, y))
        - tensor_product(op, &coproduct(which, x), &coproduct(which, y))
}

/// `Δ(x∘y) − (x⊗1)∘Δ(y) − Δ(x)∘(1⊗y) + x⊗y`.
pub fn unital_infinitesimal_defect(
    which: Coproduct,
    op: Tag,
    x: &FreeElement,
    y: &FreeElement,
) -> Tensor2 {
    let lhs = coproduct(which, &free2as::product(op, x, y));
    let mut rhs = tensor_product(op, &embed(x, true), &coproduct(which, y));
    rhs += &tensor_product(op, &coproduct(which, x), &embed(y, false));
    rhs -= &x.bilinear(y, |a, b| LinComb::from_basis((a.clone(), b.clone())));
    lhs - rhs
}

/// The compatibility table: `(*, Δ)` and `(·, δ)` are Hopf, `(·, Δ)` and
/// `(*, δ)` are unital infinitesimal.
pub fn compatibility_table_holds(x: &FreeElement, y: &FreeElement) -> bool {
    hopf_defect(Coproduct::Delta, Tag::Star, x, y).is_zero()
        && unital_infinitesimal_defect(Coproduct::Delta, Tag::Dot, x, y).is_zero()
        && unital_infinitesimal_defect(Coproduct::DeltaSecond, Tag::Star, x, y).is_zero()
        && hopf_defect(Coproduct::DeltaSecond, Tag::Dot, x, y).is_zero()
}

/// Renders `c a (x) b + ...`, or `0`.
pub fn format_tensor2(x: &Tensor2) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|((a, b), c)| format!("{} {a} (x) {b}", format_rational(c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn format_tensor_n(x: &TensorN) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|(w, c)| {
            let parts: Vec<String> = w.iter().map(|b| b.to_string()).collect();
            format!("{} {}", format_rational(c), parts.join(" (x) "))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `Δ` by the closed recursive formula on trees, kept as an independent
/// cross-check of the axiomatic recursion.
///
/// For `t = t^1 ∨ .. ∨ t^r` tagged `·` it sums `1⊗t` and, for each `i`,
/// `(V(t^1..t^{i-1})⊗1) · [Δ((t^i)^*) − 1⊗(t^i)^*] · (1⊗V(t^{i+1}..t^r))`,
/// where `V` of a single tree `s` is `s^*` and `V` of two or more trees is
/// their grafting tagged `·`, with `V` of nothing equal to 1. On `t^*` it is the `*`-product of the
/// values on the dot-tagged branches.
pub fn delta_closed_form(b: &Basis) -> Tensor2 {
    let t = match b {
        Basis::Unit => return pair(&Basis::Unit, &Basis::Unit),
        Basis::Tree(t) if t.is_leaf() => return pair(b, &Basis::Unit) + pair(&Basis::Unit, b),
        Basis::Tree(t) => t,
    };
    if t.tag() == Tag::Star {
        return t
            .branches(Tag::Dot)
            .iter()
            .map(delta_closed_form)
            .reduce(|acc, d| tensor_product(Tag::Star, &acc, &d))
            .expect("nonempty");
    }
    let branches = t.untagged().branches();
    let wedge = |parts: &[free2as::DecoratedTree]| -> Basis {
        match parts.len() {
            0 => Basis::Unit,
            1 => parts[0].tagged(Tag::Star),
            _ => free2as::DecoratedTree::graft(parts)
                .expect("nonempty")
                .tagged(Tag::Dot),
        }
    };
    let mut out = pair(&Basis::Unit, b);
    for i in 0..branches.len() {
        let ti = branches[i].tagged(Tag::Star);
        let inner = delta_closed_form(&ti) - pair(&Basis::Unit, &ti);
        let left = pair(&wedge(&branches[..i]), &Basis::Unit);
        let right = pair(&Basis::Unit, &wedge(&branches[i + 1..]));
        let term = tensor_product(Tag::Dot, &tensor_product(Tag::Dot, &left, &inner), &right);
        out += &term;
    }
    out
}

// ------------------------------------------------------------- generic models

/// A connected graded bialgebra presented on an explicit basis per degree.
///
/// Used by the convolution machinery, which is stated for any connected
/// unital infinitesimal (or Hopf) bialgebra.
pub trait ConnectedBialgebra {
    type Basis: Ord + Clone + fmt::Debug + fmt::Display;

    fn unit(&self) -> Self::Basis;
    fn degree(&self, b: &Self::Basis) -> usize;
    /// Basis of the degree `n` part, in a fixed order.
    fn basis(&self, n: usize) -> Vec<Self::Basis>;
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;
    /// `Δ̄` on a basis element of positive degree.
    fn reduced_coproduct(&self, b: &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)>;

    fn is_unit(&self, b: &Self::Basis) -> bool {
        *b == self.unit()
    }

    fn multiply(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        x.bilinear(y, |a, b| self.product(a, b))
    }

    fn multiply_word(&self, factors: &[Self::Basis]) -> LinComb<Self::Basis> {
        factors.iter().fold(LinComb::from_basis(self.unit()), |acc, f| {
            self.multiply(&acc, &LinComb::from_basis(f.clone()))
        })
    }

    fn coproduct(&self, b: &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)> {
        let u = self.unit();
        if self.is_unit(b) {
            return LinComb::from_basis((u.clone(), u));
        }
        let mut out = self.reduced_coproduct(b);
        out.add_term((b.clone(), u.clone()), Rational::one());
        out.add_term((u, b.clone()), Rational::one());
        out
    }

    /// `Δ̄^n` of a basis element, as words of `n + 1` factors.
    fn iterated_reduced(&self, b: &Self::Basis, n: usize) -> LinComb<Vec<Self::Basis>> {
        if self.is_unit(b) {
            return if n == 0 {
                LinComb::from_basis(vec![b.clone()])
            } else {
                LinComb::zero()
            };
        }
        let mut cur = LinComb::from_basis(vec![b.clone()]);
        for _ in 0..n {
            cur = cur.map_linear(|w: &Vec<Self::Basis>| {
                self.reduced_coproduct(&w[0]).map_basis(|(l, r)| {
                    let mut v = vec![l.clone(), r.clone()];
                    v.extend(w[1..].iter().cloned());
                    v
                })
            });
            if cur.is_zero() {
                break;
            }
        }
        cur
    }
}

/// `2as(K)` on one generator with a chosen product and coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeModel {
    pub product: Tag,
    pub coproduct: Coproduct,
}

impl FreeModel {
    /// `(2as(K), ·, Δ)`, a connected unital infinitesimal bialgebra.
    pub fn unital_infinitesimal() -> Self {
        FreeModel {
            product: Tag::Dot,
            coproduct: Coproduct::Delta,
        }
    }

    /// `(2as(K), *, Δ)`, a connected Hopf algebra.
    pub fn hopf() -> Self {
        FreeModel {
            product: Tag::Star,
            coproduct: Coproduct::Delta,
        }
    }
}

impl ConnectedBialgebra for FreeModel {
    type Basis = Basis;

    fn unit(&self) -> Basis {
        Basis::Unit
    }

    fn degree(&self, b: &Basis) -> usize {
        b.degree()
    }

    fn basis(&self, n: usize) -> Vec<Basis> {
        free2as::basis_of_degree(n)
    }

    fn product(&self, a: &Basis, b: &Basis) -> FreeElement {
        LinComb::from_basis(product_basis(self.product, a, b))
    }

    fn reduced_coproduct(&self, b: &Basis) -> Tensor2 {
        reduced_basis(self.coproduct, b)
    }
}
