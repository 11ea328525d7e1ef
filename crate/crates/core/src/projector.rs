//! Convolution of graded endomaps, the idempotent `e` onto primitives and the
//! isomorphism between a connected unital infinitesimal bialgebra and the
//! tensor coalgebra on its primitives.
//!
//! For a connected unital infinitesimal bialgebra `(H, ν, Δ)` the map
//! `e = J − J⋆J + J⋆J⋆J − ..` with `J = Id − uc` is a projection onto the
//! primitives, and `G(x) = Σ_n e^{⊗n} Δ̄^{n-1}(x)` identifies `H` with the
//! tensor coalgebra on them, with inverse `F(p_1..p_n) = p_1 · .. · p_n`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::bialgebra::{kernel_on_basis, ConnectedBialgebra, FreeModel};
use crate::error::{Error, Result};
use crate::free2as::{DecoratedTree, FreeElement, Tag};
use crate::linalg::SparseMatrix;
use crate::linear::{rational, LinComb, Rational};

/// Bases of the homogeneous parts up to a bound, with positions.
#[derive(Clone, Debug)]
pub struct BasisIndex<B: Ord> {
    bases: Vec<Vec<B>>,
    position: BTreeMap<B, (usize, usize)>,
}

impl<B: Ord + Clone> BasisIndex<B> {
    pub fn new<M: ConnectedBialgebra<Basis = B>>(model: &M, bound: usize) -> Self {
        let bases: Vec<Vec<B>> = (0..=bound).map(|n| model.basis(n)).collect();
        let mut position = BTreeMap::new();
        for (d, basis) in bases.iter().enumerate() {
            for (i, b) in basis.iter().enumerate() {
                position.insert(b.clone(), (d, i));
            }
        }
        BasisIndex { bases, position }
    }

    pub fn bound(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, d: usize) -> &[B] {
        &self.bases[d]
    }

    /// Coordinates of a homogeneous element of degree `d`.
    pub fn coordinates(&self, d: usize, x: &LinComb<B>) -> Result<LinComb<usize>> {
        let mut out = LinComb::zero();
        for (b, c) in x.iter() {
            match self.position.get(b) {
                Some(&(e, i)) if e == d => out.add_term(i, c.clone()),
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "element is not supported in degree {d}"
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn element(&self, d: usize, coords: &[(usize, Rational)]) -> LinComb<B> {
        coords
            .iter()
            .map(|(i, c)| (self.bases[d][*i].clone(), c.clone()))
            .collect()
    }

    pub fn locate(&self, b: &B) -> Option<(usize, usize)> {
        self.position.get(b).copied()
    }
}

/// A degree-preserving linear map, one matrix per degree `0..=bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEndoMap {
    blocks: Vec<SparseMatrix>,
}

impl GradedEndoMap {
    pub fn from_fn<B, F>(index: &BasisIndex<B>, mut f: F) -> Result<Self>
    where
        B: Ord + Clone,
        F: FnMut(&B) -> LinComb<B>,
    {
        let mut blocks = Vec::new();
        for d in 0..=index.bound() {
            let basis = index.basis(d);
            let cols = basis
                .iter()
                .map(|b| index.coordinates(d, &f(b)))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(SparseMatrix::from_columns(basis.len(), cols));
        }
        Ok(GradedEndoMap { blocks })
    }

    pub fn identity<B: Ord + Clone>(index: &BasisIndex<B>) -> Self {
        GradedEndoMap {
            blocks: (0..=index.bound())
                .map(|d| SparseMatrix::identity(index.basis(d).len()))
                .collect(),
        }
    }

    /// `u ∘ c`: the identity in degree 0 and zero elsewhere.
    pub fn unit_counit<B: Ord + Clone>(index: &BasisIndex<B>) -> Self {
        GradedEndoMap {
            blocks: (0..=index.bound())
                .map(|d| {
                    let n = index.basis(d).len();
                    if d == 0 {
                        SparseMatrix::identity(n)
                    } else {
                        SparseMatrix::zero(n, n)
                    }
                })
                .collect(),
        }
    }

    /// `J = Id − u ∘ c`.
    pub fn augmentation_projection<B: Ord + Clone>(index: &BasisIndex<B>) -> Self {
        Self::identity(index).linear_combination(&rational(1), &Self::unit_counit(index), &rational(-1))
    }

    pub fn bound(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn block(&self, d: usize) -> &SparseMatrix {
        &self.blocks[d]
    }

    pub fn apply<B: Ord + Clone>(&self, index: &BasisIndex<B>, b: &B) -> LinComb<B> {
        let (d, i) = index.locate(b).expect("basis element within the bound");
        index.element(d, self.blocks[d].column(i))
    }

    pub fn apply_element<B: Ord + Clone>(&self, index: &BasisIndex<B>, x: &LinComb<B>) -> LinComb<B> {
        x.map_linear(|b| self.apply(index, b))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedEndoMap) -> GradedEndoMap {
        GradedEndoMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.compose(b))
                .collect(),
        }
    }

    pub fn linear_combination(&self, a: &Rational, other: &GradedEndoMap, b: &Rational) -> GradedEndoMap {
        GradedEndoMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(x, y)| x.linear_combination(a, y, b))
                .collect(),
        }
    }

    pub fn rank(&self, d: usize) -> usize {
        self.blocks[d].rank()
    }

    /// Sparse triplet dump of one degree (see [`SparseMatrix::to_triplets`]).
    pub fn triplets(&self, d: usize) -> String {
        self.blocks[d].to_triplets()
    }
}

/// `(f ⋆ g)(x) = ν ∘ (f ⊗ g) ∘ Δ(x)`.
pub fn convolution<M: ConnectedBialgebra>(
    model: &M,
    index: &BasisIndex<M::Basis>,
    f: &GradedEndoMap,
    g: &GradedEndoMap,
) -> Result<GradedEndoMap> {
    GradedEndoMap::from_fn(index, |b| {
        model.coproduct(b).map_linear(|(l, r)| {
            model.multiply(&f.apply(index, l), &g.apply(index, r))
        })
    })
}

/// `e(x) = Σ_{r≥0} (−1)^r ν^r ∘ Δ̄^r (x)` on the augmentation ideal, `e(1) = 0`.
pub fn apply_e<M: ConnectedBialgebra>(model: &M, b: &M::Basis) -> LinComb<M::Basis> {
    let mut out = LinComb::zero();
    if model.is_unit(b) {
        return out;
    }
    let mut sign = Rational::one();
    for r in 0.. {
        let it = model.iterated_reduced(b, r);
        if it.is_zero() {
            break;
        }
        out.add_scaled(&it.map_linear(|w: &Vec<M::Basis>| model.multiply_word(w)), &sign);
        sign = -sign;
    }
    out
}

pub fn apply_e_element<M: ConnectedBialgebra>(model: &M, x: &LinComb<M::Basis>) -> LinComb<M::Basis> {
    x.map_linear(|b| apply_e(model, b))
}

/// `e(x) = x − Σ x_(1) · e(x_(2))`, the fixed-point form of `e = J − J ⋆ e`.
pub fn apply_e_recursive<M: ConnectedBialgebra>(model: &M, b: &M::Basis) -> LinComb<M::Basis> {
    if model.is_unit(b) {
        return LinComb::zero();
    }
    let mut out = LinComb::from_basis(b.clone());
    for ((l, r), c) in model.reduced_coproduct(b).iter() {
        let term = model.multiply(&LinComb::from_basis(l.clone()), &apply_e_recursive(model, r));
        out.add_scaled(&term, &-c.clone());
    }
    out
}

/// Probes the unital infinitesimal relation on basis pairs of total degree
/// up to `max_degree`.
pub fn check_unital_infinitesimal<M: ConnectedBialgebra>(model: &M, max_degree: usize) -> Result<()> {
    let u = model.unit();
    let pair = |a: &M::Basis, b: &M::Basis| LinComb::from_basis((a.clone(), b.clone()));
    let times = |x: &LinComb<(M::Basis, M::Basis)>, y: &LinComb<(M::Basis, M::Basis)>| {
        x.bilinear(y, |(a, b), (c, d)| {
            model
                .product(a, c)
                .bilinear(&model.product(b, d), |l, r| LinComb::from_basis((l.clone(), r.clone())))
        })
    };
    for n in 1..=max_degree {
        for p in 0..=n {
            for x in model.basis(p) {
                for y in model.basis(n - p) {
                    let lhs = model
                        .product(&x, &y)
                        .map_linear(|z| model.coproduct(z));
                    let mut rhs = times(&pair(&x, &u), &model.coproduct(&y));
                    rhs += &times(&model.coproduct(&x), &pair(&u, &y));
                    rhs -= &pair(&x, &y);
                    if lhs != rhs {
                        return Err(Error::NotUnitalInfinitesimal(format!("fails on ({x}, {y})")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The matrices of `e` up to `bound`, after probing the unital
/// infinitesimal relation.
pub fn idempotent_e<M: ConnectedBialgebra>(model: &M, index: &BasisIndex<M::Basis>) -> Result<GradedEndoMap> {
    check_unital_infinitesimal(model, index.bound().min(4))?;
    GradedEndoMap::from_fn(index, |b| apply_e(model, b))
}

/// `e` as the finite alternating sum `Σ_{r≥1} (−1)^{r−1} J^{⋆r}` of
/// convolution powers, computed with matrices.
pub fn idempotent_by_convolution<M: ConnectedBialgebra>(
    model: &M,
    index: &BasisIndex<M::Basis>,
) -> Result<GradedEndoMap> {
    let j = GradedEndoMap::augmentation_projection(index);
    let mut power = j.clone();
    let mut out = j.clone();
    let mut sign = rational(1);
    for _ in 1..index.bound().max(1) {
        power = convolution(model, index, &power, &j)?;
        sign = -sign;
        out = out.linear_combination(&rational(1), &power, &sign);
    }
    Ok(out)
}

/// `e` on `2as(V)` for the unital infinitesimal structure `(·, Δ)`.
pub fn e_free(x: &FreeElement) -> FreeElement {
    apply_e_element(&FreeModel::unital_infinitesimal(), x)
}

/// `ω(t)^.` with `e(t^*) = t^* + ω(t)^.`; the support must be dot-tagged.
pub fn omega(t: &DecoratedTree) -> Result<FreeElement> {
    if t.degree() < 2 {
        return Err(Error::InvalidArgument("omega needs a tree of degree at least 2".into()));
    }
    let star = LinComb::from_basis(t.tagged(Tag::Star));
    let w = e_free(&star) - star;
    if let Some(b) = w.basis().find(|b| b.tag() != Some(Tag::Dot)) {
        return Err(Error::Consistency(format!("omega({t}) has non-dot support {b}")));
    }
    Ok(w)
}

/// Letter of the tensor coalgebra on primitives: the `index`-th primitive
/// basis vector in degree `degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimLetter {
    pub degree: usize,
    pub index: usize,
}

impl fmt::Display for PrimLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}_{}", self.degree, self.index)
    }
}

pub type PrimWord = Vec<PrimLetter>;

/// The maps `G : H → T^c(Prim H)` and `F : T^c(Prim H) → H` up to a bound.
pub struct StructureIso<'a, M: ConnectedBialgebra> {
    model: &'a M,
    index: BasisIndex<M::Basis>,
    /// primitive basis per degree, paired with the basis element at its free column
    prims: Vec<Vec<(M::Basis, LinComb<M::Basis>)>>,
    e_coords: BTreeMap<M::Basis, LinComb<PrimLetter>>,
    g_memo: BTreeMap<M::Basis, LinComb<PrimWord>>,
}

impl<'a, M: ConnectedBialgebra> StructureIso<'a, M> {
    pub fn new(model: &'a M, bound: usize) -> Result<Self> {
        check_unital_infinitesimal(model, bound.min(4))?;
        let index = BasisIndex::new(model, bound);
        let mut prims = vec![Vec::new()];
        for d in 1..=bound {
            let basis = index.basis(d).to_vec();
            let ker = kernel_on_basis(&basis, |b| model.reduced_coproduct(b));
            prims.push(ker.into_iter().map(|(f, v)| (basis[f].clone(), v)).collect());
        }
        // Σ over compositions of Π dim Prim must equal dim H in every degree
        let dims: Vec<usize> = prims.iter().map(Vec::len).collect();
        let mut words = vec![1usize];
        for n in 1..=bound {
            words.push((1..=n).map(|d| dims[d] * words[n - d]).sum());
            if words[n] != index.basis(n).len() {
                return Err(Error::Consistency(format!(
                    "primitives do not generate degree {n}: {} words against dimension {}",
                    words[n],
                    index.basis(n).len()
                )));
            }
        }
        Ok(StructureIso {
            model,
            index,
            prims,
            e_coords: BTreeMap::new(),
            g_memo: BTreeMap::new(),
        })
    }

    pub fn bound(&self) -> usize {
        self.index.bound()
    }

    pub fn index(&self) -> &BasisIndex<M::Basis> {
        &self.index
    }

    pub fn primitive(&self, l: PrimLetter) -> &LinComb<M::Basis> {
        &self.prims[l.degree][l.index].1
    }

    pub fn primitive_dimension(&self, d: usize) -> usize {
        self.prims[d].len()
    }

    /// Coordinates of a primitive element of degree `d` in the primitive basis.
    pub fn primitive_coordinates(&self, d: usize, p: &LinComb<M::Basis>) -> Result<LinComb<PrimLetter>> {
        let coords: LinComb<PrimLetter> = self.prims[d]
            .iter()
            .enumerate()
            .map(|(i, (free, _))| (PrimLetter { degree: d, index: i }, p.coeff(free)))
            .collect();
        let rebuilt = coords.map_linear(|l| self.primitive(*l).clone());
        if &rebuilt != p {
            return Err(Error::Consistency(format!("element of degree {d} is not primitive")));
        }
        Ok(coords)
    }

    fn e_coordinates(&mut self, b: &M::Basis) -> Result<LinComb<PrimLetter>> {
        if let Some(c) = self.e_coords.get(b) {
            return Ok(c.clone());
        }
        let d = self.model.degree(b);
        let c = self.primitive_coordinates(d, &apply_e(self.model, b))?;
        self.e_coords.insert(b.clone(), c.clone());
        Ok(c)
    }

    /// `G(b) = Σ_n e^{⊗n} Δ̄^{n−1}(b)` in primitive coordinates.
    pub fn g(&mut self, b: &M::Basis) -> Result<LinComb<PrimWord>> {
        if let Some(x) = self.g_memo.get(b) {
            return Ok(x.clone());
        }
        if self.model.is_unit(b) {
            return Ok(LinComb::zero());
        }
        // coassociativity gives G(b) = e(b) + Σ e(b_(1)) ⊗ G(b_(2)) over Δ̄(b)
        let mut out = self.e_coordinates(b)?.map_basis(|l| vec![*l]);
        for ((l, r), c) in self.model.reduced_coproduct(b).iter() {
            let head = self.e_coordinates(l)?;
            let tail = self.g(r)?;
            let words = head.bilinear(&tail, |x, w| {
                let mut v = Vec::with_capacity(w.len() + 1);
                v.push(*x);
                v.extend_from_slice(w);
                LinComb::from_basis(v)
            });
            out.add_scaled(&words, c);
        }
        self.g_memo.insert(b.clone(), out.clone());
        Ok(out)
    }

    pub fn g_element(&mut self, x: &LinComb<M::Basis>) -> Result<LinComb<PrimWord>> {
        let mut out = LinComb::zero();
        for (b, c) in x.iter() {
            out.add_scaled(&self.g(b)?, c);
        }
        Ok(out)
    }

    /// `F(p_1 .. p_n) = p_1 · .. · p_n`.
    pub fn f(&self, w: &PrimWord) -> LinComb<M::Basis> {
        w.iter().fold(LinComb::from_basis(self.model.unit()), |acc, l| {
            self.model.multiply(&acc, self.primitive(*l))
        })
    }

    /// Words of primitive letters of total degree `n`.
    pub fn words_of_degree(&self, n: usize) -> Vec<PrimWord> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for d in 1..=n {
            for i in 0..self.prims[d].len() {
                for mut rest in self.words_of_degree(n - d) {
                    rest.insert(0, PrimLetter { degree: d, index: i });
                    out.push(rest);
                }
            }
        }
        out
    }

    /// `F ∘ G = J` on the basis of degree `n`.
    pub fn check_fg_is_j(&mut self, n: usize) -> Result<bool> {
        for b in self.index.basis(n).to_vec() {
            let fg = self.g(&b)?.map_linear(|w| self.f(w));
            let want = if n == 0 { LinComb::zero() } else { LinComb::from_basis(b) };
            if fg != want {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `G ∘ F = Id` on the words of degree `n`.
    pub fn check_gf_is_id(&mut self, n: usize) -> Result<bool> {
        for w in self.words_of_degree(n) {
            let image = self.f(&w);
            let back = self.g_element(&image)?;
            let want = if n == 0 { LinComb::zero() } else { LinComb::from_basis(w) };
            if back != want {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Δ_deconc ∘ G = (G ⊗ G) ∘ Δ` on the basis of degree `n`.
    pub fn check_coalgebra_morphism(&mut self, n: usize) -> Result<bool> {
        let with_unit = |this: &mut Self, b: &M::Basis| -> Result<LinComb<PrimWord>> {
            if this.model.is_unit(b) {
                Ok(LinComb::from_basis(Vec::new()))
            } else {
                this.g(b)
            }
        };
        for b in self.index.basis(n).to_vec() {
            let gb = with_unit(self, &b)?;
            let lhs: LinComb<(PrimWord, PrimWord)> = gb.map_linear(|w| {
                (0..=w.len())
                    .map(|i| ((w[..i].to_vec(), w[i..].to_vec()), Rational::one()))
                    .collect()
            });
            let mut rhs = LinComb::zero();
            for ((l, r), c) in self.model.coproduct(&b).iter() {
                let gl = with_unit(self, l)?;
                let gr = with_unit(self, r)?;
                let t = gl.bilinear(&gr, |x, y| LinComb::from_basis((x.clone(), y.clone())));
                rhs.add_scaled(&t, c);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `G ∘ e = e' ∘ G`, where `e'` keeps the words of length one.
    pub fn check_naturality(&mut self, n: usize) -> Result<bool> {
        for b in self.index.basis(n).to_vec() {
            let lhs = self.g_element(&apply_e(self.model, &b))?;
            let rhs = self.g(&b)?.filter(|w| w.len() == 1);
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix of `G` in degree `n`, rows indexed by [`Self::words_of_degree`].
    pub fn g_matrix(&mut self, n: usize) -> Result<SparseMatrix> {
        let words = self.words_of_degree(n);
        let pos: BTreeMap<PrimWord, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut cols = Vec::new();
        for b in self.index.basis(n).to_vec() {
            let gb = self.g(&b)?;
            cols.push(gb.map_basis(|w| pos[w]));
        }
        Ok(SparseMatrix::from_columns(words.len(), cols))
    }

    /// Matrix of `F` in degree `n`, columns indexed by [`Self::words_of_degree`].
    pub fn f_matrix(&self, n: usize) -> Result<SparseMatrix> {
        let cols = self
            .words_of_degree(n)
            .iter()
            .map(|w| self.index.coordinates(n, &self.f(w)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_columns(self.index.basis(n).len(), cols))
    }
}

/// `Σ` over compositions `n = p_1 + .. + p_k` of `Π dims[p_i]`.
pub fn composition_count(dims: &[u128], n: usize) -> u128 {
    let mut words = vec![1u128];
    for m in 1..=n {
        words.push((1..=m).filter(|&d| d < dims.len()).map(|d| dims[d] * words[m - d]).sum());
    }
    words[n]
}

pub fn is_zero_map(m: &GradedEndoMap) -> bool {
    m.blocks.iter().all(|b| b.is_zero())
}
