//! Tensor algebra and tensor coalgebra models.
//!
//! Words over a graded alphabet carry the deconcatenation coproduct. The
//! products on them are concatenation and shuffle products, together with the
//! product built from the operations `M_pq` of a B∞ structure by summing
//! over all ways to cut both words into consecutive blocks.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bialgebra::ConnectedBialgebra;
use crate::error::{Error, Result};
use crate::free2as::{label, Basis, FreeElement, Label, Tag};
use crate::linear::{format_rational, parse_rational, LinComb, Rational};

/// A generator with a positive degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub symbol: Label,
    pub degree: usize,
}

impl Letter {
    pub fn new(symbol: &str, degree: usize) -> Self {
        Letter {
            symbol: label(symbol),
            degree,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{{}}}", self.symbol, self.degree)
    }
}

/// A word; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word<L = Letter>(pub Vec<L>);

impl<L> Word<L> {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<L: Clone> Word<L> {
    pub fn letter(l: L) -> Self {
        Word(vec![l])
    }

    fn prepend(&self, l: &L) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(l.clone());
        v.extend(self.0.iter().cloned());
        Word(v)
    }
}

impl Word<Letter> {
    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.degree).sum()
    }
}

impl<L: fmt::Display> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Linear combination of words.
pub type TensorElement<L = Letter> = LinComb<Word<L>>;

/// `Σ c (a ⊗ b)` over pairs of words.
pub type WordPairs<L = Letter> = LinComb<(Word<L>, Word<L>)>;

pub fn format_word_pairs<L: Ord + fmt::Display>(x: &WordPairs<L>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|((a, b), c)| format!("{} {a} (x) {b}", format_rational(c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Parses words such as `a{1}b{2}` (or `1` for the empty word).
pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s == "1" {
        return Ok(Word::empty());
    }
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest
            .find('{')
            .ok_or_else(|| Error::Parse(format!("letter without degree in `{s}`")))?;
        let close = rest
            .find('}')
            .ok_or_else(|| Error::Parse(format!("unclosed degree in `{s}`")))?;
        let symbol = &rest[..open];
        if symbol.is_empty() || !symbol.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::Parse(format!("bad letter `{symbol}` in `{s}`")));
        }
        let degree: usize = rest[open + 1..close]
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree in `{s}`")))?;
        if degree == 0 {
            return Err(Error::Parse("letters have positive degree".into()));
        }
        out.push(Letter::new(symbol, degree));
        rest = &rest[close + 1..];
    }
    Ok(Word(out))
}

/// A graded alphabet: distinct symbols of positive degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    letters: Vec<Letter>,
}

impl GradedBasis {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for l in &letters {
            if l.degree == 0 {
                return Err(Error::InvalidArgument(format!("letter {} has degree 0", l.symbol)));
            }
            if !seen.insert(l.symbol.clone()) {
                return Err(Error::InvalidArgument(format!("duplicate letter {}", l.symbol)));
            }
        }
        Ok(GradedBasis { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn get(&self, symbol: &str) -> Option<&Letter> {
        self.letters.iter().find(|l| &*l.symbol == symbol)
    }

    /// All words of total degree `n`, sorted.
    pub fn words_of_degree(&self, n: usize) -> Vec<Word> {
        let mut table: Vec<Vec<Vec<Letter>>> = vec![vec![Vec::new()]];
        for d in 1..=n {
            let mut here = Vec::new();
            for l in &self.letters {
                if l.degree <= d {
                    for w in &table[d - l.degree] {
                        let mut v = w.clone();
                        v.push(l.clone());
                        here.push(v);
                    }
                }
            }
            table.push(here);
        }
        let mut out: Vec<Word> = table.swap_remove(n).into_iter().map(Word).collect();
        out.sort();
        out
    }
}

// ------------------------------------------------------------ basic products

/// `Δ(v_1..v_n) = Σ_i v_1..v_i ⊗ v_{i+1}..v_n`.
pub fn deconcatenate<L: Ord + Clone>(w: &Word<L>) -> WordPairs<L> {
    (0..=w.len())
        .map(|i| {
            (
                (Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())),
                Rational::one(),
            )
        })
        .collect()
}

pub fn deconcatenation<L: Ord + Clone>(x: &TensorElement<L>) -> WordPairs<L> {
    x.map_linear(deconcatenate)
}

pub fn concat<L: Clone>(a: &Word<L>, b: &Word<L>) -> Word<L> {
    let mut v = a.0.clone();
    v.extend(b.0.iter().cloned());
    Word(v)
}

pub fn concat_elements<L: Ord + Clone>(x: &TensorElement<L>, y: &TensorElement<L>) -> TensorElement<L> {
    x.bilinear(y, |a, b| LinComb::from_basis(concat(a, b)))
}

/// Sum over the `(p, q)`-shuffles of two words.
pub fn shuffle<L: Ord + Clone>(a: &Word<L>, b: &Word<L>) -> TensorElement<L> {
    fn go<L: Ord + Clone>(a: &[L], b: &[L], prefix: &mut Vec<L>, out: &mut TensorElement<L>) {
        if a.is_empty() || b.is_empty() {
            let mut w = prefix.clone();
            w.extend(a.iter().chain(b).cloned());
            out.add_term(Word(w), Rational::one());
            return;
        }
        prefix.push(a[0].clone());
        go(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0].clone());
        go(a, &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = LinComb::zero();
    go(&a.0, &b.0, &mut Vec::new(), &mut out);
    out
}

pub fn shuffle_elements<L: Ord + Clone>(x: &TensorElement<L>, y: &TensorElement<L>) -> TensorElement<L> {
    x.bilinear(y, |a, b| shuffle(a, b))
}

fn word_pair<L: Ord + Clone>(x: &TensorElement<L>, left: bool) -> WordPairs<L> {
    x.map_basis(|w| {
        if left {
            (w.clone(), Word::empty())
        } else {
            (Word::empty(), w.clone())
        }
    })
}

fn concat_pairs<L: Ord + Clone>(x: &WordPairs<L>, y: &WordPairs<L>) -> WordPairs<L> {
    x.bilinear(y, |(a, b), (c, d)| LinComb::from_basis((concat(a, c), concat(b, d))))
}

/// The unital infinitesimal relation for concatenation and deconcatenation:
/// `Δ(x·y) = (x⊗1)·Δ(y) + Δ(x)·(1⊗y) − x⊗y`.
pub fn unital_infinitesimal_holds<L: Ord + Clone>(x: &TensorElement<L>, y: &TensorElement<L>) -> bool {
    let lhs = deconcatenation(&concat_elements(x, y));
    let mut rhs = concat_pairs(&word_pair(x, true), &deconcatenation(y));
    rhs += &concat_pairs(&deconcatenation(x), &word_pair(y, false));
    rhs -= &x.bilinear(y, |a, b| LinComb::from_basis((a.clone(), b.clone())));
    lhs == rhs
}

/// Checks the unital infinitesimal relation on all pairs of the given words.
pub fn tfc_check<L: Ord + Clone>(words: &[Word<L>]) -> bool {
    words.iter().all(|a| {
        words.iter().all(|b| {
            unital_infinitesimal_holds(&LinComb::from_basis(a.clone()), &LinComb::from_basis(b.clone()))
        })
    })
}

// ------------------------------------------------------------ B∞ structures

/// The operations `M_pq` (`p, q ≥ 1`) of a B∞ structure on the span of letters.
///
/// The boundary values are fixed: `M_10 = M_01 = Id` and every other `M_p0`,
/// `M_0q` vanishes.
pub trait BInfty {
    type Letter: Ord + Clone + fmt::Debug;

    fn mpq(&self, left: &[Self::Letter], right: &[Self::Letter]) -> Result<LinComb<Self::Letter>>;
}

/// Valid first blocks `(i, j)` when cutting words of lengths `p` and `q`.
///
/// `(1, 0)` and `(0, 1)` act as identities; blocks with `i, j ≥ 1` are `M_ij`;
/// every other block is a vanishing operation and is skipped.
pub fn first_blocks(p: usize, q: usize) -> impl Iterator<Item = (usize, usize)> {
    let ids = [(1, 0), (0, 1)]
        .into_iter()
        .filter(move |&(i, j)| i <= p && j <= q);
    let ms = (1..=p).flat_map(move |i| (1..=q).map(move |j| (i, j)));
    ids.chain(ms)
}

/// All cuttings of `(p, q)` into consecutive valid blocks.
pub fn block_sequences(p: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    if p == 0 && q == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, j) in first_blocks(p, q) {
        for mut rest in block_sequences(p - i, q - j) {
            rest.insert(0, (i, j));
            out.push(rest);
        }
    }
    out
}

/// `a * b = Σ M_{i_1 j_1} .. M_{i_k j_k}(a, b)`, the product recovered from
/// the `M_pq` by summing over all cuttings of `a` and `b` into blocks.
pub fn star_from_binfty<B: BInfty>(
    s: &B,
    a: &Word<B::Letter>,
    b: &Word<B::Letter>,
) -> Result<TensorElement<B::Letter>> {
    let (a, b) = (&a.0, &b.0);
    let (p, q) = (a.len(), b.len());
    // suffix[i][j] = product of a[i..] and b[j..]
    let mut suffix: Vec<Vec<TensorElement<B::Letter>>> = vec![vec![LinComb::zero(); q + 1]; p + 1];
    for i in (0..=p).rev() {
        for j in (0..=q).rev() {
            if i == p && j == q {
                suffix[i][j] = LinComb::from_basis(Word::empty());
                continue;
            }
            let mut acc = LinComb::zero();
            for (di, dj) in first_blocks(p - i, q - j) {
                let rest = &suffix[i + di][j + dj];
                if rest.is_zero() {
                    continue;
                }
                let head: LinComb<B::Letter> = match (di, dj) {
                    (1, 0) => LinComb::from_basis(a[i].clone()),
                    (0, 1) => LinComb::from_basis(b[j].clone()),
                    _ => s.mpq(&a[i..i + di], &b[j..j + dj])?,
                };
                for (l, c) in head.iter() {
                    for (w, d) in rest.iter() {
                        acc.add_term(w.prepend(l), c * d);
                    }
                }
            }
            suffix[i][j] = acc;
        }
    }
    Ok(suffix.swap_remove(0).swap_remove(0))
}

pub fn star_elements<B: BInfty>(
    s: &B,
    x: &TensorElement<B::Letter>,
    y: &TensorElement<B::Letter>,
) -> Result<TensorElement<B::Letter>> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&star_from_binfty(s, a, b)?, &(c * d));
        }
    }
    Ok(out)
}

/// All `M_pq` vanish; the recovered product is the shuffle.
#[derive(Clone, Debug, Default)]
pub struct TrivialBInfty<L>(PhantomData<L>);

impl<L> TrivialBInfty<L> {
    pub fn new() -> Self {
        TrivialBInfty(PhantomData)
    }
}

impl<L: Ord + Clone + fmt::Debug> BInfty for TrivialBInfty<L> {
    type Letter = L;

    fn mpq(&self, _: &[L], _: &[L]) -> Result<LinComb<L>> {
        Ok(LinComb::zero())
    }
}

/// A bilinear product on the span of an alphabet, given on pairs of letters.
#[derive(Clone, Debug)]
pub struct LetterProduct {
    alphabet: GradedBasis,
    table: BTreeMap<(Letter, Letter), LinComb<Letter>>,
}

impl LetterProduct {
    /// Builds the product and checks that it is associative on all letter triples.
    pub fn new(alphabet: GradedBasis, table: BTreeMap<(Letter, Letter), LinComb<Letter>>) -> Result<Self> {
        let known = |l: &Letter| alphabet.letters.contains(l);
        for ((a, b), v) in &table {
            if !known(a) || !known(b) || v.basis().any(|l| !known(l)) {
                return Err(Error::InvalidArgument(format!(
                    "product entry for ({a}, {b}) uses letters outside the alphabet"
                )));
            }
        }
        let p = LetterProduct { alphabet, table };
        let ls = p.alphabet.letters.clone();
        for a in &ls {
            for b in &ls {
                for c in &ls {
                    let (x, y, z) = (LinComb::from_basis(a.clone()), LinComb::from_basis(b.clone()), LinComb::from_basis(c.clone()));
                    if p.apply(&p.apply(&x, &y), &z) != p.apply(&x, &p.apply(&y, &z)) {
                        return Err(Error::InvalidArgument(format!(
                            "product is not associative on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &GradedBasis {
        &self.alphabet
    }

    pub fn letter_product(&self, a: &Letter, b: &Letter) -> LinComb<Letter> {
        self.table.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }

    pub fn apply(&self, x: &LinComb<Letter>, y: &LinComb<Letter>) -> LinComb<Letter> {
        x.bilinear(y, |a, b| self.letter_product(a, b))
    }
}

/// `M_11` is an associative product and every higher `M_pq` vanishes.
#[derive(Clone, Debug)]
pub struct QuasiShuffle {
    pub product: LetterProduct,
}

impl BInfty for QuasiShuffle {
    type Letter = Letter;

    fn mpq(&self, left: &[Letter], right: &[Letter]) -> Result<LinComb<Letter>> {
        if left.len() == 1 && right.len() == 1 {
            Ok(self.product.letter_product(&left[0], &right[0]))
        } else {
            Ok(LinComb::zero())
        }
    }
}

pub fn quasi_shuffle(product: &LetterProduct, a: &Word, b: &Word) -> TensorElement {
    star_from_binfty(&QuasiShuffle { product: product.clone() }, a, b).expect("quasi-shuffle is total")
}

/// `aω * bθ = M_11(a,b)(ω * θ) + a(ω * bθ) + b(aω * θ)`, written directly.
pub fn quasi_shuffle_recursive(product: &LetterProduct, a: &[Letter], b: &[Letter]) -> TensorElement {
    if a.is_empty() || b.is_empty() {
        let mut w = a.to_vec();
        w.extend(b.iter().cloned());
        return LinComb::from_basis(Word(w));
    }
    let prepend = |l: &Letter, x: &TensorElement| x.map_basis(|w| w.prepend(l));
    let mut out = LinComb::zero();
    let tail = quasi_shuffle_recursive(product, &a[1..], &b[1..]);
    for (l, c) in product.letter_product(&a[0], &b[0]).iter() {
        out.add_scaled(&prepend(l, &tail), c);
    }
    out += &prepend(&a[0], &quasi_shuffle_recursive(product, &a[1..], b));
    out += &prepend(&b[0], &quasi_shuffle_recursive(product, a, &b[1..]));
    out
}

/// A B∞ structure given by an explicit finite table.
///
/// Every `(p, q)` with `p, q ≥ 1` and `p + q ≤ max_arity` must be present
/// (possibly with no entries, meaning zero); asking for a larger arity is an
/// error rather than a silent zero.
#[derive(Clone, Debug)]
pub struct TableBInfty {
    generators: GradedBasis,
    max_arity: usize,
    operations: BTreeMap<(usize, usize), BTreeMap<(Vec<Letter>, Vec<Letter>), LinComb<Letter>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonGenerator {
    pub symbol: String,
    pub degree: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonLetterTerm {
    pub coeff: String,
    pub symbol: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonEntry {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub value: Vec<JsonLetterTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonOperation {
    pub p: usize,
    pub q: usize,
    pub entries: Vec<JsonEntry>,
}

/// JSON form of a [`TableBInfty`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct JsonTable {
    pub generators: Vec<JsonGenerator>,
    pub max_arity: usize,
    pub operations: Vec<JsonOperation>,
}

impl TableBInfty {
    pub fn from_json(table: &JsonTable) -> Result<Self> {
        let generators = GradedBasis::new(
            table
                .generators
                .iter()
                .map(|g| Letter::new(&g.symbol, g.degree))
                .collect(),
        )?;
        let find = |s: &str| {
            generators
                .get(s)
                .cloned()
                .ok_or_else(|| Error::Parse(format!("unknown generator `{s}`")))
        };
        let mut operations = BTreeMap::new();
        for op in &table.operations {
            if op.p == 0 || op.q == 0 {
                return Err(Error::Parse("operations need p, q >= 1".into()));
            }
            let mut entries = BTreeMap::new();
            for e in &op.entries {
                if e.left.len() != op.p || e.right.len() != op.q {
                    return Err(Error::Parse(format!("entry arity differs from ({}, {})", op.p, op.q)));
                }
                let left = e.left.iter().map(|s| find(s)).collect::<Result<Vec<_>>>()?;
                let right = e.right.iter().map(|s| find(s)).collect::<Result<Vec<_>>>()?;
                let mut value = LinComb::zero();
                for t in &e.value {
                    value.add_term(find(&t.symbol)?, parse_rational(&t.coeff)?);
                }
                entries.insert((left, right), value);
            }
            operations.insert((op.p, op.q), entries);
        }
        for n in 2..=table.max_arity {
            for p in 1..n {
                if !operations.contains_key(&(p, n - p)) {
                    return Err(Error::IncompleteBInfty(n));
                }
            }
        }
        Ok(TableBInfty {
            generators,
            max_arity: table.max_arity,
            operations,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let table: JsonTable = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&table)
    }

    pub fn generators(&self) -> &GradedBasis {
        &self.generators
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn to_json(&self) -> JsonTable {
        let names = |w: &[Letter]| w.iter().map(|l| l.symbol.to_string()).collect();
        JsonTable {
            generators: self
                .generators
                .letters()
                .iter()
                .map(|l| JsonGenerator {
                    symbol: l.symbol.to_string(),
                    degree: l.degree,
                })
                .collect(),
            max_arity: self.max_arity,
            operations: self
                .operations
                .iter()
                .map(|(&(p, q), entries)| JsonOperation {
                    p,
                    q,
                    entries: entries
                        .iter()
                        .map(|((l, r), v)| JsonEntry {
                            left: names(l),
                            right: names(r),
                            value: v
                                .iter()
                                .map(|(s, c)| JsonLetterTerm {
                                    coeff: format_rational(c),
                                    symbol: s.symbol.to_string(),
                                })
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl BInfty for TableBInfty {
    type Letter = Letter;

    fn mpq(&self, left: &[Letter], right: &[Letter]) -> Result<LinComb<Letter>> {
        let n = left.len() + right.len();
        if n > self.max_arity {
            return Err(Error::IncompleteBInfty(n));
        }
        let op = self
            .operations
            .get(&(left.len(), right.len()))
            .ok_or(Error::IncompleteBInfty(n))?;
        Ok(op
            .get(&(left.to_vec(), right.to_vec()))
            .cloned()
            .unwrap_or_default())
    }
}

// ------------------------------------------------------------------- θ

fn single_generator_check(b: &Basis) -> Result<()> {
    let ls = b.labels();
    if let Some(first) = ls.first() {
        if let Some(other) = ls.iter().find(|l| *l != first) {
            return Err(Error::NotSingleGenerator(other.to_string()));
        }
    }
    Ok(())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn theta_unchecked(b: &Basis) -> BigInt {
    let t = match b {
        Basis::Tree(t) if !t.is_leaf() => t,
        _ => return BigInt::one(),
    };
    match t.tag() {
        Tag::Dot => t.branches(Tag::Star).iter().map(theta_unchecked).product(),
        Tag::Star => {
            let branches = t.branches(Tag::Dot);
            let multinomial = branches
                .iter()
                .fold(factorial(t.degree()), |acc, s| acc.div_floor(&factorial(s.degree())));
            branches.iter().map(theta_unchecked).fold(multinomial, |acc, x| acc * x)
        }
    }
}

/// The coefficient `θ(t)` of the image of a basis element in the shuffle
/// algebra on one generator: `θ(|) = 1`, `θ(t^.) = Π θ(t_i^*)` and
/// `θ(t^*) = n!/(p_1!..p_k!) Π θ(t_i^.)`.
pub fn theta(b: &Basis) -> Result<BigInt> {
    single_generator_check(b)?;
    Ok(theta_unchecked(b))
}

/// `Θ(x) = Σ c θ(b) x^{⊗ deg b}` in the shuffle algebra on one letter of degree 1.
pub fn theta_image(x: &FreeElement) -> Result<TensorElement> {
    let g = Letter::new(crate::free2as::DEFAULT_GENERATOR, 1);
    let mut out = LinComb::zero();
    for (b, c) in x.iter() {
        let w = Word(vec![g.clone(); b.degree()]);
        out.add_term(w, c * Rational::from_integer(theta(b)?));
    }
    Ok(out)
}

// ---------------------------------------------------- the T^fc bialgebra

/// Words over a graded alphabet with concatenation and deconcatenation.
#[derive(Clone, Debug)]
pub struct TensorFc {
    pub alphabet: GradedBasis,
}

impl ConnectedBialgebra for TensorFc {
    type Basis = Word;

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn degree(&self, b: &Word) -> usize {
        b.degree()
    }

    fn basis(&self, n: usize) -> Vec<Word> {
        self.alphabet.words_of_degree(n)
    }

    fn product(&self, a: &Word, b: &Word) -> TensorElement {
        LinComb::from_basis(concat(a, b))
    }

    fn reduced_coproduct(&self, b: &Word) -> WordPairs {
        (1..b.len())
            .map(|i| ((Word(b.0[..i].to_vec()), Word(b.0[i..].to_vec())), Rational::one()))
            .collect()
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}
