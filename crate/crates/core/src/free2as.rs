//! The free 2-associative algebra on decorated planar trees.
//!
//! A basis element is the unit or a tree carrying a root tag (`*` or `.`)
//! and one label per leaf. The two products graft their arguments under a
//! new root, collapsing the edge to an argument whose tag equals the product
//! being applied.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::{format_rational, parse_rational, LinComb, Rational};
use crate::trees::{self, graft, mirror, ungraft, PlanarTree};

/// Name of a generator of `V`.
pub type Label = Arc<str>;

/// Label used everywhere in single-generator mode.
pub const DEFAULT_GENERATOR: &str = "x";

pub fn label(s: &str) -> Label {
    Arc::from(s)
}

pub fn default_labels(n: usize) -> Vec<Label> {
    vec![label(DEFAULT_GENERATOR); n]
}

/// Which of the two products a tree root records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Star,
    Dot,
}

impl Tag {
    pub fn other(self) -> Tag {
        match self {
            Tag::Star => Tag::Dot,
            Tag::Dot => Tag::Star,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Tag::Star => '*',
            Tag::Dot => '.',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tag::Star => "star",
            Tag::Dot => "dot",
        }
    }
}

impl std::str::FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tag> {
        match s {
            "star" | "*" => Ok(Tag::Star),
            "dot" | "." => Ok(Tag::Dot),
            _ => Err(Error::Parse(format!("unknown product `{s}`"))),
        }
    }
}

fn check_label_count(tree: &PlanarTree, labels: &[Label]) -> Result<()> {
    if labels.len() != tree.degree() {
        return Err(Error::InvalidArgument(format!(
            "tree {tree} has {} leaves but {} labels were given",
            tree.degree(),
            labels.len()
        )));
    }
    Ok(())
}

fn write_labels(f: &mut fmt::Formatter<'_>, labels: &[Label]) -> fmt::Result {
    if labels.iter().any(|l| &**l != DEFAULT_GENERATOR) {
        write!(f, ":{}", labels.join(","))?;
    }
    Ok(())
}

/// An untagged tree with one label per leaf.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DecoratedTree {
    tree: PlanarTree,
    labels: Vec<Label>,
}

impl DecoratedTree {
    pub fn new(tree: PlanarTree, labels: Vec<Label>) -> Result<Self> {
        check_label_count(&tree, &labels)?;
        Ok(DecoratedTree { tree, labels })
    }

    pub fn single(tree: PlanarTree) -> Self {
        let labels = default_labels(tree.degree());
        DecoratedTree { tree, labels }
    }

    pub fn leaf(l: Label) -> Self {
        DecoratedTree {
            tree: PlanarTree::leaf(),
            labels: vec![l],
        }
    }

    pub fn tree(&self) -> &PlanarTree {
        &self.tree
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn degree(&self) -> usize {
        self.tree.degree()
    }

    pub fn tagged(&self, tag: Tag) -> Basis {
        Basis::Tree(TaggedTree::from_parts(self.tree.clone(), tag, self.labels.clone()))
    }

    /// The children of the root, each carrying its slice of labels.
    pub fn branches(&self) -> Vec<DecoratedTree> {
        split_labels(&ungraft(&self.tree), &self.labels)
            .into_iter()
            .map(|(tree, labels)| DecoratedTree { tree, labels })
            .collect()
    }

    /// Grafts decorated trees, concatenating their labels.
    pub fn graft(parts: &[DecoratedTree]) -> Result<Self> {
        let tree = graft(parts.iter().map(|p| p.tree.clone()).collect())?;
        let labels = parts.iter().flat_map(|p| p.labels.iter().cloned()).collect();
        Ok(DecoratedTree { tree, labels })
    }
}

impl fmt::Display for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tree)?;
        write_labels(f, &self.labels)
    }
}

fn split_labels(parts: &[PlanarTree], labels: &[Label]) -> Vec<(PlanarTree, Vec<Label>)> {
    let mut at = 0;
    parts
        .iter()
        .map(|t| {
            let ls = labels[at..at + t.degree()].to_vec();
            at += t.degree();
            (t.clone(), ls)
        })
        .collect()
}

/// A tree of degree at least one with a root tag and leaf labels.
///
/// The trivial tree always carries the nominal tag [`Tag::Star`], so the two
/// copies of `|` are identified.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TaggedTree {
    tree: PlanarTree,
    tag: Tag,
    labels: Vec<Label>,
}

impl TaggedTree {
    pub fn new(tree: PlanarTree, tag: Tag, labels: Vec<Label>) -> Result<Self> {
        check_label_count(&tree, &labels)?;
        Ok(Self::from_parts(tree, tag, labels))
    }

    fn from_parts(tree: PlanarTree, tag: Tag, labels: Vec<Label>) -> Self {
        let tag = if tree.is_leaf() { Tag::Star } else { tag };
        TaggedTree { tree, tag, labels }
    }

    pub fn tree(&self) -> &PlanarTree {
        &self.tree
    }

    pub fn tag(&self) -> Tag {
        self.tag
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn degree(&self) -> usize {
        self.tree.degree()
    }

    pub fn is_leaf(&self) -> bool {
        self.tree.is_leaf()
    }

    pub fn untagged(&self) -> DecoratedTree {
        DecoratedTree {
            tree: self.tree.clone(),
            labels: self.labels.clone(),
        }
    }

    /// The root's branches as basis elements tagged `tag` (leaves stay leaves).
    pub fn branches(&self, tag: Tag) -> Vec<Basis> {
        split_labels(&ungraft(&self.tree), &self.labels)
            .into_iter()
            .map(|(t, ls)| Basis::Tree(TaggedTree::from_parts(t, tag, ls)))
            .collect()
    }
}

impl Ord for TaggedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.tree
            .cmp(&other.tree)
            .then(self.tag.cmp(&other.tag))
            .then_with(|| self.labels.cmp(&other.labels))
    }
}

impl PartialOrd for TaggedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Basis element of `2as(V)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Basis {
    Unit,
    Tree(TaggedTree),
}

/// An element of `2as(V)`.
pub type FreeElement = LinComb<Basis>;

impl Basis {
    pub fn tree(tree: PlanarTree, tag: Tag, labels: Vec<Label>) -> Result<Basis> {
        Ok(Basis::Tree(TaggedTree::new(tree, tag, labels)?))
    }

    /// Tagged tree decorated by the default generator.
    pub fn single(tree: PlanarTree, tag: Tag) -> Basis {
        let labels = default_labels(tree.degree());
        Basis::Tree(TaggedTree::from_parts(tree, tag, labels))
    }

    pub fn leaf(l: Label) -> Basis {
        Basis::Tree(TaggedTree::from_parts(PlanarTree::leaf(), Tag::Star, vec![l]))
    }

    pub fn degree(&self) -> usize {
        match self {
            Basis::Unit => 0,
            Basis::Tree(t) => t.degree(),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Basis::Unit)
    }

    pub fn as_tree(&self) -> Option<&TaggedTree> {
        match self {
            Basis::Unit => None,
            Basis::Tree(t) => Some(t),
        }
    }

    /// Root tag; `None` for the unit and for leaves.
    pub fn tag(&self) -> Option<Tag> {
        match self {
            Basis::Tree(t) if !t.is_leaf() => Some(t.tag),
            _ => None,
        }
    }

    pub fn labels(&self) -> &[Label] {
        match self {
            Basis::Unit => &[],
            Basis::Tree(t) => &t.labels,
        }
    }

    /// Factors `[b_1, .., b_k]` with `self = b_1 ∘ .. ∘ b_k` for `∘` the root
    /// product, each tagged with the other product. Leaves and the unit have
    /// no such factorization and return themselves.
    pub fn factors(&self) -> Vec<Basis> {
        match self {
            Basis::Tree(t) if !t.is_leaf() => t.branches(t.tag.other()),
            _ => vec![self.clone()],
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Unit => write!(f, "1"),
            Basis::Tree(t) => {
                write!(f, "{}", t.tree)?;
                if !t.is_leaf() {
                    write!(f, "{}", t.tag.symbol())?;
                }
                write_labels(f, &t.labels)
            }
        }
    }
}

/// The product `∘` of two basis elements; always a single basis element.
pub fn product_basis(op: Tag, a: &Basis, b: &Basis) -> Basis {
    let (a, b) = match (a, b) {
        (Basis::Unit, _) => return b.clone(),
        (_, Basis::Unit) => return a.clone(),
        (Basis::Tree(a), Basis::Tree(b)) => (a, b),
    };
    let open = |t: &TaggedTree| {
        if t.tag == op {
            ungraft(&t.tree)
        } else {
            vec![t.tree.clone()]
        }
    };
    let mut children = open(a);
    children.extend(open(b));
    let tree = graft(children).expect("at least two children");
    let mut labels = a.labels.clone();
    labels.extend(b.labels.iter().cloned());
    Basis::Tree(TaggedTree::from_parts(tree, op, labels))
}

pub fn product(op: Tag, x: &FreeElement, y: &FreeElement) -> FreeElement {
    x.bilinear(y, |a, b| LinComb::from_basis(product_basis(op, a, b)))
}

pub fn star(x: &FreeElement, y: &FreeElement) -> FreeElement {
    product(Tag::Star, x, y)
}

pub fn dot(x: &FreeElement, y: &FreeElement) -> FreeElement {
    product(Tag::Dot, x, y)
}

/// Iterated product of a nonempty or empty list (the empty product is 1).
pub fn product_all(op: Tag, xs: &[FreeElement]) -> FreeElement {
    xs.iter()
        .fold(unit(), |acc, x| product(op, &acc, x))
}

pub fn unit() -> FreeElement {
    LinComb::from_basis(Basis::Unit)
}

pub fn generator(l: &str) -> FreeElement {
    LinComb::from_basis(Basis::leaf(label(l)))
}

pub fn iota_basis(b: &Basis) -> Basis {
    match b {
        Basis::Unit => Basis::Unit,
        Basis::Tree(t) => {
            let mut labels = t.labels.clone();
            labels.reverse();
            Basis::Tree(TaggedTree::from_parts(mirror(&t.tree), t.tag, labels))
        }
    }
}

/// The involution: mirror each tree, keep the tag, reverse the labels.
pub fn iota(x: &FreeElement) -> FreeElement {
    x.map_basis(iota_basis)
}

/// Basis of the degree `n` part of `2as(K)` in canonical order.
pub fn basis_of_degree(n: usize) -> Vec<Basis> {
    match n {
        0 => vec![Basis::Unit],
        1 => vec![Basis::single(PlanarTree::leaf(), Tag::Star)],
        _ => trees::enumerate(n)
            .expect("n >= 2")
            .into_iter()
            .flat_map(|t| [Basis::single(t.clone(), Tag::Star), Basis::single(t, Tag::Dot)])
            .collect(),
    }
}

/// All distinct rearrangements of a multiset of labels, sorted.
pub fn label_arrangements(labels: &[Label]) -> Vec<Vec<Label>> {
    let mut sorted = labels.to_vec();
    sorted.sort();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation until exhausted
    let mut cur = sorted;
    loop {
        let n = cur.len();
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[i - 1] < cur[j]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Basis of the part of `2as(V)` with the given label multiset.
pub fn basis_for_labels(labels: &[Label]) -> Vec<Basis> {
    let n = labels.len();
    if n == 0 {
        return vec![Basis::Unit];
    }
    let words = label_arrangements(labels);
    let shapes: Vec<(PlanarTree, Tag)> = if n == 1 {
        vec![(PlanarTree::leaf(), Tag::Star)]
    } else {
        trees::enumerate(n)
            .expect("n >= 1")
            .into_iter()
            .flat_map(|t| [(t.clone(), Tag::Star), (t, Tag::Dot)])
            .collect()
    };
    let mut out: Vec<Basis> = shapes
        .iter()
        .flat_map(|(t, tag)| {
            words
                .iter()
                .map(|w| Basis::Tree(TaggedTree::from_parts(t.clone(), *tag, w.clone())))
        })
        .collect();
    out.sort();
    out
}

/// `dim 2as(K)_n`: 1, 1, then `2 C_{n-1}`.
pub fn dimension(n: usize) -> BigInt {
    match n {
        0 | 1 => BigInt::one(),
        _ => BigInt::from(2) * trees::schroeder(n - 1),
    }
}

fn series_mul(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    (0..=order)
        .map(|n| (0..=n).map(|i| &a[i] * &b[n - i]).sum())
        .collect()
}

/// Checks `f(x) = 1 - x + 2x C(x)` and `f(x) (1 - x C(x)) = 1` through `x^order`,
/// where `f` is the dimension series.
pub fn generating_series_check(order: usize) -> bool {
    let c = trees::schroeder_table(order + 1);
    let f: Vec<BigInt> = (0..=order).map(dimension).collect();
    let closed: Vec<BigInt> = (0..=order)
        .map(|n| match n {
            0 => BigInt::one(),
            1 => BigInt::from(-1) + BigInt::from(2) * &c[0],
            _ => BigInt::from(2) * &c[n - 1],
        })
        .collect();
    let one_minus_xc: Vec<BigInt> = (0..=order)
        .map(|n| if n == 0 { BigInt::one() } else { -c[n - 1].clone() })
        .collect();
    let prod = series_mul(&f, &one_minus_xc, order);
    f == closed
        && prod[0].is_one()
        && prod[1..].iter().all(Zero::is_zero)
        && trees::schroeder_series_check(order)
}

/// Writes `t^*` as the `*`-word `[t_1^., .., t_n^.]` of its branches.
pub fn word_form(b: &Basis) -> Result<Vec<Basis>> {
    match b {
        Basis::Tree(t) if t.is_leaf() || t.tag == Tag::Star => Ok(t.branches(Tag::Dot)),
        Basis::Tree(_) => Err(Error::InvalidArgument(format!(
            "word form needs a star-tagged tree, got {b}"
        ))),
        Basis::Unit => Err(Error::InvalidArgument("the unit has no word form".into())),
    }
}

/// Inverse of [`word_form`]: the `*`-product of dot-tagged trees.
pub fn from_word_form(word: &[Basis]) -> Result<Basis> {
    if word.is_empty() {
        return Err(Error::InvalidArgument("empty word".into()));
    }
    if let Some(b) = word.iter().find(|b| b.is_unit() || b.tag() == Some(Tag::Star)) {
        return Err(Error::InvalidArgument(format!(
            "word letters must be dot-tagged trees or leaves, got {b}"
        )));
    }
    Ok(word
        .iter()
        .skip(1)
        .fold(word[0].clone(), |acc, b| product_basis(Tag::Star, &acc, b)))
}

// ---------------------------------------------------------------- text format

fn is_label_byte(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

fn parse_labels_at(bytes: &[u8], mut pos: usize, tree: &PlanarTree) -> Result<(Vec<Label>, usize)> {
    if bytes.get(pos) != Some(&b':') {
        return Ok((default_labels(tree.degree()), pos));
    }
    pos += 1;
    let mut labels = Vec::new();
    loop {
        let start = pos;
        while pos < bytes.len() && is_label_byte(bytes[pos]) {
            pos += 1;
        }
        if start == pos {
            return Err(Error::Parse("empty label".into()));
        }
        labels.push(label(std::str::from_utf8(&bytes[start..pos]).unwrap()));
        if bytes.get(pos) == Some(&b',') {
            pos += 1;
        } else {
            break;
        }
    }
    Ok((labels, pos))
}

fn parse_basis_at(bytes: &[u8], mut pos: usize) -> Result<(Basis, usize)> {
    if bytes.get(pos) == Some(&b'1') {
        return Ok((Basis::Unit, pos + 1));
    }
    let (tree, next) = trees::parse_prefix(bytes, pos)?;
    pos = next;
    let tag = match bytes.get(pos) {
        Some(b'*') => {
            pos += 1;
            Some(Tag::Star)
        }
        Some(b'.') => {
            pos += 1;
            Some(Tag::Dot)
        }
        _ => None,
    };
    let tag = match tag {
        Some(t) => t,
        None if tree.is_leaf() => Tag::Star,
        None => return Err(Error::Parse(format!("tree {tree} needs a tag `*` or `.`"))),
    };
    let (labels, pos) = parse_labels_at(bytes, pos, &tree)?;
    check_label_count(&tree, &labels).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((Basis::Tree(TaggedTree::from_parts(tree, tag, labels)), pos))
}

/// Parses an untagged decorated tree `TREE[:l1,..,ln]`.
impl std::str::FromStr for DecoratedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<DecoratedTree> {
        let bytes = s.trim().as_bytes();
        let (tree, pos) = trees::parse_prefix(bytes, 0)?;
        let (labels, pos) = parse_labels_at(bytes, pos, &tree)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        DecoratedTree::new(tree, labels).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Basis> {
        let bytes = s.trim().as_bytes();
        let (b, pos) = parse_basis_at(bytes, 0)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(b)
    }
}

fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

/// Parses `[coeff] basis (("+" | "-") [coeff] basis)*`.
///
/// A bare number stands for that multiple of the unit, so `0` parses to the
/// zero element and printed output parses back to the same value.
pub fn parse_element(s: &str) -> Result<FreeElement> {
    let bytes = s.as_bytes();
    let mut pos = skip_ws(bytes, 0);
    let mut out = FreeElement::zero();
    if pos == bytes.len() {
        return Err(Error::Parse("empty element".into()));
    }
    let mut first = true;
    while pos < bytes.len() {
        let mut negative = false;
        if !first {
            match bytes[pos] {
                b'+' => {}
                b'-' => negative = true,
                c => return Err(Error::Parse(format!("expected `+` or `-`, found `{}`", c as char))),
            }
            pos = skip_ws(bytes, pos + 1);
        }
        if let Some(&c) = bytes.get(pos) {
            if c == b'+' || c == b'-' {
                negative ^= c == b'-';
                pos = skip_ws(bytes, pos + 1);
            }
        }
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let number = &s[start..pos];
        pos = skip_ws(bytes, pos);
        let starts_basis = matches!(bytes.get(pos), Some(b'(' | b'|' | b'1'));
        let (coeff, basis) = if number.is_empty() {
            let (b, next) = parse_basis_at(bytes, pos)?;
            pos = next;
            (Rational::one(), b)
        } else if starts_basis {
            let (b, next) = parse_basis_at(bytes, pos)?;
            pos = next;
            (parse_rational(number)?, b)
        } else {
            (parse_rational(number)?, Basis::Unit)
        };
        out.add_term(basis, if negative { -coeff } else { coeff });
        pos = skip_ws(bytes, pos);
        first = false;
    }
    Ok(out)
}

pub fn format_element(x: &FreeElement) -> String {
    x.to_string()
}

/// One term of the JSON form of an element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub tree: String,
    pub tag: Option<String>,
    pub labels: Vec<String>,
}

pub fn basis_to_json(b: &Basis, c: &Rational) -> JsonTerm {
    match b {
        Basis::Unit => JsonTerm {
            coeff: format_rational(c),
            tree: "1".into(),
            tag: None,
            labels: Vec::new(),
        },
        Basis::Tree(t) => JsonTerm {
            coeff: format_rational(c),
            tree: t.tree.encode(),
            tag: b.tag().map(|t| t.name().to_string()),
            labels: t.labels.iter().map(|l| l.to_string()).collect(),
        },
    }
}

pub fn element_to_json(x: &FreeElement) -> Vec<JsonTerm> {
    x.iter().map(|(b, c)| basis_to_json(b, c)).collect()
}

pub fn element_from_json(terms: &[JsonTerm]) -> Result<FreeElement> {
    let mut out = FreeElement::zero();
    for t in terms {
        let c = parse_rational(&t.coeff)?;
        let b = if t.tree == "1" {
            Basis::Unit
        } else {
            let tree: PlanarTree = t.tree.parse()?;
            let tag = match &t.tag {
                Some(s) => s.parse()?,
                None if tree.is_leaf() => Tag::Star,
                None => return Err(Error::Parse(format!("tree {tree} needs a tag"))),
            };
            let labels = if t.labels.is_empty() {
                default_labels(tree.degree())
            } else {
                t.labels.iter().map(|l| label(l)).collect()
            };
            Basis::tree(tree, tag, labels)?
        };
        out.add_term(b, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Basis {
        s.parse().unwrap()
    }

    fn e(s: &str) -> FreeElement {
        parse_element(s).unwrap()
    }

    #[test]
    fn products_of_small_trees() {
        assert_eq!(star(&e("(||).:u,v"), &e("|:w")), e("((||)|)*:u,v,w"));
        assert_eq!(dot(&e("|:u"), &e("(||)*:v,w")), e("(|(||)).:u,v,w"));
        assert_eq!(dot(&e("(||).:u,v"), &e("|:w")), e("(|||).:u,v,w"));
        assert_eq!(star(&e("|"), &e("|")), e("(||)*"));
        assert_eq!(dot(&e("|"), &e("|")), e("(||)."));
    }

    /// The collapse rule written out case by case for two degree-two trees.
    #[test]
    fn eight_case_table() {
        let cases = [
            ("(||)*", '*', "(||)*", "(||||)*"),
            ("(||)*", '*', "(||).", "(||(||))*"),
            ("(||).", '*', "(||)*", "((||)||)*"),
            ("(||).", '*', "(||).", "((||)(||))*"),
            ("(||)*", '.', "(||)*", "((||)(||))."),
            ("(||)*", '.', "(||).", "((||)||)."),
            ("(||).", '.', "(||)*", "(||(||))."),
            ("(||).", '.', "(||).", "(||||)."),
        ];
        for (s, op, t, want) in cases {
            let op = if op == '*' { Tag::Star } else { Tag::Dot };
            assert_eq!(product_basis(op, &b(s), &b(t)), b(want), "{s} {op:?} {t}");
        }
    }

    #[test]
    fn units() {
        let x = e("2 (|(||)).:u,v,w + -1 |:z");
        assert_eq!(star(&unit(), &x), x);
        assert_eq!(dot(&x, &unit()), x);
        assert_eq!(product_all(Tag::Dot, &[]), unit());
    }

    #[test]
    fn iota_examples() {
        assert_eq!(iota(&e("(|(||)).:u,v,w")), e("((||)|).:w,v,u"));
        assert_eq!(iota(&unit()), unit());
        let (x, y) = (e("(|(||))*:a,b,c"), e("(||).:d,f"));
        assert_eq!(iota(&star(&x, &y)), star(&iota(&y), &iota(&x)));
        assert_eq!(iota(&dot(&x, &y)), dot(&iota(&y), &iota(&x)));
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(3), BigInt::from(6));
        assert_eq!(dimension(1), BigInt::one());
        for n in 0..=6 {
            assert_eq!(BigInt::from(basis_of_degree(n).len()), dimension(n));
        }
        assert!(generating_series_check(10));
    }

    #[test]
    fn word_forms() {
        assert_eq!(word_form(&b("(||)*")).unwrap(), vec![b("|"), b("|")]);
        assert_eq!(word_form(&b("((||)|)*")).unwrap(), vec![b("(||)."), b("|")]);
        assert_eq!(from_word_form(&[b("|"), b("|"), b("|")]).unwrap(), b("(|||)*"));
        assert!(word_form(&Basis::Unit).is_err());
        for n in 1..=5 {
            for x in basis_of_degree(n) {
                if x.tag() != Some(Tag::Dot) {
                    assert_eq!(from_word_form(&word_form(&x).unwrap()).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn dot_of_monomials_is_a_single_dot_tree() {
        for p in 1..=3 {
            for q in 1..=3 {
                for x in basis_of_degree(p) {
                    for y in basis_of_degree(q) {
                        let z = product_basis(Tag::Dot, &x, &y);
                        assert_eq!(z.tag(), Some(Tag::Dot));
                        assert_eq!(z.degree(), p + q);
                    }
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "0",
            "1",
            "3",
            "1 (||)* + -2 (||).",
            "1/2 ((||)|)*:u,v,w + 1 |:z",
            "-1 1 + 4 (|(||)).",
        ] {
            let x = e(s);
            assert_eq!(e(&x.to_string()), x, "{s}");
        }
        assert_eq!(e("(||)* - (||)."), e("1 (||)* + -1 (||)."));
        assert_eq!(e("|*"), e("|"));
        assert!(parse_element("(||)").is_err());
        assert!(parse_element("(||)*:u").is_err());
        assert!(parse_element("").is_err());
        assert!(parse_element("(||)* (||).").is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = e("1/2 ((||)|)*:u,v,w + 1 |:z + -3 1");
        let json = element_to_json(&x);
        assert_eq!(json[0].tree, "1");
        assert_eq!(json[0].tag, None);
        assert_eq!(element_from_json(&json).unwrap(), x);
    }

    #[test]
    fn arrangements() {
        let ls: Vec<Label> = ["v", "u", "v"].iter().map(|s| label(s)).collect();
        assert_eq!(label_arrangements(&ls).len(), 3);
        assert_eq!(basis_for_labels(&ls).len(), 6 * 3);
    }
}
