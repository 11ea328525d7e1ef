//! Worked values: degree-two and degree-three coproducts, the closed forms of
//! the low `M_pq`, tree compositions in the free B∞-algebra and the θ table.

use cofree::bialgebra::{delta, reduced_delta, Tensor2};
use cofree::binfty::{expand_decorated, free_compose_mpq, mpq_in_2as, rijk_sides, BInftyElement, FreeTwoAs};
use cofree::free2as::{format_element, generator, parse_element, star, Basis, DecoratedTree, Tag};
use cofree::linear::{rational, LinComb};
use cofree::tensor::theta;
use cofree::trees::{enumerate, schroeder};

fn pair(a: &str, b: &str) -> Tensor2 {
    LinComb::from_basis((a.parse().unwrap(), b.parse().unwrap()))
}

fn trees(terms: &[(i64, &str)]) -> BInftyElement {
    terms.iter().map(|(c, s)| (s.parse::<DecoratedTree>().unwrap(), rational(*c))).collect()
}

fn d(s: &str) -> DecoratedTree {
    s.parse().unwrap()
}

#[test]
fn schroeder_list() {
    let counts: Vec<usize> = (1..=7).map(|n| enumerate(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 3, 11, 45, 197, 903]);
    assert_eq!(schroeder(6).to_string(), "903");
}

#[test]
fn three_leaf_products() {
    let x = generator("x");
    let xx = star(&x, &x);
    assert_eq!(format_element(&xx), "1 (||)*");
    let cases = [
        ("(||).:u,v", "|:w", Tag::Star, "1 ((||)|)*:u,v,w"),
        ("|:u", "(||).:v,w", Tag::Star, "1 (|(||))*:u,v,w"),
        ("(||)*:u,v", "|:w", Tag::Star, "1 (|||)*:u,v,w"),
        ("(||)*:u,v", "|:w", Tag::Dot, "1 ((||)|).:u,v,w"),
        ("(||).:u,v", "|:w", Tag::Dot, "1 (|||).:u,v,w"),
    ];
    for (a, b, op, want) in cases {
        let got = cofree::free2as::product(op, &parse_element(a).unwrap(), &parse_element(b).unwrap());
        assert_eq!(format_element(&got), want, "{a} {op:?} {b}");
    }
}

#[test]
fn coproducts_of_small_trees() {
    let x = parse_element("(||).:u,v").unwrap();
    assert_eq!(reduced_delta(&x), pair("|:u", "|:v"));
    assert_eq!(delta(&x), pair("(||).:u,v", "1") + pair("1", "(||).:u,v") + pair("|:u", "|:v"));
    let y = parse_element("((||)|).:u,v,w").unwrap();
    assert_eq!(
        reduced_delta(&y),
        pair("(||)*:u,v", "|:w") + pair("|:u", "(||).:v,w") + pair("|:v", "(||).:u,w")
    );
}

/// The four-leaf coproduct display reads juxtaposition as `*` and every
/// named tree as dot-tagged; exactly one dot-tagged tree of degree four has
/// that coproduct.
#[test]
fn four_leaf_coproduct_identifies_its_tree() {
    let want = pair("((||)|)*:u,v,w", "|:x")
        + pair("(||).:u,v", "(||).:w,x")
        + pair("|:w", "(|||).:u,v,x")
        + pair("|:u", "((||)|).:v,w,x")
        + pair("(||)*:u,w", "(||).:v,x");
    let labels: Vec<_> = ["u", "v", "w", "x"].iter().map(|s| cofree::free2as::label(s)).collect();
    let hits: Vec<Basis> = enumerate(4)
        .unwrap()
        .into_iter()
        .flat_map(|t| [Tag::Star, Tag::Dot].map(|tag| Basis::tree(t.clone(), tag, labels.clone()).unwrap()))
        .filter(|b| reduced_delta(&LinComb::from_basis(b.clone())) == want)
        .collect();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0].to_string(), "(((||)|)|).:u,v,w,x");
}

#[test]
fn low_operations_by_recursion() {
    let (u, v, w) = (generator("u"), generator("v"), generator("w"));
    let m11 = mpq_in_2as(&FreeTwoAs, &[u.clone()], &[v.clone()]).unwrap();
    assert_eq!(format_element(&m11), "1 (||)*:u,v + -1 (||).:u,v + -1 (||).:v,u");
    let m21 = mpq_in_2as(&FreeTwoAs, &[u.clone(), v.clone()], &[w.clone()]).unwrap();
    let want = parse_element("((||)|)*:u,v,w - (|(||)).:u,v,w - ((||)|).:u,w,v + (|||).:u,w,v").unwrap();
    assert_eq!(m21, want);
    let (l, r) = rijk_sides(&FreeTwoAs, &[u], &[v], &[w]).unwrap();
    assert_eq!(l, r);
}

#[test]
fn three_leaf_compositions() {
    assert_eq!(
        free_compose_mpq(&[d("|:u")], &[d("(||):v,w")]).unwrap(),
        trees(&[(1, "(|||):u,v,w"), (-1, "(|(||)):u,v,w"), (-1, "(|(||)):u,w,v")])
    );
    assert_eq!(
        free_compose_mpq(&[d("(||):u,v")], &[d("|:w")]).unwrap(),
        trees(&[(1, "(|||):u,v,w"), (-1, "((||)|):u,v,w"), (-1, "((||)|):v,u,w")])
    );
}

#[test]
fn four_leaf_compositions() {
    assert_eq!(
        free_compose_mpq(&[d("(||):u,v")], &[d("(||):w,x")]).unwrap(),
        trees(&[
            (1, "(||||):u,v,w,x"),
            (-1, "((||)||):u,v,w,x"),
            (-1, "((||)||):v,u,w,x"),
            (-1, "(||(||)):u,v,w,x"),
            (-1, "(||(||)):u,v,x,w"),
            (1, "((||)(||)):u,v,w,x"),
            (1, "((||)(||)):v,u,w,x"),
            (1, "((||)(||)):u,v,x,w"),
            (1, "((||)(||)):v,u,x,w"),
        ])
    );
    assert_eq!(
        free_compose_mpq(&[d("(||):u,v")], &[d("|:w"), d("|:x")]).unwrap(),
        trees(&[(1, "(||(||)):u,v,w,x"), (-1, "((||)(||)):u,v,w,x"), (-1, "((||)(||)):v,u,w,x")])
    );
}

#[test]
fn corolla_expansion() {
    let ex = expand_decorated(&d("(|||):u,v,w")).unwrap();
    let text = ex.to_string();
    assert!(text.contains("(M 1 2 (leaf u) (word (leaf v) (leaf w)))"), "{text}");
    assert!(text.contains("(M 1 2 (leaf u) (word (leaf w) (leaf v)))"), "{text}");
    assert!(text.contains("(M 1 1 (leaf u) (M 1 1 (leaf v) (leaf w)))"), "{text}");
    assert_eq!(ex.evaluate().unwrap(), trees(&[(1, "(|||):u,v,w")]));
}

#[test]
fn theta_table() {
    let table = ["(||).", "(||)*", "(|||).", "(|(||)).", "((||)|).", "(|(||))*", "((||)|)*", "(|||)*"];
    let values: Vec<String> = table.iter().map(|s| theta(&s.parse().unwrap()).unwrap().to_string()).collect();
    assert_eq!(values, ["1", "2", "1", "2", "2", "3", "3", "6"]);
}
