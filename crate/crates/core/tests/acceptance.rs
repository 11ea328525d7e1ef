//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every check is exact; sampled checks use fixed seeds.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use cofree::bialgebra::{
    coassociativity_defect, compatibility_table_holds, delta, primitive_basis, reduced_delta, Coproduct, FreeModel,
};
use cofree::binfty::{
    check_rijk_sampled, free_compose_mpq, gamma_decorated, mpq_in_2as, primitive_of, variable_labels, FreeTwoAs,
};
use cofree::free2as::{
    basis_of_degree, dimension, dot, generating_series_check, generator, label, parse_element, product_basis, star,
    unit, Basis, DecoratedTree, FreeElement, Label, Tag,
};
use cofree::homology::{amalgamated_ranks, build_bprime};
use cofree::linear::{rational, LinComb};
use cofree::projector::{apply_e, e_free, idempotent_e, BasisIndex, StructureIso};
use cofree::sampling::{random_element, rng};
use cofree::tensor::{
    concat_elements, deconcatenation, quasi_shuffle, quasi_shuffle_recursive, shuffle, shuffle_elements,
    star_from_binfty, theta, theta_image, GradedBasis, Letter, LetterProduct, TensorElement, TensorFc, TrivialBInfty,
    Word,
};
use cofree::trees::{enumerate, schroeder, schroeder_series_check};

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalan(n: usize) -> usize {
    schroeder(n).to_string().parse().expect("small Schröder number")
}

fn schroeder_counts() -> Check {
    let sizes: Vec<usize> = (1..=7).map(|n| enumerate(n).map(|v| v.len())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(sizes == [1, 1, 3, 11, 45, 197, 903], || format!("tree counts {sizes:?}"))
}

fn free_dimensions() -> Check {
    for n in 2..=7 {
        let got = basis_of_degree(n).len();
        let want = 2 * catalan(n - 1);
        ensure(got == want && dimension(n) == want.into(), || format!("degree {n}: {got} basis elements, expected {want}"))?;
    }
    ensure(schroeder_series_check(10), || "2xC^2 - (1+x)C + 1 fails below order 10".into())?;
    ensure(generating_series_check(10), || "dimension series is not (1 - xC)^-1 to order 10".into())
}

fn algebra_axioms() -> Check {
    let bases: Vec<Vec<Basis>> = (0..=6).map(basis_of_degree).collect();
    let mut triples = 0usize;
    for da in 0..=6 {
        for db in 0..=6 - da {
            for dc in 0..=6 - da - db {
                for a in &bases[da] {
                    for b in &bases[db] {
                        for c in &bases[dc] {
                            for op in [Tag::Star, Tag::Dot] {
                                let l = product_basis(op, &product_basis(op, a, b), c);
                                let r = product_basis(op, a, &product_basis(op, b, c));
                                ensure(l == r, || format!("{op:?} not associative on ({a}, {b}, {c})"))?;
                            }
                            triples += 1;
                        }
                    }
                }
            }
        }
        for a in &bases[da] {
            for op in [Tag::Star, Tag::Dot] {
                let ok = product_basis(op, a, &Basis::Unit) == *a && product_basis(op, &Basis::Unit, a) == *a;
                ensure(ok, || format!("unit law fails for {a}"))?;
            }
        }
    }
    ensure(triples > 0, || "no triples checked".into())
}

fn bialgebra_axioms() -> Check {
    for n in 0..=5 {
        for b in basis_of_degree(n) {
            let x = LinComb::from_basis(b.clone());
            for which in [Coproduct::Delta, Coproduct::DeltaSecond] {
                ensure(coassociativity_defect(which, &x).is_zero(), || format!("{which:?} not coassociative on {b}"))?;
            }
        }
    }
    let alphabet: Vec<Label> = ["u", "v"].iter().map(|s| label(s)).collect();
    let mut r = rng(2024);
    for i in 0..500 {
        let x = random_element(&mut r, 0, 4, 2, &alphabet);
        let y = random_element(&mut r, 0, 4, 2, &alphabet);
        ensure(compatibility_table_holds(&x, &y), || format!("compatibility table fails on pair {i}: ({x}, {y})"))?;
    }
    Ok(())
}

fn el(s: &str) -> FreeElement {
    parse_element(s).expect("valid element")
}

fn dtree(s: &str) -> DecoratedTree {
    s.parse().expect("valid decorated tree")
}

fn pair(a: &str, b: &str) -> LinComb<(Basis, Basis)> {
    LinComb::from_basis((a.parse().unwrap(), b.parse().unwrap()))
}

fn worked_values() -> Check {
    let d2 = reduced_delta(&el("(||).:u,v"));
    ensure(d2 == pair("|:u", "|:v"), || format!("reduced coproduct of (||).:u,v is {d2:?}"))?;
    let full = delta(&el("(||).:u,v"));
    let want = pair("(||).:u,v", "1") + pair("1", "(||).:u,v") + pair("|:u", "|:v");
    ensure(full == want, || "full coproduct of (||).:u,v".into())?;
    let d3 = reduced_delta(&el("((||)|).:u,v,w"));
    let want = pair("(||)*:u,v", "|:w") + pair("|:u", "(||).:v,w") + pair("|:v", "(||).:u,w");
    ensure(d3 == want, || "reduced coproduct of ((||)|).:u,v,w".into())?;

    let (u, v, w) = (generator("u"), generator("v"), generator("w"));
    let m = |l: &[FreeElement], r: &[FreeElement]| mpq_in_2as(&FreeTwoAs, l, r).map_err(|e| e.to_string());
    ensure(m(&[u.clone()], &[v.clone()])? == star(&u, &v) - dot(&u, &v) - dot(&v, &u), || "M_11 closed form".into())?;
    let m21 = star(&dot(&u, &v), &w) - dot(&u, &star(&v, &w)) - dot(&star(&u, &w), &v) + dot(&dot(&u, &w), &v);
    ensure(m(&[u.clone(), v.clone()], &[w.clone()])? == m21, || "M_21 closed form".into())?;
    let m12 = star(&u, &dot(&v, &w)) - dot(&star(&u, &v), &w) - dot(&v, &star(&u, &w)) + dot(&dot(&v, &u), &w);
    ensure(m(&[u.clone()], &[v.clone(), w.clone()])? == m12, || "M_12 closed form".into())?;

    let tree_comb = |terms: &[(i64, &str)]| -> LinComb<DecoratedTree> {
        terms.iter().map(|(c, s)| (dtree(s), rational(*c))).collect()
    };
    let got = free_compose_mpq(&[dtree("|:u")], &[dtree("(||):v,w")]).map_err(|e| e.to_string())?;
    let want = tree_comb(&[(1, "(|||):u,v,w"), (-1, "(|(||)):u,v,w"), (-1, "(|(||)):u,w,v")]);
    ensure(got == want, || format!("M_11((|;u), ((||);vw)) = {got}"))?;
    let got = free_compose_mpq(&[dtree("(||):u,v")], &[dtree("|:w")]).map_err(|e| e.to_string())?;
    let want = tree_comb(&[(1, "(|||):u,v,w"), (-1, "((||)|):u,v,w"), (-1, "((||)|):v,u,w")]);
    ensure(got == want, || format!("M_11(((||);uv), (|;w)) = {got}"))?;

    let table = ["(||).", "(||)*", "(|||).", "(|(||)).", "((||)|).", "(|(||))*", "((||)|)*", "(|||)*"];
    let values: Vec<String> = table
        .iter()
        .map(|s| theta(&s.parse().unwrap()).map(|t| t.to_string()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(values == ["1", "2", "1", "2", "2", "3", "3", "6"], || format!("theta table {values:?}"))
}

fn idempotent_suite() -> Check {
    let model = FreeModel::unital_infinitesimal();
    let index = BasisIndex::new(&model, 6);
    let e = idempotent_e(&model, &index).map_err(|e| e.to_string())?;
    ensure(e.compose(&e) == e, || "e∘e differs from e".into())?;
    for n in 1..=6 {
        ensure(e.rank(n) == catalan(n - 1), || format!("rank of e in degree {n} is {}", e.rank(n)))?;
        for b in index.basis(n) {
            if b.tag() == Some(Tag::Dot) {
                ensure(e.apply(&index, b).is_zero(), || format!("e({b}) is not zero"))?;
            }
        }
    }
    for da in 1..6 {
        for db in 1..=6 - da {
            for a in index.basis(da) {
                for b in index.basis(db) {
                    let ab = product_basis(Tag::Dot, a, b);
                    ensure(e.apply(&index, &ab).is_zero(), || format!("e({a} · {b}) is not zero"))?;
                }
            }
        }
    }
    let tfc = TensorFc { alphabet: GradedBasis::new(vec![Letter::new("a", 1), Letter::new("b", 1)]).map_err(|e| e.to_string())? };
    for n in 0..=6 {
        for w in tfc.alphabet.words_of_degree(n) {
            let want = if w.len() == 1 { LinComb::from_basis(w.clone()) } else { LinComb::zero() };
            ensure(apply_e(&tfc, &w) == want, || format!("e({w}) on words"))?;
        }
    }
    Ok(())
}

fn structure_theorem() -> Check {
    let model = FreeModel::unital_infinitesimal();
    let mut iso = StructureIso::new(&model, 6).map_err(|e| e.to_string())?;
    let tfc = TensorFc { alphabet: GradedBasis::new(vec![Letter::new("a", 1), Letter::new("b", 1)]).map_err(|e| e.to_string())? };
    let mut iso_t = StructureIso::new(&tfc, 6).map_err(|e| e.to_string())?;
    for n in 0..=6 {
        let free = [iso.check_fg_is_j(n), iso.check_gf_is_id(n), iso.check_coalgebra_morphism(n)];
        let words = [iso_t.check_fg_is_j(n), iso_t.check_gf_is_id(n), iso_t.check_coalgebra_morphism(n)];
        for (name, r) in ["F∘G = J", "G∘F = Id", "G is a coalgebra map"].iter().zip(free) {
            ensure(r.map_err(|e| e.to_string())?, || format!("{name} fails for 2as(K) in degree {n}"))?;
        }
        for (name, r) in ["F∘G = J", "G∘F = Id", "G is a coalgebra map"].iter().zip(words) {
            ensure(r.map_err(|e| e.to_string())?, || format!("{name} fails for words in degree {n}"))?;
        }
    }
    Ok(())
}

fn binfty_relations() -> Check {
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                if i + j + k <= 5 {
                    let ok = check_rijk_sampled(i, j, k, 100 + (i * 9 + j * 3 + k) as u64, 3).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("R_{i}{j}{k} fails"))?;
                }
            }
        }
    }
    Ok(())
}

fn free_binfty() -> Check {
    for p in 1..=4 {
        for q in 1..=5 - p {
            let ls = variable_labels(p + q);
            let left: Vec<_> = ls[..p].iter().cloned().map(DecoratedTree::leaf).collect();
            let right: Vec<_> = ls[p..].iter().cloned().map(DecoratedTree::leaf).collect();
            let want = gamma_decorated(&ls[..p], &ls[p..]).map_err(|e| e.to_string())?;
            let got = free_compose_mpq(&left, &right).map_err(|e| e.to_string())?;
            ensure(got == LinComb::from_basis(want), || format!("leaves under M_{p}{q} give {got}"))?;
        }
    }
    let trees = ["|:a", "(||):b,c", "|:d", "(||):e,f", "(|||):g,h,i"];
    for p in 1..=3 {
        for q in 1..=4 - p {
            for shift in 0..2 {
                let args: Vec<DecoratedTree> = trees[shift..shift + p + q].iter().map(|s| dtree(s)).collect();
                if args.iter().map(DecoratedTree::degree).sum::<usize>() > 6 {
                    continue;
                }
                let xs: Vec<FreeElement> = args.iter().map(primitive_of).collect();
                let lhs = mpq_in_2as(&FreeTwoAs, &xs[..p], &xs[p..]).map_err(|e| e.to_string())?;
                let product = star(
                    &xs[..p].iter().fold(unit(), |acc, x| dot(&acc, x)),
                    &xs[p..].iter().fold(unit(), |acc, x| dot(&acc, x)),
                );
                ensure(lhs == e_free(&product), || format!("Lemma identity fails for M_{p}{q}"))?;
            }
        }
    }
    for n in 1..=6 {
        let dim = primitive_basis(n).len();
        ensure(dim == catalan(n - 1), || format!("dim Prim in degree {n} is {dim}"))?;
    }
    Ok(())
}

fn homology() -> Check {
    for d in 1..=5 {
        let mut per_product = Vec::new();
        for op in [Tag::Star, Tag::Dot] {
            let slice = build_bprime(op, d, 6).map_err(|e| e.to_string())?;
            ensure(slice.squares_to_zero(), || format!("b′∘b′ ≠ 0 for {op:?} in degree {d}"))?;
            let ranks = slice.homology_ranks();
            ensure(ranks[0] == catalan(d - 1), || format!("H_1 for {op:?} in degree {d} is {}", ranks[0]))?;
            ensure(ranks[1..].iter().all(|&h| h == 0), || format!("higher homology for {op:?} in degree {d}: {ranks:?}"))?;
            per_product.push(ranks);
        }
        let amalgamated = amalgamated_ranks(d, 6).map_err(|e| e.to_string())?;
        for n in 3..=d {
            let sum = per_product[0][n - 1] + per_product[1][n - 1];
            ensure(amalgamated[n - 1] == sum, || format!("amalgamation fails at n = {n}, degree {d}"))?;
        }
    }
    Ok(())
}

fn quasi_shuffle_check() -> Check {
    let (a, b, c) = (Letter::new("a", 1), Letter::new("b", 2), Letter::new("c", 3));
    let alphabet = GradedBasis::new(vec![a.clone(), b.clone(), c.clone()]).map_err(|e| e.to_string())?;
    let mut table = BTreeMap::new();
    table.insert((a.clone(), a.clone()), LinComb::from_basis(b.clone()));
    table.insert((a.clone(), b.clone()), LinComb::from_basis(c.clone()));
    table.insert((b.clone(), a.clone()), LinComb::from_basis(c.clone()));
    let product = LetterProduct::new(alphabet, table).map_err(|e| e.to_string())?;
    let letters = [a, b, c];
    let mut words: Vec<Word> = vec![Word::empty()];
    let mut layer = words.clone();
    for _ in 0..4 {
        layer = layer
            .iter()
            .flat_map(|w| letters.iter().map(move |l| Word(w.0.iter().cloned().chain([l.clone()]).collect())))
            .collect();
        words.extend(layer.iter().cloned());
    }
    let trivial = TrivialBInfty::<Letter>::new();
    for x in &words {
        for y in &words {
            let eq1 = quasi_shuffle(&product, x, y);
            ensure(eq1 == quasi_shuffle_recursive(&product, &x.0, &y.0), || format!("quasi-shuffle recursion on ({x}, {y})"))?;
            let sh = star_from_binfty(&trivial, x, y).map_err(|e| e.to_string())?;
            ensure(sh == shuffle(x, y), || format!("trivial structure on ({x}, {y})"))?;
        }
    }
    Ok(())
}

fn theta_morphism() -> Check {
    let bases: Vec<Vec<Basis>> = (0..=5).map(basis_of_degree).collect();
    let image = |x: &FreeElement| theta_image(x).map_err(|e| e.to_string());
    let tensor_pair = |x: &TensorElement, y: &TensorElement| -> LinComb<(Word, Word)> {
        x.bilinear(y, |a, b| LinComb::from_basis((a.clone(), b.clone())))
    };
    for da in 0..=5 {
        for a in &bases[da] {
            let x = LinComb::from_basis(a.clone());
            let tx = image(&x)?;
            let mut mapped = LinComb::zero();
            for ((l, r), c) in delta(&x).iter() {
                let t = tensor_pair(&image(&LinComb::from_basis(l.clone()))?, &image(&LinComb::from_basis(r.clone()))?);
                mapped.add_scaled(&t, c);
            }
            ensure(mapped == deconcatenation(&tx), || format!("Θ is not a coalgebra map on {a}"))?;
            for db in 0..=5 - da {
                for b in &bases[db] {
                    let y = LinComb::from_basis(b.clone());
                    let ty = image(&y)?;
                    ensure(image(&star(&x, &y))? == shuffle_elements(&tx, &ty), || format!("Θ({a} * {b})"))?;
                    ensure(image(&dot(&x, &y))? == concat_elements(&tx, &ty), || format!("Θ({a} · {b})"))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("Schröder counts", schroeder_counts),
        ("free algebra dimensions and series", free_dimensions),
        ("algebra axioms", algebra_axioms),
        ("bialgebra axioms", bialgebra_axioms),
        ("worked values", worked_values),
        ("idempotent suite", idempotent_suite),
        ("structure theorem", structure_theorem),
        ("B∞ relations", binfty_relations),
        ("free B∞ correspondence", free_binfty),
        ("homology", homology),
        ("quasi-shuffle", quasi_shuffle_check),
        ("θ morphism", theta_morphism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {:>2} {name} ({:.2?})", i + 1, start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
