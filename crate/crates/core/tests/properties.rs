use std::sync::Arc;

use cdga::catalog::{self, abelian};
use cdga::linalg::{kernel_basis, image_basis, rref, solve_in_image, sparse_from_dense, SparseMatrix, Subspace};
use cdga::{parse_algebra, parse_element, ratio, Cdga, Cohomology, Element, FreeAlgebra, Generator, Scalar};
use num_traits::Zero;
use proptest::prelude::*;

fn mixed_algebra() -> Arc<FreeAlgebra> {
    FreeAlgebra::new(vec![
        Generator::new("x1", 1),
        Generator::new("u", 2),
        Generator::new("x2", 1),
        Generator::new("v", 3),
        Generator::new("x3", 1),
    ])
    .unwrap()
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

/// Random element of degree `k` built from the monomial basis.
fn element_of_degree(alg: Arc<FreeAlgebra>, k: u32) -> impl Strategy<Value = Element> {
    let basis = alg.basis_of_degree(k);
    let n = basis.len();
    proptest::collection::vec(small_scalar(), n).prop_map(move |cs| {
        let mut e = Element::zero(&alg);
        for (m, c) in basis.iter().zip(cs) {
            e = &e + &Element::from_monomial(&alg, m.clone(), c);
        }
        e
    })
}

fn pair_of_degrees(alg: Arc<FreeAlgebra>, below: u32) -> impl Strategy<Value = (u32, u32, Element, Element)> {
    (0..below, 0..below).prop_flat_map(move |(k, l)| {
        (Just(k), Just(l), element_of_degree(alg.clone(), k), element_of_degree(alg.clone(), l))
    })
}

fn sign_of(k: u32, l: u32) -> Scalar {
    if k % 2 == 1 && l % 2 == 1 {
        ratio(-1, 1)
    } else {
        ratio(1, 1)
    }
}

/// Bubble sort with a Koszul sign per swap of two odd generators.
fn oracle_normalize(alg: &FreeAlgebra, word: &[usize]) -> Option<(i8, Vec<u32>)> {
    let odd = |i: usize| alg.generators()[i].degree % 2 == 1;
    let mut w = word.to_vec();
    let mut sign = 1i8;
    for pass in 0..w.len() {
        for j in 0..w.len().saturating_sub(1 + pass) {
            if w[j] > w[j + 1] {
                if odd(w[j]) && odd(w[j + 1]) {
                    sign = -sign;
                }
                w.swap(j, j + 1);
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1] && odd(p[0])) {
        return None;
    }
    let mut exps = vec![0u32; alg.len()];
    for i in w {
        exps[i] += 1;
    }
    Some((sign, exps))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn catalog_algebras() -> Vec<Cdga> {
    ["g6_15_m1", "heisenberg3", "s2_model", "circle", "abelian4"]
        .into_iter()
        .map(|n| catalog::catalog(n).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graded_commutativity((k, l, a, b) in pair_of_degrees(mixed_algebra(), 4)) {
        prop_assert_eq!(&a * &b, (&b * &a).scale(&sign_of(k, l)));
    }

    #[test]
    fn associativity(
        a in element_of_degree(mixed_algebra(), 2),
        b in element_of_degree(mixed_algebra(), 1),
        c in element_of_degree(mixed_algebra(), 3),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn normalize_matches_bubble_sort(word in proptest::collection::vec(0usize..5, 0..7)) {
        let alg = mixed_algebra();
        let got = alg.normalize_indices(&word).map(|(s, m)| (s, m.exponents().to_vec()));
        prop_assert_eq!(got, oracle_normalize(&alg, &word));
    }

    #[test]
    fn exterior_dimensions_are_binomial(n in 0usize..9) {
        let alg = FreeAlgebra::exterior(n);
        for k in 0..=n as u32 + 1 {
            prop_assert_eq!(alg.basis_of_degree(k).len() as u64, binomial(n as u64, k as u64));
        }
    }

    #[test]
    fn square_zero_and_leibniz((which, (k, _, a, b)) in (0usize..5).prop_flat_map(|w| {
        (Just(w), pair_of_degrees(catalog_algebras()[w].algebra().clone(), 4))
    })) {
        let c = &catalog_algebras()[which];
        prop_assert!(c.d(&c.d(&a)).is_zero());
        let sign = if k % 2 == 1 { ratio(-1, 1) } else { ratio(1, 1) };
        let rhs = &(&c.d(&a) * &b) + &(&a * &c.d(&b)).scale(&sign);
        prop_assert_eq!(c.d(&(&a * &b)), rhs);
    }

    #[test]
    fn rank_nullity(rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 1..6)) {
        let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| ratio(x, 1)).collect()).collect();
        let m = SparseMatrix::from_dense(&dense);
        let r = rref(&m).rank;
        prop_assert_eq!(r, m.rank());
        prop_assert_eq!(kernel_basis(&m).dim() + r, m.cols());
        prop_assert_eq!(image_basis(&m).dim(), r);
        for v in kernel_basis(&m).basis() {
            prop_assert!(m.mul_vec(v).is_empty());
        }
    }

    #[test]
    fn subspaces_are_canonical(
        vs in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 0..4),
        scale in 1i64..5,
    ) {
        let vecs: Vec<_> = vs.iter().map(|v| sparse_from_dense(&v.iter().map(|&x| ratio(x, 1)).collect::<Vec<_>>())).collect();
        let a = Subspace::from_vectors(4, vecs.clone());
        // Same span, different generating set.
        let mut other: Vec<_> = vecs.iter().rev().map(|v| v.iter().map(|(&i, c)| (i, c * ratio(scale, 1))).collect()).collect();
        if vecs.len() >= 2 {
            let sum = vecs[0].iter().chain(vecs[1].iter()).fold(std::collections::BTreeMap::new(), |mut acc, (&i, c)| {
                let e = acc.entry(i).or_insert_with(Scalar::zero);
                *e += c;
                acc
            });
            other.push(sum.into_iter().filter(|(_, c): &(usize, Scalar)| !c.is_zero()).collect());
        }
        let b = Subspace::from_vectors(4, other);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn solve_in_image_solves(
        rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 4), 1..5),
        x in proptest::collection::vec(-3i64..=3, 4),
    ) {
        let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&v| ratio(v, 1)).collect()).collect();
        let m = SparseMatrix::from_dense(&dense);
        let target = m.mul_vec(&sparse_from_dense(&x.iter().map(|&v| ratio(v, 1)).collect::<Vec<_>>()));
        let sol = solve_in_image(&m, &target).expect("target is in the image");
        prop_assert_eq!(m.mul_vec(&sol), target);
    }

    #[test]
    fn element_display_round_trips(e in element_of_degree(mixed_algebra(), 3)) {
        let c = Cdga::formal(&mixed_algebra());
        prop_assert_eq!(parse_element(&e.to_string(), &c).unwrap(), e);
    }

    #[test]
    fn parsers_never_panic(src in "\\PC{0,80}") {
        let _ = parse_algebra(&src);
        let _ = parse_element(&src, &catalog::catalog("g6_15_m1").unwrap());
    }

    #[test]
    fn near_miss_sources_never_panic(cut in 0usize..200, junk in "[ -~]{0,6}") {
        let src = catalog::source("g6_15_m1").unwrap();
        let cut = cut.min(src.len());
        let mutated = format!("{}{}{}", &src[..cut], junk, &src[cut..]);
        if let Ok(doc) = parse_algebra(&mutated) {
            let _ = doc.to_cdga();
        }
    }
}

#[test]
fn catalog_sources_round_trip() {
    for name in ["g6_15_m1", "heisenberg3", "s2_model", "circle", "point", "abelian3"] {
        let c = catalog::catalog(name).unwrap();
        let again = parse_algebra(&c.to_source(name)).unwrap().to_cdga().unwrap();
        assert_eq!(again, c, "{name}");
    }
}

#[test]
fn cohomology_of_abelian_is_exterior() {
    for n in 0..=6 {
        let h = Cohomology::new(&abelian(n), n as u32);
        let expected: Vec<usize> = (0..=n as u64).map(|k| binomial(n as u64, k) as usize).collect();
        assert_eq!(h.betti(), expected);
    }
}
