mod common;

use cdga::catalog::{self, abelian};
use cdga::linalg::{kernel_basis, rref, Subspace};
use cdga::{scalar, Cohomology};
use common::{class, el, g6, x, OMEGA};

fn class_span(h: &Cohomology, k: u32, srcs: &[&str]) -> Subspace {
    let dim = h.betti_number(k).unwrap();
    Subspace::from_vectors(dim, srcs.iter().map(|s| class(h, s).coordinate_vector()))
}

#[test]
fn betti_numbers_of_g6() {
    let h = Cohomology::new(&g6(), 6);
    assert_eq!(h.betti(), vec![1, 1, 2, 4, 2, 1, 1]);
}

#[test]
fn printed_representatives_span_low_degrees() {
    let h = Cohomology::new(&g6(), 6);
    let spans = [
        (1, vec!["x6"]),
        (2, vec!["x1*x6 + x2*x5", "x1*x6 - x3*x4"]),
        (3, vec!["x1*x2*x3", "x1*x2*x5 + x1*x3*x4", "x2*x5*x6", "x4*x5*x6"]),
        (4, vec!["x1*x2*x5*x6", "x2*x3*x4*x5"]),
        (5, vec!["x1*x2*x3*x4*x5"]),
    ];
    for (k, srcs) in spans {
        let s = class_span(&h, k, &srcs);
        assert_eq!(s.dim(), h.betti_number(k).unwrap(), "degree {k}");
    }
}

#[test]
fn degree_three_relation_follows_from_d_x45() {
    let h = Cohomology::new(&g6(), 6);
    let a = class(&h, "x2*x5*x6");
    let b = class(&h, "x3*x4*x6");
    assert!(!a.is_zero());
    assert!(a.same_class(&b));
    assert!(!a.same_class(&class(&h, "-x3*x4*x6")));
}

#[test]
fn degree_four_relation() {
    let h = Cohomology::new(&g6(), 6);
    let lhs = class(&h, "x1*x3*x4*x6");
    assert!(lhs.same_class(&class(&h, "x1*x2*x5*x6 + x2*x3*x4*x5")));
    assert!(!lhs.same_class(&class(&h, "x1*x2*x5*x6")));
}

#[test]
fn differential_ranks() {
    let h = Cohomology::new(&g6(), 6);
    assert_eq!(rref(h.differential_matrix(2).unwrap()).rank, 8);
    assert_eq!(kernel_basis(h.differential_matrix(3).unwrap()).dim(), 12);
}

#[test]
fn omega_cubed_is_a_volume_form() {
    let g = g6();
    let w = el(&g, OMEGA);
    assert!(g.is_closed(&w));
    assert_eq!(w.pow(3), x(&g, "123456").scale(&scalar(-12)));
    assert_eq!(w.pow(4), el(&g, "0"));
}

#[test]
fn cup_products_on_g6() {
    let h = Cohomology::new(&g6(), 6);
    let x6 = class(&h, "x6");
    let w = class(&h, OMEGA);
    assert!(h.cup(&x6, &x6).unwrap().is_zero());
    assert!(h.cup(&x6, &w).unwrap().is_zero());
    assert!(h.cup(&w, &x6).unwrap().is_zero());
    let w2 = h.cup(&w, &w).unwrap();
    assert!(!w2.is_zero());
    let w3 = h.cup(&w2, &w).unwrap();
    assert!(w3.same_class(&class(&h, "-12*x1*x2*x3*x4*x5*x6")));
}

#[test]
fn cup_with_omega_ranks() {
    let h = Cohomology::new(&g6(), 6);
    let w = class(&h, OMEGA);
    let ranks: Vec<usize> = (0..=4).map(|p| h.cup_map_rank(&w, p).unwrap()).collect();
    assert_eq!(ranks, vec![1, 0, 2, 0, 1]);
}

#[test]
fn exactness_witness() {
    let g = g6();
    let h = Cohomology::new(&g, 6);
    let target = el(&g, "x2*x5*x6 - x3*x4*x6");
    let primitive = h.is_exact(&target).unwrap().expect("exact");
    assert_eq!(g.d(&primitive), target);
    assert_eq!(h.is_exact(&el(&g, "x4*x5*x6")).unwrap(), None);
    assert!(h.is_exact(&el(&g, "x1")).is_err());
}

#[test]
fn non_closed_arguments_are_rejected() {
    let g = g6();
    let h = Cohomology::new(&g, 6);
    assert!(h.class_of(&el(&g, "x1")).is_err());
    assert!(h.class_of(&el(&g, "x1 + x1*x6")).is_err());
}

#[test]
fn s2_model_cohomology() {
    let s2 = catalog::catalog("s2_model").unwrap();
    let h = Cohomology::new(&s2, 8);
    assert_eq!(h.betti(), vec![1, 0, 1, 0, 0, 0, 0, 0, 0]);
    let u = class(&h, "u");
    assert!(h.cup(&u, &u).unwrap().is_zero());
}

#[test]
fn heisenberg_and_abelian() {
    let h = Cohomology::new(&catalog::catalog("heisenberg3").unwrap(), 3);
    assert_eq!(h.betti(), vec![1, 2, 2, 1]);
    let h = Cohomology::new(&abelian(4), 4);
    assert_eq!(h.betti(), vec![1, 4, 6, 4, 1]);
}

#[test]
fn euler_characteristics_agree() {
    for name in ["g6_15_m1", "heisenberg3", "s2_model", "circle", "point", "abelian5"] {
        let c = catalog::catalog(name).unwrap();
        let cap = c.algebra().top_degree().unwrap_or(9);
        let h = Cohomology::new(&c, cap);
        let boundary = h.differential_matrix(cap).unwrap().rank() as i64;
        let sign = if cap.is_multiple_of(2) { 1 } else { -1 };
        assert_eq!(
            h.cochain_euler_characteristic(),
            h.euler_characteristic() + sign * boundary,
            "{name}"
        );
    }
}

#[test]
fn cap_limits_queries() {
    let h = Cohomology::new(&g6(), 3);
    assert_eq!(h.betti(), vec![1, 1, 2, 4]);
    assert!(h.space(4).is_err());
}
