//! Property suites for the Gröbner engine, run on the ideals the
//! verification harness actually uses.

use fourfold_core::geom::SurfaceRecipe;
use fourfold_core::groebner::{
    groebner, groebner_with_selection, ideal_member, normal_form, spolys_reduce_to_zero,
    Selection,
};
use fourfold_core::ideal::{dimension_degree, graded_piece};
use fourfold_core::poly::{Ideal, MonomialOrder, Poly, RingSpec};
use fourfold_core::rng::SplitMix64;
use proptest::prelude::*;

fn surface_ideals() -> Vec<(String, Ideal)> {
    [
        SurfaceRecipe::Veronese,
        SurfaceRecipe::Scroll { a: 1, b: 2 },
        SurfaceRecipe::CubicScrollBlowup,
        SurfaceRecipe::SegreScroll,
    ]
    .into_iter()
    .map(|r| (r.tag(), r.build(31).unwrap()))
    .collect()
}

#[test]
fn s_polynomials_of_every_computed_basis_reduce_to_zero() {
    for (tag, ideal) in surface_ideals() {
        let gb = groebner(&ideal, MonomialOrder::Grevlex).unwrap();
        assert!(spolys_reduce_to_zero(&gb), "{tag}");
    }
    // a zero-dimensional one: a Jacobian-style system
    let ring = RingSpec::grevlex(31, 6);
    let mut gens = Vec::new();
    let mut rng = SplitMix64::new(5);
    let veronese = SurfaceRecipe::Veronese.build(31).unwrap();
    let cubics = graded_piece(&veronese, 3);
    let f = cubics.random_element(&mut rng);
    for i in 0..6 {
        gens.push(f.partial_derivative(i));
    }
    let jac = Ideal::new(ring, gens).unwrap();
    let gb = groebner(&jac, MonomialOrder::Grevlex).unwrap();
    assert!(spolys_reduce_to_zero(&gb));
}

#[test]
fn veronese_basis_is_six_quadrics_generating_the_same_ideal() {
    let ideal = SurfaceRecipe::Veronese.build(31).unwrap();
    let gb = groebner(&ideal, MonomialOrder::Grevlex).unwrap();
    assert_eq!(gb.polys.len(), 6);
    assert!(gb.polys.iter().all(|p| p.total_degree() == Some(2)));
    for g in &ideal.gens {
        assert!(ideal_member(g, &gb));
    }

    // x0 x3 - x1^2 is one of the defining quadrics
    let ring = ideal.ring;
    let x = |i| Poly::variable(ring, i);
    let quadric = x(0).mul(&x(3)).unwrap().sub(&x(1).mul(&x(1)).unwrap()).unwrap();
    assert!(ideal_member(&quadric, &gb));

    // a random cubic is (overwhelmingly) not a member; verified by an
    // explicitly nonzero remainder
    let mut rng = SplitMix64::new(99);
    let mut terms = Vec::new();
    for mono in fourfold_core::ideal::monomials_of_degree(6, 3) {
        terms.push((mono, rng.below(31) as u32));
    }
    let random_cubic = Poly::from_terms(ring, terms);
    let remainder = normal_form(&random_cubic, &gb.polys);
    assert!(!remainder.is_zero());
    assert!(!ideal_member(&random_cubic, &gb));
}

#[test]
fn dimension_and_degree_survive_randomized_pair_selection() {
    // 34 shuffled-selection trials per surface ideal (102 total)
    for (tag, ideal) in surface_ideals().into_iter().take(3) {
        let reference = dimension_degree(&ideal).unwrap();
        for seed in 0..34u64 {
            let gb = groebner_with_selection(
                &ideal,
                MonomialOrder::Grevlex,
                Selection::Shuffled { seed },
            )
            .unwrap();
            let lts = gb.leading_monomials();
            let data = fourfold_core::hilbert::hilbert_data(&lts, gb.ring.nvars);
            assert_eq!(data.dimension, reference.dimension, "{tag} seed {seed}");
            assert_eq!(data.degree, reference.degree, "{tag} seed {seed}");
        }
    }
}

fn small_poly(ring: RingSpec) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((proptest::collection::vec(0u16..3, 3), 0u32..31), 0..5).prop_map(
        move |terms| {
            Poly::from_terms(
                ring,
                terms
                    .into_iter()
                    .map(|(exps, c)| (fourfold_core::poly::Monomial { exps }, c))
                    .collect(),
            )
        },
    )
}

proptest! {
    #[test]
    fn normal_form_ignores_ideal_multiples(
        f in small_poly(RingSpec::grevlex(31, 3)),
        g in small_poly(RingSpec::grevlex(31, 3)),
        r in small_poly(RingSpec::grevlex(31, 3)),
    ) {
        let ring = RingSpec::grevlex(31, 3);
        let x = Poly::variable(ring, 0);
        let y = Poly::variable(ring, 1);
        let z = Poly::variable(ring, 2);
        let gens = vec![
            x.mul(&x).unwrap().sub(&y.mul(&z).unwrap()).unwrap(),
            y.mul(&y).unwrap().sub(&x.mul(&z).unwrap()).unwrap(),
        ];
        let ideal = Ideal::new(ring, gens.clone()).unwrap();
        let gb = groebner(&ideal, MonomialOrder::Grevlex).unwrap();
        let noise = gens[0]
            .mul(&f).unwrap()
            .add(&gens[1].mul(&g).unwrap()).unwrap();
        let shifted = r.add(&noise).unwrap();
        prop_assert_eq!(
            normal_form(&shifted, &gb.polys),
            normal_form(&r, &gb.polys)
        );
        prop_assert!(ideal_member(&noise, &gb));
    }
}
