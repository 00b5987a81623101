//! Acceptance suite: one test per shipped criterion, each printing a
//! pass/fail line. Every tolerance and threshold is pinned here.

use std::path::{Path, PathBuf};
use std::time::Instant;

use fourfold_cli::commands;
use fourfold_core::classify::{
    classify_all, glue_candidates, merged_nonempty_components, CertificateKind, Family,
    GlueVerdict,
};
use fourfold_core::excess::{
    excess_surface_plane, mult_along_curve, plane_curve_invariants, scroll_line_case,
    secant_count, secant_status, AmbientPreset, SecantStatus,
};
use fourfold_core::geom::{construct_component_example, verify_example, GeomError, SurfaceRecipe};
use fourfold_core::groebner::{groebner, ideals_equal, spolys_reduce_to_zero};
use fourfold_core::ideal::minors_ideal;
use fourfold_core::lattice::{GramMatrix, LatticeVector};
use fourfold_core::poly::{Ideal, MonomialOrder, Poly, RingSpec};
use fourfold_core::rng::SplitMix64;
use num_bigint::BigInt;

fn repo_path(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

fn assert_up_to_sign(actual: &LatticeVector, expected: &[i64]) {
    let expected_vec = LatticeVector(expected.to_vec());
    assert!(
        actual == &expected_vec || actual == &expected_vec.negated(),
        "expected ±{expected:?}, got {actual:?}"
    );
}

#[test]
fn criterion_1_scroll_classification() {
    let started = Instant::now();
    let reports = classify_all(Family::Scroll).unwrap();
    let merged = merged_nonempty_components(Family::Scroll).unwrap();
    let elapsed = started.elapsed();

    let params: Vec<i64> = reports.iter().map(|r| r.param).collect();
    assert_eq!(params, vec![-2, -1, 0, 1, 2, 3, 4]);

    let empty: Vec<i64> = reports.iter().filter(|r| !r.nonempty).map(|r| r.param).collect();
    assert_eq!(empty, vec![-2, 4]);
    for (param, witness) in [(-2i64, [-2i64, 1, 1]), (4, [0, -1, 1])] {
        let report = reports.iter().find(|r| r.param == param).unwrap();
        let root = report.short_root.as_ref().expect("emptiness witness");
        assert_up_to_sign(root, &witness);
        assert_eq!(Family::Scroll.gram(param).vector_norm(root).unwrap(), 2);
    }

    let discriminants: Vec<i64> = (-1..=3)
        .map(|p| reports.iter().find(|r| r.param == p).unwrap().determinant)
        .collect();
    assert_eq!(discriminants, vec![20, 29, 32, 29, 20]);

    let nonempty: Vec<&_> = reports.iter().filter(|r| r.nonempty).collect();
    assert_eq!(nonempty.len(), 5);
    assert!(nonempty.iter().all(|r| r.irreducible == Some(true)));

    assert_eq!(merged, vec![vec![-1, 3], vec![0, 2], vec![1]]);

    assert!(elapsed.as_secs_f64() < 1.0, "classification took {elapsed:?}");

    // the CLI surface agrees
    let out = commands::run_classify("m12", false).unwrap();
    assert!(out.stdout.contains("merged nonempty components (3): {-1,3} {0,2} {1}"));
    println!("criterion 1 (m12 classification, < 1 s): PASS ({elapsed:?})");
}

#[test]
fn criterion_2_veronese_classification() {
    let started = Instant::now();
    let reports = classify_all(Family::Veronese).unwrap();
    let elapsed = started.elapsed();

    let params: Vec<i64> = reports.iter().map(|r| r.param).collect();
    assert_eq!(params, vec![-2, -1, 0, 1, 2, 3, 4, 5]);

    let empty: Vec<i64> = reports.iter().filter(|r| !r.nonempty).map(|r| r.param).collect();
    assert_eq!(empty, vec![5]);
    let n5 = reports.iter().find(|r| r.param == 5).unwrap();
    let root = n5.short_root.as_ref().unwrap();
    assert_up_to_sign(root, &[1, 1, -1]);
    assert_eq!(Family::Veronese.gram(5).vector_norm(root).unwrap(), 2);

    let discriminants: Vec<i64> = reports
        .iter()
        .filter(|r| r.nonempty)
        .map(|r| r.determinant)
        .collect();
    assert_eq!(discriminants, vec![20, 37, 48, 53, 52, 45, 32]);

    assert!(reports
        .iter()
        .filter(|r| r.nonempty)
        .all(|r| r.irreducible == Some(true)));
    assert_eq!(reports.iter().filter(|r| r.nonempty).count(), 7);

    let with_certs: Vec<i64> = reports
        .iter()
        .filter(|r| !r.certificates.is_empty())
        .map(|r| r.param)
        .collect();
    assert_eq!(with_certs, vec![-1, 1, 3]);
    let cert_value = |param: i64, kind: CertificateKind| -> i64 {
        reports
            .iter()
            .find(|r| r.param == param)
            .unwrap()
            .certificates
            .iter()
            .find(|c| c.kind == kind)
            .unwrap_or_else(|| panic!("missing certificate at {param}"))
            .value
    };
    assert_eq!(cert_value(-1, CertificateKind::OddMultisection), 5);
    assert_eq!(cert_value(1, CertificateKind::OddMultisection), 3);
    assert_eq!(cert_value(3, CertificateKind::ReducibleOadp), 1);

    assert!(elapsed.as_secs_f64() < 1.0, "classification took {elapsed:?}");

    let out = commands::run_classify("m20", true).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["reports"].as_array().unwrap().len(), 8);
    let empty_in_doc = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["nonempty"] == serde_json::json!(false))
        .count();
    assert_eq!(empty_in_doc, 1);
    println!("criterion 2 (m20 classification, < 1 s): PASS ({elapsed:?})");
}

struct ExpectedCase {
    n: i64,
    xp: i64,
    yp: i64,
    abc: (i64, i64, i64),
    short_root: Option<[i64; 3]>,
    not_even_complement: Option<[[i64; 2]; 2]>,
}

fn case(
    n: i64,
    xp: i64,
    yp: i64,
    abc: (i64, i64, i64),
    short_root: Option<[i64; 3]>,
    not_even_complement: Option<[[i64; 2]; 2]>,
) -> ExpectedCase {
    ExpectedCase {
        n,
        xp,
        yp,
        abc,
        short_root,
        not_even_complement,
    }
}

#[test]
fn criterion_3_overlattice_case_logs() {
    let expectations: Vec<(Family, i64, Vec<ExpectedCase>)> = vec![
        (
            Family::Scroll,
            -1,
            vec![
                case(2, 0, 1, (2, 1, 2), None, None),
                case(2, 1, 0, (3, 0, 4), None, None),
            ],
        ),
        (
            Family::Scroll,
            1,
            vec![
                case(2, 0, 1, (2, 2, 3), Some([-1, 0, 1]), None),
                case(2, 1, 0, (3, 1, 4), None, Some([[24, 24], [24, 25]])),
            ],
        ),
        (
            Family::Scroll,
            3,
            vec![
                case(2, 0, 1, (2, 3, 4), Some([-1, -1, 1]), None),
                case(2, 1, 0, (3, 2, 4), Some([-1, -1, 1]), None),
            ],
        ),
        (
            Family::Veronese,
            -2,
            vec![
                case(2, 0, 0, (2, -1, 3), None, None),
                case(2, 1, 1, (4, 1, 6), None, None),
            ],
        ),
        (
            Family::Veronese,
            0,
            vec![
                case(2, 0, 0, (2, 0, 3), None, None),
                case(2, 1, 1, (4, 2, 7), None, None),
            ],
        ),
        (
            Family::Veronese,
            2,
            vec![
                case(2, 0, 0, (2, 1, 3), None, None),
                case(2, 1, 1, (4, 3, 8), None, None),
            ],
        ),
        (
            Family::Veronese,
            3,
            vec![case(3, 0, 2, (2, 3, 4), Some([-1, -1, 1]), None)],
        ),
        (
            Family::Veronese,
            4,
            vec![
                case(2, 0, 0, (2, 2, 3), Some([-1, 0, 1]), None),
                case(2, 1, 1, (4, 4, 9), None, Some([[24, 24], [24, 25]])),
            ],
        ),
    ];

    for (family, param, expected) in &expectations {
        let log = glue_candidates(*family, *param).unwrap();
        assert_eq!(
            log.len(),
            expected.len(),
            "{family:?} param {param}: case count"
        );
        // no integral case outside the listed denominators (e.g. n = 4 for
        // the scroll family at parameter 1)
        for (cand, exp) in log.iter().zip(expected) {
            assert_eq!((cand.n, cand.xp, cand.yp), (exp.n, exp.xp, exp.yp));
            assert_eq!((cand.a, cand.b, cand.c), exp.abc, "{family:?} {param}");
            // index identity: det(B) · n² = det(family)
            assert_eq!(
                cand.gram.determinant() * BigInt::from(cand.n * cand.n),
                BigInt::from(family.determinant_formula(*param)),
            );
            match &cand.verdict {
                GlueVerdict::RejectedShortRoot { witness } => {
                    assert_eq!(cand.gram.vector_norm(witness).unwrap(), 2);
                    if let Some(expected_root) = exp.short_root {
                        assert_up_to_sign(witness, &expected_root);
                    }
                    assert!(exp.not_even_complement.is_none(), "{family:?} {param}");
                }
                GlueVerdict::RejectedNotEven { complement } => {
                    let expected_rows = exp
                        .not_even_complement
                        .unwrap_or_else(|| panic!("{family:?} {param}: unexpected evenness rejection"));
                    assert_eq!(
                        complement.rows(),
                        expected_rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()
                    );
                    assert!(!complement.is_even());
                }
                GlueVerdict::Viable => panic!("{family:?} {param}: viable candidate"),
            }
        }
    }
    println!("criterion 3 (overlattice case logs): PASS");
}

#[test]
fn criterion_4_excess_intersection_suite() {
    // conic on a Veronese or scroll against its spanning plane
    assert_eq!(excess_surface_plane(-3, 2, 0).unwrap(), -1);

    // ruling line: excess 0, multiplicity 2, one secant at parameter 2
    let ruling = scroll_line_case(0).unwrap();
    assert_eq!((ruling.excess, ruling.mult), (0, 2));
    assert_eq!(ruling.status, SecantStatus::Oadp);
    assert_eq!(secant_count(3, 1, 2).unwrap(), 1);
    assert_eq!(secant_status(1), Some(SecantStatus::Oadp));

    // directrix: excess 1, multiplicity 3, secant defective
    let directrix = scroll_line_case(-1).unwrap();
    assert_eq!((directrix.excess, directrix.mult), (1, 3));
    assert_eq!(directrix.status, SecantStatus::Defective);
    assert_eq!(secant_count(3, 1, 3).unwrap(), 0);

    // Veronese ∪ plane along a conic: multiplicity 3, one secant
    assert_eq!(
        mult_along_curve(AmbientPreset::VeronesePlaneProjection, 2, 0, -3, -6),
        3
    );
    assert_eq!(secant_count(4, 1, 3).unwrap(), 1);

    // the two printed forms of the excess formula agree for d = 1..10
    for d in 1..=10i64 {
        let (g, _) = plane_curve_invariants(d).unwrap();
        assert_eq!(-d * (d - 3), 2 - 2 * g, "d = {d}");
    }
    println!("criterion 4 (excess-intersection suite): PASS");
}

#[test]
fn criterion_5_example_golden_suite() {
    let started = Instant::now();
    let out = commands::run_verify(&repo_path("data/appendix"), true).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(out.code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 14);
    for r in reports {
        assert_eq!(r["pass"], serde_json::json!(true), "{}", r["label"]);
        assert_eq!(r["smooth"], serde_json::json!(true), "{}", r["label"]);
        assert_eq!(r["contains_plane"], serde_json::json!(true), "{}", r["label"]);
        assert_eq!(r["contains_surface"], serde_json::json!(true), "{}", r["label"]);
        assert_eq!(r["profile_matches"], serde_json::json!(true), "{}", r["label"]);
    }
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "verification took {elapsed:?}"
    );
    println!(
        "criterion 5 (14/14 shipped examples, < 60 s): PASS ({elapsed:?})"
    );
}

#[test]
fn criterion_6_property_suites() {
    // 6a: S-polynomials of every computed basis reduce to zero
    for recipe in [
        SurfaceRecipe::Veronese,
        SurfaceRecipe::Scroll { a: 1, b: 2 },
        SurfaceRecipe::CubicScrollBlowup,
        SurfaceRecipe::SegreScroll,
    ] {
        let ideal = recipe.build(31).unwrap();
        let gb = groebner(&ideal, MonomialOrder::Grevlex).unwrap();
        assert!(spolys_reduce_to_zero(&gb), "{recipe:?}");
    }

    // 6b: kernel-equals-minors for the Veronese and the Segre section
    let ring = RingSpec::grevlex(31, 6);
    let x = |i| Poly::variable(ring, i);
    let catalecticant = vec![
        vec![x(0), x(1), x(2)],
        vec![x(1), x(3), x(4)],
        vec![x(2), x(4), x(5)],
    ];
    let veronese_minors = minors_ideal(ring, &catalecticant, 2).unwrap();
    assert!(ideals_equal(&veronese_minors, &SurfaceRecipe::Veronese.build(31).unwrap()).unwrap());
    let segre_rows = vec![vec![x(0), x(1), x(2)], vec![x(3), x(4), x(5)]];
    let segre_minors = minors_ideal(ring, &segre_rows, 2)
        .unwrap()
        .sum(&Ideal::new(ring, vec![x(0).sub(&x(4)).unwrap()]).unwrap())
        .unwrap();
    assert!(ideals_equal(&segre_minors, &SurfaceRecipe::SegreScroll.build(31).unwrap()).unwrap());

    // 6c: pruned enumeration equals the naive box search on 100 random
    // positive definite rank-3 matrices
    let mut rng = SplitMix64::new(0xF00D);
    for trial in 0..100 {
        let mut b = [[0i64; 3]; 3];
        for row in &mut b {
            for entry in row.iter_mut() {
                *entry = rng.below(7) as i64 - 3;
            }
        }
        let mut rows = vec![vec![0i64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = if i == j { 1 } else { 0 };
                for (_, bk) in b.iter().enumerate() {
                    acc += bk[i] * bk[j];
                }
                rows[i][j] = acc;
            }
        }
        let g = GramMatrix::new(&rows).unwrap();
        let target = 1 + (rng.below(8) as i64);
        let fast = g.short_vectors(target).unwrap();
        let slow = box_short_vectors(&g, target);
        assert_eq!(fast, slow, "trial {trial}: {rows:?} target {target}");
    }

    // 6d: isometry witnesses verify T^T G1 T = G2 exactly
    for family in [Family::Scroll, Family::Veronese] {
        let (_, witnesses) = fourfold_core::classify::merge_isometric(family).unwrap();
        for (p, q, w) in &witnesses {
            assert!(w.certifies(&family.gram(*p), &family.gram(*q)));
        }
    }
    let m = |eta: i64| Family::Scroll.gram(eta);
    assert!(m(-1).isometry_to(&m(3)).unwrap().is_some());

    // 6e: construct_component_example self-verifies for 20 seeds per
    // constructible nonempty (family, parameter) with retry budget 50;
    // the parameter-(-2) Veronese class has no smooth-surface recipe and
    // must report exactly that.
    let pairs: Vec<(Family, i64)> = (-1..=3)
        .map(|p| (Family::Scroll, p))
        .chain((-1..=4).map(|p| (Family::Veronese, p)))
        .collect();
    assert_eq!(pairs.len(), 11);
    for (family, param) in pairs {
        for seed in 0..20u64 {
            let record = construct_component_example(family, param, seed, 50, None)
                .unwrap_or_else(|e| panic!("{family:?} {param} seed {seed}: {e}"));
            let report = verify_example(&record).unwrap();
            assert!(report.pass(), "{family:?} {param} seed {seed}");
        }
    }
    assert!(matches!(
        construct_component_example(Family::Veronese, -2, 0, 50, None),
        Err(GeomError::UnsupportedParameter { .. })
    ));
    println!("criterion 6 (property suites incl. 20-seed constructions): PASS");
}

#[test]
fn criterion_7_untestable_claims_are_annotations() {
    // the moduli-theoretic claims are recorded on every report, not tested
    for family in [Family::Scroll, Family::Veronese] {
        for report in classify_all(family).unwrap() {
            assert!(report
                .caveats
                .iter()
                .any(|c| c.contains("assumed, not verified")));
        }
    }
    let out = commands::run_verify(&repo_path("data/appendix"), true).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    for r in doc["reports"].as_array().unwrap() {
        let caveats = r["caveats"].as_array().unwrap();
        assert!(caveats
            .iter()
            .any(|c| c.as_str().unwrap().contains("characteristic zero")));
    }
    println!("criterion 7 (out-of-scope claims carried as annotations): PASS");
}

/// Independent oracle: complete box search with the rational eigenvalue
/// bound `lambda_min >= det / trace^(n-1)`.
fn box_short_vectors(g: &GramMatrix, target: i64) -> Vec<LatticeVector> {
    use num_traits::Signed;
    let n = g.rank();
    let det = g.determinant();
    assert!(det.is_positive());
    let trace: i64 = (0..n).map(|i| g.entry(i, i)).sum();
    let mut numerator = BigInt::from(target);
    for _ in 0..(n - 1) {
        numerator *= BigInt::from(trace);
    }
    let mut bound_big = (&numerator / &det).sqrt();
    while &bound_big * &bound_big * &det < numerator {
        bound_big += 1;
    }
    let bound = i64::try_from(&bound_big).expect("test-scale matrices");
    let mut out = Vec::new();
    let mut coords = vec![-bound; n];
    loop {
        let v = LatticeVector(coords.clone());
        if !v.is_zero() && g.vector_norm(&v).unwrap() == target {
            let normalized = v.clone().sign_normalized();
            if normalized == v {
                out.push(v);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| b.cmp(a));
                return out;
            }
            coords[i] += 1;
            if coords[i] > bound {
                coords[i] = -bound;
                i += 1;
            } else {
                break;
            }
        }
    }
}
