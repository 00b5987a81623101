//! Cross-checks on the classification reports: every rejection witness is
//! machine-checkable, the index identity holds per candidate, and isometric
//! parameters share their numerical invariants.

use fourfold_core::classify::{classify_all, merge_isometric, Family, GlueVerdict};
use fourfold_core::lattice::LatticeVector;
use num_bigint::BigInt;

#[test]
fn every_rejection_carries_a_checkable_witness() {
    for family in [Family::Scroll, Family::Veronese] {
        for report in classify_all(family).unwrap() {
            if let Some(root) = &report.short_root {
                let gram = family.gram(report.param);
                assert_eq!(gram.vector_norm(root).unwrap(), 2);
            }
            for cand in &report.glue_log {
                assert_eq!(
                    cand.gram.determinant() * BigInt::from(cand.n * cand.n),
                    BigInt::from(report.determinant),
                );
                match &cand.verdict {
                    GlueVerdict::RejectedShortRoot { witness } => {
                        assert_eq!(cand.gram.vector_norm(witness).unwrap(), 2);
                    }
                    GlueVerdict::RejectedNotEven { complement } => {
                        assert!(!complement.is_even());
                        // the recorded complement is the complement of h²
                        let e1 = LatticeVector(vec![1, 0, 0]);
                        let (_, recomputed) = cand.gram.orthogonal_complement(&e1).unwrap();
                        assert_eq!(&recomputed, complement);
                    }
                    GlueVerdict::Viable => panic!(
                        "unexpected viable overlattice for {family:?} at {}",
                        report.param
                    ),
                }
            }
        }
    }
}

#[test]
fn isometric_parameters_share_invariants() {
    for family in [Family::Scroll, Family::Veronese] {
        let (classes, witnesses) = merge_isometric(family).unwrap();
        // the witness list generates the partition and each one re-verifies
        for (p, q, w) in &witnesses {
            assert!(w.certifies(&family.gram(*p), &family.gram(*q)));
        }
        for class in &classes {
            let reference = class[0];
            for &p in &class[1..] {
                assert_eq!(
                    family.determinant_formula(p),
                    family.determinant_formula(reference)
                );
                for norm in 2..=8i64 {
                    assert_eq!(
                        family.gram(p).short_vectors(norm).unwrap().len(),
                        family.gram(reference).short_vectors(norm).unwrap().len(),
                        "{family:?}: {p} vs {reference} at norm {norm}"
                    );
                }
            }
        }
        // partition sanity: disjoint cover of the admissible window
        let mut all: Vec<i64> = classes.iter().flatten().copied().collect();
        all.sort();
        assert_eq!(all, family.admissible_params());
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for family in [Family::Scroll, Family::Veronese] {
        let a = format!("{:?}", classify_all(family).unwrap());
        let b = format!("{:?}", classify_all(family).unwrap());
        assert_eq!(a, b);
    }
}
