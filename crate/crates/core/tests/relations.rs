//! Defining-relation suite: every fundamental module, its spectral twists,
//! and tensor products of up to three twisted factors must satisfy the full
//! set of algebra relations as exact matrix identities.

use qaffine::rmatrix::fundamental_module;
use qaffine::root::{AffineType, Family};
use qaffine::umodule::Twist;
use qaffine::verify::tensor_chain;

fn types() -> Vec<AffineType> {
    vec![
        AffineType::new(Family::A, 2),
        AffineType::new(Family::A, 3),
        AffineType::new(Family::A, 4),
        AffineType::new(Family::C, 2),
        AffineType::new(Family::C, 3),
    ]
}

#[test]
fn fundamentals_satisfy_relations() {
    for t in types() {
        for k in t.fundamental_indices() {
            let rep = fundamental_module(t, k).check_relations();
            assert!(rep.ok(), "{t:?} k={k}: {:?}", rep.failures);
        }
    }
}

#[test]
fn twisted_fundamentals_satisfy_relations() {
    for t in types() {
        for k in t.fundamental_indices() {
            for tw in [Twist::neg_s_pow(3), Twist::s_pow(-2), Twist::FormalZ] {
                let rep = fundamental_module(t, k).twist(&tw).check_relations();
                assert!(rep.ok(), "{t:?} k={k} twist {tw:?}: {:?}", rep.failures);
            }
        }
    }
}

#[test]
fn tensor_pairs_satisfy_relations() {
    for t in types() {
        for k in t.fundamental_indices() {
            for l in t.fundamental_indices() {
                let (m, _) = tensor_chain(t, &[(k, 0), (l, 3)]);
                if m.dim() > 150 {
                    continue;
                }
                let rep = m.check_relations();
                assert!(rep.ok(), "{t:?} ({k},{l}): {:?}", rep.failures);
            }
        }
    }
}

#[test]
fn tensor_triples_satisfy_relations() {
    let cases = [
        (AffineType::new(Family::A, 2), vec![(1, 0), (1, 2), (1, 5)]),
        (AffineType::new(Family::A, 3), vec![(1, 0), (2, 3), (1, -1)]),
        (AffineType::new(Family::C, 2), vec![(1, 0), (2, 1), (1, 4)]),
        (AffineType::new(Family::C, 3), vec![(1, 2), (1, 0), (1, -3)]),
    ];
    for (t, factors) in cases {
        let (m, _) = tensor_chain(t, &factors);
        let rep = m.check_relations();
        assert!(rep.ok(), "{t:?} {factors:?}: {:?}", rep.failures);
    }
}
