use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::diagrams::Wall;
use crate::scalars::{quantum_delta, rat, Field, QRatFun, Rational, ScalarMode};

fn generic(r: usize, s: usize, n: u32) -> Arc<RewriteSystem<QRatFun>> {
    Arc::new(
        RewriteSystem::new(
            Wall::new(r, s),
            &ScalarMode::GenericQ(n),
            CompletionConfig::default(),
        )
        .unwrap(),
    )
}

fn special(r: usize, s: usize, q: i64, rho: i64) -> Arc<RewriteSystem<Rational>> {
    let mode = ScalarMode::rational_qr(rat(q, 1), rat(rho, 1)).unwrap();
    Arc::new(RewriteSystem::new(Wall::new(r, s), &mode, CompletionConfig::default()).unwrap())
}

#[test]
fn small_dimensions() {
    let sys = generic(1, 1, 2);
    assert_eq!(sys.dimension(), 2);
    assert_eq!(sys.rule_count(), 1);
    assert_eq!(generic(2, 1, 3).dimension(), 6);
    assert_eq!(generic(1, 0, 3).dimension(), 1);
    assert_eq!(special(2, 2, 2, 3).dimension(), 24);
}

#[test]
fn quadratic_and_contraction_products() {
    let sys = generic(2, 1, 3);
    let q = QRatFun::var();
    let z = q.sub(&q.inv().unwrap());
    let s1 = QElement::s(&sys, 1).unwrap();
    let e = QElement::e(&sys).unwrap();
    assert_eq!(
        q_mul(&s1, &s1, &sys).unwrap(),
        s1.scale(&z).add_scalar(&QRatFun::one())
    );
    assert_eq!(e.mul(&e).unwrap(), e.scale(&quantum_delta(3)));
    assert_eq!(
        e.mul(&s1).unwrap().mul(&e).unwrap(),
        e.scale(&Field::pow(&q, 3))
    );
    let inv = QElement::s_inv(&sys, 1).unwrap();
    assert_eq!(s1.mul(&inv).unwrap(), QElement::one(&sys));
}

#[test]
fn jm_examples() {
    let sys = generic(2, 1, 3);
    let family = q_jm_family(&sys).unwrap();
    assert!(family[0].is_zero());
    assert_eq!(family[1], QElement::s_inv(&sys, 1).unwrap());
    let rho = Field::pow(&QRatFun::var(), 3);
    let want = QElement::scalar(&sys, quantum_delta(3))
        .sub(&contraction(&sys, 1, 3).unwrap())
        .unwrap()
        .sub(&contraction(&sys, 2, 3).unwrap())
        .unwrap()
        .scale(&rho);
    assert_eq!(family[2], want);
}

#[test]
fn relations_hold_generically() {
    for (r, s, n) in [(2, 1, 3), (1, 2, 2), (1, 1, 5)] {
        let sys = generic(r, s, n);
        let report = verify_q_relations(&sys).unwrap();
        assert!(report.all_passed(), "({r},{s}): {}", report.to_json());
        let central = q_supersym_central_check(&sys, &q_jm_family(&sys).unwrap(), 3).unwrap();
        assert!(central.iter().all(|c| c.central));
    }
}

#[test]
fn dropping_rho_breaks_the_wall_identity() {
    let sys = generic(2, 1, 3);
    let mut family = q_jm_family(&sys).unwrap();
    let rho_inv = Field::pow(&QRatFun::var(), 3).inv().unwrap();
    family[2] = family[2].scale(&rho_inv);
    let report = verify_q_relations_with(&sys, &family).unwrap();
    assert!(report
        .failures()
        .iter()
        .any(|c| c.relation == "jm-wall-pair-annihilated"));
}

#[test]
fn completion_is_confluent_and_stable() {
    let sys = special(2, 1, 2, 3);
    assert_eq!(sys.unresolved_overlaps(), 0);
    assert_eq!(sys.recomplete(CompletionConfig::default()).unwrap(), 0);
    assert_eq!(associativity_failures(&sys, 1000, 1).unwrap(), 0);
}

#[test]
fn budget_is_enforced() {
    let err = RewriteSystem::<QRatFun>::new(
        Wall::new(2, 1),
        &ScalarMode::GenericQ(3),
        CompletionConfig { max_rules: 1 },
    );
    assert!(matches!(err, Err(QError::CompletionBudgetExceeded { .. })));
    let err = RewriteSystem::<QRatFun>::new(
        Wall::new(3, 3),
        &ScalarMode::GenericQ(3),
        CompletionConfig::default(),
    );
    assert!(matches!(err, Err(QError::SizeLimitExceeded { .. })));
}

#[test]
fn classical_limits() {
    let report = classical_limit_check(&generic(2, 1, 3), 5).unwrap();
    assert!(report.passed(), "{}", report.to_json());
    let report = classical_limit_check(&generic(1, 1, 2), 4).unwrap();
    assert!(report.passed(), "{}", report.to_json());
    assert!(classical_limit_check(&generic(1, 2, 2), 4)
        .unwrap()
        .passed());
}

#[test]
fn small_centers() {
    assert_eq!(q_center_dimension(&generic(1, 1, 2)).unwrap().dimension, 2);
    assert_eq!(q_center_dimension(&generic(1, 0, 2)).unwrap().dimension, 1);
    let c = q_center_dimension(&generic(2, 1, 3)).unwrap();
    assert_eq!((c.dimension, c.supersym_rank), (3, 3));
}

#[test]
fn generic_two_two() {
    for n in [2, 3, 5] {
        assert_eq!(generic(2, 2, n).dimension(), 24);
    }
    let sys = generic(2, 2, 5);
    assert_eq!(sys.unresolved_overlaps(), 0);
    let report = verify_q_relations(&sys).unwrap();
    assert!(report.all_passed(), "{}", report.to_json());
    let central = q_supersym_central_check(&sys, &q_jm_family(&sys).unwrap(), 3).unwrap();
    assert!(central.iter().all(|c| c.central));
    let c = q_center_dimension(&sys).unwrap();
    assert_eq!((c.dimension, c.supersym_rank), (6, 6));
    assert!(classical_limit_check(&sys, 4).unwrap().passed());
    assert_eq!(associativity_failures(&sys, 1000, 5).unwrap(), 0);
    assert_eq!(sys.recomplete(CompletionConfig::default()).unwrap(), 0);
}

#[test]
fn five_strand_systems() {
    for (r, s) in [(3, 1), (1, 3), (3, 2), (2, 3), (4, 1)] {
        let sys = generic(r, s, 5);
        assert_eq!(sys.dimension(), (1..=r + s).product::<usize>());
        let report = verify_q_relations(&sys).unwrap();
        assert!(report.all_passed(), "({r},{s}): {}", report.to_json());
    }
}

fn word_strategy(letters: u8) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..letters, 0..7)
}

proptest! {
    #[test]
    fn normal_form_is_multiplicative(a in word_strategy(3), b in word_strategy(3)) {
        let sys = special(2, 2, 3, 5);
        let whole = QElement::word(&sys, &[a.clone(), b.clone()].concat());
        let split = QElement::word(&sys, &a).mul(&QElement::word(&sys, &b)).unwrap();
        prop_assert_eq!(&whole, &split);
        let words: std::collections::BTreeSet<&Word> = sys.normal_words().iter().collect();
        prop_assert!(whole.terms().keys().all(|w| words.contains(w)));
    }
}

#[test]
fn seeded_specializations() {
    for mode in seed_modes(11, 3) {
        for (r, s) in [(1, 1), (2, 1), (2, 2)] {
            let sys = Arc::new(
                RewriteSystem::<Rational>::new(Wall::new(r, s), &mode, CompletionConfig::default())
                    .unwrap(),
            );
            assert_eq!(sys.dimension(), (1..=r + s).product::<usize>());
            let report = verify_q_relations(&sys).unwrap();
            assert!(report.all_passed(), "{mode}: {}", report.to_json());
            let central = q_supersym_central_check(&sys, &q_jm_family(&sys).unwrap(), 3).unwrap();
            assert!(central.iter().all(|c| c.central));
        }
    }
}
