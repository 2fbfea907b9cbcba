//! Cross-module oracle checks tying the combinatorial layer to the
//! explicit-module layer.

use ahecke::arith::parse_rational;
use ahecke::grothendieck::DualBasisEngine;
use ahecke::hecke::{self, decompose, OracleEngine};
use ahecke::multisegments::{hook_criterion, EvaluationPoint, Multisegment};
use ahecke::partitions::Partition;

fn pt(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ms(s: &str) -> Multisegment {
    s.parse().unwrap()
}

#[test]
fn single_column_evaluation_labels() {
    // lambda = (1^k): the evaluation multisegment is k length-one segments
    // at consecutive points, and the explicit module is the simple with
    // exactly that label
    let u = parse_rational("3").unwrap();
    let mut eng = OracleEngine::new(&u).unwrap();
    for k in 1..=3usize {
        let lam = Partition::new(vec![1; k]).unwrap();
        for a in [-1i64, 0, 2] {
            let p = EvaluationPoint::new(lam.clone(), a);
            let m = p.multisegment();
            let segs = m.expanded();
            assert_eq!(segs.len(), k);
            for (i, s) in segs.iter().enumerate() {
                assert_eq!(s.len(), 1);
                assert_eq!(s.start(), a - (k - 1 - i) as i64);
            }
            let module = eng.evaluation_module_at(&lam, a).unwrap();
            assert_eq!(eng.composition_factors(&module).unwrap(), vec![m]);
        }
    }
}

#[test]
fn triple_agreement_general_pairs() {
    // agreement is translation-invariant, but exercise genuinely two-sided
    // exponent pairs on every partition of size up to 3
    let u = parse_rational("3").unwrap();
    let mut dual = DualBasisEngine::new();
    for lam in Partition::all_up_to(3) {
        if lam.is_empty() {
            continue;
        }
        for (a, b) in [(1i64, 3i64), (2, 2), (-1, 1)] {
            let hook = hook_criterion(&lam, &[a, b]).simple;
            let product = dual
                .is_simple_product(&[
                    EvaluationPoint::new(lam.clone(), a).multisegment(),
                    EvaluationPoint::new(lam.clone(), b).multisegment(),
                ])
                .unwrap()
                .0;
            let module = {
                let m1 = hecke::evaluation_module(&lam, &ahecke::arith::rat_pow(&u, a), &u).unwrap();
                let m2 = hecke::evaluation_module(&lam, &ahecke::arith::rat_pow(&u, b), &u).unwrap();
                decompose::burnside_is_simple(&hecke::induce(&m1, &m2).unwrap()).unwrap()
            };
            assert_eq!(hook, product, "{lam} at ({a},{b})");
            assert_eq!(hook, module, "{lam} at ({a},{b})");
        }
    }
}

#[test]
fn standard_expansion_support_respects_order() {
    let mut dual = DualBasisEngine::new();
    for m in ["[0,1]+[1,2]", "2[0,0]+[1,1]", "[0,2]+[1,1]+[0,0]"] {
        let m = ms(m);
        let e = dual.expand_standard(&m).unwrap();
        for (n, c) in e.terms() {
            assert!(m.zel_leq(n), "support term {n} of {m}");
            assert!(c > &num_bigint::BigInt::from(0));
        }
        assert_eq!(e.coeff(&m), num_bigint::BigInt::from(1));
    }
}

#[test]
fn standard_module_class_matches_expansion() {
    // the composition multiset of the explicit standard module equals the
    // expansion of its class, multiplicities included
    let u = parse_rational("3").unwrap();
    let mut oracle = OracleEngine::new(&u).unwrap();
    let mut dual = DualBasisEngine::new();
    for m in ["[0,0]+[1,1]", "[0,1]+[1,1]", "2[0,0]", "[0,0]+[1,1]+[2,2]"] {
        let m = ms(m);
        let module = oracle.standard_module(&m).unwrap();
        let factors = oracle.composition_factors(&module).unwrap();
        let expansion = dual.expand_standard(&m).unwrap();
        let mut expected = Vec::new();
        for (n, c) in expansion.terms() {
            for _ in 0..c.try_into().unwrap_or(0u64) {
                expected.push(n.clone());
            }
        }
        expected.sort_by_key(|x| x.order_key());
        assert_eq!(factors, expected, "factors of the standard module of {m}");
    }
}
