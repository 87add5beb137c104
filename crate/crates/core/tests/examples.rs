//! Worked examples through the public API, with small hand-built oracles.

use mixcox::dickson::{dickson_e, minimal_relation_exponent, DicksonQuery};
use mixcox::enumerate::{bfs_enumerate, DEFAULT_CAP};
use mixcox::graph::signs_from_ints;
use mixcox::orders::{element_order, torsion_bound};
use mixcox::presentations::{export, generate_presentation, sign_flip_equivalent, verify_presentation, ExportFormat};
use mixcox::taucalc::{compute_kappa, tau_product, verify_dickson_identity, verify_tau_middle, DicksonMode};
use mixcox::words::{build_hat_word, conjugate, evaluate, verify_conjugate_shift};
use mixcox::{ExactMatrix, OrderResult, Presentation, Relator, RelatorOrigin, Representation, SignedCoxeterGraph, Word};
use num_bigint::BigInt;

fn line(v: &[i64]) -> Representation {
    Representation::new(SignedCoxeterGraph::line(signs_from_ints(v).unwrap()).unwrap())
}

fn cycle(v: &[i64]) -> Representation {
    Representation::new(SignedCoxeterGraph::cycle(signs_from_ints(v).unwrap()).unwrap())
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn matrix(rows: &[[i64; 3]]) -> ExactMatrix {
    ExactMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

#[test]
fn reflections_of_worked_line() {
    let rep = line(&[1, -1, 1]);
    assert_eq!(*rep.bform(), matrix(&[[2, -1, 0], [-1, -2, -1], [0, -1, 2]]));
    // columns (-e1, e2 + e1, e3) and (e1 - e2, -e2, e3 - e2)
    assert_eq!(*rep.reflection(0).unwrap(), matrix(&[[-1, 1, 0], [0, 1, 0], [0, 0, 1]]));
    assert_eq!(*rep.reflection(1).unwrap(), matrix(&[[1, 0, 0], [-1, -1, -1], [0, 0, 1]]));
    assert_eq!(rep.det_bform(), BigInt::from(-12));
}

#[test]
fn triangle_taus() {
    let rep = cycle(&[1, 1, 1]);
    assert_eq!(*rep.tau(0).unwrap(), matrix(&[[-2, 1, 1], [0, 0, 0], [0, 0, 0]]));
    assert_eq!(*rep.tau(1).unwrap(), matrix(&[[0, 0, 0], [1, -2, 1], [0, 0, 0]]));
    let sum = &(rep.tau(0).unwrap() + &tau_product(&rep, &[0, 1]).unwrap()) + &tau_product(&rep, &[0, 2]).unwrap();
    assert!(sum.is_zero());
}

#[test]
fn orders() {
    assert_eq!(element_order(&line(&[1, -1, 1]), &w("1 2 3 2")).unwrap(), OrderResult::Finite(3));
    assert_eq!(element_order(&line(&[1, -1]), &w("1 2")).unwrap(), OrderResult::Infinite);
    assert_eq!(element_order(&line(&[-1, -1]), &w("1 2")).unwrap(), OrderResult::Finite(3));
    assert_eq!(element_order(&cycle(&[-1; 5]), &w("1 2 3 4 5 4 3 2")).unwrap(), OrderResult::Finite(2));
    assert_eq!(element_order(&line(&[1, 1, -1]), &w("1 2 3 2")).unwrap(), OrderResult::Infinite);
    assert_eq!(element_order(&line(&[1, 1]), &Word::empty()).unwrap(), OrderResult::Finite(1));
    assert_eq!([1, 2, 3].map(torsion_bound), [2, 6, 6]);
}

#[test]
fn hat_words_and_conjugation() {
    let g = line(&[1; 5]).graph().clone();
    assert_eq!(build_hat_word(&g, 1, 3, 1).unwrap(), w("2 3 4 3 2"));
    assert_eq!(build_hat_word(&g, 0, 2, 1).unwrap(), w("1 2 3 2"));
    assert_eq!(build_hat_word(&g, 3, 3, 3).unwrap(), w("4"));
    assert_eq!(conjugate(&w("1 2"), &w("3 4")), w("4 3 1 2 3 4"));
    assert!(verify_conjugate_shift(&cycle(&[-1; 5]), 0).unwrap().holds);
    assert!(verify_conjugate_shift(&cycle(&[1; 4]), 2).unwrap().holds);
    assert!(verify_conjugate_shift(&cycle(&[1, -1, 1, -1]), 0).is_err());
}

#[test]
fn middle_identity_on_five_vertex_line() {
    let rep = line(&[1, -1, -1, 1, -1]);
    let lhs = evaluate(&rep, &w("2 3 4 3 2")).unwrap();
    let r = verify_tau_middle(&rep, 1, 3, 1).unwrap();
    assert!(r.holds, "{r}");
    assert_eq!(lhs.pow(2), *rep.identity());
}

#[test]
fn kappa_examples() {
    assert_eq!(compute_kappa(cycle(&[1, -1, 1, -1]).graph(), 0, 2).unwrap(), -2);
    assert_eq!(compute_kappa(cycle(&[1, 1, -1, -1]).graph(), 0, 3).unwrap(), 0);
    assert_eq!(compute_kappa(cycle(&[1; 6]).graph(), 1, 4).unwrap(), 2);
}

#[test]
fn dickson_examples() {
    let q = |x, a| DicksonQuery::new(x, a).unwrap();
    assert_eq!(dickson_e(0, q(5, 1)), BigInt::from(1));
    assert_eq!(dickson_e(2, q(1, 1)), BigInt::from(0));
    assert_eq!(dickson_e(4, q(1, -1)), BigInt::from(5));
    assert_eq!(minimal_relation_exponent(q(1, 1)).unwrap(), Some(3));
    assert_eq!(minimal_relation_exponent(q(1, -1)).unwrap(), None);
    assert_eq!(minimal_relation_exponent(q(0, -1)).unwrap(), Some(2));

    let rep = line(&[1, -1, 1]);
    let (even, odd) = verify_dickson_identity(&rep, DicksonMode::Line, 0, 2, 2).unwrap();
    assert!(even.holds && odd.holds);
    let c5 = cycle(&[-1; 5]);
    for r in 1..=3 {
        let (even, odd) = verify_dickson_identity(&c5, DicksonMode::Cycle, 0, 2, r).unwrap();
        assert!(even.holds && odd.holds, "{even} {odd}");
    }
}

#[test]
fn presentations() {
    let p = generate_presentation(line(&[1, -1, 1]).graph()).unwrap();
    assert_eq!(export(&p, ExportFormat::Text), "s1^2, s2^2, s3^2, (s1*s3)^2, (s1*s2*s3*s2)^3");
    let json = export(&p, ExportFormat::Json);
    assert_eq!(Presentation::from_json(&json).unwrap(), p);

    let c5 = cycle(&[-1; 5]);
    let p = generate_presentation(c5.graph()).unwrap();
    assert!(verify_presentation(&c5, &p).unwrap().iter().all(|r| r.holds));

    let bad = Presentation::from_relators(2, vec![Relator::new(w("1 2"), 3, RelatorOrigin::Braid)]);
    let reports = verify_presentation(&line(&[1, -1]), &bad).unwrap();
    assert!(!reports[0].holds);

    let empty = Presentation::from_relators(2, Vec::new());
    assert_eq!(export(&empty, ExportFormat::Text), "");
    assert!(export(&empty, ExportFormat::Gap).contains("rels := [  ];;"));

    let minus = generate_presentation(cycle(&[-1; 3]).graph()).unwrap();
    let plus = generate_presentation(cycle(&[1; 3]).graph()).unwrap();
    assert!(!minus.equivalent(&plus));
    assert!(!sign_flip_equivalent(cycle(&[-1; 3]).graph()).unwrap());
    assert!(sign_flip_equivalent(cycle(&[1, -1, -1, 1, 1, -1]).graph()).unwrap());
}

#[test]
fn small_group_orders() {
    assert_eq!(bfs_enumerate(&line(&[1, 1, 1]), DEFAULT_CAP).count(), Some(24));
    assert_eq!(bfs_enumerate(&cycle(&[-1; 3]), DEFAULT_CAP).count(), Some(24));
}
