use charone_core::finite::{
    all_semirings, check_annihilator_reduction, check_bounded_by_one, congruences, is_cancellative, is_domain, is_qc,
    is_reduced, is_totally_ordered, radical_test, reduction,
};
use charone_core::idem::is_simple;
use charone_core::order::{enumerate_valuation_orders, enumerate_with, hom_from_order, order_from_hom, Strategy};
use charone_core::FiniteSemiring;

fn small_tables() -> Vec<FiniteSemiring> {
    (2..=4).flat_map(all_semirings).collect()
}

#[test]
fn domains_are_totally_ordered_and_cancellative() {
    for r in small_tables() {
        assert_eq!(is_domain(&r), is_totally_ordered(&r) && is_cancellative(&r), "{}", r.name());
    }
}

#[test]
fn qc_congruences_are_radical() {
    for r in small_tables() {
        for c in congruences(&r).unwrap() {
            if is_qc(&c, &r) {
                assert!(radical_test(&c, &r).unwrap(), "{} {}", r.name(), c.render(&r));
            }
        }
    }
}

#[test]
fn reductions_are_reduced() {
    for r in small_tables() {
        let red = reduction(&r).unwrap();
        if !red.degenerate {
            assert!(is_reduced(&red.quotient.semiring).unwrap(), "{}", r.name());
        }
    }
}

#[test]
fn annihilator_and_bound_equivalences_on_simple_tables() {
    for r in small_tables().into_iter().filter(|r| is_simple(&r.carrier())) {
        assert_eq!(check_annihilator_reduction(&r), Ok(None), "{}", r.name());
        assert_eq!(check_bounded_by_one(&r), Ok(None), "{}", r.name());
    }
}

#[test]
fn order_hom_round_trips() {
    for r in (2..=3).flat_map(all_semirings) {
        let fast = enumerate_valuation_orders(&r, true).unwrap();
        assert_eq!(fast, enumerate_with(&r, true, Strategy::Exhaustive).unwrap(), "{}", r.name());
        for rel in fast.iter().filter(|rel| !rel.is_degenerate(&r)) {
            let h = hom_from_order(rel, &r).unwrap();
            assert_eq!(&order_from_hom(h.hom.values()), rel, "{}", r.name());
        }
    }
}
