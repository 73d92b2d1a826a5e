use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;
use schurweyl::young::{factorial, partitions};
use schurweyl::{Rational, YoungDiagram};

fn any_partition(max_n: usize) -> impl Strategy<Value = YoungDiagram> {
    (1..=max_n).prop_flat_map(|n| {
        let all = partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(nu in any_partition(8)) {
        prop_assert_eq!(nu.conjugate().conjugate(), nu.clone());
        prop_assert_eq!(nu.conjugate().rows().to_vec(), nu.columns().to_vec());
        prop_assert_eq!(nu.rows().iter().sum::<usize>(), nu.columns().iter().sum::<usize>());
    }

    #[test]
    fn hooks_are_positive_and_one_exactly_on_removable_boxes(nu in any_partition(8)) {
        for cell in nu.cells() {
            let h = nu.hook_length(cell).unwrap();
            prop_assert!(h >= 1);
            prop_assert_eq!(h == 1, nu.is_removable(cell));
        }
    }

    #[test]
    fn bound_lies_between_shortest_column_fermions_and_one(nu in any_partition(9)) {
        prop_assume!(nu.n_boxes() >= 2);
        let bound = nu.entanglement_bound().unwrap().value;
        let shortest = *nu.columns().last().unwrap();
        prop_assert!(bound <= Rational::one());
        prop_assert!(bound >= Rational::new(1.into(), shortest.into()));
    }

    #[test]
    fn entropy_bound_is_minus_log_of_bound(nu in any_partition(9)) {
        prop_assume!(nu.n_boxes() >= 2);
        let bound = nu.entanglement_bound().unwrap().to_f64();
        prop_assert!((nu.entropy_lower_bound().unwrap() + bound.ln()).abs() < 1e-12);
    }

    #[test]
    fn tableau_count_matches_hook_formula(nu in any_partition(6)) {
        let tabs = nu.standard_tableaux();
        prop_assert_eq!(big(tabs.len()), nu.dim_symmetric_irrep());
        prop_assert!(tabs.contains(&nu.row_ordered_tableau()));
        prop_assert!(tabs.contains(&nu.column_ordered_tableau()));
        let words: Vec<_> = tabs.iter().map(|t| t.reading_word()).collect();
        prop_assert!(words.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn removing_the_largest_entry_removes_a_removable_box(nu in any_partition(7), pick in any::<prop::sample::Index>()) {
        prop_assume!(nu.n_boxes() >= 2);
        let tabs = nu.standard_tableaux();
        let t = &tabs[pick.index(tabs.len())];
        let cell = t.position(nu.n_boxes()).unwrap();
        prop_assert!(nu.is_removable(cell));
        prop_assert_eq!(t.remove_largest().diagram().clone(), nu.without(cell).unwrap());
    }
}

#[test]
fn boson_and_fermion_endpoints() {
    for n in 2..=10 {
        assert_eq!(
            YoungDiagram::row(n).entanglement_bound().unwrap().value,
            Rational::one()
        );
        assert_eq!(
            YoungDiagram::column(n).entanglement_bound().unwrap().value,
            Rational::new(1.into(), (n as i64).into())
        );
    }
}

#[test]
fn symmetric_group_dimensions_square_to_group_order() {
    for n in 1..=8 {
        let total: BigUint = partitions(n).iter().map(|nu| nu.dim_symmetric_irrep().pow(2)).sum();
        assert_eq!(total, factorial(n), "N={n}");
    }
}

#[test]
fn schur_weyl_dimension_count() {
    for n in 1..=6 {
        for d in 1..=4usize {
            let total: BigUint = partitions(n)
                .iter()
                .map(|nu| nu.dim_symmetric_irrep() * nu.dim_unitary_irrep(d))
                .sum();
            assert_eq!(total, big(d).pow(n as u32), "N={n} d={d}");
        }
    }
}

#[test]
fn unitary_dimension_vanishes_below_column_height() {
    for nu in partitions(6) {
        for d in 1..nu.n_rows() {
            assert_eq!(nu.dim_unitary_irrep(d).to_usize(), Some(0), "{nu} d={d}");
        }
        assert!(nu.dim_unitary_irrep(nu.n_rows()).to_usize().unwrap() >= 1);
    }
}
