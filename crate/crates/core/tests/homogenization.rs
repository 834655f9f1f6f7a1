mod common;

use common::{all_sequences, random_sequences};
use monocurve::{homogenize, initial_ideal, toric_gb, toric_gb_from_matrix, MonomialIdeal, Sequence};

fn check(a: &Sequence) {
    let gb = toric_gb(a).unwrap();
    let direct = toric_gb_from_matrix(&a.homogenizing_matrix()).unwrap();
    let lifted: Vec<_> = gb.elements().iter().map(|f| homogenize(f).unwrap()).collect();
    assert_eq!(lifted, direct.elements(), "{a}");
    let ini: MonomialIdeal = MonomialIdeal::new(initial_ideal(&gb).gens().iter().map(|m| m.with_appended(0)));
    assert_eq!(ini, initial_ideal(&direct), "{a}");
}

#[test]
fn homogenized_basis_matches_matrix_ideal_n3() {
    for a in all_sequences(3, 20) {
        check(&a);
    }
}

#[test]
fn homogenized_basis_matches_matrix_ideal_n4() {
    for a in random_sequences(4, 40, 60, 11) {
        check(&a);
    }
}

#[test]
fn homogenized_basis_matches_matrix_ideal_n5() {
    for a in random_sequences(5, 30, 20, 12) {
        check(&a);
    }
}
