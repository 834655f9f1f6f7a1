mod common;

use common::env_or;
use monocurve::families::{arslan, bresinsky, prop31, shifted};
use monocurve::{initial_ideal, is_acm, toric_gb, GroebnerBasis, OrderSpec, PureDifference, Sequence};
use monocurve::groebner::{reduced_basis, DEFAULT_BASIS_CAP};

#[test]
fn arslan_bases_match() {
    for h in 2..=env_or("MONOCURVE_ARSLAN_MAX", 12) {
        let inst = arslan(h).unwrap();
        let gb = toric_gb(&inst.sequence).unwrap();
        assert_eq!(gb.elements(), inst.expected_gb.unwrap().as_slice(), "h = {h}");
        assert_eq!(gb.len() as u64, 2 * h + 3);
        assert!(is_acm(&inst.sequence).unwrap().verdict);
    }
}

#[test]
fn prop31_initial_ideal_sizes() {
    for h in 2..=env_or("MONOCURVE_PROP31_MAX", 12) {
        let inst = prop31(h).unwrap();
        let gb = toric_gb(&inst.sequence).unwrap();
        assert_eq!(gb.elements(), inst.expected_gb.unwrap().as_slice(), "h = {h}");
        assert_eq!(initial_ideal(&gb).len() as u64, h + 2);
        let report = is_acm(&inst.sequence).unwrap();
        assert!(!report.verdict);
        // g_h leads with y^{2h+1}; the smallest offending lead is that of g_{h-1}
        let expected = match 2 * h - 3 {
            1 => "x^5*z".to_string(),
            e => format!("x^5*z^{e}"),
        };
        assert_eq!(report.witness.unwrap(), expected);
    }
}

fn ideal_of(gens: &[PureDifference], a: &Sequence) -> GroebnerBasis {
    reduced_basis(gens, &OrderSpec::revlex(a.len()), Some(a.entries()), DEFAULT_BASIS_CAP).unwrap()
}

#[test]
fn prop31_dual_is_a_complete_intersection() {
    for h in 2..=6 {
        let inst = prop31(h).unwrap();
        let dual = inst.sequence.dual();
        assert_eq!(dual.entries(), &[6 * h + 3, 6, 6 * h + 7]);
        let ci = inst.dual_generators.unwrap();
        let dual_gb = toric_gb(&dual).unwrap();
        let ci_gb = ideal_of(&ci, &dual);
        for f in &ci {
            assert!(dual_gb.contains(f), "h = {h}: {f:?}");
        }
        for g in dual_gb.elements() {
            assert!(ci_gb.contains(g), "h = {h}: {g:?}");
        }
        assert_eq!(ci_gb, dual_gb);
    }
}

#[test]
fn bresinsky_is_never_acm() {
    for h in 2..=env_or("MONOCURVE_BRESINSKY_MAX", 6) {
        let inst = bresinsky(h).unwrap();
        let gb = toric_gb(&inst.sequence).unwrap();
        for f in &inst.known_generators {
            assert!(gb.contains(f), "h = {h}: {f:?}");
        }
        assert!(gb.contains(inst.member.as_ref().unwrap()));
        let report = is_acm(&inst.sequence).unwrap();
        assert!(!report.verdict);
        assert!(report.criteria.as_array().iter().all(|&(_, v)| !v));
    }
}

#[test]
fn shifts_of_4_13_19_end_acm() {
    let base = Sequence::parse("4,13,19").unwrap();
    let mut verdicts = Vec::new();
    for k in 1..=40 {
        let Ok(inst) = shifted(&base, k) else { continue };
        verdicts.push(is_acm(&inst.sequence).unwrap().verdict);
    }
    let tail = verdicts.iter().rev().take_while(|&&v| v).count();
    assert!(tail >= 10, "trailing ACM run {tail} in {verdicts:?}");
}
