mod common;

use common::*;
use flexgroup::flexibility::{is_k_flexible_with, subgroup_rank};
use flexgroup::subgroups::all_subgroups;
use flexgroup::{flexibility_profile, min_generators, parse_group_spec, FlexOptions, SubgroupSet};

const SMALL: &[&str] = &[
    "C1",
    "C2",
    "C6",
    "C8",
    "C12",
    "E(2,2)",
    "E(2,3)",
    "E(3,2)",
    "Q8",
    "Perm(3)",
    "Perm(4; (0 1 2 3), (1 3))",
    "Perm(5; (0 1 2 3 4), (1 4)(2 3))",
    "Perm(6; (0 1 2 3 4 5), (1 5)(2 4))",
    "C2 x C4",
    "Aff(3,1,2)",
    "MatAff(2,2,[0,1;1,1])",
    "MM(5,2,2,4)",
];

const MEDIUM: &[&str] = &["E(2,4)", "Aff(3,2,2)", "E(2,2) x C4", "C2 x C4 x C2", "Perm(4)", "MM(7,3,1,2)", "C4 x C4"];

#[test]
fn rank_and_witness_match_first_generating_combination() {
    for spec in SMALL.iter().chain(MEDIUM) {
        let g = parse_group_spec(spec).unwrap();
        let got = min_generators(&g);
        let (d, first) = naive_d(&g);
        assert_eq!(got.d, d, "{spec}");
        assert_eq!(got.witness, first, "{spec}");
    }
}

#[test]
fn profile_matches_definition() {
    for spec in SMALL.iter().chain(MEDIUM) {
        let g = parse_group_spec(spec).unwrap();
        let profile = flexibility_profile(&g);
        let (d, _) = naive_d(&g);
        assert_eq!(profile.len(), d, "{spec}");
        for v in profile {
            let (flexible, counterexample) = naive_flexible(&g, v.k);
            assert_eq!(v.flexible, flexible, "{spec} k={}", v.k);
            assert_eq!(v.counterexample, counterexample, "{spec} k={}", v.k);
            for w in &v.witness_map {
                let mut all = w.tuple.clone();
                all.extend_from_slice(&w.extension);
                assert_eq!(size(&ncl(&g, &all)), g.order(), "{spec}: witness {w:?}");
            }
        }
    }
}

#[test]
fn symmetry_reduction_agrees_up_to_order_24() {
    let reduced = FlexOptions { symmetry_reduction: true, ..FlexOptions::default() };
    let plain = FlexOptions::default();
    for spec in SMALL.iter().chain(MEDIUM).chain(&["Perm(4; (0 1 2), (1 2 3))", "C3 x Perm(3)", "C2 x Q8"]) {
        let g = parse_group_spec(spec).unwrap();
        assert!(g.order() <= 24);
        let d = min_generators(&g).d;
        for k in 1..=d {
            let a = is_k_flexible_with(&g, k, &reduced).unwrap();
            let b = is_k_flexible_with(&g, k, &plain).unwrap();
            assert_eq!(a.flexible, b.flexible, "{spec} k={k}");
        }
    }
}

#[test]
fn subgroup_rank_matches_naive_rank() {
    for spec in ["Q8", "Aff(3,2,2)", "E(2,2) x C4", "Perm(4)"] {
        let g = parse_group_spec(spec).unwrap();
        for h in all_subgroups(&g).unwrap() {
            let set: Set = (0..g.order()).map(|x| h.contains(x)).collect();
            assert_eq!(subgroup_rank(&g, &h).unwrap(), naive_rank_of(&g, &set).0, "{spec} {:?}", h.members());
        }
        let whole = SubgroupSet::whole(&g);
        assert_eq!(subgroup_rank(&g, &whole).unwrap(), naive_d(&g).0);
    }
}

#[test]
fn vector_spaces_and_scalar_affine_ranks() {
    // d(p^r) = r and d(p^r : <s>) = r + 1 for s != 1.
    for (p, r) in [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (5, 2)] {
        let g = parse_group_spec(&format!("E({p},{r})")).unwrap();
        assert_eq!(min_generators(&g).d, r);
    }
    for (p, r, s) in [(3, 2, 2), (5, 2, 4), (5, 2, 2), (7, 2, 3)] {
        let g = parse_group_spec(&format!("Aff({p},{r},{s})")).unwrap();
        assert_eq!(min_generators(&g).d, r + 1, "Aff({p},{r},{s})");
    }
}
