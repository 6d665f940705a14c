use su21_core::cochain::{
    build_chi, build_psi, build_psi0, differential, export_cochain, hodge_type, is_equivariant, verify_chi3_relations,
    verify_generators, verify_nonexactness, HodgeType,
};
use su21_core::lie::{verify_table1, verify_table3};
use su21_core::wigner::{verify_chi_family_actions, X3Variant};

const V: X3Variant = X3Variant::Plus1;

#[test]
fn coboundary_identities_hold_through_k10() {
    for k in 0..=10 {
        for r in verify_generators(k, V).unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }
}

#[test]
fn nonexactness_through_k5() {
    for k in 0..=5 {
        for r in verify_nonexactness(k, V).unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }
}

#[test]
fn chi_relations_and_family_actions_through_k10() {
    for k in 0..=10 {
        for r in verify_chi3_relations(k).unwrap() {
            assert_eq!(r.pass, r.check != "lowering_raising_is_minus_i", "{r:?}");
        }
        for r in verify_chi_family_actions(k, V).unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }
}

#[test]
fn differential_preserves_equivariance() {
    for k in 0..=4 {
        let chi = build_chi(k).unwrap();
        assert!(is_equivariant(&chi, V).unwrap());
        let d = differential(&chi, V).unwrap();
        assert!(is_equivariant(&d, V).unwrap());
        assert_eq!(hodge_type(&d), HodgeType::Mixed);
        let dd = differential(&d, V).unwrap();
        assert!(dd.is_zero());
    }
}

#[test]
fn psi_pair_has_disjoint_support() {
    for k in 0..=6 {
        let a = build_psi(k).unwrap().support();
        let b = build_psi0(k).unwrap().support();
        assert!(a.iter().all(|w| !b.contains(w)));
        assert_eq!(a.len(), 4);
        assert_eq!(b.len(), 1);
    }
}

#[test]
fn export_is_deterministic() {
    let first = serde_json::to_string(&export_cochain(&build_psi(3).unwrap())).unwrap();
    let second = serde_json::to_string(&export_cochain(&build_psi(3).unwrap())).unwrap();
    assert_eq!(first, second);
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["hodge_type"], "(1,1)");
    let entries = v["entries"].as_array().unwrap();
    let wedges: Vec<_> = entries.iter().map(|e| e["wedge"].clone()).collect();
    assert_eq!(serde_json::to_string(&wedges).unwrap(), "[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]");
    let terms = entries[1]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    assert_eq!(terms[0]["index"]["m1_2"], -3);
}

#[test]
fn printed_tables_reproduced() {
    let cells: Vec<_> = verify_table1().into_iter().chain(verify_table3()).collect();
    assert_eq!(cells.len(), 16 + 24);
    assert!(cells.iter().all(|c| c.pass));
}
