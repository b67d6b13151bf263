use quregister::psi::{compare_tables, generated_tables, literal_tables, TableKind};

const SIGMA3_GOLDEN: &str = include_str!("golden/sigma3_mismatch.json");

#[test]
fn sigma3_mismatch_list_matches_golden_file() {
    let mism = compare_tables(&literal_tables(3).unwrap(), &generated_tables(3).unwrap()).unwrap();
    let golden: serde_json::Value = serde_json::from_str(SIGMA3_GOLDEN).unwrap();
    assert_eq!(serde_json::to_value(&mism).unwrap(), golden);
}

#[test]
fn mismatches_are_confined_to_the_sign_table() {
    let mism = compare_tables(&literal_tables(3).unwrap(), &generated_tables(3).unwrap()).unwrap();
    assert!(mism.iter().all(|m| m.table == TableKind::Sign));
    for n in 1..=2 {
        let t = compare_tables(&literal_tables(n).unwrap(), &generated_tables(n).unwrap()).unwrap();
        assert!(t.is_empty(), "n = {n}");
    }
}

#[test]
fn comparison_is_stable() {
    let a = compare_tables(&literal_tables(3).unwrap(), &generated_tables(3).unwrap()).unwrap();
    let b = compare_tables(&literal_tables(3).unwrap(), &generated_tables(3).unwrap()).unwrap();
    assert_eq!(a, b);
}
