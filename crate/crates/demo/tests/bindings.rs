use typeb_cells_demo::{insertion_json, rank_core_json, symbol_json, MAX_WORD};

#[test]
fn insertion() {
    let v = insertion_json("-3 1 -2", 1).unwrap();
    assert_eq!(v["insertion"], "· 1 1\n2 3\n2 3\n");
    assert_eq!(v["recording"], "· 2 2\n1 3\n1 3\n");
    assert_eq!(insertion_json("", 0).unwrap()["insertion"], "(empty)");
    assert!(insertion_json("1 1", 0).is_err());
    let long: Vec<String> = (1..=MAX_WORD as i32 + 1).map(|i| i.to_string()).collect();
    assert!(insertion_json(&long.join(" "), 0).is_err());
}

#[test]
fn rank_and_symbol() {
    let v = rank_core_json("4,3,3,1").unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["core"], serde_json::json!([2, 1]));
    assert_eq!(v["dominoes"], 4);
    let v = symbol_json("4 3 2 2", 2, 1).unwrap();
    assert_eq!(v["symbol"], "[½ 2½ 3½ 4½ / 1]");
    assert_eq!(v["sign"], "(4,4,2,1)");
    assert!(symbol_json("4 3 2 2", 0, 1).is_err());
}
