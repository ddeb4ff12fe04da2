use paramkit_demo::{branching_growth_json, colorcode_trials_json, nt_partition_json, parse_graph};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn accepts_text_and_generator_specs() {
    assert_eq!(parse_graph("p 3 1\ne 1 2\n").unwrap().m(), 1);
    assert_eq!(parse_graph("cycle:5").unwrap().n(), 5);
    assert!(parse_graph("complete:61").is_err());
    assert!(parse_graph("spiral:2").is_err());
}

#[test]
fn nt_partition_of_star() {
    let v = parse(nt_partition_json("star:3", 1).unwrap());
    assert_eq!(v["one"], serde_json::json!([0]));
    assert_eq!(v["zero"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["lp_value"], 1.0);
    let c4 = parse(nt_partition_json("cycle:4", 2).unwrap());
    assert_eq!(c4["half"].as_array().unwrap().len(), 4);
    assert_eq!(c4["lp_value"], 2.0);
}

#[test]
fn growth_rows_stay_under_bounds() {
    let rows = parse(branching_growth_json("random:20:35:3", 8).unwrap());
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for r in rows {
        assert!(r["edge"].as_u64() <= r["edge_bound"].as_u64());
        assert!(r["degree"].as_u64() <= r["degree_bound"].as_u64());
    }
    assert!(branching_growth_json("path:4", 40).is_err());
}

#[test]
fn trial_curve_is_monotone_and_deterministic() {
    let a = colorcode_trials_json("path:5", 5, 40, 9).unwrap();
    assert_eq!(a, colorcode_trials_json("path:5", 5, 40, 9).unwrap());
    let v = parse(a);
    let s: Vec<f64> = v["success"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(s.len() as u64, v["trials_planned"].as_u64().unwrap());
    assert!(s.windows(2).all(|w| w[0] <= w[1]));
    assert!(*s.last().unwrap() > 0.8);
    // no 3-vertex path in a single edge
    let none = parse(colorcode_trials_json("path:2", 3, 10, 0).unwrap());
    assert!(none["success"].as_array().unwrap().iter().all(|x| x.as_f64() == Some(0.0)));
}
