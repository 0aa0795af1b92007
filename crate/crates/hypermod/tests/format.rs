use hypermod::format::{parse, parse_json, parse_lines, parse_weights, to_json, to_lines, Format};
use hypermod::CliError;
use hypermod_core::{catalog, ratio, Error};
use proptest::prelude::*;

fn validation(r: Result<hypermod_core::Hypergraph, CliError>) -> String {
    match r {
        Err(CliError::Core(Error::Validation(msg))) => msg,
        other => panic!("expected a validation error, got {other:?}"),
    }
}

#[test]
fn lines_assign_ids_and_vertex_order() {
    let h = parse_lines("# comment\nb a c\n\nc d\n").unwrap();
    assert_eq!(h.vertices(), ["b", "a", "c", "d"]);
    assert_eq!(h.edge_ids(), ["e1", "e2"]);
    assert_eq!(h.edge_vertex_names(0), ["b", "a", "c"]);
    assert_eq!(parse_lines(&to_lines(&h).unwrap()).unwrap(), h);
}

#[test]
fn json_weights_and_numbers() {
    let h = parse_json(
        r#"{"vertices":["a","b","c"],"edges":[
            {"id":"x","vertices":["a","b"],"weight":"3/2"},
            {"id":"y","vertices":["b","c"],"weight":2}]}"#,
    )
    .unwrap();
    assert_eq!(h.weights(), [ratio(3, 2), ratio(2, 1)]);
    assert_eq!(parse_json(&to_json(&h)).unwrap(), h);
    assert!(to_lines(&h).is_err());
}

#[test]
fn invalid_inputs() {
    let msg = validation(parse_lines("a b\nc\n"));
    assert!(msg.contains("e2"), "{msg}");
    let msg = validation(parse_json(r#"{"vertices":["a","b"],"edges":[{"id":"e","vertices":["a","z"]}]}"#));
    assert!(msg.contains("z"), "{msg}");
    let msg = validation(parse_json(
        r#"{"vertices":["a","b"],"edges":[{"id":"e","vertices":["a","b"],"weight":"-1"}]}"#,
    ));
    assert!(msg.contains("not positive"), "{msg}");
    assert!(matches!(parse_json("{"), Err(CliError::Input(_))));
    assert!(matches!(
        parse_json(r#"{"vertices":["a"],"edges":[],"extra":1}"#),
        Err(CliError::Input(_))
    ));
}

#[test]
fn weights_file() {
    let h = catalog::double_triple();
    assert_eq!(parse_weights(r#"{"e2":"2"}"#, &h).unwrap(), [ratio(1, 1), ratio(2, 1)]);
    assert!(parse_weights(r#"{"e9":"2"}"#, &h).is_err());
    assert!(parse_weights(r#"{"e1":"0"}"#, &h).is_err());
}

#[test]
fn catalog_round_trips() {
    for (name, h) in catalog::all() {
        assert_eq!(parse(&to_json(&h), Format::Json).unwrap(), h, "{name}");
    }
}

proptest! {
    #[test]
    fn random_round_trip(seed in any::<u64>()) {
        let mut rng = hypermod::corpus::rng(seed);
        let h = hypermod::corpus::random_hypergraph(&mut rng, 7, 8);
        prop_assert_eq!(parse_json(&to_json(&h)).unwrap(), h.clone());
        // Generated vertex names follow v1..vn, not first appearance, so the
        // line format may refuse; when it accepts, it must round-trip.
        if let Ok(text) = to_lines(&h) {
            prop_assert_eq!(parse_lines(&text).unwrap(), h);
        }
    }
}
