use chern_core::io::{evaluate, parse_document, resolve_caps, CapFlags, IoError, ReportDocument};
use chern_core::verify::{run_suite, Caps, Instance};

const HEIS: &str = include_str!("../../../inputs/heis.json");
const DUAL: &str = include_str!("../../../inputs/dual_numbers.json");
const T2: &str = include_str!("../../../inputs/dual_numbers_T2.json");

fn heis() -> (chern_core::io::InputDocument, Instance) {
    let doc = parse_document(HEIS).unwrap();
    let inst = doc.instance("heis").unwrap();
    (doc, inst)
}

#[test]
fn documents_build_the_builtin_instances() {
    let (_, inst) = heis();
    let lie = inst.lie.unwrap();
    assert_eq!(lie.dim(), 3);
    assert_eq!(lie.nilpotency_class(), Some(2));

    let dual = parse_document(DUAL).unwrap().instance("dual").unwrap();
    assert_eq!(dual.algebra.unwrap().dim(), 2);

    let t2 = parse_document(T2).unwrap();
    let inst = t2.instance("t2").unwrap();
    assert_eq!(inst.triangular.as_ref().unwrap().n, 2);
    assert!(inst.algebra.is_some());
}

#[test]
fn parse_errors_carry_a_pointer() {
    let e = parse_document(r#"{"lie_algebra": {"dim": "3"}}"#).unwrap_err();
    assert!(matches!(&e, IoError::Parse { pointer, .. } if pointer == "/lie_algebra/dim"), "{e}");

    let e = parse_document(r#"{"caps": {"degre": 3}}"#).unwrap_err();
    assert!(matches!(&e, IoError::Parse { pointer, .. } if pointer.starts_with("/caps")), "{e}");

    let doc = parse_document(r#"{"lie_algebra": {"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 5, "c": "1"}]}]}}"#).unwrap();
    let e = doc.instance("x").unwrap_err();
    assert!(matches!(&e, IoError::Invalid { pointer, .. } if pointer == "/lie_algebra/brackets/0/terms/0/k"), "{e}");

    let doc = parse_document(r#"{"lie_algebra": {"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": "1/0"}]}]}}"#).unwrap();
    assert!(doc.instance("x").is_err());

    let doc = parse_document(r#"{"triangular": {"n": 2, "sigma": [[0, 1], [1, 0]], "base": "dual_numbers"}}"#).unwrap();
    let e = doc.instance("x").unwrap_err();
    assert!(matches!(&e, IoError::Invalid { pointer, .. } if pointer == "/triangular/sigma"), "{e}");

    assert!(parse_document("{}").unwrap().instance("x").is_err());
}

#[test]
fn caps_resolve_flags_then_document_then_defaults() {
    let (doc, inst) = heis();
    let caps = resolve_caps(&doc, CapFlags::default(), &inst).unwrap();
    assert_eq!(caps, Caps::new(4, 3, 3));
    let caps = resolve_caps(&doc, CapFlags { degree: Some(2), ..CapFlags::default() }, &inst).unwrap();
    assert_eq!(caps.degree, 2);

    let t2 = parse_document(T2).unwrap();
    let inst = t2.instance("t2").unwrap();
    assert_eq!(resolve_caps(&t2, CapFlags::default(), &inst).unwrap(), Caps::new(3, 3, 6));

    let (doc, inst) = heis();
    let e = resolve_caps(&doc, CapFlags { truncation: Some(2), ..CapFlags::default() }, &inst).unwrap_err();
    assert!(matches!(e, IoError::Config(_)));
}

#[test]
fn reports_round_trip() {
    let (_, inst) = heis();
    let r = run_suite("ex:Upsilon(1)", &inst, &Caps::new(4, 3, 3)).unwrap();
    let doc = ReportDocument::new("suite ex:Upsilon(1)", vec![r]);
    assert!(doc.ok);
    let json = doc.to_json();
    assert_eq!(ReportDocument::from_json(&json).unwrap(), doc);
    assert_eq!(ReportDocument::from_json(&json).unwrap().to_json(), json);
    assert!(doc.to_text().ends_with("overall: pass\n"));
}

#[test]
fn eval_on_words_and_wedges() {
    let (_, inst) = heis();
    let caps = Caps::new(4, 3, 3);
    let d = evaluate("d", "x∧y", &inst, &caps).unwrap();
    assert_eq!(d.value.into_iter().collect::<Vec<_>>(), [("z".to_string(), "-1".to_string())]);
    let e = evaluate("e", "x,y", &inst, &caps).unwrap();
    assert_eq!(e.value.len(), 2);
    let sw = evaluate("sw", "x|y", &inst, &caps).unwrap();
    assert_eq!(sw.value.get("x∧y").map(String::as_str), Some("1"));
    let t = evaluate("tau", "[]", &inst, &caps).unwrap();
    assert_eq!(t.value.len(), 1);

    assert!(matches!(evaluate("d", "x∧w", &inst, &caps), Err(IoError::Element { .. })));
    assert!(matches!(evaluate("tau", "y*x", &inst, &caps), Err(IoError::Element { .. })));
    assert!(matches!(evaluate("nope", "x", &inst, &caps), Err(IoError::Config(_))));
    assert!(evaluate("rho", "x", &inst, &caps).is_err());
}
