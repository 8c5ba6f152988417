mod common;

use pinc::decide::LipschitzSearch;
use pinc::expr::{self, ManifoldExpr};
use pinc::report::{ClassesReport, JsonReport};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_then_parse_is_identity(e in common::expr()) {
        prop_assert_eq!(expr::parse(&e.to_string()).unwrap(), e.clone());
        let lower = e.to_string().to_lowercase().replace(" * ", "x");
        prop_assert_eq!(lower.parse::<ManifoldExpr>().unwrap(), e);
    }

    #[test]
    fn json_report_round_trips(e in common::expr()) {
        let report = JsonReport::new(&e.report(&LipschitzSearch::default()).unwrap());
        let text = serde_json::to_string(&report).unwrap();
        let back: JsonReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(back.expression, e.to_string());
    }

    #[test]
    fn classes_report_round_trips(e in common::complete_expr()) {
        let m = e.build().unwrap();
        let report = ClassesReport::new(&m, None).unwrap();
        let back: ClassesReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        prop_assert_eq!(back, report);
    }
}

#[test]
fn report_keys_are_stable() {
    let e: ManifoldExpr = "RP(2) * RP(2) * S(1)".parse().unwrap();
    let value = serde_json::to_value(JsonReport::new(&e.report(&LipschitzSearch::default()).unwrap())).unwrap();
    for key in ["schema_version", "expression", "dimension", "orientable", "spin", "pin_plus", "pin_minus", "pin_c", "lipschitz"] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    assert_eq!(value["lipschitz"]["status"], "yes");
    assert_eq!(value["lipschitz"]["witness"]["bundle"], "l(a1) ⊕ l(a2)");
}
