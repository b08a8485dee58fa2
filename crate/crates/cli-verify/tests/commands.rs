use cli_verify::commands::{self, CommandError};
use cli_verify::{SuiteContext, SuiteRegistry};
use duality_engine::SignConventionFile;
use field_spaces::BackgroundDescriptor;

fn frozen() -> SignConventionFile {
    SignConventionFile::frozen()
}

#[test]
fn sdual_prints_image_trace_and_oracle_flag() {
    let out = commands::sdual_cmd("w1", "closed", None, &frozen()).unwrap();
    assert_eq!(out.text, "image = -Dz^Dw2\ncase = w1 | degree 0 | PV0, nonzero divergence\noracle_consulted = false\n");
    let out = commands::sdual_cmd("Dw1", "c_times_c2", None, &frozen()).unwrap();
    assert!(out.text.contains("image = Dw1\n") && out.text.contains("| identity"));
    let out = commands::sdual_cmd("w1", "composite", None, &frozen()).unwrap();
    assert!(out.text.starts_with("image = -z*Dz^Dw2\n"));
    assert!(out.text.ends_with("oracle_consulted = true\n"));
}

#[test]
fn sdual_domain_error_cites_the_restriction() {
    let err = commands::sdual_cmd("z^2", "composite", None, &frozen()).unwrap_err();
    assert!(matches!(err, CommandError::Domain(_)));
    assert!(err.to_string().starts_with("this map cannot be defined everywhere"));
    assert!(commands::sdual_cmd("w1", "nope", None, &frozen()).is_err());
}

#[test]
fn calculus_verbs() {
    let bg = BackgroundDescriptor::standard();
    assert_eq!(commands::parse_cmd("Dw2^Dw1", &bg).unwrap().text, "-Dw1^Dw2\n");
    assert_eq!(commands::sn_cmd("Dw1^Dw2", "w1", &bg).unwrap().text, "Dw2\n");
    assert_eq!(commands::div_cmd("w1*Dw1", &bg).unwrap().text, "1\n");
    assert_eq!(commands::dolbeault_cmd("w1~", &bg).unwrap().text, "dbw1\n");
    let c5 = commands::background(Some("C5B")).unwrap();
    assert_eq!(commands::parse_cmd("u*Du", &c5).unwrap().text, "u*Du\n");
    assert!(commands::background(Some("Q7")).is_err());
}

#[test]
fn comap_on_both_branes() {
    assert_eq!(commands::comap_cmd("w1", "d3").unwrap().text, "d[e1]\n");
    assert_eq!(commands::comap_cmd("z*w2", "d5").unwrap().text, "z*d[e2]\n");
    assert!(commands::comap_cmd("w1", "d7").is_err());
}

#[test]
fn qcoh_summary() {
    let out = commands::qcoh_cmd().unwrap();
    assert!(out.text.starts_with("siso = (55|32)\ncohomology = (39|16)\nstab = 34\n"));
    assert!(out.text.contains("kernel_on_spinors = 27\n"));
    assert!(out.text.contains("res a1 [V] = Dz1\n"));
}

#[test]
fn verify_writes_text_and_json_reports() {
    let dir = std::env::temp_dir().join(format!("cli-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let ctx = SuiteContext::new(3, frozen());
    let text_path = dir.join("clifford.txt");
    let out = commands::verify_cmd("clifford", &ctx, Some(&text_path)).unwrap();
    assert!(out.ok);
    assert_eq!(std::fs::read_to_string(&text_path).unwrap(), out.text);
    assert!(out.text.starts_with("suite = clifford\nseed = 3\n"));
    let json_path = dir.join("clifford.json");
    commands::verify_cmd("clifford", &ctx, Some(&json_path)).unwrap();
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(value["suite"], "clifford");
    assert_eq!(value["checks"][0]["status"], "pass");
    assert!(matches!(commands::verify_cmd("nope", &ctx, None), Err(CommandError::Suite(_))));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn every_check_carries_an_anchor() {
    let r = SuiteRegistry::standard().run("all", &SuiteContext::new(1, frozen())).unwrap();
    assert_eq!(SuiteRegistry::standard().names(), ["calculus", "further_twist", "duality", "d3", "appendix", "omega", "clifford"]);
    assert!(r.checks.iter().all(|c| !c.anchor.is_empty() && !c.suite.is_empty()));
    assert!(r.passed());
}

#[test]
fn flipped_sign_fails_with_witness() {
    let mut signs = frozen();
    signs.set("c3_z4", 0, 1);
    let r = SuiteRegistry::standard().run("duality", &SuiteContext::new(0, signs)).unwrap();
    assert!(!r.passed());
    let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    assert!(failed.contains(&"sdual_w1") && failed.contains(&"signs_match_recalibration"));
    let w1 = r.checks.iter().find(|c| c.name == "sdual_w1").unwrap();
    assert_eq!(w1.witness.as_deref(), Some("printed Dz^Dw2 against golden -Dz^Dw2"));
    assert!(r.to_string().contains("[fail] duality.sdual_w1"));
}
