//! One line per acceptance criterion; every comparison is exact.

use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::Instant;

use cli_verify::sampling;
use cli_verify::suites::duality_anchors;
use cli_verify::{parse, print, Report, Status, SuiteContext, SuiteRegistry};
use field_spaces::BackgroundDescriptor;

const SEED: u64 = 0;
const ROUND_TRIPS: usize = 500;
const SUITE_BUDGET_SECS: u64 = 60;

type Criterion = (&'static str, Box<dyn Fn() -> Result<String, String>>);

fn report() -> &'static Report {
    static R: OnceLock<Report> = OnceLock::new();
    R.get_or_init(|| SuiteRegistry::standard().run("all", &SuiteContext::new(SEED, duality_engine::SignConventionFile::frozen())).unwrap())
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

/// Each named check passed and ran at least `min` instances when sampled.
fn checks(spec: &[(&str, usize)]) -> Result<String, String> {
    let r = report();
    let mut seen = Vec::new();
    for (id, min) in spec {
        let c = r.checks.iter().find(|c| format!("{}.{}", c.suite, c.name) == *id).ok_or(format!("{} missing", id))?;
        if c.status != Status::Pass {
            return Err(format!("{} failed: {}", id, c.witness.clone().unwrap_or_default()));
        }
        let n: usize = c.detail.as_deref().and_then(|d| d.strip_suffix(" instances")).and_then(|d| d.parse().ok()).unwrap_or(1);
        if n < *min {
            return Err(format!("{} ran {} instances, needs {}", id, n, min));
        }
        seen.push(if *min > 1 { format!("{} x{}", id, n) } else { id.to_string() });
    }
    Ok(seen.join(", "))
}

fn criterion_1() -> Result<String, String> {
    let reg = BackgroundDescriptor::standard().registry();
    let files = ["sdual_w1.txt", "sdual_zw2.txt", "sdual_w1w2.txt"];
    for ((_, expected), file) in duality_anchors(&reg).iter().zip(files) {
        let text = golden(file);
        if print(expected) != text.trim_end() {
            return Err(format!("golden {} holds {:?}, hand-built expectation prints {:?}", file, text, print(expected)));
        }
    }
    checks(&[("duality.sdual_w1", 1), ("duality.sdual_zw2", 1), ("duality.sdual_w1w2", 1)])
}

fn criterion_10() -> Result<String, String> {
    let reg = BackgroundDescriptor::standard().registry();
    let mut rng = sampling::rng(SEED, 10);
    for k in 0..ROUND_TRIPS {
        let m = sampling::printable(&mut rng, &reg);
        let text = print(&m);
        match parse(&text, &reg) {
            Ok(back) if back == m => {}
            Ok(back) => return Err(format!("instance {}: {} reparsed as {}", k, text, print(&back))),
            Err(e) => return Err(format!("instance {}: {} fails to parse: {}", k, text, e)),
        }
    }
    let ctx = SuiteContext::new(SEED, duality_engine::SignConventionFile::frozen());
    let again = SuiteRegistry::standard().run("all", &ctx).map_err(|e| e.to_string())?;
    if again.to_string() != report().to_string() || again.to_json() != report().to_json() {
        return Err("report bytes differ between two runs with the same seed".into());
    }
    Ok(format!("{} round trips, report bytes stable", ROUND_TRIPS))
}

#[test]
fn acceptance() {
    let start = Instant::now();
    report();
    let suite_secs = start.elapsed().as_secs();
    let criteria: Vec<Criterion> = vec![
        ("duality dictionary against golden files", Box::new(criterion_1)),
        (
            "composite equals the signed closed form, and S o S on the same sample",
            Box::new(|| checks(&[("duality.composite_matches_closed_form", 200), ("duality.composite_squares_to_circle_negation", 200)])),
        ),
        (
            "calculus identities",
            Box::new(|| {
                checks(&[
                    ("calculus.divergence_squares_to_zero", 100),
                    ("calculus.dbar_squares_to_zero", 100),
                    ("calculus.divergence_anticommutes_with_dbar", 100),
                    ("calculus.bracket_jacobi", 100),
                    ("calculus.bracket_leibniz", 100),
                    ("calculus.homotopy_identity", 100),
                ])
            }),
        ),
        (
            "reduction along the M-theory circle",
            Box::new(|| {
                checks(&[
                    ("duality.reduction_is_chain_map", 100),
                    ("duality.bracket_law_both_em", 100),
                    ("duality.bracket_law_one_em", 100),
                    ("duality.bracket_law_no_em", 100),
                    ("duality.reduction_round_trip", 100),
                ])
            }),
        ),
        (
            "D3 sourced field",
            Box::new(|| {
                checks(&[
                    ("d3.kernel_is_divergence_free", 1),
                    ("d3.kernel_commutes_with_pi", 1),
                    ("d3.kernel_is_dbar_closed", 1),
                    ("d3.sdual_fixes_field", 1),
                    ("d3.sdual_moves_mutated_field", 1),
                ])
            }),
        ),
        (
            "residual supersymmetry",
            Box::new(|| {
                checks(&[
                    ("appendix.supercharge_squares_to_zero", 1),
                    ("appendix.cohomology_dimensions", 1),
                    ("appendix.image_in_translations", 1),
                    ("appendix.kernel_on_spinors", 1),
                    ("appendix.image_from_so10", 1),
                    ("appendix.stabilizer_dimension", 1),
                    ("appendix.res_bracket_mismatch", 1),
                ])
            }),
        ),
        (
            "omega-background commutators",
            Box::new(|| checks(&[("omega.rotation_generator", 1), ("omega.commutator_ht_b", 1), ("omega.commutator_ht_a", 1)])),
        ),
        (
            "Clifford deformation",
            Box::new(|| {
                checks(&[
                    ("clifford.associative", 1),
                    ("clifford.unital", 1),
                    ("clifford.center", 1),
                    ("clifford.representation_homomorphism", 1),
                    ("clifford.representation_rank", 1),
                    ("clifford.matrix_units", 1),
                ])
            }),
        ),
        (
            "contractions",
            Box::new(|| checks(&[("omega.contraction_kernel", 1), ("omega.contraction_cokernel", 1), ("omega.d3_survivors", 1)])),
        ),
        ("parser round trip and report determinism", Box::new(criterion_10)),
    ];
    let mut failed = Vec::new();
    for (k, (title, run)) in criteria.iter().enumerate() {
        let verdict = run();
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        println!("criterion {:>2} [{}] {} | tolerance = exact | {}", k + 1, tag, title, detail);
        if verdict.is_err() {
            failed.push(k + 1);
        }
    }
    let budget = suite_secs <= SUITE_BUDGET_SECS;
    println!("suites ran in {} s against a budget of {} s", suite_secs, SUITE_BUDGET_SECS);
    assert!(failed.is_empty(), "criteria failed: {:?}", failed);
    assert!(budget);
}
