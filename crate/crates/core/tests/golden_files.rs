use std::path::Path;

use fjl_core::kernel::golden::golden_proofs;
use fjl_core::kernel::{check_derivation, parse_derivation, ConstantSpecification};
use fjl_core::models::FittingModel;
use fjl_core::TruthValue;

fn path(rel: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}

#[test]
fn shipped_proofs_match_the_generator() {
    let proofs = golden_proofs();
    assert_eq!(proofs.len(), 16);
    for g in proofs {
        let text = std::fs::read_to_string(path("golden").join(&g.file)).unwrap();
        assert_eq!(text, g.text, "{} is stale; regenerate with `fjl golden --dir crates/core/golden`", g.file);
    }
}

#[test]
fn shipped_proofs_conclude_their_headers() {
    for g in golden_proofs() {
        let d = parse_derivation(&g.text, &g.logic).unwrap();
        let report = check_derivation(&d, &g.logic, &ConstantSpecification::empty()).unwrap();
        let header = g.text.lines().next().unwrap().strip_prefix("// conclusion: ").unwrap();
        assert_eq!(report.conclusion, header.parse().unwrap(), "{}", g.file);
    }
}

#[test]
fn shipped_models_load() {
    let text = std::fs::read_to_string(path("models/justified-box.json")).unwrap();
    let m = FittingModel::from_json(&text).unwrap();
    // min(1, 7/10) combined with evidence 9/10: 9/10 + 7/10 - 1
    assert_eq!(m.eval("w0", &"t:p".parse().unwrap()).unwrap(), TruthValue::ratio(3, 5));
    let text = std::fs::read_to_string(path("models/reflexive-pair.json")).unwrap();
    let m = FittingModel::from_json(&text).unwrap();
    assert!(m.is_reflexive());
    // Goedel: min(1/2, min over w0 and w1 of p) = min(1/2, 1/3)
    assert_eq!(m.eval("w0", &"t:p".parse().unwrap()).unwrap(), TruthValue::ratio(1, 3));
}
