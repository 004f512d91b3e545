//! The committed golden constants must match a live build of the same
//! pipeline on the same grid. A drift here means the numerics changed;
//! regenerate with the generate_golden example only after diagnosing why.

use std::path::Path;

use profile_solver::{load_golden_constants, ProfileSet};
use soliton::SolitonField;

#[test]
fn committed_constants_match_a_live_build() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/golden_constants.json");
    let golden = load_golden_constants(&path).unwrap();
    let field = SolitonField::standard().unwrap();
    for alpha in [1.5, 2.0, 3.0] {
        let entry = golden.entry(alpha).expect("entry present");
        assert!(entry.relative_drift < 1e-5, "recorded drift too large");
        let live = ProfileSet::build(&field, alpha).unwrap().c2;
        let rel = (live - entry.c2).abs() / entry.c2.abs();
        assert!(rel <= 1e-12, "alpha {alpha}: live c2 {live:.17e} vs {:.17e}", entry.c2);
    }
}
