//! Regenerates data/golden_constants.json: the matched constant c₂ on the
//! production grid and on a step-halved grid, per α. Run from the crate
//! root; the committed file is the reference the test suite checks against.

use std::path::Path;

use numerics_core::Grid;
use profile_solver::{write_golden_constants, GoldenConstants, GoldenEntry, ProfileSet};
use soliton::eval_Q;

fn main() {
    let coarse = eval_Q(Grid::symmetric(40.0, 16001).unwrap()).unwrap();
    let fine = eval_Q(Grid::symmetric(40.0, 32001).unwrap()).unwrap();
    let mut entries = Vec::new();
    for alpha in [1.5, 2.0, 3.0] {
        let c2 = ProfileSet::build(&coarse, alpha).unwrap().c2;
        let c2_refined = ProfileSet::build(&fine, alpha).unwrap().c2;
        let relative_drift = (c2 - c2_refined).abs() / c2.abs();
        println!("alpha {alpha}: c2 {c2:.17e}  refined {c2_refined:.17e}  drift {relative_drift:.3e}");
        entries.push(GoldenEntry { alpha, c2, c2_refined, relative_drift });
    }
    let golden = GoldenConstants {
        created: "2026-08-14".into(),
        method: "banded collocation on [-40, 40], n = 16001 against n = 32001".into(),
        entries,
    };
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/golden_constants.json");
    std::fs::create_dir_all(path.parent().unwrap()).unwrap();
    write_golden_constants(&golden, &path).unwrap();
    println!("wrote {}", path.display());
}
