//! Exported artifacts must reproduce the in-memory values exactly: the
//! CSV and JSON writers use shortest round-trip float formatting, so a
//! load immediately after a write is bit-for-bit.

use std::path::PathBuf;

use profile_solver::{
    load_golden_constants, load_profile_csv, write_golden_constants, write_profile_csv,
    write_profile_header, GoldenConstants, GoldenEntry, ProfileHeader, ProfileSet,
};
use soliton::{eval_Q, SolitonField};

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("profile-solver-{}-{name}", std::process::id()))
}

fn small_set() -> (SolitonField, ProfileSet) {
    let field = eval_Q(numerics_core::Grid::symmetric(40.0, 4001).unwrap()).unwrap();
    let set = ProfileSet::build(&field, 2.0).unwrap();
    (field, set)
}

#[test]
fn csv_round_trip_is_exact() {
    let (_, set) = small_set();
    let path = scratch("profiles.csv");
    write_profile_csv(&set, &path).unwrap();
    let rows = load_profile_csv(&path).unwrap();
    let grid = set.grid();
    assert_eq!(rows.len(), grid.n());
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row[0], grid.point(i));
        assert_eq!(row[1], set.r.values.values()[i]);
        assert_eq!(row[2], set.p.values.values()[i]);
        assert_eq!(row[3], set.a1.values.values()[i]);
        assert_eq!(row[4], set.a2.values.values()[i]);
        assert_eq!(row[5], set.a2star.values.values()[i]);
        assert_eq!(row[6], set.a3.values.values()[i]);
    }
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn header_records_the_build() {
    let (_, set) = small_set();
    let path = scratch("header.json");
    write_profile_header(&set, &path).unwrap();
    let header: ProfileHeader =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(header.alpha, set.alpha);
    assert_eq!(header.c2, set.c2);
    assert_eq!(header.kappa_alpha, set.kappa_alpha);
    assert_eq!(header.grid.n, set.grid().n());
    assert_eq!(header.grid.h, set.grid().h());
    assert_eq!(header.grid.x_min, set.grid().x_min());
    assert_eq!(header.grid.x_max, set.grid().x_max());
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn golden_constants_round_trip_is_exact() {
    let golden = GoldenConstants {
        created: "test".into(),
        method: "round-trip".into(),
        entries: vec![
            GoldenEntry { alpha: 1.5, c2: -46.25, c2_refined: -46.25, relative_drift: 0.0 },
            GoldenEntry {
                alpha: 2.0,
                c2: -77.123889773209669,
                c2_refined: -77.123889773209739,
                relative_drift: 9.1e-16,
            },
        ],
    };
    let path = scratch("golden.json");
    write_golden_constants(&golden, &path).unwrap();
    let back = load_golden_constants(&path).unwrap();
    assert_eq!(back.created, golden.created);
    assert_eq!(back.method, golden.method);
    assert_eq!(back.entries.len(), 2);
    for (a, b) in back.entries.iter().zip(&golden.entries) {
        assert_eq!(a.alpha, b.alpha);
        assert_eq!(a.c2, b.c2);
        assert_eq!(a.c2_refined, b.c2_refined);
        assert_eq!(a.relative_drift, b.relative_drift);
    }
    assert!(back.entry(2.0).is_some());
    assert!(back.entry(2.5).is_none());
    std::fs::remove_file(&path).unwrap();
}
