//! Columnar CSV serialization of a profile set, the JSON sidecar header,
//! and the golden-constants file shared with the command-line tools.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::set::ProfileSet;
use crate::Result;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridMeta {
    pub x_min: f64,
    pub x_max: f64,
    pub n: usize,
    pub h: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ToleranceBlock {
    pub residual: f64,
    pub identity: f64,
}

/// Sidecar metadata for one exported profile set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProfileHeader {
    pub alpha: f64,
    pub c2: f64,
    pub kappa_alpha: f64,
    pub grid: GridMeta,
    pub tolerances: ToleranceBlock,
}

/// One α entry of the golden-constants file: the value at the working
/// resolution and its re-derivation at doubled resolution.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GoldenEntry {
    pub alpha: f64,
    pub c2: f64,
    pub c2_refined: f64,
    pub relative_drift: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GoldenConstants {
    pub created: String,
    pub method: String,
    pub entries: Vec<GoldenEntry>,
}

impl GoldenConstants {
    pub fn entry(&self, alpha: f64) -> Option<&GoldenEntry> {
        self.entries.iter().find(|e| (e.alpha - alpha).abs() < 1e-12)
    }
}

/// Write the columns y, R, P, A₁, A₂, A₂*, A₃.
pub fn write_profile_csv(set: &ProfileSet, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["y", "R", "P", "A1", "A2", "A2star", "A3"])?;
    let grid = set.grid();
    for (i, y) in grid.points().enumerate() {
        w.serialize((
            y,
            set.r.values.values()[i],
            set.p.values.values()[i],
            set.a1.values.values()[i],
            set.a2.values.values()[i],
            set.a2star.values.values()[i],
            set.a3.values.values()[i],
        ))?;
    }
    w.flush()?;
    Ok(())
}

/// Read back the seven columns written by `write_profile_csv`.
pub fn load_profile_csv(path: &Path) -> Result<Vec<[f64; 7]>> {
    let mut r = csv::Reader::from_path(path)?;
    let mut rows = Vec::new();
    for record in r.deserialize() {
        let row: (f64, f64, f64, f64, f64, f64, f64) = record?;
        rows.push([row.0, row.1, row.2, row.3, row.4, row.5, row.6]);
    }
    Ok(rows)
}

pub fn write_profile_header(set: &ProfileSet, path: &Path) -> Result<()> {
    let grid = set.grid();
    let header = ProfileHeader {
        alpha: set.alpha,
        c2: set.c2,
        kappa_alpha: set.kappa_alpha,
        grid: GridMeta { x_min: grid.x_min(), x_max: grid.x_max(), n: grid.n(), h: grid.h() },
        tolerances: ToleranceBlock { residual: 1e-7, identity: 1e-6 },
    };
    std::fs::write(path, serde_json::to_string_pretty(&header)?)?;
    Ok(())
}

pub fn write_golden_constants(golden: &GoldenConstants, path: &Path) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(golden)?)?;
    Ok(())
}

pub fn load_golden_constants(path: &Path) -> Result<GoldenConstants> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}
