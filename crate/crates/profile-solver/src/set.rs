//! The assembled profile bundle for one α.

use numerics_core::{Grid, GridFunction};
use soliton::SolitonField;

use crate::classes::DecayClass;
use crate::forcing::{build_F_and_Omega, solve_c2_and_A3};
use crate::profiles::{build_A1, build_A2_A2star, build_P, build_R, c1, kappa_alpha};
use crate::{forcing::build_F2_pair, Result};

/// A profile together with the tail class it is required to live in.
#[derive(Debug, Clone)]
pub struct ClassifiedProfile {
    pub values: GridFunction,
    pub class: DecayClass,
}

/// Every profile correction, forcing field and scalar constant for one α.
#[derive(Debug, Clone)]
pub struct ProfileSet {
    pub alpha: f64,
    pub c1: f64,
    pub c2: f64,
    pub kappa_alpha: f64,
    pub r: ClassifiedProfile,
    pub p: ClassifiedProfile,
    pub a1: ClassifiedProfile,
    pub a2: ClassifiedProfile,
    pub a2star: ClassifiedProfile,
    pub a3: ClassifiedProfile,
    pub f2: GridFunction,
    pub f2star: GridFunction,
    pub f3: GridFunction,
    pub omega: GridFunction,
}

impl ProfileSet {
    /// Run the whole construction pipeline in dependency order.
    pub fn build(field: &SolitonField, alpha: f64) -> Result<ProfileSet> {
        let r = build_R(field)?;
        let p = build_P(field)?;
        let a1 = build_A1(field, &r, &p)?;
        let (f2, f2star) = build_F2_pair(field, alpha, &a1)?;
        let (a2, a2star) = build_A2_A2star(field, &f2, &f2star)?;
        let forcings = build_F_and_Omega(field, alpha, &p, &a1, &a2, &a2star)?;
        let (c2, a3) = solve_c2_and_A3(field, &forcings.f3, &forcings.omega)?;
        Ok(ProfileSet {
            alpha,
            c1: c1(alpha),
            c2,
            kappa_alpha: kappa_alpha(alpha),
            r: ClassifiedProfile { values: r, class: DecayClass::Y },
            p: ClassifiedProfile { values: p, class: DecayClass::Z0Minus },
            a1: ClassifiedProfile { values: a1, class: DecayClass::Z0 },
            a2: ClassifiedProfile { values: a2, class: DecayClass::Y },
            a2star: ClassifiedProfile { values: a2star, class: DecayClass::Y },
            a3: ClassifiedProfile { values: a3, class: DecayClass::Z1Minus },
            f2: forcings.f2,
            f2star: forcings.f2star,
            f3: forcings.f3,
            omega: forcings.omega,
        })
    }

    pub fn grid(&self) -> Grid {
        self.r.values.grid()
    }
}
