//! End-to-end identities of the profile pipeline on the production grid.
//! Everything is measured on one shared build per α so the scalar
//! identities are known to hold simultaneously on the same grid.

use std::sync::OnceLock;

use numerics_core::{derivative, inner_product, GridFunction};
use profile_solver::{c1, kappa_alpha, outer_sup, DecayClass, ProfileSet};
use soliton::{apply_L, apply_Lambda, golden, SolitonField};

const ALPHAS: [f64; 3] = [1.5, 2.0, 3.0];

fn fixture() -> &'static (SolitonField, Vec<ProfileSet>) {
    static SETS: OnceLock<(SolitonField, Vec<ProfileSet>)> = OnceLock::new();
    SETS.get_or_init(|| {
        let field = SolitonField::standard().expect("default grid");
        let sets = ALPHAS
            .iter()
            .map(|&a| ProfileSet::build(&field, a).expect("pipeline"))
            .collect();
        (field, sets)
    })
}

/// Sup norm away from the endpoint rows.
fn interior_sup(f: &GridFunction, margin: f64) -> f64 {
    let grid = f.grid();
    let mut worst: f64 = 0.0;
    for (i, y) in grid.points().enumerate() {
        if y >= grid.x_min() + margin && y <= grid.x_max() - margin {
            worst = worst.max(f.values()[i].abs());
        }
    }
    worst
}

/// Sup of |f| on y ≥ from (one-sided right tail).
fn right_tail_sup(f: &GridFunction, from: f64) -> f64 {
    let grid = f.grid();
    let mut worst: f64 = 0.0;
    for (i, y) in grid.points().enumerate() {
        if y >= from {
            worst = worst.max(f.values()[i].abs());
        }
    }
    worst
}

#[test]
fn scalar_identities_hold_simultaneously() {
    let (field, sets) = fixture();
    let q = field.q();
    let q5 = q.map(|v| v.powi(5));
    let m0 = field.m0();
    for set in sets {
        let p = &set.p.values;
        let a1 = &set.a1.values;

        let pq = inner_product(p, q).unwrap();
        assert!((pq - m0 * m0).abs() < 1e-6, "({pq})");
        assert!((pq - golden::M0_SQ).abs() < 1e-6);

        let pq5 = inner_product(p, &q5).unwrap();
        assert!((pq5 + m0 * m0).abs() < 1e-6);

        // (−½P + yP′ + 20(Q³A₁P)′, Q) equals the same m₀².
        let dp = derivative(p, 1).unwrap();
        let q3a1p = q
            .zip_with(a1, |qv, av| qv.powi(3) * av)
            .unwrap()
            .zip_with(p, |x, pv| x * pv)
            .unwrap();
        let dq3a1p = derivative(&q3a1p, 1).unwrap();
        let grid = p.grid();
        let mut comb = p.scale(-0.5);
        for (i, v) in comb.values_mut().iter_mut().enumerate() {
            *v += grid.point(i) * dp.values()[i] + 20.0 * dq3a1p.values()[i];
        }
        let idv = inner_product(&comb, q).unwrap();
        assert!((idv - m0 * m0).abs() < 1e-6, "({idv})");

        let omega_q = inner_product(&set.omega, q).unwrap();
        assert!((omega_q + 2.0 * m0 * m0).abs() < 1e-6, "alpha {} ({omega_q})", set.alpha);

        assert!(inner_product(a1, q).unwrap().abs() < 1e-7);
        assert!(inner_product(a1, field.dq()).unwrap().abs() < 1e-7);
    }
}

#[test]
fn r_is_even_decaying_and_solves_its_equation() {
    let (field, sets) = fixture();
    let r = &sets[0].r.values;
    assert!(r.even_defect() < 1e-8);
    // 𝓛R = −5Q⁴, the sign that makes 𝓛(1−R) = 1.
    let rhs = field.q().map(|q| -5.0 * q.powi(4));
    let res = apply_L(field, r).unwrap().add_scaled(-1.0, &rhs).unwrap();
    assert!(interior_sup(&res, 1.0) < 1e-7);
    assert!(outer_sup(r, 35.0) < 1e-10);
    // Closed-form pairing: (R, Q) = 3m₀.
    let rq = inner_product(r, field.q()).unwrap();
    assert!((rq - 3.0 * field.m0()).abs() < 1e-9, "({rq})");
}

#[test]
fn p_reaches_its_far_field_limits() {
    let (field, sets) = fixture();
    let p = &sets[0].p.values;
    let n = p.grid().n();
    assert!((p.values()[0] - 2.0 * field.m0()).abs() < 1e-6);
    assert!(p.values()[n - 1].abs() < 1e-8);
    // (𝓛P)′ = ΛQ away from the endpoint rows.
    let dlp = derivative(&apply_L(field, p).unwrap(), 1).unwrap();
    let res = dlp.add_scaled(-1.0, &field.lambda_q()).unwrap();
    assert!(interior_sup(&res, 1.0) < 1e-6);
    assert!((inner_product(p, field.dq()).unwrap()).abs() < 1e-9);
}

#[test]
fn a1_is_odd_with_exact_limits() {
    let (field, sets) = fixture();
    let a1 = &sets[0].a1.values;
    let grid = a1.grid();
    let m0 = field.m0();
    assert!(a1.odd_defect() < 1e-6);
    assert!((a1.values()[grid.nearest_index(-35.0)] - m0).abs() < 1e-9);
    assert!((a1.values()[grid.nearest_index(35.0)] + m0).abs() < 1e-9);
}

#[test]
fn forcings_have_stated_parity_and_tails() {
    let (field, sets) = fixture();
    for set in sets {
        assert!(set.f2.odd_defect() < 1e-6);
        assert!(set.f2star.odd_defect() < 1e-6);
        assert!(set.f3.even_defect() < 1e-6);
        assert!(outer_sup(&set.f2, 35.0) < 1e-9);
        assert!(outer_sup(&set.f2star, 35.0) < 1e-9);
        assert!(outer_sup(&set.f3, 35.0) < 1e-9);
        // Ω settles to (2α+1)m₀ on the left and decays on the right.
        let grid = set.omega.grid();
        let left = set.omega.values()[grid.nearest_index(-35.0)];
        assert!((left - (2.0 * set.alpha + 1.0) * field.m0()).abs() < 1e-9);
        assert!(right_tail_sup(&set.omega, 35.0) < 1e-9);
    }
}

#[test]
fn second_order_pair_solves_its_equations() {
    let (field, sets) = fixture();
    for set in sets {
        for (a, f) in [(&set.a2, &set.f2), (&set.a2star, &set.f2star)] {
            assert!(a.values.even_defect() < 1e-6);
            let dla = derivative(&apply_L(field, &a.values).unwrap(), 1).unwrap();
            let res = dla.add_scaled(-1.0, f).unwrap();
            assert!(
                interior_sup(&res, 1.0) < 1e-6,
                "alpha {} residual {:.3e}",
                set.alpha,
                interior_sup(&res, 1.0)
            );
            assert!(outer_sup(&a.values, 35.0) < 1e-9);
        }
    }
}

#[test]
fn c2_makes_the_combined_forcing_orthogonal() {
    let (field, sets) = fixture();
    for set in sets {
        let s = set.f3.add_scaled(set.c2, &set.omega).unwrap();
        let sq = inner_product(&s, field.q()).unwrap();
        assert!(sq.abs() < 1e-8, "alpha {} ({sq})", set.alpha);
    }
}

#[test]
fn a3_solves_its_equation_in_backward_error() {
    let (field, sets) = fixture();
    for set in sets {
        let s = set.f3.add_scaled(set.c2, &set.omega).unwrap();
        let la3 = apply_L(field, &set.a3.values).unwrap();
        let dla3 = derivative(&la3, 1).unwrap();
        let grid = s.grid();
        // A₃ tracks an antiderivative that grows linearly to the left, so
        // the equation data reaches O(|c₂|·L); the residual is judged
        // pointwise against the local magnitude of the equation.
        let mut worst: f64 = 0.0;
        for (i, y) in grid.points().enumerate() {
            if y >= grid.x_min() + 1.0 && y <= grid.x_max() - 1.0 {
                let r = (dla3.values()[i] - s.values()[i]).abs();
                let scale = 1.0 + s.values()[i].abs() + la3.values()[i].abs();
                worst = worst.max(r / scale);
            }
        }
        assert!(worst < 1e-6, "alpha {} scaled residual {worst:.3e}", set.alpha);
    }
}

#[test]
fn profiles_sit_in_their_decay_classes() {
    let (_, sets) = fixture();
    for set in sets {
        assert!(set.r.class.defect(&set.r.values, 3.0).unwrap() < 1e-9);
        assert!(set.p.class.defect(&set.p.values, 3.0).unwrap() < 1e-10);
        assert!(set.a1.class.defect(&set.a1.values, 3.0).unwrap() < 1e-10);
        assert!(set.a2.class.defect(&set.a2.values, 3.0).unwrap() < 1e-9);
        assert!(set.a2star.class.defect(&set.a2star.values, 3.0).unwrap() < 1e-9);
        assert!(set.a3.class.defect(&set.a3.values, 3.0).unwrap() < 1e-6);
    }
}

#[test]
fn lambda_maps_respect_the_class_ladder() {
    let (_, sets) = fixture();
    for set in sets {
        // Λ₁ of the bounded-limit A₁ decays on both sides.
        let lam1a1 = apply_Lambda(1, &set.a1.values).unwrap();
        assert!(outer_sup(&lam1a1, 30.0) < 1e-8);
        // Λ₃A₃ settles to a constant on the left and decays on the right;
        // measured relative to its own magnitude, which grows with L.
        let lam3a3 = apply_Lambda(3, &set.a3.values).unwrap();
        let defect = DecayClass::Z0Minus.defect(&lam3a3, 3.0).unwrap();
        assert!(defect / (1.0 + lam3a3.sup_norm()) < 1e-6);
    }
}

#[test]
fn constants_are_wired_through() {
    let (_, sets) = fixture();
    for (set, alpha) in sets.iter().zip(ALPHAS) {
        assert_eq!(set.alpha, alpha);
        assert_eq!(set.c1, c1(alpha));
        assert_eq!(set.c1, -(2.0 * alpha + 1.0));
        assert_eq!(set.kappa_alpha, kappa_alpha(alpha));
        assert!(set.c2 < 0.0, "c₂ is negative for every α here");
    }
}
