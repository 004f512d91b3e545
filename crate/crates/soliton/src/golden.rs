//! Frozen reference constants, produced by an arbitrary-precision oracle
//! (30-digit adaptive quadrature over the full line, cross-checked against
//! the closed forms where one exists) and rounded to f64. Tests compare
//! grid-level computations against these values; nothing here is derived
//! from the code under test.

/// ∫Q dy.
pub const INTEGRAL_Q: f64 = 3.450821807669628;
/// m₀ = (1/4)∫Q.
pub const M0: f64 = 0.862705451917407;
/// m₀².
pub const M0_SQ: f64 = 0.7442606967680174;
/// ∫Q² = √3·π/2.
pub const INTEGRAL_Q2: f64 = 2.720699046351327;
/// ∫Q⁴ = 3 exactly (sech² integrates in closed form).
pub const INTEGRAL_Q4: f64 = 3.0;
/// ∫Q⁶ = 3^{3/2}·π/4.
pub const INTEGRAL_Q6: f64 = 4.08104856952699;
/// ∫(Q′)² = √3·π/4; equals (1/3)∫Q⁶ (sharp Gagliardo–Nirenberg case).
pub const INTEGRAL_DQ2: f64 = 1.3603495231756635;
/// ∫(ΛQ)² with ΛQ = Q/2 + yQ′.
pub const INTEGRAL_LAMBDA_Q2: f64 = 0.8391319775596461;
/// Q(0) = 3^{1/4}.
pub const Q_AT_ZERO: f64 = 1.3160740129524924;
