//! Fixtures shared by the benchmarks.

use cubic_torsion::{make_field, FieldSpec, WeierstrassCurve};

/// Levels ruled out for cubic fields at `p = 3`.
pub const CUBIC_LEVELS: [u64; 4] = [22, 25, 40, 49];

/// `(p, n)` for the fields benchmarked in point counting.
pub const COUNT_FIELDS: [(u64, u32); 4] = [(3, 3), (2, 4), (5, 2), (31, 1)];

/// `y^2 + a1 xy = x^3 + x + a6` over `GF(p^n)` with the least `a6 >= 1` that
/// makes it nonsingular; `a1 = 1` in characteristic 2.
pub fn sample_curve(p: u64, n: u32) -> (FieldSpec, WeierstrassCurve) {
    let field = make_field(p, n).expect("benchmark fields are valid");
    let a1 = i64::from(p == 2);
    let curve = (1..)
        .map(|a6| WeierstrassCurve::from_ints(field, [a1, 0, 0, 1, a6]))
        .find(|e| !e.is_singular())
        .expect("some a6 gives a nonsingular curve");
    (field, curve)
}
