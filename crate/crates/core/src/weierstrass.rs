//! Long Weierstrass curves over `GF(q)`.
//!
//! `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`. The group law is the
//! general chord-tangent law, so characteristics 2 and 3 need no special
//! model. Point counting and group structure are exhaustive; every curve here
//! has at most a few dozen points.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::gf::{FieldElement, FieldError, FieldSpec};
use crate::table::FieldTable;

/// Largest field order accepted by [`enumerate_curves`].
pub const ENUMERATION_CAP: u32 = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("curve is singular (discriminant is zero)")]
    Singular,
    #[error("point {0} does not lie on the curve")]
    NotOnCurve(Box<CurvePoint>),
    #[error("field order {0} exceeds the enumeration cap {cap}", cap = ENUMERATION_CAP)]
    EnumerationCapExceeded(u32),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: FieldElement, y: FieldElement },
}

impl CurvePoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Structure `Z/d1 x Z/d2` of the rational points, with `d1 | d2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupShape {
    pub d1: u64,
    pub d2: u64,
}

impl GroupShape {
    pub fn order(&self) -> u64 {
        self.d1 * self.d2
    }

    /// Group exponent.
    pub fn exponent(&self) -> u64 {
        self.d2
    }

    /// Trace of Frobenius `q + 1 - |E|`.
    pub fn trace(&self, q: u64) -> i64 {
        q as i64 + 1 - self.order() as i64
    }

    pub fn is_cyclic(&self) -> bool {
        self.d1 == 1
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d1 == 1 {
            write!(f, "Z/{}", self.d2)
        } else {
            write!(f, "Z/{} x Z/{}", self.d1, self.d2)
        }
    }
}

/// A Weierstrass equation over a fixed field.
///
/// Construction accepts singular equations so that [`discriminant`] can be
/// asked of any coefficient tuple; the group-law and counting operations
/// reject them with [`CurveError::Singular`].
///
/// [`discriminant`]: WeierstrassCurve::discriminant
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    field: FieldSpec,
    a1: FieldElement,
    a2: FieldElement,
    a3: FieldElement,
    a4: FieldElement,
    a6: FieldElement,
    disc: FieldElement,
}

impl WeierstrassCurve {
    /// Coefficients in the order `[a1, a2, a3, a4, a6]`.
    pub fn new(field: FieldSpec, coeffs: [FieldElement; 5]) -> Result<Self, CurveError> {
        for c in &coeffs {
            field.ensure_contains(c)?;
        }
        let [a1, a2, a3, a4, a6] = coeffs;
        let mut curve = WeierstrassCurve {
            field,
            a1,
            a2,
            a3,
            a4,
            a6,
            disc: field.zero(),
        };
        curve.disc = curve.compute_discriminant();
        Ok(curve)
    }

    /// Convenience constructor for integer coefficients, reduced into `F_p`.
    pub fn from_ints(field: FieldSpec, coeffs: [i64; 5]) -> Self {
        Self::new(field, coeffs.map(|c| field.from_int(c)))
            .expect("prime-subfield coefficients always belong to the field")
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coefficients(&self) -> [FieldElement; 5] {
        [self.a1, self.a2, self.a3, self.a4, self.a6]
    }

    /// `(b2, b4, b6, b8)`.
    pub fn b_invariants(&self) -> [FieldElement; 4] {
        let f = &self.field;
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let mul = |x: &FieldElement, y: &FieldElement| f.mul_raw(x, y);
        let add = |x: &FieldElement, y: &FieldElement| f.add_raw(x, y);
        let sub = |x: &FieldElement, y: &FieldElement| f.sub_raw(x, y);
        let k = |v: i64| f.from_int(v);

        let a1sq = mul(a1, a1);
        let b2 = add(&a1sq, &mul(&k(4), a2));
        let b4 = add(&mul(&k(2), a4), &mul(a1, a3));
        let b6 = add(&mul(a3, a3), &mul(&k(4), a6));
        // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2
        let mut b8 = mul(&a1sq, a6);
        b8 = add(&b8, &mul(&k(4), &mul(a2, a6)));
        b8 = sub(&b8, &mul(a1, &mul(a3, a4)));
        b8 = add(&b8, &mul(a2, &mul(a3, a3)));
        b8 = sub(&b8, &mul(a4, a4));
        [b2, b4, b6, b8]
    }

    fn compute_discriminant(&self) -> FieldElement {
        let f = &self.field;
        let [b2, b4, b6, b8] = self.b_invariants();
        let mul = |x: &FieldElement, y: &FieldElement| f.mul_raw(x, y);
        let k = |v: i64| f.from_int(v);
        // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        let t1 = f.neg_raw(&mul(&mul(&b2, &b2), &b8));
        let t2 = mul(&k(8), &mul(&b4, &mul(&b4, &b4)));
        let t3 = mul(&k(27), &mul(&b6, &b6));
        let t4 = mul(&k(9), &mul(&b2, &mul(&b4, &b6)));
        f.add_raw(&f.sub_raw(&f.sub_raw(&t1, &t2), &t3), &t4)
    }

    pub fn discriminant(&self) -> FieldElement {
        self.disc
    }

    pub fn is_singular(&self) -> bool {
        self.disc.is_zero()
    }

    fn require_nonsingular(&self) -> Result<(), CurveError> {
        if self.is_singular() {
            Err(CurveError::Singular)
        } else {
            Ok(())
        }
    }

    /// `x^3 + a2 x^2 + a4 x + a6` and `a1 x + a3`.
    fn rhs_and_linear(&self, x: &FieldElement) -> (FieldElement, FieldElement) {
        let f = &self.field;
        let x2 = f.mul_raw(x, x);
        let mut rhs = f.mul_raw(&x2, x);
        rhs = f.add_raw(&rhs, &f.mul_raw(&self.a2, &x2));
        rhs = f.add_raw(&rhs, &f.mul_raw(&self.a4, x));
        rhs = f.add_raw(&rhs, &self.a6);
        let lin = f.add_raw(&f.mul_raw(&self.a1, x), &self.a3);
        (rhs, lin)
    }

    fn on_curve_raw(&self, x: &FieldElement, y: &FieldElement) -> bool {
        let f = &self.field;
        let (rhs, lin) = self.rhs_and_linear(x);
        let lhs = f.add_raw(&f.mul_raw(y, y), &f.mul_raw(&lin, y));
        lhs == rhs
    }

    pub fn contains(&self, point: &CurvePoint) -> bool {
        match point {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                self.field.contains(x) && self.field.contains(y) && self.on_curve_raw(x, y)
            }
        }
    }

    fn check_point(&self, point: &CurvePoint) -> Result<(), CurveError> {
        if self.contains(point) {
            Ok(())
        } else {
            Err(CurveError::NotOnCurve(Box::new(*point)))
        }
    }

    /// `-(x, y) = (x, -y - a1 x - a3)`.
    pub fn negate(&self, point: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.require_nonsingular()?;
        self.check_point(point)?;
        Ok(self.neg_raw(point))
    }

    pub fn add_points(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.require_nonsingular()?;
        self.check_point(p)?;
        self.check_point(q)?;
        Ok(self.add_raw(p, q))
    }

    /// `k * P` by double-and-add; `k` may be zero or negative.
    pub fn scalar_mul(&self, k: i64, point: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.require_nonsingular()?;
        self.check_point(point)?;
        let base = if k < 0 { self.neg_raw(point) } else { *point };
        Ok(self.mul_raw(k.unsigned_abs(), &base))
    }

    fn neg_raw(&self, point: &CurvePoint) -> CurvePoint {
        match point {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                let f = &self.field;
                let (_, lin) = self.rhs_and_linear(x);
                CurvePoint::Affine {
                    x: *x,
                    y: f.neg_raw(&f.add_raw(y, &lin)),
                }
            }
        }
    }

    fn add_raw(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return *q,
            (_, CurvePoint::Infinity) => return *p,
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let f = &self.field;
        let mul = |a: &FieldElement, b: &FieldElement| f.mul_raw(a, b);
        let add = |a: &FieldElement, b: &FieldElement| f.add_raw(a, b);
        let sub = |a: &FieldElement, b: &FieldElement| f.sub_raw(a, b);
        let k = |v: i64| f.from_int(v);

        let (lambda, nu) = if x1 != x2 {
            let denom = f.inv_raw(&sub(x2, x1)).expect("x1 != x2");
            let lambda = mul(&sub(y2, y1), &denom);
            let nu = mul(&sub(&mul(y1, x2), &mul(y2, x1)), &denom);
            (lambda, nu)
        } else {
            // Same x: either Q = -P, or Q = P and we double.
            let denom = add(&add(&mul(&k(2), y1), &mul(&self.a1, x1)), &self.a3);
            if y1 != y2 || denom.is_zero() {
                return CurvePoint::Infinity;
            }
            let denom = f.inv_raw(&denom).expect("nonzero tangent denominator");
            let x1sq = mul(x1, x1);
            // (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
            let mut num = mul(&k(3), &x1sq);
            num = add(&num, &mul(&k(2), &mul(&self.a2, x1)));
            num = add(&num, &self.a4);
            num = sub(&num, &mul(&self.a1, y1));
            // (-x^3 + a4 x + 2 a6 - a3 y) / (2y + a1 x + a3)
            let mut nnum = f.neg_raw(&mul(&x1sq, x1));
            nnum = add(&nnum, &mul(&self.a4, x1));
            nnum = add(&nnum, &mul(&k(2), &self.a6));
            nnum = sub(&nnum, &mul(&self.a3, y1));
            (mul(&num, &denom), mul(&nnum, &denom))
        };
        let mut x3 = add(&mul(&lambda, &lambda), &mul(&self.a1, &lambda));
        x3 = sub(&sub(&sub(&x3, &self.a2), x1), x2);
        let y3 = sub(
            &sub(&f.neg_raw(&mul(&add(&lambda, &self.a1), &x3)), &nu),
            &self.a3,
        );
        CurvePoint::Affine { x: x3, y: y3 }
    }

    fn mul_raw(&self, mut k: u64, point: &CurvePoint) -> CurvePoint {
        let mut acc = CurvePoint::Infinity;
        let mut base = *point;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_raw(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_raw(&base, &base);
            }
        }
        acc
    }

    /// Every rational point, infinity first, then affine points by
    /// `(x, y)` index order. Found by scanning all `(x, y)` pairs.
    pub fn points(&self) -> Result<Vec<CurvePoint>, CurveError> {
        self.require_nonsingular()?;
        Ok(self.points_raw())
    }

    fn points_raw(&self) -> Vec<CurvePoint> {
        let f = &self.field;
        let mut out = vec![CurvePoint::Infinity];
        for x in f.elements() {
            let (rhs, lin) = self.rhs_and_linear(&x);
            for y in f.elements() {
                // y (y + a1 x + a3) == rhs
                if f.mul_raw(&y, &f.add_raw(&y, &lin)) == rhs {
                    out.push(CurvePoint::Affine { x, y });
                }
            }
        }
        out
    }

    /// `|E(F_q)|`, including the point at infinity.
    ///
    /// Odd characteristic completes the square,
    /// `(2y + a1 x + a3)^2 = (a1 x + a3)^2 + 4 (x^3 + a2 x^2 + a4 x + a6)`,
    /// and counts `1 + chi(D)` per `x`. Characteristic 2 scans all pairs.
    pub fn count_points(&self) -> Result<u64, CurveError> {
        self.require_nonsingular()?;
        Ok(self.count_raw())
    }

    fn count_raw(&self) -> u64 {
        let f = &self.field;
        if f.characteristic() == 2 {
            return self.count_by_scan();
        }
        let four = f.from_int(4);
        let mut count = 1;
        for x in f.elements() {
            let (rhs, lin) = self.rhs_and_linear(&x);
            let d = f.add_raw(&f.mul_raw(&lin, &lin), &f.mul_raw(&four, &rhs));
            count += if d.is_zero() {
                1
            } else if f.is_square_raw(&d) {
                2
            } else {
                0
            };
        }
        count
    }

    fn count_by_scan(&self) -> u64 {
        let f = &self.field;
        let mut count = 1;
        for x in f.elements() {
            let (rhs, lin) = self.rhs_and_linear(&x);
            for y in f.elements() {
                if f.mul_raw(&y, &f.add_raw(&y, &lin)) == rhs {
                    count += 1;
                }
            }
        }
        count
    }

    /// Trace of Frobenius `q + 1 - |E(F_q)|`.
    pub fn trace(&self) -> Result<i64, CurveError> {
        Ok(self.field.order() as i64 + 1 - self.count_points()? as i64)
    }

    /// Order of a point, given a multiple `m` of it (normally `|E|`), by
    /// stripping prime factors of `m`.
    pub fn point_order(&self, point: &CurvePoint, multiple: u64) -> Result<u64, CurveError> {
        self.require_nonsingular()?;
        self.check_point(point)?;
        Ok(self.order_raw(point, multiple, &prime_factors(multiple)))
    }

    fn order_raw(&self, point: &CurvePoint, multiple: u64, primes: &[u64]) -> u64 {
        let mut order = multiple;
        for &l in primes {
            while order.is_multiple_of(l) && self.mul_raw(order / l, point).is_infinity() {
                order /= l;
            }
        }
        order
    }

    /// `E(F_q) = Z/d1 x Z/d2` with `d2` the lcm of all point orders.
    pub fn group_shape(&self) -> Result<GroupShape, CurveError> {
        self.require_nonsingular()?;
        let points = self.points_raw();
        let n = points.len() as u64;
        let primes = prime_factors(n);
        let mut exponent = 1u64;
        for point in &points {
            if exponent == n {
                // the lcm cannot grow past |E|
                break;
            }
            exponent = exponent.lcm(&self.order_raw(point, n, &primes));
        }
        Ok(GroupShape {
            d1: n / exponent,
            d2: exponent,
        })
    }

    /// Whether some rational point has order exactly `order`, i.e. whether
    /// `order` divides the group exponent.
    pub fn exists_point_of_order(&self, order: u64) -> Result<bool, CurveError> {
        if order == 0 {
            return Ok(false);
        }
        Ok(self.group_shape()?.exponent() % order == 0)
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}] over {}",
            self.a1, self.a2, self.a3, self.a4, self.a6, self.field
        )
    }
}

impl fmt::Debug for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeierstrassCurve{self}")
    }
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Which coefficients vary during enumeration, as indices into
/// `[a1, a2, a3, a4, a6]`.
pub(crate) fn free_coefficients(characteristic: u32) -> &'static [usize] {
    match characteristic {
        2 => &[0, 1, 2, 3, 4],
        3 => &[1, 3, 4],
        _ => &[3, 4],
    }
}

/// All nonsingular curves in the reduced form for the characteristic:
/// `(0,0,0,a4,a6)` for `p >= 5`, `(0,a2,0,a4,a6)` for `p = 3`, and every
/// `(a1,a2,a3,a4,a6)` for `p = 2`. Each isomorphism class over `F_q` appears
/// at least once. Singular tuples are skipped.
pub fn enumerate_curves(
    field: &FieldSpec,
) -> Result<impl Iterator<Item = WeierstrassCurve>, CurveError> {
    let field = *field;
    if field.order() > ENUMERATION_CAP {
        return Err(CurveError::EnumerationCapExceeded(field.order()));
    }
    let free = free_coefficients(field.characteristic());
    let q = field.order() as u64;
    let total = q.pow(free.len() as u32);
    Ok((0..total).filter_map(move |mut index| {
        let mut coeffs = [field.zero(); 5];
        for &slot in free.iter().rev() {
            coeffs[slot] = field.from_index(index % q).expect("index below q");
            index /= q;
        }
        let curve = WeierstrassCurve::new(field, coeffs).expect("coefficients from this field");
        (!curve.is_singular()).then_some(curve)
    }))
}

/// `{ q + 1 - |E(F_q)| }` over every enumerated curve.
pub fn realized_traces(field: &FieldSpec) -> Result<BTreeSet<i64>, CurveError> {
    let q = field.order() as i64;
    let table = FieldTable::new(field)?;
    Ok(table
        .curves()
        .map(|c| q + 1 - c.count_points() as i64)
        .collect())
}

/// Enumerated curves carrying a rational point of exact order `order`.
pub fn curves_with_point_of_order(
    field: &FieldSpec,
    order: u64,
) -> Result<Vec<WeierstrassCurve>, CurveError> {
    let table = FieldTable::new(field)?;
    Ok(table
        .curves()
        .filter(|c| c.exists_point_of_order(order))
        .map(|c| c.to_weierstrass())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn f(p: u64, n: u32) -> FieldSpec {
        make_field(p, n).unwrap()
    }

    #[test]
    fn discriminant_examples() {
        let f3 = f(3, 1);
        let e = WeierstrassCurve::from_ints(f3, [0, 0, 0, 1, 0]);
        // -64 = 2 mod 3
        assert_eq!(e.discriminant(), f3.from_int(2));
        let cusp = WeierstrassCurve::from_ints(f(5, 1), [0, 0, 0, 0, 0]);
        assert!(cusp.discriminant().is_zero());
        let e2 = WeierstrassCurve::from_ints(f3, [0, 0, 0, 2, 1]);
        assert!(!e2.is_singular());
    }

    #[test]
    fn short_form_discriminant_matches_classical_formula() {
        // For a1 = a2 = a3 = 0, Delta = -16 (4 a4^3 + 27 a6^2).
        let f7 = f(7, 1);
        for a4 in 0..7i64 {
            for a6 in 0..7i64 {
                let e = WeierstrassCurve::from_ints(f7, [0, 0, 0, a4, a6]);
                let expected = (-16 * (4 * a4.pow(3) + 27 * a6 * a6)).rem_euclid(7);
                assert_eq!(e.discriminant(), f7.from_int(expected));
            }
        }
    }

    #[test]
    fn singular_curves_are_rejected_by_group_operations() {
        let e = WeierstrassCurve::from_ints(f(5, 1), [0, 0, 0, 0, 0]);
        assert_eq!(e.count_points(), Err(CurveError::Singular));
        assert_eq!(e.group_shape(), Err(CurveError::Singular));
        assert_eq!(
            e.add_points(&CurvePoint::Infinity, &CurvePoint::Infinity),
            Err(CurveError::Singular)
        );
    }

    #[test]
    fn off_curve_points_are_rejected() {
        let f3 = f(3, 1);
        let e = WeierstrassCurve::from_ints(f3, [0, 0, 0, 1, 0]);
        let bad = CurvePoint::Affine {
            x: f3.from_int(1),
            y: f3.from_int(1),
        };
        assert!(matches!(
            e.add_points(&bad, &CurvePoint::Infinity),
            Err(CurveError::NotOnCurve(_))
        ));
        assert!(e.scalar_mul(2, &bad).is_err());
    }

    #[test]
    fn mixed_field_coefficients_are_rejected() {
        let f9 = f(3, 2);
        let f3 = f(3, 1);
        let coeffs = [f9.zero(), f9.zero(), f9.zero(), f3.one(), f9.zero()];
        assert!(matches!(
            WeierstrassCurve::new(f9, coeffs),
            Err(CurveError::Field(FieldError::FieldMismatch { .. }))
        ));
    }

    #[test]
    fn counting_examples_over_f3() {
        let f3 = f(3, 1);
        let e = WeierstrassCurve::from_ints(f3, [0, 0, 0, 1, 0]);
        assert_eq!(e.count_points().unwrap(), 4);
        let e2 = WeierstrassCurve::from_ints(f3, [0, 0, 0, 2, 1]);
        assert_eq!(e2.count_points().unwrap(), 7);
        assert_eq!(e2.trace().unwrap(), -3);
    }

    #[test]
    fn shape_of_y2_eq_x3_plus_x_over_f3() {
        // Points: O, (0,0), (2,1), (2,2). (0,0) has order 2, (2,+-1) have order 4.
        let f3 = f(3, 1);
        let e = WeierstrassCurve::from_ints(f3, [0, 0, 0, 1, 0]);
        let pts = e.points().unwrap();
        let orders: Vec<u64> = pts.iter().map(|p| e.point_order(p, 4).unwrap()).collect();
        assert_eq!(orders, vec![1, 2, 4, 4]);
        assert_eq!(e.group_shape().unwrap(), GroupShape { d1: 1, d2: 4 });
    }

    #[test]
    fn prime_order_curves_are_cyclic() {
        let f3 = f(3, 1);
        let e = WeierstrassCurve::from_ints(f3, [0, 0, 0, 2, 1]);
        assert_eq!(e.group_shape().unwrap(), GroupShape { d1: 1, d2: 7 });
        assert!(e.exists_point_of_order(7).unwrap());
        assert!(e.exists_point_of_order(1).unwrap());
        assert!(!e.exists_point_of_order(2).unwrap());
    }

    #[test]
    fn group_identities() {
        let f9 = f(3, 2);
        for e in enumerate_curves(&f9).unwrap().take(40) {
            for p in e.points().unwrap() {
                assert_eq!(e.add_points(&p, &CurvePoint::Infinity).unwrap(), p);
                let neg = e.negate(&p).unwrap();
                assert!(e.add_points(&p, &neg).unwrap().is_infinity());
                assert_eq!(e.scalar_mul(0, &p).unwrap(), CurvePoint::Infinity);
                assert_eq!(e.scalar_mul(-1, &p).unwrap(), neg);
                assert_eq!(
                    e.scalar_mul(3, &p).unwrap(),
                    e.add_points(&p, &e.add_points(&p, &p).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn lagrange_over_f3() {
        let f3 = f(3, 1);
        for e in enumerate_curves(&f3).unwrap() {
            let n = e.count_points().unwrap() as i64;
            for p in e.points().unwrap() {
                assert!(e.scalar_mul(n, &p).unwrap().is_infinity());
            }
        }
    }

    #[test]
    fn enumeration_cardinalities() {
        let c3 = enumerate_curves(&f(3, 1)).unwrap().count();
        assert!(c3 <= 27 && c3 > 0);
        let c2 = enumerate_curves(&f(2, 1)).unwrap().count();
        assert!(c2 <= 32 && c2 > 0);
        let c27 = enumerate_curves(&f(3, 3)).unwrap().count();
        assert!(c27 <= 19683 && c27 > 0);
        assert!(matches!(
            enumerate_curves(&f(37, 1)),
            Err(CurveError::EnumerationCapExceeded(37))
        ));
    }

    #[test]
    fn reduced_forms_leave_other_coefficients_zero() {
        for e in enumerate_curves(&f(3, 2)).unwrap() {
            let [a1, _, a3, _, _] = e.coefficients();
            assert!(a1.is_zero() && a3.is_zero());
        }
        for e in enumerate_curves(&f(5, 1)).unwrap() {
            let [a1, a2, a3, _, _] = e.coefficients();
            assert!(a1.is_zero() && a2.is_zero() && a3.is_zero());
        }
    }

    #[test]
    fn realized_traces_small() {
        let t2: Vec<i64> = realized_traces(&f(2, 1)).unwrap().into_iter().collect();
        assert_eq!(t2, vec![-2, -1, 0, 1, 2]);
        let t3: Vec<i64> = realized_traces(&f(3, 1)).unwrap().into_iter().collect();
        assert_eq!(t3, (-3..=3).collect::<Vec<_>>());
    }

    #[test]
    fn f27_counts_and_traces() {
        let f27 = f(3, 3);
        for e in enumerate_curves(&f27).unwrap() {
            let n = e.count_points().unwrap();
            assert!((17..=38).contains(&n), "{e} has {n} points");
        }
        let traces = realized_traces(&f27).unwrap();
        assert!(traces.contains(&9));
        assert!(traces.contains(&-9));
        assert!(!traces.contains(&3));
        assert!(!traces.contains(&6));
    }

    #[test]
    fn no_point_of_order_25_over_f27() {
        assert!(curves_with_point_of_order(&f(3, 3), 25).unwrap().is_empty());
    }

    #[test]
    fn character_sum_count_matches_raw_scan() {
        for field in [f(3, 1), f(3, 2), f(5, 1)] {
            for e in enumerate_curves(&field).unwrap() {
                assert_eq!(e.count_points().unwrap(), e.points().unwrap().len() as u64);
            }
        }
    }

    #[test]
    fn shape_invariants_over_f9() {
        let f9 = f(3, 2);
        for e in enumerate_curves(&f9).unwrap() {
            let s = e.group_shape().unwrap();
            assert_eq!(s.order(), e.count_points().unwrap());
            assert_eq!(s.d2 % s.d1, 0);
            assert_eq!(8 % s.d1, 0, "d1 | q - 1 for {e}");
            for p in e.points().unwrap() {
                assert!(e.scalar_mul(s.d2 as i64, &p).unwrap().is_infinity());
            }
        }
    }

    #[test]
    fn prime_factor_helper() {
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(38), vec![2, 19]);
        assert_eq!(prime_factors(49), vec![7]);
        assert_eq!(prime_factors(40), vec![2, 5]);
    }
}
