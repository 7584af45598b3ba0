//! Lookup-table arithmetic for the tiny fields used by exhaustive curve
//! enumeration.
//!
//! Elements are addressed by their [`FieldElement::index`]. All tables are
//! built once per field from the polynomial-basis arithmetic in [`crate::gf`],
//! after which curve operations are pure table lookups. This is the bulk
//! route behind [`realized_traces`](crate::weierstrass::realized_traces) and
//! the order-`N` oracle; [`WeierstrassCurve`] remains the reference route and
//! the two are checked against each other in the test suite.

use num_integer::Integer;

use crate::gf::{FieldElement, FieldSpec};
use crate::weierstrass::{
    free_coefficients, prime_factors, CurveError, CurvePoint, GroupShape, WeierstrassCurve,
    ENUMERATION_CAP,
};

type Ix = u8;

/// Add/multiply/negate/invert tables for one small field.
#[derive(Clone, Debug)]
pub struct FieldTable {
    field: FieldSpec,
    q: usize,
    add: Vec<Ix>,
    mul: Vec<Ix>,
    neg: Vec<Ix>,
    inv: Vec<Ix>,
    /// `quadratic_solutions[b * q + c] = #{ y : y^2 + b y = c }`.
    quadratic_solutions: Vec<u8>,
}

impl FieldTable {
    pub fn new(field: &FieldSpec) -> Result<Self, CurveError> {
        if field.order() > ENUMERATION_CAP {
            return Err(CurveError::EnumerationCapExceeded(field.order()));
        }
        let q = field.order() as usize;
        let elems: Vec<FieldElement> = field.elements().collect();
        let ix = |e: FieldElement| e.index() as Ix;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = ix(field.add_raw(a, b));
                mul[i * q + j] = ix(field.mul_raw(a, b));
            }
        }
        let neg = elems.iter().map(|a| ix(field.neg_raw(a))).collect();
        let inv = elems
            .iter()
            .map(|a| field.inv_raw(a).map_or(0, ix))
            .collect();
        let mut quadratic_solutions = vec![0u8; q * q];
        for b in 0..q {
            for y in 0..q {
                let v = mul[y * q + add[y * q + b] as usize] as usize;
                quadratic_solutions[b * q + v] += 1;
            }
        }
        Ok(FieldTable {
            field: *field,
            q,
            add,
            mul,
            neg,
            inv,
            quadratic_solutions,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    #[inline]
    fn add(&self, a: Ix, b: Ix) -> Ix {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    fn mul(&self, a: Ix, b: Ix) -> Ix {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    fn sub(&self, a: Ix, b: Ix) -> Ix {
        self.add(a, self.neg[b as usize])
    }

    /// `k` as an element of the prime subfield.
    fn int(&self, k: u32) -> Ix {
        (k % self.field.characteristic()) as Ix
    }

    /// Discriminant of `[a1, a2, a3, a4, a6]`.
    fn discriminant(&self, a: [Ix; 5]) -> Ix {
        let [a1, a2, a3, a4, a6] = a;
        let m = |x, y| self.mul(x, y);
        let k = |c| self.int(c);
        let b2 = self.add(m(a1, a1), m(k(4), a2));
        let b4 = self.add(m(k(2), a4), m(a1, a3));
        let b6 = self.add(m(a3, a3), m(k(4), a6));
        let a1sq = m(a1, a1);
        let b8 = self.sub(
            self.add(self.add(m(a1sq, a6), m(k(4), m(a2, a6))), m(a2, m(a3, a3))),
            self.add(m(a1, m(a3, a4)), m(a4, a4)),
        );
        let pos = m(k(9), m(b2, m(b4, b6)));
        let neg = self.add(
            self.add(m(m(b2, b2), b8), m(k(8), m(b4, m(b4, b4)))),
            m(k(27), m(b6, b6)),
        );
        self.sub(pos, neg)
    }

    /// The curve with these coefficients, as table indices.
    pub fn curve(&self, curve: &WeierstrassCurve) -> Result<TabulatedCurve<'_>, CurveError> {
        if curve.field() != &self.field {
            let other = curve.field();
            return Err(CurveError::Field(crate::gf::FieldError::FieldMismatch {
                p: self.field.characteristic(),
                n: self.field.degree(),
                found_p: other.characteristic(),
                found_n: other.degree(),
            }));
        }
        if curve.is_singular() {
            return Err(CurveError::Singular);
        }
        Ok(TabulatedCurve {
            table: self,
            a: curve.coefficients().map(|c| c.index() as Ix),
        })
    }

    /// Same curves, in the same order, as
    /// [`enumerate_curves`](crate::weierstrass::enumerate_curves).
    pub fn curves(&self) -> impl Iterator<Item = TabulatedCurve<'_>> + '_ {
        let free = free_coefficients(self.field.characteristic());
        let q = self.q as u64;
        let total = q.pow(free.len() as u32);
        (0..total).filter_map(move |mut index| {
            let mut a = [0 as Ix; 5];
            for &slot in free.iter().rev() {
                a[slot] = (index % q) as Ix;
                index /= q;
            }
            (self.discriminant(a) != 0).then_some(TabulatedCurve { table: self, a })
        })
    }
}

/// Point on a [`TabulatedCurve`]: `None` is the point at infinity.
pub type TabPoint = Option<(Ix, Ix)>;

/// A nonsingular curve whose arithmetic runs through a [`FieldTable`].
#[derive(Clone, Copy, Debug)]
pub struct TabulatedCurve<'t> {
    table: &'t FieldTable,
    a: [Ix; 5],
}

impl TabulatedCurve<'_> {
    /// `(x^3 + a2 x^2 + a4 x + a6, a1 x + a3)`.
    #[inline]
    fn rhs_and_linear(&self, x: Ix) -> (Ix, Ix) {
        let t = self.table;
        let [a1, a2, a3, a4, a6] = self.a;
        let x2 = t.mul(x, x);
        let rhs = t.add(t.add(t.add(t.mul(x2, x), t.mul(a2, x2)), t.mul(a4, x)), a6);
        (rhs, t.add(t.mul(a1, x), a3))
    }

    /// `1 + sum_x #{ y : y^2 + (a1 x + a3) y = rhs(x) }`.
    pub fn count_points(&self) -> u64 {
        let t = self.table;
        let mut count = 1u64;
        for x in 0..t.q as Ix {
            let (rhs, lin) = self.rhs_and_linear(x);
            count += t.quadratic_solutions[lin as usize * t.q + rhs as usize] as u64;
        }
        count
    }

    pub fn points(&self) -> Vec<TabPoint> {
        let t = self.table;
        let mut out = vec![None];
        for x in 0..t.q as Ix {
            let (rhs, lin) = self.rhs_and_linear(x);
            if t.quadratic_solutions[lin as usize * t.q + rhs as usize] == 0 {
                continue;
            }
            for y in 0..t.q as Ix {
                if t.mul(y, t.add(y, lin)) == rhs {
                    out.push(Some((x, y)));
                }
            }
        }
        out
    }

    pub fn negate(&self, p: TabPoint) -> TabPoint {
        let t = self.table;
        p.map(|(x, y)| {
            let (_, lin) = self.rhs_and_linear(x);
            (x, t.neg[t.add(y, lin) as usize])
        })
    }

    pub fn add(&self, p: TabPoint, q: TabPoint) -> TabPoint {
        let ((x1, y1), (x2, y2)) = match (p, q) {
            (None, _) => return q,
            (_, None) => return p,
            (Some(a), Some(b)) => (a, b),
        };
        let t = self.table;
        let [a1, a2, a3, a4, a6] = self.a;
        let (lambda, nu) = if x1 != x2 {
            let d = t.inv[t.sub(x2, x1) as usize];
            (
                t.mul(t.sub(y2, y1), d),
                t.mul(t.sub(t.mul(y1, x2), t.mul(y2, x1)), d),
            )
        } else {
            let denom = t.add(t.add(t.mul(t.int(2), y1), t.mul(a1, x1)), a3);
            if y1 != y2 || denom == 0 {
                return None;
            }
            let d = t.inv[denom as usize];
            let x1sq = t.mul(x1, x1);
            let num = t.sub(
                t.add(
                    t.add(t.mul(t.int(3), x1sq), t.mul(t.int(2), t.mul(a2, x1))),
                    a4,
                ),
                t.mul(a1, y1),
            );
            let nnum = t.sub(
                t.add(
                    t.add(t.neg[t.mul(x1sq, x1) as usize], t.mul(a4, x1)),
                    t.mul(t.int(2), a6),
                ),
                t.mul(a3, y1),
            );
            (t.mul(num, d), t.mul(nnum, d))
        };
        let x3 = t.sub(
            t.sub(
                t.sub(t.add(t.mul(lambda, lambda), t.mul(a1, lambda)), a2),
                x1,
            ),
            x2,
        );
        let y3 = t.sub(t.sub(t.neg[t.mul(t.add(lambda, a1), x3) as usize], nu), a3);
        Some((x3, y3))
    }

    pub fn scalar_mul(&self, mut k: u64, p: TabPoint) -> TabPoint {
        let mut acc = None;
        let mut base = p;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(base, base);
            }
        }
        acc
    }

    fn order(&self, p: TabPoint, multiple: u64, primes: &[u64]) -> u64 {
        let mut order = multiple;
        for &l in primes {
            while order.is_multiple_of(l) && self.scalar_mul(order / l, p).is_none() {
                order /= l;
            }
        }
        order
    }

    /// Same algorithm as [`WeierstrassCurve::group_shape`].
    pub fn group_shape(&self) -> GroupShape {
        let points = self.points();
        let n = points.len() as u64;
        let primes = prime_factors(n);
        let mut exponent = 1u64;
        for &p in &points {
            if exponent == n {
                break;
            }
            exponent = exponent.lcm(&self.order(p, n, &primes));
        }
        GroupShape {
            d1: n / exponent,
            d2: exponent,
        }
    }

    pub fn table(&self) -> &FieldTable {
        self.table
    }

    /// `true` when some rational point has exact order `order`.
    pub fn exists_point_of_order(&self, order: u64) -> bool {
        self.count_points().is_multiple_of(order) && self.group_shape().d2.is_multiple_of(order)
    }

    pub fn to_weierstrass(&self) -> WeierstrassCurve {
        let f = &self.table.field;
        let coeffs = self
            .a
            .map(|i| f.from_index(i as u64).expect("index below q"));
        WeierstrassCurve::new(*f, coeffs).expect("coefficients from this field")
    }

    /// Converts a point back to field elements.
    pub fn to_curve_point(&self, p: TabPoint) -> CurvePoint {
        let f = &self.table.field;
        match p {
            None => CurvePoint::Infinity,
            Some((x, y)) => CurvePoint::Affine {
                x: f.from_index(x as u64).expect("index below q"),
                y: f.from_index(y as u64).expect("index below q"),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::weierstrass::enumerate_curves;

    /// The table route and the polynomial-basis route agree on every curve.
    #[test]
    fn agrees_with_reference_route() {
        for (p, n) in [(2, 1), (2, 2), (3, 1), (5, 1), (3, 2), (2, 3), (7, 1)] {
            let field = make_field(p, n).unwrap();
            let table = FieldTable::new(&field).unwrap();
            for e in enumerate_curves(&field).unwrap() {
                let t = table.curve(&e).unwrap();
                assert_eq!(t.to_weierstrass().coefficients(), e.coefficients());
                assert_eq!(t.count_points(), e.count_points().unwrap(), "{e}");
                assert_eq!(t.group_shape(), e.group_shape().unwrap(), "{e}");
                let pts = t.points();
                let reference = e.points().unwrap();
                assert_eq!(pts.len(), reference.len());
                for (&a, r) in pts.iter().zip(&reference) {
                    assert_eq!(t.to_curve_point(a), *r);
                }
                for &a in pts.iter().take(4) {
                    for &b in &pts {
                        let sum = e
                            .add_points(&t.to_curve_point(a), &t.to_curve_point(b))
                            .unwrap();
                        assert_eq!(t.to_curve_point(t.add(a, b)), sum);
                    }
                    assert_eq!(
                        t.to_curve_point(t.negate(a)),
                        e.negate(&t.to_curve_point(a)).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn tabulated_enumeration_matches_reference() {
        for (p, n) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (3, 1),
            (3, 2),
            (5, 1),
            (7, 1),
            (11, 1),
        ] {
            let field = make_field(p, n).unwrap();
            let table = FieldTable::new(&field).unwrap();
            let fast: Vec<_> = table.curves().map(|c| c.to_weierstrass()).collect();
            let slow: Vec<_> = enumerate_curves(&field).unwrap().collect();
            assert_eq!(fast.len(), slow.len(), "F_{}", field.order());
            for (a, b) in fast.iter().zip(&slow) {
                assert_eq!(a.coefficients(), b.coefficients());
            }
        }
    }

    #[test]
    fn rejects_oversized_and_singular() {
        assert!(FieldTable::new(&make_field(37, 1).unwrap()).is_err());
        let f5 = make_field(5, 1).unwrap();
        let table = FieldTable::new(&f5).unwrap();
        let cusp = WeierstrassCurve::from_ints(f5, [0, 0, 0, 0, 0]);
        assert!(matches!(table.curve(&cusp), Err(CurveError::Singular)));
        let other = WeierstrassCurve::from_ints(make_field(7, 1).unwrap(), [0, 0, 0, 1, 1]);
        assert!(matches!(table.curve(&other), Err(CurveError::Field(_))));
    }
}
