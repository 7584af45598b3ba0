//! Arithmetic in small finite fields `GF(p^n)` in a polynomial basis.
//!
//! A field is fixed by its characteristic and degree: the defining modulus is
//! always the lexicographically least monic irreducible polynomial of degree
//! `n`, scanning the coefficient tuple `(c_{n-1}, ..., c_0)` in ascending
//! order. Two fields built from the same `(p, n)` are therefore identical, and
//! every element carries its `(p, n)` tag so mixed-field operands are caught.

use std::fmt;

use thiserror::Error;

/// Largest supported extension degree (enough for `2^20`).
pub const MAX_DEGREE: usize = 20;

/// Upper bound on the field order `p^n`.
pub const FIELD_ORDER_CAP: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{n} exceeds the cap {cap}", cap = FIELD_ORDER_CAP)]
    OrderCapExceeded { p: u64, n: u32 },
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("operand belongs to GF({found_p}^{found_n}), expected GF({p}^{n})")]
    FieldMismatch {
        p: u32,
        n: u32,
        found_p: u32,
        found_n: u32,
    },
    #[error("expected {expected} coefficients, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("coefficient {0} is out of range")]
    CoefficientOutOfRange(u64),
}

/// Trial-division primality test for the small integers used throughout.
pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m.is_multiple_of(2) {
        return m == 2;
    }
    let mut d = 3;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A finite field `GF(p^n)` together with its defining modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    n: u32,
    q: u32,
    /// `c_0, ..., c_{n-1}` of the monic modulus; unused slots are zero.
    modulus: [u32; MAX_DEGREE],
}

/// An element of some `GF(p^n)`, stored as coordinates in `1, x, ..., x^{n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    p: u32,
    n: u32,
    coeffs: [u32; MAX_DEGREE],
}

/// Builds `GF(p^n)` with the deterministic modulus.
pub fn make_field(p: u64, n: u32) -> Result<FieldSpec, FieldError> {
    FieldSpec::new(p, n)
}

impl FieldSpec {
    pub fn new(p: u64, n: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = p
            .checked_pow(n)
            .filter(|&q| q <= FIELD_ORDER_CAP)
            .ok_or(FieldError::OrderCapExceeded { p, n })?;
        let p = p as u32;
        let mut modulus = [0u32; MAX_DEGREE];
        if n > 1 {
            let tail = least_irreducible(p, n as usize);
            modulus[..n as usize].copy_from_slice(&tail);
        }
        Ok(FieldSpec {
            p,
            n,
            q: q as u32,
            modulus,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Low-order-first coefficients `(c_0, ..., c_{n-1})` of the modulus
    /// `x^n + c_{n-1} x^{n-1} + ... + c_0`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus[..self.n as usize]
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            p: self.p,
            n: self.n,
            coeffs: [0; MAX_DEGREE],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// The image of an integer under `Z -> F_p -> GF(p^n)`.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = v.rem_euclid(self.p as i64) as u32;
        e
    }

    /// The class of `x`; for `n = 1` this is zero, since the modulus is `x`.
    pub fn generator(&self) -> FieldElement {
        let mut e = self.zero();
        if self.n > 1 {
            e.coeffs[1] = 1;
        }
        e
    }

    /// Builds an element from exactly `n` coordinates, each in `[0, p)`.
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.n as usize {
            return Err(FieldError::WrongLength {
                expected: self.n as usize,
                found: coeffs.len(),
            });
        }
        let mut e = self.zero();
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            if c >= self.p {
                return Err(FieldError::CoefficientOutOfRange(c as u64));
            }
            *slot = c;
        }
        Ok(e)
    }

    /// Inverse of [`FieldElement::index`]: base-`p` digits, least significant first.
    pub fn from_index(&self, index: u64) -> Result<FieldElement, FieldError> {
        if index >= self.q as u64 {
            return Err(FieldError::CoefficientOutOfRange(index));
        }
        let mut e = self.zero();
        let mut rest = index;
        for slot in e.coeffs.iter_mut().take(self.n as usize) {
            *slot = (rest % self.p as u64) as u32;
            rest /= self.p as u64;
        }
        Ok(e)
    }

    /// All `q` elements in ascending [`FieldElement::index`] order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let mut current = self.zero();
        let mut remaining = self.q as u64;
        std::iter::from_fn(move || {
            if remaining == 0 {
                return None;
            }
            remaining -= 1;
            let out = current;
            // odometer increment
            for c in current.coeffs.iter_mut().take(self.n as usize) {
                *c += 1;
                if *c < self.p {
                    break;
                }
                *c = 0;
            }
            Some(out)
        })
    }

    pub fn contains(&self, e: &FieldElement) -> bool {
        e.p == self.p && e.n == self.n
    }

    /// `Ok` when `e` belongs to this field, else [`FieldError::FieldMismatch`].
    pub fn ensure_contains(&self, e: &FieldElement) -> Result<(), FieldError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch {
                p: self.p,
                n: self.n,
                found_p: e.p,
                found_n: e.n,
            })
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.ensure_contains(a)?;
        self.ensure_contains(b)?;
        Ok(self.add_raw(a, b))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.ensure_contains(a)?;
        self.ensure_contains(b)?;
        Ok(self.sub_raw(a, b))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.ensure_contains(a)?;
        Ok(self.neg_raw(a))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        self.ensure_contains(a)?;
        self.ensure_contains(b)?;
        Ok(self.mul_raw(a, b))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        self.ensure_contains(a)?;
        self.inv_raw(a)
    }

    /// Square-and-multiply; `pow(a, 0) = 1` for every `a`, including zero.
    pub fn pow(&self, a: &FieldElement, exponent: u64) -> Result<FieldElement, FieldError> {
        self.ensure_contains(a)?;
        Ok(self.pow_raw(a, exponent))
    }

    /// Quadratic residuosity. Every element is a square in characteristic 2.
    pub fn is_square(&self, a: &FieldElement) -> Result<bool, FieldError> {
        self.ensure_contains(a)?;
        Ok(self.is_square_raw(a))
    }

    /// The square root with the smallest index, found by exhaustive search.
    pub fn sqrt(&self, a: &FieldElement) -> Result<Option<FieldElement>, FieldError> {
        self.ensure_contains(a)?;
        Ok(self.elements().find(|y| self.mul_raw(y, y) == *a))
    }

    pub(crate) fn add_raw(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let mut out = *a;
        for (c, &d) in out.coeffs.iter_mut().zip(&b.coeffs).take(self.n as usize) {
            *c += d;
            if *c >= self.p {
                *c -= self.p;
            }
        }
        out
    }

    pub(crate) fn neg_raw(&self, a: &FieldElement) -> FieldElement {
        let mut out = *a;
        for c in out.coeffs.iter_mut().take(self.n as usize) {
            if *c != 0 {
                *c = self.p - *c;
            }
        }
        out
    }

    pub(crate) fn sub_raw(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add_raw(a, &self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.n as usize;
        let p = self.p as u64;
        if n == 1 {
            let mut out = *a;
            out.coeffs[0] = ((a.coeffs[0] as u64 * b.coeffs[0] as u64) % p) as u32;
            return out;
        }
        // Coefficients stay below 2^63: each product is < 2^40 and at most
        // 2 * MAX_DEGREE of them land in one slot.
        let mut prod = [0u64; 2 * MAX_DEGREE - 1];
        for i in 0..n {
            let ai = a.coeffs[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] += ai * b.coeffs[j] as u64;
            }
        }
        // x^n = -(c_{n-1} x^{n-1} + ... + c_0)
        for k in (n..2 * n - 1).rev() {
            let top = prod[k] % p;
            prod[k] = 0;
            if top == 0 {
                continue;
            }
            for (i, &m) in self.modulus[..n].iter().enumerate() {
                if m != 0 {
                    prod[k - n + i] += (p - m as u64) * top;
                }
            }
        }
        let mut out = self.zero();
        for (c, &v) in out.coeffs.iter_mut().zip(&prod[..n]) {
            *c = (v % p) as u32;
        }
        out
    }

    pub(crate) fn pow_raw(&self, a: &FieldElement, mut exponent: u64) -> FieldElement {
        let mut base = *a;
        let mut acc = self.one();
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = self.mul_raw(&acc, &base);
            }
            base = self.mul_raw(&base, &base);
            exponent >>= 1;
        }
        acc
    }

    pub(crate) fn inv_raw(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow_raw(a, self.q as u64 - 2))
    }

    pub(crate) fn is_square_raw(&self, a: &FieldElement) -> bool {
        if self.p == 2 || a.is_zero() {
            return true;
        }
        self.pow_raw(a, (self.q as u64 - 1) / 2) == self.one()
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.n, self.modulus())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs[..self.n as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&c| c == 0)
    }

    /// `sum c_i p^i`; the position of this element in [`FieldSpec::elements`].
    pub fn index(&self) -> u64 {
        self.coeffs()
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    /// Prime-field elements print as integers, others as polynomials in `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs().iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            terms.push(match (i, c) {
                (0, _) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{c}x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{c}x^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

// --- modulus search -------------------------------------------------------

/// Returns `(c_0, ..., c_{n-1})` of the least monic irreducible of degree `n`,
/// ordering candidates by `(c_{n-1}, ..., c_0)`.
fn least_irreducible(p: u32, n: usize) -> Vec<u32> {
    let total = (p as u64).pow(n as u32);
    for index in 0..total {
        // Most significant digit is c_{n-1}, so the base-p digits of `index`
        // read low-first are exactly c_0, ..., c_{n-1}.
        let mut tail = vec![0u32; n];
        let mut rest = index;
        for slot in tail.iter_mut() {
            *slot = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        let mut poly = tail.clone();
        poly.push(1);
        if is_irreducible(&poly, p) {
            return tail;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// Irreducibility of a monic polynomial (low-first) by trial division with
/// every monic polynomial of degree at most half its degree.
pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let n = poly.len() - 1;
    if n <= 1 {
        return n == 1;
    }
    if poly[0] == 0 {
        return false;
    }
    for k in 1..=n / 2 {
        let count = (p as u64).pow(k as u32);
        for index in 0..count {
            let mut divisor = vec![0u32; k + 1];
            let mut rest = index;
            for slot in divisor.iter_mut().take(k) {
                *slot = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            divisor[k] = 1;
            if poly_rem_is_zero(poly, &divisor, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(dividend: &[u32], divisor: &[u32], p: u32) -> bool {
    let p = p as u64;
    let mut rem: Vec<u64> = dividend.iter().map(|&c| c as u64).collect();
    let k = divisor.len() - 1;
    for top in (k..rem.len()).rev() {
        let lead = rem[top] % p;
        if lead == 0 {
            continue;
        }
        // divisor is monic
        for (i, &d) in divisor.iter().enumerate() {
            let slot = &mut rem[top - k + i];
            *slot = (*slot + (p - lead) * d as u64) % p;
        }
    }
    rem[..k].iter().all(|&c| c % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, n: u32) -> FieldSpec {
        make_field(p, n).unwrap()
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f = field(3, 1);
        assert_eq!(f.order(), 3);
        assert_eq!(f.modulus(), &[0]);
    }

    #[test]
    fn deterministic_moduli() {
        // x^3 + 2x + 1
        assert_eq!(field(3, 3).modulus(), &[1, 2, 0]);
        // x^2 + 1
        assert_eq!(field(3, 2).modulus(), &[1, 0]);
        // x^2 + x + 1, x^3 + x + 1, x^4 + x + 1
        assert_eq!(field(2, 2).modulus(), &[1, 1]);
        assert_eq!(field(2, 3).modulus(), &[1, 1, 0]);
        assert_eq!(field(2, 4).modulus(), &[1, 1, 0, 0]);
        // x^2 + 2 over F_5
        assert_eq!(field(5, 2).modulus(), &[2, 0]);
    }

    /// Every candidate scanned before the chosen modulus must be reducible,
    /// checked by looking for roots (sufficient for degree <= 3).
    #[test]
    fn earlier_cubic_candidates_have_roots() {
        let f = field(3, 3);
        let chosen: Vec<u32> = f.modulus().to_vec();
        let key = |t: &[u32]| t.iter().rev().copied().collect::<Vec<_>>();
        for index in 0..27u32 {
            let tail = [index % 3, (index / 3) % 3, index / 9];
            if key(&tail) >= key(&chosen) {
                continue;
            }
            let has_root =
                (0..3u32).any(|x| (x * x * x + tail[2] * x * x + tail[1] * x + tail[0]) % 3 == 0);
            assert!(has_root, "candidate {tail:?} should be reducible");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(4, 1), Err(FieldError::NotPrime(4)));
        assert_eq!(make_field(3, 0), Err(FieldError::ZeroDegree));
        assert!(matches!(
            make_field(2, 21),
            Err(FieldError::OrderCapExceeded { .. })
        ));
        assert!(make_field(2, 20).is_ok());
    }

    #[test]
    fn small_identities() {
        let f3 = field(3, 1);
        assert_eq!(f3.inv(&f3.from_int(2)).unwrap(), f3.from_int(2));
        let f9 = field(3, 2);
        let x = f9.generator();
        assert_eq!(f9.mul(&x, &x).unwrap(), f9.from_int(2));
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        let f = field(3, 3);
        assert_eq!(f.inv(&f.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f9 = field(3, 2);
        let f27 = field(3, 3);
        let err = f9.add(&f9.one(), &f27.one()).unwrap_err();
        assert!(matches!(err, FieldError::FieldMismatch { found_n: 3, .. }));
        assert!(f27.mul(&f9.one(), &f27.one()).is_err());
    }

    #[test]
    fn fermat_and_frobenius() {
        for (p, n) in [(2, 1), (2, 3), (3, 2), (3, 3), (5, 2), (7, 1)] {
            let f = field(p, n);
            let q = f.order() as u64;
            for a in f.elements() {
                assert_eq!(f.pow(&a, q).unwrap(), a);
                if !a.is_zero() {
                    assert_eq!(f.pow(&a, q - 1).unwrap(), f.one());
                    let inv = f.inv(&a).unwrap();
                    assert_eq!(f.mul(&a, &inv).unwrap(), f.one());
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, n) in [(2, 2), (3, 1), (2, 3), (3, 2), (5, 1), (3, 3)] {
            let f = field(p, n);
            let all: Vec<_> = f.elements().collect();
            for a in &all {
                for b in &all {
                    let ab = f.add(a, b).unwrap();
                    assert_eq!(ab, f.add(b, a).unwrap());
                    assert_eq!(f.sub(&ab, b).unwrap(), *a);
                    assert_eq!(f.mul(a, b).unwrap(), f.mul(b, a).unwrap());
                    for c in &all {
                        assert_eq!(
                            f.add(&ab, c).unwrap(),
                            f.add(a, &f.add(b, c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            f.mul(a, &f.add(b, c).unwrap()).unwrap(),
                            f.add(&f.mul(a, b).unwrap(), &f.mul(a, c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            f.mul(&f.mul(a, b).unwrap(), c).unwrap(),
                            f.mul(a, &f.mul(b, c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn squares_in_f3() {
        let f = field(3, 1);
        let squares: Vec<u64> = f
            .elements()
            .filter(|e| f.is_square(e).unwrap())
            .map(|e| e.index())
            .collect();
        assert_eq!(squares, vec![0, 1]);
        assert!(!f.is_square(&f.from_int(2)).unwrap());
        assert_eq!(f.sqrt(&f.from_int(2)).unwrap(), None);
        assert_eq!(f.sqrt(&f.from_int(1)).unwrap(), Some(f.from_int(1)));
    }

    #[test]
    fn is_square_matches_square_table() {
        for (p, n) in [(3, 3), (5, 2), (7, 1), (2, 4)] {
            let f = field(p, n);
            let table: std::collections::HashSet<_> =
                f.elements().map(|y| f.mul(&y, &y).unwrap()).collect();
            let mut count = 0;
            for e in f.elements() {
                let sq = f.is_square(&e).unwrap();
                assert_eq!(sq, table.contains(&e), "{e} in {f}");
                let root = f.sqrt(&e).unwrap();
                assert_eq!(root.is_some(), sq);
                if let Some(r) = root {
                    assert_eq!(f.mul(&r, &r).unwrap(), e);
                }
                count += sq as u32;
            }
            if p != 2 {
                assert_eq!(count, f.order().div_ceil(2));
            } else {
                assert_eq!(count, f.order());
            }
        }
    }

    #[test]
    fn enumeration_order_and_cardinality() {
        let f3 = field(3, 1);
        let idx: Vec<u64> = f3.elements().map(|e| e.index()).collect();
        assert_eq!(idx, vec![0, 1, 2]);

        for (p, n) in [(3, 2), (3, 3), (2, 5)] {
            let f = field(p, n);
            let all: Vec<_> = f.elements().collect();
            assert_eq!(all.len() as u32, f.order());
            assert!(all[0].is_zero());
            for (i, e) in all.iter().enumerate() {
                assert_eq!(e.index(), i as u64);
                assert_eq!(f.from_index(i as u64).unwrap(), *e);
            }
        }
    }

    #[test]
    fn f27_closure_spot_checks() {
        let f = field(3, 3);
        let all: std::collections::HashSet<_> = f.elements().collect();
        for (i, a) in f.elements().enumerate().step_by(5) {
            for b in f.elements().skip(i % 7).step_by(4) {
                assert!(all.contains(&f.add(&a, &b).unwrap()));
                assert!(all.contains(&f.mul(&a, &b).unwrap()));
            }
        }
    }

    #[test]
    fn element_validation() {
        let f = field(3, 2);
        assert!(f.element(&[1, 2]).is_ok());
        assert!(matches!(
            f.element(&[1]),
            Err(FieldError::WrongLength {
                expected: 2,
                found: 1
            })
        ));
        assert_eq!(
            f.element(&[3, 0]),
            Err(FieldError::CoefficientOutOfRange(3))
        );
        assert_eq!(f.element(&[2, 1]).unwrap().to_string(), "x+2");
    }

    #[test]
    fn irreducibility_helper() {
        // x^2 + 1 over F_2 = (x + 1)^2
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 1], 2));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2, no roots but reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn inverse_and_distributivity_in_large_fields(
                (p, n) in prop_oneof![Just((2u64, 20u32)), Just((101, 3)), Just((1021, 2)), Just((7, 7))],
                a in any::<u64>(), b in any::<u64>(), c in any::<u64>(),
            ) {
                let f = make_field(p, n).unwrap();
                let q = f.order() as u64;
                let (a, b, c) = (
                    f.from_index(a % q).unwrap(),
                    f.from_index(b % q).unwrap(),
                    f.from_index(c % q).unwrap(),
                );
                let lhs = f.mul(&a, &f.add(&b, &c).unwrap()).unwrap();
                let rhs = f.add(&f.mul(&a, &b).unwrap(), &f.mul(&a, &c).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
                if !a.is_zero() {
                    let inv = f.inv(&a).unwrap();
                    prop_assert_eq!(f.mul(&a, &inv).unwrap(), f.one());
                }
                prop_assert_eq!(f.pow(&b, q).unwrap(), b);
            }
        }
    }
}
