//! Interval and complex-rectangle arithmetic over dyadic endpoints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::dyadic::Dyadic;

/// Rounds a rational toward minus infinity to a dyadic with about `bits`
/// significant bits (exact when already dyadic).
pub fn dyadic_floor(x: &BigRational, bits: u32) -> BigRational {
    Dyadic::from_rational(x, bits, false).to_rational()
}

/// Rounds a rational toward plus infinity to a dyadic with about `bits`
/// significant bits.
pub fn dyadic_ceil(x: &BigRational, bits: u32) -> BigRational {
    Dyadic::from_rational(x, bits, true).to_rational()
}

/// A closed interval with dyadic endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(Dyadic::from_int(n))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self::point(Dyadic::from_bigint(n))
    }

    /// Encloses a rational with outward rounding at `bits`.
    pub fn from_rational(x: &BigRational, bits: u32) -> Self {
        if let Some(d) = Dyadic::from_rational_exact(x) {
            return Self::point(d);
        }
        Interval {
            lo: Dyadic::from_rational(x, bits, false),
            hi: Dyadic::from_rational(x, bits, true),
        }
    }

    pub fn zero() -> Self {
        Self::point(Dyadic::zero())
    }

    pub fn one() -> Self {
        Self::point(Dyadic::one())
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).half()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_rational(&self, x: &BigRational) -> bool {
        self.lo.to_rational() <= *x && *x <= self.hi.to_rational()
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_in_interior(&self, other: &Interval) -> bool {
        self.lo < other.lo && other.hi < self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// Certified `self < other` pointwise.
    pub fn strictly_below(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval { lo: self.lo.add(&other.lo), hi: self.hi.add(&other.hi) }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval { lo: self.lo.sub(&other.hi), hi: self.hi.sub(&other.lo) }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let a = self.lo.mul(&other.lo);
        let b = self.lo.mul(&other.hi);
        let c = self.hi.mul(&other.lo);
        let d = self.hi.mul(&other.hi);
        let lo = a.clone().min_dyadic(b.clone()).min_dyadic(c.clone()).min_dyadic(d.clone());
        let hi = a.max_dyadic(b).max_dyadic(c).max_dyadic(d);
        Interval { lo, hi }
    }

    pub fn square(&self) -> Interval {
        let a = self.lo.square();
        let b = self.hi.square();
        if self.contains_zero() {
            Interval { lo: Dyadic::zero(), hi: a.max_dyadic(b) }
        } else {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            Interval { lo, hi }
        }
    }

    /// Reciprocal with outward rounding; the interval must exclude zero.
    pub fn recip(&self, bits: u32) -> Interval {
        assert!(!self.contains_zero(), "reciprocal of interval containing zero");
        let one = Dyadic::one();
        Interval { lo: one.div_floor(&self.hi, bits), hi: one.div_ceil(&self.lo, bits) }
    }

    pub fn div(&self, other: &Interval, bits: u32) -> Interval {
        self.mul(&other.recip(bits))
    }

    pub fn scale_bigint(&self, k: &BigInt) -> Interval {
        let a = self.lo.mul_bigint(k);
        let b = self.hi.mul_bigint(k);
        if k.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    /// `self^n` by repeated squaring with sign care.
    pub fn pow(&self, n: u64) -> Interval {
        if n == 0 {
            return Interval::one();
        }
        let mut result = Interval::one();
        let mut base = self.clone();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.square();
        }
        result
    }

    pub fn abs(&self) -> Interval {
        if self.contains_zero() {
            Interval { lo: Dyadic::zero(), hi: self.lo.abs().max_dyadic(self.hi.abs()) }
        } else if self.hi.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Outward rounding to about `bits` significant bits per endpoint.
    pub fn round_out(&self, bits: u32) -> Interval {
        Interval { lo: self.lo.round_floor(bits), hi: self.hi.round_ceil(bits) }
    }

    /// The unique integer in the interval, if exactly one exists.
    pub fn unique_integer(&self) -> Option<BigInt> {
        let lo = self.lo.ceil_bigint();
        let hi = self.hi.floor_bigint();
        if lo == hi {
            Some(lo)
        } else {
            None
        }
    }

    /// f64 approximation of the midpoint, display only.
    pub fn approx_f64(&self) -> f64 {
        self.midpoint().to_f64()
    }

    pub fn lo_rational(&self) -> BigRational {
        self.lo.to_rational()
    }

    pub fn hi_rational(&self) -> BigRational {
        self.hi.to_rational()
    }
}

/// Best-effort f64 conversion of a rational (display paths only).
pub fn rational_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    Dyadic::from_rational(x, 64, false).to_f64()
}

/// A complex rectangle: re + i*im with interval components.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(re: Dyadic, im: Dyadic) -> Self {
        ComplexBox { re: Interval::point(re), im: Interval::point(im) }
    }

    pub fn real(iv: Interval) -> Self {
        ComplexBox { re: iv, im: Interval::zero() }
    }

    pub fn midpoint(&self) -> (Dyadic, Dyadic) {
        (self.re.midpoint(), self.im.midpoint())
    }

    pub fn width(&self) -> Dyadic {
        let wr = self.re.width();
        let wi = self.im.width();
        if wr >= wi {
            wr
        } else {
            wi
        }
    }

    pub fn add(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re.add(&other.re), im: self.im.add(&other.im) }
    }

    pub fn sub(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re.sub(&other.re), im: self.im.sub(&other.im) }
    }

    pub fn mul(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox { re: self.re.clone(), im: self.im.neg() }
    }

    /// `|z|^2` as an interval.
    pub fn modulus_sq(&self) -> Interval {
        self.re.square().add(&self.im.square())
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn contains_box(&self, other: &ComplexBox) -> bool {
        self.re.contains_interval(&other.re) && self.im.contains_interval(&other.im)
    }

    pub fn contains_in_interior(&self, other: &ComplexBox) -> bool {
        self.re.contains_in_interior(&other.re) && self.im.contains_in_interior(&other.im)
    }

    pub fn intersect(&self, other: &ComplexBox) -> Option<ComplexBox> {
        Some(ComplexBox {
            re: self.re.intersect(&other.re)?,
            im: self.im.intersect(&other.im)?,
        })
    }

    pub fn is_disjoint(&self, other: &ComplexBox) -> bool {
        self.intersect(other).is_none()
    }

    /// Division by a box excluding zero: `z/w = z * conj(w) / |w|^2`.
    pub fn div(&self, other: &ComplexBox, bits: u32) -> ComplexBox {
        let den = other.modulus_sq();
        assert!(!den.contains_zero(), "division by complex box containing zero");
        let num = self.mul(&other.conj());
        ComplexBox { re: num.re.div(&den, bits), im: num.im.div(&den, bits) }
    }

    pub fn pow(&self, n: u64) -> ComplexBox {
        let mut result = ComplexBox::point(Dyadic::one(), Dyadic::zero());
        if n == 0 {
            return result;
        }
        let mut base = self.clone();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        result
    }

    pub fn round_out(&self, bits: u32) -> ComplexBox {
        ComplexBox { re: self.re.round_out(bits), im: self.im.round_out(bits) }
    }
}

/// Interval Horner evaluation of an integer polynomial over a box.
pub fn eval_poly_box(coeffs: &[BigInt], z: &ComplexBox, round_bits: Option<u32>) -> ComplexBox {
    let mut acc = ComplexBox::point(Dyadic::zero(), Dyadic::zero());
    for c in coeffs.iter().rev() {
        acc = acc.mul(z);
        acc.re = acc.re.add(&Interval::from_bigint(c));
        if let Some(bits) = round_bits {
            acc = acc.round_out(bits);
        }
    }
    acc
}

/// Interval Horner evaluation over a real interval.
pub fn eval_poly_interval(coeffs: &[BigInt], x: &Interval, round_bits: Option<u32>) -> Interval {
    let mut acc = Interval::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(&Interval::from_bigint(c));
        if let Some(bits) = round_bits {
            acc = acc.round_out(bits);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(m: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(m), e)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn dyadic_rounding_brackets() {
        let x = rat(1, 3);
        let lo = dyadic_floor(&x, 16);
        let hi = dyadic_ceil(&x, 16);
        assert!(lo <= x && x <= hi);
        assert!((&hi - &lo) < rat(1, 1 << 14));
        let y = rat(-7, 3);
        assert!(dyadic_floor(&y, 10) <= y && y <= dyadic_ceil(&y, 10));
    }

    #[test]
    fn interval_mul_signs() {
        let a = Interval::new(dy(-2, 0), dy(3, 0));
        let b = Interval::new(dy(-1, 0), dy(4, 0));
        let c = a.mul(&b);
        assert_eq!(c.lo, dy(-8, 0));
        assert_eq!(c.hi, dy(12, 0));
        let sq = a.square();
        assert_eq!(sq.lo, Dyadic::zero());
        assert_eq!(sq.hi, dy(9, 0));
    }

    #[test]
    fn complex_modulus_and_division() {
        let z = ComplexBox::point(dy(3, 0), dy(4, 0));
        assert_eq!(z.modulus_sq(), Interval::point(dy(25, 0)));
        let w = ComplexBox::point(dy(0, 0), dy(1, 0));
        let q = z.div(&w, 64); // (3+4i)/i = 4-3i
        assert!(q.re.contains(&dy(4, 0)));
        assert!(q.im.contains(&dy(-3, 0)));
        assert!(q.re.width() < dy(1, -32));
    }

    #[test]
    fn division_encloses_true_value() {
        let z = ComplexBox::new(Interval::new(dy(1, 0), dy(5, -2)), Interval::new(dy(1, -1), dy(3, -2).add(&dy(1, -1))));
        let w = ComplexBox::new(Interval::new(dy(3, -1), dy(2, 0)), Interval::new(dy(-1, -2), dy(1, -2)));
        let q = z.div(&w, 80);
        // check a few point quotients stay inside
        let zm = ComplexBox::point(z.re.midpoint(), z.im.midpoint());
        let wm = ComplexBox::point(w.re.midpoint(), w.im.midpoint());
        let qm = zm.div(&wm, 200);
        assert!(q.re.contains(&qm.re.midpoint()));
        assert!(q.im.contains(&qm.im.midpoint()));
    }

    #[test]
    fn horner_over_box_contains_point_values() {
        let coeffs: Vec<BigInt> = [-1i64, -1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let iv = Interval::new(dy(1, 0), dy(3, -1));
        let v = eval_poly_interval(&coeffs, &iv, Some(64));
        // P(x) = x^3 - x - 1 at 1 is -1, at 3/2 is 7/8
        assert!(v.contains(&dy(-1, 0)));
        assert!(v.contains(&dy(7, -3)));
        let b = ComplexBox::real(iv);
        let vb = eval_poly_box(&coeffs, &b, None);
        assert!(vb.re.contains(&dy(-1, 0)) && vb.re.contains(&dy(7, -3)));
    }

    #[test]
    fn unique_integer_detection() {
        let third_up = Interval::new(dy(5, 0).div_floor(&dy(3, 0), 40), dy(7, 0).div_ceil(&dy(3, 0), 40));
        assert_eq!(third_up.unique_integer(), Some(BigInt::from(2)));
        assert_eq!(Interval::new(dy(1, -2), dy(9, -2)).unique_integer(), None);
        assert_eq!(Interval::point(dy(3, 0)).unique_integer(), Some(BigInt::from(3)));
    }

    #[test]
    fn pow_contains_true_powers() {
        let iv = Interval::new(dy(-3, -1), dy(1, -1));
        let cubed = iv.pow(3);
        assert!(cubed.contains(&dy(-27, -3)));
        assert!(cubed.contains(&dy(1, -3)));
        assert!(cubed.contains(&Dyadic::zero()));
    }
}
