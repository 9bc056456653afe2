//! Dyadic numbers `mant * 2^exp`: the endpoint arithmetic for all
//! certified enclosures. Addition and multiplication are exact, rounding
//! is explicit, and nothing ever computes a gcd, which keeps interval
//! arithmetic fast at tens of thousands of bits.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Dyadic { mant, exp: 0 };
        }
        Dyadic { mant, exp }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Dyadic::new(n.clone(), 0)
    }

    /// 2^e.
    pub fn power_of_two(e: i64) -> Self {
        Dyadic { mant: BigInt::one(), exp: e }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn sign(&self) -> i32 {
        if self.mant.is_zero() {
            0
        } else if self.mant.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Approximate log2 of |value| (exact within 1).
    pub fn magnitude_bits(&self) -> Option<i64> {
        if self.mant.is_zero() {
            None
        } else {
            Some(self.mant.bits() as i64 + self.exp)
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.mant.is_zero() {
            return other.clone();
        }
        if other.mant.is_zero() {
            return self.clone();
        }
        if self.exp == other.exp {
            return Dyadic::new(&self.mant + &other.mant, self.exp);
        }
        let (lo, hi) = if self.exp < other.exp { (self, other) } else { (other, self) };
        let shift = (hi.exp - lo.exp) as u64;
        Dyadic::new(&lo.mant + (&hi.mant << shift), lo.exp)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.mant.is_zero() || other.mant.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mant: &self.mant * &other.mant, exp: self.exp + other.exp }
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Self {
        if k.is_zero() || self.mant.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mant: &self.mant * k, exp: self.exp }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Halves the value exactly.
    pub fn half(&self) -> Self {
        if self.mant.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp - 1 }
    }

    /// Division rounded toward minus infinity with `bits` result bits.
    pub fn div_floor(&self, other: &Self, bits: u32) -> Self {
        self.div_rounded(other, bits, false)
    }

    /// Division rounded toward plus infinity with `bits` result bits.
    pub fn div_ceil(&self, other: &Self, bits: u32) -> Self {
        self.div_rounded(other, bits, true)
    }

    fn div_rounded(&self, other: &Self, bits: u32, up: bool) -> Self {
        assert!(!other.mant.is_zero(), "dyadic division by zero");
        if self.mant.is_zero() {
            return Dyadic::zero();
        }
        // scale the dividend so the integer quotient keeps `bits` bits
        let scale = bits as i64 + other.mant.bits() as i64 - self.mant.bits() as i64 + 2;
        let shift = scale.max(0) as u64;
        let num = &self.mant << shift;
        let (mut q, r) = num_integer::Integer::div_rem(&num, &other.mant);
        if !r.is_zero() {
            let exact_negative = (num.is_negative()) ^ (other.mant.is_negative());
            if up && !exact_negative {
                q += 1;
            } else if !up && exact_negative {
                q -= 1;
            }
        }
        Dyadic::new(q, self.exp - other.exp - shift as i64)
    }

    /// Rounds toward minus infinity keeping about `bits` significant bits.
    pub fn round_floor(&self, bits: u32) -> Self {
        self.round(bits, false)
    }

    /// Rounds toward plus infinity keeping about `bits` significant bits.
    pub fn round_ceil(&self, bits: u32) -> Self {
        self.round(bits, true)
    }

    fn round(&self, bits: u32, up: bool) -> Self {
        let mant_bits = self.mant.bits();
        if mant_bits <= bits as u64 {
            return self.clone();
        }
        let drop = mant_bits - bits as u64;
        let q = &self.mant >> drop;
        let lost = !(&q << drop).eq(&self.mant);
        let mut q = q;
        if lost && up {
            q += 1; // shifting truncates toward minus infinity
        }
        Dyadic::new(q, self.exp + drop as i64)
    }

    pub fn floor_bigint(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            &self.mant >> (-self.exp) as u64
        }
    }

    pub fn ceil_bigint(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            let shift = (-self.exp) as u64;
            let q = &self.mant >> shift;
            if (&q << shift).eq(&self.mant) {
                q
            } else {
                q + 1
            }
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.mant.is_zero() {
            return BigRational::zero();
        }
        if self.exp >= 0 {
            return BigRational::from(&self.mant << self.exp as u64);
        }
        // reduce by stripping shared factors of two explicitly; new_raw
        // then receives a fraction already in lowest terms
        let k = (-self.exp) as u64;
        let tz = self.mant.trailing_zeros().unwrap_or(0).min(k);
        let mant = &self.mant >> tz;
        let rest = k - tz;
        if rest == 0 {
            BigRational::from(mant)
        } else {
            BigRational::new_raw(mant, BigInt::one() << rest)
        }
    }

    /// Exact conversion when the rational is dyadic, otherwise None.
    pub fn from_rational_exact(x: &BigRational) -> Option<Self> {
        let den = x.denom();
        if den.is_one() {
            return Some(Dyadic::new(x.numer().clone(), 0));
        }
        if den.magnitude().count_ones() == 1 {
            let e = den.bits() as i64 - 1;
            return Some(Dyadic::new(x.numer().clone(), -e));
        }
        None
    }

    /// Conversion with directed rounding at `bits` significant bits.
    pub fn from_rational(x: &BigRational, bits: u32, up: bool) -> Self {
        if let Some(d) = Self::from_rational_exact(x) {
            return d;
        }
        let num = Dyadic::from_bigint(x.numer());
        let den = Dyadic::from_bigint(x.denom());
        if up {
            num.div_ceil(&den, bits)
        } else {
            num.div_floor(&den, bits)
        }
    }

    /// Integer square root based bound: largest dyadic with
    /// `result^2 <= self` at the given precision.
    pub fn sqrt_floor(&self, bits: u32) -> Self {
        assert!(!self.mant.is_negative(), "sqrt of negative dyadic");
        if self.mant.is_zero() {
            return Dyadic::zero();
        }
        // write self = m * 2^e with e even after scaling to precision
        let want = 2 * bits as i64 + 2;
        let cur = self.mant.bits() as i64;
        let mut shift = (want - cur).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let m = &self.mant << shift as u64;
        let root = m.sqrt();
        Dyadic::new(root, (self.exp - shift) / 2)
    }

    /// Smallest dyadic with `result^2 >= self` at the given precision.
    pub fn sqrt_ceil(&self, bits: u32) -> Self {
        let f = self.sqrt_floor(bits);
        if f.square().cmp_dyadic(self) == Ordering::Less {
            Dyadic::new(f.mant + 1, f.exp)
        } else {
            f
        }
    }

    pub fn cmp_dyadic(&self, other: &Self) -> Ordering {
        let s1 = self.sign();
        let s2 = other.sign();
        if s1 != s2 {
            return s1.cmp(&s2);
        }
        if s1 == 0 {
            return Ordering::Equal;
        }
        // fast path: magnitude windows disjoint
        let m1 = self.magnitude_bits().unwrap();
        let m2 = other.magnitude_bits().unwrap();
        if m1 + 1 < m2 {
            return if s1 > 0 { Ordering::Less } else { Ordering::Greater };
        }
        if m2 + 1 < m1 {
            return if s1 > 0 { Ordering::Greater } else { Ordering::Less };
        }
        // align exponents and compare mantissas
        if self.exp == other.exp {
            return self.mant.cmp(&other.mant);
        }
        if self.exp < other.exp {
            let shifted = &other.mant << (other.exp - self.exp) as u64;
            self.mant.cmp(&shifted)
        } else {
            let shifted = &self.mant << (self.exp - other.exp) as u64;
            shifted.cmp(&other.mant)
        }
    }

    pub fn min_dyadic(self, other: Self) -> Self {
        if self.cmp_dyadic(&other) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn max_dyadic(self, other: Self) -> Self {
        if self.cmp_dyadic(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    /// Best-effort f64 for display.
    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let shift = bits.saturating_sub(52);
        let head = &self.mant >> shift;
        let (sign, digits) = head.to_u64_digits();
        let mag = digits.first().copied().unwrap_or(0) as f64;
        let exp = self.exp + shift as i64;
        let v = if exp.unsigned_abs() > 30_000 {
            if exp > 0 {
                f64::INFINITY
            } else {
                0.0
            }
        } else {
            mag * 2f64.powi(exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
        };
        if sign == num_bigint::Sign::Minus {
            -v
        } else {
            v
        }
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_dyadic(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_dyadic(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_dyadic(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(m: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(m), e)
    }

    #[test]
    fn arithmetic_basics() {
        let a = dy(3, -2); // 0.75
        let b = dy(5, -1); // 2.5
        assert_eq!(a.add(&b), dy(13, -2));
        assert_eq!(b.sub(&a), dy(7, -2));
        assert_eq!(a.mul(&b), dy(15, -3));
        assert_eq!(a.square(), dy(9, -4));
        assert!(a < b);
        assert_eq!(dy(4, -2), dy(1, 0));
    }

    #[test]
    fn division_rounds_outward() {
        let one = Dyadic::one();
        let three = dy(3, 0);
        let lo = one.div_floor(&three, 20);
        let hi = one.div_ceil(&three, 20);
        assert!(lo < hi);
        assert!(lo.mul(&three) <= one);
        assert!(hi.mul(&three) >= one);
        let gap = hi.sub(&lo);
        assert!(gap < dy(1, -18));
    }

    #[test]
    fn rounding_directions() {
        let x = dy((1 << 20) + 1, -20); // slightly above 1
        let down = x.round_floor(8);
        let up = x.round_ceil(8);
        assert!(down <= x && x <= up);
        let y = x.neg();
        assert!(y.round_floor(8) <= y && y <= y.round_ceil(8));
    }

    #[test]
    fn floors_and_ceils() {
        assert_eq!(dy(7, -1).floor_bigint(), BigInt::from(3));
        assert_eq!(dy(7, -1).ceil_bigint(), BigInt::from(4));
        assert_eq!(dy(-7, -1).floor_bigint(), BigInt::from(-4));
        assert_eq!(dy(-7, -1).ceil_bigint(), BigInt::from(-3));
        assert_eq!(dy(4, -1).floor_bigint(), BigInt::from(2));
        assert_eq!(dy(4, -1).ceil_bigint(), BigInt::from(2));
    }

    #[test]
    fn rational_round_trip() {
        let x = dy(11, -3);
        let r = x.to_rational();
        assert_eq!(Dyadic::from_rational_exact(&r).unwrap(), x);
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        let lo = Dyadic::from_rational(&third, 30, false);
        let hi = Dyadic::from_rational(&third, 30, true);
        assert!(lo.to_rational() <= third && third <= hi.to_rational());
    }

    #[test]
    fn sqrt_bounds() {
        let two = dy(2, 0);
        let lo = two.sqrt_floor(40);
        let hi = two.sqrt_ceil(40);
        assert!(lo.square() <= two && two <= hi.square());
        assert!(hi.sub(&lo) < dy(1, -35));
    }
}
