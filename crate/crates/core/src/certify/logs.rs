//! Certified natural-logarithm enclosures on rational intervals.
//!
//! ln is evaluated by range reduction x = 2^e * m with m in [1, 2), then
//! the atanh series ln(m) = 2 * sum t^(2k+1)/(2k+1) with t = (m-1)/(m+1),
//! whose tail is bounded by a geometric series. Everything is exact
//! rational arithmetic with outward rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::{dyadic_ceil, dyadic_floor, Interval};

/// Certified enclosure of ln(x) for a positive rational x.
pub fn ln_point(x: &BigRational, bits: u32) -> Interval {
    assert!(x.is_positive(), "ln of a non-positive rational");
    if x.is_one() {
        return Interval::zero();
    }
    // x = 2^e * m with m in [1, 2)
    let mut e: i64 = 0;
    let two = BigRational::from(BigInt::from(2));
    let mut m = x.clone();
    while m >= two {
        m /= &two;
        e += 1;
    }
    while m < BigRational::one() {
        m *= &two;
        e -= 1;
    }
    let ln_m = ln_atanh(&m, bits);
    if e == 0 {
        return ln_m;
    }
    let ln2 = ln2_enclosure(bits);
    let scaled = ln2.scale(&BigRational::from(BigInt::from(e)));
    ln_m.add(&scaled).round_out(bits + 8)
}

/// Monotone extension to intervals: ln([a,b]) = [ln a, ln b].
pub fn ln_interval(x: &Interval, bits: u32) -> Interval {
    let lo = ln_point(&x.lo, bits);
    let hi = ln_point(&x.hi, bits);
    Interval::new(lo.lo, hi.hi)
}

/// ln(m) for m in [1, 2) via 2*atanh((m-1)/(m+1)); t lands in [0, 1/3).
fn ln_atanh(m: &BigRational, bits: u32) -> Interval {
    let t = (m - BigRational::one()) / (m + BigRational::one());
    if t.is_zero() {
        return Interval::zero();
    }
    sound_atanh_sum(&t, bits)
}

/// Sound enclosure of atanh-series sum scaled by 2, with explicit tail
/// bound. t in (0, 1/3] after range reduction.
fn sound_atanh_sum(t: &BigRational, bits: u32) -> Interval {
    let t2 = t * t;
    let mut lo_sum = BigRational::zero();
    let mut hi_sum = BigRational::zero();
    let mut term_lo = t.clone();
    let mut term_hi = t.clone();
    let mut k: u32 = 0;
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << (bits + 6) as u64);
    loop {
        let d = BigRational::from(BigInt::from(2 * k + 1));
        lo_sum = dyadic_floor(&(&lo_sum + &term_lo / &d), bits + 16);
        hi_sum = dyadic_ceil(&(&hi_sum + &term_hi / &d), bits + 16);
        term_lo = dyadic_floor(&(&term_lo * &t2), bits + 16).max(BigRational::zero());
        term_hi = dyadic_ceil(&(&term_hi * &t2), bits + 16);
        k += 1;
        if &term_hi < &threshold || k > 8 * bits {
            break;
        }
    }
    // tail: sum_{j>=k} t^(2j+1)/(2j+1) <= term_hi / (1 - t^2)
    let one_minus_t2 = BigRational::one() - &t2;
    let tail = dyadic_ceil(&(&term_hi / &one_minus_t2), bits + 16);
    let two = BigRational::from(BigInt::from(2));
    Interval::new(&lo_sum * &two, (&hi_sum + &tail) * &two)
}

/// Cached-precision enclosure of ln 2 = 2*atanh(1/3).
pub fn ln2_enclosure(bits: u32) -> Interval {
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    sound_atanh_sum(&third, bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ln2_matches_reference() {
        let enc = ln2_enclosure(64);
        // ln 2 = 0.693147180559945...
        let lo = rat(693147180559945309, 1_000_000_000_000_000_000);
        let hi = rat(693147180559945310, 1_000_000_000_000_000_000);
        assert!(enc.lo <= hi && lo <= enc.hi, "got {:?}", enc);
        assert!(enc.width() < BigRational::new(BigInt::one(), BigInt::one() << 60u64));
    }

    #[test]
    fn ln_of_large_and_small() {
        let e10 = ln_point(&rat(1024, 1), 64);
        let expect = rat(6931471805599453094, 1_000_000_000_000_000_000);
        assert!(e10.contains(&expect), "ln 1024 enclosure {:?}", e10);
        let inv = ln_point(&rat(1, 1024), 64);
        assert!(inv.contains(&-expect));
    }

    #[test]
    fn golden_ratio_log() {
        // ln(1.618033988749894...) = 0.481211825059603...
        let phi_approx = rat(1618033988749894848, 1_000_000_000_000_000_000);
        let enc = ln_point(&phi_approx, 80);
        let expect = rat(481211825059603447, 1_000_000_000_000_000_000);
        assert!(enc.contains(&expect), "{enc:?}");
        assert!(enc.width() < BigRational::new(BigInt::one(), BigInt::one() << 70u64));
    }

    #[test]
    fn interval_extension_is_monotone() {
        let iv = Interval::new(rat(3, 2), rat(5, 2));
        let l = ln_interval(&iv, 48);
        assert!(l.lo < l.hi);
        assert!(l.contains(&rat(405465108108164382, 1_000_000_000_000_000_000))); // ln 1.5
        assert!(l.contains(&rat(916290731874155065, 1_000_000_000_000_000_000))); // ln 2.5
    }
}
