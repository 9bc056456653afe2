//! Sturm chains: exact real-root counting and isolation over Q.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPolynomial;

/// An endpoint of a real interval, possibly infinite.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Endpoint {
    pub fn finite(x: i64) -> Self {
        Endpoint::Finite(BigRational::from(BigInt::from(x)))
    }
}

/// Sturm chain of the squarefree part of a polynomial.
///
/// Chain members are kept primitive with the sign of the exact remainder
/// sequence, so sign variations match the classical chain.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(poly: &IntPolynomial) -> Self {
        let p = poly.squarefree_part();
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = neg_rem(&chain[n - 2], &chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        SturmChain { chain }
    }

    /// The squarefree polynomial the chain was built from.
    pub fn poly(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    /// Sign variations at a point, zeros skipped. At a root of the
    /// polynomial this equals the variation count just right of it.
    fn variations_at(&self, x: &BigRational) -> usize {
        let signs: Vec<i32> =
            self.chain.iter().map(|p| p.sign_at(x)).filter(|s| *s != 0).collect();
        count_changes(&signs)
    }

    fn variations_at_endpoint(&self, e: &Endpoint) -> usize {
        match e {
            Endpoint::Finite(x) => self.variations_at(x),
            Endpoint::PosInf => {
                let signs: Vec<i32> = self
                    .chain
                    .iter()
                    .map(|p| sign_of(&p.leading()))
                    .filter(|s| *s != 0)
                    .collect();
                count_changes(&signs)
            }
            Endpoint::NegInf => {
                let signs: Vec<i32> = self
                    .chain
                    .iter()
                    .map(|p| {
                        let s = sign_of(&p.leading());
                        if p.degree().unwrap_or(0) % 2 == 1 {
                            -s
                        } else {
                            s
                        }
                    })
                    .filter(|s| *s != 0)
                    .collect();
                count_changes(&signs)
            }
        }
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Endpoint, b: &Endpoint) -> usize {
        let va = self.variations_at_endpoint(a);
        let vb = self.variations_at_endpoint(b);
        va.saturating_sub(vb)
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Endpoint, b: &Endpoint) -> usize {
        let mut n = self.count_half_open(a, b);
        if let Endpoint::Finite(x) = b {
            if self.poly().sign_at(x) == 0 {
                n -= 1;
            }
        }
        n
    }

    /// A bound B with all real roots in (-B, B).
    pub fn root_bound(&self) -> BigRational {
        cauchy_bound(self.poly())
    }

    /// Isolating intervals for all real roots, left to right. Each result
    /// `(lo, hi)` either has `lo == hi` (an exact rational root) or
    /// contains exactly one root strictly inside, with nonzero polynomial
    /// values at both endpoints.
    pub fn isolate_real_roots(&self) -> Vec<(BigRational, BigRational)> {
        if self.poly().degree().map_or(true, |d| d == 0) {
            return Vec::new();
        }
        let bound = self.root_bound();
        let lo = -&bound;
        let hi = bound;
        debug_assert!(self.poly().sign_at(&lo) != 0 && self.poly().sign_at(&hi) != 0);
        let total = self.count_open(
            &Endpoint::Finite(lo.clone()),
            &Endpoint::Finite(hi.clone()),
        );
        let mut out = Vec::with_capacity(total);
        self.isolate_rec(lo, hi, total, &mut out);
        debug_assert_eq!(out.len(), total);
        out
    }

    /// Recursively isolates `count` roots strictly inside `(lo, hi)`;
    /// both endpoints are non-roots.
    fn isolate_rec(
        &self,
        lo: BigRational,
        hi: BigRational,
        count: usize,
        out: &mut Vec<(BigRational, BigRational)>,
    ) {
        if count == 0 {
            return;
        }
        if count == 1 {
            out.push((lo, hi));
            return;
        }
        let two = BigRational::from(BigInt::from(2));
        let mid = (&lo + &hi) / &two;
        if self.poly().sign_at(&mid) == 0 {
            let left = self.count_open(
                &Endpoint::Finite(lo.clone()),
                &Endpoint::Finite(mid.clone()),
            );
            let right = self.count_open(
                &Endpoint::Finite(mid.clone()),
                &Endpoint::Finite(hi.clone()),
            );
            // the exact root at mid needs padding so neighbours keep
            // non-root endpoints
            let pad_l = find_nonroot_between(self, &lo, &mid, left);
            let pad_r = find_nonroot_between_right(self, &mid, &hi, right);
            self.isolate_rec(lo, pad_l.clone(), left, out);
            out.push((mid.clone(), mid));
            self.isolate_rec(pad_r, hi, right, out);
        } else {
            let left = self.count_open(
                &Endpoint::Finite(lo.clone()),
                &Endpoint::Finite(mid.clone()),
            );
            let right = count - left;
            self.isolate_rec(lo, mid.clone(), left, out);
            self.isolate_rec(mid, hi, right, out);
        }
    }
}

/// Picks a point in `(lo, mid)` that is right of all `count` roots there
/// and is not itself a root.
fn find_nonroot_between(
    chain: &SturmChain,
    lo: &BigRational,
    mid: &BigRational,
    count: usize,
) -> BigRational {
    let two = BigRational::from(BigInt::from(2));
    let mut x = (lo + mid) / &two;
    loop {
        if chain.poly().sign_at(&x) != 0
            && chain.count_open(&Endpoint::Finite(lo.clone()), &Endpoint::Finite(x.clone()))
                == count
        {
            return x;
        }
        x = (&x + mid) / &two;
    }
}

/// Symmetric helper: a point in `(mid, hi)` left of all `count` roots.
fn find_nonroot_between_right(
    chain: &SturmChain,
    mid: &BigRational,
    hi: &BigRational,
    count: usize,
) -> BigRational {
    let two = BigRational::from(BigInt::from(2));
    let mut x = (mid + hi) / &two;
    loop {
        if chain.poly().sign_at(&x) != 0
            && chain.count_open(&Endpoint::Finite(x.clone()), &Endpoint::Finite(hi.clone()))
                == count
        {
            return x;
        }
        x = (mid + &x) / &two;
    }
}

/// Exact real-root count of `poly` on the open interval `(a, b)`;
/// squarefree normalization is applied internally.
pub fn sturm_count(poly: &IntPolynomial, a: &Endpoint, b: &Endpoint) -> usize {
    SturmChain::new(poly).count_open(a, b)
}

fn neg_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    // Sign-faithful remainder: compute over Q, then clear denominators by a
    // positive rational so the sign pattern of the classical chain is kept.
    let (_, r) = super::poly::RatPolynomial::from_int(a)
        .divrem(&super::poly::RatPolynomial::from_int(b))
        .expect("nonzero divisor");
    let neg =
        super::poly::RatPolynomial::from_coeffs(r.coeffs().iter().map(|c| -c).collect());
    let (content, prim) = neg.primitive_int();
    if content.is_negative() {
        prim.neg()
    } else {
        prim
    }
}

fn count_changes(signs: &[i32]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign_of(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Cauchy bound: all complex roots have modulus < 1 + max |a_i| / |lead|.
pub fn cauchy_bound(poly: &IntPolynomial) -> BigRational {
    let d = poly.deg();
    let lead = poly.leading().abs();
    let mut m = BigInt::zero();
    for i in 0..d {
        let a = poly.coeff(i).abs();
        if a > m {
            m = a;
        }
    }
    BigRational::one() + BigRational::new(m, lead)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn counting_examples() {
        assert_eq!(
            sturm_count(&p("x^2-2"), &Endpoint::finite(0), &Endpoint::finite(2)),
            1
        );
        assert_eq!(
            sturm_count(&p("x^2+1"), &Endpoint::finite(-10), &Endpoint::finite(10)),
            0
        );
        // the totally real cubic has exactly one root left of -1
        assert_eq!(
            sturm_count(&p("x^3-5x^2-2x+5"), &Endpoint::NegInf, &Endpoint::finite(-1)),
            1
        );
        assert_eq!(sturm_count(&p("x^3-5x^2-2x+5"), &Endpoint::NegInf, &Endpoint::PosInf), 3);
    }

    #[test]
    fn open_interval_excludes_endpoint_roots() {
        // roots at 1 and 2
        let q = p("x^2-3x+2");
        assert_eq!(sturm_count(&q, &Endpoint::finite(1), &Endpoint::finite(2)), 0);
        assert_eq!(sturm_count(&q, &Endpoint::finite(0), &Endpoint::finite(2)), 1);
        assert_eq!(sturm_count(&q, &Endpoint::finite(0), &Endpoint::finite(3)), 2);
    }

    #[test]
    fn squarefree_normalization_applied() {
        let q = p("x^2-2").mul(&p("x^2-2"));
        assert_eq!(sturm_count(&q, &Endpoint::NegInf, &Endpoint::PosInf), 2);
    }

    #[test]
    fn partition_additivity() {
        let q = p("x^5-x^4-3x^3+x^2+2x-1");
        let total = sturm_count(&q, &Endpoint::NegInf, &Endpoint::PosInf);
        let mid = Endpoint::finite(0);
        let a = sturm_count(&q, &Endpoint::NegInf, &mid);
        let at_mid = usize::from(q.sign_at(&BigRational::zero()) == 0);
        let b = sturm_count(&q, &mid, &Endpoint::PosInf);
        assert_eq!(a + at_mid + b, total);
    }

    #[test]
    fn isolation_separates_roots() {
        // (x-1)(x-2)(x^2-2): roots -sqrt2, 1, sqrt2, 2
        let q = p("x-1").mul(&p("x-2")).mul(&p("x^2-2"));
        let chain = SturmChain::new(&q);
        let roots = chain.isolate_real_roots();
        assert_eq!(roots.len(), 4);
        for w in roots.windows(2) {
            assert!(w[0].1 <= w[1].0, "intervals out of order or overlapping");
        }
        for (lo, hi) in &roots {
            if lo == hi {
                assert_eq!(chain.poly().sign_at(lo), 0);
            } else {
                assert_eq!(
                    chain.count_open(
                        &Endpoint::Finite(lo.clone()),
                        &Endpoint::Finite(hi.clone())
                    ),
                    1
                );
                assert_ne!(chain.poly().sign_at(lo), 0);
                assert_ne!(chain.poly().sign_at(hi), 0);
            }
        }
    }

    #[test]
    fn isolation_with_exact_midpoint_hit() {
        // roots at 0 (rational, hit by the first midpoint) and +-sqrt2
        let q = p("x").mul(&p("x^2-2"));
        let chain = SturmChain::new(&q);
        let roots = chain.isolate_real_roots();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().any(|(l, h)| l == h && l.is_zero()));
    }
}
