//! Simultaneous root approximation by Aberth-Ehrlich iteration in dyadic
//! arithmetic. This is only the search; certification happens elsewhere.

use num_bigint::BigInt;
use num_traits::Zero;

use super::dyadic::Dyadic;
use crate::algebra::IntPolynomial;

#[derive(Debug, Clone)]
pub struct DyComplex {
    pub re: Dyadic,
    pub im: Dyadic,
}

impl DyComplex {
    fn new(re: Dyadic, im: Dyadic) -> Self {
        DyComplex { re, im }
    }

    fn zero() -> Self {
        DyComplex::new(Dyadic::zero(), Dyadic::zero())
    }

    fn one() -> Self {
        DyComplex::new(Dyadic::one(), Dyadic::zero())
    }

    fn round(&self, bits: u32) -> Self {
        DyComplex::new(self.re.round_floor(bits), self.im.round_floor(bits))
    }

    fn add(&self, o: &Self) -> Self {
        DyComplex::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    fn sub(&self, o: &Self) -> Self {
        DyComplex::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    fn mul(&self, o: &Self, bits: u32) -> Self {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        DyComplex::new(re.round_floor(bits), im.round_floor(bits))
    }

    fn norm_sq(&self) -> Dyadic {
        self.re.square().add(&self.im.square())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn div(&self, o: &Self, bits: u32) -> Self {
        let n2 = o.norm_sq();
        debug_assert!(!n2.is_zero());
        let num_re = self.re.mul(&o.re).add(&self.im.mul(&o.im));
        let num_im = self.im.mul(&o.re).sub(&self.re.mul(&o.im));
        DyComplex::new(num_re.div_floor(&n2, bits), num_im.div_floor(&n2, bits))
    }
}

/// Horner evaluation of P and P' at z, rounded to `bits`.
fn eval_with_deriv(poly: &IntPolynomial, z: &DyComplex, bits: u32) -> (DyComplex, DyComplex) {
    let mut p = DyComplex::zero();
    let mut dp = DyComplex::zero();
    for c in poly.coeffs().iter().rev() {
        dp = dp.mul(z, bits).add(&p).round(bits);
        p = p.mul(z, bits);
        p.re = p.re.add(&Dyadic::from_bigint(c)).round_floor(bits);
    }
    (p, dp)
}

/// Tropical (Newton-polygon) estimates of root magnitudes: for each upper
/// hull edge from i to j (i < j) there are j-i roots of magnitude about
/// 2^((y_i - y_j)/(j - i)) where y_k = log2 |a_k|.
fn tropical_radii(poly: &IntPolynomial) -> Vec<(i64, u32)> {
    let pts: Vec<(i64, i64)> = poly
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as i64, c.bits() as i64))
        .collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            if (b.1 - a.1) * (p.0 - a.0) > (p.1 - a.1) * (b.0 - a.0) {
                break;
            }
            hull.pop();
        }
        hull.push(p);
    }
    let mut out = Vec::new();
    for w in hull.windows(2) {
        let (i, yi) = w[0];
        let (j, yj) = w[1];
        let count = (j - i) as u32;
        let exp = ((yi - yj) as f64 / (j - i) as f64).round() as i64;
        out.push((exp, count));
    }
    out
}

fn from_f64_scaled(x: f64, exp: i64) -> Dyadic {
    let scaled = (x * (1u64 << 32) as f64).round() as i64;
    Dyadic::new(BigInt::from(scaled), exp - 32)
}

fn initial_guesses(poly: &IntPolynomial) -> Vec<DyComplex> {
    let d = poly.deg();
    let mut guesses = Vec::with_capacity(d);
    let mut idx = 0usize;
    for (exp, count) in tropical_radii(poly) {
        for _ in 0..count {
            // equispaced angles with an offset so no guess starts on an axis
            let theta = 2.0 * std::f64::consts::PI * (idx as f64 + 0.2641) / d as f64 + 0.521;
            guesses.push(DyComplex::new(
                from_f64_scaled(theta.cos(), exp),
                from_f64_scaled(theta.sin(), exp),
            ));
            idx += 1;
        }
    }
    while guesses.len() < d {
        let theta = 2.0 * std::f64::consts::PI * (guesses.len() as f64 + 0.2641) / d as f64;
        guesses.push(DyComplex::new(
            from_f64_scaled(theta.cos(), 0),
            from_f64_scaled(theta.sin(), 0),
        ));
    }
    guesses.truncate(d);
    guesses
}

/// Runs Aberth-Ehrlich at `bits` working precision; `warm` seeds the
/// iteration when provided. Returns d approximations (unordered, not
/// certified).
pub fn aberth(poly: &IntPolynomial, bits: u32, warm: Option<&[DyComplex]>) -> Vec<DyComplex> {
    let d = poly.deg();
    assert!(d >= 1);
    let mut z: Vec<DyComplex> = match warm {
        Some(w) if w.len() == d => w.to_vec(),
        _ => initial_guesses(poly),
    };
    let max_iters = 60 + 6 * d + bits as usize / 2;
    let tol_sq = Dyadic::power_of_two(-2 * (bits as i64 - 6));
    for _ in 0..max_iters {
        let mut max_rel = Dyadic::zero();
        let snapshot = z.clone();
        for i in 0..d {
            let (pv, pd) = eval_with_deriv(poly, &z[i], bits * 2);
            if pv.is_zero() {
                continue;
            }
            let newton = if pd.is_zero() {
                DyComplex::new(
                    Dyadic::power_of_two(-(bits as i64) / 2),
                    Dyadic::power_of_two(-(bits as i64) / 2),
                )
            } else {
                pv.div(&pd, bits * 2)
            };
            let mut sum = DyComplex::zero();
            let mut degenerate = false;
            for (j, other) in snapshot.iter().enumerate() {
                if j == i {
                    continue;
                }
                let diff = z[i].sub(other);
                if diff.is_zero() {
                    degenerate = true;
                    break;
                }
                sum = sum.add(&DyComplex::one().div(&diff, bits)).round(bits);
            }
            if degenerate {
                // split coincident guesses apart and move on
                z[i] = z[i].add(&DyComplex::new(
                    Dyadic::power_of_two(-8),
                    Dyadic::power_of_two(-9),
                ));
                continue;
            }
            let denom = DyComplex::one().sub(&newton.mul(&sum, bits));
            let w = if denom.is_zero() { newton.clone() } else { newton.div(&denom, bits) };
            z[i] = z[i].sub(&w).round(bits * 2);
            let rel = w.norm_sq().div_floor(&z[i].norm_sq().add(&Dyadic::one()), 64);
            if rel > max_rel {
                max_rel = rel;
            }
        }
        if max_rel < tol_sq {
            break;
        }
    }
    z
}

/// Cheap display helper used in diagnostics.
pub fn approx_to_f64(z: &DyComplex) -> (f64, f64) {
    (z.re.to_f64(), z.im.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    fn residual(poly: &IntPolynomial, z: &DyComplex) -> f64 {
        let (pv, _) = eval_with_deriv(poly, z, 128);
        pv.norm_sq().to_f64()
    }

    #[test]
    fn quadratic_roots_found() {
        let q = p("x^2-x-1");
        let roots = aberth(&q, 64, None);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(residual(&q, r) < 1e-12, "residual too big: {:?}", approx_to_f64(r));
        }
    }

    #[test]
    fn table_polynomial_roots_found() {
        let q = p("x^12-x^10-x^9+x^4+x^3-x-1");
        let roots = aberth(&q, 80, None);
        assert_eq!(roots.len(), 12);
        for r in &roots {
            assert!(residual(&q, r) < 1e-10);
        }
        let top = roots
            .iter()
            .map(approx_to_f64)
            .filter(|(_, im)| im.abs() < 1e-6)
            .map(|(re, _)| re)
            .fold(f64::MIN, f64::max);
        assert!((top - 1.2528).abs() < 1e-3, "perron root approx {top}");
    }

    #[test]
    fn huge_coefficients_dont_break_search() {
        let q = p("x^3-1000000000000x^2-2x+999999999999");
        let roots = aberth(&q, 96, None);
        for r in &roots {
            let (pv, _) = eval_with_deriv(&q, r, 200);
            let rel = pv.norm_sq().to_f64() / 1e24;
            assert!(rel < 1e-6, "rel residual {rel}");
        }
    }
}
