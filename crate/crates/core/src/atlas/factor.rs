//! Integer polynomial factorization at census scale by root-cluster
//! reconstruction: isolate all roots in certified enclosures, pick out
//! conjugation-closed clusters whose elementary symmetric functions pin
//! unique integers, and verify candidates by exact division.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{cauchy_bound, IntPolynomial};
use crate::certify::{isolate_roots, Interval, RootEnclosure};

/// Largest degree the census-scale factorizer accepts.
pub const FACTOR_DEGREE_CAP: usize = 24;

/// Complete factorization over the integers: returns (irreducible factor,
/// multiplicity) pairs of the primitive part, factors primitive with
/// positive leading coefficient, sorted for determinism. The content is
/// dropped.
pub fn factor_bounded(poly: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    assert!(!poly.is_zero(), "cannot factor the zero polynomial");
    assert!(
        poly.deg() <= FACTOR_DEGREE_CAP,
        "factor_bounded caps at degree {FACTOR_DEGREE_CAP}"
    );
    let mut p = poly.primitive_positive();
    let mut out: Vec<(IntPolynomial, u32)> = Vec::new();
    // x^k factors
    let mut zero_mult = 0u32;
    while p.deg() >= 1 && p.constant().is_zero() {
        p = IntPolynomial::from_coeffs(p.coeffs()[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((IntPolynomial::x(), zero_mult));
    }
    if p.deg() == 0 {
        out.sort();
        return out;
    }
    for (sf, mult) in squarefree_split(&p) {
        for f in factor_squarefree(&sf) {
            out.push((f, mult));
        }
    }
    out.sort();
    out
}

/// True iff the polynomial is irreducible over Q (up to content).
pub fn is_irreducible(poly: &IntPolynomial) -> bool {
    if poly.degree().map_or(true, |d| d == 0) {
        return false;
    }
    let factors = factor_bounded(poly);
    factors.len() == 1 && factors[0].1 == 1 && factors[0].0.deg() == poly.deg()
}

/// Squarefree split of a primitive polynomial into coprime squarefree
/// factors with multiplicities.
fn squarefree_split(p: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    let mut levels: Vec<IntPolynomial> = Vec::new();
    let mut a = p.clone();
    while a.degree().map_or(false, |d| d >= 1) {
        let g = a.gcd_poly(&a.derivative());
        levels.push(a.div_exact(&g).expect("gcd divides"));
        a = g;
    }
    let mut out = Vec::new();
    for i in 0..levels.len() {
        let factor = match levels.get(i + 1) {
            Some(next) => levels[i]
                .div_exact(&levels[i].gcd_poly(next))
                .unwrap_or_else(|| levels[i].clone()),
            None => levels[i].clone(),
        };
        if factor.degree().map_or(false, |d| d >= 1) {
            out.push((factor.primitive_positive(), (i + 1) as u32));
        }
    }
    out
}

/// A conjugation-closed cluster: one real root, or a conjugate pair
/// represented by its real quadratic (trace and norm intervals).
#[derive(Clone)]
enum Unit {
    Real(RootEnclosure),
    Pair(RootEnclosure),
}

impl Unit {
    fn degree(&self) -> usize {
        match self {
            Unit::Real(_) => 1,
            Unit::Pair(_) => 2,
        }
    }

    fn refine(&mut self) {
        match self {
            Unit::Real(e) | Unit::Pair(e) => e.refine(),
        }
    }

    /// Multiplies the ascending interval coefficient vector by this
    /// unit's monic real factor.
    fn multiply_into(&self, coeffs: &[Interval]) -> Vec<Interval> {
        match self {
            Unit::Real(e) => {
                let r = e.boxed().re;
                // (x - r)
                let mut next = vec![Interval::zero(); coeffs.len() + 1];
                for (j, c) in coeffs.iter().enumerate() {
                    next[j + 1] = next[j + 1].add(c);
                    next[j] = next[j].sub(&c.mul(&r));
                }
                next
            }
            Unit::Pair(e) => {
                let b = e.boxed();
                let trace = b.re.scale(&BigRational::from(BigInt::from(2)));
                let norm = e.modulus_sq();
                // (x^2 - trace x + norm)
                let mut next = vec![Interval::zero(); coeffs.len() + 2];
                for (j, c) in coeffs.iter().enumerate() {
                    next[j + 2] = next[j + 2].add(c);
                    next[j + 1] = next[j + 1].sub(&c.mul(&trace));
                    next[j] = next[j].add(&c.mul(&norm));
                }
                next
            }
        }
    }
}

/// Factors a primitive squarefree polynomial into irreducibles.
fn factor_squarefree(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let d = f.deg();
    if d == 1 {
        return vec![f.primitive_positive()];
    }
    if !f.is_monic() {
        // monicize: g(x) = a^(d-1) f(x/a) is monic; map factors back
        let a = f.leading();
        let g = monicize(f, &a);
        let factors = factor_squarefree(&g);
        return factors
            .into_iter()
            .map(|h| substitute_scale(&h, &a).primitive_positive())
            .collect();
    }
    // isolate and group into conjugation-closed units
    let iso = isolate_roots(f);
    let mut units: Vec<Unit> = Vec::new();
    let mut used = vec![false; iso.roots.len()];
    for i in 0..iso.roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        match iso.conj[i] {
            None => units.push(Unit::Real(iso.roots[i].clone())),
            Some(j) => {
                used[j] = true;
                // keep the upper representative
                let e = if iso.roots[i].boxed().im.lo.is_positive() {
                    iso.roots[i].clone()
                } else {
                    iso.roots[j].clone()
                };
                units.push(Unit::Pair(e));
            }
        }
    }
    // refine all units to a width where any subset's symmetric functions
    // are pinned inside unit-width intervals
    let bound = cauchy_bound(f);
    let mut target_bits = 16u32;
    {
        // log2 of (d * 2^d * bound^d) plus slack
        let b = bound.numer().bits() as u32 + 1;
        target_bits += d as u32 * (b + 1) + d as u32 + 8;
    }
    for u in units.iter_mut() {
        refine_unit_to_bits(u, target_bits);
    }

    let mut result = Vec::new();
    let mut remaining = f.clone();
    let mut pool = units;
    'outer: loop {
        let total: usize = pool.iter().map(|u| u.degree()).sum();
        if total == 0 {
            break;
        }
        for size in 1..=total / 2 {
            let mut chosen: Vec<usize> = Vec::new();
            if let Some(g) = search_subset(&pool, &mut chosen, 0, size, &remaining) {
                // peel the factor and its units, continue on the quotient
                let q = remaining.div_exact(&g).expect("verified divisor");
                remaining = q;
                let using: Vec<usize> = chosen;
                let mut new_pool = Vec::new();
                for (i, u) in pool.into_iter().enumerate() {
                    if !using.contains(&i) {
                        new_pool.push(u);
                    }
                }
                pool = new_pool;
                result.push(g);
                continue 'outer;
            }
        }
        // nothing of size <= total/2 divides: the remainder is irreducible
        result.push(remaining.primitive_positive());
        break;
    }
    result.sort();
    result
}

/// Depth-first search over units for a subset of total degree `size`
/// whose product pins an integer polynomial dividing `remaining`.
fn search_subset(
    pool: &[Unit],
    chosen: &mut Vec<usize>,
    start: usize,
    size_left: usize,
    remaining: &IntPolynomial,
) -> Option<IntPolynomial> {
    if size_left == 0 {
        let mut coeffs = vec![Interval::point(BigRational::one())];
        for &i in chosen.iter() {
            coeffs = pool[i].multiply_into(&coeffs);
        }
        let mut ints = Vec::with_capacity(coeffs.len());
        for c in &coeffs {
            // units were refined so that every candidate coefficient has
            // width below one: it pins at most one integer
            match c.unique_integer() {
                Some(n) => ints.push(n),
                None => return None,
            }
        }
        let candidate = IntPolynomial::from_coeffs(ints);
        if candidate.deg() >= 1 && remaining.div_exact(&candidate).is_some() {
            return Some(candidate);
        }
        return None;
    }
    for i in start..pool.len() {
        let du = pool[i].degree();
        if du > size_left {
            continue;
        }
        chosen.push(i);
        if let Some(g) = search_subset(pool, chosen, i + 1, size_left - du, remaining) {
            return Some(g);
        }
        chosen.pop();
    }
    None
}

fn refine_unit_to_bits(u: &mut Unit, bits: u32) {
    let eps = BigRational::new(BigInt::one(), BigInt::one() << bits as u64);
    let mut guard = 0;
    loop {
        let w = match u {
            Unit::Real(e) | Unit::Pair(e) => e.boxed().width(),
        };
        if w < eps {
            return;
        }
        u.refine();
        guard += 1;
        assert!(guard < 64 + 4 * bits, "unit refinement stalled");
    }
}

/// `a^(deg-1) * f(x/a)`: monic integer polynomial whose roots are `a`
/// times the roots of `f` (with `a` the leading coefficient of `f`).
fn monicize(f: &IntPolynomial, a: &BigInt) -> IntPolynomial {
    let d = f.deg();
    let mut coeffs = Vec::with_capacity(d + 1);
    for i in 0..d {
        coeffs.push(f.coeff(i) * a.pow((d - 1 - i) as u32));
    }
    coeffs.push(BigInt::one());
    let g = IntPolynomial::from_coeffs(coeffs);
    debug_assert!(g.is_monic() && g.deg() == d);
    g
}

/// `h(a x)` primitive part: maps factors of the monicized polynomial back.
fn substitute_scale(h: &IntPolynomial, a: &BigInt) -> IntPolynomial {
    let mut coeffs = Vec::with_capacity(h.coeffs().len());
    let mut pw = BigInt::one();
    for c in h.coeffs() {
        coeffs.push(c * &pw);
        pw *= a;
    }
    IntPolynomial::from_coeffs(coeffs).primitive_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn theta5_family_reducibility() {
        let factors = factor_bounded(&p("x^5-x^4-1"));
        let polys: Vec<&IntPolynomial> = factors.iter().map(|(f, _)| f).collect();
        assert_eq!(factors.len(), 2);
        assert!(polys.contains(&&p("x^2-x+1")));
        assert!(polys.contains(&&p("x^3-x-1")));
    }

    #[test]
    fn irreducible_stays_whole() {
        let f = p("x^2-x-1");
        let factors = factor_bounded(&f);
        assert_eq!(factors, vec![(f.clone(), 1)]);
        assert!(is_irreducible(&f));
        assert!(is_irreducible(&p("x^12-x^10-x^9+x^4+x^3-x-1")));
    }

    #[test]
    fn product_round_trip() {
        let a = p("x^2-x-1");
        let b = p("x^2-3x+1");
        let prod = a.mul(&b);
        let factors = factor_bounded(&prod);
        assert_eq!(factors.len(), 2);
        let recon = factors
            .iter()
            .fold(IntPolynomial::one(), |acc, (f, m)| {
                let mut r = acc;
                for _ in 0..*m {
                    r = r.mul(f);
                }
                r
            });
        assert_eq!(recon, prod);
    }

    #[test]
    fn multiplicities_and_zero_roots() {
        // x^2 * (x-1)^3 * (x^2+1)
        let f = p("x^2")
            .mul(&p("x-1"))
            .mul(&p("x-1"))
            .mul(&p("x-1"))
            .mul(&p("x^2+1"));
        let factors = factor_bounded(&f);
        assert!(factors.contains(&(p("x"), 2)));
        assert!(factors.contains(&(p("x-1"), 3)));
        assert!(factors.contains(&(p("x^2+1"), 1)));
    }

    #[test]
    fn cyclotomic_products() {
        // (x^2-x+1)(x^2+x+1)(x^2-2)
        let f = p("x^2-x+1").mul(&p("x^2+x+1")).mul(&p("x^2-2"));
        let factors = factor_bounded(&f);
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn rational_root_factors() {
        let f = p("x^3-6x^2+11x-6"); // (x-1)(x-2)(x-3)
        let factors = factor_bounded(&f);
        assert_eq!(factors.len(), 3);
        for lin in ["x-1", "x-2", "x-3"] {
            assert!(factors.contains(&(p(lin), 1)), "missing {lin}");
        }
    }

    #[test]
    fn non_monic_content() {
        let f = p("2x^2-2"); // content 2, (x-1)(x+1)
        let factors = factor_bounded(&f);
        assert_eq!(factors, vec![(p("x-1"), 1), (p("x+1"), 1)]);
    }
}
