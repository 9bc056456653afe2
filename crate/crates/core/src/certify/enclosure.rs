//! Certified root enclosures: isolation, refinement, and exact algebraic
//! comparisons.
//!
//! Real roots are isolated by Sturm bisection. Nonreal roots are located by
//! Aberth iteration and then certified with a Krawczyk operator test
//! (existence) plus an interval-derivative test (uniqueness); a count
//! argument over pairwise-disjoint regions makes the isolation complete.
//! Refinement is an interval Newton contraction, so verdicts obtained from
//! enclosures never change under further refinement.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::{Arc, OnceLock};

use super::aberth::{aberth, DyComplex};
use super::interval::{eval_poly_box, ComplexBox, Interval};
use crate::algebra::{Endpoint, IntPolynomial, RatPolynomial, SturmChain};

/// Shared immutable data for all enclosures of one squarefree polynomial.
#[derive(Debug)]
pub struct PolyContext {
    poly: IntPolynomial,
    deriv: IntPolynomial,
    sturm: OnceLock<SturmChain>,
    product: OnceLock<IntPolynomial>,
}

impl PolyContext {
    pub fn new(squarefree: IntPolynomial) -> Arc<Self> {
        debug_assert!(squarefree.is_squarefree());
        let deriv = squarefree.derivative();
        Arc::new(PolyContext { poly: squarefree, deriv, sturm: OnceLock::new(), product: OnceLock::new() })
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn sturm(&self) -> &SturmChain {
        self.sturm.get_or_init(|| SturmChain::new(&self.poly))
    }

    /// Squarefree part of the pairwise root-product polynomial
    /// `prod_{i,j} (x - alpha_i alpha_j)`; every `|root|^2` is among its
    /// roots. Requires a nonzero constant term.
    pub fn product_poly(&self) -> &IntPolynomial {
        self.product.get_or_init(|| {
            assert!(
                !self.poly.constant().is_zero(),
                "product polynomial needs a nonzero constant term"
            );
            product_polynomial(&self.poly).squarefree_part()
        })
    }
}

/// `Res_y(P(y), y^d P(t/y))` by Sylvester-determinant interpolation; its
/// roots are the pairwise products of the roots of P.
fn product_polynomial(p: &IntPolynomial) -> IntPolynomial {
    let d = p.deg();
    let degree = d * d;
    let mut nodes = Vec::with_capacity(degree + 1);
    let mut values = Vec::with_capacity(degree + 1);
    for t in 0..=degree as i64 {
        let tt = BigInt::from(t);
        // B_t(y) = sum_i a_i t^i y^(d-i), degree d in y since a_0 != 0
        let mut bt = vec![BigInt::zero(); d + 1];
        let mut tp = BigInt::one();
        for i in 0..=d {
            bt[d - i] = p.coeff(i) * &tp;
            tp *= &tt;
        }
        let b = IntPolynomial::from_coeffs(bt);
        values.push(crate::algebra::resultant_sylvester(p, &b));
        nodes.push(tt);
    }
    crate::algebra::interpolate_int(&nodes, &values)
}

/// How an enclosure refines.
#[derive(Debug, Clone)]
enum Source {
    /// Real root isolated by Sturm: either an exact rational point
    /// (lo == hi) or an open interval with nonzero endpoint signs.
    Real { ctx: Arc<PolyContext>, lo: BigRational, hi: BigRational },
    /// Nonreal root in a certified box with one-signed imaginary part and
    /// a derivative-free region (0 not in P'(box)).
    Complex { ctx: Arc<PolyContext>, boxx: ComplexBox },
    /// The exp-th power of another root: refines through its base.
    Power { base: Box<RootEnclosure>, exp: u64 },
}

/// A certified complex enclosure containing exactly one root of its source
/// polynomial, refinable on demand.
#[derive(Debug, Clone)]
pub struct RootEnclosure {
    source: Source,
    precision_bits: u32,
}

impl RootEnclosure {
    fn real(ctx: Arc<PolyContext>, lo: BigRational, hi: BigRational) -> Self {
        let mut e = RootEnclosure { source: Source::Real { ctx, lo, hi }, precision_bits: 0 };
        e.precision_bits = e.width_bits();
        e
    }

    fn complex(ctx: Arc<PolyContext>, boxx: ComplexBox) -> Self {
        let mut e = RootEnclosure { source: Source::Complex { ctx, boxx }, precision_bits: 0 };
        e.precision_bits = e.width_bits();
        e
    }

    /// Enclosure of `base^exp` (a root of the power's minimal polynomial).
    pub fn power_of(base: RootEnclosure, exp: u64) -> Self {
        assert!(exp >= 1);
        if exp == 1 {
            return base;
        }
        let mut e =
            RootEnclosure { source: Source::Power { base: Box::new(base), exp }, precision_bits: 0 };
        e.precision_bits = e.width_bits();
        e
    }

    /// Current working precision estimate in bits (negative log2 of the
    /// box width, saturated at 0).
    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    fn width_bits(&self) -> u32 {
        let w = self.boxed().width();
        if w.is_zero() {
            return u32::MAX;
        }
        let bits = w.denom().bits() as i64 - w.numer().bits() as i64;
        bits.max(0) as u32
    }

    /// True when the enclosed root is known real.
    pub fn is_real(&self) -> bool {
        match &self.source {
            Source::Real { .. } => true,
            Source::Complex { .. } => false,
            Source::Power { base, .. } => base.is_real(),
        }
    }

    /// The real interval for real roots.
    pub fn real_interval(&self) -> Option<Interval> {
        match &self.source {
            Source::Real { lo, hi, .. } => Some(Interval::new(lo.clone(), hi.clone())),
            Source::Complex { .. } => None,
            Source::Power { base, exp } => {
                base.real_interval().map(|iv| iv.pow(*exp))
            }
        }
    }

    /// A rectangle certainly containing the root.
    pub fn boxed(&self) -> ComplexBox {
        match &self.source {
            Source::Real { lo, hi, .. } => {
                ComplexBox::real(Interval::new(lo.clone(), hi.clone()))
            }
            Source::Complex { boxx, .. } => boxx.clone(),
            Source::Power { base, exp } => base.boxed().pow(*exp),
        }
    }

    /// Interval certainly containing `|root|^2`.
    pub fn modulus_sq(&self) -> Interval {
        match &self.source {
            Source::Real { lo, hi, .. } => Interval::new(lo.clone(), hi.clone()).square(),
            Source::Complex { boxx, .. } => boxx.modulus_sq(),
            Source::Power { base, exp } => base.modulus_sq().pow(*exp),
        }
    }

    /// The defining squarefree polynomial, when directly available.
    pub fn context(&self) -> Option<&Arc<PolyContext>> {
        match &self.source {
            Source::Real { ctx, .. } | Source::Complex { ctx, .. } => Some(ctx),
            Source::Power { .. } => None,
        }
    }

    /// A squarefree polynomial with the enclosed number among its roots;
    /// for power enclosures this is the squarefree power resultant of the
    /// base polynomial.
    pub fn defining_polynomial(&self) -> IntPolynomial {
        match &self.source {
            Source::Real { ctx, .. } | Source::Complex { ctx, .. } => ctx.poly().clone(),
            Source::Power { base, exp } => {
                crate::algebra::resultant_power(&base.defining_polynomial(), *exp)
                    .squarefree_part()
            }
        }
    }

    /// The mirrored enclosure of the complex conjugate root.
    pub fn conjugate(&self) -> RootEnclosure {
        match &self.source {
            Source::Real { .. } => self.clone(),
            Source::Complex { ctx, boxx } => RootEnclosure {
                source: Source::Complex { ctx: ctx.clone(), boxx: boxx.conj() },
                precision_bits: self.precision_bits,
            },
            Source::Power { base, exp } => {
                RootEnclosure::power_of(base.conjugate(), *exp)
            }
        }
    }

    /// One refinement step; the new region is contained in the old one and
    /// still contains the root.
    pub fn refine(&mut self) {
        match &mut self.source {
            Source::Real { ctx, lo, hi } => {
                refine_real(ctx, lo, hi);
            }
            Source::Complex { ctx, boxx } => {
                let bits = self.precision_bits.saturating_mul(2).clamp(64, u32::MAX - 64) + 32;
                *boxx = newton_contract(ctx, boxx, bits);
            }
            Source::Power { base, exp } => {
                // two base steps per power step keeps the powered width
                // shrinking geometrically despite the exponent blow-up
                base.refine();
                base.refine();
                let _ = exp;
            }
        }
        self.precision_bits = self.width_bits();
    }

    /// Refines until the box width drops below `eps` (always terminates
    /// for direct enclosures; power enclosures inherit termination).
    pub fn refine_to_width(&mut self, eps: &BigRational) {
        let mut guard = 0u32;
        while &self.boxed().width() >= eps {
            self.refine();
            guard += 1;
            assert!(guard < 100_000, "refinement stalled");
        }
    }

    /// Refines until the enclosure width is below 2^-bits.
    pub fn refine_to_bits(&mut self, bits: u32) {
        let eps = BigRational::new(BigInt::one(), BigInt::one() << bits as u64);
        self.refine_to_width(&eps);
    }

    /// Approximate midpoint, display only.
    pub fn approx(&self) -> (f64, f64) {
        let b = self.boxed();
        (
            super::interval::rational_to_f64(&b.re.midpoint()),
            super::interval::rational_to_f64(&b.im.midpoint()),
        )
    }
}

/// One bisection/Newton step on a real Sturm interval.
fn refine_real(ctx: &Arc<PolyContext>, lo: &mut BigRational, hi: &mut BigRational) {
    if lo == hi {
        return;
    }
    let poly = &ctx.poly;
    let iv = Interval::new(lo.clone(), hi.clone());
    let width = iv.width();
    let width_bits = (width.denom().bits() as i64 - width.numer().bits() as i64).max(0) as u32;
    let bits = width_bits.saturating_mul(2) + 64;
    // interval Newton first: quadratic once the interval is tight
    let t0 = std::time::Instant::now();
    eprintln!("[t] iv lo: num={} den={} | hi: num={} den={} | bits={}",
        iv.lo.numer().bits(), iv.lo.denom().bits(), iv.hi.numer().bits(), iv.hi.denom().bits(), bits);
    let dpb = super::interval::eval_poly_interval(ctx.deriv.coeffs(), &iv, Some(bits));
    eprintln!("[t] deriv eval {:?}", t0.elapsed());
    if !dpb.contains_zero() {
        let t0 = std::time::Instant::now();
        let m = iv.midpoint();
        let pm = poly.eval_rat(&m);
        eprintln!("[t] pm {:?}", t0.elapsed());
        let t0 = std::time::Instant::now();
        let n = Interval::point(m).sub(&Interval::point(pm).div(&dpb)).round_out(bits);
        eprintln!("[t] newton div {:?}", t0.elapsed());
        if let Some(next) = n.intersect(&iv) {
            let four = BigRational::from(BigInt::from(4));
            let t0 = std::time::Instant::now();
            let ok = next.width() * &four < iv.width()
                && poly.sign_at(&next.lo) * poly.sign_at(&next.hi) < 0;
            eprintln!("[t] accept check {:?}", t0.elapsed());
            if ok {
                *lo = next.lo;
                *hi = next.hi;
                return;
            }
        }
    }
    // bisection
    let two = BigRational::from(BigInt::from(2));
    let m = (&*lo + &*hi) / &two;
    let sm = poly.sign_at(&m);
    if sm == 0 {
        *lo = m.clone();
        *hi = m;
        return;
    }
    let slo = poly.sign_at(lo);
    if slo * sm < 0 {
        *hi = m;
    } else {
        *lo = m;
    }
}

/// Interval-Newton contraction: any root of the box stays inside the
/// result; width at least halves via bisection fallback on stall.
fn newton_contract(ctx: &Arc<PolyContext>, boxx: &ComplexBox, bits: u32) -> ComplexBox {
    let (mre, mim) = boxx.midpoint();
    let m = ComplexBox::point(mre, mim);
    let dpb = eval_poly_box(ctx.deriv.coeffs(), boxx, Some(bits));
    if !dpb.contains_zero() {
        let pm = eval_poly_box(ctx.poly.coeffs(), &m, None);
        let n = m.sub(&pm.div(&dpb)).round_out(bits);
        if let Some(next) = n.intersect(boxx) {
            let two = BigRational::from(BigInt::from(2));
            if next.width() * &two <= boxx.width() {
                return next;
            }
            return next; // still sound even when shrink is slow
        }
        // empty intersection cannot happen for a certified box; fall back
        debug_assert!(false, "newton step lost the root");
    }
    boxx.clone()
}

/// Result of isolating all complex roots of (the squarefree part of) a
/// polynomial: pairwise-disjoint certified enclosures, conjugate pairs
/// linked, ordered by descending modulus upper bound.
#[derive(Debug, Clone)]
pub struct IsolatedRoots {
    pub roots: Vec<RootEnclosure>,
    /// Index of each root's complex-conjugate partner (None for real).
    pub conj: Vec<Option<usize>>,
}

impl IsolatedRoots {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// Certified enclosures of all complex roots of `poly` (squarefree
/// normalization applied internally).
pub fn isolate_roots(poly: &IntPolynomial) -> IsolatedRoots {
    let sf = poly.squarefree_part();
    assert!(!sf.is_zero() && sf.deg() >= 1, "cannot isolate roots of a constant");
    let ctx = PolyContext::new(sf.clone());
    let d = sf.deg();

    // real roots by Sturm
    let real_iso = ctx.sturm().isolate_real_roots();
    let n_real = real_iso.len();
    let mut enclosures: Vec<RootEnclosure> = real_iso
        .into_iter()
        .map(|(lo, hi)| RootEnclosure::real(ctx.clone(), lo, hi))
        .collect();
    // tighten real enclosures a little so modulus ordering is usable
    for e in &mut enclosures {
        for _ in 0..8 {
            e.refine();
        }
    }

    let pairs = (d - n_real) / 2;
    debug_assert_eq!(n_real + 2 * pairs, d);

    if pairs > 0 {
        let mut bits: u32 = 64;
        let mut warm: Option<Vec<DyComplex>> = None;
        let upper = loop {
            let approx = aberth(&sf, bits, warm.as_deref());
            match certify_upper_roots(&ctx, &approx, pairs, bits, &enclosures) {
                Some(boxes) => break boxes,
                None => {
                    warm = Some(approx);
                    bits = bits.saturating_mul(2);
                    assert!(bits <= 1 << 22, "root isolation did not converge");
                }
            }
        };
        for b in upper {
            enclosures.push(RootEnclosure::complex(ctx.clone(), b.clone()));
            enclosures.push(RootEnclosure::complex(ctx.clone(), b.conj()));
        }
    }

    // order by descending modulus upper bound
    let mut order: Vec<usize> = (0..enclosures.len()).collect();
    order.sort_by(|&a, &b| {
        let ma = enclosures[a].modulus_sq().hi;
        let mb = enclosures[b].modulus_sq().hi;
        mb.cmp(&ma)
    });
    let mut roots = Vec::with_capacity(enclosures.len());
    let mut position = vec![0usize; enclosures.len()];
    for (new_idx, &old_idx) in order.iter().enumerate() {
        position[old_idx] = new_idx;
        roots.push(enclosures[old_idx].clone());
    }
    // conjugate links: complex enclosures were pushed in (upper, lower)
    // adjacent pairs after the reals
    let mut conj = vec![None; roots.len()];
    let mut old_idx = n_real;
    while old_idx + 1 < enclosures.len() {
        let a = position[old_idx];
        let b = position[old_idx + 1];
        conj[a] = Some(b);
        conj[b] = Some(a);
        old_idx += 2;
    }
    IsolatedRoots { roots, conj }
}

/// Tries to certify `pairs` disjoint upper-half-plane boxes around the
/// Aberth approximations. Returns None to request more precision.
fn certify_upper_roots(
    ctx: &Arc<PolyContext>,
    approx: &[DyComplex],
    pairs: usize,
    bits: u32,
    real_enclosures: &[RootEnclosure],
) -> Option<Vec<ComplexBox>> {
    // pick the `pairs` approximations with the largest imaginary parts
    let mut idx: Vec<usize> = (0..approx.len()).collect();
    idx.sort_by(|&a, &b| approx[b].im.cmp(&approx[a].im));
    let chosen = &idx[..pairs];
    if chosen.iter().any(|&i| !approx[i].im.is_positive()) {
        return None;
    }
    let mut boxes = Vec::with_capacity(pairs);
    for &i in chosen {
        let z = &approx[i];
        // initial radius: a fraction of the distance to the nearest other
        // approximation (and the real axis)
        let mut r = z.im.clone();
        for (j, other) in approx.iter().enumerate() {
            if j == i {
                continue;
            }
            let dre = (&z.re - &other.re).abs();
            let dim = (&z.im - &other.im).abs();
            let dist = dre.max(dim);
            if !dist.is_zero() && dist < r {
                r = dist;
            }
        }
        let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
        r *= &quarter;
        if r.is_zero() {
            return None;
        }
        // sweep the radius downward: big boxes fail the interval-derivative
        // test, too-small boxes miss the root; somewhere in between both
        // Krawczyk conditions hold
        let mut certified = None;
        let mut rr = r.clone();
        for _ in 0..=(bits / 2) {
            let im_lo = &z.im - &rr;
            if im_lo.is_positive() {
                let b = ComplexBox::new(
                    Interval::new(&z.re - &rr, &z.re + &rr),
                    Interval::new(im_lo, &z.im + &rr),
                );
                if let Some(tight) = krawczyk_certify(ctx, &b, bits) {
                    certified = Some(tight);
                    break;
                }
            }
            rr *= &quarter;
        }
        boxes.push(certified?);
    }
    // contract until imaginary parts are strictly positive and boxes are
    // pairwise disjoint
    for _ in 0..64 {
        let mut ok = true;
        for i in 0..boxes.len() {
            if !boxes[i].im.lo.is_positive() {
                ok = false;
            }
            for j in 0..i {
                if !boxes[i].is_disjoint(&boxes[j]) {
                    ok = false;
                }
            }
        }
        // also disjoint from real enclosures (automatic once im.lo > 0)
        if ok {
            let clash = real_enclosures.iter().any(|re| {
                let rb = re.boxed();
                boxes.iter().any(|b| !b.is_disjoint(&rb))
            });
            if !clash {
                return Some(boxes);
            }
        }
        for b in boxes.iter_mut() {
            *b = newton_contract(ctx, b, bits.max(128));
        }
    }
    None
}

/// Krawczyk existence test plus interval-derivative uniqueness: certifies
/// that the box holds exactly one root. Returns a tightened box.
fn krawczyk_certify(ctx: &Arc<PolyContext>, boxx: &ComplexBox, bits: u32) -> Option<ComplexBox> {
    let (mre, mim) = boxx.midpoint();
    let m = ComplexBox::point(mre.clone(), mim.clone());
    let pm = eval_poly_box(ctx.poly.coeffs(), &m, None);
    let pdm = eval_poly_box(ctx.deriv.coeffs(), &m, None);
    if pdm.contains_zero() {
        return None; // midpoint derivative vanished exactly
    }
    let pdb = eval_poly_box(ctx.deriv.coeffs(), boxx, Some(bits));
    if pdb.contains_zero() {
        return None; // uniqueness test failed at this width
    }
    let one = ComplexBox::point(BigRational::one(), BigRational::zero());
    let correction = pm.div(&pdm);
    let slope = one.sub(&pdb.div(&pdm));
    let spread = boxx.sub(&m);
    let k = m.sub(&correction).add(&slope.mul(&spread)).round_out(bits.max(96));
    if boxx.contains_box(&k) {
        k.intersect(boxx)
    } else {
        None
    }
}

/// A real algebraic number presented as a root of a squarefree polynomial
/// together with a shrinking closed interval around it.
pub(crate) trait AlgebraicValue {
    fn poly(&self) -> IntPolynomial;
    fn interval(&self) -> Interval;
    fn refine(&mut self);
}

/// Adapter: the squared modulus of a root enclosure, as a root of the
/// pairwise product polynomial of its context.
pub(crate) struct ModulusSquared {
    pub enc: RootEnclosure,
    pub gamma_sf: IntPolynomial,
}

impl ModulusSquared {
    pub fn new(enc: RootEnclosure) -> Self {
        let ctx = enc
            .context()
            .expect("modulus comparison fallback needs a direct enclosure")
            .clone();
        let gamma_sf = ctx.product_poly().clone();
        ModulusSquared { enc, gamma_sf }
    }
}

impl AlgebraicValue for ModulusSquared {
    fn poly(&self) -> IntPolynomial {
        self.gamma_sf.clone()
    }

    fn interval(&self) -> Interval {
        self.enc.modulus_sq()
    }

    fn refine(&mut self) {
        self.enc.refine();
    }
}

/// Adapter: the square of a positive real root enclosure, as a root of the
/// squarefree power resultant of its polynomial.
pub(crate) struct SquaredReal {
    pub enc: RootEnclosure,
    pub sq_poly: IntPolynomial,
}

impl SquaredReal {
    pub fn new(enc: RootEnclosure) -> Self {
        let poly = enc
            .context()
            .expect("squared-real adapter needs a direct enclosure")
            .poly()
            .clone();
        let sq_poly = crate::algebra::resultant_power(&poly, 2).squarefree_part();
        SquaredReal { enc, sq_poly }
    }
}

impl AlgebraicValue for SquaredReal {
    fn poly(&self) -> IntPolynomial {
        self.sq_poly.clone()
    }

    fn interval(&self) -> Interval {
        self.enc
            .real_interval()
            .expect("squared-real adapter needs a real enclosure")
            .square()
    }

    fn refine(&mut self) {
        self.enc.refine();
    }
}

/// Certified three-way comparison of two real algebraic numbers. The order
/// verdicts come from interval separation; equality is decided exactly:
/// once each interval isolates its number among the roots of its
/// polynomial, the numbers are equal iff the gcd of the two polynomials
/// has a root in the overlap.
pub(crate) fn compare_real_algebraic(
    a: &mut dyn AlgebraicValue,
    b: &mut dyn AlgebraicValue,
) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let mut chains: Option<(SturmChain, SturmChain, Option<SturmChain>)> = None;
    let mut isolated = false;
    for round in 0..100_000u32 {
        let ia = a.interval();
        let ib = b.interval();
        if ia.strictly_below(&ib) {
            return Ordering::Less;
        }
        if ib.strictly_below(&ia) {
            return Ordering::Greater;
        }
        if round >= 8 {
            let (ca, cb, cg) = chains.get_or_insert_with(|| {
                let pa = a.poly();
                let pb = b.poly();
                let g = pa.gcd_poly(&pb);
                let cg = if g.degree().map_or(false, |d| d >= 1) {
                    Some(SturmChain::new(&g))
                } else {
                    None
                };
                (SturmChain::new(&pa), SturmChain::new(&pb), cg)
            });
            match cg {
                None => {
                    // no common root, so the numbers differ; separation
                    // is guaranteed by further refinement
                }
                Some(gchain) => {
                    if !isolated {
                        isolated = count_closed(ca, &ia) == 1 && count_closed(cb, &ib) == 1;
                    }
                    if isolated {
                        if let Some(overlap) = ia.intersect(&ib) {
                            if count_closed(gchain, &overlap) >= 1 {
                                return Ordering::Equal;
                            }
                        }
                    }
                }
            }
        }
        a.refine();
        b.refine();
    }
    panic!("compare_real_algebraic did not separate");
}

/// Number of roots of the chain's polynomial in the closed interval.
fn count_closed(chain: &SturmChain, iv: &Interval) -> usize {
    let mut n = chain.count_open(
        &Endpoint::Finite(iv.lo.clone()),
        &Endpoint::Finite(iv.hi.clone()),
    );
    if chain.poly().sign_at(&iv.lo) == 0 {
        n += 1;
    }
    if iv.hi != iv.lo && chain.poly().sign_at(&iv.hi) == 0 {
        n += 1;
    }
    n
}

/// Exact divisibility test for rational polynomials built from field data.
pub(crate) fn divides_exactly(divisor: &IntPolynomial, dividend: &IntPolynomial) -> bool {
    if divisor.is_zero() {
        return dividend.is_zero();
    }
    let (_, r) = RatPolynomial::from_int(dividend)
        .divrem(&RatPolynomial::from_int(divisor))
        .expect("nonzero divisor");
    r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn quadratic_isolation() {
        let iso = isolate_roots(&p("x^2-x-1"));
        assert_eq!(iso.len(), 2);
        assert!(iso.roots.iter().all(|r| r.is_real()));
        // descending modulus: phi first
        let top = iso.roots[0].real_interval().unwrap();
        assert!(top.contains(&rat(1618, 1000)) || top.lo > rat(16, 10));
        let second = iso.roots[1].real_interval().unwrap();
        assert!(second.lo > rat(-1, 1) && second.hi < rat(0, 1));
    }

    #[test]
    fn table1_row1_roots() {
        // Perron root near 1.253, a conjugate near .4938 +- .9056i
        let iso = isolate_roots(&p("x^12-x^10-x^9+x^4+x^3-x-1"));
        assert_eq!(iso.len(), 12);
        let mut found_perron = false;
        let mut found_conj = false;
        for r in &iso.roots {
            let (re, im) = r.approx();
            if r.is_real() && (re - 1.2528).abs() < 1e-2 {
                found_perron = true;
            }
            if !r.is_real() && (re - 0.4938).abs() < 1e-2 && (im.abs() - 0.9056).abs() < 1e-2 {
                found_conj = true;
            }
        }
        assert!(found_perron && found_conj);
        // conjugate links are mirror images
        for (i, c) in iso.conj.iter().enumerate() {
            if let Some(j) = c {
                assert_eq!(iso.conj[*j], Some(i));
                let a = iso.roots[i].boxed();
                let b = iso.roots[*j].boxed();
                assert_eq!(a.re, b.re);
            }
        }
    }

    #[test]
    fn beta4_roots_match_table3() {
        // x^4-x-1: Perron root near 1.221, conjugates near -.2481 +- 1.034i
        let iso = isolate_roots(&p("x^4-x-1"));
        assert_eq!(iso.len(), 4);
        let mut complex_found = 0;
        for r in &iso.roots {
            let (re, im) = r.approx();
            if !r.is_real() {
                assert!((re + 0.2481).abs() < 1e-2, "re {re}");
                assert!((im.abs() - 1.034).abs() < 1e-2, "im {im}");
                complex_found += 1;
            } else if re > 0.0 {
                assert!((re - 1.2207).abs() < 1e-2);
            }
        }
        assert_eq!(complex_found, 2);
    }

    #[test]
    fn refinement_monotone_and_contains_root() {
        let iso = isolate_roots(&p("x^3-x-1"));
        let mut rho = iso.roots[0].clone();
        assert!(rho.is_real());
        let mut prev = rho.boxed();
        for _ in 0..12 {
            rho.refine();
            let cur = rho.boxed();
            assert!(prev.contains_box(&cur), "refinement must nest");
            prev = cur;
        }
        let iv = rho.real_interval().unwrap();
        // plastic ratio = 1.3247179572447...
        assert!(iv.contains(&rat(13247179572447, 10_000_000_000_000)));
        assert!(rho.precision_bits() > 30);
    }

    #[test]
    fn power_enclosure_tracks_base() {
        let iso = isolate_roots(&p("x^2-x-1"));
        let phi = iso.roots[0].clone();
        let mut phi2 = RootEnclosure::power_of(phi, 2);
        phi2.refine_to_bits(40);
        let iv = phi2.real_interval().unwrap();
        // phi^2 = 2.618033988...
        assert!(iv.contains(&rat(2618033988, 1_000_000_000)));
        assert!(iv.width() < rat(1, 1 << 40));
    }

    #[test]
    fn product_polynomial_has_modulus_squares() {
        let ctx = PolyContext::new(p("x^2-x-1"));
        let gamma = ctx.product_poly();
        // products of roots of x^2-x-1: phi^2, phi*psi = -1 (twice), psi^2
        // so squarefree product poly = (x - phi^2)(x + 1)(x - psi^2)
        let phi2 = p("x^2-3x+1"); // min poly of phi^2 and psi^2
        assert!(divides_exactly(&phi2, gamma));
        assert!(divides_exactly(&p("x+1"), gamma));
    }

    struct PlainRoot {
        enc: RootEnclosure,
        poly: IntPolynomial,
    }

    impl AlgebraicValue for PlainRoot {
        fn poly(&self) -> IntPolynomial {
            self.poly.clone()
        }
        fn interval(&self) -> Interval {
            self.enc.real_interval().unwrap()
        }
        fn refine(&mut self) {
            self.enc.refine();
        }
    }

    #[test]
    fn compare_algebraic_equal_and_less() {
        use std::cmp::Ordering;
        let sqrt2 = p("x^2-2");
        let sqrt3 = p("x^2-3");
        let make = |poly: &IntPolynomial| {
            let iso = isolate_roots(poly);
            let enc = iso
                .roots
                .into_iter()
                .find(|r| r.real_interval().map_or(false, |iv| iv.hi.is_positive()))
                .unwrap();
            PlainRoot { enc, poly: poly.clone() }
        };
        // the same number through two independent isolations
        let ord = compare_real_algebraic(&mut make(&sqrt2), &mut make(&sqrt2));
        assert_eq!(ord, Ordering::Equal);
        let ord = compare_real_algebraic(&mut make(&sqrt2), &mut make(&sqrt3));
        assert_eq!(ord, Ordering::Less);
        let ord = compare_real_algebraic(&mut make(&sqrt3), &mut make(&sqrt2));
        assert_eq!(ord, Ordering::Greater);
    }

    #[test]
    fn modulus_squared_adapter_compares_exactly() {
        use std::cmp::Ordering;
        // |phi| vs theta0: the same algebraic number
        let iso = isolate_roots(&p("x^2-x-1"));
        let phi = iso.roots[0].clone();
        let theta = isolate_roots(&p("x^2-x-1")).roots[0].clone();
        let ord = compare_real_algebraic(
            &mut ModulusSquared::new(phi),
            &mut SquaredReal::new(theta),
        );
        assert_eq!(ord, Ordering::Equal);
    }
}
