//! Certified complex root enclosures, exact modulus comparisons, and
//! Pisot/Salem/Perron classification with Mahler measure enclosures.

mod aberth;
mod enclosure;
mod interval;
mod logs;

pub use enclosure::{isolate_roots, IsolatedRoots, PolyContext, RootEnclosure};
pub use interval::{dyadic_ceil, dyadic_floor, rational_to_f64, ComplexBox, Interval};
pub use logs::{ln_interval, ln_point};

pub(crate) use enclosure::{
    compare_real_algebraic, divides_exactly, AlgebraicValue, ModulusSquared, SquaredReal,
};
pub(crate) use interval::{eval_poly_box, eval_poly_interval};

/// Test-only exposure of the interval Horner evaluation.
pub fn eval_poly_interval_pub(
    coeffs: &[num_bigint::BigInt],
    x: &Interval,
    round_bits: Option<u32>,
) -> Interval {
    interval::eval_poly_interval(coeffs, x, round_bits)
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

use crate::algebra::{chebyshev_reduce, sturm_count, Endpoint, IntPolynomial};

/// Knobs for certified computations.
#[derive(Debug, Clone)]
pub struct CertifyConfig {
    /// Refinement ceiling (bits) before exact algebraic fallbacks engage.
    pub max_bits: u32,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig { max_bits: 16384 }
    }
}

/// Classification outcome for an irreducible monic integer polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Copy, serde::Serialize, serde::Deserialize)]
pub enum NumberClassTag {
    Pisot,
    Salem,
    PerronOther,
    NotPerron,
}

impl std::fmt::Display for NumberClassTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            NumberClassTag::Pisot => "Pisot",
            NumberClassTag::Salem => "Salem",
            NumberClassTag::PerronOther => "PerronOther",
            NumberClassTag::NotPerron => "NotPerron",
        };
        write!(f, "{s}")
    }
}

/// The class of the dominant root plus, for PerronOther, the conjugate
/// witnessing that the number is neither Pisot nor Salem.
#[derive(Debug, Clone)]
pub struct NumberClass {
    pub tag: NumberClassTag,
    pub witness: Option<RootEnclosure>,
}

/// Classification plus everything downstream consumers need.
#[derive(Debug, Clone)]
pub struct Classification {
    pub class: NumberClass,
    pub roots: IsolatedRoots,
    /// Index of the Perron root in `roots` (present unless NotPerron).
    pub perron_index: Option<usize>,
    /// Indices of conjugates certified strictly outside the unit circle.
    pub outside_unit: Vec<usize>,
}

impl Classification {
    pub fn perron_root(&self) -> Option<&RootEnclosure> {
        self.perron_index.map(|i| &self.roots.roots[i])
    }
}

/// Errors from classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    /// The input factors; the irreducible factors are attached.
    Reducible(Vec<IntPolynomial>),
    NotMonic,
    Constant,
}

impl std::fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassifyError::Reducible(fs) => {
                write!(f, "polynomial is reducible: ")?;
                for (i, p) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    write!(f, "({p})")?;
                }
                Ok(())
            }
            ClassifyError::NotMonic => write!(f, "polynomial is not monic"),
            ClassifyError::Constant => write!(f, "polynomial is constant"),
        }
    }
}

impl std::error::Error for ClassifyError {}

fn refine_budget_rounds(config: &CertifyConfig) -> u32 {
    // each refinement step roughly doubles the precision, so the ceiling
    // is reached after a logarithmic number of rounds
    (config.max_bits.max(64)).ilog2() * 6 + 16
}

/// Classifies the Perron number defined by an irreducible monic
/// polynomial as Pisot, Salem, PerronOther, or NotPerron.
pub fn classify_number(
    poly: &IntPolynomial,
    config: &CertifyConfig,
) -> Result<NumberClass, ClassifyError> {
    classify_full(poly, config).map(|c| c.class)
}

/// Full classification (class, roots, Perron index, outside conjugates).
pub fn classify_full(
    poly: &IntPolynomial,
    config: &CertifyConfig,
) -> Result<Classification, ClassifyError> {
    let d = poly.degree().ok_or(ClassifyError::Constant)?;
    if d == 0 {
        return Err(ClassifyError::Constant);
    }
    if !poly.is_monic() {
        return Err(ClassifyError::NotMonic);
    }
    if d <= crate::atlas::FACTOR_DEGREE_CAP {
        let factors = crate::atlas::factor_bounded(poly);
        if factors.len() > 1 || factors.first().is_some_and(|(f, m)| *m > 1 || f != poly) {
            return Err(ClassifyError::Reducible(
                factors.into_iter().map(|(f, _)| f).collect(),
            ));
        }
    }
    Ok(classify_irreducible(poly, config))
}

/// Classification assuming irreducibility (used on minimal polynomials of
/// powers, where irreducibility follows from the degree argument).
pub fn classify_irreducible(poly: &IntPolynomial, config: &CertifyConfig) -> Classification {
    let d = poly.deg();
    let iso = isolate_roots(poly);
    let not_perron = |roots: IsolatedRoots| Classification {
        class: NumberClass { tag: NumberClassTag::NotPerron, witness: None },
        roots,
        perron_index: None,
        outside_unit: Vec::new(),
    };

    if d == 1 {
        let n = -poly.constant();
        if n > BigInt::one() {
            return Classification {
                class: NumberClass { tag: NumberClassTag::Pisot, witness: None },
                roots: iso,
                perron_index: Some(0),
                outside_unit: Vec::new(),
            };
        }
        return not_perron(iso);
    }

    // an irreducible polynomial fixed by x -> -x has symmetric roots, so
    // the dominant root always ties with its negative
    let cn = poly.compose_neg();
    if cn == *poly || cn == poly.neg() {
        return not_perron(iso);
    }

    let Some(perron_index) = find_dominant_root(&iso, config) else {
        return not_perron(iso);
    };
    if !iso.roots[perron_index].is_real() {
        return not_perron(iso);
    }
    // require beta > 1; beta = 1 exactly would make poly = x - 1, already
    // excluded by the degree, so refinement always decides
    {
        let mut enc = iso.roots[perron_index].clone();
        loop {
            let iv = enc.real_interval().unwrap();
            if iv.lo > BigRational::one() {
                break;
            }
            if iv.hi < BigRational::one() || (iv.lo == iv.hi && iv.hi <= BigRational::one()) {
                return not_perron(iso);
            }
            enc.refine();
        }
    }

    // decide each conjugate against the unit circle; roots exactly on the
    // circle only occur for self-reciprocal polynomials, where their count
    // is known exactly from the trace polynomial
    let self_recip = poly.is_self_reciprocal_plus() && d % 2 == 0;
    let circle_pairs = if self_recip && d >= 4 {
        let q = chebyshev_reduce(poly).expect("even self-reciprocal");
        sturm_count(&q, &Endpoint::finite(-2), &Endpoint::finite(2))
    } else {
        0
    };
    let expected_off_circle = d - 1 - 2 * circle_pairs;
    let mut enclosures: Vec<RootEnclosure> = iso.roots.clone();
    let rounds = refine_budget_rounds(config);
    let mut inside: Vec<usize> = Vec::new();
    let mut outside: Vec<usize> = Vec::new();
    let mut undecided: Vec<usize> = (0..d).filter(|&i| i != perron_index).collect();
    for _ in 0..rounds {
        undecided.retain(|&i| {
            let m = enclosures[i].modulus_sq();
            if m.hi < BigRational::one() {
                inside.push(i);
                false
            } else if m.lo > BigRational::one() {
                outside.push(i);
                false
            } else {
                true
            }
        });
        if inside.len() + outside.len() >= expected_off_circle {
            break;
        }
        for &i in &undecided {
            enclosures[i].refine();
        }
    }
    assert!(
        inside.len() + outside.len() >= expected_off_circle,
        "off-circle conjugates undecided within refinement budget"
    );

    let tag = if outside.is_empty() && undecided.is_empty() {
        NumberClassTag::Pisot
    } else if self_recip && d >= 4 {
        // Salem iff the trace polynomial has one root beyond 2 and all
        // remaining roots real in (-2, 2)
        let q = chebyshev_reduce(poly).expect("even self-reciprocal");
        let m = d / 2;
        let big = sturm_count(&q, &Endpoint::finite(2), &Endpoint::PosInf);
        if big == 1 && circle_pairs == m - 1 {
            NumberClassTag::Salem
        } else {
            NumberClassTag::PerronOther
        }
    } else {
        NumberClassTag::PerronOther
    };

    let witness = if tag == NumberClassTag::PerronOther {
        pick_max_modulus(&enclosures, &outside, config)
    } else {
        None
    };

    Classification {
        class: NumberClass { tag, witness },
        roots: IsolatedRoots { roots: enclosures, conj: iso.conj },
        perron_index: Some(perron_index),
        outside_unit: outside,
    }
}

/// Finds the index of the root of strictly maximal modulus, or None when
/// the maximum is shared (conjugate pair on top, or an exact tie).
fn find_dominant_root(iso: &IsolatedRoots, config: &CertifyConfig) -> Option<usize> {
    let n = iso.roots.len();
    if n == 1 {
        return Some(0);
    }
    let mut encs: Vec<RootEnclosure> = iso.roots.clone();
    let rounds = refine_budget_rounds(config);
    for _ in 0..rounds {
        let top = (0..n)
            .max_by(|&a, &b| encs[a].modulus_sq().hi.cmp(&encs[b].modulus_sq().hi))
            .unwrap();
        let top_lo = encs[top].modulus_sq().lo.clone();
        let mut rival = None;
        for i in 0..n {
            if i != top && encs[i].modulus_sq().hi >= top_lo {
                rival = Some(i);
                break;
            }
        }
        let Some(rival) = rival else {
            return Some(top);
        };
        // a conjugate pair can never separate
        if iso.conj[top] == Some(rival) {
            return None;
        }
        encs[top].refine();
        encs[rival].refine();
    }
    // persistent overlap: decide exactly whether the two leaders share
    // their modulus
    let top = (0..n)
        .max_by(|&a, &b| encs[a].modulus_sq().hi.cmp(&encs[b].modulus_sq().hi))
        .unwrap();
    let rival = (0..n)
        .filter(|&i| i != top)
        .max_by(|&a, &b| encs[a].modulus_sq().hi.cmp(&encs[b].modulus_sq().hi))
        .unwrap();
    let mut a = ModulusSquared::new(encs[top].clone());
    let mut b = ModulusSquared::new(encs[rival].clone());
    match compare_real_algebraic(&mut a, &mut b) {
        Ordering::Equal => None,
        Ordering::Greater => Some(top),
        Ordering::Less => Some(rival),
    }
}

/// Among `candidates`, picks the enclosure of maximal modulus; ties are
/// broken by largest real part, then largest imaginary part.
pub(crate) fn pick_max_modulus(
    enclosures: &[RootEnclosure],
    candidates: &[usize],
    config: &CertifyConfig,
) -> Option<RootEnclosure> {
    if candidates.is_empty() {
        return None;
    }
    let mut best_enc = enclosures[candidates[0]].clone();
    for &i in &candidates[1..] {
        let mut enc = enclosures[i].clone();
        match compare_moduli_enclosures(&mut enc, &mut best_enc, config) {
            Ordering::Greater => best_enc = enc,
            Ordering::Less => {}
            Ordering::Equal => {
                if tie_break_prefers(&mut enc, &mut best_enc, config) {
                    best_enc = enc;
                }
            }
        }
    }
    Some(best_enc)
}

/// Certified modulus comparison of two enclosures from the same isolation.
fn compare_moduli_enclosures(
    a: &mut RootEnclosure,
    b: &mut RootEnclosure,
    config: &CertifyConfig,
) -> Ordering {
    let rounds = refine_budget_rounds(config);
    for _ in 0..rounds {
        let ma = a.modulus_sq();
        let mb = b.modulus_sq();
        if ma.strictly_below(&mb) {
            return Ordering::Less;
        }
        if mb.strictly_below(&ma) {
            return Ordering::Greater;
        }
        a.refine();
        b.refine();
    }
    let mut av = ModulusSquared::new(a.clone());
    let mut bv = ModulusSquared::new(b.clone());
    compare_real_algebraic(&mut av, &mut bv)
}

/// For equal-modulus candidates: true if `a` wins the (Re, then Im)
/// tie-break. Distinct roots of equal modulus and equal real part are
/// complex conjugates, so the comparison always resolves.
fn tie_break_prefers(a: &mut RootEnclosure, b: &mut RootEnclosure, config: &CertifyConfig) -> bool {
    let rounds = refine_budget_rounds(config).max(64);
    for _ in 0..rounds {
        let ra = a.boxed().re;
        let rb = b.boxed().re;
        if rb.strictly_below(&ra) {
            return true;
        }
        if ra.strictly_below(&rb) {
            return false;
        }
        let ia = a.boxed().im;
        let ib = b.boxed().im;
        if ib.strictly_below(&ia) {
            return true;
        }
        if ia.strictly_below(&ib) {
            return false;
        }
        a.refine();
        b.refine();
    }
    false
}

/// Verdict of a certified modulus-vs-constant comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ModulusOrdering {
    Less,
    Greater,
    Equal,
}

/// A named algebraic constant: a minimal polynomial together with a
/// certified enclosure of the intended root. Never stored as a float.
#[derive(Debug, Clone)]
pub struct AlgebraicConstant {
    pub poly: IntPolynomial,
    pub enclosure: RootEnclosure,
}

impl AlgebraicConstant {
    fn perron_root_of(poly_text: &str) -> Self {
        let poly: IntPolynomial = poly_text.parse().unwrap();
        let iso = isolate_roots(&poly);
        let enclosure = iso
            .roots
            .into_iter()
            .find(|r| r.is_real() && r.real_interval().unwrap().hi > BigRational::one())
            .expect("constant has a real root > 1");
        AlgebraicConstant { poly, enclosure }
    }
}

/// theta_0, the golden ratio: the Perron root of x^2 - x - 1.
pub fn theta0() -> AlgebraicConstant {
    AlgebraicConstant::perron_root_of("x^2-x-1")
}

/// rho, the plastic ratio: the smallest Pisot number, root of x^3 - x - 1.
pub fn rho() -> AlgebraicConstant {
    AlgebraicConstant::perron_root_of("x^3-x-1")
}

/// tau_10, Lehmer's number: the Perron root of the Lehmer polynomial.
pub fn tau10() -> AlgebraicConstant {
    AlgebraicConstant::perron_root_of("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")
}

/// Certified strict comparison of |r| against a positive real algebraic
/// constant. Interval refinement decides the strict cases; persistent
/// overlap falls to the exact algebraic test, so Equal is only returned on
/// true equality.
pub fn compare_modulus(
    r: &RootEnclosure,
    c: &AlgebraicConstant,
    config: &CertifyConfig,
) -> ModulusOrdering {
    let mut enc = r.clone();
    let mut cenc = c.enclosure.clone();
    let rounds = refine_budget_rounds(config);
    for _ in 0..rounds {
        let m = enc.modulus_sq();
        let cm = cenc.real_interval().unwrap().square();
        if m.strictly_below(&cm) {
            return ModulusOrdering::Less;
        }
        if cm.strictly_below(&m) {
            return ModulusOrdering::Greater;
        }
        enc.refine();
        cenc.refine();
    }
    // exact: |r|^2 is a root of the product polynomial of r's defining
    // polynomial; c^2 is a root of the squarefree power resultant
    let gamma_ctx = PolyContext::new(enc.defining_polynomial());
    let mut a = ModulusSquared { enc, gamma_sf: gamma_ctx.product_poly().clone() };
    let mut b = SquaredReal::new(cenc);
    match compare_real_algebraic(&mut a, &mut b) {
        Ordering::Less => ModulusOrdering::Less,
        Ordering::Greater => ModulusOrdering::Greater,
        Ordering::Equal => ModulusOrdering::Equal,
    }
}

/// Certified enclosure of the Mahler measure of a nonzero integer
/// polynomial, with width below `eps`.
pub fn mahler_measure(poly: &IntPolynomial, eps: &BigRational, config: &CertifyConfig) -> Interval {
    assert!(!poly.is_zero(), "Mahler measure of the zero polynomial");
    assert!(eps.is_positive());
    let m_sq = Interval::point(BigRational::from(poly.leading().abs().pow(2)));
    // zero roots contribute max(1, 0) = 1
    let mut p = poly.clone();
    while p.deg() >= 1 && p.constant().is_zero() {
        p = IntPolynomial::from_coeffs(p.coeffs()[1..].to_vec());
    }
    if p.deg() == 0 {
        return Interval::point(BigRational::from(poly.leading().abs()));
    }
    let mut outside: Vec<(RootEnclosure, u32)> = Vec::new();
    for (factor, mult) in squarefree_decomposition(&p) {
        collect_outside_roots(&factor, mult, &mut outside, config);
    }
    loop {
        let mut prod = m_sq.clone();
        for (enc, mult) in &outside {
            prod = prod.mul(&enc.modulus_sq().pow(*mult as u64));
        }
        let enc = sqrt_interval(&prod, 128);
        if &enc.width() < eps {
            return enc;
        }
        for (enc, _) in outside.iter_mut() {
            enc.refine();
        }
    }
}

/// Squarefree decomposition: pairs (squarefree factor, multiplicity) with
/// `p = content * prod factor^multiplicity` and the factors pairwise
/// coprime.
fn squarefree_decomposition(p: &IntPolynomial) -> Vec<(IntPolynomial, u32)> {
    let mut levels: Vec<IntPolynomial> = Vec::new();
    let mut a = p.primitive_positive();
    while a.degree().map_or(false, |d| d >= 1) {
        let g = a.gcd_poly(&a.derivative());
        let level = a.div_exact(&g).expect("gcd divides");
        levels.push(level);
        a = g;
        if levels.len() > 64 {
            break;
        }
    }
    // levels[i] = product of distinct roots of multiplicity > i
    let mut out = Vec::new();
    for i in 0..levels.len() {
        let factor = match levels.get(i + 1) {
            Some(next) => levels[i].div_exact(&levels[i].gcd_poly(next)).unwrap_or_else(|| levels[i].clone()),
            None => levels[i].clone(),
        };
        if factor.degree().map_or(false, |d| d >= 1) {
            out.push((factor, (i + 1) as u32));
        }
    }
    out
}

/// Collects enclosures of roots of a squarefree factor strictly outside
/// the unit circle (weighted by `mult`); roots on the circle are counted
/// exactly through the trace polynomial and contribute nothing.
fn collect_outside_roots(
    factor: &IntPolynomial,
    mult: u32,
    outside: &mut Vec<(RootEnclosure, u32)>,
    config: &CertifyConfig,
) {
    let mut f = factor.primitive_positive();
    for root in [BigInt::one(), -BigInt::one()] {
        let lin = IntPolynomial::from_coeffs(vec![-&root, BigInt::one()]);
        while f.deg() >= 1 {
            match f.div_exact(&lin) {
                Some(q) => f = q,
                None => break,
            }
        }
    }
    if f.deg() == 0 {
        return;
    }
    // roots on the unit circle satisfy z_bar = 1/z, hence divide
    // gcd(f, reverse f); count them exactly via the trace substitution
    let g = f.gcd_poly(&f.reverse());
    let circle_count = if g.degree().map_or(false, |d| d >= 1) {
        count_unit_circle_roots(&g)
    } else {
        0
    };
    let iso = isolate_roots(&f);
    let mut undecided: Vec<RootEnclosure> = iso.roots;
    let mut found_outside: Vec<RootEnclosure> = Vec::new();
    let rounds = refine_budget_rounds(config).max(128);
    for _ in 0..rounds {
        undecided.retain_mut(|enc| {
            let m = enc.modulus_sq();
            if m.lo > BigRational::one() {
                found_outside.push(enc.clone());
                false
            } else {
                !(m.hi < BigRational::one())
            }
        });
        if undecided.len() <= circle_count {
            break;
        }
        for enc in undecided.iter_mut() {
            enc.refine();
        }
    }
    assert!(
        undecided.len() <= circle_count,
        "off-circle roots undecided within refinement budget"
    );
    for enc in found_outside {
        outside.push((enc, mult));
    }
}

/// Number of roots on the unit circle of a polynomial whose root multiset
/// is closed under z -> 1/z, with +-1 already stripped by the caller.
fn count_unit_circle_roots(g: &IntPolynomial) -> usize {
    let mut h = g.primitive_positive();
    for root in [BigInt::one(), -BigInt::one()] {
        let lin = IntPolynomial::from_coeffs(vec![-&root, BigInt::one()]);
        while h.deg() >= 1 {
            match h.div_exact(&lin) {
                Some(q) => h = q,
                None => break,
            }
        }
    }
    if h.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    match chebyshev_reduce(&h) {
        Ok(q) => 2 * sturm_count(&q, &Endpoint::finite(-2), &Endpoint::finite(2)),
        Err(_) => 0,
    }
}

/// Certified enclosure of sqrt(x) for a nonnegative interval.
pub fn sqrt_interval(x: &Interval, bits: u32) -> Interval {
    Interval::new(sqrt_lower(&x.lo, bits), sqrt_upper(&x.hi, bits))
}

fn sqrt_lower(x: &BigRational, bits: u32) -> BigRational {
    if !x.is_positive() {
        return BigRational::zero();
    }
    let scale = BigInt::one() << (2 * bits as u64);
    let n = (x.numer() * x.denom() * &scale).sqrt();
    BigRational::new(n, x.denom() * (BigInt::one() << bits as u64))
}

fn sqrt_upper(x: &BigRational, bits: u32) -> BigRational {
    if !x.is_positive() {
        return BigRational::zero();
    }
    let scale = BigInt::one() << (2 * bits as u64);
    let n = (x.numer() * x.denom() * &scale).sqrt() + BigInt::one();
    BigRational::new(n, x.denom() * (BigInt::one() << bits as u64))
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
    fn classify_pisot_quadratic() {
        let c = classify_number(&p("x^2-x-1"), &CertifyConfig::default()).unwrap();
        assert_eq!(c.tag, NumberClassTag::Pisot);
        assert!(c.witness.is_none());
    }

    #[test]
    fn classify_lehmer_salem() {
        let c = classify_number(
            &p("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"),
            &CertifyConfig::default(),
        )
        .unwrap();
        assert_eq!(c.tag, NumberClassTag::Salem);
    }

    #[test]
    fn classify_beta4_perron_other() {
        let c = classify_number(&p("x^4-x-1"), &CertifyConfig::default()).unwrap();
        assert_eq!(c.tag, NumberClassTag::PerronOther);
        let w = c.witness.expect("witness conjugate");
        assert!(w.modulus_sq().hi > BigRational::one());
    }

    #[test]
    fn classify_not_perron_cases() {
        // dominant conjugate pair
        let c = classify_number(&p("x^2+x+3"), &CertifyConfig::default()).unwrap();
        assert_eq!(c.tag, NumberClassTag::NotPerron);
        // even polynomial: +-beta tie
        let c = classify_number(&p("x^2-2"), &CertifyConfig::default()).unwrap();
        assert_eq!(c.tag, NumberClassTag::NotPerron);
        // equal modulus real and complex roots (cube roots of 2)
        let c = classify_number(&p("x^3-2"), &CertifyConfig::default()).unwrap();
        assert_eq!(c.tag, NumberClassTag::NotPerron);
    }

    #[test]
    fn classify_degree_one() {
        let c = classify_number(&p("x-2"), &CertifyConfig::default()).unwrap();
        assert_eq!(c.tag, NumberClassTag::Pisot);
        let c = classify_number(&p("x-1"), &CertifyConfig::default()).unwrap();
        assert_eq!(c.tag, NumberClassTag::NotPerron);
    }

    #[test]
    fn classify_reducible_reports_factors() {
        let err = classify_number(&p("x^5-x^4-1"), &CertifyConfig::default()).unwrap_err();
        match err {
            ClassifyError::Reducible(fs) => {
                assert!(fs.contains(&p("x^2-x+1")));
                assert!(fs.contains(&p("x^3-x-1")));
            }
            other => panic!("expected Reducible, got {other:?}"),
        }
    }

    #[test]
    fn compare_modulus_examples() {
        let config = CertifyConfig::default();
        let t0 = theta0();
        // conjugate of x^3-5x^2-8x+5 beyond the golden ratio
        let c = classify_full(&p("x^3-5x^2-8x+5"), &config).unwrap();
        let gamma = c.class.witness.expect("witness");
        assert_eq!(compare_modulus(&gamma, &t0, &config), ModulusOrdering::Greater);
        // the Table 1 row 1 conjugate has modulus about 1.0315 < theta0
        let iso = isolate_roots(&p("x^12-x^10-x^9+x^4+x^3-x-1"));
        let conj = iso.roots.iter().find(|r| !r.is_real()).unwrap().clone();
        assert_eq!(compare_modulus(&conj, &t0, &config), ModulusOrdering::Less);
        // |root of x^2-x-1| vs theta0: the same algebraic number
        let iso = isolate_roots(&p("x^2-x-1"));
        let phi = iso.roots[0].clone();
        assert_eq!(compare_modulus(&phi, &t0, &config), ModulusOrdering::Equal);
    }

    #[test]
    fn mahler_measure_examples() {
        let config = CertifyConfig::default();
        let eps = rat(1, 1 << 30);
        // Pisot: M(beta) = beta
        let m = mahler_measure(&p("x^2-x-1"), &eps, &config);
        assert!(m.contains(&rat(1618033988749894848, 1_000_000_000_000_000_000)));
        // Lehmer: M = tau_10 = 1.17628081825991...
        let m = mahler_measure(&p("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"), &eps, &config);
        assert!(m.contains(&rat(117628081825991, 100_000_000_000_000)), "{m:?}");
        // x^4-x-1: oracle is the product of certified moduli at high
        // precision over the roots outside the unit circle
        let m = mahler_measure(&p("x^4-x-1"), &eps, &config);
        let iso = isolate_roots(&p("x^4-x-1"));
        let mut prod = Interval::point(BigRational::one());
        for r in &iso.roots {
            let mut enc = r.clone();
            enc.refine_to_bits(128);
            let msq = enc.modulus_sq();
            if msq.lo > BigRational::one() {
                prod = prod.mul(&msq);
            }
        }
        let oracle = sqrt_interval(&prod, 128);
        assert!(m.intersect(&oracle).is_some(), "m={m:?} oracle={oracle:?}");
        assert!(m.width() < rat(1, 1 << 30));
    }

    #[test]
    fn mahler_multiplicity_and_cyclotomic() {
        let config = CertifyConfig::default();
        let eps = rat(1, 1 << 20);
        // (x^2-x-1)^2 * (x^2-x+1): measure phi^2, cyclotomic contributes 1
        let q = p("x^2-x-1").mul(&p("x^2-x-1")).mul(&p("x^2-x+1"));
        let m = mahler_measure(&q, &eps, &config);
        // phi^2 = 2.618033988749894...
        assert!(m.contains(&rat(2618033988749894, 1_000_000_000_000_000)), "{m:?}");
    }

    #[test]
    fn constants_are_algebraic_pairs() {
        let t0 = theta0();
        assert_eq!(t0.poly, p("x^2-x-1"));
        assert!(t0.enclosure.real_interval().unwrap().contains(&rat(1618, 1000)));
        let r = rho();
        assert!(r.enclosure.real_interval().unwrap().contains(&rat(1324718, 1_000_000)));
        let t = tau10();
        assert!(t.enclosure.real_interval().unwrap().contains(&rat(1176281, 1_000_000)));
    }

    #[test]
    fn verdicts_stable_under_higher_precision() {
        let config = CertifyConfig::default();
        let t0 = theta0();
        let iso = isolate_roots(&p("x^12-x^10-x^9+x^4+x^3-x-1"));
        let mut conj = iso.roots.iter().find(|r| !r.is_real()).unwrap().clone();
        let before = compare_modulus(&conj, &t0, &config);
        for _ in 0..8 {
            conj.refine();
        }
        let after = compare_modulus(&conj, &t0, &config);
        assert_eq!(before, after);
    }
}
