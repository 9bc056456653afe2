//! Canonical univariate polynomials over Z and Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use super::AlgebraError;

/// Integer-coefficient univariate polynomial.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so
/// equal polynomials have equal representations. The zero polynomial has an
/// empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPolynomial { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Builds from descending i64 coefficients (handy in tests):
    /// `from_descending(&[1, -1, -1])` is `x^2 - x - 1`.
    pub fn from_descending(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().rev().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * x^deg`.
    pub fn monomial(deg: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a known-nonzero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at `p/q`, computed as
    /// `(sum a_i p^i q^(d-i)) / q^d` to stay in integer arithmetic.
    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let d = self.deg();
        let p = x.numer();
        let q = x.denom();
        let mut num = BigInt::zero();
        let mut qp = BigInt::one();
        for i in (0..=d).rev() {
            num = num * p + &self.coeffs[i] * &qp;
            qp *= q;
        }
        BigRational::new(num, q.pow(d as u32))
    }

    /// Sign of `P(x)` at a rational point: -1, 0, or 1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let d = self.deg();
        let p = x.numer();
        let q = x.denom();
        let mut num = BigInt::zero();
        let mut qp = BigInt::one();
        for i in (0..=d).rev() {
            num = num * p + &self.coeffs[i] * &qp;
            qp *= q;
        }
        // q > 0 by BigRational invariant, so the sign is the numerator's.
        if num.is_zero() {
            0
        } else if num.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> IntPolynomial {
        if k.is_zero() {
            return Self::zero();
        }
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Quotient and remainder by a monic divisor; exact over Z.
    pub fn divrem_monic(&self, div: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(div.is_monic(), "divrem_monic requires a monic divisor");
        let dd = div.deg();
        if self.degree().map_or(true, |d| d < dd) {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for j in 0..dd {
                let t = &q * &div.coeffs[j];
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Exact division: `Some(q)` iff `self = q * div` over Z.
    pub fn div_exact(&self, div: &IntPolynomial) -> Option<IntPolynomial> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = RatPolynomial::from_int(self).divrem(&RatPolynomial::from_int(div)).ok()?;
        if !r.is_zero() {
            return None;
        }
        q.to_int()
    }

    /// Content: the gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part `self / content`, preserving the sign of the
    /// leading coefficient.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        IntPolynomial { coeffs: self.coeffs.iter().map(|a| a / &c).collect() }
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_positive(&self) -> IntPolynomial {
        let p = self.primitive_part();
        if p.leading().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// `x^deg * P(1/x)`: the coefficient sequence reversed.
    pub fn reverse(&self) -> IntPolynomial {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// `P(-x)`.
    pub fn compose_neg(&self) -> IntPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPolynomial { coeffs }
    }

    /// True iff `x^deg * P(1/x) = P(x)` or `= -P(x)`.
    pub fn is_self_reciprocal(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let r = self.reverse();
        r == *self || r == self.neg()
    }

    /// True for the `+` variant specifically (needed by the trace
    /// substitution `y = x + 1/x`).
    pub fn is_self_reciprocal_plus(&self) -> bool {
        !self.is_zero() && self.reverse() == *self
    }

    /// Polynomial gcd over Z via the primitive Euclidean remainder
    /// sequence; the result is primitive with positive leading coefficient.
    pub fn gcd_poly(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() {
            return other.primitive_positive();
        }
        if other.is_zero() {
            return self.primitive_positive();
        }
        let cont = self.content().gcd(&other.content());
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_positive();
            a = b;
            b = r;
        }
        a.primitive_positive().scale(&cont)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &IntPolynomial) -> IntPolynomial {
        let db = b.deg();
        let mut r = self.clone();
        let lb = b.leading();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading();
            r = r.scale(&lb).sub(&b.shift_up(dr - db).scale(&lr));
        }
        r
    }

    /// Squarefree part: `P / gcd(P, P')`, primitive with positive leading
    /// coefficient.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return Self::zero();
        }
        if self.deg() == 0 {
            return Self::one();
        }
        let g = self.gcd_poly(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_positive();
        }
        let q = RatPolynomial::from_int(self)
            .divrem(&RatPolynomial::from_int(&g))
            .expect("gcd is nonzero")
            .0;
        q.primitive_int().1
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd_poly(&self.derivative()).degree() == Some(0)
    }

    /// Max-norm of the coefficient vector.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for IntPolynomial {
    /// Canonical symbolic form, descending: `x^2-x-1`, `2x^3+x-5`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Error from parsing polynomial text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolyError(pub String);

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse polynomial: {}", self.0)
    }
}

impl std::error::Error for ParsePolyError {}

impl FromStr for IntPolynomial {
    type Err = ParsePolyError;

    /// Accepts either a descending coefficient list `[1,-1,-1]` or the
    /// symbolic form `x^2-x-1` (spaces and `*` allowed).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParsePolyError("empty input".into()));
        }
        if s.starts_with('[') {
            let inner = s
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| ParsePolyError(format!("unbalanced brackets in {s:?}")))?;
            let mut desc = Vec::new();
            for part in inner.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    return Err(ParsePolyError(format!("empty coefficient in {s:?}")));
                }
                let c = BigInt::from_str(part)
                    .map_err(|_| ParsePolyError(format!("bad integer {part:?}")))?;
                desc.push(c);
            }
            desc.reverse();
            return Ok(Self::from_coeffs(desc));
        }
        parse_symbolic(s)
    }
}

fn parse_symbolic(s: &str) -> Result<IntPolynomial, ParsePolyError> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let bytes = cleaned.as_bytes();
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigInt::one();
        loop {
            match bytes.get(i) {
                Some(b'+') => i += 1,
                Some(b'-') => {
                    sign = -sign;
                    i += 1;
                }
                _ => break,
            }
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff_mag = if i > start {
            BigInt::from_str(&cleaned[start..i])
                .map_err(|_| ParsePolyError(format!("bad coefficient in {s:?}")))?
        } else {
            BigInt::one()
        };
        let mut exp = 0usize;
        if bytes.get(i) == Some(&b'x') {
            i += 1;
            exp = 1;
            if bytes.get(i) == Some(&b'^') {
                i += 1;
                let estart = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == estart {
                    return Err(ParsePolyError(format!("missing exponent in {s:?}")));
                }
                exp = cleaned[estart..i]
                    .parse()
                    .map_err(|_| ParsePolyError(format!("bad exponent in {s:?}")))?;
            }
        } else if i == start {
            return Err(ParsePolyError(format!("unexpected character at {:?}", &cleaned[i..])));
        }
        terms.push((exp, sign * coeff_mag));
    }
    if terms.is_empty() {
        return Err(ParsePolyError(format!("no terms in {s:?}")));
    }
    let deg = terms.iter().map(|(e, _)| *e).max().unwrap();
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (e, c) in terms {
        coeffs[e] += c;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Rational-coefficient polynomial; every coefficient in lowest terms with
/// positive denominator (the `BigRational` invariant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        RatPolynomial {
            coeffs: p.coeffs().iter().map(|c| BigRational::from(c.clone())).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Euclidean division over Q: `self = q * div + r` with
    /// `deg r < deg div`.
    pub fn divrem(&self, div: &RatPolynomial) -> Result<(RatPolynomial, RatPolynomial), AlgebraError> {
        if div.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let dd = div.degree().unwrap();
        let lead = div.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = &rem[i] / &lead;
            if q.is_zero() {
                continue;
            }
            for j in 0..dd {
                let t = &q * &div.coeffs[j];
                rem[i - dd + j] -= t;
            }
            rem[i] = BigRational::zero();
            quot[i - dd] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Splits into `(content, primitive integer part)` with
    /// `self = content * part` and `part` primitive with positive leading
    /// coefficient.
    pub fn primitive_int(&self) -> (BigRational, IntPolynomial) {
        if self.is_zero() {
            return (BigRational::zero(), IntPolynomial::zero());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * &den / c.denom())
            .collect();
        let ip = IntPolynomial::from_coeffs(ints);
        let cont = ip.content();
        let mut prim = ip.primitive_part();
        let mut num = cont;
        if prim.leading().is_negative() {
            prim = prim.neg();
            num = -num;
        }
        (BigRational::new(num, den), prim)
    }

    /// `Some(p)` iff all coefficients are integers.
    pub fn to_int(&self) -> Option<IntPolynomial> {
        let mut ints = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            ints.push(c.to_integer());
        }
        Some(IntPolynomial::from_coeffs(ints))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn add_example() {
        // (x^2-x-1) + (x+1) = x^2
        assert_eq!(p("x^2-x-1").add(&p("x+1")), p("x^2"));
    }

    #[test]
    fn divrem_example() {
        // (x^2-3x+1) / (x-1): q = x-2, r = -1
        let (q, r) = RatPolynomial::from_int(&p("x^2-3x+1"))
            .divrem(&RatPolynomial::from_int(&p("x-1")))
            .unwrap();
        assert_eq!(q.to_int().unwrap(), p("x-2"));
        assert_eq!(r.to_int().unwrap(), IntPolynomial::from_descending(&[-1]));
    }

    #[test]
    fn divrem_by_zero() {
        let err = RatPolynomial::from_int(&p("x"))
            .divrem(&RatPolynomial::zero())
            .unwrap_err();
        assert_eq!(err, AlgebraError::DivisionByZero);
    }

    #[test]
    fn primitive_part_example() {
        // 2x^2+2 has content 2 and primitive part x^2+1
        assert_eq!(p("2x^2+2").primitive_part(), p("x^2+1"));
        assert_eq!(p("2x^2+2").content(), BigInt::from(2));
    }

    #[test]
    fn monic_division_is_exact() {
        let a = p("x^5-2x^3+x-7");
        let b = p("x^2+3x-1");
        let (q, r) = a.divrem_monic(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().map_or(true, |d| d < 2));
    }

    #[test]
    fn self_reciprocal_examples() {
        let lehmer = p("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
        assert!(lehmer.is_self_reciprocal());
        assert!(lehmer.is_self_reciprocal_plus());
        assert!(!p("x^2-x-1").is_self_reciprocal());
        // oracle: literal coefficient reversal
        let q = p("x^4-x^3-x^2-x+1");
        let rev = IntPolynomial::from_coeffs(q.coeffs().iter().rev().cloned().collect());
        assert_eq!(q.is_self_reciprocal(), rev == q || rev == q.neg());
        assert!(q.is_self_reciprocal());
        let r = p("x^4-x^3-x^2-x+2");
        let rev = IntPolynomial::from_coeffs(r.coeffs().iter().rev().cloned().collect());
        assert_eq!(r.is_self_reciprocal(), rev == r || rev == r.neg());
        assert!(!r.is_self_reciprocal());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p("x^2-x-1");
        let b = p("x^2-3x+1");
        let prod = a.mul(&b);
        assert_eq!(prod.gcd_poly(&a), a);
        let sq = a.mul(&a).mul(&b);
        assert_eq!(sq.squarefree_part(), prod);
        assert!(prod.is_squarefree());
        assert!(!sq.is_squarefree());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "x^12-x^10-x^9+x^4+x^3-x-1",
            "x^2-x-1",
            "x^3-5x^2-2x+5",
            "2x^3+x-5",
            "-x+3",
            "7",
            "x",
        ] {
            let poly = p(s);
            assert_eq!(poly.to_string().parse::<IntPolynomial>().unwrap(), poly);
        }
        assert_eq!(p("[1,-1,-1]"), p("x^2-x-1"));
        assert_eq!(p("[1, 0, -2]"), p("x^2-2"));
        assert_eq!(p(" x^2 - x - 1 "), p("x^2-x-1"));
        assert!(p("x^2-x-1").to_string() == "x^2-x-1");
        assert!("".parse::<IntPolynomial>().is_err());
        assert!("x^".parse::<IntPolynomial>().is_err());
        assert!("[1,]".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn eval_and_signs() {
        let q = p("x^3-5x^2-2x+5");
        assert_eq!(q.eval_int(&BigInt::from(2)), BigInt::from(-11));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        // P(1/2) = 1/8 - 5/4 - 1 + 5 = 2.875
        assert_eq!(
            q.eval_rat(&half),
            BigRational::new(BigInt::from(23), BigInt::from(8))
        );
        assert_eq!(q.sign_at(&half), 1);
        assert_eq!(q.sign_at(&BigRational::from(BigInt::from(2))), -1);
    }
}
