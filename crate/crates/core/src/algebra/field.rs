//! Elements of Q(beta) in the power basis 1, beta, .., beta^(d-1).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;

use super::poly::{IntPolynomial, RatPolynomial};
use super::AlgebraError;

/// The ambient field Q[x]/(P) for a monic polynomial P.
///
/// P is expected to be irreducible; this is the caller's contract (the
/// census factorizer is the place that actually checks it). All arithmetic
/// here is plain ring arithmetic modulo P and stays exact either way.
#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    poly: IntPolynomial,
}

impl NumberField {
    pub fn new(poly: IntPolynomial) -> Arc<Self> {
        assert!(poly.is_monic(), "number field modulus must be monic");
        assert!(poly.deg() >= 1, "number field modulus must be nonconstant");
        Arc::new(NumberField { poly })
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.deg()
    }
}

/// An element of Q(beta), stored as rational coordinates in the power
/// basis. Two elements are equal iff their coordinate vectors are equal.
#[derive(Debug, Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    vec: Vec<BigRational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.poly == other.field.poly && self.vec == other.vec
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn new(field: Arc<NumberField>, mut vec: Vec<BigRational>) -> Self {
        assert!(vec.len() <= field.degree(), "coordinate vector too long");
        vec.resize(field.degree(), BigRational::zero());
        FieldElement { field, vec }
    }

    pub fn zero(field: Arc<NumberField>) -> Self {
        let d = field.degree();
        FieldElement { field, vec: vec![BigRational::zero(); d] }
    }

    pub fn from_int(field: Arc<NumberField>, n: BigInt) -> Self {
        let mut e = Self::zero(field);
        e.vec[0] = BigRational::from(n);
        e
    }

    /// The generator beta itself.
    pub fn generator(field: Arc<NumberField>) -> Self {
        if field.degree() == 1 {
            // Q[x]/(x - n): beta is the rational integer n
            let n = -field.poly().constant();
            return Self::from_int(field, n);
        }
        let mut e = Self::zero(field);
        e.vec[1] = BigRational::one();
        e
    }

    pub fn from_int_vec(field: Arc<NumberField>, vec: &[BigInt]) -> Self {
        let v = vec.iter().map(|c| BigRational::from(c.clone())).collect();
        Self::new(field, v)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.vec
    }

    pub fn is_zero(&self) -> bool {
        self.vec.iter().all(|c| c.is_zero())
    }

    fn check_field(&self, other: &FieldElement) -> Result<(), AlgebraError> {
        if self.field.poly == other.field.poly {
            Ok(())
        } else {
            Err(AlgebraError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.check_field(other)?;
        let vec = self.vec.iter().zip(&other.vec).map(|(a, b)| a + b).collect();
        Ok(FieldElement { field: self.field.clone(), vec })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.check_field(other)?;
        let vec = self.vec.iter().zip(&other.vec).map(|(a, b)| a - b).collect();
        Ok(FieldElement { field: self.field.clone(), vec })
    }

    pub fn scalar_mul(&self, k: &BigRational) -> FieldElement {
        let vec = self.vec.iter().map(|a| a * k).collect();
        FieldElement { field: self.field.clone(), vec }
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, AlgebraError> {
        self.check_field(other)?;
        let d = self.field.degree();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.vec.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.vec.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Ok(FieldElement {
            field: self.field.clone(),
            vec: reduce_mod(prod, self.field.poly()),
        })
    }

    pub fn pow(&self, mut n: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = Self::from_int(self.field.clone(), BigInt::one());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }

    /// `Some(n)` iff the element is the rational integer n, i.e. the
    /// coordinate vector is `(n, 0, .., 0)` with integral n.
    pub fn as_rational_integer(&self) -> Option<BigInt> {
        if self.vec.iter().skip(1).all(|c| c.is_zero()) && self.vec[0].is_integer() {
            Some(self.vec[0].to_integer())
        } else {
            None
        }
    }

    /// The coordinate polynomial, for evaluation at embeddings.
    pub fn as_poly(&self) -> RatPolynomial {
        RatPolynomial::from_coeffs(self.vec.clone())
    }

    /// The minimal polynomial of this element over Q: the lowest-degree
    /// monic integer relation among its powers, found by exact Gaussian
    /// elimination. Used as an independent oracle against the resultant
    /// route.
    pub fn minimal_polynomial(&self) -> IntPolynomial {
        let d = self.field.degree();
        // rows: coordinates of self^0, self^1, ...
        let mut powers: Vec<Vec<BigRational>> = Vec::with_capacity(d + 1);
        let mut cur = Self::from_int(self.field.clone(), BigInt::one());
        powers.push(cur.vec.clone());
        for _ in 0..d {
            cur = cur.mul(self).expect("same field");
            powers.push(cur.vec.clone());
            if let Some(rel) = linear_relation(&powers, d) {
                let rp = RatPolynomial::from_coeffs(rel);
                let (_, prim) = rp.primitive_int();
                return prim;
            }
        }
        unreachable!("an element of a degree-d field satisfies a degree <= d relation");
    }
}

/// Reduces a coordinate vector of length up to `2d-1` modulo the monic
/// modulus, returning exactly `d` coordinates.
fn reduce_mod(mut prod: Vec<BigRational>, modulus: &IntPolynomial) -> Vec<BigRational> {
    let d = modulus.deg();
    for i in (d..prod.len()).rev() {
        let c = std::mem::replace(&mut prod[i], BigRational::zero());
        if c.is_zero() {
            continue;
        }
        // x^i = x^(i-d) * (x^d mod P) since P is monic
        for j in 0..d {
            let m = modulus.coeff(j);
            if m.is_zero() {
                continue;
            }
            let t = &c * BigRational::from(m);
            prod[i - d + j] -= t;
        }
    }
    prod.truncate(d);
    prod.resize(d, BigRational::zero());
    prod
}

/// Looks for rationals c_0..c_{k-1} with last-power = sum c_i * powers[i];
/// returns the monic relation coefficients (c_0, .., c_{k-1}, 1) if one
/// exists for the smallest k = powers.len() - 1.
fn linear_relation(powers: &[Vec<BigRational>], dim: usize) -> Option<Vec<BigRational>> {
    let k = powers.len() - 1;
    // Solve A c = b where A's columns are powers[0..k], b = powers[k].
    let mut a: Vec<Vec<BigRational>> = (0..dim)
        .map(|r| (0..k).map(|c| powers[c][r].clone()).collect())
        .collect();
    let mut b: Vec<BigRational> = (0..dim).map(|r| powers[k][r].clone()).collect();
    let mut pivot_of_col = vec![usize::MAX; k];
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..dim).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].clone();
        for r in 0..dim {
            if r == row || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &inv;
            for c2 in col..k {
                let t = &factor * &a[row][c2];
                a[r][c2] -= t;
            }
            let t = &factor * &b[row];
            b[r] -= t;
        }
        pivot_of_col[col] = row;
        row += 1;
    }
    // consistent iff all rows beyond the pivots have zero b
    for r in row..dim {
        if !b[r].is_zero() {
            return None;
        }
    }
    let mut coeffs = vec![BigRational::zero(); k + 1];
    for col in 0..k {
        if pivot_of_col[col] != usize::MAX {
            let r = pivot_of_col[col];
            coeffs[col] = -(&b[r] / &a[r][col]);
        }
    }
    coeffs[k] = BigRational::one();
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(s: &str) -> Arc<NumberField> {
        NumberField::new(s.parse().unwrap())
    }

    #[test]
    fn golden_ratio_square() {
        // beta^2 = beta + 1 in Q[x]/(x^2-x-1)
        let f = field("x^2-x-1");
        let beta = FieldElement::generator(f.clone());
        let sq = beta.mul(&beta).unwrap();
        assert_eq!(
            sq.coords(),
            &[BigRational::from(BigInt::one()), BigRational::from(BigInt::one())]
        );
    }

    #[test]
    fn rational_integer_detection() {
        let f = field("x^2-x-1");
        let one = FieldElement::from_int(f.clone(), BigInt::one());
        assert_eq!(one.as_rational_integer(), Some(BigInt::one()));
        let beta = FieldElement::generator(f);
        assert_eq!(beta.as_rational_integer(), None);
    }

    #[test]
    fn cube_in_quintic_field() {
        // beta^3 = 5 beta^2 + 2 beta - 5 read off x^3-5x^2-2x+5
        let f = field("x^3-5x^2-2x+5");
        let beta = FieldElement::generator(f);
        let cube = beta.pow(3);
        let expect: Vec<BigRational> = [-5i64, 2, 5]
            .iter()
            .map(|&n| BigRational::from(BigInt::from(n)))
            .collect();
        assert_eq!(cube.coords(), &expect[..]);
    }

    #[test]
    fn field_mismatch_error() {
        let a = FieldElement::generator(field("x^2-x-1"));
        let b = FieldElement::generator(field("x^2-3x+1"));
        assert_eq!(a.add(&b).unwrap_err(), AlgebraError::FieldMismatch);
    }

    #[test]
    fn minimal_polynomial_of_generator_power() {
        let f = field("x^2-x-1");
        let beta = FieldElement::generator(f);
        // beta^2 = beta + 1 has minimal polynomial x^2 - 3x + 1
        let sq = beta.mul(&beta).unwrap();
        assert_eq!(sq.minimal_polynomial(), "x^2-3x+1".parse().unwrap());
        // a rational integer has a linear minimal polynomial
        let three = FieldElement::from_int(beta.field().clone(), BigInt::from(3));
        assert_eq!(three.minimal_polynomial(), "x-3".parse().unwrap());
    }

    #[test]
    fn ring_axioms_spot_check() {
        let f = field("x^3-5x^2-2x+5");
        let b = FieldElement::generator(f.clone());
        let u = b.pow(2).sub(&FieldElement::from_int(f.clone(), BigInt::from(3))).unwrap();
        let v = b.scalar_mul(&BigRational::new(BigInt::from(2), BigInt::from(3)));
        let w = b.pow(4);
        let left = u.mul(&v.add(&w).unwrap()).unwrap();
        let right = u.mul(&v).unwrap().add(&u.mul(&w).unwrap()).unwrap();
        assert_eq!(left, right);
        let assoc_l = u.mul(&v).unwrap().mul(&w).unwrap();
        let assoc_r = u.mul(&v.mul(&w).unwrap()).unwrap();
        assert_eq!(assoc_l, assoc_r);
    }
}
