//! Minimal polynomials of powers via the power-map resultant, and the
//! trace-polynomial substitution y = x + 1/x for reciprocal polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{IntPolynomial, RatPolynomial};
use super::AlgebraError;

/// `Res_y(P(y), x - y^n) = prod_i (x - alpha_i^n)` for monic `P` with
/// roots `alpha_i`: the characteristic polynomial of the multiplication-by-
/// `y^n` map on Z[y]/(P), evaluated by determinant interpolation.
pub fn resultant_power(poly: &IntPolynomial, n: u64) -> IntPolynomial {
    assert!(poly.is_monic(), "resultant_power requires a monic polynomial");
    let d = poly.deg();
    if n == 1 {
        return poly.clone();
    }
    // g = y^n mod P, integer because P is monic
    let g = x_pow_mod(poly, n);
    // multiplication matrix: column j holds g * y^j mod P
    let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(d);
    let mut cur = g.clone();
    for _ in 0..d {
        let mut col = vec![BigInt::zero(); d];
        for (i, c) in cur.coeffs().iter().enumerate() {
            col[i] = c.clone();
        }
        cols.push(col);
        cur = cur.shift_up(1).divrem_monic(poly).1;
    }
    // char(x) = det(x I - M), interpolated at x = 0..d
    let mut values = Vec::with_capacity(d + 1);
    for t in 0..=d {
        let tt = BigInt::from(t);
        let mut m: Vec<Vec<BigInt>> = (0..d)
            .map(|i| (0..d).map(|j| -&cols[j][i]).collect())
            .collect();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &tt;
        }
        values.push(bareiss_det(m));
    }
    let nodes: Vec<BigInt> = (0..=d).map(BigInt::from).collect();
    interpolate_int(&nodes, &values)
}

/// The minimal polynomial of `beta^n` for the minimal polynomial `P` of a
/// Perron number `beta`: the squarefree part of the power resultant. All
/// powers of a Perron number keep its degree, so a degree drop signals a
/// caller bug and is reported as an error.
pub fn min_poly_of_power(poly: &IntPolynomial, n: u64) -> Result<IntPolynomial, AlgebraError> {
    let d = poly.deg();
    let res = resultant_power(poly, n);
    let sf = res.squarefree_part();
    let got = sf.deg();
    if got != d {
        return Err(AlgebraError::DegreeDropped { expected: d, got });
    }
    Ok(sf)
}

/// `y^n mod P` by binary powering, exact over Z for monic `P`.
fn x_pow_mod(poly: &IntPolynomial, n: u64) -> IntPolynomial {
    let d = poly.deg();
    if d == 0 {
        return IntPolynomial::zero();
    }
    let mut result = IntPolynomial::one();
    let mut base = if d == 1 {
        IntPolynomial::x().divrem_monic(poly).1
    } else {
        IntPolynomial::x()
    };
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base).divrem_monic(poly).1;
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base).divrem_monic(poly).1;
        }
    }
    result
}

/// Resultant of two nonzero integer polynomials via a fraction-free
/// Sylvester determinant.
pub(crate) fn resultant_sylvester(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    assert!(!a.is_zero() && !b.is_zero());
    let m = a.deg();
    let n = b.deg();
    if m == 0 {
        return a.leading().pow(n as u32);
    }
    if n == 0 {
        return b.leading().pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = a.coeff(m - k);
        }
    }
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = b.coeff(n - k);
        }
    }
    bareiss_det(mat)
}

/// Fraction-free Gaussian elimination; consumes the matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Lagrange interpolation with integer nodes and values; the result must
/// be an integer polynomial (it is a characteristic polynomial or a
/// resultant here).
pub(crate) fn interpolate_int(nodes: &[BigInt], values: &[BigInt]) -> IntPolynomial {
    let mut acc = RatPolynomial::zero();
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut term = RatPolynomial::from_coeffs(vec![BigRational::from(v.clone())]);
        for (j, node) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            let denom = &nodes[i] - node;
            let lin = RatPolynomial::from_coeffs(vec![
                BigRational::new(-node.clone(), denom.clone()),
                BigRational::new(BigInt::one(), denom),
            ]);
            term = term.mul(&lin);
        }
        acc = acc.add(&term);
    }
    acc.to_int().expect("characteristic polynomial has integer coefficients")
}

/// The unique degree-m integer polynomial Q with
/// `P(x) = x^m Q(x + 1/x)`, defined for self-reciprocal `P = +reverse(P)`
/// of even degree `2m`.
pub fn chebyshev_reduce(poly: &IntPolynomial) -> Result<IntPolynomial, AlgebraError> {
    if poly.is_zero() || !poly.is_self_reciprocal_plus() || poly.deg() % 2 != 0 {
        return Err(AlgebraError::NotReciprocal);
    }
    let m = poly.deg() / 2;
    // v_j(y) = x^j + x^-j as a polynomial in y = x + 1/x:
    // v_0 = 2, v_1 = y, v_{j+1} = y v_j - v_{j-1}
    let y = IntPolynomial::x();
    let mut v_prev = IntPolynomial::from_descending(&[2]);
    let mut v_cur = y.clone();
    let mut q = IntPolynomial::from_coeffs(vec![poly.coeff(m)]);
    for j in 1..=m {
        q = q.add(&v_cur.scale(&poly.coeff(m + j)));
        let next = y.mul(&v_cur).sub(&v_prev);
        v_prev = v_cur;
        v_cur = next;
    }
    Ok(q)
}

/// Expands `x^m Q(x + 1/x)`, the inverse of `chebyshev_reduce`.
pub fn chebyshev_expand(q: &IntPolynomial) -> IntPolynomial {
    if q.is_zero() {
        return IntPolynomial::zero();
    }
    let m = q.deg();
    let x2p1 = IntPolynomial::from_descending(&[1, 0, 1]);
    let mut acc = IntPolynomial::zero();
    for j in 0..=m {
        let c = q.coeff(j);
        if c.is_zero() {
            continue;
        }
        // x^(m-j) (x^2+1)^j
        let mut term = IntPolynomial::from_coeffs(vec![c]);
        for _ in 0..j {
            term = term.mul(&x2p1);
        }
        acc = acc.add(&term.shift_up(m - j));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sturm::{sturm_count, Endpoint};
    use crate::algebra::{FieldElement, NumberField};

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn golden_ratio_square() {
        // phi^2 and (1-phi)^2 have sum 3, product 1
        assert_eq!(resultant_power(&p("x^2-x-1"), 2), p("x^2-3x+1"));
        assert_eq!(min_poly_of_power(&p("x^2-x-1"), 2).unwrap(), p("x^2-3x+1"));
    }

    #[test]
    fn power_one_is_identity() {
        let q = p("x^5-x^4-3x^2+1");
        assert_eq!(resultant_power(&q, 1), q);
    }

    #[test]
    fn cubic_power_against_field_oracle() {
        // oracle: beta^3 by repeated field multiplication, then the minimal
        // polynomial of the multiplication map by linear algebra
        let q = p("x^3-5x^2-2x+5");
        let field = NumberField::new(q.clone());
        let beta = FieldElement::generator(field);
        let beta3 = beta.mul(&beta).unwrap().mul(&beta).unwrap();
        let oracle = beta3.minimal_polynomial();
        let got = min_poly_of_power(&q, 3).unwrap();
        assert_eq!(got, oracle);
        assert_eq!(got.deg(), 3);
        assert!(got.is_monic());
    }

    #[test]
    fn degree_drop_detected() {
        // x^2-2 has roots +-sqrt2 whose squares coincide
        let err = min_poly_of_power(&p("x^2-2"), 2).unwrap_err();
        assert_eq!(err, AlgebraError::DegreeDropped { expected: 2, got: 1 });
    }

    #[test]
    fn cubic_family_squares_match_symmetric_functions() {
        // for x^3 - d x^2 - 2x + d the squares satisfy
        // x^3 - (d^2+4) x^2 + (2 d^2+4) x - d^2
        for d in 3i64..=10 {
            let q = IntPolynomial::from_descending(&[1, -d, -2, d]);
            let expect = IntPolynomial::from_descending(&[1, -(d * d + 4), 2 * d * d + 4, -d * d]);
            assert_eq!(resultant_power(&q, 2), expect);
        }
    }

    #[test]
    fn chebyshev_reduce_examples() {
        assert_eq!(chebyshev_reduce(&p("x^2+1")).unwrap(), p("x"));
        assert_eq!(chebyshev_reduce(&p("x^4+1")).unwrap(), p("x^2-2"));
        assert_eq!(
            chebyshev_reduce(&p("x^2-x-1")).unwrap_err(),
            AlgebraError::NotReciprocal
        );
    }

    #[test]
    fn chebyshev_round_trip() {
        for s in ["x^2+1", "x^4+1", "x^4-x^3-x^2-x+1", "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"] {
            let q = p(s);
            let reduced = chebyshev_reduce(&q).unwrap();
            assert_eq!(chebyshev_expand(&reduced), q);
        }
    }

    #[test]
    fn lehmer_trace_polynomial_root_pattern() {
        // Salem pattern: exactly one real root beyond 2, the rest in (-2, 2)
        let lehmer = p("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
        let q = chebyshev_reduce(&lehmer).unwrap();
        assert_eq!(q.deg(), 5);
        assert_eq!(sturm_count(&q, &Endpoint::finite(2), &Endpoint::PosInf), 1);
        assert_eq!(sturm_count(&q, &Endpoint::finite(-2), &Endpoint::finite(2)), 4);
    }
}
