use num_bigint::BigInt;
use num_rational::BigRational;
use perron_core::algebra::IntPolynomial;
use perron_core::certify::{eval_poly_interval_pub, isolate_roots, Interval};
use std::time::Instant;

fn main() {
    let sqrt2: IntPolynomial = "x^2-2".parse().unwrap();
    let mut a = isolate_roots(&sqrt2)
        .roots
        .into_iter()
        .find(|r| r.real_interval().map_or(false, |iv| iv.hi > BigRational::from(BigInt::from(0))))
        .unwrap();
    for _ in 0..6 {
        a.refine();
    }
    let iv = a.real_interval().unwrap();
    println!(
        "lo num={} den={} den_ones={} | hi den_ones={}",
        iv.lo.numer().bits(),
        iv.lo.denom().bits(),
        iv.lo.denom().magnitude().count_ones(),
        iv.hi.denom().magnitude().count_ones()
    );
    let deriv: Vec<BigInt> = vec![BigInt::from(0), BigInt::from(2)];
    let t = Instant::now();
    let v = eval_poly_interval_pub(&deriv, &iv, Some(60000));
    println!("deriv eval: {:?}", t.elapsed());
    let t = Instant::now();
    let m = iv.midpoint();
    println!("midpoint: {:?}", t.elapsed());
    let t = Instant::now();
    let pm = sqrt2.eval_rat(&m);
    println!("pm: {:?} num={} den={}", t.elapsed(), pm.numer().bits(), pm.denom().bits());
    let t = Instant::now();
    let n = Interval::point(m).sub(&Interval::point(pm).div(&v)).round_out(60000);
    println!("newton: {:?}", t.elapsed());
    let t = Instant::now();
    let s1 = sqrt2.sign_at(&n.lo);
    let s2 = sqrt2.sign_at(&n.hi);
    println!("signs: {:?} {s1} {s2}", t.elapsed());
}
// extra check appended
