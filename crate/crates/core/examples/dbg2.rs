use num_bigint::BigInt;
use num_rational::BigRational;
use perron_core::algebra::IntPolynomial;
use perron_core::certify::isolate_roots;
use std::time::Instant;

fn main() {
    let sqrt2: IntPolynomial = "x^2-2".parse().unwrap();
    let make = || {
        isolate_roots(&sqrt2)
            .roots
            .into_iter()
            .find(|r| r.real_interval().map_or(false, |iv| iv.hi > BigRational::from(BigInt::from(0))))
            .unwrap()
    };
    let mut a = make();
    for round in 0..8 {
        let t = Instant::now();
        a.refine();
        eprintln!("refine {round}: {:?} bits={}", t.elapsed(), a.precision_bits());
    }
}
