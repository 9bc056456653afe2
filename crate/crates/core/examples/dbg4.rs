use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use std::time::Instant;

fn main() {
    // dense odd numerator, power-of-two denominator
    let mut num = BigInt::one();
    for i in 0..15000u64 {
        num = (num << 1) + BigInt::from((i * 2654435761) % 2);
    }
    num = num | BigInt::one();
    let den = BigInt::one() << 15093u64;
    let x = BigRational::new(num.clone(), den.clone());
    let y = x.clone();

    let t = Instant::now();
    let _m = &x * &y;
    println!("ratio mul dense: {:?}", t.elapsed());

    let t = Instant::now();
    let _g = num.gcd(&den);
    println!("gcd(odd, 2^k): {:?}", t.elapsed());

    let a = &num * &num;
    let b = &den * &den;
    let t = Instant::now();
    let _r = BigRational::new(a.clone(), b.clone());
    println!("ratio new reduce: {:?}", t.elapsed());

    let t = Instant::now();
    let _p = &a * &b;
    println!("bigint mul dense 30k: {:?}", t.elapsed());

    let t = Instant::now();
    let _c = x.cmp(&y);
    println!("ratio cmp: {:?}", t.elapsed());
}
