//! Integer helpers: primes, valuations, integer polynomials and exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Primes `<= n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorisation by trial division (for small inputs).
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Whether `n` is a positive power of 3 (including `3^0 = 1`).
pub fn is_power_of_3(n: &BigInt) -> bool {
    if !n.is_positive() {
        return false;
    }
    let mut n = n.clone();
    let three = BigInt::from(3);
    while (&n % &three).is_zero() {
        n /= &three;
    }
    n.is_one()
}

/// Whether `|num(q)|` is a power of 3.
pub fn numerator_is_power_of_3(q: &BigRational) -> bool {
    is_power_of_3(&q.numer().abs())
}

/// Squarefree test for small positive integers.
pub fn is_squarefree(n: u64) -> bool {
    n > 0 && factor_u64(n).iter().all(|&(_, e)| e == 1)
}

/// `"num/den"` (or just `"num"` when `compact` and the denominator is 1).
pub fn fmt_rational(q: &BigRational, compact: bool) -> String {
    if compact && q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact decimal when the denominator divides a power of 10, else `"num/den"`.
pub fn fmt_decimal(q: &BigRational) -> String {
    let mut den = q.denom().clone();
    let mut digits = 0usize;
    for f in [2u32, 5] {
        while (&den % f).is_zero() {
            den /= f;
        }
    }
    if !den.is_one() {
        return fmt_rational(q, true);
    }
    while !(q * BigInt::from(10).pow(digits as u32)).is_integer() {
        digits += 1;
    }
    let scaled = (q * BigInt::from(10).pow(digits as u32)).to_integer();
    let neg = scaled.is_negative();
    let s = scaled.abs().to_string();
    let body = if digits == 0 {
        s
    } else {
        let s = format!("{:0>width$}", s, width = digits + 1);
        let (a, b) = s.split_at(s.len() - digits);
        format!("{a}.{b}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Discriminant of a monic integer polynomial (ascending coefficients).
pub fn poly_discriminant(coeffs: &[BigInt]) -> BigInt {
    let n = coeffs.len() - 1;
    assert!(n >= 1, "discriminant of a constant");
    if n == 1 {
        return BigInt::one();
    }
    let deriv: Vec<BigInt> = (1..=n).map(|i| &coeffs[i] * BigInt::from(i)).collect();
    let res = resultant(coeffs, &deriv);
    let lead = &coeffs[n];
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    res * sign / lead
}

/// Resultant of two integer polynomials (ascending coefficients) via a
/// fraction-free determinant of the Sylvester matrix.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut a = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            a[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            a[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(a)
}

/// Fraction-free Gaussian elimination determinant.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn discriminants() {
        assert_eq!(poly_discriminant(&big(&[-1, -1, 1])), BigInt::from(5));
        assert_eq!(poly_discriminant(&big(&[1, 0, 1])), BigInt::from(-4));
        // x^3 - x^2 - 2x + 1 generates the cubic field of discriminant 49
        assert_eq!(poly_discriminant(&big(&[1, -2, -1, 1])), BigInt::from(49));
        // x^4 + 1: disc 256
        assert_eq!(poly_discriminant(&big(&[1, 0, 0, 0, 1])), BigInt::from(256));
    }

    #[test]
    fn primes_and_factors() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(1_000_003) && !is_prime(1_000_001));
        assert_eq!(factor_u64(300125), vec![(5, 3), (7, 4)]);
        assert_eq!(valuation(&BigInt::from(1944), 3), 5);
        assert!(is_power_of_3(&BigInt::from(243)) && !is_power_of_3(&BigInt::from(18)));
    }

    #[test]
    fn decimals() {
        assert_eq!(fmt_decimal(&rat(2261, 10000)), "0.2261");
        assert_eq!(fmt_decimal(&rat(-1, 8)), "-0.125");
        assert_eq!(fmt_decimal(&rat(41, 150)), "41/150");
        assert_eq!(fmt_decimal(&rat(20, 1)), "20");
    }
}
