//! Exact dyadic numbers `man * 2^exp` with directed rounding.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Rounding direction for [`Dyadic::round`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

/// An exact binary fraction `man * 2^exp`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Self {
        if man.is_zero() {
            return Self::zero();
        }
        Dyadic { man, exp }
    }

    pub fn zero() -> Self {
        Dyadic { man: BigInt::zero(), exp: 0 }
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Self::new(v.into(), 0)
    }

    /// Exact conversion of a finite double.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite double");
        if x == 0.0 {
            return Self::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Self::new(BigInt::from(m) * sign, e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    pub fn bits(&self) -> u64 {
        self.man.bits()
    }

    /// Exponent of the leading bit: `2^e <= |x| < 2^(e+1)`.
    pub fn leading_exp(&self) -> i64 {
        self.exp + self.man.bits() as i64 - 1
    }

    pub fn abs(&self) -> Self {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    pub fn neg(&self) -> Self {
        Dyadic { man: -&self.man, exp: self.exp }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Dyadic { man: self.man.clone(), exp: self.exp + k }
    }

    pub fn add(&self, o: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        match self.exp.cmp(&o.exp) {
            Ordering::Equal => Self::new(&self.man + &o.man, self.exp),
            Ordering::Less => {
                let shift = (o.exp - self.exp) as usize;
                Self::new(&self.man + (&o.man << shift), self.exp)
            }
            Ordering::Greater => {
                let shift = (self.exp - o.exp) as usize;
                Self::new((&self.man << shift) + &o.man, o.exp)
            }
        }
    }

    pub fn sub(&self, o: &Dyadic) -> Dyadic {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Dyadic) -> Dyadic {
        Self::new(&self.man * &o.man, self.exp + o.exp)
    }

    pub fn mul_int(&self, k: &BigInt) -> Dyadic {
        Self::new(&self.man * k, self.exp)
    }

    /// Rounds to at most `prec` significant bits in the given direction.
    pub fn round(&self, prec: u64, mode: Round) -> Dyadic {
        let b = self.man.bits();
        if b <= prec {
            return self.clone();
        }
        let shift = b - prec;
        let (sign, mag) = (self.man.sign(), self.man.magnitude());
        let q = mag >> shift;
        let inexact = mag.trailing_zeros().map_or(false, |t| t < shift);
        let up_mag = matches!((sign, mode), (Sign::Plus, Round::Up) | (Sign::Minus, Round::Down));
        let q = if inexact && up_mag { q + 1u32 } else { q };
        let signed = BigInt::from_biguint(if sign == Sign::Minus { Sign::Minus } else { Sign::Plus }, q);
        Self::new(signed, self.exp + shift as i64)
    }

    /// Rounds to nearest with `prec` bits; returns the value and a bound on the error.
    pub fn round_nearest(&self, prec: u64) -> (Dyadic, Dyadic) {
        let b = self.man.bits();
        if b <= prec {
            return (self.clone(), Dyadic::zero());
        }
        let shift = b - prec;
        let half = BigInt::one() << (shift - 1) as usize;
        let q = (&self.man + half).div_floor(&(BigInt::one() << shift as usize));
        let rounded = Self::new(q, self.exp + shift as i64);
        let err = Dyadic::new(BigInt::one(), self.exp + shift as i64 - 1);
        (rounded, err)
    }

    pub fn cmp_val(&self, o: &Dyadic) -> Ordering {
        let d = self.sub(o);
        match d.man.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn maximum(&self, o: &Dyadic) -> Dyadic {
        if self.cmp_val(o) == Ordering::Less {
            o.clone()
        } else {
            self.clone()
        }
    }

    pub fn minimum(&self, o: &Dyadic) -> Dyadic {
        if self.cmp_val(o) == Ordering::Greater {
            o.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.man << self.exp as usize)
        } else {
            BigRational::new(self.man.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        self.to_rational().cmp(q)
    }

    /// Directed rounding of a rational to `prec` significant bits.
    pub fn from_rational(q: &BigRational, prec: u64, mode: Round) -> Dyadic {
        let (num, den) = (q.numer(), q.denom());
        if num.is_zero() {
            return Dyadic::zero();
        }
        let k = prec as i64 + den.bits() as i64 - num.bits() as i64 + 2;
        let scaled = if k >= 0 {
            BigRational::new(num << k as usize, den.clone())
        } else {
            BigRational::new(num.clone(), den << (-k) as usize)
        };
        let int = match mode {
            Round::Down => scaled.floor().to_integer(),
            Round::Up => scaled.ceil().to_integer(),
        };
        Dyadic::new(int, -k).round(prec, mode)
    }

    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as usize
        } else {
            self.man.div_floor(&(BigInt::one() << (-self.exp) as usize))
        }
    }

    pub fn ceil_int(&self) -> BigInt {
        -(self.neg().floor_int())
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let b = self.man.bits() as i64;
        let (m, e) = if b > 60 {
            let r = self.round(60, Round::Down);
            (r.man, r.exp)
        } else {
            (self.man.clone(), self.exp)
        };
        let mf = m.to_f64().unwrap_or(f64::NAN);
        scale_f64(mf, e)
    }

    /// Decimal string with `digits` places after the point, rounded in `mode`.
    pub fn to_decimal(&self, digits: usize, mode: Round) -> String {
        let scaled = self.mul_int(&num_traits::pow(BigInt::from(10u32), digits));
        let int = match mode {
            Round::Down => scaled.floor_int(),
            Round::Up => scaled.ceil_int(),
        };
        format_fixed(&int, digits)
    }

    /// Decimal string with about `sig` significant digits, rounded in `mode`.
    pub fn to_decimal_sig(&self, sig: usize, mode: Round) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let log10 = (self.leading_exp() as f64 + 1.0) * std::f64::consts::LOG10_2;
        let digits = (sig as f64 - log10.ceil()).max(0.0) as usize;
        self.to_decimal(digits, mode)
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_val(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_val(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_val(other)
    }
}

fn scale_f64(mut m: f64, mut e: i64) -> f64 {
    while e > 1000 {
        m *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        m *= 2f64.powi(-1000);
        e += 1000;
    }
    m * 2f64.powi(e as i32)
}

fn format_fixed(int: &BigInt, digits: usize) -> String {
    let neg = int.is_negative();
    let mut s = int.magnitude().to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        s.insert(s.len() - digits, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

/// Floor square root of a nonnegative integer.
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_directions_bracket_value() {
        let x = Dyadic::from_rational(&BigRational::new(1.into(), 3.into()), 40, Round::Down);
        let y = Dyadic::from_rational(&BigRational::new(1.into(), 3.into()), 40, Round::Up);
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(x.cmp_rational(&third), Ordering::Less);
        assert_eq!(y.cmp_rational(&third), Ordering::Greater);
        let neg = Dyadic::from_int(-7).mul_pow2(-1);
        assert_eq!(neg.floor_int(), BigInt::from(-4));
        assert_eq!(neg.ceil_int(), BigInt::from(-3));
    }

    #[test]
    fn negative_round_down_goes_away_from_zero() {
        let v = Dyadic::new(BigInt::from(-0b1011), 0);
        let r = v.round(2, Round::Down);
        assert_eq!(r, Dyadic::from_int(-12));
        let r = v.round(2, Round::Up);
        assert_eq!(r, Dyadic::from_int(-8));
    }

    #[test]
    fn decimal_formatting() {
        let x = Dyadic::from_f64(0.125);
        assert_eq!(x.to_decimal(2, Round::Down), "0.12");
        assert_eq!(x.to_decimal(2, Round::Up), "0.13");
        assert_eq!(x.neg().to_decimal(1, Round::Down), "-0.2");
        assert_eq!(Dyadic::from_int(461).to_decimal(0, Round::Up), "461");
    }

    #[test]
    fn f64_round_trip() {
        for v in [1.5, -3.25, 1e-300, 6.02e23, 0.1] {
            assert_eq!(Dyadic::from_f64(v).to_f64(), v);
        }
    }
}
