//! Exact scalars: rationals with a small-integer fast path, plus prime-field elements.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinError;

/// An exact scalar.
///
/// Rational values are kept canonical: reduced, positive denominator, and stored in the
/// `Small` variant whenever both parts fit in an `i64`. Two rationals are therefore equal
/// iff their representations are identical.
///
/// `Mod` values live in GF(p). A rational combined with a `Mod` value is reduced modulo
/// `p` first, so constants such as `Scalar::one()` work in either mode.
#[derive(Clone, Debug)]
pub enum Scalar {
    Small(i64, i64),
    Big(Box<BigRational>),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Small(0, 1)
    }

    pub fn one() -> Self {
        Scalar::Small(1, 1)
    }

    pub fn int(n: i64) -> Self {
        Scalar::Small(n, 1)
    }

    /// `num/den` reduced. Panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        normalize_i128(num as i128, den as i128)
    }

    /// Element `value mod modulus` of GF(modulus). The modulus is assumed prime.
    pub fn modp(value: i64, modulus: u64) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        let m = modulus as i128;
        let v = ((value as i128 % m) + m) % m;
        Scalar::Mod { value: v as u64, modulus }
    }

    pub fn from_big(r: BigRational) -> Self {
        // BigRational is already reduced with a positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar::Small(n, d),
            _ => Scalar::Big(Box::new(r)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n == 0,
            Scalar::Big(_) => false,
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(n, d) => *n == 1 && *d == 1,
            Scalar::Big(_) => false,
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Scalar::Mod { modulus, .. } => Some(*modulus),
            _ => None,
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(r) => (**r).clone(),
            Scalar::Mod { .. } => unreachable!("to_big on a prime-field element"),
        }
    }

    /// Reduces a rational into GF(p). Panics if the denominator vanishes mod p.
    fn reduce_mod(&self, p: u64) -> u64 {
        match self {
            Scalar::Mod { value, modulus } => {
                assert_eq!(*modulus, p, "mixed moduli {modulus} and {p}");
                *value
            }
            Scalar::Small(n, d) => {
                let num = (*n as i128).rem_euclid(p as i128) as u64;
                let den = (*d as i128).rem_euclid(p as i128) as u64;
                assert!(den != 0, "denominator {d} vanishes modulo {p}");
                mul_mod(num, inv_mod(den, p), p)
            }
            Scalar::Big(r) => {
                let pb = BigInt::from(p);
                let num = r.numer().mod_floor(&pb).to_u64().unwrap();
                let den = r.denom().mod_floor(&pb).to_u64().unwrap();
                assert!(den != 0, "denominator vanishes modulo {p}");
                mul_mod(num, inv_mod(den, p), p)
            }
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Small(n, d) => normalize_i128(*d as i128, *n as i128),
            Scalar::Big(r) => Scalar::from_big(r.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn normalize_i128(mut n: i128, mut d: i128) -> Scalar {
    debug_assert!(d != 0);
    if d < 0 {
        n = -n;
        d = -d;
    }
    let g = n.gcd(&d);
    if g > 1 {
        n /= g;
        d /= g;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) => Scalar::Small(n, d),
        _ => Scalar::from_big(BigRational::new(BigInt::from(n), BigInt::from(d))),
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert!(old_r == 1, "{a} is not invertible modulo {p}");
    old_s.rem_euclid(p as i128) as u64
}

fn common_modulus(a: &Scalar, b: &Scalar) -> Option<u64> {
    match (a.modulus(), b.modulus()) {
        (Some(p), Some(q)) => {
            assert_eq!(p, q, "mixed moduli {p} and {q}");
            Some(p)
        }
        (Some(p), None) | (None, Some(p)) => Some(p),
        (None, None) => None,
    }
}

fn add_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if let Some(p) = common_modulus(a, b) {
        let v = (a.reduce_mod(p) as u128 + b.reduce_mod(p) as u128) % p as u128;
        return Scalar::Mod { value: v as u64, modulus: p };
    }
    match (a, b) {
        (Scalar::Small(0, _), _) => b.clone(),
        (_, Scalar::Small(0, _)) => a.clone(),
        (Scalar::Small(n1, d1), Scalar::Small(n2, d2)) => {
            if d1 == d2 {
                normalize_i128(*n1 as i128 + *n2 as i128, *d1 as i128)
            } else {
                let n = *n1 as i128 * *d2 as i128 + *n2 as i128 * *d1 as i128;
                normalize_i128(n, *d1 as i128 * *d2 as i128)
            }
        }
        _ => Scalar::from_big(a.to_big() + b.to_big()),
    }
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if let Some(p) = common_modulus(a, b) {
        return Scalar::Mod { value: mul_mod(a.reduce_mod(p), b.reduce_mod(p), p), modulus: p };
    }
    match (a, b) {
        (Scalar::Small(0, _), _) | (_, Scalar::Small(0, _)) => Scalar::zero(),
        (Scalar::Small(1, 1), _) => b.clone(),
        (_, Scalar::Small(1, 1)) => a.clone(),
        (Scalar::Small(n1, d1), Scalar::Small(n2, d2)) => {
            normalize_i128(*n1 as i128 * *n2 as i128, *d1 as i128 * *d2 as i128)
        }
        _ => Scalar::from_big(a.to_big() * b.to_big()),
    }
}

fn neg_impl(a: &Scalar) -> Scalar {
    match a {
        Scalar::Small(n, d) => match n.checked_neg() {
            Some(m) => Scalar::Small(m, *d),
            None => Scalar::from_big(-a.to_big()),
        },
        Scalar::Big(r) => Scalar::from_big(-(**r).clone()),
        Scalar::Mod { value, modulus } => Scalar::Mod {
            value: (modulus - value) % modulus,
            modulus: *modulus,
        },
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if let Some(p) = common_modulus(self, other) {
            return self.reduce_mod(p) == other.reduce_mod(p);
        }
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => a == c && b == d,
            (Scalar::Big(x), Scalar::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    /// Rationals are ordered; prime-field elements are not.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.modulus().is_some() || other.modulus().is_some() {
            return if self == other { Some(Ordering::Equal) } else { None };
        }
        Some(self.to_big().cmp(&other.to_big()))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::int(n as i64)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, add_impl);
binop!(Mul, mul, mul_impl);
binop!(Sub, sub, |a: &Scalar, b: &Scalar| add_impl(a, &neg_impl(b)));
binop!(Div, div, |a: &Scalar, b: &Scalar| mul_impl(
    a,
    &b.inv().expect("division by zero")
));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_impl(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_impl(self)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if !rhs.is_zero() {
            *self = add_impl(self, rhs);
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if !rhs.is_zero() {
            *self = add_impl(self, &neg_impl(rhs));
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = mul_impl(self, rhs);
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{n}"),
            Scalar::Small(n, d) => write!(f, "{n}/{d}"),
            Scalar::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Mod { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl FromStr for Scalar {
    type Err = LinError;

    /// Accepts `"p"`, `"p/q"` and `"k mod p"` (p prime).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LinError::BadScalar(s.to_string());
        let t = s.trim();
        if let Some((k, p)) = t.split_once("mod") {
            let k: BigInt = k.trim().parse().map_err(|_| bad())?;
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            if !is_prime(p) {
                return Err(bad());
            }
            let v = k.mod_floor(&BigInt::from(p)).to_u64().ok_or_else(bad)?;
            return Ok(Scalar::Mod { value: v, modulus: p });
        }
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        if num.is_empty() || den.is_empty() {
            return Err(bad());
        }
        let n: BigInt = num.parse().map_err(|_| bad())?;
        let d: BigInt = den.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Scalar::from_big(BigRational::new(n, d)))
    }
}

impl Scalar {
    /// Sign of a rational scalar (`None` in GF(p)).
    pub fn signum(&self) -> Option<i32> {
        match self {
            Scalar::Small(n, _) => Some(n.signum() as i32),
            Scalar::Big(r) => Some(if r.is_negative() { -1 } else { 1 }),
            Scalar::Mod { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_syntactic() {
        let a = Scalar::frac(2, 4);
        let b = Scalar::frac(-1, -2);
        assert!(matches!(a, Scalar::Small(1, 2)));
        assert!(matches!(b, Scalar::Small(1, 2)));
        assert_eq!(a, b);
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Scalar::int(i64::MAX);
        let sum = &big + &big;
        assert!(matches!(sum, Scalar::Big(_)));
        let back = &sum - &big;
        assert!(matches!(back, Scalar::Small(n, 1) if n == i64::MAX));
        let neg_min = -Scalar::int(i64::MIN);
        assert_eq!(neg_min.to_string(), "9223372036854775808");
    }

    #[test]
    fn two_routes_agree() {
        // a/b + c/d as (ad + cb)/(bd) versus sequential additions
        let (a, b, c, d) = (3, 14, -5, 21);
        let direct = Scalar::frac(a * d + c * b, b * d);
        let seq = Scalar::frac(a, b) + Scalar::frac(c, d);
        assert_eq!(direct, seq);
    }

    #[test]
    fn parse_and_display() {
        for s in ["0", "-3", "7/2", "-12/5", "123456789012345678901234567890/11"] {
            let x: Scalar = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        let x: Scalar = "6/4".parse().unwrap();
        assert_eq!(x.to_string(), "3/2");
        let y: Scalar = "-1 mod 7".parse().unwrap();
        assert_eq!(y.to_string(), "6 mod 7");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("2 mod 8".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn prime_field_mixes_with_rationals() {
        let x = Scalar::modp(3, 7);
        let half = Scalar::frac(1, 2);
        // 1/2 = 4 mod 7
        assert_eq!(&x * &half, Scalar::modp(12, 7));
        assert_eq!(x.inv().unwrap(), Scalar::modp(5, 7));
        assert_eq!(Scalar::modp(1, 7), Scalar::one());
        assert_eq!(Scalar::modp(2, 7).pow(3), Scalar::one());
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(Scalar::zero().inv().is_none());
        assert!(Scalar::modp(7, 7).inv().is_none());
    }
}
