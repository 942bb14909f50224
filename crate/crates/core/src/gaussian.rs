//! Exact arithmetic in the Gaussian rationals `Q(i)` and the Gaussian
//! integers `Z[i]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A complex number `re + im*i` with rational parts, always kept reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn from_real(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// `self * scale` as a Gaussian integer; `scale` must clear both denominators.
    pub(crate) fn scaled_to_integer(&self, scale: &BigInt) -> GaussInt {
        let re = &self.re * BigRational::from_integer(scale.clone());
        let im = &self.im * BigRational::from_integer(scale.clone());
        debug_assert!(re.is_integer() && im.is_integer());
        GaussInt {
            re: re.to_integer(),
            im: im.to_integer(),
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re_zero = self.re.is_zero();
        if self.im.is_zero() {
            return write_rational(f, &self.re);
        }
        if !re_zero {
            write_rational(f, &self.re)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.im == BigRational::one() {
            f.write_str("i")
        } else if self.im == -BigRational::one() {
            f.write_str("-i")
        } else {
            write_rational(f, &self.im)?;
            f.write_str("i")
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Coefficient of `i`: empty or a bare sign means unit magnitude.
fn parse_imaginary(s: &str) -> Option<BigRational> {
    match s {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => parse_rational(s),
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `[+-]?a(/b)?([+-]c(/d)?i)?` and pure imaginary forms such as
    /// `i`, `-i`, `2i`, `3/2i`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid Gaussian rational `{s}`"));
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(t).map(Self::from_real).ok_or_else(bad);
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
            .map(|(idx, _)| idx)
            .next_back();
        match split {
            Some(idx) => {
                let re = parse_rational(&body[..idx]).ok_or_else(bad)?;
                let im = parse_imaginary(&body[idx..]).ok_or_else(bad)?;
                Ok(GaussianRational { re, im })
            }
            None => {
                let im = parse_imaginary(body).ok_or_else(bad)?;
                Ok(GaussianRational {
                    re: BigRational::zero(),
                    im,
                })
            }
        }
    }
}

/// A Gaussian integer `re + im*i`, the ring used by fraction-free elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn one() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    pub fn sub(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    /// Division that is known to be exact in `Z[i]`.
    pub fn div_exact(&self, rhs: &GaussInt) -> GaussInt {
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        // self * conj(rhs) / |rhs|^2
        let re = &self.re * &rhs.re + &self.im * &rhs.im;
        let im = &self.im * &rhs.re - &self.re * &rhs.im;
        debug_assert!(re.is_multiple_of(&norm) && im.is_multiple_of(&norm));
        GaussInt {
            re: re / &norm,
            im: im / norm,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_grammar_forms() {
        assert_eq!(q("0"), GaussianRational::zero());
        assert_eq!(q("i"), GaussianRational::from_ints(0, 1));
        assert_eq!(q("-i"), GaussianRational::from_ints(0, -1));
        assert_eq!(q("2i"), GaussianRational::from_ints(0, 2));
        assert_eq!(q("+5"), GaussianRational::from_ints(5, 0));
        assert_eq!(q("1+i"), GaussianRational::from_ints(1, 1));
        assert_eq!(q("-3-4i"), GaussianRational::from_ints(-3, -4));
        let z = q("3/2-1/3i");
        assert_eq!(z.re, BigRational::new(3.into(), 2.into()));
        assert_eq!(z.im, BigRational::new((-1).into(), 3.into()));
        assert_eq!(q("4/6").re, BigRational::new(2.into(), 3.into()));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "abc", "1+", "i1", "1++2i", "1/2/3", "1.5", "--1"] {
            assert!(s.parse::<GaussianRational>().is_err(), "{s}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "i", "-i", "2i", "3/2-1/3i", "-7", "1+i", "-1/2i"] {
            assert_eq!(q(s).to_string(), s);
            assert_eq!(q(&q(s).to_string()), q(s));
        }
    }

    #[test]
    fn field_operations() {
        let a = q("1+2i");
        let b = q("3-i");
        assert_eq!(&a * &b, q("5+5i"));
        assert_eq!(a.checked_div(&a).unwrap(), GaussianRational::one());
        assert_eq!(&(&a * &b).checked_div(&b).unwrap(), &a);
        assert!(a.checked_div(&GaussianRational::zero()).is_none());
    }

    #[test]
    fn gauss_int_exact_division() {
        let a = GaussInt {
            re: 1.into(),
            im: 2.into(),
        };
        let b = GaussInt {
            re: 3.into(),
            im: (-1).into(),
        };
        assert_eq!(a.mul(&b).div_exact(&b), a);
    }
}
