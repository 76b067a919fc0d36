//! Exact Gaussian-rational arithmetic: the only number type in the kernel.
//!
//! A [`Scalar`] is `p/q + (r/s)i` with arbitrary-precision integers, always
//! reduced and with positive denominators. The textual form is bit-exact:
//! `p`, `p/q`, `p/q+r/si`, `p/q-r/si` (no spaces, omitted denominator means 1).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid scalar at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A Gaussian rational. Immutable once built; all operations return new values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }

    /// Real rational `p/q`. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// `p/q + (r/s)i`. Panics if a denominator is zero.
    pub fn gaussian(p: i64, q: i64, r: i64, s: i64) -> Self {
        assert!(q != 0 && s != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::new(BigInt::from(r), BigInt::from(s)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Real and strictly positive.
    pub fn is_positive_real(&self) -> bool {
        self.im.is_zero() && self.re.is_positive()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = rhs.norm_sqr();
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &n;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &n;
        Ok(Scalar::new(re, im))
    }

    pub fn checked_inv(&self) -> Result<Scalar, ScalarError> {
        Scalar::one().checked_div(self)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn checked_pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        let base = if k < 0 {
            self.checked_inv()?
        } else {
            self.clone()
        };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

macro_rules! forward_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_binop!(Add::add, Sub::sub, Mul::mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let (re, mut pos) = parse_rational(bytes, 0, true)?;
        if pos == bytes.len() {
            return Ok(Scalar::new(re, BigRational::zero()));
        }
        let sign = match bytes[pos] {
            b'+' => BigRational::one(),
            b'-' => -BigRational::one(),
            c => {
                return Err(ScalarError::Parse {
                    pos,
                    msg: format!("expected '+', '-' or end of input, found {:?}", c as char),
                })
            }
        };
        pos += 1;
        let (imag, pos2) = parse_rational(bytes, pos, false)?;
        if pos2 >= bytes.len() || bytes[pos2] != b'i' {
            return Err(ScalarError::Parse {
                pos: pos2,
                msg: "expected 'i'".into(),
            });
        }
        if pos2 + 1 != bytes.len() {
            return Err(ScalarError::Parse {
                pos: pos2 + 1,
                msg: "trailing input after imaginary part".into(),
            });
        }
        Ok(Scalar::new(re, sign * imag))
    }
}

/// Parses `p` or `p/q` starting at `pos`. A leading '-' is only allowed when
/// `allow_sign` (the imaginary magnitude carries its sign in the separator).
fn parse_rational(
    bytes: &[u8],
    mut pos: usize,
    allow_sign: bool,
) -> Result<(BigRational, usize), ScalarError> {
    let start = pos;
    let negative = if pos < bytes.len() && bytes[pos] == b'-' {
        if !allow_sign {
            return Err(ScalarError::Parse {
                pos,
                msg: "unexpected sign".into(),
            });
        }
        pos += 1;
        true
    } else {
        false
    };
    let (num, next) = parse_digits(bytes, pos)?;
    pos = next;
    let den = if pos < bytes.len() && bytes[pos] == b'/' {
        let (d, next) = parse_digits(bytes, pos + 1)?;
        pos = next;
        if d.is_zero() {
            return Err(ScalarError::Parse {
                pos: start,
                msg: "zero denominator".into(),
            });
        }
        d
    } else {
        BigInt::one()
    };
    let num = if negative { -num } else { num };
    Ok((BigRational::new(num, den), pos))
}

fn parse_digits(bytes: &[u8], pos: usize) -> Result<(BigInt, usize), ScalarError> {
    let mut end = pos;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == pos {
        return Err(ScalarError::Parse {
            pos,
            msg: "expected digits".into(),
        });
    }
    let text = std::str::from_utf8(&bytes[pos..end]).expect("digits are ascii");
    Ok((BigInt::from_str(text).expect("digit run parses"), end))
}
