//! Exact Gaussian rationals `a + b·i` with arbitrary-precision rational parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseScalarError;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// An element of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// `num/den` as a real scalar. Panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar::new(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            Rational::zero(),
        )
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::new(r, Rational::zero())
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar::new(
            Rational::from_integer(BigInt::from(re)),
            Rational::from_integer(BigInt::from(im)),
        )
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::gaussian(0, 1)
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² = re² + im².
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Real rational integer value, when the scalar is one and fits in `i64`.
    pub fn as_i64(&self) -> Option<i64> {
        if !self.is_real() || !self.re.is_integer() {
            return None;
        }
        i64::try_from(self.re.to_integer()).ok()
    }

    pub fn parse(text: &str) -> Result<Self, ParseScalarError> {
        parse_scalar(text)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::new(Rational::one(), Rational::zero())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::new(&self.re * &rhs.re, Rational::zero());
        }
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
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

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &Rational, out: &mut String) {
    if r.is_integer() {
        out.push_str(&r.numer().to_string());
    } else {
        out.push_str(&format!("{}/{}", r.numer(), r.denom()));
    }
}

/// Renders a scalar in the text grammar accepted by [`parse_scalar`].
pub fn format_scalar(z: &Scalar) -> String {
    let mut out = String::new();
    let imag_coeff = |im: &Rational, out: &mut String| {
        let a = im.abs();
        if !a.is_one() {
            fmt_rational(&a, out);
        }
        out.push('i');
    };
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => fmt_rational(&z.re, &mut out),
        (true, false) => {
            if z.im.is_negative() {
                out.push('-');
            }
            imag_coeff(&z.im, &mut out);
        }
        (false, false) => {
            fmt_rational(&z.re, &mut out);
            out.push(if z.im.is_negative() { '-' } else { '+' });
            imag_coeff(&z.im, &mut out);
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_scalar(self))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_scalar(self))
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn nat(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            None
        } else {
            Some(self.src[start..self.pos].parse().expect("digits"))
        }
    }

    /// NAT ("/" NAT)?
    fn ratio(&mut self, whole: &str) -> Result<Option<Rational>, ParseScalarError> {
        let Some(num) = self.nat() else {
            return Ok(None);
        };
        if self.peek() == Some('/') {
            self.bump();
            let den = self.nat().ok_or_else(|| self.error(whole))?;
            if den.is_zero() {
                return Err(ParseScalarError::ZeroDenominator {
                    token: whole.to_string(),
                });
            }
            return Ok(Some(Rational::new(num, den)));
        }
        Ok(Some(Rational::from_integer(num)))
    }

    fn error(&self, whole: &str) -> ParseScalarError {
        let rest = &self.src[self.pos..];
        ParseScalarError::Malformed {
            token: if rest.is_empty() {
                whole.to_string()
            } else {
                rest.to_string()
            },
            input: whole.to_string(),
        }
    }
}

/// Parses `SCALAR := REAL | IMAG | REAL SIGN IMAG`, e.g. `"3"`, `"-1/2"`,
/// `"i"`, `"2/3-5i"`. A leading sign is also accepted on a lone imaginary
/// part (`"-i"`), which is how [`format_scalar`] writes negative imaginaries.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseScalarError> {
    let whole = text.trim();
    let mut cur = Cursor { src: whole, pos: 0 };
    if whole.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    let neg = cur.sign().unwrap_or(false);
    let first = cur.ratio(whole)?;
    let apply = |r: Rational, neg: bool| if neg { -r } else { r };

    // Lone imaginary part: "i", "3i", "-2/3i".
    if cur.peek() == Some('i') {
        cur.bump();
        if cur.pos != whole.len() {
            return Err(cur.error(whole));
        }
        let coeff = first.unwrap_or_else(Rational::one);
        return Ok(Scalar::new(Rational::zero(), apply(coeff, neg)));
    }
    let Some(re) = first else {
        return Err(cur.error(whole));
    };
    let re = apply(re, neg);
    if cur.pos == whole.len() {
        return Ok(Scalar::new(re, Rational::zero()));
    }
    let Some(im_neg) = cur.sign() else {
        return Err(cur.error(whole));
    };
    let coeff = cur.ratio(whole)?.unwrap_or_else(Rational::one);
    if cur.peek() != Some('i') {
        return Err(cur.error(whole));
    }
    cur.bump();
    if cur.pos != whole.len() {
        return Err(cur.error(whole));
    }
    Ok(Scalar::new(re, apply(coeff, im_neg)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_scalar("0").unwrap(), Scalar::zero());
        let z = parse_scalar("-3/2+1/2i").unwrap();
        assert_eq!(z.re, q(-3, 2));
        assert_eq!(z.im, q(1, 2));
        assert_eq!(parse_scalar("7").unwrap(), Scalar::from_int(7));
        assert_eq!(parse_scalar("i").unwrap(), Scalar::i());
        assert_eq!(parse_scalar("2/3-5i").unwrap(), Scalar::new(q(2, 3), q(-5, 1)));
        assert_eq!(parse_scalar("-i").unwrap(), -Scalar::i());
        assert_eq!(parse_scalar("4/6").unwrap(), Scalar::frac(2, 3));
    }

    #[test]
    fn parse_errors_name_the_token() {
        match parse_scalar("1/0") {
            Err(ParseScalarError::ZeroDenominator { token }) => assert_eq!(token, "1/0"),
            other => panic!("unexpected {other:?}"),
        }
        match parse_scalar("3x") {
            Err(ParseScalarError::Malformed { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1+").is_err());
        assert!(parse_scalar("i2").is_err());
        assert!(parse_scalar("1/").is_err());
        assert!(parse_scalar("++1").is_err());
    }

    #[test]
    fn formatting() {
        assert_eq!(format_scalar(&Scalar::zero()), "0");
        assert_eq!(format_scalar(&Scalar::new(q(-3, 2), q(1, 2))), "-3/2+1/2i");
        assert_eq!(format_scalar(&Scalar::gaussian(0, -1)), "-i");
        assert_eq!(format_scalar(&Scalar::gaussian(2, 5)), "2+5i");
        assert_eq!(format_scalar(&Scalar::gaussian(0, 1)), "i");
    }

    #[test]
    fn inverse_and_conjugation() {
        let z = Scalar::gaussian(1, 1);
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, Scalar::one());
        assert_eq!(w, Scalar::new(q(1, 2), q(-1, 2)));
        assert!(Scalar::zero().inv().is_none());
        assert_eq!(z.conj().conj(), z);
        assert_eq!(z.norm_sqr(), q(2, 1));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-9i64..=9, 1i64..=6, -9i64..=9, 1i64..=6)
            .prop_map(|(a, b, c, d)| Scalar::new(q(a, b), q(c, d)))
    }

    proptest! {
        #[test]
        fn format_reparses(z in arb_scalar()) {
            prop_assert_eq!(parse_scalar(&format_scalar(&z)).unwrap(), z);
        }

        #[test]
        fn field_identities(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }
    }
}
