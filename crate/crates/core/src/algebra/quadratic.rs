//! Elements `a + b·√d` of a real quadratic field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::field::{fmt_rational, rat, Field};
use crate::error::Error;

/// Exact element of `Q(√d)`.
///
/// Canonical form: `d` is square-free, and `b = 0 ⇔ d = 0`. Two values are
/// equal iff their components are equal. Mixing two distinct nonzero
/// radicands in one operation panics; every matrix in this crate lives in a
/// single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: BigRational,
    b: BigRational,
    d: u64,
}

/// Splits `n = f²·m` with `m` square-free.
fn square_free_split(n: u64) -> (u64, u64) {
    if n == 0 {
        return (1, 0);
    }
    let mut m = n;
    let mut f = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        while m % (p * p) == 0 {
            m /= p * p;
            f *= p;
        }
        p += 1;
    }
    (f, m)
}

impl QuadraticNumber {
    /// Builds `a + b·√d`, normalising the radicand.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Self {
        let (f, m) = square_free_split(d);
        if m == 0 || b.is_zero() {
            return Self::rational(a);
        }
        let b = b * BigRational::from_integer(BigInt::from(f));
        if m == 1 {
            return Self::rational(a + b);
        }
        QuadraticNumber { a, b, d: m }
    }

    pub fn rational(a: BigRational) -> Self {
        QuadraticNumber { a, b: BigRational::zero(), d: 0 }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(rat(n))
    }

    /// `√n`, which is rational when `n` is a perfect square.
    pub fn sqrt(n: u64) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), n)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    /// Square-free radicand, or 0 for a rational value.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conjugate(&self) -> Self {
        QuadraticNumber { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// Field norm `a² − b²d`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * d_rat(self.d)
    }

    /// Field trace `2a`.
    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    /// Exact sign by comparing `a²` with `b²d`.
    pub fn signum(&self) -> Ordering {
        let sa = rsign(&self.a);
        let sb = rsign(&self.b);
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * d_rat(self.d);
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = ToPrimitive::to_f64(&self.a).unwrap_or(f64::NAN);
        let b = ToPrimitive::to_f64(&self.b).unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }

    /// Polynomial `x² − trace·x + norm` with integer coefficients when this
    /// is an algebraic integer; `None` for rationals.
    pub fn minimal_quadratic(&self) -> Option<(BigRational, BigRational)> {
        (!self.is_rational()).then(|| (self.trace(), self.norm()))
    }

    fn field_of(x: &Self, y: &Self) -> u64 {
        match (x.d, y.d) {
            (0, d) | (d, 0) => d,
            (d, e) if d == e => d,
            (d, e) => panic!("mixed quadratic fields Q(sqrt {d}) and Q(sqrt {e})"),
        }
    }

    fn from_parts(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            Self::rational(a)
        } else {
            QuadraticNumber { a, b, d }
        }
    }
}

fn d_rat(d: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(d))
}

fn rsign(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if Signed::is_positive(r) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl Zero for QuadraticNumber {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadraticNumber {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
}

impl<'a> Add<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &'a QuadraticNumber) -> QuadraticNumber {
        let d = QuadraticNumber::field_of(self, rhs);
        QuadraticNumber::from_parts(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &'a QuadraticNumber) -> QuadraticNumber {
        let d = QuadraticNumber::field_of(self, rhs);
        QuadraticNumber::from_parts(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &'a QuadraticNumber) -> QuadraticNumber {
        if self.d == 0 && rhs.d == 0 {
            return QuadraticNumber::rational(&self.a * &rhs.a);
        }
        let d = QuadraticNumber::field_of(self, rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * d_rat(d);
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadraticNumber::from_parts(a, b, d)
    }
}

impl<'a> Div<&'a QuadraticNumber> for &'a QuadraticNumber {
    type Output = QuadraticNumber;
    fn div(self, rhs: &'a QuadraticNumber) -> QuadraticNumber {
        assert!(!rhs.is_zero(), "division by zero in quadratic field");
        if rhs.d == 0 {
            return QuadraticNumber::from_parts(&self.a / &rhs.a, &self.b / &rhs.a, self.d);
        }
        let n = rhs.norm();
        let num = self * &rhs.conjugate();
        QuadraticNumber::from_parts(&num.a / &n, &num.b / &n, num.d)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, rhs: QuadraticNumber) -> QuadraticNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, rhs: &'a QuadraticNumber) -> QuadraticNumber {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -self.clone()
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Field for QuadraticNumber {
    fn sign(&self) -> Ordering {
        self.signum()
    }

    fn from_i64(v: i64) -> Self {
        Self::int(v)
    }

    fn from_rational(r: &BigRational) -> Self {
        Self::rational(r.clone())
    }

    fn to_float(&self) -> f64 {
        QuadraticNumber::to_f64(self)
    }
}

impl From<BigRational> for QuadraticNumber {
    fn from(r: BigRational) -> Self {
        Self::rational(r)
    }
}

impl From<i64> for QuadraticNumber {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let coeff = if self.b.is_one() {
            String::new()
        } else {
            format!("{}*", fmt_rational(&self.b.abs()))
        };
        let coeff = if (-self.b.clone()).is_one() { String::new() } else { coeff };
        let op = if Signed::is_negative(&self.b) { "-" } else { "+" };
        if self.a.is_zero() {
            let lead = if Signed::is_negative(&self.b) { "-" } else { "" };
            write!(f, "({lead}{coeff}sqrt({}))", self.d)
        } else {
            write!(f, "({} {op} {coeff}sqrt({}))", fmt_rational(&self.a), self.d)
        }
    }
}

impl Serialize for QuadraticNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Square root of a nonnegative integer, if it is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

// Tiny recursive-descent evaluator for expressions such as
// "(1+sqrt(5))/2", "7/4", "-3/2 + 1/2*sqrt(65)".
struct ExprParser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl<'s> ExprParser<'s> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QuadraticNumber, Error> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QuadraticNumber, Error> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.unary()?;
            } else if self.eat(b'/') {
                let rhs = self.unary()?;
                if rhs.is_zero() {
                    return Err(self.err("division by zero"));
                }
                acc = acc / rhs;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<QuadraticNumber, Error> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<QuadraticNumber, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(QuadraticNumber::rational(BigRational::from_integer(n)))
            }
            Some(b's') => {
                if !self.src[self.pos..].starts_with(b"sqrt") {
                    return Err(self.err("unknown identifier"));
                }
                self.pos += 4;
                if !self.eat(b'(') {
                    return Err(self.err("expected '(' after sqrt"));
                }
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                let r = inner
                    .as_rational()
                    .filter(|r| r.is_integer() && !Signed::is_negative(*r))
                    .ok_or_else(|| self.err("sqrt takes a nonnegative integer"))?;
                let n = r.numer().to_u64().ok_or_else(|| self.err("radicand too large"))?;
                Ok(QuadraticNumber::sqrt(n))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

impl FromStr for QuadraticNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = ExprParser { src: s.as_bytes(), pos: 0 };
        let v = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::ratio;

    fn q(a: BigRational, b: BigRational, d: u64) -> QuadraticNumber {
        QuadraticNumber::new(a, b, d)
    }

    #[test]
    fn sign_examples() {
        assert_eq!(q(rat(0), rat(1), 5).signum(), Ordering::Greater);
        assert_eq!(q(rat(2), rat(-1), 5).signum(), Ordering::Less);
        assert_eq!(q(ratio(7, 3), rat(-1), 5).signum(), Ordering::Greater);
    }

    #[test]
    fn canonical_form() {
        assert_eq!(QuadraticNumber::sqrt(4), QuadraticNumber::int(2));
        assert_eq!(QuadraticNumber::sqrt(12), q(rat(0), rat(2), 3));
        assert!(QuadraticNumber::sqrt(0).is_rational());
        let x = QuadraticNumber::sqrt(5) - QuadraticNumber::sqrt(5);
        assert!(x.is_rational() && x.is_zero());
    }

    #[test]
    fn arithmetic_in_q_sqrt5() {
        let phi = "(1+sqrt(5))/2".parse::<QuadraticNumber>().unwrap();
        // φ² = φ + 1
        assert_eq!(&phi * &phi, &phi + &QuadraticNumber::int(1));
        let inv = QuadraticNumber::int(1) / phi.clone();
        assert_eq!(inv, &phi - &QuadraticNumber::int(1));
        assert_eq!(phi.norm(), rat(-1));
    }

    #[test]
    fn parse_and_display() {
        let l7: QuadraticNumber = "(-3+sqrt(65))/2".parse().unwrap();
        assert_eq!(l7.to_string(), "(-3/2 + 1/2*sqrt(65))");
        assert!((l7.to_f64() - 2.5311288).abs() < 1e-6);
        assert_eq!("7/4".parse::<QuadraticNumber>().unwrap().to_string(), "7/4");
        assert_eq!("-sqrt(13)".parse::<QuadraticNumber>().unwrap().to_string(), "(-sqrt(13))");
        assert!("sqrt(-2)".parse::<QuadraticNumber>().is_err());
        assert!("2 +".parse::<QuadraticNumber>().is_err());
    }

    #[test]
    #[should_panic(expected = "mixed quadratic fields")]
    fn mixing_fields_panics() {
        let _ = QuadraticNumber::sqrt(2) + QuadraticNumber::sqrt(3);
    }

    #[test]
    fn sign_is_multiplicative_on_grid() {
        let mut vals = Vec::new();
        for a in -3..=3 {
            for b in -2..=2 {
                vals.push(q(ratio(a, 2), rat(b), 7));
            }
        }
        for x in &vals {
            for y in &vals {
                let lhs = x.signum() as i32 * y.signum() as i32;
                assert_eq!(lhs, (x * y).signum() as i32, "{x} * {y}");
            }
        }
    }
}
