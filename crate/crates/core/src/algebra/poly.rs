//! Univariate integer polynomials with exact real-root isolation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::field::{rat, ratio, Field};
use super::quadratic::{exact_isqrt, QuadraticNumber};
use crate::error::Error;

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x − c`.
    pub fn linear(c: i64) -> Self {
        Self::from_i64(&[-c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a quadratic number.
    pub fn eval_quadratic(&self, x: &QuadraticNumber) -> QuadraticNumber {
        let mut acc = QuadraticNumber::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + QuadraticNumber::rational(BigRational::from_integer(c.clone()));
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval(x).sign()
    }

    /// Coefficients embedded in any field containing `Q`.
    pub fn to_field<T: Field>(&self) -> Vec<T> {
        self.coeffs.iter().map(|c| T::from_rational(&BigRational::from_integer(c.clone()))).collect()
    }

    fn to_rat(&self) -> Vec<BigRational> {
        self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect()
    }

    /// Scales a rational polynomial by a positive constant to a primitive
    /// integer polynomial; signs of values are preserved.
    pub fn from_rational_primitive(coeffs: &[BigRational]) -> IntPoly {
        let den = coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        IntPoly::new(ints).primitive_positive_scale()
    }

    /// Content, always nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the (positive) content.
    fn primitive_positive_scale(self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self;
        }
        IntPoly::new(self.coeffs.into_iter().map(|c| c / &g).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn normalized(&self) -> IntPoly {
        let p = self.clone().primitive_positive_scale();
        if p.leading().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Quotient when `divisor` divides `self` exactly over `Z`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = rat_div_rem(&self.to_rat(), &divisor.to_rat());
        if !r.is_empty() || q.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(IntPoly::new(q.into_iter().map(|c| c.to_integer()).collect()))
    }

    /// Largest `k` with `divisor^k | self`.
    pub fn multiplicity_of(&self, divisor: &IntPoly) -> usize {
        if divisor.degree() == 0 || self.is_zero() {
            return 0;
        }
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(divisor) {
            k += 1;
            cur = q;
        }
        k
    }

    /// Greatest common divisor over `Q`, returned primitive with positive
    /// leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.normalized();
        let mut b = other.normalized();
        while !b.is_zero() {
            let (_, r) = rat_div_rem(&a.to_rat(), &b.to_rat());
            a = b;
            b = IntPoly::from_rational_primitive(&r).normalized();
        }
        a.normalized()
    }

    pub fn squarefree_part(&self) -> IntPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.normalized();
        }
        let (q, _) = rat_div_rem(&self.to_rat(), &g.to_rat());
        IntPoly::from_rational_primitive(&q).normalized()
    }

    /// Yun's square-free decomposition: pairs `(f_i, i)` with
    /// `self = c · Π f_i^i` and every `f_i` square-free.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        // exact arithmetic over Q with monic gcds; rescaling would break c − b′
        let f = self.to_rat();
        let fp = rat_derivative(&f);
        let a0 = rat_gcd(&f, &fp);
        let mut b = rat_div_rem(&f, &a0).0;
        let mut c = rat_div_rem(&fp, &a0).0;
        let mut d = rat_sub(&c, &rat_derivative(&b));
        let mut i = 1;
        while b.len() > 1 {
            let a = rat_gcd(&b, &d);
            if a.len() > 1 {
                out.push((IntPoly::from_rational_primitive(&a).normalized(), i));
            }
            b = rat_div_rem(&b, &a).0;
            c = rat_div_rem(&d, &a).0;
            d = rat_sub(&c, &rat_derivative(&b));
            i += 1;
        }
        out
    }

    /// Sturm sequence of the square-free part.
    pub fn sturm_sequence(&self) -> Vec<IntPoly> {
        let p0 = self.squarefree_part();
        let mut seq = vec![p0.clone()];
        if p0.degree() == 0 {
            return seq;
        }
        seq.push(p0.derivative().normalized());
        loop {
            let n = seq.len();
            let (_, r) = rat_div_rem(&seq[n - 2].to_rat(), &seq[n - 1].to_rat());
            if r.is_empty() {
                break;
            }
            let neg: Vec<BigRational> = r.into_iter().map(|c| -c).collect();
            seq.push(IntPoly::from_rational_primitive(&neg));
        }
        seq
    }

    /// Bound `B` with every real root strictly inside `(−B, B)`.
    pub fn root_bound(&self) -> BigInt {
        let lead = self.leading().abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        BigInt::one() + max.div_ceil(&lead) + BigInt::one()
    }

    /// Reduces coefficients modulo 2.
    pub fn mod2(&self) -> Vec<u8> {
        let two = BigInt::from(2);
        let mut v: Vec<u8> = self
            .coeffs
            .iter()
            .map(|c| if c.mod_floor(&two).is_zero() { 0 } else { 1 })
            .collect();
        trim(&mut v);
        v
    }

    /// All distinct real roots, each in an isolating open interval, ascending.
    pub fn real_roots(&self) -> Vec<AlgebraicReal> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let sturm = Sturm::new(self);
        let b = BigRational::from_integer(self.root_bound());
        let mut out = Vec::new();
        isolate_rec(&sturm, -b.clone(), b, &mut out);
        out
    }

    /// Open rational interval isolating the largest real root, together
    /// with its multiplicity as a root of `self`.
    pub fn largest_root(&self) -> Result<LargestRoot, Error> {
        if self.degree() == 0 {
            return Err(Error::NoRealRoot);
        }
        let sturm = Sturm::new(self);
        let bound = self.root_bound();
        if sturm.count_above(&BigRational::from_integer(-bound.clone())) == 0 {
            return Err(Error::NoRealRoot);
        }
        // largest integer k with a root in (k, ∞)
        let (mut lo_k, mut hi_k) = (-bound.clone(), bound);
        while &hi_k - &lo_k > BigInt::one() {
            let mid: BigInt = (&lo_k + &hi_k).div_floor(&BigInt::from(2));
            if sturm.count_above(&BigRational::from_integer(mid.clone())) >= 1 {
                lo_k = mid;
            } else {
                hi_k = mid;
            }
        }
        let mut lo = BigRational::from_integer(lo_k.clone());
        let mut hi = BigRational::from_integer(lo_k + 1);
        let quarter = ratio(1, 4);
        while &hi - &lo > quarter || sturm.count_half_open(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / rat(2);
            if sturm.count_above(&mid) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let root = sturm.make_open(lo, hi);
        let multiplicity = root_multiplicity(self, &root);
        Ok(LargestRoot { root, multiplicity })
    }

    /// Number of real roots in `(lo, hi]` counted with multiplicity.
    pub fn count_roots_with_multiplicity(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.squarefree_decomposition()
            .iter()
            .map(|(f, m)| m * Sturm::new(f).count_half_open(lo, hi))
            .sum()
    }
}

fn isolate_rec(sturm: &Sturm, lo: BigRational, hi: BigRational, out: &mut Vec<AlgebraicReal>) {
    match sturm.count_half_open(&lo, &hi) {
        0 => {}
        1 => out.push(sturm.make_open(lo, hi)),
        _ => {
            let mid = (&lo + &hi) / rat(2);
            isolate_rec(sturm, lo, mid.clone(), out);
            isolate_rec(sturm, mid, hi, out);
        }
    }
}

fn root_multiplicity(p: &IntPoly, root: &AlgebraicReal) -> usize {
    match root.identify() {
        Identified::Rational(r) => {
            let lin = IntPoly::from_rational_primitive(&[-r, BigRational::one()]);
            p.multiplicity_of(&lin)
        }
        Identified::Quadratic { minimal, .. } => p.multiplicity_of(&minimal),
        Identified::Other => p
            .squarefree_decomposition()
            .into_iter()
            .find(|(f, _)| Sturm::new(f).count_open(&root.lo, &root.hi) > 0)
            .map(|(_, m)| m)
            .unwrap_or(0),
    }
}

fn rat_derivative(p: &[BigRational]) -> Vec<BigRational> {
    let mut v: Vec<BigRational> =
        p.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect();
    trim(&mut v);
    v
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut v: Vec<BigRational> = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRational::zero)
                - b.get(i).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    trim(&mut v);
    v
}

/// Monic gcd over `Q`; `gcd(0, 0)` is the constant 1.
fn rat_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rat_div_rem(&a, &b).1;
        a = b;
        b = r;
    }
    match a.last().cloned() {
        None => vec![BigRational::one()],
        Some(lead) => a.into_iter().map(|c| c / &lead).collect(),
    }
}

/// Division with remainder over `Q`; both outputs trimmed.
pub fn rat_div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    poly_div_rem(a, b)
}

/// Division with remainder for coefficient vectors over any field, lowest
/// degree first; both outputs trimmed.
pub fn poly_div_rem<T: Field>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![T::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap().clone() / &lead;
        for (i, bc) in b.iter().enumerate() {
            let v = r[shift + i].clone() - &(f.clone() * bc);
            r[shift + i] = v;
        }
        q[shift] = f;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Product of coefficient vectors over any field.
pub fn poly_mul<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + &(x.clone() * y);
        }
    }
    trim(&mut out);
    out
}

/// Cached Sturm sequence.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<IntPoly>,
}

impl Sturm {
    pub fn new(p: &IntPoly) -> Self {
        Sturm { seq: p.sturm_sequence() }
    }

    /// The square-free polynomial the sequence starts from.
    pub fn base(&self) -> &IntPoly {
        &self.seq[0]
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    fn variations_pos_inf(&self) -> usize {
        count_variations(self.seq.iter().map(|p| p.leading().sign().into_ordering()))
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count_half_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Distinct roots in `(lo, hi)`.
    pub fn count_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let c = self.count_half_open(lo, hi);
        if c > 0 && self.base().sign_at(hi) == Ordering::Equal {
            c - 1
        } else {
            c
        }
    }

    /// Distinct roots in `(x, ∞)`.
    pub fn count_above(&self, x: &BigRational) -> usize {
        self.variations_at(x) - self.variations_pos_inf()
    }

    /// Converts a half-open isolating interval `(lo, hi]` into an open one.
    fn make_open(&self, lo: BigRational, hi: BigRational) -> AlgebraicReal {
        let base = self.base().clone();
        if base.sign_at(&hi) != Ordering::Equal {
            return AlgebraicReal { poly: base, lo, hi, sturm: self.clone() };
        }
        let mut eps = (&hi - &lo) / rat(2);
        loop {
            let a = &hi - &eps;
            let b = &hi + &eps;
            if self.count_open(&a, &b) == 1 {
                return AlgebraicReal { poly: base, lo: a, hi: b, sturm: self.clone() };
            }
            eps /= rat(2);
        }
    }
}

trait IntoOrdering {
    fn into_ordering(self) -> Ordering;
}

impl IntoOrdering for num_bigint::Sign {
    fn into_ordering(self) -> Ordering {
        match self {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        }
    }
}

fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Largest real root of a polynomial together with its multiplicity.
#[derive(Clone, Debug)]
pub struct LargestRoot {
    pub root: AlgebraicReal,
    pub multiplicity: usize,
}

/// What an isolated real root turned out to be.
#[derive(Clone, Debug, PartialEq)]
pub enum Identified {
    Rational(BigRational),
    Quadratic { value: QuadraticNumber, minimal: IntPoly },
    Other,
}

/// The unique root of a square-free `poly` inside the open interval
/// `(lo, hi)`.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
    sturm: Sturm,
}

impl AlgebraicReal {
    pub fn rational(r: &BigRational) -> Self {
        let poly = IntPoly::from_rational_primitive(&[-r.clone(), BigRational::one()]).normalized();
        let sturm = Sturm::new(&poly);
        AlgebraicReal { poly, lo: r - rat(1), hi: r + rat(1), sturm }
    }

    pub fn from_quadratic(q: &QuadraticNumber) -> Self {
        let Some((tr, nm)) = q.minimal_quadratic() else {
            return Self::rational(q.a());
        };
        let poly = IntPoly::from_rational_primitive(&[nm, -tr, BigRational::one()]).normalized();
        let mut roots = poly.real_roots();
        debug_assert_eq!(roots.len(), 2);
        // the larger conjugate carries the positive √d coefficient
        if Signed::is_positive(q.b()) {
            roots.pop().unwrap()
        } else {
            roots.swap_remove(0)
        }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    /// Halves the isolating interval.
    pub fn refine(&mut self) {
        let mid = (&self.lo + &self.hi) / rat(2);
        if self.poly.sign_at(&mid) == Ordering::Equal {
            self.lo = (&self.lo + &mid) / rat(2);
            self.hi = (&mid + &self.hi) / rat(2);
        } else if self.sturm.count_half_open(&self.lo, &mid) == 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    pub fn refine_to(&mut self, width: &BigRational) {
        while &(&self.hi - &self.lo) > width {
            self.refine();
        }
    }

    pub fn approx(&self) -> f64 {
        let mut c = self.clone();
        c.refine_to(&ratio(1, 1 << 40));
        ((&c.lo + &c.hi) / rat(2)).to_float()
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn cmp_exact(&self, other: &AlgebraicReal) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        let g = a.poly.gcd(&b.poly);
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if g.degree() > 0 {
                let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
                let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
                if Sturm::new(&g).count_open(&lo, &hi) > 0 {
                    return Ordering::Equal;
                }
            }
            a.refine();
            b.refine();
        }
    }

    pub fn cmp_quadratic(&self, q: &QuadraticNumber) -> Ordering {
        self.cmp_exact(&AlgebraicReal::from_quadratic(q))
    }

    /// Decides whether the root is rational or quadratic and if so returns
    /// its exact form and minimal polynomial.
    pub fn identify(&self) -> Identified {
        let lead = self.poly.leading().abs();
        let Some(lead_u) = lead.to_u64().filter(|l| *l <= 1_000_000) else {
            return Identified::Other;
        };
        let divisors: Vec<u64> = (1..=lead_u).filter(|d| lead_u % d == 0).collect();

        let mut iso = self.clone();
        iso.refine_to(&ratio(1, 4));
        for &q in &divisors {
            let qr = BigRational::from_integer(BigInt::from(q));
            let from = (&iso.lo * &qr).ceil().to_integer();
            let to = (&iso.hi * &qr).floor().to_integer();
            let mut p = from;
            while p <= to {
                let cand = BigRational::new(p.clone(), BigInt::from(q));
                if cand > iso.lo && cand < iso.hi && self.poly.sign_at(&cand) == Ordering::Equal {
                    return Identified::Rational(cand);
                }
                p += 1;
            }
        }

        if self.poly.degree() < 2 {
            return Identified::Other;
        }
        let alpha = self.approx();
        let others: Vec<f64> = self
            .poly
            .real_roots()
            .into_iter()
            .map(|r| r.approx())
            .filter(|b| (b - alpha).abs() > 1e-9)
            .collect();
        for beta in others {
            let (s, t) = (alpha + beta, alpha * beta);
            for &c2 in &divisors {
                let c2f = c2 as f64;
                let c1 = (-s * c2f).round();
                let c0 = (t * c2f).round();
                if (c1 + s * c2f).abs() > 1e-6 || (c0 - t * c2f).abs() > 1e-6 {
                    continue;
                }
                let quad = IntPoly::new(vec![
                    BigInt::from(c0 as i64),
                    BigInt::from(c1 as i64),
                    BigInt::from(c2),
                ]);
                if let Some(value) = self.match_quadratic(&quad) {
                    return Identified::Quadratic { value, minimal: quad.normalized() };
                }
            }
        }
        Identified::Other
    }

    fn match_quadratic(&self, quad: &IntPoly) -> Option<QuadraticNumber> {
        self.poly.div_exact(quad)?;
        let c = quad.coeffs();
        let (c0, c1, c2) = (&c[0], &c[1], &c[2]);
        let disc: BigInt = c1 * c1 - BigInt::from(4) * c2 * c0;
        if !disc.is_positive() || exact_isqrt(&disc).is_some() {
            return None;
        }
        let disc_u = disc.to_u64()?;
        let two_c2 = BigRational::from_integer(BigInt::from(2) * c2);
        let a = BigRational::from_integer(-c1.clone()) / &two_c2;
        let b = BigRational::one() / &two_c2;
        let plus = QuadraticNumber::new(a.clone(), b.clone(), disc_u);
        let minus = QuadraticNumber::new(a, -b, disc_u);
        [plus, minus].into_iter().find(|v| self.contains_quadratic(v))
    }

    fn contains_quadratic(&self, v: &QuadraticNumber) -> bool {
        let lo = QuadraticNumber::rational(self.lo.clone());
        let hi = QuadraticNumber::rational(self.hi.clone());
        lo < *v && *v < hi
    }

    /// Exact value when the root is rational or quadratic.
    pub fn as_quadratic(&self) -> Option<QuadraticNumber> {
        match self.identify() {
            Identified::Rational(r) => Some(QuadraticNumber::rational(r)),
            Identified::Quadratic { value, .. } => Some(value),
            Identified::Other => None,
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            match (i, show_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{mag}*x")?,
                (1, false) => write!(f, "x")?,
                (_, true) => write!(f, "{mag}*x^{i}")?,
                (_, false) => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn display_and_arith() {
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(f.to_string(), "x^3 - 3*x + 2");
        let sq = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
        assert_eq!(sq, f);
        assert_eq!(f.derivative(), p(&[-3, 0, 3]));
    }

    #[test]
    fn largest_root_double_rational() {
        let f = p(&[2, -3, 0, 1]); // (x-1)^2 (x+2)
        let lr = f.largest_root().unwrap();
        let (lo, hi) = lr.root.interval();
        assert!(lo < &rat(1) && hi > &rat(1));
        assert_eq!(lr.multiplicity, 2);
        assert_eq!(lr.root.identify(), Identified::Rational(rat(1)));
    }

    #[test]
    fn largest_root_sqrt5_interval() {
        let f = p(&[-5, 0, 1]);
        let lr = f.largest_root().unwrap();
        let (lo, hi) = lr.root.interval();
        assert_eq!((lo.clone(), hi.clone()), (rat(2), ratio(9, 4)));
        assert_eq!(lr.multiplicity, 1);
        assert_eq!(lr.root.as_quadratic().unwrap(), QuadraticNumber::sqrt(5));
    }

    #[test]
    fn largest_root_lambda7_poly() {
        let f = p(&[-14, 3, 1]);
        let lr = f.largest_root().unwrap();
        let v = lr.root.as_quadratic().unwrap();
        assert_eq!(v, "(-3+sqrt(65))/2".parse().unwrap());
        assert!((lr.root.approx() - 2.531128874).abs() < 1e-8);
    }

    #[test]
    fn no_real_root() {
        assert!(matches!(p(&[1, 0, 1]).largest_root(), Err(Error::NoRealRoot)));
        assert!(matches!(p(&[3]).largest_root(), Err(Error::NoRealRoot)));
    }

    #[test]
    fn squarefree_decomposition_multiplicities() {
        // (x-1)^3 (x+2)^2 (x^2-5)
        let f = p(&[-1, 1]).pow(3).mul(&p(&[2, 1]).pow(2)).mul(&p(&[-5, 0, 1]));
        let dec = f.squarefree_decomposition();
        let mut got: Vec<(String, usize)> = dec.iter().map(|(g, m)| (g.to_string(), *m)).collect();
        got.sort();
        assert_eq!(
            got,
            vec![("x + 2".into(), 2), ("x - 1".into(), 3), ("x^2 - 5".into(), 1)]
        );
        assert_eq!(f.count_roots_with_multiplicity(&rat(-10), &rat(10)), 7);
        assert_eq!(f.count_roots_with_multiplicity(&rat(0), &rat(1)), 3);
    }

    #[test]
    fn real_roots_sorted() {
        let f = p(&[-1, 1]).mul(&p(&[-5, 0, 1])).mul(&p(&[3, 1]));
        let approx: Vec<f64> = f.real_roots().iter().map(|r| r.approx()).collect();
        let expect = [-3.0, -5f64.sqrt(), 1.0, 5f64.sqrt()];
        assert_eq!(approx.len(), 4);
        for (a, e) in approx.iter().zip(expect) {
            assert!((a - e).abs() < 1e-9);
        }
    }

    #[test]
    fn exact_comparisons() {
        let s5 = AlgebraicReal::from_quadratic(&QuadraticNumber::sqrt(5));
        let l7 = p(&[-14, 3, 1]).largest_root().unwrap().root;
        assert_eq!(s5.cmp_exact(&l7), Ordering::Less);
        // √5 as a root of a different polynomial compares equal
        let other = p(&[-5, 0, 1]).mul(&p(&[1, 1])).largest_root().unwrap().root;
        assert_eq!(s5.cmp_exact(&other), Ordering::Equal);
        assert_eq!(s5.cmp_quadratic(&QuadraticNumber::sqrt(5)), Ordering::Equal);
        assert_eq!(s5.cmp_quadratic(&-QuadraticNumber::sqrt(5)), Ordering::Greater);
    }

    #[test]
    fn mod2_reduction() {
        assert_eq!(p(&[2, -3, 0, 1]).mod2(), vec![0, 1, 0, 1]);
    }

    #[test]
    fn identify_non_quadratic() {
        // x^3 - 2 has an irrational cubic root
        let r = p(&[-2, 0, 0, 1]).largest_root().unwrap();
        assert_eq!(r.root.identify(), Identified::Other);
        assert_eq!(r.multiplicity, 1);
    }
}
