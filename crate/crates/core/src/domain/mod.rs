//! Scalars of the three Euclidean domains: the integers, the rationals and
//! polynomials over the rationals.
//!
//! Every algorithm in the crate is written against [`Elem`], a tagged union
//! of the three rings. Mixing rings is a programming error inside the crate
//! (matrices enforce a single ring), so the operator impls panic on a
//! mismatch while [`arith`] and friends return [`Error::RingMismatch`].

mod factor;
mod poly;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use factor::{factor, Factorization};
pub use poly::Polynomial;

pub type Integer = BigInt;
/// Always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Ring tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Z,
    Q,
    QX,
}

impl Ring {
    pub fn zero(self) -> Elem {
        match self {
            Ring::Z => Elem::Int(BigInt::zero()),
            Ring::Q => Elem::Rat(Rational::zero()),
            Ring::QX => Elem::Pol(Polynomial::zero()),
        }
    }

    pub fn one(self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Elem {
        match self {
            Ring::Z => Elem::Int(v.into()),
            Ring::Q => Elem::Rat(Rational::from_integer(v.into())),
            Ring::QX => Elem::Pol(Polynomial::constant(Rational::from_integer(v.into()))),
        }
    }

    /// Fraction field used for solving (`Z` lifts to `Q`).
    pub fn field(self) -> Ring {
        match self {
            Ring::Z | Ring::Q => Ring::Q,
            Ring::QX => Ring::QX,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ring::Z => "Z",
            Ring::Q => "Q",
            Ring::QX => "Q[x]",
        }
    }

    pub fn from_name(s: &str) -> Option<Ring> {
        match s {
            "Z" => Some(Ring::Z),
            "Q" => Some(Ring::Q),
            "Q[x]" => Some(Ring::QX),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A scalar tagged with its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(Integer),
    Rat(Rational),
    Pol(Polynomial),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Neg,
}

impl Elem {
    pub fn int(v: i64) -> Elem {
        Elem::Int(v.into())
    }

    pub fn rat(num: i64, den: i64) -> Elem {
        Elem::Rat(Rational::new(num.into(), den.into()))
    }

    pub fn ring(&self) -> Ring {
        match self {
            Elem::Int(_) => Ring::Z,
            Elem::Rat(_) => Ring::Q,
            Elem::Pol(_) => Ring::QX,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Elem::Int(a) => a.is_zero(),
            Elem::Rat(a) => a.is_zero(),
            Elem::Pol(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Elem::Int(a) => a.is_one(),
            Elem::Rat(a) => a.is_one(),
            Elem::Pol(a) => a.is_one(),
        }
    }

    pub fn as_poly(&self) -> Option<&Polynomial> {
        match self {
            Elem::Pol(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Elem::Int(a) => Some(Rational::from_integer(a.clone())),
            Elem::Rat(a) => Some(a.clone()),
            Elem::Pol(p) if p.is_constant() => Some(p.coeff(0)),
            Elem::Pol(_) => None,
        }
    }

    /// Embeds into a ring that contains this one (`Z -> Q -> Q[x]`).
    pub fn lift(&self, ring: Ring) -> Result<Elem> {
        match (self, ring) {
            (e, r) if e.ring() == r => Ok(e.clone()),
            (Elem::Int(a), Ring::Q) => Ok(Elem::Rat(Rational::from_integer(a.clone()))),
            (Elem::Int(a), Ring::QX) => Ok(Elem::Pol(Polynomial::constant(Rational::from_integer(a.clone())))),
            (Elem::Rat(a), Ring::QX) => Ok(Elem::Pol(Polynomial::constant(a.clone()))),
            (e, r) => Err(Error::RingMismatch(e.ring(), r)),
        }
    }

    fn check(&self, other: &Elem) -> Result<()> {
        if self.ring() == other.ring() {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring(), other.ring()))
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            Elem::Int(a) => a.abs().is_one(),
            Elem::Rat(a) => !a.is_zero(),
            Elem::Pol(p) => p.degree() == Some(0),
        }
    }

    /// Multiplicative inverse of a unit.
    pub fn unit_inverse(&self) -> Option<Elem> {
        if !self.is_unit() {
            return None;
        }
        Some(match self {
            Elem::Int(a) => Elem::Int(a.clone()),
            Elem::Rat(a) => Elem::Rat(a.recip()),
            Elem::Pol(p) => Elem::Pol(Polynomial::constant(p.coeff(0).recip())),
        })
    }

    /// `Some(self / d)` when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Elem) -> Option<Elem> {
        if d.is_zero() {
            return self.is_zero().then(|| self.clone());
        }
        let (q, r) = divmod(self, d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Elem) -> bool {
        other.exact_div(self).is_some()
    }

    /// Canonical associate (see [`canonical_associate`]).
    pub fn canonical(&self) -> Elem {
        canonical_associate(self).1
    }

    pub fn pow(&self, k: u32) -> Elem {
        let mut acc = self.ring().one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Deterministic order used when listing primes: numeric for integers,
    /// [`Polynomial::display_cmp`] for polynomials.
    pub fn display_cmp(&self, other: &Elem) -> Ordering {
        match (self, other) {
            (Elem::Int(a), Elem::Int(b)) => a.cmp(b),
            (Elem::Rat(a), Elem::Rat(b)) => a.cmp(b),
            (Elem::Pol(a), Elem::Pol(b)) => a.display_cmp(b),
            _ => self.ring().name().cmp(other.ring().name()),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $int:expr, $pol:ident) => {
        impl $tr<&Elem> for &Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                match (self, rhs) {
                    (Elem::Int(a), Elem::Int(b)) => Elem::Int($int(a, b)),
                    (Elem::Rat(a), Elem::Rat(b)) => Elem::Rat($int(a, b)),
                    (Elem::Pol(a), Elem::Pol(b)) => Elem::Pol(a.$pol(b)),
                    (a, b) => panic!("ring mismatch: {} {} {}", a.ring(), stringify!($method), b.ring()),
                }
            }
        }
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: Elem) -> Elem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Elem> for Elem {
            type Output = Elem;
            fn $method(self, rhs: &Elem) -> Elem {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a + b, add);
binop!(Sub, sub, |a, b| a - b, sub);
binop!(Mul, mul, |a, b| a * b, mul);

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        match self {
            Elem::Int(a) => Elem::Int(-a),
            Elem::Rat(a) => Elem::Rat(-a),
            Elem::Pol(a) => Elem::Pol(a.neg()),
        }
    }
}

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        -&self
    }
}

/// Checked ring arithmetic. `b` is ignored for `Neg`.
pub fn arith(a: &Elem, b: &Elem, kind: ArithKind) -> Result<Elem> {
    a.check(b)?;
    Ok(match kind {
        ArithKind::Add => a + b,
        ArithKind::Sub => a - b,
        ArithKind::Mul => a * b,
        ArithKind::Neg => -a,
    })
}

/// Euclidean division `a = b*q + r`.
///
/// Integers use `0 <= r < |b|`, rationals always give `r = 0`, polynomials
/// give `deg r < deg b`.
pub fn divmod(a: &Elem, b: &Elem) -> Result<(Elem, Elem)> {
    a.check(b)?;
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(match (a, b) {
        (Elem::Int(a), Elem::Int(b)) => {
            let r = a.mod_floor(&b.abs());
            let q = (a - &r) / b;
            (Elem::Int(q), Elem::Int(r))
        }
        (Elem::Rat(a), Elem::Rat(b)) => (Elem::Rat(a / b), Elem::Rat(Rational::zero())),
        (Elem::Pol(a), Elem::Pol(b)) => {
            let (q, r) = a.div_rem(b);
            (Elem::Pol(q), Elem::Pol(r))
        }
        _ => unreachable!(),
    })
}

/// Euclidean valuation: `|a|`, `deg a`, or `1` on the rationals.
pub fn valuation(a: &Elem) -> Result<BigUint> {
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(match a {
        Elem::Int(v) => v.magnitude().clone(),
        Elem::Rat(_) => BigUint::one(),
        Elem::Pol(p) => BigUint::from(p.degree().unwrap_or(0)),
    })
}

/// Returns `(u, c)` with `c = u*a`, `u` a unit and `c` the chosen
/// representative: nonnegative, `0`/`1`, or zero/monic.
pub fn canonical_associate(a: &Elem) -> (Elem, Elem) {
    let ring = a.ring();
    if a.is_zero() {
        return (ring.one(), a.clone());
    }
    match a {
        Elem::Int(v) if v.is_negative() => (ring.from_i64(-1), Elem::Int(-v)),
        Elem::Int(_) => (ring.one(), a.clone()),
        Elem::Rat(v) => (Elem::Rat(v.recip()), ring.one()),
        Elem::Pol(p) => {
            let (lc, monic) = p.monic_split();
            (Elem::Pol(Polynomial::constant(lc.recip())), Elem::Pol(monic))
        }
    }
}

/// Representative of `a` modulo `m` from the residue system
/// `{0..|m|-1}`, `{0}` or `{deg < deg m}`.
pub fn canonical_residue(a: &Elem, m: &Elem) -> Result<Elem> {
    a.check(m)?;
    if m.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(divmod(a, m)?.1)
}

pub fn gcd(a: &Elem, b: &Elem) -> Result<Elem> {
    a.check(b)?;
    Ok(match (a, b) {
        (Elem::Int(x), Elem::Int(y)) => Elem::Int(x.gcd(y)),
        (Elem::Rat(x), Elem::Rat(y)) => {
            if x.is_zero() && y.is_zero() {
                a.ring().zero()
            } else {
                a.ring().one()
            }
        }
        (Elem::Pol(x), Elem::Pol(y)) => Elem::Pol(x.gcd(y)),
        _ => unreachable!(),
    })
}

/// Canonical lcm; zero when either argument is zero.
pub fn lcm(a: &Elem, b: &Elem) -> Result<Elem> {
    let d = gcd(a, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(a.ring().zero());
    }
    let prod = a * b;
    let l = prod.exact_div(&d).expect("gcd divides the product");
    Ok(l.canonical())
}

/// Extended Euclid: `(d, s, t)` with `s*a + t*b = d = gcd(a, b)`.
pub fn egcd(a: &Elem, b: &Elem) -> Result<(Elem, Elem, Elem)> {
    a.check(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroArguments);
    }
    let ring = a.ring();
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (ring.one(), ring.zero());
    let (mut old_t, mut t) = (ring.zero(), ring.one());
    while !r.is_zero() {
        let (q, rem) = divmod(&old_r, &r)?;
        old_r = std::mem::replace(&mut r, rem);
        let next_s = &old_s - &(&q * &s);
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &(&q * &t);
        old_t = std::mem::replace(&mut t, next_t);
    }
    let (u, d) = canonical_associate(&old_r);
    Ok((d, &u * &old_s, &u * &old_t))
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(a) => write!(f, "{a}"),
            Elem::Rat(a) if a.is_integer() => write!(f, "{}", a.numer()),
            Elem::Rat(a) => write!(f, "{}/{}", a.numer(), a.denom()),
            Elem::Pol(p) => write!(f, "{p}"),
        }
    }
}

impl Elem {
    /// Parses one scalar of `ring` from its text form.
    pub fn parse(s: &str, ring: Ring) -> std::result::Result<Elem, String> {
        text::parse_scalar(s, ring)
    }
}
