//! Factorization into canonical primes.
//!
//! Integers: trial division. Polynomials: square-free split (Yun), rational
//! roots, then a bounded Kronecker search for quadratic and cubic factors.
//! A leftover that exceeds the search budget is reported, not guessed.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Elem, Polynomial, Rational};
use crate::error::{Error, Result};

/// `value = unit * prod(prime^exp)` with distinct canonical primes, sorted by
/// [`Elem::display_cmp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elem,
    pub factors: Vec<(Elem, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Elem {
        self.factors
            .iter()
            .fold(self.unit.clone(), |acc, (p, e)| &acc * &p.pow(*e))
    }
}

pub fn factor(a: &Elem) -> Result<Factorization> {
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut out = match a {
        Elem::Int(v) => Factorization {
            unit: Elem::Int(if v.is_negative() { -BigInt::one() } else { BigInt::one() }),
            factors: factor_integer(v.magnitude().clone().into())
                .into_iter()
                .map(|(p, e)| (Elem::Int(p), e))
                .collect(),
        },
        Elem::Rat(_) => Factorization {
            unit: a.clone(),
            factors: Vec::new(),
        },
        Elem::Pol(p) => {
            let (lc, monic) = p.monic_split();
            Factorization {
                unit: Elem::Pol(Polynomial::constant(lc)),
                factors: factor_monic(&monic)?
                    .into_iter()
                    .map(|(p, e)| (Elem::Pol(p), e))
                    .collect(),
            }
        }
    };
    out.factors.sort_by(|x, y| x.0.display_cmp(&y.0));
    Ok(out)
}

fn factor_integer(mut n: BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factor_integer(n.abs()) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs
}

/// Square-free decomposition of a monic polynomial: `f = prod g_i^i`.
fn squarefree(f: &Polynomial) -> Vec<(Polynomial, u32)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push((a.monic_split().1, i));
        }
        i += 1;
    }
    out
}

/// Integer polynomial proportional to `f` (denominators cleared).
fn integer_coeffs(f: &Polynomial) -> Vec<BigInt> {
    let l = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    f.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// Splits off all rational roots of a square-free monic polynomial.
fn rational_roots(f: &Polynomial) -> (Vec<Rational>, Polynomial) {
    let mut roots = Vec::new();
    let mut rest = f.clone();
    if rest.coeff(0).is_zero() && !rest.is_zero() {
        roots.push(Rational::zero());
        rest = rest.div_rem(&Polynomial::x()).0;
    }
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest);
    }
    let ints = integer_coeffs(&rest);
    let (c0, cn) = (&ints[0], ints.last().unwrap());
    for p in divisors(c0) {
        for q in divisors(cn) {
            for cand in [Rational::new(p.clone(), q.clone()), Rational::new(-p.clone(), q.clone())] {
                if rest.degree().unwrap_or(0) == 0 {
                    return (roots, rest);
                }
                if roots.contains(&cand) || !rest.eval(&cand).is_zero() {
                    continue;
                }
                rest = rest.div_rem(&Polynomial::linear(cand.clone())).0;
                roots.push(cand);
            }
        }
    }
    (roots, rest)
}

/// Largest number of interpolation candidates tried per factor degree.
const KRONECKER_BUDGET: u64 = 400_000;

fn eval_int(c: &[BigInt], a: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, k| acc * a + k)
}

/// Lagrange basis polynomials for the nodes `xs`.
fn lagrange_basis(xs: &[BigInt]) -> Vec<Polynomial> {
    xs.iter()
        .enumerate()
        .map(|(i, xi)| {
            xs.iter().enumerate().filter(|&(j, _)| j != i).fold(Polynomial::one(), |acc, (_, xj)| {
                let num = Polynomial::linear(Rational::from_integer(xj.clone()));
                acc.mul(&num.scale(&Rational::from_integer(xi - xj).recip()))
            })
        })
        .collect()
}

/// A monic factor of degree `d` of the square-free monic `f`, by
/// interpolating through divisors of `f` at `d + 1` integer nodes.
/// `Err` when the candidate count exceeds the budget.
fn kronecker_factor(f: &Polynomial, d: usize) -> std::result::Result<Option<Polynomial>, ()> {
    let ints = integer_coeffs(f);
    let mut nodes: Vec<(usize, BigInt, Vec<BigInt>)> = Vec::new();
    for k in 0..41i64 {
        let a = BigInt::from(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
        let v = eval_int(&ints, &a);
        if v.is_zero() {
            continue;
        }
        let divs = divisors(&v);
        nodes.push((divs.len(), a, divs));
    }
    if nodes.len() < d + 1 {
        return Err(());
    }
    nodes.sort_by_key(|n| n.0);
    nodes.truncate(d + 1);
    let count = nodes
        .iter()
        .enumerate()
        .fold(1u64, |acc, (i, n)| acc.saturating_mul(n.0 as u64 * if i == 0 { 1 } else { 2 }));
    if count > KRONECKER_BUDGET {
        return Err(());
    }
    let xs: Vec<BigInt> = nodes.iter().map(|n| n.1.clone()).collect();
    let basis = lagrange_basis(&xs);
    let choices: Vec<Vec<BigInt>> = nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let mut c = n.2.clone();
            if i > 0 {
                c.extend(n.2.iter().map(|v| -v));
            }
            c
        })
        .collect();
    let mut idx = vec![0usize; d + 1];
    loop {
        let g = idx.iter().enumerate().fold(Polynomial::zero(), |acc, (i, &k)| {
            acc.add(&basis[i].scale(&Rational::from_integer(choices[i][k].clone())))
        });
        if g.degree() == Some(d) && g.coeffs().iter().all(|c| c.is_integer()) {
            let (_, monic) = g.monic_split();
            if f.div_rem(&monic).1.is_zero() {
                return Ok(Some(monic));
            }
        }
        let mut pos = 0;
        loop {
            if pos > d {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Irreducible factors of a square-free monic polynomial without rational
/// roots.
fn split_rootless(f: Polynomial) -> Result<Vec<Polynomial>> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    for d in 2..=n / 2 {
        match kronecker_factor(&f, d) {
            Ok(Some(g)) => {
                let rest = f.div_rem(&g).0;
                let mut out = split_rootless(g)?;
                out.extend(split_rootless(rest)?);
                return Ok(out);
            }
            Ok(None) => {}
            Err(()) => return Err(Error::FactorizationIncomplete(f.to_string())),
        }
    }
    Ok(vec![f])
}

fn factor_monic(f: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    let mut out = Vec::new();
    for (g, e) in squarefree(f) {
        let (roots, rest) = rational_roots(&g);
        out.extend(roots.into_iter().map(|r| (Polynomial::linear(r), e)));
        out.extend(split_rootless(rest)?.into_iter().map(|p| (p, e)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pol(c: &[i64]) -> Elem {
        Elem::Pol(Polynomial::from_i64_coeffs(c))
    }

    #[test]
    fn integers() {
        let f = factor(&Elem::int(44100)).unwrap();
        assert_eq!(f.unit, Elem::int(1));
        let want: Vec<_> = [2, 3, 5, 7].iter().map(|&p| (Elem::int(p), 2)).collect();
        assert_eq!(f.factors, want);
        let f = factor(&Elem::int(-12)).unwrap();
        assert_eq!(f.unit, Elem::int(-1));
        assert_eq!(f.factors, vec![(Elem::int(2), 2), (Elem::int(3), 1)]);
        assert!(factor(&Elem::int(1)).unwrap().factors.is_empty());
        assert_eq!(factor(&Elem::int(0)), Err(Error::ZeroArgument));
    }

    #[test]
    fn polynomials() {
        let f = factor(&pol(&[-1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(pol(&[1, 1]), 1), (pol(&[-1, 1]), 1)]);
        let f = factor(&pol(&[1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(pol(&[1, 0, 1]), 1)]);
        // 2(x-1)^2(x+2)
        let g = pol(&[-2, 2]);
        let target = &(&g * &pol(&[-1, 1])) * &pol(&[2, 1]);
        let f = factor(&target).unwrap();
        assert_eq!(f.unit, pol(&[2]));
        assert_eq!(f.factors, vec![(pol(&[2, 1]), 1), (pol(&[-1, 1]), 2)]);
        assert_eq!(f.expand(), target);
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2x - 1)(3x + 2) = 6x^2 + x - 2
        let f = factor(&pol(&[-2, 1, 6])).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), pol(&[-2, 1, 6]));
    }

    #[test]
    fn products_of_quadratics_and_cubics() {
        let q = &pol(&[1, 0, 1]) * &pol(&[2, 0, 1]);
        let f = factor(&q).unwrap();
        assert_eq!(f.factors, vec![(pol(&[2, 0, 1]), 1), (pol(&[1, 0, 1]), 1)]);
        let f = factor(&pol(&[1, 0, 1]).pow(2)).unwrap();
        assert_eq!(f.factors, vec![(pol(&[1, 0, 1]), 2)]);
        let c = &pol(&[-2, 0, 0, 1]) * &pol(&[1, 1, 0, 1]);
        let f = factor(&c).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), c);
        let q = &pol(&[-1, -4, 1]) * &pol(&[-13, -4, 1]);
        assert_eq!(factor(&q).unwrap().factors.len(), 2);
    }

    #[test]
    fn irreducible_quartic_and_quintic() {
        for c in [pol(&[-2, 0, 0, 0, 1]), pol(&[-1, -1, 0, 0, 0, 1])] {
            let f = factor(&c).unwrap();
            assert_eq!(f.factors, vec![(c.clone(), 1)]);
        }
    }

    #[test]
    fn cubic_without_roots_is_prime() {
        let f = factor(&pol(&[-2, 0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(pol(&[-2, 0, 0, 1]), 1)]);
    }
}
