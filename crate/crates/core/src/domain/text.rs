//! Scalar grammar: integers `-?[0-9]+`, rationals `int('/'posint)?`, and
//! polynomials as signed sums of `c`, `c*x`, `c*x^k`, `x^k`, `x`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Elem, Polynomial, Rational, Ring};

fn parse_int(s: &str) -> Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("invalid integer `{s}`"));
    }
    s.parse().map_err(|_| format!("invalid integer `{s}`"))
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            if d.starts_with('-') {
                return Err(format!("denominator must be positive in `{s}`"));
            }
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

fn parse_term(term: &str, negative: bool) -> Result<(Rational, usize), String> {
    let (coef, power) = match term.find('x') {
        None => (parse_rational(term)?, 0),
        Some(pos) => {
            let (head, tail) = term.split_at(pos);
            let coef = if head.is_empty() {
                Rational::one()
            } else {
                let c = head
                    .strip_suffix('*')
                    .ok_or_else(|| format!("expected `*` before x in `{term}`"))?;
                parse_rational(c)?
            };
            let power = match &tail[1..] {
                "" => 1,
                exp => {
                    let k = exp
                        .strip_prefix('^')
                        .ok_or_else(|| format!("unexpected `{exp}` after x"))?;
                    if k.is_empty() || !k.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(format!("invalid exponent `{k}`"));
                    }
                    k.parse().map_err(|_| format!("exponent too large `{k}`"))?
                }
            };
            (coef, power)
        }
    };
    if coef.is_negative() && !term.starts_with('x') {
        // a sign inside the coefficient is only legal on the first term
        return Err(format!("misplaced sign in `{term}`"));
    }
    Ok((if negative { -coef } else { coef }, power))
}

fn parse_polynomial(s: &str) -> Result<Polynomial, String> {
    if s.is_empty() {
        return Err("empty scalar".into());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..=bytes.len() {
        if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    for t in terms {
        let (negative, body) = match t.as_bytes()[0] {
            b'+' => (false, &t[1..]),
            b'-' => (true, &t[1..]),
            _ => (false, t),
        };
        if body.is_empty() {
            return Err(format!("dangling sign in `{s}`"));
        }
        let (c, k) = parse_term(body, negative)?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] += c;
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

pub(super) fn parse_scalar(s: &str, ring: Ring) -> Result<Elem, String> {
    if s.chars().any(char::is_whitespace) {
        return Err(format!("whitespace inside scalar `{s}`"));
    }
    match ring {
        Ring::Z => {
            if s.contains('/') {
                return Err(format!("`{s}` is not an integer"));
            }
            parse_int(s).map(Elem::Int)
        }
        Ring::Q => {
            if s.contains('x') {
                return Err(format!("`{s}` is not a rational"));
            }
            parse_rational(s).map(Elem::Rat)
        }
        Ring::QX => parse_polynomial(s).map(Elem::Pol),
    }
}
