//! Determinantal divisors, invariant factors and elementary divisors.

use crate::determinant::det;
use crate::domain::{factor, gcd, Elem, Ring};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::subsets;
use crate::smith::smith;

/// Largest number of minors [`det_divisors_by_minors`] enumerates when the
/// smaller dimension exceeds 4.
pub const MINOR_ORACLE_LIMIT: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub rank: usize,
    /// `f_0..f_r`.
    pub det_divisors: Vec<Elem>,
    /// `q_1..q_r`.
    pub invariant_factors: Vec<Elem>,
    /// Prime powers `(p, e)` with repetition, sorted by prime then exponent.
    pub elementary_divisors: Vec<(Elem, u32)>,
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// `f_0..f_r` by brute force: `f_k` is the canonical gcd of all `k x k`
/// minors.
pub fn det_divisors_by_minors(a: &Matrix) -> Result<Vec<Elem>> {
    let (m, n) = (a.rows(), a.cols());
    let total: usize = (1..=m.min(n)).map(|k| binomial(m, k).saturating_mul(binomial(n, k))).sum();
    if m.min(n) > 4 && total > MINOR_ORACLE_LIMIT {
        return Err(Error::TooLargeForOracle(format!("{total} minors of a {m}x{n} matrix")));
    }
    let mut out = vec![a.ring().one()];
    for k in 1..=m.min(n) {
        let mut f = a.ring().zero();
        for rows in subsets(m, k) {
            for cols in subsets(n, k) {
                f = gcd(&f, &det(&a.submatrix(&rows, &cols)?)?)?;
            }
        }
        if f.is_zero() {
            break;
        }
        out.push(f.canonical());
    }
    Ok(out)
}

/// Factors each invariant factor into canonical prime powers.
pub fn elementary_divisors(invariant_factors: &[Elem]) -> Result<Vec<(Elem, u32)>> {
    let mut out = Vec::new();
    for q in invariant_factors {
        out.extend(factor(q)?.factors);
    }
    out.sort_by(|x, y| x.0.display_cmp(&y.0).then(x.1.cmp(&y.1)));
    Ok(out)
}

pub fn invariant_report(a: &Matrix) -> Result<InvariantReport> {
    let s = smith(a);
    let mut det_divisors = vec![a.ring().one()];
    for d in &s.diag {
        let next = det_divisors.last().expect("nonempty") * d;
        det_divisors.push(next);
    }
    Ok(InvariantReport {
        rank: s.rank,
        det_divisors,
        elementary_divisors: elementary_divisors(&s.diag)?,
        invariant_factors: s.diag,
    })
}

/// Rebuilds `q_1..q_r` from the elementary divisors: the exponents of each
/// prime, padded with zeros to length `r` and sorted, give its column of
/// exponents.
pub fn invariant_factors_from_elementary(ring: Ring, eds: &[(Elem, u32)], r: usize) -> Result<Vec<Elem>> {
    let mut groups: Vec<(Elem, Vec<u32>)> = Vec::new();
    for (p, e) in eds {
        if p.ring() != ring {
            return Err(Error::RingMismatch(ring, p.ring()));
        }
        let p = p.canonical();
        match groups.iter_mut().find(|(q, _)| *q == p) {
            Some((_, es)) => es.push(*e),
            None => groups.push((p, vec![*e])),
        }
    }
    let mut out = vec![ring.one(); r];
    for (p, mut es) in groups {
        if es.len() > r {
            return Err(Error::RankTooSmall { rank: r, needed: es.len() });
        }
        es.sort_unstable();
        let offset = r - es.len();
        for (k, e) in es.into_iter().enumerate() {
            out[offset + k] = &out[offset + k] * &p.pow(e);
        }
    }
    Ok(out)
}

/// Whether `b = P*a*Q` for some unimodular `P`, `Q`.
pub fn equivalent(a: &Matrix, b: &Matrix) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch(a.ring(), b.ring()));
    }
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(smith(a).diag == smith(b).diag)
}
