//! Exact determinants and the determinant calculus built on them: Laplace
//! expansion, restricted sums, adjugates, Cramer's rule, Cauchy-Binet and
//! rank by minors.

use crate::domain::{Elem, Ring};
use crate::error::{Error, Result};
use crate::matrix::{Axis, Matrix, SetMode};
use crate::perm::{subsets, Permutation};

/// Largest order accepted by [`det_expansion`].
pub const EXPANSION_LIMIT: usize = 8;
/// Largest entry count accepted by [`rank_by_minors`].
pub const RANK_ORACLE_LIMIT: usize = 36;

/// A pair of increasing index sets of equal size selecting a minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSpec {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSpec {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::BadIndexSets(format!("{rows:?} / {cols:?}")));
        }
        for set in [&rows, &cols] {
            if set.contains(&0) || !set.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::BadIndexSets(format!("{set:?} is not increasing")));
            }
        }
        Ok(MinorSpec { rows, cols })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }
}

fn require_square(a: &Matrix) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(Error::NotSquare(a.rows(), a.cols()))
    }
}

fn sign_of(exponent: usize, ring: Ring) -> Elem {
    ring.from_i64(if exponent.is_multiple_of(2) { 1 } else { -1 })
}

/// The defining sum over all permutations. Only for `n <= 8`.
pub fn det_expansion(a: &Matrix) -> Result<Elem> {
    let n = require_square(a)?;
    if n > EXPANSION_LIMIT {
        return Err(Error::TooLargeForOracle(format!("{n}x{n} determinant by expansion")));
    }
    let ring = a.ring();
    let mut total = ring.zero();
    for f in Permutation::all(n) {
        let mut term = ring.from_i64(f.sign().into());
        for i in 1..=n {
            term = &term * a.entry(i, f.apply(i));
            if term.is_zero() {
                break;
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// Determinant by elimination: Bareiss fraction-free steps over `Z` and
/// `Q[x]`, ordinary pivoting over `Q`.
pub fn det(a: &Matrix) -> Result<Elem> {
    let n = require_square(a)?;
    let ring = a.ring();
    let mut m: Vec<Vec<Elem>> = a.to_rows();
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        if ring == Ring::Q {
            let inv = m[k][k].unit_inverse().expect("nonzero rational");
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let factor = &m[i][k] * &inv;
                for j in k + 1..n {
                    let t = &factor * &m[k][j];
                    m[i][j] = &m[i][j] - &t;
                }
            }
        } else {
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
    }
    let d = if ring == Ring::Q {
        (0..n).fold(ring.one(), |acc, k| acc * &m[k][k])
    } else {
        m[n - 1][n - 1].clone()
    };
    Ok(if negate { -d } else { d })
}

fn check_index_set(set: &[usize], n: usize) -> Result<()> {
    if set.is_empty() || set.len() >= n {
        return Err(Error::BadIndexSets(format!("need 1 <= |{set:?}| < {n}")));
    }
    if set.contains(&0) || set.iter().any(|&v| v > n) || !set.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::BadIndexSets(format!("{set:?} is not an increasing subset of 1..={n}")));
    }
    Ok(())
}

/// `(-1)^(ΣX+ΣY) det A[X|Y] det A(X|Y)`.
pub fn restricted_det_sum(a: &Matrix, x: &[usize], y: &[usize]) -> Result<Elem> {
    let n = require_square(a)?;
    if x.len() != y.len() {
        return Err(Error::SizeMismatch(x.len(), y.len()));
    }
    check_index_set(x, n)?;
    check_index_set(y, n)?;
    let s: usize = x.iter().chain(y).sum();
    let kept = det(&a.submatrix_sets(x, y, SetMode::KeepKeep)?)?;
    let dropped = det(&a.submatrix_sets(x, y, SetMode::DropDrop)?)?;
    Ok(sign_of(s, a.ring()) * kept * dropped)
}

/// The individual signed products of a Laplace expansion along the fixed
/// index set `x` (rows or columns), paired with the varying set, in
/// lexicographic order.
pub fn laplace_terms(a: &Matrix, x: &[usize], axis: Axis) -> Result<Vec<(Vec<usize>, Elem)>> {
    let n = require_square(a)?;
    check_index_set(x, n)?;
    subsets(n, x.len())
        .into_iter()
        .map(|y| {
            let term = match axis {
                Axis::Rows => restricted_det_sum(a, x, &y)?,
                Axis::Cols => restricted_det_sum(a, &y, x)?,
            };
            Ok((y, term))
        })
        .collect()
}

/// Laplace expansion of `det(A)` along fixed rows or columns `x`.
pub fn laplace(a: &Matrix, x: &[usize], axis: Axis) -> Result<Elem> {
    Ok(laplace_terms(a, x, axis)?
        .into_iter()
        .fold(a.ring().zero(), |acc, (_, t)| acc + t))
}

/// Transpose of the signed cofactor matrix: `B(j,k) = (-1)^(j+k) det A(k|j)`.
pub fn adjugate(a: &Matrix) -> Result<Matrix> {
    let n = require_square(a)?;
    let ring = a.ring();
    if n == 1 {
        return Ok(Matrix::identity(ring, 1));
    }
    let mut rows = Vec::with_capacity(n);
    for j in 1..=n {
        let mut row = Vec::with_capacity(n);
        for k in 1..=n {
            let minor = det(&a.submatrix_sets(&[k], &[j], SetMode::DropDrop)?)?;
            row.push(sign_of(j + k, ring) * minor);
        }
        rows.push(row);
    }
    Matrix::from_rows(ring, rows)
}

/// Inverse over the matrix's own ring; the determinant must be a unit there.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    require_square(a)?;
    let d = det(a)?;
    let inv = d.unit_inverse().ok_or_else(|| Error::NotAUnit(format!("determinant {d}")))?;
    Ok(adjugate(a)?.scale(&inv))
}

/// Solves `A x = y` by Cramer's rule. Integer input is solved over `Q`;
/// polynomial input needs a unit determinant.
pub fn cramer_solve(a: &Matrix, y: &Matrix) -> Result<Matrix> {
    let n = require_square(a)?;
    if y.rows() != n || y.cols() != 1 {
        return Err(Error::ShapeMismatch(format!("right-hand side must be {n}x1")));
    }
    let field = a.ring().field();
    let a = a.lift(field)?;
    let y = y.lift(field)?;
    let d = det(&a)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let inv = d.unit_inverse().ok_or_else(|| Error::NotAUnit(format!("determinant {d}")))?;
    let mut xs = Vec::with_capacity(n);
    for i in 1..=n {
        let mut hat = a.clone();
        for r in 1..=n {
            hat.set(r - 1, i - 1, y.entry(r, 1).clone());
        }
        xs.push(vec![det(&hat)? * &inv]);
    }
    Matrix::from_rows(field, xs)
}

/// Signed terms `det A[G|F] det B[F|H]` of the Cauchy-Binet sum, one per
/// increasing `F`. Empty when the order exceeds the inner dimension.
pub fn cauchy_binet_terms(a: &Matrix, b: &Matrix, spec: &MinorSpec) -> Result<Vec<(Vec<usize>, Elem)>> {
    if a.cols() != b.rows() {
        return Err(Error::ShapeMismatch(format!("inner dimensions {} and {}", a.cols(), b.rows())));
    }
    subsets(a.cols(), spec.order())
        .into_iter()
        .map(|f| {
            let left = det(&a.submatrix(spec.rows(), &f)?)?;
            let right = det(&b.submatrix(&f, spec.cols())?)?;
            Ok((f, left * right))
        })
        .collect()
}

/// `det((AB)[G|H])`, checked against the Cauchy-Binet sum.
pub fn minor_of_product(a: &Matrix, b: &Matrix, spec: &MinorSpec) -> Result<Elem> {
    let c = a.multiply(b)?;
    let direct = det(&c.submatrix(spec.rows(), spec.cols())?)?;
    let sum = cauchy_binet_terms(a, b, spec)?
        .into_iter()
        .fold(a.ring().zero(), |acc, (_, t)| acc + t);
    if direct != sum {
        return Err(Error::Verification(format!("Cauchy-Binet: {direct} != {sum}")));
    }
    Ok(direct)
}

/// Size of the largest nonzero minor, by enumeration.
pub fn rank_by_minors(a: &Matrix) -> Result<usize> {
    let (m, n) = (a.rows(), a.cols());
    if m * n > RANK_ORACLE_LIMIT {
        return Err(Error::TooLargeForOracle(format!("{m}x{n} rank by minors")));
    }
    for k in (1..=m.min(n)).rev() {
        for rows in subsets(m, k) {
            for cols in subsets(n, k) {
                if !det(&a.submatrix(&rows, &cols)?)?.is_zero() {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}
