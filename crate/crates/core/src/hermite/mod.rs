//! Hermite (row echelon) forms with unimodular transforms, canonical
//! normalization, and exact linear solving.

mod ops;

pub use ops::{apply_op, op_matrix, ElemOp, OpKind};
pub(crate) use ops::Tracker;

use crate::determinant::det;
use crate::domain::{canonical_associate, canonical_residue, divmod, valuation, Ring};
use crate::error::{Error, Result};
use crate::matrix::{Axis, Matrix};

/// `Q*A = H` with `Q` unimodular and `H` in row Hermite form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteResult {
    pub q: Matrix,
    pub h: Matrix,
    /// 1-based, strictly increasing.
    pub primary_cols: Vec<usize>,
    pub rank: usize,
}

/// `A*Q = H` with `Q` unimodular and `H` in column Hermite form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnHermiteResult {
    pub q: Matrix,
    pub h: Matrix,
    /// 1-based, strictly increasing.
    pub primary_rows: Vec<usize>,
    pub rank: usize,
}

/// Replaces the entries of column `j` in the listed `rows` by a gcd at row
/// `s` and zeros elsewhere. Returns `(Q, Q*A)`; rows outside the list are
/// untouched.
pub fn clear_column(a: &Matrix, j: usize, rows: &[usize], s: usize) -> Result<(Matrix, Matrix)> {
    if !(1..=a.cols()).contains(&j) {
        return Err(Error::IndexOutOfRange { index: j, bound: a.cols() });
    }
    if let Some(&bad) = rows.iter().find(|&&r| !(1..=a.rows()).contains(&r)) {
        return Err(Error::IndexOutOfRange { index: bad, bound: a.rows() });
    }
    let mut sorted = rows.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != rows.len() || !rows.contains(&s) {
        return Err(Error::BadIndexSets(format!("rows {rows:?} with chosen row {s}")));
    }
    if rows.iter().all(|&r| a.entry(r, j).is_zero()) {
        return Err(Error::AllZeroColumn);
    }
    let mut tr = Tracker::new(a).with_left(false);
    let others: Vec<usize> = rows.iter().filter(|&&r| r != s).map(|r| r - 1).collect();
    tr.clear_line(Axis::Rows, s - 1, &others, j - 1);
    Ok((tr.left.expect("tracked"), tr.work))
}

/// Echelon reduction of `tr.work` along `axis`; returns the 0-based primary
/// positions. With `canonical`, primary entries become canonical associates
/// and the entries before them canonical residues.
pub(crate) fn echelon(tr: &mut Tracker, axis: Axis, canonical: bool) -> Vec<usize> {
    let (lines, positions) = tr.extent(axis);
    let mut pivots = Vec::new();
    for pos in 0..positions {
        let r = pivots.len();
        if r == lines {
            break;
        }
        let best = (r..lines)
            .filter(|&l| !tr.get(axis, l, pos).is_zero())
            .min_by_key(|&l| valuation(tr.get(axis, l, pos)).expect("nonzero"));
        let Some(best) = best else { continue };
        if best != r {
            tr.apply(ElemOp::swap(axis, r + 1, best + 1));
        }
        let others: Vec<usize> = (r + 1..lines).collect();
        tr.clear_line(axis, r, &others, pos);
        pivots.push(pos);
    }
    if canonical {
        for (t, &pos) in pivots.iter().enumerate() {
            let (u, _) = canonical_associate(tr.get(axis, t, pos));
            if !u.is_one() {
                tr.apply(ElemOp::scale(axis, t + 1, u));
            }
        }
        for (t, &pos) in pivots.iter().enumerate() {
            let p = tr.get(axis, t, pos).clone();
            for i in 0..t {
                let (q, _) = divmod(tr.get(axis, i, pos), &p).expect("nonzero primary entry");
                if !q.is_zero() {
                    tr.apply(ElemOp::add_mul(axis, i + 1, -q, t + 1));
                }
            }
        }
    }
    pivots
}

fn row_hermite(a: &Matrix, canonical: bool) -> HermiteResult {
    let mut tr = Tracker::new(a).with_left(false);
    let pivots = echelon(&mut tr, Axis::Rows, canonical);
    HermiteResult {
        q: tr.left.expect("tracked"),
        h: tr.work,
        rank: pivots.len(),
        primary_cols: pivots.into_iter().map(|p| p + 1).collect(),
    }
}

/// Some row Hermite form of `a`, without normalization.
pub fn hermite_form(a: &Matrix) -> HermiteResult {
    row_hermite(a, false)
}

/// The unique Hermite canonical form of `a` with a witness `Q`.
pub fn hermite_canonical(a: &Matrix) -> HermiteResult {
    row_hermite(a, true)
}

/// The column version: `A*Q = H`, dual to [`hermite_canonical`] under
/// transposition.
pub fn column_hermite_canonical(a: &Matrix) -> ColumnHermiteResult {
    let mut tr = Tracker::new(a).with_right(false);
    let pivots = echelon(&mut tr, Axis::Cols, true);
    ColumnHermiteResult {
        q: tr.right.expect("tracked"),
        h: tr.work,
        rank: pivots.len(),
        primary_rows: pivots.into_iter().map(|p| p + 1).collect(),
    }
}

pub fn rank(a: &Matrix) -> usize {
    hermite_form(a).rank
}

/// Checks the canonical row Hermite shape; returns `(rank, primary_cols)`
/// or the first violated condition.
pub fn is_hermite_canonical(h: &Matrix) -> std::result::Result<(usize, Vec<usize>), String> {
    let mut primary = Vec::new();
    let mut seen_zero = false;
    for i in 0..h.rows() {
        match (0..h.cols()).find(|&j| !h.at(i, j).is_zero()) {
            None => seen_zero = true,
            Some(j) => {
                if seen_zero {
                    return Err(format!("nonzero row {} below a zero row", i + 1));
                }
                if primary.last().is_some_and(|&p| p >= j) {
                    return Err(format!("primary column of row {} does not increase", i + 1));
                }
                primary.push(j);
            }
        }
    }
    for (t, &j) in primary.iter().enumerate() {
        let p = h.at(t, j);
        if canonical_associate(p).1 != *p {
            return Err(format!("primary entry {p} at ({}, {}) is not a canonical associate", t + 1, j + 1));
        }
        for i in 0..t {
            let e = h.at(i, j);
            if canonical_residue(e, p).expect("nonzero modulus") != *e {
                return Err(format!("entry {e} at ({}, {}) is not a residue modulo {p}", i + 1, j + 1));
            }
        }
    }
    Ok((primary.len(), primary.into_iter().map(|j| j + 1).collect()))
}

/// Solution of `A*x = y` over the fraction field: a particular solution and
/// a basis of the null space, or `None` if inconsistent.
pub fn solve(a: &Matrix, y: &Matrix) -> Result<Option<(Matrix, Vec<Matrix>)>> {
    if a.ring() != y.ring() {
        return Err(Error::RingMismatch(a.ring(), y.ring()));
    }
    if y.cols() != 1 || y.rows() != a.rows() {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side {}x{} for a {}x{} system",
            y.rows(),
            y.cols(),
            a.rows(),
            a.cols()
        )));
    }
    if a.ring() == Ring::QX {
        return Err(Error::UnsupportedRing(Ring::QX));
    }
    let n = a.cols();
    let aug = a.lift(Ring::Q)?.hstack(&y.lift(Ring::Q)?)?;
    let res = hermite_canonical(&aug);
    let pivots: Vec<usize> = res.primary_cols.iter().map(|j| j - 1).collect();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let h = &res.h;
    let mut x = Matrix::zeros(Ring::Q, n, 1);
    for (t, &j) in pivots.iter().enumerate() {
        x.set(j, 0, h.at(t, n).clone());
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|f| !pivots.contains(f)) {
        let mut v = Matrix::zeros(Ring::Q, n, 1);
        v.set(f, 0, Ring::Q.one());
        for (t, &j) in pivots.iter().enumerate() {
            v.set(j, 0, -h.at(t, f));
        }
        basis.push(v);
    }
    Ok(Some((x, basis)))
}

/// Writes a unimodular matrix as a word of elementary row operations:
/// applying them in order to the identity reproduces `u`.
pub fn decompose_unit(u: &Matrix) -> Result<Vec<ElemOp>> {
    if !u.is_square() {
        return Err(Error::NotSquare(u.rows(), u.cols()));
    }
    let d = det(u)?;
    if !d.is_unit() {
        return Err(Error::NotAUnit(d.to_string()));
    }
    let mut tr = Tracker::new(u).with_log();
    echelon(&mut tr, Axis::Rows, true);
    debug_assert!(tr.work.is_identity());
    Ok(tr.log.expect("logging").iter().rev().map(ElemOp::inverse).collect())
}

/// Whether `p` has the block shape `[[I_r, *], [0, U]]` with `U` unimodular,
/// the shape of every unit fixing a canonical Hermite form of rank `r`.
pub fn stabilizer_shape(p: &Matrix, r: usize) -> bool {
    let n = p.rows();
    if !p.is_square() || r > n {
        return false;
    }
    let one_zero = (0..n).all(|i| {
        (0..r).all(|j| {
            let e = p.at(i, j);
            if i == j { e.is_one() } else { e.is_zero() }
        })
    });
    if !one_zero {
        return false;
    }
    if r == n {
        return true;
    }
    let tail: Vec<usize> = (r + 1..=n).collect();
    p.submatrix(&tail, &tail)
        .and_then(|b| det(&b))
        .is_ok_and(|d| d.is_unit())
}
