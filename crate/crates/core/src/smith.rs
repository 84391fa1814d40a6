//! Two-sided reduction to diagonal form and the Smith canonical form.

use crate::domain::{canonical_associate, egcd, valuation, Elem};
use crate::error::{Error, Result};
use crate::hermite::{ElemOp, Tracker};
use crate::matrix::{Axis, Matrix};

/// `P*A*Q = D` with `P`, `Q` unimodular and `D` diagonal. For [`smith`] the
/// diagonal is a divisibility chain of canonical associates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithResult {
    pub p: Matrix,
    pub q: Matrix,
    pub d: Matrix,
    /// The nonzero diagonal entries `d_1..d_r`.
    pub diag: Vec<Elem>,
    pub rank: usize,
    /// Exact inverses of `p` and `q`, when requested.
    pub p_inv: Option<Matrix>,
    pub q_inv: Option<Matrix>,
}

fn tracker(a: &Matrix, inverses: bool) -> Tracker {
    Tracker::new(a).with_left(inverses).with_right(inverses)
}

fn diag_entry(tr: &Tracker, i: usize) -> &Elem {
    tr.work.at(i, i)
}

fn normalize_entry(tr: &mut Tracker, i: usize) {
    let (u, _) = canonical_associate(diag_entry(tr, i));
    if !u.is_one() {
        tr.apply(ElemOp::scale(Axis::Rows, i + 1, u));
    }
}

/// Pivot-wise diagonalization. Returns the rank; the leading diagonal
/// entries are nonzero canonical associates.
fn diagonalize_in(tr: &mut Tracker) -> usize {
    let (m, n) = (tr.work.rows(), tr.work.cols());
    let mut t = 0;
    while t < m.min(n) {
        let best = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !tr.work.at(i, j).is_zero())
            .min_by_key(|&(i, j)| valuation(tr.work.at(i, j)).expect("nonzero"));
        let Some((i, j)) = best else { break };
        if i != t {
            tr.apply(ElemOp::swap(Axis::Rows, t + 1, i + 1));
        }
        if j != t {
            tr.apply(ElemOp::swap(Axis::Cols, t + 1, j + 1));
        }
        let below: Vec<usize> = (t + 1..m).collect();
        let right: Vec<usize> = (t + 1..n).collect();
        loop {
            let before = valuation(diag_entry(tr, t)).expect("nonzero pivot");
            tr.clear_line(Axis::Rows, t, &below, t);
            tr.clear_line(Axis::Cols, t, &right, t);
            if below.iter().all(|&i| tr.work.at(i, t).is_zero()) {
                break;
            }
            let after = valuation(diag_entry(tr, t)).expect("nonzero pivot");
            assert!(after < before, "pivot valuation must strictly decrease");
        }
        normalize_entry(tr, t);
        t += 1;
    }
    t
}

/// Row and column operations only: `(P, Q, D)` with `P*A*Q = D` diagonal.
pub fn diagonalize(a: &Matrix) -> (Matrix, Matrix, Matrix) {
    let mut tr = tracker(a, false);
    diagonalize_in(&mut tr);
    (tr.left.expect("tracked"), tr.right.expect("tracked"), tr.work)
}

/// Determinant-one `P2`, `Q2` with `P2*diag(a, b)*Q2 = diag(g, a*b/g)`,
/// `g` the canonical gcd.
fn block_2x2(a: &Elem, b: &Elem) -> ([[Elem; 2]; 2], [[Elem; 2]; 2], Elem, Elem) {
    let (g, s, t) = egcd(a, b).expect("nonzero arguments");
    let a_g = a.exact_div(&g).expect("gcd divides");
    let b_g = b.exact_div(&g).expect("gcd divides");
    let one = a.ring().one();
    let p = [[s.clone(), t.clone()], [-&b_g, a_g.clone()]];
    let q = [[one.clone(), -&(&t * &b_g)], [one, &s * &a_g]];
    let l = a * &b_g;
    (p, q, g, l)
}

fn to_matrix(c: [[Elem; 2]; 2]) -> Matrix {
    let ring = c[0][0].ring();
    let [r0, r1] = c;
    Matrix::from_rows(ring, vec![r0.to_vec(), r1.to_vec()]).expect("2x2")
}

/// Unimodular `(P2, Q2, gcd, lcm)` with `P2*diag(d1, d2)*Q2 = diag(gcd, lcm)`,
/// both canonical.
pub fn smith_2x2(d1: &Elem, d2: &Elem) -> Result<(Matrix, Matrix, Elem, Elem)> {
    if d1.ring() != d2.ring() {
        return Err(Error::RingMismatch(d1.ring(), d2.ring()));
    }
    if d1.is_zero() || d2.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let (mut p, q, g, l) = block_2x2(d1, d2);
    let (u, l) = canonical_associate(&l);
    p[1] = [&u * &p[1][0], &u * &p[1][1]];
    Ok((to_matrix(p), to_matrix(q), g, l))
}

/// Merges `d_i` and `d_j` into `(gcd, lcm)` in place.
fn combine(tr: &mut Tracker, i: usize, j: usize) {
    let (a, b) = (diag_entry(tr, i).clone(), diag_entry(tr, j).clone());
    let before = valuation(&a).expect("nonzero");
    let (p, q, _, _) = block_2x2(&a, &b);
    tr.block(Axis::Rows, i, j, p);
    tr.block(Axis::Cols, i, j, q);
    debug_assert!(tr.work.at(i, j).is_zero() && tr.work.at(j, i).is_zero());
    normalize_entry(tr, j);
    let after = valuation(diag_entry(tr, i)).expect("nonzero");
    assert!(after < before, "combining must strictly decrease the valuation of d_{}", i + 1);
}

fn chain(tr: &mut Tracker, r: usize, first_only: bool) {
    let upto = if first_only { r.min(1) } else { r };
    for i in 0..upto {
        for j in i + 1..r {
            if !diag_entry(tr, i).divides(diag_entry(tr, j)) {
                combine(tr, i, j);
            }
        }
    }
}

fn finish(tr: Tracker, r: usize) -> SmithResult {
    let diag = (0..r).map(|i| diag_entry(&tr, i).clone()).collect();
    SmithResult {
        p: tr.left.expect("tracked"),
        q: tr.right.expect("tracked"),
        d: tr.work,
        diag,
        rank: r,
        p_inv: tr.left_inv,
        q_inv: tr.right_inv,
    }
}

/// Diagonal form in which `d_1` divides every other diagonal entry.
pub fn weak_smith(a: &Matrix) -> SmithResult {
    let mut tr = tracker(a, false);
    let r = diagonalize_in(&mut tr);
    chain(&mut tr, r, true);
    finish(tr, r)
}

fn smith_impl(a: &Matrix, inverses: bool) -> SmithResult {
    let mut tr = tracker(a, inverses);
    let r = diagonalize_in(&mut tr);
    chain(&mut tr, r, false);
    finish(tr, r)
}

/// The Smith canonical form with witnesses.
pub fn smith(a: &Matrix) -> SmithResult {
    smith_impl(a, false)
}

/// As [`smith`], also returning `P^-1` and `Q^-1`.
pub fn smith_with_inverses(a: &Matrix) -> SmithResult {
    smith_impl(a, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::determinant::det;
    use crate::domain::{Polynomial, Ring};

    fn z(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(Ring::Z, rows)
    }

    fn check(a: &Matrix, res: &SmithResult) {
        assert_eq!(res.p.multiply(a).unwrap().multiply(&res.q).unwrap(), res.d);
        assert!(det(&res.p).unwrap().is_unit());
        assert!(det(&res.q).unwrap().is_unit());
        assert!(res.d.is_diagonal());
        for w in res.diag.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
        if let (Some(pi), Some(qi)) = (&res.p_inv, &res.q_inv) {
            assert!(res.p.multiply(pi).unwrap().is_identity());
            assert!(res.q.multiply(qi).unwrap().is_identity());
        }
    }

    #[test]
    fn small_integer_forms() {
        let a = z(&[&[2, 4], &[6, 8]]);
        let res = smith_with_inverses(&a);
        check(&a, &res);
        assert_eq!(res.diag, vec![Elem::int(2), Elem::int(4)]);
        let a = z(&[&[18, 0], &[0, 12]]);
        let res = smith(&a);
        check(&a, &res);
        assert_eq!(res.diag, vec![Elem::int(6), Elem::int(36)]);
        let a = z(&[&[3, 0, 0], &[0, 5, 0], &[0, 0, 7]]);
        assert_eq!(smith(&a).diag, vec![Elem::int(1), Elem::int(1), Elem::int(105)]);
    }

    #[test]
    fn zero_and_field() {
        let zero = Matrix::zeros(Ring::Z, 2, 3);
        let res = smith(&zero);
        assert_eq!((res.rank, res.diag.len()), (0, 0));
        assert!(res.p.is_identity() && res.q.is_identity());
        let a = Matrix::from_i64(Ring::Q, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (p, q, d) = diagonalize(&a);
        assert_eq!(p.multiply(&a).unwrap().multiply(&q).unwrap(), d);
        assert_eq!(d, Matrix::diagonal(Ring::Q, 3, 3, &[Ring::Q.one(), Ring::Q.one()]));
    }

    #[test]
    fn two_by_two() {
        let (p, q, g, l) = smith_2x2(&Elem::int(18), &Elem::int(12)).unwrap();
        assert_eq!((g.clone(), l.clone()), (Elem::int(6), Elem::int(36)));
        let d = z(&[&[18, 0], &[0, 12]]);
        assert_eq!(p.multiply(&d).unwrap().multiply(&q).unwrap(), Matrix::diagonal(Ring::Z, 2, 2, &[g, l]));
        let x = |c: &[i64]| Elem::Pol(Polynomial::from_i64_coeffs(c));
        let (_, _, g, l) = smith_2x2(&x(&[-1, 1]), &x(&[1, 1])).unwrap();
        assert_eq!((g, l), (x(&[1]), x(&[-1, 0, 1])));
        assert_eq!(smith_2x2(&Elem::int(0), &Elem::int(3)), Err(Error::ZeroArgument));
    }

    #[test]
    fn weak_form() {
        let a = z(&[&[6, 0], &[0, 4]]);
        let res = weak_smith(&a);
        assert_eq!(res.p.multiply(&a).unwrap().multiply(&res.q).unwrap(), res.d);
        assert!(res.diag.iter().all(|d| res.diag[0].divides(d)));
        assert_eq!(res.diag[0], Elem::int(2));
    }

    #[test]
    fn polynomial_matrix() {
        let x = |c: &[i64]| Elem::Pol(Polynomial::from_i64_coeffs(c));
        let a = Matrix::from_rows(Ring::QX, vec![vec![x(&[-1, 1]), x(&[0])], vec![x(&[0]), x(&[-1, 1])]]).unwrap();
        let res = smith_with_inverses(&a);
        check(&a, &res);
        assert_eq!(res.diag, vec![x(&[-1, 1]), x(&[-1, 1])]);
        let b = Matrix::from_rows(Ring::QX, vec![vec![x(&[-1, 1]), x(&[-1])], vec![x(&[0]), x(&[-1, 1])]]).unwrap();
        let res = smith_with_inverses(&b);
        check(&b, &res);
        assert_eq!(res.diag, vec![x(&[1]), x(&[1, -2, 1])]);
    }
}
