//! Elementary row and column operations, and a reducer that replays every
//! operation onto running transform matrices.

use crate::domain::{divmod, Elem, Ring};
use crate::error::{Error, Result};
use crate::matrix::{Axis, Matrix};

/// The three types of elementary operation. Line indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpKind {
    /// Interchange lines `i` and `j`.
    Swap(usize, usize),
    /// `line[target] += coeff * line[source]`.
    AddMul { target: usize, coeff: Elem, source: usize },
    /// `line[index] *= unit`.
    Scale { index: usize, unit: Elem },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElemOp {
    pub axis: Axis,
    pub kind: OpKind,
}

impl ElemOp {
    pub fn swap(axis: Axis, i: usize, j: usize) -> Self {
        ElemOp { axis, kind: OpKind::Swap(i, j) }
    }

    pub fn add_mul(axis: Axis, target: usize, coeff: Elem, source: usize) -> Self {
        ElemOp { axis, kind: OpKind::AddMul { target, coeff, source } }
    }

    pub fn scale(axis: Axis, index: usize, unit: Elem) -> Self {
        ElemOp { axis, kind: OpKind::Scale { index, unit } }
    }

    /// The operation undoing `self`.
    pub fn inverse(&self) -> ElemOp {
        let kind = match &self.kind {
            OpKind::Swap(i, j) => OpKind::Swap(*i, *j),
            OpKind::AddMul { target, coeff, source } => OpKind::AddMul {
                target: *target,
                coeff: -coeff,
                source: *source,
            },
            OpKind::Scale { index, unit } => OpKind::Scale {
                index: *index,
                unit: unit.unit_inverse().expect("scale factor is a unit"),
            },
        };
        ElemOp { axis: self.axis, kind }
    }

    /// The operation whose matrix, multiplied from the other side, equals
    /// this one's. A row op `E` acts as `E*A`; `flipped` acts as `A*E`.
    pub(crate) fn flipped(&self) -> ElemOp {
        let axis = match self.axis {
            Axis::Rows => Axis::Cols,
            Axis::Cols => Axis::Rows,
        };
        let kind = match &self.kind {
            OpKind::AddMul { target, coeff, source } => OpKind::AddMul {
                target: *source,
                coeff: coeff.clone(),
                source: *target,
            },
            other => other.clone(),
        };
        ElemOp { axis, kind }
    }

    fn validate(&self, size: usize, ring: Ring) -> Result<()> {
        let check = |i: usize| {
            if (1..=size).contains(&i) {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange { index: i, bound: size })
            }
        };
        match &self.kind {
            OpKind::Swap(i, j) | OpKind::AddMul { target: i, source: j, .. } => {
                check(*i)?;
                check(*j)?;
                if i == j {
                    return Err(Error::BadIndexSets(format!("operation uses line {i} twice")));
                }
                if let OpKind::AddMul { coeff, .. } = &self.kind {
                    if coeff.ring() != ring {
                        return Err(Error::RingMismatch(ring, coeff.ring()));
                    }
                }
            }
            OpKind::Scale { index, unit } => {
                check(*index)?;
                if unit.ring() != ring {
                    return Err(Error::RingMismatch(ring, unit.ring()));
                }
                if !unit.is_unit() {
                    return Err(Error::NotAUnit(unit.to_string()));
                }
            }
        }
        Ok(())
    }
}

fn cell(axis: Axis, line: usize, k: usize) -> (usize, usize) {
    match axis {
        Axis::Rows => (line, k),
        Axis::Cols => (k, line),
    }
}

fn extent(m: &Matrix, axis: Axis) -> (usize, usize) {
    match axis {
        Axis::Rows => (m.rows(), m.cols()),
        Axis::Cols => (m.cols(), m.rows()),
    }
}

pub(crate) fn apply_in_place(m: &mut Matrix, op: &ElemOp) {
    let axis = op.axis;
    let len = extent(m, axis).1;
    match &op.kind {
        OpKind::Swap(i, j) => {
            for k in 0..len {
                let (a, b) = (cell(axis, i - 1, k), cell(axis, j - 1, k));
                let x = m.at(a.0, a.1).clone();
                let y = m.at(b.0, b.1).clone();
                m.set(a.0, a.1, y);
                m.set(b.0, b.1, x);
            }
        }
        OpKind::AddMul { target, coeff, source } => {
            for k in 0..len {
                let (s, t) = (cell(axis, source - 1, k), cell(axis, target - 1, k));
                let v = m.at(s.0, s.1);
                if !v.is_zero() {
                    let next = m.at(t.0, t.1) + &(coeff * v);
                    m.set(t.0, t.1, next);
                }
            }
        }
        OpKind::Scale { index, unit } => {
            for k in 0..len {
                let c = cell(axis, index - 1, k);
                let next = unit * m.at(c.0, c.1);
                m.set(c.0, c.1, next);
            }
        }
    }
}

/// Applies `op` to `a`: `E*A` for a row op, `A*E` for a column op.
pub fn apply_op(a: &Matrix, op: &ElemOp) -> Result<Matrix> {
    op.validate(extent(a, op.axis).0, a.ring())?;
    let mut out = a.clone();
    apply_in_place(&mut out, op);
    Ok(out)
}

/// The `size x size` elementary matrix of `op`.
pub fn op_matrix(op: &ElemOp, size: usize, ring: Ring) -> Result<Matrix> {
    apply_op(&Matrix::identity(ring, size), op)
}

/// `[[a, b], [c, d]]`: replaces lines `(i, j)` by `(a*L_i + b*L_j, c*L_i + d*L_j)`.
fn combine(m: &mut Matrix, axis: Axis, i: usize, j: usize, c: &[[Elem; 2]; 2]) {
    let len = extent(m, axis).1;
    for k in 0..len {
        let (pi, pj) = (cell(axis, i, k), cell(axis, j, k));
        let x = m.at(pi.0, pi.1).clone();
        let y = m.at(pj.0, pj.1).clone();
        m.set(pi.0, pi.1, &(&c[0][0] * &x) + &(&c[0][1] * &y));
        m.set(pj.0, pj.1, &(&c[1][0] * &x) + &(&c[1][1] * &y));
    }
}

fn transpose2(c: &[[Elem; 2]; 2]) -> [[Elem; 2]; 2] {
    [[c[0][0].clone(), c[1][0].clone()], [c[0][1].clone(), c[1][1].clone()]]
}

/// A working matrix together with the transforms that produced it:
/// `work = left * A * right`, with `left_inv`, `right_inv` kept exact
/// inverses when requested.
#[derive(Clone, Debug)]
pub(crate) struct Tracker {
    pub work: Matrix,
    pub left: Option<Matrix>,
    pub left_inv: Option<Matrix>,
    pub right: Option<Matrix>,
    pub right_inv: Option<Matrix>,
    pub log: Option<Vec<ElemOp>>,
}

impl Tracker {
    pub fn new(a: &Matrix) -> Self {
        Tracker { work: a.clone(), left: None, left_inv: None, right: None, right_inv: None, log: None }
    }

    pub fn with_left(mut self, inverse: bool) -> Self {
        let id = Matrix::identity(self.work.ring(), self.work.rows());
        if inverse {
            self.left_inv = Some(id.clone());
        }
        self.left = Some(id);
        self
    }

    pub fn with_right(mut self, inverse: bool) -> Self {
        let id = Matrix::identity(self.work.ring(), self.work.cols());
        if inverse {
            self.right_inv = Some(id.clone());
        }
        self.right = Some(id);
        self
    }

    pub fn with_log(mut self) -> Self {
        self.log = Some(Vec::new());
        self
    }

    /// `(lines, positions)` along `axis`.
    pub fn extent(&self, axis: Axis) -> (usize, usize) {
        extent(&self.work, axis)
    }

    /// Entry at `pos` of line `line` (both 0-based).
    pub fn get(&self, axis: Axis, line: usize, pos: usize) -> &Elem {
        let (r, c) = cell(axis, line, pos);
        self.work.at(r, c)
    }

    pub fn apply(&mut self, op: ElemOp) {
        apply_in_place(&mut self.work, &op);
        let (fwd, inv) = match op.axis {
            Axis::Rows => (&mut self.left, &mut self.left_inv),
            Axis::Cols => (&mut self.right, &mut self.right_inv),
        };
        if let Some(m) = fwd {
            apply_in_place(m, &op);
        }
        if let Some(m) = inv {
            apply_in_place(m, &op.inverse().flipped());
        }
        if let Some(log) = &mut self.log {
            log.push(op);
        }
    }

    /// Applies a determinant-one 2x2 block to lines `i`, `j` (0-based).
    pub fn block(&mut self, axis: Axis, i: usize, j: usize, c: [[Elem; 2]; 2]) {
        debug_assert!(self.log.is_none(), "block operations are not loggable");
        debug_assert!((&(&c[0][0] * &c[1][1]) - &(&c[0][1] * &c[1][0])).is_one());
        let inv = [[c[1][1].clone(), -&c[0][1]], [-&c[1][0], c[0][0].clone()]];
        match axis {
            Axis::Rows => {
                combine(&mut self.work, Axis::Rows, i, j, &c);
                if let Some(m) = &mut self.left {
                    combine(m, Axis::Rows, i, j, &c);
                }
                if let Some(m) = &mut self.left_inv {
                    combine(m, Axis::Cols, i, j, &transpose2(&inv));
                }
            }
            Axis::Cols => {
                let ct = transpose2(&c);
                combine(&mut self.work, Axis::Cols, i, j, &ct);
                if let Some(m) = &mut self.right {
                    combine(m, Axis::Cols, i, j, &ct);
                }
                if let Some(m) = &mut self.right_inv {
                    combine(m, Axis::Rows, i, j, &inv);
                }
            }
        }
    }

    /// Euclidean reduction at position `pos` along `axis`: afterwards line
    /// `pivot` holds a gcd of the original entries of `pivot` and `others`,
    /// and every line of `others` holds zero there. Types I and II only.
    pub fn clear_line(&mut self, axis: Axis, pivot: usize, others: &[usize], pos: usize) {
        let ring = self.work.ring();
        for &o in others {
            loop {
                let eo = self.get(axis, o, pos);
                if eo.is_zero() {
                    break;
                }
                let es = self.get(axis, pivot, pos);
                if !es.is_zero() {
                    if let Some(q) = eo.exact_div(es) {
                        self.apply(ElemOp::add_mul(axis, o + 1, -q, pivot + 1));
                        break;
                    }
                }
                let (q, _) = divmod(es, eo).expect("nonzero divisor");
                if !q.is_zero() {
                    self.apply(ElemOp::add_mul(axis, pivot + 1, -q, o + 1));
                }
                self.apply(ElemOp::swap(axis, pivot + 1, o + 1));
            }
        }
        debug_assert!(others.iter().all(|&o| self.get(axis, o, pos) == &ring.zero()));
    }
}
