//! Similarity over `Q`: characteristic matrices, evaluation of polynomial
//! matrices, similarity invariants, rational and Jordan canonical forms.

use num_traits::{One, Zero};

use crate::determinant::{det, inverse};
use crate::domain::{Elem, Polynomial, Rational, Ring};
use crate::error::{Error, Result};
use crate::invariants::elementary_divisors;
use crate::matrix::Matrix;
use crate::smith::{smith, smith_with_inverses};

/// `S^-1 * A * S = target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityCertificate {
    pub s: Matrix,
    pub s_inv: Matrix,
    pub target: Matrix,
}

impl SimilarityCertificate {
    /// Replays the certificate against `a`.
    pub fn verify(&self, a: &Matrix) -> bool {
        let Ok(a) = a.lift(Ring::Q) else { return false };
        self.s.multiply(&self.s_inv).is_ok_and(|m| m.is_identity())
            && self
                .s_inv
                .multiply(&a)
                .and_then(|m| m.multiply(&self.s))
                .is_ok_and(|m| m == self.target)
    }
}

/// `P = sum P_k x^k` with constant coefficient matrices over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPresentation {
    /// `P_0..P_m`; `P_m` is nonzero unless the source matrix is zero.
    pub coeffs: Vec<Matrix>,
}

impl CanonicalPresentation {
    /// Reassembles the polynomial matrix.
    pub fn to_matrix(&self) -> Matrix {
        let p0 = &self.coeffs[0];
        Matrix::from_fn(Ring::QX, p0.rows(), p0.cols(), |i, j| {
            let c = self
                .coeffs
                .iter()
                .map(|m| m.at(i, j).as_rational().expect("rational coefficient"))
                .collect();
            Elem::Pol(Polynomial::from_coeffs(c))
        })
    }
}

/// Accepts a square matrix over `Z` or `Q` and returns it over `Q`.
fn rational_square(a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.rows(), a.cols()));
    }
    if a.ring() == Ring::QX {
        return Err(Error::UnsupportedRing(Ring::QX));
    }
    a.lift(Ring::Q)
}

/// `xI - A`.
pub fn char_matrix(a: &Matrix) -> Result<Matrix> {
    let a = rational_square(a)?;
    Ok(Matrix::from_fn(Ring::QX, a.rows(), a.cols(), |i, j| {
        let c = -a.at(i, j).as_rational().expect("rational entry");
        let p = if i == j {
            Polynomial::from_coeffs(vec![c, Rational::one()])
        } else {
            Polynomial::constant(c)
        };
        Elem::Pol(p)
    }))
}

pub fn char_poly(a: &Matrix) -> Result<Polynomial> {
    let d = det(&char_matrix(a)?)?;
    Ok(d.as_poly().expect("polynomial determinant").clone())
}

pub fn canonical_presentation(p: &Matrix) -> Result<CanonicalPresentation> {
    if p.ring() != Ring::QX {
        return Err(Error::RingMismatch(Ring::QX, p.ring()));
    }
    let polys: Vec<&Polynomial> = p.entries().iter().map(|e| e.as_poly().expect("polynomial")).collect();
    let m = polys.iter().filter_map(|q| q.degree()).max().unwrap_or(0);
    let coeffs = (0..=m)
        .map(|k| {
            Matrix::from_fn(Ring::Q, p.rows(), p.cols(), |i, j| {
                Elem::Rat(polys[i * p.cols() + j].coeff(k))
            })
        })
        .collect();
    Ok(CanonicalPresentation { coeffs })
}

fn check_eval(p: &Matrix, a: &Matrix) -> Result<Matrix> {
    let a = rational_square(a)?;
    if p.ring() != Ring::QX {
        return Err(Error::RingMismatch(Ring::QX, p.ring()));
    }
    Ok(a)
}

/// Right evaluation `sum P_k A^k`.
pub fn right_eval(p: &Matrix, a: &Matrix) -> Result<Matrix> {
    let a = check_eval(p, a)?;
    if p.cols() != a.rows() {
        return Err(Error::ShapeMismatch(format!("{}x{} evaluated at order {}", p.rows(), p.cols(), a.rows())));
    }
    let pres = canonical_presentation(p)?;
    let mut acc = Matrix::zeros(Ring::Q, p.rows(), p.cols());
    for pk in pres.coeffs.iter().rev() {
        acc = acc.multiply(&a)?.add(pk)?;
    }
    Ok(acc)
}

/// Left evaluation `sum A^k P_k`.
pub fn left_eval(p: &Matrix, a: &Matrix) -> Result<Matrix> {
    let a = check_eval(p, a)?;
    if p.rows() != a.cols() {
        return Err(Error::ShapeMismatch(format!("{}x{} evaluated at order {}", p.rows(), p.cols(), a.rows())));
    }
    let pres = canonical_presentation(p)?;
    let mut acc = Matrix::zeros(Ring::Q, p.rows(), p.cols());
    for pk in pres.coeffs.iter().rev() {
        acc = a.multiply(&acc)?.add(pk)?;
    }
    Ok(acc)
}

/// `q(A)`.
pub fn eval_poly(q: &Polynomial, a: &Matrix) -> Result<Matrix> {
    let a = rational_square(a)?;
    let n = a.rows();
    let mut acc = Matrix::zeros(Ring::Q, n, n);
    for c in q.coeffs().iter().rev() {
        acc = acc.multiply(&a)?.add(&Matrix::identity(Ring::Q, n).scale(&Elem::Rat(c.clone())))?;
    }
    Ok(acc)
}

fn polys(diag: Vec<Elem>) -> Vec<Polynomial> {
    diag.into_iter().map(|e| e.as_poly().expect("polynomial").clone()).collect()
}

/// `q_1..q_n`: the invariant factors of `xI - A`, monic.
pub fn similarity_invariants(a: &Matrix) -> Result<Vec<Polynomial>> {
    Ok(polys(smith(&char_matrix(a)?).diag))
}

pub fn minimal_poly(a: &Matrix) -> Result<Polynomial> {
    Ok(similarity_invariants(a)?.pop().expect("xI - A has full rank"))
}

/// Companion matrix: ones on the superdiagonal, bottom row `a_0..a_{k-1}`
/// where `q = x^k - sum a_j x^j`.
pub fn companion(q: &Polynomial) -> Result<Matrix> {
    let k = match q.degree() {
        Some(k) if k >= 1 && q.is_monic() => k,
        _ => return Err(Error::NotMonic(q.to_string())),
    };
    Ok(Matrix::from_fn(Ring::Q, k, k, |i, j| {
        let v = if i == k - 1 {
            -q.coeff(j)
        } else if j == i + 1 {
            Rational::one()
        } else {
            Rational::zero()
        };
        Elem::Rat(v)
    }))
}

/// The `k x k` Jordan block with `alpha` on the diagonal and ones above it.
///
/// # Panics
/// If `k == 0`.
pub fn hypercompanion(alpha: &Rational, k: usize) -> Matrix {
    assert!(k >= 1, "hypercompanion of order zero");
    Matrix::from_fn(Ring::Q, k, k, |i, j| {
        let v = if i == j {
            alpha.clone()
        } else if j == i + 1 {
            Rational::one()
        } else {
            Rational::zero()
        };
        Elem::Rat(v)
    })
}

/// A conjugator `S` with `S^-1 * A * S = B`, or `None` when the similarity
/// invariants differ.
pub fn similar(a: &Matrix, b: &Matrix) -> Result<Option<SimilarityCertificate>> {
    let (a, b) = (rational_square(a)?, rational_square(b)?);
    if a.rows() != b.rows() {
        return Err(Error::ShapeMismatch(format!("orders {} and {}", a.rows(), b.rows())));
    }
    let n = a.rows();
    if a == b {
        let id = Matrix::identity(Ring::Q, n);
        return Ok(Some(SimilarityCertificate { s: id.clone(), s_inv: id, target: b }));
    }
    let sa = smith_with_inverses(&char_matrix(&a)?);
    let sb = smith_with_inverses(&char_matrix(&b)?);
    if sa.diag != sb.diag {
        return Ok(None);
    }
    let witness = sa.q.multiply(sb.q_inv.as_ref().expect("tracked inverse"))?;
    let s = right_eval(&witness, &b)?;
    let s_inv = inverse(&s).map_err(|_| Error::Verification("conjugator is singular".into()))?;
    let cert = SimilarityCertificate { s, s_inv, target: b };
    if !cert.verify(&a) {
        return Err(Error::Verification("S^-1 A S differs from the target".into()));
    }
    Ok(Some(cert))
}

fn to_form(a: &Matrix, blocks: Vec<Matrix>) -> Result<(SimilarityCertificate, Matrix)> {
    let form = Matrix::block_diagonal(&blocks)?;
    let cert = similar(a, &form)?.ok_or_else(|| Error::Verification("form is not similar to the input".into()))?;
    Ok((cert, form))
}

fn matrix_elementary_divisors(a: &Matrix) -> Result<Vec<(Polynomial, u32)>> {
    let qs = smith(&char_matrix(a)?).diag;
    Ok(elementary_divisors(&qs)?
        .into_iter()
        .map(|(p, e)| (p.as_poly().expect("polynomial").clone(), e))
        .collect())
}

/// Rational canonical form: the direct sum of the companion matrices of the
/// elementary divisors of `xI - A`.
pub fn rcf(a: &Matrix) -> Result<(SimilarityCertificate, Matrix)> {
    let a = rational_square(a)?;
    let blocks = matrix_elementary_divisors(&a)?
        .into_iter()
        .map(|(p, e)| companion(&p.pow(e)))
        .collect::<Result<Vec<_>>>()?;
    to_form(&a, blocks)
}

/// Jordan canonical form; needs every elementary divisor to be a power of a
/// linear polynomial.
pub fn jordan(a: &Matrix) -> Result<(SimilarityCertificate, Matrix)> {
    let a = rational_square(a)?;
    let mut blocks = Vec::new();
    for (p, e) in matrix_elementary_divisors(&a)? {
        if p.degree() != Some(1) {
            return Err(Error::NonLinearElementaryDivisor(p.to_string()));
        }
        blocks.push(hypercompanion(&-p.coeff(0), e as usize));
    }
    to_form(&a, blocks)
}
