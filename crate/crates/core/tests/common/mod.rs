#![allow(dead_code)]

use matcanon::domain::{Elem, Polynomial, Rational};
use matcanon::hermite::{apply_op, ElemOp};
use matcanon::{Axis, Matrix, Ring};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integers in `[-9, 9]`, rationals `p/q` with `|p| <= 9`, `q <= 4`,
/// polynomials of degree at most 2 with small integer coefficients. About a
/// fifth of the entries are zero.
pub fn random_elem(r: &mut ChaCha8Rng, ring: Ring) -> Elem {
    if r.gen_bool(0.2) {
        return ring.zero();
    }
    match ring {
        Ring::Z => Elem::int(r.gen_range(-9..=9)),
        Ring::Q => Elem::rat(r.gen_range(-9..=9), r.gen_range(1..=4)),
        Ring::QX => {
            let deg = r.gen_range(0..=2);
            let c: Vec<i64> = (0..=deg).map(|_| r.gen_range(-3..=3)).collect();
            Elem::Pol(Polynomial::from_i64_coeffs(&c))
        }
    }
}

pub fn random_matrix(r: &mut ChaCha8Rng, ring: Ring, m: usize, n: usize) -> Matrix {
    let data = (0..m * n).map(|_| random_elem(r, ring)).collect();
    Matrix::new(ring, m, n, data).unwrap()
}

/// Random shape up to `max x max`, sometimes deliberately rank deficient.
pub fn random_shaped(r: &mut ChaCha8Rng, ring: Ring, max: usize) -> Matrix {
    let (m, n) = (r.gen_range(1..=max), r.gen_range(1..=max));
    if r.gen_bool(0.25) {
        let k = r.gen_range(1..=m.min(n));
        let a = random_matrix(r, ring, m, k);
        let b = random_matrix(r, ring, k, n);
        return a.multiply(&b).unwrap();
    }
    random_matrix(r, ring, m, n)
}

fn small_multiplier(r: &mut ChaCha8Rng, ring: Ring) -> Elem {
    match ring {
        Ring::Z => Elem::int(r.gen_range(-3..=3)),
        Ring::Q => Elem::rat(r.gen_range(-3..=3), r.gen_range(1..=2)),
        Ring::QX => {
            let c: Vec<i64> = (0..=r.gen_range(0..=1)).map(|_| r.gen_range(-2..=2)).collect();
            Elem::Pol(Polynomial::from_i64_coeffs(&c))
        }
    }
}

fn random_unit(r: &mut ChaCha8Rng, ring: Ring) -> Elem {
    match ring {
        Ring::Z => Elem::int(if r.gen_bool(0.5) { 1 } else { -1 }),
        Ring::Q => Elem::rat([1, -1, 2, -3][r.gen_range(0..4)], r.gen_range(1..=3)),
        Ring::QX => Elem::Pol(Polynomial::constant(rational(r.gen_range(1..=3), r.gen_range(1..=2)))),
    }
}

/// A product of `steps` random elementary row operations.
pub fn random_unimodular(r: &mut ChaCha8Rng, ring: Ring, n: usize, steps: usize) -> Matrix {
    let mut u = Matrix::identity(ring, n);
    for _ in 0..steps {
        let op = if n == 1 || r.gen_bool(0.15) {
            ElemOp::scale(Axis::Rows, r.gen_range(1..=n), random_unit(r, ring))
        } else {
            let i = r.gen_range(1..=n);
            let j = loop {
                let j = r.gen_range(1..=n);
                if j != i {
                    break j;
                }
            };
            if r.gen_bool(0.2) {
                ElemOp::swap(Axis::Rows, i, j)
            } else {
                ElemOp::add_mul(Axis::Rows, i, small_multiplier(r, ring), j)
            }
        };
        u = apply_op(&u, &op).unwrap();
    }
    u
}

pub fn z(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(Ring::Z, rows)
}

pub fn ints(v: &[i64]) -> Vec<Elem> {
    v.iter().map(|&x| Elem::int(x)).collect()
}
