//! Dense matrices over a single ring, with submatrix selection and direct
//! sums. Public indices are 1-based.

use std::fmt;

use crate::domain::{Elem, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Rows or columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Rows,
    Cols,
}

/// Which side of `X[alpha|beta]` keeps or drops its index set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetMode {
    /// `X[alpha|beta]`
    KeepKeep,
    /// `X(alpha|beta)`
    DropDrop,
    /// `X[alpha|beta)`
    KeepDrop,
    /// `X(alpha|beta]`
    DropKeep,
}

impl Matrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch(format!("empty {rows}x{cols} matrix")));
        }
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(e) = data.iter().find(|e| e.ring() != ring) {
            return Err(Error::RingMismatch(ring, e.ring()));
        }
        Ok(Matrix { ring, rows, cols, data })
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(ring, m, n, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integers, embedded in `ring`.
    pub fn from_i64(ring: Ring, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| ring.from_i64(v)).collect())
            .collect();
        Self::from_rows(ring, data).expect("well-formed literal")
    }

    pub(crate) fn from_fn(ring: Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { ring, rows, cols, data }
    }

    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        Self::from_fn(ring, rows, cols, |_, _| ring.zero())
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        Self::from_fn(ring, n, n, |r, c| if r == c { ring.one() } else { ring.zero() })
    }

    /// `rows x cols` matrix with `diag` down the main diagonal.
    pub fn diagonal(ring: Ring, rows: usize, cols: usize, diag: &[Elem]) -> Self {
        Self::from_fn(ring, rows, cols, |r, c| match diag.get(r) {
            Some(d) if r == c => d.clone(),
            _ => ring.zero(),
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Elem {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j), "entry ({i},{j}) out of range");
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> &Elem {
        &self.data[r * self.cols + c]
    }

    pub(crate) fn at_mut(&mut self, r: usize, c: usize) -> &mut Elem {
        &mut self.data[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: Elem) {
        debug_assert_eq!(v.ring(), self.ring);
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    /// Rows as vectors, top to bottom.
    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        self.data.chunks(self.cols).map(<[Elem]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Elem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| {
                let e = self.at(r, c);
                if r == c { e.is_one() } else { e.is_zero() }
            }))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.at(r, c).is_zero()))
    }

    /// Embeds every entry into a larger ring (`Z -> Q -> Q[x]`).
    pub fn lift(&self, ring: Ring) -> Result<Matrix> {
        let data = self.data.iter().map(|e| e.lift(ring)).collect::<Result<_>>()?;
        Ok(Matrix { ring, rows: self.rows, cols: self.cols, data })
    }

    fn check_ring(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let cell = out.at_mut(i, j);
                        *cell = &*cell + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Elem, &Elem) -> Elem) -> Result<Matrix> {
        self.check_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        Matrix {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| c * a).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ring, self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn trace(&self) -> Elem {
        (0..self.rows.min(self.cols)).fold(self.ring.zero(), |acc, i| acc + self.at(i, i))
    }

    /// `A^k` for square `A`.
    pub fn pow(&self, k: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let mut acc = Matrix::identity(self.ring, self.rows);
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `X[f|g]`: `Y(p, q) = X(f(p), g(q))`. Selectors need not be injective
    /// or increasing.
    pub fn submatrix(&self, f: &[usize], g: &[usize]) -> Result<Matrix> {
        check_bounds(f, self.rows)?;
        check_bounds(g, self.cols)?;
        if f.is_empty() || g.is_empty() {
            return Err(Error::EmptyResult);
        }
        Ok(Matrix::from_fn(self.ring, f.len(), g.len(), |p, q| self.at(f[p] - 1, g[q] - 1).clone()))
    }

    /// Rows `alpha` and columns `beta` kept or dropped per `mode`; kept
    /// indices always come out in increasing order.
    pub fn submatrix_sets(&self, alpha: &[usize], beta: &[usize], mode: SetMode) -> Result<Matrix> {
        check_bounds(alpha, self.rows)?;
        check_bounds(beta, self.cols)?;
        let (keep_rows, keep_cols) = match mode {
            SetMode::KeepKeep => (true, true),
            SetMode::DropDrop => (false, false),
            SetMode::KeepDrop => (true, false),
            SetMode::DropKeep => (false, true),
        };
        let rows = select(alpha, self.rows, keep_rows);
        let cols = select(beta, self.cols, keep_cols);
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::EmptyResult);
        }
        self.submatrix(&rows, &cols)
    }

    /// Block diagonal `B ⊕ C`.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        let (r, s) = (self.rows, self.cols);
        Ok(Matrix::from_fn(self.ring, r + other.rows, s + other.cols, |i, j| {
            match (i < r, j < s) {
                (true, true) => self.at(i, j).clone(),
                (false, false) => other.at(i - r, j - s).clone(),
                _ => self.ring.zero(),
            }
        }))
    }

    /// `B ⊕_X^Y C`: the `n x n` matrix with `A[X|Y] = B`, `A(X|Y) = C` and
    /// zeros elsewhere, `n = r + s`.
    pub fn general_direct_sum(&self, other: &Matrix, x: &[usize], y: &[usize]) -> Result<Matrix> {
        self.check_ring(other)?;
        if !self.is_square() || !other.is_square() {
            return Err(Error::ShapeMismatch("direct summands must be square".into()));
        }
        let (r, n) = (self.rows, self.rows + other.rows);
        for set in [x, y] {
            if set.len() != r || !set.windows(2).all(|w| w[0] < w[1]) || set.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::BadIndexSets(format!("{set:?} is not an increasing {r}-subset of 1..={n}")));
            }
        }
        let xc = select(x, n, false);
        let yc = select(y, n, false);
        let mut out = Matrix::zeros(self.ring, n, n);
        for (p, &i) in x.iter().enumerate() {
            for (q, &j) in y.iter().enumerate() {
                out.set(i - 1, j - 1, self.at(p, q).clone());
            }
        }
        for (p, &i) in xc.iter().enumerate() {
            for (q, &j) in yc.iter().enumerate() {
                out.set(i - 1, j - 1, other.at(p, q).clone());
            }
        }
        Ok(out)
    }

    /// Block diagonal of a nonempty list.
    pub fn block_diagonal(blocks: &[Matrix]) -> Result<Matrix> {
        let (first, rest) = blocks.split_first().ok_or(Error::EmptyResult)?;
        rest.iter().try_fold(first.clone(), |acc, b| acc.direct_sum(b))
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_ring(other)?;
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch("row counts differ".into()));
        }
        let c = self.cols;
        Ok(Matrix::from_fn(self.ring, self.rows, c + other.cols, |i, j| {
            if j < c { self.at(i, j).clone() } else { other.at(i, j - c).clone() }
        }))
    }

    /// Writes the text file format.
    pub fn to_text(&self) -> String {
        let mut s = format!("ring {}\nrows {}\ncols {}\n", self.ring, self.rows, self.cols);
        for row in self.data.chunks(self.cols) {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text file format. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Matrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

        let mut header = |key: &str| -> Result<(usize, String)> {
            let (no, line) = lines.next().ok_or_else(|| Error::parse(0, 0, format!("missing `{key}` line")))?;
            let mut parts = line.split_whitespace();
            if parts.next() != Some(key) {
                return Err(Error::parse(no, 1, format!("expected `{key}`")));
            }
            let value = parts.next().ok_or_else(|| Error::parse(no, key.len() + 1, format!("missing value for `{key}`")))?;
            if parts.next().is_some() {
                return Err(Error::parse(no, line.len(), "trailing input"));
            }
            Ok((no, value.to_string()))
        };
        let (no, ring_name) = header("ring")?;
        let ring = Ring::from_name(&ring_name)
            .ok_or_else(|| Error::parse(no, 6, format!("unknown ring `{ring_name}` (expected Z, Q or Q[x])")))?;
        let mut dim = |key: &str| -> Result<usize> {
            let (no, v) = header(key)?;
            match v.parse::<usize>() {
                Ok(d) if d >= 1 => Ok(d),
                _ => Err(Error::parse(no, key.len() + 2, format!("`{key}` must be a positive integer, got `{v}`"))),
            }
        };
        let rows = dim("rows")?;
        let cols = dim("cols")?;

        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (no, line) = lines
                .next()
                .ok_or_else(|| Error::parse(0, 0, format!("expected {rows} rows, found {r}")))?;
            let mut count = 0;
            for (col, tok) in tokens(line) {
                let e = Elem::parse(tok, ring).map_err(|m| Error::parse(no, col, m))?;
                data.push(e);
                count += 1;
            }
            if count != cols {
                return Err(Error::parse(no, 1, format!("expected {cols} entries, found {count}")));
            }
        }
        if let Some((no, _)) = lines.next() {
            return Err(Error::parse(no, 1, "unexpected extra row"));
        }
        Matrix::new(ring, rows, cols, data)
    }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

fn check_bounds(sel: &[usize], bound: usize) -> Result<()> {
    match sel.iter().find(|&&i| i == 0 || i > bound) {
        Some(&index) => Err(Error::IndexOutOfRange { index, bound }),
        None => Ok(()),
    }
}

fn select(set: &[usize], n: usize, keep: bool) -> Vec<usize> {
    (1..=n).filter(|i| set.contains(i) == keep).collect()
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.cols) {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}
