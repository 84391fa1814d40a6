//! Permutations of `{1..n}` and injections `{1..n} -> {1..p}`.
//!
//! All values are 1-based, matching one-line notation: `images[i-1] = f(i)`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

fn check_injective(images: &[usize], codomain: usize) -> Result<()> {
    let mut seen = vec![false; codomain + 1];
    for &v in images {
        if v == 0 || v > codomain {
            return Err(Error::InvalidPermutation(format!("image {v} outside 1..={codomain}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPermutation(format!("image {v} repeated")));
        }
    }
    Ok(())
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        check_injective(&images, images.len())?;
        Ok(Permutation { images })
    }

    /// Parses comma-separated one-line notation such as `4,2,1,3`.
    pub fn parse(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(images)
    }

    /// Builds a permutation of `{1..n}` from disjoint cycles; omitted points
    /// are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n + 1];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::InvalidPermutation(format!("{a} outside 1..={n}")));
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::InvalidPermutation(format!("{a} appears in two cycles")));
                }
                images[a - 1] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidPermutation("transposition needs i != j".into()));
        }
        Self::from_cycles(n, &[&[i, j]])
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(f g)(x) = f(g(x))`
    pub fn compose(&self, g: &Permutation) -> Result<Permutation> {
        if self.len() != g.len() {
            return Err(Error::SizeMismatch(self.len(), g.len()));
        }
        Ok(Permutation {
            images: g.images.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Disjoint cycles, each starting at its minimum, sorted by that
    /// minimum. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len() + 1];
        let mut out = Vec::new();
        for start in 1..=self.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Sum over cycles of `len - 1`: the fewest transpositions giving `self`.
    pub fn index(&self) -> usize {
        self.cycles().iter().map(|c| c.len() - 1).sum()
    }

    /// Pairs `(i, j)`, `i < j`, with `f(i) > f(j)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.apply(i) > self.apply(j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.index().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All permutations of `{1..n}` in lexicographic one-line order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cyc in self.cycles() {
            let parts: Vec<String> = cyc.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[i - 1]).unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

/// An injective map `{1..n} -> {1..p}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Injection {
    images: Vec<usize>,
    codomain: usize,
}

impl Injection {
    pub fn new(images: Vec<usize>, codomain: usize) -> Result<Self> {
        check_injective(&images, codomain)?;
        Ok(Injection { images, codomain })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }

    /// `(f g)(x) = f(g(x))` for a permutation `g` of the domain.
    pub fn compose(&self, g: &Permutation) -> Result<Injection> {
        if self.images.len() != g.len() {
            return Err(Error::SizeMismatch(self.images.len(), g.len()));
        }
        Ok(Injection {
            images: g.images().iter().map(|&x| self.images[x - 1]).collect(),
            codomain: self.codomain,
        })
    }

    /// Unique split `h = f g` with `f` strictly increasing onto `image(h)`
    /// and `g` a permutation.
    pub fn decompose(&self) -> (Injection, Permutation) {
        let mut sorted = self.images.clone();
        sorted.sort_unstable();
        let g = self
            .images
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() + 1)
            .collect();
        (
            Injection {
                images: sorted,
                codomain: self.codomain,
            },
            Permutation { images: g },
        )
    }
}

/// Strictly increasing `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i + 1) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
