//! Set-theoretic solutions of the Yang–Baxter equation on `0..n`.

use crate::digroup::Digroup;
use crate::error::{Error, Result};

/// `r(x,y) = (first[x][y], second[x][y])`, a bijection of `X × X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSolution {
    n: usize,
    first: Vec<usize>,
    second: Vec<usize>,
}

impl SetSolution {
    /// `first` and `second` are row-major `n × n` tables.
    pub fn new(n: usize, first: Vec<usize>, second: Vec<usize>) -> Result<Self> {
        for t in [&first, &second] {
            if t.len() != n * n {
                return Err(Error::SizeMismatch {
                    left: t.len(),
                    right: n * n,
                });
            }
            if let Some(&index) = t.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { index, order: n });
            }
        }
        let mut seen = vec![false; n * n];
        for p in 0..n * n {
            let q = first[p] * n + second[p];
            if seen[q] {
                return Err(Error::NotABijection);
            }
            seen[q] = true;
        }
        Ok(SetSolution { n, first, second })
    }

    pub fn flip(n: usize) -> Self {
        let first = (0..n * n).map(|p| p % n).collect();
        let second = (0..n * n).map(|p| p / n).collect();
        SetSolution { n, first, second }
    }

    pub fn identity(n: usize) -> Self {
        let first = (0..n * n).map(|p| p / n).collect();
        let second = (0..n * n).map(|p| p % n).collect();
        SetSolution { n, first, second }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn first(&self) -> &[usize] {
        &self.first
    }

    pub fn second(&self) -> &[usize] {
        &self.second
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let p = x * self.n + y;
        (self.first[p], self.second[p])
    }

    /// `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on every triple.
    pub fn braid_check(&self) -> bool {
        let n = self.n;
        let r12 = |(x, y, z): (usize, usize, usize)| {
            let (a, b) = self.apply(x, y);
            (a, b, z)
        };
        let r23 = |(x, y, z): (usize, usize, usize)| {
            let (b, c) = self.apply(y, z);
            (x, b, c)
        };
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let t = (x, y, z);
                    r12(r23(r12(t))) == r23(r12(r23(t)))
                })
            })
        })
    }

    /// Every `y ↦ first(x,y)` and every `x ↦ second(x,y)` is a bijection.
    pub fn nondegeneracy_check(&self) -> bool {
        let n = self.n;
        let bijective = |f: &dyn Fn(usize) -> usize| {
            let mut seen = vec![false; n];
            (0..n).all(|v| !std::mem::replace(&mut seen[f(v)], true))
        };
        (0..n).all(|x| bijective(&|y| self.first[x * n + y]))
            && (0..n).all(|y| bijective(&|x| self.second[x * n + y]))
    }
}

/// `r(x,y) = (λ_x(y), λ_x(y)⁻∘ ∘ x ∘ y)` for a left skew brace.
pub fn solution_from_brace(d: &Digroup) -> Result<SetSolution> {
    if !d.is_skew_brace() {
        return Err(Error::NotABrace);
    }
    let n = d.order();
    let c = d.circ();
    let mut first = Vec::with_capacity(n * n);
    let mut second = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let l = d.lambda(x, y);
            first.push(l);
            second.push(c.mul(c.inv(l), c.mul(x, y)));
        }
    }
    SetSolution::new(n, first, second)
}
