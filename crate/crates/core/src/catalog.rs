//! Built-in groups and digroups with frozen element orderings.
//!
//! Orderings:
//! - `cyclic(n)`: index `i` is the residue `i` mod `n`.
//! - `klein4`: 0 = e, 1 = a, 2 = b, 3 = ab (the table is XOR of indices).
//! - `s3`: permutations of {1,2,3} with 0 = id, 1 = (1 2), 2 = (1 3),
//!   3 = (2 3), 4 = (1 2 3), 5 = (1 3 2). Products compose as functions:
//!   `a·b` applies `b` first.
//! - `s4`: permutations of {0,1,2,3} in lexicographic order of their image
//!   tuples (identity first), composed as functions.
//! - `dihedral(n)`: order `2n`; index `f·n + i` is `s^f r^i`, with
//!   `r^i s = s r^-i`.
//! - `quaternion8`: 0 = 1, 1 = −1, 2 = i, 3 = −i, 4 = j, 5 = −j, 6 = k, 7 = −k.
//! - digroup `s3c6`: `*` is `s3`; `∘` is the cyclic group of order 6
//!   generated by (1 2), where the power `(1 2)^e` sits at index
//!   `[0, 1, 5, 3, 4, 2][e]`.
//! - digroup `signed(m,n)`: carrier ℤ/m × ℤ/n (m even), pair `(y,k)` at index
//!   `y·n + k`, with `(y,k)*(y',k') = (y+y', k+(−1)^y k')` and
//!   `(y,k)∘(y',k') = (y+y', (−1)^{y'} k + (−1)^y k')`.

use std::fmt;
use std::str::FromStr;

use crate::digroup::Digroup;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::map::ElementMap;
use crate::semidirect::DigroupAction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupName {
    Cyclic(usize),
    Klein4,
    S3,
    S4,
    Dihedral(usize),
    Quaternion8,
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupName::Klein4 => f.write_str("klein4"),
            GroupName::S3 => f.write_str("s3"),
            GroupName::S4 => f.write_str("s4"),
            GroupName::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupName::Quaternion8 => f.write_str("quaternion8"),
        }
    }
}

/// Parses `name(n)`, `name n` glued (`cyclic6`) or returns `None`.
fn parametrized(s: &str, prefix: &str) -> Option<Vec<usize>> {
    let rest = s.strip_prefix(prefix)?;
    let inner = match rest.strip_prefix('(') {
        Some(r) => r.strip_suffix(')')?,
        None => rest,
    };
    inner.split(',').map(|t| t.trim().parse().ok()).collect()
}

impl FromStr for GroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let name = match lower.as_str() {
            "klein4" | "v4" => GroupName::Klein4,
            "s3" => GroupName::S3,
            "s4" => GroupName::S4,
            "quaternion8" | "q8" => GroupName::Quaternion8,
            other => {
                let one = |p: &str| match parametrized(other, p).as_deref() {
                    Some(&[n]) if n >= 1 => Some(n),
                    _ => None,
                };
                if let Some(n) = one("cyclic").or_else(|| one("z")).or_else(|| one("c")) {
                    GroupName::Cyclic(n)
                } else if let Some(n) = one("dihedral") {
                    GroupName::Dihedral(n)
                } else {
                    return Err(Error::UnknownName(s.to_string()));
                }
            }
        };
        Ok(name)
    }
}

pub fn group(name: &GroupName) -> Result<FiniteGroup> {
    match *name {
        GroupName::Cyclic(n) => cyclic(n),
        GroupName::Klein4 => {
            let rows: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
            FiniteGroup::from_rows(&rows)
        }
        GroupName::S3 => permutation_group(&[
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![2, 1, 0],
            vec![0, 2, 1],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ]),
        GroupName::S4 => permutation_group(&lexicographic_permutations(4)),
        GroupName::Dihedral(n) => dihedral(n),
        GroupName::Quaternion8 => quaternion8(),
    }
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::UnknownName("cyclic(0)".into()));
    }
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    FiniteGroup::from_rows(&rows)
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::UnknownName("dihedral(0)".into()));
    }
    let m = 2 * n;
    let mut table = Vec::with_capacity(m * m);
    for a in 0..m {
        let (f, i) = (a / n, a % n);
        for b in 0..m {
            let (g, j) = (b / n, b % n);
            let rot = if g == 0 { (i + j) % n } else { (n - i + j) % n };
            table.push(((f + g) % 2) * n + rot);
        }
    }
    FiniteGroup::from_flat(m, table)
}

fn quaternion8() -> Result<FiniteGroup> {
    // unit products (sign, unit) for units 1, i, j, k
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (neg, unit) = UNIT[a / 2][b / 2];
            let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
            table.push(2 * unit + usize::from(sign));
        }
    }
    FiniteGroup::from_flat(8, table)
}

fn lexicographic_permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for x in 0..k {
            if !prefix.contains(&x) {
                prefix.push(x);
                rec(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), k, &mut out);
    out
}

/// Group of the listed permutations under function composition; the first
/// permutation must be the identity and the list must be closed.
fn permutation_group(perms: &[Vec<usize>]) -> Result<FiniteGroup> {
    let n = perms.len();
    let mut table = Vec::with_capacity(n * n);
    for p in perms {
        for q in perms {
            let pq: Vec<usize> = q.iter().map(|&x| p[x]).collect();
            let idx = perms
                .iter()
                .position(|r| *r == pq)
                .ok_or_else(|| Error::MalformedTable("permutation list is not closed".into()))?;
            table.push(idx);
        }
    }
    FiniteGroup::from_flat(n, table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DigroupName {
    /// `(G, G)`: both operations equal the named group.
    Trivial(GroupName),
    S3C6,
    Signed {
        y_order: usize,
        k_order: usize,
    },
}

impl fmt::Display for DigroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DigroupName::Trivial(g) => g.fmt(f),
            DigroupName::S3C6 => f.write_str("s3c6"),
            DigroupName::Signed { y_order, k_order } => write!(f, "signed({y_order},{k_order})"),
        }
    }
}

impl FromStr for DigroupName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "s3c6" {
            return Ok(DigroupName::S3C6);
        }
        if let Some(args) = parametrized(&lower, "signed") {
            if let [y_order, k_order] = args[..] {
                return Ok(DigroupName::Signed { y_order, k_order });
            }
            return Err(Error::UnknownName(s.to_string()));
        }
        GroupName::from_str(s).map(DigroupName::Trivial)
    }
}

pub fn digroup(name: &DigroupName) -> Result<Digroup> {
    match *name {
        DigroupName::Trivial(g) => {
            let g = group(&g)?;
            Digroup::new(g.clone(), g)
        }
        DigroupName::S3C6 => s3c6(),
        DigroupName::Signed { y_order, k_order } => signed(y_order, k_order),
    }
}

/// Index of `(1 2)^e` in the `s3` ordering.
pub const S3C6_POWER_INDEX: [usize; 6] = [0, 1, 5, 3, 4, 2];

/// The skew brace with `(D,*) = S3` and `(D,∘)` cyclic of order 6 generated
/// by the transposition (1 2).
pub fn s3c6() -> Result<Digroup> {
    let star = group(&GroupName::S3)?;
    let mut exponent = [0; 6];
    for (e, &idx) in S3C6_POWER_INDEX.iter().enumerate() {
        exponent[idx] = e;
    }
    let rows: Vec<Vec<usize>> = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| S3C6_POWER_INDEX[(exponent[a] + exponent[b]) % 6])
                .collect()
        })
        .collect();
    Digroup::new(star, FiniteGroup::from_rows(&rows)?)
}

fn signed_residue(k: usize, y: usize, n: usize) -> usize {
    if y.is_multiple_of(2) {
        k
    } else {
        (n - k) % n
    }
}

fn signed(y_order: usize, k_order: usize) -> Result<Digroup> {
    if y_order == 0 || !y_order.is_multiple_of(2) || k_order == 0 {
        return Err(Error::UnknownName(format!("signed({y_order},{k_order})")));
    }
    let (m, n) = (y_order, k_order);
    let size = m * n;
    let mut star = Vec::with_capacity(size * size);
    let mut circ = Vec::with_capacity(size * size);
    for a in 0..size {
        let (y, k) = (a / n, a % n);
        for b in 0..size {
            let (y2, k2) = (b / n, b % n);
            let yy = (y + y2) % m;
            star.push(yy * n + (k + signed_residue(k2, y, n)) % n);
            circ.push(yy * n + (signed_residue(k, y2, n) + signed_residue(k2, y, n)) % n);
        }
    }
    Digroup::new(
        FiniteGroup::from_flat(size, star)?,
        FiniteGroup::from_flat(size, circ)?,
    )
}

/// One of the eight actions of the trivial brace ℤ/m on the trivial brace ℤ/n
/// in which each of `φ*`, `φ∘`, `Λ` is either the trivial map or the sign
/// action `k ↦ (−1)^y k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignChoice {
    pub phi_star: bool,
    pub phi_circ: bool,
    pub lambda: bool,
}

impl SignChoice {
    /// Row `1..=8`: rows run through
    /// `(φ*, φ∘, Λ) ∈ {trivial, sign}³` with `Λ` varying fastest.
    pub fn from_row(row: usize) -> Option<Self> {
        if !(1..=8).contains(&row) {
            return None;
        }
        let bits = row - 1;
        Some(SignChoice {
            phi_star: bits & 4 != 0,
            phi_circ: bits & 2 != 0,
            lambda: bits & 1 != 0,
        })
    }

    pub fn action(&self, y_order: usize, k_order: usize) -> Result<DigroupAction> {
        if y_order == 0 || !y_order.is_multiple_of(2) {
            return Err(Error::InvalidAction(format!(
                "sign action needs an even |Y|, got {y_order}"
            )));
        }
        let y = group(&GroupName::Cyclic(y_order))?;
        let k = group(&GroupName::Cyclic(k_order))?;
        let y = Digroup::new(y.clone(), y)?;
        let k = Digroup::new(k.clone(), k)?;
        let maps = |sign: bool| -> Vec<ElementMap> {
            (0..y_order)
                .map(|yy| {
                    let images = (0..k_order)
                        .map(|kk| {
                            if sign {
                                signed_residue(kk, yy, k_order)
                            } else {
                                kk
                            }
                        })
                        .collect();
                    ElementMap::from_images_unchecked(k_order, images)
                })
                .collect()
        };
        DigroupAction::new(
            y,
            k,
            maps(self.phi_star),
            maps(self.phi_circ),
            maps(self.lambda),
        )
    }
}
