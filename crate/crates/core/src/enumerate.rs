//! Enumeration of all group tables on a labelled carrier with identity 0, and
//! of all digroups over a fixed `*`-group.

use crate::digroup::Digroup;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::Limits;

const UNSET: usize = usize::MAX;

struct TableSearch {
    n: usize,
    table: Vec<usize>,
    // position[a*n + v] = b when table[a][b] = v is already assigned
    position: Vec<usize>,
    row_used: Vec<Vec<bool>>,
    col_used: Vec<Vec<bool>>,
    out: Vec<FiniteGroup>,
}

impl TableSearch {
    fn new(n: usize) -> Self {
        let mut s = TableSearch {
            n,
            table: vec![UNSET; n * n],
            position: vec![UNSET; n * n],
            row_used: vec![vec![false; n]; n],
            col_used: vec![vec![false; n]; n],
            out: Vec::new(),
        };
        for a in 0..n {
            s.assign(0, a, a);
            if a != 0 {
                s.assign(a, 0, a);
            }
        }
        s
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    fn assign(&mut self, a: usize, b: usize, v: usize) {
        self.table[a * self.n + b] = v;
        self.position[a * self.n + v] = b;
        self.row_used[a][v] = true;
        self.col_used[b][v] = true;
    }

    fn unassign(&mut self, a: usize, b: usize) {
        let v = self.table[a * self.n + b];
        self.table[a * self.n + b] = UNSET;
        self.position[a * self.n + v] = UNSET;
        self.row_used[a][v] = false;
        self.col_used[b][v] = false;
    }

    /// Associativity on every triple that involves the freshly assigned
    /// entry `a·b = c` and whose other entries are all known.
    fn consistent(&self, a: usize, b: usize, c: usize) -> bool {
        let n = self.n;
        for x in 0..n {
            // (a·b)·x = a·(b·x)
            let cx = self.get(c, x);
            let bx = self.get(b, x);
            if cx != UNSET && bx != UNSET {
                let r = self.get(a, bx);
                if r != UNSET && r != cx {
                    return false;
                }
            }
            // (x·a)·b = x·(a·b)
            let xa = self.get(x, a);
            let xc = self.get(x, c);
            if xa != UNSET && xc != UNSET {
                let l = self.get(xa, b);
                if l != UNSET && l != xc {
                    return false;
                }
            }
            // (x·v)·b = x·(v·b) where x·v = a
            let v = self.position[x * n + a];
            if v != UNSET {
                let vb = self.get(v, b);
                if vb != UNSET {
                    let r = self.get(x, vb);
                    if r != UNSET && r != c {
                        return false;
                    }
                }
            }
            // a·(x·w) = (a·x)·w where x·w = b
            let w = self.position[x * n + b];
            if w != UNSET {
                let ax = self.get(a, x);
                if ax != UNSET {
                    let l = self.get(ax, w);
                    if l != UNSET && l != c {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, cell: usize) {
        let n = self.n;
        let inner = n - 1;
        if cell == inner * inner {
            let group = FiniteGroup::from_flat(n, self.table.clone())
                .expect("search only completes associative Latin squares with identity 0");
            self.out.push(group);
            return;
        }
        let (a, b) = (1 + cell / inner, 1 + cell % inner);
        for v in 0..n {
            if self.row_used[a][v] || self.col_used[b][v] {
                continue;
            }
            self.assign(a, b, v);
            if self.consistent(a, b, v) {
                self.run(cell + 1);
            }
            self.unassign(a, b);
        }
    }
}

/// Every group table on `0..n` with identity 0, in lexicographic order of the
/// row-major table. Backtracking over cells with Latin-square and partial
/// associativity pruning.
pub fn group_tables(n: usize, limits: &Limits) -> Result<Vec<FiniteGroup>> {
    if n > limits.max_enumeration_order {
        return Err(crate::Error::OrderBoundExceeded {
            order: n,
            bound: limits.max_enumeration_order,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut search = TableSearch::new(n);
    search.run(0);
    Ok(search.out)
}

/// All digroups `(star, ∘)` on the carrier of `star`, optionally restricted
/// to left skew braces. Ordered by the `∘` table.
pub fn enumerate_digroups(
    star: &FiniteGroup,
    braces_only: bool,
    limits: &Limits,
) -> Result<Vec<Digroup>> {
    let tables = group_tables(star.order(), limits)?;
    Ok(tables
        .into_iter()
        .map(|circ| Digroup::new(star.clone(), circ).expect("same order"))
        .filter(|d| !braces_only || d.is_skew_brace())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, GroupName};

    #[test]
    fn small_counts() {
        let limits = Limits::default();
        let counts: Vec<usize> = (1..=6)
            .map(|n| group_tables(n, &limits).unwrap().len())
            .collect();
        // sum over isomorphism types of (n-1)!/|Aut(G)|
        assert_eq!(counts, vec![1, 1, 1, 4, 6, 80]);
    }

    #[test]
    fn output_is_lexicographic() {
        let tables = group_tables(4, &Limits::default()).unwrap();
        assert!(tables.windows(2).all(|w| w[0].table() < w[1].table()));
    }

    #[test]
    fn z2_has_one_digroup() {
        let z2 = catalog::group(&GroupName::Cyclic(2)).unwrap();
        let all = enumerate_digroups(&z2, false, &Limits::default()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].circ(), &z2);
    }

    #[test]
    fn s3_braces_include_s3c6() {
        let s3 = catalog::group(&GroupName::S3).unwrap();
        let braces = enumerate_digroups(&s3, true, &Limits::default()).unwrap();
        assert!(braces.contains(&catalog::s3c6().unwrap()));
        assert!(braces.iter().all(Digroup::is_skew_brace));
    }

    #[test]
    fn bound_is_enforced() {
        assert!(group_tables(9, &Limits::default()).is_err());
    }
}
