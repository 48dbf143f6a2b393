//! Finite groups given by Cayley tables.
//!
//! Elements are the indices `0..n` and the identity is always index 0. A
//! [`FiniteGroup`] can only be obtained through validation, so every value
//! of the type satisfies the group axioms.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::map::ElementMap;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a square table and builds the group.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::MalformedTable(format!(
                "row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        Self::from_flat(n, rows.concat())
    }

    /// Same as [`FiniteGroup::from_rows`] for a row-major table of length `n*n`.
    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        if table.len() != n * n {
            return Err(Error::MalformedTable(format!(
                "expected {} entries, found {}",
                n * n,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= n) {
            return Err(Error::MalformedTable(format!(
                "entry {bad} out of range for order {n}"
            )));
        }
        for a in 0..n {
            if table[a] != a || table[a * n] != a {
                return Err(Error::NoIdentityAtZero);
            }
        }
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| table[a * n + b] == 0 && table[b * n + a] == 0)
                .ok_or(Error::MissingInverse(a))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup { n, table, inv })
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            n: 1,
            table: vec![0],
            inv: vec![0],
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.n)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `a⁻¹·b⁻¹·a·b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(self.inv(a), self.inv(b)), ab)
    }

    /// `g⁻¹·x·g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub(crate) fn check_index(&self, a: usize) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                order: self.n,
            })
        }
    }

    pub(crate) fn mask(&self, set: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.n];
        for &x in set {
            self.check_index(x)?;
            mask[x] = true;
        }
        Ok(mask)
    }

    pub fn is_subgroup(&self, set: &[usize]) -> Result<bool> {
        let mask = self.mask(set)?;
        Ok(self.is_subgroup_mask(&mask))
    }

    pub(crate) fn is_subgroup_mask(&self, mask: &[bool]) -> bool {
        if !mask[0] {
            return false;
        }
        let members: Vec<usize> = (0..self.n).filter(|&x| mask[x]).collect();
        members
            .iter()
            .all(|&a| mask[self.inv(a)] && members.iter().all(|&b| mask[self.mul(a, b)]))
    }

    pub fn is_normal(&self, set: &[usize]) -> Result<bool> {
        if !self.is_subgroup(set)? {
            return Err(Error::NotASubgroup);
        }
        let mask = self.mask(set)?;
        Ok(self.is_normal_mask(&mask))
    }

    pub(crate) fn is_normal_mask(&self, mask: &[bool]) -> bool {
        (0..self.n)
            .filter(|&s| mask[s])
            .all(|s| (0..self.n).all(|g| mask[self.conjugate(s, g)]))
    }

    /// The inner automorphism `x ↦ g⁻¹·x·g`.
    pub fn conjugation_map(&self, g: usize) -> Result<ElementMap> {
        self.check_index(g)?;
        Ok(ElementMap::from_images_unchecked(
            self.n,
            (0..self.n).map(|x| self.conjugate(x, g)).collect(),
        ))
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut mask = vec![false; self.n];
        mask[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.n).filter(|&x| mask[x]).collect()
    }

    /// A small generating set, chosen greedily: at each step the element that
    /// enlarges the generated subgroup most (ties broken by smallest index).
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![0];
        while current.len() < self.n {
            let mut best: Option<(usize, Vec<usize>)> = None;
            for g in 0..self.n {
                if current.binary_search(&g).is_ok() {
                    continue;
                }
                let mut candidate = gens.clone();
                candidate.push(g);
                let sub = self.generated_subgroup(&candidate);
                if best.as_ref().is_none_or(|(_, b)| sub.len() > b.len()) {
                    best = Some((g, sub));
                }
            }
            let (g, sub) = best.expect("proper subgroup has an outside element");
            gens.push(g);
            current = sub;
        }
        gens
    }

    /// Every subgroup, each as a sorted element list; the list itself is sorted
    /// by size, then lexicographically.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        for g in 0..self.n {
            let s = self.generated_subgroup(&[g]);
            if found.insert(s.clone()) {
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            for g in 0..self.n {
                if s.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(g);
                let t = self.generated_subgroup(&gens);
                if found.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        let mut all: Vec<_> = found.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        self.subgroups()
            .into_iter()
            .filter(|s| {
                let mask = self.mask(s).expect("subgroup indices are in range");
                self.is_normal_mask(&mask)
            })
            .collect()
    }

    /// All automorphisms, in lexicographic order of their image arrays.
    ///
    /// Enumerated by backtracking over the images of a generating set; each
    /// candidate assignment is extended to a homomorphism and kept when it is
    /// bijective.
    pub fn automorphisms(&self, limits: &Limits) -> Result<Vec<ElementMap>> {
        limits.check_order(self.n)?;
        let gens = self.generating_set();
        let orders: Vec<usize> = (0..self.n).map(|a| self.element_order(a)).collect();
        let mut out = Vec::new();
        let mut images = Vec::with_capacity(gens.len());
        self.automorphism_search(&gens, &orders, &mut images, &mut out);
        out.sort();
        Ok(out)
    }

    fn automorphism_search(
        &self,
        gens: &[usize],
        orders: &[usize],
        images: &mut Vec<usize>,
        out: &mut Vec<ElementMap>,
    ) {
        if images.len() == gens.len() {
            if let Some(f) = extend_homomorphism(self, self, gens, images) {
                if f.is_bijective() {
                    out.push(f);
                }
            }
            return;
        }
        let g = gens[images.len()];
        for h in 0..self.n {
            if orders[h] != orders[g] || images.contains(&h) {
                continue;
            }
            images.push(h);
            self.automorphism_search(gens, orders, images, out);
            images.pop();
        }
    }
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism `source → target` by
/// walking right multiplications by generators. Returns `None` when the
/// assignment is inconsistent. `gens` must generate `source`.
pub(crate) fn extend_homomorphism(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<ElementMap> {
    const UNSET: usize = usize::MAX;
    let mut f = vec![UNSET; source.order()];
    f[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&g, &h) in gens.iter().zip(images) {
            let y = source.mul(x, g);
            let v = target.mul(f[x], h);
            if f[y] == UNSET {
                f[y] = v;
                queue.push_back(y);
            } else if f[y] != v {
                return None;
            }
        }
    }
    debug_assert!(f.iter().all(|&v| v != UNSET), "gens must generate");
    Some(ElementMap::from_images_unchecked(target.order(), f))
}

fn check_map_shape(f: &ElementMap, source: &FiniteGroup, target: &FiniteGroup) -> Result<()> {
    if f.source_order() != source.order() {
        return Err(Error::SizeMismatch {
            left: f.source_order(),
            right: source.order(),
        });
    }
    if f.target_order() != target.order() {
        return Err(Error::SizeMismatch {
            left: f.target_order(),
            right: target.order(),
        });
    }
    Ok(())
}

/// `f(a·b) = f(a)·f(b)` for all pairs.
pub fn is_homomorphism(f: &ElementMap, source: &FiniteGroup, target: &FiniteGroup) -> Result<bool> {
    check_map_shape(f, source, target)?;
    let n = source.order();
    Ok((0..n)
        .all(|a| (0..n).all(|b| f.apply(source.mul(a, b)) == target.mul(f.apply(a), f.apply(b)))))
}

/// `f(a·b) = f(b)·f(a)` for all pairs.
pub fn is_antihomomorphism(
    f: &ElementMap,
    source: &FiniteGroup,
    target: &FiniteGroup,
) -> Result<bool> {
    check_map_shape(f, source, target)?;
    let n = source.order();
    Ok((0..n)
        .all(|a| (0..n).all(|b| f.apply(source.mul(a, b)) == target.mul(f.apply(b), f.apply(a)))))
}
