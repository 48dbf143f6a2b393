//! Digroups `(D, *, ∘)` and left skew braces.

use crate::error::{Error, Result};
use crate::group::{extend_homomorphism, is_homomorphism, FiniteGroup};
use crate::map::ElementMap;
use crate::Limits;

/// One carrier `0..n` with two group structures sharing the identity 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digroup {
    star: FiniteGroup,
    circ: FiniteGroup,
}

/// A validated ideal: normal in both groups with `a*I = a∘I` for every `a`.
/// Elements are sorted and always contain 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSet {
    order: usize,
    elements: Vec<usize>,
}

impl IdealSet {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Order of the digroup the ideal was validated against.
    pub fn parent_order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

pub(crate) fn normalize(set: &[usize]) -> Vec<usize> {
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

impl Digroup {
    pub fn new(star: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        if star.order() != circ.order() {
            return Err(Error::SizeMismatch {
                left: star.order(),
                right: circ.order(),
            });
        }
        Ok(Digroup { star, circ })
    }

    pub fn trivial_on(group: FiniteGroup) -> Self {
        Digroup {
            star: group.clone(),
            circ: group,
        }
    }

    pub fn order(&self) -> usize {
        self.star.order()
    }

    pub fn star(&self) -> &FiniteGroup {
        &self.star
    }

    pub fn circ(&self) -> &FiniteGroup {
        &self.circ
    }

    /// The digroup `(D, ∘, *)` with the operations swapped.
    pub fn swapped(&self) -> Digroup {
        Digroup {
            star: self.circ.clone(),
            circ: self.star.clone(),
        }
    }

    #[inline]
    pub(crate) fn lambda(&self, a: usize, b: usize) -> usize {
        self.star.mul(self.star.inv(a), self.circ.mul(a, b))
    }

    #[inline]
    pub(crate) fn lambda_inverse(&self, a: usize, c: usize) -> usize {
        self.circ.mul(self.circ.inv(a), self.star.mul(a, c))
    }

    /// `λ_a: b ↦ a⁻* * (a∘b)`.
    pub fn lambda_map(&self, a: usize) -> Result<ElementMap> {
        self.star.check_index(a)?;
        Ok(ElementMap::from_images_unchecked(
            self.order(),
            (0..self.order()).map(|b| self.lambda(a, b)).collect(),
        ))
    }

    /// `c ↦ a⁻∘ ∘ (a*c)`, the two-sided inverse of `λ_a`.
    pub fn lambda_inverse_map(&self, a: usize) -> Result<ElementMap> {
        self.star.check_index(a)?;
        Ok(ElementMap::from_images_unchecked(
            self.order(),
            (0..self.order())
                .map(|c| self.lambda_inverse(a, c))
                .collect(),
        ))
    }

    /// Exhaustive check of `a∘(b*c) = (a∘b) * a⁻* * (a∘c)` over all triples.
    pub fn is_skew_brace(&self) -> bool {
        self.first_brace_violation().is_none()
    }

    /// A triple `(a, b, c)` violating the brace identity, if any.
    pub fn first_brace_violation(&self) -> Option<(usize, usize, usize)> {
        let (s, c) = (&self.star, &self.circ);
        let n = self.order();
        for a in 0..n {
            let a_inv = s.inv(a);
            for b in 0..n {
                let left_factor = s.mul(c.mul(a, b), a_inv);
                for x in 0..n {
                    if c.mul(a, s.mul(b, x)) != s.mul(left_factor, c.mul(a, x)) {
                        return Some((a, b, x));
                    }
                }
            }
        }
        None
    }

    /// Brace test through the λ-map: every `λ_a` must be one of the
    /// enumerated automorphisms of `(D,*)` and `λ_{a∘b} = λ_a ∘ λ_b`.
    pub fn is_skew_brace_via_lambda(&self, limits: &Limits) -> Result<bool> {
        let auts = self.star.automorphisms(limits)?;
        let lambdas: Vec<ElementMap> = (0..self.order())
            .map(|a| self.lambda_map(a).expect("index in range"))
            .collect();
        if !lambdas.iter().all(|l| auts.binary_search(l).is_ok()) {
            return Ok(false);
        }
        for a in 0..self.order() {
            for b in 0..self.order() {
                let prod = lambdas[a].compose(&lambdas[b])?;
                if lambdas[self.circ.mul(a, b)] != prod {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_subdigroup(&self, set: &[usize]) -> Result<bool> {
        Ok(self.star.is_subgroup(set)? && self.circ.is_subgroup(set)?)
    }

    /// Every subdigroup, sorted by size and then lexicographically.
    pub fn subdigroups(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        limits.check_order(self.order())?;
        Ok(self
            .star
            .subgroups()
            .into_iter()
            .filter(|s| self.circ.is_subgroup(s).expect("in range"))
            .collect())
    }

    /// Ideal test through cosets: normal in both groups and `a*I = a∘I` as
    /// sets for every `a`.
    pub fn is_ideal(&self, set: &[usize]) -> Result<bool> {
        let mask = self.star.mask(set)?;
        Ok(self.is_bi_normal(&mask) && self.cosets_agree(&mask))
    }

    /// Ideal test through λ: normal in both groups and `λ_a(I) ⊆ I` for
    /// every `a`.
    pub fn is_ideal_via_lambda(&self, set: &[usize]) -> Result<bool> {
        let mask = self.star.mask(set)?;
        Ok(self.is_bi_normal(&mask) && self.lambda_stable(&mask))
    }

    fn is_bi_normal(&self, mask: &[bool]) -> bool {
        self.star.is_subgroup_mask(mask)
            && self.circ.is_subgroup_mask(mask)
            && self.star.is_normal_mask(mask)
            && self.circ.is_normal_mask(mask)
    }

    fn cosets_agree(&self, mask: &[bool]) -> bool {
        let n = self.order();
        let members: Vec<usize> = (0..n).filter(|&x| mask[x]).collect();
        (0..n).all(|a| {
            let mut star_coset: Vec<usize> = members.iter().map(|&i| self.star.mul(a, i)).collect();
            let mut circ_coset: Vec<usize> = members.iter().map(|&i| self.circ.mul(a, i)).collect();
            star_coset.sort_unstable();
            circ_coset.sort_unstable();
            star_coset == circ_coset
        })
    }

    pub(crate) fn lambda_stable(&self, mask: &[bool]) -> bool {
        let n = self.order();
        (0..n)
            .filter(|&i| mask[i])
            .all(|i| (0..n).all(|a| mask[self.lambda(a, i)]))
    }

    /// Validates `set` as an ideal.
    pub fn ideal(&self, set: &[usize]) -> Result<IdealSet> {
        if !self.is_ideal(set)? {
            return Err(Error::NotAnIdeal);
        }
        Ok(IdealSet {
            order: self.order(),
            elements: normalize(set),
        })
    }

    pub(crate) fn ideal_unchecked(&self, set: Vec<usize>) -> IdealSet {
        debug_assert!(self.is_ideal(&set).unwrap_or(false));
        IdealSet {
            order: self.order(),
            elements: set,
        }
    }

    pub fn zero_ideal(&self) -> IdealSet {
        self.ideal_unchecked(vec![0])
    }

    pub fn full_ideal(&self) -> IdealSet {
        self.ideal_unchecked((0..self.order()).collect())
    }

    /// All ideals: normal subgroups of `(D,*)` filtered by the ideal test.
    /// Sorted by size, then lexicographically.
    pub fn ideals(&self, limits: &Limits) -> Result<Vec<IdealSet>> {
        limits.check_order(self.order())?;
        Ok(self
            .star
            .normal_subgroups()
            .into_iter()
            .filter(|s| self.is_ideal(s).expect("in range"))
            .map(|s| self.ideal_unchecked(s))
            .collect())
    }

    fn check_ideal_parent(&self, ideal: &IdealSet) -> Result<()> {
        if ideal.order != self.order() {
            return Err(Error::SizeMismatch {
                left: ideal.order,
                right: self.order(),
            });
        }
        Ok(())
    }

    /// The quotient digroup `D/I` and the projection onto it. Cosets are
    /// numbered by increasing minimal member, so the coset of 0 is 0.
    pub fn quotient(&self, ideal: &IdealSet) -> Result<(Digroup, ElementMap)> {
        self.check_ideal_parent(ideal)?;
        if !self.is_ideal(&ideal.elements)? {
            return Err(Error::NotAnIdeal);
        }
        let n = self.order();
        const UNSET: usize = usize::MAX;
        let mut class = vec![UNSET; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if class[a] != UNSET {
                continue;
            }
            let id = reps.len();
            reps.push(a);
            for &i in &ideal.elements {
                class[self.star.mul(a, i)] = id;
            }
        }
        let m = reps.len();
        let class_ref = &class;
        let build = |g: &FiniteGroup| {
            let table = reps
                .iter()
                .flat_map(|&a| reps.iter().map(move |&b| class_ref[g.mul(a, b)]))
                .collect();
            FiniteGroup::from_flat(m, table)
        };
        let quotient = Digroup::new(build(&self.star)?, build(&self.circ)?)?;
        Ok((quotient, ElementMap::from_images_unchecked(m, class)))
    }

    /// Restriction to a subdigroup, relabelled by the sorted member list; the
    /// returned vector maps local indices back into `self`.
    pub fn restrict(&self, set: &[usize]) -> Result<(Digroup, Vec<usize>)> {
        if !self.is_subdigroup(set)? {
            return Err(Error::NotASubdigroup);
        }
        let members = normalize(set);
        let mut local = vec![usize::MAX; self.order()];
        for (i, &x) in members.iter().enumerate() {
            local[x] = i;
        }
        let build = |g: &FiniteGroup| {
            let table = members
                .iter()
                .flat_map(|&a| {
                    members
                        .iter()
                        .map(|&b| local[g.mul(a, b)])
                        .collect::<Vec<_>>()
                })
                .collect();
            FiniteGroup::from_flat(members.len(), table)
        };
        Ok((
            Digroup::new(build(&self.star)?, build(&self.circ)?)?,
            members,
        ))
    }

    /// True when `f: self → other` is a homomorphism for both operations.
    pub fn is_morphism_to(&self, other: &Digroup, f: &ElementMap) -> Result<bool> {
        Ok(is_homomorphism(f, &self.star, &other.star)?
            && is_homomorphism(f, &self.circ, &other.circ)?)
    }

    /// A digroup isomorphism `self → other`, if one exists.
    ///
    /// Tries every assignment of images to a generating set of `(D,∘)` whose
    /// `*`- and `∘`-orders match, extends it as a `∘`-homomorphism and keeps
    /// the first bijection that also respects `*`.
    pub fn isomorphism_to(&self, other: &Digroup, limits: &Limits) -> Result<Option<ElementMap>> {
        limits.check_order(self.order())?;
        if self.order() != other.order() {
            return Ok(None);
        }
        let profile = |d: &Digroup, a: usize| (d.star.element_order(a), d.circ.element_order(a));
        let mine: Vec<_> = (0..self.order()).map(|a| profile(self, a)).collect();
        let theirs: Vec<_> = (0..other.order()).map(|a| profile(other, a)).collect();
        let mut sorted_mine = mine.clone();
        let mut sorted_theirs = theirs.clone();
        sorted_mine.sort_unstable();
        sorted_theirs.sort_unstable();
        if sorted_mine != sorted_theirs {
            return Ok(None);
        }
        let gens = self.circ.generating_set();
        let mut images = Vec::with_capacity(gens.len());
        Ok(self.iso_search(other, &gens, &mine, &theirs, &mut images))
    }

    fn iso_search(
        &self,
        other: &Digroup,
        gens: &[usize],
        mine: &[(usize, usize)],
        theirs: &[(usize, usize)],
        images: &mut Vec<usize>,
    ) -> Option<ElementMap> {
        if images.len() == gens.len() {
            let f = extend_homomorphism(&self.circ, &other.circ, gens, images)?;
            let ok = f.is_bijective()
                && is_homomorphism(&f, &self.star, &other.star).expect("orders match");
            return ok.then_some(f);
        }
        let g = gens[images.len()];
        for h in 0..other.order() {
            if theirs[h] != mine[g] || images.contains(&h) {
                continue;
            }
            images.push(h);
            if let Some(f) = self.iso_search(other, gens, mine, theirs, images) {
                return Some(f);
            }
            images.pop();
        }
        None
    }

    /// Relabels the carrier by the permutation `perm` (element `x` becomes
    /// `perm[x]`); `perm` must fix 0.
    pub fn relabel(&self, perm: &ElementMap) -> Result<Digroup> {
        if !perm.is_bijective() || perm.source_order() != self.order() || !perm.fixes_zero() {
            return Err(Error::MalformedTable(
                "relabelling must be a permutation fixing 0".into(),
            ));
        }
        let n = self.order();
        let inv = perm.inverse().expect("bijective");
        let build = |g: &FiniteGroup| {
            let table = (0..n)
                .flat_map(|a| {
                    let inv = &inv;
                    (0..n).map(move |b| perm.apply(g.mul(inv.apply(a), inv.apply(b))))
                })
                .collect();
            FiniteGroup::from_flat(n, table)
        };
        Digroup::new(build(&self.star)?, build(&self.circ)?)
    }
}
