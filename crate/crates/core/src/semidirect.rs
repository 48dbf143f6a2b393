//! Inner and outer semidirect products of digroups.
//!
//! An inner decomposition `D = B ∘ I` (B a subdigroup, I an ideal, B ∩ I
//! trivial) is the same thing as an idempotent digroup endomorphism with image
//! B and kernel I. Such a decomposition yields an action triple
//! `(φ*, φ∘, Λ)` of `Y = B` on `K = I`:
//!
//! - `φ*_y(k) = y⁻* * k * y`
//! - `φ∘_y(k) = y⁻∘ ∘ k ∘ y`
//! - `Λ_y(k)  = y⁻* * (y ∘ k)`
//!
//! Conversely any triple of that shape (two antihomomorphisms into the
//! automorphism groups and a pointed map into the permutations of K) defines
//! an outer product on `Y × K` with
//!
//! - `(y,k) + (y',k') = (y*y', Λ_{y*y'}⁻¹(φ*_{y'}(Λ_y(k)) * Λ_{y'}(k')))`
//! - `(y,k) ∘ (y',k') = (y∘y', φ∘_{y'}(k) ∘ k')`
//!
//! and `α(y,k) = y∘k` is an isomorphism from that outer product back onto D.
//! Pairs are encoded as the index `y·|K| + k`.

use crate::digroup::{normalize, Digroup, IdealSet};
use crate::error::{Error, Result};
use crate::group::{extend_homomorphism, is_homomorphism, FiniteGroup};
use crate::map::ElementMap;
use crate::Limits;

/// An action triple `(φ*, φ∘, Λ)` of a digroup `Y` on a digroup `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigroupAction {
    y: Digroup,
    k: Digroup,
    phi_star: Vec<ElementMap>,
    phi_circ: Vec<ElementMap>,
    lambda: Vec<ElementMap>,
    lambda_inv: Vec<ElementMap>,
}

fn invalid(msg: String) -> Error {
    Error::InvalidAction(msg)
}

/// Checks `y ↦ maps[y]` is an antihomomorphism from `source` into `Aut(target)`.
fn check_anti_action(
    name: &str,
    maps: &[ElementMap],
    source: &FiniteGroup,
    target: &FiniteGroup,
) -> Result<()> {
    for (y, f) in maps.iter().enumerate() {
        if !f.is_bijective() || !is_homomorphism(f, target, target)? {
            return Err(invalid(format!("{name}[{y}] is not an automorphism")));
        }
    }
    for a in 0..source.order() {
        for b in 0..source.order() {
            if maps[source.mul(a, b)] != maps[b].compose(&maps[a])? {
                return Err(invalid(format!(
                    "{name} is not an antihomomorphism at ({a}, {b})"
                )));
            }
        }
    }
    Ok(())
}

impl DigroupAction {
    pub fn new(
        y: Digroup,
        k: Digroup,
        phi_star: Vec<ElementMap>,
        phi_circ: Vec<ElementMap>,
        lambda: Vec<ElementMap>,
    ) -> Result<Self> {
        let (ny, nk) = (y.order(), k.order());
        for (name, maps) in [
            ("phi_star", &phi_star),
            ("phi_circ", &phi_circ),
            ("lambda", &lambda),
        ] {
            if maps.len() != ny {
                return Err(invalid(format!(
                    "{name} has {} maps, expected {ny}",
                    maps.len()
                )));
            }
            if let Some(f) = maps
                .iter()
                .find(|f| f.source_order() != nk || f.target_order() != nk)
            {
                return Err(invalid(format!(
                    "{name} map has shape {}→{}, expected {nk}→{nk}",
                    f.source_order(),
                    f.target_order()
                )));
            }
        }
        check_anti_action("phi_star", &phi_star, y.star(), k.star())?;
        check_anti_action("phi_circ", &phi_circ, y.circ(), k.circ())?;
        if !lambda[0].is_identity() {
            return Err(invalid("lambda[0] is not the identity".into()));
        }
        let mut lambda_inv = Vec::with_capacity(ny);
        for (i, f) in lambda.iter().enumerate() {
            if !f.fixes_zero() {
                return Err(invalid(format!("lambda[{i}] does not fix 0")));
            }
            lambda_inv.push(
                f.inverse()
                    .ok_or_else(|| invalid(format!("lambda[{i}] is not a bijection")))?,
            );
        }
        Ok(DigroupAction {
            y,
            k,
            phi_star,
            phi_circ,
            lambda,
            lambda_inv,
        })
    }

    /// The action of `Y` on itself by conjugation in both groups, with
    /// `Λ = λ^Y`.
    pub fn natural(y: &Digroup) -> Result<Self> {
        let n = y.order();
        let collect =
            |f: &dyn Fn(usize) -> Result<ElementMap>| (0..n).map(f).collect::<Result<Vec<_>>>();
        DigroupAction::new(
            y.clone(),
            y.clone(),
            collect(&|a| y.star().conjugation_map(a))?,
            collect(&|a| y.circ().conjugation_map(a))?,
            collect(&|a| y.lambda_map(a))?,
        )
    }

    pub fn acting(&self) -> &Digroup {
        &self.y
    }

    pub fn acted_on(&self) -> &Digroup {
        &self.k
    }

    pub fn phi_star(&self) -> &[ElementMap] {
        &self.phi_star
    }

    pub fn phi_circ(&self) -> &[ElementMap] {
        &self.phi_circ
    }

    pub fn lambda(&self) -> &[ElementMap] {
        &self.lambda
    }

    pub fn order(&self) -> usize {
        self.y.order() * self.k.order()
    }

    #[inline]
    pub fn pair(&self, y: usize, k: usize) -> usize {
        y * self.k.order() + k
    }

    #[inline]
    pub fn unpair(&self, index: usize) -> (usize, usize) {
        (index / self.k.order(), index % self.k.order())
    }

    #[inline]
    fn ps(&self, y: usize, k: usize) -> usize {
        self.phi_star[y].apply(k)
    }

    #[inline]
    fn pc(&self, y: usize, k: usize) -> usize {
        self.phi_circ[y].apply(k)
    }

    #[inline]
    fn lam(&self, y: usize, k: usize) -> usize {
        self.lambda[y].apply(k)
    }

    #[inline]
    fn lam_inv(&self, y: usize, k: usize) -> usize {
        self.lambda_inv[y].apply(k)
    }

    /// `(y,k) + (y',k')`.
    pub fn plus(&self, (y, k): (usize, usize), (y2, k2): (usize, usize)) -> (usize, usize) {
        let ks = self.k.star();
        let yy = self.y.star().mul(y, y2);
        let inner = ks.mul(self.ps(y2, self.lam(y, k)), self.lam(y2, k2));
        (yy, self.lam_inv(yy, inner))
    }

    /// `(y,k) ∘ (y',k')`.
    pub fn circ(&self, (y, k): (usize, usize), (y2, k2): (usize, usize)) -> (usize, usize) {
        (
            self.y.circ().mul(y, y2),
            self.k.circ().mul(self.pc(y2, k), k2),
        )
    }

    fn table(
        &self,
        op: impl Fn((usize, usize), (usize, usize)) -> (usize, usize),
    ) -> Result<FiniteGroup> {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (y, k) = op(self.unpair(a), self.unpair(b));
                table.push(self.pair(y, k));
            }
        }
        FiniteGroup::from_flat(n, table)
    }

    /// The digroup `(Y × K, +, ∘)`.
    pub fn outer_product(&self) -> Result<Digroup> {
        let plus = self.table(|a, b| self.plus(a, b))?;
        let circ = self.table(|a, b| self.circ(a, b))?;
        Digroup::new(plus, circ)
    }

    /// The ordinary semidirect product `(Y ⋉_{φ*} K, *)` with
    /// `(y,k)*(y',k') = (y*y', φ*_{y'}(k) * k')`.
    pub fn star_semidirect(&self) -> Result<FiniteGroup> {
        self.table(|(y, k), (y2, k2)| {
            (
                self.y.star().mul(y, y2),
                self.k.star().mul(self.ps(y2, k), k2),
            )
        })
    }

    /// `β(y,k) = (y, Λ_y(k))`.
    pub fn beta(&self) -> ElementMap {
        let images = (0..self.order())
            .map(|i| {
                let (y, k) = self.unpair(i);
                self.pair(y, self.lam(y, k))
            })
            .collect();
        ElementMap::from_images_unchecked(self.order(), images)
    }

    /// `(y,k) ↦ (y, Λ_y⁻¹(k))`.
    pub fn beta_inverse(&self) -> ElementMap {
        let images = (0..self.order())
            .map(|i| {
                let (y, k) = self.unpair(i);
                self.pair(y, self.lam_inv(y, k))
            })
            .collect();
        ElementMap::from_images_unchecked(self.order(), images)
    }

    /// Hypotheses of the brace criterion: both sides are skew braces and `Λ`
    /// is a homomorphism `(Y,∘) → Aut(K,*)`.
    pub fn brace_hypotheses(&self) -> std::result::Result<(), NotBraceReason> {
        if !self.y.is_skew_brace() {
            return Err(NotBraceReason::ActingNotBrace);
        }
        if !self.k.is_skew_brace() {
            return Err(NotBraceReason::ActedOnNotBrace);
        }
        let ks = self.k.star();
        for (y, f) in self.lambda.iter().enumerate() {
            if !is_homomorphism(f, ks, ks).expect("shapes checked") {
                return Err(NotBraceReason::LambdaNotAutomorphism(y));
            }
        }
        for a in 0..self.y.order() {
            for b in 0..self.y.order() {
                let prod = self.lambda[a]
                    .compose(&self.lambda[b])
                    .expect("shapes checked");
                if self.lambda[self.y.circ().mul(a, b)] != prod {
                    return Err(NotBraceReason::LambdaNotHomomorphism(a, b));
                }
            }
        }
        Ok(())
    }

    /// Second component of `(y,k) ∘ ((y',k') + (y'',k''))`; independent of `y`.
    pub fn brace_lhs(&self, y1: usize, y2: usize, k: usize, k1: usize, k2: usize) -> usize {
        let (ys, ks, kc) = (self.y.star(), self.k.star(), self.k.circ());
        let s = ys.mul(y1, y2);
        kc.mul(
            self.pc(s, k),
            self.lam_inv(s, ks.mul(self.ps(y2, self.lam(y1, k1)), self.lam(y2, k2))),
        )
    }

    /// Second component of `(y,k)∘(y',k') − (y,k) + (y,k)∘(y'',k'')`,
    /// simplified under the brace hypotheses:
    /// `Λ_{y∘(y'*y'')}⁻¹( φ*_{λ_y(y'')}(Λ_{y∘y'}(φ∘_{y'}(k)∘k') * Λ_y(k)⁻*) * Λ_{y∘y''}(φ∘_{y''}(k)∘k'') )`.
    pub fn brace_rhs(
        &self,
        y: usize,
        y1: usize,
        y2: usize,
        k: usize,
        k1: usize,
        k2: usize,
    ) -> usize {
        let (ys, yc, ks, kc) = (self.y.star(), self.y.circ(), self.k.star(), self.k.circ());
        let z = ks.mul(
            self.lam(yc.mul(y, y1), kc.mul(self.pc(y1, k), k1)),
            ks.inv(self.lam(y, k)),
        );
        let w = self.lam(yc.mul(y, y2), kc.mul(self.pc(y2, k), k2));
        self.lam_inv(
            yc.mul(y, ys.mul(y1, y2)),
            ks.mul(self.ps(self.y.lambda(y, y2), z), w),
        )
    }

    /// The right-hand side at `y = 1`:
    /// `Λ_{y'*y''}⁻¹( φ*_{y''}(Λ_{y'}(φ∘_{y'}(k)∘k') * k⁻*) * Λ_{y''}(φ∘_{y''}(k)∘k'') )`.
    pub fn brace_middle(&self, y1: usize, y2: usize, k: usize, k1: usize, k2: usize) -> usize {
        let (ys, ks, kc) = (self.y.star(), self.k.star(), self.k.circ());
        let z = ks.mul(self.lam(y1, kc.mul(self.pc(y1, k), k1)), ks.inv(k));
        let w = self.lam(y2, kc.mul(self.pc(y2, k), k2));
        self.lam_inv(ys.mul(y1, y2), ks.mul(self.ps(y2, z), w))
    }

    fn check_brace_bound(&self, limits: &Limits) -> Result<()> {
        limits.check_order(self.order())
    }

    /// Decides whether the outer product is a left skew brace from the data
    /// of the action alone: hypotheses first, then the equation
    /// `brace_lhs = brace_rhs` over all `(y, y', y'', k, k', k'')`.
    pub fn brace_condition(&self, limits: &Limits) -> Result<BraceVerdict> {
        self.check_brace_bound(limits)?;
        if let Err(reason) = self.brace_hypotheses() {
            return Ok(BraceVerdict::NotBrace(reason));
        }
        let (ny, nk) = (self.y.order(), self.k.order());
        for y1 in 0..ny {
            for y2 in 0..ny {
                for k in 0..nk {
                    for k1 in 0..nk {
                        for k2 in 0..nk {
                            let lhs = self.brace_lhs(y1, y2, k, k1, k2);
                            for y in 0..ny {
                                if lhs != self.brace_rhs(y, y1, y2, k, k1, k2) {
                                    return Ok(BraceVerdict::NotBrace(NotBraceReason::Equation {
                                        y,
                                        y1,
                                        y2,
                                        k,
                                        k1,
                                        k2,
                                    }));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(BraceVerdict::Brace)
    }

    /// The brace equation split in two: `lhs = middle` and `middle = rhs(y)`
    /// for all `y`.
    pub fn split_brace_condition(&self, limits: &Limits) -> Result<SplitVerdict> {
        self.check_brace_bound(limits)?;
        let (ny, nk) = (self.y.order(), self.k.order());
        let mut first = true;
        let mut second = true;
        for y1 in 0..ny {
            for y2 in 0..ny {
                for k in 0..nk {
                    for k1 in 0..nk {
                        for k2 in 0..nk {
                            let middle = self.brace_middle(y1, y2, k, k1, k2);
                            first &= self.brace_lhs(y1, y2, k, k1, k2) == middle;
                            second &=
                                (0..ny).all(|y| self.brace_rhs(y, y1, y2, k, k1, k2) == middle);
                        }
                    }
                }
            }
        }
        Ok(SplitVerdict {
            hypotheses: self.brace_hypotheses(),
            first,
            second,
        })
    }

    /// The four identities relating the generators `(y,1)` and `(1,k)`:
    /// `(y,1)∘(1,k) = (y,k)`, `(1,k)∘(y,1) = (y,φ∘_y(k))`,
    /// `(y,1)+(1,k) = (y,Λ_y⁻¹(k))`, `(1,k)+(y,1) = (y,Λ_y⁻¹(φ*_y(k)))`,
    /// each evaluated in the outer product for every `y, k`.
    pub fn generator_identities(&self) -> Result<[bool; 4]> {
        let d = self.outer_product()?;
        let mut ok = [true; 4];
        for y in 0..self.y.order() {
            for k in 0..self.k.order() {
                let (py, pk) = (self.pair(y, 0), self.pair(0, k));
                ok[0] &= d.circ().mul(py, pk) == self.pair(y, k);
                ok[1] &= d.circ().mul(pk, py) == self.pair(y, self.pc(y, k));
                ok[2] &= d.star().mul(py, pk) == self.pair(y, self.lam_inv(y, k));
                ok[3] &= d.star().mul(pk, py) == self.pair(y, self.lam_inv(y, self.ps(y, k)));
            }
        }
        Ok(ok)
    }

    /// Closed form of `λ_{(y,k)}(y',k')` in the outer product:
    /// `(λ_y(y'), Λ_{λ_y(y')}⁻¹( φ*_{λ_y(y')}(Λ_y(k))⁻* * Λ_{y∘y'}(φ∘_{y'}(k)∘k') ))`.
    pub fn lambda_closed_form(
        &self,
        (y, k): (usize, usize),
        (y1, k1): (usize, usize),
    ) -> (usize, usize) {
        let (ks, kc) = (self.k.star(), self.k.circ());
        let ly = self.y.lambda(y, y1);
        let head = ks.inv(self.ps(ly, self.lam(y, k)));
        let tail = self.lam(self.y.circ().mul(y, y1), kc.mul(self.pc(y1, k), k1));
        (ly, self.lam_inv(ly, ks.mul(head, tail)))
    }

    /// Compares the closed form against `−(y,k) + ((y,k)∘(y',k'))` computed in
    /// the outer product.
    pub fn lambda_product_formula(
        &self,
        outer: &Digroup,
        a: (usize, usize),
        b: (usize, usize),
    ) -> LambdaFormulaCheck {
        let direct = self.unpair(outer.lambda(self.pair(a.0, a.1), self.pair(b.0, b.1)));
        LambdaFormulaCheck {
            closed_form: self.lambda_closed_form(a, b),
            direct,
        }
    }

    /// `−(y,k)` three ways: from the `+` table, as
    /// `(y⁻*, Λ_{y⁻*}⁻¹(φ*_{y⁻*}(Λ_y(k))⁻*))`, and with `(φ*_y)⁻¹` in place
    /// of `φ*_{y⁻*}`.
    pub fn negation_formula(&self, outer: &Digroup, (y, k): (usize, usize)) -> NegationCheck {
        let (ys, ks) = (self.y.star(), self.k.star());
        let y_inv = ys.inv(y);
        let via_element = ks.inv(self.ps(y_inv, self.lam(y, k)));
        let phi_y_inverse = self.phi_star[y].inverse().expect("automorphism");
        let via_map = ks.inv(phi_y_inverse.apply(self.lam(y, k)));
        NegationCheck {
            direct: self.unpair(outer.star().inv(self.pair(y, k))),
            via_inverse_element: (y_inv, self.lam_inv(y_inv, via_element)),
            via_inverse_map: (y_inv, self.lam_inv(y_inv, via_map)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotBraceReason {
    ActingNotBrace,
    ActedOnNotBrace,
    /// `Λ_y` is not an automorphism of `(K,*)`.
    LambdaNotAutomorphism(usize),
    /// `Λ_{a∘b} ≠ Λ_a Λ_b`.
    LambdaNotHomomorphism(usize, usize),
    Equation {
        y: usize,
        y1: usize,
        y2: usize,
        k: usize,
        k1: usize,
        k2: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraceVerdict {
    Brace,
    NotBrace(NotBraceReason),
}

impl BraceVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, BraceVerdict::Brace)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitVerdict {
    pub hypotheses: std::result::Result<(), NotBraceReason>,
    pub first: bool,
    pub second: bool,
}

impl SplitVerdict {
    /// Hypotheses and both equations.
    pub fn holds(&self) -> bool {
        self.hypotheses.is_ok() && self.first && self.second
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaFormulaCheck {
    pub closed_form: (usize, usize),
    pub direct: (usize, usize),
}

impl LambdaFormulaCheck {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.direct
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NegationCheck {
    pub direct: (usize, usize),
    pub via_inverse_element: (usize, usize),
    pub via_inverse_map: (usize, usize),
}

impl NegationCheck {
    pub fn agrees(&self) -> bool {
        self.direct == self.via_inverse_element && self.direct == self.via_inverse_map
    }
}

/// A verified inner semidirect decomposition of a digroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerDecomposition {
    parent: Digroup,
    e: ElementMap,
    b: Vec<usize>,
    i: IdealSet,
}

impl InnerDecomposition {
    /// Builds the decomposition from a subdigroup and an ideal with
    /// `B ∘ I = D` and `B ∩ I = {0}`; the idempotent sends `b∘i` to `b`.
    pub fn new(parent: &Digroup, b: &[usize], i: &IdealSet) -> Result<Self> {
        if !parent.is_subdigroup(b)? {
            return Err(Error::NotASubdigroup);
        }
        if i.parent_order() != parent.order() || !parent.is_ideal(i.elements())? {
            return Err(Error::NotAnIdeal);
        }
        let b = normalize(b);
        let n = parent.order();
        if b.len() * i.len() != n {
            return Err(Error::DecompositionInvalid(format!(
                "|B|·|I| = {}·{} differs from {n}",
                b.len(),
                i.len()
            )));
        }
        const UNSET: usize = usize::MAX;
        let mut e = vec![UNSET; n];
        for &x in &b {
            for &y in i.elements() {
                let a = parent.circ().mul(x, y);
                if e[a] != UNSET {
                    return Err(Error::DecompositionInvalid(format!(
                        "{a} factors twice as b∘i"
                    )));
                }
                e[a] = x;
            }
        }
        let e = ElementMap::from_images_unchecked(n, e);
        if !parent.is_morphism_to(parent, &e)? {
            return Err(Error::DecompositionInvalid(
                "b∘i ↦ b is not a digroup endomorphism".into(),
            ));
        }
        Ok(InnerDecomposition {
            parent: parent.clone(),
            e,
            b,
            i: i.clone(),
        })
    }

    /// Builds the decomposition `(image(e), ker(e))` of an idempotent digroup
    /// endomorphism.
    pub fn from_endomorphism(parent: &Digroup, e: &ElementMap) -> Result<Self> {
        let n = parent.order();
        if e.source_order() != n || e.target_order() != n {
            return Err(Error::SizeMismatch {
                left: e.source_order(),
                right: n,
            });
        }
        if !parent.is_morphism_to(parent, e)? || e.compose(e)? != *e {
            return Err(Error::DecompositionInvalid(
                "not an idempotent digroup endomorphism".into(),
            ));
        }
        let image = normalize(e.images());
        let kernel: Vec<usize> = (0..n).filter(|&a| e.apply(a) == 0).collect();
        let ideal = parent.ideal(&kernel)?;
        let dec = InnerDecomposition::new(parent, &image, &ideal)?;
        debug_assert_eq!(&dec.e, e);
        Ok(dec)
    }

    pub fn parent(&self) -> &Digroup {
        &self.parent
    }

    pub fn idempotent(&self) -> &ElementMap {
        &self.e
    }

    pub fn subdigroup(&self) -> &[usize] {
        &self.b
    }

    pub fn ideal(&self) -> &IdealSet {
        &self.i
    }

    /// `B = D, I = {0}` or `B = {0}, I = D`.
    pub fn is_trivial(&self) -> bool {
        self.b.len() == 1 || self.i.len() == 1
    }

    /// The components `i2, i3, i4` of `a = b∘i1 = i2∘b = b*i3 = i4*b`:
    /// `i2 = (φ∘_b)⁻¹(i1)`, `i3 = λ_b(i1)`, `i4 = (φ*_b)⁻¹(λ_b(i1))`.
    /// Each is checked against the corresponding factorization of `a`.
    pub fn component_formulas(&self, b: usize, i1: usize) -> Result<Components> {
        let d = &self.parent;
        if self.b.binary_search(&b).is_err() {
            return Err(Error::ElementNotInComponent(b));
        }
        if !self.i.contains(i1) {
            return Err(Error::ElementNotInComponent(i1));
        }
        let conj_circ = d
            .circ()
            .conjugation_map(b)?
            .inverse()
            .expect("automorphism");
        let conj_star = d
            .star()
            .conjugation_map(b)?
            .inverse()
            .expect("automorphism");
        let i2 = conj_circ.apply(i1);
        let i3 = d.lambda(b, i1);
        let i4 = conj_star.apply(i3);
        let a = d.circ().mul(b, i1);
        let ok = [
            d.circ().mul(i2, b) == a,
            d.star().mul(b, i3) == a,
            d.star().mul(i4, b) == a,
        ];
        if ok.iter().any(|x| !x) || ![i2, i3, i4].iter().all(|&x| self.i.contains(x)) {
            return Err(Error::DecompositionInvalid(format!(
                "component formulas do not factor {a} for b = {b}, i1 = {i1}"
            )));
        }
        Ok(Components { a, i2, i3, i4 })
    }

    /// The action triple of `Y = B` on `K = I`, both relabelled by their
    /// sorted member lists.
    pub fn extract_action(&self) -> Result<DigroupAction> {
        let d = &self.parent;
        let (y, b_members) = d.restrict(&self.b)?;
        let (k, i_members) = d.restrict(self.i.elements())?;
        let mut local = vec![usize::MAX; d.order()];
        for (idx, &x) in i_members.iter().enumerate() {
            local[x] = idx;
        }
        let build = |what: &str, f: &dyn Fn(usize, usize) -> usize| -> Result<Vec<ElementMap>> {
            b_members
                .iter()
                .map(|&yg| {
                    let images = i_members
                        .iter()
                        .map(|&kg| {
                            let v = f(yg, kg);
                            if local[v] == usize::MAX {
                                Err(Error::KernelNotInvariant(format!(
                                    "{what} of {kg} by {yg} leaves the ideal"
                                )))
                            } else {
                                Ok(local[v])
                            }
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(ElementMap::from_images_unchecked(i_members.len(), images))
                })
                .collect()
        };
        let phi_star = build("*-conjugate", &|yg, kg| d.star().conjugate(kg, yg))?;
        let phi_circ = build("∘-conjugate", &|yg, kg| d.circ().conjugate(kg, yg))?;
        let lambda = build("λ-image", &|yg, kg| d.lambda(yg, kg))?;
        DigroupAction::new(y, k, phi_star, phi_circ, lambda)
    }

    /// `α(y,k) = y∘k` from the outer product of the extracted action onto
    /// the parent. Verifies that α is a digroup isomorphism, that β is a
    /// bijection with inverse `(y,k) ↦ (y,Λ_y⁻¹(k))` and a homomorphism
    /// `(Y×K,+) → (Y ⋉_{φ*} K, *)`, that `γ(y,k) = y*k` is an isomorphism
    /// `(Y ⋉_{φ*} K, *) → (D,*)`, that `α = γβ`, and that
    /// `y * Λ_y(k) = y∘k`.
    pub fn alpha_isomorphism(&self) -> Result<ElementMap> {
        let fail = |m: &str| Error::DecompositionInvalid(m.to_string());
        let d = &self.parent;
        let act = self.extract_action()?;
        let outer = act.outer_product()?;
        let (b, i) = (&self.b, self.i.elements());
        let n = act.order();
        let alpha = ElementMap::from_images_unchecked(
            d.order(),
            (0..n)
                .map(|p| {
                    let (y, k) = act.unpair(p);
                    d.circ().mul(b[y], i[k])
                })
                .collect(),
        );
        if !alpha.is_bijective() || !outer.is_morphism_to(d, &alpha)? {
            return Err(fail("α is not a digroup isomorphism"));
        }
        let beta = act.beta();
        if !beta.compose(&act.beta_inverse())?.is_identity()
            || !act.beta_inverse().compose(&beta)?.is_identity()
        {
            return Err(fail("β and its stated inverse disagree"));
        }
        let star_product = act.star_semidirect()?;
        if !is_homomorphism(&beta, outer.star(), &star_product)? {
            return Err(fail(
                "β is not a homomorphism onto the *-semidirect product",
            ));
        }
        let gamma = ElementMap::from_images_unchecked(
            d.order(),
            (0..n)
                .map(|p| {
                    let (y, k) = act.unpair(p);
                    d.star().mul(b[y], i[k])
                })
                .collect(),
        );
        if !gamma.is_bijective() || !is_homomorphism(&gamma, &star_product, d.star())? {
            return Err(fail("γ is not an isomorphism onto (D,*)"));
        }
        if gamma.compose(&beta)? != alpha {
            return Err(fail("α differs from γβ"));
        }
        let diagram = (0..n).all(|p| {
            let (y, k) = act.unpair(p);
            d.star().mul(b[y], i[act.lam(y, k)]) == d.circ().mul(b[y], i[k])
        });
        if !diagram {
            return Err(fail("y*Λ_y(k) differs from y∘k"));
        }
        Ok(alpha)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Components {
    pub a: usize,
    pub i2: usize,
    pub i3: usize,
    pub i4: usize,
}

/// Every inner decomposition of `d`, one per idempotent digroup endomorphism,
/// ordered by the image array of the idempotent.
pub fn idempotent_endomorphisms(d: &Digroup, limits: &Limits) -> Result<Vec<InnerDecomposition>> {
    let subs = d.subdigroups(limits)?;
    let ideals = d.ideals(limits)?;
    let n = d.order();
    let mut out = Vec::new();
    for b in &subs {
        for i in &ideals {
            if b.len() * i.len() != n || b.iter().filter(|&&x| i.contains(x)).count() != 1 {
                continue;
            }
            match InnerDecomposition::new(d, b, i) {
                Ok(dec) => out.push(dec),
                Err(Error::DecompositionInvalid(_)) => {}
                Err(other) => return Err(other),
            }
        }
    }
    out.sort_by(|x, y| x.e.images().cmp(y.e.images()));
    Ok(out)
}

/// Idempotent digroup endomorphisms found directly: every assignment of
/// images to a generating set of `(D,∘)`, extended and filtered.
pub fn idempotent_endomorphisms_by_search(d: &Digroup, limits: &Limits) -> Result<Vec<ElementMap>> {
    limits.check_order(d.order())?;
    let mut out = Vec::new();
    for_each_circ_endomorphism(d, &mut |f| {
        if is_homomorphism(&f, d.star(), d.star()).expect("same order")
            && f.compose(&f).expect("same order") == f
        {
            out.push(f);
        }
    });
    out.sort();
    Ok(out)
}

fn for_each_circ_endomorphism(d: &Digroup, visit: &mut dyn FnMut(ElementMap)) {
    let gens = d.circ().generating_set();
    let n = d.order();
    let mut images = vec![0; gens.len()];
    loop {
        if let Some(f) = extend_homomorphism(d.circ(), d.circ(), &gens, &images) {
            visit(f);
        }
        // odometer over images
        let mut pos = 0;
        loop {
            if pos == images.len() {
                return;
            }
            images[pos] += 1;
            if images[pos] < n {
                break;
            }
            images[pos] = 0;
            pos += 1;
        }
    }
}

/// Evaluation of the eight equivalent conditions for a subdigroup `B` and an
/// ideal `I`:
///
/// 1. `D = B∘I` and `B ∩ I = {0}`
/// 2. unique `a = b∘i₁`
/// 3. unique `a = i₂∘b`
/// 4. `D = B*I` and `B ∩ I = {0}`
/// 5. unique `a = b*i₃`
/// 6. unique `a = i₄*b`
/// 7. a digroup morphism `D → B` that is the identity on `B` with kernel `I`
/// 8. an idempotent digroup endomorphism with image `B` and kernel `I`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub conditions: [bool; 8],
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

pub fn check_equivalences(d: &Digroup, b: &[usize], i: &[usize]) -> Result<EquivalenceReport> {
    if !d.is_subdigroup(b)? {
        return Err(Error::NotASubdigroup);
    }
    if !d.is_ideal(i)? {
        return Err(Error::NotAnIdeal);
    }
    let b = normalize(b);
    let i = normalize(i);
    let n = d.order();
    let in_b = d.star().mask(&b)?;
    let in_i = d.star().mask(&i)?;
    let trivial_meet = b.iter().filter(|&&x| in_i[x]).count() == 1;

    let counts = |f: &dyn Fn(usize, usize) -> usize| {
        let mut c = vec![0usize; n];
        for &x in &b {
            for &y in &i {
                c[f(x, y)] += 1;
            }
        }
        c
    };
    let covers = |c: &[usize]| c.iter().all(|&k| k > 0);
    let unique = |c: &[usize]| c.iter().all(|&k| k == 1);

    let b_circ_i = counts(&|x, y| d.circ().mul(x, y));
    let i_circ_b = counts(&|x, y| d.circ().mul(y, x));
    let b_star_i = counts(&|x, y| d.star().mul(x, y));
    let i_star_b = counts(&|x, y| d.star().mul(y, x));

    let mut retraction = false;
    let mut idempotent = false;
    for_each_circ_endomorphism(d, &mut |f| {
        if retraction && idempotent {
            return;
        }
        let hom_star = is_homomorphism(&f, d.star(), d.star()).expect("same order");
        if !hom_star {
            return;
        }
        let kernel_is_i = (0..n).all(|a| (f.apply(a) == 0) == in_i[a]);
        if !kernel_is_i {
            return;
        }
        let lands_in_b = f.images().iter().all(|&x| in_b[x]);
        if lands_in_b && b.iter().all(|&x| f.apply(x) == x) {
            retraction = true;
        }
        let image = normalize(f.images());
        if image == b && f.compose(&f).expect("same order") == f {
            idempotent = true;
        }
    });

    Ok(EquivalenceReport {
        conditions: [
            covers(&b_circ_i) && trivial_meet,
            unique(&b_circ_i),
            unique(&i_circ_b),
            covers(&b_star_i) && trivial_meet,
            unique(&b_star_i),
            unique(&i_star_b),
            retraction,
            idempotent,
        ],
    })
}

/// Outcome of rebuilding a digroup from each of its nontrivial inner
/// decompositions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RoundtripReport {
    pub nontrivial: usize,
    pub succeeded: usize,
    pub failures: Vec<String>,
}

impl RoundtripReport {
    pub fn all_succeeded(&self) -> bool {
        self.failures.is_empty() && self.succeeded == self.nontrivial
    }
}

/// For every nontrivial inner decomposition: extract the action, build the
/// outer product and verify α.
pub fn reconstruct_roundtrip(d: &Digroup, limits: &Limits) -> Result<RoundtripReport> {
    let mut report = RoundtripReport::default();
    for dec in idempotent_endomorphisms(d, limits)? {
        if dec.is_trivial() {
            continue;
        }
        report.nontrivial += 1;
        match dec.alpha_isomorphism() {
            Ok(_) => report.succeeded += 1,
            Err(e) => {
                report
                    .failures
                    .push(format!("B = {:?}, I = {:?}: {e}", dec.b, dec.i.elements()))
            }
        }
    }
    Ok(report)
}
