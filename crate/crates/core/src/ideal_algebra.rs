//! Generated ideals, commutators of ideals, the center, and the join/meet of
//! the ideal lattice.
//!
//! Group commutators follow `[x,y] = x⁻¹ y⁻¹ x y` in each group.

use crate::digroup::{normalize, Digroup, IdealSet};
use crate::error::{Error, Result};
use crate::Limits;

/// Least ideal containing `set`: closure under both operations, inverses,
/// conjugation in both groups and every `λ_a`, iterated to a fixpoint.
pub fn ideal_generated_by(d: &Digroup, set: &[usize], limits: &Limits) -> Result<IdealSet> {
    limits.check_order(d.order())?;
    let n = d.order();
    let mut mask = d.star().mask(set)?;
    mask[0] = true;
    let (s, c) = (d.star(), d.circ());
    loop {
        let members: Vec<usize> = (0..n).filter(|&x| mask[x]).collect();
        let mut grew = false;
        let mut add = |x: usize, mask: &mut Vec<bool>| {
            if !mask[x] {
                mask[x] = true;
                grew = true;
            }
        };
        for &x in &members {
            add(s.inv(x), &mut mask);
            add(c.inv(x), &mut mask);
            for &y in &members {
                add(s.mul(x, y), &mut mask);
                add(c.mul(x, y), &mut mask);
            }
            for a in 0..n {
                add(s.conjugate(x, a), &mut mask);
                add(c.conjugate(x, a), &mut mask);
                add(d.lambda(a, x), &mut mask);
            }
        }
        if !grew {
            break;
        }
    }
    let elements: Vec<usize> = (0..n).filter(|&x| mask[x]).collect();
    d.ideal(&elements)
}

fn check_ideal(d: &Digroup, i: &IdealSet) -> Result<()> {
    if i.parent_order() != d.order() || !d.is_ideal(i.elements())? {
        return Err(Error::NotAnIdeal);
    }
    Ok(())
}

/// `[I,J]`: the ideal generated by the `*`-commutators, the `∘`-commutators
/// and the elements `(i∘j)⁻* * i * j` for `i ∈ I`, `j ∈ J`.
pub fn commutator_ideal(
    d: &Digroup,
    i: &IdealSet,
    j: &IdealSet,
    limits: &Limits,
) -> Result<IdealSet> {
    check_ideal(d, i)?;
    check_ideal(d, j)?;
    let (s, c) = (d.star(), d.circ());
    let mut gens = Vec::new();
    for &x in i.elements() {
        for &y in j.elements() {
            gens.push(s.commutator(x, y));
            gens.push(c.commutator(x, y));
            gens.push(s.mul(s.inv(c.mul(x, y)), s.mul(x, y)));
        }
    }
    ideal_generated_by(d, &normalize(&gens), limits)
}

/// The greatest ideal `Z` with `[Z, D] = {0}`, found by scanning all ideals.
pub fn center(d: &Digroup, limits: &Limits) -> Result<IdealSet> {
    if !d.is_skew_brace() {
        return Err(Error::NotABrace);
    }
    let full = d.full_ideal();
    let mut best = d.zero_ideal();
    for z in d.ideals(limits)? {
        if commutator_ideal(d, &z, &full, limits)?.is_trivial() && z.len() > best.len() {
            best = z;
        }
    }
    Ok(best)
}

/// `{z : a*z = z*a, a∘z = z∘a, a*z = a∘z for every a}`.
pub fn center_elementwise(d: &Digroup) -> Result<Vec<usize>> {
    if !d.is_skew_brace() {
        return Err(Error::NotABrace);
    }
    let (s, c) = (d.star(), d.circ());
    Ok((0..d.order())
        .filter(|&z| {
            (0..d.order()).all(|a| {
                s.mul(a, z) == s.mul(z, a)
                    && c.mul(a, z) == c.mul(z, a)
                    && s.mul(a, z) == c.mul(a, z)
            })
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeOps {
    pub join: IdealSet,
    pub meet: IdealSet,
}

/// `I ∨ J = I*J` (checked equal to `I∘J` and to be an ideal) and
/// `I ∧ J = I ∩ J`.
pub fn lattice_ops(d: &Digroup, i: &IdealSet, j: &IdealSet) -> Result<LatticeOps> {
    check_ideal(d, i)?;
    check_ideal(d, j)?;
    let product = |op: &dyn Fn(usize, usize) -> usize| {
        let mut v: Vec<usize> = i
            .elements()
            .iter()
            .flat_map(|&x| j.elements().iter().map(move |&y| (x, y)))
            .map(|(x, y)| op(x, y))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let star_product = product(&|x, y| d.star().mul(x, y));
    let circ_product = product(&|x, y| d.circ().mul(x, y));
    if star_product != circ_product {
        return Err(Error::NotAnIdeal);
    }
    let join = d.ideal(&star_product)?;
    let meet: Vec<usize> = i
        .elements()
        .iter()
        .copied()
        .filter(|&x| j.contains(x))
        .collect();
    Ok(LatticeOps {
        join,
        meet: d.ideal(&meet)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, GroupName};

    fn trivial(name: GroupName) -> Digroup {
        Digroup::trivial_on(catalog::group(&name).unwrap())
    }

    #[test]
    fn generated_ideals() {
        let l = Limits::default();
        let d = catalog::s3c6().unwrap();
        assert_eq!(ideal_generated_by(&d, &[], &l).unwrap().elements(), &[0]);
        assert_eq!(ideal_generated_by(&d, &[0], &l).unwrap().elements(), &[0]);
        assert_eq!(
            ideal_generated_by(&d, &[4], &l).unwrap().elements(),
            &[0, 4, 5]
        );
        assert_eq!(ideal_generated_by(&d, &[3], &l).unwrap().len(), 6);
        assert!(ideal_generated_by(&d, &[9], &l).is_err());
    }

    #[test]
    fn closure_laws() {
        let l = Limits::default();
        let d = catalog::s3c6().unwrap();
        for x in 0..6 {
            let once = ideal_generated_by(&d, &[x], &l).unwrap();
            let twice = ideal_generated_by(&d, once.elements(), &l).unwrap();
            assert_eq!(once, twice);
            let bigger = ideal_generated_by(&d, &[x, 4], &l).unwrap();
            assert!(once.elements().iter().all(|&e| bigger.contains(e)));
        }
    }

    #[test]
    fn commutators() {
        let l = Limits::default();
        let s3 = trivial(GroupName::S3);
        let full = s3.full_ideal();
        assert_eq!(
            commutator_ideal(&s3, &full, &full, &l).unwrap().elements(),
            &[0, 4, 5]
        );
        assert!(commutator_ideal(&s3, &full, &s3.zero_ideal(), &l)
            .unwrap()
            .is_trivial());

        let d = catalog::s3c6().unwrap();
        let a3 = d.ideal(&[0, 4, 5]).unwrap();
        // A3 is abelian in both groups and λ is trivial on it
        assert!(commutator_ideal(&d, &a3, &a3, &l).unwrap().is_trivial());
        let bogus = trivial(GroupName::Cyclic(2)).full_ideal();
        assert_eq!(
            commutator_ideal(&s3, &bogus, &full, &l),
            Err(Error::NotAnIdeal)
        );
    }

    #[test]
    fn centers() {
        let l = Limits::default();
        let z6 = trivial(GroupName::Cyclic(6));
        assert_eq!(center(&z6, &l).unwrap().len(), 6);
        assert_eq!(center_elementwise(&z6).unwrap().len(), 6);
        let s3 = trivial(GroupName::S3);
        assert!(center(&s3, &l).unwrap().is_trivial());
        assert_eq!(center_elementwise(&s3).unwrap(), vec![0]);
        let d = catalog::s3c6().unwrap();
        assert_eq!(
            center(&d, &l).unwrap().elements(),
            center_elementwise(&d).unwrap().as_slice()
        );
        let non_brace = crate::catalog::SignChoice::from_row(2)
            .unwrap()
            .action(2, 3)
            .unwrap()
            .outer_product()
            .unwrap();
        assert_eq!(center(&non_brace, &l), Err(Error::NotABrace));
    }

    #[test]
    fn lattice() {
        let v4 = trivial(GroupName::Klein4);
        let ideals: Vec<IdealSet> = v4.ideals(&Limits::default()).unwrap();
        let order2: Vec<&IdealSet> = ideals.iter().filter(|i| i.len() == 2).collect();
        let ops = lattice_ops(&v4, order2[0], order2[1]).unwrap();
        assert_eq!(ops.join.len(), 4);
        assert!(ops.meet.is_trivial());
        let ops = lattice_ops(&v4, order2[0], &v4.zero_ideal()).unwrap();
        assert_eq!(&ops.join, order2[0]);
        assert!(ops.meet.is_trivial());
        let ops = lattice_ops(&v4, order2[0], &v4.full_ideal()).unwrap();
        assert_eq!(ops.join, v4.full_ideal());
    }
}
