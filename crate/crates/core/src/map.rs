use std::fmt;

use crate::error::{Error, Result};

/// A map between two finite carriers `0..source_order` and `0..target_order`,
/// stored as its image array. Pointed-set morphisms send 0 to 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementMap {
    target_order: usize,
    images: Vec<usize>,
}

impl ElementMap {
    pub fn new(target_order: usize, images: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = images.iter().find(|&&x| x >= target_order) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                order: target_order,
            });
        }
        Ok(ElementMap {
            target_order,
            images,
        })
    }

    pub(crate) fn from_images_unchecked(target_order: usize, images: Vec<usize>) -> Self {
        debug_assert!(images.iter().all(|&x| x < target_order));
        ElementMap {
            target_order,
            images,
        }
    }

    pub fn identity(n: usize) -> Self {
        ElementMap {
            target_order: n,
            images: (0..n).collect(),
        }
    }

    pub fn constant(source_order: usize, target_order: usize, value: usize) -> Result<Self> {
        Self::new(target_order, vec![value; source_order])
    }

    pub fn source_order(&self) -> usize {
        self.images.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.source_order() == self.target_order
            && self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes_zero(&self) -> bool {
        self.images.first().is_none_or(|&x| x == 0)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source_order() != self.target_order {
            return false;
        }
        let mut seen = vec![false; self.target_order];
        for &x in &self.images {
            if std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        true
    }

    /// Two-sided inverse, when the map is a bijection.
    pub fn inverse(&self) -> Option<ElementMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.target_order];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Some(ElementMap {
            target_order: self.source_order(),
            images: inv,
        })
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &ElementMap) -> Result<ElementMap> {
        if other.target_order != self.source_order() {
            return Err(Error::SizeMismatch {
                left: self.source_order(),
                right: other.target_order,
            });
        }
        Ok(ElementMap {
            target_order: self.target_order,
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }
}

impl fmt::Display for ElementMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.images {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_map_first() {
        let f = ElementMap::new(3, vec![1, 2, 0]).unwrap();
        let g = ElementMap::new(3, vec![0, 2, 1]).unwrap();
        assert_eq!(f.compose(&g).unwrap().images(), &[1, 0, 2]);
        assert_eq!(g.compose(&f).unwrap().images(), &[2, 1, 0]);
    }

    #[test]
    fn inverse_round_trips() {
        let f = ElementMap::new(4, vec![0, 3, 1, 2]).unwrap();
        let inv = f.inverse().unwrap();
        assert!(f.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&f).unwrap().is_identity());
        assert!(ElementMap::new(2, vec![1, 1]).unwrap().inverse().is_none());
    }

    #[test]
    fn rejects_out_of_range_images() {
        assert_eq!(
            ElementMap::new(2, vec![0, 2]),
            Err(Error::IndexOutOfRange { index: 2, order: 2 })
        );
    }
}
