use alloc::collections::BTreeSet;
use core::fmt;
use core::ops::Add;

use super::Place;
use crate::{Error, Result};

/// A 2-torsion class in Br(Q), stored as its (even) set of ramified places.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BrauerClass {
    ramified: BTreeSet<Place>,
}

impl BrauerClass {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Fails on an odd number of places, which no class over Q has.
    pub fn from_places(places: impl IntoIterator<Item = Place>) -> Result<Self> {
        let ramified: BTreeSet<Place> = places.into_iter().collect();
        if ramified.len() % 2 == 1 {
            return Err(Error::OddRamification(ramified.len()));
        }
        Ok(BrauerClass { ramified })
    }

    pub fn is_trivial(&self) -> bool {
        self.ramified.is_empty()
    }

    /// Sorted, real place last.
    pub fn places(&self) -> impl Iterator<Item = &Place> {
        self.ramified.iter()
    }

    pub fn contains(&self, place: &Place) -> bool {
        self.ramified.contains(place)
    }

    pub fn len(&self) -> usize {
        self.ramified.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ramified.is_empty()
    }
}

/// Sum in Br(Q)[2]: symmetric difference of the ramified sets.
pub fn class_add(x: &BrauerClass, y: &BrauerClass) -> BrauerClass {
    BrauerClass { ramified: x.ramified.symmetric_difference(&y.ramified).cloned().collect() }
}

impl Add for BrauerClass {
    type Output = BrauerClass;

    fn add(self, rhs: BrauerClass) -> BrauerClass {
        class_add(&self, &rhs)
    }
}

impl<'a> Add<&'a BrauerClass> for &'a BrauerClass {
    type Output = BrauerClass;

    fn add(self, rhs: &'a BrauerClass) -> BrauerClass {
        class_add(self, rhs)
    }
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.ramified.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_bigint::BigUint;

    fn cls(ps: &[Option<u32>]) -> BrauerClass {
        BrauerClass::from_places(ps.iter().map(|p| match p {
            Some(p) => Place::Prime(BigUint::from(*p)),
            None => Place::Real,
        }))
        .unwrap()
    }

    #[test]
    fn group_law() {
        let m = cls(&[Some(2), None]);
        assert_eq!(&m + &BrauerClass::trivial(), m);
        assert!((&m + &m).is_trivial());
        assert_eq!(&m + &cls(&[Some(2), Some(3)]), cls(&[Some(3), None]));
    }

    #[test]
    fn canonical_order_and_parity() {
        assert_eq!(cls(&[None, Some(3), Some(2), Some(11)]).to_string(), "{2, 3, 11, real}");
        assert_eq!(BrauerClass::trivial().to_string(), "{}");
        assert_eq!(BrauerClass::from_places([Place::Real]), Err(Error::OddRamification(1)));
    }
}
