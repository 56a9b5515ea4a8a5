use super::Mask;

/// A set of elements of a finite algebra with at most 8 atoms.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet([u64; 4]);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet([0; 4]);

    pub fn insert(&mut self, a: Mask) {
        self.0[(a >> 6) as usize] |= 1 << (a & 63);
    }

    pub fn remove(&mut self, a: Mask) {
        self.0[(a >> 6) as usize] &= !(1 << (a & 63));
    }

    pub fn contains(&self, a: Mask) -> bool {
        a < 256 && self.0[(a >> 6) as usize] >> (a & 63) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet(std::array::from_fn(|i| self.0[i] | other.0[i]))
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet(std::array::from_fn(|i| self.0[i] & other.0[i]))
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Mask> + '_ {
        (0..256u64).filter(move |&a| self.contains(a))
    }
}

impl FromIterator<Mask> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Mask>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_ops() {
        let a: ElemSet = [0, 3, 200].into_iter().collect();
        let b: ElemSet = [3, 255].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(200) && !a.contains(201));
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![3]);
        assert_eq!(a.union(&b).len(), 4);
        assert!(a.intersection(&b).is_subset(&b));
    }
}
