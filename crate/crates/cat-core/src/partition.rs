/// Partition of `0..n` into classes.
///
/// Classes are ordered by their least element and each class is sorted, so
/// two partitions of the same set compare equal iff they have the same blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Groups elements by label; any `Eq + Hash` label works.
    pub fn from_labels<L: std::hash::Hash + Eq>(labels: &[L]) -> Self {
        let mut first: std::collections::HashMap<&L, usize> = Default::default();
        let mut raw = Vec::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            let k = *first.entry(l).or_insert(i);
            raw.push(k);
        }
        Self::from_representatives(&raw)
    }

    /// `rep[i]` is any element of the class of `i`, shared by the whole class.
    pub fn from_representatives(rep: &[usize]) -> Self {
        let n = rep.len();
        let mut slot = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; n];
        for i in 0..n {
            let r = rep[i];
            if slot[r] == usize::MAX {
                slot[r] = classes.len();
                classes.push(Vec::new());
            }
            class_of[i] = slot[r];
            classes[slot[r]].push(i);
        }
        Self { class_of, classes }
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_representatives(&(0..n).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.class_of[i] == self.class_of[j]
    }

    /// True iff every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&i| coarser.same_class(i, c[0])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_canonicalise() {
        let p = Partition::from_labels(&["b", "a", "b", "c"]);
        let q = Partition::from_labels(&[7, 1, 7, 0]);
        assert_eq!(p, q);
        assert_eq!(p.classes(), &[vec![0, 2], vec![1], vec![3]]);
        assert!(Partition::discrete(4).refines(&p));
        assert!(!p.refines(&Partition::discrete(4)));
    }
}
