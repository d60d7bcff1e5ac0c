//! Alignment links and conflict-free link sets.

use std::collections::BTreeMap;
use std::fmt;

/// A single word-alignment link between source token `source` and target
/// token `target` (both 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlignmentLink {
    pub source: usize,
    pub target: usize,
}

impl AlignmentLink {
    pub fn new(source: usize, target: usize) -> AlignmentLink {
        AlignmentLink { source, target }
    }
}

impl fmt::Display for AlignmentLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.source, self.target)
    }
}

impl From<(usize, usize)> for AlignmentLink {
    fn from((source, target): (usize, usize)) -> AlignmentLink {
        AlignmentLink::new(source, target)
    }
}

/// A conflict-free set of alignment links: a partial one-to-one matching
/// between source and target tokens. Two links conflict when they share
/// a source or a target index, and [`AlignmentSet::insert`] refuses any
/// link that conflicts with the current contents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlignmentSet {
    by_source: BTreeMap<usize, usize>,
    by_target: BTreeMap<usize, usize>,
}

impl AlignmentSet {
    pub fn new() -> AlignmentSet {
        AlignmentSet::default()
    }

    /// True when `link` shares a source or target index with a stored link.
    pub fn conflicts(&self, link: AlignmentLink) -> bool {
        self.by_source.contains_key(&link.source) || self.by_target.contains_key(&link.target)
    }

    /// Adds `link` unless it conflicts. Returns whether the link was added.
    pub fn insert(&mut self, link: AlignmentLink) -> bool {
        if self.conflicts(link) {
            return false;
        }
        self.by_source.insert(link.source, link.target);
        self.by_target.insert(link.target, link.source);
        true
    }

    pub fn contains(&self, link: AlignmentLink) -> bool {
        self.by_source.get(&link.source) == Some(&link.target)
    }

    /// The target token aligned to `source`, if any.
    pub fn target_of(&self, source: usize) -> Option<usize> {
        self.by_source.get(&source).copied()
    }

    /// The source token aligned to `target`, if any.
    pub fn source_of(&self, target: usize) -> Option<usize> {
        self.by_target.get(&target).copied()
    }

    pub fn len(&self) -> usize {
        self.by_source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_source.is_empty()
    }

    /// Links in ascending source-index order.
    pub fn iter(&self) -> impl Iterator<Item = AlignmentLink> + '_ {
        self.by_source
            .iter()
            .map(|(&source, &target)| AlignmentLink { source, target })
    }
}

impl Extend<AlignmentLink> for AlignmentSet {
    /// Inserts links in order, silently dropping conflicting ones.
    fn extend<I: IntoIterator<Item = AlignmentLink>>(&mut self, iter: I) {
        for link in iter {
            self.insert(link);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn link(i: usize, j: usize) -> AlignmentLink {
        AlignmentLink::new(i, j)
    }

    #[test]
    fn shared_source_conflicts() {
        let mut set = AlignmentSet::new();
        assert!(set.insert(link(1, 4)));
        assert!(set.conflicts(link(1, 1)));
        assert!(!set.insert(link(1, 1)));
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn shared_target_conflicts() {
        let mut set = AlignmentSet::new();
        assert!(set.insert(link(0, 3)));
        assert!(set.conflicts(link(2, 3)));
    }

    #[test]
    fn empty_set_has_no_conflicts() {
        let set = AlignmentSet::new();
        assert!(!set.conflicts(link(5, 5)));
    }

    #[test]
    fn lookup_by_either_side() {
        let mut set = AlignmentSet::new();
        set.insert(link(2, 7));
        assert_eq!(set.target_of(2), Some(7));
        assert_eq!(set.source_of(7), Some(2));
        assert_eq!(set.target_of(3), None);
    }

    #[test]
    fn iteration_is_sorted_by_source() {
        let mut set = AlignmentSet::new();
        set.insert(link(3, 0));
        set.insert(link(0, 2));
        set.insert(link(1, 1));
        let links: Vec<_> = set.iter().collect();
        assert_eq!(links, vec![link(0, 2), link(1, 1), link(3, 0)]);
    }

    #[test]
    fn display_is_pharaoh_style() {
        assert_eq!(link(0, 1).to_string(), "0-1");
    }
}
