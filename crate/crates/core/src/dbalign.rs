//! DBAlign: dictionary-augmented word alignment.
//!
//! Links are accepted in three passes — base∩dictionary first, then the
//! remaining dictionary links, then the remaining base links — so that
//! links supported by both sources win. Within a pass, candidates are
//! taken one at a time, always the one whose relative sentence positions
//! are closest (the diagonal heuristic, in the spirit of fast_align),
//! and a candidate that shares a source or target token with an accepted
//! link is discarded.

use std::collections::BTreeSet;

use crate::alignment::{AlignmentLink, AlignmentSet};
use crate::dictionary::Dictionary;
use crate::lex::{BitextPair, Sentence};
use crate::scalar::{ratio, Scalar};
use crate::Rational;

/// The three candidate-selection passes, in execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PassKind {
    /// Links proposed by both the base aligner and the dictionary.
    Intersection,
    /// All dictionary-suggested links.
    Dictionary,
    /// All base-aligner links.
    Base,
}

impl PassKind {
    pub const ORDER: [PassKind; 3] = [PassKind::Intersection, PassKind::Dictionary, PassKind::Base];

    /// The candidate link set of this pass.
    pub fn candidates(
        self,
        base: &BTreeSet<AlignmentLink>,
        dict_links: &BTreeSet<AlignmentLink>,
    ) -> BTreeSet<AlignmentLink> {
        match self {
            PassKind::Intersection => base.intersection(dict_links).copied().collect(),
            PassKind::Dictionary => dict_links.clone(),
            PassKind::Base => base.clone(),
        }
    }
}

/// Every (i, j) whose tokens the dictionary lists as translations of one
/// another, matching case-folded surfaces first and lemmas when both
/// tokens carry one. MWE tokens participate as single units.
pub fn dictionary_links(
    source: &Sentence,
    target: &Sentence,
    dict: &Dictionary,
) -> BTreeSet<AlignmentLink> {
    let mut links = BTreeSet::new();
    if dict.is_empty() {
        return links;
    }
    for (i, src) in source.iter().enumerate() {
        for (j, tgt) in target.iter().enumerate() {
            if dict.supports(src, tgt) {
                links.insert(AlignmentLink::new(i, j));
            }
        }
    }
    links
}

/// |i/src_len − j/tgt_len|: how far the link strays from the monotonic
/// diagonal. Exact when `S` is a rational type. Panics on out-of-range
/// indices.
pub fn diagonal_deviation<S: Scalar>(i: usize, j: usize, src_len: usize, tgt_len: usize) -> S {
    assert!(
        i < src_len,
        "source index {i} out of range for length {src_len}"
    );
    assert!(
        j < tgt_len,
        "target index {j} out of range for length {tgt_len}"
    );
    let a: S = ratio(i, src_len);
    let b: S = ratio(j, tgt_len);
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// The candidate with minimal diagonal deviation; ties break on the
/// smallest source index, then the smallest target index. Panics when
/// `candidates` is empty — callers stop iterating before that.
pub fn diagonal_heuristic<S: Scalar>(
    candidates: &[AlignmentLink],
    src_len: usize,
    tgt_len: usize,
) -> AlignmentLink {
    assert!(
        !candidates.is_empty(),
        "diagonal heuristic needs at least one candidate"
    );
    let mut best = candidates[0];
    let mut best_dev: S = diagonal_deviation(best.source, best.target, src_len, tgt_len);
    for &link in &candidates[1..] {
        let dev: S = diagonal_deviation(link.source, link.target, src_len, tgt_len);
        let closer = match dev.partial_cmp(&best_dev) {
            Some(order) => order,
            None => unreachable!("deviations are finite and comparable"),
        };
        if closer == std::cmp::Ordering::Less
            || (closer == std::cmp::Ordering::Equal
                && (link.source, link.target) < (best.source, best.target))
        {
            best = link;
            best_dev = dev;
        }
    }
    best
}

/// Aligns one pair with exact rational tie-breaking. See [`dbalign_with`]
/// to pick another scalar.
pub fn dbalign(pair: &BitextPair, dict: &Dictionary) -> AlignmentSet {
    dbalign_with::<Rational>(pair, dict)
}

/// The three-pass alignment procedure. Deterministic for fixed inputs:
/// within each pass the viable candidates are recomputed and the
/// diagonal heuristic picks exactly one, until none remain.
pub fn dbalign_with<S: Scalar>(pair: &BitextPair, dict: &Dictionary) -> AlignmentSet {
    let src_len = pair.source.len();
    let tgt_len = pair.target.len();
    let dict_links = dictionary_links(&pair.source, &pair.target, dict);

    let mut accepted = AlignmentSet::new();
    for pass in PassKind::ORDER {
        let candidates = pass.candidates(&pair.base_links, &dict_links);
        loop {
            let viable: Vec<AlignmentLink> = candidates
                .iter()
                .copied()
                .filter(|link| !accepted.conflicts(*link))
                .collect();
            if viable.is_empty() {
                break;
            }
            let chosen = diagonal_heuristic::<S>(&viable, src_len, tgt_len);
            let inserted = accepted.insert(chosen);
            debug_assert!(inserted, "heuristic returned a conflicting link");
        }
    }
    accepted
}
