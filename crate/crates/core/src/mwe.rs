//! Multi-word expression merging.
//!
//! The aligner treats MWEs as single tokens, so any run of adjacent
//! tokens whose joined form is a dictionary entry is collapsed into one
//! token before alignment. Matching is greedy leftmost-longest.

use crate::dictionary::{Dictionary, LangSide};
use crate::lex::{BitextPair, Sentence, Token};
use crate::normalize::{normalize_entry, MWE_SEPARATOR};

/// Collapses dictionary MWEs in `sentence`, consulting the entries of the
/// given dictionary column. See [`merge_mwes_with_map`] for the variant
/// that also reports where each original token went.
pub fn merge_mwes(sentence: &Sentence, dict: &Dictionary, side: LangSide) -> Sentence {
    merge_mwes_with_map(sentence, dict, side).0
}

/// Like [`merge_mwes`], additionally returning a map from each original
/// token index to the index of the token that now holds it.
pub fn merge_mwes_with_map(
    sentence: &Sentence,
    dict: &Dictionary,
    side: LangSide,
) -> (Sentence, Vec<usize>) {
    let tokens = sentence.tokens();
    let max_run = dict.max_entry_words(side).min(tokens.len());
    let mut merged: Vec<Token> = Vec::with_capacity(tokens.len());
    let mut index_map: Vec<usize> = Vec::with_capacity(tokens.len());

    let mut pos = 0;
    while pos < tokens.len() {
        let mut run = 1;
        if max_run >= 2 {
            let longest = max_run.min(tokens.len() - pos);
            for len in (2..=longest).rev() {
                if dict.contains_entry(side, &joined_surface(&tokens[pos..pos + len])) {
                    run = len;
                    break;
                }
            }
        }
        let new_index = merged.len();
        index_map.extend(std::iter::repeat_n(new_index, run));
        if run == 1 {
            merged.push(tokens[pos].clone());
        } else {
            merged.push(merge_run(&tokens[pos..pos + run]));
        }
        pos += run;
    }

    (Sentence::new(merged), index_map)
}

/// Merges both sides of a pair and remaps its base links onto the new
/// token indices. Links pointing into a merged run land on the merged
/// token; duplicates collapse.
pub fn merge_pair_mwes(pair: &BitextPair, dict: &Dictionary) -> BitextPair {
    let (source, source_map) = merge_mwes_with_map(&pair.source, dict, LangSide::Source);
    let (target, target_map) = merge_mwes_with_map(&pair.target, dict, LangSide::Target);
    let base_links = pair
        .base_links
        .iter()
        .map(|l| crate::AlignmentLink::new(source_map[l.source], target_map[l.target]))
        .collect::<std::collections::BTreeSet<_>>();
    BitextPair {
        id: pair.id.clone(),
        source,
        target,
        base_links,
    }
}

fn joined_surface(run: &[Token]) -> String {
    let mut joined = String::new();
    for token in run {
        if !joined.is_empty() {
            joined.push(' ');
        }
        joined.push_str(&token.surface);
    }
    normalize_entry(&joined)
}

/// The merged token keeps each annotation of the head word unless a later
/// component carries a different value for it.
fn merge_run(run: &[Token]) -> Token {
    let mut surface = String::new();
    for token in run {
        if !surface.is_empty() {
            surface.push(MWE_SEPARATOR);
        }
        surface.push_str(&token.surface);
    }
    let head = &run[0];
    let rest = &run[1..];
    Token {
        surface,
        lemma: unambiguous(&head.lemma, rest.iter().map(|t| &t.lemma)),
        pos: unambiguous(&head.pos, rest.iter().map(|t| &t.pos)),
        synset: unambiguous(&head.synset, rest.iter().map(|t| &t.synset)),
    }
}

fn unambiguous<'a, T, I>(head: &Option<T>, rest: I) -> Option<T>
where
    T: Clone + PartialEq + 'a,
    I: Iterator<Item = &'a Option<T>>,
{
    let value = head.as_ref()?;
    for other in rest {
        if other.as_ref().is_some_and(|v| v != value) {
            return None;
        }
    }
    Some(value.clone())
}
