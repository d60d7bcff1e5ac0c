//! Core linguistic types: tokens, sentences and bitext pairs.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;

use crate::alignment::AlignmentLink;
use crate::normalize::restore_separators;

/// Coarse part-of-speech category. Only the four open classes take part
/// in sense projection; everything else is `Other` and is treated as a
/// function word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pos {
    Noun,
    Verb,
    Adj,
    Adv,
    Other,
}

impl Pos {
    /// Coarsens a tag string. Recognizes the four open classes by their
    /// common names (case-insensitive); any other tag becomes `Other`.
    pub fn coarse(tag: &str) -> Pos {
        match tag.trim().to_lowercase().as_str() {
            "noun" | "n" => Pos::Noun,
            "verb" | "v" => Pos::Verb,
            "adj" | "adjective" | "a" => Pos::Adj,
            "adv" | "adverb" | "r" => Pos::Adv,
            _ => Pos::Other,
        }
    }

    pub fn is_open_class(self) -> bool {
        self != Pos::Other
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Pos::Noun => "NOUN",
            Pos::Verb => "VERB",
            Pos::Adj => "ADJ",
            Pos::Adv => "ADV",
            Pos::Other => "OTHER",
        }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One tokenized unit, possibly a multi-word expression whose surface
/// joins its components with [`crate::MWE_SEPARATOR`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub lemma: Option<String>,
    pub pos: Option<Pos>,
    pub synset: Option<String>,
}

impl Token {
    /// Creates a plain token. Panics on an empty surface.
    pub fn new(surface: impl Into<String>) -> Token {
        let surface = surface.into();
        assert!(!surface.is_empty(), "token surface must be non-empty");
        Token {
            surface,
            lemma: None,
            pos: None,
            synset: None,
        }
    }

    pub fn with_lemma(mut self, lemma: impl Into<String>) -> Token {
        self.lemma = Some(lemma.into());
        self
    }

    pub fn with_pos(mut self, pos: Pos) -> Token {
        self.pos = Some(pos);
        self
    }

    pub fn with_synset(mut self, synset: impl Into<String>) -> Token {
        self.synset = Some(synset.into());
        self
    }

    /// A token is a content word when it carries a synset tag and its POS,
    /// if known, is one of the four open classes. A missing POS does not
    /// block projection since POS tagging is optional.
    pub fn is_content_word(&self) -> bool {
        self.synset.is_some() && self.pos.is_none_or(Pos::is_open_class)
    }

    /// The lemma this token contributes to a sense record: the explicit
    /// lemma when present, otherwise the case-folded surface. MWE
    /// separators are restored to spaces either way.
    pub fn sense_lemma(&self) -> String {
        match &self.lemma {
            Some(lemma) => restore_separators(lemma),
            None => restore_separators(&self.surface.to_lowercase()),
        }
    }
}

/// An ordered sequence of tokens; indices are 0-based and dense.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sentence {
    tokens: Vec<Token>,
}

impl Sentence {
    pub fn new(tokens: Vec<Token>) -> Sentence {
        Sentence { tokens }
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Token> {
        self.tokens.get(index)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Token> {
        self.tokens.iter()
    }
}

impl Index<usize> for Sentence {
    type Output = Token;

    fn index(&self, index: usize) -> &Token {
        &self.tokens[index]
    }
}

impl From<Vec<Token>> for Sentence {
    fn from(tokens: Vec<Token>) -> Sentence {
        Sentence::new(tokens)
    }
}

impl FromIterator<Token> for Sentence {
    fn from_iter<I: IntoIterator<Item = Token>>(iter: I) -> Sentence {
        Sentence::new(iter.into_iter().collect())
    }
}

/// A source sentence, its translation, and the raw links proposed by the
/// base aligner. Base links may be many-to-many; conflicts are resolved
/// by the aligner, not here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitextPair {
    pub id: String,
    pub source: Sentence,
    pub target: Sentence,
    pub base_links: BTreeSet<AlignmentLink>,
}

impl BitextPair {
    pub fn new(
        id: impl Into<String>,
        source: Sentence,
        target: Sentence,
        base_links: impl IntoIterator<Item = AlignmentLink>,
    ) -> BitextPair {
        let pair = BitextPair {
            id: id.into(),
            source,
            target,
            base_links: base_links.into_iter().collect(),
        };
        assert!(
            pair.links_in_range(),
            "base links out of range for pair {}",
            pair.id
        );
        pair
    }

    /// True when every base link points at existing tokens.
    pub fn links_in_range(&self) -> bool {
        self.base_links
            .iter()
            .all(|l| l.source < self.source.len() && l.target < self.target.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tagged(surface: &str, pos: Pos, synset: &str) -> Token {
        Token::new(surface).with_pos(pos).with_synset(synset)
    }

    #[test]
    fn tagged_open_class_token_is_content_word() {
        assert!(tagged("hate", Pos::Verb, "bn:00086717v").is_content_word());
        assert!(tagged("garden", Pos::Noun, "bn:00040240n").is_content_word());
    }

    #[test]
    fn function_word_is_not_content_word() {
        let the = Token::new("the").with_pos(Pos::Other);
        assert!(!the.is_content_word());
    }

    #[test]
    fn untagged_token_is_not_content_word() {
        assert!(!Token::new("man").with_pos(Pos::Noun).is_content_word());
    }

    #[test]
    fn missing_pos_with_synset_counts_as_content_word() {
        assert!(Token::new("hate")
            .with_synset("bn:00086717v")
            .is_content_word());
    }

    #[test]
    fn other_pos_blocks_projection_even_with_synset() {
        let t = Token::new("of").with_pos(Pos::Other).with_synset("bn:x");
        assert!(!t.is_content_word());
    }

    #[test]
    fn pos_coarsening_maps_unknown_tags_to_other() {
        assert_eq!(Pos::coarse("NOUN"), Pos::Noun);
        assert_eq!(Pos::coarse("Verb"), Pos::Verb);
        assert_eq!(Pos::coarse("ADJECTIVE"), Pos::Adj);
        assert_eq!(Pos::coarse("adv"), Pos::Adv);
        assert_eq!(Pos::coarse("DET"), Pos::Other);
        assert_eq!(Pos::coarse("PROPN"), Pos::Other);
    }

    #[test]
    fn domain_types_cross_thread_boundaries() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Token>();
        assert_send_sync::<Sentence>();
        assert_send_sync::<BitextPair>();
        assert_send_sync::<crate::AlignmentSet>();
        assert_send_sync::<crate::Dictionary>();
        assert_send_sync::<crate::SenseInventory>();
    }

    #[test]
    fn sense_lemma_prefers_explicit_lemma() {
        let t = Token::new("dientes").with_lemma("diente");
        assert_eq!(t.sense_lemma(), "diente");
    }

    #[test]
    fn sense_lemma_falls_back_to_folded_surface() {
        assert_eq!(Token::new("Odio").sense_lemma(), "odio");
    }

    #[test]
    fn sense_lemma_restores_mwe_separators() {
        assert_eq!(Token::new("fritter_away").sense_lemma(), "fritter away");
        let t = Token::new("echado_a_perder").with_lemma("echar_a_perder");
        assert_eq!(t.sense_lemma(), "echar a perder");
    }

    #[test]
    #[should_panic(expected = "non-empty")]
    fn empty_surface_is_rejected() {
        let _ = Token::new("");
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn out_of_range_base_links_are_rejected() {
        let s = Sentence::new(vec![Token::new("a")]);
        let t = Sentence::new(vec![Token::new("b")]);
        let _ = BitextPair::new("p", s, t, [AlignmentLink::new(0, 9)]);
    }
}
