//! Entry normalization shared by the dictionary, the aligner and the
//! projection filter.
//!
//! A normalized entry is lowercase, trimmed, and uses a single
//! [`MWE_SEPARATOR`] between the words of a multi-word expression.
//! Normalization is idempotent, so normalized entries can be stored and
//! compared directly.

/// Canonical separator between the components of a multi-word expression.
pub const MWE_SEPARATOR: char = '_';

/// Normalizes a dictionary or lookup entry: case-folds, trims, and maps
/// every run of whitespace and separator characters to one [`MWE_SEPARATOR`].
pub fn normalize_entry(s: &str) -> String {
    let folded = s.to_lowercase();
    let mut out = String::with_capacity(folded.len());
    for part in folded.split(is_separator).filter(|p| !p.is_empty()) {
        if !out.is_empty() {
            out.push(MWE_SEPARATOR);
        }
        out.push_str(part);
    }
    out
}

/// Replaces internal separators with spaces, turning an MWE surface such
/// as `fritter_away` back into its conventional spelling `fritter away`.
pub fn restore_separators(s: &str) -> String {
    s.split(is_separator)
        .filter(|p| !p.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

fn is_separator(c: char) -> bool {
    c.is_whitespace() || c == MWE_SEPARATOR
}
