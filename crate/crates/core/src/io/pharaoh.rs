//! Pharaoh alignment text: space-separated `i-j` items, 0-based.
//!
//! Gold files additionally mark possible-only links with `i?j`; a plain
//! `i-j` item in a gold file is a sure link (and implicitly possible).

use std::collections::BTreeSet;
use std::io::BufRead;

use thiserror::Error;

use crate::alignment::AlignmentLink;
use crate::eval::AlignmentGold;
use crate::io::LoadError;

/// A single alignment item that could not be parsed.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed alignment item `{item}`: {reason}")]
pub struct PharaohParseError {
    pub item: String,
    pub reason: String,
}

impl PharaohParseError {
    fn new(item: &str, reason: impl Into<String>) -> PharaohParseError {
        PharaohParseError {
            item: item.to_string(),
            reason: reason.into(),
        }
    }
}

/// Parses one Pharaoh line into a link set. Duplicates collapse; an
/// empty line is the empty set.
pub fn parse_pharaoh(line: &str) -> Result<BTreeSet<AlignmentLink>, PharaohParseError> {
    let mut links = BTreeSet::new();
    for item in line.split_whitespace() {
        let (i, j) = split_item(item, "-")?;
        links.insert(AlignmentLink::new(i, j));
    }
    Ok(links)
}

/// Parses one gold line: `i-j` items are sure links, `i?j` items are
/// possible-only.
pub fn parse_gold_pharaoh(line: &str) -> Result<AlignmentGold, PharaohParseError> {
    let mut sure = BTreeSet::new();
    let mut possible = BTreeSet::new();
    for item in line.split_whitespace() {
        if item.contains('?') {
            let (i, j) = split_item(item, "?")?;
            possible.insert(AlignmentLink::new(i, j));
        } else {
            let (i, j) = split_item(item, "-")?;
            sure.insert(AlignmentLink::new(i, j));
        }
    }
    Ok(AlignmentGold::new(sure, possible))
}

fn split_item(item: &str, separator: &str) -> Result<(usize, usize), PharaohParseError> {
    let (left, right) = item
        .split_once(separator)
        .ok_or_else(|| PharaohParseError::new(item, format!("missing `{separator}`")))?;
    let parse = |part: &str| {
        part.parse::<usize>()
            .map_err(|_| PharaohParseError::new(item, format!("`{part}` is not an index")))
    };
    Ok((parse(left)?, parse(right)?))
}

/// Serializes links as sorted `i-j` items. Parsing the result gives the
/// input set back, and formatting a parsed line normalizes item order.
pub fn format_pharaoh(links: impl IntoIterator<Item = AlignmentLink>) -> String {
    let sorted: BTreeSet<AlignmentLink> = links.into_iter().collect();
    let items: Vec<String> = sorted.iter().map(AlignmentLink::to_string).collect();
    items.join(" ")
}

/// Loads a whole Pharaoh file, one link set per line.
pub fn load_pharaoh_file<R: BufRead>(reader: R) -> Result<Vec<BTreeSet<AlignmentLink>>, LoadError> {
    map_lines(reader, parse_pharaoh)
}

/// Loads a whole gold file, one [`AlignmentGold`] per line.
pub fn load_gold_file<R: BufRead>(reader: R) -> Result<Vec<AlignmentGold>, LoadError> {
    map_lines(reader, parse_gold_pharaoh)
}

fn map_lines<R, T, F>(reader: R, parse: F) -> Result<Vec<T>, LoadError>
where
    R: BufRead,
    F: Fn(&str) -> Result<T, PharaohParseError>,
{
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let parsed = parse(line.trim_end_matches('\r'))
            .map_err(|e| LoadError::format(idx + 1, e.to_string()))?;
        out.push(parsed);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn link(i: usize, j: usize) -> AlignmentLink {
        AlignmentLink::new(i, j)
    }

    #[test]
    fn parses_plain_items() {
        let links = parse_pharaoh("0-1 2-3").unwrap();
        assert_eq!(links, BTreeSet::from([link(0, 1), link(2, 3)]));
    }

    #[test]
    fn empty_line_is_the_empty_set() {
        assert!(parse_pharaoh("").unwrap().is_empty());
        assert!(parse_pharaoh("   ").unwrap().is_empty());
    }

    #[test]
    fn conflicting_raw_links_are_preserved() {
        let links = parse_pharaoh("1-1 1-4").unwrap();
        assert_eq!(links, BTreeSet::from([link(1, 1), link(1, 4)]));
    }

    #[test]
    fn duplicates_collapse() {
        assert_eq!(parse_pharaoh("0-0 0-0").unwrap().len(), 1);
    }

    #[test]
    fn malformed_items_carry_their_text() {
        let err = parse_pharaoh("0-1 nope").unwrap_err();
        assert_eq!(err.item, "nope");
        let err = parse_pharaoh("x-1").unwrap_err();
        assert!(err.to_string().contains("x-1"));
        assert!(parse_pharaoh("1-2-3").is_err());
        // Plain lines do not accept gold syntax.
        assert!(parse_pharaoh("1?2").is_err());
    }

    #[test]
    fn gold_lines_split_sure_and_possible() {
        let gold = parse_gold_pharaoh("0-0 1?2").unwrap();
        assert_eq!(gold.sure(), &BTreeSet::from([link(0, 0)]));
        assert_eq!(gold.possible(), &BTreeSet::from([link(0, 0), link(1, 2)]));
    }

    #[test]
    fn formatting_sorts_and_deduplicates() {
        let line = format_pharaoh([link(2, 3), link(0, 1), link(2, 3)]);
        assert_eq!(line, "0-1 2-3");
        assert_eq!(format_pharaoh([]), "");
    }

    #[test]
    fn file_errors_carry_line_numbers() {
        let input = "0-0\nbad\n";
        let err = load_pharaoh_file(input.as_bytes()).unwrap_err();
        assert!(matches!(err, LoadError::Format { line: 2, .. }));
    }

    #[test]
    fn files_load_line_by_line() {
        let input = "0-0 1-1\n\n2-0\n";
        let sets = load_pharaoh_file(input.as_bytes()).unwrap();
        assert_eq!(sets.len(), 3);
        assert_eq!(sets[0].len(), 2);
        assert!(sets[1].is_empty());
        assert_eq!(sets[2], BTreeSet::from([link(2, 0)]));
    }
}
