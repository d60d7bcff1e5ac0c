//! Dictionary TSV: one `source TAB target` pair per line, `#` comments.

use std::io::BufRead;

use crate::dictionary::Dictionary;
use crate::io::LoadError;
use crate::normalize::normalize_entry;

/// Loads a dictionary, normalizing entries and collapsing duplicates.
/// Every non-comment line must contain exactly one tab.
pub fn load_dictionary<R: BufRead>(reader: R) -> Result<Dictionary, LoadError> {
    let mut dict = Dictionary::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches('\r');
        if line.starts_with('#') {
            continue;
        }
        let mut columns = line.split('\t');
        let (source, target) = match (columns.next(), columns.next(), columns.next()) {
            (Some(s), Some(t), None) => (s, t),
            _ => {
                return Err(LoadError::format(
                    idx + 1,
                    "expected exactly one tab separating source and target",
                ))
            }
        };
        let source = normalize_entry(source);
        let target = normalize_entry(target);
        if source.is_empty() || target.is_empty() {
            return Err(LoadError::format(idx + 1, "empty dictionary entry"));
        }
        dict.insert(&source, &target);
    }
    Ok(dict)
}
