//! Sense inventory output: TSV for eyeballing and diffing, JSONL for a
//! lossless record including provenance. Entries are sorted by synset
//! then lemma so diffs are reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::io::LoadError;
use crate::sense::{
    ProjectionRule, Provenance, SenseInventory, SenseKey, SenseOccurrence, SenseRecord,
};

pub const TSV_HEADER: &str = "lemma\tsynset\tcount\trules";

/// Output format of the inventory writer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InventoryFormat {
    Tsv,
    Jsonl,
}

impl std::str::FromStr for InventoryFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<InventoryFormat, String> {
        match s.to_lowercase().as_str() {
            "tsv" => Ok(InventoryFormat::Tsv),
            "jsonl" => Ok(InventoryFormat::Jsonl),
            other => Err(format!(
                "unknown inventory format `{other}` (expected tsv or jsonl)"
            )),
        }
    }
}

/// Writes the inventory in the requested format.
pub fn write_inventory<W: Write>(
    writer: W,
    inventory: &SenseInventory,
    format: InventoryFormat,
) -> std::io::Result<()> {
    match format {
        InventoryFormat::Tsv => write_inventory_tsv(writer, inventory),
        InventoryFormat::Jsonl => write_inventory_jsonl(writer, inventory),
    }
}

fn sorted_entries(inventory: &SenseInventory) -> Vec<(&SenseKey, &[SenseOccurrence])> {
    let mut entries: Vec<_> = inventory.iter().collect();
    entries.sort_by_key(|(key, _)| (&key.synset, &key.lemma));
    entries
}

/// TSV with a header line; the `rules` column is a `RULE:count` list.
pub fn write_inventory_tsv<W: Write>(
    mut writer: W,
    inventory: &SenseInventory,
) -> std::io::Result<()> {
    writeln!(writer, "{TSV_HEADER}")?;
    for (key, occurrences) in sorted_entries(inventory) {
        let rules = SenseInventory::rule_breakdown(occurrences)
            .iter()
            .map(|(rule, n)| format!("{rule}:{n}"))
            .collect::<Vec<_>>()
            .join(",");
        writeln!(
            writer,
            "{}\t{}\t{}\t{}",
            key.lemma,
            key.synset,
            occurrences.len(),
            rules
        )?;
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct InventoryLine {
    lemma: String,
    synset: String,
    count: usize,
    rules: BTreeMap<String, usize>,
    provenance: Vec<ProvenanceLine>,
}

#[derive(Serialize, Deserialize)]
struct ProvenanceLine {
    pair: String,
    source: usize,
    target: usize,
    rule: String,
}

/// JSONL with full provenance; lossless, see [`read_inventory_jsonl`].
pub fn write_inventory_jsonl<W: Write>(
    mut writer: W,
    inventory: &SenseInventory,
) -> std::io::Result<()> {
    for (key, occurrences) in sorted_entries(inventory) {
        let rules = SenseInventory::rule_breakdown(occurrences)
            .into_iter()
            .map(|(rule, n)| (rule.as_str().to_string(), n))
            .collect();
        let line = InventoryLine {
            lemma: key.lemma.clone(),
            synset: key.synset.clone(),
            count: occurrences.len(),
            rules,
            provenance: occurrences
                .iter()
                .map(|occ| ProvenanceLine {
                    pair: occ.provenance.pair_id.clone(),
                    source: occ.provenance.source,
                    target: occ.provenance.target,
                    rule: occ.rule.as_str().to_string(),
                })
                .collect(),
        };
        serde_json::to_writer(&mut writer, &line)?;
        writeln!(writer)?;
    }
    Ok(())
}

/// Reads a JSONL inventory back, validating that counts match the
/// provenance lists and that no key repeats.
pub fn read_inventory_jsonl<R: BufRead>(reader: R) -> Result<SenseInventory, LoadError> {
    let mut inventory = SenseInventory::new();
    let mut seen: BTreeSet<SenseKey> = BTreeSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed: InventoryLine = serde_json::from_str(&line)
            .map_err(|e| LoadError::format(line_no, format!("invalid inventory line: {e}")))?;
        if parsed.count != parsed.provenance.len() {
            return Err(LoadError::format(
                line_no,
                format!(
                    "count {} does not match {} provenance entries",
                    parsed.count,
                    parsed.provenance.len()
                ),
            ));
        }
        let key = SenseKey::new(parsed.lemma.clone(), parsed.synset.clone());
        if !seen.insert(key) {
            return Err(LoadError::format(line_no, "duplicate inventory key"));
        }
        let mut rules: BTreeMap<String, usize> = BTreeMap::new();
        for prov in parsed.provenance {
            let rule: ProjectionRule = prov
                .rule
                .parse()
                .map_err(|e: String| LoadError::format(line_no, e))?;
            *rules.entry(prov.rule).or_insert(0) += 1;
            inventory.add(SenseRecord {
                lemma: parsed.lemma.clone(),
                synset: parsed.synset.clone(),
                rule,
                provenance: Provenance {
                    pair_id: prov.pair,
                    source: prov.source,
                    target: prov.target,
                },
            });
        }
        if rules != parsed.rules {
            return Err(LoadError::format(
                line_no,
                "rule breakdown does not match provenance",
            ));
        }
    }
    Ok(inventory)
}

/// Reads just the `(lemma, synset)` keys from either format, for
/// inventory evaluation.
pub fn read_inventory_keys<R: BufRead>(
    reader: R,
    format: InventoryFormat,
) -> Result<BTreeSet<SenseKey>, LoadError> {
    match format {
        InventoryFormat::Jsonl => {
            let inventory = read_inventory_jsonl(reader)?;
            Ok(inventory.keys().cloned().collect())
        }
        InventoryFormat::Tsv => {
            let mut keys = BTreeSet::new();
            let mut lines = reader.lines().enumerate();
            match lines.next() {
                Some((_, first)) => {
                    let first = first?;
                    if first.trim_end_matches('\r') != TSV_HEADER {
                        return Err(LoadError::format(1, "missing inventory TSV header"));
                    }
                }
                None => return Ok(keys),
            }
            for (idx, line) in lines {
                let line = line?;
                let line = line.trim_end_matches('\r');
                if line.is_empty() {
                    continue;
                }
                let mut columns = line.split('\t');
                match (columns.next(), columns.next()) {
                    (Some(lemma), Some(synset)) if !lemma.is_empty() && !synset.is_empty() => {
                        keys.insert(SenseKey::new(lemma, synset));
                    }
                    _ => {
                        return Err(LoadError::format(
                            idx + 1,
                            "expected lemma and synset columns",
                        ))
                    }
                }
            }
            Ok(keys)
        }
    }
}
