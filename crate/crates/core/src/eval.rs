//! Evaluation against gold alignments and gold sense lists.
//!
//! Alignment scoring follows the usual sure/possible convention:
//! precision counts predicted links inside the possible set, recall
//! counts recovered sure links, and AER combines the two. Inventory
//! scoring is plain set precision/recall over `(lemma, synset)` keys.
//! All ratios are computed in a caller-chosen [`Scalar`], so exact
//! rational reports are available.

use std::collections::BTreeSet;
use std::ops::{Add, AddAssign};

use crate::alignment::{AlignmentLink, AlignmentSet};
use crate::normalize::normalize_entry;
use crate::scalar::{ratio, Scalar};
use crate::sense::{SenseInventory, SenseKey};

/// Gold alignment annotation: a set of sure links within a set of
/// possible links. The constructor unions sure into possible, so
/// `sure ⊆ possible` always holds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlignmentGold {
    sure: BTreeSet<AlignmentLink>,
    possible: BTreeSet<AlignmentLink>,
}

impl AlignmentGold {
    pub fn new(
        sure: impl IntoIterator<Item = AlignmentLink>,
        possible: impl IntoIterator<Item = AlignmentLink>,
    ) -> AlignmentGold {
        let sure: BTreeSet<AlignmentLink> = sure.into_iter().collect();
        let mut possible: BTreeSet<AlignmentLink> = possible.into_iter().collect();
        possible.extend(sure.iter().copied());
        AlignmentGold { sure, possible }
    }

    pub fn sure(&self) -> &BTreeSet<AlignmentLink> {
        &self.sure
    }

    pub fn possible(&self) -> &BTreeSet<AlignmentLink> {
        &self.possible
    }
}

/// Raw microaverageable counts behind a report. Adding two counts
/// aggregates two disjoint evaluations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalCounts {
    /// Predicted links or generated sense keys.
    pub predicted: usize,
    /// Sure gold links, or gold senses.
    pub gold_sure: usize,
    /// Possible gold links; equals `gold_sure` for sense evaluation.
    pub gold_possible: usize,
    /// Predictions that hit the sure set.
    pub hit_sure: usize,
    /// Predictions that hit the possible set.
    pub hit_possible: usize,
}

impl Add for EvalCounts {
    type Output = EvalCounts;

    fn add(self, other: EvalCounts) -> EvalCounts {
        EvalCounts {
            predicted: self.predicted + other.predicted,
            gold_sure: self.gold_sure + other.gold_sure,
            gold_possible: self.gold_possible + other.gold_possible,
            hit_sure: self.hit_sure + other.hit_sure,
            hit_possible: self.hit_possible + other.hit_possible,
        }
    }
}

impl AddAssign for EvalCounts {
    fn add_assign(&mut self, other: EvalCounts) {
        *self = *self + other;
    }
}

impl std::iter::Sum for EvalCounts {
    fn sum<I: Iterator<Item = EvalCounts>>(iter: I) -> EvalCounts {
        iter.fold(EvalCounts::default(), Add::add)
    }
}

/// Metrics in `[0, 1]` plus the counts they were computed from.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalReport<S> {
    pub precision: S,
    pub recall: S,
    pub f1: S,
    pub aer: S,
    pub counts: EvalCounts,
}

impl EvalCounts {
    /// Computes the metrics, with the degenerate-denominator conventions:
    /// nothing predicted → precision 1, no sure gold → recall 1, both
    /// empty → AER 0, and F1 is 0 when precision + recall is 0.
    pub fn report<S: Scalar>(self) -> EvalReport<S> {
        let one = S::one;
        let precision = if self.predicted == 0 {
            one()
        } else {
            ratio(self.hit_possible, self.predicted)
        };
        let recall = if self.gold_sure == 0 {
            one()
        } else {
            ratio(self.hit_sure, self.gold_sure)
        };
        let pr = precision.clone() + recall.clone();
        let f1 = if pr.is_zero() {
            S::zero()
        } else {
            let two = one() + one();
            two * precision.clone() * recall.clone() / pr
        };
        let aer = if self.predicted + self.gold_sure == 0 {
            S::zero()
        } else {
            one()
                - ratio(
                    self.hit_sure + self.hit_possible,
                    self.predicted + self.gold_sure,
                )
        };
        EvalReport {
            precision,
            recall,
            f1,
            aer,
            counts: self,
        }
    }
}

/// Counts one predicted alignment against its gold annotation.
pub fn alignment_counts(predicted: &AlignmentSet, gold: &AlignmentGold) -> EvalCounts {
    let hit_sure = predicted.iter().filter(|l| gold.sure().contains(l)).count();
    let hit_possible = predicted
        .iter()
        .filter(|l| gold.possible().contains(l))
        .count();
    EvalCounts {
        predicted: predicted.len(),
        gold_sure: gold.sure().len(),
        gold_possible: gold.possible().len(),
        hit_sure,
        hit_possible,
    }
}

/// Precision / recall / F1 / AER of one predicted alignment.
pub fn eval_alignment<S: Scalar>(predicted: &AlignmentSet, gold: &AlignmentGold) -> EvalReport<S> {
    alignment_counts(predicted, gold).report()
}

/// Counts generated `(lemma, synset)` keys against a gold sense list.
/// Lemmas on both sides are normalized before comparison; synsets are
/// compared verbatim.
pub fn inventory_counts(
    generated: &SenseInventory,
    gold: &BTreeSet<(String, String)>,
) -> EvalCounts {
    sense_key_counts(generated.keys().cloned(), gold)
}

/// The key-set form of [`inventory_counts`], for inventories read back
/// from files where only the keys are available.
pub fn sense_key_counts(
    generated: impl IntoIterator<Item = SenseKey>,
    gold: &BTreeSet<(String, String)>,
) -> EvalCounts {
    let generated_keys: BTreeSet<(String, String)> = generated
        .into_iter()
        .map(|k| (normalize_entry(&k.lemma), k.synset))
        .collect();
    let gold_keys: BTreeSet<(String, String)> = gold
        .iter()
        .map(|(lemma, synset)| (normalize_entry(lemma), synset.clone()))
        .collect();
    let hits = generated_keys.intersection(&gold_keys).count();
    EvalCounts {
        predicted: generated_keys.len(),
        gold_sure: gold_keys.len(),
        gold_possible: gold_keys.len(),
        hit_sure: hits,
        hit_possible: hits,
    }
}

/// Precision / recall over sense keys; AER degenerates to `1 − F1` here.
pub fn eval_inventory<S: Scalar>(
    generated: &SenseInventory,
    gold: &BTreeSet<(String, String)>,
) -> EvalReport<S> {
    inventory_counts(generated, gold).report()
}

impl<S: Scalar + num_traits::ToPrimitive> EvalReport<S> {
    /// The same report with metrics converted to `f64`, for display.
    pub fn approx(&self) -> EvalReport<f64> {
        let to = |s: &S| s.to_f64().expect("metric convertible to f64");
        EvalReport {
            precision: to(&self.precision),
            recall: to(&self.recall),
            f1: to(&self.f1),
            aer: to(&self.aer),
            counts: self.counts,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sense::{ProjectionRule, Provenance, SenseRecord};
    use crate::Rational;

    fn link(i: usize, j: usize) -> AlignmentLink {
        AlignmentLink::new(i, j)
    }

    fn matching(links: &[(usize, usize)]) -> AlignmentSet {
        let mut set = AlignmentSet::new();
        set.extend(links.iter().map(|&(i, j)| link(i, j)));
        set
    }

    #[test]
    fn perfect_prediction_scores_perfectly() {
        let pred = matching(&[(0, 0), (1, 1)]);
        let gold = AlignmentGold::new([link(0, 0), link(1, 1)], []);
        let report = eval_alignment::<Rational>(&pred, &gold);
        assert_eq!(report.precision, Rational::new(1, 1));
        assert_eq!(report.recall, Rational::new(1, 1));
        assert_eq!(report.aer, Rational::new(0, 1));
    }

    #[test]
    fn half_recall_gives_one_third_aer() {
        let pred = matching(&[(0, 0)]);
        let gold = AlignmentGold::new([link(0, 0), link(1, 1)], []);
        let report = eval_alignment::<Rational>(&pred, &gold);
        assert_eq!(report.precision, Rational::new(1, 1));
        assert_eq!(report.recall, Rational::new(1, 2));
        assert_eq!(report.aer, Rational::new(1, 3));
        assert_eq!(report.f1, Rational::new(2, 3));
    }

    #[test]
    fn empty_prediction_and_gold_are_perfect_by_convention() {
        let report = eval_alignment::<Rational>(&AlignmentSet::new(), &AlignmentGold::default());
        assert_eq!(report.precision, Rational::new(1, 1));
        assert_eq!(report.recall, Rational::new(1, 1));
        assert_eq!(report.aer, Rational::new(0, 1));
    }

    #[test]
    fn possible_only_links_count_for_precision_not_recall() {
        let pred = matching(&[(0, 1)]);
        let gold = AlignmentGold::new([link(1, 1)], [link(0, 1)]);
        let report = eval_alignment::<Rational>(&pred, &gold);
        assert_eq!(report.precision, Rational::new(1, 1));
        assert_eq!(report.recall, Rational::new(0, 1));
        // AER = 1 - (0 + 1) / (1 + 1)
        assert_eq!(report.aer, Rational::new(1, 2));
    }

    #[test]
    fn counts_aggregate_by_summation() {
        let a = EvalCounts {
            predicted: 1,
            gold_sure: 2,
            gold_possible: 2,
            hit_sure: 1,
            hit_possible: 1,
        };
        let total: EvalCounts = [a, a].into_iter().sum();
        assert_eq!(total.predicted, 2);
        assert_eq!(total.gold_sure, 4);
        let report = total.report::<Rational>();
        assert_eq!(report.recall, Rational::new(1, 2));
    }

    fn inventory_of(keys: &[(&str, &str)]) -> SenseInventory {
        let mut inv = SenseInventory::new();
        for (lemma, synset) in keys {
            inv.add(SenseRecord {
                lemma: (*lemma).into(),
                synset: (*synset).into(),
                rule: ProjectionRule::Dictionary,
                provenance: Provenance {
                    pair_id: "p".into(),
                    source: 0,
                    target: 0,
                },
            });
        }
        inv
    }

    fn gold_of(keys: &[(&str, &str)]) -> BTreeSet<(String, String)> {
        keys.iter()
            .map(|(l, s)| (l.to_string(), s.to_string()))
            .collect()
    }

    #[test]
    fn generated_sense_found_in_gold_is_precise() {
        let inv = inventory_of(&[("odio", "bn:00086717v")]);
        let gold = gold_of(&[("odio", "bn:00086717v"), ("jardín", "bn:00040240n")]);
        let report = eval_inventory::<Rational>(&inv, &gold);
        assert_eq!(report.precision, Rational::new(1, 1));
        assert_eq!(report.recall, Rational::new(1, 2));
    }

    #[test]
    fn empty_generated_and_gold_score_one() {
        let report = eval_inventory::<Rational>(&SenseInventory::new(), &BTreeSet::new());
        assert_eq!(report.precision, Rational::new(1, 1));
        assert_eq!(report.recall, Rational::new(1, 1));
    }

    #[test]
    fn empty_generated_with_nonempty_gold_has_zero_recall() {
        let gold = gold_of(&[("odio", "s1")]);
        let report = eval_inventory::<Rational>(&SenseInventory::new(), &gold);
        assert_eq!(report.precision, Rational::new(1, 1));
        assert_eq!(report.recall, Rational::new(0, 1));
    }

    #[test]
    fn two_keys_one_hit_quarter_recall() {
        let inv = inventory_of(&[("a", "s1"), ("b", "s2")]);
        let gold = gold_of(&[("a", "s1"), ("c", "s3"), ("d", "s4"), ("e", "s5")]);
        let report = eval_inventory::<Rational>(&inv, &gold);
        assert_eq!(report.precision, Rational::new(1, 2));
        assert_eq!(report.recall, Rational::new(1, 4));
    }

    #[test]
    fn lemma_comparison_is_normalized() {
        let inv = inventory_of(&[("Fritter Away", "s1")]);
        let gold = gold_of(&[("fritter_away", "s1")]);
        let report = eval_inventory::<Rational>(&inv, &gold);
        assert_eq!(report.precision, Rational::new(1, 1));
    }

    #[test]
    fn approx_converts_exact_metrics() {
        let pred = matching(&[(0, 0)]);
        let gold = AlignmentGold::new([link(0, 0), link(1, 1)], []);
        let report = eval_alignment::<Rational>(&pred, &gold).approx();
        assert_eq!(report.recall, 0.5);
        assert!((report.aer - 1.0 / 3.0).abs() < 1e-12);
    }
}
