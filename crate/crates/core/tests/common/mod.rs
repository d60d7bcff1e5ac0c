//! Shared helpers for integration tests: an independent reference
//! interpreter for the three-pass alignment procedure, and randomized
//! instance generators.

use rand::Rng;

use expandnet::{AlignmentLink, BitextPair, Dictionary, Pos, Sentence, Token};

/// Direct, deliberately naive transcription of the three-pass alignment
/// procedure. Plain index pairs, explicit loops, and integer arithmetic
/// only — it shares no code with the library implementation.
pub fn reference_dbalign(
    src_len: usize,
    tgt_len: usize,
    base: &[(usize, usize)],
    dict: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let b = sorted_unique(base);
    let d = sorted_unique(dict);

    let mut accepted: Vec<(usize, usize)> = Vec::new();
    for pass in 0..3 {
        let candidates: Vec<(usize, usize)> = match pass {
            0 => b.iter().copied().filter(|l| d.contains(l)).collect(),
            1 => d.clone(),
            _ => b.clone(),
        };
        loop {
            let mut viable: Vec<(usize, usize)> = Vec::new();
            for &(i, j) in &candidates {
                let mut incident = false;
                for &(ai, aj) in &accepted {
                    if ai == i || aj == j {
                        incident = true;
                        break;
                    }
                }
                if !incident {
                    viable.push((i, j));
                }
            }
            if viable.is_empty() {
                break;
            }
            accepted.push(pick_closest_to_diagonal(&viable, src_len, tgt_len));
        }
    }
    accepted.sort_unstable();
    accepted
}

/// Minimal |i/s - j/t|, compared exactly by cross-multiplying onto the
/// common denominator s*t. Ties break on smallest i, then smallest j.
fn pick_closest_to_diagonal(viable: &[(usize, usize)], s: usize, t: usize) -> (usize, usize) {
    let mut best = viable[0];
    let mut best_dev = cross_deviation(viable[0], s, t);
    for &cand in &viable[1..] {
        let dev = cross_deviation(cand, s, t);
        if dev < best_dev || (dev == best_dev && cand < best) {
            best = cand;
            best_dev = dev;
        }
    }
    best
}

fn cross_deviation((i, j): (usize, usize), s: usize, t: usize) -> i128 {
    ((i as i128) * (t as i128) - (j as i128) * (s as i128)).abs()
}

fn sorted_unique(links: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut v = links.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// A randomized alignment instance. Source surfaces are `s0..`, target
/// surfaces `t0..`, and the dictionary holds exactly the entries that
/// make `dict_links` the dictionary-suggested link set.
pub struct AlignInstance {
    pub pair: BitextPair,
    pub dict: Dictionary,
    pub base: Vec<(usize, usize)>,
    pub dict_links: Vec<(usize, usize)>,
}

pub fn random_align_instance<R: Rng>(rng: &mut R) -> AlignInstance {
    let src_len = rng.random_range(0..=6);
    let tgt_len = rng.random_range(0..=6);
    let base = random_links(rng, src_len, tgt_len, 8);
    let dict_links = random_links(rng, src_len, tgt_len, 8);

    let mut dict = Dictionary::new();
    for &(i, j) in &dict_links {
        dict.insert(&format!("s{i}"), &format!("t{j}"));
    }
    let source: Sentence = (0..src_len).map(|i| Token::new(format!("s{i}"))).collect();
    let target: Sentence = (0..tgt_len).map(|j| Token::new(format!("t{j}"))).collect();
    let pair = BitextPair::new(
        "rand",
        source,
        target,
        base.iter().map(|&(i, j)| AlignmentLink::new(i, j)),
    );
    AlignInstance {
        pair,
        dict,
        base,
        dict_links,
    }
}

fn random_links<R: Rng>(
    rng: &mut R,
    src_len: usize,
    tgt_len: usize,
    max: usize,
) -> Vec<(usize, usize)> {
    if src_len == 0 || tgt_len == 0 {
        return Vec::new();
    }
    let n = rng.random_range(0..=max);
    let mut links: Vec<(usize, usize)> = (0..n)
        .map(|_| (rng.random_range(0..src_len), rng.random_range(0..tgt_len)))
        .collect();
    links.sort_unstable();
    links.dedup();
    links
}

/// A randomized projection instance: annotated sentences over small
/// vocabularies with deliberate surface overlap (so the orthographic
/// exception fires) and a dictionary dense enough to accept some pairs.
pub fn random_projection_pair<R: Rng>(rng: &mut R, id: &str) -> BitextPair {
    let src_len = rng.random_range(1..=6);
    let tgt_len = rng.random_range(1..=6);
    let source: Sentence = (0..src_len).map(|_| random_token(rng, "w")).collect();
    let target: Sentence = (0..tgt_len).map(|_| random_token(rng, "v")).collect();
    let base = random_links(rng, src_len, tgt_len, 8);
    BitextPair::new(
        id,
        source,
        target,
        base.into_iter().map(|(i, j)| AlignmentLink::new(i, j)),
    )
}

fn random_token<R: Rng>(rng: &mut R, prefix: &str) -> Token {
    // Half the vocabulary is shared between the two languages.
    let surface = if rng.random_bool(0.3) {
        format!("shared{}", rng.random_range(0..4))
    } else {
        format!("{prefix}{}", rng.random_range(0..8))
    };
    let mut token = Token::new(surface);
    if rng.random_bool(0.4) {
        token = token.with_lemma(format!("l{}", rng.random_range(0..6)));
    }
    if rng.random_bool(0.6) {
        let pos = match rng.random_range(0..5) {
            0 => Pos::Noun,
            1 => Pos::Verb,
            2 => Pos::Adj,
            3 => Pos::Adv,
            _ => Pos::Other,
        };
        token = token.with_pos(pos);
    }
    if rng.random_bool(0.5) {
        token = token.with_synset(format!("syn{}", rng.random_range(0..5)));
    }
    token
}

/// A dictionary over the projection vocabularies, including lemma-level
/// entries so both matching routes are exercised.
pub fn random_projection_dict<R: Rng>(rng: &mut R) -> Dictionary {
    let mut dict = Dictionary::new();
    for _ in 0..rng.random_range(5..=20) {
        let src = if rng.random_bool(0.25) {
            format!("l{}", rng.random_range(0..6))
        } else {
            format!("w{}", rng.random_range(0..8))
        };
        let tgt = match rng.random_range(0..4) {
            0 => format!("l{}", rng.random_range(0..6)),
            1 => format!("shared{}", rng.random_range(0..4)),
            _ => format!("v{}", rng.random_range(0..8)),
        };
        dict.insert(&src, &tgt);
    }
    dict
}
