//! Bounded search for certified identities: enumerate content-equal word
//! pairs, discard the overwhelming majority by cheap fuzzing, and certify
//! the survivors with the full decision procedure.

use crate::error::{Error, Limits};
use crate::words::{Identity, Letter, Word};

use super::fuzz::{fuzz_check, ScalarKind};
use super::{verify_trop, Certificate, Verdict};

/// Result of a bounded search: every certified identity found, a line-based
/// log of what was examined, and whether the budget ran out.
#[derive(Debug)]
pub struct SearchOutcome {
    pub found: Vec<(Identity, Certificate)>,
    pub log: Vec<String>,
    pub truncated: bool,
}

const PREFILTER_TRIALS: u64 = 64;

/// Enumerates unordered content-equal pairs of distinct words up to
/// `max_len`, prefilters each with a short fuzz run, and certifies survivors.
/// `budget` bounds the number of candidate pairs examined; exhausting it
/// truncates the search with an explicit marker in the log.
pub fn search_identities(
    n: usize,
    max_len: usize,
    budget: u64,
    seed: u64,
    limits: &Limits,
) -> SearchOutcome {
    let mut found = Vec::new();
    let mut log = Vec::new();
    let mut truncated = false;
    let mut examined: u64 = 0;
    log.push(format!(
        "search n={n} max-len={max_len} budget={budget} seed={seed}"
    ));

    'outer: for len in 1..=max_len {
        let words = words_of_length(len);
        // Group by letter content; only content-equal pairs can be
        // identities (diagonal matrices refute the rest).
        for count_a in 0..=len {
            let class: Vec<&Word> = words
                .iter()
                .filter(|w| w.content().0 == count_a)
                .collect();
            if class.len() < 2 {
                continue;
            }
            let mut class_examined = 0u64;
            let mut fuzz_refuted = 0u64;
            let mut certified = 0u64;
            let mut refuted = 0u64;
            let mut errors = 0u64;
            for (idx, &u) in class.iter().enumerate() {
                for &v in &class[idx + 1..] {
                    if examined == budget {
                        truncated = true;
                        log.push(format!(
                            "len {len} content ({count_a},{}): truncated after {class_examined} pairs",
                            len - count_a
                        ));
                        log.push(format!("budget exhausted after {examined} pairs"));
                        break 'outer;
                    }
                    examined += 1;
                    class_examined += 1;
                    let id = Identity::new(u.clone(), v.clone()).expect("distinct words");
                    let pair_seed = seed ^ (examined.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                    if !fuzz_check(n, &id, ScalarKind::Tropical, PREFILTER_TRIALS, pair_seed)
                        .passed()
                    {
                        fuzz_refuted += 1;
                        continue;
                    }
                    match verify_trop(n, &id, true, limits) {
                        Ok(cert) if cert.verdict() == Verdict::Holds => {
                            certified += 1;
                            log.push(format!("certified: {id}"));
                            found.push((id, cert));
                        }
                        Ok(_) => refuted += 1,
                        Err(Error::LimitExceeded(msg)) => {
                            errors += 1;
                            log.push(format!("skipped {id}: {msg}"));
                        }
                        Err(err) => {
                            errors += 1;
                            log.push(format!("error on {id}: {err}"));
                        }
                    }
                }
            }
            log.push(format!(
                "len {len} content ({count_a},{}): {class_examined} pairs, {fuzz_refuted} \
                 fuzz-refuted, {refuted} hull-refuted, {certified} certified, {errors} skipped",
                len - count_a
            ));
        }
    }
    log.push(format!(
        "examined {examined} pairs, found {} certified identities",
        found.len()
    ));
    SearchOutcome {
        found,
        log,
        truncated,
    }
}

fn words_of_length(len: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity(1 << len);
    for mask in 0..(1u64 << len) {
        let letters = (0..len)
            .map(|bit| {
                if mask >> bit & 1 == 0 {
                    Letter::A
                } else {
                    Letter::B
                }
            })
            .collect();
        out.push(Word::new(letters).expect("nonempty"));
    }
    // Lexicographic order makes pair enumeration (and logs) reproducible.
    out.sort();
    out
}
