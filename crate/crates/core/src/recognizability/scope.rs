//! Scope search: centered readings for two-sided recognizability,
//! left-edge readings for one-sided recognizability, and the cut-status
//! check in the sense of Mossé.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::generator::SequenceGen;
use crate::language::FactorLanguage;
use crate::morphism::Morphism;
use crate::periodic::find_periodic_points;
use crate::profile::morphism_profile;
use crate::word::Word;

use super::witness::{
    periodic_phase_witnesses, witness_search, Witness, WitnessConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecMode {
    TwoSided,
    OneSided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecStatus {
    /// scope = None when recognizability was derived without a finite
    /// reading scope (the right-marked fast path).
    Recognizable { scope: Option<usize> },
    NotRecognizable,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizabilityVerdict {
    pub mode: RecMode,
    pub status: RecStatus,
    pub witnesses: Vec<Witness>,
    pub searched_to: usize,
    pub aperiodic_only: bool,
    pub via_right_marked: bool,
}

/// Outcome of collecting all interior readings of fixed-length windows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReadingOutcome {
    Unique(BTreeMap<Vec<Letter>, (Letter, usize)>),
    Ambiguous { window: Word, readings: Vec<(Letter, usize)> },
}

/// Window keyed to every (preimage letter, phase) that can read it.
type ReadingTable = BTreeMap<Vec<Letter>, BTreeSet<(Letter, usize)>>;

fn preimage_cap(m: &Morphism, window_len: usize) -> usize {
    let pad = if m.is_erasing() { 4 * m.domain().len() } else { 0 };
    window_len + 2 + pad
}

/// All (window, reading) pairs from interior occurrences: the window lies
/// inside sigma(v) excluding the images of the first and last letter of v.
fn gather_readings(
    m: &Morphism,
    lang: &FactorLanguage,
    window_len: usize,
    centered: bool,
) -> Result<ReadingTable> {
    let cap = preimage_cap(m, window_len);
    if cap > lang.horizon() {
        return Err(Error::Horizon { requested: cap, horizon: lang.horizon() });
    }
    let mut map: ReadingTable = BTreeMap::new();
    for len in 2..=cap {
        for v in lang.level(len)? {
            let letters = v.as_slice();
            let first = m.image(letters[0]).len();
            let last = m.image(*letters.last().unwrap()).len();
            if first == 0 || last == 0 {
                continue;
            }
            let sv = m.apply(letters);
            let hi = sv.len() - last;
            let mut cums = Vec::with_capacity(letters.len());
            let mut c = 0usize;
            for &l in letters {
                cums.push(c);
                c += m.image(l).len();
            }
            if centered {
                let lo = first;
                if hi < lo + window_len {
                    continue;
                }
                for o in lo..=hi - window_len {
                    let window = sv.letters()[o..o + window_len].to_vec();
                    let center = o + window_len / 2;
                    let j = cums.partition_point(|&s| s <= center) - 1;
                    map.entry(window).or_default().insert((letters[j], center - cums[j]));
                }
            } else {
                for o in 0..first {
                    if o + window_len > hi {
                        break;
                    }
                    let window = sv.letters()[o..o + window_len].to_vec();
                    map.entry(window).or_default().insert((letters[0], o));
                }
            }
        }
    }
    Ok(map)
}

fn decide(
    map: BTreeMap<Vec<Letter>, BTreeSet<(Letter, usize)>>,
    exclude: Option<&BTreeSet<Vec<Letter>>>,
) -> ReadingOutcome {
    let mut unique = BTreeMap::new();
    for (window, readings) in map {
        if readings.len() > 1 && exclude.is_none_or(|ex| !ex.contains(&window)) {
            return ReadingOutcome::Ambiguous {
                window: Word::new(window),
                readings: readings.into_iter().collect(),
            };
        }
        if let Some(r) = readings.into_iter().next() {
            unique.insert(window, r);
        }
    }
    ReadingOutcome::Unique(unique)
}

/// Centered readings of all windows of length 2n+1: reading = covering
/// letter and phase of the central position.
pub fn two_sided_reading_map(
    m: &Morphism,
    lang: &FactorLanguage,
    n: usize,
) -> Result<ReadingOutcome> {
    Ok(decide(gather_readings(m, lang, 2 * n + 1, true)?, None))
}

/// Left-edge readings of all windows of length n: reading = first letter
/// of the preimage and the offset of the window inside its image.
pub fn one_sided_reading_map(
    m: &Morphism,
    lang: &FactorLanguage,
    n: usize,
) -> Result<ReadingOutcome> {
    Ok(decide(gather_readings(m, lang, n, false)?, None))
}

/// Windows of the given length that are factors of detected periodic
/// points; used to restrict the aperiodic-only verdict.
fn periodic_factor_windows(
    lang: &FactorLanguage,
    window_len: usize,
    p_max: usize,
) -> Result<BTreeSet<Vec<Letter>>> {
    let mut out = BTreeSet::new();
    for p in find_periodic_points(lang, p_max)? {
        let w = p.word;
        let rep = w.repeat(window_len / w.len() + 2);
        for i in 0..w.len() {
            out.insert(rep.letters()[i..i + window_len].to_vec());
        }
    }
    Ok(out)
}

fn default_p_max(lang: &FactorLanguage) -> usize {
    8.min(lang.horizon() / 2).max(1)
}

/// Two-sided verdict: a phase witness on a periodic point refutes
/// recognizability; otherwise the smallest scope with unique centered
/// readings decides, and exhausting n_max leaves Unknown.
pub fn two_sided_verdict(
    m: &Morphism,
    lang: &FactorLanguage,
    n_max: usize,
) -> Result<RecognizabilityVerdict> {
    let phase = periodic_phase_witnesses(m, lang, default_p_max(lang))?;
    if !phase.is_empty() {
        return Ok(RecognizabilityVerdict {
            mode: RecMode::TwoSided,
            status: RecStatus::NotRecognizable,
            witnesses: phase.into_iter().map(Witness::Phase).collect(),
            searched_to: 0,
            aperiodic_only: false,
            via_right_marked: false,
        });
    }
    for n in 0..=n_max {
        if let ReadingOutcome::Unique(_) = two_sided_reading_map(m, lang, n)? {
            return Ok(RecognizabilityVerdict {
                mode: RecMode::TwoSided,
                status: RecStatus::Recognizable { scope: Some(n) },
                witnesses: Vec::new(),
                searched_to: n,
                aperiodic_only: false,
                via_right_marked: false,
            });
        }
    }
    Ok(RecognizabilityVerdict {
        mode: RecMode::TwoSided,
        status: RecStatus::Unknown,
        witnesses: Vec::new(),
        searched_to: n_max,
        aperiodic_only: false,
        via_right_marked: false,
    })
}

/// Two-sided verdict ignoring windows that are factors of periodic
/// points: recognizability at aperiodic points only.
pub fn two_sided_verdict_aperiodic(
    m: &Morphism,
    lang: &FactorLanguage,
    n_max: usize,
) -> Result<RecognizabilityVerdict> {
    let p_max = default_p_max(lang);
    for n in 0..=n_max {
        let window_len = 2 * n + 1;
        let exclude = periodic_factor_windows(lang, window_len, p_max)?;
        let map = gather_readings(m, lang, window_len, true)?;
        if let ReadingOutcome::Unique(_) = decide(map, Some(&exclude)) {
            return Ok(RecognizabilityVerdict {
                mode: RecMode::TwoSided,
                status: RecStatus::Recognizable { scope: Some(n) },
                witnesses: Vec::new(),
                searched_to: n,
                aperiodic_only: true,
                via_right_marked: false,
            });
        }
    }
    Ok(RecognizabilityVerdict {
        mode: RecMode::TwoSided,
        status: RecStatus::Unknown,
        witnesses: Vec::new(),
        searched_to: n_max,
        aperiodic_only: true,
        via_right_marked: false,
    })
}

/// One-sided verdict: left-edge scope search, then the right-marked fast
/// path, then phase witnesses, then the branch-witness search.
pub fn one_sided_verdict(
    m: &Morphism,
    lang: &FactorLanguage,
    n_max: usize,
    cfg: &WitnessConfig,
) -> Result<RecognizabilityVerdict> {
    for n in 1..=n_max {
        if let ReadingOutcome::Unique(_) = one_sided_reading_map(m, lang, n)? {
            return Ok(RecognizabilityVerdict {
                mode: RecMode::OneSided,
                status: RecStatus::Recognizable { scope: Some(n) },
                witnesses: Vec::new(),
                searched_to: n,
                aperiodic_only: false,
                via_right_marked: false,
            });
        }
    }
    if morphism_profile(m).right_marked {
        let two = two_sided_verdict(m, lang, n_max)?;
        if matches!(two.status, RecStatus::Recognizable { .. }) {
            return Ok(RecognizabilityVerdict {
                mode: RecMode::OneSided,
                status: RecStatus::Recognizable { scope: None },
                witnesses: Vec::new(),
                searched_to: n_max,
                aperiodic_only: false,
                via_right_marked: true,
            });
        }
    }
    let phase = periodic_phase_witnesses(m, lang, default_p_max(lang))?;
    if !phase.is_empty() {
        return Ok(RecognizabilityVerdict {
            mode: RecMode::OneSided,
            status: RecStatus::NotRecognizable,
            witnesses: phase.into_iter().map(Witness::Phase).collect(),
            searched_to: n_max,
            aperiodic_only: false,
            via_right_marked: false,
        });
    }
    let branches = witness_search(m, lang, cfg)?;
    if !branches.is_empty() {
        return Ok(RecognizabilityVerdict {
            mode: RecMode::OneSided,
            status: RecStatus::NotRecognizable,
            witnesses: branches.into_iter().map(Witness::Branch).collect(),
            searched_to: n_max,
            aperiodic_only: false,
            via_right_marked: false,
        });
    }
    Ok(RecognizabilityVerdict {
        mode: RecMode::OneSided,
        status: RecStatus::Unknown,
        witnesses: Vec::new(),
        searched_to: n_max,
        aperiodic_only: false,
        via_right_marked: false,
    })
}

/// Cut-status check in the sense of Mossé on the expanded prefix of
/// y = sigma(x): window-equal positions must agree on membership in the
/// cutting-point set of x.
pub fn mosse_check(
    m: &Morphism,
    x: &SequenceGen,
    n: usize,
    prefix_len: usize,
    mode: RecMode,
) -> Result<bool> {
    if prefix_len < 2 * n + 2 * m.max_image_len() {
        return Err(Error::Precondition(format!(
            "prefix_len {prefix_len} is too short for scope {n}"
        )));
    }
    let mut letters = 16usize;
    let (y, cuts) = loop {
        let pre = x.expand(letters)?;
        let mut cuts = BTreeSet::new();
        let mut c = 0usize;
        cuts.insert(0usize);
        for &l in pre.letters() {
            c += m.image(l).len();
            if c <= prefix_len {
                cuts.insert(c);
            }
        }
        if c >= prefix_len {
            let mut y = m.apply(pre.letters()).into_letters();
            y.truncate(prefix_len);
            break (y, cuts);
        }
        if letters >= 8 * prefix_len + 256 {
            return Err(Error::DegenerateGenerator(
                "image of the sequence does not reach the requested length".into(),
            ));
        }
        letters *= 2;
    };
    let mut seen: HashMap<&[Letter], (bool, bool)> = HashMap::new();
    let (start, end) = match mode {
        RecMode::TwoSided => (n, y.len().saturating_sub(n)),
        RecMode::OneSided => (0, y.len().saturating_sub(n) + 1),
    };
    for i in start..end {
        let window = match mode {
            RecMode::TwoSided => &y[i - n..=i + n],
            RecMode::OneSided => &y[i..i + n],
        };
        let entry = seen.entry(window).or_insert((false, false));
        if cuts.contains(&i) {
            entry.0 = true;
        } else {
            entry.1 = true;
        }
        if entry.0 && entry.1 {
            return Ok(false);
        }
    }
    Ok(true)
}
