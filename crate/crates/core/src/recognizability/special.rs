//! Left-special sequences, exceptional points of almost-recognizability,
//! the weak one-sided check, and right-asymptotic classes.

use std::collections::BTreeSet;

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::generator::SequenceGen;
use crate::language::{FactorLanguage, Side};
use crate::morphism::Morphism;
use crate::periodic::find_periodic_points;
use crate::profile::morphism_profile;
use crate::word::Word;

use super::scope::{two_sided_verdict, RecStatus};
use super::witness::{image_prefix, prefix_parses, PrefixParse};

#[derive(Debug, Clone)]
pub struct SpecialSeqConfig {
    /// Powers of the morphism whose fixed points seed the candidate pool.
    pub power_max: u32,
    /// Prefix length on which the left-extension count is certified.
    pub depth: usize,
    pub shift_max: usize,
    /// Periodic-word prefix powers for the non-minimal family.
    pub prefix_pow_max: usize,
}

impl Default for SpecialSeqConfig {
    // depth 12 is past the longest prefix the gallery shifts share with a
    // genuine left-special sequence (11 letters, Fibonacci S^8).
    fn default() -> Self {
        SpecialSeqConfig { power_max: 4, depth: 12, shift_max: 8, prefix_pow_max: 4 }
    }
}

#[derive(Debug, Clone)]
pub struct LeftSpecialSeq {
    pub gen: SequenceGen,
    /// Letters extending the certified prefix on the left.
    pub extensions: Vec<Letter>,
    pub certified_depth: usize,
    /// True for candidates built from periodic points; these only matter
    /// when the shift is not minimal.
    pub non_minimal_family: bool,
}

fn candidate_pool(
    m: &Morphism,
    lang: &FactorLanguage,
    cfg: &SpecialSeqConfig,
    sig_len: usize,
) -> Vec<(SequenceGen, bool)> {
    let mut pool: Vec<(SequenceGen, bool)> = Vec::new();
    let mut sigs: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut push = |gen: SequenceGen, non_minimal: bool, pool: &mut Vec<(SequenceGen, bool)>| {
        if let Ok(sig) = gen.expand(sig_len) {
            if sigs.insert(sig.into_letters()) {
                pool.push((gen, non_minimal));
            }
        }
    };
    let mut bases = Vec::new();
    for power in 1..=cfg.power_max {
        for a in m.domain().letters() {
            if let Ok(gen) = SequenceGen::fixed_point(m, a, power) {
                bases.push(gen.clone());
                push(gen.clone(), false, &mut pool);
                for s in 1..=cfg.shift_max {
                    push(gen.clone().shifted(s), false, &mut pool);
                }
            }
        }
    }
    let p_max = 8.min(lang.horizon() / 2).max(1);
    let periodic = find_periodic_points(lang, p_max).unwrap_or_default();
    for p in &periodic {
        let w = p.word.letters();
        for r in 0..w.len() {
            let mut rot = w[r..].to_vec();
            rot.extend_from_slice(&w[..r]);
            if let Ok(gen) = SequenceGen::periodic(m, Word::new(rot)) {
                push(gen, true, &mut pool);
            }
        }
        for pow in 1..=cfg.prefix_pow_max {
            let prefix = p.word.repeat(pow);
            for base in &bases {
                push(base.clone().with_prefix(prefix.clone()), true, &mut pool);
            }
        }
    }
    pool
}

/// Candidate sequences whose length-depth prefix has at least two left
/// extensions in the language. Sorted by expanded prefix.
pub fn left_special_sequences(
    m: &Morphism,
    lang: &FactorLanguage,
    cfg: &SpecialSeqConfig,
) -> Result<Vec<LeftSpecialSeq>> {
    if cfg.depth + 1 > lang.horizon() {
        return Err(Error::Horizon { requested: cfg.depth + 1, horizon: lang.horizon() });
    }
    let sig_len = 48.max(cfg.depth + 8);
    let mut out = Vec::new();
    for (gen, non_minimal) in candidate_pool(m, lang, cfg, sig_len) {
        let prefix = gen.expand(cfg.depth)?;
        let extensions = lang.extensions(prefix.letters(), Side::Left)?;
        if extensions.len() >= 2 {
            out.push(LeftSpecialSeq {
                gen,
                extensions,
                certified_depth: cfg.depth,
                non_minimal_family: non_minimal,
            });
        }
    }
    out.sort_by_key(|s| s.gen.expand(sig_len).unwrap_or_default().into_letters());
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct ExceptionalPoint {
    pub gen: SequenceGen,
    /// Shift of the underlying left-special sequence.
    pub shift: usize,
    pub parses: Vec<PrefixParse>,
    pub certified_depth: usize,
}

#[derive(Debug, Clone)]
pub struct ExceptionalReport {
    pub applicable: bool,
    pub reason: Option<String>,
    /// Two-sided scope bounding the shifts that can fail.
    pub scope: Option<usize>,
    pub points: Vec<ExceptionalPoint>,
}

fn not_applicable(reason: &str) -> ExceptionalReport {
    ExceptionalReport {
        applicable: false,
        reason: Some(reason.to_string()),
        scope: None,
        points: Vec::new(),
    }
}

/// Shifts of left-special sequences with several parses: the only points
/// where a minimal aperiodic morphism can fail one-sided recognizability.
pub fn exceptional_points(
    m: &Morphism,
    lang: &FactorLanguage,
    depth: usize,
) -> Result<ExceptionalReport> {
    if morphism_profile(m).primitive != Some(true) {
        return Ok(not_applicable("the morphism is not primitive"));
    }
    // Morse and Hedlund: p(n) <= n certifies a periodic language, and
    // under primitivity a periodic point forces that for n past the
    // period. The candidate finder is too weak here: a short word can
    // fake a period within the horizon.
    for n in 1..=lang.horizon() {
        if lang.level(n)?.len() <= n {
            return Ok(not_applicable("the shift has periodic points"));
        }
    }
    let two = two_sided_verdict(m, lang, 8)?;
    let scope = match two.status {
        RecStatus::Recognizable { scope: Some(n) } => n,
        _ => return Ok(not_applicable("no two-sided scope found")),
    };
    let cfg = SpecialSeqConfig {
        depth: SpecialSeqConfig::default().depth.min(lang.horizon() - 1),
        ..SpecialSeqConfig::default()
    };
    let gens = left_special_sequences(m, lang, &cfg)?;
    let mut points = Vec::new();
    let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
    for g in &gens {
        // Periodic-word candidates are horizon artifacts here: the gate
        // already certified the shift aperiodic.
        if g.non_minimal_family {
            continue;
        }
        for shift in 0..=scope {
            let shifted = g.gen.clone().shifted(shift);
            let prefix = shifted.expand(depth)?;
            if !seen.insert(prefix.letters().to_vec()) {
                continue;
            }
            let parses = prefix_parses(m, lang, prefix.letters(), 64)?;
            if parses.len() >= 2 {
                points.push(ExceptionalPoint {
                    gen: shifted,
                    shift,
                    parses,
                    certified_depth: depth,
                });
            }
        }
    }
    points.sort_by_key(|p| (p.gen.expand(depth).unwrap_or_default().into_letters(), p.shift));
    Ok(ExceptionalReport {
        applicable: true,
        reason: None,
        scope: Some(scope),
        points,
    })
}

#[derive(Debug, Clone)]
pub struct WeakCheckReport {
    /// Candidate description with its number of phase-0 parses.
    pub checked: Vec<(String, usize)>,
    pub all_unique: bool,
    pub certified_depth: usize,
}

/// Weak one-sided recognizability: for candidate points x, the image
/// sigma(x) must admit no phase-0 parse other than x itself.
pub fn weak_one_sided_check(
    m: &Morphism,
    lang: &FactorLanguage,
    depth: usize,
) -> Result<WeakCheckReport> {
    let mut candidates: Vec<SequenceGen> = Vec::new();
    let mut sigs: BTreeSet<Vec<Letter>> = BTreeSet::new();
    for power in 1..=4u32 {
        for a in m.domain().letters() {
            if let Ok(gen) = SequenceGen::fixed_point(m, a, power) {
                for s in 0..=4usize {
                    let g = gen.clone().shifted(s);
                    if let Ok(sig) = g.expand(48) {
                        if sigs.insert(sig.into_letters()) {
                            candidates.push(g);
                        }
                    }
                }
            }
        }
    }
    let mut checked = Vec::new();
    let mut all_unique = true;
    for x in &candidates {
        let y = image_prefix(m, x, depth)?;
        let parses = prefix_parses(m, lang, y.letters(), 64)?;
        let zero_phase = parses.iter().filter(|p| p.k == 0).count();
        all_unique &= zero_phase == 1;
        checked.push((x.describe(), zero_phase));
    }
    Ok(WeakCheckReport { checked, all_unique, certified_depth: depth })
}

#[derive(Debug, Clone)]
pub struct AsymptoticClass {
    pub members: Vec<String>,
    /// Sum of (l(u) - 1) over members: the orbit-count bound of the class.
    pub omega_estimate: usize,
}

#[derive(Debug, Clone)]
pub struct AsymptoticReport {
    pub classes: Vec<AsymptoticClass>,
    pub generator_count: usize,
    pub certified_depth: usize,
}

/// Groups left-special generators into right-asymptotic classes: two
/// generators are grouped when some shifts of their expansions agree on a
/// common tail. Certified only to the compared depth.
pub fn asymptotic_report(
    m: &Morphism,
    lang: &FactorLanguage,
    depth: usize,
) -> Result<AsymptoticReport> {
    const TAIL_SHIFTS: usize = 24;
    let gens = left_special_sequences(m, lang, &SpecialSeqConfig::default())?;
    let tail_len = depth.max(16);
    let mut tails: Vec<BTreeSet<Vec<Letter>>> = Vec::new();
    for g in &gens {
        let mut set = BTreeSet::new();
        for s in 0..=TAIL_SHIFTS {
            if let Ok(t) = g.gen.clone().shifted(s).expand(tail_len) {
                set.insert(t.into_letters());
            }
        }
        tails.push(set);
    }
    let mut class_members: Vec<Vec<usize>> = Vec::new();
    for i in 0..gens.len() {
        let found = class_members.iter_mut().find(|members| {
            members.iter().any(|&j| !tails[i].is_disjoint(&tails[j]))
        });
        match found {
            Some(members) => members.push(i),
            None => class_members.push(vec![i]),
        }
    }
    let classes = class_members
        .into_iter()
        .map(|members| AsymptoticClass {
            omega_estimate: members
                .iter()
                .map(|&j| gens[j].extensions.len() - 1)
                .sum(),
            members: members.into_iter().map(|j| gens[j].gen.describe()).collect(),
        })
        .collect();
    Ok(AsymptoticReport {
        classes,
        generator_count: gens.len(),
        certified_depth: tail_len,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(spec: &str) -> (Morphism, FactorLanguage) {
        let m = Morphism::parse(spec).unwrap();
        let lang = FactorLanguage::build(&m, 24, 512).unwrap();
        (m, lang)
    }

    fn prefixes(m: &Morphism, gens: &[LeftSpecialSeq], len: usize) -> Vec<String> {
        gens.iter()
            .map(|g| g.gen.expand(len).unwrap().render(m.domain()))
            .collect()
    }

    #[test]
    fn fibonacci_left_special_is_unique() {
        let (m, lang) = setup("a:ab,b:a");
        let gens = left_special_sequences(&m, &lang, &SpecialSeqConfig::default()).unwrap();
        assert_eq!(prefixes(&m, &gens, 8), vec!["abaababa"]);
        assert_eq!(gens[0].extensions, vec![0, 1]);
        assert!(!gens[0].non_minimal_family);
    }

    #[test]
    fn identity_has_no_left_special() {
        let (m, lang) = setup("a:a");
        let gens = left_special_sequences(&m, &lang, &SpecialSeqConfig::default()).unwrap();
        assert!(gens.is_empty());
    }

    #[test]
    fn anti_fibonacci_left_special_is_the_fibonacci_point() {
        // No fixed point of a power is left-special here; the sequence
        // surfaces as a shift of the square's fixed point.
        let (m, lang) = setup("a:ba,b:a");
        let gens = left_special_sequences(&m, &lang, &SpecialSeqConfig::default()).unwrap();
        assert_eq!(prefixes(&m, &gens, 8), vec!["abaababa"]);
    }

    #[test]
    fn durand_left_special_family() {
        let (m, lang) = setup("a:abac,b:ab,c:c");
        let gens = left_special_sequences(&m, &lang, &SpecialSeqConfig::default()).unwrap();
        let got = prefixes(&m, &gens, 8);
        for expected in ["abacabab", "ccabacab", "cccabaca", "ccccabac", "cccccccc"] {
            assert!(got.contains(&expected.to_string()), "{got:?} misses {expected}");
        }
        // The singly-prefixed point c sigma^w(a) is not left-special.
        assert!(!got.contains(&"cabacaba".to_string()), "{got:?}");
        let c2 = gens
            .iter()
            .find(|g| g.gen.expand(8).unwrap().render(m.domain()) == "ccabacab")
            .unwrap();
        assert!(c2.non_minimal_family);
    }

    #[test]
    fn exceptional_points_empty_for_recognizable_cases() {
        for spec in ["a:ab,b:a", "a:ab,b:aa"] {
            let (m, lang) = setup(spec);
            let report = exceptional_points(&m, &lang, 48).unwrap();
            assert!(report.applicable);
            assert!(report.points.is_empty(), "{spec}: {:?}", report.points.len());
        }
    }

    #[test]
    fn exceptional_points_of_anti_fibonacci_square() {
        let m = Morphism::parse("a:ba,b:a").unwrap().power(2).unwrap();
        let lang = FactorLanguage::build(&m, 24, 512).unwrap();
        let report = exceptional_points(&m, &lang, 48).unwrap();
        assert!(report.applicable);
        // The example's count: at least |square(b)| = 2 failing shifts.
        assert!(report.points.len() >= 2, "found {}", report.points.len());
        for p in &report.points {
            assert!(p.parses.len() >= 2);
        }
    }

    #[test]
    fn exceptional_points_inapplicable_cases() {
        let (m, lang) = setup("a:abac,b:ab,c:c");
        let report = exceptional_points(&m, &lang, 32).unwrap();
        assert!(!report.applicable);
        assert!(report.reason.as_deref().unwrap().contains("primitive"));

        let (m, lang) = setup("a:aa");
        let report = exceptional_points(&m, &lang, 32).unwrap();
        assert!(!report.applicable);
        assert!(report.reason.as_deref().unwrap().contains("periodic"));
    }

    #[test]
    fn weak_check_passes_on_weakly_recognizable_morphisms() {
        for spec in ["a:ab,b:a", "a:ba,b:aa", "a:abac,b:ab,c:c"] {
            let (m, lang) = setup(spec);
            let report = weak_one_sided_check(&m, &lang, 128).unwrap();
            assert!(report.all_unique, "{spec}: {:?}", report.checked);
            assert!(report.checked.iter().all(|(_, n)| *n == 1));
        }
    }

    #[test]
    fn asymptotic_classes() {
        let (m, lang) = setup("a:ab,b:a");
        let report = asymptotic_report(&m, &lang, 32).unwrap();
        assert_eq!(report.generator_count, 1);
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.classes[0].omega_estimate, 1);

        let (m, lang) = setup("a:a");
        let report = asymptotic_report(&m, &lang, 32).unwrap();
        assert_eq!(report.generator_count, 0);
        assert!(report.classes.is_empty());

        let (m, lang) = setup("a:abac,b:ab,c:c");
        let report = asymptotic_report(&m, &lang, 32).unwrap();
        assert!(report.generator_count >= 4);
        assert_eq!(report.classes.len(), 2);
    }
}
