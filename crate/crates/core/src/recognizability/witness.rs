//! Certified witnesses of one-sided non-recognizability.
//!
//! A branch witness packages words u, u' with distinct last letters, a
//! common suffix v of their images, and a tail sequence x; it certifies
//! that y = v sigma(x) has the two representations (ux, k) and (u'x, k').
//! A phase witness exhibits a periodic point with two representations.

use std::collections::BTreeSet;

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::generator::SequenceGen;
use crate::language::FactorLanguage;
use crate::morphism::Morphism;
use crate::periodic::find_periodic_points;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseWitness {
    pub period_word: Word,
    /// Representations (r, k): the periodic point equals S^k(sigma(r^inf)).
    pub reps: Vec<(Word, usize)>,
    /// Length of the periodicity comparison; by Fine and Wilf the
    /// agreement of two periodic sequences on this length is conclusive.
    pub certified_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchWitness {
    pub u: Word,
    pub u_prime: Word,
    pub v: Word,
    pub x: SequenceGen,
    /// Phases of the representations (u x, k) and (u' x, k_prime).
    pub k: usize,
    pub k_prime: usize,
    pub certified_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Phase(PhaseWitness),
    Branch(BranchWitness),
}

#[derive(Debug, Clone)]
pub struct WitnessCheck {
    pub certified: bool,
    pub certified_depth: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct WitnessConfig {
    pub u_len_max: usize,
    /// Powers of the morphism whose fixed points seed candidate tails.
    pub k_max: u32,
    pub depth: usize,
    /// Shifts of each fixed point added to the candidate pool.
    pub shift_max: usize,
    /// Periodic-word prefix powers added to the candidate pool.
    pub prefix_pow_max: usize,
    pub max_witnesses: usize,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        WitnessConfig {
            u_len_max: 3,
            k_max: 4,
            depth: 1024,
            shift_max: 8,
            prefix_pow_max: 8,
            max_witnesses: 8,
        }
    }
}

/// First window of the sliding factor check that is not in the language,
/// if any. Windows have the horizon length, so every shorter factor is
/// covered by factorial closure.
pub(crate) fn first_bad_window(
    lang: &FactorLanguage,
    word: &[Letter],
) -> Result<Option<(usize, Word)>> {
    let h = lang.horizon().min(word.len());
    if h == 0 {
        return Ok(None);
    }
    for i in 0..=word.len() - h {
        if !lang.contains(&word[i..i + h])? {
            return Ok(Some((i, Word::new(word[i..i + h].to_vec()))));
        }
    }
    Ok(None)
}

/// Expansion of the generated sequence long enough that its image has at
/// least `image_len` letters; the image is truncated to that length.
pub(crate) fn image_prefix(m: &Morphism, x: &SequenceGen, image_len: usize) -> Result<Word> {
    let mut n = 16usize.max(image_len / m.max_image_len().max(1));
    loop {
        let pre = x.expand(n)?;
        let img = m.apply(pre.letters());
        if img.len() >= image_len {
            return Ok(Word::new(img.letters()[..image_len].to_vec()));
        }
        if n >= 8 * image_len + 256 {
            return Err(Error::DegenerateGenerator(
                "image of the candidate sequence grows too slowly".into(),
            ));
        }
        n *= 2;
    }
}

/// Phase witnesses: periodic points of the shift carrying two distinct
/// representations. Periodicity makes the comparison exact: two periodic
/// sequences agreeing on the sum of their periods agree everywhere.
pub fn periodic_phase_witnesses(
    m: &Morphism,
    lang: &FactorLanguage,
    p_max: usize,
) -> Result<Vec<PhaseWitness>> {
    let points = find_periodic_points(lang, p_max)?;
    let mut rotations: Vec<Word> = Vec::new();
    for p in &points {
        let w = p.word.letters();
        for r in 0..w.len() {
            let mut rot = w[r..].to_vec();
            rot.extend_from_slice(&w[..r]);
            let rot = Word::new(rot);
            if !rotations.contains(&rot) {
                rotations.push(rot);
            }
        }
    }
    let mut out = Vec::new();
    for p in &points {
        let target = &p.word;
        let mut reps: Vec<(Word, usize)> = Vec::new();
        for rot in &rotations {
            let img = m.apply(rot.letters());
            if img.is_empty() {
                continue;
            }
            let head = m.image(rot.letters()[0]).len();
            let cmp_len = img.len() + target.len();
            for k in 0..head {
                let need = k + cmp_len;
                let reps_needed = need / img.len() + 2;
                let stream = img.repeat(reps_needed);
                let periodic = target.repeat(cmp_len / target.len() + 2);
                if stream.letters()[k..k + cmp_len] == periodic.letters()[..cmp_len] {
                    reps.push((rot.clone(), k));
                }
            }
        }
        reps.sort();
        reps.dedup();
        if reps.len() >= 2 {
            let certified_depth = reps
                .iter()
                .map(|(r, k)| m.apply(r.letters()).len() + target.len() + k)
                .max()
                .unwrap_or(0);
            out.push(PhaseWitness { period_word: target.clone(), reps, certified_depth });
        }
    }
    Ok(out)
}

/// Candidate tail sequences for the witness search: fixed points of small
/// powers, their shifts, periodic points with rotations, and fixed points
/// with periodic-word prefixes. Deduplicated on a prefix signature.
pub fn candidate_points(
    m: &Morphism,
    lang: &FactorLanguage,
    cfg: &WitnessConfig,
) -> Vec<SequenceGen> {
    const SIG_LEN: usize = 48;
    let mut pool: Vec<SequenceGen> = Vec::new();
    let mut sigs: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut push = |gen: SequenceGen, pool: &mut Vec<SequenceGen>| {
        if let Ok(sig) = gen.expand(SIG_LEN) {
            if sigs.insert(sig.into_letters()) {
                pool.push(gen);
            }
        }
    };
    let mut bases: Vec<SequenceGen> = Vec::new();
    for power in 1..=cfg.k_max {
        for a in m.domain().letters() {
            if let Ok(gen) = SequenceGen::fixed_point(m, a, power) {
                bases.push(gen.clone());
                push(gen.clone(), &mut pool);
                for s in 1..=cfg.shift_max {
                    push(gen.clone().shifted(s), &mut pool);
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
                push(gen, &mut pool);
            }
        }
    }
    for p in &periodic {
        for pow in 1..=cfg.prefix_pow_max {
            let prefix = p.word.repeat(pow);
            for base in &bases {
                push(base.clone().with_prefix(prefix.clone()), &mut pool);
            }
        }
    }
    pool
}

/// Checks the three conditions of a branch witness to the given depth.
pub fn verify_witness(
    m: &Morphism,
    lang: &FactorLanguage,
    wit: &BranchWitness,
    depth: usize,
) -> Result<WitnessCheck> {
    let mut failures = Vec::new();
    let dom = m.domain();
    if wit.u.is_empty() || wit.u_prime.is_empty() || wit.v.is_empty() {
        failures.push("structure: u, u' and v must be nonempty".to_string());
        return Ok(WitnessCheck { certified: false, certified_depth: 0, failures });
    }
    let last = *wit.u.letters().last().unwrap();
    let last_p = *wit.u_prime.letters().last().unwrap();
    if last == last_p {
        failures.push(format!(
            "condition (iii): u and u' end with the same letter {}",
            dom.symbol(last)
        ));
    }
    let su = m.apply(wit.u.letters());
    let sup = m.apply(wit.u_prime.letters());
    let vl = wit.v.len();
    if vl > su.len() || su.letters()[su.len() - vl..] != *wit.v.letters() {
        failures.push("condition (ii): v is not a suffix of the image of u".to_string());
    }
    if vl > sup.len() || sup.letters()[sup.len() - vl..] != *wit.v.letters() {
        failures.push("condition (ii): v is not a suffix of the image of u'".to_string());
    }
    if failures.is_empty() {
        let k = su.len() - vl;
        let k_p = sup.len() - vl;
        if k != wit.k || k_p != wit.k_prime {
            failures.push("structure: stored phases disagree with |image| - |v|".to_string());
        }
        if k >= m.image(wit.u.letters()[0]).len() {
            failures.push("normalization: phase k reaches past the first image of u".to_string());
        }
        if k_p >= m.image(wit.u_prime.letters()[0]).len() {
            failures
                .push("normalization: phase k' reaches past the first image of u'".to_string());
        }
    }
    if !failures.is_empty() {
        return Ok(WitnessCheck { certified: false, certified_depth: 0, failures });
    }

    // Condition (i): u x and u' x stay inside the language to the depth.
    let tail = wit.x.expand(depth)?;
    for (name, head) in [("u", &wit.u), ("u'", &wit.u_prime)] {
        let mut word = head.letters().to_vec();
        word.extend_from_slice(tail.letters());
        word.truncate(depth.max(head.len() + 1));
        if let Some((i, w)) = first_bad_window(lang, &word)? {
            failures.push(format!(
                "condition (i): {}x leaves the language at position {} (window {})",
                name,
                i,
                w.render(dom)
            ));
        }
    }

    // Condition (ii): both representations spell the same y = v sigma(x).
    if failures.is_empty() {
        let sx = image_prefix(m, &wit.x, depth.saturating_sub(vl).max(1))?;
        let mut y = wit.v.letters().to_vec();
        y.extend_from_slice(sx.letters());
        y.truncate(depth);
        for (name, head, k) in [("u", &su, wit.k), ("u'", &sup, wit.k_prime)] {
            let mut img = head.letters().to_vec();
            img.extend_from_slice(sx.letters());
            img.drain(..k);
            img.truncate(y.len());
            if img != y {
                failures.push(format!(
                    "condition (ii): representation via {name} disagrees with v sigma(x)"
                ));
            }
        }
    }

    let certified = failures.is_empty();
    Ok(WitnessCheck {
        certified,
        certified_depth: if certified { depth } else { 0 },
        failures,
    })
}

/// Searches for certified branch witnesses with |u|, |u'| bounded by the
/// configuration, tails drawn from `candidate_points`.
pub fn witness_search(
    m: &Morphism,
    lang: &FactorLanguage,
    cfg: &WitnessConfig,
) -> Result<Vec<BranchWitness>> {
    let mut heads: Vec<Word> = Vec::new();
    for n in 1..=cfg.u_len_max.min(lang.horizon()) {
        heads.extend(lang.words_of_len(n)?);
    }
    let candidates = candidate_points(m, lang, cfg);
    let quick_depth = 32.min(cfg.depth);
    let mut out: Vec<BranchWitness> = Vec::new();
    for (i, a) in heads.iter().enumerate() {
        for b in heads.iter().skip(i + 1) {
            if a.letters().last() == b.letters().last() {
                continue;
            }
            let sa = m.apply(a.letters());
            let sb = m.apply(b.letters());
            let max_v = sa.len().min(sb.len());
            for vl in 1..=max_v {
                if sa.letters()[sa.len() - vl..] != sb.letters()[sb.len() - vl..] {
                    break;
                }
                let (ka, kb) = (sa.len() - vl, sb.len() - vl);
                if ka >= m.image(a.letters()[0]).len() || kb >= m.image(b.letters()[0]).len() {
                    continue;
                }
                let (u, u_prime, k, k_prime) = if (ka, a) <= (kb, b) {
                    (a.clone(), b.clone(), ka, kb)
                } else {
                    (b.clone(), a.clone(), kb, ka)
                };
                let v = Word::new(sa.letters()[sa.len() - vl..].to_vec());
                for x in &candidates {
                    let wit = BranchWitness {
                        u: u.clone(),
                        u_prime: u_prime.clone(),
                        v: v.clone(),
                        x: x.clone(),
                        k,
                        k_prime,
                        certified_depth: 0,
                    };
                    let quick = verify_witness(m, lang, &wit, quick_depth)?;
                    if !quick.certified {
                        continue;
                    }
                    let full = verify_witness(m, lang, &wit, cfg.depth)?;
                    if full.certified {
                        out.push(BranchWitness { certified_depth: cfg.depth, ..wit });
                    }
                }
            }
        }
    }
    out.sort_by(|l, r| {
        let kl = (l.u.len() + l.u_prime.len(), &l.u, &l.u_prime, &l.v, l.x.describe());
        let kr = (r.u.len() + r.u_prime.len(), &r.u, &r.u_prime, &r.v, r.x.describe());
        kl.cmp(&kr)
    });
    out.truncate(cfg.max_witnesses);
    Ok(out)
}

/// One parse of a finite prefix: y starts with the k-shifted image stream
/// of `preimage`, whose letters form a word of the language.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrefixParse {
    pub k: usize,
    pub preimage: Word,
}

/// All parses of the prefix `y`: pairs (k, x) with x in the language and
/// S^k(sigma(x)) starting with y, sorted by phase then preimage.
///
/// Parses that differ only in how the last image overhangs the end of `y`
/// are identified: readings are compared on positions up to
/// |y| - max image length, and the lexicographically least full preimage
/// represents each group. The cap guards against degenerate explosion;
/// exceeding it is an error.
pub fn prefix_parses(
    m: &Morphism,
    lang: &FactorLanguage,
    y: &[Letter],
    cap: usize,
) -> Result<Vec<PrefixParse>> {
    if y.is_empty() {
        return Err(Error::Precondition("prefix parsing needs a nonempty word".into()));
    }
    let mut out: Vec<PrefixParse> = Vec::new();
    let mut stack: Vec<Letter> = Vec::new();
    for z0 in m.domain().letters() {
        let img = m.image(z0);
        if img.is_empty() {
            continue;
        }
        for k in 0..img.len() {
            let take = (img.len() - k).min(y.len());
            if img.letters()[k..k + take] != y[..take] {
                continue;
            }
            stack.push(z0);
            parse_rest(m, lang, y, take, k, &mut stack, &mut out, cap)?;
            stack.pop();
        }
    }
    out.sort();
    out.dedup();
    let cutoff = y.len() as i64 - m.max_image_len() as i64;
    let mut seen: BTreeSet<(usize, Vec<Letter>)> = BTreeSet::new();
    let mut uniq = Vec::new();
    for p in out {
        let mut start = -(p.k as i64);
        let mut visible = 0usize;
        for &l in p.preimage.letters() {
            if start >= cutoff {
                break;
            }
            visible += 1;
            start += m.image(l).len() as i64;
        }
        if seen.insert((p.k, p.preimage.letters()[..visible].to_vec())) {
            uniq.push(p);
        }
    }
    Ok(uniq)
}

#[allow(clippy::too_many_arguments)]
fn parse_rest(
    m: &Morphism,
    lang: &FactorLanguage,
    y: &[Letter],
    matched: usize,
    k: usize,
    stack: &mut Vec<Letter>,
    out: &mut Vec<PrefixParse>,
    cap: usize,
) -> Result<()> {
    if out.len() > cap {
        return Err(Error::Precondition(format!("more than {cap} parses; raise the cap")));
    }
    let h = lang.horizon().min(stack.len());
    if !lang.contains(&stack[stack.len() - h..])? {
        return Ok(());
    }
    if matched == y.len() {
        out.push(PrefixParse { k, preimage: Word::new(stack.clone()) });
        return Ok(());
    }
    for z in m.domain().letters() {
        let img = m.image(z);
        if img.is_empty() {
            continue;
        }
        let take = img.len().min(y.len() - matched);
        if img.letters()[..take] == y[matched..matched + take] {
            stack.push(z);
            parse_rest(m, lang, y, matched + take, k, stack, out, cap)?;
            stack.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(spec: &str) -> (Morphism, FactorLanguage) {
        let m = Morphism::parse(spec).unwrap();
        let lang = FactorLanguage::build(&m, 24, 512).unwrap();
        (m, lang)
    }

    #[test]
    fn degenerate_phase_witness() {
        let (m, lang) = setup("a:aa");
        let wits = periodic_phase_witnesses(&m, &lang, 4).unwrap();
        assert_eq!(wits.len(), 1);
        let w = &wits[0];
        assert_eq!(w.period_word.render(m.domain()), "a");
        let reps: Vec<(String, usize)> =
            w.reps.iter().map(|(r, k)| (r.render(m.domain()), *k)).collect();
        assert_eq!(reps, vec![("a".into(), 0), ("a".into(), 1)]);
    }

    #[test]
    fn durand_periodic_point_has_unique_phase() {
        let (m, lang) = setup("a:abac,b:ab,c:c");
        assert!(periodic_phase_witnesses(&m, &lang, 4).unwrap().is_empty());
    }

    #[test]
    fn period_doubling_conjugate_witness() {
        // y = a sigma(y) has representations (ay,1) and (by,1); the tail
        // is the once-shifted fixed point of the square.
        let (m, lang) = setup("a:ba,b:aa");
        let cfg = WitnessConfig { depth: 256, ..WitnessConfig::default() };
        let wits = witness_search(&m, &lang, &cfg).unwrap();
        assert!(!wits.is_empty());
        let w = &wits[0];
        assert_eq!(w.u.render(m.domain()), "a");
        assert_eq!(w.u_prime.render(m.domain()), "b");
        assert_eq!(w.v.render(m.domain()), "a");
        assert_eq!((w.k, w.k_prime), (1, 1));
        assert_eq!(w.certified_depth, 256);
    }

    #[test]
    fn anti_fibonacci_witness_tail_is_fibonacci_word() {
        let (m, lang) = setup("a:ba,b:a");
        let cfg = WitnessConfig { depth: 256, ..WitnessConfig::default() };
        let wits = witness_search(&m, &lang, &cfg).unwrap();
        let w = wits
            .iter()
            .find(|w| w.u.render(m.domain()) == "b" && w.u_prime.render(m.domain()) == "a")
            .expect("expected the (b, a) witness");
        assert_eq!(w.v.render(m.domain()), "a");
        assert_eq!((w.k, w.k_prime), (0, 1));
        let fib = Morphism::parse("a:ab,b:a").unwrap();
        let t = SequenceGen::fixed_point(&fib, 0, 1).unwrap();
        assert_eq!(w.x.expand(64).unwrap(), t.expand(64).unwrap());
    }

    #[test]
    fn fibonacci_has_no_witness() {
        let (m, lang) = setup("a:ab,b:a");
        let cfg = WitnessConfig { depth: 128, ..WitnessConfig::default() };
        assert!(witness_search(&m, &lang, &cfg).unwrap().is_empty());
    }

    #[test]
    fn durand_family_witness_and_n1_rejection() {
        let (m, lang) = setup("a:abac,b:ab,c:c");
        let cfg = WitnessConfig { depth: 256, ..WitnessConfig::default() };
        let wits = witness_search(&m, &lang, &cfg).unwrap();
        let fam: Vec<&BranchWitness> = wits
            .iter()
            .filter(|w| {
                w.u.render(m.domain()) == "c"
                    && w.u_prime.render(m.domain()) == "a"
                    && w.v.render(m.domain()) == "c"
                    && (w.k, w.k_prime) == (0, 3)
            })
            .collect();
        assert!(!fam.is_empty(), "expected the (c, a) family witness");
        // The n = 1 instance needs aa in the language and must fail.
        let bogus = BranchWitness {
            u: m.domain().parse("c").unwrap().into(),
            u_prime: m.domain().parse("a").unwrap().into(),
            v: m.domain().parse("c").unwrap().into(),
            x: SequenceGen::fixed_point(&m, 0, 1).unwrap(),
            k: 0,
            k_prime: 3,
            certified_depth: 0,
        };
        let check = verify_witness(&m, &lang, &bogus, 64).unwrap();
        assert!(!check.certified);
        assert!(check.failures.iter().any(|f| f.contains("condition (i)")));
    }

    #[test]
    fn equal_last_letters_rejected() {
        let (m, lang) = setup("a:ba,b:aa");
        let wit = BranchWitness {
            u: m.domain().parse("a").unwrap().into(),
            u_prime: m.domain().parse("ba").unwrap().into(),
            v: m.domain().parse("a").unwrap().into(),
            x: SequenceGen::fixed_point(&m, 0, 2).unwrap(),
            k: 1,
            k_prime: 3,
            certified_depth: 0,
        };
        let check = verify_witness(&m, &lang, &wit, 64).unwrap();
        assert!(!check.certified);
        assert!(check.failures.iter().any(|f| f.contains("condition (iii)")));
    }

    #[test]
    fn prefix_parse_counts() {
        // Fibonacci prefixes parse uniquely; the conjugate period-doubling
        // morphism leaves aaa with the single pruned parse (ab, 1).
        let (m, lang) = setup("a:ab,b:a");
        let t = SequenceGen::fixed_point(&m, 0, 1).unwrap().expand(32).unwrap();
        let parses = prefix_parses(&m, &lang, &t, 64).unwrap();
        assert_eq!(parses.len(), 1);
        assert_eq!(parses[0].k, 0);

        let (m2, lang2) = setup("a:ba,b:aa");
        let y = m2.codomain().parse("aaa").unwrap();
        let parses = prefix_parses(&m2, &lang2, &y, 64).unwrap();
        assert_eq!(parses.len(), 1);
        assert_eq!(parses[0].k, 1);
        assert_eq!(parses[0].preimage.render(m2.domain()), "ab");
    }

    #[test]
    fn ambiguous_point_has_two_parses() {
        // The conjugate period-doubling point y = a sigma(y) starts ab;
        // its prefixes admit the (ay,1) and (by,1) readings.
        let (m, lang) = setup("a:ba,b:aa");
        let y = SequenceGen::fixed_point(&m, 0, 2).unwrap().shifted(1);
        let prefix = y.expand(48).unwrap();
        let parses = prefix_parses(&m, &lang, &prefix, 64).unwrap();
        assert!(parses.len() >= 2, "{parses:?}");
        let ks: BTreeSet<usize> = parses.iter().map(|p| p.k).collect();
        assert!(ks.contains(&1));
    }
}
