//! Finite descriptions of one-sided infinite sequences.
//!
//! A [`SequenceGen`] denotes `prefix . S^skip(tail)` where `S` is the shift
//! and the tail is either the one-sided fixed point of a power of the
//! morphism or a periodic sequence `w^inf`. Every sequence handled by the
//! analyses is carried in this form so that claims about it can be replayed
//! to any depth.

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::word::Word;

/// Cap on intermediate words while hunting for seeds.
const SEED_CAP: usize = 4096;

/// How the tail of a generated sequence is produced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum GenKind {
    /// The one-sided fixed point of `sigma^power` starting at `letter`.
    FixedPoint { letter: Letter, power: u32 },
    /// The periodic sequence `word^inf`.
    Periodic { word: Word },
}

/// A finitely described one-sided sequence tied to a morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceGen {
    morphism: Morphism,
    prefix: Word,
    skip: usize,
    kind: GenKind,
}

impl SequenceGen {
    /// The fixed point of `sigma^power` at `letter`. Fails when the image
    /// does not start with `letter` or when the orbit stalls on a finite
    /// word instead of growing.
    pub fn fixed_point(m: &Morphism, letter: Letter, power: u32) -> Result<Self> {
        if !m.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        if power == 0 {
            return Err(Error::Precondition("fixed point needs power >= 1".into()));
        }
        let mp = m.power(power)?;
        let img = mp.image(letter);
        if img.first() != Some(&letter) {
            return Err(Error::DegenerateGenerator(format!(
                "image of {} under power {} does not start with it",
                m.domain().symbol(letter),
                power
            )));
        }
        if !m.seed_grows(letter, power)? {
            return Err(Error::DegenerateGenerator(format!(
                "orbit of {} stalls on a finite word",
                m.domain().symbol(letter)
            )));
        }
        Ok(Self {
            morphism: m.clone(),
            prefix: Word::empty(),
            skip: 0,
            kind: GenKind::FixedPoint { letter, power },
        })
    }

    /// The periodic sequence `word^inf`.
    pub fn periodic(m: &Morphism, word: Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::DegenerateGenerator("empty period".into()));
        }
        Ok(Self {
            morphism: m.clone(),
            prefix: Word::empty(),
            skip: 0,
            kind: GenKind::Periodic { word },
        })
    }

    /// Prepends a finite word to the sequence.
    pub fn with_prefix(mut self, prefix: Word) -> Self {
        self.prefix = prefix.concat(&self.prefix);
        self
    }

    /// Drops the first `n` letters of the sequence.
    pub fn shifted(mut self, n: usize) -> Self {
        let cut = n.min(self.prefix.len());
        self.prefix = self.prefix.slice(cut, self.prefix.len());
        self.skip += n - cut;
        self
    }

    /// The attached morphism.
    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    /// The literal prefix word.
    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    /// How many letters of the tail are skipped.
    pub fn skip(&self) -> usize {
        self.skip
    }

    /// The tail description.
    pub fn kind(&self) -> &GenKind {
        &self.kind
    }

    /// The first `len` letters of the sequence.
    pub fn expand(&self, len: usize) -> Result<Word> {
        let mut out = self.prefix.letters().to_vec();
        out.truncate(len);
        if out.len() == len {
            return Ok(Word::new(out));
        }
        let need = len - out.len();
        match &self.kind {
            GenKind::Periodic { word } => {
                let p = word.letters();
                for i in 0..need {
                    out.push(p[(self.skip + i) % p.len()]);
                }
            }
            GenKind::FixedPoint { letter, power } => {
                let mp = self.morphism.power(*power)?;
                let target = self.skip + need;
                let mut w: Vec<Letter> = vec![*letter];
                while w.len() < target {
                    let next = mp.apply(&w);
                    if next.len() <= w.len() {
                        return Err(Error::DegenerateGenerator(
                            "fixed-point orbit stopped growing".into(),
                        ));
                    }
                    w = next.into_letters();
                    if w.len() > target {
                        w.truncate(target.max(SEED_CAP));
                    }
                }
                out.extend_from_slice(&w[self.skip..self.skip + need]);
            }
        }
        Ok(Word::new(out))
    }

    /// Compact human-readable description, e.g. `cc.fix(a,1)` or
    /// `S^2(fix(a,2))`.
    pub fn describe(&self) -> String {
        let base = match &self.kind {
            GenKind::FixedPoint { letter, power } => {
                format!("fix({},{})", self.morphism.domain().symbol(*letter), power)
            }
            GenKind::Periodic { word } => {
                format!("per({})", word.render(self.morphism.codomain()))
            }
        };
        let shifted = if self.skip > 0 {
            format!("S^{}({})", self.skip, base)
        } else {
            base
        };
        if self.prefix.is_empty() {
            shifted
        } else {
            format!("{}.{}", self.prefix.render(self.morphism.codomain()), shifted)
        }
    }
}

/// A letter whose image under `sigma^power` starts with the letter itself,
/// together with how its orbit behaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    /// The seed letter.
    pub letter: Letter,
    /// Minimal power of the morphism fixing the letter in first position.
    pub power: u32,
    /// Whether the orbit grows without bound.
    pub growing: bool,
    /// The finite word the orbit stalls on, for non-growing seeds.
    pub stall_word: Option<Word>,
}

/// Finds, per letter, the minimal power `k <= |A|` such that `sigma^k(a)`
/// starts with `a` and is longer than zero. Orbits over each seed are
/// classified as growing or stalling.
pub fn one_sided_seeds(m: &Morphism) -> Result<Vec<Seed>> {
    if !m.is_endomorphism() {
        return Err(Error::NotEndomorphism);
    }
    let n = m.domain().len();
    let mut seeds = Vec::new();
    for a in m.domain().letters() {
        // Iterate capped prefixes of sigma^k(a); the first letter of a
        // capped image prefix is exact.
        let mut w: Vec<Letter> = vec![a];
        for k in 1..=n as u32 {
            let mut img = m.apply(&w).into_letters();
            img.truncate(SEED_CAP);
            w = img;
            if w.first() == Some(&a) {
                let growing = m.seed_grows(a, k)?;
                let stall_word = if growing {
                    None
                } else {
                    Some(stall_limit(m, a, k)?)
                };
                seeds.push(Seed { letter: a, power: k, growing, stall_word });
                break;
            }
            if w.is_empty() {
                break;
            }
        }
    }
    Ok(seeds)
}

/// The finite word a non-growing seed orbit stalls on. Orbit words are
/// nested prefixes, so a non-growing orbit reaches a literal fixed word.
fn stall_limit(m: &Morphism, letter: Letter, power: u32) -> Result<Word> {
    let mp = m.power(power)?;
    let mut w = Word::new(vec![letter]);
    for _ in 0..(4 * m.domain().len() + 8) {
        let next = mp.apply(w.letters());
        if next == w {
            return Ok(w);
        }
        if next.len() > SEED_CAP {
            break;
        }
        w = next;
    }
    Err(Error::DegenerateGenerator(
        "stalling orbit did not settle".into(),
    ))
}

/// Pairs `(b, a, k)` such that `sigma^k(a)` starts with `a`, `sigma^k(b)`
/// ends with `b`, and `ba` is admissible per the provided check. Used to
/// seed two-sided fixed points.
pub fn two_sided_seeds(
    m: &Morphism,
    admissible: impl Fn(Letter, Letter) -> bool,
) -> Result<Vec<(Letter, Letter, u32)>> {
    if !m.is_endomorphism() {
        return Err(Error::NotEndomorphism);
    }
    let n = m.domain().len();
    let mut out = Vec::new();
    for k in 1..=(2 * n as u32) {
        let mk = m.power(k)?;
        for b in m.domain().letters() {
            let ib = mk.image(b);
            if ib.letters().last() != Some(&b) {
                continue;
            }
            for a in m.domain().letters() {
                let ia = mk.image(a);
                if ia.first() != Some(&a) {
                    continue;
                }
                if !admissible(b, a) {
                    continue;
                }
                if !out
                    .iter()
                    .any(|&(pb, pa, _): &(Letter, Letter, u32)| pb == b && pa == a)
                {
                    out.push((b, a, k));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Morphism {
        Morphism::parse("a:ab,b:a").unwrap()
    }

    #[test]
    fn fibonacci_seed_and_expansion() {
        let m = fib();
        let seeds = one_sided_seeds(&m).unwrap();
        assert_eq!(seeds.len(), 1);
        assert_eq!((seeds[0].letter, seeds[0].power), (0, 1));
        assert!(seeds[0].growing);

        let g = SequenceGen::fixed_point(&m, 0, 1).unwrap();
        assert_eq!(g.expand(13).unwrap().render(m.codomain()), "abaababaabaab");
    }

    #[test]
    fn conjugate_period_doubling_seeds() {
        let m = Morphism::parse("a:ba,b:aa").unwrap();
        let seeds = one_sided_seeds(&m).unwrap();
        let pairs: Vec<_> = seeds.iter().map(|s| (s.letter, s.power)).collect();
        assert_eq!(pairs, vec![(0, 2), (1, 2)]);
        assert!(seeds.iter().all(|s| s.growing));
    }

    #[test]
    fn identity_seed_is_flagged_periodic() {
        let m = Morphism::parse("a:a").unwrap();
        let seeds = one_sided_seeds(&m).unwrap();
        assert_eq!(seeds.len(), 1);
        assert!(!seeds[0].growing);
        assert_eq!(seeds[0].stall_word, Some(Word::new(vec![0])));
        assert!(SequenceGen::fixed_point(&m, 0, 1).is_err());
    }

    #[test]
    fn anti_fibonacci_has_only_power_two_seeds() {
        let m = Morphism::parse("a:ba,b:a").unwrap();
        let seeds = one_sided_seeds(&m).unwrap();
        let pairs: Vec<_> = seeds.iter().map(|s| (s.letter, s.power)).collect();
        assert_eq!(pairs, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn shifted_fixed_point_of_anti_fibonacci_is_fibonacci() {
        // S^2 of the power-two fixed point at a equals the fixed point of
        // the reversed rules, checked letter by letter.
        let anti = Morphism::parse("a:ba,b:a").unwrap();
        let g = SequenceGen::fixed_point(&anti, 0, 2).unwrap().shifted(2);
        let t = SequenceGen::fixed_point(&fib(), 0, 1).unwrap();
        assert_eq!(g.expand(64).unwrap(), t.expand(64).unwrap());
    }

    #[test]
    fn prefix_skip_and_describe() {
        let m = Morphism::parse("a:abac,b:ab,c:c").unwrap();
        let g = SequenceGen::fixed_point(&m, 0, 1)
            .unwrap()
            .with_prefix(Word::new(vec![2, 2]));
        assert_eq!(g.expand(8).unwrap().render(m.codomain()), "ccabacab");
        assert_eq!(g.describe(), "cc.fix(a,1)");
        let s = g.shifted(3);
        assert_eq!(s.expand(5).unwrap().render(m.codomain()), "bacab");
        assert_eq!(s.describe(), "S^1(fix(a,1))");

        let p = SequenceGen::periodic(&m, Word::new(vec![2])).unwrap();
        assert_eq!(p.expand(3).unwrap().render(m.codomain()), "ccc");
        assert_eq!(p.describe(), "per(c)");
    }

    #[test]
    fn expansion_is_prefix_monotone() {
        let m = fib();
        let g = SequenceGen::fixed_point(&m, 0, 1).unwrap();
        let long = g.expand(40).unwrap();
        for n in 0..40 {
            assert_eq!(g.expand(n).unwrap().letters(), &long.letters()[..n]);
        }
    }

    #[test]
    fn two_sided_seed_pairs() {
        let m = fib();
        let pairs = two_sided_seeds(&m, |_, _| true).unwrap();
        // sigma^2 fixes a on the left; b ends sigma^k(b) for no k <= 4? It
        // does: sigma^2(b) = ab ends with b. Pair (b, a) appears at k = 2.
        assert!(pairs.contains(&(1, 0, 2)));
    }
}
