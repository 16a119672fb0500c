//! Interpretations: parses of a finite word inside images under the
//! morphism, and cutting points of generated sequences.

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::generator::SequenceGen;
use crate::language::FactorLanguage;
use crate::morphism::Morphism;
use crate::word::Word;

/// One way to read `w` inside `sigma(v)`: the occurrence starts at `offset`
/// and both the first and last letter of `v` contribute at least one
/// position. Letters with empty images never appear in `v`, which makes the
/// parse canonical. For odd window lengths the covering letter and phase of
/// the central position are recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    pub preimage: Word,
    pub offset: usize,
    pub center_letter: Option<Letter>,
    pub center_phase: Option<usize>,
}

/// All interpretations of `w`, sorted by preimage and offset.
pub fn interpretations(
    m: &Morphism,
    lang: &FactorLanguage,
    w: &[Letter],
) -> Result<Vec<Interpretation>> {
    if w.is_empty() {
        return Err(Error::Precondition("interpretations need a nonempty word".into()));
    }
    if w.len() > lang.horizon() {
        return Err(Error::Horizon { requested: w.len(), horizon: lang.horizon() });
    }
    let mut out = Vec::new();
    let mut stack: Vec<Letter> = Vec::new();
    for v0 in m.domain().letters() {
        let img = m.image(v0);
        if img.is_empty() {
            continue;
        }
        for offset in 0..img.len() {
            let take = (img.len() - offset).min(w.len());
            if img.letters()[offset..offset + take] != w[..take] {
                continue;
            }
            stack.push(v0);
            extend_parse(m, lang, w, take, offset, &mut stack, &mut out)?;
            stack.pop();
        }
    }
    out.sort_by(|a, b| (&a.preimage, a.offset).cmp(&(&b.preimage, b.offset)));
    Ok(out)
}

fn extend_parse(
    m: &Morphism,
    lang: &FactorLanguage,
    w: &[Letter],
    matched: usize,
    offset: usize,
    stack: &mut Vec<Letter>,
    out: &mut Vec<Interpretation>,
) -> Result<()> {
    if !lang.contains(stack)? {
        return Ok(());
    }
    if matched == w.len() {
        let preimage = Word::new(stack.clone());
        let (center_letter, center_phase) = if w.len() % 2 == 1 {
            let center = offset + w.len() / 2;
            let mut cum = 0usize;
            let mut found = (None, None);
            for &l in preimage.letters() {
                let il = m.image(l).len();
                if center < cum + il {
                    found = (Some(l), Some(center - cum));
                    break;
                }
                cum += il;
            }
            found
        } else {
            (None, None)
        };
        out.push(Interpretation { preimage, offset, center_letter, center_phase });
        return Ok(());
    }
    for x in m.domain().letters() {
        let img = m.image(x);
        if img.is_empty() {
            continue;
        }
        let take = img.len().min(w.len() - matched);
        if img.letters()[..take] == w[matched..matched + take] {
            stack.push(x);
            extend_parse(m, lang, w, matched + take, offset, stack, out)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Interpretations stripped to `(preimage, offset)` pairs, sorted
/// lexicographically by preimage and then offset.
pub fn desubstitute(
    m: &Morphism,
    lang: &FactorLanguage,
    w: &[Letter],
) -> Result<Vec<(Word, usize)>> {
    Ok(interpretations(m, lang, w)?
        .into_iter()
        .map(|i| (i.preimage, i.offset))
        .collect())
}

/// Positions `|sigma(x[0..n])| <= prefix_len` of the image of a generated
/// sequence: where image blocks start. Position 0 is always included;
/// erasing letters produce no new position.
pub fn cutting_points(x: &SequenceGen, prefix_len: usize) -> Result<Vec<usize>> {
    let m = x.morphism().clone();
    let mut out = vec![0usize];
    let mut cum = 0usize;
    let mut letters_taken = 0usize;
    let cap = 2 * prefix_len + 2 * m.domain().len() + 8;
    while cum <= prefix_len {
        letters_taken += 1;
        if letters_taken > cap {
            return Err(Error::DegenerateGenerator(
                "image of the sequence does not reach the requested length".into(),
            ));
        }
        let pre = x.expand(letters_taken)?;
        let last = pre.letters()[letters_taken - 1];
        cum += m.image(last).len();
        if cum <= prefix_len && out.last() != Some(&cum) {
            out.push(cum);
        }
    }
    Ok(out)
}
