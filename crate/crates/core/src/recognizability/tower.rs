//! Tower partition induced by a reading scope, and the symbolic walk that
//! lists which tower cell each position of an image sequence occupies.

use std::collections::{BTreeMap, BTreeSet};

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::language::FactorLanguage;
use crate::morphism::Morphism;
use crate::word::Word;

use super::scope::{two_sided_reading_map, ReadingOutcome};

/// Windows of length 2*scope+1 grouped by the (letter, phase) cell that
/// reads their center. Cells are disjoint by construction and cover every
/// window of that length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerPartitionTable {
    pub scope: usize,
    pub cells: BTreeMap<(Letter, usize), BTreeSet<Word>>,
}

/// Builds the tower partition at scope `n`. Fails when some window still
/// has two centered readings there.
pub fn tower_partition(
    m: &Morphism,
    lang: &FactorLanguage,
    n: usize,
) -> Result<TowerPartitionTable> {
    let map = match two_sided_reading_map(m, lang, n)? {
        ReadingOutcome::Unique(map) => map,
        ReadingOutcome::Ambiguous { window, .. } => {
            return Err(Error::Precondition(format!(
                "centered readings ambiguous at scope {}: window {}",
                n,
                window.render(m.domain())
            )));
        }
    };
    let mut cells: BTreeMap<(Letter, usize), BTreeSet<Word>> = BTreeMap::new();
    for (window, reading) in map {
        cells.entry(reading).or_default().insert(Word::new(window));
    }
    Ok(TowerPartitionTable { scope: n, cells })
}

/// Walks the first `steps` positions of sigma(x) through the tower,
/// starting at phase `k` inside the image of the first letter of
/// `x_prefix`. Letters with empty images host no position and are skipped.
pub fn tower_walk(
    m: &Morphism,
    x_prefix: &Word,
    k: usize,
    steps: usize,
) -> Result<Vec<(Letter, usize)>> {
    let letters = x_prefix.letters();
    let head = *letters
        .first()
        .ok_or_else(|| Error::Precondition("tower walk needs a nonempty prefix".into()))?;
    let head_len = m.image(head).len();
    if k >= head_len {
        return Err(Error::Precondition(format!(
            "start phase {k} is outside the first image (length {head_len})"
        )));
    }
    let mut out = Vec::with_capacity(steps);
    let mut idx = 0usize;
    let mut phase = k;
    for _ in 0..steps {
        if idx >= letters.len() {
            return Err(Error::Precondition(
                "prefix exhausted before the walk finished".into(),
            ));
        }
        out.push((letters[idx], phase));
        phase += 1;
        if phase >= m.image(letters[idx]).len() {
            idx += 1;
            phase = 0;
            while idx < letters.len() && m.image(letters[idx]).is_empty() {
                idx += 1;
            }
        }
    }
    Ok(out)
}
