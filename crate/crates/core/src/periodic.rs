//! Periodic points of the shift, detected through the factor language.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::language::FactorLanguage;
use crate::word::Word;

/// A periodic point `word^inf`, canonicalized to the lexicographically
/// least rotation of a primitive period word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PeriodicPoint {
    pub word: Word,
}

/// Finds all periodic points of period at most `p_max`: primitive words `w`
/// such that every factor of `w^inf` up to the language horizon is in the
/// language. Requires the horizon to be at least `2 * p_max` so that the
/// check sees genuine wrap-around factors.
pub fn find_periodic_points(lang: &FactorLanguage, p_max: usize) -> Result<Vec<PeriodicPoint>> {
    if p_max == 0 {
        return Err(Error::Precondition("p_max must be positive".into()));
    }
    if lang.horizon() < 2 * p_max {
        return Err(Error::Horizon { requested: 2 * p_max, horizon: lang.horizon() });
    }
    let mut out: BTreeSet<Word> = BTreeSet::new();
    for p in 1..=p_max {
        for w in lang.level(p)? {
            let w = Word::new(w.clone());
            if w.primitive_root() != w {
                continue;
            }
            let canon = w.least_rotation();
            if out.contains(&canon) {
                continue;
            }
            let reps = lang.horizon() / canon.len() + 2;
            let long = canon.repeat(reps);
            let ok = (1..=lang.horizon()).all(|n| {
                long.letters()
                    .windows(n)
                    .all(|win| lang.contains(win).unwrap_or(false))
            });
            if ok {
                out.insert(canon);
            }
        }
    }
    Ok(out.into_iter().map(|word| PeriodicPoint { word }).collect())
}
