//! Rational eigenvalue checks for constant-length substitutions.
//!
//! A morphism whose images all have length `h` stacks its shift into `h`
//! tower levels, and the level index of a point is a candidate additive
//! eigenfunction: `f(y) = zeta^{j * phase(y)}` with `zeta = e^{2 pi i / h}`
//! should satisfy `f(Sy) = zeta^j f(y)`. Recognizability makes the phase
//! well defined, so the relation can be tested exactly on a long sample.

use crate::error::{Error, Result};
use crate::generator::SequenceGen;
use crate::language::FactorLanguage;
use crate::morphism::Morphism;
use crate::profile::morphism_profile;
use crate::recognizability::{
    image_prefix, two_sided_reading_map, two_sided_verdict, ReadingOutcome, RecStatus,
};

/// Outcome of testing the candidate eigenvalue `zeta_h^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenCheckReport {
    /// Harmonic: the candidate eigenvalue is `e^{2 pi i j / h}`.
    pub j: usize,
    /// Common image length of the morphism, the order of the root of unity.
    pub h: usize,
    /// Requested number of sample positions.
    pub sample_len: usize,
    /// Adjacent position pairs whose defect was actually computed.
    pub positions_checked: usize,
    /// Largest 1-norm of a defect vector; the check passed exactly when 0.
    pub max_defect: usize,
    /// Whether `f(Sy) = zeta_h^j f(y)` held at every checked pair.
    pub passed: bool,
    /// True when `j = 0` made the relation hold identically.
    pub trivial: bool,
}

/// Tower phases along the image of `x`, read off the centered reading map.
///
/// Returns `(start, phases)` where `phases[t]` is the phase of position
/// `start + t` of the image point; the first `start` positions lack the
/// left context a centered window needs. Requires a two-sided recognizable
/// morphism, otherwise the phase is not a function of the point.
pub fn reading_phases(
    m: &Morphism,
    lang: &FactorLanguage,
    x: &SequenceGen,
    count: usize,
) -> Result<(usize, Vec<usize>)> {
    let verdict = two_sided_verdict(m, lang, 8)?;
    let scope = match verdict.status {
        RecStatus::Recognizable { scope: Some(n) } => n,
        _ => {
            return Err(Error::Precondition(
                "phase extraction needs a two-sided recognizable morphism".into(),
            ))
        }
    };
    let map = match two_sided_reading_map(m, lang, scope)? {
        ReadingOutcome::Unique(map) => map,
        ReadingOutcome::Ambiguous { .. } => {
            return Err(Error::Precondition(format!(
                "centered readings ambiguous at scope {scope}"
            )))
        }
    };
    let y = image_prefix(m, x, count + 2 * scope + 1)?;
    let letters = y.letters();
    let take = count.min(letters.len().saturating_sub(2 * scope));
    let mut phases = Vec::with_capacity(take);
    for i in 0..take {
        let window = &letters[i..i + 2 * scope + 1];
        let (_, phase) = map.get(window).ok_or_else(|| {
            Error::Precondition("sample window has no centered reading".into())
        })?;
        phases.push(*phase);
    }
    Ok((scope, phases))
}

/// Tests whether `e^{2 pi i j / h}` is an eigenvalue of the shift, with `h`
/// the common image length of `m` and the candidate eigenfunction read off
/// the tower phase of each sampled position of the image of `x`.
///
/// The comparison is exact: both sides of `f(Sy) = zeta^j f(y)` are powers
/// of a primitive h-th root of unity, written as standard basis vectors of
/// the length-h integer group ring, and the defect is the 1-norm of their
/// difference. Distinct powers of a primitive root differ, so the defect
/// vanishes exactly when the exponents agree mod h; no floating point is
/// involved.
pub fn eigen_check(
    m: &Morphism,
    lang: &FactorLanguage,
    j: usize,
    x: &SequenceGen,
    sample_len: usize,
) -> Result<EigenCheckReport> {
    let h = morphism_profile(m).constant_length.ok_or_else(|| {
        Error::Precondition("eigenvalue check needs a constant-length morphism".into())
    })?;
    if j >= h {
        return Err(Error::Precondition(format!(
            "harmonic {j} out of range for column length {h}"
        )));
    }
    if j == 0 {
        return Ok(EigenCheckReport {
            j,
            h,
            sample_len,
            positions_checked: 0,
            max_defect: 0,
            passed: true,
            trivial: true,
        });
    }
    let (_, phases) = reading_phases(m, lang, x, sample_len)?;
    let mut max_defect = 0usize;
    let mut pairs = 0usize;
    for w in phases.windows(2) {
        let shifted = (j * w[1]) % h;
        let scaled = (j * (w[0] + 1)) % h;
        let mut diff = vec![0i64; h];
        diff[shifted] += 1;
        diff[scaled] -= 1;
        let norm: i64 = diff.iter().map(|c| c.abs()).sum();
        max_defect = max_defect.max(norm as usize);
        pairs += 1;
    }
    Ok(EigenCheckReport {
        j,
        h,
        sample_len,
        positions_checked: pairs,
        max_defect,
        passed: max_defect == 0,
        trivial: false,
    })
}
