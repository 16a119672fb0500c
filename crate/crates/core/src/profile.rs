//! Structural predicates of a morphism, computed once up front.

use crate::morphism::Morphism;

/// Structural facts that downstream analyses branch on.
///
/// `primitive` is `None` for non-endomorphisms, where the notion does not
/// apply. `right_marked` means non-erasing with pairwise distinct last
/// letters of images; it implies `suffix_code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    /// Symbols whose iterated image is eventually empty, in letter order.
    pub erasable_letters: Vec<char>,
    /// No image is empty (equivalently, no letter is erasable).
    pub non_erasing: bool,
    /// Some power of the incidence matrix is strictly positive.
    pub primitive: Option<bool>,
    /// Images are pairwise distinct words.
    pub injective_on_letters: bool,
    /// Non-erasing and the last letters of images are pairwise distinct.
    pub right_marked: bool,
    /// All images nonempty and no image is a suffix of another.
    pub suffix_code: bool,
    /// Common image length, when all images share one (and it is positive).
    pub constant_length: Option<usize>,
}

/// Computes the profile of a morphism.
pub fn morphism_profile(m: &Morphism) -> StructuralProfile {
    let images = m.images();
    let non_erasing = images.iter().all(|w| !w.is_empty());

    let erasable_letters: Vec<char> = match m.erasable_letters() {
        Ok(letters) => letters.iter().map(|&l| m.domain().symbol(l)).collect(),
        // Non-endomorphism: only directly empty images are visible.
        Err(_) => m
            .domain()
            .letters()
            .filter(|&a| m.image(a).is_empty())
            .map(|a| m.domain().symbol(a))
            .collect(),
    };

    let primitive = m.incidence().ok().map(|inc| {
        let n = inc.size();
        if n == 1 {
            return inc.get(0, 0) > 0;
        }
        // Boolean reachability as bitmask rows; positivity must show up by
        // the Wielandt bound (n-1)^2 + 1.
        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let base: Vec<u64> = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| inc.get(a, b) > 0)
                    .fold(0u64, |acc, b| acc | (1u64 << b))
            })
            .collect();
        let mut cur = base.clone();
        let bound = (n - 1) * (n - 1) + 1;
        for _ in 0..bound {
            if cur.iter().all(|&row| row == full) {
                return true;
            }
            cur = cur
                .iter()
                .map(|&row| {
                    (0..n)
                        .filter(|&b| row & (1u64 << b) != 0)
                        .fold(0u64, |acc, b| acc | base[b])
                })
                .collect();
        }
        cur.iter().all(|&row| row == full)
    });

    let injective_on_letters = {
        let mut seen: Vec<&[_]> = Vec::new();
        images.iter().all(|w| {
            let s = w.letters();
            if seen.contains(&s) {
                false
            } else {
                seen.push(s);
                true
            }
        })
    };

    let right_marked = non_erasing && {
        let lasts: Vec<_> = images.iter().map(|w| w.letters().last().unwrap()).collect();
        (0..lasts.len()).all(|i| (0..i).all(|j| lasts[i] != lasts[j]))
    };

    let suffix_code = non_erasing
        && (0..images.len()).all(|i| {
            (0..images.len()).all(|j| {
                i == j || !images[i].letters().ends_with(images[j].letters())
            })
        });

    let constant_length = {
        let h = images.first().map(|w| w.len()).unwrap_or(0);
        if h > 0 && images.iter().all(|w| w.len() == h) {
            Some(h)
        } else {
            None
        }
    };

    StructuralProfile {
        erasable_letters,
        non_erasing,
        primitive,
        injective_on_letters,
        right_marked,
        suffix_code,
        constant_length,
    }
}
