//! Morphisms of free monoids: parsing, application, composition, incidence.

use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::word::Word;

/// A letter-to-word map between two alphabets.
///
/// Parsing infers the domain from rule heads and the codomain from the union
/// of heads and image letters. Most analyses require an endomorphism; `apply`
/// and `compose` work in the general case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    domain: Alphabet,
    codomain: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    /// Builds a morphism from explicit parts. `images[i]` is the image of
    /// domain letter `i` and must use only codomain letters.
    pub fn new(domain: Alphabet, codomain: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != domain.len() {
            return Err(Error::AlphabetMismatch(format!(
                "{} images for {} domain letters",
                images.len(),
                domain.len()
            )));
        }
        for w in &images {
            for &l in w.letters() {
                if (l as usize) >= codomain.len() {
                    return Err(Error::AlphabetMismatch(format!(
                        "image letter index {l} outside codomain"
                    )));
                }
            }
        }
        Ok(Self { domain, codomain, images })
    }

    /// Parses a spec like `a:ab,b:a` or `a -> ab, b -> a`. Rules may also be
    /// separated by newlines; whitespace is ignored. An empty right side
    /// denotes an erasing rule.
    pub fn parse(text: &str) -> Result<Self> {
        let mut heads: Vec<char> = Vec::new();
        let mut rhs: Vec<String> = Vec::new();
        for seg in text.split([',', '\n']) {
            let seg = seg.trim();
            if seg.is_empty() {
                continue;
            }
            let (head_part, image_part) = match seg.split_once("->") {
                Some((h, i)) => (h, i),
                None => seg
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("rule {seg:?} lacks `:` or `->`")))?,
            };
            let head: Vec<char> = head_part.chars().filter(|c| !c.is_whitespace()).collect();
            if head.len() != 1 {
                return Err(Error::Parse(format!(
                    "rule head {head_part:?} is not a single symbol"
                )));
            }
            let head = head[0];
            if !head.is_ascii_alphanumeric() {
                return Err(Error::BadSymbol(head));
            }
            if heads.contains(&head) {
                return Err(Error::DuplicateRule(head));
            }
            heads.push(head);
            rhs.push(image_part.chars().filter(|c| !c.is_whitespace()).collect());
        }
        if heads.is_empty() {
            return Err(Error::Parse("empty spec".into()));
        }
        let mut codomain_syms = heads.clone();
        for image in &rhs {
            for c in image.chars() {
                if !c.is_ascii_alphanumeric() {
                    return Err(Error::BadSymbol(c));
                }
                if !codomain_syms.contains(&c) {
                    codomain_syms.push(c);
                }
            }
        }
        let domain = Alphabet::new(heads.clone())?;
        // Codomain collapses onto the domain when no new letters appear, so
        // the common case parses directly as an endomorphism.
        let codomain = if codomain_syms.len() == heads.len() {
            domain.clone()
        } else {
            Alphabet::new(codomain_syms)?
        };
        let images = rhs
            .iter()
            .map(|s| codomain.parse(s).map(Word::new))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(domain, codomain, images)
    }

    /// The domain alphabet.
    pub fn domain(&self) -> &Alphabet {
        &self.domain
    }

    /// The codomain alphabet.
    pub fn codomain(&self) -> &Alphabet {
        &self.codomain
    }

    /// Image of a single letter.
    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter as usize]
    }

    /// All images in domain order.
    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// True when domain and codomain coincide.
    pub fn is_endomorphism(&self) -> bool {
        self.domain == self.codomain
    }

    fn require_endo(&self) -> Result<()> {
        if self.is_endomorphism() {
            Ok(())
        } else {
            Err(Error::NotEndomorphism)
        }
    }

    /// Applies the morphism letterwise to a word over the domain.
    pub fn apply(&self, word: &[Letter]) -> Word {
        let mut out = Vec::new();
        for &l in word {
            out.extend_from_slice(self.images[l as usize].letters());
        }
        Word::new(out)
    }

    /// Composition `self . inner`: first `inner`, then `self`. Requires the
    /// codomain of `inner` to equal the domain of `self`.
    pub fn compose(&self, inner: &Morphism) -> Result<Morphism> {
        if inner.codomain != self.domain {
            return Err(Error::AlphabetMismatch(
                "inner codomain differs from outer domain".into(),
            ));
        }
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w.letters()))
            .collect();
        Morphism::new(inner.domain.clone(), self.codomain.clone(), images)
    }

    /// The `n`-th compositional power, `n >= 1`. Requires an endomorphism.
    pub fn power(&self, n: u32) -> Result<Morphism> {
        self.require_endo()?;
        if n == 0 {
            return Err(Error::Precondition("power needs n >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Incidence matrix: `counts[a][b]` is the number of occurrences of `b`
    /// in the image of `a`. Requires an endomorphism.
    pub fn incidence(&self) -> Result<IncidenceMatrix> {
        self.require_endo()?;
        let n = self.domain.len();
        let mut counts = vec![0u64; n * n];
        for a in 0..n {
            for &b in self.images[a].letters() {
                counts[a * n + b as usize] += 1;
            }
        }
        Ok(IncidenceMatrix { n, counts })
    }

    /// Length of the longest image.
    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(|w| w.len()).max().unwrap_or(0)
    }

    /// True when some image is empty.
    pub fn is_erasing(&self) -> bool {
        self.images.iter().any(|w| w.is_empty())
    }

    /// Letters whose iterated image is eventually empty, in index order.
    /// Computed as a closure: a letter is erasable when every letter of its
    /// image is erasable. Requires an endomorphism.
    pub fn erasable_letters(&self) -> Result<Vec<Letter>> {
        self.require_endo()?;
        let n = self.domain.len();
        let mut erasable = vec![false; n];
        for _ in 0..=n {
            let mut changed = false;
            for a in 0..n {
                if erasable[a] {
                    continue;
                }
                if self.images[a].letters().iter().all(|&b| erasable[b as usize]) {
                    erasable[a] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Ok((0..n).filter(|&a| erasable[a]).map(|a| a as Letter).collect())
    }

    /// Sum of image lengths restricted to non-erasable letters, as a vector
    /// update: given per-letter weights, returns the weight of each image.
    fn image_weights(&self, weights: &[u64]) -> Vec<u64> {
        self.images
            .iter()
            .map(|w| {
                w.letters()
                    .iter()
                    .map(|&b| weights[b as usize])
                    .fold(0u64, u64::saturating_add)
            })
            .collect()
    }

    /// Whether the fixed-point orbit of `letter` under `self^power` grows
    /// without bound, judged by strict growth of the non-erasable content
    /// over `2 * |A|` steps. Requires an endomorphism.
    pub(crate) fn seed_grows(&self, letter: Letter, power: u32) -> Result<bool> {
        self.require_endo()?;
        let n = self.domain.len();
        let erasable = self.erasable_letters()?;
        let base: Vec<u64> = (0..n)
            .map(|a| if erasable.contains(&(a as Letter)) { 0 } else { 1 })
            .collect();
        // weights[a] = non-erasable length of sigma^(power*k)(a), iterated in k.
        let advance = |mut w: Vec<u64>| {
            for _ in 0..power {
                w = self.image_weights(&w);
            }
            w
        };
        let mut weights = advance(base.clone());
        let mut prev = base[letter as usize];
        let mut cur = weights[letter as usize];
        for _ in 0..(2 * n) {
            if cur <= prev {
                return Ok(false);
            }
            prev = cur;
            weights = advance(weights);
            cur = weights[letter as usize];
        }
        Ok(true)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rules: Vec<String> = self
            .domain
            .letters()
            .map(|a| {
                format!(
                    "{}:{}",
                    self.domain.symbol(a),
                    self.images[a as usize].render(&self.codomain)
                )
            })
            .collect();
        write!(f, "{}", rules.join(","))
    }
}

/// Occurrence-count matrix of a morphism; `get(a, b)` counts letter `b` in
/// the image of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    counts: Vec<u64>,
}

impl IncidenceMatrix {
    /// Side length.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at row `a`, column `b`.
    pub fn get(&self, a: usize, b: usize) -> u64 {
        self.counts[a * self.n + b]
    }

    /// Matrix product `self * other` with saturating arithmetic.
    pub fn mul(&self, other: &IncidenceMatrix) -> IncidenceMatrix {
        assert_eq!(self.n, other.n, "size mismatch");
        let n = self.n;
        let mut counts = vec![0u64; n * n];
        for a in 0..n {
            for m in 0..n {
                let x = self.counts[a * n + m];
                if x == 0 {
                    continue;
                }
                for b in 0..n {
                    let add = x.saturating_mul(other.counts[m * n + b]);
                    counts[a * n + b] = counts[a * n + b].saturating_add(add);
                }
            }
        }
        IncidenceMatrix { n, counts }
    }

    /// The `e`-th power, `e >= 1`.
    pub fn pow(&self, e: u32) -> IncidenceMatrix {
        assert!(e >= 1, "power needs e >= 1");
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// True when every entry is positive.
    pub fn is_positive(&self) -> bool {
        self.counts.iter().all(|&x| x > 0)
    }

    /// Row `a` as a vector: the abelianization of the image of `a`.
    pub fn row(&self, a: usize) -> &[u64] {
        &self.counts[a * self.n..(a + 1) * self.n]
    }
}
