//! End-to-end gate over the example gallery. Each test prints one
//! criterion line so a full run reads as a checklist.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};

use subrec_core::{
    desubstitute, eigen_check, exceptional_points, find_periodic_points, left_special_sequences,
    morphism_profile, mosse_check, one_sided_verdict, tower_partition, two_sided_verdict,
    two_sided_verdict_aperiodic, verify_witness, weak_one_sided_check, witness_search,
    BranchWitness, FactorLanguage, Letter, Morphism, RecMode, RecStatus, SequenceGen, Side,
    SpecialSeqConfig, Witness, WitnessConfig, Word,
};

const GALLERY: [&str; 8] = [
    "a:ab,b:a",
    "a:ba,b:a",
    "a:ab,b:aa",
    "a:ba,b:aa",
    "a:ab,b:ba",
    "a:ab,b:ac,c:",
    "a:aa",
    "a:abac,b:ab,c:c",
];

fn report(n: usize, body: impl FnOnce() + UnwindSafe) {
    match catch_unwind(body) {
        Ok(()) => println!("criterion {n}: PASS"),
        Err(cause) => {
            println!("criterion {n}: FAIL");
            resume_unwind(cause);
        }
    }
}

fn setup(spec: &str, horizon: usize, depth: usize) -> (Morphism, FactorLanguage) {
    let m = Morphism::parse(spec).unwrap();
    let lang = FactorLanguage::build(&m, horizon, depth).unwrap();
    (m, lang)
}

fn branch_witnesses(witnesses: &[Witness]) -> Vec<&BranchWitness> {
    witnesses
        .iter()
        .filter_map(|w| match w {
            Witness::Branch(b) => Some(b),
            Witness::Phase(_) => None,
        })
        .collect()
}

/// First expandable fixed point of a power of the morphism, if any.
fn any_fixed_point(m: &Morphism) -> Option<SequenceGen> {
    for power in 1..=4u32 {
        for a in m.domain().letters() {
            if let Ok(gen) = SequenceGen::fixed_point(m, a, power) {
                return Some(gen);
            }
        }
    }
    None
}

#[test]
fn criterion_01_fibonacci() {
    report(1, || {
        let (m, lang) = setup("a:ab,b:a", 32, 1024);
        assert_eq!(morphism_profile(&m).primitive, Some(true));
        assert!(morphism_profile(&m).right_marked);

        let profile = lang.complexity_profile(31).unwrap();
        for n in 1..=30usize {
            assert_eq!(profile.p[n - 1], n + 1, "p_{n}");
        }
        for n in 1..=20usize {
            assert_eq!(lang.special_factors(n, Side::Left).unwrap().len(), 1, "length {n}");
        }

        let two = two_sided_verdict(&m, &lang, 16).unwrap();
        // Golden minimal scope: radius 1 resolves every centered reading.
        assert_eq!(two.status, RecStatus::Recognizable { scope: Some(1) });

        let one = one_sided_verdict(&m, &lang, 8, &WitnessConfig::default()).unwrap();
        assert!(matches!(one.status, RecStatus::Recognizable { .. }));

        let exc = exceptional_points(&m, &lang, 24).unwrap();
        assert!(exc.applicable);
        assert!(exc.points.is_empty());
    });
}

#[test]
fn criterion_02_period_doubling() {
    report(2, || {
        let (m, lang) = setup("a:ab,b:aa", 16, 512);
        let one = one_sided_verdict(&m, &lang, 8, &WitnessConfig::default()).unwrap();
        assert!(matches!(one.status, RecStatus::Recognizable { .. }));

        let two = two_sided_verdict(&m, &lang, 8).unwrap();
        let scope = match two.status {
            RecStatus::Recognizable { scope: Some(n) } => n,
            other => panic!("expected a two-sided scope, got {other:?}"),
        };
        let table = tower_partition(&m, &lang, scope).unwrap();

        let mut covered: BTreeSet<Vec<Letter>> = BTreeSet::new();
        for words in table.cells.values() {
            for w in words {
                assert!(covered.insert(w.letters().to_vec()), "cells overlap on {w:?}");
            }
        }
        let level = lang.level(2 * scope + 1).unwrap();
        assert_eq!(&covered, level, "cells must cover the window level exactly");
    });
}

#[test]
fn criterion_03_conjugate_period_doubling() {
    report(3, || {
        let (m, lang) = setup("a:ba,b:aa", 24, 512);
        let two = two_sided_verdict(&m, &lang, 8).unwrap();
        assert!(matches!(two.status, RecStatus::Recognizable { .. }));

        let cfg = WitnessConfig { depth: 512, ..WitnessConfig::default() };
        let one = one_sided_verdict(&m, &lang, 8, &cfg).unwrap();
        assert_eq!(one.status, RecStatus::NotRecognizable);
        let dom = m.domain();
        let found = branch_witnesses(&one.witnesses).into_iter().any(|b| {
            b.u.render(dom) == "a"
                && b.u_prime.render(dom) == "b"
                && b.v.render(dom) == "a"
                && (b.k, b.k_prime) == (1, 1)
                && b.certified_depth >= 512
        });
        assert!(found, "expected the (ay,1)/(by,1) witness at depth >= 512");

        let weak = weak_one_sided_check(&m, &lang, 512).unwrap();
        assert!(weak.all_unique);
        assert_eq!(weak.certified_depth, 512);
    });
}

#[test]
fn criterion_04_anti_fibonacci() {
    report(4, || {
        let (m, lang) = setup("a:ba,b:a", 24, 512);
        let cfg = WitnessConfig { depth: 1024, ..WitnessConfig::default() };
        let wits = witness_search(&m, &lang, &cfg).unwrap();
        let dom = m.domain();
        let w = wits
            .iter()
            .find(|w| {
                w.u.render(dom) == "b" && w.u_prime.render(dom) == "a" && w.v.render(dom) == "a"
            })
            .expect("expected the (u=b, u'=a, v=a) witness");
        assert_eq!((w.k, w.k_prime), (0, 1));
        assert_eq!(w.certified_depth, 1024);
        let fib = Morphism::parse("a:ab,b:a").unwrap();
        let t = SequenceGen::fixed_point(&fib, 0, 1).unwrap();
        assert_eq!(w.x.expand(256).unwrap(), t.expand(256).unwrap());

        // The square: every shift of t within the two-sided scope fails,
        // at least |square(b)| = F_3 of them.
        let sq = m.power(2).unwrap();
        let sq_lang = FactorLanguage::build(&sq, 24, 512).unwrap();
        let exc = exceptional_points(&sq, &sq_lang, 24).unwrap();
        assert!(exc.applicable);
        let f3 = sq.image(1).len();
        assert_eq!(f3, 2);
        assert!(exc.points.len() >= f3, "{} exceptional points", exc.points.len());
        for p in &exc.points {
            assert!(p.parses.len() >= 2);
        }
    });
}

#[test]
fn criterion_05_erasing() {
    report(5, || {
        let (m, lang) = setup("a:ab,b:ac,c:", 24, 512);
        assert_eq!(morphism_profile(&m).erasable_letters, vec!['c']);
        let two = two_sided_verdict(&m, &lang, 8).unwrap();
        assert!(matches!(two.status, RecStatus::Recognizable { .. }));
    });
}

#[test]
fn criterion_06_durand() {
    report(6, || {
        let (m, lang) = setup("a:abac,b:ab,c:c", 24, 512);
        let dom = m.domain();

        let gens = left_special_sequences(&m, &lang, &SpecialSeqConfig::default()).unwrap();
        let prefixes: BTreeSet<String> =
            gens.iter().map(|g| g.gen.expand(8).unwrap().render(dom)).collect();
        // c^n then the fixed point of a: n = 0, 2, 3, 4 stay, n = 1 falls out.
        for want in ["abacabab", "ccabacab", "cccabaca", "ccccabac"] {
            assert!(prefixes.contains(want), "missing generator {want}");
        }
        assert!(!prefixes.contains("cabacaba"), "the single-c shift is not left-special");

        let periodic = find_periodic_points(&lang, 8).unwrap();
        assert_eq!(periodic.len(), 1);
        assert_eq!(periodic[0].word.render(dom), "c");

        let cfg = WitnessConfig { depth: 256, ..WitnessConfig::default() };
        let one = one_sided_verdict(&m, &lang, 6, &cfg).unwrap();
        assert_eq!(one.status, RecStatus::NotRecognizable);
        let family = branch_witnesses(&one.witnesses).into_iter().any(|b| {
            b.u.render(dom) == "c"
                && b.u_prime.render(dom) == "a"
                && b.v.render(dom) == "c"
                && (b.k, b.k_prime) == (0, 3)
        });
        assert!(family, "expected the (c, a) witness with phase 3");

        // The n = 1 instance would need aa in the language; it must fail.
        let bogus = BranchWitness {
            u: dom.parse("c").unwrap().into(),
            u_prime: dom.parse("a").unwrap().into(),
            v: dom.parse("c").unwrap().into(),
            x: SequenceGen::fixed_point(&m, 0, 1).unwrap(),
            k: 0,
            k_prime: 3,
            certified_depth: 0,
        };
        let check = verify_witness(&m, &lang, &bogus, 64).unwrap();
        assert!(!check.certified);
        assert!(check.failures.iter().any(|f| f.contains("condition (i)")));
    });
}

#[test]
fn criterion_07_degenerate_doubling() {
    report(7, || {
        let (m, lang) = setup("a:aa", 16, 128);
        let two = two_sided_verdict(&m, &lang, 4).unwrap();
        assert_eq!(two.status, RecStatus::NotRecognizable);
        let phase = two.witnesses.iter().find_map(|w| match w {
            Witness::Phase(p) => Some(p),
            Witness::Branch(_) => None,
        });
        let phase = phase.expect("expected a phase witness");
        assert_eq!(phase.period_word.render(m.domain()), "a");
        assert!(phase.reps.len() >= 2);

        let aperiodic = two_sided_verdict_aperiodic(&m, &lang, 4).unwrap();
        assert!(aperiodic.aperiodic_only);
        assert!(matches!(aperiodic.status, RecStatus::Recognizable { .. }));
    });
}

#[test]
fn criterion_08_complexity_identity_and_bounds() {
    report(8, || {
        for spec in GALLERY {
            let (_, lang) = setup(spec, 22, 512);
            let profile = lang.complexity_profile(21).unwrap();
            assert!(profile.difference_identity_holds, "first-difference identity fails for {spec}");
            for i in 0..20 {
                assert_eq!(profile.s[i], profile.left_sums[i], "{spec} at length {}", i + 1);
            }
        }
        for spec in GALLERY {
            let m = Morphism::parse(spec).unwrap();
            if morphism_profile(&m).primitive != Some(true) {
                continue;
            }
            let narrow = FactorLanguage::build(&m, 32, 1024)
                .unwrap()
                .complexity_profile(31)
                .unwrap();
            let wide = FactorLanguage::build(&m, 40, 1024)
                .unwrap()
                .complexity_profile(31)
                .unwrap();
            let max_narrow = narrow.s[..30].iter().max().copied().unwrap();
            let max_wide = wide.s[..30].iter().max().copied().unwrap();
            assert_eq!(max_narrow, max_wide, "max s_n unstable for {spec}");
            assert!(max_narrow <= 4, "unexpected growth for {spec}");
        }
    });
}

/// Direct string matching over every candidate preimage in the language,
/// mirroring the definition of an interpretation: the occurrence starts
/// inside the first image, ends inside the last, and the preimage avoids
/// letters with empty images.
fn naive_parse_oracle(m: &Morphism, lang: &FactorLanguage, w: &[Letter]) -> Vec<(Word, usize)> {
    let v_max = (m.max_image_len() + 11).min(lang.horizon());
    let mut out = Vec::new();
    for len in 1..=v_max {
        for v in lang.words_of_len(len).unwrap() {
            if v.letters().iter().any(|&l| m.image(l).is_empty()) {
                continue;
            }
            let image = m.apply(v.letters());
            let first = m.image(v.letters()[0]).len();
            let body = image.len() - m.image(*v.letters().last().unwrap()).len();
            for k in 0..first {
                if k + w.len() <= image.len()
                    && &image.letters()[k..k + w.len()] == w
                    && k + w.len() > body
                {
                    out.push((v.clone(), k));
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    out
}

#[test]
fn criterion_09_desubstitution_oracle() {
    report(9, || {
        for spec in GALLERY {
            let (m, lang) = setup(spec, 24, 512);
            let mut mismatches = 0usize;
            for len in 1..=12usize {
                for w in lang.words_of_len(len).unwrap() {
                    let fast = desubstitute(&m, &lang, w.letters()).unwrap();
                    let slow = naive_parse_oracle(&m, &lang, w.letters());
                    if fast != slow {
                        mismatches += 1;
                        eprintln!("{spec}: mismatch on {:?}", w.render(m.domain()));
                    }
                }
            }
            assert_eq!(mismatches, 0, "oracle mismatches for {spec}");
        }
    });
}

#[test]
fn criterion_10_implication_diagram() {
    report(10, || {
        for spec in GALLERY {
            let (m, lang) = setup(spec, 24, 512);
            let profile = morphism_profile(&m);
            let cfg = WitnessConfig { depth: 256, ..WitnessConfig::default() };
            let one = one_sided_verdict(&m, &lang, 8, &cfg).unwrap();
            let two = two_sided_verdict(&m, &lang, 8).unwrap();

            // One-sided recognizability restricts the larger point set.
            if matches!(one.status, RecStatus::Recognizable { .. }) {
                assert!(
                    matches!(two.status, RecStatus::Recognizable { .. }),
                    "{spec}: one-sided recognizable but two-sided is not"
                );
            }

            // Right-marked morphisms inherit the one-sided property.
            if profile.right_marked && matches!(two.status, RecStatus::Recognizable { .. }) {
                assert!(
                    matches!(one.status, RecStatus::Recognizable { .. }),
                    "{spec}: right-marked two-sided recognizable but not one-sided"
                );
            }

            // Suffix codes transfer the cut-status check with bounded slack.
            if profile.suffix_code {
                let Some(x) = any_fixed_point(&m) else { continue };
                let two_scope =
                    (0..=8usize).find(|&n| mosse_check(&m, &x, n, 2048, RecMode::TwoSided).unwrap());
                if let Some(n) = two_scope {
                    let bound = 2 * n + m.max_image_len() + 4;
                    let one_scope = (1..=bound)
                        .find(|&k| mosse_check(&m, &x, k, 2048, RecMode::OneSided).unwrap());
                    assert!(
                        one_scope.is_some(),
                        "{spec}: two-sided cut check holds at {n} but no one-sided scope <= {bound}"
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_11_eigenvalues() {
    report(11, || {
        let (tm, tm_lang) = setup("a:ab,b:ba", 16, 512);
        let x = SequenceGen::fixed_point(&tm, 0, 1).unwrap();
        let rep = eigen_check(&tm, &tm_lang, 1, &x, 4096).unwrap();
        assert_eq!(rep.h, 2);
        assert!(rep.passed);
        assert_eq!(rep.max_defect, 0);

        for spec in GALLERY {
            let m = Morphism::parse(spec).unwrap();
            if morphism_profile(&m).constant_length.is_none() {
                continue;
            }
            let lang = FactorLanguage::build(&m, 16, 256).unwrap();
            let x = any_fixed_point(&m).expect("constant-length gallery member without seed");
            let rep = eigen_check(&m, &lang, 0, &x, 64).unwrap();
            assert!(rep.passed, "j = 0 failed for {spec}");
            assert!(rep.trivial);
        }
    });
}
