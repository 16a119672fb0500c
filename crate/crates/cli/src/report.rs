//! JSON report shapes. Field order is the documented schema order, so the
//! derived serializers emit it directly; everything sorts deterministically.

use std::collections::BTreeMap;

use serde::Serialize;
use subrec_core::{
    BranchWitness, ComplexityProfile, EigenCheckReport, FactorLanguage, GenKind, LeftSpecialSeq,
    Morphism, PeriodicPoint, PhaseWitness, RecMode, RecStatus, RecognizabilityVerdict,
    SequenceGen, StructuralProfile, TowerPartitionTable, Witness,
};

#[derive(Serialize)]
pub struct GenJson {
    pub prefix: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixed_point: Option<FixedPointJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub periodic: Option<PeriodicJson>,
}

#[derive(Serialize)]
pub struct FixedPointJson {
    pub letter: String,
    pub power: u32,
}

#[derive(Serialize)]
pub struct PeriodicJson {
    pub word: String,
}

pub fn gen_json(x: &SequenceGen) -> GenJson {
    let m = x.morphism();
    let (fixed_point, periodic) = match x.kind() {
        GenKind::FixedPoint { letter, power } => (
            Some(FixedPointJson {
                letter: m.domain().symbol(*letter).to_string(),
                power: *power,
            }),
            None,
        ),
        GenKind::Periodic { word } => {
            (None, Some(PeriodicJson { word: word.render(m.codomain()) }))
        }
    };
    GenJson {
        prefix: x.prefix().render(m.codomain()),
        shift: (x.skip() > 0).then_some(x.skip()),
        fixed_point,
        periodic,
    }
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum WitnessJson {
    Branch(BranchJson),
    Phase(PhaseJson),
}

#[derive(Serialize)]
pub struct BranchJson {
    pub u: String,
    pub u_prime: String,
    pub v: String,
    pub x: GenJson,
    pub k: usize,
    pub k_prime: usize,
    pub certified_depth: usize,
}

#[derive(Serialize)]
pub struct PhaseJson {
    pub period_word: String,
    pub reps: Vec<RepJson>,
    pub certified_depth: usize,
}

#[derive(Serialize)]
pub struct RepJson {
    pub word: String,
    pub k: usize,
}

pub fn branch_json(m: &Morphism, w: &BranchWitness) -> BranchJson {
    let dom = m.domain();
    BranchJson {
        u: w.u.render(dom),
        u_prime: w.u_prime.render(dom),
        v: w.v.render(dom),
        x: gen_json(&w.x),
        k: w.k,
        k_prime: w.k_prime,
        certified_depth: w.certified_depth,
    }
}

pub fn phase_json(m: &Morphism, w: &PhaseWitness) -> PhaseJson {
    let dom = m.domain();
    PhaseJson {
        period_word: w.period_word.render(dom),
        reps: w
            .reps
            .iter()
            .map(|(r, k)| RepJson { word: r.render(dom), k: *k })
            .collect(),
        certified_depth: w.certified_depth,
    }
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub mode: String,
    pub status: String,
    pub scope: Option<usize>,
    pub witnesses: Vec<WitnessJson>,
}

pub fn status_str(status: &RecStatus) -> &'static str {
    match status {
        RecStatus::Recognizable { .. } => "recognizable",
        RecStatus::NotRecognizable => "not_recognizable",
        RecStatus::Unknown => "unknown",
    }
}

pub fn verdict_json(m: &Morphism, v: &RecognizabilityVerdict) -> VerdictJson {
    VerdictJson {
        mode: match v.mode {
            RecMode::OneSided => "one-sided".into(),
            RecMode::TwoSided => "two-sided".into(),
        },
        status: status_str(&v.status).into(),
        scope: match v.status {
            RecStatus::Recognizable { scope } => scope,
            _ => None,
        },
        witnesses: v
            .witnesses
            .iter()
            .map(|w| match w {
                Witness::Branch(b) => WitnessJson::Branch(branch_json(m, b)),
                Witness::Phase(p) => WitnessJson::Phase(phase_json(m, p)),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct LambdaJson {
    pub j: usize,
    pub h: usize,
}

#[derive(Serialize)]
pub struct EigenJson {
    pub lambda: LambdaJson,
    pub sample_len: usize,
    pub passed: bool,
}

pub fn eigen_json(rep: &EigenCheckReport) -> EigenJson {
    EigenJson {
        lambda: LambdaJson { j: rep.j, h: rep.h },
        sample_len: rep.sample_len,
        passed: rep.passed,
    }
}

#[derive(Serialize)]
pub struct LanguageJson {
    pub p: Vec<usize>,
    pub s: Vec<i64>,
    pub left_special: BTreeMap<String, usize>,
    pub periodic_points: Vec<String>,
    pub saturated_up_to: usize,
}

pub fn language_json(
    m: &Morphism,
    lang: &FactorLanguage,
    profile: &ComplexityProfile,
    periodic: &[PeriodicPoint],
) -> LanguageJson {
    LanguageJson {
        p: profile.p.clone(),
        s: profile.s.clone(),
        left_special: profile
            .left_special_counts
            .iter()
            .enumerate()
            .map(|(i, &c)| ((i + 1).to_string(), c))
            .collect(),
        periodic_points: periodic.iter().map(|p| p.word.render(m.domain())).collect(),
        saturated_up_to: lang.saturated_up_to(),
    }
}

#[derive(Serialize)]
pub struct ProfileJson {
    pub erasable_letters: Vec<char>,
    pub non_erasing: bool,
    pub primitive: Option<bool>,
    pub injective_on_letters: bool,
    pub right_marked: bool,
    pub suffix_code: bool,
    pub constant_length: Option<usize>,
}

pub fn profile_json(p: &StructuralProfile) -> ProfileJson {
    ProfileJson {
        erasable_letters: p.erasable_letters.clone(),
        non_erasing: p.non_erasing,
        primitive: p.primitive,
        injective_on_letters: p.injective_on_letters,
        right_marked: p.right_marked,
        suffix_code: p.suffix_code,
        constant_length: p.constant_length,
    }
}

#[derive(Serialize)]
pub struct AnalyzeJson {
    pub morphism: String,
    pub horizon: usize,
    pub profile: ProfileJson,
    pub language: LanguageJson,
}

#[derive(Serialize)]
pub struct SpecialJson {
    pub side: String,
    pub horizon: usize,
    pub factors: BTreeMap<String, Vec<String>>,
    pub generators: Vec<GeneratorJson>,
}

#[derive(Serialize)]
pub struct GeneratorJson {
    pub generator: String,
    pub x: GenJson,
    pub extensions: Vec<String>,
    pub certified_depth: usize,
    pub non_minimal_family: bool,
}

pub fn generator_json(m: &Morphism, g: &LeftSpecialSeq) -> GeneratorJson {
    GeneratorJson {
        generator: g.gen.describe(),
        x: gen_json(&g.gen),
        extensions: g
            .extensions
            .iter()
            .map(|&l| m.domain().symbol(l).to_string())
            .collect(),
        certified_depth: g.certified_depth,
        non_minimal_family: g.non_minimal_family,
    }
}

#[derive(Serialize)]
pub struct TowerJson {
    pub scope: usize,
    pub cells: Vec<TowerCellJson>,
}

#[derive(Serialize)]
pub struct TowerCellJson {
    pub letter: String,
    pub phase: usize,
    pub windows: Vec<String>,
}

pub fn tower_json(m: &Morphism, table: &TowerPartitionTable) -> TowerJson {
    TowerJson {
        scope: table.scope,
        cells: table
            .cells
            .iter()
            .map(|((letter, phase), windows)| TowerCellJson {
                letter: m.domain().symbol(*letter).to_string(),
                phase: *phase,
                windows: windows.iter().map(|w| w.render(m.codomain())).collect(),
            })
            .collect(),
    }
}
