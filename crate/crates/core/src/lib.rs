//! Analysis toolkit for substitution shifts: factor languages, one- and
//! two-sided recognizability, witnesses for its failure, and the attached
//! tower and spectral structure.
//!
//! The crate works with finitely described objects throughout: morphisms
//! given by letter rules, languages built to an explicit horizon, and
//! infinite sequences carried as generators that can be replayed to any
//! depth. Every positive claim is certified by a finite check whose scope
//! (horizon, depth) is recorded in the result.

pub mod alphabet;
pub mod error;
pub mod generator;
pub mod language;
pub mod morphism;
pub mod periodic;
pub mod profile;
pub mod recognizability;
pub mod spectra;
pub mod word;

pub use alphabet::{Alphabet, Letter};
pub use error::{Error, Result};
pub use generator::{one_sided_seeds, two_sided_seeds, GenKind, Seed, SequenceGen};
pub use language::{ComplexityProfile, FactorLanguage, LinearRecurrenceEstimate, Ratio, Side};
pub use morphism::{IncidenceMatrix, Morphism};
pub use periodic::{find_periodic_points, PeriodicPoint};
pub use profile::{morphism_profile, StructuralProfile};
pub use recognizability::{
    asymptotic_report, candidate_points, cutting_points, desubstitute, exceptional_points,
    interpretations, left_special_sequences, mosse_check, one_sided_reading_map,
    one_sided_verdict, periodic_phase_witnesses, prefix_parses, tower_partition, tower_walk,
    two_sided_reading_map, two_sided_verdict, two_sided_verdict_aperiodic, verify_witness,
    weak_one_sided_check, witness_search, AsymptoticClass, AsymptoticReport, BranchWitness,
    ExceptionalPoint, ExceptionalReport, Interpretation, LeftSpecialSeq, PhaseWitness,
    PrefixParse, ReadingOutcome, RecMode, RecStatus, RecognizabilityVerdict, SpecialSeqConfig,
    TowerPartitionTable, WeakCheckReport, Witness, WitnessCheck, WitnessConfig,
};
pub use spectra::{eigen_check, reading_phases, EigenCheckReport};
pub use word::Word;
