//! Recognizability of substitution shifts: interpretations and parsing,
//! scope searches, certified non-recognizability witnesses, left-special
//! sequences, exceptional points, and the tower partition.

mod interp;
mod scope;
mod special;
mod tower;
mod witness;

pub(crate) use witness::image_prefix;

pub use interp::{cutting_points, desubstitute, interpretations, Interpretation};
pub use scope::{
    mosse_check, one_sided_reading_map, one_sided_verdict, two_sided_reading_map,
    two_sided_verdict, two_sided_verdict_aperiodic, ReadingOutcome, RecMode, RecStatus,
    RecognizabilityVerdict,
};
pub use special::{
    asymptotic_report, exceptional_points, left_special_sequences, weak_one_sided_check,
    AsymptoticClass, AsymptoticReport, ExceptionalPoint, ExceptionalReport, LeftSpecialSeq,
    SpecialSeqConfig, WeakCheckReport,
};
pub use tower::{tower_partition, tower_walk, TowerPartitionTable};
pub use witness::{
    candidate_points, periodic_phase_witnesses, prefix_parses, verify_witness, witness_search,
    BranchWitness, PhaseWitness, PrefixParse, Witness, WitnessCheck, WitnessConfig,
};
