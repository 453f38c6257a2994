//! Family constructions: `G_B` families, antipodal cycle families and the
//! hitting-set reduction, plus seeded random inputs.

pub mod cycles;
pub mod gb;
pub mod hsp;
pub mod random;

pub use cycles::{gen_antipodal_cycle_family, AntipodalFamily};
pub use gb::{
    ball, gb_counting_formulas, gen_gb_family, sample_gb_members, verify_gb_properties, GbCensus, GbFormulas,
    GbOptions, GbOutput,
};
pub use hsp::{gen_hsp_reduction, solve_hitting_set, HittingSetInstance, HspReduction};
