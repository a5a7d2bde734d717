//! Representation-theoretic oracles, independent of the sign-counting recipe,
//! and the cross-checks that compare the two.

mod blattner;
mod branching;
mod crosscheck;

pub use blattner::{blattner_multiplicity, blattner_pattern, formal_blattner_sum, BlattnerInput, BLATTNER_MAX_N};
pub use branching::{
    branching_multiplicity, character_branching_oracle, character_branching_routes, gelfand_tsetlin_count,
    weyl_character_count, DominantWeight, OracleRoutes, ORACLE_MAX_ENTRY, ORACLE_MAX_RANK,
};
pub use crosscheck::{compact_weights, crosscheck_compact, crosscheck_u_n_1, CompactCrosscheck, UN1Crosscheck};
