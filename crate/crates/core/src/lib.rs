//! Finite groups given by Cayley tables, minimal generating sets, the
//! cycliciser and k-flexibility by exhaustive search.

pub mod arith;
pub mod bits;
pub mod classify;
pub mod error;
pub mod flexibility;
pub mod group;
pub mod subgroups;

pub use classify::verify::{run_suite, CheckRecord, Suite, TheoremReport, VerifyOptions};
pub use classify::{classify_structure, predict_profile, StructureTag};
pub use error::{Error, Result};
pub use flexibility::{
    constructive_affine_extension, cycliciser, flexibility_profile, is_k_flexible, min_generators, subgroup_rank,
    CycResult, FlexEngine, FlexOptions, FlexVerdict, RankResult,
};
pub use group::spec::{parse_group_spec, GroupSpec};
pub use group::{FiniteGroup, GroupHom, GroupId};
pub use subgroups::SubgroupSet;
