//! Symbolic calculator for cobordism sets and groups of nested
//! submanifolds and links of spheres.
//!
//! The pipeline: a cobordism query names normal structures; their Thom
//! spaces are formal terms ([`space`], [`thom`]); nested queries produce
//! plus-smash terms that the rewriter unnests into wedges of suspensions
//! when a framed direction is available; the Hilton-Milnor splitting
//! ([`splitter`], indexed by the basic Whitehead products of [`hall`])
//! reduces the wedge to homotopy groups of spheres, which the bundled
//! table ([`table`]) resolves into explicit finitely generated abelian
//! groups ([`group`]) — or leaves honestly symbolic.

pub mod cobordism;
pub mod group;
pub mod hall;
pub mod space;
pub mod splitter;
pub mod table;
pub mod thom;

pub use cobordism::{
    cob, group_conditions, lcob, ncob, nested_chain, stable_cob, stable_ncob, Ambient,
    CobordismAnswer, CobordismQuery, GroupStatus, QueryError,
};
pub use group::{direct_sum, normal_form, render, FgAbelianGroup};
pub use hall::{generate_system, smash_space, witt_count, BasicProduct, ProductSystem};
pub use space::{
    as_wedge_of_spheres, connectivity, normalize, parse_space, Connectivity, SpaceExpr,
};
pub use splitter::{
    hilton_milnor, split_plus_smash, truncation_bound, Decomposition, Route, SplitMode, Summand,
    SummandLabel,
};
pub use table::SphereTable;
pub use thom::{parse_structure, spectrum_shadow, thom_space, ThomStructure};
