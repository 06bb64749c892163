//! Kempe-chain reducibility of subcubic plane patterns for 3-edge-coloring.
//!
//! A [`Pattern`] is a connected plane subcubic graph whose outer vertices may
//! carry pending half-edges (its *frontier*). Every assignment of the colors
//! `{1, 2, 3}` to the frontier is a [`FrontierColoring`]. The checker ranks
//! frontier colorings: rank 0 when the coloring extends to a proper
//! 3-edge-coloring of the pattern, rank `k + 1` when, for some color pair, every
//! possible arrangement of Kempe chains outside the pattern allows a switch
//! into the colorings of rank at most `k`. A pattern is reducible when every
//! frontier coloring receives a rank.
//!
//! Work is done on equivalence classes of frontier colorings modulo color
//! permutations and the pattern's symmetry group; see [`ClassTable`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod canon;
mod coloring;
mod extend;
mod kempe;
mod library;
mod pattern;
mod rank;

pub use canon::{canonical_representative, enumerate_class_representatives, ClassTable};
pub use coloring::{ColorPair, ColorPermutation, ColoringError, FrontierColoring, COLORS};
pub use extend::{compute_gamma0, find_extension, is_extendable, FullColoring};
pub use kempe::{
    boundary_switch_pair, boundary_switch_single, brute_force_quasimatching, build_auxiliary_graph,
    has_noncrossing_perfect_quasimatching, is_reducible_to, AuxiliaryGraph, AuxiliaryGraphError,
    OracleError, SwitchError, BRUTE_FORCE_LIMIT,
};
pub use library::{builtin, builtins, UnknownPattern, BUILTIN_NAMES};
pub use pattern::{LineGraph, Pattern, PatternError, Symmetry, MAX_FRONTIER};
pub use rank::{compute_ranks, compute_ranks_observed, is_reducible_pattern, RankObserver, RankTable, Verdict};
