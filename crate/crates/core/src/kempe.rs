//! Boundary switches, auxiliary graphs and non-crossing perfect
//! quasi-matchings.
//!
//! For a frontier coloring `γ`, a target set `Γ` and a color pair `{i, j}`,
//! the auxiliary graph places the frontier edges colored `i` or `j` on a
//! circle in cyclic order. A loop marks an edge whose single switch leaves
//! `Γ`; a chord marks a pair whose joint switch leaves `Γ`. Loops are drawn
//! outside the circle and never cross anything; two chords cross when their
//! endpoints interleave.
//!
//! `γ` reduces to `Γ` when, for some pair, the auxiliary graph has no
//! non-crossing perfect quasi-matching: no arrangement of Kempe chains can
//! block every switch into `Γ`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{ColorPair, FrontierColoring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SwitchError {
    /// The frontier edge is not colored with either color of the pair.
    NotInPair { position: usize, color: u8, pair: ColorPair },
    SamePosition { position: usize },
    OutOfRange { position: usize, len: usize },
}

impl fmt::Display for SwitchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SwitchError::NotInPair { position, color, pair } => {
                write!(f, "frontier edge {position} has color {color}, not in pair {pair}")
            }
            SwitchError::SamePosition { position } => write!(f, "pair switch needs two distinct edges, got {position} twice"),
            SwitchError::OutOfRange { position, len } => write!(f, "frontier index {position} out of range ({len} edges)"),
        }
    }
}

impl core::error::Error for SwitchError {}

fn check_switchable(coloring: &FrontierColoring, pair: ColorPair, position: usize) -> Result<(), SwitchError> {
    if position >= coloring.len() {
        return Err(SwitchError::OutOfRange { position, len: coloring.len() });
    }
    let color = coloring.get(position);
    if !pair.contains(color) {
        return Err(SwitchError::NotInPair { position, color, pair });
    }
    Ok(())
}

/// `γ_ij(e)`: swaps `i ↔ j` on frontier edge `e`.
pub fn boundary_switch_single(coloring: &FrontierColoring, pair: ColorPair, e: usize) -> Result<FrontierColoring, SwitchError> {
    check_switchable(coloring, pair, e)?;
    let mut out = coloring.clone();
    out.set(e, pair.swap(coloring.get(e)));
    Ok(out)
}

/// `γ_ij(e, e')`: swaps `i ↔ j` on both edges. The two edges need not share a color.
pub fn boundary_switch_pair(
    coloring: &FrontierColoring,
    pair: ColorPair,
    e: usize,
    e2: usize,
) -> Result<FrontierColoring, SwitchError> {
    if e == e2 {
        return Err(SwitchError::SamePosition { position: e });
    }
    check_switchable(coloring, pair, e)?;
    check_switchable(coloring, pair, e2)?;
    let mut out = coloring.clone();
    out.set(e, pair.swap(coloring.get(e)));
    out.set(e2, pair.swap(coloring.get(e2)));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuxiliaryGraphError {
    CircleNotIncreasing,
    PositionOutOfRange { position: usize, len: usize },
    ChordIsLoop { position: usize },
}

impl fmt::Display for AuxiliaryGraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuxiliaryGraphError::CircleNotIncreasing => write!(f, "circle vertices must be strictly increasing frontier indices"),
            AuxiliaryGraphError::PositionOutOfRange { position, len } => {
                write!(f, "circle position {position} out of range ({len} vertices)")
            }
            AuxiliaryGraphError::ChordIsLoop { position } => write!(f, "chord joins position {position} to itself"),
        }
    }
}

impl core::error::Error for AuxiliaryGraphError {}

/// Circle-embedded pseudograph over the frontier edges colored `i` or `j`.
///
/// Loops and chords refer to circle positions, not frontier indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxiliaryGraph {
    circle: Vec<usize>,
    loops: Vec<bool>,
    chords: Vec<Vec<bool>>,
}

impl AuxiliaryGraph {
    pub fn new(
        circle: Vec<usize>,
        loops: impl IntoIterator<Item = usize>,
        chords: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, AuxiliaryGraphError> {
        if circle.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AuxiliaryGraphError::CircleNotIncreasing);
        }
        let n = circle.len();
        let range = |position: usize| {
            if position < n {
                Ok(())
            } else {
                Err(AuxiliaryGraphError::PositionOutOfRange { position, len: n })
            }
        };
        let mut graph = AuxiliaryGraph { circle, loops: vec![false; n], chords: vec![vec![false; n]; n] };
        for p in loops {
            range(p)?;
            graph.loops[p] = true;
        }
        for (a, b) in chords {
            range(a)?;
            range(b)?;
            if a == b {
                return Err(AuxiliaryGraphError::ChordIsLoop { position: a });
            }
            graph.chords[a][b] = true;
            graph.chords[b][a] = true;
        }
        Ok(graph)
    }

    /// Frontier indices of the circle vertices, in cyclic order.
    pub fn circle(&self) -> &[usize] {
        &self.circle
    }

    pub fn len(&self) -> usize {
        self.circle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circle.is_empty()
    }

    pub fn has_loop(&self, position: usize) -> bool {
        self.loops[position]
    }

    pub fn has_chord(&self, a: usize, b: usize) -> bool {
        self.chords[a][b]
    }

    /// Positions carrying a loop, ascending.
    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.loops.iter().enumerate().filter(|(_, &l)| l).map(|(p, _)| p)
    }

    /// Chords as `(a, b)` with `a < b`, ascending.
    pub fn chords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |a| (a + 1..n).filter(move |&b| self.chords[a][b]).map(move |b| (a, b)))
    }

    pub fn loop_count(&self) -> usize {
        self.loops().count()
    }

    pub fn chord_count(&self) -> usize {
        self.chords().count()
    }
}

/// Builds `A(γ, Γ, {i,j})`, where `in_target` decides membership in `Γ`.
pub fn build_auxiliary_graph<F>(coloring: &FrontierColoring, pair: ColorPair, in_target: F) -> AuxiliaryGraph
where
    F: Fn(&FrontierColoring) -> bool,
{
    let circle: Vec<usize> = (0..coloring.len()).filter(|&e| pair.contains(coloring.get(e))).collect();
    let n = circle.len();
    let mut graph = AuxiliaryGraph { circle, loops: vec![false; n], chords: vec![vec![false; n]; n] };
    let mut switched = coloring.clone();
    for a in 0..n {
        let e = graph.circle[a];
        let ce = coloring.get(e);
        switched.set(e, pair.swap(ce));
        graph.loops[a] = !in_target(&switched);
        for b in a + 1..n {
            let e2 = graph.circle[b];
            let ce2 = coloring.get(e2);
            switched.set(e2, pair.swap(ce2));
            let blocked = !in_target(&switched);
            graph.chords[a][b] = blocked;
            graph.chords[b][a] = blocked;
            switched.set(e2, ce2);
        }
        switched.set(e, ce);
    }
    graph
}

/// Interval DP over the circle cut open at position 0.
///
/// `cover[l][r]` holds when positions `l..r` can be partitioned into loops
/// and pairwise non-crossing chords lying inside the interval. The first
/// position of an interval is covered either by its loop or by a chord to
/// some `k`, which splits the rest into `l+1..k` and `k+1..r`.
pub fn has_noncrossing_perfect_quasimatching(graph: &AuxiliaryGraph) -> bool {
    let n = graph.len();
    // cover[l][r] for 0 <= l <= r <= n
    let mut cover = vec![vec![false; n + 1]; n + 1];
    for l in (0..=n).rev() {
        cover[l][l] = true;
        for r in l + 1..=n {
            let mut ok = graph.loops[l] && cover[l + 1][r];
            let mut k = l + 1;
            while !ok && k < r {
                ok = graph.chords[l][k] && cover[l + 1][k] && cover[k + 1][r];
                k += 1;
            }
            cover[l][r] = ok;
        }
    }
    cover[0][n]
}

/// Largest circle accepted by [`brute_force_quasimatching`].
pub const BRUTE_FORCE_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { size: usize, limit: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { size, limit } => {
                write!(f, "auxiliary graph has {size} vertices, brute force handles at most {limit}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Enumerates every partition of the circle into singletons and pairs, keeps
/// those whose blocks are available loops and chords, and checks pairwise
/// non-crossing explicitly.
pub fn brute_force_quasimatching(graph: &AuxiliaryGraph) -> Result<bool, OracleError> {
    let n = graph.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(OracleError::TooLarge { size: n, limit: BRUTE_FORCE_LIMIT });
    }
    let mut covered = vec![false; n];
    let mut chosen = Vec::new();
    Ok(enumerate_partitions(graph, &mut covered, &mut chosen))
}

fn enumerate_partitions(graph: &AuxiliaryGraph, covered: &mut [bool], chosen: &mut Vec<(usize, usize)>) -> bool {
    let Some(v) = covered.iter().position(|c| !c) else {
        return chords_pairwise_noncrossing(chosen);
    };
    covered[v] = true;
    if graph.loops[v] && enumerate_partitions(graph, covered, chosen) {
        return true;
    }
    for w in v + 1..covered.len() {
        if covered[w] || !graph.chords[v][w] {
            continue;
        }
        covered[w] = true;
        chosen.push((v, w));
        let found = enumerate_partitions(graph, covered, chosen);
        chosen.pop();
        covered[w] = false;
        if found {
            return true;
        }
    }
    covered[v] = false;
    false
}

fn chords_pairwise_noncrossing(chords: &[(usize, usize)]) -> bool {
    chords.iter().enumerate().all(|(i, &(a, b))| {
        chords[i + 1..].iter().all(|&(c, d)| {
            let interleave = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            !interleave
        })
    })
}

/// Returns the first pair (in order `(1,2)`, `(1,3)`, `(2,3)`) whose
/// auxiliary graph has no non-crossing perfect quasi-matching.
pub fn is_reducible_to<F>(coloring: &FrontierColoring, in_target: F) -> Option<ColorPair>
where
    F: Fn(&FrontierColoring) -> bool,
{
    ColorPair::ALL
        .into_iter()
        .find(|&pair| !has_noncrossing_perfect_quasimatching(&build_auxiliary_graph(coloring, pair, &in_target)))
}
