//! Extendability of frontier colorings to proper 3-edge-colorings.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::ClassTable;
use crate::coloring::FrontierColoring;
use crate::pattern::{LineGraph, Pattern};

/// A color for every edge id of a pattern (internal edges, then half-edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullColoring(Vec<u8>);

impl FullColoring {
    pub fn new(colors: Vec<u8>) -> Self {
        FullColoring(colors)
    }

    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn is_proper(&self, line_graph: &LineGraph) -> bool {
        self.0.len() == line_graph.len()
            && self.0.iter().all(|c| (1..=3).contains(c))
            && (0..line_graph.len()).all(|e| line_graph.neighbors(e).iter().all(|&f| self.0[e] != self.0[f]))
    }

    pub fn frontier(&self, line_graph: &LineGraph) -> FrontierColoring {
        FrontierColoring::new(self.0[line_graph.internal_count()..].to_vec()).expect("colors in 1..=3")
    }
}

/// Backtracking search for a proper coloring that agrees with `frontier`.
///
/// Internal edges are colored one at a time, always picking the uncolored
/// edge with the most colored neighbors.
pub fn find_extension(pattern: &Pattern, frontier: &FrontierColoring) -> Option<FullColoring> {
    let lg = pattern.line_graph();
    extend_with(&lg, frontier)
}

/// Verdict-only variant of [`find_extension`].
pub fn is_extendable(pattern: &Pattern, frontier: &FrontierColoring) -> bool {
    find_extension(pattern, frontier).is_some()
}

pub(crate) fn extend_with(lg: &LineGraph, frontier: &FrontierColoring) -> Option<FullColoring> {
    let internal = lg.internal_count();
    assert_eq!(frontier.len(), lg.len() - internal, "frontier coloring length");
    let mut colors = vec![0u8; lg.len()];
    colors[internal..].copy_from_slice(frontier.as_slice());
    // Half-edges sit on distinct vertices, so pinned colors never clash with
    // each other; only internal edges need checking.
    if search(lg, &mut colors, internal) {
        Some(FullColoring(colors))
    } else {
        None
    }
}

fn search(lg: &LineGraph, colors: &mut [u8], internal: usize) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for e in 0..internal {
        if colors[e] != 0 {
            continue;
        }
        let colored = lg.neighbors(e).iter().filter(|&&f| colors[f] != 0).count();
        if best.is_none_or(|(_, c)| colored > c) {
            best = Some((e, colored));
        }
    }
    let Some((edge, _)) = best else {
        return true;
    };
    let mut used = [false; 4];
    for &f in lg.neighbors(edge) {
        used[usize::from(colors[f])] = true;
    }
    for color in 1..=3u8 {
        if used[usize::from(color)] {
            continue;
        }
        colors[edge] = color;
        if search(lg, colors, internal) {
            return true;
        }
    }
    colors[edge] = 0;
    false
}

/// Representatives of the extendable classes (`Γ₀` on representatives).
pub fn compute_gamma0(pattern: &Pattern) -> BTreeSet<FrontierColoring> {
    let lg = pattern.line_graph();
    ClassTable::new(pattern)
        .representatives()
        .iter()
        .filter(|rep| extend_with(&lg, rep).is_some())
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::builtin;

    fn fc(s: &str) -> FrontierColoring {
        FrontierColoring::from_digits(s).unwrap()
    }

    #[test]
    fn p22_always_extends() {
        let p = builtin("P22").unwrap();
        for idx in 0..9 {
            assert!(is_extendable(&p, &FrontierColoring::from_index(2, idx)));
        }
    }

    #[test]
    fn p232_cases() {
        let p = builtin("P232").unwrap();
        assert!(!is_extendable(&p, &fc("121")));
        let w = find_extension(&p, &fc("123")).unwrap();
        assert!(w.is_proper(&p.line_graph()));
        assert_eq!(w.frontier(&p.line_graph()), fc("123"));
        assert_eq!(compute_gamma0(&p).len(), 3);
    }

    #[test]
    fn improper_full_coloring_detected() {
        let p = builtin("P232").unwrap();
        let lg = p.line_graph();
        // internal edges a=(0,1), b=(1,2); half-edges h0,h1,h2
        assert!(FullColoring::new(vec![2, 1, 1, 3, 3]).is_proper(&lg));
        assert!(!FullColoring::new(vec![1, 1, 2, 3, 2]).is_proper(&lg));
    }
}
