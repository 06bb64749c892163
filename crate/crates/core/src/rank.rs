//! Fixpoint computation of coloring ranks.
//!
//! Stage 0 marks every extendable class. Stage `i` tests each unranked class
//! against the colorings ranked before the stage started and assigns rank `i`
//! to those that reduce. The first stage that assigns nothing ends the run:
//! after it no later stage can assign anything either.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::ClassTable;
use crate::coloring::{ColorPair, FrontierColoring};
use crate::extend::extend_with;
use crate::kempe::{build_auxiliary_graph, has_noncrossing_perfect_quasimatching, AuxiliaryGraph};
use crate::pattern::Pattern;

/// Hooks into a rank computation. All methods default to no-ops.
pub trait RankObserver {
    /// Called for every auxiliary graph built, with the DP verdict.
    fn auxiliary_graph(
        &mut self,
        _stage: u32,
        _representative: &FrontierColoring,
        _pair: ColorPair,
        _graph: &AuxiliaryGraph,
        _has_matching: bool,
    ) {
    }

    /// Called after each stage with the number of classes it ranked; the
    /// final call reports zero.
    fn stage_complete(&mut self, _stage: u32, _newly_ranked: usize) {}
}

impl RankObserver for () {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    representatives: Vec<FrontierColoring>,
    orbit_sizes: Vec<usize>,
    ranks: Vec<Option<u32>>,
    witnesses: Vec<Option<ColorPair>>,
    k0: u32,
    found_non_reducible: bool,
}

impl RankTable {
    pub fn representatives(&self) -> &[FrontierColoring] {
        &self.representatives
    }

    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    /// Rank per representative; `None` means no rank.
    pub fn ranks(&self) -> &[Option<u32>] {
        &self.ranks
    }

    /// Color pair whose auxiliary graph witnessed the reduction, for ranks ≥ 1.
    pub fn witnesses(&self) -> &[Option<ColorPair>] {
        &self.witnesses
    }

    pub fn rank_of(&self, representative: &FrontierColoring) -> Option<Option<u32>> {
        self.representatives.binary_search(representative).ok().map(|i| self.ranks[i])
    }

    /// Smallest `k` with `Π_{k+1} = Π_k`.
    pub fn k0(&self) -> u32 {
        self.k0
    }

    /// Flag of the final pass: some class stayed unranked.
    pub fn found_non_reducible(&self) -> bool {
        self.found_non_reducible
    }

    /// Number of classes per rank, `0..=k0`.
    pub fn histogram(&self) -> Vec<usize> {
        let mut hist = vec![0usize; self.k0 as usize + 1];
        for r in self.ranks.iter().flatten() {
            hist[*r as usize] += 1;
        }
        hist
    }

    /// Representatives of rank at most `k` (`Π_k` on representatives).
    pub fn ranked_up_to(&self, k: u32) -> Vec<&FrontierColoring> {
        self.representatives
            .iter()
            .zip(&self.ranks)
            .filter(|(_, r)| r.is_some_and(|r| r <= k))
            .map(|(rep, _)| rep)
            .collect()
    }

    pub fn unranked(&self) -> Vec<FrontierColoring> {
        self.representatives
            .iter()
            .zip(&self.ranks)
            .filter(|(_, r)| r.is_none())
            .map(|(rep, _)| rep.clone())
            .collect()
    }
}

pub fn compute_ranks(pattern: &Pattern) -> RankTable {
    compute_ranks_observed(pattern, &mut ())
}

pub fn compute_ranks_observed(pattern: &Pattern, observer: &mut impl RankObserver) -> RankTable {
    let classes = ClassTable::new(pattern);
    let lg = pattern.line_graph();
    let reps = classes.representatives();

    let mut ranks: Vec<Option<u32>> = reps.iter().map(|rep| extend_with(&lg, rep).map(|_| 0)).collect();
    let mut witnesses: Vec<Option<ColorPair>> = vec![None; reps.len()];
    observer.stage_complete(0, ranks.iter().flatten().count());

    let mut stage = 1u32;
    let found_non_reducible = loop {
        // Frozen for the whole stage: classes ranked during it are not targets yet.
        let previous = ranks.clone();
        let in_target = |c: &FrontierColoring| previous[classes.class_of(c)].is_some();

        let mut newly = 0usize;
        let mut blocked_any = false;
        for (class, rep) in reps.iter().enumerate() {
            if previous[class].is_some() {
                continue;
            }
            let mut witness = None;
            for pair in ColorPair::ALL {
                let graph = build_auxiliary_graph(rep, pair, in_target);
                let has_matching = has_noncrossing_perfect_quasimatching(&graph);
                observer.auxiliary_graph(stage, rep, pair, &graph, has_matching);
                if !has_matching && witness.is_none() {
                    witness = Some(pair);
                }
            }
            match witness {
                Some(pair) => {
                    ranks[class] = Some(stage);
                    witnesses[class] = Some(pair);
                    newly += 1;
                }
                None => blocked_any = true,
            }
        }
        observer.stage_complete(stage, newly);
        if newly == 0 {
            break blocked_any;
        }
        stage += 1;
    };

    RankTable {
        representatives: reps.to_vec(),
        orbit_sizes: classes.orbit_sizes().to_vec(),
        ranks,
        witnesses,
        k0: stage - 1,
        found_non_reducible,
    }
}

/// Summary of a rank computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub pattern: String,
    pub reducible: bool,
    pub k0: u32,
    pub total_classes: usize,
    /// Classes per rank, `0..=k0`.
    pub rank_histogram: Vec<usize>,
    pub unranked: Vec<FrontierColoring>,
}

impl Verdict {
    pub fn from_table(pattern: &Pattern, table: &RankTable) -> Verdict {
        let unranked = table.unranked();
        Verdict {
            pattern: pattern.name().into(),
            reducible: unranked.is_empty(),
            k0: table.k0(),
            total_classes: table.representatives().len(),
            rank_histogram: table.histogram(),
            unranked,
        }
    }
}

/// Runs the checker and reports whether every class has a rank.
pub fn is_reducible_pattern(pattern: &Pattern) -> Verdict {
    Verdict::from_table(pattern, &compute_ranks(pattern))
}
