//! Independent oracles for the extendability search and the quasi-matching DP.

use std::collections::BTreeSet;

use kempe_core::{
    brute_force_quasimatching, builtin, builtins, compute_gamma0, find_extension, has_noncrossing_perfect_quasimatching,
    AuxiliaryGraph, ClassTable, FrontierColoring, Pattern,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Endpoints of each edge id, built straight from the pattern description.
fn incidences(p: &Pattern) -> Vec<Vec<usize>> {
    p.internal_edges()
        .iter()
        .map(|&(u, v)| vec![u, v])
        .chain(p.frontier().iter().map(|&v| vec![v]))
        .collect()
}

fn proper(inc: &[Vec<usize>], colors: &[u8]) -> bool {
    for a in 0..inc.len() {
        for b in a + 1..inc.len() {
            if colors[a] == colors[b] && inc[a].iter().any(|v| inc[b].contains(v)) {
                return false;
            }
        }
    }
    true
}

/// Frontier colorings obtained by enumerating every 3-coloring of all edges.
fn projected_proper_colorings(p: &Pattern) -> BTreeSet<FrontierColoring> {
    let inc = incidences(p);
    let n = inc.len();
    let internal = p.internal_edges().len();
    let mut out = BTreeSet::new();
    let mut colors = vec![1u8; n];
    loop {
        if proper(&inc, &colors) {
            out.insert(FrontierColoring::new(colors[internal..].to_vec()).unwrap());
        }
        let mut i = 0;
        while i < n && colors[i] == 3 {
            colors[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        colors[i] += 1;
    }
    out
}

#[test]
fn extendability_matches_full_enumeration() {
    for p in builtins().into_iter().filter(|p| p.edge_count() <= 12) {
        let oracle = projected_proper_colorings(&p);
        let m = p.frontier_len();
        let lg = p.line_graph();
        for idx in 0..3u32.pow(m as u32) {
            let c = FrontierColoring::from_index(m, idx);
            let found = find_extension(&p, &c);
            assert_eq!(found.is_some(), oracle.contains(&c), "{} {}", p.name(), c);
            if let Some(w) = found {
                assert!(proper(&incidences(&p), w.colors()));
                assert!(w.is_proper(&lg));
                assert_eq!(w.frontier(&lg), c);
            }
        }
        let table = ClassTable::new(&p);
        let gamma0_from_oracle: BTreeSet<_> = oracle.iter().map(|c| table.representative_of(c).clone()).collect();
        assert_eq!(compute_gamma0(&p), gamma0_from_oracle, "{}", p.name());
    }
}

#[test]
fn gamma0_sizes() {
    let expected = [("P22", 2), ("P232", 3), ("P323", 14), ("P23322", 26), ("P32332", 56), ("P7", 38)];
    for (name, n) in expected {
        assert_eq!(compute_gamma0(&builtin(name).unwrap()).len(), n, "{name}");
    }
}

#[test]
fn extendability_is_class_invariant() {
    for p in builtins() {
        let table = ClassTable::new(&p);
        let gamma0 = compute_gamma0(&p);
        let m = p.frontier_len();
        for idx in 0..table.coloring_count() as u32 {
            let c = FrontierColoring::from_index(m, idx);
            assert_eq!(
                find_extension(&p, &c).is_some(),
                gamma0.contains(table.representative_of(&c)),
                "{} {}",
                p.name(),
                c
            );
        }
    }
}

fn graph_from_bits(n: usize, loop_bits: u32, chord_bits: u32) -> AuxiliaryGraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    AuxiliaryGraph::new(
        (0..n).collect(),
        (0..n).filter(|i| loop_bits >> i & 1 == 1),
        pairs.iter().enumerate().filter(|(i, _)| chord_bits >> i & 1 == 1).map(|(_, &p)| p),
    )
    .unwrap()
}

#[test]
fn dp_matches_brute_force_exhaustively_up_to_five() {
    for n in 0..=5usize {
        let chord_slots = n * n.saturating_sub(1) / 2;
        for loop_bits in 0..1u32 << n {
            for chord_bits in 0..1u32 << chord_slots {
                let g = graph_from_bits(n, loop_bits, chord_bits);
                assert_eq!(brute_force_quasimatching(&g).unwrap(), has_noncrossing_perfect_quasimatching(&g), "{g:?}");
            }
        }
    }
}

#[test]
fn dp_matches_brute_force_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(0x6b656d7065);
    for _ in 0..10_000 {
        let n = rng.gen_range(0..=8usize);
        let loop_p = rng.gen_range(0.0..1.0);
        let chord_p = rng.gen_range(0.0..1.0);
        let loops: Vec<_> = (0..n).filter(|_| rng.gen_bool(loop_p)).collect();
        let mut chords = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(chord_p) {
                    chords.push((a, b));
                }
            }
        }
        let g = AuxiliaryGraph::new((0..n).collect(), loops, chords).unwrap();
        assert_eq!(brute_force_quasimatching(&g).unwrap(), has_noncrossing_perfect_quasimatching(&g), "{g:?}");
    }
}

#[test]
fn loopless_odd_circles_have_no_perfect_quasimatching() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..2_000 {
        let n = 2 * rng.gen_range(0..5usize) + 1;
        let mut chords = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(0.5) {
                    chords.push((a, b));
                }
            }
        }
        let g = AuxiliaryGraph::new((0..n).collect(), [], chords).unwrap();
        assert!(!has_noncrossing_perfect_quasimatching(&g));
    }
}
