//! Rank tables, per-class listings and auxiliary-graph dumps.

use std::fmt::Write as _;

use kempe_core::{AuxiliaryGraph, Pattern, RankTable, Verdict};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub rep: String,
    pub orbit_size: usize,
    pub rank: Option<u32>,
    pub witness_pair: Option<String>,
}

/// Machine-readable result for one pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternReport {
    pub pattern: String,
    pub reducible: bool,
    pub k0: u32,
    pub total_classes: usize,
    pub histogram: Vec<usize>,
    pub classes: Vec<ClassRow>,
}

impl PatternReport {
    pub fn new(pattern: &Pattern, table: &RankTable) -> PatternReport {
        let verdict = Verdict::from_table(pattern, table);
        let classes = table
            .representatives()
            .iter()
            .zip(table.orbit_sizes())
            .zip(table.ranks().iter().zip(table.witnesses()))
            .map(|((rep, &orbit_size), (&rank, witness))| ClassRow {
                rep: rep.to_string(),
                orbit_size,
                rank,
                witness_pair: witness.map(|p| p.to_string()),
            })
            .collect();
        PatternReport {
            pattern: verdict.pattern,
            reducible: verdict.reducible,
            k0: verdict.k0,
            total_classes: verdict.total_classes,
            histogram: verdict.rank_histogram,
            classes,
        }
    }

    pub fn unranked(&self) -> impl Iterator<Item = &ClassRow> {
        self.classes.iter().filter(|c| c.rank.is_none())
    }
}

/// Per-pattern class totals and rank counts, one row per pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistogramTable {
    rows: Vec<(String, usize, Vec<usize>)>,
    width: usize,
}

/// Collects verdicts into a table with one rank column per rank present in any row.
pub fn rank_histogram_table(verdicts: &[Verdict]) -> HistogramTable {
    assert!(!verdicts.is_empty(), "histogram table needs at least one verdict");
    let rows: Vec<_> = verdicts
        .iter()
        .map(|v| (v.pattern.clone(), v.total_classes, v.rank_histogram.clone()))
        .collect();
    let width = rows.iter().map(|r| r.2.len()).max().unwrap_or(0);
    HistogramTable { rows, width }
}

impl HistogramTable {
    /// `pattern,total,rank0,...`; ranks beyond a row's k0 are empty cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("pattern,total");
        for k in 0..self.width {
            write!(out, ",rank{k}").unwrap();
        }
        out.push('\n');
        for (name, total, hist) in &self.rows {
            write!(out, "{name},{total}").unwrap();
            for k in 0..self.width {
                out.push(',');
                if let Some(n) = hist.get(k) {
                    write!(out, "{n}").unwrap();
                }
            }
            out.push('\n');
        }
        out
    }

    /// Aligned text, `--` for ranks a pattern does not reach.
    pub fn to_text(&self) -> String {
        let mut header = vec!["Pattern".to_string(), "total".to_string()];
        header.extend((0..self.width).map(|k| format!("rank {k}")));
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|(name, total, hist)| {
                let mut row = vec![name.clone(), total.to_string()];
                row.extend((0..self.width).map(|k| hist.get(k).map_or("--".to_string(), |n| n.to_string())));
                row
            })
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|c| std::iter::once(&header).chain(&body).map(|r| r[c].len()).max().unwrap())
            .collect();
        let mut out = String::new();
        for row in std::iter::once(&header).chain(&body) {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, cell)| if c == 0 { format!("{cell:<w$}", w = widths[c]) } else { format!("{cell:>w$}", w = widths[c]) })
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

pub fn classes_text(report: &PatternReport) -> String {
    let mut out = format!("{} ({} classes)\n", report.pattern, report.total_classes);
    let rep_w = report.classes.first().map_or(3, |c| c.rep.len()).max(3);
    writeln!(out, "{:<rep_w$}  {:>5}  {:>4}  pair", "rep", "orbit", "rank").unwrap();
    for c in &report.classes {
        let rank = c.rank.map_or("-".to_string(), |r| r.to_string());
        let pair = c.witness_pair.as_deref().unwrap_or("-");
        writeln!(out, "{:<rep_w$}  {:>5}  {:>4}  {pair}", c.rep, c.orbit_size, rank).unwrap();
    }
    out
}

pub fn classes_csv(reports: &[PatternReport]) -> String {
    let mut out = String::from("pattern,rep,orbit_size,rank,witness_pair\n");
    for r in reports {
        for c in &r.classes {
            let rank = c.rank.map(|r| r.to_string()).unwrap_or_default();
            let pair = c.witness_pair.as_deref().unwrap_or("");
            writeln!(out, "{},{},{},{},\"{}\"", r.pattern, c.rep, c.orbit_size, rank, pair).unwrap();
        }
    }
    out
}

/// Three-part text dump: circle frontier indices, loop positions, then one
/// chord per line.
pub fn dump_auxiliary_graph(graph: &AuxiliaryGraph) -> String {
    let join = |xs: &mut dyn Iterator<Item = usize>| xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    writeln!(out, "{}", join(&mut graph.circle().iter().copied())).unwrap();
    writeln!(out, "{}", join(&mut graph.loops())).unwrap();
    for (a, b) in graph.chords() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

/// Reads back [`dump_auxiliary_graph`] output; `#` lines are ignored.
pub fn parse_auxiliary_graph(text: &str) -> Result<AuxiliaryGraph, String> {
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('#'));
    let nums = |l: &str| -> Result<Vec<usize>, String> {
        l.split_whitespace().map(|t| t.parse().map_err(|_| format!("bad number {t:?}"))).collect()
    };
    let circle = nums(lines.next().ok_or("missing circle line")?)?;
    let loops = nums(lines.next().ok_or("missing loop line")?)?;
    let mut chords = Vec::new();
    for l in lines {
        match nums(l)?.as_slice() {
            [] => {}
            &[a, b] => chords.push((a, b)),
            _ => return Err(format!("chord line needs two positions: {l:?}")),
        }
    }
    AuxiliaryGraph::new(circle, loops, chords).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use kempe_core::{builtin, compute_ranks, is_reducible_pattern};

    #[test]
    fn single_p22_row() {
        let t = rank_histogram_table(&[is_reducible_pattern(&builtin("P22").unwrap())]);
        assert_eq!(t.to_csv(), "pattern,total,rank0\nP22,2,2\n");
    }

    #[test]
    fn padding_for_short_rows() {
        let vs: Vec<_> = ["P22", "P232"].iter().map(|n| is_reducible_pattern(&builtin(n).unwrap())).collect();
        let t = rank_histogram_table(&vs);
        assert_eq!(t.to_csv(), "pattern,total,rank0,rank1\nP22,2,2,\nP232,4,3,1\n");
        assert_eq!(t.to_text(), "Pattern  total  rank 0  rank 1\nP22          2       2      --\nP232         4       3       1\n");
    }

    #[test]
    fn class_rows_for_p232() {
        let p = builtin("P232").unwrap();
        let r = PatternReport::new(&p, &compute_ranks(&p));
        assert_eq!(r.classes.len(), 4);
        assert_eq!(r.classes.iter().map(|c| c.orbit_size).sum::<usize>(), 27);
        let hard = r.classes.iter().find(|c| c.rep == "121").unwrap();
        assert_eq!(hard.rank, Some(1));
        assert_eq!(hard.witness_pair.as_deref(), Some("(1,2)"));
        let text = classes_text(&r);
        assert!(text.contains("121      6     1  (1,2)"), "{text}");
    }

    #[test]
    fn json_schema_fields() {
        let p = builtin("P22").unwrap();
        let json = serde_json::to_value(PatternReport::new(&p, &compute_ranks(&p))).unwrap();
        for key in ["pattern", "reducible", "k0", "total_classes", "histogram", "classes"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(json["histogram"], serde_json::json!([2]));
        assert_eq!(json["classes"][0], serde_json::json!({"rep": "11", "orbit_size": 3, "rank": 0, "witness_pair": null}));
    }

    #[test]
    fn dump_round_trip() {
        let g = AuxiliaryGraph::new(vec![0, 2, 3, 5], [1], [(0, 2), (2, 3)]).unwrap();
        let text = dump_auxiliary_graph(&g);
        assert_eq!(text, "0 2 3 5\n1\n0 2\n2 3\n");
        assert_eq!(parse_auxiliary_graph(&text).unwrap(), g);
        let empty = AuxiliaryGraph::new(vec![], [], []).unwrap();
        assert_eq!(parse_auxiliary_graph(&dump_auxiliary_graph(&empty)).unwrap(), empty);
    }
}
