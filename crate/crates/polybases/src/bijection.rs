//! Column-set preserving bijections between reverse SSYT, atom skyline
//! fillings, and column quasi-key tableaux.
//!
//! The column-filling algorithm and the equivalent left row-filling
//! algorithm build the atom skyline filling with the same column sets as a
//! reverse SSYT; the right row-filling algorithm builds the column quasi-key
//! tableau instead. Top-justifying a filling and sorting its columns
//! recovers the reverse SSYT, so all three families are identified by their
//! column sets. The identification restricts to the particle-highest and to
//! the quasi-Yamanouchi subfamilies, and commutes with both
//! destandardization maps.
//!
//! Row-filling works on a working copy of the column sets; the runs it
//! deletes are recorded for inspection. Left row-filling takes minimally
//! decreasing runs from left to right, right row-filling minimally
//! increasing runs from right to left.

use serde::Serialize;
use std::collections::BTreeSet;

use crate::composition::WeakComposition;
use crate::tableau::{ReverseSsyt, SkylineFilling};

/// One run of a row-filling decomposition: the row index it lands in and
/// its entries, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Run {
    pub row: usize,
    pub entries: Vec<u32>,
}

fn filling_from_runs(runs: &[Run]) -> SkylineFilling {
    let n = runs.iter().map(|r| r.row).max().unwrap_or(0);
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
    for run in runs {
        assert!(rows[run.row - 1].is_empty(), "two runs landed in one row");
        rows[run.row - 1] = run.entries.clone();
    }
    let shape = WeakComposition::new(rows.iter().map(|r| r.len() as u32).collect());
    SkylineFilling::new(shape, rows)
}

/// The column-filling algorithm: builds the atom skyline filling with the
/// same column sets as `v`, placing each first-column entry in its own row
/// and each later entry, largest first, as low as the weakly decreasing row
/// condition allows.
pub fn column_fill(v: &ReverseSsyt) -> SkylineFilling {
    let sets = v.column_sets();
    let n = sets
        .first()
        .and_then(|s| s.iter().max())
        .copied()
        .unwrap_or(0) as usize;
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
    if let Some(first) = sets.first() {
        for &e in first {
            rows[e as usize - 1].push(e);
        }
    }
    for (c0, set) in sets.iter().enumerate().skip(1) {
        for &e in set.iter().rev() {
            let r = (0..n)
                .find(|&r| rows[r].len() == c0 && rows[r][c0 - 1] >= e)
                .expect("column sets of a reverse SSYT always place");
            rows[r].push(e);
        }
    }
    let shape = WeakComposition::new(rows.iter().map(|r| r.len() as u32).collect());
    SkylineFilling::new(shape, rows)
}

/// The left row-filling algorithm: repeatedly starts at the smallest unused
/// first-column entry `i`, extends right by the largest available entry
/// weakly smaller than the last, and writes the run as row `i`. Returns the
/// filling (equal to [`column_fill`]) and the run decomposition.
pub fn left_row_fill(v: &ReverseSsyt) -> (SkylineFilling, Vec<Run>) {
    let mut sets = v.column_sets();
    let mut runs = Vec::new();
    while !sets.first().is_none_or(BTreeSet::is_empty) {
        let start = *sets[0].iter().next().expect("nonempty first column");
        sets[0].remove(&start);
        let mut entries = vec![start];
        let mut last = start;
        for set in sets.iter_mut().skip(1) {
            // Largest entry weakly smaller than the previous one.
            let next = match set.range(..=last).next_back() {
                Some(&e) => e,
                None => break,
            };
            set.remove(&next);
            entries.push(next);
            last = next;
        }
        runs.push(Run {
            row: start as usize,
            entries,
        });
    }
    (filling_from_runs(&runs), runs)
}

/// The right row-filling algorithm: repeatedly starts at the smallest entry
/// of the rightmost nonempty column, extends left by the smallest available
/// entry weakly larger than the last, and writes the run as the row indexed
/// by its first-column element. Returns the column quasi-key tableau and the
/// run decomposition.
pub fn right_row_fill(v: &ReverseSsyt) -> (SkylineFilling, Vec<Run>) {
    let mut sets = v.column_sets();
    let mut runs = Vec::new();
    loop {
        while sets.last().is_some_and(BTreeSet::is_empty) {
            sets.pop();
        }
        let Some(rightmost) = sets.last_mut() else { break };
        let mut val = *rightmost.iter().next().expect("nonempty rightmost column");
        rightmost.remove(&val);
        let width = sets.len();
        let mut entries = vec![val];
        for c0 in (0..width - 1).rev() {
            // Smallest entry weakly larger than the previous one.
            let next = *sets[c0]
                .range(val..)
                .next()
                .expect("runs always reach the first column in a reverse SSYT");
            sets[c0].remove(&next);
            entries.push(next);
            val = next;
        }
        entries.reverse();
        runs.push(Run {
            row: entries[0] as usize,
            entries,
        });
    }
    (filling_from_runs(&runs), runs)
}

/// Top-justifies a filling and sorts each column decreasingly: the unique
/// reverse SSYT with the same column sets. Inverse to [`right_row_fill`] on
/// column quasi-key tableaux and to [`column_fill`] on atom fillings.
pub fn to_revssyt(t: &SkylineFilling) -> ReverseSsyt {
    ReverseSsyt::from_column_sets(&t.column_sets())
}
