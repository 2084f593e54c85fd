//! Skyline diagrams, the triple conditions, and exhaustive generation of the
//! tableau families: semi-skyline fillings with the atom, fundamental,
//! monomial, particle and quasi-key first-column rules, quasi-key tableaux,
//! reverse semistandard Young tableaux, and the destandardization maps whose
//! fixed points are the particle-highest and quasi-Yamanouchi objects.
//!
//! The skyline diagram of a weak composition `a` has `a_i` left-justified
//! boxes in row `i`, with row 1 lowest. Coordinates are 1-based `(row, col)`
//! throughout the public surface.

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::composition::{Partition, WeakComposition};
use crate::Error;

/// A filling of the skyline diagram of `shape` with positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkylineFilling {
    shape: WeakComposition,
    rows: Vec<Vec<u32>>,
}

impl SkylineFilling {
    /// Builds a filling; `rows[i]` is row `i+1` read left to right.
    ///
    /// Panics unless each row has exactly `shape` many entries, all positive.
    pub fn new(shape: WeakComposition, rows: Vec<Vec<u32>>) -> Self {
        assert_eq!(rows.len(), shape.len(), "one row vector per shape row");
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), shape.part(i) as usize, "row {} length", i + 1);
            assert!(row.iter().all(|&e| e > 0), "entries must be positive");
        }
        SkylineFilling { shape, rows }
    }

    pub fn shape(&self) -> &WeakComposition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.rows[row - 1][col - 1]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// The weak composition whose i-th part counts the entries equal to i.
    ///
    /// Panics if some entry exceeds `n`.
    pub fn weight(&self, n: usize) -> WeakComposition {
        let mut counts = vec![0u32; n];
        for row in &self.rows {
            for &e in row {
                assert!((e as usize) <= n, "entry {e} exceeds weight length {n}");
                counts[e as usize - 1] += 1;
            }
        }
        WeakComposition::new(counts)
    }

    /// Entry sets per column, 0-indexed by `col - 1`.
    pub fn column_sets(&self) -> Vec<BTreeSet<u32>> {
        let width = self.rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut sets = vec![BTreeSet::new(); width];
        for row in &self.rows {
            for (c, &e) in row.iter().enumerate() {
                sets[c].insert(e);
            }
        }
        sets
    }

    fn cells(&self) -> Vec<(u64, u32)> {
        let mut cells = Vec::new();
        for row in &self.rows {
            for (c, &e) in row.iter().enumerate() {
                cells.push((c as u64 + 1, e));
            }
        }
        cells
    }

    fn with_cells(&self, cells: &[(u64, u32)]) -> SkylineFilling {
        let mut rows = self.rows.clone();
        let mut it = cells.iter();
        for row in rows.iter_mut() {
            for e in row.iter_mut() {
                *e = it.next().expect("cell count unchanged").1;
            }
        }
        SkylineFilling {
            shape: self.shape.clone(),
            rows,
        }
    }

    /// Destandardization: repeatedly bump every occurrence of an entry `i`
    /// to `i + 1` when the leftmost `i` is not in the first column and no
    /// occurrence of the next-larger present entry sits weakly to its right.
    /// Fixed points are the particle-highest fillings.
    pub fn dst(&self) -> SkylineFilling {
        let mut cells = self.cells();
        destandardize(&mut cells, false);
        self.with_cells(&cells)
    }

    /// The quasi variant of [`dst`](Self::dst): bumps `i` when the leftmost
    /// `i` is not in the first column and has no `i + 1` weakly to its
    /// right. Fixed points are the quasi-Yamanouchi fillings.
    pub fn dst_q(&self) -> SkylineFilling {
        let mut cells = self.cells();
        destandardize(&mut cells, true);
        self.with_cells(&cells)
    }

    pub fn is_particle_highest(&self) -> bool {
        is_particle_highest_cells(&self.cells())
    }

    /// Quasi-Yamanouchi in the first-column sense used for fillings with
    /// first-column entries equal to their row index.
    pub fn is_quasi_yamanouchi(&self) -> bool {
        is_quasi_yamanouchi_cells(&self.cells())
    }

    /// Quasi-Yamanouchi in the quasi-key-tableau sense: the leftmost `i` is
    /// in row `i`, or weakly left of some `i + 1`.
    pub fn is_quasi_yamanouchi_rowwise(&self) -> bool {
        let present: BTreeSet<u32> = self.rows.iter().flatten().copied().collect();
        for &i in &present {
            let (row, col) = self
                .leftmost(i)
                .expect("present entries have a leftmost cell");
            if row as u32 == i {
                continue;
            }
            if !self.occurs_weakly_right(i + 1, col) {
                return false;
            }
        }
        true
    }

    /// The 1-based `(row, col)` of the leftmost occurrence of `i`, if any.
    fn leftmost(&self, i: u32) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (r0, row) in self.rows.iter().enumerate() {
            for (c0, &e) in row.iter().enumerate() {
                if e == i && best.is_none_or(|(_, bc)| c0 + 1 < bc) {
                    best = Some((r0 + 1, c0 + 1));
                }
            }
        }
        best
    }

    fn occurs_weakly_right(&self, i: u32, col: usize) -> bool {
        self.rows
            .iter()
            .any(|row| row.iter().enumerate().any(|(c0, &e)| e == i && c0 + 1 >= col))
    }
}

impl Serialize for SkylineFilling {
    /// JSON form `{"shape": [..], "rows": {"r": [entries]}}`, nonempty rows
    /// only, keyed by 1-based row index.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SkylineFilling", 2)?;
        s.serialize_field("shape", self.shape.parts())?;
        struct Rows<'a>(&'a [Vec<u32>]);
        impl Serialize for Rows<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let n = self.0.iter().filter(|r| !r.is_empty()).count();
                let mut m = serializer.serialize_map(Some(n))?;
                for (r0, row) in self.0.iter().enumerate() {
                    if !row.is_empty() {
                        m.serialize_entry(&(r0 + 1).to_string(), row)?;
                    }
                }
                m.end()
            }
        }
        s.serialize_field("rows", &Rows(&self.rows))?;
        s.end()
    }
}

/// Shared destandardization driver. A cell is `(column key, entry)`; the
/// first column is key 1, and keys order cells left to right across the
/// whole object (pairs offset the second component's keys). `quasi` selects
/// the `i + 1` rule; otherwise the target is the smallest present entry
/// larger than `i`, and entries with no larger entry present are left alone.
pub(crate) fn destandardize(cells: &mut [(u64, u32)], quasi: bool) {
    let mut guard = 0usize;
    loop {
        guard += 1;
        assert!(guard < 100_000, "destandardization did not terminate");
        let present: BTreeSet<u32> = cells.iter().map(|&(_, e)| e).collect();
        let mut bumped = false;
        for &i in &present {
            let leftmost = cells
                .iter()
                .filter(|&&(_, e)| e == i)
                .map(|&(k, _)| k)
                .min()
                .expect("entry is present");
            if leftmost == 1 {
                continue;
            }
            let target = if quasi {
                i + 1
            } else {
                match present.range(i + 1..).next() {
                    Some(&t) => t,
                    None => continue,
                }
            };
            if cells.iter().any(|&(k, e)| e == target && k >= leftmost) {
                continue;
            }
            for cell in cells.iter_mut() {
                if cell.1 == i {
                    cell.1 = i + 1;
                }
            }
            bumped = true;
            break;
        }
        if !bumped {
            return;
        }
    }
}

pub(crate) fn is_particle_highest_cells(cells: &[(u64, u32)]) -> bool {
    let present: BTreeSet<u32> = cells.iter().map(|&(_, e)| e).collect();
    for &i in &present {
        let leftmost = cells
            .iter()
            .filter(|&&(_, e)| e == i)
            .map(|&(k, _)| k)
            .min()
            .expect("present");
        if leftmost == 1 {
            continue;
        }
        let up = match present.range(i + 1..).next() {
            Some(&t) => t,
            None => continue,
        };
        if !cells.iter().any(|&(k, e)| e == up && k >= leftmost) {
            return false;
        }
    }
    true
}

pub(crate) fn is_quasi_yamanouchi_cells(cells: &[(u64, u32)]) -> bool {
    let present: BTreeSet<u32> = cells.iter().map(|&(_, e)| e).collect();
    for &i in &present {
        let leftmost = cells
            .iter()
            .filter(|&&(_, e)| e == i)
            .map(|&(k, _)| k)
            .min()
            .expect("present");
        if leftmost == 1 {
            continue;
        }
        if !cells.iter().any(|&(k, e)| e == i + 1 && k >= leftmost) {
            return false;
        }
    }
    true
}

/// Which of the two three-box configurations a triple is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleKind {
    /// γ, α adjacent in a lower row, β above α; lower row weakly longer.
    A,
    /// γ, α adjacent in a higher row, β below γ; higher row strictly longer.
    B,
}

/// A triple of boxes of a skyline diagram, in 1-based `(row, col)`
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub kind: TripleKind,
    pub gamma: (usize, usize),
    pub alpha: (usize, usize),
    pub beta: (usize, usize),
}

/// All triples of the skyline diagram of `shape`, over every pair of rows
/// satisfying the length conditions (not only adjacent rows).
pub fn triples_of(shape: &WeakComposition) -> Vec<Triple> {
    let n = shape.len();
    let mut out = Vec::new();
    for lower in 1..=n {
        for upper in lower + 1..=n {
            let (a_lo, a_up) = (shape.part(lower - 1), shape.part(upper - 1));
            if a_lo >= a_up {
                // Type A: γ=(lower,c), α=(lower,c+1), β=(upper,c+1).
                for c in 1..a_up.min(a_lo) {
                    out.push(Triple {
                        kind: TripleKind::A,
                        gamma: (lower, c as usize),
                        alpha: (lower, c as usize + 1),
                        beta: (upper, c as usize + 1),
                    });
                }
            }
            if a_up > a_lo {
                // Type B: γ=(upper,c), α=(upper,c+1), β=(lower,c).
                for c in 1..=a_lo.min(a_up - 1) {
                    out.push(Triple {
                        kind: TripleKind::B,
                        gamma: (upper, c as usize),
                        alpha: (upper, c as usize + 1),
                        beta: (lower, c as usize),
                    });
                }
            }
        }
    }
    out
}

/// The inversion predicate on triple values: β > γ ≥ α or γ ≥ α > β.
pub fn is_inversion(gamma: u32, alpha: u32, beta: u32) -> bool {
    (beta > gamma && gamma >= alpha) || (gamma >= alpha && alpha > beta)
}

/// Evaluates a triple of `f`'s shape on `f`.
pub fn triple_is_inversion(t: &Triple, f: &SkylineFilling) -> bool {
    is_inversion(
        f.entry(t.gamma.0, t.gamma.1),
        f.entry(t.alpha.0, t.alpha.1),
        f.entry(t.beta.0, t.beta.1),
    )
}

/// The tableau families on skyline diagrams.
///
/// `Assf`, `Fssf`, `Mssf`, `Lssf` and `Qssf` are semi-skyline fillings
/// (weakly decreasing rows, column-distinct entries, all triples inversion
/// triples) with extra first-column and shape rules; the `Qkt` family obeys
/// the quasi-key tableau conditions instead of the triple conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// First column entries equal to their row index (Demazure atoms).
    Assf,
    /// First column at most the row index and increasing up; entries of
    /// higher rows strictly larger than entries of lower rows (fundamental
    /// slides).
    Fssf,
    /// First column at most the row index and increasing up; constant rows
    /// (monomial slides).
    Mssf,
    /// The intersection of `Assf` and `Fssf` (fundamental particles).
    Lssf,
    /// First column at most the row index and increasing up (quasi-key
    /// polynomials as semi-skyline fillings).
    Qssf,
    /// Quasi-key tableaux.
    Qkt,
    /// Quasi-key tableaux with first column equal to the row index.
    Qkt1,
    /// Quasi-Yamanouchi quasi-key tableaux.
    Qqkt,
}

impl Model {
    pub const ALL: [Model; 8] = [
        Model::Assf,
        Model::Fssf,
        Model::Mssf,
        Model::Lssf,
        Model::Qssf,
        Model::Qkt,
        Model::Qkt1,
        Model::Qqkt,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Model::Assf => "ASSF",
            Model::Fssf => "FSSF",
            Model::Mssf => "MSSF",
            Model::Lssf => "LSSF",
            Model::Qssf => "QSSF",
            Model::Qkt => "qKT",
            Model::Qkt1 => "qKT1",
            Model::Qqkt => "QqKT",
        }
    }

    /// True for the semi-skyline families, whose definition includes the
    /// triple conditions.
    fn is_ssf(self) -> bool {
        !matches!(self, Model::Qkt | Model::Qkt1 | Model::Qqkt)
    }

    /// True if first-column entries must equal their row index.
    fn first_column_is_row_index(self) -> bool {
        matches!(self, Model::Assf | Model::Lssf | Model::Qkt1)
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Model::ALL
            .iter()
            .copied()
            .find(|m| m.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownModel(s.to_string()))
    }
}

/// True iff `f` is a valid filling for `model`. The base rules (weakly
/// decreasing rows, distinct column entries) are always checked; the triple
/// conditions are checked for every semi-skyline family even where the extra
/// conditions make them redundant.
pub fn is_valid(model: Model, f: &SkylineFilling) -> bool {
    // Rows weakly decrease.
    for row in f.rows() {
        if row.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
    }
    // No repeated entry in a column.
    for set in f.column_sets().iter().zip(columns_with_multiplicity(f)) {
        if set.0.len() != set.1 {
            return false;
        }
    }
    // First-column rules.
    let mut prev_first: Option<u32> = None;
    for (r0, row) in f.rows().iter().enumerate() {
        if let Some(&first) = row.first() {
            let r = (r0 + 1) as u32;
            if model.first_column_is_row_index() {
                if first != r {
                    return false;
                }
            } else if first > r {
                return false;
            }
            if let Some(p) = prev_first {
                if first <= p {
                    return false;
                }
            }
            prev_first = Some(first);
        }
    }
    if model.is_ssf() {
        if triples_of(f.shape())
            .iter()
            .any(|t| !triple_is_inversion(t, f))
        {
            return false;
        }
    } else if !qkt_conditions(f) {
        return false;
    }
    match model {
        Model::Fssf | Model::Lssf => higher_rows_strictly_larger(f),
        Model::Mssf => f
            .rows()
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] == w[1])),
        Model::Qqkt => f.is_quasi_yamanouchi_rowwise(),
        _ => true,
    }
}

fn columns_with_multiplicity(f: &SkylineFilling) -> Vec<usize> {
    let width = f.rows().iter().map(|r| r.len()).max().unwrap_or(0);
    let mut counts = vec![0usize; width];
    for row in f.rows() {
        for (c, _) in row.iter().enumerate() {
            counts[c] += 1;
        }
    }
    counts
}

fn higher_rows_strictly_larger(f: &SkylineFilling) -> bool {
    let mut max_below: Option<u32> = None;
    for row in f.rows() {
        if row.is_empty() {
            continue;
        }
        let min = *row.iter().min().expect("nonempty");
        if let Some(m) = max_below {
            if min <= m {
                return false;
            }
        }
        max_below = Some(*row.iter().max().expect("nonempty"));
    }
    true
}

/// Quasi-key tableau conditions beyond weakly decreasing rows and distinct
/// columns: entries bounded by the row index; the first column increases up;
/// an entry above a larger entry in its column forces a larger entry
/// immediately right of the lower one; and a strictly longer higher row
/// majorizes the next column of any lower row.
fn qkt_conditions(f: &SkylineFilling) -> bool {
    for (r0, row) in f.rows().iter().enumerate() {
        if row.iter().any(|&e| e > (r0 + 1) as u32) {
            return false;
        }
    }
    let n = f.shape().len();
    for lo in 1..=n {
        for hi in lo + 1..=n {
            let (len_lo, len_hi) = (
                f.shape().part(lo - 1) as usize,
                f.shape().part(hi - 1) as usize,
            );
            // Shared columns: condition on inverted pairs.
            for c in 1..=len_lo.min(len_hi) {
                let i = f.entry(hi, c);
                let k = f.entry(lo, c);
                if i < k
                    && (c + 1 > len_lo || f.entry(lo, c + 1) <= i) {
                        return false;
                    }
            }
            // Strictly longer higher row: diagonal comparison.
            if len_hi > len_lo {
                for c in 1..=len_lo.min(len_hi.saturating_sub(1)) {
                    if f.entry(lo, c) >= f.entry(hi, c + 1) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All fillings of `shape` valid for `model`, in canonical (sorted) order.
pub fn enumerate(model: Model, shape: &WeakComposition) -> Vec<SkylineFilling> {
    let n = shape.len();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut out = Vec::new();
    fill_cell(model, shape, 0, &mut rows, &mut out);
    out.sort();
    out
}

fn fill_cell(
    model: Model,
    shape: &WeakComposition,
    r0: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<SkylineFilling>,
) {
    if r0 == shape.len() {
        let f = SkylineFilling::new(shape.clone(), rows.clone());
        if is_valid(model, &f) {
            out.push(f);
        }
        return;
    }
    let len = shape.part(r0) as usize;
    if rows[r0].len() == len {
        fill_cell(model, shape, r0 + 1, rows, out);
        return;
    }
    let c0 = rows[r0].len();
    let row_index = (r0 + 1) as u32;
    let (lo, hi) = if c0 == 0 {
        if model.first_column_is_row_index() {
            (row_index, row_index)
        } else {
            (1, row_index)
        }
    } else {
        (1, rows[r0][c0 - 1])
    };
    for e in (lo..=hi).rev() {
        // Column-distinct prune against already-placed lower rows.
        if rows[..r0].iter().any(|row| row.get(c0) == Some(&e)) {
            continue;
        }
        rows[r0].push(e);
        fill_cell(model, shape, r0, rows, out);
        rows[r0].pop();
    }
}

/// A reverse semistandard Young tableau: rows weakly decrease left to right,
/// columns strictly decrease top to bottom. `rows[0]` is the top row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReverseSsyt {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl ReverseSsyt {
    /// Panics if the rows do not form a reverse SSYT of `shape`.
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Self {
        let t = ReverseSsyt { shape, rows };
        assert!(t.validate().is_ok(), "not a reverse SSYT");
        t
    }

    pub fn empty() -> Self {
        ReverseSsyt {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let bad = || Error::Parse {
            what: "reverse SSYT",
            text: format!("{:?}", self.rows),
        };
        if self.rows.len() != self.shape.len() {
            return Err(bad());
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.parts()[i] as usize {
                return Err(bad());
            }
            if row.contains(&0) || row.windows(2).any(|w| w[0] < w[1]) {
                return Err(bad());
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.iter().zip(above).any(|(&e, &a)| e >= a) {
                    return Err(bad());
                }
            }
        }
        Ok(())
    }

    /// Parses and validates the JSON form `{"shape": [..], "rows": [[..], ..]}`.
    pub fn from_json(s: &str) -> Result<Self, Error> {
        let t: ReverseSsyt = serde_json::from_str(s).map_err(|e| Error::Parse {
            what: "reverse SSYT JSON",
            text: e.to_string(),
        })?;
        t.validate()?;
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn max_entry(&self) -> u32 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn weight(&self, n: usize) -> WeakComposition {
        let mut counts = vec![0u32; n];
        for row in &self.rows {
            for &e in row {
                assert!((e as usize) <= n, "entry {e} exceeds weight length {n}");
                counts[e as usize - 1] += 1;
            }
        }
        WeakComposition::new(counts)
    }

    pub fn column_sets(&self) -> Vec<BTreeSet<u32>> {
        let width = self.rows.first().map_or(0, |r| r.len());
        let mut sets = vec![BTreeSet::new(); width];
        for row in &self.rows {
            for (c, &e) in row.iter().enumerate() {
                sets[c].insert(e);
            }
        }
        sets
    }

    /// The unique reverse SSYT with the given column sets: each column
    /// sorted decreasingly from the top. Panics if the result is not a valid
    /// reverse SSYT.
    pub fn from_column_sets(sets: &[BTreeSet<u32>]) -> Self {
        let depth = sets.first().map_or(0, |s| s.len());
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(depth);
        for r in 0..depth {
            let mut row = Vec::new();
            for set in sets {
                // r-th largest element of the column, if the column is deep
                // enough to reach this row.
                if set.len() > r {
                    let v = *set.iter().rev().nth(r).expect("checked depth");
                    row.push(v);
                } else {
                    break;
                }
            }
            rows.push(row);
        }
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect());
        ReverseSsyt::new(shape, rows)
    }

    pub(crate) fn cells(&self) -> Vec<(u64, u32)> {
        let mut cells = Vec::new();
        for row in &self.rows {
            for (c, &e) in row.iter().enumerate() {
                cells.push((c as u64 + 1, e));
            }
        }
        cells
    }

    fn with_cells(&self, cells: &[(u64, u32)]) -> ReverseSsyt {
        let mut rows = self.rows.clone();
        let mut it = cells.iter();
        for row in rows.iter_mut() {
            for e in row.iter_mut() {
                *e = it.next().expect("cell count unchanged").1;
            }
        }
        ReverseSsyt {
            shape: self.shape.clone(),
            rows,
        }
    }

    pub fn dst(&self) -> ReverseSsyt {
        let mut cells = self.cells();
        destandardize(&mut cells, false);
        self.with_cells(&cells)
    }

    pub fn dst_q(&self) -> ReverseSsyt {
        let mut cells = self.cells();
        destandardize(&mut cells, true);
        self.with_cells(&cells)
    }

    pub fn is_particle_highest(&self) -> bool {
        is_particle_highest_cells(&self.cells())
    }

    pub fn is_quasi_yamanouchi(&self) -> bool {
        is_quasi_yamanouchi_cells(&self.cells())
    }
}

/// All reverse SSYT of shape `lambda` with entries in `1..=n`, sorted.
pub fn enumerate_revssyt(lambda: &Partition, n: usize) -> Vec<ReverseSsyt> {
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); lambda.len()];
    let mut out = Vec::new();
    fill_revssyt(lambda, n as u32, 0, &mut rows, &mut out);
    out.sort();
    out
}

fn fill_revssyt(
    lambda: &Partition,
    n: u32,
    r0: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<ReverseSsyt>,
) {
    if r0 == lambda.len() {
        out.push(ReverseSsyt::new(
            Partition::new(lambda.parts().to_vec()),
            rows.clone(),
        ));
        return;
    }
    let len = lambda.parts()[r0] as usize;
    if rows[r0].len() == len {
        fill_revssyt(lambda, n, r0 + 1, rows, out);
        return;
    }
    let c0 = rows[r0].len();
    let mut hi = if c0 == 0 {
        n
    } else {
        rows[r0][c0 - 1]
    };
    if r0 > 0 {
        hi = hi.min(rows[r0 - 1][c0].saturating_sub(1));
    }
    for e in (1..=hi).rev() {
        rows[r0].push(e);
        fill_revssyt(lambda, n, r0, rows, out);
        rows[r0].pop();
    }
}
