//! Skew skyline Littlewood-Richardson tableaux (LRS), contre-lattice column
//! words, row swap operators, and the three rules for expanding the product
//! of a basis element with a Schur polynomial: atoms and quasi-key
//! polynomials by counting (highest-weight) LRS, fundamental particles by
//! destandardizing pairs.
//!
//! An LRS of shape `outer/inner` fills the boxes of `D(inner)` and a virtual
//! basement column 0 with asterisks and the remaining boxes of `D(outer)`
//! with positive integers, subject to the semi-skyline rules extended by the
//! asterisk conventions: an asterisk compares as infinity against integers,
//! asterisks in one row are equal, asterisks in one column increase from top
//! to bottom, and asterisks in distinct rows and columns compare as equal.

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

use crate::basis::BasisId;
use crate::composition::{compositions_of, flat_class_above, Partition, WeakComposition};
use crate::polynomial::BasisExpansion;
use crate::tableau::{destandardize, enumerate, enumerate_revssyt, Model, ReverseSsyt, SkylineFilling};
use crate::Error;

/// A skew skyline filling: asterisks on `D(inner)` and the basement, integer
/// entries on the rest of `D(outer)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LrsFilling {
    inner: WeakComposition,
    outer: WeakComposition,
    /// `rows[i]` holds the integer entries of row `i+1`, left to right,
    /// occupying columns `inner[i]+1..=outer[i]`.
    rows: Vec<Vec<u32>>,
}

/// A cell value in the augmented diagram: the basement and inner boxes are
/// asterisks; position matters when comparing two asterisks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    Star { row: usize, col: usize },
    Entry(u32),
}

impl Cell {
    fn gt(self, other: Cell) -> bool {
        match (self, other) {
            (Cell::Entry(x), Cell::Entry(y)) => x > y,
            (Cell::Star { .. }, Cell::Entry(_)) => true,
            (Cell::Entry(_), Cell::Star { .. }) => false,
            (Cell::Star { row: r1, col: c1 }, Cell::Star { row: r2, col: c2 }) => {
                // Same column: increasing from top to bottom, so the lower
                // row (smaller index) holds the larger asterisk.
                r1 != r2 && c1 == c2 && r1 < r2
            }
        }
    }

    fn ge(self, other: Cell) -> bool {
        self.gt(other) || self.eq_value(other)
    }

    fn eq_value(self, other: Cell) -> bool {
        match (self, other) {
            (Cell::Entry(x), Cell::Entry(y)) => x == y,
            (Cell::Star { row: r1, col: c1 }, Cell::Star { row: r2, col: c2 }) => {
                r1 == r2 || c1 != c2
            }
            _ => false,
        }
    }
}

impl LrsFilling {
    /// Builds an LRS candidate (validity is a separate question; see
    /// [`LrsFilling::is_valid`]).
    ///
    /// Panics unless `inner <= outer` pointwise with equal lengths and each
    /// row has exactly `outer - inner` entries.
    pub fn new(inner: WeakComposition, outer: WeakComposition, rows: Vec<Vec<u32>>) -> Self {
        assert_eq!(inner.len(), outer.len(), "inner and outer lengths differ");
        assert_eq!(rows.len(), outer.len(), "one entry row per diagram row");
        for (i, row) in rows.iter().enumerate() {
            assert!(inner.part(i) <= outer.part(i), "inner exceeds outer in row {}", i + 1);
            assert_eq!(
                row.len() as u32,
                outer.part(i) - inner.part(i),
                "row {} entry count",
                i + 1
            );
            assert!(row.iter().all(|&e| e > 0), "entries must be positive");
        }
        LrsFilling { inner, outer, rows }
    }

    pub fn inner(&self) -> &WeakComposition {
        &self.inner
    }

    pub fn outer(&self) -> &WeakComposition {
        &self.outer
    }

    pub fn entry_rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The value in the augmented diagram at 1-based row, column 0 the
    /// basement. `None` outside the diagram.
    fn cell(&self, row: usize, col: usize) -> Option<Cell> {
        if row == 0 || row > self.outer.len() {
            return None;
        }
        let (inner, outer) = (self.inner.part(row - 1) as usize, self.outer.part(row - 1) as usize);
        if col > outer {
            None
        } else if col <= inner {
            Some(Cell::Star { row, col })
        } else {
            Some(Cell::Entry(self.rows[row - 1][col - inner - 1]))
        }
    }

    /// Full validity: weakly decreasing rows, no repeated integer in a
    /// column, and every triple of the basement-augmented diagram an
    /// inversion triple under the asterisk conventions.
    pub fn is_valid(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
        }
        let n = self.outer.len();
        let width = self.outer.parts().iter().max().copied().unwrap_or(0) as usize;
        for col in 1..=width {
            let mut seen = BTreeMap::new();
            for row in 1..=n {
                if let Some(Cell::Entry(e)) = self.cell(row, col) {
                    if seen.insert(e, row).is_some() {
                        return false;
                    }
                }
            }
        }
        self.triples_are_inversions()
    }

    fn triples_are_inversions(&self) -> bool {
        let n = self.outer.len();
        for lower in 1..=n {
            for upper in lower + 1..=n {
                let (b_lo, b_up) = (
                    self.outer.part(lower - 1) as usize,
                    self.outer.part(upper - 1) as usize,
                );
                if b_lo >= b_up {
                    // Type A: γ=(lower,c), α=(lower,c+1), β=(upper,c+1).
                    for c in 0..b_up.min(b_lo) {
                        let gamma = self.cell(lower, c).expect("in diagram");
                        let alpha = self.cell(lower, c + 1).expect("in diagram");
                        let beta = self.cell(upper, c + 1).expect("in diagram");
                        if !cell_inversion(gamma, alpha, beta) {
                            return false;
                        }
                    }
                }
                if b_up > b_lo {
                    // Type B: γ=(upper,c), α=(upper,c+1), β=(lower,c).
                    for c in 0..=b_lo.min(b_up - 1) {
                        let gamma = self.cell(upper, c).expect("in diagram");
                        let alpha = self.cell(upper, c + 1).expect("in diagram");
                        let beta = self.cell(lower, c).expect("in diagram");
                        if !cell_inversion(gamma, alpha, beta) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The column word: entries read bottom to top in each column, starting
    /// from the rightmost column, asterisks skipped.
    pub fn column_word(&self) -> Vec<u32> {
        let width = self.outer.parts().iter().max().copied().unwrap_or(0) as usize;
        let mut word = Vec::new();
        for col in (1..=width).rev() {
            for row in 1..=self.outer.len() {
                if let Some(Cell::Entry(e)) = self.cell(row, col) {
                    word.push(e);
                }
            }
        }
        word
    }

    /// The multiset of integer entries.
    pub fn content(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self.rows.iter().flatten().copied().collect();
        c.sort_unstable();
        c
    }

    /// Moves the whole of row `i` (asterisks and entries) to the adjacent
    /// empty row above (`up`) or below.
    pub fn swap_row(&self, i: usize, up: bool) -> Result<LrsFilling, Error> {
        let n = self.outer.len();
        if i == 0 || i > n || self.outer.part(i - 1) == 0 {
            return Err(Error::SwapSourceEmpty(i));
        }
        let dest = if up { i + 1 } else { i.wrapping_sub(1) };
        if dest == 0 || dest > n || self.outer.part(dest - 1) != 0 {
            return Err(Error::SwapDestination(dest));
        }
        let mut inner = self.inner.parts().to_vec();
        let mut outer = self.outer.parts().to_vec();
        let mut rows = self.rows.clone();
        inner.swap(i - 1, dest - 1);
        outer.swap(i - 1, dest - 1);
        rows.swap(i - 1, dest - 1);
        Ok(LrsFilling {
            inner: WeakComposition::new(inner),
            outer: WeakComposition::new(outer),
            rows,
        })
    }

    /// True iff no upward swap of an occupied row stays inside the family
    /// of LRS whose inner shape dominates `a` within its flat-class.
    pub fn is_highest_weight(&self, a: &WeakComposition) -> bool {
        let n = self.outer.len();
        for i in 1..=n {
            if self.outer.part(i - 1) == 0 {
                continue;
            }
            if let Ok(swapped) = self.swap_row(i, true) {
                if swapped.is_valid()
                    && swapped.inner.flat() == a.flat()
                    && swapped.inner.dominates(a)
                {
                    return false;
                }
            }
        }
        true
    }
}

fn cell_inversion(gamma: Cell, alpha: Cell, beta: Cell) -> bool {
    (beta.gt(gamma) && gamma.ge(alpha)) || (gamma.ge(alpha) && alpha.gt(beta))
}

impl Serialize for LrsFilling {
    /// JSON form `{"inner": [..], "outer": [..], "rows": {"r": ["*"|int, ..]}}`
    /// with full rows from column 1 (basement omitted).
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum CellJson {
            Star(&'static str),
            Entry(u32),
        }
        let mut s = serializer.serialize_struct("LrsFilling", 3)?;
        s.serialize_field("inner", self.inner.parts())?;
        s.serialize_field("outer", self.outer.parts())?;
        struct Rows<'a>(&'a LrsFilling);
        impl Serialize for Rows<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let n = self
                    .0
                    .outer
                    .parts()
                    .iter()
                    .filter(|&&b| b > 0)
                    .count();
                let mut m = serializer.serialize_map(Some(n))?;
                for row in 1..=self.0.outer.len() {
                    let b = self.0.outer.part(row - 1) as usize;
                    if b == 0 {
                        continue;
                    }
                    let cells: Vec<CellJson> = (1..=b)
                        .map(|col| match self.0.cell(row, col) {
                            Some(Cell::Entry(e)) => CellJson::Entry(e),
                            _ => CellJson::Star("*"),
                        })
                        .collect();
                    m.serialize_entry(&row.to_string(), &cells)?;
                }
                m.end()
            }
        }
        s.serialize_field("rows", &Rows(self))?;
        s.end()
    }
}

/// The content multiset `λ*`: `λ_ℓ` copies of 1 up to `λ_1` copies of `ℓ`,
/// sorted.
pub fn lambda_star(lambda: &Partition) -> Vec<u32> {
    let mut out = Vec::new();
    for (i, &part) in lambda.parts().iter().rev().enumerate() {
        out.extend(std::iter::repeat_n(i as u32 + 1, part as usize));
    }
    out
}

/// Contre-lattice check: in every prefix the letter multiplicities weakly
/// decrease from the largest letter down to 1.
pub fn is_contre_lattice(word: &[u32]) -> bool {
    let k = match word.iter().max() {
        Some(&k) => k as usize,
        None => return true,
    };
    let mut counts = vec![0u32; k + 1];
    for &letter in word {
        counts[letter as usize] += 1;
        if counts.windows(2).skip(1).any(|w| w[0] > w[1]) {
            return false;
        }
    }
    true
}

/// All valid LRS of shape `outer/inner` with the given integer content and
/// a contre-lattice column word.
pub fn enumerate_lrs_fixed_inner(
    inner: &WeakComposition,
    outer: &WeakComposition,
    content: &[u32],
) -> Vec<LrsFilling> {
    assert_eq!(inner.len(), outer.len(), "inner and outer lengths differ");
    let n = outer.len();
    let boxes: u32 = (0..n).map(|i| outer.part(i) - inner.part(i)).sum();
    if boxes as usize != content.len() {
        return Vec::new();
    }
    let mut remaining: BTreeMap<u32, u32> = BTreeMap::new();
    for &e in content {
        *remaining.entry(e).or_insert(0) += 1;
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut out = Vec::new();
    fill_lrs(inner, outer, 0, &mut remaining, &mut rows, &mut out);
    out.sort();
    out
}

fn fill_lrs(
    inner: &WeakComposition,
    outer: &WeakComposition,
    r0: usize,
    remaining: &mut BTreeMap<u32, u32>,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<LrsFilling>,
) {
    if r0 == outer.len() {
        let l = LrsFilling::new(inner.clone(), outer.clone(), rows.clone());
        if l.is_valid() && is_contre_lattice(&l.column_word()) {
            out.push(l);
        }
        return;
    }
    let need = (outer.part(r0) - inner.part(r0)) as usize;
    if rows[r0].len() == need {
        fill_lrs(inner, outer, r0 + 1, remaining, rows, out);
        return;
    }
    let hi = rows[r0].last().copied().unwrap_or(u32::MAX);
    let candidates: Vec<u32> = remaining
        .iter()
        .filter(|&(&e, &cnt)| cnt > 0 && e <= hi)
        .map(|(&e, _)| e)
        .collect();
    for e in candidates.into_iter().rev() {
        // Column-distinct prune among integer cells placed so far.
        let col = inner.part(r0) as usize + rows[r0].len() + 1;
        let clash = (0..r0).any(|r| {
            let (ci, co) = (inner.part(r) as usize, outer.part(r) as usize);
            col > ci && col <= co && rows[r].get(col - ci - 1) == Some(&e)
        });
        if clash {
            continue;
        }
        *remaining.get_mut(&e).expect("candidate present") -= 1;
        rows[r0].push(e);
        fill_lrs(inner, outer, r0, remaining, rows, out);
        rows[r0].pop();
        *remaining.get_mut(&e).expect("candidate present") += 1;
    }
}

/// Inner shapes admissible over `a` inside `outer`: members of the
/// flat-class above `a` fitting under `outer` pointwise.
fn admissible_inners(a: &WeakComposition, outer: &WeakComposition) -> Vec<WeakComposition> {
    flat_class_above(a)
        .into_iter()
        .filter(|c| (0..c.len()).all(|i| c.part(i) <= outer.part(i)))
        .collect()
}

/// All valid LRS with outer shape `outer`, inner shape any admissible
/// composition over `a`, the given content, and contre-lattice column word.
pub fn enumerate_lrs(
    a: &WeakComposition,
    outer: &WeakComposition,
    content: &[u32],
) -> Vec<LrsFilling> {
    assert_eq!(a.len(), outer.len(), "shape lengths differ");
    let mut out = Vec::new();
    for inner in admissible_inners(a, outer) {
        out.extend(enumerate_lrs_fixed_inner(&inner, outer, content));
    }
    out.sort();
    out
}

/// Destandardization of a pair, every label of the tableau counting as
/// strictly right of every label of the skyline filling.
pub fn dst_pair(s: &SkylineFilling, t: &ReverseSsyt) -> (SkylineFilling, ReverseSsyt) {
    const T_OFFSET: u64 = 1 << 32;
    let mut cells: Vec<(u64, u32)> = Vec::new();
    let mut s_count = 0;
    for row in s.rows() {
        for (c, &e) in row.iter().enumerate() {
            cells.push((c as u64 + 1, e));
            s_count += 1;
        }
    }
    for row in t.rows() {
        for (c, &e) in row.iter().enumerate() {
            cells.push((T_OFFSET + c as u64 + 1, e));
        }
    }
    destandardize(&mut cells, false);
    let s_new = rebuild_filling(s, &cells[..s_count]);
    let t_new = rebuild_tableau(t, &cells[s_count..]);
    (s_new, t_new)
}

fn rebuild_filling(s: &SkylineFilling, cells: &[(u64, u32)]) -> SkylineFilling {
    let mut rows = s.rows().to_vec();
    let mut it = cells.iter();
    for row in rows.iter_mut() {
        for e in row.iter_mut() {
            *e = it.next().expect("cell count unchanged").1;
        }
    }
    SkylineFilling::new(s.shape().clone(), rows)
}

fn rebuild_tableau(t: &ReverseSsyt, cells: &[(u64, u32)]) -> ReverseSsyt {
    let mut rows = t.rows().to_vec();
    let mut it = cells.iter();
    for row in rows.iter_mut() {
        for e in row.iter_mut() {
            *e = it.next().expect("cell count unchanged").1;
        }
    }
    ReverseSsyt::new(t.shape().clone(), rows)
}

/// The weight of a pair: the sum of the component weights.
pub fn pair_weight(s: &SkylineFilling, t: &ReverseSsyt, n: usize) -> WeakComposition {
    WeakComposition::new(
        s.weight(n)
            .parts()
            .iter()
            .zip(t.weight(n).parts())
            .map(|(&x, &y)| x + y)
            .collect(),
    )
}

/// A pair from the particle rule: a particle skyline filling together with
/// a reverse SSYT.
#[derive(Debug, Clone, Serialize)]
pub struct PairWitness {
    pub filling: SkylineFilling,
    pub tableau: ReverseSsyt,
}

/// The tableaux certifying a product expansion.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductCertificates {
    Lrs(Vec<LrsFilling>),
    Pairs(Vec<PairWitness>),
}

/// All destandardization-fixed pairs of a particle filling of `a` and a
/// reverse SSYT of shape `lambda` with entries at most `len(a)`.
pub fn enumerate_hpairs(a: &WeakComposition, lambda: &Partition) -> Vec<PairWitness> {
    let n = a.len();
    let mut out = Vec::new();
    for s in enumerate(Model::Lssf, a) {
        for t in enumerate_revssyt(lambda, n) {
            let (s2, t2) = dst_pair(&s, &t);
            if s2 == s && t2 == t {
                out.push(PairWitness {
                    filling: s.clone(),
                    tableau: t,
                });
            }
        }
    }
    out
}

/// The expansion of `f_a · s_λ(x_1..x_n)` in the basis of `f`, for the atom,
/// quasi-key, or particle basis, with the certifying tableaux.
///
/// `n = len(a)`; the Schur factor uses the same variables. All coefficients
/// are positive counts.
pub fn product_expansion_with_certificates(
    id: BasisId,
    a: &WeakComposition,
    lambda: &Partition,
) -> Result<(BasisExpansion, ProductCertificates), Error> {
    let n = a.len();
    let content = lambda_star(lambda);
    match id {
        BasisId::Atom => {
            let mut expansion = BasisExpansion::new();
            let mut certs = Vec::new();
            for extra in compositions_of(lambda.weight(), n) {
                let outer = WeakComposition::new(
                    (0..n).map(|i| a.part(i) + extra.part(i)).collect(),
                );
                for l in enumerate_lrs_fixed_inner(a, &outer, &content) {
                    expansion.add(&outer, 1);
                    certs.push(l);
                }
            }
            Ok((expansion, ProductCertificates::Lrs(certs)))
        }
        BasisId::QuasiKey => {
            let mut expansion = BasisExpansion::new();
            let mut certs = Vec::new();
            for inner in flat_class_above(a) {
                for extra in compositions_of(lambda.weight(), n) {
                    let outer = WeakComposition::new(
                        (0..n).map(|i| inner.part(i) + extra.part(i)).collect(),
                    );
                    for l in enumerate_lrs_fixed_inner(&inner, &outer, &content) {
                        if l.is_highest_weight(a) {
                            expansion.add(&outer, 1);
                            certs.push(l);
                        }
                    }
                }
            }
            Ok((expansion, ProductCertificates::Lrs(certs)))
        }
        BasisId::Particle => {
            let mut expansion = BasisExpansion::new();
            let pairs = enumerate_hpairs(a, lambda);
            for p in &pairs {
                expansion.add(&pair_weight(&p.filling, &p.tableau, n), 1);
            }
            Ok((expansion, ProductCertificates::Pairs(pairs)))
        }
        other => Err(Error::InvalidIndex {
            basis: other.id().to_string(),
            index: a.to_string(),
            nvars: n,
        }),
    }
}

/// The expansion of `f_a · s_λ` in the same basis, without certificates.
pub fn product_expansion(
    id: BasisId,
    a: &WeakComposition,
    lambda: &Partition,
) -> Result<BasisExpansion, Error> {
    product_expansion_with_certificates(id, a, lambda).map(|(e, _)| e)
}
