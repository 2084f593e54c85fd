//! The positivity poset on the seven composition-indexed bases, closed-form
//! positive expansions along its relations, and the sweep harness that
//! checks positivity where the poset asserts it and exhibits a negative
//! witness everywhere else.
//!
//! Hasse edges, top to bottom: key → quasi-key → {fundamental slide, atom},
//! fundamental slide → {monomial slide, particle}, atom → particle,
//! monomial slide → monomial, particle → monomial. A basis expands
//! positively in another exactly when the first lies above the second.
//! Composite relations are computed by composing single edges; any path
//! gives the same coefficients.

use serde::Serialize;
use std::collections::BTreeSet;

use crate::basis::{basis_element, BasisCache, BasisId, Method};
use crate::composition::{
    compositions_of, flat_class_above, lswap_closure, qlswap, strong_dominators_refining,
    WeakComposition,
};
use crate::polynomial::{expand_in_basis, BasisExpansion, Polynomial};
use crate::tableau::{enumerate, Model};
use crate::Error;

/// The poset bases: every basis of the positivity order that is indexed by
/// a single weak composition.
pub const POSET_BASES: [BasisId; 7] = [
    BasisId::Key,
    BasisId::QuasiKey,
    BasisId::FundamentalSlide,
    BasisId::MonomialSlide,
    BasisId::Atom,
    BasisId::Particle,
    BasisId::Monomial,
];

const HASSE_EDGES: [(BasisId, BasisId); 8] = [
    (BasisId::Key, BasisId::QuasiKey),
    (BasisId::QuasiKey, BasisId::FundamentalSlide),
    (BasisId::QuasiKey, BasisId::Atom),
    (BasisId::FundamentalSlide, BasisId::MonomialSlide),
    (BasisId::FundamentalSlide, BasisId::Particle),
    (BasisId::Atom, BasisId::Particle),
    (BasisId::MonomialSlide, BasisId::Monomial),
    (BasisId::Particle, BasisId::Monomial),
];

/// The column quasi-key basis coincides with the atom basis; fold it in so
/// expansions to and from it reuse the atom relations.
fn normalize(id: BasisId) -> BasisId {
    if id == BasisId::ColumnQuasiKey {
        BasisId::Atom
    } else {
        id
    }
}

/// True iff `source > target` in the positivity poset (strictly above, so
/// every element of `source` expands positively in `target`).
pub fn poset_above(source: BasisId, target: BasisId) -> bool {
    let (source, target) = (normalize(source), normalize(target));
    if source == target {
        return false;
    }
    let mut frontier = vec![source];
    let mut seen = BTreeSet::new();
    while let Some(b) = frontier.pop() {
        for &(s, t) in &HASSE_EDGES {
            if s == b && seen.insert(t) {
                if t == target {
                    return true;
                }
                frontier.push(t);
            }
        }
    }
    false
}

/// How two bases sit relative to each other in the poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    Above,
    Below,
    Incomparable,
}

pub fn relation(source: BasisId, target: BasisId) -> Relation {
    if normalize(source) == normalize(target) {
        Relation::Equal
    } else if poset_above(source, target) {
        Relation::Above
    } else if poset_above(target, source) {
        Relation::Below
    } else {
        Relation::Incomparable
    }
}

fn compose(
    first: &BasisExpansion,
    mut second: impl FnMut(&WeakComposition) -> BasisExpansion,
) -> BasisExpansion {
    let mut out = BasisExpansion::new();
    for (b, c) in first.iter() {
        for (d, k) in second(b).iter() {
            out.add(d, c.checked_mul(k).expect("expansion coefficient overflow"));
        }
    }
    out
}

/// The weights of the particle-highest atom fillings of `a`, with
/// multiplicity: the particle expansion of a Demazure atom.
fn atom_to_particle(a: &WeakComposition) -> BasisExpansion {
    let n = a.len();
    let mut out = BasisExpansion::new();
    for f in enumerate(Model::Assf, a) {
        if f.is_particle_highest() {
            out.add(&f.weight(n), 1);
        }
    }
    out
}

/// The weights of the quasi-Yamanouchi quasi-key tableaux of `a`, with
/// multiplicity: the fundamental slide expansion of a quasi-key polynomial.
fn qkey_to_fundamental(a: &WeakComposition) -> BasisExpansion {
    let n = a.len();
    let mut out = BasisExpansion::new();
    for f in enumerate(Model::Qqkt, a) {
        out.add(&f.weight(n), 1);
    }
    out
}

/// The positive expansion of `f_a` from `source` into `target`, for
/// `source >= target` in the positivity poset. All coefficients are
/// positive and re-summing reproduces the source element exactly.
///
/// Errors with [`Error::NotAPosetRelation`] when `source` is not above
/// `target`; the generic (possibly signed) expansion handles those pairs.
pub fn expand_positive(
    source: BasisId,
    target: BasisId,
    a: &WeakComposition,
) -> Result<BasisExpansion, Error> {
    use BasisId::*;
    let (s, t) = (normalize(source), normalize(target));
    if s == t {
        return Ok(BasisExpansion::units([a.clone()]));
    }
    if !poset_above(s, t) {
        return Err(Error::NotAPosetRelation {
            from: source.id().to_string(),
            to: target.id().to_string(),
        });
    }
    let expansion = match (s, t) {
        (Key, QuasiKey) => BasisExpansion::units(qlswap(a)),
        (Key, Atom) => BasisExpansion::units(lswap_closure(a)),
        (QuasiKey, Atom) => BasisExpansion::units(flat_class_above(a)),
        (QuasiKey, FundamentalSlide) => qkey_to_fundamental(a),
        (FundamentalSlide, MonomialSlide) => {
            BasisExpansion::units(strong_dominators_refining(a))
        }
        (FundamentalSlide, Particle) => BasisExpansion::units(flat_class_above(a)),
        (Atom, Particle) => atom_to_particle(a),
        (_, Monomial) => {
            // The monomial expansion is the basis element itself.
            let p = basis_element(s, a, Method::Default)?;
            let mut out = BasisExpansion::new();
            for (e, c) in p.iter() {
                out.add(e, c);
            }
            out
        }
        (Key, FundamentalSlide) => compose(&expand_positive(Key, QuasiKey, a)?, |b| {
            qkey_to_fundamental(b)
        }),
        (Key, Particle) => compose(&expand_positive(Key, Atom, a)?, atom_to_particle),
        (Key, MonomialSlide) => compose(&expand_positive(Key, FundamentalSlide, a)?, |b| {
            BasisExpansion::units(strong_dominators_refining(b))
        }),
        (QuasiKey, Particle) => {
            compose(&expand_positive(QuasiKey, Atom, a)?, atom_to_particle)
        }
        (QuasiKey, MonomialSlide) => compose(&qkey_to_fundamental(a), |b| {
            BasisExpansion::units(strong_dominators_refining(b))
        }),
        _ => unreachable!("poset relations are covered"),
    };
    Ok(expansion)
}

/// Expands an arbitrary polynomial in the composition-indexed basis
/// `target` by triangular elimination. Coefficients may be negative.
pub fn expand_polynomial(
    p: &Polynomial,
    target: BasisId,
    cache: &mut BasisCache,
) -> BasisExpansion {
    expand_in_basis(p, |b| cache.element(normalize(target), b))
        .expect("library bases satisfy the leading-term contract")
}

/// The exact expansion of `f_a` from `source` into `target`, positive or
/// not.
pub fn expand_generic(
    source: BasisId,
    target: BasisId,
    a: &WeakComposition,
    cache: &mut BasisCache,
) -> BasisExpansion {
    let p = cache.element(normalize(source), a);
    expand_polynomial(&p, target, cache)
}

/// A negative-coefficient witness for an ordered pair of bases.
#[derive(Debug, Clone, Serialize)]
pub struct NegativeWitness {
    pub index: WeakComposition,
    pub coefficients: BasisExpansion,
}

/// Verification record for one ordered pair of bases.
#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub source: BasisId,
    pub target: BasisId,
    pub relation: Relation,
    pub indices_checked: usize,
    /// For `Above`/`Equal`: every expansion had strictly positive
    /// coefficients.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_positive: Option<bool>,
    /// For `Above`/`Equal`: re-summation reproduced the source element.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resummation_exact: Option<bool>,
    /// For `Above`/`Equal`: the closed-form expansion agreed with the
    /// triangular elimination, coefficient for coefficient.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees_with_generic: Option<bool>,
    /// For `Below`/`Incomparable`: an index whose expansion has a negative
    /// coefficient.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative_witness: Option<NegativeWitness>,
}

/// The full positivity sweep over every ordered pair of poset bases.
#[derive(Debug, Clone, Serialize)]
pub struct PosetReport {
    pub max_weight: u32,
    pub max_len: usize,
    /// Positivity, exact re-summation and generic agreement hold on every
    /// poset relation.
    pub positive_relations_ok: bool,
    /// A negative witness was found for every ordered pair not related by
    /// the poset (both incomparable pairs and reversed relations).
    pub witnesses_complete: bool,
    pub pairs: Vec<PairReport>,
}

impl PosetReport {
    pub fn passed(&self) -> bool {
        self.positive_relations_ok && self.witnesses_complete
    }
}

/// Sweeps all weak compositions with `1 <= len <= max_len` and
/// `|a| <= max_weight` over every ordered pair of the seven poset bases:
/// positive expansion, exact re-summation and agreement with the generic
/// elimination on poset relations; a negative witness for every other pair.
pub fn verify_poset(max_weight: u32, max_len: usize) -> PosetReport {
    let mut cache = BasisCache::new();
    let mut indices = Vec::new();
    for len in 1..=max_len {
        for w in 0..=max_weight {
            indices.extend(compositions_of(w, len));
        }
    }
    let mut pairs = Vec::new();
    let mut positive_ok = true;
    let mut witnesses_ok = true;
    for &source in &POSET_BASES {
        for &target in &POSET_BASES {
            if source == target {
                continue;
            }
            let rel = relation(source, target);
            let mut report = PairReport {
                source,
                target,
                relation: rel,
                indices_checked: indices.len(),
                all_positive: None,
                resummation_exact: None,
                agrees_with_generic: None,
                negative_witness: None,
            };
            match rel {
                Relation::Above | Relation::Equal => {
                    let mut all_positive = true;
                    let mut resum_exact = true;
                    let mut agrees = true;
                    for a in &indices {
                        let e = expand_positive(source, target, a)
                            .expect("relation is in the poset");
                        all_positive &= e.is_positive();
                        let back =
                            e.resum(|b| cache.element(normalize(target), b), a.len());
                        resum_exact &= back == cache.element(normalize(source), a);
                        agrees &= e == expand_generic(source, target, a, &mut cache);
                    }
                    positive_ok &= all_positive && resum_exact && agrees;
                    report.all_positive = Some(all_positive);
                    report.resummation_exact = Some(resum_exact);
                    report.agrees_with_generic = Some(agrees);
                }
                Relation::Below | Relation::Incomparable => {
                    let witness = indices.iter().find_map(|a| {
                        let e = expand_generic(source, target, a, &mut cache);
                        e.has_negative().then(|| NegativeWitness {
                            index: a.clone(),
                            coefficients: e,
                        })
                    });
                    witnesses_ok &= witness.is_some();
                    report.negative_witness = witness;
                }
            }
            pairs.push(report);
        }
    }
    PosetReport {
        max_weight,
        max_len,
        positive_relations_ok: positive_ok,
        witnesses_complete: witnesses_ok,
        pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(parts: &[u32]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    fn units(indices: &[&[u32]]) -> BasisExpansion {
        BasisExpansion::units(indices.iter().map(|p| wc(p)))
    }

    #[test]
    fn poset_relations() {
        use BasisId::*;
        assert!(poset_above(Key, Monomial));
        assert!(poset_above(QuasiKey, Particle));
        assert!(poset_above(Atom, Particle));
        assert!(!poset_above(Atom, MonomialSlide));
        assert!(!poset_above(MonomialSlide, Atom));
        assert!(!poset_above(FundamentalSlide, Atom));
        assert!(!poset_above(Particle, MonomialSlide));
        assert!(!poset_above(Monomial, Key));
        assert_eq!(relation(Atom, ColumnQuasiKey), Relation::Equal);
        assert_eq!(relation(QuasiKey, ColumnQuasiKey), Relation::Above);
    }

    #[test]
    fn key_to_atom_and_quasikey() {
        let a = wc(&[0, 1, 0, 3]);
        let e = expand_positive(BasisId::Key, BasisId::Atom, &a).unwrap();
        assert_eq!(e.len(), 10);
        assert!(e.iter().all(|(_, c)| c == 1));
        let q = expand_positive(BasisId::Key, BasisId::QuasiKey, &a).unwrap();
        assert_eq!(q, units(&[&[0, 1, 0, 3], &[0, 3, 0, 1]]));
    }

    #[test]
    fn quasikey_expansions_of_0302() {
        let a = wc(&[0, 3, 0, 2]);
        let atoms = expand_positive(BasisId::QuasiKey, BasisId::Atom, &a).unwrap();
        assert_eq!(
            atoms,
            units(&[
                &[0, 3, 0, 2],
                &[3, 0, 0, 2],
                &[0, 3, 2, 0],
                &[3, 0, 2, 0],
                &[3, 2, 0, 0],
            ])
        );
        let fslides =
            expand_positive(BasisId::QuasiKey, BasisId::FundamentalSlide, &a).unwrap();
        assert_eq!(
            fslides,
            units(&[&[0, 3, 0, 2], &[2, 2, 0, 1], &[1, 3, 0, 1]])
        );
    }

    #[test]
    fn fundamental_slide_expansions() {
        let e = expand_positive(
            BasisId::FundamentalSlide,
            BasisId::MonomialSlide,
            &wc(&[0, 1, 0, 3]),
        )
        .unwrap();
        assert_eq!(
            e,
            units(&[
                &[0, 1, 0, 3],
                &[0, 1, 1, 2],
                &[0, 1, 2, 1],
                &[1, 1, 1, 1],
            ])
        );
        let p = expand_positive(
            BasisId::FundamentalSlide,
            BasisId::Particle,
            &wc(&[0, 3, 0, 2]),
        )
        .unwrap();
        assert_eq!(
            p,
            units(&[
                &[0, 3, 0, 2],
                &[3, 0, 0, 2],
                &[0, 3, 2, 0],
                &[3, 0, 2, 0],
                &[3, 2, 0, 0],
            ])
        );
    }

    #[test]
    fn atom_to_particle_0103() {
        let e = expand_positive(BasisId::Atom, BasisId::Particle, &wc(&[0, 1, 0, 3])).unwrap();
        assert_eq!(e, units(&[&[0, 1, 0, 3], &[0, 2, 0, 2]]));
    }

    #[test]
    fn generic_negative_witnesses() {
        let mut cache = BasisCache::new();
        // Atom in monomial slides.
        let e = expand_generic(
            BasisId::Atom,
            BasisId::MonomialSlide,
            &wc(&[0, 1]),
            &mut cache,
        );
        assert_eq!(e.coeff(&wc(&[0, 1])), 1);
        assert_eq!(e.coeff(&wc(&[1, 0])), -1);
        assert_eq!(e.len(), 2);
        // Monomial slide in atoms.
        let e = expand_generic(BasisId::MonomialSlide, BasisId::Atom, &wc(&[0, 2]), &mut cache);
        assert_eq!(e.coeff(&wc(&[0, 2])), 1);
        assert_eq!(e.coeff(&wc(&[2, 0])), 1);
        assert_eq!(e.coeff(&wc(&[1, 1])), -1);
        // Fundamental slide in atoms.
        let e = expand_generic(
            BasisId::FundamentalSlide,
            BasisId::Atom,
            &wc(&[1, 3]),
            &mut cache,
        );
        assert_eq!(e.coeff(&wc(&[1, 3])), 1);
        assert_eq!(e.coeff(&wc(&[2, 2])), -1);
        // Identity.
        let e = expand_generic(BasisId::Particle, BasisId::Particle, &wc(&[0, 2]), &mut cache);
        assert_eq!(e, units(&[&[0, 2]]));
    }

    #[test]
    fn non_poset_pair_is_rejected() {
        assert!(matches!(
            expand_positive(BasisId::Atom, BasisId::MonomialSlide, &wc(&[0, 1])),
            Err(Error::NotAPosetRelation { .. })
        ));
    }

    #[test]
    fn composite_paths_agree() {
        for parts in [&[0u32, 1, 0, 2][..], &[1, 0, 2], &[0, 2, 1], &[2, 0, 1, 1]] {
            let a = wc(parts);
            // Key to particle: through the atom route and the slide route.
            let via_atom = compose(
                &expand_positive(BasisId::Key, BasisId::Atom, &a).unwrap(),
                atom_to_particle,
            );
            let via_slides = compose(
                &expand_positive(BasisId::Key, BasisId::FundamentalSlide, &a).unwrap(),
                |b| BasisExpansion::units(flat_class_above(b)),
            );
            assert_eq!(via_atom, via_slides, "at {a}");
            assert_eq!(
                via_atom,
                expand_positive(BasisId::Key, BasisId::Particle, &a).unwrap()
            );
            // Key to atom: direct left-swap sum against the quasi-key route.
            let direct = expand_positive(BasisId::Key, BasisId::Atom, &a).unwrap();
            let via_qkey = compose(
                &expand_positive(BasisId::Key, BasisId::QuasiKey, &a).unwrap(),
                |b| BasisExpansion::units(flat_class_above(b)),
            );
            assert_eq!(direct, via_qkey, "at {a}");
        }
    }

    #[test]
    fn small_poset_sweep_passes() {
        let report = verify_poset(3, 2);
        assert!(report.positive_relations_ok);
        for pair in &report.pairs {
            if let Some(w) = &pair.negative_witness {
                assert!(w.coefficients.has_negative());
            }
        }
    }

    #[test]
    fn tiny_sweep_has_identity_expansions_and_no_witnesses() {
        let report = verify_poset(1, 1);
        assert!(report.positive_relations_ok);
        assert!(!report.witnesses_complete);
        assert!(report
            .pairs
            .iter()
            .all(|p| p.negative_witness.is_none()));
    }
}
