//! Constructors producing each basis element as a [`Polynomial`], by every
//! combinatorial description available, so the descriptions can be
//! cross-checked against each other.
//!
//! The default method per basis is the closed-form order-theoretic sum where
//! one exists (slide and dominance sums), otherwise the tableau generator;
//! the alternatives stay available behind [`Method`] for the agreement
//! sweeps. Demazure characters default to the left-swap sum of atoms, with
//! the Bruhat-order route retained as an oracle.

use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::composition::{
    flat_class_above, lswap_closure, qlswap, rearrangements, slides, Partition, StrongComposition,
    WeakComposition,
};
use crate::polynomial::Polynomial;
use crate::tableau::{enumerate, enumerate_revssyt, Model};
use crate::Error;

/// The bases indexed by weak compositions, plus the symmetric Schur and
/// quasisymmetric quasi-Schur polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisId {
    Monomial,
    MonomialSlide,
    FundamentalSlide,
    Particle,
    Atom,
    QuasiKey,
    ColumnQuasiKey,
    Key,
    Schur,
    QuasiSchur,
}

impl BasisId {
    pub fn id(self) -> &'static str {
        match self {
            BasisId::Monomial => "monomial",
            BasisId::MonomialSlide => "monomial_slide",
            BasisId::FundamentalSlide => "fundamental_slide",
            BasisId::Particle => "particle",
            BasisId::Atom => "atom",
            BasisId::QuasiKey => "qkey",
            BasisId::ColumnQuasiKey => "qkey1",
            BasisId::Key => "key",
            BasisId::Schur => "schur",
            BasisId::QuasiSchur => "quasi_schur",
        }
    }

    /// True for the bases indexed by a weak composition (everything but
    /// Schur and quasi-Schur).
    pub fn is_composition_indexed(self) -> bool {
        !matches!(self, BasisId::Schur | BasisId::QuasiSchur)
    }

    pub const ALL: [BasisId; 10] = [
        BasisId::Monomial,
        BasisId::MonomialSlide,
        BasisId::FundamentalSlide,
        BasisId::Particle,
        BasisId::Atom,
        BasisId::QuasiKey,
        BasisId::ColumnQuasiKey,
        BasisId::Key,
        BasisId::Schur,
        BasisId::QuasiSchur,
    ];
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for BasisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        BasisId::ALL
            .iter()
            .copied()
            .find(|b| b.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownBasis(s.to_string()))
    }
}

/// Alternative combinatorial descriptions of a basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// The default description for the basis.
    Default,
    /// Dominance-order sum over indices (monomial slide, fundamental slide,
    /// quasi-key as a sum of atoms, fundamental particle via fixed slides).
    DominanceSum,
    /// Generating function of slide moves (fundamental slide only).
    Slides,
    /// Semi-skyline filling model.
    Skyline,
    /// Quasi-key tableau or reverse SSYT model.
    Tableau,
    /// Sum of Demazure atoms over the left-swap closure (key only).
    LswapAtoms,
    /// Sum of quasi-key polynomials over the dominance-minimal left-swap
    /// representatives (key only).
    QlswapQuasiKeys,
    /// Sum of atoms selected by the Bruhat order on sorting permutations
    /// (key only).
    BruhatAtoms,
}

impl Method {
    pub fn id(self) -> &'static str {
        match self {
            Method::Default => "default",
            Method::DominanceSum => "dominance_sum",
            Method::Slides => "slides",
            Method::Skyline => "skyline",
            Method::Tableau => "tableau",
            Method::LswapAtoms => "lswap_atoms",
            Method::QlswapQuasiKeys => "qlswap_qkeys",
            Method::BruhatAtoms => "bruhat_atoms",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        [
            Method::Default,
            Method::DominanceSum,
            Method::Slides,
            Method::Skyline,
            Method::Tableau,
            Method::LswapAtoms,
            Method::QlswapQuasiKeys,
            Method::BruhatAtoms,
        ]
        .iter()
        .copied()
        .find(|m| m.id().eq_ignore_ascii_case(s))
        .ok_or_else(|| Error::UnknownMethod {
            basis: String::new(),
            method: s.to_string(),
        })
    }
}

fn model_weights(model: Model, a: &WeakComposition) -> Polynomial {
    let n = a.len();
    Polynomial::from_exponents(n, enumerate(model, a).iter().map(|f| f.weight(n)))
}

/// The basis element indexed by the weak composition `a`, computed by the
/// requested method.
///
/// Errors on Schur/quasi-Schur (they are not composition-indexed; see
/// [`schur_polynomial`] and [`quasi_schur_polynomial`]) and on methods not
/// available for the basis.
pub fn basis_element(id: BasisId, a: &WeakComposition, method: Method) -> Result<Polynomial, Error> {
    let n = a.len();
    let unavailable = || Error::UnknownMethod {
        basis: id.id().to_string(),
        method: method.id().to_string(),
    };
    match id {
        BasisId::Monomial => match method {
            Method::Default => Ok(Polynomial::monomial(a.clone(), 1)),
            _ => Err(unavailable()),
        },
        BasisId::MonomialSlide => match method {
            Method::Default | Method::DominanceSum => {
                Ok(Polynomial::from_exponents(n, flat_class_above(a)))
            }
            Method::Skyline => Ok(model_weights(Model::Mssf, a)),
            _ => Err(unavailable()),
        },
        BasisId::FundamentalSlide => match method {
            Method::Default | Method::DominanceSum => {
                let flat = a.flat();
                let mut exps = Vec::new();
                for beta in flat.refinements() {
                    for b in crate::composition::placements(&beta, n) {
                        if b.dominates(a) {
                            exps.push(b);
                        }
                    }
                }
                Ok(Polynomial::from_exponents(n, exps))
            }
            Method::Slides => Ok(Polynomial::from_exponents(n, slides(a, false))),
            Method::Skyline => Ok(model_weights(Model::Fssf, a)),
            _ => Err(unavailable()),
        },
        BasisId::Particle => match method {
            Method::Default | Method::DominanceSum => {
                Ok(Polynomial::from_exponents(n, slides(a, true)))
            }
            Method::Skyline => Ok(model_weights(Model::Lssf, a)),
            _ => Err(unavailable()),
        },
        BasisId::Atom => match method {
            Method::Default | Method::Skyline => Ok(model_weights(Model::Assf, a)),
            Method::Tableau => Ok(model_weights(Model::Qkt1, a)),
            _ => Err(unavailable()),
        },
        BasisId::ColumnQuasiKey => match method {
            Method::Default | Method::Tableau => Ok(model_weights(Model::Qkt1, a)),
            _ => Err(unavailable()),
        },
        BasisId::QuasiKey => match method {
            Method::Default | Method::Tableau => Ok(model_weights(Model::Qkt, a)),
            Method::Skyline => Ok(model_weights(Model::Qssf, a)),
            Method::DominanceSum => {
                let mut p = Polynomial::zero(n);
                for b in flat_class_above(a) {
                    p = p.add(&model_weights(Model::Assf, &b));
                }
                Ok(p)
            }
            _ => Err(unavailable()),
        },
        BasisId::Key => match method {
            Method::Default | Method::LswapAtoms => {
                let mut p = Polynomial::zero(n);
                for b in lswap_closure(a) {
                    p = p.add(&model_weights(Model::Assf, &b));
                }
                Ok(p)
            }
            Method::QlswapQuasiKeys => {
                let mut p = Polynomial::zero(n);
                for b in qlswap(a) {
                    p = p.add(&model_weights(Model::Qkt, &b));
                }
                Ok(p)
            }
            Method::BruhatAtoms => {
                let w = a.sorting_perm();
                let mut p = Polynomial::zero(n);
                for b in rearrangements(a) {
                    if b.sorting_perm().bruhat_leq(&w) {
                        p = p.add(&model_weights(Model::Assf, &b));
                    }
                }
                Ok(p)
            }
            _ => Err(unavailable()),
        },
        BasisId::Schur | BasisId::QuasiSchur => Err(Error::InvalidIndex {
            basis: id.id().to_string(),
            index: a.to_string(),
            nvars: n,
        }),
    }
}

/// The Schur polynomial `s_λ(x_1..x_n)`, as the generating function of
/// reverse SSYT of shape `λ` with entries at most `n`.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> Polynomial {
    Polynomial::from_exponents(n, enumerate_revssyt(lambda, n).iter().map(|t| t.weight(n)))
}

/// The quasi-Schur polynomial `QS_α(x_1..x_n)`: the quasi-key polynomial
/// indexed by `α` pushed to the last `ℓ(α)` of `n` positions.
///
/// Errors if `α` has more parts than `n`.
pub fn quasi_schur_polynomial(alpha: &StrongComposition, n: usize) -> Result<Polynomial, Error> {
    if alpha.len() > n {
        return Err(Error::InvalidIndex {
            basis: "quasi_schur".to_string(),
            index: alpha.to_string(),
            nvars: n,
        });
    }
    let index = WeakComposition::new(alpha.parts().to_vec()).prepend_zeros(n - alpha.len());
    basis_element(BasisId::QuasiKey, &index, Method::Default)
}

/// A memoizing table of basis elements computed by their default method.
///
/// Values are immutable once computed; share one cache per harness and the
/// sweeps stay cheap.
#[derive(Default)]
pub struct BasisCache {
    memo: HashMap<(BasisId, WeakComposition), Polynomial>,
}

impl BasisCache {
    pub fn new() -> Self {
        BasisCache::default()
    }

    /// The element `f_a` of the composition-indexed basis `id`, default
    /// method, memoized.
    pub fn element(&mut self, id: BasisId, a: &WeakComposition) -> Polynomial {
        if let Some(p) = self.memo.get(&(id, a.clone())) {
            return p.clone();
        }
        let p = basis_element(id, a, Method::Default).expect("composition-indexed basis");
        self.memo.insert((id, a.clone()), p.clone());
        p
    }
}

/// One step of the stable-limit probe: the basis element indexed by
/// `0^m × a`, truncated back to the first `len(a)` variables.
#[derive(Debug, Clone, Serialize)]
pub struct Truncation {
    pub m: usize,
    pub polynomial: Polynomial,
}

/// The outcome of probing `f_{0^m × a}` for `m = 0..=m_max`.
#[derive(Debug, Clone, Serialize)]
pub struct StableLimitReport {
    pub basis: BasisId,
    pub index: WeakComposition,
    pub truncations: Vec<Truncation>,
    /// Smallest `m` from which all later truncations agree, if any.
    pub stable_from: Option<usize>,
    /// True if every truncation with `m >= 1` is identically zero.
    pub vanishes: bool,
}

/// Probes finite-variable stabilization: computes `f_{0^m × a}` in
/// `len(a) + m` variables for each `m <= m_max`, truncates to the original
/// variables, and reports from which `m` the truncations agree and whether
/// they vanish for all `m >= 1`.
pub fn stable_limit_probe(
    id: BasisId,
    a: &WeakComposition,
    m_max: usize,
) -> Result<StableLimitReport, Error> {
    let n = a.len();
    let mut truncations = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        let padded = a.prepend_zeros(m);
        let p = basis_element(id, &padded, Method::Default)?;
        truncations.push(Truncation {
            m,
            polynomial: p.truncate_tail(n),
        });
    }
    let mut stable_from = None;
    for start in (0..=m_max).rev() {
        if truncations[start..]
            .windows(2)
            .all(|w| w[0].polynomial == w[1].polynomial)
        {
            stable_from = Some(start);
        } else {
            break;
        }
    }
    let vanishes = truncations[1..].iter().all(|t| t.polynomial.is_zero());
    Ok(StableLimitReport {
        basis: id,
        index: a.clone(),
        truncations,
        stable_from,
        vanishes,
    })
}
