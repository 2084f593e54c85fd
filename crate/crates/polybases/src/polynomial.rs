//! Exact sparse multivariate polynomials over the integers, keyed by
//! exponent weak compositions, plus the generic triangular change-of-basis
//! engine used as the universal oracle.
//!
//! Coefficients are `i64` with checked arithmetic: any overflow panics
//! rather than wrapping, so results are exact or loud. No zero coefficient
//! is ever stored, and every exponent key has length `nvars`.
//!
//! Terms live in a `BTreeMap` ordered by the derived order on
//! [`WeakComposition`] (lexicographic on parts, equivalently on prefix-sum
//! vectors), a linear extension of dominance. The first key of a homogeneous
//! component is therefore its dominance-minimal exponent, which is exactly
//! the pivot the elimination loop in [`expand_in_basis`] needs.

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

use crate::composition::WeakComposition;
use crate::Error;

fn add_exact(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn mul_exact(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

/// A sparse polynomial with integer coefficients in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<WeakComposition, i64>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::monomial(WeakComposition::zeros(nvars), 1)
    }

    /// The single term `coeff * x^exp`.
    pub fn monomial(exp: WeakComposition, coeff: i64) -> Self {
        let mut p = Polynomial::zero(exp.len());
        p.add_term(&exp, coeff);
        p
    }

    /// Sums `x^b` over the given exponents, with multiplicity.
    pub fn from_exponents<I>(nvars: usize, exps: I) -> Self
    where
        I: IntoIterator<Item = WeakComposition>,
    {
        let mut p = Polynomial::zero(nvars);
        for e in exps {
            p.add_term(&e, 1);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &WeakComposition) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&WeakComposition, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exp: &WeakComposition, coeff: i64) {
        assert_eq!(exp.len(), self.nvars, "exponent length must equal nvars");
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_insert(0);
        *entry = add_exact(*entry, coeff);
        if *entry == 0 {
            self.terms.remove(exp);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "nvars mismatch");
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "nvars mismatch");
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in self.iter() {
            out.add_term(e, mul_exact(c, k));
        }
        out
    }

    /// Exact product. Panics if the variable counts differ.
    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "nvars mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in self.iter() {
            for (e2, c2) in other.iter() {
                let exp: Vec<u32> = e1
                    .parts()
                    .iter()
                    .zip(e2.parts())
                    .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                    .collect();
                out.add_term(&WeakComposition::new(exp), mul_exact(c1, c2));
            }
        }
        out
    }

    /// Sets `x_i = 0` for `i > n`: drops every term with a nonzero exponent
    /// past position `n` and truncates the survivors to `n` variables.
    ///
    /// Panics if `n > nvars`.
    pub fn truncate_tail(&self, n: usize) -> Polynomial {
        assert!(n <= self.nvars, "cannot truncate to more variables");
        let mut out = Polynomial::zero(n);
        for (e, c) in self.iter() {
            if e.parts()[n..].iter().all(|&p| p == 0) {
                out.add_term(&WeakComposition::new(e.parts()[..n].to_vec()), c);
            }
        }
        out
    }

    /// The total degrees appearing, in increasing order.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|e| e.weight()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in self.iter() {
            if e.weight() == d {
                out.add_term(e, c);
            }
        }
        out
    }

    /// True iff every coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.iter() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            if a != 1 {
                write!(f, "{a}*")?;
            }
            write!(f, "x^[{e}]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: i64,
}

impl Serialize for Polynomial {
    /// Canonical JSON form: `{"nvars": n, "terms": [{"exp": [..], "coeff": c}, ..]}`
    /// with terms sorted by exponent.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Polynomial", 2)?;
        s.serialize_field("nvars", &self.nvars)?;
        struct Terms<'a>(&'a Polynomial);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.terms.len()))?;
                for (e, c) in self.0.iter() {
                    seq.serialize_element(&TermJson {
                        exp: e.parts().to_vec(),
                        coeff: c,
                    })?;
                }
                seq.end()
            }
        }
        s.serialize_field("terms", &Terms(self))?;
        s.end()
    }
}

/// Coefficients of a polynomial written in some basis: a map from basis
/// index to integer coefficient, zeros never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasisExpansion {
    coeffs: BTreeMap<WeakComposition, i64>,
}

impl BasisExpansion {
    pub fn new() -> Self {
        BasisExpansion::default()
    }

    /// Coefficient 1 on each of the given indices.
    pub fn units<I>(indices: I) -> Self
    where
        I: IntoIterator<Item = WeakComposition>,
    {
        let mut out = BasisExpansion::new();
        for b in indices {
            out.add(&b, 1);
        }
        out
    }

    pub fn add(&mut self, index: &WeakComposition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(index.clone()).or_insert(0);
        *entry = add_exact(*entry, coeff);
        if *entry == 0 {
            self.coeffs.remove(index);
        }
    }

    pub fn coeff(&self, index: &WeakComposition) -> i64 {
        self.coeffs.get(index).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeakComposition, i64)> {
        self.coeffs.iter().map(|(e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn indices(&self) -> impl Iterator<Item = &WeakComposition> {
        self.coeffs.keys()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn has_negative(&self) -> bool {
        self.coeffs.values().any(|&c| c < 0)
    }

    /// Re-sums the expansion through a basis generator.
    pub fn resum(&self, mut basis: impl FnMut(&WeakComposition) -> Polynomial, nvars: usize) -> Polynomial {
        let mut out = Polynomial::zero(nvars);
        for (b, c) in self.iter() {
            out = out.add(&basis(b).scale(c));
        }
        out
    }
}

impl Serialize for BasisExpansion {
    /// JSON object keyed by the comma-separated index, e.g.
    /// `{"0,1,0,3": 1, "0,3,0,1": 1}`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in self.iter() {
            m.serialize_entry(&e.to_string(), &c)?;
        }
        m.end()
    }
}

/// Expands `p` in the basis produced by `basis`: returns coefficients `c_b`
/// with `p = Σ c_b · basis(b)`.
///
/// The generator must map every weak composition `b` of length `p.nvars()`
/// to a homogeneous polynomial of degree `|b|` whose minimal term is `x^b`
/// with coefficient exactly 1 (all other terms strictly above `x^b` in the
/// term order, as when they strictly dominate `b`). Violations are detected
/// and reported. Mixed-degree inputs are expanded degree by degree.
/// Coefficients may be negative.
pub fn expand_in_basis(
    p: &Polynomial,
    mut basis: impl FnMut(&WeakComposition) -> Polynomial,
) -> Result<BasisExpansion, Error> {
    let mut out = BasisExpansion::new();
    for d in p.degrees() {
        let mut rest = p.homogeneous_component(d);
        while !rest.is_zero() {
            let (pivot, c) = {
                let (e, &c) = rest.terms.iter().next().expect("nonzero polynomial");
                (e.clone(), c)
            };
            let g = basis(&pivot);
            if g.nvars() != p.nvars() {
                return Err(Error::NvarsMismatch(g.nvars(), p.nvars()));
            }
            match g.terms.iter().next() {
                Some((lead, &lc)) if *lead == pivot && lc == 1 => {}
                _ => return Err(Error::LeadingTermContract(pivot.to_string())),
            }
            if g.degrees() != vec![d] {
                return Err(Error::LeadingTermContract(pivot.to_string()));
            }
            rest = rest.sub(&g.scale(c));
            out.add(&pivot, c);
            if rest.coeff(&pivot) != 0 {
                return Err(Error::LeadingTermContract(pivot.to_string()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::{compositions_up_to, flat_class_above};

    fn wc(parts: &[u32]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    fn x(parts: &[u32]) -> Polynomial {
        Polynomial::monomial(wc(parts), 1)
    }

    #[test]
    fn multiply_examples() {
        let p = x(&[0, 1]);
        let q = x(&[1, 0]).add(&x(&[0, 1]));
        assert_eq!(p.multiply(&q), x(&[1, 1]).add(&x(&[0, 2])));
        assert_eq!(p.multiply(&Polynomial::one(2)), p);
        let sq = q.multiply(&q);
        assert_eq!(sq.coeff(&wc(&[1, 1])), 2);
        assert_eq!(sq.coeff(&wc(&[2, 0])), 1);
        assert_eq!(sq.coeff(&wc(&[0, 2])), 1);
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn truncate_tail_examples() {
        assert!(x(&[0, 1, 0, 3]).truncate_tail(2).is_zero());
        assert_eq!(x(&[1, 1, 0, 0]).truncate_tail(2), x(&[1, 1]));
        let p = x(&[1, 1, 0, 0]).add(&x(&[0, 0, 1, 1]));
        assert_eq!(p.truncate_tail(2), x(&[1, 1]));
    }

    #[test]
    fn expand_in_monomial_slide_basis() {
        // The monomial slide polynomial indexed by b, as a generator.
        let mslide = |b: &WeakComposition| {
            Polynomial::from_exponents(b.len(), flat_class_above(b))
        };
        // x^{01} = M_{01} - M_{10}.
        let got = expand_in_basis(&x(&[0, 1]), mslide).unwrap();
        assert_eq!(got.coeff(&wc(&[0, 1])), 1);
        assert_eq!(got.coeff(&wc(&[1, 0])), -1);
        assert_eq!(got.len(), 2);
        // Round trip: re-summing reproduces the input.
        let back = got.resum(mslide, 2);
        assert_eq!(back, x(&[0, 1]));
    }

    #[test]
    fn expand_rejects_bad_generator() {
        // Leading coefficient 2 breaks the contract.
        let bad = |b: &WeakComposition| Polynomial::monomial(b.clone(), 2);
        assert!(matches!(
            expand_in_basis(&x(&[1, 0]), bad),
            Err(Error::LeadingTermContract(_))
        ));
        // A term below the pivot breaks the contract.
        let below = |b: &WeakComposition| {
            let mut p = Polynomial::monomial(b.clone(), 1);
            p.add_term(&WeakComposition::zeros(b.len()), 1);
            p
        };
        assert!(expand_in_basis(&x(&[1, 1]), below).is_err());
    }

    #[test]
    fn expansion_handles_mixed_degrees() {
        let p = x(&[0, 1]).add(&x(&[0, 2])).add(&Polynomial::one(2));
        let mslide = |b: &WeakComposition| {
            Polynomial::from_exponents(b.len(), flat_class_above(b))
        };
        let got = expand_in_basis(&p, mslide).unwrap();
        let back = got.resum(mslide, 2);
        assert_eq!(back, p);
    }

    #[test]
    fn polynomial_json_is_canonical() {
        let p = x(&[0, 2]).add(&x(&[1, 1]).scale(-2));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"nvars":2,"terms":[{"exp":[0,2],"coeff":1},{"exp":[1,1],"coeff":-2}]}"#
        );
    }

    #[test]
    fn expansion_json_is_keyed_by_index() {
        let mut e = BasisExpansion::new();
        e.add(&wc(&[0, 1, 0, 3]), 1);
        e.add(&wc(&[0, 3, 0, 1]), 1);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"{"0,1,0,3":1,"0,3,0,1":1}"#);
    }

    proptest::proptest! {
        #[test]
        fn multiply_is_commutative_and_associative(
            a in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -3i64..4), 0..5),
            b in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -3i64..4), 0..5),
            c in proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -3i64..4), 0..5),
        ) {
            let build = |ts: &Vec<(Vec<u32>, i64)>| {
                let mut p = Polynomial::zero(3);
                for (e, k) in ts {
                    p.add_term(&WeakComposition::new(e.clone()), *k);
                }
                p
            };
            let (p, q, r) = (build(&a), build(&b), build(&c));
            proptest::prop_assert_eq!(p.multiply(&q), q.multiply(&p));
            proptest::prop_assert_eq!(p.multiply(&q).multiply(&r), p.multiply(&q.multiply(&r)));
        }

        #[test]
        fn expansion_roundtrips_against_monomial_slides(
            coeffs in proptest::collection::vec(0i64..4, 10)
        ) {
            // A random combination of monomial slide elements expands back
            // to exactly the chosen coefficients.
            let indices = compositions_up_to(3, 3);
            let mslide = |b: &WeakComposition| {
                Polynomial::from_exponents(b.len(), flat_class_above(b))
            };
            let mut p = Polynomial::zero(3);
            let mut want = BasisExpansion::new();
            for (b, &c) in indices.iter().take(coeffs.len()).zip(&coeffs) {
                p = p.add(&mslide(b).scale(c));
                want.add(b, c);
            }
            let got = expand_in_basis(&p, mslide).unwrap();
            proptest::prop_assert_eq!(got, want);
        }
    }
}
