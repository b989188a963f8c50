//! Schubert-basis cohomology of `G/Q_I` under multiplication by divisor
//! classes, and the Poincaré-duality status of the Thom space over the
//! `lambda_0` Levi orbit.
//!
//! Chevalley's rule, for `w` in `W^I` and a weight `mu`:
//!
//! ```text
//! sigma_mu . sigma_w = sum <beta^vee, mu> sigma_{w s_beta}
//! ```
//!
//! over positive roots `beta` with `w s_beta` in `W^I` of length `l(w) + 1`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{LieType, RootDatum, WeightVec};
use crate::error::{Error, Result};
use crate::weyl::{ParabolicQuotient, WeylElem, WeylGroup};

/// Integer combination of Schubert classes `sigma_w`, keyed by the reduced
/// word of `w` in `W^I`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CohomClass {
    pub i_set: BTreeSet<usize>,
    pub terms: BTreeMap<Vec<usize>, i64>,
}

impl CohomClass {
    pub fn zero(i_set: BTreeSet<usize>) -> Self {
        CohomClass {
            i_set,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[usize]) -> i64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    fn add_term(&mut self, word: Vec<usize>, c: i64) {
        let v = self.coeff(&word) + c;
        if v == 0 {
            self.terms.remove(&word);
        } else {
            self.terms.insert(word, v);
        }
    }

    /// Degrees (word lengths) carrying a nonzero coefficient.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Vec::len).collect()
    }
}

/// `H^*(G/Q_I)` with its Schubert basis.
#[derive(Debug, Clone)]
pub struct FlagCohomology {
    weyl: WeylGroup,
    quotient: ParabolicQuotient,
    /// `(s_beta, beta^vee)` for every positive root.
    reflections: Vec<(WeylElem, Vec<i64>)>,
}

impl FlagCohomology {
    pub fn new(weyl: &WeylGroup, i_set: &BTreeSet<usize>, limit: usize) -> Result<Self> {
        let quotient = weyl.min_coset_reps(i_set, limit)?;
        let datum = weyl.datum();
        let reflections = datum
            .pos_roots()
            .iter()
            .zip(datum.pos_coroots())
            .map(|(b, bv)| (weyl.reflection(b).unwrap(), bv.0.clone()))
            .collect();
        Ok(FlagCohomology {
            weyl: weyl.clone(),
            quotient,
            reflections,
        })
    }

    pub fn quotient(&self) -> &ParabolicQuotient {
        &self.quotient
    }

    pub fn i_set(&self) -> &BTreeSet<usize> {
        self.quotient.i_set()
    }

    pub fn datum(&self) -> &RootDatum {
        self.weyl.datum()
    }

    /// `sigma_mu . sigma_w`.
    pub fn divisor_mult(&self, mu: &WeightVec, w: &WeylElem) -> Result<CohomClass> {
        self.datum().check_rank(mu.rank())?;
        let Some(idx) = self.quotient.index_of(w) else {
            return Err(Error::NotMinRep(format!(
                "{:?} in W/W_I, I = {:?}",
                self.weyl.reduced_word(w),
                self.i_set()
            )));
        };
        let target_len = self.quotient.lengths()[idx] + 1;
        let mut out = CohomClass::zero(self.i_set().clone());
        for (refl, bv) in &self.reflections {
            let c: i64 = bv.iter().zip(&mu.0).map(|(a, b)| a * b).sum();
            if c == 0 {
                continue;
            }
            let v = self.weyl.mul(w, refl)?;
            if let Some(j) = self.quotient.index_of(&v) {
                if self.quotient.lengths()[j] == target_len {
                    out.add_term(self.quotient.words()[j].clone(), c);
                }
            }
        }
        Ok(out)
    }

    /// `sigma_mu . x`, extended linearly.
    pub fn divisor_mult_class(&self, mu: &WeightVec, x: &CohomClass) -> Result<CohomClass> {
        let mut out = CohomClass::zero(self.i_set().clone());
        for (word, &c) in &x.terms {
            let w = self.weyl.from_word(word)?;
            for (v, d) in self.divisor_mult(mu, &w)?.terms {
                out.add_term(v, c * d);
            }
        }
        Ok(out)
    }
}

pub fn chevalley_divisor_mult(
    weyl: &WeylGroup,
    i_set: &BTreeSet<usize>,
    mu: &WeightVec,
    w: &WeylElem,
) -> Result<CohomClass> {
    FlagCohomology::new(weyl, i_set, 2_000_000)?.divisor_mult(mu, w)
}

/// Cohomology of the `lambda_0` Levi orbit `G/Q_{I(lambda_0)}`.
pub fn lambda0_cohomology(datum: &Arc<RootDatum>) -> Result<FlagCohomology> {
    let weyl = WeylGroup::new(datum.clone());
    FlagCohomology::new(&weyl, &datum.i_of_lambda0(), 2_000_000)
}

/// Weight coordinates of the highest root, the weight of the line bundle
/// whose Thom space is the canonical generating variety.
pub fn c1_weight(datum: &RootDatum) -> WeightVec {
    datum.root_to_weight(datum.highest_root())
}

pub fn c1_class(t: LieType) -> Result<CohomClass> {
    let datum = Arc::new(RootDatum::new(t));
    let h = lambda0_cohomology(&datum)?;
    let id = WeylGroup::new(datum.clone()).identity();
    h.divisor_mult(&c1_weight(&datum), &id)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "a")]
pub enum ChainCoeffs {
    /// `c_1 y_{k-1} = a_k y_k` for `k = 1..=n`.
    Chain(Vec<i64>),
    NotAChain,
}

pub fn chain_coeffs(t: LieType) -> Result<ChainCoeffs> {
    let datum = Arc::new(RootDatum::new(t));
    let h = lambda0_cohomology(&datum)?;
    if !h.quotient().poincare().is_chain() {
        return Ok(ChainCoeffs::NotAChain);
    }
    let mu = c1_weight(&datum);
    let reps = h.quotient().reps();
    let words = h.quotient().words();
    let mut a = Vec::with_capacity(reps.len().saturating_sub(1));
    for k in 1..reps.len() {
        let prod = h.divisor_mult(&mu, &reps[k - 1])?;
        a.push(prod.coeff(&words[k]));
    }
    Ok(ChainCoeffs::Chain(a))
}

/// Poincaré duality of the Thom space `T(xi)` over `G/Q_{I(lambda_0)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PDStatus {
    /// The base is not a chain, so the cell counts of `T(xi)` are not a palindrome.
    NotPalindromic,
    /// Palindromic cell counts but some `a_k = 0`: duality fails even rationally.
    PalindromicOnly,
    /// Every `a_k` nonzero, some `a_k` not a unit.
    RationalOnly,
    /// Every `a_k = +-1`.
    Integral,
}

pub fn pd_status_from(coeffs: &ChainCoeffs) -> PDStatus {
    match coeffs {
        ChainCoeffs::NotAChain => PDStatus::NotPalindromic,
        ChainCoeffs::Chain(a) if a.iter().all(|x| x.abs() == 1) => PDStatus::Integral,
        ChainCoeffs::Chain(a) if a.iter().all(|&x| x != 0) => PDStatus::RationalOnly,
        ChainCoeffs::Chain(_) => PDStatus::PalindromicOnly,
    }
}

pub fn thom_pd_status(t: LieType) -> Result<PDStatus> {
    Ok(pd_status_from(&chain_coeffs(t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::parse_type;

    fn t(s: &str) -> LieType {
        parse_type(s).unwrap()
    }

    #[test]
    fn g2_chain_coefficients() {
        assert_eq!(
            chain_coeffs(t("G2")).unwrap(),
            ChainCoeffs::Chain(vec![1, 3, 2, 3, 1])
        );
    }

    #[test]
    fn c_n_twice_a_generator() {
        for n in 1..=4 {
            let ty = LieType::new(crate::cartan::Family::C, n).unwrap();
            let c1 = c1_class(ty).unwrap();
            assert_eq!(c1.terms.len(), 1, "C{n}");
            assert_eq!(*c1.terms.values().next().unwrap(), 2, "C{n}");
        }
        assert_eq!(
            chain_coeffs(t("C2")).unwrap(),
            ChainCoeffs::Chain(vec![2, 2, 2])
        );
    }

    #[test]
    fn g2_c1_is_generator() {
        let c1 = c1_class(t("G2")).unwrap();
        assert_eq!(c1.terms, BTreeMap::from([(vec![2], 1)]));
    }

    #[test]
    fn a2_c1_two_divisors() {
        let c1 = c1_class(t("A2")).unwrap();
        assert_eq!(c1.terms, BTreeMap::from([(vec![1], 1), (vec![2], 1)]));
        assert_eq!(chain_coeffs(t("A3")).unwrap(), ChainCoeffs::NotAChain);
    }

    #[test]
    fn zero_weight_gives_zero() {
        let d = Arc::new(RootDatum::new(t("B3")));
        let h = lambda0_cohomology(&d).unwrap();
        for w in h.quotient().reps() {
            assert!(h.divisor_mult(&WeightVec::zero(3), w).unwrap().is_zero());
        }
    }

    #[test]
    fn grading_preserved() {
        let d = Arc::new(RootDatum::new(t("C3")));
        let weyl = WeylGroup::new(d.clone());
        let i: BTreeSet<usize> = [2].into();
        let h = FlagCohomology::new(&weyl, &i, 1 << 20).unwrap();
        let mu = WeightVec(vec![1, 1, 1]);
        for (w, &l) in h.quotient().reps().iter().zip(h.quotient().lengths()) {
            let p = h.divisor_mult(&mu, w).unwrap();
            assert!(p.degrees().iter().all(|&d| d == l + 1));
        }
    }

    #[test]
    fn rejects_non_min_rep() {
        let d = Arc::new(RootDatum::new(t("G2")));
        let weyl = WeylGroup::new(d.clone());
        let i = d.i_of_lambda0();
        let w = weyl.from_word(&[1]).unwrap();
        let e = chevalley_divisor_mult(&weyl, &i, &c1_weight(&d), &w).unwrap_err();
        assert!(matches!(e, Error::NotMinRep(_)));
    }

    #[test]
    fn pd_statuses() {
        assert_eq!(thom_pd_status(t("A1")).unwrap(), PDStatus::RationalOnly);
        assert_eq!(thom_pd_status(t("G2")).unwrap(), PDStatus::RationalOnly);
        assert_eq!(thom_pd_status(t("E8")).unwrap(), PDStatus::NotPalindromic);
        assert_eq!(thom_pd_status(t("B3")).unwrap(), PDStatus::NotPalindromic);
        assert_eq!(
            pd_status_from(&ChainCoeffs::Chain(vec![1, -1])),
            PDStatus::Integral
        );
        assert_eq!(
            pd_status_from(&ChainCoeffs::Chain(vec![2, 0])),
            PDStatus::PalindromicOnly
        );
    }
}
