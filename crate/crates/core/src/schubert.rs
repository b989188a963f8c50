//! Affine Schubert classes under the `*`-product, segments, and segment
//! factorization.
//!
//! Classes are indexed by minimal coset representatives `W~^S`. The product
//! is basis-to-basis: `[X_tau] * [X_nu]` is `[X_{tau nu}]` when lengths add
//! and `tau nu` stays in `W~^S`, and zero otherwise.

use std::collections::HashSet;

use crate::affine::{AffineElem, AffineGroup};
use crate::cartan::CorootVec;
use crate::error::{Error, Result};
use crate::graded::GradedPoly;
use crate::weyl::Reflectable;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchubertClass(AffineElem);

impl SchubertClass {
    pub fn new(g: &AffineGroup, x: AffineElem) -> Result<Self> {
        if !g.is_min_rep(&x) {
            return Err(Error::NotMinRep(g.format_elem(&x)));
        }
        Ok(SchubertClass(x))
    }

    pub fn index(&self) -> &AffineElem {
        &self.0
    }

    pub fn into_index(self) -> AffineElem {
        self.0
    }

    /// Complex dimension of `X_index`.
    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarResult {
    Zero,
    Class(SchubertClass),
}

impl StarResult {
    pub fn class(&self) -> Option<&SchubertClass> {
        match self {
            StarResult::Zero => None,
            StarResult::Class(c) => Some(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, StarResult::Zero)
    }
}

/// The two conditions that can make `tau nu` reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarReadings {
    pub length_additive: bool,
    pub product_in_minreps: bool,
}

impl StarReadings {
    /// Lengths add but the product leaves `W~^S`.
    pub fn differ(&self) -> bool {
        self.length_additive && !self.product_in_minreps
    }
}

pub fn star_readings(
    g: &AffineGroup,
    tau: &SchubertClass,
    nu: &SchubertClass,
) -> Result<StarReadings> {
    let p = g.mul(&tau.0, &nu.0)?;
    Ok(StarReadings {
        length_additive: p.len() == tau.dim() + nu.dim(),
        product_in_minreps: g.is_min_rep(&p),
    })
}

pub fn star(g: &AffineGroup, tau: &SchubertClass, nu: &SchubertClass) -> Result<StarResult> {
    star_act(g, &tau.0, nu)
}

/// Action of an arbitrary `x` in `W~` (a class in the affine flag variety) on
/// a Grassmannian class: `[X_{x nu}]` when lengths add and `x nu` is in
/// `W~^S`, zero otherwise. `star` is the restriction to `x` in `W~^S`.
pub fn star_act(g: &AffineGroup, x: &AffineElem, nu: &SchubertClass) -> Result<StarResult> {
    let p = g.mul(x, &nu.0)?;
    if p.len() == x.len() + nu.dim() && g.is_min_rep(&p) {
        Ok(StarResult::Class(SchubertClass(p)))
    } else {
        Ok(StarResult::Zero)
    }
}

/// Product of affine flag classes: `x y` when lengths add, else `None` (zero).
pub fn flag_product(g: &AffineGroup, x: &AffineElem, y: &AffineElem) -> Result<Option<AffineElem>> {
    let p = g.mul(x, y)?;
    Ok((p.len() == x.len() + y.len()).then_some(p))
}

/// Folds `star` left to right; the empty product is the identity class.
pub fn star_fold<'a>(
    g: &AffineGroup,
    classes: impl IntoIterator<Item = &'a SchubertClass>,
) -> Result<StarResult> {
    let mut acc = StarResult::Class(SchubertClass(g.identity()));
    for c in classes {
        acc = match acc {
            StarResult::Zero => return Ok(StarResult::Zero),
            StarResult::Class(a) => star(g, &a, c)?,
        };
    }
    Ok(acc)
}

/// The class of `t_{lambda_0}`.
pub fn lambda0_class(g: &AffineGroup) -> SchubertClass {
    SchubertClass(g.translation(&g.lambda0()).expect("rank matches"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPower {
    pub n: usize,
    /// Index of the `n`-th power, or `None` when it vanished.
    pub index: Option<AffineElem>,
    pub expected_length: usize,
    pub ok: bool,
}

/// Checks that the `n`-fold power of `[X_{t_{lambda_0}}]` is the class of
/// `t_{-n theta^vee}` with dimension `n l(t_{lambda_0})`, for `1 <= n <= n_max`.
pub fn verify_canonical_generating(g: &AffineGroup, n_max: usize) -> Result<Vec<CanonicalPower>> {
    let base = lambda0_class(g);
    g.bounds()
        .check_elem("canonical power length", n_max * base.dim())?;
    let mut out = Vec::with_capacity(n_max);
    let mut acc = StarResult::Class(base.clone());
    for n in 1..=n_max {
        if n > 1 {
            acc = match &acc {
                StarResult::Zero => StarResult::Zero,
                StarResult::Class(c) => star(g, c, &base)?,
            };
        }
        let target = g.translation(&g.lambda0().scaled(n as i64))?;
        let expected_length = n * base.dim();
        let index = acc.class().map(|c| c.0.clone());
        let ok = index
            .as_ref()
            .is_some_and(|x| *x == target && x.len() == expected_length);
        out.push(CanonicalPower {
            n,
            index,
            expected_length,
            ok,
        });
    }
    Ok(out)
}

fn sorted(g: &AffineGroup, mut xs: Vec<AffineElem>) -> Vec<SchubertClass> {
    xs.sort_by_cached_key(|x| g.sort_key(x));
    xs.into_iter().map(SchubertClass).collect()
}

/// Nonidentity elements of `W~^S` below `t_{lambda_0}`.
pub fn segments(g: &AffineGroup) -> Result<Vec<SchubertClass>> {
    let top = lambda0_class(g);
    let interval = g.minrep_lower_interval(&top.0)?;
    Ok(sorted(g, interval.into_iter().skip(1).flatten().collect()))
}

/// Segments as the minimal representatives of `v s_0 W`, `v` in `W`.
///
/// `v s_0 W = t_{v theta^vee} W`, so this walks the `W`-orbit of `theta^vee`.
pub fn segments_by_orbit(g: &AffineGroup) -> Result<Vec<SchubertClass>> {
    let start = g.highest_coroot().clone();
    let mut seen: HashSet<CorootVec> = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for i in 0..g.rank() {
            let mut u = v.clone();
            u.reflect(g.datum(), i);
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    let mut reps = Vec::with_capacity(seen.len());
    for mu in &seen {
        let m = g.min_rep_of_coset(mu)?;
        if !m.is_identity() {
            reps.push(m);
        }
    }
    Ok(sorted(g, reps))
}

/// Segments as `nu s_0` for `nu` minimal in `W / W_J`, `J = I(lambda_0)`.
pub fn segments_by_coset(g: &AffineGroup) -> Result<Vec<SchubertClass>> {
    let j = g.datum().i_of_lambda0();
    let quotient = g.weyl().min_coset_reps(&j, g.bounds().max_orbit)?;
    let s0 = g.generator(0)?;
    let mut out = Vec::with_capacity(quotient.len());
    for nu in quotient.reps() {
        let nu = g.from_parts(CorootVec::zero(g.rank()), nu.clone())?;
        out.push(g.mul(&nu, &s0)?);
    }
    Ok(sorted(g, out))
}

/// Segment factorization by exhaustive right-stripping.
#[derive(Debug, Clone)]
pub struct SegmentFactorizer<'g> {
    g: &'g AffineGroup,
    segments: Vec<SchubertClass>,
    inverses: Vec<AffineElem>,
}

impl<'g> SegmentFactorizer<'g> {
    pub fn new(g: &'g AffineGroup) -> Result<Self> {
        let segments = segments(g)?;
        let inverses = segments.iter().map(|s| g.inverse(&s.0)).collect();
        Ok(SegmentFactorizer {
            g,
            segments,
            inverses,
        })
    }

    pub fn segments(&self) -> &[SchubertClass] {
        &self.segments
    }

    /// Every tuple of segments with product `w`, additive lengths, and all
    /// left partial products in `W~^S`.
    pub fn factorizations(&self, w: &SchubertClass) -> Result<Vec<Vec<SchubertClass>>> {
        self.g
            .bounds()
            .check_elem("factorization length", w.dim())?;
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        self.strip(&w.0, &mut suffix, &mut out)?;
        Ok(out)
    }

    fn strip(
        &self,
        w: &AffineElem,
        suffix: &mut Vec<SchubertClass>,
        out: &mut Vec<Vec<SchubertClass>>,
    ) -> Result<()> {
        if w.is_identity() {
            out.push(suffix.iter().rev().cloned().collect());
            return Ok(());
        }
        for (seg, inv) in self.segments.iter().zip(&self.inverses) {
            if seg.dim() > w.len() {
                continue;
            }
            let rest = self.g.mul(w, inv)?;
            if rest.len() + seg.dim() != w.len() || !self.g.is_min_rep(&rest) {
                continue;
            }
            suffix.push(seg.clone());
            self.strip(&rest, suffix, out)?;
            suffix.pop();
        }
        Ok(())
    }

    /// The unique factorization; any other count is reported as an error.
    pub fn factorize(&self, w: &SchubertClass) -> Result<Vec<SchubertClass>> {
        let mut all = self.factorizations(w)?;
        if all.len() != 1 {
            return Err(Error::Precondition(format!(
                "{} has {} segment factorizations, expected exactly one",
                self.g.format_elem(&w.0),
                all.len()
            )));
        }
        Ok(all.pop().unwrap())
    }

    /// The `*`-product of the factors reproduces `[X_w]`.
    pub fn refactor_check(&self, w: &SchubertClass) -> Result<bool> {
        let factors = self.factorize(w)?;
        Ok(star_fold(self.g, &factors)? == StarResult::Class(w.clone()))
    }
}

pub fn segment_factorize(g: &AffineGroup, w: &SchubertClass) -> Result<Vec<SchubertClass>> {
    SegmentFactorizer::new(g)?.factorize(w)
}

pub fn star_refactor_check(g: &AffineGroup, w: &SchubertClass) -> Result<bool> {
    SegmentFactorizer::new(g)?.refactor_check(w)
}

/// Finds `tau <= sigma` and `nu <= t_lambda` in `W~^S` with
/// `[X_tau] * [X_nu] = [X_omega]`, taking `nu` as long as possible.
pub fn star_decompose(
    g: &AffineGroup,
    omega: &SchubertClass,
    sigma: &SchubertClass,
    lambda: &CorootVec,
) -> Result<(SchubertClass, SchubertClass)> {
    if !g.is_antidominant(lambda)? {
        return Err(Error::Precondition(format!("{lambda} is not antidominant")));
    }
    let t = g.translation(lambda)?;
    let top = g.min_rep(&g.mul(&sigma.0, &t)?);
    if !g.bruhat_leq(&omega.0, &top)? {
        return Err(Error::Precondition(format!(
            "{} is not below {}",
            g.format_elem(&omega.0),
            g.format_elem(&top)
        )));
    }
    let interval = g.minrep_lower_interval(&t)?;
    for level in interval.iter().rev() {
        for nu in level {
            if nu.len() > omega.dim() {
                continue;
            }
            let tau = g.mul(&omega.0, &g.inverse(nu))?;
            if tau.len() + nu.len() == omega.dim()
                && g.is_min_rep(&tau)
                && g.bruhat_leq(&tau, &sigma.0)?
            {
                return Ok((SchubertClass(tau), SchubertClass(nu.clone())));
            }
        }
    }
    Err(Error::Precondition(format!(
        "no decomposition of {} found",
        g.format_elem(&omega.0)
    )))
}

/// Cell counts of `X_w` by complex dimension.
pub fn schubert_poincare(g: &AffineGroup, w: &SchubertClass) -> Result<GradedPoly> {
    let interval = g.minrep_lower_interval(&w.0)?;
    Ok(GradedPoly::new(
        interval.iter().map(|l| l.len() as i64).collect(),
    ))
}
