//! The affine Weyl group `Q^vee x| W`.
//!
//! An element is stored as `x = t_lambda * w`: translation by a coroot-lattice
//! vector after the finite part. It acts on the coroot space by
//! `p -> w(p) + lambda`, with `s_0 = t_{theta^vee} s_theta` the reflection in
//! the hyperplane `<p, theta> = 1`.
//!
//! Length uses the closed formula
//!
//! ```text
//! l(t_lambda w) = sum_{beta > 0} |<lambda, w beta> + [w beta < 0]|
//! ```
//!
//! which counts hyperplanes separating the base alcove from its image. It is
//! checked against breadth-first search on the Cayley graph in the tests.
//!
//! Descents are decided from the sign of a single affine root: for
//! `x = t_lambda w`, `x(beta + k delta) = w beta + (k - <lambda, w beta>) delta`,
//! and `l(x s) < l(x)` iff `x(alpha_s)` is negative.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{CorootVec, LieType, RootDatum, RootVec};
use crate::error::{Error, Result};
use crate::weyl::{Reflectable, WeylElem, WeylGroup};

/// Size limits for enumerations and element-level algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Largest length reachable by level-by-level enumeration.
    pub enum_len: usize,
    /// Largest element length accepted by per-element algorithms (Bruhat
    /// comparison, Poincaré polynomials, factorization).
    pub elem_len: usize,
    /// Largest finite orbit / parabolic quotient that will be built.
    pub max_orbit: usize,
}

impl Bounds {
    pub fn for_rank(rank: usize) -> Self {
        Bounds {
            enum_len: if rank <= 2 { 12 } else { 10 },
            elem_len: 128,
            max_orbit: 2_000_000,
        }
    }

    pub(crate) fn check_enum(&self, what: &'static str, requested: usize) -> Result<()> {
        if requested > self.enum_len {
            return Err(Error::BoundExceeded {
                what,
                requested,
                limit: self.enum_len,
                limit_name: "enum-bound",
                flag: "--enum-bound",
            });
        }
        Ok(())
    }

    pub(crate) fn check_elem(&self, what: &'static str, requested: usize) -> Result<()> {
        if requested > self.elem_len {
            return Err(Error::BoundExceeded {
                what,
                requested,
                limit: self.elem_len,
                limit_name: "elem-bound",
                flag: "--elem-bound",
            });
        }
        Ok(())
    }
}

/// `t_lambda * w` with its length cached.
#[derive(Clone)]
pub struct AffineElem {
    trans: CorootVec,
    fin: WeylElem,
    len: usize,
}

impl AffineElem {
    pub fn trans(&self) -> &CorootVec {
        &self.trans
    }

    pub fn fin(&self) -> &WeylElem {
        &self.fin
    }

    /// Coxeter length; an element is never "empty".
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }
}

impl PartialEq for AffineElem {
    fn eq(&self, other: &Self) -> bool {
        self.trans == other.trans && self.fin == other.fin
    }
}

impl Eq for AffineElem {}

impl Hash for AffineElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trans.hash(state);
        self.fin.hash(state);
    }
}

impl fmt::Debug for AffineElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AffineElem(t={}, w={:?}, len={})",
            self.trans, self.fin, self.len
        )
    }
}

/// Minimal coset representatives `W~^S` grouped by length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinRepLevels {
    pub by_length: Vec<Vec<AffineElem>>,
    pub max_length: usize,
}

impl MinRepLevels {
    pub fn level_sizes(&self) -> Vec<usize> {
        self.by_length.iter().map(Vec::len).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &AffineElem> {
        self.by_length.iter().flatten()
    }
}

/// Cayley-graph distances from the identity.
#[derive(Debug, Clone)]
pub struct BfsLengths {
    pub levels: Vec<Vec<AffineElem>>,
    dist: HashMap<AffineElem, usize>,
}

impl BfsLengths {
    pub fn distance(&self, x: &AffineElem) -> Option<usize> {
        self.dist.get(x).copied()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }
}

/// The three equivalent characterizations of antidominance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntidominanceReport {
    /// `t_lambda` is a minimal coset representative.
    pub a: bool,
    /// The coset `lambda W` is the Bruhat maximum of its `W`-orbit.
    pub b: bool,
    /// `<lambda, alpha_s> <= 0` for every simple root.
    pub c: bool,
}

impl AntidominanceReport {
    pub fn consistent(&self) -> bool {
        self.a == self.b && self.b == self.c
    }
}

#[derive(Debug, Clone)]
pub struct AffineGroup {
    weyl: WeylGroup,
    theta: RootVec,
    theta_v: CorootVec,
    s_theta: WeylElem,
    /// `pairings[a][k] = <alpha_k^vee, beta_a>` for positive roots `beta_a`.
    pairings: Vec<Vec<i64>>,
    reflections: Vec<WeylElem>,
    bounds: Bounds,
}

impl AffineGroup {
    pub fn new(t: LieType) -> Self {
        Self::from_datum(Arc::new(RootDatum::new(t)))
    }

    pub fn from_datum(datum: Arc<RootDatum>) -> Self {
        let weyl = WeylGroup::new(datum.clone());
        let theta = datum.highest_root().clone();
        let theta_v = datum.highest_coroot();
        let s_theta = weyl.reflection(&theta).expect("highest root");
        let r = datum.rank();
        let pairings = datum
            .pos_roots()
            .iter()
            .map(|b| (0..r).map(|k| datum.root_coroot_pairing(b, k)).collect())
            .collect();
        let reflections = datum
            .pos_roots()
            .iter()
            .map(|b| weyl.reflection(b).unwrap())
            .collect();
        AffineGroup {
            weyl,
            theta,
            theta_v,
            s_theta,
            pairings,
            reflections,
            bounds: Bounds::for_rank(r),
        }
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Self {
        self.bounds = bounds;
        self
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn lie_type(&self) -> LieType {
        self.datum().lie_type()
    }

    pub fn rank(&self) -> usize {
        self.weyl.rank()
    }

    pub fn datum(&self) -> &RootDatum {
        self.weyl.datum()
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn highest_coroot(&self) -> &CorootVec {
        &self.theta_v
    }

    /// `lambda_0 = -theta^vee`.
    pub fn lambda0(&self) -> CorootVec {
        self.theta_v.neg()
    }

    fn check_affine_node(&self, node: usize) -> Result<()> {
        if node > self.rank() {
            return Err(Error::BadNode {
                node,
                kind: "affine",
                rank: self.rank(),
            });
        }
        Ok(())
    }

    fn check_elem(&self, x: &AffineElem) -> Result<()> {
        self.datum().check_rank(x.trans.rank())
    }

    // ---- pairings ----

    fn pair_simple(&self, mu: &[i64], i: usize) -> i64 {
        let a = self.datum().cartan();
        mu.iter().enumerate().map(|(k, m)| m * a[k][i]).sum()
    }

    fn pair_theta(&self, mu: &[i64]) -> i64 {
        self.datum().pairing_unchecked(mu, &self.theta.0)
    }

    // ---- construction ----

    pub fn identity(&self) -> AffineElem {
        AffineElem {
            trans: CorootVec::zero(self.rank()),
            fin: self.weyl.identity(),
            len: 0,
        }
    }

    /// The Coxeter generator `s_node`, `node` in `0..=rank`.
    pub fn generator(&self, node: usize) -> Result<AffineElem> {
        self.check_affine_node(node)?;
        if node == 0 {
            Ok(AffineElem {
                trans: self.theta_v.clone(),
                fin: self.s_theta.clone(),
                len: 1,
            })
        } else {
            Ok(AffineElem {
                trans: CorootVec::zero(self.rank()),
                fin: self.weyl.generator(node)?,
                len: 1,
            })
        }
    }

    pub fn from_parts(&self, trans: CorootVec, fin: WeylElem) -> Result<AffineElem> {
        self.datum().check_rank(trans.rank())?;
        self.datum().check_rank(fin.matrix().dim())?;
        let len = self.length_of(&trans, &fin);
        Ok(AffineElem { trans, fin, len })
    }

    pub fn translation(&self, lambda: &CorootVec) -> Result<AffineElem> {
        self.from_parts(lambda.clone(), self.weyl.identity())
    }

    pub fn from_word(&self, word: &[usize]) -> Result<AffineElem> {
        let mut x = self.identity();
        for &s in word {
            self.check_affine_node(s)?;
            self.mul_gen_right(&mut x, s);
        }
        Ok(x)
    }

    // ---- length ----

    fn length_of(&self, trans: &CorootVec, fin: &WeylElem) -> usize {
        let mu = fin.inverse_matrix().apply(&trans.0);
        let mat = fin.matrix();
        let mut total = 0i64;
        for (p, bv) in self.pairings.iter().zip(self.datum().pos_coroots()) {
            let pair: i64 = mu.iter().zip(p).map(|(m, c)| m * c).sum();
            let img = mat.apply(&bv.0);
            let neg = img.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0);
            total += (pair + neg as i64).abs();
        }
        total as usize
    }

    /// Length by the closed formula.
    pub fn length(&self, x: &AffineElem) -> usize {
        self.length_of(&x.trans, &x.fin)
    }

    // ---- multiplication ----

    pub fn mul(&self, x: &AffineElem, y: &AffineElem) -> Result<AffineElem> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        let moved = self.weyl.apply_coroot(&x.fin, &y.trans)?;
        let trans = x.trans.add(&moved);
        let fin = self.weyl.mul(&x.fin, &y.fin)?;
        let len = self.length_of(&trans, &fin);
        Ok(AffineElem { trans, fin, len })
    }

    /// `(t_lambda w)^{-1} = t_{-w^{-1} lambda} w^{-1}`.
    pub fn inverse(&self, x: &AffineElem) -> AffineElem {
        let fin = self.weyl.inverse(&x.fin);
        let trans = CorootVec(fin.matrix().apply(&x.trans.0)).neg();
        AffineElem {
            trans,
            fin,
            len: x.len,
        }
    }

    fn raw_mul_gen_right(&self, x: &mut AffineElem, node: usize) {
        if node == 0 {
            let shift = x.fin.matrix().apply(&self.theta_v.0);
            for (t, s) in x.trans.0.iter_mut().zip(shift) {
                *t += s;
            }
            x.fin = self.weyl.mul(&x.fin, &self.s_theta).unwrap();
        } else {
            self.weyl.mul_gen_right(&mut x.fin, node);
        }
    }

    fn raw_mul_gen_left(&self, node: usize, x: &mut AffineElem) {
        if node == 0 {
            let moved = self.s_theta.matrix().apply(&x.trans.0);
            x.trans = CorootVec(moved).add(&self.theta_v);
            x.fin = self.weyl.mul(&self.s_theta, &x.fin).unwrap();
        } else {
            x.trans.reflect(self.datum(), node - 1);
            self.weyl.mul_gen_left(node, &mut x.fin);
        }
    }

    /// `x <- x * s_node`, updating the cached length.
    pub fn mul_gen_right(&self, x: &mut AffineElem, node: usize) {
        let down = self.is_right_descent(x, node);
        self.raw_mul_gen_right(x, node);
        x.len = if down { x.len - 1 } else { x.len + 1 };
    }

    /// `x <- s_node * x`, updating the cached length.
    pub fn mul_gen_left(&self, node: usize, x: &mut AffineElem) {
        let down = self.is_left_descent(node, x);
        self.raw_mul_gen_left(node, x);
        x.len = if down { x.len - 1 } else { x.len + 1 };
    }

    // ---- descents ----

    /// `l(x s) < l(x)`.
    pub fn is_right_descent(&self, x: &AffineElem, node: usize) -> bool {
        let mu = x.fin.inverse_matrix().apply(&x.trans.0);
        if node == 0 {
            let c = 1 + self.pair_theta(&mu);
            let img = x.fin.matrix().apply(&self.theta_v.0);
            c < 0 || (c == 0 && sign(&img) > 0)
        } else {
            let m = self.pair_simple(&mu, node - 1);
            m > 0 || (m == 0 && self.weyl.is_right_descent(&x.fin, node))
        }
    }

    /// `l(s x) < l(x)`.
    pub fn is_left_descent(&self, node: usize, x: &AffineElem) -> bool {
        if node == 0 {
            let c = 1 - self.pair_theta(&x.trans.0);
            let img = x.fin.inverse_matrix().apply(&self.theta_v.0);
            c < 0 || (c == 0 && sign(&img) > 0)
        } else {
            let m = self.pair_simple(&x.trans.0, node - 1);
            m < 0 || (m == 0 && self.weyl.is_left_descent(&x.fin, node))
        }
    }

    /// Reduced word by stripping the smallest left descent; the product of
    /// the word, left to right, is `x`.
    pub fn reduced_word(&self, x: &AffineElem) -> Vec<usize> {
        let mut y = x.clone();
        let mut word = Vec::with_capacity(x.len);
        'outer: while y.len > 0 {
            for s in 0..=self.rank() {
                if self.is_left_descent(s, &y) {
                    self.mul_gen_left(s, &mut y);
                    word.push(s);
                    continue 'outer;
                }
            }
            unreachable!("nonidentity element without a left descent");
        }
        word
    }

    // ---- minimal representatives ----

    /// No right descent in the finite generators.
    pub fn is_min_rep(&self, x: &AffineElem) -> bool {
        (1..=self.rank()).all(|s| !self.is_right_descent(x, s))
    }

    /// The minimal element of the coset `x W`.
    pub fn min_rep(&self, x: &AffineElem) -> AffineElem {
        let mut y = x.clone();
        'outer: loop {
            for s in 1..=self.rank() {
                if self.is_right_descent(&y, s) {
                    self.mul_gen_right(&mut y, s);
                    continue 'outer;
                }
            }
            return y;
        }
    }

    /// Minimal representative of the coset `t_lambda W`.
    pub fn min_rep_of_coset(&self, lambda: &CorootVec) -> Result<AffineElem> {
        Ok(self.min_rep(&self.translation(lambda)?))
    }

    pub fn is_antidominant(&self, lambda: &CorootVec) -> Result<bool> {
        self.datum().check_rank(lambda.rank())?;
        Ok((0..self.rank()).all(|i| self.pair_simple(&lambda.0, i) <= 0))
    }

    /// Evaluates the three antidominance characterizations independently.
    pub fn antidominant_equivalences(&self, lambda: &CorootVec) -> Result<AntidominanceReport> {
        let t = self.translation(lambda)?;
        self.bounds
            .check_elem("antidominance check length", t.len)?;
        let a = self.is_min_rep(&t);
        let c = self.is_antidominant(lambda)?;

        let top = self.min_rep(&t);
        let mut orbit: HashSet<CorootVec> = HashSet::from([lambda.clone()]);
        let mut stack = vec![lambda.clone()];
        while let Some(v) = stack.pop() {
            for i in 0..self.rank() {
                let mut u = v.clone();
                u.reflect(self.datum(), i);
                if orbit.insert(u.clone()) {
                    if orbit.len() > self.bounds.max_orbit {
                        return Err(Error::BoundExceeded {
                            what: "coroot orbit size",
                            requested: orbit.len(),
                            limit: self.bounds.max_orbit,
                            limit_name: "max-orbit",
                            flag: "--max-orbit",
                        });
                    }
                    stack.push(u);
                }
            }
        }
        let mut b = true;
        for mu in &orbit {
            let other = self.min_rep_of_coset(mu)?;
            if !self.bruhat_leq(&other, &top)? {
                b = false;
                break;
            }
        }
        Ok(AntidominanceReport { a, b, c })
    }

    // ---- enumeration ----

    /// Canonical sort key: length, translation, finite reduced word.
    pub fn sort_key(&self, x: &AffineElem) -> (usize, Vec<i64>, Vec<usize>) {
        (x.len, x.trans.0.clone(), self.weyl.reduced_word(&x.fin))
    }

    /// Level `k` holds the minimal representatives of length `k`. Every such
    /// element of length `k + 1` is `s x` for a level-`k` element `x` and a
    /// left ascent `s`.
    pub fn enumerate_minreps(&self, max_len: usize) -> Result<MinRepLevels> {
        self.bounds
            .check_enum("min-rep enumeration length", max_len)?;
        let mut levels = vec![vec![self.identity()]];
        for _ in 0..max_len {
            let mut seen: HashSet<CorootVec> = HashSet::new();
            let mut next = Vec::new();
            for x in levels.last().unwrap() {
                for s in 0..=self.rank() {
                    if self.is_left_descent(s, x) {
                        continue;
                    }
                    let mut y = x.clone();
                    self.mul_gen_left(s, &mut y);
                    if self.is_min_rep(&y) && seen.insert(y.trans.clone()) {
                        next.push(y);
                    }
                }
            }
            next.sort_by(|a, b| a.trans.cmp(&b.trans));
            levels.push(next);
        }
        Ok(MinRepLevels {
            by_length: levels,
            max_length: max_len,
        })
    }

    /// Breadth-first search on the Cayley graph with generators
    /// `s_0, ..., s_r`. Distances come only from the search, never from the
    /// length formula.
    pub fn length_bfs_oracle(&self, up_to: usize) -> Result<BfsLengths> {
        self.bounds.check_enum("BFS oracle depth", up_to)?;
        let mut dist: HashMap<AffineElem, usize> = HashMap::new();
        let id = self.identity();
        dist.insert(id.clone(), 0);
        let mut levels = vec![vec![id]];
        for d in 1..=up_to {
            let mut next = Vec::new();
            for x in levels.last().unwrap() {
                for s in 0..=self.rank() {
                    let mut y = x.clone();
                    self.raw_mul_gen_right(&mut y, s);
                    y.len = d;
                    if !dist.contains_key(&y) {
                        dist.insert(y.clone(), d);
                        next.push(y);
                    }
                }
            }
            next.sort_by_cached_key(|y| self.sort_key(y));
            levels.push(next);
        }
        Ok(BfsLengths { levels, dist })
    }

    // ---- Bruhat order ----

    /// Bruhat comparison along a fixed reduced word `s_1 ... s_n` of `w`.
    ///
    /// With `s = s_1` a left descent of `w`: if `s` is also a left descent of
    /// `v` then `v <= w` iff `s v <= s w`, otherwise `v <= w` iff `v <= s w`.
    pub fn bruhat_leq(&self, v: &AffineElem, w: &AffineElem) -> Result<bool> {
        self.check_elem(v)?;
        self.check_elem(w)?;
        self.bounds.check_elem("Bruhat comparison length", w.len)?;
        if v.len > w.len {
            return Ok(false);
        }
        let word = self.reduced_word(w);
        let mut v = v.clone();
        for (k, &s) in word.iter().enumerate() {
            if v.len == 0 {
                return Ok(true);
            }
            if self.is_left_descent(s, &v) {
                self.mul_gen_left(s, &mut v);
            }
            if v.len > word.len() - k - 1 {
                return Ok(false);
            }
        }
        Ok(v.len == 0)
    }

    /// Elements of `W~^S` covered by `x` in Bruhat order.
    ///
    /// A cover `y = r x` comes from an affine reflection `r = t_{k alpha^vee}
    /// s_alpha` whose hyperplane separates the base alcove from `x`'s, so `k`
    /// only ranges between 0 and `<lambda, alpha>`.
    pub fn minrep_cocovers(&self, x: &AffineElem) -> Vec<AffineElem> {
        if x.len == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let datum = self.datum();
        for (a, (beta, bv)) in datum
            .pos_roots()
            .iter()
            .zip(datum.pos_coroots())
            .enumerate()
        {
            let m = datum.pairing_unchecked(&x.trans.0, &beta.0);
            let refl = &self.reflections[a];
            let fin = self.weyl.mul(refl, &x.fin).unwrap();
            for k in (m.min(0) - 1)..=(m.max(0) + 1) {
                // r(lambda) = lambda - (m - k) alpha^vee
                let trans = x.trans.add(&bv.scaled(k - m));
                let mut y = AffineElem {
                    trans,
                    fin: fin.clone(),
                    len: 0,
                };
                if !self.is_min_rep(&y) {
                    continue;
                }
                y.len = self.length(&y);
                if y.len + 1 == x.len {
                    out.push(y);
                }
            }
        }
        out
    }

    /// `{v in W~^S : v <= w}` grouped by length, for `w` in `W~^S`.
    pub fn minrep_lower_interval(&self, w: &AffineElem) -> Result<Vec<Vec<AffineElem>>> {
        self.check_elem(w)?;
        self.bounds.check_elem("lower interval length", w.len)?;
        if !self.is_min_rep(w) {
            return Err(Error::NotMinRep(self.format_elem(w)));
        }
        let mut levels: Vec<Vec<AffineElem>> = vec![Vec::new(); w.len + 1];
        levels[w.len].push(w.clone());
        for l in (1..=w.len).rev() {
            let mut seen: HashSet<CorootVec> = HashSet::new();
            let mut below = Vec::new();
            for x in &levels[l] {
                for y in self.minrep_cocovers(x) {
                    if seen.insert(y.trans.clone()) {
                        below.push(y);
                    }
                }
            }
            below.sort_by(|a, b| a.trans.cmp(&b.trans));
            levels[l - 1] = below;
        }
        Ok(levels)
    }

    // ---- text format ----

    /// Canonical text: `word:` followed by the reduced word.
    pub fn format_elem(&self, x: &AffineElem) -> String {
        let word = self.reduced_word(x);
        format!("word:{}", join(&word))
    }

    /// Parts form `t:<coords>|w:<finite word>`.
    pub fn format_parts(&self, x: &AffineElem) -> String {
        let word = self.weyl.reduced_word(&x.fin);
        format!("t:{}|w:{}", join(&x.trans.0), join(&word))
    }

    /// Parses `word:0,1,2`, `t:-1,0` or `t:-1,0|w:1,2`.
    pub fn parse_elem(&self, text: &str) -> Result<AffineElem> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("word:") {
            let word = parse_list::<usize>(rest, text)?;
            for &s in &word {
                if s > self.rank() {
                    return Err(Error::parse(
                        s.to_string(),
                        format!("node out of range 0..={} in `{text}`", self.rank()),
                    ));
                }
            }
            return self.from_word(&word);
        }
        if let Some(rest) = text.strip_prefix("t:") {
            let (coords, fin_word) = match rest.split_once('|') {
                Some((c, w)) => {
                    let w = w
                        .strip_prefix("w:")
                        .ok_or_else(|| Error::parse(w, "expected `w:<word>` after `|`"))?;
                    (c, Some(w))
                }
                None => (rest, None),
            };
            let coords = parse_list::<i64>(coords, text)?;
            if coords.len() != self.rank() {
                return Err(Error::parse(
                    text,
                    format!(
                        "expected {} translation coordinates, got {}",
                        self.rank(),
                        coords.len()
                    ),
                ));
            }
            let fin = match fin_word {
                Some(w) => {
                    let word = parse_list::<usize>(w, text)?;
                    for &s in &word {
                        if s == 0 || s > self.rank() {
                            return Err(Error::parse(
                                s.to_string(),
                                format!("finite node out of range 1..={} in `{text}`", self.rank()),
                            ));
                        }
                    }
                    self.weyl.from_word(&word)?
                }
                None => self.weyl.identity(),
            };
            return self.from_parts(CorootVec(coords), fin);
        }
        let head = text.split(':').next().unwrap_or(text);
        Err(Error::parse(
            head,
            "expected `word:` or `t:` element syntax",
        ))
    }
}

fn sign(v: &[i64]) -> i64 {
    v.iter().find(|&&c| c != 0).map_or(0, |c| c.signum())
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_list<T: std::str::FromStr>(s: &str, whole: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<T>()
                .map_err(|_| Error::parse(tok, format!("not an integer in `{whole}`")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::parse_type;
    use proptest::prelude::*;

    fn group(t: &str) -> AffineGroup {
        AffineGroup::new(parse_type(t).unwrap())
    }

    #[test]
    fn s0_is_an_involution() {
        for t in ["A1", "A2", "C3", "G2", "F4", "E8"] {
            let g = group(t);
            let s0 = g.generator(0).unwrap();
            assert_eq!(g.length(&s0), 1, "{t}");
            let e = g.mul(&s0, &s0).unwrap();
            assert!(e.is_identity() && e == g.identity(), "{t}");
        }
    }

    #[test]
    fn translations_commute_and_add() {
        let g = group("C2");
        let a = g.translation(&CorootVec(vec![1, -2])).unwrap();
        let b = g.translation(&CorootVec(vec![0, 3])).unwrap();
        let ab = g.mul(&a, &b).unwrap();
        assert_eq!(ab, g.mul(&b, &a).unwrap());
        assert_eq!(ab.trans().0, vec![1, 1]);
    }

    #[test]
    fn a1_s1_s0_is_negative_translation() {
        let g = group("A1");
        let x = g.from_word(&[1, 0]).unwrap();
        assert_eq!(x.trans().0, vec![-1]);
        assert!(x.fin().is_identity());
        assert_eq!(x.len(), 2);
        assert_eq!(g.reduced_word(&x), vec![1, 0]);
        let t = g.translation(&CorootVec(vec![-1])).unwrap();
        assert_eq!(t, x);
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let g = group("G2");
        let x = g.from_word(&[0, 2, 1, 0, 1]).unwrap();
        let xi = g.inverse(&x);
        assert_eq!(g.mul(&x, &xi).unwrap(), g.identity());
        assert_eq!(g.length(&xi), g.length(&x));
    }

    #[test]
    fn t_lambda0_lengths() {
        let g2 = group("G2");
        assert_eq!(g2.translation(&g2.lambda0()).unwrap().len(), 6);
        let a2 = group("A2");
        let t = a2.translation(&a2.lambda0()).unwrap();
        let word = a2.reduced_word(&t);
        assert_eq!(word.len(), 4);
        assert_eq!(*word.last().unwrap(), 0);
        let e8 = group("E8");
        assert_eq!(e8.translation(&e8.lambda0()).unwrap().len(), 58);
    }

    #[test]
    fn bfs_levels() {
        let a1 = group("A1");
        assert_eq!(
            a1.length_bfs_oracle(3).unwrap().level_sizes(),
            vec![1, 2, 2, 2]
        );
        let g2 = group("G2");
        let bfs = g2.length_bfs_oracle(1).unwrap();
        assert_eq!(bfs.distance(&g2.generator(0).unwrap()), Some(1));
        assert!(a1.length_bfs_oracle(50).unwrap_err().is_bound());
    }

    #[test]
    fn bfs_agrees_with_formula() {
        for t in ["A1", "A2", "C2", "G2", "A3"] {
            let g = group(t);
            let bfs = g.length_bfs_oracle(6).unwrap();
            for (d, level) in bfs.levels.iter().enumerate() {
                for x in level {
                    assert_eq!(g.length(x), d, "{t} {x:?}");
                }
            }
        }
    }

    #[test]
    fn min_rep_examples() {
        let g = group("A2");
        let w = g.from_word(&[1, 2, 1]).unwrap();
        assert_eq!(g.min_rep(&w), g.identity());
        let a1 = group("A1");
        let t = a1.translation(&CorootVec(vec![1])).unwrap();
        assert!(!a1.is_min_rep(&t));
        let m = a1.min_rep(&t);
        assert_eq!(m.len(), 1);
        assert_eq!(m, a1.generator(0).unwrap());
        let anti = a1.translation(&CorootVec(vec![-3])).unwrap();
        assert!(a1.is_min_rep(&anti));
    }

    #[test]
    fn antidominance_checks() {
        let g = group("A2");
        assert!(g.is_antidominant(&CorootVec::zero(2)).unwrap());
        assert!(g.is_antidominant(&g.lambda0()).unwrap());
        let r = g
            .antidominant_equivalences(&CorootVec(vec![-1, -1]))
            .unwrap();
        assert_eq!(
            r,
            AntidominanceReport {
                a: true,
                b: true,
                c: true
            }
        );
        let a1 = group("A1");
        assert!(!a1.is_antidominant(&CorootVec(vec![1])).unwrap());
        let r = a1.antidominant_equivalences(&CorootVec(vec![1])).unwrap();
        assert_eq!(
            r,
            AntidominanceReport {
                a: false,
                b: false,
                c: false
            }
        );
        let r = a1.antidominant_equivalences(&CorootVec(vec![0])).unwrap();
        assert!(r.a && r.b && r.c);
    }

    #[test]
    fn minrep_levels() {
        let a1 = group("A1");
        let lv = a1.enumerate_minreps(6).unwrap();
        assert_eq!(lv.level_sizes(), vec![1; 7]);
        let a2 = group("A2");
        assert_eq!(
            a2.enumerate_minreps(3).unwrap().level_sizes(),
            vec![1, 1, 2, 2]
        );
        let g2 = group("G2");
        assert_eq!(
            g2.enumerate_minreps(5).unwrap().level_sizes(),
            vec![1, 1, 1, 1, 1, 2]
        );
        for x in g2.enumerate_minreps(8).unwrap().iter().skip(1) {
            assert_eq!(*g2.reduced_word(x).last().unwrap(), 0);
        }
        assert!(a2.enumerate_minreps(40).unwrap_err().is_bound());
    }

    #[test]
    fn bruhat_examples() {
        let a1 = group("A1");
        let s0 = a1.generator(0).unwrap();
        let s1 = a1.generator(1).unwrap();
        assert!(!a1.bruhat_leq(&s0, &s1).unwrap());
        assert!(a1.bruhat_leq(&a1.identity(), &s1).unwrap());
        for t in ["A1", "A2", "C2", "G2", "D4"] {
            let g = group(t);
            let top = g.translation(&g.lambda0()).unwrap();
            assert!(g.bruhat_leq(&g.generator(0).unwrap(), &top).unwrap(), "{t}");
        }
    }

    #[test]
    fn affine_bruhat_restricts_to_finite_subword_order() {
        let g = group("A2");
        let w = g.weyl();
        let mut elems = vec![w.identity()];
        for word in [vec![1], vec![2], vec![1, 2], vec![2, 1], vec![1, 2, 1]] {
            elems.push(w.from_word(&word).unwrap());
        }
        for u in &elems {
            for v in &elems {
                let au = g.from_parts(CorootVec::zero(2), u.clone()).unwrap();
                let av = g.from_parts(CorootVec::zero(2), v.clone()).unwrap();
                assert_eq!(g.bruhat_leq(&au, &av).unwrap(), w.bruhat_leq_subword(u, v));
            }
        }
    }

    #[test]
    fn lower_interval_matches_enumeration() {
        for t in ["A2", "C2", "G2"] {
            let g = group(t);
            let levels = g.enumerate_minreps(7).unwrap();
            for w in levels.iter() {
                let interval = g.minrep_lower_interval(w).unwrap();
                let got: HashSet<AffineElem> = interval.into_iter().flatten().collect();
                let want: HashSet<AffineElem> = levels
                    .iter()
                    .filter(|v| v.len() <= w.len() && g.bruhat_leq(v, w).unwrap())
                    .cloned()
                    .collect();
                assert_eq!(got, want, "{t} {}", g.format_elem(w));
            }
        }
    }

    #[test]
    fn text_format() {
        let g = group("A2");
        let x = g.parse_elem("word:0,1,2,0").unwrap();
        let canon = g.format_elem(&x);
        assert_eq!(g.parse_elem(&canon).unwrap(), x);
        assert_eq!(g.parse_elem(&g.format_parts(&x)).unwrap(), x);
        assert_eq!(g.parse_elem("word:").unwrap(), g.identity());
        let t = g.parse_elem("t:-1,0").unwrap();
        assert_eq!(t.trans().0, vec![-1, 0]);
        let tw = g.parse_elem("t:-1,0|w:1,2").unwrap();
        assert_eq!(g.weyl().reduced_word(tw.fin()), vec![1, 2]);

        for bad in [
            "word:0,x",
            "word:5",
            "t:1",
            "t:1,2|w:0",
            "t:1,2|v:1",
            "foo:1",
        ] {
            let e = g.parse_elem(bad).unwrap_err();
            assert!(e.is_parse(), "{bad}: {e}");
        }
        match g.parse_elem("word:0,x").unwrap_err() {
            Error::Parse { token, .. } => assert_eq!(token, "x"),
            e => panic!("{e}"),
        }
    }

    fn word_strategy(rank: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(0..=rank, 0..max)
    }

    proptest! {
        #[test]
        fn descents_agree_with_length(word in word_strategy(2, 14)) {
            for t in ["A2", "C2", "G2"] {
                let g = group(t);
                let x = g.from_word(&word).unwrap();
                prop_assert_eq!(x.len(), g.length(&x));
                for s in 0..=2 {
                    let sx = g.mul(&g.generator(s).unwrap(), &x).unwrap();
                    let xs = g.mul(&x, &g.generator(s).unwrap()).unwrap();
                    prop_assert_eq!(g.is_left_descent(s, &x), sx.len() < x.len());
                    prop_assert_eq!(g.is_right_descent(&x, s), xs.len() < x.len());
                }
            }
        }

        #[test]
        fn reduced_word_reproduces(word in word_strategy(3, 16)) {
            let g = group("B3");
            let x = g.from_word(&word).unwrap();
            let red = g.reduced_word(&x);
            prop_assert_eq!(red.len(), x.len());
            prop_assert_eq!(g.from_word(&red).unwrap(), x);
        }

        #[test]
        fn mult_is_associative(a in word_strategy(2, 8), b in word_strategy(2, 8), c in word_strategy(2, 8)) {
            let g = group("G2");
            let (x, y, z) = (g.from_word(&a).unwrap(), g.from_word(&b).unwrap(), g.from_word(&c).unwrap());
            let l = g.mul(&g.mul(&x, &y).unwrap(), &z).unwrap();
            let r = g.mul(&x, &g.mul(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn min_rep_stays_in_coset(word in word_strategy(2, 12)) {
            let g = group("C2");
            let x = g.from_word(&word).unwrap();
            let m = g.min_rep(&x);
            prop_assert!(g.is_min_rep(&m));
            let q = g.mul(&g.inverse(&m), &x).unwrap();
            prop_assert!(q.trans().is_zero());
        }
    }
}
