//! The finite Weyl group acting on the coroot lattice, parabolic quotients
//! `W^I` and their Poincaré polynomials.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::cartan::{CorootVec, RootDatum, RootVec, WeightVec};
use crate::error::{Error, Result};
use crate::graded::GradedPoly;

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: usize,
    data: Vec<i64>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Mat { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Mat { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Sign of the leading nonzero entry of column `j`.
    #[inline]
    fn col_sign(&self, j: usize) -> i64 {
        for i in 0..self.n {
            let x = self.get(i, j);
            if x != 0 {
                return x.signum();
            }
        }
        0
    }

    /// `self <- self * s_i` (column operation).
    fn right_reflect(&mut self, cartan: &[Vec<i64>], i: usize) {
        for (k, cartan_row) in cartan.iter().enumerate().take(self.n) {
            let c = cartan_row[i];
            if k == i || c == 0 {
                continue;
            }
            for row in 0..self.n {
                let v = self.get(row, k) - c * self.get(row, i);
                self.set(row, k, v);
            }
        }
        for row in 0..self.n {
            let v = -self.get(row, i);
            self.set(row, i, v);
        }
    }

    /// `self <- s_i * self` (row operation).
    fn left_reflect(&mut self, cartan: &[Vec<i64>], i: usize) {
        for col in 0..self.n {
            let s: i64 = (0..self.n).map(|k| cartan[k][i] * self.get(k, col)).sum();
            let v = self.get(i, col) - s;
            self.set(i, col, v);
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = self.data.chunks(self.n.max(1)).collect();
        write!(f, "{rows:?}")
    }
}

/// Element of the finite Weyl group, stored as its matrix on the coroot
/// lattice together with the inverse matrix.
///
/// Equality and hashing go through the matrix. Reduced words are derived on
/// demand by [`WeylGroup::reduced_word`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElem {
    mat: Mat,
    inv: Mat,
}

impl WeylElem {
    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &Mat {
        &self.inv
    }

    pub fn is_identity(&self) -> bool {
        self.mat == Mat::identity(self.mat.n)
    }
}

impl fmt::Debug for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElem({:?})", self.mat)
    }
}

/// Vectors the Weyl group acts on, one simple reflection at a time.
pub trait Reflectable {
    fn rank(&self) -> usize;
    /// Applies `s_i` for the 0-based simple index `i`.
    fn reflect(&mut self, datum: &RootDatum, i: usize);
}

impl Reflectable for RootVec {
    fn rank(&self) -> usize {
        self.0.len()
    }
    fn reflect(&mut self, datum: &RootDatum, i: usize) {
        let c: i64 = self
            .0
            .iter()
            .zip(&datum.cartan()[i])
            .map(|(b, a)| b * a)
            .sum();
        self.0[i] -= c;
    }
}

impl Reflectable for CorootVec {
    fn rank(&self) -> usize {
        self.0.len()
    }
    fn reflect(&mut self, datum: &RootDatum, i: usize) {
        let a = datum.cartan();
        let c: i64 = self.0.iter().enumerate().map(|(k, l)| l * a[k][i]).sum();
        self.0[i] -= c;
    }
}

impl Reflectable for WeightVec {
    fn rank(&self) -> usize {
        self.0.len()
    }
    fn reflect(&mut self, datum: &RootDatum, i: usize) {
        let a = datum.cartan();
        let mi = self.0[i];
        if mi != 0 {
            for (k, x) in self.0.iter_mut().enumerate() {
                *x -= mi * a[k][i];
            }
        }
    }
}

/// The finite Weyl group of a root datum.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    datum: Arc<RootDatum>,
}

impl WeylGroup {
    pub fn new(datum: Arc<RootDatum>) -> Self {
        WeylGroup { datum }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn identity(&self) -> WeylElem {
        let id = Mat::identity(self.rank());
        WeylElem {
            mat: id.clone(),
            inv: id,
        }
    }

    pub fn generator(&self, node: usize) -> Result<WeylElem> {
        self.datum.check_node(node)?;
        let mut w = self.identity();
        self.mul_gen_right(&mut w, node);
        Ok(w)
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElem> {
        let mut w = self.identity();
        for &s in word {
            self.datum.check_node(s)?;
            self.mul_gen_right(&mut w, s);
        }
        Ok(w)
    }

    /// `w <- w * s_node`.
    pub fn mul_gen_right(&self, w: &mut WeylElem, node: usize) {
        let a = self.datum.cartan();
        w.mat.right_reflect(a, node - 1);
        w.inv.left_reflect(a, node - 1);
    }

    /// `w <- s_node * w`.
    pub fn mul_gen_left(&self, node: usize, w: &mut WeylElem) {
        let a = self.datum.cartan();
        w.mat.left_reflect(a, node - 1);
        w.inv.right_reflect(a, node - 1);
    }

    pub fn mul(&self, u: &WeylElem, w: &WeylElem) -> Result<WeylElem> {
        self.datum.check_rank(u.mat.n)?;
        self.datum.check_rank(w.mat.n)?;
        Ok(WeylElem {
            mat: u.mat.mul(&w.mat),
            inv: w.inv.mul(&u.inv),
        })
    }

    pub fn inverse(&self, w: &WeylElem) -> WeylElem {
        WeylElem {
            mat: w.inv.clone(),
            inv: w.mat.clone(),
        }
    }

    /// `s` is a right descent iff `w(alpha_s) < 0`.
    pub fn is_right_descent(&self, w: &WeylElem, node: usize) -> bool {
        w.mat.col_sign(node - 1) < 0
    }

    /// `s` is a left descent iff `w^{-1}(alpha_s) < 0`.
    pub fn is_left_descent(&self, w: &WeylElem, node: usize) -> bool {
        w.inv.col_sign(node - 1) < 0
    }

    /// Number of positive roots sent negative.
    pub fn length(&self, w: &WeylElem) -> usize {
        self.datum
            .pos_coroots()
            .iter()
            .filter(|b| sign_of(&w.mat.apply(&b.0)) < 0)
            .count()
    }

    /// Reduced word by stripping the smallest right descent until the
    /// identity is reached. The product of the word, left to right, is `w`.
    pub fn reduced_word(&self, w: &WeylElem) -> Vec<usize> {
        let mut x = w.clone();
        let mut rev = Vec::new();
        'outer: loop {
            for s in 1..=self.rank() {
                if self.is_right_descent(&x, s) {
                    self.mul_gen_right(&mut x, s);
                    rev.push(s);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }

    /// Action on coroot-lattice vectors through the stored matrix.
    pub fn apply_coroot(&self, w: &WeylElem, v: &CorootVec) -> Result<CorootVec> {
        self.datum.check_rank(v.rank())?;
        Ok(CorootVec(w.mat.apply(&v.0)))
    }

    /// Action on any reflectable vector via a reduced word.
    pub fn apply<V: Reflectable + Clone>(&self, w: &WeylElem, v: &V) -> Result<V> {
        self.datum.check_rank(v.rank())?;
        let mut out = v.clone();
        for &s in self.reduced_word(w).iter().rev() {
            out.reflect(&self.datum, s - 1);
        }
        Ok(out)
    }

    /// Reflection `s_beta` for a root `beta`.
    pub fn reflection(&self, beta: &RootVec) -> Result<WeylElem> {
        let bv = self.datum.coroot_of(beta)?;
        let r = self.rank();
        let mut m = Mat::identity(r);
        for k in 0..r {
            let c = self.datum.root_coroot_pairing(beta, k);
            for i in 0..r {
                let v = m.get(i, k) - c * bv.0[i];
                m.set(i, k, v);
            }
        }
        Ok(WeylElem {
            mat: m.clone(),
            inv: m,
        })
    }

    /// Longest element, built by appending any ascent until none remains.
    pub fn longest_element(&self) -> WeylElem {
        let mut w = self.identity();
        'outer: loop {
            for s in 1..=self.rank() {
                if !self.is_right_descent(&w, s) {
                    self.mul_gen_right(&mut w, s);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Minimal-length representatives of `W / W_I`.
    ///
    /// Level-synchronous BFS on the orbit of the weight `sum_{s not in I}
    /// omega_s`, whose stabilizer is exactly `W_I`. Each step applies `s_j` to
    /// an orbit point with positive `j`-th coordinate, which raises the length
    /// of the representative by one.
    pub fn min_coset_reps(
        &self,
        i_set: &BTreeSet<usize>,
        limit: usize,
    ) -> Result<ParabolicQuotient> {
        for &s in i_set {
            self.datum.check_node(s)?;
        }
        let r = self.rank();
        let start = WeightVec((1..=r).map(|s| (!i_set.contains(&s)) as i64).collect());
        let mut seen: HashSet<WeightVec> = HashSet::from([start.clone()]);
        let mut level = vec![(start, self.identity())];
        let mut reps = Vec::new();
        let mut lengths = Vec::new();
        let mut len = 0usize;
        while !level.is_empty() {
            let mut next = Vec::new();
            for (v, w) in &level {
                for j in 0..r {
                    if v.0[j] <= 0 {
                        continue;
                    }
                    let mut u = v.clone();
                    u.reflect(&self.datum, j);
                    if seen.insert(u.clone()) {
                        if seen.len() > limit {
                            return Err(Error::BoundExceeded {
                                what: "parabolic quotient size",
                                requested: seen.len(),
                                limit,
                                limit_name: "max-orbit",
                                flag: "--max-orbit",
                            });
                        }
                        let mut x = w.clone();
                        self.mul_gen_left(j + 1, &mut x);
                        next.push((u, x));
                    }
                }
            }
            for (_, w) in level {
                reps.push(w);
                lengths.push(len);
            }
            level = next;
            len += 1;
        }
        Ok(ParabolicQuotient::new(self, i_set.clone(), reps, lengths))
    }

    pub fn quotient_poincare(&self, i_set: &BTreeSet<usize>, limit: usize) -> Result<GradedPoly> {
        Ok(self.min_coset_reps(i_set, limit)?.poincare())
    }

    /// Bruhat order by the subword property: the set of products of subwords
    /// of a fixed reduced word of `w` is exactly the interval below `w`.
    pub fn bruhat_leq_subword(&self, u: &WeylElem, w: &WeylElem) -> bool {
        let word = self.reduced_word(w);
        let mut reach: HashSet<WeylElem> = HashSet::from([self.identity()]);
        for &s in &word {
            let extra: Vec<WeylElem> = reach
                .iter()
                .map(|x| {
                    let mut y = x.clone();
                    self.mul_gen_right(&mut y, s);
                    y
                })
                .collect();
            reach.extend(extra);
        }
        reach.contains(u)
    }

    /// Whether `w` has no right descent in `I`.
    pub fn is_min_in_coset(&self, w: &WeylElem, i_set: &BTreeSet<usize>) -> bool {
        i_set.iter().all(|&s| !self.is_right_descent(w, s))
    }
}

fn sign_of(v: &[i64]) -> i64 {
    v.iter().find(|&&c| c != 0).map_or(0, |c| c.signum())
}

/// The representatives `W^I`, sorted by `(length, reduced word)`.
#[derive(Debug, Clone)]
pub struct ParabolicQuotient {
    i_set: BTreeSet<usize>,
    reps: Vec<WeylElem>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
    index: HashMap<WeylElem, usize>,
}

impl ParabolicQuotient {
    fn new(
        group: &WeylGroup,
        i_set: BTreeSet<usize>,
        reps: Vec<WeylElem>,
        lengths: Vec<usize>,
    ) -> Self {
        let mut items: Vec<(usize, Vec<usize>, WeylElem)> = reps
            .into_iter()
            .zip(lengths)
            .map(|(w, l)| (l, group.reduced_word(&w), w))
            .collect();
        items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let mut q = ParabolicQuotient {
            i_set,
            reps: Vec::with_capacity(items.len()),
            lengths: Vec::with_capacity(items.len()),
            words: Vec::with_capacity(items.len()),
            index: HashMap::new(),
        };
        for (k, (l, word, w)) in items.into_iter().enumerate() {
            q.index.insert(w.clone(), k);
            q.reps.push(w);
            q.lengths.push(l);
            q.words.push(word);
        }
        q
    }

    pub fn i_set(&self) -> &BTreeSet<usize> {
        &self.i_set
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[WeylElem] {
        &self.reps
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn index_of(&self, w: &WeylElem) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn poincare(&self) -> GradedPoly {
        GradedPoly::from_degrees(self.lengths.iter().copied())
    }
}
