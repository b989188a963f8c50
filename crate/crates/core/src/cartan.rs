//! Root data for the simple Lie types.
//!
//! Conventions used throughout the crate:
//!
//! * Nodes are numbered as in the Bourbaki plates. Finite nodes are labelled
//!   `1..=rank`; the affine node is `0`. Row/column `k` of [`RootDatum::cartan`]
//!   belongs to node `k + 1`, while the affine Cartan matrix is indexed by node
//!   label directly.
//! * `cartan[i][j] = <alpha_j, alpha_i^vee>`.
//! * Roots are stored in the simple-root basis, coroots in the simple-coroot
//!   basis and weights in the fundamental-weight basis.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Family letter of a simple Lie type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A validated simple type label such as `E8`.
///
/// Construction goes through [`LieType::new`] or [`parse_type`], which apply
/// the rank bounds and normalize the low-rank coincidences `C1 = A1`,
/// `B2 = C2` and `D3 = A3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bound = |b: &'static str| Error::RankOutOfBounds {
            family: family.letter(),
            rank,
            bound: b,
        };
        let (family, rank) = match (family, rank) {
            (Family::A, r) if r >= 1 => (Family::A, r),
            (Family::A, _) => return Err(bound("A requires rank >= 1")),
            (Family::B, 2) => (Family::C, 2),
            (Family::B, r) if r >= 2 => (Family::B, r),
            (Family::B, _) => return Err(bound("B requires rank >= 2")),
            (Family::C, 1) => (Family::A, 1),
            (Family::C, r) if r >= 1 => (Family::C, r),
            (Family::C, _) => return Err(bound("C requires rank >= 1")),
            (Family::D, 3) => (Family::A, 3),
            (Family::D, r) if r >= 4 => (Family::D, r),
            (Family::D, _) => return Err(bound("D requires rank >= 4 (D3 is accepted as A3)")),
            (Family::E, r @ 6..=8) => (Family::E, r),
            (Family::E, _) => return Err(bound("E requires rank 6, 7 or 8")),
            (Family::F, 4) => (Family::F, 4),
            (Family::F, _) => return Err(bound("F requires rank 4")),
            (Family::G, 2) => (Family::G, 2),
            (Family::G, _) => return Err(bound("G requires rank 2")),
        };
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Every canonical type with `rank <= max_rank`, plus the exceptional
    /// types regardless of rank.
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        let mut out = BTreeSet::new();
        for r in 1..=max_rank {
            for fam in [Family::A, Family::B, Family::C, Family::D] {
                if let Ok(t) = LieType::new(fam, r) {
                    out.insert(t);
                }
            }
        }
        for (fam, r) in [
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            out.insert(LieType {
                family: fam,
                rank: r,
            });
        }
        out.into_iter().collect()
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_type(s)
    }
}

/// Parses a label of the form `<letter><digits>`.
pub fn parse_type(label: &str) -> Result<LieType> {
    let label = label.trim();
    let mut chars = label.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::parse(label, "empty type label"))?;
    let family = Family::from_letter(letter)
        .ok_or_else(|| Error::parse(label, format!("unknown family letter `{letter}`")))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::parse(label, "expected <letter><digits>, e.g. `G2`"));
    }
    let rank: usize = digits
        .parse()
        .map_err(|_| Error::parse(label, "rank does not fit in an integer"))?;
    LieType::new(family, rank)
}

macro_rules! lattice_vec {
    ($(#[$m:meta])* $name:ident) => {
        $(#[$m])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn unit(rank: usize, idx: usize) -> Self {
                let mut v = vec![0; rank];
                v[idx] = 1;
                $name(v)
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn scaled(&self, k: i64) -> Self {
                $name(self.0.iter().map(|c| c * k).collect())
            }

            pub fn neg(&self) -> Self {
                self.scaled(-1)
            }

            pub fn add(&self, other: &Self) -> Self {
                $name(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }

            /// Sign of the first nonzero coordinate. For roots this decides
            /// positivity.
            pub fn leading_sign(&self) -> i64 {
                self.0.iter().find(|&&c| c != 0).map_or(0, |c| c.signum())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

lattice_vec!(
    /// Integer vector in the simple-root basis.
    RootVec
);
lattice_vec!(
    /// Integer vector in the simple-coroot basis; elements of the coroot lattice.
    CorootVec
);
lattice_vec!(
    /// Integer vector in the fundamental-weight basis.
    WeightVec
);

/// An edge of the affine Dynkin diagram between nodes `a < b`.
///
/// `a_ab = <alpha_b, alpha_a^vee>` and `a_ba` are the two off-diagonal Cartan
/// entries; their product is the bond multiplicity and the larger absolute
/// value points towards the shorter root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramEdge {
    pub a: usize,
    pub b: usize,
    pub a_ab: i64,
    pub a_ba: i64,
}

/// A permutation of the affine nodes preserving the affine Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinAut {
    /// `perm[k]` is the image of node `k`.
    pub perm: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    ty: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    pos_roots: Vec<RootVec>,
    pos_coroots: Vec<CorootVec>,
    highest_root: RootVec,
    exponents: Vec<usize>,
    affine_cartan: Vec<Vec<i64>>,
}

fn bourbaki_cartan(t: LieType) -> Vec<Vec<i64>> {
    let r = t.rank;
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // `simple` joins nodes (1-based); `short_long(short, long, ratio)` adds a
    // multiple bond with the long root on the `long` side.
    let simple = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    let short_long = |a: &mut Vec<Vec<i64>>, short: usize, long: usize, ratio: i64| {
        a[short - 1][long - 1] = -ratio;
        a[long - 1][short - 1] = -1;
    };
    match t.family {
        Family::A => {
            for i in 1..r {
                simple(&mut a, i, i + 1);
            }
        }
        Family::B => {
            for i in 1..r - 1 {
                simple(&mut a, i, i + 1);
            }
            short_long(&mut a, r, r - 1, 2);
        }
        Family::C => {
            for i in 1..r - 1 {
                simple(&mut a, i, i + 1);
            }
            short_long(&mut a, r - 1, r, 2);
        }
        Family::D => {
            for i in 1..r - 1 {
                simple(&mut a, i, i + 1);
            }
            simple(&mut a, r - 2, r);
        }
        Family::E => {
            simple(&mut a, 1, 3);
            simple(&mut a, 2, 4);
            for i in 3..r {
                simple(&mut a, i, i + 1);
            }
        }
        Family::F => {
            simple(&mut a, 1, 2);
            short_long(&mut a, 3, 2, 2);
            simple(&mut a, 3, 4);
        }
        Family::G => {
            short_long(&mut a, 1, 2, 3);
        }
    }
    a
}

/// Integers `d_i` with `d_i * a[i][j]` symmetric, normalized so the shortest
/// root has `d = 1`. Assumes a connected diagram.
fn symmetrize(a: &[Vec<i64>]) -> Vec<i64> {
    let r = a.len();
    // d_j / d_i = a[i][j] / a[j][i] along edges; propagate rationals.
    let mut d: Vec<Option<Rational64>> = vec![None; r];
    d[0] = Some(Rational64::from_integer(1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..r {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                let di = d[i].unwrap();
                d[j] = Some(di * Rational64::new(a[i][j], a[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational64> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let min = *d.iter().min().unwrap();
    let scaled: Vec<Rational64> = d.iter().map(|x| x / min).collect();
    scaled
        .iter()
        .map(|x| {
            assert!(x.is_integer(), "symmetrizer must be integral");
            x.to_integer()
        })
        .collect()
}

/// Positive roots by closure under adding simple roots, using root strings.
fn positive_roots(a: &[Vec<i64>]) -> Vec<RootVec> {
    let r = a.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut out: Vec<RootVec> = Vec::new();
    let mut level: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    while !level.is_empty() {
        level.sort_by(|x, y| y.cmp(x));
        for v in &level {
            all.insert(v.clone());
        }
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &level {
            for i in 0..r {
                let is_simple_i = beta.iter().enumerate().all(|(k, &c)| c == (k == i) as i64);
                if is_simple_i {
                    continue;
                }
                // p = largest k with beta - k alpha_i still a root.
                let mut p = 0i64;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if down[i] < 0 || !all.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pair: i64 = (0..r).map(|j| beta[j] * a[i][j]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        out.extend(level.drain(..).map(RootVec));
        level = next.into_iter().collect();
    }
    out
}

impl RootDatum {
    pub fn new(t: LieType) -> Self {
        let cartan = bourbaki_cartan(t);
        let symmetrizers = symmetrize(&cartan);
        let pos_roots = positive_roots(&cartan);
        let r = t.rank;

        let height = |v: &RootVec| v.0.iter().sum::<i64>();
        let highest_root = pos_roots
            .iter()
            .max_by_key(|v| height(v))
            .cloned()
            .expect("nonempty root system");

        let max_h = height(&highest_root) as usize;
        let mut per_height = vec![0usize; max_h + 1];
        for v in &pos_roots {
            per_height[height(v) as usize] += 1;
        }
        // Exponents: conjugate of the partition (m_1 >= m_2 >= ...).
        let mut exponents: Vec<usize> = (1..=per_height[1])
            .map(|j| (1..=max_h).filter(|&k| per_height[k] >= j).count())
            .collect();
        exponents.sort_unstable();

        let mut datum = RootDatum {
            ty: t,
            cartan,
            symmetrizers,
            pos_coroots: Vec::new(),
            pos_roots,
            highest_root,
            exponents,
            affine_cartan: Vec::new(),
        };
        datum.pos_coroots = datum
            .pos_roots
            .iter()
            .map(|b| datum.coroot_of(b).expect("positive root"))
            .collect();

        let theta = datum.highest_root.clone();
        let theta_v = datum.coroot_of(&theta).unwrap();
        let mut aff = vec![vec![0i64; r + 1]; r + 1];
        aff[0][0] = 2;
        for i in 0..r {
            for j in 0..r {
                aff[i + 1][j + 1] = datum.cartan[i][j];
            }
            aff[0][i + 1] = -datum.pairing_unchecked(&theta_v.0, &RootVec::unit(r, i).0);
            aff[i + 1][0] = -datum.root_coroot_pairing(&theta, i);
        }
        datum.affine_cartan = aff;
        datum
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// Cartan matrix, `cartan()[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn pos_roots(&self) -> &[RootVec] {
        &self.pos_roots
    }

    /// Coroots of the positive roots, in the same order as [`Self::pos_roots`].
    pub fn pos_coroots(&self) -> &[CorootVec] {
        &self.pos_coroots
    }

    pub fn highest_root(&self) -> &RootVec {
        &self.highest_root
    }

    pub fn highest_coroot(&self) -> CorootVec {
        self.coroot_of(&self.highest_root).unwrap()
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> usize {
        self.highest_root.0.iter().sum::<i64>() as usize + 1
    }

    /// Order of the finite Weyl group, `prod (e_i + 1)`.
    pub fn weyl_order(&self) -> u128 {
        self.exponents.iter().map(|&e| e as u128 + 1).product()
    }

    pub fn affine_cartan(&self) -> &[Vec<i64>] {
        &self.affine_cartan
    }

    pub fn affine_edges(&self) -> Vec<DiagramEdge> {
        let n = self.rank() + 1;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.affine_cartan[a][b] != 0 {
                    out.push(DiagramEdge {
                        a,
                        b,
                        a_ab: self.affine_cartan[a][b],
                        a_ba: self.affine_cartan[b][a],
                    });
                }
            }
        }
        out
    }

    pub(crate) fn pairing_unchecked(&self, lambda: &[i64], alpha: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &l) in lambda.iter().enumerate() {
            if l == 0 {
                continue;
            }
            let row = &self.cartan[i];
            for (j, &c) in alpha.iter().enumerate() {
                s += l * c * row[j];
            }
        }
        s
    }

    /// `<lambda, alpha>` for a coroot-lattice vector and a root-lattice vector.
    pub fn pairing(&self, lambda: &CorootVec, alpha: &RootVec) -> Result<i64> {
        self.check_rank(lambda.rank())?;
        self.check_rank(alpha.rank())?;
        Ok(self.pairing_unchecked(&lambda.0, &alpha.0))
    }

    /// `<beta, alpha_i^vee>` for a root-lattice vector and a 0-based simple index.
    pub(crate) fn root_coroot_pairing(&self, beta: &RootVec, i: usize) -> i64 {
        beta.0.iter().zip(&self.cartan[i]).map(|(b, a)| b * a).sum()
    }

    /// `<mu, lambda>` for a weight and a coroot-lattice vector.
    pub fn weight_pairing(&self, mu: &WeightVec, lambda: &CorootVec) -> Result<i64> {
        self.check_rank(mu.rank())?;
        self.check_rank(lambda.rank())?;
        Ok(mu.0.iter().zip(&lambda.0).map(|(m, l)| m * l).sum())
    }

    /// Weight-basis coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, beta: &RootVec) -> WeightVec {
        WeightVec(
            (0..self.rank())
                .map(|i| self.root_coroot_pairing(beta, i))
                .collect(),
        )
    }

    pub(crate) fn check_rank(&self, got: usize) -> Result<()> {
        if got != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got,
            });
        }
        Ok(())
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node == 0 || node > self.rank() {
            return Err(Error::BadNode {
                node,
                kind: "finite",
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Index of a positive root, or of its negative.
    pub fn root_index(&self, alpha: &RootVec) -> Option<(usize, bool)> {
        if alpha.rank() != self.rank() {
            return None;
        }
        let positive = alpha.leading_sign() > 0;
        let target = if positive { alpha.clone() } else { alpha.neg() };
        self.pos_roots
            .iter()
            .position(|b| *b == target)
            .map(|i| (i, positive))
    }

    /// `(alpha, alpha) / 2` in units where the shortest root has 1.
    fn half_norm(&self, alpha: &RootVec) -> i64 {
        let mut s = 0;
        for (i, &ci) in alpha.0.iter().enumerate() {
            for (j, &cj) in alpha.0.iter().enumerate() {
                s += ci * cj * self.symmetrizers[i] * self.cartan[i][j];
            }
        }
        s / 2
    }

    pub fn is_long_root(&self, alpha: &RootVec) -> bool {
        self.half_norm(alpha) == *self.symmetrizers.iter().max().unwrap()
    }

    pub fn is_long_node(&self, node: usize) -> Result<bool> {
        self.check_node(node)?;
        Ok(self.symmetrizers[node - 1] == *self.symmetrizers.iter().max().unwrap())
    }

    /// `alpha^vee = sum c_i (d_i / d_alpha) alpha_i^vee`.
    pub fn coroot_of(&self, alpha: &RootVec) -> Result<CorootVec> {
        self.check_rank(alpha.rank())?;
        if self.root_index(alpha).is_none() {
            return Err(Error::NotARoot(alpha.0.clone()));
        }
        let d_alpha = self.half_norm(alpha);
        let coords = alpha
            .0
            .iter()
            .zip(&self.symmetrizers)
            .map(|(&c, &d)| {
                debug_assert_eq!((c * d) % d_alpha, 0);
                c * d / d_alpha
            })
            .collect();
        Ok(CorootVec(coords))
    }

    /// Finite nodes joined to node 0 in the affine diagram.
    pub fn node0_neighbors(&self) -> BTreeSet<usize> {
        (1..=self.rank())
            .filter(|&s| self.affine_cartan[0][s] != 0)
            .collect()
    }

    /// `I(lambda_0)`: finite nodes `s` with `<theta^vee, alpha_s> = 0`, the
    /// stabilizer of the coset `t_{-theta^vee} W`.
    pub fn i_of_lambda0(&self) -> BTreeSet<usize> {
        let tv = self.highest_coroot();
        (1..=self.rank())
            .filter(|&s| self.pairing_unchecked(&tv.0, &RootVec::unit(self.rank(), s - 1).0) == 0)
            .collect()
    }

    /// All automorphisms of the affine Dynkin diagram, by backtracking over
    /// node assignments that preserve the affine Cartan matrix.
    pub fn diagram_automorphisms(&self) -> Vec<DynkinAut> {
        let n = self.rank() + 1;
        let a = &self.affine_cartan;
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut out = Vec::new();

        fn rec(
            k: usize,
            n: usize,
            a: &[Vec<i64>],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<DynkinAut>,
        ) {
            if k == n {
                out.push(DynkinAut { perm: perm.clone() });
                return;
            }
            for img in 0..n {
                if used[img] {
                    continue;
                }
                let ok = (0..k).all(|j| a[k][j] == a[img][perm[j]] && a[j][k] == a[perm[j]][img]);
                if ok {
                    perm[k] = img;
                    used[img] = true;
                    rec(k + 1, n, a, perm, used, out);
                    used[img] = false;
                }
            }
            perm[k] = usize::MAX;
        }

        rec(0, n, a, &mut perm, &mut used, &mut out);
        out.sort();
        out
    }

    /// Finite nodes in the orbit of node 0 under diagram automorphisms.
    pub fn minuscule_nodes(&self) -> BTreeSet<usize> {
        self.diagram_automorphisms()
            .iter()
            .map(|g| g.perm[0])
            .filter(|&v| v != 0)
            .collect()
    }

    /// Fundamental coweight `omega_s^vee` in the simple-coroot basis: the
    /// solution of `<x, alpha_j> = delta_{sj}`.
    pub fn fundamental_coweight(&self, node: usize) -> Result<Vec<Rational64>> {
        self.check_node(node)?;
        let r = self.rank();
        // Augmented system A^T x = e_s.
        let mut m: Vec<Vec<Rational64>> = (0..r)
            .map(|j| {
                let mut row: Vec<Rational64> = (0..r)
                    .map(|i| Rational64::from_integer(self.cartan[i][j]))
                    .collect();
                row.push(Rational64::from_integer((j == node - 1) as i64));
                row
            })
            .collect();
        for col in 0..r {
            let piv = (col..r)
                .find(|&i| m[i][col] != Rational64::from_integer(0))
                .expect("Cartan matrix is invertible");
            m.swap(col, piv);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for i in 0..r {
                if i != col && m[i][col] != Rational64::from_integer(0) {
                    let f = m[i][col];
                    let pivot_row = m[col].clone();
                    for (x, y) in m[i].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|row| row[r]).collect())
    }

    pub fn coweight_in_coroot_lattice(&self, node: usize) -> Result<bool> {
        Ok(self
            .fundamental_coweight(node)?
            .iter()
            .all(|x| x.is_integer()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RootDatum {
        RootDatum::new(parse_type(s).unwrap())
    }

    #[test]
    fn parse_and_aliases() {
        assert_eq!(parse_type("G2").unwrap().to_string(), "G2");
        assert_eq!(parse_type("C1").unwrap().to_string(), "A1");
        assert_eq!(parse_type("D3").unwrap().to_string(), "A3");
        assert_eq!(parse_type("B2").unwrap().to_string(), "C2");
        assert_eq!(parse_type("e8").unwrap().to_string(), "E8");
    }

    #[test]
    fn parse_errors_name_the_bound() {
        let err = parse_type("E9").unwrap_err();
        assert!(
            err.to_string().contains("E requires rank 6, 7 or 8"),
            "{err}"
        );
        assert!(parse_type("D2")
            .unwrap_err()
            .to_string()
            .contains("D requires"));
        assert!(parse_type("B1").is_err());
        assert!(parse_type("A0").is_err());
        assert!(matches!(parse_type("X3"), Err(Error::Parse { .. })));
        assert!(matches!(parse_type("A"), Err(Error::Parse { .. })));
        assert!(matches!(parse_type("A2x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_type(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn root_counts() {
        for (t, n) in [
            ("A1", 1),
            ("A2", 3),
            ("A4", 10),
            ("B3", 9),
            ("C4", 16),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ] {
            assert_eq!(datum(t).pos_roots().len(), n, "{t}");
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(datum("A2").highest_root().0, vec![1, 1]);
        assert_eq!(datum("G2").highest_root().0, vec![3, 2]);
        assert_eq!(datum("C2").highest_root().0, vec![2, 1]);
        assert_eq!(datum("E8").highest_root().0, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        for t in LieType::all_up_to(5) {
            let d = RootDatum::new(t);
            let th = d.highest_root();
            for b in d.pos_roots() {
                assert!(b.0.iter().zip(&th.0).all(|(x, y)| x <= y), "{t}");
            }
        }
    }

    #[test]
    fn symmetrizers_symmetrize() {
        for t in LieType::all_up_to(6) {
            let d = RootDatum::new(t);
            let a = d.cartan();
            let s = d.symmetrizers();
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    assert_eq!(s[i] * a[i][j], s[j] * a[j][i], "{t}");
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a1 = datum("A1");
        assert_eq!(
            a1.pairing(&CorootVec(vec![1]), &RootVec(vec![1])).unwrap(),
            2
        );
        let a2 = datum("A2");
        assert_eq!(
            a2.pairing(&CorootVec(vec![1, 0]), &RootVec(vec![0, 1]))
                .unwrap(),
            -1
        );
        assert_eq!(
            a2.pairing(&CorootVec::zero(2), &RootVec(vec![1, 1]))
                .unwrap(),
            0
        );
        assert!(matches!(
            a2.pairing(&CorootVec(vec![1]), &RootVec(vec![1, 0])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn coroots_of_highest_roots() {
        let c2 = datum("C2");
        assert_eq!(c2.highest_coroot().0, vec![1, 1]);
        for t in LieType::all_up_to(8) {
            let d = RootDatum::new(t);
            let tv = d.highest_coroot();
            assert_eq!(d.pairing(&tv, d.highest_root()).unwrap(), 2, "{t}");
            for (b, bv) in d.pos_roots().iter().zip(d.pos_coroots()) {
                assert_eq!(d.pairing(bv, b).unwrap(), 2);
            }
        }
        assert!(matches!(
            c2.coroot_of(&RootVec(vec![2, 2])),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn exponent_tables() {
        let table: &[(&str, &[usize])] = &[
            ("A2", &[1, 2]),
            ("G2", &[1, 5]),
            ("F4", &[1, 5, 7, 11]),
            ("E6", &[1, 4, 5, 7, 8, 11]),
            ("E7", &[1, 5, 7, 9, 11, 13, 17]),
            ("E8", &[1, 7, 11, 13, 17, 19, 23, 29]),
            ("D5", &[1, 3, 4, 5, 7]),
            ("B4", &[1, 3, 5, 7]),
        ];
        for (t, e) in table {
            assert_eq!(datum(t).exponents(), *e, "{t}");
        }
    }

    #[test]
    fn exponent_sums_and_coxeter_numbers() {
        for t in LieType::all_up_to(8) {
            let d = RootDatum::new(t);
            assert_eq!(d.exponents().iter().sum::<usize>(), d.pos_roots().len());
            assert_eq!(*d.exponents().last().unwrap() + 1, d.coxeter_number());
        }
    }

    #[test]
    fn node0_attaches_by_pairing() {
        for t in LieType::all_up_to(8) {
            let d = RootDatum::new(t);
            let tv = d.highest_coroot();
            let by_pairing: BTreeSet<usize> = (1..=d.rank())
                .filter(|&s| d.pairing(&tv, &RootVec::unit(d.rank(), s - 1)).unwrap() != 0)
                .collect();
            assert_eq!(d.node0_neighbors(), by_pairing, "{t}");
            if !(t.family() == Family::A && t.rank() >= 2) {
                assert_eq!(by_pairing.len(), 1, "{t}");
            }
            if !matches!(t.family(), Family::A | Family::C) {
                let s = *by_pairing.iter().next().unwrap();
                assert!(d.is_long_node(s).unwrap());
                let w = d.fundamental_coweight(s).unwrap();
                let as_int: Vec<i64> = w.iter().map(|x| x.to_integer()).collect();
                assert!(w.iter().all(|x| x.is_integer()));
                assert_eq!(as_int, tv.0, "{t}");
            }
        }
    }

    #[test]
    fn minuscule_nodes_by_automorphism_search() {
        assert!(datum("E8").minuscule_nodes().is_empty());
        assert!(datum("F4").minuscule_nodes().is_empty());
        assert!(datum("G2").minuscule_nodes().is_empty());
        assert_eq!(datum("C3").minuscule_nodes(), BTreeSet::from([3]));
        assert_eq!(datum("A3").minuscule_nodes(), BTreeSet::from([1, 2, 3]));
        assert_eq!(datum("A1").minuscule_nodes(), BTreeSet::from([1]));
        assert_eq!(datum("D4").minuscule_nodes(), BTreeSet::from([1, 3, 4]));
        assert_eq!(datum("E6").minuscule_nodes(), BTreeSet::from([1, 6]));
        assert_eq!(datum("E7").minuscule_nodes(), BTreeSet::from([7]));
        assert_eq!(datum("B3").minuscule_nodes(), BTreeSet::from([1]));
        // A3 affine diagram is a 4-cycle: dihedral group of order 8.
        assert_eq!(datum("A3").diagram_automorphisms().len(), 8);
    }

    #[test]
    fn automorphisms_preserve_edges() {
        for t in LieType::all_up_to(5) {
            let d = RootDatum::new(t);
            let a = d.affine_cartan();
            for g in d.diagram_automorphisms() {
                for i in 0..=d.rank() {
                    for j in 0..=d.rank() {
                        assert_eq!(a[i][j], a[g.perm[i]][g.perm[j]]);
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_coweights() {
        let a1 = datum("A1");
        assert_eq!(
            a1.fundamental_coweight(1).unwrap(),
            vec![Rational64::new(1, 2)]
        );
        assert!(!a1.coweight_in_coroot_lattice(1).unwrap());
        let e8 = datum("E8");
        for s in 1..=8 {
            assert!(e8.coweight_in_coroot_lattice(s).unwrap());
        }
        let g2 = datum("G2");
        let w2: Vec<i64> = g2
            .fundamental_coweight(2)
            .unwrap()
            .iter()
            .map(|x| x.to_integer())
            .collect();
        assert_eq!(w2, g2.highest_coroot().0);
        assert!(g2.fundamental_coweight(0).is_err());
        assert!(g2.fundamental_coweight(3).is_err());
    }
}
