//! Per-type summary: the `lambda_0` Levi orbit, its chain and duality
//! properties, Bott nodes, minuscule nodes and smooth generating varieties.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cartan::{Family, LieType, RootDatum};
use crate::cohomology::{chain_coeffs, pd_status_from, ChainCoeffs, PDStatus};
use crate::error::Result;
use crate::weyl::WeylGroup;

/// Types without a smooth Schubert generating variety, with the largest
/// dimension of a smooth Schubert variety in the affine Grassmannian.
pub const NON_SMOOTH_TYPES: [(Family, usize, usize); 3] =
    [(Family::E, 8, 14), (Family::F, 4, 7), (Family::G, 2, 2)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeReport {
    pub type_label: String,
    pub rank: usize,
    pub i_lambda0: BTreeSet<usize>,
    pub node0_neighbors: BTreeSet<usize>,
    pub levi_descriptor: String,
    pub levi_orbit_dim: usize,
    pub levi_orbit_poincare: Vec<i64>,
    pub chain: bool,
    pub chain_coeffs: ChainCoeffs,
    pub pd_status: PDStatus,
    pub bott_nodes: BTreeSet<usize>,
    pub minuscule_nodes: BTreeSet<usize>,
    pub smooth_schubert_genv: bool,
    /// Same question answered from [`NON_SMOOTH_TYPES`].
    pub smooth_schubert_genv_by_table: bool,
    pub exponents: Vec<usize>,
    pub e_top: usize,
    pub max_smooth_schubert_dim: Option<usize>,
}

#[allow(non_snake_case)]
pub fn I_of_lambda0(datum: &RootDatum) -> BTreeSet<usize> {
    datum.i_of_lambda0()
}

/// Long simple roots whose fundamental coweight lies in the coroot lattice.
pub fn bott_nodes(datum: &RootDatum) -> BTreeSet<usize> {
    (1..=datum.rank())
        .filter(|&s| {
            datum.is_long_node(s).unwrap_or(false)
                && datum.coweight_in_coroot_lattice(s).unwrap_or(false)
        })
        .collect()
}

pub fn cited_max_smooth_dim(t: LieType) -> Option<usize> {
    NON_SMOOTH_TYPES
        .iter()
        .find(|(f, r, _)| *f == t.family() && *r == t.rank())
        .map(|&(_, _, d)| d)
}

/// Cartan type of the subdiagram on `nodes`, components joined by `x`;
/// `T` for the empty set.
pub fn subdiagram_label(datum: &RootDatum, nodes: &BTreeSet<usize>) -> String {
    let a = datum.cartan();
    let mut left: BTreeSet<usize> = nodes.clone();
    let mut parts = Vec::new();
    while let Some(&start) = left.iter().next() {
        let mut comp = vec![start];
        left.remove(&start);
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            let nbrs: Vec<usize> = left
                .iter()
                .copied()
                .filter(|&v| a[u - 1][v - 1] != 0)
                .collect();
            for v in nbrs {
                left.remove(&v);
                comp.push(v);
            }
            k += 1;
        }
        parts.push(component_type(datum, &comp));
    }
    if parts.is_empty() {
        return "T".into();
    }
    parts.sort();
    parts
        .iter()
        .map(LieType::label)
        .collect::<Vec<_>>()
        .join("x")
}

fn component_type(datum: &RootDatum, comp: &[usize]) -> LieType {
    let a = datum.cartan();
    let n = comp.len();
    let bond = |u: usize, v: usize| a[u - 1][v - 1] * a[v - 1][u - 1];
    let degree = |u: usize| comp.iter().filter(|&&v| v != u && bond(u, v) != 0).count();
    let make = |f: Family, r: usize| LieType::new(f, r).expect("valid subdiagram");
    let mut multi = None;
    for (i, &u) in comp.iter().enumerate() {
        for &v in &comp[i + 1..] {
            if bond(u, v) > 1 {
                multi = Some((u, v, bond(u, v)));
            }
        }
    }
    match multi {
        Some((_, _, 3)) => make(Family::G, 2),
        Some((u, v, _)) => {
            if n == 2 {
                make(Family::C, 2)
            } else if n == 4 && degree(u) == 2 && degree(v) == 2 {
                make(Family::F, 4)
            } else {
                let end = if degree(u) == 1 { u } else { v };
                let other = if end == u { v } else { u };
                // A short end node sees -2 towards its long neighbor.
                if a[end - 1][other - 1] == -2 {
                    make(Family::B, n)
                } else {
                    make(Family::C, n)
                }
            }
        }
        None => {
            let Some(&branch) = comp.iter().find(|&&u| degree(u) == 3) else {
                return make(Family::A, n);
            };
            let mut arms: Vec<usize> = comp
                .iter()
                .filter(|&&v| bond(branch, v) != 0 && v != branch)
                .map(|&v| arm_length(comp, &bond, branch, v))
                .collect();
            arms.sort();
            if arms[0] == 1 && arms[1] == 1 {
                make(Family::D, n)
            } else {
                make(Family::E, n)
            }
        }
    }
}

fn arm_length(
    comp: &[usize],
    bond: &dyn Fn(usize, usize) -> i64,
    from: usize,
    first: usize,
) -> usize {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        let next = comp
            .iter()
            .copied()
            .find(|&v| v != prev && v != cur && bond(cur, v) != 0);
        match next {
            Some(v) => {
                prev = cur;
                cur = v;
                len += 1;
            }
            None => return len,
        }
    }
}

pub fn type_report(t: LieType) -> Result<TypeReport> {
    let datum = Arc::new(RootDatum::new(t));
    let i = datum.i_of_lambda0();
    let weyl = WeylGroup::new(datum.clone());
    let poincare = weyl.quotient_poincare(&i, 2_000_000)?;
    let levi_orbit_dim = poincare.degree().unwrap_or(0);
    let coeffs = chain_coeffs(t)?;
    let chain = matches!(coeffs, ChainCoeffs::Chain(_));
    let minuscule = datum.minuscule_nodes();
    let cited = cited_max_smooth_dim(t);
    let levi_descriptor = format!(
        "{t}/P({}), dim {levi_orbit_dim}{}",
        subdiagram_label(&datum, &i),
        if chain { ", chain" } else { "" }
    );
    Ok(TypeReport {
        type_label: t.label(),
        rank: t.rank(),
        i_lambda0: i,
        node0_neighbors: datum.node0_neighbors(),
        levi_descriptor,
        levi_orbit_dim,
        levi_orbit_poincare: poincare.coeffs().to_vec(),
        chain,
        pd_status: pd_status_from(&coeffs),
        chain_coeffs: coeffs,
        bott_nodes: bott_nodes(&datum),
        smooth_schubert_genv: !minuscule.is_empty(),
        smooth_schubert_genv_by_table: cited.is_none(),
        minuscule_nodes: minuscule,
        exponents: datum.exponents().to_vec(),
        e_top: *datum.exponents().last().unwrap(),
        max_smooth_schubert_dim: cited,
    })
}

pub fn classify_all(max_rank: usize) -> Result<Vec<TypeReport>> {
    LieType::all_up_to(max_rank)
        .into_iter()
        .map(type_report)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::parse_type;

    fn report(s: &str) -> TypeReport {
        type_report(parse_type(s).unwrap()).unwrap()
    }

    #[test]
    fn i_of_lambda0_examples() {
        assert_eq!(report("A4").i_lambda0, BTreeSet::from([2, 3]));
        assert_eq!(report("G2").i_lambda0, BTreeSet::from([1]));
        assert_eq!(report("C3").i_lambda0, BTreeSet::from([2, 3]));
        for t in LieType::all_up_to(8) {
            let d = RootDatum::new(t);
            let adj: BTreeSet<usize> = (1..=t.rank())
                .filter(|s| !d.node0_neighbors().contains(s))
                .collect();
            assert_eq!(I_of_lambda0(&d), adj, "{t}");
        }
    }

    #[test]
    fn levi_labels() {
        assert_eq!(report("G2").levi_descriptor, "G2/P(A1), dim 5, chain");
        assert_eq!(report("C3").levi_descriptor, "C3/P(C2), dim 5, chain");
        assert_eq!(report("E8").levi_descriptor, "E8/P(E7), dim 57");
        assert_eq!(report("B4").levi_descriptor, "B4/P(A1xC2), dim 11");
        assert_eq!(report("D5").levi_descriptor, "D5/P(A1xA3), dim 13");
        assert_eq!(report("F4").levi_descriptor, "F4/P(C3), dim 15");
        assert_eq!(report("E6").levi_descriptor, "E6/P(A5), dim 21");
        assert_eq!(report("A1").levi_descriptor, "A1/P(T), dim 1, chain");
    }

    #[test]
    fn exceptional_rows() {
        for (t, e, d) in [("E8", 29, 14), ("F4", 11, 7), ("G2", 5, 2)] {
            let r = report(t);
            assert!(!r.smooth_schubert_genv && !r.smooth_schubert_genv_by_table);
            assert_eq!(r.e_top, e);
            assert_eq!(r.max_smooth_schubert_dim, Some(d));
            assert!(r.e_top > d);
        }
    }

    #[test]
    fn bott_examples() {
        assert!(report("A3").bott_nodes.is_empty());
        assert!(report("C3").bott_nodes.is_empty());
        for t in ["G2", "F4", "E8", "B3", "D4"] {
            let r = report(t);
            let t_node = *r.node0_neighbors.iter().next().unwrap();
            assert!(r.bott_nodes.contains(&t_node), "{t}");
        }
    }

    #[test]
    fn report_round_trips_json() {
        let r = report("C2");
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<TypeReport>(&s).unwrap(), r);
    }
}
