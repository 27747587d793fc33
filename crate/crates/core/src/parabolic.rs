//! Parabolic subalgebras via subsets of the simple roots.
//!
//! Each subset `I` of the simple roots (1-based Bourbaki indices) picks out
//! the parabolic containing the fixed Borel whose Levi part is generated by
//! the roots supported inside `I`. `I = ∅` is the Borel, `I = P` the whole
//! algebra. Parabolics are represented by their unique `I` only; conjugation
//! is never modelled.
//!
//! `picard_rank` reports `|P| − |I|`, the Picard number of the flag variety
//! of the simply connected group. For other forms this is still an upper
//! bound on the Picard number.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// A parabolic subalgebra, identified by a subset of simple-root indices.
#[derive(Debug, Clone)]
pub struct ParabolicSpec<'a> {
    rs: &'a RootSystem,
    subset: BTreeSet<usize>,
}

/// Dimension data of the flag variety `G/P_I` and its parabolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlagInvariants {
    pub dim_x: u64,
    pub picard_rank: u32,
    pub dim_parabolic: u64,
    pub dim_levi: u64,
    pub dim_unipotent_radical: u64,
}

impl<'a> ParabolicSpec<'a> {
    /// `subset` uses 1-based Bourbaki indices into the simple roots of `rs`.
    pub fn new(rs: &'a RootSystem, subset: impl IntoIterator<Item = usize>) -> Result<Self> {
        let rank = rs.rank();
        let subset: BTreeSet<usize> = subset.into_iter().collect();
        for &i in &subset {
            if i < 1 || i > rank as usize {
                return Err(Error::ParabolicIndex { index: i, rank });
            }
        }
        Ok(ParabolicSpec { rs, subset })
    }

    /// The Borel, `I = ∅`.
    pub fn borel(rs: &'a RootSystem) -> Self {
        ParabolicSpec {
            rs,
            subset: BTreeSet::new(),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn subset(&self) -> &BTreeSet<usize> {
        &self.subset
    }

    pub fn is_full(&self) -> bool {
        self.subset.len() == self.rs.rank() as usize
    }

    fn supported_in_subset(&self, r: &Root) -> bool {
        let c = self.rs.decompose(r).expect("root of own system");
        c.iter()
            .enumerate()
            .all(|(j, &x)| x == 0 || self.subset.contains(&(j + 1)))
    }

    /// `(I₊, I₋)`: the positive/negative roots supported inside `I`.
    pub fn closure_sets(&self) -> (Vec<Root>, Vec<Root>) {
        let pos = self
            .rs
            .positive()
            .iter()
            .filter(|r| self.supported_in_subset(r))
            .cloned()
            .collect();
        let neg = self
            .rs
            .negative()
            .iter()
            .filter(|r| self.supported_in_subset(r))
            .cloned()
            .collect();
        (pos, neg)
    }

    fn closure_size(&self) -> u64 {
        self.rs
            .positive()
            .iter()
            .filter(|r| self.supported_in_subset(r))
            .count() as u64
    }

    /// `dim 𝔭_I = rank + |Φ₊| + |I₋|`.
    pub fn parabolic_dimension(&self) -> u64 {
        self.rs.rank() as u64 + self.rs.positive().len() as u64 + self.closure_size()
    }

    /// Levi dimension `rank + |I₊| + |I₋|`.
    pub fn levi_dimension(&self) -> u64 {
        self.rs.rank() as u64 + 2 * self.closure_size()
    }

    pub fn picard_rank(&self) -> u32 {
        self.rs.rank() - self.subset.len() as u32
    }

    pub fn flag_invariants(&self) -> FlagInvariants {
        let dim_g = self.rs.dimension();
        let dim_parabolic = self.parabolic_dimension();
        let dim_levi = self.levi_dimension();
        FlagInvariants {
            dim_x: dim_g - dim_parabolic,
            picard_rank: self.picard_rank(),
            dim_parabolic,
            dim_levi,
            dim_unipotent_radical: dim_parabolic - dim_levi,
        }
    }
}

pub fn closure_sets(spec: &ParabolicSpec<'_>) -> (Vec<Root>, Vec<Root>) {
    spec.closure_sets()
}

pub fn parabolic_dimension(spec: &ParabolicSpec<'_>) -> u64 {
    spec.parabolic_dimension()
}

pub fn levi_dimension(spec: &ParabolicSpec<'_>) -> u64 {
    spec.levi_dimension()
}

pub fn flag_invariants(spec: &ParabolicSpec<'_>) -> FlagInvariants {
    spec.flag_invariants()
}

/// Iterates all `2^rank` subsets as sorted index lists, in mask order
/// (deterministic; mask bit `j` selects simple root `j+1`).
pub fn all_subsets(rank: u32) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1 << rank)).map(move |mask| {
        (0..rank as usize)
            .filter(|j| mask & (1 << j) != 0)
            .map(|j| j + 1)
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    fn rs(spec: &str) -> RootSystem {
        build_root_system(spec.parse().unwrap())
    }

    #[test]
    fn closure_sets_a3() {
        let rs = rs("A3");
        let p = ParabolicSpec::new(&rs, [1, 3]).unwrap();
        let (pos, neg) = p.closure_sets();
        // brute-force filter of the 6 negative roots by support gives 2
        assert_eq!(pos.len(), 2);
        assert_eq!(neg.len(), 2);
    }

    #[test]
    fn closure_sets_extremes() {
        let rs = rs("B3");
        let (p0, n0) = ParabolicSpec::borel(&rs).closure_sets();
        assert!(p0.is_empty() && n0.is_empty());
        let full = ParabolicSpec::new(&rs, 1..=3).unwrap();
        let (pf, nf) = full.closure_sets();
        assert_eq!(pf.len(), rs.positive().len());
        assert_eq!(nf.len(), rs.negative().len());
    }

    #[test]
    fn parabolic_and_levi_dimensions() {
        let a1 = rs("A1");
        assert_eq!(ParabolicSpec::borel(&a1).parabolic_dimension(), 2);

        let a3 = rs("A3");
        let p = ParabolicSpec::new(&a3, [1, 3]).unwrap();
        assert_eq!(p.parabolic_dimension(), 11); // 3 + 6 + 2
        assert_eq!(p.levi_dimension(), 7); // 3 + 2 + 2

        assert_eq!(ParabolicSpec::borel(&a3).levi_dimension(), 3);
        let e8 = rs("E8");
        let full = ParabolicSpec::new(&e8, 1..=8).unwrap();
        assert_eq!(full.parabolic_dimension(), 248);
        assert_eq!(full.levi_dimension(), 248);
    }

    #[test]
    fn complete_flag_invariants() {
        // A(n−1) Borel: dim X = n(n−1)/2, ρ = n−1
        for n in 2..=6u64 {
            let rs = build_root_system(
                crate::rootsys::SimpleType::new(crate::rootsys::Family::A, n as u32 - 1).unwrap(),
            );
            let inv = ParabolicSpec::borel(&rs).flag_invariants();
            assert_eq!(inv.dim_x, n * (n - 1) / 2);
            assert_eq!(inv.picard_rank as u64, n - 1);
        }
        // projective line
        let a1 = rs("A1");
        let inv = ParabolicSpec::borel(&a1).flag_invariants();
        assert_eq!((inv.dim_x, inv.picard_rank), (1, 1));
    }

    #[test]
    fn full_subset_is_a_point() {
        let f4 = rs("F4");
        let inv = ParabolicSpec::new(&f4, 1..=4).unwrap().flag_invariants();
        assert_eq!((inv.dim_x, inv.picard_rank), (0, 0));
    }

    #[test]
    fn invalid_index_rejected() {
        let a2 = rs("A2");
        assert!(ParabolicSpec::new(&a2, [0]).is_err());
        assert!(ParabolicSpec::new(&a2, [3]).is_err());
    }

    #[test]
    fn half_dimension_identity_and_monotonicity() {
        for spec in ["A3", "B3", "C2", "D4", "G2", "F4"] {
            let rs = rs(spec);
            let dim_g = rs.dimension();
            let mut by_mask: Vec<FlagInvariants> = Vec::new();
            for subset in all_subsets(rs.rank()) {
                let p = ParabolicSpec::new(&rs, subset).unwrap();
                let inv = p.flag_invariants();
                assert_eq!(2 * (dim_g - inv.dim_parabolic), dim_g - inv.dim_levi, "{spec}");
                assert_eq!(inv.dim_x, dim_g - inv.dim_parabolic, "{spec}");
                assert_eq!(
                    inv.dim_unipotent_radical,
                    inv.dim_parabolic - inv.dim_levi,
                    "{spec}"
                );
                by_mask.push(inv);
            }
            // antitone under inclusion, checked on all pairs via masks
            let n = rs.rank();
            for small in 0u64..(1 << n) {
                for big in 0u64..(1 << n) {
                    if small & big == small {
                        let (a, b) = (&by_mask[small as usize], &by_mask[big as usize]);
                        assert!(a.dim_x >= b.dim_x, "{spec}");
                        assert!(a.picard_rank >= b.picard_rank, "{spec}");
                    }
                }
            }
            // dim X = 0 ⇔ I = P; ρ = rank ⇔ I = ∅
            for (mask, inv) in by_mask.iter().enumerate() {
                assert_eq!(inv.dim_x == 0, mask as u64 == (1 << n) - 1, "{spec}");
                assert_eq!(inv.picard_rank == n, mask == 0, "{spec}");
            }
        }
    }
}
