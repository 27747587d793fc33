//! Centralizer dimensions for the classical families.
//!
//! A central semisimple element of a reductive stabilizer is described by the
//! multiplicities of its eigenvalues: block sizes `n_1..n_{k+1}` for `sl`,
//! and paired multiplicities `(n_i, m_i)` for `±x_i` plus a zero block `N_0`
//! for `so`/`sp`. The dimension of its centralizer bounds the stabilizer
//! dimension, and `min_homspace_dim` is the complementary lower bound on the
//! homogeneous-space dimension.
//!
//! The brute-force maximizer over all multiplicity assignments is the source
//! of truth here; the closed forms are kept as cross-checks. For `sp(2l)`
//! with `l = k` the true maximizer is the all-ones pattern (centralizer =
//! Cartan, dimension `l`); descriptions that set some `N_i = l − k = 0` are
//! not valid patterns, though they agree on the value `k − 1 + (l−k+1)²`.

use crate::error::{Error, Result};
use crate::report::{Inequality, Rational, VerificationReport};
use crate::rootsys::{Family, SimpleType};

/// Eigenvalue multiplicities of a central semisimple element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockMultiplicities {
    /// `sl(l+1)`: diagonal blocks of sizes `n_1..n_{k+1}`, all positive,
    /// summing to `l+1`.
    TraceZero { blocks: Vec<u64> },
    /// `so`/`sp`: pairs `(n_i, m_i)` of multiplicities of `±x_i` with
    /// `n_i + m_i ≥ 1`, plus the zero-eigenvalue multiplicity `N_0`;
    /// `Σ(n_i + m_i) + N_0 = l`.
    Paired { pairs: Vec<(u64, u64)>, zero: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenPattern {
    stype: SimpleType,
    mult: BlockMultiplicities,
}

impl EigenPattern {
    pub fn trace_zero(rank: u32, blocks: Vec<u64>) -> Result<Self> {
        let stype = SimpleType::new(Family::A, rank)?;
        if blocks.is_empty() || blocks.iter().any(|&n| n == 0) {
            return Err(Error::InvalidPattern(
                "all block sizes must be positive".into(),
            ));
        }
        if blocks.iter().sum::<u64>() != rank as u64 + 1 {
            return Err(Error::InvalidPattern(format!(
                "block sizes must sum to l+1 = {}",
                rank + 1
            )));
        }
        Ok(EigenPattern {
            stype,
            mult: BlockMultiplicities::TraceZero { blocks },
        })
    }

    pub fn paired(family: Family, rank: u32, pairs: Vec<(u64, u64)>, zero: u64) -> Result<Self> {
        if !matches!(family, Family::B | Family::C | Family::D) {
            return Err(Error::InvalidPattern(format!(
                "paired multiplicities apply to B/C/D, not {family}"
            )));
        }
        let stype = SimpleType::new(family, rank)?;
        if pairs.iter().any(|&(n, m)| n + m == 0) {
            return Err(Error::InvalidPattern(
                "each pair must have n_i + m_i ≥ 1".into(),
            ));
        }
        let total: u64 = pairs.iter().map(|&(n, m)| n + m).sum::<u64>() + zero;
        if total != rank as u64 {
            return Err(Error::InvalidPattern(format!(
                "multiplicities must sum to l = {rank}, got {total}"
            )));
        }
        Ok(EigenPattern {
            stype,
            mult: BlockMultiplicities::Paired { pairs, zero },
        })
    }

    pub fn stype(&self) -> SimpleType {
        self.stype
    }

    pub fn multiplicities(&self) -> &BlockMultiplicities {
        &self.mult
    }

    /// Number of distinct nonzero eigenvalue classes (the bound on `dim 𝔱`).
    pub fn eigen_classes(&self) -> u32 {
        match &self.mult {
            BlockMultiplicities::TraceZero { blocks } => blocks.len() as u32 - 1,
            BlockMultiplicities::Paired { pairs, .. } => pairs.len() as u32,
        }
    }
}

/// Exact dimension of the centralizer block form: `Σn_i² − 1` for `sl`,
/// `ΣN_i² + 2N_0² − N_0` for `so(2l)`, `ΣN_i² + 2N_0² + N_0` for `sp(2l)`
/// and `so(2l+1)`, where `N_i = n_i + m_i`.
pub fn centralizer_dim(pattern: &EigenPattern) -> u64 {
    match &pattern.mult {
        BlockMultiplicities::TraceZero { blocks } => {
            blocks.iter().map(|&n| n * n).sum::<u64>() - 1
        }
        BlockMultiplicities::Paired { pairs, zero } => {
            let sum_sq: u64 = pairs.iter().map(|&(n, m)| (n + m) * (n + m)).sum();
            let base = sum_sq + 2 * zero * zero;
            match pattern.stype.family() {
                Family::D => base - zero,
                _ => base + zero,
            }
        }
    }
}

fn check_classical(family: Family, l: u32, k: u32) -> Result<SimpleType> {
    if !family.is_classical() {
        return Err(Error::NotClassical(family));
    }
    let stype = SimpleType::new(family, l)?;
    if k < 1 || k > l {
        return Err(Error::EigenClassRange { k, rank: l });
    }
    Ok(stype)
}

/// Calls `f` with the partitions of `n` into exactly `k` positive parts,
/// nonincreasing, in descending lexicographic order.
fn for_each_partition(n: u64, k: u64, f: &mut impl FnMut(&[u64])) {
    fn rec(n: u64, k: u64, max_part: u64, prefix: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if k == 0 {
            if n == 0 {
                f(prefix);
            }
            return;
        }
        let hi = max_part.min(n.saturating_sub(k - 1));
        let lo = n.div_ceil(k);
        let mut p = hi;
        while p >= lo {
            prefix.push(p);
            rec(n - p, k - 1, p, prefix, f);
            prefix.pop();
            p -= 1;
        }
    }
    rec(n, k, n, &mut Vec::new(), f);
}

/// Maximum of `centralizer_dim` over all patterns with exactly `k` distinct
/// nonzero eigenvalue classes, by exhaustive enumeration. Enumeration is
/// lexicographic over `(N_0, sorted N_i descending)`; witness ties keep the
/// first pattern found.
pub fn max_centralizer_dim(family: Family, l: u32, k: u32) -> Result<(u64, EigenPattern)> {
    let _ = check_classical(family, l, k)?;
    let mut best: Option<(u64, EigenPattern)> = None;
    let mut consider = |value: u64, pattern: EigenPattern| {
        if best.as_ref().map_or(true, |(b, _)| value > *b) {
            best = Some((value, pattern));
        }
    };
    match family {
        Family::A => {
            for_each_partition(l as u64 + 1, k as u64 + 1, &mut |parts| {
                let p = EigenPattern::trace_zero(l, parts.to_vec()).unwrap();
                let v = centralizer_dim(&p);
                consider(v, p);
            });
        }
        _ => {
            for zero in 0..=(l - k) as u64 {
                for_each_partition(l as u64 - zero, k as u64, &mut |parts| {
                    let pairs = parts.iter().map(|&n| (n, 0)).collect();
                    let p = EigenPattern::paired(family, l, pairs, zero).unwrap();
                    let v = centralizer_dim(&p);
                    consider(v, p);
                });
            }
        }
    }
    Ok(best.expect("at least one pattern exists"))
}

/// Piecewise closed form for the centralizer maximum; cross-check for the
/// brute-force result.
pub fn closed_form_max_centralizer(family: Family, l: u32, k: u32) -> Result<u64> {
    let _ = check_classical(family, l, k)?;
    let (l, k) = (l as u64, k as u64);
    let d = l - k;
    Ok(match family {
        Family::A => k - 1 + (l + 1 - k) * (l + 1 - k),
        Family::D => {
            if d >= 3 {
                k + 2 * d * d - d
            } else {
                k - 1 + (d + 1) * (d + 1)
            }
        }
        // B and C: all-ones Cartan at l = k, zero block of size l − k otherwise
        _ => {
            if d >= 1 {
                2 * d * d + l
            } else {
                l
            }
        }
    })
}

/// `dim 𝔤 − max_centralizer_dim`: guaranteed lower bound on `dim X` when the
/// stabilizer's central torus has dimension `k`.
pub fn min_homspace_dim(family: Family, l: u32, k: u32) -> Result<u64> {
    let stype = check_classical(family, l, k)?;
    let (max_cent, _) = max_centralizer_dim(family, l, k)?;
    Ok(stype.dimension() - max_cent)
}

/// Closed form for `min_homspace_dim` on the same piecewise regions.
pub fn closed_form_min_homspace(family: Family, l: u32, k: u32) -> Result<u64> {
    let _ = check_classical(family, l, k)?;
    let (l, k) = (l as u64, k as u64);
    Ok(match family {
        Family::A => k * (2 * l + 1 - k),
        Family::D => {
            if l - k >= 3 {
                2 * k * (2 * l - k - 1)
            } else {
                l * (l - 3) + k * (2 * l + 1 - k)
            }
        }
        _ => 2 * k * (2 * l - k),
    })
}

/// Checks `k·(l+1) ≤ min_homspace_dim` for every `l ≤ max_rank`, `1 ≤ k ≤ l`.
/// Failures become report rows, never panics.
pub fn verify_affine_classical(family: Family, max_rank: u32) -> Result<Vec<VerificationReport>> {
    if !family.is_classical() {
        return Err(Error::NotClassical(family));
    }
    let mut reports = Vec::new();
    for l in family.min_rank()..=max_rank {
        for k in 1..=l {
            let dim_x = min_homspace_dim(family, l, k)?;
            reports.push(VerificationReport::check(
                format!("{family}{l}/k={k}"),
                dim_x,
                k as u64,
                Inequality::ThmAffine,
                Rational::from_integer((k as i64) * (l as i64 + 1)),
                Rational::from_integer(dim_x as i64),
            ));
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_validation() {
        assert!(EigenPattern::trace_zero(4, vec![1, 1, 3]).is_ok());
        assert!(EigenPattern::trace_zero(4, vec![1, 1, 2]).is_err()); // sums to 4
        assert!(EigenPattern::trace_zero(4, vec![0, 2, 3]).is_err());
        assert!(EigenPattern::paired(Family::D, 4, vec![(1, 0)], 3).is_ok());
        assert!(EigenPattern::paired(Family::D, 4, vec![(0, 0)], 4).is_err());
        assert!(EigenPattern::paired(Family::C, 2, vec![(1, 0)], 2).is_err()); // sums to 3
        assert!(EigenPattern::paired(Family::A, 4, vec![(1, 0)], 3).is_err());
    }

    #[test]
    fn centralizer_examples() {
        // block commutant in gl5, minus the trace
        let p = EigenPattern::trace_zero(4, vec![1, 1, 3]).unwrap();
        assert_eq!(centralizer_dim(&p), 10);
        // so(8): one ±x block of size 1, zero block of size 3
        let p = EigenPattern::paired(Family::D, 4, vec![(1, 0)], 3).unwrap();
        assert_eq!(centralizer_dim(&p), 16);
        // regular element of sp4: centralizer is the Cartan
        let p = EigenPattern::paired(Family::C, 2, vec![(1, 0), (1, 0)], 0).unwrap();
        assert_eq!(centralizer_dim(&p), 2);
    }

    #[test]
    fn all_ones_pattern_gives_rank() {
        for l in 3..=8u32 {
            let a = EigenPattern::trace_zero(l, vec![1; l as usize + 1]).unwrap();
            assert_eq!(centralizer_dim(&a), l as u64);
            for f in [Family::B, Family::C, Family::D] {
                let p = EigenPattern::paired(f, l, vec![(1, 0); l as usize], 0).unwrap();
                assert_eq!(centralizer_dim(&p), l as u64, "{f}{l}");
            }
        }
    }

    #[test]
    fn pair_swap_symmetry() {
        for f in [Family::B, Family::C, Family::D] {
            let p = EigenPattern::paired(f, 6, vec![(2, 1), (0, 2)], 1).unwrap();
            let q = EigenPattern::paired(f, 6, vec![(1, 2), (2, 0)], 1).unwrap();
            assert_eq!(centralizer_dim(&p), centralizer_dim(&q), "{f}");
        }
    }

    #[test]
    fn brute_force_examples() {
        let (v, w) = max_centralizer_dim(Family::A, 4, 2).unwrap();
        assert_eq!(v, 10);
        assert_eq!(
            w.multiplicities(),
            &BlockMultiplicities::TraceZero {
                blocks: vec![3, 1, 1]
            }
        );
        assert_eq!(max_centralizer_dim(Family::D, 4, 1).unwrap().0, 16);
        // regular case: maximal torus
        for l in [2, 4, 7u32] {
            assert_eq!(max_centralizer_dim(Family::A, l, l).unwrap().0, l as u64);
        }
    }

    #[test]
    fn brute_force_matches_closed_forms() {
        for f in Family::CLASSICAL {
            for l in f.min_rank()..=30 {
                for k in 1..=l {
                    let brute = max_centralizer_dim(f, l, k).unwrap().0;
                    let closed = closed_form_max_centralizer(f, l, k).unwrap();
                    assert_eq!(brute, closed, "{f} l={l} k={k}");
                    let dim_x = min_homspace_dim(f, l, k).unwrap();
                    assert_eq!(
                        dim_x,
                        closed_form_min_homspace(f, l, k).unwrap(),
                        "{f} l={l} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn min_homspace_examples() {
        assert_eq!(min_homspace_dim(Family::A, 4, 2).unwrap(), 14);
        assert_eq!(min_homspace_dim(Family::D, 4, 1).unwrap(), 12);
        assert_eq!(min_homspace_dim(Family::C, 2, 1).unwrap(), 6);
    }

    #[test]
    fn sp_regular_case_maximizer() {
        // l = k: the only valid patterns have all N_i = 1, N_0 = 0
        let (v, w) = max_centralizer_dim(Family::C, 5, 5).unwrap();
        assert_eq!(v, 5);
        assert_eq!(
            w.multiplicities(),
            &BlockMultiplicities::Paired {
                pairs: vec![(1, 0); 5],
                zero: 0
            }
        );
    }

    #[test]
    fn affine_sweep_passes() {
        let reports = verify_affine_classical(Family::A, 8).unwrap();
        assert_eq!(reports.len(), 36);
        assert!(reports.iter().all(|r| r.passed));
        for f in [Family::B, Family::C, Family::D] {
            let reports = verify_affine_classical(f, 6).unwrap();
            assert!(reports.iter().all(|r| r.passed), "{f}");
        }
    }

    #[test]
    fn sqrt_bound_on_min_dim() {
        for f in Family::CLASSICAL {
            for l in f.min_rank()..=30 {
                for k in 1..=l as u64 {
                    let dim_x = min_homspace_dim(f, l, k as u32).unwrap();
                    assert!(k * k < dim_x, "{f} l={l} k={k}");
                }
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(max_centralizer_dim(Family::A, 4, 0).is_err());
        assert!(max_centralizer_dim(Family::A, 4, 5).is_err());
        assert!(max_centralizer_dim(Family::G2, 2, 1).is_err());
        assert!(verify_affine_classical(Family::E8, 8).is_err());
    }
}
