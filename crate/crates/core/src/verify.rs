//! Exhaustive verification sweeps over simple types and semisimple products.
//!
//! Every inequality is checked in exact integer/rational arithmetic; square
//! roots are compared by squaring both sides. Failures become report rows,
//! never panics, and identical inputs always produce byte-identical reports.

use crate::classical;
use crate::error::{Error, Result};
use crate::maxdim::exceptional_floor;
use crate::parabolic::{all_subsets, ParabolicSpec};
use crate::report::{Inequality, Rational, VerificationReport};
use crate::rootsys::{build_root_system, SimpleType};

/// Default rank cap for sweeps; overridable via options or `HOMSPACE_MAX_RANK`.
pub const DEFAULT_MAX_RANK: u32 = 12;

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub max_rank: u32,
    /// Cap on factor-subset combinations in projective product sweeps;
    /// exhaustive below, deterministically strided above.
    pub sample_cap: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_rank: DEFAULT_MAX_RANK,
            sample_cap: 1 << 16,
        }
    }
}

/// An almost-direct product of simple groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimpleProduct {
    factors: Vec<SimpleType>,
}

impl SemisimpleProduct {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        Ok(SemisimpleProduct { factors })
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn min_rank(&self) -> u32 {
        self.factors.iter().map(|t| t.rank()).min().unwrap()
    }

    pub fn signature(&self) -> String {
        let names: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        names.join("x")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Affine,
    Projective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Excluded,
    NotExcluded,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Excluded => "excluded",
            Verdict::NotExcluded => "not-excluded",
        })
    }
}

/// `excluded` iff `rho > dim_x`: such a variety cannot be a generalized flag
/// variety. `not_excluded` makes no positive claim.
pub fn flag_variety_verdict(dim_x: u64, rho: u64) -> Verdict {
    if rho > dim_x {
        Verdict::Excluded
    } else {
        Verdict::NotExcluded
    }
}

fn subset_id(subset: &[usize]) -> String {
    let parts: Vec<String> = subset.iter().map(|i| i.to_string()).collect();
    parts.join(",")
}

/// Sweeps every proper parabolic subset `I ⊊ P` of `stype` and checks the
/// linear bound `k ≤ 2·dim X/(rank+1)`, the strict square bound
/// `k² < 2·dim X`, and `ρ ≤ dim X`. Emits three rows per instance.
pub fn verify_projective_simple(stype: SimpleType, _options: &SweepOptions) -> Vec<VerificationReport> {
    let rs = build_root_system(stype);
    let rank = stype.rank();
    let mut reports = Vec::new();
    for subset in all_subsets(rank) {
        if subset.len() == rank as usize {
            continue;
        }
        let spec = ParabolicSpec::new(&rs, subset.iter().copied()).unwrap();
        let inv = spec.flag_invariants();
        let (dim_x, k) = (inv.dim_x, inv.picard_rank as u64);
        let id = format!("{stype}/I={}", subset_id(&subset));
        reports.push(VerificationReport::check(
            id.clone(),
            dim_x,
            k,
            Inequality::Prop1,
            Rational::from_integer(k as i64),
            Rational::from_integer(dim_x as i64),
        ));
        reports.push(VerificationReport::check(
            id.clone(),
            dim_x,
            k,
            Inequality::ThmProjLinear,
            Rational::from_integer(k as i64 * (rank as i64 + 1)),
            Rational::from_integer(2 * dim_x as i64),
        ));
        reports.push(VerificationReport::check(
            id,
            dim_x,
            k,
            Inequality::ThmProjSqrt,
            Rational::from_integer((k * k) as i64),
            Rational::from_integer(2 * dim_x as i64),
        ));
    }
    reports
}

fn affine_rows(
    instance_id: &str,
    rank: u32,
    k: u64,
    dim_x: u64,
    reports: &mut Vec<VerificationReport>,
) {
    let pairs = [
        (
            Inequality::ThmAffine,
            k as i64 * (rank as i64 + 1),
            dim_x as i64,
        ),
        (Inequality::CorHalf, 2 * k as i64, dim_x as i64),
        (Inequality::CorSqrtAffine, (k * k) as i64, dim_x as i64),
        (Inequality::Prop1, k as i64, dim_x as i64),
    ];
    for (ineq, lhs, rhs) in pairs {
        reports.push(VerificationReport::check(
            instance_id.to_string(),
            dim_x,
            k,
            ineq,
            Rational::from_integer(lhs),
            Rational::from_integer(rhs),
        ));
    }
}

/// Affine sweep for one simple type: classical families use the brute-force
/// centralizer floors, exceptional types the `D^ss` floors. Four rows per
/// torus dimension `k`.
pub fn verify_affine_simple(stype: SimpleType, _options: &SweepOptions) -> Result<Vec<VerificationReport>> {
    let rank = stype.rank();
    let mut reports = Vec::new();
    for k in 1..=rank {
        let (dim_x, label) = if stype.is_classical() {
            (
                classical::min_homspace_dim(stype.family(), rank, k)?,
                format!("{stype}/k={k}"),
            )
        } else {
            (exceptional_floor(stype, k)?, format!("{stype}/t={k}"))
        };
        affine_rows(&label, rank, k as u64, dim_x, &mut reports);
    }
    Ok(reports)
}

/// Minimal affine floor over torus dimension `t` for one factor
/// (0 when `t = 0`).
fn factor_affine_floor(stype: SimpleType, t: u32) -> Result<u64> {
    if t == 0 {
        return Ok(0);
    }
    if stype.is_classical() {
        classical::min_homspace_dim(stype.family(), stype.rank(), t)
    } else {
        exceptional_floor(stype, t)
    }
}

/// Sweeps a semisimple product. Affine mode ranges over factor-wise torus
/// dimensions `(t_i)`, projective mode over tuples of parabolic subsets, and
/// checks `Σk_i·(1 + min rk) ≤ Σfloor_i` (resp. `≤ 2·Σdim X_i`).
pub fn verify_semisimple_product(
    product: &SemisimpleProduct,
    mode: Mode,
    options: &SweepOptions,
) -> Result<Vec<VerificationReport>> {
    match mode {
        Mode::Affine => product_affine(product, options),
        Mode::Projective => product_projective(product, options),
    }
}

fn product_affine(
    product: &SemisimpleProduct,
    options: &SweepOptions,
) -> Result<Vec<VerificationReport>> {
    let min_rank = product.min_rank() as u64;
    let radices: Vec<u64> = product
        .factors()
        .iter()
        .map(|t| t.rank() as u64 + 1)
        .collect();
    let mut reports = Vec::new();
    for_each_tuple(&radices, options.sample_cap, &mut |tuple| {
        let total_t: u64 = tuple.iter().sum();
        if total_t == 0 {
            return Ok(());
        }
        let mut floor_sum = 0u64;
        for (f, &t) in product.factors().iter().zip(tuple) {
            floor_sum += factor_affine_floor(*f, t as u32)?;
        }
        let id = format!("{}/t={}", product.signature(), subset_id_u64(tuple));
        reports.push(VerificationReport::check(
            id,
            floor_sum,
            total_t,
            Inequality::CorSs,
            Rational::from_integer((total_t * (1 + min_rank)) as i64),
            Rational::from_integer(floor_sum as i64),
        ));
        Ok(())
    })?;
    Ok(reports)
}

fn product_projective(
    product: &SemisimpleProduct,
    options: &SweepOptions,
) -> Result<Vec<VerificationReport>> {
    let min_rank = product.min_rank() as u64;
    let systems: Vec<_> = product
        .factors()
        .iter()
        .map(|&t| build_root_system(t))
        .collect();
    // per factor: (dim X, k) for every subset, in mask order
    let per_factor: Vec<Vec<(u64, u64)>> = systems
        .iter()
        .map(|rs| {
            all_subsets(rs.rank())
                .map(|subset| {
                    let inv = ParabolicSpec::new(rs, subset).unwrap().flag_invariants();
                    (inv.dim_x, inv.picard_rank as u64)
                })
                .collect()
        })
        .collect();
    let radices: Vec<u64> = per_factor.iter().map(|v| v.len() as u64).collect();
    let mut reports = Vec::new();
    for_each_tuple(&radices, options.sample_cap, &mut |tuple| {
        let mut dim_x = 0u64;
        let mut k = 0u64;
        for (choices, &idx) in per_factor.iter().zip(tuple) {
            let (d, ki) = choices[idx as usize];
            dim_x += d;
            k += ki;
        }
        if dim_x == 0 {
            // every factor is a point
            return Ok(());
        }
        let id = format!("{}/masks={}", product.signature(), subset_id_u64(tuple));
        reports.push(VerificationReport::check(
            id,
            dim_x,
            k,
            Inequality::CorProjSs,
            Rational::from_integer((k * (1 + min_rank)) as i64),
            Rational::from_integer((2 * dim_x) as i64),
        ));
        Ok(())
    })?;
    Ok(reports)
}

fn subset_id_u64(tuple: &[u64]) -> String {
    let parts: Vec<String> = tuple.iter().map(|t| t.to_string()).collect();
    parts.join(",")
}

/// Visits tuples of the mixed-radix space `Π radices` in index order.
/// Exhaustive when the space fits in `cap`; otherwise a deterministic stride
/// keeps the visit count at most `cap` while spanning the whole space.
fn for_each_tuple(
    radices: &[u64],
    cap: u64,
    f: &mut impl FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    let total: u64 = radices.iter().product();
    let stride = total.div_ceil(cap).max(1);
    let mut idx = 0u64;
    let mut tuple = vec![0u64; radices.len()];
    while idx < total {
        let mut rem = idx;
        for (slot, &r) in tuple.iter_mut().zip(radices).rev() {
            *slot = rem % r;
            rem /= r;
        }
        f(&tuple)?;
        idx += stride;
    }
    Ok(())
}
