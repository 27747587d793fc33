//! Maximal dimensions of simple and semisimple Lie algebras of a given rank.
//!
//! `D^s(l)` compares the closed-form dimensions of every family valid at rank
//! `l`; `D^ss(l)` is computed by dynamic programming over binary splits of the
//! rank, which attains the same maximum as ranging over all multisets of
//! simple factors (any multiset can be split off one factor at a time).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Family, SimpleType};

/// Maximal dimensions at one rank, with the algebras achieving them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxDimEntry {
    pub rank: u32,
    pub d_simple: u64,
    pub d_semisimple: u64,
    pub witnesses_simple: Vec<SimpleType>,
    /// Ranks of the simple factors of a maximal semisimple algebra,
    /// nonincreasing.
    pub witness_partition: Vec<u32>,
}

/// `D^s(l)` with every family attaining it (ties such as `B3`/`C3` are all
/// reported, in family order).
pub fn simple_max_dim(l: u32) -> Result<(u64, Vec<SimpleType>)> {
    if l == 0 {
        return Err(Error::RankZeroSimple);
    }
    let candidates = SimpleType::all_of_rank(l);
    let best = candidates.iter().map(|t| t.dimension()).max().unwrap();
    let witnesses = candidates
        .into_iter()
        .filter(|t| t.dimension() == best)
        .collect();
    Ok((best, witnesses))
}

/// `D^ss(l)` and one maximizing factor-rank partition. `D^ss(0) = 0` by
/// convention, with an empty partition.
pub fn semisimple_max_dim(l: u32) -> (u64, Vec<u32>) {
    let table = semisimple_table(l);
    (table[l as usize].0, reconstruct(&table, l))
}

// (value, best split: None = single simple factor, Some(j) = split j + (l−j))
fn semisimple_table(cap: u32) -> Vec<(u64, Option<u32>)> {
    let mut table: Vec<(u64, Option<u32>)> = vec![(0, None)];
    for l in 1..=cap {
        let mut best = (simple_max_dim(l).unwrap().0, None);
        for j in 1..=l / 2 {
            let split = table[j as usize].0 + table[(l - j) as usize].0;
            if split > best.0 {
                best = (split, Some(j));
            }
        }
        table.push(best);
    }
    table
}

fn reconstruct(table: &[(u64, Option<u32>)], l: u32) -> Vec<u32> {
    if l == 0 {
        return Vec::new();
    }
    match table[l as usize].1 {
        None => vec![l],
        Some(j) => {
            let mut parts = reconstruct(table, j);
            parts.extend(reconstruct(table, l - j));
            parts.sort_unstable_by(|a, b| b.cmp(a));
            parts
        }
    }
}

/// The `D^s`/`D^ss` table for ranks `1..=cap`.
pub fn max_dim_table(cap: u32) -> Vec<MaxDimEntry> {
    let table = semisimple_table(cap);
    (1..=cap)
        .map(|l| {
            let (d_simple, witnesses_simple) = simple_max_dim(l).unwrap();
            MaxDimEntry {
                rank: l,
                d_simple,
                d_semisimple: table[l as usize].0,
                witnesses_simple,
                witness_partition: reconstruct(&table, l),
            }
        })
        .collect()
}

/// Lower bound `dim 𝔤 − t − D^ss(rank − t)` on the dimension of a homogeneous
/// space of an exceptional group whose stabilizer has central torus of
/// dimension `t`.
pub fn exceptional_floor(stype: SimpleType, t_dim: u32) -> Result<u64> {
    if !stype.family().is_exceptional() {
        return Err(Error::NotExceptional(stype.family()));
    }
    let rank = stype.rank();
    if t_dim < 1 || t_dim > rank {
        return Err(Error::TorusDimRange {
            family: stype.family(),
            t_dim,
            rank,
        });
    }
    let (dss, _) = semisimple_max_dim(rank - t_dim);
    Ok(stype.dimension() - t_dim as u64 - dss)
}

/// The full exceptional-floor grid: one row per exceptional family (E6, E7,
/// E8, F4, G2), columns `t = 1..=rank`.
pub fn table3() -> Vec<(Family, Vec<u64>)> {
    Family::EXCEPTIONAL
        .iter()
        .map(|&f| {
            let stype = SimpleType::exceptional(f).unwrap();
            let row = (1..=stype.rank())
                .map(|t| exceptional_floor(stype, t).unwrap())
                .collect();
            (f, row)
        })
        .collect()
}
