//! Root systems of the nine simple families in exact coordinates.
//!
//! Coordinates follow the standard Euclidean models: `A_l` lives in dimension
//! `l+1`, `B_l`/`C_l`/`D_l` in dimension `l`, `G_2` in 3, `F_4` in 4, and
//! `E_6`/`E_7`/`E_8` in the dimension-8 `E_8` model. All coordinates are stored
//! doubled, so half-integral entries (spin roots of `E_8`, short `F_4` roots)
//! are exact `i64` values. Simple roots use the Bourbaki numbering throughout;
//! parabolic subsets written against it are reproducible across runs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

type Rat = Ratio<i64>;

/// The nine families of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];

    pub const CLASSICAL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    pub const EXCEPTIONAL: [Family; 5] =
        [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2];

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn is_exceptional(self) -> bool {
        !self.is_classical()
    }

    /// Minimal admissible rank for the classical families, fixed rank otherwise.
    pub fn min_rank(self) -> u32 {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            _ => self.fixed_rank().unwrap(),
        }
    }

    /// Fixed rank of an exceptional family; `None` for classical ones.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

/// A simple type: family plus rank, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: u32,
}

impl SimpleType {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        if let Some(fixed) = family.fixed_rank() {
            if rank != fixed {
                return Err(Error::FixedRank {
                    family,
                    fixed,
                    rank,
                });
            }
        } else if rank < family.min_rank() {
            return Err(Error::InvalidRank {
                family,
                min_rank: family.min_rank(),
                rank,
            });
        }
        Ok(SimpleType { family, rank })
    }

    /// Shorthand for the exceptional types, whose rank is fixed.
    pub fn exceptional(family: Family) -> Result<Self> {
        let rank = family.fixed_rank().ok_or(Error::NotExceptional(family))?;
        SimpleType::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Closed-form dimension of the algebra: `l²+2l` for `A_l`, `2l²+l` for
    /// `B_l`/`C_l`, `2l²−l` for `D_l`, and 78/133/248/52/14 for the
    /// exceptional types.
    pub fn dimension(&self) -> u64 {
        let l = self.rank as u64;
        match self.family {
            Family::A => l * l + 2 * l,
            Family::B | Family::C => 2 * l * l + l,
            Family::D => 2 * l * l - l,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
            Family::F4 => 52,
            Family::G2 => 14,
        }
    }

    /// Number of roots implied by the closed-form dimension.
    pub fn root_count(&self) -> u64 {
        self.dimension() - self.rank as u64
    }

    pub fn is_classical(&self) -> bool {
        self.family.is_classical()
    }

    /// All valid simple types at a given rank, in family order.
    pub fn all_of_rank(l: u32) -> Vec<SimpleType> {
        Family::ALL
            .iter()
            .filter_map(|&f| SimpleType::new(f, l).ok())
            .collect()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => {
                write!(f, "{}{}", self.family, self.rank)
            }
            _ => write!(f, "{}", self.family),
        }
    }
}

impl serde::Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses `A4`, `D5`, `E6`, `F4`, `G2` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let err = || Error::ParseType(s.to_string());
        let (letter, digits) = t.split_at(t.len().min(1));
        let family = match letter {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => match digits {
                "6" => Family::E6,
                "7" => Family::E7,
                "8" => Family::E8,
                _ => return Err(err()),
            },
            "F" if digits == "4" => Family::F4,
            "G" if digits == "2" => Family::G2,
            _ => return Err(err()),
        };
        let rank = match family.fixed_rank() {
            Some(r) => r,
            None => digits.parse::<u32>().map_err(|_| err())?,
        };
        SimpleType::new(family, rank).map_err(|_| err())
    }
}

/// A root, stored as doubled ambient coordinates so that half-integral
/// entries remain exact integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    twice: Vec<i64>,
}

impl Root {
    pub fn from_twice(twice: Vec<i64>) -> Self {
        Root { twice }
    }

    /// Doubled coordinates.
    pub fn twice_coords(&self) -> &[i64] {
        &self.twice
    }

    pub fn neg(&self) -> Root {
        Root {
            twice: self.twice.iter().map(|&x| -x).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.twice.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &x) in self.twice.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if x % 2 == 0 {
                write!(f, "{}", x / 2)?;
            } else {
                write!(f, "{}/2", x)?;
            }
        }
        write!(f, ")")
    }
}

/// A reduced root system with a fixed simple-root basis.
#[derive(Debug, Clone)]
pub struct RootSystem {
    stype: SimpleType,
    roots: Vec<Root>,
    positive: Vec<Root>,
    negative: Vec<Root>,
    simple: Vec<Root>,
    decomp: HashMap<Root, Vec<i64>>,
}

impl RootSystem {
    pub fn stype(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> u32 {
        self.stype.rank()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn negative(&self) -> &[Root] {
        &self.negative
    }

    /// Simple roots in Bourbaki order.
    pub fn simple(&self) -> &[Root] {
        &self.simple
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.decomp.contains_key(r)
    }

    /// Integer coefficients of `r` over the simple roots. All coefficients are
    /// nonnegative for positive roots and nonpositive for negative ones.
    pub fn decompose(&self, r: &Root) -> Result<Vec<i64>> {
        self.decomp
            .get(r)
            .cloned()
            .ok_or_else(|| Error::NotARoot(r.to_string(), self.stype.to_string()))
    }

    /// Recompose a coefficient vector into an ambient vector (doubled coords).
    pub fn recompose(&self, coeffs: &[i64]) -> Root {
        let n = self.simple[0].twice.len();
        let mut twice = vec![0i64; n];
        for (c, s) in coeffs.iter().zip(&self.simple) {
            for (t, &x) in twice.iter_mut().zip(&s.twice) {
                *t += c * x;
            }
        }
        Root { twice }
    }

    /// `rank + |Φ|`; cross-checked against the closed form in tests.
    pub fn dimension(&self) -> u64 {
        self.rank() as u64 + self.roots.len() as u64
    }
}

/// Closed-form algebra dimension for a valid simple type.
pub fn algebra_dimension(stype: SimpleType) -> u64 {
    stype.dimension()
}

/// Unique integer decomposition of a root over the simple roots of `rs`.
pub fn simple_root_decomposition(r: &Root, rs: &RootSystem) -> Result<Vec<i64>> {
    rs.decompose(r)
}

/// Builds the reduced root system of `stype` with its Bourbaki simple basis.
/// Deterministic: roots are sorted lexicographically by coordinates.
pub fn build_root_system(stype: SimpleType) -> RootSystem {
    let l = stype.rank() as usize;
    let (mut roots, simple) = match stype.family() {
        Family::A => type_a(l),
        Family::B => type_b(l),
        Family::C => type_c(l),
        Family::D => type_d(l),
        Family::G2 => type_g2(),
        Family::F4 => type_f4(),
        Family::E8 => type_e8(),
        Family::E6 | Family::E7 => type_e_sub(l),
    };
    roots.sort();

    let solver = left_inverse(&simple);
    let mut decomp = HashMap::with_capacity(roots.len());
    let mut positive = Vec::with_capacity(roots.len() / 2);
    let mut negative = Vec::with_capacity(roots.len() / 2);
    for r in &roots {
        let c = apply_solver(&solver, &simple, r)
            .unwrap_or_else(|| panic!("root {r} not in the span of the simple basis"));
        if c.iter().all(|&x| x >= 0) {
            positive.push(r.clone());
        } else {
            debug_assert!(c.iter().all(|&x| x <= 0));
            negative.push(r.clone());
        }
        decomp.insert(r.clone(), c);
    }

    RootSystem {
        stype,
        roots,
        positive,
        negative,
        simple,
        decomp,
    }
}

fn e(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[i] = 2; // doubled
    v
}

fn diff(n: usize, i: usize, j: usize) -> Root {
    let mut v = vec![0i64; n];
    v[i] = 2;
    v[j] = -2;
    Root::from_twice(v)
}

fn type_a(l: usize) -> (Vec<Root>, Vec<Root>) {
    let n = l + 1;
    let mut roots = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                roots.push(diff(n, i, j));
            }
        }
    }
    let simple = (0..l).map(|i| diff(n, i, i + 1)).collect();
    (roots, simple)
}

fn type_b(l: usize) -> (Vec<Root>, Vec<Root>) {
    let mut roots = pm_pairs(l);
    for i in 0..l {
        roots.push(Root::from_twice(e(l, i)));
        roots.push(Root::from_twice(e(l, i)).neg());
    }
    let mut simple: Vec<Root> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
    simple.push(Root::from_twice(e(l, l - 1)));
    (roots, simple)
}

fn type_c(l: usize) -> (Vec<Root>, Vec<Root>) {
    let mut roots = pm_pairs(l);
    for i in 0..l {
        let mut v = vec![0i64; l];
        v[i] = 4; // 2e_i, doubled
        roots.push(Root::from_twice(v.clone()));
        roots.push(Root::from_twice(v).neg());
    }
    let mut simple: Vec<Root> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
    let mut last = vec![0i64; l];
    last[l - 1] = 4;
    simple.push(Root::from_twice(last));
    (roots, simple)
}

fn type_d(l: usize) -> (Vec<Root>, Vec<Root>) {
    let roots = pm_pairs(l);
    let mut simple: Vec<Root> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
    let mut last = vec![0i64; l];
    last[l - 2] = 2;
    last[l - 1] = 2;
    simple.push(Root::from_twice(last));
    (roots, simple)
}

/// All `±e_i ± e_j`, `i < j`.
fn pm_pairs(l: usize) -> Vec<Root> {
    let mut roots = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            for si in [2i64, -2] {
                for sj in [2i64, -2] {
                    let mut v = vec![0i64; l];
                    v[i] = si;
                    v[j] = sj;
                    roots.push(Root::from_twice(v));
                }
            }
        }
    }
    roots
}

fn type_g2() -> (Vec<Root>, Vec<Root>) {
    let mut roots = Vec::new();
    // short: e_i − e_j; long: ±(2e_i − e_j − e_k)
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                roots.push(diff(3, i, j));
            }
        }
    }
    for i in 0..3 {
        let mut v = vec![-2i64; 3];
        v[i] = 4;
        roots.push(Root::from_twice(v.clone()));
        roots.push(Root::from_twice(v).neg());
    }
    let simple = vec![
        diff(3, 0, 1),
        Root::from_twice(vec![-4, 2, 2]),
    ];
    (roots, simple)
}

fn type_f4() -> (Vec<Root>, Vec<Root>) {
    let mut roots = Vec::new();
    for i in 0..4 {
        roots.push(Root::from_twice(e(4, i)));
        roots.push(Root::from_twice(e(4, i)).neg());
    }
    roots.extend(pm_pairs(4));
    // (±e1 ± e2 ± e3 ± e4)/2 — doubled entries ±1
    for mask in 0..16u32 {
        let v: Vec<i64> = (0..4)
            .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
            .collect();
        roots.push(Root::from_twice(v));
    }
    let simple = vec![
        diff(4, 1, 2),
        diff(4, 2, 3),
        Root::from_twice(e(4, 3)),
        Root::from_twice(vec![1, -1, -1, -1]),
    ];
    (roots, simple)
}

fn e8_roots() -> Vec<Root> {
    let mut roots = pm_pairs(8);
    // ½Σ(±e_i) with an even number of minus signs — doubled entries ±1
    for mask in 0..256u32 {
        if mask.count_ones() % 2 == 0 {
            let v: Vec<i64> = (0..8)
                .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
                .collect();
            roots.push(Root::from_twice(v));
        }
    }
    roots
}

fn e8_simple() -> Vec<Root> {
    vec![
        Root::from_twice(vec![1, -1, -1, -1, -1, -1, -1, 1]),
        Root::from_twice(vec![2, 2, 0, 0, 0, 0, 0, 0]),
        Root::from_twice(vec![-2, 2, 0, 0, 0, 0, 0, 0]),
        Root::from_twice(vec![0, -2, 2, 0, 0, 0, 0, 0]),
        Root::from_twice(vec![0, 0, -2, 2, 0, 0, 0, 0]),
        Root::from_twice(vec![0, 0, 0, -2, 2, 0, 0, 0]),
        Root::from_twice(vec![0, 0, 0, 0, -2, 2, 0, 0]),
        Root::from_twice(vec![0, 0, 0, 0, 0, -2, 2, 0]),
    ]
}

fn type_e8() -> (Vec<Root>, Vec<Root>) {
    (e8_roots(), e8_simple())
}

/// `E_6`/`E_7` as the sub-systems of `E_8` spanned by the first 6/7 Bourbaki
/// simple roots; the ambient dimension stays 8.
fn type_e_sub(rank: usize) -> (Vec<Root>, Vec<Root>) {
    let simple8 = e8_simple();
    let solver = left_inverse(&simple8);
    let roots = e8_roots()
        .into_iter()
        .filter(|r| {
            let c = apply_solver(&solver, &simple8, r).expect("E8 root decomposes");
            c[rank..].iter().all(|&x| x == 0)
        })
        .collect();
    let simple = simple8[..rank].to_vec();
    (roots, simple)
}

/// `(SᵀS)⁻¹Sᵀ` for the column matrix `S` of simple roots; exists because the
/// simple roots are linearly independent.
fn left_inverse(simple: &[Root]) -> Vec<Vec<Rat>> {
    let r = simple.len();
    let n = simple[0].twice.len();
    // Gram matrix over the doubled coordinates (the scaling cancels later).
    let mut g: Vec<Vec<Rat>> = vec![vec![Rat::zero(); r]; r];
    for i in 0..r {
        for j in 0..r {
            let dot: i64 = simple[i]
                .twice
                .iter()
                .zip(&simple[j].twice)
                .map(|(a, b)| a * b)
                .sum();
            g[i][j] = Rat::from_integer(dot);
        }
    }
    let ginv = invert(g);
    // M = G⁻¹ Sᵀ, an r×n matrix.
    let mut m = vec![vec![Rat::zero(); n]; r];
    for i in 0..r {
        for c in 0..n {
            let mut acc = Rat::zero();
            for j in 0..r {
                acc += ginv[i][j] * Rat::from_integer(simple[j].twice[c]);
            }
            m[i][c] = acc;
        }
    }
    m
}

/// Gauss–Jordan inversion over exact rationals.
fn invert(mut a: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::from_integer(1) } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&row| !a[row][col].is_zero())
            .expect("Gram matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[row][j] -= f * ac;
                    inv[row][j] -= f * ic;
                }
            }
        }
    }
    inv
}

/// Integer coefficients of `r` over `simple`, or `None` if `r` is not an
/// integer combination (checked by recomposition).
fn apply_solver(solver: &[Vec<Rat>], simple: &[Root], r: &Root) -> Option<Vec<i64>> {
    let mut coeffs = Vec::with_capacity(solver.len());
    for row in solver {
        let mut acc = Rat::zero();
        for (m, &x) in row.iter().zip(&r.twice) {
            acc += *m * Rat::from_integer(x);
        }
        if !acc.is_integer() {
            return None;
        }
        coeffs.push(acc.to_integer());
    }
    // Consistency: the solver is only a left inverse, so recheck S·c = r.
    let n = r.twice.len();
    let mut back = vec![0i64; n];
    for (c, s) in coeffs.iter().zip(simple) {
        for (b, &x) in back.iter_mut().zip(&s.twice) {
            *b += c * x;
        }
    }
    if back == r.twice {
        Some(coeffs)
    } else {
        None
    }
}
