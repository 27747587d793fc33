use crate::rootsys::Family;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("family {family} requires rank {min_rank} or higher, got {rank}")]
    InvalidRank {
        family: Family,
        min_rank: u32,
        rank: u32,
    },
    #[error("family {family} has fixed rank {fixed}, got {rank}")]
    FixedRank {
        family: Family,
        fixed: u32,
        rank: u32,
    },
    #[error("cannot parse `{0}` as a simple type (expected e.g. A4, D5, E7, F4, G2)")]
    ParseType(String),
    #[error("root {0} does not belong to the {1} root system")]
    NotARoot(String, String),
    #[error("parabolic index {index} out of range 1..={rank}")]
    ParabolicIndex { index: usize, rank: u32 },
    #[error("no simple Lie algebra of rank 0")]
    RankZeroSimple,
    #[error("invalid eigenvalue pattern: {0}")]
    InvalidPattern(String),
    #[error("{0} is not a classical family")]
    NotClassical(Family),
    #[error("{0} is not an exceptional family")]
    NotExceptional(Family),
    #[error("torus dimension {t_dim} out of range 1..={rank} for {family}")]
    TorusDimRange {
        family: Family,
        t_dim: u32,
        rank: u32,
    },
    #[error("distinct-eigenvalue count k={k} out of range 1..={rank}")]
    EigenClassRange { k: u32, rank: u32 },
    #[error("semisimple product must have at least one factor")]
    EmptyProduct,
}

pub type Result<T> = std::result::Result<T, Error>;
