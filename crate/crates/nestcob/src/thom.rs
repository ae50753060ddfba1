//! Normal structures and their Thom spaces.
//!
//! A structure of rank `d` is a fibration over `BO(d)` classifying the
//! normal bundle of a submanifold of codimension `d`. A framed direction
//! is a factorization through `BO(d-1)`: it splits a trivial line off the
//! normal bundle and turns the Thom space into a suspension. Fully framed
//! structures have sphere Thom spaces; products have the smash of their
//! factors' Thom spaces.

use crate::space::{normalize, SpaceExpr};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ThomStructure {
    /// The trivial structure of rank `d`; Thom space `S^d`.
    Framed(u64),
    /// A named fibration `B -> BO(rank)` factoring through
    /// `BO(rank - framed_directions)`. The base connectivity is recorded
    /// but not used when bounding the Thom space connectivity.
    Generic {
        name: String,
        rank: u64,
        base_connectivity: u64,
        framed_directions: u64,
    },
    /// Product structure; rank is the sum of the factor ranks.
    Product(Vec<ThomStructure>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThomError {
    #[error("structures of rank 0 are not supported")]
    RankZero,
    #[error("framed directions ({fdirs}) exceed the rank ({rank})")]
    TooManyFramedDirections { fdirs: u64, rank: u64 },
}

impl ThomStructure {
    pub fn generic(name: impl Into<String>, rank: u64, framed_directions: u64) -> ThomStructure {
        ThomStructure::Generic {
            name: name.into(),
            rank,
            base_connectivity: 0,
            framed_directions,
        }
    }

    pub fn product(factors: Vec<ThomStructure>) -> ThomStructure {
        match factors.len() {
            1 => factors.into_iter().next().unwrap(),
            _ => ThomStructure::Product(factors),
        }
    }

    pub fn rank(&self) -> u64 {
        match self {
            ThomStructure::Framed(d) => *d,
            ThomStructure::Generic { rank, .. } => *rank,
            ThomStructure::Product(fs) => fs.iter().map(ThomStructure::rank).sum(),
        }
    }

    /// Trivial summands split off the normal bundle. `Framed(d)` counts as
    /// `d`; every framed direction of a product factor suspends the smash.
    pub fn framed_directions(&self) -> u64 {
        match self {
            ThomStructure::Framed(d) => *d,
            ThomStructure::Generic {
                framed_directions, ..
            } => *framed_directions,
            ThomStructure::Product(fs) => fs.iter().map(ThomStructure::framed_directions).sum(),
        }
    }

    pub fn is_fully_framed(&self) -> bool {
        match self {
            ThomStructure::Framed(_) => true,
            ThomStructure::Generic {
                rank,
                framed_directions,
                ..
            } => framed_directions == rank,
            ThomStructure::Product(fs) => fs.iter().all(ThomStructure::is_fully_framed),
        }
    }

    fn validate(&self) -> Result<(), ThomError> {
        match self {
            ThomStructure::Framed(_) => Ok(()),
            ThomStructure::Generic {
                rank,
                framed_directions,
                ..
            } => {
                if framed_directions > rank {
                    Err(ThomError::TooManyFramedDirections {
                        fdirs: *framed_directions,
                        rank: *rank,
                    })
                } else {
                    Ok(())
                }
            }
            ThomStructure::Product(fs) => fs.iter().try_for_each(ThomStructure::validate),
        }
    }
}

impl fmt::Display for ThomStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThomStructure::Framed(d) => write!(f, "fr:{d}"),
            ThomStructure::Generic {
                name,
                rank,
                framed_directions,
                ..
            } => {
                write!(f, "{name}:{rank}:{framed_directions}")
            }
            ThomStructure::Product(fs) => {
                let parts: Vec<_> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "({})", parts.join(" x "))
            }
        }
    }
}

/// The Thom space of a structure, as a normalized term.
///
/// * `Framed(d) -> S^d`
/// * a generic structure with `f` framed directions contributes an atom
///   for the Thom space of the factored rank-`(d-f)` structure, suspended
///   `f` times; the atom's connectivity is `d - f - 1` (one fewer than the
///   rank of the remaining bundle, assuming a connected base)
/// * products smash their factors
pub fn thom_space(s: &ThomStructure) -> Result<SpaceExpr, ThomError> {
    s.validate()?;
    if s.rank() == 0 {
        return Err(ThomError::RankZero);
    }
    Ok(normalize(&thom_space_unchecked(s)))
}

/// Space-level shadow of the Thom spectrum of a stable structure: framed
/// parts contribute spheres (shifts), generic parts contribute atoms.
/// Rank 0 is legal here — `Framed(0)` stands for the sphere spectrum.
pub fn spectrum_shadow(s: &ThomStructure) -> SpaceExpr {
    crate::space::normalize(&thom_space_unchecked(s))
}

fn thom_space_unchecked(s: &ThomStructure) -> SpaceExpr {
    match s {
        ThomStructure::Framed(d) => SpaceExpr::Sphere(*d),
        ThomStructure::Generic {
            name,
            rank,
            framed_directions,
            ..
        } => {
            if framed_directions == rank {
                return SpaceExpr::Sphere(*rank);
            }
            let reduced = if *framed_directions > 0 {
                format!("Th({name}~)")
            } else {
                format!("Th({name})")
            };
            let conn = (*rank - *framed_directions) as i64 - 1;
            let mut space = SpaceExpr::atom(reduced, conn);
            for _ in 0..*framed_directions {
                space = SpaceExpr::susp(space);
            }
            space
        }
        ThomStructure::Product(fs) => {
            SpaceExpr::smash(fs.iter().map(thom_space_unchecked).collect())
        }
    }
}

/// Parse the CLI structure syntax: `fr:<rank>` or `<name>:<rank>:<fdirs>`.
pub fn parse_structure(input: &str) -> Result<ThomStructure, StructureParseError> {
    let input = input.trim();
    if input.is_empty() {
        return Err(StructureParseError::Empty);
    }
    let parts: Vec<&str> = input.split(':').collect();
    let parse_num = |s: &str| -> Result<u64, StructureParseError> {
        let n: u64 = s
            .trim()
            .parse()
            .map_err(|_| StructureParseError::BadNumber(s.trim().to_string()))?;
        if n > 1_000_000 {
            return Err(StructureParseError::BadNumber(s.trim().to_string()));
        }
        Ok(n)
    };
    match parts.as_slice() {
        ["fr", rank] => Ok(ThomStructure::Framed(parse_num(rank)?)),
        [name, rank, fdirs] => {
            let name = name.trim();
            if name.is_empty() || name == "fr" {
                return Err(StructureParseError::BadName(name.to_string()));
            }
            let rank = parse_num(rank)?;
            let fdirs = parse_num(fdirs)?;
            if fdirs > rank {
                return Err(StructureParseError::FramedDirectionsExceedRank { fdirs, rank });
            }
            Ok(ThomStructure::generic(name, rank, fdirs))
        }
        _ => Err(StructureParseError::BadShape(input.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureParseError {
    #[error("empty structure")]
    Empty,
    #[error("expected fr:<rank> or <name>:<rank>:<fdirs>, got {0:?}")]
    BadShape(String),
    #[error("bad number {0:?} in structure")]
    BadNumber(String),
    #[error("bad structure name {0:?}")]
    BadName(String),
    #[error("framed directions ({fdirs}) exceed the rank ({rank})")]
    FramedDirectionsExceedRank { fdirs: u64, rank: u64 },
}
