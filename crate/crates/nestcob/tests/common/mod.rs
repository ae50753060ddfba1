//! Shared test support: a deterministic term generator and the
//! brute-force reduced-cell oracle, independent of the rewriter.

// each test binary compiles its own copy; not all of them use everything
#![allow(dead_code)]

use nestcob::{SpaceExpr, ThomStructure};
use std::collections::BTreeMap;

/// xorshift64* — deterministic, dependency-free.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Random term of depth at most `depth`. With `spheres_only`, leaves are
/// spheres and the point, so the cell oracle applies. Branching is kept
/// moderate (arity 3 is rare) so the exponential worst cases of
/// distribution stay in the tail.
pub fn random_term(rng: &mut Rng, depth: u32, spheres_only: bool) -> SpaceExpr {
    if depth == 0 {
        return match rng.below(if spheres_only { 5 } else { 7 }) {
            0 => SpaceExpr::Point,
            1..=4 => SpaceExpr::Sphere(rng.below(4)),
            5 => SpaceExpr::atom("X", rng.below(4) as i64 - 1),
            _ => SpaceExpr::atom("Y", rng.below(3) as i64),
        };
    }
    let arity = |rng: &mut Rng| 2 + (rng.below(5) == 0) as usize;
    match rng.below(10) {
        0..=1 => {
            let n = arity(rng);
            SpaceExpr::Wedge(
                (0..n)
                    .map(|_| random_term(rng, depth - 1, spheres_only))
                    .collect(),
            )
        }
        2..=3 => {
            let n = arity(rng);
            SpaceExpr::Smash(
                (0..n)
                    .map(|_| random_term(rng, depth - 1, spheres_only))
                    .collect(),
            )
        }
        4..=5 => SpaceExpr::susp(random_term(rng, depth - 1, spheres_only)),
        6 => SpaceExpr::plus(random_term(rng, depth - 1, spheres_only)),
        _ => random_term(rng, 0, spheres_only),
    }
}

pub fn random_structure(rng: &mut Rng, depth: u32) -> ThomStructure {
    if depth == 0 || rng.below(3) == 0 {
        let rank = 1 + rng.below(4);
        return match rng.below(2) {
            0 => ThomStructure::Framed(rank),
            _ => ThomStructure::generic("t", rank, rng.below(rank + 1)),
        };
    }
    let n = 2 + rng.below(2) as usize;
    ThomStructure::Product((0..n).map(|_| random_structure(rng, depth - 1)).collect())
}

/// Multiset of reduced cell dimensions, as dimension -> count.
///
/// Rules: a sphere contributes one cell in its dimension, a disjoint
/// basepoint adds one 0-cell, suspension shifts by one, wedge takes the
/// union, smash takes the sumset. Terms containing atoms have no cell
/// model and yield `None`.
pub fn cell_dims(e: &SpaceExpr) -> Option<BTreeMap<i64, u128>> {
    match e {
        SpaceExpr::Point => Some(BTreeMap::new()),
        SpaceExpr::Sphere(n) => Some(BTreeMap::from([(*n as i64, 1)])),
        SpaceExpr::Atom { .. } => None,
        SpaceExpr::Plus(x) => {
            let mut cells = cell_dims(x)?;
            *cells.entry(0).or_insert(0) += 1;
            Some(cells)
        }
        SpaceExpr::Susp(x) => Some(cell_dims(x)?.into_iter().map(|(d, c)| (d + 1, c)).collect()),
        SpaceExpr::Wedge(cs) => {
            let mut cells = BTreeMap::new();
            for c in cs {
                for (d, count) in cell_dims(c)? {
                    *cells.entry(d).or_insert(0) += count;
                }
            }
            Some(cells)
        }
        SpaceExpr::Smash(cs) => {
            let mut acc = BTreeMap::from([(0i64, 1u128)]);
            for c in cs {
                let next = cell_dims(c)?;
                let mut out = BTreeMap::new();
                for (&da, &ca) in &acc {
                    for (&db, &cb) in &next {
                        *out.entry(da + db).or_insert(0) += ca * cb;
                    }
                }
                acc = out;
            }
            Some(acc)
        }
    }
}
