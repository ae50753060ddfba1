//! Systems of basic Whitehead products.
//!
//! Weight-1 products are the generators `i1 < i2 < ... < ig`. A product of
//! weight `w > 1` is a bracket `[a,b]` with `weight(a) + weight(b) = w`,
//! `a < b` in the system order, and, when `b = [c,d]`, additionally
//! `c <= a`. Products of equal weight are ordered by a fixed policy (left
//! factor weight ascending, then the serialized bracket), and every weight
//! block is greater than all lower ones. The block sizes agree with the
//! Witt numbers of the free Lie algebra, which [`witt_count`] computes
//! independently via the Möbius sum.

use crate::space::{normalize, SpaceExpr};
use std::fmt;
use std::sync::Arc;

/// Hard bound on the requested weight; enumeration is exponential in it.
pub const DEFAULT_WEIGHT_CAP: u32 = 16;

/// Hard bound on the generator count, chosen so every Witt number the
/// caps can ask for stays inside `u64`.
pub const GENERATOR_CAP: u32 = 16;

/// Bound on the total number of enumerated products.
const PRODUCT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Generator(u32),
    Bracket(Arc<BasicProduct>, Arc<BasicProduct>),
}

/// A basic Whitehead product over `g` generators.
///
/// Carries its weight, its multidegree (how often each generator occurs)
/// and its position in the enumerated system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicProduct {
    node: Node,
    weight: u32,
    multidegree: Vec<u32>,
    /// Index inside its weight block, assigned when the block is frozen.
    pos: u32,
    /// Cached `[a,b]` serialization; the ordering policy sorts by it.
    rendered: String,
}

impl BasicProduct {
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn multidegree(&self) -> &[u32] {
        &self.multidegree
    }

    /// 1-based generator index for weight-1 products.
    pub fn generator_index(&self) -> Option<u32> {
        match &self.node {
            Node::Generator(i) => Some(*i),
            Node::Bracket(..) => None,
        }
    }

    pub fn factors(&self) -> Option<(&BasicProduct, &BasicProduct)> {
        match &self.node {
            Node::Generator(_) => None,
            Node::Bracket(a, b) => Some((a, b)),
        }
    }

    /// System order: weight first, then position inside the weight block.
    fn system_key(&self) -> (u32, u32) {
        (self.weight, self.pos)
    }
}

impl fmt::Display for BasicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rendered)
    }
}

/// How products of equal weight are ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderPolicy {
    /// Left factor weight ascending, then the serialized bracket string.
    #[default]
    LeftWeightThenBracket,
}

impl fmt::Display for OrderPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderPolicy::LeftWeightThenBracket => write!(f, "left-weight,bracket"),
        }
    }
}

/// All basic products on `g` generators up to a maximal weight, grouped
/// and ordered by weight.
#[derive(Debug, Clone)]
pub struct ProductSystem {
    generators: u32,
    max_weight: u32,
    blocks: Vec<Vec<Arc<BasicProduct>>>,
    policy: OrderPolicy,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HallError {
    #[error("need at least one generator")]
    NoGenerators,
    #[error("{requested} generators exceed the cap {cap}")]
    GeneratorCapExceeded { requested: u32, cap: u32 },
    #[error("maximal weight must be >= 1")]
    ZeroWeight,
    #[error("weight {requested} exceeds the cap {cap}")]
    WeightCapExceeded { requested: u32, cap: u32 },
    #[error("system would exceed {cap} products")]
    TooManyProducts { cap: u64 },
}

impl ProductSystem {
    pub fn generators(&self) -> u32 {
        self.generators
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn policy(&self) -> OrderPolicy {
        self.policy
    }

    /// The block of products of the given weight (1-based).
    pub fn weight_block(&self, weight: u32) -> &[Arc<BasicProduct>] {
        &self.blocks[(weight - 1) as usize]
    }

    /// All products in system order.
    pub fn iter(&self) -> impl Iterator<Item = &Arc<BasicProduct>> {
        self.blocks.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Re-check the two bracket side conditions on every enumerated
    /// product; used by tests as a structural validity pass.
    pub fn validate(&self) -> bool {
        self.iter().all(|p| match p.factors() {
            None => true,
            Some((a, b)) => {
                let ordered = a.system_key() < b.system_key();
                let standard = match b.factors() {
                    None => true,
                    Some((c, _)) => c.system_key() <= a.system_key(),
                };
                ordered && standard
            }
        })
    }
}

/// Enumerate the system of basic products with the default weight cap.
pub fn generate_system(g: u32, max_weight: u32) -> Result<ProductSystem, HallError> {
    generate_system_with_cap(g, max_weight, DEFAULT_WEIGHT_CAP)
}

pub fn generate_system_with_cap(
    g: u32,
    max_weight: u32,
    weight_cap: u32,
) -> Result<ProductSystem, HallError> {
    if g == 0 {
        return Err(HallError::NoGenerators);
    }
    if g > GENERATOR_CAP {
        return Err(HallError::GeneratorCapExceeded {
            requested: g,
            cap: GENERATOR_CAP,
        });
    }
    if max_weight == 0 {
        return Err(HallError::ZeroWeight);
    }
    if max_weight > weight_cap {
        return Err(HallError::WeightCapExceeded {
            requested: max_weight,
            cap: weight_cap,
        });
    }
    let mut expected: u64 = 0;
    for w in 1..=max_weight {
        expected = expected.saturating_add(witt_count(g as u64, w as u64));
        if expected > PRODUCT_CAP {
            return Err(HallError::TooManyProducts { cap: PRODUCT_CAP });
        }
    }

    let mut blocks: Vec<Vec<Arc<BasicProduct>>> = Vec::with_capacity(max_weight as usize);
    let generators: Vec<Arc<BasicProduct>> = (1..=g)
        .map(|i| {
            let mut deg = vec![0u32; g as usize];
            deg[(i - 1) as usize] = 1;
            Arc::new(BasicProduct {
                node: Node::Generator(i),
                weight: 1,
                multidegree: deg,
                pos: i - 1,
                rendered: format!("i{i}"),
            })
        })
        .collect();
    blocks.push(generators);

    for w in 2..=max_weight {
        // candidates hold block references; Arcs are cloned only once the
        // block ordering is final. The Witt number is the exact final size.
        let mut candidates: Vec<(u32, &Arc<BasicProduct>, &Arc<BasicProduct>)> =
            Vec::with_capacity(witt_count(g as u64, w as u64) as usize);
        for u in 1..=(w / 2) {
            let v = w - u;
            let left_block = &blocks[(u - 1) as usize];
            let right_block = &blocks[(v - 1) as usize];
            for a in left_block {
                for b in right_block {
                    if u == v && a.system_key() >= b.system_key() {
                        continue;
                    }
                    // a < b holds for u < v because lower weight is smaller
                    let standard = match b.factors() {
                        None => true,
                        Some((c, _)) => c.system_key() <= a.system_key(),
                    };
                    if standard {
                        candidates.push((u, a, b));
                    }
                }
            }
        }
        // ordering by (left weight, "[a,b]") equals ordering by the tuple
        // (left weight, a.rendered, b.rendered): ',' is the smallest byte
        // in the serialization alphabet, so prefix cases agree
        candidates.sort_unstable_by(|x, y| {
            x.0.cmp(&y.0)
                .then_with(|| x.1.rendered.cmp(&y.1.rendered))
                .then_with(|| x.2.rendered.cmp(&y.2.rendered))
        });
        let block: Vec<Arc<BasicProduct>> = candidates
            .into_iter()
            .enumerate()
            .map(|(idx, (_, a, b))| {
                let multidegree = a
                    .multidegree
                    .iter()
                    .zip(&b.multidegree)
                    .map(|(x, y)| x + y)
                    .collect();
                let rendered = format!("[{},{}]", a.rendered, b.rendered);
                Arc::new(BasicProduct {
                    node: Node::Bracket(Arc::clone(a), Arc::clone(b)),
                    weight: w,
                    multidegree,
                    pos: idx as u32,
                    rendered,
                })
            })
            .collect();
        blocks.push(block);
    }

    Ok(ProductSystem {
        generators: g,
        max_weight,
        blocks,
        policy: OrderPolicy::LeftWeightThenBracket,
    })
}

/// Dimension of the weight-`w` part of the free Lie algebra on `g`
/// generators: `(1/w) * sum over d | w of mu(d) * g^(w/d)`.
pub fn witt_count(g: u64, w: u64) -> u64 {
    assert!(g >= 1 && w >= 1);
    let mut sum: i128 = 0;
    for d in 1..=w {
        if w.is_multiple_of(d) {
            let power = (g as i128)
                .checked_pow((w / d) as u32)
                .unwrap_or_else(|| panic!("Witt number overflows for g={g}, w={w}"));
            sum += i128::from(moebius(d)) * power;
        }
    }
    debug_assert!(sum >= 0 && sum % w as i128 == 0);
    u64::try_from(sum / w as i128)
        .unwrap_or_else(|_| panic!("Witt number overflows u64 for g={g}, w={w}"))
}

/// Möbius function by trial factorization.
fn moebius(mut n: u64) -> i8 {
    let mut primes = 0u32;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The smash power `Y_λ`: one copy of `Y[i]` for every occurrence of
/// generator `i` in `λ`, normalized.
pub fn smash_space(lambda: &BasicProduct, y: &[SpaceExpr]) -> SpaceExpr {
    assert_eq!(
        y.len(),
        lambda.multidegree.len(),
        "need one space per generator"
    );
    let mut factors = Vec::new();
    for (space, &count) in y.iter().zip(&lambda.multidegree) {
        for _ in 0..count {
            factors.push(space.clone());
        }
    }
    normalize(&SpaceExpr::smash(factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brackets(system: &ProductSystem, w: u32) -> Vec<String> {
        system
            .weight_block(w)
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn two_generator_low_weights_match_the_classical_lists() {
        let sys = generate_system(2, 4).unwrap();
        assert_eq!(brackets(&sys, 1), ["i1", "i2"]);
        assert_eq!(brackets(&sys, 2), ["[i1,i2]"]);
        assert_eq!(brackets(&sys, 3), ["[i1,[i1,i2]]", "[i2,[i1,i2]]"]);
        assert_eq!(
            brackets(&sys, 4),
            [
                "[i1,[i1,[i1,i2]]]",
                "[i2,[i1,[i1,i2]]]",
                "[i2,[i2,[i1,i2]]]"
            ]
        );
    }

    #[test]
    fn witt_numbers() {
        assert_eq!(witt_count(2, 1), 2);
        assert_eq!(witt_count(2, 2), 1);
        assert_eq!(witt_count(2, 3), 2);
        assert_eq!(witt_count(2, 6), 9); // (64 - 8 - 4 + 2)/6
        assert_eq!(witt_count(1, 1), 1);
        assert_eq!(witt_count(1, 5), 0);
        assert_eq!(witt_count(3, 3), 8);
    }

    #[test]
    fn block_sizes_match_witt_counts() {
        for g in 1..=4u32 {
            let sys = generate_system(g, 8).unwrap();
            for w in 1..=8u32 {
                assert_eq!(
                    sys.weight_block(w).len() as u64,
                    witt_count(g as u64, w as u64),
                    "g={g} w={w}"
                );
            }
        }
    }

    #[test]
    fn side_conditions_hold() {
        assert!(generate_system(3, 6).unwrap().validate());
    }

    #[test]
    fn deterministic() {
        let a = generate_system(3, 7).unwrap();
        let b = generate_system(3, 7).unwrap();
        let render = |s: &ProductSystem| s.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(render(&a), render(&b));
    }

    #[test]
    fn caps_are_enforced() {
        assert_eq!(
            generate_system(2, 17).unwrap_err(),
            HallError::WeightCapExceeded {
                requested: 17,
                cap: 16
            }
        );
        assert!(matches!(
            generate_system_with_cap(10, 16, 16).unwrap_err(),
            HallError::TooManyProducts { .. }
        ));
        assert_eq!(generate_system(0, 3).unwrap_err(), HallError::NoGenerators);
        assert_eq!(
            generate_system(17, 2).unwrap_err(),
            HallError::GeneratorCapExceeded {
                requested: 17,
                cap: 16
            }
        );
    }

    #[test]
    fn weight_and_multidegree_are_consistent() {
        let sys = generate_system(3, 6).unwrap();
        for p in sys.iter() {
            assert_eq!(p.weight(), p.multidegree().iter().sum::<u32>());
        }
    }

    #[test]
    fn smash_spaces() {
        use SpaceExpr::Sphere;
        let sys = generate_system(2, 3).unwrap();
        let y = [Sphere(2), Sphere(1)];
        let bracket = &sys.weight_block(2)[0];
        assert_eq!(smash_space(bracket, &y), Sphere(3));
        let gen2 = &sys.weight_block(1)[1];
        assert_eq!(smash_space(gen2, &y), Sphere(1));
        let w3 = &sys.weight_block(3)[0]; // [i1,[i1,i2]], multidegree (2,1)
        assert_eq!(smash_space(w3, &y), Sphere(5));
    }
}
