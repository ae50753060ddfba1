//! Exhaustive rewriting of space terms to normal form.
//!
//! The rules:
//!
//! * `Susp(X) -> X ^ S1`
//! * smash distributes over wedge
//! * sphere factors of a smash merge: `S^a ^ S^b -> S^{a+b}`
//! * `S0` is dropped from a smash with other factors
//! * `Plus(X) ^ S^k ^ R -> (X ^ S^k ^ R) v (S^k ^ R)` for `k >= 1`
//! * `Plus(pt) -> S0`
//! * `pt` absorbs a smash and vanishes from a wedge
//! * nested wedges and smashes flatten
//!
//! `Plus` factors with no sphere of dimension >= 1 beside them are left in
//! place; downstream consumers treat such normal forms as non-spherical.
//!
//! Every applied rule strictly decreases the measure computed by
//! [`measure`]: a polynomial interpretation of the term paired with its
//! node count, compared lexicographically. The interpretation handles the
//! duplicating rules (distribution and `Plus` elimination), the node count
//! covers flattening, which the interpretation maps to an equality. Debug
//! builds assert the decrease at every rewrite site.

use super::SpaceExpr;
use num_bigint::BigUint;

/// Redex-selection order for one rewrite step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Rewrite inside children before trying rules at the root.
    InnermostFirst,
    /// Try rules at the root before descending.
    OutermostFirst,
}

/// Polynomial interpretation plus node count; strictly decreases on every
/// applied rule under either strategy.
pub(crate) fn measure(e: &SpaceExpr) -> (BigUint, u64) {
    (interpretation(e), e.node_count())
}

fn interpretation(e: &SpaceExpr) -> BigUint {
    let two = BigUint::from(2u32);
    match e {
        SpaceExpr::Point | SpaceExpr::Sphere(_) | SpaceExpr::Atom { .. } => two,
        SpaceExpr::Wedge(cs) => {
            cs.iter().map(interpretation).sum::<BigUint>() + BigUint::from(1u32)
        }
        SpaceExpr::Smash(cs) => cs.iter().map(interpretation).product(),
        SpaceExpr::Susp(x) => interpretation(x) * &two + BigUint::from(1u32),
        SpaceExpr::Plus(x) => interpretation(x) * &two + &two,
    }
}

/// Local form of the termination check. Every context is strictly
/// increasing in the interpretation of the hole and additive in node
/// count, so a lexicographic decrease at the rewrite site implies one for
/// the whole term.
#[cfg(debug_assertions)]
fn assert_local_decrease(rule: &str, redex: &SpaceExpr, reduct: &SpaceExpr) {
    let before = measure(redex);
    let after = measure(reduct);
    assert!(
        after < before,
        "rule {rule} did not decrease the termination measure: {redex} -> {reduct}"
    );
}

/// Try the rules at the root of `e`. Returns the reduct and the rule name.
fn rewrite_root(e: &SpaceExpr) -> Option<(SpaceExpr, &'static str)> {
    let hit = rewrite_root_inner(e);
    #[cfg(debug_assertions)]
    if let Some((reduct, rule)) = &hit {
        assert_local_decrease(rule, e, reduct);
    }
    hit
}

fn rewrite_root_inner(e: &SpaceExpr) -> Option<(SpaceExpr, &'static str)> {
    match e {
        SpaceExpr::Wedge(cs) => {
            if cs.iter().any(|c| matches!(c, SpaceExpr::Point)) {
                let rest: Vec<_> = cs
                    .iter()
                    .filter(|c| !matches!(c, SpaceExpr::Point))
                    .cloned()
                    .collect();
                return Some((SpaceExpr::wedge(rest), "wedge-unit"));
            }
            if cs.iter().any(|c| matches!(c, SpaceExpr::Wedge(_))) {
                let mut flat = Vec::with_capacity(cs.len());
                for c in cs {
                    match c {
                        SpaceExpr::Wedge(inner) => flat.extend(inner.iter().cloned()),
                        other => flat.push(other.clone()),
                    }
                }
                return Some((SpaceExpr::Wedge(flat), "wedge-flatten"));
            }
            None
        }
        SpaceExpr::Smash(cs) => {
            if cs.iter().any(|c| matches!(c, SpaceExpr::Point)) {
                return Some((SpaceExpr::Point, "smash-zero"));
            }
            if cs.iter().any(|c| matches!(c, SpaceExpr::Smash(_))) {
                let mut flat = Vec::with_capacity(cs.len());
                for c in cs {
                    match c {
                        SpaceExpr::Smash(inner) => flat.extend(inner.iter().cloned()),
                        other => flat.push(other.clone()),
                    }
                }
                return Some((SpaceExpr::Smash(flat), "smash-flatten"));
            }
            if let Some(i) = cs.iter().position(|c| matches!(c, SpaceExpr::Wedge(_))) {
                let SpaceExpr::Wedge(branches) = &cs[i] else {
                    unreachable!()
                };
                let clauses = branches
                    .iter()
                    .map(|b| {
                        let mut factors = cs.clone();
                        factors[i] = b.clone();
                        SpaceExpr::smash(factors)
                    })
                    .collect();
                return Some((SpaceExpr::Wedge(clauses), "smash-distribute"));
            }
            let spheres: Vec<usize> = cs
                .iter()
                .enumerate()
                .filter_map(|(i, c)| matches!(c, SpaceExpr::Sphere(_)).then_some(i))
                .collect();
            if spheres.len() >= 2 {
                let (i, j) = (spheres[0], spheres[1]);
                let (SpaceExpr::Sphere(a), SpaceExpr::Sphere(b)) = (&cs[i], &cs[j]) else {
                    unreachable!()
                };
                let merged = SpaceExpr::Sphere(a + b);
                let mut factors = cs.clone();
                factors[i] = merged;
                factors.remove(j);
                return Some((SpaceExpr::smash(factors), "sphere-merge"));
            }
            if let Some(i) = cs.iter().position(|c| matches!(c, SpaceExpr::Sphere(0))) {
                let mut factors = cs.clone();
                factors.remove(i);
                return Some((SpaceExpr::smash(factors), "sphere-unit"));
            }
            let has_susp_factor = cs
                .iter()
                .any(|c| matches!(c, SpaceExpr::Sphere(n) if *n >= 1));
            if has_susp_factor {
                if let Some(i) = cs.iter().position(|c| matches!(c, SpaceExpr::Plus(_))) {
                    let SpaceExpr::Plus(x) = &cs[i] else {
                        unreachable!()
                    };
                    let mut with = cs.clone();
                    with[i] = (**x).clone();
                    let mut without = cs.clone();
                    without.remove(i);
                    return Some((
                        SpaceExpr::Wedge(vec![SpaceExpr::smash(with), SpaceExpr::smash(without)]),
                        "plus-eliminate",
                    ));
                }
            }
            None
        }
        SpaceExpr::Susp(x) => Some((
            SpaceExpr::Smash(vec![(**x).clone(), SpaceExpr::Sphere(1)]),
            "susp-as-smash",
        )),
        SpaceExpr::Plus(x) if matches!(**x, SpaceExpr::Point) => {
            Some((SpaceExpr::Sphere(0), "plus-point"))
        }
        _ => None,
    }
}

/// One rewrite step anywhere in the term, per the given strategy.
fn step(e: &SpaceExpr, strategy: Strategy) -> Option<(SpaceExpr, &'static str)> {
    if strategy == Strategy::OutermostFirst {
        if let Some(hit) = rewrite_root(e) {
            return Some(hit);
        }
    }
    let in_child = match e {
        SpaceExpr::Wedge(cs) | SpaceExpr::Smash(cs) => cs.iter().enumerate().find_map(|(i, c)| {
            step(c, strategy).map(|(c2, rule)| {
                let mut cs2 = cs.clone();
                cs2[i] = c2;
                let rebuilt = match e {
                    SpaceExpr::Wedge(_) => SpaceExpr::Wedge(cs2),
                    _ => SpaceExpr::Smash(cs2),
                };
                (rebuilt, rule)
            })
        }),
        SpaceExpr::Susp(x) => step(x, strategy).map(|(x2, rule)| (SpaceExpr::susp(x2), rule)),
        SpaceExpr::Plus(x) => step(x, strategy).map(|(x2, rule)| (SpaceExpr::plus(x2), rule)),
        _ => None,
    };
    if in_child.is_some() {
        return in_child;
    }
    if strategy == Strategy::InnermostFirst {
        return rewrite_root(e);
    }
    None
}

const STEP_FUEL: u64 = 10_000_000;

/// Rebuild through the arity-checking constructors, so that wedges and
/// smashes built by hand with fewer than two children collapse before
/// rewriting starts.
fn sanitize(e: &SpaceExpr) -> SpaceExpr {
    match e {
        SpaceExpr::Wedge(cs) => SpaceExpr::wedge(cs.iter().map(sanitize).collect()),
        SpaceExpr::Smash(cs) => SpaceExpr::smash(cs.iter().map(sanitize).collect()),
        SpaceExpr::Susp(x) => SpaceExpr::susp(sanitize(x)),
        SpaceExpr::Plus(x) => SpaceExpr::plus(sanitize(x)),
        leaf => leaf.clone(),
    }
}

/// Normalize under an explicit strategy. Both strategies reach the same
/// canonical form; this entry point exists so tests can compare them.
pub fn normalize_with(e: &SpaceExpr, strategy: Strategy) -> SpaceExpr {
    let mut current = sanitize(e);
    let mut fuel = STEP_FUEL;
    while let Some((next, _rule)) = step(&current, strategy) {
        current = next;
        fuel -= 1;
        assert!(fuel > 0, "rewriting exceeded the step budget");
    }
    canonicalize(current)
}

/// Rewrite exhaustively and order factors and clauses canonically.
pub fn normalize(e: &SpaceExpr) -> SpaceExpr {
    normalize_with(e, Strategy::InnermostFirst)
}

/// Recursively sort smash factors and wedge clauses into the fixed order.
fn canonicalize(e: SpaceExpr) -> SpaceExpr {
    match e {
        SpaceExpr::Wedge(cs) => {
            let mut cs: Vec<_> = cs.into_iter().map(canonicalize).collect();
            cs.sort_by(super::clause_cmp);
            SpaceExpr::Wedge(cs)
        }
        SpaceExpr::Smash(cs) => {
            let mut cs: Vec<_> = cs.into_iter().map(canonicalize).collect();
            cs.sort_by(super::factor_cmp);
            SpaceExpr::Smash(cs)
        }
        SpaceExpr::Susp(x) => SpaceExpr::susp(canonicalize(*x)),
        SpaceExpr::Plus(x) => SpaceExpr::plus(canonicalize(*x)),
        leaf => leaf,
    }
}
