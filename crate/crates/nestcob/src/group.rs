//! Finitely generated abelian groups in invariant-factor normal form.
//!
//! Values are either fully known (free rank plus a divisibility chain of
//! torsion coefficients) or symbolic placeholders for homotopy groups the
//! table cannot resolve. Sums involving a symbolic term stay symbolic and
//! are never simplified across the unknown.

use std::fmt;

/// A finitely generated abelian group, or a symbolic stand-in for one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FgAbelianGroup {
    /// `Z^rank (+) Z/t1 (+) ... (+) Z/tk` with `t1 | t2 | ... | tk`, all `ti >= 2`.
    Known { rank: u64, torsion: Vec<u64> },
    /// An unevaluated group, e.g. `π_9(S^2)`.
    Symbolic(String),
    /// An ordered sum mixing known and symbolic parts.
    SymbolicSum(Vec<FgAbelianGroup>),
}

impl FgAbelianGroup {
    pub fn zero() -> Self {
        FgAbelianGroup::Known {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: u64) -> Self {
        FgAbelianGroup::Known {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        normal_form(0, &[order])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, FgAbelianGroup::Known { rank: 0, torsion } if torsion.is_empty())
    }

    pub fn is_symbolic(&self) -> bool {
        !matches!(self, FgAbelianGroup::Known { .. })
    }

    /// JSON encoding: `{"rank": r, "torsion": [..]}`, `{"symbolic": "label"}`
    /// or `{"sum": [..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            FgAbelianGroup::Known { rank, torsion } => serde_json::json!({
                "rank": rank,
                "torsion": torsion,
            }),
            FgAbelianGroup::Symbolic(label) => serde_json::json!({ "symbolic": label }),
            FgAbelianGroup::SymbolicSum(parts) => {
                let parts: Vec<_> = parts.iter().map(|p| p.to_json()).collect();
                serde_json::json!({ "sum": parts })
            }
        }
    }
}

/// Factor `n >= 2` into `(prime, exponent)` pairs by trial division.
fn prime_powers(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Bring `(rank, torsion)` into invariant-factor normal form.
///
/// Torsion entries are split into prime powers and regrouped so the
/// resulting chain satisfies `t1 | t2 | ... | tk`. Entries equal to 1 are
/// dropped; an entry of 0 would denote a free summand and is not accepted.
pub fn normal_form(rank: u64, torsion: &[u64]) -> FgAbelianGroup {
    // exponents per prime, one list entry per cyclic p-power summand
    let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for &t in torsion {
        assert!(t >= 2, "torsion coefficients must be >= 2, got {t}");
        for (p, e) in prime_powers(t) {
            match by_prime.iter_mut().find(|(q, _)| *q == p) {
                Some((_, es)) => es.push(e),
                None => by_prime.push((p, vec![e])),
            }
        }
    }
    let slots = by_prime.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
    for (_, es) in &mut by_prime {
        es.sort_unstable_by(|a, b| b.cmp(a));
    }
    // slot 0 collects the largest exponent of every prime, so the factors
    // come out divisibility-ordered once reversed
    let mut factors = Vec::with_capacity(slots);
    for slot in 0..slots {
        let mut f = 1u64;
        for (p, es) in &by_prime {
            if let Some(&e) = es.get(slot) {
                f *= p.pow(e);
            }
        }
        factors.push(f);
    }
    factors.reverse();
    FgAbelianGroup::Known {
        rank,
        torsion: factors,
    }
}

/// Direct sum. Known parts combine and renormalize; a symbolic operand
/// turns the result into an order-preserving [`FgAbelianGroup::SymbolicSum`].
pub fn direct_sum(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    use FgAbelianGroup::*;
    match (a, b) {
        (
            Known {
                rank: r1,
                torsion: t1,
            },
            Known {
                rank: r2,
                torsion: t2,
            },
        ) => {
            let mut torsion = t1.clone();
            torsion.extend_from_slice(t2);
            normal_form(r1 + r2, &torsion)
        }
        _ => {
            let mut parts = Vec::new();
            flatten_into(a, &mut parts);
            flatten_into(b, &mut parts);
            match parts.len() {
                0 => FgAbelianGroup::zero(),
                1 => parts.pop().unwrap(),
                _ => SymbolicSum(parts),
            }
        }
    }
}

fn flatten_into(g: &FgAbelianGroup, out: &mut Vec<FgAbelianGroup>) {
    match g {
        FgAbelianGroup::SymbolicSum(parts) => {
            for p in parts {
                flatten_into(p, out);
            }
        }
        g if g.is_zero() => {}
        g => out.push(g.clone()),
    }
}

/// Sum a sequence of groups, starting from zero.
pub fn direct_sum_all<'a, I: IntoIterator<Item = &'a FgAbelianGroup>>(parts: I) -> FgAbelianGroup {
    parts
        .into_iter()
        .fold(FgAbelianGroup::zero(), |acc, g| direct_sum(&acc, g))
}

/// Canonical rendering: `Z^r (+) Z/t1 (+) ...`, with `0` for the zero group.
pub fn render(g: &FgAbelianGroup) -> String {
    g.to_string()
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FgAbelianGroup::Known { rank, torsion } => {
                if *rank == 0 && torsion.is_empty() {
                    return write!(f, "0");
                }
                let mut parts = Vec::new();
                match rank {
                    0 => {}
                    1 => parts.push("Z".to_string()),
                    r => parts.push(format!("Z^{r}")),
                }
                for t in torsion {
                    parts.push(format!("Z/{t}"));
                }
                write!(f, "{}", parts.join(" (+) "))
            }
            FgAbelianGroup::Symbolic(label) => write!(f, "{label}"),
            FgAbelianGroup::SymbolicSum(parts) => {
                let rendered: Vec<_> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", rendered.join(" (+) "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chinese_remainder_regroups() {
        assert_eq!(
            normal_form(0, &[2, 3]),
            FgAbelianGroup::Known {
                rank: 0,
                torsion: vec![6]
            }
        );
    }

    #[test]
    fn free_part_untouched() {
        assert_eq!(
            normal_form(1, &[]),
            FgAbelianGroup::Known {
                rank: 1,
                torsion: vec![]
            }
        );
    }

    /// Independent check of `normal_form(0, [2,4,3]) = Z/2 (+) Z/12`: count
    /// elements of every order in both presentations by enumeration.
    #[test]
    fn invariant_factors_by_element_order_count() {
        fn order_census(factors: &[u64]) -> Vec<(u64, u64)> {
            let total: u64 = factors.iter().product();
            let mut census: Vec<(u64, u64)> = Vec::new();
            let mut tuple = vec![0u64; factors.len()];
            for _ in 0..total {
                let ord = tuple
                    .iter()
                    .zip(factors)
                    .map(|(&x, &m)| m / gcd(x, m))
                    .fold(1u64, lcm);
                match census.iter_mut().find(|(o, _)| *o == ord) {
                    Some((_, c)) => *c += 1,
                    None => census.push((ord, 1)),
                }
                // increment mixed-radix counter
                for (x, &m) in tuple.iter_mut().zip(factors) {
                    *x += 1;
                    if *x < m {
                        break;
                    }
                    *x = 0;
                }
            }
            census.sort_unstable();
            census
        }
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a.max(1)
            } else {
                gcd(b, a % b)
            }
        }
        fn lcm(a: u64, b: u64) -> u64 {
            a / gcd(a, b) * b
        }

        let got = normal_form(0, &[2, 4, 3]);
        assert_eq!(
            got,
            FgAbelianGroup::Known {
                rank: 0,
                torsion: vec![2, 12]
            }
        );
        assert_eq!(order_census(&[2, 4, 3]), order_census(&[2, 12]));
    }

    #[test]
    fn direct_sum_known() {
        let z_plus_z2 = normal_form(1, &[2]);
        let z2 = normal_form(0, &[2]);
        assert_eq!(
            direct_sum(&z_plus_z2, &z2),
            FgAbelianGroup::Known {
                rank: 1,
                torsion: vec![2, 2]
            }
        );
    }

    #[test]
    fn zero_is_identity() {
        let g = normal_form(2, &[4]);
        assert_eq!(direct_sum(&FgAbelianGroup::zero(), &g), g);
        assert_eq!(direct_sum(&g, &FgAbelianGroup::zero()), g);
        let s = FgAbelianGroup::Symbolic("π_9(S^4)".into());
        assert_eq!(direct_sum(&FgAbelianGroup::zero(), &s), s);
    }

    #[test]
    fn symbolic_passthrough_preserves_order() {
        let z2 = normal_form(0, &[2]);
        let s = FgAbelianGroup::Symbolic("π_9(S^4)".into());
        let sum = direct_sum(&z2, &s);
        assert_eq!(
            sum,
            FgAbelianGroup::SymbolicSum(vec![z2.clone(), s.clone()])
        );
        // no simplification across the symbolic term
        let sum2 = direct_sum(&sum, &z2);
        assert_eq!(sum2, FgAbelianGroup::SymbolicSum(vec![z2.clone(), s, z2]));
    }

    #[test]
    fn rendering() {
        assert_eq!(render(&FgAbelianGroup::free(2)), "Z^2");
        assert_eq!(render(&FgAbelianGroup::zero()), "0");
        assert_eq!(render(&normal_form(1, &[2, 24])), "Z (+) Z/2 (+) Z/24");
    }
}
