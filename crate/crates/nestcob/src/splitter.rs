//! Decomposition engines.
//!
//! [`hilton_milnor`] expands `π_m` of a wedge of suspensions into the sum
//! over basic Whitehead products, truncated by connectivity so the list is
//! finite. [`split_plus_smash`] handles `π_m(X_+ ^ Z)` two ways: the
//! unstable route rewrites `X_+ ^ Z` into `(X ^ Z) v Z` (this needs a
//! suspension factor in `Z`, i.e. a framed direction) and delegates to the
//! Hilton pass; the stable route splits off the retract summand and
//! evaluates with stable-stem semantics, where a sphere factor of
//! dimension `j` shifts the stem query by `j`.

use crate::group::{direct_sum, direct_sum_all, FgAbelianGroup};
use crate::hall::{generate_system, smash_space, BasicProduct, HallError};
use crate::space::{connectivity, normalize, Connectivity, SpaceExpr};
use crate::table::SphereTable;
use std::fmt;
use std::sync::Arc;

/// Which engine produced a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Hilton,
    PlusSmashUnstable,
    PlusSmashStable,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Hilton => write!(f, "hilton"),
            Route::PlusSmashUnstable => write!(f, "plus-smash-unstable"),
            Route::PlusSmashStable => write!(f, "plus-smash-stable"),
        }
    }
}

/// Summand label: a basic Whitehead product, or a part tag for the stable
/// two-part split.
#[derive(Debug, Clone)]
pub enum SummandLabel {
    Basic(Arc<BasicProduct>),
    Tag(&'static str),
}

impl fmt::Display for SummandLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandLabel::Basic(p) => write!(f, "{p}"),
            SummandLabel::Tag(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Summand {
    pub label: SummandLabel,
    pub space: SpaceExpr,
    pub group: FgAbelianGroup,
}

/// An ordered decomposition of `π_m` of some space into labeled summands.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub degree: u64,
    pub route: Route,
    pub truncation_weight: u32,
    pub summands: Vec<Summand>,
    /// What the wedge generators mean, when the decomposition came from a
    /// rewritten plus-smash: parallel to generator indices, e.g.
    /// `["base", "smash"]`. Empty for a plain Hilton pass.
    pub generator_roles: Vec<&'static str>,
}

impl Decomposition {
    /// Direct sum of all summand groups; `0` for the empty decomposition.
    pub fn total(&self) -> FgAbelianGroup {
        direct_sum_all(self.summands.iter().map(|s| &s.group))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let summands: Vec<_> = self
            .summands
            .iter()
            .map(|s| {
                serde_json::json!({
                    "label": s.label.to_string(),
                    "space": s.space.to_string(),
                    "group": s.group.to_json(),
                })
            })
            .collect();
        serde_json::json!({
            "degree": self.degree,
            "route": self.route.to_string(),
            "summands": summands,
            "total": self.total().to_json(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SplitError {
    #[error("wedge operands must be pre-split into clauses: {0}")]
    WedgeInput(SpaceExpr),
    #[error(
        "suspension base {space} has connectivity {conn}, need a single \
         clause of connectivity >= 0"
    )]
    BadSuspensionBase { space: SpaceExpr, conn: i64 },
    #[error("no framed direction: {0} exposes no suspension factor")]
    NoFramedDirection(SpaceExpr),
    #[error(transparent)]
    Enumeration(#[from] HallError),
}

/// Least weight `w` with `w * (1 + min connectivity of the Y's) >= m`;
/// every basic product of that weight (or higher) has `conn(Susp Y_λ) >= m`
/// and contributes nothing to `π_m`.
pub fn truncation_bound(m: u64, y: &[SpaceExpr]) -> u64 {
    let min_conn = y
        .iter()
        .map(connectivity)
        .min()
        .unwrap_or(Connectivity::Infinite);
    match min_conn {
        Connectivity::Infinite => 1,
        Connectivity::Finite(c) => {
            debug_assert!(c >= 0, "truncation bound needs connectivity >= 0");
            let step = (c + 1) as u64;
            m.div_ceil(step).max(1)
        }
    }
}

fn validate_suspension_bases(y: &[SpaceExpr]) -> Result<Vec<SpaceExpr>, SplitError> {
    y.iter()
        .map(|raw| {
            let space = normalize(raw);
            if matches!(space, SpaceExpr::Wedge(_)) {
                return Err(SplitError::WedgeInput(space));
            }
            match connectivity(&space) {
                Connectivity::Finite(c) if c < 0 => {
                    Err(SplitError::BadSuspensionBase { space, conn: c })
                }
                _ => Ok(space),
            }
        })
        .collect()
}

/// `π_m(Susp Y[0] v ... v Susp Y[g-1])` as the sum over basic Whitehead
/// products of `π_m(Susp Y_λ)`, truncated by connectivity.
///
/// Each `Y[i]` must normalize to a single clause of connectivity `>= 0`
/// (so each wedge factor is the suspension of a connected space). A
/// one-element list is the degenerate single-suspension case with the lone
/// summand `i1`.
pub fn hilton_milnor(
    m: u64,
    y: &[SpaceExpr],
    table: &SphereTable,
) -> Result<Decomposition, SplitError> {
    let y = validate_suspension_bases(y)?;
    assert!(!y.is_empty(), "need at least one wedge factor");
    let bound = truncation_bound(m, &y);
    let mut summands = Vec::new();
    if bound >= 2 {
        // one generator has no brackets at all, so never ask the
        // enumerator for more than weight 1 there
        let max_weight = if y.len() == 1 {
            1
        } else {
            (bound - 1).min(u32::MAX as u64) as u32
        };
        let system = generate_system(y.len() as u32, max_weight)?;
        for lambda in system.iter() {
            let space = normalize(&SpaceExpr::susp(smash_space(lambda, &y)));
            if connectivity(&space) >= Connectivity::Finite(m as i64) {
                continue;
            }
            let group = evaluate_pi(m, &space, table);
            summands.push(Summand {
                label: SummandLabel::Basic(Arc::clone(lambda)),
                space,
                group,
            });
        }
    }
    Ok(Decomposition {
        degree: m,
        route: Route::Hilton,
        truncation_weight: bound.min(u32::MAX as u64) as u32,
        summands,
        generator_roles: Vec::new(),
    })
}

/// `π_m` of a normalized term: table lookups on sphere clauses, symbolic
/// otherwise.
fn evaluate_pi(m: u64, space: &SpaceExpr, table: &SphereTable) -> FgAbelianGroup {
    match crate::space::as_wedge_of_spheres(space) {
        Ok(dims) => dims.iter().fold(FgAbelianGroup::zero(), |acc, &n| {
            direct_sum(&acc, &table.lookup_pi(m, n))
        }),
        Err(_) => FgAbelianGroup::Symbolic(format!("π_{m}({space})")),
    }
}

/// Stable-stem semantics: a sphere factor of dimension `j` acts as the
/// `j`-fold shift, so a clause `S^j` contributes `π_{m-j}(S)`.
fn evaluate_stable_pi(m: u64, space: &SpaceExpr, table: &SphereTable) -> FgAbelianGroup {
    space
        .clauses()
        .iter()
        .map(|clause| match clause {
            SpaceExpr::Point => FgAbelianGroup::zero(),
            SpaceExpr::Sphere(j) => {
                if m >= *j {
                    table.lookup_stem(m - j)
                } else {
                    FgAbelianGroup::zero()
                }
            }
            other => FgAbelianGroup::Symbolic(format!("π^s_{m}({other})")),
        })
        .fold(FgAbelianGroup::zero(), |acc, g| direct_sum(&acc, &g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitMode {
    Unstable,
    Stable,
}

/// Decompose `π_m(X_+ ^ Z)`.
///
/// Unstable mode rewrites the plus-smash into `(X ^ Z) v Z` through the
/// term rewriter — `Z` must expose a suspension factor — and runs the
/// Hilton pass on the resulting wedge, with generator `i1` the `base`
/// part (`Z`) and generator `i2` the `smash` part (`X ^ Z`). Stable mode
/// returns the two retract parts directly and evaluates stably.
pub fn split_plus_smash(
    m: u64,
    x: &SpaceExpr,
    z: &SpaceExpr,
    mode: SplitMode,
    table: &SphereTable,
) -> Result<Decomposition, SplitError> {
    let xn = normalize(x);
    let zn = normalize(z);
    if matches!(xn, SpaceExpr::Wedge(_)) {
        return Err(SplitError::WedgeInput(xn));
    }
    if matches!(zn, SpaceExpr::Wedge(_)) {
        return Err(SplitError::WedgeInput(zn));
    }

    match mode {
        SplitMode::Stable => {
            let smash = normalize(&SpaceExpr::smash(vec![xn.clone(), zn.clone()]));
            let summands = vec![
                Summand {
                    label: SummandLabel::Tag("smash"),
                    group: evaluate_stable_pi(m, &smash, table),
                    space: smash,
                },
                Summand {
                    label: SummandLabel::Tag("base"),
                    group: evaluate_stable_pi(m, &zn, table),
                    space: zn,
                },
            ];
            Ok(Decomposition {
                degree: m,
                route: Route::PlusSmashStable,
                // stably every basic product of weight >= 2 contributes nothing
                truncation_weight: 2,
                summands,
                generator_roles: vec!["smash", "base"],
            })
        }
        SplitMode::Unstable => {
            if !matches!(zn.clause_sphere_dim(), Some(d) if d >= 1) {
                return Err(SplitError::NoFramedDirection(zn));
            }
            if xn == SpaceExpr::Point {
                // X_+ = S^0 is the smash unit: the base part is everything
                let mut dec = hilton_milnor(m, &[zn.desuspend_clause().expect("checked")], table)?;
                dec.route = Route::PlusSmashUnstable;
                dec.generator_roles = vec!["base"];
                return Ok(dec);
            }
            let rewritten = normalize(&SpaceExpr::smash(vec![
                SpaceExpr::plus(xn.clone()),
                zn.clone(),
            ]));
            let smash_part = normalize(&SpaceExpr::smash(vec![xn, zn.clone()]));
            // the rewriter must agree with the assembled wedge (the
            // unnesting identity as an executable law)
            debug_assert_eq!(
                rewritten,
                normalize(&SpaceExpr::wedge(vec![smash_part.clone(), zn.clone()])),
                "plus-smash rewrite disagrees with the assembled wedge"
            );
            let base_y = zn
                .desuspend_clause()
                .ok_or_else(|| SplitError::NoFramedDirection(zn.clone()))?;
            let smash_y = smash_part
                .desuspend_clause()
                .ok_or_else(|| SplitError::NoFramedDirection(smash_part.clone()))?;
            let mut dec = hilton_milnor(m, &[base_y, smash_y], table)?;
            dec.route = Route::PlusSmashUnstable;
            dec.generator_roles = vec!["base", "smash"];
            Ok(dec)
        }
    }
}
