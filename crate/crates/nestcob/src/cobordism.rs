//! Cobordism queries answered through Thom-space homotopy.
//!
//! Submanifolds of `S^m` with a normal structure correspond to homotopy
//! classes of maps into the structure's Thom space; links correspond to
//! maps into a wedge of Thom spaces, nested submanifolds to maps into a
//! plus-smash. Each operation here builds the classifying term, decides
//! whether the answer is a group at all (codimension gating), and
//! evaluates the homotopy group through the splitter when the term is a
//! wedge of suspensions. Answers carry the geometric names of the Hilton
//! summands: the component classes and the Wang-style higher invariants.

use crate::group::{direct_sum, FgAbelianGroup};
use crate::space::SpaceExpr;
use crate::splitter::{split_plus_smash, Decomposition, SplitError, SplitMode, SummandLabel};
use crate::table::SphereTable;
use crate::thom::{spectrum_shadow, thom_space, ThomError, ThomStructure};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupStatus {
    Group,
    SetOnly,
}

impl fmt::Display for GroupStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupStatus::Group => write!(f, "group"),
            GroupStatus::SetOnly => write!(f, "set-only"),
        }
    }
}

/// Disjoint union makes the cobordism set a group once representatives can
/// be separated: codimension above `(m+1)/2`, or codimension above 1 when
/// the ambient manifold is a sphere (use the hemispheres).
pub fn group_conditions(m: u64, codim: u64, ambient_is_sphere: bool) -> GroupStatus {
    if 2 * codim as u128 > m as u128 + 1 || (ambient_is_sphere && codim > 1) {
        GroupStatus::Group
    } else {
        GroupStatus::SetOnly
    }
}

/// Answer to a cobordism query.
#[derive(Debug, Clone)]
pub struct CobordismAnswer {
    pub status: GroupStatus,
    /// The classifying object, rendered (a space term, or a spectrum for
    /// stable queries).
    pub space: String,
    /// Present only when the query was evaluated as a group.
    pub decomposition: Option<Decomposition>,
    /// Summand label -> geometric name, e.g. `"i1" -> "Δ_ι = [K]"`.
    pub labels: Vec<(String, String)>,
    /// Which correspondences produced the answer.
    pub notes: Vec<String>,
    total: Option<FgAbelianGroup>,
}

impl CobordismAnswer {
    /// The group total; `None` for set-only or unevaluated answers.
    pub fn total(&self) -> Option<&FgAbelianGroup> {
        self.total.as_ref()
    }

    pub fn geometric_name(&self, label: &str) -> Option<&str> {
        self.labels
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, name)| name.as_str())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let summands: Vec<_> = self
            .decomposition
            .iter()
            .flat_map(|dec| &dec.summands)
            .map(|s| {
                let label = s.label.to_string();
                let name = self.geometric_name(&label).map(str::to_string);
                serde_json::json!({
                    "label": label,
                    "geometric_name": name,
                    "space": s.space.to_string(),
                    "group": s.group.to_json(),
                })
            })
            .collect();
        let mut out = serde_json::json!({
            "status": self.status.to_string(),
            "space": self.space,
            "theorems": self.notes,
            "summands": summands,
        });
        if let Some(total) = &self.total {
            out["total"] = total.to_json();
        }
        out
    }

    fn gated(mut self) -> CobordismAnswer {
        if self.status == GroupStatus::SetOnly {
            self.decomposition = None;
            self.total = None;
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QueryError {
    #[error(transparent)]
    Thom(#[from] ThomError),
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error("dimension mismatch: {0}")]
    Dimensions(String),
}

/// The ambient manifold of an unstable query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Sphere(u64),
    /// A closed manifold of the given dimension about which nothing else
    /// is known; such queries are never evaluated, only classified.
    GenericManifold(u64),
}

impl Ambient {
    pub fn dimension(&self) -> u64 {
        match self {
            Ambient::Sphere(m) | Ambient::GenericManifold(m) => *m,
        }
    }

    pub fn is_sphere(&self) -> bool {
        matches!(self, Ambient::Sphere(_))
    }
}

/// A cobordism query as a value, dispatching to the operations below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CobordismQuery {
    /// θ-submanifolds of the ambient manifold.
    Plain {
        ambient: Ambient,
        theta: ThomStructure,
    },
    /// Two-component links in `S^m`.
    Link {
        m: u64,
        theta_prime: ThomStructure,
        theta: ThomStructure,
    },
    /// A nested chain in `S^m`, structures listed innermost first; one
    /// entry is a plain query, two the once-nested case.
    Nested { m: u64, chain: Vec<ThomStructure> },
    /// Stable cobordism of Θ-manifolds of dimension `k`.
    StablePlain { k: u64, theta_stable: ThomStructure },
    /// Stable nested cobordism in dimensions `k2 < k1`.
    StableNested {
        k1: u64,
        k2: u64,
        theta_prime: ThomStructure,
        theta_stable: ThomStructure,
    },
}

impl CobordismQuery {
    pub fn run(&self, table: &SphereTable) -> Result<CobordismAnswer, QueryError> {
        match self {
            CobordismQuery::Plain { ambient, theta } => {
                cob(ambient.dimension(), theta, ambient.is_sphere(), table)
            }
            CobordismQuery::Link {
                m,
                theta_prime,
                theta,
            } => lcob(*m, theta_prime, theta, table),
            CobordismQuery::Nested { m, chain } => nested_chain(*m, chain, table),
            CobordismQuery::StablePlain { k, theta_stable } => stable_cob(*k, theta_stable, table),
            CobordismQuery::StableNested {
                k1,
                k2,
                theta_prime,
                theta_stable,
            } => stable_ncob(*k1, *k2, theta_prime, theta_stable, table),
        }
    }
}

/// `ι`, `ι′`, `ι′′`, ... for 1-based generator indices.
fn iota(index: u32) -> String {
    let mut s = "ι".to_string();
    for _ in 1..index {
        s.push('′');
    }
    s
}

/// Rewrite a bracket label `[i1,[i1,i2]]` into `[ι,[ι,ι′]]`.
fn iota_label(label: &str, generators: u32) -> String {
    let mut out = label.to_string();
    // longest index first so i1 does not eat the prefix of i10
    for g in (1..=generators).rev() {
        out = out.replace(&format!("i{g}"), &iota(g));
    }
    out
}

/// Attach `Δ`-names to the summands of a Hilton decomposition.
///
/// Weight-1 products name the component classes, the weight-2 bracket is
/// the τ construction (fixed only up to sign). Higher brackets are named
/// only when `full_system` holds (all structures fully framed, codimension
/// above 1), where the Δ's form a complete invariant system for links.
fn wang_labels(
    dec: &Decomposition,
    component_names: &[String],
    full_system: bool,
) -> Vec<(String, String)> {
    let generators = component_names.len() as u32;
    let mut labels = Vec::new();
    for summand in &dec.summands {
        let SummandLabel::Basic(product) = &summand.label else {
            continue;
        };
        let label = summand.label.to_string();
        match product.weight() {
            1 => {
                let idx = product.generator_index().expect("weight 1") as usize;
                labels.push((
                    label.clone(),
                    format!("Δ_{} = {}", iota(idx as u32), component_names[idx - 1]),
                ));
            }
            2 => {
                labels.push((
                    label.clone(),
                    format!("Δ_{} (τ, up to sign)", iota_label(&label, generators)),
                ));
            }
            _ if full_system => {
                labels.push((
                    label.clone(),
                    format!("Δ_{}", iota_label(&label, generators)),
                ));
            }
            _ => {}
        }
    }
    labels
}

/// Classes of θ-submanifolds of the ambient manifold: `Cob^θ(M) ≅ [M, Th θ]`.
///
/// For a sphere ambient the homotopy set is evaluated when the gating
/// allows a group and the Thom space is a suspension; for a generic
/// ambient only the classifying space is reported.
pub fn cob(
    m: u64,
    theta: &ThomStructure,
    ambient_is_sphere: bool,
    table: &SphereTable,
) -> Result<CobordismAnswer, QueryError> {
    let codim = theta.rank();
    if codim > m {
        return Err(QueryError::Dimensions(format!(
            "rank {codim} exceeds the ambient dimension {m}"
        )));
    }
    let space = thom_space(theta)?;
    let status = group_conditions(m, codim, ambient_is_sphere);
    let mut notes = vec!["Pontryagin-Thom: Cob^θ(M) ≅ [M, Th(θ*γ)]".to_string()];
    let mut decomposition = None;
    let mut total = None;
    if !ambient_is_sphere {
        notes.push("generic ambient manifold: [M, Th(θ*γ)] reported unevaluated".to_string());
    } else if status == GroupStatus::Group {
        notes.push("[S^m, X] ≅ π_m(X) for simply connected X".to_string());
        match space.desuspend_clause() {
            Some(base) => {
                let dec = crate::splitter::hilton_milnor(m, &[base], table)?;
                total = Some(dec.total());
                decomposition = Some(dec);
            }
            None => {
                total = Some(FgAbelianGroup::Symbolic(format!("π_{m}({space})")));
            }
        }
    }
    Ok(CobordismAnswer {
        status,
        space: space.to_string(),
        decomposition,
        labels: Vec::new(),
        notes,
        total,
    }
    .gated())
}

/// Classes of `(θ′, θ)`-links in `S^m`: maps into `Th θ′ v Th θ`.
///
/// `θ` classifies the component `K` of codimension `m - k₁`, `θ′` the
/// component `K′` of codimension `m - k₂`. When both Thom spaces are
/// suspensions the Hilton pass decomposes the answer, with `ι` the `K`
/// part and `ι′` the `K′` part.
pub fn lcob(
    m: u64,
    theta_prime: &ThomStructure,
    theta: &ThomStructure,
    table: &SphereTable,
) -> Result<CobordismAnswer, QueryError> {
    let d = theta.rank();
    let d_prime = theta_prime.rank();
    if d > m || d_prime > m {
        return Err(QueryError::Dimensions(format!(
            "structure ranks {d_prime}, {d} must be <= ambient dimension {m}"
        )));
    }
    let th = thom_space(theta)?;
    let th_prime = thom_space(theta_prime)?;
    let space = crate::space::normalize(&SpaceExpr::wedge(vec![th_prime.clone(), th.clone()]));
    let status = group_conditions(m, d.min(d_prime), true);
    let mut notes =
        vec!["link Pontryagin-Thom: LCob^(θ′,θ)(S^m) ≅ [S^m, Th θ′ v Th θ]".to_string()];
    let mut decomposition = None;
    let mut labels = Vec::new();
    let mut total = None;
    let both_suspensions = theta.framed_directions() >= 1 && theta_prime.framed_directions() >= 1;
    if status == GroupStatus::Group && both_suspensions {
        let base = th.desuspend_clause().expect("framed direction");
        let base_prime = th_prime.desuspend_clause().expect("framed direction");
        let dec = crate::splitter::hilton_milnor(m, &[base, base_prime], table)?;
        let full_system =
            theta.is_fully_framed() && theta_prime.is_fully_framed() && d.min(d_prime) > 1;
        labels = wang_labels(&dec, &["[K]".to_string(), "[K′]".to_string()], full_system);
        notes.push("Hilton-Milnor splitting over a system of basic Whitehead products".to_string());
        notes.push(
            "Δ of the weight-2 bracket matches the Hilton coefficient up to sign".to_string(),
        );
        if full_system {
            notes.push(
                "framed components, codimension > 1: the Δ_λ form a full invariant system"
                    .to_string(),
            );
        }
        total = Some(dec.total());
        decomposition = Some(dec);
    } else if status == GroupStatus::Group {
        notes.push("Thom spaces are not both suspensions: wedge reported unevaluated".to_string());
    }
    Ok(CobordismAnswer {
        status,
        space: space.to_string(),
        decomposition,
        labels,
        notes,
        total,
    }
    .gated())
}

/// Classes of nested submanifolds `K′ ⊆ K ⊆ S^m`: maps into
/// `(Th θ′)_+ ^ Th θ`.
///
/// `θ` has rank `m - k₁`, `θ′` rank `k₁ - k₂`. With a framed direction on
/// `θ` the plus-smash unnests into `Th(θ′×θ) v Th θ` and the answer is the
/// link answer for `(θ′×θ, θ)`; without one the classifying term keeps its
/// `Plus` and is reported symbolically.
pub fn ncob(
    m: u64,
    theta_prime: &ThomStructure,
    theta: &ThomStructure,
    table: &SphereTable,
) -> Result<CobordismAnswer, QueryError> {
    let d = theta.rank();
    let d_prime = theta_prime.rank();
    let k1 = m
        .checked_sub(d)
        .ok_or_else(|| QueryError::Dimensions(format!("rank {d} exceeds m = {m}")))?;
    if d_prime > k1 {
        return Err(QueryError::Dimensions(format!(
            "inner rank {d_prime} exceeds the outer dimension k1 = {k1} (need 0 <= k2 < k1 < m)"
        )));
    }
    let th = thom_space(theta)?;
    let th_prime = thom_space(theta_prime)?;
    let space = crate::space::normalize(&SpaceExpr::smash(vec![
        SpaceExpr::plus(th_prime.clone()),
        th.clone(),
    ]));
    let status = group_conditions(m, d, true);
    let mut notes =
        vec!["nested Pontryagin-Thom: NCob^(θ′,θ)(S^m) ≅ [S^m, (Th θ′)_+ ^ Th θ]".to_string()];
    let mut decomposition = None;
    let mut labels = Vec::new();
    let mut total = None;
    if theta.framed_directions() >= 1 {
        notes.push(
            "framed direction on θ: unnesting is a bijection onto LCob^(θ′×θ,θ)(S^m)".to_string(),
        );
        if status == GroupStatus::Group {
            let dec = split_plus_smash(m, &th_prime, &th, SplitMode::Unstable, table)?;
            let full_system = theta.is_fully_framed() && theta_prime.is_fully_framed() && d > 1;
            labels = wang_labels(
                &dec,
                &["[K]".to_string(), "[K′] (as a (θ′×θ)-manifold)".to_string()],
                full_system,
            );
            notes.push(
                "Hilton-Milnor splitting of the unnested wedge; Δ applied through Υ".to_string(),
            );
            if full_system {
                notes.push(
                    "fully framed, codimension > 1: [K′⊆K] = 0 iff all Δ_λ(Υ[K′⊆K]) = 0"
                        .to_string(),
                );
            }
            total = Some(dec.total());
            decomposition = Some(dec);
        }
    } else {
        notes.push(
            "no framed direction on θ: unnesting map undefined (requires θ factoring \
             over BO(d-1)); nested and link sets can differ"
                .to_string(),
        );
    }
    Ok(CobordismAnswer {
        status,
        space: space.to_string(),
        decomposition,
        labels,
        notes,
        total,
    }
    .gated())
}

/// Stable cobordism group of `Θ`-manifolds of dimension `k`:
/// `Ω_k^Θ ≅ π_k(Th Θ)`. Fully framed structures resolve through the
/// stable stems; anything else stays symbolic.
pub fn stable_cob(
    k: u64,
    theta_stable: &ThomStructure,
    table: &SphereTable,
) -> Result<CobordismAnswer, QueryError> {
    let notes = vec!["stable Pontryagin-Thom: Ω_k^Θ ≅ π_k(Th Θ)".to_string()];
    let (space, total) = if theta_stable.is_fully_framed() {
        ("S (sphere spectrum)".to_string(), table.lookup_stem(k))
    } else {
        let label = structure_label(theta_stable);
        (
            format!("Th({label}) (spectrum)"),
            FgAbelianGroup::Symbolic(format!("π_{k}(Th({label}))")),
        )
    };
    Ok(CobordismAnswer {
        status: GroupStatus::Group,
        space,
        decomposition: None,
        labels: Vec::new(),
        notes,
        total: Some(total),
    })
}

fn structure_label(s: &ThomStructure) -> String {
    match s {
        ThomStructure::Framed(_) => "fr".to_string(),
        ThomStructure::Generic { name, .. } => name.clone(),
        ThomStructure::Product(fs) => fs.iter().map(structure_label).collect::<Vec<_>>().join("×"),
    }
}

/// Stable nested cobordism group `Ω_{k₁}^{(θ′,Θ)}`, split as
/// `Ω_{k₂}^{θ′×Θ} (+) Ω_{k₁}^{Θ}` with `k₂ = k₁ - rank θ′`.
///
/// The answer's decomposition comes from the independent plus-smash route
/// on the Thom spectra; for fully framed inputs the two routes are checked
/// against each other.
pub fn stable_ncob(
    k1: u64,
    k2: u64,
    theta_prime: &ThomStructure,
    theta_stable: &ThomStructure,
    table: &SphereTable,
) -> Result<CobordismAnswer, QueryError> {
    if k2 >= k1 {
        return Err(QueryError::Dimensions(format!(
            "need 0 <= k2 < k1, got k2 = {k2}, k1 = {k1}"
        )));
    }
    let d_prime = k1 - k2;
    if theta_prime.rank() != d_prime {
        return Err(QueryError::Dimensions(format!(
            "rank of θ′ is {}, but k1 - k2 = {d_prime}",
            theta_prime.rank()
        )));
    }
    let product = ThomStructure::product(vec![theta_prime.clone(), theta_stable.clone()]);
    let smash_part = stable_cob(k2, &product, table)?;
    let base_part = stable_cob(k1, theta_stable, table)?;
    let total = direct_sum(
        smash_part.total().expect("stable answers are groups"),
        base_part.total().expect("stable answers are groups"),
    );

    // independent route: split the plus-smash of the Thom spectra
    let x = spectrum_shadow(theta_prime);
    let z = spectrum_shadow(theta_stable);
    let dec = split_plus_smash(k1, &x, &z, SplitMode::Stable, table)?;
    if theta_prime.is_fully_framed() && theta_stable.is_fully_framed() {
        debug_assert_eq!(
            dec.total().to_string(),
            total.to_string(),
            "retract splitting and shift bookkeeping disagree"
        );
    }

    let labels = vec![
        (
            "smash".to_string(),
            format!("Ω_{k2}^({}) part", structure_label(&product)),
        ),
        (
            "base".to_string(),
            format!("Ω_{k1}^({}) part", structure_label(theta_stable)),
        ),
    ];
    let notes = vec![
        "stable splitting: Ω_{k1}^(θ′,Θ) ≅ Ω_{k2}^(θ′×Θ) (+) Ω_{k1}^(Θ)".to_string(),
        "retract of the cofiber sequence Th Θ → (Th θ′)_+ ^ Th Θ → Th θ′ ^ Th Θ".to_string(),
        "Th θ′ ^ Th Θ is the shifted Thom spectrum of θ′×Θ".to_string(),
    ];
    Ok(CobordismAnswer {
        status: GroupStatus::Group,
        space: format!(
            "(Th({}))_+ ^ Th({}) (spectrum)",
            structure_label(theta_prime),
            structure_label(theta_stable)
        ),
        decomposition: Some(dec),
        labels,
        notes,
        total: Some(total),
    })
}

/// Iterated nested cobordism: a chain of structures from the innermost
/// submanifold outward. One structure is a plain submanifold query, two
/// are the once-nested case; longer chains iterate the plus-smash and run
/// a Hilton pass with one generator per nesting level.
pub fn nested_chain(
    m: u64,
    structures: &[ThomStructure],
    table: &SphereTable,
) -> Result<CobordismAnswer, QueryError> {
    match structures {
        [] => Err(QueryError::Dimensions("empty chain".to_string())),
        [theta] => cob(m, theta, true, table),
        [theta_prime, theta] => ncob(m, theta_prime, theta, table),
        _ => nested_chain_general(m, structures, table),
    }
}

fn nested_chain_general(
    m: u64,
    structures: &[ThomStructure],
    table: &SphereTable,
) -> Result<CobordismAnswer, QueryError> {
    let total_rank: u64 = structures.iter().map(ThomStructure::rank).sum();
    if total_rank > m {
        return Err(QueryError::Dimensions(format!(
            "ranks sum to {total_rank}, exceeding the ambient dimension {m}"
        )));
    }
    if structures.iter().any(|s| s.rank() == 0) {
        return Err(QueryError::Dimensions(
            "every structure in the chain needs rank >= 1".to_string(),
        ));
    }
    let outer = structures.last().expect("nonempty");
    let mut term = thom_space(&structures[0])?;
    for s in &structures[1..] {
        term = SpaceExpr::smash(vec![SpaceExpr::plus(term), thom_space(s)?]);
    }
    let space = crate::space::normalize(&term);
    let status = group_conditions(m, outer.rank(), true);
    let mut notes =
        vec!["iterated nested Pontryagin-Thom: maps into ((Th θ⁽ʳ⁾)_+ ^ ...)_+ ^ Th θ".to_string()];
    let mut decomposition = None;
    let mut labels = Vec::new();
    let mut total = None;
    // a framed direction on the outermost structure suspends every tail
    // product, so it alone decides whether the chain unnests completely
    let outer_framed = outer.framed_directions() >= 1;
    if outer_framed && status == GroupStatus::Group {
        // one link component per nesting level: the tail products
        // θ^(j) × ... × θ, ordered from the outermost (smallest Thom
        // space) inward
        let levels = structures.len();
        let mut component_spaces = Vec::with_capacity(levels);
        let mut component_names = Vec::with_capacity(levels);
        for j in (0..levels).rev() {
            let tail = ThomStructure::product(structures[j..].to_vec());
            component_spaces.push(thom_space(&tail)?);
            let primes: String = "′".repeat(levels - 1 - j);
            component_names.push(format!("[K{primes}]"));
        }
        // the iterated plus eliminations must reproduce exactly these clauses
        debug_assert_eq!(
            {
                let mut got: Vec<String> = space.clauses().iter().map(|c| c.to_string()).collect();
                got.sort();
                got
            },
            {
                let mut want: Vec<String> =
                    component_spaces.iter().map(|c| c.to_string()).collect();
                want.sort();
                want
            },
            "iterated unnesting disagrees with the tail-product components"
        );
        let bases: Vec<SpaceExpr> = component_spaces
            .iter()
            .map(|c| c.desuspend_clause().expect("outer framed direction"))
            .collect();
        let dec = crate::splitter::hilton_milnor(m, &bases, table)?;
        let full_system = structures.iter().all(ThomStructure::is_fully_framed) && outer.rank() > 1;
        labels = wang_labels(&dec, &component_names, full_system);
        notes.push(format!(
            "framed directions on the outer structures: iterated unnesting onto a \
             {levels}-component link"
        ));
        total = Some(dec.total());
        decomposition = Some(dec);
    } else if !outer_framed {
        notes.push(
            "no framed direction on the outermost structure: the plus-smash \
             does not unnest; term reported as is"
                .to_string(),
        );
    }
    Ok(CobordismAnswer {
        status,
        space: space.to_string(),
        decomposition,
        labels,
        notes,
        total,
    }
    .gated())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn framed(d: u64) -> ThomStructure {
        ThomStructure::Framed(d)
    }

    #[test]
    fn gating_matches_the_codimension_rules() {
        assert_eq!(group_conditions(4, 2, true), GroupStatus::Group);
        assert_eq!(group_conditions(2, 1, true), GroupStatus::SetOnly);
        assert_eq!(group_conditions(10, 6, false), GroupStatus::Group);
        assert_eq!(group_conditions(10, 5, false), GroupStatus::SetOnly);
    }

    #[test]
    fn framed_points_in_s5() {
        let t = SphereTable::shipped();
        let ans = cob(5, &framed(5), true, &t).unwrap();
        assert_eq!(ans.status, GroupStatus::Group);
        assert_eq!(ans.space, "S5");
        assert_eq!(ans.total().unwrap().to_string(), "Z");
    }

    #[test]
    fn framed_surfaces_in_s4() {
        let t = SphereTable::shipped();
        let ans = cob(4, &framed(2), true, &t).unwrap();
        assert_eq!(ans.total().unwrap().to_string(), "Z/2");
    }

    #[test]
    fn codimension_one_is_set_only() {
        let t = SphereTable::shipped();
        let ans = cob(3, &ThomStructure::generic("id", 1, 0), true, &t).unwrap();
        assert_eq!(ans.status, GroupStatus::SetOnly);
        assert!(ans.total().is_none());
        assert!(ans.decomposition.is_none());
    }

    #[test]
    fn generic_ambient_reports_space_only() {
        let t = SphereTable::shipped();
        let ans = cob(10, &framed(6), false, &t).unwrap();
        assert_eq!(ans.status, GroupStatus::Group);
        assert!(ans.total().is_none());
        assert_eq!(ans.space, "S6");
    }

    #[test]
    fn two_framed_circles_in_s3() {
        let t = SphereTable::shipped();
        let ans = lcob(3, &framed(2), &framed(2), &t).unwrap();
        assert_eq!(ans.status, GroupStatus::Group);
        assert_eq!(ans.total().unwrap().to_string(), "Z^3");
        let dec = ans.decomposition.as_ref().unwrap();
        assert_eq!(dec.summands.len(), 3);
        assert_eq!(ans.geometric_name("i1").unwrap(), "Δ_ι = [K]");
        assert_eq!(ans.geometric_name("i2").unwrap(), "Δ_ι′ = [K′]");
        assert_eq!(
            ans.geometric_name("[i1,i2]").unwrap(),
            "Δ_[ι,ι′] (τ, up to sign)"
        );
    }

    #[test]
    fn mixed_codimension_link() {
        let t = SphereTable::shipped();
        let ans = lcob(4, &framed(3), &framed(2), &t).unwrap();
        assert_eq!(ans.total().unwrap().to_string(), "Z (+) Z/2 (+) Z/2");
        assert_eq!(ans.space, "(S3 v S2)");
    }

    #[test]
    fn codimension_one_link_is_gated() {
        let t = SphereTable::shipped();
        let ans = lcob(2, &framed(2), &framed(1), &t).unwrap();
        assert_eq!(ans.status, GroupStatus::SetOnly);
        assert!(ans.total().is_none());
        assert_eq!(ans.space, "(S2 v S1)");
    }

    #[test]
    fn nested_framed_m4() {
        let t = SphereTable::shipped();
        // m=4, k1=2, k2=1: theta rank 2, theta' rank 1
        let ans = ncob(4, &framed(1), &framed(2), &t).unwrap();
        assert_eq!(ans.status, GroupStatus::Group);
        assert_eq!(ans.total().unwrap().to_string(), "Z (+) Z/2 (+) Z/2");
        let dec = ans.decomposition.as_ref().unwrap();
        // base = Th θ = S2, smash = Th(θ'×θ) = S3
        assert_eq!(dec.generator_roles, vec!["base", "smash"]);
        assert_eq!(dec.summands[0].space.to_string(), "S2");
        assert_eq!(dec.summands[1].space.to_string(), "S3");
        assert_eq!(dec.summands[2].space.to_string(), "S4");
    }

    #[test]
    fn higher_invariant_names_need_full_framing() {
        // a framed direction suffices for the unnesting and the weight-2
        // τ label, but the full Δ_λ system needs fully framed structures
        let t = SphereTable::shipped();
        let theta = ThomStructure::generic("t", 3, 1);
        let ans = ncob(9, &framed(2), &theta, &t).unwrap();
        let dec = ans.decomposition.as_ref().unwrap();
        let weight_three: Vec<String> = dec
            .summands
            .iter()
            .filter(|s| matches!(&s.label, SummandLabel::Basic(p) if p.weight() == 3))
            .map(|s| s.label.to_string())
            .collect();
        assert_eq!(weight_three, ["[i1,[i1,i2]]"]);
        assert!(ans.geometric_name("[i1,i2]").is_some());
        assert!(ans.geometric_name("[i1,[i1,i2]]").is_none());

        // fully framed at the same dimensions: every surviving product is named
        let full = ncob(9, &framed(2), &framed(3), &t).unwrap();
        let dec = full.decomposition.as_ref().unwrap();
        for summand in &dec.summands {
            assert!(
                full.geometric_name(&summand.label.to_string()).is_some(),
                "unnamed summand {} in the fully framed case",
                summand.label
            );
        }
    }

    #[test]
    fn nested_without_framed_direction_stays_symbolic() {
        let t = SphereTable::shipped();
        let theta = ThomStructure::generic("id", 1, 0);
        let ans = ncob(2, &framed(1), &theta, &t).unwrap();
        assert_eq!(ans.status, GroupStatus::SetOnly);
        assert!(ans.total().is_none());
        assert!(ans.space.contains("Plus"));
        assert!(ans
            .notes
            .iter()
            .any(|n| n.contains("unnesting map undefined")));
    }

    #[test]
    fn truncation_kills_the_bracket_in_high_codimension() {
        let t = SphereTable::shipped();
        // m=5, k1=2, k2=1: wedge S4 v S3, weight 2 truncated
        let ans = ncob(5, &framed(1), &framed(3), &t).unwrap();
        let dec = ans.decomposition.as_ref().unwrap();
        assert_eq!(dec.summands.len(), 2);
        assert_eq!(ans.total().unwrap().to_string(), "Z/2 (+) Z/2");
    }

    #[test]
    fn stable_framed_stems() {
        let t = SphereTable::shipped();
        assert_eq!(
            stable_cob(0, &framed(0), &t)
                .unwrap()
                .total()
                .unwrap()
                .to_string(),
            "Z"
        );
        assert_eq!(
            stable_cob(3, &framed(0), &t)
                .unwrap()
                .total()
                .unwrap()
                .to_string(),
            "Z/24"
        );
        let generic = ThomStructure::generic("Θ", 2, 0);
        assert_eq!(
            stable_cob(2, &generic, &t)
                .unwrap()
                .total()
                .unwrap()
                .to_string(),
            "π_2(Th(Θ))"
        );
    }

    #[test]
    fn stable_nested_splits_into_stems() {
        let t = SphereTable::shipped();
        let ans = stable_ncob(3, 1, &framed(2), &framed(0), &t).unwrap();
        assert_eq!(ans.total().unwrap().to_string(), "Z/2 (+) Z/24");
        let dec = ans.decomposition.as_ref().unwrap();
        assert_eq!(dec.summands[0].group.to_string(), "Z/2");
        assert_eq!(dec.summands[1].group.to_string(), "Z/24");
    }

    #[test]
    fn stable_nested_bottom_degree_forces_z() {
        let t = SphereTable::shipped();
        let ans = stable_ncob(1, 0, &framed(1), &framed(0), &t).unwrap();
        // stem(0) = Z by degree, stem(1) = Z/2
        assert_eq!(ans.total().unwrap().to_string(), "Z (+) Z/2");
    }

    #[test]
    fn stable_nested_with_generic_inner_structure() {
        let t = SphereTable::shipped();
        let gen = ThomStructure::generic("θ", 1, 0);
        let ans = stable_ncob(1, 0, &gen, &framed(0), &t).unwrap();
        match ans.total().unwrap() {
            FgAbelianGroup::SymbolicSum(parts) => assert_eq!(parts.len(), 2),
            other => panic!("expected a symbolic sum, got {other}"),
        }
    }

    #[test]
    fn twice_nested_chain() {
        let t = SphereTable::shipped();
        // m=6, ranks 1, 1, 2 from the innermost out; wedge S4 v S3 v S2
        let chain = [framed(1), framed(1), framed(2)];
        let ans = nested_chain(6, &chain, &t).unwrap();
        assert_eq!(ans.status, GroupStatus::Group);
        let dec = ans.decomposition.as_ref().unwrap();
        let spaces: Vec<String> = dec
            .summands
            .iter()
            .filter(|s| matches!(&s.label, SummandLabel::Basic(p) if p.weight() == 1))
            .map(|s| s.space.to_string())
            .collect();
        assert_eq!(spaces, vec!["S2", "S3", "S4"]);
        assert_eq!(ans.geometric_name("i1").unwrap(), "Δ_ι = [K]");
        assert_eq!(ans.geometric_name("i3").unwrap(), "Δ_ι′′ = [K′′]");
    }

    #[test]
    fn query_values_dispatch_to_the_same_answers() {
        let t = SphereTable::shipped();
        let by_value = CobordismQuery::Nested {
            m: 4,
            chain: vec![framed(1), framed(2)],
        }
        .run(&t)
        .unwrap();
        let direct = ncob(4, &framed(1), &framed(2), &t).unwrap();
        assert_eq!(by_value.total(), direct.total());

        let generic = CobordismQuery::Plain {
            ambient: Ambient::GenericManifold(10),
            theta: framed(6),
        }
        .run(&t)
        .unwrap();
        assert_eq!(generic.status, GroupStatus::Group);
        assert!(generic.total().is_none());

        let stable = CobordismQuery::StableNested {
            k1: 3,
            k2: 1,
            theta_prime: framed(2),
            theta_stable: framed(0),
        }
        .run(&t)
        .unwrap();
        assert_eq!(stable.total().unwrap().to_string(), "Z/2 (+) Z/24");
    }

    #[test]
    fn chain_degenerations() {
        let t = SphereTable::shipped();
        let single = nested_chain(5, &[framed(5)], &t).unwrap();
        let direct = cob(5, &framed(5), true, &t).unwrap();
        assert_eq!(single.total(), direct.total());
        let pair = nested_chain(4, &[framed(1), framed(2)], &t).unwrap();
        let direct = ncob(4, &framed(1), &framed(2), &t).unwrap();
        assert_eq!(pair.total(), direct.total());
    }

    #[test]
    fn chain_with_unframed_middle_unnests_through_the_outer_suspension() {
        // the outer S^2 factor lands in every clause, so both Plus nodes
        // eliminate even though the middle structure has no framed direction;
        // the middle atom keeps the summand groups symbolic
        let t = SphereTable::shipped();
        let chain = [framed(1), ThomStructure::generic("mid", 1, 0), framed(2)];
        let ans = nested_chain(7, &chain, &t).unwrap();
        assert!(!ans.space.contains("Plus"));
        let dec = ans.decomposition.as_ref().unwrap();
        assert!(dec.summands.iter().any(|s| s.group.is_symbolic()));
    }

    #[test]
    fn chain_with_unframed_outer_keeps_its_plus() {
        let t = SphereTable::shipped();
        let chain = [framed(1), framed(1), ThomStructure::generic("out", 2, 0)];
        let ans = nested_chain(7, &chain, &t).unwrap();
        assert!(ans.space.contains("Plus"));
        assert!(ans.total().is_none());
        assert!(ans.decomposition.is_none());
    }

    #[test]
    fn chain_telescope_mismatch_rejected() {
        let t = SphereTable::shipped();
        let err = nested_chain(3, &[framed(2), framed(2), framed(2)], &t).unwrap_err();
        assert!(matches!(err, QueryError::Dimensions(_)));
    }
}
