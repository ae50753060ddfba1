//! Formal pointed spaces and their normal forms.
//!
//! Terms are built from spheres, named atoms (for Thom spaces of generic
//! structures), wedge, smash, suspension and disjoint basepoint. The
//! rewriter normalizes every term into a wedge of smash
//! clauses; when all atoms are spherical the result is a wedge of spheres.

mod parse;
mod rewrite;

pub use parse::{parse_space, ParseError};
pub use rewrite::{normalize, normalize_with, Strategy};

use std::cmp::Ordering;
use std::fmt;

/// A formal pointed space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpaceExpr {
    /// The one-point space.
    Point,
    /// `S^n`. `Sphere(0)` is the two-point space and the smash unit.
    Sphere(u64),
    /// An opaque pointed space with a known connectivity lower bound.
    Atom { name: String, conn: i64 },
    /// Wedge sum, at least two children.
    Wedge(Vec<SpaceExpr>),
    /// Smash product, at least two children.
    Smash(Vec<SpaceExpr>),
    /// Reduced suspension.
    Susp(Box<SpaceExpr>),
    /// Disjoint basepoint `X_+`.
    Plus(Box<SpaceExpr>),
}

/// Connectivity of a space, `Infinite` for the point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connectivity {
    Finite(i64),
    Infinite,
}

impl Connectivity {
    pub fn plus(self, k: i64) -> Connectivity {
        match self {
            Connectivity::Finite(n) => Connectivity::Finite(n + k),
            Connectivity::Infinite => Connectivity::Infinite,
        }
    }

    fn add(self, other: Connectivity) -> Connectivity {
        match (self, other) {
            (Connectivity::Finite(a), Connectivity::Finite(b)) => Connectivity::Finite(a + b),
            _ => Connectivity::Infinite,
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::Finite(n) => write!(f, "{n}"),
            Connectivity::Infinite => write!(f, "inf"),
        }
    }
}

/// Structural connectivity:
/// `conn(S^n) = n-1`, `conn(A ^ B) = conn A + conn B + 1`,
/// `conn(Susp A) = conn A + 1`, `conn(Wedge) = min`, `conn(pt) = inf`,
/// `conn(X_+) = -1`.
pub fn connectivity(e: &SpaceExpr) -> Connectivity {
    match e {
        SpaceExpr::Point => Connectivity::Infinite,
        SpaceExpr::Sphere(n) => Connectivity::Finite(*n as i64 - 1),
        SpaceExpr::Atom { conn, .. } => Connectivity::Finite(*conn),
        SpaceExpr::Wedge(cs) => cs
            .iter()
            .map(connectivity)
            .min()
            .unwrap_or(Connectivity::Infinite),
        // fold starts at -1 so the k-ary sum picks up the k-1 unit shifts
        SpaceExpr::Smash(cs) => cs
            .iter()
            .map(connectivity)
            .fold(Connectivity::Finite(-1), |acc, c| acc.add(c).plus(1)),
        SpaceExpr::Susp(x) => connectivity(x).plus(1),
        SpaceExpr::Plus(_) => Connectivity::Finite(-1),
    }
}

impl SpaceExpr {
    pub fn atom(name: impl Into<String>, conn: i64) -> SpaceExpr {
        SpaceExpr::Atom {
            name: name.into(),
            conn,
        }
    }

    pub fn wedge(children: Vec<SpaceExpr>) -> SpaceExpr {
        match children.len() {
            0 => SpaceExpr::Point,
            1 => children.into_iter().next().unwrap(),
            _ => SpaceExpr::Wedge(children),
        }
    }

    pub fn smash(children: Vec<SpaceExpr>) -> SpaceExpr {
        match children.len() {
            0 => SpaceExpr::Sphere(0),
            1 => children.into_iter().next().unwrap(),
            _ => SpaceExpr::Smash(children),
        }
    }

    pub fn susp(inner: SpaceExpr) -> SpaceExpr {
        SpaceExpr::Susp(Box::new(inner))
    }

    pub fn plus(inner: SpaceExpr) -> SpaceExpr {
        SpaceExpr::Plus(Box::new(inner))
    }

    pub fn node_count(&self) -> u64 {
        match self {
            SpaceExpr::Point | SpaceExpr::Sphere(_) | SpaceExpr::Atom { .. } => 1,
            SpaceExpr::Wedge(cs) | SpaceExpr::Smash(cs) => {
                1 + cs.iter().map(SpaceExpr::node_count).sum::<u64>()
            }
            SpaceExpr::Susp(x) | SpaceExpr::Plus(x) => 1 + x.node_count(),
        }
    }

    pub fn contains_plus(&self) -> bool {
        match self {
            SpaceExpr::Plus(_) => true,
            SpaceExpr::Point | SpaceExpr::Sphere(_) | SpaceExpr::Atom { .. } => false,
            SpaceExpr::Wedge(cs) | SpaceExpr::Smash(cs) => cs.iter().any(SpaceExpr::contains_plus),
            SpaceExpr::Susp(x) => x.contains_plus(),
        }
    }

    /// The clauses of a normal form: the wedge children, or the term itself.
    pub fn clauses(&self) -> Vec<SpaceExpr> {
        match self {
            SpaceExpr::Wedge(cs) => cs.clone(),
            other => vec![other.clone()],
        }
    }

    /// Sphere dimension of a smash clause, if it has a sphere factor.
    pub fn clause_sphere_dim(&self) -> Option<u64> {
        match self {
            SpaceExpr::Sphere(n) => Some(*n),
            SpaceExpr::Smash(cs) => cs.iter().find_map(|c| match c {
                SpaceExpr::Sphere(n) => Some(*n),
                _ => None,
            }),
            _ => None,
        }
    }

    /// Strip one suspension from a normalized clause: `S^k -> S^{k-1}`,
    /// `A ^ S^k -> A ^ S^{k-1}`. Returns `None` when the clause is not
    /// visibly a suspension (no sphere factor of dimension >= 1).
    pub fn desuspend_clause(&self) -> Option<SpaceExpr> {
        match self {
            SpaceExpr::Sphere(n) if *n >= 1 => Some(SpaceExpr::Sphere(n - 1)),
            SpaceExpr::Smash(cs) => {
                let idx = cs
                    .iter()
                    .position(|c| matches!(c, SpaceExpr::Sphere(n) if *n >= 1))?;
                let mut out = cs.clone();
                match &mut out[idx] {
                    SpaceExpr::Sphere(n) if *n == 1 => {
                        out.remove(idx);
                    }
                    SpaceExpr::Sphere(n) => *n -= 1,
                    _ => unreachable!(),
                }
                Some(SpaceExpr::smash(out))
            }
            _ => None,
        }
    }
}

/// Order used for smash factors in canonical form: atoms first (by name,
/// then connectivity), surviving `Plus` factors next, the sphere factor last.
pub(crate) fn factor_cmp(a: &SpaceExpr, b: &SpaceExpr) -> Ordering {
    fn class(e: &SpaceExpr) -> u8 {
        match e {
            SpaceExpr::Atom { .. } => 0,
            SpaceExpr::Plus(_) => 1,
            SpaceExpr::Sphere(_) => 2,
            _ => 3,
        }
    }
    class(a).cmp(&class(b)).then_with(|| match (a, b) {
        (SpaceExpr::Atom { name: na, conn: ca }, SpaceExpr::Atom { name: nb, conn: cb }) => {
            na.cmp(nb).then(ca.cmp(cb))
        }
        (SpaceExpr::Sphere(x), SpaceExpr::Sphere(y)) => x.cmp(y),
        _ => a.to_string().cmp(&b.to_string()),
    })
}

/// Order used for wedge clauses in canonical form: sphere dimension
/// descending, then the serialized clause ascending.
pub(crate) fn clause_cmp(a: &SpaceExpr, b: &SpaceExpr) -> Ordering {
    let da = a.clause_sphere_dim().map(|d| d as i128).unwrap_or(-1);
    let db = b.clause_sphere_dim().map(|d| d as i128).unwrap_or(-1);
    db.cmp(&da).then_with(|| a.to_string().cmp(&b.to_string()))
}

/// Failure modes of the space algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    /// The normal form is not a wedge of spheres; carries the normal form.
    #[error("non-spherical normal form: {0}")]
    NonSpherical(SpaceExpr),
}

/// Dimensions of the spheres in `normalize(e)`, in clause order.
///
/// `pt` yields the empty list. Any clause that is not a bare sphere
/// (an atom, or a term still holding an un-eliminable `Plus`) is a
/// [`SpaceError::NonSpherical`] failure carrying the normal form.
pub fn as_wedge_of_spheres(e: &SpaceExpr) -> Result<Vec<u64>, SpaceError> {
    let nf = normalize(e);
    match &nf {
        SpaceExpr::Point => Ok(Vec::new()),
        SpaceExpr::Sphere(n) => Ok(vec![*n]),
        SpaceExpr::Wedge(cs) => {
            let mut dims = Vec::with_capacity(cs.len());
            for c in cs {
                match c {
                    SpaceExpr::Sphere(n) => dims.push(*n),
                    _ => return Err(SpaceError::NonSpherical(nf.clone())),
                }
            }
            Ok(dims)
        }
        _ => Err(SpaceError::NonSpherical(nf)),
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Point => write!(f, "pt"),
            SpaceExpr::Sphere(n) => write!(f, "S{n}"),
            SpaceExpr::Atom { name, conn } => write!(f, "A({name},{conn})"),
            SpaceExpr::Wedge(cs) => write_infix(f, cs, "v"),
            SpaceExpr::Smash(cs) => write_infix(f, cs, "^"),
            SpaceExpr::Susp(x) => write!(f, "Susp({x})"),
            SpaceExpr::Plus(x) => write!(f, "Plus({x})"),
        }
    }
}

fn write_infix(f: &mut fmt::Formatter<'_>, cs: &[SpaceExpr], op: &str) -> fmt::Result {
    write!(f, "(")?;
    for (i, c) in cs.iter().enumerate() {
        if i > 0 {
            write!(f, " {op} ")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u64) -> SpaceExpr {
        SpaceExpr::Sphere(n)
    }

    #[test]
    fn suspension_of_plus_splits_off_a_circle() {
        let e = SpaceExpr::susp(SpaceExpr::plus(s(1)));
        assert_eq!(normalize(&e), SpaceExpr::Wedge(vec![s(2), s(1)]));
    }

    #[test]
    fn spheres_merge_under_smash() {
        let e = SpaceExpr::Smash(vec![s(2), s(1)]);
        assert_eq!(normalize(&e), s(3));
    }

    #[test]
    fn plus_smash_distributes() {
        let e = SpaceExpr::Smash(vec![SpaceExpr::plus(s(2)), s(2)]);
        assert_eq!(normalize(&e), SpaceExpr::Wedge(vec![s(4), s(2)]));
    }

    #[test]
    fn point_absorbs_and_vanishes() {
        assert_eq!(
            normalize(&SpaceExpr::Smash(vec![SpaceExpr::Point, s(3)])),
            SpaceExpr::Point
        );
        assert_eq!(
            normalize(&SpaceExpr::Wedge(vec![SpaceExpr::Point, s(3)])),
            s(3)
        );
    }

    #[test]
    fn sphere_zero_is_smash_unit() {
        let a = SpaceExpr::atom("X", 1);
        assert_eq!(normalize(&SpaceExpr::Smash(vec![s(0), a.clone()])), a);
        assert_eq!(normalize(&SpaceExpr::Smash(vec![s(0), s(0)])), s(0));
    }

    #[test]
    fn plus_of_point_is_s0() {
        assert_eq!(normalize(&SpaceExpr::plus(SpaceExpr::Point)), s(0));
    }

    #[test]
    fn uneliminable_plus_survives() {
        let e = SpaceExpr::plus(s(5));
        let nf = normalize(&e);
        assert_eq!(nf, e);
        assert!(nf.contains_plus());
        assert!(matches!(
            as_wedge_of_spheres(&e),
            Err(SpaceError::NonSpherical(_))
        ));
    }

    #[test]
    fn connectivity_rules() {
        assert_eq!(connectivity(&s(3)), Connectivity::Finite(2));
        assert_eq!(
            connectivity(&SpaceExpr::Smash(vec![s(2), s(2)])),
            Connectivity::Finite(3)
        );
        assert_eq!(
            connectivity(&SpaceExpr::plus(s(5))),
            Connectivity::Finite(-1)
        );
        assert_eq!(connectivity(&SpaceExpr::Point), Connectivity::Infinite);
    }

    #[test]
    fn wedge_of_spheres_extraction() {
        let e = SpaceExpr::Smash(vec![SpaceExpr::plus(s(1)), s(1)]);
        assert_eq!(as_wedge_of_spheres(&e).unwrap(), vec![2, 1]);
        assert_eq!(
            as_wedge_of_spheres(&SpaceExpr::Point).unwrap(),
            Vec::<u64>::new()
        );
        let bad = SpaceExpr::Smash(vec![SpaceExpr::atom("Th(x)", 1), s(1)]);
        assert!(as_wedge_of_spheres(&bad).is_err());
    }

    #[test]
    fn clause_order_is_dimension_descending() {
        let e = SpaceExpr::Wedge(vec![s(1), s(4), s(2)]);
        assert_eq!(normalize(&e), SpaceExpr::Wedge(vec![s(4), s(2), s(1)]));
    }

    #[test]
    fn susp_of_sphere_bumps_dimension() {
        assert_eq!(normalize(&SpaceExpr::susp(s(4))), s(5));
        assert_eq!(
            normalize(&SpaceExpr::susp(SpaceExpr::Point)),
            SpaceExpr::Point
        );
    }

    #[test]
    fn desuspension_of_clauses() {
        assert_eq!(s(3).desuspend_clause(), Some(s(2)));
        let cl = SpaceExpr::Smash(vec![SpaceExpr::atom("X", 0), s(1)]);
        assert_eq!(cl.desuspend_clause(), Some(SpaceExpr::atom("X", 0)));
        assert_eq!(SpaceExpr::atom("X", 0).desuspend_clause(), None);
        assert_eq!(s(0).desuspend_clause(), None);
    }
}
