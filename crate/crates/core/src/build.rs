//! Standard families of complexes, joins and suspensions.

use crate::complex::{Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};

/// The named families understood by [`make`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// All proper subsets of a `(d+1)`-set: a `(d-1)`-sphere.
    BoundarySimplex(usize),
    /// The full `d`-simplex on `d+1` vertices.
    FullSimplex(usize),
    /// The `n`-gon graph.
    Cycle(usize),
    /// Boundary of the `d`-dimensional cross-polytope, the join of `d` copies
    /// of two points.
    CrossPolytope(usize),
    /// An `n`-cycle with `k` pendant edges attached to vertex `1`.
    WhiskeredCycle(usize, usize),
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn check_vertices(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Builds a member of a standard family, labelled `1..=N`.
pub fn make(family: Family) -> Result<SimplicialComplex> {
    match family {
        Family::BoundarySimplex(d) => {
            if d < 1 {
                return Err(invalid("boundary-simplex needs d >= 1"));
            }
            check_vertices(d + 1)?;
            let all = (1u64 << (d + 1)) - 1;
            let facets = (0..=d).map(|v| Face::from_mask(all & !(1 << v))).collect();
            Ok(SimplicialComplex::canonical(&numbered(d + 1), facets))
        }
        Family::FullSimplex(d) => {
            if d < 1 {
                return Err(invalid("full-simplex needs d >= 1"));
            }
            check_vertices(d + 1)?;
            let all = (1u64 << (d + 1)) - 1;
            Ok(SimplicialComplex::canonical(
                &numbered(d + 1),
                vec![Face::from_mask(all)],
            ))
        }
        Family::Cycle(n) => cycle_with_whiskers(n, 0),
        Family::WhiskeredCycle(n, k) => cycle_with_whiskers(n, k),
        Family::CrossPolytope(d) => {
            if d < 1 {
                return Err(invalid("cross-polytope needs d >= 1"));
            }
            check_vertices(2 * d)?;
            // vertices 2i and 2i+1 are antipodal; a facet picks one of each pair
            let facets = (0..1u64 << d)
                .map(|choice| {
                    Face::from_mask((0..d).fold(0u64, |acc, i| acc | 1 << (2 * i + ((choice >> i) & 1) as usize)))
                })
                .collect();
            Ok(SimplicialComplex::canonical(&numbered(2 * d), facets))
        }
    }
}

fn cycle_with_whiskers(n: usize, k: usize) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(invalid("cycles need n >= 3"));
    }
    check_vertices(n + k)?;
    let mut facets: Vec<Face> = (0..n).map(|i| Face::from_mask(1 << i | 1 << ((i + 1) % n))).collect();
    facets.extend((0..k).map(|j| Face::from_mask(1 | 1 << (n + j))));
    Ok(SimplicialComplex::canonical(&numbered(n + k), facets))
}

/// Two isolated points, the 0-sphere.
pub fn zero_sphere() -> SimplicialComplex {
    SimplicialComplex::canonical(&numbered(2), vec![Face::from_mask(1), Face::from_mask(2)])
}

/// The join `Δ1 ∗ Δ2`, with labels prefixed `L.` and `R.` to keep the vertex
/// sets disjoint. Facets are the pairwise unions of facets.
pub fn join(left: &SimplicialComplex, right: &SimplicialComplex) -> Result<SimplicialComplex> {
    if left.is_void() || right.is_void() {
        return Err(Error::VoidComplex);
    }
    let shift = left.vertex_count();
    check_vertices(shift + right.vertex_count())?;
    let labels: Vec<String> = left
        .labels()
        .iter()
        .map(|l| format!("L.{l}"))
        .chain(right.labels().iter().map(|l| format!("R.{l}")))
        .collect();
    let mut facets = Vec::with_capacity(left.facets().len() * right.facets().len());
    for a in left.facets() {
        for b in right.facets() {
            facets.push(Face::from_mask(a.mask() | (b.mask() << shift)));
        }
    }
    Ok(SimplicialComplex::canonical(&labels, facets))
}

/// `join(S⁰, Δ)`.
pub fn suspension(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    join(&zero_sphere(), complex)
}
