//! Property E, the Dehn-Sommerville relations and Eulerian complexes.
//!
//! A `(d-1)`-dimensional complex has *Property E* when
//! `e_k = (-1)^(d-k) f_{k-1}` for every `0 ≤ k ≤ d`, and *weak Property E*
//! when this holds for `1 ≤ k ≤ d`. Weak Property E is equivalent to the
//! general Dehn-Sommerville relations
//!
//! ```text
//! h_k - h_{d-k} = (-1)^k C(d,k) (χ̃(S^{d-1}) - χ̃(Δ)),   χ̃(S^{d-1}) = 1 + (-1)^(d-1)
//! ```
//!
//! and Property E to the classical ones, `h_k = h_{d-k}`. [`classify`]
//! evaluates both sides of each equivalence separately and treats a mismatch
//! as an internal error.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::build::join;
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hilbert::{evaluate_coarse, evaluate_e_poly_exact};
use crate::pascal::{sign, Binomials};
use crate::poly::IntPolynomial;
use crate::vectors::{e_polynomial, f_polynomial, f_to_e, f_to_h, EVector, FVector};

/// Outcome of one check, with a description of the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// `χ̃(S^{d-1}) = 1 + (-1)^(d-1)`, which is 0 for `d = 0`.
fn sphere_chi(d: usize) -> BigInt {
    if d % 2 == 1 {
        BigInt::from(2)
    } else {
        BigInt::zero()
    }
}

fn topological_chi(f: &FVector) -> BigInt {
    f.entries()
        .iter()
        .skip(1)
        .enumerate()
        .fold(BigInt::zero(), |acc, (i, fi)| acc + sign(i) * fi)
}

fn property_e_range(f: &FVector, e: &EVector, from: usize) -> Verdict {
    let d = f.d();
    for k in from..=d {
        let rhs = sign(d - k) * &f.entries()[k];
        if e.entries()[k] != rhs {
            return Verdict::fail(format!(
                "k = {k}: e_{k} = {} but (-1)^{} f_{} = {rhs}",
                e.entries()[k],
                d - k,
                k as isize - 1
            ));
        }
    }
    Verdict::pass()
}

pub fn check_property_e(complex: &SimplicialComplex) -> Result<Verdict> {
    let f = complex.f_vector()?;
    Ok(property_e_range(&f, &f_to_e(&f), 0))
}

pub fn check_weak_property_e(complex: &SimplicialComplex) -> Result<Verdict> {
    let f = complex.f_vector()?;
    Ok(property_e_range(&f, &f_to_e(&f), 1))
}

/// `h_k = h_{d-k}` for all `k`.
pub fn check_classical_ds(complex: &SimplicialComplex) -> Result<Verdict> {
    let h = f_to_h(&complex.f_vector()?);
    let h = h.entries();
    let d = h.len() - 1;
    for k in 0..=d {
        if h[k] != h[d - k] {
            return Ok(Verdict::fail(format!(
                "k = {k}: h_{k} = {} but h_{} = {}",
                h[k],
                d - k,
                h[d - k]
            )));
        }
    }
    Ok(Verdict::pass())
}

pub fn check_general_ds(complex: &SimplicialComplex) -> Result<Verdict> {
    let f = complex.f_vector()?;
    let h = f_to_h(&f);
    let h = h.entries();
    let d = f.d();
    let c = Binomials::new(d);
    let gap = sphere_chi(d) - topological_chi(&f);
    for k in 0..=d {
        let lhs = &h[k] - &h[d - k];
        let rhs = sign(k) * c.get(d, k) * &gap;
        if lhs != rhs {
            return Ok(Verdict::fail(format!(
                "k = {k}: h_{k} - h_{} = {lhs} but expected {rhs}",
                d - k
            )));
        }
    }
    Ok(Verdict::pass())
}

/// `χ̃(Lk σ)` for every nonempty face `σ`, from the face list alone:
/// the faces of `Lk σ` are the `ρ \ σ` with `ρ ⊇ σ`, so
/// `χ̃(Lk σ) = Σ_{ρ ⊋ σ} (-1)^(|ρ| - |σ| - 1)`.
fn link_euler_characteristics(faces: &[Face]) -> HashMap<Face, i64> {
    let mut acc: HashMap<Face, i64> = faces.iter().filter(|f| !f.is_empty()).map(|f| (*f, 0)).collect();
    for rho in faces {
        for sigma in rho.subfaces() {
            if sigma.is_empty() || sigma == *rho {
                continue;
            }
            let gap = rho.len() - sigma.len() - 1;
            *acc.get_mut(&sigma).expect("subfaces of faces are faces") += if gap % 2 == 0 { 1 } else { -1 };
        }
    }
    acc
}

/// Pure, and every nonempty face `σ` has `χ̃(Lk σ) = 1 + (-1)^(d + dim σ)`.
pub fn is_eulerian(complex: &SimplicialComplex) -> Result<Verdict> {
    if !complex.is_pure()? {
        return Ok(Verdict::fail("not pure".into()));
    }
    let d = (complex.dimension()? + 1) as usize;
    let faces = complex.faces()?;
    let chis = link_euler_characteristics(&faces);
    for sigma in faces.iter().filter(|f| !f.is_empty()) {
        // d + dim σ = d + |σ| - 1
        let target = if (d + sigma.len() - 1).is_multiple_of(2) { 2 } else { 0 };
        let got = chis[sigma];
        if got != target {
            return Ok(Verdict::fail(format!(
                "link of {} has Euler characteristic {got}, expected {target}",
                complex.describe_face(*sigma)
            )));
        }
    }
    Ok(Verdict::pass())
}

/// Eulerian with `χ̃(Δ) = 1 + (-1)^(d-1)`.
pub fn is_eulerian_sphere(complex: &SimplicialComplex) -> Result<Verdict> {
    let eulerian = is_eulerian(complex)?;
    if !eulerian.holds {
        return Ok(eulerian);
    }
    let f = complex.f_vector()?;
    let chi = topological_chi(&f);
    let target = sphere_chi(f.d());
    if chi != target {
        return Ok(Verdict::fail(format!("Euler characteristic {chi}, expected {target}")));
    }
    Ok(Verdict::pass())
}

/// Result of the local criterion: if every vertex link has Property E then
/// `e_Δ(t) + (-1)^(d+1) f_Δ(-t) = e_0 + (-1)^(d+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkCriterion {
    /// Every vertex link has Property E.
    pub hypothesis: bool,
    /// The polynomial identity holds.
    pub identity: bool,
    pub note: Option<String>,
}

impl LinkCriterion {
    /// False only when the hypothesis holds and the identity does not.
    pub fn ok(&self) -> bool {
        !self.hypothesis || self.identity
    }
}

pub fn check_prop2_identity(complex: &SimplicialComplex) -> Result<LinkCriterion> {
    let f = complex.f_vector()?;
    let d = f.d();
    let e = f_to_e(&f);
    let lhs = &e_polynomial(&e) + &f_polynomial(&f).reflect().scale(&sign(d + 1));
    let rhs = IntPolynomial::constant(&e.entries()[0] + sign(d + 1));
    let identity = lhs == rhs;

    let mut note = None;
    for (v, lk) in complex.vertex_links()?.iter().enumerate() {
        let verdict = check_property_e(lk)?;
        if !verdict.holds {
            note = Some(format!(
                "link of vertex {} lacks Property E ({})",
                complex.label(v),
                verdict.witness.unwrap_or_default()
            ));
            break;
        }
    }
    let hypothesis = note.is_none();
    if hypothesis && !identity && !complex.is_pure()? {
        // The derivative argument needs every link to have dimension d - 2.
        note = Some("complex is not pure, so some vertex link has lower dimension".into());
    }
    Ok(LinkCriterion {
        hypothesis,
        identity,
        note,
    })
}

/// For two complexes with Property E, confirms that their join has
/// Property E and that `e_{Δ1∗Δ2}(t) = e_{Δ1}(t) e_{Δ2}(t)`.
pub fn check_join_property_e(left: &SimplicialComplex, right: &SimplicialComplex) -> Result<bool> {
    for (side, c) in [("left", left), ("right", right)] {
        let v = check_property_e(c)?;
        if !v.holds {
            return Err(Error::HypothesisNotMet(format!(
                "{side} factor lacks Property E: {}",
                v.witness.unwrap_or_default()
            )));
        }
    }
    let joined = join(left, right)?;
    let e = |c: &SimplicialComplex| -> Result<IntPolynomial> { Ok(e_polynomial(&f_to_e(&c.f_vector()?))) };
    let product = &e(left)? * &e(right)?;
    Ok(check_property_e(&joined)?.holds && e(&joined)? == product)
}

/// Evaluations tied to Akita's formula. Both verdicts are `None` unless the
/// complex is Eulerian; `root_ok` additionally needs odd dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AkitaCheck {
    /// `e_Δ(1/2) = χ̃(Δ)`, exactly.
    pub akita_ok: Option<bool>,
    /// `e_Δ(1/2) = 0` exactly and `|E(S/I_Δ; -ln 2)| < 1e-9`.
    pub root_ok: Option<bool>,
    /// `e_Δ(1/2)` as an exact fraction.
    pub e_at_half: String,
}

pub const ROOT_TOLERANCE: f64 = 1e-9;

pub fn akita_and_root_checks(complex: &SimplicialComplex) -> Result<AkitaCheck> {
    let f = complex.f_vector()?;
    let e = f_to_e(&f);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let at_half = evaluate_e_poly_exact(&e, &half);
    let mut check = AkitaCheck {
        akita_ok: None,
        root_ok: None,
        e_at_half: at_half.to_string(),
    };
    if !is_eulerian(complex)?.holds {
        return Ok(check);
    }
    check.akita_ok = Some(at_half == BigRational::from_integer(topological_chi(&f)));
    if complex.dimension()? % 2 != 0 {
        let numeric = evaluate_coarse(&e, -std::f64::consts::LN_2);
        check.root_ok = Some(at_half.is_zero() && numeric.abs() < ROOT_TOLERANCE);
    }
    Ok(check)
}

/// Every property verdict for one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property_e: bool,
    pub weak_property_e: bool,
    pub classical_ds: bool,
    pub general_ds: bool,
    pub eulerian: bool,
    pub eulerian_sphere: bool,
    pub pure: bool,
    /// First failure among the checks, in field order.
    pub witness: Option<String>,
}

/// Runs every check and cross-validates weak Property E against the general
/// Dehn-Sommerville relations and Property E against the classical ones.
pub fn classify(complex: &SimplicialComplex) -> Result<PropertyReport> {
    let property_e = check_property_e(complex)?;
    let weak = check_weak_property_e(complex)?;
    let classical = check_classical_ds(complex)?;
    let general = check_general_ds(complex)?;
    let eulerian = is_eulerian(complex)?;
    let sphere = is_eulerian_sphere(complex)?;
    let pure = complex.is_pure()?;

    if weak.holds != general.holds {
        return Err(Error::InternalInconsistency(format!(
            "weak Property E is {} but general Dehn-Sommerville is {} for {complex:?}",
            weak.holds, general.holds
        )));
    }
    if property_e.holds != classical.holds {
        return Err(Error::InternalInconsistency(format!(
            "Property E is {} but classical Dehn-Sommerville is {} for {complex:?}",
            property_e.holds, classical.holds
        )));
    }

    let labelled = [
        ("property_e", &property_e),
        ("weak_property_e", &weak),
        ("classical_ds", &classical),
        ("general_ds", &general),
        ("eulerian", &eulerian),
        ("eulerian_sphere", &sphere),
    ];
    let witness = labelled
        .iter()
        .find(|(_, v)| !v.holds)
        .map(|(name, v)| format!("{name}: {}", v.witness.clone().unwrap_or_default()));

    Ok(PropertyReport {
        property_e: property_e.holds,
        weak_property_e: weak.holds,
        classical_ds: classical.holds,
        general_ds: general.holds,
        eulerian: eulerian.holds,
        eulerian_sphere: sphere.holds,
        pure,
        witness,
    })
}
