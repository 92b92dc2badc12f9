//! Stanley-Reisner rings and their exponential Hilbert series.
//!
//! For a complex `Δ` on `n` vertices, `S/I_Δ` has a basis of monomials `x^a`
//! whose support is a face, so each multidegree has dimension 0 or 1. Writing
//! `y_i = e^{x_i}`, the fine exponential Hilbert series is
//!
//! ```text
//! E(S/I_Δ; x) = Σ_{σ ∈ Δ} Π_{i ∈ σ} (y_i - 1) = Σ_τ c_τ Π_{i ∈ τ} y_i
//! ```
//!
//! with `c_τ = Σ_{σ ⊇ τ} (-1)^{|σ|-|τ|}`. Setting every `x_i = t` collapses
//! this to `Σ_k e_k e^{kt}`, where `e` is the e-vector.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::vectors::{e_polynomial, EVector};

/// An exponent vector `a ∈ ℕⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiDegree(exponents)
    }

    pub fn zero(n: usize) -> Self {
        MultiDegree(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `|a|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `{i | a_i ≠ 0}`.
    pub fn support(&self) -> Face {
        Face::from_mask(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .fold(0u64, |acc, (i, _)| acc | 1 << i),
        )
    }

    /// Every multidegree of length `n` with entries in `0..=max_entry`, in
    /// lexicographic order.
    pub fn all_bounded(n: usize, max_entry: u32) -> impl Iterator<Item = MultiDegree> {
        let base = max_entry as u64 + 1;
        let count = base.pow(n as u32);
        (0..count).map(move |mut code| {
            let mut a = vec![0u32; n];
            for slot in a.iter_mut().rev() {
                *slot = (code % base) as u32;
                code /= base;
            }
            MultiDegree(a)
        })
    }
}

fn check_len(expected: usize, a: &MultiDegree) -> Result<()> {
    if a.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            found: a.len(),
        })
    }
}

/// Inclusion-minimal vertex subsets that are not faces; their squarefree
/// monomials minimally generate `I_Δ`.
///
/// Every proper subset of a minimal non-face is a face, so candidates are
/// `σ ∪ {v}` for faces `σ` and vertices `v ∉ σ`.
pub fn minimal_nonfaces(complex: &SimplicialComplex) -> Result<Vec<Face>> {
    let faces: HashSet<u64> = complex.faces()?.into_iter().map(Face::mask).collect();
    let n = complex.vertex_count();
    let mut found: HashSet<u64> = HashSet::new();
    for &sigma in &faces {
        for v in 0..n {
            let bit = 1u64 << v;
            if sigma & bit != 0 {
                continue;
            }
            let tau = sigma | bit;
            if faces.contains(&tau) || found.contains(&tau) {
                continue;
            }
            if Face::from_mask(tau)
                .vertices()
                .all(|w| faces.contains(&(tau & !(1 << w))))
            {
                found.insert(tau);
            }
        }
    }
    let mut out: Vec<Face> = found.into_iter().map(Face::from_mask).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `S/I_Δ` for one complex, with its minimal non-faces computed once.
#[derive(Clone, Debug)]
pub struct StanleyReisnerRing<'a> {
    complex: &'a SimplicialComplex,
    nonfaces: Vec<Face>,
}

impl<'a> StanleyReisnerRing<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Result<Self> {
        Ok(StanleyReisnerRing {
            complex,
            nonfaces: minimal_nonfaces(complex)?,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        self.complex
    }

    pub fn minimal_nonfaces(&self) -> &[Face] {
        &self.nonfaces
    }

    /// 1 when the support of `a` is a face.
    pub fn dimension_by_support(&self, a: &MultiDegree) -> Result<u8> {
        check_len(self.complex.vertex_count(), a)?;
        Ok(self.complex.contains(a.support()) as u8)
    }

    /// 1 when `x^a` is divisible by no minimal generator of `I_Δ`.
    pub fn dimension_by_nonfaces(&self, a: &MultiDegree) -> Result<u8> {
        check_len(self.complex.vertex_count(), a)?;
        let support = a.support();
        Ok(!self.nonfaces.iter().any(|g| g.is_subset_of(support)) as u8)
    }

    /// `dim_k (S/I_Δ)_a`. Debug builds compute it both ways and report a
    /// disagreement as [`Error::InternalInconsistency`].
    pub fn graded_dimension(&self, a: &MultiDegree) -> Result<u8> {
        let by_support = self.dimension_by_support(a)?;
        if cfg!(debug_assertions) {
            let by_nonfaces = self.dimension_by_nonfaces(a)?;
            if by_support != by_nonfaces {
                return Err(Error::InternalInconsistency(format!(
                    "graded dimension at {:?}: support test {by_support}, non-face test {by_nonfaces}",
                    a.exponents()
                )));
            }
        }
        Ok(by_support)
    }
}

pub fn graded_dimension(complex: &SimplicialComplex, a: &MultiDegree) -> Result<u8> {
    StanleyReisnerRing::new(complex)?.graded_dimension(a)
}

/// Coefficients `c_τ` of `Π_{i∈τ} e^{x_i}` in the fine exponential Hilbert
/// series. Only faces can carry a nonzero coefficient; zero coefficients are
/// not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FineEPolynomial {
    n: usize,
    d: usize,
    terms: BTreeMap<Face, BigInt>,
}

impl FineEPolynomial {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `dim Δ + 1`.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn coefficient(&self, tau: Face) -> BigInt {
        self.terms.get(&tau).cloned().unwrap_or_default()
    }

    /// Nonzero terms in face order.
    pub fn terms(&self) -> impl Iterator<Item = (Face, &BigInt)> {
        self.terms.iter().map(|(f, c)| (*f, c))
    }

    /// Coefficient of `x^a / a!`: expanding `e^{Σ_{i∈τ} x_i}` shows it is
    /// `Σ_{τ ⊇ supp(a)} c_τ`.
    pub fn taylor_coefficient(&self, a: &MultiDegree) -> Result<BigInt> {
        check_len(self.n, a)?;
        let support = a.support();
        Ok(self
            .terms
            .iter()
            .filter(|(tau, _)| support.is_subset_of(**tau))
            .map(|(_, c)| c)
            .sum())
    }

    /// Numeric value of the series at `x`.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(tau, c)| c.to_f64().unwrap_or(f64::NAN) * tau.vertices().map(|i| x[i]).sum::<f64>().exp())
            .sum())
    }
}

pub fn fine_e_polynomial(complex: &SimplicialComplex) -> Result<FineEPolynomial> {
    let faces = complex.faces()?;
    let d = (complex.dimension()? + 1) as usize;
    let mut acc: HashMap<Face, i64> = HashMap::new();
    for sigma in faces {
        for tau in sigma.subfaces() {
            let sign = if (sigma.len() - tau.len()) % 2 == 0 { 1 } else { -1 };
            *acc.entry(tau).or_insert(0) += sign;
        }
    }
    let terms = acc
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(f, c)| (f, BigInt::from(c)))
        .collect();
    Ok(FineEPolynomial {
        n: complex.vertex_count(),
        d,
        terms,
    })
}

/// `x_i = t` for all `i`: `e_k = Σ_{|τ|=k} c_τ`.
pub fn coarse_from_fine(fine: &FineEPolynomial) -> EVector {
    let mut e = vec![BigInt::zero(); fine.d + 1];
    for (tau, c) in &fine.terms {
        e[tau.len()] += c;
    }
    EVector::new(e).expect("d + 1 >= 1 entries")
}

pub fn taylor_coefficient(fine: &FineEPolynomial, a: &MultiDegree) -> Result<BigInt> {
    fine.taylor_coefficient(a)
}

/// `E(S(-a); x)` for a free module generated in degree `a`, in the closed
/// form `Π_i (e^{x_i} - Σ_{k<a_i} x_i^k / k!)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleSeries {
    pub shift: MultiDegree,
}

impl FreeModuleSeries {
    pub fn new(shift: MultiDegree) -> Self {
        FreeModuleSeries { shift }
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        free_module_series_eval(&self.shift, x)
    }
}

/// Overflow is not an error; the result is then infinite or NaN.
pub fn free_module_series_eval(a: &MultiDegree, x: &[f64]) -> Result<f64> {
    if x.len() != a.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: x.len(),
        });
    }
    Ok(a.exponents()
        .iter()
        .zip(x)
        .map(|(&ai, &xi)| {
            let mut head = 0.0;
            let mut term = 1.0;
            for k in 0..ai {
                head += term;
                term *= xi / (k + 1) as f64;
            }
            xi.exp() - head
        })
        .product())
}

/// `Σ_k e_k e^{kt}`, the coarse exponential Hilbert series.
pub fn evaluate_coarse(e: &EVector, t: f64) -> f64 {
    let y = t.exp();
    e_polynomial(e).eval_f64(y)
}

/// `Σ_{σ∈Δ} (e^t - 1)^{|σ|}`, the coarse series summed face by face.
pub fn evaluate_coarse_by_faces(complex: &SimplicialComplex, t: f64) -> Result<f64> {
    let base = t.exp_m1();
    Ok(complex.faces()?.iter().map(|f| base.powi(f.len() as i32)).sum())
}

/// `e_Δ(q) = Σ_k e_k q^k` in exact rational arithmetic.
pub fn evaluate_e_poly_exact(e: &EVector, q: &BigRational) -> BigRational {
    e_polynomial(e).eval_rational(q)
}
