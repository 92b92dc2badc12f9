//! f-, h- and e-vectors and the exact transforms between them.
//!
//! All three vectors of a `(d-1)`-dimensional complex have `d + 1` entries:
//!
//! * `f = (f_{-1}, f_0, ..., f_{d-1})`, face counts by dimension;
//! * `h = (h_0, ..., h_d)`, with `h_k = Σ_{i≤k} (-1)^(k-i) C(d-i, k-i) f_{i-1}`;
//! * `e = (e_0, ..., e_d)`, the coefficients of the coarse exponential Hilbert
//!   series written as a polynomial in `y = e^t`, with
//!   `e_k = Σ_{i≥k} (-1)^(i-k) C(i,k) f_{i-1}`.
//!
//! Equivalently `e(t) = f(t - 1)` and `h(t) = (1-t)^d f(t/(1-t))`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::pascal::{sign, Binomials};
use crate::poly::IntPolynomial;

fn serialize_decimal<S: Serializer>(entries: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(entries.len()))?;
    for x in entries {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

macro_rules! vector_common {
    ($ty:ident) => {
        impl $ty {
            pub fn entries(&self) -> &[BigInt] {
                &self.0
            }

            pub fn into_entries(self) -> Vec<BigInt> {
                self.0
            }

            /// `d`, one less than the number of entries.
            pub fn d(&self) -> usize {
                self.0.len() - 1
            }
        }

        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_decimal(&self.0, s)
            }
        }
    };
}

/// `(f_{-1}, ..., f_{d-1})`: `f_{-1} = 1`, entries nonnegative, `f_{d-1} ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(Vec<BigInt>);

/// `(e_0, ..., e_d)`. Any nonempty integer sequence is accepted; whether it
/// comes from an f-vector is decided by [`e_to_f`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EVector(Vec<BigInt>);

/// `(h_0, ..., h_d)`. Validity is decided by [`h_to_f`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector(Vec<BigInt>);

vector_common!(FVector);
vector_common!(EVector);
vector_common!(HVector);

impl FVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        match entries.first() {
            None => return Err(Error::NotAnFVector("no entries".into())),
            Some(first) if !first.is_one() => return Err(Error::NotAnFVector(format!("f_-1 = {first}, expected 1"))),
            _ => {}
        }
        if let Some(i) = entries.iter().position(|x| x.is_negative()) {
            return Err(Error::NotAnFVector(format!(
                "f_{} = {} is negative",
                i as isize - 1,
                entries[i]
            )));
        }
        if entries.last().is_some_and(Zero::is_zero) {
            return Err(Error::NotAnFVector("top entry is zero".into()));
        }
        Ok(FVector(entries))
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `f_i` for `-1 ≤ i ≤ d-1`.
    pub fn face_count(&self, i: isize) -> &BigInt {
        &self.0[(i + 1) as usize]
    }
}

impl EVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NotAnEVector("no entries".into()));
        }
        Ok(EVector(entries))
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NotAnHVector("no entries".into()));
        }
        Ok(HVector(entries))
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }
}

/// Rejects a pair of vectors whose `d` differ.
pub fn ensure_same_d(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub fn f_to_e(f: &FVector) -> EVector {
    let d = f.d();
    let c = Binomials::new(d);
    let e = (0..=d)
        .map(|k| (k..=d).fold(BigInt::zero(), |acc, i| acc + sign(i - k) * c.get(i, k) * &f.0[i]))
        .collect();
    EVector(e)
}

/// `f_{i-1} = Σ_{j≥i} C(j,i) e_j`.
pub fn e_to_f(e: &EVector) -> Result<FVector> {
    let d = e.d();
    let c = Binomials::new(d);
    let f = (0..=d)
        .map(|i| (i..=d).fold(BigInt::zero(), |acc, j| acc + c.get(j, i) * &e.0[j]))
        .collect();
    FVector::new(f).map_err(|err| match err {
        Error::NotAnFVector(msg) => Error::NotAnEVector(msg),
        other => other,
    })
}

pub fn f_to_h(f: &FVector) -> HVector {
    let d = f.d();
    let c = Binomials::new(d);
    let h = (0..=d)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, i| {
                acc + sign(k - i) * c.get(d - i, k - i) * &f.0[i]
            })
        })
        .collect();
    HVector(h)
}

/// `f_{i-1} = Σ_{j≤i} C(d-j, i-j) h_j`.
pub fn h_to_f(h: &HVector) -> Result<FVector> {
    let d = h.d();
    let c = Binomials::new(d);
    let f = (0..=d)
        .map(|i| (0..=i).fold(BigInt::zero(), |acc, j| acc + c.get(d - j, i - j) * &h.0[j]))
        .collect();
    FVector::new(f).map_err(|err| match err {
        Error::NotAnFVector(msg) => Error::NotAnHVector(msg),
        other => other,
    })
}

/// `e_k = (-1)^(d-k) Σ_{j≥d-k} C(j, d-k) h_j`, read off from
/// `e(t) = Σ_j h_j (t-1)^j t^(d-j)`.
///
/// The input must be the h-vector of some f-vector; this is checked through
/// [`h_to_f`] first.
pub fn h_to_e(h: &HVector) -> Result<EVector> {
    h_to_f(h)?;
    let d = h.d();
    let c = Binomials::new(d);
    let e = (0..=d)
        .map(|k| {
            let m = d - k;
            sign(m) * (m..=d).fold(BigInt::zero(), |acc, j| acc + c.get(j, m) * &h.0[j])
        })
        .collect();
    Ok(EVector(e))
}

pub fn f_polynomial(f: &FVector) -> IntPolynomial {
    IntPolynomial::new(f.0.clone())
}

pub fn e_polynomial(e: &EVector) -> IntPolynomial {
    IntPolynomial::new(e.0.clone())
}

pub fn h_polynomial(h: &HVector) -> IntPolynomial {
    IntPolynomial::new(h.0.clone())
}

/// `p(t + c)`.
pub fn shift_poly(p: &IntPolynomial, c: &BigInt) -> IntPolynomial {
    p.shift(c)
}

/// `Σ_i f_{i-1} t^i (1-t)^(d-i)`, the h-polynomial built from the f-vector
/// without going through [`f_to_h`].
pub fn h_poly_from_f_poly(f: &FVector) -> IntPolynomial {
    let d = f.d();
    let one_minus_t = IntPolynomial::from_i64s(&[1, -1]);
    let t = IntPolynomial::from_i64s(&[0, 1]);
    f.0.iter().enumerate().fold(IntPolynomial::zero(), |acc, (i, fi)| {
        let term = (&t.pow(i) * &one_minus_t.pow(d - i)).scale(fi);
        &acc + &term
    })
}

/// The three vectors of one complex, serialized as
/// `{"d":3,"f":["1",...],"h":[...],"e":[...]}`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct VectorSet {
    pub d: usize,
    pub f: FVector,
    pub h: HVector,
    pub e: EVector,
}

impl VectorSet {
    pub fn from_f(f: FVector) -> Self {
        VectorSet {
            d: f.d(),
            h: f_to_h(&f),
            e: f_to_e(&f),
            f,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(v: &[i64]) -> FVector {
        FVector::from_i64s(v).unwrap()
    }

    fn ev(v: &[i64]) -> EVector {
        EVector::from_i64s(v).unwrap()
    }

    fn hv(v: &[i64]) -> HVector {
        HVector::from_i64s(v).unwrap()
    }

    #[test]
    fn f_vector_validation() {
        assert!(FVector::from_i64s(&[]).is_err());
        assert!(FVector::from_i64s(&[2, 1]).is_err());
        assert!(FVector::from_i64s(&[1, -1, 1]).is_err());
        assert!(FVector::from_i64s(&[1, 3, 0]).is_err());
        assert_eq!(fv(&[1]).d(), 0);
    }

    #[test]
    fn f_to_e_examples() {
        assert_eq!(f_to_e(&fv(&[1, 4, 5, 1])), ev(&[1, -3, 2, 1]));
        assert_eq!(f_to_e(&fv(&[1, 4, 6, 4])), ev(&[-1, 4, -6, 4]));
        assert_eq!(f_to_e(&fv(&[1])), ev(&[1]));
    }

    #[test]
    fn e_to_f_examples() {
        assert_eq!(e_to_f(&ev(&[1, -3, 2, 1])).unwrap(), fv(&[1, 4, 5, 1]));
        assert_eq!(e_to_f(&ev(&[-1, 4, -6, 4])).unwrap(), fv(&[1, 4, 6, 4]));
        assert_eq!(e_to_f(&ev(&[1])).unwrap(), fv(&[1]));
    }

    #[test]
    fn e_to_f_rejects_non_e_vectors() {
        // f_{-1} = Σ e = 2
        assert!(matches!(e_to_f(&ev(&[1, 1])), Err(Error::NotAnEVector(_))));
        // f_0 = e_1 + 2 e_2 = -1
        assert!(matches!(e_to_f(&ev(&[3, -3, 1])), Err(Error::NotAnEVector(_))));
        // top entry zero
        assert!(matches!(e_to_f(&ev(&[1, 0])), Err(Error::NotAnEVector(_))));
    }

    #[test]
    fn f_to_h_examples() {
        assert_eq!(f_to_h(&fv(&[1, 4, 6, 4])), hv(&[1, 1, 1, 1]));
        assert_eq!(f_to_h(&fv(&[1, 4, 5, 1])), hv(&[1, 1, 0, -1]));
        assert_eq!(f_to_h(&fv(&[1])), hv(&[1]));
        assert_eq!(f_to_h(&fv(&[1, 4, 4])), hv(&[1, 2, 1]));
    }

    #[test]
    fn h_to_f_examples() {
        assert_eq!(h_to_f(&hv(&[1, 1, 1, 1])).unwrap(), fv(&[1, 4, 6, 4]));
        assert_eq!(h_to_f(&hv(&[1, 1, 0, -1])).unwrap(), fv(&[1, 4, 5, 1]));
        assert_eq!(h_to_f(&hv(&[1])).unwrap(), fv(&[1]));
        assert!(matches!(h_to_f(&hv(&[2, 0])), Err(Error::NotAnHVector(_))));
        assert!(matches!(h_to_f(&hv(&[1, -5, 0])), Err(Error::NotAnHVector(_))));
    }

    #[test]
    fn h_to_e_examples() {
        assert_eq!(h_to_e(&hv(&[1, 1, 1, 1])).unwrap(), ev(&[-1, 4, -6, 4]));
        assert_eq!(h_to_e(&hv(&[1, 1, 0, -1])).unwrap(), ev(&[1, -3, 2, 1]));
        assert_eq!(h_to_e(&hv(&[1])).unwrap(), ev(&[1]));
        assert!(h_to_e(&hv(&[3])).is_err());
    }

    #[test]
    fn polynomials_copy_coefficients() {
        assert_eq!(
            f_polynomial(&fv(&[1, 4, 5, 1])),
            IntPolynomial::from_i64s(&[1, 4, 5, 1])
        );
        assert_eq!(
            e_polynomial(&ev(&[-1, 4, -6, 4])),
            IntPolynomial::from_i64s(&[-1, 4, -6, 4])
        );
        assert_eq!(f_polynomial(&fv(&[1])), IntPolynomial::one());
        assert_eq!(
            h_polynomial(&hv(&[1, 1, 0, -1])),
            IntPolynomial::from_i64s(&[1, 1, 0, -1])
        );
    }

    #[test]
    fn h_polynomial_from_f() {
        assert_eq!(
            h_poly_from_f_poly(&fv(&[1, 4, 6, 4])),
            IntPolynomial::from_i64s(&[1, 1, 1, 1])
        );
        assert_eq!(
            h_poly_from_f_poly(&fv(&[1, 4, 5, 1])),
            IntPolynomial::from_i64s(&[1, 1, 0, -1])
        );
        assert_eq!(h_poly_from_f_poly(&fv(&[1])), IntPolynomial::one());
    }

    #[test]
    fn shift_gives_e_polynomial() {
        let f = fv(&[1, 4, 5, 1]);
        assert_eq!(
            shift_poly(&f_polynomial(&f), &BigInt::from(-1)),
            e_polynomial(&f_to_e(&f))
        );
    }

    #[test]
    fn json_uses_decimal_strings() {
        let set = VectorSet::from_f(fv(&[1, 4, 5, 1]));
        let json = serde_json::to_string(&set).unwrap();
        assert_eq!(
            json,
            r#"{"d":3,"f":["1","4","5","1"],"h":["1","1","0","-1"],"e":["1","-3","2","1"]}"#
        );
    }

    #[test]
    fn mismatched_d_rejected() {
        assert!(ensure_same_d(3, 3).is_ok());
        assert_eq!(
            ensure_same_d(3, 2),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        );
    }
}
