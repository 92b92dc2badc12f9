//! Face vectors, exponential Hilbert series and Dehn-Sommerville checks for
//! abstract simplicial complexes, in exact integer arithmetic.
//!
//! ```
//! use scx::{SimplicialComplex, vectors::{f_to_e, f_to_h}};
//!
//! let c = SimplicialComplex::from_facets([vec!["1", "2", "3"], vec!["2", "4"], vec!["3", "4"]]).unwrap();
//! let f = c.f_vector().unwrap();
//! assert_eq!(f, scx::FVector::from_i64s(&[1, 4, 5, 1]).unwrap());
//! assert_eq!(f_to_e(&f), scx::EVector::from_i64s(&[1, -3, 2, 1]).unwrap());
//! assert_eq!(f_to_h(&f), scx::HVector::from_i64s(&[1, 1, 0, -1]).unwrap());
//! ```
//!
//! The guide in `book/` walks through the constructions in more detail; its
//! code samples run as doc-tests of this crate.

pub mod build;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod hilbert;
pub mod pascal;
pub mod poly;
pub mod properties;
pub mod vectors;

pub use build::{join, make, suspension, Family};
pub use complex::{EulerCharacteristics, Face, SimplicialComplex};
pub use enumerate::{enumerate_all_complexes, random_complex};
pub use error::{Error, Result};
pub use hilbert::{FineEPolynomial, MultiDegree};
pub use num_bigint::BigInt;
pub use poly::IntPolynomial;
pub use properties::{classify, PropertyReport};
pub use vectors::{EVector, FVector, HVector};

macro_rules! book_chapters {
    ($($name:ident => $file:literal),* $(,)?) => {
        $(
            #[cfg(doctest)]
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            mod $name {}
        )*
    };
}

book_chapters! {
    book_introduction => "introduction.md",
    book_complexes => "complexes.md",
    book_vectors => "vectors.md",
    book_hilbert => "hilbert.md",
    book_properties => "properties.md",
    book_eulerian => "eulerian.md",
    book_cli => "cli.md",
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
