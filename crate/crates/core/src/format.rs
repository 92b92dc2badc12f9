//! The facet-list text format.
//!
//! ```text
//! # the complex from the worked example
//! facet 1 2 3
//! facet 2 4
//! facet 3 4
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. A lone `facet` with
//! no labels denotes the empty face, so a file holding only that line is
//! `{∅}`. A file with no facet lines at all is the void complex.

use std::fmt::Write as _;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<SimplicialComplex> {
    let mut facets: Vec<Vec<&str>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next() {
            Some("facet") => facets.push(words.collect()),
            Some(other) => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected `facet`, found {other:?}"),
                })
            }
            None => unreachable!("line is nonempty"),
        }
    }
    SimplicialComplex::from_facets(facets)
}

/// Writes facets one per line in canonical order. Parsing the output gives
/// back an equal complex.
pub fn write(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    if complex.is_void() {
        out.push_str("# void complex\n");
        return out;
    }
    for facet in complex.facets() {
        out.push_str("facet");
        for label in complex.face_labels(*facet) {
            let _ = write!(out, " {label}");
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{make, Family};
    use proptest::prelude::*;

    #[test]
    fn parses_worked_example() {
        let c = parse("# example\nfacet 1 2 3\n\nfacet 2 4\nfacet 3 4\n").unwrap();
        assert_eq!(c.facets().len(), 3);
        assert_eq!(write(&c), "facet 1 2 3\nfacet 2 4\nfacet 3 4\n");
    }

    #[test]
    fn lone_facet_line_is_empty_complex() {
        assert_eq!(parse("facet\n").unwrap(), SimplicialComplex::empty());
        assert_eq!(write(&SimplicialComplex::empty()), "facet\n");
    }

    #[test]
    fn no_facets_is_void() {
        assert!(parse("# nothing\n").unwrap().is_void());
        assert!(parse(&write(&SimplicialComplex::void())).unwrap().is_void());
    }

    #[test]
    fn rejects_unknown_keywords() {
        assert!(matches!(parse("facet 1\nface 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("facet 1 1\n"), Err(Error::DuplicateVertexInFacet(_))));
    }

    #[test]
    fn round_trips_joins() {
        let c = crate::build::suspension(&make(Family::Cycle(5)).unwrap()).unwrap();
        assert_eq!(parse(&write(&c)).unwrap(), c);
    }

    proptest! {
        #[test]
        fn round_trip_random(seed in any::<u64>(), n in 1usize..12, m in 0usize..8, s in 1usize..6) {
            let c = crate::enumerate::random_complex(seed, n, m, s).unwrap();
            let text = write(&c);
            prop_assert_eq!(parse(&text).unwrap(), c);
        }
    }
}
