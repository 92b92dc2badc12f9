//! Exhaustive and seeded-random complex generators.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`enumerate_all_complexes`].
pub const MAX_ENUMERATION_VERTICES: usize = 5;

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Every non-void complex whose vertices are drawn from `{1, ..., n}`, each
/// exactly once, in a fixed order starting with `{∅}`.
///
/// These correspond to antichains of nonempty subsets of an `n`-set, so
/// there are `M(n) - 1` of them with `M` the Dedekind numbers: 2, 5, 19, 167,
/// 7580 for `n = 1..=5`.
pub fn enumerate_all_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooLarge(n));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let labels = numbered(n);
    // Largest subsets first so a subset is only offered after all its
    // supersets have been decided.
    let mut subsets: Vec<u64> = (1..1u64 << n).collect();
    subsets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));

    let mut out = Vec::new();
    let mut chosen: Vec<u64> = Vec::new();
    extend_antichains(&subsets, 0, &mut chosen, &mut |facets| {
        let complex = if facets.is_empty() {
            SimplicialComplex::empty()
        } else {
            SimplicialComplex::canonical(&labels, facets.iter().map(|&m| Face::from_mask(m)).collect())
        };
        out.push(complex);
    });
    Ok(out)
}

fn extend_antichains(subsets: &[u64], next: usize, chosen: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    if next == subsets.len() {
        emit(chosen);
        return;
    }
    extend_antichains(subsets, next + 1, chosen, emit);
    let s = subsets[next];
    // earlier subsets are at least as large, so only s ⊆ c can clash
    if chosen.iter().all(|&c| s & !c != 0) {
        chosen.push(s);
        extend_antichains(subsets, next + 1, chosen, emit);
        chosen.pop();
    }
}

/// A deterministic pseudo-random complex on vertices drawn from `{1..n}`.
///
/// Draws `facet_count` facets, each with a size uniform in
/// `1..=min(max_facet_size, n)` and a uniformly random vertex set of that
/// size, then canonicalizes. `facet_count = 0` yields `{∅}`.
pub fn random_complex(seed: u64, n: usize, facet_count: usize, max_facet_size: usize) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    if max_facet_size == 0 {
        return Err(Error::InvalidParameter("max_facet_size must be at least 1".into()));
    }
    if facet_count == 0 {
        return Ok(SimplicialComplex::empty());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = max_facet_size.min(n);
    let facets = (0..facet_count)
        .map(|_| {
            let size = rng.gen_range(1..=top);
            let mask = sample(&mut rng, n, size).iter().fold(0u64, |acc, v| acc | 1 << v);
            Face::from_mask(mask)
        })
        .collect();
    Ok(SimplicialComplex::canonical(&numbered(n), facets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Counts antichains of nonempty subsets by testing every family of
    /// nonempty subsets.
    fn brute_force_antichain_count(n: usize) -> usize {
        let subsets: Vec<u64> = (1..1u64 << n).collect();
        (0..1u64 << subsets.len())
            .filter(|family| {
                let members: Vec<u64> = subsets
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| family >> i & 1 == 1)
                    .map(|(_, &s)| s)
                    .collect();
                members.iter().all(|&a| members.iter().all(|&b| a == b || a & !b != 0))
            })
            .count()
    }

    #[test]
    fn counts_match_brute_force() {
        assert_eq!(enumerate_all_complexes(1).unwrap().len(), 2);
        assert_eq!(enumerate_all_complexes(2).unwrap().len(), 5);
        for n in 1..=4 {
            assert_eq!(
                enumerate_all_complexes(n).unwrap().len(),
                brute_force_antichain_count(n),
                "n = {n}"
            );
        }
        assert_eq!(brute_force_antichain_count(3), 19);
        assert_eq!(enumerate_all_complexes(5).unwrap().len(), 7580);
    }

    #[test]
    fn two_vertex_complexes() {
        let all = enumerate_all_complexes(2).unwrap();
        let expected = [
            SimplicialComplex::empty(),
            SimplicialComplex::from_facets([vec!["1"]]).unwrap(),
            SimplicialComplex::from_facets([vec!["2"]]).unwrap(),
            SimplicialComplex::from_facets([vec!["1"], vec!["2"]]).unwrap(),
            SimplicialComplex::from_facets([vec!["1", "2"]]).unwrap(),
        ];
        for c in &expected {
            assert!(all.contains(c), "{c:?} missing");
        }
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let all = enumerate_all_complexes(4).unwrap();
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert_eq!(all[0], SimplicialComplex::empty());
    }

    #[test]
    fn enumeration_limits() {
        assert_eq!(enumerate_all_complexes(6), Err(Error::TooLarge(6)));
        assert!(enumerate_all_complexes(0).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_complex(0, 6, 4, 3).unwrap();
        let b = random_complex(0, 6, 4, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.facets().iter().all(|f| f.len() <= 3));
        assert!(a.vertex_count() <= 6);
    }

    #[test]
    fn random_parameter_errors() {
        assert!(matches!(random_complex(0, 0, 3, 2), Err(Error::InvalidParameter(_))));
        assert!(matches!(random_complex(0, 4, 3, 0), Err(Error::InvalidParameter(_))));
        assert_eq!(random_complex(0, 4, 0, 2).unwrap(), SimplicialComplex::empty());
    }

    #[test]
    fn random_facets_form_an_antichain() {
        for seed in 0..200 {
            let c = random_complex(seed, 8, 6, 5).unwrap();
            for (i, a) in c.facets().iter().enumerate() {
                for (j, b) in c.facets().iter().enumerate() {
                    assert!(i == j || !a.is_subset_of(*b));
                }
            }
        }
    }
}
