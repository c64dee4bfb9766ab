//! Closed-walk counting and the walk-count characterization of singular
//! cospectrality.
//!
//! The number of closed walks of length `2k` is `trace(A^{2k})`, the power
//! sum of the squared singular values. Newton's identities recover the
//! elementary symmetric functions of at most `K` values from the first `K`
//! power sums, so two graphs share all nonzero singular values exactly when
//! their even-walk counts agree for `k = 1..=max(n_g, n_h)`. That makes the
//! equivalence testable with a finite horizon.

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::constructions::{double, tensor_k2};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::even_trace_powers;

/// Closed-walk counts of even lengths: `counts[k - 1]` is the number of
/// closed walks of length `2k`, exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkProfile {
    pub counts: Vec<BigInt>,
    pub horizon: usize,
}

impl Serialize for WalkProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // counts as decimal strings: they outgrow every fixed-width JSON number
        let mut s = serializer.serialize_struct("WalkProfile", 2)?;
        let counts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        s.serialize_field("counts", &counts)?;
        s.serialize_field("horizon", &self.horizon)?;
        s.end()
    }
}

/// Computes the walk profile up to `2 * horizon`-step walks.
pub fn walk_profile(g: &Graph, horizon: usize) -> Result<WalkProfile> {
    if horizon == 0 {
        return Err(Error::InvalidParameter("walk profile needs horizon >= 1".into()));
    }
    Ok(WalkProfile {
        counts: even_trace_powers(g, horizon),
        horizon,
    })
}

/// True when the two graphs have the same number of closed walks of every
/// even length up to `2 * horizon`. With `horizon = max(n_g, n_h)` this is
/// equivalent to the exact singular-cospectrality test.
pub fn walk_equivalent(g: &Graph, h: &Graph, horizon: usize) -> Result<bool> {
    Ok(walk_profile(g, horizon)? == walk_profile(h, horizon)?)
}

/// The sufficient horizon for [`walk_equivalent`] to decide singular
/// cospectrality: the larger vertex count bounds the number of nonzero
/// squared singular values on both sides.
pub fn sufficient_horizon(g: &Graph, h: &Graph) -> usize {
    g.vertex_count().max(h.vertex_count()).max(1)
}

/// The cycle demo pair at parameter `j >= 3`: the bipartite double cover of
/// `C_j` alongside two disjoint copies of `C_j`. For odd `j` the double
/// cover is the single cycle `C_{2j}` and the pair is singularly cospectral
/// but not cospectral; for even `j` the double cover already equals the two
/// disjoint copies, so the pair is trivially cospectral.
pub fn cycle_pair(j: usize) -> Result<(Graph, Graph)> {
    if j < 3 {
        return Err(Error::InvalidParameter(format!("cycle pair needs j >= 3, got {j}")));
    }
    let base = Graph::cycle(j)?;
    Ok((
        tensor_k2(&base).with_label(format!("c{j}-double-cover")),
        double(&base).with_label(format!("two-c{j}")),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_cospectral, is_singularly_cospectral};
    use crate::poly::trace_power;

    #[test]
    fn profile_basics() {
        let c4 = Graph::cycle(4).unwrap();
        let p = walk_profile(&c4, 3).unwrap();
        assert_eq!(p.counts[0], BigInt::from(8)); // 2m
        let k3 = Graph::complete(3);
        assert_eq!(walk_profile(&k3, 2).unwrap().counts[1], BigInt::from(18));
        let empty = walk_profile(&Graph::empty(4), 5).unwrap();
        assert!(empty.counts.iter().all(|c| c == &BigInt::from(0)));
        assert!(walk_profile(&c4, 0).is_err());
    }

    #[test]
    fn profile_matches_trace_powers() {
        let g = crate::catalog::book_b3();
        let p = walk_profile(&g, 5).unwrap();
        for k in 1..=5usize {
            assert_eq!(p.counts[k - 1], trace_power(&g, 2 * k).unwrap());
        }
    }

    #[test]
    fn equivalence_cases() {
        let c6 = Graph::cycle(6).unwrap();
        let two_c3 = double(&Graph::complete(3));
        assert!(walk_equivalent(&c6, &two_c3, 6).unwrap());
        // different edge counts already split at the first entry
        assert!(!walk_equivalent(&Graph::complete(3), &Graph::path(3), 3).unwrap());
    }

    #[test]
    fn cycle_pair_verdicts() {
        // verdicts frozen from the exact classification itself
        for j in 3..=8usize {
            let (g, h) = cycle_pair(j).unwrap();
            assert!(is_singularly_cospectral(&g, &h), "j={j}");
            assert_eq!(is_cospectral(&g, &h), j % 2 == 0, "j={j}");
            if j % 2 == 1 {
                // odd cycles: the double cover is the doubled cycle
                assert!(is_cospectral(&g, &Graph::cycle(2 * j).unwrap()));
            } else {
                // even cycles: the doubled cycle is a genuinely different
                // graph that is not even singularly cospectral with the pair
                assert!(!is_singularly_cospectral(&Graph::cycle(2 * j).unwrap(), &h), "j={j}");
            }
        }
        assert!(cycle_pair(2).is_err());
    }

    #[test]
    fn sufficient_horizon_is_max_order() {
        let g = Graph::cycle(6).unwrap();
        let h = Graph::complete(4);
        assert_eq!(sufficient_horizon(&g, &h), 6);
        assert_eq!(sufficient_horizon(&Graph::empty(0), &Graph::empty(0)), 1);
    }
}
