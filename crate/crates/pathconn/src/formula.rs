//! Closed-form k-path-connectivity of complete and complete bipartite
//! graphs.
//!
//! For a set `S` of `k >= 2` vertices, `pi_G(S)` is the maximum number of
//! pairwise internally disjoint S-paths, and `pi_k(G)` is the minimum of
//! `pi_G(S)` over all k-subsets. The functions here evaluate the known
//! closed forms:
//!
//! * complete graphs: `pi_k(K_n) = floor((2n + k^2 - 3k) / (2(k-1)))`;
//! * complete bipartite graphs: an eight-branch case split on the shape of
//!   `(a, b, k)`, see [`BipartiteCase`];
//! * the spanning special case `k = a + b`, where `pi_{a+b}(K_{a,b})` counts
//!   edge-disjoint spanning paths.
//!
//! Everything is integer arithmetic; floors are integer division on
//! non-negative operands. Every branch is labeled in the result's
//! provenance so callers can report which case fired.

use crate::error::{Error, Result};
use crate::value::PiValue;

/// The branch of the bipartite case split that produced a value.
///
/// After normalizing to `a <= b`, the eight branches partition the whole
/// domain `{2 <= k <= a + b}`:
///
/// | branch | shape | value |
/// |---|---|---|
/// | `SMALL_K` | `2 <= k <= a` | `floor(a/(k-1))` |
/// | `EQ_SMALL_ONE` | `a = b`, `(a,k) = (3,4)` or `a+1 <= k <= 2a-3` (`a >= 4`) | `1` |
/// | `EQ_TWO` | `a = b >= 4`, `k = 2a-2` | `2` |
/// | `EQ_HALF` | `a = b`, `k = 2a-1` (`a >= 2`) or `k = 2a` | `max(floor(a/2), 1)` |
/// | `OFFBYONE_ONE` | `b = a+1`, `a+1 <= k <= 2a` | `1` |
/// | `OFFBYONE_HALF` | `b = a+1`, `k = a+b` | `floor((a+1)/2)` |
/// | `WIDE_ONE` | `b >= a+2`, `k = a+1` | `1` |
/// | `WIDE_ZERO` | `b >= a+2`, `k >= a+2` | `0` |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BipartiteCase {
    SmallK,
    EqSmallOne,
    EqTwo,
    EqHalf,
    OffByOneOne,
    OffByOneHalf,
    WideOne,
    WideZero,
}

impl BipartiteCase {
    pub const ALL: [BipartiteCase; 8] = [
        BipartiteCase::SmallK,
        BipartiteCase::EqSmallOne,
        BipartiteCase::EqTwo,
        BipartiteCase::EqHalf,
        BipartiteCase::OffByOneOne,
        BipartiteCase::OffByOneHalf,
        BipartiteCase::WideOne,
        BipartiteCase::WideZero,
    ];

    /// Stable label used in provenance, CLI output and serialized documents.
    pub fn name(self) -> &'static str {
        match self {
            BipartiteCase::SmallK => "SMALL_K",
            BipartiteCase::EqSmallOne => "EQ_SMALL_ONE",
            BipartiteCase::EqTwo => "EQ_TWO",
            BipartiteCase::EqHalf => "EQ_HALF",
            BipartiteCase::OffByOneOne => "OFFBYONE_ONE",
            BipartiteCase::OffByOneHalf => "OFFBYONE_HALF",
            BipartiteCase::WideOne => "WIDE_ONE",
            BipartiteCase::WideZero => "WIDE_ZERO",
        }
    }

    /// Two-letter code for dense table output.
    pub fn code(self) -> &'static str {
        match self {
            BipartiteCase::SmallK => "SK",
            BipartiteCase::EqSmallOne => "E1",
            BipartiteCase::EqTwo => "E2",
            BipartiteCase::EqHalf => "EH",
            BipartiteCase::OffByOneOne => "O1",
            BipartiteCase::OffByOneHalf => "OH",
            BipartiteCase::WideOne => "W1",
            BipartiteCase::WideZero => "W0",
        }
    }

    /// Human-readable value expression of the branch (after `a <= b`
    /// normalization).
    pub fn formula_text(self) -> &'static str {
        match self {
            BipartiteCase::SmallK => "floor(a/(k-1)) for 2 <= k <= a",
            BipartiteCase::EqSmallOne => "1 for a=b with (a,k)=(3,4) or a+1 <= k <= 2a-3 (a >= 4)",
            BipartiteCase::EqTwo => "2 for a=b >= 4 with k = 2a-2",
            BipartiteCase::EqHalf => "max(floor(a/2),1) for a=b with k = 2a-1 (a >= 2) or k = 2a",
            BipartiteCase::OffByOneOne => "1 for b=a+1 with a+1 <= k <= 2a",
            BipartiteCase::OffByOneHalf => "floor((a+1)/2) for b=a+1 with k = a+b",
            BipartiteCase::WideOne => "1 for b >= a+2 with k = a+1",
            BipartiteCase::WideZero => "0 for b >= a+2 with a+2 <= k <= a+b",
        }
    }
}

/// `pi_k(K_n) = floor((2n + k^2 - 3k) / (2(k-1)))` for `2 <= k <= n`.
pub fn pi_complete(n: usize, k: usize) -> Result<PiValue> {
    if n < 2 {
        return Err(Error::invalid(format!("need n >= 2, got n={n}")));
    }
    if k < 2 || k > n {
        return Err(Error::invalid(format!(
            "k must satisfy 2 <= k <= n; got k={k}, n={n}"
        )));
    }
    // Numerator is positive: k^2 - 3k >= -2 and 2n >= 4.
    let value = (2 * n + k * k - 3 * k) / (2 * (k - 1));
    Ok(PiValue::from_formula(value, "COMPLETE", false))
}

/// Selects the bipartite branch for `(a, b, k)`. Returns the case and
/// whether the parts were swapped to reach `a <= b`.
pub fn bipartite_case(a: usize, b: usize, k: usize) -> Result<(BipartiteCase, bool)> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("both parts must be nonempty"));
    }
    if k < 2 || k > a + b {
        return Err(Error::invalid(format!(
            "k must satisfy 2 <= k <= a+b; got k={k}, a+b={}",
            a + b
        )));
    }
    let swapped = a > b;
    let (a, b) = if swapped { (b, a) } else { (a, b) };

    let case = if k <= a {
        BipartiteCase::SmallK
    } else if a == b {
        // Branches in the order the case split states them, with their
        // stated side conditions; an exhaustive test checks they partition.
        if (a == 3 && k == 4) || (a >= 4 && a + 1 <= k && k <= 2 * a - 3) {
            BipartiteCase::EqSmallOne
        } else if a >= 4 && k == 2 * a - 2 {
            BipartiteCase::EqTwo
        } else if (a >= 2 && k == 2 * a - 1) || k == 2 * a {
            BipartiteCase::EqHalf
        } else {
            unreachable!("no bipartite branch for a=b={a}, k={k}")
        }
    } else if b == a + 1 {
        if k == a + b {
            BipartiteCase::OffByOneHalf
        } else {
            BipartiteCase::OffByOneOne
        }
    } else if k == a + 1 {
        BipartiteCase::WideOne
    } else {
        BipartiteCase::WideZero
    };
    Ok((case, swapped))
}

/// `pi_k(K_{a,b})` by the closed-form case split. Inputs with `a > b` are
/// normalized by swapping, recorded in the provenance.
pub fn pi_bipartite(a: usize, b: usize, k: usize) -> Result<PiValue> {
    let (case, swapped) = bipartite_case(a, b, k)?;
    let (a, b) = if swapped { (b, a) } else { (a, b) };
    debug_assert!(a <= b);
    let value = match case {
        BipartiteCase::SmallK => a / (k - 1),
        BipartiteCase::EqSmallOne => 1,
        BipartiteCase::EqTwo => 2,
        BipartiteCase::EqHalf => (a / 2).max(1),
        BipartiteCase::OffByOneOne => 1,
        BipartiteCase::OffByOneHalf => (a + 1) / 2,
        BipartiteCase::WideOne => 1,
        BipartiteCase::WideZero => 0,
    };
    Ok(PiValue::from_formula(value, case.name(), swapped))
}

/// Maximum number of edge-disjoint spanning paths of `K_{a,b}`:
/// `max(floor(b/2), 1)` when the part sizes differ by at most one
/// (normalized to `a <= b`), otherwise `0`.
///
/// Computed by its own arithmetic; agreement with
/// `pi_bipartite(a, b, a + b)` is checked by tests, not assumed.
pub fn pi_spanning_bipartite(a: usize, b: usize) -> Result<PiValue> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("both parts must be nonempty"));
    }
    let swapped = a > b;
    let (a, b) = if swapped { (b, a) } else { (a, b) };
    let value = if b <= a + 1 { (b / 2).max(1) } else { 0 };
    Ok(PiValue::from_formula(value, "SPANNING", swapped))
}

/// Edge-counting upper bound on edge-disjoint spanning paths:
/// `floor(a*b / (a+b-1))`, since each spanning path of `K_{a,b}` uses
/// `a + b - 1` of the `a * b` edges.
pub fn spanning_path_edge_bound(a: usize, b: usize) -> usize {
    assert!(a >= 1 && b >= 1, "parts must be nonempty");
    a * b / (a + b - 1)
}
