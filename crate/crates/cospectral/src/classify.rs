//! Exact pair classification.
//!
//! All verdicts except generic equienergeticity are integer polynomial
//! identities: cospectrality compares characteristic polynomials, almost
//! cospectrality compares them after stripping zero roots, and singular
//! cospectrality compares the zero-stripped characteristic polynomials of
//! `A²` (whose nonzero roots are the squared nonzero singular values).
//! Floating point appears only as an advisory cross-check and for the
//! energy comparison of pairs that are not singularly cospectral, where the
//! energies are sums of absolute algebraic numbers with no exact test here.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{char_poly, inertia, poly_inertia, squared_char_poly, Inertia, IntPolynomial};
use crate::spectral;

/// Necessary-condition filters every singularly cospectral pair must pass:
/// equal edge counts, equal ranks, nullity gap equal to the vertex-count
/// gap, and positive counts trading against negative counts.
#[derive(Debug, Clone, Serialize)]
pub struct NecessaryFilters {
    pub edges: (usize, usize),
    pub rank: (usize, usize),
    pub nullity: (usize, usize),
    pub vertices: (usize, usize),
    pub inertia: (Inertia, Inertia),
    pub edges_equal: bool,
    pub rank_equal: bool,
    pub nullity_gap_matches_vertex_gap: bool,
    pub positive_negative_exchange: bool,
}

impl NecessaryFilters {
    pub fn all_pass(&self) -> bool {
        self.edges_equal
            && self.rank_equal
            && self.nullity_gap_matches_vertex_gap
            && self.positive_negative_exchange
    }
}

/// The exact polynomials backing a verdict.
#[derive(Debug, Clone, Serialize)]
pub struct Certificates {
    pub char_poly_left: IntPolynomial,
    pub char_poly_right: IntPolynomial,
    /// Zero-stripped characteristic polynomials (almost-cospectrality key).
    pub reduced_left: IntPolynomial,
    pub reduced_right: IntPolynomial,
    /// Zero-stripped characteristic polynomials of `A²` (singular key).
    pub squared_reduced_left: IntPolynomial,
    pub squared_reduced_right: IntPolynomial,
}

/// Full classification verdict for a pair.
#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub cospectral: bool,
    pub singularly_cospectral: bool,
    pub almost_cospectral: bool,
    pub equienergetic: bool,
    /// True when equienergeticity followed exactly (from singular
    /// cospectrality) rather than from a floating-point comparison.
    pub equienergetic_exact: bool,
    /// `|E(left) - E(right)|` when the numeric route was used.
    pub energy_gap: Option<f64>,
    /// Singularly cospectral but not cospectral.
    pub ncsc: bool,
    pub filters: NecessaryFilters,
    pub certificates: Certificates,
}

/// Equal adjacency spectra, exactly: equal characteristic polynomials
/// (which forces equal vertex counts).
pub fn is_cospectral(g: &Graph, h: &Graph) -> bool {
    char_poly(g) == char_poly(h)
}

/// Equal nonzero singular values with multiplicity, exactly: equal
/// zero-stripped characteristic polynomials of `A²`.
pub fn is_singularly_cospectral(g: &Graph, h: &Graph) -> bool {
    sc_signature(g) == sc_signature(h)
}

/// The exact singular-cospectrality signature: nonzero part of the
/// characteristic polynomial of `A²`.
pub fn sc_signature(g: &Graph) -> IntPolynomial {
    squared_char_poly(g)
        .strip_zero_roots()
        .expect("characteristic polynomials are nonzero")
        .0
}

/// Equal nonzero eigenvalues with multiplicity, exactly: equal
/// zero-stripped characteristic polynomials.
pub fn is_almost_cospectral(g: &Graph, h: &Graph) -> bool {
    ac_signature(g) == ac_signature(h)
}

/// The exact almost-cospectrality signature: nonzero part of the
/// characteristic polynomial.
pub fn ac_signature(g: &Graph) -> IntPolynomial {
    char_poly(g)
        .strip_zero_roots()
        .expect("characteristic polynomials are nonzero")
        .0
}

/// Equal energy. Returns `(verdict, exact)`: a singularly cospectral pair
/// is equienergetic with no floating arithmetic at all; otherwise the
/// energies are compared numerically at relative tolerance `tol`.
pub fn is_equienergetic(g: &Graph, h: &Graph, tol: f64) -> Result<(bool, bool)> {
    if is_singularly_cospectral(g, h) {
        return Ok((true, true));
    }
    let eg = spectral::energy(g, tol)?;
    let eh = spectral::energy(h, tol)?;
    Ok(((eg - eh).abs() < tol * eg.abs().max(1.0), false))
}

/// Runs the full exact classification. Cheap filters (edge count) gate the
/// expensive `A²` comparison, but the report is always complete.
pub fn classify_pair(g: &Graph, h: &Graph) -> PairReport {
    let cp_g = char_poly(g);
    let cp_h = char_poly(h);
    let (red_g, null_g) = cp_g.strip_zero_roots().expect("nonzero");
    let (red_h, null_h) = cp_h.strip_zero_roots().expect("nonzero");
    let in_g = poly_inertia(&cp_g).expect("nonzero");
    let in_h = poly_inertia(&cp_h).expect("nonzero");
    let (m_g, m_h) = (g.edge_count(), h.edge_count());
    let (n_g, n_h) = (g.vertex_count(), h.vertex_count());
    let rank_g = in_g.positive + in_g.negative;
    let rank_h = in_h.positive + in_h.negative;

    let filters = NecessaryFilters {
        edges: (m_g, m_h),
        rank: (rank_g, rank_h),
        nullity: (null_g, null_h),
        vertices: (n_g, n_h),
        inertia: (in_g, in_h),
        edges_equal: m_g == m_h,
        rank_equal: rank_g == rank_h,
        nullity_gap_matches_vertex_gap: null_g.abs_diff(null_h) == n_g.abs_diff(n_h),
        positive_negative_exchange: in_g.positive as isize - in_h.positive as isize
            == in_h.negative as isize - in_g.negative as isize,
    };

    // the filters are necessary conditions: any failure settles the
    // singular verdict before the signatures are compared (the signatures
    // themselves still go into the certificate)
    let sq_g = sc_signature(g);
    let sq_h = sc_signature(h);
    let singularly_cospectral = filters.all_pass() && sq_g == sq_h;
    let cospectral = cp_g == cp_h;
    let almost_cospectral = red_g == red_h;

    let (equienergetic, equienergetic_exact, energy_gap) = if singularly_cospectral {
        (true, true, None)
    } else {
        let tol = 1e-9;
        match (spectral::energy(g, tol), spectral::energy(h, tol)) {
            (Ok(eg), Ok(eh)) => (
                (eg - eh).abs() < tol * eg.abs().max(1.0),
                false,
                Some((eg - eh).abs()),
            ),
            _ => (false, false, None),
        }
    };

    let report = PairReport {
        cospectral,
        singularly_cospectral,
        almost_cospectral,
        equienergetic,
        equienergetic_exact,
        energy_gap,
        ncsc: singularly_cospectral && !cospectral,
        filters,
        certificates: Certificates {
            char_poly_left: cp_g,
            char_poly_right: cp_h,
            reduced_left: red_g,
            reduced_right: red_h,
            squared_reduced_left: sq_g,
            squared_reduced_right: sq_h,
        },
    };
    debug_assert!(report.implication_lattice_holds());
    report
}

impl PairReport {
    /// cospectral ⇒ almost cospectral ⇒ singularly cospectral ⇒
    /// equienergetic (exact), and ncsc ⇔ SC ∧ ¬cospectral.
    pub fn implication_lattice_holds(&self) -> bool {
        (!self.cospectral || self.almost_cospectral)
            && (!self.almost_cospectral || self.singularly_cospectral)
            && (!self.singularly_cospectral || (self.equienergetic && self.equienergetic_exact))
            && (self.ncsc == (self.singularly_cospectral && !self.cospectral))
    }
}

/// Outcome of the regularity obstruction check on a same-order pair.
#[derive(Debug, Clone, Serialize)]
pub struct RegularPairVerdict {
    pub left_degree: Option<usize>,
    pub right_degree: Option<usize>,
    /// True when exactly one side is regular, which forbids singular
    /// cospectrality for same-order pairs.
    pub obstruction_applies: bool,
    pub singularly_cospectral: bool,
}

/// A regular graph cannot be singularly cospectral with a non-regular graph
/// on the same number of vertices. Cross-checks that statement against the
/// exact test; disagreement is an internal error, never a report field.
pub fn check_regular_pair(g: &Graph, h: &Graph) -> Result<RegularPairVerdict> {
    if g.vertex_count() != h.vertex_count() {
        return Err(Error::InvalidParameter(
            "regularity check needs equal vertex counts".into(),
        ));
    }
    let left_degree = g.is_regular();
    let right_degree = h.is_regular();
    let obstruction_applies = left_degree.is_some() != right_degree.is_some();
    let singularly_cospectral = is_singularly_cospectral(g, h);
    if obstruction_applies && singularly_cospectral {
        return Err(Error::TheoremFalsified(format!(
            "regular/non-regular pair on {} vertices claims singular cospectrality",
            g.vertex_count()
        )));
    }
    Ok(RegularPairVerdict {
        left_degree,
        right_degree,
        obstruction_applies,
        singularly_cospectral,
    })
}

/// Which implication hypotheses a singularly cospectral pair satisfies, and
/// whether the implied almost-cospectrality held.
#[derive(Debug, Clone, Serialize)]
pub struct ImplicationReport {
    pub singularly_cospectral: bool,
    pub almost_cospectral: bool,
    /// Both graphs bipartite.
    pub bipartite_applies: bool,
    /// Both connected with the largest singular value of multiplicity >= 2.
    pub dominant_multiplicity_applies: bool,
    /// Both connected, exactly three distinct nonzero singular values, and
    /// the positive or the negative eigenvalue counts agree.
    pub three_values_half_inertia_applies: bool,
    /// Both connected, exactly three distinct nonzero singular values, and
    /// the full inertia triples agree.
    pub three_values_full_inertia_applies: bool,
}

impl ImplicationReport {
    pub fn any_applies(&self) -> bool {
        self.bipartite_applies
            || self.dominant_multiplicity_applies
            || self.three_values_half_inertia_applies
            || self.three_values_full_inertia_applies
    }
}

/// For a connected graph the largest eigenvalue is simple, so its largest
/// singular value has multiplicity >= 2 exactly when the spectrum also
/// contains the negated largest eigenvalue — that is, exactly when the
/// graph is bipartite with at least one edge.
pub fn dominant_singular_multiplicity_at_least_two(g: &Graph) -> bool {
    debug_assert!(g.is_connected());
    g.edge_count() >= 1 && g.is_bipartite()
}

/// Number of distinct nonzero singular values, exactly: distinct roots of
/// the zero-stripped characteristic polynomial of `A²`.
pub fn distinct_nonzero_singular_count(g: &Graph) -> usize {
    sc_signature(g)
        .distinct_root_count()
        .expect("signature polynomial is nonzero")
}

/// Evaluates the hypothesis-gated implications "singularly cospectral ⇒
/// almost cospectral". A falsified implication means a bug in the exact
/// kernels and comes back as [`Error::TheoremFalsified`].
pub fn check_sc_implies_ac(g: &Graph, h: &Graph) -> Result<ImplicationReport> {
    let singularly_cospectral = is_singularly_cospectral(g, h);
    let almost_cospectral = is_almost_cospectral(g, h);
    let mut report = ImplicationReport {
        singularly_cospectral,
        almost_cospectral,
        bipartite_applies: false,
        dominant_multiplicity_applies: false,
        three_values_half_inertia_applies: false,
        three_values_full_inertia_applies: false,
    };
    if !singularly_cospectral {
        return Ok(report);
    }
    report.bipartite_applies = g.is_bipartite() && h.is_bipartite();
    let both_connected = g.is_connected() && h.is_connected();
    if both_connected {
        report.dominant_multiplicity_applies = dominant_singular_multiplicity_at_least_two(g)
            && dominant_singular_multiplicity_at_least_two(h);
        if distinct_nonzero_singular_count(g) == 3 {
            let (ig, ih) = (inertia(g), inertia(h));
            let half = ig.positive == ih.positive || ig.negative == ih.negative;
            report.three_values_half_inertia_applies = half;
            report.three_values_full_inertia_applies = ig == ih;
        }
    }
    if report.any_applies() && !almost_cospectral {
        return Err(Error::TheoremFalsified(format!(
            "singularly cospectral pair under hypotheses {:?} is not almost cospectral",
            (
                report.bipartite_applies,
                report.dominant_multiplicity_applies,
                report.three_values_half_inertia_applies,
                report.three_values_full_inertia_applies,
            )
        )));
    }
    Ok(report)
}
