#ifndef NZFLOW_INTERPOLATE_HPP
#define NZFLOW_INTERPOLATE_HPP

#include <optional>

#include "nzflow/flow_count.hpp"
#include "nzflow/multigraph.hpp"
#include "nzflow/polynomial.hpp"

namespace nzflow {

/// The fitted polynomial did not reproduce the counts at the validation
/// points: a region boundary runs through the sample grid (or the caller's
/// assumptions are wrong). Move or rescale the base point.
struct ValidationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InterpolationReport {
    MultivariatePolynomial piece;
    CapacityVector base_point;
    std::vector<CapacityVector> sample_points;
    std::vector<CapacityVector> validation_points;
    mpq_class max_residual;  // exactly 0 on success
    int claimed_degree = -1;
};

/// Fits the unique polynomial of total degree <= cyclomatic number through
/// the nowhere-zero flow counts on the principal lattice {base + d : d >= 0,
/// sum(d) <= degree}, then verifies it on |E|+2 extra points near base
/// (offset by `validation_shift`, the all-ones vector by default).
/// Requires a bridgeless graph and strictly positive base entries.
InterpolationReport interpolate_piece(const Multigraph& g, const CapacityVector& base,
                                      const CapacityVector& validation_shift = {});

/// Fits the piece of the region whose closure contains the ray through
/// `direction`: tries bases scale*direction for each scale in turn, returning
/// the first fit that validates. Throws ValidationFailed when none does
/// (e.g. the direction lies on a region boundary).
InterpolationReport chamber_piece(const Multigraph& g, const CapacityVector& direction,
                                  const std::vector<std::int64_t>& scales = {4, 8, 16,
                                                                             32});

enum class UnivariateCounter { IntegerFlow, ZkFlow };

/// Fits phi_G or phibar_G through counts at k = 2..degree+2 and validates at
/// two more points; `degree` must equal the cyclomatic number.
MultivariatePolynomial interpolate_univariate(UnivariateCounter counter,
                                              const Multigraph& g, int degree);

struct ReciprocityReport {
    CapacityVector kvec;
    mpz_class lhs;                  // (-1)^xi * phi_G(-kvec), via interpolation
    mpz_class rhs_weighted;         // weighted (k+1)-flow count
    mpz_class rhs_orientation_sum;  // sum of closed per-orientation counts
    bool pass = false;
    MultivariatePolynomial ray_polynomial;  // phi_G(t*kvec) as polynomial in t
};

/// Checks the reciprocity law at kvec >= 1 on a bridgeless graph. The left
/// side is obtained by interpolating the counting function along the ray
/// {t*kvec : t = 1..xi+1} (validated at xi+2 and xi+3) and evaluating at
/// t = -1; this equals the region polynomial of any region whose closure
/// contains kvec, evaluated at -kvec.
ReciprocityReport reciprocity_check(const Multigraph& g, const CapacityVector& kvec);
ReciprocityReport reciprocity_check(const Multigraph& g, const CapacityVector& kvec,
                                    const OrientationSet& omega);

/// Same check, but the left side evaluates a previously fitted piece at
/// -kvec. The piece is first validated against counts on the dilates t*kvec,
/// t = 1..xi+2; a mismatch raises ValidationFailed (kvec lies outside the
/// piece's region).
ReciprocityReport reciprocity_check(const Multigraph& g,
                                    const MultivariatePolynomial& piece,
                                    const CapacityVector& kvec);

struct TcoZeroReport {
    mpz_class via_piece;   // (-1)^xi * piece(0)
    mpz_class enumerated;  // |Omega| by exhaustive filtering
    bool pass = false;
};

TcoZeroReport tco_count_via_zero(const Multigraph& g, const MultivariatePolynomial& piece);
TcoZeroReport tco_count_via_zero(const Multigraph& g);

/// Finds a validated piece by trying a built-in list of spread directions.
InterpolationReport find_chamber_piece(const Multigraph& g);

/// Candidate region walls. Forms come from the fundamental cycles and the
/// fundamental cuts of the spanning forest: for each such edge set S and each
/// e in S, the hyperplane k_e = sum of k_f over f in S \ {e}. Forms are
/// normalized (first nonzero coefficient positive) and deduplicated.
struct WallForm {
    std::vector<int> coeffs;      // length |E|
    bool circuit_derived = true;  // false: detected by probe, no closed form

    std::string to_string() const;
};

std::vector<WallForm> candidate_wall_forms(const Multigraph& g);

struct ProbeSample {
    CapacityVector point;
    bool fitted = false;
    std::optional<MultivariatePolynomial> piece;
};

struct ProbeWall {
    CapacityVector lower, upper;     // consecutive fitted samples that disagree
    std::vector<WallForm> matches;   // candidates changing sign in between;
                                     // empty means detected-by-probe only
};

struct ProbeReport {
    std::vector<ProbeSample> samples;
    std::vector<ProbeWall> walls;
};

/// Samples steps+1 points on the segment from `a` to `b`, fits the region
/// piece at each (skipping points where no fit validates, e.g. on a wall),
/// and reports every interval between consecutive fitted samples whose
/// pieces differ, matched against candidate_wall_forms when possible.
ProbeReport probe_walls(const Multigraph& g, const CapacityVector& a,
                        const CapacityVector& b, int steps);

/// Coefficient of the total-degree part of a univariate polynomial in k;
/// reported for phi_G but never asserted against a formula.
mpq_class leading_coefficient(const MultivariatePolynomial& univariate);

}  // namespace nzflow

#endif
