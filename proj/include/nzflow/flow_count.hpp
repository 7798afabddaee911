#ifndef NZFLOW_FLOW_COUNT_HPP
#define NZFLOW_FLOW_COUNT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "nzflow/multigraph.hpp"
#include "nzflow/orientations.hpp"

namespace nzflow {

struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultOracleCap = 100'000'000;

enum class BoundMode { Open, Closed };      // |x_e| < k_e  vs  |x_e| <= k_e
enum class ZeroMode { NowhereZero, ZerosAllowed };

struct FlowCountQuery {
    CapacityVector capacities;  // strictly positive
    BoundMode bound_mode = BoundMode::Open;
    ZeroMode zero_mode = ZeroMode::NowhereZero;

    static FlowCountQuery open_nowhere_zero(CapacityVector k) {
        return {std::move(k), BoundMode::Open, ZeroMode::NowhereZero};
    }
    static FlowCountQuery closed_zeros_allowed(CapacityVector k) {
        return {std::move(k), BoundMode::Closed, ZeroMode::ZerosAllowed};
    }
};

/// All integer flows satisfying the query bounds, each exactly once, derived
/// from free values on the non-forest edges through the fundamental cycle
/// basis. Output order is deterministic and independent of thread count.
std::vector<FlowVector> enumerate_flows(const Multigraph& g, const FlowCountQuery& q);

mpz_class count_flows(const Multigraph& g, const FlowCountQuery& q);
mpz_class count_flows_serial(const Multigraph& g, const FlowCountQuery& q);

/// phi_G(kvec): nowhere-zero flows with |x_e| < k_e per edge.
mpz_class count_nowhere_zero_kvec(const Multigraph& g, const CapacityVector& k);

/// phi_G(k): nowhere-zero k-flows, values in {-k+1, ..., k-1}.
mpz_class count_nowhere_zero_integer(const Multigraph& g, std::int64_t k);

/// phibar_G(k): nowhere-zero Z_k flows.
mpz_class count_nowhere_zero_zk(const Multigraph& g, std::int64_t k);
mpz_class count_nowhere_zero_zk_serial(const Multigraph& g, std::int64_t k);

/// f_sigma(kvec) = #{x : A_sigma x = 0, 0 < x_e < k_e}. Requires sigma
/// totally cyclic.
mpz_class per_orientation_open_count(const Multigraph& g, const Orientation& sigma,
                                     const CapacityVector& k);

/// #{x : A_sigma x = 0, 0 <= x_e <= k_e}. Requires sigma totally cyclic.
mpz_class per_orientation_closed_count(const Multigraph& g, const Orientation& sigma,
                                       const CapacityVector& k);

/// Sum of per-orientation counts over a whole orientation set, sharing one
/// enumeration plan across the members. The set is assumed to come from
/// enumerate_totally_cyclic.
mpz_class sum_per_orientation_counts(const Multigraph& g, const OrientationSet& omega,
                                     const CapacityVector& k, BoundMode mode);

/// Flows with |x_e| <= k_e, each weighted by its number of compatible totally
/// cyclic orientations. Entries of k may be zero; k = 0 leaves only the zero
/// flow, weighted by |Omega|.
mpz_class weighted_tco_flow_count(const Multigraph& g, const std::vector<std::int64_t>& k,
                                  const OrientationSet& omega);
mpz_class weighted_tco_flow_count(const Multigraph& g, const std::vector<std::int64_t>& k);

/// Naive reference: scans the full box and tests A x = 0 directly against the
/// incidence matrix. Shares no code with the spanning-forest enumerator.
/// Throws OracleCapExceeded when the box holds more than `cap` points.
std::vector<FlowVector> oracle_enumerate(const Multigraph& g, const FlowCountQuery& q,
                                         std::int64_t cap = kDefaultOracleCap);
mpz_class oracle_count(const Multigraph& g, const FlowCountQuery& q,
                       std::int64_t cap = kDefaultOracleCap);

}  // namespace nzflow

#endif
