#include "nzflow/flow_count.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nzflow {

namespace {

using u128 = unsigned __int128;

mpz_class mpz_from_u128(u128 v) {
    mpz_class r = static_cast<unsigned long>(v >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(v & ~0ULL);
    return r;
}

struct EdgeRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    bool exclude_zero = false;

    std::int64_t width() const { return hi < lo ? 0 : hi - lo + 1; }
    bool admits(std::int64_t v) const {
        return v >= lo && v <= hi && !(exclude_zero && v == 0);
    }
};

std::vector<EdgeRange> query_ranges(const Multigraph& g, const FlowCountQuery& q) {
    require_edge_length(g, q.capacities.size(), "capacities");
    std::vector<EdgeRange> r(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        std::int64_t k = q.capacities[e];
        if (k < 1) throw std::invalid_argument("capacities must be >= 1");
        std::int64_t b = (q.bound_mode == BoundMode::Open) ? k - 1 : k;
        r[e] = {-b, b, q.zero_mode == ZeroMode::NowhereZero};
    }
    return r;
}

// Free-edge iteration order (ascending range width) plus the dependency
// structure of forest edges on free values. Structure only; the actual bounds
// are supplied per query so that a plan can be reused across orientations.
struct EnumPlan {
    struct Term {
        int tree_index;
        std::int8_t coeff;
    };
    int edge_count = 0;
    std::vector<int> free_edges;   // iteration order
    std::vector<int> tree_edges;   // forest edges with at least one free term
    std::vector<int> const_edges;  // forest edges whose value is identically 0
    std::vector<std::int8_t> leaf_coeff;          // per tree index, 0 if none
    std::vector<std::vector<Term>> terms_at;      // per level
    std::vector<std::vector<int>> determined_at;  // per level, tree indices
};

EnumPlan build_plan(const Multigraph& g, const CycleBasis& basis,
                    const std::vector<EdgeRange>& ranges) {
    EnumPlan plan;
    plan.edge_count = g.edge_count();
    int nfree = static_cast<int>(basis.free_edges.size());

    std::vector<int> order(nfree);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        std::int64_t wa = ranges[basis.free_edges[a]].width();
        std::int64_t wb = ranges[basis.free_edges[b]].width();
        if (wa != wb) return wa < wb;
        return basis.free_edges[a] < basis.free_edges[b];
    });
    plan.free_edges.reserve(nfree);
    for (int j : order) plan.free_edges.push_back(basis.free_edges[j]);
    plan.terms_at.resize(nfree);
    plan.determined_at.resize(nfree);

    for (int f : basis.forest_edges) {
        int last = -1;
        for (int j = 0; j < nfree; ++j)
            if (basis.cycles[order[j]][f] != 0) last = j;
        if (last < 0) {
            plan.const_edges.push_back(f);
            continue;
        }
        int t = static_cast<int>(plan.tree_edges.size());
        plan.tree_edges.push_back(f);
        plan.leaf_coeff.push_back(last == nfree - 1 ? basis.cycles[order[last]][f] : 0);
        for (int j = 0; j < nfree; ++j) {
            std::int8_t c = basis.cycles[order[j]][f];
            if (c != 0) plan.terms_at[j].push_back({t, c});
        }
        plan.determined_at[last].push_back(t);
    }
    return plan;
}

// Bounds aligned with a plan: per free level and per tree index.
struct PlanBounds {
    std::vector<EdgeRange> free_r;
    std::vector<EdgeRange> tree_r;
    bool const_ok = true;

    void fill(const EnumPlan& plan, const std::vector<EdgeRange>& ranges) {
        free_r.resize(plan.free_edges.size());
        for (std::size_t j = 0; j < plan.free_edges.size(); ++j)
            free_r[j] = ranges[plan.free_edges[j]];
        tree_r.resize(plan.tree_edges.size());
        for (std::size_t t = 0; t < plan.tree_edges.size(); ++t)
            tree_r[t] = ranges[plan.tree_edges[t]];
        const_ok = true;
        for (int f : plan.const_edges)
            if (!ranges[f].admits(0)) const_ok = false;
    }
};

struct CountWorker {
    const EnumPlan& plan;
    const PlanBounds& bounds;
    std::vector<std::int64_t> partial;  // per tree index
    std::vector<std::int64_t> saved;
    std::vector<std::int64_t> leaf_points;
    u128 total = 0;

    CountWorker(const EnumPlan& p, const PlanBounds& b)
        : plan(p), bounds(b), partial(p.tree_edges.size(), 0) {}

    bool determined_ok(int level) {
        for (int t : plan.determined_at[level])
            if (!bounds.tree_r[t].admits(partial[t])) return false;
        return true;
    }

    void leaf() {
        int level = static_cast<int>(plan.free_edges.size()) - 1;
        const EdgeRange& r = bounds.free_r[level];
        std::int64_t lo = r.lo, hi = r.hi;
        leaf_points.clear();
        if (r.exclude_zero) leaf_points.push_back(0);
        for (int t : plan.determined_at[level]) {
            const EdgeRange& tr = bounds.tree_r[t];
            std::int64_t p = partial[t];
            if (plan.leaf_coeff[t] > 0) {
                lo = std::max(lo, tr.lo - p);
                hi = std::min(hi, tr.hi - p);
            } else {
                lo = std::max(lo, p - tr.hi);
                hi = std::min(hi, p - tr.lo);
            }
            if (tr.exclude_zero) leaf_points.push_back(-p * plan.leaf_coeff[t]);
        }
        if (hi < lo) return;
        std::int64_t n = hi - lo + 1;
        std::sort(leaf_points.begin(), leaf_points.end());
        leaf_points.erase(std::unique(leaf_points.begin(), leaf_points.end()),
                          leaf_points.end());
        for (auto v : leaf_points)
            if (v >= lo && v <= hi) --n;
        total += static_cast<u128>(n);
    }

    void run(int level) {
        if (level == static_cast<int>(plan.free_edges.size()) - 1) {
            leaf();
            return;
        }
        const EdgeRange& r = bounds.free_r[level];
        const auto& terms = plan.terms_at[level];
        std::size_t base = saved.size();
        for (const auto& tm : terms) saved.push_back(partial[tm.tree_index]);
        for (std::int64_t y = r.lo; y <= r.hi; ++y) {
            if (y == 0 && r.exclude_zero) continue;
            for (std::size_t i = 0; i < terms.size(); ++i)
                partial[terms[i].tree_index] = saved[base + i] + terms[i].coeff * y;
            if (determined_ok(level)) run(level + 1);
        }
        for (std::size_t i = 0; i < terms.size(); ++i)
            partial[terms[i].tree_index] = saved[base + i];
        saved.resize(base);
    }
};

u128 count_core(const EnumPlan& plan, const PlanBounds& bounds, bool parallel) {
    if (!bounds.const_ok) return 0;
    int nfree = static_cast<int>(plan.free_edges.size());
    if (nfree == 0) return 1;
    if (nfree == 1 || !parallel) {
        CountWorker w(plan, bounds);
        w.run(0);
        return w.total;
    }

    const EdgeRange r0 = bounds.free_r[0];
    std::int64_t width = r0.width();
    u128 total = 0;
#pragma omp parallel
    {
        CountWorker w(plan, bounds);
        u128 local = 0;
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t i = 0; i < width; ++i) {
            std::int64_t y = r0.lo + i;
            if (y == 0 && r0.exclude_zero) continue;
            const auto& terms = plan.terms_at[0];
            for (const auto& tm : terms) w.partial[tm.tree_index] = tm.coeff * y;
            if (!w.determined_ok(0)) continue;
            w.total = 0;
            w.run(1);
            local += w.total;
        }
#pragma omp critical
        total += local;
    }
    return total;
}

// Full walk visiting every flow; fn receives a reused buffer in edge order.
template <class Fn>
void walk_core(const EnumPlan& plan, const PlanBounds& bounds, int first_level,
               std::vector<std::int64_t>& partial, FlowVector& x, Fn&& fn) {
    int nfree = static_cast<int>(plan.free_edges.size());
    if (first_level == nfree) {
        for (std::size_t t = 0; t < plan.tree_edges.size(); ++t)
            x[plan.tree_edges[t]] = partial[t];
        fn(const_cast<const FlowVector&>(x));
        return;
    }
    const EdgeRange& r = bounds.free_r[first_level];
    const auto& terms = plan.terms_at[first_level];
    std::vector<std::int64_t> saved(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) saved[i] = partial[terms[i].tree_index];
    for (std::int64_t y = r.lo; y <= r.hi; ++y) {
        if (y == 0 && r.exclude_zero) continue;
        for (std::size_t i = 0; i < terms.size(); ++i)
            partial[terms[i].tree_index] = saved[i] + terms[i].coeff * y;
        bool ok = true;
        for (int t : plan.determined_at[first_level])
            if (!bounds.tree_r[t].admits(partial[t])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        x[plan.free_edges[first_level]] = y;
        walk_core(plan, bounds, first_level + 1, partial, x, fn);
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
        partial[terms[i].tree_index] = saved[i];
}

template <class Fn>
void for_each_flow(const Multigraph& g, const std::vector<EdgeRange>& ranges, Fn&& fn) {
    CycleBasis basis = fundamental_cycle_basis(g);
    EnumPlan plan = build_plan(g, basis, ranges);
    PlanBounds bounds;
    bounds.fill(plan, ranges);
    if (!bounds.const_ok) return;
    std::vector<std::int64_t> partial(plan.tree_edges.size(), 0);
    FlowVector x(g.edge_count(), 0);
    walk_core(plan, bounds, 0, partial, x, fn);
}

mpz_class count_with_ranges(const Multigraph& g, const std::vector<EdgeRange>& ranges,
                            bool parallel) {
    CycleBasis basis = fundamental_cycle_basis(g);
    EnumPlan plan = build_plan(g, basis, ranges);
    PlanBounds bounds;
    bounds.fill(plan, ranges);
    return mpz_from_u128(count_core(plan, bounds, parallel));
}

std::vector<EdgeRange> orientation_ranges(const Multigraph& g, const Orientation& sigma,
                                          const CapacityVector& k, BoundMode mode) {
    require_edge_length(g, sigma.signs.size(), "orientation");
    require_edge_length(g, k.size(), "capacities");
    std::vector<EdgeRange> ranges(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (k[e] < 1) throw std::invalid_argument("capacities must be >= 1");
        std::int64_t lo = (mode == BoundMode::Open) ? 1 : 0;
        std::int64_t hi = (mode == BoundMode::Open) ? k[e] - 1 : k[e];
        if (sigma.signs[e] > 0)
            ranges[e] = {lo, hi, false};
        else
            ranges[e] = {-hi, -lo, false};
    }
    return ranges;
}

std::uint32_t orientation_mask(const Orientation& o) {
    std::uint32_t m = 0;
    for (std::size_t e = 0; e < o.signs.size(); ++e)
        if (o.signs[e] < 0) m |= (1u << e);
    return m;
}

}  // namespace

std::vector<FlowVector> enumerate_flows(const Multigraph& g, const FlowCountQuery& q) {
    auto ranges = query_ranges(g, q);
    CycleBasis basis = fundamental_cycle_basis(g);
    EnumPlan plan = build_plan(g, basis, ranges);
    PlanBounds bounds;
    bounds.fill(plan, ranges);
    std::vector<FlowVector> out;
    if (!bounds.const_ok) return out;

    int nfree = static_cast<int>(plan.free_edges.size());
    const std::int64_t width0 = nfree > 0 ? bounds.free_r[0].width() : 0;
    if (nfree < 2 || width0 > 1'000'000) {
        std::vector<std::int64_t> partial(plan.tree_edges.size(), 0);
        FlowVector x(g.edge_count(), 0);
        walk_core(plan, bounds, 0, partial, x, [&](const FlowVector& f) { out.push_back(f); });
        return out;
    }

    // One slot per value of the first free coordinate; concatenation in slot
    // order keeps the output independent of the thread count.
    std::vector<std::vector<FlowVector>> slots(static_cast<std::size_t>(width0));
    const EdgeRange r0 = bounds.free_r[0];
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < width0; ++i) {
        std::int64_t y = r0.lo + i;
        if (y == 0 && r0.exclude_zero) continue;
        std::vector<std::int64_t> partial(plan.tree_edges.size(), 0);
        const auto& terms = plan.terms_at[0];
        for (const auto& tm : terms) partial[tm.tree_index] = tm.coeff * y;
        bool ok = true;
        for (int t : plan.determined_at[0])
            if (!bounds.tree_r[t].admits(partial[t])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        FlowVector x(g.edge_count(), 0);
        x[plan.free_edges[0]] = y;
        walk_core(plan, bounds, 1, partial, x,
                  [&](const FlowVector& f) { slots[i].push_back(f); });
    }
    for (auto& s : slots)
        for (auto& f : s) out.push_back(std::move(f));
    return out;
}

mpz_class count_flows(const Multigraph& g, const FlowCountQuery& q) {
    return count_with_ranges(g, query_ranges(g, q), true);
}

mpz_class count_flows_serial(const Multigraph& g, const FlowCountQuery& q) {
    return count_with_ranges(g, query_ranges(g, q), false);
}

mpz_class count_nowhere_zero_kvec(const Multigraph& g, const CapacityVector& k) {
    return count_flows(g, FlowCountQuery::open_nowhere_zero(k));
}

mpz_class count_nowhere_zero_integer(const Multigraph& g, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return count_nowhere_zero_kvec(g, CapacityVector(g.edge_count(), k));
}

namespace {

struct ZkWorker {
    const EnumPlan& plan;
    std::int64_t k;
    std::vector<std::int64_t> partial;
    std::vector<std::int64_t> saved;
    std::vector<std::int64_t> excluded;
    u128 total = 0;

    ZkWorker(const EnumPlan& p, std::int64_t modulus)
        : plan(p), k(modulus), partial(p.tree_edges.size(), 0) {}

    std::int64_t norm(std::int64_t v) const {
        v %= k;
        return v < 0 ? v + k : v;
    }

    bool determined_ok(int level) {
        for (int t : plan.determined_at[level])
            if (partial[t] == 0) return false;
        return true;
    }

    void leaf() {
        int level = static_cast<int>(plan.free_edges.size()) - 1;
        excluded.clear();
        for (int t : plan.determined_at[level]) {
            // partial + c*y = 0 (mod k)  <=>  y = -c*partial (mod k)
            std::int64_t y = norm(-plan.leaf_coeff[t] * partial[t]);
            if (y != 0) excluded.push_back(y);
        }
        std::sort(excluded.begin(), excluded.end());
        excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
        total += static_cast<u128>(k - 1 - static_cast<std::int64_t>(excluded.size()));
    }

    void run(int level) {
        if (level == static_cast<int>(plan.free_edges.size()) - 1) {
            leaf();
            return;
        }
        const auto& terms = plan.terms_at[level];
        std::size_t base = saved.size();
        for (const auto& tm : terms) saved.push_back(partial[tm.tree_index]);
        for (std::int64_t y = 1; y < k; ++y) {
            for (std::size_t i = 0; i < terms.size(); ++i)
                partial[terms[i].tree_index] = norm(saved[base + i] + terms[i].coeff * y);
            if (determined_ok(level)) run(level + 1);
        }
        for (std::size_t i = 0; i < terms.size(); ++i)
            partial[terms[i].tree_index] = saved[base + i];
        saved.resize(base);
    }
};

mpz_class count_zk_impl(const Multigraph& g, std::int64_t k, bool parallel) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<EdgeRange> ranges(g.edge_count(), EdgeRange{0, 0, false});
    CycleBasis basis = fundamental_cycle_basis(g);
    EnumPlan plan = build_plan(g, basis, ranges);
    // A forest edge with no free terms carries the constant value 0 in Z_k.
    if (!plan.const_edges.empty() || (k == 1 && g.edge_count() > 0)) return 0;
    int nfree = static_cast<int>(plan.free_edges.size());
    if (nfree == 0) return plan.tree_edges.empty() ? 1 : 0;
    if (nfree == 1 || !parallel) {
        ZkWorker w(plan, k);
        w.run(0);
        return mpz_from_u128(w.total);
    }
    u128 total = 0;
#pragma omp parallel
    {
        ZkWorker w(plan, k);
        u128 local = 0;
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t y = 1; y < k; ++y) {
            const auto& terms = plan.terms_at[0];
            for (const auto& tm : terms) w.partial[tm.tree_index] = w.norm(tm.coeff * y);
            if (!w.determined_ok(0)) continue;
            w.total = 0;
            w.run(1);
            local += w.total;
        }
#pragma omp critical
        total += local;
    }
    return mpz_from_u128(total);
}

}  // namespace

mpz_class count_nowhere_zero_zk(const Multigraph& g, std::int64_t k) {
    return count_zk_impl(g, k, true);
}

mpz_class count_nowhere_zero_zk_serial(const Multigraph& g, std::int64_t k) {
    return count_zk_impl(g, k, false);
}

mpz_class per_orientation_open_count(const Multigraph& g, const Orientation& sigma,
                                     const CapacityVector& k) {
    if (!is_totally_cyclic(g, sigma))
        throw std::invalid_argument("orientation is not totally cyclic");
    return count_with_ranges(g, orientation_ranges(g, sigma, k, BoundMode::Open), true);
}

mpz_class per_orientation_closed_count(const Multigraph& g, const Orientation& sigma,
                                       const CapacityVector& k) {
    if (!is_totally_cyclic(g, sigma))
        throw std::invalid_argument("orientation is not totally cyclic");
    return count_with_ranges(g, orientation_ranges(g, sigma, k, BoundMode::Closed), true);
}

mpz_class sum_per_orientation_counts(const Multigraph& g, const OrientationSet& omega,
                                     const CapacityVector& k, BoundMode mode) {
    require_edge_length(g, k.size(), "capacities");
    for (const auto& o : omega.members) require_edge_length(g, o.signs.size(), "orientation");
    if (omega.members.empty()) return 0;
    CycleBasis basis = fundamental_cycle_basis(g);
    // Range widths do not depend on the orientation, so one plan serves all.
    auto ref_ranges = orientation_ranges(g, omega.members.front(), k, mode);
    EnumPlan plan = build_plan(g, basis, ref_ranges);

    std::int64_t n = static_cast<std::int64_t>(omega.members.size());
    u128 total = 0;
#pragma omp parallel
    {
        PlanBounds bounds;
        std::vector<EdgeRange> ranges(g.edge_count());
        u128 local = 0;
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const Orientation& sigma = omega.members[i];
            for (int e = 0; e < g.edge_count(); ++e) {
                std::int64_t lo = (mode == BoundMode::Open) ? 1 : 0;
                std::int64_t hi = (mode == BoundMode::Open) ? k[e] - 1 : k[e];
                ranges[e] = sigma.signs[e] > 0 ? EdgeRange{lo, hi, false}
                                               : EdgeRange{-hi, -lo, false};
            }
            bounds.fill(plan, ranges);
            local += count_core(plan, bounds, false);
        }
#pragma omp critical
        total += local;
    }
    return mpz_from_u128(total);
}

mpz_class weighted_tco_flow_count(const Multigraph& g, const std::vector<std::int64_t>& k,
                                  const OrientationSet& omega) {
    require_edge_length(g, k.size(), "capacities");
    for (auto v : k)
        if (v < 0) throw std::invalid_argument("capacities must be >= 0");
    if (g.edge_count() > kDefaultEnumerationEdgeCap)
        throw EnumerationCapExceeded("weighted count needs orientation bitmasks, graph "
                                     "exceeds the enumeration cap");
    for (const auto& o : omega.members) require_edge_length(g, o.signs.size(), "orientation");
    std::vector<EdgeRange> ranges(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) ranges[e] = {-k[e], k[e], false};

    std::vector<std::uint32_t> masks;
    masks.reserve(omega.size());
    for (const auto& o : omega.members) masks.push_back(orientation_mask(o));

    int m = g.edge_count();
    u128 total = 0;
    for_each_flow(g, ranges, [&](const FlowVector& x) {
        std::uint32_t forced = 0, want = 0;
        for (int e = 0; e < m; ++e) {
            if (x[e] > 0) forced |= (1u << e);
            if (x[e] < 0) {
                forced |= (1u << e);
                want |= (1u << e);
            }
        }
        std::int64_t w = 0;
        for (auto mask : masks)
            if ((mask & forced) == want) ++w;
        total += static_cast<u128>(w);
    });
    return mpz_from_u128(total);
}

mpz_class weighted_tco_flow_count(const Multigraph& g, const std::vector<std::int64_t>& k) {
    return weighted_tco_flow_count(g, k, enumerate_totally_cyclic(g));
}

std::vector<FlowVector> oracle_enumerate(const Multigraph& g, const FlowCountQuery& q,
                                         std::int64_t cap) {
    auto ranges = query_ranges(g, q);
    mpz_class box = 1;
    for (const auto& r : ranges) box *= r.width();
    if (box > cap)
        throw OracleCapExceeded("oracle box holds " + box.get_str() +
                                " points, cap is " + std::to_string(cap));

    std::vector<FlowVector> out;
    int m = g.edge_count();
    FlowVector x(m, 0);
    std::vector<std::int64_t> net(g.vertex_count, 0);
    // Plain odometer over the whole box; conservation tested from scratch.
    auto feasible = [&]() {
        std::fill(net.begin(), net.end(), 0);
        for (int e = 0; e < m; ++e) {
            net[g.edges[e].head] += x[e];
            net[g.edges[e].tail] -= x[e];
        }
        for (auto v : net)
            if (v != 0) return false;
        return true;
    };
    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            if (feasible()) out.push_back(x);
            return;
        }
        for (std::int64_t v = ranges[e].lo; v <= ranges[e].hi; ++v) {
            if (v == 0 && ranges[e].exclude_zero) continue;
            x[e] = v;
            self(self, e + 1);
        }
    };
    rec(rec, 0);
    return out;
}

mpz_class oracle_count(const Multigraph& g, const FlowCountQuery& q, std::int64_t cap) {
    return mpz_class(static_cast<unsigned long>(oracle_enumerate(g, q, cap).size()));
}

}  // namespace nzflow
