#include "nzflow/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace nzflow {

namespace {

using Exponents = MultivariatePolynomial::Exponents;

// All d in Z^n_{>=0} with sum(d) <= degree, ordered by total degree then lex.
std::vector<Exponents> lattice_offsets(int n, int degree) {
    std::vector<Exponents> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    Exponents cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = static_cast<unsigned>(v);
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, degree);
    std::stable_sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        unsigned sa = 0, sb = 0;
        for (auto v : a) sa += v;
        for (auto v : b) sb += v;
        return sa < sb;
    });
    return out;
}

mpz_class binom(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// C(x_j - b, a) expanded in the monomials of x_j.
MultivariatePolynomial binomial_basis_factor(int nvars, int var, std::int64_t b,
                                             unsigned a) {
    MultivariatePolynomial p(nvars);
    Exponents zero(static_cast<std::size_t>(nvars), 0);
    p.add_term(zero, 1);
    if (a == 0) return p;
    for (unsigned i = 0; i < a; ++i) {
        MultivariatePolynomial lin(nvars);
        Exponents e = zero;
        e[var] = 1;
        lin.add_term(e, 1);
        lin.add_term(zero, mpq_class(-(b + static_cast<std::int64_t>(i))));
        p = p * lin;
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), a);
    p *= mpq_class(mpz_class(1), fact);
    return p;
}

CapacityVector add_offset(const CapacityVector& base, const Exponents& d,
                          const CapacityVector& shift = {}) {
    CapacityVector p(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        p[i] = base[i] + d[i];
        if (!shift.empty()) p[i] += shift[i];
    }
    return p;
}

void require_bridgeless(const Multigraph& g, const char* op) {
    if (!bridges(g).empty())
        throw std::invalid_argument(std::string(op) + " requires a bridgeless graph");
}

void require_positive(const CapacityVector& k, const char* what) {
    for (auto v : k)
        if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

// Newton fit through (nodes[i], values[i]), exact divided differences.
MultivariatePolynomial univariate_fit(const std::vector<std::int64_t>& nodes,
                                      const std::vector<mpq_class>& values) {
    std::size_t n = nodes.size();
    std::vector<mpq_class> dd = values;
    std::vector<mpq_class> coeffs;
    coeffs.reserve(n);
    for (std::size_t level = 0; level < n; ++level) {
        coeffs.push_back(dd[0]);
        for (std::size_t i = 0; i + level + 1 < n; ++i) {
            dd[i] = (dd[i + 1] - dd[i]) /
                    mpq_class(nodes[i + level + 1] - nodes[i]);
        }
        dd.pop_back();
    }
    MultivariatePolynomial p(1), prod(1);
    prod.add_term({0}, 1);
    for (std::size_t i = 0; i < n; ++i) {
        MultivariatePolynomial term = prod;
        term *= coeffs[i];
        p += term;
        MultivariatePolynomial lin(1);
        lin.add_term({1}, 1);
        lin.add_term({0}, mpq_class(-nodes[i]));
        prod = prod * lin;
    }
    return p;
}

// phi_G(t * kvec) as an exact polynomial in t.
MultivariatePolynomial restrict_to_ray(const MultivariatePolynomial& piece,
                                       const CapacityVector& kvec) {
    MultivariatePolynomial q(1);
    for (const auto& [e, c] : piece.terms()) {
        unsigned total = 0;
        mpq_class factor = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            total += e[i];
            factor *= mpq_pow(mpq_class(kvec[i]), e[i]);
        }
        q.add_term({total}, factor);
    }
    return q;
}

mpz_class as_integer(const mpq_class& q, const char* what) {
    if (q.get_den() != 1)
        throw std::logic_error(std::string(what) + " is not an integer: " + q.get_str());
    return q.get_num();
}

}  // namespace

InterpolationReport interpolate_piece(const Multigraph& g, const CapacityVector& base,
                                      const CapacityVector& validation_shift) {
    require_bridgeless(g, "interpolate_piece");
    require_edge_length(g, base.size(), "base point");
    require_positive(base, "base point entries");
    int n = g.edge_count();
    int degree = cyclomatic_number(g);

    CapacityVector shift = validation_shift;
    if (shift.empty()) shift.assign(static_cast<std::size_t>(n), 1);
    require_edge_length(g, shift.size(), "validation shift");

    InterpolationReport report;
    report.base_point = base;

    auto offsets = lattice_offsets(n, degree);
    std::vector<mpz_class> values(offsets.size());
    report.sample_points.reserve(offsets.size());
    for (const auto& d : offsets) report.sample_points.push_back(add_offset(base, d));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < offsets.size(); ++i)
        values[i] = count_nowhere_zero_kvec(g, report.sample_points[i]);

    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < offsets.size(); ++i) index[offsets[i]] = i;

    // Forward-difference coefficients in the binomial basis, then expansion:
    // p = sum_a (Delta^a f)(base) * prod_j C(x_j - base_j, a_j).
    MultivariatePolynomial piece(n);
    Exponents beta(static_cast<std::size_t>(n), 0);
    for (std::size_t ai = 0; ai < offsets.size(); ++ai) {
        const Exponents& alpha = offsets[ai];
        unsigned alpha_sum = 0;
        for (auto v : alpha) alpha_sum += v;
        mpz_class c = 0;
        std::fill(beta.begin(), beta.end(), 0u);
        while (true) {
            unsigned beta_sum = 0;
            mpz_class w = 1;
            for (int j = 0; j < n; ++j) {
                beta_sum += beta[j];
                if (alpha[j] > 1 && beta[j] > 0) w *= binom(alpha[j], beta[j]);
            }
            if ((alpha_sum - beta_sum) % 2 == 1) w = -w;
            c += w * values[index.at(beta)];
            // next beta <= alpha, odometer
            int j = n - 1;
            while (j >= 0 && beta[j] == alpha[j]) beta[j--] = 0;
            if (j < 0) break;
            ++beta[j];
        }
        if (c == 0) continue;
        MultivariatePolynomial term(n);
        term.add_term(Exponents(static_cast<std::size_t>(n), 0), mpq_class(c));
        for (int j = 0; j < n; ++j)
            if (alpha[j] > 0) term = term * binomial_basis_factor(n, j, base[j], alpha[j]);
        piece += term;
    }

    // Residuals must vanish on the sample grid and on the validation points.
    mpq_class max_residual = 0;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        mpq_class r = piece.evaluate(report.sample_points[i]) - mpq_class(values[i]);
        if (r != 0)
            throw std::logic_error("interpolation failed to reproduce a sample point");
    }

    auto vshell = lattice_offsets(n, degree + 1);
    std::size_t want = static_cast<std::size_t>(n) + 2;
    std::set<CapacityVector> seen;
    for (const auto& d : vshell) {
        if (report.validation_points.size() >= want) break;
        CapacityVector p = add_offset(base, d, shift);
        if (seen.insert(p).second) report.validation_points.push_back(p);
    }
    std::vector<mpz_class> vvalues(report.validation_points.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < report.validation_points.size(); ++i)
        vvalues[i] = count_nowhere_zero_kvec(g, report.validation_points[i]);
    for (std::size_t i = 0; i < report.validation_points.size(); ++i) {
        mpq_class r = piece.evaluate(report.validation_points[i]) - mpq_class(vvalues[i]);
        if (r != 0) {
            std::ostringstream os;
            os << "validation residual " << r.get_str() << " at (";
            for (std::size_t j = 0; j < report.validation_points[i].size(); ++j)
                os << (j ? "," : "") << report.validation_points[i][j];
            os << "): a region wall crosses the sample grid";
            throw ValidationFailed(os.str());
        }
    }

    report.piece = std::move(piece);
    report.max_residual = max_residual;
    report.claimed_degree = report.piece.total_degree();
    return report;
}

InterpolationReport chamber_piece(const Multigraph& g, const CapacityVector& direction,
                                  const std::vector<std::int64_t>& scales) {
    require_edge_length(g, direction.size(), "direction");
    require_positive(direction, "direction entries");
    std::string last_error = "no scales tried";
    for (std::int64_t s : scales) {
        CapacityVector base(direction.size());
        for (std::size_t i = 0; i < direction.size(); ++i) base[i] = s * direction[i];
        try {
            return interpolate_piece(g, base, direction);
        } catch (const ValidationFailed& e) {
            last_error = e.what();
        }
    }
    throw ValidationFailed("no validated piece along this direction (it may lie on a "
                           "region wall); last failure: " +
                           last_error);
}

MultivariatePolynomial interpolate_univariate(UnivariateCounter counter,
                                              const Multigraph& g, int degree) {
    if (degree != cyclomatic_number(g))
        throw std::invalid_argument("degree must equal the cyclomatic number");
    auto count_at = [&](std::int64_t k) -> mpz_class {
        return counter == UnivariateCounter::IntegerFlow ? count_nowhere_zero_integer(g, k)
                                                         : count_nowhere_zero_zk(g, k);
    };
    std::vector<std::int64_t> nodes;
    std::vector<mpq_class> values;
    for (std::int64_t k = 2; k <= degree + 2; ++k) {
        nodes.push_back(k);
        values.push_back(mpq_class(count_at(k)));
    }
    MultivariatePolynomial p = univariate_fit(nodes, values);
    for (std::int64_t k = degree + 3; k <= degree + 4; ++k) {
        if (p.evaluate(std::vector<std::int64_t>{k}) != mpq_class(count_at(k)))
            throw ValidationFailed("univariate flow polynomial failed validation at k = " +
                                   std::to_string(k));
    }
    return p;
}

namespace {

ReciprocityReport reciprocity_core(const Multigraph& g, const CapacityVector& kvec,
                                   const OrientationSet& omega,
                                   const MultivariatePolynomial* piece) {
    require_bridgeless(g, "reciprocity_check");
    require_edge_length(g, kvec.size(), "capacities");
    require_positive(kvec, "capacities");
    int xi = cyclomatic_number(g);

    ReciprocityReport rep;
    rep.kvec = kvec;

    auto dilate_count = [&](std::int64_t t) {
        CapacityVector p(kvec.size());
        for (std::size_t i = 0; i < kvec.size(); ++i) p[i] = t * kvec[i];
        return count_nowhere_zero_kvec(g, p);
    };

    if (piece) {
        rep.ray_polynomial = restrict_to_ray(*piece, kvec);
    } else {
        std::vector<std::int64_t> nodes;
        std::vector<mpq_class> values;
        for (std::int64_t t = 1; t <= xi + 1; ++t) {
            nodes.push_back(t);
            values.push_back(mpq_class(dilate_count(t)));
        }
        rep.ray_polynomial = univariate_fit(nodes, values);
    }

    // The restriction must reproduce the counts on the ray; under a supplied
    // piece this also certifies that kvec lies in the piece's region.
    std::int64_t t_lo = piece ? 1 : xi + 2;
    for (std::int64_t t = t_lo; t <= xi + 3; ++t) {
        if (rep.ray_polynomial.evaluate(std::vector<std::int64_t>{t}) !=
            mpq_class(dilate_count(t)))
            throw ValidationFailed("counting function is not the region polynomial at "
                                   "dilate t = " +
                                   std::to_string(t));
    }

    mpq_class at_minus_one =
        rep.ray_polynomial.evaluate(std::vector<std::int64_t>{-1});
    mpz_class lhs = as_integer(at_minus_one, "phi(-k)");
    if (xi % 2 == 1) lhs = -lhs;
    rep.lhs = lhs;
    rep.rhs_weighted = weighted_tco_flow_count(
        g, std::vector<std::int64_t>(kvec.begin(), kvec.end()), omega);
    rep.rhs_orientation_sum = sum_per_orientation_counts(g, omega, kvec, BoundMode::Closed);
    rep.pass = (rep.lhs == rep.rhs_weighted) && (rep.lhs == rep.rhs_orientation_sum);
    return rep;
}

}  // namespace

ReciprocityReport reciprocity_check(const Multigraph& g, const CapacityVector& kvec) {
    return reciprocity_core(g, kvec, enumerate_totally_cyclic(g), nullptr);
}

ReciprocityReport reciprocity_check(const Multigraph& g, const CapacityVector& kvec,
                                    const OrientationSet& omega) {
    return reciprocity_core(g, kvec, omega, nullptr);
}

ReciprocityReport reciprocity_check(const Multigraph& g,
                                    const MultivariatePolynomial& piece,
                                    const CapacityVector& kvec) {
    return reciprocity_core(g, kvec, enumerate_totally_cyclic(g), &piece);
}

TcoZeroReport tco_count_via_zero(const Multigraph& g,
                                 const MultivariatePolynomial& piece) {
    require_bridgeless(g, "tco_count_via_zero");
    TcoZeroReport rep;
    std::vector<std::int64_t> zero(static_cast<std::size_t>(g.edge_count()), 0);
    mpz_class v = as_integer(piece.evaluate(zero), "phi(0)");
    if (cyclomatic_number(g) % 2 == 1) v = -v;
    rep.via_piece = v;
    rep.enumerated = static_cast<long>(enumerate_totally_cyclic(g).size());
    rep.pass = rep.via_piece == rep.enumerated;
    return rep;
}

TcoZeroReport tco_count_via_zero(const Multigraph& g) {
    return tco_count_via_zero(g, find_chamber_piece(g).piece);
}

InterpolationReport find_chamber_piece(const Multigraph& g) {
    int m = g.edge_count();
    int xi = cyclomatic_number(g);
    if (m == 0) return interpolate_piece(g, {}, {});

    // Doubling chain starting at xi+1: every value exceeds the sum of all
    // smaller ones by xi+1, so no signed 0/1-combination of capacities comes
    // within the sample lattice's reach of zero. The small values go on the
    // non-forest edges, which are the ones the counting kernel iterates.
    std::vector<std::int64_t> chain(static_cast<std::size_t>(m));
    std::int64_t v = xi + 1;
    for (int i = 0; i < m; ++i, v *= 2) chain[static_cast<std::size_t>(i)] = v;

    CycleBasis basis = fundamental_cycle_basis(g);
    std::string last = "no candidates";
    for (int attempt = 0; attempt < 3; ++attempt) {
        CapacityVector u(static_cast<std::size_t>(m), 0);
        std::size_t next = 0;
        for (int e : basis.free_edges) u[e] = chain[next++];
        for (int e : basis.forest_edges) u[e] = chain[next++];
        try {
            return interpolate_piece(g, u, u);
        } catch (const ValidationFailed& e) {
            last = e.what();
        }
        for (auto& c : chain) c *= 2;
    }
    throw ValidationFailed("no validated piece found over candidate directions; last: " +
                           last);
}

std::string WallForm::to_string() const {
    std::ostringstream lhs, rhs;
    bool l = false, r = false;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 0) {
            if (l) lhs << " + ";
            lhs << "k" << (i + 1);
            l = true;
        } else if (coeffs[i] < 0) {
            if (r) rhs << " + ";
            rhs << "k" << (i + 1);
            r = true;
        }
    }
    return lhs.str() + " = " + (r ? rhs.str() : "0");
}

std::vector<WallForm> candidate_wall_forms(const Multigraph& g) {
    int m = g.edge_count();
    CycleBasis basis = fundamental_cycle_basis(g);

    std::vector<std::vector<int>> supports;
    for (const auto& cyc : basis.cycles) {
        std::vector<int> s;
        for (int e = 0; e < m; ++e)
            if (cyc[e] != 0) s.push_back(e);
        if (s.size() >= 2) supports.push_back(std::move(s));
    }
    for (int f : basis.forest_edges) {
        std::vector<int> s{f};
        for (std::size_t j = 0; j < basis.free_edges.size(); ++j)
            if (basis.cycles[j][f] != 0) s.push_back(basis.free_edges[j]);
        std::sort(s.begin(), s.end());
        if (s.size() >= 2) supports.push_back(std::move(s));
    }

    std::set<std::vector<int>> seen;
    std::vector<WallForm> out;
    for (const auto& s : supports) {
        for (int pivot : s) {
            std::vector<int> form(m, 0);
            for (int e : s) form[e] = (e == pivot) ? 1 : -1;
            for (int e = 0; e < m; ++e) {
                if (form[e] == 0) continue;
                if (form[e] < 0)
                    for (auto& c : form) c = -c;
                break;
            }
            if (seen.insert(form).second) out.push_back({form, true});
        }
    }
    return out;
}

ProbeReport probe_walls(const Multigraph& g, const CapacityVector& a,
                        const CapacityVector& b, int steps) {
    require_edge_length(g, a.size(), "segment start");
    require_edge_length(g, b.size(), "segment end");
    require_positive(a, "segment start entries");
    require_positive(b, "segment end entries");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");

    ProbeReport rep;
    for (int i = 0; i <= steps; ++i) {
        CapacityVector p(a.size());
        for (std::size_t e = 0; e < a.size(); ++e) {
            double v = static_cast<double>(a[e]) +
                       static_cast<double>(b[e] - a[e]) * i / steps;
            p[e] = std::llround(v);
            if (p[e] < 1) p[e] = 1;
        }
        if (!rep.samples.empty() && rep.samples.back().point == p) continue;
        ProbeSample sample;
        sample.point = p;
        try {
            sample.piece = chamber_piece(g, p).piece;
            sample.fitted = true;
        } catch (const ValidationFailed&) {
            sample.fitted = false;
        }
        rep.samples.push_back(std::move(sample));
    }

    auto forms = candidate_wall_forms(g);
    auto dot = [&](const WallForm& w, const CapacityVector& p) {
        std::int64_t s = 0;
        for (std::size_t e = 0; e < p.size(); ++e) s += w.coeffs[e] * p[e];
        return s;
    };

    const ProbeSample* prev = nullptr;
    for (const auto& s : rep.samples) {
        if (!s.fitted) continue;
        if (prev && !(*prev->piece == *s.piece)) {
            ProbeWall wall;
            wall.lower = prev->point;
            wall.upper = s.point;
            for (const auto& w : forms) {
                std::int64_t da = dot(w, prev->point), db = dot(w, s.point);
                if ((da < 0 && db > 0) || (da > 0 && db < 0)) wall.matches.push_back(w);
            }
            rep.walls.push_back(std::move(wall));
        }
        prev = &s;
    }
    return rep;
}

mpq_class leading_coefficient(const MultivariatePolynomial& univariate) {
    if (univariate.variable_count() != 1)
        throw std::invalid_argument("expected a univariate polynomial");
    int d = univariate.total_degree();
    if (d < 0) return 0;
    return univariate.coefficient({static_cast<unsigned>(d)});
}

}  // namespace nzflow
