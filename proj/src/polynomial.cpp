#include "nzflow/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nzflow {

int MultivariatePolynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
        d = std::max(d, s);
    }
    return d;
}

mpq_class MultivariatePolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultivariatePolynomial::add_term(const Exponents& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpq_class MultivariatePolynomial::evaluate(const std::vector<mpq_class>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point length mismatch");
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) t *= mpq_pow(point[i], e[i]);
        sum += t;
    }
    return sum;
}

mpq_class MultivariatePolynomial::evaluate(const std::vector<std::int64_t>& point) const {
    std::vector<mpq_class> p(point.begin(), point.end());
    return evaluate(p);
}

MultivariatePolynomial& MultivariatePolynomial::operator+=(
    const MultivariatePolynomial& other) {
    if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
    if (this == &other) return *this *= 2;
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(
    const MultivariatePolynomial& other) {
    if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
    if (this == &other) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : other.terms_) add_term(e, mpq_class(-c));
    return *this;
}

MultivariatePolynomial& MultivariatePolynomial::operator*=(const mpq_class& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

MultivariatePolynomial MultivariatePolynomial::operator*(
    const MultivariatePolynomial& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
    MultivariatePolynomial out(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string MultivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    // highest total degree first, then reverse-lex for stable pretty output
    std::vector<const TermMap::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        unsigned da = std::accumulate(a->first.begin(), a->first.end(), 0u);
        unsigned db = std::accumulate(b->first.begin(), b->first.end(), 0u);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        mpq_class c = t->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        mpq_class a = neg ? mpq_class(-c) : c;
        bool has_var = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (t->first[i] == 0) continue;
            if (has_var) vars << "*";
            vars << "k" << (i + 1);
            if (t->first[i] > 1) vars << "^" << t->first[i];
            has_var = true;
        }
        if (!has_var) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << vars.str();
        }
    }
    return os.str();
}

mpq_class mpq_pow(const mpq_class& base, unsigned exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace nzflow
