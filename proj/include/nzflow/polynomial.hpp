#ifndef NZFLOW_POLYNOMIAL_HPP
#define NZFLOW_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nzflow {

/// Multivariate polynomial with exact rational coefficients, keyed by
/// exponent vectors. Zero coefficients are never stored.
class MultivariatePolynomial {
  public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, mpq_class>;

    MultivariatePolynomial() = default;
    explicit MultivariatePolynomial(int variable_count) : nvars_(variable_count) {}

    int variable_count() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Max exponent sum over stored terms; -1 for the zero polynomial.
    int total_degree() const;

    mpq_class coefficient(const Exponents& e) const;
    void add_term(const Exponents& e, const mpq_class& c);

    mpq_class evaluate(const std::vector<mpq_class>& point) const;
    mpq_class evaluate(const std::vector<std::int64_t>& point) const;

    MultivariatePolynomial& operator+=(const MultivariatePolynomial& other);
    MultivariatePolynomial& operator-=(const MultivariatePolynomial& other);
    MultivariatePolynomial& operator*=(const mpq_class& scalar);
    MultivariatePolynomial operator*(const MultivariatePolynomial& other) const;

    friend bool operator==(const MultivariatePolynomial& a,
                           const MultivariatePolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Human-readable form like "2*k1*k2 - 3*k3 + 6" with variables k1..kn.
    std::string to_string() const;

  private:
    int nvars_ = 0;
    TermMap terms_;
};

mpq_class mpq_pow(const mpq_class& base, unsigned exp);

/// Parses "p" or "p/q".
mpq_class parse_rational(const std::string& s);

}  // namespace nzflow

#endif
