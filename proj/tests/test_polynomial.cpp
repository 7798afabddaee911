#include <doctest.h>

#include "nzflow/polynomial.hpp"

using namespace nzflow;

TEST_CASE("term bookkeeping keeps canonical form") {
    MultivariatePolynomial p(2);
    CHECK(p.is_zero());
    CHECK(p.total_degree() == -1);
    p.add_term({1, 0}, 2);
    p.add_term({0, 0}, -3);
    p.add_term({1, 0}, -2);  // cancels
    CHECK(p.terms().size() == 1);
    CHECK(p.coefficient({0, 0}) == -3);
    CHECK(p.total_degree() == 0);
}

TEST_CASE("evaluate") {
    // 2*k1*k2 - k2^2 + 1/2
    MultivariatePolynomial p(2);
    p.add_term({1, 1}, 2);
    p.add_term({0, 2}, -1);
    p.add_term({0, 0}, mpq_class(1, 2));
    CHECK(p.evaluate(std::vector<std::int64_t>{3, 4}) == mpq_class(17, 2));
    CHECK(p.evaluate(std::vector<std::int64_t>{0, 0}) == mpq_class(1, 2));
    CHECK(p.evaluate(std::vector<std::int64_t>{-2, -3}) == mpq_class(7, 2));
    CHECK_THROWS_AS(p.evaluate(std::vector<std::int64_t>{1}), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    MultivariatePolynomial a(1), b(1);
    a.add_term({1}, 1);
    a.add_term({0}, 1);  // k + 1
    b.add_term({1}, 1);
    b.add_term({0}, -1);  // k - 1
    auto prod = a * b;    // k^2 - 1
    CHECK(prod.coefficient({2}) == 1);
    CHECK(prod.coefficient({1}) == 0);
    CHECK(prod.coefficient({0}) == -1);

    prod -= prod;
    CHECK(prod.is_zero());

    a *= mpq_class(3, 2);
    CHECK(a.coefficient({1}) == mpq_class(3, 2));
}

TEST_CASE("to_string") {
    MultivariatePolynomial p(3);
    p.add_term({1, 1, 0}, 4);
    p.add_term({1, 0, 0}, -6);
    p.add_term({0, 0, 0}, 6);
    CHECK(p.to_string() == "4*k1*k2 - 6*k1 + 6");
    CHECK(MultivariatePolynomial(2).to_string() == "0");
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("5") == 5);
    CHECK(parse_rational("-7/2") == mpq_class(-7, 2));
    CHECK(parse_rational("4/8") == mpq_class(1, 2));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
