#include <doctest.h>

#include <functional>

#include "checks.hpp"
#include "oracles.hpp"
#include "qmac/charpoly.hpp"
#include "qmac/errors.hpp"

using namespace qmac;

namespace {

Weight wt(std::vector<std::int64_t> v) { return to_weight(v); }

GradedChar x(std::vector<std::int64_t> v, std::int64_t q = 0, std::int64_t c = 1) {
  return GradedChar::monomial(wt(v), q, c);
}

GradedChar from_poly(const checks::Poly& p) {
  GradedChar out;
  for (const auto& [xi, c] : p) out.add(to_weight(xi), 0, c);
  return out;
}

// Every reduced word of w, by depth-first search on right descents.
std::vector<std::vector<int>> reduced_words(const RootDatum& d, const WeylElt& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> rev;
  std::function<void(const WeylElt&)> go = [&](const WeylElt& u) {
    if (u.is_identity()) {
      out.emplace_back(rev.rbegin(), rev.rend());
      return;
    }
    for (int i = 0; i < d.rank(); ++i)
      if (has_right_descent(d, u, i)) {
        rev.push_back(i);
        go(right_simple(d, u, i));
        rev.pop_back();
      }
  };
  go(w);
  return out;
}

// Monomials whose i-th pairings cover -3..3, with the other coordinates varied.
std::vector<Weight> test_weights(const RootDatum& d, int i) {
  std::vector<Weight> out;
  for (std::int64_t n = -3; n <= 3; ++n)
    for (std::int64_t other : {-1, 0, 2}) {
      Weight w = Weight::Constant(d.rank(), other);
      w[i] = n;
      out.push_back(w);
    }
  return out;
}

}  // namespace

TEST_CASE("arithmetic") {
  GradedChar f = x({1}) + x({1}, 2, 3);
  CHECK(f.coefficient(wt({1})) == 1);
  CHECK(f.coefficient(wt({1}), 2) == 3);
  CHECK(f.coefficient(wt({0}), 2) == 0);
  f -= x({1});
  CHECK(f.size() == 1);
  CHECK((f - f).is_zero());
  GradedChar g;
  CHECK_THROWS_AS(g.add(wt({0}), -1), InvariantError);
}

TEST_CASE("Demazure operator cases") {
  const RootDatum a1(CartanType::parse("A1"));
  CHECK(demazure_D(a1, 0, x({1})) == x({1}) + x({-1}));
  CHECK(demazure_D(a1, 0, x({0})) == x({0}));
  CHECK(demazure_D(a1, 0, x({-1})).is_zero());
  CHECK(demazure_D(a1, 0, x({-2})) == x({0}, 0, -1));
  CHECK(demazure_D(a1, 0, x({-3})) == x({-1}, 0, -1) + x({1}, 0, -1));
  CHECK(demazure_D(a1, 0, x({2}, 3)) == x({2}, 3) + x({0}, 3) + x({-2}, 3));

  for (const char* name : {"A1", "A2", "B2", "C2", "G2", "A3"}) {
    CAPTURE(name);
    const RootDatum d(CartanType::parse(name));
    for (int i = 0; i < d.rank(); ++i)
      for (const Weight& xi : test_weights(d, i)) {
        const std::vector<std::int64_t> c(xi.begin(), xi.end());
        const GradedChar once = demazure_D(d, i, GradedChar::monomial(xi));
        CHECK(once == from_poly(oracle::demazure_monomial(d.cartan(), i, c)));
        CHECK(demazure_D(d, i, once) == once);
        CHECK(weyl_act(d, parse_word(d, "s" + std::to_string(i + 1)), once) == once);
      }
  }
}

TEST_CASE("D_i fixes s_i-invariant polynomials") {
  const RootDatum b2(CartanType::parse("B2"));
  for (int i = 0; i < 2; ++i) {
    const WeylElt s = parse_word(b2, "s" + std::to_string(i + 1));
    GradedChar f = x({1, 1}, 1, 2) + x({3, -2});
    f += weyl_act(b2, s, f);
    REQUIRE(weyl_act(b2, s, f) == f);
    CHECK(demazure_D(b2, i, f) == f);
  }
  CHECK_THROWS_AS(demazure_D(b2, 2, x({0, 0})), ValidationError);
}

TEST_CASE("recursive computation") {
  const RootDatum a1(CartanType::parse("A1"));
  const WeylElt s1 = parse_word(a1, "s1");
  CHECK(macdonald_recursive(a1, s1, wt({2})) == x({2}) + x({0}) + x({-2}) + x({0}, 1));
  CHECK(macdonald_recursive(a1, identity(a1), wt({2})) == x({2}) + x({0}, 1));

  const RootDatum a2(CartanType::parse("A2"));
  for (const auto& w : enumerate_group(a2))
    CHECK(macdonald_recursive(a2, w, a2.rho()) == gch_qls(a2, w, a2.rho()));
  CHECK_THROWS_AS(macdonald_recursive(a2, std::vector<int>{0, 0}, a2.rho()), ValidationError);
  CHECK_THROWS_AS(macdonald_recursive(a2, std::vector<int>{1}, wt({1, 0})), ValidationError);
}

TEST_CASE("reduced word choice does not matter") {
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    const RootDatum d(CartanType::parse(name));
    for (const auto& w : enumerate_group(d)) {
      const auto words = reduced_words(d, w);
      const GradedChar ref = macdonald_recursive(d, w, d.rho());
      for (const auto& word : words) {
        CHECK(from_word(d, word) == w);
        CHECK(macdonald_recursive(d, word, d.rho()) == ref);
        CHECK(apply_demazure_word(d, word, GradedChar::monomial(d.rho())) ==
              demazure_character(d, w, d.rho()));
      }
    }
  }
}

TEST_CASE("Demazure characters") {
  const RootDatum a1(CartanType::parse("A1"));
  CHECK(demazure_character(a1, identity(a1), wt({2})) == x({2}));
  CHECK(demazure_character(a1, parse_word(a1, "s1"), wt({2})) == x({2}) + x({0}) + x({-2}));
  for (const auto& in : checks::battery()) {
    CAPTURE(in.name());
    CHECK_FALSE(checks::q0_is_demazure(in));
  }
}

TEST_CASE("symmetry") {
  const RootDatum a1(CartanType::parse("A1"));
  CHECK_FALSE(is_symmetric(a1, x({1})));
  CHECK(is_symmetric(a1, gch_qls(a1, parse_word(a1, "s1"), wt({2}))));
  const RootDatum b2(CartanType::parse("B2"));
  const GradedChar f = x({1, 0}, 1) + x({2, -1});
  CHECK(weyl_act(b2, identity(b2), f) == f);
  for (const auto& u : enumerate_group(b2))
    for (const auto& v : enumerate_group(b2))
      CHECK(weyl_act(b2, multiply(b2, u, v), f) == weyl_act(b2, u, weyl_act(b2, v, f)));
  for (const auto& in : checks::battery()) {
    CAPTURE(in.name());
    CHECK_FALSE(checks::symmetric_top(in));
  }
}

TEST_CASE("rendering") {
  CHECK(to_text(GradedChar()) == "0");
  CHECK(to_text(x({0})) == "1");
  CHECK(to_text(x({2}) + x({-2}) + x({0}) + x({0}, 1)) == "x^[2] + x^[-2] + 1 + q");
  CHECK(to_text(x({1, 0}, 2, 3) + x({0, 1}, 0, -2)) == "-2*x^[0,1] + 3*x^[1,0]*q^2");
  CHECK(to_latex(x({2, -1}) + x({0, 0}, 1)) == "e^{2\\varpi_{1}-\\varpi_{2}} + q");
  CHECK(to_latex(x({0, 1}, 2)) == "e^{\\varpi_{2}} q^{2}");
  const auto order = display_order(x({1, 0}) + x({-1, 1}) + x({0, 0}, 1) + x({0, 1}));
  REQUIRE(order.size() == 4);
  CHECK(order[0].first.wt == std::vector<std::int64_t>{-1, 1});
  CHECK(order[1].first.wt == std::vector<std::int64_t>{1, 0});
  CHECK(order[2].first.wt == std::vector<std::int64_t>{0, 1});
  CHECK(order[3].first.q == 1);
}
