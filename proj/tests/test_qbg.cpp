#include <doctest.h>

#include <deque>
#include <functional>
#include <set>

#include "checks.hpp"
#include "oracles.hpp"
#include "qmac/qbg.hpp"

using namespace qmac;
using checks::all_shortest_sums;
using checks::all_subsets;
using checks::weight_for;

namespace {

const char* kSmall[] = {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"};

}  // namespace

TEST_CASE("A1 graph") {
  const RootDatum a1(CartanType::parse("A1"));
  const QBGraph g = build_qbg(a1, IndexSet());
  REQUIRE(g.num_vertices() == 2);
  REQUIRE(g.num_edges() == 2);
  const int e = g.vertex_index(identity(a1)), s = g.vertex_index(parse_word(a1, "s1"));
  const QBGEdge* up = g.find_edge(e, 0);
  const QBGEdge* down = g.find_edge(s, 0);
  REQUIRE(up);
  REQUIRE(down);
  CHECK(up->target == s);
  CHECK(up->kind == EdgeKind::Bruhat);
  CHECK(down->target == e);
  CHECK(down->kind == EdgeKind::Quantum);
}

TEST_CASE("J = I gives a single vertex") {
  for (const char* name : kSmall) {
    const RootDatum d(CartanType::parse(name));
    const QBGraph g = build_qbg(d, IndexSet::all(d.rank()));
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
  }
}

TEST_CASE("A2 full graph edge count") {
  // 8 Bruhat covers, 6 quantum edges for simple roots, 1 quantum edge w0 -> e.
  const RootDatum a2(CartanType::parse("A2"));
  const QBGraph g = build_qbg(a2, IndexSet());
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 15);
  CHECK(oracle::brute_qbg_edges(a2.cartan(), {}).size() == 15);
}

TEST_CASE("edges match the definition") {
  for (const char* name : kSmall) {
    const RootDatum d(CartanType::parse(name));
    for (IndexSet J : all_subsets(d.rank())) {
      CAPTURE(std::string(name));
      CAPTURE(J.bits());
      const QBGraph g = build_qbg(d, J);
      const auto brute = oracle::brute_qbg_edges(d.cartan(), J.indices());
      REQUIRE(static_cast<std::size_t>(g.num_edges()) == brute.size());
      std::set<std::tuple<std::vector<std::int64_t>, std::vector<std::int64_t>, std::vector<std::int64_t>, bool>> a, b;
      auto flat = [](const IntMatrix& m) { return std::vector<std::int64_t>(m.data(), m.data() + m.size()); };
      for (const auto& e : g.edges()) {
        const auto& r = d.root(e.root);
        a.emplace(flat(oracle::word_matrix(d.cartan(), g.vertex(e.source).word())),
                  flat(oracle::word_matrix(d.cartan(), g.vertex(e.target).word())),
                  std::vector<std::int64_t>(r.data(), r.data() + r.size()), e.kind == EdgeKind::Quantum);
      }
      for (const auto& e : brute) b.emplace(flat(e.source), flat(e.target), e.root, e.quantum);
      CHECK(a == b);
    }
  }
}

TEST_CASE("edge invariants") {
  for (const char* name : kSmall) {
    const RootDatum d(CartanType::parse(name));
    for (IndexSet J : all_subsets(d.rank())) {
      const QBGraph g = build_qbg(d, J);
      std::set<std::pair<int, int>> labels;
      for (const auto& e : g.edges()) {
        const WeylElt& s = g.vertex(e.source);
        const WeylElt& t = g.vertex(e.target);
        CHECK(labels.emplace(e.source, e.root).second);
        CHECK_FALSE(d.in_parabolic(e.root, J));
        CHECK(t == min_coset_rep(d, times_reflection(d, s, e.root), J));
        if (e.kind == EdgeKind::Bruhat) {
          CHECK(t.length() == s.length() + 1);
          CHECK(t == times_reflection(d, s, e.root));
        } else {
          CHECK(t.length() < s.length());
        }
      }
    }
  }
}

TEST_CASE("strong connectivity") {
  for (const char* name : kSmall) {
    const RootDatum d(CartanType::parse(name));
    for (IndexSet J : all_subsets(d.rank())) {
      const QBGraph g = build_qbg(d, J);
      std::vector<int> in(g.num_vertices(), 0), out(g.num_vertices(), 0);
      for (const auto& e : g.edges()) {
        ++out[e.source];
        ++in[e.target];
      }
      for (int v = 0; v < g.num_vertices(); ++v) {
        if (J.empty()) {
          CHECK(in[v] > 0);
          CHECK(out[v] > 0);
        }
        const auto seen = reachable_from(g, v);
        CHECK(std::count(seen.begin(), seen.end(), true) == g.num_vertices());
      }
    }
  }
}

TEST_CASE("sigma restriction") {
  const RootDatum a1(CartanType::parse("A1"));
  const QBGraph g = build_qbg(a1, IndexSet());
  Weight two(1), one(1);
  two << 2;
  one << 1;
  CHECK(sigma_restricted(g, Rational(1, 2), two).num_edges() == 2);
  CHECK(sigma_restricted(g, Rational(1, 2), one).num_edges() == 0);
  CHECK(sigma_restricted(g, Rational(1), one).num_edges() == 2);
  const RootDatum b2(CartanType::parse("B2"));
  const QBGraph h = build_qbg(b2, IndexSet());
  CHECK(sigma_restricted(h, Rational(3), b2.rho()).num_edges() == h.num_edges());
  const QBGraph half = sigma_restricted(h, Rational(1, 2), b2.rho());
  CHECK(half.num_vertices() == h.num_vertices());
  CHECK(half.num_edges() > 0);
  CHECK(half.num_edges() < h.num_edges());
  for (const auto& e : half.edges())
    CHECK(pairing(b2.coroot(e.root), b2.rho()) % 2 == 0);
}

TEST_CASE("wt_lambda examples") {
  const RootDatum a1(CartanType::parse("A1"));
  const QBGraph g = build_qbg(a1, IndexSet());
  Weight two(1);
  two << 2;
  const WeylElt e = identity(a1), s = parse_word(a1, "s1");
  CHECK(wt_lambda(g, e, e, two) == 0);
  CHECK(wt_lambda(g, s, s, two) == 0);
  CHECK(wt_lambda(g, s, e, two) == 2);
  CHECK(wt_lambda(g, e, s, two) == 0);
}

TEST_CASE("wt_lambda vanishes on Bruhat-comparable pairs and matches the table") {
  for (const char* name : kSmall) {
    const RootDatum d(CartanType::parse(name));
    for (IndexSet J : all_subsets(d.rank())) {
      const Weight lambda = weight_for(d.rank(), J, 1);
      const QBGraph g = build_qbg(d, J);
      const WtLambdaTable table(g, lambda);
      for (int x = 0; x < g.num_vertices(); ++x) {
        for (int y = 0; y < g.num_vertices(); ++y) {
          const auto v = wt_lambda(g, g.vertex(x), g.vertex(y), lambda);
          CHECK(v >= 0);
          CHECK(table(x, y) == v);
          if (bruhat_leq(d, g.vertex(x), g.vertex(y))) CHECK(v == 0);
        }
      }
    }
  }
}

TEST_CASE("wt_lambda is path independent") {
  for (const char* name : kSmall) {
    const RootDatum d(CartanType::parse(name));
    for (IndexSet J : all_subsets(d.rank())) {
      for (std::int64_t scale : {1, 2}) {
        const Weight lambda = weight_for(d.rank(), J, scale);
        const QBGraph g = build_qbg(d, J);
        for (int x = 0; x < g.num_vertices(); ++x)
          for (int y = 0; y < g.num_vertices(); ++y)
            CHECK(all_shortest_sums(g, x, y, lambda).size() == 1);
      }
    }
  }
}
