#include <doctest.h>

#include <map>
#include <set>

#include "checks.hpp"
#include "qmac/charpoly.hpp"
#include "qmac/errors.hpp"
#include "qmac/ospath.hpp"

using namespace qmac;

namespace {

Weight wt(std::vector<std::int64_t> v) { return to_weight(v); }

const OSPath& find(const OSModel& m, std::vector<int> indices) {
  for (const auto& p : m.paths())
    if (p.indices == indices) return p;
  throw std::runtime_error("path not found");
}

}  // namespace

TEST_CASE("enumeration examples") {
  const RootDatum a1(CartanType::parse("A1"));
  const OSModel m(a1, wt({1}));
  REQUIRE(m.paths().size() == 2);
  CHECK(find(m, {}).wt == wt({-1}));
  CHECK(find(m, {0}).wt == wt({1}));
  CHECK(tilde_iota(find(m, {})).is_identity());
  CHECK(tilde_iota(find(m, {0})) == parse_word(a1, "s1"));

  const OSModel two(a1, wt({2}));
  CHECK(qwt_deg(find(two, {})) == 0);
  CHECK(qwt_deg(find(two, {0, 1})) == 1);
  CHECK(two.a(0) == 2);
  CHECK(two.a(1) == 1);

  const RootDatum a2(CartanType::parse("A2"));
  const auto zero = enumerate_os(a2, wt({0, 0}));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].wt == wt({0, 0}));
}

TEST_CASE("Macdonald polynomial examples") {
  const RootDatum a1(CartanType::parse("A1"));
  const WeylElt e = identity(a1), s1 = parse_word(a1, "s1");
  CHECK(to_text(macdonald_os(a1, e, wt({1}))) == "x^[1]");
  CHECK(to_text(macdonald_os(a1, s1, wt({1}))) == "x^[1] + x^[-1]");
  CHECK(to_text(macdonald_os(a1, e, wt({2}))) == "x^[2] + q");
  CHECK_THROWS_AS(macdonald_os(a1, s1, wt({0})), ValidationError);

  for (const auto& in : checks::battery()) {
    const RootDatum d(CartanType::parse(in.type));
    const Weight lambda = wt(in.lambda);
    const WeylElt top = min_coset_rep(d, longest_element(d), stabilizer(lambda));
    CHECK(macdonald_os(d, top, lambda) == gch_qls(d, top, lambda));
  }
}

TEST_CASE("step recursion and statistics") {
  for (const auto& in : checks::battery()) {
    CAPTURE(in.name());
    const RootDatum d(CartanType::parse(in.type));
    const Weight lambda = wt(in.lambda);
    const OSModel m(d, lambda);
    const IndexSet K = omega(d, stabilizer(lambda));
    const QLSModel q(d, lambda);
    CHECK(m.paths().size() == q.paths().size());
    for (int k = 0; k < m.chain().size(); ++k) CHECK(m.a(k) >= 1);
    for (const auto& p : m.paths()) {
      Weight w = act(d, longest_element(d), lambda);
      WeylElt dir = identity(d);
      std::int64_t deg = 0;
      WeylElt head = identity(d);
      for (std::size_t j = 0; j < p.indices.size(); ++j) {
        const int k = p.indices[j];
        const int root = m.chain().entries[k].root;
        w += m.a(k) * act(d, dir, d.root_weight(root));
        dir = times_reflection(d, dir, root);
        CHECK(dir == p.dirs[j + 1]);
        if (p.quantum[j]) deg += m.a(k);
        if (m.chain().entries[k].b == 0) head = dir;
      }
      CHECK(w == p.wt);
      CHECK(deg == p.deg);
      CHECK(head == p.tilde_iota);
      CHECK(in_quotient(d, p.tilde_iota, K));
    }
  }
}

TEST_CASE("matches the alcove model on the same chain") {
  for (const auto& in : checks::battery()) {
    CAPTURE(in.name());
    const RootDatum d(CartanType::parse(in.type));
    const Weight lambda = wt(in.lambda);
    const OSModel os(d, lambda);
    const AlcoveModel alc(d, omega(d, lambda));
    REQUIRE(os.paths().size() == alc.subsets().size());
    std::map<std::vector<int>, const AdmissibleSubset*> by_indices;
    for (const auto& A : alc.subsets()) by_indices[A.indices] = &A;
    for (const auto& p : os.paths()) {
      REQUIRE(by_indices.count(p.indices));
      const AdmissibleSubset& A = *by_indices[p.indices];
      CHECK(alc.wt(A) == -p.wt);
      CHECK(alc.height(A) == p.deg);
      CHECK(A.final_direction() == p.dir());
    }
  }
}

TEST_CASE("Xi") {
  const RootDatum a1(CartanType::parse("A1"));
  const OSModel m(a1, wt({2}));
  const QLSPath empty = m.xi(find(m, {}));
  REQUIRE(empty.dirs.size() == 1);
  CHECK(empty.dirs[0] == longest_element(a1));

  for (const auto& in : checks::battery()) {
    CAPTURE(in.name());
    CHECK_FALSE(checks::bijections(in));
  }
}

TEST_CASE("filter nesting") {
  for (const auto& in : checks::battery()) {
    CAPTURE(in.name());
    const RootDatum d(CartanType::parse(in.type));
    const Weight lambda = wt(in.lambda);
    const IndexSet J = stabilizer(lambda);
    const OSModel m(d, lambda);
    const WeylElt top_inv = inverse(d, min_coset_rep(d, longest_element(d), J));
    const auto reps = enumerate_minimal_reps(d, J);
    for (const auto& w : reps)
      for (const auto& v : reps) {
        const WeylElt x = multiply(d, w, top_inv), y = multiply(d, v, top_inv);
        if (!bruhat_leq(d, y, x)) continue;
        std::set<std::vector<int>> small, big;
        for (const auto& p : m.paths_for(w)) small.insert(p.indices);
        for (const auto& p : m.paths_for(v)) big.insert(p.indices);
        CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
      }
  }
}

TEST_CASE("custom chain order") {
  const RootDatum a2(CartanType::parse("A2"));
  const OSModel a(a2, a2.rho(), ReflectionOrder(a2, {0, 1, 0}));
  const OSModel b(a2, a2.rho(), ReflectionOrder(a2, {1, 0, 1}));
  for (const auto& w : enumerate_minimal_reps(a2, IndexSet()))
    CHECK(a.macdonald(w) == b.macdonald(w));
}
