#include "qmac/alcove.hpp"

#include <algorithm>
#include <functional>

#include "qmac/charpoly.hpp"
#include "qmac/errors.hpp"

namespace qmac {

ReflectionOrder::ReflectionOrder(const RootDatum& datum, std::vector<int> word)
    : word_(std::move(word)), position_(datum.num_positive_roots(), -1) {
  const WeylElt w = from_word(datum, word_);
  if (w.length() != static_cast<int>(word_.size()) || !(w == longest_element(datum)))
    throw ValidationError("'" + word_string(w) + "' is not given by a reduced word for w0");
  std::vector<int> prefix;
  for (int i : word_) {
    const RootCoords gamma = act_root(datum, from_word(datum, prefix), RootCoords::Unit(datum.rank(), i));
    const int k = datum.root_index(gamma);
    QMAC_ENSURE(k >= 0 && position_[k] < 0, "reflection order is not a permutation of the positive roots");
    position_[k] = static_cast<int>(roots_.size());
    roots_.push_back(k);
    prefix.push_back(i);
  }
}

ReflectionOrder ReflectionOrder::standard(const RootDatum& datum, IndexSet K) {
  std::vector<int> word = min_coset_rep(datum, longest_element(datum), K).word();
  const auto tail = longest_element(datum, K).word();
  word.insert(word.end(), tail.begin(), tail.end());
  return ReflectionOrder(datum, std::move(word));
}

bool satisfies_reflection_axiom(const RootDatum& datum, const ReflectionOrder& order) {
  const int n = datum.num_positive_roots();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int c = datum.root_index(datum.root(a) + datum.root(b));
      if (c < 0) continue;
      const int pa = order.position(a), pb = order.position(b), pc = order.position(c);
      if (!(std::min(pa, pb) < pc && pc < std::max(pa, pb))) return false;
    }
  }
  return true;
}

LambdaChain build_lex_chain(const RootDatum& datum, const Weight& mu, const ReflectionOrder& order) {
  if (mu.size() != datum.rank() || !is_dominant(mu)) throw ValidationError("weight is not dominant");
  LambdaChain chain{mu, {}};
  for (int k = 0; k < datum.num_positive_roots(); ++k) {
    const std::int64_t h = pairing(datum.coroot(k), mu);
    for (std::int64_t b = 0; b < h; ++b) chain.entries.push_back(ChainEntry{k, b, h, Rational(b, h)});
  }
  std::sort(chain.entries.begin(), chain.entries.end(), [&](const ChainEntry& x, const ChainEntry& y) {
    if (x.d != y.d) return x.d < y.d;
    return order.position(x.root) < order.position(y.root);
  });
  if (auto bad = validate_chain(datum, chain))
    throw InvariantError("lex chain failed validation at step " + std::to_string(bad->step) + ": " +
                         bad->message);
  return chain;
}

LambdaChain build_lex_chain(const RootDatum& datum, const Weight& mu) {
  return build_lex_chain(datum, mu, ReflectionOrder::standard(datum, omega(datum, stabilizer(mu))));
}

std::optional<ChainViolation> validate_chain(const RootDatum& datum, const LambdaChain& chain) {
  const int n = datum.num_positive_roots();
  std::int64_t max_height = 0;
  for (int k = 0; k < n; ++k) max_height = std::max(max_height, datum.coroot_height(k));
  const Rational scale(1, 1 + max_height);
  Vec<Rational> p0(datum.rank());
  for (int j = 0; j < datum.rank(); ++j) p0[j] = scale;

  std::int64_t expected = 0;
  for (int k = 0; k < n; ++k) expected += std::max<std::int64_t>(0, pairing(datum.coroot(k), chain.mu));
  if (chain.size() != expected)
    return ChainViolation{0, "length " + std::to_string(chain.size()) + " differs from " +
                                 std::to_string(expected)};

  Vec<Rational> p = p0;
  for (int s = 0; s < chain.size(); ++s) {
    const ChainEntry& entry = chain.entries[s];
    const int step = s + 1;
    if (entry.root < 0 || entry.root >= n) return ChainViolation{step, "root index out of range"};
    const Rational v = pairing(datum.coroot(entry.root), p);
    const std::int64_t level = floor(v);
    if (level != -entry.b)
      return ChainViolation{step, "wall level " + std::to_string(level) + " differs from -b = " +
                                      std::to_string(-entry.b)};
    Vec<Rational> next = p;
    const Rational shift = v - Rational(level);
    for (int j = 0; j < datum.rank(); ++j)
      next[j] -= shift * Rational(datum.root_weight(entry.root)[j]);
    for (int k = 0; k < n; ++k) {
      if (k == entry.root) continue;
      const Rational a = pairing(datum.coroot(k), p), b = pairing(datum.coroot(k), next);
      if (floor(std::max(a, b)) != floor(std::min(a, b)))
        return ChainViolation{step, "step crosses more than one wall"};
    }
    p = std::move(next);
  }
  for (int j = 0; j < datum.rank(); ++j)
    if (p[j] != p0[j] - Rational(chain.mu[j]))
      return ChainViolation{0, "walk does not end at the translate by -mu"};
  return std::nullopt;
}

std::vector<AdmissibleSubset> enumerate_admissible(const QBGraph& qbw, const LambdaChain& chain) {
  if (!qbw.parabolic().empty()) throw ValidationError("admissible subsets live in QB(W)");
  std::vector<AdmissibleSubset> out;
  AdmissibleSubset current;
  current.path.push_back(identity(qbw.datum()));
  std::vector<int> at{qbw.vertex_index(current.path.back())};
  std::function<void(int)> extend = [&](int from) {
    out.push_back(current);
    for (int j = from; j < chain.size(); ++j) {
      const QBGEdge* e = qbw.find_edge(at.back(), chain.entries[j].root);
      if (e == nullptr) continue;
      current.indices.push_back(j);
      current.path.push_back(qbw.vertex(e->target));
      current.quantum.push_back(e->kind == EdgeKind::Quantum);
      at.push_back(e->target);
      extend(j + 1);
      current.indices.pop_back();
      current.path.pop_back();
      current.quantum.pop_back();
      at.pop_back();
    }
  };
  extend(0);
  return out;
}

Weight wt_A(const RootDatum& datum, const LambdaChain& chain, const AdmissibleSubset& A) {
  // -r_{j_1, -b_1} ... r_{j_r, -b_r}(-mu), innermost reflection first.
  Weight zeta = -chain.mu;
  for (auto it = A.indices.rbegin(); it != A.indices.rend(); ++it) {
    const ChainEntry& entry = chain.entries[*it];
    zeta = reflect(datum, entry.root, zeta) - entry.b * datum.root_weight(entry.root);
  }
  return -zeta;
}

std::int64_t height(const LambdaChain& chain, const AdmissibleSubset& A) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < A.indices.size(); ++k)
    if (A.quantum[k]) total += chain.entries[A.indices[k]].h - chain.entries[A.indices[k]].b;
  return total;
}

std::int64_t coheight(const LambdaChain& chain, const AdmissibleSubset& A) {
  std::int64_t total = 0;
  for (std::size_t k = 0; k < A.indices.size(); ++k)
    if (A.quantum[k]) total += chain.entries[A.indices[k]].b;
  return total;
}

AlcoveModel::AlcoveModel(const RootDatum& datum, Weight mu)
    : graph_(datum, IndexSet()), chain_(build_lex_chain(datum, mu)),
      subsets_(enumerate_admissible(graph_, chain_)) {}

AlcoveModel::AlcoveModel(const RootDatum& datum, Weight mu, const ReflectionOrder& order)
    : graph_(datum, IndexSet()), chain_(build_lex_chain(datum, mu, order)),
      subsets_(enumerate_admissible(graph_, chain_)) {}

GradedChar AlcoveModel::macdonald(const WeylElt& w) const {
  const IndexSet J = stabilizer(chain_.mu);
  if (!in_quotient(datum(), w, J))
    throw ValidationError(word_string(w) + " is not a minimal coset representative");
  GradedChar out;
  for (const auto& A : subsets_)
    if (bruhat_leq(datum(), min_coset_rep(datum(), A.final_direction(), J), w))
      out.add(wt(A), coheight(A));
  return out;
}

GradedChar macdonald_alcove(const RootDatum& datum, const WeylElt& w, const Weight& lambda) {
  return AlcoveModel(datum, lambda).macdonald(w);
}

GradedChar macdonald_alcove(const RootDatum& datum, const WeylElt& w, const Weight& lambda,
                            const ReflectionOrder& order) {
  return AlcoveModel(datum, lambda, order).macdonald(w);
}

QLSPath group_by_ratio(const RootDatum& datum, const LambdaChain& chain,
                       const std::vector<int>& indices, const std::vector<WeylElt>& dirs) {
  QMAC_ENSURE(dirs.size() == indices.size() + 1, "direction list does not match the indices");
  const IndexSet J = stabilizer(omega(datum, chain.mu));
  const WeylElt w0 = longest_element(datum);
  auto direction = [&](const WeylElt& x) { return min_coset_rep(datum, multiply(datum, x, w0), J); };

  QLSPath eta;
  eta.cuts.push_back(Rational(0));
  std::size_t u = 0;
  while (u < indices.size() && chain.entries[indices[u]].d == Rational(0)) ++u;
  eta.dirs.push_back(direction(dirs[u]));
  while (u < indices.size()) {
    const Rational sigma = chain.entries[indices[u]].d;
    while (u < indices.size() && chain.entries[indices[u]].d == sigma) ++u;
    eta.cuts.push_back(sigma);
    eta.dirs.push_back(direction(dirs[u]));
  }
  eta.cuts.push_back(Rational(1));
  for (std::size_t p = 1; p < eta.dirs.size(); ++p)
    QMAC_ENSURE(!(eta.dirs[p] == eta.dirs[p - 1]), "adjacent directions coincide");
  return eta;
}

QLSPath project_pi(const RootDatum& datum, const LambdaChain& chain, const AdmissibleSubset& A) {
  return group_by_ratio(datum, chain, A.indices, A.path);
}

}  // namespace qmac
