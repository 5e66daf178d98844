#include "qmac/ospath.hpp"

#include <functional>

#include "qmac/charpoly.hpp"
#include "qmac/errors.hpp"

namespace qmac {

namespace {

Weight checked(const RootDatum& datum, Weight lambda) {
  if (lambda.size() != datum.rank() || !is_dominant(lambda))
    throw ValidationError("weight is not dominant");
  return lambda;
}

}  // namespace

OSModel::OSModel(const RootDatum& datum, Weight lambda)
    : lambda_(checked(datum, std::move(lambda))),
      graph_(datum, IndexSet()),
      chain_(build_lex_chain(datum, omega(datum, lambda_))) {
  enumerate();
}

OSModel::OSModel(const RootDatum& datum, Weight lambda, const ReflectionOrder& order)
    : lambda_(checked(datum, std::move(lambda))),
      graph_(datum, IndexSet()),
      chain_(build_lex_chain(datum, omega(datum, lambda_), order)) {
  enumerate();
}

void OSModel::enumerate() {
  const RootDatum& D = datum();
  OSPath current;
  current.dirs.push_back(identity(D));
  current.wt = act(D, longest_element(D), lambda_);
  current.tilde_iota = identity(D);
  std::vector<int> at{graph_.vertex_index(current.dirs.back())};

  std::function<void(int)> extend = [&](int from) {
    paths_.push_back(current);
    for (int j = from; j < chain_.size(); ++j) {
      const ChainEntry& entry = chain_.entries[j];
      const QBGEdge* e = graph_.find_edge(at.back(), entry.root);
      if (e == nullptr) continue;
      const OSPath saved = current;
      const bool quantum = e->kind == EdgeKind::Quantum;
      const RootCoords moved = act_root(D, current.dir(), D.root(entry.root));
      current.wt += a(j) * D.root_to_weight(moved);
      current.indices.push_back(j);
      current.dirs.push_back(graph_.vertex(e->target));
      current.quantum.push_back(quantum);
      if (quantum) current.deg += a(j);
      if (entry.b == 0) current.tilde_iota = current.dir();
      at.push_back(e->target);
      extend(j + 1);
      at.pop_back();
      current = saved;
    }
  };
  extend(0);

  const IndexSet oJ = omega(D, stabilizer(lambda_));
  for (const auto& p : paths_)
    QMAC_ENSURE(in_quotient(D, p.tilde_iota, oJ), "tilde iota lies outside W^{omega(J)}");
}

std::vector<OSPath> OSModel::paths_for(const WeylElt& w) const {
  const RootDatum& D = datum();
  const IndexSet J = stabilizer(lambda_);
  if (!in_quotient(D, w, J))
    throw ValidationError(word_string(w) + " is not a minimal coset representative");
  const WeylElt top = min_coset_rep(D, longest_element(D), J);
  const WeylElt bound = multiply(D, w, inverse(D, top));
  std::vector<OSPath> out;
  for (const auto& p : paths_)
    if (bruhat_leq(D, bound, p.tilde_iota)) out.push_back(p);
  return out;
}

GradedChar OSModel::macdonald(const WeylElt& w) const {
  GradedChar out;
  for (const auto& p : paths_for(w)) out.add(p.wt, p.deg);
  return out;
}

QLSPath OSModel::xi(const OSPath& p) const {
  return group_by_ratio(datum(), chain_, p.indices, p.dirs);
}

std::vector<OSPath> enumerate_os(const RootDatum& datum, const Weight& lambda) {
  return OSModel(datum, lambda).paths();
}

GradedChar macdonald_os(const RootDatum& datum, const WeylElt& w, const Weight& lambda) {
  return OSModel(datum, lambda).macdonald(w);
}

}  // namespace qmac
