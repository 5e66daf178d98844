#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmac/qbg.hpp"
#include "qmac/qls.hpp"
#include "qmac/rational.hpp"
#include "qmac/root_datum.hpp"
#include "qmac/weyl.hpp"

namespace qmac {

class GradedChar;

/// Total order on the positive roots induced by a reduced word of w0:
/// gamma_k = r_{i_1} ... r_{i_{k-1}} alpha_{i_k}.
class ReflectionOrder {
 public:
  /// Throws ValidationError unless word is a reduced word for w0.
  ReflectionOrder(const RootDatum& datum, std::vector<int> word);

  /// Word of floor(w0)^K followed by the word of the longest element of W_K.
  /// Roots outside Phi_{omega(K)} come first.
  static ReflectionOrder standard(const RootDatum& datum, IndexSet K);

  const std::vector<int>& word() const { return word_; }
  /// Root indices, smallest first.
  const std::vector<int>& roots() const { return roots_; }
  int position(int root) const { return position_[root]; }

 private:
  std::vector<int> word_;
  std::vector<int> roots_;
  std::vector<int> position_;
};

/// alpha + beta lies strictly between alpha and beta whenever all three are positive roots.
bool satisfies_reflection_axiom(const RootDatum& datum, const ReflectionOrder& order);

struct ChainEntry {
  int root = 0;         // positive root index
  std::int64_t b = 0;   // level, 0 <= b < h
  std::int64_t h = 0;   // <gamma^vee, mu>
  Rational d;           // b / h
};

struct LambdaChain {
  Weight mu;
  std::vector<ChainEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

/// Entries sorted by (d, position in order); certified with validate_chain.
LambdaChain build_lex_chain(const RootDatum& datum, const Weight& mu,
                            const ReflectionOrder& order);
/// The default order for mu: standard(omega(J_mu)).
LambdaChain build_lex_chain(const RootDatum& datum, const Weight& mu);

struct ChainViolation {
  int step = 0;  // 1-based; 0 for whole-chain checks
  std::string message;
};

/// Walks a generic point from the fundamental alcove through the chain's
/// hyperplanes and checks it is a reduced alcove path ending at the -mu translate.
std::optional<ChainViolation> validate_chain(const RootDatum& datum, const LambdaChain& chain);

/// Subset of chain positions tracing a path e -> x_1 -> ... in QB(W).
struct AdmissibleSubset {
  std::vector<int> indices;    // 0-based chain positions, increasing
  std::vector<WeylElt> path;   // x_0 = e, ..., x_r
  std::vector<bool> quantum;   // quantum[k]: step x_k -> x_{k+1} is a quantum edge

  const WeylElt& final_direction() const { return path.back(); }
};

/// All admissible subsets, depth first. qbw must be QB(W) (J empty).
std::vector<AdmissibleSubset> enumerate_admissible(const QBGraph& qbw, const LambdaChain& chain);

Weight wt_A(const RootDatum& datum, const LambdaChain& chain, const AdmissibleSubset& A);
std::int64_t height(const LambdaChain& chain, const AdmissibleSubset& A);
std::int64_t coheight(const LambdaChain& chain, const AdmissibleSubset& A);

/// The quantum alcove model over the lex chain of mu.
class AlcoveModel {
 public:
  AlcoveModel(const RootDatum& datum, Weight mu);
  AlcoveModel(const RootDatum& datum, Weight mu, const ReflectionOrder& order);

  const RootDatum& datum() const { return graph_.datum(); }
  const LambdaChain& chain() const { return chain_; }
  const QBGraph& graph() const { return graph_; }
  const std::vector<AdmissibleSubset>& subsets() const { return subsets_; }

  Weight wt(const AdmissibleSubset& A) const { return wt_A(datum(), chain_, A); }
  std::int64_t height(const AdmissibleSubset& A) const { return qmac::height(chain_, A); }
  std::int64_t coheight(const AdmissibleSubset& A) const { return qmac::coheight(chain_, A); }

  /// Reading the chain as a lambda-chain (lambda = mu): sum over A with
  /// floor(phi(A)) <= w of q^coheight x^wt.
  GradedChar macdonald(const WeylElt& w) const;

 private:
  QBGraph graph_;
  LambdaChain chain_;
  std::vector<AdmissibleSubset> subsets_;
};

GradedChar macdonald_alcove(const RootDatum& datum, const WeylElt& w, const Weight& lambda);
GradedChar macdonald_alcove(const RootDatum& datum, const WeylElt& w, const Weight& lambda,
                            const ReflectionOrder& order);

/// Groups the steps of a path over a lex (-w0 lambda)-chain by ratio and
/// returns the resulting QLS path of shape lambda. dirs holds x_0, ..., x_r.
QLSPath group_by_ratio(const RootDatum& datum, const LambdaChain& chain,
                       const std::vector<int>& indices, const std::vector<WeylElt>& dirs);

/// chain must be the lex chain of -w0 lambda.
QLSPath project_pi(const RootDatum& datum, const LambdaChain& chain, const AdmissibleSubset& A);

}  // namespace qmac
