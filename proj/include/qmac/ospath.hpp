#pragma once

#include <cstdint>
#include <vector>

#include "qmac/alcove.hpp"
#include "qmac/qbg.hpp"
#include "qmac/qls.hpp"
#include "qmac/root_datum.hpp"
#include "qmac/weyl.hpp"

namespace qmac {

class GradedChar;

/// A quantum alcove path from e over the lex (-w0 lambda)-chain.
struct OSPath {
  std::vector<int> indices;    // 0-based chain positions, increasing
  std::vector<WeylElt> dirs;   // dir(z_0) = e, ..., dir(z_r)
  std::vector<bool> quantum;   // per step
  Weight wt;                   // wt(z_r)
  std::int64_t deg = 0;        // deg(qwt): sum of a_j over quantum steps
  WeylElt tilde_iota;          // product of the reflections with b = 0

  const WeylElt& dir() const { return dirs.back(); }
};

class OSModel {
 public:
  OSModel(const RootDatum& datum, Weight lambda);
  OSModel(const RootDatum& datum, Weight lambda, const ReflectionOrder& order);

  const RootDatum& datum() const { return graph_.datum(); }
  const Weight& lambda() const { return lambda_; }
  /// The lex chain of -w0 lambda.
  const LambdaChain& chain() const { return chain_; }
  const std::vector<OSPath>& paths() const { return paths_; }

  /// a_k = <gamma_k^vee, -w0 lambda> - b_k
  std::int64_t a(int k) const { return chain_.entries[k].h - chain_.entries[k].b; }

  /// Sum over paths with tilde_iota >= w floor(w0)^{-1} of x^wt q^deg.
  GradedChar macdonald(const WeylElt& w) const;
  /// The paths surviving the filter for w.
  std::vector<OSPath> paths_for(const WeylElt& w) const;
  QLSPath xi(const OSPath& p) const;

 private:
  void enumerate();

  Weight lambda_;
  QBGraph graph_;
  LambdaChain chain_;
  std::vector<OSPath> paths_;
};

std::vector<OSPath> enumerate_os(const RootDatum& datum, const Weight& lambda);
inline std::int64_t qwt_deg(const OSPath& p) { return p.deg; }
inline const WeylElt& tilde_iota(const OSPath& p) { return p.tilde_iota; }
GradedChar macdonald_os(const RootDatum& datum, const WeylElt& w, const Weight& lambda);

}  // namespace qmac
