#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qmac/qbg.hpp"
#include "qmac/rational.hpp"
#include "qmac/root_datum.hpp"
#include "qmac/weyl.hpp"

namespace qmac {

class GradedChar;

/// A quantum LS path (x_1, ..., x_s; 0 = sigma_0 < ... < sigma_s = 1).
/// dirs.size() == s and cuts.size() == s + 1.
struct QLSPath {
  std::vector<WeylElt> dirs;
  std::vector<Rational> cuts;

  const WeylElt& initial_direction() const { return dirs.front(); }

  friend bool operator==(const QLSPath&, const QLSPath&) = default;
};

/// Total order used for canonical listings: by (dirs, cuts).
bool operator<(const QLSPath& a, const QLSPath& b);

/// QLS(lambda) together with the graphs it is built from.
class QLSModel {
 public:
  QLSModel(const RootDatum& datum, Weight lambda);

  const RootDatum& datum() const { return graph_.datum(); }
  const Weight& lambda() const { return lambda_; }
  IndexSet parabolic() const { return graph_.parabolic(); }
  const QBGraph& graph() const { return graph_; }
  /// Candidate cut points {a/h : h = <beta^vee, lambda> > 0, 0 < a < h}, ascending.
  const std::vector<Rational>& cut_candidates() const { return cut_candidates_; }

  /// Every path of QLS(lambda), sorted.
  const std::vector<QLSPath>& paths() const { return paths_; }

  /// Checks the defining conditions directly.
  bool is_valid(const QLSPath& eta) const;

  Weight wt(const QLSPath& eta) const;
  std::int64_t deg(const QLSPath& eta) const;
  std::int64_t wt_lambda(const WeylElt& x, const WeylElt& y) const;

  /// Paths with initial direction <= w, for w in W^J.
  std::vector<QLSPath> paths_below(const WeylElt& w) const;
  /// sum over QLS_w(lambda) of q^{-Deg} x^{wt}.
  GradedChar gch(const WeylElt& w) const;

  /// Classical root operators. Return nullopt for the zero element.
  /// Throws UnsupportedError unless 0 <= i < rank.
  std::optional<QLSPath> f(int i, const QLSPath& eta) const;
  std::optional<QLSPath> e(int i, const QLSPath& eta) const;

 private:
  int vertex(const WeylElt& w) const;

  Weight lambda_;
  QBGraph graph_;
  WtLambdaTable wt_table_;
  std::vector<Rational> cut_candidates_;
  std::vector<QLSPath> paths_;
};

/// Free-function forms for one-off use.
std::vector<QLSPath> enumerate_qls(const RootDatum& datum, const Weight& lambda);
GradedChar gch_qls(const RootDatum& datum, const WeylElt& w, const Weight& lambda);

/// eta^* in QLS(-w0 lambda); lambda's stabilizer is J.
QLSPath dual_star(const RootDatum& datum, const QLSPath& eta, IndexSet J);
/// Applies the diagram involution to every direction; lands in QLS(omega lambda).
QLSPath omega_map(const RootDatum& datum, const QLSPath& eta);
/// omega o *, an involution on QLS(lambda).
QLSPath lusztig(const RootDatum& datum, const QLSPath& eta, IndexSet J);

}  // namespace qmac
