#include "qmac/qls.hpp"

#include <algorithm>
#include <functional>

#include "qmac/charpoly.hpp"
#include "qmac/errors.hpp"

namespace qmac {

bool operator<(const QLSPath& a, const QLSPath& b) {
  if (a.dirs != b.dirs)
    return std::lexicographical_compare(a.dirs.begin(), a.dirs.end(), b.dirs.begin(),
                                        b.dirs.end());
  return std::lexicographical_compare(a.cuts.begin(), a.cuts.end(), b.cuts.begin(),
                                      b.cuts.end());
}

namespace {

Weight checked_dominant(const RootDatum& datum, Weight lambda) {
  if (lambda.size() != datum.rank())
    throw ValidationError("weight has " + std::to_string(lambda.size()) +
                          " coordinates, expected " + std::to_string(datum.rank()));
  if (!is_dominant(lambda)) throw ValidationError("weight is not dominant");
  return lambda;
}

// reach[x * n + y]: directed path x -> y.
std::vector<bool> reachability(const QBGraph& graph) {
  const int n = graph.num_vertices();
  std::vector<bool> reach(static_cast<std::size_t>(n) * n, false);
  for (int x = 0; x < n; ++x) {
    const auto row = reachable_from(graph, x);
    for (int y = 0; y < n; ++y) reach[x * n + y] = row[y];
  }
  return reach;
}

}  // namespace

QLSModel::QLSModel(const RootDatum& datum, Weight lambda)
    : lambda_(checked_dominant(datum, std::move(lambda))),
      graph_(datum, stabilizer(lambda_)),
      wt_table_(graph_, lambda_) {
  for (int k = 0; k < datum.num_positive_roots(); ++k) {
    const std::int64_t h = pairing(datum.coroot(k), lambda_);
    for (std::int64_t a = 1; a < h; ++a) cut_candidates_.emplace_back(a, h);
  }
  std::sort(cut_candidates_.begin(), cut_candidates_.end());
  cut_candidates_.erase(std::unique(cut_candidates_.begin(), cut_candidates_.end()),
                        cut_candidates_.end());

  const int n = graph_.num_vertices();
  std::vector<std::vector<bool>> reach;
  for (const auto& sigma : cut_candidates_)
    reach.push_back(reachability(graph_.restricted(sigma, lambda_)));

  // Backward search: fix the last direction, then keep prepending a smaller
  // cut and a new direction reachable from the current first one.
  std::vector<int> dirs;       // reversed: dirs[0] = x_s
  std::vector<Rational> cuts;  // reversed: interior cuts, descending
  std::function<void(int)> extend = [&](int bound) {
    QLSPath eta;
    for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) eta.dirs.push_back(graph_.vertex(*it));
    eta.cuts.push_back(Rational(0));
    for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) eta.cuts.push_back(*it);
    eta.cuts.push_back(Rational(1));
    paths_.push_back(std::move(eta));

    const int x = dirs.back();
    for (int c = 0; c < bound; ++c) {
      for (int y = 0; y < n; ++y) {
        if (y == x || !reach[c][x * n + y]) continue;
        dirs.push_back(y);
        cuts.push_back(cut_candidates_[c]);
        extend(c);
        dirs.pop_back();
        cuts.pop_back();
      }
    }
  };
  for (int x = 0; x < n; ++x) {
    dirs.assign(1, x);
    extend(static_cast<int>(cut_candidates_.size()));
  }
  std::sort(paths_.begin(), paths_.end());
}

int QLSModel::vertex(const WeylElt& w) const {
  const int v = graph_.vertex_index(w);
  if (v < 0) throw ValidationError(word_string(w) + " is not a minimal coset representative");
  return v;
}

bool QLSModel::is_valid(const QLSPath& eta) const {
  const std::size_t s = eta.dirs.size();
  if (s == 0 || eta.cuts.size() != s + 1) return false;
  if (eta.cuts.front() != Rational(0) || eta.cuts.back() != Rational(1)) return false;
  for (std::size_t u = 0; u < s; ++u)
    if (eta.cuts[u] >= eta.cuts[u + 1]) return false;
  for (const auto& x : eta.dirs)
    if (graph_.vertex_index(x) < 0) return false;
  for (std::size_t u = 1; u < s; ++u) {
    if (eta.dirs[u] == eta.dirs[u - 1]) return false;
    const QBGraph sub = graph_.restricted(eta.cuts[u], lambda_);
    const auto seen = reachable_from(sub, sub.vertex_index(eta.dirs[u]));
    if (!seen[sub.vertex_index(eta.dirs[u - 1])]) return false;
  }
  return true;
}

Weight QLSModel::wt(const QLSPath& eta) const {
  Vec<Rational> total = Vec<Rational>::Constant(datum().rank(), Rational(0));
  for (std::size_t u = 0; u < eta.dirs.size(); ++u) {
    const Weight xl = act(datum(), eta.dirs[u], lambda_);
    const Rational len = eta.cuts[u + 1] - eta.cuts[u];
    for (int j = 0; j < datum().rank(); ++j) total[j] += len * Rational(xl[j]);
  }
  Weight out(datum().rank());
  for (int j = 0; j < datum().rank(); ++j) {
    QMAC_ENSURE(is_integer(total[j]), "weight of a QLS path is not integral");
    out[j] = total[j].numerator();
  }
  return out;
}

std::int64_t QLSModel::wt_lambda(const WeylElt& x, const WeylElt& y) const {
  return wt_table_(vertex(x), vertex(y));
}

std::int64_t QLSModel::deg(const QLSPath& eta) const {
  Rational total(0);
  for (std::size_t u = 1; u < eta.dirs.size(); ++u)
    total += (Rational(1) - eta.cuts[u]) *
             Rational(wt_table_(vertex(eta.dirs[u]), vertex(eta.dirs[u - 1])));
  QMAC_ENSURE(is_integer(total), "degree of a QLS path is not integral");
  return -total.numerator();
}

std::vector<QLSPath> QLSModel::paths_below(const WeylElt& w) const {
  vertex(w);
  std::vector<QLSPath> out;
  for (const auto& eta : paths_)
    if (bruhat_leq(datum(), eta.initial_direction(), w)) out.push_back(eta);
  return out;
}

GradedChar QLSModel::gch(const WeylElt& w) const {
  GradedChar out;
  for (const auto& eta : paths_below(w)) out.add(wt(eta), -deg(eta));
  return out;
}

namespace {

// Values of H(t) = <alpha_i^vee, eta(t)> at the cut points.
std::vector<Rational> h_values(const RootDatum& datum, const Weight& lambda, int i,
                               const QLSPath& eta, std::vector<std::int64_t>& slopes) {
  std::vector<Rational> h{Rational(0)};
  slopes.clear();
  for (std::size_t u = 0; u < eta.dirs.size(); ++u) {
    slopes.push_back(act(datum, eta.dirs[u], lambda)[i]);
    h.push_back(h.back() + (eta.cuts[u + 1] - eta.cuts[u]) * Rational(slopes.back()));
  }
  return h;
}

// Replaces every direction x on [t0, t1] by floor(r_i x).
QLSPath reflect_interval(const RootDatum& datum, IndexSet J, int i, const QLSPath& eta,
                         const Rational& t0, const Rational& t1) {
  QLSPath out;
  out.cuts.push_back(Rational(0));
  auto append = [&](const Rational& a, const Rational& b, const WeylElt& x) {
    if (a == b) return;
    const bool inside = t0 <= a && b <= t1;
    WeylElt dir = inside ? min_coset_rep(datum, left_simple(datum, i, x), J) : x;
    if (!out.dirs.empty() && out.dirs.back() == dir) {
      out.cuts.back() = b;
    } else {
      out.dirs.push_back(std::move(dir));
      out.cuts.push_back(b);
    }
  };
  for (std::size_t u = 0; u < eta.dirs.size(); ++u) {
    Rational a = eta.cuts[u];
    const Rational b = eta.cuts[u + 1];
    for (const Rational& t : {t0, t1}) {
      if (a < t && t < b) {
        append(a, t, eta.dirs[u]);
        a = t;
      }
    }
    append(a, b, eta.dirs[u]);
  }
  return out;
}

void check_classical(const RootDatum& datum, int i) {
  if (i < 0 || i >= datum.rank())
    throw UnsupportedError("root operators are defined only for classical indices 1.." +
                           std::to_string(datum.rank()));
}

}  // namespace

// Conventions: with m the minimum of H, f_i reflects the segment from the
// last time H equals m to the next time it reaches m+1; e_i reflects the
// segment ending at the first time H equals m, starting where H last
// equals m+1 before it.
std::optional<QLSPath> QLSModel::f(int i, const QLSPath& eta) const {
  check_classical(datum(), i);
  std::vector<std::int64_t> slope;
  const auto h = h_values(datum(), lambda_, i, eta, slope);
  const Rational m = *std::min_element(h.begin(), h.end());
  QMAC_ENSURE(is_integer(m), "minimum of H is not an integer");
  if (h.back() - m < Rational(1)) return std::nullopt;

  std::size_t k0 = h.size() - 1;
  while (h[k0] != m) --k0;
  Rational t1;
  for (std::size_t u = k0; u < slope.size(); ++u) {
    if (h[u + 1] >= m + 1) {
      t1 = eta.cuts[u] + (m + 1 - h[u]) / Rational(slope[u]);
      break;
    }
  }
  return reflect_interval(datum(), parabolic(), i, eta, eta.cuts[k0], t1);
}

std::optional<QLSPath> QLSModel::e(int i, const QLSPath& eta) const {
  check_classical(datum(), i);
  std::vector<std::int64_t> slope;
  const auto h = h_values(datum(), lambda_, i, eta, slope);
  const Rational m = *std::min_element(h.begin(), h.end());
  QMAC_ENSURE(is_integer(m), "minimum of H is not an integer");
  if (m > Rational(-1)) return std::nullopt;

  std::size_t k1 = 0;
  while (h[k1] != m) ++k1;
  Rational t0;
  for (std::size_t u = k1; u-- > 0;) {
    if (h[u] >= m + 1) {
      t0 = eta.cuts[u] + (m + 1 - h[u]) / Rational(slope[u]);
      break;
    }
  }
  return reflect_interval(datum(), parabolic(), i, eta, t0, eta.cuts[k1]);
}

std::vector<QLSPath> enumerate_qls(const RootDatum& datum, const Weight& lambda) {
  return QLSModel(datum, lambda).paths();
}

GradedChar gch_qls(const RootDatum& datum, const WeylElt& w, const Weight& lambda) {
  return QLSModel(datum, lambda).gch(w);
}

QLSPath dual_star(const RootDatum& datum, const QLSPath& eta, IndexSet J) {
  const IndexSet oJ = omega(datum, J);
  const WeylElt w0 = longest_element(datum);
  QLSPath out;
  for (auto it = eta.dirs.rbegin(); it != eta.dirs.rend(); ++it)
    out.dirs.push_back(min_coset_rep(datum, multiply(datum, *it, w0), oJ));
  for (auto it = eta.cuts.rbegin(); it != eta.cuts.rend(); ++it)
    out.cuts.push_back(Rational(1) - *it);
  return out;
}

QLSPath omega_map(const RootDatum& datum, const QLSPath& eta) {
  QLSPath out = eta;
  for (auto& x : out.dirs) x = omega(datum, x);
  return out;
}

QLSPath lusztig(const RootDatum& datum, const QLSPath& eta, IndexSet J) {
  return omega_map(datum, dual_star(datum, eta, J));
}

}  // namespace qmac
