#include "qmac/root_datum.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "qmac/errors.hpp"
#include "qmac/rational.hpp"

namespace qmac {

namespace {

bool valid_type(char letter, int rank) {
  switch (letter) {
    case 'A': return rank >= 1 && rank <= 63;
    case 'B': return rank >= 2 && rank <= 63;
    case 'C': return rank >= 2 && rank <= 63;
    case 'D': return rank >= 4 && rank <= 63;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

// Bourbaki labelling, 0-based.
IntMatrix make_cartan(CartanType t) {
  const int n = t.rank;
  IntMatrix a = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (t.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      a(1, 2) = -1;
      a(2, 1) = -2;
      break;
    case 'G':
      a(0, 1) = -3;  // alpha_1 short
      a(1, 0) = -1;
      break;
  }
  return a;
}

Vec<std::int64_t> make_symmetrizer(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (j == i || a(i, j) == 0 || d[j] != Rational(0)) continue;
      d[j] = d[i] * Rational(a(i, j), a(j, i));
      queue.push_back(j);
    }
  }
  std::int64_t lcm = 1;
  for (const auto& x : d) lcm = std::lcm(lcm, x.denominator());
  Vec<std::int64_t> out(n);
  std::int64_t g = 0;
  for (int i = 0; i < n; ++i) {
    Rational v = d[i] * lcm;
    out[i] = v.numerator();
    g = std::gcd(g, out[i]);
  }
  return out / g;
}

std::string key_of(const RootCoords& c) { return coords_string(c); }

}  // namespace

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2)
    throw ValidationError("invalid Cartan type '" + std::string(text) + "'");
  const char letter =
      static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000)
      throw ValidationError("invalid Cartan type '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
  }
  if (!valid_type(letter, rank))
    throw ValidationError("not a finite Dynkin type: '" + std::string(text) + "'");
  return CartanType{letter, rank};
}

std::string CartanType::name() const {
  return std::string(1, letter) + std::to_string(rank);
}

IndexSet IndexSet::all(int rank) {
  IndexSet s;
  for (int i = 0; i < rank; ++i) s.insert(i);
  return s;
}

IndexSet IndexSet::from(const std::vector<int>& indices) {
  IndexSet s;
  for (int i : indices) s.insert(i);
  return s;
}

int IndexSet::size() const { return std::popcount(bits_); }

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

RootDatum::RootDatum(CartanType type) : type_(type) {
  if (!valid_type(type.letter, type.rank))
    throw ValidationError("not a finite Dynkin type: " + type.name());
  cartan_ = make_cartan(type);
  symmetrizer_ = make_symmetrizer(cartan_);
  const int n = type.rank;

  // Reflection closure of the simple roots, keeping the positive ones.
  std::vector<RootCoords> found;
  std::unordered_map<std::string, int> seen;
  std::deque<RootCoords> queue;
  for (int i = 0; i < n; ++i) {
    RootCoords c = RootCoords::Unit(n, i);
    seen.emplace(key_of(c), static_cast<int>(found.size()));
    found.push_back(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    RootCoords c = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootCoords r = reflect_simple_root(*this, i, c);
      if (!is_positive(r) || seen.count(key_of(r))) continue;
      seen.emplace(key_of(r), static_cast<int>(found.size()));
      found.push_back(r);
      queue.push_back(r);
    }
  }
  // Simple roots first, then by height, then lexicographically descending.
  std::stable_sort(found.begin() + n, found.end(),
                   [](const RootCoords& x, const RootCoords& y) {
                     if (x.sum() != y.sum()) return x.sum() < y.sum();
                     return std::lexicographical_compare(y.begin(), y.end(),
                                                         x.begin(), x.end());
                   });
  roots_ = std::move(found);
  for (int k = 0; k < static_cast<int>(roots_.size()); ++k) {
    index_.emplace(key_of(roots_[k]), k);
    root_weights_.push_back(root_to_weight(roots_[k]));
    coroots_.push_back(coroot_of(roots_[k]));
  }

  // Reduced word of w0 by descent stripping of -rho, then w0 alpha_i.
  std::vector<int> w0_word;
  for (Weight key = -rho(); !is_dominant(key);) {
    int i = 0;
    while (key[i] >= 0) ++i;
    w0_word.push_back(i);
    key = reflect_simple(*this, i, key);
  }
  for (int i = 0; i < n; ++i) {
    RootCoords c = RootCoords::Unit(n, i);
    for (auto it = w0_word.rbegin(); it != w0_word.rend(); ++it)
      c = reflect_simple_root(*this, *it, c);
    const int j = root_index(-c);
    QMAC_ENSURE(j >= 0 && j < n, "w0 does not send a simple root to a negative simple root");
    omega_.push_back(j);
  }
}

int RootDatum::root_index(const RootCoords& coords) const {
  auto it = index_.find(key_of(coords));
  return it == index_.end() ? -1 : it->second;
}

bool RootDatum::in_parabolic(int k, IndexSet J) const {
  for (int i = 0; i < rank(); ++i)
    if (roots_[k][i] != 0 && !J.contains(i)) return false;
  return true;
}

Weight RootDatum::two_rho(IndexSet J) const {
  Weight out = Weight::Zero(rank());
  for (int k = 0; k < num_positive_roots(); ++k)
    if (in_parabolic(k, J)) out += root_weights_[k];
  return out;
}

CorootCoords RootDatum::coroot_of(const RootCoords& c) const {
  // (beta, beta) = sum_ij c_i c_j d_i a_ij with d the symmetrizer.
  std::int64_t norm = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      norm += c[i] * c[j] * symmetrizer_[i] * cartan_(i, j);
  QMAC_ENSURE(norm > 0, "non-positive root norm");
  CorootCoords out(rank());
  for (int j = 0; j < rank(); ++j) {
    const std::int64_t num = 2 * c[j] * symmetrizer_[j];
    QMAC_ENSURE(num % norm == 0, "non-integral coroot");
    out[j] = num / norm;
  }
  return out;
}

RootCoords reflect_simple_root(const RootDatum& datum, int i, const RootCoords& c) {
  RootCoords out = c;
  const std::int64_t n = (datum.cartan().row(i) * c)(0);
  out[i] -= n;
  return out;
}

bool is_positive(const RootCoords& c) {
  bool nonzero = false;
  for (auto x : c) {
    if (x < 0) return false;
    nonzero |= (x != 0);
  }
  return nonzero;
}

bool is_dominant(const Weight& w) {
  return (w.array() >= 0).all();
}

IndexSet stabilizer(const Weight& lambda) {
  IndexSet J;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (lambda[i] == 0) J.insert(static_cast<int>(i));
  return J;
}

std::string coords_string(const Vec<std::int64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
  return os.str();
}

}  // namespace qmac
