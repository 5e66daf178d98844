#include "qmac/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

#include "qmac/errors.hpp"

namespace qmac {

namespace {

constexpr std::size_t kMaxGroupOrder = 2'000'000;

int first_negative(const Weight& key) {
  for (Eigen::Index i = 0; i < key.size(); ++i)
    if (key[i] < 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

WeylElt WeylElt::from_key(const RootDatum& datum, Weight key) {
  WeylElt w;
  Weight cur = key;
  for (int i = first_negative(cur); i >= 0; i = first_negative(cur)) {
    w.word_.push_back(i);
    cur = reflect_simple(datum, i, cur);
  }
  QMAC_ENSURE(cur == datum.rho(), "key " + coords_string(key) + " is not in W.rho");
  w.key_ = std::move(key);
  return w;
}

bool operator<(const WeylElt& a, const WeylElt& b) {
  return std::lexicographical_compare(a.key_.begin(), a.key_.end(), b.key_.begin(),
                                      b.key_.end());
}

std::size_t WeylEltHash::operator()(const WeylElt& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto x : w.key()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
  return h;
}

WeylElt identity(const RootDatum& datum) { return WeylElt::from_key(datum, datum.rho()); }

WeylElt longest_element(const RootDatum& datum) {
  return WeylElt::from_key(datum, -datum.rho());
}

WeylElt longest_element(const RootDatum& datum, IndexSet J) {
  WeylElt w = identity(datum);
  for (bool grew = true; grew;) {
    grew = false;
    for (int j : J.indices()) {
      if (!has_right_descent(datum, w, j)) {
        w = right_simple(datum, w, j);
        grew = true;
        break;
      }
    }
  }
  return w;
}

WeylElt from_word(const RootDatum& datum, std::span<const int> word) {
  Weight key = datum.rho();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= datum.rank())
      throw ValidationError("simple reflection index out of range: s" +
                            std::to_string(*it + 1));
    key = reflect_simple(datum, *it, key);
  }
  return WeylElt::from_key(datum, std::move(key));
}

std::vector<int> parse_letters(const RootDatum& datum, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != ',' && c != '*') s += c;
  if (s.empty() || s == "e" || s == "1") return {};
  if (s == "w0") return longest_element(datum).word();
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 's' && s[pos] != 'r')
      throw ValidationError("malformed Weyl word '" + std::string(text) + "'");
    ++pos;
    int idx = 0;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      idx = idx * 10 + (s[pos] - '0');
      ++pos;
      if (idx > 1000) break;
    }
    if (pos == start || idx < 1 || idx > datum.rank())
      throw ValidationError("malformed Weyl word '" + std::string(text) + "'");
    word.push_back(idx - 1);
  }
  return word;
}

WeylElt parse_word(const RootDatum& datum, std::string_view text) {
  return from_word(datum, parse_letters(datum, text));
}

std::string word_string(const WeylElt& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (int i : w.word()) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(i + 1);
  }
  return out;
}

WeylElt multiply(const RootDatum& datum, const WeylElt& u, const WeylElt& v) {
  return WeylElt::from_key(datum, act(datum, u, v.key()));
}

WeylElt inverse(const RootDatum& datum, const WeylElt& w) {
  std::vector<int> rev(w.word().rbegin(), w.word().rend());
  return from_word(datum, rev);
}

WeylElt left_simple(const RootDatum& datum, int i, const WeylElt& w) {
  return WeylElt::from_key(datum, reflect_simple(datum, i, w.key()));
}

WeylElt right_simple(const RootDatum& datum, const WeylElt& w, int i) {
  // w r_i rho = w(rho - alpha_i)
  Weight alpha_i = datum.root_weight(i);
  return WeylElt::from_key(datum, w.key() - act(datum, w, alpha_i));
}

WeylElt times_reflection(const RootDatum& datum, const WeylElt& w, int k) {
  // w r_beta rho = w rho - <beta^vee, rho> w(beta)
  Weight wb = act(datum, w, datum.root_weight(k));
  return WeylElt::from_key(datum, w.key() - datum.coroot_height(k) * wb);
}

RootCoords act_root(const RootDatum& datum, const WeylElt& w, RootCoords c) {
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    c = reflect_simple_root(datum, *it, c);
  return c;
}

bool has_right_descent(const RootDatum& datum, const WeylElt& w, int i) {
  return !is_positive(act_root(datum, w, RootCoords::Unit(datum.rank(), i)));
}

bool bruhat_leq(const RootDatum& datum, const WeylElt& u, const WeylElt& w) {
  Weight uk = u.key(), wk = w.key();
  int ul = u.length(), wl = w.length();
  while (true) {
    if (ul > wl) return false;
    const int i = first_negative(wk);
    if (i < 0) return ul == 0;
    wk = reflect_simple(datum, i, wk);
    --wl;
    if (uk[i] < 0) {
      uk = reflect_simple(datum, i, uk);
      --ul;
    }
  }
}

WeylElt min_coset_rep(const RootDatum& datum, const WeylElt& w, IndexSet J) {
  WeylElt cur = w;
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (int j : J.indices()) {
      if (has_right_descent(datum, cur, j)) {
        cur = right_simple(datum, cur, j);
        shrunk = true;
        break;
      }
    }
  }
  return cur;
}

bool in_quotient(const RootDatum& datum, const WeylElt& w, IndexSet J) {
  for (int j : J.indices())
    if (has_right_descent(datum, w, j)) return false;
  return true;
}

std::uint64_t group_order(const RootDatum& datum) {
  // n! * (coefficients of the highest root) * det(cartan)
  const int n = datum.rank();
  int top = 0;
  for (int k = 1; k < datum.num_positive_roots(); ++k)
    if (datum.root(k).sum() > datum.root(top).sum()) top = k;
  std::uint64_t order = 1;
  for (int i = 1; i <= n; ++i) order *= static_cast<std::uint64_t>(i) * datum.root(top)[i - 1];
  // Bareiss elimination keeps every intermediate integral.
  IntMatrix m = datum.cartan();
  std::int64_t prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return order * static_cast<std::uint64_t>(m(n - 1, n - 1));
}

std::vector<WeylElt> enumerate_group(const RootDatum& datum) {
  if (group_order(datum) > kMaxGroupOrder)
    throw UnsupportedError("Weyl group of " + datum.type().name() + " is too large to enumerate");
  std::vector<WeylElt> out{identity(datum)};
  std::unordered_set<WeylElt, WeylEltHash> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < datum.rank(); ++i) {
      if (out[head].has_left_descent(i)) continue;
      WeylElt next = left_simple(datum, i, out[head]);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  });
  return out;
}

std::vector<WeylElt> enumerate_minimal_reps(const RootDatum& datum, IndexSet J) {
  std::vector<WeylElt> out;
  for (auto& w : enumerate_group(datum))
    if (in_quotient(datum, w, J)) out.push_back(std::move(w));
  return out;
}

int omega(const RootDatum& datum, int i) { return datum.omega(i); }

IndexSet omega(const RootDatum& datum, IndexSet J) {
  IndexSet out;
  for (int j : J.indices()) out.insert(omega(datum, j));
  return out;
}

Weight omega(const RootDatum& datum, const Weight& xi) {
  Weight out(xi.size());
  for (int i = 0; i < datum.rank(); ++i) out[omega(datum, i)] = xi[i];
  return out;
}

WeylElt omega(const RootDatum& datum, const WeylElt& w) {
  std::vector<int> word;
  for (int i : w.word()) word.push_back(omega(datum, i));
  return from_word(datum, word);
}

}  // namespace qmac
