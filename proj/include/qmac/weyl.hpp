#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmac/root_datum.hpp"

namespace qmac {

/// A Weyl group element, identified by its image of rho.
///
/// rho is strictly dominant, so w -> w(rho) is injective. The cached word is
/// the reduced word obtained by repeatedly stripping the smallest left
/// descent; word()[0] is the leftmost letter.
class WeylElt {
 public:
  WeylElt() = default;

  /// Builds the element with w(rho) = key. Throws InvariantError if key is
  /// not in the W-orbit of rho.
  static WeylElt from_key(const RootDatum& datum, Weight key);

  const Weight& key() const { return key_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  /// r_i w < w, i.e. <alpha_i^vee, w rho> < 0.
  bool has_left_descent(int i) const { return key_[i] < 0; }

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    return a.key_ == b.key_;
  }
  /// Arbitrary but fixed total order (lexicographic on the key).
  friend bool operator<(const WeylElt& a, const WeylElt& b);

 private:
  Weight key_;
  std::vector<int> word_;
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& w) const noexcept;
};

WeylElt identity(const RootDatum& datum);
WeylElt longest_element(const RootDatum& datum);
/// Longest element of the parabolic subgroup W_J.
WeylElt longest_element(const RootDatum& datum, IndexSet J);
WeylElt from_word(const RootDatum& datum, std::span<const int> word);
/// Parses "s1 s2 s1", "s1s2", "e", "w0" (1-based indices).
WeylElt parse_word(const RootDatum& datum, std::string_view text);
/// The letters of such a word as written, 0-based.
std::vector<int> parse_letters(const RootDatum& datum, std::string_view text);
/// "s1 s2 s1", or "e" for the identity.
std::string word_string(const WeylElt& w);

WeylElt multiply(const RootDatum& datum, const WeylElt& u, const WeylElt& v);
WeylElt inverse(const RootDatum& datum, const WeylElt& w);
/// r_i w
WeylElt left_simple(const RootDatum& datum, int i, const WeylElt& w);
/// w r_i
WeylElt right_simple(const RootDatum& datum, const WeylElt& w, int i);
/// w r_beta for the k-th positive root beta.
WeylElt times_reflection(const RootDatum& datum, const WeylElt& w, int k);

template <typename Scalar>
Vec<Scalar> act(const RootDatum& datum, const WeylElt& w, Vec<Scalar> xi) {
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    xi = reflect_simple(datum, *it, xi);
  return xi;
}

RootCoords act_root(const RootDatum& datum, const WeylElt& w, RootCoords c);

/// w alpha_i < 0
bool has_right_descent(const RootDatum& datum, const WeylElt& w, int i);

/// Bruhat order by descent recursion: if r_i w < w then
/// u <= w iff min(u, r_i u) <= r_i w.
bool bruhat_leq(const RootDatum& datum, const WeylElt& u, const WeylElt& w);

/// The minimal-length representative of the coset w W_J.
WeylElt min_coset_rep(const RootDatum& datum, const WeylElt& w, IndexSet J);
/// w alpha > 0 for every alpha in Phi_J^+.
bool in_quotient(const RootDatum& datum, const WeylElt& w, IndexSet J);

std::uint64_t group_order(const RootDatum& datum);
/// Every element of W ordered by (length, word). Throws UnsupportedError if
/// the group is too large to list.
std::vector<WeylElt> enumerate_group(const RootDatum& datum);
/// W^J in the same order.
std::vector<WeylElt> enumerate_minimal_reps(const RootDatum& datum, IndexSet J);

/// Diagram involution with w0 alpha_i = -alpha_omega(i).
int omega(const RootDatum& datum, int i);
IndexSet omega(const RootDatum& datum, IndexSet J);
/// Coordinates permuted by omega; equals -w0 xi.
Weight omega(const RootDatum& datum, const Weight& xi);
/// Group automorphism r_i -> r_omega(i).
WeylElt omega(const RootDatum& datum, const WeylElt& w);

}  // namespace qmac
