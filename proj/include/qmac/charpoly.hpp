#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmac/root_datum.hpp"
#include "qmac/weyl.hpp"

namespace qmac {

struct Monomial {
  std::vector<std::int64_t> wt;
  std::int64_t q = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Finite sum of c * x^wt * q^n with integer c != 0 and n >= 0.
class GradedChar {
 public:
  using Terms = std::map<Monomial, std::int64_t>;

  GradedChar() = default;
  static GradedChar monomial(const Weight& wt, std::int64_t q = 0, std::int64_t c = 1);

  /// Adds c * x^wt * q^n. Throws InvariantError on a negative q-exponent.
  void add(const Weight& wt, std::int64_t q, std::int64_t c = 1);
  void add(const Monomial& m, std::int64_t c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of x^wt q^n (0 if absent).
  std::int64_t coefficient(const Weight& wt, std::int64_t q = 0) const;

  GradedChar& operator+=(const GradedChar& other);
  GradedChar& operator-=(const GradedChar& other);
  friend GradedChar operator+(GradedChar a, const GradedChar& b) { return a += b; }
  friend GradedChar operator-(GradedChar a, const GradedChar& b) { return a -= b; }
  friend bool operator==(const GradedChar&, const GradedChar&) = default;

 private:
  Terms terms_;
};

Weight to_weight(const std::vector<std::int64_t>& coords);

/// Terms in display order: q ascending, then |wt|_1 descending, then wt
/// lexicographically descending.
std::vector<std::pair<Monomial, std::int64_t>> display_order(const GradedChar& f);

/// "x^[2] + x^[-2] + 1 + q"
std::string to_text(const GradedChar& f);
/// "e^{2\varpi_{1}} + q"
std::string to_latex(const GradedChar& f);

/// Isobaric Demazure operator on the i-th simple index, Z[q]-linear.
GradedChar demazure_D(const RootDatum& datum, int i, const GradedChar& f);
/// D_{i_1} ... D_{i_k} f for the word (i_1, ..., i_k); the last letter acts first.
GradedChar apply_demazure_word(const RootDatum& datum, const std::vector<int>& word,
                               const GradedChar& f);

/// gch QLS_e(lambda) pushed up along a reduced word of w with Demazure operators.
GradedChar macdonald_recursive(const RootDatum& datum, const WeylElt& w, const Weight& lambda);
/// As above with an explicit reduced word for w.
GradedChar macdonald_recursive(const RootDatum& datum, const std::vector<int>& word,
                               const Weight& lambda);

/// D_{i_1} ... D_{i_k} x^lambda.
GradedChar demazure_character(const RootDatum& datum, const WeylElt& w, const Weight& lambda);
/// Drops every term with a positive power of q.
GradedChar specialize_q0(const GradedChar& f);

GradedChar weyl_act(const RootDatum& datum, const WeylElt& w, const GradedChar& f);
/// Invariant under every simple reflection.
bool is_symmetric(const RootDatum& datum, const GradedChar& f);

}  // namespace qmac
