#include "qmac/charpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qmac/errors.hpp"
#include "qmac/qls.hpp"

namespace qmac {

namespace {

std::vector<std::int64_t> coords_of(const Weight& wt) {
  return std::vector<std::int64_t>(wt.data(), wt.data() + wt.size());
}

}  // namespace

Weight to_weight(const std::vector<std::int64_t>& coords) {
  Weight out(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) out[j] = coords[j];
  return out;
}

GradedChar GradedChar::monomial(const Weight& wt, std::int64_t q, std::int64_t c) {
  GradedChar out;
  out.add(wt, q, c);
  return out;
}

void GradedChar::add(const Weight& wt, std::int64_t q, std::int64_t c) {
  add(Monomial{coords_of(wt), q}, c);
}

void GradedChar::add(const Monomial& m, std::int64_t c) {
  QMAC_ENSURE(m.q >= 0, "negative power of q");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t GradedChar::coefficient(const Weight& wt, std::int64_t q) const {
  auto it = terms_.find(Monomial{coords_of(wt), q});
  return it == terms_.end() ? 0 : it->second;
}

GradedChar& GradedChar::operator+=(const GradedChar& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

GradedChar& GradedChar::operator-=(const GradedChar& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

std::vector<std::pair<Monomial, std::int64_t>> display_order(const GradedChar& f) {
  std::vector<std::pair<Monomial, std::int64_t>> out(f.terms().begin(), f.terms().end());
  auto l1 = [](const Monomial& m) {
    std::int64_t s = 0;
    for (auto v : m.wt) s += v < 0 ? -v : v;
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.first.q != b.first.q) return a.first.q < b.first.q;
    const auto la = l1(a.first), lb = l1(b.first);
    if (la != lb) return la > lb;
    return a.first.wt > b.first.wt;
  });
  return out;
}

namespace {

bool is_zero_weight(const Monomial& m) {
  return std::all_of(m.wt.begin(), m.wt.end(), [](auto v) { return v == 0; });
}

template <typename Body>
std::string join_terms(const GradedChar& f, const char* times, Body body) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : display_order(f)) {
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    const std::string b = body(m);
    if (b.empty())
      os << a;
    else if (a != 1)
      os << a << times << b;
    else
      os << b;
  }
  return os.str();
}

}  // namespace

std::string to_text(const GradedChar& f) {
  return join_terms(f, "*", [](const Monomial& m) {
    std::string out;
    if (!is_zero_weight(m)) out = "x^" + coords_string(to_weight(m.wt));
    if (m.q > 0) {
      if (!out.empty()) out += "*";
      out += m.q == 1 ? "q" : "q^" + std::to_string(m.q);
    }
    return out;
  });
}

std::string to_latex(const GradedChar& f) {
  return join_terms(f, " ", [](const Monomial& m) {
    std::string out;
    if (!is_zero_weight(m)) {
      std::string exp;
      for (std::size_t j = 0; j < m.wt.size(); ++j) {
        const auto v = m.wt[j];
        if (v == 0) continue;
        if (v < 0)
          exp += "-";
        else if (!exp.empty())
          exp += "+";
        if (v != 1 && v != -1) exp += std::to_string(v < 0 ? -v : v);
        exp += "\\varpi_{" + std::to_string(j + 1) + "}";
      }
      out = "e^{" + exp + "}";
    }
    if (m.q > 0) {
      if (!out.empty()) out += " ";
      out += m.q == 1 ? "q" : "q^{" + std::to_string(m.q) + "}";
    }
    return out;
  });
}

GradedChar demazure_D(const RootDatum& datum, int i, const GradedChar& f) {
  if (i < 0 || i >= datum.rank()) throw ValidationError("simple index out of range");
  const Weight alpha = datum.root_weight(i);
  GradedChar out;
  for (const auto& [m, c] : f.terms()) {
    const Weight xi = to_weight(m.wt);
    const std::int64_t n = xi[i];
    if (n >= 0) {
      for (std::int64_t k = 0; k <= n; ++k) out.add(Weight(xi - k * alpha), m.q, c);
    } else {
      for (std::int64_t k = 1; k <= -n - 1; ++k) out.add(Weight(xi + k * alpha), m.q, -c);
    }
  }
  return out;
}

GradedChar apply_demazure_word(const RootDatum& datum, const std::vector<int>& word,
                               const GradedChar& f) {
  GradedChar out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = demazure_D(datum, *it, out);
  return out;
}

namespace {

void require_minimal(const RootDatum& datum, const WeylElt& w, const Weight& lambda) {
  if (!in_quotient(datum, w, stabilizer(lambda)))
    throw ValidationError(word_string(w) + " is not a minimal coset representative");
}

}  // namespace

GradedChar macdonald_recursive(const RootDatum& datum, const WeylElt& w, const Weight& lambda) {
  return macdonald_recursive(datum, w.word(), lambda);
}

GradedChar macdonald_recursive(const RootDatum& datum, const std::vector<int>& word,
                               const Weight& lambda) {
  const WeylElt w = from_word(datum, word);
  if (w.length() != static_cast<int>(word.size()))
    throw ValidationError("word is not reduced");
  require_minimal(datum, w, lambda);
  const QLSModel model(datum, lambda);
  return apply_demazure_word(datum, word, model.gch(identity(datum)));
}

GradedChar demazure_character(const RootDatum& datum, const WeylElt& w, const Weight& lambda) {
  return apply_demazure_word(datum, w.word(), GradedChar::monomial(lambda));
}

GradedChar specialize_q0(const GradedChar& f) {
  GradedChar out;
  for (const auto& [m, c] : f.terms())
    if (m.q == 0) out.add(m, c);
  return out;
}

GradedChar weyl_act(const RootDatum& datum, const WeylElt& w, const GradedChar& f) {
  GradedChar out;
  for (const auto& [m, c] : f.terms()) out.add(act(datum, w, to_weight(m.wt)), m.q, c);
  return out;
}

bool is_symmetric(const RootDatum& datum, const GradedChar& f) {
  for (int i = 0; i < datum.rank(); ++i) {
    const WeylElt r = from_word(datum, std::vector<int>{i});
    if (!(weyl_act(datum, r, f) == f)) return false;
  }
  return true;
}

}  // namespace qmac
