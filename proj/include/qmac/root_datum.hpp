#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

namespace qmac {

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Integral weight in the fundamental-weight basis.
using Weight = Vec<std::int64_t>;
/// Element of the root lattice in the simple-root basis.
using RootCoords = Vec<std::int64_t>;
/// Element of the coroot lattice in the simple-coroot basis.
using CorootCoords = Vec<std::int64_t>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct CartanType {
  char letter = 'A';
  int rank = 1;

  /// Parses "A2", "g2", "E8". Throws ValidationError for anything that is
  /// not a finite Dynkin type.
  static CartanType parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Subset of the simple indices {0, ..., rank-1}.
class IndexSet {
 public:
  IndexSet() = default;
  static IndexSet all(int rank);
  static IndexSet from(const std::vector<int>& indices);

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void insert(int i) { bits_ |= (std::uint64_t{1} << i); }
  bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<int> indices() const;
  std::uint64_t bits() const { return bits_; }

  friend bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite root system data: Cartan matrix, positive roots and coroots.
///
/// Convention: cartan()(i, j) = <alpha_i^vee, alpha_j>, so column j of the
/// Cartan matrix is alpha_j written in fundamental weights. Positive roots
/// are indexed 0..N-1 with the simple roots first (root(i) = alpha_i).
class RootDatum {
 public:
  explicit RootDatum(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  /// (alpha_i, alpha_i) / 2, scaled so the short roots get the smallest value.
  const Vec<std::int64_t>& symmetrizer() const { return symmetrizer_; }

  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  const RootCoords& root(int k) const { return roots_[k]; }
  const Weight& root_weight(int k) const { return root_weights_[k]; }
  const CorootCoords& coroot(int k) const { return coroots_[k]; }
  /// <beta^vee, rho> for the k-th positive root.
  std::int64_t coroot_height(int k) const { return coroots_[k].sum(); }

  /// Index of a positive root given in simple-root coordinates, or -1.
  int root_index(const RootCoords& coords) const;
  /// True iff the k-th positive root lies in the span of {alpha_j : j in J}.
  bool in_parabolic(int k, IndexSet J) const;

  /// rho = sum of fundamental weights.
  Weight rho() const { return Weight::Ones(rank()); }
  /// Twice rho_J, in fundamental-weight coordinates.
  Weight two_rho(IndexSet J) const;

  Weight root_to_weight(const RootCoords& coords) const { return cartan_ * coords; }
  /// beta^vee = 2 beta / (beta, beta) for any root beta (positive or not).
  CorootCoords coroot_of(const RootCoords& coords) const;

  Weight fundamental_weight(int i) const { return Weight::Unit(rank(), i); }

  /// The Dynkin involution omega with w0 alpha_i = -alpha_omega(i).
  int omega(int i) const { return omega_[i]; }

 private:
  CartanType type_;
  IntMatrix cartan_;
  Vec<std::int64_t> symmetrizer_;
  std::vector<RootCoords> roots_;
  std::vector<Weight> root_weights_;
  std::vector<CorootCoords> coroots_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> omega_;
};

/// <beta^vee, xi>. Bilinear over any scalar type.
template <typename Scalar>
Scalar pairing(const CorootCoords& coroot, const Vec<Scalar>& weight) {
  Scalar s(0);
  for (Eigen::Index i = 0; i < weight.size(); ++i)
    s += Scalar(coroot[i]) * weight[i];
  return s;
}

/// Simple reflection r_i on a weight: xi - <alpha_i^vee, xi> alpha_i.
template <typename Scalar>
Vec<Scalar> reflect_simple(const RootDatum& datum, int i, const Vec<Scalar>& xi) {
  Vec<Scalar> out = xi;
  const Scalar n = xi[i];
  for (int k = 0; k < datum.rank(); ++k)
    out[k] -= n * Scalar(datum.cartan()(k, i));
  return out;
}

/// Reflection r_beta for the k-th positive root on a weight.
template <typename Scalar>
Vec<Scalar> reflect(const RootDatum& datum, int k, const Vec<Scalar>& xi) {
  const Scalar n = pairing(datum.coroot(k), xi);
  Vec<Scalar> out = xi;
  for (int j = 0; j < datum.rank(); ++j)
    out[j] -= n * Scalar(datum.root_weight(k)[j]);
  return out;
}

/// Simple reflection r_i on root-lattice coordinates.
RootCoords reflect_simple_root(const RootDatum& datum, int i, const RootCoords& c);

bool is_positive(const RootCoords& c);
bool is_dominant(const Weight& w);

/// J_lambda = {i : <alpha_i^vee, lambda> = 0}.
IndexSet stabilizer(const Weight& lambda);

std::string coords_string(const Vec<std::int64_t>& v);

}  // namespace qmac
