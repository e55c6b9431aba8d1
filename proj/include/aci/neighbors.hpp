#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace aci {

/// (distance, index) with index as the tie breaker: earlier examples win.
template <typename Scalar>
struct Neighbor {
  Scalar distance;
  std::size_t index;
  friend bool operator<(const Neighbor& a, const Neighbor& b) {
    return a.distance < b.distance ||
           (a.distance == b.distance && a.index < b.index);
  }
};

/// Euclidean distance with a fixed left-to-right summation order, so the
/// same pair always yields bit-identical results regardless of storage
/// alignment (k-NN scores are compared with >= and ties matter).
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar euclidean_distance(const Eigen::DenseBase<DerivedA>& a,
                                             const Eigen::DenseBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Scalar sum = 0;
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    const Scalar d = a.derived().coeff(j) - b.derived().coeff(j);
    sum += d * d;
  }
  return std::sqrt(sum);
}

/// Euclidean distances from `x` to every row of `rows`.
template <typename DerivedRows, typename DerivedX>
Eigen::Matrix<typename DerivedRows::Scalar, Eigen::Dynamic, 1>
distances_to(const Eigen::MatrixBase<DerivedRows>& rows,
             const Eigen::MatrixBase<DerivedX>& x) {
  using Scalar = typename DerivedRows::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(rows.rows());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    out[i] = euclidean_distance(rows.row(i), x);
  }
  return out;
}

/// Squared Euclidean distances between the rows of `a` and the rows of `b`
/// through the Gram expansion. Negative round-off is clipped to zero.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
pairwise_sq_distances(const Eigen::MatrixBase<DerivedA>& a,
                      const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto an = a.rowwise().squaredNorm();
  const auto bn = b.rowwise().squaredNorm();
  Mat d = Scalar(-2) * (a * b.transpose());
  d.colwise() += an;
  d.rowwise() += bn.transpose();
  return d.cwiseMax(Scalar(0));
}

/// Indices of the k nearest entries of `distances` (all of them if fewer
/// than k exist), ordered by (distance, index).
template <typename Scalar>
std::vector<Neighbor<Scalar>> k_nearest(std::span<const Scalar> distances,
                                        std::size_t k) {
  std::vector<Neighbor<Scalar>> all(distances.size());
  for (std::size_t i = 0; i < distances.size(); ++i) all[i] = {distances[i], i};
  const std::size_t kk = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(kk),
                    all.end());
  all.resize(kk);
  return all;
}

/// Keeps the k smallest values seen so far in ascending order.
template <typename Scalar>
class SmallestK {
 public:
  explicit SmallestK(std::size_t k) : k_(k) { values_.reserve(k + 1); }

  void push(Scalar v) {
    if (values_.size() == k_ && !(v < values_.back())) return;
    auto pos = std::upper_bound(values_.begin(), values_.end(), v);
    values_.insert(pos, v);
    if (values_.size() > k_) values_.pop_back();
  }

  std::span<const Scalar> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Mean of the k smallest after (virtually) adding `extra`.
  Scalar mean_with(Scalar extra) const {
    Scalar sum = 0;
    std::size_t used = 0;
    bool placed = false;
    for (std::size_t i = 0; i < values_.size() && used < k_; ++i) {
      if (!placed && extra < values_[i]) {
        sum += extra;
        placed = true;
        ++used;
        if (used == k_) break;
      }
      sum += values_[i];
      ++used;
    }
    if (!placed && used < k_) {
      sum += extra;
      ++used;
    }
    return sum / static_cast<Scalar>(used);
  }

  Scalar mean() const {
    Scalar sum = 0;
    for (Scalar v : values_) sum += v;
    return values_.empty() ? Scalar(0) : sum / static_cast<Scalar>(values_.size());
  }

 private:
  std::size_t k_;
  std::vector<Scalar> values_;
};

}  // namespace aci
