#pragma once

#include "aci/types.hpp"

#include <cstddef>
#include <vector>

namespace aci {

/// Growing, ordered collection of examples with contiguous row-major
/// feature storage. Labels are kept as doubles; class ids are stored as
/// exact integers.
class History {
 public:
  explicit History(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  void reserve(std::size_t n);
  void add(const VectorRef& x, double label);
  void add(const Example& z) { add(z.object, label_value(z.label)); }

  auto row(std::size_t i) const { return rows_.row(static_cast<Eigen::Index>(i)); }
  double label(std::size_t i) const { return labels_[i]; }
  int class_id(std::size_t i) const { return static_cast<int>(labels_[i]); }
  const std::vector<double>& labels() const noexcept { return labels_; }

  /// View of the filled rows (size() x dim()).
  auto features() const {
    return rows_.topRows(static_cast<Eigen::Index>(size()));
  }

  void check_dim(const VectorRef& x) const;

 private:
  Eigen::Index dim_;
  RowMatrix rows_{0, dim_};
  std::vector<double> labels_;
};

}  // namespace aci
