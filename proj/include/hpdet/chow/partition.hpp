#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hpdet::chow {

// A partition stored without trailing zeros. Parts are weakly decreasing.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;  // number of boxes
  bool empty() const { return parts_.empty(); }

  // Part i, zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  bool fits_box(int rows, int cols) const;

  // Complement inside the rows x cols box, read from the opposite corner.
  Partition complement(int rows, int cols) const;

  Partition transpose() const;

  std::string to_string() const;  // "()" or "(2,1)"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions inside a rows x cols box, ordered by size, then lexicographically.
std::vector<Partition> box_partitions(int rows, int cols);

}  // namespace hpdet::chow
