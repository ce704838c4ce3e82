#pragma once

#include <string>
#include <vector>

namespace apolar {

/// Hilbert function values h_0..h_s of a graded Artinian quotient.
struct HVector {
  std::vector<long> values;

  std::size_t size() const noexcept { return values.size(); }
  long operator[](std::size_t i) const { return values[i]; }
  long total() const;
  /// Socle degree: index of the last entry.
  int socle_degree() const { return static_cast<int>(values.size()) - 1; }
  bool is_symmetric() const;
  std::string to_string() const;  // "(1,4,7,7,4,1)"

  friend bool operator==(const HVector&, const HVector&) = default;
};

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts decreasingly and drops zeros.
  explicit Partition(std::vector<long> parts);

  const std::vector<long>& parts() const noexcept { return parts_; }
  long sum() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<long> parts_;
};

/// Transpose of the Young diagram.
Partition conjugate_partition(const Partition& p);

/// Parses "1,4,7,7,4,1" or "(1,4,7,7,4,1)".
HVector parse_hvector(const std::string& text);

}  // namespace apolar
