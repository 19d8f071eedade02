#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace youngschur {

/// A cell of a diagram, 1-based row and column. Shifted diagrams use absolute
/// columns: row i of a shifted diagram occupies columns i .. i+lambda_i-1.
struct Box {
  int row = 1;
  int col = 1;

  auto operator<=>(const Box&) const = default;
};

constexpr int content(Box b) noexcept { return b.col - b.row; }

/// Ordinary partition: weakly decreasing positive parts, no trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Validates weak decrease; trailing zeros are dropped. Throws Error(invalid_diagram).
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses the comma-separated encoding ("4,4,1"; "" is the empty partition).
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based row length; 0 past the last row.
  int row(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  Partition conjugate() const;
  bool contains(const Partition& other) const noexcept;
  bool contains(Box b) const noexcept { return b.row >= 1 && b.col >= 1 && b.col <= row(b.row); }

  Partition with_box(Box b) const;
  Partition without_box(Box b) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Strict partition / shifted diagram: strictly decreasing positive parts.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}

  static StrictPartition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  int row(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  bool contains(Box b) const noexcept {
    return b.row >= 1 && b.row <= length() && b.col >= b.row && b.col < b.row + row(b.row);
  }

  StrictPartition with_box(Box b) const;
  StrictPartition without_box(Box b) const;

  std::string to_string() const;

  auto operator<=>(const StrictPartition&) const = default;

 private:
  std::vector<int> parts_;
};

struct FrobeniusCoords {
  std::vector<int> arms;
  std::vector<int> legs;

  bool operator==(const FrobeniusCoords&) const = default;
};

std::vector<Box> addable_boxes(const Partition& p);
std::vector<Box> removable_boxes(const Partition& p);
std::vector<Box> shifted_addable_boxes(const StrictPartition& s);
std::vector<Box> shifted_removable_boxes(const StrictPartition& s);

/// Every box of the diagram in row-major order.
std::vector<Box> boxes(const Partition& p);
std::vector<Box> boxes(const StrictPartition& s);

FrobeniusCoords to_frobenius(const Partition& p);
/// Throws Error(invalid_diagram) unless both lists are strictly decreasing, nonnegative and of equal length.
Partition from_frobenius(const FrobeniusCoords& f);

/// Ordinary diagram with Frobenius coordinates (lambda_1..lambda_l | lambda_1-1..lambda_l-1).
Partition double_diagram(const StrictPartition& s);
/// Inverse of double_diagram; nullopt when p is not in its image.
std::optional<StrictPartition> undouble(const Partition& p);
bool is_d_symmetric(const Partition& p);

/// Hook length of every box, row-major order.
std::vector<int> hook_lengths(const Partition& p);

}  // namespace youngschur

template <>
struct std::hash<youngschur::Partition> {
  std::size_t operator()(const youngschur::Partition& p) const noexcept;
};

template <>
struct std::hash<youngschur::StrictPartition> {
  std::size_t operator()(const youngschur::StrictPartition& s) const noexcept;
};
