#include "youngschur/partition.hpp"

#include <charconv>
#include <numeric>

#include "youngschur/error.hpp"

namespace youngschur {

namespace {

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size())
      throw Error(Errc::parse_error, "bad partition encoding '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return parts;
}

std::string join_parts(std::span<const int> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

std::size_t hash_parts(std::span<const int> parts) noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : parts) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
      throw Error(Errc::invalid_diagram, "not a partition: " + join_parts(parts_));
  }
}

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int len : parts_)
    for (int j = 0; j < len; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.row(i) > row(i)) return false;
  return true;
}

Partition Partition::with_box(Box b) const {
  std::vector<int> parts = parts_;
  if (b.row == length() + 1) parts.push_back(0);
  if (b.row < 1 || b.row > static_cast<int>(parts.size()) || parts[static_cast<std::size_t>(b.row - 1)] + 1 != b.col)
    throw Error(Errc::invalid_diagram, "box is not at the end of a row");
  ++parts[static_cast<std::size_t>(b.row - 1)];
  return Partition(std::move(parts));
}

Partition Partition::without_box(Box b) const {
  if (b.row < 1 || b.row > length() || row(b.row) != b.col)
    throw Error(Errc::invalid_diagram, "box is not the last in its row");
  std::vector<int> parts = parts_;
  --parts[static_cast<std::size_t>(b.row - 1)];
  return Partition(std::move(parts));
}

std::string Partition::to_string() const { return join_parts(parts_); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1]))
      throw Error(Errc::invalid_diagram, "not a strict partition: " + join_parts(parts_));
  }
}

StrictPartition StrictPartition::parse(std::string_view text) { return StrictPartition(parse_parts(text)); }

int StrictPartition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

StrictPartition StrictPartition::with_box(Box b) const {
  std::vector<int> parts = parts_;
  if (b.row == length() + 1) parts.push_back(0);
  if (b.row < 1 || b.row > static_cast<int>(parts.size()) ||
      b.row + parts[static_cast<std::size_t>(b.row - 1)] != b.col)
    throw Error(Errc::invalid_diagram, "box is not at the end of a shifted row");
  ++parts[static_cast<std::size_t>(b.row - 1)];
  return StrictPartition(std::move(parts));
}

StrictPartition StrictPartition::without_box(Box b) const {
  if (b.row < 1 || b.row > length() || b.row + row(b.row) - 1 != b.col)
    throw Error(Errc::invalid_diagram, "box is not the last in its shifted row");
  std::vector<int> parts = parts_;
  --parts[static_cast<std::size_t>(b.row - 1)];
  return StrictPartition(std::move(parts));
}

std::string StrictPartition::to_string() const { return join_parts(parts_); }

std::vector<Box> addable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int i = 1; i <= p.length() + 1; ++i)
    if (i == 1 || p.row(i - 1) > p.row(i)) out.push_back({i, p.row(i) + 1});
  return out;
}

std::vector<Box> removable_boxes(const Partition& p) {
  std::vector<Box> out;
  for (int i = 1; i <= p.length(); ++i)
    if (p.row(i + 1) < p.row(i)) out.push_back({i, p.row(i)});
  return out;
}

std::vector<Box> shifted_addable_boxes(const StrictPartition& s) {
  std::vector<Box> out;
  const int len = s.length();
  for (int i = 1; i <= len; ++i)
    if (i == 1 || s.row(i - 1) > s.row(i) + 1) out.push_back({i, i + s.row(i)});
  if (len == 0 || s.row(len) >= 2) out.push_back({len + 1, len + 1});
  return out;
}

std::vector<Box> shifted_removable_boxes(const StrictPartition& s) {
  std::vector<Box> out;
  const int len = s.length();
  for (int i = 1; i <= len; ++i)
    if (i == len || s.row(i + 1) < s.row(i) - 1) out.push_back({i, i + s.row(i) - 1});
  return out;
}

std::vector<Box> boxes(const Partition& p) {
  std::vector<Box> out;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j) out.push_back({i, j});
  return out;
}

std::vector<Box> boxes(const StrictPartition& s) {
  std::vector<Box> out;
  for (int i = 1; i <= s.length(); ++i)
    for (int j = i; j < i + s.row(i); ++j) out.push_back({i, j});
  return out;
}

FrobeniusCoords to_frobenius(const Partition& p) {
  const Partition conj = p.conjugate();
  FrobeniusCoords f;
  for (int i = 1; p.row(i) >= i && i <= p.length(); ++i) {
    f.arms.push_back(p.row(i) - i);
    f.legs.push_back(conj.row(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
  const std::size_t d = f.arms.size();
  auto strictly_decreasing = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0 || (i + 1 < v.size() && v[i] <= v[i + 1])) return false;
    return true;
  };
  if (f.legs.size() != d || !strictly_decreasing(f.arms) || !strictly_decreasing(f.legs))
    throw Error(Errc::invalid_diagram, "invalid Frobenius coordinates");

  std::vector<int> parts;
  for (std::size_t i = 0; i < d; ++i) parts.push_back(f.arms[i] + static_cast<int>(i) + 1);
  // Rows below the diagonal square: row r has one box in each column j <= d whose length b_j + j reaches r.
  const int last_row = d == 0 ? 0 : f.legs.front() + 1;
  for (int r = static_cast<int>(d) + 1; r <= last_row; ++r) {
    int len = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (f.legs[j] + static_cast<int>(j) + 1 >= r) ++len;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

Partition double_diagram(const StrictPartition& s) {
  FrobeniusCoords f;
  for (int part : s.parts()) {
    f.arms.push_back(part);
    f.legs.push_back(part - 1);
  }
  return from_frobenius(f);
}

std::optional<StrictPartition> undouble(const Partition& p) {
  const FrobeniusCoords f = to_frobenius(p);
  for (std::size_t i = 0; i < f.arms.size(); ++i)
    if (f.legs[i] != f.arms[i] - 1) return std::nullopt;
  return StrictPartition(f.arms);
}

bool is_d_symmetric(const Partition& p) { return undouble(p).has_value(); }

std::vector<int> hook_lengths(const Partition& p) {
  const Partition conj = p.conjugate();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.weight()));
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j) out.push_back((p.row(i) - j) + (conj.row(j) - i) + 1);
  return out;
}

}  // namespace youngschur

std::size_t std::hash<youngschur::Partition>::operator()(const youngschur::Partition& p) const noexcept {
  return youngschur::hash_parts(p.parts());
}

std::size_t std::hash<youngschur::StrictPartition>::operator()(
    const youngschur::StrictPartition& s) const noexcept {
  return youngschur::hash_parts(s.parts());
}
