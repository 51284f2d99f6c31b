#include "kgraph/degree.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "kgraph/error.hpp"

namespace kgraph {

Degree& Degree::operator+=(const Degree& other) {
  if (other.size() != size()) throw std::invalid_argument("degree length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Degree& Degree::operator-=(const Degree& other) {
  if (!leq(other, *this))
    throw std::invalid_argument("degree subtraction " + to_string() + " - " + other.to_string());
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

std::string Degree::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ')';
}

Degree Degree::parse(std::string_view text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  if (text.empty()) throw std::invalid_argument("empty degree");
  std::vector<value_type> entries;
  while (true) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    value_type value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty())
      throw std::invalid_argument("bad degree component '" + std::string(piece) + "'");
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Degree(std::move(entries));
}

bool leq(const Degree& m, const Degree& n) {
  if (m.size() != n.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > n[i]) return false;
  return true;
}

Degree join(const Degree& m, const Degree& n) {
  Degree out = m;
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = std::max(m[i], n[i]);
  return out;
}

Degree meet(const Degree& m, const Degree& n) {
  Degree out = m;
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = std::min(m[i], n[i]);
  return out;
}

std::vector<Degree> degree_box(const Degree& lo, const Degree& hi) {
  std::vector<Degree> out;
  if (!leq(lo, hi)) return out;
  Degree cur = lo;
  const std::size_t k = lo.size();
  while (true) {
    out.push_back(cur);
    // Odometer with the last coordinate fastest gives lexicographic order.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSkeleton: return "InvalidSkeleton";
    case ErrorCode::MissingSquare: return "MissingSquare";
    case ErrorCode::DuplicateSquare: return "DuplicateSquare";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::CubeViolation: return "CubeViolation";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotLocallyConvex: return "NotLocallyConvex";
    case ErrorCode::InfiniteBoundary: return "InfiniteBoundary";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::NotHereditary: return "NotHereditary";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownEdgeId: return "UnknownEdgeId";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::ColourOutOfRange: return "ColourOutOfRange";
  }
  return "Unknown";
}

}  // namespace kgraph
