#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace kgraph {

/// Element of N^k: the value of the degree functor on a path.
///
/// Relational operators give the lexicographic order used for canonical
/// sorting. The componentwise partial order is `leq`.
class Degree {
 public:
  using value_type = std::uint32_t;

  Degree() = default;
  explicit Degree(std::size_t k) : entries_(k, 0) {}
  Degree(std::initializer_list<value_type> entries) : entries_(entries) {}
  explicit Degree(std::vector<value_type> entries) : entries_(std::move(entries)) {}

  static Degree zero(std::size_t k) { return Degree(k); }

  /// The basis vector e_colour, with colours numbered from 1.
  static Degree unit(std::size_t k, std::size_t colour) {
    Degree d(k);
    d.entries_.at(colour - 1) = 1;
    return d;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<value_type>& entries() const noexcept { return entries_; }

  /// Value in direction `colour` (1-based).
  value_type at_colour(std::size_t colour) const { return entries_.at(colour - 1); }

  std::uint64_t total() const noexcept {
    std::uint64_t t = 0;
    for (auto e : entries_) t += e;
    return t;
  }

  bool is_zero() const noexcept {
    for (auto e : entries_)
      if (e != 0) return false;
    return true;
  }

  Degree& operator+=(const Degree& other);
  /// Requires other <= *this componentwise; throws std::invalid_argument otherwise.
  Degree& operator-=(const Degree& other);

  friend Degree operator+(Degree a, const Degree& b) { return a += b; }
  friend Degree operator-(Degree a, const Degree& b) { return a -= b; }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree& a, const Degree& b) { return a.entries_ <=> b.entries_; }

  /// "(3,2)"
  std::string to_string() const;
  /// Parses comma-joined naturals such as "3,2". Throws std::invalid_argument.
  static Degree parse(std::string_view text);

 private:
  std::vector<value_type> entries_;
};

/// Componentwise m <= n.
bool leq(const Degree& m, const Degree& n);
Degree join(const Degree& m, const Degree& n);
Degree meet(const Degree& m, const Degree& n);

/// All n with lo <= n <= hi, in lexicographic order.
std::vector<Degree> degree_box(const Degree& lo, const Degree& hi);

}  // namespace kgraph
