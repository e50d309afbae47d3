#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tbt/tree_model.hpp"

namespace tbt {

// Maximum host degree; the bounds need at least 3.
class Degree {
 public:
  explicit Degree(std::int64_t delta);
  std::int64_t value() const noexcept { return delta_; }

 private:
  std::int64_t delta_;
};

inline const Degree kBinaryDegree{3};

// Exact fraction with a positive denominator, always reduced.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  std::int64_t floor() const;
  double to_double() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator+(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);

// Height of the shallowest BFS tree that can hold c children in a host of
// maximum degree delta: 1 + floor(log_{delta-1} ceil(c / delta)), 0 for c = 0.
std::int64_t best_case_height(std::int64_t c, const Degree& delta);

// c*h + delta*h/(delta-2) - delta*((delta-1)^h - 1)/(delta-2)^2, 0 for c = 0.
Rational lb_exact(std::int64_t c, const Degree& delta);

// c * (log c / log(delta-1) - 4). Needs c >= delta*(delta-1), otherwise
// throws std::domain_error.
double lb_simple(std::int64_t c, const Degree& delta);

// max(n-1, floor(sum over vertices of lb_exact(c_v))).
std::int64_t lb_instance(const DemandTree& demand,
                         const Degree& delta = kBinaryDegree);

// ceil(log2 x) for x >= 1.
std::int64_t ceil_log2(std::int64_t x);
// floor(log2 x) for x >= 1.
std::int64_t floor_log2(std::int64_t x);

// c * (ceil(log2 c) + 1): the per-vertex cost cap of a full bracket.
std::int64_t bracket_upper_bound(std::int64_t c);

struct BoundRow {
  std::int64_t c = 0;
  std::int64_t lb = 0;
  std::int64_t ub = 0;
  // floor(100 * ub / lb): the ratio truncated to two decimals, scaled.
  std::int64_t ratio_hundredths = 0;
  bool ratio_exact = false;  // ub/lb has at most two decimals

  // "1", "2.4", "2.85", "2.00": trailing zeros are dropped only when the
  // ratio is exact.
  std::string ratio_text() const;
};

BoundRow bound_row(std::int64_t c);
// Rows for c = 1..127 at delta = 3.
std::vector<BoundRow> bound_table();

// Tab-separated "c\tLB\tUB\tRatio" with a header line.
std::string format_bound_table_tsv(const std::vector<BoundRow>& rows);
// Three column groups side by side, 43 rows high.
std::string format_bound_table_text(const std::vector<BoundRow>& rows);

}  // namespace tbt
