#include "tbt/lower_bounds.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace tbt {

Degree::Degree(std::int64_t delta) : delta_(delta) {
  if (delta < 3) {
    throw std::invalid_argument("maximum degree must be at least 3, got " +
                                std::to_string(delta));
  }
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::int64_t Rational::floor() const {
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Rational operator+(const Rational& a, const Rational& b) {
  std::int64_t g = std::gcd(a.den, b.den);
  return Rational::make(a.num * (b.den / g) + b.num * (a.den / g),
                        a.den / g * b.den);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<long double>(a.num) * b.den <
         static_cast<long double>(b.num) * a.den;
}

std::int64_t ceil_log2(std::int64_t x) {
  if (x < 1) throw std::domain_error("ceil_log2 of non-positive value");
  std::int64_t k = 0;
  while ((std::int64_t{1} << k) < x) ++k;
  return k;
}

std::int64_t floor_log2(std::int64_t x) {
  if (x < 1) throw std::domain_error("floor_log2 of non-positive value");
  std::int64_t k = 0;
  while ((x >> (k + 1)) != 0) ++k;
  return k;
}

std::int64_t best_case_height(std::int64_t c, const Degree& delta) {
  if (c < 0) throw std::domain_error("negative child count");
  if (c == 0) return 0;
  const std::int64_t d = delta.value();
  const std::int64_t groups = (c + d - 1) / d;
  std::int64_t k = 0;
  for (std::int64_t p = d - 1; p <= groups; p *= d - 1) ++k;
  return 1 + k;
}

namespace {

// lb_exact scaled by (delta-2)^2, so that sums stay exact integers.
std::int64_t lb_scaled(std::int64_t c, const Degree& delta) {
  if (c == 0) return 0;
  const std::int64_t d = delta.value();
  const std::int64_t h = best_case_height(c, delta);
  const std::int64_t s = d - 2;
  std::int64_t power = 1;
  for (std::int64_t i = 0; i < h; ++i) power *= d - 1;
  return c * h * s * s + d * h * s - d * (power - 1);
}

}  // namespace

Rational lb_exact(std::int64_t c, const Degree& delta) {
  const std::int64_t s = delta.value() - 2;
  return Rational::make(lb_scaled(c, delta), s * s);
}

double lb_simple(std::int64_t c, const Degree& delta) {
  const std::int64_t d = delta.value();
  if (c < d * (d - 1)) {
    throw std::domain_error("lb_simple needs c >= delta*(delta-1)");
  }
  const double base = std::log2(static_cast<double>(d - 1));
  return static_cast<double>(c) *
         (std::log2(static_cast<double>(c)) / base - 4.0);
}

std::int64_t lb_instance(const DemandTree& demand, const Degree& delta) {
  const auto n = static_cast<std::int64_t>(demand.size());
  if (n <= 1) return 0;
  const std::int64_t s = delta.value() - 2;
  std::int64_t scaled = 0;
  for (NodeId v = 0; v < n; ++v) {
    scaled += lb_scaled(static_cast<std::int64_t>(demand.child_count(v)), delta);
  }
  const std::int64_t summed = Rational{scaled, s * s}.floor();
  return std::max(n - 1, summed);
}

std::int64_t bracket_upper_bound(std::int64_t c) {
  if (c == 0) return 0;
  return c * (ceil_log2(c) + 1);
}

std::string BoundRow::ratio_text() const {
  const std::int64_t whole = ratio_hundredths / 100;
  const std::int64_t frac = ratio_hundredths % 100;
  char buf[32];
  if (ratio_exact && frac == 0) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(whole));
  } else if (ratio_exact && frac % 10 == 0) {
    std::snprintf(buf, sizeof buf, "%lld.%lld", static_cast<long long>(whole),
                  static_cast<long long>(frac / 10));
  } else {
    std::snprintf(buf, sizeof buf, "%lld.%02lld", static_cast<long long>(whole),
                  static_cast<long long>(frac));
  }
  return buf;
}

BoundRow bound_row(std::int64_t c) {
  if (c < 1) throw std::domain_error("bound rows start at c = 1");
  BoundRow row;
  row.c = c;
  row.lb = lb_exact(c, kBinaryDegree).floor();
  row.ub = bracket_upper_bound(c);
  row.ratio_hundredths = row.ub * 100 / row.lb;
  row.ratio_exact = (row.ub * 100) % row.lb == 0;
  return row;
}

std::vector<BoundRow> bound_table() {
  std::vector<BoundRow> rows;
  rows.reserve(127);
  for (std::int64_t c = 1; c <= 127; ++c) rows.push_back(bound_row(c));
  return rows;
}

std::string format_bound_table_tsv(const std::vector<BoundRow>& rows) {
  std::string out = "c\tLB\tUB\tRatio\n";
  for (const auto& r : rows) {
    out += std::to_string(r.c) + '\t' + std::to_string(r.lb) + '\t' +
           std::to_string(r.ub) + '\t' + r.ratio_text() + '\n';
  }
  return out;
}

std::string format_bound_table_text(const std::vector<BoundRow>& rows) {
  const std::size_t groups = 3;
  const std::size_t height = (rows.size() + groups - 1) / groups;
  std::string out;
  char buf[64];
  for (std::size_t g = 0; g < groups; ++g) {
    std::snprintf(buf, sizeof buf, "%s%5s %5s %5s %-5s", g ? "    " : "", "c",
                  "LB", "UB", "Ratio");
    out += buf;
  }
  out += '\n';
  for (std::size_t i = 0; i < height; ++i) {
    std::string line;
    for (std::size_t g = 0; g < groups; ++g) {
      std::size_t k = g * height + i;
      if (k >= rows.size()) break;
      const auto& r = rows[k];
      std::snprintf(buf, sizeof buf, "%s%5lld %5lld %5lld %-5s", g ? "    " : "",
                    static_cast<long long>(r.c), static_cast<long long>(r.lb),
                    static_cast<long long>(r.ub), r.ratio_text().c_str());
      line += buf;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace tbt
