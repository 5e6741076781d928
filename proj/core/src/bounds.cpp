#include "treeprof/bounds.hpp"

#include "treeprof/constructions.hpp"
#include "treeprof/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace treeprof {

std::string to_string(const BoundValue& value) {
  if (const auto* exact = std::get_if<BigInt>(&value)) return exact->str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value));
  return {buf, ptr};
}

double to_double(const BoundValue& value) {
  if (const auto* exact = std::get_if<BigInt>(&value)) return exact->convert_to<double>();
  return std::get<double>(value);
}

TreeSummary summarize(const Tree& t) {
  TreeSummary s;
  s.n = t.size();
  s.max_degree = t.max_degree();
  for (auto d : t.degrees()) ++s.degree_histogram[d];
  return s;
}

namespace {

BoundReport exact_report(std::string name, BigInt lhs, BigInt rhs, const Tree* t) {
  BoundReport r;
  r.name = std::move(name);
  BigInt slack = rhs - lhs;
  r.holds = slack >= 0;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.slack = std::move(slack);
  if (t) r.tree = summarize(*t);
  return r;
}

bool within_tolerance(double lhs, double rhs) {
  return rhs - lhs >= -kRelativeTolerance * std::max(1.0, std::abs(rhs));
}

BoundReport float_report(std::string name, double lhs, double rhs, const Tree* t) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.holds = within_tolerance(lhs, rhs);
  if (t) r.tree = summarize(*t);
  return r;
}

const double kSqrt3 = std::sqrt(3.0);

}  // namespace

Epsilon Epsilon::for_order(std::size_t k) {
  if (k < 3) throw PreconditionError("epsilon is defined for k >= 3");
  const double m = static_cast<double>(k - 2);
  return {k, (m + std::sqrt(m * m + 4.0 * m)) / 2.0};
}

BoundReport check_main_theorem(const Tree& t) {
  auto c = profile5_fast(t);
  return exact_report("main", c.wyes, 9 * c.stars + c.paths + 6, &t);
}

BoundReport check_bl_theorem(const Tree& t) {
  auto c = profile5_fast(t);
  return exact_report("bl", c.wyes, 36 * c.stars + c.paths + 4, &t);
}

BoundReport check_nonstar_bound(const Tree& t, std::size_t k) {
  if (k < 4) throw PreconditionError("non-star bound needs k >= 4");
  const double eps = Epsilon::for_order(k).value;
  double degree_sum = 0;
  for (auto d : t.degrees())
    if (d >= 2) degree_sum += std::pow(static_cast<double>(d), eps);
  const double rhs = kEuler * factorial(k - 1).convert_to<double>() * degree_sum;
  auto lhs = nonstar_count(t, k);
  auto r = float_report("nonstar", lhs.convert_to<double>(), rhs, &t);
  r.lhs = lhs;
  r.detail = "k=" + std::to_string(k);
  return r;
}

BoundReport check_wye_degree_bound(const Tree& t) {
  double rhs = 0;
  for (auto d : t.degrees()) rhs += std::pow(static_cast<double>(d), 2.0 + kSqrt3);
  rhs *= 2.0;
  auto y = profile5_fast(t).wyes;
  auto r = float_report("wye", y.convert_to<double>(), rhs, &t);
  r.lhs = y;
  return r;
}

BoundReport check_gluing_sandwich(const Tree& s, const Tree& t, std::size_t k) {
  if (k < 3) throw PreconditionError("gluing sandwich needs k >= 3");
  const TypeCatalog catalog(k);
  const Tree glued = glue(s, t, k);
  const auto ps = k_profile(s, catalog);
  const auto pt = k_profile(t, catalog);
  const auto pg = k_profile(glued, catalog);

  BigInt pow_s = 1, pow_t = 1;
  for (std::size_t i = 0; i + 3 < k; ++i) {
    pow_s *= s.max_degree();
    pow_t *= t.max_degree();
  }
  const BigInt margin = factorial(k - 2) * (pow_s + pow_t);

  BoundReport worst;
  bool first = true;
  auto consider = [&](BigInt lhs, BigInt rhs, std::string detail) {
    if (!first && rhs - lhs >= std::get<BigInt>(worst.slack)) return;
    worst = exact_report("glue", std::move(lhs), std::move(rhs), &glued);
    worst.detail = std::move(detail);
    first = false;
  };
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const BigInt base = ps.counts[i] + pt.counts[i];
    consider(base, pg.counts[i], "lower:type=" + std::to_string(i));
    consider(pg.counts[i], base + margin, "upper:type=" + std::to_string(i));
  }
  const BigInt zbase = ps.z + pt.z;
  consider(zbase, pg.z, "lower:z");
  consider(pg.z, zbase + margin, "upper:z");
  return worst;
}

BoundReport check_theorem2(const KProfile& profile) {
  if (profile.k < 5) throw PreconditionError("star/path trade-off is stated for k >= 5");
  const double p1 = profile.path_fraction().convert_to<double>();
  const double p2 = profile.star_fraction().convert_to<double>();
  // lower bound on p2; the report reads bound <= p2
  double bound = 0;
  if (profile.k == 5) {
    bound = 1.0 - p1 - 2.0 * std::pow(4.0, 2.0 + kSqrt3) * std::pow(p1, (2.0 - kSqrt3) / 4.0);
  } else {
    const std::size_t k = profile.k;
    const double eps = Epsilon::for_order(k).value;
    const double km1 = static_cast<double>(k - 1);
    bound = 1.0 - kEuler * factorial(k - 1).convert_to<double>() * std::pow(km1, eps) *
                    std::pow(p1, 1.0 - eps / km1);
  }
  auto r = float_report("thm2", bound, p2, nullptr);
  r.detail = "k=" + std::to_string(profile.k);
  return r;
}

BigInt depth_two_wyes(std::size_t root_degree, std::size_t child_degree) {
  const std::uint64_t d = root_degree, c = child_degree;
  if (d == 0 || c == 0) return 0;
  return BigInt(d) * (binomial(d - 1, 2) * (c - 1) + binomial(c - 1, 2) * (d - 1));
}

}  // namespace treeprof
