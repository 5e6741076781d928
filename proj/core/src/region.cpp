#include "treeprof/region.hpp"

#include "treeprof/errors.hpp"
#include "treeprof/profile.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace treeprof {
namespace {

std::array<BigInt, 3> counts_at(std::span<const std::size_t> pendants, std::size_t extra, std::size_t n) {
  MillipedeSpec spec{{pendants.begin(), pendants.end()}, n, extra};
  auto c = profile5_fast(millipede(spec));
  return {c.paths, c.stars, c.wyes};
}

std::array<BigInt, 3> difference(const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b) {
  return {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
}

std::array<Rational, 3> normalize(const std::array<BigInt, 3>& c) {
  const BigInt z = c[0] + c[1] + c[2];
  if (z <= 0) throw InternalError("per-period increments sum to zero");
  return {Rational(c[0], z), Rational(c[1], z), Rational(c[2], z)};
}

std::string label_of(const std::vector<std::size_t>& pendants) {
  std::string s = "(";
  for (std::size_t i = 0; i < pendants.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pendants[i]);
  }
  return s + ")";
}

}  // namespace

LimitProfile limit_profile(std::span<const std::size_t> pendants, std::size_t extra_pendants) {
  if (pendants.empty()) throw PreconditionError("millipede pattern must be non-empty");
  const std::size_t period = pendants.size();
  // A 5-vertex subtree spans at most 4 spine edges, so boundary effects are
  // confined to a few periods at each end.
  for (std::size_t n0 = 2 * period + 8; n0 <= 64 * period + 64; n0 *= 2) {
    auto c0 = counts_at(pendants, extra_pendants, n0);
    auto c1 = counts_at(pendants, extra_pendants, n0 + period);
    auto c2 = counts_at(pendants, extra_pendants, n0 + 2 * period);
    auto inc = difference(c0, c1);
    if (inc != difference(c1, c2)) continue;
    LimitProfile out;
    out.pendants.assign(pendants.begin(), pendants.end());
    out.extra_pendants = extra_pendants;
    out.per_period = inc;
    out.p = normalize(inc);
    return out;
  }
  throw InternalError("per-period increments did not stabilize for " +
                      label_of({pendants.begin(), pendants.end()}));
}

FacetLine facet_from_profiles(const LimitProfile& a, const LimitProfile& b) {
  // Solve y = aS s + aP p on (p, s, y) = (p[0], p[1], p[2]) for both points.
  const Rational det = a.p[1] * b.p[0] - b.p[1] * a.p[0];
  if (det == 0) throw PreconditionError("profiles do not determine a facet line");
  return {(a.p[2] * b.p[0] - b.p[2] * a.p[0]) / det, (a.p[1] * b.p[2] - b.p[1] * a.p[2]) / det};
}

Rational facet_residual(const FacetLine& line, const std::array<Rational, 3>& p) {
  return p[2] - line.star_coef * p[1] - line.path_coef * p[0];
}

FacetConstantEstimate estimate_facet_constant(const FacetLine& line, std::span<const Tree> corpus) {
  if (corpus.empty()) throw PreconditionError("facet constant needs a non-empty corpus");
  FacetConstantEstimate best;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto c = profile5_fast(corpus[i]);
    Rational excess = Rational(c.wyes) - line.star_coef * Rational(c.stars) - line.path_coef * Rational(c.paths);
    if (i == 0 || excess > best.max_excess) {
      best.max_excess = excess;
      best.witness = i;
    }
  }
  best.approx = best.max_excess.convert_to<double>();
  return best;
}

std::vector<Family> simple_families() {
  std::vector<Family> out;
  for (std::size_t d = 0; d <= 3; ++d) out.push_back({label_of({d}), {d}});
  return out;
}

std::vector<Family> default_families(std::size_t d_max) {
  auto out = simple_families();
  auto add = [&](std::vector<std::size_t> p) { out.push_back({label_of(p), std::move(p)}); };
  add({0, 0, 3, 4, 4, 3});
  for (std::size_t d = 3; d <= 5; ++d) add({0, 0, d, d + 2, d + 2, d});
  for (std::size_t d = 4; d <= 6; ++d) add({0, 0, d, d + 1, d});
  for (std::size_t d = 6; d <= d_max; ++d) add({0, 0, d, d});
  return out;
}

std::array<Rational, 3> wide_pair_accumulation_point() {
  // Per-period counts of (0,0,d,d) are polynomials in d of degree <= 4;
  // seven samples give the degree and leading coefficient of each.
  constexpr std::size_t kSamples = 7;
  constexpr std::size_t kFirst = 6;
  std::array<std::array<BigInt, kSamples>, 3> series;
  for (std::size_t s = 0; s < kSamples; ++s) {
    const std::size_t d = kFirst + s;
    const std::vector<std::size_t> pattern{0, 0, d, d};
    auto lp = limit_profile(pattern, 0);
    for (std::size_t c = 0; c < 3; ++c) series[c][s] = lp.per_period[c];
  }

  std::array<std::size_t, 3> degree{};
  std::array<BigInt, 3> lead;
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<BigInt> diff(series[c].begin(), series[c].end());
    std::size_t order = 0;
    BigInt last = diff[0];
    while (diff.size() > 1) {
      bool all_zero = true;
      std::vector<BigInt> next(diff.size() - 1);
      for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
        next[i] = diff[i + 1] - diff[i];
        if (next[i] != 0) all_zero = false;
      }
      if (all_zero) break;
      diff = std::move(next);
      ++order;
      last = diff[0];
    }
    if (diff.size() < 2) throw InternalError("too few samples to fit the accumulation point");
    degree[c] = order;
    lead[c] = last;  // order! times the leading coefficient
  }
  const std::size_t top = std::max({degree[0], degree[1], degree[2]});
  std::array<BigInt, 3> dominant;
  for (std::size_t c = 0; c < 3; ++c) dominant[c] = degree[c] == top ? lead[c] : BigInt(0);
  return normalize(dominant);
}

Region build_region(const std::vector<Family>& families, bool with_accumulation) {
  Region region;
  std::vector<Point2> simple, full;
  for (const auto& f : families) {
    auto lp = limit_profile(f.pendants, 0);
    region.points.push_back({f.label, lp.p, false});
    full.push_back(lp.projection());
    if (f.pendants.size() == 1) simple.push_back(lp.projection());
  }
  if (with_accumulation) {
    auto p = wide_pair_accumulation_point();
    region.points.push_back({"(0,0,d,d) d->inf", p, true});
    full.push_back({p[0], p[1]});
  }
  region.simple_hull = hull2d(std::move(simple));
  region.full_hull = hull2d(std::move(full));
  return region;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string region_csv(const Region& region) {
  std::ostringstream out;
  out << "family,p1_num,p1_den,p2_num,p2_den,p3_num,p3_den\n";
  for (const auto& pt : region.points) {
    out << csv_field(pt.label);
    for (const auto& q : pt.p) out << ',' << numerator(q) << ',' << denominator(q);
    out << '\n';
  }
  return out.str();
}

std::string region_svg(const Region& region) {
  constexpr double kSize = 500, kMargin = 40;
  auto sx = [&](const Rational& x) { return fixed4(kMargin + x.convert_to<double>() * kSize); };
  auto sy = [&](const Rational& y) { return fixed4(kMargin + (1.0 - y.convert_to<double>()) * kSize); };
  auto polygon = [&](const std::vector<Point2>& hull, const char* color) {
    std::string pts;
    for (const auto& p : hull) {
      if (!pts.empty()) pts += ' ';
      pts += sx(p.x) + "," + sy(p.y);
    }
    return "<polygon points=\"" + pts + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
  };

  std::ostringstream out;
  const int total = static_cast<int>(kSize + 2 * kMargin);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total
      << "\" viewBox=\"0 0 " << total << ' ' << total << "\">\n";
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kMargin + kSize / 2 << "\" y=\"" << total - 10
      << "\" text-anchor=\"middle\" font-size=\"14\">path fraction p1</text>\n";
  out << "<text x=\"14\" y=\"" << kMargin + kSize / 2 << "\" text-anchor=\"middle\" font-size=\"14\""
      << " transform=\"rotate(-90 14 " << kMargin + kSize / 2 << ")\">star fraction p2</text>\n";
  out << polygon(region.simple_hull, "blue");
  out << polygon(region.full_hull, "red");
  for (const auto& pt : region.points) {
    const std::string x = sx(pt.p[0]), y = sy(pt.p[1]);
    const char* color = pt.accumulation ? "gray" : "black";
    out << "<g stroke=\"" << color << "\"><title>" << pt.label << "</title>"
        << "<path d=\"M" << x << ' ' << y << " m-4 0 h8 m-4 -4 v8\"/></g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void emit_region_plot(const Region& region, const std::string& csv_path, const std::string& svg_path) {
  auto write = [](const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << body;
    if (!f) throw std::runtime_error("write failed for " + path);
  };
  if (!csv_path.empty()) write(csv_path, region_csv(region));
  if (!svg_path.empty()) write(svg_path, region_svg(region));
}

}  // namespace treeprof
