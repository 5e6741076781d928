#include "treeprof_cli/cli.hpp"

#include "treeprof/bounds.hpp"
#include "treeprof/canonical.hpp"
#include "treeprof/constructions.hpp"
#include "treeprof/errors.hpp"
#include "treeprof/profile.hpp"
#include "treeprof/region.hpp"
#include "treeprof/search.hpp"
#include "treeprof/tree_io.hpp"
#include "treeprof_cli/corpus.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace treeprof::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit_tree(const Tree& t, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_tree(out, t);
  } else {
    save_tree(path, t);
  }
}

// ---------------------------------------------------------------- profile

int run_profile(const std::string& tree_path, std::size_t k, unsigned jobs, bool homomorphisms,
                std::ostream& out) {
  const Tree t = load_tree(tree_path);
  const TypeCatalog catalog(k);
  KProfile prof = k_profile(t, catalog, {jobs});
  if (homomorphisms) {
    prof.z = 0;
    for (std::size_t i = 0; i < prof.counts.size(); ++i) {
      prof.counts[i] *= automorphism_count(catalog.type(i));
      prof.z += prof.counts[i];
    }
    prof.p.clear();
    if (prof.z > 0)
      for (const auto& c : prof.counts) prof.p.emplace_back(c, prof.z);
  }
  out << "type_index,count,probability_num,probability_den\n";
  for (std::size_t i = 0; i < prof.counts.size(); ++i) {
    out << i << ',' << prof.counts[i] << ',';
    if (prof.defined()) out << numerator(prof.p[i]) << ',' << denominator(prof.p[i]);
    else out << ',';
    out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

std::string histogram_field(const TreeSummary& s) {
  std::string h;
  for (auto [d, c] : s.degree_histogram) {
    if (!h.empty()) h += ';';
    h += std::to_string(d) + ':' + std::to_string(c);
  }
  return h;
}

class CorpusView {
 public:
  explicit CorpusView(const CorpusSpec& spec) : spec_(spec) {
    if (spec.kind != CorpusSpec::Kind::kRandom) trees_ = load_corpus(spec);
  }
  std::size_t size() const { return spec_.kind == CorpusSpec::Kind::kRandom ? spec_.count : trees_.size(); }
  Tree at(std::size_t i) const {
    if (spec_.kind == CorpusSpec::Kind::kRandom) return random_corpus_tree(spec_.max_order, spec_.seed, i);
    return trees_[i];
  }

 private:
  CorpusSpec spec_;
  std::vector<Tree> trees_;
};

using Check = std::function<std::optional<BoundReport>(std::size_t)>;

int run_verify(const std::string& bound, const std::string& corpus_text, std::size_t k, unsigned jobs,
               std::ostream& out) {
  CorpusSpec spec;
  try {
    spec = parse_corpus(corpus_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const CorpusView corpus(spec);

  std::size_t items = corpus.size();
  Check check;
  if (bound == "main") {
    check = [&](std::size_t i) { return std::optional(check_main_theorem(corpus.at(i))); };
  } else if (bound == "bl") {
    check = [&](std::size_t i) { return std::optional(check_bl_theorem(corpus.at(i))); };
  } else if (bound == "nonstar") {
    if (k < 4) throw UsageError("--k must be >= 4 for the non-star bound");
    check = [&](std::size_t i) { return std::optional(check_nonstar_bound(corpus.at(i), k)); };
  } else if (bound == "wye") {
    check = [&](std::size_t i) { return std::optional(check_wye_degree_bound(corpus.at(i))); };
  } else if (bound == "glue") {
    if (k < 3) throw UsageError("--k must be >= 3 for the gluing sandwich");
    items = corpus.size() / 2;
    check = [&](std::size_t i) {
      return std::optional(check_gluing_sandwich(corpus.at(2 * i), corpus.at(2 * i + 1), k));
    };
  } else if (bound == "thm2") {
    if (k < 5) throw UsageError("--k must be >= 5 for thm2");
    const TypeCatalog catalog(k);
    check = [&, catalog](std::size_t i) -> std::optional<BoundReport> {
      const Tree t = corpus.at(i);
      auto prof = k_profile(t, catalog);
      if (!prof.defined()) return std::nullopt;
      auto r = check_theorem2(prof);
      r.tree = summarize(t);
      return r;
    };
  } else {
    throw UsageError("unknown bound '" + bound + "'");
  }

  out << "index,bound,lhs,rhs,slack,holds,n,max_degree,degree_histogram,detail\n";
  bool all_hold = true;
  constexpr std::size_t kChunk = 256;
  jobs = std::max(1u, jobs);
  std::vector<std::optional<BoundReport>> results;
  for (std::size_t begin = 0; begin < items; begin += kChunk) {
    const std::size_t end = std::min(items, begin + kChunk);
    results.assign(end - begin, std::nullopt);
    auto work = [&](unsigned slot) {
      for (std::size_t i = begin + slot; i < end; i += jobs) results[i - begin] = check(i);
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned s = 0; s < jobs; ++s) pool.emplace_back(work, s);
    }
    for (std::size_t i = begin; i < end; ++i) {
      const auto& r = results[i - begin];
      if (!r) continue;
      all_hold = all_hold && r->holds;
      out << i << ',' << r->name << ',' << to_string(r->lhs) << ',' << to_string(r->rhs) << ','
          << to_string(r->slack) << ',' << (r->holds ? "true" : "false") << ',' << r->tree.n << ','
          << r->tree.max_degree << ',' << histogram_field(r->tree) << ',' << r->detail << '\n';
    }
    out.flush();
  }
  return all_hold ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- region

int run_region(const std::string& families, std::size_t dmax, const std::string& csv, const std::string& svg,
               bool accumulation, std::ostream& out) {
  std::vector<Family> list;
  if (families == "default") list = default_families(dmax);
  else if (families == "simple") list = simple_families();
  else throw UsageError("--families must be 'default' or 'simple'");
  if (dmax < 6) throw UsageError("--dmax must be at least 6");

  const Region region = build_region(list, accumulation);
  emit_region_plot(region, csv, svg);

  auto label_at = [&](const Point2& p) -> const RegionPoint& {
    for (const auto& pt : region.points)
      if (pt.p[0] == p.x && pt.p[1] == p.y) return pt;
    throw InternalError("hull vertex without a source point");
  };
  out << "from,to,star_coef,path_coef\n";
  const auto& hull = region.full_hull;
  for (std::size_t i = 0; i < hull.size() && hull.size() > 1; ++i) {
    const auto& a = label_at(hull[i]);
    const auto& b = label_at(hull[(i + 1) % hull.size()]);
    LimitProfile la, lb;
    la.p = a.p;
    lb.p = b.p;
    out << '"' << a.label << "\",\"" << b.label << "\",";
    try {
      auto line = facet_from_profiles(la, lb);
      out << line.star_coef << ',' << line.path_coef << '\n';
    } catch (const PreconditionError&) {
      out << "degenerate,degenerate\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- search

int run_search(std::uint64_t target, std::uint64_t budget, std::uint64_t seed, const std::string& moves,
               const std::string& out_path, std::ostream& out) {
  SearchOptions opt;
  opt.target = target;
  opt.budget = budget;
  opt.seed = seed;
  if (moves == "caterpillar") opt.moves = MoveSet::kCaterpillar;
  else if (moves == "general") opt.moves = MoveSet::kGeneral;
  else throw UsageError("--moves must be 'caterpillar' or 'general'");

  auto result = search_equality_trees(opt);
  const auto& c = result.counts;
  BigInt gap = c.wyes - 9 * c.stars - c.paths;
  out << "n,paths,stars,wyes,gap,converged,moves\n"
      << result.tree.size() << ',' << c.paths << ',' << c.stars << ',' << c.wyes << ',' << gap << ','
      << (result.converged ? "true" : "false") << ',' << result.moves_used << '\n';
  if (!out_path.empty()) save_tree(out_path, result.tree);
  return result.converged ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local subtree profiles of trees: census, constructions, bound sweeps, 5-profile region"};
  app.require_subcommand(1);

  std::size_t k = 5;
  unsigned jobs = 1;
  std::string tree_path, out_path;

  auto* profile = app.add_subcommand("profile", "k-profile of a tree as CSV");
  bool homomorphisms = false;
  profile->add_option("--k", k, "subtree order")->required()->check(CLI::Range(1, 18));
  profile->add_option("--tree", tree_path, "tree file")->required();
  profile->add_option("--jobs", jobs, "census threads")->check(CLI::Range(1, 256));
  profile->add_flag("--homomorphisms", homomorphisms, "count injective homomorphisms instead of copies");

  auto* milli = app.add_subcommand("millipede", "write a D-millipede");
  std::string pendants;
  std::size_t length = 1, extra = 2;
  milli->add_option("--d", pendants, "pendant pattern, e.g. 0,0,3,4,4,3")->required();
  milli->add_option("--n", length, "spine length")->required()->check(CLI::PositiveNumber);
  milli->add_option("--extra", extra, "pendants added to every d_i (default 2)");
  milli->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* gluecmd = app.add_subcommand("glue", "join two trees by a path so the leaves are at distance k");
  std::string s_path, t_path;
  std::optional<Vertex> leaf_s, leaf_t;
  gluecmd->add_option("--s", s_path, "first tree file")->required();
  gluecmd->add_option("--t", t_path, "second tree file")->required();
  gluecmd->add_option("--k", k, "distance between the glued leaves")->required()->check(CLI::Range(2, 1 << 20));
  gluecmd->add_option("--leaf-s", leaf_s, "leaf of the first tree (default: lowest index)");
  gluecmd->add_option("--leaf-t", leaf_t, "leaf of the second tree (default: lowest index)");
  gluecmd->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* cutcmd = app.add_subcommand("cut", "(i,j)-cut around an edge");
  Vertex cu = 0, cv = 0;
  std::size_t ci = 0, cj = 0;
  std::string out_first, out_second;
  cutcmd->add_option("--tree", tree_path, "tree file")->required();
  cutcmd->add_option("--u", cu, "endpoint kept in the first part")->required();
  cutcmd->add_option("--v", cv, "endpoint kept in the second part")->required();
  cutcmd->add_option("--i", ci, "path length added at u")->required();
  cutcmd->add_option("--j", cj, "path length added at v")->required();
  cutcmd->add_option("--out-first", out_first, "file for the part containing u (stdout if omitted)");
  cutcmd->add_option("--out-second", out_second, "file for the part containing v (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "sweep a bound over a corpus, CSV of reports");
  std::string bound, corpus;
  verify->add_option("--bound", bound, "main|bl|nonstar|wye|glue|thm2")
      ->required()
      ->check(CLI::IsMember({"main", "bl", "nonstar", "wye", "glue", "thm2"}));
  verify->add_option("--corpus", corpus, "exhaustive:N | random:COUNT:N:SEED | file:PATH | millipede:D:N[:EXTRA]")
      ->required();
  verify->add_option("--k", k, "subtree order for nonstar, glue and thm2 (default 5)");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* search = app.add_subcommand("search", "search for a tree with Y = 9S + P");
  std::uint64_t target = 0, budget = 1'000'000, seed = 0;
  std::string moves = "caterpillar";
  search->add_option("--target", target, "minimum for each of P, S, Y")->required();
  search->add_option("--budget", budget, "move budget");
  search->add_option("--seed", seed, "random seed")->required();
  search->add_option("--moves", moves, "caterpillar|general");
  search->add_option("--out", out_path, "write the best tree here");

  auto* region = app.add_subcommand("region", "limit 5-profiles of millipede families, hulls, CSV/SVG");
  std::string families = "default", csv, svg;
  std::size_t dmax = 12;
  bool no_accumulation = false;
  region->add_option("--families", families, "default|simple");
  region->add_option("--csv", csv, "CSV output path");
  region->add_option("--svg", svg, "SVG output path");
  region->add_option("--dmax", dmax, "largest d of the (0,0,d,d) family");
  region->add_flag("--no-accumulation", no_accumulation, "omit the d -> infinity point");

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*profile) return run_profile(tree_path, k, jobs, homomorphisms, out);
    if (*milli) {
      MillipedeSpec spec{parse_pendants(pendants), length, extra};
      emit_tree(millipede(spec), out_path, out);
      return kExitOk;
    }
    if (*gluecmd) {
      const Tree s = load_tree(s_path), t = load_tree(t_path);
      emit_tree(glue(s, t, k, leaf_s.value_or(lowest_leaf(s)), leaf_t.value_or(lowest_leaf(t))), out_path, out);
      return kExitOk;
    }
    if (*cutcmd) {
      auto parts = cut(load_tree(tree_path), cu, cv, ci, cj);
      emit_tree(parts.first.tree, out_first, out);
      emit_tree(parts.second.tree, out_second, out);
      return kExitOk;
    }
    if (*verify) return run_verify(bound, corpus, k, jobs, out);
    if (*search) return run_search(target, budget, seed, moves, out_path, out);
    if (*region) return run_region(families, dmax, csv, svg, !no_accumulation, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Bad input files, invalid vertices, unwritable paths.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace treeprof::cli
