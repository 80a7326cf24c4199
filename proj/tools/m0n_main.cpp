#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "m0n/json_io.hpp"
#include "m0n/verify.hpp"

namespace {

using namespace m0n;

// Exit codes: 0 success, 1 internal failure, 2 invalid input, 3 request
// outside the reliable coefficient window, 4 verification mismatch.
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitMismatch = 4;

struct CacheFile {
  std::string path;
  IntersectionCache cache;

  explicit CacheFile(std::string p) : path(std::move(p)) {
    if (!path.empty()) load_cache(cache, path);
  }
  IntersectionCache* handle() { return path.empty() ? nullptr : &cache; }
  void persist() {
    if (!path.empty()) save_cache(cache, path);
  }
};

std::string d_label(const std::vector<int>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

std::string psi_latex_label(const std::vector<int>& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += "\\psi_" + std::to_string(i + 1);
    if (d[i] > 1) out += "^" + std::to_string(d[i]);
  }
  return out.empty() ? "1" : out;
}

// Render a class in the requested basis/format.  `value` lives over the
// theory's coefficient system; the p-basis is only defined over the
// universal one.
void print_class(const PolyZ& value, const std::string& basis, const std::string& format,
                 const Json& meta) {
  std::optional<PolyQ> pvalue;
  if (basis == "p") {
    require_same_system(value.system(), GeneratorSystem::lazard());
    pvalue = to_projective_basis(value);
  }
  if (format == "text") {
    std::cout << (pvalue ? to_text(*pvalue) : to_text(value)) << "\n";
  } else if (format == "latex") {
    std::cout << (pvalue ? to_latex(*pvalue) : to_latex(value)) << "\n";
  } else if (format == "json") {
    Json out = meta;
    out["basis"] = basis;
    out["value"] = pvalue ? to_json(*pvalue) : to_json(value);
    std::cout << out.dump(2) << "\n";
  } else if (format == "tsv") {
    std::vector<std::string> header, row;
    for (const auto& [key, v] : meta.items()) {
      header.push_back(key);
      row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    header.push_back("value");
    row.push_back(pvalue ? to_text(*pvalue) : to_text(value));
    std::cout << to_tsv(header, {row});
  } else {
    fail(ErrorCode::InvalidInput, "unknown format '" + format + "'");
  }
}

int run_intersect(int n, std::vector<int> d, const std::string& theory_name,
                  const std::string& basis, const std::string& format, CacheFile& cache) {
  if (basis == "p" && theory_name != "universal")
    fail(ErrorCode::InvalidInput, "the projective basis only applies to the universal theory");
  const Theory& theory = theory_by_name(theory_name);
  d = canonical_exponents(std::move(d));
  PolyZ value = psi_intersection(n, d, theory, cache.handle());
  print_class(value, basis, format,
              Json{{"n", n}, {"d", d_label(d)}, {"theory", theory_name}});
  cache.persist();
  return 0;
}

int run_class(const std::string& space, int n, int m, std::vector<int> twists,
              const std::string& theory_name, const std::string& basis,
              const std::string& format, CacheFile& cache) {
  if (basis == "p" && theory_name != "universal")
    fail(ErrorCode::InvalidInput, "the projective basis only applies to the universal theory");
  PolyZ value = PolyZ::zero(GeneratorSystem::lazard());
  Json meta;
  if (space == "m0n") {
    if (n < 3) fail(ErrorCode::InvalidInput, "--n is required (>= 3) for the moduli space");
    value = m0n_class(n, theory_by_name(theory_name), cache.handle());
    meta = Json{{"space", space}, {"n", n}, {"theory", theory_name}};
  } else {
    if (space == "proj") {
      value = projective_space_class(m);
      meta = Json{{"space", space}, {"m", m}};
    } else if (space == "milnor") {
      if (n < 1) fail(ErrorCode::InvalidInput, "--n is required (>= 1) for the hypersurface");
      value = milnor_class(m, n);
      meta = Json{{"space", space}, {"m", m}, {"n", n}};
    } else if (space == "blowup-point") {
      value = blowup_point_class(m);
      meta = Json{{"space", space}, {"m", m}};
    } else if (space == "proj-bundle") {
      if (twists.empty()) fail(ErrorCode::InvalidInput, "--twists is required for a bundle");
      value = projective_bundle_over_pm(m, twists);
      meta = Json{{"space", space}, {"m", m}, {"twists", twists}};
    } else {
      fail(ErrorCode::InvalidInput, "unknown space '" + space + "'");
    }
    if (theory_name == "chow")
      value = value.substitute(GeneratorSystem::empty(), chow_generator_images());
    else if (theory_name == "ktheory")
      value = value.substitute(GeneratorSystem::kbeta(), ktheory_generator_images());
    meta["theory"] = theory_name;
  }
  print_class(value, basis, format, meta);
  cache.persist();
  return 0;
}

int run_tables(const std::string& format, CacheFile& cache) {
  const Theory& theory = universal_theory();
  Json json_out = Json::array();
  for (int s = 0; s <= 5; ++s) {
    // Columns: the psi-exponent multisets of size s, fewest factors first.
    std::vector<std::vector<int>> columns;
    {
      auto parts = m0n::detail::partitions_up_to_five(s);
      columns.assign(parts.rbegin(), parts.rend());
    }
    std::vector<int> rows;
    for (int n = s + 3; n <= 8; ++n) rows.push_back(n);

    if (format == "latex") {
      std::cout << "% psi-class numbers with |d| = " << s << "\n";
      std::cout << "\\begin{tabular}{l";
      for (std::size_t i = 0; i < columns.size(); ++i) std::cout << "|l";
      std::cout << "}\n$n$";
      for (const auto& col : columns) std::cout << " & $" << psi_latex_label(col) << "$";
      std::cout << " \\\\\n\\hline\n";
      for (int n : rows) {
        std::cout << n;
        for (const auto& col : columns)
          std::cout << " & $" << to_latex(psi_intersection(n, col, theory, cache.handle()))
                    << "$";
        std::cout << " \\\\\n";
      }
      std::cout << "\\end{tabular}\n\n";
    } else if (format == "text" || format == "tsv") {
      std::vector<std::string> header{"n"};
      for (const auto& col : columns) header.push_back(d_label(col));
      std::vector<std::vector<std::string>> body;
      for (int n : rows) {
        std::vector<std::string> row{std::to_string(n)};
        for (const auto& col : columns)
          row.push_back(to_text(psi_intersection(n, col, theory, cache.handle())));
        body.push_back(std::move(row));
      }
      std::cout << "# |d| = " << s << "\n" << to_tsv(header, body) << "\n";
    } else if (format == "json") {
      for (int n : rows)
        for (const auto& col : columns)
          json_out.push_back(
              Json{{"n", n},
                   {"d", col},
                   {"theory", "universal"},
                   {"value", to_json(psi_intersection(n, col, theory, cache.handle()))}});
    } else {
      fail(ErrorCode::InvalidInput, "unknown format '" + format + "'");
    }
  }
  if (format == "json") std::cout << json_out.dump(2) << "\n";
  cache.persist();
  return 0;
}

int run_series(const std::string& name, int order, const std::string& format) {
  SeriesZ s = named_series(name);
  if (order >= 0) s = s.truncated_to(order);
  if (format == "text") {
    std::cout << to_text(s) << "\n";
  } else if (format == "json") {
    Json out{{"name", name}};
    out["series"] = to_json(s);
    std::cout << out.dump(2) << "\n";
  } else {
    fail(ErrorCode::InvalidInput, "series output supports the text and json formats");
  }
  return 0;
}

int run_verify() {
  bool all_ok = true;
  for (const auto& res : run_verification()) {
    std::cout << (res.passed ? "ok   " : "FAIL ") << res.name << "\n";
    for (const auto& diff : res.diffs) std::cout << "     " << diff << "\n";
    all_ok = all_ok && res.passed;
  }
  std::cout << (all_ok ? "verification passed" : "verification FAILED") << "\n";
  return all_ok ? 0 : kExitMismatch;
}

int run_cache_info(CacheFile& cache, const std::string& format) {
  auto by_theory = cache.cache.count_by_theory();
  if (format == "json") {
    Json out{{"path", cache.path}, {"total", cache.cache.size()}};
    Json per = Json::object();
    for (const auto& [name, count] : by_theory) per[name] = count;
    out["by_theory"] = per;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cache: " << (cache.path.empty() ? "(none)" : cache.path) << "\n";
    for (const auto& [name, count] : by_theory)
      std::cout << name << "\t" << count << "\n";
    std::cout << "total\t" << cache.cache.size() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact psi-class intersection numbers on the genus-0 moduli spaces,\n"
               "valued in the universal coefficient ring u1..u5 and its additive\n"
               "and multiplicative specializations."};
  app.require_subcommand(1);
  std::string cache_path;
  app.add_option("--cache", cache_path, "JSON cache file to load and update")
      ->envname("M0N_CACHE");

  // intersect
  auto* intersect = app.add_subcommand("intersect", "One psi-monomial integral");
  int i_n = 0;
  std::vector<int> i_d;
  std::string i_theory = "universal", i_basis = "u", i_format = "text";
  intersect->add_option("--n", i_n, "number of markings (>= 3)")->required();
  intersect->add_option("--d", i_d, "psi exponents, comma separated; omitted markings carry 0")
      ->delimiter(',');
  intersect->add_option("--theory", i_theory, "coefficient theory")
      ->check(CLI::IsMember({"universal", "chow", "ktheory"}));
  intersect->add_option("--basis", i_basis, "u (generators) or p (projective classes)")
      ->check(CLI::IsMember({"u", "p"}));
  intersect->add_option("--format", i_format, "output format")
      ->check(CLI::IsMember({"text", "json", "tsv", "latex"}));

  // class
  auto* cls = app.add_subcommand("class", "Class of a named variety");
  std::string c_space = "m0n";
  int c_n = 0, c_m = 0;
  std::vector<int> c_twists;
  std::string c_theory = "universal", c_basis = "u", c_format = "text";
  cls->add_option("--space", c_space, "which variety")
      ->check(CLI::IsMember({"m0n", "proj", "milnor", "blowup-point", "proj-bundle"}));
  cls->add_option("--n", c_n, "markings (m0n) or second dimension (milnor)");
  cls->add_option("--m", c_m, "dimension parameter");
  cls->add_option("--twists", c_twists, "bundle twists over P^m, each 0 or 1")->delimiter(',');
  cls->add_option("--theory", c_theory, "coefficient theory")
      ->check(CLI::IsMember({"universal", "chow", "ktheory"}));
  cls->add_option("--basis", c_basis, "u (generators) or p (projective classes)")
      ->check(CLI::IsMember({"u", "p"}));
  cls->add_option("--format", c_format, "output format")
      ->check(CLI::IsMember({"text", "json", "tsv", "latex"}));

  // tables
  auto* tables = app.add_subcommand("tables", "All tabulated numbers, grouped by |d|");
  std::string t_format = "latex";
  tables->add_option("--format", t_format, "output format")
      ->check(CLI::IsMember({"latex", "text", "tsv", "json"}));

  // series
  auto* series = app.add_subcommand("series", "A derived series of the universal law");
  std::string s_name;
  int s_order = -1;
  std::string s_format = "text";
  series->add_option("--name", s_name, "which series")
      ->required()
      ->check(CLI::IsMember(m0n::series_names()));
  series->add_option("--order", s_order, "truncate to this total degree");
  series->add_option("--format", s_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // verify
  app.add_subcommand("verify", "Recompute and compare every reference value");

  // cache-info
  auto* cache_info = app.add_subcommand("cache-info", "Entry counts of a cache file");
  std::string ci_format = "text";
  cache_info->add_option("--format", ci_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  // Let global options (like --cache) appear after the subcommand name.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    CacheFile cache(cache_path);
    if (app.got_subcommand(intersect))
      return run_intersect(i_n, i_d, i_theory, i_basis, i_format, cache);
    if (app.got_subcommand(cls))
      return run_class(c_space, c_n, c_m, c_twists, c_theory, c_basis, c_format, cache);
    if (app.got_subcommand(tables)) return run_tables(t_format, cache);
    if (app.got_subcommand(series)) return run_series(s_name, s_order, s_format);
    if (app.got_subcommand(cache_info)) return run_cache_info(cache, ci_format);
    return run_verify();
  } catch (const m0n::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case m0n::ErrorCode::UnknownCoefficients:
        return kExitUnknown;
      case m0n::ErrorCode::InvalidInput:
        return kExitInvalid;
      default:
        return kExitInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
