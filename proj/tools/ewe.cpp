#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ewe/bwx.hpp"
#include "ewe/classification.hpp"
#include "ewe/count_cache.hpp"
#include "ewe/errors.hpp"
#include "ewe/render.hpp"
#include "ewe/verification.hpp"

namespace {

enum ExitCode { ok = 0, usage = 1, refuted = 2, budget = 3 };

struct Globals {
  std::string format = "table";
  int jobs = 0;
  bool no_cache = false;
  bool verify_cache = false;
  std::optional<int> limit;
};

constexpr std::size_t verify_cache_sample = 64;

ewe::EnumerationOptions enumeration_options(const Globals& g) {
  ewe::EnumerationOptions e;
  e.jobs = g.jobs;
  if (g.limit) {
    e.max_n = *g.limit;
    e.max_shape_rows = *g.limit;
  }
  return e;
}

std::optional<ewe::CountCache> open_cache(const Globals& g) {
  if (g.no_cache) return std::nullopt;
  try {
    return ewe::CountCache(ewe::CountCache::default_directory());
  } catch (const std::exception& e) {
    std::cerr << "warning: count cache disabled: " << e.what() << '\n';
    return std::nullopt;
  }
}

ewe::ClassificationOptions classification_options(const Globals& g, ewe::CountCache* cache) {
  ewe::ClassificationOptions c;
  c.enumeration = enumeration_options(g);
  if (cache) {
    const auto e = c.enumeration;
    c.vector_source = [cache, e](const ewe::Permutation& p, int n) {
      return ewe::cached_avoidance_vector(cache, p, n, e);
    };
  }
  return c;
}

int run_verify_cache(const Globals& g) {
  if (g.no_cache) throw ewe::usage_error("--verify-cache cannot be combined with --no-cache");
  ewe::CountCache cache(ewe::CountCache::default_directory());
  const auto mismatches = ewe::verify_cache(cache, verify_cache_sample, enumeration_options(g));
  for (const auto& m : mismatches)
    std::cerr << "cache mismatch " << m.key << ": cached " << m.cached.total << '/' << m.cached.even << '/'
              << m.cached.odd << ", recomputed " << m.fresh.total << '/' << m.fresh.even << '/' << m.fresh.odd << '\n';
  const std::size_t checked = std::min(cache.size(), verify_cache_sample);
  std::cerr << "verify-cache: " << checked << " of " << cache.size() << " entries recomputed, " << mismatches.size()
            << " mismatches (" << cache.file().string() << ")\n";
  return mismatches.empty() ? ok : refuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity-split pattern avoidance: counts, classes, BWX maps and checks"};
  app.set_version_flag("--version", std::string(EWE_VERSION));
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads (0: EWE_JOBS or hardware concurrency)")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the count cache");
  app.add_flag("--verify-cache", g.verify_cache, "Recompute a sample of cached counts and fail on mismatch");
  app.add_option("--limit", g.limit, "Raise the largest n (and shape row count) accepted")->check(CLI::PositiveNumber);
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string count_pattern;
  std::optional<int> count_n;
  std::optional<std::string> count_shape;
  auto* count = app.add_subcommand("count", "Count (even, odd) avoiders of a pattern");
  count->add_option("pattern", count_pattern, "Pattern, e.g. 1234 or 1,2,10,3,...")->required();
  auto* n_opt = count->add_option("--n", count_n, "Permutation length")->check(CLI::NonNegativeNumber);
  auto* shape_opt = count->add_option("--shape", count_shape, "Ferrers shape as row lengths, bottom row first");
  n_opt->excludes(shape_opt);

  int classify_k = 0;
  int classify_max_n = 8;
  std::string classify_mode = "even-wilf";
  auto* classify = app.add_subcommand("classify", "Partition S_k by (even-)Wilf class");
  classify->add_option("k", classify_k, "Pattern length")->required()->check(CLI::PositiveNumber);
  classify->add_option("--max-n", classify_max_n, "Largest n compared")->capture_default_str();
  classify->add_option("--mode", classify_mode, "wilf or even-wilf")->capture_default_str();

  std::string map_input;
  int map_t = 3;
  std::string map_dir = "forward";
  std::optional<std::string> map_shape;
  auto* map = app.add_subcommand("map", "Apply phi_t* (forward) or psi_t* (backward) to a transversal");
  map->add_option("input", map_input, "Transversal")->required();
  map->add_option("--t", map_t, "Pattern size t")->capture_default_str()->check(CLI::Range(2, 64));
  map->add_option("--dir", map_dir, "forward or backward")
      ->check(CLI::IsMember({"forward", "backward"}))
      ->capture_default_str();
  map->add_option("--shape", map_shape, "Ferrers shape (square by default)");

  std::string verify_name;
  ewe::verify::CheckParams verify_params;
  auto* verify = app.add_subcommand("verify", "Run a named check");
  verify->add_option("name", verify_name, "Check name")->required();
  verify->add_option("--t", verify_params.t);
  verify->add_option("--box", verify_params.box);
  verify->add_option("--max-n", verify_params.max_n);
  verify->add_option("--k", verify_params.k);
  verify->add_option("--alpha-max", verify_params.alpha_max);
  verify->footer("Checks: " + [] {
    std::string s;
    for (const auto& n : ewe::verify::registry_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());

  int tables_max_k = 4;
  int tables_max_n = 9;
  auto* tables = app.add_subcommand("tables", "Reproduce the headline counts, the S_3/S_4 partitions and the class-count table");
  tables->add_option("--max-k", tables_max_k, "Largest k in the class-count table")->capture_default_str();
  tables->add_option("--max-n", tables_max_n, "Horizon for classifications")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    const auto format = ewe::parse_format(g.format);
    int status = ok;

    if (*count) {
      auto cache = open_cache(g);
      ewe::CountCache* c = cache ? &*cache : nullptr;
      const auto pattern = ewe::parse_permutation(count_pattern);
      const auto opts = enumeration_options(g);
      ewe::CountRow row{pattern, "", {}};
      if (count_shape) {
        const auto shape = ewe::parse_shape(*count_shape);
        row.domain = "shape=" + ewe::to_string(shape);
        row.counts = ewe::cached_count_shape(c, shape, pattern, opts);
      } else {
        if (!count_n) throw ewe::usage_error("count needs --n or --shape");
        row.domain = "n=" + std::to_string(*count_n);
        row.counts = ewe::cached_avoidance_vector(c, pattern, *count_n, opts).entries.back();
      }
      std::cout << ewe::render_counts({row}, format);
    } else if (*classify) {
      auto cache = open_cache(g);
      const auto opts = classification_options(g, cache ? &*cache : nullptr);
      const auto partition = ewe::empirical_classes(classify_k, classify_max_n, ewe::parse_mode(classify_mode), opts);
      std::cout << ewe::render_partition(partition, format);
    } else if (*map) {
      auto input = ewe::parse_permutation(map_input);
      auto shape = map_shape ? ewe::parse_shape(*map_shape) : ewe::FerrersShape::square(static_cast<int>(input.size()));
      if (!ewe::is_transversal(shape, input))
        throw ewe::usage_error(ewe::to_string(input) + " is not a transversal of " + ewe::to_string(shape));
      const auto t = ewe::make_transversal(shape, input);
      const auto dir = map_dir == "forward" ? ewe::bwx::Direction::forward : ewe::bwx::Direction::backward;
      const auto [image, trace] =
          dir == ewe::bwx::Direction::forward ? ewe::bwx::phi_star(t, map_t) : ewe::bwx::psi_star(t, map_t);
      std::cout << ewe::map_json(t, image, map_t, dir, trace).dump(2) << '\n';
    } else if (*verify) {
      verify_params.enumeration = enumeration_options(g);
      const auto report = ewe::verify::run_check(verify_name, verify_params);
      std::cout << ewe::render_report(report, format);
      if (!report.ok()) status = refuted;
    } else if (*tables) {
      auto cache = open_cache(g);
      ewe::CountCache* c = cache ? &*cache : nullptr;
      const auto opts = classification_options(g, c);
      std::vector<ewe::CountRow> rows;
      for (const auto& [p, n] : {std::pair{"123", 3}, {"321", 3}, {"1234", 6}, {"4321", 6}}) {
        const auto pattern = ewe::parse_permutation(p);
        rows.push_back({pattern, "n=" + std::to_string(n),
                        ewe::cached_avoidance_vector(c, pattern, n, opts.enumeration).entries.back()});
      }
      rows.push_back({ewe::parse_permutation("321"), "shape=3,3,3",
                      ewe::cached_count_shape(c, ewe::FerrersShape::square(3), ewe::parse_permutation("321"),
                                              opts.enumeration)});
      const bool human = format == ewe::OutputFormat::table;
      if (format == ewe::OutputFormat::json) {
        nlohmann::json j;
        j["counts"] = nlohmann::json::parse(ewe::render_counts(rows, format));
        for (int k : {3, 4})
          j["classes_S" + std::to_string(k)] =
              ewe::partition_json(ewe::empirical_classes(k, tables_max_n, ewe::EquivalenceMode::even_wilf, opts));
        j["class_counts"] =
            nlohmann::json::parse(ewe::render_class_counts(ewe::class_count_table(tables_max_k, tables_max_n, opts), format));
        std::cout << j.dump(2) << '\n';
      } else {
        if (human) std::cout << "Headline counts\n";
        std::cout << ewe::render_counts(rows, format) << '\n';
        for (int k : {3, 4})
          std::cout << ewe::render_partition(
                           ewe::empirical_classes(k, tables_max_n, ewe::EquivalenceMode::even_wilf, opts), format)
                    << '\n';
        if (human) std::cout << "Number of classes, counts compared for n <= " << tables_max_n << '\n';
        std::cout << ewe::render_class_counts(ewe::class_count_table(tables_max_k, tables_max_n, opts), format);
      }
    } else if (!g.verify_cache) {
      std::cout << app.help();
      return usage;
    }

    if (g.verify_cache) {
      const int v = run_verify_cache(g);
      if (v != ok) status = v;
    }
    return status;
  } catch (const ewe::budget_error& e) {
    std::cerr << "error: " << e.what() << " (raise it with --limit)\n";
    return budget;
  } catch (const ewe::usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
