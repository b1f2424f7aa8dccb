// Command-line surface for the Costas array toolkit: construction,
// verification, enumeration, correlation sweeps, structural analysis,
// ruler conversion, stochastic search, and the on-disk array database.
//
// Exit codes: 0 success, 1 negative verdict (e.g. a failed verification),
// 2 usage or parameter errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "costas/analysis.hpp"
#include "costas/correlation.hpp"
#include "costas/database.hpp"
#include "costas/enumeration.hpp"
#include "costas/finite_field.hpp"
#include "costas/generators.hpp"
#include "costas/numtheory.hpp"
#include "costas/permutation.hpp"
#include "costas/stochastic.hpp"
#include "costas/variants.hpp"

namespace {

using nlohmann::json;
using namespace costas;

struct Config {
  int workers = 0;       // 0 = hardware concurrency
  int max_order = 16;
  int max_cells = 36;
};

// Simple key=value file pointed at by COSTAS_CONFIG; flags override it.
Config load_config() {
  Config config;
  const char* path = std::getenv("COSTAS_CONFIG");
  if (!path) return config;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "warning: cannot read config file " << path << "\n";
    return config;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "workers") {
        config.workers = std::stoi(value);
      } else if (key == "max_order") {
        config.max_order = std::stoi(value);
      } else if (key == "max_cells") {
        config.max_cells = std::stoi(value);
      } else {
        std::cerr << "warning: unknown config key " << key << "\n";
      }
    } catch (const std::exception&) {
      std::cerr << "warning: bad config value for " << key << "\n";
    }
  }
  return config;
}

ProgressFn stderr_progress() {
  return [](const std::string& message) { std::cerr << message << "\n"; };
}

json permutation_json(const Permutation& f) { return json(f.values()); }

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

std::optional<std::pair<std::int64_t, int>> parse_order_q(std::int64_t q) {
  return prime_power(q);
}

int run_generate(const std::string& method_text, std::int64_t p, int degree, std::int64_t q,
                 std::int64_t alpha, std::int64_t beta, std::int64_t c, std::int64_t t,
                 std::int64_t t1, std::int64_t t2, const std::string& family, bool json_out) {
  if (q > 0) {
    auto decomposition = parse_order_q(q);
    if (!decomposition) {
      std::cerr << "error: " << q << " is not a prime power\n";
      return 2;
    }
    p = decomposition->first;
    degree = decomposition->second;
  }

  if (!family.empty()) {
    std::vector<Permutation> arrays;
    if (family == "w1") {
      arrays = w1_family(p);
    } else {
      auto method = method_from_name(family);
      if (!method) {
        std::cerr << "error: unknown family " << family << "\n";
        return 2;
      }
      arrays = enumerate_family(*method, p, degree);
    }
    std::sort(arrays.begin(), arrays.end());
    if (json_out) {
      json payload;
      payload["family"] = family;
      payload["p"] = p;
      payload["m"] = degree;
      payload["count"] = arrays.size();
      json list = json::array();
      for (const Permutation& f : arrays) list.push_back(permutation_json(f));
      payload["arrays"] = list;
      emit(payload);
    } else {
      for (const Permutation& f : arrays) std::cout << f.to_string() << "\n";
    }
    return 0;
  }

  auto method = method_from_name(method_text);
  if (!method) {
    std::cerr << "error: unknown method " << method_text << "\n";
    return 2;
  }
  ConstructionSpec spec;
  spec.method = *method;
  spec.p = p;
  spec.m = degree;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.c = c;
  spec.t = t;
  spec.t1 = t1;
  spec.t2 = t2;
  GenerationOutcome outcome = generate(spec);
  if (json_out) {
    json payload;
    payload["method"] = std::string(method_name(*method));
    payload["n"] = outcome.permutation.size();
    payload["values"] = permutation_json(outcome.permutation);
    payload["verified"] = outcome.verified;
    emit(payload);
  } else {
    std::cout << outcome.permutation.to_string() << "\n";
    std::cerr << "verified: " << (outcome.verified ? "true" : "false") << "\n";
  }
  return outcome.verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Config config = load_config();

  CLI::App app{"Costas array toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_out = false;
  app.add_flag("--json", json_out, "machine-readable output with stable key order");

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "construct arrays algebraically");
  std::string gen_method, gen_family;
  std::int64_t gen_p = 0, gen_q = 0, gen_alpha = 0, gen_beta = 0, gen_c = 0, gen_t = 0,
               gen_t1 = 0, gen_t2 = 0;
  int gen_degree = 1;
  generate_cmd->add_option("--method", gen_method, "w1exp w1log w2 w3 g2 g3 g4 g4star g4dstar g5star g0 g1 w0 rw0 rg1");
  generate_cmd->add_option("--family", gen_family, "emit every member: w1 or a method name");
  generate_cmd->add_option("-p,--prime", gen_p, "field characteristic");
  generate_cmd->add_option("-m,--degree", gen_degree, "extension degree");
  generate_cmd->add_option("-q,--order", gen_q, "field order p^m (alternative to -p/-m)");
  generate_cmd->add_option("--alpha", gen_alpha, "primitive element code");
  generate_cmd->add_option("--beta", gen_beta, "primitive element code");
  generate_cmd->add_option("-c,--shift", gen_c, "Welch column shift");
  generate_cmd->add_option("-t", gen_t, "RW0 row shift");
  generate_cmd->add_option("--t1", gen_t1, "RG1 column shift");
  generate_cmd->add_option("--t2", gen_t2, "RG1 row shift");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "test the Costas property");
  std::string verify_perm;
  bool verify_fast = false;
  verify_cmd->add_option("permutation", verify_perm, "values, e.g. \"1 2 4 3\"")->required();
  verify_cmd->add_flag("--fast", verify_fast, "check only the first half of the triangle rows");

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustive search of one order");
  int enum_n = 0;
  std::string enum_store;
  int enum_workers = config.workers;
  int enum_max_order = config.max_order;
  std::optional<double> enum_estimate;
  enumerate_cmd->add_option("order", enum_n, "array order")->required();
  enumerate_cmd->add_option("--store", enum_store, "write the arrays to this database root");
  enumerate_cmd->add_option("--workers", enum_workers, "worker threads (0 = auto)");
  enumerate_cmd->add_option("--max-order", enum_max_order, "raise the order cap");
  enumerate_cmd->add_option("--estimate", enum_estimate,
                            "skip the search, print the closed-form count estimate for this K");

  // forbidden
  auto* forbidden_cmd = app.add_subcommand("forbidden", "grid cells no Costas array covers");
  int forbidden_n = 0;
  int forbidden_max_order = config.max_order;
  int forbidden_workers = config.workers;
  forbidden_cmd->add_option("order", forbidden_n, "array order")->required();
  forbidden_cmd->add_option("--max-order", forbidden_max_order, "raise the order cap");
  forbidden_cmd->add_option("--workers", forbidden_workers, "worker threads (0 = auto)");

  // correlate
  auto* correlate_cmd = app.add_subcommand("correlate", "cross-correlation surfaces and sweeps");
  std::string corr_f, corr_g, corr_family, corr_auto;
  std::int64_t corr_p = 0, corr_q = 0;
  int corr_degree = 1;
  std::optional<int> corr_u, corr_v;
  int corr_workers = config.workers;
  correlate_cmd->add_option("-f", corr_f, "first permutation");
  correlate_cmd->add_option("-g", corr_g, "second permutation");
  correlate_cmd->add_option("-u", corr_u, "column shift");
  correlate_cmd->add_option("-v", corr_v, "row shift");
  correlate_cmd->add_option("--auto", corr_auto, "report the autocorrelation range");
  correlate_cmd->add_option("--family", corr_family, "family sweep: w1 or g2");
  correlate_cmd->add_option("-p,--prime", corr_p, "prime for the sweep");
  correlate_cmd->add_option("-m,--degree", corr_degree, "extension degree for g2");
  correlate_cmd->add_option("-q,--order", corr_q, "field order for g2 sweeps");
  correlate_cmd->add_option("--workers", corr_workers, "worker threads (0 = auto)");
  bool corr_probe = false;
  correlate_cmd->add_flag("--probe", corr_probe, "zero-shift probe instead of the full sweep");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "prime classes of the correlation conjecture");
  std::int64_t classify_p = 0, classify_from = 0, classify_to = 0;
  classify_cmd->add_option("-p,--prime", classify_p, "single prime");
  classify_cmd->add_option("--from", classify_from, "range start");
  classify_cmd->add_option("--to", classify_to, "range end");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "structural report for one permutation");
  std::string analyze_perm;
  std::int64_t analyze_q = 0;
  analyze_cmd->add_option("permutation", analyze_perm, "values")->required();
  analyze_cmd->add_option("--g2-q", analyze_q, "also test the G2 congruence for this q");

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "Costas array to Golomb ruler");
  std::string convert_perm;
  std::optional<int> convert_blanks;
  bool convert_minimal = false;
  convert_cmd->add_option("permutation", convert_perm, "values")->required();
  convert_cmd->add_option("--blanks", convert_blanks, "blank rows appended below each column");
  convert_cmd->add_flag("--minimal", convert_minimal, "use the minimal blank row count");

  // search
  auto* search_cmd = app.add_subcommand("search", "stochastic local search");
  SearchConfig search_config;
  std::string search_mutation = "pairwise";
  std::string search_trace;
  search_cmd->add_option("-n,--order", search_config.n, "array order")->required();
  search_cmd->add_option("--seed", search_config.seed, "master RNG seed");
  search_cmd->add_option("--mutation", search_mutation, "pairwise, triple, or targeted");
  search_cmd->add_option("--max-iters", search_config.max_iters, "iterations per restart");
  search_cmd->add_option("--restarts", search_config.restarts, "restart budget");
  search_cmd->add_option("--kick-limit", search_config.kick_limit, "kicks before a restart");
  search_cmd->add_option("--workers", search_config.workers, "parallel restarts");
  search_cmd->add_option("--trace", search_trace, "write a JSON-lines trace to this file");

  // db
  auto* db_cmd = app.add_subcommand("db", "on-disk array database");
  db_cmd->require_subcommand(1);
  std::string db_root;
  db_cmd->add_option("--root", db_root, "database root directory")->required();
  auto* db_import = db_cmd->add_subcommand("import", "merge arrays from a file (- for stdin)");
  int db_import_n = 0;
  std::string db_import_file, db_import_source = "imported";
  db_import->add_option("-n,--order", db_import_n, "array order")->required();
  db_import->add_option("--file", db_import_file, "one permutation per line")->required();
  db_import->add_option("--source", db_import_source, "provenance tag");
  auto* db_list = db_cmd->add_subcommand("list", "print the arrays of one order");
  int db_list_n = 0;
  db_list->add_option("-n,--order", db_list_n, "array order")->required();
  auto* db_check = db_cmd->add_subcommand("check", "re-parse everything and verify the manifest");
  auto* db_stats = db_cmd->add_subcommand("stats", "per-order counts and sources");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*generate_cmd) {
      return run_generate(gen_method, gen_p, gen_degree, gen_q, gen_alpha, gen_beta, gen_c,
                          gen_t, gen_t1, gen_t2, gen_family, json_out);
    }

    if (*verify_cmd) {
      Permutation f = Permutation::parse(verify_perm);
      const bool verdict = verify_fast ? is_costas_fast(f) : is_costas(f);
      if (json_out) {
        json payload;
        payload["costas"] = verdict;
        payload["n"] = f.size();
        payload["values"] = permutation_json(f);
        emit(payload);
      } else {
        std::cout << "costas: " << (verdict ? "true" : "false") << "\n";
      }
      return verdict ? 0 : 1;
    }

    if (*enumerate_cmd) {
      if (enum_estimate) {
        const double estimate = count_estimate(enum_n, *enum_estimate);
        if (json_out) {
          json payload;
          payload["n"] = enum_n;
          payload["k"] = *enum_estimate;
          payload["estimate"] = estimate;
          emit(payload);
        } else {
          std::cout << estimate << "\n";
        }
        return 0;
      }
      EnumerationOptions options;
      options.workers = enum_workers;
      options.max_order = enum_max_order;
      options.store = !enum_store.empty();
      options.progress = stderr_progress();
      EnumerationResult result = enumerate(enum_n, options);
      if (!enum_store.empty()) {
        ArrayDatabase db(enum_store);
        db.add(enum_n, result.arrays, "enumerated");
      }
      if (json_out) {
        json payload;
        payload["n"] = result.n;
        payload["total"] = result.total;
        payload["symmetric"] = result.symmetric;
        emit(payload);
      } else {
        std::cout << "order " << result.n << ": " << result.total << " Costas arrays, "
                  << result.symmetric << " symmetric (" << result.elapsed_seconds << "s)\n";
      }
      return 0;
    }

    if (*forbidden_cmd) {
      EnumerationOptions options;
      options.max_order = forbidden_max_order;
      options.workers = forbidden_workers;
      options.progress = stderr_progress();
      auto cells = forbidden_positions(forbidden_n, options);
      if (json_out) {
        json payload;
        payload["n"] = forbidden_n;
        json list = json::array();
        for (const auto& [row, col] : cells) list.push_back({row, col});
        payload["forbidden"] = list;
        emit(payload);
      } else {
        if (cells.empty()) {
          std::cout << "no forbidden positions at order " << forbidden_n << "\n";
        } else {
          for (const auto& [row, col] : cells) std::cout << "(" << row << ", " << col << ")\n";
        }
      }
      return 0;
    }

    if (*correlate_cmd) {
      SweepOptions sweep;
      sweep.workers = corr_workers;
      sweep.progress = stderr_progress();
      if (!corr_family.empty()) {
        int psi = 0;
        json payload;
        if (corr_family == "w1") {
          psi = corr_probe ? family_max_w1_origin(corr_p) : family_max_w1(corr_p, sweep);
          payload["family"] = "w1";
          payload["p"] = corr_p;
        } else if (corr_family == "g2") {
          std::int64_t p = corr_p;
          int degree = corr_degree;
          if (corr_q > 0) {
            auto decomposition = prime_power(corr_q);
            if (!decomposition) {
              std::cerr << "error: " << corr_q << " is not a prime power\n";
              return 2;
            }
            p = decomposition->first;
            degree = decomposition->second;
          }
          psi = corr_probe ? g2_root_power_probe(p, degree) : family_max_g2(p, degree, sweep);
          payload["family"] = "g2";
          payload["q"] = [&] {
            std::int64_t q = 1;
            for (int i = 0; i < degree; ++i) q *= p;
            return q;
          }();
        } else {
          std::cerr << "error: unknown family " << corr_family << "\n";
          return 2;
        }
        payload["psi"] = psi;
        if (json_out) {
          emit(payload);
        } else {
          std::cout << "psi = " << psi << "\n";
        }
        return 0;
      }
      if (!corr_auto.empty()) {
        Permutation f = Permutation::parse(corr_auto);
        auto range = autocorrelation_range(f);
        if (json_out) {
          json payload;
          payload["n"] = f.size();
          payload["range"] = json(std::vector<int>(range.begin(), range.end()));
          emit(payload);
        } else {
          std::cout << "range:";
          for (int value : range) std::cout << " " << value;
          std::cout << "\n";
        }
        return 0;
      }
      Permutation f = Permutation::parse(corr_f);
      Permutation g = Permutation::parse(corr_g);
      if (corr_u && corr_v) {
        const int value = cross_correlation(f, g, *corr_u, *corr_v);
        if (json_out) {
          json payload;
          payload["psi"] = value;
          payload["u"] = *corr_u;
          payload["v"] = *corr_v;
          emit(payload);
        } else {
          std::cout << value << "\n";
        }
        return 0;
      }
      const int value = max_cross(f, g);
      if (json_out) {
        json payload;
        payload["max_psi"] = value;
        emit(payload);
      } else {
        std::cout << value << "\n";
      }
      return 0;
    }

    if (*classify_cmd) {
      std::vector<PrimeClassification> rows;
      if (classify_p > 0) {
        rows.push_back(classify_prime(classify_p));
      } else {
        for (std::int64_t p = std::max<std::int64_t>(5, classify_from); p <= classify_to; ++p) {
          if (is_prime(p)) rows.push_back(classify_prime(p));
        }
      }
      if (json_out) {
        json list = json::array();
        for (const auto& row : rows) {
          json item;
          item["p"] = row.p;
          item["kind"] = prime_kind_name(row.kind);
          item["t"] = row.t;
          if (row.kind == PrimeKind::Safe) {
            item["predicted"] = nullptr;
          } else {
            item["predicted"] = row.predicted;
          }
          list.push_back(item);
        }
        emit(list);
      } else {
        for (const auto& row : rows) {
          std::cout << row.p << ": " << prime_kind_name(row.kind) << ", t = " << row.t;
          if (row.kind != PrimeKind::Safe) std::cout << ", predicted = " << row.predicted;
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*analyze_cmd) {
      Permutation f = Permutation::parse(analyze_perm);
      const bool costas = is_costas(f);
      CycleDecomposition cycles = cycle_structure(f);
      ParityCensus census = parity_census(f);
      auto fixed = fixed_points(f);
      auto range = autocorrelation_range(f);

      json payload;
      payload["n"] = f.size();
      payload["costas"] = costas;
      payload["symmetric"] = is_symmetric(f);
      payload["deficiency"] = deficiency(f);
      payload["fixed_points"] = json(std::vector<int>(fixed.begin(), fixed.end()));
      json cycle_list = json::array();
      for (const auto& cycle : cycles.cycles) cycle_list.push_back(json(cycle));
      payload["cycles"] = cycle_list;
      payload["permutation_order"] = cycles.order;
      payload["parity"] = {{"ee", census.ee}, {"eo", census.eo}, {"oe", census.oe}, {"oo", census.oo}};
      payload["autocorrelation_range"] = json(std::vector<int>(range.begin(), range.end()));
      payload["single_periodic"] = is_single_periodic(f);
      payload["circular_costas"] = is_circular_costas(f);
      payload["queens"] = is_queens(f);
      if (f.size() % 2 == 0) {
        payload["anti_reflective"] = is_anti_reflective(f);
        payload["honeycomb"] = nullptr;
      } else {
        payload["anti_reflective"] = nullptr;
        payload["honeycomb"] = costas ? json(is_honeycomb(f)) : json(nullptr);
      }
      if (costas) {
        auto twins = find_twins(f);
        payload["twins"] =
            twins ? json::array({permutation_json(twins->first), permutation_json(twins->second)})
                  : json(nullptr);
      } else {
        payload["twins"] = nullptr;
      }
      if (f.size() <= 20) {  // the shift probes are quartic in n
        payload["welch_shift_stable"] = welch_shift_stability(f);
        payload["golomb_shift_stable"] = golomb_shift_stability(f);
      }
      if (analyze_q > 0) payload["g2_necessary"] = g2_necessary_property(f, analyze_q);

      if (json_out) {
        emit(payload);
      } else {
        std::cout << "n: " << f.size() << "\n"
                  << "costas: " << (costas ? "true" : "false") << "\n"
                  << "cycles:";
        for (const auto& cycle : cycles.cycles) {
          std::cout << " (";
          for (size_t i = 0; i < cycle.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << cycle[i];
          }
          std::cout << ")";
        }
        std::cout << "\npermutation order: " << cycles.order << "\n"
                  << "parity: ee=" << census.ee << " eo=" << census.eo << " oe=" << census.oe
                  << " oo=" << census.oo << "\n";
      }
      return 0;
    }

    if (*convert_cmd) {
      Permutation f = Permutation::parse(convert_perm);
      int blanks = convert_blanks.value_or(std::max(0, f.size() - 2));
      if (convert_minimal) blanks = minimal_blank_rows(f);
      auto ruler = costas_to_ruler(f, blanks);
      if (!ruler) {
        std::cerr << "no Golomb ruler with " << blanks << " blank rows\n";
        return 1;
      }
      if (json_out) {
        json payload;
        payload["blanks"] = blanks;
        payload["length"] = ruler->length;
        payload["marks"] = json(ruler->marks);
        emit(payload);
      } else {
        for (size_t i = 0; i < ruler->marks.size(); ++i) {
          if (i) std::cout << " ";
          std::cout << ruler->marks[i];
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (*search_cmd) {
      if (search_mutation == "pairwise") {
        search_config.mutation = MutationSet::Pairwise;
      } else if (search_mutation == "triple") {
        search_config.mutation = MutationSet::Triple;
      } else if (search_mutation == "targeted") {
        search_config.mutation = MutationSet::Targeted;
      } else {
        std::cerr << "error: unknown mutation set " << search_mutation << "\n";
        return 2;
      }
      SearchResult result = local_search(search_config);
      if (!search_trace.empty()) {
        std::ofstream out(search_trace);
        out << trace_to_json_lines(result);
      }
      if (json_out) {
        json payload;
        payload["n"] = search_config.n;
        payload["found"] = result.found ? permutation_json(*result.found) : json(nullptr);
        payload["iterations"] = result.iterations;
        payload["winning_restart"] = result.winning_restart;
        emit(payload);
      } else if (result.found) {
        std::cout << result.found->to_string() << "\n";
        std::cerr << "restart " << result.winning_restart << ", " << result.iterations
                  << " iterations\n";
      } else {
        std::cout << "not found\n";
      }
      return result.found ? 0 : 1;
    }

    if (*db_cmd) {
      ArrayDatabase db(db_root);
      if (*db_import) {
        std::vector<Permutation> arrays;
        auto read_stream = [&](std::istream& in) {
          std::string line;
          while (std::getline(in, line)) {
            if (!line.empty()) arrays.push_back(Permutation::parse(line));
          }
        };
        if (db_import_file == "-") {
          read_stream(std::cin);
        } else {
          std::ifstream in(db_import_file);
          if (!in) {
            std::cerr << "error: cannot read " << db_import_file << "\n";
            return 2;
          }
          read_stream(in);
        }
        for (const Permutation& f : arrays) {
          if (f.size() != db_import_n) {
            std::cerr << "error: array of order " << f.size() << " in an order-" << db_import_n
                      << " import\n";
            return 2;
          }
        }
        db.add(db_import_n, arrays, db_import_source);
        std::cout << "imported " << arrays.size() << " arrays\n";
        return 0;
      }
      if (*db_list) {
        for (const Permutation& f : db.load(db_list_n)) std::cout << f.to_string() << "\n";
        return 0;
      }
      if (*db_check) {
        try {
          db.check();
        } catch (const Error& error) {
          std::cerr << "database check failed: " << error.what() << "\n";
          return 1;
        }
        std::cout << "ok\n";
        return 0;
      }
      if (*db_stats) {
        auto orders = db.orders();
        if (json_out) {
          json list = json::array();
          for (const auto& info : orders) {
            list.push_back({{"n", info.n}, {"count", info.count}, {"source", info.source}});
          }
          emit(list);
        } else {
          for (const auto& info : orders) {
            std::cout << info.n << ": " << info.count << " (" << info.source << ")\n";
          }
        }
        return 0;
      }
    }
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }

  return 2;
}
