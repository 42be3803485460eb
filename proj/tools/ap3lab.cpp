// ap3lab: exact 3-term arithmetic progression counting, extremal witness
// generation, closed-form prediction and subset search over finite point
// sets in nine metric-space kinds.
//
// Subcommands:
//   construct <name> <params...> [-o file]   write a witness set
//   count <file> [--csv] [--pairs]           count 3-APs in a point-set file
//   predict <target> <n>                     closed-form value
//   table <target> --n-max N                 CSV table of predictions
//   search --ground file --n N ...           exhaustive / stochastic maximum
//   verify <suite> [--n-max N]               formula-vs-count cross-check
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ap3/constructions.hpp"
#include "ap3/counting.hpp"
#include "ap3/formulas.hpp"
#include "ap3/io.hpp"
#include "ap3/metric.hpp"
#include "ap3/search.hpp"

namespace {

using ap3::PointSet;
using ap3::Prediction;
using ap3::Rational;
using nlohmann::ordered_json;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + output_path + "'");
  out << text;
}

PointSet build_construction(const std::string& name, const std::vector<long long>& params,
                            const std::string& offset) {
  const auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw CLI::ValidationError("construct",
                                 name + " takes " + std::to_string(k) + " integer parameter(s)");
    }
  };
  const auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
  if (name == "line-ap") { need(1); return ap3::line_ap(p(0)); }
  if (name == "evenly-spread") {
    need(1);
    return ap3::evenly_spread(p(0), offset.empty() ? Rational(0) : Rational::parse(offset));
  }
  if (name == "f-minus1") { need(2); return ap3::f_minus1(p(0), p(1)); }
  if (name == "f-minus2") { need(3); return ap3::f_minus2(p(0), p(1), p(2)); }
  if (name == "f-plus1") { need(2); return ap3::f_plus1(p(0), p(1)); }
  if (name == "f-plus2") { need(3); return ap3::f_plus2(p(0), p(1), p(2)); }
  if (name == "tree-ball") { need(2); return ap3::tree_ball(p(0), p(1)); }
  if (name == "lattice-ball") { need(2); return ap3::lattice_ball(p(0), p(1)); }
  if (name == "bipartite-split") { need(2); return ap3::bipartite_split(p(0), p(1)); }
  if (name == "radial-star") { need(1); return ap3::radial_star(p(0)); }
  if (name == "equator-config") { need(1); return ap3::equator_config(p(0)); }
  throw CLI::ValidationError("construct", "unknown construction '" + name + "'");
}

Prediction predict_value(const std::string& target, std::uint64_t n) {
  if (target == "line") return ap3::mu_line(n);
  if (target == "circle") return ap3::mu_circle(n);
  if (target == "equator") return ap3::mu_equator(n);
  if (target == "unique-midpoint-cap") return ap3::unique_midpoint_cap(n);
  if (target == "circle-cap") return ap3::circle_cap_general(n);
  if (target == "circle-cap-mod2") return ap3::circle_cap_mod2(n);
  if (target == "general-cap") return ap3::general_cap(n);
  throw CLI::ValidationError(
      "predict", "unknown target '" + target +
                     "' (line, circle, equator, unique-midpoint-cap, circle-cap, "
                     "circle-cap-mod2, general-cap)");
}

struct VerifyRow {
  std::string check;
  std::string params;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  bool pass() const { return expected == actual; }
};

// Evenly spread n-set count: 2*n*floor(n/4) + n.
std::uint64_t spread_count(std::uint64_t n) { return 2 * n * (n / 4) + n; }

void verify_s1_families(int n_max, std::vector<VerifyRow>& rows) {
  for (int n = 2; n <= n_max; ++n) {
    rows.push_back({"evenly-spread", "n=" + std::to_string(n), spread_count(n),
                    ap3::count_ap3(ap3::evenly_spread(n)).total});
  }
  // The perturbed families realize the circle maxima at their own sizes.
  for (int n = 4; n <= n_max; n += 4) {
    rows.push_back({"f-minus1", "n=" + std::to_string(n), ap3::mu_circle(n - 1).value,
                    ap3::count_ap3(ap3::f_minus1(n, 0)).total});
    rows.push_back({"f-plus1", "n=" + std::to_string(n), ap3::mu_circle(n + 1).value,
                    ap3::count_ap3(ap3::f_plus1(n, 0)).total});
    rows.push_back({"f-plus2", "n=" + std::to_string(n), ap3::mu_circle(n + 2).value,
                    ap3::count_ap3(ap3::f_plus2(n, 0, 1)).total});
    if (n >= 8) {
      rows.push_back({"f-minus2", "n=" + std::to_string(n), ap3::mu_circle(n - 2).value,
                      ap3::count_ap3(ap3::f_minus2(n, 0, 2)).total});
    }
  }
}

void verify_tree_balls(int n_max, std::vector<VerifyRow>& rows) {
  const int d_max = n_max >= 3 ? 3 : n_max;
  for (int r = 2; r <= 5; ++r) {
    for (int d0 = 0; d0 <= d_max; ++d0) {
      if (ap3::tree_ball_size(r, d0) > 200) continue;
      const PointSet ball = ap3::tree_ball(r, d0);
      const auto report = ap3::count_ap3(ball);
      const std::string params = "r=" + std::to_string(r) + ",d0=" + std::to_string(d0);
      rows.push_back({"tree-ball-count", params, ap3::tree_ball_exact(r, d0).value, report.total});
      rows.push_back({"tree-ball-center-weight", params, ap3::tree_weight(r, d0),
                      report.weights[0]});
    }
  }
}

void verify_equator(int n_max, std::vector<VerifyRow>& rows) {
  for (int n = 3; n <= n_max; ++n) {
    const PointSet config = ap3::equator_config(n);
    const std::string params = "n=" + std::to_string(n);
    rows.push_back({"equator-config", params, ap3::mu_equator(n).value,
                    ap3::count_ap3(config).total});
    rows.push_back({"equator-split-route", params, ap3::mu_equator(n).value,
                    ap3::equator_count_split(config)});
  }
}

void verify_bipartite(int n_max, std::vector<VerifyRow>& rows) {
  for (int n = 2; n <= n_max; ++n) {
    const int nl = n / 2;
    const int nr = n - nl;
    rows.push_back({"bipartite-split", "n=" + std::to_string(n),
                    ap3::bipartite_exact(nl, nr).value,
                    ap3::count_ap3(ap3::bipartite_split(nl, nr)).total});
  }
}

void verify_radial_star(int n_max, std::vector<VerifyRow>& rows) {
  for (int n = 2; n <= n_max; ++n) {
    rows.push_back({"radial-star", "n=" + std::to_string(n),
                    ap3::unique_midpoint_cap(n).value,
                    ap3::count_ap3(ap3::radial_star(n)).total});
  }
}

int run_verify(const std::string& suite, int n_max, const std::string& format) {
  std::vector<VerifyRow> rows;
  bool known = false;
  if (suite == "s1-families" || suite == "all") { verify_s1_families(n_max, rows); known = true; }
  if (suite == "tree-balls" || suite == "all") { verify_tree_balls(n_max, rows); known = true; }
  if (suite == "equator" || suite == "all") { verify_equator(n_max, rows); known = true; }
  if (suite == "bipartite" || suite == "all") { verify_bipartite(n_max, rows); known = true; }
  if (suite == "radial-star" || suite == "all") { verify_radial_star(n_max, rows); known = true; }
  if (!known) {
    throw CLI::ValidationError("verify", "unknown suite '" + suite +
                                             "' (s1-families, tree-balls, equator, bipartite, "
                                             "radial-star, all)");
  }

  bool all_pass = true;
  for (const auto& row : rows) all_pass = all_pass && row.pass();

  if (format == "csv") {
    std::cout << "check,params,expected,actual,pass\n";
    for (const auto& row : rows) {
      std::cout << row.check << ',' << row.params << ',' << row.expected << ',' << row.actual
                << ',' << (row.pass() ? "pass" : "FAIL") << '\n';
    }
  } else {
    ordered_json doc;
    doc["suite"] = suite;
    doc["rows"] = ordered_json::array();
    for (const auto& row : rows) {
      doc["rows"].push_back({{"check", row.check},
                             {"params", row.params},
                             {"expected", row.expected},
                             {"actual", row.actual},
                             {"pass", row.pass()}});
    }
    doc["pass"] = all_pass;
    std::cout << doc.dump(2) << '\n';
  }
  if (!all_pass) {
    for (const auto& row : rows) {
      if (!row.pass()) {
        std::cerr << "FAIL " << row.check << " " << row.params << " expected=" << row.expected
                  << " actual=" << row.actual << '\n';
      }
    }
  }
  return all_pass ? 0 : 1;
}

ordered_json search_result_json(const ap3::SearchResult& result, const PointSet& ground) {
  ordered_json doc;
  doc["mode"] = result.exhaustive ? "exhaustive" : "stochastic";
  doc["best_value"] = result.best_value;
  doc["evaluations"] = result.evaluations;
  if (!result.exhaustive) doc["seed"] = result.seed;
  doc["witnesses"] = ordered_json::array();
  for (const auto& witness : result.witnesses) {
    std::vector<ap3::Point> pts;
    pts.reserve(witness.size());
    for (std::size_t i : witness) pts.push_back(ground[i]);
    ordered_json entry;
    entry["indices"] = witness;
    entry["points"] = ap3::pointset_to_json(PointSet(ground.space(), std::move(pts)));
    doc["witnesses"].push_back(std::move(entry));
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 3-AP counting, witnesses, predictions and search in metric spaces"};
  app.require_subcommand(1);

  // construct
  std::string construct_name;
  std::vector<long long> construct_params;
  std::string construct_offset;
  std::string output_path;
  auto* construct = app.add_subcommand("construct", "generate a witness point set");
  construct->add_option("name", construct_name,
                        "line-ap | evenly-spread | f-minus1 | f-minus2 | f-plus1 | f-plus2 | "
                        "tree-ball | lattice-ball | bipartite-split | radial-star | equator-config")
      ->required();
  construct->add_option("params", construct_params, "integer parameters");
  construct->add_option("--offset", construct_offset, "turn offset p/q (evenly-spread)");
  construct->add_option("-o,--output", output_path, "output file (default stdout)");

  // count
  std::string count_file;
  bool count_csv = false;
  bool count_pairs = false;
  int threads = 0;
  auto* count = app.add_subcommand("count", "count 3-APs in a point-set file");
  count->add_option("file", count_file, "point-set JSON file")->required();
  count->add_flag("--csv", count_csv, "emit CSV (index,weight rows plus a total row)");
  count->add_flag("--pairs", count_pairs, "include circle pair diagnostics (circle sets)");
  count->add_option("--threads", threads, "worker threads (default AP3LAB_THREADS or hardware)");

  // predict
  std::string predict_target;
  std::uint64_t predict_n = 0;
  std::string format = "json";
  auto* predict = app.add_subcommand("predict", "closed-form prediction");
  predict->add_option("target", predict_target,
                      "line | circle | equator | unique-midpoint-cap | circle-cap | "
                      "circle-cap-mod2 | general-cap")
      ->required();
  predict->add_option("n", predict_n, "set size")->required();
  predict->add_option("--format", format, "json | csv");

  // table
  std::string table_target;
  std::uint64_t table_n_max = 16;
  auto* table = app.add_subcommand("table", "CSV table of predictions");
  table->add_option("target", table_target, "as in predict")->required();
  table->add_option("--n-max", table_n_max, "largest n (default 16)");

  // search
  std::string ground_file;
  std::uint64_t search_n = 0;
  bool exhaustive = false;
  std::uint64_t seed = 1;  // fixed default so plain reruns reproduce
  int restarts = 1;
  std::uint64_t budget = 10'000'000;
  auto* search = app.add_subcommand("search", "maximize the 3-AP count over n-subsets");
  search->add_option("--ground", ground_file, "ground point-set JSON file")->required();
  search->add_option("--n", search_n, "subset size")->required();
  auto* exhaustive_flag = search->add_flag("--exhaustive", exhaustive, "enumerate all subsets");
  auto* seed_opt = search->add_option("--seed", seed, "stochastic seed (default 1)");
  auto* restarts_opt =
      search->add_option("--restarts", restarts, "stochastic restarts (default 1)");
  search->add_option("--budget", budget, "exhaustive subset budget (default 1e7)");
  search->add_option("--threads", threads, "worker threads");
  search->add_option("-o,--output", output_path, "output file (default stdout)");
  exhaustive_flag->excludes(seed_opt);
  exhaustive_flag->excludes(restarts_opt);

  // verify
  std::string suite;
  int verify_n_max = 16;
  auto* verify = app.add_subcommand("verify", "formula-vs-count cross-check");
  verify->add_option("suite", suite,
                     "s1-families | tree-balls | equator | bipartite | radial-star | all")
      ->required();
  verify->add_option("--n-max", verify_n_max, "largest n (default 16)");
  verify->add_option("--format", format, "json | csv");

  try {
    app.parse(argc, argv);

    if (*construct) {
      const PointSet A = build_construction(construct_name, construct_params, construct_offset);
      emit(ap3::write_pointset(A), output_path);
      return 0;
    }

    if (*count) {
      const PointSet A = ap3::load_pointset_file(count_file);
      const ap3::Ap3Report report =
          A.size() > 64 ? ap3::count_ap3_grouped(A, threads) : ap3::count_ap3(A);
      if (count_csv) {
        std::ostringstream out;
        out << "index,weight\n";
        for (std::size_t i = 0; i < report.weights.size(); ++i) {
          out << i << ',' << report.weights[i] << '\n';
        }
        out << "total," << report.total << '\n';
        std::cout << out.str();
      } else {
        ordered_json doc;
        doc["n"] = A.size();
        doc["total"] = report.total;
        doc["weights"] = report.weights;
        if (count_pairs) {
          const ap3::CirclePairs pairs = ap3::circle_pairs(A);
          doc["pairs"] = pairs.pairs;
          doc["pairs0"] = pairs.pairs0;
        }
        std::cout << doc.dump(2) << '\n';
      }
      return 0;
    }

    if (*predict) {
      const Prediction p = predict_value(predict_target, predict_n);
      if (format == "csv") {
        std::cout << "n,value,kind,source\n"
                  << predict_n << ',' << p.value << ',' << prediction_kind_name(p.kind) << ','
                  << p.source << '\n';
      } else {
        ordered_json doc;
        doc["target"] = predict_target;
        doc["n"] = predict_n;
        doc["value"] = p.value;
        doc["kind"] = prediction_kind_name(p.kind);
        doc["source"] = p.source;
        std::cout << doc.dump(2) << '\n';
      }
      return 0;
    }

    if (*table) {
      std::cout << "n,prediction,kind,source\n";
      for (std::uint64_t n = 0; n <= table_n_max; ++n) {
        // Skip sizes where the target is undefined (equator needs n >= 2,
        // the sharpened circle cap needs n mod 4 = 2).
        try {
          const Prediction p = predict_value(table_target, n);
          std::cout << n << ',' << p.value << ',' << prediction_kind_name(p.kind) << ','
                    << p.source << '\n';
        } catch (const std::invalid_argument&) {
        }
      }
      return 0;
    }

    if (*search) {
      const PointSet ground = ap3::load_pointset_file(ground_file);
      const ap3::SearchResult result =
          exhaustive ? ap3::exhaustive_max(ground, search_n, budget, threads)
                     : ap3::stochastic_max(ground, search_n, seed, {}, restarts, threads);
      emit(search_result_json(result, ground).dump(2) + "\n", output_path);
      return 0;
    }

    if (*verify) return run_verify(suite, verify_n_max, format);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
