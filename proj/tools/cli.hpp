#pragma once

// Command-line front end. run_cli parses arguments, dispatches to the
// library and writes one JSON (or CSV) document to `out`; failures write a
// JSON error document to `err` and return a nonzero exit status.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nckit/json_io.hpp"
#include "nckit/nckit.hpp"
#include "nckit/verify.hpp"

namespace nckit::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int resource = 3;
inline constexpr int numerical = 4;
inline constexpr int io = 5;
}  // namespace exit_code

struct Options {
  int n = 0;
  int d = 0;
  std::size_t k = 2;
  std::size_t order = 0;
  std::string family = "free";
  double tol = 1e-9;
  std::size_t max_iterations = 100000;
  std::string format = "json";
  std::string out_path;
  std::optional<std::size_t> cap;
  std::uint64_t seed = 20240601;
  std::string partition;
  std::vector<std::string> seqs;
  std::vector<int> band;
  std::string suite = "all";
  bool recursion = false;
};

/// --cap, else NCKIT_CAP, else the operation's default.
inline std::size_t resolve_cap(const Options& o, std::size_t fallback) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("NCKIT_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw invalid_input("NCKIT_CAP must be a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
  return fallback;
}

inline json error_document(std::string_view kind, const std::string& message) {
  return json{{"error", json{{"kind", kind}, {"message", message}}}};
}

struct Output {
  std::string text;
  int status = exit_code::ok;
};

inline Output as_json(const json& j, int status = exit_code::ok) { return {j.dump(2) + "\n", status}; }

inline void require_format(const Options& o, bool csv_supported) {
  if (o.format == "csv" && !csv_supported) throw invalid_input("--format csv is not supported by this command");
}

inline std::string csv_cell(const Blocks& blocks) { return '"' + blocks_to_json(blocks).dump() + '"'; }

inline Output cmd_enumerate(const Options& o) {
  require_format(o, true);
  const Family family = parse_family(o.family);
  const std::size_t cap = resolve_cap(o, detail::family_cap(family));
  check_cap("enumerate", static_cast<std::size_t>(o.n), cap);
  const auto parts = with_family(family, [&](auto lattice) {
    using L = decltype(lattice);
    std::vector<Blocks> out;
    for (const auto& p : L::enumerate(o.n, cap)) out.push_back(p.blocks());
    return out;
  });
  if (o.format == "csv") {
    std::string text = "partition,blocks\n";
    for (const auto& b : parts) text += csv_cell(b) + ',' + std::to_string(b.size()) + '\n';
    return {text};
  }
  json list = json::array();
  for (const auto& b : parts) list.push_back(blocks_to_json(b));
  return as_json(json{{"family", family_name(family)}, {"n", o.n}, {"count", parts.size()}, {"partitions", list}});
}

inline Output cmd_matrix(const Options& o) {
  require_format(o, true);
  const auto m = incidence_matrix(o.n, resolve_cap(o, caps::incidence_matrix));
  if (o.format == "csv") return {to_csv(m)};
  return as_json(to_json(m));
}

inline Output cmd_count(const Options& o) {
  require_format(o, false);
  const auto total = count_braids(o.n, o.d, resolve_cap(o, caps::incidence_matrix));
  return as_json(json{{"n", o.n}, {"d", o.d}, {"count", to_string(total)}});
}

inline Output cmd_count_by_last(const Options& o) {
  require_format(o, true);
  const auto counts = count_by_last(o.n, o.d, resolve_cap(o, caps::incidence_matrix));
  if (o.format == "csv") {
    std::string text = "partition,count\n";
    for (std::size_t i = 0; i < counts.order.size(); ++i)
      text += csv_cell(counts.order[i].blocks()) + ',' + to_string(counts.values[i]) + '\n';
    return {text};
  }
  return as_json(to_json(counts));
}

inline Output cmd_det(const Options& o) {
  require_format(o, false);
  const auto det = determinant_exact(o.n, resolve_cap(o, caps::determinant));
  return as_json(json{{"n", o.n}, {"determinant", to_string(det)}, {"formula", to_string(determinant_formula(o.n))}});
}

inline Output cmd_det_formula(const Options& o) {
  require_format(o, false);
  return as_json(json{{"n", o.n}, {"formula", to_string(determinant_formula(o.n))}});
}

inline Output cmd_spectral(const Options& o) {
  require_format(o, false);
  const auto est = spectral_radius(o.n, o.tol, resolve_cap(o, caps::spectral), o.max_iterations);
  return as_json(json{{"n", o.n},
                      {"tol", o.tol},
                      {"value", est.value},
                      {"achieved_tolerance", est.achieved_tolerance},
                      {"converged", est.converged},
                      {"iterations", est.iterations},
                      {"lower_bound", est.lower_bound},
                      {"upper_bound", est.upper_bound},
                      {"max_row_sum", est.max_row_sum}});
}

inline NcPartition partition_arg(const Options& o) {
  if (o.partition.empty()) throw invalid_input("--partition is required");
  return parse_nc_partition(o.partition);
}

inline Output cmd_kreweras(const Options& o) {
  require_format(o, false);
  const auto p = partition_arg(o);
  const auto k = kreweras(p);
  return as_json(json{{"n", p.size()}, {"partition", blocks_to_json(p.blocks())}, {"complement", blocks_to_json(k.blocks())}});
}

inline Output cmd_mobius(const Options& o) {
  require_format(o, false);
  const auto p = partition_arg(o);
  const auto value = o.recursion ? mobius_oracle(p, resolve_cap(o, caps::mobius_oracle)) : mobius_to_zero(p);
  return as_json(json{{"partition", blocks_to_json(p.blocks())},
                      {"method", o.recursion ? "recursion" : "product"},
                      {"mobius", to_string(value)}});
}

inline ExactSeq single_seq(const Options& o, SeqRole role) {
  if (o.seqs.size() != 1) throw invalid_input("exactly one --seq is required");
  return parse_sequence_list(o.seqs.front(), role);
}

inline Output cmd_moments(const Options& o) {
  require_format(o, false);
  const Family family = parse_family(o.family);
  const auto r = single_seq(o, SeqRole::cumulants);
  check_cap("moments", r.length(), resolve_cap(o, detail::family_cap(family)));
  return as_json(json{{"family", family_name(family)}, {"cumulants", to_json(r)},
                      {"moments", to_json(moments_from_cumulants(r, family))}});
}

inline Output cmd_cumulants(const Options& o) {
  require_format(o, false);
  const Family family = parse_family(o.family);
  const auto m = single_seq(o, SeqRole::moments);
  check_cap("cumulants", m.length(), resolve_cap(o, detail::family_cap(family)));
  return as_json(json{{"family", family_name(family)}, {"moments", to_json(m)},
                      {"cumulants", to_json(cumulants_from_moments(m, family))}});
}

inline Output cmd_product_cumulants(const Options& o) {
  require_format(o, false);
  const Family family = parse_family(o.family);
  if (o.seqs.empty()) throw invalid_input("at least one --seq is required");
  std::vector<ExactSeq> rs;
  json factors = json::array();
  for (const auto& text : o.seqs) {
    rs.push_back(parse_sequence_list(text, SeqRole::cumulants));
    factors.push_back(to_json(rs.back()));
  }
  std::size_t order = o.order;
  if (order == 0) {
    order = rs.front().length();
    for (const auto& r : rs) order = std::min(order, r.length());
  }
  const auto product = product_cumulants(rs, family, order);
  return as_json(json{{"family", family_name(family)}, {"order", order}, {"factors", factors},
                      {"cumulants", to_json(product)}});
}

inline Output cmd_join_count(const Options& o) {
  require_format(o, false);
  const Family family = parse_family(o.family);
  const auto count = count_joining_tuples(family, o.n, o.k);
  return as_json(json{{"family", family_name(family)}, {"n", o.n}, {"k", o.k}, {"count", to_string(count)}});
}

inline Output cmd_solve_r(const Options& o) {
  require_format(o, false);
  const auto m = single_seq(o, SeqRole::moments);
  const auto series = FormalSeries::from_sequence(m);
  const auto r = series_solve_R(series);
  return as_json(json{{"moments", to_json(m)}, {"R", to_json(r.to_sequence(SeqRole::cumulants))},
                      {"check", series_compose_check(series, r)}});
}

inline Output cmd_braid_word(const Options& o) {
  require_format(o, false);
  std::optional<BraidWord> word;
  json source;
  if (!o.band.empty()) {
    if (o.band.size() != 2) throw invalid_input("--band takes two strand indices i,j");
    if (!o.partition.empty()) throw invalid_input("--band and --partition are mutually exclusive");
    word = band_generator(o.band[0], o.band[1], o.n);
    source = json{{"band", o.band}, {"n", o.n}};
  } else {
    const auto p = partition_arg(o);
    word = partition_to_braid(p);
    source = json{{"partition", blocks_to_json(p.blocks())}, {"n", p.size()}};
  }
  return as_json(json{{"input", source}, {"word", to_json(*word)}, {"permutation", to_json(braid_to_permutation(*word))}});
}

inline Output cmd_verify(const Options& o) {
  require_format(o, false);
  std::vector<std::string> names;
  if (o.suite == "all") names = suite_names();
  else names.push_back(o.suite);
  json reports = json::array();
  bool all_passed = true;
  for (const auto& name : names) {
    const auto report = run_suite(name, o.seed);
    all_passed = all_passed && report.passed();
    reports.push_back(to_json(report));
  }
  return as_json(json{{"seed", o.seed}, {"passed", all_passed}, {"suites", reports}},
                 all_passed ? exit_code::ok : exit_code::verification_failed);
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Noncrossing partitions, dual braid counts and cumulant transforms", "nckit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out_path, "Write the document to this file instead of stdout");
  app.add_option("--cap", o.cap, "Override the size cap (also NCKIT_CAP)");
  app.add_option("--seed", o.seed, "Seed for randomized verification");

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Number of points / strands")->required(); };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "free | classical | boolean")
        ->check(CLI::IsMember({"free", "classical", "boolean"}));
  };
  auto add_partition = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--partition", o.partition, R"(JSON such as {"n":4,"blocks":[[1,4],[2,3]]})");
    if (required) opt->required();
  };

  std::vector<std::pair<CLI::App*, Output (*)(const Options&)>> commands;
  auto command = [&](const char* name, const char* help, Output (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* enumerate = command("enumerate", "List the partitions of a family", cmd_enumerate);
  add_n(enumerate);
  add_family(enumerate);
  add_n(command("matrix", "Incidence matrix of normal pairs", cmd_matrix));
  auto* count = command("count", "Number of dual positive braids of normal length at most d", cmd_count);
  add_n(count);
  count->add_option("--d", o.d, "Number of factors")->required();
  auto* by_last = command("count-by-last", "Counts split by last normal-form factor", cmd_count_by_last);
  add_n(by_last);
  by_last->add_option("--d", o.d, "Number of factors")->required();
  add_n(command("det", "Exact determinant of the incidence matrix", cmd_det));
  add_n(command("det-formula", "Closed form for the determinant", cmd_det_formula));
  auto* spectral = command("spectral", "Spectral radius by power iteration", cmd_spectral);
  add_n(spectral);
  spectral->add_option("--tol", o.tol, "Stopping tolerance")->check(CLI::PositiveNumber);
  spectral->add_option("--max-iter", o.max_iterations, "Iteration budget");
  add_partition(command("kreweras", "Kreweras complement", cmd_kreweras), true);
  auto* mobius = command("mobius", "Mobius function from the bottom element", cmd_mobius);
  add_partition(mobius, true);
  mobius->add_flag("--recursion", o.recursion, "Use the interval recursion instead of the product formula");
  for (auto [name, help, fn] : {std::tuple{"moments", "Moments from cumulants", cmd_moments},
                                std::tuple{"cumulants", "Cumulants from moments", cmd_cumulants},
                                std::tuple{"solve-r", "Solve R(zM(z)) = M(z) for R", cmd_solve_r}}) {
    auto* sub = command(name, help, fn);
    sub->add_option("--seq", o.seqs, "Comma-separated rationals, e.g. 1,1/2,-3")->required();
    if (std::string_view(name) != "solve-r") add_family(sub);
  }
  auto* product = command("product-cumulants", "Cumulants of the pointwise product of moment sequences",
                          cmd_product_cumulants);
  product->add_option("--seq", o.seqs, "Cumulant sequence of one factor; repeat per factor")->required();
  product->add_option("--order", o.order, "Truncation order (default: shortest input)");
  add_family(product);
  auto* joins = command("join-count", "Tuples of partitions joining to the top element", cmd_join_count);
  add_n(joins);
  add_family(joins);
  joins->add_option("--k", o.k, "Tuple length")->required();
  auto* braid = command("braid-word", "Braid word of a partition or band generator", cmd_braid_word);
  add_partition(braid, false);
  braid->add_option("--band", o.band, "Band generator i,j")->delimiter(',')->expected(2);
  braid->add_option("--n", o.n, "Strands for --band");
  auto* verify = command("verify", "Run verification suites", cmd_verify);
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify->add_option("--suite", o.suite, "Suite name or all")->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << error_document("usage", e.what()).dump(2) << "\n";
    return exit_code::usage;
  }

  Output result;
  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) result = fn(o);
  } catch (const resource_limit& e) {
    err << json{{"error", json{{"kind", "resource_limit"}, {"message", e.what()},
                               {"requested", e.requested()}, {"cap", e.cap()}}}}.dump(2)
        << "\n";
    return exit_code::resource;
  } catch (const numerical_failure& e) {
    err << json{{"error", json{{"kind", "numerical_failure"}, {"message", e.what()},
                               {"last_estimate", e.last_estimate()}, {"last_iterate", e.last_iterate()}}}}.dump(2)
        << "\n";
    return exit_code::numerical;
  } catch (const invalid_input& e) {
    err << error_document("invalid_input", e.what()).dump(2) << "\n";
    return exit_code::usage;
  }

  if (o.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    file << result.text;
    if (!file) {
      err << error_document("io", "cannot write " + o.out_path).dump(2) << "\n";
      return exit_code::io;
    }
  }
  return result.status;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"nckit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nckit::cli
