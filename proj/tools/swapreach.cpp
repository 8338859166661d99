// swapreach command-line front end.
//
// Exit status: 0 yes, 1 no, 2 unknown; 3 input error, 4 capability
// mismatch, 5 internal error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "swapreach/formula.hpp"
#include "swapreach/generators.hpp"
#include "swapreach/io.hpp"
#include "swapreach/solve.hpp"
#include "swapreach/twosat.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace swapreach;

namespace {

constexpr int kExitInput = 3;
constexpr int kExitCapability = 4;
constexpr int kExitInternal = 5;

int verdict_status(Verdict v) {
  switch (v) {
    case Verdict::yes: return 0;
    case Verdict::no: return 1;
    case Verdict::unknown: return 2;
  }
  return kExitInternal;
}

json counters_json(const Counters& c) {
  return {{"edge_scans", c.edge_scans}, {"arc_visits", c.arc_visits}, {"swap_edge_steps", c.swap_edge_steps},
          {"pair_checks", c.pair_checks}, {"states", c.states}, {"total", c.total()}};
}

std::string counters_text(const Counters& c) {
  std::ostringstream os;
  os << "edge_scans=" << c.edge_scans << " arc_visits=" << c.arc_visits << " swap_edge_steps=" << c.swap_edge_steps
     << " pair_checks=" << c.pair_checks << " states=" << c.states;
  return os.str();
}

std::string swaps_inline(const SwapSequence& seq) {
  std::string s;
  for (auto [i, j] : seq) {
    if (!s.empty()) s += ' ';
    s += std::to_string(idx(i) + 1) + "-" + std::to_string(idx(j) + 1);
  }
  return s;
}

struct Outcome {
  std::string name;
  std::optional<Decision> decision;
  std::string certificate_path;
  double millis = 0;
  int status = 0;
  std::string error;
  std::string trace;
};

Outcome run_one(const std::string& path, Algorithm algo, const OracleOptions& opts, bool want_trace,
                const std::string& cert_out) {
  Outcome out;
  out.name = path;
  try {
    Instance inst = load_instance(path);
    std::ostringstream trace;
    auto t0 = std::chrono::steady_clock::now();
    Decision d = solve(inst, algo, opts, want_trace ? &trace : nullptr);
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.trace = trace.str();
    if (d.verdict == Verdict::yes && !cert_out.empty()) {
      write_text_file(cert_out, serialize_certificate(d.certificate));
      out.certificate_path = cert_out;
    }
    out.status = verdict_status(d.verdict);
    out.decision = std::move(d);
  } catch (const CapabilityError& e) {
    out.status = kExitCapability;
    out.error = e.what();
  } catch (const InputError& e) {
    out.status = kExitInput;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.status = kExitInternal;
    out.error = std::string("internal error: ") + e.what();
  }
  return out;
}

json outcome_json(const Outcome& o) {
  json j{{"instance", o.name}};
  if (!o.decision) {
    j["error"] = o.error;
    j["status"] = o.status;
    return j;
  }
  const Decision& d = *o.decision;
  j["algorithm"] = d.algorithm;
  j["decision"] = to_string(d.verdict);
  json cert = json::array();
  for (auto [a, b] : d.certificate) cert.push_back({idx(a) + 1, idx(b) + 1});
  j["certificate"] = cert;
  if (!o.certificate_path.empty()) j["certificate_path"] = o.certificate_path;
  j["time_ms"] = o.millis;
  j["counters"] = counters_json(d.counters);
  return j;
}

void print_outcome(const Outcome& o) {
  if (!o.trace.empty()) std::cout << o.trace;
  if (!o.decision) {
    std::cerr << o.name << ": " << o.error << '\n';
    return;
  }
  const Decision& d = *o.decision;
  std::cout << "instance: " << o.name << '\n'
            << "algorithm: " << d.algorithm << '\n'
            << "decision: " << to_string(d.verdict) << '\n';
  if (d.verdict == Verdict::yes) {
    std::cout << "certificate: ";
    if (!o.certificate_path.empty()) std::cout << o.certificate_path << " (" << d.certificate.size() << " swaps)\n";
    else std::cout << (d.certificate.empty() ? "(no swaps)" : swaps_inline(d.certificate)) << '\n';
  }
  std::cout << "time_ms: " << o.millis << '\n' << "counters: " << counters_text(d.counters) << '\n';
}

int report(const std::vector<Outcome>& all, bool as_json) {
  if (as_json) {
    if (all.size() == 1) std::cout << outcome_json(all[0]).dump(2) << '\n';
    else {
      json arr = json::array();
      for (const auto& o : all) arr.push_back(outcome_json(o));
      std::cout << arr.dump(2) << '\n';
    }
  } else {
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (k) std::cout << '\n';
      print_outcome(all[k]);
    }
  }
  for (const auto& o : all)
    if (!o.decision && as_json) std::cerr << o.name << ": " << o.error << '\n';
  if (all.size() == 1) return all[0].status;
  int worst = 0;
  for (const auto& o : all)
    if (o.status > 2) worst = std::max(worst, o.status);
  return worst;
}

std::vector<Outcome> run_batch(const std::string& dir, Algorithm algo, const OracleOptions& opts, bool trace,
                               const std::string& cert_dir) {
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  if (!cert_dir.empty()) fs::create_directories(cert_dir);
  std::vector<Outcome> out(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < files.size();) {
      std::string cert;
      if (!cert_dir.empty()) cert = (fs::path(cert_dir) / (fs::path(files[k]).stem().string() + ".cert")).string();
      out[k] = run_one(files[k], algo, opts, trace, cert);
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") std::cout << text;
  else write_text_file(out_path, text);
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size() || v < 2) throw std::invalid_argument(tok);
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InputError("invalid size '" + tok + "' in --sizes");
    }
  }
  if (sizes.empty()) throw InputError("--sizes needs at least one value");
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reachable Object solver: can a target object reach a target agent by rational swaps?"};
  app.require_subcommand(1);

  std::string input, input_dir, cert_out, algo_name = "auto";
  bool trace = false, as_json = false;
  std::uint64_t max_states = default_max_states();

  auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
  solve_cmd->add_option("--algo", algo_name, "auto|len3|path|oracle")->capture_default_str();
  auto* in_opt = solve_cmd->add_option("--input", input, "instance file");
  auto* dir_opt = solve_cmd->add_option("--input-dir", input_dir, "solve every file in a directory");
  in_opt->excludes(dir_opt);
  solve_cmd->add_option("--certificate", cert_out, "write the certificate here (a directory with --input-dir)");
  solve_cmd->add_flag("--trace", trace, "dump path-solver internals");
  solve_cmd->add_flag("--json", as_json, "machine-readable report");
  solve_cmd->add_option("--max-states", max_states, "oracle state budget");

  std::string verify_input, verify_cert;
  auto* verify_cmd = app.add_subcommand("verify", "replay a certificate");
  verify_cmd->add_option("--input", verify_input, "instance file")->required();
  verify_cmd->add_option("--certificate", verify_cert, "certificate file")->required();
  verify_cmd->add_flag("--json", as_json, "machine-readable report");

  std::string oracle_input, oracle_cert;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search");
  oracle_cmd->add_option("--input", oracle_input, "instance file")->required();
  oracle_cmd->add_option("--max-states", max_states, "state budget");
  oracle_cmd->add_option("--certificate", oracle_cert, "write the certificate here");
  oracle_cmd->add_flag("--json", as_json, "machine-readable report");

  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  std::string cnf, gen_out;
  bool table = false;
  auto* gen_clique = gen_cmd->add_subcommand("sat-clique", "complete-graph reduction from restricted 3-SAT");
  gen_clique->add_option("--cnf", cnf, "DIMACS formula")->required();
  gen_clique->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen_clique->add_flag("--table", table, "print the preference table instead of the instance");
  auto* gen_cat = gen_cmd->add_subcommand("sat-caterpillar", "caterpillar reduction");
  gen_cat->add_option("--cnf", cnf, "DIMACS formula")->required();
  gen_cat->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen_cat->add_flag("--table", table, "print the preference table instead of the instance");
  std::string kind = "path";
  std::size_t n = 8, max_len = 4;
  std::uint64_t seed = 1;
  auto* gen_rand = gen_cmd->add_subcommand("random", "seeded random instance");
  gen_rand->add_option("--kind", kind, "path|cycle|clique|random|planted-path")->capture_default_str();
  gen_rand->add_option("--n", n, "number of agents")->capture_default_str();
  gen_rand->add_option("--seed", seed, "random seed")->capture_default_str();
  gen_rand->add_option("--max-len", max_len, "preference list length bound")->capture_default_str();
  gen_rand->add_option("-o,--output", gen_out, "output file (default stdout)");

  std::string dimacs;
  auto* twosat_cmd = app.add_subcommand("twosat", "solve a 2-CNF formula");
  twosat_cmd->add_option("--dimacs", dimacs, "DIMACS file with clauses of one or two literals")->required();
  twosat_cmd->group("");

  std::string sizes = "50,100,200";
  std::string bench_kind = "path";
  auto* bench_cmd = app.add_subcommand("bench", "time and count operations over instance sizes");
  bench_cmd->add_option("--kind", bench_kind, "path|len3")->capture_default_str();
  bench_cmd->add_option("--sizes", sizes, "comma-separated agent counts")->capture_default_str();
  bench_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  bench_cmd->add_flag("--json", as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve_cmd) {
      if (input.empty() == input_dir.empty()) throw InputError("solve needs exactly one of --input or --input-dir");
      Algorithm algo = parse_algorithm(algo_name);
      OracleOptions opts{max_states};
      std::vector<Outcome> all;
      if (!input.empty()) all.push_back(run_one(input, algo, opts, trace, cert_out));
      else all = run_batch(input_dir, algo, opts, trace, cert_out);
      return report(all, as_json);
    }

    if (*verify_cmd) {
      Instance inst = load_instance(verify_input);
      SwapSequence seq = load_certificate(verify_cert);
      auto check = verify_certificate(inst, seq);
      if (as_json) {
        json j{{"valid", check.valid}, {"swaps", seq.size()}};
        if (!check.valid) {
          j["failure"] = to_string(check.failure);
          if (check.failed_step) j["step"] = *check.failed_step + 1;
          j["message"] = check.message;
        }
        std::cout << j.dump(2) << '\n';
      } else if (check.valid) {
        std::cout << "valid: " << seq.size() << " swaps, target reached\n";
      } else {
        std::cout << "invalid: ";
        if (check.failed_step) std::cout << "swap " << *check.failed_step + 1 << ": ";
        std::cout << check.message << " (" << to_string(check.failure) << ")\n";
      }
      return check.valid ? 0 : 1;
    }

    if (*oracle_cmd) {
      Outcome o = run_one(oracle_input, Algorithm::oracle, OracleOptions{max_states}, false, oracle_cert);
      return report({o}, as_json);
    }

    if (*gen_cmd) {
      if (*gen_clique || *gen_cat) {
        Formula f = load_dimacs(cnf);
        Instance inst = *gen_clique ? gen_clique_instance(f) : gen_caterpillar_instance(f);
        emit(gen_out, table ? render_preference_table(inst) : serialize_instance(inst));
        return 0;
      }
      Instance inst = kind == "planted-path" ? gen_planted_path(n, seed) : gen_random(parse_graph_kind(kind), n, seed, max_len);
      emit(gen_out, serialize_instance(inst));
      return 0;
    }

    if (*twosat_cmd) {
      Formula f = load_dimacs(dimacs);
      TwoSatFormula tf(static_cast<std::size_t>(f.variables));
      auto lit = [](int l) { return Literal{static_cast<std::size_t>(std::abs(l) - 1), l > 0}; };
      for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto& c = f.clauses[j];
        if (c.empty() || c.size() > 2) throw InputError("clause " + std::to_string(j + 1) + " is not a 2-clause");
        tf.add_clause(lit(c[0]), lit(c.back()));
      }
      auto model = solve_2sat(tf);
      if (!model) {
        std::cout << "s UNSATISFIABLE\n";
        return 1;
      }
      std::cout << "s SATISFIABLE\nv";
      for (std::size_t v = 0; v < model->size(); ++v) std::cout << ' ' << ((*model)[v] ? "" : "-") << v + 1;
      std::cout << " 0\n";
      return 0;
    }

    if (*bench_cmd) {
      auto ns = parse_sizes(sizes);
      json rows = json::array();
      if (!as_json) std::cout << "n\tm\ttime_ms\tdecision\twork\t" << "counters\n";
      for (std::size_t size : ns) {
        Instance inst = bench_instance(bench_kind, size, seed);
        auto t0 = std::chrono::steady_clock::now();
        Decision d = bench_kind == "path" ? solve_path(inst) : solve_len3(inst);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (as_json) {
          rows.push_back({{"n", size}, {"m", inst.edge_count()}, {"time_ms", ms}, {"decision", to_string(d.verdict)},
                          {"counters", counters_json(d.counters)}});
        } else {
          std::cout << size << '\t' << inst.edge_count() << '\t' << ms << '\t' << to_string(d.verdict) << '\t'
                    << d.counters.total() << '\t' << counters_text(d.counters) << '\n';
        }
      }
      if (as_json) std::cout << rows.dump(2) << '\n';
      return 0;
    }
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapability;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
