#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfa/circuits.hpp"
#include "bfa/classify.hpp"
#include "bfa/generate.hpp"
#include "bfa/harness.hpp"
#include "bfa/influence.hpp"
#include "bfa/report.hpp"
#include "bfa/spectral.hpp"

namespace {

using namespace bfa;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

void print_report_text(const ClassReport& r) {
  auto verdict = [](Verdict v) {
    return v == Verdict::yes ? "yes" : v == Verdict::no ? "no" : "not-applicable";
  };
  std::cout << "bent: " << verdict(r.bent) << "\n";
  std::cout << "plateaued order: ";
  if (r.plateaued_order)
    std::cout << *r.plateaued_order << "\n";
  else
    std::cout << "none\n";
  std::cout << "sac: " << (r.sac ? "yes" : "no");
  if (r.sac_order) std::cout << " (order " << *r.sac_order << ")";
  std::cout << "\n";
  std::cout << "pc degree: " << r.pc_degree << "\n";
  std::cout << "monotone: " << (r.monotone ? "yes" : "no") << "\n";
  if (r.ltf) {
    std::cout << "ltf: " << (r.ltf->member ? "member" : "non-member");
    if (r.ltf->member) {
      std::cout << " weights";
      for (const BigRat& w : r.ltf->weights) std::cout << ' ' << rat_str(w);
    }
    std::cout << "\n";
  } else {
    std::cout << "ltf: skipped (n > " << ltf_max_vars << ")\n";
  }
  std::cout << "chow:";
  for (std::int64_t c : r.chow) std::cout << ' ' << c;
  std::cout << "\n";
}

int run_analysis(const std::string& hex, int n, bool json, bool report_only) {
  TruthTable tt = from_hex(hex, n);
  if (json) {
    std::cout << (report_only ? class_report_json(tt) : analysis_json(tt)) << "\n";
    return 0;
  }
  std::cout << "n=" << tt.n << " tt=" << to_hex(tt) << "\n";
  print_report_text(classify(tt));
  if (!report_only) {
    InfluenceProfile profile = influence_profile(tt, true);
    std::cout << "influence:";
    for (const Dyadic& d : profile.per_variable) std::cout << ' ' << d.str();
    std::cout << "\n";
    std::cout << "total influence: " << profile.total.str() << " ("
              << profile.total.value() << ")\n";
    std::cout << "entropy: " << fourier_entropy(wht(tt)) << "\n";
  }
  return 0;
}

int emit_rows(const std::vector<ExperimentRow>& rows, const std::string& csv_path) {
  for (const ExperimentRow& row : rows) std::cout << row_summary(row) << "\n";
  if (!csv_path.empty()) write_file(csv_path, rows_to_csv(rows));
  return all_pass(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral analysis toolkit for Boolean functions"};
  app.require_subcommand(1);

  // analyze / classify
  std::string tt_hex;
  int tt_n = 0;
  bool as_json = false;
  CLI::App* analyze = app.add_subcommand("analyze", "full spectral/influence analysis");
  analyze->add_option("--tt", tt_hex, "truth table, canonical hex")->required();
  analyze->add_option("-n", tt_n, "variable count")->required();
  analyze->add_flag("--json", as_json, "emit JSON");
  CLI::App* classify_cmd = app.add_subcommand("classify", "class membership report only");
  classify_cmd->add_option("--tt", tt_hex, "truth table, canonical hex")->required();
  classify_cmd->add_option("-n", tt_n, "variable count")->required();
  classify_cmd->add_flag("--json", as_json, "emit JSON");

  // generate
  CLI::App* generate = app.add_subcommand("generate", "construct witness tables");
  generate->require_subcommand(1);
  int gen_m = 1, gen_n = 2, gen_k = 0, gen_d = 1;
  std::uint64_t gen_seed = 0;
  std::string gen_model = "uniform";
  CLI::App* gen_mm = generate->add_subcommand("mm-bent", "Maiorana-McFarland bent function");
  gen_mm->add_option("-m", gen_m, "half-dimension (n = 2m)")->required();
  gen_mm->add_option("--seed", gen_seed, "rng seed");
  CLI::App* gen_pl = generate->add_subcommand("plateaued", "padded k-plateaued function");
  gen_pl->add_option("-n", gen_n, "variable count")->required();
  gen_pl->add_option("-k", gen_k, "plateaued order")->required();
  gen_pl->add_option("--seed", gen_seed, "rng seed");
  CLI::App* gen_ltf = generate->add_subcommand("ltf", "random linear threshold function");
  gen_ltf->add_option("-n", gen_n, "variable count")->required();
  gen_ltf->add_option("--model", gen_model, "uniform|normal")
      ->check(CLI::IsMember({"uniform", "normal"}));
  gen_ltf->add_option("--seed", gen_seed, "rng seed");
  CLI::App* gen_ptf = generate->add_subcommand("ptf", "random polynomial threshold function");
  gen_ptf->add_option("-n", gen_n, "variable count")->required();
  gen_ptf->add_option("-d", gen_d, "degree")->required();
  gen_ptf->add_option("--model", gen_model, "uniform|normal")
      ->check(CLI::IsMember({"uniform", "normal"}));
  gen_ptf->add_option("--seed", gen_seed, "rng seed");
  CLI::App* gen_rand = generate->add_subcommand("random", "uniform random function");
  gen_rand->add_option("-n", gen_n, "variable count")->required();
  gen_rand->add_option("--seed", gen_seed, "rng seed");

  // circuit
  CLI::App* circuit = app.add_subcommand("circuit", "leveled AND/OR circuits");
  circuit->require_subcommand(1);
  std::string circuit_file, dnf_path;
  CLI::App* circ_parse = circuit->add_subcommand("parse", "validate a circuit file");
  circ_parse->add_option("file", circuit_file, "circuit text file")->required();
  CLI::App* circ_eval = circuit->add_subcommand("eval", "evaluate to a truth table");
  circ_eval->add_option("file", circuit_file, "circuit text file")->required();
  circ_eval->add_option("--dnf", dnf_path, "write the canonical DNF of the result");

  // experiment
  CLI::App* experiment = app.add_subcommand("experiment", "desk-scale separation experiments");
  experiment->require_subcommand(1);
  int exp_n = 4, exp_k = 0, exp_d = 1, exp_threads = 0;
  std::uint64_t exp_samples = 10000, exp_seed = 0;
  bool long_run = false;
  std::string csv_path;
  std::vector<int> n_list;
  CLI::App* exp_census = experiment->add_subcommand("census", "exhaustive classification");
  exp_census->add_option("-n", exp_n, "variable count")->required();
  exp_census->add_flag("--long-run", long_run, "allow the n=5 sweep");
  exp_census->add_option("--csv", csv_path, "write rows as CSV");
  exp_census->add_option("--threads", exp_threads, "worker threads (0 = auto)");
  CLI::App* exp_fact2 = experiment->add_subcommand("fact2", "monotone influence bound");
  exp_fact2->add_option("-n", exp_n, "variable count")->required();
  exp_fact2->add_flag("--long-run", long_run, "allow the n=6 enumeration");
  exp_fact2->add_option("--csv", csv_path, "write rows as CSV");
  CLI::App* exp_fact3 = experiment->add_subcommand("fact3", "random-LTF influence bound");
  exp_fact3->add_option("-n", exp_n, "variable count")->required();
  exp_fact3->add_option("--samples", exp_samples, "samples per model");
  exp_fact3->add_option("--seed", exp_seed, "rng seed");
  exp_fact3->add_option("--csv", csv_path, "write rows as CSV");
  CLI::App* exp_fact4 = experiment->add_subcommand("fact4", "padded plateaued witnesses");
  exp_fact4->add_option("-k", exp_k, "plateaued order")->required();
  exp_fact4->add_option("--n-list", n_list, "variable counts")->required()->delimiter(',');
  exp_fact4->add_option("--csv", csv_path, "write rows as CSV");
  CLI::App* exp_probe = experiment->add_subcommand("probe", "PTF influence conjecture probe");
  exp_probe->add_option("-n", exp_n, "variable count")->required();
  exp_probe->add_option("-d", exp_d, "degree")->required();
  exp_probe->add_option("--samples", exp_samples, "samples per model");
  exp_probe->add_option("--seed", exp_seed, "rng seed");
  exp_probe->add_option("--csv", csv_path, "write rows as CSV");

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(analyze)) return run_analysis(tt_hex, tt_n, as_json, false);
    if (app.got_subcommand(classify_cmd)) return run_analysis(tt_hex, tt_n, as_json, true);

    if (app.got_subcommand(generate)) {
      WeightModel kind =
          gen_model == "normal" ? WeightModel::standard_normal : WeightModel::uniform_pm1;
      if (generate->got_subcommand(gen_mm)) {
        TruthTable tt = mm_bent(random_mm_spec(gen_m, gen_seed));
        std::cout << to_hex(tt) << "\n# generate mm-bent m=" << gen_m
                  << " n=" << 2 * gen_m << " seed=" << gen_seed << "\n";
      } else if (generate->got_subcommand(gen_pl)) {
        if (gen_k < 0 || gen_n - gen_k < 2 || (gen_n - gen_k) % 2 != 0)
          throw std::invalid_argument("plateaued: need n - k even and >= 2");
        TruthTable base = mm_bent(random_mm_spec((gen_n - gen_k) / 2, gen_seed));
        TruthTable tt = padded_plateaued(base, gen_k);
        std::cout << to_hex(tt) << "\n# generate plateaued n=" << gen_n
                  << " k=" << gen_k << " seed=" << gen_seed << "\n";
      } else if (generate->got_subcommand(gen_ltf)) {
        LtfSample sample = random_ltf(gen_n, {kind, gen_seed});
        std::cout << to_hex(sample.table) << "\n# generate ltf n=" << gen_n
                  << " model=" << gen_model << " seed=" << gen_seed << "\n# weights";
        for (const BigRat& w : sample.weights) std::cout << ' ' << rat_str(w);
        std::cout << "\n";
      } else if (generate->got_subcommand(gen_ptf)) {
        LtfSample sample = random_ptf(gen_n, gen_d, {kind, gen_seed});
        std::cout << to_hex(sample.table) << "\n# generate ptf n=" << gen_n
                  << " d=" << gen_d << " model=" << gen_model << " seed=" << gen_seed
                  << "\n";
      } else {
        TruthTable tt = random_function(gen_n, gen_seed);
        std::cout << to_hex(tt) << "\n# generate random n=" << gen_n
                  << " seed=" << gen_seed << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(circuit)) {
      Circuit c = parse_circuit(read_file(circuit_file));
      if (circuit->got_subcommand(circ_parse)) {
        std::cout << "ok n=" << c.n << " depth=" << c.depth() << " size=" << c.size()
                  << "\n";
        return 0;
      }
      TruthTable tt = evaluate_circuit(c);
      std::cout << to_hex(tt) << "\n# circuit n=" << c.n << " depth=" << c.depth()
                << " size=" << c.size() << "\n";
      if (!dnf_path.empty()) write_file(dnf_path, print_circuit(canonical_dnf(tt)));
      return 0;
    }

    if (app.got_subcommand(experiment)) {
      if (experiment->got_subcommand(exp_census)) {
        CensusResult result = census(exp_n, long_run, exp_threads);
        std::cout << census_summary(result);
        return emit_rows(census_rows(result), csv_path);
      }
      if (experiment->got_subcommand(exp_fact2))
        return emit_rows(fact2_experiment(exp_n, long_run), csv_path);
      if (experiment->got_subcommand(exp_fact3))
        return emit_rows(fact3_experiment(exp_n, exp_samples, exp_seed), csv_path);
      if (experiment->got_subcommand(exp_fact4))
        return emit_rows(fact4_experiment(exp_k, n_list), csv_path);
      if (experiment->got_subcommand(exp_probe))
        return emit_rows(conjecture_probe(exp_n, exp_d, exp_samples, exp_seed), csv_path);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits 0, usage errors exit 2
  } catch (const CircuitParseError& e) {
    std::cerr << "circuit parse error: " << e.what() << "\n";
    return 2;
  } catch (const guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
