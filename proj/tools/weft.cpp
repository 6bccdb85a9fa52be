// weft: enumerate colored partitions, run the transfer maps, and check the
// identities from the command line.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 unsupported
// request (unbounded enumeration, non-convergent product, rho outside the
// supported window). Output is plain TSV or JSON; no color, no timestamps,
// so identical invocations produce byte-identical output. Slot indices in
// map output are 0-based.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "weft/energy.hpp"
#include "weft/identities.hpp"
#include "weft/io.hpp"
#include "weft/partition.hpp"
#include "weft/selfcheck.hpp"
#include "weft/series.hpp"
#include "weft/transfer.hpp"

using nlohmann::json;
using namespace weft;

namespace {

Side parse_side(const std::string& s) {
  if (s == "O" || s == "o") return Side::O;
  if (s == "E" || s == "e") return Side::E;
  throw std::invalid_argument("bad side '" + s + "' (expected O or E)");
}

Bound parse_bound(const std::string& s) {
  if (s.size() < 2 || (s.back() != '+' && s.back() != '-'))
    throw std::invalid_argument("bad bound '" + s +
                                "' (expected forms like 0+, 1-)");
  int rho = 0;
  try {
    std::size_t used = 0;
    rho = std::stoi(s, &used);
    if (used != s.size() - 1) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad bound '" + s +
                                "' (expected forms like 0+, 1-)");
  }
  return s.back() == '+' ? Bound::at_least(rho) : Bound::at_most(rho);
}

ColorWord parse_word(const EnergyMatrix& e, const std::string& csv) {
  ColorWord w;
  std::istringstream in(csv);
  std::string label;
  while (std::getline(in, label, ','))
    if (!label.empty()) w.push_back(e.states().index_of(label));
  if (w.empty()) throw std::invalid_argument("empty word");
  return w;
}

std::pair<long long, long long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("bad range '" + s + "' (expected lo..hi)");
  long long lo = std::stoll(s.substr(0, dots));
  long long hi = std::stoll(s.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("bad range '" + s + "': lo > hi");
  return {lo, hi};
}

CrossingStrategy parse_strategy(const std::string& s, uint64_t seed) {
  if (s == "leftmost") return CrossingStrategy::leftmost();
  if (s == "rightmost") return CrossingStrategy::rightmost();
  if (s == "random") return CrossingStrategy::seeded_random(seed);
  throw std::invalid_argument("bad strategy '" + s +
                              "' (leftmost|rightmost|random)");
}

// ---- enumerate --------------------------------------------------------------

struct EnumerateOpts {
  std::string energy, side, word, bound, format = "tsv";
  long long n = 0;
  bool count_only = false;
};

int cmd_enumerate(const EnumerateOpts& o) {
  EnergyMatrix e = load_energy_file(o.energy);
  if (o.bound.empty()) {
    std::cerr << "error: unbounded enumeration is infinite; pass --bound "
                 "(e.g. 0+ or 1-)\n";
    return 3;
  }
  auto rows = enumerate_partitions(e, parse_side(o.side), parse_word(e, o.word),
                                   o.n, parse_bound(o.bound));
  if (o.count_only) {
    std::cout << rows.size() << "\n";
    return 0;
  }
  if (o.format == "json") {
    json arr = json::array();
    for (const ColoredPartition& p : rows)
      arr.push_back(json::parse(partition_to_json(e, p)));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const ColoredPartition& p : rows)
      std::cout << partition_tokens(e, p) << "\n";
  }
  return 0;
}

// ---- map --------------------------------------------------------------------

struct MapOpts {
  std::string energy, partition, strategy = "leftmost", scan = "right-to-left";
  std::string format = "tsv";
  uint64_t seed = 0;
  bool predict = false, trace = false;
  bool forward = true;  // phi; false = psi
};

json particle_json(const EnergyMatrix& e, const Particle& p) {
  if (p.is_primary())
    return {{"k", p.primary().k},
            {"state", e.states().label(p.primary().state)}};
  return {{"k", p.secondary().k},
          {"upper", e.states().label(p.secondary().upper)},
          {"lower", e.states().label(p.secondary().lower)}};
}

int cmd_map(const MapOpts& o) {
  EnergyMatrix e = load_energy_file(o.energy);
  ColoredPartition input =
      parse_partition_tokens(e, o.forward ? Side::O : Side::E, o.partition);

  TransferOptions opt;
  opt.strategy = parse_strategy(o.strategy, o.seed);
  if (o.scan == "left-to-right")
    opt.scan = PairScan::left_to_right;
  else if (o.scan != "right-to-left")
    throw std::invalid_argument("bad scan '" + o.scan +
                                "' (left-to-right|right-to-left)");
  if (o.predict && opt.scan == PairScan::left_to_right)
    throw std::invalid_argument(
        "--predict models the default right-to-left scan; drop --scan");
  opt.record_trace = o.trace;

  TransferResult r =
      o.forward ? phi(e, input, opt) : psi(e, input, opt);

  bool agree = true;
  Prediction pred;
  if (o.predict) {
    pred = o.forward ? predict_phi(e, input) : predict_psi(e, input);
    agree = pred.crossings == r.crossings;
    if (o.forward) agree = agree && pred.sigma.to_final == r.sigma.to_final;
  }

  if (o.format == "json") {
    json out;
    out["image"] = json::parse(partition_to_json(e, r.image));
    out["crossings"] = r.crossings;
    out["sigma"] = r.sigma.to_final;
    out["decomposition"] = {{"I", r.decomposition.I},
                            {"J", r.decomposition.J},
                            {"slots", r.decomposition.s}};
    if (o.predict) {
      out["predict"] = {{"crossings", pred.crossings},
                        {"table", pred.table},
                        {"agreement", agree}};
      json pairs = json::array();
      for (auto [j, i] : pred.crossing_pairs) pairs.push_back({j, i});
      out["predict"]["pairs"] = pairs;
    }
    if (o.trace) {
      json tr = json::array();
      for (const TraceEvent& ev : r.trace)
        tr.push_back({{"slot", ev.slot},
                      {"before", {particle_json(e, ev.before_left),
                                  particle_json(e, ev.before_right)}},
                      {"after", {particle_json(e, ev.after_left),
                                 particle_json(e, ev.after_right)}}});
      out["trace"] = tr;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "image\t" << partition_tokens(e, r.image) << "\n";
    std::cout << "crossings\t" << r.crossings << "\n";
    if (o.predict) {
      std::cout << "predict-crossings\t" << pred.crossings << "\n";
      for (const auto& row : pred.table) {
        std::cout << "predict-table";
        for (int v : row) std::cout << "\t" << v;
        std::cout << "\n";
      }
      for (auto [j, i] : pred.crossing_pairs)
        std::cout << "predict-pair\t" << j << "\t" << i << "\n";
      std::cout << "agreement\t" << (agree ? "ok" : "FAIL") << "\n";
    }
    if (o.trace)
      for (const TraceEvent& ev : r.trace)
        std::cout << "trace\t" << ev.slot << "\t"
                  << particle_token(e, ev.before_left) << "+"
                  << particle_token(e, ev.before_right) << "\t->\t"
                  << particle_token(e, ev.after_left) << "+"
                  << particle_token(e, ev.after_right) << "\n";
  }
  return agree ? 0 : 1;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify_diffmatrix(const std::string& energy,
                          const std::string& expect_path) {
  EnergyMatrix e = load_energy_file(energy);
  DifferenceMatrix got = difference_matrix(e);

  std::ifstream in(expect_path);
  if (!in) throw std::invalid_argument("cannot open " + expect_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  DifferenceMatrix want = difference_matrix_from_json(buf.str());

  if (got.labels != want.labels) {
    std::cout << "fail\tlabel rows differ\n";
    return 1;
  }
  for (size_t i = 0; i < got.entries.size(); ++i)
    for (size_t j = 0; j < got.entries[i].size(); ++j)
      if (got.entries[i][j] != want.entries[i][j]) {
        std::cout << "fail\tentry (" << got.labels[i] << "," << got.labels[j]
                  << ") computed " << got.entries[i][j] << " expected "
                  << want.entries[i][j] << "\n";
        return 1;
      }
  if (got.secondary_parity != want.secondary_parity) {
    std::cout << "fail\tsecondary parity rows differ\n";
    return 1;
  }
  std::cout << "pass\n";
  return 0;
}

int cmd_verify_siladic(const std::string& variant, int n_max,
                       const std::string& format) {
  SiladicVariant v;
  if (variant == "odd")
    v = SiladicVariant::odd_parts;
  else if (variant == "distinct-odd")
    v = SiladicVariant::distinct_odd;
  else
    throw std::invalid_argument("bad variant '" + variant +
                                "' (odd|distinct-odd)");
  SiladicReport rep = check_siladic(v, n_max);
  if (format == "json") {
    json rows = json::array();
    for (const SiladicRow& row : rep.rows)
      rows.push_back(
          {{"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}});
    std::cout << json{{"variant", variant}, {"rows", rows}, {"ok", rep.ok}}
                     .dump(2)
              << "\n";
  } else {
    for (const SiladicRow& row : rep.rows)
      std::cout << row.n << "\t" << row.lhs << "\t" << row.rhs << "\t"
                << (row.lhs == row.rhs ? "equal" : "DIFFER") << "\n";
    std::cout << (rep.ok ? "pass" : "fail") << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_verify_bijection(const std::string& energy, const std::string& word_csv,
                         const std::string& range_str,
                         const std::string& bound_str) {
  EnergyMatrix e = load_energy_file(energy);
  ColorWord w = parse_word(e, word_csv);
  auto [lo, hi] = parse_range(range_str);
  Bound b = parse_bound(bound_str);

  bool ok = true;
  for (long long n = lo; n <= hi; ++n) {
    auto o_side = enumerate_partitions(e, Side::O, w, n, b);
    auto e_side = enumerate_partitions(e, Side::E, w, n, b);
    std::string note = "ok";
    if (o_side.size() != e_side.size()) {
      note = "COUNTS DIFFER";
      ok = false;
    } else {
      std::multiset<std::string> targets;
      for (const ColoredPartition& p : e_side)
        targets.insert(partition_tokens(e, p));
      for (const ColoredPartition& p : o_side) {
        TransferResult fwd = phi(e, p);
        auto it = targets.find(partition_tokens(e, fwd.image));
        if (it == targets.end() || psi(e, fwd.image).image != p) {
          note = "MAP FAILS at " + partition_tokens(e, p);
          ok = false;
          break;
        }
        targets.erase(it);
      }
    }
    std::cout << n << "\t" << o_side.size() << "\t" << e_side.size() << "\t"
              << note << "\n";
  }
  std::cout << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : 1;
}

int cmd_verify_series(const std::string& energy, int rho, int q_order,
                      int sym_order, int x_order) {
  EnergyMatrix e = load_energy_file(energy);
  if (x_order >= 0)
    std::cout << "F\t" << base_function_F(e, x_order).str() << "\n";
  if (rho == 0 && sym_order < 0) {
    std::cerr << "error: at rho 0 the m=0 factor needs a color-degree cap; "
                 "pass --sym-order\n";
    return 3;
  }
  int cap = sym_order >= 0 ? sym_order : q_order;
  TruncatedSeries product = euler_product(e, rho, q_order, cap);
  std::cout << "product-terms\t" << product.term_count() << "\n";
  for (Side side : {Side::O, Side::E}) {
    TruncatedSeries counted =
        series_from_enumeration(e, side, rho, q_order, cap);
    const char* name = side == Side::O ? "O" : "E";
    if (counted == product) {
      std::cout << name << "\tmatch\n";
      continue;
    }
    for (const auto& [exp, c] : product.terms()) {
      Coeff other = counted.coeff(exp.q, exp.sym);
      if (other != c) {
        std::cout << name << "\tMISMATCH at q^" << exp.q << ": enumeration "
                  << other.str() << ", product " << c.str() << "\n";
        break;
      }
    }
    for (const auto& [exp, c] : counted.terms())
      if (product.coeff(exp.q, exp.sym) != c) {
        std::cout << name << "\tMISMATCH at q^" << exp.q << ": enumeration "
                  << c.str() << ", product 0\n";
        break;
      }
    std::cout << "fail\n";
    return 1;
  }
  std::cout << "pass\n";
  return 0;
}

int cmd_verify_overpartition(int n_max) {
  OverpartitionReport rep = check_overpartition_corollary(n_max);
  std::cout << "classes\t" << rep.classes.size() << "\n";
  std::cout << "counts\t" << (rep.counts_ok ? "ok" : "FAIL") << "\n";
  std::cout << "series\t" << (rep.gf_ok ? "ok" : "FAIL") << "\n";
  for (const std::string& f : rep.failures) std::cout << "failure\t" << f << "\n";
  std::cout << (rep.ok() ? "pass" : "fail") << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_verify_selfcheck(uint64_t seed, int trials) {
  SelfCheckReport rep = run_selfcheck(seed, trials);
  for (const PropertyResult& suite : rep.suites) {
    std::cout << suite.name << "\t" << suite.trials << "\t"
              << (suite.ok() ? "ok" : "FAIL") << "\n";
    for (const std::string& f : suite.failures)
      std::cout << "failure\t" << suite.name << "\t" << f << "\n";
  }
  std::cout << (rep.ok() ? "pass" : "fail") << "\n";
  return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"colored-partition energy transfer toolkit"};
  app.require_subcommand(1);

  EnumerateOpts eo;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List partitions of a given word, energy, and window");
  enumerate->add_option("--energy", eo.energy, "energy matrix JSON file")
      ->required();
  enumerate->add_option("--side", eo.side, "O (primaries) or E (mixed)")
      ->required();
  enumerate->add_option("--word", eo.word, "comma-separated state labels")
      ->required();
  enumerate->add_option("--n", eo.n, "total energy")->required();
  enumerate->add_option("--bound", eo.bound,
                        "potential window: <rho>+ or <rho>- (e.g. 0+, 1-)");
  enumerate->add_flag("--count-only", eo.count_only, "print the cardinality");
  enumerate->add_option("--format", eo.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  MapOpts mo;
  CLI::App* map_cmd = app.add_subcommand("map", "Apply phi or psi");
  map_cmd->require_subcommand(1);
  CLI::App* map_phi = map_cmd->add_subcommand("phi", "O -> E forward map");
  CLI::App* map_psi = map_cmd->add_subcommand("psi", "E -> O inverse map");
  for (CLI::App* sub : {map_phi, map_psi}) {
    sub->add_option("--energy", mo.energy, "energy matrix JSON file")
        ->required();
    sub->add_option("--partition", mo.partition,
                    "particle tokens, e.g. 11:bbar,5*b.a,...")
        ->required();
    sub->add_option("--strategy", mo.strategy,
                    "crossing order: leftmost|rightmost|random");
    sub->add_option("--seed", mo.seed, "seed for --strategy random");
    sub->add_option("--scan", mo.scan,
                    "pairing scan: right-to-left|left-to-right");
    sub->add_flag("--predict", mo.predict,
                  "print the predictor table and check it against the run");
    sub->add_flag("--trace", mo.trace, "print every crossing");
    sub->add_option("--format", mo.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
  }

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);

  std::string v_energy, v_expect;
  CLI::App* v_diff = verify->add_subcommand(
      "diffmatrix", "difference_matrix(energy) against a stored table");
  v_diff->add_option("--energy", v_energy, "energy matrix JSON file")
      ->required();
  v_diff->add_option("--expect", v_expect, "expected difference-matrix JSON")
      ->required();

  std::string s_variant = "odd", s_format = "tsv";
  int s_nmax = 10;
  CLI::App* v_sil = verify->add_subcommand(
      "siladic", "count identity, euler side vs condition side");
  v_sil->add_option("--variant", s_variant, "odd or distinct-odd");
  v_sil->add_option("--n-max", s_nmax, "check n = 1..n-max");
  v_sil->add_option("--format", s_format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  std::string b_energy, b_word, b_range, b_bound;
  CLI::App* v_bij = verify->add_subcommand(
      "bijection", "count symmetry plus phi/psi round trip per energy");
  v_bij->add_option("--energy", b_energy, "energy matrix JSON file")
      ->required();
  v_bij->add_option("--word", b_word, "comma-separated state labels")
      ->required();
  v_bij->add_option("--n-range", b_range, "inclusive range lo..hi")
      ->required();
  v_bij->add_option("--bound", b_bound, "potential window, e.g. 0+")
      ->required();

  std::string se_energy;
  int se_rho = 1, se_q = 8, se_sym = -1, se_x = -1;
  CLI::App* v_ser = verify->add_subcommand(
      "series", "enumeration series against the euler product");
  v_ser->add_option("--energy", se_energy, "energy matrix JSON file")
      ->required();
  v_ser->add_option("--rho", se_rho, "window 0 or 1")
      ->check(CLI::IsMember({0, 1}));
  v_ser->add_option("--q-order", se_q, "q truncation order");
  v_ser->add_option("--sym-order", se_sym,
                    "color-degree cap (required at rho 0)");
  v_ser->add_option("--x-order", se_x,
                    "also print the base function F to this x order");

  int o_nmax = 8;
  CLI::App* v_over = verify->add_subcommand(
      "overpartition", "refined two-color corollary, counts and series");
  v_over->add_option("--n-max", o_nmax, "check energies 0..n-max");

  uint64_t sc_seed = 42;
  int sc_trials = 200;
  CLI::App* v_self = verify->add_subcommand(
      "selfcheck", "randomized structural property suites");
  v_self->add_option("--seed", sc_seed, "suite seed");
  v_self->add_option("--trials", sc_trials, "trials per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(eo);
    if (map_cmd->parsed()) {
      mo.forward = map_phi->parsed();
      return cmd_map(mo);
    }
    if (v_diff->parsed()) return cmd_verify_diffmatrix(v_energy, v_expect);
    if (v_sil->parsed()) return cmd_verify_siladic(s_variant, s_nmax, s_format);
    if (v_bij->parsed())
      return cmd_verify_bijection(b_energy, b_word, b_range, b_bound);
    if (v_ser->parsed())
      return cmd_verify_series(se_energy, se_rho, se_q, se_sym, se_x);
    if (v_over->parsed()) return cmd_verify_overpartition(o_nmax);
    if (v_self->parsed()) return cmd_verify_selfcheck(sc_seed, sc_trials);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
