#include "weft/identities.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "weft/particle.hpp"
#include "weft/partition.hpp"

namespace weft {

namespace {

bool siladic_part_ok(SiladicVariant v, int part) {
  return v == SiladicVariant::odd_parts || part != 2;
}

// gap-plus-congruence rule for a weakly ordered pair big >= small
bool siladic_pair_ok(SiladicVariant v, int big, int small) {
  int gap = big - small;
  if (gap < 0) return false;
  int sum = (big + small) % 16;
  if (v == SiladicVariant::distinct_odd) {
    switch (gap) {
      case 0:
      case 1:
      case 2:
      case 3:
      case 4:
        return false; // gaps are at least 5
      case 5:
        return sum == 3 || sum == 13;
      case 6:
        return sum == 0 || sum == 4 || sum == 8 || sum == 12;
      case 7:
        return sum == 1 || sum == 5 || sum == 7 || sum == 9 || sum == 11 ||
               sum == 15;
      case 8:
        return sum == 0 || sum == 2 || sum == 6 || sum == 8 || sum == 10 ||
               sum == 14;
      default:
        return true;
    }
  }
  switch (gap) {
    case 0:
      return sum == 4 || sum == 12;
    case 1:
      return sum == 3 || sum == 13;
    case 2:
      return sum == 2 || sum == 6 || sum == 10 || sum == 14;
    case 3:
      return sum == 1 || sum == 5 || sum == 7 || sum == 9 || sum == 11 ||
             sum == 15;
    default:
      return true;
  }
}

void euler_rec(SiladicVariant v, int remaining, int max_part,
               std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (p % 2 == 0) continue;
    cur.push_back(p);
    euler_rec(v, remaining - p,
              v == SiladicVariant::distinct_odd ? p - 2 : p, cur, out);
    cur.pop_back();
  }
}

void condition_rec(SiladicVariant v, int remaining, int prev,
                   std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  int hi = std::min(remaining, prev);
  for (int p = hi; p >= 1; --p) {
    if (!siladic_part_ok(v, p)) continue;
    if (!cur.empty() && !siladic_pair_ok(v, prev, p)) continue;
    cur.push_back(p);
    condition_rec(v, remaining - p, p, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<std::vector<int>> siladic_euler_side(SiladicVariant variant,
                                                 int n) {
  if (n < 0) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  euler_rec(variant, n, n, cur, out);
  return out;
}

std::vector<std::vector<int>> siladic_condition_side(SiladicVariant variant,
                                                     int n) {
  if (n < 0) return {};
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  condition_rec(variant, n, n, cur, out);
  return out;
}

SiladicReport check_siladic(SiladicVariant variant, int n_max) {
  if (n_max < 1)
    throw std::invalid_argument("check_siladic: n_max must be >= 1");
  SiladicReport report;
  report.variant = variant;
  report.ok = true;
  for (int n = 1; n <= n_max; ++n) {
    SiladicRow row{n,
                   static_cast<long long>(siladic_euler_side(variant, n).size()),
                   static_cast<long long>(
                       siladic_condition_side(variant, n).size())};
    if (row.lhs != row.rhs) report.ok = false;
    report.rows.push_back(row);
  }
  return report;
}

namespace {

struct LetterInfo {
  std::string base; // label with the bar suffix stripped
  bool barred;
};

LetterInfo letter_info(const EnergyMatrix& e, int state) {
  std::string label = e.states().label(state);
  const std::string suffix = "bar";
  if (label.size() > suffix.size() &&
      label.compare(label.size() - suffix.size(), suffix.size(), suffix) ==
          0) {
    return {label.substr(0, label.size() - suffix.size()), true};
  }
  return {label, false};
}

} // namespace

SecondaryClass overpartition_secondary_class(const EnergyMatrix& e, int upper,
                                             int lower) {
  LetterInfo up = letter_info(e, upper);
  LetterInfo lo = letter_info(e, lower);
  SecondaryClass out;
  out.overlined = up.barred != lo.barred;
  out.parity = e.eps(upper, lower);
  if (up.base == lo.base)
    out.symbol = up.base + "2";
  else
    out.symbol = up.base + lo.base;
  return out;
}

namespace {

// walks every E-side partition over e with all particle halves >= rho and
// energy <= budget, invoking visit at each node (the empty partition
// included)
void e_side_walk(const EnergyMatrix& e, int rho, int budget,
                 std::vector<Particle>& cur,
                 const std::function<void(const std::vector<Particle>&, int)>&
                     visit,
                 int energy) {
  visit(cur, energy);
  int n = e.states().size();
  for (int c = 0; c < n; ++c) {
    for (int k = rho; k <= budget; ++k) {
      Particle p{Primary{k, c}};
      if (!cur.empty() && !rel_gg(e, cur.back(), p)) continue;
      cur.push_back(p);
      e_side_walk(e, rho, budget - k, cur, visit, energy + k);
      cur.pop_back();
    }
  }
  for (int cu = 0; cu < n; ++cu) {
    for (int cl = 0; cl < n; ++cl) {
      int eps = e.eps(cu, cl);
      for (int k = rho; 2 * k + eps <= budget; ++k) {
        Particle p{Secondary{k, cu, cl}};
        if (!cur.empty() && !rel_gg(e, cur.back(), p)) continue;
        cur.push_back(p);
        e_side_walk(e, rho, budget - (2 * k + eps), cur, visit,
                    energy + 2 * k + eps);
        cur.pop_back();
      }
    }
  }
}

} // namespace

TruncatedSeries overpartition_product_series(int q_order) {
  std::vector<std::string> symbols{"a", "b", "c", "d"};
  SeriesBounds bounds{q_order, 0, -1};
  Monomial acq{-1, 1, {{"a", 1}, {"c", 1}}};
  Monomial bcq{-1, 1, {{"b", 1}, {"c", 1}}};
  Monomial adq{1, 1, {{"a", 1}, {"d", 1}}};
  Monomial bdq{1, 1, {{"b", 1}, {"d", 1}}};
  TruncatedSeries out = pochhammer(acq, 1, -1, symbols, bounds);
  out = out * pochhammer(bcq, 1, -1, symbols, bounds);
  out = out * pochhammer_inv(adq, 1, -1, symbols, bounds);
  out = out * pochhammer_inv(bdq, 1, -1, symbols, bounds);
  return out;
}

TruncatedSeries distinct_odd_series(int q_order) {
  return pochhammer(Monomial{-1, 1, {}}, 2, -1, {},
                    SeriesBounds{q_order, 0, -1});
}

TruncatedSeries odd_parts_series(int q_order) {
  return pochhammer_inv(Monomial{1, 1, {}}, 2, -1, {},
                        SeriesBounds{q_order, 0, -1});
}

OverpartitionReport check_overpartition_corollary(int n_max) {
  if (n_max < 0)
    throw std::invalid_argument(
        "check_overpartition_corollary: n_max must be >= 0");
  OverpartitionReport report;
  report.n_max = n_max;

  EnergyMatrix e = overpartition_matrix();
  int idx_bbar = e.states().index_of("bbar");
  int idx_abar = e.states().index_of("abar");
  int idx_a = e.states().index_of("a");
  int idx_b = e.states().index_of("b");

  // A side: positive-potential overpartitions over {a,b}; the letter
  // exponents of the O-side series carry all three statistics
  TruncatedSeries a_series =
      series_from_enumeration(e, Side::O, 1, n_max);
  for (const auto& [exp, c] : a_series.terms()) {
    int u = exp.sym[idx_a] + exp.sym[idx_abar];
    int v = exp.sym[idx_b] + exp.sym[idx_bbar];
    int w = exp.sym[idx_abar] + exp.sym[idx_bbar];
    report.classes[{exp.q, u, v, w}].first +=
        static_cast<long long>(c);
  }

  // B side: difference-condition partitions, with w read from the particles
  // as the corollary states it: over-lined particles once, even ab and odd
  // a2/ba/b2 secondaries twice
  std::vector<Particle> cur;
  auto visit = [&](const std::vector<Particle>& p, int energy) {
    int u = 0, v = 0, w = 0;
    for (const Particle& part : p) {
      if (part.is_primary()) {
        LetterInfo info = letter_info(e, part.primary().state);
        (info.base == "a" ? u : v) += 1;
        if (info.barred) w += 1;
      } else {
        const Secondary& s = part.secondary();
        SecondaryClass cls = overpartition_secondary_class(e, s.upper, s.lower);
        for (char ch : cls.symbol)
          if (ch == 'a')
            u += 1;
          else if (ch == 'b')
            v += 1;
          else if (ch == '2')
            (cls.symbol[0] == 'a' ? u : v) += 1;
        if (cls.overlined) {
          w += 1;
        } else if ((cls.symbol == "ab" && cls.parity == 0) ||
                   (cls.symbol != "ab" && cls.parity == 1)) {
          w += 2;
        }
      }
    }
    report.classes[{energy, u, v, w}].second += 1;
  };
  e_side_walk(e, 1, n_max, cur, visit, 0);

  report.counts_ok = true;
  for (const auto& [key, counts] : report.classes) {
    if (counts.first != counts.second) {
      report.counts_ok = false;
      std::ostringstream os;
      os << "A(" << key[0] << ";" << key[1] << "," << key[2] << "," << key[3]
         << ")=" << counts.first << " but B=" << counts.second;
      report.failures.push_back(os.str());
    }
  }

  // refined generating-function comparison
  std::vector<std::string> symbols{"a", "b", "c", "d"};
  SeriesBounds bounds{n_max, 0, -1};
  TruncatedSeries refined(symbols, bounds);
  for (const auto& [key, counts] : report.classes) {
    auto [n, u, v, w] = key;
    refined.add_term(counts.first, n, {u, v, w, u + v - w});
  }
  TruncatedSeries product = overpartition_product_series(n_max);
  report.gf_ok = refined == product;
  if (!report.gf_ok)
    report.failures.push_back(
        "refined series differs from the Pochhammer quotient");
  return report;
}

} // namespace weft
