#include "weft/series.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace weft {

TruncatedSeries::TruncatedSeries(std::vector<std::string> symbols,
                                 SeriesBounds bounds)
    : symbols_(std::move(symbols)), bounds_(bounds) {
  if (bounds_.q_floor > 0)
    throw std::invalid_argument("series: q_floor must be <= 0");
  if (bounds_.q_order < bounds_.q_floor)
    throw std::invalid_argument("series: empty q window");
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    for (std::size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i] == symbols_[j])
        throw std::invalid_argument("series: duplicate symbol " + symbols_[i]);
}

TruncatedSeries TruncatedSeries::one(std::vector<std::string> symbols,
                                     SeriesBounds bounds) {
  TruncatedSeries s(std::move(symbols), bounds);
  s.add_term(1, 0, std::vector<int>(s.symbols_.size(), 0));
  return s;
}

int TruncatedSeries::symbol_index(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("series: unknown symbol " + name);
}

bool TruncatedSeries::inside_window(int q_exp,
                                    const std::vector<int>& sym_exps) const {
  if (q_exp > bounds_.q_order || q_exp < bounds_.q_floor) return false;
  if (bounds_.sym_order >= 0) {
    long long total = 0;
    for (int e : sym_exps) total += e;
    if (total > bounds_.sym_order) return false;
  }
  return true;
}

void TruncatedSeries::add_term(const Coeff& c, int q_exp,
                               const std::vector<int>& sym_exps) {
  if (sym_exps.size() != symbols_.size())
    throw std::invalid_argument("series: exponent vector has wrong length");
  if (c == 0 || !inside_window(q_exp, sym_exps)) return;
  Exponents key{q_exp, sym_exps};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::add_term(const Monomial& m) {
  std::vector<int> exps(symbols_.size(), 0);
  for (const auto& [name, e] : m.sym_exps) exps[symbol_index(name)] = e;
  add_term(m.coeff, m.q_exp, exps);
}

Coeff TruncatedSeries::coeff(int q_exp,
                             const std::vector<int>& sym_exps) const {
  if (sym_exps.size() != symbols_.size())
    throw std::invalid_argument("series: exponent vector has wrong length");
  auto it = terms_.find(Exponents{q_exp, sym_exps});
  return it == terms_.end() ? Coeff(0) : it->second;
}

Coeff TruncatedSeries::coeff_q(int q_exp) const {
  Coeff total = 0;
  for (const auto& [exp, c] : terms_)
    if (exp.q == q_exp) total += c;
  return total;
}

void TruncatedSeries::mul_monomial(const Coeff& c, int q_exp,
                                   const std::vector<int>& sym_exps) {
  if (sym_exps.size() != symbols_.size())
    throw std::invalid_argument("series: exponent vector has wrong length");
  std::map<Exponents, Coeff> shifted;
  if (c != 0) {
    for (const auto& [exp, old] : terms_) {
      Exponents key{exp.q + q_exp, exp.sym};
      for (std::size_t i = 0; i < key.sym.size(); ++i) key.sym[i] += sym_exps[i];
      if (!inside_window(key.q, key.sym)) continue;
      shifted.emplace(std::move(key), old * c);
    }
  }
  terms_ = std::move(shifted);
}

void TruncatedSeries::mul_monomial(const Monomial& m) {
  std::vector<int> exps(symbols_.size(), 0);
  for (const auto& [name, e] : m.sym_exps) exps[symbol_index(name)] = e;
  mul_monomial(m.coeff, m.q_exp, exps);
}

void TruncatedSeries::require_compatible(const TruncatedSeries& rhs) const {
  if (symbols_ != rhs.symbols_ || !(bounds_ == rhs.bounds_))
    throw std::invalid_argument(
        "series: incompatible symbol lists or truncation bounds");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_compatible(rhs);
  for (const auto& [exp, c] : rhs.terms_) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_compatible(rhs);
  for (const auto& [exp, c] : rhs.terms_) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b);
  TruncatedSeries out(a.symbols_, a.bounds_);
  const TruncatedSeries& small = a.term_count() <= b.term_count() ? a : b;
  const TruncatedSeries& large = a.term_count() <= b.term_count() ? b : a;
  std::vector<int> sym(a.symbols_.size());
  for (const auto& [ea, ca] : small.terms_) {
    for (const auto& [eb, cb] : large.terms_) {
      int q = ea.q + eb.q;
      if (q > a.bounds_.q_order || q < a.bounds_.q_floor) continue;
      for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = ea.sym[i] + eb.sym[i];
      out.add_term(ca * cb, q, sym);
    }
  }
  return out;
}

std::string TruncatedSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    Coeff abs = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> parts;
    if (exp.q == 1) {
      parts.push_back("q");
    } else if (exp.q != 0) {
      parts.push_back("q^" + std::to_string(exp.q));
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (exp.sym[i] == 0) continue;
      if (exp.sym[i] == 1)
        parts.push_back(symbols_[i]);
      else
        parts.push_back(symbols_[i] + "^" + std::to_string(exp.sym[i]));
    }
    if (parts.empty()) {
      os << abs.str();
    } else {
      if (abs != 1) os << abs.str() << "*";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "*";
        os << parts[i];
      }
    }
  }
  return os.str();
}

namespace {

// iteration allowance for geometric expansions before declaring divergence
long long geometric_cap(const SeriesBounds& b) {
  long long window = static_cast<long long>(b.q_order) - b.q_floor + 1;
  long long sym = b.sym_order >= 0 ? b.sym_order + 1 : 1;
  return window * sym + 4;
}

} // namespace

TruncatedSeries geometric_inverse(const TruncatedSeries& u) {
  const SeriesBounds& b = u.bounds();
  if (u.coeff(0, std::vector<int>(u.symbols().size(), 0)) != 0)
    throw std::domain_error(
        "geometric expansion needs a zero constant term");
  if (b.sym_order < 0) {
    bool all_pos = true, all_neg = true;
    for (const auto& [exp, c] : u.terms()) {
      (void)c;
      if (exp.q < 1) all_pos = false;
      if (exp.q > -1) all_neg = false;
    }
    if (!u.zero() && !all_pos && !all_neg)
      throw std::domain_error(
          "geometric expansion needs a symbol-degree cap");
  }
  TruncatedSeries out = TruncatedSeries::one(u.symbols(), b);
  TruncatedSeries power = u;
  long long cap = geometric_cap(b);
  for (long long i = 0; !power.zero(); ++i) {
    if (i > cap)
      throw std::domain_error("geometric expansion does not terminate");
    out += power;
    power = power * u;
  }
  return out;
}

namespace {

// shared guts of the two Pochhammer expansions; inverse=false multiplies by
// (1 - x q^{step k}), inverse=true by its reciprocal
TruncatedSeries pochhammer_impl(const Monomial& x, int q_step, int count,
                                std::vector<std::string> symbols,
                                SeriesBounds bounds, bool inverse) {
  if (count < 0 && q_step < 1)
    throw std::domain_error(
        "infinite Pochhammer products need q_step >= 1");
  TruncatedSeries out = TruncatedSeries::one(std::move(symbols), bounds);
  std::vector<int> sym(out.symbols().size(), 0);
  for (const auto& [name, e] : x.sym_exps) sym[out.symbol_index(name)] = e;
  long long sym_total = 0;
  for (int e : sym) sym_total += e;

  int reach = bounds.q_order - bounds.q_floor;
  long long cap = geometric_cap(bounds);
  for (int k = 0;; ++k) {
    long long fq = static_cast<long long>(x.q_exp) +
                   static_cast<long long>(q_step) * k;
    if (count >= 0) {
      if (k >= count) break;
    } else if (fq > reach) {
      break; // factors beyond the window are 1
    }
    if (fq < std::numeric_limits<int>::min() ||
        fq > std::numeric_limits<int>::max())
      throw std::domain_error("Pochhammer factor exponent overflow");
    int q = static_cast<int>(fq);
    if (!inverse) {
      TruncatedSeries shifted = out;
      shifted.mul_monomial(-x.coeff, q, sym);
      out += shifted;
    } else {
      if (q <= 0 && sym_total == 0)
        throw std::domain_error(
            "non-convergent Pochhammer factor with q exponent <= 0");
      if (q <= 0 && bounds.sym_order < 0)
        throw std::domain_error(
            "Pochhammer reciprocal needs a symbol-degree cap");
      TruncatedSeries acc = out;
      TruncatedSeries term = out;
      term.mul_monomial(x.coeff, q, sym);
      for (long long i = 0; !term.zero(); ++i) {
        if (i > cap)
          throw std::domain_error(
              "Pochhammer reciprocal does not terminate");
        acc += term;
        term.mul_monomial(x.coeff, q, sym);
      }
      out = std::move(acc);
    }
    if (out.zero()) break;
  }
  return out;
}

} // namespace

TruncatedSeries pochhammer(const Monomial& x, int q_step, int count,
                           std::vector<std::string> symbols,
                           SeriesBounds bounds) {
  return pochhammer_impl(x, q_step, count, std::move(symbols), bounds, false);
}

TruncatedSeries pochhammer_inv(const Monomial& x, int q_step, int count,
                               std::vector<std::string> symbols,
                               SeriesBounds bounds) {
  return pochhammer_impl(x, q_step, count, std::move(symbols), bounds, true);
}

namespace {

// chains[t]: color-exponent vector -> number of length-t state chains whose
// consecutive energies all vanish (these are exactly the all-potentials-1
// O-side words)
std::vector<std::map<std::vector<int>, Coeff>> zero_energy_chains(
    const EnergyMatrix& e, int t_max) {
  int n = e.states().size();
  std::vector<std::map<std::vector<int>, Coeff>> out(
      std::max(t_max, 0) + 1);
  out[0][std::vector<int>(n, 0)] = 1;
  if (t_max < 1) return out;
  std::map<std::pair<int, std::vector<int>>, Coeff> level;
  for (int c = 0; c < n; ++c) {
    std::vector<int> ev(n, 0);
    ev[c] = 1;
    level[{c, ev}] += 1;
  }
  for (int t = 1; t <= t_max; ++t) {
    for (const auto& [key, cnt] : level) out[t][key.second] += cnt;
    if (t == t_max) break;
    std::map<std::pair<int, std::vector<int>>, Coeff> next;
    for (const auto& [key, cnt] : level) {
      for (int c2 = 0; c2 < n; ++c2) {
        if (e.eps(key.first, c2) != 0) continue;
        std::vector<int> ev = key.second;
        ++ev[c2];
        next[{c2, ev}] += cnt;
      }
    }
    level = std::move(next);
  }
  return out;
}

bool eps0_has_cycle(const EnergyMatrix& e) {
  int n = e.states().size();
  // 0 = unseen, 1 = on stack, 2 = done
  std::vector<int> color(n, 0);
  std::vector<std::pair<int, int>> stack;
  for (int start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    stack.push_back({start, 0});
    color[start] = 1;
    while (!stack.empty()) {
      int v = stack.back().first;
      if (stack.back().second >= n) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      int w = stack.back().second++;
      if (e.eps(v, w) != 0) continue;
      if (color[w] == 1) return true;
      if (color[w] == 0) {
        color[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }
  return false;
}

} // namespace

TruncatedSeries base_function_F(const EnergyMatrix& e, int x_order) {
  if (x_order < 0)
    throw std::invalid_argument("base_function_F: x_order must be >= 0");
  std::vector<std::string> symbols = e.states().labels();
  symbols.push_back("x");
  TruncatedSeries out(symbols, SeriesBounds{0, 0, -1});
  auto chains = zero_energy_chains(e, x_order);
  int n = e.states().size();
  for (int t = 0; t <= x_order; ++t) {
    for (const auto& [ev, cnt] : chains[t]) {
      std::vector<int> exps = ev;
      exps.push_back(t);
      (void)n;
      out.add_term(cnt, 0, exps);
    }
  }
  return out;
}

TruncatedSeries euler_product(const EnergyMatrix& e, int rho, int q_order,
                              int sym_order) {
  if (rho != 0 && rho != 1)
    throw std::invalid_argument("euler_product: rho must be 0 or 1");
  if (q_order < 0)
    throw std::invalid_argument("euler_product: q_order must be >= 0");
  int n = e.states().size();
  int m0_cap = 0;
  if (rho == 0) {
    bool cyclic = eps0_has_cycle(e);
    if (cyclic && sym_order < 0)
      throw std::domain_error("non-convergent at m=0");
    // acyclic zero-energy steps cannot revisit a state, so chains are simple
    // paths of length at most the state count
    m0_cap = cyclic ? sym_order : n;
  }
  int x_max = std::max(q_order, m0_cap);
  auto chains = zero_energy_chains(e, x_max);

  SeriesBounds bounds{q_order, 0, sym_order};
  TruncatedSeries result = TruncatedSeries::one(e.states().labels(), bounds);
  for (int m = rho; m <= q_order; ++m) {
    int t_cap = m == 0 ? m0_cap : q_order / m;
    TruncatedSeries factor(e.states().labels(), bounds);
    for (int t = 0; t <= t_cap; ++t)
      for (const auto& [ev, cnt] : chains[t]) factor.add_term(cnt, m * t, ev);
    result = result * factor;
    if (result.zero()) break;
  }
  return result;
}

namespace {

struct EnumerationSink {
  TruncatedSeries* out;
  std::vector<int> expv;

  void emit(int energy) { out->add_term(1, energy, expv); }
};

void o_side_terms(const EnergyMatrix& e, int rho, int budget, int cap,
                  std::optional<Primary> prev, EnumerationSink& sink,
                  int energy) {
  sink.emit(energy);
  if (cap == 0) return;
  int n = e.states().size();
  for (int c = 0; c < n; ++c) {
    int hi = budget;
    if (prev) hi = std::min(hi, prev->k - e.eps(prev->state, c));
    for (int k = hi; k >= rho; --k) {
      ++sink.expv[c];
      o_side_terms(e, rho, budget - k, cap - 1, Primary{k, c}, sink,
                   energy + k);
      --sink.expv[c];
    }
  }
}

void e_side_terms(const EnergyMatrix& e, Relation relation, int rho,
                  int budget, int cap, const std::optional<Particle>& prev,
                  EnumerationSink& sink, int energy) {
  sink.emit(energy);
  int n = e.states().size();
  if (cap >= 1) {
    for (int c = 0; c < n; ++c) {
      for (int k = rho; k <= budget; ++k) {
        Particle p{Primary{k, c}};
        if (prev && !rel(e, relation, *prev, p)) continue;
        ++sink.expv[c];
        e_side_terms(e, relation, rho, budget - k, cap - 1, p, sink,
                     energy + k);
        --sink.expv[c];
      }
    }
  }
  if (cap >= 2) {
    for (int cu = 0; cu < n; ++cu) {
      for (int cl = 0; cl < n; ++cl) {
        int eps = e.eps(cu, cl);
        for (int k = rho; 2 * k + eps <= budget; ++k) {
          Particle p{Secondary{k, cu, cl}};
          if (prev && !rel(e, relation, *prev, p)) continue;
          ++sink.expv[cu];
          ++sink.expv[cl];
          e_side_terms(e, relation, rho, budget - (2 * k + eps), cap - 2, p,
                       sink, energy + 2 * k + eps);
          --sink.expv[cu];
          --sink.expv[cl];
        }
      }
    }
  }
}

} // namespace

TruncatedSeries series_from_enumeration(const EnergyMatrix& e, Side side,
                                        int rho, int q_order,
                                        int word_len_cap, Relation relation) {
  if (q_order < 0)
    throw std::invalid_argument(
        "series_from_enumeration: q_order must be >= 0");
  if (rho < 0)
    throw std::invalid_argument("series_from_enumeration: rho must be >= 0");
  if (rho == 0 && word_len_cap < 0)
    throw std::invalid_argument(
        "series_from_enumeration: a word-length cap is required at rho=0");
  int cap = word_len_cap >= 0 ? word_len_cap : q_order;
  TruncatedSeries out(e.states().labels(), SeriesBounds{q_order, 0, cap});
  EnumerationSink sink{&out, std::vector<int>(e.states().size(), 0)};
  if (side == Side::O) {
    o_side_terms(e, rho, q_order, cap, std::nullopt, sink, 0);
  } else {
    e_side_terms(e, relation, rho, q_order, cap, std::nullopt, sink, 0);
  }
  return out;
}

TruncatedSeries specialize(const TruncatedSeries& s, const Specialization& sp,
                           int out_q_order) {
  if (sp.q_dilation < 1)
    throw std::invalid_argument("specialize: q_dilation must be >= 1");
  std::vector<const Specialization::Target*> targets;
  targets.reserve(s.symbols().size());
  for (const std::string& name : s.symbols()) {
    auto it = sp.targets.find(name);
    if (it == sp.targets.end())
      throw std::invalid_argument("specialize: no target for symbol " + name);
    targets.push_back(&it->second);
  }
  TruncatedSeries out({}, SeriesBounds{out_q_order, 0, -1});
  for (const auto& [exp, c] : s.terms()) {
    long long q = static_cast<long long>(sp.q_dilation) * exp.q;
    bool killed = false;
    for (std::size_t i = 0; i < targets.size() && !killed; ++i) {
      if (exp.sym[i] == 0) continue;
      switch (targets[i]->kind) {
        case Specialization::TargetKind::zero:
          killed = true;
          break;
        case Specialization::TargetKind::one:
          break;
        case Specialization::TargetKind::q_power:
          q += static_cast<long long>(targets[i]->power) * exp.sym[i];
          break;
      }
    }
    if (killed) continue;
    if (q < 0) {
      std::ostringstream os;
      os << "specialize: monomial with q^" << exp.q;
      for (std::size_t i = 0; i < s.symbols().size(); ++i)
        if (exp.sym[i] != 0)
          os << "*" << s.symbols()[i] << "^" << exp.sym[i];
      os << " lands at negative exponent q^" << q;
      throw std::domain_error(os.str());
    }
    if (q > out_q_order) continue;
    out.add_term(c, static_cast<int>(q), {});
  }
  return out;
}

TruncatedSeries collapse_symbols(const TruncatedSeries& s) {
  SeriesBounds b = s.bounds();
  b.sym_order = -1;
  TruncatedSeries out({}, b);
  for (const auto& [exp, c] : s.terms()) out.add_term(c, exp.q, {});
  return out;
}

} // namespace weft
