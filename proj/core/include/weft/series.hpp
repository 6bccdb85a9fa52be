#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "weft/energy.hpp"
#include "weft/particle.hpp"
#include "weft/partition.hpp"

namespace weft {

// Exact truncated power series in q and a fixed list of named commuting
// symbols. Terms live in a window q_floor <= deg_q <= q_order, optionally
// capped in total symbol degree. The window may dip below q^0 so that
// pre-specialization intermediates (a -> q^-1 and friends) stay
// representable; anything reported to a user should sit at q_floor = 0.

using Coeff = boost::multiprecision::cpp_int;

struct SeriesBounds {
  int q_order = 0;
  int q_floor = 0;    // inclusive lower end of the q window, <= 0
  int sym_order = -1; // cap on total symbol degree, -1 = uncapped

  friend bool operator==(const SeriesBounds& a, const SeriesBounds& b) {
    return a.q_order == b.q_order && a.q_floor == b.q_floor &&
           a.sym_order == b.sym_order;
  }
};

// q exponent plus one exponent per symbol, aligned with the series' symbol
// list.
struct Exponents {
  int q = 0;
  std::vector<int> sym;

  friend bool operator<(const Exponents& a, const Exponents& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.sym < b.sym;
  }
  friend bool operator==(const Exponents& a, const Exponents& b) {
    return a.q == b.q && a.sym == b.sym;
  }
};

// One term c * q^q_exp * prod s^e_s, used to seed Pochhammer factors and
// monomial multiplications. Symbol exponents are keyed by name.
struct Monomial {
  Coeff coeff = 1;
  int q_exp = 0;
  std::map<std::string, int> sym_exps;
};

class TruncatedSeries {
public:
  // the zero series
  TruncatedSeries(std::vector<std::string> symbols, SeriesBounds bounds);

  static TruncatedSeries one(std::vector<std::string> symbols,
                             SeriesBounds bounds);

  const std::vector<std::string>& symbols() const { return symbols_; }
  const SeriesBounds& bounds() const { return bounds_; }
  const std::map<Exponents, Coeff>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // index of a symbol name; throws std::invalid_argument on unknown names
  int symbol_index(const std::string& name) const;

  // adds c * q^q_exp * prod sym^sym_exps; anything outside the window is
  // silently dropped (that is what truncation means here)
  void add_term(const Coeff& c, int q_exp, const std::vector<int>& sym_exps);
  void add_term(const Monomial& m);

  Coeff coeff(int q_exp, const std::vector<int>& sym_exps) const;
  // sum of all coefficients at a given q degree (pure-q reads of a
  // symbol-free or collapsed series)
  Coeff coeff_q(int q_exp) const;

  // multiplies in place by c * q^q_exp * prod sym^sym_exps
  void mul_monomial(const Coeff& c, int q_exp,
                    const std::vector<int>& sym_exps);
  void mul_monomial(const Monomial& m);

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries a,
                                   const TruncatedSeries& b) {
    a += b;
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a,
                                   const TruncatedSeries& b) {
    a -= b;
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.symbols_ == b.symbols_ && a.bounds_ == b.bounds_ &&
           a.terms_ == b.terms_;
  }

  // deterministic human-readable rendering, ordered by (q, symbol exps)
  std::string str() const;

private:
  void require_compatible(const TruncatedSeries& rhs) const;
  bool inside_window(int q_exp, const std::vector<int>& sym_exps) const;

  std::vector<std::string> symbols_;
  SeriesBounds bounds_;
  std::map<Exponents, Coeff> terms_;
};

// 1/(1-u) = 1 + u + u^2 + ... ; requires the expansion to die out inside
// u's window (no constant term, and enough truncation to kill high powers).
// Throws std::domain_error when it cannot terminate.
TruncatedSeries geometric_inverse(const TruncatedSeries& u);

// (x; q^step)_count = prod_{k=0}^{count-1} (1 - x q^{step k}), and its
// reciprocal. count = -1 expands the infinite product, which needs
// step >= 1 to leave the window eventually.
TruncatedSeries pochhammer(const Monomial& x, int q_step, int count,
                           std::vector<std::string> symbols,
                           SeriesBounds bounds);
TruncatedSeries pochhammer_inv(const Monomial& x, int q_step, int count,
                               std::vector<std::string> symbols,
                               SeriesBounds bounds);

// Generating function F(eps, x) of the O-side partitions whose particles all
// have potential exactly 1, i.e. state chains with zero energy between
// consecutive letters. x marks the particle count, the state labels mark the
// word. Computed by chain enumeration, never from a closed form. The result
// lives over symbols = state labels + "x" with q unused.
TruncatedSeries base_function_F(const EnergyMatrix& e, int x_order);

// prod_{m >= rho} F(eps; q^m), truncated at q_order, symbol degree capped at
// sym_order when >= 0. For rho = 0, the m = 0 factor evaluates F at x = 1;
// when the zero-energy state digraph has a cycle that factor has no finite
// description without a symbol cap, and the product throws
// std::domain_error("non-convergent at m=0") instead of guessing.
TruncatedSeries euler_product(const EnergyMatrix& e, int rho, int q_order,
                              int sym_order = -1);

// Sum of (commutative color monomial) * q^energy over every partition of the
// requested flavor with all-potentials bounded below by rho and energy
// <= q_order. word_len_cap bounds the letter count of the color word; it is
// mandatory for rho <= 0 (otherwise zero-potential particles make every
// q-degree infinite) and defaults to q_order for rho >= 1.
TruncatedSeries series_from_enumeration(const EnergyMatrix& e, Side side,
                                        int rho, int q_order,
                                        int word_len_cap = -1,
                                        Relation relation = Relation::standard);

// Substitution of every symbol by a q-power or a constant 0/1, with q
// dilated by q_dilation. The caller must have computed the input deep enough
// in q for the requested output order to be complete.
struct Specialization {
  enum class TargetKind { q_power, zero, one };
  struct Target {
    TargetKind kind = TargetKind::one;
    int power = 0;

    static Target q_power(int p) { return {TargetKind::q_power, p}; }
    static Target zero() { return {TargetKind::zero, 0}; }
    static Target one() { return {TargetKind::one, 0}; }
  };

  int q_dilation = 1;
  std::map<std::string, Target> targets;
};

// Applies sp to s. Every symbol of s must have a target. A surviving
// monomial whose final q exponent is negative raises std::domain_error
// naming the offending monomial. Exponents above out_q_order are dropped.
TruncatedSeries specialize(const TruncatedSeries& s, const Specialization& sp,
                           int out_q_order);

// Sets every symbol to 1, leaving a pure q-series (the window is kept).
TruncatedSeries collapse_symbols(const TruncatedSeries& s);

} // namespace weft
