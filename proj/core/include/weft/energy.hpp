#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Finite color alphabets and 0/1 minimal-energy matrices, plus the word-level
// bookkeeping (transfer energy, path sums) everything else is built on.

namespace weft {

// Ordered set of color labels. Order matters: it fixes matrix row/column
// indexing and the canonical ordering of derived tables.
class StateSet {
public:
    explicit StateSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<int> find(std::string_view label) const;
    // Like find(), but throws std::invalid_argument for unknown labels.
    int index_of(std::string_view label) const;

    bool operator==(const StateSet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
};

// Minimal energy matrix: eps(c,c') in {0,1} for every ordered state pair.
class EnergyMatrix {
public:
    EnergyMatrix(StateSet states, const std::vector<std::vector<int>>& rows);

    int size() const { return states_.size(); }
    const StateSet& states() const { return states_; }

    int eps(int c, int c2) const {
        check_state(c);
        check_state(c2);
        return eps_[static_cast<size_t>(c) * static_cast<size_t>(size()) + static_cast<size_t>(c2)];
    }

    // eps(c,c'') <= eps(c,c') + eps(c',c'') for all triples.
    bool is_transitive() const;

    // Entrywise transpose; minimal energy again (trivially, entries unchanged).
    EnergyMatrix transposed() const;

    bool operator==(const EnergyMatrix& other) const {
        return states_ == other.states_ && eps_ == other.eps_;
    }

private:
    void check_state(int c) const {
        if (c < 0 || c >= size()) throw std::out_of_range("state index out of range");
    }

    StateSet states_;
    std::vector<uint8_t> eps_;  // row-major
};

// A word of state indices; positions are 0-based throughout the library.
using ColorWord = std::vector<int>;

// Sum of eps over consecutive letters. Throws on an empty word.
int transfer_energy(const EnergyMatrix& e, const ColorWord& w);

// Signed path sum Delta(k,k2) along the word: 0 when k == k2, the sum of
// eps(c_u, c_{u+1}) for u in [k, k2) when k < k2, and -Delta(k2,k) otherwise.
// Satisfies the chain rule Delta(a,c) = Delta(a,b) + Delta(b,c).
int word_delta(const EnergyMatrix& e, const ColorWord& w, int k, int k2);

// ---- stock matrices -------------------------------------------------------

// eps(c_i,c_j) = chi(i < j) on the given labels.
EnergyMatrix chi_less_matrix(std::vector<std::string> labels);
// eps(c_i,c_j) = chi(i <= j).
EnergyMatrix chi_leq_matrix(std::vector<std::string> labels);
// Constant matrix (value must be 0 or 1).
EnergyMatrix constant_matrix(std::vector<std::string> labels, int value);
// Two-state matrix [[1,0],[0,1]] over {a,b}; the classic non-transitive case.
EnergyMatrix twister_matrix();

// Doubling construction: from base labels c_1..c_n make the 2n-state set
// {c_n~, ..., c_1~, c_1, ..., c_n} (a trailing '~'-ish marker comes from
// `bar_suffix`, default "bar") with
//   eps(c_i, c_j)   = chi(i < j),   eps(c_i, c_j~)  = 0,
//   eps(c_i~, c_j)  = 1,            eps(c_i~, c_j~) = chi(i >= j).
EnergyMatrix overline_doubling(const std::vector<std::string>& base,
                               const std::string& bar_suffix = "bar");

// The 4-state doubling of {a,b}: states (bbar, abar, a, b). Ubiquitous in the
// tests and the overpartition checks.
EnergyMatrix overpartition_matrix();

}  // namespace weft
