#include "weft/energy.hpp"

#include <algorithm>
#include <set>

namespace weft {

StateSet::StateSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("StateSet: empty label list");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw std::invalid_argument("StateSet: empty label");
        if (!seen.insert(l).second)
            throw std::invalid_argument("StateSet: duplicate label '" + l + "'");
    }
}

std::optional<int> StateSet::find(std::string_view label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[static_cast<size_t>(i)] == label) return i;
    return std::nullopt;
}

int StateSet::index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw std::invalid_argument("StateSet: unknown label '" + std::string(label) + "'");
}

EnergyMatrix::EnergyMatrix(StateSet states, const std::vector<std::vector<int>>& rows)
    : states_(std::move(states)) {
    const size_t n = static_cast<size_t>(states_.size());
    if (rows.size() != n) throw std::invalid_argument("EnergyMatrix: row count != state count");
    eps_.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("EnergyMatrix: non-square matrix");
        for (int v : row) {
            if (v != 0 && v != 1) throw std::invalid_argument("EnergyMatrix: entries must be 0 or 1");
            eps_.push_back(static_cast<uint8_t>(v));
        }
    }
}

bool EnergyMatrix::is_transitive() const {
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (eps(a, c) > eps(a, b) + eps(b, c)) return false;
    return true;
}

EnergyMatrix EnergyMatrix::transposed() const {
    const int n = size();
    std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = eps(j, i);
    return EnergyMatrix(states_, rows);
}

int transfer_energy(const EnergyMatrix& e, const ColorWord& w) {
    if (w.empty()) throw std::invalid_argument("transfer_energy: empty word");
    for (int c : w)
        if (c < 0 || c >= e.size())
            throw std::invalid_argument("transfer_energy: letter out of range");
    int total = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i) total += e.eps(w[i], w[i + 1]);
    return total;
}

int word_delta(const EnergyMatrix& e, const ColorWord& w, int k, int k2) {
    const int s = static_cast<int>(w.size());
    if (k < 0 || k >= s || k2 < 0 || k2 >= s)
        throw std::out_of_range("word_delta: position out of range");
    if (k == k2) return 0;
    if (k > k2) return -word_delta(e, w, k2, k);
    int total = 0;
    for (int u = k; u < k2; ++u)
        total += e.eps(w[static_cast<size_t>(u)], w[static_cast<size_t>(u) + 1]);
    return total;
}

namespace {

EnergyMatrix from_rule(std::vector<std::string> labels, int (*rule)(int, int)) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = rule(i, j);
    return EnergyMatrix(StateSet(std::move(labels)), rows);
}

}  // namespace

EnergyMatrix chi_less_matrix(std::vector<std::string> labels) {
    return from_rule(std::move(labels), [](int i, int j) { return i < j ? 1 : 0; });
}

EnergyMatrix chi_leq_matrix(std::vector<std::string> labels) {
    return from_rule(std::move(labels), [](int i, int j) { return i <= j ? 1 : 0; });
}

EnergyMatrix constant_matrix(std::vector<std::string> labels, int value) {
    if (value != 0 && value != 1) throw std::invalid_argument("constant_matrix: value must be 0 or 1");
    const int n = static_cast<int>(labels.size());
    std::vector<std::vector<int>> rows(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), value));
    return EnergyMatrix(StateSet(std::move(labels)), rows);
}

EnergyMatrix twister_matrix() {
    return EnergyMatrix(StateSet({"a", "b"}), {{1, 0}, {0, 1}});
}

EnergyMatrix overline_doubling(const std::vector<std::string>& base, const std::string& bar_suffix) {
    const int n = static_cast<int>(base.size());
    if (n == 0) throw std::invalid_argument("overline_doubling: empty base");
    // States: c_n~, ..., c_1~, c_1, ..., c_n.
    std::vector<std::string> labels;
    labels.reserve(2 * static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) labels.push_back(base[static_cast<size_t>(i)] + bar_suffix);
    for (int i = 0; i < n; ++i) labels.push_back(base[static_cast<size_t>(i)]);

    // base_index: 1..n for plain letters; barred: n..1 reading left to right.
    auto barred = [&](int s) { return s < n; };
    auto base_index = [&](int s) { return barred(s) ? n - s : s - n + 1; };

    const int m = 2 * n;
    std::vector<std::vector<int>> rows(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int s = 0; s < m; ++s) {
        for (int t = 0; t < m; ++t) {
            const int i = base_index(s), j = base_index(t);
            int v;
            if (!barred(s) && !barred(t)) v = i < j ? 1 : 0;
            else if (!barred(s) && barred(t)) v = 0;
            else if (barred(s) && !barred(t)) v = 1;
            else v = i >= j ? 1 : 0;
            rows[static_cast<size_t>(s)][static_cast<size_t>(t)] = v;
        }
    }
    return EnergyMatrix(StateSet(std::move(labels)), rows);
}

EnergyMatrix overpartition_matrix() { return overline_doubling({"a", "b"}); }

}  // namespace weft
