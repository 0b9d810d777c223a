#include "fusionq/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace fusionq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid partition: '" + s + "'");
        }
        if (used != item.size()) throw std::invalid_argument("invalid partition: '" + s + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("invalid partition: '" + s + "'");
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("invalid partition '" + s + "': " + e.what());
    }
}

int Partition::row_length(int i) const {
    return (i >= 1 && i <= rows()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::column_length(int j) const {
    int len = 0;
    for (int p : parts_) len += p >= j ? 1 : 0;
    return len;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= row_length(1); ++j) c.push_back(column_length(j));
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(n, n);
    return out;
}

PartitionAnalysis partition_analyze(const Partition& p) {
    PartitionAnalysis a;
    while (p.row_length(a.durfee + 1) >= a.durfee + 1) ++a.durfee;
    for (int k = 1; k <= a.durfee; ++k) {
        a.alpha.push_back(p.row_length(k) - k);
        a.beta.push_back(p.column_length(k) - k + 1);
        a.hook_lengths.push_back(a.alpha.back() + a.beta.back());
    }
    return a;
}

Partition remove_principal_hooks(const Partition& p, int k) {
    std::vector<int> rows;
    for (int i = k + 1; p.row_length(i) > k; ++i) rows.push_back(p.row_length(i) - k);
    return Partition(std::move(rows));
}

std::size_t hook_length_count(const Partition& p) {
    // n! / prod h(b), accumulated as an exact quotient.
    std::size_t num = factorial(p.size());
    std::size_t den = 1;
    for (int i = 1; i <= p.rows(); ++i) {
        for (int j = 1; j <= p.row_length(i); ++j) {
            den *= static_cast<std::size_t>((p.row_length(i) - j) + (p.column_length(j) - i) + 1);
        }
    }
    return num / den;
}

std::string to_string(Grouping g) {
    switch (g) {
        case Grouping::hook: return "hook";
        case Grouping::row: return "row";
        case Grouping::column: return "column";
    }
    return "hook";
}

Grouping parse_grouping(const std::string& s) {
    if (s == "hook") return Grouping::hook;
    if (s == "row") return Grouping::row;
    if (s == "column") return Grouping::column;
    throw std::invalid_argument("unknown variant '" + s + "' (expected hook|row|column)");
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    shape_ = Partition(parts);
    const int n = shape_.size();
    boxes_.assign(static_cast<std::size_t>(n), Box{});
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 1; i <= shape_.rows(); ++i) {
        for (int j = 1; j <= shape_.row_length(i); ++j) {
            const int a = at(i, j);
            if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)]) {
                throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
            }
            seen[static_cast<std::size_t>(a - 1)] = true;
            boxes_[static_cast<std::size_t>(a - 1)] = Box{i, j};
            if (j > 1 && at(i, j - 1) > a) throw std::invalid_argument("tableau rows must increase");
            if (i > 1 && at(i - 1, j) > a) throw std::invalid_argument("tableau columns must increase");
        }
    }
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
}

std::string StandardTableau::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(rows_[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

StandardTableau hook_tableau(const Partition& p) {
    std::vector<std::vector<int>> rows;
    for (int len : p.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
    const int d = partition_analyze(p).durfee;
    int next = 1;
    for (int k = 1; k <= d; ++k) {
        for (int i = k; i <= p.column_length(k); ++i) rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] = next++;
        for (int j = k + 1; j <= p.row_length(k); ++j) rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] = next++;
    }
    return StandardTableau(std::move(rows));
}

std::vector<int> contents(const StandardTableau& t) {
    std::vector<int> c;
    for (int a = 1; a <= t.size(); ++a) c.push_back(t.box_of(a).content());
    return c;
}

std::vector<int> entry_groups(const StandardTableau& t, Grouping mode) {
    std::vector<int> g;
    for (int a = 1; a <= t.size(); ++a) {
        const Box b = t.box_of(a);
        switch (mode) {
            case Grouping::hook: g.push_back(std::min(b.row, b.col) - 1); break;
            case Grouping::row: g.push_back(b.row - 1); break;
            case Grouping::column: g.push_back(b.col - 1); break;
        }
    }
    return g;
}

std::vector<StandardTableau> standard_tableaux(const Partition& p) {
    // Place 1..n one at a time into addable corners of the growing diagram.
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(p.rows()));
    std::function<void(int)> rec = [&](int next) {
        if (next > p.size()) {
            out.emplace_back(rows);
            return;
        }
        for (int i = 1; i <= p.rows(); ++i) {
            auto& row = rows[static_cast<std::size_t>(i - 1)];
            const int len = static_cast<int>(row.size());
            if (len >= p.row_length(i)) continue;
            if (i > 1 && static_cast<int>(rows[static_cast<std::size_t>(i - 2)].size()) <= len) continue;
            row.push_back(next);
            rec(next + 1);
            row.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

bool swap_is_standard(const StandardTableau& t, int k) {
    if (k < 1 || k >= t.size()) return false;
    const Box a = t.box_of(k);
    const Box b = t.box_of(k + 1);
    return a.row != b.row && a.col != b.col;
}

StandardTableau adjacent_swap(const StandardTableau& t, int k) {
    if (!swap_is_standard(t, k)) {
        throw std::invalid_argument("swapping " + std::to_string(k) + " and " + std::to_string(k + 1) +
                                    " does not give a standard tableau");
    }
    auto rows = t.rows();
    const Box a = t.box_of(k);
    const Box b = t.box_of(k + 1);
    std::swap(rows[static_cast<std::size_t>(a.row - 1)][static_cast<std::size_t>(a.col - 1)],
              rows[static_cast<std::size_t>(b.row - 1)][static_cast<std::size_t>(b.col - 1)]);
    return StandardTableau(std::move(rows));
}

Permutation relabelling_from_hook(const StandardTableau& t) {
    const StandardTableau h = hook_tableau(t.shape());
    std::vector<int> rho(static_cast<std::size_t>(t.size()));
    for (int x = 1; x <= t.size(); ++x) {
        const Box b = h.box_of(x);
        rho[static_cast<std::size_t>(x - 1)] = t.at(b.row, b.col);
    }
    return Permutation(std::move(rho));
}

}  // namespace fusionq
