#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fusionq/permutation.hpp"

namespace fusionq {

/// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    /// Comma-separated parts, e.g. "3,3,2".
    static Partition parse(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    /// Length of row i (1-based), 0 beyond the last row.
    int row_length(int i) const;
    /// Length of column j (1-based).
    int column_length(int j) const;
    Partition conjugate() const;
    bool is_hook() const { return parts_.size() <= 1 || parts_[1] <= 1; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

struct PartitionAnalysis {
    /// Side of the Durfee square; the number of principal hooks.
    int durfee = 0;
    /// Frobenius coordinates (alpha | beta): alpha_k counts the boxes of
    /// row k strictly right of the diagonal, beta_k the boxes of column k
    /// on or below it.
    std::vector<int> alpha;
    std::vector<int> beta;
    /// Principal hook lengths h_k = alpha_k + beta_k.
    std::vector<int> hook_lengths;
};

PartitionAnalysis partition_analyze(const Partition& p);

/// The shape left after removing the first k principal hooks: the boxes
/// (i, j) with i, j > k, moved up and left by k. Its Frobenius
/// coordinates are the last d - k of those of p.
Partition remove_principal_hooks(const Partition& p, int k);

/// Number of standard tableaux of shape p, n! / prod of hook lengths.
std::size_t hook_length_count(const Partition& p);

/// A box (row, column), both 1-based; rows grow downwards.
struct Box {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    friend bool operator==(const Box&, const Box&) = default;
};

enum class Grouping { hook, row, column };

std::string to_string(Grouping g);
/// "hook", "row" or "column".
Grouping parse_grouping(const std::string& s);

/// A bijective filling of a Young diagram with 1..n, increasing along rows
/// and down columns.
class StandardTableau {
public:
    StandardTableau() = default;
    /// Row-wise entries; throws std::invalid_argument unless standard.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// Entry in box (row, col), 1-based.
    int at(int row, int col) const { return rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)]; }
    /// Box holding entry a.
    Box box_of(int a) const { return boxes_[static_cast<std::size_t>(a - 1)]; }

    /// Row reading word: rows top to bottom, each left to right.
    std::vector<int> reading_word() const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) { return a.rows_ == b.rows_; }

    std::string to_string() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<Box> boxes_;
};

/// Fills each principal hook in turn: its column top to bottom, then its
/// row left to right.
StandardTableau hook_tableau(const Partition& p);

/// Contents c_a = col - row for a = 1..n (index a-1).
std::vector<int> contents(const StandardTableau& t);

/// 0-based index of the principal hook / row / column holding each entry
/// (index a-1). Groups are numbered by ascending smallest entry.
std::vector<int> entry_groups(const StandardTableau& t, Grouping mode);

/// All standard tableaux of shape p, sorted lexicographically by reading word.
std::vector<StandardTableau> standard_tableaux(const Partition& p);

/// Whether exchanging entries k and k+1 gives a standard tableau.
bool swap_is_standard(const StandardTableau& t, int k);

/// Exchanges entries k and k+1; throws std::invalid_argument when the
/// result is not standard (k and k+1 share a row or a column).
StandardTableau adjacent_swap(const StandardTableau& t, int k);

/// rho with t(a, b) = rho(hook_tableau(shape)(a, b)) for every box.
Permutation relabelling_from_hook(const StandardTableau& t);

}  // namespace fusionq
