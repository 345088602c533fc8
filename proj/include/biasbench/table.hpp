#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "biasbench/rng.hpp"

namespace biasbench {

// Column-major numeric table with unique named columns of equal length.
// Integer-valued columns round-trip through CSV exactly; real columns are
// written with 9 significant digits.
class Table {
public:
    Table() = default;
    Table(std::vector<std::string> names, std::vector<std::vector<double>> columns);

    std::size_t n_rows() const { return columns_.empty() ? 0 : columns_.front().size(); }
    std::size_t n_cols() const { return columns_.size(); }

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<double>& column(std::size_t i) const { return columns_.at(i); }
    const std::vector<double>& column(const std::string& name) const;
    bool has_column(const std::string& name) const;

    Table subset(const std::vector<std::size_t>& rows) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

struct SplitSpec {
    double train_fraction = 0.7;
    RngStream rng{0, "split"};
};

// Random index partition: round(fraction * n) rows go to the first part,
// clamped so both parts are non-empty. Indices come back sorted, so row
// order within each part follows the input.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
split_indices(std::size_t n, double train_fraction, RngStream rng);

std::pair<Table, Table> train_test_split(const Table& table, const SplitSpec& spec);

// RFC-4180-style CSV with a mandatory header row, UTF-8, LF line endings.
void write_csv(const Table& table, const std::string& path);
Table read_csv(const std::string& path);

}  // namespace biasbench
