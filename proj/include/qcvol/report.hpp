#pragma once

#include "qcvol/closed_form.hpp"
#include "qcvol/rational.hpp"

#include <string>
#include <vector>

namespace qcvol {

/// Base-2 logarithm of |value| as a decimal string with the given number of
/// significant digits, computed from the exact rational with integer
/// arithmetic only (bit length plus fixed-point correction); table entries
/// exceed double precision. Exact zero logs render as "0".
std::string log2_abs_decimal(const Rational& value, int significant_digits = 20);

struct TableRow {
    int d = 0;
    int i0 = 0;
    Rational volume;
    std::string volume_log2_abs; // 20 significant digits
};

TableRow table_row(int d, VolumeSign sign);

/// One row per dimension. Throws std::domain_error on an inverted range or
/// on unsupported dimensions, listing the offenders.
std::vector<TableRow> build_table(int from, int to, VolumeSign sign);

/// CSV with header "d,i0,volume", LF line endings, canonical rational text.
std::string table_csv(const std::vector<TableRow>& rows);
/// JSON object {"sign": ..., "rows": [{d, i0, volume, volume_log2_abs}]}.
std::string table_json(const std::vector<TableRow>& rows, VolumeSign sign);

struct PlotRecord {
    int d = 0;
    int i0_min = 0;
    int i0_max = 0;
    std::string log2_abs_vmin;
    std::string log2_abs_vmax;
    int i0_diff = 0; // i0_min - i0_max
};

/// Per-dimension data behind the growth plots. An inverted range yields no
/// records; unsupported dimensions raise as in build_table.
std::vector<PlotRecord> build_plot_records(int from, int to);

std::string plot_csv(const std::vector<PlotRecord>& records);
std::string plot_json(const std::vector<PlotRecord>& records);

} // namespace qcvol
