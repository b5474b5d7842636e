#pragma once

// Reference truncation-error table for the small-x expansion: for
// x in {0.001, 0.01, 0.05} and M in 1..5 the partial sum S_M, the
// oracle value of F, and the relative error, checked against the
// published reference figures.

#include <array>
#include <vector>

namespace syncfn {

struct Table1Row {
    double x;
    int terms;
    double s_m;
    double f_exact;
    double rel_err;
    double expected_rel_err;
    bool ok;  // within 5% of the reference relative error
};

struct Table1Outcome {
    std::vector<Table1Row> rows;
    std::array<double, 3> f_exact{};
    std::array<double, 3> expected_f_exact{};
    std::array<bool, 3> f_exact_ok{};
    bool all_ok = false;
};

Table1Outcome run_table1();

}  // namespace syncfn
