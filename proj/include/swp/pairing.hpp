// The residue pairing between class representatives and unit dlog series,
// in both a direct series form and an arithmetic closed form; pairing
// matrices, the per-instance check suite, and exhaustive range verification.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swp/phimod.hpp"
#include "swp/series.hpp"
#include "swp/weights.hpp"

namespace swp {

struct SchreierClass {
    enum class Kind { ordinary, extra };
    Kind kind = Kind::ordinary;
    int i = 0;                 // source index (in J; i0 for the extra class)
    EmbVector coeff;           // a^{-1} lambda_{sigma_i, mu^{-1}}
    std::int64_t exponent = 0; // -xi_i, or p(p^f-1)-xi_{i0} for the extra class
};

struct AhUnit {
    enum class Kind { standard, uniformizer };
    Kind kind = Kind::standard;
    int j = 0;                 // column index for standard units
    int s_prime = 0;
    std::int64_t n_prime = 0;
};

// Basis classes (x_i = 1), ordered by i in J ascending, extra class last.
std::vector<SchreierClass> basis_classes(const WeightInstance& inst);
// Unit columns j = 0..f-1, uniformizer column last when chi is trivial.
std::vector<AhUnit> unit_columns(const WeightInstance& inst);

// Residue-series evaluation: trace of the residue of
// dlog(unit) * coeff * u^{exponent}, with lossless truncation.
FFElem pair_series(const WeightInstance& inst, const SchreierClass& c,
                   const AhUnit& v);

// Arithmetic evaluation: nonzero exactly when some m >= 0 solves
// n' p^m = -exponent with s' = i - m mod f; the value is then
// n' * d * a^{floor((s'+m)/f) - 1}.
FFElem pair_closed(const WeightInstance& inst, const SchreierClass& c,
                   const AhUnit& v);

struct PairingReport {
    std::string key;
    WeightInstance inst;
    std::vector<SchreierClass> classes;
    std::vector<AhUnit> units;
    std::vector<std::vector<FFElem>> matrix;  // rows x columns
    int rank = 0;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> counterexamples;

    bool all_pass() const;
    bool check(const std::string& name) const;
};

// Fills the matrix by the series route, cross-checks every entry against
// the closed form, and runs the whole per-instance check suite.
PairingReport pairing_matrix(const WeightInstance& inst, std::uint64_t seed);

// Names of the per-instance checks, in report order.
const std::vector<std::string>& check_names();

struct RangeSummary {
    std::vector<std::int64_t> p_list;
    int f_min = 1, f_max = 1;
    std::vector<int> d_list;
    APolicy policy = APolicy::per_order;
    std::uint64_t seed = 0;
    std::vector<PairingReport> reports;
    std::size_t failures = 0;

    std::size_t instance_count() const { return reports.size(); }
};

// Runs pairing_matrix over every enumerated instance in the range.
// Instances are distributed over `workers` threads; the result is
// identical for any worker count.
RangeSummary verify_range(const std::vector<std::int64_t>& p_list, int f_min,
                          int f_max, const std::vector<int>& d_list,
                          APolicy policy, int workers, std::uint64_t seed);

// Row rank of a matrix over the common field of its entries.
int matrix_rank(std::vector<std::vector<FFElem>> m);

}  // namespace swp
