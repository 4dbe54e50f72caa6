// Weight combinatorics: digit data of the inertia character, the exponent
// vectors alpha/beta/xi, the shifted unit data (s', n'), the modified set
// mu(J), character classification, and exhaustive instance enumeration.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swp/gf.hpp"

namespace swp {

// Digits a_1..a_f in [1,p] (stored at 0..f-1, extended periodically) and
// the derived exponents n_0..n_{f-1}.
struct CharacterData {
    std::int64_t p = 0;
    int f = 0;
    std::vector<int> digits;         // digits[j] = a_{j+1}
    std::vector<std::int64_t> n;     // n[i] = n_i

    int digit(std::int64_t j) const;           // a_j, any integer j
    std::int64_t n_at(std::int64_t i) const;   // n_{i mod f}
    bool all_digits_are(int v) const;
};

// The unique n_0 congruent to e mod p^f-1 that admits digits in [1,p] with
// not all equal to p, found by scanning the admissible window.
CharacterData digits_from_exponent(std::int64_t p, int f, std::int64_t e);

// Empty if J is maximal for (p, f, r); otherwise the violated rule.
std::optional<std::string> maximal_J_violation(std::int64_t p, int f,
                                               const std::vector<int>& r,
                                               std::uint32_t Jmask);
bool is_maximal_J(std::int64_t p, int f, const std::vector<int>& r,
                  std::uint32_t Jmask);

struct XiData {
    std::vector<std::int64_t> alpha, beta, xi;
};

// alpha_i, beta_i and xi_i = alpha_i - p beta_{i-1}; xi is also computed by
// the direct signed digit sum and the two routes are required to agree.
XiData xi_alpha_beta(std::int64_t p, int f, const std::vector<int>& r,
                     std::uint32_t Jmask);

struct DdrDatum {
    int s_prime = 0;              // embedding index mod f
    std::int64_t n_prime = 0;
};

// Shifted unit datum at index i: (i-1, n_{i-1}) when a_{i-1} != p, else
// (j-1, n_{j-1} - (p^f-1)) for the greatest j < i with a_{j-1} != p-1.
DdrDatum ddr_data(const CharacterData& cd, int i);

// The modified index set: each i outside J whose digit pattern is
// (a_{i-1},...,a_{i-s}) = (p, p-1, ..., p-1) with a_{i-s-1} != p-1 replaces
// the nearest element of J among i-1..i-s; replacements are simultaneous.
std::uint32_t mu_of_J(const CharacterData& cd, std::uint32_t Jmask);

enum class ChiClass { trivial, cyclotomic, other };
ChiClass classify_chi(const CharacterData& cd, const FFElem& a);
const char* chi_class_name(ChiClass c);

struct WeightInstance {
    std::int64_t p = 0;
    int f = 0;
    std::vector<int> r;
    std::uint32_t Jmask = 0;
    int d = 1;
    Field::Ptr field;
    FFElem a;
    std::uint64_t a_order = 1;

    std::vector<int> h;           // h_i = r_i if i in J else 0
    XiData xi;
    CharacterData cd;
    std::vector<DdrDatum> ddr;    // index i = 0..f-1
    std::uint32_t muJ = 0;
    ChiClass chi = ChiClass::other;
    int i0 = -1;                  // min(J) when chi is trivial

    std::int64_t pf_minus_1 = 0;

    bool in_J(int i) const { return (Jmask >> (i % f)) & 1u; }
    bool in_muJ(int j) const { return (muJ >> (j % f)) & 1u; }
    std::vector<int> J_list() const;
    std::vector<int> muJ_list() const;
    std::string key() const;
};

// Degree of the shared scalar field for (p, f, d): f * d * ord_d(p).
int instance_field_degree(std::int64_t p, int f, int d);
Field::Ptr instance_field(std::int64_t p, int f, int d);

// Validates (r, J, d, a) and computes all derived data. Throws
// std::invalid_argument naming the violated rule.
WeightInstance make_instance(std::int64_t p, int f, std::vector<int> r,
                             std::uint32_t Jmask, int d, FFElem a);
// Convenience: a = deterministic element of the given order.
WeightInstance make_instance(std::int64_t p, int f, std::vector<int> r,
                             std::uint32_t Jmask, int d,
                             std::uint64_t a_order);

enum class APolicy { per_order, all };

// Deterministic stream over all valid (r, J) for (p, f), paired with every
// d in d_list coprime to p and the a-values dictated by the policy.
std::vector<WeightInstance> enumerate_instances(std::int64_t p, int f,
                                                const std::vector<int>& d_list,
                                                APolicy policy);

std::uint32_t mask_from_list(const std::vector<int>& J, int f);
std::vector<int> list_from_mask(std::uint32_t mask, int f);

}  // namespace swp
