#include "swp/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "swp/intutil.hpp"

namespace swp {

int CharacterData::digit(std::int64_t j) const {
    return digits[static_cast<std::size_t>(floormod(j - 1, f))];
}

std::int64_t CharacterData::n_at(std::int64_t i) const {
    return n[static_cast<std::size_t>(floormod(i, f))];
}

bool CharacterData::all_digits_are(int v) const {
    return std::all_of(digits.begin(), digits.end(),
                       [v](int x) { return x == v; });
}

CharacterData digits_from_exponent(std::int64_t p, int f, std::int64_t e) {
    const std::int64_t M = checked_pow_i64(p, f) - 1;
    const std::int64_t lo = M / (p - 1);  // 1 + p + ... + p^{f-1}
    std::int64_t n0 = -1;
    for (std::int64_t cand = lo; cand < lo + M; ++cand) {
        if (floormod(cand - e, M) == 0) { n0 = cand; break; }
    }
    if (n0 < 0) throw std::logic_error("digits_from_exponent: window scan failed");
    CharacterData cd;
    cd.p = p;
    cd.f = f;
    cd.digits.assign(static_cast<std::size_t>(f), 0);
    std::int64_t t = n0;
    for (int j = f; j >= 1; --j) {
        const int aj = static_cast<int>(floormod(t - 1, p)) + 1;
        cd.digits[static_cast<std::size_t>(j - 1)] = aj;
        t = (t - aj) / p;
    }
    if (t != 0) throw std::logic_error("digits_from_exponent: extraction failed");
    if (cd.all_digits_are(static_cast<int>(p)))
        throw std::logic_error("digits_from_exponent: all digits equal p");
    cd.n.assign(static_cast<std::size_t>(f), 0);
    for (int i = 0; i < f; ++i) {
        std::int64_t acc = 0;
        for (int j = 1; j <= f; ++j)
            acc = acc * p + cd.digit(i + j);
        cd.n[static_cast<std::size_t>(i)] = acc;
    }
    if (cd.n[0] != n0) throw std::logic_error("digits_from_exponent: n_0 mismatch");
    return cd;
}

std::optional<std::string> maximal_J_violation(std::int64_t p, int f,
                                               const std::vector<int>& r,
                                               std::uint32_t Jmask) {
    for (int v : r)
        if (v < 1 || v > p)
            throw std::invalid_argument("r entries must lie in [1, p]");
    auto rr = [&](std::int64_t i) {
        return r[static_cast<std::size_t>(floormod(i, f))];
    };
    auto inJ = [&](std::int64_t i) {
        return (Jmask >> floormod(i, f)) & 1u;
    };
    // Rule: a window (r_j,...,r_i) = (1, p-1, ..., p-1, p) with
    // j+1..i outside J forces j outside J. Windows longer than f would
    // need r_j = 1 = p, so lengths 2..f suffice.
    for (int j = 0; j < f; ++j) {
        for (int L = 2; L <= f; ++L) {
            const int i = j + L - 1;
            if (rr(j) != 1 || rr(i) != static_cast<std::int64_t>(p)) continue;
            bool interior_ok = true;
            for (int t = j + 1; t < i; ++t)
                if (rr(t) != p - 1) { interior_ok = false; break; }
            if (!interior_ok) continue;
            bool tail_out = true;
            for (int t = j + 1; t <= i; ++t)
                if (inJ(t)) { tail_out = false; break; }
            if (tail_out && inJ(j)) {
                std::ostringstream os;
                os << "maximality violation: window (r_" << j << ",...,r_"
                   << floormod(i, f) << ") = (1,p-1,...,p-1,p) with "
                   << "interior and final indices outside J requires " << j
                   << " outside J";
                return os.str();
            }
        }
    }
    const bool all_pm1 = std::all_of(r.begin(), r.end(),
                                     [&](int v) { return v == p - 1; });
    const bool all_two_p2 =
        p == 2 && std::all_of(r.begin(), r.end(), [](int v) { return v == 2; });
    if ((all_pm1 || all_two_p2) && Jmask == 0)
        return "maximality violation: J must be nonempty when every r_i = p-1 "
               "(or p = 2 and every r_i = 2)";
    return std::nullopt;
}

bool is_maximal_J(std::int64_t p, int f, const std::vector<int>& r,
                  std::uint32_t Jmask) {
    return !maximal_J_violation(p, f, r, Jmask).has_value();
}

XiData xi_alpha_beta(std::int64_t p, int f, const std::vector<int>& r,
                     std::uint32_t Jmask) {
    auto rr = [&](std::int64_t i) {
        return static_cast<std::int64_t>(r[static_cast<std::size_t>(floormod(i, f))]);
    };
    auto inJ = [&](std::int64_t i) -> bool {
        return (Jmask >> floormod(i, f)) & 1u;
    };
    auto hh = [&](std::int64_t i) { return inJ(i) ? rr(i) : 0; };
    const std::int64_t M = checked_pow_i64(p, f) - 1;
    XiData out;
    out.alpha.assign(static_cast<std::size_t>(f), 0);
    out.beta.assign(static_cast<std::size_t>(f), 0);
    out.xi.assign(static_cast<std::size_t>(f), 0);
    for (int i = 0; i < f; ++i) {
        std::int64_t a = 0, b = 0;
        std::int64_t pw = checked_pow_i64(p, f - 1);
        for (int j = 0; j < f; ++j) {
            a -= (rr(i + j + 1) - hh(i + j + 1)) * pw;
            b -= hh(i + j + 1) * pw;
            pw /= p;
        }
        out.alpha[static_cast<std::size_t>(i)] = a;
        out.beta[static_cast<std::size_t>(i)] = b;
    }
    for (int i = 0; i < f; ++i) {
        const std::int64_t via_ab =
            out.alpha[static_cast<std::size_t>(i)] -
            p * out.beta[static_cast<std::size_t>(floormod(i - 1, f))];
        std::int64_t direct = inJ(i) ? rr(i) * M : 0;
        std::int64_t pw = checked_pow_i64(p, f - 1);
        for (int j = 0; j < f; ++j) {
            direct += (inJ(i + j + 1) ? 1 : -1) * rr(i + j + 1) * pw;
            pw /= p;
        }
        if (via_ab != direct)
            throw std::logic_error("xi_alpha_beta: the two xi routes disagree");
        out.xi[static_cast<std::size_t>(i)] = direct;
    }
    return out;
}

DdrDatum ddr_data(const CharacterData& cd, int i) {
    const std::int64_t p = cd.p;
    const std::int64_t M = checked_pow_i64(p, cd.f) - 1;
    if (cd.digit(i - 1) != p) {
        return DdrDatum{static_cast<int>(floormod(i - 1, cd.f)), cd.n_at(i - 1)};
    }
    // a_{i-1} = p: take the greatest j < i with a_{j-1} != p-1. Such j
    // exists within one period because a_{i-1-f} = a_{i-1} = p.
    for (std::int64_t j = i - 1; j >= i - cd.f; --j) {
        if (cd.digit(j - 1) != p - 1) {
            return DdrDatum{static_cast<int>(floormod(j - 1, cd.f)),
                            cd.n_at(j - 1) - M};
        }
    }
    throw std::logic_error("ddr_data: no admissible shift found");
}

std::uint32_t mu_of_J(const CharacterData& cd, std::uint32_t Jmask) {
    const std::int64_t p = cd.p;
    const int f = cd.f;
    auto inJ = [&](std::int64_t i) -> bool {
        return (Jmask >> floormod(i, f)) & 1u;
    };
    std::uint32_t removals = 0, additions = 0;
    for (int i = 0; i < f; ++i) {
        if (inJ(i)) continue;
        if (cd.digit(i - 1) != p) continue;
        int s = 1;
        while (cd.digit(i - 1 - s) == p - 1) ++s;  // a_{i-s-1} != p-1 at exit
        int x = 0;
        for (int t = 1; t <= s; ++t)
            if (inJ(i - t)) { x = t; break; }
        if (x == 0) continue;
        removals |= 1u << floormod(i - x, f);
        additions |= 1u << i;
    }
    return (Jmask & ~removals) | additions;
}

ChiClass classify_chi(const CharacterData& cd, const FFElem& a) {
    const bool a_trivial = a.is_one();
    if (cd.all_digits_are(static_cast<int>(cd.p) - 1) && a_trivial)
        return ChiClass::trivial;
    if (cd.all_digits_are(1) && a_trivial) return ChiClass::cyclotomic;
    return ChiClass::other;
}

const char* chi_class_name(ChiClass c) {
    switch (c) {
        case ChiClass::trivial: return "trivial";
        case ChiClass::cyclotomic: return "cyclotomic";
        default: return "other";
    }
}

std::vector<int> WeightInstance::J_list() const { return list_from_mask(Jmask, f); }
std::vector<int> WeightInstance::muJ_list() const { return list_from_mask(muJ, f); }

std::string WeightInstance::key() const {
    std::ostringstream os;
    os << "p" << p << "_f" << f << "_r";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << '.';
        os << r[i];
    }
    os << "_J";
    const auto J = J_list();
    if (J.empty()) os << '-';
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (i) os << '.';
        os << J[i];
    }
    os << "_d" << d << "_a";
    const auto& c = a.coeffs();
    std::size_t top = c.size();
    while (top > 1 && c[top - 1] == 0) --top;
    for (std::size_t i = 0; i < top; ++i) {
        if (i) os << '.';
        os << c[i];
    }
    return os.str();
}

int instance_field_degree(std::int64_t p, int f, int d) {
    if (std::gcd(static_cast<std::int64_t>(d), p) != 1)
        throw std::invalid_argument("relative degree d must be coprime to p");
    int ord = 1;
    if (d > 1) {
        std::int64_t t = floormod(p, d);
        ord = 0;
        std::int64_t cur = 1;
        do {
            cur = floormod(cur * t, d);
            ++ord;
        } while (cur != 1 && ord <= d);
        if (cur != 1)
            throw std::logic_error("instance_field_degree: order computation failed");
    }
    return f * d * ord;
}

Field::Ptr instance_field(std::int64_t p, int f, int d) {
    return Field::make(p, instance_field_degree(p, f, d));
}

WeightInstance make_instance(std::int64_t p, int f, std::vector<int> r,
                             std::uint32_t Jmask, int d, FFElem a) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("p must be prime");
    if (f < 1) throw std::invalid_argument("f must be >= 1");
    if (static_cast<int>(r.size()) != f)
        throw std::invalid_argument("r must have exactly f entries");
    if (Jmask >= (1u << f))
        throw std::invalid_argument("J contains an index outside 0..f-1");
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (std::gcd(static_cast<std::int64_t>(d), p) != 1)
        throw std::invalid_argument("relative degree d must be coprime to p");
    if (auto why = maximal_J_violation(p, f, r, Jmask))
        throw std::invalid_argument(*why);
    const bool all_p = std::all_of(r.begin(), r.end(),
                                   [&](int v) { return v == p; });
    if (all_p && Jmask + 1 == (1u << f))
        throw std::invalid_argument(
            "excluded case: every r_i = p and J = {0,...,f-1}");
    if (!a.field()) throw std::invalid_argument("a must carry a field");
    if (a.is_zero() || !a.pow(d).is_one())
        throw std::invalid_argument("order of a must divide d");

    WeightInstance inst;
    inst.p = p;
    inst.f = f;
    inst.r = std::move(r);
    inst.Jmask = Jmask;
    inst.d = d;
    inst.field = a.field();
    inst.a = a;
    inst.a_order = a.mult_order();
    inst.pf_minus_1 = checked_pow_i64(p, f) - 1;

    inst.h.assign(static_cast<std::size_t>(f), 0);
    for (int i = 0; i < f; ++i)
        inst.h[static_cast<std::size_t>(i)] =
            inst.in_J(i) ? inst.r[static_cast<std::size_t>(i)] : 0;
    inst.xi = xi_alpha_beta(p, f, inst.r, Jmask);
    inst.cd = digits_from_exponent(p, f, inst.xi.xi[0]);
    inst.ddr.clear();
    for (int i = 0; i < f; ++i) inst.ddr.push_back(ddr_data(inst.cd, i));
    inst.muJ = mu_of_J(inst.cd, Jmask);
    inst.chi = classify_chi(inst.cd, a);
    if (inst.chi == ChiClass::trivial) {
        if (Jmask == 0)
            throw std::logic_error("trivial character with empty J");
        inst.i0 = inst.J_list().front();
    }
    return inst;
}

WeightInstance make_instance(std::int64_t p, int f, std::vector<int> r,
                             std::uint32_t Jmask, int d,
                             std::uint64_t a_order) {
    auto F = instance_field(p, f, d);
    return make_instance(p, f, std::move(r), Jmask, d, F->element_of_order(a_order));
}

std::vector<WeightInstance> enumerate_instances(std::int64_t p, int f,
                                                const std::vector<int>& d_list,
                                                APolicy policy) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("p must be prime");
    if (f < 1) throw std::invalid_argument("f must be >= 1");
    std::vector<int> ds = d_list;
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());

    struct DCtx {
        int d;
        Field::Ptr F;
        std::vector<FFElem> as;  // in enumeration order
    };
    std::vector<DCtx> dctx;
    for (int d : ds) {
        if (d < 1 || std::gcd(static_cast<std::int64_t>(d), p) != 1) continue;
        DCtx c;
        c.d = d;
        c.F = instance_field(p, f, d);
        if (policy == APolicy::per_order) {
            for (std::uint64_t m = 1; m <= static_cast<std::uint64_t>(d); ++m)
                if (static_cast<std::uint64_t>(d) % m == 0)
                    c.as.push_back(c.F->element_of_order(m));
        } else {
            FFElem b = c.F->element_of_order(static_cast<std::uint64_t>(d));
            FFElem cur = c.F->one();
            for (int t = 0; t < d; ++t) {
                c.as.push_back(cur);
                cur = cur * b;
            }
        }
        dctx.push_back(std::move(c));
    }

    std::vector<WeightInstance> out;
    std::vector<int> r(static_cast<std::size_t>(f), 1);
    while (true) {
        for (std::uint32_t Jmask = 0; Jmask < (1u << f); ++Jmask) {
            if (!is_maximal_J(p, f, r, Jmask)) continue;
            const bool all_p = std::all_of(r.begin(), r.end(),
                                           [&](int v) { return v == p; });
            if (all_p && Jmask + 1 == (1u << f)) continue;
            for (const auto& c : dctx)
                for (const auto& a : c.as)
                    out.push_back(make_instance(p, f, r, Jmask, c.d, a));
        }
        // next r in lexicographic order, r[0] most significant
        int k = f - 1;
        while (k >= 0 && r[static_cast<std::size_t>(k)] == p) {
            r[static_cast<std::size_t>(k)] = 1;
            --k;
        }
        if (k < 0) break;
        ++r[static_cast<std::size_t>(k)];
    }
    return out;
}

std::uint32_t mask_from_list(const std::vector<int>& J, int f) {
    std::uint32_t m = 0;
    for (int j : J) {
        if (j < 0 || j >= f)
            throw std::invalid_argument("J contains an index outside 0..f-1");
        m |= 1u << j;
    }
    return m;
}

std::vector<int> list_from_mask(std::uint32_t mask, int f) {
    std::vector<int> out;
    for (int j = 0; j < f; ++j)
        if ((mask >> j) & 1u) out.push_back(j);
    return out;
}

}  // namespace swp
