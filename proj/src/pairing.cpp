#include "swp/pairing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "swp/intutil.hpp"

namespace swp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

std::vector<SchreierClass> basis_classes(const WeightInstance& inst) {
    std::vector<SchreierClass> out;
    const auto& F = inst.field;
    const FFElem ainv = inst.a.inverse();
    for (int i : inst.J_list()) {
        SchreierClass c;
        c.kind = SchreierClass::Kind::ordinary;
        c.i = i;
        c.coeff = EmbVector::lambda_mu_inv(F, i, inst.a, inst.f, inst.d)
                      .scale(ainv);
        c.exponent = -inst.xi.xi[static_cast<std::size_t>(i)];
        out.push_back(std::move(c));
    }
    if (inst.chi == ChiClass::trivial) {
        SchreierClass c;
        c.kind = SchreierClass::Kind::extra;
        c.i = inst.i0;
        c.coeff = EmbVector::lambda_mu_inv(F, inst.i0, inst.a, inst.f, inst.d)
                      .scale(ainv);
        c.exponent = inst.p * inst.pf_minus_1 -
                     inst.xi.xi[static_cast<std::size_t>(inst.i0)];
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<AhUnit> unit_columns(const WeightInstance& inst) {
    std::vector<AhUnit> out;
    for (int j = 0; j < inst.f; ++j) {
        AhUnit u;
        u.kind = AhUnit::Kind::standard;
        u.j = j;
        u.s_prime = inst.ddr[static_cast<std::size_t>(j)].s_prime;
        u.n_prime = inst.ddr[static_cast<std::size_t>(j)].n_prime;
        out.push_back(u);
    }
    if (inst.chi == ChiClass::trivial) {
        AhUnit u;
        u.kind = AhUnit::Kind::uniformizer;
        u.j = inst.f;
        out.push_back(u);
    }
    return out;
}

FFElem pair_series(const WeightInstance& inst, const SchreierClass& c,
                   const AhUnit& v) {
    const auto& F = inst.field;
    SparseLaurent dlog(F, inst.f, inst.d);
    if (v.kind == AhUnit::Kind::uniformizer) {
        dlog = SparseLaurent::dlog_uniformizer(F, inst.f, inst.d);
    } else {
        // Only the term with n' p^m = -exponent can reach the residue, so
        // truncating at the least m with n' p^m > -exponent is lossless;
        // one extra step is kept.
        const std::int64_t pole = std::max<std::int64_t>(0, -c.exponent);
        int m_max = 0;
        std::int64_t pm = v.n_prime;
        while (pm <= pole) {
            if (pm > INT64_MAX / inst.p)
                throw std::overflow_error("pair_series: truncation overflow");
            pm *= inst.p;
            ++m_max;
        }
        ++m_max;
        const EmbVector lam =
            EmbVector::lambda_mu(F, v.s_prime, inst.a, inst.f, inst.d);
        dlog = SparseLaurent::dlog_ah_unit(v.n_prime, lam, m_max);
    }
    const SparseLaurent prod =
        dlog * SparseLaurent::monomial(c.coeff, c.exponent);
    return prod.residue().trace_sum();
}

FFElem pair_closed(const WeightInstance& inst, const SchreierClass& c,
                   const AhUnit& v) {
    const auto& F = inst.field;
    if (v.kind == AhUnit::Kind::uniformizer) {
        // residue of (all-ones) u^{-1} * coeff u^{exponent}
        return c.exponent == 0 ? c.coeff.trace_sum() : F->zero();
    }
    const std::int64_t pole = -c.exponent;
    if (pole < 1) return F->zero();
    std::int64_t pm = v.n_prime;
    std::int64_t m = 0;
    while (pm < pole) {
        if (pm > INT64_MAX / inst.p) return F->zero();
        pm *= inst.p;
        ++m;
    }
    if (pm != pole) return F->zero();
    if (floormod(v.s_prime - (c.i - m), inst.f) != 0) return F->zero();
    const std::int64_t q = (v.s_prime + m) / inst.f;
    return F->from_int(v.n_prime) * F->from_int(inst.d) * inst.a.pow(q - 1);
}

bool PairingReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const auto& c) { return c.second; });
}

bool PairingReport::check(const std::string& name) const {
    for (const auto& [n, v] : checks)
        if (n == name) return v;
    throw std::invalid_argument("unknown check: " + name);
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "xi_two_routes",
        "xi_congruence",
        "xi_bounds",
        "n_bounds",
        "nprime_units",
        "xi_valuation_cases",
        "mu_size_preserved",
        "trivial_chi_xi_value",
        "extra_exponent_no_solution",
        "phi_module_replay",
        "oracle_agreement",
        "bilinearity",
        "orthogonality",
        "rank_matches_dimension",
        "proposition_nonzero_support",
    };
    return names;
}

namespace {

// Least c with p^c >= bound, plus one spare step.
int proposition_m_cap(std::int64_t p, std::int64_t bound) {
    int m = 0;
    std::int64_t pm = 1;
    while (pm < bound) {
        pm *= p;
        ++m;
    }
    return m + 1;
}

bool replay_check(const WeightInstance& inst, std::vector<std::string>& ce) {
    const auto& F = inst.field;
    std::vector<FFElem> x(static_cast<std::size_t>(inst.f), F->zero());
    for (int i : inst.J_list()) x[static_cast<std::size_t>(i)] = F->one();
    const FFElem x2 =
        inst.chi == ChiClass::trivial ? F->one() : F->zero();
    PhiMatSeq seq = build_bdj(inst, x, x2);
    if (!is_etale(seq)) {
        ce.push_back(inst.key() + ": built sequence is not etale");
        return false;
    }
    PhiMatSeq seqM = base_change_to_M(seq, inst.d);
    if (!is_etale(seqM)) {
        ce.push_back(inst.key() + ": base-changed sequence is not etale");
        return false;
    }
    PhiMatSeq seqC = change_basis(seqM, standard_basis_change(inst));
    if (!is_etale(seqC)) {
        ce.push_back(inst.key() + ": basis-changed sequence is not etale");
        return false;
    }
    for (int i = 0; i < seqC.period; ++i) {
        const auto& m = seqC.mats[static_cast<std::size_t>(i)];
        if (!m.entry[0][0].is_one() || !m.entry[1][1].is_one() ||
            !m.entry[1][0].is_zero()) {
            ce.push_back(inst.key() + ": sequence not unipotent at index " +
                         std::to_string(i));
            return false;
        }
    }
    SparseLaurent cls = extract_as_class(seqC);

    // Expected support: one pole -xi_i per i in J, plus exponent 0 for the
    // quadratic term of the trivial character.
    std::set<std::int64_t> expected;
    for (int i : inst.J_list())
        expected.insert(-inst.xi.xi[static_cast<std::size_t>(i)]);
    if (inst.chi == ChiClass::trivial) expected.insert(0);
    std::set<std::int64_t> got;
    for (const auto& [e, cvec] : cls.terms()) got.insert(e);
    if (expected != got) {
        std::ostringstream os;
        os << inst.key() << ": extracted exponents {";
        for (auto e : got) os << e << ' ';
        os << "} do not match expected {";
        for (auto e : expected) os << e << ' ';
        os << "}";
        ce.push_back(os.str());
        return false;
    }

    // Componentwise shape: at each exponent, the residue-class-i block must
    // be a nonzero multiple of the expected eigenvector, and only blocks
    // belonging to that exponent may be populated.
    bool ok = true;
    for (const auto& [e, cvec] : cls.terms()) {
        for (int s = 0; s < inst.f; ++s) {
            bool any = false;
            for (int t = 0; t < inst.d; ++t)
                if (!cvec.at(s + t * inst.f).is_zero()) any = true;
            if (!any) continue;
            const bool expected_here =
                (inst.in_J(s) &&
                 -inst.xi.xi[static_cast<std::size_t>(s)] == e) ||
                (inst.chi == ChiClass::trivial && s == inst.i0 && e == 0);
            if (!expected_here) {
                ce.push_back(inst.key() + ": unexpected coefficient block at"
                                          " exponent " +
                             std::to_string(e));
                ok = false;
                continue;
            }
            const FFElem v0 = cvec.at(s);
            if (v0.is_zero()) {
                ce.push_back(inst.key() +
                             ": vanishing leading component at exponent " +
                             std::to_string(e));
                ok = false;
                continue;
            }
            FFElem ap = F->one();
            for (int t = 0; t < inst.d; ++t) {
                if (cvec.at(s + t * inst.f) != v0 * ap) {
                    ce.push_back(inst.key() +
                                 ": coefficient block is not proportional to"
                                 " the eigenvector at exponent " +
                                 std::to_string(e));
                    ok = false;
                    break;
                }
                ap = ap * inst.a;
            }
        }
    }
    return ok;
}

}  // namespace

int matrix_rank(std::vector<std::vector<FFElem>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const FFElem inv = m[rank][c].inverse();
        for (std::size_t cc = c; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            const FFElem factor = m[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] = m[r][cc] - factor * m[rank][cc];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

PairingReport pairing_matrix(const WeightInstance& inst, std::uint64_t seed) {
    PairingReport rep;
    rep.key = inst.key();
    rep.inst = inst;
    rep.classes = basis_classes(inst);
    rep.units = unit_columns(inst);
    const auto& F = inst.field;
    const std::int64_t M = inst.pf_minus_1;
    auto& ce = rep.counterexamples;

    // --- combinatorial suite -------------------------------------------
    bool xi_two_routes = true;
    try {
        (void)xi_alpha_beta(inst.p, inst.f, inst.r, inst.Jmask);
    } catch (const std::exception& ex) {
        xi_two_routes = false;
        ce.push_back(rep.key + ": " + ex.what());
    }

    bool xi_congruence = true;
    for (int i = 0; i < inst.f; ++i) {
        if (floormod(inst.xi.xi[static_cast<std::size_t>(i)] -
                         inst.cd.n[static_cast<std::size_t>(i)],
                     M) != 0) {
            xi_congruence = false;
            ce.push_back(rep.key + ": xi_" + std::to_string(i) +
                         " is not congruent to n_" + std::to_string(i));
        }
    }

    bool xi_bounds = true;
    const std::int64_t xi_upper = inst.p * inst.p * M / (inst.p - 1);
    for (int i : inst.J_list()) {
        const std::int64_t xi = inst.xi.xi[static_cast<std::size_t>(i)];
        if (!(0 < xi && xi < xi_upper)) {
            xi_bounds = false;
            ce.push_back(rep.key + ": xi_" + std::to_string(i) +
                         " = " + std::to_string(xi) + " violates its bounds");
        }
    }

    bool n_bounds = true;
    const std::int64_t n_lo = M / (inst.p - 1);
    for (int i = 0; i < inst.f; ++i) {
        const std::int64_t n = inst.cd.n[static_cast<std::size_t>(i)];
        if (!(n_lo <= n && n < M + n_lo)) {
            n_bounds = false;
            ce.push_back(rep.key + ": n_" + std::to_string(i) +
                         " = " + std::to_string(n) + " violates its bounds");
        }
    }

    bool nprime_units = true;
    for (int j = 0; j < inst.f; ++j) {
        const std::int64_t np = inst.ddr[static_cast<std::size_t>(j)].n_prime;
        if (!(np > 0 && np % inst.p != 0)) {
            nprime_units = false;
            ce.push_back(rep.key + ": n'_" + std::to_string(j) +
                         " = " + std::to_string(np) + " is not a positive unit");
        }
    }

    bool xi_valuation = true;
    for (int i : inst.J_list()) {
        const std::int64_t xi = inst.xi.xi[static_cast<std::size_t>(i)];
        if (xi <= 0) { xi_valuation = false; continue; }
        const int m = valuation(xi, inst.p);
        bool ok = m >= 1;
        if (ok && m > 1) {
            ok = xi == checked_pow_i64(inst.p, m) * (inst.cd.n_at(i - m) - M);
        } else if (ok && m == 1) {
            if (xi / inst.p >= n_lo)
                ok = xi == inst.p * inst.cd.n_at(i - 1);
            else
                ok = xi == inst.p * (inst.cd.n_at(i - 1) - M);
        }
        if (!ok) {
            xi_valuation = false;
            ce.push_back(rep.key + ": xi_" + std::to_string(i) +
                         " fails the valuation case analysis");
        }
    }

    bool mu_size = std::popcount(inst.muJ) == std::popcount(inst.Jmask);
    if (!mu_size)
        ce.push_back(rep.key + ": mu(J) has different size than J");

    bool trivial_xi = true;
    if (inst.chi == ChiClass::trivial) {
        for (int i : inst.J_list()) {
            if (inst.xi.xi[static_cast<std::size_t>(i)] != inst.p * M) {
                trivial_xi = false;
                ce.push_back(rep.key + ": trivial character but xi_" +
                             std::to_string(i) + " != p(p^f-1)");
            }
        }
    }

    const std::int64_t xi_max =
        *std::max_element(inst.xi.xi.begin(), inst.xi.xi.end());
    const int m_cap = proposition_m_cap(inst.p, std::max<std::int64_t>(xi_max, 1));

    bool extra_no_solution = true;
    if (inst.chi == ChiClass::trivial) {
        for (int i : inst.J_list()) {
            const std::int64_t lhs =
                inst.xi.xi[static_cast<std::size_t>(i)] - inst.p * M;
            for (int j = 0; j < inst.f; ++j) {
                std::int64_t pm = inst.ddr[static_cast<std::size_t>(j)].n_prime;
                for (int m = 0; m <= m_cap; ++m) {
                    if (lhs == pm) {
                        extra_no_solution = false;
                        ce.push_back(rep.key +
                                     ": extra-class exponent equation has a"
                                     " solution at (i,j,m) = (" +
                                     std::to_string(i) + "," + std::to_string(j) +
                                     "," + std::to_string(m) + ")");
                    }
                    pm *= inst.p;
                }
            }
        }
    }

    bool replay_ok = true;
    try {
        replay_ok = replay_check(inst, ce);
    } catch (const std::exception& ex) {
        replay_ok = false;
        ce.push_back(rep.key + ": replay raised: " + ex.what());
    }

    // --- pairing matrix -------------------------------------------------
    bool oracle_ok = true;
    rep.matrix.assign(rep.classes.size(), {});
    try {
        for (std::size_t r = 0; r < rep.classes.size(); ++r) {
            for (std::size_t c = 0; c < rep.units.size(); ++c) {
                const FFElem s = pair_series(inst, rep.classes[r], rep.units[c]);
                const FFElem cl = pair_closed(inst, rep.classes[r], rep.units[c]);
                if (s != cl) {
                    oracle_ok = false;
                    ce.push_back(rep.key + ": series/closed mismatch at entry (" +
                                 std::to_string(r) + "," + std::to_string(c) +
                                 "): " + s.str() + " vs " + cl.str());
                }
                rep.matrix[r].push_back(s);
            }
        }
    } catch (const std::exception& ex) {
        oracle_ok = false;
        ce.push_back(rep.key + ": pairing raised: " + ex.what());
        rep.matrix.assign(rep.classes.size(),
                          std::vector<FFElem>(rep.units.size(), F->zero()));
    }

    // --- bilinearity in the class coefficient ---------------------------
    bool bilinear_ok = true;
    {
        std::uint64_t st = splitmix64(seed ^ fnv1a(rep.key));
        std::vector<std::int64_t> cc(static_cast<std::size_t>(F->e()), 0);
        for (auto& v : cc) {
            st = splitmix64(st);
            v = static_cast<std::int64_t>(st % static_cast<std::uint64_t>(F->p()));
        }
        FFElem scalar = F->from_coeffs(std::move(cc));
        if (scalar.is_zero()) scalar = F->from_int(1);
        for (std::size_t r = 0; r < rep.classes.size() && bilinear_ok; ++r) {
            SchreierClass scaled = rep.classes[r];
            scaled.coeff = scaled.coeff.scale(scalar);
            for (std::size_t c = 0; c < rep.units.size(); ++c) {
                const FFElem lhs = pair_series(inst, scaled, rep.units[c]);
                if (lhs != scalar * rep.matrix[r][c]) {
                    bilinear_ok = false;
                    ce.push_back(rep.key + ": pairing is not linear in the"
                                           " class coefficient at entry (" +
                                 std::to_string(r) + "," + std::to_string(c) + ")");
                    break;
                }
            }
        }
    }

    // --- orthogonality off mu(J), extra row off the uniformizer ---------
    bool orth_ok = true;
    for (std::size_t c = 0; c < rep.units.size(); ++c) {
        if (rep.units[c].kind != AhUnit::Kind::standard) continue;
        const bool in_mu = inst.in_muJ(rep.units[c].j);
        for (std::size_t r = 0; r < rep.classes.size(); ++r) {
            const bool must_vanish =
                !in_mu || rep.classes[r].kind == SchreierClass::Kind::extra;
            if (must_vanish && !rep.matrix[r][c].is_zero()) {
                orth_ok = false;
                ce.push_back(rep.key + ": nonzero pairing at row " +
                             std::to_string(r) + ", column " +
                             std::to_string(rep.units[c].j) +
                             (in_mu ? " (extra row)" : " (outside mu(J))"));
            }
        }
    }

    // --- rank on the mu(J) (+ uniformizer) columns -----------------------
    std::vector<std::vector<FFElem>> sub(rep.classes.size());
    for (std::size_t c = 0; c < rep.units.size(); ++c) {
        const bool keep = rep.units[c].kind == AhUnit::Kind::uniformizer ||
                          inst.in_muJ(rep.units[c].j);
        if (!keep) continue;
        for (std::size_t r = 0; r < rep.classes.size(); ++r)
            sub[r].push_back(rep.matrix[r][c]);
    }
    rep.rank = matrix_rank(sub);
    const int expected_rank =
        std::popcount(inst.Jmask) + (inst.chi == ChiClass::trivial ? 1 : 0);
    const bool rank_ok = rep.rank == expected_rank;
    if (!rank_ok)
        ce.push_back(rep.key + ": rank " + std::to_string(rep.rank) +
                     " != expected " + std::to_string(expected_rank));

    // --- the nonzero-support proposition --------------------------------
    bool prop_ok = true;
    for (int i : inst.J_list()) {
        const std::int64_t xi = inst.xi.xi[static_cast<std::size_t>(i)];
        for (int j = 0; j < inst.f; ++j) {
            const auto& dd = inst.ddr[static_cast<std::size_t>(j)];
            std::int64_t pm = dd.n_prime;
            for (int m = 0; m <= m_cap; ++m) {
                const bool sigma_match = floormod(dd.s_prime - (i - m), inst.f) == 0;
                const bool xi_match = xi == pm;
                if (sigma_match && xi_match && !inst.in_muJ(j)) {
                    prop_ok = false;
                    ce.push_back(rep.key + ": proposition fails at (i,m,j) = (" +
                                 std::to_string(i) + "," + std::to_string(m) +
                                 "," + std::to_string(j) + ")");
                }
                if (pm > INT64_MAX / inst.p) break;
                pm *= inst.p;
            }
        }
    }

    rep.checks = {
        {"xi_two_routes", xi_two_routes},
        {"xi_congruence", xi_congruence},
        {"xi_bounds", xi_bounds},
        {"n_bounds", n_bounds},
        {"nprime_units", nprime_units},
        {"xi_valuation_cases", xi_valuation},
        {"mu_size_preserved", mu_size},
        {"trivial_chi_xi_value", trivial_xi},
        {"extra_exponent_no_solution", extra_no_solution},
        {"phi_module_replay", replay_ok},
        {"oracle_agreement", oracle_ok},
        {"bilinearity", bilinear_ok},
        {"orthogonality", orth_ok},
        {"rank_matches_dimension", rank_ok},
        {"proposition_nonzero_support", prop_ok},
    };
    return rep;
}

RangeSummary verify_range(const std::vector<std::int64_t>& p_list, int f_min,
                          int f_max, const std::vector<int>& d_list,
                          APolicy policy, int workers, std::uint64_t seed) {
    if (f_min < 1 || f_max < f_min)
        throw std::invalid_argument("verify_range: empty or invalid f range");
    if (d_list.empty())
        throw std::invalid_argument("verify_range: empty d list");
    std::vector<std::int64_t> ps = p_list;
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    RangeSummary sum;
    sum.p_list = ps;
    sum.f_min = f_min;
    sum.f_max = f_max;
    sum.d_list = d_list;
    sum.policy = policy;
    sum.seed = seed;

    std::vector<WeightInstance> insts;
    for (std::int64_t p : ps)
        for (int f = f_min; f <= f_max; ++f) {
            auto batch = enumerate_instances(p, f, d_list, policy);
            for (auto& b : batch) insts.push_back(std::move(b));
        }

    sum.reports.resize(insts.size());
    const int nw = std::max(1, workers);
    if (nw == 1 || insts.size() < 2) {
        for (std::size_t i = 0; i < insts.size(); ++i)
            sum.reports[i] = pairing_matrix(insts[i], seed);
    } else {
        std::atomic<std::size_t> next{0};
        auto run = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= insts.size()) return;
                sum.reports[i] = pairing_matrix(insts[i], seed);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < nw; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    for (const auto& r : sum.reports)
        if (!r.all_pass()) ++sum.failures;
    return sum;
}

}  // namespace swp
