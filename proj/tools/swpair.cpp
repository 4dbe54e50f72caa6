// Command-line front end: inspect a single weight instance, verify ranges
// exhaustively, check the Artin-Hasse identities, and emit reports.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "swp/artin_hasse.hpp"
#include "swp/intutil.hpp"
#include "swp/pairing.hpp"
#include "swp/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::vector<std::int64_t> parse_i64_list(const std::string& s) {
    std::vector<std::int64_t> out;
    for (int v : parse_int_list(s)) out.push_back(v);
    return out;
}

// Relative output paths resolve against SWPAIR_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return p;
    if (const char* dir = std::getenv("SWPAIR_OUT_DIR"))
        return std::filesystem::path(dir) / p;
    return p;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    const auto p = resolve_out(out_path);
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + p.string());
    os << text;
}

bool within_guard(std::int64_t p, int f, int d) {
    return p <= 7 && f <= 6 && d <= 6;
}

swp::APolicy parse_policy(const std::string& s) {
    if (s == "per-order") return swp::APolicy::per_order;
    if (s == "all") return swp::APolicy::all;
    throw CLI::ValidationError("--a-policy must be per-order or all");
}

std::string format_elem(const swp::FFElem& x) { return x.str(); }

std::string inspect_plain(const swp::PairingReport& rep) {
    const auto& inst = rep.inst;
    std::ostringstream os;
    auto join = [](const auto& v) {
        std::ostringstream s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s << ',';
            s << v[i];
        }
        return s.str();
    };
    os << "instance " << rep.key << "\n";
    os << "  p=" << inst.p << " f=" << inst.f << " r=(" << join(inst.r)
       << ") J={" << join(inst.J_list()) << "} d=" << inst.d
       << " a=" << format_elem(inst.a) << " (order " << inst.a_order << ")\n";
    os << "  field F_{" << inst.p << "^" << inst.field->e() << "}, modulus ["
       << join(inst.field->modulus()) << "]\n";
    os << "  digits = (" << join(inst.cd.digits) << ")\n";
    os << "  n      = (" << join(inst.cd.n) << ")\n";
    os << "  alpha  = (" << join(inst.xi.alpha) << ")\n";
    os << "  beta   = (" << join(inst.xi.beta) << ")\n";
    os << "  xi     = (" << join(inst.xi.xi) << ")\n";
    os << "  ddr (s',n') =";
    for (const auto& dd : inst.ddr)
        os << " (" << dd.s_prime << "," << dd.n_prime << ")";
    os << "\n";
    os << "  mu(J)  = {" << join(inst.muJ_list()) << "}\n";
    os << "  chi    = " << swp::chi_class_name(inst.chi);
    if (inst.chi == swp::ChiClass::trivial) os << " (i0 = " << inst.i0 << ")";
    os << "\n";
    os << "  matrix rows: classes";
    os << "; columns:";
    for (const auto& u : rep.units) {
        if (u.kind == swp::AhUnit::Kind::standard)
            os << " u" << u.j << (inst.in_muJ(u.j) ? "*" : "");
        else
            os << " triv";
    }
    os << "  (* = column in mu(J))\n";
    for (std::size_t r = 0; r < rep.matrix.size(); ++r) {
        const auto& c = rep.classes[r];
        os << "    "
           << (c.kind == swp::SchreierClass::Kind::ordinary ? "class i=" : "extra i=")
           << c.i << " exp=" << c.exponent << " :";
        for (const auto& x : rep.matrix[r]) os << " " << format_elem(x);
        os << "\n";
    }
    os << "  rank = " << rep.rank << "\n";
    // Exploratory view of the nonzero pattern (no assertion attached).
    os << "  nonzero pattern:";
    bool bijective = true;
    std::set<int> used;
    for (std::size_t r = 0; r < rep.matrix.size(); ++r) {
        int count = 0, col = -1;
        for (std::size_t cidx = 0; cidx < rep.matrix[r].size(); ++cidx)
            if (!rep.matrix[r][cidx].is_zero()) {
                ++count;
                col = static_cast<int>(cidx);
            }
        os << " row" << r << "->";
        if (count == 0) {
            os << "none";
            bijective = false;
        } else if (count == 1) {
            os << "col" << col;
            if (!used.insert(col).second) bijective = false;
        } else {
            os << "multiple";
            bijective = false;
        }
    }
    os << (bijective ? " (one nonzero per row, distinct columns)" : "") << "\n";
    os << "  checks:";
    bool all = true;
    for (const auto& [name, pass] : rep.checks) {
        if (!pass) {
            os << " FAIL:" << name;
            all = false;
        }
    }
    if (all) os << " all pass";
    os << "\n";
    for (const auto& ce : rep.counterexamples) os << "  !! " << ce << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact residue-pairing verifier for weight instances"};
    app.require_subcommand(1);

    // ---- inspect -------------------------------------------------------
    auto* cmd_inspect = app.add_subcommand("inspect", "full dossier for one instance");
    std::int64_t ip = 3;
    int iff = 1, id = 1;
    std::uint64_t ia_order = 1;
    std::string ir, iJ, iformat = "plain", iout;
    std::uint64_t iseed = 1;
    cmd_inspect->add_option("--p", ip, "prime p")->required();
    cmd_inspect->add_option("--f", iff, "degree f")->required();
    cmd_inspect->add_option("--r", ir, "comma-separated r_0..r_{f-1}")->required();
    cmd_inspect->add_option("--J", iJ, "comma-separated subset of 0..f-1 (omit for empty)");
    cmd_inspect->add_option("--d", id, "relative degree d");
    cmd_inspect->add_option("--a-order", ia_order, "order of the unramified value a");
    cmd_inspect->add_option("--format", iformat, "plain|json");
    cmd_inspect->add_option("--out", iout, "output path");
    cmd_inspect->add_option("--seed", iseed, "seed for sampled checks");

    // ---- verify --------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "exhaustive range verification");
    std::string vp = "2,3", vd = "1", vpolicy = "per-order", vformat = "plain", vout;
    int vf_min = 1, vf_max = 2, vworkers = 1;
    std::uint64_t vseed = 1;
    bool vallow_large = false;
    cmd_verify->add_option("--p", vp, "comma-separated primes");
    cmd_verify->add_option("--f-min", vf_min, "smallest f");
    cmd_verify->add_option("--f-max", vf_max, "largest f")->required();
    cmd_verify->add_option("--d", vd, "comma-separated relative degrees");
    cmd_verify->add_option("--a-policy", vpolicy, "per-order|all");
    cmd_verify->add_option("--workers", vworkers, "worker thread count");
    cmd_verify->add_option("--seed", vseed, "seed for sampled checks");
    cmd_verify->add_option("--format", vformat, "plain|json|csv");
    cmd_verify->add_option("--out", vout, "output path");
    cmd_verify->add_flag("--allow-large", vallow_large,
                         "lift the p<=7, f<=6, d<=6 guard");

    // ---- ah-check ------------------------------------------------------
    auto* cmd_ah = app.add_subcommand("ah-check", "Artin-Hasse identity checks");
    std::int64_t ap = 2;
    int an = 1, atrunc = 8, aprint = 0;
    cmd_ah->add_option("--p", ap, "prime p")->required();
    cmd_ah->add_option("--n", an, "cyclotomic level p^n");
    cmd_ah->add_option("--trunc", atrunc, "series truncation")->required();
    cmd_ah->add_option("--print-coeffs", aprint, "print the first N coefficients");

    // ---- enumerate -----------------------------------------------------
    auto* cmd_enum = app.add_subcommand("enumerate", "list instances for (p, f)");
    std::int64_t ep = 3;
    int ef = 1;
    std::string ed = "1", epolicy = "per-order", eformat = "plain", eout;
    cmd_enum->add_option("--p", ep, "prime p")->required();
    cmd_enum->add_option("--f", ef, "degree f")->required();
    cmd_enum->add_option("--d", ed, "comma-separated relative degrees");
    cmd_enum->add_option("--a-policy", epolicy, "per-order|all");
    cmd_enum->add_option("--format", eformat, "plain|json");
    cmd_enum->add_option("--out", eout, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (*cmd_inspect) {
            const auto r = parse_int_list(ir);
            const auto J = parse_int_list(iJ);
            if (!within_guard(ip, iff, id))
                throw std::invalid_argument(
                    "instance outside the default desk-scale guard");
            const auto inst = swp::make_instance(
                ip, iff, r, swp::mask_from_list(J, iff), id, ia_order);
            const auto rep = swp::pairing_matrix(inst, iseed);
            emit(iformat == "json" ? swp::instance_json(rep) : inspect_plain(rep),
                 iout);
            return rep.all_pass() ? kExitPass : kExitCheckFailed;
        }

        if (*cmd_verify) {
            const auto ps = parse_i64_list(vp);
            const auto ds = parse_int_list(vd);
            if (!vallow_large) {
                for (auto p : ps)
                    for (int d : ds)
                        if (!within_guard(p, vf_max, d))
                            throw std::invalid_argument(
                                "range outside the default guard (p<=7, f<=6, "
                                "d<=6); pass --allow-large to lift it");
            }
            const auto sum = swp::verify_range(ps, vf_min, vf_max, ds,
                                               parse_policy(vpolicy), vworkers,
                                               vseed);
            if (vformat == "json") {
                emit(swp::report_json(sum), vout);
            } else if (vformat == "csv") {
                emit(swp::report_csv(sum), vout);
            } else {
                std::ostringstream os;
                os << "instances " << sum.instance_count() << ", failures "
                   << sum.failures << "\n";
                for (const auto& rep : sum.reports)
                    if (!rep.all_pass()) {
                        os << "FAIL " << rep.key << "\n";
                        for (const auto& ce : rep.counterexamples)
                            os << "  " << ce << "\n";
                    }
                emit(os.str(), vout);
            }
            return sum.failures == 0 ? kExitPass : kExitCheckFailed;
        }

        if (*cmd_ah) {
            if (an < 1 || atrunc < 1)
                throw std::invalid_argument("need n >= 1 and trunc >= 1");
            const bool norm_ok = swp::verify_norm_identity(ap, an, atrunc);
            bool integral_ok = true;
            try {
                (void)swp::ah_mod_p(ap, atrunc);
            } catch (const std::logic_error&) {
                integral_ok = false;
            }
            std::ostringstream os;
            os << "norm identity (p=" << ap << ", n=" << an
               << ", trunc=" << atrunc << "): " << (norm_ok ? "pass" : "FAIL")
               << "\n";
            os << "p-integrality up to x^" << (atrunc - 1) << ": "
               << (integral_ok ? "pass" : "FAIL") << "\n";
            if (aprint > 0) {
                const auto cs = swp::ah_coeffs(ap, aprint);
                for (int i = 0; i < aprint; ++i)
                    os << "coeff " << i << ": "
                       << cs[static_cast<std::size_t>(i)].get_str() << "\n";
            }
            std::cout << os.str();
            return (norm_ok && integral_ok) ? kExitPass : kExitCheckFailed;
        }

        if (*cmd_enum) {
            const auto ds = parse_int_list(ed);
            if (!within_guard(ep, ef, 1))
                throw std::invalid_argument(
                    "range outside the default desk-scale guard");
            const auto insts =
                swp::enumerate_instances(ep, ef, ds, parse_policy(epolicy));
            if (eformat == "json") {
                std::string out = "[\n";
                for (std::size_t i = 0; i < insts.size(); ++i)
                    out += "  \"" + insts[i].key() +
                           (i + 1 < insts.size() ? "\",\n" : "\"\n");
                out += "]\n";
                emit(out, eout);
            } else {
                std::ostringstream os;
                for (const auto& inst : insts) os << inst.key() << "\n";
                os << "total " << insts.size() << "\n";
                emit(os.str(), eout);
            }
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitConfig;
}
