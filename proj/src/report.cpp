#include "swp/report.hpp"

#include <json.hpp>

namespace swp {

namespace {

using nlohmann::json;

json field_json(const Field::Ptr& F) {
    return json{{"p", F->p()}, {"e", F->e()}, {"modulus", F->modulus()}};
}

json elem_json(const FFElem& x) { return json(x.coeffs()); }

json instance_entry(const PairingReport& rep) {
    const auto& inst = rep.inst;
    json j;
    j["key"] = rep.key;
    j["p"] = inst.p;
    j["f"] = inst.f;
    j["r"] = inst.r;
    j["J"] = inst.J_list();
    j["d"] = inst.d;
    j["a"] = elem_json(inst.a);
    j["a_order"] = inst.a_order;
    j["field"] = field_json(inst.field);
    j["digits"] = inst.cd.digits;
    j["n"] = inst.cd.n;
    j["alpha"] = inst.xi.alpha;
    j["beta"] = inst.xi.beta;
    j["xi"] = inst.xi.xi;
    json ddr = json::array();
    for (const auto& dd : inst.ddr)
        ddr.push_back(json{{"s_prime", dd.s_prime}, {"n_prime", dd.n_prime}});
    j["ddr"] = ddr;
    j["mu_J"] = inst.muJ_list();
    j["chi"] = chi_class_name(inst.chi);
    if (inst.chi == ChiClass::trivial) j["i0"] = inst.i0;
    json classes = json::array();
    for (const auto& c : rep.classes)
        classes.push_back(json{
            {"kind", c.kind == SchreierClass::Kind::ordinary ? "ordinary" : "extra"},
            {"i", c.i},
            {"exponent", c.exponent}});
    j["classes"] = classes;
    json units = json::array();
    for (const auto& u : rep.units) {
        if (u.kind == AhUnit::Kind::standard)
            units.push_back(json{{"kind", "standard"},
                                 {"j", u.j},
                                 {"s_prime", u.s_prime},
                                 {"n_prime", u.n_prime}});
        else
            units.push_back(json{{"kind", "uniformizer"}});
    }
    j["units"] = units;
    json matrix = json::array();
    for (const auto& row : rep.matrix) {
        json r = json::array();
        for (const auto& x : row) r.push_back(elem_json(x));
        matrix.push_back(r);
    }
    j["matrix"] = matrix;
    j["rank"] = rep.rank;
    json checks;
    for (const auto& [name, pass] : rep.checks) checks[name] = pass;
    j["checks"] = checks;
    j["counterexamples"] = rep.counterexamples;
    return j;
}

}  // namespace

std::string report_json(const RangeSummary& sum) {
    json root;
    root["meta"] = json{{"format_version", 1},
                        {"p_list", sum.p_list},
                        {"f_min", sum.f_min},
                        {"f_max", sum.f_max},
                        {"d_list", sum.d_list},
                        {"a_policy", sum.policy == APolicy::per_order
                                         ? "per-order"
                                         : "all"},
                        {"seed", sum.seed}};
    json instances = json::array();
    for (const auto& rep : sum.reports) instances.push_back(instance_entry(rep));
    root["instances"] = instances;
    json counts;
    for (const auto& name : check_names()) {
        std::size_t pass = 0;
        for (const auto& rep : sum.reports)
            if (rep.check(name)) ++pass;
        counts[name] = pass;
    }
    root["summary"] = json{{"instances", sum.reports.size()},
                           {"failures", sum.failures},
                           {"check_pass_counts", counts}};
    return root.dump(2) + "\n";
}

std::string report_csv(const RangeSummary& sum) {
    std::string out = "instance,check,pass\n";
    for (const auto& rep : sum.reports)
        for (const auto& [name, pass] : rep.checks)
            out += rep.key + "," + name + "," + (pass ? "1" : "0") + "\n";
    return out;
}

std::string instance_json(const PairingReport& rep) {
    return instance_entry(rep).dump(2) + "\n";
}

}  // namespace swp
