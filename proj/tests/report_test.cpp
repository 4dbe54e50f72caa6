#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "swp/report.hpp"

using namespace swp;

TEST_CASE("json report round-trips byte-identically") {
    auto sum = verify_range({3}, 1, 2, {1, 2}, APolicy::per_order, 1, 5);
    const std::string text = report_json(sum);
    auto parsed = nlohmann::json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
    CHECK(parsed["summary"]["failures"] == 0);
    CHECK(parsed["summary"]["instances"] == sum.instance_count());
    CHECK(parsed["meta"]["p_list"] == std::vector<std::int64_t>({3}));
}

TEST_CASE("reports are independent of the worker count") {
    auto one = verify_range({2, 3}, 1, 2, {1}, APolicy::per_order, 1, 11);
    auto eight = verify_range({2, 3}, 1, 2, {1}, APolicy::per_order, 8, 11);
    CHECK(report_json(one) == report_json(eight));
    CHECK(report_csv(one) == report_csv(eight));
}

TEST_CASE("csv has one row per instance and check") {
    auto sum = verify_range({3}, 1, 1, {1}, APolicy::per_order, 1, 5);
    const std::string text = report_csv(sum);
    std::size_t rows = 0;
    for (char c : text) rows += c == '\n';
    CHECK(rows == 1 + sum.instance_count() * check_names().size());
    CHECK(text.rfind("instance,check,pass\n", 0) == 0);
}

TEST_CASE("field elements serialize as self-contained coefficient lists") {
    auto inst = make_instance(3, 2, {1, 1}, mask_from_list({1}, 2), 1, 1);
    auto rep = pairing_matrix(inst, 1);
    auto j = nlohmann::json::parse(instance_json(rep));
    CHECK(j["field"]["p"] == 3);
    CHECK(j["field"]["modulus"].size() == j["field"]["e"].get<int>() + 1);
    CHECK(j["matrix"].size() == 1);
    CHECK(j["matrix"][0].size() == 2);
    CHECK(j["matrix"][0][0].is_array());
    CHECK(j["checks"]["orthogonality"] == true);
    CHECK(j["key"] == rep.key);
}
