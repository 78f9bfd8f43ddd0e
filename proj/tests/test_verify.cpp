#include "doctest.h"

#include "fanol2/error.hpp"
#include "fanol2/verify.hpp"
#include "json.hpp"

using namespace fanol2;

namespace {

const Check* find_check(const VerifyReport& r, const std::string& id)
{
    for (const Check& c : r.checks)
        if (c.id == id)
            return &c;
    return nullptr;
}

} // namespace

TEST_CASE("roots suite")
{
    const VerifyReport r = run_verify(Suite::Roots, VerifyConfig{});
    CHECK(r.ok());
    std::size_t decimals = 0;
    for (const Check& c : r.checks)
        if (c.id.rfind("decimal.", 0) == 0) {
            ++decimals;
            CHECK(c.status == CheckStatus::Pass);
            CHECK(std::stod(c.tolerance) == doctest::Approx(5e-6));
        }
    CHECK(decimals == 11);
    const Check* norm = find_check(r, "density.norm_ratio_n1000");
    REQUIRE(norm != nullptr);
    CHECK(norm->status == CheckStatus::Pass);
}

TEST_CASE("identities suite is reproducible")
{
    VerifyConfig cfg;
    cfg.seed = 7;
    const VerifyReport a = run_verify(Suite::Identities, cfg);
    const VerifyReport b = run_verify(Suite::Identities, cfg);
    CHECK(a.ok());
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i)
        CHECK(a.checks[i].measured == b.checks[i].measured);
}

TEST_CASE("report rendering")
{
    const VerifyReport r = run_verify(Suite::Roots, VerifyConfig{3, 1, 0});
    const std::string text = format_verify_text(r);
    CHECK(text.find("PASS  decimal.") != std::string::npos);
    CHECK(text.find("totals: ") != std::string::npos);

    const auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["suite"] == "roots");
    CHECK(j["config"]["seed"] == 3);
    CHECK(j["status"] == "pass");
    CHECK(j["totals"]["fail"] == 0);
    CHECK(j["checks"].size() == r.checks.size());
    CHECK(j["checks"][0].contains("id"));
    CHECK(j["checks"][0].contains("status"));
    CHECK(j["checks"][0].contains("tolerance"));
}

TEST_CASE("suite names")
{
    CHECK(suite_from_string("lemma51") == Suite::Lemma51);
    CHECK(std::string(to_string(Suite::Oracles)) == "oracles");
    CHECK_THROWS_AS(suite_from_string("everything"), Error);
}
