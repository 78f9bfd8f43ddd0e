#include "doctest.h"

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <string>

#include "fanol2/fanol2.h"
#include "json.hpp"

namespace {

struct ObjectDeleter {
    void operator()(fl2_object* o) const { fl2_object_free(o); }
};
using Object = std::unique_ptr<fl2_object, ObjectDeleter>;

std::string take(char* s)
{
    std::string out = s == nullptr ? "" : s;
    fl2_string_free(s);
    return out;
}

Object generate(const char* name, std::initializer_list<std::uint64_t> params)
{
    fl2_object* obj = nullptr;
    REQUIRE(fl2_generate(name, params.begin(), params.size(), &obj) == FL2_OK);
    return Object(obj);
}

Object parse(const char* text)
{
    fl2_object* obj = nullptr;
    REQUIRE(fl2_object_parse(text, &obj) == FL2_OK);
    return Object(obj);
}

std::string norm(const fl2_object* obj, unsigned p)
{
    char* s = nullptr;
    REQUIRE(fl2_norm(obj, p, &s) == FL2_OK);
    return take(s);
}

nlohmann::json search(const std::string& request)
{
    char* s = nullptr;
    REQUIRE(fl2_search(request.c_str(), &s) == FL2_OK);
    return nlohmann::json::parse(take(s));
}

} // namespace

TEST_CASE("objects and norms")
{
    CHECK(std::string(fl2_version()).size() > 0);
    const Object b4 = generate("bn", {4});
    fl2_kind kind{};
    REQUIRE(fl2_object_kind(b4.get(), &kind) == FL2_OK);
    CHECK(kind == FL2_KIND_3GRAPH);
    CHECK(norm(b4.get(), 2) == "24");
    CHECK(norm(generate("bn", {5}).get(), 2) == "75");
    CHECK(norm(parse("3graph 3\n0 1 2\n").get(), 1) == "3");
    double real = 0;
    REQUIRE(fl2_norm_real(b4.get(), 2.0, &real) == FL2_OK);
    CHECK(real == doctest::Approx(24.0));

    char* text = nullptr;
    REQUIRE(fl2_object_to_text(b4.get(), &text) == FL2_OK);
    const std::string round = take(text);
    CHECK(norm(parse(round.c_str()).get(), 2) == "24");

    char* stats = nullptr;
    REQUIRE(fl2_object_stats(generate("bn", {10}).get(), &stats) == FL2_OK);
    const auto j = nlohmann::json::parse(take(stats));
    CHECK(j["kind"] == "3graph");
    CHECK(j["n"] == 10);
    CHECK(j["l2_norm"] == "2100");

    char* summary = nullptr;
    REQUIRE(fl2_l2_summary(b4.get(), &summary) == FL2_OK);
    const auto s = nlohmann::json::parse(take(summary));
    CHECK(s["norm_l2"] == "24");
    CHECK(s["l2_degrees"].size() == 4);
}

TEST_CASE("multigraph objects")
{
    const Object mg = generate("mg-bipartite", {13});
    char* stats = nullptr;
    REQUIRE(fl2_object_stats(mg.get(), &stats) == FL2_OK);
    const auto j = nlohmann::json::parse(take(stats));
    CHECK(j["kind"] == "mgraph");
    CHECK(j["size"] == 282);
    CHECK(j["layers"] == 5);
    char* s = nullptr;
    CHECK(fl2_norm(mg.get(), 2, &s) == FL2_ERR_INVALID_ARGUMENT);
    CHECK(std::string(fl2_last_error()).size() > 0);
}

TEST_CASE("pattern checks")
{
    int found = -1;
    char* witness = nullptr;
    REQUIRE(fl2_check(generate("kn3", {7}).get(), "fano", &found, &witness) == FL2_OK);
    CHECK(found == 1);
    CHECK(take(witness).rfind("embedding ", 0) == 0);

    REQUIRE(fl2_check(generate("bn", {12}).get(), "fano", &found, &witness) == FL2_OK);
    CHECK(found == 0);
    CHECK(witness == nullptr);

    REQUIRE(fl2_check(generate("bn", {6}).get(), "bipartite3", &found, &witness) == FL2_OK);
    CHECK(found == 0);
    CHECK(take(witness).find(" | part2 ") != std::string::npos);

    REQUIRE(fl2_check(generate("mg-bipartite", {8}).get(), "k4multi", &found, &witness) == FL2_OK);
    CHECK(found == 0);
    REQUIRE(fl2_check(parse("mgraph 4 3\n0 1 1\n2 3 1\n0 2 2\n1 3 2\n0 3 3\n1 2 3\n").get(), "k4multi", &found,
                      &witness) == FL2_OK);
    CHECK(found == 1);
    CHECK(take(witness).rfind("layers 1 2 3", 0) == 0);

    CHECK(fl2_check(generate("bn", {5}).get(), "k4multi", &found, &witness) == FL2_ERR_INVALID_ARGUMENT);
    CHECK(fl2_check(generate("bn", {5}).get(), "petersen", &found, &witness) == FL2_ERR_INVALID_ARGUMENT);
}

TEST_CASE("errors")
{
    fl2_object* obj = nullptr;
    CHECK(fl2_object_parse("3graph 4\n0 1 2\n1 2\n", &obj) == FL2_ERR_PARSE);
    CHECK(obj == nullptr);
    CHECK(std::string(fl2_last_error()).find("line 3") != std::string::npos);
    CHECK(fl2_object_read("/nonexistent/file.3graph", &obj) == FL2_ERR_IO);
    const std::uint64_t big = 5000;
    CHECK(fl2_generate("bn", &big, 1, &obj) == FL2_ERR_CAPACITY);
    CHECK(fl2_generate("bn", nullptr, 0, &obj) == FL2_ERR_INVALID_ARGUMENT);
    CHECK(fl2_generate("nope", nullptr, 0, &obj) == FL2_ERR_INVALID_ARGUMENT);
    CHECK(fl2_object_parse(nullptr, &obj) == FL2_ERR_INVALID_ARGUMENT);
    char* s = nullptr;
    CHECK(fl2_search("{not json", &s) == FL2_ERR_PARSE);
    CHECK(fl2_search(R"({"objective":"fano-l2","n":7})", &s) == FL2_ERR_CAPACITY);
    CHECK(fl2_search(R"({"objective":"what","n":4})", &s) == FL2_ERR_INVALID_ARGUMENT);
    fl2_object_free(nullptr);
    fl2_string_free(nullptr);
}

TEST_CASE("search, verify and tables")
{
    auto j = search(R"({"objective":"k4multi","n":4,"m":4,"engine":"exhaustive"})");
    CHECK(j["optimum"] == "20");
    CHECK(j["objective"] == "k4multi");
    j = search(R"({"objective":"fano-l2","n":6})");
    CHECK(j["optimum"] == "240");
    j = search(R"({"objective":"ak-s2","n":4,"m":3})");
    CHECK(j["optimum"] == "3");
    j = search(R"({"objective":"bipartite-l2","n":5})");
    CHECK(j["optimum"] == "75");

    int passed = 0;
    char* text = nullptr;
    char* json = nullptr;
    REQUIRE(fl2_verify("roots", 1, 1, 0, &passed, &text, &json) == FL2_OK);
    CHECK(passed == 1);
    CHECK(take(text).find("totals: ") != std::string::npos);
    CHECK(nlohmann::json::parse(take(json))["suite"] == "roots");
    CHECK(fl2_verify("bogus", 1, 1, 0, &passed, nullptr, nullptr) == FL2_ERR_INVALID_ARGUMENT);

    char* csv = nullptr;
    REQUIRE(fl2_bounds_table("f", 0.25, &csv) == FL2_OK);
    CHECK(take(csv).rfind("x,value,active_branch\n", 0) == 0);
}
