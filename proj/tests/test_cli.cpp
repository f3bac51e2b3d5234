#include "doctest.h"

#include "schurcoh/cli.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

using namespace schurcoh;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(RunConfig cfg)
{
    std::ostringstream out, err;
    int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

RunConfig config(std::string sub, std::optional<std::string> lambda = std::nullopt)
{
    RunConfig c;
    c.subcommand = std::move(sub);
    c.lambda = std::move(lambda);
    return c;
}

} // namespace

TEST_CASE("ext exit codes")
{
    auto ok = invoke(config("ext", "1,1,0,0"));
    CHECK(ok.code == kExitOk);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j.at("ext") == nlohmann::json::array({1, 20, 2, 20, 1}));

    auto bounded = invoke(config("ext", "3,3,0,0"));
    CHECK(bounded.code == kExitBounded);
    auto jb = nlohmann::json::parse(bounded.out);
    CHECK_FALSE(jb.at("exact").get<bool>());
    CHECK(jb.at("conflict_count").get<int>() > 0);

    CHECK(invoke(config("ext", "1,x,0,0")).code == kExitInputError);
    CHECK(invoke(config("ext", "0,1,0,0")).code == kExitInputError);
    CHECK(invoke(config("ext")).code == kExitInputError);
}

TEST_CASE("unknown presets fail before any work")
{
    auto c = config("ext", "3,2,1,0");
    c.overrides = "paper-9.9";
    auto r = invoke(c);
    CHECK(r.code == kExitInputError);
    CHECK(r.out.empty());
    CHECK(r.err.find("paper-9.9") != std::string::npos);
}

TEST_CASE("stdout carries only the report")
{
    auto r = invoke(config("table1"));
    CHECK(r.code == kExitBounded);
    CHECK(nlohmann::json::accept(r.out));
}

TEST_CASE("json is deterministic across job counts")
{
    auto a = config("table1");
    a.jobs = 1;
    auto b = config("table1");
    b.jobs = 3;
    CHECK(invoke(a).out == invoke(b).out);
    CHECK(invoke(a).out == invoke(a).out);
}

TEST_CASE("koszul-table markdown")
{
    auto c = config("koszul-table");
    c.format = OutputFormat::markdown;
    auto r = invoke(c);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("10,4,4,4,4,4") != std::string::npos);
    CHECK(r.out.find('|') != std::string::npos);
}

TEST_CASE("other subcommands")
{
    auto lr = config("lr", "2,1,0");
    lr.mu = "2,2,0";
    lr.rank = 3;
    auto jl = nlohmann::json::parse(invoke(lr).out);
    CHECK(jl.at("decomposition").size() == 4);

    auto pieri = config("pieri", "2,1,0");
    pieri.mu = "3";
    pieri.rank = 3;
    CHECK(invoke(pieri).code == kExitOk);

    auto bwb = config("bwb", "2,2,0,0");
    bwb.mu = "3,3,1,1,1,0";
    bwb.twist = -1;
    auto rb = invoke(bwb);
    CHECK(rb.code == kExitOk);
    CHECK(rb.out.find("\"degree\": 4") != std::string::npos);

    auto coh = config("cohomology", "5,5,2,0");
    coh.twist = -3;
    CHECK(invoke(coh).code == kExitBounded);
    coh.overrides = "paper-4.2";
    CHECK(invoke(coh).code == kExitOk);

    auto sym = config("sym");
    sym.m = 3;
    CHECK(invoke(sym).code == kExitOk);
    sym.m = 5;
    CHECK(invoke(sym).code == kExitBounded);

    CHECK(invoke(config("chern", "2,1,0,0")).code == kExitOk);
    auto at = nlohmann::json::parse(invoke(config("atomic", "2,0,0,0")).out);
    CHECK(at.at("atomic").get<bool>());

    auto csv = config("ext", "1,0,0,0");
    csv.format = OutputFormat::csv;
    CHECK(invoke(csv).code == kExitOk);

    CHECK(invoke(config("nonsense")).code == kExitInputError);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
    CHECK(parse_format("markdown") == OutputFormat::markdown);
}
