#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "shalika/cli.hpp"

namespace {

struct RunResult {
    int rc;
    std::string out, err;
};

RunResult run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int rc = shalika::cli::run(std::move(args), out, err, in);
    return {rc, out.str(), err.str()};
}

nlohmann::json parse_json(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("cli: dual") {
    auto r = run({"dual", "{[-3/2..3/2]}"});
    CHECK(r.rc == 0);
    CHECK(r.out == "{[3/2],[1/2],[-1/2],[-3/2]}\n");

    auto j = run({"dual", "{[-3/2..3/2]}", "--json", "--explain"});
    REQUIRE(j.rc == 0);
    auto doc = parse_json(j.out);
    CHECK(doc["input"] == "{[-3/2..3/2]}");
    CHECK(doc["dual"] == "{[3/2],[1/2],[-1/2],[-3/2]}");
    REQUIRE(doc["steps"].size() == 4);
    CHECK(doc["steps"][0].count("extracted") == 1);
    CHECK(doc["steps"][0].count("residual") == 1);

    auto x = run({"dual", "{[1/2..3/2],[-3/2..-1/2]}", "--explain"});
    CHECK(x.rc == 0);
    CHECK(x.out.find("{[3/2],[-1/2..1/2],[-3/2]}\n") == 0);
    CHECK(x.out.find("extract") != std::string::npos);
}

TEST_CASE("cli: dual batch over stdin") {
    auto r = run({"dual", "-"}, "{[1/2..3/2],[-3/2..-1/2]}\n\n  {[3/2],[-3/2..1/2]}  \n");
    CHECK(r.rc == 0);
    CHECK(r.out == "{[3/2],[-1/2..1/2],[-3/2]}\n{[1/2..3/2],[-1/2],[-3/2]}\n");
}

TEST_CASE("cli: dual rejects malformed input") {
    auto r = run({"dual", "{[1/2.."});
    CHECK(r.rc == 2);
    CHECK(r.err.find("parse error at offset") != std::string::npos);
}

TEST_CASE("cli: linked") {
    auto r = run({"linked", "[1/2..3/2]", "[-1/2..1/2]", "--json"});
    REQUIRE(r.rc == 0);
    auto doc = parse_json(r.out);
    CHECK(doc["linked"] == true);
    CHECK(doc["juxtaposed"] == false);
    CHECK(doc["union"] == "[-1/2..3/2]");
    CHECK(doc["intersection"] == "[1/2]");

    auto t = run({"linked", "[1/2..3/2]", "[-1/2..1/2]"});
    CHECK(t.rc == 0);
    CHECK(t.out.find("linked:      yes") != std::string::npos);
    CHECK(t.out.find("union:       [-1/2..3/2]") != std::string::npos);

    auto far = run({"linked", "[3/2]", "[-3/2]", "--json"});
    CHECK(parse_json(far.out)["linked"] == false);

    auto jux = run({"linked", "[1/2..3/2]", "[-3/2..-1/2]", "--json"});
    auto jdoc = parse_json(jux.out);
    CHECK(jdoc["juxtaposed"] == true);
    CHECK(jdoc.count("intersection") == 0);
}

TEST_CASE("cli: product-irred") {
    auto r = run({"product-irred", "{[1/2..3/2],[-3/2..-1/2]}", "--json"});
    REQUIRE(r.rc == 0);
    auto doc = parse_json(r.out);
    CHECK(doc["irreducible"] == false);
    REQUIRE(doc["linked_pairs"].size() == 1);
    CHECK(doc["linked_pairs"][0][0] == 0);
    CHECK(doc["linked_pairs"][0][1] == 1);

    auto t = run({"product-irred", "{[1/2..3/2],[-3/2..-1/2]}"});
    CHECK(t.out.find("reducible") == 0);
    CHECK(t.out.find("linked: [1/2..3/2] ~ [-3/2..-1/2]") != std::string::npos);

    auto ok = run({"product-irred", "{[0..1],[1/2]}", "--kind", "l"});
    CHECK(ok.rc == 0);
    CHECK(ok.out == "irreducible\n");
}

TEST_CASE("cli: tjm") {
    auto r = run({"tjm", "--n", "2", "St(2,nu^{1/2})", "char(2,nu^{-1/2})"});
    REQUIRE(r.rc == 0);
    CHECK(r.out.find("pi = St(2,nu^{1/2}) x char(2,nu^{-1/2})  (G_4, r=2)") == 0);
    CHECK(r.out.find("verdict: non-zero, module St(2,1)") != std::string::npos);

    auto j = run({"tjm", "--n", "2", "--json", "St(2,nu^{1/2})", "char(2,nu^{-1/2})"});
    auto doc = parse_json(j.out);
    CHECK(doc["r"] == 2);
    CHECK(doc["status"] == "non-zero");
    CHECK(doc["module"] == "St(2,1)");
    REQUIRE(doc["factors"].size() == 2);
    CHECK(doc["factors"][0]["k"] == 0);
    CHECK(doc["factors"][0].count("net_twist") == 1);

    auto x = run({"tjm", "--n", "2", "--explain", "char(2,1)", "char(2,1)"});
    CHECK(x.rc == 0);
    CHECK(x.out.find("local norm") != std::string::npos);
    CHECK(x.out.find("verdict: non-zero, module char(2,1)") != std::string::npos);

    auto bad = run({"tjm", "--n", "2", "--r", "3", "char(2,1)", "char(2,1)"});
    CHECK(bad.rc == 2);
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("cli: tjm-table") {
    for (const std::string key : {"xi", "sigma"}) {
        auto r = run({"tjm-table", key});
        CHECK(r.rc == 0);
        CHECK(r.out.find("preset " + key) == 0);
    }

    auto j = run({"tjm-table", "xi", "--json"});
    REQUIRE(j.rc == 0);
    auto doc = parse_json(j.out);
    CHECK(doc["consistent"] == true);
    REQUIRE(doc["rows"].size() == 8);
    CHECK(doc["rows"][2]["name"] == "tau");
    CHECK(doc["rows"][2]["module"] == "nu^{3/2} x nu^{-3/2}");
    CHECK(doc["rows"][1]["shalika"] == true);

    auto s = run({"tjm-table", "sigma", "--json"});
    CHECK(parse_json(s.out)["rows"].size() == 5);

    CHECK(run({"tjm-table", "bogus"}).rc == 2);
}

TEST_CASE("cli: conjecture") {
    auto r = run({"conjecture", "char(4,1)", "--json"});
    REQUIRE(r.rc == 0);
    auto doc = parse_json(r.out);
    CHECK(doc["n"] == 2);
    CHECK(doc["predicted_zero"] == true);
    CHECK(doc["orders"]["1"] == 3);
    CHECK(doc["orders"]["2"] == 2);
    CHECK(doc["tempered"] == false);

    auto st = run({"conjecture", "St(4,1)"});
    CHECK(st.rc == 0);
    CHECK(st.out.find("predicted: non-zero") != std::string::npos);

    auto batch = run({"conjecture", "-"}, "char(4,1)\nSt(4,1)\n");
    CHECK(batch.rc == 0);
    CHECK(batch.out.find("predicted: zero") != std::string::npos);
    CHECK(batch.out.find("predicted: non-zero") != std::string::npos);

    CHECK(run({"conjecture", "char(3,1)"}).rc == 2);
    CHECK(run({"conjecture", "--n", "3", "char(4,1)"}).rc == 2);
}

TEST_CASE("cli: cosets") {
    auto r = run({"cosets", "--n", "3", "--r", "4", "--json"});
    REQUIRE(r.rc == 0);
    auto doc = parse_json(r.out);
    CHECK(doc["alpha"] == 1);
    CHECK(doc["beta"] == 2);
    CHECK(doc["gamma"] == 3);
    CHECK(doc["count"] == 4);
    CHECK(doc["count"] == doc["count_formula"]);
    CHECK(doc["compose_ok"] == true);

    auto m = run({"cosets", "--n", "3", "--r", "4", "--matrices", "--json"});
    auto mdoc = parse_json(m.out);
    REQUIRE(mdoc["matrices"].size() == 4);
    CHECK(mdoc["matrices"][0].count("w") == 1);
    CHECK(mdoc["matrices"][0].count("sigma") == 1);

    auto t = run({"cosets", "--n", "2", "--r", "2"});
    CHECK(t.rc == 0);
    CHECK(t.out.find("k range [0, 1], gamma 2") == 0);
    CHECK(t.out.find("compose check: ok") != std::string::npos);

    CHECK(run({"cosets", "--n", "2", "--r", "4"}).rc == 2);
}

TEST_CASE("cli: cosets partition cross-check") {
    auto r = run({"cosets", "--n", "2", "--r", "2", "--partition", "--json"});
    REQUIRE(r.rc == 0);
    auto doc = parse_json(r.out);
    CHECK(doc["partition"]["cells"] == 4);
    CHECK(doc["partition"]["elements"] == 20160);
    CHECK(doc["partition"]["representatives_bijective"] == true);

    CHECK(run({"cosets", "--n", "3", "--r", "3", "--partition"}).rc == 2);
}

TEST_CASE("cli: oracle") {
    auto r = run({"oracle", "--n", "2", "--r", "2", "--levi", "triv", "--levi", "triv", "--json"});
    REQUIRE(r.rc == 0);
    auto doc = parse_json(r.out);
    CHECK(doc["match"] == true);
    CHECK(doc["brute"] == 1);
    CHECK(doc["per_k"].size() == 2);

    auto st = run({"oracle", "--n", "2", "--r", "2", "--levi", "st", "--levi", "triv"});
    CHECK(st.rc == 0);
    CHECK(st.out.find("formula 2, brute 2: match") != std::string::npos);

    auto blocks =
        run({"oracle", "--n", "2", "--r", "2", "--levi", "1:triv,1:triv", "--levi", "2:triv", "--json"});
    REQUIRE(blocks.rc == 0);
    CHECK(parse_json(blocks.out)["brute"] == 3);

    CHECK(run({"oracle", "--n", "2", "--r", "2", "--levi", "triv"}).rc == 2);
    CHECK(run({"oracle", "--n", "2", "--r", "2", "--levi", "bogus", "--levi", "triv"}).rc == 2);
    auto sum = run({"oracle", "--n", "2", "--r", "2", "--levi", "1:triv", "--levi", "2:triv"});
    CHECK(sum.rc == 2);
    CHECK(sum.err.find("levi blocks must sum to 2") != std::string::npos);
}

TEST_CASE("cli: driver surface") {
    CHECK(run({}).rc == 2);
    CHECK(run({"no-such-command"}).rc == 2);
    CHECK(run({"dual"}).rc == 2);

    auto help = run({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("twisted Jacquet") != std::string::npos);
}
