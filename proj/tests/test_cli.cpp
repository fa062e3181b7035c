#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "cobordism/classes.hpp"
#include "cobordism/fgl.hpp"
#include "cobordism/io.hpp"

using namespace cobordism;
using io::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

RingElement random_element(std::mt19937_64& rng, const Domain& d) {
    RingElement r(d);
    const int terms = static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        if (d.vars == Vars::B) {
            std::vector<int> parts;
            const int len = static_cast<int>(rng() % 3);
            for (int k = 0; k < len; ++k) parts.push_back(1 + static_cast<int>(rng() % 4));
            std::sort(parts.rbegin(), parts.rend());
            m.b = Partition(parts);
        }
        if (d.vars == Vars::T || d.vars == Vars::TEps) m.t = static_cast<int>(rng() % 4);
        if (d.vars == Vars::TEps) m.eps = static_cast<int>(rng() % 2);
        mpz_class c = mpz_class(static_cast<long>(rng() % 2001) - 1000);
        c *= mpz_class("123456789012345678901234567890");
        int e = 0;
        if (d.base.kind == BaseRing::Kind::Dyadic) e = static_cast<int>(rng() % 4);
        r += RingElement::monomial(d, m, base::normalize(d.base, Coeff(c, e)));
    }
    return r;
}

VarietySpec random_spec(std::mt19937_64& rng, int depth = 0) {
    switch (depth > 1 ? 0 : rng() % 4) {
        case 0: {
            std::vector<int> dims;
            const int k = 1 + static_cast<int>(rng() % 2);
            for (int i = 0; i < k; ++i) dims.push_back(1 + static_cast<int>(rng() % 2));
            return VarietySpec::multiproj(dims);
        }
        case 1: {
            const VarietySpec base = VarietySpec::multiproj({1 + static_cast<int>(rng() % 2)});
            std::vector<LinearForm> lines;
            const int r = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < r; ++i) lines.push_back({static_cast<long>(rng() % 5) - 2});
            return VarietySpec::projbundle(base, lines);
        }
        case 2: return VarietySpec::product({random_spec(rng, depth + 1), random_spec(rng, depth + 1)});
        default: {
            const VarietySpec s = random_spec(rng, depth + 1);
            return VarietySpec::disjoint({s, s});
        }
    }
}

}  // namespace

TEST_CASE("ring elements round-trip through JSON") {
    std::mt19937_64 rng(2024);
    const std::vector<Domain> domains{Domain::integers(), Domain::lazard(),   Domain::lazard_mod(2), Domain::lazard_dyadic(),
                                      Domain::chx(),      Domain::cha(),      Domain::modular(7)};
    for (int i = 0; i < 210; ++i) {
        const Domain& d = domains[static_cast<std::size_t>(i) % domains.size()];
        const RingElement r = random_element(rng, d);
        const json j = io::to_json(r);
        CHECK(io::ring_from_json(json::parse(j.dump())) == r);
        CHECK(io::to_json(io::ring_from_json(j)) == j);
    }
    // monomial layout
    const json j = io::to_json(RingElement::b(Domain::lazard(), Partition({2, 1})).scale(Coeff(-3)));
    CHECK(j.at("terms").at(0).at("b") == json::array({2, 1}));
    CHECK(j.at("terms").at(0).at("coeff") == "-3");
    CHECK(j.at("terms").at(0).at("t") == 0);
    CHECK(j.at("terms").at(0).at("eps") == 0);
}

TEST_CASE("series, specs, actions and reports round-trip") {
    const TruncatedSeries s = formal_mult(universal_fgl(5), 3);
    CHECK(io::series_from_json(io::to_json(s)) == s);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const VarietySpec v = random_spec(rng);
        CHECK(io::spec_from_json(json::parse(io::to_json(v).dump())) == v);
    }
    const VarietySpec virt = VarietySpec::projbundle(VarietySpec::projective_space(1), {{1}, {-1}}, 1);
    CHECK(io::spec_from_json(io::to_json(virt)) == virt);

    for (const auto& a : cli::catalog_actions(4)) {
        const MuTwoActionModel b = io::action_from_json(io::to_json(a));
        CHECK(io::to_json(b) == io::to_json(a));
        for (const char* th : {"l2", "euler", "additive", "trivial-normal"}) {
            const Report r = cli::run_theorem(th, a, 0, -1);
            CHECK(io::report_from_json(json::parse(io::to_json(r).dump())) == r);
            CHECK(cli::run_theorem(th, b, 0, -1) == r);
        }
    }
    CHECK(io::action_from_json(json{{"builtin", "linear_pn"}, {"n", 3}, {"a", 1}}).name == "linear_pn(3,1)");
    CHECK(io::action_from_json(json{{"builtin", "swap_square"}, {"spec", io::to_json(VarietySpec::projective_space(1))}})
              .components.size() == 1);
}

TEST_CASE("schema violations") {
    CHECK_THROWS_AS(io::spec_from_json(json{{"type", "multiproj"}}), std::invalid_argument);
    CHECK_THROWS_AS(io::spec_from_json(json{{"type", "sphere"}}), std::invalid_argument);
    CHECK_THROWS_AS(io::spec_from_json(json{{"type", "projbundle"}, {"base", {{"type", "multiproj"}, {"dims", {1}}}}, {"lines", {{1, 2}}}}),
                    std::invalid_argument);
    const json wrong_codim = json::parse(R"({"ambient": {"type": "multiproj", "dims": [2]},
        "components": [{"spec": {"type": "multiproj", "dims": []}, "codim": 1, "normal_trivial_rank": 1}]})");
    CHECK_THROWS_AS(io::action_from_json(wrong_codim), std::invalid_argument);
}

TEST_CASE("fgl command") {
    const Result chx = run({"fgl", "--law", "chx", "--order", "4"});
    REQUIRE(chx.code == 0);
    const TruncatedSeries f = io::series_from_json(json::parse(chx.out).at("series"));
    CHECK(f == chx_closed_form(4));
    CHECK(f.coefficient({1, 1}) == RingElement::t(Domain::chx()).scale(Coeff(-2)));

    const Result add = run({"fgl", "--law", "additive", "--mult", "5"});
    REQUIRE(add.code == 0);
    const TruncatedSeries five = io::series_from_json(json::parse(add.out).at("mult").at("series"));
    CHECK(five.terms().size() == 1);
    CHECK(five.coefficient(1) == RingElement(Domain::integers(), Coeff(5)));

    const Result modp = run({"fgl", "--law", "universal-mod-p", "--p", "3", "--mult", "3", "--order", "8"});
    REQUIRE(modp.code == 0);
    CHECK(io::series_from_json(json::parse(modp.out).at("mult").at("series")).is_zero());

    CHECK(run({"fgl", "--law", "nope"}).code == 2);
    CHECK(run({"fgl", "--order", "1"}).code == 2);
    CHECK(run({"fgl", "--law", "chx", "--order", "4", "--pretty"}).out.find("F(x,y)") != std::string::npos);
}

TEST_CASE("chern command") {
    const json p3 = json::parse(run({"chern", "--pn", "3"}).out);
    CHECK(p3.at("euler") == "4");
    CHECK(p3.at("additive") == "-4");
    CHECK(io::ring_from_json(p3.at("class")) == fundamental_class(VarietySpec::projective_space(3)));
    const json q = json::parse(run({"chern", "--multiproj", "1,1"}).out);
    CHECK(q.at("euler") == "4");
    CHECK(q.at("additive") == "0");
    const json pt = json::parse(run({"chern", "--pn", "0"}).out);
    CHECK(pt.at("euler") == "1");
    CHECK(io::ring_from_json(pt.at("class")) == RingElement(Domain::lazard(), Coeff(1)));
    const json spec = json::parse(run({"chern", "--spec", R"({"type":"multiproj","dims":[2]})", "--alpha", "1,1"}).out);
    CHECK(spec.at("chern_numbers").size() == 1);
    // b1^2 coefficient of (1 + b1 h + ...)^-3
    CHECK(spec.at("chern_numbers").at(0).at("value") == "6");
    CHECK(run({"chern", "--spec", "{not json"}).code == 2);
    CHECK(run({"chern", "--in", "-"}, R"({"type":"multiproj","dims":[1]})").code == 0);
}

TEST_CASE("verify command") {
    const Result euler = run({"verify", "--theorem", "euler", "--builtin", "linear_pn", "--n", "3", "--a", "1"});
    CHECK(euler.code == 0);
    const Report er = io::report_from_json(json::parse(euler.out));
    for (const auto& rec : er.records) CHECK(rec.status != Status::Fail);

    const Result ks = run({"verify", "--theorem", "ks", "--builtin", "factorwise_p1n", "--n", "2", "--alpha", "1,1"});
    CHECK(ks.code == 0);
    CHECK(io::report_from_json(json::parse(ks.out)).records.front().reference == "Kosniowski-Stong formula");

    const Result guard = run({"verify", "--theorem", "trivial-normal", "--builtin", "linear_pn", "--n", "2", "--a", "0"});
    CHECK(guard.code == 0);
    CHECK(json::parse(guard.out).at("records").at(0).at("status") == "hypothesis-not-met");

    // a fixed locus that cannot come from an involution fails, exit code 1
    const std::string wrong = R"({"ambient": {"type": "multiproj", "dims": [2]},
        "components": [{"spec": {"type": "multiproj", "dims": []}, "codim": 2, "normal_trivial_rank": 2}]})";
    CHECK(run({"verify", "--theorem", "l2", "--action", wrong}).code == 1);
    CHECK(run({"verify", "--theorem", "l2", "--in", "-"}, wrong).code == 1);

    const Result trunc = run({"verify", "--theorem", "lmod2", "--builtin", "linear_pn", "--n", "2", "--a", "0", "--order", "3"});
    CHECK(trunc.code == 2);
    CHECK(trunc.err.find("insufficient") != std::string::npos);

    const Result l2 = run({"verify", "--theorem", "l2", "--builtin", "linear_pn", "--n", "3", "--a", "0", "--max-m", "1"});
    CHECK(json::parse(l2.out).at("records").size() == 3);
    CHECK(run({"verify", "--theorem", "nope", "--builtin", "linear_pn", "--n", "2", "--a", "0"}).code == 2);
    CHECK(run({"verify", "--theorem", "euler"}).code == 2);
}

TEST_CASE("verify --all is deterministic across worker counts") {
    const Result one = run({"verify", "--all", "--max-n", "3", "--jobs", "1"});
    const Result many = run({"verify", "--all", "--max-n", "3", "--jobs", "6"});
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
    CHECK(run({"verify", "--all", "--max-n", "3", "--jobs", "3"}).out == one.out);
    CHECK(json::parse(one.out).at("ok") == true);
}

TEST_CASE("environment order override and output files") {
    setenv("COBORDISM_ORDER", "5", 1);
    const json j = json::parse(run({"fgl", "--law", "chx"}).out);
    CHECK(j.at("series").at("order") == 5);
    setenv("COBORDISM_ORDER", "3", 1);
    CHECK(run({"verify", "--theorem", "lmod2", "--builtin", "linear_pn", "--n", "2", "--a", "0"}).code == 2);
    setenv("COBORDISM_ORDER", "abc", 1);
    CHECK(run({"fgl"}).code == 2);
    unsetenv("COBORDISM_ORDER");

    const auto path = std::filesystem::temp_directory_path() / "cobordism_cli_test.json";
    const Result r = run({"catalog", "--json", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const json c = json::parse(f);
    CHECK(c.at("builtins").size() >= 3);
    std::filesystem::remove(path);
}

TEST_CASE("catalog command") {
    const Result plain = run({"catalog"});
    CHECK(plain.code == 0);
    for (const char* name : {"linear_pn", "factorwise_p1n", "swap_square"}) CHECK(plain.out.find(name) != std::string::npos);
    const json one = json::parse(run({"catalog", "--json", "--builtin", "swap_square"}).out);
    CHECK(one.at("name") == "swap_square");
    CHECK(run({"catalog", "--builtin", "nope"}).code == 2);
    CHECK(run({}).code == 2);
}
