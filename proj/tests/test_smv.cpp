#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swarmcheck/smv.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace swarmcheck;

namespace {

ModelParams combo(Abstraction a, Encoding e, Mode mode, int m = 8, int r = 3) {
    ModelParams p;
    p.m = m;
    p.r = r;
    p.alpha = 1;
    p.range = 1;
    p.abstraction = a;
    p.encoding = e;
    p.mode = mode;
    return p;
}

struct Combo {
    const char *name;
    ModelParams params;
};

std::vector<Combo> all_combos() {
    std::vector<Combo> out;
    struct ModeName {
        Mode mode;
        const char *name;
    };
    for (auto a : {std::pair{Abstraction::legacy, "legacy"}, std::pair{Abstraction::counting, "new"}})
        for (auto e : {std::pair{Encoding::global, "global"}, std::pair{Encoding::relative, "relative"}})
            for (auto m : {ModeName{Mode::strict, "strict"}, ModeName{Mode::nonstrict, "nonstrict"},
                           ModeName{Mode::fair, "fair"}})
                out.push_back({"", combo(a.first, e.first, m.mode)});
    static std::vector<std::string> names;
    names.clear();
    std::size_t idx = 0;
    for (auto a : {"legacy", "new"})
        for (auto e : {"global", "relative"})
            for (auto m : {"strict", "nonstrict", "fair"}) {
                names.push_back(std::string(a) + "_" + e + "_" + m);
                out[idx++].name = names.back().c_str();
            }
    return out;
}

} // namespace

TEST_CASE("emitted domains multiply to the signature product") {
    for (const Combo &c : all_combos()) {
        auto vars = parse_domains(emit_smv(c.params));
        CHECK(domain_product(vars) == state_space_size(signature(c.params)));
    }

    ModelParams p = combo(Abstraction::legacy, Encoding::global, Mode::strict);
    CHECK(domain_product(parse_domains(emit_smv(p))) == 402'653'184);
    p = combo(Abstraction::counting, Encoding::relative, Mode::nonstrict);
    CHECK(domain_product(parse_domains(emit_smv(p))) == 222'953'472);
}

TEST_CASE("emission is deterministic") {
    for (const Combo &c : all_combos())
        CHECK(emit_smv(c.params) == emit_smv(c.params));
}

TEST_CASE("golden snapshots") {
    namespace fs = std::filesystem;
    fs::path dir(GOLDEN_DIR);
    bool update = std::getenv("SWARMCHECK_UPDATE_GOLDEN") != nullptr;
    for (const Combo &c : all_combos()) {
        fs::path file = dir / (std::string(c.name) + ".smv");
        std::string text = emit_smv(c.params);
        if (update) {
            fs::create_directories(dir);
            std::ofstream(file, std::ios::binary) << text;
        }
        REQUIRE_MESSAGE(fs::exists(file), "missing golden file ", file.string());
        std::ifstream in(file, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK_MESSAGE(buf.str() == text, "snapshot drift for ", c.name);
    }
}

TEST_CASE("unsupported combinations are rejected") {
    ModelParams p = combo(Abstraction::counting, Encoding::global, Mode::sync);
    CHECK_THROWS(emit_smv(p));
    p = combo(Abstraction::legacy, Encoding::relative, Mode::sync);
    CHECK_THROWS_AS(emit_smv(p), SmvUnsupported);
    // Plain legacy global sync is expressible.
    p = combo(Abstraction::legacy, Encoding::global, Mode::sync);
    CHECK(!emit_smv(p).empty());
}

TEST_CASE("parse_domains rejects junk") {
    CHECK_THROWS_AS(parse_domains(""), SmvParseError);
    CHECK_THROWS_AS(parse_domains("-- nothing here\n-- still nothing\n"), SmvParseError);
    try {
        parse_domains("-- c\n");
    } catch (const SmvParseError &err) {
        CHECK(std::string(err.what()).find("no module") != std::string::npos);
    }

    std::string bad = "MODULE main\nVAR\n  x0 0..7;\n";
    CHECK_THROWS_AS(parse_domains(bad), SmvParseError);
    try {
        parse_domains(bad);
    } catch (const SmvParseError &err) {
        CHECK(err.line_number == 3);
    }
}

TEST_CASE("parse_domains reads ranges, enums and booleans") {
    std::string text =
        "MODULE main\n"
        "VAR\n"
        "  a : 0..7;\n"
        "  b : {n, e, s, w};\n"
        "  flag : boolean;\n"
        "  inst : some_module(a, b);\n"
        "  rem : 1..7;\n"
        "IVAR\n"
        "  m : 0..2;\n"
        "ASSIGN\n"
        "  next(a) := a;\n";
    auto vars = parse_domains(text);
    REQUIRE(vars.size() == 4);
    CHECK(vars[0].size == 8);
    CHECK(vars[1].size == 4);
    CHECK(vars[2].size == 2);
    CHECK(vars[3].size == 7);
    CHECK(domain_product(vars) == 8ull * 4 * 2 * 7);
}
