#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ringlat/cli.hpp"
#include "ringlat/errors.hpp"
#include "ringlat/report.hpp"
#include "ringlat/ringspec.hpp"

using namespace ringlat;

namespace {

int run_cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
    std::vector<const char*> argv{"ringlat"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int rc = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

const char* kSpecDir = RINGLAT_SPEC_DIR;

std::string spec_path(const std::string& name) {
    return std::string(kSpecDir) + "/" + name;
}

}  // namespace

TEST_CASE("spec parse round trip is the identity") {
    for (const char* name : {"diag_f2_3.json", "z4_t2.json"}) {
        RingSpec a = load_ring_spec(spec_path(name));
        std::string text = serialize_ring_spec(a);
        RingSpec b = parse_ring_spec(text);
        CHECK(a.ext.S->same_table(*b.ext.S));
        CHECK(a.ext.R == b.ext.R);
        // and serialization is a fixed point
        CHECK(serialize_ring_spec(b) == text);
    }
}

TEST_CASE("parse errors carry positions; validation errors carry codes") {
    CHECK_THROWS_WITH_AS(parse_ring_spec("{ not json"),
                         doctest::Contains("line 1"), ringlat::error);
    CHECK_THROWS_WITH_AS(load_ring_spec(spec_path("bad_unit.json")),
                         doctest::Contains("BadUnit"), ringlat::error);
    CHECK_THROWS_WITH_AS(parse_ring_spec("{\"base_modulus\": 2}"),
                         doctest::Contains("missing required key"), ringlat::error);
}

TEST_CASE("analyze reports and exit codes") {
    std::string out;
    int rc = run_cli({"analyze", spec_path("diag_f2_3.json").c_str(),
                      "--assert-expected"},
                     &out);
    CHECK(rc == 0);
    CHECK(out.find("nodes: 5") != std::string::npos);
    CHECK(out.find("bruteforce: true") != std::string::npos);
    CHECK(out.find("all expectations hold") != std::string::npos);

    // invalid input exits 2
    std::string err;
    rc = run_cli({"analyze", spec_path("bad_unit.json").c_str()}, &out, &err);
    CHECK(rc == 2);
    CHECK(err.find("BadUnit") != std::string::npos);

    // markdown format renders headers
    rc = run_cli({"analyze", spec_path("z4_t2.json").c_str(), "--format",
                  "markdown"},
                 &out);
    CHECK(rc == 0);
    CHECK(out.find("# extension") != std::string::npos);

    // reports are byte-stable
    std::string again;
    run_cli({"analyze", spec_path("z4_t2.json").c_str(), "--format", "markdown"},
            &again);
    CHECK(out == again);
}

TEST_CASE("assert-expected fails on a wrong expectation") {
    RingSpec spec = load_ring_spec(spec_path("diag_f2_3.json"));
    std::string text = serialize_ring_spec(spec);
    // graft a wrong expectation onto the serialized spec
    text.insert(text.rfind('}'), ",\n  \"expected\": { \"nodes\": 6 }\n");
    std::string tmp = std::string(kSpecDir) + "/_tmp_wrong.json";
    {
        std::ofstream f(tmp);
        f << text;
    }
    std::string out;
    int rc = run_cli({"analyze", tmp.c_str(), "--assert-expected"}, &out);
    CHECK(rc == 1);
    CHECK(out.find("FAILED") != std::string::npos);
    std::remove(tmp.c_str());
}

TEST_CASE("dot output is deterministic and well formed") {
    std::string a, b;
    CHECK(run_cli({"lattice", spec_path("diag_f2_3.json").c_str()}, &a) == 0);
    CHECK(run_cli({"lattice", spec_path("diag_f2_3.json").c_str()}, &b) == 0);
    CHECK(a == b);
    CHECK(a.find("digraph interval") != std::string::npos);
    CHECK(a.find("[label=\"d\"]") != std::string::npos);
    // 5 nodes and 6 cover edges for the diamond with three atoms
    u32 edges = 0;
    for (size_t p = 0; (p = a.find("->", p)) != std::string::npos; ++p) ++edges;
    CHECK(edges == 6);

    // chain lattice renders a path
    std::string chain;
    CHECK(run_cli({"lattice", spec_path("z4_t2.json").c_str()}, &chain) == 0);
    u32 chain_edges = 0;
    for (size_t p = 0; (p = chain.find("->", p)) != std::string::npos; ++p)
        ++chain_edges;
    CHECK(chain_edges == 2);
}

TEST_CASE("corpus subcommand and self-test negation") {
    std::string out;
    CHECK(run_cli({"corpus", "--only", "diag-f2-3"}, &out) == 0);
    CHECK(out.find("[PASS] diag-f2-3") != std::string::npos);

    CHECK(run_cli({"corpus", "--only", "diag-f2-3", "--negate-selftest"}, &out) == 1);
    CHECK(out.find("[FAIL]") != std::string::npos);
}

TEST_CASE("trivial interval is reported as such") {
    std::string out;
    int rc = run_cli({"analyze", spec_path("trivial.json").c_str(),
                      "--assert-expected"},
                     &out);
    CHECK(rc == 0);
    CHECK(out.find("trivial interval") != std::string::npos);
    CHECK(out.find("all expectations hold") != std::string::npos);
}

TEST_CASE("fuzz subcommand smoke") {
    std::string out;
    CHECK(run_cli({"fuzz", "--seed", "0", "--count", "3"}, &out) == 0);
    CHECK(out.find("[PASS] 3 seeds, 0 failures") != std::string::npos);
}
