#include "ringlat/ringspec.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ringlat/errors.hpp"

namespace ringlat {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { fail(errc::bad_input, msg); }

std::pair<u32, u32> line_col(const std::string& text, size_t byte) {
    u32 line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Vec read_vec(const json& j, u32 d, const char* what) {
    if (!j.is_array() || j.size() != d)
        bad(std::string(what) + " must be an array of length rank");
    Vec v(d);
    for (u32 i = 0; i < d; ++i) {
        if (!j[i].is_number_integer()) bad(std::string(what) + " entries must be integers");
        long long x = j[i].get<long long>();
        if (x < 0) bad(std::string(what) + " entries must be non-negative");
        v[i] = static_cast<u32>(x);
    }
    return v;
}

Expect read_expect(const json& j) {
    Expect e;
    auto count = [&](const char* key) -> std::optional<ExpectedCount> {
        if (!j.contains(key)) return std::nullopt;
        return ExpectedCount{j.at(key).get<long long>(), false};
    };
    auto flag = [&](const char* key) -> std::optional<bool> {
        if (!j.contains(key)) return std::nullopt;
        return j.at(key).get<bool>();
    };
    e.nodes = count("nodes");
    e.length = count("length");
    e.delta = flag("delta");
    e.small_delta = flag("small_delta");
    e.simple = flag("simple");
    e.chained = flag("chained");
    e.catenarian = flag("catenarian");
    e.modular = flag("modular");
    e.distributive = flag("distributive");
    e.boolean_lattice = flag("boolean");
    e.b2 = flag("b2");
    e.arithmetic = flag("arithmetic");
    e.subintegral = flag("subintegral");
    e.infra_integral = flag("infra_integral");
    e.seminormal = flag("seminormal");
    e.t_closed = flag("t_closed");
    if (j.contains("pwm")) e.pwm = j.at("pwm").get<std::string>();
    if (j.contains("plus_size")) e.plus_size = j.at("plus_size").get<long long>();
    if (j.contains("tclo_size")) e.tclo_size = j.at("tclo_size").get<long long>();
    return e;
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text, const Caps& caps) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        fail(errc::bad_input,
             "JSON parse error at line " + std::to_string(line) + ", column " +
                 std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object()) bad("top level must be an object");
    for (const char* key : {"base_modulus", "rank", "unit", "mul"})
        if (!j.contains(key)) bad(std::string("missing required key '") + key + "'");

    long long n_ll = j.at("base_modulus").get<long long>();
    long long d_ll = j.at("rank").get<long long>();
    if (n_ll < 2 || d_ll < 1) bad("base_modulus must be >= 2 and rank >= 1");
    u32 n = static_cast<u32>(n_ll), d = static_cast<u32>(d_ll);

    const json& jm = j.at("mul");
    if (!jm.is_array() || jm.size() != d)
        bad("mul must be an array with one row per basis element");
    std::vector<std::vector<Vec>> mul(d);
    for (u32 i = 0; i < d; ++i) {
        const json& row = jm[i];
        if (!row.is_array() || (row.size() != i + 1 && row.size() != d))
            bad("mul row " + std::to_string(i) +
                " must have i+1 (lower triangle) or rank entries");
        for (const json& cell : row)
            mul[i].push_back(read_vec(cell, d, "structure constant"));
    }

    RingSpec spec;
    spec.name = j.value("name", std::string("ring"));
    Vec unit = read_vec(j.at("unit"), d, "unit");
    TablePtr table = std::make_shared<const RingTable>(
        RingTable::validate(n, d, mul, unit, spec.name, caps));

    std::vector<Vec> gens;
    if (j.contains("subring_generators")) {
        const json& jg = j.at("subring_generators");
        if (!jg.is_array()) bad("subring_generators must be an array");
        for (const json& g : jg) gens.push_back(read_vec(g, d, "generator"));
    }
    spec.ext = make_extension(table, gens);
    if (j.contains("expected")) {
        spec.expect = read_expect(j.at("expected"));
        spec.has_expect = true;
    }
    return spec;
}

RingSpec load_ring_spec(const std::string& path, const Caps& caps) {
    std::ifstream in(path);
    if (!in) fail(errc::bad_input, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ring_spec(ss.str(), caps);
}

std::string serialize_ring_spec(const RingSpec& spec) {
    const RingTable& S = *spec.ext.S;
    json j;
    j["name"] = spec.name;
    j["base_modulus"] = S.modulus();
    j["rank"] = S.rank();
    j["unit"] = S.unit();
    json mul = json::array();
    for (u32 i = 0; i < S.rank(); ++i) {
        json row = json::array();
        for (u32 k = 0; k <= i; ++k) {
            const u32* c = S.basis_product(i, k);
            row.push_back(Vec(c, c + S.rank()));
        }
        mul.push_back(row);
    }
    j["mul"] = mul;
    json gens = json::array();
    for (u32 i = 0; i < spec.ext.R.rows(); ++i) {
        const u32* r = spec.ext.R.row(i);
        gens.push_back(Vec(r, r + S.rank()));
    }
    j["subring_generators"] = gens;
    return j.dump(2) + "\n";
}

}  // namespace ringlat
