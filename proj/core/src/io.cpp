#include "kgraph/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kgraph {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(errc::parse_error, where + ": " + what);
}

int require_int(const json& j, const std::string& where, const char* key) {
    if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
    if (!j[key].is_number_integer()) fail(where, std::string("field '") + key + "' must be an integer");
    return j[key].get<int>();
}

std::string require_string(const json& j, const std::string& where, const char* key) {
    if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
    if (!j[key].is_string()) fail(where, std::string("field '") + key + "' must be a string");
    return j[key].get<std::string>();
}

}  // namespace

KGraphSpec parse_kgraph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& ex) {
        size_t byte = ex.byte > 0 ? ex.byte - 1 : 0;
        if (byte > text.size()) byte = text.size();
        size_t line = 1, col = 1;
        for (size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail("line " + std::to_string(line) + ", column " + std::to_string(col),
             "invalid JSON");
    }
    if (!j.is_object()) fail("top level", "expected an object");

    KGraphSpec spec;
    spec.k = require_int(j, "top level", "k");

    if (!j.contains("vertices") || !j["vertices"].is_array())
        fail("top level", "'vertices' must be an array");
    for (size_t i = 0; i < j["vertices"].size(); ++i) {
        const json& v = j["vertices"][i];
        if (!v.is_string()) fail("vertices[" + std::to_string(i) + "]", "expected a string");
        spec.vertices.push_back(v.get<std::string>());
    }

    if (!j.contains("edges") || !j["edges"].is_array())
        fail("top level", "'edges' must be an array");
    for (size_t i = 0; i < j["edges"].size(); ++i) {
        const json& e = j["edges"][i];
        std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_object()) fail(where, "expected an object");
        EdgeSpec es;
        es.id = require_string(e, where, "id");
        es.color = require_int(e, where, "color");
        es.src = require_string(e, where, "src");
        es.dst = require_string(e, where, "dst");
        spec.edges.push_back(std::move(es));
    }

    if (j.contains("squares")) {
        if (!j["squares"].is_array()) fail("top level", "'squares' must be an array");
        for (size_t i = 0; i < j["squares"].size(); ++i) {
            const json& s = j["squares"][i];
            std::string where = "squares[" + std::to_string(i) + "]";
            if (!s.is_array() || s.size() != 4)
                fail(where, "expected an array of four edge ids");
            for (const json& x : s)
                if (!x.is_string()) fail(where, "expected an array of four edge ids");
            spec.squares.push_back(SquareSpec{s[0].get<std::string>(), s[1].get<std::string>(),
                                              s[2].get<std::string>(), s[3].get<std::string>()});
        }
    }
    return spec;
}

KGraphSpec load_kgraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_kgraph(buf.str());
}

std::string serialize(const KGraphSpec& spec) {
    nlohmann::ordered_json j;
    j["k"] = spec.k;
    j["vertices"] = spec.vertices;
    j["edges"] = nlohmann::ordered_json::array();
    for (const EdgeSpec& e : spec.edges)
        j["edges"].push_back(nlohmann::ordered_json{
            {"id", e.id}, {"color", e.color}, {"src", e.src}, {"dst", e.dst}});
    j["squares"] = nlohmann::ordered_json::array();
    for (const SquareSpec& s : spec.squares)
        j["squares"].push_back(nlohmann::ordered_json::array({s.f, s.g, s.gp, s.fp}));
    return j.dump(2) + "\n";
}

}  // namespace kgraph
