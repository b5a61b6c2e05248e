#include "loopdeg/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "loopdeg/error.hpp"

namespace loopdeg::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        parse_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t as_index(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        parse_fail(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

std::vector<std::size_t> as_tuple(const json& j, std::size_t arity, const char* what) {
    if (!j.is_array() || j.size() != arity)
        parse_fail(std::string(what) + " entries must be arrays of length " +
                   std::to_string(arity));
    std::vector<std::size_t> out;
    for (const json& x : j) out.push_back(as_index(x, what));
    return out;
}

const json& as_array(const json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
    return j;
}

}  // namespace

std::vector<Degree> parse_degrees(std::string_view text) {
    text = trim(text);
    std::vector<Degree> out;
    if (text.empty()) return out;
    if (text.front() == '{' || text.front() == '[') {
        const json j = parse_json(text);
        const json& arr = j.is_array() ? j : field(j, "degrees");
        for (const json& x : as_array(arr, "degrees")) {
            if (!x.is_number_integer()) parse_fail("degrees must be integers");
            out.push_back(x.get<Degree>());
        }
        return out;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++pos;
            continue;
        }
        Degree v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc() || ptr == text.data() + pos)
            parse_fail("cannot parse degree near \"" + std::string(text.substr(pos, 8)) + "\"");
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
            text[pos] != ',')
            parse_fail("unexpected character '" + std::string(1, text[pos]) + "' in sequence");
        out.push_back(v);
    }
    return out;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
}

json to_json(const GraphWithLoops& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    json loops = json::array();
    for (Vertex v : g.loops()) loops.push_back(v);
    return {{"n", g.order()}, {"edges", edges}, {"loops", loops}};
}

GraphWithLoops graph_from_json(const json& j) {
    GraphWithLoops g(as_index(field(j, "n"), "n"));
    for (const json& e : as_array(field(j, "edges"), "edges")) {
        auto t = as_tuple(e, 2, "edges");
        g.add_edge(t[0], t[1]);
    }
    if (j.contains("loops"))
        for (const json& v : as_array(j.at("loops"), "loops")) g.add_loop(as_index(v, "loops"));
    return g;
}

json to_json(const BipartiteGraph& b) {
    json edges = json::array();
    for (auto [l, r] : b.edges()) edges.push_back({l, r});
    return {{"n_left", b.left_size()}, {"n_right", b.right_size()}, {"edges", edges}};
}

BipartiteGraph bipartite_from_json(const json& j) {
    BipartiteGraph b(as_index(field(j, "n_left"), "n_left"),
                     as_index(field(j, "n_right"), "n_right"));
    for (const json& e : as_array(field(j, "edges"), "edges")) {
        auto t = as_tuple(e, 2, "edges");
        b.add_edge(t[0], t[1]);
    }
    return b;
}

json to_json(const LoopMultigraph& m) {
    json edges = json::array();
    for (const auto& [e, mult] : m.multiplicities()) edges.push_back({e.u, e.v, mult});
    return {{"n", m.order()}, {"edges", edges}};
}

LoopMultigraph multigraph_from_json(const json& j) {
    LoopMultigraph m(as_index(field(j, "n"), "n"));
    for (const json& e : as_array(field(j, "edges"), "edges")) {
        auto t = as_tuple(e, 3, "edges");
        if (t[2] < 1 || t[2] > 2) parse_fail("multiplicity must be 1 or 2");
        for (std::size_t k = 0; k < t[2]; ++k) m.add_edge(t[0], t[1]);
    }
    return m;
}

json to_json(const DegreeSequence& d) {
    return json(std::vector<Degree>(d.begin(), d.end()));
}

json to_json(const CheckReport& r) {
    json rows = json::array();
    for (const CheckRow& row : r.rows)
        rows.push_back({{"k", row.k}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"slack", row.slack()}});
    json out = {{"passed", r.passed}, {"parity_ok", r.parity_ok}, {"rows", rows}};
    out["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
    return out;
}

json to_json(const PatchCase& p) {
    json out = {{"kind", std::string(to_string(p.kind))}, {"head", p.head}, {"tail", p.tail}};
    if (p.vi) out["vi"] = *p.vi;
    if (p.vj) out["vj"] = *p.vj;
    return out;
}

json to_json(const RealizationTrace& t) {
    json steps = json::array();
    for (const ReductionStep& s : t.reductions.steps) {
        steps.push_back({{"original", to_json(s.original)},
                         {"reduced_sorted", to_json(s.reduced_sorted)},
                         {"pivot_m", s.pivot_m},
                         {"tail_index", s.tail_index}});
    }
    json rebuild = json::array();
    for (const PatchCase& p : t.rebuild_steps) rebuild.push_back(to_json(p));
    return {{"order", t.order},
            {"reductions", steps},
            {"terminal", to_json(t.reductions.terminal)},
            {"rebuild_steps", rebuild}};
}

std::string to_dot(const GraphWithLoops& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    for (Vertex v : g.loops()) os << "  " << v << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const BipartiteGraph& b) {
    std::ostringstream os;
    os << "graph B {\n";
    for (Vertex l = 0; l < b.left_size(); ++l) os << "  L" << l << ";\n";
    for (Vertex r = 0; r < b.right_size(); ++r) os << "  R" << r << ";\n";
    for (auto [l, r] : b.edges()) os << "  L" << l << " -- R" << r << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const LoopMultigraph& m) {
    std::ostringstream os;
    os << "graph M {\n";
    for (Vertex v = 0; v < m.order(); ++v) os << "  " << v << ";\n";
    for (const auto& [e, mult] : m.multiplicities())
        for (int k = 0; k < mult; ++k) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

std::string format_sequence(const DegreeSequence& d) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ')';
    return os.str();
}

std::string format_report(const CheckReport& r, std::string_view bound_label) {
    std::ostringstream os;
    os << "   k        lhs        rhs      slack\n";
    for (const CheckRow& row : r.rows) {
        os.width(4);
        os << row.k << ' ';
        os.width(10);
        os << row.lhs << ' ';
        os.width(10);
        os << row.rhs << ' ';
        os.width(10);
        os << row.slack() << (row.lhs > row.rhs ? "  <-- violated" : "") << '\n';
    }
    os << "bound: " << bound_label << '\n';
    os << "parity: " << (r.parity_ok ? "ok" : "odd sum") << '\n';
    os << "first violation: ";
    if (r.first_violation)
        os << "k=" << *r.first_violation << '\n';
    else
        os << "none\n";
    os << "result: " << (r.passed ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace loopdeg::io
