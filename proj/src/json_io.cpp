#include "ureq/json_io.hpp"

#include "ureq/error.hpp"

#include <charconv>

namespace ureq {

namespace {

std::string edge_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Json optional_int(const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); }

template <class T>
Json optional_json(const std::optional<T>& x)
{
    return x ? to_json(*x) : Json(nullptr);
}

Json vertices_json(const std::vector<Vertex>& vs)
{
    Json out = Json::array();
    for (Vertex v : vs)
        out.push_back(v);
    return out;
}

} // namespace

Json to_json(const Matching& m)
{
    Json out = Json::array();
    for (const Edge& e : m)
        out.push_back(edge_string(e));
    return out;
}

Json to_json(const VertexSet& vs) { return vertices_json(vs); }

Json to_json(const FamilySpec& spec)
{
    Json j;
    Json ends = Json::array();
    if (const auto* b1 = std::get_if<B1Variant>(&spec.variant)) {
        j["variant"] = "B1";
        ends.push_back(to_string(b1->left));
        ends.push_back(to_string(b1->right));
    } else {
        j["variant"] = "B2";
    }
    j["k"] = spec.k();
    j["ends"] = ends;
    const auto& lab = spec.labeling;
    j["u"] = vertices_json(lab.u);
    j["v"] = vertices_json(lab.v);
    j["w"] = vertices_json(lab.w);
    j["cap_first"] = optional_int(lab.cap_first);
    j["cap_last"] = optional_int(lab.cap_last);
    return j;
}

FamilySpec family_spec_from_json(const Json& j)
{
    try {
        const std::string variant = j.at("variant").get<std::string>();
        const int k = j.at("k").get<int>();
        FamilySpec spec;
        if (variant == "B1") {
            const auto& ends = j.at("ends");
            if (!ends.is_array() || ends.size() != 2)
                throw FormatError("B1 spec needs two ends");
            auto left = end_type_from_string(ends[0].get<std::string>());
            auto right = end_type_from_string(ends[1].get<std::string>());
            if (!left || !right)
                throw FormatError("unknown end type in family spec");
            spec.variant = B1Variant{k, *left, *right};
        } else if (variant == "B2") {
            spec.variant = B2Variant{k};
        } else {
            throw FormatError("unknown family variant '" + variant + "'");
        }
        if (j.contains("u")) {
            spec.labeling.u = j.at("u").get<std::vector<Vertex>>();
            spec.labeling.v = j.at("v").get<std::vector<Vertex>>();
            spec.labeling.w = j.at("w").get<std::vector<Vertex>>();
            if (j.contains("cap_first") && !j["cap_first"].is_null())
                spec.labeling.cap_first = j["cap_first"].get<Vertex>();
            if (j.contains("cap_last") && !j["cap_last"].is_null())
                spec.labeling.cap_last = j["cap_last"].get<Vertex>();
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed family spec: ") + e.what());
    }
}

Json to_json(const AlternatingCycle& c) { return Json{{"cycle", vertices_json(c.cycle)}}; }

Json to_json(const Lemma0Violation& v)
{
    Json j;
    if (const auto* e = std::get_if<Lemma0Violation::UncoveredEdge>(&v.kind)) {
        j["kind"] = "uncovered_edge";
        j["edge"] = edge_string(e->edge);
    } else {
        const auto& p = std::get<Lemma0Violation::LocalPair>(v.kind);
        j["kind"] = "local_pair";
        j["matched"] = edge_string(p.matched);
        j["first"] = edge_string(p.first);
        j["second"] = edge_string(p.second);
    }
    j["implied_better_matching"] = to_json(v.implied_better_matching);
    return j;
}

Json to_json(const Refutation& r)
{
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FailingComponent>) {
                return Json{{"kind", "failing_component"},
                            {"algorithm", x.algorithm},
                            {"component", vertices_json(x.component)}};
            } else if constexpr (std::is_same_v<T, SizeMismatch>) {
                return Json{{"kind", "size_mismatch"}, {"ur_size", x.ur_size}, {"induced_size", x.induced_size}};
            } else {
                Json j{{"kind", "local_violation"}};
                j["violation"] = to_json(x);
                return j;
            }
        },
        r);
}

Json to_json(const DecisionReport& r)
{
    Json j;
    j["equal"] = r.equal;
    j["nu_s"] = optional_int(r.nu_s);
    j["nu_ur"] = optional_int(r.nu_ur);
    j["induced_witness"] = optional_json(r.induced_witness);
    j["ur_witness"] = optional_json(r.ur_witness);
    j["refutation"] = optional_json(r.refutation);
    return j;
}

Json to_json(const OracleResult& r)
{
    return Json{{"nu", r.nu}, {"nu_s", r.nu_s}, {"nu_ur", r.nu_ur}, {"equal", r.equal}};
}

Json to_json(const VerifyRecord& r)
{
    Json j;
    j["index"] = r.index;
    if (r.parse_error) {
        j["parse_error"] = *r.parse_error;
        return j;
    }
    j["n"] = r.n;
    j["m"] = r.m;
    j["subcubic"] = r.subcubic;
    j["two_connected"] = r.two_connected;
    j["in_b"] = r.in_b;
    j["decision"] = optional_json(r.decision);
    j["skip_reason"] = r.skip_reason ? Json(*r.skip_reason) : Json(nullptr);
    j["oracle"] = optional_json(r.oracle);
    j["agree"] = r.agree ? Json(*r.agree) : Json(nullptr);
    j["nu_ur_agree"] = r.nu_ur_agree ? Json(*r.nu_ur_agree) : Json(nullptr);
    j["theorem1_ok"] = r.theorem1_ok ? Json(*r.theorem1_ok) : Json(nullptr);
    j["mismatch"] = r.mismatch();
    if (r.internal_error)
        j["internal_error"] = *r.internal_error;
    return j;
}

Json to_json(const VerifySummary& s)
{
    Json j;
    Json body;
    body["records"] = s.records;
    body["parse_errors"] = s.parse_errors;
    body["internal_errors"] = s.internal_errors;
    body["skipped"] = s.skipped;
    body["decided"] = s.decided;
    body["equal"] = s.equal;
    body["in_b"] = s.in_b;
    body["oracle_checked"] = s.oracle_checked;
    body["theorem1_checked"] = s.theorem1_checked;
    body["mismatches"] = s.mismatches;
    body["ok"] = s.ok();
    j["summary"] = body;
    return j;
}

std::vector<Edge> parse_edge_spec(std::string_view text)
{
    std::vector<Edge> out;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return c == ',' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos]))
            ++pos;
        if (pos == text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end]))
            ++end;
        const std::string_view token = text.substr(pos, end - pos);
        const auto dash = token.find('-');
        int u = 0;
        int v = 0;
        bool ok = dash != std::string_view::npos && dash > 0;
        if (ok) {
            auto [p1, e1] = std::from_chars(token.data(), token.data() + dash, u);
            auto [p2, e2] = std::from_chars(token.data() + dash + 1, token.data() + token.size(), v);
            ok = e1 == std::errc{} && p1 == token.data() + dash && e2 == std::errc{} &&
                 p2 == token.data() + token.size() && dash + 1 < token.size();
        }
        if (!ok)
            throw FormatError("matching edge '" + std::string(token) + "' is not of the form u-v");
        if (u == v)
            throw FormatError("matching edge '" + std::string(token) + "' is a loop");
        out.emplace_back(u, v);
        pos = end;
    }
    return out;
}

} // namespace ureq
