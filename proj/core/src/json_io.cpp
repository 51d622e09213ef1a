#include "gtorbit/json_io.hpp"

#include <json.hpp>

namespace gtorbit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rationals_to_json(const std::vector<Rational>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

Rational rational_from_json(const ordered_json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("expected an exact rational, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const ordered_json& j) {
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from_json(e));
    return out;
}

ordered_json parse_document(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
    return j;
}

const ordered_json& field(const ordered_json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + name + "'");
    return *it;
}

ordered_json pattern_body(const GTPattern& p) {
    ordered_json j;
    j["n"] = p.size();
    j["top"] = rationals_to_json(p.top());
    ordered_json rows = ordered_json::array();
    for (int r = 1; r < p.size(); ++r) rows.push_back(rationals_to_json(p.row(r)));
    j["rows"] = std::move(rows);
    return j;
}

GTPattern pattern_from_body(const ordered_json& j) {
    const int n = field(j, "n").get<int>();
    std::vector<Rational> top = rationals_from_json(field(j, "top"));
    if (static_cast<int>(top.size()) != n) throw std::invalid_argument("top row has wrong length");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : field(j, "rows")) rows.push_back(rationals_from_json(row));
    return GTPattern(std::move(rows), std::move(top));
}

} // namespace

std::string matrix_to_json(const HermitianMatrix& m) {
    const int n = m.size();
    ordered_json j;
    j["n"] = n;
    ordered_json re = ordered_json::array();
    ordered_json im = ordered_json::array();
    bool has_imag = false;
    for (int r = 0; r < n; ++r) {
        ordered_json re_row = ordered_json::array();
        ordered_json im_row = ordered_json::array();
        for (int c = 0; c < n; ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
            has_imag = has_imag || m(r, c).imag() != 0.0;
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    j["re"] = std::move(re);
    if (has_imag) j["im"] = std::move(im);
    return j.dump();
}

HermitianMatrix matrix_from_json(const std::string& text) {
    ordered_json j = parse_document(text);
    const int n = field(j, "n").get<int>();
    if (n <= 0) throw std::invalid_argument("matrix size must be positive");
    const auto& re = field(j, "re");
    const bool has_imag = j.contains("im");
    std::vector<std::complex<double>> entries(static_cast<size_t>(n) * n);
    if (static_cast<int>(re.size()) != n) throw std::invalid_argument("re has wrong row count");
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(re[r].size()) != n) throw std::invalid_argument("re row has wrong length");
        for (int c = 0; c < n; ++c) {
            double real = re[r][c].get<double>();
            double imag = has_imag ? j["im"][r][c].get<double>() : 0.0;
            entries[static_cast<size_t>(r) * n + c] = {real, imag};
        }
    }
    return HermitianMatrix(n, std::move(entries));
}

std::string pattern_to_json(const GTPattern& p) { return pattern_body(p).dump(); }

std::string pattern_to_json(const NumericGTPattern& p) {
    ordered_json j;
    j["n"] = p.size();
    j["top"] = p.top();
    ordered_json rows = ordered_json::array();
    for (int r = 1; r < p.size(); ++r) rows.push_back(p.row(r));
    j["rows"] = std::move(rows);
    return j.dump();
}

GTPattern exact_pattern_from_json(const std::string& text) {
    return pattern_from_body(parse_document(text));
}

NumericGTPattern numeric_pattern_from_json(const std::string& text) {
    ordered_json j = parse_document(text);
    const int n = field(j, "n").get<int>();
    auto row_values = [](const ordered_json& row) {
        std::vector<double> out;
        for (const auto& e : row)
            out.push_back(e.is_string() ? to_double(parse_rational(e.get<std::string>()))
                                        : e.get<double>());
        return out;
    };
    std::vector<double> top = row_values(field(j, "top"));
    if (static_cast<int>(top.size()) != n) throw std::invalid_argument("top row has wrong length");
    std::vector<std::vector<double>> rows;
    for (const auto& row : field(j, "rows")) rows.push_back(row_values(row));
    return NumericGTPattern(std::move(rows), std::move(top));
}

std::string report_to_json(const EmbeddingReport& r) {
    ordered_json j;
    j["lambda"] = rationals_to_json(r.lambda.values());
    j["N"] = r.N;
    j["D"] = r.D;
    j["orbit_dimension"] = r.orbit_dimension;
    ordered_json gv;
    gv["diagonal"] = rationals_to_json(r.good_vertex.diagonal);
    gv["pattern"] = pattern_body(r.good_vertex.pattern);
    j["good_vertex"] = std::move(gv);
    ordered_json edges = ordered_json::array();
    for (const auto& e : r.edges) {
        ordered_json edge;
        edge["pair"] = {e.p, e.q};
        edge["direction"] = e.delta;
        edge["length"] = to_string(e.length);
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    j["gromov_lower_bound"] = to_string(r.gromov_lower_bound);
    j["min_gap"] = to_string(r.min_gap);
    return j.dump();
}

EmbeddingReport report_from_json(const std::string& text) {
    ordered_json j = parse_document(text);
    Spectrum lambda(rationals_from_json(field(j, "lambda")));
    const auto& gv = field(j, "good_vertex");
    GoodVertex good{rationals_from_json(field(gv, "diagonal")), pattern_from_body(field(gv, "pattern"))};
    std::vector<Rational> base = good.pattern.coordinates();

    std::vector<EdgeRay> edges;
    for (const auto& e : field(j, "edges")) {
        EdgeRay ray;
        ray.p = field(e, "pair")[0].get<int>();
        ray.q = field(e, "pair")[1].get<int>();
        ray.delta = field(e, "direction").get<std::vector<int>>();
        ray.length = rational_from_json(field(e, "length"));
        ray.endpoint = base;
        for (size_t i = 0; i < base.size(); ++i)
            if (ray.delta[i] != 0) ray.endpoint[i] += ray.length * ray.delta[i];
        edges.push_back(std::move(ray));
    }
    return EmbeddingReport{std::move(lambda),
                           field(j, "N").get<int>(),
                           field(j, "D").get<int>(),
                           field(j, "orbit_dimension").get<int>(),
                           std::move(good),
                           std::move(edges),
                           rational_from_json(field(j, "gromov_lower_bound")),
                           rational_from_json(field(j, "min_gap"))};
}

std::string skeleton_to_json(const SkeletonGraph& g) {
    ordered_json j;
    ordered_json vertices = ordered_json::array();
    for (const auto& v : g.vertices) vertices.push_back(rationals_to_json(v));
    j["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges) {
        ordered_json edge;
        edge["u"] = e.u;
        edge["v"] = e.v;
        edge["pair"] = {e.p, e.q};
        edge["weight"] = e.weight;
        edge["length"] = to_string(e.length);
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    return j.dump();
}

SkeletonGraph skeleton_from_json(const std::string& text) {
    ordered_json j = parse_document(text);
    SkeletonGraph g;
    for (const auto& v : field(j, "vertices")) g.vertices.push_back(rationals_from_json(v));
    for (const auto& e : field(j, "edges")) {
        SkeletonEdge edge;
        edge.u = field(e, "u").get<int>();
        edge.v = field(e, "v").get<int>();
        edge.p = field(e, "pair")[0].get<int>();
        edge.q = field(e, "pair")[1].get<int>();
        edge.weight = field(e, "weight").get<std::vector<int>>();
        edge.length = rational_from_json(field(e, "length"));
        g.edges.push_back(std::move(edge));
    }
    return g;
}

} // namespace gtorbit
