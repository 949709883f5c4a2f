#pragma once

// JSON form of a full single-tree analysis. Exact rationals travel as
// "p/q" strings; everything else is plain JSON numbers.

#include <treespec/verify.hpp>

#include <json.hpp>

#include <optional>
#include <tuple>
#include <string>
#include <vector>

namespace treespec::cli {

inline constexpr const char* kVersion = "0.1.0";

struct CoverSection {
    int size = 0;
    VertexSet witness;
    std::vector<Edge> matching;
    VertexSet cover_union;
    VertexSet always_excluded;
    std::vector<VertexSet> enumerated;
    bool truncated = false;
    bool operator==(const CoverSection&) const = default;
};

struct SpectrumSection {
    std::vector<double> eigenvalues;
    double max_scaled_residual = 0.0;
    int sweeps = 0;
    std::optional<std::vector<std::vector<double>>> vectors;  ///< one entry per eigenvalue, under --with-vectors
    bool operator==(const SpectrumSection&) const = default;
};

struct CharpolySection {
    std::size_t n = 0;
    std::vector<Rational> coeffs;
    std::size_t multiplicity_of_one = 0;
    std::string in_y;
    bool operator==(const CharpolySection& o) const {
        return n == o.n && coeffs == o.coeffs && multiplicity_of_one == o.multiplicity_of_one && in_y == o.in_y;
    }
};

struct SeparationSection {
    double lambda_bar = 0.0;
    double lambda_p = 0.0;
    std::size_t lambda_p_index = 0;
    double bound_volume = 0.0;
    double bound_quotient = 0.0;
    double min_bound_volume = 0.0;
    double min_bound_quotient = 0.0;
    std::vector<double> quotient_spectrum;
    bool operator==(const SeparationSection&) const = default;
};

struct RecordSection {
    std::string id;
    std::string status;
    bool flagged = false;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::string> notes;
    bool operator==(const RecordSection&) const = default;
};

struct AnalysisDocument {
    std::string version = kVersion;
    Tolerances config;
    bool with_vectors = false;
    std::size_t n = 0;
    std::vector<Edge> edges;
    CoverSection cover;
    SpectrumSection spectrum;
    CharpolySection charpoly;
    std::vector<std::vector<Rational>> one_eigenspace;
    SeparationSection separation;
    bool passed = true;
    bool flagged = false;
    std::vector<RecordSection> records;

    bool operator==(const AnalysisDocument& o) const {
        auto cfg = [](const Tolerances& t) {
            return std::tuple(t.jacobi_tol, t.max_sweeps, t.residual_tol, t.cluster_tol, t.zero_tol_rel, t.vanish_tol,
                              t.bound_tol, t.interlace_tol, t.quotient_tol, t.cover_cap, t.property_cover_cap);
        };
        return version == o.version && cfg(config) == cfg(o.config) && with_vectors == o.with_vectors && n == o.n &&
               edges == o.edges && cover == o.cover && spectrum == o.spectrum && charpoly == o.charpoly &&
               one_eigenspace == o.one_eigenspace && separation == o.separation && passed == o.passed &&
               flagged == o.flagged && records == o.records;
    }
};

inline AnalysisDocument make_document(const Analysis& a, const VerificationReport& rep, bool with_vectors) {
    AnalysisDocument d;
    d.config = a.tol;
    d.with_vectors = with_vectors;
    d.n = a.tree.n();
    d.edges = a.tree.edges();

    d.cover = {a.cover.cover_size, a.cover.witness_cover, a.cover.witness_matching, a.cover.cover_union,
               a.cover.always_excluded, a.covers.covers, a.covers.truncated};

    const auto& s = a.spectrum;
    d.spectrum.eigenvalues.assign(s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
    d.spectrum.max_scaled_residual = s.max_scaled_residual();
    d.spectrum.sweeps = s.sweeps;
    if (with_vectors) {
        std::vector<std::vector<double>> vs;
        for (Eigen::Index k = 0; k < s.laplacian_vectors.cols(); ++k) {
            const Eigen::VectorXd col = s.laplacian_vectors.col(k);
            vs.emplace_back(col.data(), col.data() + col.size());
        }
        d.spectrum.vectors = std::move(vs);
    }

    d.charpoly = {a.poly.n, a.poly.coeffs, multiplicity_of_one(a.poly), format_in_y(a.poly)};
    d.one_eigenspace = a.kernel.basis;

    const auto& p = a.separation;
    d.separation = {p.lambda_bar,       p.lambda_p,           p.lambda_p_index,   p.bound_volume,
                    p.bound_quotient,   p.min_bound_volume,   p.min_bound_quotient, p.quotient_spectrum};

    d.passed = rep.passed();
    d.flagged = rep.flagged();
    for (const auto& r : rep.records) d.records.push_back({r.id, to_string(r.status), r.flagged, r.metrics, r.notes});
    return d;
}

} // namespace treespec::cli

namespace nlohmann {

template <>
struct adl_serializer<treespec::VertexSet> {
    template <class J>
    static void to_json(J& j, const treespec::VertexSet& s) { j = std::vector<treespec::Vertex>(s.begin(), s.end()); }
    template <class J>
    static void from_json(const J& j, treespec::VertexSet& s) { s = treespec::VertexSet(j.template get<std::vector<treespec::Vertex>>()); }
};

template <>
struct adl_serializer<treespec::Rational> {
    template <class J>
    static void to_json(J& j, const treespec::Rational& q) { j = treespec::to_string(q); }
    template <class J>
    static void from_json(const J& j, treespec::Rational& q) { q = treespec::parse_rational(j.template get<std::string>()); }
};

} // namespace nlohmann

namespace treespec::cli {

using json = nlohmann::ordered_json;

inline json config_json(const Tolerances& t) {
    return {{"jacobi_tol", t.jacobi_tol},     {"max_sweeps", t.max_sweeps},       {"residual_tol", t.residual_tol},
            {"cluster_tol", t.cluster_tol},   {"zero_tol", t.zero_tol_rel},       {"vanish_tol", t.vanish_tol},
            {"bound_tol", t.bound_tol},       {"interlace_tol", t.interlace_tol}, {"quotient_tol", t.quotient_tol},
            {"cover_cap", t.cover_cap},       {"property_cover_cap", t.property_cover_cap}};
}

inline Tolerances config_from_json(const json& j) {
    Tolerances t;
    j.at("jacobi_tol").get_to(t.jacobi_tol);
    j.at("max_sweeps").get_to(t.max_sweeps);
    j.at("residual_tol").get_to(t.residual_tol);
    j.at("cluster_tol").get_to(t.cluster_tol);
    j.at("zero_tol").get_to(t.zero_tol_rel);
    j.at("vanish_tol").get_to(t.vanish_tol);
    j.at("bound_tol").get_to(t.bound_tol);
    j.at("interlace_tol").get_to(t.interlace_tol);
    j.at("quotient_tol").get_to(t.quotient_tol);
    j.at("cover_cap").get_to(t.cover_cap);
    j.at("property_cover_cap").get_to(t.property_cover_cap);
    return t;
}

inline json to_json(const AnalysisDocument& d) {
    json edges = json::array();
    for (const auto& [u, v] : d.edges) edges.push_back({u, v});
    json matching = json::array();
    for (const auto& [u, v] : d.cover.matching) matching.push_back({u, v});

    json spectrum = {{"eigenvalues", d.spectrum.eigenvalues},
                     {"max_scaled_residual", d.spectrum.max_scaled_residual},
                     {"sweeps", d.spectrum.sweeps}};
    if (d.spectrum.vectors) spectrum["vectors"] = *d.spectrum.vectors;

    json records = json::array();
    for (const auto& r : d.records) {
        json metrics = json::object();
        for (const auto& [k, v] : r.metrics) metrics[k] = v;
        records.push_back({{"id", r.id}, {"status", r.status}, {"flagged", r.flagged}, {"metrics", metrics}, {"notes", r.notes}});
    }

    const auto& s = d.separation;
    return {
        {"version", d.version},
        {"config", config_json(d.config)},
        {"with_vectors", d.with_vectors},
        {"tree", {{"n", d.n}, {"edges", edges}}},
        {"cover",
         {{"size", d.cover.size},
          {"witness", d.cover.witness},
          {"matching", matching},
          {"cover_union", d.cover.cover_union},
          {"always_excluded", d.cover.always_excluded},
          {"enumerated", d.cover.enumerated},
          {"truncated", d.cover.truncated}}},
        {"spectrum", spectrum},
        {"charpoly",
         {{"n", d.charpoly.n},
          {"coefficients", d.charpoly.coeffs},
          {"multiplicity_of_one", d.charpoly.multiplicity_of_one},
          {"in_y", d.charpoly.in_y}}},
        {"one_eigenspace", d.one_eigenspace},
        {"separation",
         {{"lambda_bar", s.lambda_bar},
          {"lambda_p", s.lambda_p},
          {"lambda_p_index", s.lambda_p_index},
          {"bound_volume", s.bound_volume},
          {"bound_quotient", s.bound_quotient},
          {"min_bound_volume", s.min_bound_volume},
          {"min_bound_quotient", s.min_bound_quotient},
          {"quotient_spectrum", s.quotient_spectrum}}},
        {"verification", {{"passed", d.passed}, {"flagged", d.flagged}, {"records", records}}},
    };
}

inline std::vector<Edge> edges_from_json(const json& j) {
    std::vector<Edge> out;
    for (const auto& e : j) out.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return out;
}

inline AnalysisDocument from_json(const json& j) {
    AnalysisDocument d;
    j.at("version").get_to(d.version);
    d.config = config_from_json(j.at("config"));
    j.at("with_vectors").get_to(d.with_vectors);
    j.at("tree").at("n").get_to(d.n);
    d.edges = edges_from_json(j.at("tree").at("edges"));

    const auto& c = j.at("cover");
    c.at("size").get_to(d.cover.size);
    c.at("witness").get_to(d.cover.witness);
    d.cover.matching = edges_from_json(c.at("matching"));
    c.at("cover_union").get_to(d.cover.cover_union);
    c.at("always_excluded").get_to(d.cover.always_excluded);
    c.at("enumerated").get_to(d.cover.enumerated);
    c.at("truncated").get_to(d.cover.truncated);

    const auto& s = j.at("spectrum");
    s.at("eigenvalues").get_to(d.spectrum.eigenvalues);
    s.at("max_scaled_residual").get_to(d.spectrum.max_scaled_residual);
    s.at("sweeps").get_to(d.spectrum.sweeps);
    if (s.contains("vectors")) d.spectrum.vectors = s.at("vectors").get<std::vector<std::vector<double>>>();

    const auto& p = j.at("charpoly");
    p.at("n").get_to(d.charpoly.n);
    p.at("coefficients").get_to(d.charpoly.coeffs);
    p.at("multiplicity_of_one").get_to(d.charpoly.multiplicity_of_one);
    p.at("in_y").get_to(d.charpoly.in_y);
    j.at("one_eigenspace").get_to(d.one_eigenspace);

    const auto& q = j.at("separation");
    q.at("lambda_bar").get_to(d.separation.lambda_bar);
    q.at("lambda_p").get_to(d.separation.lambda_p);
    q.at("lambda_p_index").get_to(d.separation.lambda_p_index);
    q.at("bound_volume").get_to(d.separation.bound_volume);
    q.at("bound_quotient").get_to(d.separation.bound_quotient);
    q.at("min_bound_volume").get_to(d.separation.min_bound_volume);
    q.at("min_bound_quotient").get_to(d.separation.min_bound_quotient);
    q.at("quotient_spectrum").get_to(d.separation.quotient_spectrum);

    const auto& v = j.at("verification");
    v.at("passed").get_to(d.passed);
    v.at("flagged").get_to(d.flagged);
    for (const auto& r : v.at("records")) {
        RecordSection rs;
        r.at("id").get_to(rs.id);
        r.at("status").get_to(rs.status);
        r.at("flagged").get_to(rs.flagged);
        for (const auto& [k, val] : r.at("metrics").items()) rs.metrics.emplace_back(k, val.get<double>());
        r.at("notes").get_to(rs.notes);
        d.records.push_back(std::move(rs));
    }
    return d;
}

} // namespace treespec::cli
