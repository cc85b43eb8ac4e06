#include "ccmk/serialize.hpp"

#include <stdexcept>

namespace ccmk::serialize {

namespace {

std::string ade_type_name(catalog::AdeType t) {
    switch (t) {
    case catalog::AdeType::A: return "A";
    case catalog::AdeType::D: return "D";
    case catalog::AdeType::E6: return "E6";
    case catalog::AdeType::E7: return "E7";
    case catalog::AdeType::E8: return "E8";
    }
    return "A";
}

catalog::AdeType ade_type_from_name(const std::string& s) {
    if (s == "A") return catalog::AdeType::A;
    if (s == "D") return catalog::AdeType::D;
    if (s == "E6") return catalog::AdeType::E6;
    if (s == "E7") return catalog::AdeType::E7;
    if (s == "E8") return catalog::AdeType::E8;
    throw std::invalid_argument("unknown ADE type '" + s + "'");
}

template <class T, class F>
Json optional_json(const std::optional<T>& v, F&& f) {
    return v ? f(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const znf::IntegerMatrix& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

znf::IntegerMatrix matrix_from_json(const Json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("matrix JSON: row count mismatch");
    znf::IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols) throw std::invalid_argument("matrix JSON: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = znf::Integer(entries[r][c].get<std::string>());
    }
    return m;
}

Json to_json(const groups::StructuredAbelianGroup& g) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.get_str());
    Json atoms = Json::array();
    for (const auto& a : g.atoms) atoms.push_back(Json{{"kind", groups::kind_name(a.kind)}, {"label", a.label}});
    return Json{{"free_rank", g.free_rank},
                {"torsion", std::move(torsion)},
                {"atoms", std::move(atoms)},
                {"text", groups::to_text(g)}};
}

groups::StructuredAbelianGroup group_from_json(const Json& j) {
    groups::StructuredAbelianGroup g;
    g.free_rank = j.at("free_rank").get<std::size_t>();
    for (const auto& t : j.at("torsion")) g.torsion.emplace_back(t.get<std::string>());
    for (const auto& a : j.at("atoms"))
        g.atoms.push_back(groups::Atom{groups::kind_from_name(a.at("kind").get<std::string>()),
                                       a.at("label").get<std::string>()});
    return g;
}

Json to_json(const groups::ExponentLattice& x) {
    return Json{{"ambient_rank", x.ambient_rank}, {"generators", to_json(x.generators)}};
}

groups::ExponentLattice lattice_from_json(const Json& j) {
    return groups::ExponentLattice(j.at("ambient_rank").get<std::size_t>(), matrix_from_json(j.at("generators")));
}

Json to_json(const catalog::RingSpec& spec) {
    Json j{{"family", catalog::family_id(spec)},
           {"description", catalog::describe(spec)},
           {"characteristic", spec.field.characteristic}};
    std::visit(
        [&j](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, catalog::TruncatedPoly> || std::is_same_v<T, catalog::A2nCurve> ||
                          std::is_same_v<T, catalog::HypersurfaceDim3>) {
                j["n"] = f.n;
            } else if constexpr (std::is_same_v<T, catalog::ReducedHypersurfaceDim1>) {
                Json forms = Json::array();
                for (const auto& p : f.forms) forms.push_back(p.to_string());
                j["forms"] = std::move(forms);
                j["assert_hypotheses"] = f.assert_hypotheses;
                j["named_case"] = f.named_case;
                j["excluded_characteristics"] = f.excluded_characteristics;
            } else if constexpr (std::is_same_v<T, catalog::ADEMetadata>) {
                j["type"] = ade_type_name(f.type);
                j["index"] = f.index;
                j["dim"] = f.dim;
                j["equation"] = catalog::ade_equation(f);
            }
        },
        spec.family);
    return j;
}

catalog::RingSpec spec_from_json(const Json& j) {
    const std::string family = j.at("family").get<std::string>();
    catalog::RingSpec spec;
    if (family == "truncated-poly") {
        spec.family = catalog::TruncatedPoly{j.at("n").get<int>()};
    } else if (family == "a2n-curve") {
        spec.family = catalog::A2nCurve{j.at("n").get<int>()};
    } else if (family == "a1-surface") {
        spec.family = catalog::A1Surface{};
    } else if (family == "invariant-dim3") {
        spec.family = catalog::InvariantDim3{};
    } else if (family == "hypersurface-dim1") {
        catalog::ReducedHypersurfaceDim1 h;
        for (const auto& s : j.at("forms")) h.forms.push_back(forms::BivariatePolynomial::parse(s.get<std::string>()));
        h.assert_hypotheses = j.at("assert_hypotheses").get<bool>();
        h.named_case = j.at("named_case").get<std::string>();
        h.excluded_characteristics = j.at("excluded_characteristics").get<std::vector<unsigned long>>();
        spec.family = std::move(h);
    } else if (family == "hypersurface-dim3") {
        spec.family = catalog::HypersurfaceDim3{j.at("n").get<int>()};
    } else if (family == "ade") {
        spec.family = catalog::ADEMetadata{ade_type_from_name(j.at("type").get<std::string>()),
                                           j.at("index").get<int>(), j.at("dim").get<int>()};
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    spec.field.characteristic = j.at("characteristic").get<unsigned long>();
    return spec;
}

Json to_json(const kcalc::ComputationReport& r) {
    return Json{
        {"spec", to_json(r.spec)},
        {"t_matrix", optional_json(r.t_matrix, [](const auto& m) { return to_json(m); })},
        {"g0", optional_json(r.g0, [](const auto& g) { return to_json(g); })},
        {"h_rank", optional_json(r.h_rank, [](std::size_t h) { return Json(h); })},
        {"xi", optional_json(r.xi, [](const auto& x) { return to_json(x); })},
        {"g1", optional_json(r.g1, [](const auto& g) { return to_json(g); })},
        {"notes", r.notes},
    };
}

kcalc::ComputationReport report_from_json(const Json& j) {
    kcalc::ComputationReport r;
    r.spec = spec_from_json(j.at("spec"));
    if (!j.at("t_matrix").is_null()) r.t_matrix = matrix_from_json(j.at("t_matrix"));
    if (!j.at("g0").is_null()) r.g0 = group_from_json(j.at("g0"));
    if (!j.at("h_rank").is_null()) r.h_rank = j.at("h_rank").get<std::size_t>();
    if (!j.at("xi").is_null()) r.xi = lattice_from_json(j.at("xi"));
    if (!j.at("g1").is_null()) r.g1 = group_from_json(j.at("g1"));
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

Json to_json(const catalog::FamilyDescriptor& d) {
    return Json{{"id", d.id},
                {"name", d.name},
                {"parameters", d.parameters},
                {"characteristic", d.characteristic},
                {"g0_available", d.g0_available},
                {"g1_available", d.g1_available},
                {"aut_available", d.aut_available},
                {"metadata_only", d.metadata_only},
                {"availability", d.availability}};
}

Json catalog_to_json(const std::vector<catalog::FamilyDescriptor>& families) {
    Json out = Json::array();
    for (const auto& d : families) out.push_back(to_json(d));
    return out;
}

Json verdicts_to_json(const std::vector<verify::Verdict>& verdicts) {
    Json out = Json::array();
    for (const auto& v : verdicts) {
        Json e{{"case", v.suite + ": " + v.case_name}, {"verdict", v.holds ? "holds" : "fails"}};
        if (v.counterexample) e["counterexample"] = *v.counterexample;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace ccmk::serialize
