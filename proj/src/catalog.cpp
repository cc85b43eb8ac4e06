#include "ccmk/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace ccmk::catalog {

namespace {

using groups::Atom;
using groups::StructuredAbelianGroup;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* kPowerSeries = "k[[X]]";
const char* kCurveClosure = "k[[t]]";
const char* kA1SurfaceRing = "k[[s^2,st,t^2]]";
const char* kInvariantDim3Ring = "k[[x^2,xy,xz,y^2,yz,z^2]]";

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

std::string join_chars(const std::vector<unsigned long>& chars) {
    std::string s;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(chars[i]);
    }
    return s;
}

// A rational number read in the prime field of characteristic p (p == 0: Q).
// Returns false when the denominator vanishes.
bool reduce(const mpq_class& q, unsigned long p, mpz_class& out) {
    if (p == 0) {
        // Zero test only; any nonzero stand-in will do.
        out = q == 0 ? 0 : 1;
        return true;
    }
    mpz_class m(p);
    mpz_class den = q.get_den() % m;
    if (den == 0) return false;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    out = (q.get_num() % m) * inv % m;
    if (out < 0) out += m;
    return true;
}

bool vanishes_in_char(const mpq_class& q, unsigned long p) {
    mpz_class r;
    if (!reduce(q, p, r)) return false;
    return r == 0;
}

// f_j == c * f_i coefficientwise for some nonzero scalar c (over the prime field).
bool proportional_polynomials(const forms::BivariatePolynomial& f,
                              const forms::BivariatePolynomial& g, unsigned long p) {
    std::vector<forms::BivariatePolynomial::Exponents> support;
    for (const auto& [e, c] : f.terms()) support.push_back(e);
    for (const auto& [e, c] : g.terms()) support.push_back(e);
    // Pick a reference coordinate where f is nonzero in char p.
    std::optional<forms::BivariatePolynomial::Exponents> ref;
    for (const auto& e : support)
        if (!vanishes_in_char(f.coefficient(e.first, e.second), p)) { ref = e; break; }
    if (!ref) return false;
    const mpq_class fr = f.coefficient(ref->first, ref->second);
    const mpq_class gr = g.coefficient(ref->first, ref->second);
    for (const auto& e : support) {
        mpq_class cross = f.coefficient(e.first, e.second) * gr - g.coefficient(e.first, e.second) * fr;
        if (!vanishes_in_char(cross, p)) return false;
    }
    return !vanishes_in_char(gr, p);
}

Diagnostic error(std::string code, std::string message) {
    return {Severity::Error, std::move(code), std::move(message)};
}
Diagnostic warning(std::string code, std::string message) {
    return {Severity::Warning, std::move(code), std::move(message)};
}

void check_characteristic(unsigned long p, std::vector<unsigned long> excluded,
                          std::vector<Diagnostic>& out) {
    if (p != 0 && !is_prime(p)) {
        out.push_back(error("characteristic", "characteristic " + std::to_string(p) +
                                                  " is neither 0 nor a prime"));
        return;
    }
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
    if (std::find(excluded.begin(), excluded.end(), p) != excluded.end())
        out.push_back(error("characteristic", "characteristic restriction: char k must avoid " +
                                                  join_chars(excluded) + " (got " +
                                                  std::to_string(p) + ")"));
}

void validate_forms(const ReducedHypersurfaceDim1& h, unsigned long p, std::vector<Diagnostic>& out) {
    const auto& f = h.forms;
    if (f.empty()) {
        out.push_back(error("forms", "at least one branch is required"));
        return;
    }
    bool all_linear_ok = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string name = "f" + std::to_string(i + 1) + " = " + f[i].to_string();
        for (const auto& [e, c] : f[i].terms()) {
            mpz_class r;
            if (!reduce(c, p, r)) {
                out.push_back(error("coefficient", name + " has a coefficient undefined in characteristic " +
                                                       std::to_string(p)));
                all_linear_ok = false;
            }
        }
        if (!vanishes_in_char(f[i].constant_term(), p)) {
            out.push_back(error("not-in-maximal-ideal", name + " is a unit, not in (x, y)"));
            all_linear_ok = false;
        }
        auto [a, b] = f[i].linear_part();
        if (vanishes_in_char(a, p) && vanishes_in_char(b, p)) {
            out.push_back(error("singular-branch", name + " lies in (x, y)^2"));
            all_linear_ok = false;
        }
    }
    if (!all_linear_ok) return;

    auto det = [&](std::size_t i, std::size_t j) {
        auto [ai, bi] = f[i].linear_part();
        auto [aj, bj] = f[j].linear_part();
        return mpq_class(ai * bj - aj * bi);
    };

    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (!vanishes_in_char(det(i, j), p)) continue;  // transversal, hence distinct
            const std::string pair = "f" + std::to_string(i + 1) + ", f" + std::to_string(j + 1);
            if (f[i].is_homogeneous_linear() && f[j].is_homogeneous_linear()) {
                out.push_back(error("not-isolated", pair + " are proportional: not an isolated singularity"));
            } else if (proportional_polynomials(f[i], f[j], p)) {
                out.push_back(error("not-isolated", pair + " are proportional: not an isolated singularity"));
            } else if (!h.assert_hypotheses) {
                out.push_back(error("isolation-undecided",
                                    pair + " share a tangent; distinct branches cannot be decided "
                                           "for nonlinear forms (assert the hypotheses to proceed)"));
            }
        }

    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (vanishes_in_char(det(i, i + 1), p))
            out.push_back(warning("adjacency", "(f" + std::to_string(i + 1) + ", f" + std::to_string(i + 2) +
                                                   ") != (x, y): 2-AR sequences are not tabulated"));
}

bool adjacency_holds(const ReducedHypersurfaceDim1& h, unsigned long p) {
    for (std::size_t i = 0; i + 1 < h.forms.size(); ++i) {
        auto [a, b] = h.forms[i].linear_part();
        auto [c, d] = h.forms[i + 1].linear_part();
        if (vanishes_in_char(mpq_class(a * d - b * c), p)) return false;
    }
    return true;
}

Multiplicities unit_vector(std::size_t size, std::size_t at) {
    Multiplicities v(size, 0);
    v[at] = 1;
    return v;
}

void mark_torus(ClusterTiltingData& d) {
    d.torus_marks.clear();
    if (!d.aut_ab) return;
    for (std::size_t i = 0; i < d.aut_ab->atoms.size(); ++i)
        if (d.aut_ab->atoms[i].kind == groups::AtomKind::UnitsField) d.torus_marks.push_back(i);
}

ClusterTiltingData resolve_truncated(const TruncatedPoly& tp) {
    const int n = tp.n;
    ClusterTiltingData d;
    d.ring = "k[x]/x^" + std::to_string(n);
    d.cluster_n = 1;
    for (int i = 0; i < n; ++i)
        d.summands.push_back(i == 0 ? "R" : (i == 1 ? "m" : "m^" + std::to_string(i)));
    d.free_index = 0;
    const std::size_t size = static_cast<std::size_t>(n);
    std::vector<ArSequence> seqs;
    // 0 -> m^i -> m^(i-1) + m^(i+1) -> m^i -> 0, with m^n = 0.
    for (std::size_t j = 1; j < size; ++j) {
        Multiplicities middle(size, 0);
        middle[j - 1] += 1;
        if (j + 1 < size) middle[j + 1] += 1;
        seqs.push_back({j, {middle, unit_vector(size, j)}});
    }
    d.sequences = std::move(seqs);
    d.aut_ab = groups::canonicalize(
        StructuredAbelianGroup::of_atoms(std::vector<Atom>(size, Atom::units_field())));
    mark_torus(d);
    return d;
}

ClusterTiltingData resolve_a2n(const A2nCurve& c) {
    const int n = c.n;
    ClusterTiltingData d;
    d.ring = "k[[t^2,t^" + std::to_string(2 * n + 1) + "]]";
    d.cluster_n = 1;
    const std::size_t size = static_cast<std::size_t>(n) + 1;
    for (std::size_t i = 0; i < size; ++i) d.summands.push_back("R_" + std::to_string(i));
    d.free_index = 0;
    std::vector<ArSequence> seqs;
    for (std::size_t j = 1; j < size; ++j) {
        Multiplicities middle(size, 0);
        middle[j - 1] += 1;
        if (j + 1 < size) middle[j + 1] += 1;
        else middle[j] += 1;  // ending in R_n: middle term R_(n-1) + R_n
        seqs.push_back({j, {middle, unit_vector(size, j)}});
    }
    d.sequences = std::move(seqs);
    std::vector<Atom> atoms(static_cast<std::size_t>(n), Atom::units_field());
    atoms.push_back(Atom::units_power_series(kCurveClosure));
    d.aut_ab = groups::canonicalize(StructuredAbelianGroup::of_atoms(atoms));
    mark_torus(d);
    return d;
}

ClusterTiltingData resolve_a1_surface() {
    ClusterTiltingData d;
    d.ring = kA1SurfaceRing;
    d.cluster_n = 1;
    d.summands = {"R", "I=(s^2,st)"};
    d.free_index = 0;
    d.sequences = std::vector<ArSequence>{{1, {{2, 0}, {0, 1}}}};
    d.aut_ab = groups::canonicalize(
        StructuredAbelianGroup::of_atoms({Atom::units_field(), Atom::units_local_ring(kA1SurfaceRing)}));
    mark_torus(d);
    return d;
}

ClusterTiltingData resolve_invariant_dim3() {
    ClusterTiltingData d;
    d.ring = kInvariantDim3Ring;
    d.cluster_n = 2;
    d.summands = {"R", "I=(x^2,xy,xz)"};
    d.free_index = 0;
    d.sequences_unavailable_reason = "no 2-AR sequence data is tabulated for this ring";
    d.aut_ab = groups::canonicalize(
        StructuredAbelianGroup::of_atoms({Atom::units_field(), Atom::units_local_ring(kInvariantDim3Ring)}));
    mark_torus(d);
    return d;
}

ClusterTiltingData resolve_hypersurface_dim1(const ReducedHypersurfaceDim1& h, unsigned long p) {
    const std::size_t n = h.forms.size();
    ClusterTiltingData d;
    std::string f;
    for (std::size_t i = 0; i < n; ++i) f += (i ? ")(" : "(") + h.forms[i].to_string();
    d.ring = "k[[x,y]]/" + f + ")";
    d.cluster_n = 2;
    for (std::size_t i = 1; i <= n; ++i) d.summands.push_back("S_" + std::to_string(i));
    d.free_index = n - 1;  // S_n = R
    if (adjacency_holds(h, p)) {
        // 0 -> S_j -> S_(j+1) + S_(j-1) -> S_(j+1) + S_(j-1) -> S_j -> 0, S_0 = 0.
        std::vector<ArSequence> seqs;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            Multiplicities middle(n, 0);
            middle[j + 1] += 1;
            if (j > 0) middle[j - 1] += 1;
            seqs.push_back({j, {middle, middle, unit_vector(n, j)}});
        }
        d.sequences = std::move(seqs);
    } else {
        d.sequences_unavailable_reason =
            "adjacent branches are not transversal, so the 2-AR sequences are not tabulated";
    }
    d.aut_ab = groups::canonicalize(StructuredAbelianGroup::of_atoms(
        std::vector<Atom>(n, Atom::units_power_series(kPowerSeries))));
    mark_torus(d);
    if (h.assert_hypotheses) d.notes.push_back("branch hypotheses asserted by caller, not verified");
    return d;
}

ClusterTiltingData resolve_hypersurface_dim3(const HypersurfaceDim3& h) {
    ClusterTiltingData d;
    d.ring = "k[[x,y,u,v]]/(f+uv), " + std::to_string(h.n) + " branches";
    d.cluster_n = 2;
    for (int i = 1; i <= h.n; ++i) d.summands.push_back("U_" + std::to_string(i));
    d.free_index = static_cast<std::size_t>(h.n) - 1;
    d.sequences_unavailable_reason = "no 2-AR sequence data is tabulated for this ring";
    return d;
}

std::string ade_name(const ADEMetadata& m) {
    switch (m.type) {
    case AdeType::A: return "A_" + std::to_string(m.index);
    case AdeType::D: return "D_" + std::to_string(m.index);
    case AdeType::E6: return "E_6";
    case AdeType::E7: return "E_7";
    case AdeType::E8: return "E_8";
    }
    return "?";
}

}  // namespace

RingSpec truncated_poly(int n) { return {TruncatedPoly{n}, {}}; }
RingSpec a2n_curve(int n) { return {A2nCurve{n}, {}}; }
RingSpec a1_surface() { return {A1Surface{}, {}}; }
RingSpec invariant_dim3() { return {InvariantDim3{}, {}}; }

RingSpec hypersurface_dim1(std::vector<forms::BivariatePolynomial> forms, bool assert_hypotheses) {
    ReducedHypersurfaceDim1 h;
    h.forms = std::move(forms);
    h.assert_hypotheses = assert_hypotheses;
    return {h, {}};
}

RingSpec a1_dim1() {
    RingSpec s = hypersurface_dim1({forms::BivariatePolynomial::parse("x - y"),
                                    forms::BivariatePolynomial::parse("x + y")});
    std::get<ReducedHypersurfaceDim1>(s.family).named_case = "A1";
    return s;
}

RingSpec d2n_dim1(int n) {
    if (n < 2) throw std::invalid_argument("D2nDim1 requires n >= 2");
    const std::string pw = "y^" + std::to_string(n - 1);
    RingSpec s = hypersurface_dim1({forms::BivariatePolynomial::parse("x - " + pw),
                                    forms::BivariatePolynomial::parse("y"),
                                    forms::BivariatePolynomial::parse("x + " + pw)},
                                   true);
    auto& h = std::get<ReducedHypersurfaceDim1>(s.family);
    h.named_case = "D" + std::to_string(2 * n);
    h.excluded_characteristics = {3, 5};
    return s;
}

RingSpec a2n_minus1_dim1(int n) {
    if (n < 1) throw std::invalid_argument("A2n-1 dim 1 requires n >= 1");
    const std::string pw = "y^" + std::to_string(n);
    RingSpec s = hypersurface_dim1(
        {forms::BivariatePolynomial::parse("x - " + pw), forms::BivariatePolynomial::parse("x + " + pw)},
        true);
    auto& h = std::get<ReducedHypersurfaceDim1>(s.family);
    h.named_case = "A" + std::to_string(2 * n - 1);
    h.excluded_characteristics = {3, 5};
    return s;
}

RingSpec hypersurface_dim3(int n) { return {HypersurfaceDim3{n}, {}}; }
RingSpec ade(AdeType type, int index, int dim) { return {ADEMetadata{type, index, dim}, {}}; }

RingSpec with_characteristic(RingSpec spec, unsigned long p) {
    spec.field.characteristic = p;
    return spec;
}

std::string family_id(const RingSpec& spec) {
    return std::visit(overloaded{
                          [](const TruncatedPoly&) { return std::string("truncated-poly"); },
                          [](const A2nCurve&) { return std::string("a2n-curve"); },
                          [](const A1Surface&) { return std::string("a1-surface"); },
                          [](const InvariantDim3&) { return std::string("invariant-dim3"); },
                          [](const ReducedHypersurfaceDim1&) { return std::string("hypersurface-dim1"); },
                          [](const HypersurfaceDim3&) { return std::string("hypersurface-dim3"); },
                          [](const ADEMetadata&) { return std::string("ade"); },
                      },
                      spec.family);
}

std::string describe(const RingSpec& spec) {
    std::string base = std::visit(
        overloaded{
            [](const TruncatedPoly& f) { return "TruncatedPoly(n=" + std::to_string(f.n) + ")"; },
            [](const A2nCurve& f) { return "A2nCurve(n=" + std::to_string(f.n) + ")"; },
            [](const A1Surface&) { return std::string("A1Surface"); },
            [](const InvariantDim3&) { return std::string("InvariantDim3"); },
            [](const ReducedHypersurfaceDim1& f) {
                std::string s = "ReducedHypersurfaceDim1(";
                for (std::size_t i = 0; i < f.forms.size(); ++i) s += (i ? ", " : "") + f.forms[i].to_string();
                s += ")";
                if (!f.named_case.empty()) s += " [" + f.named_case + "]";
                return s;
            },
            [](const HypersurfaceDim3& f) { return "HypersurfaceDim3(n=" + std::to_string(f.n) + ")"; },
            [](const ADEMetadata& m) { return "ADE(" + ade_name(m) + ", dim=" + std::to_string(m.dim) + ")"; },
        },
        spec.family);
    if (spec.field.characteristic != 0) base += " over char " + std::to_string(spec.field.characteristic);
    return base;
}

std::string ade_equation(const ADEMetadata& m) {
    std::string head;
    switch (m.type) {
    case AdeType::A: head = "x^2 + y^" + std::to_string(m.index + 1); break;
    case AdeType::D: head = "x^2y + y^" + std::to_string(m.index - 1); break;
    case AdeType::E6: head = "x^3 + y^4"; break;
    case AdeType::E7: head = "x^3 + xy^3"; break;
    case AdeType::E8: head = "x^3 + y^5"; break;
    }
    for (int i = 2; i <= m.dim; ++i) head += " + z_" + std::to_string(i) + "^2";
    return head;
}

std::vector<Diagnostic> validate(const RingSpec& spec) {
    std::vector<Diagnostic> out;
    const unsigned long p = spec.field.characteristic;
    std::visit(overloaded{
                   [&](const TruncatedPoly& f) {
                       if (f.n < 1) out.push_back(error("parameter", "TruncatedPoly requires n >= 1"));
                       check_characteristic(p, {2}, out);
                   },
                   [&](const A2nCurve& f) {
                       if (f.n < 0) out.push_back(error("parameter", "A2nCurve requires n >= 0"));
                       check_characteristic(p, {2, 3, 5}, out);
                   },
                   [&](const A1Surface&) { check_characteristic(p, {2}, out); },
                   [&](const InvariantDim3&) { check_characteristic(p, {2, 3}, out); },
                   [&](const ReducedHypersurfaceDim1& f) {
                       std::vector<unsigned long> ex{2};
                       ex.insert(ex.end(), f.excluded_characteristics.begin(), f.excluded_characteristics.end());
                       check_characteristic(p, ex, out);
                       validate_forms(f, p, out);
                   },
                   [&](const HypersurfaceDim3& f) {
                       if (f.n < 1) out.push_back(error("parameter", "HypersurfaceDim3 requires n >= 1"));
                       check_characteristic(p, {2}, out);
                   },
                   [&](const ADEMetadata& m) {
                       if (m.type == AdeType::A && m.index < 1)
                           out.push_back(error("parameter", "A_n requires n >= 1"));
                       if (m.type == AdeType::D && m.index < 4)
                           out.push_back(error("parameter", "D_n requires n >= 4"));
                       if (m.dim < 1) out.push_back(error("parameter", "dimension must be >= 1"));
                       check_characteristic(p, {2, 3, 5}, out);
                   },
               },
               spec.family);
    return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

namespace {
std::string summarize(const std::vector<Diagnostic>& diagnostics) {
    std::string s = "invalid ring specification";
    for (const auto& d : diagnostics)
        if (d.severity == Severity::Error) s += "; " + d.message;
    return s;
}
}  // namespace

InvalidSpec::InvalidSpec(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::vector<std::size_t> ClusterTiltingData::non_free() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < summands.size(); ++i)
        if (i != free_index) out.push_back(i);
    return out;
}

ClusterTiltingData resolve(const RingSpec& spec) {
    auto diagnostics = validate(spec);
    if (has_errors(diagnostics)) throw InvalidSpec(std::move(diagnostics));
    const unsigned long p = spec.field.characteristic;
    return std::visit(
        overloaded{
            [](const TruncatedPoly& f) { return resolve_truncated(f); },
            [](const A2nCurve& f) { return resolve_a2n(f); },
            [](const A1Surface&) { return resolve_a1_surface(); },
            [](const InvariantDim3&) { return resolve_invariant_dim3(); },
            [p](const ReducedHypersurfaceDim1& f) { return resolve_hypersurface_dim1(f, p); },
            [](const HypersurfaceDim3& f) { return resolve_hypersurface_dim3(f); },
            [](const ADEMetadata& m) -> ClusterTiltingData {
                throw MetadataOnly(ade_name(m) + " (" + ade_equation(m) +
                                   ") is catalogued as metadata only: no summand or sequence data");
            },
        },
        spec.family);
}

std::vector<FamilyDescriptor> list_families() {
    std::vector<FamilyDescriptor> out;
    out.push_back({"truncated-poly", "TruncatedPoly", "--n N (N >= 1): k[x]/x^N", "char != 2",
                   true, true, true, false, "G0,G1 available"});
    out.push_back({"a2n-curve", "A2nCurve", "--n N (N >= 0): k[[t^2, t^(2N+1)]]", "char != 2,3,5",
                   true, true, true, false, "G0,G1 available"});
    out.push_back({"a1-surface", "A1Surface", "k[[s^2, st, t^2]]", "char != 2",
                   true, true, true, false, "G0,G1 available"});
    out.push_back({"invariant-dim3", "InvariantDim3", "k[[x^2, xy, xz, y^2, yz, z^2]]", "char != 2,3",
                   false, false, true, false, "G1 unavailable: no sequence data; Aut_ab available"});
    out.push_back({"hypersurface-dim1", "ReducedHypersurfaceDim1",
                   "--forms \"f1,...,fn\": smooth branches in k[[x,y]], adjacent branches transversal",
                   "char != 2", true, true, true, false,
                   "G0,G1 available when adjacent branches are transversal"});
    out.push_back({"a1-dim1", "A1Dim1", "(x - y)(x + y)", "char != 2", true, true, true, false,
                   "G0,G1 available"});
    out.push_back({"d2n-dim1", "D2nDim1", "--n N (N >= 2): (x - y^(N-1)) y (x + y^(N-1))", "char != 2,3,5",
                   true, true, true, false, "G0,G1 available (branch hypotheses asserted)"});
    out.push_back({"a2n-minus1-dim1", "A2nMinus1Dim1", "--n N (N >= 1): (x - y^N)(x + y^N)",
                   "char != 2,3,5", false, false, true, false,
                   "Aut_ab only for N > 1: adjacent branches are tangent"});
    out.push_back({"hypersurface-dim3", "HypersurfaceDim3", "--n N (N >= 1): k[[x,y,u,v]]/(f+uv)",
                   "char != 2", false, false, false, false, "sequences unavailable; summands only"});
    out.push_back({"ade", "ADEMetadata", "--type A|D|E6|E7|E8 --n N --dim D", "char != 2,3,5",
                   false, false, false, true, "metadata-only: defining equation"});
    return out;
}

}  // namespace ccmk::catalog
