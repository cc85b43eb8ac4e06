#include "ccmk/groups.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <stdexcept>

namespace ccmk::groups {

namespace {

void require_label(const std::string& label) {
    if (label.empty()) throw std::invalid_argument("atom label must be nonempty");
}

// Invariant factors of a finite abelian group given by arbitrary cyclic orders:
// the Smith form of diag(orders).
// Orders of 1 are trivial factors and are dropped.
znf::IntegerVector normalize_torsion(const znf::IntegerVector& orders) {
    for (const auto& d : orders)
        if (d < 1) throw std::invalid_argument("torsion orders must be positive");
    znf::IntegerMatrix m(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) m(i, i) = orders[i];
    znf::IntegerVector out;
    for (const auto& d : znf::smith_normal_form(m).diagonal)
        if (d > 1) out.push_back(d);
    return out;
}

std::string power(const std::string& base, std::size_t count) {
    if (count == 1) return base;
    return base + "^" + std::to_string(count);
}

}  // namespace

Atom Atom::one_units(std::string label) {
    require_label(label);
    return {AtomKind::OneUnits, std::move(label)};
}
Atom Atom::units_power_series(std::string label) {
    require_label(label);
    return {AtomKind::UnitsPowerSeries, std::move(label)};
}
Atom Atom::units_local_ring(std::string label) {
    require_label(label);
    return {AtomKind::UnitsLocalRing, std::move(label)};
}

std::string kind_name(AtomKind kind) {
    switch (kind) {
    case AtomKind::UnitsField: return "UnitsField";
    case AtomKind::OneUnits: return "OneUnits";
    case AtomKind::UnitsPowerSeries: return "UnitsPowerSeries";
    case AtomKind::UnitsLocalRing: return "UnitsLocalRing";
    }
    throw std::logic_error("unknown AtomKind");
}

AtomKind kind_from_name(const std::string& name) {
    for (AtomKind k : {AtomKind::UnitsField, AtomKind::OneUnits, AtomKind::UnitsPowerSeries,
                       AtomKind::UnitsLocalRing})
        if (kind_name(k) == name) return k;
    throw std::invalid_argument("unknown atom kind: " + name);
}

std::string normalize_label(const std::string& label) {
    static const std::regex one_var(R"(^\s*k\s*\[\[\s*[A-Za-z]\w*\s*\]\]\s*$)");
    if (std::regex_match(label, one_var)) return "k[[X]]";
    return label;
}

StructuredAbelianGroup StructuredAbelianGroup::free(std::size_t rank) {
    StructuredAbelianGroup g;
    g.free_rank = rank;
    return g;
}

StructuredAbelianGroup StructuredAbelianGroup::of_atoms(std::vector<Atom> atoms) {
    StructuredAbelianGroup g;
    g.atoms = std::move(atoms);
    return g;
}

std::size_t StructuredAbelianGroup::count(AtomKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(atoms.begin(), atoms.end(), [kind](const Atom& a) { return a.kind == kind; }));
}

bool StructuredAbelianGroup::is_trivial() const {
    return free_rank == 0 && torsion.empty() && atoms.empty();
}

StructuredAbelianGroup canonicalize(const StructuredAbelianGroup& g) {
    StructuredAbelianGroup out;
    out.free_rank = g.free_rank;
    out.torsion = normalize_torsion(g.torsion);
    for (const Atom& a : g.atoms) {
        switch (a.kind) {
        case AtomKind::UnitsField:
            out.atoms.push_back(Atom::units_field());
            break;
        case AtomKind::OneUnits:
            out.atoms.push_back(a);
            break;
        case AtomKind::UnitsPowerSeries:
        case AtomKind::UnitsLocalRing:
            out.atoms.push_back(Atom::units_field());
            out.atoms.push_back(Atom::one_units(a.label));
            break;
        }
    }
    std::stable_sort(out.atoms.begin(), out.atoms.end(), [](const Atom& x, const Atom& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        std::string nx = normalize_label(x.label), ny = normalize_label(y.label);
        if (nx != ny) return nx < ny;
        return x.label < y.label;
    });
    return out;
}

StructuredAbelianGroup direct_sum(const StructuredAbelianGroup& a, const StructuredAbelianGroup& b) {
    StructuredAbelianGroup s;
    s.free_rank = a.free_rank + b.free_rank;
    s.torsion = a.torsion;
    s.torsion.insert(s.torsion.end(), b.torsion.begin(), b.torsion.end());
    s.atoms = a.atoms;
    s.atoms.insert(s.atoms.end(), b.atoms.begin(), b.atoms.end());
    return canonicalize(s);
}

bool equals(const StructuredAbelianGroup& a, const StructuredAbelianGroup& b) {
    StructuredAbelianGroup ca = canonicalize(a), cb = canonicalize(b);
    if (ca.free_rank != cb.free_rank || ca.torsion != cb.torsion) return false;
    if (ca.atoms.size() != cb.atoms.size()) return false;
    for (std::size_t i = 0; i < ca.atoms.size(); ++i) {
        if (ca.atoms[i].kind != cb.atoms[i].kind) return false;
        if (normalize_label(ca.atoms[i].label) != normalize_label(cb.atoms[i].label)) return false;
    }
    return true;
}

ExponentLattice::ExponentLattice(std::size_t ambient, znf::IntegerMatrix gens)
    : ambient_rank(ambient), generators(std::move(gens)) {
    if (generators.rows() != ambient_rank)
        throw std::invalid_argument("ExponentLattice: generator rows must equal ambient rank");
}

StructuredAbelianGroup quotient_torus_by_lattice(const ExponentLattice& lattice) {
    // Every invariant factor is a surjective power map on k*, so only the
    // rank matters; torsion never appears.
    const std::size_t r = znf::rank(lattice.generators);
    StructuredAbelianGroup out;
    out.atoms.assign(lattice.ambient_rank - r, Atom::units_field());
    return out;
}

std::string to_text(const StructuredAbelianGroup& g) {
    StructuredAbelianGroup c = canonicalize(g);
    std::vector<std::string> parts;
    if (c.free_rank > 0) parts.push_back(power("Z", c.free_rank));
    for (const auto& d : c.torsion) parts.push_back("Z/" + d.get_str());
    if (std::size_t n = c.count(AtomKind::UnitsField)) parts.push_back(n == 1 ? "k*" : power("(k*)", n));
    std::map<std::string, std::size_t> one_units;
    std::vector<std::string> order;
    for (const Atom& a : c.atoms) {
        if (a.kind != AtomKind::OneUnits) continue;
        if (one_units[a.label]++ == 0) order.push_back(a.label);
    }
    for (const auto& label : order) parts.push_back(power("(1+m[" + label + "])", one_units[label]));
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

std::string to_text_folded(const StructuredAbelianGroup& g) {
    StructuredAbelianGroup c = canonicalize(g);
    std::size_t fields = c.count(AtomKind::UnitsField);
    std::map<std::string, std::size_t> folded, loose;
    std::vector<std::string> order;
    for (const Atom& a : c.atoms) {
        if (a.kind != AtomKind::OneUnits) continue;
        if (folded[a.label] + loose[a.label] == 0) order.push_back(a.label);
        if (fields > 0) {
            --fields;
            ++folded[a.label];
        } else {
            ++loose[a.label];
        }
    }
    std::vector<std::string> parts;
    if (c.free_rank > 0) parts.push_back(power("Z", c.free_rank));
    for (const auto& d : c.torsion) parts.push_back("Z/" + d.get_str());
    if (fields == 1) parts.push_back("k*");
    else if (fields > 1) parts.push_back(power("(k*)", fields));
    for (const auto& label : order) {
        std::size_t f = folded[label];
        if (f == 1)
            parts.push_back(label + "*");
        else if (f > 1)
            parts.push_back(power("(" + label + "*)", f));
        if (loose[label] > 0) parts.push_back(power("(1+m[" + label + "])", loose[label]));
    }
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

}  // namespace ccmk::groups
