#pragma once

// Structured abelian groups: Z^r + finite cyclic factors + symbolic unit-group
// atoms over a formal algebraically closed field k.

#include "ccmk/znf.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ccmk::groups {

enum class AtomKind {
    UnitsField,        // k*
    OneUnits,          // 1 + m of the labelled complete local ring
    UnitsPowerSeries,  // full unit group of a labelled power-series ring
    UnitsLocalRing,    // full unit group of a labelled local ring
};

struct Atom {
    AtomKind kind = AtomKind::UnitsField;
    std::string label;  // empty for UnitsField

    static Atom units_field() { return {AtomKind::UnitsField, {}}; }
    static Atom one_units(std::string label);
    static Atom units_power_series(std::string label);
    static Atom units_local_ring(std::string label);

    friend bool operator==(const Atom&, const Atom&) = default;
};

std::string kind_name(AtomKind kind);
AtomKind kind_from_name(const std::string& name);

/// Labels are compared after renaming the variable of one-variable power
/// series rings, so "k[[t]]" and "k[[X]]" name the same ring.
std::string normalize_label(const std::string& label);

struct StructuredAbelianGroup {
    std::size_t free_rank = 0;
    znf::IntegerVector torsion;
    std::vector<Atom> atoms;

    static StructuredAbelianGroup trivial() { return {}; }
    static StructuredAbelianGroup free(std::size_t rank);
    static StructuredAbelianGroup of_atoms(std::vector<Atom> atoms);

    std::size_t count(AtomKind kind) const;
    bool is_trivial() const;
};

/// Expands UnitsPowerSeries / UnitsLocalRing into k* + (1+m), sorts atoms by
/// (kind, normalized label) and renormalizes torsion to a divisibility chain.
/// Idempotent.
StructuredAbelianGroup canonicalize(const StructuredAbelianGroup& g);

StructuredAbelianGroup direct_sum(const StructuredAbelianGroup& a,
                                  const StructuredAbelianGroup& b);

bool equals(const StructuredAbelianGroup& a, const StructuredAbelianGroup& b);

/// Sublattice of Z^ambient_rank (one column per generator) read as a
/// subgroup of the torus (k*)^ambient_rank through exponent vectors.
struct ExponentLattice {
    std::size_t ambient_rank = 0;
    znf::IntegerMatrix generators;

    ExponentLattice() = default;
    ExponentLattice(std::size_t ambient, znf::IntegerMatrix gens);
};

/// (k*)^ambient / lattice. Over an algebraically closed field every map
/// a -> a^d (d >= 1) is onto k*, so each nonzero invariant factor kills one
/// torus coordinate outright and the answer is (k*)^(ambient - rank).
StructuredAbelianGroup quotient_torus_by_lattice(const ExponentLattice& lattice);

/// e.g. "Z^2 + Z/2 + (k*)^3 + (1+m[k[[t]]])"; the trivial group is "0".
std::string to_text(const StructuredAbelianGroup& g);

/// Like to_text, but pairs each (1+m[X]) with one k* and prints the product
/// as the full unit group "X*", e.g. "Z + (k[[X]]*)^2".
std::string to_text_folded(const StructuredAbelianGroup& g);

}  // namespace ccmk::groups
