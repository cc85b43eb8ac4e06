#pragma once

// G0 and G1 from cluster tilting data:
//   G0 = coker(T),  G1 = ker(T) + Aut(L)_ab / Xi,
// where T is the (t+1) x t n-AR matrix and Xi is the image of the scalar
// automorphisms, a sublattice of the residue torus (k*)^(t+1).

#include "ccmk/catalog.hpp"
#include "ccmk/groups.hpp"
#include "ccmk/znf.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccmk::kcalc {

class SequencesUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Entry (l, j) = delta_{l j} + sum_i (-1)^(i+1) #(l, C^i_j); rows run over
/// all summands, columns over the non-free ones.
znf::IntegerMatrix build_t_matrix(const catalog::ClusterTiltingData& data);

groups::StructuredAbelianGroup compute_g0(const catalog::ClusterTiltingData& data);

std::size_t compute_h_rank(const catalog::ClusterTiltingData& data);

/// Exponent vectors of the generators of Xi inside (k*)^(t+1): scaling by a
/// along the sequence ending in L_j contributes a^(T_{l j}) at summand l.
groups::ExponentLattice xi_lattice(const catalog::ClusterTiltingData& data);

groups::StructuredAbelianGroup compute_g1(const catalog::ClusterTiltingData& data);

struct ComputationReport {
    catalog::RingSpec spec;
    std::vector<catalog::Diagnostic> diagnostics;
    std::optional<catalog::ClusterTiltingData> data;
    std::optional<znf::IntegerMatrix> t_matrix;
    std::optional<groups::StructuredAbelianGroup> g0;
    std::optional<std::size_t> h_rank;
    std::optional<groups::ExponentLattice> xi;
    std::optional<groups::StructuredAbelianGroup> g1;
    std::vector<std::string> notes;

    bool valid() const { return !catalog::has_errors(diagnostics); }
};

/// validate -> resolve -> every computation the data supports. Never throws;
/// blocked steps are recorded in notes.
ComputationReport full_report(const catalog::RingSpec& spec);

}  // namespace ccmk::kcalc
