#include "ccmk/kcalc.hpp"

#include <algorithm>

namespace ccmk::kcalc {

namespace {

const std::vector<catalog::ArSequence>& sequences_of(const catalog::ClusterTiltingData& data) {
    if (!data.sequences) {
        throw SequencesUnavailable(data.sequences_unavailable_reason.empty()
                                       ? "no n-AR sequences for " + data.ring
                                       : data.sequences_unavailable_reason);
    }
    return *data.sequences;
}

}  // namespace

znf::IntegerMatrix build_t_matrix(const catalog::ClusterTiltingData& data) {
    const auto& seqs = sequences_of(data);
    const auto non_free = data.non_free();
    const std::size_t rows = data.summands.size();
    znf::IntegerMatrix t(rows, non_free.size());
    for (std::size_t col = 0; col < non_free.size(); ++col) {
        const std::size_t j = non_free[col];
        auto it = std::find_if(seqs.begin(), seqs.end(),
                               [j](const catalog::ArSequence& s) { return s.end == j; });
        if (it == seqs.end())
            throw SequencesUnavailable("no sequence ending in summand " + data.summands[j]);
        t(j, col) += 1;
        for (std::size_t i = 0; i < it->terms.size(); ++i) {
            const auto& c = it->terms[i];
            if (c.size() != rows) throw std::logic_error("multiplicity vector has wrong length");
            const long sign = (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1)
            for (std::size_t l = 0; l < rows; ++l) t(l, col) += sign * c[l];
        }
    }
    return t;
}

groups::StructuredAbelianGroup compute_g0(const catalog::ClusterTiltingData& data) {
    const auto coker = znf::cokernel_invariants(build_t_matrix(data));
    groups::StructuredAbelianGroup g;
    g.free_rank = coker.free_rank;
    g.torsion = coker.torsion;
    return groups::canonicalize(g);
}

std::size_t compute_h_rank(const catalog::ClusterTiltingData& data) {
    return znf::kernel_basis(build_t_matrix(data)).size();
}

groups::ExponentLattice xi_lattice(const catalog::ClusterTiltingData& data) {
    // a * 1 on C^i_j enters with sign (-1)^(i+1) and a * 1 on L_j with +1,
    // so the exponent vector is exactly column j of T.
    znf::IntegerMatrix t = build_t_matrix(data);
    return groups::ExponentLattice(data.summands.size(), std::move(t));
}

groups::StructuredAbelianGroup compute_g1(const catalog::ClusterTiltingData& data) {
    if (!data.aut_ab) throw SequencesUnavailable("Aut(L)_ab is not catalogued for " + data.ring);
    const groups::ExponentLattice xi = xi_lattice(data);
    if (data.torus_marks.size() != xi.ambient_rank)
        throw std::logic_error("residue torus size does not match the summand count");

    groups::StructuredAbelianGroup rest = groups::canonicalize(*data.aut_ab);
    std::vector<groups::Atom> kept;
    for (std::size_t i = 0; i < rest.atoms.size(); ++i)
        if (std::find(data.torus_marks.begin(), data.torus_marks.end(), i) == data.torus_marks.end())
            kept.push_back(rest.atoms[i]);
    rest.atoms = std::move(kept);

    groups::StructuredAbelianGroup h = groups::StructuredAbelianGroup::free(compute_h_rank(data));
    return groups::direct_sum(groups::direct_sum(h, groups::quotient_torus_by_lattice(xi)), rest);
}

ComputationReport full_report(const catalog::RingSpec& spec) {
    ComputationReport r;
    r.spec = spec;
    r.diagnostics = catalog::validate(spec);
    for (const auto& d : r.diagnostics)
        r.notes.push_back(std::string(d.severity == catalog::Severity::Error ? "error" : "warning") +
                          " [" + d.code + "]: " + d.message);
    if (!r.valid()) {
        r.notes.push_back("validation failed; nothing computed");
        return r;
    }
    try {
        r.data = catalog::resolve(spec);
    } catch (const std::exception& e) {
        r.notes.push_back(std::string("resolve: ") + e.what());
        return r;
    }
    const auto& data = *r.data;
    r.notes.insert(r.notes.end(), data.notes.begin(), data.notes.end());
    r.notes.push_back("cluster tilting level n = " + std::to_string(data.cluster_n) + ", t = " +
                      std::to_string(data.t()) + " non-free summands");
    r.notes.push_back("End(L)^op is taken to have finite global dimension (catalog assumption, not verified)");

    if (!data.sequences) {
        r.notes.push_back("G0, H, Xi, G1 unavailable: " + data.sequences_unavailable_reason);
        if (!data.aut_ab) r.notes.push_back("Aut(L)_ab unavailable: not catalogued");
        return r;
    }
    try {
        r.t_matrix = build_t_matrix(data);
        r.notes.push_back("T built from tabulated n-AR sequences");
        r.g0 = compute_g0(data);
        r.notes.push_back("G0 = coker(T) via Smith normal form");
        r.h_rank = compute_h_rank(data);
        r.notes.push_back("H = ker(T), free of rank " + std::to_string(*r.h_rank));
        r.xi = xi_lattice(data);
        r.notes.push_back("Xi = column lattice of T inside the residue torus (k*)^" +
                          std::to_string(r.xi->ambient_rank));
        if (data.aut_ab) {
            r.g1 = compute_g1(data);
            r.notes.push_back("G1 = H + Aut(L)_ab / Xi; k algebraically closed so k*/k*^d is trivial");
        } else {
            r.notes.push_back("G1 unavailable: Aut(L)_ab not catalogued");
        }
    } catch (const std::exception& e) {
        r.notes.push_back(std::string("computation stopped: ") + e.what());
    }
    return r;
}

}  // namespace ccmk::kcalc
