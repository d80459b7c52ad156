#pragma once

#include <set>

#include "reesdeg/hilbert.hpp"

namespace reesdeg {

/// Simplicial complex stored by its facets (inclusion-maximal faces).
class SimplicialComplex {
public:
    /// Facets as sets of vertex indices into `vertices`. The complex with no
    /// faces at all (void) is distinguished from the complex {empty face}.
    SimplicialComplex(std::vector<std::string> vertices,
                      std::vector<std::set<int>> facets, bool is_void = false);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::set<int>>& facets() const { return facets_; }
    bool is_void() const { return void_; }
    /// The complex whose only face is the empty face.
    bool is_empty_complex() const {
        return !void_ && facets_.size() == 1 && facets_[0].empty();
    }

    /// dim of the complex; -1 for {empty face}, meaningless for void.
    int dimension() const;
    /// All faces including the empty face (unless void).
    std::vector<std::set<int>> faces() const;
    bool has_face(const std::set<int>& f) const;

    std::string to_string() const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::set<int>> facets_;
    bool void_;
};

struct FHVectors {
    std::vector<Integer> f;  // f_0 .. f_{d-1}
    std::vector<Integer> h;  // h_0 .. h_d
    Integer chi;             // sum_{i>=0} (-1)^i f_i
};

/// Stanley-Reisner ideal of the minimal non-faces.
MonomialIdeal sr_ideal(const SimplicialComplex& K);
/// Inverse correspondence; requires a squarefree monomial ideal.
SimplicialComplex sr_complex(const MonomialIdeal& I);

FHVectors fh_vectors(const SimplicialComplex& K);

/// Hilbert series of k[K] assembled face by face.
HilbertSeries sr_series(const SimplicialComplex& K);

struct SRDegrees {
    DegreeReport report;
    Integer tn;
    Integer facets_total;      // adeg = gdeg
    Integer facets_top;        // deg
    Integer f_prime;           // maximal faces of dimension d-2
};

/// deg, gdeg = adeg and the tracking number of a Stanley-Reisner ring,
/// cross-checked against the monomial-ideal computations.
SRDegrees sr_degrees(const SimplicialComplex& K);

}  // namespace reesdeg
