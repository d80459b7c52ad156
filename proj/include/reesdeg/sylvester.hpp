#pragma once

#include <array>
#include <optional>

#include "reesdeg/gcd.hpp"
#include "reesdeg/groebner.hpp"
#include "reesdeg/hilbert.hpp"

namespace reesdeg {

/// Three binary forms of common degree n in k[s,t] with gcd 1.
class Parametrization {
public:
    static Parametrization make(RingPtr ring, std::vector<Polynomial> forms);

    const RingPtr& ring() const { return ring_; }            // k[s,t]
    const std::vector<Polynomial>& forms() const { return forms_; }
    unsigned degree() const { return n_; }

    /// k[s,t,T1,T2,T3]; rejects rings whose variables collide with the Ti.
    RingPtr biform_ring() const;
    /// Ti -> fi (s,t fixed); zero output certifies a Rees equation.
    Polynomial substitute_forms(const Polynomial& biform) const;

private:
    Parametrization() = default;
    RingPtr ring_;
    std::vector<Polynomial> forms_;
    unsigned n_ = 0;
};

/// Hilbert-Burch syzygy pair phi (3 x 2 over k[s,t]) with column degrees
/// (mu, n - mu), mu <= n - mu.
struct MuBasis {
    std::array<std::array<Polynomial, 2>, 3> phi;  // phi[row][col]
    unsigned mu = 0;
    unsigned n = 0;

    std::array<Polynomial, 3> column(int c) const {
        return {phi[0][c], phi[1][c], phi[2][c]};
    }
};

MuBasis mu_basis(const Parametrization& P);

/// Ideal of k[s,t] generated by the entries of a mu-basis column.
Ideal content_pair(const MuBasis& mb, int col);

/// Cohen-Macaulay Rees algebra test: both column content ideals coincide and
/// are generated by two forms.
bool cm_rees_test(const Parametrization& P);

/// Biform with its (s,t)- and T-degrees and a provenance label.
struct SylvesterForm {
    Polynomial form;
    long deg_st = 0;
    long deg_T = 0;
    std::string provenance;
};

/// det of the 2x2 coefficient matrix A with [f;g] = A [u;v]; membership of
/// f, g in (u,v) is certified, MembershipError otherwise.
SylvesterForm basic_sylvester(const Polynomial& f, const Polynomial& g,
                              const Polynomial& u, const Polynomial& v);

struct EliminationResult {
    Polynomial raw;       // determinant D (or the final chain form)
    Polynomial equation;  // F, primitive with positive leading coefficient
    unsigned power = 1;   // D = scale * F^power
    Rational scale;
    unsigned edeg = 0;    // deg_T F
    bool birational = false;  // edeg == n
    std::vector<SylvesterForm> forms;  // intermediate Sylvester forms
};

/// mu = 1 chain h_1 = det(f,g)_(s,t), h_{i+1} = det(f,h_i)_(s,t).
EliminationResult elimination_chain_mu1(const Parametrization& P);

/// Balanced (n = 2p, mu = p) and odd (n = 2p+1, mu = p) determinant schemes.
EliminationResult balanced_scheme(const Parametrization& P);

/// Classical Sylvester resultant of p and q with respect to one variable.
Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, int var);

/// Squarefree substitution-vanishing factor of Res_t(T1 f2 - T2 f1,
/// T1 f3 - T3 f1) at s = 1, with the T1 content stripped.
Polynomial resultant_oracle(const Parametrization& P);

struct SecElimReport {
    long socle = 0;     // socle degree of R/(J:a)
    unsigned r = 0;     // socle + 1
    StaircaseCount colon_staircase;
    Ideal colon_ideal;
};

/// Secondary elimination degree r = socle(R/(J:a)) + 1 for a complete
/// intersection J and one extra form a.
SecElimReport secondary_elim_degree(const Ideal& J, const Polynomial& a);
SecElimReport secondary_elim_degree(const Parametrization& P);

}  // namespace reesdeg
