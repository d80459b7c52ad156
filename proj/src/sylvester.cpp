#include "reesdeg/sylvester.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "reesdeg/filtration.hpp"
#include "reesdeg/matrix.hpp"

namespace reesdeg {

// -------------------------------------------------------------- parametrization

Parametrization Parametrization::make(RingPtr ring, std::vector<Polynomial> forms) {
    if (ring->nvars() != 2)
        throw Error("parametrization lives in a two-variable ring");
    if (forms.size() != 3) throw Error("parametrization needs three forms");
    Parametrization P;
    P.ring_ = ring;
    long n = -1;
    for (auto& f : forms) {
        Polynomial g = f.ring()->same_order(*ring) ? f : f.map_to(ring);
        if (g.is_zero() || !g.is_homogeneous())
            throw DegenerateInputError("forms must be nonzero and homogeneous");
        if (n < 0) n = g.degree();
        if (g.degree() != n)
            throw DegenerateInputError("forms must share a common degree");
        P.forms_.push_back(std::move(g));
    }
    P.n_ = static_cast<unsigned>(n);
    StaircaseCount sc = artinian_length(Ideal(ring, P.forms_), ring->order());
    if (!sc.finite)
        throw DegenerateInputError("forms have a common factor (gcd is not 1)");
    return P;
}

RingPtr Parametrization::biform_ring() const {
    for (const char* t : {"T1", "T2", "T3"})
        if (ring_->var_index(t) >= 0)
            throw Error("ring variable collides with reserved name T1/T2/T3");
    std::vector<std::string> vars = ring_->var_names();
    vars.insert(vars.end(), {"T1", "T2", "T3"});
    return PolyRing::make(vars);
}

Polynomial Parametrization::substitute_forms(const Polynomial& biform) const {
    const RingPtr& B = biform.ring();
    std::vector<Polynomial> images;
    for (int i = 0; i < B->nvars(); ++i) {
        const std::string& name = B->var_name(i);
        if (name == "T1") images.push_back(forms_[0]);
        else if (name == "T2") images.push_back(forms_[1]);
        else if (name == "T3") images.push_back(forms_[2]);
        else {
            int j = ring_->var_index(name);
            if (j < 0) throw RingMismatchError("unexpected variable " + name);
            images.push_back(Polynomial::variable(ring_, j));
        }
    }
    return biform.substitute(images);
}

// -------------------------------------------------------------------- mu basis

namespace {

// kernel of the syzygy map in degree d: columns a_1,a_2,a_3 of degree d with
// sum a_i f_i = 0; unknowns are the 3(d+1) coefficients, s-power descending
std::vector<std::vector<Rational>> syzygy_kernel(const Parametrization& P,
                                                 int d) {
    const unsigned n = P.degree();
    const int cols = 3 * (d + 1);
    const int rows = static_cast<int>(n) + d + 1;
    RationalMatrix A(static_cast<size_t>(rows), static_cast<size_t>(cols));
    for (int which = 0; which < 3; ++which) {
        const Polynomial& f = P.forms()[which];
        for (int j = 0; j <= d; ++j) {  // a-coefficient of s^{d-j} t^j
            for (const auto& term : f.terms()) {
                int t_exp = term.mono[1] + j;  // row index by t-exponent
                A.at(static_cast<size_t>(t_exp),
                     static_cast<size_t>(which * (d + 1) + j)) += term.coeff;
            }
        }
    }
    return kernel_basis(A);
}

std::array<Polynomial, 3> vector_to_column(const RingPtr& ring, int d,
                                           const std::vector<Rational>& v) {
    std::array<Polynomial, 3> col{Polynomial::zero(ring), Polynomial::zero(ring),
                                  Polynomial::zero(ring)};
    for (int which = 0; which < 3; ++which)
        for (int j = 0; j <= d; ++j) {
            const Rational& c = v[static_cast<size_t>(which * (d + 1) + j)];
            if (c == 0) continue;
            Monomial m = Monomial::one(2);
            m[0] = d - j;
            m[1] = j;
            col[static_cast<size_t>(which)] =
                col[static_cast<size_t>(which)] +
                Polynomial::from_monomial(ring, m, c);
        }
    return col;
}

std::array<Polynomial, 3> normalize_column(std::array<Polynomial, 3> col) {
    // primitive integer scaling with the first nonzero coefficient positive
    Integer num_gcd(0), den_lcm(1);
    for (const auto& p : col)
        for (const auto& t : p.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                    t.coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    t.coeff.get_den().get_mpz_t());
        }
    if (num_gcd == 0) return col;
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    for (auto& p : col) p = p * scale;
    for (const auto& p : col) {
        if (p.is_zero()) continue;
        if (p.leading_coeff() < 0)
            for (auto& q : col) q = -q;
        break;
    }
    return col;
}

}  // namespace

MuBasis mu_basis(const Parametrization& P) {
    const RingPtr& ring = P.ring();
    const unsigned n = P.degree();
    MuBasis mb;
    mb.n = n;

    int mu = -1;
    std::vector<std::vector<Rational>> first_kernel;
    for (int d = 0; d < static_cast<int>(n) && mu < 0; ++d) {
        first_kernel = syzygy_kernel(P, d);
        if (!first_kernel.empty()) mu = d;
    }
    if (mu < 0)
        throw DegenerateInputError("no syzygy below the common degree");
    mb.mu = static_cast<unsigned>(mu);

    auto col1 = normalize_column(vector_to_column(ring, mu, first_kernel[0]));

    // second column of degree n - mu, independent of the multiples of col1
    const int d2 = static_cast<int>(n) - mu;
    auto kernel2 = syzygy_kernel(P, d2);
    const size_t width = 3 * (static_cast<size_t>(d2) + 1);
    std::vector<std::vector<Rational>> multiples;
    for (int k = 0; k <= d2 - mu; ++k) {
        // s^{d2-mu-k} t^k * col1, flattened in the degree-d2 layout
        std::vector<Rational> v(width, Rational(0));
        for (int which = 0; which < 3; ++which)
            for (const auto& term : col1[static_cast<size_t>(which)].terms()) {
                int j = term.mono[1] + k;  // t-exponent in degree d2
                v[static_cast<size_t>(which * (d2 + 1) + j)] += term.coeff;
            }
        multiples.push_back(std::move(v));
    }
    auto in_span = [&](const std::vector<std::vector<Rational>>& space,
                       const std::vector<Rational>& vec) {
        RationalMatrix M(space.size() + 1, width);
        for (size_t i = 0; i < space.size(); ++i)
            for (size_t j = 0; j < width; ++j) M.at(i, j) = space[i][j];
        for (size_t j = 0; j < width; ++j) M.at(space.size(), j) = vec[j];
        RationalMatrix M0(space.size(), width);
        for (size_t i = 0; i < space.size(); ++i)
            for (size_t j = 0; j < width; ++j) M0.at(i, j) = space[i][j];
        return rref(M).size() == rref(M0).size();
    };
    std::optional<std::vector<Rational>> second;
    for (const auto& v : kernel2) {
        if (!in_span(multiples, v)) {
            second = v;
            break;
        }
    }
    if (!second)
        throw DegenerateInputError("syzygy module is not generated as expected");
    auto col2 = normalize_column(vector_to_column(ring, d2, *second));

    for (int i = 0; i < 3; ++i) {
        mb.phi[static_cast<size_t>(i)][0] = col1[static_cast<size_t>(i)];
        mb.phi[static_cast<size_t>(i)][1] = col2[static_cast<size_t>(i)];
    }

    // certify: [f1 f2 f3] . phi = 0 and the signed 2x2 minors regenerate the
    // forms up to one common scalar
    for (int c = 0; c < 2; ++c) {
        Polynomial acc = Polynomial::zero(ring);
        for (int i = 0; i < 3; ++i)
            acc = acc + P.forms()[static_cast<size_t>(i)] *
                            mb.phi[static_cast<size_t>(i)][static_cast<size_t>(c)];
        if (!acc.is_zero()) throw Error("internal: mu-basis is not a syzygy");
    }
    std::array<Polynomial, 3> minors;
    for (int i = 0; i < 3; ++i) {
        int r1 = (i + 1) % 3, r2 = (i + 2) % 3;
        if (r1 > r2) std::swap(r1, r2);
        Polynomial det = mb.phi[static_cast<size_t>(r1)][0] *
                             mb.phi[static_cast<size_t>(r2)][1] -
                         mb.phi[static_cast<size_t>(r2)][0] *
                             mb.phi[static_cast<size_t>(r1)][1];
        if (i % 2) det = -det;
        minors[static_cast<size_t>(i)] = det;
    }
    std::optional<Rational> ratio;
    for (int i = 0; i < 3; ++i) {
        const Polynomial& f = P.forms()[static_cast<size_t>(i)];
        const Polynomial& m = minors[static_cast<size_t>(i)];
        if (m.is_zero() != f.is_zero())
            throw Error("internal: Hilbert-Burch minors do not match");
        if (m.is_zero()) continue;
        Rational r = m.leading_coeff() / f.leading_coeff();
        if (!(f * r == m))
            throw Error("internal: Hilbert-Burch minors do not match");
        if (ratio && *ratio != r)
            throw Error("internal: Hilbert-Burch scalar is not common");
        ratio = r;
    }
    return mb;
}

Ideal content_pair(const MuBasis& mb, int col) {
    if (col < 0 || col > 1) throw Error("content_pair: column must be 0 or 1");
    const RingPtr& ring = mb.phi[0][0].ring() ? mb.phi[0][0].ring()
                                              : mb.phi[1][0].ring();
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i)
        gens.push_back(mb.phi[static_cast<size_t>(i)][static_cast<size_t>(col)]);
    return Ideal(ring, std::move(gens));
}

bool cm_rees_test(const Parametrization& P) {
    MuBasis mb = mu_basis(P);
    const RingPtr& ring = P.ring();
    const TermOrder& ord = ring->order();
    Ideal c0 = content_pair(mb, 0);
    Ideal c1 = content_pair(mb, 1);
    bool verdict = ideal_equal(c0, c1, ord) &&
                   minimal_generators(c0).size() <= 2;

    // cross-validation on monomial parametrizations: some pair of the forms
    // is a two-generated reduction, and r <= 1 must agree with the verdict
    bool monomial = true;
    for (const auto& f : P.forms())
        if (f.nterms() != 1) monomial = false;
    if (monomial) {
        Ideal I(ring, P.forms());
        Integer e0 = samuel_fit_auto(I, ord).e[0];
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                Ideal J(ring, {P.forms()[static_cast<size_t>(a)],
                               P.forms()[static_cast<size_t>(b)]});
                StaircaseCount sc = artinian_length(J, ord);
                if (!sc.finite) continue;
                if (samuel_fit_auto(J, ord).e[0] != e0) continue;  // not a reduction
                auto r = reduction_number(J, I, 3, ord);
                if (!r) continue;
                if ((*r <= 1) != verdict)
                    throw Error("internal: content test disagrees with r <= 1");
                return verdict;
            }
    }
    return verdict;
}

// -------------------------------------------------------------- sylvester forms

namespace {

// degree within (or outside) a variable mask
long masked_degree(const Polynomial& p, const std::vector<bool>& mask,
                   bool inside) {
    long d = 0;
    for (const auto& term : p.terms()) {
        long sum = 0;
        for (int i = 0; i < p.ring()->nvars(); ++i)
            if (mask[static_cast<size_t>(i)] == inside) sum += term.mono[i];
        d = std::max(d, sum);
    }
    return d;
}

std::vector<bool> support_mask(const Polynomial& u, const Polynomial& v) {
    std::vector<bool> mask(static_cast<size_t>(u.ring()->nvars()), false);
    for (const auto* p : {&u, &v})
        for (const auto& term : p->terms())
            for (int i = 0; i < p->ring()->nvars(); ++i)
                if (term.mono[i] > 0) mask[static_cast<size_t>(i)] = true;
    return mask;
}

// split f = a*u + b*v for monomials u, v: u-divisible terms go to a
std::pair<Polynomial, Polynomial> monomial_split(const Polynomial& f,
                                                 const Monomial& u,
                                                 const Monomial& v) {
    const RingPtr& ring = f.ring();
    Polynomial a = Polynomial::zero(ring), b = Polynomial::zero(ring);
    for (const auto& term : f.terms()) {
        if (u.divides(term.mono))
            a = a + Polynomial::from_monomial(ring, term.mono / u, term.coeff);
        else if (v.divides(term.mono))
            b = b + Polynomial::from_monomial(ring, term.mono / v, term.coeff);
        else
            throw MembershipError("form does not lie in the content pair");
    }
    return {a, b};
}

// general split by linear algebra on each coefficient in the non-(u,v)
// variables; deterministic via the reduced echelon particular solution
std::pair<Polynomial, Polynomial> general_split(const Polynomial& f,
                                                const Polynomial& u,
                                                const Polynomial& v) {
    const RingPtr& ring = f.ring();
    // variables appearing in u or v form the "base"; group f by the rest
    std::vector<bool> base(static_cast<size_t>(ring->nvars()), false);
    for (const auto& p : {u, v})
        for (const auto& term : p.terms())
            for (int i = 0; i < ring->nvars(); ++i)
                if (term.mono[i] > 0) base[static_cast<size_t>(i)] = true;

    std::map<std::vector<int>, Polynomial> groups;  // outer monomial -> base part
    for (const auto& term : f.terms()) {
        Monomial outer = term.mono, inner = term.mono;
        for (int i = 0; i < ring->nvars(); ++i) {
            if (base[static_cast<size_t>(i)]) outer[i] = 0;
            else inner[i] = 0;
        }
        auto [it, unused] = groups.try_emplace(outer.e, Polynomial::zero(ring));
        it->second = it->second + Polynomial::from_monomial(ring, inner, term.coeff);
    }

    Polynomial a = Polynomial::zero(ring), b = Polynomial::zero(ring);
    for (const auto& [outer_e, c] : groups) {
        // solve c = p*u + q*v with p, q in the base variables of bounded degree
        long du = u.degree(), dv = v.degree(), dc = c.degree();
        std::vector<Monomial> pm, qm;
        auto collect = [&](long dmax, std::vector<Monomial>& out) {
            std::function<void(int, Monomial, long)> rec = [&](int var, Monomial m,
                                                               long rem) {
                if (var == ring->nvars()) {
                    out.push_back(m);
                    return;
                }
                if (!base[static_cast<size_t>(var)]) {
                    rec(var + 1, m, rem);
                    return;
                }
                for (int e = 0; e * ring->weight(var) <= rem; ++e) {
                    m[var] = e;
                    rec(var + 1, m, rem - e * ring->weight(var));
                }
                m[var] = 0;
            };
            if (dmax >= 0) rec(0, Monomial::one(ring->nvars()), dmax);
        };
        collect(dc - du, pm);
        collect(dc - dv, qm);
        // monomial index over the base variables up to degree dc
        std::map<std::vector<int>, size_t> row_of;
        auto row_index = [&](const Monomial& m) {
            auto [it, fresh] = row_of.try_emplace(m.e, row_of.size());
            (void)fresh;
            return it->second;
        };
        std::vector<std::tuple<size_t, size_t, Rational>> entries;
        size_t coln = pm.size() + qm.size();
        for (size_t j = 0; j < pm.size(); ++j)
            for (const auto& term : u.terms())
                entries.emplace_back(row_index(pm[j] * term.mono), j, term.coeff);
        for (size_t j = 0; j < qm.size(); ++j)
            for (const auto& term : v.terms())
                entries.emplace_back(row_index(qm[j] * term.mono), pm.size() + j,
                                     term.coeff);
        std::vector<Rational> rhs_vec(row_of.size(), Rational(0));
        for (const auto& term : c.terms()) {
            auto it = row_of.find(term.mono.e);
            if (it == row_of.end())
                throw MembershipError("form does not lie in the content pair");
            rhs_vec[it->second] = term.coeff;
        }
        RationalMatrix M(row_of.size(), coln + 1);
        for (const auto& [r, cc, val] : entries) M.at(r, cc) += val;
        for (size_t r = 0; r < rhs_vec.size(); ++r) M.at(r, coln) = rhs_vec[r];
        std::vector<size_t> pivots = rref(M);
        // inconsistent iff a pivot lands in the rhs column
        for (size_t p : pivots)
            if (p == coln)
                throw MembershipError("form does not lie in the content pair");
        std::vector<Rational> sol(coln, Rational(0));
        for (size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = M.at(r, coln);
        Polynomial pc = Polynomial::zero(ring), qc = Polynomial::zero(ring);
        for (size_t j = 0; j < pm.size(); ++j)
            if (sol[j] != 0)
                pc = pc + Polynomial::from_monomial(ring, pm[j], sol[j]);
        for (size_t j = 0; j < qm.size(); ++j)
            if (sol[pm.size() + j] != 0)
                qc = qc + Polynomial::from_monomial(ring, qm[j], sol[pm.size() + j]);
        Polynomial outer = Polynomial::from_monomial(ring, Monomial(outer_e));
        a = a + outer * pc;
        b = b + outer * qc;
    }
    if (!(a * u + b * v == f))
        throw Error("internal: content split failed to certify");
    return {a, b};
}

}  // namespace

SylvesterForm basic_sylvester(const Polynomial& f, const Polynomial& g,
                              const Polynomial& u, const Polynomial& v) {
    const RingPtr& ring = f.ring();
    if (!g.ring()->same_order(*ring))
        throw RingMismatchError("basic_sylvester operands in different rings");
    Polynomial uu = u.ring()->same_order(*ring) ? u : u.map_to(ring);
    Polynomial vv = v.ring()->same_order(*ring) ? v : v.map_to(ring);
    std::pair<Polynomial, Polynomial> fs, gs;
    if (uu.is_monomial() && vv.is_monomial() && uu.leading_coeff() == 1 &&
        vv.leading_coeff() == 1) {
        fs = monomial_split(f, uu.leading_monomial(), vv.leading_monomial());
        gs = monomial_split(g, uu.leading_monomial(), vv.leading_monomial());
    } else {
        fs = general_split(f, uu, vv);
        gs = general_split(g, uu, vv);
    }
    SylvesterForm out;
    out.form = fs.first * gs.second - fs.second * gs.first;
    std::vector<bool> mask = support_mask(uu, vv);
    out.deg_st = masked_degree(out.form, mask, true);
    out.deg_T = masked_degree(out.form, mask, false);
    out.provenance = "det(.,.)_(" + uu.to_string() + "," + vv.to_string() + ")";
    return out;
}

// ------------------------------------------------------------------- schemes

namespace {

Polynomial to_biform(const RingPtr& biring, const std::array<Polynomial, 3>& col) {
    Polynomial acc = Polynomial::zero(biring);
    for (int i = 0; i < 3; ++i) {
        int Ti = biring->var_index("T" + std::to_string(i + 1));
        acc = acc + col[static_cast<size_t>(i)].map_to(biring) *
                        Polynomial::variable(biring, Ti);
    }
    return acc;
}

Polynomial drop_st(const Polynomial& p) {
    // move an (s,t)-free biform into k[T1,T2,T3]
    RingPtr tring = PolyRing::make({"T1", "T2", "T3"});
    return p.map_to(tring);
}

Polynomial normalize_equation(const Polynomial& F) {
    Polynomial out = F.primitive();
    return out;
}

void check_vanishes(const Parametrization& P, const Polynomial& form,
                    const char* what) {
    if (!P.substitute_forms(form).is_zero())
        throw Error(std::string("internal: ") + what +
                    " does not vanish under substitution");
}

EliminationResult package_result(const Parametrization& P, const Polynomial& D_T,
                                 std::vector<SylvesterForm> forms) {
    // extract D = scale * F^power using the resultant oracle
    EliminationResult out;
    out.raw = D_T;
    out.forms = std::move(forms);
    Polynomial oracle = resultant_oracle(P);  // squarefree, vanishing
    Polynomial F = poly_gcd(oracle.map_to(D_T.ring()), D_T);
    auto [k, c] = extract_power(D_T, F);
    if (k == 0)
        throw Error("internal: oracle factor does not divide the determinant");
    out.equation = normalize_equation(F);
    // re-express the scale against the normalized equation
    auto [k2, c2] = extract_power(D_T, out.equation);
    out.power = k2;
    out.scale = c2;
    out.edeg = static_cast<unsigned>(out.equation.degree());
    out.birational = out.edeg == P.degree();
    RingPtr biring = P.biform_ring();
    check_vanishes(P, out.equation.map_to(biring), "elimination equation");
    check_vanishes(P, D_T.map_to(biring), "scheme determinant");
    return out;
}

}  // namespace

EliminationResult elimination_chain_mu1(const Parametrization& P) {
    MuBasis mb = mu_basis(P);
    if (mb.mu != 1)
        throw SchemeNotCoveredError("mu = 1 chain needs a degree-1 syzygy");
    const unsigned n = P.degree();
    RingPtr biring = P.biform_ring();  // base variables first, then T1..T3
    Polynomial s = Polynomial::variable(biring, 0);
    Polynomial t = Polynomial::variable(biring, 1);
    Polynomial f = to_biform(biring, mb.column(0));
    Polynomial g = to_biform(biring, mb.column(1));
    check_vanishes(P, f, "syzygy form f");
    check_vanishes(P, g, "syzygy form g");

    std::vector<SylvesterForm> forms;
    SylvesterForm h = basic_sylvester(f, g, s, t);
    h.provenance = "h1 = det(f,g)_(s,t)";
    check_vanishes(P, h.form, "chain form");
    forms.push_back(h);
    for (unsigned i = 2; i <= n - 1; ++i) {
        h = basic_sylvester(f, forms.back().form, s, t);
        h.provenance = "h" + std::to_string(i) + " = det(f,h" +
                       std::to_string(i - 1) + ")_(s,t)";
        if (h.form.is_zero())
            throw DegenerateInputError("chain collapsed to zero");
        check_vanishes(P, h.form, "chain form");
        forms.push_back(h);
    }
    Polynomial final_form = forms.back().form;
    std::vector<bool> st_mask(static_cast<size_t>(biring->nvars()), false);
    st_mask[0] = st_mask[1] = true;
    if (masked_degree(final_form, st_mask, true) != 0)
        throw Error("internal: chain did not eliminate s,t");
    return package_result(P, drop_st(final_form), std::move(forms));
}

EliminationResult balanced_scheme(const Parametrization& P) {
    MuBasis mb = mu_basis(P);
    const unsigned n = P.degree();
    const unsigned p = n / 2;
    if (mb.mu != p || p == 0)
        throw SchemeNotCoveredError(
            "scheme not covered: balanced/odd determinant needs mu = floor(n/2)");
    const bool odd = (n % 2) == 1;
    RingPtr biring = P.biform_ring();
    Polynomial f = to_biform(biring, mb.column(0));
    Polynomial g = to_biform(biring, mb.column(1));
    check_vanishes(P, f, "syzygy form f");
    check_vanishes(P, g, "syzygy form g");
    const int si = 0, ti = 1;  // base variables lead in the biform ring

    std::vector<SylvesterForm> forms;
    for (unsigned i = p; i >= 1; --i) {  // content pairs (s^i, t^{p+1-i})
        Monomial su = Monomial::one(biring->nvars());
        su[si] = static_cast<int>(i);
        Monomial tv = Monomial::one(biring->nvars());
        tv[ti] = static_cast<int>(p + 1 - i);
        SylvesterForm h = basic_sylvester(
            f, g, Polynomial::from_monomial(biring, su),
            Polynomial::from_monomial(biring, tv));
        h.provenance = "det(f,g)_(s^" + std::to_string(i) + ",t^" +
                       std::to_string(p + 1 - i) + ")";
        if (h.form.is_zero())
            throw DegenerateInputError(
                "zero Sylvester determinant: content hypothesis fails");
        check_vanishes(P, h.form, "sylvester form");
        forms.push_back(std::move(h));
    }

    // assemble [columns] = [s^k .. t^k] A with k = p-1 (even) or p (odd)
    std::vector<Polynomial> columns;
    if (odd) columns.push_back(f);
    for (const auto& h : forms) columns.push_back(h.form);
    const unsigned k = odd ? p : p - 1;
    const size_t size = k + 1;
    if (columns.size() != size)
        throw Error("internal: scheme matrix is not square");
    RingPtr tring = PolyRing::make({"T1", "T2", "T3"});
    std::vector<std::vector<Polynomial>> A(
        size, std::vector<Polynomial>(size, Polynomial::zero(tring)));
    for (size_t col = 0; col < size; ++col) {
        for (const auto& term : columns[col].terms()) {
            int se = term.mono[si], te = term.mono[ti];
            if (se + te != static_cast<int>(k))
                throw Error("internal: scheme column has wrong s,t degree");
            Monomial T = term.mono;
            T[si] = 0;
            T[ti] = 0;
            Monomial Tm = Monomial::one(3);
            Tm[0] = T[biring->var_index("T1")];
            Tm[1] = T[biring->var_index("T2")];
            Tm[2] = T[biring->var_index("T3")];
            // rows ordered by descending s-power: row = t-exponent
            A[static_cast<size_t>(te)][col] =
                A[static_cast<size_t>(te)][col] +
                Polynomial::from_monomial(tring, Tm, term.coeff);
        }
    }
    Polynomial D = poly_det(tring, A);
    if (D.is_zero())
        throw DegenerateInputError(
            "zero scheme determinant: content hypothesis fails");
    return package_result(P, D, std::move(forms));
}

// ------------------------------------------------------------------ resultant

Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, int var) {
    const RingPtr& ring = p.ring();
    const int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp == 0 && dq == 0) return Polynomial::constant(ring, 1);
    if (dp == 0) return p.pow(static_cast<unsigned long>(dq));
    if (dq == 0) return q.pow(static_cast<unsigned long>(dp));
    auto coeffs = [&](const Polynomial& f, int deg) {
        std::vector<Polynomial> c(static_cast<size_t>(deg) + 1,
                                  Polynomial::zero(ring));
        for (const auto& term : f.terms()) {
            Monomial m = term.mono;
            int e = m[var];
            m[var] = 0;
            c[static_cast<size_t>(e)] =
                c[static_cast<size_t>(e)] + Polynomial::from_monomial(ring, m, term.coeff);
        }
        return c;
    };
    std::vector<Polynomial> pc = coeffs(p, dp), qc = coeffs(q, dq);
    const size_t size = static_cast<size_t>(dp + dq);
    std::vector<std::vector<Polynomial>> M(
        size, std::vector<Polynomial>(size, Polynomial::zero(ring)));
    for (int row = 0; row < dq; ++row)
        for (int j = 0; j <= dp; ++j)
            M[static_cast<size_t>(row)][static_cast<size_t>(row + j)] =
                pc[static_cast<size_t>(dp - j)];
    for (int row = 0; row < dp; ++row)
        for (int j = 0; j <= dq; ++j)
            M[static_cast<size_t>(dq + row)][static_cast<size_t>(row + j)] =
                qc[static_cast<size_t>(dq - j)];
    return poly_det(ring, M);
}

Polynomial resultant_oracle(const Parametrization& P) {
    RingPtr biring = P.biform_ring();
    const int si = 0, ti = 1;
    auto lift = [&](int i) { return P.forms()[static_cast<size_t>(i)].map_to(biring); };
    Polynomial T1 = Polynomial::variable(biring, biring->var_index("T1"));
    Polynomial T2 = Polynomial::variable(biring, biring->var_index("T2"));
    Polynomial T3 = Polynomial::variable(biring, biring->var_index("T3"));
    Polynomial p1 = T1 * lift(1) - T2 * lift(0);
    Polynomial p2 = T1 * lift(2) - T3 * lift(0);
    // dehomogenize at s = 1
    std::vector<Polynomial> images;
    for (int i = 0; i < biring->nvars(); ++i)
        images.push_back(i == si ? Polynomial::constant(biring, 1)
                                 : Polynomial::variable(biring, i));
    p1 = p1.substitute(images);
    p2 = p2.substitute(images);
    Polynomial res = sylvester_resultant(p1, p2, ti);
    if (res.is_zero())
        throw DegenerateInputError("identically zero resultant");
    // strip the monomial content in T1
    int t1 = biring->var_index("T1");
    int minexp = res.degree_in(t1);
    for (const auto& term : res.terms()) minexp = std::min(minexp, term.mono[t1]);
    if (minexp > 0) {
        Monomial m = Monomial::one(biring->nvars());
        m[t1] = minexp;
        res = res.exact_div(Polynomial::from_monomial(biring, m));
    }
    Polynomial sq = squarefree_part(res.map_to(PolyRing::make({"T1", "T2", "T3"})));
    check_vanishes(P, sq.map_to(biring), "resultant oracle");
    return sq;
}

// --------------------------------------------------- secondary elimination

SecElimReport secondary_elim_degree(const Ideal& J, const Polynomial& a) {
    const RingPtr& ring = J.ring();
    const TermOrder& ord = ring->order();
    if (static_cast<int>(J.gens().size()) != ring->nvars())
        throw Error("secondary_elim_degree: J needs dim-many generators");
    StaircaseCount scJ = artinian_length(J, ord);
    if (!scJ.finite)
        throw DegenerateInputError("J is not a regular sequence (not Artinian)");
    if (ideal_contains(J, a, ord))
        throw DegenerateInputError("a lies in J: the colon is the unit ideal");
    SecElimReport rep{0, 0, {}, Ideal(ring)};
    rep.colon_ideal = colon(J, a);
    rep.colon_staircase = artinian_length(rep.colon_ideal, ord);
    if (!rep.colon_staircase.finite)
        throw Error("internal: J:a is not Artinian");
    rep.socle = static_cast<long>(rep.colon_staircase.per_degree.size()) - 1;
    rep.r = static_cast<unsigned>(rep.socle + 1);
    return rep;
}

SecElimReport secondary_elim_degree(const Parametrization& P) {
    const RingPtr& ring = P.ring();
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            Ideal J(ring, {P.forms()[static_cast<size_t>(a)],
                           P.forms()[static_cast<size_t>(b)]});
            StaircaseCount sc = artinian_length(J, ring->order());
            if (!sc.finite) continue;
            int c = 3 - a - b;
            return secondary_elim_degree(J, P.forms()[static_cast<size_t>(c)]);
        }
    throw DegenerateInputError("no regular-sequence pair among the forms");
}

}  // namespace reesdeg
