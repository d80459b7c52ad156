#include "reesdeg/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace reesdeg {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<std::set<int>> facets,
                                     bool is_void)
    : vertices_(std::move(vertices)), void_(is_void) {
    if (void_ && !facets.empty())
        throw Error("void complex has no faces");
    for (const auto& f : facets)
        for (int v : f)
            if (v < 0 || v >= static_cast<int>(vertices_.size()))
                throw Error("facet vertex out of range");
    // keep inclusion-maximal faces only
    for (const auto& f : facets) {
        bool contained = false;
        for (const auto& g : facets)
            if (&f != &g && f != g &&
                std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        if (!contained &&
            std::find(facets_.begin(), facets_.end(), f) == facets_.end())
            facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(),
              [](const std::set<int>& a, const std::set<int>& b) {
                  if (a.size() != b.size()) return a.size() > b.size();
                  return a < b;
              });
    // the complex {empty face} keeps its unique maximal face
    if (!void_ && facets_.empty()) facets_.push_back({});
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::set<int>> SimplicialComplex::faces() const {
    std::set<std::set<int>> all;
    if (void_) return {};
    all.insert({});
    for (const auto& facet : facets_) {
        std::vector<int> vs(facet.begin(), facet.end());
        const size_t n = vs.size();
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            std::set<int> face;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) face.insert(vs[i]);
            all.insert(std::move(face));
        }
    }
    return {all.begin(), all.end()};
}

bool SimplicialComplex::has_face(const std::set<int>& f) const {
    if (void_) return false;
    if (f.empty()) return true;
    for (const auto& facet : facets_)
        if (std::includes(facet.begin(), facet.end(), f.begin(), f.end()))
            return true;
    return false;
}

std::string SimplicialComplex::to_string() const {
    if (void_) return "void";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : facets_) {
        os << (first ? "{" : ", {");
        bool v_first = true;
        for (int v : f) {
            if (!v_first) os << ",";
            os << vertices_[v];
            v_first = false;
        }
        os << "}";
        first = false;
    }
    if (facets_.empty()) os << "{}";
    return os.str();
}

MonomialIdeal sr_ideal(const SimplicialComplex& K) {
    const auto& verts = K.vertices();
    RingPtr ring = PolyRing::make(verts);
    if (K.is_void())
        return MonomialIdeal(ring, {Monomial::one(ring->nvars())});
    const int n = ring->nvars();
    // minimal non-faces: S not a face with every proper subset a face
    std::vector<Monomial> gens;
    std::vector<std::set<int>> nonface_minimal;
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) s.insert(i);
        if (K.has_face(s)) continue;
        bool minimal = true;
        for (int v : s) {
            std::set<int> sub = s;
            sub.erase(v);
            if (!K.has_face(sub)) {
                minimal = false;
                break;
            }
        }
        if (minimal) nonface_minimal.push_back(s);
    }
    for (const auto& s : nonface_minimal) {
        Monomial m = Monomial::one(n);
        for (int v : s) m[v] = 1;
        gens.push_back(m);
    }
    return MonomialIdeal(ring, std::move(gens));
}

SimplicialComplex sr_complex(const MonomialIdeal& I) {
    if (!I.is_squarefree())
        throw Error("sr_complex requires a squarefree monomial ideal");
    const RingPtr& ring = I.ring();
    const int n = ring->nvars();
    if (I.is_unit()) return SimplicialComplex(ring->var_names(), {}, true);
    // faces = subsets whose product avoids I; facets = maximal such
    std::vector<std::set<int>> faces;
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        Monomial m = Monomial::one(n);
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) {
                m[i] = 1;
                s.insert(i);
            }
        if (!I.contains(m)) faces.push_back(std::move(s));
    }
    return SimplicialComplex(ring->var_names(), std::move(faces));
}

FHVectors fh_vectors(const SimplicialComplex& K) {
    FHVectors out;
    if (K.is_void()) {
        out.chi = 0;
        return out;
    }
    const int d = K.dimension() + 1;  // Krull dimension of k[K]
    std::vector<Integer> f(static_cast<size_t>(std::max(d, 0)), Integer(0));
    for (const auto& face : K.faces()) {
        if (face.empty()) continue;
        f[face.size() - 1] += 1;
    }
    out.f = f;
    out.chi = 0;
    for (size_t i = 0; i < f.size(); ++i)
        out.chi += (i % 2) ? -f[i] : f[i];
    // h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_{i-1}, with f_{-1} = 1
    out.h.assign(static_cast<size_t>(d) + 1, Integer(0));
    for (int k = 0; k <= d; ++k) {
        Integer s(0);
        for (int i = 0; i <= k; ++i) {
            Integer fi = (i == 0) ? Integer(1) : f[static_cast<size_t>(i - 1)];
            Integer term = binomial(d - i, k - i) * fi;
            if ((k - i) % 2) s -= term;
            else s += term;
        }
        out.h[static_cast<size_t>(k)] = s;
    }
    while (!out.h.empty() && out.h.back() == 0) out.h.pop_back();
    return out;
}

HilbertSeries sr_series(const SimplicialComplex& K) {
    if (K.is_void()) return HilbertSeries{{}, 0};
    const int d = K.dimension() + 1;
    // sum over faces of t^{|F|}/(1-t)^{|F|}, over the common denominator
    // (1-t)^d; numerator coefficients accumulate from the binomial expansion
    std::vector<Integer> num(static_cast<size_t>(d) + 1, Integer(0));
    for (const auto& face : K.faces()) {
        const int k = static_cast<int>(face.size());
        // t^k (1-t)^{d-k}
        for (int i = 0; i <= d - k; ++i) {
            Integer c = binomial(d - k, i);
            if (i % 2) c = -c;
            num[static_cast<size_t>(k + i)] += c;
        }
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.empty()) return HilbertSeries{{}, 0};
    // cancel (1-t) factors so that h(1) != 0
    int dim = d;
    auto at_1 = [&](const std::vector<Integer>& p) {
        Integer s(0);
        for (const auto& c : p) s += c;
        return s;
    };
    while (!num.empty() && at_1(num) == 0) {
        std::vector<Integer> q(num.size() - 1, Integer(0));
        Integer carry(0);
        for (size_t i = 0; i + 1 < num.size(); ++i) {
            carry += num[i];
            q[i] = carry;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        num = std::move(q);
        --dim;
    }
    return HilbertSeries{num, dim};
}

SRDegrees sr_degrees(const SimplicialComplex& K) {
    SRDegrees out;
    const int d = K.dimension() + 1;
    FHVectors fh = fh_vectors(K);

    out.facets_total = static_cast<long>(K.facets().size());
    out.facets_top = 0;
    out.f_prime = 0;
    for (const auto& f : K.facets()) {
        if (static_cast<int>(f.size()) == d) out.facets_top += 1;
        if (static_cast<int>(f.size()) == d - 1) out.f_prime += 1;
    }

    // tn(k[K]) = d f_{d-1} - f_{d-2} + f'_{d-2}, with f_{-1} = 1
    Integer f_top = d >= 1 ? fh.f[static_cast<size_t>(d - 1)] : Integer(0);
    Integer f_below = d >= 2 ? fh.f[static_cast<size_t>(d - 2)] : Integer(1);
    out.tn = d >= 1 ? Integer(d) * f_top - f_below + out.f_prime : Integer(0);

    MonomialIdeal I = sr_ideal(K);
    out.report = degree_report(I);

    // cross-checks against the monomial-ideal route
    HilbertSeries H = sr_series(K);
    if (!(H == hilbert_series_monomial(I)))
        throw Error("internal: combinatorial series disagrees with sr_ideal");
    if (out.report.deg != out.facets_top)
        throw Error("internal: deg does not count top facets");
    if (out.report.adeg != out.facets_total ||
        out.report.gdeg != out.facets_total)
        throw Error("internal: adeg/gdeg do not count facets");
    if (d >= 1 && !(H.dim == 0)) {
        Integer tn2 = H.taylor_at_1(1) + out.f_prime;
        if (tn2 != out.tn)
            throw Error("internal: tn formula disagrees with h'(1) + f'");
        TrackingReport tr = tracking_number(I);
        if (tr.tn != out.tn)
            throw Error("internal: tn formula disagrees with the module route");
    }
    return out;
}

}  // namespace reesdeg
