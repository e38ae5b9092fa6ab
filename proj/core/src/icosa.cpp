#include "icosal/icosa.hpp"

#include "icosal/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace icosal {

namespace {

struct MatrixLess {
    bool operator()(const ExactMatrix2& l, const ExactMatrix2& r) const {
        return matrix_less(l, r);
    }
};

using IndexMap = std::map<ExactMatrix2, std::size_t, MatrixLess>;

ExactMatrix2 identity_matrix() {
    return {{Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(1)}};
}

ExactMatrix2 from_quaternion(const Cyclo& a, const Cyclo& b, const Cyclo& c,
                             const Cyclo& d) {
    const Cyclo im = Cyclo::root_of_unity(4, 1);
    return {{a + b * im, c + d * im, -c + d * im, a - b * im}};
}

// All 12 even permutations of {0, 1, 2, 3}.
std::vector<std::array<int, 4>> even_permutations() {
    std::array<int, 4> p{0, 1, 2, 3};
    std::vector<std::array<int, 4>> evens;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        if (inversions % 2 == 0) evens.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return evens;
}

long element_order(const ExactMatrix2& m) {
    const ExactMatrix2 id = identity_matrix();
    ExactMatrix2 acc = m;
    for (long n = 1; n <= 12; ++n) {
        if (acc == id) return n;
        acc = acc * m;
    }
    throw std::logic_error("element_order: order exceeds the group bound");
}

} // namespace

ExactMatrix2 ExactMatrix2::operator*(const ExactMatrix2& rhs) const {
    return {{e[0] * rhs.e[0] + e[1] * rhs.e[2], e[0] * rhs.e[1] + e[1] * rhs.e[3],
             e[2] * rhs.e[0] + e[3] * rhs.e[2], e[2] * rhs.e[1] + e[3] * rhs.e[3]}};
}

Cyclo ExactMatrix2::trace() const { return e[0] + e[3]; }

Cyclo ExactMatrix2::det() const { return e[0] * e[3] - e[1] * e[2]; }

ExactMatrix2 ExactMatrix2::inverse_det1() const {
    return {{e[3], -e[1], -e[2], e[0]}};
}

bool matrix_less(const ExactMatrix2& lhs, const ExactMatrix2& rhs) {
    for (std::size_t i = 0; i < 4; ++i) {
        const int c = Cyclo::compare(lhs.e[i], rhs.e[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

GroupData build_group() {
    const Cyclo zero(0);
    const Cyclo one(1);
    const Cyclo half(Rational(1, 2));
    const Cyclo phi = one + Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(5, 4);
    const Cyclo inv_phi = phi - one;  // 1/phi for the golden ratio

    std::vector<std::array<Cyclo, 4>> quats;
    quats.reserve(120);

    // 8 units +-1, +-i, +-j, +-k.
    for (int slot = 0; slot < 4; ++slot)
        for (int sign : {1, -1}) {
            std::array<Cyclo, 4> q{zero, zero, zero, zero};
            q[static_cast<std::size_t>(slot)] = Cyclo(sign);
            quats.push_back(q);
        }

    // 16 half-integer units (+-1 +- i +- j +- k) / 2.
    for (int s0 : {1, -1})
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1})
                    quats.push_back({Cyclo(s0) * half, Cyclo(s1) * half,
                                     Cyclo(s2) * half, Cyclo(s3) * half});

    // 96 even permutations of (0, +-1, +-1/phi, +-phi) / 2.
    const std::array<Cyclo, 4> base{zero, one, inv_phi, phi};
    for (const auto& perm : even_permutations())
        for (int s1 : {1, -1})
            for (int s2 : {1, -1})
                for (int s3 : {1, -1}) {
                    const std::array<Cyclo, 4> signs{one, Cyclo(s1), Cyclo(s2), Cyclo(s3)};
                    std::array<Cyclo, 4> q;
                    for (std::size_t slot = 0; slot < 4; ++slot) {
                        const auto src = static_cast<std::size_t>(perm[slot]);
                        q[slot] = base[src] * signs[src] * half;
                    }
                    quats.push_back(q);
                }

    GroupData g;
    g.elements.reserve(120);
    IndexMap index;
    for (const auto& q : quats) {
        const ExactMatrix2 m = from_quaternion(q[0], q[1], q[2], q[3]);
        if (m.det() != one) throw std::logic_error("build_group: non-unit determinant");
        if (!index.emplace(m, g.elements.size()).second)
            throw std::logic_error("build_group: duplicate element");
        g.elements.push_back(m);
    }
    if (g.elements.size() != 120) throw std::logic_error("build_group: wrong element count");

    for (const ExactMatrix2& x : g.elements) {
        if (!index.count(x.inverse_det1()))
            throw std::logic_error("build_group: inverse missing");
        for (const ExactMatrix2& y : g.elements)
            if (!index.count(x * y)) throw std::logic_error("build_group: closure failure");
    }
    return g;
}

GroupData conjugacy_classes(GroupData g) {
    IndexMap index;
    for (std::size_t i = 0; i < g.elements.size(); ++i) index.emplace(g.elements[i], i);

    std::vector<bool> assigned(g.elements.size(), false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < g.elements.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<std::size_t> orbit;
        for (const ExactMatrix2& h : g.elements) {
            const std::size_t j = index.at(h * g.elements[i] * h.inverse_det1());
            if (!assigned[j]) {
                assigned[j] = true;
                orbit.push_back(j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }

    struct ClassKey {
        long order;
        long size;
        Cyclo trace;
        std::vector<std::size_t> members;
    };
    std::vector<ClassKey> keyed;
    keyed.reserve(classes.size());
    for (auto& cls : classes) {
        const ExactMatrix2& rep = g.elements[cls.front()];
        keyed.push_back({element_order(rep), static_cast<long>(cls.size()), rep.trace(),
                         std::move(cls)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const ClassKey& a, const ClassKey& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.size != b.size) return a.size < b.size;
        return Cyclo::compare(a.trace, b.trace) < 0;
    });

    g.classes.clear();
    g.class_orders.clear();
    g.class_sizes.clear();
    g.class_traces.clear();
    for (auto& k : keyed) {
        g.classes.push_back(std::move(k.members));
        g.class_orders.push_back(k.order);
        g.class_sizes.push_back(k.size);
        g.class_traces.push_back(k.trace);
    }
    return g;
}

CharacterVector rep_character(const GroupData& g, long automorphism_k) {
    if (automorphism_k != 1 && automorphism_k != 13)
        throw std::domain_error("rep_character: automorphism must be 1 or 13");
    CharacterVector chi;
    chi.class_sizes = g.class_sizes;
    chi.values.reserve(g.class_traces.size());
    for (const Cyclo& t : g.class_traces)
        chi.values.push_back(automorphism_k == 1 ? t : t.galois(13));
    return chi;
}

CharacterVector trivial_character(const GroupData& g) {
    CharacterVector one;
    one.class_sizes = g.class_sizes;
    one.values.assign(g.class_sizes.size(), Cyclo(1));
    return one;
}

CharacterVector sym_character(const CharacterVector& chi, const CharacterVector& det_chi,
                              long m) {
    if (m < 0) throw std::domain_error("sym_character: negative power");
    if (chi.class_sizes != det_chi.class_sizes)
        throw std::domain_error("sym_character: mismatched class structure");

    CharacterVector prev;  // s_0 = 1
    prev.class_sizes = chi.class_sizes;
    prev.values.assign(chi.values.size(), Cyclo(1));
    if (m == 0) return prev;

    CharacterVector cur = chi;  // s_1
    for (long step = 2; step <= m; ++step) {
        CharacterVector next;
        next.class_sizes = chi.class_sizes;
        next.values.reserve(chi.values.size());
        for (std::size_t i = 0; i < chi.values.size(); ++i)
            next.values.push_back(chi.values[i] * cur.values[i] -
                                  det_chi.values[i] * prev.values[i]);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

CharacterVector char_product(const CharacterVector& x, const CharacterVector& y) {
    if (x.class_sizes != y.class_sizes)
        throw std::domain_error("char_product: mismatched class structure");
    CharacterVector out;
    out.class_sizes = x.class_sizes;
    out.values.reserve(x.values.size());
    for (std::size_t i = 0; i < x.values.size(); ++i)
        out.values.push_back(x.values[i] * y.values[i]);
    return out;
}

Rational inner_product(const CharacterVector& x, const CharacterVector& y) {
    if (x.class_sizes != y.class_sizes || x.values.size() != y.values.size())
        throw std::domain_error("inner_product: mismatched class structure");
    Cyclo sum(0);
    long order = 0;
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        sum += Cyclo(x.class_sizes[i]) * x.values[i] * y.values[i].conj();
        order += x.class_sizes[i];
    }
    const Cyclo result = sum / Cyclo(order);
    if (!result.is_rational())
        throw std::logic_error("inner_product: non-rational pairing");
    return result.rational_value();
}

IcosaIdentityReport verify_icosahedral_identities(const GroupData& g) {
    const CharacterVector chi = rep_character(g, 1);
    const CharacterVector chi_prime = rep_character(g, 13);
    const CharacterVector det = trivial_character(g);

    IcosaIdentityReport rep;
    rep.sym3_identity =
        sym_character(chi, det, 3).values == sym_character(chi_prime, det, 3).values;
    rep.sym5_identity =
        sym_character(chi, det, 5).values ==
        char_product(sym_character(chi_prime, det, 2), chi).values;
    rep.conjugate_distinct = chi.values != chi_prime.values;
    rep.rho_norm = inner_product(chi, chi);
    rep.rho_prime_norm = inner_product(chi_prime, chi_prime);
    rep.cross_inner = inner_product(chi, chi_prime);
    return rep;
}

std::vector<UnramifiedParam> frobenius_params(const GroupData& g) {
    std::vector<UnramifiedParam> out;
    out.reserve(g.classes.size());
    for (std::size_t i = 0; i < g.classes.size(); ++i) {
        const long n = g.class_orders[i];
        const Cyclo& tr = g.class_traces[i];
        bool found = false;
        for (long k = 0; k < n && !found; ++k) {
            const Cyclo lam = Cyclo::root_of_unity(n, k);
            const Cyclo lam_inv = Cyclo::root_of_unity(n, mod_norm(-k, n));
            if (lam + lam_inv == tr) {
                out.push_back(UnramifiedParam({lam, lam_inv}));
                found = true;
            }
        }
        if (!found) throw std::logic_error("frobenius_params: no eigenvalue root");
    }
    return out;
}

} // namespace icosal
