#include "icosal/params.hpp"

#include "icosal/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace icosal {

UnramifiedParam::UnramifiedParam(std::vector<Cyclo> inverse_roots)
    : roots_(std::move(inverse_roots)), central_(1) {
    if (roots_.empty())
        throw std::domain_error("UnramifiedParam: at least one inverse root required");
    for (const Cyclo& r : roots_) {
        if (r.is_zero()) throw std::domain_error("UnramifiedParam: inverse roots must be nonzero");
        central_ *= r;
    }
    std::sort(roots_.begin(), roots_.end());
}

UnramifiedParam sym_power(const UnramifiedParam& p, long m) {
    if (p.dimension() != 2)
        throw std::domain_error("sym_power: defined for 2-dimensional parameters");
    if (m < 0) throw std::domain_error("sym_power: exponent must be nonnegative");
    const Cyclo& a = p.inverse_roots()[0];
    const Cyclo& b = p.inverse_roots()[1];
    std::vector<Cyclo> pow_a{Cyclo(1)}, pow_b{Cyclo(1)};
    for (long j = 1; j <= m; ++j) {
        pow_a.push_back(pow_a.back() * a);
        pow_b.push_back(pow_b.back() * b);
    }
    std::vector<Cyclo> roots;
    roots.reserve(m + 1);
    for (long j = 0; j <= m; ++j) roots.push_back(pow_a[j] * pow_b[m - j]);
    return UnramifiedParam(std::move(roots));
}

UnramifiedParam adjoint(const UnramifiedParam& p) {
    if (p.dimension() != 2)
        throw std::domain_error("adjoint: defined for 2-dimensional parameters");
    const Cyclo& a = p.inverse_roots()[0];
    const Cyclo& b = p.inverse_roots()[1];
    return UnramifiedParam({a / b, Cyclo(1), b / a});
}

UnramifiedParam tensor(const UnramifiedParam& a, const UnramifiedParam& b) {
    std::vector<Cyclo> roots;
    roots.reserve(a.inverse_roots().size() * b.inverse_roots().size());
    for (const Cyclo& x : a.inverse_roots())
        for (const Cyclo& y : b.inverse_roots()) roots.push_back(x * y);
    return UnramifiedParam(std::move(roots));
}

UnramifiedParam twist(const UnramifiedParam& p, const Cyclo& chi) {
    if (chi.is_zero()) throw std::domain_error("twist: twisting value must be nonzero");
    std::vector<Cyclo> roots;
    roots.reserve(p.inverse_roots().size());
    for (const Cyclo& x : p.inverse_roots()) roots.push_back(x * chi);
    return UnramifiedParam(std::move(roots));
}

UnramifiedParam isobaric_sum(const UnramifiedParam& a, const UnramifiedParam& b) {
    std::vector<Cyclo> roots = a.inverse_roots();
    roots.insert(roots.end(), b.inverse_roots().begin(), b.inverse_roots().end());
    return UnramifiedParam(std::move(roots));
}

UnramifiedParam dual(const UnramifiedParam& p) {
    std::vector<Cyclo> roots;
    roots.reserve(p.inverse_roots().size());
    for (const Cyclo& x : p.inverse_roots()) roots.push_back(x.inverse());
    return UnramifiedParam(std::move(roots));
}

UnramifiedParam ext_square(const UnramifiedParam& p) {
    const auto& r = p.inverse_roots();
    if (r.size() < 2)
        throw std::domain_error("ext_square: needs dimension at least 2");
    std::vector<Cyclo> roots;
    roots.reserve(r.size() * (r.size() - 1) / 2);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) roots.push_back(r[i] * r[j]);
    return UnramifiedParam(std::move(roots));
}

bool multiset_equal(const UnramifiedParam& a, const UnramifiedParam& b) { return a == b; }

// ---------------------------------------------------------------------------

SteinbergParam::SteinbergParam(std::vector<SteinbergBlock> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::domain_error("SteinbergParam: at least one block required");
    for (const auto& b : blocks_)
        if (b.size < 1) throw std::domain_error("SteinbergParam: block sizes must be positive");
    std::sort(blocks_.begin(), blocks_.end(), [](const SteinbergBlock& x, const SteinbergBlock& y) {
        return x.lambda_exp != y.lambda_exp ? x.lambda_exp < y.lambda_exp : x.size < y.size;
    });
}

long SteinbergParam::dimension() const {
    long total = 0;
    for (const auto& b : blocks_) total += b.size;
    return total;
}

std::vector<long> SteinbergParam::block_sizes() const {
    std::vector<long> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(b.size);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

SteinbergParam steinberg_standard(long lambda_exp) {
    return SteinbergParam({SteinbergBlock{lambda_exp, 2}});
}

namespace {
const SteinbergBlock& single_2block(const SteinbergParam& base, const char* who) {
    if (base.blocks().size() != 1 || base.blocks()[0].size != 2)
        throw std::domain_error(std::string(who) + ": base must be a single 2-dimensional block");
    return base.blocks()[0];
}
} // namespace

SteinbergParam steinberg_sym(long m, const SteinbergParam& base) {
    if (m < 1) throw std::domain_error("steinberg_sym: exponent must be positive");
    const SteinbergBlock& b = single_2block(base, "steinberg_sym");
    return SteinbergParam({SteinbergBlock{m * b.lambda_exp, m + 1}});
}

SteinbergParam steinberg_adjoint(const SteinbergParam& base) {
    single_2block(base, "steinberg_adjoint");
    // Ad of a twisted special block kills the twist: the 3-dimensional
    // exponent-0 block.
    return SteinbergParam({SteinbergBlock{0, 3}});
}

SteinbergParam steinberg_tensor(const SteinbergParam& a, const SteinbergParam& b) {
    std::vector<SteinbergBlock> out;
    for (const auto& x : a.blocks())
        for (const auto& y : b.blocks()) {
            const long pieces = std::min(x.size, y.size);
            for (long j = 0; j < pieces; ++j)
                out.push_back(SteinbergBlock{x.lambda_exp + y.lambda_exp, x.size + y.size - 1 - 2 * j});
        }
    return SteinbergParam(std::move(out));
}

SteinbergParam steinberg_twist(const SteinbergParam& p, long lambda_exp) {
    std::vector<SteinbergBlock> out = p.blocks();
    for (auto& b : out) b.lambda_exp += lambda_exp;
    return SteinbergParam(std::move(out));
}

SteinbergParam steinberg_isobaric_sum(const SteinbergParam& a, const SteinbergParam& b) {
    std::vector<SteinbergBlock> out = a.blocks();
    out.insert(out.end(), b.blocks().begin(), b.blocks().end());
    return SteinbergParam(std::move(out));
}

// ---------------------------------------------------------------------------

ArchParam::ArchParam(std::vector<ArchChar> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw std::domain_error("ArchParam: at least one character required");
    std::sort(exponents_.begin(), exponents_.end(), [](const ArchChar& x, const ArchChar& y) {
        return x.m != y.m ? x.m < y.m : x.two_s < y.two_s;
    });
}

// ---------------------------------------------------------------------------

AbstractCharacter::AbstractCharacter(long modulus_in, long exponent_in, bool ramified_in)
    : modulus(modulus_in), exponent(0), ramified(ramified_in) {
    if (modulus < 1) throw std::domain_error("AbstractCharacter: modulus must be positive");
    exponent = mod_norm(exponent_in, modulus);
}

long AbstractCharacter::order() const { return modulus / std::gcd(modulus, exponent); }

AbstractCharacter char_mul(const AbstractCharacter& a, const AbstractCharacter& b) {
    const long big = lcm_long(a.modulus, b.modulus);
    return AbstractCharacter(big,
                             a.exponent * (big / a.modulus) + b.exponent * (big / b.modulus),
                             a.ramified || b.ramified);
}

AbstractCharacter char_pow(const AbstractCharacter& a, long e) {
    const long r = mod_norm(e, a.modulus);
    return AbstractCharacter(a.modulus, a.exponent * r, a.ramified);
}

} // namespace icosal
