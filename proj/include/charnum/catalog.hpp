#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "symfunc.hpp"

namespace charnum {

enum class Basis { s, c };

inline const char* basis_name(Basis b) { return b == Basis::s ? "s" : "c"; }

inline Basis parse_basis(const std::string& s)
{
    if (s == "s")
        return Basis::s;
    if (s == "c")
        return Basis::c;
    throw error("unknown basis '" + s + "' (expected s or c)");
}

/// Characteristic numbers of an n-dimensional variety, one entry per
/// partition of n in canonical order.
///
/// `formal` marks vectors that involve a formal negation somewhere in their
/// history, as opposed to honest varieties.
struct CharVector {
    int dim = 0;
    Basis basis = Basis::s;
    std::vector<integer> entries;
    bool formal = false;

    CharVector() : entries{1} {}
    CharVector(int n, Basis b, std::vector<integer> values, bool is_formal = false)
        : dim(n), basis(b), entries(std::move(values)), formal(is_formal)
    {
        if (n < 0)
            throw error("negative dimension");
        auto expected = enumerate_partitions(n).size();
        if (entries.size() != expected)
            throw error("dimension " + std::to_string(n) + " needs " + std::to_string(expected)
                        + " entries, got " + std::to_string(entries.size()));
    }

    static CharVector zero(int n, Basis b)
    {
        return CharVector(n, b, std::vector<integer>(enumerate_partitions(n).size(), 0));
    }

    /// The point: dimension 0, single entry 1.
    static CharVector point(Basis b = Basis::s) { return CharVector(0, b, {1}); }

    std::vector<Partition> index() const { return enumerate_partitions(dim); }

    const integer& at(const Partition& p) const { return entries[PartitionIndex(dim).position(p)]; }

    /// Entry at the one-part partition (n).
    const integer& top() const { return entries.front(); }

    bool is_zero() const
    {
        for (const auto& e : entries)
            if (e != 0)
                return false;
        return true;
    }

    /// Equality of values; provenance is ignored.
    friend bool operator==(const CharVector& a, const CharVector& b)
    {
        return a.dim == b.dim && a.basis == b.basis && a.entries == b.entries;
    }
};

/// s-numbers of CP^n: s_I evaluated at sigma_i = C(n+1, i).
inline CharVector projective_space_svec(int n)
{
    if (n < 1)
        throw error("projective space needs n >= 1");
    std::vector<integer> sigma;
    for (int i = 1; i <= n; ++i)
        sigma.push_back(binomial(n + 1, i));
    std::vector<integer> out;
    for (const auto& p : enumerate_partitions(n))
        out.push_back(eval_s(p, sigma));
    return CharVector(n, Basis::s, std::move(out));
}

/// s-numbers of a product: s_I[X1 x X2] = sum over splittings (J,K) of I of
/// s_J[X1] s_K[X2].
inline CharVector product_svec(const CharVector& v1, const CharVector& v2)
{
    if (v1.basis != Basis::s || v2.basis != Basis::s)
        throw error("product_svec needs s-basis vectors");
    const int a = v1.dim;
    const int b = v2.dim;
    const PartitionIndex i1(a), i2(b);
    std::vector<integer> out;
    for (const auto& p : enumerate_partitions(a + b)) {
        integer sum = 0;
        for (const auto& split : splittings(p, {a, b}))
            sum += v1.entries[i1.position(split[0])] * v2.entries[i2.position(split[1])];
        out.push_back(std::move(sum));
    }
    return CharVector(a + b, Basis::s, std::move(out), v1.formal || v2.formal);
}

/// Formal sum X + Y of varieties of the same dimension.
inline CharVector disjoint_union_svec(const CharVector& v1, const CharVector& v2)
{
    if (v1.dim != v2.dim)
        throw error("disjoint union of varieties of different dimensions");
    if (v1.basis != v2.basis)
        throw error("disjoint union of vectors in different bases");
    std::vector<integer> out(v1.entries.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = v1.entries[k] + v2.entries[k];
    return CharVector(v1.dim, v1.basis, std::move(out), v1.formal || v2.formal);
}

/// The variety -X with all characteristic numbers negated.
inline CharVector negate_svec(const CharVector& v)
{
    std::vector<integer> out;
    out.reserve(v.entries.size());
    for (const auto& e : v.entries)
        out.push_back(-e);
    return CharVector(v.dim, v.basis, std::move(out), true);
}

inline CharVector scale(const CharVector& v, const integer& k)
{
    std::vector<integer> out;
    out.reserve(v.entries.size());
    for (const auto& e : v.entries)
        out.push_back(e * k);
    return CharVector(v.dim, v.basis, std::move(out), v.formal || k < 0);
}

/// s -> c multiplies by A, c -> s by A^{-1}.
inline CharVector convert_basis(const CharVector& v, const TransitionMatrix& a)
{
    if (a.n != v.dim)
        throw error("convert_basis: matrix is for dimension " + std::to_string(a.n) + ", vector has dimension "
                    + std::to_string(v.dim));
    if (v.basis == Basis::s)
        return CharVector(v.dim, Basis::c, a.entries * v.entries, v.formal);
    return CharVector(v.dim, Basis::s, inverse_unimodular(a.entries) * v.entries, v.formal);
}

inline CharVector convert_basis(const CharVector& v)
{
    if (v.dim == 0)
        return CharVector(0, v.basis == Basis::s ? Basis::c : Basis::s, v.entries, v.formal);
    return convert_basis(v, transition_matrix_A(v.dim));
}

/// Z[h_1..h_q] / (h_l^{bound_l + 1}), stored densely in mixed radix.
class TruncatedRing {
public:
    class Element {
    public:
        Element(const TruncatedRing* ring, std::vector<integer> c) : ring_(ring), coeffs_(std::move(c)) {}

        const std::vector<integer>& coefficients() const noexcept { return coeffs_; }

        friend Element operator+(const Element& a, const Element& b)
        {
            std::vector<integer> c = a.coeffs_;
            for (std::size_t k = 0; k < c.size(); ++k)
                c[k] += b.coeffs_[k];
            return Element(a.ring_, std::move(c));
        }
        friend Element operator-(const Element& a, const Element& b)
        {
            std::vector<integer> c = a.coeffs_;
            for (std::size_t k = 0; k < c.size(); ++k)
                c[k] -= b.coeffs_[k];
            return Element(a.ring_, std::move(c));
        }
        friend Element operator*(const Element& a, const integer& s)
        {
            std::vector<integer> c = a.coeffs_;
            for (auto& x : c)
                x *= s;
            return Element(a.ring_, std::move(c));
        }
        friend Element operator*(const Element& a, const Element& b) { return a.ring_->multiply(a, b); }

    private:
        const TruncatedRing* ring_;
        std::vector<integer> coeffs_;
    };

    explicit TruncatedRing(std::vector<int> bounds) : bounds_(std::move(bounds))
    {
        size_ = 1;
        for (int b : bounds_) {
            if (b < 0)
                throw error("negative truncation bound");
            size_ *= static_cast<std::size_t>(b + 1);
        }
    }

    std::size_t generators() const noexcept { return bounds_.size(); }

    Element zero() const { return Element(this, std::vector<integer>(size_, 0)); }
    Element one() const { return constant(1); }
    Element constant(const integer& v) const
    {
        std::vector<integer> c(size_, 0);
        c[0] = v;
        return Element(this, std::move(c));
    }
    Element generator(std::size_t l) const
    {
        std::vector<integer> c(size_, 0);
        if (bounds_[l] >= 1)
            c[stride(l)] = 1;
        return Element(this, std::move(c));
    }

    /// Coefficient of h_1^{e_1} ... h_q^{e_q}.
    integer coefficient(const Element& x, const std::vector<int>& exps) const { return x.coefficients()[offset(exps)]; }

    /// Coefficient of the top monomial h_1^{bound_1} ... h_q^{bound_q}.
    integer top_coefficient(const Element& x) const { return x.coefficients().back(); }

    /// Homogeneous component of total degree d.
    Element graded_piece(const Element& x, int d) const
    {
        std::vector<integer> c(size_, 0);
        for (std::size_t k = 0; k < size_; ++k)
            if (total_degree(k) == d)
                c[k] = x.coefficients()[k];
        return Element(this, std::move(c));
    }

private:
    std::size_t stride(std::size_t l) const
    {
        std::size_t s = 1;
        for (std::size_t m = l + 1; m < bounds_.size(); ++m)
            s *= static_cast<std::size_t>(bounds_[m] + 1);
        return s;
    }

    std::vector<int> decode(std::size_t k) const
    {
        std::vector<int> e(bounds_.size());
        for (std::size_t l = bounds_.size(); l-- > 0;) {
            auto base = static_cast<std::size_t>(bounds_[l] + 1);
            e[l] = static_cast<int>(k % base);
            k /= base;
        }
        return e;
    }

    std::size_t offset(const std::vector<int>& e) const
    {
        std::size_t k = 0;
        for (std::size_t l = 0; l < bounds_.size(); ++l)
            k = k * static_cast<std::size_t>(bounds_[l] + 1) + static_cast<std::size_t>(e[l]);
        return k;
    }

    int total_degree(std::size_t k) const
    {
        int d = 0;
        for (int e : decode(k))
            d += e;
        return d;
    }

public:
    Element multiply(const Element& a, const Element& b) const
    {
        std::vector<integer> c(size_, 0);
        const auto& ac = a.coefficients();
        const auto& bc = b.coefficients();
        for (std::size_t i = 0; i < size_; ++i) {
            if (ac[i] == 0)
                continue;
            auto ei = decode(i);
            for (std::size_t j = 0; j < size_; ++j) {
                if (bc[j] == 0)
                    continue;
                auto ej = decode(j);
                bool fits = true;
                for (std::size_t l = 0; l < ei.size(); ++l) {
                    ej[l] += ei[l];
                    if (ej[l] > bounds_[l]) {
                        fits = false;
                        break;
                    }
                }
                if (fits)
                    c[offset(ej)] += ac[i] * bc[j];
            }
        }
        return Element(this, std::move(c));
    }

private:
    std::vector<int> bounds_;
    std::size_t size_ = 1;
};

namespace detail {

// Graded pieces c_1..c_n of prod (1 + h_l)^{a_l + 1} in the truncated ring.
inline std::vector<TruncatedRing::Element> product_chern_classes(const TruncatedRing& ring, const std::vector<int>& dims)
{
    auto total = ring.one();
    for (std::size_t l = 0; l < dims.size(); ++l) {
        auto factor = ring.one() + ring.generator(l);
        for (int k = 0; k <= dims[l]; ++k)
            total = total * factor;
    }
    int n = 0;
    for (int d : dims)
        n += d;
    std::vector<TruncatedRing::Element> pieces;
    for (int i = 1; i <= n; ++i)
        pieces.push_back(ring.graded_piece(total, i));
    return pieces;
}

inline int checked_total(const std::vector<int>& dims)
{
    if (dims.empty())
        throw error("need at least one factor");
    int n = 0;
    for (int d : dims) {
        if (d < 1)
            throw error("projective space dimensions must be positive");
        n += d;
    }
    return n;
}

} // namespace detail

/// s-numbers of CP^{a_1} x ... x CP^{a_q} computed directly in the
/// cohomology ring Z[h_1..h_q]/(h_l^{a_l+1}). Independent of product_svec.
inline CharVector direct_product_oracle(const std::vector<int>& dims)
{
    const int n = detail::checked_total(dims);
    const TruncatedRing ring(dims);
    const auto chern = detail::product_chern_classes(ring, dims);
    std::vector<integer> out;
    for (const auto& p : enumerate_partitions(n)) {
        auto value = s_poly(p).evaluate<TruncatedRing::Element>(chern, ring.one());
        out.push_back(ring.top_coefficient(value));
    }
    return CharVector(n, Basis::s, std::move(out));
}

/// Chern numbers c_I of the same product, read off the truncated ring.
inline CharVector direct_product_c_oracle(const std::vector<int>& dims)
{
    const int n = detail::checked_total(dims);
    const TruncatedRing ring(dims);
    const auto chern = detail::product_chern_classes(ring, dims);
    std::vector<integer> out;
    for (const auto& p : enumerate_partitions(n)) {
        auto value = ring.one();
        for (int i : p.parts())
            value = value * chern[static_cast<std::size_t>(i - 1)];
        out.push_back(ring.top_coefficient(value));
    }
    return CharVector(n, Basis::c, std::move(out));
}

/// Iterated product_svec over projective spaces.
inline CharVector projective_product_svec(const std::vector<int>& dims)
{
    detail::checked_total(dims);
    CharVector v = CharVector::point();
    for (int d : dims)
        v = product_svec(v, projective_space_svec(d));
    return v;
}

struct DivisibilityReport {
    int dim = 0;
    std::string combination;
    integer value;
    integer modulus;
    bool divisible = false;
};

/// Classical integrality constraints on Chern numbers of complex manifolds in
/// dimensions 1, 2, 3: 2 | c_1, 12 | c_1^2 + c_2, 24 | c_1 c_2.
inline DivisibilityReport divisibility_check(const CharVector& v)
{
    if (v.basis != Basis::c)
        throw error("divisibility_check needs a c-basis vector");
    DivisibilityReport r;
    r.dim = v.dim;
    switch (v.dim) {
    case 1:
        r.combination = "c1";
        r.value = v.at({1});
        r.modulus = 2;
        break;
    case 2:
        r.combination = "c1^2+c2";
        r.value = v.at({1, 1}) + v.at({2});
        r.modulus = 12;
        break;
    case 3:
        r.combination = "c1*c2";
        r.value = v.at({2, 1});
        r.modulus = 24;
        break;
    default:
        throw error("no rule for dimension " + std::to_string(v.dim));
    }
    r.divisible = r.value % r.modulus == 0;
    return r;
}

/// A variety with an embedding whose restricted hyperplane class is
/// divisible by `divisibility`.
struct EmbeddedVariety {
    CharVector svec;
    integer divisibility = 1;

    EmbeddedVariety() = default;
    EmbeddedVariety(CharVector v, integer d) : svec(std::move(v)), divisibility(std::move(d))
    {
        if (svec.basis != Basis::s)
            throw error("embedded variety needs an s-basis vector");
        if (divisibility < 1)
            throw error("hyperplane divisibility must be >= 1");
    }

    friend bool operator==(const EmbeddedVariety&, const EmbeddedVariety&) = default;
};

/// Re-embedding by the degree-k Veronese map. The abstract variety is
/// unchanged; the hyperplane class pulls back to k times the old one.
inline EmbeddedVariety veronese(const EmbeddedVariety& x, int k)
{
    if (k < 1)
        throw error("Veronese degree must be >= 1");
    return EmbeddedVariety(x.svec, x.divisibility * k);
}

/// Projective dimension of the target of the degree-k Veronese embedding of
/// CP^m, C(m+k, k) - 1. Informational only.
inline integer veronese_ambient_dimension(int m, int k) { return binomial(m + k, k) - 1; }

/// Residue class of s_n[CX] mod d for the cone CX over X (dim X = n-1),
/// given by n * s_{n-1}[X] mod d. Nothing else about CX is determined.
inline integer cone_s_top_mod(const EmbeddedVariety& x)
{
    if (x.svec.dim < 1)
        throw error("cone congruence needs a base of dimension >= 1");
    const int n = x.svec.dim + 1;
    return floor_mod(integer(n) * x.svec.top(), x.divisibility);
}

} // namespace charnum
