#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "integer.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "symfunc.hpp"

namespace charnum {

enum class Sign { plus, minus };

inline const char* sign_name(Sign s) { return s == Sign::plus ? "+" : "-"; }

inline Sign parse_sign(const std::string& s)
{
    if (s == "+" || s == "plus")
        return Sign::plus;
    if (s == "-" || s == "minus")
        return Sign::minus;
    throw error("unknown sign '" + s + "'");
}

/// s-vectors of the base generators K^i_+ and K^i_- for i = 1..n.
///
/// Only the entry at the one-part partition (i) is fixed (+1 and -1); all
/// other entries are free parameters and the solver is correct for any
/// choice of them.
class GeneratorFamily {
public:
    GeneratorFamily() = default;

    GeneratorFamily(int n, std::vector<CharVector> plus, std::vector<CharVector> minus, bool user_supplied = true)
        : n_(n), plus_(std::move(plus)), minus_(std::move(minus)), user_supplied_(user_supplied)
    {
        validate();
    }

    /// All lower entries zero.
    static GeneratorFamily default_family(int n)
    {
        if (n < 0)
            throw error("generator family needs n >= 0");
        std::vector<CharVector> plus, minus;
        for (int i = 1; i <= n; ++i) {
            auto p = CharVector::zero(i, Basis::s);
            p.entries.front() = 1;
            auto m = CharVector::zero(i, Basis::s);
            m.entries.front() = -1;
            plus.push_back(std::move(p));
            minus.push_back(std::move(m));
        }
        return GeneratorFamily(n, std::move(plus), std::move(minus), false);
    }

    int n() const noexcept { return n_; }
    bool user_supplied() const noexcept { return user_supplied_; }

    const CharVector& base(int dim, Sign s) const
    {
        if (dim < 1 || dim > n_)
            throw error("generator family has no base in dimension " + std::to_string(dim));
        const auto& v = s == Sign::plus ? plus_ : minus_;
        return v[static_cast<std::size_t>(dim - 1)];
    }

    /// Canonical text form; stable across runs and platforms.
    std::string canonical_text() const
    {
        std::string s = "n=" + std::to_string(n_);
        for (int i = 1; i <= n_; ++i) {
            for (Sign sg : {Sign::plus, Sign::minus}) {
                s += ';';
                s += std::to_string(i);
                s += sign_name(sg);
                for (const auto& e : base(i, sg).entries)
                    s += ',' + e.str();
            }
        }
        return s;
    }

    /// 64-bit FNV-1a of canonical_text(), as 16 hex digits.
    std::string hash() const
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char ch : canonical_text()) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

private:
    void validate() const
    {
        if (n_ < 0)
            throw error("generator family needs n >= 0");
        if (plus_.size() != static_cast<std::size_t>(n_) || minus_.size() != static_cast<std::size_t>(n_))
            throw error("generator family must list one plus and one minus base per dimension 1.."
                        + std::to_string(n_));
        for (int i = 1; i <= n_; ++i) {
            for (Sign sg : {Sign::plus, Sign::minus}) {
                const auto& v = base(i, sg);
                if (v.dim != i || v.basis != Basis::s)
                    throw error("generator base " + std::to_string(i) + sign_name(sg)
                                + " must be an s-vector of dimension " + std::to_string(i));
                const integer want = sg == Sign::plus ? 1 : -1;
                if (v.top() != want)
                    throw error("generator contract violated in dimension " + std::to_string(i) + ": "
                                + (sg == Sign::plus ? "plus" : "minus") + " base has s_" + std::to_string(i)
                                + " = " + v.top().str() + ", expected " + want.str());
            }
        }
    }

    int n_ = 0;
    std::vector<CharVector> plus_;
    std::vector<CharVector> minus_;
    bool user_supplied_ = false;
};

/// s-vector of K^J = K^{j_1}_{+/-} x K^{j_2}_+ x ... ; the sign only affects
/// the first factor.
inline CharVector build_generator_svec(const GeneratorFamily& family, const Partition& gen, Sign sign)
{
    if (gen.weight() > family.n())
        throw error("generator " + gen.to_string() + " exceeds family dimension " + std::to_string(family.n()));
    CharVector v = CharVector::point();
    for (std::size_t l = 0; l < gen.length(); ++l)
        v = product_svec(v, family.base(gen[l], l == 0 ? sign : Sign::plus));
    return v;
}

/// Column J holds the s-vector of K^J_+. Rows and columns in canonical order.
inline IntMatrix build_generator_matrix(const GeneratorFamily& family, int n)
{
    if (n > family.n())
        throw error("generator matrix dimension exceeds family dimension");
    const auto index = enumerate_partitions(n);
    IntMatrix s(index.size(), index.size());
    for (std::size_t j = 0; j < index.size(); ++j) {
        auto col = build_generator_svec(family, index[j], Sign::plus);
        for (std::size_t i = 0; i < index.size(); ++i)
            s(i, j) = col.entries[i];
    }
    return s;
}

struct RecipeItem {
    Partition generator;
    Sign sign = Sign::plus;
    integer multiplicity;

    friend bool operator==(const RecipeItem&, const RecipeItem&) = default;
};

/// A nonnegative combination of generators K^J_{+/-}. `realized` is the
/// s-vector of the combination; `target` is what was asked for, in its own
/// basis.
struct Recipe {
    CharVector target;
    std::vector<RecipeItem> items;
    CharVector realized;
    std::string family_hash;
    bool user_family = false;
};

/// Sum of multiplicity * s-vector over the items, independently recomputed.
inline CharVector recompute(const std::vector<RecipeItem>& items, const GeneratorFamily& family, int n)
{
    CharVector total = CharVector::zero(n, Basis::s);
    for (const auto& item : items) {
        if (item.generator.weight() != n)
            throw error("recipe item " + item.generator.to_string() + " is not of dimension " + std::to_string(n));
        if (item.multiplicity < 1)
            throw error("recipe multiplicities must be positive");
        total = disjoint_union_svec(total, scale(build_generator_svec(family, item.generator, item.sign), item.multiplicity));
    }
    total.formal = false;
    return total;
}

/// Realizes an s-vector by back-substitution over the triangular generator
/// system, largest partition first.
inline Recipe realize_s(const CharVector& target, const GeneratorFamily& family)
{
    if (target.basis != Basis::s)
        throw error("realize_s needs an s-basis target");
    const int n = target.dim;
    const auto index = enumerate_partitions(n);

    Recipe r;
    r.target = target;
    r.family_hash = family.hash();
    r.user_family = family.user_supplied();

    if (n == 0) {
        // There are no generators in dimension 0.
        if (!target.is_zero())
            throw error("dimension 0 targets other than zero cannot be realized by generators");
        r.realized = CharVector::zero(0, Basis::s);
        return r;
    }

    std::vector<integer> residual = target.entries;
    for (std::size_t j = 0; j < index.size(); ++j) {
        const integer rj = residual[j];
        if (rj == 0)
            continue;
        const Sign sg = rj > 0 ? Sign::plus : Sign::minus;
        const integer mult = abs(rj);
        const auto col = build_generator_svec(family, index[j], sg);
        for (std::size_t i = 0; i < index.size(); ++i)
            residual[i] -= mult * col.entries[i];
        r.items.push_back({index[j], sg, mult});
    }
    for (const auto& x : residual)
        if (x != 0)
            throw integrity_error("back-substitution left a nonzero residual");

    r.realized = recompute(r.items, family, n);
    return r;
}

/// Realizes a c-vector: converts to the s-basis through A^{-1} and realizes that.
inline Recipe realize_c(const CharVector& target, const GeneratorFamily& family, const TransitionMatrix& a)
{
    if (target.basis != Basis::c)
        throw error("realize_c needs a c-basis target");
    const integer det = det_int(a.entries);
    if (det != 1 && det != -1)
        throw error("transition matrix is not unimodular");
    Recipe r = realize_s(convert_basis(target, a), family);
    r.target = target;
    if (convert_basis(r.realized, a) != target)
        throw integrity_error("realized c-vector differs from target");
    return r;
}

/// Recomputes the recipe's s-vector from scratch; throws integrity_error on
/// mismatch with the stored `realized`.
inline CharVector verify_recipe(const Recipe& recipe, const GeneratorFamily& family)
{
    const int n = recipe.realized.dim;
    if (recipe.realized.basis != Basis::s)
        throw error("recipe realized vector must be in the s-basis");
    CharVector again = recompute(recipe.items, family, n);
    if (again != recipe.realized)
        throw integrity_error("recipe does not reproduce its realized vector");
    return again;
}

struct RationalRealization {
    std::vector<std::pair<Partition, rational>> coefficients;
    std::vector<rational> diagonal;
    bool all_integer = true;
};

/// Solves target = sum x_J s[CP^J] over products of projective spaces,
/// CP^J = CP^{j_1} x ... x CP^{j_q}, exactly over Q. The diagonal entry of
/// column J is prod (j_l + 1), so integral targets generally need
/// non-integral coefficients.
inline RationalRealization rational_smooth_realize(const CharVector& target)
{
    if (target.basis != Basis::s)
        throw error("rational_smooth_realize needs an s-basis target");
    const int n = target.dim;
    if (n < 1)
        throw error("rational_smooth_realize needs dimension >= 1");
    const auto index = enumerate_partitions(n);
    std::vector<CharVector> columns;
    for (const auto& j : index)
        columns.push_back(projective_product_svec(j.parts()));

    RationalRealization out;
    std::vector<rational> residual;
    for (const auto& e : target.entries)
        residual.emplace_back(e);
    for (std::size_t j = 0; j < index.size(); ++j) {
        const rational diag(columns[j].entries[j]);
        if (diag == 0)
            throw integrity_error("zero diagonal in projective-space system");
        for (std::size_t i = 0; i < j; ++i)
            if (columns[j].entries[i] != 0)
                throw integrity_error("projective-space system is not triangular");
        const rational x = residual[j] / diag;
        for (std::size_t i = j; i < index.size(); ++i)
            residual[i] -= x * rational(columns[j].entries[i]);
        out.diagonal.push_back(diag);
        out.coefficients.emplace_back(index[j], x);
        if (denominator(x) != 1)
            out.all_integer = false;
    }
    return out;
}

} // namespace charnum
