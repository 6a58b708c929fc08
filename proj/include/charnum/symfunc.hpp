#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "matrix.hpp"
#include "partition.hpp"

namespace charnum {

/// Polynomial in the elementary symmetric functions sigma_1..sigma_n with
/// exact integer coefficients. A term is keyed by its exponent vector
/// (a_1..a_n) and has graded degree sum(i * a_i).
class SigmaPoly {
public:
    using exponents = std::vector<int>;

    SigmaPoly() = default;
    explicit SigmaPoly(std::size_t variables) : variables_(variables) {}

    std::size_t variables() const noexcept { return variables_; }
    const std::map<exponents, integer, std::greater<>>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(exponents e, const integer& c)
    {
        if (e.size() != variables_)
            throw error("exponent vector has the wrong length");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    integer coefficient(const exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? integer(0) : it->second;
    }

    static int degree_of(const exponents& e)
    {
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            d += static_cast<int>(i + 1) * e[i];
        return d;
    }

    /// Graded degree shared by all terms, or -1 for a mixed/zero polynomial.
    int degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int de = degree_of(e);
            if (d == -1)
                d = de;
            else if (d != de)
                return -1;
        }
        return d;
    }

    /// Substitutes ring elements for sigma_1.. . `one` is the unit of R.
    template <typename R>
    R evaluate(std::span<const R> sigma, const R& one) const
    {
        if (sigma.size() < variables_)
            throw error("evaluate: need " + std::to_string(variables_) + " sigma values, got "
                        + std::to_string(sigma.size()));
        R total = one - one;
        for (const auto& [e, c] : terms_) {
            R term = one;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k)
                    term = term * sigma[i];
            total = total + term * c;
        }
        return total;
    }

    integer evaluate(std::span<const integer> sigma) const { return evaluate<integer>(sigma, integer(1)); }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            integer mag = abs(c);
            if (first)
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += '*';
                mono += "sigma" + std::to_string(i + 1);
                if (e[i] > 1)
                    mono += '^' + std::to_string(e[i]);
            }
            if (mono.empty())
                s += mag.str();
            else if (mag == 1)
                s += mono;
            else
                s += mag.str() + '*' + mono;
        }
        return s;
    }

    friend bool operator==(const SigmaPoly&, const SigmaPoly&) = default;

private:
    std::size_t variables_ = 0;
    std::map<exponents, integer, std::greater<>> terms_;
};

/// Coefficient of t_1^{lambda_1} t_2^{lambda_2} ... in the product
/// sigma_{mu_1} sigma_{mu_2} ... taken in k variables, i.e. the number of 0-1
/// matrices with row sums mu and column sums lambda (padded with zeros to k).
inline integer elementary_monomial_coefficient(const Partition& mu, const Partition& lambda, int k)
{
    if (mu.weight() != lambda.weight())
        return 0;
    if (static_cast<int>(lambda.length()) > k)
        return 0;
    for (int p : mu.parts())
        if (p > k)
            return 0;

    // Columns are interchangeable, so the state is the sorted vector of
    // remaining column sums.
    std::map<std::pair<std::size_t, std::vector<int>>, integer> memo;
    std::vector<int> start(static_cast<std::size_t>(k), 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), start.begin());

    auto count = [&](auto&& self, std::size_t row, const std::vector<int>& rem) -> integer {
        if (row == mu.length())
            return std::all_of(rem.begin(), rem.end(), [](int r) { return r == 0; }) ? 1 : 0;
        auto key = std::make_pair(row, rem);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;

        // Groups of equal positive remaining sums: (value, first index, size).
        std::vector<std::pair<std::size_t, std::size_t>> groups;
        for (std::size_t i = 0; i < rem.size() && rem[i] > 0;) {
            std::size_t j = i;
            while (j < rem.size() && rem[j] == rem[i])
                ++j;
            groups.emplace_back(i, j - i);
            i = j;
        }

        integer total = 0;
        std::vector<int> take(groups.size(), 0);
        auto distribute = [&](auto&& again, std::size_t g, int need) -> void {
            if (need == 0) {
                std::vector<int> next = rem;
                integer ways = 1;
                for (std::size_t h = 0; h < groups.size(); ++h) {
                    auto [first, size] = groups[h];
                    for (int c = 0; c < take[h]; ++c)
                        --next[first + static_cast<std::size_t>(c)];
                    ways *= binomial(static_cast<int>(size), take[h]);
                }
                std::sort(next.begin(), next.end(), std::greater<>());
                total += ways * self(self, row + 1, next);
                return;
            }
            if (g == groups.size())
                return;
            int cap = std::min<int>(need, static_cast<int>(groups[g].second));
            for (int c = cap; c >= 0; --c) {
                take[g] = c;
                again(again, g + 1, need - c);
            }
            take[g] = 0;
        };
        distribute(distribute, 0, mu[row]);
        memo.emplace(std::move(key), total);
        return total;
    };
    return count(count, 0, start);
}

/// The polynomial s_I with s_I(sigma_1..sigma_n) equal to the monomial
/// symmetric function m_I, computed in k >= weight(I) variables by repeatedly
/// cancelling the lex-leading monomial t^lambda with sigma_{lambda'}.
///
/// Symmetric polynomials are tracked by their coefficients on the
/// weakly-decreasing monomials t^lambda, which determine them completely.
inline SigmaPoly s_poly(const Partition& part, int k)
{
    if (part.empty())
        throw error("s_poly of the empty partition is the constant 1; callers handle it");
    const int n = part.weight();
    if (k < n)
        throw error("s_poly needs at least " + std::to_string(n) + " variables");

    const PartitionIndex index(n);
    std::vector<integer> residual(index.size(), 0);
    residual[index.position(part)] = 1;

    SigmaPoly out(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < index.size(); ++p) {
        if (residual[p] == 0)
            continue;
        const Partition& lead = index[p];
        const Partition mu = lead.conjugate();
        const integer c = residual[p];

        SigmaPoly::exponents e(static_cast<std::size_t>(n), 0);
        for (int m : mu.parts())
            ++e[static_cast<std::size_t>(m - 1)];
        out.add_term(std::move(e), c);

        for (std::size_t q = p; q < index.size(); ++q) {
            integer coef = elementary_monomial_coefficient(mu, index[q], k);
            if (coef != 0)
                residual[q] -= c * coef;
        }
        if (residual[p] != 0)
            throw integrity_error("leading term did not cancel in s_poly");
    }
    return out;
}

inline SigmaPoly s_poly(const Partition& part) { return s_poly(part, part.weight()); }

/// s_I evaluated at numeric sigma values (e.g. Chern numbers of a bundle).
inline integer eval_s(const Partition& part, std::span<const integer> sigma)
{
    if (static_cast<int>(sigma.size()) < part.weight())
        throw error("eval_s: need " + std::to_string(part.weight()) + " sigma values");
    return s_poly(part).evaluate(sigma);
}

/// c = A s over the partitions of n, rows and columns in canonical order.
struct TransitionMatrix {
    int n = 0;
    std::vector<Partition> index;
    IntMatrix entries;
};

/// Row I, column J: coefficient of m_J in the expansion of
/// sigma_{i_1} ... sigma_{i_r}.
inline TransitionMatrix transition_matrix_A(int n)
{
    if (n < 1)
        throw error("transition matrix needs n >= 1");
    TransitionMatrix a;
    a.n = n;
    a.index = enumerate_partitions(n);
    const std::size_t p = a.index.size();
    a.entries = IntMatrix(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            a.entries(i, j) = elementary_monomial_coefficient(a.index[i], a.index[j], n);
    return a;
}

inline TransitionMatrix inverse_unimodular(const TransitionMatrix& a)
{
    return TransitionMatrix{a.n, a.index, inverse_unimodular(a.entries)};
}

} // namespace charnum
