#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace charnum {

struct Stratum {
    std::string label;
    integer chi_c; // compactly supported Euler characteristic

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// A finite decomposition into strata with known compactly supported Euler
/// characteristics. Labels are unique.
class StratifiedSpace {
public:
    StratifiedSpace() = default;
    explicit StratifiedSpace(std::vector<Stratum> strata) : strata_(std::move(strata))
    {
        std::set<std::string> seen;
        for (const auto& s : strata_)
            if (!seen.insert(s.label).second)
                throw error("duplicate stratum label '" + s.label + "'");
    }

    const std::vector<Stratum>& strata() const noexcept { return strata_; }

    bool contains(const std::string& label) const
    {
        for (const auto& s : strata_)
            if (s.label == label)
                return true;
        return false;
    }

    /// chi_c of the whole space (additivity).
    integer euler_characteristic() const
    {
        integer t = 0;
        for (const auto& s : strata_)
            t += s.chi_c;
        return t;
    }

    friend bool operator==(const StratifiedSpace&, const StratifiedSpace&) = default;

private:
    std::vector<Stratum> strata_;
};

/// Integer-valued function, constant on each stratum.
struct ConstructibleFunction {
    std::map<std::string, integer> values;

    const integer& at(const std::string& label) const
    {
        auto it = values.find(label);
        if (it == values.end())
            throw error("constructible function has no value on stratum '" + label + "'");
        return it->second;
    }

    friend ConstructibleFunction operator+(const ConstructibleFunction& f, const ConstructibleFunction& g)
    {
        ConstructibleFunction h = f;
        for (const auto& [k, v] : g.values)
            h.values[k] += v;
        return h;
    }

    friend ConstructibleFunction operator*(const integer& a, const ConstructibleFunction& f)
    {
        ConstructibleFunction h = f;
        for (auto& [k, v] : h.values)
            v *= a;
        return h;
    }
};

/// Sum over strata of f(stratum) * chi_c(stratum).
inline integer euler_integral(const StratifiedSpace& space, const ConstructibleFunction& f)
{
    integer total = 0;
    for (const auto& s : space.strata())
        total += f.at(s.label) * s.chi_c;
    return total;
}

using StratumSplit = std::map<std::string, std::vector<Stratum>>;

/// Replaces each split stratum by its pieces. The pieces' chi_c must add up
/// to the replaced stratum's chi_c.
inline StratifiedSpace refine_stratification(const StratifiedSpace& space, const StratumSplit& split)
{
    for (const auto& [label, pieces] : split)
        if (!space.contains(label))
            throw error("cannot split unknown stratum '" + label + "'");

    std::vector<Stratum> out;
    for (const auto& s : space.strata()) {
        auto it = split.find(s.label);
        if (it == split.end()) {
            out.push_back(s);
            continue;
        }
        integer sum = 0;
        for (const auto& p : it->second)
            sum += p.chi_c;
        if (sum != s.chi_c)
            throw error("pieces of stratum '" + s.label + "' have chi_c summing to " + sum.str() + ", expected "
                        + s.chi_c.str());
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    return StratifiedSpace(std::move(out));
}

/// Extends f to a refinement by giving each piece the value of the stratum
/// it came from.
inline ConstructibleFunction pull_back(const ConstructibleFunction& f, const StratumSplit& split)
{
    ConstructibleFunction g = f;
    for (const auto& [label, pieces] : split) {
        const integer v = f.at(label);
        g.values.erase(label);
        for (const auto& p : pieces)
            g.values[p.label] = v;
    }
    return g;
}

/// Closure in CP^2 of the cuspidal cubic x^2 = y^3, split into the cusp and
/// its complement (a copy of C), together with its local Euler obstruction.
/// Eu = 2 at the cusp is literature input, not computed here.
struct CuspidalCubic {
    static StratifiedSpace space() { return StratifiedSpace({{"cusp", 1}, {"regular", 1}}); }
    static ConstructibleFunction euler_obstruction() { return ConstructibleFunction{{{"cusp", 2}, {"regular", 1}}}; }
};

} // namespace charnum
