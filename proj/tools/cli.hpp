#pragma once

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <charnum/charnum.hpp>
#include <charnum/io.hpp>

namespace charnum::cli {

enum exit_code : int { ok = 0, domain_failure = 1, usage_failure = 2 };

// Bad invocation: malformed argument text, unreadable file.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

using io::json;

inline json parse_json_text(const std::string& text, const std::string& what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw usage_error("cannot parse " + what + " as JSON: " + e.what());
    }
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text, "'" + path + "'");
}

// "[2,1]" or "2,1" or "2 1".
inline Partition parse_partition(const std::string& text)
{
    std::string t = text;
    if (t.find('[') == std::string::npos) {
        std::replace(t.begin(), t.end(), ' ', ',');
        t = "[" + t + "]";
    }
    return io::partition_from_json(parse_json_text(t, "partition"));
}

inline std::vector<integer> parse_entries(const std::string& text)
{
    std::string t = text;
    if (t.find('[') == std::string::npos)
        t = "[" + t + "]";
    return io::integers_from_json(parse_json_text(t, "--target"));
}

inline GeneratorFamily load_family(const std::string& path, int n)
{
    if (path.empty())
        return GeneratorFamily::default_family(n);
    auto fam = io::generator_family_from_json(read_json_file(path));
    if (fam.n() < n)
        throw error("family in '" + path + "' only covers dimensions up to " + std::to_string(fam.n()));
    return fam;
}

inline std::string join(const std::vector<integer>& v)
{
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            s += ", ";
        s += v[k].str();
    }
    return s + "]";
}

/// Left-aligned columns separated by two spaces.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const
    {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (width.size() <= c)
                    width.push_back(0);
                width[c] = std::max(width[c], r[c].size());
            }
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t c = 0; c < r.size(); ++c) {
                line += r[c];
                if (c + 1 < r.size())
                    line += std::string(width[c] - r[c].size() + 2, ' ');
            }
            out << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

inline void print_vector(std::ostream& out, const CharVector& v)
{
    Table t({"partition", std::string(basis_name(v.basis)) + "_I"});
    auto idx = v.index();
    for (std::size_t k = 0; k < idx.size(); ++k)
        t.add({idx[k].to_string(), v.entries[k].str()});
    t.print(out);
}

inline void print_recipe(std::ostream& out, const Recipe& r)
{
    out << "target (" << basis_name(r.target.basis) << ", dim " << r.target.dim << "): " << join(r.target.entries) << '\n';
    out << "family: " << (r.user_family ? "user" : "default") << " (hash " << r.family_hash << ")\n";
    Table t({"generator", "sign", "multiplicity"});
    for (const auto& it : r.items)
        t.add({it.generator.to_string(), sign_name(it.sign), it.multiplicity.str()});
    t.print(out);
    out << "realized (s): " << join(r.realized.entries) << '\n';
}

} // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using detail::json;

    CLI::App app{"Exact characteristic-number computations and lattice realization", "charnum"};
    app.require_subcommand(1);
    app.fallthrough(false);

    bool as_json = false;
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Write JSON instead of a text table"); };

    // partitions
    int part_n = 0;
    auto* partitions = app.add_subcommand("partitions", "List partitions of n in canonical (descending lex) order");
    partitions->add_option("n", part_n, "Weight")->required()->check(CLI::NonNegativeNumber);
    add_json(partitions);

    // s-poly
    std::string spoly_part;
    int spoly_vars = 0;
    auto* spoly = app.add_subcommand("s-poly", "Express m_I in elementary symmetric functions");
    spoly->add_option("partition", spoly_part, "Partition, e.g. \"[2,1]\"")->required();
    spoly->add_option("--vars", spoly_vars, "Number of variables k (default: weight of I)");
    add_json(spoly);

    // matrix-a
    int mat_n = 0;
    bool mat_inverse = false;
    auto* matrix = app.add_subcommand("matrix-a", "Transition matrix A with c = A s");
    matrix->add_option("n", mat_n, "Dimension")->required()->check(CLI::PositiveNumber);
    matrix->add_flag("--inverse", mat_inverse, "Print the integer inverse instead");
    add_json(matrix);

    // svec
    std::vector<int> svec_dims;
    std::string svec_basis = "s";
    auto* svec = app.add_subcommand("svec", "Characteristic numbers of CP^{a_1} x ... x CP^{a_q}");
    svec->add_option("dims", svec_dims, "Factor dimensions")->required()->check(CLI::PositiveNumber);
    svec->add_option("--basis", svec_basis, "s or c")->check(CLI::IsMember({"s", "c"}));
    add_json(svec);

    // product
    std::string prod_left, prod_right;
    auto* product = app.add_subcommand("product", "s-numbers of the product of two varieties given as JSON files");
    product->add_option("left", prod_left, "CharVector JSON file (s-basis)")->required();
    product->add_option("right", prod_right, "CharVector JSON file (s-basis)")->required();
    add_json(product);

    // realize
    int real_dim = 0;
    std::string real_basis = "s", real_target, real_family;
    auto* realize = app.add_subcommand("realize", "Recipe of generators realizing a target vector");
    realize->add_option("--dim", real_dim, "Dimension n")->required()->check(CLI::PositiveNumber);
    realize->add_option("--basis", real_basis, "Basis of the target: s or c")->check(CLI::IsMember({"s", "c"}));
    realize->add_option("--target", real_target, "Target entries in canonical order, e.g. \"[3,3]\"")->required();
    realize->add_option("--family", real_family, "Generator family JSON file (default: zero lower entries)");
    add_json(realize);

    // rational-realize
    int rat_dim = 0;
    std::string rat_target;
    auto* rational_cmd = app.add_subcommand("rational-realize", "Rational combination of products of projective spaces");
    rational_cmd->add_option("--dim", rat_dim, "Dimension n")->required()->check(CLI::PositiveNumber);
    rational_cmd->add_option("--target", rat_target, "Target s-numbers in canonical order")->required();
    add_json(rational_cmd);

    // verify
    std::string ver_path, ver_family;
    auto* verify = app.add_subcommand("verify", "Recompute a recipe and check it against its target");
    verify->add_option("recipe", ver_path, "Recipe JSON file")->required();
    verify->add_option("--family", ver_family, "Generator family JSON file used to produce the recipe");
    add_json(verify);

    // euler-integral
    std::string eu_space, eu_function, eu_fixture;
    auto* euler = app.add_subcommand("euler-integral", "Integral of a constructible function against chi_c");
    auto* space_opt = euler->add_option("--space", eu_space, "StratifiedSpace JSON file");
    auto* fn_opt = euler->add_option("--function", eu_function, "Constructible function JSON file");
    auto* fixture_opt = euler->add_option("--fixture", eu_fixture, "Built-in example")->check(CLI::IsMember({"cuspidal-cubic"}));
    space_opt->needs(fn_opt);
    fn_opt->needs(space_opt);
    fixture_opt->excludes(space_opt)->excludes(fn_opt);
    add_json(euler);

    // cone-congruence
    int cone_n = 0;
    int cone_degree = 0;
    std::string cone_variety;
    auto* cone = app.add_subcommand("cone-congruence",
                                    "Residue of s_n of the cone over a Veronese re-embedded CP^{n-1} (or a given variety)");
    auto* cone_n_opt = cone->add_option("n", cone_n, "Cone dimension n >= 2")->check(CLI::Range(2, 1000));
    cone->add_option("--degree", cone_degree, "Veronese degree (default n+1)")->check(CLI::PositiveNumber);
    auto* cone_var_opt = cone->add_option("--variety", cone_variety, "EmbeddedVariety JSON file for the base");
    cone_n_opt->excludes(cone_var_opt);

    add_json(cone);

    // divisibility
    std::vector<int> div_dims;
    int div_dim = 0;
    std::string div_target, div_basis = "c";
    auto* divis = app.add_subcommand("divisibility", "Integrality check on Chern numbers in dimensions 1..3");
    auto* div_dims_opt = divis->add_option("dims", div_dims, "Product of projective spaces")->check(CLI::PositiveNumber);
    auto* div_dim_opt = divis->add_option("--dim", div_dim, "Dimension of --target");
    auto* div_target_opt = divis->add_option("--target", div_target, "Characteristic numbers in canonical order");
    divis->add_option("--basis", div_basis, "Basis of --target: c (default) or s")->check(CLI::IsMember({"s", "c"}));
    div_dim_opt->needs(div_target_opt);
    div_target_opt->needs(div_dim_opt);
    div_dims_opt->excludes(div_target_opt);
    add_json(divis);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "charnum: " << e.what() << "\n\n";
        auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return usage_failure;
    }

    auto emit = [&](const json& j) { out << j.dump(2) << '\n'; };

    try {
        if (*partitions) {
            auto ps = enumerate_partitions(part_n);
            if (as_json) {
                emit({{"n", part_n}, {"count", ps.size()}, {"partitions", io::to_json(ps)}});
            } else {
                detail::Table t({"#", "partition"});
                for (std::size_t k = 0; k < ps.size(); ++k)
                    t.add({std::to_string(k), ps[k].to_string()});
                t.print(out);
            }
        } else if (*spoly) {
            auto p = detail::parse_partition(spoly_part);
            auto poly = s_poly(p, spoly_vars > 0 ? spoly_vars : p.weight());
            if (as_json)
                emit({{"partition", io::to_json(p)}, {"polynomial", io::to_json(poly)}});
            else
                out << "s_" << p.to_string() << " = " << poly.to_string() << '\n';
        } else if (*matrix) {
            auto a = transition_matrix_A(mat_n);
            if (mat_inverse)
                a = inverse_unimodular(a);
            const integer det = det_int(a.entries);
            if (as_json) {
                auto j = io::to_json(a);
                j["inverse"] = mat_inverse;
                emit(j);
            } else {
                std::vector<std::string> header{mat_inverse ? "A^-1" : "A"};
                for (const auto& p : a.index)
                    header.push_back(p.to_string());
                detail::Table t(header);
                for (std::size_t i = 0; i < a.index.size(); ++i) {
                    std::vector<std::string> row{a.index[i].to_string()};
                    for (std::size_t j = 0; j < a.index.size(); ++j)
                        row.push_back(a.entries(i, j).str());
                    t.add(row);
                }
                t.print(out);
                out << "det = " << det << '\n';
            }
        } else if (*svec) {
            auto v = projective_product_svec(svec_dims);
            if (parse_basis(svec_basis) == Basis::c)
                v = convert_basis(v);
            if (as_json)
                emit(io::to_json(v));
            else
                detail::print_vector(out, v);
        } else if (*product) {
            auto l = io::char_vector_from_json(detail::read_json_file(prod_left));
            auto r = io::char_vector_from_json(detail::read_json_file(prod_right));
            auto v = product_svec(l, r);
            if (as_json)
                emit(io::to_json(v));
            else
                detail::print_vector(out, v);
        } else if (*realize) {
            CharVector target(real_dim, parse_basis(real_basis), detail::parse_entries(real_target));
            auto fam = detail::load_family(real_family, real_dim);
            Recipe r = target.basis == Basis::s ? realize_s(target, fam)
                                                : realize_c(target, fam, transition_matrix_A(real_dim));
            if (as_json)
                emit(io::to_json(r));
            else
                detail::print_recipe(out, r);
        } else if (*rational_cmd) {
            CharVector target(rat_dim, Basis::s, detail::parse_entries(rat_target));
            auto r = rational_smooth_realize(target);
            if (as_json) {
                emit(io::to_json(r));
            } else {
                detail::Table t({"product", "diagonal", "coefficient"});
                for (std::size_t k = 0; k < r.coefficients.size(); ++k)
                    t.add({"CP^" + r.coefficients[k].first.to_string(), r.diagonal[k].str(), r.coefficients[k].second.str()});
                t.print(out);
                out << "all coefficients integral: " << (r.all_integer ? "yes" : "no") << '\n';
            }
        } else if (*verify) {
            Recipe r = io::recipe_from_json(detail::read_json_file(ver_path));
            const int n = r.target.dim;
            auto fam = detail::load_family(ver_family, n);
            if (!r.family_hash.empty() && r.family_hash != fam.hash())
                throw integrity_error("recipe was produced with family " + r.family_hash + ", verifying against "
                                      + fam.hash());
            auto again = verify_recipe(r, fam);
            CharVector reached = r.target.basis == Basis::s ? again : convert_basis(again, transition_matrix_A(n));
            if (reached != r.target)
                throw integrity_error("realized vector does not match the recipe target");
            if (as_json)
                emit({{"ok", true}, {"realized", io::to_json(again)}, {"target", io::to_json(r.target)}});
            else
                out << "ok: " << r.items.size() << " item(s) reproduce target " << detail::join(r.target.entries) << " ("
                    << basis_name(r.target.basis) << "-basis)\n";
        } else if (*euler) {
            StratifiedSpace space;
            ConstructibleFunction fn;
            if (!eu_space.empty()) {
                space = io::stratified_space_from_json(detail::read_json_file(eu_space));
                fn = io::constructible_function_from_json(detail::read_json_file(eu_function));
            } else if (!eu_fixture.empty()) {
                space = CuspidalCubic::space();
                fn = CuspidalCubic::euler_obstruction();
            } else {
                throw usage_error("euler-integral needs --space and --function, or --fixture");
            }
            const integer value = euler_integral(space, fn);
            if (as_json) {
                emit({{"space", io::to_json(space)}, {"function", io::to_json(fn)}, {"integral", value.str()}});
            } else {
                detail::Table t({"stratum", "chi_c", "value"});
                for (const auto& s : space.strata())
                    t.add({s.label, s.chi_c.str(), fn.at(s.label).str()});
                t.print(out);
                out << "integral = " << value << '\n';
            }
        } else if (*cone) {
            EmbeddedVariety base;
            if (!cone_variety.empty()) {
                base = io::embedded_variety_from_json(detail::read_json_file(cone_variety));
                if (cone_degree > 0)
                    base = veronese(base, cone_degree);
            } else if (cone_n >= 2) {
                const int k = cone_degree > 0 ? cone_degree : cone_n + 1;
                base = veronese(EmbeddedVariety(projective_space_svec(cone_n - 1), 1), k);
            } else {
                throw usage_error("cone-congruence needs n or --variety");
            }
            const int n = base.svec.dim + 1;
            const integer residue = cone_s_top_mod(base);
            if (as_json) {
                emit({{"n", n},
                      {"base", io::to_json(base)},
                      {"base_top", base.svec.top().str()},
                      {"modulus", base.divisibility.str()},
                      {"residue", residue.str()}});
            } else {
                out << "base: dim " << base.svec.dim << ", s_" << base.svec.dim << " = " << base.svec.top()
                    << ", hyperplane class divisible by " << base.divisibility << '\n';
                out << "s_" << n << "[cone] = " << n << " * " << base.svec.top() << " = " << residue << " mod "
                    << base.divisibility << '\n';
            }
        } else if (*divis) {
            CharVector v;
            if (!div_dims.empty()) {
                v = convert_basis(projective_product_svec(div_dims));
            } else if (!div_target.empty()) {
                v = CharVector(div_dim, parse_basis(div_basis), detail::parse_entries(div_target));
                if (v.basis == Basis::s)
                    v = convert_basis(v);
            } else {
                throw usage_error("divisibility needs factor dimensions or --dim with --target");
            }
            auto rep = divisibility_check(v);
            if (as_json) {
                emit(io::to_json(rep));
            } else {
                out << rep.combination << " = " << rep.value << "; " << rep.modulus
                    << (rep.divisible ? " divides it" : " does not divide it") << '\n';
            }
        }
    } catch (const usage_error& e) {
        err << "charnum: " << e.what() << '\n';
        return usage_failure;
    } catch (const error& e) {
        err << "charnum: " << e.what() << '\n';
        return domain_failure;
    } catch (const json::exception& e) {
        err << "charnum: malformed input: " << e.what() << '\n';
        return domain_failure;
    }
    return ok;
}

} // namespace charnum::cli
