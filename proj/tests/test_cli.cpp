#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

using charnum::io::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = charnum::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& contents)
    {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path()
                / ("charnum_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

} // namespace

TEST(Cli, Partitions)
{
    auto r = call({"partitions", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "#  partition\n0  (4)\n1  (3,1)\n2  (2,2)\n3  (2,1,1)\n4  (1,1,1,1)\n");
    auto j = json::parse(call({"partitions", "3", "--json"}).out);
    EXPECT_EQ(j["partitions"], json::parse("[[3],[2,1],[1,1,1]]"));
}

TEST(Cli, MatrixA)
{
    auto r = call({"matrix-a", "2", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["entries"], json::parse(R"([["0","1"],["1","2"]])"));
    EXPECT_EQ(j["det"], "-1");
    auto inv = json::parse(call({"matrix-a", "2", "--inverse", "--json"}).out);
    EXPECT_EQ(inv["entries"], json::parse(R"([["-2","1"],["1","0"]])"));
    EXPECT_NE(call({"matrix-a", "3"}).out.find("det = "), std::string::npos);
}

TEST(Cli, SPolyAndSvec)
{
    EXPECT_EQ(call({"s-poly", "[3]"}).out, "s_(3) = sigma1^3 - 3*sigma1*sigma2 + 3*sigma3\n");
    auto j = json::parse(call({"svec", "2", "--json"}).out);
    EXPECT_EQ(j["entries"], json::parse(R"(["3","3"])"));
    auto c = json::parse(call({"svec", "1", "1", "--basis", "c", "--json"}).out);
    EXPECT_EQ(c["entries"], json::parse(R"(["4","8"])"));
}

TEST(Cli, ProductOfFiles)
{
    TempFile a(call({"svec", "1", "--json"}).out);
    TempFile b(call({"svec", "1", "--json"}).out);
    auto r = call({"product", a.path(), b.path(), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["entries"], json::parse(call({"svec", "1", "1", "--json"}).out)["entries"]);
}

TEST(Cli, RealizeDefaultFamily)
{
    auto r = call({"realize", "--dim", "2", "--basis", "s", "--target", "[3,3]", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["items"], json::parse(R"([{"partition":[2],"sign":"+","multiplicity":"3"},
                                          {"partition":[1,1],"sign":"+","multiplicity":"3"}])"));
    EXPECT_EQ(j["family"], "default");
}

TEST(Cli, RealizeThenVerify)
{
    for (std::string basis : {"s", "c"}) {
        auto r = call({"realize", "--dim", "3", "--basis", basis, "--target", "[-5, 17, 4]", "--json"});
        ASSERT_EQ(r.code, 0) << r.err;
        TempFile recipe(r.out);
        auto v = call({"verify", recipe.path()});
        EXPECT_EQ(v.code, 0) << v.err;
        EXPECT_EQ(v.out.rfind("ok:", 0), 0u) << v.out;

        auto tampered = json::parse(r.out);
        tampered["items"][0]["multiplicity"] = "999";
        TempFile bad(tampered.dump());
        EXPECT_EQ(call({"verify", bad.path()}).code, 1);
    }
}

TEST(Cli, UserFamily)
{
    TempFile good(R"({"n":2,"bases":[{"dim":1,"plus":["1"],"minus":["-1"]},
                                     {"dim":2,"plus":["1","5"],"minus":["-1","0"]}]})");
    auto r = call({"realize", "--dim", "2", "--target", "[2,3]", "--family", good.path(), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["family"], "user");
    EXPECT_EQ(j["items"], json::parse(R"([{"partition":[2],"sign":"+","multiplicity":"2"},
                                          {"partition":[1,1],"sign":"-","multiplicity":"7"}])"));
    TempFile recipe(r.out);
    EXPECT_EQ(call({"verify", recipe.path(), "--family", good.path()}).code, 0);
    // Verifying against a different family is caught by the hash.
    EXPECT_EQ(call({"verify", recipe.path()}).code, 1);

    TempFile bad(R"({"n":2,"bases":[{"dim":1,"plus":["1"],"minus":["-1"]},
                                    {"dim":2,"plus":["2","0"],"minus":["-1","0"]}]})");
    auto e = call({"realize", "--dim", "2", "--target", "[2,3]", "--family", bad.path()});
    EXPECT_EQ(e.code, 1);
    EXPECT_NE(e.err.find("dimension 2"), std::string::npos) << e.err;
}

TEST(Cli, RationalRealize)
{
    auto j = json::parse(call({"rational-realize", "--dim", "1", "--target", "[1]", "--json"}).out);
    EXPECT_EQ(j["coefficients"][0]["coefficient"], "1/2");
    EXPECT_EQ(j["all_integer"], false);
}

TEST(Cli, EulerIntegral)
{
    auto r = call({"euler-integral", "--fixture", "cuspidal-cubic"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("integral = 3"), std::string::npos);
    TempFile space(R"({"strata":[{"label":"a","chi_c":"2"},{"label":"b","chi_c":-1}]})");
    TempFile fn(R"({"values":{"a":3,"b":"4"}})");
    auto j = json::parse(call({"euler-integral", "--space", space.path(), "--function", fn.path(), "--json"}).out);
    EXPECT_EQ(j["integral"], "2");
}

TEST(Cli, ConeCongruence)
{
    for (int n = 2; n <= 10; ++n) {
        auto j = json::parse(call({"cone-congruence", std::to_string(n), "--json"}).out);
        EXPECT_EQ(j["residue"], "1") << n;
        EXPECT_EQ(j["modulus"], std::to_string(n + 1)) << n;
    }
}

TEST(Cli, Divisibility)
{
    auto j = json::parse(call({"divisibility", "1", "1", "--json"}).out);
    EXPECT_EQ(j["value"], "12");
    EXPECT_EQ(j["divisible"], true);
    auto k = json::parse(call({"divisibility", "--dim", "1", "--target", "[1]", "--json"}).out);
    EXPECT_EQ(k["divisible"], false);
    EXPECT_EQ(call({"divisibility", "4"}).code, 1);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"partitions", "4", "--bogus"}).code, 2);
    EXPECT_EQ(call({"realize", "--dim", "2", "--target", "[1,"}).code, 2);
    EXPECT_EQ(call({"verify", "/nonexistent/recipe.json"}).code, 2);
    auto wrong_len = call({"realize", "--dim", "2", "--target", "[1,2,3]"});
    EXPECT_EQ(wrong_len.code, 1);
    EXPECT_FALSE(wrong_len.err.empty());
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, Deterministic)
{
    std::vector<std::string> args{"realize", "--dim", "4", "--basis", "c", "--target", "[1,2,3,4,5]", "--json"};
    EXPECT_EQ(call(args).out, call(args).out);
}
