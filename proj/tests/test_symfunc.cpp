#include <doctest.h>

#include "support.hpp"

using namespace deg;

TEST_SUITE("symfunc") {
    TEST_CASE("Schur functions expand over descent sets of standard tableaux") {
        for (int n = 1; n <= 7; ++n) {
            for (const auto& p : enumerate_partitions(n)) {
                const auto& f = schur_to_fundamental(p);
                auto want = oracle::schur(p);
                CHECK(f.coeffs == std::map<Signature, long long>(want.begin(), want.end()));
                CHECK(f.total() == count_syt(p));
            }
        }
    }

    TEST_CASE("expansion inverts assembly and reports residuals") {
        QSymFunction f(5);
        f += schur_to_fundamental({3, 2}).scaled(2);
        f += schur_to_fundamental({2, 2, 1});
        auto e = expand_in_schur(f);
        CHECK(e.exact());
        CHECK(format_schur_compact(e) == "2*s[3,2]+s[2,2,1]");
        CHECK(reconstruct(e) == f);
        CHECK(is_single_schur(schur_to_fundamental({4, 1})) == Partition{4, 1});
        CHECK_FALSE(is_single_schur(f).has_value());

        QSymFunction g = f;
        g.add("+-+-", 1);
        auto eg = expand_in_schur(g);
        CHECK_FALSE(eg.exact());
        CHECK(reconstruct(eg) == g);
        auto pos = is_schur_positive(g);
        CHECK_FALSE(pos.positive);
        CHECK_FALSE(pos.witness.empty());

        QSymFunction h = schur_to_fundamental({3, 1}) - schur_to_fundamental({2, 2});
        auto eh = expand_in_schur(h);
        CHECK(eh.exact());
        CHECK_FALSE(eh.nonnegative());
        CHECK(format_schur_compact(eh) == "s[3,1]-s[2,2]");
    }

    TEST_CASE("expansion terms are ordered by dominance") {
        QSymFunction f(6);
        for (const auto& p : enumerate_partitions(6)) f += schur_to_fundamental(p);
        auto e = expand_in_schur(f);
        std::vector<Partition> order;
        for (const auto& [p, c] : e.coeffs) order.push_back(p);
        CHECK(order == enumerate_partitions(6));
        CHECK(format_schur_compact(expand_in_schur(QSymFunction(4))) == "0");
    }

    TEST_CASE("line formats round trip") {
        QSymFunction f = schur_to_fundamental({3, 2}) + schur_to_fundamental({2, 2, 1});
        CHECK(parse_qsym_lines(format_qsym_lines(f)) == f);
        auto text = format_schur_lines(expand_in_schur(f));
        CHECK(text.find("3,2 1") != std::string::npos);
        QSymFunction g = f;
        g.add("++++", -3);
        CHECK(format_schur_lines(expand_in_schur(g)).find("RESIDUAL") == std::string::npos);
        g.add("+-++", 1);
        CHECK(format_schur_lines(expand_in_schur(g)).find("RESIDUAL") != std::string::npos);
    }

    TEST_CASE("zero coefficients are dropped") {
        QSymFunction f(3);
        f.add("+-", 2);
        f.add("+-", -2);
        CHECK(f.is_zero());
        CHECK(f.coefficient("+-") == 0);
    }
}
