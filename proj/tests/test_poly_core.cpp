#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/corpus.hpp"

using namespace sprees;
using namespace testsupport;

TEST_CASE("field spec validation") {
    CHECK_THROWS(make_prime_field(4));
    CHECK_THROWS(make_prime_field(2));
    CHECK(make_prime_field(32003).modulus == 32003);
    CHECK(make_rationals().kind == FieldSpec::Kind::rationals);
}

TEST_CASE("prime field arithmetic") {
    Fp a(5, 7), b(4, 7);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 1);
    CHECK((a * b).value() == 6);
    CHECK((a / b).value() == 3);  // 5 * 4^{-1} = 5*2 = 10 = 3 mod 7
    CHECK((a * a.inverse()).is_one());
    CHECK(Fp(-1, 7).value() == 6);
    CHECK(Fp(-1, 7).to_string() == "-1");
    CHECK_THROWS(Fp(0, 7).inverse());
    CHECK_THROWS((void)(Fp(1, 7) + Fp(1, 11)));
}

TEST_CASE("rationals are canonical") {
    Rat r(2, 4);
    CHECK(r.to_string() == "1/2");
    Rat s(-3, -6);
    CHECK(s.to_string() == "1/2");
    Rat t(3, -6);
    CHECK(t.to_string() == "-1/2");
    CHECK((r + t).is_zero());
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("monomial multiplication") {
    // x^2y * yz = x^2y^2z
    Monomial a({2, 1, 0}), b({0, 1, 1});
    Monomial c = mono_mul(a, b);
    CHECK(c.exps() == std::vector<int>{2, 2, 1});
    CHECK(c.degree() == 5);
    // m * 1 = m
    CHECK(mono_mul(a, Monomial(3)) == a);
    // x * x = x^2
    Monomial x({1, 0, 0});
    CHECK(mono_mul(x, x).exps() == std::vector<int>{2, 0, 0});
    CHECK_THROWS(mono_mul(a, Monomial(2)));
}

TEST_CASE("monomial division and lcm") {
    Monomial a({2, 2, 1}), b({1, 0, 1});
    CHECK(mono_divides(b, a));
    CHECK(!mono_divides(a, b));
    CHECK(mono_div(a, b).exps() == std::vector<int>{1, 2, 0});
    CHECK(mono_lcm(Monomial({2, 0, 0}), Monomial({1, 1, 0})).exps() ==
          std::vector<int>{2, 1, 0});
    CHECK(mono_coprime(Monomial({2, 0, 0}), Monomial({0, 3, 1})));
}

TEST_CASE("lex order") {
    TermOrder lex = TermOrder::lex();
    // x^3 vs x^2 y: x^3 greater
    CHECK(order_cmp(lex, Monomial({3, 0, 0}), Monomial({2, 1, 0})) > 0);
    CHECK(order_cmp(lex, Monomial({1, 0, 0}), Monomial({0, 5, 5})) > 0);
    CHECK(order_cmp(lex, Monomial({1, 1, 0}), Monomial({1, 0, 3})) > 0);
}

TEST_CASE("grevlex order") {
    TermOrder gr = TermOrder::grevlex();
    // x^2 y vs x y^2: x^2 y greater
    CHECK(order_cmp(gr, Monomial({2, 1, 0}), Monomial({1, 2, 0})) > 0);
    // degree dominates
    CHECK(order_cmp(gr, Monomial({0, 0, 3}), Monomial({1, 1, 0})) > 0);
    // y^2 vs xz: y^2 greater (smaller exponent on the last variable)
    CHECK(order_cmp(gr, Monomial({0, 2, 0}), Monomial({1, 0, 1})) > 0);
    // z^2 vs x^2 y: x^2 y greater
    CHECK(order_cmp(gr, Monomial({0, 0, 2}), Monomial({2, 1, 0})) < 0);
}

TEST_CASE("block order eliminates its first block") {
    TermOrder blk = TermOrder::block(1);
    // t vs x^100: t greater
    CHECK(order_cmp(blk, Monomial({1, 0}), Monomial({0, 100})) > 0);
    CHECK(order_cmp(blk, Monomial({0, 3}), Monomial({0, 2})) > 0);
}

TEST_CASE("order laws: totality, multiplicativity, 1 minimal") {
    Rng rng(7);
    std::vector<TermOrder> orders = {TermOrder::lex(), TermOrder::grevlex(),
                                     TermOrder::block(2)};
    for (const auto& ord : orders) {
        for (int it = 0; it < 300; ++it) {
            std::vector<int> ea(4), eb(4), ec(4);
            for (auto& x : ea) x = rng.range(0, 4);
            for (auto& x : eb) x = rng.range(0, 4);
            for (auto& x : ec) x = rng.range(0, 4);
            Monomial a(ea), b(eb), c(ec);
            int ab = order_cmp(ord, a, b);
            CHECK(order_cmp(ord, b, a) == -ab);
            CHECK((ab == 0) == (a == b));
            // multiplicative: a<b => ac<bc
            CHECK(order_cmp(ord, mono_mul(a, c), mono_mul(b, c)) == ab);
            // 1 minimal
            if (!a.is_one()) CHECK(order_cmp(ord, a, Monomial(4)) > 0);
            // transitivity spot check
            int bc = order_cmp(ord, b, c);
            if (ab > 0 && bc > 0) CHECK(order_cmp(ord, a, c) > 0);
        }
    }
}

TEST_CASE("polynomial arithmetic and canonical form") {
    auto R = qring({"x", "y"});
    auto f = P<Rat>(R, "x + y");
    auto g = P<Rat>(R, "x - y");
    CHECK((f + g) == P<Rat>(R, "2x"));
    CHECK((f * Polynomial<Rat>::zero(R)).is_zero());
    CHECK((f * g) == P<Rat>(R, "x^2 - y^2"));
    CHECK(f - f == Polynomial<Rat>::zero(R));
    CHECK((f + g - g) == f);

    auto R3 = qring({"x", "y", "z"});
    CHECK_THROWS((void)(f + P<Rat>(R3, "x")));
}

TEST_CASE("canonical form under random add/sub") {
    Rng rng(11);
    auto R = fpring({"x", "y", "z"});
    for (int it = 0; it < 200; ++it) {
        auto f = random_poly<Fp>(rng, R, 5, 3);
        auto g = random_poly<Fp>(rng, R, 5, 3);
        CHECK((f + g - g) == f);
        CHECK((f + g) == (g + f));
        // strictly descending terms, no zero coefficients
        auto h = f * g;
        for (std::size_t i = 0; i < h.terms().size(); ++i) {
            CHECK(!h.terms()[i].first.is_zero());
            if (i + 1 < h.terms().size())
                CHECK(order_cmp(R->order, h.terms()[i].second, h.terms()[i + 1].second) > 0);
        }
    }
}

TEST_CASE("prime field agrees with rationals reduced mod p") {
    Rng rng(13);
    auto RQ = qring({"x", "y"});
    auto RP = fpring({"x", "y"}, TermOrder::grevlex(), 101);
    for (int it = 0; it < 100; ++it) {
        auto fq = random_poly<Rat>(rng, RQ, 4, 3);
        auto gq = random_poly<Rat>(rng, RQ, 4, 3);
        auto reduce = [&](const Polynomial<Rat>& p) {
            std::vector<Polynomial<Fp>::Term> terms;
            for (const auto& t : p.terms()) {
                mpz_class num = t.first.raw().get_num();
                mpz_class den = t.first.raw().get_den();
                Fp n(mpz_class(num % 101).get_si(), 101);
                Fp d(mpz_class(den % 101).get_si(), 101);
                terms.push_back({n / d, t.second});
            }
            return Polynomial<Fp>(RP, terms);
        };
        CHECK(reduce(fq * gq) == reduce(fq) * reduce(gq));
        CHECK(reduce(fq + gq) == reduce(fq) + reduce(gq));
    }
}

TEST_CASE("degree vectors under multigradings") {
    // d_u(c_j) = e_j fine grading
    auto R = make_ring({"c1", "c2", "c3"}, make_rationals(), TermOrder::grevlex(),
                       Multigrading({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    auto c1 = P<Rat>(R, "c1");
    auto rep = c1.degree_report(*R->grading);
    CHECK(rep.homogeneous);
    CHECK(rep.degree == std::vector<std::int64_t>{1, 0, 0});

    auto five = P<Rat>(R, "5");
    rep = five.degree_report(*R->grading);
    CHECK(rep.homogeneous);
    CHECK(rep.degree == std::vector<std::int64_t>{0, 0, 0});

    // c1 - c2 is inhomogeneous under the fine grading
    auto diff = P<Rat>(R, "c1 - c2");
    rep = diff.degree_report(*R->grading);
    CHECK(!rep.homogeneous);
    CHECK(rep.degree != rep.other_degree);

    // but homogeneous under the standard grading
    rep = diff.degree_report(Multigrading::standard(3));
    CHECK(rep.homogeneous);
}

TEST_CASE("polynomial printing") {
    auto R = qring({"x", "y", "z"});
    CHECK(P<Rat>(R, "x^3 - y*z").to_string() == "x^3 - y*z");
    CHECK(Polynomial<Rat>::zero(R).to_string() == "0");
    CHECK(P<Rat>(R, "-x + 2").to_string() == "-x + 2");
    CHECK(P<Rat>(R, "1/2*x").to_string() == "1/2*x");
}
