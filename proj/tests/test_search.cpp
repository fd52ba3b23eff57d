#include <doctest.h>

#include "zetaforge/search.hpp"

using namespace zetaforge;

namespace {

std::vector<std::string> names(const std::vector<SumTerm>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts)
        out.push_back(t.str());
    return out;
}

// (zeta_coeff, [(term, coeff)...]) canonical key for set comparison
std::set<std::string> relation_keys(const HuntReport& rep) {
    std::set<std::string> keys;
    for (const auto& r : rep.relations) {
        std::string k;
        for (size_t i = 0; i < r.terms.size(); ++i)
            k += r.terms[i].str() + ":" + r.coefficients[i].get_str() + ";";
        keys.insert(k);
    }
    return keys;
}

}  // namespace

TEST_CASE("enumerate_basis weight 4 mu") {
    auto b = enumerate_basis(4, TermKind::Mu);
    CHECK(names(b) == std::vector<std::string>{"mu(4,[])", "mu(2,[2])"});
}

TEST_CASE("enumerate_basis weight 7 lambda") {
    auto b = enumerate_basis(7, TermKind::Lambda);
    CHECK(names(b) == std::vector<std::string>{"lambda(7,[])", "lambda(5,[2])",
                                               "lambda(3,[4])", "lambda(3,[2,2])"});
}

TEST_CASE("enumerate_basis weight 9 lambda") {
    auto b = enumerate_basis(9, TermKind::Lambda);
    CHECK(names(b) == std::vector<std::string>{
                          "lambda(9,[])", "lambda(7,[2])", "lambda(5,[4])",
                          "lambda(5,[2,2])", "lambda(3,[6])", "lambda(3,[4,2])",
                          "lambda(3,[2,2,2])"});
}

TEST_CASE("enumerate_basis matches a partition-counting oracle") {
    // number of terms = sum over admissible m of p_even(weight - m)
    auto p_even = [](int n, auto&& self) -> int {
        if (n < 0 || n % 2 != 0)
            return 0;
        // partitions into even parts >= 2 == partitions of n/2
        std::vector<std::vector<int>> table(static_cast<size_t>(n / 2) + 1,
                                            std::vector<int>(static_cast<size_t>(n / 2) + 1, 0));
        for (size_t cap = 0; cap <= static_cast<size_t>(n / 2); ++cap)
            table[0][cap] = 1;
        for (size_t v = 1; v <= static_cast<size_t>(n / 2); ++v)
            for (size_t cap = 1; cap <= static_cast<size_t>(n / 2); ++cap)
                table[v][cap] = table[v][cap - 1] + (v >= cap ? table[v - cap][cap] : 0);
        (void)self;
        return table[static_cast<size_t>(n / 2)][static_cast<size_t>(n / 2)];
    };
    for (int w = 3; w <= 13; w += 2) {
        int expected = 0;
        for (int m = 3; m <= w; m += 2)
            expected += p_even(w - m, p_even);
        CHECK(enumerate_basis(w, TermKind::Lambda).size() == static_cast<size_t>(expected));
    }
    CHECK(enumerate_basis(2, TermKind::Lambda).empty());
}

TEST_CASE("hunt weight 3: the Apery relation") {
    SearchConfig cfg;
    cfg.weight = 3;
    HuntReport rep = hunt(cfg);
    REQUIRE(rep.relations.size() == 1);
    CHECK(rep.relations[0].coefficients == std::vector<mpz_class>{2, -5});
    CHECK(rep.relations[0].terms[1].str() == "lambda(3,[])");
}

TEST_CASE("hunt weight 4 reproduces both table relations") {
    SearchConfig cfg;
    cfg.weight = 4;
    HuntReport rep = hunt(cfg);
    CHECK(relation_keys(rep) ==
          std::set<std::string>{"zeta(4):17;mu(4,[]):-36;", "zeta(4):5;mu(2,[2]):-108;"});
}

TEST_CASE("hunt weight 5 finds only the Koecher-form relation") {
    SearchConfig cfg;
    cfg.weight = 5;
    cfg.digits = 200;
    HuntReport rep = hunt(cfg);
    REQUIRE(rep.relations.size() == 1);
    CHECK(relation_keys(rep) ==
          std::set<std::string>{"zeta(5):2;lambda(5,[]):-4;lambda(3,[2]):5;"});
    // both simple forms were certified away first
    CHECK(rep.certificates.size() == 2);
    for (const auto& c : rep.certificates)
        CHECK(c.cert.norm_bound > BigReal::of_long(1, c.cert.norm_bound.prec()) * 1000000000L);
}

TEST_CASE("hunt is deterministic") {
    SearchConfig cfg;
    cfg.weight = 6;
    cfg.digits = 150;
    HuntReport a = hunt(cfg);
    HuntReport b = hunt(cfg);
    REQUIRE(a.relations.size() == b.relations.size());
    for (size_t i = 0; i < a.relations.size(); ++i) {
        CHECK(a.relations[i].coefficients == b.relations[i].coefficients);
        CHECK(names(a.relations[i].terms) == names(b.relations[i].terms));
    }
}

TEST_CASE("exclude_simple_form") {
    PrecisionContext ctx = ctx_new(120);
    auto r5 = exclude_simple_form(5, ctx);
    CHECK(r5.status == PslqStatus::Excluded);
    REQUIRE(r5.certificate.has_value());
    CHECK(r5.term.str() == "lambda(5,[])");

    auto r3 = exclude_simple_form(3, ctx);
    CHECK(r3.status == PslqStatus::Found);
    REQUIRE(r3.relation.has_value());
    CHECK(r3.relation->coefficients == std::vector<mpz_class>{2, -5});

    auto r2 = exclude_simple_form(2, ctx);
    REQUIRE(r2.relation.has_value());
    CHECK(r2.relation->coefficients == std::vector<mpz_class>{1, -3});
}

TEST_CASE("check_redundancy recovers the weight-7 interrelation") {
    PrecisionContext ctx = ctx_new(120);
    auto eb = eval_basis({SumTerm::lambda(5, {2}), SumTerm::lambda(3, {2, 2}),
                          SumTerm::lambda(3, {4}), SumTerm::lambda(7, {})},
                         ctx);
    auto r = check_redundancy(eb.values, ctx);
    REQUIRE(r.status == PslqStatus::Found);
    // -2 l(5,P2) + (5/4) l(3,P2^2) - (55/4) l(3,P4) - (1/2) l(7,P0) = 0, cleared by 4
    CHECK(r.coefficients == std::vector<mpz_class>{8, -5, 55, 2});
}

TEST_CASE("check_redundancy links the two weight-4 sums through zeta(4)") {
    // 17 z(4) = 36 mu(4,P0) and 5 z(4) = 108 mu(2,P2) force 5 mu(4,P0) = 51 mu(2,P2).
    PrecisionContext ctx = ctx_new(120);
    auto eb = eval_basis({SumTerm::mu(4, {}), SumTerm::mu(2, {2})}, ctx);
    auto r = check_redundancy(eb.values, ctx);
    REQUIRE(r.status == PslqStatus::Found);
    CHECK(r.coefficients == std::vector<mpz_class>{5, -51});
}

TEST_CASE("check_redundancy certifies independent pairs") {
    PrecisionContext ctx = ctx_new(120);
    auto eb = eval_basis({SumTerm::lambda(5, {2}), SumTerm::lambda(3, {4})}, ctx);
    auto r = check_redundancy(eb.values, ctx);
    CHECK(r.status == PslqStatus::Excluded);
}

TEST_CASE("check_redundancy trivial proportionality") {
    PrecisionContext ctx = ctx_new(60);
    BigReal x = pi(ctx);
    auto r = check_redundancy({x, x * 2}, ctx);
    REQUIRE(r.status == PslqStatus::Found);
    CHECK(r.coefficients == std::vector<mpz_class>{2, -1});
}

TEST_CASE("reported relations are minimal") {
    SearchConfig cfg;
    cfg.weight = 7;
    cfg.digits = 160;
    HuntReport rep = hunt(cfg);
    PrecisionContext ctx = ctx_new(rep.digits);
    auto eb = eval_basis(rep.basis, ctx);
    BigReal zv = zeta_int(7, ctx);
    for (const auto& rel : rep.relations) {
        if (rel.terms.size() <= 2)
            continue;
        for (size_t drop = 1; drop < rel.terms.size(); ++drop) {
            std::vector<BigReal> vals{zv};
            for (size_t i = 1; i < rel.terms.size(); ++i) {
                if (i == drop)
                    continue;
                for (size_t b = 0; b < rep.basis.size(); ++b)
                    if (rep.basis[b] == rel.terms[i])
                        vals.push_back(eb.values[b]);
            }
            auto r = pslq(vals, ctx, cfg.max_norm);
            CHECK(r.status == PslqStatus::Excluded);
        }
    }
}
