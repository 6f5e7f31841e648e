#include <catch2/catch_amalgamated.hpp>

#include <gkn/braiding.hpp>
#include <gkn/space.hpp>
#include <gkn/symmetrizer.hpp>

using namespace gkn;

namespace {

Braiding<RatField> point_braiding(Rational q) {
    Braiding<RatField> b;
    b.d = 1;
    b.labels = {"x"};
    b.img.resize(1);
    b.img[0].emplace_back(0, 0, q);
    b.graded = true;
    b.degs = {0};
    b.shift = 0;
    return b;
}

Braiding<RatFuncField> point_braiding_t() {
    RatFuncField F("q");
    Braiding<RatFuncField> b(F);
    b.d = 1;
    b.labels = {"x"};
    b.img.resize(1);
    b.img[0].emplace_back(0, 0, F.t_power(1));
    return b;
}

BraidedSpaceSpec exterior_spec(int n) {
    BraidedSpaceSpec s;
    auto m1 = MonoScalar::minus_one();
    for (int i = 1; i <= n; ++i) s.points.push_back({"p" + std::to_string(i), m1});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            PairData pd;
            pd.a = "p" + std::to_string(i);
            pd.b = "p" + std::to_string(j);
            pd.q_ab = m1;
            pd.q_ba = m1;
            s.pairs.push_back(pd);
        }
    return s;
}

template <class F>
Braiding<F> with_trivial_grading(Braiding<F> b) {
    b.graded = true;
    b.degs.assign(b.d, 0);
    b.shift = 0;
    return b;
}

} // namespace

TEST_CASE("m_sigma basics") {
    auto b = point_braiding(Rational(7));
    auto id2 = m_sigma(b, 2, perm_identity(2));
    CHECK(id2.at(0, 0) == 1);
    auto s1 = m_sigma(b, 2, perm_transposition(2, 0));
    CHECK(s1.at(0, 0) == 7);
}

TEST_CASE("longest element is word independent") {
    BraidedSpaceSpec s;
    s.blocks.push_back({"j", 1});
    auto b = braiding_matrix(s, RatField{});
    auto w0 = m_sigma_word(b, 3, {0, 1, 0});
    auto w1 = m_sigma_word(b, 3, {1, 0, 1});
    CHECK(w0.equals(b.field, w1));
}

TEST_CASE("omega of a scalar point is the q-factorial") {
    auto b = point_braiding_t();
    const auto& F = b.field;
    auto om2 = omega(b, 2);
    // 1 + q
    CHECK(F.eq(om2.at(0, 0), F.add(F.one(), F.t_power(1))));
    auto om3 = omega(b, 3);
    // (1+q)(1+q+q^2)
    auto expect = F.mul(F.add(F.one(), F.t_power(1)),
                        F.add(F.add(F.one(), F.t_power(1)), F.t_power(2)));
    CHECK(F.eq(om3.at(0, 0), expect));
    // and the literal 6-term sum agrees
    auto lit3 = omega_literal(b, 3);
    CHECK(F.eq(lit3.at(0, 0), expect));
}

TEST_CASE("matsumoto invariance, exhaustive for n <= 4") {
    BraidedSpaceSpec bs;
    bs.blocks.push_back({"j", 1});
    bs.points.push_back({"i", MonoScalar::minus_one()});
    PairData pd;
    pd.a = "i";
    pd.b = "j";
    pd.a_ab = a_for_ghost(1, Rational(1));
    bs.pairs.push_back(pd);
    auto block_point = braiding_matrix(bs, RatField{});
    auto exterior = braiding_matrix(exterior_spec(2), RatField{});
    auto shift = shift_fixture(0, 1, 6, SetBraidingKind::Shift).braiding;

    std::vector<Braiding<RatField>> fixtures{point_braiding(Rational(3)), exterior, block_point,
                                             shift};
    for (const auto& b : fixtures) {
        for (int n = 2; n <= 4; ++n) {
            long side = 1;
            for (int k = 0; k < n; ++k) side *= b.d;
            if (side > 10000) continue;
            for (const auto& sigma : all_perms(n)) {
                auto words = all_reduced_words(sigma);
                REQUIRE(!words.empty());
                for (long col = 0; col < side; ++col) {
                    auto ref = braid_apply_word_sparse(b, n, words[0], col);
                    for (size_t w = 1; w < words.size(); ++w) {
                        auto img = braid_apply_word_sparse(b, n, words[w], col);
                        REQUIRE(img.size() == ref.size());
                        for (const auto& [idx, val] : ref) {
                            auto it = img.find(idx);
                            REQUIRE(it != img.end());
                            CHECK(b.field.eq(it->second, val));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("recursion agrees with the literal sum") {
    BraidedSpaceSpec bs;
    bs.blocks.push_back({"j", -1});
    auto minus_block = braiding_matrix(bs, RatField{});
    auto exterior = braiding_matrix(exterior_spec(2), RatField{});
    std::vector<Braiding<RatField>> fixtures{point_braiding(Rational(5)), exterior, minus_block};
    for (const auto& b : fixtures)
        for (int n = 2; n <= 4; ++n)
            CHECK(omega(b, n).equals(b.field, omega_literal(b, n)));
}

TEST_CASE("nichols dimensions of a zeta_3 point") {
    CycloField C3(3);
    Braiding<CycloField> b(C3);
    b.d = 1;
    b.labels = {"x"};
    b.img.resize(1);
    b.img[0].emplace_back(0, 0, C3.zeta());
    auto dims = nichols_dims(b, 3);
    CHECK(dims == std::vector<long>{1, 1, 1, 0});
}

TEST_CASE("nichols dimensions of roots of unity truncate at the order") {
    // dim B^n(point, q in G'_N) = 1 for n < N and 0 for n >= N
    for (long N : {2L, 3L, 4L, 6L}) {
        CycloField C(N);
        Braiding<CycloField> b(C);
        b.d = 1;
        b.labels = {"x"};
        b.img.resize(1);
        b.img[0].emplace_back(0, 0, C.zeta());
        auto dims = nichols_dims(b, static_cast<int>(N) + 1);
        for (long n = 0; n <= N + 1; ++n) CHECK(dims[n] == (n < N ? 1 : 0));
    }
}

TEST_CASE("nichols dimensions of the rank 3 exterior algebra") {
    auto b = braiding_matrix(exterior_spec(3), RatField{});
    auto dims = nichols_dims(b, 4);
    CHECK(dims == std::vector<long>{1, 3, 3, 1, 0});
}

TEST_CASE("nichols dimensions of the plus block") {
    BraidedSpaceSpec bs;
    bs.blocks.push_back({"j", 1});
    auto b = braiding_matrix(bs, RatField{});
    auto dims = nichols_dims(b, 5);
    CHECK(dims == std::vector<long>{1, 2, 3, 4, 5, 6});
    auto literal = nichols_dims(b, 5, {}, OmegaMode::LiteralSum);
    CHECK(literal == dims);
}

TEST_CASE("graded injectivity of the shift braiding") {
    for (int n = 2; n <= 4; ++n) {
        auto fx = shift_fixture(0, 1, n * (n - 1) / 2, SetBraidingKind::Shift);
        CHECK(graded_injectivity(fx.braiding, n, fx.window));
    }
}

TEST_CASE("graded injectivity fails where the Nichols algebra truncates") {
    auto p = point_braiding(Rational(-1));
    CHECK_FALSE(graded_injectivity(p, 2, {0}));

    auto ext2 = with_trivial_grading(braiding_matrix(exterior_spec(2), RatField{}));
    std::vector<int> window{0, 1};
    CHECK_FALSE(graded_injectivity(ext2, 3, window));
}

TEST_CASE("grading violations are reported") {
    auto p = point_braiding(Rational(-1));
    p.shift = 1; // wrong declaration
    CHECK_THROWS_AS(graded_injectivity(p, 2, {0}), GradingViolation);
}

TEST_CASE("budget guard") {
    auto b = braiding_matrix(exterior_spec(3), RatField{});
    SymmetrizerBudget tiny{10};
    CHECK_THROWS_AS(omega(b, 3, tiny), BudgetExceeded);
}
