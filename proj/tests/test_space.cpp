#include <catch2/catch_amalgamated.hpp>

#include <gkn/braiding.hpp>
#include <gkn/space.hpp>

using namespace gkn;

namespace {

// Example 5.8: one plus block, a black -1 point with ghost 1, and the
// infinite -1 chain continuing from it.
BraidedSpaceSpec example58() {
    BraidedSpaceSpec s;
    s.name = "example58";
    s.blocks.push_back({"b", 1});
    s.points.push_back({"p", MonoScalar::minus_one()});
    PairData pd;
    pd.a = "p";
    pd.b = "b";
    pd.a_ab = a_for_ghost(1, Rational(1));
    s.pairs.push_back(pd);
    TailTemplate t;
    t.id = "t";
    t.kind = TailKind::AChain;
    t.from = "p";
    s.tails.push_back(t);
    return s;
}

} // namespace

TEST_CASE("validate basics") {
    BraidedSpaceSpec s;
    s.blocks.push_back({"b", 1});
    auto v = validate(s);
    CHECK(v.components().size() == 1);

    BraidedSpaceSpec bad = s;
    PairData pd;
    pd.a = "b";
    pd.b = "nope";
    bad.pairs.push_back(pd);
    CHECK_THROWS_AS(validate(bad), MalformedSpec);

    auto v58 = validate(example58());
    CHECK(v58.components().size() == 1); // connected
}

TEST_CASE("validate rejects misplaced a-values") {
    BraidedSpaceSpec s;
    s.points.push_back({"p", MonoScalar::minus_one()});
    s.points.push_back({"r", MonoScalar::minus_one()});
    PairData pd;
    pd.a = "p";
    pd.b = "r";
    pd.a_ab = Rational(1);
    s.pairs.push_back(pd);
    CHECK_THROWS_AS(validate(s), MalformedSpec);
}

TEST_CASE("interaction") {
    BraidedSpaceSpec s;
    s.blocks.push_back({"b", 1});
    s.points.push_back({"p", MonoScalar::minus_one()});
    PairData pd;
    pd.a = "p";
    pd.b = "b";

    SECTION("q and q inverse") {
        pd.q_ab = MonoScalar::indeterminate("q");
        pd.q_ba = MonoScalar::indeterminate("q", -1);
        s.pairs.push_back(pd);
        auto v = validate(s);
        CHECK(interaction(v, "b", "p").is_one());
        CHECK(interaction_is_weak(v, "b", "p"));
    }
    SECTION("minus one on both sides") {
        pd.q_ab = MonoScalar::minus_one();
        pd.q_ba = MonoScalar::minus_one();
        s.pairs.push_back(pd);
        auto v = validate(s);
        CHECK(interaction_is_weak(v, "b", "p"));
    }
    SECTION("zeta3 times 1") {
        pd.q_ab = MonoScalar::root_of_unity(3);
        s.pairs.push_back(pd);
        auto v = validate(s);
        CHECK(interaction(v, "b", "p") == MonoScalar::root_of_unity(3));
        CHECK_FALSE(interaction_is_weak(v, "b", "p"));
        CHECK_THROWS_AS(interaction(v, "b", "nope"), UnknownVertex);
    }
}

TEST_CASE("ghost") {
    BraidedSpaceSpec s;
    s.blocks.push_back({"bp", 1});
    s.blocks.push_back({"bm", -1});
    s.points.push_back({"p", MonoScalar::minus_one()});
    {
        PairData pd;
        pd.a = "p";
        pd.b = "bp";
        pd.a_ab = Rational(-1);
        s.pairs.push_back(pd);
    }
    {
        PairData pd;
        pd.a = "p";
        pd.b = "bm";
        pd.a_ab = Rational(3);
        s.pairs.push_back(pd);
    }
    auto v = validate(s);
    CHECK(ghost(v, "bp", "p") == 2); // -2 a_ij on a plus block
    CHECK(ghost_is_discrete(ghost(v, "bp", "p")));
    CHECK(ghost(v, "bm", "p") == 3); // a_ij on a minus block
    CHECK(ghost_is_discrete(ghost(v, "bm", "p")));

    BraidedSpaceSpec s2;
    s2.blocks.push_back({"b", 1});
    s2.points.push_back({"p", MonoScalar::minus_one()});
    auto v2 = validate(s2);
    CHECK(ghost(v2, "b", "p") == 0); // no edge
}

TEST_CASE("truncate example 5.8") {
    auto v = validate(example58());

    Selector s0;
    auto t0 = truncate(v, s0);
    CHECK(t0.points.size() == 1); // block + black point only
    CHECK(t0.blocks.size() == 1);
    CHECK(t0.is_finite());

    Selector s3;
    s3.tail_prefix["t"] = 3;
    auto t3 = truncate(v, s3);
    CHECK(t3.points.size() == 4); // theta = n+1 vertices
    // every added point is a -1 point joined by -1 edges
    auto vt = validate(t3);
    CHECK(vt.point("t.1").q == MonoScalar::minus_one());
    CHECK((vt.q("p", "t.1") * vt.q("t.1", "p")) == MonoScalar::minus_one());
    CHECK((vt.q("t.2", "t.3") * vt.q("t.3", "t.2")) == MonoScalar::minus_one());
    CHECK(vt.components().size() == 1);
}

TEST_CASE("truncate families") {
    BraidedSpaceSpec s;
    s.name = "fam";
    s.blocks.push_back({"b", 1});
    ComponentFamily f;
    f.id = "f";
    f.pattern.points.push_back({"x1", MonoScalar::minus_one()});
    f.pattern.points.push_back({"x2", MonoScalar::minus_one()});
    {
        PairData pd;
        pd.a = "x1";
        pd.b = "x2";
        pd.q_ab = MonoScalar::minus_one();
        f.pattern.pairs.push_back(pd);
    }
    f.attached = true;
    f.block = "b";
    f.at = "x1";
    f.ghost = 1;
    f.count = kOmega;
    s.families.push_back(f);

    auto v = validate(s);
    Selector sel;
    sel.family_count["f"] = 2;
    auto t = truncate(v, sel);
    CHECK(t.points.size() == 4); // two chains
    auto vt = validate(t);
    CHECK(ghost(vt, "b", "f.1.x1") == 1);
    CHECK(ghost(vt, "b", "f.2.x1") == 1);
    CHECK(vt.components().size() == 1);
}

TEST_CASE("truncate is monotone") {
    auto v = validate(example58());
    Selector small, big;
    small.tail_prefix["t"] = 2;
    big.tail_prefix["t"] = 5;
    CHECK(small.leq(big));
    auto ts = truncate(v, small);
    auto tb = truncate(v, big);
    auto vs = validate(ts);
    auto vb = validate(tb);
    for (const auto& p : ts.points) {
        CHECK(vb.is_point(p.id));
        CHECK(vb.point(p.id).q == p.q);
    }
    for (const auto& pr : ts.pairs) {
        CHECK(vb.q(pr.a, pr.b) == vs.q(pr.a, pr.b));
        CHECK(vb.a(pr.a, pr.b) == vs.a(pr.a, pr.b));
    }
}

TEST_CASE("braiding of a single point") {
    BraidedSpaceSpec s;
    s.points.push_back({"p", MonoScalar::minus_one()});
    auto b = braiding_matrix(s, RatField{});
    REQUIRE(b.d == 1);
    REQUIRE(b.img[0].size() == 1);
    auto [u, v, c] = b.img[0][0];
    CHECK(u == 0);
    CHECK(v == 0);
    CHECK(c == -1);
}

TEST_CASE("braiding of a plus block") {
    BraidedSpaceSpec s;
    s.blocks.push_back({"j", 1});
    auto b = braiding_matrix(s, RatField{});
    REQUIRE(b.d == 2);
    // c(x_j (x) x_j) = x_j (x) x_j
    REQUIRE(b.img[0].size() == 1);
    CHECK(b.img[0][0] == std::tuple<int, int, Rational>{0, 0, Rational(1)});
    // c(x_j (x) x_{j+1/2}) = (x_{j+1/2} + x_j) (x) x_j
    REQUIRE(b.img[1].size() == 2);
    CHECK(b.img[1][0] == std::tuple<int, int, Rational>{1, 0, Rational(1)});
    CHECK(b.img[1][1] == std::tuple<int, int, Rational>{0, 0, Rational(1)});
    // c(x_{j+1/2} (x) x_j) = x_j (x) x_{j+1/2}
    REQUIRE(b.img[2].size() == 1);
    CHECK(b.img[2][0] == std::tuple<int, int, Rational>{0, 1, Rational(1)});
    // c(x_{j+1/2} (x) x_{j+1/2}) = (x_{j+1/2} + x_j) (x) x_{j+1/2}
    REQUIRE(b.img[3].size() == 2);
    CHECK(b.img[3][0] == std::tuple<int, int, Rational>{1, 1, Rational(1)});
    CHECK(b.img[3][1] == std::tuple<int, int, Rational>{0, 1, Rational(1)});
}

TEST_CASE("braiding of a minus block satisfies the braid equation") {
    BraidedSpaceSpec s;
    s.blocks.push_back({"j", -1});
    auto b = braiding_matrix(s, RatField{});
    CHECK_NOTHROW(check_braid_equation(b)); // also checked on construction
}

TEST_CASE("block plus point with ghost") {
    BraidedSpaceSpec s;
    s.blocks.push_back({"j", 1});
    s.points.push_back({"i", MonoScalar::minus_one()});
    PairData pd;
    pd.a = "i";
    pd.b = "j";
    pd.q_ab = MonoScalar::root_of_unity(3);
    pd.q_ba = MonoScalar::root_of_unity(3, 2);
    pd.a_ab = Rational(1);
    s.pairs.push_back(pd);
    CycloField C3(3);
    auto b = braiding_matrix(s, C3);
    // labels: x_j, x_{j+1/2}, x_i; c(x_i (x) x_{j+1/2}) = q_ij (x_{j+1/2} + 1 x_j) (x) x_i
    auto& terms = b.img[2 * 3 + 1];
    REQUIRE(terms.size() == 2);
    CHECK(std::get<0>(terms[0]) == 1);
    CHECK(std::get<1>(terms[0]) == 2);
    CHECK(C3.eq(std::get<2>(terms[0]), C3.zeta(1)));
    CHECK(std::get<0>(terms[1]) == 0);
    CHECK(C3.eq(std::get<2>(terms[1]), C3.zeta(1)));
}

TEST_CASE("weak ghostless pairs braid trivially") {
    // interaction(j,i) = 1 and a_ij = 0 iff c_ji c_ij = id
    auto build = [](MonoScalar q_ab, MonoScalar q_ba, Rational a) {
        BraidedSpaceSpec s;
        s.blocks.push_back({"j", 1});
        s.points.push_back({"i", MonoScalar::minus_one()});
        PairData pd;
        pd.a = "i";
        pd.b = "j";
        pd.q_ab = q_ab;
        pd.q_ba = q_ba;
        pd.a_ab = a;
        s.pairs.push_back(pd);
        return braiding_matrix(s, CycloField(12));
    };
    std::vector<int> block_part{0, 1}, point_part{2};
    auto z = MonoScalar::root_of_unity(12);
    CHECK(pair_braiding_is_identity(build(z, z.inverse(), Rational(0)), point_part, block_part));
    CHECK_FALSE(
        pair_braiding_is_identity(build(z, z.inverse(), Rational(1)), point_part, block_part));
    CHECK_FALSE(pair_braiding_is_identity(build(z, z, Rational(0)), point_part, block_part));
}

TEST_CASE("U[n] fixture") {
    auto s2 = un_fixture(2, MonoScalar::one(), MonoScalar::minus_one());
    auto v2 = validate(s2);
    CHECK(s2.points.size() == 3);
    CHECK(v2.point("z1").q == MonoScalar::minus_one());
    CHECK(v2.point("z2").q == MonoScalar::minus_one());
    // q_{y z_j} q_{z_j y} = mu zeta^j
    CHECK((v2.q("y", "z1") * v2.q("z1", "y")) == MonoScalar::minus_one());
    CHECK((v2.q("y", "z2") * v2.q("z2", "y")).is_one());

    auto s3 = un_fixture(3, MonoScalar::one(), MonoScalar::minus_one());
    auto v3 = validate(s3);
    CHECK(v3.q("y", "z1") == MonoScalar::root_of_unity(3));
    CHECK(v3.q("z1", "z2") == MonoScalar::minus_one());
    CHECK(v3.q("z2", "z1") == MonoScalar::minus_one());
}

TEST_CASE("shift fixtures") {
    auto fx = shift_fixture(0, 1, 2, SetBraidingKind::Shift);
    const auto& b = fx.braiding;
    // c(v_0 (x) v_1) = v_2 (x) v_0 inside the enlarged ambient window
    int i0 = fx.window[0], i1 = fx.window[1];
    auto& terms = b.img[static_cast<size_t>(i0) * b.d + i1];
    REQUIRE(terms.size() == 1);
    CHECK(b.labels[std::get<0>(terms[0])] == "v_2");
    CHECK(b.labels[std::get<1>(terms[0])] == "v_0");

    auto rx = shift_fixture(0, 1, 2, SetBraidingKind::Reflect);
    const auto& r = rx.braiding;
    int j0 = rx.window[0], j1 = rx.window[1];
    auto& rterms = r.img[static_cast<size_t>(j0) * r.d + j1];
    REQUIRE(rterms.size() == 1);
    CHECK(r.labels[std::get<0>(rterms[0])] == "v_-1"); // 2*0 - 1
    CHECK(r.labels[std::get<1>(rterms[0])] == "v_0");
    auto& dterms = r.img[static_cast<size_t>(j1) * r.d + j1];
    REQUIRE(dterms.size() == 1);
    CHECK(r.labels[std::get<0>(dterms[0])] == "v_1"); // 2i - i = i
}
