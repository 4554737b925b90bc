#include <catch2/catch_amalgamated.hpp>

#include "bipair/lie.hpp"

using namespace bipair;

namespace {
Weight eps_weight(const RootSystem& rs, Vec c) { return Weight(rs.type(), WBasis::epsilon, std::move(c)); }
}  // namespace

TEST_CASE("positive root counts") {
    CHECK(RootSystem::build(LieType(Family::A, 3)).positive_roots().size() == 6);   // 12 roots total
    CHECK(RootSystem::build(LieType(Family::B, 4)).positive_roots().size() == 16);  // l^2
    CHECK(RootSystem::build(LieType(Family::C, 3)).positive_roots().size() == 9);
    CHECK(RootSystem::build(LieType(Family::D, 4)).positive_roots().size() == 12);  // l(l-1)
    CHECK(RootSystem::build(LieType(Family::G2, 2)).positive_roots().size() == 6);
}

TEST_CASE("B2 positive roots match the printed set") {
    auto rs = RootSystem::build(LieType(Family::B, 2));
    std::set<Vec> got;
    for (const auto& r : rs.positive_roots()) got.insert(r.coords);
    std::set<Vec> want{{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(got == want);
}

TEST_CASE("simple roots match the paper's choices") {
    auto a3 = RootSystem::build(LieType(Family::A, 3));
    CHECK(a3.simple_roots()[0].coords == Vec{Rat(1), Rat(-1), Rat(0), Rat(0)});
    auto b3 = RootSystem::build(LieType(Family::B, 3));
    CHECK(b3.simple_roots()[2].coords == Vec{Rat(0), Rat(0), Rat(1)});
    auto d4 = RootSystem::build(LieType(Family::D, 4));
    CHECK(d4.simple_roots()[3].coords == Vec{Rat(0), Rat(0), Rat(1), Rat(1)});
    auto c3 = RootSystem::build(LieType(Family::C, 3));
    CHECK(c3.simple_roots()[2].coords == Vec{Rat(0), Rat(0), Rat(2)});
}

TEST_CASE("invalid types refused") {
    CHECK_THROWS_AS(LieType(Family::D, 2), Error);
    CHECK_THROWS_AS(LieType(Family::G2, 3), Error);
    CHECK_THROWS_AS(LieType(Family::A, 0), Error);
    CHECK(LieType::parse("B4").str() == "B4");
}

TEST_CASE("bilinear form worked values") {
    auto a1 = RootSystem::build(LieType(Family::A, 1));
    // A_1, alpha_1 = eps1 - eps2: printed formula gives 1/2
    CHECK(a1.norm2(a1.simple_roots()[0]) == Rat(1, 2));
    // rho = omega_1 = (eps1 - eps2)/2, last-coordinate-zero representative (1/2 shifted)
    CHECK(a1.rho() == a1.scale(a1.simple_roots()[0], Rat(1, 2)));

    // A_3, lambda = -eps3 - 3 eps4: |lambda|^2 = 3/4  (Section 5.3 example)
    auto a3 = RootSystem::build(LieType(Family::A, 3));
    auto lam = eps_weight(a3, {Rat(0), Rat(0), Rat(-1), Rat(-3)});
    CHECK(a3.norm2(lam) == Rat(3, 4));

    // zero weight pairs to zero
    CHECK(a3.bilinear(lam, a3.zero()) == Rat(0));
}

TEST_CASE("coroot pairings") {
    auto a2 = RootSystem::build(LieType(Family::A, 2));
    for (const auto& s : a2.simple_roots()) CHECK(a2.coroot_pairing(s, s) == Rat(2));
    // fundamental-weight duality
    CHECK(a2.coroot_pairing(a2.fundamental_weight(1), a2.simple_roots()[1]) == Rat(0));
    CHECK(a2.coroot_pairing(a2.fundamental_weight(1), a2.simple_roots()[0]) == Rat(1));

    // B2 Dynkin edge rule: B(alpha, beta^vee) = -2, B(beta, alpha^vee) = -1
    auto b2 = RootSystem::build(LieType(Family::B, 2));
    const auto& long_root = b2.simple_roots()[0];
    const auto& short_root = b2.simple_roots()[1];
    CHECK(b2.coroot_pairing(long_root, short_root) == Rat(-2));
    CHECK(b2.coroot_pairing(short_root, long_root) == Rat(-1));

    CHECK_THROWS_AS(b2.coroot_pairing_checked(long_root, b2.zero()), Error);
}

TEST_CASE("Cartan matrices match the Dynkin edge rules up to rank 8") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        for (int l = (f == Family::D ? 3 : 1); l <= 8; ++l) {
            auto rs = RootSystem::build(LieType(f, l));
            for (int i = 1; i <= l; ++i)
                for (int j = 1; j <= l; ++j) {
                    Rat cij = rs.coroot_pairing(rs.simple_roots()[i - 1], rs.simple_roots()[j - 1]);
                    CHECK(is_integer(cij));
                    if (i == j) CHECK(cij == Rat(2));
                    else CHECK(cij <= Rat(0));
                    // chain edges are single bonds except the B/C tail
                    if (f == Family::A && std::abs(i - j) == 1) CHECK(cij == Rat(-1));
                }
        }
    }
    auto g2 = RootSystem::build(LieType(Family::G2, 2));
    CHECK(g2.coroot_pairing(g2.simple_roots()[0], g2.simple_roots()[1]) == Rat(-1));
    CHECK(g2.coroot_pairing(g2.simple_roots()[1], g2.simple_roots()[0]) == Rat(-3));
    for (const auto& s : g2.simple_roots()) CHECK(g2.coroot_pairing(s, s) == Rat(2));
}

TEST_CASE("rho closed forms") {
    auto b3 = RootSystem::build(LieType(Family::B, 3));
    CHECK(b3.rho().coords == Vec{Rat(5, 2), Rat(3, 2), Rat(1, 2)});
    auto d4 = RootSystem::build(LieType(Family::D, 4));
    CHECK(d4.rho().coords == Vec{Rat(3), Rat(2), Rat(1), Rat(0)});
    auto c3 = RootSystem::build(LieType(Family::C, 3));
    CHECK(c3.rho().coords == Vec{Rat(3), Rat(2), Rat(1)});
    auto a3 = RootSystem::build(LieType(Family::A, 3));
    CHECK(a3.rho().coords == Vec{Rat(3), Rat(2), Rat(1), Rat(0)});
}

TEST_CASE("basis conversions round-trip") {
    auto a2 = RootSystem::build(LieType(Family::A, 2));
    Weight w(a2.type(), WBasis::fundamental, {Rat(1), Rat(0)});
    Weight e = a2.convert(w, WBasis::epsilon);
    CHECK(e.coords == Vec{Rat(1), Rat(0), Rat(0)});  // last-coordinate-zero convention
    CHECK(a2.convert(e, WBasis::fundamental).coords == w.coords);

    auto d4 = RootSystem::build(LieType(Family::D, 4));
    Weight omega1 = d4.fundamental_weight(1);
    CHECK(omega1.coords == Vec{Rat(1), Rat(0), Rat(0), Rat(0)});

    // round-trip on a random-ish rational weight
    auto b3 = RootSystem::build(LieType(Family::B, 3));
    Weight q(b3.type(), WBasis::fundamental, {Rat(5, 2), Rat(-1), Rat(7, 3)});
    CHECK(b3.convert(b3.convert(q, WBasis::epsilon), WBasis::fundamental).coords == q.coords);
}

TEST_CASE("every positive root is a nonnegative integer combination of simple roots") {
    for (auto t : {LieType(Family::A, 4), LieType(Family::B, 3), LieType(Family::C, 4),
                   LieType(Family::D, 5), LieType(Family::G2, 2)}) {
        auto rs = RootSystem::build(t);
        for (size_t k = 0; k < rs.positive_roots().size(); ++k)
            for (const auto& c : rs.root_expansion(k)) CHECK(is_nonneg_integer(c));
    }
}

TEST_CASE("highest root expansion gives the grading coefficients") {
    auto a3 = RootSystem::build(LieType(Family::A, 3));
    CHECK(a3.simple_expansion(a3.highest_root()) == Vec{Rat(1), Rat(1), Rat(1)});
    auto b3 = RootSystem::build(LieType(Family::B, 3));
    CHECK(b3.simple_expansion(b3.highest_root()) == Vec{Rat(1), Rat(2), Rat(2)});
    auto c3 = RootSystem::build(LieType(Family::C, 3));
    CHECK(c3.simple_expansion(c3.highest_root()) == Vec{Rat(2), Rat(2), Rat(1)});
    auto d4 = RootSystem::build(LieType(Family::D, 4));
    CHECK(d4.simple_expansion(d4.highest_root()) == Vec{Rat(1), Rat(2), Rat(1), Rat(1)});
    auto g2 = RootSystem::build(LieType(Family::G2, 2));
    CHECK(g2.simple_expansion(g2.highest_root()) == Vec{Rat(3), Rat(2)});
}

TEST_CASE("G2 self-test: Killing normalization") {
    auto g2 = RootSystem::build(LieType(Family::G2, 2));
    // long-root norm under tr(ad . ad): highest root is long, |theta|^2 = 1/4
    CHECK(g2.norm2(g2.highest_root()) == Rat(1, 4));
    CHECK(g2.is_long_root(g2.simple_roots()[1]));
    CHECK(!g2.is_long_root(g2.simple_roots()[0]));
}
