#include <catch2/catch_amalgamated.hpp>

#include <hodge/degeneration.hpp>
#include <hodge/weight2.hpp>
#include <hodge/weight3.hpp>

#include "oracle_helpers.hpp"

using namespace hodge;

namespace {

// independent check of a witness: admissible per-weight diamonds whose
// spread sum reproduces the target
bool witness_is_valid(const HodgeDiamond& from, const HodgeDiamond& to,
                      const DegenerationWitness& w) {
    const int r = from.weight();
    const auto pd = primitive_decomposition(from);
    if (static_cast<int>(w.per_weight.size()) != r + 1) return false;
    Grid sum(static_cast<std::size_t>(r) + 1, std::vector<int>(static_cast<std::size_t>(r) + 1, 0));
    for (int weight = 0; weight <= r; ++weight) {
        const auto& e = w.per_weight[static_cast<std::size_t>(weight)];
        if (!(e.hodge_vector() == pd.parts[static_cast<std::size_t>(weight)])) return false;
        if (!oracle::admissible(e.hodge_vector().entries(), e.grid())) return false;
        for (int a = 0; a + weight <= r; ++a)
            for (int p = 0; p <= weight; ++p)
                for (int q = 0; q <= weight; ++q) sum[p + a][q + a] += e.entry(p, q);
    }
    return sum == to.grid();
}

} // namespace

TEST_CASE("pure diamond degenerates to the hyperbolic type") {
    const HodgeVector h{1, 2, 1};
    const auto pure = pure_diamond(h);
    const HodgeDiamond d01(h, Grid{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    const auto w = degeneration_witness(pure, d01);
    REQUIRE(w.has_value());
    CHECK(witness_is_valid(pure, d01, *w));
    CHECK_FALSE(is_degeneration(d01, pure));
}

TEST_CASE("the relation is reflexive on every enumerated diamond") {
    for (int r = 0; r <= 3; ++r)
        for (const auto& hv : oracle::all_hodge_vectors(r, 4)) {
            const HodgeVector h(hv);
            for (const auto& d : enumerate_admissible(h)) {
                const auto w = degeneration_witness(d, d);
                REQUIRE(w.has_value());
                CHECK(witness_is_valid(d, d, *w));
            }
        }
}

TEST_CASE("mismatched Hodge vectors are rejected") {
    const auto a = pure_diamond(HodgeVector{1, 2, 1});
    const auto b = pure_diamond(HodgeVector{1, 0, 1});
    CHECK_THROWS_AS(is_degeneration(a, b), input_error);
}

TEST_CASE("the non-transitive Calabi-Yau triple at h^1 = 2") {
    const HodgeVector h{1, 2, 2, 1};
    const auto ii0 = weight3_diamond(h, {0, 0, 1, 0});
    const auto ii1 = weight3_diamond(h, {0, 0, 1, 1});
    const auto iv1 = weight3_diamond(h, {1, 0, 0, 1});
    CHECK(is_degeneration(ii0, ii1));
    CHECK(is_degeneration(ii1, iv1));
    CHECK_FALSE(is_degeneration(ii0, iv1));
}

TEST_CASE("weight-2 spot checks against the closed form") {
    const HodgeVector h{2, 3, 2};
    const auto d01 = weight2_diamond(h, {0, 1});
    const auto d11 = weight2_diamond(h, {1, 1});
    const auto d10 = weight2_diamond(h, {1, 0});
    CHECK(is_degeneration(d01, d11));
    CHECK_FALSE(is_degeneration(d10, d01));
}

TEST_CASE("engine agrees with the degeneration-count calculus in weight 2") {
    for (int h0 = 1; h0 <= 2; ++h0)
        for (int h1 = 1; h1 <= 5; ++h1) {
            const HodgeVector h{h0, h1, h0};
            const auto diamonds = enumerate_admissible(h);
            for (const auto& from : diamonds)
                for (const auto& to : diamonds) {
                    const auto pf = weight2_params(from);
                    const auto pt = weight2_params(to);
                    CHECK(is_degeneration(from, to) ==
                          oracle::weight2_klm(h0, h1, pf.a, pf.b, pt.a, pt.b));
                }
        }
}

TEST_CASE("witnesses are valid wherever the relation holds, r <= 3") {
    for (int r = 2; r <= 3; ++r)
        for (const auto& hv : oracle::all_hodge_vectors(r, 2)) {
            const HodgeVector h(hv);
            const auto diamonds = enumerate_admissible(h);
            for (const auto& from : diamonds)
                for (const auto& to : diamonds)
                    if (const auto w = degeneration_witness(from, to)) {
                        CHECK(witness_is_valid(from, to, *w));
                    }
        }
}
