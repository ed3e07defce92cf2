#include <catch_amalgamated.hpp>

#include <legendrian/legendrian.hpp>

#include "support/disk_oracle.hpp"
#include "support/oracles.hpp"

using namespace legendrian;

namespace {

std::set<std::vector<std::string>> named_d(const DGA& a, const std::string& gen) {
    std::set<std::vector<std::string>> out;
    for (std::size_t i = 0; i < a.generators.size(); ++i) {
        if (a.generators[i].name != gen) continue;
        for (const auto& w : a.d[i]) {
            std::vector<std::string> s;
            for (int x : w) s.push_back(a.generators[x].name);
            out.insert(s);
        }
    }
    return out;
}

std::pair<int, int> parity_counts(const DGA& a) {
    int even = 0, odd = 0;
    for (const auto& g : a.generators) (g.degree % 2 == 0 ? even : odd)++;
    return {even, odd};
}

}  // namespace

TEST_CASE("unknot: two lobe disks cancel") {
    const LagrangianDiagram l = ng_resolve(unknot_grid());
    const DiskSet ds = admissible_disks(l);
    std::int64_t total = 0;
    for (const auto& d : ds.disks) {
        CHECK(d.positive == 0);
        CHECK(d.negatives.empty());
        total += d.count;
    }
    CHECK(total == 2);
    const DGA a = dga_from_disks(l, ds);
    REQUIRE(a.generators.size() == 1);
    CHECK(a.generators[0].degree == 1);
    CHECK(a.d[0].empty());
    CHECK(verify_d_squared(a).ok);
    CHECK(graded_chord_signature(a) == -1);
}

TEST_CASE("diagram without crossings has no disks") {
    const DiskSet ds = admissible_disks(LagrangianDiagram{});
    CHECK(ds.disks.empty());
}

TEST_CASE("trefoil DGA") {
    const DGA a = compute_dga(ng_resolve(torus_knot_grid(1)));
    REQUIRE(a.generators.size() == 5);
    CHECK(parity_counts(a) == std::pair{3, 2});
    CHECK(a.modulus == 0);
    for (const auto& g : a.generators) CHECK(g.degree == (g.name[0] == 'q' ? 1 : 0));
    using V = std::vector<std::string>;
    CHECK(named_d(a, "q1") == std::set<V>{{}, {"c1"}, {"c3"}, {"c3", "c2", "c1"}});
    CHECK(named_d(a, "q2") == std::set<V>{{}, {"c1"}, {"c3"}, {"c1", "c2", "c3"}});
    for (const char* c : {"c1", "c2", "c3"}) CHECK(named_d(a, c).empty());
    CHECK(verify_d_squared(a).ok);
    CHECK(graded_chord_signature(a) == 1);
}

TEST_CASE("T5 has five crossings and two cusp chords") {
    const DGA a = compute_dga(ng_resolve(torus_knot_grid(2)));
    CHECK(a.generators.size() == 7);
    const auto [even, odd] = parity_counts(a);
    CHECK(even - odd == 3);
    CHECK(verify_d_squared(a).ok);
}

TEST_CASE("graded chord signature equals tb on torus knots") {
    for (int k = 1; k <= 4; ++k) {
        const DGA a = compute_dga(ng_resolve(torus_knot_grid(k)));
        CHECK(graded_chord_signature(a) == 2 * k - 1);
        CHECK(verify_d_squared(a).ok);
        CHECK(degree_violations(a).empty());
    }
}

TEST_CASE("stabilized unknot is graded mod 2") {
    const DGA a = compute_dga(ng_resolve(stabilized_unknot_grid()));
    CHECK(a.modulus == 2);
    CHECK(verify_d_squared(a).ok);
    CHECK(degree_violations(a).empty());
    CHECK(to_json(a)["generators"][0].contains("reduced_degree"));
}

TEST_CASE("corrupted differential is caught with a witness") {
    std::mt19937_64 rng(8);
    int caught = 0;
    for (int i = 0; i < 40 && caught < 3; ++i) {
        const DGA a = compute_dga(ng_resolve(oracle::random_grid(rng, 4, 7)));
        for (std::size_t x = 0; x < a.d.size() && caught < 3; ++x)
            for (std::size_t m = 0; m < a.d[x].size(); ++m) {
                DGA b = a;
                b.d[x].erase(b.d[x].begin() + m);
                const DSquaredReport r = verify_d_squared(b);
                if (r.ok) continue;
                ++caught;
                CHECK(r.generator >= 0);
                CHECK_FALSE(r.survivors.empty());
                // the witness is a genuine survivor of d^2 on that generator
                std::set<Word> acc;
                for (const auto& w : b.d[r.generator])
                    for (const auto& t : differential(b, w))
                        if (!acc.erase(t)) acc.insert(t);
                CHECK(std::vector<Word>(acc.begin(), acc.end()) == r.survivors);
                break;
            }
    }
    CHECK(caught == 3);
}

TEST_CASE("d^2 = 0 and degree drop on random grids") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        const GridDiagram g = oracle::random_grid(rng, 2, 7);
        INFO(to_json(g).dump());
        const DGA a = compute_dga(ng_resolve(g));
        CHECK(verify_d_squared(a).ok);
        CHECK(degree_violations(a).empty());
        for (std::size_t c = 0; c < a.d.size(); ++c)
            for (const auto& w : a.d[c]) {
                int deg = 0;
                for (int x : w) deg += a.generators[x].degree;
                CHECK(a.reduce(deg) == a.reduce(a.generators[c].degree - 1));
            }
        if (a.modulus == 0) CHECK(graded_chord_signature(a) == thurston_bennequin(g));
    }
}

TEST_CASE("d^2 = 0 on random fronts") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 150; ++i) {
        const Front f = oracle::random_front(rng, 2 + static_cast<int>(rng() % 9));
        INFO(detail::front_string(f));
        const FrontInfo info = analyze(f);
        const LagrangianDiagram l = ng_resolve(f);
        CHECK(tb_signed_chord_sum(l) == info.tb());
        const DGA a = compute_dga(l);
        CHECK(verify_d_squared(a).ok);
        CHECK(degree_violations(a).empty());
    }
}

TEST_CASE("disk search matches an unpruned reference enumeration") {
    std::mt19937_64 rng(31337);
    int compared = 0;
    for (int i = 0; i < 120; ++i) {
        const GridDiagram g = oracle::random_grid(rng, 3, 6);
        const LagrangianDiagram l = ng_resolve(g);
        if (l.crossings.size() > 12) continue;
        INFO(to_json(g).dump());
        std::map<std::pair<int, std::vector<int>>, Rational> mine;
        for (const auto& d : admissible_disks(l).disks) mine[{d.positive, d.negatives}] = d.count;
        std::map<std::pair<int, std::vector<int>>, Rational> ref;
        for (const auto& [k, v] : oracle::ReferenceDisks(l.events, 6, 50000000).run())
            if (v != 0) ref[k] = v;
        CHECK(mine == ref);
        ++compared;
    }
    CHECK(compared > 50);
    for (int k = 1; k <= 2; ++k) {
        const LagrangianDiagram l = ng_resolve(torus_knot_grid(k));
        std::map<std::pair<int, std::vector<int>>, Rational> mine, ref;
        for (const auto& d : admissible_disks(l).disks) mine[{d.positive, d.negatives}] = d.count;
        for (const auto& [key, v] : oracle::ReferenceDisks(l.events, 6, 50000000).run())
            if (v != 0) ref[key] = v;
        CHECK(mine == ref);
    }
}

TEST_CASE("disk search respects its node budget") {
    const LagrangianDiagram l = ng_resolve(torus_knot_grid(3));
    CHECK_THROWS_AS(admissible_disks(l, 5), BudgetExceeded);
}

TEST_CASE("DGA JSON round trip") {
    const DGA a = compute_dga(ng_resolve(torus_knot_grid(1)));
    const nlohmann::json j = to_json(a);
    CHECK(j["d"]["q1"].size() == 4);
    bool unit = false;
    for (const auto& w : j["d"]["q1"]) unit = unit || w == nlohmann::json::array({"1"});
    CHECK(unit);
    const DGA b = dga_from_json(j);
    CHECK(to_json(b) == j);
}
