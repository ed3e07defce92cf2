#include <bit>

#include <catch_amalgamated.hpp>

#include <legendrian/legendrian.hpp>

#include "support/oracles.hpp"

using namespace legendrian;

namespace {

using Dense = std::vector<std::vector<int>>;

// Every assignment on every generator, kept if graded and killing each d(c).
std::vector<std::vector<int>> brute_augmentations(const DGA& a) {
    const std::size_t n = a.generators.size();
    REQUIRE(n <= 16);
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> v(n);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = (mask >> i) & 1;
            int deg = a.generators[i].degree;
            if (a.modulus) deg = ((deg % a.modulus) + a.modulus) % a.modulus;
            if (v[i] && deg != 0) ok = false;
        }
        for (std::size_t c = 0; c < n && ok; ++c) {
            int sum = 0;
            for (const auto& w : a.d[c]) {
                int prod = 1;
                for (int x : w) prod *= v[x];
                sum += prod;
            }
            if (sum % 2) ok = false;
        }
        if (ok) out.push_back(v);
    }
    return out;
}

int dense_rank(Dense m) {
    int r = 0;
    const int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        for (int i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (int j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

// Linear part of phi(d c), phi(x) = x + e(x), by expanding every word.
std::map<std::pair<int, int>, int> linear_part(const DGA& a, const Augmentation& e) {
    std::map<std::pair<int, int>, int> coef;  // (target, source) -> coefficient mod 2
    for (std::size_t c = 0; c < a.d.size(); ++c)
        for (const auto& w : a.d[c]) {
            // choose, letter by letter, the variable or the constant e(x)
            for (std::uint32_t pick = 0; pick < (1u << w.size()); ++pick) {
                if (std::popcount(pick) != 1) continue;
                int prod = 1, var = -1;
                for (std::size_t j = 0; j < w.size(); ++j) {
                    if ((pick >> j) & 1) var = w[j];
                    else prod *= e.values[w[j]];
                }
                if (prod) coef[{var, static_cast<int>(c)}] ^= 1;
            }
        }
    return coef;
}

Dense to_dense(const gf2::Matrix& m) {
    Dense d(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j);
    return d;
}

Dense transpose(const Dense& m) {
    if (m.empty()) return {};
    Dense t(m[0].size(), std::vector<int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

std::vector<GridDiagram> corpus() {
    std::vector<GridDiagram> c{unknot_grid(), torus_knot_grid(1), torus_knot_grid(2), torus_knot_grid(3), stabilized_unknot_grid()};
    std::mt19937_64 rng(555);
    for (int i = 0; i < 40; ++i) c.push_back(oracle::random_grid(rng, 3, 7));
    return c;
}

}  // namespace

TEST_CASE("augmentation counts against brute force") {
    const DGA u = compute_dga(ng_resolve(unknot_grid()));
    const DGA t = compute_dga(ng_resolve(torus_knot_grid(1)));
    const DGA s = compute_dga(ng_resolve(stabilized_unknot_grid()));
    CHECK(brute_augmentations(u).size() == 1);
    CHECK(brute_augmentations(t).size() == 5);
    CHECK(brute_augmentations(s).empty());
    CHECK(enumerate_augmentations(u).size() == 1);
    CHECK(enumerate_augmentations(u)[0].values == std::vector<std::uint8_t>{0});
    CHECK(enumerate_augmentations(t).size() == 5);
    CHECK(enumerate_augmentations(s).empty());
    CHECK(enumerate_augmentations(compute_dga(ng_resolve(torus_knot_grid(2)))).size() == 21);
}

TEST_CASE("enumeration equals brute force and is re-verified") {
    for (const auto& g : corpus()) {
        const DGA a = compute_dga(ng_resolve(g));
        if (a.generators.size() > 16) continue;
        INFO(to_json(g).dump());
        const auto augs = enumerate_augmentations(a);
        std::set<std::vector<int>> mine;
        for (const auto& e : augs) {
            CHECK(augmentation_violation(a, e) < 0);
            mine.insert(std::vector<int>(e.values.begin(), e.values.end()));
        }
        const auto brute = brute_augmentations(a);
        CHECK(mine == std::set<std::vector<int>>(brute.begin(), brute.end()));
        CHECK(mine.size() == augs.size());
    }
}

TEST_CASE("parallel enumeration gives the same ordered list") {
    const DGA a = compute_dga(ng_resolve(torus_knot_grid(3)));
    const auto one = enumerate_augmentations(a, 1), four = enumerate_augmentations(a, 4);
    CHECK(one.size() == 85);
    CHECK(one == four);
}

TEST_CASE("linearized differential matches the conjugated expansion") {
    for (const auto& g : corpus()) {
        const DGA a = compute_dga(ng_resolve(g));
        for (const auto& e : enumerate_augmentations(a)) {
            const GradedComplex cx = linearize(a, e);
            CHECK(is_complex(cx));
            const auto coef = linear_part(a, e);
            for (std::size_t c = 0; c < a.generators.size(); ++c) {
                const int k = a.reduce(a.generators[c].degree);
                const auto& src = cx.gens.at(k);
                const int col = static_cast<int>(std::find(src.begin(), src.end(), static_cast<int>(c)) - src.begin());
                const gf2::Matrix* m = cx.diff(k);
                const auto tgt_it = cx.gens.find(cx.reduce(k - 1));
                for (std::size_t t = 0; t < a.generators.size(); ++t) {
                    auto it = coef.find({static_cast<int>(t), static_cast<int>(c)});
                    const int want = it == coef.end() ? 0 : it->second;
                    if (tgt_it == cx.gens.end() || a.reduce(a.generators[t].degree) != cx.reduce(k - 1)) {
                        CHECK(want == 0);
                        continue;
                    }
                    const auto& tg = tgt_it->second;
                    const int row = static_cast<int>(std::find(tg.begin(), tg.end(), static_cast<int>(t)) - tg.begin());
                    CHECK(static_cast<int>(m->get(row, col)) == want);
                }
            }
        }
    }
}

TEST_CASE("cohomology by transposed ranks equals homology") {
    for (const auto& g : corpus()) {
        const DGA a = compute_dga(ng_resolve(g));
        for (const auto& e : enumerate_augmentations(a)) {
            const GradedComplex cx = linearize(a, e);
            std::map<int, int> dual;
            for (const auto& [k, gens] : cx.gens) {
                // coboundary out of degree k is the transpose of d_{k+1}
                int out = 0, in = 0;
                if (const gf2::Matrix* m = cx.diff(k + 1); m && m->rows() == gens.size()) out = dense_rank(transpose(to_dense(*m)));
                if (const gf2::Matrix* m = cx.diff(k)) in = dense_rank(transpose(to_dense(*m)));
                const int dim = static_cast<int>(gens.size()) - out - in;
                if (dim) dual[k] = dim;
            }
            CHECK(cohomology_dims(cx) == dual);
            CHECK(homology_dims(cx) == dual);
        }
    }
}

TEST_CASE("Euler characteristic of linearized homology equals tb") {
    for (const auto& g : corpus()) {
        const DGA a = compute_dga(ng_resolve(g));
        if (a.modulus != 0) continue;
        const int tb = thurston_bennequin(g);
        for (const auto& e : enumerate_augmentations(a))
            CHECK(euler_characteristic(homology_dims(linearize(a, e))) == tb);
    }
}

TEST_CASE("unknot and trefoil Poincare data") {
    const DGA u = compute_dga(ng_resolve(unknot_grid()));
    const auto ue = enumerate_augmentations(u);
    const GradedComplex ucx = linearize(u, ue[0]);
    for (const auto& [k, m] : ucx.d) CHECK(m.is_zero());
    CHECK(homology_dims(ucx) == std::map<int, int>{{1, 1}});
    CHECK(cohomology_dims(ucx) == std::map<int, int>{{1, 1}});

    const DGA t = compute_dga(ng_resolve(torus_knot_grid(1)));
    for (const auto& e : enumerate_augmentations(t)) {
        const auto h = homology_dims(linearize(t, e));
        CHECK(h == std::map<int, int>{{0, 2}, {1, 1}});
        CHECK(euler_characteristic(h) == 1);
    }
}

TEST_CASE("zero differential gives a zero complex") {
    DGA a;
    for (int i = 0; i < 4; ++i) a.generators.push_back({"g" + std::to_string(i), 2});
    a.d.assign(4, {});
    const auto augs = enumerate_augmentations(a);
    REQUIRE(augs.size() == 1);
    const GradedComplex cx = linearize(a, augs[0]);
    for (const auto& [k, m] : cx.d) CHECK(m.is_zero());
    CHECK(homology_dims(cx) == std::map<int, int>{{2, 4}});
}

TEST_CASE("linearize rejects a non-augmentation") {
    const DGA t = compute_dga(ng_resolve(torus_knot_grid(1)));
    Augmentation zero{std::vector<std::uint8_t>(t.generators.size(), 0)};
    CHECK_THROWS_WITH(linearize(t, zero), Catch::Matchers::ContainsSubstring("fails at generator q"));
}

TEST_CASE("augmentation report format") {
    const DGA t = compute_dga(ng_resolve(torus_knot_grid(1)));
    const auto j = augmentation_report(t, enumerate_augmentations(t));
    CHECK(j["augmentations"] == 5);
    CHECK(j["poincare"].size() == 5);
    CHECK(j["poincare"][0]["dims"]["0"] == 2);
    CHECK(j["poincare"][0]["dims"]["1"] == 1);
}
