#include "doctest.h"

#include "hsdirac/errors.hpp"
#include "hsdirac/rep_theory.hpp"

#include <algorithm>
#include <random>

using namespace hsdirac;

namespace {

Weight W(int n, std::vector<long> doubled) { return Weight::from_doubled(GroupId(n), doubled); }

// Test-only oracle: dimension as the number of Gelfand–Tsetlin patterns,
// i.e. repeated interlacing down to Spin(2) where every irrep is 1-dim.
// Works on doubled integer vectors and shares no code with the library.
long gt_count(int n, const std::vector<long>& a) {
    if (n == 2) return 1;
    const int m = n - 1;  // restrict Spin(n) -> Spin(m)
    const int k = m / 2;
    long total = 0;
    std::vector<long> cur(k);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            total += gt_count(m, cur);
            return;
        }
        long hi = a[i];
        long lo = 0;
        if (i + 1 < k) {
            lo = a[i + 1];
        } else if (m % 2) {
            lo = std::abs(a[i + 1]);
        } else {
            lo = -a[i];
        }
        for (long x = hi; x >= lo; x -= 2) {
            cur[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return total;
}

std::vector<long> random_dominant(std::mt19937& rng, int n, long max_doubled) {
    const int k = n / 2;
    const bool halfint = rng() % 2;
    std::vector<long> v(k);
    long prev = max_doubled - ((max_doubled % 2 != 0) != halfint ? 1 : 0);
    for (int i = 0; i < k; ++i) {
        const long lo = halfint ? 1 : 0;
        const long steps = (prev - lo) / 2;
        v[i] = lo + 2 * static_cast<long>(rng() % (steps + 1));
        prev = v[i];
    }
    if (n % 2 == 0 && rng() % 2) v.back() = -v.back();
    return v;
}

std::vector<std::string> names(const std::vector<Weight>& ws) {
    std::vector<std::string> s;
    for (const auto& w : ws) s.push_back(w.to_string());
    return s;
}

}  // namespace

TEST_CASE("weight parsing, formatting and dominance") {
    const Weight w = Weight::parse(GroupId(7), "3/2,3/2,1/2");
    CHECK(w.to_string() == "3/2,3/2,1/2");
    CHECK(w.is_dominant());
    CHECK_FALSE(Weight::parse(GroupId(5), "1/2,3/2").is_dominant());
    CHECK_FALSE(Weight::parse(GroupId(5), "1/2,-1/2").is_dominant());
    CHECK(Weight::parse(GroupId(4), "1/2,-1/2").is_dominant());
    CHECK(Weight::parse(GroupId(2), "-3").is_dominant());
    CHECK_THROWS_AS(Weight::parse(GroupId(5), "1,1/2"), ParseError);
    CHECK_THROWS_AS(Weight::parse(GroupId(5), "1"), ParseError);
    CHECK_THROWS_AS(GroupId(1), OutOfRange);
}

TEST_CASE("rho") {
    auto str = [](const std::vector<HalfInt>& v) {
        std::string s;
        for (const auto& x : v) s += x.to_string() + " ";
        return s;
    };
    CHECK(str(rho(GroupId(5))) == "3/2 1/2 ");
    CHECK(str(rho(GroupId(4))) == "1 0 ");
    CHECK(str(rho(GroupId(7))) == "5/2 3/2 1/2 ");
}

TEST_CASE("weyl_dim examples") {
    CHECK(weyl_dim(W(3, {1})) == 2);
    CHECK(weyl_dim(W(5, {3, 1})) == 16);
    CHECK(weyl_dim(W(5, {3, 3})) == 20);
    CHECK(weyl_dim(W(7, {3, 3, 3})) == 112);
    CHECK(weyl_dim(W(4, {2, -2})) == weyl_dim(W(4, {2, 2})));
    CHECK_THROWS_AS(weyl_dim(W(5, {1, 3})), NotDominant);
}

TEST_CASE("weyl_dim agrees with Gelfand–Tsetlin counting") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 150; ++t) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const auto v = random_dominant(rng, n, 7);
        const Weight w = W(n, v);
        REQUIRE(w.is_dominant());
        CHECK(weyl_dim(w) == gt_count(n, v));
    }
}

TEST_CASE("weyl_dim is invariant under the D_k sign flip") {
    std::mt19937 rng(9);
    for (int t = 0; t < 60; ++t) {
        const int n = 4 + 2 * static_cast<int>(rng() % 3);
        auto v = random_dominant(rng, n, 7);
        auto f = v;
        f.back() = -f.back();
        CHECK(weyl_dim(W(n, v)) == weyl_dim(W(n, f)));
    }
}

TEST_CASE("casimir_scalar examples") {
    CHECK(casimir_scalar(W(3, {1})) == Rational(3, 4));
    CHECK(casimir_scalar(W(5, {1, 1})) == Rational(5, 2));
    CHECK(casimir_scalar(W(5, {3, 1})) == Rational(15, 2));
}

TEST_CASE("branch_down examples") {
    CHECK(names(branch_down(W(4, {1, 1}))) == std::vector<std::string>{"1/2"});
    CHECK(names(branch_down(W(5, {3, 1}))) ==
          std::vector<std::string>{"3/2,1/2", "3/2,-1/2", "1/2,1/2", "1/2,-1/2"});
    CHECK(names(branch_down(W(4, {2, 0}))) == std::vector<std::string>{"1", "0"});
    CHECK_THROWS_AS(branch_down(W(5, {1, 3})), NotDominant);
}

TEST_CASE("branch_up examples") {
    CHECK(names(branch_up(W(3, {1}), HalfInt::parse("3/2"))) ==
          std::vector<std::string>{"3/2,1/2", "3/2,-1/2", "1/2,1/2", "1/2,-1/2"});
    CHECK(names(branch_up(W(4, {1, 1}), HalfInt::parse("1/2"))) == std::vector<std::string>{"1/2,1/2"});
    CHECK(branch_up(W(5, {3, 1}), HalfInt::parse("1/2")).empty());
    // an integer bound below a half-integral λ_1 rounds down within the class
    CHECK(names(branch_up(W(3, {1}), HalfInt::parse("1"))) == std::vector<std::string>{"1/2,1/2", "1/2,-1/2"});
}

TEST_CASE("branching dimension identity and up/down adjointness") {
    std::mt19937 rng(77);
    for (int t = 0; t < 120; ++t) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Weight alpha = W(n + 1, random_dominant(rng, n + 1, 7));
        BigInt sum = 0;
        const auto down = branch_down(alpha);
        for (const auto& lam : down) {
            CHECK(lam.is_dominant());
            CHECK(interlaces(alpha, lam));
            sum += weyl_dim(lam);
            const auto up = branch_up(lam, alpha[0]);
            CHECK(std::find(up.begin(), up.end(), alpha) != up.end());
        }
        CHECK(sum == weyl_dim(alpha));
        // no duplicates
        auto sorted = down;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
    for (int t = 0; t < 60; ++t) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Weight lam = W(n, random_dominant(rng, n, 5));
        const HalfInt bound = lam[0] + HalfInt::from_int(static_cast<long>(rng() % 3));
        for (const auto& alpha : branch_up(lam, bound)) {
            CHECK(alpha.is_dominant());
            CHECK(alpha[0] <= bound);
            const auto down = branch_down(alpha);
            CHECK(std::find(down.begin(), down.end(), lam) != down.end());
        }
    }
}

TEST_CASE("tensor_vector examples") {
    const auto r5 = tensor_vector(W(5, {1, 1}));
    CHECK(r5.checked);
    REQUIRE(r5.components.size() == 2);
    CHECK(r5.components[0].weight.to_string() == "3/2,1/2");
    CHECK(r5.components[0].dimension == 16);
    CHECK(r5.components[0].cartan);
    CHECK(r5.components[1].weight.to_string() == "1/2,1/2");

    const auto r4 = tensor_vector(W(4, {0, 0}));
    REQUIRE(r4.components.size() == 1);
    CHECK(r4.components[0].weight.to_string() == "1,0");

    const auto r3 = tensor_vector(W(3, {2}));
    CHECK(names({r3.components[0].weight, r3.components[1].weight, r3.components[2].weight}) ==
          std::vector<std::string>{"2", "1", "0"});
}

TEST_CASE("tensor_spinor examples") {
    const auto a = tensor_spinor(W(3, {2}));
    REQUIRE(a.components.size() == 2);
    CHECK(a.components[0].weight.to_string() == "3/2");
    CHECK(a.components[0].cartan);
    CHECK(a.components[1].weight.to_string() == "1/2");
    CHECK_FALSE(a.components[1].cartan);

    const auto b = tensor_spinor(W(3, {0}));
    REQUIRE(b.components.size() == 1);
    CHECK(b.components[0].weight.to_string() == "1/2");

    const auto c = tensor_spinor(W(5, {2, 0}));
    CHECK(c.left_dim * c.right_dim == 20);
    REQUIRE(c.components.size() == 2);
    CHECK(c.components[0].weight.to_string() == "3/2,1/2");
    CHECK(c.components[0].cartan);
    CHECK(c.components[1].weight.to_string() == "1/2,1/2");
    CHECK(c.components[1].multiplicity == 1);

    // even n: both chiral Cartan products are flagged
    const auto d = tensor_spinor(W(4, {2, 0}));
    long flagged = 0;
    for (const auto& comp : d.components) flagged += comp.cartan;
    CHECK(flagged == 2);
}

TEST_CASE("Spin(3) tensor products follow Clebsch–Gordan") {
    for (long j2 = 0; j2 <= 8; ++j2) {
        const auto r = tensor_spinor(W(3, {j2}));
        std::vector<long> got;
        for (const auto& c : r.components) got.push_back(c.weight[0].doubled().get_si());
        std::vector<long> want;
        for (long j = j2 + 1; j >= std::abs(j2 - 1); j -= 2) want.push_back(j);
        CHECK(got == want);
    }
}

TEST_CASE("tensor_vector selection rule agrees with Racah–Klimyk") {
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Weight lam = W(n, random_dominant(rng, n, 7));
        const auto report = tensor_vector(lam);
        CHECK(report.checked);
        const auto vw = vector_rep_weights(lam.group());
        const auto klimyk = klimyk_decompose(lam, vw);
        std::map<Weight, long> rule;
        for (const auto& c : report.components) rule[c.weight] += c.multiplicity;
        CHECK(rule == klimyk);
    }
}

TEST_CASE("tensor_spinor dimension identity on random weights") {
    std::mt19937 rng(8);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Weight lam = W(n, random_dominant(rng, n, 7));
        const auto report = tensor_spinor(lam);
        CHECK(report.checked);
        CHECK(report.component_dim_sum() == report.left_dim * report.right_dim);
        for (const auto& c : report.components) CHECK(c.multiplicity >= 1);
    }
}

TEST_CASE("reflect_to_dominant") {
    const GroupId b2(5);
    const auto r = reflect_to_dominant(b2, {HalfInt::from_doubled(-1), HalfInt::from_doubled(3)});
    REQUIRE(r);
    CHECK(r->first[0].doubled() == 3);
    CHECK(r->first[1].doubled() == 1);
    CHECK(r->second == 1);  // one transposition, one sign flip
    CHECK_FALSE(reflect_to_dominant(b2, {HalfInt::from_doubled(2), HalfInt::from_doubled(0)}));
    CHECK_FALSE(reflect_to_dominant(b2, {HalfInt::from_doubled(2), HalfInt::from_doubled(-2)}));

    const GroupId d2(4);
    const auto d = reflect_to_dominant(d2, {HalfInt::from_doubled(-1), HalfInt::from_doubled(3)});
    REQUIRE(d);
    CHECK(d->first[1].doubled() == -1);  // a single sign flip is not in W(D_2)
    CHECK(d->second == -1);
    CHECK(reflect_to_dominant(d2, {HalfInt::from_doubled(0), HalfInt::from_doubled(-2)}));
}

TEST_CASE("spinor_form_components examples") {
    const auto c52 = spinor_form_components(GroupId(5), 2);
    REQUIRE(c52.size() == 3);
    CHECK(c52[0].weights[0].to_string() == "1/2,1/2");
    CHECK(c52[0].dimension == 4);
    CHECK(c52[1].weights[0].to_string() == "3/2,1/2");
    CHECK(c52[1].dimension == 16);
    CHECK(c52[2].weights[0].to_string() == "3/2,3/2");
    CHECK(c52[2].dimension == 20);

    const auto c73 = spinor_form_components(GroupId(7), 3);
    std::vector<long> dims;
    for (const auto& c : c73) dims.push_back(c.dimension.get_si());
    CHECK(dims == std::vector<long>{8, 48, 112, 112});

    const auto c41 = spinor_form_components(GroupId(4), 1);
    REQUIRE(c41.size() == 2);
    CHECK(names(c41[0].weights) == std::vector<std::string>{"1/2,1/2", "1/2,-1/2"});
    CHECK(c41[0].dimension == 4);
    CHECK(names(c41[1].weights) == std::vector<std::string>{"3/2,1/2", "3/2,-1/2"});
    CHECK(c41[1].dimension == 12);

    // Hodge symmetry of the triangle
    for (int n = 2; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            const auto a = spinor_form_components(GroupId(n), k);
            const auto b = spinor_form_components(GroupId(n), n - k);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].dimension == b[i].dimension);
        }
    CHECK_THROWS_AS(spinor_form_components(GroupId(5), 6), OutOfRange);
    CHECK_THROWS_AS(spinor_form_components(GroupId(5), -1), OutOfRange);
}
