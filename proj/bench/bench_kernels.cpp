// Wall-clock comparison of the OpenMP kernels against their serial references.
// Usage: bench_kernels [repeats]

#include "hsdirac/clifford.hpp"
#include "hsdirac/matrix.hpp"
#include "hsdirac/spectra.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

using namespace hsdirac;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-34s serial %9.4f s   parallel %9.4f s   speedup %5.2fx   %s\n", name, serial, parallel,
                serial / parallel, agree ? "agree" : "DISAGREE");
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t n, double density) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (keep(rng)) m(i, j) = ComplexRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);

    std::mt19937 rng(42);
    {
        const ExactMatrix a = random_matrix(rng, 96, 0.6);
        const ExactMatrix b = random_matrix(rng, 96, 0.6);
        ExactMatrix s, p;
        const double ts = best_of(repeats, [&] { s = multiply_serial(a, b); });
        const double tp = best_of(repeats, [&] { p = multiply(a, b); });
        report("product, random 96x96", ts, tp, s == p);
    }

    CliffordWorkspace ws(gamma_matrices(6));
    const ExactMatrix& cas = ws.casimir(3);
    {
        ExactMatrix s, p;
        const double ts = best_of(repeats, [&] { s = multiply_serial(cas, cas); });
        const double tp = best_of(repeats, [&] { p = multiply(cas, cas); });
        report("product, Casimir n=6 k=3 squared", ts, tp, s == p);
    }
    {
        const ExactMatrix& proj = ws.projector(3, 1);
        std::size_t s = 0, p = 0;
        const double ts = best_of(repeats, [&] { s = bareiss_rank_serial(proj); });
        const double tp = best_of(repeats, [&] { p = bareiss_rank(proj); });
        report("Bareiss rank, projector n=6 k=3", ts, tp, s == p);
    }
    {
        const ExactMatrix m = random_matrix(rng, 64, 0.8);
        std::size_t s = 0, p = 0;
        const double ts = best_of(repeats, [&] { s = bareiss_rank_serial(m); });
        const double tp = best_of(repeats, [&] { p = bareiss_rank(m); });
        report("Bareiss rank, random 64x64", ts, tp, s == p);
    }
    {
        ConsistencyReport s, p;
        const double ts = best_of(repeats, [&] { s = verify_consistency_serial(11, 11, 40); });
        const double tp = best_of(repeats, [&] { p = verify_consistency(11, 11, 40); });
        report("verify_consistency n=11 lmax=40", ts, tp,
               s.cases_checked == p.cases_checked && s.failures.size() == p.failures.size());
    }
    return 0;
}
