// Times the degree-class sweep: serial reference against the OpenMP
// kernel at several worker counts, checking that the profiles agree.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "serredepth/cohomology.hpp"
#include "serredepth/homology.hpp"

using namespace serredepth;
using Clock = std::chrono::steady_clock;

namespace {

// each run starts from a cold memo cache so the comparison is fair
double time_profile(const MonomialIdeal& I, const FieldSpec& field, const ProfileOptions& opts,
                    CohomologyProfile* out) {
    clear_homology_cache();
    auto start = Clock::now();
    CohomologyProfile p = cohomology_profile(I, field, opts);
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (out) *out = p;
    return seconds;
}

} // namespace

int main() {
    const FieldSpec field = FieldSpec::rationals();

    // powers of a cyclic ideal in five variables: class counts grow
    // like (2k+2)^5
    MonomialIdeal base = MonomialIdeal::from_generators(
        5, {{2, 1, 0, 0, 0}, {0, 2, 1, 0, 0}, {0, 0, 2, 1, 0}, {0, 0, 0, 2, 1}, {1, 0, 0, 0, 2}});

    int max_threads = 1;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif
    std::printf("hardware threads: %d\n", max_threads);
    std::printf("%-12s %12s %10s %10s %8s\n", "case", "classes", "serial(s)", "omp(s)",
                "speedup");

    for (int k = 2; k <= 5; ++k) {
        MonomialIdeal I = power(base, k);
        ProfileOptions serial;
        serial.serial = true;
        serial.budget = 1'000'000'000ULL;
        CohomologyProfile ref(0, {}, {});
        double t_serial = time_profile(I, field, serial, &ref);

        ProfileOptions par;
        par.budget = serial.budget;
        CohomologyProfile p(0, {}, {});
        double t_par = time_profile(I, field, par, &p);

        for (int j = 0; j <= I.var_count(); ++j) {
            if (p.dual_dim(j) != ref.dual_dim(j)) {
                std::fprintf(stderr, "MISMATCH at j=%d for cyclic5^%d\n", j, k);
                return 1;
            }
        }
        std::printf("cyclic5^%-4d %12llu %10.3f %10.3f %8.2f\n", k,
                    static_cast<unsigned long long>(degree_class_count(I)), t_serial, t_par,
                    t_par > 0 ? t_serial / t_par : 0.0);
    }
    std::printf("profiles agree on every case\n");
    return 0;
}
