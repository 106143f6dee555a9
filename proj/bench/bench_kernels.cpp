// Timing of the OpenMP jet and torus kernels against the serial references.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "ndeg/kernels.hpp"

using namespace ndeg;

namespace {

template <class F>
double seconds(F&& f, uint64_t& result) {
    auto t0 = std::chrono::steady_clock::now();
    result = f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void jet_row(const char* text, int d, long p, long n, bool with_reference) {
    PolyFp g = reduce_mod_p(parse_poly(text, d), p);
    JetQuery q;
    q.n = n;
    uint64_t a = 0, b = 0;
    double tk = seconds([&] { return jet_count_kernel(g, q); }, a);
    std::printf("jets   %-22s p=%-2ld n=%-2ld kernel %9.4fs", text, p, n, tk);
    if (with_reference) {
        double tr = seconds([&] { return jet_count_reference(g, q); }, b);
        std::printf("  reference %9.4fs  speedup %6.1fx  %s", tr, tr / tk, a == b ? "agree" : "DISAGREE");
    }
    std::printf("  count %llu\n", static_cast<unsigned long long>(a));
}

void torus_row(const char* text, int d, long p) {
    PolyFp g = reduce_mod_p(parse_poly(text, d), p);
    uint64_t a = 0, b = 0;
    double tk = seconds([&] { return torus_count_kernel(g, full_set(d), 1); }, a);
    double tr = seconds([&] { return torus_count_reference(g, full_set(d), 1); }, b);
    std::printf("torus  %-22s p=%-4ld kernel %9.4fs  reference %9.4fs  speedup %6.1fx  %s\n", text, p, tk, tr,
                tr / tk, a == b ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
    bool large = argc > 1 && std::string(argv[1]) == "--large";
    std::printf("threads: %d\n", omp_get_max_threads());
    jet_row("x1^2 + x2^3", 2, 5, 3, true);
    jet_row("x1^2 + x2^3", 2, 7, 3, true);
    jet_row("x1^2 + x2^2 + x3^2", 3, 3, 3, true);
    jet_row("x1^2 + x2^3", 2, 3, 6, true);
    jet_row("x1^2 + x2^3", 2, 7, 4, false);
    if (large) jet_row("x1^2 + x2^3", 2, 3, 8, false);
    torus_row("x1^2 + x2^3 + x1*x2", 2, 211);
    torus_row("x1^2 + x2^3 + x3^5", 3, 61);
    return 0;
}
