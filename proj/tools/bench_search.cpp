// Times the distance search with the parallel batch expansion on and off
// and checks that both modes return identical certificates.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "vknots/distance.hpp"
#include "vknots/gauss_diagram.hpp"
#include "vknots/script.hpp"

#ifdef VKNOTS_HAVE_OPENMP
#include <omp.h>
#endif

using namespace vknots;

namespace {

struct Case {
    std::string name;
    GaussDiagram from, to;
    long long k;
    SearchBudget budget;
};

double run_case(const Case& c, bool parallel, std::optional<SearchResult>& out) {
    SearchOptions opts;
    opts.parallel = parallel;
    auto t0 = std::chrono::steady_clock::now();
    out = search_upper_bound(c.from, c.to, c.k, c.budget, opts);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main() {
    GaussDiagram empty;
    GaussDiagram vtref = parse_gauss_code("O1+ O2+ U1+ U2+");

    std::vector<Case> cases;
    for (long long a : {1, 2})
        for (long long k : {1, 2}) {
            SearchBudget b;
            b.max_moves = a + 2;
            Case c{"witness(empty,a=" + std::to_string(a) + ",k=" + std::to_string(k) +
                       ") -> empty",
                   witness_construction(empty, a, k), empty, k, b};
            cases.push_back(c);
        }
    {
        SearchBudget b;
        b.max_moves = 4;
        cases.push_back({"witness(vtref,a=2,k=2) -> vtref",
                         witness_construction(vtref, 2, 2), vtref, 2, b});
    }

#ifdef VKNOTS_HAVE_OPENMP
    std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both runs are serial\n");
#endif
    std::printf("%-40s %10s %10s %8s\n", "case", "serial(s)", "parallel(s)", "speedup");

    bool all_match = true;
    for (const Case& c : cases) {
        std::optional<SearchResult> serial_res, parallel_res;
        double ts = run_case(c, false, serial_res);
        double tp = run_case(c, true, parallel_res);
        bool match = serial_res.has_value() == parallel_res.has_value() &&
                     (!serial_res || (serial_res->twok_moves == parallel_res->twok_moves &&
                                      serial_res->script == parallel_res->script));
        all_match = all_match && match;
        std::printf("%-40s %10.3f %10.3f %7.2fx %s\n", c.name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, match ? "" : "MISMATCH");
    }
    if (!all_match) {
        std::printf("serial and parallel searches disagree\n");
        return 1;
    }
    return 0;
}
