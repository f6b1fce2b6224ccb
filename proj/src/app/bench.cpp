#include "sperp/app/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "sperp/app/expr.hpp"
#include "sperp/app/format.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sperp::app {
namespace {

class SingleThreaded {
public:
    SingleThreaded() {
#ifdef _OPENMP
        previous_ = omp_get_max_threads();
        omp_set_num_threads(1);
#endif
    }
    ~SingleThreaded() {
#ifdef _OPENMP
        omp_set_num_threads(previous_);
#endif
    }
    SingleThreaded(const SingleThreaded&) = delete;
    SingleThreaded& operator=(const SingleThreaded&) = delete;

private:
    int previous_ = 1;
};

}  // namespace

const std::vector<std::string>& default_bench_cases() {
    static const std::vector<std::string> cases{
        "s[2][s[2]]",
        "s[3,1][s[1,1]]",
        "s[1,1,1,1][s[1,1,1,1,1,1]]",
    };
    return cases;
}

std::vector<BenchRow> run_bench(const std::string& case_expr, std::span<const Method> methods, int repetitions) {
    if (repetitions < 1) throw std::invalid_argument("run_bench: repetitions must be positive");
    SingleThreaded guard;
    std::vector<BenchRow> rows;
    for (Method method : methods) {
        SymFunc result;
        std::vector<double> times;
        for (int rep = 0; rep <= repetitions; ++rep) {
            LRContext ctx;
            PlethysmEngine engine(ctx, Exec::serial);
            const auto start = std::chrono::steady_clock::now();
            result = parse_expr(case_expr, engine, method);
            const auto stop = std::chrono::steady_clock::now();
            if (rep > 0) times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        const std::size_t n = times.size();
        const double median = n % 2 == 1 ? times[n / 2] : (times[n / 2 - 1] + times[n / 2]) / 2;
        rows.push_back({case_expr, method_name(method), median, times.front(), result.size(), checksum(result)});
    }
    return rows;
}

bool checksums_agree(std::span<const BenchRow> rows) {
    std::map<std::string, std::string> first;
    for (const auto& row : rows) {
        auto [it, inserted] = first.emplace(row.case_expr, row.checksum);
        if (!inserted && it->second != row.checksum) return false;
    }
    return true;
}

}  // namespace sperp::app
