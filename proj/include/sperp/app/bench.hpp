#pragma once

#include <span>
#include <string>
#include <vector>

#include "sperp/plethysm.hpp"

namespace sperp::app {

struct BenchRow {
    std::string case_expr;
    std::string method;
    double millis = 0;      // median over repetitions
    double min_millis = 0;
    std::size_t terms = 0;
    std::string checksum;
};

/// Cases timed when `sperp bench` is given none.
const std::vector<std::string>& default_bench_cases();

/// Times each method on one expression. Every repetition uses a fresh engine
/// and LR context on a single thread; one extra warm-up run is discarded.
/// Throws UnsupportedMethod or ParseError from the evaluation.
std::vector<BenchRow> run_bench(const std::string& case_expr, std::span<const Method> methods, int repetitions);

/// True when all rows for each case carry the same checksum.
bool checksums_agree(std::span<const BenchRow> rows);

}  // namespace sperp::app
