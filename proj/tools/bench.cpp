// Compares the serial reference path against the OpenMP path on the
// data-parallel kernels and reports wall times and speedups. The outputs of
// the two paths are also compared; a mismatch aborts the run.

#include <chrono>
#include <iostream>
#include <string>

#include "qmprime/jsonio.hpp"

using namespace qmprime;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class Fn>
double timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return seconds(t0, std::chrono::steady_clock::now());
}

void row(const std::string& name, double serial, double parallel) {
    std::printf("%-34s %10.3fs %10.3fs %8.2fx\n", name.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");
    std::printf("threads available: %d\n", exec_threads(ExecMode::parallel));

    {
        json a, b;
        double ts = timed([&] { a = to_json(enumerate_interval(3, 3, ExecMode::serial)); });
        double tp = timed([&] { b = to_json(enumerate_interval(3, 3, ExecMode::parallel)); });
        if (a != b) {
            std::cerr << "interval enumeration outputs differ\n";
            return 1;
        }
        row("interval_below (3,3)", ts, tp);
    }
    {
        json a, b;
        double ts = timed([&] { a = to_json(verify_poset(2, 2, ExecMode::serial)); });
        double tp = timed([&] { b = to_json(verify_poset(2, 2, ExecMode::parallel)); });
        if (a != b) {
            std::cerr << "poset verification outputs differ\n";
            return 1;
        }
        row("verify_poset (2,2)", ts, tp);
    }
    {
        json a, b;
        double ts = timed([&] { a = to_json(verify_rmatrix(2, 3, ExecMode::serial)); });
        double tp = timed([&] { b = to_json(verify_rmatrix(2, 3, ExecMode::parallel)); });
        if (a != b) {
            std::cerr << "pairing sweep outputs differ\n";
            return 1;
        }
        row("pairing_sweep (2,3)", ts, tp);
    }
    {
        json a, b;
        double ts = timed(
            [&] { a = to_json(verify_stratification(2, 2, 2000, 99, 0, ExecMode::serial)); });
        double tp = timed(
            [&] { b = to_json(verify_stratification(2, 2, 2000, 99, 0, ExecMode::parallel)); });
        if (a != b) {
            std::cerr << "stratification outputs differ\n";
            return 1;
        }
        row("stratification (2,2), 2000 samples", ts, tp);
    }
    return 0;
}
