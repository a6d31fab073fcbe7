// Compares the table-driven point-counting kernel against the serial
// Euler-criterion reference over a ladder of field sizes, checks that the
// two agree, and prints a timing row per field. Use --max-q to extend the
// ladder on bigger machines.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypell/curve.hpp"
#include "hypell/fq.hpp"

using namespace hypell;

namespace {

double seconds(const std::function<Int()>& body, Int& out) {
    auto start = std::chrono::steady_clock::now();
    out = body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"point-counting kernel benchmark"};
    long max_q = 2000000;
    int repeats = 3;
    app.add_option("--max-q", max_q, "largest field size to time");
    app.add_option("--repeats", repeats, "timed repetitions per row (best is kept)")
        ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    struct Row {
        const char* label;
        QPoly f;
        long p;
        int k;
    };
    auto poly = [](std::initializer_list<long> desc) {
        std::vector<Rat> c;
        for (long v : desc) c.emplace_back(v);
        return QPoly::from_desc(std::move(c));
    };
    std::vector<Row> rows = {
        {"genus 2", poly({1, 0, 0, 0, -1, 1}), 10007, 1},
        {"genus 2", poly({1, 0, 0, 0, -1, 1}), 101, 3},
        {"genus 3", poly({1, 0, 0, 0, 0, 0, -1, 1}), 3, 12},
        {"genus 3", poly({1, 0, 0, 0, 0, 0, -1, 1}), 13, 5},
        {"genus 4", poly({1, 0, 0, -6, 0, 0, -4, 0, 0, 40}), 7, 7},
    };

    std::printf("%-8s %9s %13s %13s %8s %s\n", "curve", "q", "kernel", "serial",
                "speedup", "count");
    for (const Row& row : rows) {
        double q = std::pow(static_cast<double>(row.p), row.k);
        if (q > static_cast<double>(max_q)) continue;
        HyperCurve C = new_hyperelliptic(row.f);
        if (!is_good_prime(C, row.p)) continue;
        Int n_kernel, n_serial;
        double t_kernel = 1e300, t_serial = 1e300;
        for (int r = 0; r < repeats; ++r) {
            t_kernel = std::min(t_kernel,
                                seconds([&] { return count_points(C, row.p, row.k); }, n_kernel));
            t_serial = std::min(
                t_serial, seconds([&] { return count_points_serial(C, row.p, row.k); }, n_serial));
        }
        if (n_kernel != n_serial) {
            std::fprintf(stderr, "MISMATCH at %s q=%ld^%d: kernel %s, serial %s\n", row.label,
                         row.p, row.k, n_kernel.get_str().c_str(), n_serial.get_str().c_str());
            return 1;
        }
        std::printf("%-8s %9.0f %12.4fs %12.4fs %7.2fx %s\n", row.label, q, t_kernel, t_serial,
                    t_serial / t_kernel, n_kernel.get_str().c_str());
    }
    return 0;
}
