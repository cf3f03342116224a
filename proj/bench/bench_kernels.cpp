// Times the serial reference kernels against the OpenMP variants on the
// heavier quantifier scans and checks the results agree.
#include <chrono>
#include <iomanip>
#include <iostream>

#include "ringlat/blocks.hpp"
#include "ringlat/delta.hpp"

using namespace ringlat;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

struct Row {
    std::string name;
    double serial_ms = 0, parallel_ms = 0;
    bool agree = true;
};

void print(const Row& r) {
    std::cout << std::left << std::setw(38) << r.name << std::right
              << std::setw(10) << std::fixed << std::setprecision(1)
              << r.serial_ms << " ms" << std::setw(10) << r.parallel_ms << " ms"
              << std::setw(8) << std::setprecision(2)
              << (r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0) << "x"
              << (r.agree ? "" : "   RESULTS DIFFER") << "\n";
}

template <class F>
Row bench(const std::string& name, F&& f) {
    Row r;
    r.name = name;
    kernels::set_parallel(false);
    auto t0 = std::chrono::steady_clock::now();
    auto a = f();
    r.serial_ms = ms_since(t0);
    kernels::set_parallel(true);
    t0 = std::chrono::steady_clock::now();
    auto b = f();
    r.parallel_ms = ms_since(t0);
    r.agree = (a == b);
    return r;
}

}  // namespace

int main() {
    std::cout << "kernel benchmark: serial reference vs OpenMP\n";
#ifdef RINGLAT_HAVE_OPENMP
    std::cout << "OpenMP enabled\n\n";
#else
    std::cout << "OpenMP not available; both columns run the serial path\n\n";
#endif
    // Bell(6) = 203 nodes: the partition lattice of a 6-set
    Extension diag6 = make_extension(blocks::f2n(6), {});
    IntervalLattice L = enumerate_interval(diag6, 4096);
    std::cout << "lattice: diagonal F2 in F2^6, " << L.node_count()
              << " nodes, " << L.covers.size() << " covers\n\n";
    std::cout << std::left << std::setw(38) << "kernel" << std::right
              << std::setw(13) << "serial" << std::setw(13) << "parallel"
              << std::setw(9) << "speedup" << "\n";

    MeetJoinTables T;
    print(bench("meet/join table fill", [&] {
        T = build_meet_join_tables(L);
        return T.meet.size() + T.join[42];
    }));
    print(bench("modular triple scan", [&] {
        std::array<u32, 3> w{};
        bool ok = is_modular(L, T, &w);
        return std::make_tuple(ok, w);
    }));
    print(bench("distributive triple scan", [&] {
        std::array<u32, 3> w{};
        bool ok = is_distributive(L, T, &w);
        return std::make_tuple(ok, w);
    }));
    print(bench("catenarian per-source sweep", [&] { return is_catenarian(L); }));
    print(bench("delta node-pair scan", [&] {
        DeltaVerdict v = is_delta_bruteforce(L);
        return std::make_tuple(v.is_delta,
                               v.witness ? v.witness->node_t : 0u,
                               v.witness ? v.witness->node_u : 0u);
    }));

    // element-pair scans on a 512-element ambient ring
    Extension big = make_extension(
        blocks::power(blocks::f2_t3(), 3, "F2[t]/t3^3"), {});
    std::cout << "\nelement scans: " << big.S->name() << ", " << big.S->size()
              << " elements\n";
    GenSpanCache cache = build_gen_span_cache(big);
    print(bench("generator pair scan", [&] {
        GeneratorsVerdict v = is_delta_generators(big, cache);
        return v.is_delta;
    }));
    print(bench("small-delta pair scan", [&] {
        std::optional<std::pair<Vec, Vec>> w;
        bool ok = is_small_delta(big, cache, &w);
        return std::make_tuple(ok, w.has_value() ? w->first : Vec{});
    }));
    return 0;
}
