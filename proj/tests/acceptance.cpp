// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scp/codec.hpp"
#include "scp/cycle.hpp"
#include "scp/decompose.hpp"
#include "scp/error.hpp"
#include "scp/oracle.hpp"
#include "scp/portrait_io.hpp"
#include "support/appendix.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace scp;
using Clock = std::chrono::steady_clock;

namespace {

// Thresholds, all fixed up front.
constexpr double appendix_runtime_limit_ms = 1.0;
constexpr Dimension oracle_t_min = 3;
constexpr Dimension oracle_t_max = 10;
constexpr int bound_inputs = 1000;
constexpr int rank_samples = 100;
constexpr std::size_t stream_bytes = 10u * 1000u * 1000u;
constexpr double stream_time_limit_s = 10.0;
// Index storage may double on growth (two vectors of u64), plus the read
// chunk and a fixed session overhead.
constexpr std::size_t stream_slack_bytes = (std::size_t{1} << 16) + 1024;

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        } else if (!cond) {
            detail += "; " + what;
        }
    }
};

std::vector<std::uint8_t> desdemona_bytes() {
    return {testdata::desdemona.begin(), testdata::desdemona.end()};
}

std::vector<CycleIndex> indices_of(const CycleIndexSet& s) {
    return {s.indices().begin(), s.indices().end()};
}

template <typename F>
double median_ms(F&& f, int runs = 51) {
    std::vector<double> times;
    for (int i = 0; i < runs; ++i) {
        const auto start = Clock::now();
        f();
        times.push_back(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

std::uint64_t per_row_bound(Dimension t) { return t % 2 == 1 ? t : t - 1; }

Check appendix_matrix() {
    Check c;
    const auto data = desdemona_bytes();
    const Portrait p = encode_matrix(data);
    c.expect(p.dimension() == 36 && p.rows_count() == 8 && p.mode() == PortraitMode::matrix,
             "shape is not (36, 8, matrix)");
    for (std::size_t i = 0; i < 8 && i < p.rows().size(); ++i)
        c.expect(indices_of(p.rows()[i]) == testdata::desdemona_matrix_rows[i],
                 "row " + std::to_string(i + 1) + " differs");
    c.expect(indices_of(p.rows()[0]) == std::vector<CycleIndex>{0}, "row 1 is not {0}");
    c.expect(indices_of(p.rows()[2]) == std::vector<CycleIndex>{26, 37, 63},
             "row 3 is not {26,37,63}");
    c.expect(p.rows()[1].size() == 13, "row 2 does not have 13 elements");
    c.expect(portrait_weight(p) == 102, "weight " + std::to_string(portrait_weight(p)) + " != 102");
    const double ms = median_ms([&] { (void)encode_matrix(data); });
    c.expect(ms < appendix_runtime_limit_ms, "runtime " + std::to_string(ms) + " ms");
    if (c.ok)
        c.detail = "weight 102, median encode " + std::to_string(ms) + " ms";
    return c;
}

Check appendix_vector() {
    Check c;
    const auto data = desdemona_bytes();
    const Portrait p = encode_vector(data);
    c.expect(p.dimension() == 288 && p.rows_count() == 1 && p.mode() == PortraitMode::vector,
             "shape is not (288, 1, vector)");
    const auto got = indices_of(p.rows()[0]);
    c.expect(got == testdata::desdemona_vector_row, "index set differs");
    c.expect(got.size() >= 6 && std::vector<CycleIndex>(got.begin(), got.begin() + 6) ==
                                    std::vector<CycleIndex>{2, 5, 11, 16, 20, 23},
             "first elements differ");
    c.expect(!got.empty() && got.back() == 570, "last element is not 570");
    c.expect(got.size() == 145, "q = " + std::to_string(got.size()));
    const double ms = median_ms([&] { (void)encode_vector(data); });
    c.expect(ms < appendix_runtime_limit_ms, "runtime " + std::to_string(ms) + " ms");
    if (c.ok)
        c.detail = "q = 145, median encode " + std::to_string(ms) + " ms";
    return c;
}

Check appendix_decode() {
    Check c;
    const auto data = desdemona_bytes();
    auto rows = [] {
        std::vector<CycleIndexSet> r;
        for (const auto& row : testdata::desdemona_matrix_rows)
            r.emplace_back(36, row);
        return r;
    }();
    const Portrait matrix(PortraitMode::matrix, 36, 8, std::move(rows));
    const Portrait vector(PortraitMode::vector, 288, 1,
                          {CycleIndexSet(288, testdata::desdemona_vector_row)});
    c.expect(decode(matrix) == data, "matrix portrait decodes to other bytes");
    c.expect(decode(vector) == data, "vector portrait decodes to other bytes");
    return c;
}

Check oracle_equivalence() {
    Check c;
    std::uint64_t checked = 0;
    for (Dimension t = oracle_t_min; t <= oracle_t_max && c.ok; ++t) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t) && c.ok; ++bits) {
            SignVector T(t);
            T.mutable_words()[0] = bits;
            const std::string tag = "t=" + std::to_string(t) + " " + T.to_pattern();
            const CycleIndexSet fast = decompose(T);
            CycleIndexSet brute = fast;
            try {
                brute = brute_force_decompose(T);
            } catch (const consistency_error& e) {
                c.expect(false, tag + ": " + e.what());
                break;
            }
            c.expect(fast == brute, tag + ": fast and brute-force sets differ");
            c.expect(fast.size() % 2 == 1, tag + ": even cardinality");
            c.expect(recompose(fast) == T, tag + ": recompose mismatch");
            bool is_vertex = false;
            for (CycleIndex k = 0; k < 2 * t; ++k)
                is_vertex = is_vertex || cycle_vertex(t, k) == T;
            if (is_vertex)
                c.expect(fast.size() == 1, tag + ": cycle vertex with q != 1");
            else
                c.expect(fast.size() <= per_row_bound(t), tag + ": cardinality above bound");
            ++checked;
        }
    }
    if (c.ok)
        c.detail = std::to_string(checked) + " vertices, t = 3..10";
    return c;
}

Check weight_bounds_hold() {
    Check c;
    std::mt19937_64 rng(1000);
    for (int i = 0; i < bound_inputs && c.ok; ++i) {
        const auto data = testing::random_bytes(3 + rng() % 2000, rng);
        for (const Portrait& p : {encode_matrix(data), encode_vector(data)}) {
            const auto b = weight_bounds(p.dimension(), p.rows_count());
            const auto w = portrait_weight(p);
            c.expect(b.lower == p.rows_count(), "lower bound is not tau");
            c.expect(b.upper == p.rows_count() * per_row_bound(p.dimension()),
                     "upper bound formula");
            c.expect(b.contains(w), "weight " + std::to_string(w) + " outside bounds");
        }
    }
    // Lower bound: every row a cycle vertex.
    for (std::size_t n : {3u, 36u, 101u}) {
        const std::vector<std::uint8_t> zeros(n, 0x00), ones(n, 0xFF);
        c.expect(portrait_weight(encode_matrix(zeros)) == 8, "all-zero rows not at lower bound");
        c.expect(portrait_weight(encode_matrix(ones)) == 8, "all-one rows not at lower bound");
        c.expect(portrait_weight(encode_vector(zeros)) == 1, "zero stream not at lower bound");
    }
    // Upper bound: alternating rows.
    for (std::size_t n : {3u, 4u, 35u, 36u, 101u}) {
        std::vector<std::uint8_t> data(n);
        // Every plane alternates; for odd n start with a 1 bit (-1), for even n with 0 (+1).
        for (std::size_t j = 0; j < n; ++j)
            data[j] = ((j % 2 == 0) == (n % 2 == 1)) ? 0xFF : 0x00;
        const Portrait p = encode_matrix(data);
        c.expect(portrait_weight(p) == weight_bounds(n, 8).upper,
                 "alternating planes miss the upper bound at t=" + std::to_string(n));
        const std::vector<std::uint8_t> stripes(n, 0x55);
        const Portrait v = encode_vector(stripes);
        c.expect(portrait_weight(v) == weight_bounds(8 * n, 1).upper,
                 "alternating stream misses the upper bound at t=" + std::to_string(8 * n));
    }
    if (c.ok)
        c.detail = std::to_string(bound_inputs) + " inputs x 2 modes; both bounds attained";
    return c;
}

Check linear_independence() {
    Check c;
    std::mt19937_64 rng(6);
    for (Dimension t : {10u, 36u, 64u}) {
        for (int i = 0; i < rank_samples; ++i) {
            const auto q = decompose(testing::random_vector(t, rng));
            std::vector<std::vector<std::int64_t>> rows;
            for (auto k : q.indices())
                rows.push_back(testing::as_ints(cycle_vertex(t, k)));
            const auto rank = testing::rank_mod_prime(rows);
            c.expect(rank == q.size(), "t=" + std::to_string(t) + ": rank " +
                                           std::to_string(rank) + " < q " +
                                           std::to_string(q.size()));
        }
    }
    if (c.ok)
        c.detail = std::to_string(rank_samples) + " samples at t = 10, 36, 64";
    return c;
}

Check streaming() {
    Check c;
    std::mt19937_64 rng(7);
    const auto data = testing::random_bytes(stream_bytes, rng);
    const auto path = std::filesystem::temp_directory_path() / "scp_acceptance_stream.bin";
    {
        std::ofstream out(path, std::ios::binary);
        out.write(reinterpret_cast<const char*>(data.data()),
                  static_cast<std::streamsize>(data.size()));
    }

    std::size_t peak = 0;
    const auto start = Clock::now();
    std::ifstream in(path, std::ios::binary);
    const Portrait streamed = encode_vector_stream(in, data.size(), &peak);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    in.close();

    // Batch reference: the whole bit stream materialized, then decomposed.
    std::vector<std::uint8_t> bits;
    bits.reserve(8 * data.size());
    for (auto b : data)
        for (auto bit : byte_to_column(b))
            bits.push_back(bit);
    const CycleIndexSet batch = decompose(bits_to_signs(bits));
    bits = {};

    const std::size_t q = streamed.rows()[0].size();
    const Dimension t = streamed.dimension();
    c.expect(streamed.rows()[0] == batch, "streamed set differs from batch");
    c.expect(seconds < stream_time_limit_s, "took " + std::to_string(seconds) + " s");
    c.expect(peak <= 2 * q * sizeof(CycleIndex) + stream_slack_bytes,
             "peak " + std::to_string(peak) + " bytes exceeds 16q + slack");

    // Same length, one index: memory must not scale with t.
    std::filesystem::resize_file(path, 0);
    std::filesystem::resize_file(path, stream_bytes);
    std::size_t quiet_peak = 0;
    std::ifstream zeros(path, std::ios::binary);
    const Portrait quiet = encode_vector_stream(zeros, stream_bytes, &quiet_peak);
    zeros.close();
    std::filesystem::remove(path);
    c.expect(quiet.rows()[0].size() == 1, "zero file does not give q = 1");
    c.expect(quiet_peak <= 8 + stream_slack_bytes,
             "zero file peak " + std::to_string(quiet_peak) + " bytes");

    if (c.ok) {
        std::ostringstream d;
        d << "t = " << t << ", q = " << q << ", " << seconds << " s, peak aux " << peak
          << " B (" << static_cast<double>(peak) / static_cast<double>(q) << " B per index; "
          << quiet_peak << " B at q = 1)";
        c.detail = d.str();
    }
    return c;
}

template <typename E, typename F>
bool throws(F&& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

Check golden_formats() {
    Check c;
    const auto data = desdemona_bytes();
    const Portrait matrix = encode_matrix(data);
    const Portrait vector = encode_vector(data);
    c.expect(to_text(matrix) == testing::read_golden("desdemona_matrix.scp1"), "matrix text");
    c.expect(to_binary(matrix) == testing::read_golden("desdemona_matrix.scpb"), "matrix binary");
    c.expect(to_text(vector) == testing::read_golden("desdemona_vector.scp1"), "vector text");
    c.expect(to_binary(vector) == testing::read_golden("desdemona_vector.scpb"), "vector binary");
    c.expect(parse_text(testing::read_golden("desdemona_matrix.scp1")) == matrix, "matrix text parse");
    c.expect(parse_binary(testing::read_golden("desdemona_vector.scpb")) == vector,
             "vector binary parse");

    const std::string text = testing::read_golden("desdemona_matrix.scp1");
    const std::string bin = testing::read_golden("desdemona_matrix.scpb");
    auto replaced = [](std::string s, const std::string& from, const std::string& to) {
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    const std::vector<std::pair<std::string, std::string>> bad_text = {
        {"bad magic", replaced(text, "SCP1", "SCP9")},
        {"even cardinality", replaced(text, "\n3 26 37 63\n", "\n2 26 37\n")},
        {"unsorted", replaced(text, "\n3 26 37 63\n", "\n3 37 26 63\n")},
        {"index >= 2t", replaced(text, "\n3 26 37 63\n", "\n3 26 37 72\n")},
        {"antipodal", replaced(text, "\n3 26 37 63\n", "\n3 26 37 62\n")},
        {"token count", replaced(text, "\n3 26 37 63\n", "\n3 26 37\n")},
        {"missing row", text.substr(0, text.rfind("17 2 4"))},
        {"truncated line", text.substr(0, text.size() - 1)},
    };
    for (const auto& [what, s] : bad_text)
        c.expect(throws<parse_error>([&] { parse_text(s); }), "text mutation accepted: " + what);

    std::string bad_magic = bin;
    bad_magic[3] = 'X';
    std::string bad_mode = bin;
    bad_mode[4] = 7;
    std::string unsorted = bin;
    // Row 1 is {0}; row 2 starts at offset 37 with q = 13, then 4, 8, ...
    std::swap_ranges(unsorted.begin() + 45, unsorted.begin() + 53, unsorted.begin() + 53);
    const std::vector<std::pair<std::string, std::string>> bad_bin = {
        {"bad magic", bad_magic},
        {"bad mode", bad_mode},
        {"truncated 8 bytes", bin.substr(0, bin.size() - 8)},
        {"truncated 1 byte", bin.substr(0, bin.size() - 1)},
        {"trailing byte", bin + '\0'},
        {"unsorted", unsorted},
    };
    for (const auto& [what, s] : bad_bin)
        c.expect(throws<parse_error>([&] { parse_binary(s); }), "binary mutation accepted: " + what);

    const Portrait corrupted(PortraitMode::vector, 8, 1, {CycleIndexSet::trusted(8, {0, 1})});
    c.expect(throws<invalid_portrait>([&] { decode(corrupted); }),
             "even set decodes without invalid_portrait");
    if (c.ok)
        c.detail = "4 goldens byte-identical; " + std::to_string(bad_text.size() + bad_bin.size()) +
                   " mutations rejected";
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Check()> run;
    };
    const Criterion criteria[] = {
        {"1 matrix portrait of the worked string", appendix_matrix},
        {"2 vector portrait of the worked string", appendix_vector},
        {"3 decoding restores the 36 bytes", appendix_decode},
        {"4 brute-force oracle equivalence, t = 3..10", oracle_equivalence},
        {"5 weight bounds", weight_bounds_hold},
        {"6 linear independence", linear_independence},
        {"7 streaming 10 MB encode", streaming},
        {"8 golden formats and mutation rejection", golden_formats},
    };
    int failed = 0;
    for (const auto& criterion : criteria) {
        const auto start = Clock::now();
        Check result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(Clock::now() - start).count();
        std::cout << (result.ok ? "[PASS] " : "[FAIL] ") << criterion.name << " (" << s
                  << " s): " << result.detail << std::endl;
        failed += result.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
