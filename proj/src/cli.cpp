#include "scp/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "scp/codec.hpp"
#include "scp/decompose.hpp"
#include "scp/error.hpp"
#include "scp/oracle.hpp"
#include "scp/portrait_io.hpp"

namespace scp::cli {

namespace {

struct usage_error : error {
    using error::error;
};

std::vector<std::uint8_t> read_all(std::istream& in) {
    std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
    if (in.bad())
        throw io_error("read failure");
    return data;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw io_error("cannot open input '" + path + "'");
    return file;
}

// Runs `body` with the configured input stream.
template <typename Body>
auto with_input(const CommandConfig& config, std::istream& in, Body body) {
    if (!config.input)
        return body(in, std::optional<std::uint64_t>{});
    auto file = open_input(*config.input);
    std::error_code ec;
    std::optional<std::uint64_t> size;
    if (std::filesystem::is_regular_file(*config.input, ec))
        size = std::filesystem::file_size(*config.input, ec);
    if (ec)
        size.reset();
    return body(file, size);
}

// Writes `payload` to the configured output.
template <typename Writer>
void with_output(const CommandConfig& config, std::ostream& out, Writer writer) {
    if (!config.output) {
        writer(out);
        out.flush();
        if (!out)
            throw io_error("write failure on standard output");
        return;
    }
    std::ofstream file(*config.output, std::ios::binary | std::ios::trunc);
    if (!file)
        throw io_error("cannot open output '" + *config.output + "'");
    writer(file);
    file.flush();
    if (!file)
        throw io_error("write failure on '" + *config.output + "'");
}

void write_portrait(std::ostream& out, const Portrait& p, PortraitFormat format) {
    if (format == PortraitFormat::binary)
        write_binary(out, p);
    else
        write_text(out, p);
}

Portrait read_portrait_as(std::istream& in, const std::optional<PortraitFormat>& format) {
    if (!format)
        return read_portrait(in);
    return *format == PortraitFormat::binary ? read_binary(in) : read_text(in);
}

Portrait encode_input(const CommandConfig& config, std::istream& in) {
    return with_input(config, in, [&](std::istream& src, std::optional<std::uint64_t> size) {
        if (config.mode == PortraitMode::vector && size)
            return encode_vector_stream(src, *size);
        const auto data = read_all(src);
        return config.mode == PortraitMode::vector ? encode_vector(data) : encode_matrix(data);
    });
}

int do_encode(const CommandConfig& config, std::istream& in, std::ostream& out) {
    const Portrait p = encode_input(config, in);
    with_output(config, out, [&](std::ostream& dst) {
        write_portrait(dst, p, config.format.value_or(PortraitFormat::text));
    });
    return exit_ok;
}

int do_decode(const CommandConfig& config, std::istream& in, std::ostream& out) {
    const Portrait p = with_input(config, in, [&](std::istream& src, auto) {
        return read_portrait_as(src, config.format);
    });
    const auto bytes = decode(p);
    with_output(config, out, [&](std::ostream& dst) {
        dst.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
    });
    return exit_ok;
}

int do_stats(const CommandConfig& config, std::istream& in, std::ostream& out) {
    const Portrait p = with_input(config, in, [&](std::istream& src, auto) {
        return read_portrait_as(src, config.format);
    });
    const PortraitStats s = portrait_stats(p);
    with_output(config, out, [&](std::ostream& dst) {
        dst << "mode: " << to_string(s.mode) << '\n'
            << "t: " << s.t << '\n'
            << "tau: " << s.tau << '\n'
            << "row q:";
        for (auto q : s.row_sizes)
            dst << ' ' << q;
        dst << '\n'
            << "weight: " << s.weight << '\n'
            << "bounds: " << s.bounds.lower << ".." << s.bounds.upper << '\n'
            << "ratio: " << s.upper_ratio << '\n'
            << "within bounds: " << (s.bounds.contains(s.weight) ? "yes" : "no") << '\n';
    });
    return exit_ok;
}

int do_verify(const CommandConfig& config, std::istream& in, std::ostream& out) {
    const auto data = with_input(config, in, [](std::istream& src, auto) { return read_all(src); });
    const Portrait p = config.mode == PortraitMode::vector ? encode_vector(data)
                                                           : encode_matrix(data);
    const auto format = config.format.value_or(PortraitFormat::text);
    std::stringstream wire;
    write_portrait(wire, p, format);
    const Portrait parsed = read_portrait_as(wire, format);
    const auto restored = decode(parsed);
    const bool same = parsed == p && restored == data;
    const auto weight = portrait_weight(p);
    const auto bounds = weight_bounds(p.dimension(), p.rows_count());
    const bool bounded = bounds.contains(weight);
    with_output(config, out, [&](std::ostream& dst) {
        dst << (same && bounded ? "PASS" : "FAIL") << ": " << data.size() << " bytes, "
            << to_string(p.mode()) << " mode, weight " << weight << " in "
            << bounds.lower << ".." << bounds.upper << '\n';
    });
    return same && bounded ? exit_ok : exit_mismatch;
}

void print_indices(std::ostream& out, const char* label, const CycleIndexSet& set) {
    out << label << ':';
    for (auto k : set.indices())
        out << ' ' << k;
    out << '\n';
}

int do_oracle(const CommandConfig& config, std::ostream& out) {
    if (!config.pattern)
        throw usage_error("oracle needs --pattern");
    const std::string& pattern = *config.pattern;
    if (config.t && *config.t != pattern.size())
        throw usage_error("--t " + std::to_string(*config.t) + " does not match pattern length " +
                          std::to_string(pattern.size()));
    if (pattern.size() > oracle_max_dimension)
        throw usage_error("oracle supports t <= 10");
    if (pattern.size() < min_dimension)
        throw usage_error("oracle needs t >= 3");
    const SignVector T = SignVector::from_pattern(pattern);
    const CycleIndexSet fast = decompose(T);
    const CycleIndexSet brute = brute_force_decompose(T);
    const bool agree = fast == brute && recompose(fast) == T;
    with_output(config, out, [&](std::ostream& dst) {
        dst << "t: " << T.size() << '\n' << "pattern: " << pattern << '\n';
        print_indices(dst, "fast", fast);
        print_indices(dst, "oracle", brute);
        dst << "agree: " << (agree ? "yes" : "no") << '\n';
    });
    return agree ? exit_ok : exit_mismatch;
}

}  // namespace

int run(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
        case Command::encode: return do_encode(config, in, out);
        case Command::decode: return do_decode(config, in, out);
        case Command::stats: return do_stats(config, in, out);
        case Command::verify: return do_verify(config, in, out);
        case Command::oracle: return do_oracle(config, out);
        }
    } catch (const usage_error& e) {
        err << "scp: " << e.what() << '\n';
        return exit_usage;
    } catch (const io_error& e) {
        err << "scp: " << e.what() << '\n';
        return exit_io;
    } catch (const dimension_error& e) {
        err << "scp: " << e.what() << '\n';
        return exit_usage;
    } catch (const range_error& e) {
        err << "scp: " << e.what() << '\n';
        return config.command == Command::oracle ? exit_usage : exit_invalid;
    } catch (const error& e) {
        err << "scp: " << e.what() << '\n';
        return exit_invalid;
    } catch (const consistency_error& e) {
        err << "scp: oracle consistency failure: " << e.what() << '\n';
        return exit_mismatch;
    }
    return exit_usage;
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Exact symmetric-cycle portraits of binary data"};
    app.require_subcommand(1);

    CommandConfig config;
    std::string input, output, mode = "vector", format;
    std::uint64_t t = 0;
    std::string pattern;

    const std::map<std::string, PortraitFormat> formats{{"text", PortraitFormat::text},
                                                        {"binary", PortraitFormat::binary}};

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input", input, "Input path (default: stdin)");
        sub->add_option("--output", output, "Output path (default: stdout)");
    };
    auto add_format = [&](CLI::App* sub, const char* help) {
        sub->add_option("--format", format, help)->check(CLI::IsMember({"text", "binary"}));
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", mode, "matrix (byte bit-planes) or vector (bit stream)")
            ->check(CLI::IsMember({"matrix", "vector"}));
    };

    auto* encode = app.add_subcommand("encode", "Encode bytes into a portrait");
    add_io(encode);
    add_mode(encode);
    add_format(encode, "Portrait format: text or binary (default text)");

    auto* decode_cmd = app.add_subcommand("decode", "Restore bytes from a portrait");
    add_io(decode_cmd);
    add_format(decode_cmd, "Expected portrait format (default: detect)");

    auto* stats = app.add_subcommand("stats", "Report row sizes, weight and bounds");
    add_io(stats);
    add_format(stats, "Expected portrait format (default: detect)");

    auto* verify = app.add_subcommand("verify", "Encode, serialize, decode and compare");
    add_io(verify);
    add_mode(verify);
    add_format(verify, "Portrait format for the round trip (default text)");

    auto* oracle = app.add_subcommand("oracle", "Check a small vector against brute force");
    oracle->add_option("--t", t, "Dimension; must equal the pattern length");
    oracle->add_option("--pattern", pattern, "Sign pattern over {+,-}, e.g. +-+")->required();
    oracle->add_option("--output", output, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (encode->parsed())
        config.command = Command::encode;
    else if (decode_cmd->parsed())
        config.command = Command::decode;
    else if (stats->parsed())
        config.command = Command::stats;
    else if (verify->parsed())
        config.command = Command::verify;
    else
        config.command = Command::oracle;

    if (!input.empty())
        config.input = input;
    if (!output.empty())
        config.output = output;
    config.mode = mode == "matrix" ? PortraitMode::matrix : PortraitMode::vector;
    if (!format.empty())
        config.format = formats.at(format);
    if (oracle->count("--t") > 0)
        config.t = t;
    if (!pattern.empty())
        config.pattern = pattern;
    return run(config, in, out, err);
}

}  // namespace scp::cli
