// Every input of 1 to 4 bytes survives a vector-mode encode/decode round
// trip. Pass a smaller maximum length as the first argument for a quick run.

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "scp/codec.hpp"

int main(int argc, char** argv) {
    const unsigned max_len = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 4;
    std::vector<std::uint8_t> data;
    std::uint64_t failures = 0;
    std::uint64_t checked = 0;
    for (unsigned len = 1; len <= max_len; ++len) {
        data.assign(len, 0);
        const std::uint64_t count = std::uint64_t{1} << (8 * len);
        for (std::uint64_t v = 0; v < count; ++v) {
            for (unsigned i = 0; i < len; ++i)
                data[i] = static_cast<std::uint8_t>(v >> (8 * i));
            if (scp::decode(scp::encode_vector(data)) != data)
                ++failures;
            ++checked;
        }
        std::printf("length %u done\n", len);
        std::fflush(stdout);
    }
    std::printf("%llu inputs, %llu failures\n", static_cast<unsigned long long>(checked),
                static_cast<unsigned long long>(failures));
    return failures == 0 ? 0 : 1;
}
