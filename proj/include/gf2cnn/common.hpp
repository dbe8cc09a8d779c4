#pragma once

#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

namespace gf2cnn {

// Error taxonomy; the CLI maps each class to a distinct exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct GraphError : Error {
    using Error::Error;
};
struct CheckpointError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

std::string format(const char* fmt, ...);

// Deterministic RNG. The engine is std::mt19937_64 (bit-exact by the
// standard); the distributions are hand-rolled so that streams are
// reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive range
    int64_t uniform_int(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(engine_() % span);
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 1e-300) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// GF2CNN_LOG={error,info,debug}
enum class LogLevel { Error = 0, Info = 1, Debug = 2 };
LogLevel log_level();
void log_error(const std::string& msg);
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

// FNV-1a, used for graph hashes and kink-filter signatures.
struct Fnv1a {
    uint64_t state = 1469598103934665603ull;
    void add_bytes(const void* data, size_t n) {
        const auto* p = static_cast<const uint8_t*>(data);
        for (size_t k = 0; k < n; ++k) {
            state ^= p[k];
            state *= 1099511628211ull;
        }
    }
    void add_u64(uint64_t v) { add_bytes(&v, sizeof v); }
    void add_str(const std::string& s) {
        add_u64(s.size());
        add_bytes(s.data(), s.size());
    }
};

}  // namespace gf2cnn
