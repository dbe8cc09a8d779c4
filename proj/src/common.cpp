#include "gf2cnn/common.hpp"

#include <cstdlib>
#include <cstring>
#include <vector>

namespace gf2cnn {

std::string format(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    va_list copy;
    va_copy(copy, args);
    int n = vsnprintf(nullptr, 0, fmt, copy);
    va_end(copy);
    std::vector<char> buf(n + 1);
    vsnprintf(buf.data(), buf.size(), fmt, args);
    va_end(args);
    return std::string(buf.data(), n);
}

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("GF2CNN_LOG");
        if (!env) return LogLevel::Error;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        if (std::strcmp(env, "info") == 0) return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

static void emit(const char* tag, const std::string& msg) {
    fprintf(stderr, "[gf2cnn %s] %s\n", tag, msg.c_str());
}

void log_error(const std::string& msg) { emit("error", msg); }

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) emit("info", msg);
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug) emit("debug", msg);
}

}  // namespace gf2cnn
