#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gf2cnn/common.hpp"

namespace gf2cnn {

// Element domains. Real tensors hold doubles; IntU/IntS hold int64 so the
// integer inference path accumulates without saturation.
enum class Dtype : uint8_t { Real, IntU, IntS };

const char* dtype_name(Dtype dt);

struct Shape {
    int64_t n = 0, c = 0, h = 0, w = 0;

    int64_t count() const { return n * c * h * w; }
    bool operator==(const Shape&) const = default;
    std::string str() const;
};

// Dense rank-4 tensor, row-major N,C,H,W. Exactly one of `f`/`i` is
// populated, selected by dtype.
class Tensor4D {
public:
    Shape shape;
    Dtype dtype = Dtype::Real;
    std::vector<double> f;
    std::vector<int64_t> i;

    Tensor4D() = default;

    static Tensor4D zeros(Shape s, Dtype dt = Dtype::Real);
    static Tensor4D zeros_like(const Tensor4D& t) { return zeros(t.shape, t.dtype); }

    bool is_real() const { return dtype == Dtype::Real; }
    bool is_int() const { return dtype != Dtype::Real; }
    int64_t count() const { return shape.count(); }

    int64_t idx(int64_t n, int64_t c, int64_t h, int64_t w) const {
        return ((n * shape.c + c) * shape.h + h) * shape.w + w;
    }

    double& fat(int64_t n, int64_t c, int64_t h, int64_t w) { return f[idx(n, c, h, w)]; }
    double fat(int64_t n, int64_t c, int64_t h, int64_t w) const { return f[idx(n, c, h, w)]; }
    int64_t& iat(int64_t n, int64_t c, int64_t h, int64_t w) { return i[idx(n, c, h, w)]; }
    int64_t iat(int64_t n, int64_t c, int64_t h, int64_t w) const { return i[idx(n, c, h, w)]; }

    // Element as double regardless of dtype (ints convert exactly).
    double val(int64_t flat) const { return is_real() ? f[flat] : static_cast<double>(i[flat]); }

    Tensor4D to_real() const;
    Tensor4D to_int(Dtype dt) const;  // elements must already be integral
};

// Channel concatenation: a occupies [0, Ca), b occupies [Ca, Ca+Cb).
Tensor4D concat_channels(const Tensor4D& a, const Tensor4D& b);

// Inverse of concat_channels; 0 < at < C.
std::pair<Tensor4D, Tensor4D> split_channels(const Tensor4D& x, int64_t at);

}  // namespace gf2cnn
