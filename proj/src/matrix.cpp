#include "hodgelat/matrix.hpp"

namespace hodgelat {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Rat(m.at(i, j));
    return out;
}

std::optional<IntMatrix> to_integral(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (!is_integer(m.at(i, j))) return std::nullopt;
            out.at(i, j) = m.at(i, j).get_num();
        }
    return out;
}

std::vector<Int> apply(const IntMatrix& m, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        fail(ErrorCode::DimensionMismatch, "matrix-vector shape");
    std::vector<Int> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

std::vector<Rat> apply(const RatMatrix& m, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        fail(ErrorCode::DimensionMismatch, "matrix-vector shape");
    std::vector<Rat> out(m.rows(), Rat(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

}  // namespace hodgelat
