#include "dcoh/matrix.hpp"

namespace dcoh {

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        RatMatrix::Column col;
        col.reserve(m.column(c).size());
        for (const auto& [r, v] : m.column(c)) col.emplace_back(r, Rational(v));
        out.set_column(c, std::move(col));
    }
    return out;
}

IntMatrix direct_sum(const std::vector<IntMatrix>& blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            IntMatrix::Column col;
            for (const auto& [r, v] : b.column(c)) col.emplace_back(r0 + r, v);
            out.set_column(c0 + c, std::move(col));
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
            IntMatrix::Column col;
            for (const auto& [ra, va] : a.column(ca))
                for (const auto& [rb, vb] : b.column(cb)) col.emplace_back(ra * b.rows() + rb, va * vb);
            out.set_column(ca * b.cols() + cb, std::move(col));
        }
    }
    return out;
}

}  // namespace dcoh
