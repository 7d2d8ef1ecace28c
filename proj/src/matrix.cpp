#include "qpi/matrix.hpp"

#include "qpi/error.hpp"

namespace qpi {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::RaggedRows: return "RaggedRows";
    case Errc::UnknownCharacter: return "UnknownCharacter";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::BoxOutsideShape: return "BoxOutsideShape";
    case Errc::BadRange: return "BadRange";
    case Errc::ShapeOverflow: return "ShapeOverflow";
    case Errc::InternalVerificationFailed: return "InternalVerificationFailed";
    case Errc::NotPrime: return "NotPrime";
    case Errc::FormulaMismatch: return "FormulaMismatch";
    case Errc::BadEll: return "BadEll";
    case Errc::EvenEll: return "EvenEll";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::GcdViolation: return "GcdViolation";
    case Errc::ZeroDim: return "ZeroDim";
    case Errc::NoRootOfUnity: return "NoRootOfUnity";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadSpec: return "BadSpec";
    case Errc::SkewSymmetryViolated: return "SkewSymmetryViolated";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw Error(Errc::RaggedRows, "matrix rows differ in length");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool IntMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (sgn(x) != 0) return false;
    return true;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

std::vector<std::vector<std::string>> IntMatrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).get_str());
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

void require_skew(const IntMatrix& m) {
    if (!m.is_skew_symmetric())
        throw Error(Errc::SkewSymmetryViolated, "matrix is not skew-symmetric");
}

} // namespace qpi
