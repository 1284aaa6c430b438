#include "hb/matrix.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "hb/errors.hpp"

namespace hb {

namespace {

void check_size(int n)
{
    if (n < 1 || n > kMaxMatrixSize)
        throw DimensionError("matrix size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxMatrixSize));
}

double parse_number(const std::string& tok)
{
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("matrix spec: bad number '" + tok + "'");
    }
    if (pos != tok.size() || !std::isfinite(v)) throw std::invalid_argument("matrix spec: bad number '" + tok + "'");
    return v;
}

std::vector<double> parse_list(const std::string& body)
{
    std::vector<double> out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_number(tok));
    if (!body.empty() && body.back() == ',') throw std::invalid_argument("matrix spec: trailing comma");
    return out;
}

}  // namespace

GroupMatrix::GroupMatrix(const Mat& m) : m_(m)
{
    if (m.rows() != m.cols()) throw DimensionError("group matrix must be square");
    check_size(static_cast<int>(m.rows()));
    if (!m.allFinite()) throw std::invalid_argument("group matrix has non-finite entries");
    det_ = m.determinant();
    const double scale = std::pow(m.norm(), static_cast<double>(m.rows()));
    if (!(std::abs(det_) > 1e-12 * scale)) throw SingularMatrixError("matrix is singular (det = " + std::to_string(det_) + ")");
}

GroupMatrix GroupMatrix::identity(int n)
{
    check_size(n);
    return GroupMatrix(Mat::Identity(n, n));
}

GroupMatrix GroupMatrix::diagonal(const std::vector<double>& d)
{
    check_size(static_cast<int>(d.size()));
    Mat m = Mat::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    return GroupMatrix(m);
}

double GroupMatrix::condition_number() const
{
    const Mat inv = m_.partialPivLu().inverse();
    return m_.cwiseAbs().colwise().sum().maxCoeff() * inv.cwiseAbs().colwise().sum().maxCoeff();
}

GroupMatrix GroupMatrix::inverse() const
{
    const double cond = condition_number();
    if (cond > 1e12) std::cerr << "warning: inverting an ill-conditioned matrix (cond ~ " << cond << ")\n";
    return GroupMatrix(m_.partialPivLu().inverse());
}

bool GroupMatrix::is_orthogonal(double tol) const
{
    const Mat d = m_.transpose() * m_ - Mat::Identity(m_.rows(), m_.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b)
{
    if (a.size() != b.size()) throw DimensionError("matrix size mismatch");
    return GroupMatrix(a.entries() * b.entries());
}

GroupMatrix parse_matrix_spec(const std::string& spec, int size)
{
    check_size(size);
    if (spec == "id") return GroupMatrix::identity(size);
    if (spec.rfind("diag:", 0) == 0) {
        auto d = parse_list(spec.substr(5));
        if (static_cast<int>(d.size()) != size)
            throw std::invalid_argument("matrix spec: diag needs " + std::to_string(size) + " entries");
        return GroupMatrix::diagonal(d);
    }
    if (spec.rfind("m:", 0) == 0) {
        auto v = parse_list(spec.substr(2));
        if (static_cast<int>(v.size()) != size * size)
            throw std::invalid_argument("matrix spec: m needs " + std::to_string(size * size) + " entries");
        Mat m(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) m(i, j) = v[static_cast<std::size_t>(i * size + j)];
        return GroupMatrix(m);
    }
    // a bare number is accepted as a 1×1 matrix
    if (size == 1) return GroupMatrix::diagonal({parse_number(spec)});
    throw std::invalid_argument("matrix spec: expected 'id', 'diag:...' or 'm:...', got '" + spec + "'");
}

GroupMatrix read_matrix_file(const std::string& path, int size)
{
    check_size(size);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file " + path);
    std::vector<double> v;
    std::string tok;
    while (in >> tok) v.push_back(parse_number(tok));
    if (static_cast<int>(v.size()) != size * size)
        throw std::invalid_argument("matrix file: expected " + std::to_string(size * size) + " entries, got " +
                                    std::to_string(v.size()));
    Mat m(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) m(i, j) = v[static_cast<std::size_t>(i * size + j)];
    return GroupMatrix(m);
}

}  // namespace hb
