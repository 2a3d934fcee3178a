#ifndef SPARSEREC_IO_HPP
#define SPARSEREC_IO_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sparserec/core.hpp"

namespace sparserec {

// Text formats (UTF-8, LF):
//   matrix:  line 1 = "m n", lines 2..m+1 = n space-separated decimals
//   vector:  line 1 = "n",   line 2      = n space-separated decimals
// Values are written with 17 significant digits so a save/load round trip
// reproduces every entry bit-exactly.

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

namespace detail {

inline double parse_double(const std::string& tok, int line_no) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("malformed number '" + tok + "'", line_no);
    if (!std::isfinite(v)) throw ParseError("non-finite value '" + tok + "'", line_no);
    return v;
}

inline int parse_count(const std::string& tok, int line_no) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 1)
        throw ParseError("malformed dimension '" + tok + "'", line_no);
    return v;
}

inline void format_value(std::ostream& os, double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    os.write(buf, p - buf);
}

}  // namespace detail

inline Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header", 1);
    std::istringstream hdr(line);
    std::string tm, tn, extra;
    if (!(hdr >> tm >> tn) || (hdr >> extra)) throw ParseError("header must be 'm n'", 1);
    const int m = detail::parse_count(tm, 1);
    const int n = detail::parse_count(tn, 1);
    Matrix A(m, n);
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ParseError("missing row", i + 2);
        std::istringstream row(line);
        std::string tok;
        for (int j = 0; j < n; ++j) {
            if (!(row >> tok)) throw ParseError("row has too few entries", i + 2);
            A.at(i, j) = detail::parse_double(tok, i + 2);
        }
        if (row >> tok) throw ParseError("row has too many entries", i + 2);
    }
    return A;
}

inline void save_matrix(const Matrix& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << A.rows << ' ' << A.cols << '\n';
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) {
            if (j) out << ' ';
            detail::format_value(out, A.at(i, j));
        }
        out << '\n';
    }
}

inline Vector load_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header", 1);
    std::istringstream hdr(line);
    std::string tn, extra;
    if (!(hdr >> tn) || (hdr >> extra)) throw ParseError("header must be 'n'", 1);
    const int n = detail::parse_count(tn, 1);
    if (!std::getline(in, line)) throw ParseError("missing values", 2);
    std::istringstream row(line);
    Vector v(static_cast<std::size_t>(n));
    std::string tok;
    for (int j = 0; j < n; ++j) {
        if (!(row >> tok)) throw ParseError("too few entries", 2);
        v[j] = detail::parse_double(tok, 2);
    }
    if (row >> tok) throw ParseError("too many entries", 2);
    return v;
}

inline void save_vector(const Vector& v, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << v.size() << '\n';
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) out << ' ';
        detail::format_value(out, v[j]);
    }
    out << '\n';
}

}  // namespace sparserec

#endif
