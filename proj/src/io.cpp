#include "ubb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ubb {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::runtime_error("malformed input: " + what);
}

std::string entry_text(const Rational& r) {
    return r.num().get_str() + "/" + r.den().get_str();
}

Rational parse_entry(const std::string& token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == token.size())
        malformed("expected <num>/<den>, got '" + token + "'");
    try {
        return Rational::parse(token);
    } catch (const std::invalid_argument& e) {
        malformed(std::string(e.what()) + " in '" + token + "'");
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return is;
}

}  // namespace

void write_rmat(std::ostream& os, const RationalMatrix& m) {
    os << "rmat " << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) os << " ";
            os << entry_text(m.at(i, j));
        }
        os << "\n";
    }
}

RationalMatrix read_rmat(std::istream& is) {
    std::string tag;
    if (!(is >> tag) || tag != "rmat") malformed("missing 'rmat' header");
    long rows = 0, cols = 0;
    if (!(is >> rows >> cols)) malformed("bad rmat dimensions");
    if (rows < 1 || cols < 1 || rows > 100000 || cols > 100000)
        malformed("rmat dimensions out of range");
    RationalMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    std::string token;
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            if (!(is >> token)) malformed("rmat entry count short of header");
            m.at(static_cast<int>(i), static_cast<int>(j)) = parse_entry(token);
        }
    if (is >> token) malformed("trailing content after rmat entries");
    return m;
}

void write_rmat_file(const std::string& path, const RationalMatrix& m) {
    auto os = open_out(path);
    write_rmat(os, m);
    if (!os) throw std::runtime_error("write failed: " + path);
}

RationalMatrix read_rmat_file(const std::string& path) {
    auto is = open_in(path);
    return read_rmat(is);
}

void write_stateset(std::ostream& os, const StateSetData& data) {
    if (data.d < 1) throw std::invalid_argument("stateset: d must be positive");
    const std::size_t dim = static_cast<std::size_t>(data.d) * data.d * data.d;
    os << "stateset d=" << data.d << " n=" << data.states.size() << "\n";
    for (const auto& s : data.states) {
        if (s.label.empty() || s.label.find(' ') != std::string::npos)
            throw std::invalid_argument("stateset: label must be nonempty and space-free: '" +
                                        s.label + "'");
        if (s.coeffs.size() != dim)
            throw std::invalid_argument("stateset: state '" + s.label + "' has wrong dimension");
        os << s.label << " :";
        bool any = false;
        for (std::size_t i = 0; i < dim; ++i)
            if (!s.coeffs[i].is_zero()) {
                os << " " << i << "=" << entry_text(s.coeffs[i]);
                any = true;
            }
        if (!any) throw std::invalid_argument("stateset: state '" + s.label + "' is zero");
        os << "\n";
    }
}

StateSetData read_stateset(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) malformed("empty stateset");
    int d = 0;
    long n = -1;
    if (std::sscanf(header.c_str(), "stateset d=%d n=%ld", &d, &n) != 2)
        malformed("bad stateset header: '" + header + "'");
    if (d < 1 || d > 64) malformed("stateset d out of range");
    if (n < 0) malformed("stateset count out of range");
    const std::size_t dim = static_cast<std::size_t>(d) * d * d;

    StateSetData data;
    data.d = d;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto sep = line.find(" : ");
        if (sep == std::string::npos || sep == 0) malformed("bad state line: '" + line + "'");
        TripartiteState st;
        st.d = d;
        st.label = line.substr(0, sep);
        st.coeffs.assign(dim, Rational(0));
        std::istringstream rest(line.substr(sep + 3));
        std::string token;
        long prev = -1;
        bool any = false;
        while (rest >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos || eq == 0) malformed("bad entry '" + token + "'");
            std::size_t consumed = 0;
            long idx = -1;
            try {
                idx = std::stol(token.substr(0, eq), &consumed);
            } catch (const std::exception&) {
                malformed("bad index in '" + token + "'");
            }
            if (consumed != eq) malformed("bad index in '" + token + "'");
            if (idx <= prev || idx >= static_cast<long>(dim))
                malformed("index out of order or range in '" + token + "'");
            st.coeffs[static_cast<std::size_t>(idx)] = parse_entry(token.substr(eq + 1));
            prev = idx;
            any = true;
        }
        if (!any) malformed("state '" + st.label + "' has no entries");
        data.states.push_back(std::move(st));
    }
    if (static_cast<long>(data.states.size()) != n)
        malformed("state count does not match header");
    return data;
}

void write_stateset_file(const std::string& path, const StateSetData& data) {
    auto os = open_out(path);
    write_stateset(os, data);
    if (!os) throw std::runtime_error("write failed: " + path);
}

StateSetData read_stateset_file(const std::string& path) {
    auto is = open_in(path);
    return read_stateset(is);
}

}  // namespace ubb
