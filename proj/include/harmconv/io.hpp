// Plain-text CSV formats: series dumps (k,re,im) and harmonic map dumps
// (k,re_h,im_h,re_g,im_g), both with 17 significant digits so values
// round-trip bit-exactly.

#ifndef HARMCONV_IO_HPP
#define HARMCONV_IO_HPP

#include <complex>
#include <concepts>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic.hpp"
#include "series.hpp"

namespace harmconv {

template <std::floating_point T>
std::string format_g17(T x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", static_cast<double>(x));
    return buf;
}

namespace detail {

inline std::vector<std::string> split_csv_row(const std::string& line)
{
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            cols.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return cols;
}

template <std::floating_point T>
T parse_real(const std::string& s)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::runtime_error("csv: malformed number '" + s + "'");
    return static_cast<T>(v);
}

} // namespace detail

template <std::floating_point T>
void write_series_csv(std::ostream& os, const analytic_series<T>& p)
{
    os << "k,re,im\n";
    for (std::size_t k = 0; k <= p.order(); ++k)
        os << k << ',' << format_g17(p.coeff(k).real()) << ','
           << format_g17(p.coeff(k).imag()) << '\n';
    if (!os)
        throw std::runtime_error("write_series_csv: stream failure");
}

template <std::floating_point T = double>
analytic_series<T> read_series_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != "k,re,im")
        throw std::runtime_error("read_series_csv: expected header 'k,re,im'");
    std::vector<std::complex<T>> coeffs;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto cols = detail::split_csv_row(line);
        if (cols.size() != 3)
            throw std::runtime_error("read_series_csv: bad row '" + line + "'");
        if (static_cast<std::size_t>(std::stoul(cols[0])) != coeffs.size())
            throw std::runtime_error("read_series_csv: rows must be indexed 0..N in order");
        coeffs.emplace_back(detail::parse_real<T>(cols[1]), detail::parse_real<T>(cols[2]));
    }
    return analytic_series<T>(std::move(coeffs));
}

template <std::floating_point T>
void write_map_csv(std::ostream& os, const harmonic_map<T>& f)
{
    os << "k,re_h,im_h,re_g,im_g\n";
    for (std::size_t k = 0; k <= f.order(); ++k)
        os << k << ',' << format_g17(f.h.coeff(k).real()) << ','
           << format_g17(f.h.coeff(k).imag()) << ',' << format_g17(f.g.coeff(k).real())
           << ',' << format_g17(f.g.coeff(k).imag()) << '\n';
    if (!os)
        throw std::runtime_error("write_map_csv: stream failure");
}

template <std::floating_point T = double>
harmonic_map<T> read_map_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != "k,re_h,im_h,re_g,im_g")
        throw std::runtime_error("read_map_csv: expected header 'k,re_h,im_h,re_g,im_g'");
    std::vector<std::complex<T>> hc, gc;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto cols = detail::split_csv_row(line);
        if (cols.size() != 5)
            throw std::runtime_error("read_map_csv: bad row '" + line + "'");
        if (static_cast<std::size_t>(std::stoul(cols[0])) != hc.size())
            throw std::runtime_error("read_map_csv: rows must be indexed 0..N in order");
        hc.emplace_back(detail::parse_real<T>(cols[1]), detail::parse_real<T>(cols[2]));
        gc.emplace_back(detail::parse_real<T>(cols[3]), detail::parse_real<T>(cols[4]));
    }
    return harmonic_map<T>(analytic_series<T>(std::move(hc)),
                           analytic_series<T>(std::move(gc)));
}

template <std::floating_point T = double>
harmonic_map<T> read_map_csv_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("read_map_csv_file: cannot open '" + path + "'");
    return read_map_csv<T>(is);
}

template <std::floating_point T = double>
analytic_series<T> read_series_csv_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("read_series_csv_file: cannot open '" + path + "'");
    return read_series_csv<T>(is);
}

} // namespace harmconv

#endif
