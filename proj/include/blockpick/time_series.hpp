#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace blockpick {

// A length-n stretch of d-dimensional observations, row-major.
struct TimeSeries {
    long n = 0;
    int d = 1;
    std::vector<double> data;  // n*d values, row i at data[i*d .. i*d+d)

    TimeSeries() = default;
    TimeSeries(long n_, int d_) : n(n_), d(d_), data(static_cast<std::size_t>(n_) * d_) {}

    double at(long i, int j) const { return data[static_cast<std::size_t>(i) * d + j]; }
    double& at(long i, int j) { return data[static_cast<std::size_t>(i) * d + j]; }

    std::span<const double> row(long i) const {
        return {data.data() + static_cast<std::size_t>(i) * d, static_cast<std::size_t>(d)};
    }

    std::span<const double> scalar_view() const {
        if (d != 1) throw std::invalid_argument("TimeSeries: expected scalar series (d = 1)");
        return {data.data(), static_cast<std::size_t>(n)};
    }

    std::vector<double> column_mean() const {
        if (n == 0) throw std::invalid_argument("TimeSeries: empty series");
        std::vector<double> mu(d, 0.0);
        for (long i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) mu[j] += at(i, j);
        for (auto& v : mu) v /= static_cast<double>(n);
        return mu;
    }

    static TimeSeries from_scalar(std::vector<double> values) {
        TimeSeries s;
        s.n = static_cast<long>(values.size());
        s.d = 1;
        s.data = std::move(values);
        return s;
    }

    static TimeSeries from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty()) throw std::invalid_argument("TimeSeries: no rows");
        TimeSeries s(static_cast<long>(rows.size()), static_cast<int>(rows.front().size()));
        for (long i = 0; i < s.n; ++i) {
            if (static_cast<int>(rows[i].size()) != s.d)
                throw std::invalid_argument("TimeSeries: ragged rows");
            for (int j = 0; j < s.d; ++j) s.at(i, j) = rows[i][j];
        }
        return s;
    }
};

// Checks the basic series invariants (n >= 2, all entries finite).
inline void validate_series(const TimeSeries& s) {
    if (s.n < 2) throw std::invalid_argument("time series must have n >= 2");
    if (s.d < 1) throw std::invalid_argument("time series must have d >= 1");
    if (s.data.size() != static_cast<std::size_t>(s.n) * s.d)
        throw std::invalid_argument("time series storage does not match n*d");
    for (double v : s.data)
        if (!std::isfinite(v)) throw std::invalid_argument("time series contains non-finite values");
}

}  // namespace blockpick
