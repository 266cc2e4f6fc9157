#pragma once

#include <filesystem>
#include <optional>
#include <vector>

namespace pacbound {

struct Sample {
    std::vector<double> x;
    std::optional<double> y;
};

/// Immutable observation set. All samples share one feature arity; labels
/// are present on all samples or on none.
struct Dataset {
    std::vector<Sample> samples;

    std::size_t n() const { return samples.size(); }
    std::size_t arity() const;
    bool labeled() const;

    /// Validates non-emptiness, arity consistency and label consistency.
    void check() const;
};

/// Reads a CSV with header `x0,..,xk[,y]`, '.' decimal separator, UTF-8.
/// Any malformed header or non-numeric field is a hard error naming the
/// offending line.
Dataset load_csv(const std::filesystem::path& path);

/// Concatenation, used by affinity checks on the empirical risk.
Dataset concat(const Dataset& a, const Dataset& b);

} // namespace pacbound
