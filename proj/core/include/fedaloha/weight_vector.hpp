#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fedaloha {

/// Dense real vector of fixed dimension.
///
/// Holds the global model, each user's local update and the input vectors.
/// The dimension is set at construction; binary operations throw
/// std::invalid_argument on a dimension mismatch.
class WeightVector {
public:
    /// Zero vector of the given dimension (dimension >= 1).
    explicit WeightVector(std::size_t dimension);
    WeightVector(std::initializer_list<double> entries);
    explicit WeightVector(std::vector<double> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const noexcept { return entries_[i]; }
    double& operator[](std::size_t i) noexcept { return entries_[i]; }

    std::span<const double> entries() const noexcept { return entries_; }

    WeightVector& operator+=(const WeightVector& other);
    WeightVector& operator-=(const WeightVector& other);
    WeightVector& operator*=(double scale) noexcept;

    double dot(const WeightVector& other) const;
    double norm() const noexcept;
    bool all_finite() const noexcept;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<double> entries_;
};

WeightVector operator+(WeightVector lhs, const WeightVector& rhs);
WeightVector operator-(WeightVector lhs, const WeightVector& rhs);
WeightVector operator*(double scale, WeightVector v);

/// Throws std::invalid_argument unless both operands have the same dimension.
void require_same_dimension(const WeightVector& a, const WeightVector& b, const char* where);

}  // namespace fedaloha
