#include "fedaloha/weight_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fedaloha {

WeightVector::WeightVector(std::size_t dimension) : entries_(dimension, 0.0) {
    if (dimension == 0) throw std::invalid_argument("WeightVector: dimension must be >= 1");
}

WeightVector::WeightVector(std::initializer_list<double> entries) : entries_(entries) {
    if (entries_.empty()) throw std::invalid_argument("WeightVector: dimension must be >= 1");
}

WeightVector::WeightVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("WeightVector: dimension must be >= 1");
}

void require_same_dimension(const WeightVector& a, const WeightVector& b, const char* where) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
}

WeightVector& WeightVector::operator+=(const WeightVector& other) {
    require_same_dimension(*this, other, "WeightVector::operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other) {
    require_same_dimension(*this, other, "WeightVector::operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

WeightVector& WeightVector::operator*=(double scale) noexcept {
    for (double& e : entries_) e *= scale;
    return *this;
}

double WeightVector::dot(const WeightVector& other) const {
    require_same_dimension(*this, other, "WeightVector::dot");
    double sum = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) sum += entries_[i] * other.entries_[i];
    return sum;
}

double WeightVector::norm() const noexcept {
    double sum = 0.0;
    for (double e : entries_) sum += e * e;
    return std::sqrt(sum);
}

bool WeightVector::all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](double e) { return std::isfinite(e); });
}

WeightVector operator+(WeightVector lhs, const WeightVector& rhs) { return lhs += rhs; }
WeightVector operator-(WeightVector lhs, const WeightVector& rhs) { return lhs -= rhs; }
WeightVector operator*(double scale, WeightVector v) { return v *= scale; }

}  // namespace fedaloha
