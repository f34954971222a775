#pragma once

// Points and lines of projective space over a prime field or over Q.
//
// Canonical representatives:
//   prime field  coordinates in [0, p), first nonzero coordinate equal to 1;
//   rationals    primitive integer vector, first nonzero coordinate positive.

#include <fatpoints/error.hpp>
#include <fatpoints/field.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace fatpoints {

namespace detail {

inline std::vector<std::int64_t> normalize_coords(const std::vector<Integer>& raw, const FieldSpec& field) {
    if (raw.empty()) throw Error(ErrorKind::invalid_input, "point with no coordinates");
    std::vector<std::int64_t> out(raw.size(), 0);
    if (field.is_prime()) {
        const PrimeField f(field);
        std::vector<std::uint64_t> v(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) v[i] = f.from_integer(raw[i]);
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead == v.size()) throw Error(ErrorKind::degenerate_input, "all coordinates vanish");
        const std::uint64_t inv = f.inv(v[lead]);
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::int64_t>(f.mul(v[i], inv));
        return out;
    }
    Integer g = 0;
    for (const auto& x : raw) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    if (g == 0) throw Error(ErrorKind::degenerate_input, "all coordinates vanish");
    std::size_t lead = 0;
    while (raw[lead] == 0) ++lead;
    if (raw[lead] < 0) g = -g;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        Integer q = raw[i] / g;
        if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) {
            throw Error(ErrorKind::invalid_input, "integer coordinate exceeds 64 bits");
        }
        out[i] = static_cast<std::int64_t>(q);
    }
    return out;
}

inline std::vector<Integer> widen(const std::vector<std::int64_t>& v) {
    return {v.begin(), v.end()};
}

}  // namespace detail

/// Homogeneous coordinates of a point, kept in canonical form so that
/// equality is coordinate equality.
class ProjectivePoint {
public:
    ProjectivePoint(const std::vector<std::int64_t>& coords, const FieldSpec& field)
        : coords_(detail::normalize_coords(detail::widen(coords), field)), field_(field) {}

    ProjectivePoint(const std::vector<Integer>& coords, const FieldSpec& field)
        : coords_(detail::normalize_coords(coords, field)), field_(field) {}

    ProjectivePoint(std::initializer_list<std::int64_t> coords, const FieldSpec& field)
        : ProjectivePoint(std::vector<std::int64_t>(coords), field) {}

    [[nodiscard]] const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return coords_.at(i); }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return coords_.size() - 1; }
    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }

    [[nodiscard]] std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ":";
            s += std::to_string(coords_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }
    friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ <=> b.coords_; }

private:
    std::vector<std::int64_t> coords_;
    FieldSpec field_;
};

/// A linear form ax + by + cz in the plane, normalized like a point.
class LineForm {
public:
    LineForm(std::array<std::int64_t, 3> coeffs, const FieldSpec& field)
        : point_(std::vector<std::int64_t>(coeffs.begin(), coeffs.end()), field) {}

    explicit LineForm(ProjectivePoint dual) : point_(std::move(dual)) {
        if (point_.coords().size() != 3) throw Error(ErrorKind::invalid_input, "lines live in the plane");
    }

    [[nodiscard]] const std::vector<std::int64_t>& coeffs() const noexcept { return point_.coords(); }
    [[nodiscard]] const FieldSpec& field() const noexcept { return point_.field(); }
    [[nodiscard]] const ProjectivePoint& dual() const noexcept { return point_; }

    [[nodiscard]] bool contains(const ProjectivePoint& p) const;

    friend bool operator==(const LineForm&, const LineForm&) = default;

private:
    ProjectivePoint point_;
};

namespace detail {

inline void require_plane(const ProjectivePoint& p) {
    if (p.coords().size() != 3) throw Error(ErrorKind::invalid_input, "plane operation on a point of P^" + std::to_string(p.ambient_dim()));
}

/// Cross product, returned unnormalized. Zero iff the inputs are proportional.
inline std::vector<Integer> cross(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, const FieldSpec& field) {
    if (field.is_prime()) {
        const PrimeField f(field);
        auto v = [&](std::int64_t x) { return f.from_int(x); };
        auto term = [&](std::size_t i, std::size_t j) { return f.sub(f.mul(v(a[i]), v(b[j])), f.mul(v(a[j]), v(b[i]))); };
        return {Integer(term(1, 2)), Integer(term(2, 0)), Integer(term(0, 1))};
    }
    auto term = [&](std::size_t i, std::size_t j) { return Integer(a[i]) * b[j] - Integer(a[j]) * b[i]; };
    return {term(1, 2), term(2, 0), term(0, 1)};
}

/// Dot product of a coefficient vector with a point, as an element of the field
/// (zero test only).
inline bool dot_is_zero(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, const FieldSpec& field) {
    if (field.is_prime()) {
        const PrimeField f(field);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(f.from_int(a[i]), f.from_int(b[i])));
        return acc == 0;
    }
    Integer acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += Integer(a[i]) * b[i];
    return acc == 0;
}

inline bool all_zero(const std::vector<Integer>& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

}  // namespace detail

inline bool LineForm::contains(const ProjectivePoint& p) const {
    detail::require_plane(p);
    return detail::dot_is_zero(coeffs(), p.coords(), field());
}

/// The unique common point of two distinct lines.
inline ProjectivePoint intersect(const LineForm& l1, const LineForm& l2) {
    if (!(l1.field() == l2.field())) throw Error(ErrorKind::invalid_input, "lines over different fields");
    auto c = detail::cross(l1.coeffs(), l2.coeffs(), l1.field());
    if (detail::all_zero(c)) throw Error(ErrorKind::degenerate_input, "proportional lines have no unique intersection");
    return ProjectivePoint(c, l1.field());
}

/// The line through two distinct points.
inline LineForm line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
    detail::require_plane(p);
    detail::require_plane(q);
    auto c = detail::cross(p.coords(), q.coords(), p.field());
    if (detail::all_zero(c)) throw Error(ErrorKind::degenerate_input, "coincident points span no line");
    return LineForm(ProjectivePoint(c, p.field()));
}

/// True iff the 3x3 determinant of the coordinates vanishes.
inline bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
    detail::require_plane(p);
    detail::require_plane(q);
    detail::require_plane(r);
    auto c = detail::cross(p.coords(), q.coords(), p.field());
    if (p.field().is_prime()) {
        const PrimeField f(p.field());
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < 3; ++i) acc = f.add(acc, f.mul(f.from_integer(c[i]), f.from_int(r[i])));
        return acc == 0;
    }
    Integer acc = 0;
    for (std::size_t i = 0; i < 3; ++i) acc += c[i] * r[i];
    return acc == 0;
}

enum class ProvenanceKind { random, c_d, c_dr, file };

inline const char* to_string(ProvenanceKind kind) {
    switch (kind) {
        case ProvenanceKind::random: return "random";
        case ProvenanceKind::c_d: return "c_d";
        case ProvenanceKind::c_dr: return "c_dr";
        case ProvenanceKind::file: return "file";
    }
    return "file";
}

/// How a configuration was produced. d and r are meaningful for c_d / c_dr;
/// count holds s for random draws.
struct Provenance {
    ProvenanceKind kind = ProvenanceKind::file;
    int d = 0;
    int r = 0;
    int count = 0;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// An ordered list of pairwise distinct points over one field.
class Configuration {
public:
    Configuration(std::vector<ProjectivePoint> points, FieldSpec field, Provenance provenance = {},
                  std::optional<std::uint64_t> seed = std::nullopt)
        : points_(std::move(points)), field_(field), provenance_(provenance), seed_(seed) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (!(points_[i].field() == field_)) throw Error(ErrorKind::invalid_input, "point over a different field");
            if (points_[i].coords().size() != points_.front().coords().size()) {
                throw Error(ErrorKind::invalid_input, "points of mixed ambient dimension");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (points_[i] == points_[j]) {
                    throw Error(ErrorKind::invalid_input, "repeated point " + points_[i].to_string());
                }
            }
        }
    }

    [[nodiscard]] const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
    [[nodiscard]] const ProjectivePoint& operator[](std::size_t i) const { return points_.at(i); }
    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
    [[nodiscard]] const Provenance& provenance() const noexcept { return provenance_; }
    [[nodiscard]] std::optional<std::uint64_t> seed() const noexcept { return seed_; }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return points_.empty() ? 2 : points_.front().ambient_dim(); }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::vector<ProjectivePoint> points_;
    FieldSpec field_;
    Provenance provenance_;
    std::optional<std::uint64_t> seed_;
};

}  // namespace fatpoints
