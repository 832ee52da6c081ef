#pragma once

#include <map>
#include <optional>
#include <string>

#include "deg/combinatorics.hpp"

namespace deg {

/// Integer combination of fundamental quasisymmetric functions Q_sigma.
struct QSymFunction {
    int degree = 0;
    std::map<Signature, long long> coeffs;

    QSymFunction() = default;
    explicit QSymFunction(int d) : degree(d) {}

    void add(const Signature& s, long long c);
    long long coefficient(const Signature& s) const;
    bool is_zero() const { return coeffs.empty(); }
    long long total() const;

    QSymFunction& operator+=(const QSymFunction& o);
    QSymFunction& operator-=(const QSymFunction& o);
    QSymFunction scaled(long long k) const;
    bool operator==(const QSymFunction&) const = default;
};

QSymFunction operator+(QSymFunction a, const QSymFunction& b);
QSymFunction operator-(QSymFunction a, const QSymFunction& b);

struct DominanceDescending {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

struct SchurExpansion {
    int degree = 0;
    std::map<Partition, long long, DominanceDescending> coeffs;
    QSymFunction residual;

    bool exact() const { return residual.is_zero(); }
    bool nonnegative() const;
    bool operator==(const SchurExpansion&) const = default;
};

struct PositivityResult {
    bool positive = false;
    SchurExpansion expansion;
    std::string witness;
};

const QSymFunction& schur_to_fundamental(const Partition& lambda);
SchurExpansion expand_in_schur(const QSymFunction& f);
PositivityResult is_schur_positive(const QSymFunction& f);
std::optional<Partition> is_single_schur(const QSymFunction& f);

/// Reassembles sum c_lambda s_lambda + residual.
QSymFunction reconstruct(const SchurExpansion& e);

/// "s[3,2]+2*s[3,1,1]"; "0" for the empty sum.
std::string format_schur_compact(const SchurExpansion& e);
/// Lines "<partition> <coefficient>", then "RESIDUAL" and "<signature> <coefficient>" lines if nonzero.
std::string format_schur_lines(const SchurExpansion& e);
std::string format_qsym_lines(const QSymFunction& f);
QSymFunction parse_qsym_lines(const std::string& text);

}  // namespace deg
