#pragma once

#include <compare>
#include <string>
#include <vector>

namespace deg {

/// A sign vector over {+1,-1}, stored as a string of '+' and '-' characters.
/// Position h (1-based) is character h-1.
using Signature = std::string;

int sign_at(const Signature& s, int pos);
Signature parse_signature(const std::string& text);
Signature negate(const Signature& s);

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) {}
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    int operator[](int k) const { return k < length() ? parts[k] : 0; }
    Partition conjugate() const;
    std::string str() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;
};

Partition parse_partition(const std::string& text);

/// All partitions of n, lexicographically descending (a linear extension of dominance).
std::vector<Partition> enumerate_partitions(int n);

/// Prefix-sum dominance; throws std::invalid_argument when sizes differ.
bool dominance_ge(const Partition& mu, const Partition& nu);

/// French convention: rows[0] is the bottom row.
struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    int size() const { return shape.size(); }
    std::string str() const;
    bool operator==(const StandardTableau&) const = default;
};

bool is_standard(const StandardTableau& t);
StandardTableau tableau_from_rows(std::vector<std::vector<int>> rows);

std::vector<StandardTableau> enumerate_syt(const Partition& shape);
long long count_syt(const Partition& shape);

Signature descent_signature(const StandardTableau& t);

/// Reading word: rows from top to bottom, each read left to right.
std::vector<int> reading_word(const StandardTableau& t);

StandardTableau dual_equiv_involution(const StandardTableau& t, int i);

Signature superstandard_signature(const Partition& lambda);

}  // namespace deg
