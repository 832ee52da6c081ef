#include "deg/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deg {

int sign_at(const Signature& s, int pos) {
    if (pos < 1 || pos > static_cast<int>(s.size())) {
        throw std::out_of_range("signature position " + std::to_string(pos) + " out of range");
    }
    return s[pos - 1] == '+' ? 1 : -1;
}

Signature parse_signature(const std::string& text) {
    Signature out;
    for (std::size_t k = 0; k < text.size(); ++k) {
        unsigned char c = static_cast<unsigned char>(text[k]);
        if (c == '+') {
            out += '+';
        } else if (c == '-') {
            out += '-';
        } else if (c == 0xE2 && k + 2 < text.size() && static_cast<unsigned char>(text[k + 1]) == 0x88 &&
                   static_cast<unsigned char>(text[k + 2]) == 0x92) {
            out += '-';  // U+2212 minus sign
            k += 2;
        } else if (c == ' ') {
            continue;
        } else {
            throw std::invalid_argument("bad signature character in '" + text + "'");
        }
    }
    return out;
}

Signature negate(const Signature& s) {
    Signature out = s;
    for (char& c : out) c = (c == '+') ? '-' : '+';
    return out;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts[k] > parts[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts.empty()) {
        for (int col = 0; col < parts[0]; ++col) {
            int h = 0;
            for (int p : parts) h += (p > col) ? 1 : 0;
            c.push_back(h);
        }
    }
    return Partition(c);
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts[k]);
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string cleaned;
    for (char c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']' || c == ' ') continue;
        cleaned += c;
    }
    std::stringstream ss(cleaned);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty part in partition '" + text + "'");
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad partition '" + text + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return Partition(parts);
}

namespace {

void partitions_rec(int remaining, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, maxPart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions needs n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

bool dominance_ge(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size()) throw std::invalid_argument("dominance_ge: partitions of different sizes");
    int a = 0, b = 0;
    int len = std::max(mu.length(), nu.length());
    for (int k = 0; k < len; ++k) {
        a += mu[k];
        b += nu[k];
        if (a < b) return false;
    }
    return true;
}

std::string StandardTableau::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out += '/';
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out += '.';
            out += std::to_string(rows[r][c]);
        }
    }
    return out;
}

bool is_standard(const StandardTableau& t) {
    int n = t.shape.size();
    std::vector<bool> seen(n + 1, false);
    if (static_cast<int>(t.rows.size()) != t.shape.length()) return false;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (static_cast<int>(t.rows[r].size()) != t.shape.parts[r]) return false;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            int v = t.rows[r][c];
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
            if (c > 0 && t.rows[r][c - 1] >= v) return false;
            if (r > 0 && t.rows[r - 1][c] >= v) return false;
        }
    }
    return true;
}

StandardTableau tableau_from_rows(std::vector<std::vector<int>> rows) {
    std::vector<int> shape;
    for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
    StandardTableau t{Partition(shape), std::move(rows)};
    if (!is_standard(t)) throw std::invalid_argument("not a standard tableau: " + t.str());
    return t;
}

namespace {

void syt_rec(const Partition& shape, int next, int n, std::vector<std::vector<int>>& rows,
             std::vector<StandardTableau>& out) {
    if (next > n) {
        out.push_back(StandardTableau{shape, rows});
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        int len = static_cast<int>(rows[r].size());
        if (len < shape.parts[r] && (r == 0 || static_cast<int>(rows[r - 1].size()) > len)) {
            rows[r].push_back(next);
            syt_rec(shape, next + 1, n, rows, out);
            rows[r].pop_back();
        }
    }
}

std::vector<int> flatten(const StandardTableau& t) {
    std::vector<int> f;
    for (const auto& r : t.rows) f.insert(f.end(), r.begin(), r.end());
    return f;
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(shape.length());
    syt_rec(shape, 1, shape.size(), rows, out);
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) { return flatten(a) < flatten(b); });
    return out;
}

long long count_syt(const Partition& shape) {
    int n = shape.size();
    Partition conj = shape.conjugate();
    long long num = 1;
    std::vector<int> hooks;
    for (int r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape.parts[r]; ++c) hooks.push_back(shape.parts[r] - c - 1 + conj.parts[c] - r);
    }
    for (int k = 2; k <= n; ++k) num *= k;
    long long den = 1;
    for (int h : hooks) den *= h;
    return num / den;
}

namespace {

std::vector<int> row_of(const StandardTableau& t) {
    std::vector<int> row(t.size() + 1, -1);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (int v : t.rows[r]) row[v] = static_cast<int>(r);
    return row;
}

}  // namespace

Signature descent_signature(const StandardTableau& t) {
    int n = t.size();
    auto row = row_of(t);
    Signature s;
    for (int i = 1; i < n; ++i) s += (row[i + 1] > row[i]) ? '-' : '+';
    return s;
}

std::vector<int> reading_word(const StandardTableau& t) {
    std::vector<int> w;
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

StandardTableau dual_equiv_involution(const StandardTableau& t, int i) {
    int n = t.size();
    if (i <= 1 || i >= n) throw std::invalid_argument("dual_equiv_involution needs 1 < i < n");
    auto word = reading_word(t);
    std::vector<int> pos(n + 1);
    for (std::size_t k = 0; k < word.size(); ++k) pos[word[k]] = static_cast<int>(k);
    int a = pos[i - 1], b = pos[i], c = pos[i + 1];
    if ((a < b && b < c) || (c < b && b < a)) return t;
    int other = (std::abs(a - b) > std::abs(c - b)) ? i - 1 : i + 1;
    StandardTableau out = t;
    for (auto& r : out.rows)
        for (int& v : r) {
            if (v == i) v = other;
            else if (v == other) v = i;
        }
    return out;
}

Signature superstandard_signature(const Partition& lambda) {
    int n = lambda.size();
    Signature s(n > 0 ? n - 1 : 0, '+');
    int acc = 0;
    for (int k = 0; k + 1 < lambda.length(); ++k) {
        acc += lambda.parts[k];
        s[acc - 1] = '-';
    }
    return s;
}

}  // namespace deg
