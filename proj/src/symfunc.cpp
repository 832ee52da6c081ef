#include "deg/symfunc.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace deg {

void QSymFunction::add(const Signature& s, long long c) {
    if (c == 0) return;
    if (coeffs.empty() && degree == 0) degree = static_cast<int>(s.size()) + 1;
    if (static_cast<int>(s.size()) + 1 != degree) {
        throw std::invalid_argument("signature '" + s + "' does not match degree " + std::to_string(degree));
    }
    auto [it, inserted] = coeffs.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

long long QSymFunction::coefficient(const Signature& s) const {
    auto it = coeffs.find(s);
    return it == coeffs.end() ? 0 : it->second;
}

long long QSymFunction::total() const {
    long long t = 0;
    for (const auto& [s, c] : coeffs) t += c;
    return t;
}

QSymFunction& QSymFunction::operator+=(const QSymFunction& o) {
    for (const auto& [s, c] : o.coeffs) add(s, c);
    return *this;
}

QSymFunction& QSymFunction::operator-=(const QSymFunction& o) {
    for (const auto& [s, c] : o.coeffs) add(s, -c);
    return *this;
}

QSymFunction QSymFunction::scaled(long long k) const {
    QSymFunction out(degree);
    if (k == 0) return out;
    for (const auto& [s, c] : coeffs) out.coeffs[s] = c * k;
    return out;
}

QSymFunction operator+(QSymFunction a, const QSymFunction& b) { return a += b; }
QSymFunction operator-(QSymFunction a, const QSymFunction& b) { return a -= b; }

bool SchurExpansion::nonnegative() const {
    for (const auto& [p, c] : coeffs)
        if (c < 0) return false;
    return true;
}

const QSymFunction& schur_to_fundamental(const Partition& lambda) {
    static std::mutex mu;
    static std::map<Partition, QSymFunction> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
    QSymFunction f(lambda.size());
    for (const auto& t : enumerate_syt(lambda)) f.add(descent_signature(t), 1);
    return cache.emplace(lambda, std::move(f)).first->second;
}

SchurExpansion expand_in_schur(const QSymFunction& f) {
    SchurExpansion e;
    e.degree = f.degree;
    QSymFunction rest = f;
    if (f.degree >= 1) {
        for (const auto& lambda : enumerate_partitions(f.degree)) {
            long long c = rest.coefficient(superstandard_signature(lambda));
            if (c == 0) continue;
            e.coeffs[lambda] = c;
            rest -= schur_to_fundamental(lambda).scaled(c);
        }
    }
    e.residual = rest;
    return e;
}

PositivityResult is_schur_positive(const QSymFunction& f) {
    PositivityResult r;
    r.expansion = expand_in_schur(f);
    if (!r.expansion.exact()) {
        const auto& [s, c] = *r.expansion.residual.coeffs.begin();
        r.witness = "not symmetric: residual coefficient " + std::to_string(c) + " at " + s;
        return r;
    }
    for (const auto& [p, c] : r.expansion.coeffs) {
        if (c < 0) {
            r.witness = "negative coefficient " + std::to_string(c) + " at s[" + p.str() + "]";
            return r;
        }
    }
    r.positive = true;
    return r;
}

std::optional<Partition> is_single_schur(const QSymFunction& f) {
    auto e = expand_in_schur(f);
    if (!e.exact() || e.coeffs.size() != 1) return std::nullopt;
    const auto& [p, c] = *e.coeffs.begin();
    if (c != 1) return std::nullopt;
    return p;
}

QSymFunction reconstruct(const SchurExpansion& e) {
    QSymFunction f(e.degree);
    for (const auto& [p, c] : e.coeffs) f += schur_to_fundamental(p).scaled(c);
    f += e.residual;
    return f;
}

std::string format_schur_compact(const SchurExpansion& e) {
    std::string out;
    for (const auto& [p, c] : e.coeffs) {
        if (c < 0) out += '-';
        else if (!out.empty()) out += '+';
        long long a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a) + "*";
        out += "s[" + p.str() + "]";
    }
    if (out.empty()) out = "0";
    return out;
}

std::string format_schur_lines(const SchurExpansion& e) {
    std::ostringstream os;
    for (const auto& [p, c] : e.coeffs) os << p.str() << ' ' << c << '\n';
    if (!e.residual.is_zero()) {
        os << "RESIDUAL\n" << format_qsym_lines(e.residual);
    }
    return os.str();
}

std::string format_qsym_lines(const QSymFunction& f) {
    std::ostringstream os;
    for (const auto& [s, c] : f.coeffs) os << s << ' ' << c << '\n';
    return os.str();
}

QSymFunction parse_qsym_lines(const std::string& text) {
    QSymFunction f;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string sig;
        long long c = 0;
        if (!(ls >> sig)) continue;
        if (!(ls >> c)) throw std::invalid_argument("bad qsym line '" + line + "'");
        if (sig == "()") sig.clear();
        f.add(parse_signature(sig), c);
    }
    return f;
}

}  // namespace deg
