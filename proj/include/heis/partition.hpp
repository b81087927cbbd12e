#pragma once

#include <algorithm>
#include <compare>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heis/rational.hpp"

namespace heis {

// Integer partition: weakly decreasing positive parts, no trailing zeros.
// The empty partition is the default value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: nonpositive part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts not weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // Part in row i (0-based); 0 beyond the last row.
    int part(int i) const { return (i >= 0 && i < length()) ? parts_[i] : 0; }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (mu.parts_[i] > parts_[i]) return false;
        return true;
    }

    auto operator<=>(const Partition& o) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

    // Parses the "[3,1]" literal form; "[]" is the empty partition.
    static Partition parse(const std::string& s) {
        std::string t = s;
        if (t.size() < 2 || t.front() != '[' || t.back() != ']')
            throw std::invalid_argument("Partition::parse: expected [..]: " + s);
        t = t.substr(1, t.size() - 2);
        std::vector<int> parts;
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            parts.push_back(std::stoi(item));
        }
        return Partition(parts);
    }

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

inline Partition conjugate(const Partition& lam) {
    std::vector<int> cols;
    if (!lam.empty()) {
        cols.resize(lam.part(0), 0);
        for (int i = 0; i < lam.length(); ++i)
            for (int j = 0; j < lam.part(i); ++j) cols[j]++;
    }
    return Partition(cols);
}

// All partitions fitting in an r x c box (at most r parts, each at most c).
inline std::vector<Partition> box_partitions(int r, int c) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxpart) -> void {
        if (row == r) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
        out.push_back(Partition(cur));  // stop adding parts here
    };
    if (r < 0 || c < 0) return out;
    if (r == 0 || c == 0) {
        out.push_back(Partition{});
    } else {
        rec(rec, 0, c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// All mu >= lam with |mu| - |lam| = n and mu/lam a horizontal strip (<= 1 box per column).
inline std::vector<Partition> add_horizontal_strip(const Partition& lam, int n) {
    std::vector<Partition> out;
    int rows = lam.length() + 1;
    std::vector<int> mu(rows, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == rows) {
            if (rem == 0) out.push_back(Partition(mu));
            return;
        }
        // Row i of mu ranges over [lam_i, min(prev row of mu, lam_{i-1} bound)].
        int lo = lam.part(i);
        int hi = (i == 0) ? lam.part(0) + rem : std::min(mu[i - 1], lam.part(i - 1));
        // Horizontal strip condition mu_{i} <= lam_{i-1} keeps one box per column.
        for (int v = lo; v <= hi; ++v) {
            if (v - lo > rem) break;
            mu[i] = v;
            self(self, i + 1, rem - (v - lo));
        }
        mu[i] = 0;
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// All mu <= lam with |lam| - |mu| = n and lam/mu a vertical strip (<= 1 box per row).
inline std::vector<Partition> remove_vertical_strip(const Partition& lam, int n) {
    std::vector<Partition> out;
    int rows = lam.length();
    std::vector<int> mu(rows, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == rows) {
            if (rem == 0) {
                try {
                    out.push_back(Partition(mu));
                } catch (const std::invalid_argument&) {
                }
            }
            return;
        }
        for (int v : {lam.part(i), lam.part(i) - 1}) {
            if (v < 0 || lam.part(i) - v > rem) continue;
            if (i > 0 && v > mu[i - 1]) continue;
            mu[i] = v;
            self(self, i + 1, rem - (lam.part(i) - v));
        }
        mu[i] = 0;
    };
    if (rows == 0) {
        if (n == 0) out.push_back(Partition{});
        return out;
    }
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<Partition> remove_horizontal_strip(const Partition& lam, int n) {
    std::vector<Partition> out;
    for (const Partition& mu : box_partitions(lam.length(), lam.part(0)))
        if (mu.size() == lam.size() - n && lam.contains(mu)) {
            bool ok = true;  // lam/mu horizontal strip: lam_{i+1} <= mu_i
            for (int i = 0; i + 1 < lam.length() && ok; ++i)
                if (lam.part(i + 1) > mu.part(i)) ok = false;
            if (ok) out.push_back(mu);
        }
    return out;
}

inline std::vector<Partition> add_vertical_strip(const Partition& lam, int n) {
    std::vector<Partition> out;
    for (const Partition& mu : add_horizontal_strip(conjugate(lam), n)) out.push_back(conjugate(mu));
    std::sort(out.begin(), out.end());
    return out;
}

// Number of standard Young tableaux (hook length formula); equals dim S(lam).
inline Int num_standard_tableaux(const Partition& lam) {
    int n = lam.size();
    if (n == 0) return 1;
    Partition conj = conjugate(lam);
    Int hooks = 1;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.part(i); ++j)
            hooks *= (lam.part(i) - j) + (conj.part(j) - i) - 1;
    return factorial(n) / hooks;
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) return out;
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

// All partitions contained in lam.
inline std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    for (const Partition& mu : box_partitions(lam.length(), lam.empty() ? 0 : lam.part(0)))
        if (lam.contains(mu)) out.push_back(mu);
    return out;
}

// z_lambda = prod m_i! i^{m_i} where m_i = multiplicity of i in lambda.
inline Int z_of(const Partition& lam) {
    Int z = 1;
    int i = 0;
    while (i < lam.length()) {
        int j = i;
        while (j < lam.length() && lam.part(j) == lam.part(i)) ++j;
        int mult = j - i;
        z *= factorial(mult);
        for (int t = 0; t < mult; ++t) z *= lam.part(i);
        i = j;
    }
    return z;
}

}  // namespace heis
