#include "telhom/group.hpp"

#include <stdexcept>

namespace telhom {

Group::Group(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
    std::size_t n = names_.size();
    if (n == 0) throw std::invalid_argument("group: empty element list");
    if (table_.size() != n)
        throw std::invalid_argument("group: table must have one row per element");
    for (auto& row : table_) {
        if (row.size() != n)
            throw std::invalid_argument("group: table rows must have one entry per element");
        for (auto v : row)
            if (v >= n) throw std::invalid_argument("group: table entry out of range");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("group: duplicate element name " + names_[i]);

    bool found = false;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a)
            if (table_[e][a] != a || table_[a][e] != a) { ok = false; break; }
        if (ok) { id_ = e; found = true; break; }
    }
    if (!found) throw std::invalid_argument("group: no identity element");

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("group: multiplication is not associative");

    inv_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == id_ && table_[b][a] == id_) { inv_[a] = b; break; }
        if (inv_[a] == n) throw std::invalid_argument("group: element without inverse");
    }
}

std::optional<std::size_t> Group::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Group Group::trivial() {
    return Group({"e"}, {{0}});
}

Group Group::cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("group: cyclic order must be positive");
    std::vector<std::string> names;
    names.push_back("e");
    if (n > 1) names.push_back("g");
    for (std::size_t i = 2; i < n; ++i) names.push_back("g" + std::to_string(i));
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    return Group(std::move(names), std::move(table));
}

Group Group::klein_four() {
    std::vector<std::string> names = {"e", "a", "b", "ab"};
    // xor on two bits
    std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            table[a][b] = a ^ b;
    return Group(std::move(names), std::move(table));
}

} // namespace telhom
