#pragma once

// Finite groups given by explicit multiplication tables.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace telhom {

class Group {
public:
    // table[a][b] = index of a*b; validated to be a group
    Group(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);

    static Group trivial();
    static Group cyclic(std::size_t n);
    static Group klein_four();

    std::size_t order() const { return names_.size(); }
    std::size_t op(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inv_[a]; }
    std::size_t identity() const { return id_; }
    const std::string& name(std::size_t a) const { return names_[a]; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const Group& o) const { return names_ == o.names_ && table_ == o.table_; }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inv_;
    std::size_t id_ = 0;
};

} // namespace telhom
