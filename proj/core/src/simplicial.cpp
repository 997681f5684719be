#include "telhom/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace telhom {

namespace {

// shared finisher: given strictly increasing vertex lists per dimension,
// sort them lexicographically and wire up faces by lookup
CellComplex build_from_verts(std::size_t n_vertices,
                             std::vector<std::vector<std::vector<std::size_t>>> lists) {
    if (n_vertices == 0) throw std::invalid_argument("complex: needs at least one vertex");
    std::vector<std::vector<CellComplex::Cell>> cells;
    cells.emplace_back();
    for (std::size_t v = 0; v < n_vertices; ++v)
        cells[0].push_back({{}, {v}});

    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(1);
    for (std::size_t v = 0; v < n_vertices; ++v)
        index[0][{v}] = v;

    while (!lists.empty() && lists.back().empty()) lists.pop_back();
    for (std::size_t k = 1; k <= lists.size(); ++k) {
        auto& lv = lists[k - 1];
        for (auto& l : lv) {
            if (l.size() != k + 1)
                throw std::logic_error("complex builder: vertex list of wrong length");
            for (std::size_t j = 0; j + 1 < l.size(); ++j)
                if (l[j] >= l[j + 1])
                    throw std::logic_error("complex builder: vertex list not increasing");
        }
        std::sort(lv.begin(), lv.end());
        lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
        cells.emplace_back();
        index.emplace_back();
        for (auto& l : lv) {
            CellComplex::Cell c;
            c.verts = l;
            for (std::size_t j = 0; j <= k; ++j) {
                std::vector<std::size_t> fv = l;
                fv.erase(fv.begin() + static_cast<std::ptrdiff_t>(j));
                auto it = index[k - 1].find(fv);
                if (it == index[k - 1].end())
                    throw std::logic_error("complex builder: missing face");
                c.faces.push_back(it->second);
            }
            index[k][l] = cells[k].size();
            cells[k].push_back(std::move(c));
        }
    }
    return CellComplex(std::move(cells));
}

} // namespace

CellComplex::CellComplex(std::vector<std::vector<Cell>> cells) : cells_(std::move(cells)) {
    while (cells_.size() > 1 && cells_.back().empty()) cells_.pop_back();
    if (cells_.empty() || cells_[0].empty())
        throw std::invalid_argument("complex: needs at least one vertex");

    for (std::size_t i = 0; i < cells_[0].size(); ++i) {
        const Cell& c = cells_[0][i];
        if (!c.faces.empty() || c.verts != std::vector<std::size_t>{i})
            throw std::invalid_argument("complex: vertex cells must list themselves");
    }
    for (std::size_t k = 1; k < cells_.size(); ++k) {
        for (std::size_t i = 0; i < cells_[k].size(); ++i) {
            const Cell& c = cells_[k][i];
            if (c.faces.size() != k + 1 || c.verts.size() != k + 1)
                throw std::invalid_argument("complex: cell with wrong face or vertex count");
            for (auto f : c.faces)
                if (f >= cells_[k - 1].size())
                    throw std::invalid_argument("complex: face index out of range");
            for (auto v : c.verts)
                if (v >= cells_[0].size())
                    throw std::invalid_argument("complex: vertex index out of range");
            for (std::size_t j = 0; j <= k; ++j) {
                std::vector<std::size_t> expect = c.verts;
                expect.erase(expect.begin() + static_cast<std::ptrdiff_t>(j));
                if (cells_[k - 1][c.faces[j]].verts != expect)
                    throw std::invalid_argument("complex: face vertex lists inconsistent");
            }
            for (std::size_t j = 1; k >= 2 && j <= k; ++j)
                for (std::size_t l = 0; l < j; ++l)
                    if (cells_[k - 1][c.faces[j]].faces[l] != cells_[k - 1][c.faces[l]].faces[j - 1])
                        throw std::invalid_argument("complex: face operators violate the "
                                                    "simplicial identities");
        }
    }

    simplicial_ = true;
    lookup_.resize(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        for (std::size_t i = 0; i < cells_[k].size(); ++i) {
            const auto& v = cells_[k][i].verts;
            for (std::size_t j = 0; j + 1 < v.size(); ++j)
                if (v[j] >= v[j + 1]) simplicial_ = false;
            if (!lookup_[k].emplace(v, i).second) simplicial_ = false;
        }
    }

    std::vector<std::size_t> dims;
    for (auto& layer : cells_) dims.push_back(layer.size());
    std::vector<f2::Matrix> bnd;
    for (std::size_t k = 1; k < cells_.size(); ++k) {
        f2::Matrix m(cells_[k - 1].size(), cells_[k].size());
        for (std::size_t i = 0; i < cells_[k].size(); ++i)
            for (auto f : cells_[k][i].faces)
                m.flip(f, i);   // flip accumulates the mod 2 face multiplicity
        bnd.push_back(std::move(m));
    }
    chain_ = std::make_shared<const ChainComplex>(std::move(dims), std::move(bnd));
}

CellComplex CellComplex::point() { return discrete(1); }

CellComplex CellComplex::discrete(std::size_t n_vertices) {
    return build_from_verts(n_vertices, {});
}

CellComplex CellComplex::from_facets(std::size_t n_vertices,
                                     std::vector<std::vector<std::size_t>> facets) {
    std::vector<std::vector<std::vector<std::size_t>>> lists;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("facet with repeated vertex");
        if (f.empty()) throw std::invalid_argument("empty facet");
        for (auto v : f)
            if (v >= n_vertices) throw std::invalid_argument("facet vertex out of range");
        // all nonempty subsets
        for (std::size_t mask = 1; mask < (std::size_t(1) << f.size()); ++mask) {
            std::vector<std::size_t> sub;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (mask >> j & 1) sub.push_back(f[j]);
            if (sub.size() < 2) continue;
            if (lists.size() < sub.size() - 1) lists.resize(sub.size() - 1);
            lists[sub.size() - 2].push_back(std::move(sub));
        }
    }
    return build_from_verts(n_vertices, std::move(lists));
}

std::size_t CellComplex::total_cells() const {
    std::size_t n = 0;
    for (auto& layer : cells_) n += layer.size();
    return n;
}

std::size_t CellComplex::front_face(std::size_t k, std::size_t i, std::size_t p) const {
    if (p > k) throw std::invalid_argument("front face: degree out of range");
    std::size_t cur = i;
    for (std::size_t d = k; d > p; --d) cur = cells_[d][cur].faces[d];
    return cur;
}

std::size_t CellComplex::back_face(std::size_t k, std::size_t i, std::size_t q) const {
    if (q > k) throw std::invalid_argument("back face: degree out of range");
    std::size_t cur = i;
    for (std::size_t d = k; d > q; --d) cur = cells_[d][cur].faces[0];
    return cur;
}

std::optional<std::size_t> CellComplex::find(std::size_t k,
                                             const std::vector<std::size_t>& verts) const {
    if (!simplicial_) throw std::logic_error("find: complex is not vertex determined");
    if (k >= lookup_.size()) return std::nullopt;
    auto it = lookup_[k].find(verts);
    if (it == lookup_[k].end()) return std::nullopt;
    return it->second;
}

CellComplex join(const CellComplex& a, const CellComplex& b) {
    if (!a.is_simplicial() || !b.is_simplicial())
        throw std::invalid_argument("join: requires simplicial complexes");
    std::size_t na = a.vertex_count(), nb = b.vertex_count();
    std::vector<std::vector<std::vector<std::size_t>>> lists;
    auto push = [&](std::vector<std::size_t> l) {
        if (l.size() < 2) return;
        if (lists.size() < l.size() - 1) lists.resize(l.size() - 1);
        lists[l.size() - 2].push_back(std::move(l));
    };
    // cells of a alone, of b alone, and of every mixed pair
    for (std::size_t k = 0; k <= a.top_dim(); ++k)
        for (std::size_t i = 0; i < a.size(k); ++i)
            push(a.cell(k, i).verts);
    for (std::size_t k = 0; k <= b.top_dim(); ++k)
        for (std::size_t i = 0; i < b.size(k); ++i) {
            std::vector<std::size_t> l;
            for (auto v : b.cell(k, i).verts) l.push_back(na + v);
            push(std::move(l));
        }
    for (std::size_t ka = 0; ka <= a.top_dim(); ++ka)
        for (std::size_t ia = 0; ia < a.size(ka); ++ia)
            for (std::size_t kb = 0; kb <= b.top_dim(); ++kb)
                for (std::size_t ib = 0; ib < b.size(kb); ++ib) {
                    std::vector<std::size_t> l = a.cell(ka, ia).verts;
                    for (auto v : b.cell(kb, ib).verts) l.push_back(na + v);
                    push(std::move(l));
                }
    return build_from_verts(na + nb, std::move(lists));
}

CellComplex product(const CellComplex& a, const CellComplex& b) {
    if (!a.is_simplicial() || !b.is_simplicial())
        throw std::invalid_argument("product: requires simplicial complexes");
    std::size_t nb = b.vertex_count();
    std::vector<std::vector<std::vector<std::size_t>>> lists;
    auto push = [&](const std::vector<std::size_t>& l) {
        if (l.size() < 2) return;
        if (lists.size() < l.size() - 1) lists.resize(l.size() - 1);
        lists[l.size() - 2].push_back(l);
    };
    // monotone staircases through the vertex grid of each cell pair; plain,
    // vertical and diagonal steps all appear, so dimensions mix freely
    std::vector<std::size_t> path;
    for (std::size_t ka = 0; ka <= a.top_dim(); ++ka)
        for (std::size_t ia = 0; ia < a.size(ka); ++ia) {
            const auto& va = a.cell(ka, ia).verts;
            for (std::size_t kb = 0; kb <= b.top_dim(); ++kb)
                for (std::size_t ib = 0; ib < b.size(kb); ++ib) {
                    const auto& vb = b.cell(kb, ib).verts;
                    path.assign(1, va[0] * nb + vb[0]);
                    std::function<void(std::size_t, std::size_t)> walk =
                        [&](std::size_t i, std::size_t j) {
                            if (i == ka && j == kb) { push(path); return; }
                            if (i < ka) {
                                path.push_back(va[i + 1] * nb + vb[j]);
                                walk(i + 1, j);
                                path.pop_back();
                            }
                            if (j < kb) {
                                path.push_back(va[i] * nb + vb[j + 1]);
                                walk(i, j + 1);
                                path.pop_back();
                            }
                            if (i < ka && j < kb) {
                                path.push_back(va[i + 1] * nb + vb[j + 1]);
                                walk(i + 1, j + 1);
                                path.pop_back();
                            }
                        };
                    walk(0, 0);
                }
        }
    return build_from_verts(a.vertex_count() * nb, std::move(lists));
}

ChainMap induced_chain_map(const CellComplex& x, const CellComplex& y,
                           const std::vector<std::size_t>& vertex_map) {
    if (!x.is_simplicial() || !y.is_simplicial())
        throw std::invalid_argument("induced map: requires simplicial complexes");
    if (vertex_map.size() != x.vertex_count())
        throw std::invalid_argument("induced map: vertex map has wrong length");
    for (auto v : vertex_map)
        if (v >= y.vertex_count())
            throw std::invalid_argument("induced map: image vertex out of range");
    std::vector<f2::Matrix> comps;
    for (std::size_t k = 0; k <= x.top_dim(); ++k) {
        f2::Matrix m(y.chain()->dim(k), x.size(k));
        for (std::size_t i = 0; i < x.size(k); ++i) {
            std::vector<std::size_t> img;
            for (auto v : x.cell(k, i).verts) img.push_back(vertex_map[v]);
            std::sort(img.begin(), img.end());
            if (std::adjacent_find(img.begin(), img.end()) != img.end())
                continue;   // collapsed cells vanish at chain level
            auto t = y.find(k, img);
            if (!t)
                throw std::invalid_argument("induced map: image of a cell is not a cell");
            m.flip(*t, i);
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(x.chain(), y.chain(), std::move(comps));
}

namespace {

// delete the vertex positions of a cell that are not in `keep`
std::pair<std::size_t, std::size_t> iterated_face(const CellComplex& x, std::size_t k,
                                                  std::size_t i, std::size_t keep) {
    std::size_t cur = i, dim = k;
    for (std::size_t pos = k + 1; pos-- > 0;) {
        if (keep >> pos & 1) continue;
        cur = x.face(dim, cur, pos);
        --dim;
    }
    return {dim, cur};
}

} // namespace

Subdivision barycentric(const CellComplex& x) {
    std::vector<std::size_t> off(x.top_dim() + 2, 0);
    for (std::size_t k = 0; k <= x.top_dim(); ++k) off[k + 1] = off[k] + x.size(k);
    auto global = [&](std::size_t k, std::size_t i) { return off[k] + i; };

    // canonical representative of a subdivision cell: (carrier cell, chain of
    // vertex position subsets ending at the full set)
    using Key = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<std::map<Key, std::size_t>> index;
    std::vector<std::vector<Key>> keys;
    for (std::size_t k = 0; k <= x.top_dim(); ++k) {
        std::size_t full = (std::size_t(1) << (k + 1)) - 1;
        for (std::size_t i = 0; i < x.size(k); ++i) {
            std::vector<std::size_t> chain = {full};
            std::function<void()> extend = [&]() {
                std::size_t d = chain.size() - 1;
                if (index.size() <= d) { index.resize(d + 1); keys.resize(d + 1); }
                Key key{global(k, i), chain};
                index[d][key] = 0;   // number later, after sorting
                keys[d].push_back(key);
                // prepend any proper nonempty subset of the current smallest
                std::size_t cur = chain.back();
                for (std::size_t sub = (cur - 1) & cur; sub; sub = (sub - 1) & cur) {
                    chain.push_back(sub);
                    extend();
                    chain.pop_back();
                }
            };
            extend();
        }
    }
    for (auto& layer : index) {
        std::size_t n = 0;
        for (auto& [key, id] : layer) id = n++;
    }

    // rebuild each key's chain in canonical orientation: stored chains run
    // from the full set downward, cells want them ascending
    auto ascending = [](std::vector<std::size_t> chain) {
        std::reverse(chain.begin(), chain.end());
        return chain;
    };
    auto locate = [&](std::size_t d, std::size_t cell_id, std::vector<std::size_t> desc_chain) {
        auto it = index[d].find({cell_id, std::move(desc_chain)});
        if (it == index[d].end())
            throw std::logic_error("subdivision: missing canonical cell");
        return it->second;
    };
    auto cell_of_global = [&](std::size_t id) {
        std::size_t k = 0;
        while (off[k + 1] <= id) ++k;
        return std::pair<std::size_t, std::size_t>{k, id - off[k]};
    };
    // reindex a subset of `within` through the order isomorphism onto [popcount-1]
    auto compress = [](std::size_t subset, std::size_t within) {
        std::size_t out = 0, bit = 0;
        for (std::size_t pos = 0; pos < 64; ++pos) {
            if (!(within >> pos & 1)) continue;
            if (subset >> pos & 1) out |= std::size_t(1) << bit;
            ++bit;
        }
        return out;
    };

    std::vector<std::vector<CellComplex::Cell>> cells(index.size());
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> carrier(index.size());
    for (std::size_t d = 0; d < index.size(); ++d) {
        cells[d].resize(index[d].size());
        carrier[d].resize(index[d].size());
        for (auto& [key, id] : index[d]) {
            auto [ck, ci] = cell_of_global(key.first);
            auto chain = ascending(key.second);
            CellComplex::Cell c;
            for (auto subset : chain) {
                auto [fk, fi] = iterated_face(x, ck, ci, subset);
                c.verts.push_back(global(fk, fi));
            }
            if (d > 0) {
                for (std::size_t j = 0; j <= d; ++j) {
                    std::vector<std::size_t> sub = chain;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
                    if (j < d) {
                        c.faces.push_back(locate(d - 1, key.first,
                                                 ascending(std::move(sub))));
                    } else {
                        // dropping the full set moves the cell into the face
                        // carried by the new largest subset
                        std::size_t within = sub.back();
                        auto [fk, fi] = iterated_face(x, ck, ci, within);
                        for (auto& s : sub) s = compress(s, within);
                        c.faces.push_back(locate(d - 1, global(fk, fi),
                                                 ascending(std::move(sub))));
                    }
                }
            }
            carrier[d][id] = {ck, ci};
            cells[d][id] = std::move(c);
        }
    }
    CellComplex sd(std::move(cells));

    // last vertex comparison map: a chain of subsets maps to the face of its
    // carrier spanned by the maxima, or to zero when maxima repeat
    std::vector<f2::Matrix> comps;
    for (std::size_t d = 0; d <= sd.top_dim(); ++d) {
        f2::Matrix m(x.chain()->dim(d), sd.size(d));
        for (auto& [key, id] : index[d]) {
            auto [ck, ci] = cell_of_global(key.first);
            auto chain = ascending(key.second);
            std::size_t mask = 0;
            bool repeat = false;
            for (auto subset : chain) {
                std::size_t top = 0;
                for (std::size_t pos = 0; pos < 64; ++pos)
                    if (subset >> pos & 1) top = pos;
                if (mask >> top & 1) { repeat = true; break; }
                mask |= std::size_t(1) << top;
            }
            if (repeat) continue;
            auto [fk, fi] = iterated_face(x, ck, ci, mask);
            if (fk != d) throw std::logic_error("subdivision: comparison degree mismatch");
            m.flip(fi, id);
        }
        comps.push_back(std::move(m));
    }
    ChainMap flatten(sd.chain(), x.chain(), std::move(comps));
    return Subdivision{std::move(sd), std::move(carrier), std::move(flatten)};
}

void validate_action(const CellComplex& x, const Group& g, const VertexAction& action) {
    std::size_t n = x.vertex_count();
    if (action.size() != g.order())
        throw ActionError("action: one vertex map per group element required");
    for (std::size_t e = 0; e < g.order(); ++e) {
        if (action[e].size() != n)
            throw ActionError("action: vertex map of wrong length for element " + g.name(e));
        std::vector<bool> hit(n, false);
        for (auto v : action[e]) {
            if (v >= n) throw ActionError("action: image vertex out of range");
            if (hit[v]) throw ActionError("action: element " + g.name(e) +
                                          " is not a vertex permutation");
            hit[v] = true;
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (action[g.identity()][v] != v)
            throw ActionError("action: identity element must act trivially");
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            for (std::size_t v = 0; v < n; ++v)
                if (action[g.op(a, b)][v] != action[a][action[b][v]])
                    throw ActionError("action: vertex maps do not compose like the group");
    cell_action(x, g, action);   // cellularity
}

CellAction cell_action(const CellComplex& x, const Group& g, const VertexAction& action) {
    if (!x.is_simplicial())
        throw ActionError("action: complex is not vertex determined");
    CellAction ca;
    ca.map.assign(g.order(), {});
    for (std::size_t e = 0; e < g.order(); ++e) {
        ca.map[e].resize(x.top_dim() + 1);
        for (std::size_t k = 0; k <= x.top_dim(); ++k) {
            ca.map[e][k].resize(x.size(k));
            for (std::size_t i = 0; i < x.size(k); ++i) {
                std::vector<std::size_t> img;
                for (auto v : x.cell(k, i).verts) img.push_back(action[e][v]);
                std::sort(img.begin(), img.end());
                auto t = x.find(k, img);
                if (!t)
                    throw ActionError("action: element " + g.name(e) +
                                      " does not carry cells to cells");
                ca.map[e][k][i] = *t;
            }
        }
    }
    return ca;
}

bool action_order_compatible(const CellComplex& x, const Group& g, const VertexAction& action) {
    for (std::size_t e = 0; e < g.order(); ++e)
        for (std::size_t k = 1; k <= x.top_dim(); ++k)
            for (std::size_t i = 0; i < x.size(k); ++i) {
                const auto& v = x.cell(k, i).verts;
                for (std::size_t j = 0; j + 1 < v.size(); ++j)
                    if (action[e][v[j]] >= action[e][v[j + 1]]) return false;
            }
    return true;
}

VertexAction subdivision_action(const CellComplex& x, const Group& g,
                                const VertexAction& action) {
    CellAction ca = cell_action(x, g, action);
    std::vector<std::size_t> off(x.top_dim() + 2, 0);
    for (std::size_t k = 0; k <= x.top_dim(); ++k) off[k + 1] = off[k] + x.size(k);
    VertexAction out(g.order(), std::vector<std::size_t>(off.back()));
    for (std::size_t e = 0; e < g.order(); ++e)
        for (std::size_t k = 0; k <= x.top_dim(); ++k)
            for (std::size_t i = 0; i < x.size(k); ++i)
                out[e][off[k] + i] = off[k] + ca.map[e][k][i];
    return out;
}

Quotient quotient(const CellComplex& x, const Group& g, const VertexAction& action) {
    CellComplex cur = x;
    VertexAction act = action;
    std::size_t rounds = 0;
    CellAction ca;
    for (;;) {
        validate_action(cur, g, act);
        for (std::size_t e = 0; e < g.order(); ++e) {
            if (e == g.identity()) continue;
            for (std::size_t v = 0; v < cur.vertex_count(); ++v)
                if (act[e][v] == v)
                    throw ActionError("action is not free: element " + g.name(e) +
                                      " fixes vertex " + std::to_string(v));
        }
        ca = cell_action(cur, g, act);
        bool fixed = false;
        for (std::size_t e = 0; e < g.order() && !fixed; ++e) {
            if (e == g.identity()) continue;
            for (std::size_t k = 0; k <= cur.top_dim() && !fixed; ++k)
                for (std::size_t i = 0; i < cur.size(k); ++i)
                    if (ca.map[e][k][i] == i) { fixed = true; break; }
        }
        if (!fixed && action_order_compatible(cur, g, act)) break;
        if (rounds >= 2)
            throw ActionError("action did not become free under subdivision");
        // subdividing turns a setwise fixed cell into a fixed vertex, and
        // makes any action order compatible (subdivision cells list carriers
        // by strictly ascending dimension)
        act = subdivision_action(cur, g, act);
        cur = barycentric(cur).complex;
        ++rounds;
    }

    std::vector<std::vector<std::size_t>> orbit(cur.top_dim() + 1), rep(cur.top_dim() + 1);
    for (std::size_t k = 0; k <= cur.top_dim(); ++k) {
        orbit[k].assign(cur.size(k), cur.size(k));
        for (std::size_t i = 0; i < cur.size(k); ++i) {
            if (orbit[k][i] != cur.size(k)) continue;
            std::size_t o = rep[k].size();
            rep[k].push_back(i);
            std::size_t hits = 0;
            for (std::size_t e = 0; e < g.order(); ++e) {
                std::size_t img = ca.map[e][k][i];
                if (orbit[k][img] == cur.size(k)) { orbit[k][img] = o; ++hits; }
            }
            if (hits != g.order())
                throw std::logic_error("quotient: orbit smaller than the group");
        }
    }

    std::vector<std::vector<CellComplex::Cell>> cells(cur.top_dim() + 1);
    for (std::size_t k = 0; k <= cur.top_dim(); ++k) {
        for (std::size_t o = 0; o < rep[k].size(); ++o) {
            const auto& c = cur.cell(k, rep[k][o]);
            CellComplex::Cell qc;
            for (auto v : c.verts) qc.verts.push_back(orbit[0][v]);
            if (k > 0)
                for (auto f : c.faces) qc.faces.push_back(orbit[k - 1][f]);
            cells[k].push_back(std::move(qc));
        }
    }
    CellComplex qcx(std::move(cells));
    return Quotient{std::move(cur), std::move(qcx), rounds, std::move(orbit), std::move(rep)};
}

ChainMap descend(const ChainMap& f, const Quotient& src, const Quotient& tgt) {
    if (!(f.source() == *src.domain.chain()) || !(f.target() == *tgt.domain.chain()))
        throw std::invalid_argument("descend: map endpoints do not match the quotients");
    std::vector<f2::Matrix> comps;
    std::size_t top = f.source().top_degree();
    for (std::size_t k = 0; k <= top; ++k) {
        f2::Matrix c = f.component(k);
        f2::Matrix m(tgt.complex.chain()->dim(k), src.complex.chain()->dim(k));
        for (std::size_t o = 0; o < m.cols(); ++o) {
            std::size_t r = src.rep[k][o];
            for (std::size_t row = 0; row < c.rows(); ++row)
                if (c.get(row, r)) m.flip(tgt.orbit[k][row], o);
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(src.complex.chain(), tgt.complex.chain(), std::move(comps));
}

f2::Vector coboundary(const CellComplex& x, std::size_t p, const f2::Vector& a) {
    if (a.size() != x.size(p)) throw std::invalid_argument("coboundary: wrong cochain size");
    f2::Vector out(x.size(p + 1));
    for (std::size_t i = 0; i < x.size(p + 1); ++i)
        for (auto f : x.cell(p + 1, i).faces)
            if (a.get(f)) out.flip(i);
    return out;
}

f2::Vector cup(const CellComplex& x, std::size_t p, const f2::Vector& a,
               std::size_t q, const f2::Vector& b) {
    if (a.size() != x.size(p) || b.size() != x.size(q))
        throw std::invalid_argument("cup: wrong cochain size");
    f2::Vector out(x.size(p + q));
    for (std::size_t i = 0; i < x.size(p + q); ++i)
        if (a.get(x.front_face(p + q, i, p)) && b.get(x.back_face(p + q, i, q)))
            out.flip(i);
    return out;
}

f2::Vector cap(const CellComplex& x, std::size_t n, const f2::Vector& z,
               std::size_t p, const f2::Vector& a) {
    if (p > n) throw std::invalid_argument("cap: cochain degree exceeds chain degree");
    if (z.size() != x.size(n) || a.size() != x.size(p))
        throw std::invalid_argument("cap: wrong sizes");
    f2::Vector out(x.size(n - p));
    for (std::size_t i = 0; i < x.size(n); ++i)
        if (z.get(i) && a.get(x.back_face(n, i, p)))
            out.flip(x.front_face(n, i, n - p));
    return out;
}

} // namespace telhom
