#include "telhom/borel.hpp"

#include <optional>
#include <stdexcept>

namespace telhom {

CellComplex milnor_eg(const Group& g, std::size_t n) {
    if (g.order() < 2)
        throw std::invalid_argument("milnor stage: group must be nontrivial");
    CellComplex e = CellComplex::discrete(g.order());
    for (std::size_t l = 0; l < n; ++l)
        e = join(e, CellComplex::discrete(g.order()));
    return e;
}

VertexAction eg_action(const Group& g, std::size_t n) {
    std::size_t o = g.order();
    VertexAction act(o, std::vector<std::size_t>((n + 1) * o));
    for (std::size_t h = 0; h < o; ++h)
        for (std::size_t l = 0; l <= n; ++l)
            for (std::size_t a = 0; a < o; ++a)
                act[h][l * o + a] = l * o + g.op(h, a);
    return act;
}

namespace {

VertexAction diagonal_action(const Group& g, const VertexAction& on_x, std::size_t nx,
                             const VertexAction& on_e, std::size_t ne) {
    VertexAction act(g.order(), std::vector<std::size_t>(nx * ne));
    for (std::size_t h = 0; h < g.order(); ++h)
        for (std::size_t vx = 0; vx < nx; ++vx)
            for (std::size_t ve = 0; ve < ne; ++ve)
                act[h][vx * ne + ve] = on_x[h][vx] * ne + on_e[h][ve];
    return act;
}

} // namespace

BorelSequence borel_sequence(const CellComplex& x, const Group& g,
                             const VertexAction& action, std::size_t stages) {
    if (g.order() < 2)
        throw std::invalid_argument("borel: group must be nontrivial");
    validate_action(x, g, action);

    CellComplex dom = x;
    VertexAction act = action;
    std::size_t rounds = 0;
    if (!action_order_compatible(dom, g, act)) {
        // one subdivision makes any cellular action order compatible, since
        // subdivision cells list their carriers by strictly ascending dimension
        act = subdivision_action(dom, g, act);
        dom = barycentric(dom).complex;
        rounds = 1;
    }
    std::size_t nx = dom.vertex_count();

    std::vector<CellComplex> spaces, bases;
    std::vector<std::shared_ptr<const ChainComplex>> sc, bc;
    std::vector<ChainMap> sinc, binc, projs;
    std::optional<CellComplex> prev_prod, prev_eg;
    std::optional<Quotient> prev_sq, prev_bq;

    for (std::size_t n = 0; n <= stages; ++n) {
        CellComplex e = milnor_eg(g, n);
        std::size_t ne = e.vertex_count();
        CellComplex prod = product(dom, e);
        VertexAction pact = diagonal_action(g, act, nx, eg_action(g, n), ne);

        Quotient sq = quotient(prod, g, pact);
        Quotient bq = quotient(e, g, eg_action(g, n));
        if (sq.sd_rounds != 0 || bq.sd_rounds != 0)
            throw std::logic_error("borel: stage quotient unexpectedly subdivided");

        std::vector<std::size_t> to_e(nx * ne);
        for (std::size_t v = 0; v < nx * ne; ++v) to_e[v] = v % ne;
        projs.push_back(descend(induced_chain_map(prod, e, to_e), sq, bq));

        if (n > 0) {
            std::size_t pe = prev_eg->vertex_count();
            std::vector<std::size_t> inc_prod(nx * pe);
            for (std::size_t v = 0; v < nx * pe; ++v)
                inc_prod[v] = (v / pe) * ne + (v % pe);
            sinc.push_back(descend(induced_chain_map(*prev_prod, prod, inc_prod),
                                   *prev_sq, sq));
            std::vector<std::size_t> inc_e(pe);
            for (std::size_t v = 0; v < pe; ++v) inc_e[v] = v;
            binc.push_back(descend(induced_chain_map(*prev_eg, e, inc_e), *prev_bq, bq));
        }

        spaces.push_back(sq.complex);
        bases.push_back(bq.complex);
        sc.push_back(sq.complex.chain());
        bc.push_back(bq.complex.chain());

        prev_prod = std::move(prod);
        prev_eg = std::move(e);
        prev_sq = std::move(sq);
        prev_bq = std::move(bq);
    }

    std::vector<std::size_t> to_x(nx * prev_eg->vertex_count());
    for (std::size_t v = 0; v < to_x.size(); ++v) to_x[v] = v / prev_eg->vertex_count();
    ChainMap last_to_dom = induced_chain_map(*prev_prod, dom, to_x);

    return BorelSequence{std::move(dom),
                         std::move(act),
                         rounds,
                         std::move(spaces),
                         std::move(bases),
                         ComplexSequence(std::move(sc), std::move(sinc)),
                         ComplexSequence(std::move(bc), std::move(binc)),
                         std::move(projs),
                         std::move(*prev_sq),
                         std::move(last_to_dom)};
}

} // namespace telhom
