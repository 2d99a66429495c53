#include "nulltree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "nulltree/errors.hpp"

namespace nulltree::oracle {

namespace {

void require_vertex_bound(const Tree& t, const OracleBound& bound) {
    if (bound.max_n < 1) {
        throw TooLarge("oracle bound must be at least 1");
    }
    if (t.order() > bound.max_n || t.order() > 62) {
        throw TooLarge("tree has " + std::to_string(t.order()) + " vertices, oracle bound is " +
                       std::to_string(bound.max_n));
    }
    if ((std::uint64_t{1} << t.order()) > bound.max_subsets) {
        throw TooLarge("2^" + std::to_string(t.order()) + " subsets exceed the cap");
    }
}

std::vector<Vertex> members(std::uint64_t mask) {
    std::vector<Vertex> out;
    for (; mask != 0; mask &= mask - 1) {
        out.push_back(std::countr_zero(mask) + 1);
    }
    return out;
}

bool independent(const Tree& t, std::uint64_t mask) {
    for (const Edge& e : t.edges()) {
        if (((mask >> (e.u - 1)) & 1U) && ((mask >> (e.v - 1)) & 1U)) {
            return false;
        }
    }
    return true;
}

bool covers(const Tree& t, std::uint64_t mask) {
    for (const Edge& e : t.edges()) {
        if (!((mask >> (e.u - 1)) & 1U) && !((mask >> (e.v - 1)) & 1U)) {
            return false;
        }
    }
    return true;
}

template <typename Keep, typename Better>
SetCensus scan_subsets(const Tree& t, Keep keep, Better better) {
    SetCensus census;
    bool any = false;
    const std::uint64_t total = std::uint64_t{1} << t.order();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!keep(mask)) {
            continue;
        }
        const int size = std::popcount(mask);
        if (!any || better(size, census.optimum)) {
            any = true;
            census.optimum = size;
            census.count = 0;
            census.optimal.clear();
        }
        if (size == census.optimum) {
            ++census.count;
            census.optimal.push_back(members(mask));
        }
    }
    return census;
}

}  // namespace

MatchingCensus brute_matchings(const Tree& t, const OracleBound& bound) {
    require_vertex_bound(t, bound);
    const auto& edges = t.edges();
    MatchingCensus census;
    census.by_size.assign(static_cast<std::size_t>(t.order()) / 2 + 1, 0);

    std::vector<Edge> chosen;
    std::uint64_t used = 0;
    std::vector<std::vector<Edge>> maximum;
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == edges.size()) {
            const auto k = static_cast<int>(chosen.size());
            ++census.by_size[static_cast<std::size_t>(k)];
            if (k > census.nu) {
                census.nu = k;
                maximum.clear();
            }
            if (k == census.nu) {
                maximum.push_back(chosen);
            }
            return;
        }
        walk(i + 1);
        const std::uint64_t ends = (std::uint64_t{1} << (edges[i].u - 1)) | (std::uint64_t{1} << (edges[i].v - 1));
        if ((used & ends) == 0) {
            used |= ends;
            chosen.push_back(edges[i]);
            walk(i + 1);
            chosen.pop_back();
            used &= ~ends;
        }
    };
    walk(0);

    census.m = maximum.size();
    for (auto& edges_of : maximum) {
        census.all_max.emplace_back(t, std::move(edges_of));
    }
    std::sort(census.all_max.begin(), census.all_max.end());
    while (census.by_size.size() > 1 && census.by_size.back() == 0) {
        census.by_size.pop_back();
    }
    return census;
}

SetCensus brute_independent_sets(const Tree& t, const OracleBound& bound) {
    require_vertex_bound(t, bound);
    return scan_subsets(
        t, [&](std::uint64_t mask) { return independent(t, mask); }, [](int a, int b) { return a > b; });
}

SetCensus brute_vertex_covers(const Tree& t, const OracleBound& bound) {
    require_vertex_bound(t, bound);
    return scan_subsets(
        t, [&](std::uint64_t mask) { return covers(t, mask); }, [](int a, int b) { return a < b; });
}

int brute_dominating_sets(const Tree& t, const OracleBound& bound) {
    require_vertex_bound(t, bound);
    const int n = t.order();
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
        closed[static_cast<std::size_t>(v - 1)] = std::uint64_t{1} << (v - 1);
        for (Vertex w : t.neighbors(v)) {
            closed[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (w - 1);
        }
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    int best = n;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        const int size = std::popcount(mask);
        if (size >= best) {
            continue;
        }
        std::uint64_t dominated = 0;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            dominated |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        if (dominated == full) {
            best = size;
        }
    }
    return best;
}

}  // namespace nulltree::oracle
