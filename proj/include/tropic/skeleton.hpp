#pragma once

// Combinatorial skeleton of a tropical curve: drop the rays, prune dangling
// trees, suppress degree-2 vertices, and classify what is left. For a
// connected trivalent graph of genus 3 the handshake count forces V=4, E=6,
// and the five possible shapes are told apart by (self-loop count, simple).

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "tropic/curve.hpp"
#include "tropic/errors.hpp"

namespace tropic {

struct Multigraph {
    size_t n = 0;
    std::vector<std::array<size_t, 2>> edges;  // loops as {i,i}, parallels allowed

    bool operator==(const Multigraph&) const = default;
};

enum class Genus3Class { K4, TwoBigonChain, ThetaWithLoop, LoopChain, Lollipop, Other };

inline const char* genus3_class_name(Genus3Class c) {
    switch (c) {
        case Genus3Class::K4: return "K4";
        case Genus3Class::TwoBigonChain: return "TwoBigonChain";
        case Genus3Class::ThetaWithLoop: return "ThetaWithLoop";
        case Genus3Class::LoopChain: return "LoopChain";
        case Genus3Class::Lollipop: return "Lollipop";
        case Genus3Class::Other: return "Other";
    }
    fail(ErrorKind::Internal, "unknown genus-3 class");
}

namespace detail {

inline std::vector<int> multi_degrees(const Multigraph& m) {
    std::vector<int> deg(m.n, 0);
    for (const auto& [i, j] : m.edges) {
        if (i >= m.n || j >= m.n) fail(ErrorKind::Internal, "edge id out of range");
        ++deg[i], ++deg[j];  // a loop contributes 2 to its vertex
    }
    return deg;
}

}  // namespace detail

// Prune degree-1 vertices, then suppress degree-2 vertices (a vertex whose
// whole neighborhood is its own self-loop is a collapsed cycle and stays).
// Removes nothing else, so the first Betti number is preserved.
inline Multigraph skeletonize(const Multigraph& g) {
    std::vector<std::array<size_t, 2>> edges = g.edges;
    std::vector<bool> alive(g.n, true);

    for (;;) {
        std::vector<int> deg(g.n, 0);
        for (const auto& [i, j] : edges) ++deg[i], ++deg[j];

        size_t leaf = SIZE_MAX, mid = SIZE_MAX;
        for (size_t v = 0; v < g.n; ++v) {
            if (!alive[v]) continue;
            if (deg[v] == 1 && leaf == SIZE_MAX) leaf = v;
            if (deg[v] == 2 && mid == SIZE_MAX) {
                bool own_loop = false;
                for (const auto& [i, j] : edges)
                    own_loop |= i == v && j == v;
                if (!own_loop) mid = v;
            }
        }

        if (leaf != SIZE_MAX) {
            alive[leaf] = false;
            edges.erase(std::find_if(edges.begin(), edges.end(),
                                     [&](const std::array<size_t, 2>& e) {
                                         return e[0] == leaf || e[1] == leaf;
                                     }));
            continue;
        }
        if (mid != SIZE_MAX) {
            std::array<size_t, 2> ends;
            int found = 0;
            for (size_t k = edges.size(); k-- > 0;) {
                const auto& [i, j] = edges[k];
                if (i != mid && j != mid) continue;
                ends[found++] = i == mid ? j : i;
                edges.erase(edges.begin() + (long)k);
                if (found == 2) break;
            }
            alive[mid] = false;
            edges.push_back({std::min(ends[0], ends[1]), std::max(ends[0], ends[1])});
            continue;
        }
        break;
    }

    Multigraph out;
    std::vector<size_t> id(g.n, SIZE_MAX);
    for (size_t v = 0; v < g.n; ++v)
        if (alive[v]) id[v] = out.n++;
    for (const auto& [i, j] : edges) {
        size_t a = id[i], b = id[j];
        out.edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

inline Multigraph skeletonize(const TropicalCurveGraph& c) {
    Multigraph g;
    g.n = c.vertices.size();
    for (const auto& [i, j] : c.edges) g.edges.push_back({i, j});
    return skeletonize(g);  // rays are already gone
}

inline long long multigraph_genus(const Multigraph& m) {
    if (m.n == 0) fail(ErrorKind::Disconnected, "empty multigraph");
    detail::UnionFind uf(m.n);
    for (const auto& [i, j] : m.edges) uf.unite(i, j);
    size_t root = uf.find(0);
    for (size_t v = 1; v < m.n; ++v)
        if (uf.find(v) != root) fail(ErrorKind::Disconnected, "multigraph is disconnected");
    return (long long)m.edges.size() - (long long)m.n + 1;
}

// The five connected trivalent genus-3 multigraphs, told apart by their
// self-loop count (and, at zero loops, by simplicity). Anything connected,
// trivalent, and of genus 3 lands in one of the five; everything else is Other.
inline Genus3Class classify_genus3(const Multigraph& m) {
    if (m.n == 0) return Genus3Class::Other;
    {
        detail::UnionFind uf(m.n);
        for (const auto& [i, j] : m.edges) uf.unite(i, j);
        size_t root = uf.find(0);
        for (size_t v = 1; v < m.n; ++v)
            if (uf.find(v) != root) return Genus3Class::Other;
    }
    for (int d : detail::multi_degrees(m))
        if (d != 3) return Genus3Class::Other;
    if ((long long)m.edges.size() - (long long)m.n + 1 != 3) return Genus3Class::Other;

    int loops = 0;
    std::set<std::array<size_t, 2>> seen;
    bool parallel = false;
    for (const auto& [i, j] : m.edges) {
        std::array<size_t, 2> key{std::min(i, j), std::max(i, j)};
        if (i == j) ++loops;
        else if (!seen.insert(key).second) parallel = true;
    }
    switch (loops) {
        case 3: return Genus3Class::Lollipop;
        case 2: return Genus3Class::LoopChain;
        case 1: return Genus3Class::ThetaWithLoop;
        case 0: return parallel ? Genus3Class::TwoBigonChain : Genus3Class::K4;
    }
    return Genus3Class::Other;
}

inline bool is_lollipop(const Multigraph& m) {
    return classify_genus3(m) == Genus3Class::Lollipop;
}

}  // namespace tropic
