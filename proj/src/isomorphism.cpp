#include "ureq/family.hpp"

#include <algorithm>
#include <map>

namespace ureq {

namespace {

// Colour refinement on the disjoint union of g and h so that colours are
// comparable across the two graphs. Vertex v of h is v + g.order().
std::vector<int> refine_colours(const Graph& g, const Graph& h)
{
    const int ng = g.order();
    const int total = ng + h.order();
    auto nbrs = [&](int x) { return x < ng ? g.neighbors(x) : h.neighbors(x - ng); };
    auto shift = [&](int x) { return x < ng ? 0 : ng; };

    std::vector<int> colour(static_cast<std::size_t>(total));
    for (int x = 0; x < total; ++x)
        colour[static_cast<std::size_t>(x)] = static_cast<int>(nbrs(x).size());
    std::size_t classes = 0;
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(total));
        for (int x = 0; x < total; ++x) {
            auto& s = sig[static_cast<std::size_t>(x)];
            s.first = colour[static_cast<std::size_t>(x)];
            for (Vertex y : nbrs(x))
                s.second.push_back(colour[static_cast<std::size_t>(y + shift(x))]);
            std::sort(s.second.begin(), s.second.end());
            ids.emplace(s, 0);
        }
        int next = 0;
        for (auto& [key, id] : ids)
            id = next++;
        for (int x = 0; x < total; ++x)
            colour[static_cast<std::size_t>(x)] = ids[sig[static_cast<std::size_t>(x)]];
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }
    return colour;
}

} // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h)
{
    const int n = g.order();
    if (n != h.order() || g.size() != h.size())
        return std::nullopt;
    if (n == 0)
        return std::vector<Vertex>{};

    auto colour = refine_colours(g, h);
    auto cg = [&](Vertex v) { return colour[static_cast<std::size_t>(v)]; };
    auto ch = [&](Vertex v) { return colour[static_cast<std::size_t>(v + n)]; };
    {
        std::vector<int> a, b;
        for (Vertex v = 0; v < n; ++v) {
            a.push_back(cg(v));
            b.push_back(ch(v));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }

    std::map<int, int> class_size;
    for (Vertex v = 0; v < n; ++v)
        ++class_size[cg(v)];

    // Match order: rarest colour first, then always the vertex with the most
    // already-placed neighbours.
    std::vector<Vertex> order;
    std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
    std::vector<char> in_order(static_cast<std::size_t>(n), 0);
    while (static_cast<int>(order.size()) < n) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (in_order[static_cast<std::size_t>(v)])
                continue;
            if (pick < 0) {
                pick = v;
                continue;
            }
            auto key = [&](Vertex x) {
                return std::make_pair(-placed_nbrs[static_cast<std::size_t>(x)], class_size[cg(x)]);
            };
            if (key(v) < key(pick))
                pick = v;
        }
        in_order[static_cast<std::size_t>(pick)] = 1;
        order.push_back(pick);
        for (Vertex w : g.neighbors(pick))
            ++placed_nbrs[static_cast<std::size_t>(w)];
    }

    std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto consistent = [&](Vertex x, Vertex y) {
        int mapped_x = 0;
        for (Vertex x2 : g.neighbors(x)) {
            Vertex y2 = map[static_cast<std::size_t>(x2)];
            if (y2 < 0)
                continue;
            ++mapped_x;
            if (!h.adjacent(y, y2))
                return false;
        }
        int mapped_y = 0;
        for (Vertex y2 : h.neighbors(y))
            if (used[static_cast<std::size_t>(y2)])
                ++mapped_y;
        return mapped_x == mapped_y;
    };

    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == order.size())
            return true;
        Vertex x = order[i];
        for (Vertex y = 0; y < n; ++y) {
            if (used[static_cast<std::size_t>(y)] || ch(y) != cg(x) || !consistent(x, y))
                continue;
            map[static_cast<std::size_t>(x)] = y;
            used[static_cast<std::size_t>(y)] = 1;
            if (self(self, i + 1))
                return true;
            used[static_cast<std::size_t>(y)] = 0;
            map[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    };
    if (!rec(rec, 0))
        return std::nullopt;
    return map;
}

bool is_isomorphic(const Graph& g, const Graph& h)
{
    return find_isomorphism(g, h).has_value();
}

} // namespace ureq
