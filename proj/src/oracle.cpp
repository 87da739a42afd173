#include "hypercat/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypercat/closed_form.hpp"

namespace hypercat {

bool PlaneTree::valid() const {
    if (outdegrees.empty())
        return false;
    std::size_t open = 1;
    for (std::size_t i = 0; i < outdegrees.size(); ++i) {
        if (open == 0)
            return false;
        open = open - 1 + outdegrees[i];
        if (open > outdegrees.size() - i - 1)
            return false;
    }
    return open == 0;
}

std::vector<std::vector<unsigned>> PlaneTree::children() const {
    std::vector<std::vector<unsigned>> kids(vertex_count());
    std::vector<unsigned> stack;  // vertices still expecting children
    for (unsigned v = 0; v < vertex_count(); ++v) {
        if (v > 0) {
            while (kids[stack.back()].size() == outdegrees[stack.back()])
                stack.pop_back();
            kids[stack.back()].push_back(v);
        }
        if (outdegrees[v] > 0)
            stack.push_back(v);
    }
    return kids;
}

std::vector<int> PlaneTree::parents() const {
    std::vector<int> parent(vertex_count(), -1);
    const auto kids = children();
    for (unsigned v = 0; v < vertex_count(); ++v)
        for (unsigned c : kids[v])
            parent[c] = static_cast<int>(v);
    return parent;
}

unsigned PlaneTree::degree(unsigned vertex) const {
    return vertex == 0 ? outdegrees[0] : outdegrees[vertex] + 1;
}

DegreeProfile PlaneTree::profile() const {
    hc_check(vertex_count() >= 2, "profile: tree must have at least one edge");
    DegreeProfile p;
    p.n = vertex_count() - 1;
    p.root_degree = outdegrees[0];
    for (std::size_t v = 1; v < vertex_count(); ++v)
        if (outdegrees[v] > 0)
            ++p.counts[outdegrees[v]];
    return p;
}

void for_each_plane_tree(std::size_t vertex_count,
                         const std::function<void(const PlaneTree&)>& visit) {
    hc_check(vertex_count >= 1, "for_each_plane_tree: need at least one vertex");
    PlaneTree tree;
    tree.outdegrees.resize(vertex_count);

    // Assign preorder outdegrees left to right, keeping the encoding valid.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t open) {
        if (i == vertex_count) {
            visit(tree);
            return;
        }
        const std::size_t rest = vertex_count - i - 1;
        for (std::size_t d = 0; d + open - 1 <= rest; ++d) {
            const std::size_t next_open = open - 1 + d;
            if ((next_open == 0) != (rest == 0))
                continue;
            tree.outdegrees[i] = static_cast<unsigned>(d);
            rec(i + 1, next_open);
        }
    };
    rec(0, 1);
}

Natural count_plane_trees(std::size_t vertex_count) {
    Natural count = 0;
    for_each_plane_tree(vertex_count, [&](const PlaneTree&) { ++count; });
    return count;
}

Natural tours_on_tree(const PlaneTree& tree, unsigned long k) {
    hc_check(tree.valid(), "tours_on_tree: invalid tree encoding");
    if (tree.vertex_count() == 1)
        return 1;
    Natural result = 1;
    for (unsigned v = 0; v < tree.vertex_count(); ++v)
        result *= departure_count(tree.degree(v), k);
    return result;
}

Natural oracle_by_trees(unsigned long n, unsigned long k) {
    Natural sum = 0;
    for_each_plane_tree(n + 1, [&](const PlaneTree& tree) { sum += tours_on_tree(tree, k); });
    return sum;
}

namespace {

struct WalkSearch {
    unsigned long n, k;
    std::size_t length;  // 2kn
    const std::function<void(const Walk&)>* on_walk;
    Natural count = 0;

    std::vector<int> parent;
    std::vector<unsigned> depth;
    std::vector<std::vector<unsigned>> kids;
    std::vector<unsigned> up_used, down_used;  // indexed by child vertex - 1
    std::vector<unsigned> trail;               // walk positions, starts at 0
    std::size_t discovered = 1;

    void step(unsigned cur, std::size_t remaining) {
        if (remaining == 0) {
            if (cur == 0 && discovered == n + 1) {
                ++count;
                if (*on_walk) {
                    Walk w(trail.begin(), trail.end() - 1);  // drop closing 0
                    (*on_walk)(w);
                }
            }
            return;
        }
        if (depth[cur] > remaining)
            return;
        // move up
        if (cur != 0 && up_used[cur - 1] < k) {
            ++up_used[cur - 1];
            move(static_cast<unsigned>(parent[cur]), remaining);
            --up_used[cur - 1];
        }
        // revisit an existing child
        for (unsigned c : kids[cur]) {
            if (down_used[c - 1] < k) {
                ++down_used[c - 1];
                move(c, remaining);
                --down_used[c - 1];
            }
        }
        // discover a new vertex
        if (discovered < n + 1) {
            const unsigned fresh = static_cast<unsigned>(discovered);
            ++discovered;
            parent[fresh] = static_cast<int>(cur);
            depth[fresh] = depth[cur] + 1;
            kids[cur].push_back(fresh);
            down_used[fresh - 1] = 1;
            move(fresh, remaining);
            down_used[fresh - 1] = 0;
            kids[cur].pop_back();
            --discovered;
        }
    }

    void move(unsigned to, std::size_t remaining) {
        trail.push_back(to);
        step(to, remaining - 1);
        trail.pop_back();
    }
};

}  // namespace

Natural brute_force_walks(unsigned long n, unsigned long k, unsigned long max_kn,
                          const std::function<void(const Walk&)>& on_walk) {
    hc_check(k >= 1, "brute_force_walks: need k >= 1");
    if (k * n > max_kn)
        throw std::invalid_argument("brute_force_walks: k*n exceeds the configured bound");
    if (n == 0)
        return 1;
    WalkSearch search;
    search.n = n;
    search.k = k;
    search.length = 2 * k * n;
    search.on_walk = &on_walk;
    search.parent.assign(n + 1, -1);
    search.depth.assign(n + 1, 0);
    search.kids.assign(n + 1, {});
    search.up_used.assign(n, 0);
    search.down_used.assign(n, 0);
    search.trail = {0};
    search.step(0, search.length);
    return search.count;
}

namespace {

[[noreturn]] void reject(const char* condition) {
    throw std::invalid_argument(std::string("not a k-tour: ") + condition);
}

// Canonical preorder encoding of the tree given discovery-order children.
PlaneTree shape_from_children(const std::vector<std::vector<unsigned>>& kids) {
    PlaneTree tree;
    tree.outdegrees.reserve(kids.size());
    std::function<void(unsigned)> rec = [&](unsigned v) {
        tree.outdegrees.push_back(static_cast<unsigned>(kids[v].size()));
        for (unsigned c : kids[v])
            rec(c);
    };
    rec(0);
    return tree;
}

}  // namespace

std::pair<PlaneTree, DepartureSequences> decompose_walk(const Walk& walk, unsigned long k) {
    hc_check(k >= 1, "decompose_walk: need k >= 1");
    if (walk.empty() || walk[0] != 0)
        reject("walk must start at vertex 0");
    unsigned max_label = 0;
    std::vector<int> parent = {-1};
    std::vector<std::vector<unsigned>> kids(1);
    std::vector<unsigned> up_used, down_used;

    for (std::size_t i = 0; i < walk.size(); ++i) {
        const unsigned from = walk[i];
        const unsigned to = walk[(i + 1) % walk.size()];
        if (from == to)
            reject("walk repeats a vertex in consecutive steps");
        if (from > max_label)
            reject("labels must appear in discovery order");
        if (to == max_label + 1) {
            ++max_label;
            parent.push_back(static_cast<int>(from));
            kids.emplace_back();
            kids[from].push_back(to);
            up_used.push_back(0);
            down_used.push_back(1);
        } else if (to <= max_label) {
            if (parent[to] == static_cast<int>(from))
                ++down_used[to - 1];
            else if (parent[from] == static_cast<int>(to))
                ++up_used[from - 1];
            else
                reject("step between non-adjacent vertices (induced graph is not a tree)");
        } else {
            reject("labels must appear in discovery order");
        }
    }
    for (unsigned v = 1; v <= max_label; ++v)
        if (up_used[v - 1] != k || down_used[v - 1] != k)
            reject("an edge is not crossed exactly k times in each direction");

    DepartureSequences seqs(max_label + 1);
    for (std::size_t i = 0; i < walk.size(); ++i)
        seqs[walk[i]].push_back(walk[(i + 1) % walk.size()]);
    return {shape_from_children(kids), std::move(seqs)};
}

Walk reconstruct_walk(const PlaneTree& tree, DepartureSequences seqs) {
    hc_check(tree.valid(), "reconstruct_walk: invalid tree encoding");
    Walk walk;
    unsigned v = 0;
    while (true) {
        if (v >= seqs.size())
            throw std::invalid_argument("reconstruct_walk: step to unknown vertex");
        if (seqs[v].empty()) {
            if (v != 0)
                throw std::invalid_argument(
                    "reconstruct_walk: departure sequence exhausted at a non-root vertex");
            break;
        }
        walk.push_back(v);
        const unsigned next = seqs[v].front();
        seqs[v].pop_front();
        v = next;
    }
    for (const auto& s : seqs)
        if (!s.empty())
            throw std::invalid_argument("reconstruct_walk: steps remaining after termination");
    if (!walk.empty()) {
        // the replayed walk must induce exactly the given tree shape
        const unsigned long k = static_cast<unsigned long>(walk.size() / (2 * (tree.vertex_count() - 1)));
        auto [shape, ignored] = decompose_walk(walk, k == 0 ? 1 : k);
        (void)ignored;
        hc_check(shape.outdegrees == tree.outdegrees,
                 "reconstruct_walk: sequences do not match the given tree");
    }
    return walk;
}

}  // namespace hypercat
