#include "mopareto/domsets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mopareto/errors.hpp"

namespace mopareto {

TournamentView::TournamentView(const Instance& instance, std::vector<std::size_t> members, int k)
    : members_(std::move(members)), k_(k) {
    const std::size_t p = instance.p();
    if (k_ < 1 || 2 * static_cast<std::size_t>(k_) - 1 > p) {
        throw std::invalid_argument("tournament view needs 1 <= k and 2k-1 <= p (k=" + std::to_string(k_) +
                                    ", p=" + std::to_string(p) + ")");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (const auto m : members_) {
        if (m >= instance.size()) throw std::invalid_argument("tournament member out of range");
    }

    const std::size_t n = members_.size();
    // rank[i][a]: position of local point a in the order of objective i.
    std::vector<std::vector<std::size_t>> rank(p, std::vector<std::size_t>(n));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < p; ++i) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return instance.f(members_[a])[i] < instance.f(members_[b])[i];
        });
        for (std::size_t r = 0; r < n; ++r) rank[i][order[r]] = r;
    }

    arcs_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        arcs_[a * n + a] = 1;
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            int wins = 0;
            for (std::size_t i = 0; i < p; ++i) wins += rank[i][a] < rank[i][b];
            if (wins >= k_) arcs_[a * n + b] = 1;
        }
    }
}

std::vector<std::size_t> greedy_tournament_dominating_set(const TournamentView& view) {
    const std::size_t n = view.size();
    std::vector<char> covered(n, 0);
    std::size_t remaining = n;
    std::vector<std::size_t> picked;
    while (remaining > 0) {
        std::size_t best = 0;
        std::size_t best_gain = 0;
        for (std::size_t a = 0; a < n; ++a) {
            std::size_t gain = 0;
            for (std::size_t b = 0; b < n; ++b) gain += !covered[b] && view.has_arc(a, b);
            if (gain > best_gain) {
                best_gain = gain;
                best = a;
            }
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (!covered[b] && view.has_arc(best, b)) {
                covered[b] = 1;
                --remaining;
            }
        }
        picked.push_back(view.members()[best]);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::vector<std::size_t> greedy_cover_dominating_set(const DominationDigraph& graph) {
    const std::size_t n = graph.size();
    std::vector<char> covered(n, 0);
    std::size_t remaining = n;
    std::vector<std::size_t> picked;
    while (remaining > 0) {
        std::size_t best = 0;
        std::size_t best_gain = 0;
        for (std::size_t u = 0; u < n; ++u) {
            std::size_t gain = 0;
            for (std::size_t v = 0; v < n; ++v) gain += !covered[v] && graph.has_arc(u, v);
            if (gain > best_gain) {
                best_gain = gain;
                best = u;
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (!covered[v] && graph.has_arc(best, v)) {
                covered[v] = 1;
                --remaining;
            }
        }
        picked.push_back(best);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

namespace {

using Mask = std::uint64_t;

class CoverSearch {
public:
    CoverSearch(std::vector<Mask> covers, std::vector<Mask> coverers)
        : covers_(std::move(covers)), coverers_(std::move(coverers)) {}

    void seed(Mask chosen) {
        best_ = chosen;
        best_size_ = std::popcount(chosen);
    }

    void run(Mask uncovered) { descend(uncovered, 0, 0); }

    Mask best() const { return best_; }

private:
    void descend(Mask uncovered, Mask chosen, int size) {
        if (uncovered == 0) {
            if (size < best_size_) {
                best_size_ = size;
                best_ = chosen;
            }
            return;
        }
        // Lower bound: every further pick covers at most max_gain new nodes.
        int max_gain = 0;
        for (const Mask c : covers_) max_gain = std::max(max_gain, std::popcount(c & uncovered));
        const int left = std::popcount(uncovered);
        const int lower = (left + max_gain - 1) / max_gain;
        if (size + lower >= best_size_) return;

        // Branch on the uncovered node with the fewest candidate coverers.
        std::size_t pivot = 0;
        int fewest = 65;
        for (Mask rest = uncovered; rest != 0; rest &= rest - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(rest));
            const int options = std::popcount(coverers_[u]);
            if (options < fewest) {
                fewest = options;
                pivot = u;
            }
        }
        for (Mask options = coverers_[pivot]; options != 0; options &= options - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(options));
            descend(uncovered & ~covers_[v], chosen | (Mask{1} << v), size + 1);
        }
    }

    std::vector<Mask> covers_;
    std::vector<Mask> coverers_;
    Mask best_ = 0;
    int best_size_ = 65;
};

}  // namespace

std::vector<std::size_t> exact_min_dominating_set(const DominationDigraph& graph, std::size_t node_limit) {
    if (node_limit > kMaxExactNodeLimit) {
        throw std::invalid_argument("exact node limit above " + std::to_string(kMaxExactNodeLimit) + " unsupported");
    }
    const std::size_t n = graph.size();
    if (n > node_limit) {
        throw SolverLimitExceeded("exact solver limit exceeded: " + std::to_string(n) + " nodes > limit " +
                                  std::to_string(node_limit));
    }
    if (n == 0) return {};

    std::vector<Mask> covers(n, 0);
    std::vector<Mask> coverers(n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (graph.has_arc(u, v)) {
                covers[u] |= Mask{1} << v;
                coverers[v] |= Mask{1} << u;
            }
        }
    }

    CoverSearch search(std::move(covers), std::move(coverers));
    Mask seed = 0;
    for (const auto v : greedy_cover_dominating_set(graph)) seed |= Mask{1} << v;
    search.seed(seed);
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    search.run(all);

    std::vector<std::size_t> out;
    for (Mask rest = search.best(); rest != 0; rest &= rest - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
}

bool is_dominating_set(const DominationDigraph& graph, std::span<const std::size_t> nodes) {
    for (std::size_t v = 0; v < graph.size(); ++v) {
        const bool hit = std::any_of(nodes.begin(), nodes.end(), [&](std::size_t u) {
            return u < graph.size() && graph.has_arc(u, v);
        });
        if (!hit) return false;
    }
    return true;
}

}  // namespace mopareto
