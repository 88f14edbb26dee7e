#include "clorb/algebra.hpp"

#include <algorithm>
#include <deque>

namespace clorb {

Algebra::Algebra(GentleQuiver q) : quiver_(std::move(q)) {
    for (const auto& a : quiver_.arrows)
        arrows_.push_back({a.label, a.source, a.target, false});
    for (long k : quiver_.loops)
        arrows_.push_back({GentleQuiver::loop_label(k), k, k, true});
    for (const auto& [first, then] : quiver_.forbidden) forbidden_[{first, then}] = true;

    // Enumerate the path basis breadth-first, pruning forbidden pairs.
    std::deque<Path> queue;
    for (long v : quiver_.vertices) {
        Path e;
        e.source = e.target = v;
        queue.push_back(e);
    }
    const std::size_t kDimCap = 100000;
    while (!queue.empty()) {
        Path p = std::move(queue.front());
        queue.pop_front();
        between_[{p.target, p.source}].push_back(paths_.size());
        paths_.push_back(p);
        if (paths_.size() > kDimCap)
            throw NonFinite("path basis exceeds cap; algebra not finite dimensional?");
        for (const auto& a : arrows_) {
            if (a.source != p.target) continue;
            if (!p.word.empty() && forbidden_pair(p.word.back(), a.label)) continue;
            Path ext = p;
            ext.word.push_back(a.label);
            ext.target = a.target;
            queue.push_back(std::move(ext));
        }
    }
}

const Algebra::ArrowInfo& Algebra::arrow(const std::string& label) const {
    for (const auto& a : arrows_)
        if (a.label == label) return a;
    throw IndexOutOfRange("unknown arrow " + label);
}

const std::vector<std::size_t>& Algebra::paths_between(long to, long from) const {
    static const std::vector<std::size_t> empty;
    auto it = between_.find({to, from});
    return it == between_.end() ? empty : it->second;
}

bool Algebra::forbidden_pair(const std::string& first, const std::string& then) const {
    return forbidden_.count({then, first}) > 0;
}

bool Algebra::composable(const Path& inner, const Path& outer) const {
    if (inner.target != outer.source) return false;
    if (inner.word.empty() || outer.word.empty()) return true;
    return !forbidden_pair(inner.word.back(), outer.word.front());
}

std::optional<Path> Algebra::multiply(const Path& outer, const Path& inner) const {
    if (inner.target != outer.source) return std::nullopt;
    if (!composable(inner, outer)) return std::nullopt;
    Path r;
    r.source = inner.source;
    r.target = outer.target;
    r.word = inner.word;
    r.word.insert(r.word.end(), outer.word.begin(), outer.word.end());
    // The concatenation is in the basis iff it appears among enumerated
    // paths; monomial relations only ever kill the junction pair, which was
    // checked above, so this lookup is a safety net.
    for (std::size_t idx : paths_between(r.target, r.source))
        if (paths_[idx].word == r.word) return r;
    return std::nullopt;
}

bool Algebra::same(const Algebra& o) const {
    if (quiver_.vertices != o.quiver_.vertices || quiver_.d != o.quiver_.d) return false;
    auto key = [](const GentleQuiver& q) {
        std::vector<std::string> v;
        for (const auto& a : q.arrows) v.push_back(a.label);
        std::sort(v.begin(), v.end());
        return v;
    };
    if (key(quiver_) != key(o.quiver_)) return false;
    auto fkey = [](const GentleQuiver& q) {
        auto v = q.forbidden;
        std::sort(v.begin(), v.end());
        return v;
    };
    return fkey(quiver_) == fkey(o.quiver_);
}

GentleQuiver Algebra::opposite_quiver() const {
    GentleQuiver op = quiver_;
    for (auto& a : op.arrows) std::swap(a.source, a.target);
    for (auto& [first, then] : op.forbidden) std::swap(first, then);
    return op;
}

AlgebraPtr build_algebra(const GentleQuiver& q) { return std::make_shared<Algebra>(q); }

AlgebraPtr build_algebra(const Triangulation& t) { return build_algebra(quiver(t)); }

Path theta_map(const Triangulation& t, long k, long i, long j) {
    if (!t.is_arc(k)) throw NotAnArc("theta at non-arc");
    GentleQuiver q = quiver(t);
    const auto* a = q.arrow_between(j, k);
    const auto* b = q.arrow_between(k, i);
    if (!a || !b || (!t.is_pending(k) && a->triangle == b->triangle))
        throw NoThroughPair("no through-pair (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") at " + std::to_string(k));
    Path p;
    p.source = j;
    p.target = i;
    p.word.push_back(a->label);
    if (t.is_pending(k)) p.word.push_back(GentleQuiver::loop_label(k));
    p.word.push_back(b->label);
    return p;
}

}  // namespace clorb
