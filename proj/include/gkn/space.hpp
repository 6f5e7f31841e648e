#pragma once

#include <gkn/errors.hpp>
#include <gkn/rational.hpp>
#include <gkn/scalar.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gkn {

// ------------------------------------------------------------------
// Braided vector spaces of points and blocks, finitely presented.
// Infinite rank enters only through eventually-periodic tails and
// component families with multiplicity omega.
// ------------------------------------------------------------------

struct Block {
    std::string id;
    int eps = 1; // +1 or -1
};

struct Point {
    std::string id;
    MonoScalar q; // q_ii
};

// Pair braiding data between vertices a and b.  q_ab = q_{a,b} multiplies when
// a flies over b.  a_ab = a_{a,b} is meaningful only when b is a block (it
// mixes x_b into the image of x_{b+1/2}); likewise a_ba needs a to be a block.
// An absent pair means trivial braiding: q_ab = q_ba = 1, a = 0.
struct PairData {
    std::string a, b;
    MonoScalar q_ab = MonoScalar::one();
    MonoScalar q_ba = MonoScalar::one();
    Rational a_ab{0};
    Rational a_ba{0};
};

enum class TailKind { AChain, Cartan, Super };
enum class InfiniteShape { A_INF, A_PLUS_INF, B_INF, C_INF, D_INF };

inline std::string infinite_shape_name(InfiniteShape s) {
    switch (s) {
        case InfiniteShape::A_INF: return "a_inf";
        case InfiniteShape::A_PLUS_INF: return "a_plus_inf";
        case InfiniteShape::B_INF: return "b_inf";
        case InfiniteShape::C_INF: return "c_inf";
        case InfiniteShape::D_INF: return "d_inf";
    }
    return "?";
}

// One eventually-periodic infinite tail.
//  - AChain: the (5.3) continuation: -1 points joined by -1 edges, hanging off
//    a core point (`from`).
//  - Cartan/Super: an infinite generalized Dynkin template, standalone
//    (`from` empty) or extending a core point.
struct TailTemplate {
    std::string id;
    TailKind kind = TailKind::AChain;
    InfiniteShape shape = InfiniteShape::A_PLUS_INF; // Cartan/Super only
    MonoScalar q;                                    // Cartan/Super parameter
    std::vector<int> p_prefix;                       // Super only, entries +1/-1
    int p_const = 1;                                 // Super only
    std::string from;                                // core point id, or empty = standalone
};

struct FamilyPattern {
    std::vector<Point> points;
    std::vector<PairData> pairs;
};

inline constexpr long kOmega = -1;

// Finitely many or countably many copies of a finite diagonal component,
// optionally attached to one block through a ghost edge at one black point.
struct ComponentFamily {
    std::string id;
    FamilyPattern pattern;
    bool attached = false;
    std::string block;  // attachment target
    std::string at;     // black point inside the pattern
    Rational ghost{0};  // the ghost label G itself
    long count = 1;     // kOmega for countably many copies
};

struct BraidedSpaceSpec {
    std::string name;
    std::vector<Block> blocks;
    std::vector<Point> points;
    std::vector<PairData> pairs;
    std::vector<TailTemplate> tails;
    std::vector<ComponentFamily> families;

    bool is_finite() const {
        if (!tails.empty()) return false;
        for (const auto& f : families)
            if (f.count == kOmega) return false;
        return true;
    }
};

// ------------------------------------------------------------------
// Validation
// ------------------------------------------------------------------

class Validated {
public:
    BraidedSpaceSpec spec;

    bool is_block(const std::string& id) const { return block_index_.count(id) > 0; }
    bool is_point(const std::string& id) const { return point_index_.count(id) > 0; }
    bool has_vertex(const std::string& id) const { return is_block(id) || is_point(id); }

    const Block& block(const std::string& id) const {
        auto it = block_index_.find(id);
        if (it == block_index_.end()) throw UnknownVertex(id);
        return spec.blocks[it->second];
    }
    const Point& point(const std::string& id) const {
        auto it = point_index_.find(id);
        if (it == point_index_.end()) throw UnknownVertex(id);
        return spec.points[it->second];
    }

    // q_{r,s}; defaults to 1 for absent pairs.
    MonoScalar q(const std::string& r, const std::string& s) const {
        auto it = pair_index_.find({r, s});
        if (it != pair_index_.end()) return spec.pairs[it->second].q_ab;
        it = pair_index_.find({s, r});
        if (it != pair_index_.end()) return spec.pairs[it->second].q_ba;
        return MonoScalar::one();
    }

    // a_{r,s}; defaults to 0.
    Rational a(const std::string& r, const std::string& s) const {
        auto it = pair_index_.find({r, s});
        if (it != pair_index_.end()) return spec.pairs[it->second].a_ab;
        it = pair_index_.find({s, r});
        if (it != pair_index_.end()) return spec.pairs[it->second].a_ba;
        return Rational(0);
    }

    // r ~ s: the pair braiding does not compose to the identity.
    bool related(const std::string& r, const std::string& s) const {
        if (!(q(r, s) * q(s, r)).is_one()) return true;
        return a(r, s) != 0 || a(s, r) != 0;
    }

    // Connected components of the core (blocks and points) under ~, together
    // with tails and families merged onto their attachment vertices.  Tails
    // and families are addressed as "tail:<id>" / "family:<id>".
    const std::vector<std::vector<std::string>>& components() const { return components_; }

    const std::vector<std::string>& core_vertices() const { return core_vertices_; }

    friend Validated validate(BraidedSpaceSpec spec);

private:
    std::map<std::string, size_t> block_index_;
    std::map<std::string, size_t> point_index_;
    std::map<std::pair<std::string, std::string>, size_t> pair_index_;
    std::vector<std::string> core_vertices_;
    std::vector<std::vector<std::string>> components_;
};

namespace detail {

class UnionFind {
public:
    void add(const std::string& x) {
        if (!parent_.count(x)) parent_[x] = x;
    }
    std::string find(const std::string& x) {
        std::string r = x;
        while (parent_[r] != r) r = parent_[r];
        std::string c = x;
        while (parent_[c] != r) {
            std::string next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }
    void unite(const std::string& x, const std::string& y) {
        add(x);
        add(y);
        parent_[find(x)] = find(y);
    }
    std::map<std::string, std::vector<std::string>> groups() {
        std::map<std::string, std::vector<std::string>> g;
        for (const auto& [x, _] : parent_) g[find(x)].push_back(x);
        return g;
    }

private:
    std::map<std::string, std::string> parent_;
};

inline void validate_pattern(const ComponentFamily& fam) {
    const std::string where = "family " + fam.id;
    if (fam.pattern.points.empty())
        throw MalformedSpec(where, "pattern has no points");
    std::set<std::string> ids;
    for (const auto& p : fam.pattern.points)
        if (!ids.insert(p.id).second)
            throw MalformedSpec(where + ".point " + p.id, "duplicate id in pattern");
    UnionFind uf;
    for (const auto& p : fam.pattern.points) uf.add(p.id);
    for (const auto& pr : fam.pattern.pairs) {
        if (!ids.count(pr.a) || !ids.count(pr.b))
            throw MalformedSpec(where + ".pair " + pr.a + "-" + pr.b,
                                "pattern pair references undeclared point");
        if (pr.a_ab != 0 || pr.a_ba != 0)
            throw MalformedSpec(where + ".pair " + pr.a + "-" + pr.b,
                                "a-values are block data; patterns are diagonal");
        if (!(pr.q_ab * pr.q_ba).is_one()) uf.unite(pr.a, pr.b);
    }
    if (uf.groups().size() > 1)
        throw MalformedSpec(where, "pattern is not a connected diagonal component");
    if (fam.attached) {
        if (!ids.count(fam.at))
            throw MalformedSpec(where, "attachment point " + fam.at + " not in pattern");
        if (fam.ghost == 0)
            throw MalformedSpec(where, "attached family needs a nonzero ghost");
    }
    if (fam.count != kOmega && fam.count < 1)
        throw MalformedSpec(where, "count must be positive or omega");
}

} // namespace detail

inline Validated validate(BraidedSpaceSpec spec) {
    Validated v;
    for (size_t i = 0; i < spec.blocks.size(); ++i) {
        const auto& b = spec.blocks[i];
        if (b.eps != 1 && b.eps != -1)
            throw MalformedSpec("block " + b.id, "epsilon must be +1 or -1");
        if (!v.block_index_.emplace(b.id, i).second)
            throw MalformedSpec("block " + b.id, "duplicate id");
    }
    for (size_t i = 0; i < spec.points.size(); ++i) {
        const auto& p = spec.points[i];
        if (v.block_index_.count(p.id) || !v.point_index_.emplace(p.id, i).second)
            throw MalformedSpec("point " + p.id, "duplicate id");
    }
    for (size_t i = 0; i < spec.pairs.size(); ++i) {
        const auto& pr = spec.pairs[i];
        const std::string where = "pair " + pr.a + "-" + pr.b;
        if (pr.a == pr.b) throw MalformedSpec(where, "self pairs are implicit");
        for (const auto* id : {&pr.a, &pr.b})
            if (!v.block_index_.count(*id) && !v.point_index_.count(*id))
                throw MalformedSpec(where, "undeclared vertex " + *id);
        if (pr.a_ab != 0 && !v.block_index_.count(pr.b))
            throw MalformedSpec(where, "a12 requires the second vertex to be a block");
        if (pr.a_ba != 0 && !v.block_index_.count(pr.a))
            throw MalformedSpec(where, "a21 requires the first vertex to be a block");
        if (v.pair_index_.count({pr.a, pr.b}) || v.pair_index_.count({pr.b, pr.a}))
            throw MalformedSpec(where, "duplicate pair");
        v.pair_index_[{pr.a, pr.b}] = i;
    }
    std::set<std::string> aux_ids;
    for (const auto& t : spec.tails) {
        const std::string where = "tail " + t.id;
        if (v.block_index_.count(t.id) || v.point_index_.count(t.id) || !aux_ids.insert(t.id).second)
            throw MalformedSpec(where, "duplicate id");
        if (t.kind == TailKind::AChain) {
            if (t.from.empty() || !v.point_index_.count(t.from))
                throw MalformedSpec(where, "a_inf_chain must continue from a declared point");
        } else {
            if (!t.from.empty() && !v.point_index_.count(t.from))
                throw MalformedSpec(where, "tail attachment must be a declared point");
            if (t.q.is_one())
                throw MalformedSpec(where, "template parameter q must differ from 1");
            if (t.kind == TailKind::Super) {
                if (t.q.is_minus_one())
                    throw MalformedSpec(where, "super templates need q != -1");
                bool some_odd = t.p_const == -1;
                for (int s : t.p_prefix) {
                    if (s != 1 && s != -1) throw MalformedSpec(where, "p entries must be +1/-1");
                    some_odd = some_odd || s == -1;
                }
                if (!some_odd) throw MalformedSpec(where, "super templates need p != 1");
                if (t.p_const != 1 && t.p_const != -1)
                    throw MalformedSpec(where, "p constant must be +1/-1");
            }
            if (t.kind == TailKind::Cartan &&
                (t.shape == InfiniteShape::B_INF || t.shape == InfiniteShape::C_INF) &&
                t.q.is_minus_one())
                throw MalformedSpec(where, "B/C templates degenerate at q = -1");
            if ((t.shape == InfiniteShape::A_INF || t.shape == InfiniteShape::D_INF) &&
                !t.from.empty())
                throw MalformedSpec(where, "two-ended/forked templates must be standalone");
        }
    }
    for (const auto& f : spec.families) {
        const std::string where = "family " + f.id;
        if (v.block_index_.count(f.id) || v.point_index_.count(f.id) || !aux_ids.insert(f.id).second)
            throw MalformedSpec(where, "duplicate id");
        detail::validate_pattern(f);
        if (f.attached && !v.block_index_.count(f.block))
            throw MalformedSpec(where, "attachment block " + f.block + " not declared");
    }

    // ~ / ≈ over core vertices plus tail/family pseudo-vertices.
    detail::UnionFind uf;
    for (const auto& b : spec.blocks) {
        uf.add(b.id);
        v.core_vertices_.push_back(b.id);
    }
    for (const auto& p : spec.points) {
        uf.add(p.id);
        v.core_vertices_.push_back(p.id);
    }
    v.spec = std::move(spec);
    for (const auto& pr : v.spec.pairs) {
        bool rel = !(pr.q_ab * pr.q_ba).is_one() || pr.a_ab != 0 || pr.a_ba != 0;
        if (rel) uf.unite(pr.a, pr.b);
    }
    for (const auto& t : v.spec.tails) {
        uf.add("tail:" + t.id);
        if (!t.from.empty()) uf.unite("tail:" + t.id, t.from);
    }
    for (const auto& f : v.spec.families) {
        uf.add("family:" + f.id);
        if (f.attached) uf.unite("family:" + f.id, f.block);
    }
    for (auto& [root, members] : uf.groups()) v.components_.push_back(members);
    return v;
}

// ------------------------------------------------------------------
// Interaction and ghost
// ------------------------------------------------------------------

inline MonoScalar interaction(const Validated& v, const std::string& block_id,
                              const std::string& point_id) {
    v.block(block_id);
    if (!v.is_point(point_id)) throw UnknownVertex(point_id);
    return v.q(block_id, point_id) * v.q(point_id, block_id);
}

inline bool interaction_is_weak(const Validated& v, const std::string& block_id,
                                const std::string& point_id) {
    return interaction(v, block_id, point_id).is_one();
}

// G_ij = -2 a_ij for a plus block, a_ij for a minus block.
inline Rational ghost(const Validated& v, const std::string& block_id,
                      const std::string& point_id) {
    const Block& b = v.block(block_id);
    if (!v.is_point(point_id)) throw UnknownVertex(point_id);
    Rational a_ij = v.a(point_id, block_id);
    return b.eps == 1 ? Rational(-2 * a_ij) : a_ij;
}

inline bool ghost_is_discrete(const Rational& g) { return is_positive_integer(g); }

// The a-value realizing a desired ghost label on a block of the given sign.
inline Rational a_for_ghost(int eps, const Rational& g) {
    return eps == 1 ? Rational(g / -2) : g;
}

// ------------------------------------------------------------------
// Template materialization (shared by truncation and classification)
// ------------------------------------------------------------------

struct TemplateStep {
    MonoScalar vertex; // q_ii of vertex i
    MonoScalar edge;   // qtilde between vertex i and vertex i+1
};

// First `count` steps of the tail's label stream, walking away from the
// attachment end.  For D_INF the fork partner of the third vertex is reported
// separately.
struct MaterializedTail {
    std::vector<TemplateStep> steps;
    bool fork = false;
    MonoScalar fork_vertex;
    MonoScalar fork_edge;
};

inline MaterializedTail materialize_tail(const TailTemplate& t, long count) {
    MaterializedTail out;
    if (count <= 0) return out;
    auto minus_one = MonoScalar::minus_one();
    switch (t.kind) {
        case TailKind::AChain: {
            for (long i = 0; i < count; ++i) out.steps.push_back({minus_one, minus_one});
            return out;
        }
        case TailKind::Cartan: {
            const MonoScalar& q = t.q;
            MonoScalar qinv = q.inverse();
            MonoScalar q2 = q.pow(2);
            MonoScalar q2inv = q.pow(-2);
            switch (t.shape) {
                case InfiniteShape::A_INF:
                case InfiniteShape::A_PLUS_INF:
                    for (long i = 0; i < count; ++i) out.steps.push_back({q, qinv});
                    return out;
                case InfiniteShape::B_INF:
                    out.steps.push_back({q, q2inv});
                    for (long i = 1; i < count; ++i) out.steps.push_back({q2, q2inv});
                    return out;
                case InfiniteShape::C_INF:
                    out.steps.push_back({q2, q2inv});
                    for (long i = 1; i < count; ++i) out.steps.push_back({q, qinv});
                    return out;
                case InfiniteShape::D_INF:
                    out.fork = true;
                    out.fork_vertex = q;
                    out.fork_edge = qinv;
                    for (long i = 0; i < count; ++i) out.steps.push_back({q, qinv});
                    return out;
            }
            return out;
        }
        case TailKind::Super: {
            // Walk with the local forms: an even vertex carries the current
            // parameter r and edges r^{-1}; an odd vertex carries -1, emits the
            // edge r and flips the parameter.
            auto p_at = [&](long i) {
                return i < static_cast<long>(t.p_prefix.size()) ? t.p_prefix[i] : t.p_const;
            };
            auto walk = [&](MonoScalar r, long n, long p_offset, std::vector<TemplateStep>& steps) {
                for (long i = 0; i < n; ++i) {
                    if (p_at(p_offset + i) == 1) {
                        steps.push_back({r, r.inverse()});
                    } else {
                        steps.push_back({MonoScalar::minus_one(), r});
                        r = r.inverse();
                    }
                }
            };
            switch (t.shape) {
                case InfiniteShape::A_INF:
                case InfiniteShape::A_PLUS_INF:
                    walk(t.q, count, 0, out.steps);
                    return out;
                case InfiniteShape::B_INF: {
                    out.steps.push_back({t.q, t.q.pow(-2)});
                    walk(t.q.pow(2), count - 1, 1, out.steps);
                    return out;
                }
                case InfiniteShape::C_INF: {
                    out.steps.push_back({t.q.pow(2), t.q.pow(-2)});
                    walk(t.q, count - 1, 1, out.steps);
                    return out;
                }
                case InfiniteShape::D_INF: {
                    out.fork = true;
                    if (p_at(0) == 1) {
                        out.fork_vertex = t.q;
                        out.fork_edge = t.q.inverse();
                    } else {
                        out.fork_vertex = MonoScalar::minus_one();
                        out.fork_edge = t.q;
                    }
                    walk(t.q, count, 0, out.steps);
                    return out;
                }
            }
            return out;
        }
    }
    return out;
}

// ------------------------------------------------------------------
// Truncation
// ------------------------------------------------------------------

struct Selector {
    std::map<std::string, long> tail_prefix;  // tail id -> number of materialized points
    std::map<std::string, long> family_count; // family id -> number of copies

    long tail(const std::string& id) const {
        auto it = tail_prefix.find(id);
        return it == tail_prefix.end() ? 0 : it->second;
    }
    long family(const std::string& id) const {
        auto it = family_count.find(id);
        return it == family_count.end() ? 0 : it->second;
    }

    bool leq(const Selector& o) const {
        for (const auto& [k, n] : tail_prefix)
            if (n > o.tail(k)) return false;
        for (const auto& [k, n] : family_count)
            if (n > o.family(k)) return false;
        return true;
    }
};

// Materialize one copy of a family pattern with fresh vertex names; the ghost
// edge is expressed through the a-value it abbreviates.
inline void append_family_copy(BraidedSpaceSpec& out, const ComponentFamily& fam,
                               const Validated& v, long copy) {
    const std::string prefix = fam.id + "." + std::to_string(copy) + ".";
    for (const auto& p : fam.pattern.points) out.points.push_back({prefix + p.id, p.q});
    for (const auto& pr : fam.pattern.pairs) {
        PairData q = pr;
        q.a = prefix + pr.a;
        q.b = prefix + pr.b;
        out.pairs.push_back(std::move(q));
    }
    if (fam.attached) {
        PairData pd;
        pd.a = prefix + fam.at;
        pd.b = fam.block;
        pd.a_ab = a_for_ghost(v.block(fam.block).eps, fam.ghost);
        out.pairs.push_back(std::move(pd));
    }
}

// V_F: the finite core plus per-tail prefixes and per-family finite counts.
inline BraidedSpaceSpec truncate(const Validated& v, const Selector& sel) {
    BraidedSpaceSpec out;
    out.name = v.spec.name;
    out.blocks = v.spec.blocks;
    out.points = v.spec.points;
    out.pairs = v.spec.pairs;
    for (const auto& t : v.spec.tails) {
        long n = sel.tail(t.id);
        if (n <= 0) continue;
        bool two_sided = (t.shape == InfiniteShape::A_INF) && t.kind != TailKind::AChain;
        long take = two_sided ? 2 * n + 1 : n;
        MaterializedTail mt = materialize_tail(t, take);
        std::string prev = t.from; // may be empty for standalone tails
        for (long i = 0; i < take; ++i) {
            std::string id = t.id + "." + std::to_string(i + 1);
            out.points.push_back({id, mt.steps[i].vertex});
            if (!prev.empty()) {
                // the connecting edge label is the template's edge scalar of
                // the previous step (or of the first step when extending a
                // core point)
                MonoScalar label = i == 0 ? mt.steps[0].edge : mt.steps[i - 1].edge;
                PairData pd;
                pd.a = prev;
                pd.b = id;
                pd.q_ab = label;
                out.pairs.push_back(std::move(pd));
            }
            prev = id;
        }
        if (mt.fork && take >= 1) {
            std::string id = t.id + ".fork";
            out.points.push_back({id, mt.fork_vertex});
            if (take >= 2) {
                PairData pd;
                pd.a = id;
                pd.b = t.id + ".2";
                pd.q_ab = mt.fork_edge;
                out.pairs.push_back(std::move(pd));
            }
        }
    }
    for (const auto& f : v.spec.families) {
        long n = sel.family(f.id);
        if (f.count != kOmega) n = std::min(n, f.count);
        for (long c = 1; c <= n; ++c) append_family_copy(out, f, v, c);
    }
    return out;
}

// Expand every finite family into explicit components; omega families are
// preserved (classification treats them symbolically).
inline BraidedSpaceSpec expand_finite_families(const Validated& v) {
    BraidedSpaceSpec out;
    out.name = v.spec.name;
    out.blocks = v.spec.blocks;
    out.points = v.spec.points;
    out.pairs = v.spec.pairs;
    out.tails = v.spec.tails;
    for (const auto& f : v.spec.families) {
        if (f.count == kOmega) {
            out.families.push_back(f);
            continue;
        }
        for (long c = 1; c <= f.count; ++c) append_family_copy(out, f, v, c);
    }
    return out;
}

// ------------------------------------------------------------------
// Fixtures
// ------------------------------------------------------------------

// The (n+1)-point diagonal braided vector space of Theorem 3.7 Step 3:
// points z_1..z_n and y with q_{z_i z_j} = -1, q_{z_i y} = mu,
// q_{y z_j} = zeta_n^j, q_{yy} = q.
inline BraidedSpaceSpec un_fixture(long n, const MonoScalar& mu, const MonoScalar& q) {
    if (n < 2) throw std::invalid_argument("un_fixture: n must be >= 2");
    BraidedSpaceSpec s;
    s.name = "U[" + std::to_string(n) + "]";
    auto minus_one = MonoScalar::minus_one();
    for (long j = 1; j <= n; ++j) s.points.push_back({"z" + std::to_string(j), minus_one});
    s.points.push_back({"y", q});
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j) {
            PairData pd;
            pd.a = "z" + std::to_string(i);
            pd.b = "z" + std::to_string(j);
            pd.q_ab = minus_one;
            pd.q_ba = minus_one;
            s.pairs.push_back(std::move(pd));
        }
    for (long j = 1; j <= n; ++j) {
        PairData pd;
        pd.a = "z" + std::to_string(j);
        pd.b = "y";
        pd.q_ab = mu;                              // c(z_j (x) y) = mu y (x) z_j
        pd.q_ba = MonoScalar::root_of_unity(n, j); // c(y (x) z_j) = zeta^j z_j (x) y
        s.pairs.push_back(std::move(pd));
    }
    return s;
}

} // namespace gkn
