#include "conelab/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "conelab/errors.hpp"
#include "conelab/polynomial.hpp"

namespace conelab {

MonomialOrder MonomialOrder::lex(int nvars) {
    Block b{OrderKind::lex, {}};
    for (int i = 0; i < nvars; ++i) b.vars.push_back(i);
    return from_blocks({std::move(b)});
}

MonomialOrder MonomialOrder::grevlex(int nvars) {
    Block b{OrderKind::grevlex, {}};
    for (int i = 0; i < nvars; ++i) b.vars.push_back(i);
    return from_blocks({std::move(b)});
}

MonomialOrder MonomialOrder::from_blocks(std::vector<Block> blocks) {
    MonomialOrder o;
    o.blocks_ = std::move(blocks);
    return o;
}

MonomialOrder MonomialOrder::elimination(const std::vector<int>& front,
                                         const MonomialOrder& rest) {
    std::set<int> eliminated(front.begin(), front.end());
    std::vector<Block> blocks;
    Block head{OrderKind::grevlex, front};
    std::sort(head.vars.begin(), head.vars.end());
    blocks.push_back(std::move(head));
    for (const Block& b : rest.blocks_) {
        Block kept{b.kind, {}};
        for (int v : b.vars)
            if (!eliminated.count(v)) kept.vars.push_back(v);
        if (!kept.vars.empty()) blocks.push_back(std::move(kept));
    }
    return from_blocks(std::move(blocks));
}

namespace {

int compare_block(const MonomialOrder::Block& b, const Monomial& x, const Monomial& y) {
    if (b.kind == OrderKind::lex) {
        for (int v : b.vars) {
            if (x.e[v] != y.e[v]) return x.e[v] > y.e[v] ? 1 : -1;
        }
        return 0;
    }
    // grevlex: higher block degree first; ties broken by the last variable in
    // which the exponents differ, smaller exponent winning.
    long dx = 0, dy = 0;
    for (int v : b.vars) {
        dx += x.e[v];
        dy += y.e[v];
    }
    if (dx != dy) return dx > dy ? 1 : -1;
    for (auto it = b.vars.rbegin(); it != b.vars.rend(); ++it) {
        int v = *it;
        if (x.e[v] != y.e[v]) return x.e[v] < y.e[v] ? 1 : -1;
    }
    return 0;
}

MonomialOrder shifted_order(const MonomialOrder& o, int offset) {
    std::vector<MonomialOrder::Block> blocks;
    for (const auto& b : o.blocks()) {
        MonomialOrder::Block nb{b.kind, {}};
        for (int v : b.vars) nb.vars.push_back(v + offset);
        blocks.push_back(std::move(nb));
    }
    return MonomialOrder::from_blocks(std::move(blocks));
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (const Block& blk : blocks_) {
        int c = compare_block(blk, a, b);
        if (c != 0) return c;
    }
    return 0;
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
    if (blocks_.size() != o.blocks_.size()) return false;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].kind != o.blocks_[i].kind || blocks_[i].vars != o.blocks_[i].vars)
            return false;
    }
    return true;
}

std::string MonomialOrder::describe() const {
    std::ostringstream os;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << "|";
        os << (blocks_[i].kind == OrderKind::lex ? "lex" : "grevlex") << "(";
        for (size_t j = 0; j < blocks_[i].vars.size(); ++j) {
            if (j) os << ",";
            os << blocks_[i].vars[j];
        }
        os << ")";
    }
    return os.str();
}

PolyRing::PolyRing(std::vector<std::string> names, std::optional<int> param, MonomialOrder order)
    : names_(std::move(names)), param_(param), order_(std::move(order)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second) throw DomainError("duplicate variable name: " + n);
    }
    if (param_ && (*param_ < 0 || *param_ >= nvars()))
        throw DomainError("parameter index out of range");
}

RingPtr PolyRing::make(std::vector<std::string> names, std::optional<std::string> param_name,
                       std::optional<MonomialOrder> order) {
    std::optional<int> param;
    if (param_name) {
        auto it = std::find(names.begin(), names.end(), *param_name);
        if (it == names.end())
            throw DomainError("parameter '" + *param_name + "' is not a declared variable");
        param = static_cast<int>(it - names.begin());
    }
    int n = static_cast<int>(names.size());
    MonomialOrder o = order ? *order : MonomialOrder::grevlex(n);
    return std::make_shared<PolyRing>(std::move(names), param, std::move(o));
}

int PolyRing::index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

std::vector<int> PolyRing::coordinate_vars() const {
    std::vector<int> out;
    for (int i = 0; i < nvars(); ++i)
        if (!param_ || *param_ != i) out.push_back(i);
    return out;
}

bool PolyRing::same_as(const PolyRing& other) const {
    return names_ == other.names_ && param_ == other.param_ && order_ == other.order_;
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    return std::make_shared<PolyRing>(ring->names(), ring->param(), std::move(order));
}

RingPtr extend_front(const RingPtr& ring, const std::vector<std::string>& fresh) {
    int k = static_cast<int>(fresh.size());
    std::vector<std::string> names = fresh;
    names.insert(names.end(), ring->names().begin(), ring->names().end());
    std::optional<int> param;
    if (ring->param()) param = *ring->param() + k;
    std::vector<int> front;
    for (int i = 0; i < k; ++i) front.push_back(i);
    MonomialOrder order = MonomialOrder::elimination(front, shifted_order(ring->order(), k));
    return std::make_shared<PolyRing>(std::move(names), param, std::move(order));
}

RingPtr extend_back(const RingPtr& ring, const std::vector<std::string>& fresh) {
    int n = ring->nvars();
    std::vector<std::string> names = ring->names();
    names.insert(names.end(), fresh.begin(), fresh.end());
    // Appended variables join the last block of the order.
    std::vector<MonomialOrder::Block> blocks = ring->order().blocks();
    if (blocks.empty()) blocks.push_back({OrderKind::grevlex, {}});
    for (size_t i = 0; i < fresh.size(); ++i)
        blocks.back().vars.push_back(n + static_cast<int>(i));
    return std::make_shared<PolyRing>(std::move(names), ring->param(),
                                      MonomialOrder::from_blocks(std::move(blocks)));
}

RingPtr drop_vars(const RingPtr& ring, const std::vector<int>& vars) {
    std::set<int> dropped(vars.begin(), vars.end());
    std::vector<std::string> names;
    std::vector<int> remap(ring->nvars(), -1);
    for (int i = 0; i < ring->nvars(); ++i) {
        if (!dropped.count(i)) {
            remap[i] = static_cast<int>(names.size());
            names.push_back(ring->name(i));
        }
    }
    std::optional<int> param;
    if (ring->param() && !dropped.count(*ring->param())) param = remap[*ring->param()];
    std::vector<MonomialOrder::Block> blocks;
    for (const auto& b : ring->order().blocks()) {
        MonomialOrder::Block nb{b.kind, {}};
        for (int v : b.vars)
            if (remap[v] >= 0) nb.vars.push_back(remap[v]);
        if (!nb.vars.empty()) blocks.push_back(std::move(nb));
    }
    return std::make_shared<PolyRing>(std::move(names), param,
                                      MonomialOrder::from_blocks(std::move(blocks)));
}

std::string fresh_name(const PolyRing& ring, const std::string& stem) {
    if (ring.index_of(stem) < 0) return stem;
    for (int i = 0;; ++i) {
        std::string candidate = stem + "_" + std::to_string(i);
        if (ring.index_of(candidate) < 0) return candidate;
    }
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (a.get() == b.get()) return;
    if (a && b && a->same_as(*b)) return;
    throw RingMismatchError(std::string(where) + ": operands live in different rings");
}

} // namespace conelab
