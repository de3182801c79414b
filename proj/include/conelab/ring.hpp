#ifndef CONELAB_RING_HPP
#define CONELAB_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace conelab {

struct Monomial;

enum class OrderKind { lex, grevlex };

// A monomial order given as a sequence of variable blocks compared in turn.
// A single block covering all variables is a plain lex/grevlex order; several
// blocks form an elimination (block) order.  Blocks partition the variables.
class MonomialOrder {
  public:
    struct Block {
        OrderKind kind;
        std::vector<int> vars; // ascending ring indices
    };

    MonomialOrder() = default;
    static MonomialOrder lex(int nvars);
    static MonomialOrder grevlex(int nvars);
    static MonomialOrder from_blocks(std::vector<Block> blocks);
    // `front` compared first (eliminated block), remaining variables keep the
    // block structure of `rest` restricted to the complement.
    static MonomialOrder elimination(const std::vector<int>& front, const MonomialOrder& rest);

    const std::vector<Block>& blocks() const { return blocks_; }
    bool single_block() const { return blocks_.size() == 1; }
    OrderKind leading_kind() const { return blocks_.front().kind; }

    // +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool operator==(const MonomialOrder& o) const;

    std::string describe() const;

  private:
    std::vector<Block> blocks_;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Ambient polynomial ring descriptor: variable names, the optional designated
// family parameter, and the monomial order under which polynomials are kept.
class PolyRing {
  public:
    PolyRing(std::vector<std::string> names, std::optional<int> param, MonomialOrder order);

    static RingPtr make(std::vector<std::string> names,
                        std::optional<std::string> param_name = std::nullopt,
                        std::optional<MonomialOrder> order = std::nullopt);

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    std::optional<int> param() const { return param_; }
    const MonomialOrder& order() const { return order_; }

    int index_of(const std::string& name) const; // -1 if absent

    // Indices of all non-parameter variables, in ring order.
    std::vector<int> coordinate_vars() const;

    bool same_as(const PolyRing& other) const; // structural equality

  private:
    std::vector<std::string> names_;
    std::optional<int> param_;
    MonomialOrder order_;
};

// Same variables under a different order (polynomials must be re-sorted when
// moved across, see reorder()).
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

// Ring with extra variables inserted at the front (elimination block) or
// appended at the back. The parameter index is remapped.
RingPtr extend_front(const RingPtr& ring, const std::vector<std::string>& fresh);
RingPtr extend_back(const RingPtr& ring, const std::vector<std::string>& fresh);

// Ring with the given variables removed; the order is the restriction.
RingPtr drop_vars(const RingPtr& ring, const std::vector<int>& vars);

// A variable name not colliding with anything declared in `ring`.
std::string fresh_name(const PolyRing& ring, const std::string& stem);

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

} // namespace conelab

#endif
