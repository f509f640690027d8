#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace migdag {

// Hard cap on graph size: node sets are single 64-bit words.
inline constexpr int kMaxNodes = 64;

// A set of node ids in [0, kMaxNodes), value type, cheap to copy.
class NodeSet {
public:
    constexpr NodeSet() = default;
    constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr NodeSet single(int v) { return NodeSet(std::uint64_t{1} << v); }
    static constexpr NodeSet first_n(int n) {
        return NodeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return __builtin_popcountll(bits_); }
    constexpr std::uint64_t bits() const { return bits_; }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr NodeSet with(int v) const { return NodeSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr NodeSet without(int v) const { return NodeSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }

    // Lowest node id in the set; undefined on empty sets.
    constexpr int lowest() const { return __builtin_ctzll(bits_); }

    constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
    constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
    constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
    constexpr NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
    constexpr NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }
    constexpr NodeSet& operator-=(NodeSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const NodeSet&) const = default;

    // Calls f(v) for each member in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
            f(__builtin_ctzll(rest));
    }

private:
    std::uint64_t bits_ = 0;
};

// Thrown when an input exceeds a documented size limit.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by text parsers; `line` is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

}  // namespace migdag
