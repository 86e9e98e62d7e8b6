#pragma once

#include <cstdint>

#include "akc/automaton.hpp"

namespace akc {

/// Carry automaton relating binary expansions of frac(g) (description tape)
/// and frac(c*g) (object tape). States are carries r in [0, c); an edge
/// r -(a,b)-> r' exists iff c*a + r' = 2r + b. Along a path
/// r0 -(x,y)-> rL one has c*X + rL = r0 * 2^L + Y, so a description has at
/// most c objects.
///
/// When verify_length > 0 the bound is additionally checked by brute force
/// over all descriptions up to that length (std::logic_error on failure).
DescriptionMode wall_mode(std::uint64_t c, std::size_t verify_length = 10);

struct WallPrefixes {
    Word x;  ///< frac(p/q)
    Word y;  ///< frac(c*p/q)
    /// c*p/q is a dyadic rational, so frac(c*p/q) (and possibly frac(p/q))
    /// has a second, non-terminating expansion.
    bool dyadic = false;
};

/// Exact first `len` digits by integer long division. Needs 0 <= p < q.
WallPrefixes wall_oracle(std::uint64_t c, std::uint64_t p, std::uint64_t q, std::size_t len);

} // namespace akc
