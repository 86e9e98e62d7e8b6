#include "akc/wall.hpp"

#include <numeric>
#include <stdexcept>

#include "akc/errors.hpp"
#include "akc/mode_algebra.hpp"
#include "akc/seqgen.hpp"

namespace akc {

DescriptionMode wall_mode(std::uint64_t c, std::size_t verify_length) {
    if (c < 2) throw ContractError("wall_mode needs c >= 2");
    if (c > 4096) throw ResourceError("wall_mode limited to c <= 4096");
    LabeledAutomaton a({Alphabet::binary(), Alphabet::binary()}, c);
    for (std::uint64_t r = 0; r < c; ++r)
        for (Letter x = 0; x < 2; ++x)
            for (Letter y = 0; y < 2; ++y) {
                const auto next = static_cast<std::int64_t>(2 * r + y) - static_cast<std::int64_t>(c * x);
                if (next >= 0 && next < static_cast<std::int64_t>(c))
                    a.add_edge(static_cast<StateId>(r), static_cast<StateId>(next), {sym(x), sym(y)});
            }

    std::string name = "wall-c" + std::to_string(c);
    if (verify_length > 0) {
        const ValuednessProfile p = valuedness_profile(a, TapeRoles::binary(), verify_length);
        if (!p.max_fanout || *p.max_fanout > c)
            throw std::logic_error("wall automaton exceeds its valuedness bound " + std::to_string(c));
        name += "-checked-L" + std::to_string(verify_length);
    }
    return make_mode(std::move(a), ValuednessCertificate::asserted(c, std::move(name)));
}

WallPrefixes wall_oracle(std::uint64_t c, std::uint64_t p, std::uint64_t q, std::size_t len) {
    if (q == 0) throw ContractError("wall_oracle needs q > 0");
    if (p >= q) throw ContractError("wall_oracle needs 0 <= p < q");
    WallPrefixes out;
    out.x = rational_bits(p, q, len);
    const auto cp = static_cast<unsigned __int128>(c) * p;
    const auto frac_num = static_cast<std::uint64_t>(cp % q);
    out.y = rational_bits(frac_num, q, len);
    // c*p/q in lowest terms has denominator q / gcd(c*p mod q, q).
    const std::uint64_t reduced_q = q / std::gcd(frac_num, q);
    out.dyadic = (reduced_q & (reduced_q - 1)) == 0;
    return out;
}

} // namespace akc
