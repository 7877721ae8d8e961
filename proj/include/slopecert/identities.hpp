#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slopecert/report.hpp"

namespace slopecert {

// Grid description for the identity suite.  Defaults match the certified
// ranges: small primes, exhaustive parameters <= 10, u <= 60 for the exact
// identities, u <= 400/200 for the congruence families.
struct IdentityGrid {
    std::vector<long> primes{3, 5, 7, 11, 13};
    std::vector<long> moduli{1, 2, 3};  // m for the mod p^m congruence
    long pairs_per_class = 20;
    long max_u_pairs = 400;
    long max_u_mod_p = 200;
    long max_u = 60;
    long max_param = 10;
    std::uint64_t seed = 0;
};

// ids: "c-a" ... "c-k"
CheckList verify_identity(const std::string& id, const IdentityGrid& grid);
CheckList verify_all_identities(const IdentityGrid& grid);

// Change-of-basis property behind the theta criterion: the functionals
// T_0..T_{alpha-1} of the standard family vanish on D iff the plain binomial
// moments sum_i D_i binom(i,w) do, w < alpha.
CheckList verify_functional_span(const std::vector<long>& primes, long max_alpha,
                                 std::uint64_t seed);

}  // namespace slopecert
