#include "slopecert/eisenstein.hpp"

namespace slopecert {

EisElem eisenstein_make_a(long p, int e, long M, long j) {
    if (e < 1) throw std::invalid_argument("eisenstein_make_a: e < 1");
    if (j < 0) throw std::invalid_argument("eisenstein_make_a: j < 0");
    return EisElem::pi_pow(p, e, M, j);
}

}  // namespace slopecert
