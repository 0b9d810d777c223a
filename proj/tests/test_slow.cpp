#include <doctest.h>

#include "fusionq/repr.hpp"

using namespace fusionq;

// About three minutes: the left ideal of F for (3,3,2) inside the
// 40320-dimensional H_8 at q0 = 6/5.
TEST_CASE("ideal dimension of (3,3,2) is 42 at numeric q") {
    const Partition p({3, 3, 2});
    const EvalMode m = EvalMode::at(BigRational(mpz_class(6), mpz_class(5)));
    const ElementQ f = evaluate_F({hook_tableau(p), Grouping::hook, {}}, m).element;
    CHECK(ideal_dimension(f, m) == 42);
    CHECK(hook_length_count(p) == 42);
}
