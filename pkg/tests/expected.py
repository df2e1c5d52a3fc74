"""Frozen expected values used across the test suite.

Each constant was computed once with an independent method (stated next to
it) and is asserted bit-exactly against the library.
"""

# e_1..e_150 for the semigroup <3,5,7>; cross-computed by the elimination
# and the power-sum routes, which are independent implementations.
EXPONENTS_3_5_7 = (
    1, 0, -1, 0, -1, 0, -1, 0, 0, 1,
    0, 1, 0, 1, 0, 0, -1, 0, -1, 0,
    0, 1, 0, 1, 0, 1, -1, 0, -2, 0,
    -2, 1, -1, 3, 0, 3, -1, 3, -3, 1,
    -5, 1, -5, 3, -3, 7, -2, 8, -4, 7,
    -9, 4, -14, 6, -14, 12, -10, 22, -9, 25,
    -16, 23, -30, 17, -42, 23, -43, 41, -36, 66,
    -37, 76, -60, 73, -100, 66, -133, 91, -139, 148,
    -129, 219, -146, 252, -222, 252, -340, 255, -438, 346,
    -469, 524, -473, 731, -564, 846, -820, 887, -1183, 973,
    -1488, 1309, -1635, 1889, -1756, 2530, -2157, 2947, -3026, 3214,
    -4181, 3701, -5187, 4922, -5839, 6834, -6563, 8905, -8200, 10467,
    -11195, 11807, -14992, 14052, -18463, 18510, -21237, 24982, -24675, 31960,
    -31101, 37904, -41573, 43905, -54450, 53343, -66840, 69606, -78312, 91968,
    -93176, 116272, -117909, 139142, -155059, 164573, -199918, 202659, -245305, 262345,
)

# coefficient list of the semigroup polynomial of <4,6,9> (degree 12),
# derived from the gap set {1,2,3,5,7,11}
POLYNOMIAL_4_6_9 = (1, -1, 0, 0, 1, -1, 1, -1, 1, 0, 0, -1, 1)

# coefficient list for <3,5,7> (degree 5), gap set {1,2,4}
POLYNOMIAL_3_5_7 = (1, -1, 0, 1, -1, 1)

# e_1..e_18 for <4,6,9>: 1 at 1, -1 at the generators, +1 at 12 and 18
EXPONENTS_4_6_9_18 = (1, 0, 0, -1, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1)

# numbers of numerical semigroups per genus (A007323); entries up to
# genus 8 are re-derived in-suite by the gap-subset oracle
SEMIGROUPS_PER_GENUS = (1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592,
                        1001, 1693, 2857, 4806, 8045, 13467)
