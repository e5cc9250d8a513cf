"""Shared fixture polynomials used across the test modules."""

from fractions import Fraction

from descregions.parsing import parse_signomial

F = Fraction

# ten-term bivariate polynomial with an enclosing pair and three negative
# components
TEN_TERM_TEXT = (
    "-101*x^3*y^2 + 50*x^2*y^3 + x*y^3 + y^4 - x^2*y"
    " - 9.5*y^3 + 51*x^2 + 30.5*y^2 - 37*y + 12"
)
# its restriction to the upper side of the enclosing pair (strict separating
# hyperplane, one component)
TEN_TERM_UPPER_TEXT = (
    "-101*x^3*y^2 + 50*x^2*y^3 + x*y^3 + y^4 - x^2*y + 51*x^2 + 30.5*y^2 + 12"
)
# restriction to the lower side (negatives on a proper face, two components)
TEN_TERM_LOWER_TEXT = (
    "50*x^2*y^3 + x*y^3 + y^4 - 9.5*y^3 + 51*x^2 + 30.5*y^2 - 37*y + 12"
)

# single negative interior term; has a non-strict separating hyperplane
SADDLE_TEXT = "1 + x + y - 4*x*y + x*y^2"

# enclosing pair with small support
ENCLOSED_TEXT = "2 - 2*x^2 - 2*y^2 + 5*x*y + x^2*y^2 - 2*x^3*y"

# box criterion fixture: strict enclosing pair plus a separated negative pair
BOX_TEXT = "-x^4*y^4 + 10*x^3*y^3 - 10*x^4 - 10*y^4 + 7*x*y + 5*x - 1"

# simplex vertex-cone fixture (connected) and its broken variant (two
# components after dropping the cone-interior negatives)
SIMPLEX_CONNECTED_TEXT = (
    "-x^5*y^(7/3) - x^5*y^2 + x^2*y^2 - x*y^3 - y^4 + 2*x^2*y^(4/3) + 2*x*y^2 - x*y"
)
SIMPLEX_SPLIT_TEXT = "-x^5*y^(7/3) + x^2*y^2 - x*y^3 + 2*x^2*y^(4/3) + 2*x*y^2 - x*y"
SIMPLEX_VERTICES = ((F(1), F(1)), (F(4), F(2)), (F(1), F(3)))
SIMPLEX_HALFSPACES = (
    ((F(-1), F(0)), F(-1)),
    ((F(1, 2), F(3, 2)), F(5)),
    ((F(1, 2), F(-3, 2)), F(-1)),
)

# quartic-plus-strip fixture: one component, connected through the vertical
# strips (degree-4 factor has roots 1, 3, 4, 8)
LADDER_TEXT = "x^4 - 16*x^3 + 83*x^2 - 164*x + 96 + x^2*y - 10*x*y + 20*y"

# support on two parallel faces but with no negative-negative edge
STRIP_PAIR_TEXT = "73*x - 55*x^2 - x^4 + y - 20*x*y + x^4*y"

# cube support with parallel top/bottom faces joined by a negative edge
CUBE3_TEXT = "x + x*y - y - 1 + y*z - z - x*z - x*y*z"
# cube plus two positive terms lifting the dimension; the negatives lie on the
# w = 0 facet
CUBE4_TEXT = CUBE3_TEXT + " + w^3 + x*w"

NEG_QUADRATIC_TEXT = "-x^2 + x - 1"
NEG_QUADRATIC_SPLIT_TEXT = "-x^2 + 3*x - 1"
PERFECT_SQUARE_TEXT = "x^2 - 2*x + 1"

# 16-variable fixture: standard-simplex support with two fractional negatives
# on the face spanned by the first three unit exponents
WIDE16_TEXT = (
    "1 + " + " + ".join(f"x{i}" for i in range(1, 17))
    + " - x1^(1/2)*x2^(1/4) - x2^(1/3)*x3^(1/3)"
)


def load(text):
    return parse_signomial(text)


TEN_TERM = load(TEN_TERM_TEXT)
TEN_TERM_UPPER = load(TEN_TERM_UPPER_TEXT)
TEN_TERM_LOWER = load(TEN_TERM_LOWER_TEXT)
SADDLE = load(SADDLE_TEXT)
ENCLOSED = load(ENCLOSED_TEXT)
BOX_F = load(BOX_TEXT)
SIMPLEX_CONNECTED = load(SIMPLEX_CONNECTED_TEXT)
SIMPLEX_SPLIT = load(SIMPLEX_SPLIT_TEXT)
LADDER = load(LADDER_TEXT)
STRIP_PAIR = load(STRIP_PAIR_TEXT)
CUBE3 = load(CUBE3_TEXT)
CUBE4 = load(CUBE4_TEXT)
NEG_QUADRATIC = load(NEG_QUADRATIC_TEXT)
NEG_QUADRATIC_SPLIT = load(NEG_QUADRATIC_SPLIT_TEXT)
PERFECT_SQUARE = load(PERFECT_SQUARE_TEXT)
WIDE16 = load(WIDE16_TEXT)


def vec(*coords):
    return tuple(F(c) for c in coords)
