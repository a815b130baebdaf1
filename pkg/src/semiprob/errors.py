"""Exception hierarchy.  Every error carries its witness as attributes so the
CLI can serialize it."""


class SemigroupError(ValueError):
    """Base class for all library errors."""

    kind = "SemigroupError"

    def witness(self):
        return None


class BadEntry(SemigroupError):
    kind = "BadEntry"

    def __init__(self, i, j, value, n):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry ({i},{j}) = {value!r} is not an element of [0, {n})")

    def witness(self):
        return [self.i, self.j, self.value]


class BadShape(SemigroupError):
    kind = "BadShape"


class NotAssociative(SemigroupError):
    kind = "NotAssociative"

    def __init__(self, a, b, c):
        self.a, self.b, self.c = a, b, c
        super().__init__(f"(a*b)*c != a*(b*c) for (a,b,c) = ({a},{b},{c})")

    def witness(self):
        return [self.a, self.b, self.c]


class EmptyPartition(SemigroupError):
    kind = "EmptyPartition"


class InvalidPartition(SemigroupError):
    kind = "InvalidPartition"


class PairOutOfRange(SemigroupError):
    kind = "PairOutOfRange"

    def __init__(self, pair, n):
        self.pair = pair
        super().__init__(f"pair {pair!r} has a component outside [0, {n})")

    def witness(self):
        return list(self.pair)


class DimensionMismatch(SemigroupError):
    kind = "DimensionMismatch"


class SizeMismatch(SemigroupError):
    kind = "SizeMismatch"


class TooLarge(SemigroupError):
    kind = "TooLarge"

    def __init__(self, n, limit, what="size", hint=""):
        self.n, self.limit = n, limit
        msg = f"{what} {n} exceeds the supported limit {limit}"
        super().__init__(f"{msg} ({hint})" if hint else msg)

    def witness(self):
        return [self.n, self.limit]


class NotACongruence(SemigroupError):
    kind = "NotACongruence"

    def __init__(self, a, b, x, side):
        self.a, self.b, self.x, self.side = a, b, x, side
        super().__init__(
            f"({a},{b}) related but {side} multiplication by {x} separates them"
        )

    def witness(self):
        return [self.a, self.b, self.x, self.side]


class NotAnIdeal(SemigroupError):
    kind = "NotAnIdeal"

    def __init__(self, member, other, product, side):
        self.member, self.other, self.product, self.side = member, other, product, side
        super().__init__(
            f"{side} product of member {member} with {other} is {product}, outside the set"
        )

    def witness(self):
        return [self.member, self.other, self.product, self.side]


class NotNested(SemigroupError):
    kind = "NotNested"

    def __init__(self, a, b):
        self.a, self.b = a, b
        super().__init__(f"({a},{b}) lies in the smaller congruence but not the larger")

    def witness(self):
        return [self.a, self.b]


class CoherenceViolation(SemigroupError):
    kind = "CoherenceViolation"

    def __init__(self, x, y, z, a):
        self.x, self.y, self.z, self.a = x, y, z, a
        super().__init__(
            f"map coherence fails for base triple ({x},{y},{z}) at fiber element {a}"
        )

    def witness(self):
        return [self.x, self.y, self.z, self.a]


class MissingMap(SemigroupError):
    kind = "MissingMap"


class PhiNotFixingL(SemigroupError):
    kind = "PhiNotFixingL"

    def __init__(self, e, image):
        self.e, self.image = e, image
        super().__init__(f"phi must fix left zero element {e}, got {image}")

    def witness(self):
        return [self.e, self.image]


class InvalidSpec(SemigroupError):
    kind = "InvalidSpec"


class UnknownCheck(SemigroupError):
    kind = "UnknownCheck"
