"""Fourth-order three-dimensional symmetric traceless (harmonic) tensors.

A fully symmetric fourth-order tensor on R^3 has 15 independent entries,
indexed by the non-decreasing 4-tuples over {1,2,3}.  Requiring every
single trace to vanish removes six of them, so a harmonic tensor D is
determined by the nine components

    (D1111, D1112, D1113, D1122, D1123, D1222, D1223, D2222, D2223)

kept here in exactly this fixed order everywhere (constructors, JSON,
random sampling).  The six dependent slots follow from the trace
conditions and are recomputed on demand, which makes tracelessness
unviolable by construction:

    D1133 = -D1111 - D1122          D1333 = -D1113 - D1223
    D2233 = -D1122 - D2222          D2333 = -D1123 - D2223
    D3333 =  D1111 + 2*D1122 + D2222    D1233 = -D1112 - D1222

Two scalar backends are supported and never mixed inside one tensor:
``exact`` (arbitrary-precision `fractions.Fraction`) and ``float``
(binary64).  The algebra below is written generically, so components may
also be elements of any commutative ring (the symbolic layer exploits
this by feeding sparse polynomials through the same code path).
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement

import numpy as np

EXACT = "exact"
FLOAT = "float"

#: The nine independent slots, in the canonical component order.
INDEPENDENT_SLOTS = (
    (1, 1, 1, 1), (1, 1, 1, 2), (1, 1, 1, 3), (1, 1, 2, 2), (1, 1, 2, 3),
    (1, 2, 2, 2), (1, 2, 2, 3), (2, 2, 2, 2), (2, 2, 2, 3),
)

COMPONENT_NAMES = (
    "D1111", "D1112", "D1113", "D1122", "D1123",
    "D1222", "D1223", "D2222", "D2223",
)

#: All 15 canonical (sorted) index 4-tuples of a fully symmetric tensor.
ALL_SLOTS = tuple(combinations_with_replacement((1, 2, 3), 4))


def canonical_index(i: int, j: int, k: int, l: int) -> tuple:
    """Return the non-decreasing reordering of the index 4-tuple.

    Indices must lie in {1, 2, 3}; anything else raises ``ValueError``.
    There are exactly 15 distinct keys.
    """
    key = (i, j, k, l)
    for ix in key:
        if ix not in (1, 2, 3):
            raise ValueError(f"tensor index {ix!r} outside {{1, 2, 3}}")
    return tuple(sorted(key))


def multiplicity(slot) -> int:
    """Number of distinct ordered arrangements of a sorted index tuple.

    This is the multinomial count len(slot)! / prod(repeats!), the weight
    with which each canonical slot enters an unrestricted index sum.
    """
    count = math.factorial(len(slot))
    for rep in Counter(slot).values():
        count //= math.factorial(rep)
    return count


#: Arrangement weights of the 15 canonical slots (sum = 81).
SLOT_WEIGHTS = {slot: multiplicity(slot) for slot in ALL_SLOTS}


@dataclass(frozen=True)
class Harmonic4:
    """A harmonic fourth-order tensor, stored by its 9 independent components.

    Instances are immutable values; all derived views (the 15-slot
    expansion, the float array) are cached on first use.  Prefer
    :func:`from_independent` for validated construction; the raw
    constructor accepts arbitrary ring elements.
    """

    indep: tuple

    def __post_init__(self):
        if len(self.indep) != 9:
            raise ValueError(f"expected 9 independent components, got {len(self.indep)}")

    @property
    def backend(self) -> str:
        """Scalar backend: ``float``, ``exact``, or ``generic``."""
        if all(type(v) is float for v in self.indep):
            return FLOAT
        if all(isinstance(v, (int, Fraction)) for v in self.indep):
            return EXACT
        return "generic"

    @cached_property
    def _full(self) -> dict:
        d = dict(zip(INDEPENDENT_SLOTS, self.indep))
        d1111, d1112, d1113, d1122, d1123, d1222, d1223, d2222, d2223 = self.indep
        d[(1, 1, 3, 3)] = -d1111 - d1122
        d[(2, 2, 3, 3)] = -d1122 - d2222
        d[(3, 3, 3, 3)] = d1111 + 2 * d1122 + d2222
        d[(1, 3, 3, 3)] = -d1113 - d1223
        d[(2, 3, 3, 3)] = -d1123 - d2223
        d[(1, 2, 3, 3)] = -d1112 - d1222
        return d

    def expand(self) -> dict:
        """All 15 canonical slots, dependent ones filled in by the trace rules."""
        return dict(self._full)

    def component(self, i: int, j: int, k: int, l: int):
        """Entry D_ijkl for any index order (full permutation symmetry)."""
        return self._full[canonical_index(i, j, k, l)]

    def __neg__(self) -> "Harmonic4":
        return Harmonic4(tuple(-v for v in self.indep))

    def scale(self, c) -> "Harmonic4":
        """Componentwise multiple c*D."""
        return Harmonic4(tuple(c * v for v in self.indep))

    def __add__(self, other: "Harmonic4") -> "Harmonic4":
        return Harmonic4(tuple(a + b for a, b in zip(self.indep, other.indep)))

    def __sub__(self, other: "Harmonic4") -> "Harmonic4":
        return Harmonic4(tuple(a - b for a, b in zip(self.indep, other.indep)))

    def frobenius_norm_sq(self):
        """Sum of the squares of all 81 entries (equals the degree-2 invariant)."""
        full = self._full
        return sum(w * full[s] * full[s] for s, w in SLOT_WEIGHTS.items())

    @cached_property
    def _array(self) -> np.ndarray:
        arr = np.empty((3, 3, 3, 3))
        full = self._full
        for i in range(1, 4):
            for j in range(1, 4):
                for k in range(1, 4):
                    for l in range(1, 4):
                        arr[i - 1, j - 1, k - 1, l - 1] = full[tuple(sorted((i, j, k, l)))]
        arr.flags.writeable = False
        return arr

    def to_array(self) -> np.ndarray:
        """Read-only float (3,3,3,3) view of the full tensor (float backend)."""
        return self._array


def _coerce_exact(value):
    if isinstance(value, float):
        raise TypeError(
            f"exact backend rejects float input {value!r}; pass an int, Fraction, or 'p/q' string"
        )
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _coerce_float(value):
    if isinstance(value, str):
        value = Fraction(value) if "/" in value else float(value)
    if isinstance(value, (int, float, Fraction)):
        return float(value)
    raise TypeError(f"cannot interpret {value!r} as a float component")


def from_independent(values, backend: str = FLOAT) -> Harmonic4:
    """Build a tensor from the 9 independent components in canonical order.

    Parameters
    ----------
    values : sequence of 9 scalars
        In the order (D1111, D1112, D1113, D1122, D1123, D1222, D1223,
        D2222, D2223).  The exact backend accepts ints, Fractions and
        "p/q" strings and rejects floats; the float backend converts
        anything numeric to binary64.
    backend : {"exact", "float"}
    """
    values = tuple(values)
    if len(values) != 9:
        raise ValueError(f"expected 9 independent components, got {len(values)}")
    if backend == EXACT:
        return Harmonic4(tuple(_coerce_exact(v) for v in values))
    if backend == FLOAT:
        return Harmonic4(tuple(_coerce_float(v) for v in values))
    raise ValueError(f"unknown backend {backend!r}")


def from_array(arr) -> Harmonic4:
    """Read the 9 independent slots out of a full (3,3,3,3) float array."""
    arr = np.asarray(arr, dtype=float)
    if arr.shape != (3, 3, 3, 3):
        raise ValueError(f"expected shape (3,3,3,3), got {arr.shape}")
    return Harmonic4(tuple(float(arr[s[0] - 1, s[1] - 1, s[2] - 1, s[3] - 1])
                           for s in INDEPENDENT_SLOTS))


def random_harmonic(seed: int, backend: str = FLOAT) -> Harmonic4:
    """Deterministic random harmonic tensor.

    Float backend draws the 9 components i.i.d. standard normal; the exact
    backend draws uniform rationals with numerator in [-12, 12] and
    denominator in [1, 12].  Same seed, same tensor.
    """
    if backend == FLOAT:
        rng = np.random.default_rng(seed)
        return Harmonic4(tuple(float(v) for v in rng.standard_normal(9)))
    if backend == EXACT:
        rng = random.Random(seed)
        return Harmonic4(tuple(Fraction(rng.randint(-12, 12), rng.randint(1, 12))
                               for _ in range(9)))
    raise ValueError(f"unknown backend {backend!r}")


def check_traceless(tensor, tol=0):
    """Maximum single-trace violation max_{j,k} |sum_i D_iijk|.

    Accepts a :class:`Harmonic4` or a raw 15-slot mapping (as returned by
    :meth:`Harmonic4.expand`); with canonical sorted-key storage the six
    trace positions coincide, so one contraction pattern covers them all.
    Any tensor built from 9 independent components returns exactly 0 in
    exact mode and rounding noise at most ~1e-12*|D| in float mode.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    full = tensor.expand() if isinstance(tensor, Harmonic4) else dict(tensor)
    worst = 0
    for j in (1, 2, 3):
        for k in (1, 2, 3):
            trace = sum(full[tuple(sorted((i, i, j, k)))] for i in (1, 2, 3))
            worst = max(worst, abs(trace))
    return worst


def _format_scalar(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def to_json_dict(tensor: Harmonic4) -> dict:
    """JSON form {"components": [...]}; exact scalars serialize as "p/q" strings."""
    return {"components": [_format_scalar(v) for v in tensor.indep]}


def from_json_dict(obj, backend: str = FLOAT) -> Harmonic4:
    """Parse the {"components": [...]} JSON form produced by :func:`to_json_dict`."""
    if not isinstance(obj, dict) or "components" not in obj:
        raise ValueError('tensor JSON must be an object with a "components" array')
    components = obj["components"]
    if not isinstance(components, (list, tuple)) or len(components) != 9:
        raise ValueError('"components" must be an array of 9 entries')
    return from_independent(components, backend=backend)
