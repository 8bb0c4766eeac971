"""Orthogonal group action on harmonic tensors and isotropy verification.

The defining property of the ten invariants is insensitivity to the
simultaneous orthogonal transformation of all four indices,

    D'_abcd = Q_ai Q_bj Q_ck Q_dl D_ijkl,

for every orthogonal Q -- reflections included, so sampling covers all of
O(3), not just the rotation subgroup.  :func:`isotropy_check` hammers a
tensor with Haar-random orthogonal matrices and reports the worst
relative drift of each invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import tensor as tc
from .invariants import INVARIANT_DEGREES, INVARIANT_NAMES, invariants
from .tensor import FLOAT, Harmonic4

#: Entrywise tolerance on Q^T Q - I for float matrices.
ORTHO_TOL = 1e-12


@dataclass(frozen=True)
class Orthogonal3:
    """A 3x3 orthogonal matrix, row-major.  det may be +1 or -1.

    Entries are floats or exact rationals; exact matrices must satisfy
    Q^T Q = I exactly (signed permutations are the typical case), float
    matrices within :data:`ORTHO_TOL` per entry.
    """

    rows: tuple

    def entry(self, i: int, j: int):
        return self.rows[i - 1][j - 1]

    def __matmul__(self, other: "Orthogonal3") -> "Orthogonal3":
        return Orthogonal3(tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(3))
                  for j in range(3))
            for i in range(3)
        ))

    def transpose(self) -> "Orthogonal3":
        return Orthogonal3(tuple(tuple(self.rows[j][i] for j in range(3))
                                 for i in range(3)))

    def orthogonality_defect(self):
        """max |(Q^T Q - I)_ij| over all entries."""
        worst = 0
        for i in range(3):
            for j in range(3):
                g = sum(self.rows[k][i] * self.rows[k][j] for k in range(3))
                worst = max(worst, abs(g - (1 if i == j else 0)))
        return worst

    def is_float(self) -> bool:
        return all(type(v) is float for row in self.rows for v in row)

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=float)

    @classmethod
    def identity(cls) -> "Orthogonal3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def from_matrix(cls, m) -> "Orthogonal3":
        rows = tuple(
            tuple(float(v) if isinstance(v, (float, np.floating)) else v for v in row)
            for row in m
        )
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("expected a 3x3 matrix")
        return cls(rows)


def reflection(axis: int = 3) -> Orthogonal3:
    """Diagonal reflection flipping one coordinate axis."""
    rows = [[0] * 3 for _ in range(3)]
    for i in range(3):
        rows[i][i] = -1 if i == axis - 1 else 1
    return Orthogonal3(tuple(tuple(r) for r in rows))


def signed_permutation(perm, signs=(1, 1, 1)) -> Orthogonal3:
    """Exact orthogonal matrix sending axis j to sign*axis perm[j].

    ``perm`` is a permutation of (1, 2, 3); these are the orthogonal
    matrices with rational (in fact 0/+-1) entries, usable on the exact
    backend.
    """
    if sorted(perm) != [1, 2, 3]:
        raise ValueError(f"{perm!r} is not a permutation of (1, 2, 3)")
    rows = [[0] * 3 for _ in range(3)]
    for j, (p, s) in enumerate(zip(perm, signs)):
        rows[p - 1][j] = s
    return Orthogonal3(tuple(tuple(r) for r in rows))


def _require_orthogonal(q: Orthogonal3):
    defect = q.orthogonality_defect()
    if q.is_float():
        if defect > ORTHO_TOL:
            raise ValueError(f"matrix is not orthogonal: defect {defect:.3e} > {ORTHO_TOL}")
    elif defect != 0:
        raise ValueError("exact-backend matrix must satisfy Q^T Q = I exactly")


def rotate(d: Harmonic4, q: Orthogonal3) -> Harmonic4:
    """Transform all four indices of ``d`` by the orthogonal matrix ``q``.

    The full tensor is transformed, the 9 independent slots are read back,
    and (in debug builds) the dependent slots of the transform are checked
    against their trace-completion values -- a free consistency check on
    the contraction.
    """
    _require_orthogonal(q)
    if d.backend == FLOAT and q.is_float():
        arr = d.to_array()
        qm = q.to_array()
        for _ in range(4):
            arr = np.tensordot(arr, qm, axes=([0], [1]))
        out = tc.from_array(arr)
        if __debug__:
            scale = max(1.0, float(np.max(np.abs(arr))))
            for slot, value in out._full.items():
                got = arr[slot[0] - 1, slot[1] - 1, slot[2] - 1, slot[3] - 1]
                assert abs(got - value) <= 1e-10 * scale, \
                    f"rotated tensor lost tracelessness at {slot}"
        return out

    full = d._full
    transformed = {}
    rng = (1, 2, 3)
    for slot in tc.ALL_SLOTS:
        a, b, c, e = slot
        acc = 0
        for i in rng:
            qa = q.entry(a, i)
            for j in rng:
                qb = qa * q.entry(b, j)
                for k in rng:
                    qc = qb * q.entry(c, k)
                    for l in rng:
                        acc = acc + qc * q.entry(e, l) * full[tuple(sorted((i, j, k, l)))]
        transformed[slot] = acc
    out = Harmonic4(tuple(transformed[s] for s in tc.INDEPENDENT_SLOTS))
    if __debug__:
        for slot, value in out._full.items():
            assert transformed[slot] == value or abs(transformed[slot] - value) <= 1e-10, \
                f"rotated tensor lost tracelessness at {slot}"
    return out


def _quaternion_matrix(w, x, y, z):
    return (
        (1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)),
        (2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)),
        (2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)),
    )


def random_rotation(seed: int) -> Orthogonal3:
    """Haar-distributed orthogonal matrix, deterministic per seed.

    A uniform unit quaternion gives a Haar rotation in SO(3); composing
    with the reflection diag(1,1,-1) on a fair coin flip extends the
    distribution to all of O(3).
    """
    rng = np.random.default_rng(seed)
    quat = rng.standard_normal(4)
    quat /= np.linalg.norm(quat)
    rows = _quaternion_matrix(*(float(v) for v in quat))
    if rng.random() < 0.5:
        rows = tuple((r[0], r[1], -r[2]) for r in rows)
    return Orthogonal3(rows)


@dataclass(frozen=True)
class IsotropyReport:
    """Worst-case relative invariant drift over a batch of random rotations."""

    trials: int
    tol: float
    deviations: dict
    worst_seed: int
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "tol": self.tol,
            "deviations": {k: self.deviations[k] for k in INVARIANT_NAMES},
            "worst_seed": self.worst_seed,
            "passed": self.passed,
        }


def trial_seeds(seed: int, trials: int) -> list:
    """Per-trial integer seeds derived from one master seed.

    Deterministic and independent of execution order, so trial results do
    not depend on scheduling.
    """
    words = np.random.SeedSequence(seed).generate_state(trials, dtype=np.uint64)
    return [int(w) for w in words]


def isotropy_suite(num_tensors: int = 20, trials: int = 1000, seed: int = 42,
                   tol_low: float = 1e-8, tol_high: float = 1e-7) -> tuple:
    """Sweep seeded random unit-norm tensors through :func:`isotropy_check`.

    Each invariant must drift at most ``tol_low`` (degrees up to 6) or
    ``tol_high`` (degrees 7-10) relative.  Returns (passed, reports).
    """
    reports = []
    passed = True
    for tensor_seed in trial_seeds(seed, num_tensors):
        d = tc.random_harmonic(tensor_seed, backend=FLOAT)
        norm = float(d.frobenius_norm_sq()) ** 0.5
        report = isotropy_check(d.scale(1.0 / norm), trials, tensor_seed, tol=tol_high)
        ok = all(
            dev <= (tol_low if INVARIANT_DEGREES[name] <= 6 else tol_high)
            for name, dev in report.deviations.items()
        )
        passed = passed and ok
        reports.append(report)
    return passed, reports


def isotropy_check(d: Harmonic4, trials: int, seed: int, tol: float = 1e-7) -> IsotropyReport:
    """Compare invariants(rotate(d, Q)) against invariants(d) over random Q.

    The relative deviation of invariant f of degree k is
    |f(QD) - f(D)| / max(|f(D)|, ||D||_F^k): identically-zero invariants
    are measured against the tensor's natural degree-k scale.  Failure is
    data in the report, never an exception.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    base = invariants(d)
    norm = float(base.j2) ** 0.5 if float(base.j2) > 0 else 0.0
    scales = {name: max(abs(float(base[name])), norm ** INVARIANT_DEGREES[name])
              for name in INVARIANT_NAMES}
    worst = dict.fromkeys(INVARIANT_NAMES, 0.0)
    worst_seed = -1
    worst_dev = -1.0
    for s in trial_seeds(seed, trials):
        rotated = invariants(rotate(d, random_rotation(s)))
        for name in INVARIANT_NAMES:
            delta = abs(float(rotated[name]) - float(base[name]))
            dev = 0.0 if delta == 0.0 else delta / scales[name]
            if dev > worst[name]:
                worst[name] = dev
            if dev > worst_dev:
                worst_dev = dev
                worst_seed = s
    return IsotropyReport(
        trials=trials,
        tol=tol,
        deviations=worst,
        worst_seed=worst_seed,
        passed=all(v <= tol for v in worst.values()),
    )
