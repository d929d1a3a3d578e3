"""Exhaustive verification of two residue-ring facts behind the no-descent result.

Both checks live in Z[w]/(3^k) and reduce, after precomputing exhaustive
image sets, to set algebra over dense bitsets:

  * cube-closure: every product of a cube with a value of the descent form
    (over rational-integer residues x, y) is again such a value;
  * no-solution: the descent form never equals 3(z^3 + 2), for any
    rational-integer residues x, y and any ring element z.

The no-solution check holds at k = 4 (modulus 81) and at no smaller k, which
is why 81 is the modulus that settles the cover t^3 = 3(z^3 + 2); the
minimal-modulus scan reproduces that threshold.  Reports are deterministic:
counterexample lists are sorted, capped at a fixed size, and independent of
the worker count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .reports import fingerprint, make_document
from .residues import ResidueRing, cube_values, descent_form_image, rhs_values

__all__ = [
    "MAX_VERIFY_K",
    "VerificationReport",
    "minimal_modulus",
    "verify_cube_closure",
    "verify_no_solution",
]

MAX_VERIFY_K = 8  # 9^8 ~ 43M ring elements is the desk-scale ceiling
COUNTEREXAMPLE_CAP = 100


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive check over Z[w]/(3^k).

    holds is true exactly when no counterexample exists; the list carries at
    most COUNTEREXAMPLE_CAP assignments (sorted), with the full count kept
    separately.
    """

    lemma: str  # "cube-closure" | "no-solution"
    k: int
    holds: bool
    counterexamples: tuple[dict, ...]
    counterexample_count: int
    set_sizes: dict[str, int]
    elapsed_s: float

    @property
    def params(self) -> dict:
        return {"lemma": self.lemma, "k": self.k}

    @property
    def input_fingerprint(self) -> str:
        return fingerprint(self.params)

    def to_document(self) -> dict:
        report = {
            "lemma": self.lemma,
            "k": self.k,
            "holds": self.holds,
            "counterexample_count": self.counterexample_count,
            "counterexamples": list(self.counterexamples),
            "set_sizes": dict(sorted(self.set_sizes.items())),
        }
        return make_document(report, self.params, self.elapsed_s)


def _check_k(k: int) -> None:
    if not 1 <= k <= MAX_VERIFY_K:
        raise ValueError(f"k must be in 1..{MAX_VERIFY_K}, got {k}")


def verify_cube_closure(k: int, jobs: int = 1) -> VerificationReport:
    """Check that the form image mod 3^k is closed under multiplication by cubes.

    For every cube value u and every form value s, u*s must land back in the
    form image.  Counterexamples list the lex-first cube root c of u and the
    lex-first (x, y) producing s.
    """
    _check_k(k)
    start = time.perf_counter()
    ring = ResidueRing(k)
    m = ring.modulus
    cubes = cube_values(ring, jobs)
    image = descent_form_image(ring, jobs)

    sa = image.values // m
    sb = image.values % m
    failures = []
    for u, zp in zip(cubes.values.tolist(), cubes.producers.tolist()):
        ua, ub = divmod(u, m)
        wa = (ua * sa - ub * sb) % m
        wb = (ua * sb + ub * sa - ub * sb) % m
        bad = ~image.bitset[wa * m + wb]
        if bad.any():
            ca, cb = divmod(zp, m)
            for p in image.producers[bad].tolist():
                failures.append((ca, cb, p // m, p % m))
    failures.sort()
    counterexamples = tuple(
        {"c": [ca, cb], "x": x, "y": y}
        for ca, cb, x, y in failures[:COUNTEREXAMPLE_CAP]
    )
    sizes = {"cubes": len(cubes), "form_image": len(image), "ring": ring.size}
    return VerificationReport(
        lemma="cube-closure",
        k=k,
        holds=not failures,
        counterexamples=counterexamples,
        counterexample_count=len(failures),
        set_sizes=sizes,
        elapsed_s=time.perf_counter() - start,
    )


def verify_no_solution(k: int, jobs: int = 1) -> VerificationReport:
    """Check that the form image and {3(z^3 + 2)} are disjoint mod 3^k.

    Counterexamples list, per common value, the lex-first (x, y) producing
    it as a form value and the lex-first z producing it on the right-hand
    side.  Holds at k = 4 and fails for every smaller k.
    """
    _check_k(k)
    start = time.perf_counter()
    ring = ResidueRing(k)
    m = ring.modulus
    image = descent_form_image(ring, jobs)
    rhs = rhs_values(ring, jobs)

    common = np.nonzero(image.bitset & rhs.bitset)[0]
    failures = []
    for v in common.tolist():
        p = image.producer_of(v)
        zp = rhs.producer_of(v)
        failures.append((p // m, p % m, zp // m, zp % m))
    failures.sort()
    counterexamples = tuple(
        {"x": x, "y": y, "z": [za, zb]}
        for x, y, za, zb in failures[:COUNTEREXAMPLE_CAP]
    )
    sizes = {"form_image": len(image), "rhs": len(rhs), "ring": ring.size}
    return VerificationReport(
        lemma="no-solution",
        k=k,
        holds=common.size == 0,
        counterexamples=counterexamples,
        counterexample_count=int(common.size),
        set_sizes=sizes,
        elapsed_s=time.perf_counter() - start,
    )


def minimal_modulus(max_k: int, jobs: int = 1) -> int | None:
    """Smallest k <= max_k for which the no-solution check holds, if any."""
    _check_k(max_k)
    for k in range(1, max_k + 1):
        if verify_no_solution(k, jobs).holds:
            return k
    return None
