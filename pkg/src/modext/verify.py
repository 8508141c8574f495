"""Replay certificates against a matroid and report every broken claim.

Verification never raises on a bad certificate: each failed claim becomes
a (path, reason) entry, where the path addresses the certificate node
("$", "$/e1/child", ...).  A certificate is accepted only if every node
checks out against the matroid's own lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import IntPolynomial, poly_mul
from .certificates import (
    ChainCertificate,
    EmptyCertificate,
    FlagCertificate,
    ModularCoatomCertificate,
    ModularJoinCertificate,
)
from .errors import InvalidInput
from .lattice import FlatLattice, enumerate_flats
from .matroid import Matroid, atom_tuple
from .modularity import round_in_context, violating_flat_in_context


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failures: tuple

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "failures": [{"path": p, "reason": r} for p, r in self.failures],
        }


def verify_certificate(m: Matroid, cert, lattice: FlatLattice | None = None
                       ) -> VerificationReport:
    """Check every claim of a certificate tree against the matroid."""
    lat = lattice if lattice is not None else enumerate_flats(m)
    failures = []
    _verify(lat, cert, lat.top, "$", failures)
    return VerificationReport(not failures, tuple(failures))


def _fail(failures, path, reason):
    failures.append((path, reason))


def _flat_str(flat: int) -> str:
    return "{" + ",".join(str(a) for a in atom_tuple(flat)) + "}"


def _check_flat(lat, flat, path, failures, what) -> bool:
    if flat in lat:
        return True
    _fail(failures, path, f"{what} {_flat_str(flat)} is not a flat")
    return False


def _check_modular_in(lat, flat, ctx, path, failures, what) -> bool:
    bad = violating_flat_in_context(lat, flat, ctx)
    if bad is None:
        return True
    _fail(failures, path,
          f"{what} {_flat_str(flat)} is not modular within {_flat_str(ctx)}: "
          f"rank equation fails against {_flat_str(bad)}")
    return False


def _verify(lat: FlatLattice, cert, ctx: int, path: str, failures: list):
    if isinstance(cert, EmptyCertificate):
        if ctx != lat.bottom:
            _fail(failures, path,
                  f"empty certificate applied to nonempty flat {_flat_str(ctx)}")
        return
    if isinstance(cert, ModularCoatomCertificate):
        z = cert.coatom
        if not _check_flat(lat, z, path, failures, "coatom"):
            return
        if z not in lat.children.get(ctx, ()):
            _fail(failures, path,
                  f"{_flat_str(z)} is not covered by {_flat_str(ctx)}")
            return
        _check_modular_in(lat, z, ctx, path, failures, "coatom")
        _verify(lat, cert.child, z, path + "/child", failures)
        return
    if isinstance(cert, ModularJoinCertificate):
        e1, e2, x = cert.e1, cert.e2, cert.x
        ok = _check_flat(lat, e1, path, failures, "e1")
        ok = _check_flat(lat, e2, path, failures, "e2") and ok
        if not ok:
            return
        if e1 | e2 != ctx:
            _fail(failures, path,
                  f"{_flat_str(e1)} and {_flat_str(e2)} do not cover "
                  f"{_flat_str(ctx)}")
            return
        if e1 == ctx or e2 == ctx:
            _fail(failures, path, "join sides must be proper flats")
            return
        if x != e1 & e2:
            _fail(failures, path,
                  f"x {_flat_str(x)} is not the intersection of the sides")
        _check_modular_in(lat, e1, ctx, path, failures, "e1")
        _check_modular_in(lat, e2, ctx, path, failures, "e2")
        is_round, pair = round_in_context(lat, e1 & e2)
        if not is_round:
            c1, c2 = pair
            _fail(failures, path,
                  f"x {_flat_str(e1 & e2)} is not round: it is the union of "
                  f"{_flat_str(c1)} and {_flat_str(c2)}")
        _verify(lat, cert.child1, e1, path + "/e1", failures)
        _verify(lat, cert.child2, e2, path + "/e2", failures)
        return
    if isinstance(cert, ChainCertificate):
        flats = cert.flats
        if not flats or flats[0] != lat.bottom or flats[-1] != ctx:
            _fail(failures, path,
                  f"chain must run from the empty flat to {_flat_str(ctx)}")
            return
        for i, f in enumerate(flats):
            if not _check_flat(lat, f, path, failures, f"chain[{i}]"):
                return
        for i in range(len(flats) - 1):
            lo, hi = flats[i], flats[i + 1]
            if lo & ~hi or lat.rank_of[hi] != lat.rank_of[lo] + 1:
                _fail(failures, path,
                      f"chain step {_flat_str(lo)} -> {_flat_str(hi)} "
                      f"is not a cover")
        for i, f in enumerate(flats):
            _check_modular_in(lat, f, ctx, path, failures, f"chain[{i}]")
        return
    if isinstance(cert, FlagCertificate):
        _verify_flag(lat, cert.flag, ctx, path, failures)
        return
    raise InvalidInput(f"unknown certificate node {cert!r}")


def _verify_flag(lat: FlatLattice, flag, ctx: int, path: str, failures: list):
    flats, roots = flag.flats, flag.quotient_roots
    if not flats or flats[0] != lat.bottom or flats[-1] != ctx:
        _fail(failures, path,
              f"flag must run from the empty flat to {_flat_str(ctx)}")
        return
    if len(roots) != len(flats) - 1:
        _fail(failures, path, "flag needs one quotient root per step")
        return
    for i, f in enumerate(flats):
        if not _check_flat(lat, f, path, failures, f"flag[{i}]"):
            return
    for i in range(len(flats) - 1):
        lo, hi = flats[i], flats[i + 1]
        if lo & ~hi or lat.rank_of[hi] != lat.rank_of[lo] + 1:
            _fail(failures, path,
                  f"flag step {_flat_str(lo)} -> {_flat_str(hi)} is not a cover")
            return
    for i in range(len(flats) - 1):
        upper_lo = lat.interval_charpoly(flats[i], ctx)
        upper_hi = lat.interval_charpoly(flats[i + 1], ctx)
        quotient = IntPolynomial((-roots[i], 1))
        if poly_mul(upper_hi, quotient) != upper_lo:
            _fail(failures, path,
                  f"flag step {i}: chi above {_flat_str(flats[i])} is not "
                  f"(t - {roots[i]}) times chi above {_flat_str(flats[i + 1])}")
