"""Certificate data structures and their JSON forms.

Certificates are finite trees whose nodes cite the flats that witness a
structural claim about a matroid.  They are pure data; replaying them
against a matroid lives in `verify`.  Flats serialize as sorted atom-index
arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .matroid import atom_tuple, mask_of


@dataclass(frozen=True)
class DivisionalFlag:
    """A full flag of flats whose upward contraction charpolys divide in turn.

    `flats` runs from the empty flat to the full ground set, one rank at a
    time.  `quotient_roots` holds the integer a_i of each linear step
    quotient chi(M/X_i)/chi(M/X_{i+1}) = t - a_i, so multiplying the
    quotients back telescopes to chi(M).
    """

    flats: tuple
    quotient_roots: tuple

    def quotients(self):
        from .algebra import IntPolynomial

        return tuple(IntPolynomial((-a, 1)) for a in self.quotient_roots)

    def to_json(self) -> dict:
        return {
            "kind": "divisional-flag",
            "flats": [list(atom_tuple(f)) for f in self.flats],
            "quotient_roots": list(self.quotient_roots),
        }


@dataclass(frozen=True)
class EmptyCertificate:
    """The empty matroid is modularly extended by definition."""

    def to_json(self) -> dict:
        return {"kind": "empty"}


@dataclass(frozen=True)
class ModularCoatomCertificate:
    """Membership via a modular coatom whose restriction is itself certified."""

    coatom: int
    child: "Certificate"

    def to_json(self) -> dict:
        return {
            "kind": "modular-coatom",
            "coatom": list(atom_tuple(self.coatom)),
            "child": self.child.to_json(),
        }


@dataclass(frozen=True)
class ModularJoinCertificate:
    """Membership via a modular join of two certified proper flats.

    `e1` and `e2` are proper modular flats covering the ground set, `x`
    their (round) intersection.
    """

    e1: int
    e2: int
    x: int
    child1: "Certificate"
    child2: "Certificate"

    def to_json(self) -> dict:
        return {
            "kind": "modular-join",
            "e1": list(atom_tuple(self.e1)),
            "e2": list(atom_tuple(self.e2)),
            "x": list(atom_tuple(self.x)),
            "child1": self.child1.to_json(),
            "child2": self.child2.to_json(),
        }


@dataclass(frozen=True)
class FlagCertificate:
    """Wrapper presenting a divisional flag as a certificate."""

    flag: DivisionalFlag

    def to_json(self) -> dict:
        return self.flag.to_json()


@dataclass(frozen=True)
class ChainCertificate:
    """A saturated chain of modular flats from the empty flat to the top."""

    flats: tuple

    def to_json(self) -> dict:
        return {
            "kind": "supersolvable-chain",
            "flats": [list(atom_tuple(f)) for f in self.flats],
        }


Certificate = (
    EmptyCertificate
    | ModularCoatomCertificate
    | ModularJoinCertificate
    | FlagCertificate
    | ChainCertificate
)


def certificate_from_json(data) -> Certificate:
    """Rebuild a certificate tree from its JSON form."""
    if not isinstance(data, dict) or "kind" not in data:
        raise InvalidInput(f"bad certificate JSON: {data!r}")
    kind = data["kind"]
    try:
        if kind == "empty":
            return EmptyCertificate()
        if kind == "modular-coatom":
            return ModularCoatomCertificate(
                mask_of(data["coatom"]), certificate_from_json(data["child"]))
        if kind == "modular-join":
            return ModularJoinCertificate(
                mask_of(data["e1"]),
                mask_of(data["e2"]),
                mask_of(data["x"]),
                certificate_from_json(data["child1"]),
                certificate_from_json(data["child2"]),
            )
        if kind == "divisional-flag":
            return FlagCertificate(DivisionalFlag(
                tuple(mask_of(f) for f in data["flats"]),
                tuple(int(a) for a in data["quotient_roots"]),
            ))
        if kind == "supersolvable-chain":
            return ChainCertificate(tuple(mask_of(f) for f in data["flats"]))
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"bad {kind!r} certificate: {data!r}") from exc
    raise InvalidInput(f"unknown certificate kind {kind!r}")
