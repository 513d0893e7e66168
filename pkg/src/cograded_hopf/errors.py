"""Exception hierarchy.

Every failure carries a ``witness`` dict locating the offending data
(group elements ``p``, ``q``, ``r`` and basis indices), so a report or CLI
user can find the bad structure constant.
"""

from __future__ import annotations


class HopfError(Exception):
    """Base class for every structural failure raised by the package."""

    def __init__(self, message: str = "", **witness):
        self.witness = dict(witness)
        if witness:
            loc = ", ".join(f"{k}={v}" for k, v in witness.items())
            message = f"{message} ({loc})" if message else loc
        super().__init__(message)

    @property
    def kind(self) -> str:
        return type(self).__name__


# group
class GroupError(HopfError):
    pass


class NotAssociative(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class ActionNotAutomorphism(GroupError):
    pass


class ActionNotHomomorphism(GroupError):
    pass


# component algebras and the cograded system
class AlgebraError(HopfError):
    pass


class NotAlgebraAssociative(AlgebraError, NotAssociative):
    """Structure constants of a component algebra are not associative."""


class NotUnital(AlgebraError):
    pass


class ShapeError(HopfError):
    pass


class NotCoassociative(HopfError):
    pass


class NotHomomorphism(HopfError):
    pass


class CounitFails(HopfError):
    pass


class NoCounit(HopfError):
    pass


class CounitNotUnique(HopfError):
    pass


class AntipodeFails(HopfError):
    pass


class NoAntipode(HopfError):
    pass


class AntipodeNotUnique(HopfError):
    pass


class EmbeddingFails(HopfError):
    pass


# integrals
class NoCointegral(HopfError):
    pass


class CointegralNotUnique(HopfError):
    pass


class NoIntegral(HopfError):
    pass


class DeltaInconsistent(HopfError):
    pass


class DeltaNotGrouplike(HopfError):
    pass


class DeltaNotInvertible(HopfError):
    pass


class NoWitness(HopfError):
    pass


class NotFaithful(HopfError):
    pass


class NuInconsistent(HopfError):
    pass


# example builders
class ActionInvalid(HopfError):
    pass


class MuInconsistent(HopfError):
    pass


class ModularFails(HopfError):
    """A modular automorphism failed its defining identity or is not an automorphism."""
